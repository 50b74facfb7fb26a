//! The inclusion order on a full `Clan_{p,q}`, precomputed as bitsets.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::clan::{Clan, ClanError, ClanStatistics};

/// All `(p, q)`-clans with `down[i]` holding every `j` such that `clans[j] ≤ clans[i]`.
#[derive(Debug, Clone)]
pub struct InclusionPoset {
    p: usize,
    q: usize,
    clans: Vec<Clan>,
    index: HashMap<Clan, usize>,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
}

impl InclusionPoset {
    pub fn new(p: usize, q: usize) -> Result<Self, ClanError> {
        let clans = Clan::enumerate(p, q)?;
        let stats: Vec<ClanStatistics> = clans.par_iter().map(Clan::statistics).collect();
        let size = clans.len();
        let down = (0..size)
            .into_par_iter()
            .map(|i| {
                let mut set = FixedBitSet::with_capacity(size);
                for j in 0..size {
                    if stats[j].leq(&stats[i]) {
                        set.insert(j);
                    }
                }
                set
            })
            .collect::<Vec<FixedBitSet>>();
        let mut up = vec![FixedBitSet::with_capacity(size); size];
        for (i, set) in down.iter().enumerate() {
            for j in set.ones() {
                up[j].insert(i);
            }
        }
        let index = clans
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        Ok(Self {
            p,
            q,
            clans,
            index,
            down,
            up,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.clans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clans.is_empty()
    }

    pub fn clans(&self) -> &[Clan] {
        &self.clans
    }

    pub fn clan(&self, i: usize) -> &Clan {
        &self.clans[i]
    }

    pub fn index_of(&self, clan: &Clan) -> Option<usize> {
        self.index.get(clan).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down[j].contains(i)
    }

    /// Indices of clans below `clans[i]`, including `i`.
    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    /// Indices of clans above `clans[i]`, including `i`.
    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    /// Maximal elements of `subset`: those with nothing in `subset` strictly above.
    pub fn maximal(&self, subset: &FixedBitSet) -> Vec<usize> {
        subset
            .ones()
            .filter(|&i| self.up[i].intersection_count(subset) == 1)
            .collect()
    }

    /// Reflexivity, antisymmetry and transitivity; returns the first violation.
    pub fn partial_order_violation(&self) -> Option<String> {
        let size = self.len();
        for i in 0..size {
            if !self.leq(i, i) {
                return Some(format!("{} is not below itself", self.clans[i]));
            }
            for j in self.down[i].ones() {
                if j != i && self.leq(i, j) {
                    return Some(format!(
                        "{} and {} are mutually below each other",
                        self.clans[i], self.clans[j]
                    ));
                }
                // down[j] ⊆ down[i] whenever j ≤ i.
                if !self.down[j].is_subset(&self.down[i]) {
                    let k = self.down[j].difference(&self.down[i]).next().unwrap();
                    return Some(format!(
                        "{} <= {} <= {} but not {} <= {}",
                        self.clans[k], self.clans[j], self.clans[i], self.clans[k], self.clans[i]
                    ));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_pairwise_comparison() {
        let poset = InclusionPoset::new(3, 2).unwrap();
        for (i, a) in poset.clans().iter().enumerate() {
            for (j, b) in poset.clans().iter().enumerate() {
                assert_eq!(poset.leq(i, j), a.inclusion_leq(b).unwrap());
            }
        }
    }

    #[test]
    fn single_maximum() {
        for (p, q) in [(1, 1), (2, 2), (4, 2)] {
            let poset = InclusionPoset::new(p, q).unwrap();
            let mut all = FixedBitSet::with_capacity(poset.len());
            all.insert_range(..);
            let top = poset.maximal(&all);
            assert_eq!(top.len(), 1);
            assert_eq!(poset.clan(top[0]), &Clan::gamma0(p, q).unwrap());
        }
    }

    #[test]
    fn partial_order() {
        for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            assert_eq!(InclusionPoset::new(p, q).unwrap().partial_order_violation(), None);
        }
    }

    #[test]
    fn one_one_maximal_sign_clans() {
        let poset = InclusionPoset::new(1, 1).unwrap();
        let mut signs = FixedBitSet::with_capacity(3);
        signs.insert(0);
        signs.insert(1);
        assert_eq!(poset.maximal(&signs), vec![0, 1]);
    }
}
