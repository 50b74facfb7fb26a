//! Explicit integer flags representing clans, and Hessenberg membership
//! decided by exact rank computations.
//!
//! The semisimple matrix is `x = diag(0, …, 0, 1, …, 1)` with `p` zeros.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clan::{Clan, Symbol};
use crate::hess::HessenbergVector;
use crate::linalg::rank;

/// Ordered basis `v_1, …, v_n` of `Z^n` adapted to a flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagBasis {
    pub n: usize,
    pub vectors: Vec<Vec<i64>>,
}

impl FlagBasis {
    pub fn rank(&self) -> usize {
        rank(&self.vectors)
    }

    /// The basis `g v_1, …, g v_n` for a square matrix `g`.
    pub fn transform(&self, g: &[Vec<i64>]) -> FlagBasis {
        let vectors = self
            .vectors
            .iter()
            .map(|v| {
                g.iter()
                    .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
                    .collect()
            })
            .collect();
        FlagBasis {
            n: self.n,
            vectors,
        }
    }
}

fn unit(n: usize, r: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[r - 1] = 1;
    v
}

/// The flag representative of `clan`.
///
/// Plus-side coordinates `1..=p` go to pluses and pair openings in order of
/// appearance; minus-side coordinates `p+1..=n` go to minuses and pair
/// closings in order of appearance.
pub fn flag_representative(clan: &Clan) -> FlagBasis {
    let (p, n) = (clan.p(), clan.n());
    let mates = clan.mates();
    let mut vectors = vec![Vec::new(); n];
    let (mut plus_seen, mut minus_seen) = (0, 0);
    let (mut opened, mut closed) = (0, 0);
    for i in 1..=n {
        match clan.symbol(i) {
            Symbol::Plus => {
                plus_seen += 1;
                vectors[i - 1] = unit(n, plus_seen + opened);
            }
            Symbol::Minus => {
                minus_seen += 1;
                vectors[i - 1] = unit(n, p + minus_seen + closed);
            }
            Symbol::Pair(k) => {
                let j = mates[i].expect("paired position");
                if j < i {
                    closed += 1;
                    continue;
                }
                opened += 1;
                let k = k as usize;
                let r = plus_seen;
                let s = (1..j)
                    .filter(|&t| clan.symbol(t) == Symbol::Minus)
                    .count();
                let u = (1..=j)
                    .filter(|&t| mates[t].is_some_and(|m| m < t))
                    .count();
                let (a, b) = (unit(n, k + r), unit(n, p + s + u));
                vectors[i - 1] = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                vectors[j - 1] = a.iter().zip(&b).map(|(x, y)| x - y).collect();
            }
        }
    }
    FlagBasis { n, vectors }
}

/// `x v`: zeroes the first `p` coordinates.
pub fn apply_x(p: usize, v: &[i64]) -> Vec<i64> {
    v.iter()
        .enumerate()
        .map(|(i, &a)| if i < p { 0 } else { a })
        .collect()
}

/// `x V_i ⊆ V_{m_i}` for every `i`, by exact rank tests.
pub fn basis_in_hess(basis: &FlagBasis, p: usize, m: &HessenbergVector) -> bool {
    (1..=basis.n).all(|i| {
        let mi = m.get(i);
        let mut rows: Vec<Vec<i64>> = basis.vectors[..mi].to_vec();
        rows.extend(basis.vectors[..i].iter().map(|v| apply_x(p, v)));
        rank(&rows) == mi
    })
}

pub fn geometric_membership(clan: &Clan, m: &HessenbergVector) -> bool {
    clan.n() == m.n() && basis_in_hess(&flag_representative(clan), clan.p(), m)
}

/// A pseudorandom unimodular block-diagonal integer matrix in `GL_p × GL_q`,
/// built from `steps` elementary row operations.
pub fn random_k_element(p: usize, q: usize, steps: usize, rng: &mut impl Rng) -> Vec<Vec<i64>> {
    let n = p + q;
    let mut g: Vec<Vec<i64>> = (1..=n).map(|r| unit(n, r)).collect();
    for _ in 0..steps {
        let block: Vec<usize> = if q < 2 || (p >= 2 && rng.gen_bool(0.5)) {
            (0..p).collect()
        } else {
            (p..n).collect()
        };
        if block.len() < 2 {
            if rng.gen_bool(0.5) {
                let r = block[0];
                g[r].iter_mut().for_each(|x| *x = -*x);
            }
            continue;
        }
        let pick: Vec<&usize> = block.choose_multiple(rng, 2).collect();
        let (a, b) = (*pick[0], *pick[1]);
        match rng.gen_range(0..3) {
            0 => g.swap(a, b),
            1 => g[a].iter_mut().for_each(|x| *x = -*x),
            _ => {
                let c = *[-2i64, -1, 1, 2].choose(rng).unwrap();
                let src = g[b].clone();
                g[a].iter_mut().zip(&src).for_each(|(x, y)| *x += c * y);
            }
        }
    }
    g
}

/// Membership of `g V(γ)` agrees with membership of `V(γ)` for `trials`
/// random `g ∈ K`.
pub fn k_invariance_spotcheck(clan: &Clan, m: &HessenbergVector, trials: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = flag_representative(clan);
    let expected = basis_in_hess(&basis, clan.p(), m);
    (0..trials).all(|_| {
        let g = random_k_element(clan.p(), clan.q(), 8, &mut rng);
        basis_in_hess(&basis.transform(&g), clan.p(), m) == expected
    })
}
