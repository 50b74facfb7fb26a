//! The weak order on clans.
//!
//! Covers are local moves on the charged matching at adjacent positions
//! `(i, i + 1)`, each labelled by the simple reflection `s_i`. W-sets collect
//! the products of labels along upward paths to the dense clan.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::{self, Write as _};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::clan::{check_shape, Clan, ClanError, Symbol};
use crate::perm::{factorization_pairs, length_lex_key, phi, weak_covers, Permutation, WeakOrderMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveType {
    IA1,
    IA2,
    IB,
    IC1,
    IC2,
    II,
}

impl fmt::Display for MoveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Vertex {
    Charged(Symbol),
    Left(usize),
    Right(usize),
}

fn vertex(clan: &Clan, mates: &[Option<usize>], a: usize) -> Vertex {
    match mates[a] {
        Some(m) if m > a => Vertex::Left(m),
        Some(m) => Vertex::Right(m),
        None => Vertex::Charged(clan.symbol(a)),
    }
}

/// The move at positions `(i, i + 1)`, if any, and the resulting clan.
pub fn apply_move(clan: &Clan, i: usize) -> Option<(MoveType, Clan)> {
    let n = clan.n();
    if i == 0 || i >= n {
        return None;
    }
    let (a, b) = (i, i + 1);
    let mates = clan.mates();
    let mut arcs: Vec<(usize, usize)> = clan.arcs();
    let mut symbols = clan.symbols().to_vec();
    let replace_arc = |arcs: &mut Vec<(usize, usize)>, old: (usize, usize), new: (usize, usize)| {
        let k = arcs.iter().position(|&x| x == old).unwrap();
        arcs[k] = new;
    };
    let kind = match (vertex(clan, &mates, a), vertex(clan, &mates, b)) {
        (Vertex::Charged(x), Vertex::Charged(y)) if x != y => {
            arcs.push((a, b));
            MoveType::II
        }
        (Vertex::Right(x), Vertex::Charged(c)) => {
            replace_arc(&mut arcs, (x, a), (x, b));
            symbols[a - 1] = c;
            MoveType::IA1
        }
        (Vertex::Charged(c), Vertex::Left(y)) => {
            replace_arc(&mut arcs, (b, y), (a, y));
            symbols[b - 1] = c;
            MoveType::IA2
        }
        (Vertex::Right(x), Vertex::Left(y)) => {
            replace_arc(&mut arcs, (x, a), (x, b));
            replace_arc(&mut arcs, (b, y), (a, y));
            MoveType::IB
        }
        (Vertex::Left(x), Vertex::Left(y)) if x < y => {
            replace_arc(&mut arcs, (a, x), (a, y));
            replace_arc(&mut arcs, (b, y), (b, x));
            MoveType::IC1
        }
        (Vertex::Right(x), Vertex::Right(y)) if x < y => {
            replace_arc(&mut arcs, (x, a), (x, b));
            replace_arc(&mut arcs, (y, b), (y, a));
            MoveType::IC2
        }
        _ => return None,
    };
    for (k, &(s, t)) in arcs.iter().enumerate() {
        symbols[s - 1] = Symbol::Pair(k as u32 + 1);
        symbols[t - 1] = Symbol::Pair(k as u32 + 1);
    }
    let target = Clan::new(clan.p(), clan.q(), symbols).expect("moves preserve clan shape");
    Some((kind, target))
}

/// A weak-order cover, merged over all labels that produce the same target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledCover {
    pub source: Clan,
    pub target: Clan,
    /// Simple-reflection index mapped to the move that realizes it.
    pub moves: BTreeMap<usize, MoveType>,
}

impl LabeledCover {
    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.moves.keys().copied()
    }

    pub fn label_text(&self) -> String {
        self.moves.keys().map(|i| format!("s{i}")).join(",")
    }
}

/// Upward covers of `clan`, one per distinct target, sorted by target.
pub fn covers_from(clan: &Clan) -> Vec<LabeledCover> {
    let mut by_target: BTreeMap<Clan, BTreeMap<usize, MoveType>> = BTreeMap::new();
    for i in 1..clan.n() {
        if let Some((kind, target)) = apply_move(clan, i) {
            by_target.entry(target).or_default().insert(i, kind);
        }
    }
    by_target
        .into_iter()
        .map(|(target, moves)| LabeledCover {
            source: clan.clone(),
            target,
            moves,
        })
        .collect()
}

/// The labelled cover digraph on a set of clans closed under upward moves.
#[derive(Debug, Clone, Serialize)]
pub struct WeakOrderGraph {
    pub p: usize,
    pub q: usize,
    pub nodes: Vec<Clan>,
    pub covers: Vec<LabeledCover>,
    #[serde(skip)]
    index: HashMap<Clan, usize>,
    #[serde(skip)]
    out: Vec<Vec<usize>>,
}

impl WeakOrderGraph {
    /// All of `Clan_{p,q}`, or only the interval `[γ_e, γ₀]`.
    pub fn build(p: usize, q: usize, interval_only: bool) -> Result<Self, ClanError> {
        let nodes = if interval_only {
            Clan::interval_clans(p, q)?
        } else {
            Clan::enumerate(p, q)?
        };
        let index: HashMap<Clan, usize> =
            nodes.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let per_node: Vec<Vec<LabeledCover>> = nodes
            .par_iter()
            .map(|c| {
                covers_from(c)
                    .into_iter()
                    .filter(|e| index.contains_key(&e.target))
                    .collect()
            })
            .collect();
        let mut covers = Vec::new();
        let mut out = vec![Vec::new(); nodes.len()];
        for (i, list) in per_node.into_iter().enumerate() {
            for e in list {
                out[i].push(covers.len());
                covers.push(e);
            }
        }
        Ok(Self {
            p,
            q,
            nodes,
            covers,
            index,
            out,
        })
    }

    pub fn index_of(&self, clan: &Clan) -> Option<usize> {
        self.index.get(clan).copied()
    }

    pub fn covers_of(&self, i: usize) -> impl Iterator<Item = &LabeledCover> {
        self.out[i].iter().map(|&e| &self.covers[e])
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.out[i].is_empty()).collect()
    }

    /// Kahn's algorithm; `None` if there is a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let size = self.nodes.len();
        let mut indegree = vec![0usize; size];
        for e in &self.covers {
            indegree[self.index[&e.target]] += 1;
        }
        let mut queue: VecDeque<usize> = (0..size).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(size);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for e in self.covers_of(i) {
                let t = self.index[&e.target];
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    queue.push_back(t);
                }
            }
        }
        (order.len() == size).then_some(order)
    }

    /// Nodes reachable from `i` by upward paths, including `i`.
    pub fn reachable_from(&self, i: usize) -> HashSet<usize> {
        let mut seen = HashSet::from([i]);
        let mut stack = vec![i];
        while let Some(x) = stack.pop() {
            for e in self.covers_of(x) {
                let t = self.index[&e.target];
                if seen.insert(t) {
                    stack.push(t);
                }
            }
        }
        seen
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph weak_order {\n");
        for c in &self.nodes {
            let _ = writeln!(s, "  \"{c}\";");
        }
        for e in &self.covers {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                e.source,
                e.target,
                e.label_text()
            );
        }
        s.push_str("}\n");
        s
    }

    /// W-sets of every node, computed in reverse topological order.
    pub fn w_sets(&self) -> Vec<BTreeSet<Permutation>> {
        let n = self.p + self.q;
        let order = self.topological_order().expect("weak order graph is acyclic");
        let mut sets: Vec<BTreeSet<Permutation>> = vec![BTreeSet::new(); self.nodes.len()];
        for &i in order.iter().rev() {
            if self.out[i].is_empty() {
                sets[i].insert(Permutation::identity(n));
                continue;
            }
            let mut acc = BTreeSet::new();
            for e in self.covers_of(i) {
                let t = self.index[&e.target];
                for label in e.labels() {
                    acc.extend(sets[t].iter().map(|x| x.left_mul_simple(label)));
                }
            }
            sets[i] = acc;
        }
        sets
    }
}

/// Memoized W-set computation over clans of one shape, exploring covers on demand.
#[derive(Debug, Default)]
pub struct WSetMemo {
    memo: HashMap<Clan, BTreeSet<Permutation>>,
}

impl WSetMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, clan: &Clan) -> &BTreeSet<Permutation> {
        if !self.memo.contains_key(clan) {
            let covers = covers_from(clan);
            let set = if covers.is_empty() {
                BTreeSet::from([Permutation::identity(clan.n())])
            } else {
                let mut acc = BTreeSet::new();
                for e in &covers {
                    let above = self.get(&e.target).clone();
                    for label in e.labels() {
                        acc.extend(above.iter().map(|x| x.left_mul_simple(label)));
                    }
                }
                acc
            };
            self.memo.insert(clan.clone(), set);
        }
        &self.memo[clan]
    }
}

pub fn w_set(clan: &Clan) -> BTreeSet<Permutation> {
    WSetMemo::new().get(clan).clone()
}

/// `{u·φ(v) : (u, v) ∈ S(w y₀)}` in `S_{p+q}`.
pub fn w_set_via_bijection(w: &Permutation, p: usize) -> Result<BTreeSet<Permutation>, ClanError> {
    let q = w.degree();
    check_shape(p, q)?;
    let n = p + q;
    let wy0 = w.compose(&Permutation::longest(q));
    Ok(factorization_pairs(&wy0)
        .into_iter()
        .map(|pair| {
            let u = pair.u.embed(n).expect("S_q embeds in S_n");
            u.compose(&phi(&pair.v, n).expect("S_q embeds in S_n"))
        })
        .collect())
}

/// Sorts by length, then one-line notation.
pub fn sorted_length_lex<'a>(set: impl IntoIterator<Item = &'a Permutation>) -> Vec<Permutation> {
    set.into_iter()
        .cloned()
        .sorted_by_key(length_lex_key)
        .collect()
}

/// Checks that `w ↦ γ_w` is an isomorphism from the two-sided weak order on
/// `S_q` onto the weak order on `[γ_e, γ₀]`, with left covers `s_i w` realized
/// by `IC1` moves labelled `s_i` and right covers `w s_i` by `IC2` moves
/// labelled `s_{i+p}`. Returns a description of the first failure.
pub fn interval_iso_violation(p: usize, q: usize) -> Result<Option<String>, ClanError> {
    check_shape(p, q)?;
    let graph = WeakOrderGraph::build(p, q, true)?;
    let perms: Vec<Permutation> = Permutation::all(q).collect();
    for w in &perms {
        let clan = Clan::gamma_w(w, p)?;
        let mut expected: BTreeMap<Clan, BTreeMap<usize, MoveType>> = BTreeMap::new();
        for i in 1..q {
            if !w.is_left_descent(i) {
                expected
                    .entry(Clan::gamma_w(&w.left_mul_simple(i), p)?)
                    .or_default()
                    .insert(i, MoveType::IC1);
            }
            if !w.is_right_descent(i) {
                expected
                    .entry(Clan::gamma_w(&w.right_mul_simple(i), p)?)
                    .or_default()
                    .insert(i + p, MoveType::IC2);
            }
        }
        let found: BTreeMap<Clan, BTreeMap<usize, MoveType>> = covers_from(&clan)
            .into_iter()
            .map(|e| (e.target, e.moves))
            .collect();
        if found != expected {
            return Ok(Some(format!(
                "covers of {clan} (w = {w}) are {found:?}, expected {expected:?}"
            )));
        }
    }
    for x in &perms {
        let ix = graph.index_of(&Clan::gamma_w(x, p)?).unwrap();
        let reach = graph.reachable_from(ix);
        for y in &perms {
            let iy = graph.index_of(&Clan::gamma_w(y, p)?).unwrap();
            let in_weak = crate::perm::weak_order_leq(x, y, WeakOrderMode::TwoSided);
            if in_weak != reach.contains(&iy) {
                return Ok(Some(format!(
                    "{x} <= {y} is {in_weak} in the two-sided weak order but not for the clans"
                )));
            }
        }
    }
    Ok(None)
}

pub fn interval_iso_check(p: usize, q: usize) -> Result<bool, ClanError> {
    Ok(interval_iso_violation(p, q)?.is_none())
}

/// Number of two-sided weak-order covers out of `w`, for cross-checks.
pub fn two_sided_cover_count(w: &Permutation) -> usize {
    weak_covers(w, WeakOrderMode::TwoSided).into_iter().unique().count()
}
