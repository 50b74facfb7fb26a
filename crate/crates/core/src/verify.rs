//! Verification suites. Each check scans its cases in a fixed order and
//! reports the first failing object.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::clan::{clan_count, Clan};
use crate::flag_oracle::{flag_representative, geometric_membership, k_invariance_spotcheck};
use crate::hess::{classify_with, hess_dimension, m_of_w, orbit_in_hess, HessScanner, HessenbergVector};
use crate::perm::{bruhat_leq, factorization_pairs, weak_order_leq, Permutation, ReducedWord, WeakOrderMode};
use crate::poly::IntPolynomial;
use crate::poset::InclusionPoset;
use crate::schubert::{
    brion_class, monk_product, product_oracle, MonkMode, SchubertExpansion, SchubertTable,
};
use crate::weak_order::{interval_iso_violation, w_set, w_set_via_bijection, WSetMemo, WeakOrderGraph};

/// Scan sizes. `max_n` bounds scans over every clan of a shape (the oracle
/// comparison runs one below it, clan counting two above); `max_q` bounds
/// scans over the `γ_w` family, which run for `q ≤ p ≤ q + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_n: usize,
    pub max_q: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_n: 7,
            max_q: 4,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub cases: usize,
    pub witness: Option<String>,
}

impl Check {
    fn new(criterion: u8, name: &str, cases: usize, witness: Option<String>) -> Self {
        Self {
            criterion,
            name: name.to_string(),
            cases,
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} [{}] {} ({} cases)", self.criterion, self.name, self.cases)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Oracle,
    WSets,
    Monk,
    Irreducible,
}

pub fn run_suite(suite: Suite, bounds: &Bounds) -> Vec<Check> {
    match suite {
        Suite::All => (1..=8).flat_map(|c| criterion(c, bounds)).collect(),
        Suite::Oracle => criterion(4, bounds),
        Suite::WSets => {
            let mut out: Vec<Check> = reference_checks()
                .into_iter()
                .filter(|c| c.name.starts_with("W-set"))
                .collect();
            out.extend(criterion(5, bounds));
            out.extend(criterion(6, bounds));
            out
        }
        Suite::Monk => {
            let mut out: Vec<Check> = reference_checks()
                .into_iter()
                .filter(|c| c.name.starts_with("Monk"))
                .collect();
            out.extend(criterion(7, bounds));
            out
        }
        Suite::Irreducible => {
            let mut out = criterion(2, bounds);
            out.extend(criterion(3, bounds));
            out
        }
    }
}

pub fn criterion(number: u8, bounds: &Bounds) -> Vec<Check> {
    match number {
        1 => reference_checks(),
        2 => classification_checks(bounds.max_n),
        3 => vec![dimension_check(bounds.max_q)],
        4 => oracle_checks(bounds.max_n.saturating_sub(1), bounds.seed),
        5 => vec![w_set_factorization_check(bounds.max_q)],
        6 => two_sided_checks(bounds.max_q),
        7 => monk_checks(bounds.max_q),
        8 => structural_checks(bounds.max_n),
        _ => Vec::new(),
    }
}

/// `(p, q)` with `p ≥ q ≥ 1` and `p + q ≤ max_n`.
pub fn shapes_up_to(max_n: usize) -> Vec<(usize, usize)> {
    (2..=max_n)
        .flat_map(|n| (1..=n / 2).rev().map(move |q| (n - q, q)))
        .collect()
}

/// `(p, q)` with `q ≤ max_q` and `q ≤ p ≤ q + 2`.
pub fn gamma_w_shapes(max_q: usize) -> Vec<(usize, usize)> {
    (1..=max_q)
        .flat_map(|q| (q..=q + 2).map(move |p| (p, q)))
        .collect()
}

fn word_perm(word: &str, n: usize) -> Permutation {
    let word: ReducedWord = word.parse().expect("well-formed word");
    Permutation::from_word(&word, n).expect("letters fit")
}

fn word_set(words: &[&str], n: usize) -> BTreeSet<Permutation> {
    words.iter().map(|w| word_perm(w, n)).collect()
}

fn compare_sets(found: &BTreeSet<Permutation>, expected: &BTreeSet<Permutation>) -> Option<String> {
    if found == expected {
        return None;
    }
    let missing: Vec<String> = expected.difference(found).map(|w| w.reduced_word().to_string()).collect();
    let extra: Vec<String> = found.difference(expected).map(|w| w.reduced_word().to_string()).collect();
    Some(format!("missing [{}], unexpected [{}]", missing.join(" "), extra.join(" ")))
}

/// Reference products `S_{s_m} · [γ_123]` at `(3, 3)`, as words in the simple
/// reflections.
pub const MONK_REFERENCE: [(usize, &[&str]); 5] = [
    (
        1,
        &[
            "s3*s1*s2*s1", "s1*s4*s5*s4", "s1*s2*s1*s5", "s4*s3*s2*s1",
            "s3*s2*s1*s4", "s2*s1*s5*s4", "s2*s1*s4*s5", "s1*s2*s4*s5",
        ],
    ),
    (
        2,
        &[
            "s3*s1*s2*s1", "s2*s3*s1*s2", "s2*s4*s5*s4", "s3*s1*s2*s5",
            "s4*s3*s2*s1", "s3*s2*s1*s4", "s1*s2*s1*s4", "s2*s1*s5*s4",
            "s1*s2*s5*s4", "s1*s2*s4*s5", "s4*s5*s3*s2", "s3*s2*s4*s5",
        ],
    ),
    (
        3,
        &[
            "s2*s1*s3*s2", "s1*s2*s1*s3", "s4*s5*s4*s3", "s4*s3*s5*s4",
            "s3*s4*s5*s4", "s3*s1*s2*s5", "s1*s2*s3*s5", "s4*s3*s2*s1",
            "s3*s4*s2*s1", "s4*s2*s1*s3", "s2*s1*s3*s4", "s5*s4*s1*s3",
            "s3*s1*s5*s4", "s3*s2*s4*s5", "s2*s4*s5*s3", "s2*s3*s4*s5",
        ],
    ),
    (
        4,
        &[
            "s4*s1*s2*s1", "s4*s5*s3*s4", "s3*s4*s5*s4", "s1*s2*s5*s4",
            "s1*s2*s4*s5", "s3*s2*s1*s4", "s2*s1*s3*s4", "s2*s1*s5*s4",
            "s3*s1*s5*s4", "s3*s2*s4*s5", "s2*s3*s4*s5", "s1*s4*s5*s4",
        ],
    ),
    (
        5,
        &[
            "s3*s4*s5*s4", "s5*s1*s2*s1", "s1*s2*s4*s5", "s2*s1*s5*s4",
            "s2*s1*s4*s5", "s1*s4*s5*s4", "s3*s2*s4*s5", "s2*s3*s4*s5",
        ],
    ),
];

/// Interval `[γ_123, γ_321]` at `(3, 3)`: source, target, labels.
pub const INTERVAL_REFERENCE: [(&str, &str, &str); 8] = [
    ("123123", "123213", "s1,s4"),
    ("123123", "123132", "s2,s5"),
    ("123213", "123231", "s5"),
    ("123132", "123312", "s4"),
    ("123213", "123312", "s2"),
    ("123132", "123231", "s1"),
    ("123231", "123321", "s2,s4"),
    ("123312", "123321", "s1,s5"),
];

/// Compares a Monk product with a list of words. Every word must be reduced
/// of the expected length and occur once.
pub fn monk_against_words(m: usize, class: &SchubertExpansion, words: &[&str], n: usize) -> Option<String> {
    let product = match monk_product(m, class, MonkMode::Cohomology(n)) {
        Ok(e) => e,
        Err(e) => return Some(e.to_string()),
    };
    if let Some((w, c)) = product.iter().find(|(_, c)| !c.is_one()) {
        return Some(format!("coefficient {c} on {w}"));
    }
    let listed: Vec<Permutation> = words.iter().map(|w| word_perm(w, n)).collect();
    for (word, w) in words.iter().zip(&listed) {
        let len = word.split('*').count();
        if w.length() != len {
            return Some(format!("{word} is not reduced"));
        }
    }
    let expected: BTreeSet<Permutation> = listed.iter().cloned().collect();
    if expected.len() != listed.len() {
        return Some("reference list repeats a term".into());
    }
    let found: BTreeSet<Permutation> = product.support().map(|w| w.embed(n).expect("in S_n")).collect();
    compare_sets(&found, &expected).map(|d| format!("{} terms vs {} listed; {d}", found.len(), expected.len()))
}

pub fn reference_checks() -> Vec<Check> {
    let mut out = Vec::new();

    let gamma = Clan::parse("+1+-2+21", 5, 3).expect("valid clan");
    let st = gamma.statistics();
    let mut pair_rows = vec![vec![0usize; 8]; 8];
    for (j, v) in (3..=7).map(|j| (j, 1)) {
        pair_rows[1][j - 1] = v;
    }
    for j in 4..=7 {
        pair_rows[2][j - 1] = 1;
    }
    for j in 5..=7 {
        pair_rows[3][j - 1] = 1;
    }
    pair_rows[4][5] = 2;
    pair_rows[4][6] = 1;
    pair_rows[5][6] = 1;
    let found_pairs: Vec<Vec<usize>> = (1..=8).map(|i| (1..=8).map(|j| st.pair(i, j)).collect()).collect();
    let witness = if st.plus_counts != [1, 1, 2, 2, 2, 3, 4, 5] {
        Some(format!("plus counts {:?}", st.plus_counts))
    } else if st.minus_counts != [0, 0, 0, 1, 1, 1, 2, 3] {
        Some(format!("minus counts {:?}", st.minus_counts))
    } else if found_pairs != pair_rows {
        Some(format!("pair matrix {found_pairs:?}"))
    } else {
        None
    };
    out.push(Check::new(1, "statistics of +1+-2+21", 1, witness));

    let unit = |r: usize| (1..=8).map(|k| i64::from(k == r)).collect::<Vec<i64>>();
    let combo = |r: usize, s: usize, sign: i64| {
        unit(r).iter().zip(unit(s)).map(|(a, b)| a + sign * b).collect::<Vec<i64>>()
    };
    let expected = vec![
        unit(1),
        combo(2, 8, 1),
        unit(3),
        unit(6),
        combo(4, 7, 1),
        unit(5),
        combo(4, 7, -1),
        combo(2, 8, -1),
    ];
    let found = flag_representative(&gamma).vectors;
    let witness = (found != expected).then(|| format!("{found:?}"));
    out.push(Check::new(1, "flag representative of +1+-2+21", 1, witness));

    let p = 3;
    for (w, words) in [
        ("213", &["s2*s1", "s2*s5", "s5*s4"][..]),
        ("123", &["s1*s2*s1", "s4*s5*s4", "s1*s2*s5", "s2*s1*s4", "s1*s5*s4", "s2*s4*s5"][..]),
    ] {
        let name = format!("W-set of gamma_{w} at (3,3)");
        let w: Permutation = w.parse().expect("permutation");
        let clan = Clan::gamma_w(&w, p).expect("valid shape");
        let witness = compare_sets(&w_set(&clan), &word_set(words, 6));
        out.push(Check::new(1, &name, 1, witness));
    }
    let w: Permutation = "3214".parse().expect("permutation");
    let clan = Clan::gamma_w(&w, 4).expect("valid shape");
    let witness = compare_sets(
        &w_set(&clan),
        &word_set(&["s3*s2*s1", "s3*s2*s7", "s3*s7*s6", "s7*s6*s5"], 8),
    );
    out.push(Check::new(1, "W-set of gamma_3214 at (4,4)", 1, witness));

    let witness = match WeakOrderGraph::build(3, 3, true) {
        Ok(g) => {
            let found: BTreeSet<(String, String, String)> = g
                .covers
                .iter()
                .map(|e| (e.source.render(), e.target.render(), e.label_text()))
                .collect();
            let expected: BTreeSet<(String, String, String)> = INTERVAL_REFERENCE
                .iter()
                .map(|(a, b, l)| (a.to_string(), b.to_string(), l.to_string()))
                .collect();
            (found != expected).then(|| format!("edges {found:?}"))
        }
        Err(e) => Some(e.to_string()),
    };
    out.push(Check::new(1, "interval weak order graph at (3,3)", 1, witness));

    let class = brion_class(&Clan::parse("123123", 3, 3).expect("valid clan"));
    for (m, words) in MONK_REFERENCE {
        let witness = monk_against_words(m, &class, words, 6);
        out.push(Check::new(1, &format!("Monk product with s{m} at (3,3)"), 1, witness));
    }
    out
}

pub fn classification_checks(max_n: usize) -> Vec<Check> {
    let shapes = shapes_up_to(max_n);
    let mut cls_witness = None;
    let mut ideal_witness = None;
    let (mut cls_cases, mut ideal_cases) = (0, 0);
    for &(p, q) in &shapes {
        let scanner = match HessScanner::new(p, q) {
            Ok(s) => s,
            Err(e) => {
                cls_witness.get_or_insert(format!("({p},{q}): {e}"));
                continue;
            }
        };
        if cls_witness.is_none() {
            cls_cases += HessenbergVector::all(p + q).len();
            match classify_with(&scanner) {
                Ok(c) => {
                    if let Some(v) = c.violation() {
                        cls_witness = Some(format!("({p},{q}): {v}"));
                    }
                }
                Err(e) => cls_witness = Some(format!("({p},{q}): {e}")),
            }
        }
        if ideal_witness.is_none() {
            for w in Permutation::all(q).filter(Permutation::avoids_231) {
                ideal_cases += 1;
                match scanner.lower_ideal_check(&w) {
                    Ok(true) => {}
                    Ok(false) => {
                        ideal_witness = Some(format!("({p},{q}), w = {w}"));
                        break;
                    }
                    Err(e) => {
                        ideal_witness = Some(format!("({p},{q}), w = {w}: {e}"));
                        break;
                    }
                }
            }
        }
    }
    vec![
        Check::new(2, "irreducible iff m = m(w) for 231-free w, Catalan count", cls_cases, cls_witness),
        Check::new(2, "orbits in Hess(m(w)) form the lower ideal of gamma_w", ideal_cases, ideal_witness),
    ]
}

pub fn dimension_check(max_q: usize) -> Check {
    let mut cases = 0;
    let mut witness = None;
    'outer: for (p, q) in gamma_w_shapes(max_q) {
        for w in Permutation::all(q).filter(Permutation::avoids_231) {
            cases += 1;
            let formula = hess_dimension(&w, p);
            let area = m_of_w(&w, p).map(|m| m.area());
            let orbit = Clan::gamma_w(&w, p).map(|c| c.orbit_dimension());
            match (formula, area, orbit) {
                (Ok(a), Ok(b), Ok(c)) if a == b && b == c => {}
                (a, b, c) => {
                    witness = Some(format!("({p},{q}), w = {w}: {a:?} {b:?} {c:?}"));
                    break 'outer;
                }
            }
        }
    }
    Check::new(3, "length + pq + p(p-1)/2 = area of m(w) = dim of gamma_w", cases, witness)
}

pub fn oracle_checks(max_n: usize, seed: u64) -> Vec<Check> {
    let mut cases: Vec<(Clan, HessenbergVector)> = Vec::new();
    for (p, q) in shapes_up_to(max_n) {
        let vectors = HessenbergVector::all(p + q);
        for clan in Clan::enumerate(p, q).expect("valid shape") {
            for m in &vectors {
                cases.push((clan.clone(), m.clone()));
            }
        }
    }
    let witness = cases.par_iter().find_map_first(|(clan, m)| {
        let combinatorial = orbit_in_hess(clan, m).expect("matching lengths");
        let geometric = geometric_membership(clan, m);
        (combinatorial != geometric).then(|| {
            format!("({},{}) {clan}, m = {m}: criterion {combinatorial}, rank test {geometric}", clan.p(), clan.q())
        })
    });
    let agree = Check::new(4, "rank-test membership agrees with the arc criterion", cases.len(), witness);

    // K-invariance on a deterministic sample of the contained pairs.
    let sample: Vec<&(Clan, HessenbergVector)> = cases
        .iter()
        .filter(|(clan, m)| clan.n() <= 5 && orbit_in_hess(clan, m).expect("matching lengths"))
        .step_by(7)
        .collect();
    let witness = sample.par_iter().enumerate().find_map_first(|(k, (clan, m))| {
        (!k_invariance_spotcheck(clan, m, 4, seed.wrapping_add(k as u64)))
            .then(|| format!("{clan}, m = {m}"))
    });
    let invariance = Check::new(4, "membership is invariant under random K elements", sample.len(), witness);
    vec![agree, invariance]
}

pub fn w_set_factorization_check(max_q: usize) -> Check {
    let mut cases = 0;
    let mut witness = None;
    'outer: for (p, q) in gamma_w_shapes(max_q) {
        let mut memo = WSetMemo::new();
        let y0 = Permutation::longest(q);
        for w in Permutation::all(q) {
            cases += 1;
            let clan = Clan::gamma_w(&w, p).expect("valid shape");
            let recursive = memo.get(&clan).clone();
            let bijective = w_set_via_bijection(&w, p).expect("valid shape");
            let pairs = factorization_pairs(&w.compose(&y0)).len();
            if recursive != bijective || recursive.len() != pairs {
                witness = Some(format!(
                    "({p},{q}), w = {w}: {} from covers, {} from factorizations, {pairs} pairs; {}",
                    recursive.len(),
                    bijective.len(),
                    compare_sets(&recursive, &bijective).unwrap_or_default()
                ));
                break 'outer;
            }
        }
    }
    Check::new(5, "W-set of gamma_w equals u*phi(v) over factorizations of w*y0", cases, witness)
}

pub fn two_sided_checks(max_q: usize) -> Vec<Check> {
    let shapes = gamma_w_shapes(max_q);
    let witness = shapes.iter().find_map(|&(p, q)| match interval_iso_violation(p, q) {
        Ok(None) => None,
        Ok(Some(v)) => Some(format!("({p},{q}): {v}")),
        Err(e) => Some(format!("({p},{q}): {e}")),
    });
    let iso = Check::new(6, "interval [gamma_e, gamma_0] is the two-sided weak order", shapes.len(), witness);
    let x: Permutation = "3214".parse().expect("permutation");
    let y: Permutation = "3412".parse().expect("permutation");
    let bruhat = bruhat_leq(&x, &y);
    let weak = weak_order_leq(&x, &y, WeakOrderMode::TwoSided);
    let witness = (!bruhat || weak).then(|| format!("Bruhat {bruhat}, two-sided weak {weak}"));
    let negative = Check::new(6, "3214 < 3412 in Bruhat order but not in two-sided weak order", 1, witness);
    vec![iso, negative]
}

pub fn monk_checks(max_q: usize) -> Vec<Check> {
    let mut jobs: Vec<(usize, usize, Permutation)> = Vec::new();
    for (p, q) in gamma_w_shapes(max_q) {
        jobs.extend(Permutation::all(q).map(|w| (p, q, w)));
    }
    let results: Vec<(usize, Option<String>)> = jobs
        .par_iter()
        .map(|(p, q, w)| {
            let n = p + q;
            let clan = Clan::gamma_w(w, *p).expect("valid shape");
            let class = brion_class(&clan);
            let mut count = 0;
            for m in 1..n {
                count += 1;
                match monk_product(m, &class, MonkMode::Cohomology(n)) {
                    Ok(e) if e.is_multiplicity_free() => {}
                    Ok(e) => {
                        let (v, c) = e.iter().find(|(_, c)| !c.is_one()).expect("not free");
                        return (count, Some(format!("({p},{q}), w = {w}, m = {m}: coefficient {c} on {v}")));
                    }
                    Err(e) => return (count, Some(format!("({p},{q}), w = {w}, m = {m}: {e}"))),
                }
            }
            (count, None)
        })
        .collect();
    let cases = results.iter().map(|(c, _)| c).sum();
    let witness = results.into_iter().find_map(|(_, w)| w);
    let free = Check::new(7, "S_{s_m} * [gamma_w] is multiplicity-free", cases, witness);

    let mut table = SchubertTable::new();
    let mut cases = 0;
    let mut witness = None;
    'outer: for u in Permutation::all(4) {
        for m in 1..=4 {
            cases += 1;
            let e = SchubertExpansion::single(&u);
            let monk = monk_product(m, &e, MonkMode::Stable);
            let poly = product_oracle(&mut table, m, &e);
            match (monk, poly) {
                (Ok(a), Ok(b)) if a == b => {}
                (a, b) => {
                    witness = Some(format!("u = {u}, m = {m}: {a:?} vs {b:?}"));
                    break 'outer;
                }
            }
        }
    }
    let stable = Check::new(7, "stable Monk rule equals the polynomial product", cases, witness);
    vec![free, stable]
}

pub fn structural_checks(max_n: usize) -> Vec<Check> {
    let shapes = shapes_up_to(max_n);
    let mut out = Vec::new();

    let mut cases = 0;
    let mut witness = None;
    for &(p, q) in &shapes {
        let poset = InclusionPoset::new(p, q).expect("valid shape");
        let graph = WeakOrderGraph::build(p, q, false).expect("valid shape");
        let top = Clan::gamma0(p, q).expect("valid shape");
        for e in &graph.covers {
            cases += 1;
            let (s, t) = (
                poset.index_of(&e.source).expect("clan"),
                poset.index_of(&e.target).expect("clan"),
            );
            if !poset.leq(s, t) {
                witness = Some(format!("({p},{q}) {} -> {} but not below", e.source, e.target));
                break;
            }
        }
        if witness.is_some() {
            break;
        }
        let sinks: Vec<&Clan> = graph.sinks().into_iter().map(|i| &graph.nodes[i]).collect();
        if graph.topological_order().is_none() || sinks != [&top] {
            witness = Some(format!("({p},{q}) weak order graph is cyclic or has sinks {sinks:?}"));
            break;
        }
    }
    out.push(Check::new(8, "weak order covers lie in the inclusion order", cases, witness));

    let witness = shapes.iter().find_map(|&(p, q)| {
        InclusionPoset::new(p, q)
            .expect("valid shape")
            .partial_order_violation()
            .map(|v| format!("({p},{q}): {v}"))
    });
    out.push(Check::new(8, "inclusion order is a partial order", shapes.len(), witness));

    let count_shapes = shapes_up_to(max_n + 2);
    let witness = count_shapes.iter().find_map(|&(p, q)| {
        let found = Clan::enumerate(p, q).expect("valid shape").len() as u128;
        let formula = clan_count(p, q);
        (found != formula).then(|| format!("({p},{q}): enumerated {found}, formula {formula}"))
    });
    out.push(Check::new(8, "clan enumeration matches the counting formula", count_shapes.len(), witness));

    let monomials = monomials_up_to(4, 6);
    let mut witness = None;
    for f in &monomials {
        let f = IntPolynomial::monomial(f.clone(), BigInt::one());
        let d = |g: &IntPolynomial, i: usize| g.divided_difference(i);
        for i in 1..=3 {
            if !d(&d(&f, i), i).is_zero() {
                witness = Some(format!("d{i}^2 ({f}) != 0"));
            }
        }
        for i in 1..=2 {
            if d(&d(&d(&f, i), i + 1), i) != d(&d(&d(&f, i + 1), i), i + 1) {
                witness = Some(format!("braid relation fails for d{i} on {f}"));
            }
        }
        if d(&d(&f, 1), 3) != d(&d(&f, 3), 1) {
            witness = Some(format!("d1 and d3 do not commute on {f}"));
        }
        if witness.is_some() {
            break;
        }
    }
    out.push(Check::new(8, "divided differences square to zero and satisfy braid relations", monomials.len(), witness));

    let mut table = SchubertTable::new();
    let witness = Permutation::all(4).find_map(|w| {
        let poly = table.get(&w).clone();
        match table.expand(&poly) {
            Ok(e) if e == SchubertExpansion::single(&w) => None,
            Ok(e) => Some(format!("{w} expands to {e:?}")),
            Err(e) => Some(format!("{w}: {e}")),
        }
    });
    out.push(Check::new(8, "expanding a Schubert polynomial returns its index", 24, witness));
    out
}

/// Exponent vectors in `vars` variables of total degree at most `max_degree`.
fn monomials_up_to(vars: usize, max_degree: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..vars {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                let used: u32 = e.iter().sum();
                (0..=max_degree - used).map(move |a| {
                    let mut f = e.clone();
                    f.push(a);
                    f
                })
            })
            .collect();
    }
    out
}
