//! Schubert polynomials, expansions in the Schubert basis, and Monk products.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{Map, Number, Value};
use thiserror::Error;

use crate::clan::Clan;
use crate::perm::{length_lex_key, PermError, Permutation, ReducedWord};
use crate::poly::IntPolynomial;
use crate::weak_order::{w_set, WSetMemo};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchubertError {
    #[error("Schubert expansion stalled at leading exponent {0:?}")]
    ExpansionStalled(Vec<u32>),
    #[error("Schubert expansion exceeded {0} steps")]
    IterationCap(usize),
    #[error("Schubert expansion does not re-sum to its input")]
    ResumMismatch,
    #[error("Monk index {m} is outside 1..{n}")]
    MonkIndex { m: usize, n: usize },
    #[error("{w} does not lie in S{n}")]
    OutsideCohomology { w: Permutation, n: usize },
    #[error("{word} is not a reduced word for the complement of {w} in S{n}")]
    BadWord {
        w: Permutation,
        word: ReducedWord,
        n: usize,
    },
    #[error("malformed expansion: {0}")]
    Parse(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

const EXPANSION_CAP: usize = 1_000_000;

/// A finitely supported integer combination of Schubert classes, keyed by
/// permutations with trailing fixed points removed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchubertExpansion {
    coeffs: BTreeMap<Permutation, BigInt>,
}

impl SchubertExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: &Permutation) -> Self {
        let mut e = Self::new();
        e.add_term(w, BigInt::one());
        e
    }

    pub fn add_term(&mut self, w: &Permutation, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = w.trimmed();
        let entry = self.coeffs.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coeff(&self, w: &Permutation) -> BigInt {
        self.coeffs.get(&w.trimmed()).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.coeffs.keys()
    }

    /// Every coefficient is 1.
    pub fn is_multiplicity_free(&self) -> bool {
        self.coeffs.values().all(One::is_one)
    }

    /// Drops every class indexed outside `S_n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(w, _)| w.degree() <= n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Smallest degree holding every index, at least `min_degree`.
    pub fn display_degree(&self, min_degree: usize) -> usize {
        self.coeffs
            .keys()
            .map(Permutation::degree)
            .max()
            .unwrap_or(0)
            .max(min_degree)
            .max(1)
    }

    /// Terms with indices embedded in a common degree, sorted by length and then
    /// one-line notation.
    pub fn sorted_terms(&self, min_degree: usize) -> Vec<(Permutation, BigInt)> {
        let n = self.display_degree(min_degree);
        self.coeffs
            .iter()
            .map(|(w, c)| (w.embed(n).expect("degree fits"), c.clone()))
            .sorted_by_key(|(w, _)| length_lex_key(w))
            .collect()
    }

    /// One `coeff * S[one-line]` line per term.
    pub fn to_text(&self, min_degree: usize) -> String {
        self.sorted_terms(min_degree)
            .into_iter()
            .map(|(w, c)| format!("{c} * S{w}\n"))
            .collect()
    }

    /// JSON object from one-line text to coefficient.
    pub fn to_json(&self, min_degree: usize) -> Value {
        let mut map = Map::new();
        for (w, c) in self.sorted_terms(min_degree) {
            let v = match c.to_i64() {
                Some(small) => Value::Number(Number::from(small)),
                None => Value::String(c.to_string()),
            };
            map.insert(w.to_string(), v);
        }
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> Result<Self, SchubertError> {
        let obj = value
            .as_object()
            .ok_or_else(|| SchubertError::Parse("expected an object".into()))?;
        let mut out = Self::new();
        for (k, v) in obj {
            let w: Permutation = k.parse()?;
            let c: BigInt = match v {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| SchubertError::Parse(format!("coefficient {n}")))?,
                Value::String(s) => s
                    .parse()
                    .map_err(|_| SchubertError::Parse(format!("coefficient {s:?}")))?,
                other => return Err(SchubertError::Parse(format!("coefficient {other}"))),
            };
            out.add_term(&w, c);
        }
        Ok(out)
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(1))
    }
}

impl std::ops::Add for SchubertExpansion {
    type Output = SchubertExpansion;

    fn add(mut self, rhs: SchubertExpansion) -> SchubertExpansion {
        for (w, c) in rhs.coeffs {
            self.add_term(&w, c);
        }
        self
    }
}

/// Memoized Schubert polynomials.
///
/// `S_w` is obtained from the staircase monomial of the smallest `S_N`
/// containing `w` by divided differences, climbing from `w` to `w₀` along
/// ascents and applying `∂_i` on the way back down.
#[derive(Debug, Default, Clone)]
pub struct SchubertTable {
    cache: HashMap<Permutation, IntPolynomial>,
}

impl SchubertTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, w: &Permutation) -> &IntPolynomial {
        let w = w.trimmed();
        if !self.cache.contains_key(&w) {
            let n = w.degree().max(1);
            let top = Permutation::longest(n).trimmed();
            let mut chain: Vec<(Permutation, usize)> = Vec::new();
            let mut v = w.embed(n).expect("growing");
            let mut base = loop {
                let key = v.trimmed();
                if let Some(p) = self.cache.get(&key) {
                    break p.clone();
                }
                if key == top {
                    break IntPolynomial::staircase(n);
                }
                let i = (1..n)
                    .find(|&i| v.apply(i) < v.apply(i + 1))
                    .expect("non-maximal element has an ascent");
                let next = v.right_mul_simple(i);
                chain.push((v, i));
                v = next;
            };
            self.cache.entry(v.trimmed()).or_insert_with(|| base.clone());
            for (u, i) in chain.into_iter().rev() {
                base = base.divided_difference(i);
                self.cache.insert(u.trimmed(), base.clone());
            }
        }
        &self.cache[&w]
    }

    /// `∑ c_w S_w`.
    pub fn polynomial_of(&mut self, e: &SchubertExpansion) -> IntPolynomial {
        e.iter().fold(IntPolynomial::zero(), |acc, (w, c)| {
            acc + self.get(w).scale(c)
        })
    }

    /// Writes `poly` in the Schubert basis by repeatedly peeling off the
    /// lexicographically smallest monomial `c x^a`, which is the leading
    /// monomial of `c S_v` for the permutation `v` with code `a`.
    pub fn expand(&mut self, poly: &IntPolynomial) -> Result<SchubertExpansion, SchubertError> {
        let mut rest = poly.clone();
        let mut out = SchubertExpansion::new();
        let mut previous: Option<Vec<u32>> = None;
        for _ in 0..EXPANSION_CAP {
            let Some((a, c)) = rest.lex_min_term() else {
                if self.polynomial_of(&out) != *poly {
                    return Err(SchubertError::ResumMismatch);
                }
                return Ok(out);
            };
            let (a, c) = (a.clone(), c.clone());
            if previous.as_ref().is_some_and(|p| *p >= a) {
                return Err(SchubertError::ExpansionStalled(a));
            }
            let code: Vec<usize> = a.iter().map(|&x| x as usize).collect();
            let v = Permutation::from_code(&code)?;
            rest = rest - self.get(&v).scale(&c);
            out.add_term(&v, c);
            previous = Some(a);
        }
        Err(SchubertError::IterationCap(EXPANSION_CAP))
    }
}

pub fn schubert_polynomial(w: &Permutation) -> IntPolynomial {
    SchubertTable::new().get(w).clone()
}

/// `∂_{a_1} ⋯ ∂_{a_l}` applied to the staircase of `S_n`, where `a` is a reduced
/// word for `w⁻¹ w₀`.
pub fn schubert_via_word(
    w: &Permutation,
    word: &ReducedWord,
    n: usize,
) -> Result<IntPolynomial, SchubertError> {
    let w = w.embed(n)?;
    let complement = w.inverse().compose(&Permutation::longest(n));
    if !word.is_reduced_word_for(&complement) {
        return Err(SchubertError::BadWord {
            w,
            word: word.clone(),
            n,
        });
    }
    Ok(word
        .letters()
        .iter()
        .rev()
        .fold(IntPolynomial::staircase(n), |f, &i| f.divided_difference(i)))
}

pub fn expand_in_schubert_basis(poly: &IntPolynomial) -> Result<SchubertExpansion, SchubertError> {
    SchubertTable::new().expand(poly)
}

/// The class of the orbit closure: coefficient one on each element of the W-set.
pub fn brion_class(clan: &Clan) -> SchubertExpansion {
    class_from_w_set(w_set(clan).iter())
}

pub fn brion_class_with(memo: &mut WSetMemo, clan: &Clan) -> SchubertExpansion {
    class_from_w_set(memo.get(clan).iter())
}

fn class_from_w_set<'a>(set: impl Iterator<Item = &'a Permutation>) -> SchubertExpansion {
    let mut e = SchubertExpansion::new();
    for w in set {
        e.add_term(w, BigInt::one());
    }
    e
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonkMode {
    /// Classes outside `S_n` vanish.
    Cohomology(usize),
    Stable,
}

/// `S_{s_m} · S_u` by Monk's rule.
pub fn monk_single(m: usize, u: &Permutation, mode: MonkMode) -> Result<SchubertExpansion, SchubertError> {
    let u = u.trimmed();
    let n = match mode {
        MonkMode::Cohomology(n) => {
            if m == 0 || m >= n {
                return Err(SchubertError::MonkIndex { m, n });
            }
            if u.degree() > n {
                return Err(SchubertError::OutsideCohomology { w: u, n });
            }
            n
        }
        MonkMode::Stable => {
            if m == 0 {
                return Err(SchubertError::MonkIndex { m, n: usize::MAX });
            }
            // Past this degree a fixed point between j and k blocks every exchange.
            u.degree().max(m) + 1
        }
    };
    let u = u.embed(n)?;
    let mut out = SchubertExpansion::new();
    for j in 1..=m {
        for k in m + 1..=n {
            let (a, b) = (u.apply(j), u.apply(k));
            if a < b && !(j + 1..k).any(|l| (a..b).contains(&u.apply(l))) {
                let v = u.compose(&Permutation::transposition(j, k, n)?);
                out.add_term(&v, BigInt::one());
            }
        }
    }
    Ok(out)
}

/// Linear extension of [`monk_single`].
pub fn monk_product(
    m: usize,
    e: &SchubertExpansion,
    mode: MonkMode,
) -> Result<SchubertExpansion, SchubertError> {
    let mut out = SchubertExpansion::new();
    for (u, c) in e.iter() {
        for (v, d) in monk_single(m, u, mode)?.iter() {
            out.add_term(v, c * d);
        }
    }
    Ok(out)
}

/// `(x_1 + ⋯ + x_m) · ∑ c_w S_w`, multiplied out and re-expanded.
pub fn product_oracle(
    table: &mut SchubertTable,
    m: usize,
    e: &SchubertExpansion,
) -> Result<SchubertExpansion, SchubertError> {
    let poly = &IntPolynomial::elementary_linear(m) * &table.polynomial_of(e);
    table.expand(&poly)
}

/// A Schubert divisor product with a coefficient above one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityWitness {
    pub clan: Clan,
    pub m: usize,
    pub index: Permutation,
    pub coeff: BigInt,
}

/// Every `(γ, m, w)` with coefficient of `S_w` in `S_{s_m} · [γ]` above one,
/// over all `(p, q)`-clans. Exploratory; nothing is asserted about the outcome.
pub fn multiplicity_scan(p: usize, q: usize) -> Result<Vec<MultiplicityWitness>, SchubertError> {
    let n = p + q;
    let clans = Clan::enumerate(p, q).map_err(|e| SchubertError::Parse(e.to_string()))?;
    let mut memo = WSetMemo::new();
    let mut out = Vec::new();
    for clan in clans {
        let class = brion_class_with(&mut memo, &clan);
        for m in 1..n {
            for (w, c) in monk_product(m, &class, MonkMode::Cohomology(n))?.iter() {
                if !c.is_one() {
                    out.push(MultiplicityWitness {
                        clan: clan.clone(),
                        m,
                        index: w.clone(),
                        coeff: c.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}
