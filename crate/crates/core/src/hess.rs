//! Hessenberg vectors and the K-orbits inside `Hess(x, m)` for the semisimple
//! matrix with eigenvalue multiplicities `p` and `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clan::{check_shape, Clan, ClanError};
use crate::perm::Permutation;
use crate::poset::InclusionPoset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HessError {
    #[error("{0:?} is not a Hessenberg vector (needs i <= m_i <= n, weakly increasing)")]
    Invalid(Vec<usize>),
    #[error("malformed Hessenberg vector {0:?}")]
    Parse(String),
    #[error("Hessenberg vector has length {found}, clan has length {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{0} contains the pattern 231")]
    Contains231(Permutation),
    #[error(transparent)]
    Clan(#[from] ClanError),
}

/// A weakly increasing `m` with `i ≤ m_i ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HessenbergVector {
    m: Vec<usize>,
}

impl HessenbergVector {
    pub fn new(m: Vec<usize>) -> Result<Self, HessError> {
        let n = m.len();
        let valid = m.iter().enumerate().all(|(i, &v)| i < v && v <= n)
            && m.iter().tuple_windows().all(|(a, b)| a <= b);
        if !valid {
            return Err(HessError::Invalid(m));
        }
        Ok(Self { m })
    }

    /// `(n, …, n)`.
    pub fn full(n: usize) -> Self {
        Self { m: vec![n; n] }
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.m
    }

    /// `m_i` for 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        self.m[i - 1]
    }

    pub fn area(&self) -> usize {
        self.m.iter().enumerate().map(|(i, &v)| v - (i + 1)).sum()
    }

    /// All Hessenberg vectors of length `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<HessenbergVector> {
        fn go(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<HessenbergVector>) {
            let i = prefix.len() + 1;
            if i > n {
                out.push(HessenbergVector { m: prefix.clone() });
                return;
            }
            let lo = i.max(prefix.last().copied().unwrap_or(0));
            for v in lo..=n {
                prefix.push(v);
                go(n, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for HessenbergVector {
    type Error = HessError;

    fn try_from(m: Vec<usize>) -> Result<Self, HessError> {
        HessenbergVector::new(m)
    }
}

impl From<HessenbergVector> for Vec<usize> {
    fn from(h: HessenbergVector) -> Vec<usize> {
        h.m
    }
}

impl fmt::Display for HessenbergVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.m.iter().join(","))
    }
}

impl FromStr for HessenbergVector {
    type Err = HessError;

    /// Accepts `3,4,4,4`, optionally wrapped in parentheses or brackets.
    fn from_str(s: &str) -> Result<Self, HessError> {
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let m = body
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| HessError::Parse(s.to_string()))?;
        HessenbergVector::new(m)
    }
}

/// True iff `m_i ≥ j` for every pair `c_i = c_j`, `i < j`.
pub fn orbit_in_hess(clan: &Clan, m: &HessenbergVector) -> Result<bool, HessError> {
    if clan.n() != m.n() {
        return Err(HessError::LengthMismatch {
            expected: clan.n(),
            found: m.n(),
        });
    }
    Ok(arcs_fit(&clan.arcs(), m))
}

fn arcs_fit(arcs: &[(usize, usize)], m: &HessenbergVector) -> bool {
    arcs.iter().all(|&(i, j)| m.get(i) >= j)
}

/// The orbits contained in `Hess(x, m)` and their maximal elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HessOrbitReport {
    pub contained: Vec<Clan>,
    pub maximal: Vec<Clan>,
    pub irreducible: bool,
    pub witness: Option<Permutation>,
}

/// Precomputed inclusion order and arcs for repeated queries at one `(p, q)`.
#[derive(Debug, Clone)]
pub struct HessScanner {
    poset: InclusionPoset,
    arcs: Vec<Vec<(usize, usize)>>,
}

impl HessScanner {
    pub fn new(p: usize, q: usize) -> Result<Self, HessError> {
        let poset = InclusionPoset::new(p, q)?;
        let arcs = poset.clans().iter().map(Clan::arcs).collect();
        Ok(Self { poset, arcs })
    }

    pub fn poset(&self) -> &InclusionPoset {
        &self.poset
    }

    fn check_len(&self, m: &HessenbergVector) -> Result<(), HessError> {
        let n = self.poset.p() + self.poset.q();
        if m.n() != n {
            return Err(HessError::LengthMismatch {
                expected: n,
                found: m.n(),
            });
        }
        Ok(())
    }

    pub fn contained(&self, m: &HessenbergVector) -> Result<FixedBitSet, HessError> {
        self.check_len(m)?;
        let mut set = FixedBitSet::with_capacity(self.poset.len());
        for (i, arcs) in self.arcs.iter().enumerate() {
            if arcs_fit(arcs, m) {
                set.insert(i);
            }
        }
        Ok(set)
    }

    pub fn report(&self, m: &HessenbergVector) -> Result<HessOrbitReport, HessError> {
        let contained = self.contained(m)?;
        let maximal: Vec<Clan> = self
            .poset
            .maximal(&contained)
            .into_iter()
            .map(|i| self.poset.clan(i).clone())
            .collect();
        let irreducible = maximal.len() == 1;
        let witness = if irreducible {
            maximal[0].as_gamma_w()
        } else {
            None
        };
        Ok(HessOrbitReport {
            contained: contained.ones().map(|i| self.poset.clan(i).clone()).collect(),
            maximal,
            irreducible,
            witness,
        })
    }

    /// The orbits in `Hess(x, m(w))` are exactly those below `γ_w`.
    pub fn lower_ideal_check(&self, w: &Permutation) -> Result<bool, HessError> {
        let p = self.poset.p();
        let m = m_of_w(w, p)?;
        let top = Clan::gamma_w(w, p)?;
        let idx = self.poset.index_of(&top).expect("γ_w is a clan of this shape");
        Ok(&self.contained(&m)? == self.poset.down_set(idx))
    }
}

pub fn hess_orbit_report(
    p: usize,
    q: usize,
    m: &HessenbergVector,
) -> Result<HessOrbitReport, HessError> {
    HessScanner::new(p, q)?.report(m)
}

/// `m(w)_i = max{w⁻¹(k) + p : k ≤ i}` for `i ≤ q`, and `n` afterwards.
pub fn m_of_w(w: &Permutation, p: usize) -> Result<HessenbergVector, HessError> {
    let q = w.degree();
    check_shape(p, q)?;
    if !w.avoids_231() {
        return Err(HessError::Contains231(w.clone()));
    }
    let n = p + q;
    let mut m: Vec<usize> = w.inverse().h_vector().into_iter().map(|h| h + p).collect();
    m.resize(n, n);
    HessenbergVector::new(m)
}

/// `ℓ(w) + pq + p(p-1)/2`.
pub fn hess_dimension(w: &Permutation, p: usize) -> Result<usize, HessError> {
    let q = w.degree();
    check_shape(p, q)?;
    if !w.avoids_231() {
        return Err(HessError::Contains231(w.clone()));
    }
    Ok(w.length() + p * q + p * (p - 1) / 2)
}

pub fn lower_ideal_check(w: &Permutation, p: usize) -> Result<bool, HessError> {
    HessScanner::new(p, w.degree())?.lower_ideal_check(w)
}

/// Result of scanning every Hessenberg vector for irreducibility.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub p: usize,
    pub q: usize,
    /// Witness permutation and vector of each irreducible `Hess`, sorted by vector.
    pub rows: Vec<(Permutation, HessenbergVector)>,
    /// Irreducible vectors whose maximal clan is not of the form `γ_w`.
    pub unexplained: Vec<HessenbergVector>,
}

impl Classification {
    /// Compares the scan with `{m(w) : w ∈ S_q avoids 231}`, and each witness
    /// `w` with its vector; returns the first disagreement.
    pub fn violation(&self) -> Option<String> {
        if let Some(m) = self.unexplained.first() {
            return Some(format!("Hess({m}) is irreducible but its top orbit is not some γ_w"));
        }
        for (w, m) in &self.rows {
            match m_of_w(w, self.p) {
                Ok(expected) if &expected == m => {}
                Ok(expected) => {
                    return Some(format!("witness {w} of Hess({m}) has m(w) = {expected}"))
                }
                Err(e) => return Some(format!("witness {w} of Hess({m}): {e}")),
            }
        }
        let found: BTreeMap<&HessenbergVector, &Permutation> =
            self.rows.iter().map(|(w, m)| (m, w)).collect();
        for w in Permutation::all(self.q).filter(Permutation::avoids_231) {
            let m = m_of_w(&w, self.p).expect("231-free");
            if !found.contains_key(&m) {
                return Some(format!("Hess({m}) = Hess(m({w})) is not irreducible"));
            }
        }
        let catalan = catalan(self.q);
        if self.rows.len() as u128 != catalan {
            return Some(format!(
                "{} irreducible vectors, expected Cat_{} = {catalan}",
                self.rows.len(),
                self.q
            ));
        }
        None
    }
}

pub fn classify_irreducibles(p: usize, q: usize) -> Result<Classification, HessError> {
    let scanner = HessScanner::new(p, q)?;
    classify_with(&scanner)
}

pub fn classify_with(scanner: &HessScanner) -> Result<Classification, HessError> {
    let (p, q) = (scanner.poset.p(), scanner.poset.q());
    let reports: Vec<(HessenbergVector, HessOrbitReport)> = HessenbergVector::all(p + q)
        .into_par_iter()
        .map(|m| scanner.report(&m).map(|r| (m, r)))
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    let mut unexplained = Vec::new();
    for (m, r) in reports.into_iter().filter(|(_, r)| r.irreducible) {
        match r.witness {
            Some(w) => rows.push((w, m)),
            None => unexplained.push(m),
        }
    }
    rows.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(Classification {
        p,
        q,
        rows,
        unexplained,
    })
}

pub fn catalan(k: usize) -> u128 {
    // C(2k, k) / (k + 1), built incrementally to stay exact.
    (0..k).fold(1u128, |c, i| c * 2 * (2 * i as u128 + 1) / (i as u128 + 2))
}
