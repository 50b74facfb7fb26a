//! Permutations of `[n]` in one-line notation.
//!
//! Products compose right to left: `(x * y)(i) = x(y(i))`. Under this
//! convention `x * s_i` swaps the entries in positions `i` and `i + 1` of the
//! one-line notation of `x`, while `s_i * x` swaps the values `i` and `i + 1`.
//!
//! Every permutation carries an explicit degree, but the combinatorial
//! statistics (length, code, reduced words, support) do not change when fixed
//! points are appended, so mixed-degree products embed both factors into the
//! larger degree.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("{0:?} is not a permutation of 1..={1}")]
    NotBijection(Vec<usize>, usize),
    #[error("simple reflection s{index} does not exist in S{degree}")]
    BadSimple { index: usize, degree: usize },
    #[error("cannot embed a permutation of degree {from} into S{to}")]
    DegreeMismatch { from: usize, to: usize },
    #[error("malformed permutation text {0:?}")]
    Parse(String),
    #[error("malformed reduced word {0:?}")]
    ParseWord(String),
    #[error("{0} is not a valid Lehmer code entry sequence")]
    BadCode(String),
}

/// A permutation `w` of `[n]` stored as its one-line notation `w(1) … w(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotBijection(images, n));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// The longest element `n n-1 … 1` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Self {
            images: (1..=n).rev().collect(),
        }
    }

    /// The simple reflection `s_i = (i, i+1)` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self, PermError> {
        if i == 0 || i >= n {
            return Err(PermError::BadSimple {
                index: i,
                degree: n,
            });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Self { images })
    }

    /// The transposition `t_{jk}` in `S_n` exchanging `j` and `k`.
    pub fn transposition(j: usize, k: usize, n: usize) -> Result<Self, PermError> {
        if j == 0 || k == 0 || j > n || k > n || j == k {
            return Err(PermError::BadSimple {
                index: j.max(k),
                degree: n,
            });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(j - 1, k - 1);
        Ok(Self { images })
    }

    /// The product `s_{i_1} s_{i_2} ⋯ s_{i_l}` in `S_n`.
    pub fn from_word(word: &ReducedWord, n: usize) -> Result<Self, PermError> {
        let mut w = Self::identity(n);
        for &i in word.letters() {
            if i == 0 || i >= n {
                return Err(PermError::BadSimple {
                    index: i,
                    degree: n,
                });
            }
            w.images.swap(i - 1, i);
        }
        Ok(w)
    }

    /// Inverse of [`Permutation::code`]. The degree is the smallest one that
    /// can hold the code, i.e. `max(i + c_i)`, but never less than `code.len()`.
    pub fn from_code(code: &[usize]) -> Result<Self, PermError> {
        let n = code
            .iter()
            .enumerate()
            .map(|(i, &c)| i + 1 + c)
            .max()
            .unwrap_or(0)
            .max(code.len());
        let mut available: Vec<usize> = (1..=n).collect();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0);
            if c >= available.len() {
                return Err(PermError::BadCode(format!("{code:?}")));
            }
            images.push(available.remove(c));
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for 1-based `i`; points beyond the degree are fixed.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.images.len() {
            self.images[i - 1]
        } else {
            i
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Self { images }
    }

    /// Appends fixed points up to degree `n`.
    pub fn embed(&self, n: usize) -> Result<Self, PermError> {
        if n < self.degree() {
            // Shrinking is allowed only when the dropped points are fixed.
            if self.images[n..].iter().enumerate().any(|(k, &v)| v != n + k + 1) {
                return Err(PermError::DegreeMismatch {
                    from: self.degree(),
                    to: n,
                });
            }
            return Ok(Self {
                images: self.images[..n].to_vec(),
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=n);
        Ok(Self { images })
    }

    /// Drops trailing fixed points; the identity becomes the empty permutation.
    pub fn trimmed(&self) -> Self {
        let mut images = self.images.clone();
        while images.last().is_some_and(|&v| v == images.len()) {
            images.pop();
        }
        Self { images }
    }

    /// Smallest degree `N` with `w ∈ S_N`.
    pub fn essential_degree(&self) -> usize {
        self.trimmed().degree()
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.degree().max(other.degree());
        let images = (1..=n).map(|i| self.apply(other.apply(i))).collect();
        Self { images }
    }

    /// `s_i * self`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let mut w = self.embed_at_least(i + 1);
        for v in w.images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        w
    }

    /// `self * s_i`: swaps the entries in positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut w = self.embed_at_least(i + 1);
        w.images.swap(i - 1, i);
        w
    }

    fn embed_at_least(&self, n: usize) -> Self {
        if n <= self.degree() {
            self.clone()
        } else {
            self.embed(n).expect("growing embedding never fails")
        }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.images
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    /// Lehmer code: entry `i` counts `j > i` with `w(j) < w(i)`.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .collect()
    }

    /// Running maxima `h_i = max{w(k) : k ≤ i}`.
    pub fn h_vector(&self) -> Vec<usize> {
        self.images
            .iter()
            .scan(0, |m, &v| {
                *m = (*m).max(v);
                Some(*m)
            })
            .collect()
    }

    /// `i` is a left descent when `ℓ(s_i w) < ℓ(w)`, i.e. `i + 1` precedes `i`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        i < self.degree() && inv.apply(i) > inv.apply(i + 1)
    }

    /// `i` is a right descent when `w(i) > w(i + 1)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        i < self.degree() && self.apply(i) > self.apply(i + 1)
    }

    /// The lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..w.degree()).find(|&i| w.is_left_descent(i)) {
            letters.push(i);
            w = w.left_mul_simple(i);
        }
        ReducedWord(letters)
    }

    /// All reduced words, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<ReducedWord> {
        fn go(w: &Permutation, prefix: &mut Vec<usize>, out: &mut Vec<ReducedWord>) {
            if w.is_identity() {
                out.push(ReducedWord(prefix.clone()));
                return;
            }
            for i in 1..w.degree() {
                if w.is_left_descent(i) {
                    prefix.push(i);
                    go(&w.left_mul_simple(i), prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Indices of the simple reflections occurring in any reduced word.
    pub fn support(&self) -> BTreeSet<usize> {
        self.reduced_word().0.into_iter().collect()
    }

    /// True iff no index subsequence of `self` is order-isomorphic to `pattern`.
    pub fn avoids(&self, pattern: &Permutation) -> bool {
        let k = pattern.degree();
        !self.images.iter().combinations(k).any(|sub| {
            (0..k).tuple_combinations().all(|(a, b)| {
                (sub[a] < sub[b]) == (pattern.images[a] < pattern.images[b])
            })
        })
    }

    pub fn avoids_231(&self) -> bool {
        self.avoids(&pattern_231())
    }

    pub fn avoids_312(&self) -> bool {
        self.avoids(&pattern_312())
    }

    /// All elements of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .map(|images| Permutation { images })
    }
}

pub fn pattern_231() -> Permutation {
    Permutation {
        images: vec![2, 3, 1],
    }
}

pub fn pattern_312() -> Permutation {
    Permutation {
        images: vec![3, 1, 2],
    }
}

/// `w₀ v⁻¹ w₀` in `S_n`, where `w₀` is the longest element of `S_n`.
pub fn phi(v: &Permutation, n: usize) -> Result<Permutation, PermError> {
    let v = v.embed(n)?;
    let inv = v.inverse();
    let images = (1..=n).map(|i| n + 1 - inv.apply(n + 1 - i)).collect();
    Ok(Permutation { images })
}

/// A length-additive factorization `w = u v` with `ℓ(w) = ℓ(u) + ℓ(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FactorizationPair {
    pub u: Permutation,
    pub v: Permutation,
}

/// The set `S(w)` of length-additive factorizations of `w ∈ S_q`, found by
/// scanning every `u ∈ S_q`.
pub fn factorization_pairs(w: &Permutation) -> Vec<FactorizationPair> {
    let q = w.degree();
    let lw = w.length();
    Permutation::all(q)
        .filter_map(|u| {
            let v = u.inverse().compose(w);
            (u.length() + v.length() == lw).then_some(FactorizationPair { u, v })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeakOrderMode {
    Left,
    Right,
    TwoSided,
}

/// Upward covers of `x` in the chosen weak order.
pub fn weak_covers(x: &Permutation, mode: WeakOrderMode) -> Vec<Permutation> {
    let n = x.degree();
    let mut out = Vec::new();
    for i in 1..n {
        if matches!(mode, WeakOrderMode::Left | WeakOrderMode::TwoSided) && !x.is_left_descent(i) {
            out.push(x.left_mul_simple(i));
        }
        if matches!(mode, WeakOrderMode::Right | WeakOrderMode::TwoSided) && !x.is_right_descent(i) {
            out.push(x.right_mul_simple(i));
        }
    }
    out
}

/// Reachability from `x` to `y` in the cover digraph of the chosen weak order.
pub fn weak_order_leq(x: &Permutation, y: &Permutation, mode: WeakOrderMode) -> bool {
    let n = x.degree().max(y.degree());
    let (x, y) = match (x.embed(n), y.embed(n)) {
        (Ok(x), Ok(y)) => (x, y),
        _ => return false,
    };
    let target_len = y.length();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([x]);
    while let Some(z) = queue.pop_front() {
        if z == y {
            return true;
        }
        if z.length() >= target_len {
            continue;
        }
        for c in weak_covers(&z, mode) {
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    false
}

/// Bruhat order by the rank-matrix criterion: `x ≤ y` iff
/// `#{a ≤ i : x(a) ≥ j} ≤ #{a ≤ i : y(a) ≥ j}` for all `i, j`.
pub fn bruhat_leq(x: &Permutation, y: &Permutation) -> bool {
    let n = x.degree().max(y.degree());
    for i in 1..=n {
        for j in 1..=n {
            let rx = (1..=i).filter(|&a| x.apply(a) >= j).count();
            let ry = (1..=i).filter(|&a| y.apply(a) >= j).count();
            if rx > ry {
                return false;
            }
        }
    }
    true
}

/// Sort key used for deterministic output: length, then one-line notation.
pub fn length_lex_key(w: &Permutation) -> (usize, Vec<usize>) {
    (w.length(), w.images.clone())
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, PermError> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Vec<usize> {
        w.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts `[3,2,1,4]`, `3,2,1,4`, or the digit string `3214`.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let body = s.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body)
            .trim();
        let images: Result<Vec<usize>, _> = if body.is_empty() {
            Ok(Vec::new())
        } else if body.contains(',') {
            body.split(',').map(|t| t.trim().parse::<usize>()).collect()
        } else if body.chars().all(|c| c.is_ascii_digit()) {
            Ok(body
                .chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect())
        } else {
            return Err(PermError::Parse(s.to_string()));
        };
        let images = images.map_err(|_| PermError::Parse(s.to_string()))?;
        Permutation::new(images)
    }
}

/// A word in the simple reflections, written `s1*s2*s1`; `e` is the empty word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff the word is a reduced word for `w`.
    pub fn is_reduced_word_for(&self, w: &Permutation) -> bool {
        let n = w.degree().max(self.0.iter().map(|i| i + 1).max().unwrap_or(0));
        match (Permutation::from_word(self, n), w.embed(n)) {
            (Ok(x), Ok(w)) => x == w && self.len() == w.length(),
            _ => false,
        }
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        write!(f, "{}", self.0.iter().map(|i| format!("s{i}")).join("*"))
    }
}

impl FromStr for ReducedWord {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(ReducedWord(Vec::new()));
        }
        s.split('*')
            .map(|t| {
                t.trim()
                    .strip_prefix('s')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| PermError::ParseWord(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ReducedWord)
    }
}
