//! `(p, q)`-clans and their charged-matching view.
//!
//! A clan is a word of length `n = p + q` in `+`, `-` and pair labels, where
//! every label occurs exactly twice and there are `p - q` more pluses than
//! minuses. Two words that differ only by renaming labels are the same clan;
//! the canonical representative numbers pairs `1, 2, …` in order of first
//! occurrence. Every constructor canonicalizes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClanError {
    #[error("clans need p >= q >= 1, got (p, q) = ({p}, {q}); swap + and - to transpose")]
    BadShape { p: usize, q: usize },
    #[error("clan has length {found}, expected p + q = {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("clan has {plus} pluses and {minus} minuses, but (p, q) = ({p}, {q}) needs a difference of {}", *p as i64 - *q as i64)]
    SignBalance {
        p: usize,
        q: usize,
        plus: usize,
        minus: usize,
    },
    #[error("label {0} must occur exactly twice")]
    LabelCount(u32),
    #[error("malformed clan symbol {0:?}")]
    BadSymbol(String),
    #[error("clans of shapes ({0}, {1}) and ({2}, {3}) cannot be compared")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("index ({i}, {j}) outside the ranges i in 1..={q}, j in {}..={n}", p + 1)]
    IndexOutOfRange {
        i: usize,
        j: usize,
        p: usize,
        q: usize,
        n: usize,
    },
    #[error("invalid matching: {0}")]
    BadMatching(String),
    #[error("permutation {w} does not lie in S{q}")]
    NotInSq { w: Permutation, q: usize },
}

/// One entry of a clan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Symbol {
    Plus,
    Minus,
    Pair(u32),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Plus => write!(f, "+"),
            Symbol::Minus => write!(f, "-"),
            Symbol::Pair(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for Symbol {
    type Err = ClanError;

    fn from_str(s: &str) -> Result<Self, ClanError> {
        match s {
            "+" => Ok(Symbol::Plus),
            "-" | "−" => Ok(Symbol::Minus),
            _ => s
                .parse::<u32>()
                .ok()
                .filter(|&k| k > 0)
                .map(Symbol::Pair)
                .ok_or_else(|| ClanError::BadSymbol(s.to_string())),
        }
    }
}

impl TryFrom<String> for Symbol {
    type Error = ClanError;

    fn try_from(s: String) -> Result<Self, ClanError> {
        s.parse()
    }
}

impl From<Symbol> for String {
    fn from(s: Symbol) -> String {
        s.to_string()
    }
}

#[derive(Deserialize)]
struct RawClan {
    p: usize,
    q: usize,
    symbols: Vec<Symbol>,
}

/// A canonical `(p, q)`-clan.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawClan")]
pub struct Clan {
    p: usize,
    q: usize,
    symbols: Vec<Symbol>,
}

impl TryFrom<RawClan> for Clan {
    type Error = ClanError;

    fn try_from(raw: RawClan) -> Result<Self, ClanError> {
        Clan::new(raw.p, raw.q, raw.symbols)
    }
}

pub(crate) fn check_shape(p: usize, q: usize) -> Result<(), ClanError> {
    if q == 0 || p < q {
        return Err(ClanError::BadShape { p, q });
    }
    Ok(())
}

impl Clan {
    /// Validates and canonicalizes an arbitrary labelling.
    pub fn new(p: usize, q: usize, symbols: Vec<Symbol>) -> Result<Self, ClanError> {
        check_shape(p, q)?;
        if symbols.len() != p + q {
            return Err(ClanError::WrongLength {
                expected: p + q,
                found: symbols.len(),
            });
        }
        let plus = symbols.iter().filter(|s| **s == Symbol::Plus).count();
        let minus = symbols.iter().filter(|s| **s == Symbol::Minus).count();
        if plus + q != minus + p {
            return Err(ClanError::SignBalance { p, q, plus, minus });
        }
        let counts = symbols
            .iter()
            .filter_map(|s| match s {
                Symbol::Pair(k) => Some(*k),
                _ => None,
            })
            .counts();
        if let Some(k) = counts.iter().filter(|(_, &c)| c != 2).map(|(&k, _)| k).min() {
            return Err(ClanError::LabelCount(k));
        }
        let mut relabel = HashMap::new();
        let symbols = symbols
            .into_iter()
            .map(|s| match s {
                Symbol::Pair(k) => {
                    let next = relabel.len() as u32 + 1;
                    Symbol::Pair(*relabel.entry(k).or_insert(next))
                }
                other => other,
            })
            .collect();
        Ok(Self { p, q, symbols })
    }

    /// Parses compact text (`"1++2-+21+"`, single-character tokens) or
    /// whitespace-separated tokens (`"1 1 + -"`, labels unbounded).
    pub fn parse(text: &str, p: usize, q: usize) -> Result<Self, ClanError> {
        Clan::new(p, q, parse_symbols(text)?)
    }

    /// Parses a clan and reads `(p, q)` off its sign balance.
    pub fn parse_inferred(text: &str) -> Result<Self, ClanError> {
        let symbols = parse_symbols(text)?;
        let n = symbols.len();
        let plus = symbols.iter().filter(|s| **s == Symbol::Plus).count();
        let minus = symbols.iter().filter(|s| **s == Symbol::Minus).count();
        let diff = plus as i64 - minus as i64;
        if (n as i64 + diff) % 2 != 0 || diff < 0 {
            let p = ((n as i64 + diff).max(0) / 2) as usize;
            return Err(ClanError::BadShape { p, q: n - p.min(n) });
        }
        let p = ((n as i64 + diff) / 2) as usize;
        Clan::new(p, n - p, symbols)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// `c_i` for 1-based `i`.
    pub fn symbol(&self, i: usize) -> Symbol {
        self.symbols[i - 1]
    }

    pub fn pair_count(&self) -> usize {
        self.symbols
            .iter()
            .filter(|s| matches!(s, Symbol::Pair(_)))
            .count()
            / 2
    }

    /// Arcs `(i, j)`, `i < j`, 1-based, sorted by left end.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut first: HashMap<u32, usize> = HashMap::new();
        let mut arcs = Vec::new();
        for (idx, s) in self.symbols.iter().enumerate() {
            if let Symbol::Pair(k) = s {
                if let Some(i) = first.remove(k) {
                    arcs.push((i, idx + 1));
                } else {
                    first.insert(*k, idx + 1);
                }
            }
        }
        arcs.sort_unstable();
        arcs
    }

    /// For each 1-based position, the mate of a paired position.
    pub fn mates(&self) -> Vec<Option<usize>> {
        let mut mate = vec![None; self.n() + 1];
        for (i, j) in self.arcs() {
            mate[i] = Some(j);
            mate[j] = Some(i);
        }
        mate
    }

    pub fn render_compact(&self) -> Option<String> {
        self.symbols
            .iter()
            .all(|s| !matches!(s, Symbol::Pair(k) if *k > 9))
            .then(|| self.symbols.iter().join(""))
    }

    pub fn render_tokens(&self) -> String {
        self.symbols.iter().join(" ")
    }

    /// Compact text when every label is a single digit, else token form.
    pub fn render(&self) -> String {
        self.render_compact()
            .unwrap_or_else(|| self.render_tokens())
    }

    /// All canonical `(p, q)`-clans in symbol order.
    pub fn enumerate(p: usize, q: usize) -> Result<Vec<Clan>, ClanError> {
        check_shape(p, q)?;
        struct State {
            p: usize,
            q: usize,
            word: Vec<Symbol>,
            open: Vec<u32>,
            opened: usize,
            plus: usize,
            minus: usize,
            out: Vec<Clan>,
        }
        fn go(s: &mut State) {
            let n = s.p + s.q;
            if s.word.len() == n {
                if s.open.is_empty() && s.plus + s.opened == s.p && s.minus + s.opened == s.q {
                    s.out.push(Clan {
                        p: s.p,
                        q: s.q,
                        symbols: s.word.clone(),
                    });
                }
                return;
            }
            let remaining = n - s.word.len();
            if s.open.len() > remaining {
                return;
            }
            if s.plus + s.opened < s.p {
                s.plus += 1;
                s.word.push(Symbol::Plus);
                go(s);
                s.word.pop();
                s.plus -= 1;
            }
            if s.minus + s.opened < s.q {
                s.minus += 1;
                s.word.push(Symbol::Minus);
                go(s);
                s.word.pop();
                s.minus -= 1;
            }
            for idx in 0..s.open.len() {
                let k = s.open.remove(idx);
                s.word.push(Symbol::Pair(k));
                go(s);
                s.word.pop();
                s.open.insert(idx, k);
            }
            if s.plus + s.opened < s.p && s.minus + s.opened < s.q {
                s.opened += 1;
                let k = s.opened as u32;
                s.open.push(k);
                s.word.push(Symbol::Pair(k));
                go(s);
                s.word.pop();
                s.open.pop();
                s.opened -= 1;
            }
        }
        let mut state = State {
            p,
            q,
            word: Vec::with_capacity(p + q),
            open: Vec::new(),
            opened: 0,
            plus: 0,
            minus: 0,
            out: Vec::new(),
        };
        go(&mut state);
        let mut out = state.out;
        out.sort();
        Ok(out)
    }

    /// The dense-orbit clan `1 2 … q + … + q … 2 1`.
    pub fn gamma0(p: usize, q: usize) -> Result<Clan, ClanError> {
        Clan::gamma_w(&Permutation::longest(q), p)
    }

    /// `+ … + - … -` with `p` pluses.
    pub fn sigma(p: usize, q: usize) -> Result<Clan, ClanError> {
        check_shape(p, q)?;
        let mut symbols = vec![Symbol::Plus; p];
        symbols.extend(std::iter::repeat_n(Symbol::Minus, q));
        Clan::new(p, q, symbols)
    }

    /// `- … - + … +` with `q` minuses.
    pub fn tau(p: usize, q: usize) -> Result<Clan, ClanError> {
        check_shape(p, q)?;
        let mut symbols = vec![Symbol::Minus; q];
        symbols.extend(std::iter::repeat_n(Symbol::Plus, p));
        Clan::new(p, q, symbols)
    }

    /// The clan `1 … q`, then `p - q` pluses, then `w(1) … w(q)`.
    pub fn gamma_w(w: &Permutation, p: usize) -> Result<Clan, ClanError> {
        let q = w.degree();
        check_shape(p, q)?;
        let mut symbols: Vec<Symbol> = (1..=q as u32).map(Symbol::Pair).collect();
        symbols.extend(std::iter::repeat_n(Symbol::Plus, p - q));
        symbols.extend(w.images().iter().map(|&v| Symbol::Pair(v as u32)));
        Ok(Clan { p, q, symbols })
    }

    /// Inverse of [`Clan::gamma_w`] on its image.
    pub fn as_gamma_w(&self) -> Option<Permutation> {
        let (p, q) = (self.p, self.q);
        let head_ok = (0..q).all(|i| self.symbols[i] == Symbol::Pair(i as u32 + 1));
        let mid_ok = self.symbols[q..p].iter().all(|s| *s == Symbol::Plus);
        if !head_ok || !mid_ok {
            return None;
        }
        let tail: Option<Vec<usize>> = self.symbols[p..]
            .iter()
            .map(|s| match s {
                Symbol::Pair(k) => Some(*k as usize),
                _ => None,
            })
            .collect();
        Permutation::new(tail?).ok()
    }

    /// `{γ_w : w ∈ S_q}` in symbol order.
    pub fn interval_clans(p: usize, q: usize) -> Result<Vec<Clan>, ClanError> {
        check_shape(p, q)?;
        let mut out: Vec<Clan> = Permutation::all(q)
            .map(|w| Clan::gamma_w(&w, p))
            .collect::<Result<_, _>>()?;
        out.sort();
        Ok(out)
    }

    pub fn statistics(&self) -> ClanStatistics {
        ClanStatistics::of(self)
    }

    /// `γ ≤ τ` in the inclusion order of orbit closures.
    pub fn inclusion_leq(&self, other: &Clan) -> Result<bool, ClanError> {
        if (self.p, self.q) != (other.p, other.q) {
            return Err(ClanError::ShapeMismatch(self.p, self.q, other.p, other.q));
        }
        Ok(self.statistics().leq(&other.statistics()))
    }

    /// Sum over arcs `(i, j)` of `j - i` minus the arcs `(s, t)` with `s < i < t < j`.
    pub fn clan_length(&self) -> usize {
        let arcs = self.arcs();
        arcs.iter()
            .map(|&(i, j)| {
                let crossing = arcs
                    .iter()
                    .filter(|&&(s, t)| s < i && i < t && t < j)
                    .count();
                j - i - crossing
            })
            .sum()
    }

    pub fn orbit_dimension(&self) -> usize {
        self.clan_length() + self.p * (self.p - 1) / 2 + self.q * (self.q - 1) / 2
    }

    /// `n(n-1)/2 - dim O_γ`.
    pub fn codimension(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2 - self.orbit_dimension()
    }

    pub fn to_matching(&self) -> ChargedMatching {
        let charges = self
            .symbols
            .iter()
            .enumerate()
            .filter_map(|(idx, s)| match s {
                Symbol::Plus => Some((idx + 1, Charge::Plus)),
                Symbol::Minus => Some((idx + 1, Charge::Minus)),
                Symbol::Pair(_) => None,
            })
            .collect();
        ChargedMatching {
            n: self.n(),
            arcs: self.arcs(),
            charges,
        }
    }

    pub fn from_matching(m: &ChargedMatching) -> Result<Clan, ClanError> {
        m.validate()?;
        let mut symbols = vec![Symbol::Plus; m.n];
        for (&i, c) in &m.charges {
            symbols[i - 1] = match c {
                Charge::Plus => Symbol::Plus,
                Charge::Minus => Symbol::Minus,
            };
        }
        for (k, &(i, j)) in m.arcs.iter().enumerate() {
            symbols[i - 1] = Symbol::Pair(k as u32 + 1);
            symbols[j - 1] = Symbol::Pair(k as u32 + 1);
        }
        let plus = m.charges.values().filter(|c| **c == Charge::Plus).count();
        let l = m.arcs.len();
        let p = plus + l;
        Clan::new(p, m.n - p, symbols)
    }
}

fn parse_symbols(text: &str) -> Result<Vec<Symbol>, ClanError> {
    let text = text.trim();
    if text.split_whitespace().count() > 1 {
        text.split_whitespace().map(str::parse).collect()
    } else {
        text.chars().map(|c| c.to_string().parse()).collect()
    }
}

impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// `+` or `-` on an unmatched vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Charge {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// Arcs on `1..=n` for label pairs, charges on the remaining vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargedMatching {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
    pub charges: BTreeMap<usize, Charge>,
}

impl ChargedMatching {
    pub fn validate(&self) -> Result<(), ClanError> {
        let mut used = vec![false; self.n + 1];
        let mut mark = |v: usize| -> Result<(), ClanError> {
            if v == 0 || v > self.n {
                return Err(ClanError::BadMatching(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut used[v], true) {
                return Err(ClanError::BadMatching(format!("vertex {v} used twice")));
            }
            Ok(())
        };
        for &(i, j) in &self.arcs {
            if i >= j {
                return Err(ClanError::BadMatching(format!("arc ({i}, {j}) not increasing")));
            }
            mark(i)?;
            mark(j)?;
        }
        for &v in self.charges.keys() {
            mark(v)?;
        }
        if let Some(v) = (1..=self.n).find(|&v| !used[v]) {
            return Err(ClanError::BadMatching(format!("vertex {v} is neither matched nor charged")));
        }
        Ok(())
    }
}

/// Sign counts and nesting counts of a clan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClanStatistics {
    n: usize,
    /// `γ(i;+)` for `i = 1..=n`.
    pub plus_counts: Vec<usize>,
    /// `γ(i;-)` for `i = 1..=n`.
    pub minus_counts: Vec<usize>,
    /// Row-major `n × n`; entry `(i-1, j-1)` holds `γ(i, j)` for `i < j`, zero otherwise.
    pair_matrix: Vec<usize>,
}

impl ClanStatistics {
    fn of(clan: &Clan) -> Self {
        let n = clan.n();
        let mates = clan.mates();
        let mut plus_counts = Vec::with_capacity(n);
        let mut minus_counts = Vec::with_capacity(n);
        let (mut plus, mut minus) = (0, 0);
        for i in 1..=n {
            match clan.symbol(i) {
                Symbol::Plus => plus += 1,
                Symbol::Minus => minus += 1,
                Symbol::Pair(_) => {
                    if mates[i].is_some_and(|m| m < i) {
                        plus += 1;
                        minus += 1;
                    }
                }
            }
            plus_counts.push(plus);
            minus_counts.push(minus);
        }
        let arcs = clan.arcs();
        let mut pair_matrix = vec![0; n * n];
        for i in 1..=n {
            for j in i + 1..=n {
                pair_matrix[(i - 1) * n + (j - 1)] =
                    arcs.iter().filter(|&&(s, t)| s <= i && j < t).count();
            }
        }
        Self {
            n,
            plus_counts,
            minus_counts,
            pair_matrix,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `γ(i, j)` for `1 ≤ i < j ≤ n`; zero outside that range.
    pub fn pair(&self, i: usize, j: usize) -> usize {
        if i == 0 || i >= j || j > self.n {
            0
        } else {
            self.pair_matrix[(i - 1) * self.n + (j - 1)]
        }
    }

    /// The three-way comparison deciding the inclusion order.
    pub fn leq(&self, other: &ClanStatistics) -> bool {
        self.n == other.n
            && self
                .plus_counts
                .iter()
                .zip(&other.plus_counts)
                .all(|(a, b)| a >= b)
            && self
                .minus_counts
                .iter()
                .zip(&other.minus_counts)
                .all(|(a, b)| a >= b)
            && self
                .pair_matrix
                .iter()
                .zip(&other.pair_matrix)
                .all(|(a, b)| a <= b)
    }
}

/// `#{k ≤ i : w⁻¹(k) > j - p}` for `i ≤ q < p < j ≤ n`.
pub fn gamma_w_pair_statistic(
    w: &Permutation,
    p: usize,
    i: usize,
    j: usize,
) -> Result<usize, ClanError> {
    let q = w.degree();
    let n = p + q;
    if i == 0 || i > q || j <= p || j > n {
        return Err(ClanError::IndexOutOfRange { i, j, p, q, n });
    }
    let inv = w.inverse();
    Ok((1..=i).filter(|&k| inv.apply(k) > j - p).count())
}

/// `Σ_ℓ C(n, 2ℓ) (2ℓ-1)!! C(n-2ℓ, p-ℓ)`.
pub fn clan_count(p: usize, q: usize) -> u128 {
    fn binom(n: usize, k: usize) -> u128 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
    }
    let n = p + q;
    (0..=q.min(p))
        .map(|l| {
            let double_fact: u128 = (1..=l).map(|k| (2 * k - 1) as u128).product();
            binom(n, 2 * l) * double_fact * binom(n - 2 * l, p - l)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(text: &str, p: usize, q: usize) -> Clan {
        Clan::parse(text, p, q).unwrap()
    }

    #[test]
    fn canonical_relabelling() {
        assert_eq!(c("5++3-+35+", 6, 3).render(), "1++2-+21+");
        assert_eq!(c("+-", 1, 1).render(), "+-");
        assert_eq!(c("1 1 + -", 2, 2).render(), "11+-");
        assert_eq!(c("22", 1, 1), c("11", 1, 1));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Clan::parse("+-+", 1, 1), Err(ClanError::WrongLength { .. })));
        assert!(matches!(Clan::parse("++", 1, 1), Err(ClanError::SignBalance { .. })));
        assert!(matches!(Clan::parse("1+-2", 2, 2), Err(ClanError::LabelCount(1))));
        assert!(matches!(Clan::parse("+-", 0, 2), Err(ClanError::BadShape { .. })));
        assert!(matches!(Clan::parse("-+--", 1, 3), Err(ClanError::BadShape { .. })));
        assert!(matches!(Clan::parse("x+", 1, 1), Err(ClanError::BadSymbol(_))));
    }

    #[test]
    fn inferred_shape() {
        let g = Clan::parse_inferred("+1+-2+21").unwrap();
        assert_eq!((g.p(), g.q()), (5, 3));
        assert!(Clan::parse_inferred("--+").is_err());
    }

    #[test]
    fn token_form_for_large_labels() {
        let w = Permutation::longest(10);
        let g = Clan::gamma_w(&w, 10).unwrap();
        assert!(g.render_compact().is_none());
        assert!(g.render().starts_with("1 2 3"));
        assert_eq!(Clan::parse(&g.render(), 10, 10).unwrap(), g);
    }

    #[test]
    fn small_enumerations() {
        let got: Vec<String> = Clan::enumerate(1, 1).unwrap().iter().map(Clan::render).collect();
        assert_eq!(got, vec!["+-", "-+", "11"]);
        assert_eq!(Clan::enumerate(2, 1).unwrap().len(), 6);
        assert_eq!(Clan::enumerate(2, 2).unwrap().len(), 21);
    }

    // Brute force: every word over {+, -, 1..n/2} that survives validation.
    fn brute_clans(p: usize, q: usize) -> std::collections::BTreeSet<Clan> {
        let n = p + q;
        let alphabet: Vec<Symbol> = [Symbol::Plus, Symbol::Minus]
            .into_iter()
            .chain((1..=(n / 2) as u32).map(Symbol::Pair))
            .collect();
        (0..n)
            .map(|_| alphabet.iter().copied())
            .multi_cartesian_product()
            .filter_map(|word| Clan::new(p, q, word).ok())
            .collect()
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 2), (3, 3)] {
            let fast: std::collections::BTreeSet<_> = Clan::enumerate(p, q).unwrap().into_iter().collect();
            assert_eq!(fast, brute_clans(p, q), "(p, q) = ({p}, {q})");
        }
    }

    #[test]
    fn counting_formula() {
        assert_eq!(clan_count(1, 1), 3);
        assert_eq!(clan_count(2, 1), 6);
        assert_eq!(clan_count(2, 2), 21);
        for p in 1..=6 {
            for q in 1..=p.min(9 - p) {
                assert_eq!(Clan::enumerate(p, q).unwrap().len() as u128, clan_count(p, q));
            }
        }
    }

    #[test]
    fn statistics_example() {
        let g = c("+1+-2+21", 5, 3);
        let st = g.statistics();
        assert_eq!(st.plus_counts, vec![1, 1, 2, 2, 2, 3, 4, 5]);
        assert_eq!(st.minus_counts, vec![0, 0, 0, 1, 1, 1, 2, 3]);
        assert_eq!(st.pair(2, 3), 1);
        assert_eq!(st.pair(5, 6), 2);
        assert_eq!(st.pair(6, 5), 0);
    }

    #[test]
    fn gamma0_statistics_closed_form() {
        // γ₀ pairs s with n+1-s for s ≤ q.
        for q in 1..=4 {
            for p in q..=q + 2 {
                let n = p + q;
                let st = Clan::gamma0(p, q).unwrap().statistics();
                for i in 1..=n {
                    assert_eq!(st.plus_counts[i - 1], i.saturating_sub(q));
                    assert_eq!(st.minus_counts[i - 1], i.saturating_sub(p));
                    for j in i + 1..=n {
                        assert_eq!(st.pair(i, j), i.min(n - j).min(q), "({p},{q}) ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_w_examples() {
        let w: Permutation = "213".parse().unwrap();
        assert_eq!(Clan::gamma_w(&w, 5).unwrap().render(), "123++213");
        assert_eq!(Clan::gamma_w(&Permutation::longest(3), 3).unwrap().render(), "123321");
        assert_eq!(Clan::gamma0(3, 3).unwrap().render(), "123321");
        assert_eq!(Clan::gamma_w(&Permutation::identity(1), 4).unwrap().render(), "1+++1");
        assert_eq!(Clan::gamma_w(&w, 5).unwrap().as_gamma_w(), Some(w));
        assert_eq!(c("+1+-2+21", 5, 3).as_gamma_w(), None);
    }

    #[test]
    fn interval_examples() {
        let names = |p, q| -> Vec<String> {
            Clan::interval_clans(p, q).unwrap().iter().map(Clan::render).collect()
        };
        assert_eq!(names(1, 1), vec!["11"]);
        assert_eq!(names(2, 2), vec!["1212", "1221"]);
        assert_eq!(
            names(3, 3),
            vec!["123123", "123132", "123213", "123231", "123312", "123321"]
        );
    }

    #[test]
    fn pair_statistic_examples() {
        let w: Permutation = "213".parse().unwrap();
        assert_eq!(gamma_w_pair_statistic(&w, 5, 3, 7).unwrap(), 1);
        let w2: Permutation = "132".parse().unwrap();
        assert_eq!(gamma_w_pair_statistic(&w2, 5, 1, 6).unwrap(), 0);
        assert_eq!(gamma_w_pair_statistic(&w2, 5, 3, 8).unwrap(), 0);
        assert!(gamma_w_pair_statistic(&w2, 5, 4, 8).is_err());
        assert!(gamma_w_pair_statistic(&w2, 5, 1, 5).is_err());
    }

    #[test]
    fn gamma_w_statistics_differ_from_gamma0_only_in_the_corner() {
        for q in 1..=4 {
            for p in q..=q + 2 {
                let n = p + q;
                let top = Clan::gamma0(p, q).unwrap().statistics();
                for w in Permutation::all(q) {
                    let st = Clan::gamma_w(&w, p).unwrap().statistics();
                    assert_eq!(st.plus_counts, top.plus_counts);
                    assert_eq!(st.minus_counts, top.minus_counts);
                    for i in 1..=n {
                        for j in i + 1..=n {
                            if i <= q && j > p {
                                assert_eq!(st.pair(i, j), gamma_w_pair_statistic(&w, p, i, j).unwrap());
                            } else {
                                assert_eq!(st.pair(i, j), top.pair(i, j), "w={w} ({i},{j})");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inclusion_examples() {
        for g in Clan::enumerate(2, 2).unwrap() {
            assert!(g.inclusion_leq(&g).unwrap());
        }
        for (p, q) in [(2, 2), (3, 2), (4, 1)] {
            let top = Clan::gamma0(p, q).unwrap();
            for g in Clan::enumerate(p, q).unwrap() {
                assert!(g.inclusion_leq(&top).unwrap());
            }
        }
        assert!(c("123123", 3, 3).inclusion_leq(&c("123321", 3, 3)).unwrap());
        assert!(c("+-", 1, 1).inclusion_leq(&c("+1-1", 2, 2)).is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(c("++--", 2, 2).clan_length(), 0);
        assert_eq!(c("1122", 2, 2).clan_length(), 2);
        assert_eq!(c("1212", 2, 2).clan_length(), 3);
        for (p, q) in [(1, 1), (2, 2), (3, 2), (5, 3)] {
            let n = p + q;
            assert_eq!(Clan::gamma0(p, q).unwrap().orbit_dimension(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn matching_round_trip() {
        let g = c("+1+-2+21", 5, 3);
        let m = g.to_matching();
        assert_eq!(m.arcs, vec![(2, 8), (5, 7)]);
        assert_eq!(m.charges[&4], Charge::Minus);
        assert_eq!(Clan::from_matching(&m).unwrap(), g);
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"charges\":{\"1\":\"+\""));
        let back: ChargedMatching = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        let bad = ChargedMatching {
            n: 3,
            arcs: vec![(1, 2)],
            charges: BTreeMap::new(),
        };
        assert!(Clan::from_matching(&bad).is_err());
    }

    #[test]
    fn clan_json() {
        let g = c("1++2-+21+", 6, 3);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            r#"{"p":6,"q":3,"symbols":["1","+","+","2","-","+","2","1","+"]}"#
        );
        let back: Clan = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        let relabelled: Clan =
            serde_json::from_str(r#"{"p":1,"q":1,"symbols":["7","7"]}"#).unwrap();
        assert_eq!(relabelled.render(), "11");
        assert!(serde_json::from_str::<Clan>(r#"{"p":1,"q":1,"symbols":["+","+"]}"#).is_err());
    }

    #[test]
    fn sigma_tau() {
        assert_eq!(Clan::sigma(3, 2).unwrap().render(), "+++--");
        assert_eq!(Clan::tau(3, 2).unwrap().render(), "--+++");
    }

    fn arb_clan() -> impl Strategy<Value = Clan> {
        (1usize..=4)
            .prop_flat_map(|q| (q..=q + 2).prop_map(move |p| (p, q)))
            .prop_flat_map(|(p, q)| {
                let all = Clan::enumerate(p, q).unwrap();
                proptest::sample::select(all)
            })
    }

    proptest! {
        #[test]
        fn statistics_invariants(g in arb_clan()) {
            let st = g.statistics();
            let n = g.n();
            prop_assert_eq!(st.plus_counts[n - 1], g.p());
            prop_assert_eq!(st.minus_counts[n - 1], g.q());
            let mut prev = (0, 0);
            for i in 0..n {
                prop_assert!(st.plus_counts[i] - prev.0 <= 1);
                prop_assert!(st.minus_counts[i] - prev.1 <= 1);
                prev = (st.plus_counts[i], st.minus_counts[i]);
            }
            for j in 1..=n {
                for i in 1..j {
                    let step = st.pair(i, j) as i64 - st.pair(i - 1, j) as i64;
                    prop_assert!(step == 0 || step == 1);
                }
            }
        }

        #[test]
        fn text_and_matching_round_trip(g in arb_clan()) {
            prop_assert_eq!(Clan::parse(&g.render(), g.p(), g.q()).unwrap(), g.clone());
            prop_assert_eq!(Clan::parse(&g.render_tokens(), g.p(), g.q()).unwrap(), g.clone());
            prop_assert_eq!(Clan::from_matching(&g.to_matching()).unwrap(), g.clone());
            let json = serde_json::to_string(&g).unwrap();
            prop_assert_eq!(serde_json::from_str::<Clan>(&json).unwrap(), g);
        }

    }
}
