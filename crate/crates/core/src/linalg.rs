//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.
//!
//! Elimination first runs in `i128` with checked arithmetic and restarts in
//! `BigInt` on overflow.

use num_bigint::BigInt;
use num_traits::{One, Zero};

trait ExactRing: Clone + Zero + One {
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn exact_div(&self, d: &Self) -> Self;
    fn from_i64(v: i64) -> Self;
}

impl ExactRing for i128 {
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }

    fn exact_div(&self, d: &Self) -> Self {
        debug_assert_eq!(self % d, 0);
        self / d
    }

    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl ExactRing for BigInt {
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }

    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

fn bareiss_rank<T: ExactRing>(rows: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<T>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let v = T::mul_sub(&a[rank][col], &a[i][j], &a[i][col], &a[rank][j])?;
                a[i][j] = v.exact_div(&prev);
            }
            a[i][col] = T::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank over the rationals of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    bareiss_rank::<i128>(rows).unwrap_or_else(|| {
        bareiss_rank::<BigInt>(rows).expect("big integer arithmetic cannot overflow")
    })
}

/// Rank computed purely in `BigInt`, for cross-checks.
pub fn rank_big(rows: &[Vec<i64>]) -> usize {
    bareiss_rank::<BigInt>(rows).expect("big integer arithmetic cannot overflow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    // Largest k with a nonzero k×k minor, by cofactor expansion.
    fn det(m: &[Vec<i128>]) -> i128 {
        if m.is_empty() {
            return 1;
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| *v).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum()
    }

    fn minor_rank(rows: &[Vec<i64>]) -> usize {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        (1..=nrows.min(ncols))
            .rev()
            .find(|&k| {
                (0..nrows).combinations(k).any(|rs| {
                    (0..ncols).combinations(k).any(|cs| {
                        let m: Vec<Vec<i128>> = rs
                            .iter()
                            .map(|&r| cs.iter().map(|&c| rows[r][c] as i128).collect())
                            .collect();
                        det(&m) != 0
                    })
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn small_examples() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 1], vec![1, -1]]), 2);
        assert_eq!(rank(&[vec![1, 1], vec![0, 1], vec![1, 2]]), 2);
        assert_eq!(rank(&[vec![0, 1, 0], vec![0, 2, 0], vec![0, 0, 3]]), 2);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 3;
        let rows = vec![
            vec![big, big - 1, 7, 1],
            vec![big - 5, big, 3, 2],
            vec![11, big - 2, big, 3],
            vec![big, 1, big - 7, big],
        ];
        assert!(bareiss_rank::<i128>(&rows).is_none());
        assert_eq!(rank(&rows), rank_big(&rows));
        assert_eq!(rank(&rows), 4);
    }

    proptest! {
        #[test]
        fn agrees_with_minor_rank(
            rows in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
                proptest::collection::vec(proptest::collection::vec(-2i64..=2, c), r)
            })
        ) {
            prop_assert_eq!(rank(&rows), minor_rank(&rows));
            prop_assert_eq!(rank(&rows), rank_big(&rows));
        }
    }
}
