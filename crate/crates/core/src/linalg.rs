//! Exact rank computation by fraction-free Gaussian elimination.
//!
//! Bareiss one-step condensation: after eliminating with pivot `p`, every
//! update `(p * a - c * b)` is exactly divisible by the previous pivot, so
//! entries stay in the coefficient ring (minors of the input matrix). Works
//! over any exact [`Scalar`]; rational inputs are usually cleared to integers
//! first.

use crate::poly::Scalar;

/// Row echelon data: the rank and the input indices of a maximal linearly
/// independent set of rows (the pivot rows, in elimination order).
pub struct Echelon {
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
}

/// Fraction-free elimination on a copy of `rows`. All rows must have equal
/// length.
pub fn eliminate<T: Scalar>(rows: &[Vec<T>]) -> Echelon {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let mut origin: Vec<usize> = (0..nrows).collect();
    let mut prev = T::one();
    let mut pivot_rows = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        origin.swap(row, p);
        for i in (row + 1)..nrows {
            for j in (col + 1)..ncols {
                let num = m[row][col].clone() * m[i][j].clone()
                    - m[i][col].clone() * m[row][j].clone();
                m[i][j] = num / prev.clone();
            }
            m[i][col] = T::zero();
        }
        prev = m[row][col].clone();
        pivot_rows.push(origin[row]);
        row += 1;
    }
    Echelon {
        rank: row,
        pivot_rows,
    }
}

/// Rank of the matrix over the fraction field of `T`.
pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    eliminate(rows).rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio, Rational};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank::<BigInt>(&[]), 0);
        assert_eq!(rank(&big(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&big(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(&big(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
    }

    #[test]
    fn rational_and_integer_agree() {
        let int_rows = big(&[&[2, 4, 6], &[1, 5, 9], &[3, 9, 15]]);
        let rat_rows: Vec<Vec<Rational>> = [[2, 4, 6], [1, 5, 9], [3, 9, 15]]
            .iter()
            .map(|r| r.iter().map(|&x| ratio(x, 7)).collect())
            .collect();
        assert_eq!(rank(&int_rows), rank(&rat_rows));
    }

    #[test]
    fn pivot_rows_span() {
        let rows = big(&[&[1, 1, 0], &[2, 2, 0], &[0, 0, 1], &[1, 1, 1]]);
        let ech = eliminate(&rows);
        assert_eq!(ech.rank, 2);
        assert_eq!(ech.pivot_rows.len(), 2);
        // the selected rows alone already have full rank
        let selected: Vec<Vec<BigInt>> =
            ech.pivot_rows.iter().map(|&i| rows[i].clone()).collect();
        assert_eq!(rank(&selected), ech.rank);
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
        (1usize..=5, 1usize..=5).prop_flat_map(|(n, m)| {
            prop::collection::vec(
                prop::collection::vec((-9i64..=9).prop_map(rat), m),
                n,
            )
        })
    }

    proptest! {
        /// Rank is invariant under appending a linear combination of rows and
        /// under row scaling.
        #[test]
        fn rank_invariances(rows in arb_matrix(), c1 in -3i64..=3, c2 in -3i64..=3) {
            let base = rank(&rows);
            prop_assert!(base <= rows.len().min(rows[0].len()));
            let combo: Vec<Rational> = (0..rows[0].len())
                .map(|j| rat(c1) * &rows[0][j] + rat(c2) * &rows[rows.len() - 1][j])
                .collect();
            let mut extended = rows.clone();
            extended.push(combo);
            prop_assert_eq!(rank(&extended), base);

            let scaled: Vec<Vec<Rational>> = rows
                .iter()
                .map(|r| r.iter().map(|x| x * ratio(3, 5)).collect())
                .collect();
            prop_assert_eq!(rank(&scaled), base);
        }
    }
}
