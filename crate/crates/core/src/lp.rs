//! Exact dense simplex for `max c·x  s.t.  A x <= b, x >= 0` with `b >= 0`.
//!
//! The origin is feasible, so a single phase suffices. Pivoting follows
//! Bland's rule (smallest eligible index both entering and leaving), which
//! cannot cycle. The tableau is kept fraction-free: every entry is an integer
//! over the common denominator of the last pivot, and each pivot divides
//! exactly by the previous one. Arithmetic runs in checked `i128` first and
//! is redone in `BigInt` if anything overflows.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::Domain;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: BigRational,
        x: Vec<BigRational>,
    },
    Unbounded,
}

/// Solves `max c·x` subject to `a x <= b`, `x >= 0`. Every `b[i]` must be
/// non-negative.
pub fn maximize(c: &[i64], a: &[Vec<i64>], b: &[i64]) -> LpOutcome {
    assert_eq!(a.len(), b.len(), "one bound per constraint row");
    assert!(b.iter().all(|&v| v >= 0), "origin must be feasible");
    assert!(
        a.iter().all(|row| row.len() == c.len()),
        "ragged constraint matrix"
    );
    if let Some(outcome) = simplex::<i128>(c, a, b) {
        return outcome;
    }
    simplex::<BigInt>(c, a, b).expect("BigInt never overflows")
}

fn simplex<T: Domain>(c: &[i64], a: &[Vec<i64>], b: &[i64]) -> Option<LpOutcome> {
    let m = a.len();
    let n = c.len();
    let width = n + m + 1; // decision variables, slacks, right-hand side
    let rhs = n + m;
    let zero = T::d_zero();
    // rows 0..m are constraints, row m holds the reduced costs
    let mut tab: Vec<Vec<T>> = (0..m)
        .map(|i| {
            let mut row = vec![T::d_zero(); width];
            for j in 0..n {
                row[j] = T::from_i64(a[i][j]);
            }
            row[n + i] = T::d_one();
            row[rhs] = T::from_i64(b[i]);
            row
        })
        .collect();
    tab.push(
        (0..width)
            .map(|j| {
                if j < n {
                    T::from_i64(c[j])
                } else {
                    T::d_zero()
                }
            })
            .collect(),
    );
    let mut denom = T::d_one();
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&j| tab[m][j] > zero) {
        // minimum ratio rhs/entry; all rows share the denominator
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if tab[i][enter] <= zero {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let lhs = tab[i][rhs].mul(&tab[l][enter])?;
                    let rhs_ = tab[l][rhs].mul(&tab[i][enter])?;
                    if lhs < rhs_ || (lhs == rhs_ && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let Some(row) = leave else {
            return Some(LpOutcome::Unbounded);
        };
        let pivot = tab[row][enter].clone();
        for i in 0..=m {
            if i == row {
                continue;
            }
            let factor = tab[i][enter].clone();
            for j in 0..width {
                let scaled = pivot.mul(&tab[i][j])?;
                let cross = factor.mul(&tab[row][j])?;
                tab[i][j] = scaled.sub(&cross)?.div_exact(&denom);
            }
        }
        denom = pivot;
        basis[row] = enter;
    }

    let d = denom.to_bigint();
    let mut x = vec![BigRational::zero(); n];
    for (i, &v) in basis.iter().enumerate() {
        if v < n {
            x[v] = BigRational::new(tab[i][rhs].to_bigint(), d.clone());
        }
    }
    let value = c
        .iter()
        .zip(&x)
        .fold(BigRational::zero(), |acc, (&cj, xj)| {
            acc + xj * BigRational::from_integer(cj.into())
        });
    Some(LpOutcome::Optimal { value, x })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn textbook_problem() {
        // max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
        let out = maximize(&[3, 5], &[vec![1, 0], vec![0, 2], vec![3, 2]], &[4, 12, 18]);
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: q(36, 1),
                x: vec![q(2, 1), q(6, 1)]
            }
        );
    }

    #[test]
    fn fractional_optimum() {
        // max x + y  s.t.  2x + y <= 1, x + 2y <= 1  ->  2/3 at (1/3, 1/3)
        let out = maximize(&[1, 1], &[vec![2, 1], vec![1, 2]], &[1, 1]);
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: q(2, 3),
                x: vec![q(1, 3), q(1, 3)]
            }
        );
    }

    #[test]
    fn unbounded_is_reported() {
        assert_eq!(
            maximize(&[1, 0], &[vec![-1, 1]], &[0]),
            LpOutcome::Unbounded
        );
    }

    #[test]
    fn degenerate_start_terminates() {
        // all right-hand sides zero: optimum 0 at the origin
        let out = maximize(
            &[1, 1, 0],
            &[
                vec![1, -1, 0],
                vec![-1, 1, 0],
                vec![1, 1, -1],
                vec![0, 0, 1],
            ],
            &[0, 0, 0, 2],
        );
        match out {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(2, 1)),
            LpOutcome::Unbounded => panic!("bounded problem"),
        }
    }

    #[test]
    fn huge_coefficients_use_big_rationals() {
        let big = i64::MAX / 2;
        let out = maximize(&[big, big], &[vec![big, 1], vec![1, big]], &[big, big]);
        let LpOutcome::Optimal { value, .. } = out else {
            panic!("bounded problem")
        };
        // symmetric optimum x = y = big / (big + 1)
        let b = BigRational::from_integer(big.into());
        let expected = &b * BigRational::from_integer(2.into()) * &b
            / (&b + BigRational::from_integer(1.into()));
        assert_eq!(value, expected);
    }

    /// Best feasible vertex among all pairwise intersections of constraint lines.
    fn brute_force_2d(c: &[i64], a: &[Vec<i64>], b: &[i64]) -> BigRational {
        let mut lines: Vec<(i64, i64, i64)> =
            a.iter().zip(b).map(|(r, &v)| (r[0], r[1], v)).collect();
        lines.push((-1, 0, 0));
        lines.push((0, -1, 0));
        let mut best: Option<BigRational> = None;
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let (a1, b1, c1) = lines[i];
                let (a2, b2, c2) = lines[j];
                let det = a1 * b2 - a2 * b1;
                if det == 0 {
                    continue;
                }
                let x = q(c1 * b2 - c2 * b1, det);
                let y = q(a1 * c2 - a2 * c1, det);
                let feasible = lines
                    .iter()
                    .all(|&(p, r, v)| q(p, 1) * &x + q(r, 1) * &y <= q(v, 1));
                if feasible {
                    let value = q(c[0], 1) * &x + q(c[1], 1) * &y;
                    if best.as_ref().is_none_or(|b| value > *b) {
                        best = Some(value);
                    }
                }
            }
        }
        best.expect("the origin is a feasible vertex")
    }

    proptest::proptest! {
        #[test]
        fn matches_vertex_enumeration(
            c in proptest::collection::vec(-5i64..=5, 2),
            rows in proptest::collection::vec((-4i64..=4, -4i64..=4, 0i64..=6), 0..5),
        ) {
            let mut a: Vec<Vec<i64>> = rows.iter().map(|&(p, r, _)| vec![p, r]).collect();
            let mut b: Vec<i64> = rows.iter().map(|&(_, _, v)| v).collect();
            a.push(vec![1, 0]);
            a.push(vec![0, 1]);
            b.push(7);
            b.push(7);
            let LpOutcome::Optimal { value, x } = maximize(&c, &a, &b) else {
                panic!("box-bounded problem reported unbounded");
            };
            proptest::prop_assert_eq!(&value, &brute_force_2d(&c, &a, &b));
            for (row, bound) in a.iter().zip(&b) {
                let lhs = q(row[0], 1) * &x[0] + q(row[1], 1) * &x[1];
                proptest::prop_assert!(lhs <= q(*bound, 1));
            }
        }
    }
}
