//! Exact determinants and ranks over `Q`.
//!
//! Rational matrices are cleared of denominators row by row (which scales
//! the determinant by a known factor and leaves the rank alone) and then
//! reduced with fraction-free Bareiss elimination. Elimination runs in
//! `i128` with overflow checks and restarts in `BigInt` if anything overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Integer domain used by the elimination. Every operation may refuse (overflow).
pub(crate) trait Domain: Clone + PartialEq + PartialOrd {
    fn from_i64(v: i64) -> Self;
    fn to_bigint(&self) -> BigInt;
    fn d_zero() -> Self;
    fn d_one() -> Self;
    fn vanishes(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    /// Exact division; the caller guarantees divisibility.
    fn div_exact(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Domain for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn d_zero() -> Self {
        0
    }
    fn d_one() -> Self {
        1
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert_eq!(self % other, 0);
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Domain for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn d_zero() -> Self {
        Zero::zero()
    }
    fn d_one() -> Self {
        One::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % other)));
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Fraction-free echelon reduction in place. Returns `(rank, sign, last pivot)`;
/// for a square full-rank matrix `sign * last pivot` is the determinant.
fn bareiss<T: Domain>(m: &mut [Vec<T>]) -> Option<(usize, bool, T)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::d_one();
    let mut rank = 0;
    let mut negated = false;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].vanishes()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            negated = !negated;
        }
        let pivot = m[rank][col].clone();
        for i in rank + 1..rows {
            let factor = m[i][col].clone();
            for j in col + 1..cols {
                let a = pivot.mul(&m[i][j])?;
                let b = factor.mul(&m[rank][j])?;
                m[i][j] = a.sub(&b)?.div_exact(&prev);
            }
            m[i][col] = T::d_zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some((rank, negated, prev))
}

fn to_i128(m: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    m.iter()
        .map(|row| row.iter().map(ToPrimitive::to_i128).collect())
        .collect()
}

/// Integer determinant.
pub fn det_integer(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    assert!(
        m.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    if n == 0 {
        return BigInt::one();
    }
    if let Some(mut small) = to_i128(m) {
        if let Some((rank, negated, last)) = bareiss(&mut small) {
            return if rank < n {
                BigInt::zero()
            } else {
                BigInt::from(if negated { -last } else { last })
            };
        }
    }
    let mut big = m.to_vec();
    let (rank, negated, last) = bareiss(&mut big).expect("BigInt never overflows");
    if rank < n {
        BigInt::zero()
    } else if negated {
        last.neg()
    } else {
        last
    }
}

/// Integer rank.
pub fn rank_integer(m: &[Vec<BigInt>]) -> usize {
    if let Some(mut small) = to_i128(m) {
        if let Some((rank, _, _)) = bareiss(&mut small) {
            return rank;
        }
    }
    let mut big = m.to_vec();
    bareiss(&mut big).expect("BigInt never overflows").0
}

/// Multiplies each row by the lcm of its denominators. Returns the integer
/// rows and the product of the multipliers.
pub fn clear_denominators(m: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let out = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            scale *= &l;
            out
        })
        .collect();
    (rows, scale)
}

/// Exact determinant of a square rational matrix.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let (ints, scale) = clear_denominators(m);
    Rational::new(det_integer(&ints), scale)
}

/// Exact rank of a rational matrix.
pub fn rank(m: &[Vec<Rational>]) -> usize {
    rank_integer(&clear_denominators(m).0)
}

pub fn transpose(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols)
                .map(|j| (0..inner).fold(Rational::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Parses `"p/q"`, `"-3"`, or `"0"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

/// `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_integral(x: &Rational) -> bool {
    x.denom().abs().is_one()
}

pub fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cofactor expansion along the first row.
    fn det_cofactor(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        if n == 0 {
            return Rational::one();
        }
        let mut total = Rational::zero();
        for j in 0..n {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * det_cofactor(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn determinant_examples() {
        let id = int_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(det(&id), Rational::one());
        let m = int_matrix(&[&[1, 0, 1], &[0, 0, 1], &[0, -1, 0]]);
        assert_eq!(det(&m), Rational::one());
        assert_eq!(det_cofactor(&m), Rational::one());
        let rep = int_matrix(&[&[1, 2, 1], &[3, 4, 3], &[5, 6, 5]]);
        assert_eq!(det(&rep), Rational::zero());
    }

    #[test]
    fn rational_entries() {
        let m = vec![vec![q(1, 2), q(1, 3)], vec![q(1, 4), q(1, 5)]];
        // 1/10 - 1/12 = 1/60
        assert_eq!(det(&m), q(1, 60));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = 1i64 << 62;
        let m = int_matrix(&[&[big, 1, 0], &[1, big, 1], &[0, 1, big]]);
        assert_eq!(det(&m), det_cofactor(&m));
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn rank_of_rectangular() {
        let m = int_matrix(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 0, 1, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&int_matrix(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&transpose(&m)), 2);
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-6/4"), Some(q(-3, 2)));
        assert_eq!(parse_rational(" 7 "), Some(q(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&q(-3, 2)), "-3/2");
        assert_eq!(format_rational(&q(4, 2)), "2");
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(entries in proptest::collection::vec((-9i64..=9, 1i64..=4), 16)) {
            let m: Vec<Vec<Rational>> = entries
                .chunks(4)
                .map(|row| row.iter().map(|&(p, d)| q(p, d)).collect())
                .collect();
            prop_assert_eq!(det(&m), det_cofactor(&m));
        }
    }
}
