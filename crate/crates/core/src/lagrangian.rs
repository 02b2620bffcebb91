//! Admissible sets and Lagrangian matroids.
//!
//! An admissible set picks exactly one of `i`, `i*` for every `i` in `1..=n`;
//! it is stored as a sign vector (`+` for `i`, `-` for `i*`), so a set holding
//! both or neither is not representable. Bases render as `12*3`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::map::{EdgeSubset, OrientedMap};

/// Which of `i`, `i*` an admissible set contains at position `i`.
///
/// `Plus` sorts before `Minus`, so the smallest admissible set is `12...n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleSet {
    signs: Vec<Sign>,
}

impl AdmissibleSet {
    pub fn new(signs: Vec<Sign>) -> Self {
        AdmissibleSet { signs }
    }

    /// `{1, ..., n}`.
    pub fn unstarred(n: usize) -> Self {
        AdmissibleSet {
            signs: vec![Sign::Plus; n],
        }
    }

    /// Starred exactly at the edges of `starred`.
    pub fn from_starred(starred: &EdgeSubset) -> Self {
        AdmissibleSet {
            signs: (1..=starred.n())
                .map(|j| {
                    if starred.contains(j) {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Sign at the 1-based position `i`.
    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i - 1]
    }

    pub fn is_starred(&self, i: usize) -> bool {
        self.sign(i) == Sign::Minus
    }

    /// Positions holding `i*`.
    pub fn starred(&self) -> EdgeSubset {
        EdgeSubset::new(self.n(), (1..=self.n()).filter(|&i| self.is_starred(i)))
            .expect("positions are in range")
    }

    /// `B ∩ [n]`.
    pub fn unstarred_part(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| !self.is_starred(i)).collect()
    }

    /// Symmetric difference with `A ∪ A*`: flips the signs at the positions of `a`.
    pub fn twist(&self, a: &EdgeSubset) -> Result<Self> {
        if a.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: a.n(),
            });
        }
        Ok(AdmissibleSet {
            signs: self
                .signs
                .iter()
                .enumerate()
                .map(|(i, s)| if a.contains(i + 1) { s.flip() } else { *s })
                .collect(),
        })
    }

    pub(crate) fn flipped(&self, positions: &[usize]) -> Self {
        let mut signs = self.signs.clone();
        for &i in positions {
            signs[i] = signs[i].flip();
        }
        AdmissibleSet { signs }
    }

    /// Positions (0-based) where the two sets differ, i.e. the indices of `A △ B`.
    pub(crate) fn differences(&self, other: &Self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.signs[i] != other.signs[i])
            .collect()
    }

    /// Moves the entry at position `i` to position `f(i)` (1-based images).
    pub(crate) fn permute_positions(&self, images: &[usize]) -> Self {
        let mut signs = vec![Sign::Plus; self.n()];
        for (i, s) in self.signs.iter().enumerate() {
            signs[images[i] - 1] = *s;
        }
        AdmissibleSet { signs }
    }

    /// All `2^n` admissible sets in ascending order.
    pub fn all(n: usize) -> impl Iterator<Item = AdmissibleSet> {
        assert!(n < 64);
        (0..1u64 << n).map(move |mask| AdmissibleSet {
            // most significant position first so that the order is ascending
            signs: (0..n)
                .map(|i| {
                    if mask >> (n - 1 - i) & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect(),
        })
    }
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.signs.iter().enumerate() {
            write!(f, "{}", i + 1)?;
            if *s == Sign::Minus {
                write!(f, "*")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl AdmissibleSet {
    /// Parses `"12*3"`. Labels must appear once each, in increasing order.
    /// For `n >= 10` labels are separated by spaces or commas: `"1 2* ... 10"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let bad = || Error::BadBase(text.to_string());
        let tokens: Vec<(usize, bool)> = if text.contains([' ', ',']) {
            text.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    let (digits, star) = match t.strip_suffix('*') {
                        Some(d) => (d, true),
                        None => (t, false),
                    };
                    digits
                        .parse::<usize>()
                        .map(|i| (i, star))
                        .map_err(|_| bad())
                })
                .collect::<Result<_>>()?
        } else {
            let mut out = Vec::new();
            let mut chars = text.chars().peekable();
            while let Some(c) = chars.next() {
                let i = c.to_digit(10).ok_or_else(bad)? as usize;
                let star = chars.next_if_eq(&'*').is_some();
                out.push((i, star));
            }
            out
        };
        if tokens.len() != n || tokens.iter().enumerate().any(|(k, &(i, _))| i != k + 1) {
            return Err(bad());
        }
        Ok(AdmissibleSet {
            signs: tokens
                .into_iter()
                .map(|(_, star)| if star { Sign::Minus } else { Sign::Plus })
                .collect(),
        })
    }
}

impl FromStr for AdmissibleSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.chars().filter(|c| c.is_ascii_digit()).count();
        AdmissibleSet::parse(s, n)
    }
}

/// A duplicate-free, sorted, non-empty collection of admissible sets of one size.
///
/// Construction from a raw list does not check the symmetric exchange axiom;
/// call [`LagrangianMatroid::check_symmetric_exchange`] for that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LagrangianMatroid {
    n: usize,
    bases: Vec<AdmissibleSet>,
}

/// A failing instance of the symmetric exchange axiom: no `k` repairs `(a, b, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub a: AdmissibleSet,
    pub b: AdmissibleSet,
    pub j: usize,
}

impl LagrangianMatroid {
    pub fn new(n: usize, bases: impl IntoIterator<Item = AdmissibleSet>) -> Result<Self> {
        let mut bases: Vec<AdmissibleSet> = bases.into_iter().collect();
        if let Some(b) = bases.iter().find(|b| b.n() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                got: b.n(),
            });
        }
        if bases.is_empty() {
            return Err(Error::BadBase("empty collection".into()));
        }
        bases.sort();
        bases.dedup();
        Ok(LagrangianMatroid { n, bases })
    }

    pub fn parse(n: usize, bases: &[impl AsRef<str>]) -> Result<Self> {
        LagrangianMatroid::new(
            n,
            bases
                .iter()
                .map(|b| AdmissibleSet::parse(b.as_ref(), n))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bases(&self) -> &[AdmissibleSet] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn contains(&self, b: &AdmissibleSet) -> bool {
        self.bases.binary_search(b).is_ok()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.bases.iter().map(ToString::to_string).collect()
    }

    /// `{B △ (A ∪ A*) : B ∈ 𝓑}`.
    pub fn twist(&self, a: &EdgeSubset) -> Result<Self> {
        LagrangianMatroid::new(
            self.n,
            self.bases
                .iter()
                .map(|b| b.twist(a))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// For every ordered pair `(A, B)` and every `j ∈ A △ B` some `k ∈ A △ B`
    /// must give `A △ {j, j*, k, k*}` in the collection (`k = j` meaning
    /// `A △ {j, j*}`). Returns the first failing `(A, B, j)`.
    pub fn check_symmetric_exchange(&self) -> std::result::Result<(), ExchangeWitness> {
        for a in &self.bases {
            for b in &self.bases {
                let diff = a.differences(b);
                for &j in &diff {
                    let repaired = diff.iter().any(|&k| {
                        let candidate = if k == j {
                            a.flipped(&[j])
                        } else {
                            a.flipped(&[j, k])
                        };
                        self.contains(&candidate)
                    });
                    if !repaired {
                        return Err(ExchangeWitness {
                            a: a.clone(),
                            b: b.clone(),
                            j: j + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn satisfies_symmetric_exchange(&self) -> bool {
        self.check_symmetric_exchange().is_ok()
    }

    /// True iff the unstarred parts are equicardinal and satisfy basis exchange.
    pub fn is_matroid(&self) -> bool {
        let parts: Vec<Vec<usize>> = self.bases.iter().map(|b| b.unstarred_part()).collect();
        let rank = parts[0].len();
        if parts.iter().any(|p| p.len() != rank) {
            return false;
        }
        let set: std::collections::HashSet<&Vec<usize>> = parts.iter().collect();
        for b1 in &parts {
            for b2 in &parts {
                for x in b1.iter().filter(|x| !b2.contains(x)) {
                    let exchanged = b2.iter().filter(|y| !b1.contains(y)).any(|y| {
                        let mut c: Vec<usize> =
                            b1.iter().copied().filter(|z| z != x).chain([*y]).collect();
                        c.sort_unstable();
                        set.contains(&c)
                    });
                    if !exchanged {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Applies the position relabelling `f` (1-based images) to every base.
    pub fn relabel(&self, images: &[usize]) -> Self {
        LagrangianMatroid::new(
            self.n,
            self.bases.iter().map(|b| b.permute_positions(images)),
        )
        .expect("relabelling preserves size")
    }
}

impl fmt::Debug for LagrangianMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.bases).finish()
    }
}

/// Largest `n` accepted by [`bases_of_map`] and [`matroid_isomorphism`].
pub const BASES_BOUND: usize = 20;
pub const ISOMORPHISM_BOUND: usize = 8;

/// The bases of a map: `(E ∖ A) ∪ A*` for every `A ⊆ E` whose partial dual
/// has exactly one face.
pub fn bases_of_map(map: &OrientedMap) -> Result<LagrangianMatroid> {
    let n = map.n();
    if n > BASES_BOUND {
        return Err(Error::BoundExceeded {
            n,
            bound: BASES_BOUND,
        });
    }
    let mut bases = Vec::new();
    for mask in 0..1u64 << n {
        let a = EdgeSubset::from_mask(n, mask);
        if map.partial_dual(&a)?.is_one_face() {
            bases.push(AdmissibleSet::from_starred(&a));
        }
    }
    let matroid = LagrangianMatroid::new(n, bases)?;
    debug_assert!(matroid.satisfies_symmetric_exchange());
    Ok(matroid)
}

/// A bijection `f` of `[n]` (with `f(i*) = f(i)*`) carrying `first` onto
/// `second`, found by brute force over all `n!` candidates. Candidates moving
/// fewer points are tried first, ties broken lexicographically, so a
/// transposition is reported whenever one works.
pub fn matroid_isomorphism(
    first: &LagrangianMatroid,
    second: &LagrangianMatroid,
) -> Result<Option<Vec<usize>>> {
    let n = first.n();
    if n > ISOMORPHISM_BOUND {
        return Err(Error::BoundExceeded {
            n,
            bound: ISOMORPHISM_BOUND,
        });
    }
    if second.n() != n || first.len() != second.len() {
        return Ok(None);
    }
    let mut candidates = Vec::new();
    let mut images: Vec<usize> = (1..=n).collect();
    loop {
        let moved = images
            .iter()
            .enumerate()
            .filter(|(i, &x)| x != i + 1)
            .count();
        candidates.push((moved, images.clone()));
        if !next_permutation(&mut images) {
            break;
        }
    }
    // stable: lexicographic order survives within each moved-count class
    candidates.sort_by_key(|(moved, _)| *moved);
    Ok(candidates.into_iter().map(|(_, f)| f).find(|f| {
        first
            .bases()
            .iter()
            .all(|b| second.contains(&b.permute_positions(f)))
    }))
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn map(sigma: &str, n: usize) -> OrientedMap {
        OrientedMap::new(Perm::parse(sigma, 2 * n).unwrap()).unwrap()
    }

    fn triangle() -> OrientedMap {
        map("(1 3)(2 5)(4 6)", 3)
    }

    fn matroid(n: usize, bases: &[&str]) -> LagrangianMatroid {
        LagrangianMatroid::parse(n, bases).unwrap()
    }

    fn edges(n: usize, e: &[usize]) -> EdgeSubset {
        EdgeSubset::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn base_rendering_and_parsing() {
        let b = AdmissibleSet::parse("12*3", 3).unwrap();
        assert_eq!(b.to_string(), "12*3");
        assert!(b.is_starred(2));
        assert_eq!(b.unstarred_part(), vec![1, 3]);
        assert!(AdmissibleSet::parse("13*2", 3).is_err());
        assert!(AdmissibleSet::parse("12", 3).is_err());
        assert!(AdmissibleSet::parse("1**2", 2).is_err());
        let wide = AdmissibleSet::parse("1 2* 3 4 5 6 7 8 9 10*", 10).unwrap();
        assert!(wide.is_starred(10));
        assert_eq!("1*2".parse::<AdmissibleSet>().unwrap().n(), 2);
    }

    #[test]
    fn ordering_prefers_unstarred() {
        let all: Vec<String> = AdmissibleSet::all(2).map(|b| b.to_string()).collect();
        assert_eq!(all, ["12", "12*", "1*2", "1*2*"]);
    }

    #[test]
    fn bases_of_examples() {
        assert_eq!(
            bases_of_map(&triangle()).unwrap().to_strings(),
            ["123*", "12*3", "1*23"]
        );
        assert_eq!(bases_of_map(&map("(1)(2)", 1)).unwrap().to_strings(), ["1"]);
        assert_eq!(
            bases_of_map(&map("(1)(2 3 4)", 2)).unwrap().to_strings(),
            ["12*"]
        );
    }

    #[test]
    fn twist_examples() {
        let delta = bases_of_map(&triangle()).unwrap();
        assert_eq!(
            delta.twist(&edges(3, &[1])).unwrap(),
            matroid(3, &["1*23*", "1*2*3", "123"])
        );
        let a = edges(3, &[2, 3]);
        assert_eq!(delta.twist(&a).unwrap().twist(&a).unwrap(), delta);
        let full = delta.twist(&EdgeSubset::full(3)).unwrap();
        assert_eq!(full, matroid(3, &["1*2*3", "1*23*", "12*3*"]));
        assert_eq!(full, bases_of_map(&triangle().dual()).unwrap());
    }

    #[test]
    fn exchange_examples() {
        assert!(bases_of_map(&triangle())
            .unwrap()
            .satisfies_symmetric_exchange());
        let bad = matroid(3, &["123", "1*2*3*"]);
        assert_eq!(
            bad.check_symmetric_exchange(),
            Err(ExchangeWitness {
                a: AdmissibleSet::parse("123", 3).unwrap(),
                b: AdmissibleSet::parse("1*2*3*", 3).unwrap(),
                j: 1,
            })
        );
        assert!(matroid(3, &["1*23"]).satisfies_symmetric_exchange());
    }

    #[test]
    fn matroid_examples() {
        let t = triangle();
        assert!(bases_of_map(&t).unwrap().is_matroid());
        let d1 = bases_of_map(&t.partial_dual(&edges(3, &[1])).unwrap()).unwrap();
        assert!(!d1.is_matroid());
        assert!(matroid(3, &["123"]).is_matroid());
        // {12, 34} fails basis exchange
        assert!(!matroid(4, &["123*4*", "1*2*34"]).is_matroid());
    }

    #[test]
    fn isomorphism_examples() {
        let t = triangle();
        let d: Vec<LagrangianMatroid> = (1..=3)
            .map(|j| bases_of_map(&t.partial_dual(&edges(3, &[j])).unwrap()).unwrap())
            .collect();
        assert_eq!(
            matroid_isomorphism(&d[0], &d[1]).unwrap(),
            Some(vec![2, 1, 3])
        );
        assert_eq!(
            matroid_isomorphism(&d[0], &d[2]).unwrap(),
            Some(vec![3, 2, 1])
        );
        assert_eq!(
            matroid_isomorphism(&d[1], &d[2]).unwrap(),
            Some(vec![1, 3, 2])
        );
        let delta = bases_of_map(&t).unwrap();
        assert_eq!(
            matroid_isomorphism(&delta, &delta).unwrap(),
            Some(vec![1, 2, 3])
        );
        assert_eq!(matroid_isomorphism(&delta, &d[0]).unwrap(), None);
    }

    #[test]
    fn constructor_rejects_empty_and_mixed_sizes() {
        assert!(LagrangianMatroid::new(2, []).is_err());
        assert!(LagrangianMatroid::parse(2, &["12", "123"]).is_err());
        assert_eq!(matroid(2, &["12", "12"]).len(), 1);
    }
}
