//! Permutations of `{1..m}`.
//!
//! Products are read left to right: `p.then(q)` (or [`compose`]) applies `p`
//! first and `q` second. With this convention the half-edge triple
//! `sigma = (1)(2 3 4)`, `alpha = (1 2)(3 4)`, `phi = (1 4 2)(3)` multiplies
//! to the identity in the order written.
//!
//! All external interfaces speak 1-based labels; the image table is 0-based.

use std::fmt;

use crate::error::{Error, Result};

mod schreier;

pub use schreier::{group_order, StabilizerChain};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its 1-based image table: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        let mut table = Vec::with_capacity(m);
        for &x in images {
            if x == 0 || x > m {
                return Err(Error::LabelOutOfRange { label: x, max: m });
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::NotAPermutation(format!("{x} appears twice")));
            }
            table.push((x - 1) as u32);
        }
        Ok(Perm { images: table })
    }

    pub(crate) fn from_zero_based(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i as u32 == x)
        });
        Perm { images }
    }

    /// Builds a permutation of degree `degree` from disjoint cycles of 1-based labels.
    /// Points not mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > degree {
                    return Err(Error::LabelOutOfRange {
                        label: x,
                        max: degree,
                    });
                }
                if std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::NotAPermutation(format!(
                        "{x} occurs in more than one place"
                    )));
                }
                let next = cycle[(i + 1) % cycle.len()];
                images[x - 1] = (next - 1) as u32;
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `"(1)(2 3 4)"` or `"(2,3,4)"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn image0(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub(crate) fn images0(&self) -> &[u32] {
        &self.images
    }

    /// 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `self` first, then `q`.
    pub fn then(&self, q: &Perm) -> Result<Perm> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(self.then_unchecked(q))
    }

    pub(crate) fn then_unchecked(&self, q: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&x| q.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `r⁻¹ · self · r`: the cycles of `self` with every label `x` replaced by `r(x)`.
    pub fn conjugate(&self, r: &Perm) -> Result<Perm> {
        if self.degree() != r.degree() {
            return Err(Error::DegreeMismatch(self.degree(), r.degree()));
        }
        Ok(self.conjugate_unchecked(r))
    }

    pub(crate) fn conjugate_unchecked(&self, r: &Perm) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[r.images[x] as usize] = r.images[y as usize];
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Disjoint cycles, fixed points included, each starting at its smallest
    /// label and ordered by that label.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut count = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
            }
        }
        count
    }

    pub fn is_fpf_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize != i && self.images[x as usize] as usize == i)
    }
}

/// `p` first, then `q`.
pub fn compose(p: &Perm, q: &Perm) -> Result<Perm> {
    p.then(q)
}

/// Product of a sequence read left to right. `degree` is used for the empty product.
pub fn product<'a>(degree: usize, perms: impl IntoIterator<Item = &'a Perm>) -> Result<Perm> {
    perms
        .into_iter()
        .try_fold(Perm::identity(degree), |acc, p| acc.then(p))
}

/// True iff the orbit of point 1 under the group generated by `gens` is all of `{1..m}`.
pub fn is_transitive(gens: &[Perm], m: usize) -> Result<bool> {
    if let Some(bad) = gens.iter().find(|g| g.degree() != m) {
        return Err(Error::DegreeMismatch(bad.degree(), m));
    }
    if m == 0 {
        return Ok(true);
    }
    if gens.is_empty() {
        return if m == 1 {
            Ok(true)
        } else {
            Err(Error::NoGenerators(m))
        };
    }
    Ok(orbit0(gens, 0).len() == m)
}

/// Orbit of a 0-based point, in discovery order.
pub(crate) fn orbit0(gens: &[Perm], point: usize) -> Vec<usize> {
    let m = gens.first().map_or(0, Perm::degree);
    let mut seen = vec![false; m.max(point + 1)];
    seen[point] = true;
    let mut orbit = vec![point];
    let mut next = 0;
    while next < orbit.len() {
        let x = orbit[next];
        next += 1;
        for g in gens {
            let y = g.image0(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
    }
    orbit
}

/// Parses a sequence of parenthesised cycles into 1-based label lists.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    parse_cycles_raw(text)?
        .into_iter()
        .map(|cycle| {
            cycle
                .into_iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad label {t:?}")))
                })
                .collect()
        })
        .collect()
}

/// Splits `"(a b)(c d e)"` into token lists without interpreting the tokens.
pub(crate) fn parse_cycles_raw(text: &str) -> Result<Vec<Vec<&str>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(inner) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' at {rest:?}")));
        };
        let Some(close) = inner.find(')') else {
            return Err(Error::Parse(format!("unclosed cycle in {text:?}")));
        };
        let cycle: Vec<&str> = inner[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = inner[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, m: usize) -> Perm {
        Perm::parse(text, m).unwrap()
    }

    #[test]
    fn worked_triple_multiplies_to_identity() {
        let sigma = p("(1)(2 3 4)", 4);
        let alpha = p("(1 2)(3 4)", 4);
        let phi = p("(1 4 2)(3)", 4);
        let prod = compose(&compose(&sigma, &alpha).unwrap(), &phi).unwrap();
        assert!(prod.is_identity());
    }

    #[test]
    fn compose_basics() {
        let q = p("(1 2)", 3);
        assert_eq!(compose(&q, &Perm::identity(3)).unwrap(), q);
        assert!(compose(&q, &q).unwrap().is_identity());
        assert_eq!(
            compose(&q, &Perm::identity(4)),
            Err(Error::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("(1 4 2)(3)", 4).inverse(), p("(1 2 4)", 4));
        assert!(Perm::identity(5).inverse().is_identity());
        let inv = p("(1 2)(3 4)", 4);
        assert_eq!(inv.inverse(), inv);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            p("(1 2)", 3).conjugate(&p("(1 3)", 3)).unwrap(),
            p("(2 3)", 3)
        );
        let x = p("(1 3 2)", 3);
        assert_eq!(x.conjugate(&Perm::identity(3)).unwrap(), x);
        assert_eq!(
            p("(1 2)(3 4)", 4).conjugate(&p("(1 3)(2 4)", 4)).unwrap(),
            p("(1 2)(3 4)", 4)
        );
    }

    #[test]
    fn conjugate_is_r_inverse_p_r() {
        let x = p("(1 2 5)(3 4)", 5);
        let r = p("(1 4 3 2)", 5);
        let expected = product(5, [&r.inverse(), &x, &r]).unwrap();
        assert_eq!(x.conjugate(&r).unwrap(), expected);
    }

    #[test]
    fn cycles_examples() {
        let s = p("(1)(2 3 4)", 4);
        assert_eq!(s.cycles(), vec![vec![1], vec![2, 3, 4]]);
        assert_eq!(s.cycle_count(), 2);
        assert_eq!(Perm::identity(6).cycle_count(), 6);
        assert_eq!(p("(1 4 2)(3)", 4).cycle_count(), 2);
        assert_eq!(s.to_string(), "(1)(2 3 4)");
    }

    #[test]
    fn involution_examples() {
        assert!(p("(1 2)(3 4)", 4).is_fpf_involution());
        assert!(!Perm::identity(4).is_fpf_involution());
        assert!(!p("(1 2 3)", 3).is_fpf_involution());
        assert!(!p("(1 2)", 3).is_fpf_involution());
    }

    #[test]
    fn transitivity_examples() {
        let gens = [p("(1 2)(3 4)", 4), p("(1)(2 3 4)", 4)];
        assert!(is_transitive(&gens, 4).unwrap());
        assert!(!is_transitive(&[p("(1 2)", 4), p("(3 4)", 4)], 4).unwrap());
        assert!(is_transitive(&[Perm::identity(1)], 1).unwrap());
        assert_eq!(is_transitive(&[], 3), Err(Error::NoGenerators(3)));
    }

    #[test]
    fn parse_accepts_commas_and_rejects_garbage() {
        assert_eq!(p("(2,3,4)", 4), p("(2 3 4)", 4));
        assert!(Perm::parse("(1 2", 3).is_err());
        assert!(Perm::parse("1 2", 3).is_err());
        assert!(Perm::parse("(1 5)", 3).is_err());
        assert!(Perm::parse("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse("(1 x)", 3).is_err());
    }

    #[test]
    fn from_images_validates() {
        assert!(Perm::from_images(&[2, 1, 3]).is_ok());
        assert!(Perm::from_images(&[1, 1, 3]).is_err());
        assert!(Perm::from_images(&[0, 1]).is_err());
    }

    fn arb_perm(m: usize) -> impl Strategy<Value = Perm> {
        Just((0..m as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(Perm::from_zero_based)
    }

    fn arb_pair() -> impl Strategy<Value = (Perm, Perm)> {
        (1usize..12).prop_flat_map(|m| (arb_perm(m), arb_perm(m)))
    }

    proptest! {
        #[test]
        fn inverse_reverses_products((a, b) in arb_pair()) {
            let lhs = compose(&a, &b).unwrap().inverse();
            let rhs = compose(&b.inverse(), &a.inverse()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert!(compose(&a, &a.inverse()).unwrap().is_identity());
        }

        #[test]
        fn conjugation_keeps_cycle_type((a, r) in arb_pair()) {
            let c = a.conjugate(&r).unwrap();
            prop_assert_eq!(c.cycle_count(), a.cycle_count());
            let mut la: Vec<_> = a.cycles().iter().map(Vec::len).collect();
            let mut lc: Vec<_> = c.cycles().iter().map(Vec::len).collect();
            la.sort();
            lc.sort();
            prop_assert_eq!(la, lc);
        }

        #[test]
        fn cycles_cover_all_points(a in (1usize..15).prop_flat_map(arb_perm)) {
            let total: usize = a.cycles().iter().map(Vec::len).sum();
            prop_assert_eq!(total, a.degree());
            let reparsed = Perm::parse(&a.to_string(), a.degree()).unwrap();
            prop_assert_eq!(reparsed, a);
        }
    }
}
