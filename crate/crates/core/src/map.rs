//! Oriented maps as permutation pairs on half-edges.
//!
//! A map with `n` edges lives on half-edges `1..=2n`. The edge involution is
//! always held in canonical form `(1 2)(3 4)...(2n-1 2n)`, so edge `j` owns
//! half-edges `2j-1` and `2j`. The face permutation is derived on demand from
//! `sigma * alpha * phi = 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{self, Perm};
use num_bigint::BigUint;

pub mod generate;
mod orbit;

pub use orbit::{enumerate_partial_duals, OrbitRow, DEFAULT_ORBIT_BOUND};

/// A set of edges of a map with `n` edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset {
    n: usize,
    members: Vec<bool>,
}

impl EdgeSubset {
    pub fn empty(n: usize) -> Self {
        EdgeSubset {
            n,
            members: vec![false; n],
        }
    }

    pub fn full(n: usize) -> Self {
        EdgeSubset {
            n,
            members: vec![true; n],
        }
    }

    /// From 1-based edge labels.
    pub fn new(n: usize, edges: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members = vec![false; n];
        for e in edges {
            if e == 0 || e > n {
                return Err(Error::EdgeOutOfRange { edge: e, n });
            }
            members[e - 1] = true;
        }
        Ok(EdgeSubset { n, members })
    }

    /// Bit `j - 1` of `mask` selects edge `j`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        EdgeSubset {
            n,
            members: (0..n).map(|i| i < 64 && mask >> i & 1 == 1).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, edge: usize) -> bool {
        edge >= 1 && edge <= self.n && self.members[edge - 1]
    }

    /// Members as sorted 1-based labels.
    pub fn edges(&self) -> Vec<usize> {
        (1..=self.n).filter(|&e| self.members[e - 1]).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn complement(&self) -> Self {
        EdgeSubset {
            n: self.n,
            members: self.members.iter().map(|b| !b).collect(),
        }
    }

    pub fn symmetric_difference(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(EdgeSubset {
            n: self.n,
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.edges())
    }
}

/// The transposition `c_j = (2j-1 2j)` on `2n` half-edges.
pub fn edge_transposition(n: usize, edge: usize) -> Result<Perm> {
    if edge == 0 || edge > n {
        return Err(Error::EdgeOutOfRange { edge, n });
    }
    Perm::from_cycles(2 * n, &[[2 * edge - 1, 2 * edge]])
}

pub fn canonical_alpha(n: usize) -> Perm {
    let mut images = Vec::with_capacity(2 * n);
    for j in 0..n as u32 {
        images.push(2 * j + 1);
        images.push(2 * j);
    }
    Perm::from_zero_based(images)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedMap {
    n: usize,
    sigma: Perm,
    /// Original half-edge label of each canonical label, when ingestion relabelled.
    label_trace: Option<Vec<usize>>,
}

impl OrientedMap {
    /// A map from its vertex rotation, with the canonical edge pairing.
    pub fn new(sigma: Perm) -> Result<Self> {
        let m = sigma.degree();
        if m == 0 || m % 2 == 1 {
            return Err(Error::AlphaNotInvolution);
        }
        let map = OrientedMap {
            n: m / 2,
            sigma,
            label_trace: None,
        };
        map.validate()?;
        Ok(map)
    }

    /// A map from an arbitrary pair. A non-canonical `alpha` is brought to
    /// canonical form by relabelling half-edges; the relabelling is kept in
    /// [`OrientedMap::label_trace`].
    pub fn with_alpha(sigma: Perm, alpha: &Perm) -> Result<Self> {
        if sigma.degree() != alpha.degree() {
            return Err(Error::DegreeMismatch(sigma.degree(), alpha.degree()));
        }
        if !alpha.is_fpf_involution() {
            return Err(Error::AlphaNotInvolution);
        }
        let n = alpha.degree() / 2;
        if *alpha == canonical_alpha(n) {
            return OrientedMap::new(sigma);
        }
        // Edges are numbered by their smallest half-edge.
        let mut relabel = vec![0u32; 2 * n];
        let mut trace = vec![0usize; 2 * n];
        let mut next = 0u32;
        for cycle in alpha.cycles() {
            let (a, b) = (cycle[0], cycle[1]);
            relabel[a - 1] = next;
            relabel[b - 1] = next + 1;
            trace[next as usize] = a;
            trace[next as usize + 1] = b;
            next += 2;
        }
        let h = Perm::from_zero_based(relabel);
        let mut map = OrientedMap::new(sigma.conjugate_unchecked(&h))?;
        map.label_trace = Some(trace);
        Ok(map)
    }

    fn validate(&self) -> Result<()> {
        if !perm::is_transitive(&[self.sigma.clone(), self.alpha()], 2 * self.n)? {
            return Err(Error::NotTransitive);
        }
        self.checked_genus().map(|_| ())
    }

    pub(crate) fn from_parts_unchecked(n: usize, sigma: Perm) -> Self {
        OrientedMap {
            n,
            sigma,
            label_trace: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn half_edges(&self) -> usize {
        2 * self.n
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn alpha(&self) -> Perm {
        canonical_alpha(self.n)
    }

    /// `phi = (sigma alpha)^-1`.
    pub fn phi(&self) -> Perm {
        self.sigma.then_unchecked(&self.alpha()).inverse()
    }

    pub fn label_trace(&self) -> Option<&[usize]> {
        self.label_trace.as_deref()
    }

    /// `(vertices, edges, faces)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.sigma.cycle_count(), self.n, self.phi().cycle_count())
    }

    fn checked_genus(&self) -> Result<usize> {
        let (v, e, f) = self.counts();
        let twice = 2 - v as i64 + e as i64 - f as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::InvalidGenus(twice));
        }
        Ok((twice / 2) as usize)
    }

    /// Genus from `2 - 2g = V - E + F`.
    pub fn genus(&self) -> usize {
        self.checked_genus()
            .expect("a validated map always has an integral genus")
    }

    pub fn is_one_face(&self) -> bool {
        self.phi().cycle_count() == 1
    }

    /// The dual map `<phi^-1, alpha, sigma^-1>`.
    pub fn dual(&self) -> OrientedMap {
        OrientedMap::from_parts_unchecked(self.n, self.phi().inverse())
    }

    /// Partial dual with respect to the edges in `edges`: `sigma` is
    /// multiplied on the right by `c_j` for each selected edge `j`.
    pub fn partial_dual(&self, edges: &EdgeSubset) -> Result<OrientedMap> {
        if edges.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: edges.n(),
            });
        }
        let mut images = self.sigma.images0().to_vec();
        // sigma then c_j: swap the images that land on 2j-1 and 2j
        for slot in images.iter_mut() {
            let y = *slot as usize;
            if edges.members[y / 2] {
                *slot ^= 1;
            }
        }
        Ok(OrientedMap::from_parts_unchecked(
            self.n,
            Perm::from_zero_based(images),
        ))
    }

    /// Conjugates by the half-edge relabelling induced by an edge permutation
    /// (`edge_images[j-1]` is the new label of edge `j`). Keeps alpha canonical.
    pub fn relabel_edges(&self, edge_images: &[usize]) -> Result<OrientedMap> {
        if edge_images.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: edge_images.len(),
            });
        }
        let pi = Perm::from_images(edge_images)?;
        let h: Vec<u32> = (0..2 * self.n)
            .map(|x| (2 * pi.image0(x / 2) + x % 2) as u32)
            .collect();
        let h = Perm::from_zero_based(h);
        Ok(OrientedMap::from_parts_unchecked(
            self.n,
            self.sigma.conjugate_unchecked(&h),
        ))
    }

    /// A half-edge bijection `h` carrying `self` onto `other`
    /// (`h⁻¹ σ₁ h = σ₂` and `h⁻¹ α₁ h = α₂`), if one exists.
    pub fn isomorphism_to(&self, other: &OrientedMap) -> Option<Perm> {
        if self.n != other.n || self.counts() != other.counts() {
            return None;
        }
        let m = self.half_edges();
        let (s1, s2) = (&self.sigma, &other.sigma);
        let a1 = self.alpha();
        let a2 = other.alpha();
        'target: for t in 0..m {
            let mut h = vec![u32::MAX; m];
            let mut used = vec![false; m];
            h[0] = t as u32;
            used[t] = true;
            let mut stack = vec![0usize];
            while let Some(x) = stack.pop() {
                let y = h[x] as usize;
                for (g1, g2) in [(s1, s2), (&a1, &a2)] {
                    let (x2, y2) = (g1.image0(x), g2.image0(y));
                    if h[x2] == u32::MAX {
                        if used[y2] {
                            continue 'target;
                        }
                        h[x2] = y2 as u32;
                        used[y2] = true;
                        stack.push(x2);
                    } else if h[x2] as usize != y2 {
                        continue 'target;
                    }
                }
            }
            // connectedness makes the propagation reach every half-edge
            debug_assert!(h.iter().all(|&v| v != u32::MAX));
            return Some(Perm::from_zero_based(h));
        }
        None
    }

    /// Order of `<sigma, alpha, phi>`.
    pub fn cartographic_group_order(&self) -> BigUint {
        perm::group_order(&[self.sigma.clone(), self.alpha(), self.phi()])
            .expect("generators share a degree")
    }
}

pub fn is_isomorphic(a: &OrientedMap, b: &OrientedMap) -> Option<Perm> {
    a.isomorphism_to(b)
}

impl fmt::Debug for OrientedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedMap(n={}, sigma={})", self.n, self.sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn map(sigma: &str, n: usize) -> OrientedMap {
        OrientedMap::new(Perm::parse(sigma, 2 * n).unwrap()).unwrap()
    }

    fn triangle() -> OrientedMap {
        map("(1 3)(2 5)(4 6)", 3)
    }

    fn edges(n: usize, e: &[usize]) -> EdgeSubset {
        EdgeSubset::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn worked_example() {
        let m = OrientedMap::with_alpha(
            Perm::parse("(1)(2 3 4)", 4).unwrap(),
            &Perm::parse("(1 2)(3 4)", 4).unwrap(),
        )
        .unwrap();
        assert_eq!(m.phi(), Perm::parse("(1 4 2)(3)", 4).unwrap());
        assert_eq!(m.counts(), (2, 2, 2));
        assert_eq!(m.genus(), 0);
        assert_eq!(m.cartographic_group_order(), BigUint::from(12u32));
        assert!(m.label_trace().is_none());
        assert_eq!(m.dual().counts(), (2, 2, 2));
    }

    #[test]
    fn single_edge() {
        let m = map("(1)(2)", 1);
        assert_eq!(m.counts(), (2, 1, 1));
        assert_eq!(m.genus(), 0);
        assert!(m.is_one_face());
        let d = m.dual();
        assert_eq!(d.sigma(), &Perm::parse("(1 2)", 2).unwrap());
        assert_eq!(d.counts(), (1, 1, 2));
        assert!(m.isomorphism_to(&d).is_none());
        assert_eq!(m.cartographic_group_order(), BigUint::from(2u32));
    }

    #[test]
    fn disconnected_pair_is_rejected() {
        let err = OrientedMap::with_alpha(
            Perm::parse("(1 2)(3 4)", 4).unwrap(),
            &Perm::parse("(1 2)(3 4)", 4).unwrap(),
        );
        assert_eq!(err, Err(Error::NotTransitive));
    }

    #[test]
    fn bad_alpha_is_rejected() {
        let sigma = Perm::parse("(1 2 3 4)", 4).unwrap();
        let alpha = Perm::parse("(1 2)", 4).unwrap();
        assert_eq!(
            OrientedMap::with_alpha(sigma.clone(), &alpha),
            Err(Error::AlphaNotInvolution)
        );
        assert_eq!(
            OrientedMap::with_alpha(sigma, &Perm::parse("(1 2 3)", 4).unwrap()),
            Err(Error::AlphaNotInvolution)
        );
    }

    #[test]
    fn non_canonical_alpha_is_relabelled() {
        // the worked example with edges {1,3} and {2,4}
        let sigma = Perm::parse("(1)(3 2 4)", 4).unwrap();
        let alpha = Perm::parse("(1 3)(2 4)", 4).unwrap();
        let m = OrientedMap::with_alpha(sigma, &alpha).unwrap();
        assert_eq!(m.label_trace(), Some(&[1, 3, 2, 4][..]));
        assert_eq!(m.sigma(), &Perm::parse("(1)(2 3 4)", 4).unwrap());
        assert_eq!(m.counts(), (2, 2, 2));
    }

    #[test]
    fn triangle_counts_and_partial_duals() {
        let t = triangle();
        assert_eq!(t.counts(), (3, 3, 2));
        assert_eq!(t.genus(), 0);
        let d1 = t.partial_dual(&edges(3, &[1])).unwrap();
        assert_eq!(d1.genus(), 1);
        let d3 = t.partial_dual(&edges(3, &[3])).unwrap();
        assert!(d3.is_one_face());
        assert_eq!(d3.phi().cycles().len(), 1);
        assert_eq!(d3.phi().cycles()[0].len(), 6);
        assert!(!t.is_one_face());
        let d2 = t.partial_dual(&edges(3, &[2])).unwrap();
        assert!(d1.isomorphism_to(&d2).is_some());
    }

    #[test]
    fn partial_dual_extremes() {
        let t = triangle();
        assert_eq!(t.partial_dual(&EdgeSubset::empty(3)).unwrap(), t);
        assert_eq!(t.partial_dual(&EdgeSubset::full(3)).unwrap(), t.dual());
        assert_eq!(t.dual().dual(), t);
        assert!(t.partial_dual(&EdgeSubset::empty(2)).is_err());
        assert!(EdgeSubset::new(3, [4]).is_err());
    }

    #[test]
    fn partial_dual_phi_is_c_times_phi() {
        let t = triangle();
        let a = edges(3, &[1, 3]);
        let c = perm::product(
            6,
            &[
                edge_transposition(3, 1).unwrap(),
                edge_transposition(3, 3).unwrap(),
            ],
        )
        .unwrap();
        let pd = t.partial_dual(&a).unwrap();
        assert_eq!(pd.sigma(), &t.sigma().then(&c).unwrap());
        assert_eq!(pd.phi(), c.then(&t.phi()).unwrap());
    }

    #[test]
    fn isomorphism_is_witnessed() {
        let t = triangle();
        assert!(t.isomorphism_to(&t).unwrap().is_identity());
        let d1 = t.partial_dual(&edges(3, &[1])).unwrap();
        let d2 = t.partial_dual(&edges(3, &[2])).unwrap();
        let h = d1.isomorphism_to(&d2).unwrap();
        assert_eq!(d1.sigma().conjugate(&h).unwrap(), *d2.sigma());
        assert_eq!(d1.alpha().conjugate(&h).unwrap(), d2.alpha());
    }

    #[test]
    fn relabel_keeps_alpha() {
        let t = triangle();
        let r = t.relabel_edges(&[2, 1, 3]).unwrap();
        assert_eq!(r.counts(), t.counts());
        assert!(r.isomorphism_to(&t).is_some());
        assert!(r.validate().is_ok());
    }

    #[test]
    fn edge_subset_mask_round_trip() {
        let a = edges(5, &[1, 4]);
        assert_eq!(a.mask(), 0b01001);
        assert_eq!(EdgeSubset::from_mask(5, 0b01001), a);
        assert_eq!(a.complement().edges(), vec![2, 3, 5]);
    }
}
