//! The hyperoctahedral group `BC_n` as signed permutations of `[n] ∪ [n]*`.
//!
//! Every element `w` is stored by its canonical decomposition: first swap
//! `i ↔ i*` for `i` in the flip set `D`, then relabel by an ordinary
//! permutation `π`. So `w(i) = π(i)` or `π(i)*` depending on `i ∈ D`, and
//! `w(i*) = w(i)*` holds by construction. Products are read left to right.
//!
//! The action on maps is defined through the decomposition:
//! `w·M = relabel_π(∂_D M)`. Generator formulas then hold exactly; composite
//! words agree with step-by-step application up to map isomorphism.

use std::fmt;

use crate::error::{Error, Result};
use crate::lagrangian::{AdmissibleSet, LagrangianMatroid, Sign};
use crate::map::{EdgeSubset, OrientedMap};
use crate::perm::Perm;
use crate::polytope::{LatticePoint, MatroidPolytope};
use crate::repr::Representation;

/// An element of `[n] ∪ [n]*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub index: usize,
    pub starred: bool,
}

impl Element {
    pub fn star(self) -> Element {
        Element {
            starred: !self.starred,
            ..self
        }
    }

    fn parse(token: &str, n: usize) -> Result<Element> {
        let (digits, starred) = match token.strip_suffix('*') {
            Some(d) => (d, true),
            None => (token, false),
        };
        let index: usize = digits
            .parse()
            .map_err(|_| Error::BadWord(format!("bad element {token:?}")))?;
        if index == 0 || index > n {
            return Err(Error::BadWord(format!("element {token} outside 1..={n}")));
        }
        Ok(Element { index, starred })
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.index, if self.starred { "*" } else { "" })
    }
}

/// A standard generator of `BC_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `(j j*)`.
    Flip(usize),
    /// `(a b)(a* b*)` with `b ∉ {a, a*}`.
    Pair(Element, Element),
}

impl Generator {
    pub fn to_signed_perm(self, n: usize) -> Result<SignedPerm> {
        let check = |i: usize| {
            if i == 0 || i > n {
                Err(Error::BadWord(format!("index {i} outside 1..={n}")))
            } else {
                Ok(())
            }
        };
        let mut images: Vec<Element> = (1..=n)
            .map(|index| Element {
                index,
                starred: false,
            })
            .collect();
        match self {
            Generator::Flip(j) => {
                check(j)?;
                images[j - 1].starred = true;
            }
            Generator::Pair(a, b) => {
                check(a.index)?;
                check(b.index)?;
                if a.index == b.index {
                    return Err(Error::BadWord(format!("({a} {b}) is not a generator")));
                }
                // a -> b and b -> a, carried to the unstarred representatives
                let lift = |from: Element, to: Element| {
                    if from.starred {
                        to.star()
                    } else {
                        to
                    }
                };
                images[a.index - 1] = lift(a, b);
                images[b.index - 1] = lift(b, a);
            }
        }
        SignedPerm::from_images(&images)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Flip(j) => write!(f, "({j} {j}*)"),
            Generator::Pair(a, b) => write!(f, "({a} {b})({} {})", a.star(), b.star()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    /// 1-based images of `π`.
    perm: Vec<usize>,
    flips: Vec<bool>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (1..=n).collect(),
            flips: vec![false; n],
        }
    }

    /// From the relabelling `π` (1-based images) and the flip set `D`.
    pub fn new(perm: &[usize], flips: &EdgeSubset) -> Result<Self> {
        let n = perm.len();
        Perm::from_images(perm)?;
        if flips.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: flips.n(),
            });
        }
        Ok(SignedPerm {
            perm: perm.to_vec(),
            flips: (1..=n).map(|i| flips.contains(i)).collect(),
        })
    }

    /// From the images `w(1), ..., w(n)`.
    pub fn from_images(images: &[Element]) -> Result<Self> {
        let perm: Vec<usize> = images.iter().map(|e| e.index).collect();
        Perm::from_images(&perm)
            .map_err(|_| Error::BadWord("images do not form a signed permutation".into()))?;
        Ok(SignedPerm {
            perm,
            flips: images.iter().map(|e| e.starred).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Images of `π`, 1-based.
    pub fn relabelling(&self) -> &[usize] {
        &self.perm
    }

    /// The flip set `D`.
    pub fn flips(&self) -> EdgeSubset {
        EdgeSubset::new(self.n(), (1..=self.n()).filter(|&i| self.flips[i - 1])).expect("in range")
    }

    pub fn apply(&self, e: Element) -> Element {
        let i = e.index - 1;
        Element {
            index: self.perm[i],
            starred: e.starred ^ self.flips[i],
        }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &SignedPerm) -> Result<SignedPerm> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        let images: Vec<Element> = (1..=self.n())
            .map(|index| {
                other.apply(self.apply(Element {
                    index,
                    starred: false,
                }))
            })
            .collect();
        SignedPerm::from_images(&images)
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut flips = vec![false; n];
        for i in 0..n {
            let t = self.perm[i] - 1;
            perm[t] = i + 1;
            flips[t] = self.flips[i];
        }
        SignedPerm { perm, flips }
    }

    pub fn is_identity(&self) -> bool {
        *self == SignedPerm::identity(self.n())
    }

    /// Parses a product of generators such as `"(1 1*)(1 2)(1* 2*)"`.
    ///
    /// Tokens are `(j j*)` or a pair `(a b)(a* b*)` in either order, where
    /// `a`, `b` may be starred. The product is read left to right.
    pub fn from_word(text: &str, n: usize) -> Result<SignedPerm> {
        let generators = parse_generators(text, n)?;
        generators
            .into_iter()
            .try_fold(SignedPerm::identity(n), |acc, g| {
                acc.then(&g.to_signed_perm(n)?)
            })
    }

    /// Every element of `BC_n` (`2^n n!` of them).
    pub fn all(n: usize) -> Vec<SignedPerm> {
        let mut perms = vec![Vec::new()];
        for k in 1..=n {
            perms = perms
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..k).map(move |pos| {
                        let mut q = p.clone();
                        q.insert(pos, k);
                        q
                    })
                })
                .collect();
        }
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for mask in 0..1u64 << n {
                out.push(SignedPerm {
                    perm: p.clone(),
                    flips: (0..n).map(|i| mask >> i & 1 == 1).collect(),
                });
            }
        }
        out
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: n,
            });
        }
        Ok(())
    }

    pub fn act_on_admissible(&self, b: &AdmissibleSet) -> Result<AdmissibleSet> {
        self.check_n(b.n())?;
        let mut signs = vec![Sign::Plus; self.n()];
        for (i, &s) in b.signs().iter().enumerate() {
            signs[self.perm[i] - 1] = if self.flips[i] { s.flip() } else { s };
        }
        Ok(AdmissibleSet::new(signs))
    }

    pub fn act_on_matroid(&self, m: &LagrangianMatroid) -> Result<LagrangianMatroid> {
        self.check_n(m.n())?;
        LagrangianMatroid::new(
            m.n(),
            m.bases()
                .iter()
                .map(|b| self.act_on_admissible(b))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// `relabel_π(∂_D M)`.
    pub fn act_on_map(&self, map: &OrientedMap) -> Result<OrientedMap> {
        self.check_n(map.n())?;
        map.partial_dual(&self.flips())?.relabel_edges(&self.perm)
    }

    /// Swaps columns `j ↔ j*` for `j ∈ D`, then moves both column blocks by `π`.
    pub fn act_on_matrix(&self, r: &Representation) -> Result<Representation> {
        self.check_n(r.n())?;
        r.swap_columns(&self.flips())?.permute_columns(&self.perm)
    }

    pub fn act_on_point(&self, p: &LatticePoint) -> Result<LatticePoint> {
        self.check_n(p.dim())?;
        let mut coords = vec![0; self.n()];
        for (i, &x) in p.coords().iter().enumerate() {
            coords[self.perm[i] - 1] = if self.flips[i] { -x } else { x };
        }
        Ok(LatticePoint::new(coords))
    }

    /// Negates coordinates in `D`, then permutes coordinates by `π`.
    pub fn act_on_polytope(&self, p: &MatroidPolytope) -> Result<MatroidPolytope> {
        self.check_n(p.n())?;
        p.map_vertices(|v| self.act_on_point(v).expect("dimension checked"))
    }
}

fn parse_generators(text: &str, n: usize) -> Result<Vec<Generator>> {
    let cycles = crate::perm::parse_cycles_raw(text)
        .map_err(|e| Error::BadWord(e.to_string()))?
        .into_iter()
        .map(|cycle| {
            cycle
                .iter()
                .map(|t| Element::parse(t, n))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let mut k = 0;
    while k < cycles.len() {
        let c = &cycles[k];
        if c.len() != 2 {
            return Err(Error::BadWord(format!(
                "cycle of length {} is not a generator",
                c.len()
            )));
        }
        let (a, b) = (c[0], c[1]);
        if a.index == b.index {
            if a.starred == b.starred {
                return Err(Error::BadWord(format!("({a} {b}) repeats an element")));
            }
            out.push(Generator::Flip(a.index));
            k += 1;
            continue;
        }
        let partner = cycles.get(k + 1).filter(|d| {
            d.len() == 2
                && ((d[0] == a.star() && d[1] == b.star())
                    || (d[0] == b.star() && d[1] == a.star()))
        });
        if partner.is_none() {
            return Err(Error::BadWord(format!(
                "({a} {b}) must be followed by ({} {})",
                a.star(),
                b.star()
            )));
        }
        out.push(Generator::Pair(a, b));
        k += 2;
    }
    Ok(out)
}

/// Parses a single generator token such as `"(2 2*)"` or `"(1 3)(1* 3*)"`.
pub fn parse_generator(text: &str, n: usize) -> Result<Generator> {
    match parse_generators(text, n)?.as_slice() {
        [g] => Ok(*g),
        _ => Err(Error::BadWord(format!(
            "{text:?} is not a single generator"
        ))),
    }
}

impl fmt::Display for SignedPerm {
    /// Disjoint cycles on `[n] ∪ [n]*`, fixed points omitted; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut seen = vec![false; 2 * n];
        let slot = |e: Element| e.index - 1 + if e.starred { n } else { 0 };
        let mut wrote = false;
        for start in (1..=n)
            .map(|index| Element {
                index,
                starred: false,
            })
            .chain((1..=n).map(|index| Element {
                index,
                starred: true,
            }))
        {
            if seen[slot(start)] || self.apply(start) == start {
                continue;
            }
            write!(f, "(")?;
            let mut e = start;
            let mut first = true;
            while !seen[slot(e)] {
                seen[slot(e)] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
                first = false;
                e = self.apply(e);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SignedPerm{{π={:?}, D={:?}}}",
            self.perm,
            self.flips().edges()
        )
    }
}
