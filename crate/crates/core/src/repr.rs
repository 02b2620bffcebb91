//! Exact rational representations `(X|Y)` of Lagrangian matroids.
//!
//! Columns `0..n` of a representation are labelled `1..n` (the block `X`)
//! and columns `n..2n` are labelled `1*..n*` (the block `Y`). An admissible
//! set is a base iff its `n` columns form a non-singular minor.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lagrangian::{bases_of_map, AdmissibleSet, LagrangianMatroid, Sign};
use crate::linalg::{self, Rational};
use crate::map::{EdgeSubset, OrientedMap};

/// Which isotropy condition the rows satisfy: `X Yᵗ` antisymmetric
/// (orthogonal) or symmetric (symplectic).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Orthogonal,
    Symplectic,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Orthogonal => "orthogonal",
            Mode::Symplectic => "symplectic",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orthogonal" | "antisymmetric" => Ok(Mode::Orthogonal),
            "symplectic" | "symmetric" => Ok(Mode::Symplectic),
            other => Err(Error::BadMatrix(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    n: usize,
    mode: Mode,
    rows: Vec<Vec<Rational>>,
}

impl Representation {
    /// Checks only the shape: at most `n` rows, each of length `2n`.
    pub fn new(n: usize, mode: Mode, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.len() > n {
            return Err(Error::BadMatrix(format!(
                "{} rows exceed n = {n}",
                rows.len()
            )));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != 2 * n) {
            return Err(Error::BadMatrix(format!(
                "row of length {} where 2n = {}",
                r.len(),
                2 * n
            )));
        }
        Ok(Representation { n, mode, rows })
    }

    pub fn from_integers(n: usize, mode: Mode, rows: &[&[i64]]) -> Result<Self> {
        Representation::new(n, mode, linalg::int_matrix(rows))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn x_block(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| r[..self.n].to_vec()).collect()
    }

    pub fn y_block(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| r[self.n..].to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows)
    }

    /// Exact test of `X Yᵗ` against its transpose (symplectic) or negated
    /// transpose (orthogonal).
    pub fn isotropy_check(&self, mode: Mode) -> bool {
        let product = linalg::mul(&self.x_block(), &linalg::transpose(&self.y_block()));
        let k = product.len();
        (0..k).all(|i| {
            (0..k).all(|j| match mode {
                Mode::Symplectic => product[i][j] == product[j][i],
                Mode::Orthogonal => product[i][j] == -product[j][i].clone(),
            })
        })
    }

    /// Column index of the element at 1-based position `i` of a base.
    fn column(&self, i: usize, sign: Sign) -> usize {
        match sign {
            Sign::Plus => i - 1,
            Sign::Minus => self.n + i - 1,
        }
    }

    /// The admissible sets whose columns form a non-zero `n × n` minor.
    pub fn bases(&self) -> Result<LagrangianMatroid> {
        if !self.isotropy_check(self.mode) {
            return Err(Error::NotIsotropic(self.mode.name()));
        }
        let rank = self.rank();
        if rank < self.n {
            return Err(Error::RankDeficient { rank, n: self.n });
        }
        let (ints, _) = linalg::clear_denominators(&self.rows);
        let bases: Vec<AdmissibleSet> = AdmissibleSet::all(self.n)
            .filter(|b| {
                let cols: Vec<usize> = b
                    .signs()
                    .iter()
                    .enumerate()
                    .map(|(i, &s)| self.column(i + 1, s))
                    .collect();
                let minor: Vec<Vec<_>> = ints
                    .iter()
                    .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                    .collect();
                !linalg::det_integer(&minor).is_zero()
            })
            .collect();
        let matroid = LagrangianMatroid::new(self.n, bases)?;
        debug_assert!(matroid.satisfies_symmetric_exchange());
        Ok(matroid)
    }

    /// Exchanges columns `j` and `j*` for every `j` in `edges`.
    pub fn swap_columns(&self, edges: &EdgeSubset) -> Result<Self> {
        if edges.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: edges.n(),
            });
        }
        let mut rows = self.rows.clone();
        for row in &mut rows {
            for j in edges.edges() {
                row.swap(j - 1, self.n + j - 1);
            }
        }
        Ok(Representation {
            n: self.n,
            mode: self.mode,
            rows,
        })
    }

    /// Moves column `i` to `images[i-1]` and column `i*` to `images[i-1]*`.
    pub fn permute_columns(&self, images: &[usize]) -> Result<Self> {
        if images.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: images.len(),
            });
        }
        let n = self.n;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = vec![Rational::zero(); 2 * n];
                for (i, &t) in images.iter().enumerate() {
                    out[t - 1] = row[i].clone();
                    out[n + t - 1] = row[n + i].clone();
                }
                out
            })
            .collect();
        Ok(Representation {
            n,
            mode: self.mode,
            rows,
        })
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Representation(n={}, {})", self.n, self.mode)?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(linalg::format_rational).collect();
            writeln!(
                f,
                "  {} | {}",
                cells[..self.n].join(" "),
                cells[self.n..].join(" ")
            )?;
        }
        Ok(())
    }
}

/// `dim(rowspace(a) ∩ rowspace(b)) = rank a + rank b - rank [a; b]`.
pub fn rowspace_intersection_dim(a: &Representation, b: &Representation) -> Result<usize> {
    if a.n != b.n {
        return Err(Error::SizeMismatch {
            expected: a.n,
            got: b.n,
        });
    }
    let stacked: Vec<Vec<Rational>> = a.rows.iter().chain(&b.rows).cloned().collect();
    Ok(a.rank() + b.rank() - linalg::rank(&stacked))
}

/// Antisymmetric interlacement matrix of a one-face map.
///
/// The boundary word is the face cycle read from half-edge 1. For edges `e`
/// and `f` at positions `p1 < p2` and `q1 < q2`, the entry is zero unless the
/// pairs alternate, `+1` if `q1` lies between `p1` and `p2`, else `-1`.
pub fn interlacement_matrix(one_face: &OrientedMap) -> Result<Vec<Vec<i64>>> {
    let faces = one_face.phi().cycles();
    if faces.len() != 1 {
        return Err(Error::OracleMismatch(format!(
            "interlacement needs one face, found {}",
            faces.len()
        )));
    }
    let n = one_face.n();
    let mut position = vec![0usize; 2 * n];
    for (k, &h) in faces[0].iter().enumerate() {
        position[h - 1] = k;
    }
    let span = |e: usize| {
        let (a, b) = (position[2 * e], position[2 * e + 1]);
        (a.min(b), a.max(b))
    };
    let mut matrix = vec![vec![0i64; n]; n];
    for e in 0..n {
        let (p1, p2) = span(e);
        for f in 0..n {
            if e == f {
                continue;
            }
            let (q1, q2) = span(f);
            let q1_inside = p1 < q1 && q1 < p2;
            let q2_inside = p1 < q2 && q2 < p2;
            if q1_inside != q2_inside {
                matrix[e][f] = if q1_inside { 1 } else { -1 };
            }
        }
    }
    Ok(matrix)
}

/// An orthogonal representation of the Lagrangian matroid of `map`.
///
/// With `D` the starred positions of `base`, the partial dual `∂_D M` has one
/// face; its interlacement matrix `A` gives `(I | A)`, and swapping the
/// columns `j`, `j*` for `j ∈ D` gives the result. The minors of the result
/// are checked against [`bases_of_map`] before returning.
pub fn interlacement_representation(
    map: &OrientedMap,
    base: Option<&AdmissibleSet>,
) -> Result<Representation> {
    let delta = bases_of_map(map)?;
    let base = match base {
        Some(b) if delta.contains(b) => b.clone(),
        Some(b) => return Err(Error::NotABase(b.to_string())),
        None => delta.bases()[0].clone(),
    };
    let dualized = base.starred();
    let one_face = map.partial_dual(&dualized)?;
    let a = interlacement_matrix(&one_face)?;
    let n = map.n();
    let rows = (0..n)
        .map(|e| {
            (0..n)
                .map(|j| {
                    if j == e {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .chain(a[e].iter().map(|&x| Rational::from_integer(x.into())))
                .collect()
        })
        .collect();
    let rep = Representation::new(n, Mode::Orthogonal, rows)?.swap_columns(&dualized)?;
    let got = rep.bases()?;
    if got != delta {
        return Err(Error::OracleMismatch(format!(
            "minors give {:?}, the map has {:?}",
            got.to_strings(),
            delta.to_strings()
        )));
    }
    Ok(rep)
}

/// Whether the representation of `map` and its swap at edge `j` meet in
/// dimension `n - 1`.
pub fn lagrangian_pair_check(map: &OrientedMap, j: usize) -> Result<bool> {
    let n = map.n();
    let edge = EdgeSubset::new(n, [j])?;
    let rep = interlacement_representation(map, None)?;
    let swapped = rep.swap_columns(&edge)?;
    Ok(rowspace_intersection_dim(&rep, &swapped)? == n - 1)
}
