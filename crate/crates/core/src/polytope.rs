//! Lagrangian matroid polytopes in `[-1, 1]ⁿ`.
//!
//! A base `B` becomes the point `v_B` with `+1` at `i` for `i ∈ B` and `-1`
//! for `i* ∈ B`. Hull edges are found pair by pair with an exact LP, and the
//! root test asks that every edge direction be a multiple of some `±2ε_i` or
//! `±ε_i ± ε_j`.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hyperoct::Generator;
use crate::lagrangian::{AdmissibleSet, LagrangianMatroid};
use crate::lp::{maximize, LpOutcome};

pub const MAX_POINTS: usize = 256;
pub const MAX_DIM: usize = 10;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint { coords }
    }

    pub fn from_admissible(b: &AdmissibleSet) -> Self {
        LatticePoint::new(b.signs().iter().map(|s| s.value() as i64).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn support_size(&self) -> usize {
        self.coords.iter().filter(|&&x| x != 0).count()
    }

    fn dot(&self, w: &[BigRational]) -> BigRational {
        self.coords
            .iter()
            .zip(w)
            .fold(BigRational::zero(), |acc, (&x, wi)| {
                acc + wi * BigRational::from_integer(x.into())
            })
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One point per base, in base order.
pub fn vertices_from_matroid(m: &LagrangianMatroid) -> Vec<LatticePoint> {
    m.bases()
        .iter()
        .map(LatticePoint::from_admissible)
        .collect()
}

/// A hull edge together with a functional `w ∈ [-1, 1]ⁿ` whose maximum over
/// the point set is attained exactly at its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullEdge {
    pub i: usize,
    pub j: usize,
    pub witness: Vec<BigRational>,
}

/// True if `w` lies in the box and is maximised over `points` exactly on `{i, j}`.
pub fn verify_certificate(points: &[LatticePoint], edge: &HullEdge) -> bool {
    let w = &edge.witness;
    if w.iter()
        .any(|x| x.abs() > BigRational::from_integer(1.into()))
    {
        return false;
    }
    let top = points[edge.i].dot(w);
    if points[edge.j].dot(w) != top {
        return false;
    }
    points
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != edge.i && k != edge.j)
        .all(|(_, r)| r.dot(w) < top)
}

fn check_size(points: &[LatticePoint]) -> Result<usize> {
    let dim = points.first().map_or(0, LatticePoint::dim);
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::SizeMismatch {
            expected: dim,
            got: p.dim(),
        });
    }
    if points.len() > MAX_POINTS || dim > MAX_DIM {
        return Err(Error::HullTooLarge {
            points: points.len(),
            dim,
        });
    }
    Ok(dim)
}

/// Index pairs `(i, j)`, `i < j`, spanning edges of the convex hull.
pub fn hull_edges(points: &[LatticePoint]) -> Result<Vec<(usize, usize)>> {
    Ok(hull_edges_certified(points)?
        .into_iter()
        .map(|e| (e.i, e.j))
        .collect())
}

/// Like [`hull_edges`], with a re-checked certificate for each edge.
pub fn hull_edges_certified(points: &[LatticePoint]) -> Result<Vec<HullEdge>> {
    let dim = check_size(points)?;
    if points.len() <= 2 {
        return Ok(match points {
            [p, q] if p != q => vec![HullEdge {
                i: 0,
                j: 1,
                witness: vec![BigRational::zero(); dim],
            }],
            _ => Vec::new(),
        });
    }
    // a pair sharing its midpoint with another pair cannot be an edge
    let mut sums: HashMap<Vec<i64>, usize> = HashMap::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let s: Vec<i64> = points[i]
                .coords
                .iter()
                .zip(&points[j].coords)
                .map(|(a, b)| a + b)
                .collect();
            *sums.entry(s).or_default() += 1;
        }
    }
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let s: Vec<i64> = points[i]
                .coords
                .iter()
                .zip(&points[j].coords)
                .map(|(a, b)| a + b)
                .collect();
            if sums[&s] > 1 || points[i] == points[j] {
                continue;
            }
            if let Some(witness) = edge_witness(points, i, j) {
                let edge = HullEdge { i, j, witness };
                if !verify_certificate(points, &edge) {
                    return Err(Error::OracleMismatch(format!(
                        "edge certificate for {} {} failed",
                        points[i], points[j]
                    )));
                }
                edges.push(edge);
            }
        }
    }
    Ok(edges)
}

/// Maximise `t` over `w = u - v`, `u, v ∈ [0, 1]ⁿ`, subject to
/// `w·p = w·q` and `w·p - w·r >= t` for every other `r`.
fn edge_witness(points: &[LatticePoint], i: usize, j: usize) -> Option<Vec<BigRational>> {
    let p = &points[i];
    let dim = p.dim();
    let vars = 2 * dim + 1;
    let mut a = Vec::new();
    let mut b = Vec::new();
    let row = |d: &LatticePoint, t: i64| {
        let mut r = vec![0; vars];
        for k in 0..dim {
            r[k] = -d.coords[k];
            r[dim + k] = d.coords[k];
        }
        r[2 * dim] = t;
        r
    };
    for (k, r) in points.iter().enumerate() {
        if k != i && k != j {
            a.push(row(&p.sub(r), 1));
            b.push(0);
        }
    }
    let pq = p.sub(&points[j]);
    let up = row(&pq, 0);
    a.push(up.iter().map(|x| -x).collect());
    a.push(up);
    b.extend([0, 0]);
    for k in 0..2 * dim {
        let mut r = vec![0; vars];
        r[k] = 1;
        a.push(r);
        b.push(1);
    }
    let mut c = vec![0; vars];
    c[2 * dim] = 1;
    match maximize(&c, &a, &b) {
        LpOutcome::Optimal { value, x } if value.is_positive() => {
            Some((0..dim).map(|k| &x[k] - &x[dim + k]).collect())
        }
        _ => None,
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MatroidPolytope {
    n: usize,
    vertices: Vec<LatticePoint>,
    edges: Vec<(usize, usize)>,
}

impl MatroidPolytope {
    /// Sorts and deduplicates `points`, then computes hull edges.
    pub fn new(n: usize, mut points: Vec<LatticePoint>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.dim() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                got: p.dim(),
            });
        }
        points.sort();
        points.dedup();
        let edges = hull_edges(&points)?;
        Ok(MatroidPolytope {
            n,
            vertices: points,
            edges,
        })
    }

    pub fn from_matroid(m: &LagrangianMatroid) -> Result<Self> {
        MatroidPolytope::new(m.n(), vertices_from_matroid(m))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Applies a linear isometry to every vertex. Edges are carried along
    /// rather than recomputed.
    pub fn map_vertices(&self, f: impl Fn(&LatticePoint) -> LatticePoint) -> Result<Self> {
        let moved: Vec<LatticePoint> = self.vertices.iter().map(f).collect();
        let mut order: Vec<usize> = (0..moved.len()).collect();
        order.sort_by(|&a, &b| moved[a].cmp(&moved[b]));
        let mut position = vec![0; moved.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let vertices: Vec<LatticePoint> = order.iter().map(|&k| moved[k].clone()).collect();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::OracleMismatch(
                "map is not injective on vertices".into(),
            ));
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (position[i], position[j]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort();
        Ok(MatroidPolytope {
            n: self.n,
            vertices,
            edges,
        })
    }
}

impl fmt::Debug for MatroidPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatroidPolytope")
            .field("n", &self.n)
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Reflection by a generator: `(j j*)` negates coordinate `j`,
/// `(j k)(j* k*)` swaps coordinates `j` and `k`.
pub fn reflect(p: &MatroidPolytope, g: Generator) -> Result<MatroidPolytope> {
    g.to_signed_perm(p.n())?.act_on_polytope(p)
}

/// A hull edge whose direction is not a root of type `C_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsViolation {
    pub from: AdmissibleSet,
    pub to: AdmissibleSet,
    pub difference: LatticePoint,
}

/// First hull edge (in pair order) with more than two non-zero coordinates
/// in its difference vector.
pub fn gs_violation(m: &LagrangianMatroid) -> Result<Option<GsViolation>> {
    let points = vertices_from_matroid(m);
    let edges = hull_edges(&points)?;
    Ok(edges.into_iter().find_map(|(i, j)| {
        let difference = points[i].sub(&points[j]);
        (difference.support_size() > 2).then(|| GsViolation {
            from: m.bases()[i].clone(),
            to: m.bases()[j].clone(),
            difference,
        })
    }))
}

pub fn gs_check(m: &LagrangianMatroid) -> Result<bool> {
    Ok(gs_violation(m)?.is_none())
}
