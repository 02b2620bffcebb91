use super::{EdgeSubset, OrientedMap};
use crate::error::{Error, Result};

pub const DEFAULT_ORBIT_BOUND: usize = 20;

/// One partial dual in the orbit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRow {
    pub edges: EdgeSubset,
    pub vertices: usize,
    pub faces: usize,
    pub genus: usize,
    pub one_face: bool,
    /// Isomorphism class within the orbit, numbered from 0 in first-seen order.
    pub class: usize,
    pub map: OrientedMap,
}

/// All `2^n` partial duals of `map`, ordered by the edge subset read as a
/// binary number (edge `j` is bit `j - 1`).
pub fn enumerate_partial_duals(map: &OrientedMap, bound: usize) -> Result<Vec<OrbitRow>> {
    let n = map.n();
    if n > bound || n >= 64 {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut rows: Vec<OrbitRow> = Vec::with_capacity(1 << n);
    let mut representatives: Vec<usize> = Vec::new();
    for mask in 0..1u64 << n {
        let edges = EdgeSubset::from_mask(n, mask);
        let pd = map.partial_dual(&edges)?;
        let (vertices, _, faces) = pd.counts();
        let class = representatives
            .iter()
            .position(|&r| {
                let rep = &rows[r];
                rep.vertices == vertices
                    && rep.faces == faces
                    && rep.map.isomorphism_to(&pd).is_some()
            })
            .unwrap_or_else(|| {
                representatives.push(rows.len());
                representatives.len() - 1
            });
        rows.push(OrbitRow {
            edges,
            vertices,
            faces,
            genus: pd.genus(),
            one_face: faces == 1,
            class,
            map: pd,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn map(sigma: &str, n: usize) -> OrientedMap {
        OrientedMap::new(Perm::parse(sigma, 2 * n).unwrap()).unwrap()
    }

    #[test]
    fn triangle_orbit() {
        let t = map("(1 3)(2 5)(4 6)", 3);
        let rows = enumerate_partial_duals(&t, DEFAULT_ORBIT_BOUND).unwrap();
        assert_eq!(rows.len(), 8);
        for j in 1..=3 {
            let row = &rows[1 << (j - 1)];
            assert_eq!(row.edges.edges(), vec![j]);
            assert_eq!(row.genus, 1);
        }
        assert_eq!(rows[1].class, rows[2].class);
        assert_eq!(rows[2].class, rows[4].class);
        assert_eq!(rows[0].map, t);
        assert_eq!(rows[7].map, t.dual());
        assert_eq!(rows.iter().filter(|r| r.one_face).count(), 3);
    }

    #[test]
    fn single_edge_orbit() {
        let m = map("(1)(2)", 1);
        let rows = enumerate_partial_duals(&m, DEFAULT_ORBIT_BOUND).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].one_face);
        assert_eq!(rows[1].faces, 2);
        assert_ne!(rows[0].class, rows[1].class);
    }

    #[test]
    fn bound_is_enforced() {
        let t = map("(1 3)(2 5)(4 6)", 3);
        assert_eq!(
            enumerate_partial_duals(&t, 2),
            Err(Error::BoundExceeded { n: 3, bound: 2 })
        );
    }
}
