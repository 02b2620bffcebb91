//! Populations of maps for exhaustive and randomised checks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::OrientedMap;
use crate::perm::Perm;

/// Every connected map with `n` edges and canonical edge pairing: one per
/// rotation `sigma` of `S_{2n}` for which `<sigma, alpha>` is transitive.
/// Rotations are visited in lexicographic order of their image tables.
pub fn all_maps(n: usize) -> impl Iterator<Item = OrientedMap> {
    let mut next: Option<Vec<u32>> = Some((0..2 * n as u32).collect());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            next = Some(succ);
        }
        Some(current)
    })
    .filter_map(move |images| OrientedMap::new(Perm::from_zero_based(images)).ok())
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A uniformly random connected map with `n` edges (rejection sampling on `sigma`).
pub fn random_map<R: Rng + ?Sized>(n: usize, rng: &mut R) -> OrientedMap {
    assert!(n >= 1, "a map needs at least one edge");
    let mut images: Vec<u32> = (0..2 * n as u32).collect();
    loop {
        images.shuffle(rng);
        if let Ok(m) = OrientedMap::new(Perm::from_zero_based(images.clone())) {
            return m;
        }
    }
}
