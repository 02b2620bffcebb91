#![allow(dead_code)]

use lagmap::hyperoct::{Element, Generator};
use lagmap::lagrangian::{bases_of_map, AdmissibleSet, LagrangianMatroid};
use lagmap::map::generate::{all_maps, random_map};
use lagmap::{EdgeSubset, OrientedMap};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every map with `1 <= n <= max_n` edges and the standard edge involution.
pub fn exhaustive(max_n: usize) -> Vec<OrientedMap> {
    (1..=max_n).flat_map(all_maps).collect()
}

/// `count` maps with edge counts drawn uniformly from `1..=max_n`.
pub fn random_maps(count: usize, max_n: usize, seed: u64) -> Vec<OrientedMap> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_n);
            random_map(n, &mut r)
        })
        .collect()
}

pub fn random_subset<R: Rng>(n: usize, r: &mut R) -> EdgeSubset {
    EdgeSubset::from_mask(n, r.gen_range(0..1u64 << n))
}

/// Duplicate-free collections of admissible sets, `n <= max_n`, with
/// `n >= 3` three times out of four when possible (smaller collections always
/// satisfy symmetric exchange). A third are
/// uniform random subsets, a third are matroids of random maps (twisted at
/// random), and a third are such matroids with one set added or removed, so
/// that both outcomes of an axiom check are well represented.
pub fn random_collection<R: Rng>(max_n: usize, r: &mut R) -> LagrangianMatroid {
    let n = if max_n >= 3 && r.gen_bool(0.75) {
        r.gen_range(3..=max_n)
    } else {
        r.gen_range(1..=max_n)
    };
    let all: Vec<AdmissibleSet> = AdmissibleSet::all(n).collect();
    loop {
        let kind = r.gen_range(0..3);
        let sets: Vec<AdmissibleSet> = if kind == 0 {
            let density = r.gen_range(0.1..0.9);
            all.iter()
                .filter(|_| r.gen_bool(density))
                .cloned()
                .collect()
        } else {
            let m = bases_of_map(&random_map(n, r)).unwrap();
            let m = m.twist(&random_subset(n, r)).unwrap();
            let mut sets = m.bases().to_vec();
            if kind == 2 {
                if r.gen_bool(0.5) && sets.len() > 1 {
                    let k = r.gen_range(0..sets.len());
                    sets.remove(k);
                } else if let Some(extra) = all
                    .iter()
                    .filter(|b| !sets.contains(b))
                    .collect::<Vec<_>>()
                    .choose(r)
                {
                    sets.push((*extra).clone());
                }
            }
            sets
        };
        if !sets.is_empty() {
            return LagrangianMatroid::new(n, sets).unwrap();
        }
    }
}

/// All generators `(j j*)`, `(j k)(j* k*)`, and `(j k*)(j* k)` for `j < k`.
pub fn generators(n: usize) -> Vec<Generator> {
    let e = |index, starred| Element { index, starred };
    let mut out: Vec<Generator> = (1..=n).map(Generator::Flip).collect();
    for j in 1..=n {
        for k in j + 1..=n {
            out.push(Generator::Pair(e(j, false), e(k, false)));
            out.push(Generator::Pair(e(j, false), e(k, true)));
        }
    }
    out
}

pub fn triangle() -> OrientedMap {
    OrientedMap::new(lagmap::Perm::parse("(1 3)(2 5)(4 6)", 6).unwrap()).unwrap()
}
