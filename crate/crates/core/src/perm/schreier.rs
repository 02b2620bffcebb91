//! Deterministic Schreier–Sims.
//!
//! The base is `1, 2, ..., m-1` in order (levels with a trivial orbit are
//! kept). No randomisation.

use num_bigint::BigUint;
use num_traits::One;

use super::Perm;
use crate::error::{Error, Result};

/// One level of the chain: a base point and a transversal of its orbit under
/// the pointwise stabiliser of all earlier base points.
#[derive(Debug, Clone)]
struct Level {
    base: usize,
    /// `transversal[x]` maps `base` to `x`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    /// Strong generators tagged with the number of leading base points they fix.
    strong: Vec<(Perm, usize)>,
}

impl StabilizerChain {
    pub fn new(gens: &[Perm]) -> Result<Self> {
        let degree = gens.first().map_or(0, Perm::degree);
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, bad.degree()));
        }
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
            strong: Vec::new(),
        };
        for base in 0..degree.saturating_sub(1) {
            chain.push_level(base);
        }
        for g in gens.iter().filter(|g| !g.is_identity()) {
            chain.strong.push((g.clone(), 0));
        }
        for i in 0..chain.levels.len() {
            chain.rebuild_level(i);
        }
        chain.complete();
        Ok(chain)
    }

    fn push_level(&mut self, base: usize) {
        self.levels.push(Level {
            base,
            transversal: Vec::new(),
            orbit: Vec::new(),
        });
    }

    fn generators_at(&self, level: usize) -> impl Iterator<Item = &Perm> {
        self.strong
            .iter()
            .filter(move |(_, tag)| *tag >= level)
            .map(|(g, _)| g)
    }

    fn rebuild_level(&mut self, i: usize) {
        let base = self.levels[i].base;
        let gens: Vec<Perm> = self.generators_at(i).cloned().collect();
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[base] = Some(Perm::identity(self.degree));
        let mut orbit = vec![base];
        let mut next = 0;
        while next < orbit.len() {
            let x = orbit[next];
            next += 1;
            for g in &gens {
                let y = g.image0(x);
                if transversal[y].is_none() {
                    let u = transversal[x].as_ref().unwrap().then_unchecked(g);
                    transversal[y] = Some(u);
                    orbit.push(y);
                }
            }
        }
        let level = &mut self.levels[i];
        level.transversal = transversal;
        level.orbit = orbit;
    }

    /// Strips `g` through levels `from..`. Returns the residue and the level
    /// where stripping stopped (`levels.len()` if it passed every level).
    fn sift(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let x = g.image0(level.base);
            match &level.transversal[x] {
                Some(u) => g = g.then_unchecked(&u.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'levels: while i >= 0 {
            let lvl = i as usize;
            let gens: Vec<Perm> = self.generators_at(lvl).cloned().collect();
            let orbit = self.levels[lvl].orbit.clone();
            for &x in &orbit {
                let ux = self.levels[lvl].transversal[x].clone().unwrap();
                for s in &gens {
                    let y = s.image0(x);
                    let uy = self.levels[lvl].transversal[y].as_ref().unwrap();
                    let schreier = ux.then_unchecked(s).then_unchecked(&uy.inverse());
                    let (residue, stop) = self.sift(schreier, lvl + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    // a residue that fixes all of 1..m-1 is the identity
                    debug_assert!(stop < self.levels.len());
                    self.strong.push((residue, stop));
                    for j in lvl + 1..=stop {
                        self.rebuild_level(j);
                    }
                    i = stop as isize;
                    continue 'levels;
                }
            }
            i -= 1;
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Base points (1-based) whose basic orbit is non-trivial.
    pub fn base(&self) -> Vec<usize> {
        self.levels
            .iter()
            .filter(|l| l.orbit.len() > 1)
            .map(|l| l.base + 1)
            .collect()
    }

    /// Basic orbit lengths along [`StabilizerChain::base`].
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| l.orbit.len())
            .filter(|&len| len > 1)
            .collect()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift(g.clone(), 0);
        residue.is_identity()
    }
}

/// Exact order of the group generated by `gens`.
pub fn group_order(gens: &[Perm]) -> Result<BigUint> {
    Ok(StabilizerChain::new(gens)?.order())
}
