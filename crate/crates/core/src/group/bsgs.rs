//! Deterministic Schreier-Sims.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: u32,
    generators: Vec<Permutation>,
    /// Orbit of the base point in discovery order.
    orbit: Vec<u32>,
    /// `transversal[&b]` maps the base point to `b`.
    transversal: HashMap<u32, Permutation>,
}

impl Level {
    fn new(base_point: u32, generators: Vec<Permutation>, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            generators,
            orbit: Vec::new(),
            transversal: HashMap::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.transversal.clear();
        self.orbit.push(self.base_point);
        self.transversal
            .insert(self.base_point, Permutation::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head];
            head += 1;
            for s in &self.generators {
                let image = s.apply(beta);
                if !self.transversal.contains_key(&image) {
                    let u = self.transversal[&beta].then(s);
                    self.transversal.insert(image, u);
                    self.orbit.push(image);
                }
            }
        }
    }
}

/// A base and strong generating set for a permutation group.
///
/// Base points are chosen as the least point moved by the generator that
/// forces a new level, which makes the structure a pure function of the
/// generator list.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(generators: &[Permutation]) -> Result<Self> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        for g in &gens {
            if bsgs
                .levels
                .iter()
                .all(|l| g.apply(l.base_point) == l.base_point)
            {
                let point = g.first_moved().expect("non-identity generator");
                bsgs.levels.push(Level::new(point, Vec::new(), degree));
            }
        }
        for i in 0..bsgs.levels.len() {
            let fixed: Vec<u32> = bsgs.levels[..i].iter().map(|l| l.base_point).collect();
            bsgs.levels[i].generators = gens
                .iter()
                .filter(|g| fixed.iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            bsgs.levels[i].rebuild_orbit(degree);
        }
        bsgs.complete();
        Ok(bsgs)
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match self.find_missing(level) {
                Some((residue, stop)) => {
                    if stop == self.levels.len() {
                        let point = residue.first_moved().expect("non-identity residue");
                        self.levels.push(Level::new(point, Vec::new(), self.degree));
                    }
                    for l in level + 1..=stop {
                        self.levels[l].generators.push(residue.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    i = stop as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// First Schreier generator at `level` that does not sift through the
    /// levels below it, with the level where sifting stopped.
    fn find_missing(&self, level: usize) -> Option<(Permutation, usize)> {
        let lv = &self.levels[level];
        for &beta in &lv.orbit {
            let u_beta = &lv.transversal[&beta];
            for s in &lv.generators {
                let image = s.apply(beta);
                let schreier = u_beta.then(s).then(&lv.transversal[&image].inverse());
                if schreier.is_identity() {
                    continue;
                }
                let (residue, stop) = self.strip(schreier, level + 1);
                if stop < self.levels.len() || !residue.is_identity() {
                    return Some((residue, stop));
                }
            }
        }
        None
    }

    /// Sifts `g` through the levels starting at `from`. Returns the residue
    /// and the index of the level where an orbit test failed, or the number
    /// of levels if every test passed.
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (m, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.apply(level.base_point);
            match level.transversal.get(&beta) {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, m),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Saturates at `u128::MAX` for groups too large to count exactly.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, stop) = self.strip(g.clone(), 0);
        stop == self.levels.len() && residue.is_identity()
    }

    /// Transversal elements per level, each list in orbit discovery order.
    pub(crate) fn transversals(&self) -> Vec<Vec<&Permutation>> {
        self.levels
            .iter()
            .map(|l| l.orbit.iter().map(|b| &l.transversal[b]).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[u32]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        let gens = [perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])];
        let bsgs = Bsgs::new(&gens).unwrap();
        assert_eq!(bsgs.order(), 24);
        assert_eq!(bsgs.base()[0], 0);
        assert!(bsgs.contains(&perm(&[3, 2, 1, 0])));
    }

    #[test]
    fn trivial_group() {
        let bsgs = Bsgs::new(&[Permutation::identity(3)]).unwrap();
        assert_eq!(bsgs.order(), 1);
        assert!(bsgs.base().is_empty());
    }

    #[test]
    fn cyclic_subgroup_membership() {
        let c = perm(&[1, 2, 3, 0]);
        let bsgs = Bsgs::new(std::slice::from_ref(&c)).unwrap();
        assert_eq!(bsgs.order(), 4);
        assert!(bsgs.contains(&c.pow(2)));
        assert!(!bsgs.contains(&perm(&[1, 0, 2, 3])));
    }

    #[test]
    fn rejects_bad_generator_lists() {
        assert_eq!(Bsgs::new(&[]).unwrap_err(), Error::NoGenerators);
        assert!(matches!(
            Bsgs::new(&[Permutation::identity(2), Permutation::identity(3)]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn larger_symmetric_group() {
        let n = 8;
        let mut t: Vec<u32> = (0..n).collect();
        t.swap(0, 1);
        let c: Vec<u32> = (0..n).map(|i| (i + 1) % n).collect();
        let bsgs = Bsgs::new(&[perm(&t), perm(&c)]).unwrap();
        assert_eq!(bsgs.order(), 40320);
    }
}
