use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{ConjugacyData, Elements};

/// One nonzero class multiplication coefficient `a[i][j][k]` of a fixed `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub j: u32,
    pub k: u32,
    pub count: u64,
}

/// Class multiplication coefficients
/// `a[i][j][k] = #{(x, y) ∈ C_i × C_j : xy = rep_k}`.
///
/// Each slice `a[i][·][·]` is computed the first time it is requested, at a
/// cost of `|C_i| · r` group multiplications.
#[derive(Debug)]
pub struct StructureConstants {
    elements: Arc<Elements>,
    classes: Arc<ConjugacyData>,
    rows: Vec<OnceLock<Vec<Entry>>>,
}

impl StructureConstants {
    pub fn new(elements: Arc<Elements>, classes: Arc<ConjugacyData>) -> Result<Self> {
        let total: u64 = classes.class_sizes().iter().sum();
        if total != elements.len() as u64 {
            return Err(Error::invalid(format!(
                "classes cover {total} elements but the group has {}",
                elements.len()
            )));
        }
        let r = classes.len();
        Ok(StructureConstants {
            elements,
            classes,
            rows: (0..r).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn classes(&self) -> &ConjugacyData {
        &self.classes
    }

    /// Nonzero entries of `a[i][·][·]`, sorted by `(k, j)`.
    pub fn row(&self, i: usize) -> &[Entry] {
        self.rows[i].get_or_init(|| self.compute_row(i))
    }

    fn compute_row(&self, i: usize) -> Vec<Entry> {
        let r = self.r();
        let el = &self.elements;
        let members = self.classes.members(i);
        let inverses: Vec<u32> = members.iter().map(|&x| el.inv(x)).collect();
        let mut counts = vec![0u64; r];
        let mut touched = Vec::new();
        let mut out = Vec::new();
        for (k, &rep) in self.classes.class_reps().iter().enumerate() {
            for &x_inv in &inverses {
                let j = self.classes.class_of(el.mul(x_inv, rep)) as usize;
                if counts[j] == 0 {
                    touched.push(j);
                }
                counts[j] += 1;
            }
            touched.sort_unstable();
            for &j in &touched {
                out.push(Entry {
                    j: j as u32,
                    k: k as u32,
                    count: counts[j],
                });
                counts[j] = 0;
            }
            touched.clear();
        }
        out
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        let row = self.row(i);
        let key = (k as u32, j as u32);
        row.binary_search_by_key(&key, |e| (e.k, e.j))
            .map(|pos| row[pos].count)
            .unwrap_or(0)
    }

    /// The class matrix `M_i` with `(M_i)[j][k] = a[i][j][k]`, densely.
    pub fn matrix(&self, i: usize) -> Vec<Vec<u64>> {
        let r = self.r();
        let mut m = vec![vec![0u64; r]; r];
        for e in self.row(i) {
            m[e.j as usize][e.k as usize] = e.count;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupHandle, Limits, Permutation};

    fn handle(gens: &[&[u32]]) -> GroupHandle {
        let gens = gens
            .iter()
            .map(|g| Permutation::from_images(g.to_vec()).unwrap())
            .collect();
        GroupHandle::from_generators(gens, Limits::default()).unwrap()
    }

    fn constants(g: &GroupHandle) -> StructureConstants {
        StructureConstants::new(g.elements().unwrap(), g.conjugacy_classes().unwrap()).unwrap()
    }

    /// Coefficients by looping over all pairs of class members.
    fn brute_force(g: &GroupHandle, i: usize, j: usize, k: usize) -> u64 {
        let el = g.elements().unwrap();
        let cl = g.conjugacy_classes().unwrap();
        let rep = cl.class_reps()[k];
        let mut n = 0;
        for &x in cl.members(i) {
            for &y in cl.members(j) {
                if el.mul(x, y) == rep {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn cyclic_of_order_two() {
        let g = handle(&[&[1, 0]]);
        let sc = constants(&g);
        assert_eq!(sc.get(1, 1, 0), 1);
        assert_eq!(sc.get(1, 1, 1), 0);
    }

    #[test]
    fn sym4_matches_brute_force_and_laws() {
        let g = handle(&[&[1, 0, 2, 3], &[1, 2, 3, 0]]);
        let sc = constants(&g);
        let cl = g.conjugacy_classes().unwrap();
        let sizes = cl.class_sizes();
        let r = sc.r();
        for i in 0..r {
            for j in 0..r {
                let mut mass = 0;
                for (k, &size) in sizes.iter().enumerate() {
                    let a = sc.get(i, j, k);
                    assert_eq!(a, brute_force(&g, i, j, k));
                    mass += a * size;
                }
                assert_eq!(mass, sizes[i] * sizes[j]);
                let expected = if j == cl.inverse_class(i) {
                    sizes[i]
                } else {
                    0
                };
                assert_eq!(sc.get(i, j, 0), expected);
            }
        }
        for j in 0..r {
            for k in 0..r {
                assert_eq!(sc.get(0, j, k), u64::from(j == k));
            }
        }
    }

    #[test]
    fn sym3_transposition_class() {
        let g = handle(&[&[1, 0, 2], &[1, 2, 0]]);
        let sc = constants(&g);
        let cl = g.conjugacy_classes().unwrap();
        let t = cl.class_sizes().iter().position(|&s| s == 3).unwrap();
        assert_eq!(sc.get(t, t, 0), 3);
        assert_eq!(brute_force(&g, t, t, 0), 3);
    }
}
