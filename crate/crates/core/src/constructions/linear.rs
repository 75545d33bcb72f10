//! Two-dimensional linear groups as permutation groups.
//!
//! PSL2(q) and PGL2(q) act on the projective line, points `x` for `(x : 1)`
//! and `q` for `∞ = (1 : 0)`. SL2(q) acts on the `q² - 1` nonzero vectors,
//! `(u, v)` at index `u q + v - 1`.

use crate::constructions::gf::Gf;
use crate::error::Result;
use crate::group::Permutation;

/// A 2x2 matrix `[[a, b], [c, d]]` over GF(q).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Matrix2 {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl Matrix2 {
    /// Möbius action `z ↦ (a z + b) / (c z + d)` on the projective line.
    pub fn act_projective(&self, f: &Gf, z: u64) -> u64 {
        let q = f.order();
        let (num, den) = if z == q {
            (self.a, self.c)
        } else {
            (
                f.add(f.mul(self.a, z), self.b),
                f.add(f.mul(self.c, z), self.d),
            )
        };
        if den == 0 {
            q
        } else {
            f.mul(num, f.inv(den))
        }
    }

    pub fn act_vector(&self, f: &Gf, u: u64, v: u64) -> (u64, u64) {
        (
            f.add(f.mul(self.a, u), f.mul(self.b, v)),
            f.add(f.mul(self.c, u), f.mul(self.d, v)),
        )
    }

    pub fn projective_permutation(&self, f: &Gf) -> Permutation {
        let q = f.order();
        let images = (0..=q).map(|z| self.act_projective(f, z) as u32).collect();
        Permutation::from_images(images).expect("invertible matrices permute the projective line")
    }

    pub fn vector_permutation(&self, f: &Gf) -> Permutation {
        let q = f.order();
        let images = (1..q * q)
            .map(|i| {
                let (u, v) = self.act_vector(f, i / q, i % q);
                (u * q + v - 1) as u32
            })
            .collect();
        Permutation::from_images(images).expect("invertible matrices permute nonzero vectors")
    }
}

/// Transvections `[[1, b], [0, 1]]` for `b` in an F_p-basis, and
/// `[[0, -1], [1, 0]]`. Together they generate SL2(q).
pub fn sl2_generators(f: &Gf) -> Vec<Matrix2> {
    let mut gens: Vec<Matrix2> = f
        .basis()
        .into_iter()
        .map(|b| Matrix2 {
            a: 1,
            b,
            c: 0,
            d: 1,
        })
        .collect();
    gens.push(Matrix2 {
        a: 0,
        b: f.neg(1),
        c: 1,
        d: 0,
    });
    gens
}

pub fn psl2_permutations(q: u64) -> Result<Vec<Permutation>> {
    let f = Gf::new(q)?;
    Ok(sl2_generators(&f)
        .iter()
        .map(|m| m.projective_permutation(&f))
        .collect())
}

/// PSL2 generators plus `diag(g, 1)` for a primitive element `g`.
pub fn pgl2_permutations(q: u64) -> Result<Vec<Permutation>> {
    let f = Gf::new(q)?;
    let mut gens: Vec<Matrix2> = sl2_generators(&f);
    gens.push(Matrix2 {
        a: f.primitive(),
        b: 0,
        c: 0,
        d: 1,
    });
    Ok(gens.iter().map(|m| m.projective_permutation(&f)).collect())
}

pub fn sl2_permutations(q: u64) -> Result<Vec<Permutation>> {
    let f = Gf::new(q)?;
    Ok(sl2_generators(&f)
        .iter()
        .map(|m| m.vector_permutation(&f))
        .collect())
}
