//! Simultaneous eigenvectors of the class matrices over F_p.
//!
//! The class algebra `Z(F_p G)` is split semisimple when `p` does not divide
//! `|G|` and contains the `exp(G)`-th roots of unity, so multiplication by
//! the class sums is simultaneously diagonalizable with basis the primitive
//! central idempotents `e_χ`. Instead of splitting whole subspaces, this
//! module splits idempotents: start from `1 = Σ e_χ`, and for each class sum
//! `K_i` in index order decompose every current idempotent `f` into its
//! components along the distinct eigenvalues of `K_i`. The components are
//! read off the Krylov sequence `f, K_i f, K_i² f, ...` with Lagrange
//! polynomials, so a split costs a handful of sparse products. Once there are
//! `r` idempotents each one is a single `e_χ`.

use crate::chardeg::field::Fp;
use crate::chardeg::poly;
use crate::chardeg::prime::ModularContext;
use crate::chardeg::structure::StructureConstants;
use crate::error::{Error, Result};

/// `K_i · z` for `z` given in the class-sum basis.
fn multiply_by_class(f: Fp, sc: &StructureConstants, i: usize, z: &[u64]) -> Vec<u64> {
    let mut acc = vec![0u64; z.len()];
    for e in sc.row(i) {
        let zj = z[e.j as usize];
        if zj != 0 {
            let k = e.k as usize;
            acc[k] += e.count * zj;
            // Entries are below p^2 < 2^64 after one reduction; keep them small.
            if acc[k] >= 1 << 62 {
                acc[k] %= f.modulus();
            }
        }
    }
    acc.iter_mut().for_each(|x| *x = f.reduce(*x));
    acc
}

/// Splits `v` along the eigenvalues of multiplication by `K_i`. Returns the
/// nonzero components; a single component means `v` was not split.
fn split(f: Fp, sc: &StructureConstants, i: usize, v: &[u64]) -> Vec<Vec<u64>> {
    let r = v.len();
    let mut krylov: Vec<Vec<u64>> = Vec::new();
    // Echelon rows: (pivot, row with pivot entry 1, combination of Krylov vectors).
    let mut echelon: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut current = v.to_vec();
    let minimal = loop {
        let t = krylov.len();
        let mut w = current.clone();
        let mut comb = vec![0u64; t + 1];
        comb[t] = 1;
        for (pivot, row, rc) in &echelon {
            let factor = w[*pivot];
            if factor == 0 {
                continue;
            }
            for (x, &y) in w.iter_mut().zip(row) {
                if y != 0 {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
            for (x, &y) in comb.iter_mut().zip(rc) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
        match w.iter().position(|&x| x != 0) {
            None => break comb,
            Some(pivot) => {
                let inv = f.inv(w[pivot]);
                w.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                comb.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                echelon.push((pivot, w, comb));
            }
        }
        let next = multiply_by_class(f, sc, i, &current);
        krylov.push(std::mem::replace(&mut current, next));
        if krylov.len() > r {
            unreachable!("Krylov sequence longer than the dimension");
        }
    };
    if minimal.len() <= 2 {
        return vec![v.to_vec()];
    }
    let roots = poly::distinct_roots(f, &minimal);
    roots
        .iter()
        .map(|&lambda| {
            let mut lagrange = poly::deflate(f, &minimal, lambda);
            let scale = f.inv(poly::eval(f, &lagrange, lambda));
            lagrange.iter_mut().for_each(|c| *c = f.mul(*c, scale));
            let mut out = vec![0u64; r];
            for (c, kv) in lagrange.iter().zip(&krylov) {
                if *c == 0 {
                    continue;
                }
                for (o, &x) in out.iter_mut().zip(kv) {
                    *o = f.add(*o, f.mul(*c, x));
                }
            }
            out
        })
        .collect()
}

/// Primitive central idempotents `e_χ` in the class-sum basis, one per
/// irreducible character.
pub fn central_idempotents(sc: &StructureConstants, ctx: &ModularContext) -> Result<Vec<Vec<u64>>> {
    let f = ctx.field();
    let r = sc.r();
    let mut unit = vec![0u64; r];
    unit[0] = 1;
    let mut pieces = vec![unit];
    for i in 1..r {
        if pieces.len() == r {
            break;
        }
        pieces = pieces.iter().flat_map(|v| split(f, sc, i, v)).collect();
    }
    if pieces.len() != r {
        return Err(Error::internal(format!(
            "eigenspace splitting stopped at {} of {r} components",
            pieces.len()
        )));
    }
    Ok(pieces)
}

/// Common right eigenvectors `w` of all class matrices `M_i`, normalized to
/// `w[0] = 1`, so that `w[k] = |C_k| χ(g_k) / χ(1) mod p`.
pub fn simultaneous_eigenvectors(
    sc: &StructureConstants,
    ctx: &ModularContext,
    class_sizes: &[u64],
) -> Result<Vec<Vec<u64>>> {
    let f = ctx.field();
    let classes = sc.classes();
    let idempotents = central_idempotents(sc, ctx)?;
    idempotents
        .iter()
        .map(|e| {
            // e[k] = χ(1) χ(g_k^-1) / |G|, so the identity coordinate is
            // χ(1)^2 / |G|, which is a unit because p does not divide |G|.
            if e[0] == 0 {
                return Err(Error::internal("idempotent with zero identity coordinate"));
            }
            let scale = f.inv(e[0]);
            Ok((0..e.len())
                .map(|k| {
                    let size = f.reduce(class_sizes[k]);
                    f.mul(f.mul(size, e[classes.inverse_class(k)]), scale)
                })
                .collect())
        })
        .collect()
}
