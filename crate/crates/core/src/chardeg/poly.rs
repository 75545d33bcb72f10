//! Dense univariate polynomials over F_p, lowest coefficient first.

use super::field::Fp;

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn eval(f: Fp, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Remainder of `a` modulo `b`; `b` must be nonzero.
fn rem(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = f.inv(b[db]);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = f.mul(r[dr], lead_inv);
        let shift = dr - db;
        for (i, &c) in b[..=db].iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(factor, c));
        }
        r = trim(r);
    }
    r
}

fn quotient(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = f.inv(b[db]);
    let mut r = trim(a.to_vec());
    let mut q = vec![0u64; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = f.mul(r[dr], lead_inv);
        let shift = dr - db;
        q[shift] = factor;
        for (i, &c) in b[..=db].iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(factor, c));
        }
        r = trim(r);
    }
    trim(q)
}

fn mul_mod(f: Fp, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    rem(f, &out, m)
}

fn pow_mod(f: Fp, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(f, &acc, &b, m);
        }
        b = mul_mod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

fn gcd(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    if let Some(d) = degree(&a) {
        let inv = f.inv(a[d]);
        a.iter_mut().for_each(|c| *c = f.mul(*c, inv));
    }
    a
}

/// Roots of a polynomial known to split into distinct linear factors over F_p,
/// in increasing order. Uses equal-degree splitting with shifts `x + a` for
/// `a = 0, 1, 2, ...`, so the result is deterministic.
pub fn distinct_roots(f: Fp, poly: &[u64]) -> Vec<u64> {
    let mut roots = Vec::new();
    let mut stack = vec![trim(poly.to_vec())];
    let p = f.modulus();
    while let Some(g) = stack.pop() {
        match degree(&g) {
            None | Some(0) => continue,
            Some(1) => {
                roots.push(f.div(f.neg(g[0]), g[1]));
                continue;
            }
            Some(d) if (d as u64) * p <= 1 << 22 => {
                roots.extend((0..p).filter(|&x| eval(f, &g, x) == 0));
                continue;
            }
            Some(_) => {}
        }
        let mut shift = 0u64;
        loop {
            let h = pow_mod(f, &[shift, 1], (p - 1) / 2, &g);
            let mut h = h;
            if h.is_empty() {
                h = vec![0];
            }
            h[0] = f.sub(h[0], 1);
            let d = gcd(f, &g, &h);
            let dd = degree(&d).unwrap_or(0);
            if dd > 0 && dd < degree(&g).unwrap() {
                let other = quotient(f, &g, &d);
                stack.push(d);
                stack.push(other);
                break;
            }
            shift += 1;
            assert!(
                shift < p,
                "polynomial does not split into distinct linear factors"
            );
        }
    }
    roots.sort_unstable();
    roots
}

/// Coefficients of the product of `x - r` over the given roots.
pub fn from_roots(f: Fp, roots: &[u64]) -> Vec<u64> {
    let mut out = vec![1u64];
    for &r in roots {
        let mut next = vec![0u64; out.len() + 1];
        for (i, &c) in out.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(c, r));
        }
        out = next;
    }
    out
}

/// Divides a polynomial by `x - r`, assuming `r` is a root.
pub fn deflate(f: Fp, poly: &[u64], r: u64) -> Vec<u64> {
    let n = poly.len();
    let mut out = vec![0u64; n - 1];
    let mut carry = 0u64;
    for i in (1..n).rev() {
        carry = f.add(poly[i], f.mul(carry, r));
        out[i - 1] = carry;
    }
    out
}
