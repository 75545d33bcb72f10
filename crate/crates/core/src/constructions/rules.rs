//! Composition rules for groups that are not built from permutations.

use std::sync::Arc;

use crate::arith::{is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::group::{CompositionRule, Elements};

/// `P ⋊ <y>` where `P = <x1, x2>` is extraspecial of order `p^3` and exponent
/// `p`, and `y` acts by `x1 ↦ x1^α`, `x2 ↦ x2^β`, `z ↦ z^{αβ}` for
/// `z = [x1, x2]`.
///
/// The word `x1^a x2^b z^c y^d` is coded as `((a p + b) p + c) 2r + d`.
#[derive(Clone, Debug)]
pub struct ExtraspecialSemidirect {
    p: u64,
    r: u64,
    alpha: u64,
    beta: u64,
    /// `alpha^-d` and `beta^-d` mod p for `d < 2r`.
    alpha_inv_pow: Vec<u64>,
    beta_inv_pow: Vec<u64>,
}

fn mul_order(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = x * a % p;
        k += 1;
    }
    k
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let mut acc = 1;
    let (mut base, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl ExtraspecialSemidirect {
    /// Requires `r` an odd prime and `p` a prime with `p ≡ 1 (mod 2r)`.
    /// `α` is the least integer of multiplicative order `2r` mod p and
    /// `β = α^{r-1}`.
    pub fn new(p: u64, r: u64) -> Result<Self> {
        if r < 3 || !is_prime(r) {
            return Err(Error::invalid(format!("r = {r} must be an odd prime")));
        }
        if !is_prime(p) || p % (2 * r) != 1 {
            return Err(Error::invalid(format!(
                "p = {p} must be a prime congruent to 1 mod {}",
                2 * r
            )));
        }
        let size = 2u128 * r as u128 * (p as u128).pow(3);
        if size > u32::MAX as u128 {
            return Err(Error::TooLarge {
                order: size,
                bound: u32::MAX as u64,
            });
        }
        let alpha = (2..p)
            .find(|&a| mul_order(a, p) == 2 * r)
            .expect("p ≡ 1 mod 2r guarantees an element of order 2r");
        let beta = (0..r - 1).fold(1, |acc, _| acc * alpha % p);
        let (ai, bi) = (inverse_mod(alpha, p), inverse_mod(beta, p));
        let powers = |x: u64| -> Vec<u64> {
            let mut v = vec![1u64];
            for _ in 1..2 * r {
                v.push(v.last().unwrap() * x % p);
            }
            v
        };
        Ok(ExtraspecialSemidirect {
            p,
            r,
            alpha,
            beta,
            alpha_inv_pow: powers(ai),
            beta_inv_pow: powers(bi),
        })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn order(&self) -> u64 {
        2 * self.r * self.p.pow(3)
    }

    fn decode(&self, code: u32) -> (u64, u64, u64, u64) {
        let m = 2 * self.r;
        let code = code as u64;
        let d = code % m;
        let h = code / m;
        let c = h % self.p;
        let b = (h / self.p) % self.p;
        let a = h / (self.p * self.p);
        (a, b, c, d)
    }

    fn encode(&self, a: u64, b: u64, c: u64, d: u64) -> u32 {
        (((a * self.p + b) * self.p + c) * 2 * self.r + d) as u32
    }
}

impl CompositionRule for ExtraspecialSemidirect {
    fn size(&self) -> usize {
        self.order() as usize
    }

    fn identity(&self) -> u32 {
        0
    }

    fn multiply(&self, x: u32, y: u32) -> u32 {
        let p = self.p;
        let (a1, b1, c1, d1) = self.decode(x);
        let (a2, b2, c2, d2) = self.decode(y);
        // y^d h y^-d = φ^{-d}(h), where φ(a, b, c) = (αa, βb, αβc).
        let (sa, sb) = (
            self.alpha_inv_pow[d1 as usize],
            self.beta_inv_pow[d1 as usize],
        );
        let (a2, b2, c2) = (a2 * sa % p, b2 * sb % p, c2 * sa % p * sb % p);
        // x2^b x1^a' = x1^a' x2^b z^{-b a'}.
        let a = (a1 + a2) % p;
        let b = (b1 + b2) % p;
        let c = (c1 + c2 + p * p - b1 * a2 % p) % p;
        self.encode(a, b, c, (d1 + d2) % (2 * self.r))
    }

    fn inverse(&self, x: u32) -> u32 {
        let p = self.p;
        let m = 2 * self.r;
        let (a, b, c, d) = self.decode(x);
        // (h y^d)^-1 = y^-d h^-1 = φ^{d}(h^-1) y^-d, computed via φ^{-(m-d)}.
        let (ha, hb) = ((p - a) % p, (p - b) % p);
        let hc = (2 * p - c - (a * b) % p) % p;
        let e = ((m - d) % m) as usize;
        let (sa, sb) = (self.alpha_inv_pow[e], self.beta_inv_pow[e]);
        self.encode(ha * sa % p, hb * sb % p, hc * sa % p * sb % p, (m - d) % m)
    }

    fn generators(&self) -> Vec<u32> {
        vec![
            self.encode(1, 0, 0, 0),
            self.encode(0, 1, 0, 0),
            self.encode(0, 0, 0, 1),
        ]
    }
}

/// Direct product of two enumerated groups, coded `a * |B| + b`.
#[derive(Debug)]
pub struct ProductRule {
    left: Arc<Elements>,
    right: Arc<Elements>,
}

impl ProductRule {
    pub fn new(left: Arc<Elements>, right: Arc<Elements>) -> Result<Self> {
        let size = left.len() as u128 * right.len() as u128;
        if size > u32::MAX as u128 {
            return Err(Error::TooLarge {
                order: size,
                bound: u32::MAX as u64,
            });
        }
        Ok(ProductRule { left, right })
    }

    fn split(&self, x: u32) -> (u32, u32) {
        let n = self.right.len() as u32;
        (x / n, x % n)
    }

    fn join(&self, a: u32, b: u32) -> u32 {
        a * self.right.len() as u32 + b
    }
}

impl CompositionRule for ProductRule {
    fn size(&self) -> usize {
        self.left.len() * self.right.len()
    }

    fn identity(&self) -> u32 {
        0
    }

    fn multiply(&self, x: u32, y: u32) -> u32 {
        let (a1, b1) = self.split(x);
        let (a2, b2) = self.split(y);
        self.join(self.left.mul(a1, a2), self.right.mul(b1, b2))
    }

    fn inverse(&self, x: u32) -> u32 {
        let (a, b) = self.split(x);
        self.join(self.left.inv(a), self.right.inv(b))
    }

    fn generators(&self) -> Vec<u32> {
        let mut gens: Vec<u32> = self
            .left
            .generators()
            .iter()
            .map(|&g| self.join(g, 0))
            .collect();
        gens.extend(self.right.generators().iter().map(|&h| self.join(0, h)));
        gens
    }
}

/// Whether `a` has multiplicative order exactly `n` mod the prime `p`.
pub fn has_order(a: u64, n: u64, p: u64) -> bool {
    let pow = |e: u64| {
        let (mut acc, mut base, mut e) = (1u64, a % p, e);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    pow(n) == 1
        && prime_divisors(n)
            .map(|qs| qs.iter().all(|&q| pow(n / q) != 1))
            .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_for_seven_and_three() {
        let g = ExtraspecialSemidirect::new(7, 3).unwrap();
        assert_eq!((g.alpha(), g.beta()), (3, 2));
        assert!(has_order(g.alpha(), 6, 7));
        assert!(has_order(g.beta(), 3, 7));
        assert_eq!(g.order(), 2058);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(ExtraspecialSemidirect::new(7, 2).is_err());
        assert!(ExtraspecialSemidirect::new(11, 3).is_err());
        assert!(ExtraspecialSemidirect::new(13, 9).is_err());
    }

    #[test]
    fn group_axioms_on_samples() {
        let g = ExtraspecialSemidirect::new(7, 3).unwrap();
        let n = g.size() as u32;
        let samples: Vec<u32> = (0..n).step_by(37).chain([1, 6, n - 1]).collect();
        for &x in &samples {
            assert_eq!(g.multiply(x, g.inverse(x)), 0);
            assert_eq!(g.multiply(g.inverse(x), x), 0);
            assert_eq!(g.multiply(x, 0), x);
            for &y in &samples {
                for &z in samples.iter().step_by(5) {
                    assert_eq!(
                        g.multiply(g.multiply(x, y), z),
                        g.multiply(x, g.multiply(y, z))
                    );
                }
            }
        }
    }

    #[test]
    fn presentation_relations_hold() {
        let g = ExtraspecialSemidirect::new(7, 3).unwrap();
        let [x1, x2, y] = g.generators()[..] else {
            unreachable!()
        };
        let pow = |x: u32, k: u64| (0..k).fold(0, |acc, _| g.multiply(acc, x));
        let comm =
            |a: u32, b: u32| g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
        assert_eq!(pow(x1, 7), 0);
        assert_eq!(pow(x2, 7), 0);
        let z = comm(x1, x2);
        assert_ne!(z, 0);
        assert_eq!(pow(z, 7), 0);
        assert_eq!(comm(x1, z), 0);
        assert_eq!(comm(x2, z), 0);
        assert_eq!(pow(y, 6), 0);
        // y^-1 x1 y = x1^α and y^-1 x2 y = x2^β.
        let conj = |h: u32| g.multiply(g.multiply(g.inverse(y), h), y);
        assert_eq!(conj(x1), pow(x1, g.alpha()));
        assert_eq!(conj(x2), pow(x2, g.beta()));
        // y inverts the centre.
        assert_eq!(conj(z), g.inverse(z));
    }
}
