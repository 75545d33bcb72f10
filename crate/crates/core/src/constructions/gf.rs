//! Finite fields GF(p^k) with elements coded as base-p digit strings.

use crate::arith::prime_power;
use crate::error::{Error, Result};

/// GF(q). The element with digits `c_0 + c_1 p + ...` stands for
/// `c_0 + c_1 x + ...` modulo a primitive polynomial, chosen as the
/// lexicographically least one so the coding is canonical. For prime `q`
/// the field is plain arithmetic mod q and `x` is the least primitive root.
#[derive(Clone, Debug)]
pub struct Gf {
    p: u64,
    k: u32,
    q: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Gf {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) =
            prime_power(q).ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
        if q > 1 << 24 {
            return Err(Error::invalid(format!("field size {q} is too large")));
        }
        for low in 0..q {
            // Monic polynomial x^k + (lower coefficients coded by `low`). In
            // the prime case scan x - g instead, so x is the least primitive root.
            let coeffs = if k == 1 {
                vec![(p - low % p) % p]
            } else {
                digits(low, p, k)
            };
            if let Some(exp) = power_table(p, k, q, &coeffs) {
                let mut log = vec![0u32; q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                return Ok(Gf { p, k, q, exp, log });
            }
        }
        Err(Error::internal(format!(
            "no primitive polynomial for GF({q})"
        )))
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> u64 {
        if self.q == 2 {
            1
        } else {
            self.exp[1] as u64
        }
    }

    /// `x^i` for `i < k`: an F_p-basis of the field.
    pub fn basis(&self) -> Vec<u64> {
        (0..self.k).map(|i| self.p.pow(i)).collect()
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.k {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q - 1);
        self.exp[e as usize] as u64
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        let e = (self.q - 1 - self.log[a as usize] as u64) % (self.q - 1);
        self.exp[e as usize] as u64
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as u64 * (e % (self.q - 1))) % (self.q - 1);
        self.exp[l as usize] as u64
    }
}

fn digits(mut code: u64, p: u64, k: u32) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Powers of `x` modulo `x^k + Σ coeffs[i] x^i`, if `x` has order `q - 1`.
fn power_table(p: u64, k: u32, q: u64, coeffs: &[u64]) -> Option<Vec<u32>> {
    let k = k as usize;
    let mut cur = vec![0u64; k];
    cur[0] = 1;
    let mut table = Vec::with_capacity(q as usize - 1);
    for i in 0..q - 1 {
        let code = undigits(&cur, p);
        if i > 0 && code == 1 {
            return None;
        }
        table.push(code as u32);
        // Multiply by x and reduce: x^k = -Σ coeffs[i] x^i.
        let carry = cur[k - 1];
        for j in (1..k).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        for j in 0..k {
            cur[j] = (cur[j] + (p - coeffs[j]) * carry) % p;
        }
    }
    (undigits(&cur, p) == 1).then_some(table)
}
