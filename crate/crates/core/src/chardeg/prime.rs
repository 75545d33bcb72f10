use crate::arith::{is_prime, isqrt_ceil, prime_divisors};
use crate::chardeg::field::Fp;
use crate::error::{Error, Result};

/// The prime field used for the modular eigenvector computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularContext {
    pub p: u64,
    pub exponent: u64,
    /// A primitive `exponent`-th root of unity mod p.
    pub omega: u64,
}

impl ModularContext {
    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2⌈√order⌉`, together with
/// a primitive `exponent`-th root of unity.
pub fn choose_dixon_prime(order: u64, exponent: u64) -> Result<ModularContext> {
    if order == 0 || exponent == 0 || order % exponent != 0 {
        return Err(Error::invalid(format!(
            "exponent {exponent} must divide the order {order}"
        )));
    }
    let floor = 2 * isqrt_ceil(order);
    // Least k with k * exponent + 1 > floor.
    let mut p = floor.div_ceil(exponent).max(1) * exponent + 1;
    while !is_prime(p) {
        p += exponent;
    }
    if p >= 1 << 32 {
        return Err(Error::Overflow(format!(
            "modular prime {p} exceeds the 32-bit field implementation"
        )));
    }
    let f = Fp::new(p);
    let generator = primitive_root(f)?;
    let omega = f.pow(generator, (p - 1) / exponent);
    let ctx = ModularContext { p, exponent, omega };
    debug_assert!(is_primitive_root_of_unity(f, omega, exponent));
    Ok(ctx)
}

/// Least generator of the multiplicative group of F_p.
pub fn primitive_root(f: Fp) -> Result<u64> {
    let p = f.modulus();
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_divisors(p - 1)?;
    (2..p)
        .find(|&g| factors.iter().all(|&q| f.pow(g, (p - 1) / q) != 1))
        .ok_or_else(|| Error::internal(format!("no primitive root mod {p}")))
}

pub fn is_primitive_root_of_unity(f: Fp, omega: u64, n: u64) -> bool {
    f.pow(omega, n) == 1
        && prime_divisors(n)
            .map(|qs| qs.iter().all(|&q| f.pow(omega, n / q) != 1))
            .unwrap_or(false)
}
