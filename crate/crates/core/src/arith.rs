//! Integer helpers: gcd/lcm, trial-division factorization, prime tests and
//! primitive prime divisors of `q^n - 1`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Smallest `s` with `s * s >= n`.
pub fn isqrt_ceil(n: u64) -> u64 {
    let s = isqrt(n);
    if s * s == n {
        s
    } else {
        s + 1
    }
}

/// Largest `s` with `s * s <= n`.
pub fn isqrt(n: u64) -> u64 {
    let mut s = (n as f64).sqrt() as u64;
    while s * s > n {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|sq| sq <= n) {
        s += 1;
    }
    s
}

/// Prime factorization by trial division, as an ordered map prime -> exponent.
pub fn factorize(n: u64) -> Result<BTreeMap<u64, u32>> {
    if n == 0 {
        return Err(Error::invalid("cannot factorize 0"));
    }
    let mut out = BTreeMap::new();
    let mut m = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        while m % d == 0 {
            *out.entry(d).or_insert(0) += 1;
            m /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        *out.entry(m).or_insert(0) += 1;
    }
    Ok(out)
}

/// The set of prime divisors of `n`; empty for `n = 1`.
pub fn prime_divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.into_keys().collect())
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n)? {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Largest power of the prime `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::invalid("p-part of 0 is undefined"));
    }
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let mut m = n;
    let mut part = 1;
    while m % p == 0 {
        m /= p;
        part *= p;
    }
    Ok(part)
}

/// If `q = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize(q).ok()?;
    if f.len() == 1 {
        f.into_iter().next()
    } else {
        None
    }
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return a * b % m;
    }
    let (mut a, mut b) = (a % m, b % m);
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

fn pow_mod(mut base: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact below 3.3e24.
pub fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime(n: u64) -> bool {
    is_prime_u128(n as u128)
}

fn pollard_rho(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    for c in 1u128.. {
        let f = |x: u128| add_mod(mul_mod(x, x, n), c, n);
        let (mut x, mut y, mut d) = (2u128, 2u128, 1u128);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u128(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

fn factor_into(n: u128, out: &mut BTreeSet<u128>) {
    if n == 1 {
        return;
    }
    if is_prime_u128(n) {
        out.insert(n);
        return;
    }
    let d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

fn prime_set_u128(mut n: u128) -> BTreeSet<u128> {
    let mut out = BTreeSet::new();
    for p in 2u128..1000 {
        if n % p == 0 {
            out.insert(p);
            while n % p == 0 {
                n /= p;
            }
        }
    }
    factor_into(n, &mut out);
    out
}

/// Primes dividing `q^n - 1` that divide no `q^i - 1` with `0 < i < n`.
///
/// Fails with an overflow error when `q^n` does not fit in 128 bits.
pub fn primitive_prime_divisors(q: u64, n: u32) -> Result<BTreeSet<u128>> {
    if q < 2 || n < 1 {
        return Err(Error::invalid(format!(
            "primitive prime divisors need q >= 2 and n >= 1, got q = {q}, n = {n}"
        )));
    }
    let power = |e: u32| -> Result<u128> {
        (q as u128)
            .checked_pow(e)
            .map(|v| v - 1)
            .ok_or_else(|| Error::Overflow(format!("{q}^{e} does not fit in 128 bits")))
    };
    let mut m = power(n)?;
    for i in 1..n {
        let earlier = power(i)?;
        let mut g = gcd_u128(m, earlier);
        while g > 1 {
            m /= g;
            g = gcd_u128(m, g);
        }
    }
    Ok(prime_set_u128(m))
}
