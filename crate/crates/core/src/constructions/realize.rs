use std::sync::Arc;

use crate::arith::{gcd, is_prime, prime_power};
use crate::constructions::cycles::parse_cycles;
use crate::constructions::linear::{pgl2_permutations, psl2_permutations, sl2_permutations};
use crate::constructions::rules::{ExtraspecialSemidirect, ProductRule};
use crate::constructions::spec::GroupSpec;
use crate::error::{Error, Result};
use crate::group::{CompositionRule, GroupHandle, Limits, Permutation};

/// Largest `n` accepted by `Sym(n)` and `Alt(n)`.
pub const MAX_SYMMETRIC_DEGREE: u64 = 64;

/// Largest `q` accepted by the linear group constructors.
pub const MAX_FIELD_SIZE: u64 = 256;

enum Built {
    Perms {
        degree: usize,
        gens: Vec<Permutation>,
    },
    Rule(Arc<dyn CompositionRule>),
}

/// Builds the group described by `spec`.
///
/// Everything except `ExtraspecialSemidirect` (and products involving it) is
/// permutation-backed, so the order is known without enumerating.
pub fn realize(spec: &GroupSpec, limits: Limits) -> Result<GroupHandle> {
    let handle = match build(spec, limits)? {
        Built::Perms { gens, .. } => GroupHandle::from_generators(gens, limits)?,
        Built::Rule(rule) => GroupHandle::from_rule(rule, limits)?,
    };
    if let Some(expected) = expected_order(spec) {
        if expected != handle.order() {
            return Err(Error::internal(format!(
                "{spec} has order {} but {expected} was expected",
                handle.order()
            )));
        }
    }
    Ok(handle)
}

/// The order predicted by the standard formulas, when it fits in `u128`.
pub fn expected_order(spec: &GroupSpec) -> Option<u128> {
    match spec {
        GroupSpec::Sym(n) => (1..=*n as u128).try_fold(1u128, |acc, i| acc.checked_mul(i)),
        GroupSpec::Alt(n) => {
            let full = expected_order(&GroupSpec::Sym(*n))?;
            Some(if *n >= 2 { full / 2 } else { full })
        }
        GroupSpec::Psl2(q) => {
            let q = *q as u128;
            Some(q * (q * q - 1) / gcd(2, q as u64 - 1) as u128)
        }
        GroupSpec::Sl2(q) | GroupSpec::Pgl2(q) => {
            let q = *q as u128;
            Some(q * (q * q - 1))
        }
        GroupSpec::AffineFrobenius { q, n } => Some(*q as u128 * *n as u128),
        GroupSpec::DirectProduct(a, b) => expected_order(a)?.checked_mul(expected_order(b)?),
        GroupSpec::Power(a, k) => {
            let base = expected_order(a)?;
            (0..*k).try_fold(1u128, |acc, _| acc.checked_mul(base))
        }
        GroupSpec::ExtraspecialSemidirect { p, r } => Some(2 * *r as u128 * (*p as u128).pow(3)),
        GroupSpec::Generators { .. } => None,
    }
}

fn perms(degree: usize, gens: Vec<Permutation>) -> Built {
    let gens = if gens.is_empty() {
        vec![Permutation::identity(degree)]
    } else {
        gens
    };
    Built::Perms { degree, gens }
}

fn check_field(q: u64) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(Error::invalid(format!("q = {q} is not a prime power")));
    }
    if q > MAX_FIELD_SIZE {
        return Err(Error::invalid(format!(
            "q = {q} exceeds the supported field size {MAX_FIELD_SIZE}"
        )));
    }
    Ok(())
}

fn symmetric_degree(n: u64) -> Result<usize> {
    if n == 0 {
        return Err(Error::invalid("degree must be at least 1"));
    }
    if n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::invalid(format!(
            "degree {n} exceeds the supported maximum {MAX_SYMMETRIC_DEGREE}"
        )));
    }
    Ok(n as usize)
}

fn cycle_on(degree: usize, points: &[u32]) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &x) in points.iter().enumerate() {
        images[x as usize] = points[(i + 1) % points.len()];
    }
    Permutation::from_images(images).expect("distinct points form a cycle")
}

fn build(spec: &GroupSpec, limits: Limits) -> Result<Built> {
    Ok(match spec {
        GroupSpec::Sym(n) => {
            let n = symmetric_degree(*n)?;
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(cycle_on(n, &[0, 1]));
            }
            if n >= 3 {
                let all: Vec<u32> = (0..n as u32).collect();
                gens.push(cycle_on(n, &all));
            }
            perms(n, gens)
        }
        GroupSpec::Alt(n) => {
            let n = symmetric_degree(*n)?;
            let gens = (2..n as u32).map(|i| cycle_on(n, &[0, 1, i])).collect();
            perms(n, gens)
        }
        GroupSpec::Psl2(q) => {
            check_field(*q)?;
            perms(*q as usize + 1, psl2_permutations(*q)?)
        }
        GroupSpec::Pgl2(q) => {
            check_field(*q)?;
            perms(*q as usize + 1, pgl2_permutations(*q)?)
        }
        GroupSpec::Sl2(q) => {
            check_field(*q)?;
            perms((*q * *q - 1) as usize, sl2_permutations(*q)?)
        }
        GroupSpec::AffineFrobenius { q, n } => {
            if !is_prime(*q) {
                return Err(Error::invalid(format!(
                    "AffineFrobenius needs a prime q, got {q}"
                )));
            }
            if *q > 1 << 15 {
                return Err(Error::invalid(format!("q = {q} is too large")));
            }
            if *n == 0 || (*q - 1) % *n != 0 {
                return Err(Error::invalid(format!(
                    "n = {n} must divide q - 1 = {}",
                    q - 1
                )));
            }
            let f = crate::constructions::gf::Gf::new(*q)?;
            let zeta = f.pow(f.primitive(), (*q - 1) / *n);
            let translate = (0..*q).map(|x| ((x + 1) % *q) as u32).collect();
            let scale = (0..*q).map(|x| f.mul(zeta, x) as u32).collect();
            perms(
                *q as usize,
                vec![
                    Permutation::from_images(translate)?,
                    Permutation::from_images(scale)?,
                ],
            )
        }
        GroupSpec::DirectProduct(a, b) => product(build(a, limits)?, build(b, limits)?, limits)?,
        GroupSpec::Power(a, k) => {
            if *k == 0 {
                return Err(Error::invalid("Power needs an exponent of at least 1"));
            }
            let mut acc = build(a, limits)?;
            for _ in 1..*k {
                acc = product(acc, build(a, limits)?, limits)?;
            }
            acc
        }
        GroupSpec::ExtraspecialSemidirect { p, r } => {
            Built::Rule(Arc::new(ExtraspecialSemidirect::new(*p, *r)?))
        }
        GroupSpec::Generators { degree, cycles } => {
            if *degree == 0 || *degree > u16::MAX as u64 {
                return Err(Error::invalid(format!("degree {degree} is out of range")));
            }
            let degree = *degree as usize;
            let gens = cycles
                .iter()
                .map(|c| parse_cycles(c, degree))
                .collect::<Result<Vec<_>>>()?;
            perms(degree, gens)
        }
    })
}

/// Juxtaposes permutation factors on disjoint point sets; otherwise falls
/// back to a product of enumerated factors.
fn product(a: Built, b: Built, limits: Limits) -> Result<Built> {
    match (a, b) {
        (
            Built::Perms {
                degree: da,
                gens: ga,
            },
            Built::Perms {
                degree: db,
                gens: gb,
            },
        ) => {
            let total = da + db;
            if total > u16::MAX as usize {
                return Err(Error::invalid(format!(
                    "product degree {total} is too large"
                )));
            }
            let gens = ga
                .iter()
                .map(|g| g.shifted(0, total))
                .chain(gb.iter().map(|g| g.shifted(da, total)))
                .collect();
            Ok(Built::Perms {
                degree: total,
                gens,
            })
        }
        (a, b) => {
            let left = into_handle(a, limits)?.elements()?;
            let right = into_handle(b, limits)?.elements()?;
            Ok(Built::Rule(Arc::new(ProductRule::new(left, right)?)))
        }
    }
}

fn into_handle(b: Built, limits: Limits) -> Result<GroupHandle> {
    match b {
        Built::Perms { gens, .. } => GroupHandle::from_generators(gens, limits),
        Built::Rule(rule) => GroupHandle::from_rule(rule, limits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(text: &str) -> u128 {
        realize(&text.parse().unwrap(), Limits::default())
            .unwrap()
            .order()
    }

    #[test]
    fn orders() {
        assert_eq!(order_of("Sym(1)"), 1);
        assert_eq!(order_of("Sym(2)"), 2);
        assert_eq!(order_of("Sym(5)"), 120);
        assert_eq!(order_of("Alt(2)"), 1);
        assert_eq!(order_of("Alt(5)"), 60);
        assert_eq!(order_of("PSL2(4)"), 60);
        assert_eq!(order_of("PSL2(25)"), 7800);
        assert_eq!(order_of("SL2(5)"), 120);
        assert_eq!(order_of("PGL2(9)"), 720);
        assert_eq!(order_of("AffineFrobenius(7,6)"), 42);
        assert_eq!(order_of("DirectProduct(Sym(3),Alt(4))"), 72);
        assert_eq!(order_of("Power(AffineFrobenius(7,6),3)"), 42 * 42 * 42);
        assert_eq!(order_of("ExtraspecialSemidirect(7,3)"), 2058);
        assert_eq!(
            order_of("DirectProduct(ExtraspecialSemidirect(7,3),Sym(2))"),
            4116
        );
    }

    #[test]
    fn psl2_4_acts_on_five_points() {
        let g = realize(&GroupSpec::Psl2(4), Limits::default()).unwrap();
        assert_eq!(g.degree_or_size(), 5);
    }

    #[test]
    fn invalid_parameters() {
        for text in [
            "Sym(0)",
            "Alt(65)",
            "PSL2(6)",
            "AffineFrobenius(9,2)",
            "AffineFrobenius(7,4)",
            "Power(Sym(3),0)",
            "ExtraspecialSemidirect(11,3)",
            "Generators(0,\"()\")",
        ] {
            let spec: GroupSpec = text.parse().unwrap();
            assert!(
                matches!(
                    realize(&spec, Limits::default()),
                    Err(Error::InvalidParameter(_))
                ),
                "{text}"
            );
        }
    }

    #[test]
    fn enumeration_bound_applies_to_constructed_groups() {
        let spec: GroupSpec = "ExtraspecialSemidirect(7,3)".parse().unwrap();
        let limits = Limits {
            enumeration_bound: 1000,
        };
        assert!(matches!(
            realize(&spec, limits),
            Err(Error::TooLarge { .. })
        ));
    }
}
