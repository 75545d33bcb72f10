use serde::Serialize;

use crate::arith::{divisors, isqrt_ceil, prime_divisors};
use crate::chardeg::eigen::simultaneous_eigenvectors;
use crate::chardeg::prime::{choose_dixon_prime, ModularContext};
use crate::chardeg::structure::StructureConstants;
use crate::error::{Error, Result};
use crate::group::GroupHandle;

/// Irreducible character degrees with the derived sets used by the graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeData {
    /// One entry per irreducible character, sorted.
    pub degrees: Vec<u64>,
    pub cd: Vec<u64>,
    pub cd_star: Vec<u64>,
    pub rho: Vec<u64>,
}

impl DegreeData {
    pub fn from_degrees(mut degrees: Vec<u64>) -> Result<Self> {
        degrees.sort_unstable();
        let mut cd = degrees.clone();
        cd.dedup();
        let cd_star: Vec<u64> = cd.iter().copied().filter(|&d| d > 1).collect();
        let mut rho = Vec::new();
        for &d in &cd_star {
            rho.extend(prime_divisors(d)?);
        }
        rho.sort_unstable();
        rho.dedup();
        Ok(DegreeData {
            degrees,
            cd,
            cd_star,
            rho,
        })
    }

    pub fn multiplicity(&self, d: u64) -> usize {
        self.degrees.iter().filter(|&&x| x == d).count()
    }

    pub fn sum_of_squares(&self) -> u128 {
        self.degrees
            .iter()
            .map(|&d| (d as u128) * (d as u128))
            .sum()
    }

    /// All pairwise products, the degree multiset of a direct product.
    pub fn direct_product(&self, other: &DegreeData) -> Result<DegreeData> {
        let mut out = Vec::with_capacity(self.degrees.len() * other.degrees.len());
        for &a in &self.degrees {
            for &b in &other.degrees {
                out.push(
                    a.checked_mul(b)
                        .ok_or_else(|| Error::Overflow(format!("degree product {a} * {b}")))?,
                );
            }
        }
        DegreeData::from_degrees(out)
    }
}

/// Lifts `d² mod p` to the unique divisor `d ≤ ⌈√order⌉` of the order.
fn lift_degree(square: u64, order: u64, ctx: &ModularContext, candidates: &[u64]) -> Result<u64> {
    let f = ctx.field();
    let mut found = candidates
        .iter()
        .copied()
        .filter(|&d| f.mul(f.reduce(d), f.reduce(d)) == square);
    match (found.next(), found.next()) {
        (Some(d), None) => Ok(d),
        (None, _) => Err(Error::internal(format!(
            "no divisor of {order} lifts the degree square {square} mod {}",
            ctx.p
        ))),
        (Some(_), Some(_)) => Err(Error::internal(format!(
            "ambiguous degree lift mod {} for order {order}",
            ctx.p
        ))),
    }
}

/// Degrees from the common eigenvectors via
/// `|G| / χ(1)² = Σ_k w_k w_{k*} / |C_k|`.
pub fn degrees_from_eigenvectors(
    eigenvectors: &[Vec<u64>],
    class_sizes: &[u64],
    inverse_class: impl Fn(usize) -> usize,
    order: u64,
    ctx: &ModularContext,
) -> Result<Vec<u64>> {
    let f = ctx.field();
    let bound = isqrt_ceil(order);
    let candidates: Vec<u64> = divisors(order)?
        .into_iter()
        .filter(|&d| d <= bound)
        .collect();
    let size_inverses: Vec<u64> = class_sizes.iter().map(|&s| f.inv(f.reduce(s))).collect();
    eigenvectors
        .iter()
        .map(|w| {
            let s = (0..w.len()).fold(0, |acc, k| {
                f.add(
                    acc,
                    f.mul(f.mul(w[k], w[inverse_class(k)]), size_inverses[k]),
                )
            });
            if s == 0 {
                return Err(Error::internal("degenerate eigenvector norm"));
            }
            let square = f.div(f.reduce(order), s);
            lift_degree(square, order, ctx, &candidates)
        })
        .collect()
}

/// The full pipeline: classes, structure constants, prime, eigenvectors,
/// degrees.
pub fn character_degrees(group: &GroupHandle) -> Result<DegreeData> {
    let elements = group.elements()?;
    let classes = group.conjugacy_classes()?;
    let order = elements.len() as u64;
    if classes.len() as u64 == order {
        // Abelian: every irreducible character is linear.
        return DegreeData::from_degrees(vec![1; classes.len()]);
    }
    let exponent = group.exponent()?;
    let ctx = choose_dixon_prime(order, exponent)?;
    let sc = StructureConstants::new(elements, classes.clone())?;
    let ws = simultaneous_eigenvectors(&sc, &ctx, classes.class_sizes())?;
    let degrees = degrees_from_eigenvectors(
        &ws,
        classes.class_sizes(),
        |k| classes.inverse_class(k),
        order,
        &ctx,
    )?;
    let data = DegreeData::from_degrees(degrees)?;
    if data.sum_of_squares() != order as u128 {
        return Err(Error::internal(format!(
            "degree squares sum to {} instead of {order}",
            data.sum_of_squares()
        )));
    }
    Ok(data)
}
