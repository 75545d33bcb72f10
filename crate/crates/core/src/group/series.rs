use serde::Serialize;

use crate::arith::lcm;
use crate::group::classes::ConjugacyData;
use crate::group::elements::Elements;

/// Least common multiple of the element orders. Orders are constant on
/// conjugacy classes, so only representatives are inspected.
pub fn group_exponent(elements: &Elements, classes: &ConjugacyData) -> u64 {
    classes
        .class_reps()
        .iter()
        .fold(1, |acc, &rep| lcm(acc, elements.element_order(rep)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedSeriesReport {
    /// Orders of `G, G', G'', ...` up to the first repeated term.
    pub subgroup_orders: Vec<u64>,
    pub solvable: bool,
    /// `None` when the group is not solvable.
    pub derived_length: Option<usize>,
}

/// A subgroup grown incrementally as generators are added.
pub(crate) struct Subgroup<'a> {
    elements: &'a Elements,
    member: Vec<u64>,
    list: Vec<u32>,
    generators: Vec<u32>,
}

impl<'a> Subgroup<'a> {
    pub(crate) fn trivial(elements: &'a Elements) -> Self {
        let mut member = vec![0u64; elements.len().div_ceil(64)];
        member[0] |= 1;
        Subgroup {
            elements,
            member,
            list: vec![0],
            generators: Vec::new(),
        }
    }

    #[inline]
    pub(crate) fn contains(&self, x: u32) -> bool {
        self.member[x as usize / 64] >> (x % 64) & 1 == 1
    }

    fn insert(&mut self, x: u32) -> bool {
        if self.contains(x) {
            return false;
        }
        self.member[x as usize / 64] |= 1 << (x % 64);
        self.list.push(x);
        true
    }

    pub(crate) fn order(&self) -> u64 {
        self.list.len() as u64
    }

    pub(crate) fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// Adds `g` as a generator unless it is already a member, then restores
    /// closure. Returns whether the subgroup grew.
    pub(crate) fn add_generator(&mut self, g: u32) -> bool {
        if self.contains(g) {
            return false;
        }
        self.generators.push(g);
        // Old members are already closed under the old generators, so they
        // only need multiplying by the new one; new members get all of them.
        let old_len = self.list.len();
        for i in 0..old_len {
            let y = self.elements.mul(self.list[i], g);
            self.insert(y);
        }
        let mut head = old_len;
        while head < self.list.len() {
            let x = self.list[head];
            head += 1;
            for k in 0..self.generators.len() {
                let y = self.elements.mul(x, self.generators[k]);
                self.insert(y);
            }
        }
        true
    }

    /// Grows the subgroup to the normal closure under conjugation by `by`.
    pub(crate) fn normalize(&mut self, by: &[u32]) {
        let mut i = 0;
        while i < self.generators.len() {
            let h = self.generators[i];
            for &g in by {
                let c = self.elements.conjugate(h, g);
                self.add_generator(c);
            }
            i += 1;
        }
    }
}

/// The derived series, each term computed as the normal closure of the
/// commutators of the previous term's generators.
pub fn derived_series(elements: &Elements) -> DerivedSeriesReport {
    let mut orders = vec![elements.len() as u64];
    let mut gens: Vec<u32> = elements.generators().to_vec();
    let whole = elements.generators().to_vec();
    loop {
        let mut next = Subgroup::trivial(elements);
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                next.add_generator(elements.commutator(a, b));
            }
        }
        next.normalize(&whole);
        let order = next.order();
        if order == *orders.last().unwrap() {
            break;
        }
        orders.push(order);
        if order == 1 {
            break;
        }
        gens = next.generators().to_vec();
    }
    let solvable = *orders.last().unwrap() == 1;
    DerivedSeriesReport {
        derived_length: solvable.then(|| orders.len() - 1),
        subgroup_orders: orders,
        solvable,
    }
}
