use std::sync::{Arc, OnceLock};

use crate::error::Result;
use crate::group::bsgs::Bsgs;
use crate::group::classes::ConjugacyData;
use crate::group::elements::{CompositionRule, Elements};
use crate::group::perm::Permutation;
use crate::group::series::{self, DerivedSeriesReport};

pub const DEFAULT_ENUMERATION_BOUND: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order that will be enumerated element by element.
    pub enumeration_bound: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

#[derive(Debug)]
pub enum Backing {
    Permutation {
        generators: Vec<Permutation>,
        bsgs: Bsgs,
    },
    Constructed {
        rule: Arc<dyn CompositionRule>,
    },
}

/// A finite group behind a uniform interface.
///
/// Enumeration and conjugacy classes are computed on first use and cached;
/// the handle is otherwise immutable and can be shared across threads.
#[derive(Debug)]
pub struct GroupHandle {
    backing: Backing,
    order: u128,
    limits: Limits,
    elements: OnceLock<Arc<Elements>>,
    classes: OnceLock<Arc<ConjugacyData>>,
}

impl GroupHandle {
    pub fn from_generators(generators: Vec<Permutation>, limits: Limits) -> Result<Self> {
        let bsgs = Bsgs::new(&generators)?;
        Ok(GroupHandle {
            order: bsgs.order(),
            backing: Backing::Permutation { generators, bsgs },
            limits,
            elements: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    /// Builds a group from a composition rule. The rule's code space must be
    /// exactly the group generated by its generators; this is checked by
    /// enumerating, so the bound applies here already.
    pub fn from_rule(rule: Arc<dyn CompositionRule>, limits: Limits) -> Result<Self> {
        let elements = Elements::from_rule(rule.clone(), limits.enumeration_bound)?;
        let order = elements.len() as u128;
        let handle = GroupHandle {
            backing: Backing::Constructed { rule },
            order,
            limits,
            elements: OnceLock::new(),
            classes: OnceLock::new(),
        };
        let _ = handle.elements.set(Arc::new(elements));
        Ok(handle)
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn backing(&self) -> &Backing {
        &self.backing
    }

    /// Number of points for permutation groups, order for constructed ones.
    pub fn degree_or_size(&self) -> usize {
        match &self.backing {
            Backing::Permutation { bsgs, .. } => bsgs.degree(),
            Backing::Constructed { .. } => self.order as usize,
        }
    }

    pub fn permutation_generators(&self) -> Option<&[Permutation]> {
        match &self.backing {
            Backing::Permutation { generators, .. } => Some(generators),
            Backing::Constructed { .. } => None,
        }
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        match &self.backing {
            Backing::Permutation { bsgs, .. } => bsgs.contains(p),
            Backing::Constructed { .. } => false,
        }
    }

    pub fn elements(&self) -> Result<Arc<Elements>> {
        if let Some(el) = self.elements.get() {
            return Ok(el.clone());
        }
        let el = match &self.backing {
            Backing::Permutation { generators, bsgs } => {
                Elements::from_bsgs(bsgs, generators, self.limits.enumeration_bound)?
            }
            Backing::Constructed { rule } => {
                Elements::from_rule(rule.clone(), self.limits.enumeration_bound)?
            }
        };
        Ok(self.elements.get_or_init(|| Arc::new(el)).clone())
    }

    /// Elements in canonical order: lexicographic by image array for
    /// permutation groups, breadth-first insertion order otherwise.
    pub fn enumerate(&self) -> Result<Arc<Elements>> {
        self.elements()
    }

    pub fn conjugacy_classes(&self) -> Result<Arc<ConjugacyData>> {
        if let Some(c) = self.classes.get() {
            return Ok(c.clone());
        }
        let el = self.elements()?;
        let classes = ConjugacyData::compute(&el);
        Ok(self.classes.get_or_init(|| Arc::new(classes)).clone())
    }

    pub fn exponent(&self) -> Result<u64> {
        let el = self.elements()?;
        let classes = self.conjugacy_classes()?;
        Ok(series::group_exponent(&el, &classes))
    }

    pub fn derived_series(&self) -> Result<DerivedSeriesReport> {
        let el = self.elements()?;
        Ok(series::derived_series(&el))
    }
}
