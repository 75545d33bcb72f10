//! Enumerated element lists with constant-time-ish multiplication by id.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::bsgs::Bsgs;
use crate::group::perm::Permutation;

/// Multiplication on a dense code space `0..size()`.
///
/// Used for groups that are not handed over as permutations. The group is the
/// closure of `generators()` under `multiply`.
pub trait CompositionRule: Send + Sync + fmt::Debug {
    fn size(&self) -> usize;
    fn identity(&self) -> u32;
    fn multiply(&self, a: u32, b: u32) -> u32;
    fn inverse(&self, a: u32) -> u32;
    fn generators(&self) -> Vec<u32>;
}

const EMPTY: u32 = u32::MAX;
const STACK_DEGREE: usize = 256;

#[derive(Debug)]
struct PermStore {
    degree: usize,
    data: Vec<u16>,
    table: Vec<u32>,
    mask: usize,
}

fn hash_images(images: &[u16]) -> usize {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &x in images {
        h = (h.rotate_left(5) ^ x as u64).wrapping_mul(0x517c_c1b7_2722_0a95);
    }
    (h ^ (h >> 29)) as usize
}

impl PermStore {
    fn new(degree: usize, data: Vec<u16>) -> Self {
        let n = data.len() / degree.max(1);
        let capacity = (2 * n).next_power_of_two().max(2);
        let mut store = PermStore {
            degree,
            data,
            table: vec![EMPTY; capacity],
            mask: capacity - 1,
        };
        for id in 0..n {
            let mut slot = hash_images(store.images(id as u32)) & store.mask;
            while store.table[slot] != EMPTY {
                slot = (slot + 1) & store.mask;
            }
            store.table[slot] = id as u32;
        }
        store
    }

    #[inline]
    fn images(&self, id: u32) -> &[u16] {
        let start = id as usize * self.degree;
        &self.data[start..start + self.degree]
    }

    fn lookup(&self, images: &[u16]) -> Option<u32> {
        let mut slot = hash_images(images) & self.mask;
        loop {
            let id = self.table[slot];
            if id == EMPTY {
                return None;
            }
            if self.images(id) == images {
                return Some(id);
            }
            slot = (slot + 1) & self.mask;
        }
    }

    /// Runs `f` on a scratch buffer of length `degree`, on the stack when small.
    #[inline]
    fn with_buffer<R>(&self, f: impl FnOnce(&mut [u16]) -> R) -> R {
        if self.degree <= STACK_DEGREE {
            let mut buf = [0u16; STACK_DEGREE];
            f(&mut buf[..self.degree])
        } else {
            let mut buf = vec![0u16; self.degree];
            f(&mut buf)
        }
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (pa, pb) = (self.images(a), self.images(b));
        self.with_buffer(|buf| {
            for (slot, &x) in buf.iter_mut().zip(pa) {
                *slot = pb[x as usize];
            }
            self.lookup(buf)
                .expect("product of group elements lies in the group")
        })
    }

    /// `g^-1 x g`, given `g` and its inverse.
    fn conjugate(&self, x: u32, g: u32, g_inv: u32) -> u32 {
        let (px, pg, pgi) = (self.images(x), self.images(g), self.images(g_inv));
        self.with_buffer(|buf| {
            for (slot, &y) in buf.iter_mut().zip(pgi) {
                *slot = pg[px[y as usize] as usize];
            }
            self.lookup(buf)
                .expect("conjugate of a group element lies in the group")
        })
    }
}

#[derive(Debug)]
enum Store {
    Perm(PermStore),
    Coded {
        codes: Vec<u32>,
        id_of_code: Vec<u32>,
        rule: Arc<dyn CompositionRule>,
    },
}

/// Every element of a finite group, indexed `0..len()` with the identity at 0.
#[derive(Debug)]
pub struct Elements {
    store: Store,
    inverse: Vec<u32>,
    generators: Vec<u32>,
}

impl Elements {
    /// Enumerates a permutation group from its stabilizer chain and sorts the
    /// elements lexicographically by image array.
    pub(crate) fn from_bsgs(bsgs: &Bsgs, generators: &[Permutation], bound: u64) -> Result<Self> {
        let order = bsgs.order();
        if order > bound as u128 {
            return Err(Error::TooLarge { order, bound });
        }
        let degree = bsgs.degree();
        if degree > u16::MAX as usize + 1 {
            return Err(Error::invalid(format!(
                "degree {degree} is too large to enumerate"
            )));
        }
        let n = order as usize;
        let mut current: Vec<u16> = (0..degree as u16).collect();
        for level in bsgs.transversals().iter().rev() {
            let count = current.len() / degree;
            let mut next = Vec::with_capacity(count * level.len() * degree);
            for h in current.chunks_exact(degree) {
                for u in level {
                    next.extend(h.iter().map(|&x| u.apply(x as u32) as u16));
                }
            }
            current = next;
        }
        debug_assert_eq!(current.len(), n * degree);
        let mut order_ids: Vec<u32> = (0..n as u32).collect();
        order_ids.sort_unstable_by(|&a, &b| {
            let (a, b) = (a as usize * degree, b as usize * degree);
            current[a..a + degree].cmp(&current[b..b + degree])
        });
        let mut data = Vec::with_capacity(n * degree);
        for &i in &order_ids {
            let start = i as usize * degree;
            data.extend_from_slice(&current[start..start + degree]);
        }
        drop(current);
        let store = PermStore::new(degree, data);
        let inverse = (0..n as u32)
            .map(|id| {
                let p = store.images(id);
                store.with_buffer(|buf| {
                    for (x, &y) in p.iter().enumerate() {
                        buf[y as usize] = x as u16;
                    }
                    store.lookup(buf).expect("inverse lies in the group")
                })
            })
            .collect();
        let mut gens = Vec::new();
        for g in generators {
            let images: Vec<u16> = g.images().iter().map(|&x| x as u16).collect();
            let id = store
                .lookup(&images)
                .ok_or_else(|| Error::internal("generator missing from enumeration"))?;
            if id != 0 && !gens.contains(&id) {
                gens.push(id);
            }
        }
        Ok(Elements {
            store: Store::Perm(store),
            inverse,
            generators: gens,
        })
    }

    /// Enumerates the closure of the rule's generators breadth-first, so ids
    /// follow insertion order with the identity first.
    pub(crate) fn from_rule(rule: Arc<dyn CompositionRule>, bound: u64) -> Result<Self> {
        let size = rule.size();
        if size as u64 > bound {
            return Err(Error::TooLarge {
                order: size as u128,
                bound,
            });
        }
        let mut id_of_code = vec![EMPTY; size];
        let identity = rule.identity();
        let mut codes = vec![identity];
        id_of_code[identity as usize] = 0;
        let gen_codes: Vec<u32> = rule.generators();
        let mut head = 0;
        while head < codes.len() {
            let x = codes[head];
            head += 1;
            for &s in &gen_codes {
                let y = rule.multiply(x, s);
                if id_of_code[y as usize] == EMPTY {
                    id_of_code[y as usize] = codes.len() as u32;
                    codes.push(y);
                }
            }
        }
        let inverse = codes
            .iter()
            .map(|&c| id_of_code[rule.inverse(c) as usize])
            .collect();
        let mut gens = Vec::new();
        for s in gen_codes {
            let id = id_of_code[s as usize];
            if id != 0 && !gens.contains(&id) {
                gens.push(id);
            }
        }
        Ok(Elements {
            store: Store::Coded {
                codes,
                id_of_code,
                rule,
            },
            inverse,
            generators: gens,
        })
    }

    pub fn len(&self) -> usize {
        self.inverse.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Ids of the non-identity generators, without repeats.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.store {
            Store::Perm(s) => s.mul(a, b),
            Store::Coded {
                codes,
                id_of_code,
                rule,
            } => id_of_code[rule.multiply(codes[a as usize], codes[b as usize]) as usize],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        match &self.store {
            Store::Perm(s) => s.conjugate(x, g, self.inv(g)),
            Store::Coded { .. } => self.mul(self.mul(self.inv(g), x), g),
        }
    }

    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    pub fn element_order(&self, x: u32) -> u64 {
        match &self.store {
            Store::Perm(s) => {
                let p: Vec<u32> = s.images(x).iter().map(|&v| v as u32).collect();
                Permutation::from_images_unchecked(p).order()
            }
            Store::Coded { .. } => {
                let mut k = 1;
                let mut y = x;
                while y != 0 {
                    y = self.mul(y, x);
                    k += 1;
                }
                k
            }
        }
    }

    /// The element as a permutation, for permutation-backed groups.
    pub fn permutation(&self, id: u32) -> Option<Permutation> {
        match &self.store {
            Store::Perm(s) => Some(Permutation::from_images_unchecked(
                s.images(id).iter().map(|&v| v as u32).collect(),
            )),
            Store::Coded { .. } => None,
        }
    }

    pub fn id_of_permutation(&self, p: &Permutation) -> Option<u32> {
        match &self.store {
            Store::Perm(s) if p.degree() == s.degree => {
                let images: Vec<u16> = p.images().iter().map(|&v| v as u16).collect();
                s.lookup(&images)
            }
            _ => None,
        }
    }

    /// The rule code of an element, for construction-backed groups.
    pub fn code(&self, id: u32) -> Option<u32> {
        match &self.store {
            Store::Coded { codes, .. } => Some(codes[id as usize]),
            Store::Perm(_) => None,
        }
    }

    pub fn id_of_code(&self, code: u32) -> Option<u32> {
        match &self.store {
            Store::Coded { id_of_code, .. } => id_of_code
                .get(code as usize)
                .copied()
                .filter(|&id| id != EMPTY),
            Store::Perm(_) => None,
        }
    }
}
