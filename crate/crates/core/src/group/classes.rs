use crate::group::elements::Elements;

/// Conjugacy classes of an enumerated group.
///
/// Classes are sorted by `(size, representative)`, where the representative
/// is the least element id in the class, so the identity class is class 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    class_reps: Vec<u32>,
    class_sizes: Vec<u64>,
    class_of: Vec<u32>,
    inverse_class: Vec<u32>,
    member_start: Vec<usize>,
    members: Vec<u32>,
}

impl ConjugacyData {
    /// Orbit closure under conjugation by the generators, seeded from the
    /// least unassigned element.
    pub fn compute(elements: &Elements) -> Self {
        const UNSET: u32 = u32::MAX;
        let n = elements.len();
        let gens = elements.generators();
        let mut raw_class = vec![UNSET; n];
        let mut orbits: Vec<Vec<u32>> = Vec::new();
        for seed in 0..n as u32 {
            if raw_class[seed as usize] != UNSET {
                continue;
            }
            let label = orbits.len() as u32;
            raw_class[seed as usize] = label;
            let mut orbit = vec![seed];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for &g in gens {
                    let y = elements.conjugate(x, g);
                    if raw_class[y as usize] == UNSET {
                        raw_class[y as usize] = label;
                        orbit.push(y);
                    }
                }
            }
            orbits.push(orbit);
        }

        // Seeds are visited in id order, so each orbit's seed is its least member.
        let mut perm: Vec<usize> = (0..orbits.len()).collect();
        perm.sort_by_key(|&c| (orbits[c].len(), orbits[c][0]));
        let mut new_index = vec![0u32; orbits.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_index[old] = new as u32;
        }
        let class_of: Vec<u32> = raw_class.iter().map(|&c| new_index[c as usize]).collect();

        let mut class_reps = Vec::with_capacity(perm.len());
        let mut class_sizes = Vec::with_capacity(perm.len());
        let mut member_start = Vec::with_capacity(perm.len() + 1);
        let mut members = Vec::with_capacity(n);
        for &old in &perm {
            let mut orbit = std::mem::take(&mut orbits[old]);
            orbit.sort_unstable();
            class_reps.push(orbit[0]);
            class_sizes.push(orbit.len() as u64);
            member_start.push(members.len());
            members.extend_from_slice(&orbit);
        }
        member_start.push(members.len());

        let inverse_class = class_reps
            .iter()
            .map(|&rep| class_of[elements.inv(rep) as usize])
            .collect();

        ConjugacyData {
            class_reps,
            class_sizes,
            class_of,
            inverse_class,
            member_start,
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.class_reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_reps.is_empty()
    }

    pub fn class_reps(&self) -> &[u32] {
        &self.class_reps
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    #[inline]
    pub fn class_of(&self, element: u32) -> u32 {
        self.class_of[element as usize]
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class] as usize
    }

    /// Element ids of a class in increasing order.
    pub fn members(&self, class: usize) -> &[u32] {
        &self.members[self.member_start[class]..self.member_start[class + 1]]
    }
}
