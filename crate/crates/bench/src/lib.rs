//! Shared inputs for the criterion benchmarks in `benches/`.

use cdgraph_core::{realize, GroupHandle, GroupSpec, Limits};

/// The order 5376 group on 32 points with cd = {1,3,7,14,24}.
pub const ORDER_5376: &str = r#"Generators(32,"(1,2)(3,14,9,20)(4,15,19,27)(5,7)(6,8)(10,21,18,26)(11,22,12,23)(13,16)(17,31,25,29)(24,32,28,30)","(2,27,25,19,21,10,31)(3,29,8,22,17,11,14)(4,20,9,30,16,15,24)(7,23,28,12,26,18,32)","(3,12,30)(4,29,18)(5,13,6)(7,16,8)(9,11,32)(10,19,31)(14,23,24)(15,17,26)(20,22,28)(21,27,25)")"#;

/// Groups timed end to end, smallest first.
pub const PIPELINE_SPECS: &[&str] = &[
    "DirectProduct(Sym(3),Alt(4))",
    "ExtraspecialSemidirect(7,3)",
    "Sym(6)",
    ORDER_5376,
    "PSL2(25)",
    "AffineFrobenius(211,210)",
];

pub fn spec(text: &str) -> GroupSpec {
    text.parse().expect("benchmark specs parse")
}

/// A fresh handle, so nothing is cached between iterations.
pub fn handle(text: &str) -> GroupHandle {
    realize(&spec(text), Limits::default()).expect("benchmark groups build")
}

/// Deterministic pseudo-random degree sets for the graph benchmarks.
pub fn degree_sets(count: usize, size: usize, max: u64) -> Vec<Vec<u64>> {
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count)
        .map(|_| (0..size).map(|_| 2 + next() % (max - 1)).collect())
        .collect()
}
