//! Group families, generator parsing and the claims corpus.

pub mod corpus;
pub mod cycles;
pub mod gf;
pub mod linear;
pub mod realize;
pub mod rules;
pub mod spec;
pub mod verify;

pub use corpus::{load_corpus, parse_corpus, shipped_corpus, CorpusEntry, Source, SHIPPED_CORPUS};
pub use cycles::{emit_cycles, parse_cycles};
pub use realize::realize;
pub use spec::GroupSpec;
pub use verify::{verify_corpus, verify_entry, Computed, EntryReport, Status, VerificationReport};
