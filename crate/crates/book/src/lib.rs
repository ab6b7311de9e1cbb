//! The guide under `book/` smushed into one crate so that every code block
//! runs under `cargo test --doc`. mdbook renders the same files; this crate
//! keeps them honest. One module per chapter, so a failing doc-test names
//! the chapter it came from.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/matchings-and-words.md")]
pub mod matchings_and_words {}

#[doc = include_str!("../../../book/src/sock-process.md")]
pub mod sock_process {}

#[doc = include_str!("../../../book/src/dyck-traces.md")]
pub mod dyck_traces {}

#[doc = include_str!("../../../book/src/exact-formulas.md")]
pub mod exact_formulas {}

#[doc = include_str!("../../../book/src/enumeration.md")]
pub mod enumeration {}

#[doc = include_str!("../../../book/src/random-generation.md")]
pub mod random_generation {}

#[doc = include_str!("../../../book/src/experiments.md")]
pub mod experiments {}

#[doc = include_str!("../../../book/src/patterns-and-cliques.md")]
pub mod patterns_and_cliques {}

#[doc = include_str!("../../../book/src/persecuted-words.md")]
pub mod persecuted_words {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
