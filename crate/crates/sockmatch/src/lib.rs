//! Ordered r-matchings and the sock process.
//!
//! Pull socks one at a time from a sack holding `n` packs of `r` identical
//! socks; finished packs leave the floor. This crate models the pull order
//! as an ordered r-matching of `[rn]` (equivalently an r-fold Gauss word)
//! and provides:
//!
//! - the sock process itself: sockuences, sock numbers, and edge lengths
//!   ([`sockproc`]);
//! - exact expectations and counting formulas in arbitrary precision
//!   ([`formulas`]);
//! - exhaustive enumeration of matchings and Dyck sequences with exact
//!   sock-number distributions ([`enumerate`]);
//! - reproducible seeded sampling of matchings, Dyck sequences, and words
//!   ([`randgen`]);
//! - two-edge pattern classification, clique maxima, and collectability
//!   probes ([`patterns`]);
//! - the left-to-right persecuted-word reduction ([`persecute`]);
//! - a deterministic Monte Carlo harness with tolerance bands
//!   ([`experiments`]);
//! - text and table I/O ([`wordio`]).
//!
//! Counts and expectations are exact ([`exact::ExactInt`],
//! [`exact::ExactRatio`]); floating point appears only in Monte Carlo
//! summaries and asymptotic constants.
//!
//! The companion guide under `book/` walks through each piece; its code
//! samples compile and run as doc-tests of the `sockmatch-book` crate.

pub mod enumerate;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod formulas;
pub mod matching;
pub mod patterns;
pub mod persecute;
pub mod randgen;
pub mod sockproc;
pub mod trace;
pub mod word;
pub mod wordio;

pub use error::{Error, Result};
pub use matching::OrderedMatching;
pub use trace::DyckTrace;
pub use word::{GaussWord, Word};
