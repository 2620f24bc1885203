//! Experiments with factor, abelian and binomial complexity of infinite words.
//!
//! The crate is organised in four layers:
//!
//! * [`words`] — finite words over small alphabets, scattered-subword
//!   (binomial) counts, binomial signatures, projections and colorings;
//! * [`generators`] — eagerly materialised prefixes of classical infinite
//!   words (substitutive, mechanical, episturmian, C-adic, billiard, and
//!   combinators on top of them);
//! * [`analysis`] — complexity tables, balance tables, equivalence-class
//!   partitions, projection reconstruction and a factor-saturation probe;
//! * [`verify`] — a registry of named, deterministic verification scenarios
//!   covering the word families the tool was built around.

pub mod analysis;
pub mod generators;
pub mod verify;
pub mod words;
