//! Finite words over small dense alphabets and their scattered-subword
//! statistics.
//!
//! A [`FiniteWord`] stores 0-based letter ids together with the [`Alphabet`]
//! that gives them display glyphs. All counting is done in checked `u64`
//! arithmetic: a count that does not fit is reported as an error, never
//! silently wrapped.

mod alphabet;
mod signature;
mod transform;
mod word;

pub use alphabet::{Alphabet, Letter, MAX_ALPHABET};
pub use signature::{canonical_patterns, BinomialSignature, MAX_SIGNATURE_SPACE};
pub use transform::{color, colored_alphabet, projected_alphabet};
pub use word::FiniteWord;

/// Errors reported by word-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet must have between 1 and {MAX_ALPHABET} distinct nonempty glyphs")]
    BadAlphabet,
    #[error("letter id {id} outside alphabet {{{alphabet}}}")]
    LetterOutsideAlphabet { id: usize, alphabet: String },
    #[error("glyph '{glyph}' not in alphabet {{{alphabet}}}")]
    UnknownGlyph { glyph: String, alphabet: String },
    #[error("word parsing needs single-character glyphs; alphabet {{{alphabet}}} has longer ones")]
    MultiCharGlyphs { alphabet: String },
    #[error("operands use different alphabets: {{{left}}} vs {{{right}}}")]
    AlphabetMismatch { left: String, right: String },
    #[error("factor occurrence count is undefined for the empty factor")]
    EmptyFactor,
    #[error("scattered-subword count exceeds u64")]
    CountOverflow,
    #[error("binomial order k must be at least 1")]
    ZeroOrder,
    #[error("signature space for alphabet size {alphabet_size} and order {k} exceeds {MAX_SIGNATURE_SPACE} patterns")]
    SignatureSpaceTooLarge { alphabet_size: usize, k: usize },
    #[error("subalphabet must be a nonempty set of distinct alphabet letters")]
    BadSubalphabet,
    #[error("coloring letter '{letter}' occurs {needed} times but only {available} colors are available")]
    ColorsExhausted {
        letter: String,
        needed: usize,
        available: usize,
    },
    #[error("alphabets are not disjoint: both contain glyph '{glyph}'")]
    AlphabetsNotDisjoint { glyph: String },
}

/// `u \sim_k v`: both words have the same scattered-subword count for every
/// pattern of length at most `k`. Requires a shared alphabet.
pub fn k_binomial_equivalent(u: &FiniteWord, v: &FiniteWord, k: usize) -> Result<bool, Error> {
    if u.alphabet() != v.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: u.alphabet().describe(),
            right: v.alphabet().describe(),
        });
    }
    if u.len() != v.len() {
        // Counts over length-1 patterns already differ in total.
        return Ok(false);
    }
    Ok(BinomialSignature::of_word(u, k)? == BinomialSignature::of_word(v, k)?)
}
