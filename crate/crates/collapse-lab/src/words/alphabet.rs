use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::Error;

/// Largest supported alphabet size. Letter ids fit in a `u8`.
pub const MAX_ALPHABET: usize = 255;

/// A letter is a dense 0-based id into some [`Alphabet`].
///
/// The id alone does not know its alphabet; operations that mix words check
/// alphabet agreement explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(id: u8) -> Self {
        Letter(id)
    }

    pub fn id(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug)]
struct Inner {
    names: Vec<String>,
}

/// An ordered list of distinct display glyphs. Cloning is cheap (shared).
#[derive(Debug, Clone)]
pub struct Alphabet {
    inner: Arc<Inner>,
}

impl Alphabet {
    /// Builds an alphabet from explicit glyph names. Names must be nonempty,
    /// pairwise distinct, and there must be 1..=255 of them.
    pub fn new(names: Vec<String>) -> Result<Self, Error> {
        if names.is_empty() || names.len() > MAX_ALPHABET {
            return Err(Error::BadAlphabet);
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || names[..i].contains(name) {
                return Err(Error::BadAlphabet);
            }
        }
        Ok(Alphabet {
            inner: Arc::new(Inner { names }),
        })
    }

    /// One single-character glyph per `char` of `glyphs`.
    pub fn from_glyphs(glyphs: &str) -> Result<Self, Error> {
        Self::new(glyphs.chars().map(String::from).collect())
    }

    pub fn size(&self) -> usize {
        self.inner.names.len()
    }

    /// All letters in id order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.size()).map(|i| Letter(i as u8))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.id() < self.size()
    }

    pub fn letter(&self, id: usize) -> Result<Letter, Error> {
        if id < self.size() {
            Ok(Letter(id as u8))
        } else {
            Err(Error::LetterOutsideAlphabet {
                id,
                alphabet: self.describe(),
            })
        }
    }

    pub fn glyph(&self, letter: Letter) -> &str {
        &self.inner.names[letter.id()]
    }

    pub fn glyphs(&self) -> &[String] {
        &self.inner.names
    }

    pub fn letter_of_glyph(&self, glyph: &str) -> Result<Letter, Error> {
        self.inner
            .names
            .iter()
            .position(|n| n == glyph)
            .map(|i| Letter(i as u8))
            .ok_or_else(|| Error::UnknownGlyph {
                glyph: glyph.to_string(),
                alphabet: self.describe(),
            })
    }

    /// True when every glyph is a single character, so words display and
    /// parse as plain concatenations.
    pub fn single_char(&self) -> bool {
        self.inner.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Comma-free summary used in error messages: `012`, or `1,2,10` when a
    /// glyph is longer than one character.
    pub fn describe(&self) -> String {
        if self.single_char() {
            self.inner.names.concat()
        } else {
            self.inner.names.join(",")
        }
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl Eq for Alphabet {}

impl PartialOrd for Alphabet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Alphabet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.inner.names.cmp(&other.inner.names)
    }
}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.names.hash(state);
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}
