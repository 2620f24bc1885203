use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use super::{Alphabet, Error, Letter};

/// An immutable finite word: a sequence of letter ids plus the alphabet that
/// interprets them. Construction validates every id against the alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteWord {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl FiniteWord {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self, Error> {
        if let Some(&bad) = letters.iter().find(|l| !alphabet.contains(**l)) {
            return Err(Error::LetterOutsideAlphabet {
                id: bad.id(),
                alphabet: alphabet.describe(),
            });
        }
        Ok(FiniteWord { alphabet, letters })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        FiniteWord {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Parses a concatenation of single-character glyphs.
    pub fn from_glyphs(alphabet: &Alphabet, text: &str) -> Result<Self, Error> {
        if !alphabet.single_char() {
            return Err(Error::MultiCharGlyphs {
                alphabet: alphabet.describe(),
            });
        }
        let mut letters = Vec::with_capacity(text.len());
        for ch in text.chars() {
            letters.push(alphabet.letter_of_glyph(&ch.to_string())?);
        }
        Ok(FiniteWord {
            alphabet: alphabet.clone(),
            letters,
        })
    }

    /// Parses a sequence of explicit glyph tokens.
    pub fn from_glyph_parts(alphabet: &Alphabet, parts: &[&str]) -> Result<Self, Error> {
        let mut letters = Vec::with_capacity(parts.len());
        for part in parts {
            letters.push(alphabet.letter_of_glyph(part)?);
        }
        Ok(FiniteWord {
            alphabet: alphabet.clone(),
            letters,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Letter> {
        self.letters.get(i).copied()
    }

    /// The factor of length `len` starting at `start`. Panics when the range
    /// leaves the word, like slice indexing.
    pub fn factor(&self, start: usize, len: usize) -> FiniteWord {
        FiniteWord {
            alphabet: self.alphabet.clone(),
            letters: self.letters[start..start + len].to_vec(),
        }
    }

    /// The prefix of length `min(len, |w|)`.
    pub fn prefix(&self, len: usize) -> FiniteWord {
        self.factor(0, len.min(self.len()))
    }

    pub fn concat(&self, other: &FiniteWord) -> Result<FiniteWord, Error> {
        self.check_same_alphabet(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(FiniteWord {
            alphabet: self.alphabet.clone(),
            letters,
        })
    }

    pub fn reversed(&self) -> FiniteWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        FiniteWord {
            alphabet: self.alphabet.clone(),
            letters,
        }
    }

    pub(crate) fn check_same_alphabet(&self, other: &FiniteWord) -> Result<(), Error> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.describe(),
                right: other.alphabet.describe(),
            });
        }
        Ok(())
    }

    /// Number of occurrences of `a` as a letter.
    pub fn letter_count(&self, a: Letter) -> Result<u64, Error> {
        if !self.alphabet.contains(a) {
            return Err(Error::LetterOutsideAlphabet {
                id: a.id(),
                alphabet: self.alphabet.describe(),
            });
        }
        Ok(self.letters.iter().filter(|&&l| l == a).count() as u64)
    }

    /// Occurrence counts for every letter, indexed by letter id.
    pub fn parikh(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.alphabet.size()];
        for l in &self.letters {
            counts[l.id()] += 1;
        }
        counts
    }

    /// Number of occurrences of `u` as a factor (contiguous block);
    /// overlapping occurrences all count. The empty factor is rejected.
    pub fn factor_count(&self, u: &FiniteWord) -> Result<u64, Error> {
        self.check_same_alphabet(u)?;
        if u.is_empty() {
            return Err(Error::EmptyFactor);
        }
        if u.len() > self.len() {
            return Ok(0);
        }
        let target = u.letters.as_slice();
        Ok(self
            .letters
            .windows(u.len())
            .filter(|w| *w == target)
            .count() as u64)
    }

    /// The binomial coefficient of `self` and `u`: the number of occurrences
    /// of `u` as a scattered subword. `(w choose empty) = 1`.
    ///
    /// One left-to-right scan over `self` with `|u| + 1` running counts;
    /// cell `j` holds the number of embeddings of `u[..j]` into the scanned
    /// prefix. Counts are checked `u64`.
    pub fn binomial(&self, u: &FiniteWord) -> Result<u64, Error> {
        self.check_same_alphabet(u)?;
        let mut counts = vec![0u64; u.len() + 1];
        counts[0] = 1;
        for &c in &self.letters {
            // Downwards so each occurrence of c extends only embeddings that
            // were complete before this position.
            for j in (1..=u.len()).rev() {
                if u.letters[j - 1] == c {
                    counts[j] = counts[j]
                        .checked_add(counts[j - 1])
                        .ok_or(Error::CountOverflow)?;
                }
            }
        }
        Ok(counts[u.len()])
    }

    /// The set of distinct factors of length `n`, sorted lexicographically by
    /// letter id. `n = 0` yields the empty word, `n > |w|` yields nothing.
    pub fn distinct_factors(&self, n: usize) -> Vec<FiniteWord> {
        if n == 0 {
            return vec![FiniteWord::empty(self.alphabet.clone())];
        }
        if n > self.len() {
            return Vec::new();
        }
        let mut seen: HashSet<&[Letter]> = HashSet::new();
        for window in self.letters.windows(n) {
            seen.insert(window);
        }
        let mut slices: Vec<&[Letter]> = seen.into_iter().collect();
        slices.sort_unstable();
        slices
            .into_iter()
            .map(|s| FiniteWord {
                alphabet: self.alphabet.clone(),
                letters: s.to_vec(),
            })
            .collect()
    }
}

impl PartialOrd for FiniteWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiniteWord {
    /// Lexicographic by letter id (so a proper prefix sorts first), with the
    /// alphabet as a final tiebreak to keep the order total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .cmp(&other.letters)
            .then_with(|| self.alphabet.cmp(&other.alphabet))
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.single_char() {
            for l in &self.letters {
                f.write_str(self.alphabet.glyph(*l))?;
            }
            Ok(())
        } else {
            let parts: Vec<&str> = self.letters.iter().map(|l| self.alphabet.glyph(*l)).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl serde::Serialize for FiniteWord {
    /// Words serialize as their display form; reports never need to parse
    /// them back.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
