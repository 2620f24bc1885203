use std::collections::BTreeMap;

use crate::words::{projected_alphabet, Alphabet, FiniteWord, Letter};

use super::Error;

/// The two-letter projections of one word: for every unordered letter pair
/// `{a, b}` of a declared alphabet, a binary word over `{a, b}`. Families
/// are validated to be count-consistent (each letter occurs equally often
/// in every projection containing it), which is necessary, though not
/// sufficient, for some word to have these projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionFamily {
    alphabet: Alphabet,
    pairs: BTreeMap<(Letter, Letter), FiniteWord>,
}

impl ProjectionFamily {
    /// The projections of an existing word onto all of its letter pairs.
    pub fn of_word(w: &FiniteWord) -> Result<Self, Error> {
        let d = w.alphabet().size();
        if d < 2 {
            return Err(Error::AlphabetTooSmall);
        }
        let mut pairs = BTreeMap::new();
        for i in 0..d {
            for j in i + 1..d {
                let (a, b) = (Letter::new(i as u8), Letter::new(j as u8));
                pairs.insert((a, b), w.project_pair(a, b)?);
            }
        }
        Ok(ProjectionFamily {
            alphabet: w.alphabet().clone(),
            pairs,
        })
    }

    /// Assembles a family from explicit per-pair words. Every unordered
    /// pair of the alphabet must appear exactly once (in either order);
    /// each word must live over exactly the two projected letters, and the
    /// per-letter counts must agree across pairs.
    pub fn new(
        alphabet: Alphabet,
        entries: impl IntoIterator<Item = ((Letter, Letter), FiniteWord)>,
    ) -> Result<Self, Error> {
        let d = alphabet.size();
        if d < 2 {
            return Err(Error::AlphabetTooSmall);
        }
        let mut pairs: BTreeMap<(Letter, Letter), FiniteWord> = BTreeMap::new();
        for ((x, y), w) in entries {
            if x == y || !alphabet.contains(x) || !alphabet.contains(y) {
                return Err(Error::InconsistentFamily {
                    reason: format!(
                        "({}, {}) is not a letter pair of {{{}}}",
                        x.id(),
                        y.id(),
                        alphabet.describe()
                    ),
                });
            }
            let key = if x.id() < y.id() { (x, y) } else { (y, x) };
            let expected = projected_alphabet(&alphabet, &[key.0, key.1])?;
            if *w.alphabet() != expected {
                return Err(Error::InconsistentFamily {
                    reason: format!(
                        "projection for {{{}, {}}} lives over {{{}}}, expected {{{}}}",
                        alphabet.glyph(key.0),
                        alphabet.glyph(key.1),
                        w.alphabet().describe(),
                        expected.describe()
                    ),
                });
            }
            if pairs.insert(key, w).is_some() {
                return Err(Error::InconsistentFamily {
                    reason: format!(
                        "duplicate projection for {{{}, {}}}",
                        alphabet.glyph(key.0),
                        alphabet.glyph(key.1)
                    ),
                });
            }
        }
        let expected_pairs = d * (d - 1) / 2;
        if pairs.len() != expected_pairs {
            return Err(Error::InconsistentFamily {
                reason: format!(
                    "{} of the {} letter pairs provided",
                    pairs.len(),
                    expected_pairs
                ),
            });
        }

        let family = ProjectionFamily { alphabet, pairs };
        family.check_counts()?;
        Ok(family)
    }

    /// Per-letter occurrence counts must agree across all projections
    /// containing the letter; a mismatch proves no word has this family.
    fn check_counts(&self) -> Result<(), Error> {
        for letter in self.alphabet.letters() {
            let mut seen: Option<((Letter, Letter), u64)> = None;
            for (&key, w) in &self.pairs {
                let Some(local) = position_of(key, letter) else {
                    continue;
                };
                let count = w.letter_count(local)?;
                match seen {
                    None => seen = Some((key, count)),
                    Some((first_key, first_count)) if first_count != count => {
                        return Err(Error::InconsistentFamily {
                            reason: format!(
                                "'{}' occurs {} times in the {{{}, {}}} projection but {} times in {{{}, {}}}",
                                self.alphabet.glyph(letter),
                                first_count,
                                self.alphabet.glyph(first_key.0),
                                self.alphabet.glyph(first_key.1),
                                count,
                                self.alphabet.glyph(key.0),
                                self.alphabet.glyph(key.1),
                            ),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// The stored projection for `{a, b}`, in either argument order.
    pub fn projection(&self, a: Letter, b: Letter) -> Option<&FiniteWord> {
        let key = if a.id() < b.id() { (a, b) } else { (b, a) };
        self.pairs.get(&key)
    }

    /// All projections, keyed by ascending letter pair.
    pub fn pairs(&self) -> impl Iterator<Item = ((Letter, Letter), &FiniteWord)> {
        self.pairs.iter().map(|(&key, w)| (key, w))
    }

    /// The unique word over the declared alphabet whose projections equal
    /// this family, rebuilt letter by letter: at each step exactly one
    /// letter `i` can come next, namely the one every unfinished projection
    /// containing `i` expects now. Zero or several candidates prove the
    /// family does not arise from any word.
    pub fn reconstruct(&self) -> Result<FiniteWord, Error> {
        let mut cursors: BTreeMap<(Letter, Letter), usize> =
            self.pairs.keys().map(|&key| (key, 0)).collect();
        let mut rebuilt: Vec<Letter> = Vec::new();

        loop {
            let mut eligible: Vec<Letter> = Vec::new();
            for candidate in self.alphabet.letters() {
                let mut ok = true;
                for (&key, w) in &self.pairs {
                    let Some(local) = position_of(key, candidate) else {
                        continue;
                    };
                    let cursor = cursors[&key];
                    // An exhausted projection vetoes the letter: emitting it
                    // would extend that projection past its end.
                    if cursor >= w.len() || w.letters()[cursor] != local {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    eligible.push(candidate);
                }
            }

            match eligible.len() {
                0 => {
                    if cursors.iter().all(|(key, &c)| c == self.pairs[key].len()) {
                        break;
                    }
                    return Err(Error::InconsistentFamily {
                        reason: format!(
                            "no letter can follow the {} reconstructed so far",
                            FiniteWord::new(self.alphabet.clone(), rebuilt.clone())?
                        ),
                    });
                }
                1 => {
                    let next = eligible[0];
                    rebuilt.push(next);
                    for (&key, cursor) in cursors.iter_mut() {
                        if position_of(key, next).is_some() {
                            *cursor += 1;
                        }
                    }
                }
                _ => {
                    return Err(Error::InconsistentFamily {
                        reason: format!(
                            "{} letters could equally follow the {} reconstructed so far",
                            eligible.len(),
                            FiniteWord::new(self.alphabet.clone(), rebuilt.clone())?
                        ),
                    });
                }
            }
        }

        Ok(FiniteWord::new(self.alphabet.clone(), rebuilt)?)
    }
}

/// The local id of `letter` inside the two-letter projection alphabet of
/// `key`, if the pair contains it.
fn position_of(key: (Letter, Letter), letter: Letter) -> Option<Letter> {
    if letter == key.0 {
        Some(Letter::new(0))
    } else if letter == key.1 {
        Some(Letter::new(1))
    } else {
        None
    }
}

/// See [`ProjectionFamily::reconstruct`].
pub fn reconstruct(family: &ProjectionFamily) -> Result<FiniteWord, Error> {
    family.reconstruct()
}
