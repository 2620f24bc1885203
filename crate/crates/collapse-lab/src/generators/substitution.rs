use crate::words::{Alphabet, FiniteWord, Letter};

use super::Error;

/// A substitution: one image word per domain letter. The codomain may differ
/// from the domain (relabelings, letter-to-letter codings); iterating to a
/// fixed point additionally requires domain = codomain and a prolongable
/// seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<FiniteWord>,
}

impl Substitution {
    pub fn new(domain: Alphabet, images: Vec<FiniteWord>) -> Result<Self, Error> {
        if images.len() != domain.size() {
            return Err(Error::InvalidSpec {
                reason: format!(
                    "substitution needs {} images for alphabet {{{}}}, got {}",
                    domain.size(),
                    domain.describe(),
                    images.len()
                ),
            });
        }
        let codomain = images[0].alphabet().clone();
        for image in &images[1..] {
            if *image.alphabet() != codomain {
                return Err(Error::InvalidSpec {
                    reason: "substitution images use different alphabets".into(),
                });
            }
        }
        Ok(Substitution {
            domain,
            codomain,
            images,
        })
    }

    /// Images given as glyph strings over single-character alphabets.
    pub fn from_glyphs(domain: &str, codomain: &str, images: &[&str]) -> Result<Self, Error> {
        let domain = Alphabet::from_glyphs(domain)?;
        let codomain = Alphabet::from_glyphs(codomain)?;
        let images = images
            .iter()
            .map(|text| FiniteWord::from_glyphs(&codomain, text))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(domain, images)
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn image(&self, letter: Letter) -> Result<&FiniteWord, Error> {
        self.images
            .get(letter.id())
            .ok_or_else(|| Error::InvalidSpec {
                reason: format!(
                    "letter id {} outside substitution domain {{{}}}",
                    letter.id(),
                    self.domain.describe()
                ),
            })
    }

    /// `0→01, 1→0` style summary for labels and error messages.
    pub fn describe(&self) -> String {
        self.images
            .iter()
            .enumerate()
            .map(|(i, image)| {
                format!("{}→{}", self.domain.glyphs()[i], image)
            })
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Applies the substitution letter by letter.
    pub fn apply(&self, w: &FiniteWord) -> Result<FiniteWord, Error> {
        if *w.alphabet() != self.domain {
            return Err(Error::InvalidSpec {
                reason: format!(
                    "substitution domain {{{}}} does not match word alphabet {{{}}}",
                    self.domain.describe(),
                    w.alphabet().describe()
                ),
            });
        }
        let mut letters = Vec::new();
        for &l in w.letters() {
            letters.extend_from_slice(self.images[l.id()].letters());
        }
        Ok(FiniteWord::new(self.codomain.clone(), letters)?)
    }

    /// True when iterating from `seed` converges to a one-sided fixed point:
    /// the seed's image starts with the seed and is strictly longer.
    pub fn prolongable_on(&self, seed: Letter) -> bool {
        self.domain == self.codomain
            && self.domain.contains(seed)
            && self.images[seed.id()].len() >= 2
            && self.images[seed.id()].get(0) == Some(seed)
    }

    /// The length-`len` prefix of the fixed point `σ^ω(seed)`.
    ///
    /// The fixed point is the concatenation of the images of its own
    /// letters, so the buffer stays ahead of the read cursor as long as
    /// images keep producing letters; a stall (possible only with erasing
    /// images) is reported rather than looped on.
    pub fn fixed_point_prefix(&self, seed: Letter, len: usize) -> Result<FiniteWord, Error> {
        if !self.prolongable_on(seed) {
            return Err(Error::InvalidSpec {
                reason: format!(
                    "substitution {} is not prolongable on seed '{}'",
                    self.describe(),
                    self.domain
                        .glyphs()
                        .get(seed.id())
                        .map(String::as_str)
                        .unwrap_or("?")
                ),
            });
        }
        if len == 0 {
            return Ok(FiniteWord::empty(self.codomain.clone()));
        }
        let mut buf: Vec<Letter> = self.images[seed.id()].letters().to_vec();
        let mut cursor = 1usize;
        while buf.len() < len {
            if cursor >= buf.len() {
                return Err(Error::NonConvergent {
                    steps: cursor,
                    detail: format!(
                        "fixed point of {} stalls at length {}",
                        self.describe(),
                        buf.len()
                    ),
                });
            }
            let next = buf[cursor];
            cursor += 1;
            buf.extend_from_slice(self.images[next.id()].letters());
        }
        buf.truncate(len);
        Ok(FiniteWord::new(self.codomain.clone(), buf)?)
    }
}
