use super::{Alphabet, Error, FiniteWord, Letter};

/// Validates a subalphabet (nonempty, distinct, inside `alphabet`) and
/// builds the target alphabet plus the old-id to new-id table. New id of a
/// kept letter = its rank among kept letters in ascending id order.
fn projection_remap(
    alphabet: &Alphabet,
    sub: &[Letter],
) -> Result<(Alphabet, Vec<Option<Letter>>), Error> {
    let d = alphabet.size();
    if sub.is_empty() {
        return Err(Error::BadSubalphabet);
    }
    let mut keep = vec![false; d];
    for l in sub {
        if !alphabet.contains(*l) {
            return Err(Error::LetterOutsideAlphabet {
                id: l.id(),
                alphabet: alphabet.describe(),
            });
        }
        if keep[l.id()] {
            return Err(Error::BadSubalphabet);
        }
        keep[l.id()] = true;
    }

    let mut remap = vec![None; d];
    let mut names = Vec::new();
    for id in 0..d {
        if keep[id] {
            remap[id] = Some(Letter::new(names.len() as u8));
            names.push(alphabet.glyphs()[id].clone());
        }
    }
    Ok((Alphabet::new(names)?, remap))
}

/// The alphabet that projections onto `sub` live over: the kept letters in
/// ascending id order, with fresh dense ids but their original glyphs.
pub fn projected_alphabet(alphabet: &Alphabet, sub: &[Letter]) -> Result<Alphabet, Error> {
    projection_remap(alphabet, sub).map(|(alphabet, _)| alphabet)
}

impl FiniteWord {
    /// Erases every letter outside `sub`; the result lives over
    /// `projected_alphabet(self.alphabet(), sub)`.
    pub fn project(&self, sub: &[Letter]) -> Result<FiniteWord, Error> {
        let (target, remap) = projection_remap(self.alphabet(), sub)?;
        let letters = self
            .letters()
            .iter()
            .filter_map(|l| remap[l.id()])
            .collect();
        FiniteWord::new(target, letters)
    }

    /// Projection onto the two-letter subalphabet `{a, b}`.
    pub fn project_pair(&self, a: Letter, b: Letter) -> Result<FiniteWord, Error> {
        if a == b {
            return Err(Error::BadSubalphabet);
        }
        let (lo, hi) = if a.id() < b.id() { (a, b) } else { (b, a) };
        self.project(&[lo, hi])
    }
}

/// Builds the coloring target alphabet plus the remap for non-colored base
/// letters and the id offset of the color block.
fn coloring_remap(
    base: &Alphabet,
    letter: Letter,
    colors: &Alphabet,
) -> Result<(Alphabet, Vec<Option<Letter>>, usize), Error> {
    if !base.contains(letter) {
        return Err(Error::LetterOutsideAlphabet {
            id: letter.id(),
            alphabet: base.describe(),
        });
    }
    for g in base.glyphs() {
        if colors.glyphs().contains(g) {
            return Err(Error::AlphabetsNotDisjoint { glyph: g.clone() });
        }
    }

    let mut names: Vec<String> = Vec::new();
    let mut remap = vec![None; base.size()];
    for id in 0..base.size() {
        if id != letter.id() {
            remap[id] = Some(Letter::new(names.len() as u8));
            names.push(base.glyphs()[id].clone());
        }
    }
    let color_base = names.len();
    names.extend(colors.glyphs().iter().cloned());
    Ok((Alphabet::new(names)?, remap, color_base))
}

/// The alphabet that colorings of `letter` live over: the remaining base
/// letters (in base order) followed by the color letters (in color order).
pub fn colored_alphabet(
    base: &Alphabet,
    letter: Letter,
    colors: &Alphabet,
) -> Result<Alphabet, Error> {
    coloring_remap(base, letter, colors).map(|(alphabet, _, _)| alphabet)
}

/// Replaces the `i`-th occurrence of `letter` in `base` by the `i`-th letter
/// of `colors`. The two alphabets must be glyph-disjoint. Runs out of
/// colors => error.
pub fn color(base: &FiniteWord, letter: Letter, colors: &FiniteWord) -> Result<FiniteWord, Error> {
    let (target, remap, color_base) = coloring_remap(base.alphabet(), letter, colors.alphabet())?;

    let needed = base.letter_count(letter)? as usize;
    if colors.len() < needed {
        return Err(Error::ColorsExhausted {
            letter: base.alphabet().glyph(letter).to_string(),
            needed,
            available: colors.len(),
        });
    }

    let mut next_color = 0usize;
    let mut letters = Vec::with_capacity(base.len());
    for &l in base.letters() {
        if l == letter {
            let c = colors.letters()[next_color];
            next_color += 1;
            letters.push(Letter::new((color_base + c.id()) as u8));
        } else {
            letters.push(remap[l.id()].expect("non-colored letters all remap"));
        }
    }
    FiniteWord::new(target, letters)
}
