use super::{Alphabet, Error, FiniteWord, Letter};

/// Cap on the number of patterns a signature may track
/// (`d + d^2 + ... + d^k`). Keeps accidental `d=255, k=4` requests from
/// allocating gigabytes.
pub const MAX_SIGNATURE_SPACE: usize = 1 << 22;

/// Scattered-subword counts of one word for every nonempty pattern of length
/// at most `k`, in canonical order: patterns sorted by length, then
/// lexicographically by letter id. The count of the empty pattern is always
/// 1 and is not stored.
///
/// Two words are `k`-binomially equivalent exactly when their signatures are
/// equal; with `k = 1` this is abelian equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinomialSignature {
    alphabet_size: usize,
    k: usize,
    word_length: u64,
    /// Flat counts; patterns of length m occupy a block of d^m entries and a
    /// pattern is the base-d numeral of its letter ids within the block.
    counts: Vec<u64>,
}

/// `d + d^2 + ... + d^k`, with block offsets; `offsets[m]` is where length-m
/// patterns start, `offsets[k+1]` is the total size.
fn block_offsets(d: usize, k: usize) -> Result<Vec<usize>, Error> {
    let mut offsets = vec![0usize; k + 2];
    let mut block = 1usize;
    for m in 1..=k {
        block = block.saturating_mul(d);
        offsets[m + 1] = offsets[m].saturating_add(block);
        if offsets[m + 1] > MAX_SIGNATURE_SPACE {
            return Err(Error::SignatureSpaceTooLarge {
                alphabet_size: d,
                k,
            });
        }
    }
    Ok(offsets)
}

impl BinomialSignature {
    /// The signature of the empty word over an alphabet of size `d`.
    pub fn empty(d: usize, k: usize) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::ZeroOrder);
        }
        if d == 0 || d > super::MAX_ALPHABET {
            return Err(Error::BadAlphabet);
        }
        let offsets = block_offsets(d, k)?;
        Ok(BinomialSignature {
            alphabet_size: d,
            k,
            word_length: 0,
            counts: vec![0; offsets[k + 1]],
        })
    }

    pub fn of_word(w: &FiniteWord, k: usize) -> Result<Self, Error> {
        let mut sig = Self::empty(w.alphabet().size(), k)?;
        for &a in w.letters() {
            sig.extend_with(a)?;
        }
        Ok(sig)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn word_length(&self) -> u64 {
        self.word_length
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Appends `a` to the underlying word, updating every count in place.
    ///
    /// Appending `a` adds, for each pattern x, the old count of the prefix
    /// pattern p whenever x = p·a. Target lengths are processed downwards so
    /// each source count is read before its own update.
    pub fn extend_with(&mut self, a: Letter) -> Result<(), Error> {
        let d = self.alphabet_size;
        if a.id() >= d {
            return Err(Error::LetterOutsideAlphabet {
                id: a.id(),
                alphabet: format!("size {d}"),
            });
        }
        let offsets = block_offsets(d, self.k).expect("validated at construction");
        for m in (2..=self.k).rev() {
            let src = offsets[m - 1];
            let src_len = offsets[m] - offsets[m - 1];
            let dst = offsets[m];
            for p in 0..src_len {
                let add = self.counts[src + p];
                if add != 0 {
                    let slot = dst + p * d + a.id();
                    self.counts[slot] = self.counts[slot]
                        .checked_add(add)
                        .ok_or(Error::CountOverflow)?;
                }
            }
        }
        self.counts[a.id()] = self.counts[a.id()].checked_add(1).ok_or(Error::CountOverflow)?;
        self.word_length = self.word_length.checked_add(1).ok_or(Error::CountOverflow)?;
        Ok(())
    }

    /// A copy of the signature with `a` appended to the underlying word.
    pub fn extended(&self, a: Letter) -> Result<Self, Error> {
        let mut next = self.clone();
        next.extend_with(a)?;
        Ok(next)
    }

    /// The stored count for a nonempty pattern of length at most `k`; the
    /// empty pattern yields 1. `None` when the pattern does not fit the
    /// signature shape.
    pub fn count_of(&self, pattern: &[Letter]) -> Option<u64> {
        if pattern.is_empty() {
            return Some(1);
        }
        if pattern.len() > self.k {
            return None;
        }
        let offsets = block_offsets(self.alphabet_size, self.k).ok()?;
        let mut index = 0usize;
        for l in pattern {
            if l.id() >= self.alphabet_size {
                return None;
            }
            index = index * self.alphabet_size + l.id();
        }
        Some(self.counts[offsets[pattern.len()] + index])
    }
}

/// All nonempty patterns of length at most `k` over `alphabet`, in the
/// canonical order used by [`BinomialSignature`]: by length, then
/// lexicographically by letter id.
pub fn canonical_patterns(alphabet: &Alphabet, k: usize) -> Result<Vec<FiniteWord>, Error> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    let d = alphabet.size();
    block_offsets(d, k)?;
    let mut out = Vec::new();
    for m in 1..=k {
        let mut current = vec![0usize; m];
        loop {
            let letters = current.iter().map(|&i| Letter::new(i as u8)).collect();
            out.push(FiniteWord::new(alphabet.clone(), letters)?);
            // Base-d increment, most significant digit first.
            let mut pos = m;
            loop {
                if pos == 0 {
                    break;
                }
                current[pos - 1] += 1;
                if current[pos - 1] < d {
                    break;
                }
                current[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
    }
    Ok(out)
}
