use crate::words::{Alphabet, FiniteWord, Letter};

use super::Error;

/// The two image words of the quasi-Sturmian substitution `1 ↦ B·C`,
/// `2 ↦ B·D` over the alphabet `B ⊔ C ⊔ D` (ids in that order).
pub(super) struct BlockSubstitution {
    pub alphabet: Alphabet,
    pub image_one: Vec<Letter>,
    pub image_two: Vec<Letter>,
}

pub(super) fn block_substitution(
    block_b: &[String],
    block_c: &[String],
    block_d: &[String],
) -> Result<BlockSubstitution, Error> {
    let names: Vec<String> = block_b
        .iter()
        .chain(block_c)
        .chain(block_d)
        .cloned()
        .collect();
    // Alphabet construction rejects shared glyphs between the blocks.
    let alphabet = Alphabet::new(names).map_err(|_| Error::InvalidSpec {
        reason: "blocks B, C, D must be disjoint, nonempty-glyph lists with at least one letter in total".into(),
    })?;
    let nb = block_b.len();
    let nc = block_c.len();
    let nd = block_d.len();
    if nb == 0 {
        return Err(Error::InvalidSpec {
            reason: "block B must be nonempty".into(),
        });
    }
    if nc == 0 && nd == 0 {
        return Err(Error::InvalidSpec {
            reason: "blocks C and D cannot both be empty: the two images would coincide".into(),
        });
    }
    let letter = |i: usize| Letter::new(i as u8);
    let image_one: Vec<Letter> = (0..nb + nc).map(letter).collect();
    let image_two: Vec<Letter> = (0..nb)
        .chain(nb + nc..nb + nc + nd)
        .map(letter)
        .collect();
    Ok(BlockSubstitution {
        alphabet,
        image_one,
        image_two,
    })
}

/// Applies `1 ↦ B·C, 2 ↦ B·D` to a binary inner word (its first alphabet
/// letter plays 1), drops `shift` leading letters, and returns `len` of the
/// rest. The shift must stay below the longer image length and the dropped
/// letters must form a prefix of one of the images, so the result is a
/// proper tail of an image word.
pub(super) fn quasi_sturmian_apply(
    inner: &FiniteWord,
    blocks: &BlockSubstitution,
    shift: usize,
    len: usize,
) -> Result<FiniteWord, Error> {
    if inner.alphabet().size() != 2 {
        return Err(Error::InvalidSpec {
            reason: format!(
                "inner word must be binary, alphabet is {{{}}}",
                inner.alphabet().describe()
            ),
        });
    }
    let longest = blocks.image_one.len().max(blocks.image_two.len());
    if shift >= longest {
        return Err(Error::InvalidSpec {
            reason: format!("shift {shift} must be smaller than the longest image ({longest})"),
        });
    }
    let mut out = Vec::with_capacity(shift + len);
    'fill: for &l in inner.letters() {
        let image = if l.id() == 0 {
            &blocks.image_one
        } else {
            &blocks.image_two
        };
        for &c in image {
            out.push(c);
            if out.len() >= shift + len {
                break 'fill;
            }
        }
    }
    if out.len() < shift + len {
        return Err(Error::PrefixBudgetExceeded {
            requested: len,
            base_length: inner.len(),
            produced: out.len().saturating_sub(shift),
        });
    }
    let dropped = &out[..shift];
    let is_image_prefix = |image: &[Letter]| image.len() >= shift && image[..shift] == *dropped;
    if !is_image_prefix(&blocks.image_one) && !is_image_prefix(&blocks.image_two) {
        return Err(Error::InvalidSpec {
            reason: format!("the dropped letters are not a prefix of either image for shift {shift}"),
        });
    }
    out.drain(..shift);
    Ok(FiniteWord::new(blocks.alphabet.clone(), out)?)
}

/// `j`-fold application of the swap-doubling substitution `a ↦ ab, b ↦ ba`
/// (over the base's own two letters, in alphabet order), truncated to `len`.
/// Intermediates are truncated as well: the substitution is 2-uniform, so a
/// prefix of length `len` only ever depends on the first `⌈len/2⌉` letters
/// one level down.
pub(super) fn swap_double_prefix(base: &FiniteWord, iterations: u32, len: usize) -> Result<FiniteWord, Error> {
    if base.alphabet().size() != 2 {
        return Err(Error::InvalidSpec {
            reason: format!(
                "swap-doubling needs a binary base, alphabet is {{{}}}",
                base.alphabet().describe()
            ),
        });
    }
    let mut current: Vec<Letter> = base.letters().to_vec();
    current.truncate(len);
    for _ in 0..iterations {
        let mut next = Vec::with_capacity((current.len() * 2).min(len.max(1)));
        'outer: for &l in &current {
            let pair = if l.id() == 0 {
                [Letter::new(0), Letter::new(1)]
            } else {
                [Letter::new(1), Letter::new(0)]
            };
            for c in pair {
                next.push(c);
                if next.len() >= len {
                    break 'outer;
                }
            }
        }
        current = next;
        if current.len() >= len {
            current.truncate(len);
        }
    }
    Ok(FiniteWord::new(base.alphabet().clone(), current)?)
}
