use num::{BigRational, One, Signed, Zero};

use crate::words::{Alphabet, FiniteWord, Letter};

use super::Error;

pub(super) fn binary_alphabet() -> Alphabet {
    Alphabet::from_glyphs("01").expect("fixed alphabet")
}

/// Lower mechanical word over `{0, 1}`: letter `n` is
/// `⌊α(n+1)+ρ⌋ − ⌊αn+ρ⌋`, for `α` in `[0, 1]`. Exact rational arithmetic,
/// so slopes like `2/5` produce their true periodic word.
pub fn mechanical_prefix(
    alpha: &BigRational,
    rho: &BigRational,
    len: usize,
) -> Result<FiniteWord, Error> {
    if alpha.is_negative() || alpha > &BigRational::one() {
        return Err(Error::InvalidSpec {
            reason: format!("mechanical slope {alpha} outside [0, 1]"),
        });
    }
    let mut letters = Vec::with_capacity(len);
    let mut acc = rho.clone();
    let mut prev_floor = acc.floor();
    for _ in 0..len {
        acc += alpha;
        let cur_floor = acc.floor();
        let digit = if cur_floor == prev_floor { 0 } else { 1 };
        letters.push(Letter::new(digit));
        prev_floor = cur_floor;
    }
    Ok(FiniteWord::new(binary_alphabet(), letters)?)
}

/// Standard word recursion: `s_{-1} = 1`, `s_0 = 0`,
/// `s_k = s_{k-1}^{a_k} · s_{k-2}` for directive entries `a_k ≥ 1`. With
/// `periodic` the directive repeats forever; otherwise running out of
/// entries before reaching `len` is an error.
pub fn standard_sturmian_prefix(
    directive: &[u32],
    periodic: bool,
    len: usize,
) -> Result<FiniteWord, Error> {
    if directive.is_empty() {
        return Err(Error::InvalidSpec {
            reason: "standard word directive must be nonempty".into(),
        });
    }
    if directive.iter().any(|&a| a == 0) {
        return Err(Error::InvalidSpec {
            reason: "standard word directive entries must be at least 1".into(),
        });
    }
    let alphabet = binary_alphabet();
    let zero = Letter::new(0);
    let one = Letter::new(1);

    let mut prev: Vec<Letter> = vec![one]; // s_{-1}
    let mut cur: Vec<Letter> = vec![zero]; // s_0
    let mut next_entry = 0usize;
    while cur.len() < len {
        if next_entry >= directive.len() && !periodic {
            // Every continuation of the directive yields a limit starting
            // with s_k · s_{k-1} (s_{k-1} is a prefix of s_k, so both the
            // a=1 and a≥2 cases agree that far); beyond it the word is
            // genuinely undetermined.
            cur.extend_from_slice(&prev);
            if cur.len() >= len {
                break;
            }
            return Err(Error::DirectiveExhausted {
                produced: cur.len(),
                requested: len,
            });
        }
        let a = directive[next_entry % directive.len()];
        next_entry += 1;
        let mut grown = Vec::with_capacity(cur.len() * a as usize + prev.len());
        for _ in 0..a {
            grown.extend_from_slice(&cur);
        }
        grown.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, grown);
    }
    cur.truncate(len);
    Ok(FiniteWord::new(alphabet, cur)?)
}

pub(super) fn check_unit_interval(value: &BigRational, what: &str) -> Result<(), Error> {
    if value.is_negative() || value >= &BigRational::one() {
        return Err(Error::InvalidSpec {
            reason: format!("{what} {value} outside [0, 1)"),
        });
    }
    Ok(())
}

pub(super) fn check_positive(value: &BigRational, what: &str) -> Result<(), Error> {
    if value <= &BigRational::zero() {
        return Err(Error::InvalidSpec {
            reason: format!("{what} {value} must be positive"),
        });
    }
    Ok(())
}
