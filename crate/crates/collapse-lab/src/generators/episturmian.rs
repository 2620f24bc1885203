use crate::words::{Alphabet, FiniteWord, Letter};

use super::Error;

/// `w^+`: the shortest palindrome having `w` as a prefix, i.e. `u·v·ũ`
/// where `w = u·v` and `v` is the longest palindromic suffix of `w`.
pub fn palindromic_closure(w: &FiniteWord) -> FiniteWord {
    let letters = w.letters();
    let n = letters.len();
    let split = (0..n)
        .find(|&start| {
            let suffix = &letters[start..];
            suffix.iter().eq(suffix.iter().rev())
        })
        .unwrap_or(n);
    let mut closed = letters.to_vec();
    closed.extend(letters[..split].iter().rev());
    FiniteWord::new(w.alphabet().clone(), closed).expect("letters already validated")
}

/// Prefix of the episturmian word with the given eventually periodic
/// directive: iterated palindromic closure `u_{n+1} = (u_n · Δ[n])^+`.
///
/// Uses the right-extension bookkeeping instead of recomputing palindromic
/// suffixes: appending a directive letter `a` already seen appends the
/// suffix of the current palindrome past the palindromic prefix recorded at
/// the previous occurrence of `a`; a fresh letter appends `a` and the whole
/// palindrome. Each step is O(growth), so a length-L prefix costs O(L).
pub fn arnoux_rauzy_prefix(
    alphabet: &Alphabet,
    preperiod: &[Letter],
    period: &[Letter],
    len: usize,
) -> Result<FiniteWord, Error> {
    if period.is_empty() {
        return Err(Error::InvalidSpec {
            reason: "episturmian directive period must be nonempty".into(),
        });
    }
    for l in preperiod.iter().chain(period) {
        if !alphabet.contains(*l) {
            return Err(Error::InvalidSpec {
                reason: format!(
                    "directive letter id {} outside alphabet {{{}}}",
                    l.id(),
                    alphabet.describe()
                ),
            });
        }
    }

    let mut pal: Vec<Letter> = Vec::new();
    // prefix_len[a] = length of the palindromic prefix closed just before
    // the previous occurrence of a in the directive.
    let mut prefix_len: Vec<Option<usize>> = vec![None; alphabet.size()];
    let mut directive = preperiod.iter().chain(period.iter().cycle());
    while pal.len() < len {
        let a = *directive.next().expect("period is nonempty");
        let old_len = pal.len();
        match prefix_len[a.id()] {
            None => {
                pal.push(a);
                pal.extend_from_within(0..old_len);
            }
            Some(l) => {
                pal.extend_from_within(l..old_len);
            }
        }
        prefix_len[a.id()] = Some(old_len);
    }
    pal.truncate(len);
    Ok(FiniteWord::new(alphabet.clone(), pal)?)
}

/// Strict episturmian (Arnoux-Rauzy) directives visit every alphabet letter
/// within the period.
pub fn directive_is_strict(alphabet: &Alphabet, period: &[Letter]) -> bool {
    alphabet
        .letters()
        .all(|l| period.contains(&l))
}
