use crate::words::{Alphabet, FiniteWord, Letter};

use super::Error;

/// Image letter ids (0-based over `{1,2,3}`) of the two ternary morphisms
/// driving the construction: `1↦1, 2↦13, 3↦2` and `1↦2, 2↦13, 3↦3`.
const MORPHISMS: [[&[u8]; 3]; 2] = [
    [&[0], &[0, 2], &[1]],
    [&[1], &[0, 2], &[2]],
];

pub(super) fn ternary_alphabet() -> Alphabet {
    Alphabet::from_glyphs("123").expect("fixed alphabet")
}

/// Prefix of the ternary word directed by an eventually periodic sequence
/// over `{1, 2}` choosing which of the two fixed morphisms to compose next.
///
/// The word is the limit of the left-composed products `P_n`; any common
/// prefix of the images `P_n(1), P_n(2), P_n(3)` is a prefix of the limit,
/// and it only grows with `n`. Directives whose products stop growing (for
/// example a constant directive) have no infinite limit and are rejected.
pub fn cassaigne_selmer_prefix(
    preperiod: &[u8],
    period: &[u8],
    len: usize,
) -> Result<FiniteWord, Error> {
    if period.is_empty() {
        return Err(Error::InvalidSpec {
            reason: "directive period must be nonempty".into(),
        });
    }
    for &e in preperiod.iter().chain(period) {
        if e != 1 && e != 2 {
            return Err(Error::InvalidSpec {
                reason: format!("directive entries must be 1 or 2, got {e}"),
            });
        }
    }
    let alphabet = ternary_alphabet();
    if len == 0 {
        return Ok(FiniteWord::empty(alphabet));
    }

    // Product images of 1, 2, 3, starting from the identity.
    let mut images: [Vec<u8>; 3] = [vec![0], vec![1], vec![2]];
    let mut directive = preperiod.iter().chain(period.iter().cycle());

    let stall_window = 24.max(4 * (preperiod.len() + period.len()));
    let mut stalled_steps = 0usize;
    let mut last_min_len = 1usize;

    for _ in 0..10_000usize {
        let choice = *directive.next().expect("period is nonempty") as usize - 1;
        let mut next: [Vec<u8>; 3] = Default::default();
        for (j, slot) in next.iter_mut().enumerate() {
            let mut out = Vec::new();
            for &m in MORPHISMS[choice][j] {
                out.extend_from_slice(&images[m as usize]);
            }
            *slot = out;
        }
        images = next;

        let lcp = common_prefix_len(&images);
        if lcp >= len {
            let letters = images[0][..len].iter().map(|&id| Letter::new(id)).collect();
            return Ok(FiniteWord::new(alphabet, letters)?);
        }

        // The common prefix is bounded by the shortest image, so a shortest
        // image that stops growing means the limit is not an infinite word.
        let min_len = images.iter().map(Vec::len).min().unwrap();
        if min_len > last_min_len {
            last_min_len = min_len;
            stalled_steps = 0;
        } else {
            stalled_steps += 1;
            if stalled_steps >= stall_window {
                return Err(Error::NonConvergent {
                    steps: stalled_steps,
                    detail: format!(
                        "shortest product image stuck at length {min_len}; \
                         the directive does not define an infinite word"
                    ),
                });
            }
        }
    }
    Err(Error::NonConvergent {
        steps: 10_000,
        detail: "product images did not cover the requested prefix".into(),
    })
}

fn common_prefix_len(images: &[Vec<u8>; 3]) -> usize {
    let limit = images.iter().map(Vec::len).min().unwrap();
    (0..limit)
        .find(|&i| images[1][i] != images[0][i] || images[2][i] != images[0][i])
        .unwrap_or(limit)
}
