use serde::Serialize;

use crate::generators::GeneratorSpec;

use super::{complexity::subword_complexity, Error};

/// Outcome of a prefix-sufficiency probe: the last prefix length analyzed
/// and whether the factor sets had stopped growing by then.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SaturationOutcome {
    pub length: usize,
    pub stable: bool,
}

/// Doubles the prefix length starting from `initial_length` until doubling
/// adds no new factor of any length `≤ n_max`, or the next doubling would
/// pass `max_length`. Factor sets of nested prefixes only grow, so equal
/// per-length counts between consecutive doublings mean equal sets.
///
/// A `stable: false` outcome reports budget exhaustion; generation failures
/// (a degenerate trajectory, an exhausted directive) surface as errors.
pub fn saturation_probe(
    spec: &GeneratorSpec,
    n_max: usize,
    initial_length: usize,
    max_length: usize,
) -> Result<SaturationOutcome, Error> {
    if initial_length < n_max {
        return Err(Error::ProbeTooShort {
            initial_length,
            n_max,
        });
    }
    let mut length = initial_length;
    let mut profile = subword_complexity(&spec.prefix(length)?, n_max)?;
    while length < max_length {
        let next_length = (length * 2).min(max_length);
        let next_profile = subword_complexity(&spec.prefix(next_length)?, n_max)?;
        if next_profile == profile {
            return Ok(SaturationOutcome {
                length: next_length,
                stable: true,
            });
        }
        length = next_length;
        profile = next_profile;
    }
    Ok(SaturationOutcome {
        length,
        stable: false,
    })
}
