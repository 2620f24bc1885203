use num::BigRational;

use crate::words::{Alphabet, FiniteWord, Letter};

use super::sturmian::{check_positive, check_unit_interval};
use super::Error;

pub(super) fn coordinate_alphabet(dims: usize) -> Result<Alphabet, Error> {
    Ok(Alphabet::new(
        (1..=dims).map(|i| i.to_string()).collect(),
    )?)
}

/// Prefix of the billiard word of a ray through the unit-hypergrid: starting
/// point `x` in `[0,1)^d`, positive rational velocity `θ`. Coordinate `i`
/// crosses a grid hyperplane at times `(m - x_i)/θ_i`, `m = 1, 2, ...`; the
/// word records which coordinate crosses, in time order. Two coordinates
/// crossing at the same instant means the ray hits a grid edge and the word
/// is undefined there; that tie is reported, not broken.
pub fn billiard_prefix(
    start: &[BigRational],
    momentum: &[BigRational],
    len: usize,
) -> Result<FiniteWord, Error> {
    let dims = start.len();
    if dims == 0 || dims != momentum.len() {
        return Err(Error::InvalidSpec {
            reason: format!(
                "billiard start has {} coordinates but momentum has {}",
                dims,
                momentum.len()
            ),
        });
    }
    for (i, x) in start.iter().enumerate() {
        check_unit_interval(x, &format!("billiard start coordinate {}", i + 1))?;
    }
    for (i, theta) in momentum.iter().enumerate() {
        check_positive(theta, &format!("billiard momentum coordinate {}", i + 1))?;
    }

    let alphabet = coordinate_alphabet(dims)?;
    let step: Vec<BigRational> = momentum.iter().map(|t| t.recip()).collect();
    let mut next_time: Vec<BigRational> = start
        .iter()
        .zip(momentum)
        .map(|(x, t)| (BigRational::from_integer(1.into()) - x) / t)
        .collect();

    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        let mut winner = 0usize;
        for i in 1..dims {
            if next_time[i] < next_time[winner] {
                winner = i;
            }
        }
        if let Some(tied) = (0..dims).find(|&i| i != winner && next_time[i] == next_time[winner]) {
            return Err(Error::DegenerateTrajectory {
                first: winner.min(tied) + 1,
                second: winner.max(tied) + 1,
                time: next_time[winner].to_string(),
            });
        }
        letters.push(Letter::new(winner as u8));
        let bump = step[winner].clone();
        next_time[winner] += bump;
    }
    Ok(FiniteWord::new(alphabet, letters)?)
}
