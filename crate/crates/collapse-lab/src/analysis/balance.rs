use std::collections::BTreeMap;

use serde::Serialize;

use crate::words::{FiniteWord, Letter};

use super::Error;

/// Sliding-window letter-count spreads of one prefix: for each letter `a`
/// and window length `n`, the largest difference of `a`-counts between two
/// equal-length windows. `overall_c` is the least `c` such that the prefix
/// is `c`-balanced at every analyzed scale.
#[derive(Debug, Clone, Serialize)]
pub struct BalanceReport {
    pub prefix_length: usize,
    pub n_max: usize,
    /// Letter glyphs, index-aligned with the rows of `imbalance`.
    pub letters: Vec<String>,
    /// `imbalance[letter][n - 1]` = count spread of that letter over
    /// length-`n` windows.
    pub imbalance: Vec<Vec<u64>>,
    pub overall_c: u64,
}

impl BalanceReport {
    /// The count spread of `letter` over windows of length `n`.
    pub fn spread(&self, letter: Letter, n: usize) -> Option<u64> {
        self.imbalance
            .get(letter.id())
            .and_then(|row| row.get(n.checked_sub(1)?))
            .copied()
    }
}

/// Measures how far the prefix is from constant letter frequencies: the
/// maximal per-letter count difference between equal-length windows, for
/// every window length up to `n_max`.
pub fn imbalance(prefix: &FiniteWord, n_max: usize) -> Result<BalanceReport, Error> {
    if n_max > prefix.len() {
        return Err(Error::WindowTooLong {
            n_max,
            prefix_length: prefix.len(),
        });
    }
    let d = prefix.alphabet().size();
    let len = prefix.len();

    // prefix_counts[a][i] = occurrences of a among the first i letters.
    let mut prefix_counts: Vec<Vec<u32>> = vec![Vec::with_capacity(len + 1); d];
    for row in &mut prefix_counts {
        row.push(0);
    }
    for (i, l) in prefix.letters().iter().enumerate() {
        for (a, row) in prefix_counts.iter_mut().enumerate() {
            let prev = row[i];
            row.push(prev + u32::from(a == l.id()));
        }
    }

    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(d);
    let mut overall_c = 0u64;
    for counts in &prefix_counts {
        let mut row = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let mut lo = u32::MAX;
            let mut hi = 0u32;
            for i in 0..=len - n {
                let in_window = counts[i + n] - counts[i];
                lo = lo.min(in_window);
                hi = hi.max(in_window);
            }
            let spread = u64::from(hi - lo);
            overall_c = overall_c.max(spread);
            row.push(spread);
        }
        rows.push(row);
    }

    Ok(BalanceReport {
        prefix_length: len,
        n_max,
        letters: prefix.alphabet().glyphs().to_vec(),
        imbalance: rows,
        overall_c,
    })
}

/// Balance report of every two-letter projection of the prefix, keyed by
/// the (ascending) letter pair. Each projection is analyzed up to
/// `min(n_max, projected length)`.
pub fn binary_projection_imbalance(
    prefix: &FiniteWord,
    n_max: usize,
) -> Result<BTreeMap<(Letter, Letter), BalanceReport>, Error> {
    let d = prefix.alphabet().size();
    if d < 2 {
        return Err(Error::AlphabetTooSmall);
    }
    let mut reports = BTreeMap::new();
    for i in 0..d {
        for j in i + 1..d {
            let (a, b) = (Letter::new(i as u8), Letter::new(j as u8));
            let projected = prefix.project_pair(a, b)?;
            let window = n_max.min(projected.len());
            reports.insert((a, b), imbalance(&projected, window)?);
        }
    }
    Ok(reports)
}
