use std::collections::HashMap;

use serde::Serialize;

use crate::words::{BinomialSignature, FiniteWord, Letter};

use super::Error;

fn check_window(prefix: &FiniteWord, n_max: usize) -> Result<(), Error> {
    if n_max > prefix.len() {
        return Err(Error::WindowTooLong {
            n_max,
            prefix_length: prefix.len(),
        });
    }
    Ok(())
}

/// Number of distinct length-`n` factors of the prefix, for `n = 1..=n_max`.
pub fn subword_complexity(prefix: &FiniteWord, n_max: usize) -> Result<Vec<u64>, Error> {
    check_window(prefix, n_max)?;
    let letters = prefix.letters();
    let mut counts = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let distinct: std::collections::HashSet<&[Letter]> =
            (0..=letters.len() - n).map(|i| &letters[i..i + n]).collect();
        counts.push(distinct.len() as u64);
    }
    Ok(counts)
}

struct ChainOutcome {
    factors: Vec<u64>,
    classes: Vec<u64>,
    collisions: Vec<(usize, FiniteWord, FiniteWord)>,
}

/// Counts factor classes per length by walking factors level by level: the
/// signature of `u·a` extends the already-known signature of `u`, so each
/// distinct factor costs one signature extension instead of a recount from
/// scratch. Also tracks, per class, the two lexicographically least members
/// so collision witnesses come out deterministic.
fn signature_chain(prefix: &FiniteWord, k: usize, n_max: usize) -> Result<ChainOutcome, Error> {
    check_window(prefix, n_max)?;
    let letters = prefix.letters();
    let d = prefix.alphabet().size();

    let mut factors = Vec::with_capacity(n_max);
    let mut classes = Vec::with_capacity(n_max);
    let mut collisions = Vec::new();

    let mut prev: HashMap<&[Letter], BinomialSignature> = HashMap::new();
    prev.insert(&letters[0..0], BinomialSignature::empty(d, k)?);

    for n in 1..=n_max {
        let mut cur: HashMap<&[Letter], BinomialSignature> = HashMap::with_capacity(prev.len() * d);
        for i in 0..=letters.len() - n {
            let child = &letters[i..i + n];
            if cur.contains_key(child) {
                continue;
            }
            let parent = &prev[&child[..n - 1]];
            cur.insert(child, parent.extended(child[n - 1])?);
        }
        factors.push(cur.len() as u64);

        // Group the factors of this length by signature, keeping the two
        // least members of each class.
        let mut groups: HashMap<&BinomialSignature, (&[Letter], Option<&[Letter]>)> =
            HashMap::with_capacity(cur.len());
        for (&factor, sig) in &cur {
            groups
                .entry(sig)
                .and_modify(|(best, second)| {
                    if factor < *best {
                        *second = Some(*best);
                        *best = factor;
                    } else if second.is_none() || factor < second.unwrap() {
                        *second = Some(factor);
                    }
                })
                .or_insert((factor, None));
        }
        classes.push(groups.len() as u64);

        let witness = groups
            .values()
            .filter_map(|&(best, second)| second.map(|s| (best, s)))
            .min();
        if let Some((u, v)) = witness {
            collisions.push((
                n,
                FiniteWord::new(prefix.alphabet().clone(), u.to_vec())?,
                FiniteWord::new(prefix.alphabet().clone(), v.to_vec())?,
            ));
        }

        prev = cur;
    }

    Ok(ChainOutcome {
        factors,
        classes,
        collisions,
    })
}

/// Number of abelian classes (shared letter counts) among length-`n`
/// factors, for `n = 1..=n_max`.
pub fn abelian_complexity(prefix: &FiniteWord, n_max: usize) -> Result<Vec<u64>, Error> {
    k_binomial_complexity(prefix, 1, n_max)
}

/// Number of order-`k` binomial classes among length-`n` factors, for
/// `n = 1..=n_max`.
pub fn k_binomial_complexity(
    prefix: &FiniteWord,
    k: usize,
    n_max: usize,
) -> Result<Vec<u64>, Error> {
    Ok(signature_chain(prefix, k, n_max)?.classes)
}

/// For each `n ≤ n_max` where some two distinct length-`n` factors share
/// their order-`k` signature, the lexicographically least such pair. The
/// result is empty exactly when the order-`k` class count equals the factor
/// count at every analyzed length.
pub fn find_collisions(
    prefix: &FiniteWord,
    k: usize,
    n_max: usize,
) -> Result<Vec<(usize, FiniteWord, FiniteWord)>, Error> {
    Ok(signature_chain(prefix, k, n_max)?.collisions)
}

/// One analyzed factor length.
#[derive(Debug, Clone, Serialize)]
pub struct ComplexityRow {
    pub n: usize,
    /// Distinct factors of length `n`.
    pub factors: u64,
    /// Abelian classes (order-1 signatures).
    pub abelian: u64,
    /// Order-`k` class counts, parallel to the report's `orders`.
    pub binomial: Vec<u64>,
}

/// A witnessed coincidence of order-`k` signatures between two distinct
/// factors of the same length.
#[derive(Debug, Clone, Serialize)]
pub struct Collision {
    pub order: usize,
    pub n: usize,
    pub left: FiniteWord,
    pub right: FiniteWord,
}

/// Factor, abelian, and binomial class counts of one prefix, per length.
#[derive(Debug, Clone, Serialize)]
pub struct ComplexityReport {
    pub prefix_length: usize,
    pub n_max: usize,
    /// The binomial orders analyzed, in the order requested.
    pub orders: Vec<usize>,
    pub rows: Vec<ComplexityRow>,
    /// Least witness pair per (order, length) with a class coincidence;
    /// empty when witnesses were not requested.
    pub collisions: Vec<Collision>,
}

impl ComplexityReport {
    /// Analyzes `prefix` at every length `1..=n_max` for the given binomial
    /// orders. Abelian and plain factor counts are always included; witness
    /// pairs are collected when `witnesses` is set.
    pub fn compute(
        prefix: &FiniteWord,
        orders: &[usize],
        n_max: usize,
        witnesses: bool,
    ) -> Result<Self, Error> {
        check_window(prefix, n_max)?;
        let mut by_order: HashMap<usize, ChainOutcome> = HashMap::new();
        for &k in orders.iter().chain(std::iter::once(&1)) {
            if let std::collections::hash_map::Entry::Vacant(slot) = by_order.entry(k) {
                slot.insert(signature_chain(prefix, k, n_max)?);
            }
        }

        let base = &by_order[&1];
        let rows = (1..=n_max)
            .map(|n| ComplexityRow {
                n,
                factors: base.factors[n - 1],
                abelian: base.classes[n - 1],
                binomial: orders.iter().map(|k| by_order[k].classes[n - 1]).collect(),
            })
            .collect();

        let mut collisions = Vec::new();
        if witnesses {
            for &k in orders {
                for (n, left, right) in &by_order[&k].collisions {
                    collisions.push(Collision {
                        order: k,
                        n: *n,
                        left: left.clone(),
                        right: right.clone(),
                    });
                }
            }
        }

        Ok(ComplexityReport {
            prefix_length: prefix.len(),
            n_max,
            orders: orders.to_vec(),
            rows,
            collisions,
        })
    }
}

/// The length-`n` factors of the prefix, grouped by order-`k` signature.
#[derive(Debug, Clone, Serialize)]
pub struct ClassPartition {
    n: usize,
    order: usize,
    /// Each group lists its members sorted; groups sort by least member.
    groups: Vec<Vec<FiniteWord>>,
    #[serde(skip)]
    signatures: Vec<BinomialSignature>,
}

impl ClassPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn groups(&self) -> &[Vec<FiniteWord>] {
        &self.groups
    }

    /// Signature shared by all members of the group at the same index.
    pub fn signatures(&self) -> &[BinomialSignature] {
        &self.signatures
    }

    pub fn class_count(&self) -> usize {
        self.groups.len()
    }
}

/// Partitions the distinct length-`n` factors of the prefix into order-`k`
/// classes.
pub fn classes(prefix: &FiniteWord, k: usize, n: usize) -> Result<ClassPartition, Error> {
    check_window(prefix, n)?;
    let mut grouped: HashMap<BinomialSignature, Vec<FiniteWord>> = HashMap::new();
    for factor in prefix.distinct_factors(n) {
        let sig = BinomialSignature::of_word(&factor, k)?;
        grouped.entry(sig).or_default().push(factor);
    }
    let mut entries: Vec<(BinomialSignature, Vec<FiniteWord>)> = grouped.into_iter().collect();
    for (_, members) in &mut entries {
        members.sort();
    }
    entries.sort_by(|a, b| a.1[0].cmp(&b.1[0]));

    let (signatures, groups) = entries.into_iter().map(|(s, g)| (s, g)).unzip();
    Ok(ClassPartition {
        n,
        order: k,
        groups,
        signatures,
    })
}
