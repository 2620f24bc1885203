//! Prefix generators for the infinite words under study.
//!
//! Every family is described by an immutable [`GeneratorSpec`] whose
//! [`prefix`](GeneratorSpec::prefix) method materializes exactly the first
//! `L` letters, deterministically: asking for a longer prefix never changes
//! the letters already produced. Base families (morphic fixed points,
//! mechanical and standard words, episturmian and ternary directive words,
//! billiard codings) are built directly; combinator variants (projection,
//! coloring, substitution images, repeated swap-doubling) wrap another spec
//! and consume as much of its prefix as the requested length demands.
//!
//! All arithmetic that decides letters (mechanical floors, billiard crossing
//! times) is exact rational arithmetic, so the generated words are the true
//! codings, not floating-point approximations.

mod billiard;
mod cadic;
mod derived;
mod episturmian;
mod substitution;
mod sturmian;


pub use billiard::billiard_prefix;
pub use cadic::cassaigne_selmer_prefix;
pub use episturmian::{arnoux_rauzy_prefix, directive_is_strict, palindromic_closure};
pub use substitution::Substitution;
pub use sturmian::{mechanical_prefix, standard_sturmian_prefix};

use num::BigRational;

use crate::words::{self, Alphabet, FiniteWord, Letter};

/// Longest base prefix a combinator may consume while hunting for enough
/// output letters. Reaching it means the wrapped word contributes letters
/// too rarely (or never), and the request is refused instead of looping.
const MAX_BASE_PREFIX: usize = 1 << 24;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] words::Error),
    #[error("invalid generator: {reason}")]
    InvalidSpec { reason: String },
    #[error(
        "degenerate trajectory: coordinates {first} and {second} cross simultaneously at t = {time}"
    )]
    DegenerateTrajectory {
        first: usize,
        second: usize,
        time: String,
    },
    #[error("directive exhausted after {produced} letters of the {requested} requested")]
    DirectiveExhausted { produced: usize, requested: usize },
    #[error("no infinite limit word ({steps} steps without progress): {detail}")]
    NonConvergent { steps: usize, detail: String },
    #[error(
        "requested {requested} letters but a base prefix of length {base_length} yielded only {produced}"
    )]
    PrefixBudgetExceeded {
        requested: usize,
        base_length: usize,
        produced: usize,
    },
}

/// Description of an infinite word as data: which family, with which
/// parameters. Specs are cheap to clone, safe to share across threads, and
/// generate through [`prefix`](GeneratorSpec::prefix).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// Fixed point `σ^ω(seed)` of a substitution prolongable on `seed`.
    Morphic {
        substitution: Substitution,
        seed: Letter,
    },
    /// `preperiod · period · period · …` with a nonempty period.
    EventuallyPeriodic {
        preperiod: FiniteWord,
        period: FiniteWord,
    },
    /// Lower mechanical word with slope `alpha` in `[0, 1]` and intercept
    /// `rho`, over `{0, 1}`.
    Mechanical { alpha: BigRational, rho: BigRational },
    /// Limit of the standard word recursion `s_k = s_{k-1}^{a_k} s_{k-2}`.
    /// A finite directive must cover the requested length unless `periodic`
    /// repeats it forever.
    StandardSturmian { directive: Vec<u32>, periodic: bool },
    /// Episturmian word via iterated palindromic closure of the directive
    /// `preperiod · period^ω`.
    ArnouxRauzy {
        alphabet: Alphabet,
        preperiod: Vec<Letter>,
        period: Vec<Letter>,
    },
    /// Ternary directive word: the limit of composing the two fixed ternary
    /// morphisms as chosen by `preperiod · period^ω` over `{1, 2}`.
    CassaigneSelmer { preperiod: Vec<u8>, period: Vec<u8> },
    /// Coding of a ray from `start` with velocity `momentum` through the
    /// unit hypergrid; letter `i` marks a crossing in coordinate `i`.
    Billiard {
        start: Vec<BigRational>,
        momentum: Vec<BigRational>,
    },
    /// Image of a binary word under `1 ↦ B·C, 2 ↦ B·D`, with the first
    /// `shift` letters dropped.
    QuasiSturmianFm {
        inner: Box<GeneratorSpec>,
        block_b: Vec<String>,
        block_c: Vec<String>,
        block_d: Vec<String>,
        shift: usize,
    },
    /// `base` with every occurrence of `letter` replaced by successive
    /// letters of `colors`.
    Colored {
        base: Box<GeneratorSpec>,
        letter: Letter,
        colors: Box<GeneratorSpec>,
    },
    /// `base` with all letters outside `keep` erased.
    Projected {
        base: Box<GeneratorSpec>,
        keep: Vec<Letter>,
    },
    /// `substitution` applied to `base`, with the first `shift` letters
    /// dropped.
    SubstitutionImage {
        base: Box<GeneratorSpec>,
        substitution: Substitution,
        shift: usize,
    },
    /// `iterations`-fold application of the swap-doubling substitution
    /// `a ↦ ab, b ↦ ba` (over the binary base's own letters) to `base`.
    ThueMorseIterated {
        base: Box<GeneratorSpec>,
        iterations: u32,
    },
}

impl GeneratorSpec {
    /// Exactly the first `len` letters of the described infinite word.
    pub fn prefix(&self, len: usize) -> Result<FiniteWord, Error> {
        match self {
            GeneratorSpec::Morphic { substitution, seed } => {
                substitution.fixed_point_prefix(*seed, len)
            }
            GeneratorSpec::EventuallyPeriodic { preperiod, period } => {
                eventually_periodic_prefix(preperiod, period, len)
            }
            GeneratorSpec::Mechanical { alpha, rho } => mechanical_prefix(alpha, rho, len),
            GeneratorSpec::StandardSturmian {
                directive,
                periodic,
            } => standard_sturmian_prefix(directive, *periodic, len),
            GeneratorSpec::ArnouxRauzy {
                alphabet,
                preperiod,
                period,
            } => arnoux_rauzy_prefix(alphabet, preperiod, period, len),
            GeneratorSpec::CassaigneSelmer { preperiod, period } => {
                cassaigne_selmer_prefix(preperiod, period, len)
            }
            GeneratorSpec::Billiard { start, momentum } => billiard_prefix(start, momentum, len),
            GeneratorSpec::QuasiSturmianFm {
                inner,
                block_b,
                block_c,
                block_d,
                shift,
            } => quasi_sturmian_fm_prefix(inner, block_b, block_c, block_d, *shift, len),
            GeneratorSpec::Colored {
                base,
                letter,
                colors,
            } => {
                let base_w = base.prefix(len)?;
                let needed = base_w.letter_count(*letter)? as usize;
                let colors_w = colors.prefix(needed)?;
                Ok(words::color(&base_w, *letter, &colors_w)?)
            }
            GeneratorSpec::Projected { base, keep } => {
                let mut base_len = len.max(1);
                loop {
                    let base_w = base.prefix(base_len)?;
                    let projected = base_w.project(keep)?;
                    if projected.len() >= len {
                        return Ok(projected.prefix(len));
                    }
                    if base_len >= MAX_BASE_PREFIX {
                        return Err(Error::PrefixBudgetExceeded {
                            requested: len,
                            base_length: base_len,
                            produced: projected.len(),
                        });
                    }
                    base_len = (base_len * 2).min(MAX_BASE_PREFIX);
                }
            }
            GeneratorSpec::SubstitutionImage {
                base,
                substitution,
                shift,
            } => {
                let goal = shift + len;
                let mut base_len = goal.max(1);
                loop {
                    let base_w = base.prefix(base_len)?;
                    let image = substitution.apply(&base_w)?;
                    if image.len() >= goal {
                        return Ok(image.factor(*shift, len));
                    }
                    if base_len >= MAX_BASE_PREFIX {
                        return Err(Error::PrefixBudgetExceeded {
                            requested: len,
                            base_length: base_len,
                            produced: image.len().saturating_sub(*shift),
                        });
                    }
                    base_len = (base_len * 2).min(MAX_BASE_PREFIX);
                }
            }
            GeneratorSpec::ThueMorseIterated { base, iterations } => {
                thue_morse_iterate_prefix(base, *iterations, len)
            }
        }
    }

    /// The alphabet prefixes live over, without generating anything.
    pub fn alphabet(&self) -> Result<Alphabet, Error> {
        match self {
            GeneratorSpec::Morphic { substitution, .. } => Ok(substitution.codomain().clone()),
            GeneratorSpec::EventuallyPeriodic { period, .. } => Ok(period.alphabet().clone()),
            GeneratorSpec::Mechanical { .. } | GeneratorSpec::StandardSturmian { .. } => {
                Ok(Alphabet::from_glyphs("01")?)
            }
            GeneratorSpec::ArnouxRauzy { alphabet, .. } => Ok(alphabet.clone()),
            GeneratorSpec::CassaigneSelmer { .. } => Ok(Alphabet::from_glyphs("123")?),
            GeneratorSpec::Billiard { start, .. } => {
                Ok(Alphabet::new((1..=start.len()).map(|i| i.to_string()).collect())?)
            }
            GeneratorSpec::QuasiSturmianFm {
                block_b,
                block_c,
                block_d,
                ..
            } => Ok(derived::block_substitution(block_b, block_c, block_d)?.alphabet),
            GeneratorSpec::Colored {
                base,
                letter,
                colors,
            } => Ok(words::colored_alphabet(
                &base.alphabet()?,
                *letter,
                &colors.alphabet()?,
            )?),
            GeneratorSpec::Projected { base, keep } => {
                Ok(words::projected_alphabet(&base.alphabet()?, keep)?)
            }
            GeneratorSpec::SubstitutionImage { substitution, .. } => {
                Ok(substitution.codomain().clone())
            }
            GeneratorSpec::ThueMorseIterated { base, .. } => base.alphabet(),
        }
    }

    /// Checks the spec's structural invariants without generating letters:
    /// prolongability, directive entry ranges, dimension agreement, block
    /// disjointness, and the binary-base requirements of the wrappers.
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            GeneratorSpec::Morphic { substitution, seed } => {
                if !substitution.prolongable_on(*seed) {
                    return Err(Error::InvalidSpec {
                        reason: format!(
                            "substitution {} is not prolongable on the seed",
                            substitution.describe()
                        ),
                    });
                }
            }
            GeneratorSpec::EventuallyPeriodic { preperiod, period } => {
                if period.is_empty() {
                    return Err(Error::InvalidSpec {
                        reason: "period must be nonempty".into(),
                    });
                }
                if preperiod.alphabet() != period.alphabet() {
                    return Err(Error::InvalidSpec {
                        reason: "preperiod and period must share an alphabet".into(),
                    });
                }
            }
            GeneratorSpec::Mechanical { alpha, rho } => {
                mechanical_prefix(alpha, rho, 0)?;
            }
            GeneratorSpec::StandardSturmian {
                directive,
                periodic,
            } => {
                standard_sturmian_prefix(directive, *periodic, 0)?;
            }
            GeneratorSpec::ArnouxRauzy {
                alphabet,
                preperiod,
                period,
            } => {
                arnoux_rauzy_prefix(alphabet, preperiod, period, 0)?;
            }
            GeneratorSpec::CassaigneSelmer { preperiod, period } => {
                cassaigne_selmer_prefix(preperiod, period, 0)?;
            }
            GeneratorSpec::Billiard { start, momentum } => {
                billiard_prefix(start, momentum, 0)?;
            }
            GeneratorSpec::QuasiSturmianFm {
                inner,
                block_b,
                block_c,
                block_d,
                shift,
            } => {
                inner.validate()?;
                let blocks = derived::block_substitution(block_b, block_c, block_d)?;
                if inner.alphabet()?.size() != 2 {
                    return Err(Error::InvalidSpec {
                        reason: "inner word must be binary".into(),
                    });
                }
                let longest = blocks.image_one.len().max(blocks.image_two.len());
                if *shift >= longest {
                    return Err(Error::InvalidSpec {
                        reason: format!(
                            "shift {shift} must be smaller than the longest image ({longest})"
                        ),
                    });
                }
            }
            GeneratorSpec::Colored {
                base,
                letter,
                colors,
            } => {
                base.validate()?;
                colors.validate()?;
                words::colored_alphabet(&base.alphabet()?, *letter, &colors.alphabet()?)?;
            }
            GeneratorSpec::Projected { base, keep } => {
                base.validate()?;
                words::projected_alphabet(&base.alphabet()?, keep)?;
            }
            GeneratorSpec::SubstitutionImage {
                base,
                substitution,
                ..
            } => {
                base.validate()?;
                if base.alphabet()? != *substitution.domain() {
                    return Err(Error::InvalidSpec {
                        reason: format!(
                            "substitution domain {{{}}} does not match the base alphabet {{{}}}",
                            substitution.domain().describe(),
                            base.alphabet()?.describe()
                        ),
                    });
                }
            }
            GeneratorSpec::ThueMorseIterated { base, .. } => {
                base.validate()?;
                if base.alphabet()?.size() != 2 {
                    return Err(Error::InvalidSpec {
                        reason: "swap-doubling needs a binary base".into(),
                    });
                }
            }
        }
        Ok(())
    }
}

fn eventually_periodic_prefix(
    preperiod: &FiniteWord,
    period: &FiniteWord,
    len: usize,
) -> Result<FiniteWord, Error> {
    if period.is_empty() {
        return Err(Error::InvalidSpec {
            reason: "period must be nonempty".into(),
        });
    }
    if preperiod.alphabet() != period.alphabet() {
        return Err(Error::InvalidSpec {
            reason: format!(
                "preperiod alphabet {{{}}} differs from period alphabet {{{}}}",
                preperiod.alphabet().describe(),
                period.alphabet().describe()
            ),
        });
    }
    let mut letters = preperiod.letters().to_vec();
    letters.truncate(len);
    let mut cycle = period.letters().iter().cycle();
    while letters.len() < len {
        letters.push(*cycle.next().expect("period is nonempty"));
    }
    Ok(FiniteWord::new(period.alphabet().clone(), letters)?)
}

/// Image of the binary word described by `inner` under `1 ↦ B·C, 2 ↦ B·D`
/// (inner letters taken in alphabet order), with the first `shift` letters
/// dropped. The three blocks list glyphs; they become the output alphabet in
/// B, C, D order.
pub fn quasi_sturmian_fm_prefix(
    inner: &GeneratorSpec,
    block_b: &[String],
    block_c: &[String],
    block_d: &[String],
    shift: usize,
    len: usize,
) -> Result<FiniteWord, Error> {
    let blocks = derived::block_substitution(block_b, block_c, block_d)?;
    // Both images are nonempty (B is), so shift + len inner letters always
    // produce enough output.
    let inner_w = inner.prefix(shift + len)?;
    derived::quasi_sturmian_apply(&inner_w, &blocks, shift, len)
}

/// Prefix of the `iterations`-fold image of a binary word under the
/// swap-doubling substitution `a ↦ ab, b ↦ ba` over the base's own letters.
pub fn thue_morse_iterate_prefix(
    base: &GeneratorSpec,
    iterations: u32,
    len: usize,
) -> Result<FiniteWord, Error> {
    // The substitution is 2-uniform: ⌈len / 2^iterations⌉ base letters are
    // exactly enough.
    let needed = if iterations as usize >= usize::BITS as usize {
        usize::from(len > 0)
    } else {
        let block = 1usize << iterations;
        len.div_ceil(block)
    };
    let base_w = base.prefix(needed)?;
    derived::swap_double_prefix(&base_w, iterations, len)
}
