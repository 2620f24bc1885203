//! On-disk word-spec documents and the report envelope.
//!
//! A spec document is JSON with a `kind` discriminator naming the generator
//! family; combinators nest their operand specs as subdocuments. Rationals
//! are `"p/q"` strings, letters are glyphs, and words are glyph strings
//! (arrays of glyphs for alphabets whose glyphs are longer than one
//! character). Parsing and rendering round-trip: `parse(render(spec))`
//! rebuilds the identical generator.

use std::fmt::Write as _;
use std::str::FromStr;

use collapse_lab::generators::{GeneratorSpec, Substitution};
use collapse_lab::words::{Alphabet, FiniteWord};
use num::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("spec document is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Word(#[from] collapse_lab::words::Error),
    #[error("{0}")]
    Generator(#[from] collapse_lab::generators::Error),
    #[error("invalid spec document: {reason}")]
    Shape { reason: String },
}

fn shape(reason: impl Into<String>) -> DocError {
    DocError::Shape {
        reason: reason.into(),
    }
}

/// Glyph sequence: a compact string when every glyph is one character, an
/// explicit array otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GlyphText {
    Compact(String),
    Parts(Vec<String>),
}

impl GlyphText {
    fn alphabet(&self) -> Result<Alphabet, DocError> {
        Ok(match self {
            GlyphText::Compact(text) => Alphabet::from_glyphs(text)?,
            GlyphText::Parts(parts) => Alphabet::new(parts.clone())?,
        })
    }

    fn of_alphabet(alphabet: &Alphabet) -> Self {
        if alphabet.single_char() {
            GlyphText::Compact(alphabet.glyphs().concat())
        } else {
            GlyphText::Parts(alphabet.glyphs().to_vec())
        }
    }

    fn word(&self, alphabet: &Alphabet) -> Result<FiniteWord, DocError> {
        Ok(match self {
            GlyphText::Compact(text) => FiniteWord::from_glyphs(alphabet, text)?,
            GlyphText::Parts(parts) => {
                let parts: Vec<&str> = parts.iter().map(String::as_str).collect();
                FiniteWord::from_glyph_parts(alphabet, &parts)?
            }
        })
    }

    fn of_word(word: &FiniteWord) -> Self {
        if word.alphabet().single_char() {
            GlyphText::Compact(word.to_string())
        } else {
            GlyphText::Parts(
                word.letters()
                    .iter()
                    .map(|&l| word.alphabet().glyph(l).to_string())
                    .collect(),
            )
        }
    }
}

fn parse_ratio(text: &str) -> Result<BigRational, DocError> {
    BigRational::from_str(text.trim())
        .map_err(|e| shape(format!("cannot read \"{text}\" as a rational: {e}")))
}

fn parse_ratios(texts: &[String]) -> Result<Vec<BigRational>, DocError> {
    texts.iter().map(|t| parse_ratio(t)).collect()
}

fn render_ratios(values: &[BigRational]) -> Vec<String> {
    values.iter().map(BigRational::to_string).collect()
}

/// One generator spec as a document tree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SpecDocument {
    /// Fixed point of a substitution over a single alphabet; `images` are
    /// listed in alphabet order.
    Morphic {
        alphabet: GlyphText,
        images: Vec<GlyphText>,
        seed: String,
    },
    EventuallyPeriodic {
        alphabet: GlyphText,
        preperiod: GlyphText,
        period: GlyphText,
    },
    Mechanical {
        alpha: String,
        rho: String,
    },
    StandardSturmian {
        directive: Vec<u32>,
        periodic: bool,
    },
    ArnouxRauzy {
        alphabet: GlyphText,
        preperiod: GlyphText,
        period: GlyphText,
    },
    CassaigneSelmer {
        preperiod: Vec<u8>,
        period: Vec<u8>,
    },
    Billiard {
        start: Vec<String>,
        momentum: Vec<String>,
    },
    QuasiSturmianFm {
        inner: Box<SpecDocument>,
        block_b: Vec<String>,
        block_c: Vec<String>,
        block_d: Vec<String>,
        shift: usize,
    },
    Colored {
        base: Box<SpecDocument>,
        letter: String,
        colors: Box<SpecDocument>,
    },
    Projected {
        base: Box<SpecDocument>,
        keep: GlyphText,
    },
    /// Substitution applied to `base`; the domain is the base's alphabet,
    /// `images` are listed in domain order over `codomain`.
    SubstitutionImage {
        base: Box<SpecDocument>,
        codomain: GlyphText,
        images: Vec<GlyphText>,
        shift: usize,
    },
    ThueMorseIterated {
        base: Box<SpecDocument>,
        iterations: u32,
    },
}

fn substitution_from_doc(
    domain: Alphabet,
    codomain: &Alphabet,
    images: &[GlyphText],
) -> Result<Substitution, DocError> {
    if images.len() != domain.size() {
        return Err(shape(format!(
            "expected {} images, one per letter of {{{}}}, got {}",
            domain.size(),
            domain.describe(),
            images.len()
        )));
    }
    let images = images
        .iter()
        .map(|text| text.word(codomain))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Substitution::new(domain, images)?)
}

fn substitution_images(substitution: &Substitution) -> Vec<GlyphText> {
    substitution
        .domain()
        .letters()
        .map(|letter| {
            GlyphText::of_word(
                substitution
                    .image(letter)
                    .expect("every domain letter has an image"),
            )
        })
        .collect()
}

impl SpecDocument {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec documents serialize infallibly")
    }

    /// Hex SHA-256 of the canonical (compact) rendering.
    pub fn sha256(&self) -> String {
        let canonical = serde_json::to_string(self).expect("spec documents serialize infallibly");
        let digest = Sha256::digest(canonical.as_bytes());
        let mut out = String::with_capacity(64);
        for byte in digest {
            write!(out, "{byte:02x}").expect("writing to a string");
        }
        out
    }

    pub fn to_generator(&self) -> Result<GeneratorSpec, DocError> {
        Ok(match self {
            SpecDocument::Morphic {
                alphabet,
                images,
                seed,
            } => {
                let alphabet = alphabet.alphabet()?;
                let substitution = substitution_from_doc(alphabet.clone(), &alphabet, images)?;
                GeneratorSpec::Morphic {
                    substitution,
                    seed: alphabet.letter_of_glyph(seed)?,
                }
            }
            SpecDocument::EventuallyPeriodic {
                alphabet,
                preperiod,
                period,
            } => {
                let alphabet = alphabet.alphabet()?;
                GeneratorSpec::EventuallyPeriodic {
                    preperiod: preperiod.word(&alphabet)?,
                    period: period.word(&alphabet)?,
                }
            }
            SpecDocument::Mechanical { alpha, rho } => GeneratorSpec::Mechanical {
                alpha: parse_ratio(alpha)?,
                rho: parse_ratio(rho)?,
            },
            SpecDocument::StandardSturmian {
                directive,
                periodic,
            } => GeneratorSpec::StandardSturmian {
                directive: directive.clone(),
                periodic: *periodic,
            },
            SpecDocument::ArnouxRauzy {
                alphabet,
                preperiod,
                period,
            } => {
                let alphabet = alphabet.alphabet()?;
                GeneratorSpec::ArnouxRauzy {
                    preperiod: preperiod.word(&alphabet)?.letters().to_vec(),
                    period: period.word(&alphabet)?.letters().to_vec(),
                    alphabet,
                }
            }
            SpecDocument::CassaigneSelmer { preperiod, period } => {
                GeneratorSpec::CassaigneSelmer {
                    preperiod: preperiod.clone(),
                    period: period.clone(),
                }
            }
            SpecDocument::Billiard { start, momentum } => GeneratorSpec::Billiard {
                start: parse_ratios(start)?,
                momentum: parse_ratios(momentum)?,
            },
            SpecDocument::QuasiSturmianFm {
                inner,
                block_b,
                block_c,
                block_d,
                shift,
            } => GeneratorSpec::QuasiSturmianFm {
                inner: Box::new(inner.to_generator()?),
                block_b: block_b.clone(),
                block_c: block_c.clone(),
                block_d: block_d.clone(),
                shift: *shift,
            },
            SpecDocument::Colored {
                base,
                letter,
                colors,
            } => {
                let base_spec = base.to_generator()?;
                let letter = base_spec.alphabet()?.letter_of_glyph(letter)?;
                GeneratorSpec::Colored {
                    base: Box::new(base_spec),
                    letter,
                    colors: Box::new(colors.to_generator()?),
                }
            }
            SpecDocument::Projected { base, keep } => {
                let base_spec = base.to_generator()?;
                let keep = keep.word(&base_spec.alphabet()?)?.letters().to_vec();
                GeneratorSpec::Projected {
                    base: Box::new(base_spec),
                    keep,
                }
            }
            SpecDocument::SubstitutionImage {
                base,
                codomain,
                images,
                shift,
            } => {
                let base_spec = base.to_generator()?;
                let substitution =
                    substitution_from_doc(base_spec.alphabet()?, &codomain.alphabet()?, images)?;
                GeneratorSpec::SubstitutionImage {
                    base: Box::new(base_spec),
                    substitution,
                    shift: *shift,
                }
            }
            SpecDocument::ThueMorseIterated { base, iterations } => {
                GeneratorSpec::ThueMorseIterated {
                    base: Box::new(base.to_generator()?),
                    iterations: *iterations,
                }
            }
        })
    }

    pub fn from_generator(spec: &GeneratorSpec) -> Result<Self, DocError> {
        Ok(match spec {
            GeneratorSpec::Morphic { substitution, seed } => {
                if substitution.domain() != substitution.codomain() {
                    return Err(shape(
                        "a fixed-point substitution must map an alphabet to itself",
                    ));
                }
                SpecDocument::Morphic {
                    alphabet: GlyphText::of_alphabet(substitution.domain()),
                    images: substitution_images(substitution),
                    seed: substitution.domain().glyph(*seed).to_string(),
                }
            }
            GeneratorSpec::EventuallyPeriodic { preperiod, period } => {
                SpecDocument::EventuallyPeriodic {
                    alphabet: GlyphText::of_alphabet(period.alphabet()),
                    preperiod: GlyphText::of_word(preperiod),
                    period: GlyphText::of_word(period),
                }
            }
            GeneratorSpec::Mechanical { alpha, rho } => SpecDocument::Mechanical {
                alpha: alpha.to_string(),
                rho: rho.to_string(),
            },
            GeneratorSpec::StandardSturmian {
                directive,
                periodic,
            } => SpecDocument::StandardSturmian {
                directive: directive.clone(),
                periodic: *periodic,
            },
            GeneratorSpec::ArnouxRauzy {
                alphabet,
                preperiod,
                period,
            } => {
                let as_text = |letters: &[collapse_lab::words::Letter]| {
                    GlyphText::of_word(
                        &FiniteWord::new(alphabet.clone(), letters.to_vec())
                            .expect("directive letters live in the alphabet"),
                    )
                };
                SpecDocument::ArnouxRauzy {
                    alphabet: GlyphText::of_alphabet(alphabet),
                    preperiod: as_text(preperiod),
                    period: as_text(period),
                }
            }
            GeneratorSpec::CassaigneSelmer { preperiod, period } => {
                SpecDocument::CassaigneSelmer {
                    preperiod: preperiod.clone(),
                    period: period.clone(),
                }
            }
            GeneratorSpec::Billiard { start, momentum } => SpecDocument::Billiard {
                start: render_ratios(start),
                momentum: render_ratios(momentum),
            },
            GeneratorSpec::QuasiSturmianFm {
                inner,
                block_b,
                block_c,
                block_d,
                shift,
            } => SpecDocument::QuasiSturmianFm {
                inner: Box::new(Self::from_generator(inner)?),
                block_b: block_b.clone(),
                block_c: block_c.clone(),
                block_d: block_d.clone(),
                shift: *shift,
            },
            GeneratorSpec::Colored {
                base,
                letter,
                colors,
            } => SpecDocument::Colored {
                letter: base.alphabet()?.glyph(*letter).to_string(),
                base: Box::new(Self::from_generator(base)?),
                colors: Box::new(Self::from_generator(colors)?),
            },
            GeneratorSpec::Projected { base, keep } => {
                let base_alphabet = base.alphabet()?;
                SpecDocument::Projected {
                    keep: GlyphText::of_word(
                        &FiniteWord::new(base_alphabet, keep.clone())
                            .expect("kept letters live in the base alphabet"),
                    ),
                    base: Box::new(Self::from_generator(base)?),
                }
            }
            GeneratorSpec::SubstitutionImage {
                base,
                substitution,
                shift,
            } => SpecDocument::SubstitutionImage {
                base: Box::new(Self::from_generator(base)?),
                codomain: GlyphText::of_alphabet(substitution.codomain()),
                images: substitution_images(substitution),
                shift: *shift,
            },
            GeneratorSpec::ThueMorseIterated { base, iterations } => {
                SpecDocument::ThueMorseIterated {
                    base: Box::new(Self::from_generator(base)?),
                    iterations: *iterations,
                }
            }
        })
    }
}

/// Self-describing result envelope: carries the tool identity, the full
/// input spec and its hash, and the run parameters, so a report can be
/// reproduced from the document alone.
#[derive(Debug, Serialize)]
pub struct ReportDocument<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub spec_sha256: String,
    pub spec: SpecDocument,
    pub prefix_length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturated: Option<bool>,
    pub elapsed_ms: u64,
    pub report: T,
}

impl<T: Serialize> ReportDocument<T> {
    pub fn new(
        spec: SpecDocument,
        prefix_length: usize,
        saturated: Option<bool>,
        elapsed_ms: u64,
        report: T,
    ) -> Self {
        ReportDocument {
            tool: "collapse-lab",
            version: env!("CARGO_PKG_VERSION"),
            spec_sha256: spec.sha256(),
            spec,
            prefix_length,
            saturated,
            elapsed_ms,
            report,
        }
    }
}
