//! Named word specifications used by the scenarios. All constructors build
//! from statically known-good parameters; the billiard parameters were
//! chosen so that no two coordinates ever cross a face simultaneously.

use num::BigRational;

use crate::generators::{GeneratorSpec, Substitution};
use crate::words::{FiniteWord, Letter};

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn morphic(glyphs: &str, images: &[&str]) -> GeneratorSpec {
    GeneratorSpec::Morphic {
        substitution: Substitution::from_glyphs(glyphs, glyphs, images)
            .expect("static substitution"),
        seed: Letter::new(0),
    }
}

/// Fibonacci word over {0, 1}: fixed point of 0 -> 01, 1 -> 0.
pub fn fibonacci() -> GeneratorSpec {
    morphic("01", &["01", "0"])
}

/// Fibonacci word over {1, 2}.
pub fn fibonacci_12() -> GeneratorSpec {
    morphic("12", &["12", "1"])
}

/// Fibonacci word over {0, a}, the base of the coloring construction.
pub fn fibonacci_0a() -> GeneratorSpec {
    morphic("0a", &["0a", "0"])
}

/// Thue-Morse word: fixed point of 0 -> 01, 1 -> 10.
pub fn thue_morse() -> GeneratorSpec {
    morphic("01", &["01", "10"])
}

/// Tribonacci word over {1, 2, 3}: fixed point of 1 -> 12, 2 -> 13, 3 -> 1.
pub fn tribonacci() -> GeneratorSpec {
    morphic("123", &["12", "13", "1"])
}

/// The letter a of the Fibonacci word over {0, a}, colored by the Fibonacci
/// word over {1, 2}; output alphabet {0, 1, 2}.
pub fn coloring_fibonacci() -> GeneratorSpec {
    GeneratorSpec::Colored {
        base: Box::new(fibonacci_0a()),
        letter: Letter::new(1),
        colors: Box::new(fibonacci_12()),
    }
}

/// A 1-balanced ternary word: the ones of a mechanical word colored by the
/// constant-gap periodic word (23)^inf; output alphabet {0, 2, 3}.
pub fn balanced_ternary() -> GeneratorSpec {
    let glyphs = crate::words::Alphabet::from_glyphs("23").expect("static alphabet");
    GeneratorSpec::Colored {
        base: Box::new(GeneratorSpec::Mechanical {
            alpha: ratio(6765, 10946),
            rho: ratio(0, 1),
        }),
        letter: Letter::new(1),
        colors: Box::new(GeneratorSpec::EventuallyPeriodic {
            preperiod: FiniteWord::empty(glyphs.clone()),
            period: FiniteWord::from_glyphs(&glyphs, "23").expect("static word"),
        }),
    }
}

/// Block image of the Fibonacci word with images B.C and B.D, where B = {b}
/// and C, D split the remaining letters; alphabet size `d` in {3, 4}.
pub fn quasi_sturmian(d: usize) -> GeneratorSpec {
    assert!(d == 3 || d == 4, "supported dimensions are 3 and 4");
    let block_d: Vec<String> = if d == 3 {
        vec!["d".into()]
    } else {
        vec!["d".into(), "e".into()]
    };
    GeneratorSpec::QuasiSturmianFm {
        inner: Box::new(fibonacci()),
        block_b: vec!["b".into()],
        block_c: vec!["c".into()],
        block_d,
        shift: 0,
    }
}

/// The square-image control word: 1 -> 1221, 2 -> 2112 applied to the
/// Fibonacci word over {1, 2}. Its images are abelian-equivalent, so a
/// length-4 order-2 collision is expected.
pub fn square_control() -> GeneratorSpec {
    GeneratorSpec::SubstitutionImage {
        base: Box::new(fibonacci_12()),
        substitution: Substitution::from_glyphs("12", "12", &["1221", "2112"])
            .expect("static substitution"),
        shift: 0,
    }
}

/// Grid-crossing coding in dimension 2, 3, or 4 with tie-free rational
/// parameters.
pub fn billiard(dim: usize) -> GeneratorSpec {
    let (start, momentum) = match dim {
        2 => (
            vec![ratio(1, 3), ratio(1, 2)],
            vec![ratio(6765, 4181), ratio(1, 1)],
        ),
        3 => (
            vec![ratio(1, 2), ratio(1, 3), ratio(1, 7)],
            vec![ratio(6765, 4181), ratio(985, 696), ratio(1, 1)],
        ),
        4 => (
            vec![ratio(1, 2), ratio(1, 3), ratio(1, 7), ratio(1, 11)],
            vec![
                ratio(6765, 4181),
                ratio(985, 696),
                ratio(1, 1),
                ratio(1393, 984),
            ],
        ),
        other => panic!("supported dimensions are 2, 3 and 4, not {other}"),
    };
    GeneratorSpec::Billiard { start, momentum }
}

/// A start on the grid with equal momenta: both coordinates cross at t = 1,
/// so prefix generation must fail with a simultaneous-crossing diagnosis.
pub fn billiard_degenerate() -> GeneratorSpec {
    GeneratorSpec::Billiard {
        start: vec![ratio(0, 1), ratio(0, 1)],
        momentum: vec![ratio(1, 1), ratio(1, 1)],
    }
}

/// 1 1 2 2 2 ...: two letters then a constant tail, over {1, 2}.
pub fn double_head_constant_tail() -> GeneratorSpec {
    let glyphs = crate::words::Alphabet::from_glyphs("12").expect("static alphabet");
    GeneratorSpec::EventuallyPeriodic {
        preperiod: FiniteWord::from_glyphs(&glyphs, "11").expect("static word"),
        period: FiniteWord::from_glyphs(&glyphs, "2").expect("static word"),
    }
}

/// 1 2 3 3 3 ...: an ascending head then a constant tail, over {1, 2, 3}.
pub fn ascending_head_constant_tail() -> GeneratorSpec {
    let glyphs = crate::words::Alphabet::from_glyphs("123").expect("static alphabet");
    GeneratorSpec::EventuallyPeriodic {
        preperiod: FiniteWord::from_glyphs(&glyphs, "12").expect("static word"),
        period: FiniteWord::from_glyphs(&glyphs, "3").expect("static word"),
    }
}
