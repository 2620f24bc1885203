use proptest::prelude::*;

use crate::generators::{GeneratorSpec, Substitution};
use crate::words::{k_binomial_equivalent, Alphabet, FiniteWord, Letter};

use super::*;

fn word(glyphs: &str, text: &str) -> FiniteWord {
    let alphabet = Alphabet::from_glyphs(glyphs).unwrap();
    FiniteWord::from_glyphs(&alphabet, text).unwrap()
}

fn fibonacci_prefix(len: usize) -> FiniteWord {
    GeneratorSpec::Morphic {
        substitution: Substitution::from_glyphs("01", "01", &["01", "0"]).unwrap(),
        seed: Letter::new(0),
    }
    .prefix(len)
    .unwrap()
}

fn thue_morse_prefix(len: usize) -> FiniteWord {
    GeneratorSpec::Morphic {
        substitution: Substitution::from_glyphs("01", "01", &["01", "10"]).unwrap(),
        seed: Letter::new(0),
    }
    .prefix(len)
    .unwrap()
}

fn tribonacci_prefix(len: usize) -> FiniteWord {
    GeneratorSpec::Morphic {
        substitution: Substitution::from_glyphs("123", "123", &["12", "13", "1"]).unwrap(),
        seed: Letter::new(0),
    }
    .prefix(len)
    .unwrap()
}

#[test]
fn factor_counts_of_known_words() {
    let fib = fibonacci_prefix(10_000);
    let p = subword_complexity(&fib, 30).unwrap();
    for (i, &count) in p.iter().enumerate() {
        assert_eq!(count, (i + 2) as u64, "n = {}", i + 1);
    }

    let constant = word("0", "0000000000");
    assert_eq!(subword_complexity(&constant, 5).unwrap(), vec![1; 5]);

    let tm = thue_morse_prefix(4096);
    let p = subword_complexity(&tm, 4).unwrap();
    assert_eq!(p, vec![2, 4, 6, 10]);
}

#[test]
fn abelian_counts_of_known_words() {
    let fib = fibonacci_prefix(10_000);
    assert_eq!(abelian_complexity(&fib, 30).unwrap(), vec![2; 30]);

    let constant = word("0", "0000000000");
    assert_eq!(abelian_complexity(&constant, 4).unwrap(), vec![1; 4]);

    let tm = thue_morse_prefix(4096);
    let rho = abelian_complexity(&tm, 2).unwrap();
    assert_eq!(rho[1], 3);
}

#[test]
fn binomial_counts_of_known_words() {
    let fib = fibonacci_prefix(10_000);
    let b2 = k_binomial_complexity(&fib, 2, 30).unwrap();
    for (i, &count) in b2.iter().enumerate() {
        assert_eq!(count, (i + 2) as u64, "n = {}", i + 1);
    }

    // Orders at or above the window length separate every factor.
    let tm = thue_morse_prefix(256);
    let p = subword_complexity(&tm, 5).unwrap();
    assert_eq!(k_binomial_complexity(&tm, 5, 5).unwrap(), p);
    assert_eq!(k_binomial_complexity(&tm, 7, 5).unwrap(), p);

    let b2 = k_binomial_complexity(&thue_morse_prefix(4096), 2, 4).unwrap();
    let p = subword_complexity(&thue_morse_prefix(4096), 4).unwrap();
    assert!(b2[3] < p[3], "order 2 must merge some length-4 factors");
}

#[test]
fn collision_witnesses_are_deterministic() {
    let tm = thue_morse_prefix(4096);
    let hits = find_collisions(&tm, 2, 4).unwrap();
    assert_eq!(hits.len(), 1);
    let (n, u, v) = &hits[0];
    assert_eq!((*n, u.to_string(), v.to_string()), (4, "0110".into(), "1001".into()));

    let fib = fibonacci_prefix(10_000);
    assert!(find_collisions(&fib, 2, 50).unwrap().is_empty());
}

#[test]
fn squared_block_images_collide_at_length_four() {
    let image = GeneratorSpec::SubstitutionImage {
        base: Box::new(GeneratorSpec::Morphic {
            substitution: Substitution::from_glyphs("12", "12", &["12", "1"]).unwrap(),
            seed: Letter::new(0),
        }),
        substitution: Substitution::from_glyphs("12", "12", &["1221", "2112"]).unwrap(),
        shift: 0,
    }
    .prefix(400)
    .unwrap();
    let hits = find_collisions(&image, 2, 4).unwrap();
    assert_eq!(hits.len(), 1);
    let (n, u, v) = &hits[0];
    assert_eq!((*n, u.to_string(), v.to_string()), (4, "1221".into(), "2112".into()));
}

#[test]
fn imbalance_of_small_words() {
    assert_eq!(imbalance(&word("12", "11212"), 5).unwrap().overall_c, 1);
    assert_eq!(imbalance(&word("12", "11122"), 5).unwrap().overall_c, 2);
    assert_eq!(imbalance(&word("0", "00000000"), 8).unwrap().overall_c, 0);
}

#[test]
fn mechanical_prefixes_are_one_balanced() {
    use num::BigRational;
    let alpha = BigRational::new(377.into(), 610.into());
    let rho = BigRational::new(1.into(), 7.into());
    let w = crate::generators::mechanical_prefix(&alpha, &rho, 2000).unwrap();
    assert!(imbalance(&w, 60).unwrap().overall_c <= 1);
}

#[test]
fn head_of_ones_then_twos_is_exactly_m_balanced() {
    for m in 1..=4usize {
        let text: String = "1".repeat(m) + &"2".repeat(40 - m);
        let w = word("12", &text);
        assert_eq!(imbalance(&w, 40).unwrap().overall_c, m as u64, "m = {m}");
    }
}

#[test]
fn balance_report_rows_are_addressable() {
    let report = imbalance(&word("12", "11212"), 3).unwrap();
    assert_eq!(report.spread(Letter::new(0), 1), Some(1));
    assert_eq!(report.spread(Letter::new(0), 4), None);
    assert_eq!(report.letters, vec!["1", "2"]);
    assert_eq!(report.prefix_length, 5);
}

#[test]
fn projection_imbalance_of_ternary_words() {
    let tribo = tribonacci_prefix(10_000);
    let reports = binary_projection_imbalance(&tribo, 50).unwrap();
    let one_three = &reports[&(Letter::new(0), Letter::new(2))];
    assert!(one_three.overall_c >= 2);
    let projected = tribo.project_pair(Letter::new(0), Letter::new(2)).unwrap();
    assert!(projected.factor_count(&word("13", "1111")).unwrap() > 0);
    assert!(projected.factor_count(&word("13", "3113")).unwrap() > 0);

    // A mechanical word is 1-balanced in both letters, and so is every
    // two-letter projection of a grid-crossing coding with generic
    // parameters.
    use num::BigRational;
    let ratio = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let billiard = GeneratorSpec::Billiard {
        start: vec![ratio(1, 2), ratio(1, 3), ratio(1, 7)],
        momentum: vec![ratio(6765, 4181), ratio(985, 696), ratio(1, 1)],
    }
    .prefix(2000)
    .unwrap();
    for report in binary_projection_imbalance(&billiard, 80).unwrap().values() {
        assert_eq!(report.overall_c, 1);
    }
}

#[test]
fn colored_word_projection_stays_balanced() {
    // Coloring the rarer letter of the Fibonacci word by the Fibonacci word
    // correlates colors with gaps: the i-th gap is 1 exactly when the i-th
    // color is 2, so dropping the 2s leaves 1s separated by two or three 0s.
    // The {0,1}-projection therefore contains 000, never 101, and stays
    // 1-balanced.
    let colored = GeneratorSpec::Colored {
        base: Box::new(GeneratorSpec::Morphic {
            substitution: Substitution::from_glyphs("0a", "0a", &["0a", "0"]).unwrap(),
            seed: Letter::new(0),
        }),
        letter: Letter::new(1),
        colors: Box::new(GeneratorSpec::Morphic {
            substitution: Substitution::from_glyphs("12", "12", &["12", "1"]).unwrap(),
            seed: Letter::new(0),
        }),
    }
    .prefix(10_000)
    .unwrap();
    let projected = colored.project_pair(Letter::new(0), Letter::new(1)).unwrap();
    assert!(projected.factor_count(&word("01", "000")).unwrap() > 0);
    assert_eq!(projected.factor_count(&word("01", "101")).unwrap(), 0);
    let reports = binary_projection_imbalance(&colored, 30).unwrap();
    assert_eq!(reports[&(Letter::new(0), Letter::new(1))].overall_c, 1);
}

#[test]
fn class_partitions() {
    let partition = classes(&word("12", "11212"), 1, 2).unwrap();
    let groups: Vec<Vec<String>> = partition
        .groups()
        .iter()
        .map(|g| g.iter().map(|w| w.to_string()).collect())
        .collect();
    assert_eq!(groups, vec![vec!["11".to_string()], vec!["12".into(), "21".into()]]);
    assert_eq!(partition.class_count(), 2);
    assert_eq!(partition.signatures().len(), 2);

    // Orders at or above the length put every factor in its own class.
    let fine = classes(&word("12", "11212"), 3, 2).unwrap();
    assert!(fine.groups().iter().all(|g| g.len() == 1));
    assert_eq!(fine.class_count(), 3);
}

#[test]
fn projected_tribonacci_classes_share_a_known_group() {
    let projected = tribonacci_prefix(10_000)
        .project_pair(Letter::new(0), Letter::new(1))
        .unwrap();
    let partition = classes(&projected, 2, 16).unwrap();
    let u = word("12", "2112112112112112");
    let v = word("12", "1212112112112121");
    let group = partition
        .groups()
        .iter()
        .find(|g| g.contains(&u))
        .expect("u must be a factor of the projection");
    assert!(group.contains(&v), "u and v must share an order-2 class");
}

#[test]
fn reconstruction_round_trips() {
    let w = word("abc", "aabaca");
    let family = ProjectionFamily::of_word(&w).unwrap();
    assert_eq!(
        family
            .projection(Letter::new(0), Letter::new(1))
            .unwrap()
            .to_string(),
        "aabaa"
    );
    assert_eq!(family.reconstruct().unwrap(), w);
    assert_eq!(reconstruct(&family).unwrap(), w);

    // Two letters: the single projection is the word itself.
    let binary = word("01", "0110");
    let family = ProjectionFamily::of_word(&binary).unwrap();
    assert_eq!(family.reconstruct().unwrap(), binary);
}

#[test]
fn explicit_family_reconstruction() {
    let alphabet = Alphabet::from_glyphs("abc").unwrap();
    let family = ProjectionFamily::new(
        alphabet,
        vec![
            ((Letter::new(0), Letter::new(1)), word("ab", "aabaa")),
            ((Letter::new(0), Letter::new(2)), word("ac", "aaaca")),
            ((Letter::new(1), Letter::new(2)), word("bc", "bc")),
        ],
    )
    .unwrap();
    assert_eq!(family.reconstruct().unwrap().to_string(), "aabaca");
}

#[test]
fn cyclic_family_has_no_preimage() {
    let alphabet = Alphabet::from_glyphs("abc").unwrap();
    let family = ProjectionFamily::new(
        alphabet.clone(),
        vec![
            ((Letter::new(0), Letter::new(1)), word("ab", "ab")),
            ((Letter::new(0), Letter::new(2)), word("ac", "ca")),
            ((Letter::new(1), Letter::new(2)), word("bc", "bc")),
        ],
    )
    .unwrap();
    assert!(matches!(
        family.reconstruct(),
        Err(Error::InconsistentFamily { .. })
    ));

    // The same conclusion by brute force: no word of length up to 3 has
    // these three projections.
    let mut stack = vec![Vec::<Letter>::new()];
    while let Some(candidate) = stack.pop() {
        if candidate.len() >= 2 {
            let w = FiniteWord::new(alphabet.clone(), candidate.clone()).unwrap();
            let candidate_family = ProjectionFamily::of_word(&w).unwrap();
            assert_ne!(candidate_family, family, "{w} would be a preimage");
        }
        if candidate.len() < 3 {
            for id in 0..3u8 {
                let mut longer = candidate.clone();
                longer.push(Letter::new(id));
                stack.push(longer);
            }
        }
    }
}

#[test]
fn malformed_families_are_rejected() {
    let alphabet = Alphabet::from_glyphs("abc").unwrap();

    // Count mismatch: 'a' occurs once against b but twice against c.
    let counts = ProjectionFamily::new(
        alphabet.clone(),
        vec![
            ((Letter::new(0), Letter::new(1)), word("ab", "ab")),
            ((Letter::new(0), Letter::new(2)), word("ac", "aa")),
            ((Letter::new(1), Letter::new(2)), word("bc", "bc")),
        ],
    );
    assert!(matches!(counts, Err(Error::InconsistentFamily { .. })));

    // Missing pair.
    let missing = ProjectionFamily::new(
        alphabet.clone(),
        vec![((Letter::new(0), Letter::new(1)), word("ab", "ab"))],
    );
    assert!(missing.is_err());

    // Projection over the wrong two letters.
    let wrong_alphabet = ProjectionFamily::new(
        alphabet.clone(),
        vec![
            ((Letter::new(0), Letter::new(1)), word("xy", "xy")),
            ((Letter::new(0), Letter::new(2)), word("ac", "ac")),
            ((Letter::new(1), Letter::new(2)), word("bc", "bc")),
        ],
    );
    assert!(wrong_alphabet.is_err());

    let too_small = ProjectionFamily::of_word(&word("0", "000"));
    assert!(matches!(too_small, Err(Error::AlphabetTooSmall)));
}

#[test]
fn reconstruction_is_exhaustive_on_short_ternary_words() {
    let alphabet = Alphabet::from_glyphs("123").unwrap();
    let mut stack = vec![Vec::<Letter>::new()];
    while let Some(candidate) = stack.pop() {
        let w = FiniteWord::new(alphabet.clone(), candidate.clone()).unwrap();
        let family = ProjectionFamily::of_word(&w).unwrap();
        assert_eq!(family.reconstruct().unwrap(), w);
        if candidate.len() < 5 {
            for id in 0..3u8 {
                let mut longer = candidate.clone();
                longer.push(Letter::new(id));
                stack.push(longer);
            }
        }
    }
}

#[test]
fn ternary_directive_words_have_arnoux_rauzy_complexity() {
    // Both ternary directive constructions should measure p(n) = 2n + 1;
    // anything else would mean the generator drifted.
    let product = crate::generators::cassaigne_selmer_prefix(&[], &[1, 2], 10_000).unwrap();
    let p = subword_complexity(&product, 30).unwrap();
    for (i, &count) in p.iter().enumerate() {
        assert_eq!(count, (2 * (i + 1) + 1) as u64, "n = {}", i + 1);
    }

    let tribo = tribonacci_prefix(10_000);
    let p = subword_complexity(&tribo, 30).unwrap();
    for (i, &count) in p.iter().enumerate() {
        assert_eq!(count, (2 * (i + 1) + 1) as u64, "n = {}", i + 1);
    }
}

#[test]
fn saturation_probe_outcomes() {
    let fib = GeneratorSpec::Morphic {
        substitution: Substitution::from_glyphs("01", "01", &["01", "0"]).unwrap(),
        seed: Letter::new(0),
    };
    let outcome = saturation_probe(&fib, 30, 1000, 1 << 20).unwrap();
    assert!(outcome.stable);
    assert!(outcome.length <= 1 << 20);

    let periodic = GeneratorSpec::EventuallyPeriodic {
        preperiod: word("01", "0"),
        period: word("01", "011"),
    };
    let outcome = saturation_probe(&periodic, 10, 64, 1 << 20).unwrap();
    assert!(outcome.stable);
    assert_eq!(outcome.length, 128);

    let starved = saturation_probe(&fib, 30, 30, 45).unwrap();
    assert!(!starved.stable);
    assert_eq!(starved.length, 45);

    assert!(matches!(
        saturation_probe(&fib, 30, 10, 100),
        Err(Error::ProbeTooShort { .. })
    ));
}

#[test]
fn window_bounds_are_checked() {
    let w = word("01", "0101");
    assert!(matches!(
        subword_complexity(&w, 5),
        Err(Error::WindowTooLong { .. })
    ));
    assert!(matches!(imbalance(&w, 5), Err(Error::WindowTooLong { .. })));
    assert!(matches!(classes(&w, 2, 5), Err(Error::WindowTooLong { .. })));
}

#[test]
fn report_rows_follow_known_values() {
    let fib = fibonacci_prefix(2000);
    let report = ComplexityReport::compute(&fib, &[2, 3], 20, true).unwrap();
    assert_eq!(report.orders, vec![2, 3]);
    assert_eq!(report.rows.len(), 20);
    for row in &report.rows {
        assert_eq!(row.factors, (row.n + 1) as u64);
        assert_eq!(row.abelian, 2);
        assert_eq!(row.binomial[0], (row.n + 1) as u64);
        assert_eq!(row.binomial[1], (row.n + 1) as u64);
    }
    assert!(report.collisions.is_empty());

    let tm = thue_morse_prefix(512);
    let report = ComplexityReport::compute(&tm, &[1, 2], 6, true).unwrap();
    assert!(report
        .collisions
        .iter()
        .any(|c| c.order == 2 && c.n == 4 && c.left.to_string() == "0110"));
}

fn brute_force_class_count(prefix: &FiniteWord, k: usize, n: usize) -> u64 {
    let factors = prefix.distinct_factors(n);
    let mut representatives: Vec<&FiniteWord> = Vec::new();
    for factor in &factors {
        if !representatives
            .iter()
            .any(|r| k_binomial_equivalent(r, factor, k).unwrap())
        {
            representatives.push(factor);
        }
    }
    representatives.len() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn grouped_counts_match_pairwise_comparison(
        ids in proptest::collection::vec(0u8..3, 1..40),
        k in 1usize..4,
    ) {
        let alphabet = Alphabet::from_glyphs("abc").unwrap();
        let letters: Vec<Letter> = ids.iter().map(|&i| Letter::new(i)).collect();
        let w = FiniteWord::new(alphabet, letters).unwrap();
        let n_max = w.len().min(8);
        let grouped = k_binomial_complexity(&w, k, n_max).unwrap();
        for n in 1..=n_max {
            prop_assert_eq!(grouped[n - 1], brute_force_class_count(&w, k, n));
        }
    }

    #[test]
    fn complexity_chain_is_monotone(
        ids in proptest::collection::vec(0u8..3, 1..60),
    ) {
        let alphabet = Alphabet::from_glyphs("abc").unwrap();
        let letters: Vec<Letter> = ids.iter().map(|&i| Letter::new(i)).collect();
        let w = FiniteWord::new(alphabet, letters).unwrap();
        let n_max = w.len().min(10);
        let report = ComplexityReport::compute(&w, &[1, 2, 3], n_max, false).unwrap();
        for row in &report.rows {
            prop_assert_eq!(row.abelian, row.binomial[0]);
            prop_assert!(row.binomial[0] <= row.binomial[1]);
            prop_assert!(row.binomial[1] <= row.binomial[2]);
            prop_assert!(row.binomial[2] <= row.factors);
            prop_assert!(row.factors <= (w.len() - row.n + 1) as u64);
        }
        for pair in report.rows.windows(2) {
            let d = 3u64;
            prop_assert!(pair[0].factors <= pair[1].factors * d);
        }
    }

    #[test]
    fn collisions_exist_exactly_when_classes_merge(
        ids in proptest::collection::vec(0u8..2, 1..50),
        k in 1usize..3,
    ) {
        let alphabet = Alphabet::from_glyphs("01").unwrap();
        let letters: Vec<Letter> = ids.iter().map(|&i| Letter::new(i)).collect();
        let w = FiniteWord::new(alphabet, letters).unwrap();
        let n_max = w.len().min(10);
        let hits = find_collisions(&w, k, n_max).unwrap();
        let b = k_binomial_complexity(&w, k, n_max).unwrap();
        let p = subword_complexity(&w, n_max).unwrap();
        let merged: Vec<usize> = (1..=n_max).filter(|&n| b[n - 1] < p[n - 1]).collect();
        let witnessed: Vec<usize> = hits.iter().map(|(n, _, _)| *n).collect();
        prop_assert_eq!(merged, witnessed);
        for (n, u, v) in &hits {
            prop_assert!(u < v);
            prop_assert_eq!(u.len(), *n);
            prop_assert!(k_binomial_equivalent(u, v, k).unwrap());
            prop_assert!(w.factor_count(u).unwrap() > 0);
            prop_assert!(w.factor_count(v).unwrap() > 0);
        }
    }

    #[test]
    fn random_words_reconstruct_from_projections(
        ids in proptest::collection::vec(0u8..4, 0..50),
    ) {
        let alphabet = Alphabet::from_glyphs("abcd").unwrap();
        let letters: Vec<Letter> = ids.iter().map(|&i| Letter::new(i)).collect();
        let w = FiniteWord::new(alphabet, letters).unwrap();
        let family = ProjectionFamily::of_word(&w).unwrap();
        prop_assert_eq!(family.reconstruct().unwrap(), w);
    }
}
