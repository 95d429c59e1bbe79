use homology::{
    generate_independent_pair, generate_related_pair, lcs_length, Alphabet, GenerativeParamsF64,
    PairGeneratorF64,
};

fn ratio(x: &[u8], y: &[u8]) -> f64 {
    lcs_length(x, y).unwrap() as f64 / x.len() as f64
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        (v[k / 2 - 1] + v[k / 2]) / 2.0
    }
}

fn default_related(n: usize, seed: u64) -> GenerativeParamsF64 {
    GenerativeParamsF64::symmetric(Alphabet::dna(), 0.85, 0.95, n, seed).unwrap()
}

#[test]
fn related_pairs_have_high_lcs_ratio() {
    let hits = (0..100u64)
        .filter(|&r| {
            let p = default_related(1000, homology::replicate_seed(3, r));
            let pair = generate_related_pair(&p).unwrap();
            ratio(pair.x.letters(), pair.y.letters()) > 0.75
        })
        .count();
    assert!(hits >= 95, "{hits}/100 replicates above 0.75");
}

#[test]
fn independent_pairs_bracket_chvatal_sankoff() {
    let dist = [0.25; 4];
    let hits = (0..100u64)
        .filter(|&r| {
            let pair = generate_independent_pair(
                &Alphabet::dna(),
                &dist,
                1000,
                homology::replicate_seed(5, r),
            )
            .unwrap();
            let g = ratio(pair.x.letters(), pair.y.letters());
            g > 0.55 && g < 0.75
        })
        .count();
    assert!(hits >= 95, "{hits}/100 replicates in (0.55, 0.75)");
}

#[test]
fn uniform_channel_gives_iid_sequences() {
    let uniform = vec![0.25; 16];
    let p = GenerativeParamsF64::new(Alphabet::dna(), vec![0.25; 4], uniform, 1.0, 100_000, 17)
        .unwrap();
    let pair = generate_related_pair(&p).unwrap();
    // X and Y independent: agreement rate is that of independent letters
    let agree = pair
        .x
        .letters()
        .iter()
        .zip(pair.y.letters())
        .filter(|(a, b)| a == b)
        .count();
    let rate = agree as f64 / 100_000.0;
    assert!((rate - 0.25).abs() < 0.01, "agreement {rate}");
}

#[test]
fn marginal_law_chi_square() {
    let p = default_related(100_000, 23);
    let pair = generate_related_pair(&p).unwrap();
    for seq in [&pair.x, &pair.y] {
        let mut counts = [0f64; 4];
        for &c in seq.letters() {
            counts[Alphabet::dna().index_of(c).unwrap()] += 1.0;
        }
        let expected = 25_000.0;
        let chi2: f64 = counts
            .iter()
            .map(|c| (c - expected).powi(2) / expected)
            .sum();
        // 3 degrees of freedom; 0.999 quantile is 16.27
        assert!(chi2 < 16.27 * 2.0, "chi2 = {chi2}, counts {counts:?}");
    }
}

#[test]
fn deletion_thinning() {
    for keep in [0.95, 0.7, 0.5] {
        let p = GenerativeParamsF64::symmetric(Alphabet::dna(), 0.85, keep, 100_000, 29).unwrap();
        let pair = generate_related_pair(&p).unwrap();
        let expected = 100_000.0 / keep;
        let used = pair.ancestor_len_used as f64;
        assert!(
            (used - expected).abs() / expected < 0.10,
            "keep {keep}: used {used}"
        );
        assert_eq!((pair.x.len(), pair.y.len()), (100_000, 100_000));
    }
}

#[test]
fn related_median_beats_independent() {
    let related = PairGeneratorF64::Related(default_related(1, 0));
    let independent = PairGeneratorF64::independent_like(&default_related(1, 0));
    let med = |g: &PairGeneratorF64| {
        median(
            (0..50u64)
                .map(|r| {
                    let pair = g.generate(1000, homology::replicate_seed(31, r)).unwrap();
                    ratio(pair.x.letters(), pair.y.letters())
                })
                .collect(),
        )
    };
    let (r, i) = (med(&related), med(&independent));
    assert!(r > i, "related median {r} vs independent {i}");
}

#[test]
fn different_seeds_give_different_pairs() {
    let pairs: Vec<_> = (0..20u64)
        .map(|s| generate_related_pair(&default_related(200, s)).unwrap())
        .collect();
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            assert_ne!(pairs[a].x.letters(), pairs[b].x.letters());
        }
    }
    let again = generate_related_pair(&default_related(200, 7)).unwrap();
    assert_eq!(again, pairs[7]);
}
