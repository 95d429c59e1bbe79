use homology::theory::scaling_seed;
use homology::{
    estimate_gamma, scaling_experiment, Alphabet, GenerativeParamsF64, PairGeneratorF64,
};

fn models() -> Vec<(String, PairGeneratorF64)> {
    let related = GenerativeParamsF64::symmetric(Alphabet::dna(), 0.85, 0.95, 1, 0).unwrap();
    vec![
        ("related".into(), PairGeneratorF64::Related(related.clone())),
        (
            "independent".into(),
            PairGeneratorF64::independent_like(&related),
        ),
    ]
}

#[test]
fn rows_are_ordered_and_deterministic() {
    let a = scaling_experiment(&models(), &[50, 100], 4, 9).unwrap();
    let b = scaling_experiment(&models(), &[50, 100], 4, 9).unwrap();
    assert_eq!(a, b);
    let keys: Vec<_> = a
        .rows
        .iter()
        .map(|r| (r.model.as_str(), r.n, r.rep))
        .collect();
    let mut want = Vec::new();
    for m in ["related", "independent"] {
        for n in [50, 100] {
            for rep in 0..4 {
                want.push((m, n, rep));
            }
        }
    }
    assert_eq!(keys, want);
    for r in &a.rows {
        assert_eq!(r.seed, scaling_seed(9, r.n, r.rep));
    }
    assert_eq!(a.aggregates.len(), 4);
}

#[test]
fn single_length_has_no_ratio() {
    let res = scaling_experiment(&models(), &[80], 3, 1).unwrap();
    assert_eq!(res.aggregates.len(), 2);
    assert!(res.vertical_growth("related", 80, 160).is_none());
}

#[test]
fn related_grows_slower_than_independent() {
    let res = scaling_experiment(&models(), &[250, 2000], 30, 1).unwrap();
    let r = res.vertical_growth("related", 250, 2000).unwrap();
    let i = res.vertical_growth("independent", 250, 2000).unwrap();
    assert!(r < i, "related {r} vs independent {i}");
}

#[test]
fn gamma_estimates() {
    let indep = PairGeneratorF64::Independent {
        alphabet: Alphabet::dna(),
        dist: vec![0.25; 4],
    };
    let identity = GenerativeParamsF64::symmetric(Alphabet::dna(), 1.0, 0.9, 1, 0).unwrap();
    let a = estimate_gamma(&indep, 1000, 20, 2).unwrap();
    let b = estimate_gamma(&PairGeneratorF64::Related(identity), 1000, 20, 2).unwrap();
    assert!(a.mean > 0.60 && a.mean < 0.70, "{}", a.mean);
    assert!(b.mean > a.mean);
    assert_eq!(a, estimate_gamma(&indep, 1000, 20, 2).unwrap());
}
