//! Fast paths against exhaustive enumeration of optimal alignments.

use std::collections::BTreeSet;

use homology::stats::{
    horizontal_distance, non_uniqueness_stretch, uniqueness_pairs, vertical_distance, StepCurve,
};
use homology::{
    co_optimal_cells, enumerate_optimal_alignments, extremal_pair, oracle_extremal, Alignment,
};
use proptest::prelude::*;

fn seq(alphabet: &'static [u8]) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(prop::sample::select(alphabet), 1..=10)
}

fn pair() -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    prop_oneof![(seq(b"AC"), seq(b"AC")), (seq(b"ACGT"), seq(b"ACGT"))]
}

/// Pairs used by every optimal alignment.
fn common_to_all(all: &[Alignment]) -> Vec<(usize, usize)> {
    let mut common: BTreeSet<(usize, usize)> = all[0].pairs().iter().copied().collect();
    for a in &all[1..] {
        let s: BTreeSet<_> = a.pairs().iter().copied().collect();
        common = &common & &s;
    }
    common.into_iter().collect()
}

fn spread(curves: &[StepCurve], len: usize) -> usize {
    (0..=len)
        .map(|t| {
            let v = curves.iter().map(|c| c.at(t));
            v.clone().max().unwrap() - v.min().unwrap()
        })
        .max()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn extremal_matches_oracle((x, y) in pair()) {
        let fast = extremal_pair(&x, &y).unwrap();
        let slow = oracle_extremal(&x, &y).unwrap();
        prop_assert_eq!(&fast, &slow);
        prop_assert_eq!(co_optimal_cells(&x, &y).unwrap(), slow.co_optimal);
    }

    #[test]
    fn statistics_match_brute_force((x, y) in pair()) {
        let (n, m) = (x.len(), y.len());
        let all = enumerate_optimal_alignments(&x, &y, 1_000_000).unwrap();
        let pair = extremal_pair(&x, &y).unwrap();

        let common = common_to_all(&all);
        prop_assert_eq!(uniqueness_pairs(&pair), common.clone());

        let vcurves: Vec<_> = all.iter().map(|a| StepCurve::vertical(a, n)).collect();
        let hcurves: Vec<_> = all.iter().map(|a| StepCurve::horizontal(a, m)).collect();
        prop_assert_eq!(vertical_distance(&pair, n), spread(&vcurves, n));
        prop_assert_eq!(horizontal_distance(&pair, m), spread(&hcurves, m));

        // longest run of X positions not occupied by a common pair
        let occupied: BTreeSet<usize> = common.iter().map(|p| p.0).collect();
        let mut best = 0;
        let mut run = 0;
        for i in 1..=n {
            run = if occupied.contains(&i) { 0 } else { run + 1 };
            best = best.max(run);
        }
        prop_assert_eq!(non_uniqueness_stretch(&pair, n), best);
    }
}
