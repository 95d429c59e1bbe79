//! Highest and lowest optimal alignments.
//!
//! No two co-optimal cells of one rank increase strictly in both coordinates,
//! so picking the cell with the smallest `i` at every rank gives the
//! alignment lying above all others and the largest `i` gives the one below. The selection is checked
//! to be a valid optimal alignment before it is returned.
//!
//! [`enumerate_optimal_alignments`] and [`oracle_extremal`] work from scratch
//! on small inputs, without the DP tables, and serve as the reference the
//! fast path is tested against.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lcs::{CellBudget, CoOptimalCell, LcsTables};

/// Default cap on the number of alignments the enumerator materializes.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Largest `n * m` the enumerator accepts.
pub const ENUMERATION_CELL_BUDGET: CellBudget = CellBudget(4096);

/// Strictly increasing chain of 1-based match pairs `(i, j)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Alignment {
    pairs: Vec<(usize, usize)>,
}

impl Alignment {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        Alignment { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn transposed(&self) -> Alignment {
        Alignment::new(self.pairs.iter().map(|&(i, j)| (j, i)).collect())
    }

    /// Checks index bounds, strict monotonicity and that each pair is a match.
    /// Returns the offending rank (1-based) and a description on failure.
    pub fn check(&self, x: &[u8], y: &[u8]) -> std::result::Result<(), (usize, String)> {
        let mut prev = (0usize, 0usize);
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            let rank = k + 1;
            if i == 0 || j == 0 || i > x.len() || j > y.len() {
                return Err((rank, format!("pair ({i},{j}) out of bounds")));
            }
            if i <= prev.0 || j <= prev.1 {
                return Err((
                    rank,
                    format!("pair ({i},{j}) does not follow ({},{})", prev.0, prev.1),
                ));
            }
            if x[i - 1] != y[j - 1] {
                return Err((rank, format!("pair ({i},{j}) is not a match")));
            }
            prev = (i, j);
        }
        Ok(())
    }
}

impl From<Vec<(usize, usize)>> for Alignment {
    fn from(pairs: Vec<(usize, usize)>) -> Self {
        Alignment::new(pairs)
    }
}

/// The two extremal optimal alignments of a sequence pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalPair {
    pub highest: Alignment,
    pub lowest: Alignment,
    pub lcs: usize,
    /// In [`CoOptimalCell::order_key`] order.
    pub co_optimal: Vec<CoOptimalCell>,
}

impl ExtremalPair {
    /// The pair for the swapped inputs: transposing exchanges above and below.
    pub fn transposed(&self) -> ExtremalPair {
        let mut co_optimal: Vec<_> = self.co_optimal.iter().map(|c| c.transposed()).collect();
        co_optimal.sort_unstable_by_key(CoOptimalCell::order_key);
        ExtremalPair {
            highest: self.lowest.transposed(),
            lowest: self.highest.transposed(),
            lcs: self.lcs,
            co_optimal,
        }
    }

    /// True iff there is a single optimal alignment envelope.
    pub fn is_degenerate(&self) -> bool {
        self.highest == self.lowest
    }
}

/// Extremal alignments under the default cell budget.
pub fn extremal_pair(x: &[u8], y: &[u8]) -> Result<ExtremalPair> {
    extremal_pair_with_budget(x, y, CellBudget::default())
}

pub fn extremal_pair_with_budget(x: &[u8], y: &[u8], budget: CellBudget) -> Result<ExtremalPair> {
    let tables = LcsTables::compute(x, y, budget)?;
    extremal_from_tables(x, y, &tables)
}

/// Per-rank selection over the co-optimal cells of precomputed tables.
pub fn extremal_from_tables(x: &[u8], y: &[u8], tables: &LcsTables) -> Result<ExtremalPair> {
    let lcs = tables.lcs();
    let co_optimal = tables.co_optimal_cells(x, y);

    let mut highest = Vec::with_capacity(lcs);
    let mut lowest = Vec::with_capacity(lcs);
    // within a rank group the first cell has min i (then max j), the last max i (then min j)
    for group in co_optimal.chunk_by(|a, b| a.rank == b.rank) {
        let rank = group[0].rank;
        if rank != highest.len() + 1 {
            return Err(Error::ExtremalChainViolation {
                rank: highest.len() + 1,
                detail: "no co-optimal cell of this rank".into(),
            });
        }
        let first = group[0];
        let last = group[group.len() - 1];
        highest.push((first.i, first.j));
        lowest.push((last.i, last.j));
    }

    let pair = ExtremalPair {
        highest: Alignment::new(highest),
        lowest: Alignment::new(lowest),
        lcs,
        co_optimal,
    };
    validate_pair(&pair, x, y)?;
    Ok(pair)
}

fn validate_pair(pair: &ExtremalPair, x: &[u8], y: &[u8]) -> Result<()> {
    for (name, a) in [("highest", &pair.highest), ("lowest", &pair.lowest)] {
        if a.len() != pair.lcs {
            return Err(Error::ExtremalChainViolation {
                rank: a.len().min(pair.lcs) + 1,
                detail: format!("{name} has {} pairs, LCS is {}", a.len(), pair.lcs),
            });
        }
        a.check(x, y)
            .map_err(|(rank, detail)| Error::ExtremalChainViolation {
                rank,
                detail: format!("{name}: {detail}"),
            })?;
    }
    for (k, (h, l)) in pair
        .highest
        .pairs()
        .iter()
        .zip(pair.lowest.pairs())
        .enumerate()
    {
        if h.0 > l.0 || h.1 < l.1 {
            return Err(Error::ExtremalChainViolation {
                rank: k + 1,
                detail: format!("highest {h:?} is not above lowest {l:?}"),
            });
        }
    }
    Ok(())
}

/// Every optimal alignment of `x` and `y`, in lexicographic order of pair lists.
///
/// Works directly on the list of match cells, without DP tables. Intended for
/// inputs up to about 16 symbols each. When `L = 0` the result is the single
/// empty alignment.
pub fn enumerate_optimal_alignments(x: &[u8], y: &[u8], cap: usize) -> Result<Vec<Alignment>> {
    ENUMERATION_CELL_BUDGET.check(x.len(), y.len())?;

    let matches: Vec<(usize, usize)> = (1..=x.len())
        .flat_map(|i| (1..=y.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| x[i - 1] == y[j - 1])
        .collect();

    // longest chain starting at each match; matches are in lexicographic
    // order, so every strict successor comes later in the list
    let mut longest = vec![1usize; matches.len()];
    for a in (0..matches.len()).rev() {
        let (i, j) = matches[a];
        for b in a + 1..matches.len() {
            let (i2, j2) = matches[b];
            if i2 > i && j2 > j {
                longest[a] = longest[a].max(1 + longest[b]);
            }
        }
    }
    let lcs = longest.iter().copied().max().unwrap_or(0);

    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(lcs);
    extend_chains(&matches, &longest, (0, 0), lcs, &mut chain, &mut out, cap)?;
    Ok(out)
}

fn extend_chains(
    matches: &[(usize, usize)],
    longest: &[usize],
    after: (usize, usize),
    remaining: usize,
    chain: &mut Vec<(usize, usize)>,
    out: &mut Vec<Alignment>,
    cap: usize,
) -> Result<()> {
    if remaining == 0 {
        if out.len() == cap {
            return Err(Error::TooManyAlignments(cap));
        }
        out.push(Alignment::new(chain.clone()));
        return Ok(());
    }
    for (k, &(i, j)) in matches.iter().enumerate() {
        if i > after.0 && j > after.1 && longest[k] == remaining {
            chain.push((i, j));
            extend_chains(matches, longest, (i, j), remaining - 1, chain, out, cap)?;
            chain.pop();
        }
    }
    Ok(())
}

/// Extremal pair computed by exhaustive enumeration.
///
/// Highest maximizes the sequence `(j_1, ..., j_L)` lexicographically, lowest
/// minimizes it; ties are broken by the `i` sequence (smaller is higher). The co-optimal set is the union of all enumerated pairs.
pub fn oracle_extremal(x: &[u8], y: &[u8]) -> Result<ExtremalPair> {
    oracle_extremal_with_cap(x, y, DEFAULT_ENUMERATION_CAP)
}

pub fn oracle_extremal_with_cap(x: &[u8], y: &[u8], cap: usize) -> Result<ExtremalPair> {
    let all = enumerate_optimal_alignments(x, y, cap)?;
    // j sequences tie when two cells of one rank share a column; the one
    // further left is higher
    let key = |a: &Alignment| {
        let js: Vec<usize> = a.pairs().iter().map(|p| p.1).collect();
        let is: Vec<Reverse<usize>> = a.pairs().iter().map(|p| Reverse(p.0)).collect();
        (js, is)
    };
    let highest = all
        .iter()
        .max_by_key(|a| key(a))
        .cloned()
        .unwrap_or_default();
    let lowest = all
        .iter()
        .min_by_key(|a| key(a))
        .cloned()
        .unwrap_or_default();
    assert!(all.contains(&highest) && all.contains(&lowest));

    let union: BTreeSet<CoOptimalCell> = all
        .iter()
        .flat_map(|a| {
            a.pairs()
                .iter()
                .enumerate()
                .map(|(k, &(i, j))| CoOptimalCell { i, j, rank: k + 1 })
        })
        .collect();
    let mut co_optimal: Vec<_> = union.into_iter().collect();
    co_optimal.sort_unstable_by_key(CoOptimalCell::order_key);

    Ok(ExtremalPair {
        lcs: highest.len(),
        highest,
        lowest,
        co_optimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const PX: &[u8] = b"ATACCGT";
    const PY: &[u8] = b"CAACATG";

    fn al(p: &[(usize, usize)]) -> Alignment {
        Alignment::new(p.to_vec())
    }

    #[test]
    fn small_example() {
        let pair = extremal_pair(PX, PY).unwrap();
        assert_eq!(pair.lcs, 4);
        assert_eq!(pair.highest, al(&[(1, 2), (3, 3), (4, 4), (6, 7)]));
        assert_eq!(pair.lowest, al(&[(1, 2), (3, 3), (5, 4), (7, 6)]));
        assert_eq!(oracle_extremal(PX, PY).unwrap(), pair);
    }

    #[test]
    fn small_example_has_four_alignments() {
        let all = enumerate_optimal_alignments(PX, PY, 100).unwrap();
        assert_eq!(
            all,
            vec![
                al(&[(1, 2), (3, 3), (4, 4), (6, 7)]),
                al(&[(1, 2), (3, 3), (4, 4), (7, 6)]),
                al(&[(1, 2), (3, 3), (5, 4), (6, 7)]),
                al(&[(1, 2), (3, 3), (5, 4), (7, 6)]),
            ]
        );
    }

    #[test]
    fn degenerate_cases() {
        let diag = al(&[(1, 1), (2, 2), (3, 3), (4, 4)]);
        let pair = extremal_pair(b"ACGT", b"ACGT").unwrap();
        assert_eq!(
            (pair.highest.clone(), pair.lowest.clone()),
            (diag.clone(), diag.clone())
        );
        assert!(pair.is_degenerate());
        assert_eq!(oracle_extremal(b"ACGT", b"ACGT").unwrap().highest, diag);

        let pair = extremal_pair(b"AAAA", b"CCCC").unwrap();
        assert!(pair.highest.is_empty() && pair.lowest.is_empty());
        assert_eq!(pair.lcs, 0);
        assert_eq!(
            enumerate_optimal_alignments(b"AAAA", b"CCCC", 10).unwrap(),
            vec![Alignment::default()]
        );
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_optimal_alignments(b"AA", b"AA", 10).unwrap(),
            vec![al(&[(1, 1), (2, 2)])]
        );
        assert_eq!(
            enumerate_optimal_alignments(b"AB", b"BA", 10).unwrap(),
            vec![al(&[(1, 2)]), al(&[(2, 1)])]
        );
    }

    #[test]
    fn enumeration_cap_and_budget() {
        // AAAA vs AAAAAAAA: C(8,4) = 70 optimal alignments
        assert_eq!(
            enumerate_optimal_alignments(b"AAAA", b"AAAAAAAA", 70)
                .unwrap()
                .len(),
            70
        );
        assert_eq!(
            enumerate_optimal_alignments(b"AAAA", b"AAAAAAAA", 69).unwrap_err(),
            Error::TooManyAlignments(69)
        );
        let long = vec![b'A'; 100];
        assert!(matches!(
            enumerate_optimal_alignments(&long, &long, 10).unwrap_err(),
            Error::SizeLimitExceeded { .. }
        ));
    }

    #[test]
    fn repeated_column_tie() {
        // both A's of x match the single A of y at rank 1
        let pair = extremal_pair(b"AA", b"A").unwrap();
        assert_eq!(pair.highest, al(&[(1, 1)]));
        assert_eq!(pair.lowest, al(&[(2, 1)]));
        assert_eq!(oracle_extremal(b"AA", b"A").unwrap(), pair);

        let pair = extremal_pair(b"A", b"AA").unwrap();
        assert_eq!(pair.highest, al(&[(1, 2)]));
        assert_eq!(pair.lowest, al(&[(1, 1)]));
        assert_eq!(oracle_extremal(b"A", b"AA").unwrap(), pair);
    }

    #[test]
    fn check_reports_bad_chains() {
        assert!(al(&[(1, 2), (1, 3)]).check(PX, PY).is_err());
        assert!(al(&[(1, 1)]).check(PX, PY).is_err());
        assert!(al(&[(8, 1)]).check(PX, PY).is_err());
        assert!(al(&[(1, 2), (3, 3)]).check(PX, PY).is_ok());
    }

    fn seq(alpha: &'static str, max: usize) -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(prop::sample::select(alpha.as_bytes().to_vec()), 1..=max)
    }

    proptest! {
        #[test]
        fn envelope_holds(x in seq("AB", 9), y in seq("AB", 9)) {
            let pair = extremal_pair(&x, &y).unwrap();
            for a in enumerate_optimal_alignments(&x, &y, DEFAULT_ENUMERATION_CAP).unwrap() {
                for (k, &(i, j)) in a.pairs().iter().enumerate() {
                    let h = pair.highest.pairs()[k];
                    let l = pair.lowest.pairs()[k];
                    prop_assert!(h.1 >= j && j >= l.1);
                    prop_assert!(h.0 <= i && i <= l.0);
                }
            }
        }

        #[test]
        fn transposition(x in seq("ACGT", 40), y in seq("ACGT", 40)) {
            let xy = extremal_pair(&x, &y).unwrap();
            let yx = extremal_pair(&y, &x).unwrap();
            prop_assert_eq!(yx.highest, xy.lowest.transposed());
            prop_assert_eq!(yx.lowest, xy.highest.transposed());
            prop_assert_eq!(xy.transposed(), extremal_pair(&y, &x).unwrap());
        }

        #[test]
        fn unique_alignment_is_degenerate(x in seq("ACGT", 8), y in seq("ACGT", 8)) {
            let all = enumerate_optimal_alignments(&x, &y, DEFAULT_ENUMERATION_CAP).unwrap();
            let pair = extremal_pair(&x, &y).unwrap();
            if all.len() == 1 {
                prop_assert!(pair.is_degenerate());
            }
        }
    }
}
