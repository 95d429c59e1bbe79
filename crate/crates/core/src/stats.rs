//! Homology statistics derived from an [`ExtremalPair`].
//!
//! Alignments are turned into right-continuous step curves on the integer
//! grid: the curve of an alignment over the X axis has value `j_k` from
//! `i_k` up to (not including) `i_{k+1}`, and 0 before the first match.

use serde::Serialize;

use crate::error::Result;
use crate::extremal::{extremal_pair_with_budget, Alignment, ExtremalPair};
use crate::lcs::CellBudget;
use crate::seqio::NucleotideSequence;

/// Piecewise-constant curve of an alignment, evaluated at `0..=len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepCurve {
    values: Vec<usize>,
}

impl StepCurve {
    /// `c(i)` = `j` of the last pair with `i_k <= i`, over an X axis of length `n`.
    pub fn vertical(alignment: &Alignment, n: usize) -> Self {
        Self::build(alignment.pairs().iter().copied(), n)
    }

    /// `r(j)` = `i` of the last pair with `j_k <= j`, over a Y axis of length `m`.
    pub fn horizontal(alignment: &Alignment, m: usize) -> Self {
        Self::build(alignment.pairs().iter().map(|&(i, j)| (j, i)), m)
    }

    fn build(points: impl Iterator<Item = (usize, usize)>, len: usize) -> Self {
        let mut values = vec![0; len + 1];
        for (at, value) in points {
            values[at] = value;
        }
        for t in 1..=len {
            values[t] = values[t].max(values[t - 1]);
        }
        StepCurve { values }
    }

    pub fn at(&self, t: usize) -> usize {
        self.values[t]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Largest pointwise gap `upper(t) - lower(t)`; panics if `lower` ever exceeds `upper`.
fn max_gap(upper: &StepCurve, lower: &StepCurve) -> usize {
    upper
        .values
        .iter()
        .zip(&lower.values)
        .enumerate()
        .map(|(t, (&u, &l))| {
            assert!(u >= l, "dominance violated at {t}: {u} < {l}");
            u - l
        })
        .max()
        .unwrap_or(0)
}

/// Maximal vertical distance between the extremal alignments over `0..=n`.
pub fn vertical_distance(pair: &ExtremalPair, n: usize) -> usize {
    max_gap(
        &StepCurve::vertical(&pair.highest, n),
        &StepCurve::vertical(&pair.lowest, n),
    )
}

/// Maximal horizontal distance over `0..=m`; the lowest alignment lies to the right.
pub fn horizontal_distance(pair: &ExtremalPair, m: usize) -> usize {
    max_gap(
        &StepCurve::horizontal(&pair.lowest, m),
        &StepCurve::horizontal(&pair.highest, m),
    )
}

/// Pairs shared by both extremal alignments, in increasing order.
pub fn uniqueness_pairs(pair: &ExtremalPair) -> Vec<(usize, usize)> {
    pair.highest
        .pairs()
        .iter()
        .zip(pair.lowest.pairs())
        .filter(|(h, l)| h == l)
        .map(|(h, _)| *h)
        .collect()
}

pub fn uniqueness_points(pair: &ExtremalPair) -> usize {
    uniqueness_pairs(pair).len()
}

/// Longest run of positions in `1..=len` containing none of `points`
/// (sorted ascending).
fn longest_gap(points: impl Iterator<Item = usize>, len: usize) -> usize {
    let mut prev = 0;
    let mut best = 0;
    for p in points.chain(std::iter::once(len + 1)) {
        best = best.max(p - prev - 1);
        prev = p;
    }
    best
}

/// Longest stretch of X positions without a uniqueness point.
pub fn non_uniqueness_stretch(pair: &ExtremalPair, n: usize) -> usize {
    longest_gap(uniqueness_pairs(pair).into_iter().map(|p| p.0), n)
}

/// Same as [`non_uniqueness_stretch`], measured along the Y axis.
pub fn non_uniqueness_stretch_y(pair: &ExtremalPair, m: usize) -> usize {
    longest_gap(uniqueness_pairs(pair).into_iter().map(|p| p.1), m)
}

/// X coordinate of the last position of the maximal non-uniqueness stretch
/// (the first one if there are ties). `None` when the stretch is empty.
pub fn stretch_end(pair: &ExtremalPair, n: usize) -> Option<usize> {
    let mut prev = 0;
    let mut best = (0, None);
    for p in uniqueness_pairs(pair)
        .into_iter()
        .map(|p| p.0)
        .chain(std::iter::once(n + 1))
    {
        let gap = p - prev - 1;
        if gap > best.0 {
            best = (gap, Some(p - 1));
        }
        prev = p;
    }
    best.1
}

/// Statistics of one sequence comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub id_x: String,
    pub id_y: String,
    pub lcs: usize,
    pub vertical: usize,
    pub horizontal: usize,
    pub sum: usize,
    pub nonuniq_stretch: usize,
    pub uniq_points: usize,
    pub n: usize,
    pub m: usize,
    /// Stretch measured on the Y axis; diagnostic only.
    pub nonuniq_stretch_y: usize,
    /// Number of co-optimal cells; diagnostic only.
    pub co_optimal_cells: usize,
}

impl HomologyReport {
    pub fn from_pair(
        id_x: impl Into<String>,
        id_y: impl Into<String>,
        n: usize,
        m: usize,
        pair: &ExtremalPair,
    ) -> Self {
        let vertical = vertical_distance(pair, n);
        let horizontal = horizontal_distance(pair, m);
        HomologyReport {
            id_x: id_x.into(),
            id_y: id_y.into(),
            lcs: pair.lcs,
            vertical,
            horizontal,
            sum: vertical + horizontal,
            nonuniq_stretch: non_uniqueness_stretch(pair, n),
            uniq_points: uniqueness_points(pair),
            n,
            m,
            nonuniq_stretch_y: non_uniqueness_stretch_y(pair, m),
            co_optimal_cells: pair.co_optimal.len(),
        }
    }
}

/// Report and extremal alignments of one comparison.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub report: HomologyReport,
    pub pair: ExtremalPair,
}

pub fn compare(x: &NucleotideSequence, y: &NucleotideSequence) -> Result<HomologyReport> {
    Ok(compare_detailed(x, y, CellBudget::default())?.report)
}

pub fn compare_detailed(
    x: &NucleotideSequence,
    y: &NucleotideSequence,
    budget: CellBudget,
) -> Result<Comparison> {
    let pair = extremal_pair_with_budget(x.letters(), y.letters(), budget)?;
    let report = HomologyReport::from_pair(x.id(), y.id(), x.len(), y.len(), &pair);
    Ok(Comparison { report, pair })
}
