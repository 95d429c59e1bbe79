//! Relatedness condition and Monte Carlo experiments.
//!
//! The condition compares the growth of optimal-alignment variety against
//! the letter law of a model. With `g` the limiting LCS ratio of related
//! sequences, it reads
//!
//! ```text
//! g log2(p_max) + (1 - g) log2(q q_bar) + min(g, 1 - g) log2(max(rho, 1)) + 2 h(g) < 0
//! ```
//!
//! where `p_max = max_a p(a)`, `q = 1 - min_a p(a)`,
//! `q_bar = 1 - min_{a,b} P(X = a | Y = b)`, `p0 = P(X = Y)` at a shared
//! ancestor position, `rho = p0 q_bar / (p_max q)` and `h` is the binary
//! entropy. When it holds, the vertical distance between extremal alignments
//! is `O(ln n)` with high probability.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::extremal_pair;
use crate::genmodel::{replicate_seed, GenerativeParams, PairGenerator};
use crate::lcs::lcs_length;
use crate::scalar::Scalar;
use crate::stats::{horizontal_distance, vertical_distance};

fn log2<T: Scalar>(v: T) -> T {
    v.log2()
}

/// `t log2 t`, with `0 log2 0 = 0`.
fn xlog2x<T: Scalar>(t: T) -> T {
    if t == T::zero() {
        T::zero()
    } else {
        t * log2(t)
    }
}

/// Binary entropy in bits.
pub fn binary_entropy<T: Scalar>(t: T) -> Result<T> {
    if !(t >= T::zero() && t <= T::one()) {
        return Err(Error::DomainError {
            name: "t",
            value: t.to_f64().unwrap_or(f64::NAN),
            domain: "[0, 1]",
        });
    }
    Ok(-xlog2x(t) - xlog2x(T::one() - t))
}

/// Letter-law quantities entering the relatedness condition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LetterLawSummary<T: Scalar> {
    /// `p(a)`, law of an X letter.
    pub marginal: Vec<T>,
    /// Row-major `J[a][b] = P(X = a, Y = b)` at a shared ancestor position.
    pub joint: Vec<T>,
    pub p_max: T,
    pub q: T,
    pub p0: T,
    pub q_bar: T,
    pub rho: T,
}

impl<T: Scalar> LetterLawSummary<T> {
    /// Derives every scalar from a `k x k` joint law.
    ///
    /// `q_bar` skips letters `b` with zero Y-marginal, where the conditional
    /// law is undefined.
    pub fn from_joint(joint: Vec<T>, k: usize) -> Result<Self> {
        if joint.len() != k * k || k < 2 {
            return Err(Error::InvalidArgument(format!(
                "joint law must be k x k with k >= 2, got {} entries for k = {k}",
                joint.len()
            )));
        }
        crate::genmodel::check_distribution("joint", &joint, k * k)
            .map_err(|e| Error::DegenerateLaw(e.to_string()))?;

        let marginal: Vec<T> = (0..k)
            .map(|a| (0..k).fold(T::zero(), |s, b| s + joint[a * k + b]))
            .collect();
        let y_marginal: Vec<T> = (0..k)
            .map(|b| (0..k).fold(T::zero(), |s, a| s + joint[a * k + b]))
            .collect();

        let p_max = marginal.iter().copied().fold(T::neg_infinity(), T::max);
        let p_min = marginal.iter().copied().fold(T::infinity(), T::min);
        let q = T::one() - p_min;
        let p0 = (0..k).fold(T::zero(), |s, a| s + joint[a * k + a]);

        let mut min_cond = T::infinity();
        for (b, &pb) in y_marginal.iter().enumerate() {
            if pb <= T::zero() {
                continue;
            }
            for a in 0..k {
                min_cond = min_cond.min(joint[a * k + b] / pb);
            }
        }
        let q_bar = T::one() - min_cond;

        if let Some(a) = marginal.iter().position(|&p| p <= T::zero()) {
            return Err(Error::DegenerateLaw(format!(
                "letter {a} has probability 0, so min_a p(a) = 0 and q = 1"
            )));
        }
        if p_max <= T::zero() {
            return Err(Error::DegenerateLaw("p_max = 0".into()));
        }
        if q <= T::zero() {
            return Err(Error::DegenerateLaw("q = 0".into()));
        }
        if q_bar <= T::zero() {
            return Err(Error::DegenerateLaw("q_bar = 0".into()));
        }
        let rho = p0 * q_bar / (p_max * q);

        Ok(LetterLawSummary {
            marginal,
            joint,
            p_max,
            q,
            p0,
            q_bar,
            rho,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.marginal.len()
    }
}

/// Joint law of `(X_i, Y_i)` descending from one ancestor letter:
/// `J[a][b] = sum_z P(Z = z) M[z][a] M[z][b]`.
pub fn joint_letter_law<T: Scalar>(params: &GenerativeParams<T>) -> Result<LetterLawSummary<T>> {
    let k = params.alphabet().len();
    let pi = params.ancestor_dist();
    let m = params.channel();
    let joint = (0..k * k)
        .map(|c| {
            let (a, b) = (c / k, c % k);
            (0..k).fold(T::zero(), |s, z| s + pi[z] * m[z * k + a] * m[z * k + b])
        })
        .collect();
    LetterLawSummary::from_joint(joint, k)
}

/// Where the `gamma_r` of a [`ConditionReport`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GammaSource {
    Given,
    /// Estimated from the same model; a plug-in estimate, not the limit.
    PluginEstimate {
        n: usize,
        reps: usize,
        std_dev: f64,
    },
}

/// Left-hand side of the relatedness condition, term by term.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport<T: Scalar> {
    pub gamma_r: T,
    pub gamma_source: GammaSource,
    /// `[g log2 p_max, (1-g) log2(q q_bar), min(g,1-g) log2(max(rho,1)), 2 h(g)]`
    pub terms: [T; 4],
    pub lhs: T,
    pub satisfied: bool,
    pub summary: LetterLawSummary<T>,
}

pub fn condition_lhs<T: Scalar>(
    summary: &LetterLawSummary<T>,
    gamma_r: T,
) -> Result<ConditionReport<T>> {
    if !(gamma_r > T::zero() && gamma_r <= T::one()) {
        return Err(Error::DomainError {
            name: "gamma_R",
            value: gamma_r.to_f64().unwrap_or(f64::NAN),
            domain: "(0, 1]",
        });
    }
    let g = gamma_r;
    let rest = T::one() - g;
    let two = T::lit(2.0);
    let s = summary;
    let terms = [
        g * log2(s.p_max),
        rest * log2(s.q * s.q_bar),
        rest.min(g) * log2(s.rho.max(T::one())),
        two * binary_entropy(g)?,
    ];
    let lhs = terms.iter().fold(T::zero(), |a, &b| a + b);
    Ok(ConditionReport {
        gamma_r,
        gamma_source: GammaSource::Given,
        terms,
        lhs,
        satisfied: lhs < T::zero(),
        summary: summary.clone(),
    })
}

/// Evaluates the condition with `gamma_R` estimated from `params` itself.
pub fn condition_plugin<T: Scalar>(
    params: &GenerativeParams<T>,
    n: usize,
    reps: usize,
    seed: u64,
) -> Result<ConditionReport<T>> {
    let summary = joint_letter_law(params)?;
    let est = estimate_gamma(&PairGenerator::Related(params.clone()), n, reps, seed)?;
    let gamma = T::from_f64(est.mean).expect("finite");
    let mut report = condition_lhs(&summary, gamma)?;
    report.gamma_source = GammaSource::PluginEstimate {
        n,
        reps,
        std_dev: est.std_dev,
    };
    Ok(report)
}

/// Monte Carlo estimate of the limiting LCS ratio.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaEstimate {
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation (0 for a single replicate).
    pub std_dev: f64,
    /// `L / n` per replicate, in replicate order.
    pub ratios: Vec<f64>,
}

/// Mean and spread of `L / n` over `reps` replicates; replicate `r` uses
/// [`replicate_seed`]`(seed, r)`.
pub fn estimate_gamma<T: Scalar>(
    generator: &PairGenerator<T>,
    n: usize,
    reps: usize,
    seed: u64,
) -> Result<GammaEstimate> {
    if n == 0 || reps == 0 {
        return Err(Error::InvalidArgument(
            "n and reps must be at least 1".into(),
        ));
    }
    let ratios = (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            let pair = generator.generate(n, replicate_seed(seed, r))?;
            Ok(lcs_length(pair.x.letters(), pair.y.letters())? as f64 / n as f64)
        })
        .collect::<Result<Vec<f64>>>()?;
    let mean = ratios.iter().sum::<f64>() / reps as f64;
    let std_dev = if reps > 1 {
        (ratios.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / (reps - 1) as f64).sqrt()
    } else {
        0.0
    };
    Ok(GammaEstimate {
        n,
        mean,
        std_dev,
        ratios,
    })
}

/// One generate-and-compare run of the scaling experiment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScalingRow {
    pub model: String,
    pub n: usize,
    pub rep: usize,
    pub seed: u64,
    pub lcs: usize,
    pub vertical: usize,
    pub horizontal: usize,
}

/// Order statistics of one quantity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quartiles {
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
}

impl Quartiles {
    /// Linear-interpolation quantiles of a non-empty sample.
    pub fn of(values: &[usize]) -> Self {
        let mut v: Vec<f64> = values.iter().map(|&x| x as f64).collect();
        v.sort_by(f64::total_cmp);
        let at = |p: f64| {
            let h = p * (v.len() - 1) as f64;
            let lo = h.floor() as usize;
            let hi = h.ceil() as usize;
            v[lo] + (h - lo as f64) * (v[hi] - v[lo])
        };
        Quartiles {
            q1: at(0.25),
            median: at(0.5),
            q3: at(0.75),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingAggregate {
    pub model: String,
    pub n: usize,
    pub reps: usize,
    pub vertical: Quartiles,
    pub horizontal: Quartiles,
    pub lcs: Quartiles,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingResult {
    /// Ordered by (model, n, rep).
    pub rows: Vec<ScalingRow>,
    pub aggregates: Vec<ScalingAggregate>,
}

impl ScalingResult {
    pub fn aggregate(&self, model: &str, n: usize) -> Option<&ScalingAggregate> {
        self.aggregates
            .iter()
            .find(|a| a.model == model && a.n == n)
    }

    /// `median V(n_to) / median V(n_from)` for one model.
    pub fn vertical_growth(&self, model: &str, n_from: usize, n_to: usize) -> Option<f64> {
        let from = self.aggregate(model, n_from)?.vertical.median;
        let to = self.aggregate(model, n_to)?.vertical.median;
        Some(to / from)
    }
}

/// Seed of replicate `rep` at length `n`; shared by all models so that
/// models are compared on paired streams.
pub fn scaling_seed(seed: u64, n: usize, rep: usize) -> u64 {
    replicate_seed(seed, ((n as u64) << 24) ^ rep as u64)
}

/// Growth of the extremal-alignment distances with sequence length.
///
/// For every model, length and replicate, draws a pair with
/// [`scaling_seed`] and records `L`, `V` and `H`.
pub fn scaling_experiment<T: Scalar>(
    models: &[(String, PairGenerator<T>)],
    n_list: &[usize],
    reps: usize,
    seed: u64,
) -> Result<ScalingResult> {
    if reps == 0 || n_list.is_empty() || n_list.contains(&0) {
        return Err(Error::InvalidArgument(
            "need reps >= 1 and a non-empty list of positive lengths".into(),
        ));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "n_list must be strictly ascending".into(),
        ));
    }

    let jobs: Vec<(usize, usize, usize)> = (0..models.len())
        .flat_map(|m| {
            n_list
                .iter()
                .flat_map(move |&n| (0..reps).map(move |r| (m, n, r)))
        })
        .collect();
    let rows = jobs
        .into_par_iter()
        .map(|(m, n, rep)| {
            let (name, generator) = &models[m];
            let seed = scaling_seed(seed, n, rep);
            let pair = generator.generate(n, seed)?;
            let ext = extremal_pair(pair.x.letters(), pair.y.letters())?;
            Ok(ScalingRow {
                model: name.clone(),
                n,
                rep,
                seed,
                lcs: ext.lcs,
                vertical: vertical_distance(&ext, pair.x.len()),
                horizontal: horizontal_distance(&ext, pair.y.len()),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let aggregates = rows
        .chunks(reps)
        .map(|chunk| {
            let pick = |f: fn(&ScalingRow) -> usize| chunk.iter().map(f).collect::<Vec<_>>();
            ScalingAggregate {
                model: chunk[0].model.clone(),
                n: chunk[0].n,
                reps,
                vertical: Quartiles::of(&pick(|r| r.vertical)),
                horizontal: Quartiles::of(&pick(|r| r.horizontal)),
                lcs: Quartiles::of(&pick(|r| r.lcs)),
            }
        })
        .collect();
    Ok(ScalingResult { rows, aggregates })
}
