use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use homology::{
    replicate_seed, ConditionReportF64, GammaSource, HomologyReport, PairGeneratorF64,
    ScalingResult,
};

use crate::Failure;

pub fn report_text(r: &HomologyReport) -> String {
    let rows: [(&str, String); 9] = [
        (
            "sequences",
            format!("{} ({} nt) vs {} ({} nt)", r.id_x, r.n, r.id_y, r.m),
        ),
        ("lcs", r.lcs.to_string()),
        ("vertical", r.vertical.to_string()),
        ("horizontal", r.horizontal.to_string()),
        ("sum", r.sum.to_string()),
        ("nonuniq_stretch", r.nonuniq_stretch.to_string()),
        ("nonuniq_stretch_y", r.nonuniq_stretch_y.to_string()),
        ("uniq_points", r.uniq_points.to_string()),
        ("co_optimal_cells", r.co_optimal_cells.to_string()),
    ];
    let mut s = String::new();
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<18} {v}");
    }
    s
}

#[derive(Serialize)]
struct ReportJson {
    lcs: usize,
    vertical: usize,
    horizontal: usize,
    sum: usize,
    nonuniq_stretch: usize,
    uniq_points: usize,
    n: usize,
    m: usize,
}

pub fn report_json(r: &HomologyReport) -> String {
    serde_json::to_string(&ReportJson {
        lcs: r.lcs,
        vertical: r.vertical,
        horizontal: r.horizontal,
        sum: r.sum,
        nonuniq_stretch: r.nonuniq_stretch,
        uniq_points: r.uniq_points,
        n: r.n,
        m: r.m,
    })
    .expect("plain data")
}

#[derive(Debug, Clone, Serialize)]
pub struct SimRow {
    pub model: String,
    pub rep: usize,
    pub seed: u64,
    pub n: usize,
    #[serde(rename = "L")]
    pub lcs: usize,
    #[serde(rename = "V")]
    pub vertical: usize,
    #[serde(rename = "H")]
    pub horizontal: usize,
    pub stretch: usize,
    pub uniq: usize,
}

pub fn simulate_rows(
    model: &str,
    gen: &PairGeneratorF64,
    n: usize,
    reps: usize,
    seed: u64,
) -> Result<Vec<SimRow>, Failure> {
    (0..reps)
        .into_par_iter()
        .map(|rep| {
            let seed = replicate_seed(seed, rep as u64);
            let pair = gen.generate(n, seed)?;
            let r = homology::compare(&pair.x, &pair.y)?;
            Ok(SimRow {
                model: model.to_owned(),
                rep,
                seed,
                n,
                lcs: r.lcs,
                vertical: r.vertical,
                horizontal: r.horizontal,
                stretch: r.nonuniq_stretch,
                uniq: r.uniq_points,
            })
        })
        .collect()
}

#[derive(Serialize)]
pub struct ScanRow<'a> {
    model: &'a str,
    n: usize,
    rep: usize,
    seed: u64,
    #[serde(rename = "L")]
    lcs: usize,
    #[serde(rename = "V")]
    vertical: usize,
    #[serde(rename = "H")]
    horizontal: usize,
}

pub fn scan_rows(result: &ScalingResult) -> Vec<ScanRow<'_>> {
    result
        .rows
        .iter()
        .map(|r| ScanRow {
            model: &r.model,
            n: r.n,
            rep: r.rep,
            seed: r.seed,
            lcs: r.lcs,
            vertical: r.vertical,
            horizontal: r.horizontal,
        })
        .collect()
}

pub fn to_csv<R: Serialize>(rows: &[R]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Failure::input(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

/// Quartile block per model and length, plus the growth ratio of the
/// median vertical distance between the smallest and largest length.
pub fn scan_summary(result: &ScalingResult, n_list: &[usize]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<16} {:>8} {:>5} {:>22} {:>22} {:>22}",
        "model", "n", "reps", "V q1/med/q3", "H q1/med/q3", "L q1/med/q3"
    );
    let q = |q: &homology::theory::Quartiles| format!("{:.1}/{:.1}/{:.1}", q.q1, q.median, q.q3);
    for a in &result.aggregates {
        let _ = writeln!(
            s,
            "{:<16} {:>8} {:>5} {:>22} {:>22} {:>22}",
            a.model,
            a.n,
            a.reps,
            q(&a.vertical),
            q(&a.horizontal),
            q(&a.lcs)
        );
    }
    if let (Some(&first), Some(&last)) = (n_list.first(), n_list.last()) {
        if first != last {
            let mut seen = Vec::new();
            for a in &result.aggregates {
                if seen.contains(&&a.model) {
                    continue;
                }
                seen.push(&a.model);
                if let Some(g) = result.vertical_growth(&a.model, first, last) {
                    let _ = writeln!(
                        s,
                        "{}: median V({last}) / median V({first}) = {g:.3}",
                        a.model
                    );
                }
            }
        }
    }
    s
}

pub fn condition_text(model: &str, r: &ConditionReportF64) -> String {
    let s = &r.summary;
    let mut out = String::new();
    let _ = writeln!(out, "model    {model}");
    let _ = writeln!(out, "p_max    {:.6}", s.p_max);
    let _ = writeln!(out, "q        {:.6}", s.q);
    let _ = writeln!(out, "p0       {:.6}", s.p0);
    let _ = writeln!(out, "q_bar    {:.6}", s.q_bar);
    let _ = writeln!(out, "rho      {:.6}", s.rho);
    match r.gamma_source {
        GammaSource::Given => {
            let _ = writeln!(out, "gamma_R  {:.6}", r.gamma_r);
        }
        GammaSource::PluginEstimate { n, reps, std_dev } => {
            let _ = writeln!(
                out,
                "gamma_R  {:.6} (plug-in estimate, n = {n}, reps = {reps}, sd = {std_dev:.6})",
                r.gamma_r
            );
        }
    }
    let names = [
        "g log2 p_max",
        "(1-g) log2(q q_bar)",
        "min(g,1-g) log2 max(rho,1)",
        "2 h(g)",
    ];
    for (name, t) in names.iter().zip(r.terms) {
        // h(1) and 0 * log2(1) come out as -0
        let t = t + 0.0;
        let _ = writeln!(out, "  {name:<28} {t:+.6}");
    }
    let _ = writeln!(out, "lhs      {:+.6}", r.lhs);
    let _ = writeln!(
        out,
        "{}",
        if r.satisfied {
            "SATISFIED"
        } else {
            "NOT SATISFIED"
        }
    );
    out
}
