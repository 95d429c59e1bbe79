use std::fmt::Write;
use std::path::Path;

use serde::Serialize;

use homology::{run_case_study, CaseStudyTable, Verdict};

use crate::{output, write_file, CmdResult};

#[derive(Serialize)]
struct CsvCell<'a> {
    row: usize,
    col: usize,
    gene_x: &'a str,
    gene_y: &'a str,
    lcs: usize,
    vertical: usize,
    horizontal: usize,
    sum: usize,
    nonuniq_stretch: usize,
    uniq_points: usize,
    n: usize,
    m: usize,
    blast_max_score: u32,
    blast_total_score: u32,
    blast_query_coverage: u32,
    blast_e_value: &'a str,
    blast_max_ident: u32,
}

fn csv_cells(t: &CaseStudyTable) -> Vec<CsvCell<'_>> {
    let mut out = Vec::new();
    for (r, row) in t.reports.iter().enumerate() {
        for (c, rep) in row.iter().enumerate() {
            let b = &t.reference.cells[r][c].blast;
            out.push(CsvCell {
                row: r + 1,
                col: c + 1,
                gene_x: t.genes[r].id(),
                gene_y: t.genes[c].id(),
                lcs: rep.lcs,
                vertical: rep.vertical,
                horizontal: rep.horizontal,
                sum: rep.sum,
                nonuniq_stretch: rep.nonuniq_stretch,
                uniq_points: rep.uniq_points,
                n: rep.n,
                m: rep.m,
                blast_max_score: b.max_score,
                blast_total_score: b.total_score,
                blast_query_coverage: b.query_coverage,
                blast_e_value: &b.e_value,
                blast_max_ident: b.max_ident,
            });
        }
    }
    out
}

/// One block per gene, with the BLAST reference rows above the computed ones.
pub fn render_table(t: &CaseStudyTable) -> String {
    let k = t.genes.len();
    let mut s = String::new();
    for r in 0..k {
        let _ = write!(s, "{:<16}", format!("{} x", t.genes[r].id()));
        for c in 0..k {
            let _ = write!(s, "{:>14}", t.genes[c].id());
        }
        s.push('\n');
        let ref_row = &t.reference.cells[r];
        let rep_row = &t.reports[r];
        let mut line = |label: &str, cell: &dyn Fn(usize) -> String| {
            let _ = write!(s, "  {label:<14}");
            for c in 0..k {
                let _ = write!(s, "{:>14}", cell(c));
            }
            s.push('\n');
        };
        line("Max score", &|c| ref_row[c].blast.max_score.to_string());
        line("Total score", &|c| ref_row[c].blast.total_score.to_string());
        line("Query cover", &|c| {
            format!("{}%", ref_row[c].blast.query_coverage)
        });
        line("E value", &|c| ref_row[c].blast.e_value.clone());
        line("Max ident", &|c| format!("{}%", ref_row[c].blast.max_ident));
        line("LCS", &|c| rep_row[c].lcs.to_string());
        line("Vert+Hor=Sum", &|c| {
            let p = &rep_row[c];
            format!("{}+{}={}", p.vertical, p.horizontal, p.sum)
        });
        line("non-uniq st.", &|c| rep_row[c].nonuniq_stretch.to_string());
        line("uniq points", &|c| rep_row[c].uniq_points.to_string());
        s.push('\n');
    }
    s
}

pub fn render_check(t: &CaseStudyTable) -> (String, bool) {
    let lines = t.check();
    let mut s = String::new();
    for l in &lines {
        let _ = write!(
            s,
            "({},{}) {:<16} computed {:>5}  reference {:>5}  tol {}  {}{}",
            l.row,
            l.col,
            l.statistic,
            l.computed,
            l.reference,
            l.tolerance,
            l.verdict,
            if l.exact { "" } else { "  [tolerance set]" }
        );
        if l.verdict != Verdict::Pass {
            if let Some(note) = &l.note {
                let _ = write!(s, "  ({note})");
            }
        }
        s.push('\n');
    }
    let count = |v| lines.iter().filter(|l| l.verdict == v).count();
    let exact_fail = lines
        .iter()
        .filter(|l| l.is_unflagged_exact_failure())
        .count();
    let _ = writeln!(
        s,
        "\n{} PASS, {} FAIL, {} FLAGGED; {} unflagged failure(s) in the exact set",
        count(Verdict::Pass),
        count(Verdict::Fail),
        count(Verdict::Flagged),
        exact_fail
    );
    (s, exact_fail == 0)
}

pub fn run(csv: Option<&Path>, check: bool) -> CmdResult {
    let table = run_case_study()?;
    print!("{}", render_table(&table));
    if let Some(path) = csv {
        write_file(path, &output::to_csv(&csv_cells(&table))?)?;
    }
    if check {
        let (text, ok) = render_check(&table);
        print!("{text}");
        if !ok {
            return Ok(1);
        }
    }
    Ok(0)
}
