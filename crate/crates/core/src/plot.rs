//! Two-dimensional SVG rendering of an extremal pair.
//!
//! X positions run left to right, Y positions bottom to top. Each extremal
//! alignment is drawn as a polyline through its match points with a small
//! marker on every match; shared points get a larger filled marker.

use std::fmt::Write;

use crate::extremal::ExtremalPair;
use crate::stats::{stretch_end, uniqueness_pairs, StepCurve};

#[derive(Debug, Clone, PartialEq)]
pub struct PlotOptions {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    pub title: Option<String>,
    /// Per-match markers; they get noisy above a few thousand points.
    pub match_markers: bool,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            width: 640.0,
            height: 640.0,
            margin: 48.0,
            title: None,
            match_markers: true,
        }
    }
}

/// Geometry of a plot in canvas coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    pub n: usize,
    pub m: usize,
    pub highest: Vec<(f64, f64)>,
    pub lowest: Vec<(f64, f64)>,
    pub uniqueness: Vec<(f64, f64)>,
    pub stretch_marker: Option<(f64, f64)>,
    pub title: Option<String>,
    pub match_markers: bool,
}

impl PlotSpec {
    pub fn new(pair: &ExtremalPair, n: usize, m: usize, options: &PlotOptions) -> Self {
        let w = options.width - 2.0 * options.margin;
        let h = options.height - 2.0 * options.margin;
        let sx = w / n.max(1) as f64;
        let sy = h / m.max(1) as f64;
        let margin = options.margin;
        let bottom = options.height - margin;
        let map = move |(i, j): (usize, usize)| (margin + i as f64 * sx, bottom - j as f64 * sy);
        let stretch_marker = stretch_end(pair, n)
            .filter(|_| !pair.highest.is_empty())
            .map(|end| {
                let j = StepCurve::vertical(&pair.highest, n).at(end);
                map((end, j))
            });
        PlotSpec {
            width: options.width,
            height: options.height,
            margin,
            n,
            m,
            highest: pair.highest.pairs().iter().copied().map(map).collect(),
            lowest: pair.lowest.pairs().iter().copied().map(map).collect(),
            uniqueness: uniqueness_pairs(pair).into_iter().map(map).collect(),
            stretch_marker,
            title: options.title.clone(),
            match_markers: options.match_markers,
        }
    }

    pub fn to_svg(&self) -> String {
        let mut s = String::new();
        let (w, h, mg) = (self.width, self.height, self.margin);
        let bottom = h - mg;
        let right = w - mg;
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        if let Some(t) = &self.title {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="14">{}</text>"#,
                w / 2.0,
                mg / 2.0,
                escape(t)
            );
        }
        let _ = writeln!(
            s,
            r#"<g id="axes" stroke="black" stroke-width="1"><line x1="{mg:.2}" y1="{bottom:.2}" x2="{right:.2}" y2="{bottom:.2}"/><line x1="{mg:.2}" y1="{bottom:.2}" x2="{mg:.2}" y2="{mg:.2}"/></g>"#
        );
        let _ = writeln!(
            s,
            r#"<g font-family="sans-serif" font-size="11"><text x="{mg:.2}" y="{:.2}" text-anchor="middle">0</text><text x="{right:.2}" y="{:.2}" text-anchor="middle">{}</text><text x="{:.2}" y="{bottom:.2}" text-anchor="end">0</text><text x="{:.2}" y="{mg:.2}" text-anchor="end">{}</text><text x="{:.2}" y="{:.2}" text-anchor="middle">X</text><text x="{:.2}" y="{:.2}" text-anchor="middle">Y</text></g>"#,
            bottom + 16.0,
            bottom + 16.0,
            self.n,
            mg - 6.0,
            mg - 6.0,
            self.m,
            (mg + right) / 2.0,
            bottom + 32.0,
            mg - 28.0,
            (mg + bottom) / 2.0,
        );
        for (id, pts, color, dash) in [
            ("highest", &self.highest, "#d62728", ""),
            (
                "lowest",
                &self.lowest,
                "#1f77b4",
                r#" stroke-dasharray="4 2""#,
            ),
        ] {
            if pts.is_empty() {
                continue;
            }
            let _ = writeln!(
                s,
                r#"<polyline id="{id}" fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{}"/>"#,
                points(pts)
            );
            if self.match_markers {
                let _ = write!(s, r#"<g id="{id}-matches" fill="none" stroke="{color}">"#);
                for (x, y) in pts.iter() {
                    let _ = write!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="1.5"/>"#);
                }
                let _ = writeln!(s, "</g>");
            }
        }
        if !self.uniqueness.is_empty() {
            let _ = write!(s, r#"<g id="uniqueness" fill="black">"#);
            for (x, y) in &self.uniqueness {
                let _ = write!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="2.50"/>"#);
            }
            let _ = writeln!(s, "</g>");
        }
        if let Some((x, y)) = self.stretch_marker {
            let _ = writeln!(
                s,
                r#"<text id="stretch-end" x="{x:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="18">*</text>"#,
                y - 4.0
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn points(pts: &[(f64, f64)]) -> String {
    let mut out = String::new();
    for (k, (x, y)) in pts.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{x:.2},{y:.2}");
    }
    out
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Standalone SVG document for `pair` on an `n` x `m` grid.
pub fn render_svg(pair: &ExtremalPair, n: usize, m: usize, options: &PlotOptions) -> String {
    PlotSpec::new(pair, n, m, options).to_svg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::extremal_pair;

    #[test]
    fn identical_sequences_coincide() {
        let x = b"ACGTACGT";
        let pair = extremal_pair(x, x).unwrap();
        let spec = PlotSpec::new(&pair, 8, 8, &PlotOptions::default());
        assert_eq!(spec.highest, spec.lowest);
        assert_eq!(spec.uniqueness.len(), 8);
        for (a, b) in spec.highest.iter().zip(spec.highest.iter().skip(1)) {
            assert!(b.0 > a.0 && b.1 < a.1);
        }
        assert!(spec.stretch_marker.is_none());
    }

    #[test]
    fn example_diverges_after_third_column() {
        let pair = extremal_pair(b"ATACCGT", b"CAACATG").unwrap();
        let spec = PlotSpec::new(&pair, 7, 7, &PlotOptions::default());
        assert_eq!(&spec.highest[..2], &spec.lowest[..2]);
        assert!(spec.highest[2..]
            .iter()
            .zip(&spec.lowest[2..])
            .all(|(h, l)| h != l));
        assert_eq!(spec.uniqueness.len(), 2);
        let svg = render_svg(&pair, 7, 7, &PlotOptions::default());
        assert!(svg.contains(r#"id="highest""#) && svg.contains(r#"id="lowest""#));
        assert!(svg.contains(r#"id="stretch-end""#));
    }

    #[test]
    fn empty_alignment_draws_axes_only() {
        let pair = extremal_pair(b"AAAA", b"CC").unwrap();
        let svg = render_svg(&pair, 4, 2, &PlotOptions::default());
        assert!(svg.contains(r#"id="axes""#));
        assert!(!svg.contains("polyline"));
        assert!(!svg.contains("stretch-end"));
    }

    #[test]
    fn coordinates_inside_canvas_and_deterministic() {
        let pair = extremal_pair(b"GATTACAGATTACA", b"TAGACATTAGCA").unwrap();
        let opts = PlotOptions {
            title: Some("a<b".into()),
            ..Default::default()
        };
        let spec = PlotSpec::new(&pair, 14, 12, &opts);
        for &(x, y) in spec.highest.iter().chain(&spec.lowest) {
            assert!((0.0..=opts.width).contains(&x) && (0.0..=opts.height).contains(&y));
        }
        let a = render_svg(&pair, 14, 12, &opts);
        assert_eq!(a, render_svg(&pair, 14, 12, &opts));
        assert!(a.contains("a&lt;b"));
    }
}
