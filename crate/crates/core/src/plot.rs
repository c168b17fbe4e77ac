//! Plot-ready projections of a report: two-column CSV extracts and a
//! self-contained static SVG line chart with the global extrema marked.
//!
//! CSV extraction copies the report's value tokens verbatim, so plotted
//! numbers are byte-identical to the report's (saturated values appear
//! as `inf`). The SVG draws one polyline through the finite points; a
//! saturated point has no finite ordinate and is left out of the line
//! and of the markers.

use std::fmt::Write as _;

use crate::measures::Measure;
use crate::report::ReportDoc;
use crate::series::ExtremumKind;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 74.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 44.0;
const MARGIN_BOTTOM: f64 = 52.0;

/// Two-column `t,value` CSV for one measure, tokens copied verbatim.
pub fn plot_csv(doc: &ReportDoc, measure: Measure) -> String {
    let mut out = String::from("t,value\n");
    for point in &doc.points {
        let _ = writeln!(out, "{},{}", point.t, point.token(measure));
    }
    out
}

/// Companion `t,S_max` CSV emitted alongside an entropy plot, so the
/// ceiling can be drawn on the same axes.
pub fn smax_companion_csv(doc: &ReportDoc) -> String {
    let mut out = String::from("t,S_max\n");
    for point in &doc.points {
        let _ = writeln!(out, "{},{}", point.t, point.token(Measure::SMax));
    }
    out
}

/// Static SVG line chart of one measure versus t, extrema circled.
pub fn plot_svg(doc: &ReportDoc, measure: Measure) -> String {
    let finite: Vec<(i64, f64)> = doc
        .points
        .iter()
        .map(|p| (p.t, p.numeric(measure)))
        .filter(|(_, v)| v.is_finite())
        .collect();

    let (t_min, t_max) = {
        let first = doc
            .points
            .first()
            .expect("reports carry at least one point");
        let last = doc.points.last().unwrap();
        if first.t == last.t {
            (first.t as f64 - 1.0, first.t as f64 + 1.0)
        } else {
            (first.t as f64, last.t as f64)
        }
    };
    let (v_min, v_max) = {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &(_, v) in &finite {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if !lo.is_finite() {
            (0.0, 1.0)
        } else if lo == hi {
            let pad = if lo == 0.0 { 0.5 } else { lo.abs() * 0.5 };
            (lo - pad, hi + pad)
        } else {
            (lo, hi)
        }
    };

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let x = |t: f64| MARGIN_LEFT + (t - t_min) / (t_max - t_min) * plot_w;
    let y = |v: f64| MARGIN_TOP + (1.0 - (v - v_min) / (v_max - v_min)) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\">"
    );
    let _ = writeln!(
        svg,
        "  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#ffffff\"/>"
    );
    let _ = writeln!(
        svg,
        "  <text x=\"{:.2}\" y=\"24\" font-size=\"16\" text-anchor=\"middle\">{}: {} vs t</text>",
        WIDTH / 2.0,
        escape_xml(&doc.question_id),
        escape_xml(measure.as_str())
    );

    // Axes with end labels.
    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;
    let _ = writeln!(
        svg,
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y0:.2}\" stroke=\"#333333\"/>"
    );
    let _ = writeln!(
        svg,
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{y1:.2}\" stroke=\"#333333\"/>"
    );
    let _ = writeln!(
        svg,
        "  <text x=\"{x0:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">{t_min}</text>",
        y0 + 18.0
    );
    let _ = writeln!(
        svg,
        "  <text x=\"{x1:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">{t_max}</text>",
        y0 + 18.0
    );
    let _ = writeln!(
        svg,
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"end\">{v_min:.4}</text>",
        x0 - 8.0,
        y0 + 4.0
    );
    let _ = writeln!(
        svg,
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"end\">{v_max:.4}</text>",
        x0 - 8.0,
        y1 + 4.0
    );
    let _ = writeln!(
        svg,
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">t (months)</text>",
        (x0 + x1) / 2.0,
        HEIGHT - 14.0
    );

    let mut line_points = String::new();
    for &(t, v) in &finite {
        let _ = write!(line_points, "{:.2},{:.2} ", x(t as f64), y(v));
    }
    let _ = writeln!(
        svg,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#336699\" stroke-width=\"1.5\"/>",
        line_points.trim_end()
    );

    for record in doc.extrema.iter().filter(|e| e.measure == measure) {
        let value = record.numeric();
        if !value.is_finite() {
            continue;
        }
        let fill = match record.kind {
            ExtremumKind::Min => "#cc3333",
            ExtremumKind::Max => "#2e8b57",
        };
        let _ = writeln!(
            svg,
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"{}\"><title>{} at t={}, value {}</title></circle>",
            x(record.t as f64),
            y(value),
            fill,
            record.kind.as_str(),
            record.t,
            escape_xml(&record.token)
        );
    }

    svg.push_str("</svg>\n");
    svg
}

fn escape_xml(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            c => out.push(c),
        }
    }
    out
}
