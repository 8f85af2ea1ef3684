//! Minimal deterministic SVG line charts.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::sweep::{MeasureColumn, SweepRow};
use crate::error::{Error, Result};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 190.0;
const TOP: f64 = 44.0;
const BOTTOM: f64 = 60.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

#[derive(Debug, Clone, Default)]
pub struct ChartStyle {
    pub title: String,
    pub x_label: String,
    /// Vertical rules at these parameter values, with labels.
    pub thresholds: Vec<(f64, String)>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders one polyline per column in `y_columns`.
pub fn render_svg(rows: &[SweepRow], y_columns: &[MeasureColumn], style: &ChartStyle) -> Result<String> {
    let first = rows.first().ok_or(Error::EmptyRows)?;
    let series: Vec<(MeasureColumn, Vec<(f64, f64)>)> = y_columns
        .iter()
        .map(|&c| {
            let pts = rows
                .iter()
                .map(|r| {
                    r.get(c).map(|v| (r.parameter, v)).ok_or(Error::InvalidParameter {
                        name: "y_columns",
                        value: f64::NAN,
                        range: "columns present in the sweep",
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((c, pts))
        })
        .collect::<Result<_>>()?;

    let x_min = first.parameter;
    let x_max = rows.last().map(|r| r.parameter).unwrap_or(x_min);
    let x_span = if x_max > x_min { x_max - x_min } else { 1.0 };
    let data_min = series.iter().flat_map(|(_, p)| p.iter().map(|q| q.1)).fold(0.0_f64, f64::min);
    let data_max = series.iter().flat_map(|(_, p)| p.iter().map(|q| q.1)).fold(1.0_f64, f64::max);
    let y_min = (data_min * 4.0).floor() / 4.0;
    let y_max = (data_max * 4.0).ceil() / 4.0;
    let y_span = y_max - y_min;

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x_min) / x_span * plot_w;
    let sy = |y: f64| TOP + (y_max - y) / y_span * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        LEFT + plot_w / 2.0,
        escape(&style.title)
    );

    // Grid lines and tick labels.
    for k in 0..=4 {
        let fx = x_min + x_span * k as f64 / 4.0;
        let fy = y_min + y_span * k as f64 / 4.0;
        let _ = writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{TOP:.2}" x2="{x:.2}" y2="{:.2}" stroke="#e0e0e0"/>"##,
            TOP + plot_h,
            x = sx(fx)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{:.2}</text>"#,
            sx(fx),
            TOP + plot_h + 18.0,
            fx
        );
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#e0e0e0"/>"##,
            LEFT + plot_w,
            y = sy(fy)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{:.2}</text>"#,
            LEFT - 8.0,
            sy(fy) + 4.0,
            fy
        );
    }
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT:.2}" y="{TOP:.2}" width="{plot_w:.2}" height="{plot_h:.2}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 18.0,
        escape(&style.x_label)
    );
    let _ = writeln!(
        s,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">value</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );

    for (x, label) in &style.thresholds {
        if *x < x_min || *x > x_max {
            continue;
        }
        let _ = writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{TOP:.2}" x2="{x:.2}" y2="{:.2}" stroke="#555555" stroke-dasharray="5,4"/>"##,
            TOP + plot_h,
            x = sx(*x)
        );
        let _ = writeln!(
            s,
            r##"<text x="{:.2}" y="{:.2}" font-size="10" fill="#555555">{}</text>"##,
            sx(*x) + 3.0,
            TOP + 12.0,
            escape(label)
        );
    }

    for (k, (column, pts)) in series.iter().enumerate() {
        let colour = PALETTE[k % PALETTE.len()];
        let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{colour}" stroke-width="2" points="{}"/>"#,
            coords.join(" ")
        );
        let ly = TOP + 16.0 + 20.0 * k as f64;
        let lx = LEFT + plot_w + 16.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{colour}" stroke-width="2"/>"#,
            lx + 24.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 30.0,
            ly + 4.0,
            column.name()
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Writes a chart with default labelling.
pub fn emit_svg(rows: &[SweepRow], path: impl AsRef<Path>, y_columns: &[MeasureColumn]) -> Result<()> {
    let style = ChartStyle {
        title: rows.first().map(|r| format!("{} ({} basis)", r.family, r.basis)).unwrap_or_default(),
        x_label: "p".into(),
        thresholds: Vec::new(),
    };
    emit_svg_with(rows, path, y_columns, &style)
}

pub fn emit_svg_with(
    rows: &[SweepRow],
    path: impl AsRef<Path>,
    y_columns: &[MeasureColumn],
    style: &ChartStyle,
) -> Result<()> {
    let path = path.as_ref();
    let text = render_svg(rows, y_columns, style)?;
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> Vec<SweepRow> {
        (0..3)
            .map(|i| {
                let p = i as f64 / 2.0;
                SweepRow {
                    parameter: p,
                    family: "demo".into(),
                    basis: "computational".into(),
                    values: vec![(MeasureColumn::CL1, p), (MeasureColumn::Concurrence, 1.0 - p)],
                }
            })
            .collect()
    }

    #[test]
    fn one_polyline_per_column() {
        let style = ChartStyle {
            title: "a < b".into(),
            x_label: "p".into(),
            thresholds: vec![(0.5, "half".into())],
        };
        let svg = render_svg(&rows(), &[MeasureColumn::CL1, MeasureColumn::Concurrence], &style).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.contains("a &lt; b"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn missing_column_is_an_error() {
        assert!(render_svg(&rows(), &[MeasureColumn::ChshM], &ChartStyle::default()).is_err());
        assert!(matches!(
            render_svg(&[], &[MeasureColumn::CL1], &ChartStyle::default()),
            Err(Error::EmptyRows)
        ));
    }
}
