//! Static SVG rendering of a region on a `(x, t)` grid.

use std::fmt::Write as _;

use mbs_core::Rational;
use num_traits::ToPrimitive;

const CELL: f64 = 14.0;
const MARGIN: f64 = 40.0;

#[derive(Debug, Clone)]
pub struct Cell {
    /// Grid indices, time first.
    pub i: usize,
    pub j: usize,
    pub in_region: bool,
    pub choice_point: bool,
    pub generated: bool,
}

#[derive(Debug, Clone)]
pub struct PlotData {
    pub title: String,
    pub t_lo: Rational,
    pub x_lo: Rational,
    pub step: Rational,
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Cell>,
    /// Splitting points inside the plotted box, as `(t, x)`.
    pub members: Vec<(Rational, Rational)>,
    pub x_label: String,
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

impl PlotData {
    fn px(&self, j: f64) -> f64 {
        MARGIN + j * CELL + CELL / 2.0
    }

    fn py(&self, i: f64) -> f64 {
        MARGIN + (self.rows as f64 - 1.0 - i) * CELL + CELL / 2.0
    }

    fn grid_coords(&self, t: &Rational, x: &Rational) -> (f64, f64) {
        (f(&((x - &self.x_lo) / &self.step)), f(&((t - &self.t_lo) / &self.step)))
    }
}

pub fn render_svg(data: &PlotData) -> String {
    let width = 2.0 * MARGIN + data.cols as f64 * CELL;
    let height = 2.0 * MARGIN + data.rows as f64 * CELL;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<title>{}</title>"#, escape(&data.title));
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##);

    let _ = writeln!(s, r#"<g id="region" stroke="none">"#);
    for c in data.cells.iter().filter(|c| c.in_region) {
        let _ = writeln!(
            s,
            r##"<rect x="{:.2}" y="{:.2}" width="{CELL}" height="{CELL}" fill="#c6dbef"/>"##,
            data.px(c.j as f64) - CELL / 2.0,
            data.py(c.i as f64) - CELL / 2.0
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r##"<g id="members" stroke="#000000" stroke-width="1.5">"##);
    for (t, x) in &data.members {
        let (gx, gt) = data.grid_coords(t, x);
        let (cx, cy) = (data.px(gx), data.py(gt));
        let r = CELL / 3.0;
        let _ = writeln!(
            s,
            r#"<path d="M {:.2} {:.2} L {:.2} {:.2} M {:.2} {:.2} L {:.2} {:.2}"/>"#,
            cx - r,
            cy - r,
            cx + r,
            cy + r,
            cx - r,
            cy + r,
            cx + r,
            cy - r
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="choice-points" fill="none" stroke-width="2">"#);
    for c in data.cells.iter().filter(|c| c.choice_point) {
        let colour = if c.generated { "#d62728" } else { "#ff7f0e" };
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" stroke="{colour}"/>"#,
            data.px(c.j as f64),
            data.py(c.i as f64),
            CELL / 2.0
        );
    }
    let _ = writeln!(s, "</g>");

    // axes along the lower and left edges of the grid
    let (x0, y0) = (MARGIN, height - MARGIN);
    let _ = writeln!(
        s,
        r##"<g id="axes" stroke="#444444"><line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}"/><line x1="{x0}" y1="{y0}" x2="{x0}" y2="{MARGIN}"/></g>"##,
        width - MARGIN
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">{}</text>"#,
        width - MARGIN,
        y0 + 16.0,
        escape(&data.x_label)
    );
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">t</text>"#, x0 - 16.0, MARGIN);
    let _ = writeln!(
        s,
        r#"<text x="{x0}" y="{:.2}" font-family="sans-serif" font-size="12">{}</text>"#,
        MARGIN - 16.0,
        escape(&data.title)
    );
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
