use std::fmt::Write as _;
use std::io;

use super::{PayoffRegion, PlanarPoint};
use crate::rational::to_f64;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 64.0;

/// Formats with six significant digits, trimming trailing zeros.
fn sig6(value: f64) -> String {
    if value == 0.0 || !value.is_finite() {
        return "0".to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let rounded = if magnitude > 5 {
        let factor = 10f64.powi(magnitude - 5);
        (value / factor).round() * factor
    } else {
        value
    };
    let mut s = format!("{rounded:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn fit(points: &[PlanarPoint]) -> Self {
        let xs: Vec<f64> = points.iter().map(|p| to_f64(&p.x)).collect();
        let ys: Vec<f64> = points.iter().map(|p| to_f64(&p.y)).collect();
        let (x_min, x_max) = padded(&xs);
        let (y_min, y_max) = padded(&ys);
        Self { x_min, x_max, y_min, y_max }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x_min) / (self.x_max - self.x_min) * (WIDTH - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - MARGIN - (y - self.y_min) / (self.y_max - self.y_min) * (HEIGHT - 2.0 * MARGIN)
    }

    fn project(&self, p: &PlanarPoint) -> (String, String) {
        (sig6(self.px(to_f64(&p.x))), sig6(self.py(to_f64(&p.y))))
    }
}

fn padded(values: &[f64]) -> (f64, f64) {
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !lo.is_finite() || !hi.is_finite() {
        return (-1.0, 1.0);
    }
    let span = hi - lo;
    if span == 0.0 {
        return (lo - 1.0, hi + 1.0);
    }
    (lo - 0.1 * span, hi + 0.1 * span)
}

/// SVG plot of the vertex images, their hull and the Pareto points.
pub fn render_svg(region: &PayoffRegion) -> String {
    let frame = Frame::fit(&region.vertices);
    let mut out = String::new();
    let w = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };

    w(&mut out, format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    ));
    w(&mut out, "<title>Feasible payoff region</title>".to_string());
    w(&mut out, format!(r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#));

    // Axes frame with the extreme tick values.
    let (left, right) = (MARGIN, WIDTH - MARGIN);
    let (top, bottom) = (MARGIN, HEIGHT - MARGIN);
    w(&mut out, r#"<g id="axes" stroke="black" stroke-width="1">"#.to_string());
    w(&mut out, format!(r#"<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}"/>"#));
    w(&mut out, format!(r#"<line x1="{left}" y1="{bottom}" x2="{left}" y2="{top}"/>"#));
    w(&mut out, "</g>".to_string());
    let ticks = [
        (left, bottom + 16.0, "middle", frame.x_min),
        (right, bottom + 16.0, "middle", frame.x_max),
        (left - 6.0, bottom, "end", frame.y_min),
        (left - 6.0, top + 4.0, "end", frame.y_max),
    ];
    for (x, y, anchor, value) in ticks {
        w(&mut out, format!(r#"<text x="{x}" y="{y}" text-anchor="{anchor}">{}</text>"#, sig6(value)));
    }
    w(&mut out, format!(
        r#"<text x="{}" y="{}" text-anchor="middle">Π<tspan baseline-shift="sub" font-size="9">B</tspan><tspan baseline-shift="super" font-size="9">(1)</tspan></text>"#,
        WIDTH / 2.0,
        HEIGHT - 20.0
    ));
    w(&mut out, format!(
        r#"<text x="20" y="{}" text-anchor="middle" transform="rotate(-90 20 {})">Π<tspan baseline-shift="sub" font-size="9">B</tspan><tspan baseline-shift="super" font-size="9">(2)</tspan></text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    ));

    let hull_points: Vec<String> = region
        .hull
        .iter()
        .map(|p| {
            let (x, y) = frame.project(p);
            format!("{x},{y}")
        })
        .collect();
    match region.hull.len() {
        0 | 1 => {}
        2 => w(&mut out, format!(
            r#"<polyline id="hull" points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
            hull_points.join(" ")
        )),
        _ => w(&mut out, format!(
            r#"<polygon id="hull" points="{}" fill="lightsteelblue" fill-opacity="0.5" stroke="steelblue" stroke-width="2"/>"#,
            hull_points.join(" ")
        )),
    }

    w(&mut out, r#"<g id="vertices">"#.to_string());
    for (i, p) in region.vertices.iter().enumerate() {
        let (x, y) = frame.project(p);
        let pareto = region.is_pareto(p);
        let (radius, fill) = if pareto { (6, "crimson") } else { (4, "black") };
        w(&mut out, format!(
            r#"<circle cx="{x}" cy="{y}" r="{radius}" fill="{fill}"><title>{}</title></circle>"#,
            escape(&region.label_of(p))
        ));
        w(&mut out, format!(r#"<text x="{x}" y="{y}" dx="7" dy="-7">p{}</text>"#, i + 1));
    }
    w(&mut out, "</g>".to_string());
    w(&mut out, "</svg>".to_string());
    out
}

/// Writes `index,label,pi_b1,pi_b2,on_hull,pareto` rows with exact
/// coordinates and one-based indices.
pub fn write_coordinate_table<W: io::Write>(region: &PayoffRegion, writer: W) -> csv::Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(["index", "label", "pi_b1", "pi_b2", "on_hull", "pareto"])?;
    for (i, p) in region.vertices.iter().enumerate() {
        csv.write_record([
            (i + 1).to_string(),
            region.label_of(p),
            p.x.to_string(),
            p.y.to_string(),
            region.is_hull_vertex(p).to_string(),
            region.is_pareto(p).to_string(),
        ])?;
    }
    csv.flush()?;
    Ok(())
}

pub fn coordinate_table(region: &PayoffRegion) -> String {
    let mut buf = Vec::new();
    write_coordinate_table(region, &mut buf).expect("writing to memory cannot fail");
    let mut s = String::from_utf8(buf).expect("csv output is utf-8");
    if !s.ends_with('\n') {
        let _ = writeln!(s);
    }
    s
}
