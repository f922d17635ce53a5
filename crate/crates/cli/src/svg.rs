//! Static SVG overlay of a numerical range against sector rays.

use sectorial::C64;

pub struct Ray {
    pub angle: f64,
    pub color: &'static str,
    pub label: String,
}

const SIZE: f64 = 480.0;
const PAD: f64 = 40.0;

/// Draws the boundary polygon and symmetric rays `arg z = ±angle` from the origin.
pub fn render(points: &[C64], rays: &[Ray]) -> String {
    let mut xs: Vec<f64> = points.iter().map(|p| p.re).chain([0.0]).collect();
    let mut ys: Vec<f64> = points.iter().map(|p| p.im).chain([0.0]).collect();
    let reach = points.iter().map(|p| p.norm()).fold(1e-12, f64::max) * 1.1;
    for r in rays {
        for s in [1.0, -1.0] {
            xs.push(reach * r.angle.cos());
            ys.push(s * reach * r.angle.sin());
        }
    }
    let (x0, x1) = bounds(&xs);
    let (y0, y1) = bounds(&ys);
    let span = (x1 - x0).max(y1 - y0).max(1e-12);
    let scale = (SIZE - 2.0 * PAD) / span;
    let map = |x: f64, y: f64| (PAD + (x - x0) * scale, SIZE - PAD - (y - y0) * scale);

    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    );
    let (ox, oy) = map(0.0, 0.0);
    let (ax0, _) = map(x0, 0.0);
    let (ax1, _) = map(x0 + span, 0.0);
    let (_, ay0) = map(0.0, y0);
    let (_, ay1) = map(0.0, y0 + span);
    out += &format!(
        "<line x1=\"{ax0:.2}\" y1=\"{oy:.2}\" x2=\"{ax1:.2}\" y2=\"{oy:.2}\" stroke=\"#bbb\"/>\n\
         <line x1=\"{ox:.2}\" y1=\"{ay0:.2}\" x2=\"{ox:.2}\" y2=\"{ay1:.2}\" stroke=\"#bbb\"/>\n"
    );
    for (k, r) in rays.iter().enumerate() {
        for s in [1.0, -1.0] {
            let (ex, ey) = map(reach * r.angle.cos(), s * reach * r.angle.sin());
            out += &format!(
                "<line x1=\"{ox:.2}\" y1=\"{oy:.2}\" x2=\"{ex:.2}\" y2=\"{ey:.2}\" stroke=\"{}\" stroke-dasharray=\"6 3\"/>\n",
                r.color
            );
        }
        out += &format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"{}\">{}</text>\n",
            PAD,
            16.0 + 14.0 * k as f64,
            r.color,
            escape(&r.label)
        );
    }
    let poly: Vec<String> = points
        .iter()
        .map(|p| {
            let (x, y) = map(p.re, p.im);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    out += &format!(
        "<polygon points=\"{}\" fill=\"#4c72b0\" fill-opacity=\"0.25\" stroke=\"#4c72b0\" stroke-width=\"1.5\"/>\n",
        poly.join(" ")
    );
    out += "</svg>\n";
    out
}

fn bounds(v: &[f64]) -> (f64, f64) {
    v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
