//! SVG figures of planar bodies and point sets. Bodies in space are drawn as
//! their orthographic projection onto the first two coordinates.

use std::fmt::Write;

use crate::geometry::ccw_polygon;
use crate::geometry::{ConvexBody, Point};

/// Something to draw, with its label.
#[derive(Debug, Clone)]
pub enum Figure {
    Body(String, ConvexBody),
    Points(String, Vec<Point>),
}

const SIZE: f64 = 480.0;
const MARGIN: f64 = 24.0;
const COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn project(p: &Point) -> [f64; 2] {
    match p.dim() {
        0 => [0.0, 0.0],
        1 => [p[0], 0.0],
        _ => [p[0], p[1]],
    }
}

fn outline(b: &ConvexBody) -> Vec<[f64; 2]> {
    let pts: Vec<Point> = b
        .vertices()
        .iter()
        .map(|v| Point::from(project(v)))
        .collect();
    ccw_polygon(&pts, 1e-12).iter().map(project).collect()
}

pub fn render(figures: &[Figure]) -> String {
    let shapes: Vec<(String, Vec<[f64; 2]>, bool)> = figures
        .iter()
        .map(|f| match f {
            Figure::Body(l, b) => (l.clone(), outline(b), true),
            Figure::Points(l, p) => (l.clone(), p.iter().map(project).collect(), false),
        })
        .collect();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for (_, pts, _) in &shapes {
        for p in pts {
            for j in 0..2 {
                lo[j] = lo[j].min(p[j]);
                hi[j] = hi[j].max(p[j]);
            }
        }
    }
    if !lo[0].is_finite() {
        lo = [-1.0, -1.0];
        hi = [1.0, 1.0];
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let s = (SIZE - 2.0 * MARGIN) / span;
    let map = |p: &[f64; 2]| {
        (
            MARGIN + (p[0] - lo[0]) * s,
            SIZE - MARGIN - (p[1] - lo[1]) * s,
        )
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    for (i, (label, pts, closed)) in shapes.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let _ = writeln!(out, r#"  <g id="figure-{i}">"#);
        if *closed {
            let coords: Vec<String> = pts
                .iter()
                .map(|p| {
                    let (x, y) = map(p);
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            let _ = writeln!(
                out,
                r#"    <polygon points="{}" fill="{color}" fill-opacity="0.15" stroke="{color}" stroke-width="1.5"/>"#,
                coords.join(" ")
            );
        } else {
            for p in pts {
                let (x, y) = map(p);
                let _ = writeln!(
                    out,
                    r#"    <circle cx="{x:.3}" cy="{y:.3}" r="2.5" fill="{color}"/>"#
                );
            }
        }
        let anchor = pts.first().map(map).unwrap_or((MARGIN, MARGIN));
        let _ = writeln!(
            out,
            r#"    <text x="{:.3}" y="{:.3}" font-size="12" fill="{color}">{}</text>"#,
            anchor.0 + 4.0,
            anchor.1 - 4.0,
            escape(label)
        );
        let _ = writeln!(out, "  </g>");
    }
    out.push_str("</svg>\n");
    out
}
