//! Standalone SVG figures.
//!
//! Lattice geometry is drawn at exact integer coordinates multiplied by
//! [`SCALE`] (the factor is also written into the root element as
//! `data-scale`). The y axis is flipped so that figures appear with the
//! usual orientation. Dual curves are overlaid in their gradient
//! embedding: each vertex sits at the gradient of the lift on its
//! triangle, and legs are drawn one unit long along their directions.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use severi_census::exact::to_f64;
use severi_census::numerics::{AmoebaPoint, LogGrid};
use severi_census::triangulation::{Triangulation, TropicalCurve};
use severi_census::{IntPoint, Region};

/// Pixels per lattice unit (and per unit of `log|·|` in amoeba plots).
pub const SCALE: i64 = 40;
const MARGIN: i64 = 1;

pub enum Figure<'a> {
    Lattice {
        triangulation: &'a Triangulation,
        curve: Option<&'a TropicalCurve>,
    },
    Amoeba {
        points: &'a [AmoebaPoint],
        grid: LogGrid,
    },
}

pub fn emit_svg(figure: &Figure<'_>, path: &Path) -> std::io::Result<()> {
    fs::write(path, render(figure))
}

pub fn render(figure: &Figure<'_>) -> String {
    match figure {
        Figure::Lattice { triangulation, curve } => lattice(triangulation, *curve),
        Figure::Amoeba { points, grid } => amoeba(points, grid),
    }
}

fn header(out: &mut String, min: (f64, f64), max: (f64, f64)) {
    let (w, h) = (max.0 - min.0, max.1 - min.1);
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}" data-scale="{SCALE}">"#,
        fmt(min.0),
        fmt(min.1),
        fmt(w),
        fmt(h),
        fmt(w),
        fmt(h)
    )
    .unwrap();
}

/// Fixed three-decimal formatting, with `-0.000` printed as `0.000`.
fn fmt(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn px(p: IntPoint) -> (i64, i64) {
    (p.x * SCALE, -p.y * SCALE)
}

fn lattice(tri: &Triangulation, curve: Option<&TropicalCurve>) -> String {
    let poly = tri.polygon();
    let verts: Vec<IntPoint> = poly.vertices().to_vec();
    let centers: Vec<(f64, f64)> = curve
        .map(|c| c.vertices.iter().map(|v| (to_f64(&v.0[0]), to_f64(&v.0[1]))).collect())
        .unwrap_or_default();
    let xs = verts.iter().map(|p| p.x as f64).chain(centers.iter().map(|c| c.0));
    let ys = verts.iter().map(|p| p.y as f64).chain(centers.iter().map(|c| c.1));
    let m = MARGIN as f64;
    let x0 = xs.clone().fold(f64::INFINITY, f64::min).floor() - m;
    let x1 = xs.fold(f64::NEG_INFINITY, f64::max).ceil() + m;
    let y0 = ys.clone().fold(f64::INFINITY, f64::min).floor() - m;
    let y1 = ys.fold(f64::NEG_INFINITY, f64::max).ceil() + m;
    let s = SCALE as f64;
    let mut out = String::new();
    header(&mut out, (x0 * s, -y1 * s), (x1 * s, -y0 * s));
    let points: Vec<String> = verts
        .iter()
        .map(|&p| {
            let (x, y) = px(p);
            format!("{x},{y}")
        })
        .collect();
    writeln!(
        out,
        r#"<polygon class="polygon" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        points.join(" ")
    )
    .unwrap();

    let pts = tri.vertices();
    for t in tri.triangles() {
        let [a, b, c] = t.map(|i| px(pts[i]));
        writeln!(
            out,
            r#"<path class="triangle" d="M {} {} L {} {} L {} {} Z" fill="none" stroke="gray"/>"#,
            a.0, a.1, b.0, b.1, c.0, c.1
        )
        .unwrap();
    }
    let lat = tri.lattice();
    for p in poly.lattice_points(Region::All) {
        let (x, y) = px(p);
        let class = if lat.contains(p) { "lattice-point" } else { "other-point" };
        let r = if lat.contains(p) { 4 } else { 2 };
        writeln!(out, r#"<circle class="{class}" cx="{x}" cy="{y}" r="{r}"/>"#).unwrap();
    }
    if let Some(curve) = curve {
        dual_overlay(&mut out, curve, &centers);
    }
    out.push_str("</svg>\n");
    out
}

fn dual_overlay(out: &mut String, curve: &TropicalCurve, positions: &[(f64, f64)]) {
    let s = SCALE as f64;
    let centers: Vec<(f64, f64)> = positions.iter().map(|&(x, y)| (x * s, -y * s)).collect();
    for e in &curve.edges {
        let (a, b) = (centers[e.from], centers[e.to]);
        writeln!(
            out,
            r#"<line class="dual-edge" x1="{}" y1="{}" x2="{}" y2="{}" stroke="red" stroke-width="{}"/>"#,
            fmt(a.0),
            fmt(a.1),
            fmt(b.0),
            fmt(b.1),
            e.weight
        )
        .unwrap();
    }
    // Each leg leaves its vertex along its own direction, one lattice unit.
    for l in &curve.legs {
        let a = centers[l.vertex];
        let d = l.direction;
        let len = ((d.x * d.x + d.y * d.y) as f64).sqrt();
        let b = (
            a.0 + d.x as f64 / len * SCALE as f64,
            a.1 - d.y as f64 / len * SCALE as f64,
        );
        writeln!(
            out,
            r#"<line class="dual-leg" x1="{}" y1="{}" x2="{}" y2="{}" stroke="red" stroke-width="{}"/>"#,
            fmt(a.0),
            fmt(a.1),
            fmt(b.0),
            fmt(b.1),
            l.weight
        )
        .unwrap();
    }
    for c in &centers {
        writeln!(
            out,
            r#"<circle class="dual-vertex" cx="{}" cy="{}" r="3" fill="red"/>"#,
            fmt(c.0),
            fmt(c.1)
        )
        .unwrap();
    }
}

fn amoeba(points: &[AmoebaPoint], grid: &LogGrid) -> String {
    let s = SCALE as f64;
    let v_lo = grid.log_min.min(0.0) - 1.0;
    let v_hi = grid.log_max.max(0.0) + 1.0;
    let u_abs = points
        .iter()
        .map(|p| p.u.abs())
        .fold(grid.log_max.abs().max(grid.log_min.abs()), f64::max)
        + 1.0;
    let mut out = String::new();
    header(&mut out, (-u_abs * s, -v_hi * s), (u_abs * s, -v_lo * s));
    writeln!(
        out,
        r#"<line class="axis" x1="{}" y1="0.000" x2="{}" y2="0.000" stroke="black"/>"#,
        fmt(-u_abs * s),
        fmt(u_abs * s)
    )
    .unwrap();
    writeln!(
        out,
        r#"<line class="axis" x1="0.000" y1="{}" x2="0.000" y2="{}" stroke="black"/>"#,
        fmt(-v_hi * s),
        fmt(-v_lo * s)
    )
    .unwrap();
    for p in points {
        writeln!(
            out,
            r#"<circle class="amoeba-point" cx="{}" cy="{}" r="1.5"/>"#,
            fmt(p.u * s),
            fmt(-p.v * s)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
