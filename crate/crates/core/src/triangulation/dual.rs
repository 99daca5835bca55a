//! The trivalent tropical curve dual to a lifted triangulation.
//!
//! Each triangle becomes a vertex placed at the gradient of its lifted
//! plane. Crossing from a triangle over one of its sides `p → q`
//! (counterclockwise), the gradient moves along the outward normal
//! `(q − p)` rotated by −π/2; this rotated edge vector is the slope of the
//! dual edge. Its weight is the integral length of `q − p` in `M` and its
//! primitive direction is the slope divided by that weight.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{Triangulation, TriangulationError};
use crate::exact::{rat, Rat};
use crate::lattice::{IntPoint, Sublattice};

/// A bounded edge of the dual curve, oriented from `from` to `to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEdge {
    pub from: usize,
    pub to: usize,
    /// Primitive direction of the edge (in the dual lattice `N`).
    pub direction: IntPoint,
    pub weight: u64,
    /// `to − from = length · weight · direction`.
    #[serde(with = "crate::exact::single")]
    pub length: Rat,
}

/// An unbounded end of the dual curve leaving `vertex`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leg {
    pub vertex: usize,
    pub direction: IntPoint,
    pub weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalCurve {
    /// Vertex positions, one per triangle, as exact rationals.
    pub vertices: Vec<Position>,
    pub edges: Vec<DualEdge>,
    pub legs: Vec<Leg>,
    pub genus: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Position(#[serde(with = "crate::exact::pair")] pub [Rat; 2]);

impl DualEdge {
    /// Weighted slope `weight · direction`.
    pub fn slope(&self) -> IntPoint {
        self.direction.scale(self.weight as i64)
    }
}

impl Leg {
    pub fn slope(&self) -> IntPoint {
        self.direction.scale(self.weight as i64)
    }
}

impl TropicalCurve {
    /// Oriented weighted slopes leaving each vertex.
    pub fn outgoing(&self) -> Vec<Vec<IntPoint>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            out[e.from].push(e.slope());
            out[e.to].push(-e.slope());
        }
        for l in &self.legs {
            out[l.vertex].push(l.slope());
        }
        out
    }

    pub fn is_trivalent(&self) -> bool {
        self.outgoing().iter().all(|s| s.len() == 3)
    }

    pub fn is_balanced(&self) -> bool {
        self.outgoing()
            .iter()
            .all(|s| s.iter().fold(IntPoint::ORIGIN, |acc, &v| acc + v) == IntPoint::ORIGIN)
    }

    /// First Betti number `1 − V + E` of the (connected) graph.
    pub fn betti_number(&self) -> i64 {
        1 - self.vertices.len() as i64 + self.edges.len() as i64
    }
}

/// Gradient of the affine function through the lifted triangle `t`.
fn gradient(tri: &Triangulation, h: &[Rat], t: usize) -> [Rat; 2] {
    let [i, j, k] = tri.triangles()[t];
    let [a, b, c] = tri.triangle_points(t);
    let (ux, uy) = (rat((b.x - a.x) as i128), rat((b.y - a.y) as i128));
    let (vx, vy) = (rat((c.x - a.x) as i128), rat((c.y - a.y) as i128));
    let (du, dv) = (&h[j] - &h[i], &h[k] - &h[i]);
    let det = &ux * &vy - &uy * &vx;
    let gx = (&du * &vy - &dv * &uy) / &det;
    let gy = (&dv * &ux - &du * &vx) / &det;
    [gx, gy]
}

/// Outward normal of side `p → q` of a counterclockwise triangle, split
/// into primitive direction and `M`-integral weight.
fn dual_slope(lat: &Sublattice, p: IntPoint, q: IntPoint) -> (IntPoint, u64) {
    let e = q - p;
    let weight = lat.integral_length(e);
    let normal = IntPoint::new(e.y, -e.x);
    let w = weight as i64;
    (IntPoint::new(normal.x / w, normal.y / w), weight)
}

pub fn dual_tropical_curve(tri: &Triangulation) -> Result<TropicalCurve, TriangulationError> {
    let h = tri.heights().ok_or(TriangulationError::MissingHeights)?;
    let lat = tri.lattice();
    let pts = tri.vertices();
    let vertices: Vec<Position> = (0..tri.triangles().len())
        .map(|t| Position(gradient(tri, h, t)))
        .collect();
    let mut edges = Vec::new();
    for e in tri.interior_edges() {
        // Side of tri_a traversed counterclockwise.
        let t = tri.triangles()[e.tri_a];
        let pos = t.iter().position(|&v| v == e.a).unwrap();
        let (p, q) = (t[(pos + 1) % 3], t[(pos + 2) % 3]);
        let (direction, weight) = dual_slope(lat, pts[p], pts[q]);
        let [ax, ay] = &vertices[e.tri_a].0;
        let [bx, by] = &vertices[e.tri_b].0;
        let slope = direction.scale(weight as i64);
        let (dx, dy) = (bx - ax, by - ay);
        let length = if slope.x != 0 {
            dx / rat(slope.x as i128)
        } else {
            dy / rat(slope.y as i128)
        };
        debug_assert!(
            (rat(slope.x as i128) * &length == bx - ax) && (rat(slope.y as i128) * &length == by - ay)
        );
        if !length.is_positive() {
            return Err(TriangulationError::Invalid(
                "lift is not convex across an interior edge".into(),
            ));
        }
        edges.push(DualEdge { from: e.tri_a, to: e.tri_b, direction, weight, length });
    }
    let legs = tri
        .boundary_edges()
        .into_iter()
        .map(|(t, p, q)| {
            let (direction, weight) = dual_slope(lat, pts[p], pts[q]);
            Leg { vertex: t, direction, weight }
        })
        .collect();
    let genus = tri.interior_vertices().len() as u64;
    let curve = TropicalCurve { vertices, edges, legs, genus };
    debug_assert_eq!(curve.betti_number(), genus as i64);
    Ok(curve)
}

/// `N(Γ)`, generated by the weighted slopes, and `M(Γ)`, generated by the
/// vertices of the subdivision; checks that the quarter turn carries the
/// first onto the second.
pub fn curve_lattices(
    curve: &TropicalCurve,
    tri: &Triangulation,
) -> Result<(Sublattice, Sublattice), TriangulationError> {
    let slopes: Vec<IntPoint> = curve
        .edges
        .iter()
        .map(DualEdge::slope)
        .chain(curve.legs.iter().map(Leg::slope))
        .collect();
    let n = Sublattice::from_generators(&slopes)
        .map_err(|_| TriangulationError::Invalid("slopes do not span the plane".into()))?;
    let mut gens = tri.vertices().to_vec();
    gens.push(IntPoint::ORIGIN);
    let m = Sublattice::from_generators(&gens)
        .map_err(|_| TriangulationError::Invalid("vertices do not span the plane".into()))?;
    let rotated = n.rotate_dual();
    if rotated != m {
        return Err(TriangulationError::DualityViolation { rotated, m });
    }
    Ok((n, m))
}
