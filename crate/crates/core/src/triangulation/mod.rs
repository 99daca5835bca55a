//! Convex `M`-integral triangulations of lattice polygons.
//!
//! Two constructions are provided: an incremental one that works for any
//! intermediate lattice (start from a fan over one interior point and keep
//! inserting interior lattice points), and the explicit kite triangulation
//! with prescribed axis vertices. Both attach lifting heights that certify
//! convexity. [`is_regular`] decides convexity of an arbitrary
//! triangulation from scratch, and [`dual_tropical_curve`] builds the dual
//! trivalent curve.

mod dual;
mod regularity;

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::census::{admissible_pairs, CensusError};
use crate::exact::{rat, Rat};
use crate::lattice::{cross, IntPoint, KiteSpec, LatticePolygon, Region, Sublattice};

pub use dual::{curve_lattices, dual_tropical_curve, DualEdge, Leg, TropicalCurve};
pub use regularity::{is_regular, Regularity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("genus {g} is out of range (allowed {min}..={max})")]
    GenusOutOfRange { g: u64, min: u64, max: u64 },
    #[error("no interior lattice point completes the boundary points to a generating set")]
    NoGeneratingPoint,
    #[error("boundary lattice point {0} does not lie in the sublattice")]
    BoundaryNotInLattice(IntPoint),
    #[error("(r, κ) = ({r}, {kappa}) is not admissible for genus {g}")]
    NotAdmissible { r: u64, kappa: u64, g: u64 },
    #[error("even index {r}: use the incremental construction on the index-{r} lattice")]
    EvenIndexUnsupported { r: u64 },
    #[error("invalid triangulation: {0}")]
    Invalid(String),
    #[error("triangulation carries no lifting heights")]
    MissingHeights,
    #[error("N(Γ) rotated is {rotated}, but M(Γ) is {m}")]
    DualityViolation { rotated: Sublattice, m: Sublattice },
    #[error(transparent)]
    Census(#[from] CensusError),
}

impl TriangulationError {
    pub fn code(&self) -> &'static str {
        match self {
            TriangulationError::GenusOutOfRange { .. } => "GenusOutOfRange",
            TriangulationError::NoGeneratingPoint => "NoGeneratingPoint",
            TriangulationError::BoundaryNotInLattice(_) => "BoundaryNotInLattice",
            TriangulationError::NotAdmissible { .. } => "NotAdmissible",
            TriangulationError::EvenIndexUnsupported { .. } => "EvenIndexUnsupported",
            TriangulationError::Invalid(_) => "InvalidTriangulation",
            TriangulationError::MissingHeights => "MissingHeights",
            TriangulationError::DualityViolation { .. } => "DualityViolation",
            TriangulationError::Census(e) => e.code(),
        }
    }
}

fn invalid(msg: impl Into<String>) -> TriangulationError {
    TriangulationError::Invalid(msg.into())
}

/// An interior edge `{p, q}` together with the opposite vertices `a` (in
/// the first adjacent triangle) and `b` (in the second). Indices refer to
/// [`Triangulation::vertices`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InteriorEdge {
    pub p: usize,
    pub q: usize,
    pub a: usize,
    pub b: usize,
    pub tri_a: usize,
    pub tri_b: usize,
}

/// A triangulation of a lattice polygon with vertices in a sublattice `M`.
///
/// Triangles are index triples into `vertices`, oriented counterclockwise.
/// `shift` records a translation used by constructions that are naturally
/// described in other coordinates: a point `p` here corresponds to
/// `p + shift` there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TriangulationRepr", into = "TriangulationRepr")]
pub struct Triangulation {
    polygon: LatticePolygon,
    lattice: Sublattice,
    vertices: Vec<IntPoint>,
    triangles: Vec<[usize; 3]>,
    heights: Option<Vec<Rat>>,
    shift: IntPoint,
}

#[derive(Serialize, Deserialize)]
struct TriangulationRepr {
    polygon: LatticePolygon,
    lattice: Sublattice,
    vertices: Vec<IntPoint>,
    triangles: Vec<[usize; 3]>,
    #[serde(with = "crate::exact::opt_vec")]
    heights: Option<Vec<Rat>>,
    #[serde(default)]
    shift: IntPoint,
}

impl TryFrom<TriangulationRepr> for Triangulation {
    type Error = TriangulationError;
    fn try_from(r: TriangulationRepr) -> Result<Self, Self::Error> {
        let mut t = Triangulation::new(r.polygon, r.lattice, r.vertices, r.triangles, r.heights)?;
        t.shift = r.shift;
        Ok(t)
    }
}

impl From<Triangulation> for TriangulationRepr {
    fn from(t: Triangulation) -> Self {
        TriangulationRepr {
            polygon: t.polygon,
            lattice: t.lattice,
            vertices: t.vertices,
            triangles: t.triangles,
            heights: t.heights,
            shift: t.shift,
        }
    }
}

/// Fold of the lift across an interior edge, as an integer linear form in
/// the heights: returns `(coefficient, vertex)` terms whose sum is positive
/// exactly when the lift bends upward (strictly convex) across the edge.
pub(crate) fn fold_form(pts: &[IntPoint], e: &InteriorEdge) -> [(i128, usize); 4] {
    let (p, q, a, b) = (pts[e.p], pts[e.q], pts[e.a], pts[e.b]);
    let area = cross(p, q, a);
    let s = area.signum();
    [
        (area.abs(), e.b),
        (-s * cross(b, q, a), e.p),
        (-s * cross(p, b, a), e.q),
        (-s * cross(p, q, b), e.a),
    ]
}

fn fold_value(pts: &[IntPoint], h: &[Rat], e: &InteriorEdge) -> Rat {
    fold_form(pts, e)
        .iter()
        .fold(Rat::zero(), |acc, &(c, v)| acc + rat(c) * &h[v])
}

fn orient(pts: &[IntPoint], t: [usize; 3]) -> [usize; 3] {
    if cross(pts[t[0]], pts[t[1]], pts[t[2]]) < 0 {
        [t[0], t[2], t[1]]
    } else {
        t
    }
}

/// Strict separating-axis test for two counterclockwise triangles: true
/// when their interiors intersect.
fn interiors_overlap(t: [IntPoint; 3], u: [IntPoint; 3]) -> bool {
    for (this, other) in [(t, u), (u, t)] {
        for i in 0..3 {
            let (a, b) = (this[i], this[(i + 1) % 3]);
            if other.iter().all(|&p| cross(a, b, p) <= 0) {
                return false;
            }
        }
    }
    true
}

impl Triangulation {
    /// Validates and builds a triangulation. Triangles are reoriented
    /// counterclockwise if necessary.
    pub fn new(
        polygon: LatticePolygon,
        lattice: Sublattice,
        vertices: Vec<IntPoint>,
        triangles: Vec<[usize; 3]>,
        heights: Option<Vec<Rat>>,
    ) -> Result<Self, TriangulationError> {
        let triangles = triangles
            .into_iter()
            .map(|t| {
                if t.iter().any(|&i| i >= vertices.len()) {
                    Err(invalid(format!("triangle {t:?} refers to a missing vertex")))
                } else {
                    Ok(orient(&vertices, t))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let tri = Triangulation {
            polygon,
            lattice,
            vertices,
            triangles,
            heights,
            shift: IntPoint::ORIGIN,
        };
        tri.validate()?;
        Ok(tri)
    }

    pub fn polygon(&self) -> &LatticePolygon {
        &self.polygon
    }

    pub fn lattice(&self) -> &Sublattice {
        &self.lattice
    }

    pub fn vertices(&self) -> &[IntPoint] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn heights(&self) -> Option<&[Rat]> {
        self.heights.as_deref()
    }

    pub fn shift(&self) -> IntPoint {
        self.shift
    }

    /// Vertices in the shifted coordinates recorded by the construction.
    pub fn shifted_vertices(&self) -> Vec<IntPoint> {
        self.vertices.iter().map(|&v| v + self.shift).collect()
    }

    /// Vertices lying in the interior of the polygon, in lexicographic order.
    pub fn interior_vertices(&self) -> Vec<IntPoint> {
        let mut v: Vec<IntPoint> = self
            .vertices
            .iter()
            .copied()
            .filter(|&p| self.polygon.strictly_contains(p))
            .collect();
        v.sort();
        v
    }

    pub fn triangle_points(&self, t: usize) -> [IntPoint; 3] {
        self.triangles[t].map(|i| self.vertices[i])
    }

    /// Sorted edge `(min, max)` → list of `(triangle, opposite vertex)`.
    fn edge_map(&self) -> BTreeMap<(usize, usize), Vec<(usize, usize)>> {
        let mut map: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (ti, t) in self.triangles.iter().enumerate() {
            for j in 0..3 {
                let (p, q, opp) = (t[j], t[(j + 1) % 3], t[(j + 2) % 3]);
                map.entry((p.min(q), p.max(q))).or_default().push((ti, opp));
            }
        }
        map
    }

    pub fn interior_edges(&self) -> Vec<InteriorEdge> {
        self.edge_map()
            .into_iter()
            .filter(|(_, adj)| adj.len() == 2)
            .map(|((p, q), adj)| InteriorEdge {
                p,
                q,
                a: adj[0].1,
                b: adj[1].1,
                tri_a: adj[0].0,
                tri_b: adj[1].0,
            })
            .collect()
    }

    /// Boundary edges as `(triangle, p, q)` with `p → q` counterclockwise
    /// in the triangle.
    pub fn boundary_edges(&self) -> Vec<(usize, usize, usize)> {
        let map = self.edge_map();
        let mut out = Vec::new();
        for (ti, t) in self.triangles.iter().enumerate() {
            for j in 0..3 {
                let (p, q) = (t[j], t[(j + 1) % 3]);
                if map[&(p.min(q), p.max(q))].len() == 1 {
                    out.push((ti, p, q));
                }
            }
        }
        out
    }

    fn validate(&self) -> Result<(), TriangulationError> {
        let poly = &self.polygon;
        if self.triangles.is_empty() {
            return Err(invalid("no triangles"));
        }
        let mut seen = self.vertices.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.vertices.len() {
            return Err(invalid("repeated vertex"));
        }
        for &v in &self.vertices {
            if !self.lattice.contains(v) {
                return Err(invalid(format!("vertex {v} is not in {}", self.lattice)));
            }
            if !poly.contains_point(v) {
                return Err(invalid(format!("vertex {v} lies outside the polygon")));
            }
        }
        for p in poly.lattice_points(Region::Boundary) {
            if self.lattice.contains(p) && !self.vertices.contains(&p) {
                return Err(invalid(format!("boundary lattice point {p} is not a vertex")));
            }
        }
        let mut area = 0i128;
        for t in 0..self.triangles.len() {
            let [a, b, c] = self.triangle_points(t);
            let a2 = cross(a, b, c);
            if a2 == 0 {
                return Err(invalid(format!("degenerate triangle {:?}", self.triangles[t])));
            }
            area += a2;
        }
        if area != poly.area2() {
            return Err(invalid(format!(
                "triangle areas sum to {area}/2, polygon area is {}/2",
                poly.area2()
            )));
        }
        for t in 0..self.triangles.len() {
            for u in t + 1..self.triangles.len() {
                if interiors_overlap(self.triangle_points(t), self.triangle_points(u)) {
                    return Err(invalid(format!("triangles {t} and {u} overlap")));
                }
            }
        }
        // Area and disjointness make this a tiling; it is a triangulation
        // when no vertex sits in the relative interior of an edge.
        for &(p, q) in self.edge_map().keys() {
            let (a, b) = (self.vertices[p], self.vertices[q]);
            for (i, &v) in self.vertices.iter().enumerate() {
                if i != p && i != q && crate::lattice::on_segment(a, b, v) {
                    return Err(invalid(format!("vertex {v} lies inside edge {a}–{b}")));
                }
            }
        }
        for e in self.edge_map().values() {
            if e.len() > 2 {
                return Err(invalid("edge shared by more than two triangles"));
            }
        }
        if let Some(h) = &self.heights {
            if h.len() != self.vertices.len() {
                return Err(invalid("one height per vertex required"));
            }
            if !self.heights_are_convex(h) {
                return Err(invalid("heights do not induce a strictly convex lift"));
            }
        }
        Ok(())
    }

    /// Whether `h` bends strictly upward across every interior edge.
    pub fn heights_are_convex(&self, h: &[Rat]) -> bool {
        h.len() == self.vertices.len()
            && self
                .interior_edges()
                .iter()
                .all(|e| fold_value(&self.vertices, h, e).is_positive())
    }

    /// Value at `p` of the piecewise-linear lift on triangle `t`.
    fn lift_at(&self, h: &[Rat], t: usize, p: IntPoint) -> Rat {
        let [i, j, k] = self.triangles[t];
        let [a, b, c] = self.triangle_points(t);
        let area = cross(a, b, c);
        let num = rat(cross(p, b, c)) * &h[i] + rat(cross(a, p, c)) * &h[j] + rat(cross(a, b, p)) * &h[k];
        num / rat(area)
    }

    pub fn with_heights(mut self, heights: Vec<Rat>) -> Result<Self, TriangulationError> {
        self.heights = Some(heights);
        self.validate()?;
        Ok(self)
    }
}

/// Triangulation with vertices `{m} ∪ (∂Δ ∩ M)` and then further interior
/// points of `M` inserted one at a time until `g` interior vertices are
/// present. Heights certifying convexity are attached.
pub fn incremental_triangulation(
    poly: &LatticePolygon,
    lat: &Sublattice,
    g: u64,
) -> Result<Triangulation, TriangulationError> {
    let boundary = poly.boundary_cycle();
    if let Some(&p) = boundary.iter().find(|&&p| !lat.contains(p)) {
        return Err(TriangulationError::BoundaryNotInLattice(p));
    }
    let interior: Vec<IntPoint> = poly
        .lattice_points(Region::Interior)
        .into_iter()
        .filter(|&p| lat.contains(p))
        .collect();
    let max = interior.len() as u64;
    if g < 1 || g > max {
        return Err(TriangulationError::GenusOutOfRange { g, min: 1, max });
    }
    let m = interior
        .iter()
        .copied()
        .find(|&m| {
            let mut gens = boundary.clone();
            gens.push(m);
            Sublattice::from_generators(&gens).ok().as_ref() == Some(lat)
        })
        .ok_or(TriangulationError::NoGeneratingPoint)?;

    let mut vertices = vec![m];
    vertices.extend(boundary.iter().copied());
    let nb = boundary.len();
    let triangles: Vec<[usize; 3]> = (0..nb).map(|i| [0, 1 + i, 1 + (i + 1) % nb]).collect();
    let mut tri = Triangulation::new(poly.clone(), *lat, vertices, triangles, None)?;

    let mut heights: Vec<Rat> = std::iter::once(Rat::zero())
        .chain(boundary.iter().map(|&p| {
            let d = p - m;
            rat(d.x as i128 * d.x as i128 + d.y as i128 * d.y as i128)
        }))
        .collect();
    let mut depth = rat(1);
    loop {
        heights[0] = -depth.clone();
        if tri.heights_are_convex(&heights) {
            break;
        }
        depth *= rat(2);
    }
    tri.heights = Some(heights);

    while (tri.interior_vertices().len() as u64) < g {
        insert_next_point(&mut tri, &interior)?;
    }
    tri.validate()?;
    Ok(tri)
}

/// Inserts the lexicographically smallest interior lattice point lying
/// strictly inside a triangle, or failing that, inside an interior edge.
fn insert_next_point(tri: &mut Triangulation, candidates: &[IntPoint]) -> Result<(), TriangulationError> {
    let fresh: Vec<IntPoint> = candidates
        .iter()
        .copied()
        .filter(|p| !tri.vertices.contains(p))
        .collect();
    let inside_triangle = fresh.iter().find_map(|&p| {
        (0..tri.triangles.len()).find_map(|t| {
            let [a, b, c] = tri.triangle_points(t);
            (cross(a, b, p) > 0 && cross(b, c, p) > 0 && cross(c, a, p) > 0).then_some((p, t))
        })
    });
    let old_h = tri.heights.clone().expect("construction keeps heights");
    let new_index = tri.vertices.len();
    let (point, base_height) = if let Some((p, t)) = inside_triangle {
        let [i, j, k] = tri.triangles[t];
        let h = tri.lift_at(&old_h, t, p);
        tri.triangles[t] = [i, j, new_index];
        tri.triangles.push([j, k, new_index]);
        tri.triangles.push([k, i, new_index]);
        (p, h)
    } else {
        let edges = tri.interior_edges();
        let found = fresh.iter().find_map(|&p| {
            edges.iter().find_map(|e| {
                let (a, b) = (tri.vertices[e.p], tri.vertices[e.q]);
                crate::lattice::on_segment(a, b, p).then_some((p, *e))
            })
        });
        let Some((p, e)) = found else {
            return Err(invalid("no interior lattice point left to insert"));
        };
        let h = tri.lift_at(&old_h, e.tri_a, p);
        for (t, opp) in [(e.tri_a, e.a), (e.tri_b, e.b)] {
            tri.triangles[t] = orient(&tri.vertices_with(p), [e.p, opp, new_index]);
            tri.triangles.push(orient(&tri.vertices_with(p), [opp, e.q, new_index]));
        }
        (p, h)
    };
    tri.vertices.push(point);
    let mut eps = rat(1);
    let mut h = old_h;
    h.push(Rat::zero());
    loop {
        h[new_index] = &base_height - &eps;
        if tri.heights_are_convex(&h) {
            break;
        }
        eps /= rat(2);
    }
    tri.heights = Some(h);
    Ok(())
}

impl Triangulation {
    fn vertices_with(&self, p: IntPoint) -> Vec<IntPoint> {
        let mut v = self.vertices.clone();
        v.push(p);
        v
    }
}

/// The explicit kite triangulation for an admissible pair `(r, κ)` with
/// `r` odd.
///
/// In coordinates where the kite's axis runs from `(0, −k)` to `(0, k')`
/// and the side vertices are `(±1, 0)`, the interior vertices are the axis
/// points at heights `k' − 2r, …, k' − 2κr` followed by
/// `k' − 2κr − r, …, k' − (g + κ)r`. Every triangle joins two consecutive
/// axis vertices to one of the side vertices. The triangulation is stored
/// in the kite's own coordinates with `shift = (0, −k)`.
pub fn kite_triangulation(
    kite: &KiteSpec,
    g: u64,
    r: u64,
    kappa: u64,
) -> Result<Triangulation, TriangulationError> {
    let pairs = admissible_pairs(kite, g)?;
    if g == 0 || !pairs.contains(&(r, kappa)) {
        return Err(TriangulationError::NotAdmissible { r, kappa, g });
    }
    if r.is_multiple_of(2) {
        return Err(TriangulationError::EvenIndexUnsupported { r });
    }
    let (k, kp, ri) = (kite.k as i64, kite.k_prime as i64, r as i64);
    let poly = kite.polygon();
    let lat = Sublattice::from_generators(&[IntPoint::new(1, k), IntPoint::new(0, ri)])
        .expect("independent generators");

    // Axis heights in shifted coordinates, top to bottom.
    let mut axis: Vec<i64> = vec![kp];
    axis.extend((1..=kappa as i64).map(|i| kp - 2 * i * ri));
    let below = kp - 2 * kappa as i64 * ri;
    axis.extend((1..=(g - kappa) as i64).map(|j| below - j * ri));
    axis.push(-k);
    let bottom_len = (axis[axis.len() - 2] - axis[axis.len() - 1]) / ri;
    let delta = crate::lattice::delta_m(&poly, &lat, g);
    assert_eq!(bottom_len, delta - kappa as i64 + 1);
    assert_eq!(bottom_len % 2, 1, "bottom axis interval must have odd length");
    axis.reverse();

    let n = axis.len();
    let mut vertices: Vec<IntPoint> = axis.iter().map(|&s| IntPoint::new(0, s + k)).collect();
    vertices.push(IntPoint::new(1, k));
    vertices.push(IntPoint::new(-1, k));
    let (right, left) = (n, n + 1);
    let mut triangles = Vec::new();
    for i in 0..n - 1 {
        triangles.push([i, right, i + 1]);
        triangles.push([i + 1, left, i]);
    }
    let lift = rat(k as i128 * kp as i128 + 1);
    let mut heights: Vec<Rat> = axis.iter().map(|&s| rat(s as i128 * s as i128) - &lift).collect();
    heights.push(Rat::zero());
    heights.push(Rat::zero());

    let mut tri = Triangulation::new(poly, lat, vertices, triangles, Some(heights))?;
    tri.shift = IntPoint::new(0, -k);
    Ok(tri)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kite(k: u64, kp: u64) -> KiteSpec {
        KiteSpec::new(k, kp).unwrap()
    }

    fn unit_triangle() -> LatticePolygon {
        LatticePolygon::normalize(&[IntPoint::new(0, 0), IntPoint::new(1, 0), IntPoint::new(0, 1)])
            .unwrap()
    }

    #[test]
    fn incremental_fan_on_kite() {
        let t = incremental_triangulation(&kite(1, 3).polygon(), &Sublattice::FULL, 1).unwrap();
        assert_eq!(t.interior_vertices(), vec![IntPoint::new(0, 1)]);
        assert_eq!(t.triangles().len(), 4);
        assert!(t.heights().is_some());

        let t = incremental_triangulation(&kite(1, 3).polygon(), &Sublattice::FULL, 3).unwrap();
        assert_eq!(t.interior_vertices().len(), 3);
        assert_eq!(t.triangles().len(), 8);
    }

    #[test]
    fn incremental_genus_out_of_range() {
        assert!(matches!(
            incremental_triangulation(&unit_triangle(), &Sublattice::FULL, 1),
            Err(TriangulationError::GenusOutOfRange { .. })
        ));
    }

    #[test]
    fn incremental_on_sublattice() {
        let k24 = kite(2, 4);
        let lat = Sublattice::from_basis_columns([[1, 2], [0, 2]]).unwrap();
        let t = incremental_triangulation(&k24.polygon(), &lat, 2).unwrap();
        assert_eq!(t.interior_vertices().len(), 2);
        assert!(t.vertices().iter().all(|&v| lat.contains(v)));
        assert!(matches!(
            incremental_triangulation(&k24.polygon(), &lat, 3),
            Err(TriangulationError::GenusOutOfRange { .. })
        ));
    }

    #[test]
    fn incremental_uses_edge_insertion() {
        // Triangle with interior points (1,1),(2,1),(3,1),(1,2): after the
        // fan over (1,1) some points sit on fan edges.
        let t = LatticePolygon::normalize(&[IntPoint::new(0, 0), IntPoint::new(4, 1), IntPoint::new(0, 3)])
            .unwrap();
        for g in 1..=4 {
            let tri = incremental_triangulation(&t, &Sublattice::FULL, g).unwrap();
            assert_eq!(tri.interior_vertices().len() as u64, g);
        }
    }

    #[test]
    fn kite_triangulation_examples() {
        let t = kite_triangulation(&kite(0, 3), 1, 1, 1).unwrap();
        assert_eq!(t.interior_vertices(), vec![IntPoint::new(0, 1)]);
        assert_eq!(t.shift(), IntPoint::new(0, 0));

        let t = kite_triangulation(&kite(1, 3), 1, 1, 0).unwrap();
        assert_eq!(t.interior_vertices(), vec![IntPoint::new(0, 3)]);
        assert_eq!(t.shift(), IntPoint::new(0, -1));
        assert!(t.shifted_vertices().contains(&IntPoint::new(0, 2)));
        assert_eq!(t.triangles().len(), 4);

        assert!(matches!(
            kite_triangulation(&kite(1, 3), 1, 1, 1),
            Err(TriangulationError::NotAdmissible { .. })
        ));
        assert!(matches!(
            kite_triangulation(&kite(1, 3), 1, 2, 2),
            Err(TriangulationError::EvenIndexUnsupported { r: 2 })
        ));
    }

    #[test]
    fn kite_triangulation_on_index_three() {
        // kite(3, 6): gcd(9, 6) = 3, interior M-points (0,3),(0,6).
        let t = kite_triangulation(&kite(3, 6), 1, 3, 1).unwrap();
        assert_eq!(t.interior_vertices(), vec![IntPoint::new(0, 3)]);
        assert_eq!(t.lattice().index(), 3);
    }

    #[test]
    fn rejects_bad_tilings() {
        let poly = unit_triangle();
        let v = vec![IntPoint::new(0, 0), IntPoint::new(1, 0), IntPoint::new(0, 1)];
        assert!(Triangulation::new(poly.clone(), Sublattice::FULL, v.clone(), vec![[0, 1, 2]], None).is_ok());
        assert!(Triangulation::new(poly.clone(), Sublattice::FULL, v.clone(), vec![[0, 1, 2], [0, 2, 1]], None).is_err());
        assert!(Triangulation::new(poly, Sublattice::FULL, v, vec![[0, 1, 5]], None).is_err());
        // Hanging vertex: square split along a diagonal with the midpoint
        // used by only one side.
        let sq = LatticePolygon::normalize(&[
            IntPoint::new(0, 0),
            IntPoint::new(2, 0),
            IntPoint::new(2, 2),
            IntPoint::new(0, 2),
        ])
        .unwrap();
        let v: Vec<IntPoint> = [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1), (1, 1)]
            .iter()
            .map(|&p| p.into())
            .collect();
        let good = vec![
            [0, 1, 8], [1, 2, 8], [2, 3, 8], [3, 4, 8], [4, 5, 8], [5, 6, 8], [6, 7, 8], [7, 0, 8],
        ];
        assert!(Triangulation::new(sq.clone(), Sublattice::FULL, v.clone(), good, None).is_ok());
        let hanging = vec![
            [0, 1, 8], [1, 2, 8], [2, 3, 8], [3, 4, 8], [4, 6, 0], [0, 7, 6],
        ];
        assert!(Triangulation::new(sq, Sublattice::FULL, v, hanging, None).is_err());
    }

    #[test]
    fn triangulation_json_round_trip() {
        let t = kite_triangulation(&kite(1, 3), 1, 1, 0).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.contains(r#""heights":["#));
        let back: Triangulation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
