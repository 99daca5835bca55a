//! Exact integer geometry in the plane: lattice polygons, their lattice
//! points, finite-index sublattices of ℤ² in Hermite normal form, the
//! quarter-turn duality between character and cocharacter lattices, and
//! the deficiency `δ_M(Δ, g) = |Δ° ∩ M| − g`.
//!
//! Coordinates are `i64` with magnitude at most [`MAX_COORD`]; every
//! intermediate quantity is computed in `i128`, so nothing here can round
//! or overflow for admissible input.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{ceil_div, ext_gcd, floor_div, gcd};

/// Largest admissible absolute coordinate.
pub const MAX_COORD: i64 = 1 << 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("polygon is not strictly convex: {0}")]
    NotConvex(String),
    #[error("polygon is degenerate: {0}")]
    Degenerate(String),
    #[error("generators do not span the plane")]
    RankDeficient,
    #[error("coordinate {0} exceeds the supported range ±2^30")]
    CoordinateOutOfRange(i64),
    #[error("invalid kite parameters k = {k}, k' = {k_prime} (need k' >= k and k' > 0)")]
    InvalidKite { k: u64, k_prime: u64 },
}

impl LatticeError {
    pub fn code(&self) -> &'static str {
        match self {
            LatticeError::NotConvex(_) => "NotConvex",
            LatticeError::Degenerate(_) => "Degenerate",
            LatticeError::RankDeficient => "RankDeficient",
            LatticeError::CoordinateOutOfRange(_) => "CoordinateOutOfRange",
            LatticeError::InvalidKite { .. } => "InvalidKite",
        }
    }
}

/// A point of ℤ².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct IntPoint {
    pub x: i64,
    pub y: i64,
}

impl IntPoint {
    pub const ORIGIN: IntPoint = IntPoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        IntPoint { x, y }
    }

    /// Quarter turn counterclockwise, `(x, y) ↦ (−y, x)`.
    pub fn rotate_ccw(self) -> Self {
        IntPoint::new(-self.y, self.x)
    }

    /// Lattice length: gcd of the coordinates.
    pub fn content(self) -> i64 {
        gcd(self.x as i128, self.y as i128) as i64
    }

    pub fn scale(self, s: i64) -> Self {
        IntPoint::new(self.x * s, self.y * s)
    }
}

impl std::ops::Add for IntPoint {
    type Output = IntPoint;
    fn add(self, o: IntPoint) -> IntPoint {
        IntPoint::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for IntPoint {
    type Output = IntPoint;
    fn sub(self, o: IntPoint) -> IntPoint {
        IntPoint::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Neg for IntPoint {
    type Output = IntPoint;
    fn neg(self) -> IntPoint {
        IntPoint::new(-self.x, -self.y)
    }
}

impl From<[i64; 2]> for IntPoint {
    fn from(a: [i64; 2]) -> Self {
        IntPoint::new(a[0], a[1])
    }
}

impl From<IntPoint> for [i64; 2] {
    fn from(p: IntPoint) -> Self {
        [p.x, p.y]
    }
}

impl From<(i64, i64)> for IntPoint {
    fn from(t: (i64, i64)) -> Self {
        IntPoint::new(t.0, t.1)
    }
}

impl fmt::Display for IntPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `(b − a) × (c − a)`, twice the signed area of the triangle `abc`.
pub fn cross(a: IntPoint, b: IntPoint, c: IntPoint) -> i128 {
    let (ux, uy) = ((b.x - a.x) as i128, (b.y - a.y) as i128);
    let (vx, vy) = ((c.x - a.x) as i128, (c.y - a.y) as i128);
    ux * vy - uy * vx
}

/// Whether `p` lies on the closed segment `[a, b]`.
pub fn on_segment(a: IntPoint, b: IntPoint, p: IntPoint) -> bool {
    cross(a, b, p) == 0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Which lattice points of a polygon to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Interior,
    Boundary,
    All,
}

/// A strictly convex lattice polygon with vertices listed counterclockwise,
/// one of which is the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolygonRepr", into = "PolygonRepr")]
pub struct LatticePolygon {
    vertices: Vec<IntPoint>,
    offset: IntPoint,
}

#[derive(Serialize, Deserialize)]
struct PolygonRepr {
    vertices: Vec<IntPoint>,
    #[serde(default)]
    offset: IntPoint,
}

impl TryFrom<PolygonRepr> for LatticePolygon {
    type Error = LatticeError;
    fn try_from(r: PolygonRepr) -> Result<Self, Self::Error> {
        LatticePolygon::from_normalized(r.vertices, r.offset)
    }
}

impl From<LatticePolygon> for PolygonRepr {
    fn from(p: LatticePolygon) -> Self {
        PolygonRepr { vertices: p.vertices, offset: p.offset }
    }
}

fn check_range(points: &[IntPoint]) -> Result<(), LatticeError> {
    for p in points {
        for c in [p.x, p.y] {
            if c.abs() > MAX_COORD {
                return Err(LatticeError::CoordinateOutOfRange(c));
            }
        }
    }
    Ok(())
}

fn signed_area2(pts: &[IntPoint]) -> i128 {
    let n = pts.len();
    (0..n)
        .map(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            a.x as i128 * b.y as i128 - b.x as i128 * a.y as i128
        })
        .sum()
}

/// Checks that `pts` is a counterclockwise, strictly convex, simple polygon.
fn check_strictly_convex_ccw(pts: &[IntPoint]) -> Result<(), LatticeError> {
    let n = pts.len();
    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        for (j, &p) in pts.iter().enumerate() {
            if j == i || j == (i + 1) % n {
                continue;
            }
            match cross(a, b, p).cmp(&0) {
                Ordering::Greater => {}
                Ordering::Equal => {
                    return Err(LatticeError::NotConvex(format!(
                        "vertex {p} is collinear with edge {a}–{b}"
                    )))
                }
                Ordering::Less => {
                    return Err(LatticeError::NotConvex(format!(
                        "vertex {p} lies right of edge {a}–{b}"
                    )))
                }
            }
        }
    }
    Ok(())
}

impl LatticePolygon {
    /// Accepts a strictly convex polygon in either orientation and any
    /// position; orients it counterclockwise and translates it so the
    /// lexicographically smallest vertex sits at the origin.
    pub fn normalize(raw: &[IntPoint]) -> Result<Self, LatticeError> {
        check_range(raw)?;
        let mut pts: Vec<IntPoint> = Vec::with_capacity(raw.len());
        for &p in raw {
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        let mut distinct = pts.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() < 3 {
            return Err(LatticeError::Degenerate(format!(
                "{} distinct points",
                distinct.len()
            )));
        }
        if distinct.len() != pts.len() {
            return Err(LatticeError::NotConvex("repeated vertex".into()));
        }
        let area2 = signed_area2(&pts);
        if area2 == 0 {
            return Err(LatticeError::Degenerate("zero area".into()));
        }
        if area2 < 0 {
            pts.reverse();
        }
        check_strictly_convex_ccw(&pts)?;
        let (start, &min) = pts.iter().enumerate().min_by_key(|(_, p)| **p).unwrap();
        pts.rotate_left(start);
        let vertices = pts.into_iter().map(|p| p - min).collect();
        Ok(LatticePolygon { vertices, offset: -min })
    }

    /// Builds a polygon already in normal position: counterclockwise,
    /// strictly convex, with the origin on its boundary (normally as a
    /// vertex, in which case the list is rotated to start there).
    pub fn from_normalized(vertices: Vec<IntPoint>, offset: IntPoint) -> Result<Self, LatticeError> {
        check_range(&vertices)?;
        if vertices.len() < 3 {
            return Err(LatticeError::Degenerate(format!("{} vertices", vertices.len())));
        }
        let area2 = signed_area2(&vertices);
        if area2 == 0 {
            return Err(LatticeError::Degenerate("zero area".into()));
        }
        if area2 < 0 {
            return Err(LatticeError::NotConvex("vertices are listed clockwise".into()));
        }
        check_strictly_convex_ccw(&vertices)?;
        let mut vertices = vertices;
        if let Some(start) = vertices.iter().position(|&p| p == IntPoint::ORIGIN) {
            vertices.rotate_left(start);
        }
        let poly = LatticePolygon { vertices, offset };
        if !poly.on_boundary(IntPoint::ORIGIN) {
            return Err(LatticeError::Degenerate("origin is not on the boundary".into()));
        }
        Ok(poly)
    }

    pub fn vertices(&self) -> &[IntPoint] {
        &self.vertices
    }

    /// Translation applied to the raw input: `normalized = raw + offset`.
    pub fn offset(&self) -> IntPoint {
        self.offset
    }

    /// Twice the area.
    pub fn area2(&self) -> i128 {
        signed_area2(&self.vertices)
    }

    pub fn boundary_count(&self) -> u64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| (self.vertices[(i + 1) % n] - self.vertices[i]).content() as u64)
            .sum()
    }

    /// Boundary lattice points in counterclockwise order starting at the
    /// origin vertex.
    pub fn boundary_cycle(&self) -> Vec<IntPoint> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let d = b - a;
            let g = d.content();
            let step = IntPoint::new(d.x / g, d.y / g);
            for t in 0..g {
                out.push(a + step.scale(t));
            }
        }
        out
    }

    pub fn on_boundary(&self, p: IntPoint) -> bool {
        let n = self.vertices.len();
        (0..n).any(|i| on_segment(self.vertices[i], self.vertices[(i + 1) % n], p))
    }

    /// Closed containment test.
    pub fn contains_point(&self, p: IntPoint) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| cross(self.vertices[i], self.vertices[(i + 1) % n], p) >= 0)
    }

    pub fn strictly_contains(&self, p: IntPoint) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| cross(self.vertices[i], self.vertices[(i + 1) % n], p) > 0)
    }

    /// Lattice points of the requested region in lexicographic order.
    ///
    /// Each horizontal line `y = const` meets the polygon in an interval
    /// whose ends are exact rationals; the integer abscissae inside it are
    /// then split into boundary and interior by an explicit on-edge test.
    pub fn lattice_points(&self, region: Region) -> Vec<IntPoint> {
        let ymin = self.vertices.iter().map(|p| p.y).min().unwrap();
        let ymax = self.vertices.iter().map(|p| p.y).max().unwrap();
        let n = self.vertices.len();
        let mut out = Vec::new();
        for y in ymin..=ymax {
            // Interval [lo, hi] as fractions (num, den) with den > 0.
            let mut lo: Option<(i128, i128)> = None;
            let mut hi: Option<(i128, i128)> = None;
            let mut push = |num: i128, den: i128| {
                let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
                if lo.is_none_or(|(ln, ld)| num * ld < ln * den) {
                    lo = Some((num, den));
                }
                if hi.is_none_or(|(hn, hd)| num * hd > hn * den) {
                    hi = Some((num, den));
                }
            };
            for i in 0..n {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                if a.y == b.y {
                    if a.y == y {
                        push(a.x as i128, 1);
                        push(b.x as i128, 1);
                    }
                    continue;
                }
                if y < a.y.min(b.y) || y > a.y.max(b.y) {
                    continue;
                }
                // x = a.x + (y − a.y)(b.x − a.x)/(b.y − a.y)
                let den = (b.y - a.y) as i128;
                let num = a.x as i128 * den + (y - a.y) as i128 * (b.x - a.x) as i128;
                push(num, den);
            }
            let (Some((ln, ld)), Some((hn, hd))) = (lo, hi) else { continue };
            for x in ceil_div(ln, ld)..=floor_div(hn, hd) {
                let p = IntPoint::new(x as i64, y);
                let keep = match region {
                    Region::All => true,
                    Region::Boundary => self.on_boundary(p),
                    Region::Interior => !self.on_boundary(p),
                };
                if keep {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }

    pub fn interior_count(&self) -> u64 {
        self.lattice_points(Region::Interior).len() as u64
    }
}

/// A sublattice of ℤ² of finite index, stored as its Hermite normal form:
/// basis columns `(d1, c)` and `(0, d2)` with `d1, d2 > 0` and `0 ≤ c < d2`.
///
/// Two sublattices are equal as sets iff their normal forms coincide, so
/// the derived `Eq`/`Hash` are set equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SublatticeRepr", into = "SublatticeRepr")]
pub struct Sublattice {
    d1: i64,
    c: i64,
    d2: i64,
}

#[derive(Serialize, Deserialize)]
struct SublatticeRepr {
    basis: [[i64; 2]; 2],
    index: u64,
}

impl TryFrom<SublatticeRepr> for Sublattice {
    type Error = LatticeError;
    fn try_from(r: SublatticeRepr) -> Result<Self, Self::Error> {
        let lat = Sublattice::from_basis_columns(r.basis)?;
        if lat.index() != r.index {
            return Err(LatticeError::Degenerate(format!(
                "declared index {} but basis has index {}",
                r.index,
                lat.index()
            )));
        }
        Ok(lat)
    }
}

impl From<Sublattice> for SublatticeRepr {
    fn from(l: Sublattice) -> Self {
        SublatticeRepr { basis: l.basis_columns(), index: l.index() }
    }
}

impl Ord for Sublattice {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.index(), self.d1, self.c, self.d2).cmp(&(other.index(), other.d1, other.c, other.d2))
    }
}

impl PartialOrd for Sublattice {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨({}, {}), (0, {})⟩", self.d1, self.c, self.d2)
    }
}

impl Sublattice {
    pub const FULL: Sublattice = Sublattice { d1: 1, c: 0, d2: 1 };

    /// Canonical basis of the lattice generated by `generators`.
    pub fn from_generators(generators: &[IntPoint]) -> Result<Self, LatticeError> {
        // Running state: a vector `first` with the gcd of the x-coordinates
        // seen so far, and `d2` generating the lattice's intersection with
        // the y-axis (0 until something nonzero appears there).
        let mut first: Option<(i128, i128)> = None;
        let mut d2: i128 = 0;
        for g in generators {
            let (vx, vy) = (g.x as i128, g.y as i128);
            if vx == 0 {
                d2 = gcd(d2, vy);
                continue;
            }
            match first {
                None => first = Some((vx, vy)),
                Some((ax, ay)) => {
                    let (gx, s, t) = ext_gcd(ax, vx);
                    let new = (gx, s * ay + t * vy);
                    // Combination with vanishing x-coordinate.
                    let y_only = (vx / gx) * ay - (ax / gx) * vy;
                    d2 = gcd(d2, y_only);
                    first = Some(new);
                }
            }
            if let (Some((ax, ay)), true) = (first, d2 != 0) {
                first = Some((ax, ay.rem_euclid(d2)));
            }
        }
        let Some((mut ax, mut ay)) = first else {
            return Err(LatticeError::RankDeficient);
        };
        if d2 == 0 {
            return Err(LatticeError::RankDeficient);
        }
        if ax < 0 {
            ax = -ax;
            ay = -ay;
        }
        let c = ay.rem_euclid(d2);
        Ok(Sublattice { d1: ax as i64, c: c as i64, d2: d2 as i64 })
    }

    /// The lattice spanned by two column vectors `[[x1, y1], [x2, y2]]`.
    pub fn from_basis_columns(cols: [[i64; 2]; 2]) -> Result<Self, LatticeError> {
        Self::from_generators(&[IntPoint::from(cols[0]), IntPoint::from(cols[1])])
    }

    /// Basis columns `[[d1, c], [0, d2]]`.
    pub fn basis_columns(&self) -> [[i64; 2]; 2] {
        [[self.d1, self.c], [0, self.d2]]
    }

    pub fn basis(&self) -> [IntPoint; 2] {
        [IntPoint::new(self.d1, self.c), IntPoint::new(0, self.d2)]
    }

    pub fn index(&self) -> u64 {
        (self.d1 * self.d2) as u64
    }

    pub fn is_full(&self) -> bool {
        self.index() == 1
    }

    /// Membership by triangular back-substitution.
    pub fn contains(&self, p: IntPoint) -> bool {
        if p.x.rem_euclid(self.d1) != 0 {
            return false;
        }
        let alpha = (p.x / self.d1) as i128;
        (p.y as i128 - alpha * self.c as i128).rem_euclid(self.d2 as i128) == 0
    }

    pub fn contains_lattice(&self, other: &Sublattice) -> bool {
        other.basis().iter().all(|&b| self.contains(b))
    }

    /// `M = {m : ⟨n, m⟩ ∈ rℤ for all n ∈ N}` with `r` the index of `N`.
    /// This is the image of `N` under the quarter turn `(x, y) ↦ (−y, x)`.
    pub fn rotate_dual(&self) -> Sublattice {
        let [b1, b2] = self.basis();
        Sublattice::from_generators(&[b1.rotate_ccw(), b2.rotate_ccw()])
            .expect("rotation preserves rank")
    }

    /// Largest `t` such that `v / t` is a lattice vector; the integral
    /// length of `v` measured in this lattice. `v` must belong to the
    /// lattice and be nonzero.
    pub fn integral_length(&self, v: IntPoint) -> u64 {
        debug_assert!(self.contains(v) && v != IntPoint::ORIGIN);
        let g = v.content() as u64;
        crate::arith::divisors(g)
            .into_iter()
            .rev()
            .find(|&t| self.contains(IntPoint::new(v.x / t as i64, v.y / t as i64)))
            .unwrap_or(1)
    }
}

/// Smith form of the 2×2 integer matrix whose columns are `cols`:
/// returns `(u, s)` with `u` unimodular and `u · B · v = diag(s[0], s[1])`
/// for some unimodular `v`, `s[0] | s[1]`, both non-negative.
pub(crate) fn smith_2x2(cols: [[i64; 2]; 2]) -> ([[i128; 2]; 2], [i128; 2]) {
    // a[row][col]
    let mut a = [
        [cols[0][0] as i128, cols[1][0] as i128],
        [cols[0][1] as i128, cols[1][1] as i128],
    ];
    let mut u = [[1i128, 0], [0, 1]];
    loop {
        // Clear a[1][0] with row operations (tracked in u).
        if a[1][0] != 0 && a[0][0] != 0 && a[1][0] % a[0][0] == 0 {
            let f = a[1][0] / a[0][0];
            for j in 0..2 {
                a[1][j] -= f * a[0][j];
                u[1][j] -= f * u[0][j];
            }
        }
        if a[1][0] != 0 {
            let (g, s, t) = ext_gcd(a[0][0], a[1][0]);
            let (p, q) = (a[0][0] / g, a[1][0] / g);
            let rows = |m: &mut [[i128; 2]; 2]| {
                for j in 0..2 {
                    let (r0, r1) = (m[0][j], m[1][j]);
                    m[0][j] = s * r0 + t * r1;
                    m[1][j] = -q * r0 + p * r1;
                }
            };
            rows(&mut a);
            rows(&mut u);
        }
        // Clear a[0][1] with column operations.
        if a[0][1] != 0 && a[0][0] != 0 && a[0][1] % a[0][0] == 0 {
            let f = a[0][1] / a[0][0];
            for row in a.iter_mut() {
                row[1] -= f * row[0];
            }
        }
        if a[0][1] != 0 {
            let (g, s, t) = ext_gcd(a[0][0], a[0][1]);
            let (p, q) = (a[0][0] / g, a[0][1] / g);
            for row in a.iter_mut() {
                let (c0, c1) = (row[0], row[1]);
                row[0] = s * c0 + t * c1;
                row[1] = -q * c0 + p * c1;
            }
        }
        if a[1][0] == 0 && a[0][1] == 0 {
            if a[0][0] != 0 && a[1][1] % a[0][0] != 0 {
                // Fold the second diagonal entry into the first column.
                for j in 0..2 {
                    a[0][j] += a[1][j];
                    u[0][j] += u[1][j];
                }
                continue;
            }
            break;
        }
    }
    if a[0][0] < 0 {
        a[0][0] = -a[0][0];
        u[0] = [-u[0][0], -u[0][1]];
    }
    if a[1][1] < 0 {
        a[1][1] = -a[1][1];
        u[1] = [-u[1][0], -u[1][1]];
    }
    (u, [a[0][0], a[1][1]])
}

/// A kite: the polygon with vertices `(0,0), (±1, k), (0, k + k')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KiteSpec {
    pub k: u64,
    pub k_prime: u64,
}

impl KiteSpec {
    pub fn new(k: u64, k_prime: u64) -> Result<Self, LatticeError> {
        if k_prime < k || k_prime == 0 || k + k_prime > MAX_COORD as u64 {
            return Err(LatticeError::InvalidKite { k, k_prime });
        }
        Ok(KiteSpec { k, k_prime })
    }

    /// `k + k'`, the height of the kite and the degree of the associated
    /// Laurent polynomial.
    pub fn height(&self) -> u64 {
        self.k + self.k_prime
    }

    /// The kite in its own coordinates, bottom vertex at the origin. For
    /// `k = 0` the kite is the triangle `(−1,0), (1,0), (0,k')` and the
    /// origin is the midpoint of its bottom edge.
    pub fn polygon(&self) -> LatticePolygon {
        let (k, h) = (self.k as i64, self.height() as i64);
        let vertices = if k == 0 {
            vec![IntPoint::new(-1, 0), IntPoint::new(1, 0), IntPoint::new(0, h)]
        } else {
            vec![
                IntPoint::new(0, 0),
                IntPoint::new(1, k),
                IntPoint::new(0, h),
                IntPoint::new(-1, k),
            ]
        };
        LatticePolygon::from_normalized(vertices, IntPoint::ORIGIN).expect("kites are strictly convex")
    }
}

/// `δ_M(Δ, g) = |Δ° ∩ M| − g`.
pub fn delta_m(poly: &LatticePolygon, lat: &Sublattice, g: u64) -> i64 {
    let inner = poly
        .lattice_points(Region::Interior)
        .into_iter()
        .filter(|&p| lat.contains(p))
        .count() as i64;
    inner - g as i64
}

/// Dimension of every component of the Severi variety of genus `g`
/// curves in the linear system of `poly`: `|∂Δ ∩ ℤ²| + g − 1`.
pub fn severi_dimension(poly: &LatticePolygon, g: u64) -> u64 {
    poly.boundary_count() + g - 1
}
