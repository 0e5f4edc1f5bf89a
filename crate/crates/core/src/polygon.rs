//! Exact 2D convex bodies as counterclockwise vertex cycles, with measures,
//! Minkowski sums, and the symmetrization operators.
//!
//! Degenerate bodies (segments, points) flow through every operator with the
//! limiting-case semantics of the definitions, so lower-dimensional convex
//! sets need no special treatment by callers.

use std::f64::consts::PI;

use crate::config::DEFAULT_TOLERANCES;
use crate::error::{Error, Result};
use crate::geom::{LineSubspace, RotationOp, Vec2};

/// Dimensional class of a convex body in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolygonKind {
    FullDim,
    Segment,
    Point,
}

/// A convex body of ℝ², stored as a counterclockwise vertex cycle with no
/// retained collinear triples and a canonical (lexicographically minimal)
/// start vertex. `Segment` bodies keep exactly two vertices, `Point` one.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
    kind: PolygonKind,
}

/// Area, perimeter and mean width of a body.
///
/// The mean width is `perimeter / π`; for a segment the perimeter counts
/// both sides of the boundary (twice the length), which keeps the formula
/// consistent with the support-function integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BodyMeasures {
    pub area: f64,
    pub perimeter: f64,
    pub mean_width: f64,
}

// Duplicate-vertex and exact-collinearity cutoffs, relative to diam and
// diam² respectively. Kept well below the pair-reduction threshold so that
// dropped slivers never add up to a measurable area change.
const DUP_FACTOR: f64 = 1e-15;
const FP_COLLINEAR_FACTOR: f64 = 1e-18;

fn shoelace2(pts: &[Vec2]) -> f64 {
    let n = pts.len();
    let mut s = 0.0;
    for i in 0..n {
        s += pts[i].cross(pts[(i + 1) % n]);
    }
    s
}

fn diameter_estimate(pts: &[Vec2]) -> f64 {
    let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in pts {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (hi - lo).norm()
}

fn lex_min_index(pts: &[Vec2]) -> usize {
    let mut best = 0;
    for (i, p) in pts.iter().enumerate().skip(1) {
        let b = pts[best];
        if p.x < b.x || (p.x == b.x && p.y < b.y) {
            best = i;
        }
    }
    best
}

impl ConvexPolygon {
    /// Builds the convex hull of arbitrary points (monotone chain) and
    /// classifies the result; degenerate inputs yield segment/point kinds.
    pub fn from_points(points: &[Vec2]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::invalid("empty point set"));
        }
        for p in points {
            if !p.is_finite() {
                return Err(Error::invalid("non-finite vertex"));
            }
        }
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
        pts.dedup();
        if pts.len() == 1 {
            return Ok(ConvexPolygon {
                vertices: pts,
                kind: PolygonKind::Point,
            });
        }
        let diam = diameter_estimate(&pts);
        let eps = FP_COLLINEAR_FACTOR * diam * diam;
        let hull_half = |iter: &mut dyn Iterator<Item = Vec2>| -> Vec<Vec2> {
            let mut h: Vec<Vec2> = Vec::new();
            for p in iter {
                while h.len() >= 2 {
                    let a = h[h.len() - 2];
                    let b = h[h.len() - 1];
                    if (b - a).cross(p - a) <= eps {
                        h.pop();
                    } else {
                        break;
                    }
                }
                h.push(p);
            }
            h
        };
        let lower = hull_half(&mut pts.iter().copied());
        let upper = hull_half(&mut pts.iter().rev().copied());
        let mut hull = lower;
        hull.extend(upper.into_iter().skip(1).take_while(|_| true));
        hull.pop(); // first point repeated
        Self::from_ccw_cycle(hull)
    }

    /// Canonicalizes a cycle that is already convex and counterclockwise up
    /// to floating-point noise (the form produced by the operators here).
    pub(crate) fn from_ccw_cycle(pts: Vec<Vec2>) -> Result<Self> {
        canonicalize(pts)
    }

    /// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        Self::from_points(&[
            Vec2::new(x0, y0),
            Vec2::new(x1, y0),
            Vec2::new(x1, y1),
            Vec2::new(x0, y1),
        ])
    }

    /// Regular n-gon inscribed in the circle of radius `r` about `center`.
    pub fn regular_ngon(center: Vec2, r: f64, n: usize) -> Result<Self> {
        if n < 3 || r <= 0.0 {
            return Err(Error::invalid("regular_ngon needs n >= 3, r > 0"));
        }
        let pts: Vec<Vec2> = (0..n)
            .map(|i| {
                let a = 2.0 * PI * (i as f64) / (n as f64);
                center + Vec2::from_angle(a) * r
            })
            .collect();
        Self::from_ccw_cycle(pts)
    }

    /// Axis-aligned ellipse with semi-axes `a`, `b`, as an inscribed n-gon.
    pub fn ellipse(center: Vec2, a: f64, b: f64, n: usize) -> Result<Self> {
        if n < 3 || a <= 0.0 || b <= 0.0 {
            return Err(Error::invalid("ellipse needs n >= 3 and positive axes"));
        }
        let pts: Vec<Vec2> = (0..n)
            .map(|i| {
                let t = 2.0 * PI * (i as f64) / (n as f64);
                center + Vec2::new(a * t.cos(), b * t.sin())
            })
            .collect();
        Self::from_ccw_cycle(pts)
    }

    pub fn segment(a: Vec2, b: Vec2) -> Result<Self> {
        Self::from_points(&[a, b])
    }

    pub fn point(p: Vec2) -> Result<Self> {
        Self::from_points(&[p])
    }

    pub fn kind(&self) -> PolygonKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn diameter_bound(&self) -> f64 {
        diameter_estimate(&self.vertices)
    }

    pub fn area(&self) -> f64 {
        match self.kind {
            PolygonKind::FullDim => 0.5 * shoelace2(&self.vertices),
            _ => 0.0,
        }
    }

    pub fn perimeter(&self) -> f64 {
        match self.kind {
            PolygonKind::FullDim => {
                let n = self.vertices.len();
                (0..n)
                    .map(|i| (self.vertices[(i + 1) % n] - self.vertices[i]).norm())
                    .sum()
            }
            PolygonKind::Segment => 2.0 * (self.vertices[1] - self.vertices[0]).norm(),
            PolygonKind::Point => 0.0,
        }
    }

    /// Area by shoelace, perimeter by edge lengths, mean width by the 2D
    /// Cauchy formula `perimeter/π`.
    pub fn measures(&self) -> BodyMeasures {
        let perimeter = self.perimeter();
        BodyMeasures {
            area: self.area(),
            perimeter,
            mean_width: perimeter / PI,
        }
    }

    /// Mean width by direct quadrature of `h(ν) + h(−ν)` on `n` directions.
    /// Cross-checks the Cauchy-formula value in tests.
    pub fn mean_width_quadrature(&self, n: usize) -> f64 {
        let mut acc = 0.0;
        for i in 0..n {
            let u = Vec2::from_angle(PI * (i as f64) / (n as f64));
            acc += self.support_value(u) + self.support_value(-u);
        }
        acc / (n as f64)
    }

    /// Support function `h(u) = max_{y ∈ P} u·y`; exact for polygons.
    pub fn support_value(&self, u: Vec2) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Support values at `n` equally spaced directions `2πi/n`.
    pub fn support_samples(&self, n: usize) -> Vec<f64> {
        let fan = Fan::of(self);
        fan.sample_equally_spaced(n)
    }

    pub fn translate(&self, t: Vec2) -> Self {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&v| v + t).collect(),
            kind: self.kind,
        }
    }

    /// Vertex-wise reflection across a planar line; reflection reverses the
    /// orientation, which canonicalization restores.
    pub fn reflect_across(&self, h: &LineSubspace) -> Result<Self> {
        let mut pts = self
            .vertices
            .iter()
            .map(|&v| h.reflect_vec2(v))
            .collect::<Result<Vec<_>>>()?;
        pts.reverse();
        canonicalize(pts)
    }

    pub fn rotate(&self, r: &RotationOp) -> Result<Self> {
        let pts = self
            .vertices
            .iter()
            .map(|&v| r.apply_vec2(v))
            .collect::<Result<Vec<_>>>()?;
        canonicalize(pts)
    }

    pub fn rotate_by(&self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        let pts = self
            .vertices
            .iter()
            .map(|&v| Vec2::new(c * v.x - s * v.y, s * v.x + c * v.y))
            .collect();
        canonicalize(pts).expect("rotation preserves validity")
    }

    pub fn scale(&self, t: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::invalid(format!("scale factor must be > 0, got {t}")));
        }
        canonicalize(self.vertices.iter().map(|&v| v * t).collect())
    }

    /// The point reflection `−P` (a rotation by π, so orientation survives).
    pub fn negate(&self) -> Self {
        canonicalize(self.vertices.iter().map(|&v| -v).collect())
            .expect("negation preserves validity")
    }

    /// Whether `h_P ≤ h_Q + tol` on `n` scanned directions (a containment
    /// certificate for convex bodies).
    pub fn support_dominated_by(&self, other: &Self, n: usize, tol: f64) -> bool {
        (0..n).all(|i| {
            let u = Vec2::from_angle(2.0 * PI * (i as f64) / (n as f64));
            self.support_value(u) <= other.support_value(u) + tol
        })
    }
}

// ---------------------------------------------------------------------------
// canonical form
// ---------------------------------------------------------------------------

/// Brings a convex CCW cycle (possibly noisy) to canonical form.
///
/// Consecutive duplicates are dropped, exactly-collinear vertices (triangle
/// area below `1e-18·diam²`) are dropped, and runs of sub-tolerance kinks
/// (triangle area below `1e-14·diam²`) are simplified by an area-preserving
/// two-for-one vertex replacement, so that iterated symmetrization keeps the
/// vertex count bounded without bleeding area.
fn canonicalize(mut pts: Vec<Vec2>) -> Result<ConvexPolygon> {
    if pts.is_empty() {
        return Err(Error::invalid("empty vertex cycle"));
    }
    for p in &pts {
        if !p.is_finite() {
            return Err(Error::invalid("non-finite vertex"));
        }
    }
    let diam = diameter_estimate(&pts).max(f64::MIN_POSITIVE);
    let eps_dup = DUP_FACTOR * diam;
    let eps_fp = FP_COLLINEAR_FACTOR * diam * diam;
    let eps_pair = DEFAULT_TOLERANCES.collinear_area_factor * diam * diam;

    // Orientation: fix once up front (the degenerate classification below
    // does not depend on it).
    if shoelace2(&pts) < 0.0 {
        pts.reverse();
    }

    for _pass in 0..8 {
        let mut changed = false;

        // Consecutive duplicates (cyclically).
        if pts.len() >= 2 {
            let mut out: Vec<Vec2> = Vec::with_capacity(pts.len());
            for &p in &pts {
                if let Some(&last) = out.last() {
                    if (p - last).norm() <= eps_dup {
                        continue;
                    }
                }
                out.push(p);
            }
            while out.len() >= 2 && (out[0] - *out.last().unwrap()).norm() <= eps_dup {
                out.pop();
            }
            if out.len() != pts.len() {
                changed = true;
            }
            pts = out;
        }
        if pts.len() < 3 {
            break;
        }

        // Exactly-collinear vertices: dropping them loses only fp-level area.
        {
            let n = pts.len();
            let mut keep = vec![true; n];
            let mut dropped = 0usize;
            for i in 0..n {
                let a = pts[(i + n - 1) % n];
                let b = pts[i];
                let c = pts[(i + 1) % n];
                if keep[(i + n - 1) % n] && (b - a).cross(c - a).abs() <= 2.0 * eps_fp {
                    keep[i] = false;
                    dropped += 1;
                }
            }
            if dropped > 0 && n - dropped >= 1 {
                pts = pts
                    .iter()
                    .zip(&keep)
                    .filter_map(|(&p, &k)| k.then_some(p))
                    .collect();
                changed = true;
            }
        }
        if pts.len() < 3 {
            break;
        }

        // Area-preserving pair reduction: replace two consecutive vertices
        // B, C whose kinks are both below tolerance by one vertex E on the
        // line BC chosen so the shoelace sum is unchanged.
        {
            let n = pts.len();
            let mut out: Vec<Vec2> = Vec::with_capacity(n);
            let mut i = 0usize;
            let mut consumed_first = false;
            while i < n {
                if n - if consumed_first { 1 } else { 0 } < 4 {
                    out.extend_from_slice(&pts[i..]);
                    break;
                }
                let a = pts[(i + n - 1) % n];
                let b = pts[i];
                let c = pts[(i + 1) % n];
                let d = pts[(i + 2) % n];
                let tri_abc = (b - a).cross(c - a).abs();
                let tri_bcd = (c - b).cross(d - b).abs();
                let reducible = i + 1 < n
                    && !(i + 2 == n && consumed_first)
                    && tri_abc <= 2.0 * eps_pair
                    && tri_bcd <= 2.0 * eps_pair;
                if reducible {
                    if let Some(e) = pair_reduce_point(a, b, c, d) {
                        out.push(e);
                        if i + 2 == n {
                            consumed_first = true;
                        }
                        i += 2;
                        changed = true;
                        continue;
                    }
                }
                out.push(b);
                i += 1;
            }
            if consumed_first && !out.is_empty() {
                out.remove(0);
            }
            pts = out;
        }

        if !changed {
            break;
        }
    }

    // Degenerate classification.
    if pts.len() == 1 {
        return Ok(ConvexPolygon {
            vertices: pts,
            kind: PolygonKind::Point,
        });
    }
    let area2 = shoelace2(&pts);
    if pts.len() == 2 || area2.abs() <= 2.0 * eps_fp.max(1e-300) {
        // Collapse to the extreme pair along the dominant direction.
        let mut dir = Vec2::ZERO;
        for i in 1..pts.len() {
            let d = pts[i] - pts[0];
            if d.norm_sq() > dir.norm_sq() {
                dir = d;
            }
        }
        if dir.norm() <= eps_dup {
            return Ok(ConvexPolygon {
                vertices: vec![pts[0]],
                kind: PolygonKind::Point,
            });
        }
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut plo, mut phi) = (pts[0], pts[0]);
        for &p in &pts {
            let t = p.dot(dir);
            if t < lo {
                lo = t;
                plo = p;
            }
            if t > hi {
                hi = t;
                phi = p;
            }
        }
        let mut vs = vec![plo, phi];
        let i0 = lex_min_index(&vs);
        if i0 == 1 {
            vs.swap(0, 1);
        }
        return Ok(ConvexPolygon {
            vertices: vs,
            kind: PolygonKind::Segment,
        });
    }

    // Final convexity sweep: drop any vertex that turns the wrong way
    // (floating-point slivers from the reduction above; rare).
    loop {
        let n = pts.len();
        if n < 3 {
            break;
        }
        let mut bad = None;
        for i in 0..n {
            let a = pts[(i + n - 1) % n];
            let b = pts[i];
            let c = pts[(i + 1) % n];
            if (b - a).cross(c - a) < -2.0 * eps_fp {
                bad = Some(i);
                break;
            }
        }
        match bad {
            Some(i) => {
                pts.remove(i);
            }
            None => break,
        }
    }
    if pts.len() < 3 {
        return canonicalize(pts);
    }

    let start = lex_min_index(&pts);
    pts.rotate_left(start);
    Ok(ConvexPolygon {
        vertices: pts,
        kind: PolygonKind::FullDim,
    })
}

/// The replacement vertex for the area-preserving 2→1 reduction: `E` lies on
/// line `BC` with `area(A,E,D) = area(A,B,C,D)` as shoelace contributions.
fn pair_reduce_point(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> Option<Vec2> {
    let den = (c - b).cross(d - a);
    if den.abs() < 1e-300 {
        return None;
    }
    let tau = (c - b).cross(d - b) / den;
    if !tau.is_finite() {
        return None;
    }
    let e = b + (c - b) * tau;
    // E must stay local and keep the boundary convex.
    let span = (c - b).norm() + (b - a).norm().min((d - c).norm());
    if (e - b).norm() > 4.0 * span.max((c - b).norm()) {
        return None;
    }
    if (e - a).cross(d - e) < 0.0 {
        return None;
    }
    Some(e)
}

// ---------------------------------------------------------------------------
// Minkowski addition
// ---------------------------------------------------------------------------

/// Edge cycle in angular order starting from the (y, x)-lexicographic
/// minimum vertex. The angular order makes the two-list merge linear.
fn edge_cycle(p: &ConvexPolygon) -> (Vec2, Vec<(f64, Vec2)>) {
    let vs = p.vertices();
    match p.kind() {
        PolygonKind::Point => (vs[0], Vec::new()),
        PolygonKind::Segment => {
            let (a, b) = (vs[0], vs[1]);
            let (a, b) = if (a.y, a.x) <= (b.y, b.x) { (a, b) } else { (b, a) };
            let d = b - a;
            let base = d.angle();
            (a, vec![(base, d), (base + PI, -d)])
        }
        PolygonKind::FullDim => {
            let n = vs.len();
            let mut start = 0;
            for i in 1..n {
                if (vs[i].y, vs[i].x) < (vs[start].y, vs[start].x) {
                    start = i;
                }
            }
            let mut edges = Vec::with_capacity(n);
            let mut prev_angle = f64::NEG_INFINITY;
            for k in 0..n {
                let i = (start + k) % n;
                let e = vs[(i + 1) % n] - vs[i];
                let mut ang = e.angle();
                if ang < -1e-12 && k == 0 {
                    // First edge from the (y,x)-min vertex points weakly
                    // upward; tiny negatives are fp noise.
                    ang = 0.0;
                }
                while ang < prev_angle - 1e-12 {
                    ang += 2.0 * PI;
                }
                prev_angle = prev_angle.max(ang);
                edges.push((ang, e));
            }
            (vs[start], edges)
        }
    }
}

/// Minkowski sum `P + Q = {x + y}`, by merging the edge cycles in angular
/// order; parallel edges coalesce into one, which keeps the output canonical.
pub fn minkowski_sum(p: &ConvexPolygon, q: &ConvexPolygon) -> ConvexPolygon {
    if p.kind() == PolygonKind::Point {
        return q.translate(p.vertices()[0]);
    }
    if q.kind() == PolygonKind::Point {
        return p.translate(q.vertices()[0]);
    }
    let (p0, pe) = edge_cycle(p);
    let (q0, qe) = edge_cycle(q);
    let mut merged: Vec<Vec2> = Vec::with_capacity(pe.len() + qe.len());
    let (mut i, mut j) = (0, 0);
    while i < pe.len() || j < qe.len() {
        let take_p = if i >= pe.len() {
            false
        } else if j >= qe.len() {
            true
        } else {
            pe[i].0 <= qe[j].0
        };
        if take_p && j < qe.len() && (pe[i].0 - qe[j].0).abs() <= 1e-12 {
            merged.push(pe[i].1 + qe[j].1);
            i += 1;
            j += 1;
        } else if take_p {
            merged.push(pe[i].1);
            i += 1;
        } else {
            merged.push(qe[j].1);
            j += 1;
        }
    }
    let mut out = Vec::with_capacity(merged.len());
    let mut cur = p0 + q0;
    for e in merged {
        out.push(cur);
        cur = cur + e;
    }
    canonicalize(out).expect("sum of valid bodies is valid")
}

// ---------------------------------------------------------------------------
// symmetrization operators
// ---------------------------------------------------------------------------

/// Steiner symmetrization: every chord orthogonal to the line `H` is
/// replaced by the chord of equal length centered on `H`. Realized by
/// rotating `H` to the x-axis, re-centering the vertical extent between the
/// lower and upper boundary chains at the union of their breakpoints, and
/// rotating back. Preserves area exactly.
///
/// Zero-measure sections follow the limiting-case semantics: a point maps to
/// its projection, a non-vertical segment to its projection, and a segment
/// orthogonal to `H` to the centered segment of the same length.
pub fn steiner_symmetrize(p: &ConvexPolygon, h: &LineSubspace) -> Result<ConvexPolygon> {
    let theta = h
        .angle_2d()
        .ok_or_else(|| Error::Incompatible("polygon symmetrization needs a planar line".into()))?;
    let rot = |v: Vec2, ang: f64| v.rotated(ang);
    match p.kind() {
        PolygonKind::Point => {
            let u = Vec2::from_angle(theta);
            let proj = u * p.vertices()[0].dot(u);
            ConvexPolygon::point(proj)
        }
        PolygonKind::Segment => {
            let a = rot(p.vertices()[0], -theta);
            let b = rot(p.vertices()[1], -theta);
            let len = (b - a).norm();
            if (a.x - b.x).abs() <= 1e-12 * len.max(1.0) {
                let x = 0.5 * (a.x + b.x);
                ConvexPolygon::segment(
                    rot(Vec2::new(x, -len / 2.0), theta),
                    rot(Vec2::new(x, len / 2.0), theta),
                )
            } else {
                ConvexPolygon::segment(rot(Vec2::new(a.x, 0.0), theta), rot(Vec2::new(b.x, 0.0), theta))
            }
        }
        PolygonKind::FullDim => {
            let vs: Vec<Vec2> = p.vertices().iter().map(|&v| rot(v, -theta)).collect();
            let n = vs.len();

            let mut i_bl = 0; // min (x, y)
            let mut i_br = 0; // max x, then min y
            let mut i_tr = 0; // max (x, y)
            let mut i_tl = 0; // min x, then max y
            for (i, v) in vs.iter().enumerate().skip(1) {
                if (v.x, v.y) < (vs[i_bl].x, vs[i_bl].y) {
                    i_bl = i;
                }
                if (v.x, -v.y) > (vs[i_br].x, -vs[i_br].y) {
                    i_br = i;
                }
                if (v.x, v.y) > (vs[i_tr].x, vs[i_tr].y) {
                    i_tr = i;
                }
                if (v.x, -v.y) < (vs[i_tl].x, -vs[i_tl].y) {
                    i_tl = i;
                }
            }

            let walk = |from: usize, to: usize| -> Vec<Vec2> {
                let mut out = Vec::new();
                let mut k = from;
                loop {
                    out.push(vs[k]);
                    if k == to {
                        break;
                    }
                    k = (k + 1) % n;
                }
                out
            };
            let lower = monotone_x(walk(i_bl, i_br));
            let mut upper = walk(i_tr, i_tl);
            upper.reverse();
            let upper = monotone_x(upper);

            // Union of breakpoint abscissae.
            let mut xs: Vec<f64> = Vec::with_capacity(lower.len() + upper.len());
            let (mut a, mut b) = (0, 0);
            while a < lower.len() || b < upper.len() {
                let x = match (lower.get(a), upper.get(b)) {
                    (Some(l), Some(u)) => {
                        if l.x <= u.x {
                            a += 1;
                            if (l.x - u.x).abs() == 0.0 {
                                b += 1;
                            }
                            l.x
                        } else {
                            b += 1;
                            u.x
                        }
                    }
                    (Some(l), None) => {
                        a += 1;
                        l.x
                    }
                    (None, Some(u)) => {
                        b += 1;
                        u.x
                    }
                    (None, None) => break,
                };
                if xs.last().map_or(true, |&last| x > last) {
                    xs.push(x);
                }
            }

            let lo_y = eval_chain(&lower, &xs);
            let up_y = eval_chain(&upper, &xs);
            let m = xs.len();
            let mut out: Vec<Vec2> = Vec::with_capacity(2 * m);
            for k in 0..m {
                let w = (0.5 * (up_y[k] - lo_y[k])).max(0.0);
                out.push(Vec2::new(xs[k], -w));
            }
            for k in (0..m).rev() {
                let w = (0.5 * (up_y[k] - lo_y[k])).max(0.0);
                out.push(Vec2::new(xs[k], w));
            }
            let back: Vec<Vec2> = out.into_iter().map(|v| rot(v, theta)).collect();
            canonicalize(back)
        }
    }
}

fn monotone_x(chain: Vec<Vec2>) -> Vec<Vec2> {
    let mut out: Vec<Vec2> = Vec::with_capacity(chain.len());
    for p in chain {
        match out.last() {
            Some(last) if p.x <= last.x => {}
            _ => out.push(p),
        }
    }
    out
}

/// Evaluates a piecewise-linear chain (strictly increasing x) at each query
/// abscissa, clamping outside the span.
fn eval_chain(chain: &[Vec2], xs: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(xs.len());
    let last = chain.len() - 1;
    let mut j = 0usize;
    for &x in xs {
        if chain.len() == 1 || x <= chain[0].x {
            out.push(chain[0].y);
            continue;
        }
        if x >= chain[last].x {
            out.push(chain[last].y);
            continue;
        }
        while j + 1 < last && chain[j + 1].x < x {
            j += 1;
        }
        let (p, q) = (chain[j], chain[j + 1]);
        let t = if q.x > p.x {
            ((x - p.x) / (q.x - p.x)).clamp(0.0, 1.0)
        } else {
            0.0
        };
        out.push(p.y + t * (q.y - p.y));
    }
    out
}

/// Minkowski symmetrization `(P + R_H P)/2`: preserves mean width, never
/// decreases area.
pub fn minkowski_symmetrize(p: &ConvexPolygon, h: &LineSubspace) -> Result<ConvexPolygon> {
    let reflected = p.reflect_across(h)?;
    minkowski_sum(p, &reflected).scale(0.5)
}

/// Central Minkowski symmetrization `(P + (−P))/2`: origin-symmetric and
/// idempotent.
pub fn central_symmetrize(p: &ConvexPolygon) -> ConvexPolygon {
    minkowski_sum(p, &p.negate())
        .scale(0.5)
        .expect("scaling by 1/2 always valid")
}

/// Fiber symmetrization with respect to a line of ℝ².
///
/// Each section orthogonal to `H` is replaced by its central Minkowski
/// symmetrization inside that section; for one-dimensional sections this is
/// the centered interval of the same length, i.e. exactly the chord
/// re-centering performed by [`steiner_symmetrize`]. The two operators
/// coincide on convex bodies when `H` is a hyperplane, which in the plane is
/// every line; this entry point documents the coincidence.
pub fn fiber_symmetrize(p: &ConvexPolygon, h: &LineSubspace) -> Result<ConvexPolygon> {
    steiner_symmetrize(p, h)
}

// ---------------------------------------------------------------------------
// metrics
// ---------------------------------------------------------------------------

/// Support structure for exact direction sweeps: vertices in active order
/// with the event angles at which the support point changes.
struct Fan {
    verts: Vec<Vec2>,
    /// `events[k]` is the direction angle (in `[0, 2π)`, ascending) at which
    /// the active vertex switches from `verts[k]` to `verts[(k+1) % n]`.
    events: Vec<f64>,
}

fn norm_angle(a: f64) -> f64 {
    let mut x = a % (2.0 * PI);
    if x < 0.0 {
        x += 2.0 * PI;
    }
    x
}

impl Fan {
    fn of(p: &ConvexPolygon) -> Fan {
        match p.kind() {
            PolygonKind::Point => Fan {
                verts: vec![p.vertices()[0]],
                events: Vec::new(),
            },
            PolygonKind::Segment => {
                let (a, b) = (p.vertices()[0], p.vertices()[1]);
                let n1 = norm_angle((b - a).angle() - PI / 2.0);
                let n2 = norm_angle((a - b).angle() - PI / 2.0);
                // events ascending; verts[k] active before events[k].
                if n1 <= n2 {
                    Fan {
                        verts: vec![a, b],
                        events: vec![n1, n2],
                    }
                } else {
                    Fan {
                        verts: vec![b, a],
                        events: vec![n2, n1],
                    }
                }
            }
            PolygonKind::FullDim => {
                let vs = p.vertices();
                let n = vs.len();
                let mut raw: Vec<f64> = (0..n)
                    .map(|i| norm_angle((vs[(i + 1) % n] - vs[i]).angle() - PI / 2.0))
                    .collect();
                // raw is cyclically ascending; rotate so it is ascending.
                let mut wrap = 0;
                for i in 1..n {
                    if raw[i] < raw[i - 1] {
                        wrap = i;
                        break;
                    }
                }
                raw.rotate_left(wrap);
                let mut verts: Vec<Vec2> = (0..n).map(|k| vs[(wrap + k) % n]).collect();
                // verts[k] is the tail of edge k; the support point on the
                // arc before events[k] is verts[k], after is verts[k+1].
                let events = raw;
                // Guard monotonicity against fp ties.
                debug_assert!(events.windows(2).all(|w| w[1] >= w[0] - 1e-12));
                let _ = &mut verts;
                Fan { verts, events }
            }
        }
    }

    fn len(&self) -> usize {
        self.verts.len()
    }

    /// Index of the vertex active at direction angle `theta`.
    fn active_at(&self, theta: f64) -> usize {
        if self.events.is_empty() {
            return 0;
        }
        let t = norm_angle(theta);
        // First event strictly greater than t; active vertex is that index.
        match self
            .events
            .binary_search_by(|e| e.partial_cmp(&t).unwrap())
        {
            Ok(k) => (k + 1) % self.len(),
            Err(k) => k % self.len(),
        }
    }

    /// Support values at `n` equally spaced angles `2πi/n`, via one rotating
    /// sweep.
    fn sample_equally_spaced(&self, n: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(n);
        if self.events.is_empty() {
            for i in 0..n {
                let u = Vec2::from_angle(2.0 * PI * (i as f64) / (n as f64));
                out.push(self.verts[0].dot(u));
            }
            return out;
        }
        let mut active = self.active_at(0.0);
        let mut next_event = self.active_event_after(0.0);
        for i in 0..n {
            let theta = 2.0 * PI * (i as f64) / (n as f64);
            while let Some((idx, ang)) = next_event {
                if ang <= theta {
                    active = (idx + 1) % self.len();
                    next_event = self.event_after_index(idx);
                } else {
                    break;
                }
            }
            out.push(self.verts[active].dot(Vec2::from_angle(theta)));
        }
        out
    }

    fn active_event_after(&self, theta: f64) -> Option<(usize, f64)> {
        if self.events.is_empty() {
            return None;
        }
        let t = norm_angle(theta);
        let k = match self
            .events
            .binary_search_by(|e| e.partial_cmp(&t).unwrap())
        {
            Ok(k) => k,
            Err(k) => k,
        };
        if k < self.events.len() {
            Some((k, self.events[k]))
        } else {
            None
        }
    }

    fn event_after_index(&self, idx: usize) -> Option<(usize, f64)> {
        (idx + 1 < self.events.len()).then(|| (idx + 1, self.events[idx + 1]))
    }
}

/// Hausdorff distance between convex bodies: `sup_{u ∈ 𝕊¹} |h_P(u) − h_Q(u)|`,
/// evaluated exactly by maximizing the single-sinusoid support difference on
/// each arc of the merged normal fans (no direction sampling).
pub fn hausdorff_distance(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    hausdorff_between_fans(&Fan::of(p), &Fan::of(q))
}

fn hausdorff_between_fans(fp: &Fan, fq: &Fan) -> f64 {
    if fp.events.is_empty() && fq.events.is_empty() {
        return (fp.verts[0] - fq.verts[0]).norm();
    }
    let mut events: Vec<f64> = fp.events.iter().chain(fq.events.iter()).copied().collect();
    events.sort_by(|a, b| a.partial_cmp(b).unwrap());
    events.dedup();
    let m = events.len();
    let mut best: f64 = 0.0;
    for k in 0..m {
        let a = events[k];
        let b = if k + 1 < m {
            events[k + 1]
        } else {
            events[0] + 2.0 * PI
        };
        // Active vertices on the open arc (a, b).
        let mid = 0.5 * (a + b);
        let pv = fp.verts[fp.active_at(mid)];
        let qv = fq.verts[fq.active_at(mid)];
        let d = pv - qv;
        if d.norm_sq() == 0.0 {
            continue;
        }
        let ua = Vec2::from_angle(a);
        let ub = Vec2::from_angle(b);
        best = best.max(d.dot(ua).abs()).max(d.dot(ub).abs());
        let phi = d.angle();
        for cand in [phi, phi + PI] {
            let c = norm_angle(cand);
            let mut cc = c;
            while cc < a {
                cc += 2.0 * PI;
            }
            if cc <= b {
                best = best.max(d.norm());
            }
        }
    }
    best
}

/// Exact min and max of the support function over all directions.
pub fn support_extrema(p: &ConvexPolygon) -> (f64, f64) {
    let fan = Fan::of(p);
    if fan.events.is_empty() {
        let r = fan.verts[0].norm();
        return (-r, r);
    }
    let m = fan.events.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for k in 0..m {
        let a = fan.events[k];
        let b = if k + 1 < m {
            fan.events[k + 1]
        } else {
            fan.events[0] + 2.0 * PI
        };
        let v = fan.verts[(k + 1) % fan.len()];
        let ha = v.dot(Vec2::from_angle(a));
        let hb = v.dot(Vec2::from_angle(b));
        lo = lo.min(ha).min(hb);
        hi = hi.max(ha).max(hb);
        if v.norm_sq() > 0.0 {
            let phi = v.angle();
            for (cand, val) in [(phi, v.norm()), (phi + PI, -v.norm())] {
                let mut cc = norm_angle(cand);
                while cc < a {
                    cc += 2.0 * PI;
                }
                if cc <= b {
                    lo = lo.min(val);
                    hi = hi.max(val);
                }
            }
        }
    }
    (lo, hi)
}

/// The support-function mean point `(1/π) ∫ h(u) u du` (the 2D Steiner
/// point), exact per normal-fan arc.
pub fn support_mean_point(p: &ConvexPolygon) -> Vec2 {
    let fan = Fan::of(p);
    if fan.events.is_empty() {
        return fan.verts[0];
    }
    let m = fan.events.len();
    let mut acc = Vec2::ZERO;
    for k in 0..m {
        let a = fan.events[k];
        let b = if k + 1 < m {
            fan.events[k + 1]
        } else {
            fan.events[0] + 2.0 * PI
        };
        let v = fan.verts[(k + 1) % fan.len()];
        // ∫ (vx cosθ + vy sinθ) · (cosθ, sinθ) dθ over [a, b], closed form.
        let i_cc = 0.5 * (b - a) + 0.25 * ((2.0 * b).sin() - (2.0 * a).sin());
        let i_ss = 0.5 * (b - a) - 0.25 * ((2.0 * b).sin() - (2.0 * a).sin());
        let i_sc = -0.25 * ((2.0 * b).cos() - (2.0 * a).cos());
        acc = acc + Vec2::new(v.x * i_cc + v.y * i_sc, v.x * i_sc + v.y * i_ss);
    }
    acc * (1.0 / PI)
}

/// Deviation from a ball: centers the body at its support mean point and
/// returns `max_u h − min_u h`. Zero exactly for balls (up to polygon
/// discretization). Degenerate bodies are rejected.
pub fn ball_gap(p: &ConvexPolygon) -> Result<f64> {
    if p.kind() != PolygonKind::FullDim {
        return Err(Error::invalid("ball_gap needs a full-dimensional body"));
    }
    let c = support_mean_point(p);
    let centered = p.translate(-c);
    let (lo, hi) = support_extrema(&centered);
    Ok(hi - lo)
}

/// Intersection of two convex bodies by half-plane clipping
/// (Sutherland–Hodgman against each edge of the clip polygon).
pub fn convex_intersection(subject: &ConvexPolygon, clip: &ConvexPolygon) -> Option<Vec<Vec2>> {
    if subject.kind() != PolygonKind::FullDim || clip.kind() != PolygonKind::FullDim {
        return None;
    }
    let mut out: Vec<Vec2> = subject.vertices().to_vec();
    let cv = clip.vertices();
    let n = cv.len();
    for i in 0..n {
        let a = cv[i];
        let b = cv[(i + 1) % n];
        let e = b - a;
        let mut next: Vec<Vec2> = Vec::with_capacity(out.len() + 2);
        let m = out.len();
        for k in 0..m {
            let s = out[k];
            let t = out[(k + 1) % m];
            let sc = e.cross(s - a);
            let tc = e.cross(t - a);
            let s_in = sc >= 0.0;
            let t_in = tc >= 0.0;
            if s_in {
                next.push(s);
            }
            if s_in != t_in {
                let denom = sc - tc;
                if denom.abs() > 0.0 {
                    let r = sc / denom;
                    next.push(s + (t - s) * r);
                }
            }
        }
        out = next;
        if out.len() < 3 {
            return None;
        }
    }
    Some(out)
}

/// Area of the symmetric difference (the Nikodym distance on convex bodies):
/// `area(P) + area(Q) − 2·area(P ∩ Q)`.
pub fn symmetric_difference_area(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    let inter = match convex_intersection(p, q) {
        Some(pts) => 0.5 * shoelace2(&pts).abs(),
        None => 0.0,
    };
    (p.area() + q.area() - 2.0 * inter).max(0.0)
}
