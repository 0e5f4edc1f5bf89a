//! Elementary linear geometry: vectors, lines and subspaces through the
//! origin, reflections, projections, and rotations with an operator-norm
//! distance.
//!
//! Everything here is immutable after construction and all operations are
//! pure functions, so values can be freely shared across threads.

use crate::config::DEFAULT_TOLERANCES;
use crate::error::{Error, Result};

/// A plain 2D vector. The workhorse of the polygon and raster modules.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Unit vector at `angle` radians from the positive x-axis.
    pub fn from_angle(angle: f64) -> Self {
        Vec2 {
            x: angle.cos(),
            y: angle.sin(),
        }
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Counterclockwise rotation by `angle` radians.
    pub fn rotated(self, angle: f64) -> Vec2 {
        let (s, c) = angle.sin_cos();
        Vec2 {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }

    /// Perpendicular vector (counterclockwise quarter turn).
    pub fn perp(self) -> Vec2 {
        Vec2 {
            x: -self.y,
            y: self.x,
        }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl std::ops::Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, t: f64) -> Vec2 {
        Vec2::new(self.x * t, self.y * t)
    }
}

/// A point of ℝⁿ, n ≥ 2.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::invalid("points need dimension >= 2"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("non-finite coordinate"));
        }
        Ok(Point { coords })
    }

    pub fn from_vec2(v: Vec2) -> Self {
        Point {
            coords: vec![v.x, v.y],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dot(&self, other: &Point) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        self.sub(other).norm()
    }
}

/// A unit vector of 𝕊ⁿ⁻¹.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitDirection {
    coords: Vec<f64>,
}

impl UnitDirection {
    /// Accepts a vector already normalized to within 1e-12.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        let n: f64 = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !n.is_finite() || (n - 1.0).abs() > DEFAULT_TOLERANCES.geometry {
            return Err(Error::invalid(format!("not a unit vector: |v| = {n}")));
        }
        Ok(UnitDirection { coords })
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn from_vector(coords: Vec<f64>) -> Result<Self> {
        let n: f64 = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !n.is_finite() || n == 0.0 {
            return Err(Error::invalid("cannot normalize zero or non-finite vector"));
        }
        Ok(UnitDirection {
            coords: coords.into_iter().map(|c| c / n).collect(),
        })
    }

    pub fn from_angle_2d(angle: f64) -> Self {
        UnitDirection {
            coords: vec![angle.cos(), angle.sin()],
        }
    }

    pub fn standard_basis(dim: usize, axis: usize) -> Self {
        let mut coords = vec![0.0; dim];
        coords[axis] = 1.0;
        UnitDirection { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dot(&self, other: &UnitDirection) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn as_vec2(&self) -> Option<Vec2> {
        (self.coords.len() == 2).then(|| Vec2::new(self.coords[0], self.coords[1]))
    }
}

/// A linear subspace through the origin.
///
/// In the plane a line is stored as its angle in `[0, π)` (a line equals its
/// opposite direction, so the angle is reduced mod π); in higher dimension a
/// subspace carries an orthonormal basis, re-orthonormalized on construction
/// if drift exceeds the geometry tolerance.
#[derive(Debug, Clone, PartialEq)]
pub enum LineSubspace {
    /// A line of ℝ² at `angle ∈ [0, π)`.
    Planar { angle: f64 },
    /// A subspace of ℝⁿ spanned by an orthonormal basis.
    Spanned { ambient: usize, basis: Vec<Vec<f64>> },
}

/// Reduces an angle to `[0, π)`.
pub fn line_angle_mod_pi(angle: f64) -> f64 {
    let mut a = angle % std::f64::consts::PI;
    if a < 0.0 {
        a += std::f64::consts::PI;
    }
    // -0.0 and exact π both collapse to 0.
    if a >= std::f64::consts::PI {
        a = 0.0;
    }
    if a == 0.0 {
        a = 0.0;
    }
    a
}

impl LineSubspace {
    /// Line of ℝ² at the given angle (any real; reduced mod π).
    pub fn line_2d(angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::invalid("non-finite line angle"));
        }
        Ok(LineSubspace::Planar {
            angle: line_angle_mod_pi(angle),
        })
    }

    /// Line of ℝ² through the origin and `v`.
    pub fn line_2d_through(v: Vec2) -> Result<Self> {
        if v.norm() == 0.0 || !v.is_finite() {
            return Err(Error::invalid("line direction must be nonzero"));
        }
        Self::line_2d(v.angle())
    }

    /// Subspace spanned by the given vectors; the basis is orthonormalized
    /// by Gram–Schmidt when it drifts beyond the geometry tolerance.
    pub fn from_basis(ambient: usize, vectors: Vec<Vec<f64>>) -> Result<Self> {
        if vectors.is_empty() || vectors.len() >= ambient {
            return Err(Error::invalid(format!(
                "subspace dimension must be in 1..{ambient}"
            )));
        }
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
        }
        let mut drift: f64 = 0.0;
        for (i, v) in vectors.iter().enumerate() {
            let n: f64 = v.iter().map(|c| c * c).sum::<f64>().sqrt();
            drift = drift.max((n - 1.0).abs());
            for w in &vectors[..i] {
                let d: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
                drift = drift.max(d.abs());
            }
        }
        let basis = if drift > DEFAULT_TOLERANCES.geometry {
            gram_schmidt(&vectors)?
        } else {
            vectors
        };
        Ok(LineSubspace::Spanned { ambient, basis })
    }

    /// Hyperplane orthogonal to `normal` (basis built by completing `normal`
    /// to an orthonormal frame and dropping it).
    pub fn hyperplane_orthogonal_to(normal: &UnitDirection) -> Result<Self> {
        let n = normal.dim();
        if n == 2 {
            let v = normal.as_vec2().unwrap().perp();
            return Self::line_2d(v.angle());
        }
        // Start from the standard basis, orthogonalize against the normal.
        let mut candidates: Vec<Vec<f64>> = Vec::with_capacity(n);
        candidates.push(normal.coords().to_vec());
        for axis in 0..n {
            let mut e = vec![0.0; n];
            e[axis] = 1.0;
            candidates.push(e);
        }
        let frame = gram_schmidt(&candidates)?;
        Self::from_basis(n, frame[1..n].to_vec())
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            LineSubspace::Planar { .. } => 2,
            LineSubspace::Spanned { ambient, .. } => *ambient,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            LineSubspace::Planar { .. } => 1,
            LineSubspace::Spanned { basis, .. } => basis.len(),
        }
    }

    /// The angle of a planar line, if this is one.
    pub fn angle_2d(&self) -> Option<f64> {
        match self {
            LineSubspace::Planar { angle } => Some(*angle),
            LineSubspace::Spanned { .. } => None,
        }
    }

    fn basis_vectors(&self) -> Vec<Vec<f64>> {
        match self {
            LineSubspace::Planar { angle } => vec![vec![angle.cos(), angle.sin()]],
            LineSubspace::Spanned { basis, .. } => basis.clone(),
        }
    }

    fn check_dim(&self, x: &Point) -> Result<()> {
        if x.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: x.dim(),
            });
        }
        Ok(())
    }

    /// Orthogonal projection onto the subspace: `Σ (x·bᵢ) bᵢ`.
    pub fn project(&self, x: &Point) -> Result<Point> {
        self.check_dim(x)?;
        let mut out = vec![0.0; x.dim()];
        for b in self.basis_vectors() {
            let t: f64 = x.coords().iter().zip(&b).map(|(a, c)| a * c).sum();
            for (o, c) in out.iter_mut().zip(&b) {
                *o += t * c;
            }
        }
        Point::new(out)
    }

    /// Reflection across the subspace: `x − 2·P_{H⊥}(x) = 2·P_H(x) − x`.
    pub fn reflect(&self, x: &Point) -> Result<Point> {
        let p = self.project(x)?;
        let coords = p
            .coords()
            .iter()
            .zip(x.coords())
            .map(|(p, x)| 2.0 * p - x)
            .collect();
        Point::new(coords)
    }

    /// Planar fast path for reflecting a [`Vec2`].
    pub fn reflect_vec2(&self, v: Vec2) -> Result<Vec2> {
        match self {
            LineSubspace::Planar { angle } => {
                let (s2, c2) = (2.0 * angle).sin_cos();
                Ok(Vec2::new(c2 * v.x + s2 * v.y, s2 * v.x - c2 * v.y))
            }
            LineSubspace::Spanned { .. } => Err(Error::DimensionMismatch {
                expected: 2,
                got: self.ambient_dim(),
            }),
        }
    }
}

/// Reflects a point across a subspace. See [`LineSubspace::reflect`].
pub fn reflect_point(x: &Point, h: &LineSubspace) -> Result<Point> {
    h.reflect(x)
}

/// Projects a point onto a subspace. See [`LineSubspace::project`].
pub fn project_point(x: &Point, h: &LineSubspace) -> Result<Point> {
    h.project(x)
}

fn gram_schmidt(vectors: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &out {
            let d: f64 = w.iter().zip(b).map(|(a, c)| a * c).sum();
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= d * bi;
            }
        }
        let n: f64 = w.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n > 1e-9 {
            for wi in w.iter_mut() {
                *wi /= n;
            }
            out.push(w);
        }
    }
    if out.is_empty() {
        return Err(Error::invalid("degenerate basis"));
    }
    Ok(out)
}

/// An n×n rotation (orthogonal, determinant +1), stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationOp {
    n: usize,
    m: Vec<f64>,
}

impl RotationOp {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            m[i * n + i] = 1.0;
        }
        RotationOp { n, m }
    }

    /// Counterclockwise planar rotation of ℝ² by `angle` radians.
    pub fn planar_2d(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        RotationOp {
            n: 2,
            m: vec![c, -s, s, c],
        }
    }

    /// Validates orthogonality (`‖QᵀQ − I‖_∞ ≤ 1e-10`) and `det > 0`.
    pub fn from_matrix(n: usize, m: Vec<f64>) -> Result<Self> {
        if m.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: m.len(),
            });
        }
        let r = RotationOp { n, m };
        let mut drift: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut d = 0.0;
                for k in 0..n {
                    d += r.m[k * n + i] * r.m[k * n + j];
                }
                let target = if i == j { 1.0 } else { 0.0 };
                drift = drift.max((d - target).abs());
            }
        }
        if drift > DEFAULT_TOLERANCES.orthonormality {
            return Err(Error::invalid(format!(
                "matrix is not orthogonal: drift {drift:.3e}"
            )));
        }
        if r.det() <= 0.0 {
            return Err(Error::invalid("reflections are not rotations: det <= 0"));
        }
        Ok(r)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[f64] {
        &self.m
    }

    pub fn det(&self) -> f64 {
        det_lu(self.n, &self.m)
    }

    pub fn apply(&self, x: &Point) -> Result<Point> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.dim(),
            });
        }
        let mut out = vec![0.0; self.n];
        for i in 0..self.n {
            let mut acc = 0.0;
            for j in 0..self.n {
                acc += self.m[i * self.n + j] * x.coords()[j];
            }
            out[i] = acc;
        }
        Point::new(out)
    }

    pub fn apply_direction(&self, u: &UnitDirection) -> Result<UnitDirection> {
        let p = self.apply(&Point::new(u.coords().to_vec())?)?;
        UnitDirection::from_vector(p.coords().to_vec())
    }

    /// Planar fast path.
    pub fn apply_vec2(&self, v: Vec2) -> Result<Vec2> {
        if self.n != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: self.n,
            });
        }
        Ok(Vec2::new(
            self.m[0] * v.x + self.m[1] * v.y,
            self.m[2] * v.x + self.m[3] * v.y,
        ))
    }

    pub fn compose(&self, rhs: &RotationOp) -> Result<RotationOp> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: rhs.n,
            });
        }
        let n = self.n;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += self.m[i * n + k] * rhs.m[k * n + j];
                }
                m[i * n + j] = acc;
            }
        }
        Ok(RotationOp { n, m })
    }

    /// The inverse rotation (transpose).
    pub fn inverse(&self) -> RotationOp {
        let n = self.n;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = self.m[j * n + i];
            }
        }
        RotationOp { n, m }
    }

    /// For 2D rotations, the signed rotation angle in `(−π, π]`.
    pub fn angle_2d(&self) -> Option<f64> {
        (self.n == 2).then(|| self.m[2].atan2(self.m[0]))
    }
}

/// The rotation acting in `span{u, v}` that maps `u` to `v` and fixes the
/// orthogonal complement of that plane.
///
/// Exactly antipodal inputs are rejected: the rotation plane would be
/// ambiguous, and callers must perturb or choose a plane themselves.
pub fn rotation_between(u: &UnitDirection, v: &UnitDirection) -> Result<RotationOp> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            got: v.dim(),
        });
    }
    let n = u.dim();
    let c = u.dot(v).clamp(-1.0, 1.0);
    if c >= 1.0 - 1e-15 {
        return Ok(RotationOp::identity(n));
    }
    if c <= -1.0 + 1e-12 {
        return Err(Error::AntipodalDirections);
    }
    // w: the component of v orthogonal to u, normalized. Then in the
    // orthonormal frame {u, w} the map is a plane rotation by arccos(c).
    let mut w: Vec<f64> = v
        .coords()
        .iter()
        .zip(u.coords())
        .map(|(vi, ui)| vi - c * ui)
        .collect();
    let wn: f64 = w.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in w.iter_mut() {
        *x /= wn;
    }
    let s = wn; // sin of the rotation angle: ‖v − (u·v)u‖ = √(1 − c²)

    let mut m = vec![0.0; n * n];
    for i in 0..n {
        m[i * n + i] = 1.0;
    }
    let uc = u.coords();
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] += (c - 1.0) * (uc[i] * uc[j] + w[i] * w[j]);
            m[i * n + j] += s * (w[i] * uc[j] - uc[i] * w[j]);
        }
    }
    RotationOp::from_matrix(n, m)
}

/// Sup-operator-norm distance between two rotations: the largest singular
/// value of `A − B`.
pub fn rotation_distance(a: &RotationOp, b: &RotationOp) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    let n = a.dim();
    let d: Vec<f64> = a.m.iter().zip(&b.m).map(|(x, y)| x - y).collect();
    // σ_max(D) = sqrt(λ_max(DᵀD)); DᵀD is symmetric PSD.
    let mut s = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += d[k * n + i] * d[k * n + j];
            }
            s[i * n + j] = acc;
        }
    }
    Ok(sym_eig_max(n, &mut s).max(0.0).sqrt())
}

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi sweeps.
fn sym_eig_max(n: usize, s: &mut [f64]) -> f64 {
    for _ in 0..64 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += s[i * n + j].abs();
            }
        }
        if off < 1e-15 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = s[p * n + q];
                if apq.abs() < 1e-30 {
                    continue;
                }
                let app = s[p * n + p];
                let aqq = s[q * n + q];
                let theta = 0.5 * (aqq - app).atan2(2.0 * apq) * -1.0;
                let (sn, cs) = theta.sin_cos();
                for k in 0..n {
                    let skp = s[k * n + p];
                    let skq = s[k * n + q];
                    s[k * n + p] = cs * skp - sn * skq;
                    s[k * n + q] = sn * skp + cs * skq;
                }
                for k in 0..n {
                    let spk = s[p * n + k];
                    let sqk = s[q * n + k];
                    s[p * n + k] = cs * spk - sn * sqk;
                    s[q * n + k] = sn * spk + cs * sqk;
                }
            }
        }
    }
    (0..n).map(|i| s[i * n + i]).fold(f64::NEG_INFINITY, f64::max)
}

fn det_lu(n: usize, m: &[f64]) -> f64 {
    let mut a = m.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if a[r * n + col].abs() > a[piv * n + col].abs() {
                piv = r;
            }
        }
        if a[piv * n + col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            for k in 0..n {
                a.swap(col * n + k, piv * n + k);
            }
            det = -det;
        }
        det *= a[col * n + col];
        for r in (col + 1)..n {
            let f = a[r * n + col] / a[col * n + col];
            for k in col..n {
                a[r * n + k] -= f * a[col * n + k];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(coords: &[f64]) -> Point {
        Point::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn reflect_across_x_axis() {
        let h = LineSubspace::line_2d(0.0).unwrap();
        let r = reflect_point(&pt(&[1.0, 2.0]), &h).unwrap();
        assert_eq!(r.coords(), &[1.0, -2.0]);
    }

    #[test]
    fn reflect_across_diagonal_swaps_axes() {
        let h = LineSubspace::line_2d(std::f64::consts::FRAC_PI_4).unwrap();
        let r = reflect_point(&pt(&[1.0, 0.0]), &h).unwrap();
        assert!((r.coords()[0] - 0.0).abs() < 1e-12);
        assert!((r.coords()[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reflect_fixes_points_on_the_line() {
        let h = LineSubspace::line_2d(0.7).unwrap();
        let x = Point::new(vec![3.0 * 0.7f64.cos(), 3.0 * 0.7f64.sin()]).unwrap();
        let r = reflect_point(&x, &h).unwrap();
        assert!(r.distance(&x) < 1e-12);
    }

    #[test]
    fn project_onto_x_axis() {
        let h = LineSubspace::line_2d(0.0).unwrap();
        let p = project_point(&pt(&[3.0, 4.0]), &h).unwrap();
        assert_eq!(p.coords(), &[3.0, 0.0]);
    }

    #[test]
    fn project_is_idempotent() {
        let h = LineSubspace::from_basis(3, vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]])
            .unwrap();
        let p1 = project_point(&pt(&[1.0, 1.0, 1.0]), &h).unwrap();
        assert_eq!(p1.coords(), &[1.0, 1.0, 0.0]);
        let p2 = project_point(&p1, &h).unwrap();
        assert!(p1.distance(&p2) < 1e-15);
    }

    #[test]
    fn projection_dimension_mismatch_is_an_error() {
        let h = LineSubspace::line_2d(0.0).unwrap();
        assert!(project_point(&pt(&[1.0, 2.0, 3.0]), &h).is_err());
    }

    #[test]
    fn rotation_between_axes_2d() {
        let u = UnitDirection::standard_basis(2, 0);
        let v = UnitDirection::standard_basis(2, 1);
        let r = rotation_between(&u, &v).unwrap();
        // Quarter turn: [[0, -1], [1, 0]].
        let m = r.matrix();
        assert!((m[0]).abs() < 1e-12 && (m[1] + 1.0).abs() < 1e-12);
        assert!((m[2] - 1.0).abs() < 1e-12 && (m[3]).abs() < 1e-12);
    }

    #[test]
    fn rotation_between_equal_directions_is_identity() {
        let u = UnitDirection::from_angle_2d(1.1);
        let r = rotation_between(&u, &u).unwrap();
        assert_eq!(r, RotationOp::identity(2));
    }

    #[test]
    fn rotation_between_fixes_orthogonal_complement_3d() {
        let u = UnitDirection::standard_basis(3, 0);
        let v = UnitDirection::standard_basis(3, 2);
        let r = rotation_between(&u, &v).unwrap();
        let e2 = r.apply(&pt(&[0.0, 1.0, 0.0])).unwrap();
        assert!(e2.distance(&pt(&[0.0, 1.0, 0.0])) < 1e-12);
        let ru = r.apply(&pt(&[1.0, 0.0, 0.0])).unwrap();
        assert!(ru.distance(&pt(&[0.0, 0.0, 1.0])) < 1e-12);
        assert!((r.det() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn rotation_between_antipodal_is_rejected() {
        let u = UnitDirection::standard_basis(2, 0);
        let v = UnitDirection::new(vec![-1.0, 0.0]).unwrap();
        assert!(matches!(
            rotation_between(&u, &v),
            Err(Error::AntipodalDirections)
        ));
    }

    #[test]
    fn distance_between_equal_rotations_is_zero() {
        let a = RotationOp::planar_2d(0.3);
        assert!(rotation_distance(&a, &a).unwrap() < 1e-15);
    }

    #[test]
    fn distance_identity_to_planar_rotation() {
        // Closed form: singular values of I − R(α) are both 2·sin(α/2).
        for &alpha in &[0.1, 0.5, 1.0, 2.0] {
            let d = rotation_distance(&RotationOp::identity(2), &RotationOp::planar_2d(alpha))
                .unwrap();
            assert!(
                (d - 2.0 * (alpha / 2.0).sin()).abs() < 1e-12,
                "alpha {alpha}: {d}"
            );
        }
    }

    fn random_rotation_3d(rng: &mut ChaCha8Rng) -> RotationOp {
        let u = UnitDirection::from_vector(vec![
            rng.gen::<f64>() - 0.5,
            rng.gen::<f64>() - 0.5,
            rng.gen::<f64>() - 0.5,
        ])
        .unwrap();
        let v = UnitDirection::from_vector(vec![
            rng.gen::<f64>() - 0.5,
            rng.gen::<f64>() - 0.5,
            rng.gen::<f64>() - 0.5,
        ])
        .unwrap();
        rotation_between(&u, &v).unwrap()
    }

    #[test]
    fn rotation_distance_metric_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = random_rotation_3d(&mut rng);
            let b = random_rotation_3d(&mut rng);
            let c = random_rotation_3d(&mut rng);
            let dab = rotation_distance(&a, &b).unwrap();
            let dba = rotation_distance(&b, &a).unwrap();
            let dac = rotation_distance(&a, &c).unwrap();
            let dcb = rotation_distance(&c, &b).unwrap();
            assert!((dab - dba).abs() < 1e-9);
            assert!(dab <= dac + dcb + 1e-9);
            assert!(rotation_distance(&a, &a).unwrap() < 1e-9);
        }
    }

    #[test]
    fn reflection_is_an_involution_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let x = pt(&[rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 4.0 - 2.0]);
            let h = LineSubspace::line_2d(rng.gen::<f64>() * std::f64::consts::PI).unwrap();
            let rr = reflect_point(&reflect_point(&x, &h).unwrap(), &h).unwrap();
            assert!(rr.distance(&x) < 1e-12);
        }
    }

    #[test]
    fn reflection_fixed_points_are_exactly_the_line() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let h_angle = rng.gen::<f64>() * std::f64::consts::PI;
            let h = LineSubspace::line_2d(h_angle).unwrap();
            let x = pt(&[rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 4.0 - 2.0]);
            let r = reflect_point(&x, &h).unwrap();
            let moved = r.distance(&x) > 1e-12;
            let off_line = {
                let p = project_point(&x, &h).unwrap();
                p.distance(&x) > 1e-12
            };
            assert_eq!(moved, off_line);
        }
    }

    #[test]
    fn rotation_between_maps_u_to_v_and_has_unit_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let u = UnitDirection::from_angle_2d(rng.gen::<f64>() * 6.28);
            let v = UnitDirection::from_angle_2d(rng.gen::<f64>() * 6.28);
            if u.dot(&v) <= -1.0 + 1e-9 {
                continue;
            }
            let r = rotation_between(&u, &v).unwrap();
            let ru = r.apply_direction(&u).unwrap();
            let err: f64 = ru
                .coords()
                .iter()
                .zip(v.coords())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            assert!(err < 1e-12);
            assert!((r.det() - 1.0).abs() < 1e-10);
        }
    }
}
