//! Convex bodies as support functions sampled on fixed direction sets
//! (equally spaced circle grids in the plane, icosphere grids on 𝕊²).
//!
//! Minkowski symmetrization and rotation act pointwise on support values, so
//! they stay exact whenever the reflected/rotated directions land back on the
//! grid; otherwise the operation interpolates and flags the result as
//! approximate. Steiner symmetrization is deliberately not offered here: it
//! is not a pointwise support-function operation.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geom::{LineSubspace, RotationOp};
use crate::polygon::ConvexPolygon;

/// A fixed set of directions with quadrature weights summing to the sphere
/// measure (2π on 𝕊¹, 4π on 𝕊²). Shared read-only between grids.
#[derive(Debug)]
pub struct DirectionSet {
    dimension: usize,
    directions: Vec<Vec<f64>>,
    weights: Vec<f64>,
    /// Index of `−u_i` for each `i` (direction sets here are symmetric).
    antipode: Vec<usize>,
}

impl PartialEq for DirectionSet {
    fn eq(&self, other: &Self) -> bool {
        self.dimension == other.dimension && self.directions == other.directions
    }
}

impl DirectionSet {
    /// `n` equally spaced directions on 𝕊¹ with uniform weights `2π/n`.
    /// `n` must be even so the set is centrally symmetric.
    pub fn circle(n: usize) -> Result<Arc<Self>> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::invalid("circle grid needs an even n >= 4"));
        }
        let directions: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let a = 2.0 * PI * (i as f64) / (n as f64);
                vec![a.cos(), a.sin()]
            })
            .collect();
        let weights = vec![2.0 * PI / (n as f64); n];
        let antipode = (0..n).map(|i| (i + n / 2) % n).collect();
        Ok(Arc::new(DirectionSet {
            dimension: 2,
            directions,
            weights,
            antipode,
        }))
    }

    /// Icosphere grid on 𝕊²: an icosahedron subdivided `subdivisions` times,
    /// carrying `10·4^k + 2` directions. Weights are each vertex's share of
    /// its incident spherical-triangle areas, normalized to sum to exactly
    /// 4π. The vertex set is centrally symmetric, closed under the
    /// coordinate-plane reflections, and contains ±e₁, ±e₂, ±e₃ for
    /// `subdivisions ≥ 1`.
    pub fn icosphere(subdivisions: usize) -> Result<Arc<Self>> {
        if subdivisions > 6 {
            return Err(Error::invalid("icosphere subdivisions capped at 6"));
        }
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let mut verts: Vec<[f64; 3]> = vec![
            [-1.0, phi, 0.0],
            [1.0, phi, 0.0],
            [-1.0, -phi, 0.0],
            [1.0, -phi, 0.0],
            [0.0, -1.0, phi],
            [0.0, 1.0, phi],
            [0.0, -1.0, -phi],
            [0.0, 1.0, -phi],
            [phi, 0.0, -1.0],
            [phi, 0.0, 1.0],
            [-phi, 0.0, -1.0],
            [-phi, 0.0, 1.0],
        ];
        for v in verts.iter_mut() {
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            v[0] /= n;
            v[1] /= n;
            v[2] /= n;
        }
        let mut faces: Vec<[usize; 3]> = vec![
            [0, 11, 5],
            [0, 5, 1],
            [0, 1, 7],
            [0, 7, 10],
            [0, 10, 11],
            [1, 5, 9],
            [5, 11, 4],
            [11, 10, 2],
            [10, 7, 6],
            [7, 1, 8],
            [3, 9, 4],
            [3, 4, 2],
            [3, 2, 6],
            [3, 6, 8],
            [3, 8, 9],
            [4, 9, 5],
            [2, 4, 11],
            [6, 2, 10],
            [8, 6, 7],
            [9, 8, 1],
        ];
        use std::collections::HashMap;
        for _ in 0..subdivisions {
            let mut midpoint: HashMap<(usize, usize), usize> = HashMap::new();
            let mut next_faces = Vec::with_capacity(faces.len() * 4);
            for f in &faces {
                let [a, b, c] = *f;
                let mut mid = |a: usize, b: usize, verts: &mut Vec<[f64; 3]>| -> usize {
                    let key = (a.min(b), a.max(b));
                    if let Some(&m) = midpoint.get(&key) {
                        return m;
                    }
                    let va = verts[a];
                    let vb = verts[b];
                    let mut m = [va[0] + vb[0], va[1] + vb[1], va[2] + vb[2]];
                    let n = (m[0] * m[0] + m[1] * m[1] + m[2] * m[2]).sqrt();
                    m[0] /= n;
                    m[1] /= n;
                    m[2] /= n;
                    verts.push(m);
                    midpoint.insert(key, verts.len() - 1);
                    verts.len() - 1
                };
                let ab = mid(a, b, &mut verts);
                let bc = mid(b, c, &mut verts);
                let ca = mid(c, a, &mut verts);
                next_faces.push([a, ab, ca]);
                next_faces.push([b, bc, ab]);
                next_faces.push([c, ca, bc]);
                next_faces.push([ab, bc, ca]);
            }
            faces = next_faces;
        }

        // Vertex weights: one third of each incident spherical triangle.
        let mut weights = vec![0.0f64; verts.len()];
        for f in &faces {
            let area = spherical_triangle_area(verts[f[0]], verts[f[1]], verts[f[2]]);
            for &vi in f {
                weights[vi] += area / 3.0;
            }
        }
        let total: f64 = weights.iter().sum();
        let scale = 4.0 * PI / total;
        for w in weights.iter_mut() {
            *w *= scale;
        }

        let directions: Vec<Vec<f64>> = verts.iter().map(|v| v.to_vec()).collect();
        let antipode = build_antipode_map(&directions)?;
        Ok(Arc::new(DirectionSet {
            dimension: 3,
            directions,
            weights,
            antipode,
        }))
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    pub fn direction(&self, i: usize) -> &[f64] {
        &self.directions[i]
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    pub fn weights_total(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn antipode_index(&self, i: usize) -> usize {
        self.antipode[i]
    }

    /// Sphere measure ω_n for the ambient dimension.
    pub fn sphere_measure(&self) -> f64 {
        match self.dimension {
            2 => 2.0 * PI,
            _ => 4.0 * PI,
        }
    }

    /// Nearest grid index to an arbitrary direction, with the angular error.
    pub fn nearest(&self, u: &[f64]) -> (usize, f64) {
        let mut best = 0usize;
        let mut best_dot = f64::NEG_INFINITY;
        for (i, d) in self.directions.iter().enumerate() {
            let dot: f64 = d.iter().zip(u).map(|(a, b)| a * b).sum();
            if dot > best_dot {
                best_dot = dot;
                best = i;
            }
        }
        (best, best_dot.clamp(-1.0, 1.0).acos())
    }
}

fn build_antipode_map(directions: &[Vec<f64>]) -> Result<Vec<usize>> {
    let mut map = vec![usize::MAX; directions.len()];
    for (i, d) in directions.iter().enumerate() {
        let neg: Vec<f64> = d.iter().map(|c| -c).collect();
        let mut found = usize::MAX;
        for (j, e) in directions.iter().enumerate() {
            let err: f64 = e
                .iter()
                .zip(&neg)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            if err < 1e-9 {
                found = j;
                break;
            }
        }
        if found == usize::MAX {
            return Err(Error::invalid("direction set is not centrally symmetric"));
        }
        map[i] = found;
    }
    Ok(map)
}

fn spherical_triangle_area(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    // Van Oosterom–Strackee: tan(E/2) = |a·(b×c)| / (1 + a·b + b·c + c·a).
    let cross = [
        b[1] * c[2] - b[2] * c[1],
        b[2] * c[0] - b[0] * c[2],
        b[0] * c[1] - b[1] * c[0],
    ];
    let num: f64 = a[0] * cross[0] + a[1] * cross[1] + a[2] * cross[2];
    let ab: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
    let bc: f64 = b.iter().zip(&c).map(|(x, y)| x * y).sum();
    let ca: f64 = c.iter().zip(&a).map(|(x, y)| x * y).sum();
    2.0 * num.abs().atan2(1.0 + ab + bc + ca)
}

/// A convex body represented by its support values on a [`DirectionSet`].
#[derive(Debug, Clone)]
pub struct SupportGrid {
    dirs: Arc<DirectionSet>,
    values: Vec<f64>,
    /// Set when an operation had to interpolate off-grid directions.
    approximate: bool,
}

impl SupportGrid {
    pub fn new(dirs: Arc<DirectionSet>, values: Vec<f64>) -> Result<Self> {
        if values.len() != dirs.len() {
            return Err(Error::DimensionMismatch {
                expected: dirs.len(),
                got: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("non-finite support value"));
        }
        Ok(SupportGrid {
            dirs,
            values,
            approximate: false,
        })
    }

    /// Samples the support function of a polygon (plane grids only).
    pub fn from_polygon(p: &ConvexPolygon, dirs: &Arc<DirectionSet>) -> Result<Self> {
        if dirs.dimension() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: dirs.dimension(),
            });
        }
        let values = p.support_samples(dirs.len());
        SupportGrid::new(Arc::clone(dirs), values)
    }

    /// Builds a grid from an arbitrary support function.
    pub fn from_support_fn(dirs: &Arc<DirectionSet>, f: impl Fn(&[f64]) -> f64) -> Result<Self> {
        let values: Vec<f64> = (0..dirs.len()).map(|i| f(dirs.direction(i))).collect();
        SupportGrid::new(Arc::clone(dirs), values)
    }

    pub fn directions(&self) -> &Arc<DirectionSet> {
        &self.dirs
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn is_approximate(&self) -> bool {
        self.approximate
    }

    pub(crate) fn set_approximate(&mut self, a: bool) {
        self.approximate = a;
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Pointwise sum (the Minkowski sum on support functions).
    pub fn add(&self, other: &SupportGrid) -> Result<SupportGrid> {
        self.check_same_dirs(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(SupportGrid {
            dirs: Arc::clone(&self.dirs),
            values,
            approximate: self.approximate || other.approximate,
        })
    }

    fn check_same_dirs(&self, other: &SupportGrid) -> Result<()> {
        if Arc::ptr_eq(&self.dirs, &other.dirs) || self.dirs == other.dirs {
            Ok(())
        } else {
            Err(Error::Incompatible(
                "support grids use different direction sets".into(),
            ))
        }
    }

    /// Discrete convexity consistency for plane grids: each value must not
    /// exceed the sine-weighted combination of its neighbors. Exact support
    /// functions satisfy this identically.
    pub fn validate_convexity(&self, tol: f64) -> Result<()> {
        if self.dirs.dimension() != 2 {
            return Ok(());
        }
        let n = self.dirs.len();
        let delta = 2.0 * PI / (n as f64);
        let (s1, s2) = (delta.sin(), (2.0 * delta).sin());
        for i in 0..n {
            let prev = self.values[(i + n - 1) % n];
            let next = self.values[(i + 1) % n];
            if self.values[i] * s2 > (prev + next) * s1 + tol {
                return Err(Error::invalid(format!(
                    "support values fail the convexity test at index {i}"
                )));
            }
        }
        Ok(())
    }

    /// Mean width by quadrature: `Σ wᵢ [h(uᵢ) + h(−uᵢ)] / ω_n`.
    pub fn mean_width(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.values.len() {
            acc +=
                self.dirs.weight(i) * (self.values[i] + self.values[self.dirs.antipode_index(i)]);
        }
        acc / self.dirs.sphere_measure()
    }

    /// Sup-norm distance between two grids on the same direction set: a
    /// lower bound on the Hausdorff distance, exact as the grid refines.
    pub fn hausdorff_supnorm(&self, other: &SupportGrid) -> Result<f64> {
        self.check_same_dirs(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// Minkowski symmetrization about `h`: per-direction average of the
    /// value and its mirror value, `h'(u) = (h(u) + h(R_H u)) / 2`.
    ///
    /// The mirror value is read exactly off the grid when the reflected
    /// direction lands on it (for plane grids: whenever `2·angle(H)` is a
    /// multiple of the grid step); otherwise it is interpolated and the
    /// result is flagged approximate.
    pub fn minkowski_symmetrize(&self, h: &LineSubspace) -> Result<SupportGrid> {
        if h.ambient_dim() != self.dirs.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dirs.dimension(),
                got: h.ambient_dim(),
            });
        }
        let n = self.dirs.len();
        let mut approx = self.approximate;
        let mirrored: Vec<f64> = match self.dirs.dimension() {
            2 => {
                let theta = h.angle_2d().expect("2D line");
                let delta = 2.0 * PI / (n as f64);
                // Reflected direction of angle θ_i is 2θ − θ_i; in index
                // space that is r − i with r = 2θ/Δ.
                let r = 2.0 * theta / delta;
                let r_round = r.round();
                if (r - r_round).abs() < 1e-9 {
                    let r_i = r_round as i64;
                    (0..n)
                        .map(|i| {
                            let j = (r_i - i as i64).rem_euclid(n as i64) as usize;
                            self.values[j]
                        })
                        .collect()
                } else {
                    approx = true;
                    (0..n).map(|i| self.lerp_circle(r - i as f64)).collect()
                }
            }
            _ => {
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    let u = crate::geom::Point::new(self.dirs.direction(i).to_vec())?;
                    let ru = h.reflect(&u)?;
                    let (v, was_exact) = self.value_at_direction(ru.coords());
                    if !was_exact {
                        approx = true;
                    }
                    out.push(v);
                }
                out
            }
        };
        let values = self
            .values
            .iter()
            .zip(&mirrored)
            .map(|(a, b)| 0.5 * (a + b))
            .collect();
        Ok(SupportGrid {
            dirs: Arc::clone(&self.dirs),
            values,
            approximate: approx,
        })
    }

    /// Rotation: `h'(u) = h(Rᵀ u)`, an exact cyclic index shift for plane
    /// grids when the rotation angle is a grid multiple.
    pub fn rotate(&self, r: &RotationOp) -> Result<SupportGrid> {
        if r.dim() != self.dirs.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dirs.dimension(),
                got: r.dim(),
            });
        }
        let n = self.dirs.len();
        let mut approx = self.approximate;
        let values: Vec<f64> = match self.dirs.dimension() {
            2 => {
                let phi = r.angle_2d().expect("2D rotation");
                let delta = 2.0 * PI / (n as f64);
                let s = phi / delta;
                let s_round = s.round();
                if (s - s_round).abs() < 1e-9 {
                    let shift = s_round as i64;
                    (0..n)
                        .map(|i| {
                            let j = (i as i64 - shift).rem_euclid(n as i64) as usize;
                            self.values[j]
                        })
                        .collect()
                } else {
                    approx = true;
                    (0..n).map(|i| self.lerp_circle(i as f64 - s)).collect()
                }
            }
            _ => {
                let rt = r.inverse();
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    let u = crate::geom::Point::new(self.dirs.direction(i).to_vec())?;
                    let ru = rt.apply(&u)?;
                    let (v, was_exact) = self.value_at_direction(ru.coords());
                    if !was_exact {
                        approx = true;
                    }
                    out.push(v);
                }
                out
            }
        };
        Ok(SupportGrid {
            dirs: Arc::clone(&self.dirs),
            values,
            approximate: approx,
        })
    }

    /// Linear interpolation on the circular index space of a plane grid.
    fn lerp_circle(&self, idx: f64) -> f64 {
        let n = self.values.len() as f64;
        let mut t = idx % n;
        if t < 0.0 {
            t += n;
        }
        let i0 = t.floor() as usize % self.values.len();
        let i1 = (i0 + 1) % self.values.len();
        let frac = t - t.floor();
        self.values[i0] * (1.0 - frac) + self.values[i1] * frac
    }

    /// Value at an arbitrary direction: the exact grid value when `u` lies
    /// on the grid (within 1e-9 radians), else an inverse-distance blend of
    /// the three nearest grid directions.
    fn value_at_direction(&self, u: &[f64]) -> (f64, bool) {
        let (best, ang) = self.dirs.nearest(u);
        if ang < 1e-9 {
            return (self.values[best], true);
        }
        let mut scored: Vec<(f64, usize)> = self
            .dirs
            .directions
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let dot: f64 = d.iter().zip(u).map(|(a, b)| a * b).sum();
                (dot.clamp(-1.0, 1.0).acos(), i)
            })
            .collect();
        scored.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut num = 0.0;
        let mut den = 0.0;
        for &(d, i) in scored.iter().take(3) {
            let w = 1.0 / d.max(1e-12);
            num += w * self.values[i];
            den += w;
        }
        (num / den, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{UnitDirection, Vec2};
    use crate::polygon::{hausdorff_distance, minkowski_symmetrize};
    use crate::sampling::random_convex_polygon;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cube_support(side_lo: f64, side_hi: f64) -> impl Fn(&[f64]) -> f64 {
        move |u: &[f64]| {
            u.iter()
                .map(|&c| if c >= 0.0 { c * side_hi } else { c * side_lo })
                .sum()
        }
    }

    #[test]
    fn circle_grid_weights_sum_to_circumference() {
        let d = DirectionSet::circle(4096).unwrap();
        assert!((d.weights_total() - 2.0 * PI).abs() < 1e-9);
        assert_eq!(d.antipode_index(0), 2048);
    }

    #[test]
    fn icosphere_has_expected_size_and_symmetry() {
        let d = DirectionSet::icosphere(4).unwrap();
        assert_eq!(d.len(), 2562);
        assert!((d.weights_total() - 4.0 * PI).abs() < 1e-8);
        for axis in 0..3 {
            let mut e = vec![0.0; 3];
            e[axis] = 1.0;
            let (_, ang) = d.nearest(&e);
            assert!(ang < 1e-9, "axis {axis} missing from grid: {ang}");
        }
    }

    #[test]
    fn sampling_a_disk_gives_constant_values() {
        let dirs = DirectionSet::circle(256).unwrap();
        let disk = ConvexPolygon::regular_ngon(Vec2::ZERO, 1.0, 4096).unwrap();
        let g = SupportGrid::from_polygon(&disk, &dirs).unwrap();
        assert!(g.values().iter().all(|v| (v - 1.0).abs() < 1e-4));
        g.validate_convexity(1e-9).unwrap();
    }

    #[test]
    fn sampling_square_hits_corner_and_edge_values() {
        let dirs = DirectionSet::circle(8).unwrap();
        let sq = ConvexPolygon::rectangle(-1.0, -1.0, 1.0, 1.0).unwrap();
        let g = SupportGrid::from_polygon(&sq, &dirs).unwrap();
        assert!((g.values()[0] - 1.0).abs() < 1e-12);
        assert!((g.values()[1] - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn round_trip_mean_width_matches_polygon() {
        let dirs = DirectionSet::circle(4096).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let p = random_convex_polygon(&mut rng, 12, 1.0);
            let g = SupportGrid::from_polygon(&p, &dirs).unwrap();
            let rel =
                (g.mean_width() - p.measures().mean_width).abs() / p.measures().mean_width;
            assert!(rel < 1e-6, "{rel}");
        }
    }

    #[test]
    fn ball_mean_width_is_diameter() {
        let dirs = DirectionSet::icosphere(4).unwrap();
        let g = SupportGrid::from_support_fn(&dirs, |_| 1.5).unwrap();
        assert!((g.mean_width() - 3.0).abs() < 1e-10);
    }

    #[test]
    fn unit_cube_mean_width_3d() {
        let dirs = DirectionSet::icosphere(4).unwrap();
        let g = SupportGrid::from_support_fn(&dirs, |u| {
            u.iter().map(|&c| c.max(0.0)).sum::<f64>()
        })
        .unwrap();
        assert!((g.mean_width() - 1.5).abs() < 1e-3, "{}", g.mean_width());
    }

    #[test]
    fn mean_width_is_additive() {
        let dirs = DirectionSet::circle(512).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let p = random_convex_polygon(&mut rng, 8, 1.0);
        let q = random_convex_polygon(&mut rng, 8, 2.0);
        let gp = SupportGrid::from_polygon(&p, &dirs).unwrap();
        let gq = SupportGrid::from_polygon(&q, &dirs).unwrap();
        let sum = gp.add(&gq).unwrap();
        assert!((sum.mean_width() - gp.mean_width() - gq.mean_width()).abs() < 1e-12);
    }

    #[test]
    fn grid_symmetrization_fixes_symmetric_grids() {
        let dirs = DirectionSet::circle(360).unwrap();
        let sq = ConvexPolygon::rectangle(-1.0, -1.0, 1.0, 1.0).unwrap();
        let g = SupportGrid::from_polygon(&sq, &dirs).unwrap();
        let h = LineSubspace::line_2d(0.0).unwrap();
        let s = g.minkowski_symmetrize(&h).unwrap();
        assert!(!s.is_approximate());
        for (a, b) in g.values().iter().zip(s.values()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn grid_symmetrization_preserves_mean_width_when_aligned() {
        let dirs = DirectionSet::circle(720).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..10 {
            let p = random_convex_polygon(&mut rng, 10, 1.0);
            let g = SupportGrid::from_polygon(&p, &dirs).unwrap();
            let h = LineSubspace::line_2d(37.0 * 2.0 * PI / 720.0).unwrap();
            let s = g.minkowski_symmetrize(&h).unwrap();
            assert!(!s.is_approximate());
            assert!((s.mean_width() - g.mean_width()).abs() < 1e-10);
            // Re-symmetrizing is the identity on the exact path.
            let s2 = s.minkowski_symmetrize(&h).unwrap();
            for (a, b) in s.values().iter().zip(s2.values()) {
                assert_eq!(a, b);
            }
            s.validate_convexity(1e-9).unwrap();
        }
    }

    #[test]
    fn cube_grid_symmetrized_about_z_plane() {
        let dirs = DirectionSet::icosphere(4).unwrap();
        let g = SupportGrid::from_support_fn(&dirs, |u| {
            u.iter().map(|&c| c.max(0.0)).sum::<f64>()
        })
        .unwrap();
        let e3 = UnitDirection::standard_basis(3, 2);
        let h = LineSubspace::hyperplane_orthogonal_to(&e3).unwrap();
        let s = g.minkowski_symmetrize(&h).unwrap();
        assert!(!s.is_approximate(), "coordinate plane should resolve exactly");
        let (iz, _) = dirs.nearest(&[0.0, 0.0, 1.0]);
        let (inz, _) = dirs.nearest(&[0.0, 0.0, -1.0]);
        assert!((s.values()[iz] - 0.5).abs() < 1e-12);
        assert!((s.values()[inz] - 0.5).abs() < 1e-12);
        // A box already symmetric in z keeps its pole values.
        let g2 = SupportGrid::from_support_fn(&dirs, cube_support(-1.0, 1.0)).unwrap();
        let s2 = g2.minkowski_symmetrize(&h).unwrap();
        assert!((s2.values()[iz] - 1.0).abs() < 1e-12);
        assert!((s2.values()[inz] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rotation_by_grid_step_is_a_bit_identical_shift() {
        let dirs = DirectionSet::circle(360).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let p = random_convex_polygon(&mut rng, 9, 1.0);
        let g = SupportGrid::from_polygon(&p, &dirs).unwrap();
        let r = RotationOp::planar_2d(2.0 * PI / 360.0);
        let rg = g.rotate(&r).unwrap();
        assert!(!rg.is_approximate());
        for i in 0..360 {
            assert_eq!(rg.values()[i], g.values()[(i + 360 - 1) % 360]);
        }
        let id = g.rotate(&RotationOp::identity(2)).unwrap();
        for (a, b) in id.values().iter().zip(g.values()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rotation_preserves_mean_width() {
        let dirs = DirectionSet::circle(4096).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(39);
        let p = random_convex_polygon(&mut rng, 11, 1.0);
        let g = SupportGrid::from_polygon(&p, &dirs).unwrap();
        let r = RotationOp::planar_2d(0.123456);
        let rg = g.rotate(&r).unwrap();
        assert!(rg.is_approximate());
        assert!((rg.mean_width() - g.mean_width()).abs() < 1e-10);
    }

    #[test]
    fn supnorm_agrees_with_polygon_hausdorff() {
        let dirs = DirectionSet::circle(4096).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        for _ in 0..10 {
            let p = random_convex_polygon(&mut rng, 10, 1.0);
            let q = random_convex_polygon(&mut rng, 8, 1.1);
            let gp = SupportGrid::from_polygon(&p, &dirs).unwrap();
            let gq = SupportGrid::from_polygon(&q, &dirs).unwrap();
            let sup = gp.hausdorff_supnorm(&gq).unwrap();
            let exact = hausdorff_distance(&p, &q);
            assert!(sup <= exact + 1e-12);
            assert!(exact - sup < 5e-4, "{}", exact - sup);
        }
    }

    #[test]
    fn supnorm_examples() {
        let dirs = DirectionSet::circle(64).unwrap();
        let b1 = SupportGrid::from_support_fn(&dirs, |_| 1.0).unwrap();
        let b2 = SupportGrid::from_support_fn(&dirs, |_| 2.0).unwrap();
        assert_eq!(b1.hausdorff_supnorm(&b1).unwrap(), 0.0);
        assert_eq!(b1.hausdorff_supnorm(&b2).unwrap(), 1.0);
        let other = DirectionSet::circle(128).unwrap();
        let b3 = SupportGrid::from_support_fn(&other, |_| 1.0).unwrap();
        assert!(b1.hausdorff_supnorm(&b3).is_err());
    }

    #[test]
    fn ten_step_grid_process_matches_polygon_pipeline() {
        let n = 4096;
        let dirs = DirectionSet::circle(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let mut p = random_convex_polygon(&mut rng, 10, 1.0);
        let mut g = SupportGrid::from_polygon(&p, &dirs).unwrap();
        use rand::Rng;
        for _ in 0..10 {
            let k: usize = rng.gen_range(0..n / 2);
            let theta = 2.0 * PI * (k as f64) / (n as f64);
            let h = LineSubspace::line_2d(theta).unwrap();
            p = minkowski_symmetrize(&p, &h).unwrap();
            g = g.minkowski_symmetrize(&h).unwrap();
            assert!(!g.is_approximate());
        }
        let gp = SupportGrid::from_polygon(&p, &dirs).unwrap();
        let sup = g.hausdorff_supnorm(&gp).unwrap();
        assert!(sup < 1e-6, "{sup}");
    }
}
