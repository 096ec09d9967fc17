//! Hyperbolic-space point model in hyperboloid (Minkowski) coordinates.
//!
//! Points live on the upper sheet x0^2 - x1^2 - ... - xd^2 = 1, where the
//! geodesic distance is a single arcosh of the Minkowski inner product. This
//! stays numerically stable for every radius used here, unlike disk models
//! whose coordinates blow up at the boundary.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unsupported dimension {0}: only 2 and 3 are modeled")]
    UnsupportedDimension(usize),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
}

/// Deterministic 64-bit generator (splitmix64).
///
/// Output function: the state advances by the golden-ratio increment
/// 0x9E3779B97F4A7C15 and each output is the finalizer
/// `z ^= z >> 30, z *= 0xBF58476D1CE4E5B9, z ^= z >> 27,
///  z *= 0x94D049BB133111EB, z ^= z >> 31` applied to the new state.
/// Identical seeds produce identical streams on every platform.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// A point of d-dimensional hyperbolic space, d in {2, 3}, as hyperboloid
/// coordinates (x0, x1, ..., xd) with x0 >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct HPoint {
    coords: Vec<f64>,
}

impl HPoint {
    /// Point from spatial coordinates; x0 is recomputed so the Minkowski
    /// normalization holds exactly.
    pub fn from_spatial(spatial: &[f64]) -> Result<Self, GeometryError> {
        let dim = spatial.len();
        if dim != 2 && dim != 3 {
            return Err(GeometryError::UnsupportedDimension(dim));
        }
        let sq: f64 = spatial.iter().map(|x| x * x).sum();
        let mut coords = Vec::with_capacity(dim + 1);
        coords.push((1.0 + sq).sqrt());
        coords.extend_from_slice(spatial);
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(GeometryError::InvalidPoint(format!("{coords:?}")));
        }
        Ok(Self { coords })
    }

    pub fn origin(dim: usize) -> Result<Self, GeometryError> {
        HPoint::from_spatial(&vec![0.0; dim])
    }

    /// Point at hyperbolic polar radius r in the unit direction `dir`.
    pub fn polar(r: f64, dir: &[f64]) -> Result<Self, GeometryError> {
        let s = r.sinh();
        let spatial: Vec<f64> = dir.iter().map(|d| s * d).collect();
        HPoint::from_spatial(&spatial)
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// x0^2 - sum x_i^2 - 1; the invariant keeps this within 1e-12 relative
    /// to x0^2 (the defect evaluation itself rounds at that scale).
    pub fn minkowski_defect(&self) -> f64 {
        let spatial: f64 = self.coords[1..].iter().map(|x| x * x).sum();
        self.coords[0] * self.coords[0] - spatial - 1.0
    }
}

/// Geodesic distance d(p, q) = arcosh(x0 y0 - sum x_i y_i).
///
/// Computed as arcosh(1 + h) with h derived from coordinate differences:
/// h = (sum (p_i - q_i)^2 - (p_0 - q_0)^2) / 2 equals the inner product
/// minus one exactly, but stays accurate for nearly coincident points where
/// the direct product cancels catastrophically.
pub fn distance(p: &HPoint, q: &HPoint) -> Result<f64, GeometryError> {
    if p.dim() != q.dim() {
        return Err(GeometryError::DimensionMismatch(p.dim(), q.dim()));
    }
    let mut m = p.coords[0] * q.coords[0];
    for i in 1..p.coords.len() {
        m -= p.coords[i] * q.coords[i];
    }
    let h = if m - 1.0 > 0.1 {
        m - 1.0
    } else {
        // Near-coincident points: the product cancels catastrophically, but
        // (sum (p_i - q_i)^2 - (p_0 - q_0)^2) / 2 equals m - 1 exactly and
        // stays accurate.
        let mut s = -(p.coords[0] - q.coords[0]) * (p.coords[0] - q.coords[0]);
        for i in 1..p.coords.len() {
            let d = p.coords[i] - q.coords[i];
            s += d * d;
        }
        (s / 2.0).max(0.0)
    };
    // arcosh(1 + h) = ln(1 + h + sqrt(h (2 + h)))
    Ok((h + (h * (2.0 + h)).sqrt()).ln_1p())
}

/// An ordered, seed-reproducible configuration of points in a ball.
#[derive(Debug, Clone)]
pub struct PointSet {
    pub points: Vec<HPoint>,
    pub seed: u64,
    pub radius_bound: f64,
}

impl PointSet {
    /// CSV with a seed comment line and a `dim,x0,...` header; decimal
    /// points are always `.` regardless of locale.
    pub fn to_csv(&self) -> String {
        let dim = self.points.first().map(|p| p.dim()).unwrap_or(2);
        let mut out = format!(
            "# seed={} radius_bound={} n={}\n",
            self.seed,
            self.radius_bound,
            self.points.len()
        );
        out.push_str("dim");
        for i in 0..=dim {
            out.push_str(&format!(",x{i}"));
        }
        out.push('\n');
        for p in &self.points {
            out.push_str(&format!("{}", p.dim()));
            for c in p.coords() {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Samples n points i.i.d. uniformly w.r.t. Riemannian volume in the ball of
/// radius `r_bound`: radial density proportional to sinh^(dim-1), direction
/// uniform on the sphere. Deterministic per seed.
pub fn sample_ball(
    dim: usize,
    r_bound: f64,
    n: usize,
    seed: u64,
) -> Result<PointSet, GeometryError> {
    if dim != 2 && dim != 3 {
        return Err(GeometryError::UnsupportedDimension(dim));
    }
    if r_bound <= 0.0 || r_bound.is_nan() {
        return Err(GeometryError::InvalidPoint(format!(
            "radius bound must be positive, got {r_bound}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        let u = rng.next_f64();
        let r = if dim == 2 {
            // inverse CDF of sinh on [0, R]: F(r) = (cosh r - 1)/(cosh R - 1)
            (1.0 + u * (r_bound.cosh() - 1.0)).acosh()
        } else {
            invert_sinh_sq_cdf(u, r_bound)
        };
        let dir = if dim == 2 {
            let theta = 2.0 * std::f64::consts::PI * rng.next_f64();
            vec![theta.cos(), theta.sin()]
        } else {
            let z = 2.0 * rng.next_f64() - 1.0;
            let phi = 2.0 * std::f64::consts::PI * rng.next_f64();
            let s = (1.0 - z * z).max(0.0).sqrt();
            vec![s * phi.cos(), s * phi.sin(), z]
        };
        points.push(HPoint::polar(r, &dir)?);
    }
    Ok(PointSet {
        points,
        seed,
        radius_bound: r_bound,
    })
}

/// Solves (sinh r cosh r - r) = u * (sinh R cosh R - R) for r in [0, R].
fn invert_sinh_sq_cdf(u: f64, r_bound: f64) -> f64 {
    let total = r_bound.sinh() * r_bound.cosh() - r_bound;
    let target = u * total;
    if target <= 0.0 {
        return 0.0;
    }
    // g(r) = sinh r cosh r - r, g'(r) = 2 sinh^2 r
    let mut lo = 0.0;
    let mut hi = r_bound;
    let mut r = if target < 1.0 {
        (1.5 * target).cbrt() // small-r: g ~ (2/3) r^3
    } else {
        0.5 * (4.0 * target).ln()
    }
    .clamp(1e-8, r_bound);
    for _ in 0..200 {
        let g = r.sinh() * r.cosh() - r - target;
        if g.abs() <= 1e-15 * (target + r) {
            break;
        }
        if g > 0.0 {
            hi = r;
        } else {
            lo = r;
        }
        let dg = 2.0 * r.sinh() * r.sinh();
        let next = r - g / dg;
        r = if next > lo && next < hi {
            next
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo < 1e-16 * r_bound {
            break;
        }
    }
    r
}

/// The 2D point with Lobachevsky coordinates (u, v): u along a base geodesic,
/// v along the perpendicular at its foot. Satisfies
/// cosh d(o, p) = cosh u cosh v.
pub fn lobachevsky_point(u: f64, v: f64) -> HPoint {
    HPoint {
        coords: vec![u.cosh() * v.cosh(), u.sinh() * v.cosh(), v.sinh()],
    }
}

/// N equally spaced angles 2 pi k / N on the circle.
pub fn circle_angles(n: usize) -> Vec<f64> {
    assert!(n >= 2, "need at least two circle points");
    (0..n)
        .map(|k| 2.0 * std::f64::consts::PI * k as f64 / n as f64)
        .collect()
}

/// Arc-length distance on the unit circle: min(|a-b|, 2 pi - |a-b|).
pub fn circle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % (2.0 * std::f64::consts::PI);
    d.min(2.0 * std::f64::consts::PI - d)
}
