//! Operand representations: convex functions sampled on a 1-D grid, and
//! quadratic functionals generated by symmetric positive-definite matrices.
//!
//! A [`GridFn`] stores node values of a convex l.s.c. function over a bounded
//! interval and is `+∞` outside it. The `+∞` padding *is* the indicator of
//! the box: every grid computation is a statement about the truncated
//! function `f + indicator([lo, hi])`, which is the honest object when the
//! original `f` lives on an unbounded domain.

use serde::{Deserialize, Serialize};

use crate::extreal::ExtReal;
use crate::{linalg, Error, Result};

/// Relative tolerance below which discrete convexity violations are treated
/// as rounding and repaired by the lower hull; anything worse is rejected so
/// genuinely non-convex data cannot slip through silently.
pub const TOL_CONVEX: f64 = 1e-9;

/// Default node count for uniform grids (2⁹ + 1, convenient for refinement
/// studies where the step halves exactly).
pub const DEFAULT_GRID_NODES: usize = 513;

// ---------------------------------------------------------------------------
// GridFn
// ---------------------------------------------------------------------------

/// A convex l.s.c. function sampled on a uniform grid over `[lo, hi]`,
/// `+∞` outside the box.
///
/// Invariants, enforced at construction:
/// - `lo < hi`, at least two nodes;
/// - no `−∞` values (properness), at least two finite values;
/// - finite nodes form a contiguous index range (the effective domain is an
///   interval);
/// - finite values are convex as a sequence up to [`TOL_CONVEX`]; violations
///   below the tolerance are repaired by the lower convex hull, larger ones
///   are construction errors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridFn {
    lo: f64,
    hi: f64,
    values: Vec<ExtReal>,
    #[serde(skip)]
    first_finite: usize,
    #[serde(skip)]
    last_finite: usize,
}

impl GridFn {
    pub fn new(lo: f64, hi: f64, values: Vec<ExtReal>) -> Result<GridFn> {
        if !(lo.is_finite() && hi.is_finite()) || !(lo < hi) {
            return Err(Error::BadGridBounds { lo, hi });
        }
        if values.len() < 2 {
            return Err(Error::TooFewNodes {
                min: 2,
                got: values.len(),
            });
        }
        if values.iter().any(|v| v.is_neg_inf()) {
            return Err(Error::NegInfValue);
        }
        let finite_idx: Vec<usize> = values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_finite())
            .map(|(i, _)| i)
            .collect();
        if finite_idx.len() < 2 {
            return Err(Error::Improper);
        }
        let first = finite_idx[0];
        let last = *finite_idx.last().unwrap();
        if finite_idx.len() != last - first + 1 {
            let gap = (first..=last)
                .find(|&i| !values[i].is_finite())
                .unwrap_or(first);
            return Err(Error::DomainGap { index: gap });
        }

        // Discrete convexity of the finite range.
        let mut worst = 0.0f64;
        let mut worst_idx = 0;
        for i in first + 1..last {
            let (a, b, c) = (
                values[i - 1].as_f64(),
                values[i].as_f64(),
                values[i + 1].as_f64(),
            );
            let d2 = a - 2.0 * b + c;
            if d2 < 0.0 {
                let scale = a.abs().max(b.abs()).max(c.abs()).max(1.0);
                let rel = -d2 / scale;
                if rel > worst {
                    worst = rel;
                    worst_idx = i;
                }
            }
        }
        if worst > TOL_CONVEX {
            return Err(Error::NonConvex {
                index: worst_idx,
                violation: worst,
            });
        }
        let f = GridFn {
            lo,
            hi,
            values,
            first_finite: first,
            last_finite: last,
        };
        if worst > 0.0 {
            // Rounding-level dent: replace by the lower hull on the same grid.
            Ok(convexify_grid(&f))
        } else {
            Ok(f)
        }
    }

    /// Samples a finite-valued function on a fresh grid.
    pub fn from_fn(lo: f64, hi: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<GridFn> {
        if n < 2 {
            return Err(Error::TooFewNodes { min: 2, got: n });
        }
        if !(lo.is_finite() && hi.is_finite()) || !(lo < hi) {
            return Err(Error::BadGridBounds { lo, hi });
        }
        let step = (hi - lo) / (n - 1) as f64;
        let values = (0..n)
            .map(|i| ExtReal::new(f(lo + i as f64 * step)))
            .collect::<Result<Vec<_>>>()?;
        GridFn::new(lo, hi, values)
    }

    /// The parabola `x ↦ ½·a·x²`, the 1-D quadratic functional.
    pub fn parabola(a: f64, lo: f64, hi: f64, n: usize) -> Result<GridFn> {
        GridFn::from_fn(lo, hi, n, |x| 0.5 * a * x * x)
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false // at least two nodes by construction
    }

    #[inline]
    pub fn step(&self) -> f64 {
        (self.hi - self.lo) / (self.len() - 1) as f64
    }

    #[inline]
    pub fn node_x(&self, i: usize) -> f64 {
        self.lo + i as f64 * self.step()
    }

    #[inline]
    pub fn values(&self) -> &[ExtReal] {
        &self.values
    }

    /// Index range `[first, last]` of finite nodes.
    #[inline]
    pub fn finite_range(&self) -> (usize, usize) {
        (self.first_finite, self.last_finite)
    }

    /// Left endpoint of the effective domain.
    #[inline]
    pub fn dom_lo(&self) -> f64 {
        self.node_x(self.first_finite)
    }

    /// Right endpoint of the effective domain.
    #[inline]
    pub fn dom_hi(&self) -> f64 {
        self.node_x(self.last_finite)
    }

    /// The finite sample points `(x_i, f(x_i))`.
    pub(crate) fn finite_points(&self) -> Vec<(f64, f64)> {
        (self.first_finite..=self.last_finite)
            .map(|i| (self.node_x(i), self.values[i].as_f64()))
            .collect()
    }

    /// Piecewise-linear evaluation: `+∞` outside the box, `+∞` where a
    /// bracketing node is `+∞`, linear interpolation otherwise.
    pub fn eval(&self, x: f64) -> ExtReal {
        if x.is_nan() || x < self.lo || x > self.hi {
            return ExtReal::POS_INF;
        }
        let n = self.len();
        let pos = (x - self.lo) / self.step();
        let i = (pos.floor() as usize).min(n - 2);
        let frac = pos - i as f64;
        if frac <= 0.0 {
            self.values[i]
        } else if frac >= 1.0 {
            self.values[i + 1]
        } else {
            let (a, b) = (self.values[i], self.values[i + 1]);
            if a.is_finite() && b.is_finite() {
                ExtReal::new((1.0 - frac) * a.as_f64() + frac * b.as_f64())
                    .expect("finite interpolation")
            } else {
                ExtReal::POS_INF
            }
        }
    }

    /// Pointwise scaling `(α.f)(x) = α f(x)`, same grid. Requires `α > 0`.
    pub fn scalar_multiply(&self, alpha: f64) -> Result<GridFn> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::NonPositiveScale(alpha));
        }
        let values = self
            .values
            .iter()
            .map(|&v| ExtReal::scale_nonneg(alpha, v))
            .collect();
        GridFn::new(self.lo, self.hi, values)
    }

    /// Epigraphic scaling `(f.α)(y) = α f(y/α)` on the grid `[α·lo, α·hi]`.
    ///
    /// New nodes are exactly the old nodes scaled by `α`, so no interpolation
    /// happens: value `j` becomes `α·f(x_j)`.
    pub fn epi_scale(&self, alpha: f64) -> Result<GridFn> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::NonPositiveScale(alpha));
        }
        let values = self
            .values
            .iter()
            .map(|&v| ExtReal::scale_nonneg(alpha, v))
            .collect();
        GridFn::new(alpha * self.lo, alpha * self.hi, values)
    }

    /// Subdifferential of the piecewise-linear extension at node `i`:
    /// the interval of difference quotients, unbounded at the boundary of
    /// the effective domain, empty outside it.
    pub fn subdifferential(&self, i: usize) -> Subdifferential {
        if i >= self.len() || !self.values[i].is_finite() {
            return Subdifferential::Empty;
        }
        let h = self.step();
        let lo_slope = if i == self.first_finite {
            ExtReal::NEG_INF
        } else {
            ExtReal::new((self.values[i].as_f64() - self.values[i - 1].as_f64()) / h)
                .expect("finite difference quotient")
        };
        let hi_slope = if i == self.last_finite {
            ExtReal::POS_INF
        } else {
            ExtReal::new((self.values[i + 1].as_f64() - self.values[i].as_f64()) / h)
                .expect("finite difference quotient")
        };
        Subdifferential::NonEmpty(SlopeInterval {
            lo_slope,
            hi_slope,
        })
    }

    /// Subdifferential at an arbitrary point of the line (not only nodes).
    pub fn subdiff_at(&self, x: f64) -> Subdifferential {
        let (dlo, dhi) = (self.dom_lo(), self.dom_hi());
        if x.is_nan() || x < dlo || x > dhi {
            return Subdifferential::Empty;
        }
        let h = self.step();
        let pos = (x - self.lo) / h;
        let nearest = pos.round() as usize;
        if nearest < self.len() && (x - self.node_x(nearest)).abs() <= 1e-9 * h {
            return self.subdifferential(nearest);
        }
        let i = (pos.floor() as usize).min(self.len() - 2);
        let s = ExtReal::new((self.values[i + 1].as_f64() - self.values[i].as_f64()) / h)
            .expect("interior segment is finite");
        Subdifferential::NonEmpty(SlopeInterval {
            lo_slope: s,
            hi_slope: s,
        })
    }

    /// Resamples onto a new uniform grid by piecewise-linear evaluation.
    pub fn resample(&self, lo: f64, hi: f64, n: usize) -> Result<GridFn> {
        if n < 2 {
            return Err(Error::TooFewNodes { min: 2, got: n });
        }
        let step = (hi - lo) / (n - 1) as f64;
        let values = (0..n).map(|i| self.eval(lo + i as f64 * step)).collect();
        GridFn::new(lo, hi, values)
    }
}

impl<'de> Deserialize<'de> for GridFn {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<GridFn, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            lo: f64,
            hi: f64,
            values: Vec<ExtReal>,
        }
        let raw = Raw::deserialize(d)?;
        GridFn::new(raw.lo, raw.hi, raw.values).map_err(serde::de::Error::custom)
    }
}

/// A closed, possibly unbounded interval of subgradients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlopeInterval {
    pub lo_slope: ExtReal,
    pub hi_slope: ExtReal,
}

/// Subdifferential of a grid function at a point: an interval inside the
/// effective domain, empty outside it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Subdifferential {
    Empty,
    NonEmpty(SlopeInterval),
}

impl Subdifferential {
    pub fn interval(self) -> Option<SlopeInterval> {
        match self {
            Subdifferential::Empty => None,
            Subdifferential::NonEmpty(s) => Some(s),
        }
    }
}

// ---------------------------------------------------------------------------
// Convexification
// ---------------------------------------------------------------------------

/// Lower convex hull of scattered sample points, resampled on a uniform grid
/// spanning the sample range. This is the grid-level convex closure: the
/// greatest convex function below the piecewise-linear interpolant of the
/// data.
pub fn convexify(points: &[(f64, f64)], n: usize) -> Result<GridFn> {
    let mut pts: Vec<(f64, f64)> = points
        .iter()
        .copied()
        .filter(|&(x, v)| x.is_finite() && v.is_finite())
        .collect();
    if pts.len() < 2 {
        return Err(Error::Improper);
    }
    pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    // Same abscissa: only the lowest value matters for the hull.
    pts.dedup_by(|next, kept| {
        if next.0 == kept.0 {
            kept.1 = kept.1.min(next.1);
            true
        } else {
            false
        }
    });
    if pts.len() < 2 {
        return Err(Error::Improper);
    }
    let hull = lower_hull(&pts);
    let (lo, hi) = (pts[0].0, pts[pts.len() - 1].0);
    if !(lo < hi) {
        return Err(Error::BadGridBounds { lo, hi });
    }
    let step = (hi - lo) / (n - 1) as f64;
    let values = (0..n)
        .map(|i| ExtReal::new(eval_hull(&hull, lo + i as f64 * step)).expect("hull is finite"))
        .collect();
    GridFn::new(lo, hi, values)
}

/// Hull repair on the function's own grid: node positions are kept, values
/// drop to the lower convex hull of the finite samples.
pub fn convexify_grid(f: &GridFn) -> GridFn {
    let pts = f.finite_points();
    let hull = lower_hull(&pts);
    let values: Vec<ExtReal> = (0..f.len())
        .map(|i| {
            if f.values()[i].is_finite() {
                ExtReal::new(eval_hull(&hull, f.node_x(i))).expect("hull is finite")
            } else {
                ExtReal::POS_INF
            }
        })
        .collect();
    GridFn {
        lo: f.lo,
        hi: f.hi,
        values,
        first_finite: f.first_finite,
        last_finite: f.last_finite,
    }
}

/// Monotone-chain lower hull of points sorted by strictly increasing x.
/// Collinear interior points are dropped, so consecutive hull slopes are
/// strictly increasing.
pub(crate) fn lower_hull(pts: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for &p in pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // b lies on or above chord a–p  ⇔  cross ≤ 0  ⇒  drop b.
            let cross = (b.0 - a.0) * (p.1 - a.1) - (p.0 - a.0) * (b.1 - a.1);
            if cross <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// Exact evaluation of the piecewise-linear hull at `x` inside its span.
pub(crate) fn eval_hull(hull: &[(f64, f64)], x: f64) -> f64 {
    match hull.binary_search_by(|p| p.0.partial_cmp(&x).unwrap()) {
        Ok(i) => hull[i].1,
        Err(0) => hull[0].1,
        Err(i) if i >= hull.len() => hull[hull.len() - 1].1,
        Err(i) => {
            let (x0, v0) = hull[i - 1];
            let (x1, v1) = hull[i];
            let t = (x - x0) / (x1 - x0);
            (1.0 - t) * v0 + t * v1
        }
    }
}

// ---------------------------------------------------------------------------
// Symmetric and SPD matrices
// ---------------------------------------------------------------------------

/// A real symmetric matrix, row-major storage. No definiteness requirement;
/// differences and diamond results live here.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymMatrix {
    d: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn new(d: usize, entries: Vec<f64>) -> Result<SymMatrix> {
        if d == 0 || entries.len() != d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d,
                got: entries.len(),
            });
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteEntry);
        }
        let scale = entries.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let mut max_asym = 0.0f64;
        for i in 0..d {
            for j in i + 1..d {
                max_asym = max_asym.max((entries[i * d + j] - entries[j * d + i]).abs());
            }
        }
        if max_asym > 1e-12 * scale.max(1e-300) {
            return Err(Error::NotSymmetric { max_asym });
        }
        // Symmetrize exactly so downstream algebra never sees the drift.
        let mut e = entries;
        for i in 0..d {
            for j in i + 1..d {
                let m = 0.5 * (e[i * d + j] + e[j * d + i]);
                e[i * d + j] = m;
                e[j * d + i] = m;
            }
        }
        Ok(SymMatrix { d, entries: e })
    }

    pub fn identity(d: usize) -> SymMatrix {
        let mut e = vec![0.0; d * d];
        for i in 0..d {
            e[i * d + i] = 1.0;
        }
        SymMatrix { d, entries: e }
    }

    pub fn from_diag(diag: &[f64]) -> SymMatrix {
        let d = diag.len();
        let mut e = vec![0.0; d * d];
        for i in 0..d {
            e[i * d + i] = diag[i];
        }
        SymMatrix { d, entries: e }
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.d + j]
    }

    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(SymMatrix {
            d: self.d,
            entries,
        })
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(SymMatrix {
            d: self.d,
            entries,
        })
    }

    pub fn scale(&self, alpha: f64) -> SymMatrix {
        SymMatrix {
            d: self.d,
            entries: self.entries.iter().map(|v| alpha * v).collect(),
        }
    }

    pub fn mat_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: x.len(),
            });
        }
        Ok(linalg::mat_vec(self.d, &self.entries, x))
    }

    pub fn frobenius(&self) -> f64 {
        linalg::frobenius(&self.entries)
    }

    /// Smallest eigenvalue (the PSD margin when applied to a difference).
    pub fn min_eigenvalue(&self) -> Result<f64> {
        linalg::min_eigenvalue(self.d, &self.entries)
    }

    pub(crate) fn from_raw_symmetrized(d: usize, mut entries: Vec<f64>) -> SymMatrix {
        for i in 0..d {
            for j in i + 1..d {
                let m = 0.5 * (entries[i * d + j] + entries[j * d + i]);
                entries[i * d + j] = m;
                entries[j * d + i] = m;
            }
        }
        SymMatrix { d, entries }
    }

    fn check_dim(&self, other: &SymMatrix) -> Result<()> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: other.d,
            });
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<SymMatrix, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            d: usize,
            entries: Vec<f64>,
        }
        let raw = Raw::deserialize(de)?;
        SymMatrix::new(raw.d, raw.entries).map_err(serde::de::Error::custom)
    }
}

/// A symmetric positive-definite matrix: symmetry to `1e−12` relative and
/// strictly positive spectrum are checked at construction.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SpdMatrix(SymMatrix);

impl SpdMatrix {
    pub fn new(d: usize, entries: Vec<f64>) -> Result<SpdMatrix> {
        SpdMatrix::from_sym(SymMatrix::new(d, entries)?)
    }

    pub fn from_sym(m: SymMatrix) -> Result<SpdMatrix> {
        let min_eig = m.min_eigenvalue()?;
        if !(min_eig > 0.0) {
            return Err(Error::NotPositiveDefinite { min_eig });
        }
        Ok(SpdMatrix(m))
    }

    pub fn identity(d: usize) -> SpdMatrix {
        SpdMatrix(SymMatrix::identity(d))
    }

    pub fn from_diag(diag: &[f64]) -> Result<SpdMatrix> {
        SpdMatrix::from_sym(SymMatrix::from_diag(diag))
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.0.d()
    }

    #[inline]
    pub fn entries(&self) -> &[f64] {
        self.0.entries()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j)
    }

    #[inline]
    pub fn as_sym(&self) -> &SymMatrix {
        &self.0
    }

    pub fn into_sym(self) -> SymMatrix {
        self.0
    }
}

impl<'de> Deserialize<'de> for SpdMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<SpdMatrix, D::Error> {
        let m = SymMatrix::deserialize(de)?;
        SpdMatrix::from_sym(m).map_err(serde::de::Error::custom)
    }
}

/// The quadratic functional `Q_A(x) = ½⟨Ax, x⟩` generated by an SPD matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadraticFn {
    pub matrix: SpdMatrix,
}

impl QuadraticFn {
    pub fn new(matrix: SpdMatrix) -> QuadraticFn {
        QuadraticFn { matrix }
    }

    /// `½ xᵀAx`; strictly positive away from the origin.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        let ax = self.matrix.as_sym().mat_vec(x)?;
        Ok(0.5 * ax.iter().zip(x).map(|(a, b)| a * b).sum::<f64>())
    }
}
