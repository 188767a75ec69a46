//! Closed-form matrix counterparts of the functional means, the
//! matrix-function engine behind them, and the quadratic-functional bridge
//! between the two worlds.
//!
//! For SPD generators the functional means of `Q_A`, `Q_B` collapse to
//! matrix formulas: `A∇_λB = (1−λ)A + λB`, `A!_λB = ((1−λ)A⁻¹ + λB⁻¹)⁻¹`,
//! `A♯_λB = A^{1/2}(A^{−1/2}BA^{−1/2})^λ A^{1/2}`, and the logarithmic mean
//! `L(A,B) = A^{1/2} F(A^{−1/2}BA^{−1/2}) A^{1/2}` with `F(x) = (x−1)/log x`,
//! `F(1) = 1`. [`bridge_check_1d`] runs the grid pipeline on 1-D parabolas
//! against these scalar forms; [`bridge_check_nd`] checks that matrix order
//! and pointwise order of the quadratics tell the same story.

use rand::SeedableRng;
use serde::Serialize;

use crate::convex_core::{GridFn, SpdMatrix, SymMatrix};
use crate::quadrature::{MeasureTag, QuadRule};
use crate::{functional_means, linalg, Error, Result};

/// Eigendecomposition of a symmetric matrix: ascending eigenvalues and the
/// matching orthonormal eigenvectors as columns of a row-major matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomp {
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
}

/// Jacobi-rotation eigendecomposition, accurate to a small multiple of
/// machine epsilon times the Frobenius norm.
pub fn sym_eig(a: &SymMatrix) -> Result<EigenDecomp> {
    let (values, vectors) = linalg::jacobi_eigh(a.d(), a.entries())?;
    Ok(EigenDecomp { values, vectors })
}

fn spectral_map(a: &SpdMatrix, f: impl Fn(f64) -> f64) -> Result<SymMatrix> {
    let eig = sym_eig(a.as_sym())?;
    Ok(SymMatrix::from_raw_symmetrized(
        a.d(),
        linalg::apply_spectral(a.d(), &eig.values, &eig.vectors, f),
    ))
}

fn as_spd(m: SymMatrix) -> Result<SpdMatrix> {
    SpdMatrix::from_sym(m)
}

/// Fractional (or any real) power `A^t` through the spectral calculus.
pub fn spd_power(a: &SpdMatrix, t: f64) -> Result<SpdMatrix> {
    as_spd(spectral_map(a, |x| x.powf(t))?)
}

/// `A⁻¹` through the spectral calculus.
pub fn inverse(a: &SpdMatrix) -> Result<SpdMatrix> {
    as_spd(spectral_map(a, |x| 1.0 / x)?)
}

fn check_pair(a: &SpdMatrix, b: &SpdMatrix) -> Result<()> {
    if a.d() != b.d() {
        return Err(Error::DimensionMismatch {
            expected: a.d(),
            got: b.d(),
        });
    }
    Ok(())
}

fn check_weight(lambda: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&lambda) || lambda.is_nan() {
        return Err(Error::ParamRange {
            name: "lambda",
            value: lambda,
            range: "[0, 1]",
        });
    }
    Ok(())
}

/// Weighted arithmetic mean `(1−λ)A + λB`.
pub fn op_arith(a: &SpdMatrix, b: &SpdMatrix, lambda: f64) -> Result<SpdMatrix> {
    check_pair(a, b)?;
    check_weight(lambda)?;
    if lambda == 0.0 {
        return Ok(a.clone());
    }
    if lambda == 1.0 {
        return Ok(b.clone());
    }
    as_spd(a.as_sym().scale(1.0 - lambda).add(&b.as_sym().scale(lambda))?)
}

/// Weighted harmonic mean `((1−λ)A⁻¹ + λB⁻¹)⁻¹`.
pub fn op_harm(a: &SpdMatrix, b: &SpdMatrix, lambda: f64) -> Result<SpdMatrix> {
    check_pair(a, b)?;
    check_weight(lambda)?;
    if lambda == 0.0 {
        return Ok(a.clone());
    }
    if lambda == 1.0 {
        return Ok(b.clone());
    }
    let mix = inverse(a)?
        .as_sym()
        .scale(1.0 - lambda)
        .add(&inverse(b)?.as_sym().scale(lambda))?;
    inverse(&as_spd(mix)?)
}

/// Weighted geometric mean `A^{1/2}(A^{−1/2}BA^{−1/2})^λ A^{1/2}`.
pub fn op_geom(a: &SpdMatrix, b: &SpdMatrix, lambda: f64) -> Result<SpdMatrix> {
    check_pair(a, b)?;
    check_weight(lambda)?;
    if lambda == 0.0 {
        return Ok(a.clone());
    }
    if lambda == 1.0 {
        return Ok(b.clone());
    }
    congruence_map(a, b, |x| x.powf(lambda))
}

/// `A^{1/2} f(A^{−1/2} B A^{−1/2}) A^{1/2}` for a positive spectral map `f`.
fn congruence_map(a: &SpdMatrix, b: &SpdMatrix, f: impl Fn(f64) -> f64) -> Result<SpdMatrix> {
    let d = a.d();
    let s = spectral_map(a, f64::sqrt)?;
    let si = spectral_map(a, |x| 1.0 / x.sqrt())?;
    let m = linalg::mat_mul(
        d,
        si.entries(),
        &linalg::mat_mul(d, b.entries(), si.entries()),
    );
    let m = as_spd(SymMatrix::from_raw_symmetrized(d, m))?;
    let fm = spectral_map(&m, f)?;
    let out = linalg::mat_mul(d, s.entries(), &linalg::mat_mul(d, fm.entries(), s.entries()));
    as_spd(SymMatrix::from_raw_symmetrized(d, out))
}

/// Parallel sum `A // B = (A⁻¹ + B⁻¹)⁻¹`, half the unweighted harmonic mean.
pub fn parallel_sum(a: &SpdMatrix, b: &SpdMatrix) -> Result<SpdMatrix> {
    check_pair(a, b)?;
    inverse(&as_spd(inverse(a)?.as_sym().add(inverse(b)?.as_sym())?)?)
}

/// `F(x) = (x − 1)/log x` with `F(1) = 1`, evaluated without cancellation:
/// the increment `e = x − 1` is exact in floating point near 1, and
/// `ln_1p(e)` keeps full precision where a literal `log x` would not.
pub(crate) fn log_mean_f(x: f64) -> f64 {
    let e = x - 1.0;
    if e == 0.0 {
        1.0
    } else {
        e / e.ln_1p()
    }
}

/// Logarithmic mean `L(A,B) = A^{1/2} F(A^{−1/2}BA^{−1/2}) A^{1/2}` in
/// closed form.
pub fn op_log_mean(a: &SpdMatrix, b: &SpdMatrix) -> Result<SpdMatrix> {
    check_pair(a, b)?;
    congruence_map(a, b, log_mean_f)
}

/// Quadrature oracle for the logarithmic mean along its defining `dt`
/// integral of geometric means.
pub fn op_log_mean_quad_geo(a: &SpdMatrix, b: &SpdMatrix, rule: &QuadRule) -> Result<SpdMatrix> {
    check_pair(a, b)?;
    if rule.measure() != MeasureTag::Lebesgue {
        return Err(Error::ParamRange {
            name: "rule",
            value: f64::NAN,
            range: "lebesgue rule",
        });
    }
    let mut acc = SymMatrix::from_diag(&vec![0.0; a.d()]);
    for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
        acc = acc.add(&op_geom(a, b, t)?.as_sym().scale(w))?;
    }
    as_spd(acc)
}

/// Quadrature oracle for the logarithmic mean along the `μ`-average of
/// harmonic means.
pub fn op_log_mean_quad_harm(a: &SpdMatrix, b: &SpdMatrix, mu: &QuadRule) -> Result<SpdMatrix> {
    check_pair(a, b)?;
    if mu.measure() != MeasureTag::Mu {
        return Err(Error::ParamRange {
            name: "rule",
            value: f64::NAN,
            range: "mu rule",
        });
    }
    let mut acc = SymMatrix::from_diag(&vec![0.0; a.d()]);
    for (&t, &w) in mu.nodes().iter().zip(mu.weights()) {
        acc = acc.add(&op_harm(a, b, t)?.as_sym().scale(w))?;
    }
    as_spd(acc)
}

/// The diamond operation `A◇B = 2A − AB⁻¹A`. The result is symmetric but
/// need not be positive, so it is returned as a plain symmetric matrix.
pub fn op_diamond(a: &SpdMatrix, b: &SpdMatrix) -> Result<SymMatrix> {
    check_pair(a, b)?;
    let d = a.d();
    let binv = inverse(b)?;
    let aba = linalg::mat_mul(
        d,
        a.entries(),
        &linalg::mat_mul(d, binv.entries(), a.entries()),
    );
    a.as_sym()
        .scale(2.0)
        .sub(&SymMatrix::from_raw_symmetrized(d, aba))
}

/// Scalar logarithmic mean `L(a,b) = (a − b)/(log a − log b)`, `L(a,a) = a`.
pub fn scalar_log_mean(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0) || !(b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::ParamRange {
            name: "a,b",
            value: if a > 0.0 { b } else { a },
            range: "(0, ∞)",
        });
    }
    Ok(a * log_mean_f(b / a))
}

/// Scalar weighted means, the 1×1 reference for the bridge checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeanKind {
    Arith,
    Harmonic,
    Geometric,
    Log,
}

impl MeanKind {
    pub fn scalar(self, a: f64, b: f64, lambda: f64) -> f64 {
        match self {
            MeanKind::Arith => (1.0 - lambda) * a + lambda * b,
            MeanKind::Harmonic => 1.0 / ((1.0 - lambda) / a + lambda / b),
            MeanKind::Geometric => a.powf(1.0 - lambda) * b.powf(lambda),
            MeanKind::Log => a * log_mean_f(b / a),
        }
    }
}

/// Result of running the 1-D grid pipeline on parabolas `Q_a`, `Q_b` against
/// the scalar closed form `½·m(a,b)·x²`.
#[derive(Debug, Clone, Serialize)]
pub struct Bridge1dReport {
    pub kind: MeanKind,
    pub a: f64,
    pub b: f64,
    pub lambda: f64,
    pub nodes: usize,
    pub window: f64,
    pub box_half: f64,
    pub scalar_coeff: f64,
    pub max_interior_err: f64,
}

/// Runs the functional pipeline on 1-D parabolas and reports the worst
/// deviation from the scalar closed form on `|x| ≤ window`.
///
/// The grid truncates the parabolas to a box, and every conjugate-based mean
/// of the truncated pair deviates from the scalar formula once the optimal
/// subgradient `c_t·x` leaves the untruncated slope range `min(a,b)·B`. The
/// box half-width is therefore sized as `1.3·window·max(a,b)/min(a,b)`, which
/// keeps the whole window in the regime where the scalar formula is the
/// exact continuum limit and only the O(h²) sampling error remains.
pub fn bridge_check_1d(
    a: f64,
    b: f64,
    lambda: f64,
    kind: MeanKind,
    nodes: usize,
    window: f64,
) -> Result<Bridge1dReport> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::ParamRange {
            name: "a,b",
            value: if a > 0.0 { b } else { a },
            range: "(0, ∞)",
        });
    }
    if !(window > 0.0) || !window.is_finite() {
        return Err(Error::ParamRange {
            name: "window",
            value: window,
            range: "(0, ∞)",
        });
    }
    let ratio = a.max(b) / a.min(b);
    let box_half = (1.3 * window * ratio).max(2.0 * window);
    let fa = GridFn::parabola(a, -box_half, box_half, nodes)?;
    let fb = GridFn::parabola(b, -box_half, box_half, nodes)?;
    let mean = match kind {
        MeanKind::Arith => functional_means::arith(&fa, &fb, lambda)?,
        MeanKind::Harmonic => functional_means::harmonic(&fa, &fb, lambda)?,
        MeanKind::Geometric => {
            let rule = crate::quadrature::gauss_jacobi_nu(lambda, 128)?;
            functional_means::geometric(&fa, &fb, lambda, Some(&rule))?
        }
        MeanKind::Log => {
            let mu = crate::quadrature::mu_rule(256)?;
            functional_means::log_mean_harm(&fa, &fb, Some(&mu))?
        }
    };
    let coeff = kind.scalar(a, b, lambda);
    let mut max_err = 0.0f64;
    for k in 0..mean.len() {
        let x = mean.node_x(k);
        if x.abs() <= window {
            let err = (mean.values()[k].as_f64() - 0.5 * coeff * x * x).abs();
            max_err = max_err.max(err);
        }
    }
    Ok(Bridge1dReport {
        kind,
        a,
        b,
        lambda,
        nodes,
        window,
        box_half,
        scalar_coeff: coeff,
        max_interior_err: max_err,
    })
}

/// Consistency of operator order with pointwise order of the quadratics:
/// the eigenvalue margin of `upper − lower` against the worst sampled
/// `Q_upper(x) − Q_lower(x)` over random unit vectors plus the extremal
/// eigenvector (which witnesses any violation deterministically).
#[derive(Debug, Clone, Serialize)]
pub struct BridgeNdReport {
    pub d: usize,
    pub samples: usize,
    pub eig_margin: f64,
    pub sample_margin: f64,
    pub consistent: bool,
}

pub fn bridge_check_nd(
    lower: &SymMatrix,
    upper: &SymMatrix,
    samples: usize,
    seed: u64,
) -> Result<BridgeNdReport> {
    let d = lower.d();
    if d != upper.d() {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: upper.d(),
        });
    }
    let diff = upper.sub(lower)?;
    let eig = sym_eig(&diff)?;
    let eig_margin = eig.values[0];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut sample_margin = f64::INFINITY;
    let mut check = |x: &[f64]| {
        let dx = linalg::mat_vec(d, diff.entries(), x);
        let q: f64 = 0.5 * dx.iter().zip(x).map(|(p, q)| p * q).sum::<f64>();
        sample_margin = sample_margin.min(q);
    };
    for _ in 0..samples {
        let q = linalg::random_orthogonal(d, &mut rng);
        let x: Vec<f64> = (0..d).map(|i| q[i * d]).collect();
        check(&x);
    }
    let witness: Vec<f64> = (0..d).map(|i| eig.vectors[i * d]).collect();
    check(&witness);
    let tol = 1e-10 * (1.0 + linalg::frobenius(diff.entries()));
    let consistent = (eig_margin >= -tol) == (2.0 * sample_margin >= -tol);
    Ok(BridgeNdReport {
        d,
        samples,
        eig_margin,
        sample_margin,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn diag(v: &[f64]) -> SpdMatrix {
        SpdMatrix::from_diag(v).unwrap()
    }

    fn assert_mat_close(a: &SymMatrix, b: &SymMatrix, tol: f64) {
        assert_eq!(a.d(), b.d());
        for i in 0..a.d() {
            for j in 0..a.d() {
                assert!(
                    (a.get(i, j) - b.get(i, j)).abs() <= tol,
                    "entry ({i},{j}): {} vs {}",
                    a.get(i, j),
                    b.get(i, j)
                );
            }
        }
    }

    #[test]
    fn eig_examples() {
        let e = sym_eig(diag(&[1.0, 4.0]).as_sym()).unwrap();
        assert_abs_diff_eq!(e.values[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.values[1], 4.0, epsilon = 1e-12);
        let id = sym_eig(SpdMatrix::identity(3).as_sym()).unwrap();
        for v in id.values {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn power_examples() {
        let r = spd_power(&diag(&[4.0, 9.0]), 0.5).unwrap();
        assert_abs_diff_eq!(r.get(0, 0), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.get(1, 1), 3.0, epsilon = 1e-12);

        let a = SpdMatrix::new(2, vec![2.0, 0.7, 0.7, 1.5]).unwrap();
        assert_mat_close(spd_power(&a, 1.0).unwrap().as_sym(), a.as_sym(), 1e-12);
        assert_mat_close(
            spd_power(&a, 0.0).unwrap().as_sym(),
            SpdMatrix::identity(2).as_sym(),
            1e-12,
        );
        let root_sq = spd_power(&spd_power(&a, 0.5).unwrap(), 2.0).unwrap();
        assert_mat_close(root_sq.as_sym(), a.as_sym(), 1e-9);
    }

    #[test]
    fn commuting_means_are_scalar_means() {
        let a = diag(&[1.0, 4.0]);
        let b = diag(&[9.0, 1.0]);
        let geo = op_geom(&a, &b, 0.5).unwrap();
        assert_abs_diff_eq!(geo.get(0, 0), 3.0, epsilon = 1e-10);
        assert_abs_diff_eq!(geo.get(1, 1), 2.0, epsilon = 1e-10);
        let ari = op_arith(&a, &b, 0.5).unwrap();
        assert_abs_diff_eq!(ari.get(0, 0), 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ari.get(1, 1), 2.5, epsilon = 1e-12);
        let harm = op_harm(&a, &b, 0.5).unwrap();
        assert_abs_diff_eq!(harm.get(0, 0), 1.8, epsilon = 1e-10);
        assert_abs_diff_eq!(harm.get(1, 1), 1.6, epsilon = 1e-10);
        // A = B is a fixed point of all three.
        for mean in [op_arith, op_harm, op_geom] {
            let m = mean(&a, &a, 0.5).unwrap();
            assert_mat_close(m.as_sym(), a.as_sym(), 1e-10);
        }
    }

    #[test]
    fn parallel_sum_examples() {
        let two_i = diag(&[2.0, 2.0]);
        let p = parallel_sum(&two_i, &two_i).unwrap();
        assert_mat_close(p.as_sym(), SpdMatrix::identity(2).as_sym(), 1e-12);

        let p2 = parallel_sum(&diag(&[1.0, 3.0]), &diag(&[1.0, 6.0])).unwrap();
        assert_abs_diff_eq!(p2.get(0, 0), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(p2.get(1, 1), 2.0, epsilon = 1e-12);

        let a = SpdMatrix::new(2, vec![2.0, 0.3, 0.3, 1.0]).unwrap();
        let b = SpdMatrix::new(2, vec![1.5, -0.2, -0.2, 2.5]).unwrap();
        assert_mat_close(
            parallel_sum(&a, &b).unwrap().as_sym(),
            parallel_sum(&b, &a).unwrap().as_sym(),
            1e-12,
        );
        // A // B = ½ (A !_{1/2} B).
        assert_mat_close(
            parallel_sum(&a, &b).unwrap().as_sym(),
            &op_harm(&a, &b, 0.5).unwrap().as_sym().scale(0.5),
            1e-12,
        );
    }

    #[test]
    fn log_mean_closed_form() {
        let e = std::f64::consts::E;
        let l = op_log_mean(&diag(&[1.0]), &diag(&[e])).unwrap();
        assert_abs_diff_eq!(l.get(0, 0), e - 1.0, epsilon = 1e-12);

        let a = SpdMatrix::new(2, vec![2.0, 0.5, 0.5, 1.2]).unwrap();
        assert_mat_close(op_log_mean(&a, &a).unwrap().as_sym(), a.as_sym(), 1e-10);

        let l2 = op_log_mean(&diag(&[1.0, 4.0]), &diag(&[e, 4.0])).unwrap();
        assert_abs_diff_eq!(l2.get(0, 0), e - 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(l2.get(1, 1), 4.0, epsilon = 1e-10);
    }

    #[test]
    fn log_mean_quadrature_oracles_agree() {
        let rule = crate::quadrature::gauss_legendre(64).unwrap();
        let mu = crate::quadrature::mu_rule(64).unwrap();
        let a = diag(&[1.0]);
        let b = diag(&[9.0]);
        let want = 8.0 / 9f64.ln();
        assert_abs_diff_eq!(
            op_log_mean_quad_geo(&a, &b, &rule).unwrap().get(0, 0),
            want,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(
            op_log_mean_quad_harm(&a, &b, &mu).unwrap().get(0, 0),
            want,
            epsilon = 1e-9
        );
        let c = SpdMatrix::new(2, vec![2.0, 0.6, 0.6, 1.1]).unwrap();
        assert_mat_close(
            op_log_mean_quad_geo(&c, &c, &rule).unwrap().as_sym(),
            c.as_sym(),
            1e-10,
        );
    }

    #[test]
    fn diamond_examples() {
        let d = op_diamond(&diag(&[1.0]), &diag(&[2.0])).unwrap();
        assert_abs_diff_eq!(d.get(0, 0), 1.5, epsilon = 1e-12);
        // Indefinite witness: a = 1, b = 0.1 gives 2 − 10 = −8.
        let neg = op_diamond(&diag(&[1.0]), &diag(&[0.1])).unwrap();
        assert_abs_diff_eq!(neg.get(0, 0), -8.0, epsilon = 1e-12);
        // B − A◇B is PSD.
        let a = SpdMatrix::new(2, vec![1.5, 0.4, 0.4, 2.0]).unwrap();
        let b = SpdMatrix::new(2, vec![2.5, -0.3, -0.3, 1.0]).unwrap();
        let gap = b.as_sym().sub(&op_diamond(&a, &b).unwrap()).unwrap();
        assert!(gap.min_eigenvalue().unwrap() >= -1e-12);
    }

    #[test]
    fn scalar_log_mean_examples() {
        let e = std::f64::consts::E;
        assert_abs_diff_eq!(scalar_log_mean(1.0, e).unwrap(), e - 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(scalar_log_mean(5.0, 5.0).unwrap(), 5.0, epsilon = 1e-12);
        for &(a, b) in &[(0.3, 7.0), (2.0, 2.0000001), (10.0, 0.01)] {
            assert_abs_diff_eq!(
                scalar_log_mean(a, b).unwrap(),
                scalar_log_mean(b, a).unwrap(),
                epsilon = 1e-12 * (1.0 + a + b)
            );
        }
        assert!(scalar_log_mean(-1.0, 2.0).is_err());
    }

    #[test]
    fn bridge_1d_examples() {
        // Harmonic: a = 1, b = 3, λ = ½ against coefficient 1.5; the window
        // covers x = 0.5 where the deviation must stay below 1e−4.
        let r = bridge_check_1d(1.0, 3.0, 0.5, MeanKind::Harmonic, 513, 0.55).unwrap();
        assert_abs_diff_eq!(r.scalar_coeff, 1.5, epsilon = 1e-12);
        assert!(r.max_interior_err <= 1e-4, "err {}", r.max_interior_err);

        // Logarithmic: a = 1, b = e² against (e² − 1)/2.
        let b = std::f64::consts::E.powi(2);
        let r = bridge_check_1d(1.0, b, 0.5, MeanKind::Log, 513, 0.55).unwrap();
        assert_abs_diff_eq!(r.scalar_coeff, (b - 1.0) / 2.0, epsilon = 1e-12);
        assert!(r.max_interior_err <= 1e-3, "err {}", r.max_interior_err);
    }

    #[test]
    fn bridge_nd_consistency() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let a = crate::verify::gen_spd(&mut rng, 4, 100.0).unwrap();
            let b = crate::verify::gen_spd(&mut rng, 4, 100.0).unwrap();
            // A∇B − A♯B is PSD; order and samples must agree.
            let geo = op_geom(&a, &b, 0.5).unwrap();
            let ari = op_arith(&a, &b, 0.5).unwrap();
            let rep = bridge_check_nd(geo.as_sym(), ari.as_sym(), 100, 99).unwrap();
            assert!(rep.consistent);
            assert!(rep.eig_margin >= -1e-10);
            // And a generally indefinite difference still reports consistently.
            let rep2 = bridge_check_nd(a.as_sym(), b.as_sym(), 100, 7).unwrap();
            assert!(rep2.consistent);
        }
    }
}
