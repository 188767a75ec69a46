//! Quadrature rules and integral identities for the measures behind the
//! means.
//!
//! Three measures on `(0,1)` appear throughout:
//!
//! - Lebesgue `dt` (Gauss–Legendre);
//! - `dν_λ(t) = (sin πλ / π) · t^{λ−1} (1−t)^{−λ} dt`, the probability
//!   measure whose harmonic-mean average is the weighted geometric mean
//!   (Gauss–Jacobi with exponents `α = −λ`, `β = λ−1`);
//! - `dμ(t) = dt / (t(1−t)(π² + log²(t/(1−t))))`, the symmetric probability
//!   measure whose harmonic-mean average is the logarithmic mean.
//!
//! Nodes and weights come from the Golub–Welsch eigenvalue method with the
//! module's own symmetric tridiagonal QL iteration; `μ` is handled by the
//! logit/tangent substitution `t = σ(π tan(π(v − ½)))`, which pushes `dμ`
//! forward to the uniform measure `dv` exactly, sidestepping the density's
//! `1/(t log² t)` endpoint spikes that defeat fixed-order rules in `t`.

use serde::Serialize;

use crate::{Error, Result};

use std::f64::consts::PI;

/// Quadrature nodes/weights representing a measure on `(0,1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    measure: MeasureTag,
}

/// Which measure a rule integrates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "measure")]
pub enum MeasureTag {
    Lebesgue,
    Nu { lambda: f64 },
    Mu,
}

impl QuadRule {
    #[inline]
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    #[inline]
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    #[inline]
    pub fn measure(&self) -> MeasureTag {
        self.measure
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * f(t))
            .sum()
    }

    fn validate(self) -> Result<QuadRule> {
        debug_assert!(self
            .nodes
            .windows(2)
            .all(|w| w[0] < w[1]));
        debug_assert!(self.nodes.iter().all(|&t| 0.0 < t && t < 1.0));
        debug_assert!(self.weights.iter().all(|&w| w > 0.0));
        Ok(self)
    }
}

const MAX_RULE_NODES: usize = 512;

/// Gauss–Legendre rule mapped to `(0,1)`: exact for polynomials of degree
/// `2n − 1`, total mass 1.
pub fn gauss_legendre(n: usize) -> Result<QuadRule> {
    if n == 0 || n > MAX_RULE_NODES {
        return Err(Error::NodeCount {
            got: n,
            min: 1,
            max: MAX_RULE_NODES,
        });
    }
    let (nodes_sym, weights_sym) = jacobi_rule_symmetric(n, 0.0, 0.0, 2.0)?;
    let nodes = nodes_sym.iter().map(|x| 0.5 * (x + 1.0)).collect();
    let weights = weights_sym.iter().map(|w| 0.5 * w).collect();
    QuadRule {
        nodes,
        weights,
        measure: MeasureTag::Lebesgue,
    }
    .validate()
}

/// Gauss–Jacobi rule for the probability measure `ν_λ`,
/// `dν_λ(t) = (sin πλ / π) t^{λ−1}(1−t)^{−λ} dt` on `(0,1)`.
///
/// On `[−1,1]` this is the Jacobi weight with `α = −λ`, `β = λ − 1`; its
/// total mass is `π / sin(πλ)` in closed form, so the probability
/// normalization is exact by construction. Endpoint `λ` values are rejected:
/// the means handle those cases by exact short-circuit, not by quadrature.
pub fn gauss_jacobi_nu(lambda: f64, n: usize) -> Result<QuadRule> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::ParamRange {
            name: "lambda",
            value: lambda,
            range: "(0, 1)",
        });
    }
    if n == 0 || n > MAX_RULE_NODES {
        return Err(Error::NodeCount {
            got: n,
            min: 1,
            max: MAX_RULE_NODES,
        });
    }
    let mu0 = PI / (PI * lambda).sin();
    let (nodes_sym, weights_sym) = jacobi_rule_symmetric(n, -lambda, lambda - 1.0, mu0)?;
    let scale = (PI * lambda).sin() / PI;
    let nodes: Vec<f64> = nodes_sym.iter().map(|x| 0.5 * (x + 1.0)).collect();
    let weights = weights_sym.iter().map(|w| scale * w).collect();
    QuadRule {
        nodes,
        weights,
        measure: MeasureTag::Nu { lambda },
    }
    .validate()
}

/// Rule for the probability measure `μ`. The substitution
/// `u = log(t/(1−t))`, `u = π tan(π(v − ½))` maps `dμ` to the uniform
/// measure `dv` on `(0,1)` exactly, so the rule is Gauss–Legendre in `v`
/// with nodes pushed through the map. Extreme nodes that round to 0 or 1 in
/// floating point are clamped just inside the open interval.
pub fn mu_rule(n: usize) -> Result<QuadRule> {
    let gl = gauss_legendre(n)?;
    // Floats resolve (0,1) asymmetrically (subnormals near 0, 2⁻⁵³ steps
    // near 1), so the rule is built from the bottom half — clamped at the
    // resolution floor, saturated nodes merging their mass — and mirrored.
    // Any integrand Lipschitz in t is unaffected at f64 precision.
    let t_floor = f64::EPSILON / 2.0;
    let half = n / 2;
    let mut lo_nodes: Vec<f64> = Vec::with_capacity(half);
    let mut lo_weights: Vec<f64> = Vec::with_capacity(half);
    for k in 0..half {
        let v = gl.nodes[k];
        let t = sigmoid(PI * (PI * (v - 0.5)).tan()).max(t_floor);
        let w = gl.weights[k];
        match lo_nodes.last() {
            Some(&last) if last >= t => *lo_weights.last_mut().unwrap() += w,
            _ => {
                lo_nodes.push(t);
                lo_weights.push(w);
            }
        }
    }
    let mut nodes = lo_nodes.clone();
    let mut weights = lo_weights.clone();
    if n % 2 == 1 {
        nodes.push(0.5);
        weights.push(gl.weights[half]);
    }
    for k in (0..lo_nodes.len()).rev() {
        nodes.push(1.0 - lo_nodes[k]);
        weights.push(lo_weights[k]);
    }
    QuadRule {
        nodes,
        weights,
        measure: MeasureTag::Mu,
    }
    .validate()
}

#[inline]
pub(crate) fn sigmoid(u: f64) -> f64 {
    if u >= 0.0 {
        1.0 / (1.0 + (-u).exp())
    } else {
        let e = u.exp();
        e / (1.0 + e)
    }
}

// ---------------------------------------------------------------------------
// Golub–Welsch machinery
// ---------------------------------------------------------------------------

/// Nodes and weights on `[−1,1]` for the Jacobi weight `(1−x)^α (1+x)^β`
/// with total mass `mu0`, via the recurrence-coefficient eigenproblem.
fn jacobi_rule_symmetric(
    n: usize,
    alpha: f64,
    beta: f64,
    mu0: f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let (mut diag, mut off) = jacobi_recurrence(n, alpha, beta);
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    tridiag_ql_first_row(&mut diag, &mut off, &mut z)?;
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let nodes: Vec<f64> = idx.iter().map(|&i| diag[i]).collect();
    let weights: Vec<f64> = idx.iter().map(|&i| mu0 * z[i] * z[i]).collect();
    Ok((nodes, weights))
}

/// Three-term recurrence coefficients of the monic-orthonormal Jacobi chain:
/// `diag[k]` and `off[k]` (connecting k and k+1) of the symmetric tridiagonal
/// Jacobi matrix. The first off-diagonal entry has its own formula; the
/// generic one is 0/0 at `k = 1` when `α + β = −1`, exactly the `ν_λ` case.
fn jacobi_recurrence(n: usize, alpha: f64, beta: f64) -> (Vec<f64>, Vec<f64>) {
    let ab = alpha + beta;
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    diag.push((beta - alpha) / (ab + 2.0));
    for k in 1..n {
        let nab = 2.0 * k as f64 + ab;
        diag.push((beta * beta - alpha * alpha) / (nab * (nab + 2.0)));
    }
    if n > 1 {
        let b1 = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        off.push(b1.sqrt());
    }
    for k in 2..n {
        let kf = k as f64;
        let nab = 2.0 * kf + ab;
        let b2 = 4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab)
            / (nab * nab * (nab + 1.0) * (nab - 1.0));
        off.push(b2.sqrt());
    }
    (diag, off)
}

/// Symmetric tridiagonal QL iteration with implicit shifts, accumulating only
/// the first row of the eigenvector matrix (all Golub–Welsch needs).
/// `diag` becomes the unsorted eigenvalues; `z` starts as `e₁` and ends as
/// the first components of the normalized eigenvectors.
fn tridiag_ql_first_row(diag: &mut [f64], off: &mut Vec<f64>, z: &mut [f64]) -> Result<()> {
    let n = diag.len();
    if n <= 1 {
        return Ok(());
    }
    off.push(0.0); // sentinel
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::EigenNoConvergence { sweeps: 50 });
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            let denom = g + if g >= 0.0 { r.abs() } else { -r.abs() };
            g = diag[m] - diag[l] + off[l] / denom;
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Closed forms and integral identities
// ---------------------------------------------------------------------------

/// `φ(x) = ∫₀¹ x^v sin(πv) dv = (x+1)π / (π² + log²x)` for `x > 0`.
pub fn phi(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::ParamRange {
            name: "x",
            value: x,
            range: "(0, ∞)",
        });
    }
    let lx = x.ln();
    Ok((x + 1.0) * PI / (PI * PI + lx * lx))
}

/// Quadrature oracle for [`phi`]: Gauss–Legendre applied to the defining
/// integral.
pub fn phi_quad(x: f64, n: usize) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::ParamRange {
            name: "x",
            value: x,
            range: "(0, ∞)",
        });
    }
    let rule = gauss_legendre(n)?;
    let lx = x.ln();
    Ok(rule.integrate(|v| (v * lx).exp() * (PI * v).sin()))
}

/// Density of `μ`: `Ψ(t) = 1/(t(1−t)(π² + log²(t/(1−t))))`, symmetric about
/// `t = ½`.
pub fn psi_density(t: f64) -> Result<f64> {
    check_open_unit("t", t)?;
    let u = logit(t);
    Ok(1.0 / (t * (1.0 - t) * (PI * PI + u * u)))
}

/// `ω(t) = 1/(t(π² + log²(t/(1−t)))) = (1−t)·Ψ(t)`.
pub fn omega(t: f64) -> Result<f64> {
    check_open_unit("t", t)?;
    let u = logit(t);
    Ok(1.0 / (t * (PI * PI + u * u)))
}

fn check_open_unit(name: &'static str, v: f64) -> Result<()> {
    if !(v > 0.0 && v < 1.0) {
        return Err(Error::ParamRange {
            name,
            value: v,
            range: "(0, 1)",
        });
    }
    Ok(())
}

#[inline]
fn logit(t: f64) -> f64 {
    (t / (1.0 - t)).ln()
}

/// `∫_{−π/2}^{Θ} f(π tan θ) dθ / π` by Gauss–Legendre: the tangent map pulls
/// `du/(π² + u²)` back to `dθ/π`, so this evaluates `∫_{−∞}^{L} f(u)/(π²+u²) du`
/// with `Θ = atan(L/π)` for integrands `f` bounded on the line.
fn cauchy_weighted_integral(f: impl Fn(f64) -> f64, theta_hi: f64, n: usize) -> f64 {
    let rule = gauss_legendre(n).expect("static node count");
    let lo = -PI / 2.0;
    let span = theta_hi - lo;
    rule.integrate(|v| {
        let theta = lo + span * v;
        f(PI * theta.tan())
    }) * span
        / PI
}

/// Number of Gauss nodes used for the `ω`-type integrals; doubled for the
/// error estimate.
const IS_NODES: usize = 200;

/// `∫₀^c ω(t) dt` through the logit substitution: the integrand becomes
/// `(1−σ(u))/(π² + u²)`, smooth up to `logit(c)`.
fn omega_partial(c: f64, n: usize) -> f64 {
    let theta_hi = (logit(c) / PI).atan();
    cauchy_weighted_integral(|u| 1.0 - sigmoid(u), theta_hi, n)
}

/// `I_s = s∫₀^s ω + (1−s)∫₀^{1−s} ω` together with a quadrature error
/// estimate (difference against the doubled-node evaluation).
pub fn i_s_with_error(s: f64) -> Result<(f64, f64)> {
    check_open_unit("s", s)?;
    let at = |n: usize| s * omega_partial(s, n) + (1.0 - s) * omega_partial(1.0 - s, n);
    let coarse = at(IS_NODES);
    let fine = at(2 * IS_NODES);
    Ok((fine, (fine - coarse).abs()))
}

/// `I_s ∈ [¼, ½]`; see [`i_s_with_error`] for the error estimate.
pub fn i_s(s: f64) -> Result<f64> {
    Ok(i_s_with_error(s)?.0)
}

/// `I = 4·I_{1/2} ∈ [1, 2]`, with quadrature error estimate. No closed form
/// for `I_{1/2}` is known; the numerical value is the deliverable.
pub fn i_total_with_error() -> (f64, f64) {
    let (v, e) = i_s_with_error(0.5).expect("0.5 is interior");
    (4.0 * v, 4.0 * e)
}

/// One numerically verified integral identity.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub value: f64,
    pub expected: f64,
    pub error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityCheck {
    fn new(name: &str, value: f64, expected: f64, tolerance: f64) -> IdentityCheck {
        let error = (value - expected).abs();
        IdentityCheck {
            name: name.to_string(),
            value,
            expected,
            error,
            tolerance,
            pass: error <= tolerance,
        }
    }
}

/// The four integral identities tied to the measure `μ`:
/// the two `ω`-type integrals over `(0,1)` equal `½`, and the tangent- and
/// `u`-substitution forms equal `¼`. Each is evaluated after an exact change
/// of variables onto the Cauchy-weighted line.
pub fn check_547() -> Vec<IdentityCheck> {
    let tol = 1e-8;
    let half_theta = PI / 2.0;
    // ∫₀¹ dt/(t(π²+log²(t/(1−t)))): logit substitution leaves (1−σ(u)).
    let i1 = cauchy_weighted_integral(|u| 1.0 - sigmoid(u), half_theta, 256);
    // The mirrored integral with 1/(1−t) leaves σ(u).
    let i2 = cauchy_weighted_integral(sigmoid, half_theta, 256);
    // ∫₀^{π/2} tan z dz/(π²+4log²(tan z)): w = 2·log tan z gives ½·σ(w) weight.
    let i3 = 0.5 * cauchy_weighted_integral(sigmoid, half_theta, 256);
    // ∫₀^∞ u du/((1+u²)(π²+4log²u)): w = 2·log u gives the same reduction.
    let i4 = 0.5 * cauchy_weighted_integral(sigmoid, half_theta, 384);
    vec![
        IdentityCheck::new("omega-integral-over-t", i1, 0.5, tol),
        IdentityCheck::new("omega-integral-over-1mt", i2, 0.5, tol),
        IdentityCheck::new("tangent-form", i3, 0.25, tol),
        IdentityCheck::new("u-form", i4, 0.25, tol),
    ]
}

/// Machine-readable report of every measure identity the quadrature layer
/// claims, at the given node count.
#[derive(Debug, Clone, Serialize)]
pub struct QuadCheckReport {
    pub nodes: usize,
    pub checks: Vec<IdentityCheck>,
    pub pass: bool,
}

pub fn quadcheck_report(nodes: usize) -> Result<QuadCheckReport> {
    let mut checks = Vec::new();
    for k in 1..=9 {
        let lambda = k as f64 / 10.0;
        let rule = gauss_jacobi_nu(lambda, nodes)?;
        checks.push(IdentityCheck::new(
            &format!("nu({lambda:.1})-mass"),
            rule.total_mass(),
            1.0,
            1e-10,
        ));
        checks.push(IdentityCheck::new(
            &format!("nu({lambda:.1})-mean"),
            rule.integrate(|t| t),
            lambda,
            1e-10,
        ));
    }
    let mu = mu_rule(nodes)?;
    checks.push(IdentityCheck::new("mu-mass", mu.total_mass(), 1.0, 1e-10));
    checks.push(IdentityCheck::new(
        "mu-mean",
        mu.integrate(|t| t),
        0.5,
        1e-10,
    ));
    let max_node_asym = (0..mu.len() / 2)
        .map(|k| (mu.nodes()[k] + mu.nodes()[mu.len() - 1 - k] - 1.0).abs())
        .fold(0.0f64, f64::max);
    checks.push(IdentityCheck::new(
        "mu-node-symmetry",
        max_node_asym,
        0.0,
        1e-12,
    ));
    for &x in &[0.1, 1.0, 5.0, 50.0] {
        checks.push(IdentityCheck::new(
            &format!("phi({x})"),
            phi_quad(x, 64)?,
            phi(x)?,
            1e-10,
        ));
    }
    for c in check_547() {
        checks.push(c);
    }
    for k in 1..=9 {
        let s = k as f64 / 10.0;
        let (v, err) = i_s_with_error(s)?;
        let outside = (0.25 - v).max(v - 0.5).max(0.0);
        checks.push(IdentityCheck::new(
            &format!("I_s({s:.1})-in-[1/4,1/2]"),
            outside,
            0.0,
            1e-8 + err,
        ));
    }
    let (i_tot, i_err) = i_total_with_error();
    let outside = (1.0 - i_tot).max(i_tot - 2.0).max(0.0);
    checks.push(IdentityCheck::new(
        "I-in-[1,2]",
        outside,
        0.0,
        1e-8 + i_err,
    ));
    let pass = checks.iter().all(|c| c.pass);
    Ok(QuadCheckReport {
        nodes,
        checks,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn legendre_midpoint_and_degree() {
        let r1 = gauss_legendre(1).unwrap();
        assert_eq!(r1.len(), 1);
        assert_abs_diff_eq!(r1.nodes()[0], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(r1.weights()[0], 1.0, epsilon = 1e-15);

        // Degree-3 exactness with two nodes: ∫₀¹ t³ dt = ¼.
        let r2 = gauss_legendre(2).unwrap();
        assert_abs_diff_eq!(r2.integrate(|t| t * t * t), 0.25, epsilon = 1e-15);

        let r64 = gauss_legendre(64).unwrap();
        assert_abs_diff_eq!(r64.total_mass(), 1.0, epsilon = 1e-13);
        assert!(gauss_legendre(0).is_err());
        assert!(gauss_legendre(513).is_err());
    }

    #[test]
    fn nu_mass_and_mean() {
        for k in 1..=9 {
            let lambda = k as f64 / 10.0;
            let rule = gauss_jacobi_nu(lambda, 64).unwrap();
            assert_abs_diff_eq!(rule.total_mass(), 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(rule.integrate(|t| t), lambda, epsilon = 1e-12);
        }
        assert!(gauss_jacobi_nu(0.0, 16).is_err());
        assert!(gauss_jacobi_nu(1.0, 16).is_err());
    }

    #[test]
    fn nu_half_is_reflection_symmetric() {
        let rule = gauss_jacobi_nu(0.5, 32).unwrap();
        let n = rule.len();
        for k in 0..n {
            assert_abs_diff_eq!(
                rule.nodes()[k] + rule.nodes()[n - 1 - k],
                1.0,
                epsilon = 1e-12
            );
            assert_abs_diff_eq!(
                rule.weights()[k],
                rule.weights()[n - 1 - k],
                epsilon = 1e-12
            );
        }
    }

    /// Moments of ν_λ against the Beta-function closed form
    /// `sin(πλ)/π · B(k+λ, 1−λ)`, evaluated through log-Gamma.
    #[test]
    fn nu_moments_match_beta_closed_form() {
        use statrs::function::gamma::ln_gamma;
        let beta = |a: f64, b: f64| (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp();
        for &lambda in &[0.17, 0.5, 0.83] {
            let rule = gauss_jacobi_nu(lambda, 64).unwrap();
            for k in 0..=4u32 {
                let want = (PI * lambda).sin() / PI * beta(k as f64 + lambda, 1.0 - lambda);
                let got = rule.integrate(|t| t.powi(k as i32));
                assert_abs_diff_eq!(got, want, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn mu_identities() {
        let rule = mu_rule(64).unwrap();
        assert_abs_diff_eq!(rule.total_mass(), 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(rule.integrate(|t| t), 0.5, epsilon = 1e-10);
        let n = rule.len();
        for k in 0..n {
            assert_abs_diff_eq!(
                rule.nodes()[k] + rule.nodes()[n - 1 - k],
                1.0,
                epsilon = 1e-12
            );
        }
        // Doubling the node count moves smooth integrals by < 1e−9.
        let fine = mu_rule(128).unwrap();
        for f in [|t: f64| t * t, |t: f64| t.exp()] {
            assert!((rule.integrate(f) - fine.integrate(f)).abs() < 1e-9);
        }
    }

    #[test]
    fn phi_closed_form_and_oracle() {
        assert_abs_diff_eq!(phi(1.0).unwrap(), 2.0 / PI, epsilon = 1e-15);
        let epi = PI.exp();
        assert_abs_diff_eq!(phi(epi).unwrap(), (epi + 1.0) / (2.0 * PI), epsilon = 1e-12);
        assert!((phi_quad(5.0, 64).unwrap() - phi(5.0).unwrap()).abs() <= 1e-10);
        assert!(phi(0.0).is_err());
        assert!(phi(-2.0).is_err());
    }

    #[test]
    fn density_values_and_symmetry() {
        assert_abs_diff_eq!(psi_density(0.5).unwrap(), 4.0 / (PI * PI), epsilon = 1e-15);
        assert_abs_diff_eq!(omega(0.5).unwrap(), 2.0 / (PI * PI), epsilon = 1e-15);
        for &t in &[0.03, 0.2, 0.41, 0.77] {
            assert_abs_diff_eq!(
                psi_density(t).unwrap(),
                psi_density(1.0 - t).unwrap(),
                epsilon = 1e-12
            );
            assert_abs_diff_eq!(
                psi_density(t).unwrap(),
                omega(t).unwrap() / (1.0 - t),
                epsilon = 1e-12
            );
        }
        assert!(psi_density(0.0).is_err());
        assert!(omega(1.0).is_err());
    }

    #[test]
    fn i_s_bounds_and_symmetry() {
        for k in 1..=9 {
            let s = k as f64 / 10.0;
            let (v, err) = i_s_with_error(s).unwrap();
            assert!(err <= 1e-8, "error estimate {err:.2e} at s={s}");
            assert!((0.25 - 1e-9..=0.5 + 1e-9).contains(&v), "I_s={v} at s={s}");
            let v_mirror = i_s(1.0 - s).unwrap();
            assert_abs_diff_eq!(v, v_mirror, epsilon = 1e-8);
        }
        let (i_tot, err) = i_total_with_error();
        assert!(err <= 1e-8);
        assert!((1.0..=2.0).contains(&i_tot));
        assert!(i_s(0.0).is_err());
    }

    #[test]
    fn remark_integrals() {
        let checks = check_547();
        assert_eq!(checks.len(), 4);
        for c in &checks {
            assert!(c.pass, "{} = {} (expected {})", c.name, c.value, c.expected);
        }
    }

    #[test]
    fn quadcheck_report_passes() {
        let report = quadcheck_report(64).unwrap();
        assert!(report.pass, "{:#?}", report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
        // Serializes cleanly.
        let s = serde_json::to_string(&report).unwrap();
        assert!(s.contains("mu-mass"));
    }
}
