//! Weighted means of two grid functionals, the logarithmic mean, the
//! interpolating families `G_s` / `U_s`, and the diamond operation.
//!
//! Every mean of a pair `(f, g)` is produced on one fixed output grid
//! spanning the convex hull of the two effective domains (with `max` of the
//! node counts). Each weighted harmonic mean `f!_t g` is evaluated there
//! exactly through the shared dual tabulation ([`crate::pl::DualPair`]) and
//! is `+∞` outside its own domain `(1−t)·dom f + t·dom g`; the `+∞`-absorbing
//! weighted sum then makes an integral mean's domain the intersection over
//! its quadrature nodes, a conservative inner approximation of the true
//! domain. Means of the same pair therefore live on the same grid and are
//! directly comparable node by node.
//!
//! Endpoint parameters are exact short-circuits: `λ = 0` returns `f`
//! itself and `λ = 1` returns `g`, never a `0·(+∞)`-contaminated sum.

use crate::convex_core::GridFn;
use crate::extreal::ExtReal;
use crate::pl::{DualPair, OutGrid, PlFn};
use crate::quadrature::{self, MeasureTag, QuadRule};
use crate::{Error, Result};

/// Default node count for `ν_λ` rules inside geometric means.
pub const DEFAULT_NU_NODES: usize = 64;
/// Default node count for `μ` rules.
pub const DEFAULT_MU_NODES: usize = 64;
/// Default node count for the outer `dt` integral of the logarithmic mean.
pub const DEFAULT_DT_NODES: usize = 128;

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

fn check_doms_intersect(f: &GridFn, g: &GridFn) -> Result<()> {
    if f.dom_hi() < g.dom_lo() || g.dom_hi() < f.dom_lo() {
        return Err(Error::EmptyDomainIntersection);
    }
    Ok(())
}

/// The common output grid for means of `(f, g)`: spans
/// `conv(dom f ∪ dom g)`, node count `max` of the operands'. Symmetric in
/// the pair, so means of `(f, g)` and `(g, f)` land on identical grids.
pub(crate) fn output_grid(f: &GridFn, g: &GridFn) -> OutGrid {
    OutGrid::new(
        f.dom_lo().min(g.dom_lo()),
        f.dom_hi().max(g.dom_hi()),
        f.len().max(g.len()),
    )
}

fn build(grid: &OutGrid, values: Vec<ExtReal>) -> Result<GridFn> {
    GridFn::new(grid.lo, grid.hi(), values).map_err(|e| match e {
        Error::Improper => Error::ImproperResult,
        other => other,
    })
}

/// Weighted arithmetic mean `(1−λ)f + λg`, with the `+∞`-absorbing sum; its
/// domain is `dom f ∩ dom g`.
pub fn arith(f: &GridFn, g: &GridFn, lambda: f64) -> Result<GridFn> {
    check_weight(lambda)?;
    if lambda == 0.0 {
        return Ok(f.clone());
    }
    if lambda == 1.0 {
        return Ok(g.clone());
    }
    check_doms_intersect(f, g)?;
    let grid = output_grid(f, g);
    let values = (0..grid.n)
        .map(|k| {
            let x = grid.node(k);
            ExtReal::scale_nonneg(1.0 - lambda, f.eval(x))
                .add(ExtReal::scale_nonneg(lambda, g.eval(x)))
        })
        .collect();
    build(&grid, values)
}

/// Weighted harmonic mean `((1−λ)f* + λg*)*`, computed through the exact
/// conjugates; its domain is `(1−λ)·dom f + λ·dom g`.
pub fn harmonic(f: &GridFn, g: &GridFn, lambda: f64) -> Result<GridFn> {
    check_weight(lambda)?;
    if lambda == 0.0 {
        return Ok(f.clone());
    }
    if lambda == 1.0 {
        return Ok(g.clone());
    }
    let grid = output_grid(f, g);
    let mut pair = DualPair::new(f, g);
    build(&grid, pair.harmonic_values(lambda, &grid))
}

/// Weighted sum `Σ w_k · (f!_{t_k} g)` over arbitrary `(t_k, w_k)` pairs on
/// the common output grid; the building block of every integral mean.
fn weighted_harmonic_sum<I>(f: &GridFn, g: &GridFn, params: I) -> Result<GridFn>
where
    I: IntoIterator<Item = (f64, f64)>,
{
    let grid = output_grid(f, g);
    let mut pair = DualPair::new(f, g);
    let mut acc = vec![ExtReal::ZERO; grid.n];
    for (t, w) in params {
        pair.accumulate_harmonic(t, w, &grid, &mut acc);
    }
    build(&grid, acc)
}

fn expect_nu(rule: &QuadRule, lambda: f64) -> Result<()> {
    match rule.measure() {
        MeasureTag::Nu { lambda: l } if (l - lambda).abs() <= 1e-12 => Ok(()),
        _ => Err(Error::ParamRange {
            name: "rule",
            value: lambda,
            range: "nu(lambda) rule matching the mean's weight",
        }),
    }
}

fn expect_mu(rule: &QuadRule) -> Result<()> {
    match rule.measure() {
        MeasureTag::Mu => Ok(()),
        _ => Err(Error::ParamRange {
            name: "rule",
            value: f64::NAN,
            range: "mu rule",
        }),
    }
}

fn expect_lebesgue(rule: &QuadRule) -> Result<()> {
    match rule.measure() {
        MeasureTag::Lebesgue => Ok(()),
        _ => Err(Error::ParamRange {
            name: "rule",
            value: f64::NAN,
            range: "lebesgue rule",
        }),
    }
}

/// Weighted geometric mean: the `ν_λ`-average of harmonic means,
/// `∫₀¹ f!_t g dν_λ(t)`. Pass a precomputed `ν_λ` rule or `None` for the
/// default 64-node one; endpoints short-circuit exactly.
pub fn geometric(f: &GridFn, g: &GridFn, lambda: f64, rule: Option<&QuadRule>) -> Result<GridFn> {
    check_weight(lambda)?;
    if lambda == 0.0 {
        return Ok(f.clone());
    }
    if lambda == 1.0 {
        return Ok(g.clone());
    }
    check_doms_intersect(f, g)?;
    let default_rule;
    let rule = match rule {
        Some(r) => {
            expect_nu(r, lambda)?;
            r
        }
        None => {
            default_rule = quadrature::gauss_jacobi_nu(lambda, DEFAULT_NU_NODES)?;
            &default_rule
        }
    };
    weighted_harmonic_sum(
        f,
        g,
        rule.nodes().iter().copied().zip(rule.weights().iter().copied()),
    )
}

/// Logarithmic mean via its defining `dt` integral of geometric means:
/// `L(f,g) = ∫₀¹ f♯_t g dt`, Gauss–Legendre outside, `ν_t` rules inside.
pub fn log_mean_geo(
    f: &GridFn,
    g: &GridFn,
    outer: Option<&QuadRule>,
    inner_nodes: usize,
) -> Result<GridFn> {
    check_doms_intersect(f, g)?;
    let default_outer;
    let outer = match outer {
        Some(r) => {
            expect_lebesgue(r)?;
            r
        }
        None => {
            default_outer = quadrature::gauss_legendre(DEFAULT_DT_NODES)?;
            &default_outer
        }
    };
    let mut params: Vec<(f64, f64)> = Vec::with_capacity(outer.len() * inner_nodes);
    for (&t_outer, &w_outer) in outer.nodes().iter().zip(outer.weights()) {
        let inner = quadrature::gauss_jacobi_nu(t_outer, inner_nodes)?;
        for (&t, &w) in inner.nodes().iter().zip(inner.weights()) {
            params.push((t, w_outer * w));
        }
    }
    weighted_harmonic_sum(f, g, params)
}

/// Logarithmic mean via the `μ`-average of harmonic means:
/// `L(f,g) = ∫₀¹ f!_t g dμ(t)`. Agrees with [`log_mean_geo`] up to
/// quadrature error; this route is the cheap one.
pub fn log_mean_harm(f: &GridFn, g: &GridFn, mu: Option<&QuadRule>) -> Result<GridFn> {
    check_doms_intersect(f, g)?;
    let default_mu;
    let mu = match mu {
        Some(r) => {
            expect_mu(r)?;
            r
        }
        None => {
            default_mu = quadrature::mu_rule(DEFAULT_MU_NODES)?;
            &default_mu
        }
    };
    weighted_harmonic_sum(
        f,
        g,
        mu.nodes().iter().copied().zip(mu.weights().iter().copied()),
    )
}

/// The interpolating family `G_s(f,g;λ) = ∫₀¹ f!_{st+(1−s)λ} g dν_λ(t)`:
/// `G_0` is the harmonic mean, `G_1` the geometric mean, increasing in `s`.
pub fn family_g(
    f: &GridFn,
    g: &GridFn,
    lambda: f64,
    s: f64,
    rule: Option<&QuadRule>,
) -> Result<GridFn> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::ParamRange {
            name: "lambda",
            value: lambda,
            range: "(0, 1)",
        });
    }
    if !(0.0..=1.0).contains(&s) || s.is_nan() {
        return Err(Error::ParamRange {
            name: "s",
            value: s,
            range: "[0, 1]",
        });
    }
    check_doms_intersect(f, g)?;
    let default_rule;
    let rule = match rule {
        Some(r) => {
            expect_nu(r, lambda)?;
            r
        }
        None => {
            default_rule = quadrature::gauss_jacobi_nu(lambda, DEFAULT_NU_NODES)?;
            &default_rule
        }
    };
    weighted_harmonic_sum(
        f,
        g,
        rule.nodes()
            .iter()
            .zip(rule.weights())
            .map(|(&t, &w)| (s * t + (1.0 - s) * lambda, w)),
    )
}

/// The interpolating family `U_s(f,g) = ∫₀¹ f!_{st+(1−s)/2} g dμ(t)`:
/// `U_0` is the harmonic mean at `½`, `U_1` the logarithmic mean,
/// increasing in `s`.
pub fn family_u(f: &GridFn, g: &GridFn, s: f64, mu: Option<&QuadRule>) -> Result<GridFn> {
    if !(0.0..=1.0).contains(&s) || s.is_nan() {
        return Err(Error::ParamRange {
            name: "s",
            value: s,
            range: "[0, 1]",
        });
    }
    check_doms_intersect(f, g)?;
    let default_mu;
    let mu = match mu {
        Some(r) => {
            expect_mu(r)?;
            r
        }
        None => {
            default_mu = quadrature::mu_rule(DEFAULT_MU_NODES)?;
            &default_mu
        }
    };
    weighted_harmonic_sum(
        f,
        g,
        mu.nodes()
            .iter()
            .zip(mu.weights())
            .map(|(&t, &w)| (s * t + (1.0 - s) * 0.5, w)),
    )
}

/// The diamond operation
/// `f◇g(x) = sup { x*·x − g*(x*) : x* ∈ ∂f(x) }`, with `sup ∅ = −∞`.
///
/// The objective is concave and piecewise linear in `x*`, so the supremum
/// over the subgradient interval is found exactly from the breakpoints of
/// `g*` and the interval endpoints; an unbounded interval can push the value
/// to `+∞` only where `g` itself is `+∞`.
pub fn diamond(f: &GridFn, g: &GridFn, x: f64) -> ExtReal {
    match f.subdiff_at(x) {
        crate::convex_core::Subdifferential::Empty => ExtReal::NEG_INF,
        crate::convex_core::Subdifferential::NonEmpty(iv) => {
            let gstar = PlFn::from_grid(g).legendre();
            gstar.sup_linear_minus(x, iv.lo_slope, iv.hi_slope)
        }
    }
}

/// Precomputed diamond evaluator for scanning many points of the same pair.
pub(crate) struct DiamondEval {
    gstar: PlFn,
}

impl DiamondEval {
    pub fn new(g: &GridFn) -> DiamondEval {
        DiamondEval {
            gstar: PlFn::from_grid(g).legendre(),
        }
    }

    pub fn eval(&self, f: &GridFn, x: f64) -> ExtReal {
        match f.subdiff_at(x) {
            crate::convex_core::Subdifferential::Empty => ExtReal::NEG_INF,
            crate::convex_core::Subdifferential::NonEmpty(iv) => {
                self.gstar.sup_linear_minus(x, iv.lo_slope, iv.hi_slope)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ex(v: f64) -> ExtReal {
        ExtReal::new(v).unwrap()
    }

    fn q(a: f64) -> GridFn {
        GridFn::parabola(a, -2.0, 2.0, 513).unwrap()
    }

    fn assert_grid_close(got: &GridFn, want: impl Fn(f64) -> f64, xmax: f64, tol: f64) {
        for k in 0..got.len() {
            let x = got.node_x(k);
            if x.abs() <= xmax {
                let v = got.values()[k].as_f64();
                assert!(
                    (v - want(x)).abs() <= tol,
                    "node {x}: got {v}, want {} (tol {tol})",
                    want(x)
                );
            }
        }
    }

    #[test]
    fn arith_basics() {
        let f = q(2.0);
        // f = g: idempotent for every λ.
        let same = arith(&f, &f, 0.37).unwrap();
        assert_grid_close(&same, |x| x * x, 2.0, 1e-12);

        // x² and x² + 2 average to x² + 1.
        let g = GridFn::from_fn(-2.0, 2.0, 513, |x| x * x + 2.0).unwrap();
        let f2 = GridFn::from_fn(-2.0, 2.0, 513, |x| x * x).unwrap();
        let m = arith(&f2, &g, 0.5).unwrap();
        assert_grid_close(&m, |x| x * x + 1.0, 2.0, 1e-12);

        // λ = 0 returns f exactly even when g has +∞ inside dom f.
        let partial = GridFn::new(
            -2.0,
            2.0,
            vec![ExtReal::POS_INF, ex(0.0), ex(0.0), ex(0.0), ExtReal::POS_INF],
        )
        .unwrap();
        let back = arith(&f, &partial, 0.0).unwrap();
        assert_eq!(back, f);

        // Disjoint domains are an error for interior λ.
        let left = GridFn::from_fn(-2.0, -1.0, 65, |x| x * x).unwrap();
        let right = GridFn::from_fn(1.0, 2.0, 65, |x| x * x).unwrap();
        assert!(matches!(
            arith(&left, &right, 0.5),
            Err(Error::EmptyDomainIntersection)
        ));
        assert!(arith(&f, &f, 1.5).is_err());
    }

    #[test]
    fn harmonic_of_parabolas_is_harmonic_of_coefficients() {
        // a = 1, b = 3, λ = ½: harmonic coefficient (½·1 + ½·⅓)⁻¹ = 1.5.
        let m = harmonic(&q(1.0), &q(3.0), 0.5).unwrap();
        assert_grid_close(&m, |x| 0.5 * 1.5 * x * x, 1.5, 1e-4);
        // Idempotence.
        let f = q(2.0);
        let same = harmonic(&f, &f, 0.25).unwrap();
        assert_grid_close(&same, |x| x * x, 1.9, 1e-9);
        // Endpoints are the operands themselves.
        assert_eq!(harmonic(&f, &q(1.0), 0.0).unwrap(), f);
    }

    #[test]
    fn harmonic_matches_epi_scaled_inf_convolution() {
        // f!_λ g = f.(1−λ) □ g.λ
        let (f, g) = (q(1.0), q(3.0));
        let lambda = 0.3;
        let m = harmonic(&f, &g, lambda).unwrap();
        let conv = crate::fenchel::inf_conv_brute(
            &f.epi_scale(1.0 - lambda).unwrap(),
            &g.epi_scale(lambda).unwrap(),
        )
        .unwrap();
        for k in 0..m.len() {
            let x = m.node_x(k);
            if x.abs() <= 1.8 {
                assert_abs_diff_eq!(
                    m.values()[k].as_f64(),
                    conv.eval(x).as_f64(),
                    epsilon = 1e-5
                );
            }
        }
    }

    #[test]
    fn harmonic_domain_is_weighted_minkowski_sum() {
        let f = GridFn::from_fn(-1.0, 0.5, 129, |x| x * x).unwrap();
        let g = GridFn::from_fn(-0.25, 1.0, 129, |x| x * x).unwrap();
        let lambda = 0.25;
        let m = harmonic(&f, &g, lambda).unwrap();
        let want_lo = 0.75 * -1.0 + 0.25 * -0.25;
        let want_hi = 0.75 * 0.5 + 0.25 * 1.0;
        assert!((m.dom_lo() - want_lo).abs() <= m.step() + 1e-12);
        assert!((m.dom_hi() - want_hi).abs() <= m.step() + 1e-12);
    }

    #[test]
    fn geometric_of_parabolas() {
        // a = 1, b = 4, λ = ½: geometric coefficient √4 = 2.
        let m = geometric(&q(1.0), &q(4.0), 0.5, None).unwrap();
        assert_grid_close(&m, |x| 0.5 * 2.0 * x * x, 1.4, 1e-3);
        let f = q(2.0);
        let same = geometric(&f, &f, 0.5, None).unwrap();
        assert_grid_close(&same, |x| x * x, 1.9, 1e-9);
    }

    #[test]
    fn geometric_symmetry_in_reversed_weight() {
        let f = GridFn::from_fn(-2.0, 2.0, 257, |x| x * x + 0.4 * (x - 0.3).abs()).unwrap();
        let g = GridFn::from_fn(-2.0, 2.0, 257, |x| 1.5 * x * x + 0.2 * x).unwrap();
        for &lambda in &[0.25, 0.6] {
            let a = geometric(&f, &g, lambda, None).unwrap();
            let b = geometric(&g, &f, 1.0 - lambda, None).unwrap();
            assert_eq!(a.len(), b.len());
            for k in 0..a.len() {
                let (va, vb) = (a.values()[k], b.values()[k]);
                if va.is_finite() && vb.is_finite() {
                    assert_abs_diff_eq!(va.as_f64(), vb.as_f64(), epsilon = 1e-8);
                } else {
                    assert_eq!(va.is_pos_inf(), vb.is_pos_inf());
                }
            }
        }
    }

    #[test]
    fn log_mean_scalar_closed_form() {
        // a = 1, b = e²: L(1, e²) = (e² − 1)/2.
        let b = std::f64::consts::E.powi(2);
        let f = q(1.0);
        let g = q(b);
        let want = (b - 1.0) / 2.0;
        let via_geo = log_mean_geo(&f, &g, None, DEFAULT_NU_NODES).unwrap();
        assert_grid_close(&via_geo, |x| 0.5 * want * x * x, 1.2, 1e-3);
        let via_harm = log_mean_harm(&f, &g, None).unwrap();
        assert_grid_close(&via_harm, |x| 0.5 * want * x * x, 1.2, 1e-3);
        // The two routes agree with each other more tightly than with the
        // continuum limit.
        for k in 0..via_geo.len() {
            let x = via_geo.node_x(k);
            if x.abs() <= 1.2 {
                assert_abs_diff_eq!(
                    via_geo.values()[k].as_f64(),
                    via_harm.values()[k].as_f64(),
                    epsilon = 1e-3
                );
            }
        }
        // Idempotence via both routes.
        let same = log_mean_harm(&f, &f, None).unwrap();
        assert_grid_close(&same, |x| 0.5 * x * x, 1.9, 1e-9);
    }

    #[test]
    fn log_mean_constant_shift() {
        // L(f+c, g+d) = L(f,g) + (c+d)/2.
        let f = q(1.0);
        let g = q(3.0);
        let (c, d) = (0.7, -0.2);
        let shift = |h: &GridFn, c: f64| {
            GridFn::new(
                h.lo(),
                h.hi(),
                h.values().iter().map(|&v| v.add(ex(c))).collect(),
            )
            .unwrap()
        };
        let lhs = log_mean_harm(&shift(&f, c), &shift(&g, d), None).unwrap();
        let rhs = log_mean_harm(&f, &g, None).unwrap();
        for k in 0..lhs.len() {
            if lhs.values()[k].is_finite() && rhs.values()[k].is_finite() {
                assert_abs_diff_eq!(
                    lhs.values()[k].as_f64(),
                    rhs.values()[k].as_f64() + (c + d) / 2.0,
                    epsilon = 1e-9
                );
            }
        }
    }

    #[test]
    fn family_g_endpoints() {
        let f = q(1.0);
        let g = q(3.0);
        let lambda = 0.4;
        let rule = quadrature::gauss_jacobi_nu(lambda, 64).unwrap();
        // s = 0 collapses to the harmonic mean (weights sum to 1).
        let g0 = family_g(&f, &g, lambda, 0.0, Some(&rule)).unwrap();
        let harm = harmonic(&f, &g, lambda).unwrap();
        for k in 0..g0.len() {
            if g0.values()[k].is_finite() && harm.values()[k].is_finite() {
                assert_abs_diff_eq!(
                    g0.values()[k].as_f64(),
                    harm.values()[k].as_f64(),
                    epsilon = 1e-10
                );
            }
        }
        // s = 1 is the geometric mean with the same rule, bit-for-bit modulo
        // floating-point addition order.
        let g1 = family_g(&f, &g, lambda, 1.0, Some(&rule)).unwrap();
        let geo = geometric(&f, &g, lambda, Some(&rule)).unwrap();
        for k in 0..g1.len() {
            if g1.values()[k].is_finite() {
                assert_abs_diff_eq!(
                    g1.values()[k].as_f64(),
                    geo.values()[k].as_f64(),
                    epsilon = 1e-8
                );
            }
        }
        // G_s(f, f; λ) = f.
        let same = family_g(&f, &f, lambda, 0.5, Some(&rule)).unwrap();
        assert_grid_close(&same, |x| 0.5 * x * x, 1.9, 1e-9);
    }

    #[test]
    fn family_u_endpoints() {
        let f = q(1.0);
        let g = q(3.0);
        let mu = quadrature::mu_rule(64).unwrap();
        let u0 = family_u(&f, &g, 0.0, Some(&mu)).unwrap();
        let harm = harmonic(&f, &g, 0.5).unwrap();
        for k in 0..u0.len() {
            if u0.values()[k].is_finite() && harm.values()[k].is_finite() {
                assert_abs_diff_eq!(
                    u0.values()[k].as_f64(),
                    harm.values()[k].as_f64(),
                    epsilon = 1e-10
                );
            }
        }
        let u1 = family_u(&f, &g, 1.0, Some(&mu)).unwrap();
        let lm = log_mean_harm(&f, &g, Some(&mu)).unwrap();
        for k in 0..u1.len() {
            if u1.values()[k].is_finite() {
                assert_abs_diff_eq!(
                    u1.values()[k].as_f64(),
                    lm.values()[k].as_f64(),
                    epsilon = 1e-8
                );
            }
        }
        let same = family_u(&f, &f, 0.7, Some(&mu)).unwrap();
        assert_grid_close(&same, |x| 0.5 * x * x, 1.9, 1e-9);
    }

    #[test]
    fn diamond_examples() {
        // Q_a ◇ Q_b with a = 1, b = 2 at x = 1: coefficient 2a − a²/b = 1.5,
        // value ½·1.5·1² = 0.75.
        let f = GridFn::parabola(1.0, -4.0, 4.0, 2049).unwrap();
        let g = GridFn::parabola(2.0, -4.0, 4.0, 2049).unwrap();
        let v = diamond(&f, &g, 1.0);
        assert_abs_diff_eq!(v.as_f64(), 0.75, epsilon = 1e-4);

        // f◇g ≤ g at every domain node.
        let f2 = GridFn::from_fn(-2.0, 2.0, 257, |x| x * x + 0.3 * (x + 0.4).abs()).unwrap();
        let g2 = GridFn::from_fn(-2.0, 2.0, 257, |x| 1.2 * x * x).unwrap();
        let de = DiamondEval::new(&g2);
        for k in 0..f2.len() {
            let x = f2.node_x(k);
            assert!(de.eval(&f2, x).leq(g2.eval(x)));
        }

        // Outside dom f the subdifferential is empty: sup ∅ = −∞.
        assert!(diamond(&f, &g, 5.0).is_neg_inf());
    }

    #[test]
    fn means_of_partial_domains_stay_consistent() {
        // One operand as an indicator-plus-quadratic with a strict subdomain.
        let f = GridFn::from_fn(-1.0, 1.0, 257, |x| x * x).unwrap();
        let g = f.resample(-1.0, 1.0, 257).unwrap();
        let mut vals: Vec<ExtReal> = g.values().to_vec();
        for (k, v) in vals.iter_mut().enumerate() {
            let x = g.node_x(k);
            if !(-0.5..=0.8).contains(&x) {
                *v = ExtReal::POS_INF;
            }
        }
        let g = GridFn::new(-1.0, 1.0, vals).unwrap();
        let m = geometric(&f, &g, 0.5, None).unwrap();
        // dom(f ♯ g) sandwiched between dom f ∩ dom g and the ½-Minkowski sum.
        let h = m.step();
        assert!(m.dom_lo() <= -0.5 + h + 1e-12);
        assert!(m.dom_lo() >= 0.5 * (-1.0) + 0.5 * (-0.5) - h - 1e-12);
        assert!(m.dom_hi() >= 0.8 - h - 1e-12);
        assert!(m.dom_hi() <= 0.5 * (1.0) + 0.5 * 0.8 + h + 1e-12);
    }
}
