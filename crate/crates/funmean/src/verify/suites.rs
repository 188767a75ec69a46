//! The registered verification suites.
//!
//! Each suite draws seeded random operands, evaluates one relation from the
//! library's contract, and reduces every trial to a scalar margin (≥ 0 means
//! the relation held). Functional suites run on the default 513-node box
//! `[−1,1]` unless noted; integral means inside a suite share one quadrature
//! rule, so relations derived by integrating pointwise facts hold exactly in
//! the discretization and the tolerance only absorbs rounding and, where a
//! continuum quantity enters (`L`, `I_s`), quadrature error.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convex_core::{GridFn, SymMatrix};
use crate::extreal::ExtReal;
use crate::fenchel;
use crate::functional_means as fm;
use crate::operator_means as om;
use crate::pl::PlFn;
use crate::quadrature as quad;

use super::generators::{gen_convex_gridfn, gen_pair, gen_spd, ConvexClass, GridGenConfig};
use super::{
    grid_slack, margin_le_grid, margin_le_values, max_abs_diff_values, MarginTracker, SuiteDef,
    SuiteOutcome,
};

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn cfg_default() -> GridGenConfig {
    GridGenConfig::default()
}

fn cfg_smooth() -> GridGenConfig {
    GridGenConfig {
        class: ConvexClass::Smooth,
        ..GridGenConfig::default()
    }
}

/// A pair whose effective domains overlap by at least four grid steps, so
/// interior-weight means stay proper.
fn gen_pair_overlapping(rng: &mut ChaCha8Rng, cfg: &GridGenConfig) -> (GridFn, GridFn) {
    loop {
        let (f, g) = gen_pair(rng, cfg).expect("generator produces valid operands");
        let overlap = f.dom_hi().min(g.dom_hi()) - f.dom_lo().max(g.dom_lo());
        if overlap >= 4.0 * cfg.step() {
            return (f, g);
        }
    }
}

fn combo(a: &[ExtReal], b: &[ExtReal], wa: f64, wb: f64) -> Vec<ExtReal> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| ExtReal::scale_nonneg(wa, x).add(ExtReal::scale_nonneg(wb, y)))
        .collect()
}

/// `a − b` under the `+∞`-absorbing difference.
fn sub_values(a: &[ExtReal], b: &[ExtReal]) -> Vec<ExtReal> {
    a.iter().zip(b).map(|(&x, &y)| x.paper_sub(y)).collect()
}

fn psd_margin(lower: &SymMatrix, upper: &SymMatrix) -> f64 {
    upper
        .sub(lower)
        .and_then(|d| d.min_eigenvalue())
        .expect("dimension-matched symmetric difference")
}

// ---------------------------------------------------------------------------
// Duality suites
// ---------------------------------------------------------------------------

fn s_fenchel_gap(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-10));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for k in 0..trials {
        let f = gen_convex_gridfn(&mut rng, &cfg).expect("valid operand");
        for _ in 0..8 {
            let x = rng.gen_range(cfg.lo - 0.5..cfg.hi + 0.5);
            let xs = rng.gen_range(-8.0..8.0);
            let gap = fenchel::fenchel_gap(&f, x, xs);
            if gap.is_finite() {
                tr.observe(gap.as_f64());
            }
        }
        let d = 2 + (k as usize % 5);
        let a = gen_spd(&mut rng, d, 100.0).expect("valid SPD");
        let q = crate::convex_core::QuadraticFn::new(a);
        let x: Vec<f64> = (0..d).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let xs: Vec<f64> = (0..d).map(|_| rng.gen_range(-2.0..2.0)).collect();
        tr.observe(fenchel::fenchel_gap_quadratic(&q, &x, &xs).expect("well-conditioned"));
    }
    tr.finish()
}

fn slope_span(f: &GridFn) -> (f64, f64) {
    let dual = PlFn::from_grid(f).legendre();
    (dual.xs[0], *dual.xs.last().unwrap())
}

fn padded_union_span(f: &GridFn, g: &GridFn) -> (f64, f64) {
    let (a0, a1) = slope_span(f);
    let (b0, b1) = slope_span(g);
    let (lo, hi) = (a0.min(b0), a1.max(b1));
    let pad = 0.1 * (hi - lo) + 0.1;
    (lo - pad, hi + pad)
}

fn s_conjugate_scaling(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-6));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let f = gen_convex_gridfn(&mut rng, &cfg).expect("valid operand");
        let (s0, s1) = slope_span(&f);
        for &alpha in &[0.5, 2.0] {
            // (α.f)* = (f*).α on aligned dual grids.
            let pad = 0.1 * alpha * (s1 - s0) + 0.1;
            let (dlo, dhi) = (alpha * s0 - pad, alpha * s1 + pad);
            let n = 401;
            let left = fenchel::conjugate_on(&f.scalar_multiply(alpha).unwrap(), dlo, dhi, n)
                .expect("valid dual grid");
            let right = fenchel::conjugate_on(&f, dlo / alpha, dhi / alpha, n)
                .expect("valid dual grid")
                .epi_scale(alpha)
                .unwrap();
            tr.observe(-max_abs_diff_values(left.values(), right.values()));

            // (f.α)* = α.(f*): epi-scaling leaves the slope span unchanged.
            let pad2 = 0.1 * (s1 - s0) + 0.1;
            let (elo, ehi) = (s0 - pad2, s1 + pad2);
            let left2 = fenchel::conjugate_on(&f.epi_scale(alpha).unwrap(), elo, ehi, n)
                .expect("valid dual grid");
            let right2 = fenchel::conjugate_on(&f, elo, ehi, n)
                .expect("valid dual grid")
                .scalar_multiply(alpha)
                .unwrap();
            tr.observe(-max_abs_diff_values(left2.values(), right2.values()));
        }
    }
    tr.finish()
}

fn s_infconv_conjugate(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-6));
    let mut rng = rng_for(seed);
    // Kink-free operands on a fine grid: resampling the inf-convolution onto
    // its grid then costs O(h²), which is what the tight tolerance measures.
    let cfg = GridGenConfig {
        n: 2049,
        ..cfg_smooth()
    };
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let conv = fenchel::inf_conv_brute(&f, &g).expect("proper inf-convolution");
        let (dlo, dhi) = padded_union_span(&f, &g);
        let n = 513;
        let conv_star = fenchel::conjugate_on(&conv, dlo, dhi, n).expect("valid dual grid");
        let sum = fenchel::add(
            &fenchel::conjugate_on(&f, dlo, dhi, n).unwrap(),
            &fenchel::conjugate_on(&g, dlo, dhi, n).unwrap(),
        )
        .expect("same dual grid");
        tr.observe(-max_abs_diff_values(conv_star.values(), sum.values()));
    }
    tr.finish()
}

fn s_infconv_routes(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-5));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let brute = fenchel::inf_conv_brute(&f, &g).expect("proper");
        let dual = fenchel::inf_conv_dual(&f, &g).expect("proper");
        // Interior nodes: two steps inside the common finite range.
        let (bf, bl) = brute.finite_range();
        let mut worst = 0.0f64;
        for k in bf + 2..bl.saturating_sub(1) {
            let (a, b) = (brute.values()[k], dual.values()[k]);
            if a.is_finite() && b.is_finite() {
                worst = worst.max((a.as_f64() - b.as_f64()).abs());
            }
        }
        tr.observe(-worst);
    }
    tr.finish()
}

fn s_conjugate_convexity(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    let cfg = cfg_smooth();
    for _ in 0..trials {
        let (f, g) = gen_pair(&mut rng, &cfg).expect("valid operands");
        let (dlo, dhi) = padded_union_span(&f, &g);
        let n = 513;
        let fs = fenchel::conjugate_on(&f, dlo, dhi, n).unwrap();
        let gs = fenchel::conjugate_on(&g, dlo, dhi, n).unwrap();
        for &t in &[0.25, 0.5, 0.75] {
            let mix = fenchel::add(
                &f.scalar_multiply(1.0 - t).unwrap(),
                &g.scalar_multiply(t).unwrap(),
            )
            .expect("same grid");
            let lhs = fenchel::conjugate_on(&mix, dlo, dhi, n).unwrap();
            let rhs = combo(fs.values(), gs.values(), 1.0 - t, t);
            tr.observe(margin_le_values(lhs.values(), &rhs));
        }
    }
    tr.finish()
}

fn s_biconjugate(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-8));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let f = gen_convex_gridfn(&mut rng, &cfg).expect("valid operand");
        let bi = fenchel::biconjugate(&f);
        tr.observe(-max_abs_diff_values(bi.values(), f.values()));
        tr.observe(margin_le_grid(&bi, &f));
    }
    tr.finish()
}

// ---------------------------------------------------------------------------
// Functional mean inequality suites
// ---------------------------------------------------------------------------

fn s_chain_440(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let cfg = cfg_default();
    let mut tr = MarginTracker::new(tol.unwrap_or(grid_slack(cfg.step())));
    let mut rng = rng_for(seed);
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        for &lambda in &[0.25, 0.5, 0.75] {
            let rule = quad::gauss_jacobi_nu(lambda, 64).unwrap();
            let harm = fm::harmonic(&f, &g, lambda).unwrap();
            let geom = fm::geometric(&f, &g, lambda, Some(&rule)).unwrap();
            let arith = fm::arith(&f, &g, lambda).unwrap();
            tr.observe(margin_le_grid(&harm, &geom));
            tr.observe(margin_le_grid(&geom, &arith));
        }
    }
    tr.finish()
}

fn s_chain_513(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let cfg = cfg_default();
    let mut tr = MarginTracker::new(tol.unwrap_or(grid_slack(cfg.step())));
    let mut rng = rng_for(seed);
    let mu = quad::mu_rule(256).unwrap();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let harm = fm::harmonic(&f, &g, 0.5).unwrap();
        let log = fm::log_mean_harm(&f, &g, Some(&mu)).unwrap();
        let arith = fm::arith(&f, &g, 0.5).unwrap();
        tr.observe(margin_le_grid(&harm, &log));
        tr.observe(margin_le_grid(&log, &arith));
    }
    tr.finish()
}

fn s_refine_g(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        for &lambda in &[0.3, 0.6] {
            let rule = quad::gauss_jacobi_nu(lambda, 64).unwrap();
            let harm = fm::harmonic(&f, &g, lambda).unwrap();
            let geom = fm::geometric(&f, &g, lambda, Some(&rule)).unwrap();
            let mut prev = None;
            for &s in &[0.0, 0.25, 0.5, 0.75, 1.0] {
                let gs = fm::family_g(&f, &g, lambda, s, Some(&rule)).unwrap();
                // Sandwich: f!_λg ≤ G_s ≤ (f!_λg)∇_s(f♯_λg) ≤ f♯_λg.
                tr.observe(margin_le_grid(&harm, &gs));
                let mid = combo(harm.values(), geom.values(), 1.0 - s, s);
                tr.observe(margin_le_values(gs.values(), &mid));
                tr.observe(margin_le_values(&mid, geom.values()));
                // Monotone in s (endpoints included: harmonic to geometric).
                if let Some(prev_gs) = prev.replace(gs) {
                    let cur = prev.as_ref().unwrap();
                    tr.observe(margin_le_grid(&prev_gs, cur));
                }
            }
        }
    }
    tr.finish()
}

fn s_refine_u(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    let mu = quad::mu_rule(64).unwrap();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let harm = fm::harmonic(&f, &g, 0.5).unwrap();
        let log = fm::log_mean_harm(&f, &g, Some(&mu)).unwrap();
        let mut prev = None;
        for &s in &[0.0, 0.25, 0.5, 0.75, 1.0] {
            let us = fm::family_u(&f, &g, s, Some(&mu)).unwrap();
            tr.observe(margin_le_grid(&harm, &us));
            let mid = combo(harm.values(), log.values(), 1.0 - s, s);
            tr.observe(margin_le_values(us.values(), &mid));
            tr.observe(margin_le_values(&mid, log.values()));
            if let Some(prev_us) = prev.replace(us) {
                let cur = prev.as_ref().unwrap();
                tr.observe(margin_le_grid(&prev_us, cur));
            }
        }
    }
    tr.finish()
}

fn s_lemma_610(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        for &(t, s) in &[(0.2, 0.5), (0.5, 0.2), (0.7, 0.3), (0.3, 0.8)] {
            let d_t = sub_values(
                fm::arith(&f, &g, t).unwrap().values(),
                fm::harmonic(&f, &g, t).unwrap().values(),
            );
            let d_s = sub_values(
                fm::arith(&f, &g, s).unwrap().values(),
                fm::harmonic(&f, &g, s).unwrap().values(),
            );
            let r = (t / s).min((1.0 - t) / (1.0 - s));
            let big_r = (t / s).max((1.0 - t) / (1.0 - s));
            for (dt, ds) in d_t.iter().zip(&d_s) {
                if dt.is_finite() && ds.is_finite() {
                    let (dt, ds) = (dt.as_f64(), ds.as_f64());
                    tr.observe(ds);
                    tr.observe(dt - r * ds);
                    tr.observe(big_r * ds - dt);
                }
            }
        }
    }
    tr.finish()
}

fn s_thrr_612(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let cfg = cfg_default();
    let mut tr = MarginTracker::new(tol.unwrap_or(grid_slack(cfg.step())));
    let mut rng = rng_for(seed);
    let mu = quad::mu_rule(512).unwrap();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let log = fm::log_mean_harm(&f, &g, Some(&mu)).unwrap();
        let arith = fm::arith(&f, &g, 0.5).unwrap();
        let gap = sub_values(arith.values(), log.values());
        for &s in &[0.3, 0.5, 0.7] {
            let i_s = quad::i_s(s).unwrap();
            let scale = 1.0 / (s * (1.0 - s));
            let d_s = sub_values(
                fm::arith(&f, &g, s).unwrap().values(),
                fm::harmonic(&f, &g, s).unwrap().values(),
            );
            for (gp, ds) in gap.iter().zip(&d_s) {
                if gp.is_finite() && ds.is_finite() {
                    let (gp, ds) = (gp.as_f64(), ds.as_f64());
                    tr.observe(gp);
                    tr.observe(gp - (0.5 - i_s) * scale * ds);
                    tr.observe(i_s * scale * ds - gp);
                }
            }
        }
    }
    tr.finish()
}

/// Interior of both effective domains, strictly: diamonds and gaps there are
/// finite.
fn strict_interior(f: &GridFn, g: &GridFn, x: f64) -> bool {
    x > f.dom_lo() && x < f.dom_hi() && x > g.dom_lo() && x < g.dom_hi()
}

fn s_thd_615(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-5));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    let mu = quad::mu_rule(256).unwrap();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let log = fm::log_mean_harm(&f, &g, Some(&mu)).unwrap();
        let arith = fm::arith(&f, &g, 0.5).unwrap();
        let f_diamond_g = fm::DiamondEval::new(&g);
        let g_diamond_f = fm::DiamondEval::new(&f);
        for k in 0..log.len() {
            let x = log.node_x(k);
            if !strict_interior(&f, &g, x) {
                continue;
            }
            let (av, lv) = (arith.values()[k], log.values()[k]);
            if !(av.is_finite() && lv.is_finite()) {
                continue;
            }
            // Tightest admissible subgradient choices: the minimal gaps are
            // g(x) − (f◇g)(x) and f(x) − (g◇f)(x).
            let fg = f_diamond_g.eval(&f, x);
            let gf = g_diamond_f.eval(&g, x);
            if !(fg.is_finite() && gf.is_finite()) {
                continue;
            }
            let gap_g = g.eval(x).as_f64() - fg.as_f64();
            let gap_f = f.eval(x).as_f64() - gf.as_f64();
            let lhs = av.as_f64() - lv.as_f64();
            let rhs = (gap_g + gap_f) / 12.0;
            tr.observe(lhs); // 0 ≤ f∇g − L
            tr.observe(rhs - lhs);
        }
    }
    tr.finish()
}

fn s_lemma_613(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let cfg = cfg_default();
    let mut tr = MarginTracker::new(tol.unwrap_or(grid_slack(cfg.step())));
    let mut rng = rng_for(seed);
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let f_diamond_g = fm::DiamondEval::new(&g);
        let g_diamond_f = fm::DiamondEval::new(&f);
        for &t in &[0.3, 0.7] {
            let rule = quad::gauss_jacobi_nu(t, 128).unwrap();
            let geom = fm::geometric(&f, &g, t, Some(&rule)).unwrap();
            let arith = fm::arith(&f, &g, t).unwrap();
            for k in 0..geom.len() {
                let x = geom.node_x(k);
                if !strict_interior(&f, &g, x) {
                    continue;
                }
                let (av, sv) = (arith.values()[k], geom.values()[k]);
                if !(av.is_finite() && sv.is_finite()) {
                    continue;
                }
                let fg = f_diamond_g.eval(&f, x);
                let gf = g_diamond_f.eval(&g, x);
                if !(fg.is_finite() && gf.is_finite()) {
                    continue;
                }
                let gap_g = g.eval(x).as_f64() - fg.as_f64();
                let gap_f = f.eval(x).as_f64() - gf.as_f64();
                let lhs = av.as_f64() - sv.as_f64();
                let rhs = t * (1.0 - t) * 0.5 * (gap_g + gap_f);
                tr.observe(lhs);
                tr.observe(rhs - lhs);
            }
        }
    }
    tr.finish()
}

fn s_prchm_convexity(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        for &(t1, t2) in &[(0.2, 0.8), (0.1, 0.5), (0.4, 0.9)] {
            let mid = fm::harmonic(&f, &g, 0.5 * (t1 + t2)).unwrap();
            let h1 = fm::harmonic(&f, &g, t1).unwrap();
            let h2 = fm::harmonic(&f, &g, t2).unwrap();
            let avg = combo(h1.values(), h2.values(), 0.5, 0.5);
            tr.observe(margin_le_values(mid.values(), &avg));
        }
    }
    tr.finish()
}

fn s_prpm_monotone(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let (f1, g) = gen_pair_overlapping(&mut rng, &cfg);
        // f2 = f1 + nonnegative convex bump keeps the same domain and sits
        // pointwise above f1.
        let c = rng.gen_range(0.1..1.0);
        let center = rng.gen_range(cfg.lo..cfg.hi);
        let f2 = GridFn::new(
            f1.lo(),
            f1.hi(),
            (0..f1.len())
                .map(|i| {
                    let x = f1.node_x(i);
                    f1.values()[i]
                        .add(ExtReal::new(c * (x - center) * (x - center)).unwrap())
                })
                .collect(),
        )
        .unwrap();
        let lambda = 0.4;
        let rule = quad::gauss_jacobi_nu(lambda, 64).unwrap();
        tr.observe(margin_le_grid(
            &fm::harmonic(&f1, &g, lambda).unwrap(),
            &fm::harmonic(&f2, &g, lambda).unwrap(),
        ));
        tr.observe(margin_le_grid(
            &fm::geometric(&f1, &g, lambda, Some(&rule)).unwrap(),
            &fm::geometric(&f2, &g, lambda, Some(&rule)).unwrap(),
        ));
    }
    tr.finish()
}

fn s_thpc_concave(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-6));
    let mut rng = rng_for(seed);
    let cfg = cfg_smooth();
    for _ in 0..trials {
        let (f1, g1) = gen_pair(&mut rng, &cfg).expect("valid");
        let (f2, g2) = gen_pair(&mut rng, &cfg).expect("valid");
        let favg = fenchel::add(
            &f1.scalar_multiply(0.5).unwrap(),
            &f2.scalar_multiply(0.5).unwrap(),
        )
        .unwrap();
        let gavg = fenchel::add(
            &g1.scalar_multiply(0.5).unwrap(),
            &g2.scalar_multiply(0.5).unwrap(),
        )
        .unwrap();
        for &lambda in &[0.25, 0.5, 0.75] {
            let lhs = fm::harmonic(&favg, &gavg, lambda).unwrap();
            let h1 = fm::harmonic(&f1, &g1, lambda).unwrap();
            let h2 = fm::harmonic(&f2, &g2, lambda).unwrap();
            let rhs = combo(h1.values(), h2.values(), 0.5, 0.5);
            // Concavity: mean of averages dominates average of means.
            tr.observe(margin_le_values(&rhs, lhs.values()));
        }
    }
    tr.finish()
}

fn s_symmetry_435(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-8));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        for &lambda in &[0.25, 0.75] {
            let a1 = fm::arith(&f, &g, lambda).unwrap();
            let a2 = fm::arith(&g, &f, 1.0 - lambda).unwrap();
            tr.observe(-max_abs_diff_values(a1.values(), a2.values()));
            let h1 = fm::harmonic(&f, &g, lambda).unwrap();
            let h2 = fm::harmonic(&g, &f, 1.0 - lambda).unwrap();
            tr.observe(-max_abs_diff_values(h1.values(), h2.values()));
            let s1 = fm::geometric(&f, &g, lambda, None).unwrap();
            let s2 = fm::geometric(&g, &f, 1.0 - lambda, None).unwrap();
            tr.observe(-max_abs_diff_values(s1.values(), s2.values()));
        }
    }
    tr.finish()
}

fn s_homogeneity_445(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-8));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let lambda = 0.4;
        let rule = quad::gauss_jacobi_nu(lambda, 64).unwrap();
        type Mean = fn(&GridFn, &GridFn, f64, &quad::QuadRule) -> GridFn;
        let arith_m: Mean = |f, g, l, _| fm::arith(f, g, l).unwrap();
        let harm_m: Mean = |f, g, l, _| fm::harmonic(f, g, l).unwrap();
        let geom_m: Mean = |f, g, l, r| fm::geometric(f, g, l, Some(r)).unwrap();
        for mean in [arith_m, harm_m, geom_m] {
            for &alpha in &[0.5, 2.0] {
                // α.f m α.g = α.(f m g)
                let left = mean(
                    &f.scalar_multiply(alpha).unwrap(),
                    &g.scalar_multiply(alpha).unwrap(),
                    lambda,
                    &rule,
                );
                let right = mean(&f, &g, lambda, &rule).scalar_multiply(alpha).unwrap();
                tr.observe(-max_abs_diff_values(left.values(), right.values()));
                // f.α m g.α = (f m g).α
                let left2 = mean(
                    &f.epi_scale(alpha).unwrap(),
                    &g.epi_scale(alpha).unwrap(),
                    lambda,
                    &rule,
                );
                let right2 = mean(&f, &g, lambda, &rule).epi_scale(alpha).unwrap();
                tr.observe(-max_abs_diff_values(left2.values(), right2.values()));
            }
        }
    }
    tr.finish()
}

fn s_endpoints_430(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(0.5));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let f = gen_convex_gridfn(&mut rng, &cfg).expect("valid");
        // g deliberately carries +∞ nodes inside dom f, so anything but an
        // exact short-circuit would contaminate the endpoint means.
        let g = loop {
            let cand = gen_convex_gridfn(&mut rng, &cfg).expect("valid");
            if cand.finite_range() != (0, cand.len() - 1) {
                break cand;
            }
        };
        let exact = |ok: bool| if ok { 0.0 } else { -1.0 };
        tr.observe(exact(fm::arith(&f, &g, 0.0).unwrap() == f));
        tr.observe(exact(fm::harmonic(&f, &g, 0.0).unwrap() == f));
        tr.observe(exact(fm::geometric(&f, &g, 0.0, None).unwrap() == f));
        tr.observe(exact(fm::arith(&f, &g, 1.0).unwrap() == g));
        tr.observe(exact(fm::harmonic(&f, &g, 1.0).unwrap() == g));
        tr.observe(exact(fm::geometric(&f, &g, 1.0, None).unwrap() == g));
    }
    tr.finish()
}

fn s_logmean_routes(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-3));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    let outer = quad::gauss_legendre(128).unwrap();
    let mu = quad::mu_rule(64).unwrap();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let via_geo = fm::log_mean_geo(&f, &g, Some(&outer), 64).unwrap();
        let via_harm = fm::log_mean_harm(&f, &g, Some(&mu)).unwrap();
        let (rf, rl) = via_geo.finite_range();
        let mut worst = 0.0f64;
        for k in rf + 2..rl.saturating_sub(1) {
            let (a, b) = (via_geo.values()[k], via_harm.values()[k]);
            if a.is_finite() && b.is_finite() {
                worst = worst.max((a.as_f64() - b.as_f64()).abs());
            }
        }
        tr.observe(-worst);
    }
    tr.finish()
}

fn s_domain_475(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let cfg = cfg_default();
    let mut tr = MarginTracker::new(tol.unwrap_or(cfg.step()));
    let mut rng = rng_for(seed);
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        for &lambda in &[0.25, 0.5] {
            let m = fm::geometric(&f, &g, lambda, None).unwrap();
            let h = m.step();
            let cap_lo = f.dom_lo().max(g.dom_lo());
            let cap_hi = f.dom_hi().min(g.dom_hi());
            let mink_lo = (1.0 - lambda) * f.dom_lo() + lambda * g.dom_lo();
            let mink_hi = (1.0 - lambda) * f.dom_hi() + lambda * g.dom_hi();
            // dom f ∩ dom g ⊆ dom(f ♯_λ g) ⊆ (1−λ)dom f + λ dom g,
            // with one grid step of discretization slack built in.
            tr.observe(cap_lo + h - m.dom_lo());
            tr.observe(m.dom_lo() + h - mink_lo);
            tr.observe(m.dom_hi() - cap_hi + h);
            tr.observe(mink_hi + h - m.dom_hi());
        }
    }
    tr.finish()
}

fn s_harm_infconv_472(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-5));
    let mut rng = rng_for(seed);
    // The harmonic mean is exact at its nodes but the inf-convolution side
    // is re-evaluated between its own nodes; kink-free operands keep that
    // O(h²).
    let cfg = GridGenConfig {
        n: 1025,
        ..cfg_smooth()
    };
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        for &lambda in &[0.3, 0.6] {
            let harm = fm::harmonic(&f, &g, lambda).unwrap();
            let conv = fenchel::inf_conv_brute(
                &f.epi_scale(1.0 - lambda).unwrap(),
                &g.epi_scale(lambda).unwrap(),
            )
            .unwrap();
            let mut worst = 0.0f64;
            for k in 0..harm.len() {
                let x = harm.node_x(k);
                if x <= conv.dom_lo() + 2.0 * conv.step() || x >= conv.dom_hi() - 2.0 * conv.step()
                {
                    continue;
                }
                let (a, b) = (harm.values()[k], conv.eval(x));
                if a.is_finite() && b.is_finite() {
                    worst = worst.max((a.as_f64() - b.as_f64()).abs());
                }
            }
            tr.observe(-worst);
        }
    }
    tr.finish()
}

fn s_diamond_functional(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    let cfg = cfg_default();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let de = fm::DiamondEval::new(&g);
        for k in (0..f.len()).step_by(7) {
            let x = f.node_x(k);
            let v = de.eval(&f, x);
            let gx = g.eval(x);
            // sup ∅ = −∞ outside dom f; otherwise f◇g ≤ g.
            if f.subdiff_at(x).interval().is_none() {
                tr.observe(if v.is_neg_inf() { 0.0 } else { -1.0 });
            } else if v.is_finite() && gx.is_finite() {
                tr.observe(gx.as_f64() - v.as_f64());
            } else {
                // f◇g(x) = +∞ forces g(x) = +∞.
                tr.observe(if v.is_pos_inf() && !gx.is_finite() || !v.is_pos_inf() {
                    0.0
                } else {
                    -1.0
                });
            }
        }
    }
    tr.finish()
}

fn s_corollary_corrr(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let cfg = cfg_default();
    let mut tr = MarginTracker::new(tol.unwrap_or(grid_slack(cfg.step())));
    let mut rng = rng_for(seed);
    let mu = quad::mu_rule(256).unwrap();
    let (i_tot, _) = quad::i_total_with_error();
    for _ in 0..trials {
        let (f, g) = gen_pair_overlapping(&mut rng, &cfg);
        let log = fm::log_mean_harm(&f, &g, Some(&mu)).unwrap();
        let arith = fm::arith(&f, &g, 0.5).unwrap();
        let harm = fm::harmonic(&f, &g, 0.5).unwrap();
        // L ≤ (I−1)·f∇g + (2−I)·f!g ≤ f∇g.
        let upper = combo(arith.values(), harm.values(), i_tot - 1.0, 2.0 - i_tot);
        tr.observe(margin_le_values(log.values(), &upper));
        tr.observe(margin_le_values(&upper, arith.values()));
    }
    tr.finish()
}

// ---------------------------------------------------------------------------
// Quadrature identity suites
// ---------------------------------------------------------------------------

fn s_measure_nu(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-10));
    let mut rng = rng_for(seed);
    for _ in 0..trials {
        let lambda = rng.gen_range(0.05..0.95);
        let rule = quad::gauss_jacobi_nu(lambda, 64).unwrap();
        tr.observe(-(rule.total_mass() - 1.0).abs());
        tr.observe(-(rule.integrate(|t| t) - lambda).abs());
        // Moments against the Beta closed form, reduced through the Gamma
        // recurrence: ∫ tᵏ dν_λ = λ(λ+1)…(λ+k−1)/k!.
        let mut want = 1.0;
        for k in 1..=4u32 {
            want *= (lambda + (k - 1) as f64) / k as f64;
            tr.observe(-(rule.integrate(|t| t.powi(k as i32)) - want).abs());
        }
    }
    tr.finish()
}

fn s_measure_mu(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-10));
    let mut rng = rng_for(seed);
    let rule = quad::mu_rule(64).unwrap();
    tr.observe(-(rule.total_mass() - 1.0).abs());
    tr.observe(-(rule.integrate(|t| t) - 0.5).abs());
    let n = rule.len();
    for k in 0..n / 2 {
        tr.observe(-(rule.nodes()[k] + rule.nodes()[n - 1 - k] - 1.0).abs());
    }
    for _ in 0..trials {
        let t = rng.gen_range(0.02..0.98);
        let psi = quad::psi_density(t).unwrap();
        tr.observe(-(psi - quad::psi_density(1.0 - t).unwrap()).abs());
        tr.observe(-(psi - quad::omega(t).unwrap() / (1.0 - t)).abs());
    }
    tr.finish()
}

fn s_identity_phi(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-10));
    let mut rng = rng_for(seed);
    for &x in &[0.1, 1.0, 5.0, 50.0] {
        tr.observe(-(quad::phi(x).unwrap() - quad::phi_quad(x, 64).unwrap()).abs());
    }
    for _ in 0..trials {
        let x = 10f64.powf(rng.gen_range(-1.3..1.8));
        tr.observe(-(quad::phi(x).unwrap() - quad::phi_quad(x, 64).unwrap()).abs());
    }
    tr.finish()
}

fn s_identity_547(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-8));
    let mut rng = rng_for(seed);
    for c in quad::check_547() {
        tr.observe(-c.error);
    }
    for _ in 0..trials {
        let s = rng.gen_range(0.05..0.95);
        let v = quad::i_s(s).unwrap();
        tr.observe(v - 0.25);
        tr.observe(0.5 - v);
        tr.observe(-(v - quad::i_s(1.0 - s).unwrap()).abs());
    }
    let (i_tot, _) = quad::i_total_with_error();
    tr.observe(i_tot - 1.0);
    tr.observe(2.0 - i_tot);
    tr.finish()
}

// ---------------------------------------------------------------------------
// Operator suites
// ---------------------------------------------------------------------------

fn dims_for(k: u32) -> usize {
    2 + (k as usize % 7)
}

fn s_operator_chain_460(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    for k in 0..trials {
        let d = dims_for(k);
        let a = gen_spd(&mut rng, d, 1000.0).unwrap();
        let b = gen_spd(&mut rng, d, 1000.0).unwrap();
        for &lambda in &[0.25, 0.5, 0.75] {
            let harm = om::op_harm(&a, &b, lambda).unwrap();
            let geom = om::op_geom(&a, &b, lambda).unwrap();
            let arith = om::op_arith(&a, &b, lambda).unwrap();
            tr.observe(psd_margin(harm.as_sym(), geom.as_sym()));
            tr.observe(psd_margin(geom.as_sym(), arith.as_sym()));
        }
    }
    tr.finish()
}

fn s_operator_513(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    for k in 0..trials {
        let d = dims_for(k);
        let a = gen_spd(&mut rng, d, 1000.0).unwrap();
        let b = gen_spd(&mut rng, d, 1000.0).unwrap();
        let log = om::op_log_mean(&a, &b).unwrap();
        tr.observe(psd_margin(
            om::op_harm(&a, &b, 0.5).unwrap().as_sym(),
            log.as_sym(),
        ));
        tr.observe(psd_margin(
            log.as_sym(),
            om::op_arith(&a, &b, 0.5).unwrap().as_sym(),
        ));
    }
    tr.finish()
}

fn s_operator_logmean(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-8));
    let mut rng = rng_for(seed);
    let rule = quad::gauss_legendre(64).unwrap();
    let mu = quad::mu_rule(64).unwrap();
    for k in 0..trials {
        let d = dims_for(k);
        let a = gen_spd(&mut rng, d, 100.0).unwrap();
        let b = gen_spd(&mut rng, d, 100.0).unwrap();
        let closed = om::op_log_mean(&a, &b).unwrap();
        let norm = closed.as_sym().frobenius();
        let via_geo = om::op_log_mean_quad_geo(&a, &b, &rule).unwrap();
        let via_harm = om::op_log_mean_quad_harm(&a, &b, &mu).unwrap();
        let err_geo = via_geo.as_sym().sub(closed.as_sym()).unwrap().frobenius() / norm;
        let err_harm = via_harm.as_sym().sub(closed.as_sym()).unwrap().frobenius() / norm;
        tr.observe(-err_geo);
        tr.observe(-err_harm);
    }
    tr.finish()
}

fn s_operator_620(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    for k in 0..trials {
        let d = dims_for(k);
        let a = gen_spd(&mut rng, d, 100.0).unwrap();
        let b = gen_spd(&mut rng, d, 100.0).unwrap();
        let ab_a = sandwich(&a, &b); // A B⁻¹ A
        let ba_b = sandwich(&b, &a); // B A⁻¹ B
        let outer_mean = ab_a.add(&ba_b).unwrap().scale(0.5);
        let arith = om::op_arith(&a, &b, 0.5).unwrap();
        let log = om::op_log_mean(&a, &b).unwrap();
        let rhs = outer_mean.sub(arith.as_sym()).unwrap().scale(1.0 / 6.0);
        let lhs = arith.as_sym().sub(log.as_sym()).unwrap();
        tr.observe(lhs.min_eigenvalue().unwrap()); // 0 ≤ A∇B − L(A,B)
        tr.observe(psd_margin(&lhs, &rhs));
    }
    tr.finish()
}

/// `X Y⁻¹ X`, symmetrized.
fn sandwich(x: &crate::convex_core::SpdMatrix, y: &crate::convex_core::SpdMatrix) -> SymMatrix {
    let d = x.d();
    let y_inv = om::inverse(y).unwrap();
    let m = crate::linalg::mat_mul(
        d,
        x.entries(),
        &crate::linalg::mat_mul(d, y_inv.entries(), x.entries()),
    );
    SymMatrix::from_raw_symmetrized(d, m)
}

fn s_operator_inverse(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    for k in 0..trials {
        let d = dims_for(k);
        let a = gen_spd(&mut rng, d, 100.0).unwrap();
        let bump = gen_spd(&mut rng, d, 10.0).unwrap();
        let b = crate::convex_core::SpdMatrix::from_sym(a.as_sym().add(bump.as_sym()).unwrap())
            .unwrap();
        // A ≤ B ⇒ B⁻¹ ≤ A⁻¹.
        let a_inv = om::inverse(&a).unwrap();
        let b_inv = om::inverse(&b).unwrap();
        tr.observe(psd_margin(b_inv.as_sym(), a_inv.as_sym()));
        // Inversion is operator convex.
        let c = gen_spd(&mut rng, d, 100.0).unwrap();
        let c_inv = om::inverse(&c).unwrap();
        for &t in &[0.25, 0.5, 0.75] {
            let mix = om::op_arith(&a, &c, t).unwrap();
            let mix_inv = om::inverse(&mix).unwrap();
            let rhs = a_inv
                .as_sym()
                .scale(1.0 - t)
                .add(&c_inv.as_sym().scale(t))
                .unwrap();
            tr.observe(psd_margin(mix_inv.as_sym(), &rhs));
        }
    }
    tr.finish()
}

fn s_operator_diamond(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-9));
    let mut rng = rng_for(seed);
    for k in 0..trials {
        let d = dims_for(k);
        let a = gen_spd(&mut rng, d, 100.0).unwrap();
        let b = gen_spd(&mut rng, d, 100.0).unwrap();
        let diamond = om::op_diamond(&a, &b).unwrap();
        tr.observe(psd_margin(&diamond, b.as_sym()));
        // Scalar instance of the log-mean upper bound:
        // a∇b − L(a,b) ≤ (1/6)(a∇b)(a−b)²/(ab).
        let (x, y) = (rng.gen_range(0.1..10.0), rng.gen_range(0.1..10.0));
        let nabla = 0.5 * (x + y);
        let lhs = nabla - om::scalar_log_mean(x, y).unwrap();
        let rhs = nabla * (x - y) * (x - y) / (6.0 * x * y);
        tr.observe(lhs);
        tr.observe(rhs - lhs);
    }
    tr.finish()
}

fn s_bridge_450(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-3));
    let mut rng = rng_for(seed);
    for k in 0..trials {
        let a = rng.gen_range(0.2..5.0);
        let b = rng.gen_range(0.2..5.0);
        let lambda = [0.25, 0.5, 0.75][k as usize % 3];
        for kind in [om::MeanKind::Arith, om::MeanKind::Harmonic, om::MeanKind::Geometric] {
            let rep = om::bridge_check_1d(a, b, lambda, kind, 513).unwrap();
            tr.observe(-rep.max_interior_err);
        }
        // Matrix side: operator order and quadratic pointwise order agree.
        let d = dims_for(k);
        let ma = gen_spd(&mut rng, d, 100.0).unwrap();
        let mb = gen_spd(&mut rng, d, 100.0).unwrap();
        let geom = om::op_geom(&ma, &mb, 0.5).unwrap();
        let arith = om::op_arith(&ma, &mb, 0.5).unwrap();
        let rep = om::bridge_check_nd(geom.as_sym(), arith.as_sym(), 100, seed ^ k as u64).unwrap();
        tr.observe(if rep.consistent { 0.0 } else { -1.0 });
        let rep2 = om::bridge_check_nd(ma.as_sym(), mb.as_sym(), 100, seed ^ (k as u64) << 1).unwrap();
        tr.observe(if rep2.consistent { 0.0 } else { -1.0 });
    }
    tr.finish()
}

fn s_bridge_517(trials: u32, seed: u64, tol: Option<f64>) -> SuiteOutcome {
    let mut tr = MarginTracker::new(tol.unwrap_or(1e-3));
    let mut rng = rng_for(seed);
    for _ in 0..trials {
        let a = rng.gen_range(0.2..5.0);
        let b = rng.gen_range(0.2..5.0);
        let rep = om::bridge_check_1d(a, b, 0.5, om::MeanKind::Log, 513).unwrap();
        tr.observe(-rep.max_interior_err);
    }
    tr.finish()
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

pub(crate) static REGISTRY: &[SuiteDef] = &[
    SuiteDef {
        name: "fenchel-gap-105",
        tags: &["105"],
        default_trials: 200,
        runner: s_fenchel_gap,
    },
    SuiteDef {
        name: "conjugate-scaling-110",
        tags: &["110"],
        default_trials: 100,
        runner: s_conjugate_scaling,
    },
    SuiteDef {
        name: "infconv-conjugate-115",
        tags: &["115"],
        default_trials: 100,
        runner: s_infconv_conjugate,
    },
    SuiteDef {
        name: "infconv-routes",
        tags: &[],
        default_trials: 100,
        runner: s_infconv_routes,
    },
    SuiteDef {
        name: "conjugate-convexity",
        tags: &[],
        default_trials: 100,
        runner: s_conjugate_convexity,
    },
    SuiteDef {
        name: "biconjugate-fixpoint",
        tags: &[],
        default_trials: 200,
        runner: s_biconjugate,
    },
    SuiteDef {
        name: "chain-440",
        tags: &["440"],
        default_trials: 200,
        runner: s_chain_440,
    },
    SuiteDef {
        name: "chain-513",
        tags: &["513"],
        default_trials: 200,
        runner: s_chain_513,
    },
    SuiteDef {
        name: "refine-G-485",
        tags: &["480", "485", "487"],
        default_trials: 200,
        runner: s_refine_g,
    },
    SuiteDef {
        name: "refine-U-625",
        tags: &["622", "625", "627"],
        default_trials: 200,
        runner: s_refine_u,
    },
    SuiteDef {
        name: "lemma-610",
        tags: &["610"],
        default_trials: 200,
        runner: s_lemma_610,
    },
    SuiteDef {
        name: "thRR-612",
        tags: &["612"],
        default_trials: 200,
        runner: s_thrr_612,
    },
    SuiteDef {
        name: "thD-615",
        tags: &["615"],
        default_trials: 200,
        runner: s_thd_615,
    },
    SuiteDef {
        name: "lemma-613",
        tags: &["613"],
        default_trials: 200,
        runner: s_lemma_613,
    },
    SuiteDef {
        name: "convex-in-t-prchm",
        tags: &[],
        default_trials: 200,
        runner: s_prchm_convexity,
    },
    SuiteDef {
        name: "monotone-operands-prPM",
        tags: &[],
        default_trials: 200,
        runner: s_prpm_monotone,
    },
    SuiteDef {
        name: "concave-operands-thPC",
        tags: &[],
        default_trials: 200,
        runner: s_thpc_concave,
    },
    SuiteDef {
        name: "symmetry-435",
        tags: &["435"],
        default_trials: 200,
        runner: s_symmetry_435,
    },
    SuiteDef {
        name: "homogeneity-445",
        tags: &["445"],
        default_trials: 120,
        runner: s_homogeneity_445,
    },
    SuiteDef {
        name: "endpoints-430",
        tags: &["430"],
        default_trials: 100,
        runner: s_endpoints_430,
    },
    SuiteDef {
        name: "logmean-routes-530",
        tags: &["510", "530"],
        default_trials: 50,
        runner: s_logmean_routes,
    },
    SuiteDef {
        name: "domain-475",
        tags: &["475"],
        default_trials: 150,
        runner: s_domain_475,
    },
    SuiteDef {
        name: "harmonic-infconv-472",
        tags: &["472"],
        default_trials: 100,
        runner: s_harm_infconv_472,
    },
    SuiteDef {
        name: "diamond-functional",
        tags: &[],
        default_trials: 200,
        runner: s_diamond_functional,
    },
    SuiteDef {
        name: "corollary-corRR",
        tags: &[],
        default_trials: 150,
        runner: s_corollary_corrr,
    },
    SuiteDef {
        name: "measure-nu-425",
        tags: &["425"],
        default_trials: 100,
        runner: s_measure_nu,
    },
    SuiteDef {
        name: "measure-mu-535",
        tags: &["535", "550"],
        default_trials: 100,
        runner: s_measure_mu,
    },
    SuiteDef {
        name: "identity-phi-525",
        tags: &["525"],
        default_trials: 100,
        runner: s_identity_phi,
    },
    SuiteDef {
        name: "identity-547",
        tags: &["547"],
        default_trials: 20,
        runner: s_identity_547,
    },
    SuiteDef {
        name: "operator-chain-460",
        tags: &["455", "460"],
        default_trials: 100,
        runner: s_operator_chain_460,
    },
    SuiteDef {
        name: "operator-513",
        tags: &[],
        default_trials: 100,
        runner: s_operator_513,
    },
    SuiteDef {
        name: "operator-logmean-519",
        tags: &["519", "540"],
        default_trials: 100,
        runner: s_operator_logmean,
    },
    SuiteDef {
        name: "operator-620",
        tags: &["620"],
        default_trials: 100,
        runner: s_operator_620,
    },
    SuiteDef {
        name: "operator-inverse-monotone",
        tags: &[],
        default_trials: 100,
        runner: s_operator_inverse,
    },
    SuiteDef {
        name: "operator-diamond",
        tags: &[],
        default_trials: 100,
        runner: s_operator_diamond,
    },
    SuiteDef {
        name: "bridge-450",
        tags: &["450"],
        default_trials: 30,
        runner: s_bridge_450,
    },
    SuiteDef {
        name: "bridge-517",
        tags: &["517"],
        default_trials: 20,
        runner: s_bridge_517,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    /// Every inequality/identity tag the library certifies must be covered by
    /// at least one registered suite.
    #[test]
    fn registry_covers_all_tags() {
        let required = [
            "105", "110", "115", "425", "430", "435", "440", "445", "450", "455", "460", "472",
            "475", "485", "487", "510", "513", "517", "519", "525", "530", "535", "540", "547",
            "550", "610", "612", "615", "620", "622", "625", "627",
        ];
        for tag in required {
            assert!(
                REGISTRY.iter().any(|d| d.tags.contains(&tag)),
                "tag {tag} not covered by any suite"
            );
        }
        // Names are unique.
        let mut names: Vec<_> = REGISTRY.iter().map(|d| d.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), REGISTRY.len());
    }

    /// Spot-run every suite at a small trial count: zero violations and
    /// deterministic reports under a fixed seed.
    #[test]
    fn all_suites_pass_smoke_trials() {
        for def in REGISTRY {
            let trials = def.default_trials.min(12);
            let r1 = crate::verify::run_def(def, trials, 42, None);
            assert_eq!(
                r1.violations, 0,
                "suite {} violated: min_margin {:.3e} (tol {:.1e})",
                def.name, r1.min_margin, r1.tolerance
            );
            let r2 = crate::verify::run_def(def, trials, 42, None);
            assert_eq!(r1.min_margin.to_bits(), r2.min_margin.to_bits(), "{}", def.name);
            assert_eq!(r1.violations, r2.violations);
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(crate::verify::run_suite("no-such-suite", 1, 1, None).is_err());
    }

    #[test]
    fn degenerate_equal_operands_have_tiny_margins() {
        // f = g: every mean equals f and chain margins sit at ~0.
        let f = GridFn::parabola(2.0, -1.0, 1.0, 257).unwrap();
        let harm = fm::harmonic(&f, &f, 0.5).unwrap();
        let geom = fm::geometric(&f, &f, 0.5, None).unwrap();
        let arith = fm::arith(&f, &f, 0.5).unwrap();
        assert!(margin_le_grid(&harm, &geom) >= -1e-10);
        assert!(margin_le_grid(&geom, &arith) >= -1e-10);
        assert!(max_abs_diff_values(harm.values(), arith.values()) <= 1e-9);
    }
}
