//! Legendre–Fenchel conjugation, biconjugation, inf-convolution, and the
//! Fenchel gap.
//!
//! For a grid function the conjugate `f*(s) = sup_x {s·x − f(x)}` of the
//! piecewise-linear extension is computed exactly: the sup over the epigraph
//! of a PL function is attained at its vertices, and the transform is a
//! monotone merge of dual nodes against hull slopes (see [`crate::pl`]). The
//! returned grid holds exact values of `f*` at the dual nodes; conjugating
//! twice reproduces the convex hull of the input to rounding.

use crate::convex_core::{GridFn, QuadraticFn, SpdMatrix, SymMatrix};
use crate::extreal::ExtReal;
use crate::pl::{OutGrid, PlFn};
use crate::{linalg, Error, Result};

/// Conjugate on the default dual grid: `[min slope − pad, max slope + pad]`
/// with pad = 10% of the hull slope range (or 1 when the range degenerates),
/// same node count as the input.
pub fn conjugate(f: &GridFn) -> GridFn {
    let dual = PlFn::from_grid(f).legendre();
    let (slo, shi) = (dual.xs[0], *dual.xs.last().unwrap());
    let range = shi - slo;
    let pad = if range < 1e-12 { 1.0 } else { 0.1 * range };
    conjugate_on(f, slo - pad, shi + pad, f.len()).expect("default dual grid is valid")
}

/// Conjugate sampled on an explicit dual grid.
pub fn conjugate_on(f: &GridFn, lo: f64, hi: f64, n: usize) -> Result<GridFn> {
    if n < 2 {
        return Err(Error::TooFewNodes { min: 2, got: n });
    }
    if !(lo.is_finite() && hi.is_finite()) || !(lo < hi) {
        return Err(Error::BadGridBounds { lo, hi });
    }
    let dual = PlFn::from_grid(f).legendre();
    let values = dual.sample(&OutGrid::new(lo, hi, n));
    GridFn::new(lo, hi, values)
}

/// `f**` on the input's own grid: the PL convex hull of `f` restricted to
/// the primal nodes, `+∞` outside the effective domain.
pub fn biconjugate(f: &GridFn) -> GridFn {
    let bi = PlFn::from_grid(f).legendre().legendre();
    let values = bi.sample(&OutGrid::new(f.lo(), f.hi(), f.len()));
    GridFn::new(f.lo(), f.hi(), values).expect("biconjugate of a valid grid function")
}

/// Conjugate of a quadratic functional: the generator inverts.
pub fn conjugate_quadratic(q: &QuadraticFn) -> Result<QuadraticFn> {
    let a = &q.matrix;
    let d = a.d();
    let (vals, vecs) = linalg::jacobi_eigh(d, a.entries())?;
    let cond = vals[d - 1] / vals[0];
    if !cond.is_finite() || cond > 1e12 {
        return Err(Error::IllConditioned { cond });
    }
    let inv = linalg::apply_spectral(d, &vals, &vecs, |x| 1.0 / x);
    Ok(QuadraticFn::new(SpdMatrix::from_sym(
        SymMatrix::from_raw_symmetrized(d, inv),
    )?))
}

/// Pointwise sum of two grid functions, resampled to the intersection box on
/// the finer step. The effective domain of the sum is the intersection of
/// the domains.
pub fn add(f: &GridFn, g: &GridFn) -> Result<GridFn> {
    if f.lo() == g.lo() && f.hi() == g.hi() && f.len() == g.len() {
        let values = f
            .values()
            .iter()
            .zip(g.values())
            .map(|(&a, &b)| a.add(b))
            .collect();
        return improper_as_result(GridFn::new(f.lo(), f.hi(), values));
    }
    let lo = f.lo().max(g.lo());
    let hi = f.hi().min(g.hi());
    if !(lo < hi) {
        return Err(Error::EmptyDomainIntersection);
    }
    let step = f.step().min(g.step());
    let n = ((hi - lo) / step).round() as usize + 1;
    let n = n.max(2);
    let grid = OutGrid::new(lo, hi, n);
    let values = (0..n)
        .map(|k| {
            let x = grid.node(k);
            f.eval(x).add(g.eval(x))
        })
        .collect();
    improper_as_result(GridFn::new(lo, hi, values))
}

/// Direct inf-convolution `(f□g)(x) = inf_z {f(z) + g(x−z)}` by pairwise
/// minimization. For each output node the inner objective is PL in `z` with
/// kinks exactly at the nodes of `f` and at `x −` the nodes of `g`, so
/// scanning both families gives the exact infimum of the PL extensions.
pub fn inf_conv_brute(f: &GridFn, g: &GridFn) -> Result<GridFn> {
    let grid = sum_grid(f, g);
    let (ff, fl) = f.finite_range();
    let (gf, gl) = g.finite_range();
    let values: Vec<ExtReal> = (0..grid.n)
        .map(|k| {
            let x = grid.node(k);
            let mut best = ExtReal::POS_INF;
            for i in ff..=fl {
                let fz = f.values()[i];
                let gxz = g.eval(x - f.node_x(i));
                best = best.min(fz.add(gxz));
            }
            for j in gf..=gl {
                let gz = g.values()[j];
                let fxz = f.eval(x - g.node_x(j));
                best = best.min(gz.add(fxz));
            }
            best
        })
        .collect();
    improper_as_result(GridFn::new(grid.lo, grid.hi(), values))
}

/// Inf-convolution via duality: `(f* + g*)*`, evaluated through the exact PL
/// transform and sampled on the same grid as [`inf_conv_brute`]. Agrees with
/// the brute force up to hull closure.
pub fn inf_conv_dual(f: &GridFn, g: &GridFn) -> Result<GridFn> {
    let grid = sum_grid(f, g);
    let fs = PlFn::from_grid(f).legendre();
    let gs = PlFn::from_grid(g).legendre();
    let conv = PlFn::combine(&fs, &gs, 1.0, 1.0).legendre();
    improper_as_result(GridFn::new(grid.lo, grid.hi(), conv.sample(&grid)))
}

fn sum_grid(f: &GridFn, g: &GridFn) -> OutGrid {
    OutGrid::new(
        f.lo() + g.lo(),
        f.hi() + g.hi(),
        f.len().max(g.len()),
    )
}

fn improper_as_result(r: Result<GridFn>) -> Result<GridFn> {
    r.map_err(|e| match e {
        Error::Improper => Error::ImproperResult,
        other => other,
    })
}

/// The Fenchel gap `𝓕_f(x, x*) = f(x) + f*(x*) − x*·x ≥ 0`, zero exactly on
/// subgradient pairs. `+∞` when `x` is outside the effective domain.
pub fn fenchel_gap(f: &GridFn, x: f64, x_star: f64) -> ExtReal {
    let fstar = PlFn::from_grid(f).legendre();
    fenchel_gap_with_dual(f, &fstar, x, x_star)
}

pub(crate) fn fenchel_gap_with_dual(f: &GridFn, fstar: &PlFn, x: f64, x_star: f64) -> ExtReal {
    let fx = f.eval(x);
    let fsx = fstar.eval(x_star);
    fx.add(fsx)
        .add(ExtReal::new(-(x_star * x)).expect("finite pairing"))
}

/// The Fenchel gap for quadratics: `Q_A(x) + Q_{A⁻¹}(x*) − ⟨x*, x⟩`.
pub fn fenchel_gap_quadratic(q: &QuadraticFn, x: &[f64], x_star: &[f64]) -> Result<f64> {
    let qx = q.eval(x)?;
    let conj = conjugate_quadratic(q)?;
    let qsx = conj.eval(x_star)?;
    let pairing: f64 = x.iter().zip(x_star).map(|(a, b)| a * b).sum();
    Ok(qx + qsx - pairing)
}

// temporary debug
#[cfg(test)]
mod dbg_infconv {
    use crate::verify::{gen_convex_gridfn, GridGenConfig};
    use crate::fenchel;
    use crate::pl::PlFn;
    use rand::SeedableRng;

    #[test]
    fn dbg_115() {
        let cfg = GridGenConfig::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for trial in 0..12 {
            let (f, g) = loop {
                let a = gen_convex_gridfn(&mut rng, &cfg).unwrap();
                let b = gen_convex_gridfn(&mut rng, &cfg).unwrap();
                let overlap = a.dom_hi().min(b.dom_hi()) - a.dom_lo().max(b.dom_lo());
                if overlap >= 4.0 * cfg.step() { break (a, b); }
            };
            let conv = fenchel::inf_conv_brute(&f, &g).unwrap();
            let fs = PlFn::from_grid(&f).legendre();
            let gs = PlFn::from_grid(&g).legendre();
            let cs = PlFn::from_grid(&conv).legendre();
            let (a0, a1) = (fs.xs[0].min(gs.xs[0]), fs.xs.last().unwrap().max(*gs.xs.last().unwrap()));
            let pad = 0.1*(a1-a0)+0.1;
            let mut worst = 0.0f64; let mut worst_s = 0.0;
            for k in 0..513 {
                let s = (a0-pad) + (a1-a0+2.0*pad) * k as f64 / 512.0;
                let d = (cs.eval(s).as_f64() - (fs.eval(s).as_f64()+gs.eval(s).as_f64())).abs();
                if d > worst { worst = d; worst_s = s; }
            }
            println!("trial {trial}: worst {worst:.3e} at s={worst_s:.3} | f dom [{:.3},{:.3}] g dom [{:.3},{:.3}] conv n={} slopes f [{:.2},{:.2}] g [{:.2},{:.2}]",
                f.dom_lo(), f.dom_hi(), g.dom_lo(), g.dom_hi(), conv.len(),
                fs.xs[0], fs.xs.last().unwrap(), gs.xs[0], gs.xs.last().unwrap());
        }
    }
}
