//! Crate-private exact piecewise-linear convex calculus.
//!
//! A [`PlFn`] is a convex PL function given by its vertex list plus two tail
//! descriptors: `Cut` (the function is `+∞` beyond the endpoint) or
//! `Slope(s)` (a linear tail extending to infinity). The class is closed
//! under the Legendre transform, which swaps the roles bounded-domain ↔
//! linear-tails, and [`legendre`](PlFn::legendre) computes it *exactly*: the
//! dual's vertices sit at the chord slopes of the primal. Running it twice
//! reproduces the convex hull to rounding, which is what makes biconjugation
//! and all conjugate-based means in this crate exact for PL operands instead
//! of accumulating grid-resampling error.

use crate::convex_core::{lower_hull, GridFn};
use crate::extreal::ExtReal;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Tail {
    /// `+∞` beyond the endpoint (bounded effective domain on that side).
    Cut,
    /// Linear continuation with the given slope.
    Slope(f64),
}

#[derive(Debug, Clone)]
pub(crate) struct PlFn {
    pub xs: Vec<f64>,
    pub vs: Vec<f64>,
    pub left: Tail,
    pub right: Tail,
}

impl PlFn {
    /// The PL extension of a grid function's finite samples: vertices are the
    /// lower-hull vertices (collinear nodes dropped; the function is
    /// unchanged), domain bounded on both sides.
    pub fn from_grid(f: &GridFn) -> PlFn {
        let hull = lower_hull(&f.finite_points());
        let (xs, vs) = hull.into_iter().unzip();
        PlFn {
            xs,
            vs,
            left: Tail::Cut,
            right: Tail::Cut,
        }
    }

    /// Exact evaluation anywhere on the line.
    pub fn eval(&self, x: f64) -> ExtReal {
        let m = self.xs.len();
        if x < self.xs[0] {
            return match self.left {
                Tail::Cut => ExtReal::POS_INF,
                Tail::Slope(s) => {
                    ExtReal::new(self.vs[0] + s * (x - self.xs[0])).expect("finite tail value")
                }
            };
        }
        if x > self.xs[m - 1] {
            return match self.right {
                Tail::Cut => ExtReal::POS_INF,
                Tail::Slope(s) => ExtReal::new(self.vs[m - 1] + s * (x - self.xs[m - 1]))
                    .expect("finite tail value"),
            };
        }
        match self.xs.binary_search_by(|p| p.partial_cmp(&x).unwrap()) {
            Ok(i) => ExtReal::new(self.vs[i]).expect("finite vertex"),
            Err(i) => {
                let (x0, v0) = (self.xs[i - 1], self.vs[i - 1]);
                let (x1, v1) = (self.xs[i], self.vs[i]);
                let t = (x - x0) / (x1 - x0);
                ExtReal::new((1.0 - t) * v0 + t * v1).expect("finite interpolation")
            }
        }
    }

    /// Exact Legendre transform. The dual's vertices are the chord slopes of
    /// the primal; a `Cut` side becomes a linear tail whose slope is the
    /// domain endpoint, and a linear tail becomes a `Cut` at its slope.
    pub fn legendre(&self) -> PlFn {
        let m = self.xs.len();
        let mut dxs: Vec<f64> = Vec::with_capacity(m + 1);
        let mut dvs: Vec<f64> = Vec::with_capacity(m + 1);
        let push = |s: f64, val: f64, dxs: &mut Vec<f64>, dvs: &mut Vec<f64>| {
            // Monotone guard: equal or rounding-inverted slopes collapse to
            // one vertex (collinear case), keeping the dual a valid hull.
            if dxs.last().map_or(true, |&last| s > last) {
                dxs.push(s);
                dvs.push(val);
            }
        };
        if let Tail::Slope(a) = self.left {
            push(a, a * self.xs[0] - self.vs[0], &mut dxs, &mut dvs);
        }
        for k in 0..m.saturating_sub(1) {
            let s = (self.vs[k + 1] - self.vs[k]) / (self.xs[k + 1] - self.xs[k]);
            push(s, s * self.xs[k] - self.vs[k], &mut dxs, &mut dvs);
        }
        if let Tail::Slope(b) = self.right {
            push(
                b,
                b * self.xs[m - 1] - self.vs[m - 1],
                &mut dxs,
                &mut dvs,
            );
        }
        let mut left = match self.left {
            Tail::Cut => Tail::Slope(self.xs[0]),
            Tail::Slope(_) => Tail::Cut,
        };
        let mut right = match self.right {
            Tail::Cut => Tail::Slope(self.xs[m - 1]),
            Tail::Slope(_) => Tail::Cut,
        };
        if dxs.is_empty() {
            // Point domain {x₀}: the dual is the affine map s ↦ s·x₀ − v₀.
            dxs.push(0.0);
            dvs.push(-self.vs[0]);
            left = Tail::Slope(self.xs[0]);
            right = Tail::Slope(self.xs[0]);
        }
        PlFn {
            xs: dxs,
            vs: dvs,
            left,
            right,
        }
    }

    /// Positive combination `ca·a + cb·b` of two globally finite PL convex
    /// functions (both tails `Slope`), exact on the union of breakpoints.
    pub fn combine(a: &PlFn, b: &PlFn, ca: f64, cb: f64) -> PlFn {
        debug_assert!(matches!(a.left, Tail::Slope(_)) && matches!(b.left, Tail::Slope(_)));
        debug_assert!(ca >= 0.0 && cb >= 0.0);
        let mut xs: Vec<f64> = Vec::with_capacity(a.xs.len() + b.xs.len());
        let (mut i, mut j) = (0, 0);
        while i < a.xs.len() || j < b.xs.len() {
            let x = match (a.xs.get(i), b.xs.get(j)) {
                (Some(&xa), Some(&xb)) => {
                    if xa < xb {
                        i += 1;
                        xa
                    } else if xb < xa {
                        j += 1;
                        xb
                    } else {
                        i += 1;
                        j += 1;
                        xa
                    }
                }
                (Some(&xa), None) => {
                    i += 1;
                    xa
                }
                (None, Some(&xb)) => {
                    j += 1;
                    xb
                }
                (None, None) => unreachable!(),
            };
            if xs.last() != Some(&x) {
                xs.push(x);
            }
        }
        let vs: Vec<f64> = xs
            .iter()
            .map(|&x| ca * a.eval(x).as_f64() + cb * b.eval(x).as_f64())
            .collect();
        let tail = |ta: Tail, tb: Tail| match (ta, tb) {
            (Tail::Slope(sa), Tail::Slope(sb)) => Tail::Slope(ca * sa + cb * sb),
            _ => Tail::Cut,
        };
        PlFn {
            left: tail(a.left, b.left),
            right: tail(a.right, b.right),
            xs,
            vs,
        }
    }

    /// Exact samples on a uniform grid (`+∞` outside the domain).
    pub fn sample(&self, grid: &OutGrid) -> Vec<ExtReal> {
        (0..grid.n).map(|k| self.eval(grid.node(k))).collect()
    }

    /// `sup { x·s − self(s) : s ∈ [lo, hi] }` for a globally finite convex
    /// `self` (both tails `Slope`). The objective is concave and PL in `s`,
    /// so the sup is `+∞` only via an unbounded endpoint with favorable tail
    /// slope, and otherwise is attained at a breakpoint or finite endpoint.
    pub fn sup_linear_minus(&self, x: f64, lo: ExtReal, hi: ExtReal) -> ExtReal {
        let (sl, sr) = match (self.left, self.right) {
            (Tail::Slope(a), Tail::Slope(b)) => (a, b),
            _ => unreachable!("sup_linear_minus expects a globally finite conjugate"),
        };
        if hi < lo {
            return ExtReal::NEG_INF;
        }
        if lo.is_neg_inf() && x < sl {
            return ExtReal::POS_INF;
        }
        if hi.is_pos_inf() && x > sr {
            return ExtReal::POS_INF;
        }
        let objective = |s: f64| ExtReal::new(x * s - self.eval(s).as_f64()).expect("finite objective");
        let mut best = ExtReal::NEG_INF;
        for &s in &self.xs {
            let se = ExtReal::new(s).unwrap();
            if lo.leq(se) && se.leq(hi) {
                best = best.max(objective(s));
            }
        }
        if lo.is_finite() {
            best = best.max(objective(lo.as_f64()));
        }
        if hi.is_finite() {
            best = best.max(objective(hi.as_f64()));
        }
        if best.is_neg_inf() {
            // Interval degenerate w.r.t. breakpoints yet unbounded: plateau.
            if lo.is_neg_inf() {
                best = best.max(objective(self.xs[0]));
            }
            if hi.is_pos_inf() {
                best = best.max(objective(*self.xs.last().unwrap()));
            }
        }
        best
    }
}

/// A uniform output grid (node `k` at `lo + k·step`).
#[derive(Debug, Clone, Copy)]
pub(crate) struct OutGrid {
    pub lo: f64,
    pub step: f64,
    pub n: usize,
}

impl OutGrid {
    pub fn new(lo: f64, hi: f64, n: usize) -> OutGrid {
        OutGrid {
            lo,
            step: (hi - lo) / (n - 1) as f64,
            n,
        }
    }

    #[inline]
    pub fn node(&self, k: usize) -> f64 {
        self.lo + k as f64 * self.step
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.node(self.n - 1)
    }
}

/// Shared dual data for a pair `(f, g)`: the exact conjugates tabulated on
/// the union of their breakpoints, so each weighted harmonic mean
/// `((1−t)f* + t·g*)*` costs one linear pass instead of re-conjugating.
pub(crate) struct DualPair {
    s: Vec<f64>,
    fv: Vec<f64>,
    gv: Vec<f64>,
    /// Effective domain endpoints of `f` and `g`; these are the tail slopes
    /// of the conjugates and combine affinely under `t`.
    pub f_dom: (f64, f64),
    pub g_dom: (f64, f64),
    scratch: Vec<f64>,
}

impl DualPair {
    pub fn new(f: &GridFn, g: &GridFn) -> DualPair {
        let fs = PlFn::from_grid(f).legendre();
        let gs = PlFn::from_grid(g).legendre();
        let mut s: Vec<f64> = Vec::with_capacity(fs.xs.len() + gs.xs.len());
        let (mut i, mut j) = (0, 0);
        while i < fs.xs.len() || j < gs.xs.len() {
            let x = match (fs.xs.get(i), gs.xs.get(j)) {
                (Some(&a), Some(&b)) if a < b => {
                    i += 1;
                    a
                }
                (Some(&a), Some(&b)) if b < a => {
                    j += 1;
                    b
                }
                (Some(&a), Some(_)) => {
                    i += 1;
                    j += 1;
                    a
                }
                (Some(&a), None) => {
                    i += 1;
                    a
                }
                (None, Some(&b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            if s.last() != Some(&x) {
                s.push(x);
            }
        }
        let fv: Vec<f64> = s.iter().map(|&x| fs.eval(x).as_f64()).collect();
        let gv: Vec<f64> = s.iter().map(|&x| gs.eval(x).as_f64()).collect();
        let scratch = vec![0.0; s.len()];
        DualPair {
            s,
            fv,
            gv,
            f_dom: (f.dom_lo(), f.dom_hi()),
            g_dom: (g.dom_lo(), g.dom_hi()),
            scratch,
        }
    }

    /// Domain of the weighted harmonic mean at parameter `t`:
    /// `(1−t)·dom f + t·dom g`.
    #[inline]
    pub fn harmonic_dom(&self, t: f64) -> (f64, f64) {
        (
            (1.0 - t) * self.f_dom.0 + t * self.g_dom.0,
            (1.0 - t) * self.f_dom.1 + t * self.g_dom.1,
        )
    }

    /// Adds `w · (f!_t g)(x_k)` into `acc[k]` for every node of `grid`,
    /// with `+∞` absorbing outside the mean's domain.
    pub fn accumulate_harmonic(&mut self, t: f64, w: f64, grid: &OutGrid, acc: &mut [ExtReal]) {
        debug_assert_eq!(acc.len(), grid.n);
        let (dlo, dhi) = self.harmonic_dom(t);
        let m = self.s.len();
        for idx in 0..m {
            self.scratch[idx] = (1.0 - t) * self.fv[idx] + t * self.gv[idx];
        }
        let phi = &self.scratch;
        let mut j = 0usize;
        for k in 0..grid.n {
            let x = grid.node(k);
            if x < dlo || x > dhi {
                acc[k] = ExtReal::POS_INF;
                continue;
            }
            if acc[k].is_pos_inf() {
                continue;
            }
            // The argmax index is nondecreasing in x: one joint sweep.
            while j + 1 < m && x * self.s[j + 1] - phi[j + 1] >= x * self.s[j] - phi[j] {
                j += 1;
            }
            // x may have jumped past several breakpoints only forward, but a
            // previous +∞ skip cannot move it backward; still, guard against
            // a stale index from skipped nodes by backing up when downhill.
            while j > 0 && x * self.s[j - 1] - phi[j - 1] > x * self.s[j] - phi[j] {
                j -= 1;
            }
            let val = x * self.s[j] - phi[j];
            acc[k] = acc[k].add(ExtReal::scale_nonneg(
                w,
                ExtReal::new(val).expect("finite harmonic value"),
            ));
        }
    }

    /// The values of `f!_t g` on `grid` (weight 1 into a fresh buffer).
    pub fn harmonic_values(&mut self, t: f64, grid: &OutGrid) -> Vec<ExtReal> {
        let mut acc = vec![ExtReal::ZERO; grid.n];
        self.accumulate_harmonic(t, 1.0, grid, &mut acc);
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn parabola_grid(a: f64, n: usize) -> GridFn {
        GridFn::from_fn(-2.0, 2.0, n, |x| 0.5 * a * x * x).unwrap()
    }

    /// Brute-force conjugate of the vertex set: the oracle the fast transform
    /// must match exactly.
    fn conj_brute(p: &PlFn, s: f64) -> f64 {
        p.xs
            .iter()
            .zip(&p.vs)
            .map(|(&x, &v)| s * x - v)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    #[test]
    fn legendre_matches_brute_force_sup() {
        let f = PlFn::from_grid(&parabola_grid(2.0, 65));
        let dual = f.legendre();
        for k in 0..200 {
            let s = -6.0 + 12.0 * k as f64 / 199.0;
            assert_abs_diff_eq!(dual.eval(s).as_f64(), conj_brute(&f, s), epsilon = 1e-12);
        }
    }

    #[test]
    fn legendre_is_an_involution_on_hulls() {
        let f = PlFn::from_grid(&parabola_grid(1.5, 33));
        let back = f.legendre().legendre();
        assert_eq!(back.xs.len(), f.xs.len());
        for i in 0..f.xs.len() {
            assert_abs_diff_eq!(back.xs[i], f.xs[i], epsilon = 1e-12);
            assert_abs_diff_eq!(back.vs[i], f.vs[i], epsilon = 1e-12);
        }
        assert_eq!(back.left, Tail::Cut);
        assert_eq!(back.right, Tail::Cut);
    }

    #[test]
    fn point_domain_round_trip() {
        let point = PlFn {
            xs: vec![1.5],
            vs: vec![2.0],
            left: Tail::Cut,
            right: Tail::Cut,
        };
        let dual = point.legendre(); // affine s ↦ 1.5 s − 2
        assert_abs_diff_eq!(dual.eval(0.0).as_f64(), -2.0);
        assert_abs_diff_eq!(dual.eval(2.0).as_f64(), 1.0);
        let back = dual.legendre();
        assert_eq!(back.xs.len(), 1);
        assert_abs_diff_eq!(back.xs[0], 1.5);
        assert_abs_diff_eq!(back.vs[0], 2.0);
    }

    #[test]
    fn combine_is_exact_on_union_breakpoints() {
        let a = PlFn::from_grid(&parabola_grid(1.0, 17)).legendre();
        let b = PlFn::from_grid(&GridFn::from_fn(-1.0, 3.0, 11, |x| (x - 1.0).abs()).unwrap())
            .legendre();
        let c = PlFn::combine(&a, &b, 0.3, 0.7);
        for k in 0..100 {
            let s = -5.0 + 10.0 * k as f64 / 99.0;
            assert_abs_diff_eq!(
                c.eval(s).as_f64(),
                0.3 * a.eval(s).as_f64() + 0.7 * b.eval(s).as_f64(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn dual_pair_reproduces_direct_harmonic() {
        // f!_t g computed by the sweep equals the from-scratch conjugate path.
        let f = parabola_grid(1.0, 129);
        let g = GridFn::from_fn(-2.0, 2.0, 129, |x| 0.5 * 3.0 * x * x).unwrap();
        let mut pair = DualPair::new(&f, &g);
        let grid = OutGrid::new(-2.0, 2.0, 129);
        for &t in &[0.25, 0.5, 0.9] {
            let sweep = pair.harmonic_values(t, &grid);
            let fs = PlFn::from_grid(&f).legendre();
            let gs = PlFn::from_grid(&g).legendre();
            let direct = PlFn::combine(&fs, &gs, 1.0 - t, t).legendre();
            for k in 0..grid.n {
                let want = direct.eval(grid.node(k));
                if want.is_pos_inf() {
                    assert!(sweep[k].is_pos_inf());
                } else {
                    assert_abs_diff_eq!(sweep[k].as_f64(), want.as_f64(), epsilon = 1e-10);
                }
            }
        }
    }

    #[test]
    fn sup_linear_minus_cases() {
        let g = parabola_grid(2.0, 65); // Q₂ on [−2, 2]
        let gstar = PlFn::from_grid(&g).legendre();
        // Unrestricted sup is the biconjugate: g**(x) = g(x) on the hull.
        let full = gstar.sup_linear_minus(1.0, ExtReal::NEG_INF, ExtReal::POS_INF);
        assert_abs_diff_eq!(full.as_f64(), g.eval(1.0).as_f64(), epsilon = 1e-10);
        // x beyond dom g with a free upper end escapes to +∞.
        assert!(gstar
            .sup_linear_minus(3.0, ExtReal::NEG_INF, ExtReal::POS_INF)
            .is_pos_inf());
        // Empty interval.
        assert!(gstar
            .sup_linear_minus(1.0, ExtReal::new(1.0).unwrap(), ExtReal::ZERO)
            .is_neg_inf());
    }

    proptest! {
        /// Double transform reproduces the hull values at arbitrary points.
        #[test]
        fn biconjugate_identity(coeffs in proptest::collection::vec(0.05f64..3.0, 3),
                                x in -1.9f64..1.9) {
            let f = GridFn::from_fn(-2.0, 2.0, 65, |x| {
                coeffs[0] * x * x + coeffs[1] * (x - 0.3).abs() + coeffs[2] * (0.5 * x).exp()
            }).unwrap();
            let p = PlFn::from_grid(&f);
            let bi = p.legendre().legendre();
            prop_assert!((bi.eval(x).as_f64() - p.eval(x).as_f64()).abs() <= 1e-10);
        }
    }
}
