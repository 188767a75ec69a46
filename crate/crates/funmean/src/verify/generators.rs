//! Seeded random operand generators for the verification campaigns.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::convex_core::{GridFn, SpdMatrix, SymMatrix, DEFAULT_GRID_NODES};
use crate::extreal::ExtReal;
use crate::{linalg, Result};

/// Smoothness class of generated grid functionals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvexClass {
    /// Random positive combinations of `|x−c|`, `(x−c)²`, `e^{βx}` and
    /// `max(0, x−c)`; one in five draws also restricts the effective domain
    /// to a subinterval of the box.
    Mixed,
    /// Kink-free, full-domain: quadratics, mild exponentials and an affine
    /// part. Derived functions then have no O(1) slope jumps, so sampling a
    /// derived function onto a grid costs O(h²) instead of O(h) — this is
    /// the class for identity checks at tight tolerances.
    Smooth,
    /// Parabolas `½·a·x²` with `a` log-uniform in `[0.1, 10]`.
    PureQuadratic,
}

/// Box, resolution and smoothness class for [`gen_convex_gridfn`].
#[derive(Debug, Clone, Copy)]
pub struct GridGenConfig {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
    pub class: ConvexClass,
}

impl Default for GridGenConfig {
    fn default() -> Self {
        GridGenConfig {
            lo: -1.0,
            hi: 1.0,
            n: DEFAULT_GRID_NODES,
            class: ConvexClass::Mixed,
        }
    }
}

impl GridGenConfig {
    pub fn step(&self) -> f64 {
        (self.hi - self.lo) / (self.n - 1) as f64
    }
}

/// A random proper convex grid functional; reproducible under a fixed rng
/// state.
pub fn gen_convex_gridfn(rng: &mut ChaCha8Rng, cfg: &GridGenConfig) -> Result<GridFn> {
    match cfg.class {
        ConvexClass::PureQuadratic => {
            let a = 10f64.powf(rng.gen_range(-1.0..1.0));
            GridFn::parabola(a, cfg.lo, cfg.hi, cfg.n)
        }
        ConvexClass::Smooth => {
            let n_terms = rng.gen_range(2..=3);
            let mut terms: Vec<Box<dyn Fn(f64) -> f64>> = Vec::new();
            for _ in 0..n_terms {
                let c = rng.gen_range(0.05..0.6);
                if rng.gen_bool(0.5) {
                    let center = rng.gen_range(cfg.lo..cfg.hi);
                    terms.push(Box::new(move |x: f64| c * (x - center) * (x - center)));
                } else {
                    let beta = rng.gen_range(-1.5..1.5);
                    let peak = (beta * cfg.lo.abs().max(cfg.hi.abs())).abs().exp();
                    terms.push(Box::new(move |x: f64| c * (beta * x).exp() / peak));
                }
            }
            let slope = rng.gen_range(-1.0..1.0);
            let offset = rng.gen_range(-0.5..0.5);
            GridFn::from_fn(cfg.lo, cfg.hi, cfg.n, |x| {
                offset + slope * x + terms.iter().map(|t| t(x)).sum::<f64>()
            })
        }
        ConvexClass::Mixed => {
            let span = cfg.hi - cfg.lo;
            let n_terms = rng.gen_range(2..=4);
            let mut terms: Vec<Box<dyn Fn(f64) -> f64>> = Vec::new();
            for _ in 0..n_terms {
                let c = rng.gen_range(0.1..1.5);
                let center = rng.gen_range(cfg.lo..cfg.hi);
                match rng.gen_range(0u8..4) {
                    0 => terms.push(Box::new(move |x: f64| c * (x - center).abs())),
                    1 => terms.push(Box::new(move |x: f64| c * (x - center) * (x - center))),
                    2 => {
                        let beta = rng.gen_range(-2.0..2.0);
                        // Normalize so the exponential stays O(c) on the box.
                        let peak = (beta * cfg.lo.abs().max(cfg.hi.abs())).abs().exp();
                        terms.push(Box::new(move |x: f64| c * (beta * x).exp() / peak));
                    }
                    _ => terms.push(Box::new(move |x: f64| c * (x - center).max(0.0))),
                }
            }
            let offset = rng.gen_range(-0.5..0.5);
            let f = GridFn::from_fn(cfg.lo, cfg.hi, cfg.n, |x| {
                offset + terms.iter().map(|t| t(x)).sum::<f64>()
            })?;
            let restrict = rng.gen_bool(0.2);
            if !restrict {
                return Ok(f);
            }
            // Keep a subinterval of at least 40% of the box as the domain.
            let width = rng.gen_range(0.4..0.9) * span;
            let dlo = cfg.lo + rng.gen_range(0.0..(span - width));
            let dhi = dlo + width;
            let values: Vec<ExtReal> = (0..cfg.n)
                .map(|i| {
                    let x = f.node_x(i);
                    if x < dlo || x > dhi {
                        ExtReal::POS_INF
                    } else {
                        f.values()[i]
                    }
                })
                .collect();
            GridFn::new(cfg.lo, cfg.hi, values)
        }
    }
}

/// A pair on the same box (the usual operand shape for binary means).
pub fn gen_pair(rng: &mut ChaCha8Rng, cfg: &GridGenConfig) -> Result<(GridFn, GridFn)> {
    Ok((gen_convex_gridfn(rng, cfg)?, gen_convex_gridfn(rng, cfg)?))
}

/// Random SPD matrix `QΛQᵀ` with a random orthogonal frame and log-uniform
/// spectrum in `[1/√cond_max, √cond_max]`, so the condition number never
/// exceeds `cond_max`.
pub fn gen_spd(rng: &mut impl Rng, d: usize, cond_max: f64) -> Result<SpdMatrix> {
    let q = linalg::random_orthogonal(d, rng);
    let half_log = 0.5 * cond_max.ln();
    let diag: Vec<f64> = (0..d)
        .map(|_| (rng.gen_range(-1.0..1.0) * half_log).exp())
        .collect();
    let mut a = vec![0.0; d * d];
    for k in 0..d {
        for i in 0..d {
            for j in i..d {
                a[i * d + j] += diag[k] * q[i * d + k] * q[j * d + k];
            }
        }
    }
    for i in 0..d {
        for j in 0..i {
            a[i * d + j] = a[j * d + i];
        }
    }
    SpdMatrix::from_sym(SymMatrix::from_raw_symmetrized(d, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generator_is_reproducible_and_valid() {
        let cfg = GridGenConfig::default();
        for seed in 0..30 {
            let mut rng1 = ChaCha8Rng::seed_from_u64(seed);
            let mut rng2 = ChaCha8Rng::seed_from_u64(seed);
            let f1 = gen_convex_gridfn(&mut rng1, &cfg).unwrap();
            let f2 = gen_convex_gridfn(&mut rng2, &cfg).unwrap();
            assert_eq!(f1, f2);
        }
    }

    #[test]
    fn pure_quadratic_class_is_a_parabola() {
        let cfg = GridGenConfig {
            class: ConvexClass::PureQuadratic,
            ..Default::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = gen_convex_gridfn(&mut rng, &cfg).unwrap();
        // Recover the coefficient from a node and check another one.
        let x0 = f.node_x(400);
        let a = 2.0 * f.values()[400].as_f64() / (x0 * x0);
        assert!((0.1..=10.0).contains(&a));
        let x1 = f.node_x(100);
        assert!((f.values()[100].as_f64() - 0.5 * a * x1 * x1).abs() <= 1e-12);
    }

    #[test]
    fn spd_generator_respects_condition_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in 1..=8 {
            let a = gen_spd(&mut rng, d, 100.0).unwrap();
            let eig = crate::operator_means::sym_eig(a.as_sym()).unwrap();
            let cond = eig.values[d - 1] / eig.values[0];
            assert!(cond <= 100.0 * (1.0 + 1e-8), "cond {cond} at d={d}");
        }
    }
}
