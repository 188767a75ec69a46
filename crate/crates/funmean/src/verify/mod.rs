//! Randomized property-verification campaigns.
//!
//! Every inequality and identity the library claims is registered here as a
//! named suite. A suite runs `trials` seeded random instances, reduces each
//! trial to a scalar *margin* — defined so that `margin ≥ 0` means the
//! claimed relation holds at that instance — and reports the most-violated
//! margin plus the count of margins below `−tolerance`. Reports are
//! machine-readable and bitwise reproducible under a fixed `(seed, trials)`.
//!
//! Margin conventions:
//! - inequality suites: the minimum of `upper − lower` over comparison
//!   points, skipping points where either side is `+∞` unless both are
//!   (mixed infinities are boundary artifacts of the discretization);
//! - identity suites: `−(max |lhs − rhs|)`, so the tolerance doubles as the
//!   asserted accuracy;
//! - matrix inequality suites: the smallest eigenvalue of `upper − lower`.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::convex_core::GridFn;
use crate::extreal::ExtReal;
use crate::{Error, Result};

mod generators;
mod suites;

pub use generators::{gen_convex_gridfn, gen_spd, ConvexClass, GridGenConfig};

/// Margin statistics from one verification campaign.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialReport {
    pub suite_name: String,
    pub trials: u32,
    /// Most-violated slack across all trials and comparison points; positive
    /// when every instance held with room to spare.
    pub min_margin: f64,
    /// Number of trial margins below `−tolerance`. Zero for a passing suite.
    pub violations: u32,
    pub tolerance: f64,
    pub seed: u64,
    pub runtime_ms: u64,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Outcome of a suite body, before timing/bookkeeping are attached.
pub(crate) struct SuiteOutcome {
    pub min_margin: f64,
    pub violations: u32,
    pub tolerance: f64,
}

pub(crate) type SuiteRunner = fn(trials: u32, seed: u64, tolerance: Option<f64>) -> SuiteOutcome;

/// A registered suite: a stable name, the numeric tags of the inequalities
/// and identities it certifies (as used by the consolidated report), and the
/// runner.
pub struct SuiteDef {
    pub name: &'static str,
    pub tags: &'static [&'static str],
    pub default_trials: u32,
    pub(crate) runner: SuiteRunner,
}

/// All registered suites.
pub fn registry() -> &'static [SuiteDef] {
    suites::REGISTRY
}

/// Runs one suite by name. `tolerance` overrides the suite default when
/// given. Deterministic under fixed `(name, trials, seed)`.
pub fn run_suite(
    name: &str,
    trials: u32,
    seed: u64,
    tolerance: Option<f64>,
) -> Result<TrialReport> {
    let def = registry()
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    Ok(run_def(def, trials, seed, tolerance))
}

pub(crate) fn run_def(
    def: &SuiteDef,
    trials: u32,
    seed: u64,
    tolerance: Option<f64>,
) -> TrialReport {
    let start = Instant::now();
    let outcome = (def.runner)(trials, seed, tolerance);
    TrialReport {
        suite_name: def.name.to_string(),
        trials,
        min_margin: outcome.min_margin,
        violations: outcome.violations,
        tolerance: outcome.tolerance,
        seed,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs every registered suite at its default trial count scaled by
/// `trial_scale` (1.0 keeps defaults).
pub fn run_all(trials: Option<u32>, seed: u64) -> Vec<TrialReport> {
    registry()
        .iter()
        .map(|def| {
            let t = trials.unwrap_or(def.default_trials);
            run_def(def, t, seed, None)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Margin helpers shared by the suites
// ---------------------------------------------------------------------------

/// Tracks the worst margin and the violation count at a fixed tolerance.
pub(crate) struct MarginTracker {
    pub min: f64,
    pub violations: u32,
    pub tolerance: f64,
}

impl MarginTracker {
    pub fn new(tolerance: f64) -> MarginTracker {
        MarginTracker {
            min: f64::INFINITY,
            violations: 0,
            tolerance,
        }
    }

    pub fn observe(&mut self, margin: f64) {
        if margin < self.min {
            self.min = margin;
        }
        if margin < -self.tolerance {
            self.violations += 1;
        }
    }

    pub fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            min_margin: if self.min.is_finite() { self.min } else { 0.0 },
            violations: self.violations,
            tolerance: self.tolerance,
        }
    }
}

/// Minimum of `upper − lower` over nodes where both sides are finite
/// (`+∞ ≤ +∞` holds and mixed infinities are skipped as boundary
/// artifacts). `+∞` when no node is comparable.
pub(crate) fn margin_le_values(lower: &[ExtReal], upper: &[ExtReal]) -> f64 {
    debug_assert_eq!(lower.len(), upper.len());
    let mut m = f64::INFINITY;
    for (&lo, &up) in lower.iter().zip(upper) {
        if lo.is_finite() && up.is_finite() {
            m = m.min(up.as_f64() - lo.as_f64());
        }
    }
    m
}

pub(crate) fn margin_le_grid(lower: &GridFn, upper: &GridFn) -> f64 {
    debug_assert_eq!(lower.len(), upper.len());
    margin_le_values(lower.values(), upper.values())
}

/// Maximum |a − b| over nodes where both are finite; `+∞` if never
/// comparable is treated as a zero-difference (identity suites restrict to
/// the common finite region).
pub(crate) fn max_abs_diff_values(a: &[ExtReal], b: &[ExtReal]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut m = 0.0f64;
    for (&x, &y) in a.iter().zip(b) {
        if x.is_finite() && y.is_finite() {
            m = m.max((x.as_f64() - y.as_f64()).abs());
        }
    }
    m
}

/// Slack for grid-discretized functional inequalities: PL interpolation of a
/// smooth convex function carries O(h²) error, so `10·h² + 1e−8`.
pub(crate) fn grid_slack(step: f64) -> f64 {
    10.0 * step * step + 1e-8
}
