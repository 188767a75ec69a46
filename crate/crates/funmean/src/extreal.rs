//! Extended-real scalars with the nonstandard arithmetic used throughout the
//! crate.
//!
//! The extended line `ℝ̄ = ℝ ∪ {−∞, +∞}` carries conventions under which
//! `+∞` absorbs: `a + (+∞) = +∞` for every `a`, `(+∞) − (+∞) = +∞`, and
//! `0·(+∞) = +∞`. The order is the usual total order `−∞ ≤ a ≤ +∞`; it is
//! deliberately **not** derived from the difference, because under these
//! conventions `a ≤ b` and `a − b ≤ 0` are inequivalent (both `+∞ ≤ +∞` and
//! `(+∞) − (+∞) = +∞ > 0` hold). [`ExtReal::leq`] implements the order
//! directly; [`ExtReal::paper_sub`] implements the asymmetric difference.
//!
//! NaN is rejected at construction time, so comparisons are total and
//! `Ord`/`Eq` are sound.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A real number extended with `±∞`, never NaN.
///
/// The wrapped representation uses the native IEEE infinities, but all
/// arithmetic must go through [`add`](ExtReal::add),
/// [`paper_sub`](ExtReal::paper_sub) and [`scale`](ExtReal::scale): raw float
/// subtraction on possibly-infinite operands yields NaN where the crate's
/// conventions require `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtReal(f64);

impl ExtReal {
    pub const POS_INF: ExtReal = ExtReal(f64::INFINITY);
    pub const NEG_INF: ExtReal = ExtReal(f64::NEG_INFINITY);
    pub const ZERO: ExtReal = ExtReal(0.0);

    /// Wraps a float, accepting `±∞` but rejecting NaN.
    pub fn new(value: f64) -> Result<ExtReal> {
        if value.is_nan() {
            Err(Error::NotANumber)
        } else {
            Ok(ExtReal(value))
        }
    }

    /// Wraps a finite float; rejects NaN and `±∞`.
    pub fn finite(value: f64) -> Result<ExtReal> {
        if value.is_finite() {
            Ok(ExtReal(value))
        } else {
            Err(Error::NotANumber)
        }
    }

    /// The underlying float (`±∞` for the infinite elements).
    #[inline]
    pub fn as_f64(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    #[inline]
    pub fn is_pos_inf(self) -> bool {
        self.0 == f64::INFINITY
    }

    #[inline]
    pub fn is_neg_inf(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    /// Sum under the convention that `+∞` absorbs: `a + (+∞) = +∞` for every
    /// `a`, including `a = −∞`.
    #[inline]
    pub fn add(self, other: ExtReal) -> ExtReal {
        if self.is_pos_inf() || other.is_pos_inf() {
            ExtReal::POS_INF
        } else {
            // finite + finite, or something + (−∞): float semantics agree.
            ExtReal(self.0 + other.0)
        }
    }

    /// The asymmetric difference: `(+∞) − (+∞) = +∞` and `c − (−∞) = +∞` for
    /// every `c`. Equals `self.add(other.neg())`.
    #[inline]
    pub fn paper_sub(self, other: ExtReal) -> ExtReal {
        self.add(other.neg())
    }

    /// Sign flip. Note `paper_sub` is not antisymmetric, so `a.paper_sub(b)`
    /// and `b.paper_sub(a).neg()` may differ when infinities are involved.
    #[inline]
    pub fn neg(self) -> ExtReal {
        ExtReal(-self.0)
    }

    /// Scaling by a nonnegative factor with `0·(+∞) = +∞` (and, mirrored,
    /// `0·(−∞) = −∞`). Rejects negative factors.
    pub fn scale(t: f64, a: ExtReal) -> Result<ExtReal> {
        if t.is_nan() || t < 0.0 {
            return Err(Error::NegativeScale(t));
        }
        Ok(Self::scale_nonneg(t, a))
    }

    #[inline]
    pub(crate) fn scale_nonneg(t: f64, a: ExtReal) -> ExtReal {
        debug_assert!(t >= 0.0);
        if a.is_finite() {
            ExtReal(t * a.0)
        } else {
            // t·(±∞) keeps the sign even at t = 0.
            a
        }
    }

    /// The total order `−∞ ≤ a ≤ +∞`, implemented directly rather than via
    /// `paper_sub` (which would wrongly call `+∞ ≤ +∞` strict).
    #[inline]
    pub fn leq(self, other: ExtReal) -> bool {
        self.0 <= other.0
    }

    #[inline]
    pub fn min(self, other: ExtReal) -> ExtReal {
        if self.leq(other) {
            self
        } else {
            other
        }
    }

    #[inline]
    pub fn max(self, other: ExtReal) -> ExtReal {
        if self.leq(other) {
            other
        } else {
            self
        }
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    #[inline]
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    #[inline]
    fn cmp(&self, other: &Self) -> Ordering {
        // Sound because NaN is unrepresentable.
        self.0.partial_cmp(&other.0).expect("ExtReal is never NaN")
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pos_inf() {
            write!(f, "inf")
        } else if self.is_neg_inf() {
            write!(f, "-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl From<ExtReal> for f64 {
    fn from(v: ExtReal) -> f64 {
        v.0
    }
}

// JSON form: finite values are numbers, infinities are the strings
// "inf" / "-inf".
impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_pos_inf() {
            serializer.serialize_str("inf")
        } else if self.is_neg_inf() {
            serializer.serialize_str("-inf")
        } else {
            serializer.serialize_f64(self.0)
        }
    }
}

struct ExtRealVisitor;

impl Visitor<'_> for ExtRealVisitor {
    type Value = ExtReal;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a finite number or the string \"inf\"/\"-inf\"")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<ExtReal, E> {
        ExtReal::new(v).map_err(|_| E::custom("NaN is not a valid extended real"))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtReal, E> {
        self.visit_f64(v as f64)
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtReal, E> {
        self.visit_f64(v as f64)
    }

    fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<ExtReal, E> {
        match s {
            "inf" | "+inf" => Ok(ExtReal::POS_INF),
            "-inf" => Ok(ExtReal::NEG_INF),
            _ => Err(E::custom(format!("unrecognized extended real: {s:?}"))),
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<ExtReal, D::Error> {
        deserializer.deserialize_any(ExtRealVisitor)
    }
}
