//! Extended-real edge weights.
//!
//! A weight is either a finite value or exactly minus infinity (the
//! "these two can never share a cluster" marker for non-overlapping read
//! pairs). Plus infinity is never stored: anything that would reach it is
//! capped at a large finite value so that the dynamic programs never
//! produce an `inf - inf`.

/// Default saturation cap standing in for plus infinity.
pub const W_MAX: f64 = 1e15;

/// Edge weight: a finite value in `[-cap, cap]` or minus infinity.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Weight(f64);

impl Weight {
    pub const NEG_INF: Weight = Weight(f64::NEG_INFINITY);

    /// Builds a weight from a raw value, clamping finite magnitudes into
    /// `[-cap, cap]` and mapping plus infinity to `cap`. Minus infinity is
    /// preserved exactly.
    pub fn capped(value: f64, cap: f64) -> Weight {
        debug_assert!(!value.is_nan());
        debug_assert!(cap > 0.0);
        if value == f64::NEG_INFINITY {
            Weight::NEG_INF
        } else {
            Weight(value.clamp(-cap, cap))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_neg_inf(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    /// Positive part: the cost of cutting this edge. Always finite.
    pub fn pos_part(self) -> f64 {
        self.0.max(0.0)
    }

    /// Negative part: the cost of inserting this edge. Plus infinity for
    /// minus-infinity weights; the caller saturates it via [`sat_add`].
    pub fn neg_part(self) -> f64 {
        (-self.0).max(0.0)
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Saturating cost addition: once either operand reaches `cap` the result is
/// pinned there, so a forbidden contribution can never be cancelled back out
/// by later finite terms.
pub fn sat_add(a: f64, b: f64, cap: f64) -> f64 {
    if a >= cap || b >= cap {
        cap
    } else {
        (a + b).min(cap)
    }
}
