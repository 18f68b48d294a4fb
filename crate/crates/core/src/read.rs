//! Aligned paired-end reads and the pairwise edge-weight model.
//!
//! Two reads get a finite weight only when their genomic spans overlap; the
//! weight is the minimum of a size component (how close the two insert sizes
//! are) and an overlap component (how plausible the overlap is for the
//! library's insert-size distribution), each expressed as a log tail
//! probability relative to a threshold `T`.

use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};
use crate::normal::std_normal_sf;
use crate::weight::{Weight, W_MAX};

/// An aligned paired-end read occupying the genomic span `[left, left + length)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Read {
    pub id: u64,
    /// Left endpoint on the reference, in base pairs.
    pub left: f64,
    /// Insert size, in base pairs. Must be positive.
    pub length: f64,
}

impl Read {
    pub fn new(id: u64, left: f64, length: f64) -> Read {
        Read { id, left, length }
    }

    pub fn right(&self) -> f64 {
        self.left + self.length
    }
}

/// Insert-size difference of a pair.
pub fn length_delta(a: &Read, b: &Read) -> f64 {
    (a.length - b.length).abs()
}

/// Length of the intersection of the two spans; zero when they are disjoint
/// or touch at a single point.
pub fn span_overlap(a: &Read, b: &Read) -> f64 {
    (a.right().min(b.right()) - a.left.max(b.left)).max(0.0)
}

/// Mean insert size of a pair.
pub fn mean_length(a: &Read, b: &Read) -> f64 {
    0.5 * (a.length + b.length)
}

/// Mean insert size minus the span overlap: the part of an average read that
/// sticks out of the shared region.
pub fn uncovered_length(a: &Read, b: &Read) -> f64 {
    mean_length(a, b) - span_overlap(a, b)
}

/// Polarity of the log-probability weights.
///
/// `Corrected` gives well-matching pairs the heavier weight, so that an edge
/// is drawn exactly when both tail probabilities reach the threshold.
/// `Paper` negates both components, the opposite polarity (edge iff both
/// tails are at most the threshold).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SignConvention {
    #[default]
    Corrected,
    Paper,
}

/// Parameters of the insert-size library and of the edge criterion.
#[derive(Clone, Copy, Debug)]
pub struct AlignParams {
    /// Mean insert size.
    pub mu: f64,
    /// Insert-size standard deviation; must be positive.
    pub sigma: f64,
    /// Tail-probability threshold `T` in (0, 1] controlling graph density.
    pub threshold: f64,
    pub sign_convention: SignConvention,
    /// Saturation cap for weight magnitudes.
    pub wmax: f64,
}

impl AlignParams {
    pub fn new(mu: f64, sigma: f64, threshold: f64) -> Result<AlignParams> {
        let p = AlignParams { mu, sigma, threshold, sign_convention: SignConvention::default(), wmax: W_MAX };
        p.validate()?;
        Ok(p)
    }

    pub fn with_sign(mut self, sign: SignConvention) -> AlignParams {
        self.sign_convention = sign;
        self
    }

    pub fn with_wmax(mut self, wmax: f64) -> AlignParams {
        self.wmax = wmax;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sigma > 0.0) {
            return Err(Error::InvalidSigma(self.sigma));
        }
        if !(self.threshold > 0.0 && self.threshold <= 1.0) {
            return Err(Error::InvalidThreshold(self.threshold));
        }
        if !(self.wmax > 0.0) {
            return Err(Error::InvalidInput(format!("wmax must be positive, got {}", self.wmax)));
        }
        Ok(())
    }
}

impl Default for AlignParams {
    fn default() -> AlignParams {
        AlignParams {
            mu: 112.0,
            sigma: 15.0,
            threshold: 0.4,
            sign_convention: SignConvention::default(),
            wmax: W_MAX,
        }
    }
}

/// Log tail probability relative to the threshold, with the chosen polarity.
/// A tail probability that underflows to zero saturates at `-wmax` before
/// the sign convention is applied.
fn log_ratio(tail: f64, p: &AlignParams) -> f64 {
    let ln_p = if tail > 0.0 { tail.ln() } else { -p.wmax };
    match p.sign_convention {
        SignConvention::Corrected => ln_p - p.threshold.ln(),
        SignConvention::Paper => p.threshold.ln() - ln_p,
    }
}

pub(crate) fn pair_weight_unchecked(a: &Read, b: &Read, p: &AlignParams) -> Weight {
    if span_overlap(a, b) <= 0.0 {
        return Weight::NEG_INF;
    }
    let size_tail = 2.0 * std_normal_sf(length_delta(a, b) / (SQRT_2 * p.sigma));
    let overlap_tail = std_normal_sf(SQRT_2 * (uncovered_length(a, b) - p.mu) / p.sigma);
    let w_size = log_ratio(size_tail, p);
    let w_overlap = log_ratio(overlap_tail, p);
    Weight::capped(w_size.min(w_overlap), p.wmax)
}

/// Edge weight of a read pair: minus infinity when the spans do not overlap,
/// otherwise the minimum of the size and overlap components.
pub fn pair_weight(a: &Read, b: &Read, p: &AlignParams) -> Result<Weight> {
    p.validate()?;
    Ok(pair_weight_unchecked(a, b, p))
}
