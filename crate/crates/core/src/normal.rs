//! Standard normal tail probability.

/// P(X >= x) for X ~ N(0, 1).
///
/// Computed from the complementary error function. Extreme arguments
/// saturate to 0 or 1.
pub fn std_normal_sf(x: f64) -> f64 {
    0.5 * libm::erfc(x / std::f64::consts::SQRT_2)
}
