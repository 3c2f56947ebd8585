//! Per-map summary statistics and the high/low-activity comparison.

use crate::error::Error;
use crate::map::ActivityMap;

/// Max, min, and arithmetic mean of one activity map.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SummaryStats {
    pub max: f64,
    pub min: f64,
    pub mean: f64,
}

/// Summarizes a map in one pass.
///
/// The mean is clamped into `[min, max]` so the ordering invariant holds
/// even when summation rounding would nudge it past an endpoint.
pub fn summarize(map: &ActivityMap) -> SummaryStats {
    let values = map.values();
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut sum = 0.0;
    for &v in values {
        min = min.min(v);
        max = max.max(v);
        sum += v;
    }
    let mean = (sum / values.len() as f64).clamp(min, max);
    SummaryStats { max, min, mean }
}

/// Mean activity contrast between two maps of the same descriptor:
/// `mean(high) - mean(low)`.
///
/// May be negative (Fujii's weighting can invert the contrast); the maps
/// must agree on method, window, and dimensions.
pub fn mean_activity_difference(high: &ActivityMap, low: &ActivityMap) -> Result<f64, Error> {
    if high.method() != low.method() {
        return Err(Error::MethodMismatch {
            left: high.method(),
            right: low.method(),
        });
    }
    if high.window() != low.window() {
        return Err(Error::WindowMismatch {
            left: high.window(),
            right: low.window(),
        });
    }
    if (high.height(), high.width()) != (low.height(), low.width()) {
        return Err(Error::DimensionMismatch {
            left: (high.height(), high.width()),
            right: (low.height(), low.width()),
        });
    }
    Ok(summarize(high).mean - summarize(low).mean)
}
