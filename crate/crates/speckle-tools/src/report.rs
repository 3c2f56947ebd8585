//! The high/low-activity comparison protocol: every requested descriptor on
//! both stacks, summary statistics, contrast, and averaged runtimes.

use speckle_core::{summarize, DescriptorSpec, Error as CoreError, FrameStack, Method, SummaryStats};

use crate::bench::{self, BenchConfig, BenchError, TimingResult};

/// One report row: a descriptor compared across the stack pair.
#[derive(Debug, Clone)]
pub struct MethodComparison {
    pub method: Method,
    pub window: Option<usize>,
    /// Stats of the map from the high-activity stack X.
    pub stats_high: SummaryStats,
    /// Stats of the map from the low-activity stack X'.
    pub stats_low: SummaryStats,
    /// `stats_high.mean - stats_low.mean`, exactly by construction.
    pub mean_activity_difference: f64,
    pub timing: TimingResult,
}

/// The full comparison: one row per requested descriptor.
#[derive(Debug, Clone, Default)]
pub struct ComparisonReport {
    pub rows: Vec<MethodComparison>,
}

/// The five descriptors in report order, sharing one window lag.
pub fn default_specs(window: usize) -> Vec<DescriptorSpec> {
    vec![
        DescriptorSpec::fujii(),
        DescriptorSpec::gd(),
        DescriptorSpec::mwd(window),
        DescriptorSpec::sf(window),
        DescriptorSpec::msf(window),
    ]
}

/// Runs every descriptor in `specs` on both stacks, collecting stats,
/// contrast, and timing per row. An empty `specs` yields an empty report.
pub fn build_report(
    stack_high: &FrameStack,
    stack_low: &FrameStack,
    specs: &[DescriptorSpec],
    cfg: &BenchConfig,
) -> Result<ComparisonReport, BenchError> {
    if (stack_high.height(), stack_high.width()) != (stack_low.height(), stack_low.width()) {
        return Err(BenchError::Core(CoreError::DimensionMismatch {
            left: (stack_high.height(), stack_high.width()),
            right: (stack_low.height(), stack_low.width()),
        }));
    }
    let mut rows = Vec::with_capacity(specs.len());
    for spec in specs {
        let pair = bench::time_pair(stack_high, stack_low, spec, cfg)?;
        let stats_high = summarize(&pair.map_high);
        let stats_low = summarize(&pair.map_low);
        rows.push(MethodComparison {
            method: spec.method(),
            window: spec.effective_window(),
            stats_high,
            stats_low,
            mean_activity_difference: stats_high.mean - stats_low.mean,
            timing: pair.timing,
        });
    }
    Ok(ComparisonReport { rows })
}
