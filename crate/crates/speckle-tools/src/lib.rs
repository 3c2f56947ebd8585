//! Std companion to `speckle-core`: synthetic speckle workloads, the
//! benchmarking harness, the high/low comparison protocol, file formats,
//! and the `speckle` CLI.

pub mod bench;
pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;
pub mod synth;

pub use crate::bench::{BenchConfig, BenchError, DescriptorTiming, PairTiming, TimingResult};
pub use crate::io::{IoError, ReportFormat, StackSource};
pub use crate::parallel::compute_with_threads;
pub use crate::report::{build_report, default_specs, ComparisonReport, MethodComparison};
pub use crate::synth::{generate, make_pair, SynthError, SyntheticParams};
