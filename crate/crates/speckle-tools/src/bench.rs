//! Wall-clock timing of descriptor runs and closed-form work counts.
//!
//! The harness times repeated full-map computations after a few warmup
//! iterations, reporting the mean and the raw per-run samples. Timing never
//! touches the math: the map handed back from a timed run is bit-identical
//! to an untimed one. Closed-form per-pixel pair-difference counts
//! ([`op_count`]) let tests check that measured runtimes track the amount of
//! work each method does — the double-loop methods (GD, MWD) against the
//! single-loop ones (Fujii, SF, MSF).

use std::time::Instant;

use speckle_core::{ActivityMap, DescriptorSpec, Error as CoreError, FrameStack, Method};
use thiserror::Error;

use crate::parallel;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("runs must be at least 1")]
    ZeroRuns,
    #[error("threads must be at least 1")]
    ZeroThreads,
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Repetition and threading policy for a timing session.
///
/// `threads` is pinned for the whole suite so cross-method ratios are not
/// distorted by differing parallel efficiency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchConfig {
    /// Timed repetitions per descriptor (mean is taken over these).
    pub runs: usize,
    /// Untimed iterations discarded before measuring.
    pub warmup: usize,
    /// Worker threads used for every descriptor run.
    pub threads: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            runs: 20,
            warmup: 2,
            threads: 1,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), BenchError> {
        if self.runs == 0 {
            return Err(BenchError::ZeroRuns);
        }
        if self.threads == 0 {
            return Err(BenchError::ZeroThreads);
        }
        Ok(())
    }
}

/// Mean and per-run wall-clock samples for one descriptor on one stack.
#[derive(Debug, Clone)]
pub struct DescriptorTiming {
    pub mean_seconds: f64,
    /// One entry per timed run, in seconds, all positive.
    pub samples: Vec<f64>,
    /// The map computed by the final timed run.
    pub map: ActivityMap,
}

/// Times `spec` on `stack`: `cfg.warmup` discarded runs, then `cfg.runs`
/// timed ones.
pub fn time_descriptor(
    stack: &FrameStack,
    spec: &DescriptorSpec,
    cfg: &BenchConfig,
) -> Result<DescriptorTiming, BenchError> {
    cfg.validate()?;
    spec.validate_for(stack)?;

    for _ in 0..cfg.warmup {
        parallel::compute_with_threads(stack, spec, cfg.threads)?;
    }

    let mut samples = Vec::with_capacity(cfg.runs);
    let mut map = None;
    for _ in 0..cfg.runs {
        let start = Instant::now();
        let result = parallel::compute_with_threads(stack, spec, cfg.threads)?;
        let elapsed = start.elapsed().as_secs_f64();
        // Sub-tick runs on tiny inputs would read as zero; samples must stay
        // positive, so floor them at one nanosecond.
        samples.push(elapsed.max(1e-9));
        map = Some(result);
    }
    let mean_seconds = samples.iter().sum::<f64>() / samples.len() as f64;
    Ok(DescriptorTiming {
        mean_seconds,
        samples,
        map: map.expect("runs >= 1"),
    })
}

/// Paired timing of one descriptor over a high/low-activity stack pair.
#[derive(Debug, Clone)]
pub struct TimingResult {
    pub method: Method,
    pub window: Option<usize>,
    /// Mean seconds on the high-activity stack.
    pub t_high: f64,
    /// Mean seconds on the low-activity stack.
    pub t_low: f64,
    /// `(t_high + t_low) / 2`, exactly.
    pub t_av: f64,
    pub samples_high: Vec<f64>,
    pub samples_low: Vec<f64>,
}

/// A [`TimingResult`] together with the two maps from the final runs.
#[derive(Debug, Clone)]
pub struct PairTiming {
    pub timing: TimingResult,
    pub map_high: ActivityMap,
    pub map_low: ActivityMap,
}

/// Times one descriptor on both stacks of a pair.
pub fn time_pair(
    stack_high: &FrameStack,
    stack_low: &FrameStack,
    spec: &DescriptorSpec,
    cfg: &BenchConfig,
) -> Result<PairTiming, BenchError> {
    let high = time_descriptor(stack_high, spec, cfg)?;
    let low = time_descriptor(stack_low, spec, cfg)?;
    Ok(PairTiming {
        timing: TimingResult {
            method: spec.method(),
            window: spec.effective_window(),
            t_high: high.mean_seconds,
            t_low: low.mean_seconds,
            t_av: (high.mean_seconds + low.mean_seconds) / 2.0,
            samples_high: high.samples,
            samples_low: low.samples,
        },
        map_high: high.map,
        map_low: low.map,
    })
}

/// Exact number of pair-difference terms each method evaluates per pixel on
/// an `frames`-frame stack.
///
/// Fujii: `N - 1`; GD: `N (N - 1) / 2`; MWD: `w (N - w)`; SF and MSF:
/// `N - w`. These counts are what separates the double-loop methods from the
/// single-loop ones as `N` grows.
pub fn op_count(spec: &DescriptorSpec, frames: usize) -> Result<u64, BenchError> {
    if frames < 2 {
        return Err(BenchError::Core(CoreError::TooFewFrames { frames }));
    }
    let n = frames as u64;
    let method = spec.method();
    if !method.requires_window() {
        return Ok(match method {
            Method::Fujii => n - 1,
            Method::Gd => n * (n - 1) / 2,
            _ => unreachable!(),
        });
    }
    let window = spec.window().ok_or(CoreError::MissingWindow { method })?;
    if window < 1 || window > frames - 1 {
        return Err(BenchError::Core(CoreError::WindowOutOfRange {
            window,
            frames,
        }));
    }
    let w = window as u64;
    Ok(match method {
        Method::Mwd => w * (n - w),
        Method::Sf | Method::Msf => n - w,
        _ => unreachable!(),
    })
}
