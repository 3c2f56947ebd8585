//! The five pixelwise activity descriptors.
//!
//! Every descriptor maps an `N`-frame stack to one activity value per pixel,
//! using only that pixel's temporal sequence `s[0..N]`:
//!
//! - [`fujii`]: sum over the `N - 1` consecutive pairs of
//!   `|s[k] - s[k+1]| / (s[k] + s[k+1])`, with `0/0` counted as zero
//!   activity (a dark, static pixel).
//! - [`gd`]: sum of `|s[k] - s[l]|` over all unordered frame pairs.
//! - [`mwd`]: like GD but restricted to pairs at most `w` frames apart,
//!   `sum_{k=0..N-w} sum_{l=k+1..=k+w} |s[k] - s[l]|`.
//! - [`sf`]: sum of squared differences at fixed lag `w`,
//!   `sum_{k=0..N-w} (s[k] - s[k+w])^2`.
//! - [`msf`]: SF with the square replaced by the absolute value.
//!
//! GD and MWD are deliberately implemented as the double loops they are
//! defined by, not via the identity `GD = sum_w MSF(w)`: the runtime gap
//! between the double-loop and single-loop descriptors is part of this
//! crate's contract and the identity is reserved to the tests as an oracle.
//!
//! Per pixel, terms are accumulated in a fixed order (ascending `k`, then
//! ascending `l`), so results are reproducible bit for bit no matter how
//! callers split the image across workers.

use alloc::vec;
use core::ops::Range;

use crate::descriptor::{DescriptorSpec, Method};
use crate::error::Error;
use crate::map::ActivityMap;
use crate::stack::FrameStack;

#[inline]
fn fujii_pixel(series: &[f64]) -> f64 {
    let mut acc = 0.0;
    for k in 0..series.len() - 1 {
        let a = series[k];
        let b = series[k + 1];
        let den = a + b;
        if den > 0.0 {
            acc += (a - b).abs() / den;
        }
    }
    acc
}

#[inline]
fn gd_pixel(series: &[f64]) -> f64 {
    let mut acc = 0.0;
    for k in 0..series.len() {
        let a = series[k];
        for &b in &series[k + 1..] {
            acc += (a - b).abs();
        }
    }
    acc
}

#[inline]
fn mwd_pixel(series: &[f64], window: usize) -> f64 {
    let mut acc = 0.0;
    for k in 0..series.len() - window {
        let a = series[k];
        for &b in &series[k + 1..=k + window] {
            acc += (a - b).abs();
        }
    }
    acc
}

#[inline]
fn sf_pixel(series: &[f64], window: usize) -> f64 {
    let mut acc = 0.0;
    for k in 0..series.len() - window {
        let d = series[k] - series[k + window];
        acc += d * d;
    }
    acc
}

#[inline]
fn msf_pixel(series: &[f64], window: usize) -> f64 {
    let mut acc = 0.0;
    for k in 0..series.len() - window {
        acc += (series[k] - series[k + window]).abs();
    }
    acc
}

/// Fills `out` with descriptor values for the pixel rows `rows`.
///
/// `out` must hold exactly `rows.len() * stack.width()` values. Pixels are
/// independent, so callers may split an image into disjoint row bands,
/// compute them on separate workers, and obtain output bit-identical to a
/// single sequential pass.
pub fn compute_rows(
    stack: &FrameStack,
    spec: &DescriptorSpec,
    rows: Range<usize>,
    out: &mut [f64],
) -> Result<(), Error> {
    spec.validate_for(stack)?;
    assert!(
        rows.end <= stack.height(),
        "row range {rows:?} exceeds stack height {}",
        stack.height()
    );
    assert_eq!(
        out.len(),
        rows.len() * stack.width(),
        "output slice does not match the row range"
    );

    let window = spec.effective_window().unwrap_or(0);
    let first = rows.start * stack.width();
    match spec.method() {
        Method::Fujii => fill(stack, first, out, fujii_pixel),
        Method::Gd => fill(stack, first, out, gd_pixel),
        Method::Mwd => fill(stack, first, out, |s| mwd_pixel(s, window)),
        Method::Sf => fill(stack, first, out, |s| sf_pixel(s, window)),
        Method::Msf => fill(stack, first, out, |s| msf_pixel(s, window)),
    }
    Ok(())
}

#[inline]
fn fill(stack: &FrameStack, first_pixel: usize, out: &mut [f64], kernel: impl Fn(&[f64]) -> f64) {
    let n = stack.num_frames();
    let series = stack.series();
    for (i, slot) in out.iter_mut().enumerate() {
        let start = (first_pixel + i) * n;
        *slot = kernel(&series[start..start + n]);
    }
}

fn compute_full(stack: &FrameStack, spec: &DescriptorSpec) -> Result<ActivityMap, Error> {
    spec.validate_for(stack)?;
    let mut values = vec![0.0; stack.pixel_count()];
    compute_rows(stack, spec, 0..stack.height(), &mut values)?;
    ActivityMap::new(
        stack.height(),
        stack.width(),
        spec.method(),
        spec.effective_window(),
        values,
    )
}

/// Runs the descriptor selected by `spec`; output is identical to calling
/// the matching free function directly.
pub fn compute(stack: &FrameStack, spec: &DescriptorSpec) -> Result<ActivityMap, Error> {
    compute_full(stack, spec)
}

/// Fujii map: consecutive absolute differences weighted by local pair sums.
///
/// Per-pixel values lie in `[0, N - 1]`.
pub fn fujii(stack: &FrameStack) -> ActivityMap {
    compute_full(stack, &DescriptorSpec::fujii()).expect("fujii cannot fail on a valid stack")
}

/// Generalized difference map: absolute differences over all frame pairs.
pub fn gd(stack: &FrameStack) -> ActivityMap {
    compute_full(stack, &DescriptorSpec::gd()).expect("gd cannot fail on a valid stack")
}

/// Mean windowed difference map: all pairs at most `window` frames apart.
pub fn mwd(stack: &FrameStack, window: usize) -> Result<ActivityMap, Error> {
    compute_full(stack, &DescriptorSpec::mwd(window))
}

/// Structure function map: squared differences at fixed lag `window`.
pub fn sf(stack: &FrameStack, window: usize) -> Result<ActivityMap, Error> {
    compute_full(stack, &DescriptorSpec::sf(window))
}

/// Modified structure function map: absolute differences at fixed lag
/// `window`.
pub fn msf(stack: &FrameStack, window: usize) -> Result<ActivityMap, Error> {
    compute_full(stack, &DescriptorSpec::msf(window))
}
