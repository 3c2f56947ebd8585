//! Synthetic dynamic-speckle sequences with a controllable activity level.
//!
//! Each frame is the intensity of a complex Gaussian field: real and
//! imaginary parts are drawn independently per pixel, spatially smoothed
//! with a box filter of radius `grain` (which sets the speckle grain size),
//! and evolved in time by the first-order autoregression
//!
//! ```text
//! A[k+1] = rho * A[k] + sqrt(1 - rho^2) * eta[k]
//! ```
//!
//! with a fresh independent field `eta[k]` per step. `rho = 1` freezes the
//! pattern, `rho = 0` refreshes it completely each frame, so lower `rho`
//! means higher activity. Intensities `|A|^2` are rescaled to `[0, 255]`
//! with a single global scale per stack, preserving the temporal dynamics.
//!
//! Generation is a pure function of the parameters: the same seed yields a
//! bit-identical stack.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use speckle_core::FrameStack;
use thiserror::Error;

/// Parameter errors for the generator.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SynthError {
    #[error("invalid params: rho must lie in [0, 1], got {0}")]
    RhoOutOfRange(f64),
    #[error("invalid params: at least 2 frames are required, got {0}")]
    TooFewFrames(usize),
    #[error("invalid params: height and width must be at least 1")]
    EmptyDimensions,
    #[error("invalid params: high-activity rho ({high}) must be below low-activity rho ({low})")]
    RhoOrdering { high: f64, low: f64 },
    #[error("invalid params: paired stacks must share height, width, and frame count")]
    DimensionMismatch,
}

/// Knobs for one synthetic stack.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticParams {
    pub height: usize,
    pub width: usize,
    pub frames: usize,
    /// Temporal correlation in `[0, 1]`: 1 = static, 0 = fully decorrelated.
    pub rho: f64,
    /// Spatial smoothing radius in pixels; 0 disables smoothing.
    pub grain: usize,
    pub seed: u64,
    /// Round intensities to integer gray levels, as an 8-bit camera would.
    pub quantize: bool,
}

impl SyntheticParams {
    pub fn validate(&self) -> Result<(), SynthError> {
        if !(0.0..=1.0).contains(&self.rho) {
            return Err(SynthError::RhoOutOfRange(self.rho));
        }
        if self.frames < 2 {
            return Err(SynthError::TooFewFrames(self.frames));
        }
        if self.height == 0 || self.width == 0 {
            return Err(SynthError::EmptyDimensions);
        }
        Ok(())
    }
}

/// Generates one stack of fully developed speckle.
pub fn generate(params: &SyntheticParams) -> Result<FrameStack, SynthError> {
    params.validate()?;
    let pixels = params.height * params.width;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let mut re = vec![0.0; pixels];
    let mut im = vec![0.0; pixels];
    draw_field(&mut rng, &mut re, &mut im);
    smooth(&mut re, params);
    smooth(&mut im, params);

    let decay = params.rho;
    let excite = (1.0 - decay * decay).sqrt();

    let mut frames = Vec::with_capacity(params.frames);
    frames.push(intensity(&re, &im));

    let mut eta_re = vec![0.0; pixels];
    let mut eta_im = vec![0.0; pixels];
    for _ in 1..params.frames {
        draw_field(&mut rng, &mut eta_re, &mut eta_im);
        smooth(&mut eta_re, params);
        smooth(&mut eta_im, params);
        for p in 0..pixels {
            re[p] = decay * re[p] + excite * eta_re[p];
            im[p] = decay * im[p] + excite * eta_im[p];
        }
        frames.push(intensity(&re, &im));
    }

    rescale(&mut frames, params.quantize);
    Ok(FrameStack::from_frames(params.height, params.width, &frames)
        .expect("generated frames are finite, nonnegative, and equally sized"))
}

/// Generates a high-activity/low-activity pair sharing dimensions.
///
/// `high.rho` must be strictly below `low.rho`: less frame-to-frame
/// correlation means more activity.
pub fn make_pair(
    high: &SyntheticParams,
    low: &SyntheticParams,
) -> Result<(FrameStack, FrameStack), SynthError> {
    high.validate()?;
    low.validate()?;
    if high.rho >= low.rho {
        return Err(SynthError::RhoOrdering {
            high: high.rho,
            low: low.rho,
        });
    }
    if (high.height, high.width, high.frames) != (low.height, low.width, low.frames) {
        return Err(SynthError::DimensionMismatch);
    }
    Ok((generate(high)?, generate(low)?))
}

fn draw_field(rng: &mut ChaCha8Rng, re: &mut [f64], im: &mut [f64]) {
    for p in 0..re.len() {
        re[p] = StandardNormal.sample(rng);
        im[p] = StandardNormal.sample(rng);
    }
}

fn intensity(re: &[f64], im: &[f64]) -> Vec<f64> {
    re.iter()
        .zip(im)
        .map(|(&a, &b)| a * a + b * b)
        .collect()
}

/// Separable box filter with border-clamped, count-normalized windows.
fn smooth(field: &mut [f64], params: &SyntheticParams) {
    let radius = params.grain;
    if radius == 0 {
        return;
    }
    let (h, w) = (params.height, params.width);
    let mut tmp = vec![0.0; field.len()];

    for y in 0..h {
        for x in 0..w {
            let lo = x.saturating_sub(radius);
            let hi = (x + radius).min(w - 1);
            let mut sum = 0.0;
            for xx in lo..=hi {
                sum += field[y * w + xx];
            }
            tmp[y * w + x] = sum / (hi - lo + 1) as f64;
        }
    }
    for y in 0..h {
        for x in 0..w {
            let lo = y.saturating_sub(radius);
            let hi = (y + radius).min(h - 1);
            let mut sum = 0.0;
            for yy in lo..=hi {
                sum += tmp[yy * w + x];
            }
            field[y * w + x] = sum / (hi - lo + 1) as f64;
        }
    }
}

/// Maps all intensities onto `[0, 255]` with one global min/max per stack.
fn rescale(frames: &mut [Vec<f64>], quantize: bool) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for frame in frames.iter() {
        for &v in frame {
            min = min.min(v);
            max = max.max(v);
        }
    }
    let span = max - min;
    for frame in frames.iter_mut() {
        for v in frame.iter_mut() {
            // The ratio form hits 0 and 255 exactly at the endpoints and
            // cannot leave [0, 255]; a degenerate stack maps to all zeros.
            *v = if span > 0.0 {
                255.0 * ((*v - min) / span)
            } else {
                0.0
            };
            if quantize {
                *v = v.round();
            }
        }
    }
}
