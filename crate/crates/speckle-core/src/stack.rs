use alloc::vec::Vec;

use crate::error::Error;

/// An ordered sequence of equally sized grayscale frames.
///
/// Intensities are kept as real values; 8-bit sources map exactly onto
/// `0.0..=255.0`. Every sample must be finite and nonnegative, and a stack
/// holds at least two frames.
///
/// Samples are stored pixel-major: the temporal sequence of each pixel is
/// contiguous in memory, so the per-pixel descriptor loops stream over one
/// short slice instead of striding across whole frames.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameStack {
    height: usize,
    width: usize,
    frames: usize,
    series: Vec<f64>,
}

impl FrameStack {
    /// Builds a stack from row-major frames, validating every invariant.
    pub fn from_frames(height: usize, width: usize, frames: &[Vec<f64>]) -> Result<Self, Error> {
        if frames.len() < 2 {
            return Err(Error::TooFewFrames {
                frames: frames.len(),
            });
        }
        let pixels = height * width;
        if pixels == 0 {
            return Err(Error::EmptyFrame);
        }
        for (k, frame) in frames.iter().enumerate() {
            if frame.len() != pixels {
                return Err(Error::MismatchedDimensions {
                    frame: k,
                    expected: pixels,
                    found: frame.len(),
                });
            }
            for (p, &v) in frame.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFiniteValue { frame: k, pixel: p });
                }
                if v < 0.0 {
                    return Err(Error::NegativeValue { frame: k, pixel: p });
                }
            }
        }

        // Transpose frame-major input into pixel-major storage.
        let n = frames.len();
        let mut series = alloc::vec![0.0; pixels * n];
        for (k, frame) in frames.iter().enumerate() {
            for (p, &v) in frame.iter().enumerate() {
                series[p * n + k] = v;
            }
        }
        Ok(Self {
            height,
            width,
            frames: n,
            series,
        })
    }

    /// Re-checks every invariant and returns the stack unchanged.
    ///
    /// Construction already validates, so this is idempotent; it exists for
    /// callers that assemble stacks from untrusted parts or want an explicit
    /// checkpoint.
    pub fn validate(self) -> Result<Self, Error> {
        if self.frames < 2 {
            return Err(Error::TooFewFrames {
                frames: self.frames,
            });
        }
        if self.pixel_count() == 0 {
            return Err(Error::EmptyFrame);
        }
        debug_assert_eq!(self.series.len(), self.pixel_count() * self.frames);
        for (i, &v) in self.series.iter().enumerate() {
            let (pixel, frame) = (i / self.frames, i % self.frames);
            if !v.is_finite() {
                return Err(Error::NonFiniteValue { frame, pixel });
            }
            if v < 0.0 {
                return Err(Error::NegativeValue { frame, pixel });
            }
        }
        Ok(self)
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of frames in the stack.
    #[inline]
    pub fn num_frames(&self) -> usize {
        self.frames
    }

    #[inline]
    pub fn pixel_count(&self) -> usize {
        self.height * self.width
    }

    /// Temporal sequence of one pixel (row-major pixel index).
    #[inline]
    pub fn pixel_series(&self, pixel: usize) -> &[f64] {
        &self.series[pixel * self.frames..(pixel + 1) * self.frames]
    }

    /// Whole pixel-major sample buffer.
    #[inline]
    pub fn series(&self) -> &[f64] {
        &self.series
    }

    /// Intensity of one sample.
    #[inline]
    pub fn value(&self, frame: usize, row: usize, col: usize) -> f64 {
        self.series[(row * self.width + col) * self.frames + frame]
    }

    /// Gathers one frame back into row-major order.
    pub fn frame(&self, index: usize) -> Vec<f64> {
        assert!(index < self.frames, "frame index out of range");
        (0..self.pixel_count())
            .map(|p| self.series[p * self.frames + index])
            .collect()
    }

    /// Gathers all frames back into row-major order.
    pub fn to_frames(&self) -> Vec<Vec<f64>> {
        (0..self.frames).map(|k| self.frame(k)).collect()
    }
}
