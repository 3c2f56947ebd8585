use core::fmt;

use crate::descriptor::Method;

/// Errors raised by stack validation, descriptor dispatch, and statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A frame's pixel count differs from the first frame's.
    MismatchedDimensions {
        frame: usize,
        expected: usize,
        found: usize,
    },
    /// A stack needs at least two frames.
    TooFewFrames { frames: usize },
    /// Frames must contain at least one pixel.
    EmptyFrame,
    /// An intensity sample is NaN or infinite.
    NonFiniteValue { frame: usize, pixel: usize },
    /// An intensity sample is negative.
    NegativeValue { frame: usize, pixel: usize },
    /// The method needs a window lag but none was given.
    MissingWindow { method: Method },
    /// Window lag outside `1..=frames - 1`.
    WindowOutOfRange { window: usize, frames: usize },
    /// Two maps were produced by different descriptors.
    MethodMismatch { left: Method, right: Method },
    /// Two maps were produced with different window lags.
    WindowMismatch {
        left: Option<usize>,
        right: Option<usize>,
    },
    /// Two maps have different heights or widths.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::MismatchedDimensions {
                frame,
                expected,
                found,
            } => write!(
                f,
                "frame {frame} has {found} pixels, expected {expected} (all frames must share dimensions)"
            ),
            Error::TooFewFrames { frames } => {
                write!(f, "stack has {frames} frame(s), at least 2 are required")
            }
            Error::EmptyFrame => write!(f, "frames must contain at least one pixel"),
            Error::NonFiniteValue { frame, pixel } => {
                write!(f, "non-finite intensity at frame {frame}, pixel {pixel}")
            }
            Error::NegativeValue { frame, pixel } => {
                write!(f, "negative intensity at frame {frame}, pixel {pixel}")
            }
            Error::MissingWindow { method } => {
                write!(f, "method {method} requires a window lag")
            }
            Error::WindowOutOfRange { window, frames } => write!(
                f,
                "window lag {window} out of range (must satisfy 1 <= w <= {})",
                frames.saturating_sub(1)
            ),
            Error::MethodMismatch { left, right } => {
                write!(f, "maps come from different methods: {left} vs {right}")
            }
            Error::WindowMismatch { left, right } => {
                write!(f, "maps come from different windows: {left:?} vs {right:?}")
            }
            Error::DimensionMismatch { left, right } => write!(
                f,
                "maps have different dimensions: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
        }
    }
}

impl core::error::Error for Error {}
