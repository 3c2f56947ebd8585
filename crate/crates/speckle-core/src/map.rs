use alloc::vec::Vec;

use crate::descriptor::Method;
use crate::error::Error;

/// A full-field activity map: one nonnegative value per pixel of the source
/// stack, tagged with the descriptor (and window lag) that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct ActivityMap {
    height: usize,
    width: usize,
    method: Method,
    window: Option<usize>,
    values: Vec<f64>,
}

impl ActivityMap {
    /// Assembles a map from raw row-major values, checking the invariants
    /// (nonnegative, finite, `height * width` values, nonempty).
    pub fn new(
        height: usize,
        width: usize,
        method: Method,
        window: Option<usize>,
        values: Vec<f64>,
    ) -> Result<Self, Error> {
        if height * width == 0 {
            return Err(Error::EmptyFrame);
        }
        if values.len() != height * width {
            return Err(Error::MismatchedDimensions {
                frame: 0,
                expected: height * width,
                found: values.len(),
            });
        }
        for (p, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteValue { frame: 0, pixel: p });
            }
            if v < 0.0 {
                return Err(Error::NegativeValue { frame: 0, pixel: p });
            }
        }
        Ok(Self {
            height,
            width,
            method,
            window,
            values,
        })
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn method(&self) -> Method {
        self.method
    }

    /// Window lag the descriptor used; `None` for Fujii and GD.
    #[inline]
    pub fn window(&self) -> Option<usize> {
        self.window
    }

    /// Row-major activity values.
    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    #[inline]
    pub fn value(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.width + col]
    }
}
