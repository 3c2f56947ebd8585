use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::stack::FrameStack;

/// The five pixelwise activity descriptors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Method {
    /// Fujii: consecutive absolute differences weighted by the local pair sum.
    Fujii,
    /// Generalized difference: absolute differences over all frame pairs.
    Gd,
    /// Mean windowed difference: all pairs no more than `w` frames apart.
    Mwd,
    /// Structure function: squared differences at fixed lag `w`.
    Sf,
    /// Modified structure function: absolute differences at fixed lag `w`.
    Msf,
}

impl Method {
    /// Every method, in the order reports are laid out.
    pub const ALL: [Method; 5] = [
        Method::Fujii,
        Method::Gd,
        Method::Mwd,
        Method::Sf,
        Method::Msf,
    ];

    /// Whether the method takes a window lag.
    #[inline]
    pub fn requires_window(self) -> bool {
        matches!(self, Method::Mwd | Method::Sf | Method::Msf)
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Fujii => "fujii",
            Method::Gd => "gd",
            Method::Mwd => "mwd",
            Method::Sf => "sf",
            Method::Msf => "msf",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fujii" => Ok(Method::Fujii),
            "gd" => Ok(Method::Gd),
            "mwd" => Ok(Method::Mwd),
            "sf" => Ok(Method::Sf),
            "msf" => Ok(Method::Msf),
            _ => Err(UnknownMethod),
        }
    }
}

/// Parse error for [`Method`]; the valid names are `fujii`, `gd`, `mwd`,
/// `sf`, and `msf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownMethod;

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown method (expected one of: fujii, gd, mwd, sf, msf)")
    }
}

impl core::error::Error for UnknownMethod {}

/// A descriptor choice plus its window lag, where one applies.
///
/// Fujii and GD ignore the window; MWD, SF, and MSF require a lag `w` with
/// `1 <= w <= N - 1` for an `N`-frame stack. The upper bound depends on the
/// stack, so it is checked by [`DescriptorSpec::validate_for`] (and again on
/// compute), not at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DescriptorSpec {
    method: Method,
    window: Option<usize>,
}

impl DescriptorSpec {
    /// Pairs a method with an optional window, rejecting windowed methods
    /// without one.
    pub fn new(method: Method, window: Option<usize>) -> Result<Self, Error> {
        if method.requires_window() && window.is_none() {
            return Err(Error::MissingWindow { method });
        }
        Ok(Self { method, window })
    }

    pub fn fujii() -> Self {
        Self {
            method: Method::Fujii,
            window: None,
        }
    }

    pub fn gd() -> Self {
        Self {
            method: Method::Gd,
            window: None,
        }
    }

    pub fn mwd(window: usize) -> Self {
        Self {
            method: Method::Mwd,
            window: Some(window),
        }
    }

    pub fn sf(window: usize) -> Self {
        Self {
            method: Method::Sf,
            window: Some(window),
        }
    }

    pub fn msf(window: usize) -> Self {
        Self {
            method: Method::Msf,
            window: Some(window),
        }
    }

    #[inline]
    pub fn method(&self) -> Method {
        self.method
    }

    /// The window as given, even for methods that ignore it.
    #[inline]
    pub fn window(&self) -> Option<usize> {
        self.window
    }

    /// The window the descriptor will actually use: `None` for Fujii and GD.
    #[inline]
    pub fn effective_window(&self) -> Option<usize> {
        if self.method.requires_window() {
            self.window
        } else {
            None
        }
    }

    /// Checks the window constraint `1 <= w <= N - 1` against a stack.
    ///
    /// Methods without a window always pass; a window supplied to them is
    /// ignored rather than rejected.
    pub fn validate_for(&self, stack: &FrameStack) -> Result<(), Error> {
        if !self.method.requires_window() {
            return Ok(());
        }
        let window = self.window.ok_or(Error::MissingWindow {
            method: self.method,
        })?;
        let frames = stack.num_frames();
        if window < 1 || window > frames - 1 {
            return Err(Error::WindowOutOfRange { window, frames });
        }
        Ok(())
    }
}
