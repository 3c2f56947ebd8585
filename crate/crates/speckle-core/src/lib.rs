#![cfg_attr(not(feature = "std"), no_std)]
//! Full-field activity maps from temporal stacks of dynamic speckle images.
//!
//! A [`FrameStack`] holds an ordered sequence of equally sized grayscale
//! frames; the [`descriptors`] module turns it into an [`ActivityMap`] in
//! which each pixel summarizes its own temporal fluctuation. Five pixelwise
//! descriptors are provided: Fujii, generalized difference (GD), mean
//! windowed difference (MWD), structure function (SF), and modified
//! structure function (MSF). The [`stats`] module reduces maps to
//! max/min/mean summaries and high-vs-low activity contrasts.
//!
//! The crate is `no_std` + `alloc` when built without the default `std`
//! feature; it performs no I/O and allocates only the stack and map buffers.
//! All descriptors are deterministic: identical inputs produce bit-identical
//! maps, and row-banded evaluation via [`descriptors::compute_rows`] matches
//! a sequential pass exactly.
//!
//! # Features
//!
//! - `std` *(default)* — standard library; nothing in the API changes when
//!   disabled.
//! - `serde` — `Serialize`/`Deserialize` for [`Method`] and
//!   [`SummaryStats`].

extern crate alloc;

pub mod descriptor;
pub mod descriptors;
pub mod error;
pub mod map;
pub mod stack;
pub mod stats;

pub use crate::descriptor::{DescriptorSpec, Method};
pub use crate::error::Error;
pub use crate::map::ActivityMap;
pub use crate::stack::FrameStack;
pub use crate::stats::{mean_activity_difference, summarize, SummaryStats};
