//! Test-support crate: naive, brute-force transcriptions of the five
//! activity descriptors, plus generators for random frame stacks.
//!
//! Everything here exists to cross-check the production crates and is kept
//! deliberately independent of them: frames are plain row-major `Vec<f64>`
//! in frame-major order, loops follow the defining sums verbatim, and no
//! code is shared with `speckle-core`. Clarity over speed throughout.

/// Fujii: per pixel, `sum_k |I_k - I_{k+1}| / (I_k + I_{k+1})` over the
/// consecutive pairs, with zero-denominator terms contributing zero.
pub fn fujii(frames: &[Vec<f64>]) -> Vec<f64> {
    let pixels = frames[0].len();
    let n = frames.len();
    let mut out = vec![0.0; pixels];
    for p in 0..pixels {
        for k in 0..n - 1 {
            let a = frames[k][p];
            let b = frames[k + 1][p];
            if a + b != 0.0 {
                out[p] += (a - b).abs() / (a + b);
            }
        }
    }
    out
}

/// Generalized difference: per pixel, `sum_k sum_{l>k} |I_k - I_l|`.
pub fn gd(frames: &[Vec<f64>]) -> Vec<f64> {
    let pixels = frames[0].len();
    let n = frames.len();
    let mut out = vec![0.0; pixels];
    for p in 0..pixels {
        for k in 0..n {
            for l in k + 1..n {
                out[p] += (frames[k][p] - frames[l][p]).abs();
            }
        }
    }
    out
}

/// Mean windowed difference: per pixel,
/// `sum_{k=1..N-w} sum_{l=k+1..k+w} |I_k - I_l|` (1-based frame indices).
pub fn mwd(frames: &[Vec<f64>], w: usize) -> Vec<f64> {
    let pixels = frames[0].len();
    let n = frames.len();
    let mut out = vec![0.0; pixels];
    for p in 0..pixels {
        for k in 0..n - w {
            for l in k + 1..=k + w {
                out[p] += (frames[k][p] - frames[l][p]).abs();
            }
        }
    }
    out
}

/// Structure function: per pixel, `sum_{k=1..N-w} (I_k - I_{k+w})^2`.
pub fn sf(frames: &[Vec<f64>], w: usize) -> Vec<f64> {
    let pixels = frames[0].len();
    let n = frames.len();
    let mut out = vec![0.0; pixels];
    for p in 0..pixels {
        for k in 0..n - w {
            let d = frames[k][p] - frames[k + w][p];
            out[p] += d * d;
        }
    }
    out
}

/// Modified structure function: per pixel, `sum_{k=1..N-w} |I_k - I_{k+w}|`.
pub fn msf(frames: &[Vec<f64>], w: usize) -> Vec<f64> {
    let pixels = frames[0].len();
    let n = frames.len();
    let mut out = vec![0.0; pixels];
    for p in 0..pixels {
        for k in 0..n - w {
            out[p] += (frames[k][p] - frames[k + w][p]).abs();
        }
    }
    out
}

/// Random frame-stack builders shared by the test suites.
pub mod builders {
    use rand::Rng;

    /// Frames of integer gray levels drawn uniformly from `0..=255`.
    pub fn frames_8bit<R: Rng>(rng: &mut R, pixels: usize, n: usize) -> Vec<Vec<f64>> {
        (0..n)
            .map(|_| (0..pixels).map(|_| f64::from(rng.random_range(0u8..=255))).collect())
            .collect()
    }

    /// Frames of real gray levels drawn uniformly from `[0, 255)`.
    pub fn frames_real<R: Rng>(rng: &mut R, pixels: usize, n: usize) -> Vec<Vec<f64>> {
        (0..n)
            .map(|_| (0..pixels).map(|_| rng.random_range(0.0..255.0)).collect())
            .collect()
    }

    /// Frames where every sample is either 0 or 1.
    pub fn frames_binary<R: Rng>(rng: &mut R, pixels: usize, n: usize) -> Vec<Vec<f64>> {
        (0..n)
            .map(|_| {
                (0..pixels)
                    .map(|_| if rng.random_bool(0.5) { 1.0 } else { 0.0 })
                    .collect()
            })
            .collect()
    }
}
