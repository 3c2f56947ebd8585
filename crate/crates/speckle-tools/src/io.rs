//! File ingestion and export: PNG/PGM stacks in, normalized PNG maps,
//! full-precision CSV maps, and CSV/JSON reports out.

use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use image::{DynamicImage, GrayImage, ImageFormat};
use speckle_core::{ActivityMap, Error as CoreError, FrameStack, Method};
use thiserror::Error;

use crate::bench::TimingResult;
use crate::report::ComparisonReport;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("file not found: {path}")]
    FileNotFound { path: PathBuf },
    #[error("no files matched '{pattern}'")]
    NoMatches { pattern: String },
    #[error("invalid glob pattern '{pattern}': {source}")]
    BadPattern {
        pattern: String,
        source: glob::PatternError,
    },
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot decode {path}: {source}")]
    Decode {
        path: PathBuf,
        source: image::ImageError,
    },
    #[error("cannot encode {path}: {source}")]
    Encode {
        path: PathBuf,
        source: image::ImageError,
    },
    #[error("{path}: expected 8-bit grayscale, found {found} (convert explicitly; implicit conversion would change descriptor values)")]
    NotGrayscale8 { path: PathBuf, found: String },
    #[error("{path}: frame is {found_w}x{found_h}, expected {expected_w}x{expected_h}")]
    FrameSizeMismatch {
        path: PathBuf,
        expected_w: u32,
        expected_h: u32,
        found_w: u32,
        found_h: u32,
    },
    #[error("{path}:{line}: {reason}")]
    MalformedCsv {
        path: PathBuf,
        line: usize,
        reason: String,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Where a stack's frames come from: an explicit ordered file list, or a
/// glob pattern whose matches are taken in lexicographic order.
#[derive(Debug, Clone)]
pub enum StackSource {
    Files(Vec<PathBuf>),
    Pattern(String),
}

impl StackSource {
    /// One argument is a glob pattern; several are an explicit ordered list.
    pub fn from_args(args: &[String]) -> Self {
        if args.len() == 1 {
            StackSource::Pattern(args[0].clone())
        } else {
            StackSource::Files(args.iter().map(PathBuf::from).collect())
        }
    }

    /// The frame paths, in stack order.
    pub fn resolve(&self) -> Result<Vec<PathBuf>, IoError> {
        match self {
            StackSource::Files(paths) => Ok(paths.clone()),
            StackSource::Pattern(pattern) => {
                let matches = glob::glob(pattern).map_err(|source| IoError::BadPattern {
                    pattern: pattern.clone(),
                    source,
                })?;
                let mut paths = Vec::new();
                for entry in matches {
                    match entry {
                        Ok(path) => paths.push(path),
                        Err(e) => {
                            let path = e.path().to_path_buf();
                            return Err(IoError::Read {
                                path,
                                source: e.into(),
                            });
                        }
                    }
                }
                paths.sort();
                if paths.is_empty() {
                    return Err(IoError::NoMatches {
                        pattern: pattern.clone(),
                    });
                }
                Ok(paths)
            }
        }
    }
}

/// Loads a stack of 8-bit grayscale PNG/PGM frames.
///
/// Gray levels map exactly onto `0.0..=255.0`. Anything that is not 8-bit
/// single-channel is rejected rather than converted.
pub fn load_stack(source: &StackSource) -> Result<FrameStack, IoError> {
    let paths = source.resolve()?;
    if paths.len() < 2 {
        return Err(CoreError::TooFewFrames {
            frames: paths.len(),
        }
        .into());
    }

    let mut dims: Option<(u32, u32)> = None;
    let mut frames = Vec::with_capacity(paths.len());
    for path in &paths {
        if !path.is_file() {
            return Err(IoError::FileNotFound { path: path.clone() });
        }
        let decoded = image::open(path).map_err(|source| IoError::Decode {
            path: path.clone(),
            source,
        })?;
        let gray: GrayImage = match decoded {
            DynamicImage::ImageLuma8(gray) => gray,
            other => {
                return Err(IoError::NotGrayscale8 {
                    path: path.clone(),
                    found: format!("{:?}", other.color()),
                })
            }
        };
        let (w, h) = gray.dimensions();
        match dims {
            None => dims = Some((w, h)),
            Some((ew, eh)) if (w, h) != (ew, eh) => {
                return Err(IoError::FrameSizeMismatch {
                    path: path.clone(),
                    expected_w: ew,
                    expected_h: eh,
                    found_w: w,
                    found_h: h,
                });
            }
            Some(_) => {}
        }
        frames.push(gray.into_raw().into_iter().map(f64::from).collect());
    }

    let (w, h) = dims.expect("at least two frames were decoded");
    Ok(FrameStack::from_frames(h as usize, w as usize, &frames)?)
}

/// Writes a map as an 8-bit grayscale PNG, min-max normalized:
/// `round(255 * (v - min) / (max - min))`, an all-equal map becoming all
/// zeros. Raw values should go through [`save_map_csv`] instead; this
/// rendering only preserves relative contrast.
pub fn save_map_image(map: &ActivityMap, path: &Path) -> Result<(), IoError> {
    let values = map.values();
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &v in values {
        min = min.min(v);
        max = max.max(v);
    }
    let span = max - min;
    let pixels: Vec<u8> = values
        .iter()
        .map(|&v| {
            if span > 0.0 {
                (255.0 * ((v - min) / span)).round() as u8
            } else {
                0
            }
        })
        .collect();
    let img = GrayImage::from_raw(map.width() as u32, map.height() as u32, pixels)
        .expect("pixel buffer matches map dimensions");
    img.save_with_format(path, ImageFormat::Png)
        .map_err(|source| IoError::Encode {
            path: path.to_path_buf(),
            source,
        })
}

/// Writes raw map values as CSV, one image row per line.
///
/// Values are printed with enough digits to parse back to the identical
/// `f64`, so [`load_map_csv`] is a bit-exact round trip.
pub fn save_map_csv(map: &ActivityMap, path: &Path) -> Result<(), IoError> {
    let wrap = |source| IoError::Write {
        path: path.to_path_buf(),
        source,
    };
    let mut out = BufWriter::new(File::create(path).map_err(wrap)?);
    for row in 0..map.height() {
        for col in 0..map.width() {
            if col > 0 {
                out.write_all(b",").map_err(wrap)?;
            }
            write!(out, "{}", map.value(row, col)).map_err(wrap)?;
        }
        out.write_all(b"\n").map_err(wrap)?;
    }
    out.flush().map_err(wrap)
}

/// Reads a CSV map back as `(height, width, row-major values)`.
pub fn load_map_csv(path: &Path) -> Result<(usize, usize, Vec<f64>), IoError> {
    let file = File::open(path).map_err(|source| IoError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let malformed = |line: usize, reason: String| IoError::MalformedCsv {
        path: path.to_path_buf(),
        line,
        reason,
    };

    let mut width = None;
    let mut values = Vec::new();
    let mut height = 0;
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|source| IoError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        if line.is_empty() {
            return Err(malformed(idx + 1, "empty row".into()));
        }
        let mut cols = 0;
        for cell in line.split(',') {
            let v: f64 = cell
                .parse()
                .map_err(|e| malformed(idx + 1, format!("bad number '{cell}': {e}")))?;
            values.push(v);
            cols += 1;
        }
        match width {
            None => width = Some(cols),
            Some(w) if w != cols => {
                return Err(malformed(
                    idx + 1,
                    format!("row has {cols} columns, expected {w}"),
                ));
            }
            Some(_) => {}
        }
        height += 1;
    }
    let width = width.ok_or_else(|| malformed(0, "no rows".into()))?;
    Ok((height, width, values))
}

/// Output format for [`save_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

/// The report column set, in order.
pub const REPORT_COLUMNS: [&str; 10] = [
    "method",
    "window",
    "max_X",
    "min_X",
    "mean_X",
    "max_Xp",
    "min_Xp",
    "mean_Xp",
    "mean_diff",
    "t_av_seconds",
];

/// Writes a comparison report as CSV (header plus one row per method) or as
/// a JSON array of objects carrying the same fields.
pub fn save_report(
    report: &ComparisonReport,
    path: &Path,
    format: ReportFormat,
) -> Result<(), IoError> {
    let wrap = |source| IoError::Write {
        path: path.to_path_buf(),
        source,
    };
    match format {
        ReportFormat::Csv => {
            let mut out = BufWriter::new(File::create(path).map_err(wrap)?);
            writeln!(out, "{}", REPORT_COLUMNS.join(",")).map_err(wrap)?;
            for row in &report.rows {
                let window = row.window.map(|w| w.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    row.method,
                    window,
                    row.stats_high.max,
                    row.stats_high.min,
                    row.stats_high.mean,
                    row.stats_low.max,
                    row.stats_low.min,
                    row.stats_low.mean,
                    row.mean_activity_difference,
                    row.timing.t_av,
                )
                .map_err(wrap)?;
            }
            out.flush().map_err(wrap)
        }
        ReportFormat::Json => {
            let rows: Vec<serde_json::Value> = report
                .rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "method": row.method.name(),
                        "window": row.window,
                        "max_X": row.stats_high.max,
                        "min_X": row.stats_high.min,
                        "mean_X": row.stats_high.mean,
                        "max_Xp": row.stats_low.max,
                        "min_Xp": row.stats_low.min,
                        "mean_Xp": row.stats_low.mean,
                        "mean_diff": row.mean_activity_difference,
                        "t_av_seconds": row.timing.t_av,
                    })
                })
                .collect();
            let text = serde_json::to_string_pretty(&rows).expect("report rows serialize");
            fs::write(path, text + "\n").map_err(wrap)
        }
    }
}

/// Writes per-run timing samples as CSV: `method,window,stack,run,seconds`,
/// where `stack` is `high` or `low`.
pub fn save_timing_csv(results: &[TimingResult], path: &Path) -> Result<(), IoError> {
    let wrap = |source| IoError::Write {
        path: path.to_path_buf(),
        source,
    };
    let mut out = BufWriter::new(File::create(path).map_err(wrap)?);
    writeln!(out, "method,window,stack,run,seconds").map_err(wrap)?;
    for result in results {
        let window = result.window.map(|w| w.to_string()).unwrap_or_default();
        for (label, samples) in [("high", &result.samples_high), ("low", &result.samples_low)] {
            for (run, s) in samples.iter().enumerate() {
                writeln!(out, "{},{},{},{},{}", result.method, window, label, run, s)
                    .map_err(wrap)?;
            }
        }
    }
    out.flush().map_err(wrap)
}

/// Writes every frame of a stack as `frame_NNNN.png` under `dir`, returning
/// the paths in frame order. Intensities are rounded to the nearest 8-bit
/// level; stacks generated with quantization enabled are written exactly.
pub fn save_stack_frames(stack: &FrameStack, dir: &Path) -> Result<Vec<PathBuf>, IoError> {
    fs::create_dir_all(dir).map_err(|source| IoError::Write {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut paths = Vec::with_capacity(stack.num_frames());
    for k in 0..stack.num_frames() {
        let pixels: Vec<u8> = stack
            .frame(k)
            .into_iter()
            .map(|v| v.round().clamp(0.0, 255.0) as u8)
            .collect();
        let img = GrayImage::from_raw(stack.width() as u32, stack.height() as u32, pixels)
            .expect("pixel buffer matches stack dimensions");
        let path = dir.join(format!("frame_{k:04}.png"));
        img.save_with_format(&path, ImageFormat::Png)
            .map_err(|source| IoError::Encode {
                path: path.clone(),
                source,
            })?;
        paths.push(path);
    }
    Ok(paths)
}

/// Rebuilds an [`ActivityMap`] from CSV contents previously written by
/// [`save_map_csv`]. The descriptor tag is not stored in the file, so the
/// caller supplies it.
pub fn load_map_csv_as(
    path: &Path,
    method: Method,
    window: Option<usize>,
) -> Result<ActivityMap, IoError> {
    let (height, width, values) = load_map_csv(path)?;
    Ok(ActivityMap::new(height, width, method, window, values)?)
}
