//! The `speckle` command-line interface.
//!
//! A thin shell over the library: every subcommand loads/generates stacks,
//! calls the same functions a library user would, and writes files through
//! [`crate::io`], so its numeric output is byte-identical to the equivalent
//! library-call sequence.

use std::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use speckle_core::{descriptors, summarize, DescriptorSpec, Method};

use crate::bench::{self, BenchConfig, TimingResult};
use crate::io::{self, ReportFormat, StackSource};
use crate::report;
use crate::synth::{self, SyntheticParams};

#[derive(Parser)]
#[command(
    name = "speckle",
    version,
    about = "Activity maps, comparisons, and benchmarks for dynamic speckle image stacks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one activity map from a stack of 8-bit grayscale images
    Analyze(AnalyzeArgs),
    /// Run all five descriptors on a high/low-activity pair and write the comparison report
    Compare(CompareArgs),
    /// Time all five descriptors on a high/low-activity pair and write per-run samples
    Bench(BenchArgs),
    /// Generate a synthetic speckle sequence as numbered 8-bit PNG frames
    Synth(SynthArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input frames: one glob pattern (quote it) or an explicit ordered file list
    #[arg(required = true)]
    input: Vec<String>,

    /// Descriptor: fujii, gd, mwd, sf, or msf
    #[arg(long, value_parser = parse_method)]
    method: Method,

    /// Window lag in frames (required for mwd/sf/msf, ignored otherwise)
    #[arg(long)]
    window: Option<usize>,

    /// Write the map as a min-max normalized 8-bit grayscale PNG
    #[arg(long)]
    out_png: Option<PathBuf>,

    /// Write the raw map as full-precision CSV
    #[arg(long)]
    out_csv: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Glob pattern for the high-activity stack X (quote it)
    #[arg(long)]
    high: String,

    /// Glob pattern for the low-activity stack X' (quote it)
    #[arg(long)]
    low: String,

    /// Window lag for mwd/sf/msf
    #[arg(long)]
    window: usize,

    /// Timed repetitions per descriptor
    #[arg(long, default_value_t = 20)]
    runs: usize,

    /// Untimed iterations discarded before timing
    #[arg(long, default_value_t = 2)]
    warmup: usize,

    /// Worker threads, pinned for the whole suite
    #[arg(long, default_value_t = 1)]
    threads: usize,

    /// Report destination
    #[arg(long)]
    out: PathBuf,

    /// Report file format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct BenchArgs {
    /// Glob pattern for the high-activity stack X (quote it)
    #[arg(long)]
    high: String,

    /// Glob pattern for the low-activity stack X' (quote it)
    #[arg(long)]
    low: String,

    /// Window lag for mwd/sf/msf
    #[arg(long)]
    window: usize,

    /// Timed repetitions per descriptor
    #[arg(long, default_value_t = 20)]
    runs: usize,

    /// Untimed iterations discarded before timing
    #[arg(long, default_value_t = 2)]
    warmup: usize,

    /// Worker threads, pinned for the whole suite
    #[arg(long, default_value_t = 1)]
    threads: usize,

    /// Destination for the per-run samples CSV
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long)]
    width: usize,

    #[arg(long)]
    height: usize,

    #[arg(long)]
    frames: usize,

    /// Temporal correlation in [0, 1]: 1 = static, 0 = fully decorrelated
    #[arg(long)]
    rho: f64,

    /// Spatial smoothing radius in pixels (speckle grain size)
    #[arg(long, default_value_t = 1)]
    grain: usize,

    /// RNG seed
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Output directory for the numbered PNG frames
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Json => ReportFormat::Json,
        }
    }
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// Parses the process arguments, runs the selected subcommand, and maps any
/// failure to a nonzero exit code with a diagnostic on stderr.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn execute(command: Command) -> Result<(), Box<dyn Error>> {
    match command {
        Command::Analyze(args) => analyze(args),
        Command::Compare(args) => compare(args),
        Command::Bench(args) => bench_cmd(args),
        Command::Synth(args) => synth_cmd(args),
    }
}

fn analyze(args: AnalyzeArgs) -> Result<(), Box<dyn Error>> {
    let stack = io::load_stack(&StackSource::from_args(&args.input))?;
    let spec = DescriptorSpec::new(args.method, args.window)?;
    spec.validate_for(&stack)?;
    let map = descriptors::compute(&stack, &spec)?;

    if let Some(path) = &args.out_png {
        io::save_map_image(&map, path)?;
    }
    if let Some(path) = &args.out_csv {
        io::save_map_csv(&map, path)?;
    }

    let stats = summarize(&map);
    let window = spec
        .effective_window()
        .map(|w| w.to_string())
        .unwrap_or_else(|| "-".into());
    println!(
        "method={} window={} frames={} size={}x{} max={} min={} mean={}",
        map.method(),
        window,
        stack.num_frames(),
        map.height(),
        map.width(),
        stats.max,
        stats.min,
        stats.mean,
    );
    Ok(())
}

fn load_pair(high: &str, low: &str) -> Result<(speckle_core::FrameStack, speckle_core::FrameStack), Box<dyn Error>> {
    let stack_high = io::load_stack(&StackSource::Pattern(high.to_string()))?;
    let stack_low = io::load_stack(&StackSource::Pattern(low.to_string()))?;
    Ok((stack_high, stack_low))
}

fn compare(args: CompareArgs) -> Result<(), Box<dyn Error>> {
    let (stack_high, stack_low) = load_pair(&args.high, &args.low)?;
    let cfg = BenchConfig {
        runs: args.runs,
        warmup: args.warmup,
        threads: args.threads,
    };
    let specs = report::default_specs(args.window);
    let comparison = report::build_report(&stack_high, &stack_low, &specs, &cfg)?;
    io::save_report(&comparison, &args.out, args.format.into())?;

    for row in &comparison.rows {
        let window = row.window.map(|w| w.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "{:<5} w={:<2} mean_diff={:<12.4} t_av={:.6}s",
            row.method.name(),
            window,
            row.mean_activity_difference,
            row.timing.t_av,
        );
    }
    println!("report written to {}", args.out.display());
    Ok(())
}

fn bench_cmd(args: BenchArgs) -> Result<(), Box<dyn Error>> {
    let (stack_high, stack_low) = load_pair(&args.high, &args.low)?;
    let cfg = BenchConfig {
        runs: args.runs,
        warmup: args.warmup,
        threads: args.threads,
    };
    let mut results: Vec<TimingResult> = Vec::new();
    for spec in report::default_specs(args.window) {
        let pair = bench::time_pair(&stack_high, &stack_low, &spec, &cfg)?;
        results.push(pair.timing);
    }
    io::save_timing_csv(&results, &args.out)?;

    for r in &results {
        let window = r.window.map(|w| w.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "{:<5} w={:<2} t_high={:.6}s t_low={:.6}s t_av={:.6}s ({} runs)",
            r.method.name(),
            window,
            r.t_high,
            r.t_low,
            r.t_av,
            r.samples_high.len(),
        );
    }
    println!("samples written to {}", args.out.display());
    Ok(())
}

fn synth_cmd(args: SynthArgs) -> Result<(), Box<dyn Error>> {
    let params = SyntheticParams {
        height: args.height,
        width: args.width,
        frames: args.frames,
        rho: args.rho,
        grain: args.grain,
        seed: args.seed,
        quantize: true,
    };
    let stack = synth::generate(&params)?;
    let paths = io::save_stack_frames(&stack, &args.out)?;
    println!(
        "wrote {} frames of {}x{} to {}",
        paths.len(),
        args.width,
        args.height,
        args.out.display(),
    );
    Ok(())
}
