use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(name = "rbu", version, about = "Radial-based undersampling and imbalanced-data benchmarks")]
pub struct Cli {
    /// More log output (-v info, -vv debug, -vvv trace).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resample a dataset and write the result in the input's format.
    Resample(ResampleArgs),
    /// Print the safe/borderline/rare/outlier percentages of the minority class.
    Typify(TypifyArgs),
    /// Print size, imbalance ratio and minority-type mix of datasets.
    Stats(StatsArgs),
    /// Sample the mutual class potential of a 2-D dataset on a grid.
    PotentialGrid(GridArgs),
    /// Cross-validate fixed resampling configurations.
    Evaluate(EvaluateArgs),
    /// Cross-validate method grids with inner model selection.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Auto,
    Keel,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    None,
    Rus,
    Ros,
    Smote,
    Enn,
    Renn,
    Tomek,
    Nm,
    Rbu,
    Stl,
    Senn,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::None => "none",
            Method::Rus => "rus",
            Method::Ros => "ros",
            Method::Smote => "smote",
            Method::Enn => "enn",
            Method::Renn => "renn",
            Method::Tomek => "tomek",
            Method::Nm => "nm",
            Method::Rbu => "rbu",
            Method::Stl => "stl",
            Method::Senn => "senn",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TieArg {
    Lowest,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedArg {
    Fixed(u64),
    Random,
}

pub fn parse_seed(s: &str) -> Result<SeedArg, String> {
    if s.eq_ignore_ascii_case("random") {
        return Ok(SeedArg::Random);
    }
    s.parse::<u64>()
        .map(SeedArg::Fixed)
        .map_err(|_| format!("expected a non-negative integer or 'random', got '{s}'"))
}

pub fn parse_bounds(s: &str) -> Result<[f64; 4], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("'{t}' is not a number")))
        .collect::<Result<_, _>>()?;
    v.try_into()
        .map_err(|v: Vec<f64>| format!("expected xlo,xhi,ylo,yhi, got {} values", v.len()))
}

#[derive(Debug, Args)]
pub struct DataArgs {
    /// Input format; `auto` picks by extension (.dat KEEL, .csv CSV).
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    pub format: FormatArg,

    /// Label of the minority class (default: the less frequent one).
    #[arg(long)]
    pub minority: Option<String>,
}

#[derive(Debug, Args)]
pub struct SeedArgs {
    /// Random seed, or `random` for an entropy-based one.
    #[arg(long, env = "RR_SEED", value_parser = parse_seed)]
    pub seed: Option<SeedArg>,
}

#[derive(Debug, Args)]
pub struct MethodParams {
    /// Neighborhood size (smote, enn, renn, nm, stl, senn).
    #[arg(long, default_value_t = 5)]
    pub k: usize,

    /// Fraction of the class-size gap to close.
    #[arg(long, default_value_t = 1.0)]
    pub ratio: f64,

    /// RBF spread for rbu.
    #[arg(long, default_value_t = 0.1)]
    pub gamma: f64,
}

#[derive(Debug, Args)]
pub struct ResampleArgs {
    pub input: PathBuf,

    #[arg(long, value_enum)]
    pub method: Method,

    #[command(flatten)]
    pub params: MethodParams,

    #[command(flatten)]
    pub seed: SeedArgs,

    /// How rbu breaks ties between equal potentials.
    #[arg(long, value_enum, default_value_t = TieArg::Lowest)]
    pub tie_rule: TieArg,

    /// Output file (default: standard output).
    #[arg(short, long)]
    pub output: Option<PathBuf>,

    #[command(flatten)]
    pub data: DataArgs,

    /// Standardize features over the whole dataset before resampling.
    #[arg(long)]
    pub standardize: bool,
}

#[derive(Debug, Args)]
pub struct TypifyArgs {
    pub input: PathBuf,

    /// Write one `row,type,same_class_neighbors` line per minority object.
    #[arg(long, value_name = "CSV")]
    pub per_object: Option<PathBuf>,

    #[arg(long, default_value_t = 5)]
    pub k: usize,

    /// Minkowski exponent.
    #[arg(long, default_value_t = 2.0)]
    pub p: f64,

    /// Skip standardization.
    #[arg(long)]
    pub raw: bool,

    #[command(flatten)]
    pub data: DataArgs,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Dataset files, directories, or `.txt` lists of paths.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,

    #[arg(long)]
    pub json: bool,

    #[command(flatten)]
    pub data: DataArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    pub input: PathBuf,

    #[arg(long)]
    pub gamma: f64,

    /// Cells per axis.
    #[arg(long, default_value_t = 50)]
    pub resolution: usize,

    /// `xlo,xhi,ylo,yhi`; defaults to the data range plus 10%.
    #[arg(long, value_parser = parse_bounds, allow_hyphen_values = true)]
    pub bounds: Option<[f64; 4]>,

    #[arg(long, value_enum, default_value_t = GridFormat::Csv)]
    pub grid_format: GridFormat,

    /// Treat the minority class as the majority and vice versa.
    #[arg(long)]
    pub swap_classes: bool,

    #[arg(long)]
    pub standardize: bool,

    #[arg(short, long)]
    pub output: Option<PathBuf>,

    #[command(flatten)]
    pub data: DataArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassifierArg {
    Knn,
    Gnb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StandardizationArg {
    PerFold,
    Global,
    None,
}

#[derive(Debug, Args)]
pub struct HarnessArgs {
    /// Dataset files, directories, or `.txt` lists of paths.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,

    #[arg(long, value_enum, value_delimiter = ',', default_values_t = vec![ClassifierArg::Knn, ClassifierArg::Gnb])]
    pub classifier: Vec<ClassifierArg>,

    #[command(flatten)]
    pub seed: SeedArgs,

    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,

    /// Outer repeats of the 2-fold split.
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,

    #[arg(long, value_enum, default_value_t = StandardizationArg::PerFold)]
    pub standardization: StandardizationArg,

    /// JSON report path (default: standard output).
    #[arg(short, long)]
    pub output: Option<PathBuf>,

    /// Also write one CSV row per fold.
    #[arg(long)]
    pub csv: Option<PathBuf>,

    #[command(flatten)]
    pub data: DataArgs,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    #[command(flatten)]
    pub harness: HarnessArgs,

    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub method: Vec<Method>,

    #[command(flatten)]
    pub params: MethodParams,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetArg {
    PaperFinal,
    PaperPrelim,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub harness: HarnessArgs,

    /// Built-in grids.
    #[arg(long, value_enum, conflicts_with = "grid")]
    pub preset: Option<PresetArg>,

    /// JSON file: `[{"name": ..., "grid": [spec, ...]}, ...]`.
    #[arg(long)]
    pub grid: Option<PathBuf>,

    /// Methods taken from the preset (default: all).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub method: Vec<Method>,

    /// Inner repeats of the 2-fold split used for model selection.
    #[arg(long, default_value_t = 3)]
    pub inner_repeats: usize,
}
