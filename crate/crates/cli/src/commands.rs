use crate::args::*;
use rbu_core::dataio::{self, fit_standardizer, Dataset, Format, MinoritySelector};
use rbu_core::evaluation::{
    preset_grid, run_experiment, DatasetEntry, EvalReport, ExperimentConfig, MethodEntry, Preset, Standardization, METHODS,
};
use rbu_core::potential::{potential_grid, GridBounds};
use rbu_core::{categorize_minority, rbu_undersample, BinaryTask, ClassifierKind, RbuParams, ResampleSpec, TieRule, TypingParams};
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

/// A failure with the process exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input data or configuration files.
    Parse(String),
    /// Invalid flags or data that does not fit the request.
    Param(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Param(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Param(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<rbu_core::Error> for CliError {
    fn from(e: rbu_core::Error) -> Self {
        use rbu_core::Error as E;
        match e {
            E::Parse { .. } | E::Csv(_) | E::Json(_) => CliError::Parse(e.to_string()),
            E::Io(_) => CliError::Io(e.to_string()),
            _ => CliError::Param(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

fn resolve_seed(seed: &SeedArgs) -> u64 {
    match seed.seed {
        None => DEFAULT_SEED,
        Some(SeedArg::Fixed(s)) => s,
        Some(SeedArg::Random) => {
            let s = rand::random::<u64>();
            eprintln!("seed: {s}");
            s
        }
    }
}

fn format_of(arg: FormatArg) -> Option<Format> {
    match arg {
        FormatArg::Auto => None,
        FormatArg::Keel => Some(Format::Keel),
        FormatArg::Csv => Some(Format::Csv),
    }
}

fn selector(data: &DataArgs) -> MinoritySelector {
    data.minority
        .clone()
        .map_or(MinoritySelector::Auto, MinoritySelector::Label)
}

fn read(path: &Path, data: &DataArgs) -> Result<(Dataset, Format)> {
    let format = format_of(data.format)
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| {
            CliError::Param(format!(
                "cannot infer the format of {}; pass --format keel or --format csv",
                path.display()
            ))
        })?;
    let dataset = dataio::read_dataset(path, Some(format)).map_err(|e| match e {
        rbu_core::Error::Io(io) => io_err(path, io),
        rbu_core::Error::Parse { .. } => CliError::Parse(format!("{}: {e}", path.display())),
        other => other.into(),
    })?;
    Ok((dataset, format))
}

fn write_output(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| io_err(p, e)),
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

/// Expands directories (their `.dat`/`.csv` files, sorted) and `.txt` path
/// lists into dataset paths.
pub fn collect_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for input in inputs {
        if input.is_dir() {
            let mut files: Vec<PathBuf> = std::fs::read_dir(input)
                .map_err(|e| io_err(input, e))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| Format::from_path(p).is_some())
                .collect();
            files.sort();
            out.extend(files);
        } else if matches!(input.extension().and_then(|e| e.to_str()), Some("txt") | Some("list")) {
            let text = std::fs::read_to_string(input).map_err(|e| io_err(input, e))?;
            let base = input.parent().unwrap_or(Path::new("."));
            out.extend(
                text.lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#'))
                    .map(|l| base.join(l)),
            );
        } else {
            out.push(input.clone());
        }
    }
    if out.is_empty() {
        return Err(CliError::Param("no dataset files found".into()));
    }
    Ok(out)
}

pub fn spec_for(method: Method, p: &MethodParams) -> ResampleSpec {
    let (k, ratio, gamma) = (p.k, p.ratio, p.gamma);
    match method {
        Method::None => ResampleSpec::None,
        Method::Rus => ResampleSpec::Rus { ratio },
        Method::Ros => ResampleSpec::Ros { ratio },
        Method::Smote => ResampleSpec::Smote { k, ratio },
        Method::Enn => ResampleSpec::Enn { k },
        Method::Renn => ResampleSpec::Renn { k },
        Method::Tomek => ResampleSpec::Tomek,
        Method::Nm => ResampleSpec::NearMiss { k, ratio },
        Method::Rbu => ResampleSpec::Rbu { gamma, ratio },
        Method::Stl => ResampleSpec::stl(k, ratio),
        Method::Senn => ResampleSpec::senn(k, ratio),
    }
}

pub fn resample(args: &ResampleArgs) -> Result<()> {
    let (dataset, in_format) = read(&args.input, &args.data)?;
    let mut encoded = dataio::encode_categoricals(&dataset);
    if args.standardize {
        encoded = fit_standardizer(&encoded)?.apply(&encoded)?;
    }
    let task = dataio::split_binary(&encoded, &selector(&args.data))?;
    let seed = resolve_seed(&args.seed);
    let spec = spec_for(args.method, &args.params);
    spec.validate()?;
    let out: BinaryTask = match (args.method, args.tie_rule) {
        (Method::Rbu, TieArg::Random) => {
            let params = RbuParams::new(args.params.gamma, args.params.ratio)?.with_tie_rule(TieRule::SeededRandom(seed));
            rbu_undersample(&task, &params)?.task
        }
        _ => spec.apply(&task, seed)?,
    };
    let out_format = match (&args.output, args.data.format) {
        (_, FormatArg::Keel) => Format::Keel,
        (_, FormatArg::Csv) => Format::Csv,
        (Some(p), FormatArg::Auto) => Format::from_path(p).unwrap_or(in_format),
        (None, FormatArg::Auto) => in_format,
    };
    let text = dataio::write_dataset(&out.to_dataset(&encoded)?, out_format)?;
    let summary = format!(
        "method: {spec}\nseed: {seed}\nmajority ({}): {} -> {}\nminority ({}): {} -> {}\n",
        task.majority_label(),
        task.n_majority(),
        out.n_majority(),
        task.minority_label(),
        task.n_minority(),
        out.n_minority()
    );
    match &args.output {
        Some(p) => {
            write_output(Some(p), &text)?;
            print!("{summary}");
        }
        None => {
            write_output(None, &text)?;
            eprint!("{summary}");
        }
    }
    Ok(())
}

pub fn typify(args: &TypifyArgs) -> Result<()> {
    let (dataset, _) = read(&args.input, &args.data)?;
    let mut encoded = dataio::encode_categoricals(&dataset);
    if !args.raw {
        encoded = fit_standardizer(&encoded)?.apply(&encoded)?;
    }
    let task = dataio::split_binary(&encoded, &selector(&args.data))?;
    let report = categorize_minority(&task, &TypingParams { k: args.k, p: args.p })?;
    println!("{}", report.proportions);
    if let Some(path) = &args.per_object {
        let rows: Vec<usize> = (0..dataset.n_samples())
            .filter(|&i| dataset.labels()[i] == task.minority_label())
            .collect();
        let mut csv = String::from("row,type,same_class_neighbors\n");
        for ((row, t), c) in rows.iter().zip(&report.categories).zip(&report.same_class_neighbors) {
            csv.push_str(&format!("{row},{t},{c}\n"));
        }
        write_output(Some(path), &csv)?;
    }
    Ok(())
}

pub fn stats(args: &StatsArgs) -> Result<()> {
    let mut all = Vec::new();
    for path in collect_inputs(&args.inputs)? {
        let (dataset, _) = read(&path, &args.data)?;
        all.push(dataio::dataset_stats(&dataset, &selector(&args.data))?);
    }
    if args.json {
        let text = serde_json::to_string_pretty(&all).map_err(|e| CliError::Param(e.to_string()))?;
        println!("{text}");
    } else {
        println!("name\tsamples\tfeatures\tir\tsafe\tborderline\trare\toutlier");
        for s in &all {
            let t = s.type_proportions;
            println!(
                "{}\t{}\t{}\t{:.2}\t{:.2}\t{:.2}\t{:.2}\t{:.2}",
                s.name, s.samples, s.features, s.ir, t.safe, t.borderline, t.rare, t.outlier
            );
        }
    }
    Ok(())
}

pub fn potential_grid_cmd(args: &GridArgs) -> Result<()> {
    let (dataset, _) = read(&args.input, &args.data)?;
    let mut encoded = dataio::encode_categoricals(&dataset);
    if encoded.n_features() != 2 {
        return Err(CliError::Param(format!(
            "potential-grid needs 2-D data, {} has {} features",
            args.input.display(),
            encoded.n_features()
        )));
    }
    if args.standardize {
        encoded = fit_standardizer(&encoded)?.apply(&encoded)?;
    }
    let mut task = dataio::split_binary(&encoded, &selector(&args.data))?;
    if args.swap_classes {
        task = BinaryTask::with_labels(
            task.minority().to_owned(),
            task.majority().to_owned(),
            task.minority_label(),
            task.majority_label(),
        )?;
    }
    let bounds = match &args.bounds {
        Some(b) => GridBounds {
            x: [b[0], b[1]],
            y: [b[2], b[3]],
        },
        None => GridBounds::around(&task, 0.1)?,
    };
    let grid = potential_grid(&task, args.gamma, bounds, args.resolution)?;
    let text = match args.grid_format {
        GridFormat::Csv => grid.to_csv(),
        GridFormat::Json => grid.to_json()? + "\n",
    };
    write_output(args.output.as_deref(), &text)
}

fn load_entries(h: &HarnessArgs) -> Result<Vec<DatasetEntry>> {
    collect_inputs(&h.inputs)?
        .iter()
        .map(|p| {
            let (dataset, _) = read(p, &h.data)?;
            DatasetEntry::from_dataset(&dataset, &selector(&h.data))
                .map_err(|e| CliError::Param(format!("{}: {e}", p.display())))
        })
        .collect()
}

fn harness_config(h: &HarnessArgs, select: bool, inner_repeats: usize) -> ExperimentConfig {
    ExperimentConfig {
        seed: resolve_seed(&h.seed),
        repeats: h.repeats,
        inner_repeats,
        standardization: match h.standardization {
            StandardizationArg::PerFold => Standardization::PerFold,
            StandardizationArg::Global => Standardization::Global,
            StandardizationArg::None => Standardization::None,
        },
        select,
        jobs: h.jobs.max(1),
    }
}

fn classifiers(h: &HarnessArgs) -> Vec<ClassifierKind> {
    let mut out: Vec<ClassifierKind> = Vec::new();
    for c in &h.classifier {
        let k = match c {
            ClassifierArg::Knn => ClassifierKind::Knn,
            ClassifierArg::Gnb => ClassifierKind::Gnb,
        };
        if !out.contains(&k) {
            out.push(k);
        }
    }
    out
}

fn finish(h: &HarnessArgs, report: &EvalReport) -> Result<()> {
    if report.runs.iter().all(|r| r.metrics.is_none()) {
        return Err(CliError::Param("every run failed; see the log for details".into()));
    }
    let failed = report.runs.iter().filter(|r| r.metrics.is_none()).count();
    if failed > 0 {
        log::warn!("{failed} of {} runs failed", report.runs.len());
    }
    write_output(h.output.as_deref(), &(report.to_json()? + "\n"))?;
    if let Some(p) = &h.csv {
        write_output(Some(p), &report.runs_csv()?)?;
    }
    Ok(())
}

fn dedup_methods(methods: &[Method]) -> Vec<Method> {
    let mut out = Vec::new();
    for m in methods {
        if !out.contains(m) {
            out.push(*m);
        }
    }
    out
}

pub fn evaluate(args: &EvaluateArgs) -> Result<()> {
    let methods: Vec<MethodEntry> = dedup_methods(&args.method)
        .into_iter()
        .map(|m| MethodEntry::new(m.name(), vec![spec_for(m, &args.params)]))
        .collect();
    let datasets = load_entries(&args.harness)?;
    let config = harness_config(&args.harness, false, 3);
    let report = run_experiment(&datasets, &methods, &classifiers(&args.harness), &config)?;
    finish(&args.harness, &report)
}

pub fn sweep(args: &SweepArgs) -> Result<()> {
    let methods: Vec<MethodEntry> = match &args.grid {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
            let methods: Vec<MethodEntry> =
                serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            if methods.is_empty() {
                return Err(CliError::Param(format!("{} lists no methods", path.display())));
            }
            methods
        }
        None => {
            let preset = match args.preset.unwrap_or(PresetArg::PaperFinal) {
                PresetArg::PaperFinal => Preset::PaperFinal,
                PresetArg::PaperPrelim => Preset::PaperPrelim,
            };
            let names: Vec<&str> = if args.method.is_empty() {
                METHODS.to_vec()
            } else {
                dedup_methods(&args.method).iter().map(Method::name).collect()
            };
            names
                .into_iter()
                .map(|n| Ok(MethodEntry::new(n, preset_grid(preset, n)?)))
                .collect::<Result<_>>()?
        }
    };
    let datasets = load_entries(&args.harness)?;
    let config = harness_config(&args.harness, true, args.inner_repeats);
    let report = run_experiment(&datasets, &methods, &classifiers(&args.harness), &config)?;
    finish(&args.harness, &report)
}
