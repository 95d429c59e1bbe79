use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homology::{
    condition_lhs, condition_plugin, joint_letter_law, Alphabet, Error, GenerativeParamsF64,
    ModelFile, PairGeneratorF64, PlotOptions,
};

mod casestudy;
mod output;

#[derive(Parser)]
#[command(
    name = "homology",
    version,
    about = "Sequence homology from extremal LCS alignments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare the first records of two FASTA files.
    Compare(CompareArgs),
    /// Run the four-gene case study.
    Casestudy(CasestudyArgs),
    /// Generate pairs from a model and compare each one.
    Simulate(SimulateArgs),
    /// Growth of extremal distances with sequence length.
    Scan(ScanArgs),
    /// Evaluate the relatedness condition for a model.
    Condition(ConditionArgs),
}

#[derive(Args)]
struct CompareArgs {
    fasta_x: PathBuf,
    fasta_y: PathBuf,
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH.svg")]
    plot: Option<PathBuf>,
    #[arg(long, default_value = "ACGT")]
    alphabet: String,
    /// Maximum number of DP cells.
    #[arg(long, value_name = "CELLS")]
    cell_budget: Option<u64>,
}

#[derive(Args)]
struct CasestudyArgs {
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    #[arg(long)]
    check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Related,
    Independent,
}

#[derive(Args)]
struct SimulateArgs {
    model: PathBuf,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Mode::Related)]
    mode: Mode,
    /// Write CSV here instead of standard output.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    #[arg(long, value_name = "PATH.svg")]
    plot_first: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(required = true)]
    models: Vec<PathBuf>,
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    #[arg(long, default_value_t = 30)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Mode::Related)]
    mode: Mode,
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct ConditionArgs {
    model: PathBuf,
    #[arg(
        long,
        conflicts_with = "estimate",
        required_unless_present = "estimate"
    )]
    gamma_r: Option<f64>,
    /// Estimate the LCS ratio from the model itself.
    #[arg(long, requires = "n")]
    estimate: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 20)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeLimitExceeded { .. } => 3,
            Error::DegenerateLaw(_) | Error::DegenerateModel(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compare(a) => compare(a),
        Command::Casestudy(a) => casestudy::run(a.csv.as_deref(), a.check),
        Command::Simulate(a) => simulate(a),
        Command::Scan(a) => scan(a),
        Command::Condition(a) => condition(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    }
}

fn first_record(path: &Path, alphabet: &Alphabet) -> Result<homology::NucleotideSequence, Failure> {
    let text = read_file(path)?;
    let mut records = homology::parse_fasta(&text, alphabet).map_err(in_file(path))?;
    Ok(records.swap_remove(0))
}

fn compare(a: CompareArgs) -> CmdResult {
    let alphabet = Alphabet::new(&a.alphabet)?;
    let x = first_record(&a.fasta_x, &alphabet)?;
    let y = first_record(&a.fasta_y, &alphabet)?;
    let budget = a.cell_budget.map(homology::CellBudget).unwrap_or_default();
    let cmp = homology::compare_detailed(&x, &y, budget)?;
    if a.json {
        println!("{}", output::report_json(&cmp.report));
    } else {
        print!("{}", output::report_text(&cmp.report));
    }
    if let Some(path) = a.plot {
        let options = PlotOptions {
            title: Some(format!("{} vs {}", x.id(), y.id())),
            ..Default::default()
        };
        write_file(
            &path,
            &homology::render_svg(&cmp.pair, x.len(), y.len(), &options),
        )?;
    }
    Ok(0)
}

struct LoadedModel {
    name: String,
    file: ModelFile,
}

fn load_model(path: &Path) -> Result<LoadedModel, Failure> {
    let file = ModelFile::from_json(&read_file(path)?).map_err(in_file(path))?;
    // validate eagerly so field errors surface before any work
    file.to_params::<f64>(1, 0).map_err(in_file(path))?;
    let name = file.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map_or_else(|| "model".into(), |s| s.to_string_lossy().into_owned())
    });
    Ok(LoadedModel { name, file })
}

fn generator(model: &LoadedModel, mode: Mode) -> Result<PairGeneratorF64, Failure> {
    let params: GenerativeParamsF64 = model.file.to_params(1, 0)?;
    Ok(match mode {
        Mode::Related => PairGeneratorF64::Related(params),
        Mode::Independent => PairGeneratorF64::independent_like(&params),
    })
}

fn simulate(a: SimulateArgs) -> CmdResult {
    if a.n == 0 || a.reps == 0 {
        return Err(Failure::input("--n and --reps must be at least 1"));
    }
    let model = load_model(&a.model)?;
    let gen = generator(&model, a.mode)?;
    let rows = output::simulate_rows(&model.name, &gen, a.n, a.reps, a.seed)?;
    let csv = output::to_csv(&rows)?;
    match &a.csv {
        Some(path) => write_file(path, &csv)?,
        None => print!("{csv}"),
    }
    if let Some(path) = a.plot_first {
        let first = &rows[0];
        let pair = gen.generate(a.n, first.seed)?;
        let ext = homology::extremal_pair(pair.x.letters(), pair.y.letters())?;
        let options = PlotOptions {
            title: Some(format!("{} rep 0, n = {}", model.name, a.n)),
            match_markers: a.n <= 2000,
            ..Default::default()
        };
        write_file(
            &path,
            &homology::render_svg(&ext, pair.x.len(), pair.y.len(), &options),
        )?;
    }
    Ok(0)
}

fn scan(a: ScanArgs) -> CmdResult {
    let mut models = Vec::new();
    for path in &a.models {
        let m = load_model(path)?;
        let g = generator(&m, a.mode)?;
        models.push((m.name, g));
    }
    let result = homology::scaling_experiment(&models, &a.n_list, a.reps, a.seed)?;
    let csv = output::to_csv(&output::scan_rows(&result))?;
    let summary = output::scan_summary(&result, &a.n_list);
    match &a.csv {
        Some(path) => {
            write_file(path, &csv)?;
            print!("{summary}");
        }
        None => print!("{csv}\n{summary}"),
    }
    Ok(0)
}

fn condition(a: ConditionArgs) -> CmdResult {
    if let Some(g) = a.gamma_r {
        if !(g > 0.0 && g <= 1.0) {
            return Err(Failure::input(format!("--gamma-r {g} is outside (0, 1]")));
        }
    }
    let model = load_model(&a.model)?;
    let params: GenerativeParamsF64 = model.file.to_params(1, 0)?;
    let report = match a.gamma_r {
        Some(g) => condition_lhs(&joint_letter_law(&params)?, g)?,
        None => {
            let n = a.n.expect("clap enforces --n with --estimate");
            condition_plugin(&params, n, a.reps, a.seed)?
        }
    };
    print!("{}", output::condition_text(&model.name, &report));
    Ok(0)
}
