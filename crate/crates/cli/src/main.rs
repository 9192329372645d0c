use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use curve_invariants::curves::{degenerate_fixtures, make_standard_curve, random_generic_curve, Family};
use curve_invariants::immersion::genericity_violations;
use curve_invariants::moves::{builtin_pairs, verify_modification, ModificationPair};
use curve_invariants::selftest::{run_selftest, standard_fixtures, SelftestOptions};
use curve_invariants::svg::{render_svg, Labels};
use curve_invariants::{analyze_curve, AnalyzeOptions, CurveFile, Error, Report, Tolerances};

const EXIT_FAILURE: u8 = 1;
const EXIT_GENERICITY: u8 = 2;
const EXIT_CROSS_CHECK: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(name = "curvinv", version, about = "Invariants of generic plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one curve file.
    Analyze(AnalyzeArgs),
    /// Generate curve files.
    #[command(subcommand)]
    Corpus(CorpusCommand),
    /// Check the invariant jumps of a modification pair.
    VerifyMove {
        pair: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Run the property suite on standard and random curves.
    Selftest {
        #[arg(long, default_value_t = 20)]
        curves: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        tol: TolArgs,
    },
}

#[derive(Args)]
struct TolArgs {
    #[arg(long, default_value_t = Tolerances::default().eps_intersect)]
    eps_intersect: f64,
    #[arg(long, default_value_t = Tolerances::default().eps_angle)]
    eps_angle: f64,
    #[arg(long, default_value_t = Tolerances::default().eps_coeff)]
    eps_coeff: f64,
}

impl TolArgs {
    fn get(&self) -> Result<Tolerances, Error> {
        let t = Tolerances { eps_intersect: self.eps_intersect, eps_angle: self.eps_angle, eps_coeff: self.eps_coeff };
        t.validate()?;
        Ok(t)
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    curve: PathBuf,
    /// Move the base point to an exterior arc if needed.
    #[arg(long)]
    rebase_exterior: bool,
    #[arg(long, default_value_t = curve_invariants::analysis::DEFAULT_TAYLOR_DEPTH)]
    taylor_depth: usize,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Comma separated subset of indices,weights,alpha,circles.
    #[arg(long, default_value = "indices,weights,alpha,circles")]
    labels: Labels,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    tol: TolArgs,
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Circle, figure-eight or flower.
    Make {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        param: usize,
        #[arg(long, default_value_t = 64)]
        resolution: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Random generic curve with a given number of double points.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        doubles: usize,
        #[arg(long, default_value_t = 2000)]
        attempts: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the standard, degenerate and modification fixtures into a directory.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors must not collide with the genericity exit code.
            return ExitCode::from(if e.exit_code() == 0 { 0 } else { EXIT_FAILURE });
        }
    };
    let result = match cli.command {
        Command::Analyze(args) => analyze(&args),
        Command::Corpus(cmd) => corpus(cmd),
        Command::VerifyMove { pair, json, tol } => verify_move(&pair, json, &tol),
        Command::Selftest { curves, seed, json, tol } => selftest(curves, seed, json, &tol),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error [{}]: {e}", e.kind());
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        e if e.is_genericity_violation() => EXIT_GENERICITY,
        Error::CrossCheckFailed(_) | Error::NonzeroRemainder(_) | Error::HalfExponent { .. } => EXIT_CROSS_CHECK,
        Error::ExpectationMismatch(_) => EXIT_MISMATCH,
        _ => EXIT_FAILURE,
    }
}

fn report_violations(curve: &curve_invariants::PolygonalCurve, tol: &Tolerances, first: &Error) {
    let mut list = genericity_violations(curve, tol);
    if list.is_empty() {
        eprintln!("genericity violation [{}]: {first}", first.kind());
        return;
    }
    list.sort_by_key(|e| e.to_string());
    eprintln!("{} genericity violation(s):", list.len());
    for e in &list {
        eprintln!("  [{}] {e}", e.kind());
    }
}

fn analyze(args: &AnalyzeArgs) -> Result<u8, Error> {
    let tolerances = args.tol.get()?;
    let curve = CurveFile::load(&args.curve)?.to_curve()?;
    let opts = AnalyzeOptions { rebase: args.rebase_exterior, taylor_depth: args.taylor_depth, tolerances };
    let analysis = match analyze_curve(&curve, &opts) {
        Ok(a) => a,
        Err(e) if e.is_genericity_violation() => {
            report_violations(&curve, &tolerances, &e);
            return Ok(EXIT_GENERICITY);
        }
        Err(e) => return Err(e),
    };
    let report = Report::from_analysis(&analysis);
    if let Some(path) = &args.report {
        fs::write(path, report.to_json() + "\n")?;
    }
    if let Some(path) = &args.svg {
        let svg = render_svg(&analysis.immersion, Some(&analysis.smoothed), Some(&analysis.weights), args.labels);
        fs::write(path, svg)?;
    }
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    let failed = report.invariants.failed_checks();
    if failed.is_empty() {
        Ok(0)
    } else {
        eprintln!("failed checks: {}", failed.join(", "));
        Ok(EXIT_CROSS_CHECK)
    }
}

fn write_fixtures(dir: &Path) -> Result<(), Error> {
    fs::create_dir_all(dir.join("moves"))?;
    for (name, file) in standard_fixtures() {
        file.save(&dir.join(format!("{name}.json")))?;
    }
    for (name, file) in degenerate_fixtures() {
        file.save(&dir.join(format!("{name}.json")))?;
    }
    for (name, pair) in builtin_pairs()? {
        fs::write(dir.join("moves").join(format!("{name}.json")), pair.to_json() + "\n")?;
    }
    Ok(())
}

fn corpus(cmd: CorpusCommand) -> Result<u8, Error> {
    match cmd {
        CorpusCommand::Make { family, param, resolution, out } => {
            make_standard_curve(family, param, resolution)?.save(&out)?;
        }
        CorpusCommand::Random { seed, doubles, attempts, out } => {
            random_generic_curve(seed, doubles, attempts)?.save(&out)?;
        }
        CorpusCommand::Fixtures { out } => write_fixtures(&out)?,
    }
    Ok(0)
}

fn verify_move(path: &Path, json: bool, tol: &TolArgs) -> Result<u8, Error> {
    let tolerances = tol.get()?;
    let pair = ModificationPair::load(path)?;
    let report = match verify_modification(&pair, &tolerances) {
        Ok(r) => r,
        Err(e) if e.is_genericity_violation() => {
            for (side, file) in [("before", &pair.before), ("after", &pair.after)] {
                let curve = file.to_curve()?;
                for v in genericity_violations(&curve, &tolerances) {
                    eprintln!("  {side}: [{}] {v}", v.kind());
                }
            }
            eprintln!("error [{}]: {e}", e.kind());
            return Ok(EXIT_GENERICITY);
        }
        Err(e) => return Err(e),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("move report serializes"));
    } else {
        print!("{}", report.to_text());
    }
    Ok(if !report.cross_check_failures.is_empty() {
        EXIT_CROSS_CHECK
    } else if !report.mismatches.is_empty() || !report.pass {
        EXIT_MISMATCH
    } else {
        0
    })
}

fn selftest(curves: usize, seed: u64, json: bool, tol: &TolArgs) -> Result<u8, Error> {
    let opts = SelftestOptions { curves, seed, tolerances: tol.get()? };
    let summary = run_selftest(&opts)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
    } else {
        print!("{}", summary.to_text());
    }
    Ok(if summary.curves.iter().any(|c| !c.pass()) || summary.moves.iter().any(|m| m.cross_check_failed) {
        EXIT_CROSS_CHECK
    } else if summary.moves.iter().any(|m| !m.pass) {
        EXIT_MISMATCH
    } else {
        0
    })
}
