//! `genus2`: reduction types of genus-2 curves and their quadratic twists
//! over the p-adic rationals.

mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use genus2_core::report::{classification_record, invariants_record, twist_record};
use genus2_core::twist::{Char3NormalForm, Char5NormalForm};
use genus2_core::verify::{self, SampleOutcome};
use genus2_core::{
    classify_curve, run_twist, Error, LocalContext, Rat, SexticForm, TwistQuery,
};

use input::{parse_coeffs, parse_rational, read_records, InputRecord};

#[derive(Parser)]
#[command(
    name = "genus2",
    about = "Stable models, reduction types, and quadratic twists of genus-2 curves y² = P(x) over ℚ with the p-adic valuation",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CurveArgs {
    /// Odd residue characteristic p.
    #[arg(long)]
    prime: u64,
    /// Coefficients a0,a1,...,a6 of P(x) = a0·x⁶ + ... + a6 (exact
    /// integers or fractions like 3/4).
    #[arg(long, value_name = "a0,..,a6")]
    coeffs: String,
    /// Record identifier echoed into the JSON output.
    #[arg(long, default_value = "curve")]
    id: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print all invariants of the form with their valuations.
    Invariants(CurveArgs),
    /// Classify the stable fiber, degrees, ramification data and the
    /// reduction type of the minimal regular model.
    Classify {
        #[command(flatten)]
        curve: CurveArgs,
        /// Whether the component carrying ω̄ is smooth (needed only by the
        /// one-smooth-one-singular shape with n = 2 and d odd).
        #[arg(long)]
        e1_smooth: Option<bool>,
    },
    /// Full twist report: the reduction types of X and of the quadratic
    /// twist X^χ by D.
    Twist {
        #[command(flatten)]
        curve: CurveArgs,
        /// Twisting scalar D (exact rational, e.g. 7 or 7/3).
        #[arg(long)]
        d: String,
        #[arg(long)]
        e1_smooth: Option<bool>,
        /// Wild char-3 normal-form data "a0;c1,..,c6".
        #[arg(long, value_name = "a0;c1,..,c6")]
        wild_c: Option<String>,
        /// Wild char-5 normal-form coefficients b0,..,b6.
        #[arg(long, value_name = "b0,..,b6")]
        wild_b: Option<String>,
    },
    /// Cross-check the table route against direct classification of D·P,
    /// over a file of curves or a seeded random sweep.
    Verify {
        /// Input file (CSV or JSON lines); when absent, a random sweep runs.
        #[arg(long)]
        file: Option<String>,
        /// Samples per prime for the random sweep.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Primes for the random sweep.
        #[arg(long, value_delimiter = ',', default_values_t = vec![7u64, 11, 13])]
        primes: Vec<u64>,
        /// Exponent e of the sweep's twisting scalar D = p^e.
        #[arg(long, default_value_t = 1)]
        d_exp: u32,
        /// Seed (defaults to $GENUS2_SEED, then 1).
        #[arg(long)]
        seed: Option<u64>,
        /// Emit one JSON line per sample in addition to the summary.
        #[arg(long)]
        emit_samples: bool,
    },
    /// Run the table audits: twist involution, row disjointness, and the
    /// characteristic-5 wild/tame concordance.
    AuditTables,
    /// Process a CSV or JSON-lines file of curves; JSON-lines out.
    Batch {
        /// Input file: CSV columns id,a0..a6,p[,D] or JSON lines.
        #[arg(long)]
        input: String,
        /// Output path (stdout when absent).
        #[arg(long)]
        output: Option<String>,
        /// Bounded worker count for concurrent processing.
        #[arg(long, default_value_t = 4)]
        workers: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// 1 for input errors, 2 for classification errors.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidInput(_) | Error::SymbolParse(_) => 1,
        _ => 2,
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Invariants(args) => {
            let (form, ctx) = curve_of(&args)?;
            let record = invariants_record(&args.id, &form, &ctx);
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { curve, e1_smooth } => {
            let (form, ctx) = curve_of(&curve)?;
            let cls = classify_curve(&form, &ctx, e1_smooth)?;
            let record = classification_record(&curve.id, &form, &ctx, &cls);
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Twist {
            curve,
            d,
            e1_smooth,
            wild_c,
            wild_b,
        } => {
            let (form, ctx) = curve_of(&curve)?;
            let d = parse_rational(&d)?;
            let mut query = TwistQuery::new(form.clone(), d.clone(), ctx);
            query.e1_smooth = e1_smooth;
            query.wild_char3 = wild_c.as_deref().map(parse_wild_c3).transpose()?;
            query.wild_char5 = wild_b.as_deref().map(parse_wild_b).transpose()?;
            let report = run_twist(&query)?;
            let record = twist_record(&curve.id, &form, &d, &ctx, &report);
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            file,
            samples,
            primes,
            d_exp,
            seed,
            emit_samples,
        } => verify_command(file, samples, &primes, d_exp, seed, emit_samples),
        Command::AuditTables => audit_command(),
        Command::Batch {
            input,
            output,
            workers,
        } => batch_command(&input, output.as_deref(), workers),
    }
}

fn curve_of(args: &CurveArgs) -> Result<(SexticForm, LocalContext), Error> {
    let ctx = LocalContext::new(args.prime)?;
    let form = parse_coeffs(&args.coeffs)?;
    Ok((form, ctx))
}

fn parse_wild_c3(s: &str) -> Result<Char3NormalForm, Error> {
    let (a0, cs) = s
        .split_once(';')
        .ok_or_else(|| Error::InvalidInput("wild-c expects \"a0;c1,..,c6\"".into()))?;
    let a0 = parse_rational(a0)?;
    let parts: Vec<Rat> = cs
        .split(',')
        .map(|p| parse_rational(p.trim()))
        .collect::<Result<_, _>>()?;
    let c: [Rat; 6] = parts
        .try_into()
        .map_err(|_| Error::InvalidInput("wild-c expects six coefficients c1..c6".into()))?;
    Ok(Char3NormalForm { a0, c })
}

fn parse_wild_b(s: &str) -> Result<Char5NormalForm, Error> {
    let parts: Vec<Rat> = s
        .split(',')
        .map(|p| parse_rational(p.trim()))
        .collect::<Result<_, _>>()?;
    let b: [Rat; 7] = parts
        .try_into()
        .map_err(|_| Error::InvalidInput("wild-b expects seven coefficients b0..b6".into()))?;
    Ok(Char5NormalForm { b })
}

fn verify_command(
    file: Option<String>,
    samples: usize,
    primes: &[u64],
    d_exp: u32,
    seed: Option<u64>,
    emit_samples: bool,
) -> Result<ExitCode, Error> {
    if let Some(path) = file {
        let records = read_records(&path)?;
        let mut agreed = 0usize;
        let mut disagreed = 0usize;
        let mut other = 0usize;
        for rec in &records {
            let ctx = LocalContext::new(rec.p)?;
            let d = rec
                .d
                .clone()
                .ok_or_else(|| Error::InvalidInput(format!("record {}: D required", rec.id)))?;
            let sample = verify::cross_check(&rec.form, &d, &ctx);
            if emit_samples {
                println!("{}", serde_json::to_string(&sample).unwrap());
            }
            match &sample.outcome {
                SampleOutcome::Compared { agree: true, .. } => agreed += 1,
                SampleOutcome::Compared { agree: false, .. } => {
                    disagreed += 1;
                    eprintln!("DISAGREEMENT on {}: {:?}", rec.id, sample.outcome);
                }
                _ => other += 1,
            }
        }
        eprintln!("verify: {agreed} agreed, {disagreed} disagreed, {other} skipped");
        return Ok(if disagreed == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(2)
        });
    }

    let seed = seed
        .or_else(|| {
            std::env::var("GENUS2_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(1);
    let report = verify::sweep(seed, samples, primes, d_exp);
    if emit_samples {
        for sample in &report.disagreements {
            println!("{}", serde_json::to_string(sample).unwrap());
        }
    }
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    eprintln!(
        "verify: seed={} total={} compared={} agreed={} disagreed={} route-mismatch={} skipped={} non-smooth={:.1}%",
        report.seed,
        report.total,
        report.compared,
        report.agreed,
        report.disagreed,
        report.route_mismatch,
        report.skipped,
        100.0 * report.non_smooth_fraction()
    );
    eprintln!("shape counts:");
    for (shape, count) in &report.shape_counts {
        eprintln!("  {shape:<28} {count}");
    }
    Ok(if report.agreement_is_total() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn audit_command() -> Result<ExitCode, Error> {
    let mut clean = true;
    let involution = verify::table_involution_audit();
    let disjoint = verify::row_disjointness_audit();
    let concordance = verify::wild_tame_concordance_char5();
    for (name, violations) in [
        ("involution", &involution),
        ("disjointness", &disjoint),
        ("char5-concordance", &concordance),
    ] {
        if violations.is_empty() {
            println!("audit {name}: ok");
        } else {
            clean = false;
            println!("audit {name}: {} violation(s)", violations.len());
            for v in violations {
                println!("  {v}");
            }
        }
    }
    Ok(if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn process_record(rec: &InputRecord) -> (serde_json::Value, bool) {
    let ctx = match LocalContext::new(rec.p) {
        Ok(ctx) => ctx,
        Err(err) => {
            let record = genus2_core::report::error_record(&rec.id, Some(&rec.form), None, &err);
            return (serde_json::to_value(record).unwrap(), false);
        }
    };
    match &rec.d {
        Some(d) => {
            let query = TwistQuery::new(rec.form.clone(), d.clone(), ctx);
            match run_twist(&query) {
                Ok(report) => {
                    let record = twist_record(&rec.id, &rec.form, d, &ctx, &report);
                    (serde_json::to_value(record).unwrap(), true)
                }
                Err(err) => {
                    let record =
                        genus2_core::report::error_record(&rec.id, Some(&rec.form), Some(&ctx), &err);
                    (serde_json::to_value(record).unwrap(), false)
                }
            }
        }
        None => match classify_curve(&rec.form, &ctx, None) {
            Ok(cls) => {
                let record = classification_record(&rec.id, &rec.form, &ctx, &cls);
                (serde_json::to_value(record).unwrap(), true)
            }
            Err(err) => {
                let record =
                    genus2_core::report::error_record(&rec.id, Some(&rec.form), Some(&ctx), &err);
                (serde_json::to_value(record).unwrap(), false)
            }
        },
    }
}

fn batch_command(input: &str, output: Option<&str>, workers: usize) -> Result<ExitCode, Error> {
    let records = read_records(input)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    let results: Vec<(serde_json::Value, bool)> =
        pool.install(|| records.par_iter().map(process_record).collect());

    let mut sink: Box<dyn Write> = match output {
        Some(path) => Box::new(
            std::fs::File::create(path)
                .map_err(|e| Error::InvalidInput(format!("cannot create {path}: {e}")))?,
        ),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut all_ok = true;
    for (value, ok) in &results {
        writeln!(sink, "{value}").map_err(|e| Error::InvalidInput(format!("write: {e}")))?;
        all_ok &= ok;
    }
    eprintln!(
        "batch: {} record(s), {} classified",
        results.len(),
        results.iter().filter(|(_, ok)| *ok).count()
    );
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}
