//! `schurdiv`: remainders as Schur determinants, generalized Giambelli
//! identities, and a randomized exact verifier.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain error (pole, degeneracy).

mod latex;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use schur_division::companion::{
    double_companion, giambelli_block, giambelli_general, houmu_ratio, ColumnRange, RecurrentSeq,
};
use schur_division::division::{euclid_comparison, remainder_laurent, remainder_x_pow};
use schur_division::laurent::remainder_via_interpolation;
use schur_division::parse;
use schur_division::schur::{gschur, multi_schur, MultiSchurSpec};
use schur_division::verify::{run_verify, VerifyConfig, SUITES};
use schur_division::{Alphabet, DiffArgument, Error, IndexVector, LaurentPoly, Matrix, Rational};

#[derive(Parser, Debug)]
#[command(
    name = "schurdiv",
    version,
    about = "Exact Schur-determinant remainders and Giambelli identities"
)]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "latex")]
    json: bool,
    /// Emit a LaTeX determinant display instead of JSON.
    #[arg(long, global = true)]
    latex: bool,
    /// Seed for `verify`.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Random trials per suite for `verify`.
    #[arg(long, global = true, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Largest alphabet size drawn by `verify`.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=12))]
    nmax: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bialternant G_J(A) for any J in Z^n.
    Schur {
        #[arg(long = "J", value_parser = index_vector, allow_hyphen_values = true)]
        j: IndexVector,
        #[arg(long = "A", value_parser = alphabet, allow_hyphen_values = true)]
        a: Alphabet,
    },
    /// Multi-Schur determinant |S_{j_k - i_l + k - l}(col_k)|.
    Multischur(MultiSchurArgs),
    /// Remainder of x^K or of a Laurent polynomial modulo R(x, A).
    Remainder(RemainderArgs),
    /// Euclidean remainder sequence of S^m(x - B) by S^n(x - A), compared
    /// with the multi-Schur formulas.
    Euclid {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long = "A", value_parser = alphabet, allow_hyphen_values = true)]
        a: Alphabet,
        #[arg(long = "B", value_parser = alphabet, allow_hyphen_values = true)]
        b: Alphabet,
    },
    /// Columns kmin..kmax of the double companion matrix.
    Companion {
        #[arg(long = "A", value_parser = alphabet, allow_hyphen_values = true)]
        a: Alphabet,
        #[arg(long, value_parser = column_range, allow_hyphen_values = true)]
        cols: ColumnRange,
    },
    /// Hook determinant of G_J(A).
    Giambelli {
        #[arg(long = "J", value_parser = index_vector, allow_hyphen_values = true)]
        j: IndexVector,
        #[arg(long = "A", value_parser = alphabet, allow_hyphen_values = true)]
        a: Alphabet,
        /// Use the block form (J weakly increasing).
        #[arg(long)]
        block: bool,
        /// Include Frobenius hooks and per-entry labels.
        #[arg(long)]
        explain: bool,
    },
    /// Ratio of determinants of recurrent sequences.
    Houmu {
        #[arg(long = "A", value_parser = alphabet, allow_hyphen_values = true)]
        a: Alphabet,
        #[arg(long = "J", value_parser = index_vector, allow_hyphen_values = true)]
        j: IndexVector,
        /// Initial terms of one sequence; repeat once per sequence.
        #[arg(long, value_parser = sequence, allow_hyphen_values = true, required = true)]
        window: Vec<Vec<Rational>>,
        /// Index of the first window term.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        base: i64,
    },
    /// Randomized exact verification of every identity.
    Verify {
        /// Restrict to the named suite; repeatable.
        #[arg(long = "suite", value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suites: Vec<String>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-trial observations such as proportionality scalars.
        #[arg(long)]
        observations: bool,
    },
}

#[derive(Args, Debug)]
struct MultiSchurArgs {
    #[arg(long = "J", value_parser = index_vector, allow_hyphen_values = true)]
    j: IndexVector,
    /// Row shifts; zeros when omitted.
    #[arg(long = "I", value_parser = index_vector, allow_hyphen_values = true)]
    i: Option<IndexVector>,
    /// Argument of every column, e.g. "(1,2) - (x)".
    #[arg(long, value_parser = diff_argument, allow_hyphen_values = true, conflicts_with = "col", required_unless_present = "col")]
    arg: Option<DiffArgument>,
    /// Argument of one column; repeat once per column.
    #[arg(long, value_parser = diff_argument, allow_hyphen_values = true)]
    col: Vec<DiffArgument>,
}

#[derive(Args, Debug)]
struct RemainderArgs {
    #[arg(long = "A", value_parser = alphabet, allow_hyphen_values = true)]
    a: Alphabet,
    #[arg(
        long,
        allow_hyphen_values = true,
        conflicts_with = "laurent",
        required_unless_present = "laurent"
    )]
    power: Option<i64>,
    /// Laurent polynomial as JSON, e.g. {"-1":"3/2","1":"-1/2"}.
    #[arg(long, value_parser = laurent_json)]
    laurent: Option<LaurentPoly>,
}

fn index_vector(s: &str) -> Result<IndexVector, String> {
    parse::parse_index_vector(s).map_err(|e| e.to_string())
}

fn alphabet(s: &str) -> Result<Alphabet, String> {
    parse::parse_rational_list(s).map_err(|e| e.to_string())
}

fn sequence(s: &str) -> Result<Vec<Rational>, String> {
    parse::parse_rational_sequence(s).map_err(|e| e.to_string())
}

fn diff_argument(s: &str) -> Result<DiffArgument, String> {
    parse::parse_diff_argument(s).map_err(|e| e.to_string())
}

fn column_range(s: &str) -> Result<ColumnRange, String> {
    parse::parse_column_range(s).map_err(|e| e.to_string())
}

fn laurent_json(s: &str) -> Result<LaurentPoly, String> {
    parse::parse_laurent_json(s).map_err(|e| e.to_string())
}

enum Outcome {
    Ok,
    VerificationFailed,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Kernel(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Kernel(e)
    }
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Usage(_) => 2,
        CliError::Kernel(k) => match k {
            Error::Parse { .. } | Error::Config(_) | Error::Dimension(_) => 2,
            Error::Inconsistent(_) => 1,
            Error::Domain(_)
            | Error::Pole(_)
            | Error::Degenerate(_)
            | Error::Singular
            | Error::DivisionByZero => 3,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Kernel(k) => eprintln!("error: {k}"),
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn say(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn emit(value: &Value) {
    say(&serde_json::to_string_pretty(value).expect("serializing output"));
}

fn rows<T: Serialize + Clone>(m: &Matrix<T>) -> Value {
    serde_json::to_value(m.to_rows()).expect("serializing a matrix")
}

fn no_latex(cli: &Cli, what: &str) -> Result<(), CliError> {
    if cli.latex {
        return Err(CliError::Usage(format!("{what} has no LaTeX form")));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Schur { j, a } => {
            let value = gschur(j, a)?;
            if cli.latex {
                say(&latex::bialternant(j, a, &value));
            } else {
                emit(&json!({"J": j, "A": a, "value": value}));
            }
        }
        Command::Multischur(args) => {
            let columns = match &args.arg {
                Some(arg) => vec![arg.clone(); args.j.len()],
                None => args.col.clone(),
            };
            let i = args
                .i
                .clone()
                .unwrap_or_else(|| IndexVector::zeros(args.j.len()));
            let spec = MultiSchurSpec::skew(args.j.clone(), i, columns);
            let matrix = spec.matrix()?;
            let value = multi_schur(&spec)?;
            let n = args.j.len();
            let labels = Matrix::from_fn(n, n, |l, k| {
                let idx = spec.j[k] - spec.i[l] + k as i64 - l as i64;
                format!("S_{{{idx}}}({})", spec.columns[k])
            });
            if cli.latex {
                say(&latex::multi_schur(&labels, &value));
            } else {
                emit(&json!({
                    "J": spec.j, "I": spec.i,
                    "columns": spec.columns.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "labels": rows(&labels), "matrix": rows(&matrix), "value": value,
                }));
            }
        }
        Command::Remainder(args) => {
            no_latex(cli, "remainder")?;
            let (input, rem) = match (args.power, &args.laurent) {
                (Some(k), _) => (LaurentPoly::x_pow(k), remainder_x_pow(k, &args.a)?),
                (None, Some(f)) => (f.clone(), remainder_laurent(f, &args.a)?),
                (None, None) => unreachable!("clap requires one input"),
            };
            let oracle = remainder_via_interpolation(&input, &args.a)?;
            if oracle != rem {
                return Err(Error::Inconsistent(format!(
                    "closed form {rem} disagrees with interpolation {oracle}"
                ))
                .into());
            }
            emit(&json!({"A": args.a, "input": input, "remainder": rem}));
        }
        Command::Euclid { m, a, b } => {
            no_latex(cli, "euclid")?;
            let (trace, table) = euclid_comparison(*m, a, b)?;
            emit(&json!({"m": m, "A": a, "B": b, "trace": trace, "comparison": table}));
        }
        Command::Companion { a, cols } => {
            no_latex(cli, "companion")?;
            let c = double_companion(a, *cols)?;
            emit(&json!({
                "A": a,
                "columns": cols.iter().collect::<Vec<_>>(),
                "matrix": rows(&c),
            }));
        }
        Command::Giambelli {
            j,
            a,
            block,
            explain,
        } => {
            let bialt = gschur(j, a)?;
            if *block {
                let (blocks, value) = giambelli_block(j, a)?;
                check_against(&value, &bialt)?;
                if cli.latex {
                    say(&latex::giambelli_block(j, &blocks, &value));
                    return Ok(Outcome::Ok);
                }
                let labels = blocks.labels.map(ToString::to_string);
                let mut out = json!({
                    "J": j, "A": a, "value": value, "bialternant": bialt,
                    "matrix": rows(&blocks.assembled()), "labels": rows(&labels),
                    "blocks": {"P": rows(&blocks.p), "Q": rows(&blocks.q), "M": rows(&blocks.m), "N": rows(&blocks.n)},
                });
                if *explain {
                    out["explain"] = json!({
                        "negative_hooks": blocks.negative_hooks.to_string(),
                        "nonnegative_hooks": blocks.nonnegative_hooks.to_string(),
                        "entries": explain_entries(&labels, &blocks.labels.map(|l| format!("{:?}", l.block))),
                    });
                }
                emit(&out);
            } else {
                let (matrix, value) = giambelli_general(j, a)?;
                check_against(&value, &bialt)?;
                let n = j.len();
                let labels = Matrix::from_fn(n, n, |l, k| {
                    let mut parts = vec![0; n];
                    parts[l] = j[k] + k as i64 - l as i64;
                    format!("G_{}(A)", IndexVector::new(parts))
                });
                if cli.latex {
                    let tex = labels.map(|s| {
                        s.replacen("G_", "\\mathfrak{G}_{", 1)
                            .replacen("(A)", "}(A)", 1)
                    });
                    say(&latex::giambelli_general(j, &tex, &value));
                    return Ok(Outcome::Ok);
                }
                let mut out = json!({
                    "J": j, "A": a, "value": value, "bialternant": bialt,
                    "matrix": rows(&matrix), "labels": rows(&labels),
                });
                if *explain {
                    out["explain"] = json!({
                        "entries": explain_entries(&labels, &labels.map(|_| "general".to_string())),
                    });
                }
                emit(&out);
            }
        }
        Command::Houmu { a, j, window, base } => {
            no_latex(cli, "houmu")?;
            let seqs = window
                .iter()
                .map(|w| RecurrentSeq::new(w.clone(), *base, a.clone()))
                .collect::<schur_division::Result<Vec<_>>>()?;
            let ratio = houmu_ratio(&seqs, j)?;
            let bialt = gschur(j, a)?;
            check_against(&ratio, &bialt)?;
            emit(&json!({"A": a, "J": j, "base": base, "ratio": ratio, "bialternant": bialt}));
        }
        Command::Verify {
            suites,
            out,
            observations,
        } => {
            no_latex(cli, "verify")?;
            let config = VerifyConfig {
                trials: cli.trials as usize,
                seed: cli.seed,
                nmax: cli.nmax as usize,
                suites: suites.clone(),
                record_observations: *observations,
            };
            let report = run_verify(&config)?;
            for s in &report.suites {
                eprintln!(
                    "{:<28} {:>6} trials  {}",
                    s.name,
                    s.trials,
                    if s.passed() {
                        "ok".to_string()
                    } else {
                        format!("{} FAILED", s.failures.len())
                    }
                );
            }
            eprintln!("wall time: {:.2?}", report.wall_time);
            let text = report.to_json();
            match out {
                Some(path) => std::fs::write(path, text + "\n")
                    .map_err(|e| CliError::Usage(format!("writing {}: {e}", path.display())))?,
                None => say(&text),
            }
            if !report.passed() {
                return Ok(Outcome::VerificationFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn check_against(value: &Rational, bialt: &Rational) -> Result<(), CliError> {
    if value != bialt {
        return Err(
            Error::Inconsistent(format!("determinant {value} but bialternant {bialt}")).into(),
        );
    }
    Ok(())
}

fn explain_entries(labels: &Matrix<String>, blocks: &Matrix<String>) -> Vec<Value> {
    let mut out = Vec::new();
    for r in 0..labels.rows() {
        for c in 0..labels.cols() {
            out.push(json!({"row": r + 1, "col": c + 1, "block": blocks[(r, c)], "label": labels[(r, c)]}));
        }
    }
    out
}
