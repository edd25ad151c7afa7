//! The `esym` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a refutation is found, 2 on
//! usage, parse or parameter errors. Reports go to stdout, diagnostics to
//! stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::esym::{elementary, EsymSpec};
use crate::exec::Exec;
use crate::groups::enumerate_group;
use crate::parse::{parse_matrix_json, parse_vector};
use crate::report::Report;
use crate::stabilizer::{
    decompose_stabilizer, is_stabilizer, mpb_invariance_check_with, product_stabilizer_check_with,
    rank_lemma_check, rank_lemma_grid, verify_theorem1_with,
};
use crate::weights::{enumerate_ssyt, verify_theorem_group};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "esym",
    version,
    about = "Exact checks on the stabilizer of elementary symmetric polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Run verification sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Params {
    /// Number of variables.
    #[arg(long)]
    n: usize,
    /// Degree.
    #[arg(long)]
    r: usize,
}

#[derive(Debug, Args)]
struct Randomized {
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print e_r in n variables.
    Esym(Params),
    /// Test whether a matrix stabilizes e_r.
    CheckStab {
        #[command(flatten)]
        params: Params,
        /// JSON array of rows of scalar strings.
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Write a stabilizer as omega times a permutation matrix.
    Decompose {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// List the n! * r elements of S_n x Z_r.
    EnumStab(Params),
    /// Exhaustive membership plus seeded random falsification.
    VerifyThm1 {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        random: Randomized,
    },
    /// Degree of e_r along lines versus the number of nonzero entries.
    RankLemma {
        #[command(flatten)]
        params: Params,
        /// Comma-separated scalars.
        #[arg(
            long,
            required_unless_present = "grid",
            conflicts_with = "grid",
            allow_hyphen_values = true
        )]
        a: Option<String>,
        /// Check every vector in {-B..B}^n.
        #[arg(long, value_name = "B")]
        grid: Option<u32>,
    },
    /// S_n x Z_r also stabilizes e_1 * e_{r-1}.
    ProductStab(Params),
    /// Invariance of the sum of principal r-minors.
    MpbCheck {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        random: Randomized,
    },
    /// Lattice spanned by the weights versus {v : sum(v) = 0 mod r}.
    LatticeVerify(Params),
    /// Enumerate semistandard tableaux.
    Tableaux {
        /// Comma-separated partition, e.g. 2,1.
        #[arg(long, value_delimiter = ',')]
        shape: Vec<usize>,
        #[arg(long)]
        max_entry: usize,
    },
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match dispatch(&cli.command, exec) {
        Ok(outcome) => {
            let written = match cli.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("valid JSON")
                ),
                Format::Text => writeln!(out, "{}", outcome.text),
            };
            if written.is_err() {
                return 2;
            }
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Outcome {
    passed: bool,
    json: Value,
    text: String,
}

impl Outcome {
    fn report(report: Report) -> Self {
        Outcome {
            passed: report.passed(),
            json: serde_json::to_value(&report).expect("report serializes"),
            text: report.to_string(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Algebra(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn read_matrix(path: &Path, n: usize) -> std::result::Result<crate::SquareMatrix, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    let m = parse_matrix_json(&text)?;
    if m.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.dim(),
        }
        .into());
    }
    Ok(m)
}

fn spec(p: &Params) -> Result<EsymSpec> {
    EsymSpec::new(p.n, p.r)
}

fn dispatch(command: &Command, exec: Exec) -> std::result::Result<Outcome, CliError> {
    Ok(match command {
        Command::Esym(p) => {
            let e = elementary(spec(p)?);
            Outcome {
                passed: true,
                json: json!({"n": p.n, "r": p.r, "terms": e.num_terms(), "polynomial": e.to_string()}),
                text: e.to_string(),
            }
        }
        Command::CheckStab { params, matrix } => {
            let e = elementary(spec(params)?);
            let g = read_matrix(matrix, params.n)?;
            let ok = is_stabilizer(&g, &e)?;
            Outcome {
                passed: ok,
                json: json!({"n": params.n, "r": params.r, "stabilizer": ok}),
                text: ok.to_string(),
            }
        }
        Command::Decompose { params, matrix } => {
            let sp = spec(params)?;
            let g = read_matrix(matrix, params.n)?;
            match decompose_stabilizer(&g, sp) {
                Ok(d) => {
                    let el = d.to_element();
                    Outcome {
                        passed: true,
                        json: json!({
                            "n": params.n,
                            "r": params.r,
                            "stabilizer": true,
                            "perm": d.perm().one_based(),
                            "omega": d.omega().to_string(),
                            "k": el.k(),
                        }),
                        text: format!("perm: {}\nomega: {}", d.perm(), d.omega()),
                    }
                }
                Err(e @ (Error::NotStabilizer | Error::NotMonomial(_))) => Outcome {
                    passed: false,
                    json: json!({"n": params.n, "r": params.r, "stabilizer": false, "reason": e.to_string()}),
                    text: format!("not decomposable: {e}"),
                },
                Err(e) => return Err(e.into()),
            }
        }
        Command::EnumStab(p) => {
            spec(p)?;
            let group = enumerate_group(p.n, p.r as u32);
            let mut text: Vec<String> = group.iter().map(ToString::to_string).collect();
            text.push(format!("{} elements", group.len()));
            Outcome {
                passed: true,
                json: json!({"n": p.n, "r": p.r, "order": group.len(), "elements": group}),
                text: text.join("\n"),
            }
        }
        Command::VerifyThm1 { params, random } => Outcome::report(verify_theorem1_with(
            params.n,
            params.r,
            random.trials,
            random.seed,
            exec,
        )?),
        Command::RankLemma { params, a, grid } => {
            let sp = spec(params)?;
            match (a, grid) {
                (_, Some(bound)) => Outcome::report(rank_lemma_grid(sp, *bound, exec)?),
                (Some(a), None) => {
                    let rep = rank_lemma_check(sp, &parse_vector(a)?)?;
                    let mut text = format!(
                        "rho(a) = {}\ndegree condition: {}",
                        rep.rho_value, rep.degree_condition
                    );
                    if let Some(b) = &rep.witness_b {
                        let parts: Vec<String> = b.iter().map(ToString::to_string).collect();
                        text.push_str(&format!("\nwitness b: {}", parts.join(",")));
                    }
                    Outcome {
                        passed: rep.consistent(),
                        json: rep.to_json(),
                        text,
                    }
                }
                (None, None) => unreachable!("clap requires --a or --grid"),
            }
        }
        Command::ProductStab(p) => Outcome::report(product_stabilizer_check_with(p.n, p.r, exec)?),
        Command::MpbCheck { params, random } => Outcome::report(mpb_invariance_check_with(
            params.n,
            params.r,
            random.trials,
            random.seed,
            exec,
        )?),
        Command::LatticeVerify(p) => Outcome::report(verify_theorem_group(p.n, p.r)?),
        Command::Tableaux { shape, max_entry } => {
            let all = enumerate_ssyt(shape, *max_entry)?;
            let text: Vec<String> = all
                .iter()
                .map(|t| {
                    t.rows()
                        .iter()
                        .map(|row| row.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
                        .collect::<Vec<_>>()
                        .join(" / ")
                })
                .chain(std::iter::once(format!("{} tableaux", all.len())))
                .collect();
            Outcome {
                passed: true,
                json: json!({"shape": shape, "max_entry": max_entry, "count": all.len(), "tableaux": all}),
                text: text.join("\n"),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("esym").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn esym_prints_polynomial() {
        let (code, out, _) = run_capture(&["esym", "--n", "3", "--r", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "X1*X2 + X1*X3 + X2*X3");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["esym", "--n", "3"]).0, 2);
        let (code, _, err) = run_capture(&["esym", "--n", "3", "--r", "5"]);
        assert_eq!(code, 2);
        assert!(err.contains("out of range"));
        assert_eq!(run_capture(&["verify-thm1", "--n", "4", "--r", "2"]).0, 2);
        assert_eq!(
            run_capture(&["rank-lemma", "--n", "5", "--r", "3", "--a", "1,+"]).0,
            2
        );
        assert_eq!(run_capture(&["rank-lemma", "--n", "5", "--r", "3"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn rank_lemma_vector() {
        let (code, out, _) = run_capture(&[
            "rank-lemma",
            "--n",
            "5",
            "--r",
            "3",
            "--a",
            "-1,1,0,0,0",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rho"], 2);
        assert_eq!(v["degree_condition"], false);
        assert!(v["witness_b"].is_array());
    }
}
