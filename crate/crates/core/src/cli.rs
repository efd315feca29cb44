//! Command-line front end. [`run`] is the whole program minus process I/O.

use clap::{Parser, Subcommand, ValueEnum};

use crate::atlas::{classify, mountain_range, transverse, Classification};
use crate::error::Error;
use crate::parse::parse;
use crate::render::{
    to_json, ClassificationModel, FareyModel, NonThickModel, NonThickTorus, NotCoveredModel,
    RangeModel, TransverseModel,
};
use crate::slope::{det, farey_path, is_farey_neighbor, Slope};
use crate::trefoil_cable::{annulus_balance, non_thickenable_slope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_COVERED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cablecalc",
    version,
    about = "Legendrian and transverse classification of cables of torus knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Ascii,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a knot expression such as "T(2,3).cable(2,3)".
    Classify {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Mountain range (r, tb, multiplicity) down to a tb floor.
    Range {
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        tb_floor: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Transverse classes by self-linking number.
    Transverse {
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        floor: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Shortest Farey-graph path between two slopes ("p/q", integer or "inf").
    Farey {
        #[arg(allow_hyphen_values = true)]
        from: String,
        #[arg(allow_hyphen_values = true)]
        to: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Boundary slopes of the non-thickenable solid tori for k = 0..=max_k.
    Nonthick {
        #[arg(long, allow_hyphen_values = true)]
        max_k: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

/// Exit code and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Runs one command; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("cablecalc"))
        .chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Classify { expr, format } => with_classification(&expr, format, |c| {
            let model = ClassificationModel::new(expr.clone(), c);
            Ok(match format {
                Format::Json => to_json(&model),
                Format::Table | Format::Ascii => model.table(),
            })
        }),
        Command::Range {
            expr,
            tb_floor,
            format,
        } => with_classification(&expr, format, |c| {
            let model = RangeModel::new(expr.clone(), &mountain_range(c, tb_floor)?);
            Ok(match format {
                Format::Json => to_json(&model),
                Format::Table => model.table(),
                Format::Ascii => model.ascii(),
            })
        }),
        Command::Transverse {
            expr,
            floor,
            format,
        } => with_classification(&expr, format, |c| {
            let model = TransverseModel::new(expr.clone(), &transverse(c, floor)?);
            Ok(match format {
                Format::Json => to_json(&model),
                Format::Table => model.table(),
                Format::Ascii => model.ascii(),
            })
        }),
        Command::Farey { from, to, format } => {
            let (s, t) = match (from.parse::<Slope>(), to.parse::<Slope>()) {
                (Ok(s), Ok(t)) => (s, t),
                (Err(e), _) | (_, Err(e)) => return Outcome::input_error(e),
            };
            let path = farey_path(&s, &t);
            let model = FareyModel {
                det: det(&s, &t).to_string(),
                neighbors: is_farey_neighbor(&s, &t).unwrap_or(false),
                length: path.len() - 1,
                from: s,
                to: t,
                path,
            };
            Outcome::ok(match format {
                Format::Json => to_json(&model),
                Format::Table | Format::Ascii => model.table(),
            })
        }
        Command::Nonthick { max_k, format } => {
            if max_k < 0 {
                return Outcome::input_error(Error::NegativeIndex(max_k));
            }
            let tori = (0..=max_k)
                .map(|k| {
                    let (m1, m2) = annulus_balance(k)?;
                    Ok(NonThickTorus {
                        k,
                        slope: non_thickenable_slope(k)?,
                        m1,
                        m2,
                    })
                })
                .collect::<Result<Vec<_>, Error>>();
            let model = match tori {
                Ok(tori) => NonThickModel { max_k, tori },
                Err(e) => return Outcome::input_error(e),
            };
            Outcome::ok(match format {
                Format::Json => to_json(&model),
                Format::Table => model.table(),
                Format::Ascii => model.ascii(),
            })
        }
    }
}

fn with_classification(
    expr: &str,
    format: Format,
    render: impl FnOnce(&Classification) -> Result<String, Error>,
) -> Outcome {
    let parsed = match parse(expr) {
        Ok(e) => e,
        Err(e) => {
            return Outcome::input_error(format!("{e}\n  {expr}\n  {}^", " ".repeat(e.position())))
        }
    };
    match classify(&parsed).and_then(|c| render(&c)) {
        Ok(text) => Outcome::ok(text),
        Err(e) => match NotCoveredModel::from_error(expr.to_string(), &e) {
            Some(model) => Outcome {
                code: EXIT_NOT_COVERED,
                stdout: match format {
                    Format::Json => to_json(&model),
                    Format::Table | Format::Ascii => model.table(),
                },
                stderr: String::new(),
            },
            None => Outcome::input_error(e),
        },
    }
}
