//! `arbor-hopf`: coproducts, antipodes, pre-Lie products and verification
//! suites for the q-deformed Hopf algebras of coloured rooted trees.

use std::fmt::Display;
use std::io::Write;
use std::process::ExitCode;

use arbor_hopf::coeff::{parse_combination, to_json, BasisParse, BasisText, Combination, Element, JsonBasis, QSpec};
use arbor_hopf::forest::{enumerate_forests, enumerate_trees, Colour};
use arbor_hopf::hopf::{
    antipode_partitions, antipode_recursive, check_cocommutative, compare_antipodes, compare_coproducts, coproduct,
    coproduct_inductive, simplicial_d, simplicial_s, verify_bialgebra, verify_specialization, HopfContext,
    VerificationReport,
};
use arbor_hopf::planar::{
    enumerate_planar_trees, enumerate_planar_words, planar_antipode, planar_bullet, planar_coproduct,
    planar_coproduct_inductive, planar_lie_bracket, verify_planar, PlanarDual, PlanarElement,
};
use arbor_hopf::prelie::{bullet_prime, phi, BulletTable, DualElement};
use arbor_hopf::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "arbor-hopf", version, about = "Hopf algebras of coloured rooted trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Number of edge colours.
    #[arg(long, default_value_t = 1)]
    n: u16,

    /// Parameters q11..q1n,q21..q2n: rationals or `sym`; a lone `sym` makes all symbolic.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    q: String,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest tree size enumerated by the pre-Lie products.
    #[arg(long, default_value_t = 8)]
    budget: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Variant {
    Symmetric,
    Planar,
}

#[derive(Subcommand)]
enum Command {
    /// List or count trees (or forests, or planar trees) by vertex count.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        vertices: usize,
        /// Print only the number of items.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        forests: bool,
        #[arg(long, value_enum, default_value_t = Variant::Symmetric)]
        variant: Variant,
    },
    /// Coproduct of an element.
    Coproduct {
        #[command(flatten)]
        common: Common,
        expr: String,
        /// Use the recursive formula instead of the subforest sum.
        #[arg(long)]
        inductive: bool,
        #[arg(long, value_enum, default_value_t = Variant::Symmetric)]
        variant: Variant,
    },
    /// Antipode of an element.
    Antipode {
        #[command(flatten)]
        common: Common,
        expr: String,
        /// Use the ordered-partition formula.
        #[arg(long)]
        partitions: bool,
        #[arg(long, value_enum, default_value_t = Variant::Symmetric)]
        variant: Variant,
    },
    /// The product `a • b` on duals of trees (`a` the complement, `b` the
    /// subtree); with `--prime`, the grafting product `•′`.
    Bullet {
        #[command(flatten)]
        common: Common,
        a: String,
        b: String,
        #[arg(long)]
        prime: bool,
        /// Colours used by `--prime`, comma separated; default all.
        #[arg(long)]
        p: Option<String>,
        #[arg(long, value_enum, default_value_t = Variant::Symmetric)]
        variant: Variant,
    },
    /// The Lie bracket `[a, b] = b • a − a • b`.
    Bracket {
        #[command(flatten)]
        common: Common,
        a: String,
        b: String,
        /// Use `a • b − b • a` instead.
        #[arg(long)]
        opposite: bool,
        #[arg(long, value_enum, default_value_t = Variant::Symmetric)]
        variant: Variant,
    },
    /// Face map `d_i` (to n−1 colours) or degeneracy `s_i` (to n+1 colours).
    Simplicial {
        #[command(flatten)]
        common: Common,
        expr: String,
        #[arg(long, conflicts_with = "degeneracy", required_unless_present = "degeneracy")]
        face: Option<u16>,
        #[arg(long)]
        degeneracy: Option<u16>,
    },
    /// Run the verification suites on all inputs up to a vertex count.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Variant::Symmetric)]
        variant: Variant,
        /// Seed for the random specialization check.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// The embedding φ into the free pre-Lie algebra.
    Phi {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
}

enum Failure {
    Lib(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 4,
        Error::ColourOutOfRange { .. } | Error::ColourCount { .. } | Error::QSpecLength { .. } => 5,
        _ => 2,
    }
}

fn context(c: &Common) -> Result<HopfContext, Error> {
    Ok(HopfContext::new(QSpec::parse(&c.q, c.n)?))
}

fn parse<B: BasisParse + Ord + Clone>(s: &str) -> Result<Combination<B>, Error> {
    parse_combination(s)
}

fn check_trees(c: &Common, x: &DualElement) -> Result<(), Error> {
    x.basis_elements().try_for_each(|t| t.check_colours(c.n))
}

fn emit<B: BasisText + JsonBasis + Ord + Clone>(c: &Common, x: &Combination<B>) -> String {
    match c.format {
        Format::Text => x.to_string(),
        Format::Json => serde_json::to_string_pretty(&to_json(x)).expect("serializable"),
    }
}

fn emit_list<T: Display>(c: &Common, items: &[T], count: bool) -> String {
    match (c.format, count) {
        (Format::Text, true) => items.len().to_string(),
        (Format::Json, true) => json!({ "count": items.len() }).to_string(),
        (Format::Text, false) => items.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n"),
        (Format::Json, false) => {
            let list: Vec<Value> = items.iter().map(|t| json!(t.to_string())).collect();
            serde_json::to_string_pretty(&Value::Array(list)).expect("serializable")
        }
    }
}

fn colour_list(s: &str, n: u16) -> Result<Vec<Colour>, Error> {
    s.split(',')
        .map(|part| {
            let k: u16 = part.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("'{part}' is not a colour"),
            })?;
            Colour::in_range(k, n)
        })
        .collect()
}

fn report_output(c: &Common, report: &VerificationReport) -> String {
    match c.format {
        Format::Text => report.to_string().trim_end().to_string(),
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|r| json!({ "name": r.name, "cases": r.cases, "passed": r.passed(), "failure": r.failure }))
                .collect();
            serde_json::to_string_pretty(&json!({ "passed": report.passed(), "checks": checks })).expect("serializable")
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    Ok(match command {
        Command::Enumerate {
            common,
            vertices,
            count,
            forests,
            variant,
        } => match (variant, forests) {
            (Variant::Symmetric, false) => emit_list(&common, &enumerate_trees(common.n, vertices), count),
            (Variant::Symmetric, true) => emit_list(&common, &enumerate_forests(common.n, vertices), count),
            (Variant::Planar, false) => emit_list(&common, &enumerate_planar_trees(common.n, vertices), count),
            (Variant::Planar, true) => emit_list(&common, &enumerate_planar_words(common.n, vertices), count),
        },
        Command::Coproduct {
            common,
            expr,
            inductive,
            variant,
        } => {
            let ctx = context(&common)?;
            match variant {
                Variant::Symmetric => {
                    let x: Element = parse(&expr)?;
                    ctx.check(&x)?;
                    let d = if inductive {
                        coproduct_inductive(&x, &ctx)
                    } else {
                        coproduct(&x, &ctx)
                    };
                    emit(&common, &d)
                }
                Variant::Planar => {
                    let x: PlanarElement = parse(&expr)?;
                    check_planar(&common, &x)?;
                    let d = if inductive {
                        planar_coproduct_inductive(&x, &ctx)
                    } else {
                        planar_coproduct(&x, &ctx)
                    };
                    emit(&common, &d)
                }
            }
        }
        Command::Antipode {
            common,
            expr,
            partitions,
            variant,
        } => {
            let ctx = context(&common)?;
            match variant {
                Variant::Symmetric => {
                    let x: Element = parse(&expr)?;
                    ctx.check(&x)?;
                    let s = if partitions {
                        antipode_partitions(&x, &ctx)
                    } else {
                        antipode_recursive(&x, &ctx)
                    };
                    emit(&common, &s)
                }
                Variant::Planar => {
                    let x: PlanarElement = parse(&expr)?;
                    check_planar(&common, &x)?;
                    emit(&common, &planar_antipode(&x, &ctx))
                }
            }
        }
        Command::Bullet {
            common,
            a,
            b,
            prime,
            p,
            variant,
        } => {
            let ctx = context(&common)?;
            match variant {
                Variant::Symmetric => {
                    let (x, y): (DualElement, DualElement) = (parse(&a)?, parse(&b)?);
                    check_trees(&common, &x)?;
                    check_trees(&common, &y)?;
                    if prime {
                        let colours = match p {
                            Some(list) => colour_list(&list, common.n)?,
                            None => Colour::all(common.n).collect(),
                        };
                        emit(&common, &bullet_prime(&x, &y, &colours))
                    } else {
                        let table = BulletTable::new(ctx, common.budget);
                        emit(&common, &table.bullet(&x, &y)?)
                    }
                }
                Variant::Planar => {
                    let (x, y): (PlanarDual, PlanarDual) = (parse(&a)?, parse(&b)?);
                    emit(&common, &planar_bullet(&x, &y, &ctx, common.budget)?)
                }
            }
        }
        Command::Bracket {
            common,
            a,
            b,
            opposite,
            variant,
        } => {
            let ctx = context(&common)?;
            match variant {
                Variant::Symmetric => {
                    let (x, y): (DualElement, DualElement) = (parse(&a)?, parse(&b)?);
                    check_trees(&common, &x)?;
                    check_trees(&common, &y)?;
                    let table = BulletTable::new(ctx, common.budget);
                    let out = table.lie_bracket(&x, &y)?;
                    emit(&common, &if opposite { out.neg() } else { out })
                }
                Variant::Planar => {
                    let (x, y): (PlanarDual, PlanarDual) = (parse(&a)?, parse(&b)?);
                    let out = planar_lie_bracket(&x, &y, &ctx, common.budget)?;
                    emit(&common, &if opposite { out.neg() } else { out })
                }
            }
        }
        Command::Simplicial {
            common,
            expr,
            face,
            degeneracy,
        } => {
            let x: Element = parse(&expr)?;
            let out = match (face, degeneracy) {
                (Some(i), _) => simplicial_d(i, common.n, &x)?,
                (None, Some(i)) => simplicial_s(i, common.n, &x)?,
                (None, None) => unreachable!("clap requires one of --face, --degeneracy"),
            };
            emit(&common, &out)
        }
        Command::Verify {
            common,
            max_degree,
            variant,
            seed,
        } => {
            let ctx = context(&common)?;
            let report = match variant {
                Variant::Symmetric => {
                    let mut report = verify_bialgebra(&ctx, max_degree);
                    report.checks.push(compare_coproducts(&ctx, max_degree));
                    report.checks.push(compare_antipodes(&ctx, max_degree));
                    report.checks.push(verify_specialization(&ctx, max_degree, seed));
                    if ctx.qspec().entries()[..common.n as usize] == ctx.qspec().entries()[common.n as usize..] {
                        report.checks.push(check_cocommutative(&ctx, max_degree));
                    }
                    report
                }
                Variant::Planar => verify_planar(&ctx, max_degree),
            };
            let out = report_output(&common, &report);
            if report.passed() {
                out
            } else {
                return Err(Failure::Verification(out));
            }
        }
        Command::Phi { common, expr } => {
            let x: DualElement = parse(&expr)?;
            check_trees(&common, &x)?;
            emit(&common, &phi(&x, common.n))
        }
    })
}

fn check_planar(c: &Common, x: &PlanarElement) -> Result<(), Error> {
    for w in x.basis_elements() {
        let m = w.max_colour();
        if m > c.n {
            return Err(Error::ColourOutOfRange { colour: m, n: c.n });
        }
    }
    Ok(())
}

/// Writes to stdout; a closed pipe is not an error.
fn print(out: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print(&out);
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
