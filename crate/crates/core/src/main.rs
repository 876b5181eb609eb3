use clap::{Parser, Subcommand, ValueEnum};
use hallkit::hallalg::CfAlgebra;
use hallkit::hallnum::{from_json_str, to_json_string, HallTable, TableConfig};
use hallkit::quantumhall::SfAlgebra;
use hallkit::quiver::{DimVec, EulerForm, Quiver};
use hallkit::report::Report;
use hallkit::twistedalg::{a_mult, b_mult, c_mult, parse_a, parse_b, parse_c, render_a, render_b, render_c, BMode};
use hallkit::verify::{run_random_suite, run_table_suite, table_for, Suite};
use hallkit::Error;
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "hallkit", version, about = "Exact Hall algebra computations for quiver representations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate classes, count over several primes and write the table.
    HallTable {
        #[arg(long)]
        quiver: PathBuf,
        /// Per-vertex dimension bound, e.g. `2,2`.
        #[arg(long)]
        max_dim: String,
        #[arg(long, value_delimiter = ',', default_values_t = vec![2u32, 3, 5, 7, 11])]
        primes: Vec<u32>,
        #[arg(long, default_value_t = 13)]
        check_prime: u32,
        /// Cap on the total dimension of tabulated classes.
        #[arg(long)]
        max_total: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Multiply two elements and print the product.
    Mult {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long)]
        table: Option<PathBuf>,
        /// Bilinear form as rows, e.g. `1,-1;0,1`.
        #[arg(long)]
        chi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
        #[arg(long, value_enum, default_value_t = Mode::Graph)]
        mode: Mode,
    },
    /// Run a verification suite and print one JSON record per check.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        quiver: Option<PathBuf>,
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    #[value(name = "CF")]
    Cf,
    #[value(name = "SF")]
    Sf,
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Sum,
    Graph,
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::DimensionMismatch { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Run(e.to_string()),
        }
    }
}

fn read(p: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(p).map_err(|e| Failure::Run(format!("{}: {e}", p.display())))
}

fn load_quiver(p: &Path) -> Result<Quiver, Failure> {
    Ok(Quiver::load(&read(p)?)?)
}

fn load_table(p: &Path) -> Result<HallTable, Failure> {
    Ok(from_json_str(&read(p)?)?)
}

fn hall_table(
    quiver: &Path,
    max_dim: &str,
    primes: Vec<u32>,
    check_prime: u32,
    max_total: Option<usize>,
    out: &Path,
) -> Result<(), Failure> {
    let q = load_quiver(quiver)?;
    let dmax = DimVec::parse(max_dim)?;
    if dmax.len() != q.vertex_count() {
        return Err(Error::DimensionMismatch { expected: q.vertex_count(), found: dmax.len() }.into());
    }
    let cfg = TableConfig { primes, check_prime, max_total, ..TableConfig::default() };
    let t = HallTable::build(&q, &dmax, &cfg)?;
    std::fs::write(out, to_json_string(&t)).map_err(|e| Failure::Run(format!("{}: {e}", out.display())))?;
    eprintln!("wrote {} classes ({} indecomposable) to {}", t.len(), t.indecomposables().len(), out.display());
    Ok(())
}

fn mult(
    algebra: Algebra,
    table: Option<&Path>,
    chi: Option<&str>,
    lhs: &str,
    rhs: &str,
    mode: Mode,
) -> Result<String, Failure> {
    let table = table.map(load_table).transpose()?;
    if matches!(algebra, Algebra::Cf | Algebra::Sf) {
        let Some(t) = table.as_ref() else {
            return Err(Failure::Usage("--table is required for CF and SF".into()));
        };
        return Ok(match algebra {
            Algebra::Cf => {
                let a = CfAlgebra::new(t);
                a.render(&a.mult(&a.parse(lhs)?, &a.parse(rhs)?)?)
            }
            _ => {
                let a = SfAlgebra::new(t)?;
                a.render(&a.mult(&a.parse(lhs)?, &a.parse(rhs)?)?)
            }
        });
    }
    let f = match (chi, &table) {
        (Some(c), _) => EulerForm::parse(c)?,
        (None, Some(t)) => t.quiver.euler_form(),
        (None, None) => return Err(Failure::Usage("--chi or --table is required".into())),
    };
    let n = f.rank();
    let mode = match mode {
        Mode::Sum => BMode::Sum,
        Mode::Graph => BMode::Graph,
    };
    Ok(match algebra {
        Algebra::A => render_a(&a_mult(&parse_a(lhs, n)?, &parse_a(rhs, n)?, &f)?),
        Algebra::B => render_b(&b_mult(&parse_b(lhs, n)?, &parse_b(rhs, n)?, &f, mode)?),
        _ => render_c(&c_mult(&parse_c(lhs, n)?, &parse_c(rhs, n)?, &f)?),
    })
}

fn print_report(suite: Suite, rep: &Report) {
    for c in &rep.checks {
        println!(
            "{}",
            json!({"suite": suite.name(), "check": c.name, "status": c.status.as_str(), "detail": c.detail})
        );
    }
}

fn verify(
    suite: Suite,
    quiver: Option<&Path>,
    table: Option<&Path>,
    seed: u64,
    trials: usize,
) -> Result<bool, Failure> {
    let start = Instant::now();
    let rep = if suite.needs_table() {
        let t = match (table, quiver) {
            (Some(p), _) => {
                let t = load_table(p)?;
                let bad = t.verify_identities();
                if let Some(v) = bad.first() {
                    let mut rep = Report::new();
                    rep.fail(
                        "table_identities",
                        json!({"violations": bad.len(), "check": v.check, "counterexample": v.detail}),
                    );
                    print_report(suite, &rep);
                    return Ok(false);
                }
                t
            }
            (None, Some(p)) => table_for(&load_quiver(p)?, suite)?,
            (None, None) => return Err(Failure::Usage(format!("suite {suite} needs --quiver or --table"))),
        };
        run_table_suite(suite, &t)?
    } else {
        run_random_suite(suite, seed, trials)?
    };
    print_report(suite, &rep);
    eprintln!("{suite}: {} checks in {:.2?}", rep.checks.len(), start.elapsed());
    Ok(rep.ok())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let res = match cli.cmd {
        Cmd::HallTable { quiver, max_dim, primes, check_prime, max_total, out } => {
            hall_table(&quiver, &max_dim, primes, check_prime, max_total, &out).map(|_| true)
        }
        Cmd::Mult { algebra, table, chi, lhs, rhs, mode } => {
            mult(algebra, table.as_deref(), chi.as_deref(), &lhs, &rhs, mode).map(|s| {
                println!("{s}");
                true
            })
        }
        Cmd::Verify { suite, quiver, table, seed, trials } => {
            verify(suite, quiver.as_deref(), table.as_deref(), seed, trials)
        }
    };
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
