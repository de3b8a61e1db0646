//! melcoh: build the Melikian algebra, verify its claim catalog, and
//! inspect cochain blocks from the command line.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use melcoh::cohomology::{
    cohomology_dim, differential, BlockId, Coefficients, Complex, Domain,
};
use melcoh::melikian::Melikian;
use melcoh::squaring::{canonical_derivations, sq, sq_coordinates};
use melcoh::subspace::DegreePred;
use melcoh::verify::{emit_json, emit_text, run_all, run_claim};
use melcoh::{Error, Exec};

#[derive(Parser)]
#[command(name = "melcoh", version, about = "Exact cohomology of the Melikian algebra over GF(5)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the claim catalog (all claims, one claim, or one tag).
    Verify {
        /// Run a single claim by id.
        #[arg(long, conflicts_with = "tag")]
        claim: Option<String>,
        /// Run all claims with this tag (structure, cohomology, squaring, steps, lemmas).
        #[arg(long)]
        tag: Option<String>,
        /// Write the JSON report to this path instead of only printing text.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        /// Dump one differential matrix of the adjoint complex in triplet
        /// format and exit; block ids look like n=2,w=(0,0),d=-5.
        #[arg(long, value_name = "BLOCK")]
        dump_matrix: Option<String>,
        /// Worker threads (1 = sequential).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Inspect the structure-constant table.
    Table {
        /// Print the full bracket table, one line per generator pair.
        #[arg(long)]
        dump: bool,
    },
    /// Per-degree cohomology dimensions of one complex.
    Cohomology {
        #[arg(long, value_enum)]
        domain: DomainArg,
        #[arg(long, value_enum)]
        coeff: CoeffArg,
        /// Cochain arity n.
        #[arg(long)]
        n: usize,
        /// Restrict the report to one degree.
        #[arg(long, allow_negative_numbers = true)]
        degree: Option<i32>,
        /// Worker threads (1 = sequential).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Evaluate a squaring cocycle.
    Squaring {
        /// Which derivation to square.
        #[arg(long, value_enum)]
        gamma: GammaArg,
        /// Print the full nonzero value table.
        #[arg(long)]
        dump_values: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    #[value(name = "m", alias = "M")]
    M,
    Ge0,
    Ge1,
    Lt0,
    M0,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffArg {
    Adjoint,
    #[value(name = "m-3")]
    M3,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaArg {
    #[value(name = "1")]
    One,
    #[value(name = "d1", alias = "D1")]
    D1,
    #[value(name = "d2", alias = "D2")]
    D2,
    #[value(name = "dt1", alias = "Dt1")]
    Dt1,
    #[value(name = "dt2", alias = "Dt2")]
    Dt2,
}

fn exec_for(threads: Option<usize>) -> Exec {
    match threads {
        Some(1) => Exec::Sequential,
        Some(_n) => {
            #[cfg(feature = "parallel")]
            {
                // A global pool can only be installed once; later calls
                // keep the first configuration.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(_n).build_global();
            }
            Exec::Parallel
        }
        None => Exec::default(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Usage(_) | Error::NotSubalgebra(_) | Error::NotNormalizing(_) => {
                    ExitCode::from(2)
                }
                Error::Io(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Verify { claim, tag, json, dump_matrix, threads } => {
            let exec = exec_for(threads);
            let alg = Melikian::build();
            if let Some(block) = dump_matrix {
                let id = BlockId::parse(&block)?;
                let cx = Complex::new(Domain::full(&alg), Coefficients::Adjoint(&alg))?;
                let src = cx.block_by_id(id);
                let dst = cx.block(id.n + 1, id.weight, id.degree);
                let m = differential(&cx, &src, &dst);
                let stdout = std::io::stdout();
                gfp_linalg::triplet::write_matrix(&m, stdout.lock())
                    .map_err(Error::Linalg)?;
                return Ok(ExitCode::SUCCESS);
            }
            let reports = match claim {
                Some(id) => vec![run_claim(&alg, &id, exec)?],
                None => run_all(&alg, tag.as_deref(), exec)?,
            };
            print!("{}", emit_text(&reports));
            if let Some(path) = json {
                let mut f = std::fs::File::create(&path)?;
                f.write_all(emit_json(&reports).as_bytes())?;
                writeln!(f)?;
            }
            if reports.iter().all(|r| r.passed()) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Table { dump } => {
            let alg = Melikian::build();
            if dump {
                let stdout = std::io::stdout();
                alg.dump_table(stdout.lock())?;
            } else {
                let mut per_degree = std::collections::BTreeMap::new();
                for i in 0..alg.dim() as u16 {
                    *per_degree.entry(alg.degree(i)).or_insert(0usize) += 1;
                }
                println!("dim M = {}", alg.dim());
                for (d, n) in per_degree {
                    println!("  deg {d:>3}: {n}");
                }
                println!("(use --dump for the full bracket table)");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cohomology { domain, coeff, n, degree, threads } => {
            let exec = exec_for(threads);
            let alg = Melikian::build();
            let dom = match domain {
                DomainArg::M => Domain::full(&alg),
                DomainArg::Ge0 => Domain::graded(&alg, DegreePred::Ge(0), "ge0")?,
                DomainArg::Ge1 => Domain::graded(&alg, DegreePred::Ge(1), "ge1")?,
                DomainArg::Lt0 => Domain::graded(&alg, DegreePred::Lt(0), "lt0")?,
                DomainArg::M0 => Domain::graded(&alg, DegreePred::Eq(0), "m0")?,
            };
            let coeff = match coeff {
                CoeffArg::Adjoint => Coefficients::Adjoint(&alg),
                CoeffArg::M3 => match domain {
                    DomainArg::Ge0 | DomainArg::Ge1 | DomainArg::M0 => {
                        Coefficients::NegThree(&alg)
                    }
                    _ => {
                        return Err(Error::Usage(
                            "coefficients m-3 require a domain inside the nonnegative part"
                                .into(),
                        ))
                    }
                },
            };
            let cx = Complex::new(dom, coeff)?;
            let rep = cohomology_dim(&cx, n, exec);
            println!(
                "H^{} of {} with {} coefficients ({})",
                rep.n, rep.domain, rep.coefficients, rep.notes
            );
            println!(
                "{:>4} {:>8} {:>7} {:>7} {:>7} {:>8} {:>7} {:>5}",
                "w", "degree", "dim-1", "dim", "dim+1", "rank d-1", "ker d", "H"
            );
            let mut total = 0usize;
            for e in &rep.entries {
                if degree.is_some_and(|d| d != e.degree) {
                    continue;
                }
                println!(
                    "{:>4} {:>8} {:>7} {:>7} {:>7} {:>8} {:>7} {:>5}",
                    format!("{},{}", e.weight.0, e.weight.1),
                    e.degree,
                    e.dim_lower,
                    e.dim,
                    e.dim_upper,
                    e.rank_lower,
                    e.ker,
                    e.h
                );
                total += e.h;
            }
            match degree {
                Some(d) => println!("total at degree {d}: {total}"),
                None => println!("total: {}", rep.total),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Squaring { gamma, dump_values } => {
            let alg = Melikian::build();
            let ders = canonical_derivations(&alg);
            let label = match gamma {
                GammaArg::One => "1",
                GammaArg::D1 => "D1",
                GammaArg::D2 => "D2",
                GammaArg::Dt1 => "Dt1",
                GammaArg::Dt2 => "Dt2",
            };
            let der = ders.iter().find(|d| d.label == label).expect("canonical derivation");
            let c = sq(&alg, der);
            let deg = c.degree.expect("homogeneous");
            let cx = Complex::new(Domain::full(&alg), Coefficients::Adjoint(&alg))?;
            let block = cx.block(2, (0, 0), deg);
            let coords = sq_coordinates(&c, &block)?;
            let upper = cx.block(3, (0, 0), deg);
            let closed = differential(&cx, &block, &upper).matvec(&coords)?.is_zero();
            println!("{}: degree {}, {} nonzero pairs, cocycle: {}", c.label, deg, c.support_len(), closed);
            if dump_values {
                let stdout = std::io::stdout();
                let mut out = std::io::BufWriter::new(stdout.lock());
                for (&(i, j), v) in c.nonzero_pairs() {
                    writeln!(
                        out,
                        "{}({}, {}) = {}",
                        c.label,
                        alg.generator(i).name(),
                        alg.generator(j).name(),
                        alg.format_element(v)
                    )?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
