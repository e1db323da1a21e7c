//! Command-line front end: single-shot commands over an algebra config.
//!
//! Output is deterministic. Human-readable by default; `--machine` prints
//! flat `key=value` records instead. Exit codes: 0 on success, 1 on domain
//! errors (non-commuting inputs, degenerate algebras, exhausted bounds),
//! 2 on usage errors (bad expressions, bad config, bad flag combinations).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use orecas::annihilator::{
    annihilating_polynomial, annihilating_polynomial_auto, DEFAULT_MAX_DOUBLINGS,
};
use orecas::axioms::validate_pseudo_degree;
use orecas::centralizer::{
    centralizer_slice, check_commutative, check_condition_d, check_rank_divides, greedy_basis,
};
use orecas::config::load_algebra;
use orecas::parse::parse_operator;
use orecas::{Algebra, Error, OrePoly};

/// Fixed default so repeated runs are byte-identical.
const DEFAULT_SEED: u64 = 7;

#[derive(Parser)]
#[command(
    name = "orecas",
    version,
    about = "Exact computer algebra for Ore extensions K[y][x; sigma, delta]"
)]
struct Cli {
    /// Print flat key=value records instead of prose.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArg {
    /// Algebra config file (key=value lines: field, sigma_y, delta_y).
    #[arg(long, value_name = "PATH")]
    algebra: PathBuf,
}

impl AlgebraArg {
    fn load(&self) -> Result<Algebra, Error> {
        load_algebra(&self.algebra)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two operators and print the canonical product.
    Mul {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'P', value_name = "EXPR")]
        p: String,
        #[arg(short = 'Q', value_name = "EXPR")]
        q: String,
    },
    /// Print the commutator PQ - QP.
    Commutator {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'P', value_name = "EXPR")]
        p: String,
        #[arg(short = 'Q', value_name = "EXPR")]
        q: String,
    },
    /// Print the pseudo-degree (x-degree) of an operator.
    Chi {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'P', value_name = "EXPR")]
        p: String,
    },
    /// K-basis of the centralizer of `a` up to an x-degree bound.
    Centralizer {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'a', value_name = "EXPR")]
        a: String,
        #[arg(long, value_name = "N")]
        max_degree: usize,
        /// Explicit y-degree bound for coefficients (default: automatic).
        #[arg(long, value_name = "D")]
        coeff_bound: Option<usize>,
    },
    /// Free K[a]-module basis of the centralizer of `a`.
    Basis {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'a', value_name = "EXPR")]
        a: String,
        #[arg(long, value_name = "N")]
        max_degree: usize,
        #[arg(long, value_name = "D")]
        coeff_bound: Option<usize>,
    },
    /// Check condition D(l): leading-space dimension <= l at every degree.
    CheckD {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'a', value_name = "EXPR")]
        a: String,
        #[arg(long, value_name = "L")]
        ell: usize,
        #[arg(long, value_name = "N")]
        max_degree: usize,
        #[arg(long, value_name = "D")]
        coeff_bound: Option<usize>,
    },
    /// Check that the centralizer slice of `a` is commutative.
    CheckCommutative {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'a', value_name = "EXPR")]
        a: String,
        #[arg(long, value_name = "N")]
        max_degree: usize,
        #[arg(long, value_name = "D")]
        coeff_bound: Option<usize>,
    },
    /// Find f(s, t) with f(P, Q) = 0 for a commuting pair.
    Annihilate {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'P', value_name = "EXPR")]
        p: String,
        #[arg(short = 'Q', value_name = "EXPR")]
        q: String,
        /// Explicit bound on the s-degree (requires --deg-t).
        #[arg(long, value_name = "I")]
        deg_s: Option<usize>,
        /// Explicit bound on the t-degree (requires --deg-s).
        #[arg(long, value_name = "J")]
        deg_t: Option<usize>,
        /// Rounds of bound doubling in the automatic search.
        #[arg(long, value_name = "K", default_value_t = DEFAULT_MAX_DOUBLINGS)]
        max_doublings: u32,
    },
    /// Randomized check of the pseudo-degree axioms for the algebra.
    ValidateAxioms {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_name = "N", default_value_t = 500)]
        trials: u32,
        /// Degree bound for sampled operators.
        #[arg(long, value_name = "D", default_value_t = 4)]
        max_degree: u32,
        #[arg(long, value_name = "S", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_operator_list(machine: bool, elements: &[OrePoly]) {
    for (i, b) in elements.iter().enumerate() {
        if machine {
            println!("element.{i}={b}");
        } else {
            println!("b[{}] = {b}", i + 1);
        }
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let machine = cli.machine;
    match &cli.command {
        Command::Mul { algebra, p, q } => {
            let algebra = algebra.load()?;
            let p = parse_operator(p, &algebra)?;
            let q = parse_operator(q, &algebra)?;
            let product = p.checked_mul(&q)?;
            if machine {
                println!("product={product}");
            } else {
                println!("{product}");
            }
        }
        Command::Commutator { algebra, p, q } => {
            let algebra = algebra.load()?;
            let p = parse_operator(p, &algebra)?;
            let q = parse_operator(q, &algebra)?;
            let c = p.commutator(&q)?;
            if machine {
                println!("commutator={c}");
            } else {
                println!("{c}");
            }
        }
        Command::Chi { algebra, p } => {
            let algebra = algebra.load()?;
            let p = parse_operator(p, &algebra)?;
            if machine {
                println!("chi={}", p.chi());
            } else {
                println!("{}", p.chi());
            }
        }
        Command::Centralizer { algebra, a, max_degree, coeff_bound } => {
            let algebra = algebra.load()?;
            let a = parse_operator(a, &algebra)?;
            let slice = centralizer_slice(&a, *max_degree, *coeff_bound)?;
            if machine {
                println!("max_degree={}", slice.n);
                println!("coeff_bound={}", slice.coeff_bound);
                println!("size={}", slice.basis.len());
            } else {
                println!("max degree: {}", slice.n);
                println!("coeff bound: {}", slice.coeff_bound);
                println!("basis size: {}", slice.basis.len());
            }
            print_operator_list(machine, &slice.basis);
        }
        Command::Basis { algebra, a, max_degree, coeff_bound } => {
            let algebra = algebra.load()?;
            let a = parse_operator(a, &algebra)?;
            let basis = greedy_basis(&a, *max_degree, *coeff_bound)?;
            let degrees: Vec<String> = basis.degrees.iter().map(usize::to_string).collect();
            if machine {
                println!("m={}", basis.m);
                println!("coeff_bound={}", basis.coeff_bound);
                println!("rank={}", basis.elements.len());
                println!("degrees={}", degrees.join(" "));
            } else {
                println!("m: {}", basis.m);
                println!("coeff bound: {}", basis.coeff_bound);
                println!("rank: {}", basis.elements.len());
                println!("degrees: {}", degrees.join(", "));
            }
            print_operator_list(machine, &basis.elements);
            if machine {
                println!("rank_divides_m={}", yes_no(check_rank_divides(&basis)));
            } else {
                println!("rank divides m: {}", yes_no(check_rank_divides(&basis)));
            }
        }
        Command::CheckD { algebra, a, ell, max_degree, coeff_bound } => {
            let algebra = algebra.load()?;
            let a = parse_operator(a, &algebra)?;
            let report = check_condition_d(&a, *ell, *max_degree, *coeff_bound)?;
            if machine {
                println!("ell={}", report.ell);
                println!("max_degree={}", report.max_degree);
                println!("coeff_bound={}", report.coeff_bound);
                for (n, dim) in report.dims.iter().enumerate() {
                    println!("dim.{n}={dim}");
                }
                println!("holds={}", yes_no(report.holds()));
            } else {
                println!("ell: {}", report.ell);
                println!("max degree: {}", report.max_degree);
                println!("coeff bound: {}", report.coeff_bound);
                for (n, dim) in report.dims.iter().enumerate() {
                    println!("dim[{n}] = {dim}");
                }
                println!("condition D({}): {}", report.ell, if report.holds() {
                    "holds".to_string()
                } else {
                    format!(
                        "violated at degrees {}",
                        report
                            .violations
                            .iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                });
            }
        }
        Command::CheckCommutative { algebra, a, max_degree, coeff_bound } => {
            let algebra = algebra.load()?;
            let a = parse_operator(a, &algebra)?;
            let report = check_commutative(&a, *max_degree, *coeff_bound)?;
            if machine {
                println!("max_degree={}", report.n);
                println!("coeff_bound={}", report.coeff_bound);
                println!("size={}", report.basis_size);
                println!("pairs_checked={}", report.pairs_checked);
                for (i, j) in &report.failures {
                    println!("failure={i},{j}");
                }
                println!("commutative={}", yes_no(report.commutative()));
            } else {
                println!("max degree: {}", report.n);
                println!("coeff bound: {}", report.coeff_bound);
                println!("basis size: {}", report.basis_size);
                println!("pairs checked: {}", report.pairs_checked);
                for (i, j) in &report.failures {
                    println!("non-commuting pair: b[{}], b[{}]", i + 1, j + 1);
                }
                println!("commutative: {}", yes_no(report.commutative()));
            }
        }
        Command::Annihilate { algebra, p, q, deg_s, deg_t, max_doublings } => {
            let algebra = algebra.load()?;
            let p = parse_operator(p, &algebra)?;
            let q = parse_operator(q, &algebra)?;
            match (deg_s, deg_t) {
                (Some(deg_s), Some(deg_t)) => {
                    match annihilating_polynomial(&p, &q, *deg_s, *deg_t)? {
                        Some(f) => {
                            if machine {
                                println!("found=yes");
                                println!("f={f}");
                            } else {
                                println!("{f}");
                            }
                        }
                        None => {
                            if machine {
                                println!("found=no");
                            } else {
                                println!(
                                    "no relation with deg_s <= {deg_s}, deg_t <= {deg_t}"
                                );
                            }
                        }
                    }
                }
                (None, None) => {
                    let f = annihilating_polynomial_auto(&p, &q, *max_doublings)?;
                    if machine {
                        println!("found=yes");
                        println!("f={f}");
                    } else {
                        println!("{f}");
                    }
                }
                _ => {
                    return Err(Error::InvalidArgument {
                        message: "--deg-s and --deg-t must be given together".to_string(),
                    })
                }
            }
        }
        Command::ValidateAxioms { algebra, trials, max_degree, seed } => {
            let algebra = algebra.load()?;
            let report = validate_pseudo_degree(&algebra, *trials, *max_degree, *seed);
            if machine {
                println!("s={}", report.s);
                println!(
                    "multiplicativity_certified={}",
                    yes_no(report.multiplicativity_certified)
                );
                for c in &report.checks {
                    println!("{}.trials={}", c.name, c.trials);
                    println!("{}.failures={}", c.name, c.failures);
                }
                println!("all_passed={}", yes_no(report.all_passed()));
                println!("consistent={}", yes_no(report.consistent()));
            } else {
                println!("s: {}", report.s);
                println!(
                    "multiplicativity certified: {}{}",
                    yes_no(report.multiplicativity_certified),
                    if report.multiplicativity_certified {
                        ""
                    } else {
                        " (sigma is not injective; failures there are expected)"
                    }
                );
                for c in &report.checks {
                    println!("{}: {} trials, {} failures", c.name, c.trials, c.failures);
                    if let Some(ce) = &c.first_counterexample {
                        println!("  first counterexample: {ce}");
                    }
                }
                println!(
                    "result: {}",
                    if report.all_passed() {
                        "all axioms passed"
                    } else if report.consistent() {
                        "only expected failures (multiplicativity is not certified here)"
                    } else {
                        "UNEXPECTED FAILURES"
                    }
                );
            }
            if !report.consistent() {
                let check = report
                    .checks
                    .iter()
                    .find(|c| !c.passed())
                    .map_or_else(|| "unknown".to_string(), |c| c.name.to_string());
                return Err(Error::AxiomViolation { check });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
