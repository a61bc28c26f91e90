use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cl23::embeddings::{diagram_check, embed, extract, restrict13, EmbeddingKind};
use cl23::groups::{adjoint_matrix, classify, twisted_adjoint_matrix};
use cl23::json::multivector_to_json;
use cl23::parser::{parse_and_evaluate, render, to_complex, Mode, ParseError};
use cl23::sampling::DEFAULT_SEED;
use cl23::spinors::SpinorSpace;
use cl23::verify::{self, Suite};
use cl23::{Multivector, Signature};

#[derive(Parser)]
#[command(name = "cl23", version, about = "Exact arithmetic in Cl(2,3) and Cl(1,3;C)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print its canonical form.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Algebra::Cl23)]
        algebra: Algebra,
        /// Evaluate in Cl(p,q) instead, e.g. `1,3`.
        #[arg(long, value_parser = parse_signature, conflicts_with = "algebra")]
        signature: Option<Signature>,
        #[arg(long)]
        json: bool,
    },
    /// Run invariant suites and print a report.
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the matrix of the adjoint action of a group element.
    Adjoint {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        twisted: bool,
        #[arg(long, value_parser = parse_signature)]
        signature: Option<Signature>,
        /// Also check Ad_θ(x) = ℓ(Ad_x) when x comes from Pin(1,3).
        #[arg(long)]
        check_diagram: bool,
        #[arg(long)]
        json: bool,
    },
    /// Report Clifford, twisted Clifford, Pin, Spin and reduced-Pin membership.
    Classify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_parser = parse_signature)]
        signature: Option<Signature>,
        #[arg(long)]
        json: bool,
    },
    /// Map a Cl(1,3;C) expression into Cl(2,3).
    Embed {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Kind::Trivial)]
        kind: Kind,
        #[arg(long)]
        json: bool,
    },
    /// Read a Cl(2,3) expression back as an element of Cl(1,3;C).
    Extract {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Kind::Trivial)]
        kind: Kind,
        #[arg(long)]
        json: bool,
    },
    /// Print the spinor representation of the twisted generators.
    Gamma {
        #[arg(long, value_enum, default_value_t = Basis::Dirac)]
        basis: Basis,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Cl23,
    Cl13c,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Trivial,
    Twisted,
}

impl From<Kind> for EmbeddingKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Trivial => EmbeddingKind::Trivial,
            Kind::Twisted => EmbeddingKind::Twisted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Dirac,
}

fn parse_signature(text: &str) -> Result<Signature, String> {
    let (p, q) = text
        .split_once(',')
        .ok_or_else(|| format!("expected `p,q`, got `{text}`"))?;
    let p: usize = p.trim().parse().map_err(|_| format!("bad p in `{text}`"))?;
    let q: usize = q.trim().parse().map_err(|_| format!("bad q in `{text}`"))?;
    match (p, q) {
        (2, 3) => Ok(Signature::cl23()),
        (1, 3) => Ok(Signature::cl13()),
        _ => Signature::from_pq(p, q).map_err(|e| e.to_string()),
    }
}

enum Failure {
    Parse(String, ParseError),
    Domain(cl23::Error),
    Check,
}

impl From<cl23::Error> for Failure {
    fn from(e: cl23::Error) -> Self {
        Failure::Domain(e)
    }
}

fn evaluate(text: &str, mode: Mode) -> Result<Multivector, Failure> {
    parse_and_evaluate(text, mode).map_err(|e| Failure::Parse(text.to_string(), e))
}

fn mode_for(signature: Option<Signature>) -> Mode {
    match signature {
        None => Mode::Cl23,
        Some(s) if s == Signature::cl23() => Mode::Cl23,
        Some(s) => Mode::Generic(s),
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("plain data"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval {
            expr,
            algebra,
            signature,
            json,
        } => {
            let mode = match (signature, algebra) {
                (Some(s), _) => mode_for(Some(s)),
                (None, Algebra::Cl23) => Mode::Cl23,
                (None, Algebra::Cl13c) => Mode::Cl13c,
            };
            let value = evaluate(&expr, mode)?;
            if !json {
                println!("{}", render(&value, mode));
            } else if mode == Mode::Cl13c {
                let z = to_complex(&value);
                print_json(&json!({
                    "re": multivector_to_json(&z.real_part()),
                    "im": multivector_to_json(&z.imag_part()),
                }));
            } else {
                print_json(&multivector_to_json(&value));
            }
        }
        Command::Verify { suite, json, seed } => {
            let report = verify::run(suite, seed);
            if json {
                print_json(&report.to_json());
            } else {
                println!("{report}");
            }
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Adjoint {
            expr,
            twisted,
            signature,
            check_diagram,
            json,
        } => {
            let x = evaluate(&expr, mode_for(signature))?;
            let m = if twisted {
                twisted_adjoint_matrix(&x)?
            } else {
                adjoint_matrix(&x)?
            };
            let diagram = if check_diagram {
                let source = if x.signature() == Signature::cl13() {
                    Some(x.clone())
                } else if x.signature() == Signature::cl23() {
                    restrict13(&x)
                } else {
                    None
                };
                match source.filter(|y| classify(y).flags.in_pin) {
                    Some(y) => Some(diagram_check(&y)?),
                    None => None,
                }
            } else {
                None
            };
            if json {
                print_json(&json!({
                    "signature": x.signature().to_string(),
                    "twisted": twisted,
                    "matrix": m.to_json(),
                    "determinant": m.determinant(),
                    "diagram": diagram,
                }));
            } else {
                println!("{m}");
                if check_diagram {
                    match diagram {
                        Some(true) => println!("diagram: commutes"),
                        Some(false) => println!("diagram: does not commute"),
                        None => println!("diagram: skipped, not a Pin(1,3) element"),
                    }
                }
            }
            if diagram == Some(false) {
                return Err(Failure::Check);
            }
        }
        Command::Classify {
            expr,
            signature,
            json,
        } => {
            let x = evaluate(&expr, mode_for(signature))?;
            let c = classify(&x);
            if json {
                print_json(&c.to_json());
            } else {
                let f = c.flags;
                println!("element: {}", c.element);
                println!("clifford_group: {}", f.in_clifford_group);
                println!("twisted_clifford_group: {}", f.in_twisted_clifford_group);
                println!("pin: {}", f.in_pin);
                println!("spin: {}", f.in_spin);
                println!("reduced_pin: {}", f.in_reduced_pin);
                match &c.norm_value {
                    Some(n) => println!("norm: {}", n.to_multivector()),
                    None => println!("norm: {}", x.norm()),
                }
            }
        }
        Command::Embed { expr, kind, json } => {
            let z = to_complex(&evaluate(&expr, Mode::Cl13c)?);
            let y = embed(&z, kind.into());
            if json {
                print_json(&multivector_to_json(&y));
            } else {
                println!("{y}");
            }
        }
        Command::Extract { expr, kind, json } => {
            let y = evaluate(&expr, Mode::Cl23)?;
            let z = extract(&y, kind.into())?;
            if json {
                print_json(&json!({
                    "re": multivector_to_json(&z.real_part()),
                    "im": multivector_to_json(&z.imag_part()),
                }));
            } else {
                println!("{z}");
            }
        }
        Command::Gamma { basis, json } => {
            let space = match basis {
                Basis::Dirac => SpinorSpace::dirac(),
            };
            let gammas = space.gamma_matrices();
            if json {
                print_json(&gammas.iter().map(|g| g.to_json()).collect());
            } else {
                for (mu, g) in gammas.iter().enumerate() {
                    if mu > 0 {
                        println!();
                    }
                    println!("gamma{mu} =\n{g}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Parse(text, e)) => {
            eprintln!("{}", e.diagnostic(&text));
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
