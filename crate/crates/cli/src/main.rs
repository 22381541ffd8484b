//! Batch command-line surface for the inverse monoid workbench.
//!
//! Semi-decision subcommands mirror their three-valued outcome in the exit
//! code: 0 confirmed, 1 refuted, 2 unknown/budget-exhausted. Other exits:
//! 64 usage, 65 unreadable or unparsable input, 66 unmet precondition,
//! 70 internal error. All commands are deterministic: identical inputs give
//! byte-identical outputs.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fpinv::finverse::{free_product_max, sprawling_max, wedge_upper_bound};
use fpinv::geometry::{distortion_profile, prefix_membership};
use fpinv::presentation::Presentation;
use fpinv::stephen::{
    approximate, test_equal, test_geq, test_right_unit, Budget, RightUnitTester, TriBool,
};
use fpinv::words::Word;

mod oraclespec;
mod output;

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_PRECONDITION: u8 = 66;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(
    name = "fpinv",
    version,
    about = "Workbench for finitely presented inverse monoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stephen's procedure: approximants and word-order semi-decision.
    #[command(subcommand)]
    Stephen(StephenCmd),
    /// Empirical group-distortion profiles.
    #[command(subcommand)]
    Distortion(DistortionCmd),
    /// Maximal-element searches.
    #[command(subcommand)]
    Finverse(FinverseCmd),
    /// Prefix-monoid membership.
    #[command(subcommand)]
    Prefix(PrefixCmd),
    /// Property A witness checking and transport.
    #[command(subcommand)]
    Propa(PropaCmd),
    /// Emit the named example presentations.
    #[command(subcommand)]
    Fixture(FixtureCmd),
}

#[derive(Args)]
struct BudgetArgs {
    /// Expansion rounds (or search radius cap, where documented).
    #[arg(long, default_value_t = 8)]
    rounds: usize,
    /// Working vertex cap.
    #[arg(long, default_value_t = 100_000)]
    max_vertices: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget::new(self.rounds.max(1), self.max_vertices.max(1))
    }
}

#[derive(Subcommand)]
enum StephenCmd {
    /// Build an approximant of the Schützenberger graph of a word.
    Approx {
        #[arg(short = 'p', long)]
        presentation: PathBuf,
        #[arg(short = 'w', long)]
        word: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the approximant as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the approximant as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Semi-decide [u] >= [w].
    TestGeq {
        #[arg(short = 'p', long)]
        presentation: PathBuf,
        #[arg(short = 'u', long)]
        upper: String,
        #[arg(short = 'w', long)]
        word: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Semi-decide [u] = [w], refuting through a group oracle if given.
    TestEqual {
        #[arg(short = 'p', long)]
        presentation: PathBuf,
        #[arg(short = 'u', long)]
        upper: String,
        #[arg(short = 'w', long)]
        word: String,
        /// Oracle spec: fg:<rank>, fp:<spec>,<spec>, or rw:<path>.
        #[arg(long)]
        oracle: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Semi-decide whether w is a right unit.
    RightUnit {
        #[arg(short = 'p', long)]
        presentation: PathBuf,
        #[arg(short = 'w', long)]
        word: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum DistortionCmd {
    /// Distortion table of one approximant: max graph distance per group
    /// distance bucket.
    Profile {
        #[arg(short = 'p', long)]
        presentation: PathBuf,
        #[arg(short = 'w', long, default_value = "1")]
        word: String,
        #[arg(long)]
        oracle: String,
        /// Group-distance cap for the table rows.
        #[arg(long, default_value_t = 8)]
        radius: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the JSON table here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// stdout format: text or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Subcommand)]
enum FinverseCmd {
    /// Greatest element of a sigma-class via the sprawling search
    /// (--rounds caps the search radius).
    Max {
        #[arg(short = 'p', long)]
        presentation: PathBuf,
        #[arg(short = 'g', long)]
        class: String,
        #[arg(long)]
        oracle: String,
        /// Use the free-product block decomposition over the relational
        /// generators instead of the plain sprawling search.
        #[arg(long)]
        blocks: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Common upper bound of two sigma-related words.
    Wedge {
        #[arg(short = 'p', long)]
        presentation: PathBuf,
        #[arg(short = 's', long)]
        left: String,
        #[arg(short = 't', long)]
        right: String,
        #[arg(long)]
        oracle: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Distortion bound phi(n) = max representative length over |w| <= n.
    Phi {
        #[arg(short = 'p', long)]
        presentation: PathBuf,
        #[arg(short = 'n', long)]
        bound: usize,
        #[arg(long)]
        oracle: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum PrefixCmd {
    /// Membership of a group element in the prefix monoid.
    Member {
        #[arg(short = 'p', long)]
        presentation: PathBuf,
        #[arg(short = 'g', long)]
        element: String,
        #[arg(long)]
        oracle: String,
        /// Distortion bound: none, linear, or linear:<k> for n -> k*n.
        #[arg(long, default_value = "none")]
        phi: String,
        /// Right-unit tester: budgeted (sound, partial) or munn (total,
        /// heuristic refutations).
        #[arg(long, default_value = "munn")]
        tester: String,
        /// Closure radius for the positive search.
        #[arg(long, default_value_t = 6)]
        radius: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum PropaCmd {
    /// Verify a witness against a space.
    Check {
        #[arg(short = 'X', long)]
        space: PathBuf,
        #[arg(short = 'w', long)]
        witness: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Transport a witness along a weak contraction.
    Transport {
        #[arg(short = 'X', long)]
        domain: PathBuf,
        #[arg(short = 'Y', long)]
        codomain: PathBuf,
        #[arg(short = 'f', long)]
        map: PathBuf,
        #[arg(short = 'w', long)]
        witness: PathBuf,
        /// Output path for the transported witness.
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Subcommand)]
enum FixtureCmd {
    /// One-relator monoid with unbounded distortion into a free group.
    Scary {
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
        /// Also write the group-image rewriting oracle.
        #[arg(long)]
        rules_out: Option<PathBuf>,
    },
    /// Inv<a,b | a b a^-n b^-1 = 1> (group image BS(1,n)).
    Bs {
        #[arg(long)]
        n: usize,
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
        #[arg(long)]
        rules_out: Option<PathBuf>,
    },
    /// Special presentation over X and {t} with isometrically embedded
    /// Schützenberger graphs.
    Gray {
        /// Space-separated generator names.
        #[arg(long)]
        gens: String,
        /// Group relators over the generators (repeatable; use 1 for the
        /// empty relator).
        #[arg(long = "relator")]
        relators: Vec<String>,
        /// Submonoid words s_i (repeatable).
        #[arg(long = "s-word")]
        s_words: Vec<String>,
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Clifford monoid gluing a group to a marked copy of a subgroup.
    Clifford {
        #[arg(long)]
        y_gens: String,
        #[arg(long = "y-relator")]
        y_relators: Vec<String>,
        #[arg(long)]
        x_gens: String,
        #[arg(long = "x-relator")]
        x_relators: Vec<String>,
        /// Space-separated Y indices, one per X generator.
        #[arg(long)]
        map: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => e.exit(),
    }
}

/// Error carrying its intended process exit code.
struct CliError {
    code: u8,
    msg: String,
}

impl CliError {
    fn data(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_DATA,
            msg: msg.into(),
        }
    }
    fn precondition(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_PRECONDITION,
            msg: msg.into(),
        }
    }
    fn internal(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INTERNAL,
            msg: msg.into(),
        }
    }
    fn exit(self) -> ExitCode {
        eprintln!("fpinv: {}", self.msg);
        ExitCode::from(self.code)
    }
}

fn tri_exit(t: TriBool) -> ExitCode {
    let (code, text) = match t {
        TriBool::Confirmed => (0, "confirmed"),
        TriBool::Refuted => (1, "refuted"),
        TriBool::Unknown => (2, "unknown"),
    };
    println!("{text}");
    ExitCode::from(code)
}

fn load_presentation(path: &PathBuf) -> Result<Presentation, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::data(format!("{}: {e}", path.display())))?;
    fpinv::presentation::parse_presentation(&text)
        .map_err(|e| CliError::data(format!("{}: {e}", path.display())))
}

fn parse_word(p: &Presentation, text: &str) -> Result<Word, CliError> {
    p.parse_word(text)
        .map_err(|e| CliError::data(format!("word `{text}`: {e}")))
}

fn write_file(path: &PathBuf, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::internal(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Stephen(cmd) => run_stephen(cmd),
        Command::Distortion(cmd) => run_distortion(cmd),
        Command::Finverse(cmd) => run_finverse(cmd),
        Command::Prefix(cmd) => run_prefix(cmd),
        Command::Propa(cmd) => run_propa(cmd),
        Command::Fixture(cmd) => run_fixture(cmd),
    }
}

fn run_stephen(cmd: StephenCmd) -> Result<ExitCode, CliError> {
    match cmd {
        StephenCmd::Approx {
            presentation,
            word,
            budget,
            dot,
            json,
        } => {
            let p = load_presentation(&presentation)?;
            let w = parse_word(&p, &word)?;
            let app = approximate(&p, &w, &budget.budget());
            println!(
                "vertices {}  rounds {}  saturated {}  vertex-limit {}",
                app.graph.vertex_count(),
                app.rounds_done,
                app.saturated,
                app.vertex_limit_hit
            );
            if let Some(path) = dot {
                write_file(&path, &app.graph.to_dot(p.alphabet().names()))?;
            }
            if let Some(path) = json {
                write_file(&path, &output::approximant_json(&app, p.alphabet()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        StephenCmd::TestGeq {
            presentation,
            upper,
            word,
            budget,
        } => {
            let p = load_presentation(&presentation)?;
            let u = parse_word(&p, &upper)?;
            let w = parse_word(&p, &word)?;
            Ok(tri_exit(test_geq(&p, &u, &w, &budget.budget())))
        }
        StephenCmd::TestEqual {
            presentation,
            upper,
            word,
            oracle,
            budget,
        } => {
            let p = load_presentation(&presentation)?;
            let u = parse_word(&p, &upper)?;
            let w = parse_word(&p, &word)?;
            let resolved = oracle
                .map(|spec| oraclespec::resolve(&spec, &p))
                .transpose()?;
            Ok(tri_exit(test_equal(
                &p,
                &u,
                &w,
                &budget.budget(),
                resolved.as_ref().map(|r| r.oracle.as_ref()),
            )))
        }
        StephenCmd::RightUnit {
            presentation,
            word,
            budget,
        } => {
            let p = load_presentation(&presentation)?;
            let w = parse_word(&p, &word)?;
            Ok(tri_exit(test_right_unit(&p, &w, &budget.budget())))
        }
    }
}

fn run_distortion(cmd: DistortionCmd) -> Result<ExitCode, CliError> {
    let DistortionCmd::Profile {
        presentation,
        word,
        oracle,
        radius,
        budget,
        json,
        format,
    } = cmd;
    let p = load_presentation(&presentation)?;
    if !p.e_unitary_asserted {
        return Err(CliError::precondition(
            "distortion profiles need the e_unitary flag in the presentation file",
        ));
    }
    let w = parse_word(&p, &word)?;
    let resolved = oraclespec::resolve(&oracle, &p)?;
    let table = distortion_profile(
        &p,
        &w,
        resolved.oracle.as_ref(),
        &budget.budget(),
        radius,
        &resolved.names,
    )
    .map_err(|e| CliError::precondition(e.to_string()))?;
    match format.as_str() {
        "text" => print!("{}", table.to_text()),
        "json" => println!("{}", table.to_json()),
        other => {
            return Err(CliError {
                code: EXIT_USAGE,
                msg: format!("unknown format `{other}`"),
            })
        }
    }
    if let Some(path) = json {
        write_file(&path, &table.to_json())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run_finverse(cmd: FinverseCmd) -> Result<ExitCode, CliError> {
    match cmd {
        FinverseCmd::Max {
            presentation,
            class,
            oracle,
            blocks,
            budget,
        } => {
            let p = load_presentation(&presentation)?;
            let g = parse_word(&p, &class)?;
            let resolved = oraclespec::resolve(&oracle, &p)?;
            let result = if blocks {
                free_product_max(&p, &g, resolved.oracle.as_ref(), &budget.budget())
            } else {
                sprawling_max(&p, &g, resolved.oracle.as_ref(), &budget.budget())
            }
            .map_err(|e| CliError::precondition(e.to_string()))?;
            match result {
                Some(m) => {
                    let names = fpinv::words::Alphabet::new(resolved.names.clone());
                    println!(
                        "representative: {}",
                        p.alphabet().format_word(&m.representative)
                    );
                    println!("sigma-class: {}", names.format_word(&m.sigma_class));
                    println!(
                        "budget used: {} radius steps cap, {} vertices cap",
                        budget.rounds, budget.max_vertices
                    );
                    print!(
                        "{}",
                        output::certificate_text(&m.certificate, p.alphabet(), &names)
                    );
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("unknown (budget exhausted)");
                    Ok(ExitCode::from(2))
                }
            }
        }
        FinverseCmd::Wedge {
            presentation,
            left,
            right,
            oracle,
            budget,
        } => {
            let p = load_presentation(&presentation)?;
            let s = parse_word(&p, &left)?;
            let t = parse_word(&p, &right)?;
            let resolved = oraclespec::resolve(&oracle, &p)?;
            match wedge_upper_bound(&p, &s, &t, resolved.oracle.as_ref(), &budget.budget()) {
                Ok(Some(w)) => {
                    println!("{}", p.alphabet().format_word(&w));
                    Ok(ExitCode::SUCCESS)
                }
                Ok(None) => {
                    println!("unknown (budget exhausted)");
                    Ok(ExitCode::from(2))
                }
                Err(e) => Err(CliError::precondition(e.to_string())),
            }
        }
        FinverseCmd::Phi {
            presentation,
            bound,
            oracle,
            budget,
        } => {
            let p = load_presentation(&presentation)?;
            let resolved = oraclespec::resolve(&oracle, &p)?;
            let b = budget.budget();
            let mut max_fn = |w: &Word| {
                free_product_max(&p, w, resolved.oracle.as_ref(), &b).and_then(|m| {
                    m.map(|m| m.representative)
                        .ok_or(fpinv::finverse::FInverseError::OracleInconclusive)
                })
            };
            match fpinv::finverse::phi_from_max(&p, &mut max_fn, bound) {
                Ok(phi) => {
                    println!("phi({bound}) = {phi}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("fpinv: {e}");
                    Ok(ExitCode::from(2))
                }
            }
        }
    }
}

fn run_prefix(cmd: PrefixCmd) -> Result<ExitCode, CliError> {
    let PrefixCmd::Member {
        presentation,
        element,
        oracle,
        phi,
        tester,
        radius,
        budget,
    } = cmd;
    let p = load_presentation(&presentation)?;
    let g = parse_word(&p, &element)?;
    let resolved = oraclespec::resolve(&oracle, &p)?;
    let b = budget.budget();
    let phi_fn: Option<Box<dyn Fn(u64) -> u64>> = match phi.as_str() {
        "none" => None,
        "linear" => Some(Box::new(|n| n)),
        other => match other
            .strip_prefix("linear:")
            .and_then(|k| k.parse::<u64>().ok())
        {
            Some(k) => Some(Box::new(move |n| k * n)),
            None => {
                return Err(CliError {
                    code: EXIT_USAGE,
                    msg: format!("unknown phi `{other}`"),
                })
            }
        },
    };
    let tester = match tester.as_str() {
        "budgeted" => RightUnitTester::budgeted(&p, b),
        "munn" => RightUnitTester::munn_refined(&p, b),
        other => {
            return Err(CliError {
                code: EXIT_USAGE,
                msg: format!("unknown tester `{other}`"),
            })
        }
    };
    let result = prefix_membership(
        &p,
        &g,
        resolved.oracle.as_ref(),
        phi_fn.as_ref().map(|f| f.as_ref() as &dyn Fn(u64) -> u64),
        &tester,
        radius,
        &b,
    )
    .map_err(|e| CliError::precondition(e.to_string()))?;
    Ok(tri_exit(result))
}

fn run_propa(cmd: PropaCmd) -> Result<ExitCode, CliError> {
    use fpinv::propa::{analyze_contraction, check_witness, io, transport_witness};
    match cmd {
        PropaCmd::Check {
            space,
            witness,
            tol,
        } => {
            let sp =
                io::space_from_json(&read(&space)?).map_err(|e| CliError::data(e.to_string()))?;
            let w = io::witness_from_json(&read(&witness)?, sp.len())
                .map_err(|e| CliError::data(e.to_string()))?;
            let report = check_witness(&sp, &w, &tol);
            if report.passed() {
                println!("witness ok");
                Ok(ExitCode::SUCCESS)
            } else {
                for v in &report.violations {
                    println!("violation: {v:?}");
                }
                Ok(ExitCode::from(1))
            }
        }
        PropaCmd::Transport {
            domain,
            codomain,
            map,
            witness,
            out,
            tol,
        } => {
            let x =
                io::space_from_json(&read(&domain)?).map_err(|e| CliError::data(e.to_string()))?;
            let y = io::space_from_json(&read(&codomain)?)
                .map_err(|e| CliError::data(e.to_string()))?;
            let f = io::map_from_json(&read(&map)?).map_err(|e| CliError::data(e.to_string()))?;
            let w = io::witness_from_json(&read(&witness)?, y.len())
                .map_err(|e| CliError::data(e.to_string()))?;
            let cm = analyze_contraction(&x, &y, &f)
                .map_err(|e| CliError::precondition(e.to_string()))?;
            let result = transport_witness(&x, &y, &cm, &w, &tol)
                .map_err(|e| CliError::precondition(e.to_string()))?;
            let report = check_witness(&x, &result.witness, &tol);
            println!(
                "k {}  c {}  S' {}  output-check {}",
                cm.k,
                result.c,
                result.s_prime,
                if report.passed() { "ok" } else { "FAILED" }
            );
            let text = io::witness_to_json(&result.witness);
            match out {
                Some(path) => write_file(&path, &text)?,
                None => println!("{text}"),
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(CliError::internal(
                    "transported witness failed verification",
                ))
            }
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::data(format!("{}: {e}", path.display())))
}

fn run_fixture(cmd: FixtureCmd) -> Result<ExitCode, CliError> {
    let emit = |p: &Presentation, out: Option<PathBuf>| -> Result<(), CliError> {
        match out {
            Some(path) => write_file(&path, &p.print()),
            None => {
                print!("{}", p.print());
                Ok(())
            }
        }
    };
    match cmd {
        FixtureCmd::Scary { out, rules_out } => {
            let p = fpinv::presentation::fixture_onerelator_scary();
            emit(&p, out)?;
            if let Some(path) = rules_out {
                write_file(
                    &path,
                    &fpinv::oracle::format_rules_file(&fpinv::oracle::scary_rules_file()),
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
        FixtureCmd::Bs { n, out, rules_out } => {
            let p =
                fpinv::presentation::fixture_bs(n).map_err(|e| CliError::data(e.to_string()))?;
            emit(&p, out)?;
            if let Some(path) = rules_out {
                write_file(
                    &path,
                    &fpinv::oracle::format_rules_file(&fpinv::oracle::bs_rules_file(n)),
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
        FixtureCmd::Gray {
            gens,
            relators,
            s_words,
            out,
        } => {
            let names: Vec<String> = gens.split_whitespace().map(|s| s.to_string()).collect();
            let alphabet = fpinv::words::Alphabet::new(names.clone());
            let parse = |texts: &[String]| -> Result<Vec<Word>, CliError> {
                texts
                    .iter()
                    .map(|t| {
                        alphabet
                            .parse_word(t)
                            .map_err(|e| CliError::data(e.to_string()))
                    })
                    .collect()
            };
            let relators = parse(&relators)?;
            let s_words = parse(&s_words)?;
            let p = fpinv::presentation::fixture_gray(&names, &relators, &s_words)
                .map_err(|e| CliError::data(e.to_string()))?;
            emit(&p, out)?;
            Ok(ExitCode::SUCCESS)
        }
        FixtureCmd::Clifford {
            y_gens,
            y_relators,
            x_gens,
            x_relators,
            map,
        } => {
            let parse_group =
                |gens: &str,
                 rels: &[String]|
                 -> Result<fpinv::presentation::GroupPresentation, CliError> {
                    let names: Vec<String> =
                        gens.split_whitespace().map(|s| s.to_string()).collect();
                    let alphabet = fpinv::words::Alphabet::new(names);
                    let relators = rels
                        .iter()
                        .map(|t| {
                            alphabet
                                .parse_word(t)
                                .map_err(|e| CliError::data(e.to_string()))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(fpinv::presentation::GroupPresentation { alphabet, relators })
                };
            let g = parse_group(&y_gens, &y_relators)?;
            let h = parse_group(&x_gens, &x_relators)?;
            let map: Vec<u16> = map
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| CliError::data(format!("bad map index `{t}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let p = fpinv::presentation::fixture_clifford(&g, &h, &map)
                .map_err(|e| CliError::data(e.to_string()))?;
            emit(&p, None)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
