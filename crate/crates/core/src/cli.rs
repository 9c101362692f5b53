//! The `smashkit` command line. Exit codes: 0 when every requested check
//! passes, 1 when a mathematical check fails, 2 on bad input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::biproduct::{
    antipode_formula_check, build_biproduct, check_dp_conditions, factorize_bialgebra, is_smash_biproduct,
    schrodinger_double, BiproductError,
};
use crate::catalog::{self, CatalogObject, CATALOG_NAMES};
use crate::classify::{self, SearchSpace, DEFAULT_PARAM_CAP};
use crate::cosmash::{build_cosmash, is_smash_coproduct};
use crate::field::FieldSpec;
use crate::format::{matrix_value, Document};
use crate::hopfmod::{check_twisted_module, r_long, r_switch, r_yetter_drinfeld, TwistedHopfModule};
use crate::report::Report;
use crate::smash::{build_smash, is_smash_product, SmashData};
use crate::structures::{check_bialgebra, compute_antipode, BialgebraCandidate, HopfAlgebra};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "smashkit",
    version,
    about = "Exact checks for smash products, coproducts and biproducts"
)]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Allow the slow exhaustive suites.
    #[arg(long, global = true)]
    pub slow: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckAs {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RChoice {
    Switch,
    Yd,
    Long,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleChoice {
    Regular,
    RegularTrivial,
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// All 2¹⁶ maps kC₂ ⊗ kC₂ → kC₂ ⊗ kC₂ over GF(2); needs --slow.
    C2c2Gf2,
    /// The closed-form families for kC₂ ⊗ kC₂ against enumeration.
    Families,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of a structure file.
    Check {
        file: PathBuf,
        /// Structure to check; defaults to the file's kind.
        #[arg(long = "as", value_enum)]
        as_kind: Option<CheckAs>,
    },
    /// Check that R makes A ⊗ B a smash product; -o writes A #_R B.
    Smash {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that W makes C ⊗ D a smash coproduct; -o writes the coalgebra.
    Cosmash {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a smash biproduct datum (L, H, R, W); -o writes the bialgebra.
    Biproduct {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recover (R, W) from a bialgebra factorisation witness; -o writes them.
    Factorize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the Drinfeld double of a Hopf algebra as a smash biproduct.
    Double {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate the normal maps R making A #_R B associative.
    Classify {
        #[arg(long = "A", alias = "a", required_unless_present = "suite")]
        a: Option<PathBuf>,
        #[arg(long = "B", alias = "b", required_unless_present = "suite")]
        b: Option<PathBuf>,
        #[arg(long, default_value = "prime:3")]
        field: FieldSpec,
        /// Candidate budget; defaults to $SMASHKIT_BUDGET or 10⁶.
        #[arg(long)]
        budget: Option<u64>,
        /// Maximum number of free parameters.
        #[arg(long, default_value_t = DEFAULT_PARAM_CAP)]
        cap: usize,
        /// Write each solution as a smash file into this directory.
        #[arg(long)]
        emit_solutions: Option<PathBuf>,
        /// Run a built-in suite instead of --A/--B.
        #[arg(long, value_enum, conflicts_with_all = ["a", "b"])]
        suite: Option<Suite>,
    },
    /// Build a catalog entry; with --json it is printed or written to -o.
    Catalog {
        name: Option<String>,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// For pointed Hopf algebras, emit the factorisation witness.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        list: bool,
    },
    /// Check a twisted Hopf module, from a file or built from --hopf.
    Hopfmod {
        #[arg(required_unless_present = "hopf")]
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        hopf: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "switch")]
        r: RChoice,
        #[arg(long, value_enum, default_value = "regular")]
        module: ModuleChoice,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// An input problem: exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> InputError {
        InputError(e.to_string())
    }
}

type CliResult = Result<Outcome, InputError>;

/// What a verb produced: reports deciding the exit code, plus extra
/// payload for JSON output and plain lines for text output.
#[derive(Default)]
pub struct Outcome {
    reports: Vec<Report>,
    data: Option<Value>,
    lines: Vec<String>,
}

impl Outcome {
    fn report(r: Report) -> Outcome {
        Outcome {
            reports: vec![r],
            ..Outcome::default()
        }
    }

    fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }
}

#[derive(Serialize)]
struct JsonOutcome<'a> {
    format: u64,
    kind: &'static str,
    passed: bool,
    reports: &'a [Report],
    #[serde(skip_serializing_if = "Option::is_none")]
    data: Option<&'a Value>,
}

/// Parses `args` (including the program name) and runs the verb, writing
/// to the given streams. Returns the exit code.
pub fn run_with(args: impl IntoIterator<Item = String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            if cli.json {
                let j = JsonOutcome {
                    format: crate::format::FORMAT_VERSION,
                    kind: "result",
                    passed: o.passed(),
                    reports: &o.reports,
                    data: o.data.as_ref(),
                };
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("serializable"));
            } else {
                for l in &o.lines {
                    let _ = writeln!(out, "{l}");
                }
                for r in &o.reports {
                    let _ = write!(out, "{r}");
                }
            }
            if o.passed() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run(args: impl IntoIterator<Item = String>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

fn load(path: &Path) -> Result<Document, InputError> {
    Document::load(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn save(doc: &Document, path: &Path) -> Result<(), InputError> {
    Ok(doc.save(path)?)
}

fn expect_kind<T>(doc: &Document, got: Option<T>, want: &str) -> Result<T, InputError> {
    got.ok_or_else(|| InputError(format!("expected a {want} file, found kind {:?}", doc.kind())))
}

fn load_hopf(path: &Path) -> Result<HopfAlgebra, InputError> {
    let doc = load(path)?;
    match doc {
        Document::Hopf(h) => Ok(h),
        other => {
            let b = expect_kind(&other, other.as_bialgebra(), "hopf")?;
            Ok(compute_antipode(&b)?)
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Check { file, as_kind } => check(&load(file)?, *as_kind),
        Command::Smash { file, output } => {
            let doc = load(file)?;
            let Document::Smash(d) = &doc else {
                return Err(InputError(format!(
                    "expected a smash file, found kind {:?}",
                    doc.kind()
                )));
            };
            let rep = is_smash_product(d);
            if let (Some(o), true) = (output, rep.passed()) {
                save(&Document::Algebra(build_smash(d)?), o)?;
            }
            Ok(Outcome::report(rep))
        }
        Command::Cosmash { file, output } => {
            let doc = load(file)?;
            let Document::Cosmash(d) = &doc else {
                return Err(InputError(format!(
                    "expected a cosmash file, found kind {:?}",
                    doc.kind()
                )));
            };
            let rep = is_smash_coproduct(d);
            if let (Some(o), true) = (output, rep.passed()) {
                save(&Document::Coalgebra(build_cosmash(d)?), o)?;
            }
            Ok(Outcome::report(rep))
        }
        Command::Biproduct { file, output } => {
            let doc = load(file)?;
            let Document::Biproduct(d) = &doc else {
                return Err(InputError(format!(
                    "expected a biproduct file, found kind {:?}",
                    doc.kind()
                )));
            };
            let summary = is_smash_biproduct(d);
            let mut reports = Vec::new();
            let mut lines = Vec::new();
            match check_dp_conditions(d) {
                Ok(dp) => reports.push(dp),
                Err(BiproductError::InputsNotBialgebras(which)) => lines.push(format!(
                    "{which} is not a bialgebra; DP conditions skipped, direct check only"
                )),
                Err(e) => return Err(e.into()),
            }
            let passed = summary.passed() && reports.iter().all(Report::passed);
            reports.push(summary);
            if let (Some(o), true) = (output, passed) {
                let k = build_biproduct(d)?;
                let out = match compute_antipode(&k) {
                    Ok(h) => Document::Hopf(h),
                    Err(_) => Document::Bialgebra(k),
                };
                save(&out, o)?;
            }
            Ok(Outcome {
                reports,
                lines,
                ..Outcome::default()
            })
        }
        Command::Factorize { file, output } => {
            let doc = load(file)?;
            let Document::Witness(w) = &doc else {
                return Err(InputError(format!(
                    "expected a witness file, found kind {:?}",
                    doc.kind()
                )));
            };
            let d = factorize_bialgebra(w)?;
            let rep = is_smash_biproduct(&d);
            let data = json!({"R": matrix_value(&d.r), "W": matrix_value(&d.w)});
            if let Some(o) = output {
                save(&Document::Biproduct(d.clone()), o)?;
            }
            Ok(Outcome {
                lines: vec![format!("R =\n{}W =\n{}", d.r, d.w)],
                reports: vec![rep],
                data: Some(data),
            })
        }
        Command::Double { file, output } => {
            let h = load_hopf(file)?;
            let (d, reading) = schrodinger_double(&h)?;
            let mut reports = vec![check_dp_conditions(&d)?];
            let l = compute_antipode(&d.l)?;
            reports.push(antipode_formula_check(&l, &h, &d.r)?);
            if let Some(o) = output {
                save(&Document::Biproduct(d.clone()), o)?;
            }
            Ok(Outcome {
                lines: vec![format!(
                    "double of a {}-dimensional Hopf algebra ({reading:?} reading), dimension {}",
                    h.dim(),
                    h.dim() * h.dim()
                )],
                reports,
                data: Some(json!({"reading": format!("{reading:?}"), "dim": h.dim() * h.dim()})),
            })
        }
        Command::Classify {
            a,
            b,
            field,
            budget,
            cap,
            emit_solutions,
            suite,
        } => match suite {
            Some(s) => run_suite(*s, *field, cli.slow),
            None => {
                let (a, b) = (a.as_deref().expect("required"), b.as_deref().expect("required"));
                let a = {
                    let d = load(a)?;
                    expect_kind(&d, d.as_algebra(), "algebra")?
                };
                let b = {
                    let d = load(b)?;
                    expect_kind(&d, d.as_algebra(), "algebra")?
                };
                let budget = budget.unwrap_or_else(classify::budget_from_env);
                classify_files(&a, &b, *field, budget, *cap, emit_solutions.as_deref())
            }
        },
        Command::Catalog {
            name,
            field,
            output,
            witness,
            list,
        } => match (name, list) {
            (Some(n), false) => catalog_entry(n, *field, output.as_deref(), *witness, cli.json),
            _ => Ok(Outcome {
                lines: CATALOG_NAMES.iter().map(|s| s.to_string()).collect(),
                data: Some(json!(CATALOG_NAMES)),
                ..Outcome::default()
            }),
        },
        Command::Hopfmod {
            file,
            hopf,
            r,
            module,
            output,
        } => {
            let t = match (file, hopf) {
                (Some(f), _) => {
                    let doc = load(f)?;
                    match doc {
                        Document::HopfModule(t) => *t,
                        other => {
                            return Err(InputError(format!(
                                "expected a hopfmod file, found kind {:?}",
                                other.kind()
                            )))
                        }
                    }
                }
                (None, Some(hf)) => {
                    let h = load_hopf(hf)?;
                    let r = match r {
                        RChoice::Switch => r_switch(&h),
                        RChoice::Yd => r_yetter_drinfeld(&h)?,
                        RChoice::Long => r_long(&h),
                    };
                    match module {
                        ModuleChoice::Regular => TwistedHopfModule::regular(&h, r)?,
                        ModuleChoice::RegularTrivial => TwistedHopfModule::regular_trivial_coaction(&h, r)?,
                        ModuleChoice::Trivial => TwistedHopfModule::trivial(&h, r)?,
                    }
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            if let Some(o) = output {
                save(&Document::HopfModule(Box::new(t.clone())), o)?;
            }
            Ok(Outcome::report(check_twisted_module(&t)))
        }
    }
}

fn check(doc: &Document, as_kind: Option<CheckAs>) -> CliResult {
    let as_kind = as_kind.or(match doc {
        Document::Algebra(_) => Some(CheckAs::Algebra),
        Document::Coalgebra(_) => Some(CheckAs::Coalgebra),
        Document::Bialgebra(_) => Some(CheckAs::Bialgebra),
        Document::Hopf(_) => Some(CheckAs::Hopf),
        _ => None,
    });
    let rep = match as_kind {
        Some(CheckAs::Algebra) => expect_kind(doc, doc.as_algebra(), "algebra")?.check(),
        Some(CheckAs::Coalgebra) => expect_kind(doc, doc.as_coalgebra(), "coalgebra")?.check(),
        Some(CheckAs::Bialgebra) => check_bialgebra(&expect_kind(doc, doc.as_bialgebra(), "bialgebra")?),
        Some(CheckAs::Hopf) => match doc {
            Document::Hopf(h) => h.check(),
            other => solve_antipode(&expect_kind(other, other.as_bialgebra(), "hopf")?),
        },
        None => match doc {
            Document::Smash(d) => is_smash_product(d),
            Document::Cosmash(d) => is_smash_coproduct(d),
            Document::Biproduct(d) => is_smash_biproduct(d),
            Document::HopfModule(t) => check_twisted_module(t),
            Document::Witness(w) => {
                let mut r = Report::new("factorisation witness");
                match factorize_bialgebra(w) {
                    Ok(d) => r.summarize("recovered (R, W) form a smash biproduct", &is_smash_biproduct(&d)),
                    Err(e) => {
                        r.push(crate::report::Check::new("witness factorizes", false).with_detail(e.to_string()));
                    }
                }
                r
            }
            Document::Group(g) => g.check(),
            Document::Matrix(_) => return Err(InputError("a bare matrix has no axioms to check".into())),
            _ => unreachable!("structure kinds handled above"),
        },
    };
    Ok(Outcome::report(rep))
}

/// Hopf check for a bialgebra without a stored antipode: solve for one.
fn solve_antipode(b: &BialgebraCandidate) -> Report {
    let mut rep = check_bialgebra(b);
    rep.title = "hopf algebra".into();
    if rep.passed() {
        match compute_antipode(b) {
            Ok(h) => {
                rep.check("antipode exists", true);
                for c in h.check().checks.into_iter().filter(|c| c.name.contains('S')) {
                    rep.push(c);
                }
            }
            Err(e) => {
                rep.push(crate::report::Check::new("antipode exists", false).with_detail(e.to_string()));
            }
        }
    }
    rep
}

fn classify_files(
    a: &crate::structures::FiniteDimAlgebra,
    b: &crate::structures::FiniteDimAlgebra,
    field: FieldSpec,
    budget: u64,
    cap: usize,
    emit: Option<&Path>,
) -> CliResult {
    let space = SearchSpace::new(a, b, field, cap)?;
    let found = classify::enumerate_space(&space, budget)?;
    if let Some(dir) = emit {
        std::fs::create_dir_all(dir).map_err(|e| InputError(format!("{}: {e}", dir.display())))?;
        for (i, c) in found.iter().enumerate() {
            let d = SmashData::new(a.clone(), b.clone(), c.r.clone())?;
            save(&Document::Smash(d), &dir.join(format!("solution_{i:04}.json")))?;
        }
    }
    let mut lines = vec![format!(
        "{} solution(s) among {} normal candidates over {field}",
        found.len(),
        space.candidates().unwrap_or(0)
    )];
    for (i, c) in found.iter().enumerate() {
        lines.push(format!("solution {i}:\n{}", c.r));
    }
    let solutions: Vec<Value> = found
        .iter()
        .map(|c| json!({"R": matrix_value(&c.r), "report": c.report}))
        .collect();
    let mut rep = Report::new("classification");
    rep.note(format!("{} solutions", found.len()));
    Ok(Outcome {
        reports: vec![rep],
        data: Some(json!({"count": found.len(), "field": field, "solutions": solutions})),
        lines,
    })
}

fn run_suite(s: Suite, field: FieldSpec, slow: bool) -> CliResult {
    match s {
        Suite::C2c2Gf2 => {
            if !slow {
                return Err(InputError("the exhaustive GF(2) suite runs only with --slow".into()));
            }
            let t = classify::exhaustive_c2c2_gf2();
            let mut rep = Report::new("characterizations agree on all 2^16 maps over GF(2)");
            rep.check("no disagreement", t.disagreements == 0);
            Ok(Outcome {
                lines: vec![format!(
                    "{} maps, {} smash products, {} disagreements",
                    t.total, t.smash_products, t.disagreements
                )],
                data: Some(serde_json::to_value(&t)?),
                reports: vec![rep],
            })
        }
        Suite::Families => Ok(Outcome::report(classify::verify_closed_families(field))),
    }
}

fn catalog_entry(name: &str, field: FieldSpec, output: Option<&Path>, witness: bool, json: bool) -> CliResult {
    let obj = catalog::by_name(name, field)?;
    let (doc, rep) = match obj {
        CatalogObject::Hopf(h) => {
            let r = h.check();
            (Document::Hopf(h), r)
        }
        CatalogObject::Pointed(p) => {
            let mut r = p.k.check();
            r.check(
                "closed-form antipode equals solved antipode",
                p.closed_antipode == p.k.antipode,
            );
            if witness {
                (Document::Witness(Box::new(p.witness.clone())), r)
            } else {
                (Document::Hopf(p.k.clone()), r)
            }
        }
        CatalogObject::Smash { data, .. } => {
            let r = is_smash_product(&data);
            (Document::Smash(data), r)
        }
        CatalogObject::Double(d) => {
            let r = check_dp_conditions(&d)?;
            (Document::Biproduct(*d), r)
        }
    };
    let mut out = Outcome::report(rep);
    match output {
        Some(o) => {
            save(&doc, o)?;
            out.lines
                .push(format!("wrote {} ({}) to {}", name, doc.kind(), o.display()));
        }
        None if json => out.data = Some(doc.to_value()),
        None => out.lines.push(doc.to_json()),
    }
    Ok(out)
}
