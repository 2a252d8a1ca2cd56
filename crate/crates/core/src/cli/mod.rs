//! Command-line front end: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 completed, 2 input error, 3 hypothesis not satisfied,
//! 4 internal assertion failure.

mod file;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

pub use file::AlgebraFile;
pub use report::{AlgebraSummary, Report};

use crate::artin::{build_algebra, ArtinAlgebra, IdealRep, Presentation};
use crate::construct::{
    ci_cover, colength_two_decision, find_retract, g_bounds, idealization, teter_cover, thm51_construct,
    verify_cover, BoundsConfig, ColengthTwoVerdict,
};
use crate::duality::{trace_of_canonical, Duality, ModuleMap, SearchConfig, TeterConclusion};
use crate::error::{Error, Result};
use crate::oracle::{
    enumerate_ideals, gcolength_upper_exhaustive, min_selfdual_colength_exhaustive, EnumConfig,
};
use crate::polyring::Polynomial;
use report::{cover_payload, ideal_text, selfdual_payload, teter_payload};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "gcolength",
    version,
    about = "Gorenstein colength bounds and Gorenstein covers of Artinian algebras"
)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Options {
    /// Emit the machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random trials per witness search.
    #[arg(long, global = true, default_value_t = 20)]
    trials: usize,
    /// Largest colength scanned for self-dual ideals.
    #[arg(long, global = true, default_value_t = 2)]
    max_colength: usize,
    /// Largest truncation N tried when building `T/b`.
    #[arg(long, global = true, default_value_t = 50)]
    max_n: u32,
    /// Largest cover excess searched by the oracle.
    #[arg(long, global = true, default_value_t = 3)]
    max_extra: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Length, Hilbert function, socle and trace of the canonical module.
    Analyze { file: PathBuf },
    /// Every lower and upper bound on the Gorenstein colength.
    Bounds { file: PathBuf },
    /// The `g(R) <= 1` criteria.
    Teter { file: PathBuf },
    /// Whether an ideal is isomorphic to its dual.
    Selfdual {
        file: PathBuf,
        /// Label of an `aux` ideal, or `m` for the maximal ideal.
        #[arg(long, default_value = "a")]
        ideal: String,
    },
    /// Build a Gorenstein cover.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Verify `T/c -> T/b` for `c` from a file or the `cover` aux ideal.
    VerifyCover {
        file: PathBuf,
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// Scan ideals of colength at most two for a cover of excess two.
    Colength2 { file: PathBuf },
    /// Exhaustive search over small prime fields.
    Oracle { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum ConstructKind {
    /// `R ⋉ ω`.
    Idealization { file: PathBuf },
    /// A random complete intersection inside `b`.
    Ci { file: PathBuf },
    /// The kernel construction from a self-dual ideal `a` and parameters `d ⊆ a`.
    Thm51 {
        file: PathBuf,
        #[arg(long, default_value = "a")]
        a: String,
        /// Defaults to the `a` ideal when the file has no such aux line.
        #[arg(long, default_value = "d")]
        d: String,
    },
    /// Twisted idealization over an algebra retract.
    TeterCover {
        file: PathBuf,
        #[arg(long, default_value = "a")]
        a: String,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Hypothesis(_) | Error::CharacteristicTwo => EXIT_HYPOTHESIS,
        Error::Internal(_)
        | Error::DivisionByZero
        | Error::DimensionMismatch(_)
        | Error::FieldMismatch(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

/// Runs the program on `argv` (without the program name) and returns the
/// exit code.
pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(std::iter::once("gcolength".to_string()).chain(argv.iter().cloned()))
    {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let session = Session {
        opts: cli.opts.clone(),
        echo: argv.join(" "),
    };
    let (code, text) = match session.dispatch(&cli.command) {
        Ok(report) => {
            if let Some(msg) = report.payload.get("error").and_then(|v| v.as_str()) {
                let _ = writeln!(err, "{msg}");
                (EXIT_HYPOTHESIS, Some(report))
            } else {
                (EXIT_OK, Some(report))
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            (exit_code(&e), None)
        }
    };
    if let Some(report) = text {
        let rendered = if session.opts.json {
            report.to_json()
        } else {
            report.to_text()
        };
        let _ = out.write_all(rendered.as_bytes());
    }
    code
}

type ConstructRunner = fn(&Session, &Input, &ConstructKind) -> Result<Report>;

struct Session {
    opts: Options,
    echo: String,
}

/// The parsed file, its presentation and the algebra.
struct Input {
    file: AlgebraFile,
    pres: Presentation,
    r: ArtinAlgebra,
}

impl Session {
    fn search(&self) -> SearchConfig {
        SearchConfig {
            seed: self.opts.seed,
            trials: self.opts.trials,
            ..SearchConfig::default()
        }
    }

    fn enum_config(&self) -> EnumConfig {
        EnumConfig::default().with_max_extra(self.opts.max_extra)
    }

    fn load(&self, path: &Path) -> Result<Input> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        let file = AlgebraFile::parse(&text)?;
        let pres = file.presentation(self.opts.max_n)?;
        let r = build_algebra(&pres)?;
        Ok(Input { file, pres, r })
    }

    fn report(&self, input: &Input, payload: serde_json::Value, verdicts: Vec<String>) -> Report {
        Report {
            command: self.echo.clone(),
            seed: self.opts.seed,
            algebra: AlgebraSummary::new(&input.r, input.pres.format_generators()),
            payload,
            verdicts,
        }
    }

    /// Hypothesis failures become reports; everything else propagates.
    fn guarded(&self, input: &Input, result: Result<Report>) -> Result<Report> {
        match result {
            Err(e) if exit_code(&e) == EXIT_HYPOTHESIS => Ok(self.report(
                input,
                json!({ "error": e.to_string() }),
                vec!["hypothesis-failed".into()],
            )),
            other => other,
        }
    }

    fn dispatch(&self, cmd: &Command) -> Result<Report> {
        match cmd {
            Command::Analyze { file } => self.analyze(&self.load(file)?),
            Command::Bounds { file } => self.bounds(&self.load(file)?),
            Command::Teter { file } => self.teter(&self.load(file)?),
            Command::Selfdual { file, ideal } => {
                let input = self.load(file)?;
                self.selfdual(&input, ideal)
            }
            Command::Construct { kind } => {
                let (path, run): (&PathBuf, ConstructRunner) = match kind {
                    ConstructKind::Idealization { file } => (file, Session::construct_idealization),
                    ConstructKind::Ci { file } => (file, Session::construct_ci),
                    ConstructKind::Thm51 { file, .. } => (file, Session::construct_thm51),
                    ConstructKind::TeterCover { file, .. } => (file, Session::construct_teter_cover),
                };
                let input = self.load(path)?;
                self.guarded(&input, run(self, &input, kind))
            }
            Command::VerifyCover { file, cover } => {
                let input = self.load(file)?;
                let c = match cover {
                    Some(path) => {
                        let text = std::fs::read_to_string(path)
                            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                        input.file.parse_ideal_file(&text)?
                    }
                    None => input.file.aux("cover")?.to_vec(),
                };
                let res = verify_cover(&input.pres, &c).map(|rep| {
                    let verdict = if rep.checks.all_pass() {
                        "certified-yes"
                    } else {
                        "certified-no"
                    };
                    self.report(
                        &input,
                        cover_payload(&rep, &input.file.vars),
                        vec![verdict.into()],
                    )
                });
                self.guarded(&input, res)
            }
            Command::Colength2 { file } => self.colength2(&self.load(file)?),
            Command::Oracle { file } => self.oracle(&self.load(file)?),
        }
    }

    fn analyze(&self, input: &Input) -> Result<Report> {
        let r = &input.r;
        let trace = trace_of_canonical(r);
        let payload = json!({
            "truncation": r.found_n(),
            "loewy-length": r.loewy_length(),
            "socle": ideal_text(r, &r.socle()),
            "trace-colength": trace.colength(),
            "trace": ideal_text(r, &trace),
        });
        let verdicts = if r.is_gorenstein() {
            vec!["g-certified(0)".into()]
        } else {
            vec![]
        };
        Ok(self.report(input, payload, verdicts))
    }

    fn bounds(&self, input: &Input) -> Result<Report> {
        let cfg = BoundsConfig {
            search: self.search(),
            max_colength: self.opts.max_colength,
            oracle: self.enum_config(),
        };
        let b = g_bounds(&input.pres, &cfg)?;
        if !b.chain_holds() {
            return Err(Error::Internal("bound chain violated".into()));
        }
        let mut payload = serde_json::to_value(&b).expect("bounds serialize");
        payload["trials"] = json!(self.opts.trials);
        payload["min-upper"] = json!(b.min_upper());
        let verdicts = b
            .g_certified
            .map(|g| format!("g-certified({g})"))
            .into_iter()
            .collect();
        Ok(self.report(input, payload, verdicts))
    }

    fn teter(&self, input: &Input) -> Result<Report> {
        let t = Duality::new(&input.r).teter_check(&self.search())?;
        let verdict = match t.conclusion {
            TeterConclusion::Gorenstein => "g-certified(0)",
            TeterConclusion::AtMostOne => "g-certified(1)",
            TeterConclusion::AtLeastTwo => "certified-no",
            TeterConclusion::Unknown => "probable-no",
        };
        Ok(self.report(input, teter_payload(&t), vec![verdict.into()]))
    }

    /// Generators of an `aux` ideal; `m` without such a line means the
    /// variables.
    fn gens_by_label(&self, input: &Input, label: &str) -> Result<Vec<Polynomial>> {
        match input.file.aux.get(label) {
            Some(gens) => Ok(gens.clone()),
            None if label == "m" => {
                let n = input.pres.nvars();
                Ok((0..n)
                    .map(|i| Polynomial::variable(input.pres.field, n, i))
                    .collect())
            }
            None => Err(Error::InvalidInput(format!("no `aux {label} = ...` line"))),
        }
    }

    fn ideal_by_label(&self, input: &Input, label: &str) -> Result<IdealRep> {
        input.r.ideal_span(&self.gens_by_label(input, label)?)
    }

    fn selfdual(&self, input: &Input, label: &str) -> Result<Report> {
        let a = self.ideal_by_label(input, label)?;
        let res = Duality::new(&input.r).self_dual_witness(&a, &self.search());
        let mut payload = selfdual_payload(&res, self.opts.trials);
        payload["ideal"] = json!(label);
        payload["generators"] = json!(ideal_text(&input.r, &a));
        payload["colength"] = json!(a.colength());
        Ok(self.report(input, payload, vec![res.label().into()]))
    }

    fn construct_idealization(&self, input: &Input, _: &ConstructKind) -> Result<Report> {
        let c = idealization(&input.r)?;
        Ok(self.cover_report(input, &c))
    }

    fn construct_ci(&self, input: &Input, _: &ConstructKind) -> Result<Report> {
        let (_, c) = ci_cover(&input.pres, self.opts.seed)?;
        Ok(self.cover_report(input, &c))
    }

    /// A symmetric witness for `a`: the Teter route when `a = m`, otherwise
    /// a symmetrized self-duality witness.
    fn symmetric_witness(&self, input: &Input, a: &IdealRep) -> Result<ModuleMap> {
        let d = Duality::new(&input.r);
        if *a == input.r.maximal_ideal() {
            if let Some(f) = d.teter_check(&self.search())?.symmetric_witness() {
                return Ok(f.clone());
            }
        }
        let res = d.self_dual_witness(a, &self.search());
        let f = res
            .witness()
            .ok_or_else(|| Error::Hypothesis(format!("(a) a/b is not shown self-dual ({})", res.label())))?;
        d.symmetrize(f)
    }

    fn construct_thm51(&self, input: &Input, kind: &ConstructKind) -> Result<Report> {
        let ConstructKind::Thm51 { a, d, .. } = kind else {
            unreachable!()
        };
        let a_gens = self.gens_by_label(input, a)?;
        let d_gens = match self.gens_by_label(input, d) {
            Ok(g) => g,
            Err(_) => a_gens.clone(),
        };
        let a_bar = input.r.ideal_span(&a_gens)?;
        let f = self.symmetric_witness(input, &a_bar)?;
        let c = thm51_construct(&input.pres, &a_gens, &d_gens, &f)?;
        Ok(self.cover_report(input, &c))
    }

    fn construct_teter_cover(&self, input: &Input, kind: &ConstructKind) -> Result<Report> {
        let ConstructKind::TeterCover { a, .. } = kind else {
            unreachable!()
        };
        let a = self.ideal_by_label(input, a)?;
        let res = Duality::new(&input.r).self_dual_witness(&a, &self.search());
        let f = res
            .witness()
            .ok_or_else(|| Error::Hypothesis(format!("a is not shown self-dual ({})", res.label())))?;
        let retract = find_retract(&input.r, &a)
            .ok_or_else(|| Error::Hypothesis("no algebra retract found for a".into()))?;
        let c = teter_cover(&input.r, &a, f, &retract)?;
        Ok(self.cover_report(input, &c))
    }

    fn cover_report(&self, input: &Input, c: &crate::construct::CoverReport) -> Report {
        let verdict = if c.checks.all_pass() {
            "certified-yes"
        } else {
            "certified-no"
        };
        self.report(input, cover_payload(c, &input.file.vars), vec![verdict.into()])
    }

    fn colength2(&self, input: &Input) -> Result<Report> {
        let rep = colength_two_decision(&input.pres, &self.search())?;
        let vars = &input.file.vars;
        let candidates: Vec<_> = rep
            .candidates
            .iter()
            .map(|c| {
                json!({
                    "generators": c.generators.iter().map(|g| g.format(vars)).collect::<Vec<_>>(),
                    "selfdual": c.selfdual.label(),
                    "b-in-a2": c.b_in_a2,
                    "b-in-a3": c.b_in_a3,
                    "colon-in-a2": c.colon_in_a2,
                    "excess": c.cover.as_ref().map(|r| r.excess()),
                    "failure": c.failure,
                })
            })
            .collect();
        let payload = json!({
            "b-in-m6": rep.b_in_m6,
            "two-invertible": rep.two_invertible,
            "hypotheses-hold": rep.hypotheses_hold(),
            "gorenstein": rep.gorenstein,
            "teter": rep.teter.as_ref().map(teter_payload),
            "exhaustive": rep.exhaustive,
            "candidates": candidates,
            "verdict": rep.verdict,
            "cover": rep.cover.as_ref().map(|c| cover_payload(c, vars)),
            "seed": rep.seed,
            "trials": rep.trials,
        });
        let at_least_two = rep
            .teter
            .as_ref()
            .is_some_and(|t| t.conclusion == TeterConclusion::AtLeastTwo);
        let verdict = match rep.verdict {
            ColengthTwoVerdict::Gorenstein => "g-certified(0)",
            ColengthTwoVerdict::AtMostOne => "g-certified(1)",
            ColengthTwoVerdict::AtMostTwo if at_least_two => "g-certified(2)",
            ColengthTwoVerdict::AtMostTwo => "certified-yes",
            ColengthTwoVerdict::NotFound { certified: true } => "certified-no",
            ColengthTwoVerdict::NotFound { certified: false } => "probable-no",
        };
        Ok(self.report(input, payload, vec![verdict.into()]))
    }

    fn oracle(&self, input: &Input) -> Result<Report> {
        let cfg = self.enum_config();
        let r = &input.r;
        let ideals = enumerate_ideals(r, &cfg)?;
        let (lower, minimizers) = min_selfdual_colength_exhaustive(r, &cfg)?;
        let upper = gcolength_upper_exhaustive(&input.pres, &cfg)?;
        let trace = trace_of_canonical(r).colength();
        if trace > lower || upper.as_ref().is_some_and(|(u, _)| *u < lower) {
            return Err(Error::Internal("oracle bounds contradict the chain".into()));
        }
        let vars = &input.file.vars;
        let payload = json!({
            "ideals": ideals.len(),
            "trace-colength": trace,
            "min-selfdual-colength": lower,
            "selfdual-minimizers": minimizers.iter().map(|a| ideal_text(r, a)).collect::<Vec<_>>(),
            "upper": upper.as_ref().map(|(u, _)| *u),
            "cover-generators": upper.as_ref().map(|(_, c)| c.iter().map(|g| g.format(vars)).collect::<Vec<_>>()),
            "max-extra": cfg.max_extra,
        });
        let verdicts = match upper {
            Some((u, _)) if u == lower => vec![format!("g-certified({u})")],
            _ => vec![],
        };
        Ok(self.report(input, payload, verdicts))
    }
}
