//! JSON front end behind the `gnc` binary.
//!
//! Every command prints one report `{command, model, results, status}` to
//! standard output. Exit code 0 on success, 1 when the input is malformed or
//! fails validation, 2 when a checked invariant is breached.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::cohomology::{
    alternating_sum, check_vanishing, classify_hypotheses, euler_characteristic, generic_verdict,
    multiplication_verdict, sheaf_cohomology, GenericForm, InvariantDivisor, Multiplier,
    ProjectiveModel,
};
use crate::face::Face;
use crate::ideals::{check_ideal_sequence, intersect_with_lcs, CenterUnion};
use crate::model::GncModel;
use crate::ratlinalg::Rational;
use crate::simplicial::{
    check_level_adjunction, level_components, log_canonical_degree, TupleMode,
};
use crate::suite;

pub const SEED_VAR: &str = "GNC_SEED";

#[derive(Debug, Parser)]
#[command(name = "gnc", version, about = "GNC local models and their cohomology")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Strictly increasing facet tuples.
    Strict,
    /// All tuples, repetitions allowed.
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms.
    Validate { model: PathBuf },
    /// List lc centers.
    Centers { model: PathBuf },
    /// The LCS locus with its induced boundary.
    Lcs { model: PathBuf },
    /// Iterated LCS loci down to the empty locus.
    LcsChain { model: PathBuf },
    /// The LCS locus of the model with zero boundary.
    Sing { model: PathBuf },
    /// Components of one level of the simplicial resolution.
    Resolve {
        #[arg(long)]
        level: usize,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        model: PathBuf,
    },
    /// Degree of K + B on each level component.
    Adjunction {
        #[arg(long)]
        level: usize,
        model: PathBuf,
    },
    /// h^q(O(d)) of the projective realization.
    Cohomology {
        #[arg(long, allow_negative_numbers = true)]
        twist: i64,
        model: PathBuf,
    },
    /// Euler characteristic by two routes.
    Euler {
        #[arg(long, allow_negative_numbers = true)]
        twist: i64,
        model: PathBuf,
    },
    /// Injectivity of multiplication H^q(O(d)) -> H^q(O(d+e)).
    CheckInjectivity {
        #[arg(long, allow_negative_numbers = true)]
        twist: i64,
        /// Exponents c1,...,cN of the divisor.
        #[arg(long, conflicts_with = "generic_degree")]
        divisor: Option<String>,
        #[arg(long, required_unless_present = "divisor")]
        generic_degree: Option<i64>,
        #[arg(long)]
        seed: Option<u64>,
        model: PathBuf,
    },
    /// h^q(O(d)) = 0 for q >= 1 and integer d > l in the range.
    CheckVanishing {
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        model: PathBuf,
    },
    /// The LCS restriction sequence for a union of lc centers.
    IdealSeq {
        /// Faces separated by ';', indices by ','; "{}" is the empty face.
        #[arg(long)]
        centers: String,
        #[arg(long)]
        dmax: u64,
        model: PathBuf,
    },
    /// Full verification battery on one model, or on the seeded corpus.
    Report {
        model: Option<PathBuf>,
        #[arg(long, default_value_t = suite::CORPUS_SIZE)]
        corpus: usize,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub ambient: usize,
    pub facets: Vec<Vec<usize>>,
    pub boundary: BTreeMap<String, String>,
}

/// Result of one invocation: exit code and the text for standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

enum Failure {
    Input(Value),
    Invariant(Value),
}

type Step<T> = Result<T, Failure>;

fn input(diagnostic: impl Into<String>) -> Failure {
    Failure::Input(json!({ "diagnostic": diagnostic.into() }))
}

/// Ambient, 0-based facets and boundary, ready for validation.
type RawModel = (usize, Vec<Vec<usize>>, BTreeMap<usize, Rational>);

fn parse_model_file(text: &str) -> Step<RawModel> {
    let file: ModelFile =
        serde_json::from_str(text).map_err(|e| input(format!("model file: {e}")))?;
    // 1-based on disk; 0 becomes an out-of-range index for the validator
    let shift = |i: usize| i.checked_sub(1).unwrap_or(usize::MAX);
    let facets = file
        .facets
        .iter()
        .map(|f| f.iter().map(|&i| shift(i)).collect())
        .collect();
    let mut boundary = BTreeMap::new();
    for (k, v) in &file.boundary {
        let i: usize = k
            .trim()
            .parse()
            .map_err(|_| input(format!("boundary key {k:?} is not an index")))?;
        let b = Rational::from_str(v.trim())
            .map_err(|_| input(format!("boundary value {v:?} is not a rational p/q")))?;
        boundary.insert(shift(i), b);
    }
    Ok((file.ambient, facets, boundary))
}

fn load_model(path: &Path) -> Step<GncModel> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    let (ambient, facets, boundary) = parse_model_file(&text)?;
    GncModel::validate(ambient, &facets, &boundary).map_err(|e| {
        Failure::Input(json!({
            "axiom": e.axiom().as_str(),
            "message": e.to_string(),
            "witness": e.witness(),
        }))
    })
}

fn faces_json<'a>(faces: impl IntoIterator<Item = &'a Face>) -> Value {
    json!(faces
        .into_iter()
        .map(|f| f.to_one_based())
        .collect::<Vec<_>>())
}

fn parse_centers(text: &str, ambient: usize) -> Step<Vec<Face>> {
    text.split(';')
        .map(|part| {
            let part = part.trim();
            if part == "{}" || part.is_empty() {
                return Ok(Face::EMPTY);
            }
            part.split(',')
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(i) if (1..=ambient).contains(&i) => Ok(i - 1),
                    _ => Err(input(format!("center index {t:?} outside [1, {ambient}]"))),
                })
                .collect()
        })
        .collect()
}

fn parse_divisor(text: &str, ambient: usize) -> Step<InvariantDivisor> {
    let c: Vec<i64> = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| input(format!("divisor {text:?} is not a list of integers")))?;
    InvariantDivisor::new(c, ambient).map_err(|e| input(e.to_string()))
}

fn default_seed() -> Step<u64> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| input(format!("{SEED_VAR}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

fn breach_unless(ok: bool, results: Value) -> Step<Value> {
    if ok {
        Ok(results)
    } else {
        Err(Failure::Invariant(results))
    }
}

fn execute(command: &Command) -> (Option<Value>, Step<Value>) {
    let mut digest = None;
    let result = (|| -> Step<Value> {
        let model = match command {
            Command::Report { model: None, .. } => None,
            Command::Validate { model }
            | Command::Centers { model }
            | Command::Lcs { model }
            | Command::LcsChain { model }
            | Command::Sing { model }
            | Command::Resolve { model, .. }
            | Command::Adjunction { model, .. }
            | Command::Cohomology { model, .. }
            | Command::Euler { model, .. }
            | Command::CheckInjectivity { model, .. }
            | Command::CheckVanishing { model, .. }
            | Command::IdealSeq { model, .. }
            | Command::Report {
                model: Some(model), ..
            } => Some(load_model(model)?),
        };
        if let Some(m) = &model {
            digest = Some(m.digest());
        }
        match (command, model) {
            (Command::Report { corpus, .. }, None) => {
                let report = suite::corpus_report(default_seed()?, *corpus);
                let pass = report.pass;
                breach_unless(pass, serde_json::to_value(report).expect("serializable"))
            }
            (command, Some(m)) => run_on_model(command, &m),
            (_, None) => unreachable!("every other command loads a model"),
        }
    })();
    (digest, result)
}

fn run_on_model(command: &Command, m: &GncModel) -> Step<Value> {
    let pm = || ProjectiveModel::new(m);
    Ok(match command {
        Command::Validate { .. } => json!({
            "valid": true,
            "core": m.core().to_one_based(),
            "reduced_core": m.reduced_core().to_one_based(),
            "twist": log_canonical_degree(m).to_string(),
        }),
        Command::Centers { .. } => json!({ "lc_centers": faces_json(&m.lc_centers()) }),
        Command::Lcs { .. } => json!({ "lcs": m.lcs().map(|y| y.digest()) }),
        Command::LcsChain { .. } => {
            json!({ "chain": m.lcs_chain().iter().map(GncModel::digest).collect::<Vec<_>>() })
        }
        Command::Sing { .. } => json!({ "sing": m.sing().map(|y| y.digest()) }),
        Command::Resolve { level, mode, .. } => {
            let mode = match mode {
                ModeArg::Strict => TupleMode::StrictOrdered,
                ModeArg::All => TupleMode::AllTuples,
            };
            let comps: Vec<Value> = level_components(m, *level, mode)
                .iter()
                .map(|c| {
                    json!({
                        "tuple": c.tuple.iter().map(|k| k + 1).collect::<Vec<_>>(),
                        "intersection": c.intersection.to_one_based(),
                        "boundary": c.induced_boundary.iter()
                            .map(|(i, b)| ((i + 1).to_string(), b.to_string()))
                            .collect::<BTreeMap<_, _>>(),
                    })
                })
                .collect();
            json!({ "level": level, "components": comps })
        }
        Command::Adjunction { level, .. } => {
            let ell = log_canonical_degree(m);
            let comps: Vec<Value> = level_components(m, *level, TupleMode::StrictOrdered)
                .iter()
                .filter(|c| !c.intersection.is_empty())
                .map(|c| {
                    json!({
                        "intersection": c.intersection.to_one_based(),
                        "degree": c.projective_degree().to_string(),
                    })
                })
                .collect();
            let ok = check_level_adjunction(m, *level);
            return breach_unless(
                ok,
                json!({ "level": level, "twist": ell.to_string(), "components": comps, "holds": ok }),
            );
        }
        Command::Cohomology { twist, .. } => {
            json!({ "twist": twist, "dims": sheaf_cohomology(&pm(), *twist) })
        }
        Command::Euler { twist, .. } => {
            let pm = pm();
            let chi = euler_characteristic(&pm, *twist);
            let alt = alternating_sum(&sheaf_cohomology(&pm, *twist));
            return breach_unless(
                chi == alt,
                json!({ "twist": twist, "inclusion_exclusion": chi, "alternating_sum": alt }),
            );
        }
        Command::CheckInjectivity {
            twist,
            divisor,
            generic_degree,
            seed,
            ..
        } => {
            let pm = pm();
            let qs: Vec<usize> = (0..pm.degree_count()).collect();
            let (mult, verdicts) = match (divisor, generic_degree) {
                (Some(text), _) => {
                    let mult = Multiplier::Divisor(parse_divisor(text, m.ambient())?);
                    let v = multiplication_verdict(&pm, *twist, &mult, &qs)
                        .map_err(|e| input(e.to_string()))?;
                    (mult, v)
                }
                (None, Some(e)) => {
                    let seed = match seed {
                        Some(s) => *s,
                        None => default_seed()?,
                    };
                    let form = GenericForm::new(&pm, *e, seed).map_err(|e| input(e.to_string()))?;
                    let v = generic_verdict(&pm, *twist, *e, seed, &qs).map_err(|err| {
                        Failure::Invariant(json!({ "diagnostic": err.to_string() }))
                    })?;
                    (Multiplier::Generic(form), v)
                }
                (None, None) => return Err(input("need --divisor or --generic-degree")),
            };
            let hyp = classify_hypotheses(&pm, *twist, &mult);
            let injective = verdicts.iter().all(|v| v.injective);
            let sound = !(hyp.ev || hyp.tk) || injective;
            let tags: Vec<Value> = verdicts
                .iter()
                .filter(|v| v.q >= 1)
                .map(|v| json!({ "q": v.q, "tag": if v.vacuous { "vacuous" } else { "substantive" } }))
                .collect();
            return breach_unless(
                sound,
                json!({
                    "twist": twist,
                    "degree": mult.degree(),
                    "hypotheses": hyp,
                    "verdicts": verdicts,
                    "tags": tags,
                }),
            );
        }
        Command::CheckVanishing { from, to, .. } => {
            let report = check_vanishing(&pm(), *from, *to);
            let ok = report.all_pass;
            return breach_unless(ok, serde_json::to_value(report).expect("serializable"));
        }
        Command::IdealSeq { centers, dmax, .. } => {
            let faces = parse_centers(centers, m.ambient())?;
            let z = CenterUnion::new(m, faces).map_err(|e| input(e.to_string()))?;
            let holds = check_ideal_sequence(m, &z, *dmax).map_err(|e| input(e.to_string()))?;
            let meet = intersect_with_lcs(m, &z);
            return breach_unless(
                holds,
                json!({
                    "centers": faces_json(z.faces()),
                    "intersection_with_lcs": faces_json(meet.faces()),
                    "dmax": dmax,
                    "holds": holds,
                }),
            );
        }
        Command::Report { .. } => {
            let seed = default_seed()?;
            let report = suite::model_report(m, seed);
            let pass = report.pass;
            return breach_unless(pass, serde_json::to_value(report).expect("serializable"));
        }
    })
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return Outcome {
                code,
                stdout: e.to_string(),
            };
        }
    };
    let echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let (model, result) = execute(&cli.command);
    let (code, status, results) = match result {
        Ok(v) => (0, "ok", v),
        Err(Failure::Input(v)) => (1, "invalid", v),
        Err(Failure::Invariant(v)) => (2, "invariant_breach", v),
    };
    let report = json!({
        "command": echo,
        "model": model,
        "results": results,
        "status": status,
    });
    let mut stdout = serde_json::to_string_pretty(&report).expect("serializable");
    stdout.push('\n');
    Outcome { code, stdout }
}
