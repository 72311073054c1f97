//! `novikov`: twisted cohomology, Novikov numbers and critical-point bounds from the command line.

mod input;
mod report;
mod selfcheck;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use thiserror::Error;

use novikov_core::algebra::{parse_scalar, Scalar};
use novikov_core::cocycle::class_rank_and_divisibility;
use novikov_core::corpus::{self, GeneratedSpace, SimplicialSelfMap};
use novikov_core::invariants::{
    approximant_bounds, crit_bound_with, cup_length, jump_locus, twisted_dims, verify_certificate, CritBoundReport,
    CupOptions, DEFAULT_SEED,
};
use novikov_core::novikov::deformation_complex;
use novikov_core::{AlgebraError, Error};

use input::{space_doc, ComplexDoc, Loaded};

#[derive(Parser)]
#[command(name = "novikov", version, about = "Twisted cohomology, Novikov numbers and critical-point bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the random generic monodromy.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct InputArgs {
    /// Input document (JSON complex format).
    path: Option<PathBuf>,
    /// Read the input document from standard input.
    #[arg(long)]
    stdin: bool,
    /// Treat the complex as a closed orientable manifold.
    #[arg(long)]
    manifold: bool,
    /// Edges missing from the cocycle get the value 0.
    #[arg(long)]
    default_zero_edges: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Size, Euler characteristic and class data.
    Info(InputArgs),
    /// Ordinary Betti numbers over Q.
    Betti(InputArgs),
    /// Novikov numbers of the class.
    Novikov(InputArgs),
    /// Jump locus of the twisted Betti numbers.
    Jumps(InputArgs),
    /// Twisted Betti numbers at one monodromy.
    TwistedDim {
        #[command(flatten)]
        input: InputArgs,
        /// Monodromy: `p/q` or `@minpoly:c0,c1,...`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Cup-length bound over given candidate monodromies.
    CupLength {
        #[command(flatten)]
        input: InputArgs,
        /// Candidates separated by `;` or whitespace; repeatable. Defaults to the jump roots,
        /// a random generic value, 1 and their inverses.
        #[arg(long, allow_hyphen_values = true)]
        candidates: Vec<String>,
    },
    /// Full report: Novikov numbers, jumps and the critical-point bound.
    CritBound(InputArgs),
    /// Best bound over rank-one approximants of a higher-rank class.
    Thm3Bound {
        #[command(flatten)]
        input: InputArgs,
        /// Integer coefficient vectors on the base classes, e.g. `1,0;2,1`; repeatable.
        #[arg(long, allow_hyphen_values = true, required = true)]
        approximants: Vec<String>,
    },
    /// Emit a built-in test space in the JSON complex format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Mapping-torus oracle dimensions compared with the direct computation.
    OracleMv {
        #[command(flatten)]
        input: InputArgs,
        /// Images of the fiber vertices, in sorted vertex order, e.g. `1,2,0`.
        #[arg(long)]
        map: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Convention and consistency checks over the built-in corpus.
    SelfCheck {
        /// Random samples per space and check.
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Circle {
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    Torus,
    /// Closed orientable surface with a nonzero class.
    Surface {
        #[arg(long, default_value_t = 2)]
        genus: usize,
    },
    /// S¹ × Sⁿ with the circle class.
    SphereProduct {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    ThreeTorus,
    /// T² # T² with the class supported on the second summand.
    TorusSum,
    /// T³ # T³ with one base class per summand.
    ThreeTorusSum,
    /// Torus bundle with monodromy [[2,1],[1,1]].
    Anosov,
    /// Presentation complex of ⟨x, t | t x^p t⁻¹ = x^q⟩.
    BaumslagSolitar {
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        q: usize,
    },
    /// Two-complex with vanishing Novikov numbers and a non-unit jump.
    Alexander,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0} of {1} self-checks failed")]
    SelfCheck(u64, u64),
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Core(e.into())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Inconsistency(_) | Error::NotAChainComplex(_) | Error::CertificateRejected(_)) => 3,
            CliError::SelfCheck(..) => 3,
            _ => 2,
        }
    }

    fn kind(&self) -> String {
        match self {
            CliError::Core(Error::Algebra(e)) => variant(e),
            CliError::Core(e) => variant(e),
            CliError::Io { .. } => "Io".into(),
            CliError::Json(_) => "Json".into(),
            CliError::Usage(_) => "Usage".into(),
            CliError::SelfCheck(..) => "SelfCheck".into(),
        }
    }
}

fn variant(e: &impl std::fmt::Debug) -> String {
    let s = format!("{:?}", e);
    s.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

type Outcome = Result<Value, CliError>;

fn read_doc(args: &InputArgs) -> Result<ComplexDoc, CliError> {
    let text = match (&args.path, args.stdin) {
        (Some(_), true) => return Err(CliError::Usage("give either a path or --stdin, not both".into())),
        (None, false) => return Err(CliError::Usage("no input: give a path or --stdin".into())),
        (None, true) => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
            s
        }
        (Some(p), false) => std::fs::read_to_string(p).map_err(|source| CliError::Io { path: p.display().to_string(), source })?,
    };
    Ok(serde_json::from_str(&text)?)
}

fn load(args: &InputArgs) -> Result<Loaded, CliError> {
    let mut l = read_doc(args)?.load(args.default_zero_edges)?;
    l.manifold |= args.manifold;
    Ok(l)
}

fn header(l: &Loaded) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("name".into(), json!(l.name));
    m
}

fn split_list(items: &[String]) -> Vec<&str> {
    items.iter().flat_map(|s| s.split(|c: char| c == ';' || c.is_whitespace())).filter(|s| !s.is_empty()).collect()
}

fn int_list(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("`{}` is not an integer", t.trim()))))
        .collect()
}

/// Re-checks an emitted certificate from scratch.
fn checked(l: &Loaded, z: &novikov_core::cocycle::IntegralOneCocycle, r: &CritBoundReport) -> Result<(), CliError> {
    if let Some(c) = &r.certificate {
        verify_certificate(&l.complex, z, c)?;
    }
    Ok(())
}

fn info(args: &InputArgs) -> Outcome {
    let l = load(args)?;
    let (rank, divisibility) = class_rank_and_divisibility(&l.complex, &l.cocycle);
    let mut m = header(&l);
    m.insert("dimension".into(), json!(l.complex.dim()));
    m.insert("f_vector".into(), json!(l.complex.f_vector()));
    m.insert("euler_characteristic".into(), json!(l.complex.euler_characteristic()));
    m.insert("components".into(), json!(l.complex.component_count()));
    m.insert("closed_orientable".into(), json!(corpus::is_closed_orientable(&l.complex)));
    m.insert("manifold".into(), json!(l.manifold));
    m.insert("class_rank".into(), json!(rank));
    m.insert("divisibility".into(), json!(divisibility));
    m.insert("has_cut".into(), json!(l.cut.is_some()));
    Ok(Value::Object(m))
}

fn crit_report(args: &InputArgs, seed: u64) -> Outcome {
    let l = load(args)?;
    let jr = jump_locus(&l.complex, &l.cocycle)?;
    let r = crit_bound_with(&l.complex, &l.cocycle, &jr, seed, &CupOptions { manifold: l.manifold })?;
    checked(&l, &l.cocycle, &r)?;
    let mut m = header(&l);
    m.insert("novikov".into(), json!(jr.novikov_numbers()));
    m.insert("jumps".into(), report::jumps(&jr));
    m.extend(report::bound(&r, seed));
    Ok(Value::Object(m))
}

fn cup_report(args: &InputArgs, candidates: &[String], seed: u64) -> Outcome {
    let items = split_list(candidates);
    if items.is_empty() {
        return crit_report(args, seed);
    }
    let l = load(args)?;
    let cands = items.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<Scalar>, _>>()?;
    let r = cup_length(&l.complex, &l.cocycle, &cands, &CupOptions { manifold: l.manifold })?;
    checked(&l, &l.cocycle, &r)?;
    let mut m = header(&l);
    m.extend(report::bound(&r, seed));
    Ok(Value::Object(m))
}

fn thm3_report(args: &InputArgs, approximants: &[String], seed: u64) -> Outcome {
    let l = load(args)?;
    let ns = split_list(approximants).into_iter().map(int_list).collect::<Result<Vec<_>, _>>()?;
    let reports = approximant_bounds(&l.complex, &l.base_classes, &ns, seed, &CupOptions { manifold: l.manifold })?;
    let mut best = 0;
    let mut rows = Vec::new();
    for (k, (n, r)) in ns.iter().zip(&reports).enumerate() {
        let z = novikov_core::cocycle::IntegralOneCocycle::combination(
            &n.iter().copied().zip(l.base_classes.iter()).collect::<Vec<_>>(),
        );
        checked(&l, &z, r)?;
        if r.cl_lower_bound > reports[best].cl_lower_bound {
            best = k;
        }
        rows.push(json!({ "coefficients": n, "cl_lower_bound": r.cl_lower_bound, "crit_bound": r.crit_point_bound }));
    }
    let mut m = header(&l);
    m.insert("base_classes".into(), json!(l.base_classes.len()));
    m.insert("approximants".into(), Value::Array(rows));
    m.insert("best_approximant".into(), json!(ns[best]));
    m.extend(report::bound(&reports[best], seed));
    Ok(Value::Object(m))
}

fn gen(kind: &GenKind) -> Outcome {
    let mut base = None;
    let space: GeneratedSpace = match *kind {
        GenKind::Circle { k } => corpus::circle(k)?,
        GenKind::Torus => corpus::torus()?,
        GenKind::Surface { genus } => corpus::surface(genus)?,
        GenKind::SphereProduct { n } => corpus::sphere_product_s1xsn(n)?,
        GenKind::ThreeTorus => corpus::three_torus()?,
        GenKind::TorusSum => {
            let t = corpus::torus()?;
            let zero = t.with_cocycle(novikov_core::cocycle::IntegralOneCocycle::zero(&t.complex), "torus");
            corpus::connected_sum(&zero, &t)?
        }
        GenKind::ThreeTorusSum => {
            let a = corpus::three_torus()?;
            let t = corpus::torus()?;
            let b = a.with_cocycle(corpus::fiber_class(&t.complex, &t.cocycle, &a)?, "three-torus with a fiber class");
            let x = corpus::connected_sum(&a, &b)?;
            let (z1, z2) = corpus::summand_classes(&a, &x)?;
            base = Some(vec![z1, z2]);
            x
        }
        GenKind::Anosov => corpus::anosov_torus_bundle()?.0,
        GenKind::BaumslagSolitar { p, q } => corpus::baumslag_solitar_instance(p, q)?.0,
        GenKind::Alexander => corpus::alexander_style_instance()?,
    };
    Ok(serde_json::to_value(space_doc(&space, base.as_deref()))?)
}

fn oracle_mv(args: &InputArgs, map: &str, a: &str) -> Outcome {
    let fiber = read_doc(args)?.load(true)?.complex;
    let images = int_list(map)?
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| CliError::Usage(format!("vertex {} is out of range", v))))
        .collect::<Result<Vec<u32>, _>>()?;
    let h = SimplicialSelfMap::new(fiber, images)?;
    let a = parse_scalar(a)?;
    let inv = a.inverse()?;
    let torus = corpus::mapping_torus(&h)?;
    let oracle = corpus::mv_oracle_dims(&h, &a)?;
    let twisted = twisted_dims(&torus.complex, &torus.cocycle, &a)?;
    let d = deformation_complex(torus.cut.as_ref().expect("mapping tori carry a cut"))?;
    let deformation = d.complex.evaluate_all(&inv)?[..=torus.dimension].to_vec();
    if oracle != twisted || twisted != deformation {
        return Err(Error::Inconsistency(format!(
            "at a = {}: oracle {:?}, twisted {:?}, deformation at 1/a {:?}",
            a, oracle, twisted, deformation
        ))
        .into());
    }
    Ok(json!({
        "a": report::scalar(&a),
        "oracle": oracle,
        "twisted": twisted,
        "deformation_at_inverse": deformation,
        "agree": true,
    }))
}

fn run(cli: &Cli) -> Outcome {
    let seed = cli.seed;
    match &cli.command {
        Command::Info(args) => info(args),
        Command::Betti(args) => {
            let l = load(args)?;
            let mut m = header(&l);
            m.insert("betti".into(), json!(l.complex.betti_numbers()));
            Ok(Value::Object(m))
        }
        Command::Novikov(args) => {
            let l = load(args)?;
            let jr = jump_locus(&l.complex, &l.cocycle)?;
            let mut m = header(&l);
            m.insert("novikov".into(), json!(jr.novikov_numbers()));
            Ok(Value::Object(m))
        }
        Command::Jumps(args) => {
            let l = load(args)?;
            let jr = jump_locus(&l.complex, &l.cocycle)?;
            let mut m = header(&l);
            m.insert("novikov".into(), json!(jr.novikov_numbers()));
            m.insert("jumps".into(), report::jumps(&jr));
            m.insert("tau_divisible".into(), json!(jr.tau_divisible));
            Ok(Value::Object(m))
        }
        Command::TwistedDim { input, a } => {
            let l = load(input)?;
            let a = parse_scalar(a)?;
            let mut m = header(&l);
            m.insert("a".into(), report::scalar(&a));
            m.insert("dims".into(), json!(twisted_dims(&l.complex, &l.cocycle, &a)?));
            Ok(Value::Object(m))
        }
        Command::CupLength { input, candidates } => cup_report(input, candidates, seed),
        Command::CritBound(args) => crit_report(args, seed),
        Command::Thm3Bound { input, approximants } => thm3_report(input, approximants, seed),
        Command::Gen { kind } => gen(kind),
        Command::OracleMv { input, map, a } => oracle_mv(input, map, a),
        Command::SelfCheck { samples } => {
            let v = selfcheck::run(seed, *samples)?;
            let (passed, failed) = (v["passed"].as_u64().unwrap_or(0), v["failed"].as_u64().unwrap_or(0));
            if failed > 0 {
                eprint!("{}", report::render_text(&v));
                return Err(CliError::SelfCheck(failed, passed + failed));
            }
            Ok(v)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            let text = if cli.json || matches!(cli.command, Command::Gen { .. }) {
                serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
            } else {
                report::render_text(&v)
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let diag = json!({ "error": { "kind": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() } });
                eprintln!("{}", diag);
            } else {
                eprintln!("error[{}]: {}", e.kind(), e);
            }
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn internal_failures_exit_with_three() {
        for e in [Error::Inconsistency("x".into()), Error::NotAChainComplex(1), Error::CertificateRejected("x".into())] {
            assert_eq!(CliError::Core(e).exit_code(), 3);
        }
        assert_eq!(CliError::SelfCheck(1, 2).exit_code(), 3);
        assert_eq!(CliError::Core(Error::NotACocycle([0, 1, 2])).exit_code(), 2);
        assert_eq!(CliError::from(AlgebraError::ZeroMonodromy).exit_code(), 2);
    }

    #[test]
    fn error_kinds_name_the_variant() {
        assert_eq!(CliError::Core(Error::MissingEdge(0, 2)).kind(), "MissingEdge");
        assert_eq!(CliError::from(AlgebraError::Parse("q".into())).kind(), "Parse");
    }

    #[test]
    fn lists_split_on_semicolons_and_spaces() {
        let items = vec!["1,0;2,1".to_string(), "3,2".to_string()];
        assert_eq!(split_list(&items), vec!["1,0", "2,1", "3,2"]);
        assert_eq!(int_list("3,-2").unwrap(), vec![3, -2]);
        assert!(int_list("3,x").is_err());
    }
}
