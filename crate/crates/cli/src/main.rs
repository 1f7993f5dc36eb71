use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nakayama::algebra::{AlgebraRef, CategorySpec};
use nakayama::functors::{
    counit_sigma, nakayama_apply, nakayama_right_apply, unit_lambda, verify_adjunction, verify_ambidextrous,
    verify_monad_comonad, Adjunction,
};
use nakayama::gorenstein::{
    augmented_test_set, default_bound, gi_dimension, gp_dimension, is_gorenstein_injective, is_gorenstein_projective,
    iwanaga_gorenstein_test, verify_category_dimensions, verify_criterion_agreement, verify_equivalence_gp_gi,
    verify_four_numbers, Labeled,
};
use nakayama::io::{AlgebraSpec, ModuleSpec, ModulesDoc, ReportDocument};
use nakayama::linalg::Field;
use nakayama::Error;

/// Sigma -| Omega passes through `P I P T B`, of dimension `dim(A)^4 dim(B)`,
/// so it only runs on one-dimensional modules over small algebras.
const SIGMA_OMEGA_MAX_ALGEBRA_DIM: usize = 4;
const SIGMA_OMEGA_MAX_MODULE_DIM: usize = 1;

/// Vector space dimensions the monad and ambidexterity checks run on.
const VECT_DIMS: [usize; 2] = [1, 2];

#[derive(Parser)]
#[command(name = "nakayama", version, about = "Nakayama functors and Gorenstein invariants of finite-dimensional algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra (and modules) and print basic invariants.
    Check(Input),
    /// Apply nu and nu^- to modules and test the unit and counit.
    Nakayama(Input),
    /// Iwanaga-Gorenstein test and the four dimension numbers.
    Gorenstein(Input),
    /// Gorenstein projective / injective membership and dimensions.
    Gp(Input),
    /// Run one verification suite.
    Verify {
        #[arg(value_enum)]
        which: Suite,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Triangle identities, naturality and hom bijections of T -| P -| I -| S, nu -| nu^- and Sigma -| Omega.
    Adjunctions,
    /// Monad laws of A (x) - and comonad laws of DA (x) - on vector spaces.
    Monad,
    /// Both adjunctions between A (x) - and DA (x) - and conjugacy of their structure maps.
    Ambidextrous,
    /// Gorenstein dimensions and derived vanishing degrees all equal g.
    FourNumbers,
    /// Projective dimensions of dual representables of a finite category.
    Category,
    /// nu and nu^- exchange Gorenstein projectives and injectives.
    Equivalence,
    /// The simplified membership test agrees with the full one.
    Criterion,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Adjunctions => "adjunctions",
            Suite::Monad => "monad",
            Suite::Ambidextrous => "ambidextrous",
            Suite::FourNumbers => "four-numbers",
            Suite::Category => "category",
            Suite::Equivalence => "equivalence",
            Suite::Criterion => "criterion",
        }
    }
}

#[derive(Args)]
struct Input {
    /// Algebra spec (JSON). Omit when using --builtin.
    spec: Option<PathBuf>,
    /// Use a builtin algebra: linear_An, cyclic_rad_square, dual_numbers, semisimple_k_n, poly_trunc.
    #[arg(long, conflicts_with = "spec")]
    builtin: Option<String>,
    /// Builtin parameter, e.g. `--param n=3`.
    #[arg(long = "param", value_name = "KEY=N", value_parser = parse_param, requires = "builtin")]
    params: Vec<(String, usize)>,
    /// Work over F_p instead of Q (builtins only).
    #[arg(long, requires = "builtin")]
    prime: Option<u64>,
    /// Module files: one module, a list, or an earlier report to replay.
    #[arg(long, num_args = 1..)]
    modules: Vec<PathBuf>,
    /// Resolution length bound; defaults to 2 dim A + 2.
    #[arg(long, env = "NAKAYAMA_BOUND")]
    bound: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_param(s: &str) -> Result<(String, usize), String> {
    let (k, v) = s.split_once('=').ok_or("expected KEY=N")?;
    let v = v.parse().map_err(|_| format!("{v:?} is not a nonnegative integer"))?;
    Ok((k.to_string(), v))
}

struct Failure {
    kind: String,
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { kind: e.kind().into(), message: e.to_string(), code: e.exit_code() as u8 }
    }
}

impl Failure {
    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure { kind: "IoError".into(), message: format!("{}: {e}", path.display()), code: 1 }
    }

    fn emit(&self) -> ExitCode {
        let obj = json!({"error": {"kind": self.kind, "message": self.message, "exit_code": self.code}});
        eprintln!("{}", serde_json::to_string_pretty(&obj).expect("error object serializes"));
        ExitCode::from(self.code)
    }
}

type Outcome<T> = Result<T, Failure>;

struct Loaded {
    spec: AlgebraSpec,
    algebra: AlgebraRef,
    modules: Vec<Labeled>,
    inputs: Vec<Value>,
    bound: usize,
}

fn read_json(path: &Path) -> Outcome<(String, Value)> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    let value = serde_json::from_str(&text).map_err(|e| Failure::from(Error::Schema(format!("{}: {e}", path.display()))))?;
    Ok((text, value))
}

fn load(input: &Input) -> Outcome<Loaded> {
    let (spec, base) = match (&input.spec, &input.builtin) {
        (Some(path), _) => {
            let (text, _) = read_json(path)?;
            (AlgebraSpec::from_json(&text)?, path.parent().map(Path::to_path_buf))
        }
        (None, Some(name)) => {
            let params: Vec<(&str, usize)> = input.params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            let mut spec = AlgebraSpec::builtin(name, &params);
            if let Some(p) = input.prime {
                spec.field = Field::new_prime(p)?;
            }
            (spec, None)
        }
        (None, None) => return Err(Error::Schema("give an algebra spec file or --builtin".into()).into()),
    };
    let algebra = Arc::new(spec.build_in(base.as_deref())?);
    let mut inputs = vec![serde_json::to_value(&spec).expect("specs serialize")];
    let mut modules = Vec::new();
    for path in &input.modules {
        let (text, value) = read_json(path)?;
        for m in ModulesDoc::from_json(&text)? {
            let label = m.label.clone().unwrap_or_else(|| format!("M{}", modules.len() + 1));
            modules.push(Labeled::new(label, m.build(&algebra)?));
        }
        inputs.push(value);
    }
    let bound = input.bound.unwrap_or_else(|| default_bound(&algebra));
    Ok(Loaded { spec, algebra, modules, inputs, bound })
}

fn specs(tests: &[Labeled]) -> Vec<ModuleSpec> {
    tests.iter().map(|m| ModuleSpec::from_module(&m.module, Some(m.label.clone()))).collect()
}

/// User modules when given, else the simples, indecomposable projectives
/// and injectives and `D A`.
fn test_set(l: &Loaded) -> Outcome<Vec<Labeled>> {
    if l.modules.is_empty() {
        Ok(augmented_test_set(&l.algebra, &[])?)
    } else {
        Ok(l.modules.clone())
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

/// Results, the modules they refer to, and a failure to report after the
/// document has been written.
type CommandOutput = (Value, Vec<Labeled>, Option<Failure>);

fn cmd_check(l: &Loaded) -> Outcome<CommandOutput> {
    let a = &l.algebra;
    let radical = a.radical()?;
    let modules: Vec<Value> = l
        .modules
        .iter()
        .map(|m| json!({"label": m.label, "side": m.module.side(), "dim": m.module.dim(), "dimension_vector": m.module.dimension_vector()}))
        .collect();
    let results = json!({
        "form": l.spec.describe(),
        "field": a.field(),
        "dim": a.dim(),
        "basis": a.labels(),
        "vertices": a.vertex_count(),
        "radical_dim": radical.dim(),
        "loewy_length": a.loewy_length()?,
        "split_basic": a.is_split_basic()?,
        "commutative": a.is_commutative(),
        "modules": modules,
    });
    Ok((results, l.modules.clone(), None))
}

fn cmd_nakayama(l: &Loaded) -> Outcome<CommandOutput> {
    let tests = test_set(l)?;
    let rows = nakayama::par::try_map(&tests, |m| {
        let nu = nakayama_apply(&m.module)?;
        let nu_minus = nakayama_right_apply(&m.module)?;
        Ok::<_, Error>(json!({
            "label": m.label,
            "dim": m.module.dim(),
            "nu": {"dim": nu.dim(), "dimension_vector": nu.dimension_vector()},
            "nu_minus": {"dim": nu_minus.dim(), "dimension_vector": nu_minus.dimension_vector()},
            "unit_lambda_iso": unit_lambda(&m.module)?.is_iso(),
            "counit_sigma_iso": counit_sigma(&m.module)?.is_iso(),
        }))
    })?;
    Ok((json!({"modules": rows}), tests, None))
}

fn cmd_gorenstein(l: &Loaded) -> Outcome<CommandOutput> {
    let report = verify_four_numbers(&l.algebra, &l.modules, l.bound)?;
    let tests = augmented_test_set(&l.algebra, &l.modules)?;
    Ok((to_value(&report), tests, None))
}

fn cmd_gp(l: &Loaded) -> Outcome<CommandOutput> {
    let report = iwanaga_gorenstein_test(&l.algebra, l.bound)?;
    let tests = test_set(l)?;
    let rows = nakayama::par::try_map(&tests, |m| {
        let gp = is_gorenstein_projective(m, &report)?;
        let gi = is_gorenstein_injective(m, &report)?;
        Ok::<_, Error>(json!({
            "label": m.label,
            "gorenstein_projective": gp.verdict,
            "gorenstein_injective": gi.verdict,
            "gp_dimension": gp_dimension(m, &report)?,
            "gi_dimension": gi_dimension(m, &report)?,
            "evidence": {"projective": gp, "injective": gi},
        }))
    })?;
    let results = json!({
        "is_iwanaga_gorenstein": report.is_iwanaga_gorenstein,
        "g": report.g,
        "pd_left": report.pd_left,
        "pd_right": report.pd_right,
        "modules": rows,
    });
    Ok((results, tests, None))
}

fn failed(what: &str, first: Option<String>) -> Option<Failure> {
    let msg = format!("{what}: {}", first.unwrap_or_else(|| "check failed".into()));
    Some(Error::TheoremViolation(msg).into())
}

fn category_of(l: &Loaded) -> Outcome<CategorySpec> {
    if let Some(c) = l.spec.category_spec()? {
        return Ok(c);
    }
    let linear = l.spec.builtin.as_deref().is_some_and(|b| b.eq_ignore_ascii_case("linear_an"));
    match l.spec.params.get("n") {
        Some(&n) if linear && !l.spec.params.contains_key("radical_power") => {
            Ok(CategorySpec::linear_order(n, l.spec.field))
        }
        _ => Err(Error::Incompatible("the category suite needs an algebra given in category form".into()).into()),
    }
}

fn cmd_verify(l: &Loaded, which: Suite) -> Outcome<CommandOutput> {
    let a = &l.algebra;
    match which {
        Suite::Adjunctions => {
            let tests = test_set(l)?;
            let mods: Vec<_> = tests.iter().map(|m| m.module.clone()).collect();
            let mut reports = Vec::new();
            let mut skipped = Vec::new();
            for adj in Adjunction::ALL {
                if adj != Adjunction::SigmaOmega {
                    reports.push(verify_adjunction(adj, &mods, false)?);
                    continue;
                }
                let small: Vec<_> = if a.dim() <= SIGMA_OMEGA_MAX_ALGEBRA_DIM {
                    mods.iter().filter(|m| m.dim() <= SIGMA_OMEGA_MAX_MODULE_DIM).cloned().collect()
                } else {
                    Vec::new()
                };
                skipped.extend(
                    tests.iter().filter(|m| !small.contains(&m.module)).map(|m| format!("{} on {}", adj.name(), m.label)),
                );
                if !small.is_empty() {
                    reports.push(verify_adjunction(adj, &small, false)?);
                }
            }
            let failure = reports.iter().find(|r| !r.passed).and_then(|r| failed(&r.name, r.first_failure.clone()));
            Ok((json!({"adjunctions": reports, "skipped": skipped}), tests, failure))
        }
        Suite::Monad | Suite::Ambidextrous => {
            let r = match which {
                Suite::Monad => verify_monad_comonad(a, &VECT_DIMS),
                _ => verify_ambidextrous(a, &VECT_DIMS),
            };
            let failure = if r.passed { None } else { failed(which.name(), r.first_failure.clone()) };
            Ok((to_value(&r), vec![], failure))
        }
        Suite::FourNumbers => cmd_gorenstein(l),
        Suite::Category => {
            let r = verify_category_dimensions(&category_of(l)?, a.field(), l.bound)?;
            Ok((to_value(&r), vec![], None))
        }
        Suite::Equivalence => {
            let report = iwanaga_gorenstein_test(a, l.bound)?;
            let tests = test_set(l)?;
            Ok((to_value(&verify_equivalence_gp_gi(&tests, &report)?), tests, None))
        }
        Suite::Criterion => {
            let report = iwanaga_gorenstein_test(a, l.bound)?;
            let tests = test_set(l)?;
            let r = verify_criterion_agreement(&tests, &report)?;
            let failure = (!r.disagreements.is_empty())
                .then(|| Failure::from(Error::TheoremViolation(format!("criteria disagree on {:?}", r.disagreements))));
            Ok((to_value(&r), tests, failure))
        }
    }
}

fn run(cli: Cli) -> Outcome<()> {
    let (name, input, which) = match &cli.command {
        Command::Check(i) => ("check".to_string(), i, None),
        Command::Nakayama(i) => ("nakayama".to_string(), i, None),
        Command::Gorenstein(i) => ("gorenstein".to_string(), i, None),
        Command::Gp(i) => ("gp".to_string(), i, None),
        Command::Verify { which, input } => (format!("verify {}", which.name()), input, Some(*which)),
    };
    let start = Instant::now();
    let loaded = load(input)?;
    let (results, tests, failure) = match &cli.command {
        Command::Check(_) => cmd_check(&loaded)?,
        Command::Nakayama(_) => cmd_nakayama(&loaded)?,
        Command::Gorenstein(_) => cmd_gorenstein(&loaded)?,
        Command::Gp(_) => cmd_gp(&loaded)?,
        Command::Verify { .. } => cmd_verify(&loaded, which.expect("verify carries a suite"))?,
    };
    let bound = (!matches!(cli.command, Command::Check(_))).then_some(loaded.bound);
    let mut doc = ReportDocument::new(&name, &loaded.inputs, bound, results, specs(&tests));
    doc.timing_ms = start.elapsed().as_secs_f64() * 1000.0;
    let text = doc.to_json();
    match &input.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::io(path, e))?,
        None => print!("{text}"),
    }
    failure.map_or(Ok(()), Err)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let f = Failure { kind: "UsageError".into(), message: e.render().to_string(), code: 1 };
            return f.emit();
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.emit(),
    }
}
