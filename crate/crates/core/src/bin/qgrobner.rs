use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use qgrobner::coeff::parse_rational;
use qgrobner::corpus;
use qgrobner::render::{self, TextStyle};
use qgrobner::{
    DeformationMatrix, Error, LaurentMonomial, ParamAssignment, ParamNames, Presentation,
    QuantumSpace, RewriteSystem, SegreMap, Setting, VeroneseMap, Word,
};

#[derive(Parser)]
#[command(
    name = "qgrobner",
    version,
    about = "Veronese and Segre kernels of quantum spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Relations R1, R2 and R1' of the d-Veronese subalgebra.
    #[command(name = "veronese-present")]
    VeronesePresentation(VeroneseArgs),
    /// Reduced Gröbner basis of the Veronese kernel.
    VeroneseKernel {
        #[command(flatten)]
        args: VeroneseArgs,
        /// Emit the free-algebra basis Re1 ∪ Re2 instead.
        #[arg(long)]
        lifted: bool,
    },
    /// Derived deformation matrix of the d-Veronese.
    VeroneseMatrix(VeroneseArgs),
    /// Kronecker deformation matrix of the Segre space.
    SegreMatrix(SegreArgs),
    /// Reduced Gröbner basis of the Segre kernel.
    SegreKernel {
        #[command(flatten)]
        args: SegreArgs,
        /// Emit the defining relations of the Segre space instead.
        #[arg(long)]
        space: bool,
    },
    /// Koszul dual of A^n_q.
    KoszulDual(SpaceArgs),
    /// Certify a basis by overlap resolution and length-3 normal words.
    Certify(CertifyArgs),
    /// Evaluate any target at rational parameter values.
    Eval(EvalArgs),
    /// Regenerate the worked-example corpus and compare it with the committed one.
    Examples {
        /// Write the regenerated fixtures into this directory.
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// `name=rational`, repeatable or comma-separated; `*=v` sets every parameter.
    #[arg(long, value_delimiter = ',')]
    assign: Vec<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct SpaceArgs {
    #[arg(long)]
    n: usize,
    /// Use the all-ones matrix instead of generic parameters.
    #[arg(long)]
    commutative: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct VeroneseArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    d: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct SegreArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Veronese kernel inside the derived quantum space.
    Veronese,
    /// Re1 ∪ Re2 in the free algebra.
    Lifted,
    /// Segre kernel inside the Segre space.
    Segre,
    /// Defining relations of A^n_q in the free algebra.
    Space,
    /// Koszul dual relations in the free algebra.
    Koszul,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Remove the rule at this position before certifying.
    #[arg(long)]
    drop_rule: Option<usize>,
    /// Multiply the coefficient of the rule at this position by a fresh parameter.
    #[arg(long)]
    corrupt_rule: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Target {
    Space,
    VeroneseKernel,
    VeroneseMatrix,
    SegreKernel,
    SegreMatrix,
    KoszulDual,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_enum)]
    target: Target,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[command(flatten)]
    common: Common,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit(out: &Option<PathBuf>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn assignment(items: &[String], names: &ParamNames) -> Result<ParamAssignment, Error> {
    let mut rest = Vec::new();
    let mut all: Option<BigRational> = None;
    for item in items {
        match item.split_once('=') {
            Some((name, value)) if name.trim() == "*" => all = Some(parse_rational(value.trim())?),
            _ => rest.push(item.clone()),
        }
    }
    let mut a = match all {
        Some(v) => ParamAssignment::constant(names, v)?,
        None => ParamAssignment::new(),
    };
    let explicit = ParamAssignment::parse(&rest, names)?;
    for id in names.ids() {
        if let Some(v) = explicit.get(id) {
            a.set(id, v.clone())?;
        }
    }
    Ok(a)
}

fn show_presentation(p: &Presentation, common: &Common) -> Outcome {
    let text = if common.assign.is_empty() {
        match common.format {
            Format::Text => render::presentation_text(p, TextStyle::from_env()),
            Format::Json => render::presentation_json(p),
        }
    } else {
        let a = assignment(&common.assign, &p.params)?;
        match common.format {
            Format::Text => render::presentation_eval_text(p, &a, TextStyle::from_env())?,
            Format::Json => render::presentation_eval_json(p, &a)?,
        }
    };
    emit(&common.output, &text)
}

fn show_matrix(
    m: &DeformationMatrix,
    names: &ParamNames,
    labels: &[String],
    common: &Common,
) -> Outcome {
    let text = if common.assign.is_empty() {
        match common.format {
            Format::Text => render::matrix_text(m, names, labels),
            Format::Json => render::matrix_json(m, names, labels),
        }
    } else {
        let a = assignment(&common.assign, names)?;
        match common.format {
            Format::Text => render::matrix_eval_text(m, labels, &a)?,
            Format::Json => render::matrix_eval_json(m, names, labels, &a)?,
        }
    };
    emit(&common.output, &text)
}

fn space(n: usize, commutative: bool) -> Result<QuantumSpace, Error> {
    if commutative {
        QuantumSpace::new(n, DeformationMatrix::ones(n + 1), Default::default())
    } else {
        Ok(QuantumSpace::generic(n))
    }
}

fn veronese(args: &VeroneseArgs) -> Result<VeroneseMap, Error> {
    VeroneseMap::new(&QuantumSpace::generic(args.n), args.d as usize)
}

fn certify(args: &CertifyArgs) -> Outcome {
    let (mut sys, expected) = match args.kind {
        Kind::Veronese | Kind::Lifted => {
            let v = VeroneseMap::new(&QuantumSpace::generic(args.n), args.d)?;
            let expected = v.image_dim(3);
            let sys = if args.kind == Kind::Veronese {
                RewriteSystem::from_presentation(
                    &v.kernel_gb(),
                    Setting::QuantumSpace(v.derived_matrix()),
                )?
            } else {
                RewriteSystem::from_presentation(&v.lifted_kernel_gb(), Setting::FreeAlgebra)?
            };
            (sys, expected)
        }
        Kind::Segre => {
            let s = SegreMap::generic(args.n, args.m);
            let sys = RewriteSystem::from_presentation(
                &s.kernel_gb(),
                Setting::QuantumSpace(s.matrix().clone()),
            )?;
            (sys, s.hilbert_dim(3))
        }
        Kind::Space => {
            let s = QuantumSpace::generic(args.n);
            let sys = RewriteSystem::from_presentation(&s.relations(), Setting::FreeAlgebra)?;
            (sys, s.hilbert_dim(3))
        }
        Kind::Koszul => {
            let s = QuantumSpace::generic(args.n);
            let sys = RewriteSystem::from_presentation(&s.koszul_dual(), Setting::FreeAlgebra)?;
            (sys, qgrobner::binomial(args.n as u64 + 1, 3))
        }
    };
    let leads: Vec<Word> = sys.rules().map(|(l, _)| l.clone()).collect();
    let pick = |k: usize| {
        leads.get(k).cloned().ok_or_else(|| {
            Failure::Usage(format!("rule index {k} out of range (0..{})", leads.len()))
        })
    };
    if let Some(k) = args.corrupt_rule {
        let mut names = ParamNames::new();
        let fresh = LaurentMonomial::param(names.push("fresh")?);
        sys.scale_rule(&pick(k)?, &fresh)?;
        sys.id.push_str(&format!(" corrupted@{k}"));
    }
    if let Some(k) = args.drop_rule {
        sys.remove_rule(&pick(k)?);
        sys.id.push_str(&format!(" dropped@{k}"));
    }
    let expected: u64 = expected
        .try_into()
        .map_err(|_| Failure::Usage("expected dimension exceeds u64".into()))?;
    let report = sys.certify_quadratic_gb(expected)?;
    let text = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    emit(&args.output, &text)?;
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "certification failed for {}",
            report.system_id
        )))
    }
}

fn eval(args: &EvalArgs) -> Outcome {
    if args.common.assign.is_empty() {
        return Err(Failure::Usage("eval needs at least one --assign".into()));
    }
    match args.target {
        Target::Space => {
            show_presentation(&QuantumSpace::generic(args.n).relations(), &args.common)
        }
        Target::KoszulDual => {
            show_presentation(&QuantumSpace::generic(args.n).koszul_dual(), &args.common)
        }
        Target::VeroneseKernel | Target::VeroneseMatrix => {
            let v = VeroneseMap::new(&QuantumSpace::generic(args.n), args.d)?;
            if args.target == Target::VeroneseKernel {
                show_presentation(&v.kernel_gb(), &args.common)
            } else {
                show_matrix(
                    &v.derived_matrix(),
                    v.space().params(),
                    v.labels(),
                    &args.common,
                )
            }
        }
        Target::SegreKernel => {
            show_presentation(&SegreMap::generic(args.n, args.m).kernel_gb(), &args.common)
        }
        Target::SegreMatrix => {
            let s = SegreMap::generic(args.n, args.m);
            show_matrix(s.matrix(), s.params(), s.space().labels(), &args.common)
        }
    }
}

fn examples(write: &Option<PathBuf>) -> Outcome {
    let fresh = corpus::generate()?;
    if let Some(dir) = write {
        fs::create_dir_all(dir)
            .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", dir.display())))?;
        for f in &fresh {
            emit(&Some(dir.join(f.name)), &f.contents)?;
        }
    }
    let mut mismatched = Vec::new();
    for (f, (name, committed)) in fresh.iter().zip(corpus::committed()) {
        let ok = f.name == name && f.contents == committed;
        println!("{} {}", if ok { "ok      " } else { "MISMATCH" }, f.name);
        if !ok {
            mismatched.push(f.name);
        }
    }
    if mismatched.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "fixtures differ: {}",
            mismatched.join(", ")
        )))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::VeronesePresentation(args) => {
            let p = veronese(&args)?.presentation();
            match args.common.format {
                Format::Text if args.common.assign.is_empty() => {
                    let style = TextStyle::from_env();
                    let text = format!(
                        "# R1\n{}# R2\n{}# R1'\n{}",
                        render::presentation_text(&p.r1, style),
                        render::presentation_text(&p.r2, style),
                        render::presentation_text(&p.r1_prime, style)
                    );
                    emit(&args.common.output, &text)
                }
                _ => {
                    // R1 followed by R2 as a single presentation
                    let mut all = p.r1.clone();
                    all.relations.extend(p.r2.relations.iter().cloned());
                    show_presentation(&all, &args.common)
                }
            }
        }
        Command::VeroneseKernel { args, lifted } => {
            let v = veronese(&args)?;
            let p = if lifted {
                v.lifted_kernel_gb()
            } else {
                v.kernel_gb()
            };
            show_presentation(&p, &args.common)
        }
        Command::VeroneseMatrix(args) => {
            let v = veronese(&args)?;
            show_matrix(
                &v.derived_matrix(),
                v.space().params(),
                v.labels(),
                &args.common,
            )
        }
        Command::SegreMatrix(args) => {
            let s = SegreMap::generic(args.n, args.m);
            show_matrix(s.matrix(), s.params(), s.space().labels(), &args.common)
        }
        Command::SegreKernel { args, space } => {
            let s = SegreMap::generic(args.n, args.m);
            let p = if space {
                s.space_relations()
            } else {
                s.kernel_gb()
            };
            show_presentation(&p, &args.common)
        }
        Command::KoszulDual(args) => show_presentation(
            &space(args.n, args.commutative)?.koszul_dual(),
            &args.common,
        ),
        Command::Certify(args) => certify(&args),
        Command::Eval(args) => eval(&args),
        Command::Examples { write } => examples(&write),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("qgrobner: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("qgrobner: {msg}");
            eprintln!("Run `qgrobner --help` for usage.");
            ExitCode::from(2)
        }
    }
}
