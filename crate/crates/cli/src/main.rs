//! `mvs`: command-line front end for finite MV-algebras, their spectra,
//! lattice duality, the Γ/Δ functors and McNaughton normal forms.
//!
//! Exit codes: 0 when every check passes, 1 when an invariant fails (the
//! counterexample is printed as JSON on stdout), 2 on usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use mvs_core::classify::{classify, in_vc_symbolic, is_perfect_symbolic, rank_symbolic};
use mvs_core::corpus::{self, CorpusSpec};
use mvs_core::dot::{lattice_dot, poset_dot};
use mvs_core::functors::{
    belluce, delta, gamma, idc, komori, symbolic_spec, verify_lspec, GammaAlgebra, LexElem, LexGroup,
    SymbolicMvAlgebra, UnitalLGroup,
};
use mvs_core::io::{load_lattice_hom, parse_ideal, read_json};
use mvs_core::lattice::{
    dual_closure_equalities, dual_preserves_closed, is_closed_epi_defn, is_closed_epi_downsets, is_closed_epi_ideals,
    lattice_primes, FiniteDistLattice, LatticeTables,
};
use mvs_core::mcnaughton::{
    breakpoints, eval_nf, homogenize, is_cone_1d, is_locally_homogeneous, is_syntactically_homogeneous,
    zero_at_origin_criterion, zeroset_1d, NormalForm, RatPoint,
};
use mvs_core::mv::{quotient, validate_algebra, FiniteMvAlgebra, RawTables};
use mvs_core::poset::SpecPoset;
use mvs_core::spectra::{enumerate_ideals, ideal_label, is_maximal, is_prime, spec};
use mvs_core::{guard, verify, Error};

#[derive(Parser)]
#[command(name = "mvs", version, about = "Finite MV-algebras, spectra and lattice duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the MV-algebra axioms on a table file.
    Validate { algebra: String },
    /// The prime spectrum with its specialisation order.
    Spec {
        algebra: String,
        /// Emit the Hasse diagram in DOT.
        #[arg(long)]
        dot: bool,
        /// With --dot, wrap the DOT text in the JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Every ideal, flagged prime or maximal.
    Ideals { algebra: String },
    /// Perfect, local, semisimple, rank and variety membership.
    Classify {
        algebra: String,
        /// Values of m for membership in V(K_m); defaults to 1..=6.
        #[arg(long = "m")]
        m: Vec<usize>,
    },
    /// The quotient by an ideal, with the canonical surjection.
    Quotient {
        algebra: String,
        /// Members by index or label, e.g. "0,3,6".
        #[arg(long)]
        ideal: String,
    },
    /// Lattice homomorphisms.
    #[command(subcommand)]
    Hom(HomCommand),
    /// Finite distributive lattices.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Γ, Δ, Komori algebras and the lattice functors.
    #[command(subcommand)]
    Functor(FunctorCommand),
    /// McNaughton functions in normal form.
    #[command(subcommand)]
    Mcn(McnCommand),
    /// Run the registered invariant suites over the corpus.
    Verify(VerifyArgs),
    /// The finite test corpus.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum HomCommand {
    /// Closedness of a surjective lattice hom and of its Stone dual.
    CheckClosed { hom: String },
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// The prime ideals of a lattice, ordered by inclusion.
    Dual {
        lattice: String,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum FunctorCommand {
    /// Γ(G, u); a finite table when G = Z.
    Gamma {
        #[arg(long)]
        group: String,
        #[arg(long)]
        unit: String,
    },
    /// Δ(G) = Γ(Z lex G, (1, 0, …)).
    Delta {
        #[arg(long)]
        group: String,
    },
    /// The lattice of prime-signature classes.
    Belluce {
        algebra: String,
        #[arg(long)]
        dot: bool,
    },
    /// The lattice of principal ideals.
    Idc {
        algebra: String,
        #[arg(long)]
        dot: bool,
    },
    /// K_m = Γ(Z lex Z, (m, 0)).
    Komori {
        #[arg(long)]
        m: u64,
    },
}

#[derive(Subcommand)]
enum McnCommand {
    /// Evaluate at a point such as "1/2" or "(1/3, 1)".
    Eval {
        form: String,
        #[arg(long)]
        at: String,
    },
    /// Homogeneity checks and the homogenised form.
    Homog { form: String },
    /// The exact zero set of a unary form.
    Zeroset { form: String },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct VerifyArgs {
    #[command(subcommand)]
    command: Option<VerifyCommand>,
    /// Run only these suites (repeatable).
    #[arg(long)]
    only: Vec<String>,
    /// Run nothing; an empty selection passes.
    #[arg(long)]
    none: bool,
    /// List the registered suites.
    #[arg(long)]
    list: bool,
    /// Include per-suite runtimes, which makes output vary between runs.
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Compare Spec Δ(G) with the ℓ-spectrum of G.
    Lspec {
        #[arg(long)]
        group: String,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Write the corpus as JSON files with a hashed manifest.
    Emit {
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// What a command produced and whether its checks passed.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn json(v: &Value) -> anyhow::Result<Self> {
        Self::checked(v, true)
    }

    fn checked(v: &Value, ok: bool) -> anyhow::Result<Self> {
        Ok(Self { text: serde_json::to_string_pretty(v)?, ok })
    }

    fn text(text: String) -> Self {
        Self { text, ok: true }
    }
}

/// A file path, or the JSON document itself when it starts with `{`.
fn read_input<T: serde::de::DeserializeOwned>(arg: &str) -> anyhow::Result<T> {
    let t = arg.trim_start();
    if t.starts_with('{') {
        return serde_json::from_str(t).context("parsing inline JSON");
    }
    read_json(Path::new(arg)).with_context(|| format!("reading {arg}"))
}

fn load_algebra(arg: &str) -> anyhow::Result<FiniteMvAlgebra> {
    let raw: RawTables = read_input(arg)?;
    Ok(FiniteMvAlgebra::from_tables(&raw)?)
}

fn load_lattice(arg: &str) -> anyhow::Result<FiniteDistLattice> {
    let raw: LatticeTables = read_input(arg)?;
    Ok(FiniteDistLattice::from_tables(&raw)?)
}

fn poset_json(p: &SpecPoset) -> Value {
    json!({
        "points": p.labels(),
        "covers": p.covers(),
        "maximal": mvs_core::bits::to_vec(p.maximal()),
    })
}

fn lattice_output(l: &FiniteDistLattice, dot: bool) -> anyhow::Result<Report> {
    if dot {
        Ok(Report::text(lattice_dot(l)))
    } else {
        Report::json(&serde_json::to_value(l.to_tables())?)
    }
}

fn symbolic_json(s: &SymbolicMvAlgebra) -> anyhow::Result<Value> {
    let spectrum = symbolic_spec(s)?;
    Ok(json!({
        "algebra": s.to_string(),
        "group": s.group().to_string(),
        "unit": s.unit(),
        "perfect": is_perfect_symbolic(s)?,
        "rank": rank_symbolic(s)?,
        "inVC": in_vc_symbolic(s)?,
        "spectrum": poset_json(&spectrum),
    }))
}

fn run(cli: Cli) -> anyhow::Result<Report> {
    match cli.command {
        Command::Validate { algebra } => {
            let raw: RawTables = read_input(&algebra)?;
            guard::check_size(raw.size)?;
            let report = validate_algebra(&raw)?;
            Report::checked(&serde_json::to_value(&report)?, report.is_valid())
        }
        Command::Spec { algebra, dot, json } => {
            let a = load_algebra(&algebra)?;
            let s = spec(&a)?;
            let labels: Vec<String> = s.primes.iter().map(|&p| ideal_label(&a, p)).collect();
            let poset = SpecPoset::from_relation(labels, |i, j| s.poset.le(i, j))?;
            if dot && !json {
                return Ok(Report::text(poset_dot(&poset)));
            }
            let mut v = json!({
                "primes": s.primes.iter().map(|p| p.members()).collect::<Vec<_>>(),
                "order": poset_json(&poset),
            });
            if dot {
                v["dot"] = json!(poset_dot(&poset));
            }
            Report::json(&v)
        }
        Command::Ideals { algebra } => {
            let a = load_algebra(&algebra)?;
            let mut out = Vec::new();
            for i in enumerate_ideals(&a)? {
                out.push(json!({
                    "members": i.members(),
                    "label": ideal_label(&a, i),
                    "prime": is_prime(&a, i)?,
                    "maximal": is_maximal(&a, i)?,
                }));
            }
            Report::json(&json!(out))
        }
        Command::Classify { algebra, m } => {
            let a = load_algebra(&algebra)?;
            let ms = if m.is_empty() { (1..=6).collect() } else { m };
            Report::json(&serde_json::to_value(classify(&a, &ms)?)?)
        }
        Command::Quotient { algebra, ideal } => {
            let a = Arc::new(load_algebra(&algebra)?);
            let i = parse_ideal(&a, &ideal)?;
            let (q, pi) = quotient(&a, &i)?;
            Report::json(&json!({ "ideal": i.members(), "quotient": q.to_tables(), "map": pi.map() }))
        }
        Command::Hom(HomCommand::CheckClosed { hom }) => {
            let f = load_lattice_hom(Path::new(&hom)).with_context(|| format!("loading {hom}"))?;
            let dual = dual_preserves_closed(&f)?;
            let (defn, downsets, ideals) =
                (is_closed_epi_defn(&f)?, is_closed_epi_downsets(&f)?, is_closed_epi_ideals(&f)?);
            // The three verdicts should coincide; disagreement is an internal-consistency failure.
            let agree = defn == downsets && downsets == ideals;
            Report::checked(&json!({
                "map": f.map(),
                "closed": defn,
                "closed_downsets": downsets,
                "closed_ideals": ideals,
                "verdicts_agree": agree,
                "dual_preserves_closed": dual.preserves,
                "witness_prime": dual.witness_prime.map(|p| p.members()),
                "witness_ideal": dual.witness_ideal.map(|i| i.members()),
                "closure_equalities": dual_closure_equalities(&f)?,
            }), agree)
        }
        Command::Lattice(LatticeCommand::Dual { lattice, dot }) => {
            let l = load_lattice(&lattice)?;
            let primes = lattice_primes(&l)?;
            let labels = primes.iter().map(|p| format!("{:?}", p.members())).collect();
            let poset = SpecPoset::from_relation(labels, |i, j| primes[i].0 & !primes[j].0 == 0)?;
            if dot {
                return Ok(Report::text(poset_dot(&poset)));
            }
            Report::json(&json!({
                "primes": primes.iter().map(|p| p.members()).collect::<Vec<_>>(),
                "order": poset_json(&poset),
            }))
        }
        Command::Functor(cmd) => functor(cmd),
        Command::Mcn(cmd) => mcn(cmd),
        Command::Verify(args) => run_verify(args),
        Command::Corpus(CorpusCommand::Emit { out, seed }) => {
            let mut spec = CorpusSpec::default();
            if let Some(s) = seed {
                spec.seed = s;
            }
            let manifest = corpus::emit(&spec, &out)?;
            Report::json(&serde_json::to_value(manifest)?)
        }
    }
}

fn functor(cmd: FunctorCommand) -> anyhow::Result<Report> {
    match cmd {
        FunctorCommand::Gamma { group, unit } => {
            let g: LexGroup = group.parse()?;
            let u: LexElem = unit.parse()?;
            match gamma(&UnitalLGroup::new(g, u)?)? {
                GammaAlgebra::Finite(a) => Report::json(&json!({ "kind": "finite", "tables": a.to_tables() })),
                GammaAlgebra::Symbolic(s) => {
                    let mut v = symbolic_json(&s)?;
                    v["kind"] = json!("symbolic");
                    Report::json(&v)
                }
            }
        }
        FunctorCommand::Delta { group } => Report::json(&symbolic_json(&delta(&group.parse()?)?)?),
        FunctorCommand::Komori { m } => Report::json(&symbolic_json(&komori(m)?)?),
        FunctorCommand::Belluce { algebra, dot } => lattice_output(&belluce(&load_algebra(&algebra)?)?, dot),
        FunctorCommand::Idc { algebra, dot } => lattice_output(&idc(&load_algebra(&algebra)?)?, dot),
    }
}

fn mcn(cmd: McnCommand) -> anyhow::Result<Report> {
    match cmd {
        McnCommand::Eval { form, at } => {
            let phi: NormalForm = read_input(&form)?;
            let x: RatPoint = at.parse()?;
            let value = eval_nf(&phi, &x)?;
            Report::json(&json!({ "form": phi.to_string(), "at": x.to_string(), "value": value.to_string() }))
        }
        McnCommand::Homog { form } => {
            let phi: NormalForm = read_input(&form)?;
            let at_zero = eval_nf(&phi, &RatPoint::origin(phi.arity()))?;
            let psi = homogenize(&phi);
            Report::json(&json!({
                "form": phi.to_string(),
                "value_at_zero": at_zero.to_string(),
                "syntactically_homogeneous": is_syntactically_homogeneous(&phi),
                "zero_at_origin": zero_at_origin_criterion(&phi)?,
                "locally_homogeneous": is_locally_homogeneous(&phi)?,
                "homogenized": psi.to_string(),
                "homogenized_form": psi,
            }))
        }
        McnCommand::Zeroset { form } => {
            let phi: NormalForm = read_input(&form)?;
            let z = zeroset_1d(&phi)?;
            let bps: Vec<String> = breakpoints(&phi)?.iter().map(ToString::to_string).collect();
            Report::json(&json!({
                "form": phi.to_string(),
                "zeroset": z,
                "display": z.to_string(),
                "cone": is_cone_1d(&z),
                "breakpoints": bps,
            }))
        }
    }
}

fn run_verify(args: VerifyArgs) -> anyhow::Result<Report> {
    if let Some(VerifyCommand::Lspec { group }) = args.command {
        let g: LexGroup = group.parse()?;
        let r = verify_lspec(&g)?;
        return Report::checked(&serde_json::to_value(&r)?, r.holds());
    }
    if args.list {
        let list: Vec<Value> =
            verify::registry().iter().map(|s| json!({ "id": s.id, "statement": s.statement })).collect();
        return Report::json(&json!(list));
    }
    let mut spec = CorpusSpec::default();
    if let Some(s) = args.seed {
        spec.seed = s;
    }
    let selection = if args.none {
        Some(Vec::new())
    } else if args.only.is_empty() {
        None
    } else {
        Some(args.only)
    };
    let report = verify::run_verify(&spec, selection.as_deref(), args.timings)?;
    Report::checked(&serde_json::to_value(&report)?, report.passed)
}

fn apply_size_guard() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("MVS_SIZE_GUARD") {
        let limit: usize = v.trim().parse().map_err(|_| anyhow!("MVS_SIZE_GUARD must be a positive integer, got {v:?}"))?;
        guard::set_size_guard(limit)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = apply_size_guard() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(r) => {
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = writeln!(std::io::stdout(), "{}", r.text.trim_end());
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => match e.downcast_ref::<Error>() {
            // Two independent routes disagreed: an invariant failure.
            Some(Error::Inconsistent(msg)) => {
                let _ = writeln!(std::io::stdout(), "{}", json!({ "error": "inconsistent", "message": msg }));
                ExitCode::from(1)
            }
            _ => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
    }
}
