use std::ffi::OsString;
use std::fmt::Write as _;
use std::io;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rough_cpfs::algebra::{
    enumerate_congruences, enumerate_semigroups, find_crisp_ideals, FiniteSemigroup, StructureKind,
};
use rough_cpfs::cpfs::{
    check_cpfs_property_with, compose, CubicFuzzySet, PropertyOptions, Witness,
};
use rough_cpfs::rough::{approximate, check_rough_property, Approximation, RoughSide};
use rough_cpfs::verifier::{Mode, SweepConfig, TheoremId};

use crate::instance::{self, Instance, Names};
use crate::report;

#[derive(Parser)]
#[command(
    name = "rcpfs",
    version,
    about = "Rough cubic Pythagorean fuzzy sets over finite semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every section of an instance file.
    Validate { path: PathBuf },
    /// Print the lower and/or upper approximation of a named set.
    Approx {
        path: PathBuf,
        set: String,
        #[arg(long, default_value = "both")]
        side: RoughSide,
        /// Emit an instance file holding the approximations instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print the composition of two named sets.
    Compose {
        path: PathBuf,
        set_a: String,
        set_b: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a structure predicate on a named set or its approximations.
    Check {
        path: PathBuf,
        set: String,
        kind: StructureKind,
        #[arg(long)]
        rough: Option<RoughSide>,
        /// Bi-ideals must also be subsemigroups.
        #[arg(long)]
        strict_bi: bool,
    },
    /// Print the quotient semigroup by the file's congruence.
    Quotient { path: PathBuf },
    /// List semigroups of an order, or congruences or crisp ideals of an instance.
    Enumerate {
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        order: Option<usize>,
        #[arg(long)]
        congruences: bool,
        #[arg(long, conflicts_with = "congruences")]
        crisp_ideals: Option<StructureKind>,
    },
    /// Run the theorem sweep and write a report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem ids separated by commas, or `all`.
    #[arg(long, default_value = "all", value_delimiter = ',')]
    theorem: Vec<String>,
    #[arg(long, default_value_t = 3)]
    max_order: usize,
    /// Random semigroups per order above 3.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 25)]
    cpfs_samples: usize,
    #[arg(long, env = "ROUGH_CPFS_SEED", default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "claim")]
    mode: Mode,
    #[arg(long)]
    strict_bi: bool,
    #[arg(long, default_value_t = 5)]
    max_counterexamples: usize,
    /// Take the config from an earlier report (or a bare config file).
    #[arg(long, conflicts_with_all = ["theorem", "max_order", "samples", "cpfs_samples", "seed", "mode", "strict_bi", "max_counterexamples"])]
    config: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; the report does not depend on this.
    #[arg(long)]
    workers: Option<usize>,
}

/// Exit codes: 0 true or success, 1 false or theorem failure, 2 error.
enum Outcome {
    True,
    False,
}

type CmdResult = Result<Outcome, String>;

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn io::Write, err: &mut dyn io::Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut text = String::new();
    let result = dispatch(cli.command, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(Outcome::True) => 0,
        Ok(Outcome::False) => 1,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut String) -> CmdResult {
    match command {
        Command::Validate { path } => cmd_validate(out, &path),
        Command::Approx {
            path,
            set,
            side,
            json,
        } => cmd_approx(out, &path, &set, side, json),
        Command::Compose {
            path,
            set_a,
            set_b,
            json,
        } => cmd_compose(out, &path, &set_a, &set_b, json),
        Command::Check {
            path,
            set,
            kind,
            rough,
            strict_bi,
        } => cmd_check(out, &path, &set, kind, rough, strict_bi),
        Command::Quotient { path } => cmd_quotient(out, &path),
        Command::Enumerate {
            path,
            order,
            congruences,
            crisp_ideals,
        } => cmd_enumerate(out, path, order, congruences, crisp_ideals),
        Command::Verify(args) => cmd_verify(out, args),
    }
}

fn load(path: &Path) -> Result<Instance, String> {
    instance::load(path).map_err(|e| e.to_string())
}

fn cmd_validate(out: &mut String, path: &Path) -> CmdResult {
    let inst = load(path)?;
    let s = &inst.semigroup;
    let _ = writeln!(out, "semigroup: order {} ok", s.order());
    if let Some(w) = &inst.congruence {
        let _ = writeln!(
            out,
            "congruence: {} classes, {}",
            w.class_count(),
            if w.is_complete() {
                "complete"
            } else {
                "not complete"
            }
        );
    }
    for name in inst.sets.keys() {
        let _ = writeln!(out, "cpfs {name}: ok");
    }
    Ok(Outcome::True)
}

fn print_set(out: &mut String, title: &str, p: &CubicFuzzySet, names: &Names) {
    let _ = writeln!(out, "{title}");
    for (e, g) in p.grades().iter().enumerate() {
        let _ = writeln!(out, "  {}: {g}", names.label(e));
    }
}

fn emit(out: &mut String, inst: &Instance, sets: Vec<(String, &CubicFuzzySet)>, json: bool) {
    if json {
        let file = instance::to_file(inst, &sets);
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&file).expect("instance serializes")
        );
    } else {
        for (title, p) in sets {
            print_set(out, &title, p, &inst.names);
        }
    }
}

fn cmd_approx(out: &mut String, path: &Path, set: &str, side: RoughSide, json: bool) -> CmdResult {
    let inst = load(path)?;
    let w = inst.congruence().map_err(|e| e.to_string())?;
    let p = inst.set(set).map_err(|e| e.to_string())?;
    let sides: &[Approximation] = match side {
        RoughSide::Lower => &[Approximation::Lower],
        RoughSide::Upper => &[Approximation::Upper],
        RoughSide::Both => &[Approximation::Lower, Approximation::Upper],
    };
    let approxs = sides
        .iter()
        .map(|&which| {
            approximate(&inst.semigroup, w, p, which)
                .map(|a| (format!("{which}({set})"), a))
                .map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, _>>()?;
    emit(
        out,
        &inst,
        approxs.iter().map(|(n, a)| (n.clone(), a)).collect(),
        json,
    );
    Ok(Outcome::True)
}

fn cmd_compose(out: &mut String, path: &Path, a: &str, b: &str, json: bool) -> CmdResult {
    let inst = load(path)?;
    let p = inst.set(a).map_err(|e| e.to_string())?;
    let q = inst.set(b).map_err(|e| e.to_string())?;
    let c = compose(&inst.semigroup, p, q).map_err(|e| e.to_string())?;
    emit(out, &inst, vec![(format!("{a} o {b}"), &c)], json);
    Ok(Outcome::True)
}

fn describe_witness(w: &Witness, names: &Names) -> String {
    let bindings: Vec<String> = w
        .tuple
        .iter()
        .map(|(v, e)| format!("{v}={}", names.label(*e)))
        .collect();
    format!(
        "at {}: {} fails with lhs {} and rhs {}",
        bindings.join(", "),
        w.condition,
        w.lhs,
        w.rhs
    )
}

fn cmd_check(
    out: &mut String,
    path: &Path,
    set: &str,
    kind: StructureKind,
    rough: Option<RoughSide>,
    strict_bi: bool,
) -> CmdResult {
    let inst = load(path)?;
    let p = inst.set(set).map_err(|e| e.to_string())?;
    let options = PropertyOptions {
        strict_bi_ideal: strict_bi,
    };
    let (subject, verdict) = match rough {
        None => (
            set.to_string(),
            check_cpfs_property_with(&inst.semigroup, p, kind, options)
                .map_err(|e| e.to_string())?,
        ),
        Some(side) => {
            let w = inst.congruence().map_err(|e| e.to_string())?;
            let (failed, verdict) =
                check_rough_property(&inst.semigroup, w, p, kind, side, options)
                    .map_err(|e| e.to_string())?;
            let subject = match (failed, side) {
                (Some(which), _) => format!("{which}({set})"),
                (None, RoughSide::Both) => format!("lower({set}) and upper({set})"),
                (None, RoughSide::Lower) => format!("lower({set})"),
                (None, RoughSide::Upper) => format!("upper({set})"),
            };
            (subject, verdict)
        }
    };
    match verdict.witness() {
        None => {
            let _ = writeln!(out, "{subject}: {kind} holds");
            Ok(Outcome::True)
        }
        Some(w) => {
            let _ = writeln!(out, "{subject}: not a {kind}");
            let _ = writeln!(out, "  {}", describe_witness(w, &inst.names));
            Ok(Outcome::False)
        }
    }
}

fn print_table(out: &mut String, s: &FiniteSemigroup) {
    let width = s.order().saturating_sub(1).to_string().len();
    let _ = write!(out, "{:>width$} |", "*");
    for b in s.elements() {
        let _ = write!(out, " {b:>width$}");
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{}", "-".repeat((width + 1) * (s.order() + 1) + 1));
    for a in s.elements() {
        let _ = write!(out, "{a:>width$} |");
        for b in s.elements() {
            let _ = write!(out, " {:>width$}", s.mul(a, b));
        }
        let _ = writeln!(out);
    }
}

fn class_text(class: &[usize], names: &Names) -> String {
    let members: Vec<String> = class.iter().map(|&e| names.label(e).to_string()).collect();
    format!("{{{}}}", members.join(", "))
}

fn cmd_quotient(out: &mut String, path: &Path) -> CmdResult {
    let inst = load(path)?;
    let w = inst.congruence().map_err(|e| e.to_string())?;
    for (i, class) in w.classes().iter().enumerate() {
        let _ = writeln!(out, "class {i} = {}", class_text(class, &inst.names));
    }
    let _ = writeln!(
        out,
        "{}",
        if w.is_complete() {
            "complete"
        } else {
            "not complete"
        }
    );
    print_table(out, &w.quotient(&inst.semigroup));
    Ok(Outcome::True)
}

fn table_text(s: &FiniteSemigroup) -> String {
    serde_json::to_string(&s.rows()).expect("rows serialize")
}

fn cmd_enumerate(
    out: &mut String,
    path: Option<PathBuf>,
    order: Option<usize>,
    congruences: bool,
    crisp: Option<StructureKind>,
) -> CmdResult {
    match (path, order) {
        (None, Some(n)) => {
            if crisp.is_some() {
                return Err("--crisp-ideals needs an instance file".into());
            }
            let semigroups: Vec<_> = enumerate_semigroups(n)
                .map_err(|e| e.to_string())?
                .collect();
            let (mut total, mut complete) = (0, 0);
            for s in &semigroups {
                if congruences {
                    let ws = enumerate_congruences(s).map_err(|e| e.to_string())?;
                    let c = ws.iter().filter(|w| w.is_complete()).count();
                    let _ = writeln!(
                        out,
                        "{}  congruences {} complete {c}",
                        table_text(s),
                        ws.len()
                    );
                    total += ws.len();
                    complete += c;
                } else {
                    let _ = writeln!(out, "{}", table_text(s));
                }
            }
            let _ = write!(out, "{} semigroups of order {n}", semigroups.len());
            if congruences {
                let _ = write!(out, ", {total} congruences, {complete} complete");
            }
            let _ = writeln!(out);
        }
        (Some(path), None) => {
            let inst = load(&path)?;
            if let Some(kind) = crisp {
                let sets = find_crisp_ideals(&inst.semigroup, kind).map_err(|e| e.to_string())?;
                for set in &sets {
                    let _ = writeln!(out, "{}", class_text(&set.to_vec(), &inst.names));
                }
                let _ = writeln!(out, "{} crisp {kind} sets", sets.len());
            } else if congruences {
                let ws = enumerate_congruences(&inst.semigroup).map_err(|e| e.to_string())?;
                for w in &ws {
                    let classes: Vec<String> = w
                        .classes()
                        .iter()
                        .map(|c| class_text(c, &inst.names))
                        .collect();
                    let _ = writeln!(
                        out,
                        "{}  {}",
                        classes.join(" "),
                        if w.is_complete() {
                            "complete"
                        } else {
                            "not complete"
                        }
                    );
                }
                let complete = ws.iter().filter(|w| w.is_complete()).count();
                let _ = writeln!(out, "{} congruences, {complete} complete", ws.len());
            } else {
                return Err("with an instance file, pass --congruences or --crisp-ideals".into());
            }
        }
        _ => return Err("pass either an instance file or --order".into()),
    }
    Ok(Outcome::True)
}

fn sweep_config(args: &VerifyArgs) -> Result<SweepConfig, String> {
    if let Some(path) = &args.config {
        return report::load_config(path);
    }
    let theorems = if args.theorem.iter().any(|t| t.eq_ignore_ascii_case("all")) {
        TheoremId::ALL.to_vec()
    } else {
        args.theorem
            .iter()
            .map(|t| t.parse::<TheoremId>())
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(SweepConfig {
        theorems,
        max_order: args.max_order,
        semigroup_samples: args.samples,
        cpfs_samples_per_instance: args.cpfs_samples,
        seed: args.seed,
        mode: args.mode,
        strict_bi_ideal: args.strict_bi,
        max_counterexamples: args.max_counterexamples,
    })
}

fn cmd_verify(text: &mut String, args: VerifyArgs) -> CmdResult {
    let config = sweep_config(&args)?;
    let doc = report::run(&config, args.workers).map_err(|e| e.to_string())?;
    if let Some(out) = &args.out {
        std::fs::write(out, report::to_json(&doc))
            .map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    }
    let _ = writeln!(text, "claim mode");
    for r in &doc.reports {
        let _ = writeln!(text, "  {}", report::summary_line(r));
    }
    if let Some(explore) = &doc.exploration {
        let _ = writeln!(text, "explore mode (all congruences)");
        for r in explore {
            let _ = writeln!(text, "  {}", report::summary_line(r));
        }
    }
    let audit = &doc.audit;
    let _ = writeln!(
        text,
        "approximations audited {}: invalid {}, not class-constant {}",
        audit.approximations_checked, audit.invalid, audit.not_class_constant
    );
    for r in doc.reports.iter().filter(|r| !r.passed()) {
        if let Some(c) = r.failures.first() {
            let _ = writeln!(
                text,
                "first {} counterexample: table {} classes {:?} ({}), {}: {}",
                r.theorem,
                serde_json::to_string(&c.semigroup).expect("rows serialize"),
                c.congruence,
                if c.congruence_complete {
                    "complete"
                } else {
                    "not complete"
                },
                c.approximation,
                describe_witness(&c.witness, &Names::default())
            );
        }
    }
    Ok(if doc.passed {
        Outcome::True
    } else {
        Outcome::False
    })
}
