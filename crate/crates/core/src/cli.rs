//! The `latdual` command line.
//!
//! Every verb prints exactly one JSON document on stdout; diagnostics go to
//! stderr. Exit status: 0 answer produced, 1 negative answer under
//! `--strict-exit`, 2 bad input, 3 enumeration guard exceeded, 4 internal
//! error (including a disagreement between the recursive duality test and
//! the brute-force check).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::bitset::BitSet;
use crate::context::FormalContext;
use crate::dualization::{self, DualityInstance, TestOptions};
use crate::error::Error;
use crate::formats;
use crate::hypotheses::{self, ExhaustiveDecider, TrainingContext};
use crate::implications;
use crate::poset::Poset;
use crate::reductions::{self, ExplicitLattice};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser)]
#[command(name = "latdual", version, about = "Duality, hypotheses and implications over finite lattices")]
struct Cli {
    /// Exit with status 1 when a yes/no verb answers no.
    #[arg(long, global = true)]
    strict_exit: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Formal contexts in .cxt format.
    #[command(subcommand)]
    Ctx(CtxCmd),
    /// Hypotheses of a training context.
    #[command(subcommand)]
    Hypo(HypoCmd),
    /// Duality of antichains in the downset lattice of a poset.
    #[command(subcommand)]
    Dual(DualCmd),
    /// Problem translations.
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// Implications and bases.
    #[command(subcommand)]
    Imp(ImpCmd),
    /// Posets.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Explicitly given lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
}

#[derive(Subcommand)]
enum CtxCmd {
    /// List all concepts.
    Concepts {
        #[arg(long)]
        context: PathBuf,
    },
    /// Remove reducible objects and attributes.
    Reduce {
        #[arg(long)]
        context: PathBuf,
        /// Also write the reduced context to this .cxt file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Close an attribute set.
    Close {
        #[arg(long)]
        context: PathBuf,
        /// Comma-separated attribute names.
        #[arg(long, default_value = "")]
        set: String,
    },
}

#[derive(Args)]
struct TrainingArgs {
    /// Positive examples (.cxt).
    #[arg(long, requires = "neg", conflicts_with = "training")]
    pos: Option<PathBuf>,
    /// Negative examples (.cxt) with the same attributes.
    #[arg(long, requires = "pos")]
    neg: Option<PathBuf>,
    /// Both sides in one JSON file.
    #[arg(long)]
    training: Option<PathBuf>,
}

#[derive(Subcommand)]
enum HypoCmd {
    /// Minimal k-weak positive hypotheses.
    Minimal {
        #[command(flatten)]
        input: TrainingArgs,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Find them one at a time by projection search (k = 0 only).
        #[arg(long)]
        iterative: bool,
    },
    /// All k-weak positive hypotheses.
    All {
        #[command(flatten)]
        input: TrainingArgs,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Classify an example by the minimal positive and negative hypotheses.
    Classify {
        #[command(flatten)]
        input: TrainingArgs,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Comma-separated attributes of the example.
        #[arg(long)]
        intent: String,
    },
    /// Is there a minimal hypothesis outside a known list?
    Amh {
        #[command(flatten)]
        input: TrainingArgs,
        /// Family JSON of known minimal hypotheses (default: none).
        #[arg(long)]
        known: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DualCmd {
    /// Recursive duality test.
    Test {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Cross-check with the brute-force test and report its witness.
        #[arg(long)]
        oracle: bool,
        /// Run the two branches of each split in parallel.
        #[arg(long)]
        parallel: bool,
        /// Include recursion statistics.
        #[arg(long)]
        stats: bool,
    },
    /// Brute-force duality test over all downsets.
    Brute {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// The antichain dual to A, by brute force.
    Dualize {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        a: PathBuf,
    },
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// Training context and known hypotheses from a DIMACS CNF.
    Sat2amh {
        #[arg(long)]
        cnf: PathBuf,
        /// Directory for training.json, known.json, k_plus.cxt, k_minus.cxt.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Base-recognition instance from a duality instance over a context.
    Dci2mibr {
        #[arg(long)]
        context: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Implication JSON forming a base of the context.
        #[arg(long)]
        base: PathBuf,
        /// Directory for k_b.cxt and j_a.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ImpCmd {
    /// Close an attribute set under implications.
    Close {
        /// Context supplying the attribute names.
        #[arg(long)]
        context: PathBuf,
        #[arg(long)]
        base: PathBuf,
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Do the implications form a base of the context?
    IsBase {
        #[arg(long)]
        context: PathBuf,
        #[arg(long)]
        base: PathBuf,
    },
    /// Base with one-element premises of the downset lattice.
    MinBase {
        #[arg(long)]
        poset: PathBuf,
    },
    /// Context whose intents are the downsets of a poset.
    Contraordinal {
        #[arg(long)]
        poset: PathBuf,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    /// All downsets.
    Downsets {
        #[arg(long)]
        poset: PathBuf,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Join- and meet-irreducible elements.
    Irreducibles {
        #[arg(long)]
        lattice: PathBuf,
    },
    /// Context of a product of lattices.
    Product {
        /// One poset JSON file per factor.
        #[arg(long = "lattice", required = true)]
        lattices: Vec<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<(Value, Option<bool>), Failure>;

/// Runs the command line `args` (program name first), writing the JSON
/// result to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok((doc, answer)) => {
            let text = serde_json::to_string_pretty(&doc).expect("json values serialize");
            if writeln!(out, "{text}").is_err() {
                return EXIT_INTERNAL;
            }
            if cli.strict_exit && answer == Some(false) {
                EXIT_NO
            } else {
                EXIT_OK
            }
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::GuardExceeded { .. } => EXIT_GUARD,
                Error::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            }
        }
        Err(Failure::Disagreement(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn read(path: &Path) -> crate::Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> crate::Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))
}

fn load_context(path: &Path) -> crate::Result<FormalContext> {
    formats::parse_cxt(&read(path)?)
}

fn load_poset(path: &Path) -> crate::Result<Poset> {
    formats::parse_poset_json(&read(path)?)
}

fn load_training(args: &TrainingArgs) -> crate::Result<TrainingContext> {
    match (&args.training, &args.pos, &args.neg) {
        (Some(t), _, _) => formats::parse_training_json(&read(t)?),
        (None, Some(p), Some(n)) => TrainingContext::new(load_context(p)?, load_context(n)?),
        _ => Err(Error::Invalid("give --training or both --pos and --neg".into())),
    }
}

fn load_instance(poset: &Path, a: &Path, b: &Path) -> crate::Result<DualityInstance> {
    let p = load_poset(poset)?;
    let a = formats::parse_family_json(&read(a)?, p.names())?;
    let b = formats::parse_family_json(&read(b)?, p.names())?;
    DualityInstance::new(p, a, b)
}

fn context_json(ctx: &FormalContext) -> Value {
    json!({
        "objects": ctx.objects(),
        "attributes": ctx.attributes(),
        "cxt": formats::write_cxt(ctx),
    })
}

fn witness_json(w: &Option<BitSet>, names: &[String]) -> Value {
    w.as_ref().map_or(Value::Null, |w| formats::set_json(w, names))
}

fn execute(cmd: &Command) -> Outcome {
    match cmd {
        Command::Ctx(c) => ctx(c),
        Command::Hypo(c) => hypo(c),
        Command::Dual(c) => dual(c),
        Command::Reduce(c) => reduce(c),
        Command::Imp(c) => imp(c),
        Command::Poset(c) => poset(c),
        Command::Lattice(c) => lattice(c),
    }
}

fn ctx(cmd: &CtxCmd) -> Outcome {
    match cmd {
        CtxCmd::Concepts { context } => {
            let k = load_context(context)?;
            let list: Vec<Value> = k
                .concepts()?
                .iter()
                .map(|c| {
                    json!({
                        "extent": formats::set_json(&c.extent, k.objects()),
                        "intent": formats::set_json(&c.intent, k.attributes()),
                    })
                })
                .collect();
            Ok((Value::Array(list), None))
        }
        CtxCmd::Reduce { context, out } => {
            let r = load_context(context)?.reduce();
            if let Some(path) = out {
                write_file(path, &formats::write_cxt(&r))?;
            }
            Ok((context_json(&r), None))
        }
        CtxCmd::Close { context, set } => {
            let k = load_context(context)?;
            let x = formats::parse_name_list(set, k.attributes())?;
            Ok((formats::set_json(&k.close_attributes(&x), k.attributes()), None))
        }
    }
}

fn hypo(cmd: &HypoCmd) -> Outcome {
    match cmd {
        HypoCmd::Minimal { input, k, iterative } => {
            let t = load_training(input)?;
            let min = if *iterative {
                if *k != 0 {
                    return Err(Error::Invalid("--iterative supports only k = 0".into()).into());
                }
                hypotheses::minimal_hypotheses_iterative(&t, &ExhaustiveDecider)?
            } else {
                hypotheses::minimal_hypotheses(&t, *k)
            };
            Ok((formats::family_json(&min, t.attributes()), None))
        }
        HypoCmd::All { input, k } => {
            let t = load_training(input)?;
            Ok((formats::family_json(&hypotheses::enumerate_hypotheses(&t, *k), t.attributes()), None))
        }
        HypoCmd::Classify { input, k, intent } => {
            let t = load_training(input)?;
            let x = formats::parse_name_list(intent, t.attributes())?;
            let pos = hypotheses::minimal_hypotheses(&t, *k);
            let neg = hypotheses::minimal_hypotheses(&t.swapped(), *k);
            let label = hypotheses::classify(&x, &pos, &neg);
            Ok((json!({ "classification": label.as_str() }), None))
        }
        HypoCmd::Amh { input, known } => {
            let t = load_training(input)?;
            let known = match known {
                Some(path) => formats::parse_family_json(&read(path)?, t.attributes())?,
                None => Vec::new(),
            };
            let additional = hypotheses::decide_amh(&t, &known)?;
            let found = if additional {
                formats::set_json(&hypotheses::find_new_min_h(&t, &known)?, t.attributes())
            } else {
                Value::Null
            };
            Ok((json!({ "additional": additional, "hypothesis": found }), Some(additional)))
        }
    }
}

fn dual(cmd: &DualCmd) -> Outcome {
    match cmd {
        DualCmd::Test {
            poset,
            a,
            b,
            oracle,
            parallel,
            stats,
        } => {
            let inst = load_instance(poset, a, b)?;
            let run = dualization::test_duality_with(&inst, TestOptions { parallel: *parallel })?;
            let mut witness = Value::Null;
            if *oracle {
                let v = dualization::brute_force_dual(&inst)?;
                if v.dual != run.dual {
                    return Err(Failure::Disagreement(format!(
                        "recursive test says {}, brute force says {}",
                        run.dual, v.dual
                    )));
                }
                witness = witness_json(&v.witness, inst.poset().names());
            }
            let mut doc = Map::new();
            doc.insert("dual".into(), run.dual.into());
            doc.insert("witness".into(), witness);
            doc.insert("recursive_calls".into(), run.recursive_calls.into());
            if *stats {
                doc.insert(
                    "stats".into(),
                    json!({
                        "max_depth": run.max_depth,
                        "size_splits": run.size_splits,
                        "frequency_splits": run.frequency_splits,
                        "frequency_rejections": run.frequency_rejections,
                        "easy_leaves": run.easy_leaves,
                    }),
                );
            }
            Ok((Value::Object(doc), Some(run.dual)))
        }
        DualCmd::Brute { poset, a, b } => {
            let inst = load_instance(poset, a, b)?;
            let v = dualization::brute_force_dual(&inst)?;
            let doc = json!({ "dual": v.dual, "witness": witness_json(&v.witness, inst.poset().names()) });
            Ok((doc, Some(v.dual)))
        }
        DualCmd::Dualize { poset, a } => {
            let p = load_poset(poset)?;
            let a = formats::parse_family_json(&read(a)?, p.names())?;
            let b = dualization::dualize_brute(&p, &a)?;
            Ok((formats::family_json(&b, p.names()), None))
        }
    }
}

fn reduce(cmd: &ReduceCmd) -> Outcome {
    match cmd {
        ReduceCmd::Sat2amh { cnf, out } => {
            let f = formats::parse_dimacs(&read(cnf)?)?;
            let inst = reductions::sat_to_amh(&f)?;
            let t = &inst.training;
            let training = formats::training_json(t);
            let known = formats::family_json(&inst.known, t.attributes());
            if let Some(dir) = out {
                std::fs::create_dir_all(dir).map_err(|e| Error::Invalid(format!("cannot create {}: {e}", dir.display())))?;
                write_file(&dir.join("training.json"), &pretty(&training))?;
                write_file(&dir.join("known.json"), &pretty(&known))?;
                write_file(&dir.join("k_plus.cxt"), &formats::write_cxt(t.positive()))?;
                write_file(&dir.join("k_minus.cxt"), &formats::write_cxt(t.negative()))?;
            }
            Ok((json!({ "training": training, "known": known }), None))
        }
        ReduceCmd::Dci2mibr { context, a, b, base, out } => {
            let k = load_context(context)?;
            let attrs = k.attributes();
            let a = formats::parse_family_json(&read(a)?, attrs)?;
            let b = formats::parse_family_json(&read(b)?, attrs)?;
            let j = formats::parse_implications_json(&read(base)?, attrs)?;
            let (kb, ja) = implications::dci_to_mibr(&k, &a, &b, &j)?;
            let ja_json = formats::implications_json(&ja, attrs);
            if let Some(dir) = out {
                std::fs::create_dir_all(dir).map_err(|e| Error::Invalid(format!("cannot create {}: {e}", dir.display())))?;
                write_file(&dir.join("k_b.cxt"), &formats::write_cxt(&kb))?;
                write_file(&dir.join("j_a.json"), &pretty(&ja_json))?;
            }
            Ok((json!({ "context": context_json(&kb), "implications": ja_json }), None))
        }
    }
}

fn imp(cmd: &ImpCmd) -> Outcome {
    match cmd {
        ImpCmd::Close { context, base, set } => {
            let k = load_context(context)?;
            let j = formats::parse_implications_json(&read(base)?, k.attributes())?;
            let x = formats::parse_name_list(set, k.attributes())?;
            Ok((formats::set_json(&implications::imp_closure(&j, &x), k.attributes()), None))
        }
        ImpCmd::IsBase { context, base } => {
            let k = load_context(context)?;
            let j = formats::parse_implications_json(&read(base)?, k.attributes())?;
            let cex = implications::base_counterexample(&k, &j)?;
            let doc = json!({ "base": cex.is_none(), "counterexample": witness_json(&cex, k.attributes()) });
            Ok((doc, Some(cex.is_none())))
        }
        ImpCmd::MinBase { poset } => {
            let p = load_poset(poset)?;
            Ok((formats::implications_json(&implications::distributive_min_base(&p), p.names()), None))
        }
        ImpCmd::Contraordinal { poset } => {
            let p = load_poset(poset)?;
            Ok((context_json(&implications::contraordinal_context(&p)), None))
        }
    }
}

fn poset(cmd: &PosetCmd) -> Outcome {
    match cmd {
        PosetCmd::Downsets { poset } => {
            let p = load_poset(poset)?;
            Ok((formats::family_json(&p.all_downsets()?, p.names()), None))
        }
    }
}

fn lattice(cmd: &LatticeCmd) -> Outcome {
    match cmd {
        LatticeCmd::Irreducibles { lattice } => {
            let l = ExplicitLattice::new(load_poset(lattice)?)?;
            let (j, m) = reductions::irreducibles(&l);
            let names = l.order().names();
            let doc = json!({
                "join_irreducible": formats::set_json(&j, names),
                "meet_irreducible": formats::set_json(&m, names),
            });
            Ok((doc, None))
        }
        LatticeCmd::Product { lattices } => {
            let ls = lattices
                .iter()
                .map(|p| ExplicitLattice::new(load_poset(p)?))
                .collect::<crate::Result<Vec<_>>>()?;
            Ok((context_json(&reductions::product_context(&ls)?), None))
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("latdual").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn help_and_usage_errors() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("dual"));
        let (code, _, err) = run_args(&["frobnicate"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(!err.is_empty());
    }

    #[test]
    fn missing_file_is_input_error() {
        let (code, out, err) = run_args(&["ctx", "concepts", "--context", "/nonexistent/k.cxt"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(out.is_empty());
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn training_source_required() {
        let (code, _, err) = run_args(&["hypo", "minimal"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("--training"));
    }
}
