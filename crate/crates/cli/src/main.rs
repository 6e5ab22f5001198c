//! `hcnerve`: build `W̄𝒢`, `W𝒢` and `N𝒢` for finite simplicial groupoids,
//! compare them, and certify the comparison.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! or construction errors, 3 when the enumeration budget runs out.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hcnerve::comparison::{check_naturality, induced_map_with_budget};
use hcnerve::hc::{build_nerve_data, wbar_via_representable, DEFAULT_BUDGET};
use hcnerve::instance::InstanceSpec;
use hcnerve::invariants::{certify_equivalence, homology};
use hcnerve::pipeline::{verify_theorem, Checks, RunConfig};
use hcnerve::simplicial::{SimplicialMapData, TruncatedSSet};
use hcnerve::wbar::{build_w_total, build_wbar};
use hcnerve::SCHEMA_VERSION;

#[derive(Parser)]
#[command(name = "hcnerve", version, about = "W̄ versus the homotopy coherent nerve, on finite instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct InstanceArgs {
    /// A simplicial group: `cyclic:2`, `sym:3`, `c2*c3`, `xmod:c2,c2,trivial`, `file:g.json`.
    #[arg(long)]
    group: Option<String>,
    /// A simplicial groupoid: `two-object:cyclic:2`, `file:g.json`.
    #[arg(long)]
    groupoid: Option<String>,
}

impl InstanceArgs {
    fn spec(&self) -> hcnerve::Result<InstanceSpec> {
        match (&self.group, &self.groupoid) {
            (Some(g), _) => InstanceSpec::parse_group_arg(g),
            (_, Some(g)) => InstanceSpec::parse_groupoid_arg(g),
            _ => unreachable!("clap enforces one of the two"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Tuple,
    Representable,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckName {
    Identities,
    Kan,
    Fibration,
    Naturality,
    Equivalence,
}

#[derive(Subcommand)]
enum Command {
    /// Build W̄𝒢 through level N.
    BuildWbar {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value = "tuple")]
        engine: Engine,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the total space W𝒢 with its projection and action (groups only).
    BuildW {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the homotopy coherent nerve N𝒢 through level N.
    BuildNerve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the comparison W̄𝒢 → N𝒢 and check it.
    Compare {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Where to write the map.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the verification report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Integral homology of a simplicial set file.
    Homology {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        through: usize,
    },
    /// Certify that a map file induces isomorphisms on π₀, π₁ and H_k.
    Certify {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        through: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run every check on one instance.
    VerifyTheorem {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        through: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Check families to skip.
        #[arg(long, value_enum, value_delimiter = ',')]
        skip: Vec<CheckName>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Validate a simplicial set or map file.
    Validate {
        #[arg(long = "in", conflicts_with = "map", required_unless_present = "map")]
        input: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
    },
}

/// A finished run: either all checks passed or some failed.
enum Verdict {
    Pass,
    Fail,
}

fn write_or_print(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn run(cli: Cli) -> anyhow::Result<Verdict> {
    match cli.command {
        Command::BuildWbar { instance, dim, engine, out } => {
            let g = instance.spec()?.build(dim)?;
            let sset = match engine {
                Engine::Tuple => build_wbar(&g, dim)?,
                Engine::Representable => {
                    let (rep, map) = wbar_via_representable(&g, dim)?;
                    if !map.is_isomorphism() {
                        bail!("the representable and tuple constructions disagree");
                    }
                    rep
                }
            };
            eprintln!("W̄ counts {:?}", sset.counts());
            write_or_print(out.as_deref(), &sset.to_json_string())?;
            Ok(Verdict::Pass)
        }
        Command::BuildW { instance, dim, out } => {
            let g = instance.spec()?.build(dim)?;
            let w = build_w_total(&g, dim)?;
            let action: Vec<&[usize]> = (0..=dim).map(|n| w.action_table(n)).collect();
            let doc = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "convention": format!("{:?}", w.convention()),
                "group_orders": (0..=dim).map(|n| w.group_order(n)).collect::<Vec<_>>(),
                "total": w.total.to_json_value(),
                "projection": serde_json::from_str::<serde_json::Value>(&w.projection.to_json_string())?,
                "action": action,
            });
            eprintln!("W counts {:?}", w.total.counts());
            write_or_print(out.as_deref(), &serde_json::to_string(&doc)?)?;
            Ok(Verdict::Pass)
        }
        Command::BuildNerve { instance, dim, budget, out } => {
            let g = instance.spec()?.build(dim)?;
            let nerve = build_nerve_data(&g, dim, budget)?;
            eprintln!("N counts {:?}", nerve.sset.counts());
            write_or_print(out.as_deref(), &nerve.sset.to_json_string())?;
            Ok(Verdict::Pass)
        }
        Command::Compare { instance, dim, budget, out, report } => {
            let g = instance.spec()?.build(dim)?;
            let cmp = induced_map_with_budget(&g, dim, budget)?;
            let violations: Vec<String> = cmp.map.validate().iter().map(ToString::to_string).collect();
            let naturality = check_naturality(dim.min(3), dim.min(3))?;
            let doc = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "simplicial": violations.is_empty(),
                "violations": violations,
                "naturality": naturality,
                "levelwise_bijective": cmp.map.is_levelwise_bijective(),
                "source_counts": cmp.wbar.counts(),
                "target_counts": cmp.nerve.sset.counts(),
            });
            let ok = violations.is_empty() && naturality.passed();
            if let Some(p) = &out {
                std::fs::write(p, cmp.map.to_json_string()).with_context(|| format!("writing {}", p.display()))?;
            }
            write_or_print(report.as_deref(), &serde_json::to_string_pretty(&doc)?)?;
            Ok(verdict(ok))
        }
        Command::Homology { input, through } => {
            let sset = TruncatedSSet::from_json_str(&read(&input)?)?;
            for h in homology(&sset, through)? {
                println!("H_{} = {h}", h.k);
            }
            Ok(Verdict::Pass)
        }
        Command::Certify { map, through, report } => {
            let f = SimplicialMapData::from_json_str(&read(&map)?)?;
            let r = certify_equivalence(&f, through)?;
            if let Some(why) = r.failure() {
                eprintln!("certification failed: {why}");
            }
            write_or_print(report.as_deref(), &r.to_json_string())?;
            Ok(verdict(r.passed))
        }
        Command::VerifyTheorem { instance, dim, through, budget, skip, report } => {
            let mut cfg = RunConfig::new(instance.spec()?, dim, through)?;
            cfg.budget = budget;
            cfg.checks = Checks {
                identities: !skip.contains(&CheckName::Identities),
                kan: !skip.contains(&CheckName::Kan),
                fibration: !skip.contains(&CheckName::Fibration),
                naturality: !skip.contains(&CheckName::Naturality),
                equivalence: !skip.contains(&CheckName::Equivalence),
            };
            let r = verify_theorem(&cfg)?;
            print!("{}", r.summary());
            if let Some(p) = &report {
                std::fs::write(p, r.to_json_string()).with_context(|| format!("writing {}", p.display()))?;
            }
            if let Some(c) = r.first_failure() {
                eprintln!("failed clause: {}", c.name);
            }
            Ok(verdict(r.passed))
        }
        Command::Validate { input, map } => {
            // Parsing already validates; a malformed file surfaces as an error.
            if let Some(p) = input {
                let s = TruncatedSSet::from_json_str(&read(&p)?)?;
                println!("valid simplicial set, counts {:?}", s.counts());
            } else if let Some(p) = map {
                let m = SimplicialMapData::from_json_str(&read(&p)?)?;
                println!("valid simplicial map, source {:?}, target {:?}", m.source().counts(), m.target().counts());
            }
            Ok(Verdict::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<hcnerve::Error>() {
                Some(hcnerve::Error::BudgetExceeded { .. }) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
