//! Command-line front end.

use crate::catalog::product_edges;
use crate::chain::{depth_chain, longest_chain, verify_chain};
use crate::depth::{depth, depth_product};
use crate::length::length;
use crate::oracle::{enumerate_depth, shortest_certificate, spectrum, Exploration, DEFAULT_BUDGET};
use crate::realforms::{parse, ReductiveDescriptor};
use crate::tables::{table1, table2, EntryCheck};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "realgroups", version, about = "Length and depth of real algebraic groups")]
pub struct CliConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Show the breakdown or the rules behind a value.
    #[arg(long, global = true)]
    pub explain: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ranks, predicates, anisotropic kernel and Satake index.
    Info { group: String },
    /// Length l(G).
    Length { group: String },
    /// Depth λ(G), exact or as an interval.
    Depth { group: String },
    /// A verified chain certificate.
    Chain {
        group: String,
        #[arg(long, conflicts_with = "shortest")]
        longest: bool,
        #[arg(long)]
        shortest: bool,
    },
    /// Re-derive every entry of the classical and exceptional tables.
    VerifyTables {
        /// Only classical entries of complex rank at most N.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        max_rank: Option<u32>,
    },
    /// Catalogued maximal connected subgroups.
    EnumerateMaximal { group: String },
    /// Breadth-first search for short chains over catalogued edges.
    Oracle {
        group: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Also list the chain-length spectrum.
        #[arg(long)]
        spectrum: bool,
        /// Print the explored subgroup DAG in Graphviz format instead.
        #[arg(long)]
        dot: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

type Outcome = Result<(), Failure>;

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI on `args` (program name first); returns the exit code.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cfg, out) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Verification(m)) => {
            let _ = writeln!(err, "verification failed: {m}");
            1
        }
    }
}

fn group(s: &str) -> Result<ReductiveDescriptor, Failure> {
    parse(s).map_err(|e| Failure::Usage(format!("cannot parse `{s}`: {e}")))
}

fn simple(s: &str) -> Result<crate::realforms::RealForm, Failure> {
    let g = group(s)?;
    g.as_simple().copied().ok_or_else(|| Failure::Usage(format!("`{g}` is not simple")))
}

fn descriptor_json(g: &ReductiveDescriptor) -> Value {
    serde_json::from_str(&g.to_json()).expect("descriptor JSON is valid")
}

fn emit(out: &mut dyn Write, v: &Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serialisable")).map_err(io)
}

fn io(e: std::io::Error) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

fn dispatch(cfg: &CliConfig, out: &mut dyn Write) -> Outcome {
    match &cfg.command {
        Command::Info { group: s } => info(cfg, out, &group(s)?),
        Command::Length { group: s } => length_cmd(cfg, out, &group(s)?),
        Command::Depth { group: s } => depth_cmd(cfg, out, &group(s)?),
        Command::Chain { group: s, shortest, .. } => chain_cmd(cfg, out, s, *shortest),
        Command::VerifyTables { max_rank } => verify_tables_cmd(cfg, out, *max_rank),
        Command::EnumerateMaximal { group: s } => enumerate_cmd(cfg, out, &group(s)?),
        Command::Oracle { group: s, budget, spectrum: spec, dot } => oracle_cmd(cfg, out, &group(s)?, *budget, *spec, *dot),
    }
}

fn info(cfg: &CliConfig, out: &mut dyn Write, g: &ReductiveDescriptor) -> Outcome {
    let rows: Vec<Value> = g
        .factors()
        .iter()
        .map(|f| {
            json!({
                "group": f.to_string(),
                "complexification": format!("{}{}", f.complexification().0, if f.complexification().1 == 2 { "^2" } else { "" }),
                "rank": f.rank(),
                "real_rank": f.real_rank(),
                "dimension": f.dimension(),
                "compact": f.is_compact(),
                "split": f.is_split(),
                "quasisplit": f.is_quasisplit(),
                "kernel": f.anisotropic_kernel().to_string(),
                "maximal_compact": f.maximal_compact().to_string(),
                "satake": f.satake_index().map(|s| s.to_string()).unwrap_or_else(|_| "none (complex group)".into()),
            })
        })
        .collect();
    match cfg.format {
        Format::Json => emit(
            out,
            &json!({
                "group": g.to_string(),
                "descriptor": descriptor_json(g),
                "dimension": g.dimension(),
                "torus_dim": g.torus_dim(),
                "factors": rows,
            }),
        ),
        Format::Tsv => {
            writeln!(out, "group\trank\treal_rank\tdimension\tcompact\tsplit\tquasisplit\tkernel\tmaximal_compact").map_err(io)?;
            for r in &rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r["group"].as_str().unwrap_or_default(),
                    r["rank"],
                    r["real_rank"],
                    r["dimension"],
                    r["compact"],
                    r["split"],
                    r["quasisplit"],
                    r["kernel"].as_str().unwrap_or_default(),
                    r["maximal_compact"].as_str().unwrap_or_default()
                )
                .map_err(io)?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(out, "{g}  (dimension {}, central torus T({}))", g.dimension(), g.torus_dim()).map_err(io)?;
            for r in &rows {
                writeln!(out, "{}", r["group"].as_str().unwrap_or_default()).map_err(io)?;
                for key in ["complexification", "rank", "real_rank", "dimension", "compact", "split", "quasisplit", "kernel", "maximal_compact", "satake"] {
                    let v = &r[key];
                    let shown = v.as_str().map_or_else(|| v.to_string(), str::to_string);
                    writeln!(out, "  {key:<16} {shown}").map_err(io)?;
                }
            }
            Ok(())
        }
    }
}

fn length_cmd(cfg: &CliConfig, out: &mut dyn Write, g: &ReductiveDescriptor) -> Outcome {
    let report = length(g);
    match cfg.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("serialisable");
            v["group"] = json!(g.to_string());
            v["descriptor"] = descriptor_json(g);
            emit(out, &v)
        }
        Format::Tsv => {
            writeln!(out, "group\tlength\tphi_plus\tphi0_plus\trank\treal_rank\tkernel_length").map_err(io)?;
            for f in &report.factors {
                let b = f.breakdown;
                writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}\t{}", f.group, f.length, b.phi_plus, b.phi0_plus, b.rank, b.real_rank_derived, b.kernel_length)
                    .map_err(io)?;
            }
            if report.torus_dim > 0 {
                writeln!(out, "T({0})\t{0}\t\t\t\t\t", report.torus_dim).map_err(io)?;
            }
            writeln!(out, "{g}\t{}\t\t\t\t\t", report.total).map_err(io)
        }
        Format::Text => {
            writeln!(out, "{}", report.total).map_err(io)?;
            if cfg.explain {
                for f in &report.factors {
                    let b = f.breakdown;
                    writeln!(
                        out,
                        "  {}: |Φ⁺| − |Φ₀⁺| + r + r_R + l(kernel) = {} − {} + {} + {} + {} = {}",
                        f.group, b.phi_plus, b.phi0_plus, b.rank, b.real_rank_derived, b.kernel_length, f.length
                    )
                    .map_err(io)?;
                }
                if report.torus_dim > 0 {
                    writeln!(out, "  T({0}): {0}", report.torus_dim).map_err(io)?;
                }
            }
            Ok(())
        }
    }
}

fn depth_cmd(cfg: &CliConfig, out: &mut dyn Write, g: &ReductiveDescriptor) -> Outcome {
    let d = match g.as_simple() {
        Some(f) => depth(f),
        None => depth_product(g),
    };
    match cfg.format {
        Format::Json => {
            let mut v = serde_json::to_value(&d).expect("serialisable");
            v["group"] = json!(g.to_string());
            v["descriptor"] = descriptor_json(g);
            emit(out, &v)
        }
        Format::Tsv => {
            writeln!(out, "group\tlower\tupper\texact\trules").map_err(io)?;
            let rules: Vec<&str> = d.rules_fired.iter().map(|r| r.id).collect();
            writeln!(out, "{g}\t{}\t{}\t{}\t{}", d.lower, d.upper, d.exact, rules.join(",")).map_err(io)
        }
        Format::Text => {
            writeln!(out, "{d}").map_err(io)?;
            if cfg.explain {
                for r in &d.rules_fired {
                    writeln!(out, "  {}: {}", r.id, r.cite).map_err(io)?;
                }
            }
            Ok(())
        }
    }
}

fn chain_cmd(cfg: &CliConfig, out: &mut dyn Write, s: &str, shortest: bool) -> Outcome {
    let g = simple(s)?;
    let cert = if shortest { depth_chain(&g).map_err(|e| Failure::Verification(e.to_string()))? } else { longest_chain(&g) };
    let v = verify_chain(&cert);
    match cfg.format {
        Format::Json => {
            let mut j = cert.to_json();
            j["verification"] = serde_json::to_value(&v).expect("serialisable");
            emit(out, &j)?;
        }
        Format::Tsv => {
            writeln!(out, "kind\tcount\trule\tendpoint").map_err(io)?;
            for seg in &cert.segments {
                writeln!(out, "{}\t{}\t{}\t{}", seg.kind, seg.count, seg.rule, seg.endpoint).map_err(io)?;
            }
        }
        Format::Text => {
            writeln!(out, "{cert}").map_err(io)?;
            if cfg.explain {
                for seg in &cert.segments {
                    writeln!(out, "  {}: {}", seg.rule, seg.cite).map_err(io)?;
                }
            }
            writeln!(out, "{}", if v.ok { "verified" } else { "NOT verified" }).map_err(io)?;
        }
    }
    if v.ok {
        Ok(())
    } else {
        Err(Failure::Verification(v.diagnostics.join("; ")))
    }
}

fn verify_tables_cmd(cfg: &CliConfig, out: &mut dyn Write, max_rank: Option<u32>) -> Outcome {
    let entries: Vec<_> = match max_rank {
        None => table1(14),
        Some(n) => table1(2 * n + 2).into_iter().filter(|e| e.rank <= n).collect(),
    };
    let checks: Vec<EntryCheck> = entries.iter().chain(table2().iter()).map(crate::tables::check).collect();
    let failed = checks.iter().filter(|c| !c.pass()).count();
    match cfg.format {
        Format::Json => {
            let rows: Vec<Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "table": c.entry.table,
                        "row": c.entry.row,
                        "name": c.entry.name(),
                        "expected": c.entry.expected(),
                        "computed": c.computed(),
                        "status": if c.pass() { "pass" } else { "FAIL" },
                        "mismatches": c.mismatches,
                    })
                })
                .collect();
            emit(out, &json!({"rows": rows, "checked": checks.len(), "failed": failed}))?;
        }
        Format::Tsv | Format::Text => {
            if cfg.format == Format::Tsv || cfg.explain {
                writeln!(out, "name\texpected\tcomputed\tstatus").map_err(io)?;
                for c in &checks {
                    let status = if c.pass() { "pass".into() } else { format!("FAIL({})", c.mismatches.join(",")) };
                    writeln!(out, "{}\t{}\t{}\t{status}", c.entry.name(), c.entry.expected(), c.computed()).map_err(io)?;
                }
            } else {
                for c in checks.iter().filter(|c| !c.pass()) {
                    writeln!(out, "FAIL {} [{}]\n  expected {}\n  computed {}", c.entry.name(), c.mismatches.join(","), c.entry.expected(), c.computed())
                        .map_err(io)?;
                }
            }
            if failed == 0 {
                writeln!(out, "all rows pass ({} entries)", checks.len()).map_err(io)?;
            } else {
                writeln!(out, "{failed} of {} entries mismatch", checks.len()).map_err(io)?;
            }
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{failed} table entries mismatch")))
    }
}

fn enumerate_cmd(cfg: &CliConfig, out: &mut dyn Write, g: &ReductiveDescriptor) -> Outcome {
    let edges = product_edges(g);
    match cfg.format {
        Format::Json => {
            for e in &edges {
                writeln!(out, "{}", e.to_json_line()).map_err(io)?;
            }
        }
        Format::Tsv => {
            writeln!(out, "parent\tchild\trule\tconstraints").map_err(io)?;
            for e in &edges {
                writeln!(out, "{}\t{}\t{}\t{}", e.parent, e.child, e.rule, e.constraints).map_err(io)?;
            }
        }
        Format::Text => {
            for e in &edges {
                writeln!(out, "{e}").map_err(io)?;
                if cfg.explain {
                    writeln!(out, "    {}", e.rule.cite()).map_err(io)?;
                }
            }
            writeln!(out, "{} edges", edges.len()).map_err(io)?;
        }
    }
    Ok(())
}

fn oracle_cmd(cfg: &CliConfig, out: &mut dyn Write, g: &ReductiveDescriptor, budget: usize, with_spectrum: bool, dot: bool) -> Outcome {
    if dot {
        return write!(out, "{}", Exploration::explore(g, budget).to_dot()).map_err(io);
    }
    let report = enumerate_depth(g, budget).map_err(|e| Failure::Verification(e.to_string()))?;
    let cert = shortest_certificate(g, budget).map_err(|e| Failure::Verification(e.to_string()))?;
    let verified = verify_chain(&cert);
    let spec = if with_spectrum { Some(spectrum(g, budget).map_err(|e| Failure::Verification(e.to_string()))?) } else { None };
    match cfg.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("serialisable");
            v["chain"] = cert.to_json();
            v["chain_verified"] = json!(verified.ok);
            if let Some(s) = &spec {
                v["spectrum"] = json!(s);
            }
            emit(out, &v)?;
        }
        Format::Tsv => {
            writeln!(out, "group\tmin_found\tmax_found_reductive\tedge_count\tstates\tfrontier_truncated").map_err(io)?;
            writeln!(
                out,
                "{g}\t{}\t{}\t{}\t{}\t{}",
                report.min_found, report.max_found_reductive, report.edge_count, report.state_count, report.frontier_truncated
            )
            .map_err(io)?;
        }
        Format::Text => {
            writeln!(out, "min_found {}", report.min_found).map_err(io)?;
            writeln!(out, "max_found_reductive {}", report.max_found_reductive).map_err(io)?;
            writeln!(out, "states {}  edges {}", report.state_count, report.edge_count).map_err(io)?;
            if report.frontier_truncated {
                writeln!(out, "frontier truncated: min_found is an upper bound only").map_err(io)?;
            }
            if let Some(s) = &spec {
                let s: Vec<String> = s.iter().map(u64::to_string).collect();
                writeln!(out, "spectrum {{{}}}", s.join(", ")).map_err(io)?;
            }
            if cfg.explain {
                writeln!(out, "{cert}").map_err(io)?;
            }
        }
    }
    if verified.ok {
        Ok(())
    } else {
        Err(Failure::Verification(verified.diagnostics.join("; ")))
    }
}
