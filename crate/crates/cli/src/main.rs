//! `injcat`: build the Young quiver of the injection category, export
//! tables, and run exact verification sweeps that emit JSON certificates.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use injcat::certificate::{Certificate, CertificateBuilder};
use injcat::config::{Bounds, CONFIG_ENV};
use injcat::partitions::{partitions_of, partitions_up_to, Partition};
use injcat::qdual::{dual_dims_table, verify_involution, verify_lattice_dual, verify_self_duality};
use injcat::quiver::quiver_slice;
use injcat::resolution::{betti_table, verify_resolution};
use injcat::signs::{build_sign_table, row_sign, verify_anticommutativity};
use injcat::symgroup::{induction_multiplicity, pieri_coefficient, verify_idempotents, verify_morita};

#[derive(Parser, Debug)]
#[command(name = "injcat", version, about = "Exact quiver, resolution and duality checks for the category of injections")]
struct Cli {
    /// TOML file with size bounds.
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    /// Override one bound, e.g. `--bound dual_size=14`. Repeatable.
    #[arg(long = "bound", global = true, value_name = "KEY=VALUE")]
    bounds: Vec<String>,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Render the Young quiver up to a size.
    Quiver {
        #[arg(long)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Label arrows (and rows, in JSON) with their signs.
        #[arg(long)]
        signs: bool,
    },
    /// Run a verification sweep and emit a certificate.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long)]
        max_size: Option<usize>,
        /// Check sign growth along every path up to this size.
        #[arg(long)]
        path_size: Option<usize>,
        #[arg(long)]
        xi: Option<Partition>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include the evaluated differentials in the certificate.
        #[arg(long)]
        dump_matrices: bool,
        /// Zero `elapsed_ms` so certificates are byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print a table.
    Table {
        #[arg(value_enum)]
        target: TableTarget,
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        xi: Option<Partition>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VerifyTarget {
    Signs,
    Resolution,
    Qdual,
    Morita,
    Idempotents,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TableTarget {
    Pieri,
    Betti,
    Dualdims,
}

enum Outcome {
    Pass,
    Fail,
}

fn load_bounds(cli: &Cli) -> anyhow::Result<Bounds> {
    let base = match &cli.config {
        Some(path) => Bounds::from_file(path)?,
        None => Bounds::default(),
    };
    if cli.bounds.is_empty() {
        return Ok(base);
    }
    let mut value = serde_json::to_value(&base)?;
    for spec in &cli.bounds {
        let (key, v) = spec
            .split_once('=')
            .with_context(|| format!("bound override `{spec}` is not KEY=VALUE"))?;
        let n: usize = v.trim().parse().with_context(|| format!("bound `{key}` needs an integer"))?;
        if value.get(key.trim()).is_none() {
            bail!("unknown bound `{key}`");
        }
        value[key.trim()] = json!(n);
    }
    Ok(serde_json::from_value(value)?)
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let bounds = load_bounds(cli)?;
    match &cli.command {
        Command::Quiver {
            max_size,
            format,
            signs,
        } => {
            emit(cli, &render_quiver(*max_size, *format, *signs, &bounds)?)?;
            Ok(Outcome::Pass)
        }
        Command::Verify {
            target,
            max_size,
            path_size,
            xi,
            depth,
            n,
            format,
            dump_matrices,
            no_timing,
        } => {
            let mut cert = match target {
                VerifyTarget::Signs => {
                    let max = max_size.unwrap_or(10);
                    verify_anticommutativity(max, path_size.unwrap_or(max.min(8)), &bounds)?
                }
                VerifyTarget::Resolution => {
                    let depth = depth.unwrap_or(6);
                    match xi {
                        Some(xi) => verify_resolution(xi, depth, *dump_matrices, &bounds)?,
                        None => sweep_resolutions(max_size.unwrap_or(4), depth, &bounds)?,
                    }
                }
                VerifyTarget::Qdual => {
                    let max = max_size.unwrap_or(7);
                    let mut b = CertificateBuilder::new("verify qdual").param("max_size", max);
                    b.absorb("self_duality", &verify_self_duality(max, &bounds)?);
                    b.absorb("lattice_dual", &verify_lattice_dual(max, &bounds)?);
                    b.absorb("involution", &verify_involution(max.min(6), &bounds)?);
                    b.finish()
                }
                VerifyTarget::Morita => verify_morita(n.unwrap_or(3), &bounds)?,
                VerifyTarget::Idempotents => verify_idempotents(n.unwrap_or(5), &bounds)?,
            };
            if *no_timing {
                cert = cert.without_timing();
            }
            let text = match format {
                Format::Json => cert.to_json_pretty() + "\n",
                _ => certificate_summary(&cert),
            };
            emit(cli, &text)?;
            Ok(if cert.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Table {
            target,
            mu,
            m,
            xi,
            depth,
            max_size,
            format,
        } => {
            let (text, ok) = match target {
                TableTarget::Pieri => {
                    let mu = mu.clone().context("`table pieri` needs --mu")?;
                    pieri_table(&mu, m.context("`table pieri` needs --m")?, *format, &bounds)?
                }
                TableTarget::Betti => {
                    let xi = xi.clone().unwrap_or_default();
                    (render_betti(&xi, depth.unwrap_or(4), *format, &bounds)?, true)
                }
                TableTarget::Dualdims => dualdims_table(max_size.unwrap_or(5), *format, &bounds)?,
            };
            emit(cli, &text)?;
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn sweep_resolutions(max_size: usize, depth: usize, bounds: &Bounds) -> anyhow::Result<Certificate> {
    let mut b = CertificateBuilder::new("verify resolution")
        .param("max_xi_size", max_size)
        .param("depth", depth);
    for xi in partitions_up_to(max_size, bounds)? {
        let cert = verify_resolution(&xi, depth, false, bounds)?;
        b.bump("resolutions_checked", 1);
        b.absorb(&xi.to_string(), &cert);
    }
    Ok(b.finish())
}

fn certificate_summary(cert: &Certificate) -> String {
    let mut s = format!("{}: {}\n", cert.command, if cert.passed() { "pass" } else { "FAIL" });
    for (k, v) in &cert.parameters {
        let _ = writeln!(s, "  {k} = {v}");
    }
    for (k, v) in &cert.counts {
        let _ = writeln!(s, "  {k}: {v}");
    }
    if let Some(f) = &cert.first_failure {
        let _ = writeln!(s, "  first failure: {f}");
    }
    s
}

fn render_quiver(max_size: usize, format: Format, signs: bool, bounds: &Bounds) -> anyhow::Result<String> {
    let slice = quiver_slice(max_size, bounds)?;
    let table = if signs { Some(build_sign_table(max_size, bounds)?) } else { None };
    Ok(match format {
        Format::Text => slice.to_text(table.as_ref()),
        Format::Dot => slice.to_dot(table.as_ref()),
        Format::Json => {
            let nodes: Vec<Value> = slice
                .nodes
                .iter()
                .map(|p| {
                    let mut node = json!({ "partition": p });
                    if signs {
                        let rows: Vec<i8> = (1..=p.len() as u32 + 1).map(|r| row_sign(p, r)).collect();
                        node["row_signs"] = json!(rows);
                    }
                    node
                })
                .collect();
            let arrows: Vec<Value> = slice
                .arrows
                .iter()
                .map(|(a, b)| {
                    let mut arrow = json!({ "from": a, "to": b });
                    if let Some(t) = &table {
                        arrow["sign"] = json!(t.arrow_sign(a, b).expect("table covers the slice"));
                    }
                    arrow
                })
                .collect();
            serde_json::to_string_pretty(&json!({
                "max_size": max_size,
                "node_count": nodes.len(),
                "arrow_count": arrows.len(),
                "nodes": nodes,
                "arrows": arrows,
            }))? + "\n"
        }
    })
}

/// Pieri coefficients for every `λ ⊇ μ` with `|λ∖μ| = m`, checked against
/// the character multiplicity.
fn pieri_table(mu: &Partition, m: usize, format: Format, bounds: &Bounds) -> anyhow::Result<(String, bool)> {
    let mut rows = Vec::new();
    let mut ok = true;
    for lambda in partitions_of(mu.size() + m, bounds)? {
        if !mu.is_contained_in(&lambda) {
            continue;
        }
        let pieri = pieri_coefficient(mu, m, &lambda);
        let induction = induction_multiplicity(mu, m, &lambda, bounds)?;
        ok &= induction == u64::from(pieri);
        rows.push((lambda, pieri, induction));
    }
    let text = match format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(l, p, i)| json!({ "lambda": l, "pieri": p, "induction": i }))
                .collect();
            serde_json::to_string_pretty(&json!({ "mu": mu, "m": m, "rows": v }))? + "\n"
        }
        _ => {
            let mut s = String::new();
            for (l, p, i) in &rows {
                let mark = if u64::from(*p) == *i { "" } else { "  (character multiplicity differs)" };
                let _ = writeln!(s, "{l:?}:{p}{mark}");
            }
            s
        }
    };
    Ok((text, ok))
}

fn render_betti(xi: &Partition, depth: usize, format: Format, bounds: &Bounds) -> anyhow::Result<String> {
    let table = betti_table(xi, depth, bounds)?;
    Ok(match format {
        Format::Json => {
            let v: Vec<Value> = table
                .iter()
                .map(|((i, l), v)| json!({ "position": i, "lambda": l, "value": v }))
                .collect();
            serde_json::to_string_pretty(&json!({ "xi": xi, "depth": depth, "entries": v }))? + "\n"
        }
        _ => {
            let mut s = String::new();
            for k in 0..=depth as i64 {
                let members: Vec<String> = table
                    .iter()
                    .filter(|((i, _), v)| *i == -k && **v == 1)
                    .map(|((_, l), _)| format!("{l:?}"))
                    .collect();
                let _ = writeln!(s, "{:>3}: {}", -k, members.join(" "));
            }
            s
        }
    })
}

/// `dim C^!(μ, λ)` for contained pairs, beside the vertical-strip indicator.
fn dualdims_table(max_size: usize, format: Format, bounds: &Bounds) -> anyhow::Result<(String, bool)> {
    let rows = dual_dims_table(max_size, bounds)?;
    let mut ok = true;
    let mut out = Vec::new();
    for (mu, lambda, d) in rows {
        let strip = u8::from(injcat::partitions::skew_classify(&mu, &lambda).is_vertical_strip());
        ok &= d == strip as usize;
        out.push((mu, lambda, d, strip));
    }
    let text = match format {
        Format::Json => {
            let v: Vec<Value> = out
                .iter()
                .map(|(mu, l, d, s)| json!({ "mu": mu, "lambda": l, "dual_dim": d, "vertical_strip": s }))
                .collect();
            serde_json::to_string_pretty(&json!({ "max_size": max_size, "pairs": v }))? + "\n"
        }
        _ => {
            let mut s = String::new();
            for (mu, l, d, strip) in &out {
                let mark = if *d == *strip as usize { "" } else { "  (not the vertical-strip indicator)" };
                let _ = writeln!(s, "{mu:?} -> {l:?}: {d}{mark}");
            }
            s
        }
    };
    Ok((text, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
