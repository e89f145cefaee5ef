//! Command-line interface: construction, analysis, bounds and the two
//! verification pipelines, with a content-addressed cache for the minimal
//! vector set and machine-readable JSON output.
//!
//! Exit codes: 0 when all requested checks pass, 1 on a check failure,
//! 2 on usage errors, 3 on I/O errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sha2::{Digest, Sha256};

use spherecode::bounds::{
    binary_code_lp_bound, check_spherical_certificate, constant_weight_bound, parse_polynomial,
};
use spherecode::codes::{code_from_sections, code_sections, DerivedCode};
use spherecode::exact::{parse_rational, rat};
use spherecode::leech::{
    read_vector_sections, read_vector_set, write_vector_sections, write_vector_set, LeechSet,
};
use spherecode::uniqueness::{run_uniqueness_with_leech, PipelineKind, PipelineOptions};

#[derive(Parser)]
#[command(
    name = "spherecode",
    version,
    about = "Exact verification toolkit for lattice-derived spherical codes"
)]
struct Cli {
    /// Worker threads for parallel scans (0 = one per CPU).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for cached construction outputs.
    #[arg(long, global = true, default_value = ".spherecode-cache")]
    cache_dir: PathBuf,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the [24,12,8] binary code and print its weight distribution.
    Golay,
    /// Build the 196560 minimal vectors and print shape counts and the
    /// inner-product histogram against the first vector.
    Leech {
        /// Also run the full pairwise scan: global histogram, closure and
        /// design strength of the whole configuration.
        #[arg(long)]
        extended: bool,
    },
    /// Export the kissing-configuration chain at the given depth
    /// (0 = minimal vectors, 1 = 4600, 2 = 891, 3 = 336, 4 = 170).
    Chain {
        #[arg(long)]
        depth: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify the design strength of a code exported by `chain`.
    DesignCheck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_k: u32,
    },
    /// Compute association-scheme intersection numbers of an exported code.
    Scheme {
        #[arg(long)]
        input: PathBuf,
    },
    /// Linear programming and packing bounds.
    #[command(subcommand)]
    Lp(LpCmd),
    /// Run a full verification pipeline (891 or 4600).
    Unique {
        /// Which pipeline: 891 or 4600.
        pipeline: String,
        /// Enable the long-running whole-configuration checks.
        #[arg(long)]
        extended: bool,
        /// Rotate the arbitrary choices in the frame search.
        #[arg(long, default_value_t = 0)]
        frame_seed: usize,
    },
}

#[derive(Subcommand)]
enum LpCmd {
    /// Check a spherical LP certificate polynomial.
    Spherical {
        /// Coefficient list `a0,a1,...` or factored form like
        /// `(x+1/2)^2*(x+1/8)^2*(x-1/4)`.
        #[arg(long)]
        poly: String,
        #[arg(long)]
        dim: u32,
        /// Maximal inner product, as `p/q`.
        #[arg(long)]
        t: String,
    },
    /// Krawtchouk LP bound for binary codes with distances in [dmin, dmax].
    Binary {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        dmin: u32,
        #[arg(long)]
        dmax: u32,
    },
    /// Packing bound for constant-weight codes.
    Cw {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        w: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .expect("thread pool configured once at startup");
    }
    match run(&cli) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            let io = err.chain().any(|c| c.is::<std::io::Error>());
            ExitCode::from(if io { 3 } else { 2 })
        }
    }
}

/// Loads the minimal vectors from the cache, or builds and caches them.
/// The cache key is a content hash of the construction parameters.
fn load_or_build_leech(cache_dir: &Path) -> anyhow::Result<LeechSet> {
    let mut hasher = Sha256::new();
    hasher.update(b"leech-minimal-vectors-v1:golay-qr23:dim=24 denom_sq=8");
    let key = hasher.finalize();
    let name = format!("leech-{:x}.vset", key);
    let path = cache_dir.join(&name[..38]);
    if path.exists() {
        let vectors = read_vector_set(&path)?;
        if vectors.len() == 196_560 && vectors.iter().all(|v| v.norm_int() == 32) {
            return Ok(LeechSet::from_vectors(vectors));
        }
        // stale or damaged cache entry: fall through and rebuild
    }
    let set = LeechSet::build();
    std::fs::create_dir_all(cache_dir)?;
    write_vector_set(&path, set.vectors())?;
    Ok(set)
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    match &cli.cmd {
        Cmd::Golay => {
            let golay = spherecode::leech::build_golay();
            let dist: BTreeMap<u32, u64> = golay.weight_distribution();
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "length": golay.length(),
                        "words": golay.len(),
                        "weight_distribution": dist,
                        "octads": golay.octads().len(),
                    }))?
                ),
                Format::Text => {
                    println!(
                        "[24,12,8] code: {} words, {} octads",
                        golay.len(),
                        golay.octads().len()
                    );
                    for (w, n) in &dist {
                        println!("  weight {w:>2}: {n}");
                    }
                }
            }
            Ok(true)
        }
        Cmd::Leech { extended } => {
            let set = load_or_build_leech(&cli.cache_dir)?;
            let (s1, s2, s3) = set.shape_counts();
            let hist = set.histogram_with(&set.vectors()[0]);
            let mut out = json!({
                "count": set.len(),
                "shape_counts": { "pm4_pm4": s1, "pm2_octad": s2, "mp3_pm1": s3 },
                "histogram_vs_first": hist.iter().map(|(k, v)| (k.to_string(), v)).collect::<BTreeMap<_,_>>(),
            });
            let mut pass = set.len() == 196_560;
            if *extended {
                let global = set.global_pair_histogram();
                let closure = global.keys().all(|d| matches!(d.abs(), 0 | 8 | 16 | 32));
                let strength = spherecode::codes::design_strength_from_histogram(
                    24,
                    set.len() as u64,
                    &global,
                    12,
                    |d| rat(d as i64, 32),
                );
                pass &= closure && strength == 11;
                out["extended"] = json!({
                    "pair_histogram": global.iter().map(|(k, v)| (k.to_string(), v)).collect::<BTreeMap<_,_>>(),
                    "closure": closure,
                    "design_strength": strength,
                });
            }
            out["pass"] = json!(pass);
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out)?),
                Format::Text => {
                    println!("minimal vectors: {} (shapes {s1} + {s2} + {s3})", set.len());
                    println!("histogram vs first vector (integer products): {hist:?}");
                    if let Some(ext) = out.get("extended") {
                        println!("extended: {ext}");
                    }
                    println!("pass: {pass}");
                }
            }
            Ok(pass)
        }
        Cmd::Chain { depth, out } => {
            anyhow::ensure!(*depth <= 4, "depth must be in 0..=4");
            let set = load_or_build_leech(&cli.cache_dir)?;
            let mut code = DerivedCode::root(set.vectors().to_vec());
            for _ in 0..*depth {
                let base = code.members()[0];
                code = code.derive_kissing(&base)?;
            }
            write_vector_sections(out, &code_sections(&code))?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "depth": depth,
                        "size": code.len(),
                        "dim": code.dim(),
                        "out": out.display().to_string(),
                    }))?
                ),
                Format::Text => println!(
                    "depth {depth}: {} points in dimension {} -> {}",
                    code.len(),
                    code.dim(),
                    out.display()
                ),
            }
            Ok(true)
        }
        Cmd::DesignCheck { input, max_k } => {
            let code = code_from_sections(read_vector_sections(input)?)?;
            let strength = code.design_strength(*max_k);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "size": code.len(),
                        "dim": code.dim(),
                        "max_k": max_k,
                        "design_strength": strength,
                    }))?
                ),
                Format::Text => println!(
                    "{} points, dimension {}: design strength {strength} (checked up to {max_k})",
                    code.len(),
                    code.dim()
                ),
            }
            Ok(true)
        }
        Cmd::Scheme { input } => {
            let code = code_from_sections(read_vector_sections(input)?)?;
            match code.intersection_numbers() {
                Ok(table) => {
                    let ok = table.verify_invariants();
                    match cli.format {
                        Format::Json => {
                            let values: Vec<String> =
                                table.values().iter().map(ToString::to_string).collect();
                            let mut entries = Vec::new();
                            for g in table.values() {
                                for a in table.values() {
                                    for b in table.values() {
                                        entries.push(json!({
                                            "gamma": g.to_string(),
                                            "alpha": a.to_string(),
                                            "beta": b.to_string(),
                                            "value": table.get(g, a, b),
                                        }));
                                    }
                                }
                            }
                            println!(
                                "{}",
                                serde_json::to_string_pretty(&json!({
                                    "classes": values,
                                    "intersection_numbers": entries,
                                    "invariants": ok,
                                    "pass": ok,
                                }))?
                            );
                        }
                        Format::Text => {
                            let mut txt = String::new();
                            for g in table.values() {
                                for a in table.values() {
                                    for b in table.values() {
                                        if a > b {
                                            continue;
                                        }
                                        let _ = writeln!(
                                            txt,
                                            "P_{g}({a},{b}) = {}",
                                            table.get(g, a, b).unwrap()
                                        );
                                    }
                                }
                            }
                            print!("{txt}");
                            println!("invariants: {}", if ok { "pass" } else { "FAIL" });
                        }
                    }
                    Ok(ok)
                }
                Err(e) => {
                    match cli.format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "error": e.to_string(),
                                "pass": false,
                            }))?
                        ),
                        Format::Text => println!("not an association scheme: {e}"),
                    }
                    Ok(false)
                }
            }
        }
        Cmd::Lp(lp) => run_lp(cli, lp),
        Cmd::Unique {
            pipeline,
            extended,
            frame_seed,
        } => {
            let kind = match pipeline.as_str() {
                "891" => PipelineKind::Code891,
                "4600" => PipelineKind::Code4600,
                other => anyhow::bail!("unknown pipeline `{other}` (expected 891 or 4600)"),
            };
            let set = load_or_build_leech(&cli.cache_dir)?;
            let report = run_uniqueness_with_leech(
                &set,
                kind,
                PipelineOptions {
                    frame_seed: *frame_seed,
                    extended: *extended,
                },
            );
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.render_text()),
            }
            Ok(report.pass)
        }
    }
}

fn run_lp(cli: &Cli, lp: &LpCmd) -> anyhow::Result<bool> {
    match lp {
        LpCmd::Spherical { poly, dim, t } => {
            let p = parse_polynomial(poly).map_err(|e| anyhow::anyhow!("--poly: {e}"))?;
            let t = parse_rational(t).map_err(|e| anyhow::anyhow!("--t: {e}"))?;
            match check_spherical_certificate(&p, *dim, &t) {
                Ok(cert) => {
                    match cli.format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "valid": true,
                                "dimension": dim,
                                "threshold": t.to_string(),
                                "bound_exact": cert.bound.to_string(),
                                "bound": cert.bound_floor().to_string(),
                                "expansion": cert.expansion.iter().map(ToString::to_string).collect::<Vec<_>>(),
                                "equality_inner_products": cert
                                    .equality_inner_products
                                    .iter()
                                    .map(ToString::to_string)
                                    .collect::<Vec<_>>(),
                                "design_strength_required": cert.design_strength_required,
                            }))?
                        ),
                        Format::Text => {
                            println!("valid certificate in dimension {dim} at t = {t}");
                            println!("bound: {} (exact {})", cert.bound_floor(), cert.bound);
                            println!(
                                "equality inner products: {:?}",
                                cert.equality_inner_products
                                    .iter()
                                    .map(ToString::to_string)
                                    .collect::<Vec<_>>()
                            );
                        }
                    }
                    Ok(true)
                }
                Err(e) => {
                    match cli.format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "valid": false,
                                "reason": e.to_string(),
                            }))?
                        ),
                        Format::Text => println!("invalid certificate: {e}"),
                    }
                    Ok(false)
                }
            }
        }
        LpCmd::Binary { n, dmin, dmax } => {
            anyhow::ensure!(dmin <= dmax, "--dmin must not exceed --dmax");
            let dists: Vec<u32> = (*dmin..=*dmax).collect();
            let bound = binary_code_lp_bound(*n, &dists)?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "n": n,
                        "distances": format!("{dmin}..={dmax}"),
                        "bound": bound.bound.to_string(),
                        "bound_exact": bound.exact.to_string(),
                    }))?
                ),
                Format::Text => println!("{}", bound.bound),
            }
            Ok(true)
        }
        LpCmd::Cw { n, d, w } => {
            let bound = constant_weight_bound(*n, *d, *w)?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "n": n, "d": d, "w": w,
                        "bound": bound.to_string(),
                    }))?
                ),
                Format::Text => println!("{bound}"),
            }
            Ok(true)
        }
    }
}
