//! Command-line front end: face enumeration with persistent caching,
//! the identity verification harness, vertex realization, admissible
//! normal forms, and the gauge-group classification arithmetic.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage errors.

mod cache;

use std::collections::BTreeMap;
use std::path::PathBuf;

use anpoly::facemaps::verify_relations;
use anpoly::gauge::{
    an_triviality_order, su2_an_equivalent, su2_invariant, SU2Invariant,
};
use anpoly::realization::VertexEmbedding;
use anpoly::steenrod::{confluence_probe, PowerWord, SteenrodElement};
use anpoly::trees::TreeKind;
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cache::PosetCache;

#[derive(Parser)]
#[command(name = "anpoly", version, about = "Associahedra, multiplihedra, Adem rewriting, and SU(2) gauge group classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the faces of K_n or J_n (cached)
    Enumerate {
        #[arg(long)]
        kind: TreeKindArg,
        #[arg(long)]
        n: usize,
        /// Restrict to one dimension
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Cache directory (default: ANPOLY_CACHE_DIR or the system temp dir)
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Disable the poset cache
        #[arg(long)]
        no_cache: bool,
    },
    /// Exhaustively verify the boundary/degeneracy/projection identities
    Verify {
        #[arg(long)]
        kind: TreeKindArg,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Loday integer coordinates of the vertices of K_n
    Realize {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Admissible normal form of a reduced-power word such as P^1.P^1
    Adem {
        #[arg(long)]
        word: String,
        #[arg(long)]
        prime: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Randomized confluence probe of the Adem rewriting system
    Probe {
        #[arg(long)]
        prime: u32,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 9)]
        max_exp: u32,
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
    },
    /// Equivalence verdict for the gauge groups of bundles k and k2
    Classify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        k2: i64,
    },
    /// Census of invariant classes over a scan of k
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1000)]
        kmax: u64,
    },
    /// Odd part and 2-exponent bounds of the least trivializing index
    Order {
        #[arg(long)]
        n: u32,
    },
}

/// clap-friendly wrapper (TreeKind itself lives in the library).
#[derive(Clone, Copy, ValueEnum)]
enum TreeKindArg {
    K,
    J,
}

impl From<TreeKindArg> for TreeKind {
    fn from(k: TreeKindArg) -> TreeKind {
        match k {
            TreeKindArg::K => TreeKind::K,
            TreeKindArg::J => TreeKind::J,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

fn cache_dir(flag: Option<PathBuf>, disabled: bool) -> Option<PathBuf> {
    if disabled {
        return None;
    }
    flag.or_else(|| std::env::var_os("ANPOLY_CACHE_DIR").map(PathBuf::from))
        .or_else(|| Some(std::env::temp_dir().join("anpoly-cache")))
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Enumerate {
            kind,
            n,
            dim,
            format,
            cache_dir: dir,
            no_cache,
        } => {
            let cache = PosetCache::new(cache_dir(dir, no_cache));
            let poset = cache.load_or_build(kind.into(), n)?;
            match format {
                Format::Json => {
                    let doc = match dim {
                        None => poset.to_json(),
                        Some(d) => serde_json::json!({
                            "schema_version": anpoly::trees::SCHEMA_VERSION,
                            "kind": poset.kind(),
                            "n": poset.n(),
                            "dim": d,
                            "faces": poset.faces_of_dim(d).iter()
                                .map(|f| f.canonical_form()).collect::<Vec<_>>(),
                        }),
                    };
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                Format::Csv => {
                    println!("dim,tree");
                    for face in poset.faces() {
                        if dim.is_none() || dim == Some(face.dimension()) {
                            println!("{},{}", face.dimension(), face.canonical_form());
                        }
                    }
                }
                Format::Text => {
                    println!(
                        "{}_{}: {} faces, f-vector {:?}",
                        poset.kind(),
                        poset.n(),
                        poset.total_faces(),
                        poset.f_vector()
                    );
                    for face in poset.faces() {
                        if dim.is_none() || dim == Some(face.dimension()) {
                            println!("{}  {}", face.dimension(), face.canonical_form());
                        }
                    }
                }
            }
            Ok(0)
        }

        Command::Verify { kind, n_max, format } => {
            let report = verify_relations(kind.into(), n_max)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                _ => {
                    println!(
                        "{}: n_max={} instances={} passed={} failures={}",
                        report.map_name,
                        report.n_max,
                        report.instances,
                        report.checks_passed,
                        report.failures.len()
                    );
                    for f in report.failures.iter().take(20) {
                        println!("  FAIL {}: {} expected {} got {}", f.check, f.inputs, f.expected, f.got);
                    }
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }

        Command::Realize { n, format } => {
            let emb = VertexEmbedding::build(n)?;
            match format {
                Format::Json => {
                    let points: Vec<serde_json::Value> = emb
                        .points
                        .iter()
                        .map(|(tree, coords)| {
                            serde_json::json!({
                                "tree": tree.canonical_form(),
                                "coords": coords,
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({ "n": n, "points": points });
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                _ => {
                    let header: Vec<String> =
                        (1..n).map(|i| format!("x_{i}")).collect();
                    println!("tree,{}", header.join(","));
                    for (tree, coords) in &emb.points {
                        let row: Vec<String> = coords.iter().map(i64::to_string).collect();
                        println!("{},{}", tree.canonical_form(), row.join(","));
                    }
                }
            }
            Ok(0)
        }

        Command::Adem { word, prime, format } => {
            let parsed = PowerWord::parse(&word, prime)?;
            let reduced = SteenrodElement::from_word(&parsed).adem_reduce();
            match format {
                Format::Json => {
                    let terms: Vec<serde_json::Value> = reduced
                        .terms()
                        .map(|(w, c)| serde_json::json!({ "coeff": c, "word": w }))
                        .collect();
                    let doc = serde_json::json!({
                        "prime": prime,
                        "input": parsed.to_string(),
                        "normal_form": reduced.to_string(),
                        "terms": terms,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                _ => println!("{parsed} = {reduced}  (mod {prime})"),
            }
            Ok(0)
        }

        Command::Probe {
            prime,
            trials,
            max_len,
            max_exp,
            seed,
        } => {
            let report = confluence_probe(prime, trials, max_len, max_exp, seed)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.passed() { 0 } else { 1 })
        }

        Command::Classify { n, k, k2 } => {
            if n < 1 {
                bail!("level n must be at least 1");
            }
            let verdict = su2_an_equivalent(k, k2, n);
            let doc = serde_json::json!({
                "n": n,
                "k": k,
                "k2": k2,
                "invariant_k": invariant_json(&su2_invariant(k, n)),
                "invariant_k2": invariant_json(&su2_invariant(k2, n)),
                "verdict": verdict.to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(0)
        }

        Command::Census { n, kmax } => {
            if n < 1 {
                bail!("level n must be at least 1");
            }
            let kmax = i64::try_from(kmax).context("kmax out of range")?;
            // group the scan by invariant; representative = smallest |k|,
            // preferring the non-negative one on ties
            let mut classes: BTreeMap<Vec<u32>, (i64, u64)> = BTreeMap::new();
            for k in -kmax..=kmax {
                let inv = su2_invariant(k, n);
                let key: Vec<u32> = inv.entries.iter().map(|e| e.value).collect();
                let entry = classes.entry(key).or_insert((k, 0));
                entry.1 += 1;
                let better = k.unsigned_abs() < entry.0.unsigned_abs()
                    || (k.unsigned_abs() == entry.0.unsigned_abs() && k > entry.0);
                if better {
                    entry.0 = k;
                }
            }
            let primes: Vec<u64> = su2_invariant(0, n).entries.iter().map(|e| e.p).collect();
            let header: Vec<String> = primes.iter().map(|p| format!("v{p}_capped")).collect();
            println!("representative_k,{},scan_count", header.join(","));
            for (key, (rep, count)) in &classes {
                let vals: Vec<String> = key.iter().map(u32::to_string).collect();
                println!("{rep},{},{count}", vals.join(","));
            }
            Ok(0)
        }

        Command::Order { n } => {
            let order = an_triviality_order(n)?;
            // odd_part may exceed u64; print it as a bare JSON number
            println!(
                "{{\n  \"n\": {},\n  \"odd_part\": {},\n  \"v2_lower\": {},\n  \"v2_upper\": {}\n}}",
                order.n, order.odd_part, order.v2_lower, order.v2_upper
            );
            Ok(0)
        }
    }
}

fn invariant_json(inv: &SU2Invariant) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = inv
        .entries
        .iter()
        .map(|e| serde_json::json!({ "p": e.p, "cap": e.cap, "value": e.value }))
        .collect();
    serde_json::Value::Array(entries)
}
