use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};
use unichord_core::coloring::{color_with, verify_coloring, ColorConfig};
use unichord_core::generate::{self, compose, corpus, random_composed, Composition};
use unichord_core::io::{emit_graph, load_graph, Format};
use unichord_core::oracle::{self, Limits};
use unichord_core::recognizer::{recognize_with, DecompTree, Verdict};
use unichord_core::{Error, Graph, Named, VertexId};

#[derive(Parser)]
#[command(name = "unichord", version, about = "Recognize and color graphs with no long unichord")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format: json, text, dot (decompose) or dimacs (gen).
    #[arg(long, global = true)]
    format: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest graph the brute-force long-unichord search accepts.
    #[arg(long, global = true, default_value_t = 14)]
    oracle_max_n: usize,
    /// Re-verify every splitter while coloring.
    #[arg(long, global = true)]
    checked: bool,
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph is long-unichord-free.
    Recognize { file: PathBuf },
    /// Color a graph of the class with at most f3(omega) colors.
    Color { file: PathBuf },
    /// Print the decomposition tree.
    Decompose { file: PathBuf },
    /// Emit a named graph, or a composed one: `gen compose SPEC`.
    Gen { name: String, spec: Option<PathBuf> },
    /// Brute-force verdict with witness, clique and chromatic numbers.
    Oracle { file: PathBuf },
    /// Check a coloring (the output of `color`, or a map from vertex to color).
    VerifyColoring { graph: PathBuf, coloring: PathBuf },
    /// Time recognition and coloring on a generated suite: corpus or scaling.
    Bench {
        suite: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 200)]
        max_n: usize,
    },
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure { code: 1, err }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 1, err: e.into() }
    }
}

type Out = Result<String, Failure>;

const STACK: usize = 256 << 20;

fn main() -> ExitCode {
    let cli = Cli::parse();
    // Decomposition recursion can run deep on large inputs.
    let result = std::thread::scope(|s| {
        std::thread::Builder::new().stack_size(STACK).spawn_scoped(s, || run(&cli)).expect("spawn worker").join()
    });
    let result = result.unwrap_or_else(|_| Err(anyhow!("worker panicked").into()));
    match result {
        Ok(text) => match &cli.out {
            Some(path) => match std::fs::write(path, text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: writing {}: {e}", path.display());
                    ExitCode::from(1)
                }
            },
            None => {
                print!("{text}");
                ExitCode::SUCCESS
            }
        },
        Err(f) => {
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Out {
    let limits = Limits { unichord_max_n: cli.oracle_max_n, ..Limits::default() };
    if cli.oracle_max_n == 0 || cli.jobs == 0 {
        return Err(anyhow!("--oracle-max-n and --jobs must be positive").into());
    }
    let format = cli.format.as_deref();
    match &cli.command {
        Command::Recognize { file } => {
            let g = read_graph(file)?;
            let v = recognize_with(&g, &limits)?;
            match format.unwrap_or("json") {
                "json" => Ok(to_json(&verdict_json(&v))),
                "text" => Ok(verdict_text(&v)),
                other => Err(bad_format(other)),
            }
        }
        Command::Color { file } => {
            let g = read_graph(file)?;
            let v = recognize_with(&g, &limits)?;
            if !v.long_unichord_free {
                let mut msg = "graph has a long unichord".to_string();
                if let Some(w) = &v.witness {
                    let _ = write!(msg, ": cycle {:?} with chord {:?}", w.cycle, w.chord);
                }
                return Err(Failure { code: 2, err: anyhow!(msg) });
            }
            let cfg = ColorConfig { checked: cli.checked, limits: limits.clone(), ..ColorConfig::default() };
            let c = color_with(&g, &cfg)?;
            match format.unwrap_or("json") {
                "json" => Ok(to_json(&json!({
                    "colors": c.palette_size,
                    "omega": c.omega,
                    "bound": c.bound,
                    "assignment": c.assignment,
                    "trace": c.trace,
                }))),
                "text" => {
                    let mut s = format!("colors {} omega {} bound {}\n", c.palette_size, c.omega, c.bound);
                    for (v, k) in &c.assignment {
                        let _ = writeln!(s, "{v} {k}");
                    }
                    Ok(s)
                }
                other => Err(bad_format(other)),
            }
        }
        Command::Decompose { file } => {
            let g = read_graph(file)?;
            let v = recognize_with(&g, &limits)?;
            match format.unwrap_or("json") {
                "json" => Ok(to_json(&json!({
                    "long_unichord_free": v.long_unichord_free,
                    "components": v.trees.iter().map(tree_json).collect::<Vec<_>>(),
                }))),
                "dot" => Ok(trees_dot(&v.trees)),
                other => Err(bad_format(other)),
            }
        }
        Command::Gen { name, spec } => {
            let g = if name == "compose" {
                let path = spec.as_ref().ok_or_else(|| anyhow!("gen compose needs a SPEC file"))?;
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let node: SpecNode = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                build_spec(&node, &mut rng)?
            } else {
                if spec.is_some() {
                    return Err(anyhow!("unexpected SPEC after graph name `{name}`").into());
                }
                Named::parse(name)?.build()
            };
            match format.unwrap_or("json") {
                "json" => Ok(emit_graph(&g, Format::Json)),
                "dimacs" | "col" => Ok(emit_graph(&g, Format::Dimacs)),
                other => Err(bad_format(other)),
            }
        }
        Command::Oracle { file } => {
            let g = read_graph(file)?;
            let w = oracle::find_long_unichord_with(&g, &limits)?;
            let omega = oracle::clique_number_exact_with(&g, &limits)?;
            let chi = oracle::chromatic_number_exact_with(&g, &limits)?.chi;
            match format.unwrap_or("json") {
                "json" => Ok(to_json(&json!({
                    "long_unichord_free": w.is_none(),
                    "witness": w,
                    "omega": omega,
                    "chi": chi,
                }))),
                "text" => Ok(format!("long-unichord-free {}\nomega {omega}\nchi {chi}\n", w.is_none())),
                other => Err(bad_format(other)),
            }
        }
        Command::VerifyColoring { graph, coloring } => {
            let g = read_graph(graph)?;
            let assignment = read_coloring(coloring)?;
            match verify_coloring(&g, &assignment) {
                Ok(()) => {
                    let used = assignment.values().collect::<std::collections::BTreeSet<_>>().len();
                    Ok(to_json(&json!({ "proper": true, "colors": used })))
                }
                Err(msg) => Err(anyhow!("coloring is not proper: {msg}").into()),
            }
        }
        Command::Bench { suite, count, max_n } => bench(cli, suite, *count, *max_n, &limits),
    }
}

fn bad_format(f: &str) -> Failure {
    anyhow!("format `{f}` is not available for this command").into()
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let loaded = load_graph(&bytes, Format::from_path(&path.to_string_lossy()))
        .with_context(|| format!("parsing {}", path.display()))?;
    if loaded.duplicate_edges > 0 {
        eprintln!("warning: dropped {} repeated edge(s)", loaded.duplicate_edges);
    }
    Ok(loaded.graph)
}

fn read_coloring(path: &Path) -> anyhow::Result<BTreeMap<VertexId, usize>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let v: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let map = v.get("assignment").unwrap_or(&v);
    let obj = map.as_object().ok_or_else(|| anyhow!("expected an object mapping vertices to colors"))?;
    let mut out = BTreeMap::new();
    for (k, c) in obj {
        let v: VertexId = k.parse().with_context(|| format!("bad vertex `{k}`"))?;
        let c = c.as_u64().ok_or_else(|| anyhow!("bad color for vertex {k}"))?;
        out.insert(v, c as usize);
    }
    Ok(out)
}

fn verdict_json(v: &Verdict) -> Value {
    let mut out = json!({
        "long_unichord_free": v.long_unichord_free,
        "n": v.n,
        "m": v.m,
        "tree": v.stats,
        "leaf_classes": v.leaf_classes,
    });
    if let Some(w) = &v.witness {
        out["witness"] = json!(w);
    }
    out
}

fn verdict_text(v: &Verdict) -> String {
    let mut s = format!(
        "long-unichord-free {}\nn {} m {}\ntree nodes {} leaves {} depth {}\n",
        v.long_unichord_free, v.n, v.m, v.stats.nodes, v.stats.leaves, v.stats.depth
    );
    if let Some(w) = &v.witness {
        let _ = writeln!(s, "witness cycle {:?} chord {:?}", w.cycle, w.chord);
    }
    s
}

fn tree_json(t: &DecompTree) -> Value {
    let nodes: Vec<Value> = t
        .nodes
        .iter()
        .enumerate()
        .map(|(i, node)| {
            json!({
                "id": i,
                "rule": node.rule,
                "depth": node.depth,
                "vertices": node.graph.ids(),
                "m": node.graph.m(),
                "split": node.split,
                "markers": node.markers,
                "children": node.children,
                "leaf_class": node.leaf_class,
            })
        })
        .collect();
    json!({ "nodes": nodes, "marker_origin": t.marker_origin })
}

fn trees_dot(trees: &[DecompTree]) -> String {
    let mut s = String::from("digraph decomposition {\n  node [shape=box];\n");
    for (c, t) in trees.iter().enumerate() {
        for (i, node) in t.nodes.iter().enumerate() {
            let what = match node.leaf_class {
                Some(class) => serde_json::to_value(class).unwrap().as_str().unwrap_or("leaf").to_string(),
                None => serde_json::to_value(node.rule).unwrap().as_str().unwrap_or("").to_string(),
            };
            let _ = writeln!(s, "  t{c}n{i} [label=\"{what}\\nn={} m={}\"];", node.graph.n(), node.graph.m());
            for &ch in &node.children {
                let _ = writeln!(s, "  t{c}n{i} -> t{c}n{ch};");
            }
        }
    }
    s.push_str("}\n");
    s
}

/// A node of a composition spec: a graph name, a random base-class seed, or a
/// composition of one or two sub-specs.
#[derive(Deserialize)]
#[serde(untagged)]
enum SpecNode {
    Name(String),
    Random { random: String, n: usize },
    Compose { compose: Composition, left: Box<SpecNode>, right: Option<Box<SpecNode>> },
}

fn build_spec(node: &SpecNode, rng: &mut ChaCha8Rng) -> anyhow::Result<Graph> {
    Ok(match node {
        SpecNode::Name(s) => Named::parse(s)?.build(),
        SpecNode::Random { random, n } => match random.as_str() {
            "chordal" => generate::random_chordal(rng, *n, 0.4),
            "sparse-bipartite" => generate::random_sparse_bipartite(rng, *n, (*n / 3).max(1)),
            "petersen-sub" => generate::random_petersen_sub(rng, *n),
            "heawood-sub" => generate::random_heawood_sub(rng, *n),
            "seed" => generate::random_seed(rng, *n),
            "composed" => random_composed(rng, *n, 2).graph,
            other => bail!("unknown random kind `{other}`"),
        },
        SpecNode::Compose { compose: spec, left, right } => {
            let g1 = build_spec(left, rng)?;
            let g2 = right.as_ref().map(|r| build_spec(r, rng)).transpose()?;
            compose(spec, &g1, g2.as_ref())?.graph
        }
    })
}

fn bench(cli: &Cli, suite: &str, count: usize, max_n: usize, limits: &Limits) -> Out {
    let graphs: Vec<Graph> = match suite {
        "corpus" => corpus(cli.seed, count, max_n).into_iter().map(|i| i.graph).collect(),
        "scaling" => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            [125, 250, 500, 1000].iter().flat_map(|&n| (0..3).map(|_| random_composed(&mut rng, n, 2).graph).collect::<Vec<_>>()).collect()
        }
        other => return Err(anyhow!("unknown suite `{other}` (corpus or scaling)").into()),
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).stack_size(STACK).build().context("building thread pool")?;
    let cfg = ColorConfig { checked: cli.checked, limits: limits.clone(), ..ColorConfig::default() };
    let rows: Vec<Value> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                let t0 = Instant::now();
                let v = recognize_with(g, limits);
                let t_rec = t0.elapsed();
                let t1 = Instant::now();
                let c = color_with(g, &cfg);
                let t_col = t1.elapsed();
                json!({
                    "n": g.n(),
                    "m": g.m(),
                    "in_class": v.as_ref().ok().map(|v| v.long_unichord_free),
                    "recognize_ms": t_rec.as_secs_f64() * 1e3,
                    "colors": c.as_ref().ok().map(|c| c.palette_size),
                    "bound": c.as_ref().ok().map(|c| c.bound),
                    "color_ms": t_col.as_secs_f64() * 1e3,
                    "error": v.err().or(c.err()).map(|e| e.to_string()),
                })
            })
            .collect()
    });
    Ok(to_json(&json!({ "suite": suite, "seed": cli.seed, "instances": rows })))
}
