//! Command-line front end. Thin by design: parse arguments, call the
//! library, print deterministic output.
//!
//! Exit codes: 0 success, 1 input error, 2 inconclusive, 3 verification or
//! antichain failure, 4 resource limit.

use std::process::ExitCode;

use canonical_witness::bounds::{self, BoundsConfig, GridMinorF};
use canonical_witness::canonical::{
    enumerate_canonical, make_canonical, verify_antichain, CanonicalConfig, CanonicalDescriptor,
    Tightness, HGRAPH_ABSOLUTE_MIN_ORDER,
};
use canonical_witness::error::Error;
use canonical_witness::extract::{
    make_dense_rake_graph, verify_witness, witness_pipeline_staged, PipelineStage, Witness,
};
use canonical_witness::limits::SearchLimits;
use canonical_witness::{graph, io, oracle, witness_json};

const USAGE: &str = "\
canonical-witness <command> [flags]

commands:
  extract    --input FILE --s N --q N [--stage pipeline|path|dense-rake] [--human]
  verify     --input FILE --witness FILE
  bounds     --fn P|R|C|Y|Z|b|D|X --args N... [--literal] [--f-exponent E] [--human]
  gen        --kind hole|h|h-semi|h-tight|rake|grid (--order N | -k N) [--dense L]
  antichain  --max-order N [--h-min N]
  oracle     --input FILE --op OP [op flags] [--human]
             ops: treewidth, longest-path, longest-induced-path,
                  hole --min-len N, clique --size N, biclique --a N --b N,
                  induced|subgraph|minor --pattern FILE

environment:
  CANONICAL_WITNESS_CEILING   integer; overrides the default search step budget

exit codes: 0 success, 1 input error, 2 inconclusive, 3 verification/antichain
failure, 4 resource limit
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Minimal flag parser: `--name value` pairs plus boolean switches; unknown
/// flags are rejected.
struct Flags {
    pairs: Vec<(String, String)>,
    switches: Vec<String>,
}

impl Flags {
    fn parse(args: &[String], valued: &[&str], boolean: &[&str]) -> Result<Flags, String> {
        let mut pairs = Vec::new();
        let mut switches = Vec::new();
        let mut i = 0;
        while i < args.len() {
            let a = &args[i];
            if a == "--args" {
                // --args consumes every following integer
                let mut vals = Vec::new();
                while i + 1 < args.len() && args[i + 1].parse::<u64>().is_ok() {
                    vals.push(args[i + 1].clone());
                    i += 1;
                }
                if vals.is_empty() {
                    return Err("--args needs at least one integer".into());
                }
                pairs.push(("args".into(), vals.join(" ")));
            } else if let Some(name) = a.strip_prefix("--") {
                if boolean.contains(&name) {
                    switches.push(name.to_string());
                } else if valued.contains(&name) {
                    let v = args
                        .get(i + 1)
                        .ok_or_else(|| format!("--{name} needs a value"))?;
                    pairs.push((name.to_string(), v.clone()));
                    i += 1;
                } else {
                    return Err(format!("unknown flag --{name}"));
                }
            } else if a == "-k" {
                let v = args.get(i + 1).ok_or("-k needs a value")?;
                pairs.push(("k".into(), v.clone()));
                i += 1;
            } else {
                return Err(format!("unexpected argument {a:?}"));
            }
            i += 1;
        }
        Ok(Flags { pairs, switches })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.pairs.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_str())
    }

    fn require(&self, name: &str) -> Result<&str, String> {
        self.get(name).ok_or_else(|| format!("missing --{name}"))
    }

    fn number(&self, name: &str) -> Result<u64, String> {
        self.require(name)?
            .parse()
            .map_err(|_| format!("--{name} must be an integer"))
    }

    fn has(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }
}

fn run(args: &[String]) -> Result<ExitCode, String> {
    let Some(command) = args.first() else {
        eprint!("{USAGE}");
        return Ok(ExitCode::from(1));
    };
    let rest = &args[1..];
    match command.as_str() {
        "extract" => cmd_extract(rest),
        "verify" => cmd_verify(rest),
        "bounds" => cmd_bounds(rest),
        "gen" => cmd_gen(rest),
        "antichain" => cmd_antichain(rest),
        "oracle" => cmd_oracle(rest),
        "--help" | "-h" | "help" => {
            print!("{USAGE}");
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown command {other:?}; try --help")),
    }
}

fn load_graph(path: &str) -> Result<graph::Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    io::parse_edge_list(&text).map_err(|e| format!("{path}: {e}"))
}

fn exit_for(e: &Error) -> ExitCode {
    match e {
        Error::ResourceLimit(_) => ExitCode::from(4),
        _ => ExitCode::from(1),
    }
}

// ============================================================================
// extract
// ============================================================================

fn cmd_extract(args: &[String]) -> Result<ExitCode, String> {
    let flags = Flags::parse(args, &["input", "s", "q", "stage"], &["human"])?;
    let g = load_graph(flags.require("input")?)?;
    let s = flags.number("s")? as usize;
    let q = flags.number("q")? as usize;
    let stage = match flags.get("stage").unwrap_or("pipeline") {
        "pipeline" => PipelineStage::Full,
        "path" => PipelineStage::PathOnly,
        "dense-rake" => PipelineStage::DenseRakeOnly,
        other => return Err(format!("unknown stage {other:?}")),
    };
    let limits = SearchLimits::from_env();
    let witness = witness_pipeline_staged(&g, s, q, &limits, stage);
    let conclusive = witness.is_conclusive();
    if flags.has("human") {
        print_witness_human(&witness);
    } else {
        println!("{}", witness_json::to_json_string(&witness, conclusive));
    }
    Ok(if conclusive { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn print_witness_human(w: &Witness) {
    match w {
        Witness::InducedPath(p) => {
            println!("type: induced-path");
            println!("vertices: {}", join(p));
        }
        Witness::Biclique(a, b) => {
            println!("type: biclique");
            println!("sideA: {}", join(a));
            println!("sideB: {}", join(b));
        }
        Witness::Canonical(cw) => {
            println!("type: canonical");
            println!("descriptor: {}", cw.descriptor);
            println!("vertices: {}", join(&cw.embedding));
        }
        Witness::Rake(r) => {
            println!("type: rake");
            println!("base: {}", join(&r.base));
            let teeth: Vec<String> =
                r.teeth.iter().map(|&(t, root)| format!("{t}@{root}")).collect();
            println!("teeth: {}", teeth.join(" "));
            if let Some(d) = r.density {
                println!("density: {d}");
            }
        }
        Witness::Inconclusive { reason, stage_log } => {
            println!("type: inconclusive");
            println!("reason: {reason}");
            for line in stage_log {
                println!("log: {line}");
            }
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

// ============================================================================
// verify
// ============================================================================

fn cmd_verify(args: &[String]) -> Result<ExitCode, String> {
    let flags = Flags::parse(args, &["input", "witness"], &[])?;
    let g = load_graph(flags.require("input")?)?;
    let wpath = flags.require("witness")?;
    let text = std::fs::read_to_string(wpath).map_err(|e| format!("{wpath}: {e}"))?;
    let witness = witness_json::from_json_str(&text).map_err(|e| format!("{wpath}: {e}"))?;
    match verify_witness(&g, &witness) {
        Ok(()) => {
            println!("ok");
            Ok(ExitCode::SUCCESS)
        }
        Err(diagnostic) => {
            println!("invalid: {diagnostic}");
            Ok(ExitCode::from(3))
        }
    }
}

// ============================================================================
// bounds
// ============================================================================

fn cmd_bounds(args: &[String]) -> Result<ExitCode, String> {
    let flags = Flags::parse(args, &["fn", "args", "f-exponent"], &["literal", "human"])?;
    let name = flags.require("fn")?;
    let nums: Vec<u64> = flags
        .require("args")?
        .split_whitespace()
        .map(|x| x.parse().expect("validated by the parser"))
        .collect();
    let mut cfg = if flags.has("literal") {
        BoundsConfig::literal()
    } else {
        BoundsConfig::default()
    };
    if let Some(e) = flags.get("f-exponent") {
        let e: u32 = e.parse().map_err(|_| "--f-exponent must be an integer")?;
        cfg.f = if e == 1 { GridMinorF::Identity } else { GridMinorF::Power(e) };
    }
    let arity_err = |want: usize| format!("--fn {name} takes {want} arguments, got {}", nums.len());
    let result = match (name, nums.len()) {
        ("P", 2) => bounds::pigeonhole_p(nums[0], nums[1]),
        ("R", 2) => bounds::ramsey_upper_r(nums[0], nums[1], &cfg),
        ("C", 2) => bounds::lemma_grid_c(nums[0], nums[1], &cfg),
        ("Y", 2) => bounds::thm_main2_y(nums[0], nums[1], &cfg),
        ("Z", 3) => bounds::thm_main_z(nums[0], nums[1], nums[2], &cfg),
        ("b", 2) => bounds::lemma_dense_b(nums[0], nums[1], &cfg),
        ("D", 3) => bounds::lemma_dense_d(nums[0], nums[1], nums[2], &cfg),
        ("X", 2) => bounds::thm_prefinal_x(nums[0], nums[1], &cfg),
        ("P", _) | ("R", _) | ("C", _) | ("Y", _) | ("b", _) | ("X", _) => {
            return Err(arity_err(2))
        }
        ("Z", _) | ("D", _) => return Err(arity_err(3)),
        (other, _) => return Err(format!("unknown bound function {other:?}")),
    };
    match result {
        Ok(bv) => {
            if flags.has("human") {
                println!("{} = {}", bv.provenance, bv.value);
                if !bv.flags.is_empty() {
                    println!("flags: {}", bv.flags_line());
                }
            } else {
                println!("{}", bv.value);
                println!("{}", bv.flags_line());
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ Error::ResourceLimit(_)) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(4))
        }
        Err(e) => Err(e.to_string()),
    }
}

// ============================================================================
// gen
// ============================================================================

fn cmd_gen(args: &[String]) -> Result<ExitCode, String> {
    let flags = Flags::parse(args, &["kind", "order", "dense"], &[])?;
    let kind = flags.require("kind")?;
    let constructor_cfg = CanonicalConfig::with_h_min(HGRAPH_ABSOLUTE_MIN_ORDER);
    let g = match kind {
        "hole" => {
            let order = flags.number("order")? as usize;
            make_canonical(&CanonicalDescriptor::Hole { order }, &constructor_cfg)
                .map_err(|e| e.to_string())?
        }
        "h" | "h-semi" | "h-tight" => {
            let order = flags.number("order")? as usize;
            let tightness = match kind {
                "h" => Tightness::Plain,
                "h-semi" => Tightness::SemiTight,
                _ => Tightness::Tight,
            };
            make_canonical(&CanonicalDescriptor::HGraph { order, tightness }, &constructor_cfg)
                .map_err(|e| e.to_string())?
        }
        "rake" => {
            let k = flags.number("k")? as usize;
            let ell = flags.get("dense").map_or(Ok(1), |d| {
                d.parse::<usize>().map_err(|_| "--dense must be an integer".to_string())
            })?;
            let (g, _) = make_dense_rake_graph(k, ell).map_err(|e| e.to_string())?;
            g
        }
        "grid" => {
            let k = flags.number("k")? as usize;
            if k == 0 {
                return Err("grid side must be positive".into());
            }
            graph::grid(k)
        }
        other => return Err(format!("unknown kind {other:?}")),
    };
    print!("{}", io::write_edge_list(&g));
    Ok(ExitCode::SUCCESS)
}

// ============================================================================
// antichain
// ============================================================================

fn cmd_antichain(args: &[String]) -> Result<ExitCode, String> {
    let flags = Flags::parse(args, &["max-order", "h-min"], &[])?;
    let max_order = flags.number("max-order")? as usize;
    let cfg = match flags.get("h-min") {
        Some(h) => CanonicalConfig::with_h_min(
            h.parse().map_err(|_| "--h-min must be an integer")?,
        ),
        None => CanonicalConfig::default(),
    };
    let limits = SearchLimits::from_env();
    let descriptors = enumerate_canonical(max_order, &cfg);
    match verify_antichain(&descriptors, &cfg, &limits) {
        Ok(report) if report.is_antichain() => {
            println!("OK {} pairs", report.pairs_checked);
            Ok(ExitCode::SUCCESS)
        }
        Ok(report) => {
            for v in &report.violations {
                println!("violation: {} embeds in {}", v.pattern, v.host);
            }
            Ok(ExitCode::from(3))
        }
        Err(e @ Error::ResourceLimit(_)) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(4))
        }
        Err(e) => Err(e.to_string()),
    }
}

// ============================================================================
// oracle
// ============================================================================

fn cmd_oracle(args: &[String]) -> Result<ExitCode, String> {
    let flags = Flags::parse(
        args,
        &["input", "op", "min-len", "size", "a", "b", "pattern"],
        &["human"],
    )?;
    let g = load_graph(flags.require("input")?)?;
    let limits = SearchLimits::from_env();
    let op = flags.require("op")?;
    let outcome: Result<String, Error> = match op {
        "treewidth" => {
            oracle::treewidth_exact(&g, &limits).map(|tw| format!(r#"{{"treewidth":{tw}}}"#))
        }
        "longest-path" => oracle::longest_path(&g, &limits)
            .map(|p| format!(r#"{{"found":true,"vertices":{}}}"#, seq_json(&p))),
        "longest-induced-path" => oracle::longest_induced_path(&g, &limits)
            .map(|p| format!(r#"{{"found":true,"vertices":{}}}"#, seq_json(&p))),
        "hole" => {
            let min_len = flags.number("min-len").unwrap_or(4) as usize;
            oracle::find_hole(&g, min_len, &limits).map(|h| match h {
                Some(c) => format!(r#"{{"found":true,"vertices":{}}}"#, seq_json(&c)),
                None => r#"{"found":false}"#.to_string(),
            })
        }
        "clique" => {
            let size = flags.number("size")? as usize;
            oracle::find_clique(&g, size, &limits).map(|c| match c {
                Some(c) => format!(r#"{{"found":true,"vertices":{}}}"#, seq_json(&c)),
                None => r#"{"found":false}"#.to_string(),
            })
        }
        "biclique" => {
            let a = flags.number("a")? as usize;
            let b = flags.number("b")? as usize;
            oracle::find_biclique(&g, a, b, &limits).map(|r| match r {
                Some((sa, sb)) => format!(
                    r#"{{"found":true,"sideA":{},"sideB":{}}}"#,
                    seq_json(&sa),
                    seq_json(&sb)
                ),
                None => r#"{"found":false}"#.to_string(),
            })
        }
        "induced" | "subgraph" | "minor" => {
            let pattern = load_graph(flags.require("pattern")?)?;
            let search = match op {
                "induced" => oracle::find_induced_embedding(&g, &pattern, &limits),
                "subgraph" => oracle::find_subgraph_embedding(&g, &pattern, &limits),
                _ => oracle::find_minor_model(&g, &pattern, &limits),
            };
            search.map(|r| match r {
                Some(oracle::Embedding::Induced(m) | oracle::Embedding::Subgraph(m)) => {
                    format!(r#"{{"found":true,"map":{}}}"#, seq_json(&m))
                }
                Some(oracle::Embedding::Minor(sets)) => {
                    let sets: Vec<String> = sets.iter().map(|s| seq_json(s)).collect();
                    format!(r#"{{"found":true,"branchSets":[{}]}}"#, sets.join(","))
                }
                None => r#"{"found":false}"#.to_string(),
            })
        }
        other => return Err(format!("unknown oracle op {other:?}")),
    };
    match outcome {
        Ok(json) => {
            println!("{json}");
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(exit_for(&e))
        }
    }
}

fn seq_json(v: &[usize]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}
