//! Command implementations: enumerate, check, bench.

use std::fs;
use std::io::Write;
use std::time::Instant;

use maxsub_core::catalog::{self, families};
use maxsub_core::hered::{gen_hered, gen_ordered};
use maxsub_core::oracle::{brute_force_all, brute_force_with_vertex, OracleLimit};
use maxsub_core::property::{is_max, Property};
use maxsub_core::vcs::{
    enumerate_incremental, gen_all_connected, gen_all_rooted, gen_with_vertex, SolutionSink,
};
use maxsub_core::{EngineStats, Graph, PropertyClass, SolutionSet, VertexSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{BenchArgs, BenchFamily, CheckArgs, CliError, Engine, EnumerateArgs};

fn load_graph(path: &str) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))?;
    Ok(crate::format::parse_graph(&text)?)
}

fn lookup_property(name: &str) -> Result<&'static dyn Property, CliError> {
    catalog::by_name(name).ok_or_else(|| {
        let known: Vec<&str> = catalog::all().iter().map(|p| p.name()).collect();
        CliError::Usage(format!(
            "unknown property `{name}` (known: {})",
            known.join(", ")
        ))
    })
}

fn format_solution(s: &VertexSet, json: bool) -> String {
    let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    if json {
        format!("[{}]", ids.join(","))
    } else {
        ids.join(" ")
    }
}

fn engine_usage(e: maxsub_core::hered::EngineError) -> CliError {
    CliError::Usage(e.to_string())
}

fn print_stats(count: usize, stats: &EngineStats) {
    eprintln!("solutions: {count}");
    eprintln!("iterations: {}", stats.outer_iterations);
    eprintln!("restricted_calls: {}", stats.restricted_calls);
    eprintln!("max_pool: {}", stats.max_candidate_pool);
    eprintln!("max_emission_gap: {}", stats.max_emission_gap());
    eprintln!("elapsed_ms: {:.3}", stats.elapsed.as_secs_f64() * 1e3);
}

pub fn enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let g = load_graph(&args.graph)?;
    let p = lookup_property(&args.property)?;

    let engine = match args.engine {
        Engine::Auto => {
            if p.class() == PropertyClass::Hereditary {
                Engine::Hered
            } else {
                Engine::Vcs
            }
        }
        e => e,
    };
    if args.vertex.is_some() && !matches!(engine, Engine::Vcs | Engine::Ordered | Engine::Oracle) {
        return Err(CliError::Usage(
            "--vertex is only meaningful for engines vcs, ordered, and oracle".into(),
        ));
    }
    if let Some(v) = args.vertex {
        if v >= g.vertex_count() {
            return Err(CliError::Usage(format!(
                "vertex id {v} out of range (n = {})",
                g.vertex_count()
            )));
        }
    }

    let stdout = std::io::stdout();
    let mut out = stdout.lock();

    // The streaming engine prints in emission order unless asked for
    // canonical output; every other engine collects first.
    if engine == Engine::Incremental && !args.canonical {
        let json = args.json;
        let mut write_err = None;
        let mut print = |s: &VertexSet| {
            let line = format_solution(s, json);
            if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
                write_err.get_or_insert(e);
            }
        };
        let mut sink = SolutionSink::streaming(&mut print);
        if let Some(k) = args.limit {
            sink = sink.with_limit(k);
        }
        let (result, stats) = enumerate_incremental(p, &g, &mut sink).map_err(engine_usage)?;
        drop(sink);
        if let Some(e) = write_err {
            return Err(CliError::Internal(format!("write failed: {e}")));
        }
        if args.stats {
            print_stats(result.len(), &stats);
        }
        return Ok(());
    }

    let (result, stats) = run_collected(engine, p, &g, args.vertex, args.limit)?;
    let mut lines: Vec<VertexSet> = result.iter().cloned().collect();
    if args.canonical {
        lines.sort(); // solution sets already sort canonically
    }
    let truncate = matches!(engine, Engine::Hered | Engine::Ordered | Engine::Oracle);
    if truncate {
        if let Some(k) = args.limit {
            lines.truncate(k as usize);
        }
    }
    for s in &lines {
        writeln!(out, "{}", format_solution(s, args.json))
            .map_err(|e| CliError::Internal(format!("write failed: {e}")))?;
    }
    if args.stats {
        print_stats(lines.len(), &stats);
    }
    Ok(())
}

fn run_collected(
    engine: Engine,
    p: &dyn Property,
    g: &Graph,
    vertex: Option<usize>,
    limit: Option<u64>,
) -> Result<(SolutionSet, EngineStats), CliError> {
    match engine {
        Engine::Hered => gen_hered(p, g).map_err(engine_usage),
        Engine::Vcs => {
            let mut sink = SolutionSink::collecting();
            if let Some(k) = limit {
                sink = sink.with_limit(k);
            }
            match (vertex, p.class()) {
                (Some(v), _) => gen_with_vertex(p, g, v, &mut sink).map_err(engine_usage),
                (None, PropertyClass::ConnectedHereditary) => {
                    gen_all_connected(p, g, &mut sink).map_err(engine_usage)
                }
                (None, PropertyClass::RootedHereditary) => {
                    gen_all_rooted(p, g, &mut sink).map_err(engine_usage)
                }
                (None, PropertyClass::Hereditary) => Err(CliError::Usage(
                    "engine `vcs` does not accept hereditary properties; use hered, auto, \
                     or incremental"
                        .into(),
                )),
            }
        }
        Engine::Ordered => {
            let v_r = match (vertex, p.class()) {
                (Some(v), _) => v,
                (None, PropertyClass::RootedHereditary) => g.root().ok_or_else(|| {
                    CliError::Usage("graph has no root; pass --vertex or add a root line".into())
                })?,
                (None, _) => {
                    return Err(CliError::Usage("engine `ordered` requires --vertex".into()))
                }
            };
            gen_ordered(p, g, v_r).map_err(engine_usage)
        }
        Engine::Incremental => {
            let mut sink = SolutionSink::collecting();
            if let Some(k) = limit {
                sink = sink.with_limit(k);
            }
            enumerate_incremental(p, g, &mut sink).map_err(engine_usage)
        }
        Engine::Oracle => {
            let start = Instant::now();
            let limit = OracleLimit::default();
            let result = match vertex {
                Some(v) => brute_force_with_vertex(p, &g.full(), v, &limit),
                None => brute_force_all(p, &g.full(), &limit),
            }
            .map_err(|e| CliError::Usage(e.to_string()))?;
            let stats = EngineStats {
                emissions: result.len() as u64,
                elapsed: start.elapsed(),
                ..EngineStats::default()
            };
            Ok((result, stats))
        }
        Engine::Auto => unreachable!("resolved by caller"),
    }
}

pub fn check(args: CheckArgs) -> Result<(), CliError> {
    let g = load_graph(&args.graph)?;
    let p = lookup_property(&args.property)?;
    let n = g.vertex_count();
    for &v in &args.set {
        if v >= n {
            return Err(CliError::Usage(format!(
                "vertex id {v} out of range (n = {n})"
            )));
        }
    }
    let verts: VertexSet = args.set.iter().copied().collect();
    let h = g.induced(verts.clone());

    let sat = p.sat(&h);
    println!("sat: {sat}");
    if !sat {
        let reason = match p.class() {
            PropertyClass::ConnectedHereditary if !h.is_connected() || h.is_empty() => {
                "not connected"
            }
            PropertyClass::RootedHereditary if !h.is_rooted() => "not rooted",
            _ => "predicate false",
        };
        println!("reason: {reason}");
        println!("max: false");
        return Ok(());
    }
    let maximal = is_max(p, &h);
    println!("max: {maximal}");
    if !maximal {
        let witness = g
            .vertices()
            .difference(&verts)
            .iter()
            .find(|&v| p.sat(&h.extend(v)))
            .ok_or_else(|| {
                CliError::Internal("non-maximal set with no extension witness".into())
            })?;
        println!("witness: {witness}");
    }
    Ok(())
}

pub fn bench(args: BenchArgs) -> Result<(), CliError> {
    let (instances, default_property): (Vec<(String, Graph)>, &str) = match args.family {
        BenchFamily::G2 => {
            let max = args.max.unwrap_or(6);
            let graphs = (args.min.max(1)..=max)
                .map(|n| (format!("g2({n})"), families::g2(n)))
                .collect();
            (graphs, "bipartite")
        }
        BenchFamily::Triangles => {
            let max = args.max.unwrap_or(5);
            let graphs = (args.min.max(1)..=max)
                .map(|k| (format!("triangles({k})"), families::disjoint_triangles(k)))
                .collect();
            (graphs, "independent-set")
        }
        BenchFamily::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let graphs = (0..args.count)
                .map(|i| {
                    let edges: Vec<(usize, usize)> = (0..args.n)
                        .flat_map(|u| (0..args.n).map(move |v| (u, v)))
                        .filter(|&(u, v)| u != v)
                        .filter(|_| rng.gen_bool(args.density.clamp(0.0, 1.0)))
                        .collect();
                    let g = Graph::directed(args.n, &edges)
                        .expect("generated edges in range")
                        .with_root(0)
                        .expect("n >= 1");
                    (format!("random(seed={},#{i})", args.seed), g)
                })
                .collect();
            (graphs, "independent-set")
        }
    };
    let name = args.property.as_deref().unwrap_or(default_property);
    let p = lookup_property(name)?;
    let engine = match args.engine {
        Engine::Auto => {
            if p.class() == PropertyClass::Hereditary {
                Engine::Hered
            } else {
                Engine::Vcs
            }
        }
        e => e,
    };

    let family = match args.family {
        BenchFamily::G2 => "g2",
        BenchFamily::Triangles => "triangles",
        BenchFamily::Random => "random",
    };
    println!("family\tinstance\tn\tsolutions\telapsed_ms\tus_per_solution\tmax_gap");
    for (label, g) in &instances {
        let (result, stats) = run_collected(engine, p, g, None, None)?;
        let k = result.len();
        let ms = stats.elapsed.as_secs_f64() * 1e3;
        let per = if k > 0 {
            stats.elapsed.as_secs_f64() * 1e6 / k as f64
        } else {
            0.0
        };
        println!(
            "{family}\t{label}\t{}\t{k}\t{ms:.3}\t{per:.3}\t{}",
            g.vertex_count(),
            stats.max_emission_gap()
        );
    }
    Ok(())
}
