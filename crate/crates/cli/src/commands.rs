use std::path::Path;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use pursuit_core::claims::{claim_ids, run_claim, ClaimOptions, CLAIMS};
use pursuit_core::copwin::{guard_path_neighborhood, guard_path_neighborhood_four, CopWinPolicy};
use pursuit_core::filament::{random_rep, top_sequence, two_cop_policy, FilamentRep};
use pursuit_core::generators::{self, FamilySpec};
use pursuit_core::policy::{CopPolicy, GreedyRobber, StationaryRobber};
use pursuit_core::reductions::{
    check_line_graph_inequality, check_speed_inclusion, check_subdivision_inequality, refute_string, InequalityReport,
    StringVerdict,
};
use pursuit_core::simulator::{play, replay, verify_capture, verify_guarding, CaptureVerdict, GuardVerdict, Trace};
use pursuit_core::solver::{
    analyze, cop_number, optimal_policies, GameAnalysis, GameConfig, OptimalCops, SolverOptions,
};
use pursuit_core::{Budget, Error, Exec, Graph};

use crate::{
    CaptureArgs, CheckCommand, Cli, Command, CopsKind, Family, GenerateArgs, GuardArgs, RepCommand, ReproduceArgs,
    RobberKind, SimulateArgs, VerifyCommand,
};

/// Version tag carried by every `--json` document.
const SCHEMA_VERSION: u32 = 1;

pub fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(err) if err.is_resource() => 3,
        _ => 2,
    }
}

struct Ctx {
    json: bool,
    opts: SolverOptions,
}

impl Ctx {
    fn emit(&self, kind: &str, doc: Value, human: impl FnOnce() -> String) {
        if self.json {
            let mut doc = doc;
            if let Value::Object(m) = &mut doc {
                m.insert("schema".into(), json!(format!("pursuit.{kind}/{SCHEMA_VERSION}")));
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        } else {
            println!("{}", human());
        }
    }

    fn budget(&self) -> &Budget {
        &self.opts.budget
    }
}

fn budget_from(cli: &Cli) -> Result<Budget> {
    let mut b = Budget::default();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        b.apply_config(&text)?;
    }
    b.apply_env()?;
    if let Some(v) = cli.max_states {
        b.max_states = v;
    }
    if let Some(v) = cli.max_product_states {
        b.max_product_states = v;
    }
    if let Some(s) = cli.time_limit {
        b.time_limit = Some(Duration::from_secs(s));
    }
    Ok(b)
}

pub fn run(cli: &Cli) -> Result<u8> {
    let budget = budget_from(cli)?;
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!(Error::Domain("--threads must be positive".into()));
        }
        pursuit_core::par::configure_threads(t)?;
    }
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    let ctx = Ctx {
        json: cli.json,
        opts: SolverOptions { budget, exec },
    };
    log::debug!("budget {:?}, exec {:?}", ctx.opts.budget, exec);
    match &cli.command {
        Command::Generate(a) => generate(&ctx, a),
        Command::Solve(a) => solve(&ctx, &a.graph, a.k, a.speeds),
        Command::Copnumber(a) => copnumber(&ctx, &a.graph, a.max_k, a.speeds),
        Command::Simulate(a) => simulate(&ctx, a),
        Command::Verify(VerifyCommand::GuardNpath(a)) => verify_guard(&ctx, a),
        Command::Verify(VerifyCommand::Capture(a)) => verify_capture_cmd(&ctx, a),
        Command::Verify(VerifyCommand::Trace { trace }) => verify_trace(&ctx, trace),
        Command::Check(c) => check(&ctx, c),
        Command::Rep(r) => rep(&ctx, r),
        Command::Reproduce(a) => reproduce(&ctx, a),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::read_json(path).with_context(|| format!("reading graph {}", path.display()))
}

fn read_rep(path: &Path) -> Result<FilamentRep> {
    FilamentRep::read_json(path).with_context(|| format!("reading representation {}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn write_trace(path: Option<&Path>, trace: &Trace) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, trace.to_json()).with_context(|| format!("writing trace {}", p.display()))?;
        log::info!("trace written to {}", p.display());
    }
    Ok(())
}

fn need<T>(v: Option<T>, flag: &str, family: Family) -> Result<T> {
    v.ok_or_else(|| anyhow!(Error::Domain(format!("--{flag} is required for {family:?}"))))
}

fn generate(ctx: &Ctx, a: &GenerateArgs) -> Result<u8> {
    let f = a.family;
    let spec = match f {
        Family::Path => FamilySpec::Path { n: need(a.n, "n", f)? },
        Family::Cycle => FamilySpec::Cycle { n: need(a.n, "n", f)? },
        Family::Complete => FamilySpec::Complete { n: need(a.n, "n", f)? },
        Family::Grid => FamilySpec::Grid {
            rows: need(a.rows, "rows", f)?,
            cols: need(a.cols, "cols", f)?,
        },
        Family::ToroidalGrid => FamilySpec::ToroidalGrid {
            rows: need(a.rows, "rows", f)?,
            cols: need(a.cols, "cols", f)?,
        },
        Family::Petersen => FamilySpec::Petersen,
        Family::ProjectiveIncidence => FamilySpec::ProjectiveIncidence { q: need(a.q, "q", f)? },
        Family::Random => FamilySpec::RandomGnp {
            n: need(a.n, "n", f)?,
            p: a.p,
            seed: a.seed,
        },
    };
    let mut g = generators::generate(&spec)?;
    if let Some(d) = a.subdivide {
        g = generators::subdivide(&g, d)?.graph().clone();
    }
    if a.line_graph {
        g = generators::line_graph(&g)?.0;
    }
    log::info!("generated {} vertices, {} edges", g.n(), g.edge_count());
    let text = g.to_json_string();
    match &a.output {
        Some(p) => {
            write_or_print(Some(p), &text)?;
            ctx.emit(
                "generate",
                json!({"output": p, "n": g.n(), "edges": g.edge_count()}),
                || format!("wrote {} ({} vertices, {} edges)", p.display(), g.n(), g.edge_count()),
            );
        }
        None => println!("{text}"),
    }
    Ok(0)
}

fn config(k: usize, speeds: crate::Speeds) -> Result<GameConfig> {
    let cfg = GameConfig {
        cops: k,
        cop_speed: speeds.cop_speed,
        robber_speed: speeds.robber_speed,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn solve(ctx: &Ctx, path: &Path, k: usize, speeds: crate::Speeds) -> Result<u8> {
    let g = read_graph(path)?;
    let a = analyze(&g, config(k, speeds)?, &ctx.opts)?;
    let s = a.summary();
    ctx.emit("solve", serde_json::to_value(&s)?, || {
        match (&s.witness, s.witness_value) {
            (Some(w), Some(v)) => format!(
                "{k} cops win: place at {w:?}, capture within {v} moves ({} states)",
                s.state_count
            ),
            _ => format!("{k} cops cannot win ({} states)", s.state_count),
        }
    });
    Ok(0)
}

fn copnumber(ctx: &Ctx, path: &Path, max_k: usize, speeds: crate::Speeds) -> Result<u8> {
    let g = read_graph(path)?;
    config(1, speeds)?;
    let cn = cop_number(&g, max_k, speeds.cop_speed, speeds.robber_speed, &ctx.opts)?;
    ctx.emit(
        "copnumber",
        json!({"cop_number": cn.exact(), "exceeds": if cn.exact().is_none() { Some(max_k) } else { None }, "max_k": max_k}),
        || cn.to_string(),
    );
    Ok(0)
}

fn default_k(ctx: &Ctx, g: &Graph, k: Option<usize>) -> Result<usize> {
    if let Some(k) = k {
        return Ok(k);
    }
    cop_number(g, g.n().max(1), 1, 1, &ctx.opts)?
        .exact()
        .ok_or_else(|| anyhow!(Error::Domain("graph is not connected; pass -k".into())))
}

/// Graph plus filament representation when the cops need one.
fn game_graph(graph: Option<&Path>, rep: Option<&Path>, cops: CopsKind) -> Result<(Graph, Option<FilamentRep>)> {
    match (cops, graph, rep) {
        (CopsKind::Filament, _, Some(r)) => {
            let rep = read_rep(r)?;
            Ok((rep.intersection_graph()?, Some(rep)))
        }
        (CopsKind::Filament, _, None) => bail!(Error::Domain("--cops filament needs --rep".into())),
        (_, Some(g), _) => Ok((read_graph(g)?, None)),
        (_, None, _) => bail!(Error::Domain("a graph file is required".into())),
    }
}

fn robber_run<C: CopPolicy>(
    ctx: &Ctx,
    a: &SimulateArgs,
    g: &Graph,
    cops: &C,
    analysis: Option<&GameAnalysis>,
) -> Result<Trace> {
    let cfg = GameConfig::standard(cops.cop_count());
    let t = match a.robber {
        RobberKind::Greedy => play(g, cfg, cops, &GreedyRobber::new(g), a.turns)?,
        RobberKind::Stationary => {
            let r = StationaryRobber {
                start: a.start,
                n: g.n(),
            };
            play(g, cfg, cops, &r, a.turns)?
        }
        RobberKind::Optimal => {
            let owned;
            let an = match analysis {
                Some(an) => an,
                None => {
                    owned = analyze(g, cfg, &ctx.opts)?;
                    &owned
                }
            };
            play(g, cfg, cops, &optimal_policies(an).1, a.turns)?
        }
    };
    Ok(t)
}

fn simulate(ctx: &Ctx, a: &SimulateArgs) -> Result<u8> {
    let (g, rep) = game_graph(a.graph.as_deref(), a.rep.as_deref(), a.cops)?;
    let trace = match a.cops {
        CopsKind::Optimal => {
            let k = default_k(ctx, &g, a.k)?;
            let an = analyze(&g, GameConfig::standard(k), &ctx.opts)?;
            robber_run(ctx, a, &g, &OptimalCops::new(&an), Some(&an))?
        }
        CopsKind::Copwin => robber_run(ctx, a, &g, &CopWinPolicy::new(&g)?, None)?,
        CopsKind::Filament => robber_run(ctx, a, &g, &two_cop_policy(rep.as_ref().expect("rep"))?, None)?,
    };
    write_trace(a.trace.as_deref(), &trace)?;
    ctx.emit(
        "simulate",
        json!({"outcome": trace.outcome, "robber_path": trace.robber_path()}),
        || format!("{:?}; robber path {:?}", trace.outcome, trace.robber_path()),
    );
    Ok(0)
}

fn verify_guard(ctx: &Ctx, a: &GuardArgs) -> Result<u8> {
    let g = read_graph(&a.graph)?;
    for &v in &a.path {
        g.check_vertex(v)?;
    }
    let region = match &a.region {
        Some(r) => g.vertex_set(r.iter().copied())?,
        None => g.vertex_set((0..g.n()).filter(|v| !a.path.contains(v)))?,
    };
    let assignment = if a.four {
        guard_path_neighborhood_four(&g, &a.path, &region)?
    } else {
        guard_path_neighborhood(&g, &a.path, &region)?
    };
    let verdict = verify_guarding(&g, &assignment, &region, ctx.budget())?;
    if let GuardVerdict::Violated { trace, .. } = &verdict {
        write_trace(a.trace.as_deref(), trace)?;
    }
    let cops = assignment.policy.cop_count();
    ctx.emit(
        "verify.guard-npath",
        serde_json::to_value(&verdict)?,
        || match &verdict {
            GuardVerdict::Valid { states } => format!("valid: {cops} cops guard N[P] ({states} states explored)"),
            GuardVerdict::Violated {
                reason, robber_path, ..
            } => {
                format!("violated: {reason}; robber path {robber_path:?}")
            }
        },
    );
    Ok(if verdict.is_valid() { 0 } else { 1 })
}

fn capture_report<C: CopPolicy>(ctx: &Ctx, g: &Graph, p: &C, a: &CaptureArgs) -> Result<u8> {
    let n = g.n();
    let bound = a.bound.unwrap_or(if a.cops == CopsKind::Filament {
        10 * n + 10
    } else {
        4 * n * n
    });
    let v = verify_capture(g, GameConfig::standard(p.cop_count()), p, bound, ctx.budget())?;
    let trace = match &v {
        CaptureVerdict::Captures { trace, .. } | CaptureVerdict::Escapes { trace, .. } => trace,
    };
    write_trace(a.trace.as_deref(), trace)?;
    let summary = match &v {
        CaptureVerdict::Captures {
            worst_turns, states, ..
        } => {
            json!({"verdict": "captures", "worst_turns": worst_turns, "states": states, "bound": bound})
        }
        CaptureVerdict::Escapes { kind, .. } => {
            json!({"verdict": "escapes", "kind": kind, "robber_path": trace.robber_path(), "bound": bound})
        }
    };
    ctx.emit("verify.capture", summary, || match &v {
        CaptureVerdict::Captures {
            worst_turns, states, ..
        } => {
            format!("valid: capture within {worst_turns} turns (bound {bound}, {states} states)")
        }
        CaptureVerdict::Escapes { kind, .. } => format!("escapes ({kind:?}); robber path {:?}", trace.robber_path()),
    });
    Ok(if v.is_valid() { 0 } else { 1 })
}

fn verify_capture_cmd(ctx: &Ctx, a: &CaptureArgs) -> Result<u8> {
    let (g, rep) = game_graph(a.graph.as_deref(), a.rep.as_deref(), a.cops)?;
    match a.cops {
        CopsKind::Optimal => {
            let k = default_k(ctx, &g, a.k)?;
            let an = analyze(&g, GameConfig::standard(k), &ctx.opts)?;
            capture_report(ctx, &g, &OptimalCops::new(&an), a)
        }
        CopsKind::Copwin => capture_report(ctx, &g, &CopWinPolicy::new(&g)?, a),
        CopsKind::Filament => capture_report(ctx, &g, &two_cop_policy(rep.as_ref().expect("rep"))?, a),
    }
}

fn verify_trace(ctx: &Ctx, path: &Path) -> Result<u8> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let trace = Trace::from_json(&text)?;
    let (ok, msg) = match replay(&trace) {
        Ok(()) => (true, format!("trace is consistent: {:?}", trace.outcome)),
        Err(e) => (false, format!("trace rejected: {e}")),
    };
    ctx.emit("verify.trace", json!({"valid": ok, "message": msg}), || msg.clone());
    Ok(if ok { 0 } else { 1 })
}

fn inequality(ctx: &Ctx, kind: &str, r: InequalityReport) -> Result<u8> {
    ctx.emit(kind, serde_json::to_value(&r)?, || {
        format!(
            "{}\n  {} <= {}{} <= {}: {}",
            r.instance,
            r.lhs,
            if r.mid_is_lower_bound { ">=" } else { "" },
            r.mid,
            r.rhs,
            if r.holds { "holds" } else { "VIOLATED" }
        )
    });
    Ok(if r.holds { 0 } else { 1 })
}

fn check(ctx: &Ctx, c: &CheckCommand) -> Result<u8> {
    match c {
        CheckCommand::Subdivision { graph, d } => {
            let r = check_subdivision_inequality(&read_graph(graph)?, *d, &ctx.opts)?;
            inequality(ctx, "check.subdivision", r)
        }
        CheckCommand::Linegraph { graph } => {
            let r = check_line_graph_inequality(&read_graph(graph)?, &ctx.opts)?;
            inequality(ctx, "check.linegraph", r)
        }
        CheckCommand::Speed { graph, d } => {
            let r = check_speed_inclusion(&read_graph(graph)?, *d, &ctx.opts)?;
            inequality(ctx, "check.speed", r)
        }
        CheckCommand::RefuteString { graph, k_budget } => {
            let v = refute_string(&read_graph(graph)?, *k_budget, &ctx.opts)?;
            ctx.emit("check.refute-string", serde_json::to_value(&v)?, || match &v {
                StringVerdict::NotString { reason } => format!("not a string graph: {reason}"),
                StringVerdict::Inconclusive { note } => format!("inconclusive: {note}"),
            });
            Ok(match v {
                StringVerdict::NotString { .. } => 1,
                StringVerdict::Inconclusive { .. } => 0,
            })
        }
    }
}

fn rep(ctx: &Ctx, r: &RepCommand) -> Result<u8> {
    match r {
        RepCommand::Check { rep } => {
            let rep = read_rep(rep)?;
            let violations = rep.validate();
            let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
            ctx.emit(
                "rep.check",
                json!({"valid": violations.is_empty(), "violations": violations}),
                || {
                    if list.is_empty() {
                        format!("valid representation of {} filaments", rep.n())
                    } else {
                        format!("{} violation(s):\n  {}", list.len(), list.join("\n  "))
                    }
                },
            );
            Ok(if violations.is_empty() { 0 } else { 1 })
        }
        RepCommand::Graph { rep, output } => {
            let g = read_rep(rep)?.intersection_graph()?;
            write_or_print(output.as_deref(), &g.to_json_string())?;
            Ok(0)
        }
        RepCommand::Envelope { rep, set } => {
            let rep = read_rep(rep)?;
            let set = set.clone().unwrap_or_else(|| (0..rep.n()).collect());
            if let Some(&v) = set.iter().find(|&&v| v >= rep.n()) {
                bail!(Error::Domain(format!("vertex {v} out of range")));
            }
            let top = top_sequence(&rep, &set)?;
            ctx.emit("rep.envelope", json!({"top": top}), || {
                top.iter()
                    .map(|e| format!("{} on [{}, {}]", e.vertex, e.from, e.to))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(0)
        }
        RepCommand::Random { n, bends, seed, output } => {
            let rep = random_rep(*n, *bends, *seed)?;
            write_or_print(output.as_deref(), &rep.to_json_string())?;
            Ok(0)
        }
    }
}

fn reproduce(ctx: &Ctx, a: &ReproduceArgs) -> Result<u8> {
    if a.list {
        ctx.emit(
            "reproduce.list",
            json!({"claims": CLAIMS.iter().map(|c| json!({"id": c.0, "description": c.1})).collect::<Vec<_>>()}),
            || {
                CLAIMS
                    .iter()
                    .map(|(id, d)| format!("{id:<20} {d}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            },
        );
        return Ok(0);
    }
    let claim = a.claim.as_deref().expect("clap enforces claim or --list");
    let ids: Vec<&str> = if claim == "all" {
        claim_ids().collect()
    } else {
        vec![claim]
    };
    let opts = ClaimOptions { solver: ctx.opts };
    let mut reports = Vec::new();
    for id in ids {
        let r = run_claim(id, &opts)?;
        if !ctx.json {
            println!("{}", r.line());
            for n in &r.notes {
                println!("  note: {n}");
            }
            for f in r.failures.iter().take(10) {
                println!("  failure: {f}");
            }
        }
        reports.push(r);
    }
    let all = reports.iter().all(|r| r.passed);
    if ctx.json {
        ctx.emit("reproduce", json!({"passed": all, "claims": reports}), String::new);
    }
    Ok(if all { 0 } else { 1 })
}
