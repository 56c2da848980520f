//! Named reproduction recipes. Each checks one claim end to end and reports
//! pass/fail with counts; the CLI `reproduce` command and the acceptance
//! tests both run these.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::copwin::{dismantling_order, five_necessary_gadget, guard_path_neighborhood, guard_path_neighborhood_four};
use crate::error::{Error, Result};
use crate::filament::{random_rep, two_cop_policy};
use crate::generators::{
    complete, connected_graphs, connected_graphs_up_to, cycle, path, petersen, projective_incidence, random_connected,
    toroidal_grid,
};
use crate::graph::{Graph, VertexSet};
use crate::par::Exec;
use crate::reductions::{
    check_line_graph_inequality, check_speed_inclusion, check_subdivision_inequality, girth_mindeg_lower_bound,
    subdivision_policy, InequalityReport,
};
use crate::simulator::{play, verify_capture, verify_guarding, GuardVerdict, Outcome};
use crate::solver::{analyze, cop_number, optimal_policies, CopNumber, GameConfig, OptimalCops, SolverOptions};

/// `(id, one-line description)`, in criterion order.
pub const CLAIMS: [(&str, &str); 10] = [
    ("cycle-baseline", "cycles C4..C8 have cop number 2; one cop never wins"),
    ("toroidal-grid", "the 3x5 toroidal grid has cop number 3"),
    (
        "projective-plane",
        "the Heawood graph: girth/degree bound 3 and cop number 3",
    ),
    (
        "copwin-equivalence",
        "dismantlable <=> cop number 1 on all connected graphs up to 7 vertices",
    ),
    (
        "npath-guard",
        "five cops guard N[P] on random graphs; four fail on the gadget",
    ),
    (
        "filament-two-cops",
        "two cops capture on random interval filament graphs within 10n+10 turns",
    ),
    (
        "subdivision",
        "cn(G) <= cn(G^(d)) <= cn(G)+1 and the tracker strategy captures",
    ),
    ("line-graph", "ceil(cn(G)/2) <= cn(L(G)) <= cn(G)+1"),
    ("dd-game", "cn of the (d,d)-game never exceeds cn"),
    (
        "self-consistency",
        "optimal-vs-optimal play length equals the analysis value",
    ),
];

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub description: String,
    pub passed: bool,
    /// Instances examined.
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

impl ClaimReport {
    /// `PASS id: description (n checked, t ms)`.
    pub fn line(&self) -> String {
        format!(
            "{} {}: {} ({} checked, {} failures, {} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.description,
            self.checked,
            self.failures.len(),
            self.elapsed_ms
        )
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ClaimOptions {
    pub solver: SolverOptions,
}

impl ClaimOptions {
    fn exec(&self) -> Exec {
        self.solver.exec
    }

    fn budget(&self) -> &Budget {
        &self.solver.budget
    }

    /// Per-instance solves run inside an outer parallel sweep.
    fn inner(&self) -> SolverOptions {
        SolverOptions {
            exec: Exec::Sequential,
            ..self.solver
        }
    }
}

struct Tally {
    checked: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, results: Vec<std::result::Result<(), String>>) {
        for r in results {
            self.check(r.is_ok(), || r.unwrap_err());
        }
    }
}

pub fn claim_ids() -> impl Iterator<Item = &'static str> {
    CLAIMS.iter().map(|c| c.0)
}

/// Runs one recipe. Unknown ids are a domain error; resource errors inside
/// a sweep count as failures rather than aborting it.
pub fn run_claim(id: &str, opts: &ClaimOptions) -> Result<ClaimReport> {
    let Some(&(id, description)) = CLAIMS.iter().find(|c| c.0 == id) else {
        return Err(Error::domain(format!(
            "unknown claim '{id}'; expected one of {}",
            claim_ids().collect::<Vec<_>>().join(", ")
        )));
    };
    let start = Instant::now();
    let mut t = Tally::new();
    match id {
        "cycle-baseline" => cycle_baseline(&mut t, opts)?,
        "toroidal-grid" => toroidal(&mut t, opts)?,
        "projective-plane" => projective(&mut t, opts)?,
        "copwin-equivalence" => copwin_equivalence(&mut t, opts),
        "npath-guard" => npath_guard(&mut t, opts)?,
        "filament-two-cops" => filament_two_cops(&mut t, opts),
        "subdivision" => subdivision(&mut t, opts)?,
        "line-graph" => line_graphs(&mut t, opts),
        "dd-game" => dd_game(&mut t, opts),
        "self-consistency" => self_consistency(&mut t, opts),
        _ => unreachable!(),
    }
    log::info!("claim {id}: {} checked, {} failures", t.checked, t.failures.len());
    Ok(ClaimReport {
        id: id.to_string(),
        description: description.to_string(),
        passed: t.failures.is_empty() && t.checked > 0,
        checked: t.checked,
        failures: t.failures,
        notes: t.notes,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn cycle_baseline(t: &mut Tally, opts: &ClaimOptions) -> Result<()> {
    for n in 4..=8 {
        let c = cycle(n)?;
        let three = cop_number(&c, 3, 1, 1, &opts.solver)?;
        t.check(three == CopNumber::Exactly(2), || format!("C{n}: cop number {three}"));
        let one = cop_number(&c, 1, 1, 1, &opts.solver)?;
        t.check(one == CopNumber::Exceeds(1), || format!("C{n}: one cop reported {one}"));
    }
    Ok(())
}

fn toroidal(t: &mut Tally, opts: &ClaimOptions) -> Result<()> {
    let g = toroidal_grid(3, 5)?;
    let cn = cop_number(&g, 4, 1, 1, &opts.solver)?;
    t.check(cn == CopNumber::Exactly(3), || format!("toroidal 3x5: {cn}"));
    Ok(())
}

fn projective(t: &mut Tally, opts: &ClaimOptions) -> Result<()> {
    let g = projective_incidence(2)?;
    let b = girth_mindeg_lower_bound(&g);
    t.check(b == 3, || format!("Heawood bound {b}"));
    let cn = cop_number(&g, 4, 1, 1, &opts.solver)?;
    t.check(cn == CopNumber::Exactly(3), || format!("Heawood cop number {cn}"));
    Ok(())
}

fn copwin_equivalence(t: &mut Tally, opts: &ClaimOptions) {
    let graphs = connected_graphs_up_to(7);
    let inner = opts.inner();
    let results = opts.exec().map(&graphs, |g| {
        let dismantlable = dismantling_order(g).is_some();
        match cop_number(g, 1, 1, 1, &inner) {
            Ok(cn) if (cn == CopNumber::Exactly(1)) == dismantlable => Ok(()),
            Ok(cn) => Err(format!(
                "{:?}: dismantlable={dismantlable}, cop number {cn}",
                g.edges().collect::<Vec<_>>()
            )),
            Err(e) => Err(format!("{} vertices: {e}", g.n())),
        }
    });
    t.absorb(results);
    t.notes.push(format!(
        "{} connected graphs on 1..=7 vertices, one per isomorphism class",
        graphs.len()
    ));
}

/// Random connected graph plus a BFS geodesic between two random vertices.
fn guard_instance(seed: u64) -> Result<(Graph, Vec<usize>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=9);
    let p = rng.gen_range(0.2..0.7);
    let g = random_connected(n, p, seed)?;
    let dm = g.all_pairs_distances();
    // Farthest vertex from a random start, so paths are as long as possible.
    let a = rng.gen_range(0..n);
    let b = (0..n)
        .max_by_key(|&v| (dm.get(a, v), std::cmp::Reverse(v)))
        .expect("nonempty");
    let path = dm.shortest_path(&g, a, b).expect("connected");
    Ok((g, path))
}

fn npath_guard(t: &mut Tally, opts: &ClaimOptions) -> Result<()> {
    let seeds: Vec<u64> = (0..200).collect();
    let budget = *opts.budget();
    let results = opts.exec().map(&seeds, |&seed| {
        let (g, p) = guard_instance(seed).map_err(|e| format!("seed {seed}: {e}"))?;
        let d = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|v| !p.contains(v)));
        let a = guard_path_neighborhood(&g, &p, &d).map_err(|e| format!("seed {seed}: {e}"))?;
        match verify_guarding(&g, &a, &d, &budget) {
            Ok(v) if v.is_valid() => Ok(()),
            Ok(v) => Err(format!("seed {seed}, path {p:?}: {v:?}")),
            Err(e) => Err(format!("seed {seed}: {e}")),
        }
    });
    t.absorb(results);
    let lens: usize = seeds
        .iter()
        .map(|&s| guard_instance(s).map_or(0, |(_, p)| p.len()))
        .sum();
    t.notes.push(format!(
        "mean path length {:.2} vertices",
        lens as f64 / seeds.len() as f64
    ));

    let (g, p, d) = five_necessary_gadget();
    let five = verify_guarding(&g, &guard_path_neighborhood(&g, &p, &d)?, &d, &budget)?;
    t.check(five.is_valid(), || format!("gadget, five cops: {five:?}"));
    match verify_guarding(&g, &guard_path_neighborhood_four(&g, &p, &d)?, &d, &budget)? {
        GuardVerdict::Violated {
            robber_path, reason, ..
        } => {
            t.checked += 1;
            t.notes.push(format!(
                "gadget, four cops fail as expected: robber path {robber_path:?} ({reason})"
            ));
        }
        v => t.check(false, || format!("gadget, four cops unexpectedly hold: {v:?}")),
    }
    Ok(())
}

fn filament_two_cops(t: &mut Tally, opts: &ClaimOptions) {
    let seeds: Vec<u64> = (0..100).collect();
    let budget = *opts.budget();
    let inner = opts.inner();
    let results = opts.exec().map(&seeds, |&seed| {
        let n = 2 + (seed as usize % 9);
        let fail = |e: Error| format!("seed {seed} (n={n}): {e}");
        let rep = random_rep(n, 3, seed).map_err(fail)?;
        let policy = two_cop_policy(&rep).map_err(fail)?;
        let g = policy.graph();
        let cn = cop_number(g, 2, 1, 1, &inner).map_err(fail)?;
        if cn.exact().is_none() {
            return Err(format!("seed {seed} (n={n}): cop number {cn}"));
        }
        let bound = 10 * n + 10;
        let cfg = GameConfig::standard(2);
        if n <= 8 {
            let v = verify_capture(g, cfg, &policy, bound, &budget).map_err(fail)?;
            if !v.is_valid() {
                return Err(format!("seed {seed} (n={n}): {v:?}"));
            }
        } else {
            let a = analyze(g, cfg, &inner).map_err(fail)?;
            let (_, evader) = optimal_policies(&a);
            let tr = play(g, cfg, &policy, &evader, bound).map_err(fail)?;
            if !tr.captured() {
                return Err(format!("seed {seed} (n={n}): optimal evader survives {bound} turns"));
            }
        }
        Ok(())
    });
    t.absorb(results);
    t.notes
        .push("n <= 8 verified against all robber behaviors; n = 9, 10 against the optimal evader".into());
}

fn report_result(r: Result<InequalityReport>) -> std::result::Result<(), String> {
    match r {
        Ok(rep) if rep.holds => Ok(()),
        Ok(rep) => Err(format!(
            "{}: {} <= {}{} <= {} fails",
            rep.instance,
            rep.lhs,
            if rep.mid_is_lower_bound { ">=" } else { "" },
            rep.mid,
            rep.rhs
        )),
        Err(e) => Err(e.to_string()),
    }
}

fn subdivision(t: &mut Tally, opts: &ClaimOptions) -> Result<()> {
    let graphs: Vec<(Graph, usize)> = connected_graphs_up_to(6)
        .into_iter()
        .flat_map(|g| [(g.clone(), 2), (g, 3)])
        .collect();
    let inner = opts.inner();
    let results = opts.exec().map(&graphs, |(g, d)| {
        report_result(check_subdivision_inequality(g, *d, &inner))
            .map_err(|e| format!("{e} on {:?}", g.edges().collect::<Vec<_>>()))
    });
    t.absorb(results);

    let named = [
        ("P4", path(4)?),
        ("C4", cycle(4)?),
        ("C5", cycle(5)?),
        ("K3", complete(3)?),
        ("K4", complete(4)?),
    ];
    for (name, g) in &named {
        let k = cop_number(g, g.n(), 1, 1, &opts.solver)?
            .exact()
            .ok_or_else(|| Error::contract("connected graph without cop number"))?;
        let a = analyze(g, GameConfig::standard(k), &opts.solver)?;
        for d in [2, 3] {
            let p = subdivision_policy(g, d, OptimalCops::new(&a))?;
            let n = p.graph().n();
            let v = verify_capture(p.graph(), GameConfig::standard(k + 1), &p, 4 * n * n, opts.budget())?;
            match &v {
                crate::simulator::CaptureVerdict::Captures { worst_turns, .. } => {
                    t.checked += 1;
                    t.notes.push(format!(
                        "{name}^({d}): {} cops capture within {worst_turns} turns",
                        k + 1
                    ));
                }
                _ => t.check(false, || format!("{name}^({d}) tracker strategy: {v:?}")),
            }
        }
    }
    Ok(())
}

fn line_graphs(t: &mut Tally, opts: &ClaimOptions) {
    let graphs: Vec<Graph> = connected_graphs_up_to(7)
        .into_iter()
        .filter(|g| g.edge_count() >= 1 && g.edge_count() <= 12)
        .collect();
    let inner = opts.inner();
    let results = opts
        .exec()
        .map(&graphs, |g| report_result(check_line_graph_inequality(g, &inner)));
    t.absorb(results);
}

fn dd_game(t: &mut Tally, opts: &ClaimOptions) {
    let graphs: Vec<(Graph, usize)> = connected_graphs_up_to(6)
        .into_iter()
        .flat_map(|g| [(g.clone(), 2), (g, 3)])
        .collect();
    let inner = opts.inner();
    let results = opts
        .exec()
        .map(&graphs, |(g, d)| report_result(check_speed_inclusion(g, *d, &inner)));
    t.absorb(results);
}

fn self_consistency(t: &mut Tally, opts: &ClaimOptions) {
    let mut graphs = connected_graphs_up_to(5);
    graphs.extend(connected_graphs(6));
    graphs.push(petersen());
    graphs.extend(
        [toroidal_grid(3, 4), projective_incidence(2), cycle(9)]
            .into_iter()
            .flatten(),
    );
    let inner = opts.inner();
    let results = opts.exec().map(&graphs, |g| {
        let k = match cop_number(g, 3, 1, 1, &inner) {
            Ok(CopNumber::Exactly(k)) => k,
            Ok(cn) => return Err(format!("{} vertices: {cn}", g.n())),
            Err(e) => return Err(e.to_string()),
        };
        let cfg = GameConfig::standard(k);
        let a = analyze(g, cfg, &inner).map_err(|e| e.to_string())?;
        let value = a.witness().map(|w| w.1 as usize).ok_or("no witness")?;
        let (c, r) = optimal_policies(&a);
        let tr = play(g, cfg, &c, &r, value + 2).map_err(|e| e.to_string())?;
        if tr.outcome != (Outcome::Captured { turn: value }) {
            return Err(format!("{} vertices: value {value}, play {:?}", g.n(), tr.outcome));
        }
        crate::simulator::replay(&tr).map_err(|e| e.to_string())
    });
    t.absorb(results);
    t.notes.push(
        "stands in for bounds that cannot be checked at desk scale: the 15-cop string bound, \
         the 10g+15 genus bounds, and maximum cop numbers over infinite classes"
            .into(),
    );
}
