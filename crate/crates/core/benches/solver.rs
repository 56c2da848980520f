//! Sequential vs parallel: one large retrograde solve, and a corpus sweep.
//! Without the `parallel` feature both variants run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pursuit_core::claims::{run_claim, ClaimOptions};
use pursuit_core::generators::{petersen, projective_incidence, toroidal_grid};
use pursuit_core::solver::{analyze, GameConfig, SolverOptions};
use pursuit_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    group.sample_size(10);
    let cases = [
        ("petersen-k3", petersen(), 3),
        ("torus-4x6-k3", toroidal_grid(4, 6).unwrap(), 3),
        ("heawood-k3", projective_incidence(2).unwrap(), 3),
    ];
    for (name, g, k) in &cases {
        for (mode, exec) in MODES {
            let opts = SolverOptions {
                exec,
                ..Default::default()
            };
            group.bench_with_input(BenchmarkId::new(mode, name), g, |b, g| {
                b.iter(|| analyze(g, GameConfig::standard(*k), &opts).unwrap().cops_win())
            });
        }
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("claim-sweep");
    group.sample_size(10);
    for (mode, exec) in MODES {
        let opts = ClaimOptions {
            solver: SolverOptions {
                exec,
                ..Default::default()
            },
        };
        group.bench_function(BenchmarkId::new(mode, "copwin-equivalence"), |b| {
            b.iter(|| assert!(run_claim("copwin-equivalence", &opts).unwrap().passed))
        });
    }
    group.finish();
}

criterion_group!(benches, solve, sweep);
criterion_main!(benches);
