use proptest::prelude::*;

use super::*;
use crate::budget::Budget;
use crate::policy::CopPolicy;
use crate::simulator::{play, verify_capture, CaptureVerdict};
use crate::solver::{analyze, optimal_policies, GameConfig, SolverOptions};

fn rep(fs: &[&[(i64, i64)]]) -> FilamentRep {
    FilamentRep::new(fs.iter().enumerate().map(|(v, p)| Filament::from_ints(v, p)).collect())
}

/// The C4 representation: two tall peaks and a low bridge under a wide arch.
pub(super) fn c4_rep() -> FilamentRep {
    rep(&[
        &[(0, 0), (2, 20), (4, 0)],
        &[(3, 0), (5, 1), (7, 0)],
        &[(6, 0), (8, 20), (10, 0)],
        &[(-1, 0), (5, 10), (11, 0)],
    ])
}

fn clique_rep() -> FilamentRep {
    rep(&[
        &[(0, 0), (1, 5), (3, 0)],
        &[(1, 0), (2, 5), (4, 0)],
        &[(2, 0), (3, 5), (5, 0)],
    ])
}

/// Height with value 0 at the endpoints themselves.
fn height0(f: &Filament, x: &Coord) -> Coord {
    if x == f.left() || x == f.right() {
        Coord::int(0)
    } else {
        f.height_at(x).unwrap()
    }
}

/// Crossing oracle: the height difference changes sign on the common interval.
fn crosses_oracle(r: &FilamentRep, u: Vertex, v: Vertex) -> bool {
    let (fu, fv) = (r.filament(u), r.filament(v));
    let lo = fu.left().max(fv.left());
    let hi = fu.right().min(fv.right());
    if lo >= hi {
        return false;
    }
    let mut xs: Vec<Coord> = fu
        .points
        .iter()
        .chain(&fv.points)
        .map(|p| p.x.clone())
        .filter(|x| x >= lo && x <= hi)
        .collect();
    xs.sort();
    let signs: Vec<_> = xs.iter().map(|x| height0(fu, x).0 - height0(fv, x).0).collect();
    use num_traits::Signed;
    signs.iter().any(|d| d.is_positive()) && signs.iter().any(|d| d.is_negative())
}

fn nested_oracle(r: &FilamentRep, u: Vertex, v: Vertex) -> bool {
    let (fu, fv) = (r.filament(u), r.filament(v));
    if !(fv.left() < fu.left() && fu.right() < fv.right()) {
        return false;
    }
    fu.points.iter().chain(&fv.points).all(|p| {
        if &p.x < fu.left() || &p.x > fu.right() {
            return true;
        }
        height0(fu, &p.x) < height0(fv, &p.x)
    })
}

#[test]
fn validation_examples() {
    assert!(rep(&[&[(0, 0), (1, 1), (2, 0)]]).is_valid());
    let dup = rep(&[&[(0, 0), (1, 1), (2, 0)], &[(0, 0), (3, 1), (5, 0)]]);
    assert!(dup
        .validate()
        .iter()
        .any(|v| matches!(v, Violation::DuplicateEndpoint { .. })));
    // v dips onto u's peak from above, mirroring u's slopes.
    let u = Filament::from_ints(0, &[(0, 0), (2, 2), (4, 0)]);
    let v = Filament::new(
        1,
        vec![
            Point::int(1, 0),
            Point::new(Coord::ratio(3, 2), Coord::int(3)),
            Point::int(2, 2),
            Point::new(Coord::ratio(5, 2), Coord::int(3)),
            Point::int(3, 0),
        ],
    );
    let touching = FilamentRep::new(vec![u, v]);
    let bad = touching.validate();
    assert!(
        bad.iter()
            .any(|v| matches!(v, Violation::NonTransversal { at: (x, y), .. } if *x == 2.0 && *y == 2.0)),
        "{bad:?}"
    );
    assert!(matches!(touching.intersection_graph(), Err(Error::Geometry(_))));

    let shape = rep(&[
        &[(0, 1), (1, 1), (2, 0)],
        &[(3, 0), (3, 1), (4, 0)],
        &[(5, 0), (6, 0), (7, 0)],
        &[(8, 0), (9, 1)],
    ]);
    let kinds: Vec<_> = shape.validate().into_iter().map(|v| format!("{v:?}")).collect();
    assert!(kinds.iter().any(|k| k.starts_with("EndpointOffAxis")));
    assert!(kinds.iter().any(|k| k.starts_with("NotMonotone")));
    assert!(kinds.iter().any(|k| k.starts_with("NonPositive")));
    assert!(kinds.iter().any(|k| k.starts_with("TooFewPoints")));
}

#[test]
fn triple_points_are_reported() {
    // y = x, y = 2x - 2 and y = 4 - x all pass through (2, 2).
    let three = FilamentRep::new(vec![
        Filament::from_ints(0, &[(0, 0), (4, 4), (6, 0)]),
        Filament::from_ints(1, &[(1, 0), (3, 4), (7, 0)]),
        Filament::from_ints(2, &[(-1, 0), (0, 4), (3, 1), (5, 0)]),
    ]);
    let v = three.validate();
    assert!(
        v.iter()
            .any(|x| matches!(x, Violation::TriplePoint { vertices, .. } if vertices == &vec![0, 1, 2])),
        "{v:?}"
    );
}

#[test]
fn intersection_examples() {
    let disjoint = rep(&[&[(0, 0), (1, 1), (2, 0)], &[(3, 0), (4, 1), (5, 0)]]);
    assert_eq!(disjoint.intersection_graph().unwrap().edge_count(), 0);
    let overlap = rep(&[&[(0, 0), (1, 1), (2, 0)], &[(1, 0), (2, 1), (3, 0)]]);
    assert!(overlap.intersection_graph().unwrap().has_edge(0, 1));
    let nested = rep(&[&[(0, 0), (5, 10), (10, 0)], &[(4, 0), (5, 1), (6, 0)]]);
    let g = nested.intersection_graph().unwrap();
    assert_eq!(g.edge_count(), 0);
    assert!(nested.nested_in(&g, 1, 0));
    assert!(!nested.nested_in(&g, 0, 1));
    let c4 = c4_rep();
    let g = c4.intersection_graph().unwrap();
    let mut e: Vec<_> = g.edges().collect();
    e.sort();
    assert_eq!(e, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    assert!(c4.nested_in(&g, 1, 3));
}

#[test]
fn json_round_trip_is_exact() {
    let s = r#"{"filaments": [{"vertex": 1, "points": [["0.5","0"],["1.25","0.1"],["2","0"]]},
                              {"vertex": 0, "points": [[0, 0], [1, 0.3], ["3/2", 0]]}]}"#;
    let r = FilamentRep::from_json_str(s).unwrap();
    assert_eq!(r.filament(1).points[1].y, Coord::ratio(1, 10));
    assert_eq!(r.filament(0).points[1].y, Coord::ratio(3, 10));
    assert_eq!(FilamentRep::from_json_str(&r.to_json_string()).unwrap(), r);
}

#[test]
fn top_sequence_examples() {
    let one = rep(&[&[(0, 0), (1, 1), (2, 0)]]);
    assert_eq!(top_sequence(&one, &[0]).unwrap().len(), 1);
    let two = rep(&[&[(3, 0), (4, 1), (5, 0)], &[(0, 0), (1, 1), (2, 0)]]);
    let seq = top_sequence(&two, &[0, 1]).unwrap();
    assert_eq!(seq.iter().map(|e| e.vertex).collect::<Vec<_>>(), vec![1, 0]);
    // tall, taller, tall: the middle one interrupts the first.
    let three = rep(&[
        &[(0, 0), (2, 10), (9, 0)],
        &[(1, 0), (5, 20), (8, 0)],
        &[(6, 0), (8, 12), (10, 0)],
    ]);
    let seq = top_sequence(&three, &[0, 1, 2]).unwrap();
    assert_eq!(seq.iter().map(|e| e.vertex).collect::<Vec<_>>(), vec![0, 1, 2]);
    assert_dense(&three, &[0, 1, 2]);
    assert_dense(&c4_rep(), &[0, 1, 2, 3]);
}

fn assert_dense(r: &FilamentRep, set: &[Vertex]) {
    let seq = top_sequence(r, set).unwrap();
    let lo = seq[0].from.to_f64();
    let hi = seq.last().unwrap().to.to_f64();
    let eval = |f: &Filament, x: f64| -> Option<f64> {
        let p: Vec<(f64, f64)> = f.points.iter().map(|p| p.to_f64()).collect();
        if x <= p[0].0 || x >= p[p.len() - 1].0 {
            return None;
        }
        let i = p.iter().position(|q| q.0 > x).unwrap();
        let (a, b) = (p[i - 1], p[i]);
        Some(a.1 + (x - a.0) / (b.0 - a.0) * (b.1 - a.1))
    };
    for s in 0..10_000 {
        let x = lo + (hi - lo) * (s as f64 + 0.5) / 10_000.0;
        let Some(e) = seq.iter().find(|e| e.from.to_f64() < x && x < e.to.to_f64()) else {
            continue;
        };
        let heights: Vec<(f64, Vertex)> = set
            .iter()
            .filter_map(|&v| eval(r.filament(v), x).map(|h| (h, v)))
            .collect();
        let best = heights.iter().cloned().fold(f64::MIN, |m, (h, _)| m.max(h));
        let mine = eval(r.filament(e.vertex), x).unwrap();
        assert!(mine >= best - 1e-7, "x={x}: entry {} at {mine}, max {best}", e.vertex);
    }
}

/// Geometric region oracle: locate an interior point of `u` against the
/// area under `t` and the upward ray at `x_star`.
fn region_oracle(r: &FilamentRep, t: Vertex, x_star: &Coord, u: Vertex) -> Region {
    let p = &r.filament(u).points[1];
    let ft = r.filament(t);
    if let Some(h) = ft.height_at(&p.x) {
        if p.y < h {
            return Region::Bottom;
        }
    }
    if &p.x < x_star {
        Region::Left
    } else {
        Region::Right
    }
}

#[test]
fn two_cops_on_c4_and_clique() {
    let b = Budget::default();
    let c4 = c4_rep();
    let p = two_cop_policy(&c4).unwrap();
    let v = verify_capture(p.graph(), GameConfig::standard(2), &p, 40, &b).unwrap();
    assert!(v.is_valid(), "{v:?}");
    let a = analyze(p.graph(), GameConfig::standard(2), &SolverOptions::default()).unwrap();
    let t = play(p.graph(), GameConfig::standard(2), &p, &optimal_policies(&a).1, 40).unwrap();
    assert!(t.captured());

    let k3 = clique_rep();
    let p = two_cop_policy(&k3).unwrap();
    assert_eq!(p.graph().edge_count(), 3);
    match verify_capture(p.graph(), GameConfig::standard(2), &p, 3, &b).unwrap() {
        CaptureVerdict::Captures { worst_turns, .. } => assert!(worst_turns <= 3),
        v => panic!("{v:?}"),
    }
    assert_eq!(p.place().unwrap().0, vec![0, 0]);
}

#[test]
fn random_reps_are_deterministic_and_valid() {
    let a = random_rep(7, 3, 11).unwrap();
    assert_eq!(a, random_rep(7, 3, 11).unwrap());
    assert!(a.is_valid());
    assert!(a.intersection_graph().unwrap().is_connected());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn geometry_agrees_with_oracles(n in 2usize..8, bends in 1usize..4, seed in 0u64..100_000) {
        let r = random_rep(n, bends, seed).unwrap();
        let g = r.intersection_graph().unwrap();
        let below = r.nesting(&g);
        for u in 0..n {
            for v in 0..n {
                if u == v { continue; }
                prop_assert_eq!(g.has_edge(u, v), crosses_oracle(&r, u, v));
                prop_assert_eq!(r.nested_in(&g, u, v), nested_oracle(&r, u, v));
                for w in 0..n {
                    if below[v].contains(u) && below[w].contains(v) {
                        prop_assert!(below[w].contains(u));
                    }
                }
            }
        }
        let all: Vec<Vertex> = (0..n).collect();
        assert_dense(&r, &all);
        for e in top_sequence(&r, &all).unwrap() {
            let xs = e.x_star();
            for u in (0..n).filter(|&u| u != e.vertex && !g.has_edge(u, e.vertex)) {
                prop_assert_eq!(classify_region(&r, &g, e.vertex, &xs, u).unwrap(), region_oracle(&r, e.vertex, &xs, u));
            }
        }
    }

    #[test]
    fn two_cops_capture_small_random_reps(n in 2usize..8, seed in 0u64..100_000) {
        let r = random_rep(n, 3, seed).unwrap();
        let p = two_cop_policy(&r).unwrap();
        let v = verify_capture(p.graph(), GameConfig::standard(2), &p, 10 * n + 10, &Budget::default()).unwrap();
        prop_assert!(v.is_valid(), "{:?}", v);
    }
}
