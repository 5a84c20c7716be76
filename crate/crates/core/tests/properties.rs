mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ooc::clique::{maximal_cliques, maximum_cliques, Adjacency};
use ooc::correlation::{auto_constraint, cross_constraint, grid_overlap, intersection_count};
use ooc::{
    auto_profile, build_graph, cross_profile, enumerate_1d, filter_by_auto, johnson_bound,
    lift_and_expand, maximum_sets, run_pipeline, verify_set, Budget, Candidate, Cell, CodeParams,
    MatrixCode, OneDimCode, PipelineConfig, Thresholds,
};

use common::*;

fn code_strategy(max_dim: u32) -> impl Strategy<Value = MatrixCode> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(rows, columns)| {
        let total = (rows * columns) as usize;
        proptest::sample::subsequence((0..total as u32).collect::<Vec<_>>(), 1..=total).prop_map(
            move |qs| {
                let cells: Vec<Cell> = qs.iter().map(|&q| Cell::new(q % rows, q / rows)).collect();
                MatrixCode::from_cells(rows, columns, cells).unwrap()
            },
        )
    })
}

fn code_pair_strategy(max_dim: u32) -> impl Strategy<Value = (MatrixCode, MatrixCode)> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(rows, columns)| {
        let total = (rows * columns) as usize;
        let pick = move || {
            proptest::sample::subsequence((0..total as u32).collect::<Vec<_>>(), 1..=total).prop_map(
                move |qs| {
                    let cells: Vec<Cell> = qs.iter().map(|&q| Cell::new(q % rows, q / rows)).collect();
                    MatrixCode::from_cells(rows, columns, cells).unwrap()
                },
            )
        };
        (pick(), pick())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dopr_round_trip_and_gap_sum(x in code_strategy(8)) {
        let dopr = x.dopr();
        prop_assert_eq!(dopr.iter().map(|e| e.gap).sum::<u32>(), x.columns());
        let back = MatrixCode::from_dopr(x.rows(), x.columns(), &dopr).unwrap();
        prop_assert_eq!(back.canonical_form(), x.canonical_form());
    }

    #[test]
    fn flatten_matches_grid_column_major(x in code_strategy(8)) {
        let flat = x.flatten();
        let grid = x.grid();
        let bits = flat.bits();
        for (q, &b) in bits.iter().enumerate() {
            let q = q as u32;
            prop_assert_eq!(b, grid[(q % x.rows()) as usize][(q / x.rows()) as usize]);
        }
        let lifted = MatrixCode::lift(&flat, x.rows()).unwrap();
        prop_assert_eq!(lifted.wpr(), x.wpr());
    }

    #[test]
    fn shifts_compose(x in code_strategy(8), p in 0u32..8) {
        let n = x.columns();
        let p = p % n;
        let back = x.column_shift(p).column_shift((n - p) % n);
        prop_assert_eq!(back.wpr(), x.wpr());
        let mut r = x.clone();
        for _ in 0..x.rows() {
            r = r.row_shift(1);
        }
        prop_assert_eq!(r.wpr(), x.wpr());
    }

    #[test]
    fn canonical_form_matches_shift_equivalence((x, y) in code_pair_strategy(5), p in 0u32..5) {
        let shifted = x.column_shift(p);
        prop_assert_eq!(shifted.canonical_form(), x.canonical_form());
        prop_assert_eq!(x.canonical_form().cells()[0].column, 0);
        let same = x.weight() == y.weight() && equal_up_to_shift(&x.grid(), &y.grid());
        prop_assert_eq!(x == y, same);
    }

    #[test]
    fn correlation_matches_grid_oracle((x, y) in code_pair_strategy(8)) {
        let gx = x.grid();
        let gy = y.grid();
        let n = x.columns() as usize;
        for tau in 0..n {
            let shifted = y.column_shift(tau as u32);
            prop_assert_eq!(intersection_count(&x, &shifted).unwrap(), shifted_overlap(&gx, &gy, tau));
            // the library's double sum moves y left instead of right
            prop_assert_eq!(grid_overlap(&x, &y, ((n - tau) % n) as u32).unwrap(), shifted_overlap(&gx, &gy, tau));
        }
        let auto = auto_profile(&x);
        for (i, &v) in auto.values().iter().enumerate() {
            prop_assert_eq!(v, shifted_overlap(&gx, &gx, i + 1));
        }
        if x != y {
            let cross = cross_profile(&x, &y).unwrap();
            for (tau, &v) in cross.values().iter().enumerate() {
                prop_assert_eq!(v, shifted_overlap(&gx, &gy, tau));
            }
        }
    }

    #[test]
    fn correlation_symmetry_and_shift_invariance((x, y) in code_pair_strategy(6), p in 0u32..6, q in 0u32..6) {
        let a = auto_constraint(&x);
        prop_assert_eq!(auto_constraint(&x.column_shift(p)), a);
        prop_assert!(a <= x.weight());
        prop_assert_eq!(a == x.weight() && x.columns() > 1, x.is_column_periodic());
        if x != y {
            let c = cross_constraint(&x, &y).unwrap();
            prop_assert_eq!(cross_constraint(&y, &x).unwrap(), c);
            prop_assert_eq!(cross_constraint(&x.column_shift(p), &y.column_shift(q)).unwrap(), c);
            prop_assert!(c <= x.weight().min(y.weight()));
        }
    }

    #[test]
    fn canonical_1d_rotation_is_stable(dop in proptest::collection::vec(1u32..6, 1..6), k in 0usize..6) {
        let w = dop.len();
        let rotated: Vec<u32> = (0..w).map(|i| dop[(i + k) % w]).collect();
        let a = OneDimCode::from_dop(&dop).unwrap();
        let b = OneDimCode::from_dop(&rotated).unwrap();
        prop_assert_eq!(a.canonical_dop(), b.canonical_dop());
    }

    #[test]
    fn filter_is_idempotent_and_monotone(low in 0u32..4, extra in 0u32..3) {
        let codes: Vec<_> = enumerate_1d(12, 4).unwrap().collect();
        let pool = lift_and_expand(&codes, 3, 4).unwrap();
        let kept = filter_by_auto(pool.clone(), low);
        let again = filter_by_auto(kept.iter().map(|c| c.code.clone()), low);
        prop_assert_eq!(&again, &kept);
        let wider: HashSet<_> = filter_by_auto(pool, low + extra)
            .into_iter()
            .map(|c| c.code.canonical_form().clone())
            .collect();
        prop_assert!(kept.iter().all(|c| wider.contains(c.code.canonical_form())));
        prop_assert!(kept.iter().all(|c| c.lambda_a <= low));
    }
}

#[test]
fn enumeration_count_matches_necklace_oracles() {
    for n in 1..=16u32 {
        for w in 1..=n {
            let count = enumerate_1d(n, w).unwrap().count() as u64;
            assert_eq!(count, necklace_count(u64::from(n), u64::from(w)), "n={n} w={w}");
            if n <= 14 {
                assert_eq!(count, brute_force_necklaces(n, w), "n={n} w={w}");
            }
        }
    }
}

#[test]
fn enumeration_outputs_are_canonical_and_distinct() {
    for (n, w) in [(12, 3), (12, 4), (15, 5), (16, 4), (10, 10)] {
        let codes: Vec<_> = enumerate_1d(n, w).unwrap().collect();
        let mut seen = HashSet::new();
        for c in &codes {
            let dop = c.dop();
            assert_eq!(dop.iter().sum::<u32>(), n);
            assert_eq!(*dop.last().unwrap(), *dop.iter().max().unwrap());
            assert_eq!(c.canonical_dop(), dop);
            assert!(seen.insert(dop));
        }
        let dops: Vec<_> = codes.iter().map(|c| c.dop()).collect();
        let mut sorted = dops.clone();
        sorted.sort();
        assert_eq!(dops, sorted);
    }
}

#[test]
fn lift_and_expand_is_distinct_and_weight_preserving() {
    for (rows, columns, w) in [(4, 3, 3), (3, 4, 3), (2, 5, 4), (4, 4, 2), (1, 6, 3), (5, 1, 2)] {
        let codes: Vec<_> = enumerate_1d(rows * columns, w).unwrap().collect();
        let pool = lift_and_expand(&codes, rows, columns).unwrap();
        assert!(pool.len() <= codes.len() * rows as usize);
        let distinct: HashSet<_> = pool.iter().map(|c| c.canonical_form().clone()).collect();
        assert_eq!(distinct.len(), pool.len());
        assert!(pool.iter().all(|c| c.weight() == w && c.rows() == rows && c.columns() == columns));
        let again = lift_and_expand(&codes, rows, columns).unwrap();
        assert_eq!(
            pool.iter().map(|c| c.wpr().to_vec()).collect::<Vec<_>>(),
            again.iter().map(|c| c.wpr().to_vec()).collect::<Vec<_>>()
        );
    }
}

#[test]
fn cliques_match_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c11c);
    for _ in 0..150 {
        let (n, edges, adj) = random_graph(&mut rng, 16);
        let g = Adjacency::from_edges(n, edges);
        let expected = brute_force_maximal_cliques(&adj);
        let found = maximal_cliques(&g, Budget::unlimited());
        assert!(found.complete);
        assert_eq!(found.cliques, expected);
        for c in &found.cliques {
            assert!(g.is_maximal_clique(c));
        }
        let best = expected.iter().map(Vec::len).max().unwrap();
        let expected_max: Vec<_> = expected.into_iter().filter(|c| c.len() == best).collect();
        assert_eq!(maximum_cliques(&g, Budget::unlimited()).cliques, expected_max);
    }
}

#[test]
fn maximum_sets_respect_johnson_bound_and_verify() {
    for (rows, columns, w) in [(4, 3, 3), (3, 3, 3), (2, 4, 3), (3, 4, 2)] {
        for lambda in 1..w {
            let params = CodeParams::new(rows, columns, w).unwrap();
            let run = run_pipeline(&PipelineConfig::new(params, Thresholds::new(lambda, lambda))).unwrap();
            let bound = johnson_bound(rows, columns, w, lambda).unwrap();
            assert_eq!(run.search.bound, Some(bound));
            assert!(run.search.complete);
            for (i, set) in run.search.sets.iter().enumerate() {
                assert!(set.size as u64 <= bound, "{rows}x{columns} w={w} lambda={lambda}");
                let report = verify_set(&run.set_codes(i), Thresholds::new(lambda, lambda)).unwrap();
                assert!(report.passed());
            }
        }
    }
}

#[test]
fn graph_is_order_independent() {
    let codes: Vec<_> = enumerate_1d(12, 3).unwrap().collect();
    let pool = lift_and_expand(&codes, 4, 3).unwrap();
    let forward: Vec<Candidate> = pool.iter().cloned().map(Candidate::new).collect();
    let backward: Vec<Candidate> = pool.iter().rev().map(|c| Candidate::new(c.column_shift(1))).collect();
    let a = build_graph(forward, 1).unwrap();
    let b = build_graph(backward, 1).unwrap();
    assert_eq!(a.adjacency(), b.adjacency());
    for id in 0..a.len() {
        assert_eq!(a.code(id), b.code(id));
    }
    let limits = Thresholds::new(3, 1);
    assert_eq!(
        maximum_sets(&a, limits, Budget::unlimited()).unwrap(),
        maximum_sets(&b, limits, Budget::unlimited()).unwrap()
    );
}
