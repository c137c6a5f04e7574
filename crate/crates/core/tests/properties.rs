//! Property tests: library answers against brute-force oracles and structural
//! invariants on generated inputs.

use std::collections::BTreeSet;

use itertools::Itertools;
use kc_ramsey::colorings::{blowup_coloring, random_coloring, sierpinski_coloring, split_color, BitstringFamily};
use kc_ramsey::formats::{parse_coloring, parse_graph, write_coloring, write_graph};
use kc_ramsey::sat::{assignment_from_literals, decode_model, emit_cnf, parse_model, CnfInstance};
use kc_ramsey::search::{arrow_check, minimal_connected_graphs, ArrowMode};
use kc_ramsey::{brute_force_kappa, is_kappa_connected, vertex_connectivity, EdgeColoring, Graph};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mask = bits.iter().enumerate().fold(0u64, |m, (i, &b)| m | (u64::from(b) << i));
            Graph::from_pair_mask(n, mask)
        })
    })
}

fn coloring_strategy(max_n: usize, max_k: usize) -> impl Strategy<Value = EdgeColoring> {
    (2..=max_n, 1..=max_k).prop_flat_map(|(n, k)| {
        proptest::collection::vec(0..k, n * (n - 1) / 2)
            .prop_map(move |colors| EdgeColoring::from_colors(n, k, colors).unwrap())
    })
}

fn is_complete(g: &Graph) -> bool {
    g.edge_count() == g.n() * (g.n() - 1) / 2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn connectivity_matches_deletion_oracle(g in graph_strategy(9)) {
        let brute = brute_force_kappa(&g).unwrap();
        if !is_complete(&g) {
            prop_assert_eq!(vertex_connectivity(&g).unwrap(), brute);
        }
        for kappa in 0..=g.n() + 1 {
            let holds = is_kappa_connected(&g, kappa).holds();
            prop_assert_eq!(holds, is_complete(&g) || brute >= kappa);
        }
    }

    #[test]
    fn kappa_connectivity_is_monotone(g in graph_strategy(8)) {
        let verdicts: Vec<bool> = (0..=g.n() + 1).map(|k| is_kappa_connected(&g, k).holds()).collect();
        prop_assert!(verdicts.windows(2).all(|w| w[0] || !w[1]));
    }

    #[test]
    fn incomplete_connectivity_is_bounded_by_min_degree(g in graph_strategy(8)) {
        prop_assume!(!is_complete(&g));
        prop_assert!(vertex_connectivity(&g).unwrap() <= g.min_degree().unwrap());
    }

    #[test]
    fn certificates_check_out(g in graph_strategy(8), kappa in 1usize..6) {
        match is_kappa_connected(&g, kappa).separator() {
            Some(sep) => {
                let mut deleted = vec![false; g.n()];
                sep.iter().for_each(|&v| deleted[v] = true);
                prop_assert!(sep.len() < kappa);
                prop_assert!(!g.is_connected_without(&deleted));
            }
            None => {
                let verdict = is_kappa_connected(&g, kappa);
                if let Some(w) = verdict.witness() {
                    prop_assert!(w.is_valid_in(&g));
                    prop_assert!(w.paths.len() >= kappa);
                }
            }
        }
    }

    #[test]
    fn adding_an_edge_never_lowers_connectivity(g in graph_strategy(8), pick in any::<proptest::sample::Index>()) {
        let missing: Vec<(usize, usize)> = (0..g.n()).tuple_combinations().filter(|&(u, v)| !g.has_edge(u, v)).collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = *pick.get(&missing);
        let mut h = g.clone();
        h.add_edge(u, v).unwrap();
        prop_assert!(brute_force_kappa(&h).unwrap() >= brute_force_kappa(&g).unwrap());
    }

    #[test]
    fn graph_text_round_trips(g in graph_strategy(9)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn coloring_text_round_trips(c in coloring_strategy(8, 4)) {
        prop_assert_eq!(parse_coloring(&write_coloring(&c)).unwrap(), c);
    }

    #[test]
    fn witnesses_are_sound(c in coloring_strategy(7, 3), kappa in 1usize..4, m in 2usize..5) {
        prop_assume!(m <= c.n());
        for mode in [ArrowMode::Exact, ArrowMode::AtLeast] {
            if let Some(w) = arrow_check(&c, kappa, m, mode).unwrap() {
                prop_assert!(w.verify(&c, kappa));
                let mut g = Graph::empty(w.vertices.len());
                for (i, j) in (0..w.vertices.len()).tuple_combinations() {
                    if c.get(w.vertices[i], w.vertices[j]) == w.color {
                        g.add_edge(i, j).unwrap();
                    }
                }
                prop_assert!(is_complete(&g) || brute_force_kappa(&g).unwrap() >= kappa);
                if mode == ArrowMode::Exact {
                    prop_assert_eq!(w.vertices.len(), m);
                }
            }
        }
    }

    #[test]
    fn arrow_weakens_as_kappa_drops(c in coloring_strategy(7, 3), kappa in 2usize..4, m in 2usize..5) {
        prop_assume!(m <= c.n());
        if let Some(w) = arrow_check(&c, kappa, m, ArrowMode::Exact).unwrap() {
            // the same witness serves for any smaller κ
            prop_assert!(w.verify(&c, kappa - 1));
            prop_assert!(arrow_check(&c, kappa - 1, m, ArrowMode::Exact).unwrap().is_some());
        }
    }

    #[test]
    fn blowup_keeps_cross_block_colors(
        base in coloring_strategy(5, 3),
        sizes in proptest::collection::vec(1usize..4, 5),
        inner in 0usize..3,
    ) {
        let sizes = &sizes[..base.n()];
        prop_assume!(inner < base.k());
        let c = blowup_coloring(&base, sizes, inner).unwrap();
        let block_of: Vec<usize> = sizes.iter().enumerate().flat_map(|(b, &s)| vec![b; s]).collect();
        prop_assert_eq!(c.n(), block_of.len());
        for (u, v) in (0..c.n()).tuple_combinations() {
            let (a, b) = (block_of[u], block_of[v]);
            let want = if a == b { inner } else { base.get(a, b) };
            prop_assert_eq!(c.get(u, v), want);
        }
    }

    #[test]
    fn cnf_encoding_agrees_with_arrow(seed in any::<u64>(), n in 3usize..6, kappa in 1usize..4, k in 1usize..3) {
        let inst = emit_cnf(n, 3, kappa, k).unwrap();
        let c = random_coloring(n, k, seed).unwrap();
        let assignment = inst.encode(&c).unwrap();
        let avoids = arrow_check(&c, kappa, 3, ArrowMode::Exact).unwrap().is_none();
        prop_assert_eq!(inst.satisfied_by(&assignment), avoids);
        prop_assert_eq!(decode_model(&inst, &assignment).unwrap(), c);
    }
}

#[test]
fn every_graph_up_to_six_vertices_matches_oracle() {
    for n in 1..=6usize {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = Graph::from_pair_mask(n, mask);
            let brute = brute_force_kappa(&g).unwrap();
            for kappa in 0..=n + 1 {
                assert_eq!(
                    is_kappa_connected(&g, kappa).holds(),
                    is_complete(&g) || brute >= kappa,
                    "n={n} mask={mask:#x} kappa={kappa}"
                );
            }
        }
    }
}

#[test]
fn sierpinski_two_smallest_deltas_agree() {
    // λ = 4 gives the full family on 16 strings
    for f in [BitstringFamily::full(4), BitstringFamily::full_shuffled(4, 7)] {
        let c = sierpinski_coloring(&f).unwrap();
        for (a, b, g) in (0..f.len()).tuple_combinations() {
            let mut d = [c.get(a, b), c.get(a, g), c.get(b, g)].map(|x| split_color(x).0);
            d.sort_unstable();
            assert_eq!(d[0], d[1], "triple {a} {b} {g}");
        }
        for (a, b, g) in (0..f.len()).tuple_combinations() {
            let col = c.get(a, b);
            assert!(!(c.get(a, g) == col && c.get(b, g) == col), "triangle {a} {b} {g}");
        }
    }
}

#[test]
fn forbidden_lists_characterize_spanning_connectivity() {
    for m in 2..=6usize {
        for kappa in 1..=m {
            let list = minimal_connected_graphs(m, kappa).unwrap();
            let pairs = m * (m - 1) / 2;
            for mask in 0..1u32 << pairs {
                let g = Graph::from_pair_mask(m, u64::from(mask));
                let connected = is_complete(&g) || brute_force_kappa(&g).unwrap() >= kappa;
                assert_eq!(
                    list.contains_spanning(mask),
                    connected,
                    "m={m} kappa={kappa} mask={mask:#x}"
                );
            }
            // minimality: dropping any edge of a member loses the property
            for &h in list.masks() {
                for bit in 0..pairs {
                    if h >> bit & 1 == 1 {
                        let g = Graph::from_pair_mask(m, u64::from(h & !(1 << bit)));
                        assert!(!is_kappa_connected(&g, kappa).holds());
                    }
                }
            }
        }
    }
}

#[test]
fn dimacs_and_model_round_trip() {
    let inst = emit_cnf(5, 3, 3, 2).unwrap();
    let text = inst.to_dimacs();
    assert_eq!(CnfInstance::from_dimacs(&text).unwrap(), inst);
    assert_eq!(emit_cnf(5, 3, 3, 2).unwrap().to_dimacs(), text);

    let ring = Graph::cycle(5);
    let c = EdgeColoring::from_fn(5, 2, |u, v| usize::from(!ring.has_edge(u, v))).unwrap();
    let assignment = inst.encode(&c).unwrap();
    let model: String = assignment
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            if b {
                format!("{} ", i + 1)
            } else {
                format!("-{} ", i + 1)
            }
        })
        .collect();
    let lits = parse_model(&format!("s SATISFIABLE\nv {model}0\n")).unwrap();
    let back = assignment_from_literals(inst.num_vars, &lits).unwrap();
    assert_eq!(decode_model(&inst, &back).unwrap(), c);
}

#[test]
fn pair_family_sets_are_independent_of_order() {
    // the miner's input type keeps each u(α, β) as given
    let f = kc_ramsey::colorings::PairFamily::from_fn(4, |a, b| BTreeSet::from([(a * 10 + b) as u64]));
    for (a, b) in (0..4).tuple_combinations() {
        assert_eq!(f.get(a, b), &BTreeSet::from([(a * 10 + b) as u64]));
    }
}
