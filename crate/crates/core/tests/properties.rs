use std::ops::ControlFlow;

use dagenum::cc::{CallCounter, CcEnumerator};
use dagenum::connected::{self, enumerate_connected};
use dagenum::convex::{enumerate_convex, PeelState};
use dagenum::generators::{
    gen_random_connected_bipartite, gen_random_connected_graph, gen_random_dag, orient_bipartite,
    predict,
};
use dagenum::oracle::{brute_cc, brute_connected, brute_convex, SetFamily, DEFAULT_CAP};
use dagenum::sink::{from_fn, CollectSink, CountSink};
use dagenum::{
    acyclic_ordering, enumerate_cc, is_connected_set, transitive_closure, ClosureDigraph, Digraph,
    VertexSet,
};
use proptest::prelude::*;

fn dag() -> impl Strategy<Value = Digraph> {
    (1usize..=12, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, p, seed)| gen_random_dag(n, p, seed).unwrap())
}

fn small_dag() -> impl Strategy<Value = Digraph> {
    (1usize..=8, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, p, seed)| gen_random_dag(n, p, seed).unwrap())
}

fn collect_cc(d: &Digraph, limit: Option<u64>) -> Vec<VertexSet> {
    let mut sink = CollectSink::default();
    enumerate_cc(d, &mut sink, limit).unwrap();
    sink.sets
}

fn collect_convex(d: &Digraph, limit: Option<u64>) -> Vec<VertexSet> {
    let mut sink = CollectSink::default();
    enumerate_convex(d, &mut sink, false, limit).unwrap();
    sink.sets
}

/// Does `s` admit a directed path of >= 3 vertices with both ends in `s`
/// and every interior vertex outside? Enumerates simple paths outright.
fn has_s_path(d: &Digraph, s: &VertexSet) -> bool {
    fn walk(d: &Digraph, s: &VertexSet, u: usize, len: usize) -> bool {
        d.out_neighbors(u).iter().any(|&w| {
            if s.contains(w) {
                len >= 2
            } else {
                walk(d, s, w, len + 1)
            }
        })
    }
    s.iter().any(|a| walk(d, s, a, 1))
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (1u32..(1 << n))
        .map(move |mask| VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ordering_respects_every_arc(d in dag()) {
        let ord = acyclic_ordering(&d).unwrap();
        for (u, v) in d.arcs() {
            prop_assert!(ord.rank()[u] < ord.rank()[v]);
        }
        for (i, &v) in ord.order().iter().enumerate() {
            prop_assert_eq!(ord.rank()[v], i);
        }
    }

    #[test]
    fn closure_matches_bfs_and_is_idempotent(d in dag()) {
        let c = ClosureDigraph::new(&d).unwrap();
        for u in 0..d.order() {
            let mut seen = VertexSet::new(d.order());
            let mut stack = vec![u];
            while let Some(x) = stack.pop() {
                for &w in d.out_neighbors(x) {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            prop_assert_eq!(c.successors(u), &seen);
            for v in c.successors(u) {
                prop_assert!(c.predecessors(v).contains(u));
            }
            prop_assert!(!c.successors(u).contains(u));
        }
        let closed = c.to_digraph();
        let again = transitive_closure(&closed, &acyclic_ordering(&closed).unwrap());
        for u in 0..d.order() {
            prop_assert_eq!(again.successors(u), c.successors(u));
        }
    }

    #[test]
    fn closure_convexity_matches_path_search(d in small_dag()) {
        let c = ClosureDigraph::new(&d).unwrap();
        for s in subsets(d.order()) {
            prop_assert_eq!(c.is_convex(&s), !has_s_path(&d, &s), "set {:?}", s);
        }
    }

    #[test]
    fn cc_family_invariant_under_closure(d in dag()) {
        let closed = ClosureDigraph::new(&d).unwrap().to_digraph();
        prop_assert_eq!(brute_cc(&d, DEFAULT_CAP).unwrap(), brute_cc(&closed, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn cc_exactly_once(d in dag()) {
        let sets = collect_cc(&d, None);
        let fam = SetFamily::from_sets(&sets);
        prop_assert_eq!(fam.len(), sets.len(), "duplicate emission");
        prop_assert_eq!(fam, brute_cc(&d, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn cc_emissions_are_connected_and_convex(d in dag()) {
        let c = ClosureDigraph::new(&d).unwrap();
        for s in collect_cc(&d, None) {
            prop_assert!(c.is_convex(&s) && is_connected_set(&d, &s));
        }
    }

    #[test]
    fn cc_frame_invariants(d in dag()) {
        let en = CcEnumerator::new(&d).unwrap().with_invariant_checks(true);
        en.run(CountSink::default(), None);
    }

    #[test]
    fn cc_limit_is_prefix(d in dag(), frac in 0.0f64..=1.0) {
        let full = collect_cc(&d, None);
        let k = (full.len() as f64 * frac) as u64;
        prop_assert_eq!(&collect_cc(&d, Some(k))[..], &full[..k as usize]);
    }

    #[test]
    fn cc_leaves_exceed_internal_calls_by_one(d in dag()) {
        let en = CcEnumerator::new(&d).unwrap();
        for i in 0..d.order() {
            let mut calls = CallCounter::default();
            let mut count = CountSink::default();
            let _ = en.run_outer(i, &mut count, &mut calls);
            prop_assert_eq!(calls.leaves, calls.internal + 1);
            prop_assert_eq!(calls.leaves, count.count);
        }
    }

    #[test]
    fn convex_exactly_once(d in dag()) {
        let sets = collect_convex(&d, None);
        let fam = SetFamily::from_sets(&sets);
        prop_assert_eq!(fam.len(), sets.len(), "duplicate emission");
        prop_assert_eq!(fam, brute_convex(&d, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn convex_limit_is_prefix(d in dag(), frac in 0.0f64..=1.0) {
        let full = collect_convex(&d, None);
        let k = (full.len() as f64 * frac) as u64;
        prop_assert_eq!(&collect_convex(&d, Some(k))[..], &full[..k as usize]);
    }

    #[test]
    fn cc_sets_are_convex_sets(d in dag()) {
        let convex = SetFamily::from_sets(&collect_convex(&d, None));
        for s in collect_cc(&d, None) {
            prop_assert!(convex.contains(&s.to_vec()));
        }
    }

    #[test]
    fn deleting_a_source_or_sink_keeps_convexity(d in dag(), pick in any::<prop::sample::Index>()) {
        let fam = brute_convex(&d, DEFAULT_CAP).unwrap();
        let s = &fam.sets()[pick.index(fam.len())];
        let set = VertexSet::from_vertices(d.order(), s.iter().copied());
        for &v in s {
            let ins = d.in_neighbors(v).iter().any(|&u| set.contains(u));
            let outs = d.out_neighbors(v).iter().any(|&u| set.contains(u));
            if (!ins || !outs) && s.len() > 1 {
                let rest: Vec<usize> = s.iter().copied().filter(|&u| u != v).collect();
                prop_assert!(fam.contains(&rest), "{:?} minus {} not convex", s, v);
            }
        }
    }

    #[test]
    fn peel_restore_keeps_degrees_exact(d in dag(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        let mut st = PeelState::new(&d);
        let mut records = Vec::new();
        for p in picks {
            let free: Vec<usize> = st.live().iter().filter(|&v| st.is_peelable(v)).collect();
            if free.is_empty() {
                break;
            }
            records.push(st.peel(free[p.index(free.len())]).unwrap());
            prop_assert_eq!(st.cached_degrees(), st.recount_degrees());
            prop_assert!(st.live().is_empty() || ClosureDigraph::new(&d).unwrap().is_convex(st.live()));
        }
        while let Some(r) = records.pop() {
            st.restore(r);
            prop_assert_eq!(st.cached_degrees(), st.recount_degrees());
        }
        prop_assert_eq!(st.live().len(), d.order());
    }

    #[test]
    fn connected_exactly_once(n in 1usize..=12, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gen_random_connected_graph(n, p, seed).unwrap();
        let mut sink = CollectSink::default();
        enumerate_connected(&g, &mut sink, None);
        let fam = SetFamily::from_sets(&sink.sets);
        prop_assert_eq!(fam.len(), sink.sets.len());
        prop_assert_eq!(fam, brute_connected(&g, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn connected_frames_consistent_and_restored(n in 1usize..=10, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gen_random_connected_graph(n, p, seed).unwrap();
        let d = g.clone();
        for i in 0..n {
            let mut ok = true;
            let _ = connected::enumerate_from(&g, i, CountSink::default(), |f| ok &= f.is_consistent(&d));
            prop_assert!(ok);
        }
    }

    #[test]
    fn connected_limit_is_prefix(n in 1usize..=10, p in 0.0f64..=1.0, seed in any::<u64>(), frac in 0.0f64..=1.0) {
        let g = gen_random_connected_graph(n, p, seed).unwrap();
        let mut full = CollectSink::default();
        enumerate_connected(&g, &mut full, None);
        let k = (full.sets.len() as f64 * frac) as u64;
        let mut part = CollectSink::default();
        enumerate_connected(&g, &mut part, Some(k));
        prop_assert_eq!(&part.sets[..], &full.sets[..k as usize]);
    }

    #[test]
    fn bipartite_orientation_preserves_family(p in 1usize..=6, q in 1usize..=6, dens in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gen_random_connected_bipartite(p, q, dens, seed).unwrap();
        let d = orient_bipartite(&g, p).unwrap();
        let mut a = CollectSink::default();
        enumerate_connected(&g, &mut a, None);
        prop_assert_eq!(SetFamily::from_sets(&a.sets), SetFamily::from_sets(&collect_cc(&d, None)));
    }

    #[test]
    fn connected_dags_respect_count_bounds(n in 1usize..=12, p in 0.0f64..=1.0, seed in any::<u64>()) {
        // orient a random connected graph along the vertex order
        let g = gen_random_connected_graph(n, p, seed).unwrap();
        let d = Digraph::from_arcs(n, g.edges()).unwrap();
        let bounds = predict(n).unwrap();
        let count = {
            let mut c = CountSink::default();
            enumerate_cc(&d, &mut c, None).unwrap()
        };
        prop_assert!(bounds.lower <= count && count <= bounds.upper, "{} not in [{}, {}]", count, bounds.lower, bounds.upper);
    }

    #[test]
    fn generated_dags_are_acyclic(n in 0usize..=40, p in 0.0f64..=1.0, seed in any::<u64>()) {
        prop_assert!(acyclic_ordering(&gen_random_dag(n, p, seed).unwrap()).is_ok());
    }
}

#[test]
fn sink_stop_unwinds_immediately() {
    let d = dagenum::generators::gen_balanced_kpq(10).unwrap();
    let mut seen = 0;
    let emitted = enumerate_cc(
        &d,
        from_fn(|_: &VertexSet| {
            seen += 1;
            if seen == 5 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        }),
        None,
    )
    .unwrap();
    assert_eq!((seen, emitted), (5, 5));
}
