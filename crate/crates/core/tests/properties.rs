use proptest::prelude::*;

use ngbounds_core::bounds::{Catalog, CheckOptions};
use ngbounds_core::graph::{pair_index, Graph};
use ngbounds_core::graph6::{parse_graph6, to_graph6};
use ngbounds_core::inertia::{exact_inertia, Inertia};
use ngbounds_core::invariants::{collect_invariants, InvariantOptions};
use ngbounds_core::spectral::{spectral_sums, spectrum};
use ngbounds_core::stream::enumerate_labeled;

fn graph_on(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_on(n, &bits))
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Characteristic polynomial coefficients `c[0..=n]` (`c[n] = 1`) by
/// Faddeev-LeVerrier in exact integer arithmetic.
fn char_poly(g: &Graph) -> Vec<i128> {
    let n = g.order();
    let a: Vec<i128> = (0..n * n).map(|k| g.has_edge(k / n, k % n) as i128).collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![0i128; n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![0i128; n * n];
        for i in 0..n {
            for j in 0..n {
                next[i * n + j] = (0..n).map(|l| a[i * n + l] * m[l * n + j]).sum();
            }
            next[i * n + i] += c[n - k + 1];
        }
        m = next;
        let trace: i128 = (0..n).map(|i| (0..n).map(|l| a[i * n + l] * m[l * n + i]).sum::<i128>()).sum();
        assert_eq!(trace % k as i128, 0);
        c[n - k] = -trace / k as i128;
    }
    c
}

fn sign_changes(coeffs: impl Iterator<Item = i128>) -> usize {
    let signs: Vec<bool> = coeffs.filter(|&x| x != 0).map(|x| x > 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia from the characteristic polynomial. All roots are real, so
/// Descartes' rule of signs counts them exactly.
fn descartes_inertia(g: &Graph) -> Inertia {
    let c = char_poly(g);
    let zero = c.iter().position(|&x| x != 0).unwrap();
    let positive = sign_changes(c.iter().copied());
    let negative = sign_changes(c.iter().enumerate().map(|(i, &x)| if i % 2 == 1 { -x } else { x }));
    Inertia::new(positive, negative, zero)
}

#[test]
fn char_poly_of_known_graphs() {
    // x^2 - 1 for K2, x^3 - 3x - 2 for K3, x^4 - 4x^2 for C4
    assert_eq!(char_poly(&Graph::complete(2).unwrap()), vec![-1, 0, 1]);
    assert_eq!(char_poly(&Graph::complete(3).unwrap()), vec![-2, -3, 0, 1]);
    assert_eq!(char_poly(&parse_graph6("Cl").unwrap()), vec![0, 0, -4, 0, 1]);
}

#[test]
fn exact_inertia_matches_descartes_on_all_6_vertex_graphs() {
    for g in enumerate_labeled(6).unwrap().iter() {
        assert_eq!(exact_inertia(&g), descartes_inertia(&g), "{}", to_graph6(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn graph6_round_trip(g in arb_graph(64)) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(40)) {
        let n = g.order();
        let gbar = g.complement();
        prop_assert_eq!(g.size() + gbar.size(), n * (n - 1) / 2);
        prop_assert_eq!(gbar.complement(), g.clone());
        prop_assert!(g.is_connected() || gbar.is_connected());
    }

    #[test]
    fn exact_inertia_matches_descartes(g in arb_graph(12)) {
        prop_assert_eq!(exact_inertia(&g), descartes_inertia(&g));
    }

    #[test]
    fn trace_identity_and_inertia_total(g in arb_graph(24)) {
        let s = spectrum(&g).unwrap();
        prop_assert_eq!(s.inertia.total(), g.order());
        prop_assert_eq!(s.inertia, exact_inertia(&g));
        let sums = spectral_sums(&s, g.size()).unwrap();
        let n = g.order() as f64;
        prop_assert!((sums.s_plus + sums.s_minus - 2.0 * g.size() as f64).abs() <= 1e-8 * n * n);
    }

    #[test]
    fn invariants_ignore_labelling((g, perm) in arb_graph_with_perm(11)) {
        let h = g.permuted(&perm);
        let a = collect_invariants(&g, &InvariantOptions::default()).unwrap();
        let b = collect_invariants(&h, &InvariantOptions::default()).unwrap();
        for (x, y) in [(a.s_plus, b.s_plus), (a.s_minus, b.s_minus), (a.energy, b.energy),
                       (a.mu_max, b.mu_max), (a.mu_min, b.mu_min), (a.randic, b.randic)] {
            prop_assert!((x - y).abs() <= 1e-9 * (1.0 + x.abs()));
        }
        prop_assert_eq!((a.m, a.chi, a.chi_complement), (b.m, b.chi, b.chi_complement));
        prop_assert_eq!(a.inertia, b.inertia);
        prop_assert_eq!(a.structure, b.structure);
        prop_assert_eq!((a.connected, a.triangle_free, a.bipartite), (b.connected, b.triangle_free, b.bipartite));
    }

    #[test]
    fn theorems_hold_beyond_the_exhaustive_range(g in arb_graph(14)) {
        let rows = Catalog::standard().check_graph(&g, &CheckOptions::default());
        for r in rows.iter().filter(|r| r.status.is_theorem()) {
            prop_assert!(!r.violated(), "{:?}", r);
        }
    }

    #[test]
    fn check_rows_are_consistent(g in arb_graph(9)) {
        for r in Catalog::standard().check_graph(&g, &CheckOptions::default()) {
            if r.holds && !r.skipped {
                prop_assert!(r.slack >= -1e-8);
            }
            if r.equality {
                prop_assert!(r.holds);
            }
            prop_assert!(!r.tight || r.equality);
        }
    }
}

#[test]
fn labelled_order_follows_triangle_bits() {
    let stream = enumerate_labeled(4).unwrap();
    for k in [0u64, 1, 5, 37, 63] {
        let g = stream.get(k);
        for j in 1..4 {
            for i in 0..j {
                assert_eq!(g.has_edge(i, j), k >> pair_index(i, j) & 1 == 1);
            }
        }
    }
}
