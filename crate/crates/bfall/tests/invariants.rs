//! Cross-module invariants on random corpora: the implication chain between
//! the coloring predicates, spectrum consistency, the homomorphism ↔ spectrum
//! bridge, chordality certificates, and product structure.

use bfall::coloring::{
    is_b_coloring, is_fall_coloring, is_proper, reduce_to_b_coloring, Coloring,
};
use bfall::corpus::{self, random_graph};
use bfall::graph::{chordality, complete, verify_hole, Chordality, Graph};
use bfall::hom::{coloring_to_map, find_map, is_b_homomorphism, is_type2, MapClass};
use bfall::products::{product, product_coords, CoordRelation, ProductSpec};
use bfall::spectra::{b_spectrum, chromatic_number, fall_spectrum, has_b_coloring, has_fall_coloring};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructed_graphs_are_symmetric_and_irreflexive(g in graph_strategy(8)) {
        for u in g.vertices() {
            prop_assert!(!g.adjacent(u, u));
            for v in g.vertices() {
                prop_assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
            }
        }
    }

    #[test]
    fn products_match_their_relation_masks(
        g in graph_strategy(5),
        h in graph_strategy(5),
        which in 0usize..5,
    ) {
        let spec = ProductSpec::all_named()[which].clone();
        let p = product(&g, &h, &spec);
        for a in 0..p.n() {
            for b in 0..p.n() {
                if a == b {
                    prop_assert!(!p.adjacent(a, a));
                    continue;
                }
                let (ua, va) = product_coords(a, h.n());
                let (ub, vb) = product_coords(b, h.n());
                let expected = spec.allows(
                    CoordRelation::of(&g, ua, ub),
                    CoordRelation::of(&h, va, vb),
                );
                prop_assert_eq!(p.adjacent(a, b), expected);
            }
        }
    }

    #[test]
    fn chordality_always_returns_a_valid_certificate(g in graph_strategy(9)) {
        match chordality(&g) {
            Chordality::Chordal { elimination_order } => {
                let mut position = vec![0usize; g.n()];
                for (i, &v) in elimination_order.iter().enumerate() {
                    position[v] = i;
                }
                for &v in &elimination_order {
                    let later: Vec<usize> = g
                        .neighbors(v)
                        .iter()
                        .filter(|&w| position[w] > position[v])
                        .collect();
                    for (i, &a) in later.iter().enumerate() {
                        for &b in later[i + 1..].iter() {
                            prop_assert!(g.adjacent(a, b));
                        }
                    }
                }
            }
            Chordality::NotChordal { hole } => {
                prop_assert!(verify_hole(&g, &hole));
                prop_assert!(hole.len() >= 4);
            }
        }
    }

    #[test]
    fn dimacs_round_trips(g in graph_strategy(10)) {
        let mut buf = Vec::new();
        bfall::dimacs::write_col(&g, &mut buf).unwrap();
        let back = bfall::dimacs::read_col(buf.as_slice()).unwrap();
        prop_assert_eq!(back.adjacency(), g.adjacency());
    }

    #[test]
    fn coloring_compaction_is_idempotent(raw in proptest::collection::vec(0u32..6, 1..12)) {
        let once = Coloring::from_assignment(&raw);
        let twice = Coloring::from_assignment(once.colors());
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once.k(), once.colors().iter().max().unwrap() + 1);
    }

    #[test]
    fn reduction_yields_a_b_coloring_without_new_colors(
        g in graph_strategy(7),
        salt in any::<u64>(),
    ) {
        // A made-up proper coloring: greedy on a salted vertex order.
        let mut order: Vec<usize> = g.vertices().collect();
        order.sort_by_key(|&v| (v as u64).wrapping_mul(salt | 1).rotate_left(7));
        let mut colors = vec![0u32; g.n()];
        for &v in &order {
            let taken: BTreeSet<u32> = g
                .neighbors(v)
                .iter()
                .filter(|&w| order.iter().position(|&x| x == w) < order.iter().position(|&x| x == v))
                .map(|w| colors[w])
                .collect();
            colors[v] = (0..).find(|c| !taken.contains(c)).unwrap();
        }
        let c = Coloring::from_assignment(&colors);
        prop_assert!(is_proper(&g, &c).unwrap());
        let reduced = reduce_to_b_coloring(&g, &c).unwrap();
        prop_assert!(reduced.k() <= c.k());
        prop_assert!(is_b_coloring(&g, &reduced).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn commutative_products_swap_cleanly(
        g in graph_strategy(4),
        h in graph_strategy(4),
        which in 0usize..5,
    ) {
        use bfall::products::swap_coordinates;
        let spec = ProductSpec::all_named()[which].clone();
        let gh = product(&g, &h, &spec);
        let hg = product(&h, &g, &spec);
        let swapped = swap_coordinates(&hg, h.n(), g.n());
        if spec.name() == Some("lexicographic") {
            // non-commutative in general; nothing to assert beyond sizes
            prop_assert_eq!(gh.n(), swapped.n());
        } else {
            prop_assert_eq!(gh.adjacency(), swapped.adjacency());
        }
    }
}

#[test]
fn pairwise_fall_containments_on_products() {
    // For every pair (p, q) of factor fall-spectrum values: p*q lands in the
    // fall-spectrum of the lexicographic/strong/co-normal products and
    // max(p, q) in the cartesian one. (The direct product's union containment
    // has its own claim.)
    let mut memberships = 0;
    for (g, h) in corpus::factor_pairs(53, 8, 5) {
        let fg = fall_spectrum(&g);
        let fh = fall_spectrum(&h);
        if fg.is_empty() || fh.is_empty() {
            continue;
        }
        for spec in ProductSpec::all_named() {
            if spec.name() == Some("direct") {
                continue;
            }
            let prod = product(&g, &h, &spec);
            for &p in &fg {
                for &q in &fh {
                    let k = if spec.name() == Some("cartesian") {
                        p.max(q)
                    } else {
                        p * q
                    };
                    assert!(
                        has_fall_coloring(&prod, k).is_some(),
                        "{:?}: ({p},{q}) should put {k} into the product fall-spectrum",
                        spec.name()
                    );
                    memberships += 1;
                }
            }
        }
    }
    assert!(memberships > 0);
}

#[test]
fn pairing_verifies_on_corpus_factors() {
    // Factors with nonempty fall-spectra pair into verified fall-colorings
    // with the product of the color counts, on all three dense products.
    let mut exercised = 0;
    for (g, h) in corpus::factor_pairs(31, 12, 6) {
        let (fg, fh) = (fall_spectrum(&g), fall_spectrum(&h));
        let (Some(&kg), Some(&kh)) = (fg.first(), fh.first()) else {
            continue;
        };
        let cg = has_fall_coloring(&g, kg).unwrap();
        let ch = has_fall_coloring(&h, kh).unwrap();
        for spec in [
            ProductSpec::lexicographic(),
            ProductSpec::strong(),
            ProductSpec::co_normal(),
        ] {
            let (prod, c) =
                bfall::constructions::pair_product_fall(&g, &cg, &h, &ch, &spec).unwrap();
            assert_eq!(c.k(), kg * kh);
            assert!(is_fall_coloring(&prod, &c).unwrap());
            exercised += 1;
        }
    }
    assert!(exercised > 0, "corpus produced no pairable factors");
}

#[test]
fn predicate_chain_fall_implies_b_implies_proper() {
    // Solver-produced witnesses feed the chain; every fall witness must be a
    // b-coloring, every b witness proper.
    for g in corpus::graph_corpus(11, 25, 7) {
        if g.n() == 0 {
            continue;
        }
        for k in chromatic_number(&g)..=(g.max_degree() as u32 + 1).min(g.n() as u32) {
            if let Some(c) = has_b_coloring(&g, k) {
                assert!(is_proper(&g, &c).unwrap());
                assert!(is_b_coloring(&g, &c).unwrap());
            }
            if let Some(c) = has_fall_coloring(&g, k) {
                assert!(is_b_coloring(&g, &c).unwrap());
                assert!(is_fall_coloring(&g, &c).unwrap());
            }
        }
    }
}

#[test]
fn spectrum_consistency_on_corpus() {
    for g in corpus::graph_corpus(13, 30, 7) {
        let chi = chromatic_number(&g);
        let b = b_spectrum(&g);
        let f = fall_spectrum(&g);
        assert_eq!(b.first().copied(), Some(chi), "min S_b must be χ");
        assert!(f.is_subset(&b), "F ⊆ S_b");
        if let (Some(&lo), Some(&hi)) = (f.first(), f.last()) {
            assert!(lo >= chi);
            assert!(hi <= g.min_degree() as u32 + 1);
        }
    }
}

/// Brute-force count of labeled b-colorings of `g` with exactly `k` colors.
fn count_labeled_b_colorings(g: &Graph, k: u32) -> u64 {
    let n = g.n();
    let mut colors = vec![0u32; n];
    let mut count = 0u64;
    let mut done = false;
    while !done {
        let distinct = colors.iter().collect::<BTreeSet<_>>().len();
        if distinct == k as usize
            && bfall::coloring::assignment_is_proper(g, &colors)
            && colors.iter().all(|&c| c < k)
            && bfall::coloring::assignment_is_b_coloring(g, &colors, k)
        {
            count += 1;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                done = true;
                break;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
    count
}

#[test]
fn canonical_b_enumeration_is_complete() {
    // Properness and b-ness are properties of the color-class partition, so
    // each canonical b-coloring accounts for exactly k! labeled ones.
    let factorial = |k: u32| -> u64 { (1..=k as u64).product() };
    for g in corpus::graph_corpus(41, 12, 6) {
        if g.n() == 0 {
            continue;
        }
        for k in 1..=4u32.min(g.n() as u32) {
            let canonical = bfall::spectra::b_colorings_canonical(&g, k, 10_000);
            let labeled = count_labeled_b_colorings(&g, k);
            assert_eq!(
                canonical.len() as u64 * factorial(k),
                labeled,
                "n={}, k={k}: canonical enumeration missed or duplicated partitions",
                g.n()
            );
        }
    }
}

#[test]
fn clique_number_matches_subset_brute_force() {
    for g in corpus::graph_corpus(43, 20, 10) {
        let n = g.n();
        let mut best = 0usize;
        for mask in 0u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let is_clique = verts
                .iter()
                .enumerate()
                .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.adjacent(u, v)));
            if is_clique {
                best = best.max(verts.len());
            }
        }
        assert_eq!(bfall::graph::clique_number(&g), best, "n={n}");
    }
}

#[test]
fn chromatic_number_matches_oracle_minimum() {
    for g in corpus::graph_corpus(47, 15, 7) {
        if g.n() == 0 {
            continue;
        }
        let oracle = bfall::spectra::oracle_spectra(&g, g.n() as u32).unwrap();
        assert_eq!(
            Some(chromatic_number(&g)),
            oracle.proper.first().copied(),
            "n={}",
            g.n()
        );
    }
}

#[test]
fn solvers_match_oracle_up_to_five_colors() {
    // The acceptance suite pins k <= 4; push the cross-check one color
    // further on a smaller corpus.
    for g in bfall::corpus::graph_corpus(37, 15, 7) {
        let oracle = bfall::spectra::oracle_spectra(&g, 5).unwrap();
        let solver_b: BTreeSet<u32> = b_spectrum(&g).into_iter().filter(|&k| k <= 5).collect();
        let solver_f: BTreeSet<u32> = fall_spectrum(&g).into_iter().filter(|&k| k <= 5).collect();
        assert_eq!(solver_b, oracle.b_spectrum, "n={}", g.n());
        assert_eq!(solver_f, oracle.fall_spectrum, "n={}", g.n());
    }
}

#[test]
fn spectra_match_homomorphism_existence() {
    // k ∈ S_b(G) iff a b-homomorphism G -> K_k exists; k ∈ F(G) iff a
    // surjective Type II map G -> K_k exists.
    for g in corpus::graph_corpus(17, 12, 6) {
        if g.n() == 0 {
            continue;
        }
        let b = b_spectrum(&g);
        let f = fall_spectrum(&g);
        let top = (g.max_degree() as u32 + 2).min(6).min(g.n() as u32 + 1);
        for k in 1..=top {
            let target = complete(k as usize);
            let bhom = find_map(&g, &target, MapClass::BHomomorphism).unwrap();
            assert_eq!(
                bhom.is_some(),
                b.contains(&k),
                "b-hom existence vs S_b at k={k} (n={})",
                g.n()
            );
            let t2 = find_map(&g, &target, MapClass::TypeTwo).unwrap();
            let surjective_t2 = t2.filter(|m| m.is_surjective());
            assert_eq!(
                surjective_t2.is_some(),
                f.contains(&k),
                "type-II existence vs F at k={k} (n={})",
                g.n()
            );
        }
    }
}

#[test]
fn solver_witnesses_translate_to_maps() {
    for g in corpus::graph_corpus(19, 10, 6) {
        for &k in b_spectrum(&g).iter() {
            let c = has_b_coloring(&g, k).expect("spectrum member has a witness");
            assert!(is_b_homomorphism(&coloring_to_map(&g, &c)));
        }
        for &k in fall_spectrum(&g).iter() {
            let c = has_fall_coloring(&g, k).expect("spectrum member has a witness");
            let m = coloring_to_map(&g, &c);
            assert!(is_type2(&m));
            assert!(m.is_surjective());
        }
    }
}

#[test]
fn b_map_existence_is_transitive_on_corpus() {
    // If G -b-> H and H -b-> F then G -b-> F; same for Type II. Exercised on
    // whatever maps the corpus search turns up.
    let mut b_exercised = 0;
    let mut t2_exercised = 0;
    for (g, h, f) in corpus::triples(23, 40, 4) {
        let gh = find_map(&g, &h, MapClass::BHomomorphism).unwrap();
        let hf = find_map(&h, &f, MapClass::BHomomorphism).unwrap();
        if gh.is_some() && hf.is_some() {
            assert!(
                find_map(&g, &f, MapClass::BHomomorphism).unwrap().is_some(),
                "b-map transitivity violated (n = {}, {}, {})",
                g.n(),
                h.n(),
                f.n()
            );
            b_exercised += 1;
        }
        let gh2 = find_map(&g, &h, MapClass::TypeTwo).unwrap();
        let hf2 = find_map(&h, &f, MapClass::TypeTwo).unwrap();
        if gh2.is_some_and(|m| m.is_surjective()) && hf2.is_some_and(|m| m.is_surjective()) {
            let gf = find_map(&g, &f, MapClass::TypeTwo).unwrap();
            assert!(gf.is_some(), "type-II transitivity violated");
            t2_exercised += 1;
        }
    }
    assert!(b_exercised > 0 && t2_exercised > 0, "corpus too thin to exercise transitivity");
}

#[test]
fn domatic_maps_into_connected_targets_are_surjective() {
    // Holds for connected targets without isolated vertices; a disconnected
    // target admits non-surjective domatic maps (see the unit tests).
    let mut rng = corpus::rng_for_seed(29);
    let mut exercised = 0;
    for _ in 0..40 {
        let source = random_graph(&mut rng, 4, 0.6);
        let target = {
            // connect a random graph by chaining stragglers to vertex 0
            let mut g = random_graph(&mut rng, 4, 0.5);
            let mut edges = g.edges();
            for v in 1..g.n() {
                edges.push((v - 1, v));
            }
            g = Graph::from_edges(4, &edges).unwrap();
            g
        };
        if let Some(m) = find_map(&source, &target, MapClass::Domatic).unwrap() {
            assert!(
                m.is_surjective(),
                "domatic map into a connected target must be surjective"
            );
            exercised += 1;
        }
    }
    assert!(exercised > 0);
}
