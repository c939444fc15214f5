//! The reproduction suite: every mathematical claim the library materializes,
//! addressable by a stable id, runnable individually or in bulk. The
//! acceptance tests and the `check-paper` CLI command both drive this module.

use crate::coloring::{is_fall_coloring, Coloring};
use crate::constructions::{
    cartesian_complete_fall, cartesian_lift_fall, direct_complete_coloring,
    direct_projection_fall, ConstructionError, RowOrColumn,
};
use crate::corpus;
use crate::graph::{
    chordality, clique_number, complete, crown, cycle, kaul_mitillos_counterexample, Graph,
};
use crate::hom::{
    find_map, is_b_homomorphism, is_domatic, is_homomorphism, lift, LiftSide, MapClass,
};
use crate::products::{is_complete, is_subgraph, product, product_all, ProductSpec};
use crate::spectra::{
    b_chromatic_number, b_colorings_canonical, b_spectrum, chromatic_number, fall_spectrum,
    has_b_coloring, has_b_coloring_within, has_fall_coloring, optimal_coloring, oracle_spectra,
    SearchOutcome,
};
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

/// Stable ids of every claim, in report order.
pub const CLAIM_IDS: &[&str] = &[
    "prop-lex-complete",
    "prop-cart-fall",
    "thm-crown",
    "thm-tensor",
    "ternary-fall-6",
    "lem-lift-hom",
    "lem-lift-bhom",
    "lem-lift-domatic",
    "cor-direct-union",
    "thm-cart-lift",
    "thm-direct-proj",
    "prop-strong-sub-lex",
    "counterexample",
    "obs-c5-fall",
    "oracle-agreement",
    "cor-containments",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimOutcome {
    pub id: String,
    pub status: ClaimStatus,
    pub details: String,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub seed: u64,
    pub claims: Vec<ClaimOutcome>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.claims
            .iter()
            .all(|c| c.status != ClaimStatus::Fail)
    }
}

/// Runs one claim; `None` for an unknown id. Panics inside a claim body are
/// reported as failures rather than tearing the run down.
pub fn run_claim(id: &str, seed: u64) -> Option<ClaimOutcome> {
    let body: fn(u64) -> Result<String, String> = match id {
        "prop-lex-complete" => prop_lex_complete,
        "prop-cart-fall" => prop_cart_fall,
        "thm-crown" => thm_crown,
        "thm-tensor" => thm_tensor,
        "ternary-fall-6" => ternary_fall_6,
        "lem-lift-hom" => |s| lift_lemma(s, MapClass::Homomorphism),
        "lem-lift-bhom" => |s| lift_lemma(s, MapClass::BHomomorphism),
        "lem-lift-domatic" => |s| lift_lemma(s, MapClass::Domatic),
        "cor-direct-union" => cor_direct_union,
        "thm-cart-lift" => thm_cart_lift,
        "thm-direct-proj" => thm_direct_proj,
        "prop-strong-sub-lex" => prop_strong_sub_lex,
        "counterexample" => counterexample,
        "obs-c5-fall" => obs_c5_fall,
        "oracle-agreement" => oracle_agreement,
        "cor-containments" => cor_containments,
        _ => return None,
    };
    let start = Instant::now();
    let result = std::panic::catch_unwind(move || body(seed))
        .unwrap_or_else(|p| Err(format!("panicked: {}", panic_message(&p))));
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    let (status, details) = match result {
        Ok(d) => (ClaimStatus::Pass, d),
        Err(d) => (ClaimStatus::Fail, d),
    };
    Some(ClaimOutcome {
        id: id.to_string(),
        status,
        details,
        elapsed_ms,
    })
}

fn panic_message(p: &(dyn std::any::Any + Send)) -> String {
    if let Some(s) = p.downcast_ref::<&str>() {
        s.to_string()
    } else if let Some(s) = p.downcast_ref::<String>() {
        s.clone()
    } else {
        "unknown panic".to_string()
    }
}

/// Runs the given claims (all of them for an empty list) on up to `jobs`
/// worker threads; the report keeps the requested order.
pub fn run_claims(ids: &[String], seed: u64, jobs: usize) -> Result<CheckReport, String> {
    let ids: Vec<String> = if ids.is_empty() {
        CLAIM_IDS.iter().map(|s| s.to_string()).collect()
    } else {
        for id in ids {
            if !CLAIM_IDS.contains(&id.as_str()) {
                return Err(format!(
                    "unknown claim id '{id}'; known ids: {}",
                    CLAIM_IDS.join(", ")
                ));
            }
        }
        ids.to_vec()
    };
    let jobs = jobs.max(1).min(ids.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results: Vec<std::sync::Mutex<Option<ClaimOutcome>>> =
        ids.iter().map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= ids.len() {
                    break;
                }
                let outcome = run_claim(&ids[i], seed).expect("ids validated above");
                *results[i].lock().unwrap() = Some(outcome);
            });
        }
    });
    Ok(CheckReport {
        seed,
        claims: results
            .into_iter()
            .map(|m| m.into_inner().unwrap().unwrap())
            .collect(),
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(values: impl IntoIterator<Item = u32>) -> BTreeSet<u32> {
    values.into_iter().collect()
}

// ---------------------------------------------------------------------------
// Individual claims
// ---------------------------------------------------------------------------

/// K_p ⊙ K_q is complete on pq vertices for the lexicographic, strong and
/// co-normal products, 1 <= p, q <= 6.
fn prop_lex_complete(_seed: u64) -> Result<String, String> {
    let mut checked = 0;
    for spec in [
        ProductSpec::lexicographic(),
        ProductSpec::strong(),
        ProductSpec::co_normal(),
    ] {
        for p in 1..=6 {
            for q in 1..=6 {
                let g = product(&complete(p), &complete(q), &spec);
                ensure(g.n() == p * q && is_complete(&g), || {
                    format!("K_{p} {} K_{q} is not K_{}", spec.name().unwrap(), p * q)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} complete-factor products are complete"))
}

/// Largest k <= want with k^n within the oracle guard.
fn oracle_feasible_kmax(n: usize, want: u32) -> u32 {
    (1..=want)
        .rev()
        .find(|&k| {
            (k as u128)
                .checked_pow(n as u32)
                .is_some_and(|t| t <= 1_000_000_000)
        })
        .unwrap_or(1)
}

/// F(K_p □ K_q) = {max(p,q)}: solver for 2 <= p,q <= 4, oracle cross-check
/// where it fits, and the explicit cyclic-shift construction up to q = 6.
fn prop_cart_fall(_seed: u64) -> Result<String, String> {
    let mut details = Vec::new();
    for p in 2..=4usize {
        for q in 2..=4usize {
            let g = product(&complete(p), &complete(q), &ProductSpec::cartesian());
            let expected = set([p.max(q) as u32]);
            let got = fall_spectrum(&g);
            ensure(got == expected, || {
                format!("F(K_{p} cart K_{q}) = {got:?}, expected {expected:?}")
            })?;
            if p * q <= 12 {
                let bound = (g.min_degree() + 1) as u32;
                let k_max = oracle_feasible_kmax(g.n(), bound);
                let oracle = oracle_spectra(&g, k_max).map_err(|e| e.to_string())?;
                let solver_restricted: BTreeSet<u32> =
                    got.iter().copied().filter(|&k| k <= k_max).collect();
                ensure(oracle.fall_spectrum == solver_restricted, || {
                    format!(
                        "oracle disagrees on K_{p} cart K_{q} up to k={k_max}: \
                         {:?} vs {solver_restricted:?}",
                        oracle.fall_spectrum
                    )
                })?;
            }
        }
    }
    details.push("F(K_p cart K_q) = {max(p,q)} for 2<=p,q<=4 (oracle-checked up to 12 vertices)".to_string());
    let mut built = 0;
    for p in 1..=6usize {
        for q in p..=6usize {
            let (g, c) = cartesian_complete_fall(p, q).map_err(|e| e.to_string())?;
            ensure(
                c.k() as usize == q && is_fall_coloring(&g, &c).unwrap_or(false),
                || format!("cyclic construction fails on (p,q)=({p},{q})"),
            )?;
            built += 1;
        }
    }
    details.push(format!("{built} cyclic-shift constructions verified"));
    Ok(details.join("; "))
}

/// S_b(crown(n)) = F(crown(n)) = {2, n} for n in 3..=5.
fn thm_crown(_seed: u64) -> Result<String, String> {
    for n in 3..=5usize {
        let g = crown(n).unwrap();
        let expected = set([2, n as u32]);
        let b = b_spectrum(&g);
        ensure(b == expected, || {
            format!("S_b(crown({n})) = {b:?}, expected {expected:?}")
        })?;
        let f = fall_spectrum(&g);
        ensure(f == expected, || {
            format!("F(crown({n})) = {f:?}, expected {expected:?}")
        })?;
    }
    Ok("S_b = F = {2, n} for crown(3), crown(4), crown(5)".to_string())
}

/// S_b(K_p x K_q) = F(K_p x K_q) = {p, q}, and every b-coloring there is the
/// row or the column coloring up to renaming.
fn thm_tensor(_seed: u64) -> Result<String, String> {
    let mut enumerated = 0;
    for p in 2..=4usize {
        for q in 2..=4usize {
            let g = product(&complete(p), &complete(q), &ProductSpec::direct());
            let expected = set([p as u32, q as u32]);
            let b = b_spectrum(&g);
            ensure(b == expected, || {
                format!("S_b(K_{p} x K_{q}) = {b:?}, expected {expected:?}")
            })?;
            let f = fall_spectrum(&g);
            ensure(f == expected, || {
                format!("F(K_{p} x K_{q}) = {f:?}, expected {expected:?}")
            })?;
            // Canonical representatives of the two named colorings.
            let row = direct_complete_coloring(p, q, RowOrColumn::Row)
                .map_err(|e| e.to_string())?
                .1;
            let col = direct_complete_coloring(p, q, RowOrColumn::Column)
                .map_err(|e| e.to_string())?
                .1;
            for &k in &expected {
                let found = b_colorings_canonical(&g, k, 64);
                ensure(!found.is_empty(), || {
                    format!("no b-coloring with {k} colors on K_{p} x K_{q}")
                })?;
                for c in &found {
                    ensure(*c == row || *c == col, || {
                        format!(
                            "a b-coloring of K_{p} x K_{q} with {k} colors is neither \
                             the row nor the column coloring: {:?}",
                            c.colors()
                        )
                    })?;
                }
                enumerated += found.len();
            }
        }
    }
    Ok(format!(
        "spectra are {{p,q}} for 2<=p,q<=4; all {enumerated} enumerated b-colorings \
         are row or column colorings"
    ))
}

/// 6 is in the fall-spectrum of K_2 x K_3 x K_4 (folded direct product).
fn ternary_fall_6(_seed: u64) -> Result<String, String> {
    let g = product_all(
        &[&complete(2), &complete(3), &complete(4)],
        &ProductSpec::direct(),
    );
    ensure(g.n() == 24, || "ternary product should have 24 vertices".into())?;
    let c = has_fall_coloring(&g, 6)
        .ok_or_else(|| "no 6-color fall-coloring found on K_2 x K_3 x K_4".to_string())?;
    ensure(is_fall_coloring(&g, &c).unwrap_or(false), || {
        "returned coloring fails verification".into()
    })?;
    Ok("solver found a verified 6-color fall-coloring of K_2 x K_3 x K_4".to_string())
}

/// Whenever a map H -> F of the given class exists (surjective for the
/// domatic case), its lift across each named product, on both sides, still
/// belongs to the class.
fn lift_lemma(seed: u64, class: MapClass) -> Result<String, String> {
    let mut trips = corpus::triples(seed, 30, 5);
    // Known instances where every class has a map H -> F, so the random
    // corpus can never leave a class unexercised.
    trips.push((cycle(5).unwrap(), crown(3).unwrap(), complete(3)));
    trips.push((crate::graph::path(3).unwrap(), cycle(6).unwrap(), complete(2)));
    trips.push((complete(2), complete(4), complete(4)));
    let mut exercised = 0;
    for (gi, (g, h, f)) in trips.iter().enumerate() {
        let found = find_map(h, f, class).map_err(|e| e.to_string())?;
        let Some(m) = found else { continue };
        if class == MapClass::Domatic && !m.is_surjective() {
            continue; // the lemma's hypothesis is a *surjective* domatic map
        }
        for spec in ProductSpec::all_named() {
            for side in [LiftSide::Left, LiftSide::Right] {
                let lifted = lift(&m, g, &spec, side);
                let ok = match class {
                    MapClass::Homomorphism => is_homomorphism(&lifted),
                    MapClass::BHomomorphism => is_b_homomorphism(&lifted),
                    MapClass::Domatic => is_domatic(&lifted) && lifted.is_surjective(),
                    MapClass::TypeTwo => unreachable!("not exercised as a separate claim"),
                };
                ensure(ok, || {
                    format!(
                        "lift of a {class:?} map failed on triple #{gi} \
                         under {:?} ({side:?})",
                        spec.name()
                    )
                })?;
                exercised += 1;
            }
        }
    }
    ensure(exercised > 0, || {
        format!("corpus produced no {class:?} maps to lift; enlarge the corpus")
    })?;
    Ok(format!("{exercised} lifted maps verified ({class:?})"))
}

/// S_b(G) ∪ S_b(H) ⊆ S_b(G x H), and F(G) ∪ F(H) ⊆ F(G x H) when both
/// fall-spectra are nonempty (factors carry at least one edge).
fn cor_direct_union(seed: u64) -> Result<String, String> {
    let pairs = corpus::factor_pairs(seed, 10, 4);
    let mut memberships = 0;
    for (i, (g, h)) in pairs.iter().enumerate() {
        let prod = product(g, h, &ProductSpec::direct());
        let b_union: BTreeSet<u32> = b_spectrum(g).union(&b_spectrum(h)).copied().collect();
        for &k in &b_union {
            ensure(has_b_coloring(&prod, k).is_some(), || {
                format!("pair #{i}: {k} in S_b(G) ∪ S_b(H) but not in S_b(G x H)")
            })?;
            memberships += 1;
        }
        let fg = fall_spectrum(g);
        let fh = fall_spectrum(h);
        if !fg.is_empty() && !fh.is_empty() {
            for &k in fg.union(&fh) {
                ensure(has_fall_coloring(&prod, k).is_some(), || {
                    format!("pair #{i}: {k} in F(G) ∪ F(H) but not in F(G x H)")
                })?;
                memberships += 1;
            }
        }
    }
    Ok(format!(
        "{memberships} spectrum memberships verified on {} random pairs",
        pairs.len()
    ))
}

/// Fall-colorings of G with k >= χ(H) colors lift to fall-colorings of
/// G □ H with k colors.
fn thm_cart_lift(seed: u64) -> Result<String, String> {
    let mut pairs = corpus::factor_pairs(seed.wrapping_add(1), 10, 5);
    // a known-good named instance from the constructions
    pairs.push((crown(3).unwrap(), cycle(5).unwrap()));
    let mut verified = 0;
    let mut rejected = 0;
    for (i, (g, h)) in pairs.iter().enumerate() {
        let spectrum = fall_spectrum(g);
        if spectrum.is_empty() {
            continue;
        }
        let h_coloring = optimal_coloring(h);
        for &k in &spectrum {
            let fall = has_fall_coloring(g, k).expect("k is in the fall-spectrum");
            let result = cartesian_lift_fall(g, &fall, h, &h_coloring);
            if k >= h_coloring.k() {
                let (prod, c) = result.map_err(|e| format!("pair #{i}, k={k}: {e}"))?;
                ensure(
                    c.k() == k && is_fall_coloring(&prod, &c).unwrap_or(false),
                    || format!("pair #{i}: lifted coloring with k={k} fails verification"),
                )?;
                verified += 1;
            } else {
                ensure(
                    matches!(result, Err(ConstructionError::TooFewColors { .. })),
                    || format!("pair #{i}: k={k} < χ(H) must be rejected"),
                )?;
                rejected += 1;
            }
        }
    }
    ensure(verified > 0, || "corpus produced no liftable instances".into())?;
    Ok(format!(
        "{verified} cartesian lifts verified, {rejected} precondition violations rejected"
    ))
}

/// Fall-colorings of G project to G x H exactly when H has no isolated
/// vertices.
fn thm_direct_proj(seed: u64) -> Result<String, String> {
    let mut pairs = corpus::factor_pairs(seed.wrapping_add(2), 10, 5);
    pairs.push((crown(4).unwrap(), crate::graph::path(3).unwrap()));
    let mut verified = 0;
    for (i, (g, h)) in pairs.iter().enumerate() {
        let spectrum = fall_spectrum(g);
        for &k in &spectrum {
            if k < 2 {
                continue;
            }
            let fall = has_fall_coloring(g, k).expect("k is in the fall-spectrum");
            if h.has_isolated_vertex() {
                ensure(
                    matches!(
                        direct_projection_fall(g, &fall, h),
                        Err(ConstructionError::IsolatedVertex)
                    ),
                    || format!("pair #{i}: isolated vertex in H must be rejected"),
                )?;
            } else {
                let (prod, c) =
                    direct_projection_fall(g, &fall, h).map_err(|e| format!("pair #{i}: {e}"))?;
                ensure(
                    c.k() == k && is_fall_coloring(&prod, &c).unwrap_or(false),
                    || format!("pair #{i}: projected coloring with k={k} fails verification"),
                )?;
                verified += 1;
            }
        }
    }
    // The rejection path must be exercised at least once.
    let k3 = complete(3);
    let rainbow = Coloring::from_assignment(&[0, 1, 2]);
    let lonely = Graph::edgeless(2);
    ensure(
        matches!(
            direct_projection_fall(&k3, &rainbow, &lonely),
            Err(ConstructionError::IsolatedVertex)
        ),
        || "projection onto a graph with isolated vertices must be rejected".into(),
    )?;
    ensure(verified > 0, || "corpus produced no projectable instances".into())?;
    Ok(format!(
        "{verified} direct projections verified; isolated-vertex inputs rejected"
    ))
}

/// E(G ⊠ H) ⊆ E(G[H]) always, with equality when H is complete.
fn prop_strong_sub_lex(seed: u64) -> Result<String, String> {
    use rand::Rng;
    let mut rng = corpus::rng_for_seed(seed.wrapping_add(3));
    let mut checked = 0;
    for _ in 0..15 {
        let gn = rng.gen_range(1..=7);
        let hn = rng.gen_range(1..=7);
        let g = corpus::random_graph(&mut rng, gn, 0.5);
        let h = corpus::random_graph(&mut rng, hn, 0.5);
        let strong = product(&g, &h, &ProductSpec::strong());
        let lex = product(&g, &h, &ProductSpec::lexicographic());
        ensure(is_subgraph(&strong, &lex), || {
            "strong product must be a subgraph of the lexicographic product".into()
        })?;
        checked += 1;
    }
    for q in 1..=5usize {
        let g = cycle(5).unwrap();
        let h = complete(q);
        let strong = product(&g, &h, &ProductSpec::strong());
        let lex = product(&g, &h, &ProductSpec::lexicographic());
        ensure(strong.adjacency() == lex.adjacency(), || {
            format!("G ⊠ K_{q} must equal G[K_{q}]")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} containments verified (equality on complete H)"))
}

/// The 61-vertex chordal graph: δ = 6, ω = 7, χ = 7, empty fall-spectrum.
fn counterexample(_seed: u64) -> Result<String, String> {
    let g = kaul_mitillos_counterexample();
    ensure(g.n() == 61, || format!("expected 61 vertices, got {}", g.n()))?;
    ensure(chordality(&g).is_chordal(), || "graph must be chordal".into())?;
    ensure(g.min_degree() == 6, || {
        format!("δ = {}, expected 6", g.min_degree())
    })?;
    let omega = clique_number(&g);
    ensure(omega == 7, || format!("ω = {omega}, expected 7"))?;
    let chi = chromatic_number(&g);
    ensure(chi == 7, || format!("χ = {chi}, expected 7"))?;
    // F(G) ⊆ [χ, δ+1] = {7}, so one refutation empties the spectrum.
    let (outcome, nodes) = crate::spectra::fall_search(&g, 7, None);
    ensure(matches!(outcome, SearchOutcome::Exhausted), || {
        "found a 7-color fall-coloring; the spectrum should be empty".into()
    })?;
    Ok(format!(
        "chordal, δ=6, ω=7, χ=δ+1, and F = ∅ (7-color fall search exhausted after {nodes} nodes)"
    ))
}

/// C_5 has no fall-coloring, but C_5[K_2] (= C_5 ⊠ K_2) does.
fn obs_c5_fall(_seed: u64) -> Result<String, String> {
    let c5 = cycle(5).unwrap();
    ensure(fall_spectrum(&c5).is_empty(), || {
        "C_5 must have an empty fall-spectrum".into()
    })?;
    let lex = product(&c5, &complete(2), &ProductSpec::lexicographic());
    let strong = product(&c5, &complete(2), &ProductSpec::strong());
    ensure(lex.adjacency() == strong.adjacency(), || {
        "C_5[K_2] and C_5 ⊠ K_2 must coincide".into()
    })?;
    let f = fall_spectrum(&lex);
    ensure(!f.is_empty(), || "C_5[K_2] must admit a fall-coloring".into())?;
    Ok(format!("F(C_5) = ∅ while F(C_5[K_2]) = {f:?}"))
}

/// The backtracking solvers agree with exhaustive enumeration for k <= 4 on
/// 50 random graphs with at most 8 vertices.
fn oracle_agreement(seed: u64) -> Result<String, String> {
    let graphs = corpus::graph_corpus(seed, 50, 8);
    for (i, g) in graphs.iter().enumerate() {
        let oracle = oracle_spectra(g, 4).map_err(|e| e.to_string())?;
        let solver_b: BTreeSet<u32> = b_spectrum(g).into_iter().filter(|&k| k <= 4).collect();
        let solver_f: BTreeSet<u32> = fall_spectrum(g).into_iter().filter(|&k| k <= 4).collect();
        ensure(solver_b == oracle.b_spectrum, || {
            format!(
                "graph #{i} (n={}): solver S_b {solver_b:?} vs oracle {:?}",
                g.n(),
                oracle.b_spectrum
            )
        })?;
        ensure(solver_f == oracle.fall_spectrum, || {
            format!(
                "graph #{i} (n={}): solver F {solver_f:?} vs oracle {:?}",
                g.n(),
                oracle.fall_spectrum
            )
        })?;
    }
    Ok("solver and oracle agree on S_b and F (k <= 4) for all 50 graphs".to_string())
}

/// The product bounds: b(G⊙H) >= b(G)b(H) for lexicographic/strong/co-normal
/// and >= max(b(G), b(H)) for cartesian/direct, plus the f1/f2 chains when
/// both factor fall-spectra are nonempty. Verified through spectrum
/// membership of the bounding value, which implies the inequality.
fn cor_containments(seed: u64) -> Result<String, String> {
    let pairs = corpus::factor_pairs(seed.wrapping_add(4), 12, 5);
    let mut checks = 0;
    for (i, (g, h)) in pairs.iter().enumerate() {
        let bg = b_chromatic_number(g);
        let bh = b_chromatic_number(h);
        let fg = fall_spectrum(g);
        let fh = fall_spectrum(h);
        for spec in ProductSpec::all_named() {
            let prod = product(g, h, &spec);
            let multiplicative = matches!(
                spec.name(),
                Some("lexicographic") | Some("strong") | Some("co-normal")
            );
            let b_target = if multiplicative { bg * bh } else { bg.max(bh) };
            ensure(has_b_coloring(&prod, b_target).is_some(), || {
                format!(
                    "pair #{i}, {}: no b-coloring with {b_target} colors, so \
                     b(G⊙H) >= {b_target} is unwitnessed",
                    spec.name().unwrap()
                )
            })?;
            checks += 1;
            if fg.is_empty() || fh.is_empty() {
                continue;
            }
            let (f1g, f2g) = (*fg.first().unwrap(), *fg.last().unwrap());
            let (f1h, f2h) = (*fh.first().unwrap(), *fh.last().unwrap());
            let (low, high) = match spec.name() {
                Some("cartesian") => (f1g.max(f1h), f2g.max(f2h)),
                Some("direct") => (f1g.min(f1h), f2g.max(f2h)),
                _ => (f1g * f1h, f2g * f2h),
            };
            ensure(low <= high, || "factor chain must be ordered".into())?;
            for k in [low, high] {
                ensure(has_fall_coloring(&prod, k).is_some(), || {
                    format!(
                        "pair #{i}, {}: {k} missing from F(G⊙H); the f1/f2 chain fails",
                        spec.name().unwrap()
                    )
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!(
        "{checks} bound witnesses verified on {} random pairs x 5 products",
        pairs.len()
    ))
}

// ---------------------------------------------------------------------------
// Question 1 probe
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ProbeOutcome {
    pub p: usize,
    pub q: usize,
    /// Largest k with a found b-coloring witness of K_p □ K_q.
    pub best_k: u32,
    pub witness: Option<Coloring>,
    /// Largest k the search settled (found or refuted) before the budget ran
    /// out; anything above is unknown.
    pub settled_up_to: u32,
    pub budget_exhausted: bool,
    /// The probe only produces lower-bound evidence, never an answer.
    pub note: &'static str,
}

/// Searches K_p □ K_q for b-colorings with increasing color counts within a
/// time budget.
pub fn probe_question1(p: usize, q: usize, budget: Duration) -> ProbeOutcome {
    let g = product(&complete(p), &complete(q), &ProductSpec::cartesian());
    let deadline = Instant::now() + budget;
    let chi = p.max(q) as u32;
    let top = (p + q - 1) as u32; // Δ + 1
    let mut best_k = 0;
    let mut witness = None;
    let mut settled = 0;
    let mut exhausted_budget = false;
    for k in chi..=top {
        match has_b_coloring_within(&g, k, Some(deadline)) {
            SearchOutcome::Found(c) => {
                best_k = k;
                witness = Some(c);
                settled = k;
            }
            SearchOutcome::Exhausted => {
                settled = k;
            }
            SearchOutcome::TimedOut => {
                exhausted_budget = true;
                break;
            }
        }
    }
    ProbeOutcome {
        p,
        q,
        best_k,
        witness,
        settled_up_to: settled,
        budget_exhausted: exhausted_budget,
        note: "lower-bound evidence, not an answer",
    }
}
