//! Exact computation of the chromatic number, b-spectrum and fall-spectrum by
//! pruned backtracking, plus an independent brute-force oracle for
//! cross-checks on small graphs.
//!
//! Search-space bounds: b-colorings with `k` colors need a b-vertex of each
//! class with `k - 1` distinctly colored neighbors, so `k <= Δ(G) + 1`;
//! fall-colorings need every closed neighborhood to span all `k` colors, so
//! `k <= δ(G) + 1`. Both solvers break color symmetry canonically: a vertex
//! may open color `j` only when colors `0..j` are already in use, so each
//! color-class partition is visited exactly once.

use crate::coloring::{
    assignment_is_b_coloring, assignment_is_fall_coloring, assignment_is_proper, Coloring,
};
use crate::graph::{chordality, clique_number, Chordality, Graph};
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectraError {
    #[error("oracle refused: {k_max}^{n} assignments exceed the 10^9 guard")]
    OracleGuardExceeded { k_max: u32, n: usize },
}

/// Outcome of a budgeted search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Coloring),
    Exhausted,
    TimedOut,
}

const UNASSIGNED: u32 = u32::MAX;

fn low_mask(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

// ---------------------------------------------------------------------------
// Proper-coloring decision search (for the chromatic number)
// ---------------------------------------------------------------------------

struct ProperSolver<'g> {
    g: &'g Graph,
    k: u32,
    order: Vec<usize>,
    color: Vec<u32>,
    nb_colors: Vec<u64>,
    nodes: u64,
}

impl<'g> ProperSolver<'g> {
    fn new(g: &'g Graph, k: u32) -> Self {
        assert!(k <= 64, "proper-coloring search supports at most 64 colors");
        // A maximum clique first (its vertices are forced onto distinct
        // colors), then the rest by descending degree.
        let clique = crate::graph::max_clique(g);
        let in_clique: Vec<bool> = {
            let mut f = vec![false; g.n()];
            for &v in &clique {
                f[v] = true;
            }
            f
        };
        let mut rest: Vec<usize> = g.vertices().filter(|&v| !in_clique[v]).collect();
        rest.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut order = clique;
        order.extend(rest);
        ProperSolver {
            g,
            k,
            order,
            color: vec![UNASSIGNED; g.n()],
            nb_colors: vec![0; g.n()],
            nodes: 0,
        }
    }

    fn search(&mut self, depth: usize, used: u32) -> bool {
        if depth == self.g.n() {
            return true;
        }
        self.nodes += 1;
        let v = self.order[depth];
        let top = (used + 1).min(self.k);
        let mut cand = low_mask(top) & !self.nb_colors[v];
        while cand != 0 {
            let c = cand.trailing_zeros();
            cand &= cand - 1;
            self.color[v] = c;
            let bit = 1u64 << c;
            let mut touched = Vec::new();
            for w in self.g.neighbors(v).iter() {
                if self.nb_colors[w] & bit == 0 {
                    self.nb_colors[w] |= bit;
                    touched.push(w);
                }
            }
            if self.search(depth + 1, used.max(c + 1)) {
                return true;
            }
            for w in touched {
                self.nb_colors[w] &= !bit;
            }
            self.color[v] = UNASSIGNED;
        }
        false
    }
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn find_proper_coloring(g: &Graph, k: u32) -> Option<Coloring> {
    let (result, _) = find_proper_coloring_counted(g, k);
    result
}

fn find_proper_coloring_counted(g: &Graph, k: u32) -> (Option<Coloring>, u64) {
    if g.n() == 0 {
        return (Some(Coloring::from_assignment(&[])), 0);
    }
    if k == 0 {
        return (None, 0);
    }
    let mut solver = ProperSolver::new(g, k);
    if solver.search(0, 0) {
        let coloring = Coloring::from_assignment(&solver.color);
        debug_assert!(assignment_is_proper(g, coloring.colors()));
        (Some(coloring), solver.nodes)
    } else {
        (None, solver.nodes)
    }
}

/// Greedy coloring in the given vertex order (smallest free color).
fn greedy_coloring(g: &Graph, order: &[usize]) -> Vec<u32> {
    let n = g.n();
    let mut color = vec![UNASSIGNED; n];
    let mut forbidden = vec![false; n + 1];
    for &v in order {
        for w in g.neighbors(v).iter() {
            if color[w] != UNASSIGNED {
                forbidden[color[w] as usize] = true;
            }
        }
        let c = (0..).find(|&c| !forbidden[c as usize]).unwrap();
        color[v] = c;
        for f in forbidden.iter_mut() {
            *f = false;
        }
    }
    color
}

/// DSATUR order greedy coloring: repeatedly color the vertex seeing the most
/// distinct colors (ties by degree, then index).
fn dsatur_coloring(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut color = vec![UNASSIGNED; n];
    let mut neighbor_colors: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&v| color[v] == UNASSIGNED)
            .max_by_key(|&v| (neighbor_colors[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|c| !neighbor_colors[v].contains(c)).unwrap();
        color[v] = c;
        for w in g.neighbors(v).iter() {
            neighbor_colors[w].insert(c);
        }
    }
    color
}

/// Exact chromatic number: clique lower bound, greedy upper bound (with a
/// perfect-elimination-ordering greedy when the graph is chordal, which is
/// already optimal there), backtracking to close any remaining gap.
pub fn chromatic_number(g: &Graph) -> u32 {
    chromatic_counted(g).0.k()
}

/// An optimal (chromatic-number many colors) proper coloring.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    chromatic_counted(g).0
}

fn chromatic_counted(g: &Graph) -> (Coloring, u64) {
    let n = g.n();
    if n == 0 {
        return (Coloring::from_assignment(&[]), 0);
    }
    if g.edge_count() == 0 {
        return (Coloring::from_assignment(&vec![0; n]), 0);
    }
    if let Chordality::Chordal { elimination_order } = chordality(g) {
        // Greedy along the reversed elimination order meets the clique bound.
        let reversed: Vec<usize> = elimination_order.into_iter().rev().collect();
        let coloring = Coloring::from_assignment(&greedy_coloring(g, &reversed));
        debug_assert!(assignment_is_proper(g, coloring.colors()));
        debug_assert_eq!(coloring.k() as usize, clique_number(g));
        return (coloring, 0);
    }
    let lower = clique_number(g) as u32;
    let dsatur = Coloring::from_assignment(&dsatur_coloring(g));
    let mut nodes = 0;
    if dsatur.k() == lower {
        return (dsatur, nodes);
    }
    for k in lower..dsatur.k() {
        let (found, used) = find_proper_coloring_counted(g, k);
        nodes += used;
        if let Some(c) = found {
            return (c, nodes);
        }
    }
    (dsatur, nodes)
}

// ---------------------------------------------------------------------------
// Fall-coloring solver
// ---------------------------------------------------------------------------

struct FallSolver<'g> {
    g: &'g Graph,
    k: u32,
    full: u64,
    color: Vec<u32>,
    /// Colors among the assigned open neighbors of each vertex.
    nb_colors: Vec<u64>,
    /// Unassigned vertices remaining in each closed neighborhood.
    free_closed: Vec<u32>,
    trail: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl<'g> FallSolver<'g> {
    fn new(g: &'g Graph, k: u32, deadline: Option<Instant>) -> Self {
        FallSolver {
            g,
            k,
            full: low_mask(k),
            color: vec![UNASSIGNED; g.n()],
            nb_colors: vec![0; g.n()],
            free_closed: g.vertices().map(|v| g.degree(v) as u32 + 1).collect(),
            trail: Vec::new(),
            nodes: 0,
            deadline,
            timed_out: false,
        }
    }

    fn closed_seen(&self, w: usize) -> u64 {
        let own = if self.color[w] == UNASSIGNED {
            0
        } else {
            1u64 << self.color[w]
        };
        self.nb_colors[w] | own
    }

    fn missing(&self, w: usize) -> u32 {
        self.k - self.closed_seen(w).count_ones()
    }

    /// Colors `v` may take: canonical order, properness, and the forced sets
    /// of saturated closed neighborhoods (`missing == free` means every
    /// remaining vertex there must supply a distinct missing color).
    fn candidates(&self, v: usize, used: u32) -> u64 {
        let top = (used + 1).min(self.k);
        let mut cand = low_mask(top) & !self.nb_colors[v];
        for w in self.g.neighbors(v).iter().chain(std::iter::once(v)) {
            if cand == 0 {
                break;
            }
            let seen = self.closed_seen(w);
            if self.k - seen.count_ones() == self.free_closed[w] {
                cand &= self.full & !seen;
            }
        }
        cand
    }

    /// Applies `v -> c`; returns the trail mark and whether every affected
    /// closed neighborhood can still be covered.
    fn assign(&mut self, v: usize, c: u32) -> (usize, bool) {
        let mark = self.trail.len();
        self.color[v] = c;
        let bit = 1u64 << c;
        for w in self.g.neighbors(v).iter() {
            if self.nb_colors[w] & bit == 0 {
                self.nb_colors[w] |= bit;
                self.trail.push(w);
            }
            self.free_closed[w] -= 1;
        }
        self.free_closed[v] -= 1;
        let ok = self
            .g
            .neighbors(v)
            .iter()
            .chain(std::iter::once(v))
            .all(|w| self.missing(w) <= self.free_closed[w]);
        (mark, ok)
    }

    fn undo(&mut self, v: usize, c: u32, mark: usize) {
        let bit = 1u64 << c;
        while self.trail.len() > mark {
            let w = self.trail.pop().unwrap();
            self.nb_colors[w] &= !bit;
        }
        for w in self.g.neighbors(v).iter() {
            self.free_closed[w] += 1;
        }
        self.free_closed[v] += 1;
        self.color[v] = UNASSIGNED;
    }

    fn search(&mut self, v: usize, used: u32) -> Option<Vec<u32>> {
        if v == self.g.n() {
            return Some(self.color.clone());
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                    return None;
                }
            }
        }
        // Surjectivity: all k colors must still be reachable.
        if self.k - used > (self.g.n() - v) as u32 {
            return None;
        }
        let mut cand = self.candidates(v, used);
        while cand != 0 {
            let c = cand.trailing_zeros();
            cand &= cand - 1;
            let (mark, ok) = self.assign(v, c);
            if ok {
                if let Some(sol) = self.search(v + 1, used.max(c + 1)) {
                    return Some(sol);
                }
                if self.timed_out {
                    self.undo(v, c, mark);
                    return None;
                }
            }
            self.undo(v, c, mark);
        }
        None
    }
}

/// A fall-coloring with exactly `k` colors, or `None` if there is none.
pub fn has_fall_coloring(g: &Graph, k: u32) -> Option<Coloring> {
    match fall_search(g, k, None).0 {
        SearchOutcome::Found(c) => Some(c),
        _ => None,
    }
}

pub(crate) fn fall_search(g: &Graph, k: u32, deadline: Option<Instant>) -> (SearchOutcome, u64) {
    let n = g.n();
    if k == 0 {
        return if n == 0 {
            (SearchOutcome::Found(Coloring::from_assignment(&[])), 0)
        } else {
            (SearchOutcome::Exhausted, 0)
        };
    }
    if n == 0 || (k as usize) > n {
        return (SearchOutcome::Exhausted, 0);
    }
    assert!(k <= 64, "fall-coloring search supports at most 64 colors");
    // A vertex whose closed neighborhood is smaller than k can never see all
    // k colors.
    if g.vertices().any(|v| (g.degree(v) as u32 + 1) < k) {
        return (SearchOutcome::Exhausted, 0);
    }
    let mut solver = FallSolver::new(g, k, deadline);
    match solver.search(0, 0) {
        Some(raw) => {
            let coloring = Coloring::from_assignment(&raw);
            debug_assert_eq!(coloring.k(), k);
            debug_assert!(assignment_is_proper(g, coloring.colors()));
            debug_assert!(assignment_is_fall_coloring(g, coloring.colors(), k));
            (SearchOutcome::Found(coloring), solver.nodes)
        }
        None if solver.timed_out => (SearchOutcome::TimedOut, solver.nodes),
        None => (SearchOutcome::Exhausted, solver.nodes),
    }
}

/// Every `k` in `[χ(G), δ(G)+1]` admitting a fall-coloring; empty when no
/// fall-coloring exists at all.
pub fn fall_spectrum(g: &Graph) -> BTreeSet<u32> {
    let n = g.n();
    if n == 0 {
        return BTreeSet::new();
    }
    let chi = chromatic_number(g);
    let hi = (g.min_degree() as u32 + 1).min(n as u32);
    (chi..=hi)
        .filter(|&k| has_fall_coloring(g, k).is_some())
        .collect()
}

// ---------------------------------------------------------------------------
// b-coloring solver
// ---------------------------------------------------------------------------

struct BSolver<'g> {
    g: &'g Graph,
    k: u32,
    full: u64,
    color: Vec<u32>,
    nb_colors: Vec<u64>,
    /// Unassigned open neighbors of each vertex.
    free_open: Vec<u32>,
    trail: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
    solutions: Vec<Coloring>,
    max_solutions: usize,
}

impl<'g> BSolver<'g> {
    fn new(g: &'g Graph, k: u32, deadline: Option<Instant>, max_solutions: usize) -> Self {
        BSolver {
            g,
            k,
            full: low_mask(k),
            color: vec![UNASSIGNED; g.n()],
            nb_colors: vec![0; g.n()],
            free_open: g.vertices().map(|v| g.degree(v) as u32).collect(),
            trail: Vec::new(),
            nodes: 0,
            deadline,
            timed_out: false,
            solutions: Vec::new(),
            max_solutions,
        }
    }

    /// Each color class needs a surviving b-vertex candidate: an assigned
    /// member, or an unassigned vertex that can still join the class, whose
    /// missing colors fit among its unassigned neighbors.
    fn classes_feasible(&self) -> bool {
        let mut ok_mask = 0u64;
        for v in self.g.vertices() {
            // An unassigned vertex may already see all k colors; saturate.
            let missing = (self.k - 1).saturating_sub(self.nb_colors[v].count_ones());
            if missing > self.free_open[v] {
                continue;
            }
            if self.color[v] == UNASSIGNED {
                ok_mask |= self.full & !self.nb_colors[v];
            } else {
                ok_mask |= 1u64 << self.color[v];
            }
            if ok_mask == self.full {
                return true;
            }
        }
        ok_mask == self.full
    }

    fn assign(&mut self, v: usize, c: u32) -> usize {
        let mark = self.trail.len();
        self.color[v] = c;
        let bit = 1u64 << c;
        for w in self.g.neighbors(v).iter() {
            if self.nb_colors[w] & bit == 0 {
                self.nb_colors[w] |= bit;
                self.trail.push(w);
            }
            self.free_open[w] -= 1;
        }
        mark
    }

    fn undo(&mut self, v: usize, c: u32, mark: usize) {
        let bit = 1u64 << c;
        while self.trail.len() > mark {
            let w = self.trail.pop().unwrap();
            self.nb_colors[w] &= !bit;
        }
        for w in self.g.neighbors(v).iter() {
            self.free_open[w] += 1;
        }
        self.color[v] = UNASSIGNED;
    }

    /// Returns true when the search should stop (enough solutions or timeout).
    fn search(&mut self, v: usize, used: u32) -> bool {
        if v == self.g.n() {
            debug_assert!(used == self.k);
            debug_assert!(assignment_is_proper(self.g, &self.color));
            debug_assert!(assignment_is_b_coloring(self.g, &self.color, self.k));
            self.solutions.push(Coloring::from_assignment(&self.color));
            return self.solutions.len() >= self.max_solutions;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                    return true;
                }
            }
        }
        if self.k - used > (self.g.n() - v) as u32 {
            return false;
        }
        let top = (used + 1).min(self.k);
        let mut cand = low_mask(top) & !self.nb_colors[v];
        while cand != 0 {
            let c = cand.trailing_zeros();
            cand &= cand - 1;
            let mark = self.assign(v, c);
            if self.classes_feasible() && self.search(v + 1, used.max(c + 1)) {
                self.undo(v, c, mark);
                return true;
            }
            self.undo(v, c, mark);
            if self.timed_out {
                return true;
            }
        }
        false
    }
}

fn b_search(
    g: &Graph,
    k: u32,
    deadline: Option<Instant>,
    max_solutions: usize,
) -> (Vec<Coloring>, bool, u64) {
    let n = g.n();
    if k == 0 {
        return (
            if n == 0 {
                vec![Coloring::from_assignment(&[])]
            } else {
                Vec::new()
            },
            false,
            0,
        );
    }
    if n == 0 || (k as usize) > n || g.max_degree() as u32 + 1 < k {
        return (Vec::new(), false, 0);
    }
    assert!(k <= 64, "b-coloring search supports at most 64 colors");
    let mut solver = BSolver::new(g, k, deadline, max_solutions);
    solver.search(0, 0);
    (solver.solutions, solver.timed_out, solver.nodes)
}

/// A b-coloring with exactly `k` colors, or `None` if there is none.
pub fn has_b_coloring(g: &Graph, k: u32) -> Option<Coloring> {
    b_search(g, k, None, 1).0.into_iter().next()
}

/// Budgeted variant of [`has_b_coloring`] for long probes.
pub fn has_b_coloring_within(g: &Graph, k: u32, deadline: Option<Instant>) -> SearchOutcome {
    let (mut sols, timed_out, _) = b_search(g, k, deadline, 1);
    match sols.pop() {
        Some(c) => SearchOutcome::Found(c),
        None if timed_out => SearchOutcome::TimedOut,
        None => SearchOutcome::Exhausted,
    }
}

/// All b-colorings with exactly `k` colors, one representative per color
/// renaming class (colors are numbered by first appearance along the vertex
/// order). `max_solutions` caps the enumeration.
pub fn b_colorings_canonical(g: &Graph, k: u32, max_solutions: usize) -> Vec<Coloring> {
    b_search(g, k, None, max_solutions).0
}

/// Every `k` in `[χ(G), Δ(G)+1]` admitting a b-coloring.
pub fn b_spectrum(g: &Graph) -> BTreeSet<u32> {
    let n = g.n();
    if n == 0 {
        return BTreeSet::new();
    }
    let chi = chromatic_number(g);
    let hi = (g.max_degree() as u32 + 1).min(n as u32);
    let spectrum: BTreeSet<u32> = (chi..=hi)
        .filter(|&k| has_b_coloring(g, k).is_some())
        .collect();
    // Every optimal coloring is a b-coloring, so χ(G) = min S_b(G).
    debug_assert!(spectrum.contains(&chi));
    spectrum
}

/// Largest `k` admitting a b-coloring.
pub fn b_chromatic_number(g: &Graph) -> u32 {
    b_spectrum(g).into_iter().next_back().unwrap_or(0)
}

/// True iff the b-spectrum is the whole integer interval `[χ(G), b(G)]`.
pub fn is_b_continuous(g: &Graph) -> bool {
    let spectrum = b_spectrum(g);
    match (spectrum.first(), spectrum.last()) {
        (Some(&lo), Some(&hi)) => spectrum.len() == (hi - lo + 1) as usize,
        _ => true,
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

/// Spectra computed by exhaustive enumeration of all surjective assignments
/// `V(G) -> {0..k}` for each `k <= k_max`, filtered by the coloring
/// predicates. Values are exact within the explored range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSpectra {
    pub k_max: u32,
    /// `k` for which a surjective proper coloring with exactly `k` colors
    /// exists.
    pub proper: BTreeSet<u32>,
    pub b_spectrum: BTreeSet<u32>,
    pub fall_spectrum: BTreeSet<u32>,
    /// Total proper assignments visited across all k (pre-surjectivity).
    pub proper_assignments: u64,
}

/// Exhaustive check of every `k <= k_max`; refuses when `k_max^n` exceeds
/// `10^9`. Enumeration prunes only on properness, so b-/fall-filtering stays
/// independent of the backtracking solvers above.
pub fn oracle_spectra(g: &Graph, k_max: u32) -> Result<OracleSpectra, SpectraError> {
    let n = g.n();
    let total = (k_max as u128).checked_pow(n as u32);
    if total.is_none_or(|t| t > 1_000_000_000) {
        return Err(SpectraError::OracleGuardExceeded { k_max, n });
    }
    let mut out = OracleSpectra {
        k_max,
        proper: BTreeSet::new(),
        b_spectrum: BTreeSet::new(),
        fall_spectrum: BTreeSet::new(),
        proper_assignments: 0,
    };
    // Earlier neighbors of each vertex, for incremental properness.
    let earlier: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().filter(|&w| w < v).collect())
        .collect();
    for k in 1..=k_max.min(n.max(1) as u32) {
        let mut colors = vec![0u32; n];
        let mut flags = (false, false, false); // (proper, b, fall)
        enumerate_proper(
            g,
            &earlier,
            k,
            0,
            0,
            &mut colors,
            &mut out.proper_assignments,
            &mut flags,
        );
        if flags.0 {
            out.proper.insert(k);
        }
        if flags.1 {
            out.b_spectrum.insert(k);
        }
        if flags.2 {
            out.fall_spectrum.insert(k);
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_proper(
    g: &Graph,
    earlier: &[Vec<usize>],
    k: u32,
    v: usize,
    used_mask: u64,
    colors: &mut Vec<u32>,
    assignments: &mut u64,
    flags: &mut (bool, bool, bool),
) {
    if flags.2 {
        return; // fall implies b implies proper: everything is decided
    }
    if v == g.n() {
        *assignments += 1;
        if used_mask == low_mask(k) {
            flags.0 = true;
            if !flags.1 && assignment_is_b_coloring(g, colors, k) {
                flags.1 = true;
            }
            if flags.1 && assignment_is_fall_coloring(g, colors, k) {
                flags.2 = true;
            }
        }
        return;
    }
    'next_color: for c in 0..k {
        for &w in &earlier[v] {
            if colors[w] == c {
                continue 'next_color;
            }
        }
        colors[v] = c;
        enumerate_proper(
            g,
            earlier,
            k,
            v + 1,
            used_mask | 1 << c,
            colors,
            assignments,
            flags,
        );
    }
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: f64,
}

/// Everything the solvers know about one graph: χ, both spectra, the derived
/// quantities, and solver statistics.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub chi: u32,
    pub b_spectrum: BTreeSet<u32>,
    pub fall_spectrum: BTreeSet<u32>,
    pub b: u32,
    pub f1: Option<u32>,
    pub f2: Option<u32>,
    pub b_continuous: bool,
    pub stats: SearchStats,
}

pub fn spectrum_report(g: &Graph) -> SpectrumReport {
    let start = Instant::now();
    let mut nodes = 0u64;
    let (chi_coloring, chi_nodes) = chromatic_counted(g);
    nodes += chi_nodes;
    let chi = chi_coloring.k();
    let n = g.n() as u32;
    let mut b_spectrum = BTreeSet::new();
    if n > 0 {
        for k in chi..=(g.max_degree() as u32 + 1).min(n) {
            let (sols, _, used) = b_search(g, k, None, 1);
            nodes += used;
            if !sols.is_empty() {
                b_spectrum.insert(k);
            }
        }
    }
    let mut fall_spectrum = BTreeSet::new();
    if n > 0 {
        for k in chi..=(g.min_degree() as u32 + 1).min(n) {
            let (outcome, used) = fall_search(g, k, None);
            nodes += used;
            if matches!(outcome, SearchOutcome::Found(_)) {
                fall_spectrum.insert(k);
            }
        }
    }
    let b = b_spectrum.last().copied().unwrap_or(chi);
    let b_continuous = b_spectrum.len() == (b.saturating_sub(chi) + 1) as usize || n == 0;
    SpectrumReport {
        chi,
        b,
        f1: fall_spectrum.first().copied(),
        f2: fall_spectrum.last().copied(),
        b_continuous,
        b_spectrum,
        fall_spectrum,
        stats: SearchStats {
            nodes,
            elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
        },
    }
}
