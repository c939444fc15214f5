//! Finite simple undirected graphs on vertices `0..n`, with the named
//! constructions and structural analysis (chordality, clique number) the rest
//! of the library builds on.
//!
//! Graphs are immutable once constructed and cheap to share across threads.

use crate::bitset::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("{family} requires {requirement}, got {got}")]
    InvalidSize {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
}

/// A simple undirected graph: per-vertex neighbor bitsets, no loops,
/// symmetric adjacency. Optional per-vertex display labels survive products.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.edge_count())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(n); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; endpoints
    /// must lie in `0..n` and loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::edgeless(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|ls| ls[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label if present, its index otherwise.
    pub fn vertex_name(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        }
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.vertices().any(|v| self.degree(v) == 0)
    }

    /// Subgraph induced by `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::edgeless(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

/// Cycle `C_n`; requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidSize {
            family: "cycle",
            requirement: "n >= 3",
            got: n,
        });
    }
    let mut g = Graph::edgeless(n);
    for v in 0..n {
        g.add_edge_unchecked(v, (v + 1) % n);
    }
    Ok(g)
}

/// Path on `n` vertices (`n - 1` edges).
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidSize {
            family: "path",
            requirement: "n >= 1",
            got: n,
        });
    }
    let mut g = Graph::edgeless(n);
    for v in 0..n - 1 {
        g.add_edge_unchecked(v, v + 1);
    }
    Ok(g)
}

/// Complete bipartite graph `K_{p,q}`: part A is `0..p`, part B is `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, GraphError> {
    if p < 1 || q < 1 {
        return Err(GraphError::InvalidSize {
            family: "complete_bipartite",
            requirement: "both parts >= 1",
            got: p.min(q),
        });
    }
    let mut g = Graph::edgeless(p + q);
    for u in 0..p {
        for v in p..p + q {
            g.add_edge_unchecked(u, v);
        }
    }
    Ok(g)
}

/// Crown graph: `K_{n,n}` minus a perfect matching. Part A is `0..n`, part B
/// is `n..2n`, with `a_i ~ b_j` iff `i != j`. It is (n-1)-regular.
pub fn crown(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidSize {
            family: "crown",
            requirement: "n >= 2",
            got: n,
        });
    }
    let mut g = Graph::edgeless(2 * n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                g.add_edge_unchecked(i, n + j);
            }
        }
    }
    Ok(g)
}

/// A pair `(G, H)` witnessing that the b-chromatic number is not monotone
/// under induced subgraphs: `H = crown(3)` sits inside `G` on vertices `0..6`
/// under the identity embedding, yet `b(G) = 2 < 3 = b(H)`.
///
/// `G` extends `H` by `u = 6` complete to part A, `v = 7` complete to part B,
/// and the edge `uv`.
pub fn non_monotone_pair() -> (Graph, Graph) {
    let h = crown(3).unwrap();
    let mut edges = h.edges();
    let (u, v) = (6, 7);
    for a in 0..3 {
        edges.push((u, a));
    }
    for b in 3..6 {
        edges.push((v, b));
    }
    edges.push((u, v));
    let g = Graph::from_edges(8, &edges).unwrap();
    (g, h)
}

/// The 61-vertex chordal graph with minimum degree 6, clique number 7 and no
/// fall-coloring, built by gluing two blocks along an edge.
///
/// Layout:
/// - `0..6`: path `v1..v6` (so `v3 = 2`, `v4 = 3`);
/// - `6`: a vertex `u` adjacent to every path vertex;
/// - `7, 8`: `u1, u2`, completing `{u1, u2, v3, v4}` to a clique
///   (the gluing identifies `u3 = v3`, `u4 = v4`);
/// - `9, 10`: `x, y` with edges `xy, xu1, xu2, yu1, yu2`;
/// - `11`: `z1 ~ {u1, v3}`; `12`: `z2 ~ {u2, v4}`;
/// - `13..61`: eight pending 6-cliques, one joined to each of
///   `v1, v2, v5, v6, z1, z2, x, y` (each forms a `K_7` with its anchor).
pub fn kaul_mitillos_counterexample() -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // path v1..v6 = 0..5
    for i in 0..5 {
        edges.push((i, i + 1));
    }
    // u = 6 joined to the whole path
    for i in 0..6 {
        edges.push((6, i));
    }
    // clique {u1=7, u2=8, v3=2, v4=3}; edge (2,3) already present from the path
    let (u1, u2, v3, v4) = (7, 8, 2, 3);
    edges.extend([(u1, u2), (u1, v3), (u1, v4), (u2, v3), (u2, v4)]);
    // x = 9, y = 10
    let (x, y) = (9, 10);
    edges.extend([(x, y), (x, u1), (x, u2), (y, u1), (y, u2)]);
    // z1 = 11, z2 = 12
    let (z1, z2) = (11, 12);
    edges.extend([(z1, u1), (z1, v3), (z2, u2), (z2, v4)]);
    // pending K_6 joined to each anchor
    let mut next = 13;
    for anchor in [0, 1, 4, 5, z1, z2, x, y] {
        let clique: Vec<usize> = (next..next + 6).collect();
        next += 6;
        for (i, &a) in clique.iter().enumerate() {
            edges.push((anchor, a));
            for &b in &clique[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::from_edges(61, &edges).unwrap();
    debug_assert_eq!(next, 61);
    g
}

// ---------------------------------------------------------------------------
// Chordality
// ---------------------------------------------------------------------------

/// Outcome of the chordality test: a perfect elimination ordering, or a
/// chordless cycle of length at least 4 as a counter-witness.
#[derive(Debug, Clone)]
pub enum Chordality {
    Chordal { elimination_order: Vec<usize> },
    NotChordal { hole: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Maximum-cardinality search visit order (ties broken by lowest index).
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Tests chordality by maximum-cardinality search followed by verification of
/// the candidate perfect elimination ordering. On failure the returned hole is
/// a chordless cycle of length >= 4 (verified before returning).
pub fn chordality(g: &Graph) -> Chordality {
    let n = g.n();
    // Elimination order = reverse MCS visit order.
    let mut elim: Vec<usize> = mcs_order(g);
    elim.reverse();
    let mut position = vec![0usize; n];
    for (i, &v) in elim.iter().enumerate() {
        position[v] = i;
    }
    // Standard check: for each v, its later neighbors minus the earliest of
    // them must all be adjacent to that earliest one.
    for &v in &elim {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&w| position[w] > position[v])
            .collect();
        if let Some(&p) = later.iter().min_by_key(|&&w| position[w]) {
            for &w in &later {
                if w != p && !g.adjacent(p, w) {
                    let hole = find_hole(g).expect("PEO check failed, so a hole must exist");
                    return Chordality::NotChordal { hole };
                }
            }
        }
    }
    Chordality::Chordal {
        elimination_order: elim,
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_chordal()
}

/// Finds a chordless cycle of length >= 4, if any: for non-adjacent x, y with
/// a common neighbor v, a shortest x-y path avoiding N[v]\{x,y} closes one.
fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).iter().collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.adjacent(x, y) {
                    continue;
                }
                let mut allowed = VertexSet::full(n);
                allowed.difference_with(g.neighbors(v));
                allowed.remove(v);
                allowed.insert(x);
                allowed.insert(y);
                if let Some(p) = shortest_path_within(g, &allowed, x, y) {
                    let mut hole = vec![v];
                    hole.extend(p);
                    debug_assert!(verify_hole(g, &hole));
                    return Some(hole);
                }
            }
        }
    }
    None
}

fn shortest_path_within(g: &Graph, allowed: &VertexSet, from: usize, to: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = VertexSet::new(n);
    seen.insert(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).iter() {
            if allowed.contains(w) && !seen.contains(w) {
                seen.insert(w);
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// A hole is a cycle of length >= 4 whose only edges are the consecutive ones.
pub fn verify_hole(g: &Graph, hole: &[usize]) -> bool {
    let len = hole.len();
    if len < 4 {
        return false;
    }
    for i in 0..len {
        for j in i + 1..len {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if g.adjacent(hole[i], hole[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Clique number
// ---------------------------------------------------------------------------

/// Size of a maximum clique. Linear along a perfect elimination ordering when
/// the graph is chordal, exact branch-and-bound with a greedy coloring bound
/// otherwise.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum clique, as a sorted vertex list.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    if let Chordality::Chordal { elimination_order } = chordality(g) {
        return max_clique_along_peo(g, &elimination_order);
    }
    let mut best: Vec<usize> = vec![];
    let mut current: Vec<usize> = vec![];
    // Vertices in descending-degree order; ties by index.
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let candidates = VertexSet::full(g.n());
    expand_clique(g, &order, &candidates, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn max_clique_along_peo(g: &Graph, elim: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut position = vec![0usize; n];
    for (i, &v) in elim.iter().enumerate() {
        position[v] = i;
    }
    let mut best: Vec<usize> = vec![];
    for &v in elim {
        let mut clique: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&w| position[w] > position[v])
            .collect();
        clique.push(v);
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Branch and bound with a greedy-coloring bound: a candidate in greedy color
/// class `c` extends the current clique by at most `c + 1` vertices.
fn expand_clique(
    g: &Graph,
    order: &[usize],
    candidates: &VertexSet,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedily color the candidate subgraph; record (vertex, color) in
    // coloring order so colors are non-decreasing along `colored`.
    let mut colored: Vec<(usize, usize)> = Vec::new();
    let mut class_members: Vec<VertexSet> = Vec::new();
    for &v in order.iter().filter(|&&v| candidates.contains(v)) {
        let mut c = 0;
        loop {
            if c == class_members.len() {
                class_members.push(VertexSet::new(g.n()));
            }
            if class_members[c].is_disjoint(g.neighbors(v)) {
                class_members[c].insert(v);
                colored.push((v, c));
                break;
            }
            c += 1;
        }
    }
    // Branch from the highest color down; once the bound fails it fails for
    // every remaining (lower-colored) candidate as well.
    colored.sort_by_key(|&(_, c)| c);
    let mut cand = candidates.clone();
    for &(v, color) in colored.iter().rev() {
        if current.len() + color < best.len() {
            return;
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.neighbors(v));
        expand_clique(g, order, &next, current, best);
        current.pop();
        cand.remove(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_basics() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.adjacency(), complete(3).adjacency());

        let g = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);

        // duplicates collapse
        let a = Graph::from_edges(4, &[(0, 1), (0, 1)]).unwrap();
        let b = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(a.adjacency(), b.adjacency());
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn named_families() {
        assert_eq!(complete(4).edge_count(), 6);
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.min_degree(), 2);
        assert_eq!(c5.max_degree(), 2);
        assert_eq!(path(6).unwrap().edge_count(), 5);
        assert!(cycle(2).is_err());
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
    }

    #[test]
    fn crown_shape() {
        // crown(3) is the 6-cycle
        let c = crown(3).unwrap();
        assert_eq!(c.edge_count(), 6);
        assert!(c.vertices().all(|v| c.degree(v) == 2));

        // crown(2) is a perfect matching on 4 vertices
        let c2 = crown(2).unwrap();
        assert_eq!(c2.edges(), vec![(0, 3), (1, 2)]);

        assert!(crown(1).is_err());

        // (n-1)-regular with n^2 - n edges
        for n in 2..=8 {
            let c = crown(n).unwrap();
            assert_eq!(c.edge_count(), n * n - n);
            assert!(c.vertices().all(|v| c.degree(v) == n - 1));
        }
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive() {
        for g in [
            complete(5),
            crown(4).unwrap(),
            kaul_mitillos_counterexample(),
            non_monotone_pair().0,
        ] {
            for u in g.vertices() {
                assert!(!g.adjacent(u, u));
                for v in g.vertices() {
                    assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
                }
            }
        }
    }

    #[test]
    fn chordality_examples() {
        assert!(is_chordal(&complete(5)));
        assert!(is_chordal(&path(7).unwrap()));
        match chordality(&cycle(4).unwrap()) {
            Chordality::NotChordal { hole } => assert_eq!(hole.len(), 4),
            _ => panic!("C_4 must not be chordal"),
        }
        match chordality(&cycle(6).unwrap()) {
            Chordality::NotChordal { hole } => {
                assert!(verify_hole(&cycle(6).unwrap(), &hole));
                assert_eq!(hole.len(), 6);
            }
            _ => panic!("C_6 must not be chordal"),
        }
    }

    #[test]
    fn peo_is_verified_when_chordal() {
        // A chordal graph: two triangles sharing an edge plus a pendant.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        match chordality(&g) {
            Chordality::Chordal { elimination_order } => {
                let mut position = vec![0; g.n()];
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
                        for &b in &later[i + 1..] {
                            assert!(g.adjacent(a, b), "later neighbors of {v} must form a clique");
                        }
                    }
                }
            }
            _ => panic!("graph is chordal"),
        }
    }

    #[test]
    fn clique_number_examples() {
        assert_eq!(clique_number(&complete(6)), 6);
        assert_eq!(clique_number(&cycle(5).unwrap()), 2);
        assert_eq!(clique_number(&crown(4).unwrap()), 2);
        assert_eq!(clique_number(&complete_bipartite(3, 3).unwrap()), 2);
        // Petersen-free sanity: C_5 plus a chord has a triangle.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert_eq!(clique_number(&g), 3);
    }

    #[test]
    fn counterexample_structure() {
        let g = kaul_mitillos_counterexample();
        assert_eq!(g.n(), 61);
        assert_eq!(g.min_degree(), 6);
        assert_eq!(clique_number(&g), 7);
        assert!(is_chordal(&g));
    }

    #[test]
    fn non_monotone_pair_embeds_h() {
        let (g, h) = non_monotone_pair();
        assert_eq!(g.n(), 8);
        assert_eq!(h.n(), 6);
        let induced = g.induced(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(induced.adjacency(), h.adjacency());
    }

    #[test]
    fn induced_subgraph() {
        let g = cycle(5).unwrap();
        let sub = g.induced(&[0, 1, 2]);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
    }
}
