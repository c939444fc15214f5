//! Adjacency products: a product is described by the set of coordinate
//! relation pairs under which two product vertices are adjacent.
//!
//! For distinct product vertices `a = (u_a, v_a)` and `b = (u_b, v_b)` each
//! coordinate pair is in exactly one of three relations — equal, adjacent, or
//! neither — and `(Equal, Equal)` is impossible. A [`ProductSpec`] is the set
//! of allowed relation pairs; the five classical products are fixed subsets.

use crate::graph::{Graph, GraphError};

/// Relation between two vertices of the same factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoordRelation {
    Equal,
    Adjacent,
    Neither,
}

impl CoordRelation {
    pub fn of(g: &Graph, a: usize, b: usize) -> CoordRelation {
        if a == b {
            CoordRelation::Equal
        } else if g.adjacent(a, b) {
            CoordRelation::Adjacent
        } else {
            CoordRelation::Neither
        }
    }
}

use CoordRelation::{Adjacent as A, Equal as E, Neither as N};

/// The eight admissible relation pairs, in mask bit order. `(Equal, Equal)`
/// cannot occur for distinct product vertices and is not representable.
pub const PAIR_ORDER: [(CoordRelation, CoordRelation); 8] =
    [(E, A), (E, N), (A, E), (A, A), (A, N), (N, E), (N, A), (N, N)];

fn pair_bit(first: CoordRelation, second: CoordRelation) -> Option<u8> {
    PAIR_ORDER
        .iter()
        .position(|&(f, s)| f == first && s == second)
        .map(|i| i as u8)
}

/// An adjacency product: `(u_a,v_a) ~ (u_b,v_b)` iff the pair of coordinate
/// relations is in the allowed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpec {
    allowed: u8,
    name: Option<String>,
}

impl ProductSpec {
    /// Cartesian product: one coordinate equal, the other adjacent.
    pub fn cartesian() -> Self {
        Self::from_pairs("cartesian", &[(E, A), (A, E)])
    }

    /// Direct (tensor) product: both coordinates adjacent.
    pub fn direct() -> Self {
        Self::from_pairs("direct", &[(A, A)])
    }

    /// Lexicographic product `G[H]`: first coordinates adjacent, or equal
    /// first coordinates with adjacent second coordinates.
    pub fn lexicographic() -> Self {
        Self::from_pairs("lexicographic", &[(E, A), (A, E), (A, A), (A, N)])
    }

    /// Strong product: cartesian plus direct.
    pub fn strong() -> Self {
        Self::from_pairs("strong", &[(E, A), (A, E), (A, A)])
    }

    /// Co-normal product: first coordinates adjacent or second coordinates
    /// adjacent.
    pub fn co_normal() -> Self {
        Self::from_pairs("co-normal", &[(E, A), (A, E), (A, A), (A, N), (N, A)])
    }

    /// The five named products, in a fixed order.
    pub fn all_named() -> [ProductSpec; 5] {
        [
            Self::cartesian(),
            Self::direct(),
            Self::lexicographic(),
            Self::strong(),
            Self::co_normal(),
        ]
    }

    fn from_pairs(name: &str, pairs: &[(CoordRelation, CoordRelation)]) -> Self {
        let mut allowed = 0u8;
        for &(f, s) in pairs {
            allowed |= 1 << pair_bit(f, s).expect("(Equal, Equal) is not an admissible pair");
        }
        Self {
            allowed,
            name: Some(name.to_string()),
        }
    }

    /// Builds a custom product from a bitmask over [`PAIR_ORDER`]: bit `i`
    /// allows pair `PAIR_ORDER[i]`. Masks above `0xFF` are rejected since the
    /// ninth combination `(Equal, Equal)` is forbidden.
    pub fn from_mask(mask: u16) -> Result<Self, String> {
        if mask > 0xFF {
            return Err(format!(
                "mask {mask:#b} has bits beyond the 8 admissible relation pairs \
                 ((Equal, Equal) is forbidden)"
            ));
        }
        Ok(Self {
            allowed: mask as u8,
            name: None,
        })
    }

    pub fn mask(&self) -> u8 {
        self.allowed
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn allows(&self, first: CoordRelation, second: CoordRelation) -> bool {
        match pair_bit(first, second) {
            Some(bit) => self.allowed >> bit & 1 == 1,
            None => false, // (Equal, Equal): distinct vertices never reach it
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (CoordRelation, CoordRelation)> + '_ {
        PAIR_ORDER
            .iter()
            .enumerate()
            .filter(move |(i, _)| self.allowed >> i & 1 == 1)
            .map(|(_, &p)| p)
    }
}

/// Row-major index of the product vertex `(u, v)`: `u * |V(H)| + v`.
pub fn product_index(u: usize, v: usize, h_n: usize) -> usize {
    u * h_n + v
}

/// Splits a product index back into coordinates.
pub fn product_coords(idx: usize, h_n: usize) -> (usize, usize) {
    (idx / h_n, idx % h_n)
}

/// The adjacency product of `g` and `h` under `spec`, on `|V(G)|*|V(H)|`
/// vertices in row-major order, labeled `(u,v)` by factor vertex names.
pub fn product(g: &Graph, h: &Graph, spec: &ProductSpec) -> Graph {
    let (gn, hn) = (g.n(), h.n());
    let n = gn * hn;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for a in 0..n {
        let (ua, va) = product_coords(a, hn);
        for b in a + 1..n {
            let (ub, vb) = product_coords(b, hn);
            let r1 = CoordRelation::of(g, ua, ub);
            let r2 = CoordRelation::of(h, va, vb);
            if spec.allows(r1, r2) {
                edges.push((a, b));
            }
        }
    }
    let labels = (0..n)
        .map(|i| {
            let (u, v) = product_coords(i, hn);
            format!("({},{})", g.vertex_name(u), h.vertex_name(v))
        })
        .collect();
    Graph::from_edges(n, &edges).unwrap().with_labels(labels)
}

/// Left-to-right fold of the binary product over several factors.
pub fn product_all(factors: &[&Graph], spec: &ProductSpec) -> Graph {
    assert!(!factors.is_empty(), "product of zero factors is undefined");
    let mut acc = factors[0].clone();
    for h in &factors[1..] {
        acc = product(&acc, h, spec);
    }
    acc
}

/// Which coordinate the fiber anchor fixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// Product vertices whose fixed coordinate equals `anchor`: the vertex set of
/// the fiber of `anchor` in `G ⊙ H` (the set does not depend on the product).
pub fn fiber(g: &Graph, h: &Graph, anchor: usize, side: Side) -> Result<Vec<usize>, GraphError> {
    match side {
        Side::First => {
            if anchor >= g.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: anchor,
                    n: g.n(),
                });
            }
            Ok((0..h.n()).map(|v| product_index(anchor, v, h.n())).collect())
        }
        Side::Second => {
            if anchor >= h.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: anchor,
                    n: h.n(),
                });
            }
            Ok((0..g.n()).map(|u| product_index(u, anchor, h.n())).collect())
        }
    }
}

/// True iff every pair of distinct vertices is adjacent.
pub fn is_complete(g: &Graph) -> bool {
    let n = g.n();
    g.vertices().all(|v| g.degree(v) == n - 1)
}

/// True iff the edge set of `g` is contained in the edge set of `h`
/// (same vertex count required).
pub fn is_subgraph(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.vertices().all(|v| g.neighbors(v).is_subset(h.neighbors(v)))
}

/// The image of `g` under the coordinate swap `(u,v) -> (v,u)`, where `g` is a
/// product with second-factor size `h_n` and first-factor size `g_n`.
pub fn swap_coordinates(g: &Graph, g_n: usize, h_n: usize) -> Graph {
    assert_eq!(g.n(), g_n * h_n);
    let mut edges = Vec::with_capacity(g.edge_count());
    for (a, b) in g.edges() {
        let (ua, va) = product_coords(a, h_n);
        let (ub, vb) = product_coords(b, h_n);
        edges.push((product_index(va, ua, g_n), product_index(vb, ub, g_n)));
    }
    Graph::from_edges(g.n(), &edges).unwrap()
}
