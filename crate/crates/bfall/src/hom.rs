//! Vertex maps between graphs and the four homomorphism classes: plain,
//! b-homomorphism, domatic, and Type II (homomorphism + domatic) — together
//! with the product lifting `(u, v) -> (u, f(v))` and the bridge between
//! proper colorings and maps into complete graphs.

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::products::{is_complete, product, product_coords, product_index, ProductSpec};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("map covers {got} vertices but the source has {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error("image {image} of vertex {vertex} is outside the target")]
    ImageOutOfRange { vertex: usize, image: usize },
    #[error("search guard: source has {source_n} > 12 and target has {target_n} > 6 vertices")]
    SearchTooLarge { source_n: usize, target_n: usize },
    #[error("target is not a complete graph")]
    TargetNotComplete,
    #[error("map is not a homomorphism")]
    NotHomomorphism,
}

/// A total function between the vertex sets of two graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    source: Graph,
    target: Graph,
    map: Vec<usize>,
}

impl VertexMap {
    pub fn new(source: Graph, target: Graph, map: Vec<usize>) -> Result<Self, HomError> {
        if map.len() != source.n() {
            return Err(HomError::SizeMismatch {
                got: map.len(),
                expected: source.n(),
            });
        }
        if let Some(v) = (0..map.len()).find(|&v| map[v] >= target.n()) {
            return Err(HomError::ImageOutOfRange {
                vertex: v,
                image: map[v],
            });
        }
        Ok(VertexMap { source, target, map })
    }

    pub fn identity(g: &Graph) -> Self {
        VertexMap {
            source: g.clone(),
            target: g.clone(),
            map: g.vertices().collect(),
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    /// Preimage lists indexed by target vertex.
    pub fn preimages(&self) -> Vec<Vec<usize>> {
        let mut pre = vec![Vec::new(); self.target.n()];
        for (v, &img) in self.map.iter().enumerate() {
            pre[img].push(v);
        }
        pre
    }

    pub fn is_surjective(&self) -> bool {
        self.preimages().iter().all(|p| !p.is_empty())
    }
}

/// Serialized form: `{"source_n": ..., "target_n": ..., "map": [...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct VertexMapJson {
    pub source_n: usize,
    pub target_n: usize,
    pub map: Vec<usize>,
}

impl From<&VertexMap> for VertexMapJson {
    fn from(m: &VertexMap) -> Self {
        VertexMapJson {
            source_n: m.source.n(),
            target_n: m.target.n(),
            map: m.map.clone(),
        }
    }
}

// ---------------------------------------------------------------------------
// Class checkers
// ---------------------------------------------------------------------------

/// Every source edge maps to a target edge (so endpoints stay distinct).
pub fn is_homomorphism(m: &VertexMap) -> bool {
    m.source
        .edges()
        .into_iter()
        .all(|(u, v)| m.map[u] != m.map[v] && m.target.adjacent(m.map[u], m.map[v]))
}

/// Homomorphism such that every target vertex `u` has a preimage `u'` whose
/// neighborhood maps *onto* the full neighborhood of `u` (set equality).
/// Such a map is automatically surjective.
pub fn is_b_homomorphism(m: &VertexMap) -> bool {
    if !is_homomorphism(m) {
        return false;
    }
    let pre = m.preimages();
    for u in m.target.vertices() {
        let witness = pre[u].iter().any(|&u_prime| {
            let mut image = crate::bitset::VertexSet::new(m.target.n());
            for w in m.source.neighbors(u_prime).iter() {
                image.insert(m.map[w]);
            }
            image == *m.target.neighbors(u)
        });
        if !witness {
            return false;
        }
    }
    true
}

/// For every target edge `u'v'` and every `u` in the preimage of `u'`, some
/// preimage of `v'` is adjacent to `u`. Not necessarily a homomorphism.
pub fn is_domatic(m: &VertexMap) -> bool {
    let pre = m.preimages();
    for u_prime in m.target.vertices() {
        for v_prime in m.target.neighbors(u_prime).iter() {
            for &u in &pre[u_prime] {
                if !pre[v_prime].iter().any(|&v| m.source.adjacent(u, v)) {
                    return false;
                }
            }
        }
    }
    true
}

/// A homomorphism that is also domatic.
pub fn is_type2(m: &VertexMap) -> bool {
    is_homomorphism(m) && is_domatic(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapClass {
    Homomorphism,
    BHomomorphism,
    Domatic,
    TypeTwo,
}

impl MapClass {
    pub fn holds(self, m: &VertexMap) -> bool {
        match self {
            MapClass::Homomorphism => is_homomorphism(m),
            MapClass::BHomomorphism => is_b_homomorphism(m),
            MapClass::Domatic => is_domatic(m),
            MapClass::TypeTwo => is_type2(m),
        }
    }
}

// ---------------------------------------------------------------------------
// Lifting along products
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftSide {
    /// `G ⊙ H -> G ⊙ F`, `(u, v) -> (u, f(v))`.
    Left,
    /// `H ⊙ G -> F ⊙ G`, `(v, u) -> (f(v), u)`.
    Right,
}

/// Lifts `m: H -> F` across the product with `g`: homomorphisms lift to
/// homomorphisms, b-homomorphisms to b-homomorphisms, and surjective domatic
/// maps to (surjective) domatic maps, on either side.
pub fn lift(m: &VertexMap, g: &Graph, spec: &ProductSpec, side: LiftSide) -> VertexMap {
    match side {
        LiftSide::Left => {
            let source = product(g, &m.source, spec);
            let target = product(g, &m.target, spec);
            let h_n = m.source.n();
            let f_n = m.target.n();
            let map = (0..source.n())
                .map(|idx| {
                    let (u, v) = product_coords(idx, h_n);
                    product_index(u, m.map[v], f_n)
                })
                .collect();
            VertexMap { source, target, map }
        }
        LiftSide::Right => {
            let source = product(&m.source, g, spec);
            let target = product(&m.target, g, spec);
            let g_n = g.n();
            let map = (0..source.n())
                .map(|idx| {
                    let (v, u) = product_coords(idx, g_n);
                    product_index(m.map[v], u, g_n)
                })
                .collect();
            VertexMap { source, target, map }
        }
    }
}

// ---------------------------------------------------------------------------
// Colorings as maps into complete graphs
// ---------------------------------------------------------------------------

/// A proper k-coloring, read as a homomorphism into `K_k`.
pub fn coloring_to_map(g: &Graph, c: &Coloring) -> VertexMap {
    let target = crate::graph::complete(c.k() as usize);
    VertexMap {
        source: g.clone(),
        target,
        map: c.colors().iter().map(|&c| c as usize).collect(),
    }
}

/// Reads a homomorphism into a complete graph back as a proper coloring
/// (compacted). Errors if the target is not complete or `m` is not a
/// homomorphism.
pub fn map_to_coloring(m: &VertexMap) -> Result<Coloring, HomError> {
    if !is_complete(&m.target) {
        return Err(HomError::TargetNotComplete);
    }
    if !is_homomorphism(m) {
        return Err(HomError::NotHomomorphism);
    }
    let raw: Vec<u32> = m.map.iter().map(|&v| v as u32).collect();
    Ok(Coloring::from_assignment(&raw))
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

struct MapSearch<'a> {
    source: &'a Graph,
    target: &'a Graph,
    class: MapClass,
    /// Target candidates in branching order (degree descending, then index).
    candidates: Vec<usize>,
    map: Vec<usize>,
}

const UNMAPPED: usize = usize::MAX;

impl MapSearch<'_> {
    /// True if the partial assignment up to `v` can still extend to a map of
    /// the requested class (conservative checks only).
    fn consistent(&self, v: usize) -> bool {
        match self.class {
            MapClass::Homomorphism | MapClass::BHomomorphism | MapClass::TypeTwo => {
                // every already-mapped edge at v must land on a target edge
                for w in self.source.neighbors(v).iter() {
                    if self.map[w] != UNMAPPED && !self.target.adjacent(self.map[v], self.map[w]) {
                        return false;
                    }
                }
                true
            }
            MapClass::Domatic => {
                // For each mapped u and target neighbor t of its image: u must
                // keep a neighbor that is (or can still become) a preimage of
                // t. Only constraints touching v can have changed.
                let mut affected: Vec<usize> = self
                    .source
                    .neighbors(v)
                    .iter()
                    .filter(|&u| self.map[u] != UNMAPPED)
                    .collect();
                affected.push(v);
                for u in affected {
                    for t in self.target.neighbors(self.map[u]).iter() {
                        let coverable = self.source.neighbors(u).iter().any(|w| {
                            self.map[w] == UNMAPPED || self.map[w] == t
                        });
                        if !coverable {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    fn search(&mut self, v: usize) -> bool {
        if v == self.source.n() {
            let candidate = VertexMap {
                source: self.source.clone(),
                target: self.target.clone(),
                map: self.map.clone(),
            };
            return self.class.holds(&candidate);
        }
        // b-homomorphisms are surjective; prune when coverage is impossible.
        if self.class == MapClass::BHomomorphism {
            let mut covered = vec![false; self.target.n()];
            for &img in self.map.iter().filter(|&&m| m != UNMAPPED) {
                covered[img] = true;
            }
            let uncovered = covered.iter().filter(|&&c| !c).count();
            if uncovered > self.source.n() - v {
                return false;
            }
        }
        for i in 0..self.candidates.len() {
            let t = self.candidates[i];
            self.map[v] = t;
            if self.consistent(v) && self.search(v + 1) {
                return true;
            }
        }
        self.map[v] = UNMAPPED;
        false
    }
}

/// Finds a map of the requested class by backtracking, or `None` when none
/// exists. Guarded to `|V(source)| <= 12` or `|V(target)| <= 6`.
pub fn find_map(source: &Graph, target: &Graph, class: MapClass) -> Result<Option<VertexMap>, HomError> {
    if source.n() > 12 && target.n() > 6 {
        return Err(HomError::SearchTooLarge {
            source_n: source.n(),
            target_n: target.n(),
        });
    }
    if source.n() > 0 && target.n() == 0 {
        return Ok(None);
    }
    let mut candidates: Vec<usize> = target.vertices().collect();
    candidates.sort_by_key(|&t| (std::cmp::Reverse(target.degree(t)), t));
    let mut search = MapSearch {
        source,
        target,
        class,
        candidates,
        map: vec![UNMAPPED; source.n()],
    };
    if search.search(0) {
        Ok(Some(VertexMap {
            source: source.clone(),
            target: target.clone(),
            map: search.map,
        }))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_fall_coloring;
    use crate::graph::{complete, crown, cycle, path, Graph};

    #[test]
    fn identity_is_everything() {
        let g = cycle(5).unwrap();
        let id = VertexMap::identity(&g);
        assert!(is_homomorphism(&id));
        assert!(is_b_homomorphism(&id));
        assert!(is_domatic(&id));
        assert!(is_type2(&id));
    }

    #[test]
    fn constant_map_collapses_edges() {
        let m = VertexMap::new(complete(2), complete(1), vec![0, 0]).unwrap();
        assert!(!is_homomorphism(&m));
        // ...but it is domatic: K_1 has no edges to cover.
        assert!(is_domatic(&m));
    }

    #[test]
    fn coloring_maps() {
        let c5 = cycle(5).unwrap();
        let c = Coloring::from_assignment(&[0, 1, 0, 1, 2]);
        let m = coloring_to_map(&c5, &c);
        assert!(is_homomorphism(&m));
        assert_eq!(map_to_coloring(&m).unwrap(), c);

        // Round trip through a rainbow K_3.
        let k3 = complete(3);
        let rainbow = Coloring::from_assignment(&[0, 1, 2]);
        let m = coloring_to_map(&k3, &rainbow);
        assert!(is_b_homomorphism(&m));
        assert_eq!(map_to_coloring(&m).unwrap(), rainbow);

        // Reverse direction demands a complete target...
        let bad = VertexMap::new(complete(2), path(3).unwrap(), vec![0, 1]).unwrap();
        assert_eq!(map_to_coloring(&bad), Err(HomError::TargetNotComplete));
        // ...and a homomorphism.
        let not_hom = VertexMap::new(complete(2), complete(2), vec![0, 0]).unwrap();
        assert_eq!(map_to_coloring(&not_hom), Err(HomError::NotHomomorphism));
    }

    #[test]
    fn b_homomorphism_examples() {
        // A b-coloring of crown(3) with 3 colors, as a map to K_3.
        let cr = crown(3).unwrap();
        let c = Coloring::from_assignment(&[0, 1, 2, 0, 1, 2]);
        let m = coloring_to_map(&cr, &c);
        assert!(is_b_homomorphism(&m));

        // The proper-but-not-b rainbow on P_3: classes 0 and 2 lack witnesses.
        let p3 = path(3).unwrap();
        let m = coloring_to_map(&p3, &Coloring::from_assignment(&[0, 1, 2]));
        assert!(is_homomorphism(&m));
        assert!(!is_b_homomorphism(&m));
        assert!(!is_domatic(&m));
    }

    #[test]
    fn fall_coloring_is_type2() {
        let cr = crown(3).unwrap();
        let fall = Coloring::from_assignment(&[0, 1, 2, 0, 1, 2]);
        assert!(is_fall_coloring(&cr, &fall).unwrap());
        let m = coloring_to_map(&cr, &fall);
        assert!(is_type2(&m));
        assert!(m.is_surjective());

        // A proper-but-not-fall coloring misses a class somewhere.
        let c5 = cycle(5).unwrap();
        let m = coloring_to_map(&c5, &Coloring::from_assignment(&[0, 1, 0, 1, 2]));
        assert!(!is_type2(&m));
    }

    #[test]
    fn domatic_without_homomorphism() {
        // Map both endpoints of an edge onto adjacent target vertices,
        // swapping: every preimage constraint holds but one edge collapses.
        let src = complete(3);
        let tgt = complete(2);
        let m = VertexMap::new(src, tgt, vec![0, 1, 1]).unwrap();
        assert!(is_domatic(&m));
        assert!(!is_homomorphism(&m));
    }

    #[test]
    fn domatic_into_disconnected_target_need_not_be_surjective() {
        // Two disjoint edges as target; mapping K_2 onto one of them is
        // domatic (the other edge has empty preimages) but not surjective.
        // This is why surjectivity is tracked as a separate flag.
        let target = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let m = VertexMap::new(complete(2), target, vec![0, 1]).unwrap();
        assert!(is_domatic(&m));
        assert!(!m.is_surjective());
    }

    #[test]
    fn find_map_examples() {
        let c5 = cycle(5).unwrap();
        let hom = find_map(&c5, &complete(3), MapClass::Homomorphism).unwrap();
        assert!(hom.is_some());
        assert!(is_homomorphism(&hom.unwrap()));

        // No homomorphism from an odd cycle to K_2.
        assert!(find_map(&c5, &complete(2), MapClass::Homomorphism)
            .unwrap()
            .is_none());

        let t2 = find_map(&crown(3).unwrap(), &complete(3), MapClass::TypeTwo).unwrap();
        assert!(t2.is_some());
        assert!(is_type2(&t2.unwrap()));

        // C_5 admits no type II map to K_3 (no fall-coloring) even though a
        // homomorphism exists.
        assert!(find_map(&c5, &complete(3), MapClass::TypeTwo)
            .unwrap()
            .is_none());

        let guard = find_map(&complete(13), &complete(7), MapClass::Homomorphism);
        assert!(matches!(guard, Err(HomError::SearchTooLarge { .. })));
    }

    #[test]
    fn find_map_b_class() {
        let found = find_map(&crown(3).unwrap(), &complete(3), MapClass::BHomomorphism).unwrap();
        assert!(found.is_some());
        assert!(is_b_homomorphism(&found.unwrap()));

        // b-homomorphisms are surjective, so none exists into a bigger clique
        // than the b-chromatic number allows.
        assert!(find_map(&path(3).unwrap(), &complete(3), MapClass::BHomomorphism)
            .unwrap()
            .is_none());
    }

    #[test]
    fn lift_identity_is_identity() {
        let h = cycle(4).unwrap();
        let g = complete(2);
        let id = VertexMap::identity(&h);
        let lifted = lift(&id, &g, &ProductSpec::cartesian(), LiftSide::Left);
        assert_eq!(lifted.map(), (0..8).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn lift_preserves_homomorphism() {
        // C_6 -> K_2 (bipartition) lifted over C_5 on both sides.
        let c6 = cycle(6).unwrap();
        let m = VertexMap::new(c6, complete(2), vec![0, 1, 0, 1, 0, 1]).unwrap();
        assert!(is_homomorphism(&m));
        let g = cycle(5).unwrap();
        for spec in ProductSpec::all_named() {
            for side in [LiftSide::Left, LiftSide::Right] {
                let lifted = lift(&m, &g, &spec, side);
                assert!(is_homomorphism(&lifted), "{:?} {:?}", spec.name(), side);
            }
        }
    }

    #[test]
    fn map_json_shape() {
        let m = VertexMap::new(complete(2), complete(2), vec![1, 0]).unwrap();
        let js = serde_json::to_string(&VertexMapJson::from(&m)).unwrap();
        assert!(js.contains("\"source_n\":2"));
        let back: VertexMapJson = serde_json::from_str(&js).unwrap();
        assert_eq!(back.map, vec![1, 0]);
    }
}
