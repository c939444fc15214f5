//! Colorings and the three verification predicates: proper, b-coloring,
//! fall-coloring — plus the color-class elimination procedure that turns any
//! proper coloring into a b-coloring without adding colors.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices but the graph has {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error("coloring is not proper: edge ({u}, {v}) is monochromatic")]
    NotProper { u: usize, v: usize },
    #[error("color {0} exceeds the declared color count {1}")]
    ColorOutOfRange(u32, u32),
    #[error("color {0} has an empty class; colors must be compacted")]
    EmptyClass(u32),
}

/// A total assignment of colors `0..k` to vertices. Colors are compacted:
/// every class is nonempty, and classes are numbered by first appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    /// Builds a coloring from any total assignment, relabeling colors in
    /// order of first appearance so the result is compacted.
    pub fn from_assignment(raw: &[u32]) -> Coloring {
        let mut relabel: Vec<Option<u32>> = Vec::new();
        let mut next = 0u32;
        let mut colors = Vec::with_capacity(raw.len());
        for &c in raw {
            let c = c as usize;
            if c >= relabel.len() {
                relabel.resize(c + 1, None);
            }
            let new = *relabel[c].get_or_insert_with(|| {
                let v = next;
                next += 1;
                v
            });
            colors.push(new);
        }
        Coloring { colors, k: next }
    }

    /// Accepts an already-compacted assignment with a declared color count,
    /// validating that every color in `0..k` is used.
    pub fn from_compact(colors: Vec<u32>, k: u32) -> Result<Coloring, ColoringError> {
        let mut seen = vec![false; k as usize];
        for &c in &colors {
            if c >= k {
                return Err(ColoringError::ColorOutOfRange(c, k));
            }
            seen[c as usize] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(ColoringError::EmptyClass(missing as u32));
        }
        Ok(Coloring { colors, k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Vertices in color class `i`.
    pub fn class(&self, i: u32) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == i).collect()
    }
}

/// Serialized form: `{"k": ..., "colors": [...]}` with 0-based colors.
#[derive(Debug, Serialize, Deserialize)]
pub struct ColoringJson {
    pub k: u32,
    pub colors: Vec<u32>,
}

impl From<&Coloring> for ColoringJson {
    fn from(c: &Coloring) -> Self {
        ColoringJson {
            k: c.k,
            colors: c.colors.clone(),
        }
    }
}

impl Serialize for Coloring {
    /// Serializes in the documented `{"k": ..., "colors": [...]}` shape.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ColoringJson::from(self).serialize(serializer)
    }
}

impl TryFrom<ColoringJson> for Coloring {
    type Error = ColoringError;

    fn try_from(j: ColoringJson) -> Result<Self, Self::Error> {
        Coloring::from_compact(j.colors, j.k)
    }
}

fn check_size(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::SizeMismatch {
            got: c.len(),
            expected: g.n(),
        });
    }
    Ok(())
}

fn check_proper(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    check_size(g, c)?;
    for (u, v) in g.edges() {
        if c.color(u) == c.color(v) {
            return Err(ColoringError::NotProper { u, v });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Raw-slice predicates. These are the single source of truth; the Coloring
// wrappers below and the brute-force spectra oracle both go through them.
// ---------------------------------------------------------------------------

/// No edge is monochromatic.
pub fn assignment_is_proper(g: &Graph, colors: &[u32]) -> bool {
    g.vertices()
        .all(|u| g.neighbors(u).iter().all(|v| v <= u || colors[u] != colors[v]))
}

/// Generation-stamped scratch space for counting distinct colors around a
/// vertex without reallocating.
struct ColorScratch {
    stamp: Vec<u32>,
    generation: u32,
}

impl ColorScratch {
    fn new(k: u32) -> Self {
        ColorScratch {
            stamp: vec![u32::MAX; k as usize],
            generation: 0,
        }
    }

    fn begin(&mut self) {
        self.generation = self.generation.wrapping_add(1);
    }

    /// Marks a color; returns true the first time it is seen this generation.
    fn mark(&mut self, color: u32) -> bool {
        let slot = &mut self.stamp[color as usize];
        if *slot == self.generation {
            false
        } else {
            *slot = self.generation;
            true
        }
    }

    fn is_marked(&self, color: u32) -> bool {
        self.stamp[color as usize] == self.generation
    }
}

/// Number of distinct colors among the open neighbors of `v`, excluding
/// `v`'s own color.
fn distinct_other_neighbor_colors(
    g: &Graph,
    colors: &[u32],
    v: usize,
    scratch: &mut ColorScratch,
) -> u32 {
    scratch.begin();
    scratch.mark(colors[v]);
    let mut distinct = 0;
    for w in g.neighbors(v).iter() {
        if scratch.mark(colors[w]) {
            distinct += 1;
        }
    }
    distinct
}

/// Every color class contains a b-vertex: a vertex whose neighbors realize
/// every color other than its own.
pub fn assignment_is_b_coloring(g: &Graph, colors: &[u32], k: u32) -> bool {
    let mut class_ok = vec![false; k as usize];
    let mut remaining = k;
    let mut scratch = ColorScratch::new(k);
    for v in g.vertices() {
        let c = colors[v] as usize;
        if class_ok[c] {
            continue;
        }
        if distinct_other_neighbor_colors(g, colors, v, &mut scratch) == k - 1 {
            class_ok[c] = true;
            remaining -= 1;
            if remaining == 0 {
                return true;
            }
        }
    }
    remaining == 0
}

/// Every closed neighborhood contains all `k` colors; equivalently every
/// vertex is a b-vertex.
pub fn assignment_is_fall_coloring(g: &Graph, colors: &[u32], k: u32) -> bool {
    let mut scratch = ColorScratch::new(k);
    g.vertices()
        .all(|v| distinct_other_neighbor_colors(g, colors, v, &mut scratch) == k - 1)
}

// ---------------------------------------------------------------------------
// Coloring-level predicates
// ---------------------------------------------------------------------------

/// True iff `c` is a proper coloring of `g`. Errors only on a size mismatch.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    check_size(g, c)?;
    Ok(assignment_is_proper(g, c.colors()))
}

/// For each color class, the set of its b-vertices. Errors if `c` is not a
/// proper coloring of `g`.
pub fn b_vertices(g: &Graph, c: &Coloring) -> Result<Vec<VertexSet>, ColoringError> {
    check_proper(g, c)?;
    let k = c.k();
    let mut out = vec![VertexSet::new(g.n()); k as usize];
    let mut scratch = ColorScratch::new(k);
    for v in g.vertices() {
        if distinct_other_neighbor_colors(g, c.colors(), v, &mut scratch) == k - 1 {
            out[c.color(v) as usize].insert(v);
        }
    }
    Ok(out)
}

/// True iff every color class contains at least one b-vertex.
pub fn is_b_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    check_proper(g, c)?;
    Ok(assignment_is_b_coloring(g, c.colors(), c.k()))
}

/// True iff every vertex is a b-vertex, i.e. every closed neighborhood sees
/// all `k` colors.
pub fn is_fall_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    check_proper(g, c)?;
    Ok(assignment_is_fall_coloring(g, c.colors(), c.k()))
}

/// Repeatedly eliminates the lowest color class without a b-vertex, recoloring
/// each of its vertices (in ascending index order) with the smallest other
/// color absent from its current neighborhood, until every class has a
/// b-vertex. Never increases the number of colors.
pub fn reduce_to_b_coloring(g: &Graph, c: &Coloring) -> Result<Coloring, ColoringError> {
    check_proper(g, c)?;
    let mut current = c.clone();
    loop {
        let k = current.k();
        let classes = b_vertices(g, &current)?;
        let Some(dead) = classes.iter().position(|s| s.is_empty()) else {
            return Ok(current);
        };
        let dead = dead as u32;
        let mut colors = current.colors().to_vec();
        let mut scratch = ColorScratch::new(k);
        for v in g.vertices() {
            if colors[v] != dead {
                continue;
            }
            scratch.begin();
            for w in g.neighbors(v).iter() {
                scratch.mark(colors[w]);
            }
            // A vertex of a class without b-vertices misses some other color.
            let replacement = (0..k)
                .find(|&cand| cand != dead && !scratch.is_marked(cand))
                .expect("non-b-vertex always has a free color other than its own");
            colors[v] = replacement;
        }
        current = Coloring::from_assignment(&colors);
        debug_assert!(current.k() < k);
        debug_assert!(assignment_is_proper(g, current.colors()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, crown, cycle, path, Graph};

    fn col(raw: &[u32]) -> Coloring {
        Coloring::from_assignment(raw)
    }

    #[test]
    fn compaction() {
        let c = col(&[2, 5, 2, 7]);
        assert_eq!(c.colors(), &[0, 1, 0, 2]);
        assert_eq!(c.k(), 3);
        assert_eq!(c.class(0), vec![0, 2]);
    }

    #[test]
    fn from_compact_validation() {
        assert!(Coloring::from_compact(vec![0, 1, 0], 2).is_ok());
        assert_eq!(
            Coloring::from_compact(vec![0, 2, 2], 3),
            Err(ColoringError::EmptyClass(1))
        );
        assert_eq!(
            Coloring::from_compact(vec![0, 3], 3),
            Err(ColoringError::ColorOutOfRange(3, 3))
        );
    }

    #[test]
    fn proper_examples() {
        let k3 = complete(3);
        assert!(is_proper(&k3, &col(&[0, 1, 2])).unwrap());
        assert!(!is_proper(&k3, &col(&[0, 0, 1])).unwrap());
        let c5 = cycle(5).unwrap();
        assert!(is_proper(&c5, &col(&[0, 1, 0, 1, 2])).unwrap());
        assert!(matches!(
            is_proper(&c5, &col(&[0, 1])),
            Err(ColoringError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn b_vertex_examples() {
        // Rainbow K_n: everyone is a b-vertex.
        let k4 = complete(4);
        let bs = b_vertices(&k4, &col(&[0, 1, 2, 3])).unwrap();
        assert!(bs.iter().all(|s| s.len() == 1));

        // C_5 with (0,1,0,1,2): vertex 4 is the b-vertex of color 2.
        let c5 = cycle(5).unwrap();
        let bs = b_vertices(&c5, &col(&[0, 1, 0, 1, 2])).unwrap();
        assert!(bs[2].contains(4));

        // crown(3) with the 2-coloring by parts: all six vertices.
        let cr = crown(3).unwrap();
        let bs = b_vertices(&cr, &col(&[0, 0, 0, 1, 1, 1])).unwrap();
        assert_eq!(bs[0].len() + bs[1].len(), 6);

        // Improper input is rejected.
        assert!(b_vertices(&c5, &col(&[0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn b_coloring_examples() {
        let cr = crown(3).unwrap();
        // the 3-coloring c(a_i) = c(b_i) = i
        assert!(is_b_coloring(&cr, &col(&[0, 1, 2, 0, 1, 2])).unwrap());

        // P_3 rainbow: classes 0 and 2 have no b-vertices.
        let p3 = path(3).unwrap();
        assert!(!is_b_coloring(&p3, &col(&[0, 1, 2])).unwrap());
        assert!(is_b_coloring(&p3, &col(&[0, 1, 0])).unwrap());
    }

    #[test]
    fn fall_examples() {
        assert!(is_fall_coloring(&complete(4), &col(&[0, 1, 2, 3])).unwrap());
        let cr = crown(3).unwrap();
        assert!(is_fall_coloring(&cr, &col(&[0, 1, 2, 0, 1, 2])).unwrap());
        // No proper 3-coloring of C_5 is a fall-coloring.
        let c5 = cycle(5).unwrap();
        assert!(!is_fall_coloring(&c5, &col(&[0, 1, 0, 1, 2])).unwrap());
    }

    #[test]
    fn fall_restatement_matches_literal_b_vertex_definition() {
        // Cross-validate the closed-neighborhood form against "every vertex is
        // a b-vertex" over all proper colorings with k <= 4 of small graphs.
        let graphs = vec![
            cycle(5).unwrap(),
            crown(3).unwrap(),
            path(4).unwrap(),
            complete(4),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::from_edges(7, &[(0, 1), (0, 2), (1, 2), (3, 4), (5, 6), (2, 3), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            let n = g.n();
            let mut assignment = vec![0u32; n];
            loop {
                let c = Coloring::from_assignment(&assignment);
                if c.k() <= 4 && assignment_is_proper(g, c.colors()) {
                    let all_are_b = b_vertices(g, &c)
                        .unwrap()
                        .iter()
                        .map(|s| s.len())
                        .sum::<usize>()
                        == n;
                    assert_eq!(is_fall_coloring(g, &c).unwrap(), all_are_b);
                }
                // odometer over assignments with colors < 4
                let mut i = 0;
                while i < n {
                    assignment[i] += 1;
                    if assignment[i] < 4 {
                        break;
                    }
                    assignment[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
    }

    #[test]
    fn reduce_keeps_b_colorings_fixed() {
        let k4 = complete(4);
        let rainbow = col(&[0, 1, 2, 3]);
        assert_eq!(reduce_to_b_coloring(&k4, &rainbow).unwrap(), rainbow);
    }

    #[test]
    fn reduce_p3_rainbow() {
        let p3 = path(3).unwrap();
        let reduced = reduce_to_b_coloring(&p3, &col(&[0, 1, 2])).unwrap();
        assert_eq!(reduced.k(), 2);
        assert!(is_b_coloring(&p3, &reduced).unwrap());
    }

    #[test]
    fn reduce_terminates_and_verifies_on_awkward_inputs() {
        // A star with an over-colored rainbow: collapses to 2 colors.
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let reduced = reduce_to_b_coloring(&star, &col(&[0, 1, 2, 3, 4])).unwrap();
        assert!(reduced.k() <= 2);
        assert!(is_b_coloring(&star, &reduced).unwrap());

        // Edgeless graph: single class, trivially a b-coloring.
        let e = Graph::from_edges(3, &[]).unwrap();
        let reduced = reduce_to_b_coloring(&e, &col(&[0, 0, 0])).unwrap();
        assert_eq!(reduced.k(), 1);
    }

    #[test]
    fn predicates_handle_many_colors() {
        // More than 64 colors: the rainbow coloring of K_70 is a fall-coloring.
        let k70 = complete(70);
        let rainbow = col(&(0..70).collect::<Vec<u32>>());
        assert!(is_fall_coloring(&k70, &rainbow).unwrap());
        assert!(is_b_coloring(&k70, &rainbow).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let c = col(&[0, 1, 0, 2]);
        let js = serde_json::to_string(&ColoringJson::from(&c)).unwrap();
        let back: ColoringJson = serde_json::from_str(&js).unwrap();
        assert_eq!(Coloring::try_from(back).unwrap(), c);
    }
}
