//! Explicit colorings realizing the constructive existence proofs: fall-
//! colorings of products of complete graphs, the cartesian lift of a
//! fall-coloring, the direct-product projection, and the paired coloring on
//! lexicographic-like products. Every constructor's output verifies against
//! the coloring predicates.

use crate::coloring::{is_fall_coloring, is_proper, Coloring, ColoringError};
use crate::graph::{complete, Graph};
use crate::products::{product, product_index, ProductSpec};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("parameters out of range: {0}")]
    BadParameters(String),
    #[error("input coloring is not a fall-coloring of its graph")]
    NotFallColoring,
    #[error("input coloring is not proper")]
    NotProper,
    #[error("lift needs at least as many colors as the second factor uses ({k} < {l})")]
    TooFewColors { k: u32, l: u32 },
    #[error("the second factor has an isolated vertex")]
    IsolatedVertex,
    #[error("coloring error: {0}")]
    Coloring(#[from] ColoringError),
}

fn require_fall(g: &Graph, c: &Coloring) -> Result<(), ConstructionError> {
    if !is_proper(g, c)? {
        return Err(ConstructionError::NotProper);
    }
    if !is_fall_coloring(g, c)? {
        return Err(ConstructionError::NotFallColoring);
    }
    Ok(())
}

/// Fall-coloring of `K_p □ K_q` (p <= q) with `q` colors: row `i` carries the
/// cyclic shift `j -> (j + i) mod q`, so rows pairwise disagree in every
/// column and every row is a rainbow `K_q`.
pub fn cartesian_complete_fall(p: usize, q: usize) -> Result<(Graph, Coloring), ConstructionError> {
    if p < 1 || q < p {
        return Err(ConstructionError::BadParameters(format!(
            "need 1 <= p <= q, got p={p}, q={q}"
        )));
    }
    let g = product(&complete(p), &complete(q), &ProductSpec::cartesian());
    let mut colors = vec![0u32; p * q];
    for i in 0..p {
        for j in 0..q {
            colors[product_index(i, j, q)] = ((j + i) % q) as u32;
        }
    }
    let coloring = Coloring::from_assignment(&colors);
    debug_assert!(is_fall_coloring(&g, &coloring).unwrap());
    Ok((g, coloring))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowOrColumn {
    Row,
    Column,
}

/// The row (p colors) or column (q colors) coloring of `K_p × K_q`; both are
/// fall-colorings, and for complete factors they are the only b-colorings up
/// to renaming.
pub fn direct_complete_coloring(
    p: usize,
    q: usize,
    which: RowOrColumn,
) -> Result<(Graph, Coloring), ConstructionError> {
    if p < 2 || q < 2 {
        return Err(ConstructionError::BadParameters(format!(
            "need p, q >= 2, got p={p}, q={q}"
        )));
    }
    let g = product(&complete(p), &complete(q), &ProductSpec::direct());
    let mut colors = vec![0u32; p * q];
    for i in 0..p {
        for j in 0..q {
            colors[product_index(i, j, q)] = match which {
                RowOrColumn::Row => i as u32,
                RowOrColumn::Column => j as u32,
            };
        }
    }
    let coloring = Coloring::from_assignment(&colors);
    debug_assert!(is_fall_coloring(&g, &coloring).unwrap());
    Ok((g, coloring))
}

/// Lifts a fall-coloring of `G` with `k` colors across `G □ H`: the copy of
/// `G` over a vertex of `H` in class `i` uses the colors rotated by `i`.
/// Requires a proper coloring of `H` with at most `k` colors.
pub fn cartesian_lift_fall(
    g: &Graph,
    fall_g: &Coloring,
    h: &Graph,
    proper_h: &Coloring,
) -> Result<(Graph, Coloring), ConstructionError> {
    require_fall(g, fall_g)?;
    if !is_proper(h, proper_h)? {
        return Err(ConstructionError::NotProper);
    }
    let k = fall_g.k();
    let l = proper_h.k();
    if k < l {
        return Err(ConstructionError::TooFewColors { k, l });
    }
    let prod = product(g, h, &ProductSpec::cartesian());
    let mut colors = vec![0u32; prod.n()];
    for u in g.vertices() {
        for v in h.vertices() {
            let rotation = proper_h.color(v);
            colors[product_index(u, v, h.n())] = (fall_g.color(u) + rotation) % k;
        }
    }
    let coloring = Coloring::from_assignment(&colors);
    debug_assert_eq!(coloring.k(), k);
    debug_assert!(is_fall_coloring(&prod, &coloring).unwrap());
    Ok((prod, coloring))
}

/// Projects a fall-coloring of `G` onto `G × H` by first coordinate. Valid
/// exactly when `H` has no isolated vertices; requires `k >= 2`.
pub fn direct_projection_fall(
    g: &Graph,
    fall_g: &Coloring,
    h: &Graph,
) -> Result<(Graph, Coloring), ConstructionError> {
    require_fall(g, fall_g)?;
    if fall_g.k() < 2 {
        return Err(ConstructionError::BadParameters(
            "projection needs a fall-coloring with k >= 2".into(),
        ));
    }
    if h.n() == 0 {
        return Err(ConstructionError::BadParameters("H must be nonempty".into()));
    }
    if h.has_isolated_vertex() {
        return Err(ConstructionError::IsolatedVertex);
    }
    let prod = product(g, h, &ProductSpec::direct());
    let mut colors = vec![0u32; prod.n()];
    for u in g.vertices() {
        for v in h.vertices() {
            colors[product_index(u, v, h.n())] = fall_g.color(u);
        }
    }
    let coloring = Coloring::from_assignment(&colors);
    debug_assert_eq!(coloring.k(), fall_g.k());
    debug_assert!(is_fall_coloring(&prod, &coloring).unwrap());
    Ok((prod, coloring))
}

/// Pairs fall-colorings of the factors into a fall-coloring of `G ⊙ H` with
/// `p * q` colors, for the lexicographic, strong and co-normal products
/// (where `K_p ⊙ K_q` is complete).
pub fn pair_product_fall(
    g: &Graph,
    fall_g: &Coloring,
    h: &Graph,
    fall_h: &Coloring,
    spec: &ProductSpec,
) -> Result<(Graph, Coloring), ConstructionError> {
    let allowed = [
        ProductSpec::lexicographic(),
        ProductSpec::strong(),
        ProductSpec::co_normal(),
    ];
    if !allowed.contains(spec) {
        return Err(ConstructionError::BadParameters(
            "pairing requires the lexicographic, strong or co-normal product".into(),
        ));
    }
    require_fall(g, fall_g)?;
    require_fall(h, fall_h)?;
    let q = fall_h.k();
    let prod = product(g, h, spec);
    let mut colors = vec![0u32; prod.n()];
    for u in g.vertices() {
        for v in h.vertices() {
            colors[product_index(u, v, h.n())] = fall_g.color(u) * q + fall_h.color(v);
        }
    }
    let coloring = Coloring::from_assignment(&colors);
    debug_assert_eq!(coloring.k(), fall_g.k() * q);
    debug_assert!(is_fall_coloring(&prod, &coloring).unwrap());
    Ok((prod, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_b_coloring;
    use crate::graph::{crown, cycle, Graph};
    use crate::spectra::{has_fall_coloring, optimal_coloring};

    #[test]
    fn cartesian_complete_fall_examples() {
        let (g, c) = cartesian_complete_fall(2, 3).unwrap();
        assert_eq!(c.k(), 3);
        assert!(is_fall_coloring(&g, &c).unwrap());

        // Single row: a rainbow K_q.
        let (g, c) = cartesian_complete_fall(1, 5).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(c.k(), 5);

        let (g, c) = cartesian_complete_fall(4, 4).unwrap();
        assert_eq!(c.k(), 4);
        assert!(is_fall_coloring(&g, &c).unwrap());

        assert!(cartesian_complete_fall(4, 3).is_err());

        for p in 1..=6 {
            for q in p..=6 {
                let (g, c) = cartesian_complete_fall(p, q).unwrap();
                assert_eq!(c.k() as usize, q);
                assert!(is_fall_coloring(&g, &c).unwrap());
            }
        }
    }

    #[test]
    fn direct_complete_coloring_examples() {
        let (g, col) = direct_complete_coloring(3, 4, RowOrColumn::Column).unwrap();
        assert_eq!(col.k(), 4);
        assert!(is_fall_coloring(&g, &col).unwrap());
        assert!(is_b_coloring(&g, &col).unwrap());

        let (g, row) = direct_complete_coloring(3, 4, RowOrColumn::Row).unwrap();
        assert_eq!(row.k(), 3);
        assert!(is_fall_coloring(&g, &row).unwrap());

        let (g, c) = direct_complete_coloring(2, 2, RowOrColumn::Column).unwrap();
        assert_eq!(g.edge_count(), 2); // 2K_2
        assert_eq!(c.k(), 2);

        assert!(direct_complete_coloring(1, 4, RowOrColumn::Row).is_err());
    }

    #[test]
    fn cartesian_lift_examples() {
        // K_3 rainbow lifted over K_2: 3 colors, consistent with max{3,2}.
        let k3 = crate::graph::complete(3);
        let rainbow = Coloring::from_assignment(&[0, 1, 2]);
        let k2 = crate::graph::complete(2);
        let two = Coloring::from_assignment(&[0, 1]);
        let (g, c) = cartesian_lift_fall(&k3, &rainbow, &k2, &two).unwrap();
        assert_eq!(c.k(), 3);
        assert!(is_fall_coloring(&g, &c).unwrap());

        // crown(3) fall-coloring lifted over C_5 (chi = 3): 3 colors survive.
        let cr = crown(3).unwrap();
        let fall = has_fall_coloring(&cr, 3).unwrap();
        let c5 = cycle(5).unwrap();
        let opt = optimal_coloring(&c5);
        assert_eq!(opt.k(), 3);
        let (g, c) = cartesian_lift_fall(&cr, &fall, &c5, &opt).unwrap();
        assert_eq!(c.k(), 3);
        assert!(is_fall_coloring(&g, &c).unwrap());

        // H = K_1: the coloring is just the original.
        let k1 = crate::graph::complete(1);
        let one = Coloring::from_assignment(&[0]);
        let (g, c) = cartesian_lift_fall(&k3, &rainbow, &k1, &one).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(c, rainbow);

        // chi(H) > k is rejected.
        let k4 = crate::graph::complete(4);
        let four = Coloring::from_assignment(&[0, 1, 2, 3]);
        assert_eq!(
            cartesian_lift_fall(&k3, &rainbow, &k4, &four),
            Err(ConstructionError::TooFewColors { k: 3, l: 4 })
        );

        // Non-fall first input is rejected.
        let c5_col = Coloring::from_assignment(&[0, 1, 0, 1, 2]);
        assert!(matches!(
            cartesian_lift_fall(&c5, &c5_col, &k2, &two),
            Err(ConstructionError::NotFallColoring)
        ));
    }

    #[test]
    fn direct_projection_examples() {
        let k3 = crate::graph::complete(3);
        let rainbow = Coloring::from_assignment(&[0, 1, 2]);
        let k2 = crate::graph::complete(2);
        let (g, c) = direct_projection_fall(&k3, &rainbow, &k2).unwrap();
        assert_eq!(c.k(), 3);
        assert!(is_fall_coloring(&g, &c).unwrap());

        // crown(4) with its 4-fall-coloring times P_3.
        let cr = crown(4).unwrap();
        let fall = has_fall_coloring(&cr, 4).unwrap();
        let p3 = crate::graph::path(3).unwrap();
        let (g, c) = direct_projection_fall(&cr, &fall, &p3).unwrap();
        assert_eq!(c.k(), 4);
        assert!(is_fall_coloring(&g, &c).unwrap());

        // An isolated vertex in H kills every b-vertex.
        let lonely = Graph::edgeless(1);
        assert_eq!(
            direct_projection_fall(&k3, &rainbow, &lonely),
            Err(ConstructionError::IsolatedVertex)
        );
    }

    #[test]
    fn pair_product_examples() {
        // K_2 and K_3 pair into a rainbow K_6 under the lexicographic product.
        let k2 = crate::graph::complete(2);
        let k3 = crate::graph::complete(3);
        let c2 = Coloring::from_assignment(&[0, 1]);
        let c3 = Coloring::from_assignment(&[0, 1, 2]);
        let (g, c) = pair_product_fall(&k2, &c2, &k3, &c3, &ProductSpec::lexicographic()).unwrap();
        assert!(crate::products::is_complete(&g));
        assert_eq!(c.k(), 6);

        // crown(3) (3 colors) with K_2 under the strong product: 6 colors.
        let cr = crown(3).unwrap();
        let fall = has_fall_coloring(&cr, 3).unwrap();
        let (g, c) = pair_product_fall(&cr, &fall, &k2, &c2, &ProductSpec::strong()).unwrap();
        assert_eq!(c.k(), 6);
        assert!(is_fall_coloring(&g, &c).unwrap());

        // Two K_1 factors: the one-vertex, one-color product.
        let k1 = crate::graph::complete(1);
        let c1 = Coloring::from_assignment(&[0]);
        let (g, c) = pair_product_fall(&k1, &c1, &k1, &c1, &ProductSpec::strong()).unwrap();
        assert_eq!((g.n(), c.k()), (1, 1));

        // The cartesian product is rejected: the pairing is not proper there.
        assert!(matches!(
            pair_product_fall(&k2, &c2, &k3, &c3, &ProductSpec::cartesian()),
            Err(ConstructionError::BadParameters(_))
        ));
    }
}
