//! Deterministic generators for the explicit extremal colorings and the
//! closed-form thresholds.
//!
//! Every generator emits its coloring in canonical form (color ids in
//! first-appearance order along the canonical arc order), so serialized
//! output is stable run to run.

use thiserror::Error;

use crate::coloring::{ColorId, ColoredDigraph};
use crate::digraph::{Digraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("order {got} below minimum {min} for {what}")]
    OrderTooSmall { what: &'static str, got: usize, min: usize },
    #[error("orientation parameter is only valid for type II")]
    OrientationNotApplicable,
    #[error("type II requires an orientation")]
    OrientationRequired,
}

/// Direction of the rainbow cross-arc subdigraph in the bipartite families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    AToB,
    BToA,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum G5Type {
    I,
    II,
    III,
}

/// The generator families: every explicit coloring the theory names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremalFamily {
    /// Complete digraph whose odd-to-even arcs are rainbow, everything else
    /// one color; the order-n lower-bound witness for the f threshold.
    BipartiteRainbowComplete { n: usize },
    G3,
    G4,
    G5 { ty: G5Type, orientation: Option<Orientation> },
    GnBipartite { n: usize, orientation: Orientation },
    /// Strongly connected tournament attaining the tournament threshold
    /// minus one.
    TournamentSharp { n: usize },
    /// Complete bipartite digraph, all arcs distinct: triangle-free witness
    /// for the floor(n^2/2) bound.
    CompleteBipartiteRainbow { n: usize },
}

impl ExtremalFamily {
    pub fn generate(&self) -> Result<ColoredDigraph, ConstructionError> {
        match *self {
            ExtremalFamily::BipartiteRainbowComplete { n } => gen_bipartite_rainbow_complete(n),
            ExtremalFamily::G3 => Ok(gen_g3()),
            ExtremalFamily::G4 => Ok(gen_g4()),
            ExtremalFamily::G5 { ty, orientation } => gen_g5(ty, orientation),
            ExtremalFamily::GnBipartite { n, orientation } => gen_gn_bipartite(n, orientation),
            ExtremalFamily::TournamentSharp { n } => gen_tournament_sharp(n),
            ExtremalFamily::CompleteBipartiteRainbow { n } => gen_complete_bipartite_rainbow(n),
        }
    }
}

/// f(K<->_n): the least color count forcing a rainbow triangle in every
/// arc-colored complete digraph of order n.
pub fn f_threshold(n: usize) -> Result<usize, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::OrderTooSmall { what: "f threshold", got: n, min: 3 });
    }
    Ok(if n <= 4 { n * n / 4 + 3 } else { n * n / 4 + 2 })
}

fn finish(digraph: Digraph, colored: Vec<(Vertex, Vertex, ColorId)>) -> ColoredDigraph {
    debug_assert_eq!(colored.len(), digraph.arc_count());
    let mut colors = vec![0; colored.len()];
    for (u, v, c) in colored {
        colors[digraph.arc_index(u, v).expect("generator arc present")] = c;
    }
    ColoredDigraph::new(digraph, colors).expect("total coloring").canonical_coloring()
}

/// Complete digraph of order `n >= 2`: arcs from even ids to odd ids get
/// pairwise distinct colors, all remaining arcs one new color. Yields
/// `floor(n^2/4) + 1` colors and no rainbow triangle. (The threshold proof
/// uses this for n >= 5; the same rule extends down to n = 2.)
pub fn gen_bipartite_rainbow_complete(n: usize) -> Result<ColoredDigraph, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::OrderTooSmall {
            what: "bipartite-rainbow-complete",
            got: n,
            min: 2,
        });
    }
    let digraph = Digraph::complete(n);
    let mut fresh: ColorId = 0;
    let mut arcs = vec![];
    let mut rest = vec![];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            if u % 2 == 0 && v % 2 == 1 {
                arcs.push((u, v, fresh));
                fresh += 1;
            } else {
                rest.push((u, v));
            }
        }
    }
    arcs.extend(rest.into_iter().map(|(u, v)| (u, v, fresh)));
    Ok(finish(digraph, arcs))
}

/// K<->_3 decomposed into two arc-disjoint 2-colored directed triangles on
/// disjoint color sets; 4 colors, rainbow-free.
pub fn gen_g3() -> ColoredDigraph {
    let arcs =
        vec![(0, 1, 0), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 2), (2, 1, 3)];
    finish(Digraph::complete(3), arcs)
}

/// K<->_4 with a directed 4-cycle in one color, its reverse in a second, and
/// the four remaining arcs pairwise distinct; 6 colors, rainbow-free.
pub fn gen_g4() -> ColoredDigraph {
    let digraph = Digraph::complete(4);
    let arcs = g4_template(0, [0, 1, 2, 3, 4, 5]);
    finish(digraph, arcs)
}

/// The G4 arc/color template on vertices `base..base+4` with an explicit
/// six-color palette (a, b, c, d, e, f).
fn g4_template(base: Vertex, palette: [ColorId; 6]) -> Vec<(Vertex, Vertex, ColorId)> {
    let [a, b, c, d, e, f] = palette;
    let v = |i: usize| base + i;
    vec![
        (v(0), v(1), a),
        (v(1), v(2), a),
        (v(2), v(3), a),
        (v(3), v(0), a),
        (v(0), v(3), b),
        (v(3), v(2), b),
        (v(2), v(1), b),
        (v(1), v(0), b),
        (v(0), v(2), c),
        (v(2), v(0), d),
        (v(1), v(3), e),
        (v(3), v(1), f),
    ]
}

/// The three order-5 extremal types; 7 colors each, rainbow-free.
///
/// Type I places the monochromatic special vertex at id 4 over a G4 on ids
/// 0..4; types II and III use the split {0,1} vs {2,3,4}. The orientation
/// applies to type II only.
pub fn gen_g5(
    ty: G5Type,
    orientation: Option<Orientation>,
) -> Result<ColoredDigraph, ConstructionError> {
    match (ty, orientation) {
        (G5Type::I, None) => {
            let digraph = Digraph::complete(5);
            let mut arcs = g4_template(0, [0, 1, 2, 3, 4, 5]);
            for x in 0..4 {
                arcs.push((x, 4, 6));
                arcs.push((4, x, 6));
            }
            Ok(finish(digraph, arcs))
        }
        (G5Type::II, Some(orientation)) => Ok(gen_bipartite_split(5, 2, orientation)),
        (G5Type::III, None) => {
            let digraph = Digraph::complete(5);
            let mut arcs = vec![(0, 1, 0), (1, 0, 1)];
            // inner G3 on {2,3,4}, colors 2..=5
            arcs.extend([
                (2, 3, 2),
                (3, 4, 2),
                (4, 2, 3),
                (3, 2, 4),
                (2, 4, 4),
                (4, 3, 5),
            ]);
            for a in 0..2 {
                for b in 2..5 {
                    arcs.push((a, b, 6));
                    arcs.push((b, a, 6));
                }
            }
            Ok(finish(digraph, arcs))
        }
        (G5Type::II, None) => Err(ConstructionError::OrientationRequired),
        _ => Err(ConstructionError::OrientationNotApplicable),
    }
}

/// Complete digraph split into parts A = 0..k and B = k..n; the one-way
/// cross arcs are rainbow, every other arc gets one new color.
fn gen_bipartite_split(n: usize, k: usize, orientation: Orientation) -> ColoredDigraph {
    let digraph = Digraph::complete(n);
    let mut fresh: ColorId = 0;
    let mut arcs = vec![];
    let mut rest = vec![];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let in_h = match orientation {
                Orientation::AToB => u < k && v >= k,
                Orientation::BToA => u >= k && v < k,
            };
            if in_h {
                arcs.push((u, v, fresh));
                fresh += 1;
            } else {
                rest.push((u, v));
            }
        }
    }
    arcs.extend(rest.into_iter().map(|(u, v)| (u, v, fresh)));
    finish(digraph, arcs)
}

/// The order-n (n >= 6) extremal family: complete digraph, parts of size
/// floor(n/2) and ceil(n/2), one-way cross arcs rainbow, rest one new color.
/// `f_threshold(n) - 1` colors, rainbow-free.
pub fn gen_gn_bipartite(
    n: usize,
    orientation: Orientation,
) -> Result<ColoredDigraph, ConstructionError> {
    if n < 6 {
        return Err(ConstructionError::OrderTooSmall { what: "gn-bipartite", got: n, min: 6 });
    }
    Ok(gen_bipartite_split(n, n / 2, orientation))
}

/// Strongly connected tournament of order `n >= 3` attaining the tournament
/// threshold minus one: the transitive order with the arc 0->(n-1) reversed,
/// all arcs at vertex 0 sharing one color and the rest pairwise distinct.
pub fn gen_tournament_sharp(n: usize) -> Result<ColoredDigraph, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::OrderTooSmall { what: "tournament-sharp", got: n, min: 3 });
    }
    let mut pairs = vec![];
    for i in 0..n {
        for j in i + 1..n {
            if i == 0 && j == n - 1 {
                pairs.push((n - 1, 0));
            } else {
                pairs.push((i, j));
            }
        }
    }
    let digraph = Digraph::from_arcs(n, pairs.iter().copied()).expect("tournament arcs");
    let mut fresh: ColorId = 1;
    let mut arcs = vec![];
    for (u, v) in pairs {
        if u == 0 || v == 0 {
            arcs.push((u, v, 0));
        } else {
            arcs.push((u, v, fresh));
            fresh += 1;
        }
    }
    Ok(finish(digraph, arcs))
}

/// Complete bipartite digraph on parts floor(n/2) and ceil(n/2) with all arcs
/// pairwise distinct: triangle-free, `floor(n^2/2)` arcs and colors.
pub fn gen_complete_bipartite_rainbow(n: usize) -> Result<ColoredDigraph, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::OrderTooSmall {
            what: "complete-bipartite-rainbow",
            got: n,
            min: 2,
        });
    }
    let k = n / 2;
    let mut arcs = vec![];
    for u in 0..k {
        for v in k..n {
            arcs.push((u, v));
            arcs.push((v, u));
        }
    }
    let digraph = Digraph::from_arcs(n, arcs.iter().copied()).expect("bipartite arcs");
    let colored = arcs.into_iter().enumerate().map(|(i, (u, v))| (u, v, i as ColorId)).collect();
    Ok(finish(digraph, colored))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::{directed_triangles, find_rainbow_triangle};

    #[test]
    fn f_threshold_values() {
        assert_eq!(f_threshold(3).unwrap(), 5);
        assert_eq!(f_threshold(4).unwrap(), 7);
        assert_eq!(f_threshold(5).unwrap(), 8);
        assert_eq!(f_threshold(6).unwrap(), 11);
        assert!(f_threshold(2).is_err());
    }

    #[test]
    fn bipartite_rainbow_complete_counts() {
        let d5 = gen_bipartite_rainbow_complete(5).unwrap();
        assert_eq!(d5.color_number(), 7);
        assert_eq!(find_rainbow_triangle(&d5), None);
        let d6 = gen_bipartite_rainbow_complete(6).unwrap();
        assert_eq!(d6.color_number(), 10);
        assert_eq!(d6.arc_count(), 30);
        assert!(gen_bipartite_rainbow_complete(1).is_err());
    }

    #[test]
    fn g3_g4_shapes() {
        let g3 = gen_g3();
        assert_eq!(g3.color_number(), 4);
        assert_eq!(find_rainbow_triangle(&g3), None);

        let g4 = gen_g4();
        assert_eq!(g4.color_number(), 6);
        assert_eq!(find_rainbow_triangle(&g4), None);
        // the doubled colors trace the 4-cycle 0,1,2,3 and its reverse
        let c = g4.color_of(0, 1).unwrap();
        for (u, v) in [(1, 2), (2, 3), (3, 0)] {
            assert_eq!(g4.color_of(u, v).unwrap(), c);
        }
        let cycle = g4.monochromatic_subdigraph(c).unwrap();
        assert_eq!(cycle.arc_count(), 4);
        assert!(cycle.is_strongly_connected());
    }

    #[test]
    fn g5_types() {
        let t1 = gen_g5(G5Type::I, None).unwrap();
        assert_eq!(t1.color_number(), 7);
        assert_eq!(find_rainbow_triangle(&t1), None);
        // all arcs at the special vertex share one color that is fresh
        let special = t1.color_of(0, 4).unwrap();
        for x in 0..4 {
            assert_eq!(t1.color_of(x, 4).unwrap(), special);
            assert_eq!(t1.color_of(4, x).unwrap(), special);
        }

        for o in [Orientation::AToB, Orientation::BToA] {
            let t2 = gen_g5(G5Type::II, Some(o)).unwrap();
            assert_eq!(t2.color_number(), 7);
            assert_eq!(find_rainbow_triangle(&t2), None);
        }
        let t2 = gen_g5(G5Type::II, Some(Orientation::AToB)).unwrap();
        let cross: Vec<_> = (2..5).flat_map(|b| [(0, b), (1, b)]).collect();
        let mut cross_colors: Vec<_> =
            cross.iter().map(|&(a, b)| t2.color_of(a, b).unwrap()).collect();
        cross_colors.sort_unstable();
        cross_colors.dedup();
        assert_eq!(cross_colors.len(), 6);

        let t3 = gen_g5(G5Type::III, None).unwrap();
        assert_eq!(t3.color_number(), 7);
        assert_eq!(find_rainbow_triangle(&t3), None);
        let inner = t3.delete_vertex_colored(0).unwrap().delete_vertex_colored(0).unwrap();
        assert_eq!(inner.color_number(), 4);
        let g = t3.color_of(0, 2).unwrap();
        for a in 0..2 {
            for b in 2..5 {
                assert_eq!(t3.color_of(a, b).unwrap(), g);
                assert_eq!(t3.color_of(b, a).unwrap(), g);
            }
        }

        assert!(gen_g5(G5Type::II, None).is_err());
        assert!(gen_g5(G5Type::I, Some(Orientation::AToB)).is_err());
    }

    #[test]
    fn gn_bipartite_counts() {
        let d6 = gen_gn_bipartite(6, Orientation::AToB).unwrap();
        assert_eq!(d6.color_number(), 10);
        assert_eq!(d6.color_number(), f_threshold(6).unwrap() - 1);
        let d7 = gen_gn_bipartite(7, Orientation::BToA).unwrap();
        assert_eq!(d7.color_number(), 13);
        assert_eq!(find_rainbow_triangle(&d7), None);

        let a = gen_gn_bipartite(6, Orientation::AToB).unwrap();
        let b = gen_gn_bipartite(6, Orientation::BToA).unwrap();
        assert_ne!(a, b);
        assert_eq!(find_rainbow_triangle(&a), None);
        assert_eq!(find_rainbow_triangle(&b), None);
        assert!(gen_gn_bipartite(5, Orientation::AToB).is_err());
    }

    #[test]
    fn gn_bipartite_mono_class_shape() {
        // exactly one color class has more than one arc
        for n in 6..=9 {
            let d = gen_gn_bipartite(n, Orientation::AToB).unwrap();
            let mut big = 0;
            for c in d.color_set() {
                let size = d.arcs_of_color(c).len();
                if size > 1 {
                    big += 1;
                } else {
                    assert_eq!(size, 1);
                }
            }
            assert_eq!(big, 1);
        }
    }

    #[test]
    fn tournament_sharp_counts() {
        use crate::tournament::is_tournament;
        for (n, c) in [(3, 2), (5, 7), (6, 11), (8, 22)] {
            let d = gen_tournament_sharp(n).unwrap();
            assert_eq!(d.color_number(), c, "n={n}");
            assert_eq!(d.color_number(), n * (n - 1) / 2 - n + 2);
            assert!(is_tournament(d.digraph()));
            assert!(d.digraph().is_strongly_connected());
            assert_eq!(find_rainbow_triangle(&d), None);
        }
        assert!(gen_tournament_sharp(2).is_err());
    }

    #[test]
    fn complete_bipartite_rainbow_counts() {
        let d5 = gen_complete_bipartite_rainbow(5).unwrap();
        assert_eq!(d5.arc_count(), 12);
        assert_eq!(d5.color_number(), 12);
        let d4 = gen_complete_bipartite_rainbow(4).unwrap();
        assert_eq!(directed_triangles(d4.digraph()).len(), 0);
        let d6 = gen_complete_bipartite_rainbow(6).unwrap();
        assert_eq!(d6.arc_count(), 18);
        assert_eq!(d6.color_number(), 18);
        assert!(gen_complete_bipartite_rainbow(1).is_err());
    }

    #[test]
    fn all_generators_rainbow_free_and_on_formula() {
        // color counts match the closed forms for 3 <= n <= 12
        for n in 3..=12usize {
            let lower = gen_bipartite_rainbow_complete(n).unwrap();
            assert_eq!(lower.color_number(), n * n / 4 + 1);
            assert_eq!(find_rainbow_triangle(&lower), None);

            let sharp = gen_tournament_sharp(n).unwrap();
            assert_eq!(sharp.color_number(), n * (n - 1) / 2 - n + 2);
            assert_eq!(find_rainbow_triangle(&sharp), None);

            let bip = gen_complete_bipartite_rainbow(n).unwrap();
            assert_eq!(bip.color_number(), n * n / 2);
            assert_eq!(find_rainbow_triangle(&bip), None);

            // the order-n extremal generator has f(n) - 1 colors
            let extremal = match n {
                3 => gen_g3(),
                4 => gen_g4(),
                5 => gen_g5(G5Type::I, None).unwrap(),
                _ => gen_gn_bipartite(n, Orientation::AToB).unwrap(),
            };
            assert_eq!(extremal.color_number(), f_threshold(n).unwrap() - 1);
            assert_eq!(find_rainbow_triangle(&extremal), None);
        }
    }

    #[test]
    fn generators_emit_canonical_colorings() {
        assert!(gen_g3().is_canonical_coloring());
        assert!(gen_g4().is_canonical_coloring());
        assert!(gen_g5(G5Type::III, None).unwrap().is_canonical_coloring());
        assert!(gen_gn_bipartite(8, Orientation::BToA).unwrap().is_canonical_coloring());
        assert!(gen_tournament_sharp(6).unwrap().is_canonical_coloring());
    }
}
