//! Taxonomy of extremal rainbow-free colorings: decide whether a colored
//! complete digraph with threshold-minus-one colors matches one of the known
//! families, and compute the diagnostic decompositions (monochromatic census,
//! saturation partition) the matching rests on.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::coloring::{ColorId, ColoredDigraph};
use crate::constructions::{f_threshold, Orientation};
use crate::digraph::Vertex;
use crate::triangles::find_rainbow_triangle;

/// Why an instance is not an extremal coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotExtremalReason {
    NotComplete,
    WrongColorCount,
    HasRainbowTriangle,
    NoTemplateMatch,
}

impl std::fmt::Display for NotExtremalReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            NotExtremalReason::NotComplete => "not-complete",
            NotExtremalReason::WrongColorCount => "wrong-color-count",
            NotExtremalReason::HasRainbowTriangle => "has-rainbow-triangle",
            NotExtremalReason::NoTemplateMatch => "no-template-match",
        };
        f.write_str(s)
    }
}

/// Classification verdict with the witness realizing the match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremalClass {
    G3,
    G4 {
        /// Vertex order v1..v4 under which the doubled 4-cycle template holds.
        order: [Vertex; 4],
    },
    G5TypeI {
        /// The vertex whose incident arcs all share one fresh color.
        special: Vertex,
    },
    G5TypeII {
        orientation: Orientation,
        part_a: [Vertex; 2],
        part_b: [Vertex; 3],
    },
    G5TypeIII {
        part_a: [Vertex; 2],
        part_b: [Vertex; 3],
    },
    GnBipartite {
        orientation: Orientation,
        part_a: Vec<Vertex>,
        part_b: Vec<Vertex>,
    },
    NotExtremal(NotExtremalReason),
}

impl ExtremalClass {
    pub fn is_extremal(&self) -> bool {
        !matches!(self, ExtremalClass::NotExtremal(_))
    }

    /// Re-check the matched template against `d`; true for every verdict
    /// produced by [`classify_extremal`] on the same instance.
    pub fn verifies(&self, d: &ColoredDigraph) -> bool {
        match self {
            ExtremalClass::G3 => g3_matches(d),
            ExtremalClass::G4 { order } => g4_matches(d, order),
            ExtremalClass::G5TypeI { special } => g5_type1_matches(d, *special),
            ExtremalClass::G5TypeII { orientation, part_a, part_b } => {
                g5_type2_matches(d, part_a, part_b, *orientation)
            }
            ExtremalClass::G5TypeIII { part_a, part_b } => g5_type3_matches(d, part_a, part_b),
            ExtremalClass::GnBipartite { orientation, part_a, part_b } => {
                gn_matches(d, part_a, part_b, *orientation)
            }
            ExtremalClass::NotExtremal(_) => false,
        }
    }
}

impl std::fmt::Display for ExtremalClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtremalClass::G3 => write!(f, "G3"),
            ExtremalClass::G4 { .. } => write!(f, "G4"),
            ExtremalClass::G5TypeI { .. } => write!(f, "G5-TypeI"),
            ExtremalClass::G5TypeII { orientation, .. } => {
                write!(f, "G5-TypeII({})", orientation_tag(*orientation))
            }
            ExtremalClass::G5TypeIII { .. } => write!(f, "G5-TypeIII"),
            ExtremalClass::GnBipartite { orientation, .. } => {
                write!(f, "Gn-Bipartite({})", orientation_tag(*orientation))
            }
            ExtremalClass::NotExtremal(r) => write!(f, "NotExtremal({r})"),
        }
    }
}

fn orientation_tag(o: Orientation) -> &'static str {
    match o {
        Orientation::AToB => "ab",
        Orientation::BToA => "ba",
    }
}

/// Decide whether `d` is an extremal (threshold-minus-one, rainbow-free)
/// coloring of a complete digraph and, if so, which family it realizes.
/// Matching is explicit search over the small symmetry spaces; failures are
/// verdicts, never errors.
pub fn classify_extremal(d: &ColoredDigraph) -> ExtremalClass {
    use ExtremalClass::NotExtremal;
    use NotExtremalReason::*;

    let n = d.order();
    if d.arc_count() != n * (n - 1) {
        return NotExtremal(NotComplete);
    }
    let Ok(f) = f_threshold(n) else {
        // orders below 3 have no threshold and no taxonomy
        return NotExtremal(WrongColorCount);
    };
    if d.color_number() != f - 1 {
        return NotExtremal(WrongColorCount);
    }
    if find_rainbow_triangle(d).is_some() {
        return NotExtremal(HasRainbowTriangle);
    }

    match n {
        3 => {
            if g3_matches(d) {
                return ExtremalClass::G3;
            }
        }
        4 => {
            for perm in (0..4).permutations(4) {
                let order = [perm[0], perm[1], perm[2], perm[3]];
                if g4_matches(d, &order) {
                    return ExtremalClass::G4 { order };
                }
            }
        }
        5 => {
            for special in 0..5 {
                if g5_type1_matches(d, special) {
                    return ExtremalClass::G5TypeI { special };
                }
            }
            for pair in (0..5).combinations(2) {
                let part_a = [pair[0], pair[1]];
                let part_b = complement(5, &part_a);
                let part_b = [part_b[0], part_b[1], part_b[2]];
                for orientation in [Orientation::AToB, Orientation::BToA] {
                    if g5_type2_matches(d, &part_a, &part_b, orientation) {
                        return ExtremalClass::G5TypeII { orientation, part_a, part_b };
                    }
                }
            }
            for pair in (0..5).combinations(2) {
                let part_a = [pair[0], pair[1]];
                let part_b = complement(5, &part_a);
                let part_b = [part_b[0], part_b[1], part_b[2]];
                if g5_type3_matches(d, &part_a, &part_b) {
                    return ExtremalClass::G5TypeIII { part_a, part_b };
                }
            }
        }
        _ => {
            for part_a in (0..n).combinations(n / 2) {
                let part_b = complement(n, &part_a);
                for orientation in [Orientation::AToB, Orientation::BToA] {
                    if gn_matches(d, &part_a, &part_b, orientation) {
                        return ExtremalClass::GnBipartite { orientation, part_a, part_b };
                    }
                }
            }
        }
    }
    NotExtremal(NoTemplateMatch)
}

fn complement(n: usize, part: &[Vertex]) -> Vec<Vertex> {
    (0..n).filter(|v| !part.contains(v)).collect()
}

/// The two arc-disjoint directed triangles are each 2-colored on disjoint
/// color sets.
fn g3_matches(d: &ColoredDigraph) -> bool {
    let t1: BTreeSet<ColorId> = [(0, 1), (1, 2), (2, 0)]
        .iter()
        .filter_map(|&(u, v)| d.color_of(u, v))
        .collect();
    let t2: BTreeSet<ColorId> = [(0, 2), (2, 1), (1, 0)]
        .iter()
        .filter_map(|&(u, v)| d.color_of(u, v))
        .collect();
    t1.len() == 2 && t2.len() == 2 && t1.is_disjoint(&t2)
}

/// Doubled 4-cycle template under the given vertex order: the cycle
/// v1v2v3v4 one color, its reverse a second, the four remaining arcs
/// pairwise distinct; six colors in all.
fn g4_matches(d: &ColoredDigraph, order: &[Vertex; 4]) -> bool {
    let [v1, v2, v3, v4] = *order;
    let color = |u, v| d.color_of(u, v);
    let (Some(a), Some(b)) = (color(v1, v2), color(v1, v4)) else { return false };
    let forward = [(v2, v3), (v3, v4), (v4, v1)];
    let backward = [(v4, v3), (v3, v2), (v2, v1)];
    if forward.iter().any(|&(u, v)| color(u, v) != Some(a)) {
        return false;
    }
    if backward.iter().any(|&(u, v)| color(u, v) != Some(b)) {
        return false;
    }
    let singles = [color(v1, v3), color(v3, v1), color(v2, v4), color(v4, v2)];
    let mut all: Vec<ColorId> = singles.iter().map(|c| c.expect("complete")).collect();
    all.push(a);
    all.push(b);
    all.iter().collect::<BTreeSet<_>>().len() == 6
}

/// All arcs at `special` share one color that appears nowhere else, and the
/// residue is a G4 instance.
fn g5_type1_matches(d: &ColoredDigraph, special: Vertex) -> bool {
    let Some(c) = d.color_of(special, (special + 1) % 5) else { return false };
    for x in 0..5 {
        if x == special {
            continue;
        }
        if d.color_of(special, x) != Some(c) || d.color_of(x, special) != Some(c) {
            return false;
        }
    }
    let residue = d.delete_vertex_colored(special).expect("vertex in range");
    if residue.color_set().contains(&c) {
        return false;
    }
    matches!(classify_extremal(&residue), ExtremalClass::G4 { .. })
}

fn cross_arcs(part_a: &[Vertex], part_b: &[Vertex], orientation: Orientation) -> Vec<(Vertex, Vertex)> {
    let mut arcs = vec![];
    for &a in part_a {
        for &b in part_b {
            match orientation {
                Orientation::AToB => arcs.push((a, b)),
                Orientation::BToA => arcs.push((b, a)),
            }
        }
    }
    arcs
}

/// One-way cross arcs rainbow, every remaining arc a single color not used
/// on the cross arcs.
fn bipartite_template_matches(
    d: &ColoredDigraph,
    part_a: &[Vertex],
    part_b: &[Vertex],
    orientation: Orientation,
) -> bool {
    let h = cross_arcs(part_a, part_b, orientation);
    let h_colors: BTreeSet<ColorId> = h.iter().filter_map(|&(u, v)| d.color_of(u, v)).collect();
    if h_colors.len() != h.len() {
        return false;
    }
    let h_set: BTreeSet<(Vertex, Vertex)> = h.into_iter().collect();
    let mut rest = d
        .digraph()
        .arcs()
        .filter(|a| !h_set.contains(a))
        .map(|(u, v)| d.color_of(u, v).expect("arc present"));
    let Some(mono) = rest.next() else { return false };
    rest.all(|c| c == mono) && !h_colors.contains(&mono)
}

fn g5_type2_matches(
    d: &ColoredDigraph,
    part_a: &[Vertex; 2],
    part_b: &[Vertex; 3],
    orientation: Orientation,
) -> bool {
    bipartite_template_matches(d, part_a, part_b, orientation)
}

/// Two colors between the pair, a G3 on the triple, and all twelve cross
/// arcs in a single seventh color.
fn g5_type3_matches(d: &ColoredDigraph, part_a: &[Vertex; 2], part_b: &[Vertex; 3]) -> bool {
    let (Some(a), Some(b)) = (d.color_of(part_a[0], part_a[1]), d.color_of(part_a[1], part_a[0]))
    else {
        return false;
    };
    if a == b {
        return false;
    }
    let inner = d.induced(part_b).expect("vertices in range");
    if !matches!(classify_extremal(&inner), ExtremalClass::G3) {
        return false;
    }
    let inner_colors = inner.color_set();
    let mut cross_color = None;
    for &x in part_a {
        for &y in part_b {
            for (u, v) in [(x, y), (y, x)] {
                let c = d.color_of(u, v).expect("complete");
                if *cross_color.get_or_insert(c) != c {
                    return false;
                }
            }
        }
    }
    let g = cross_color.expect("cross arcs exist");
    let pair_colors = BTreeSet::from([a, b]);
    pair_colors.is_disjoint(&inner_colors) && !inner_colors.contains(&g) && !pair_colors.contains(&g)
}

fn gn_matches(
    d: &ColoredDigraph,
    part_a: &[Vertex],
    part_b: &[Vertex],
    orientation: Orientation,
) -> bool {
    part_a.len() == d.order() / 2 && bipartite_template_matches(d, part_a, part_b, orientation)
}

/// Structural class of one monochromatic subdigraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoClass {
    SingleArc,
    Path2,
    Path3,
    Cycle4,
    Other,
}

/// Census of monochromatic subdigraph shapes, with the aggregate counts the
/// order-4 linear system is written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoCensus {
    pub per_color: BTreeMap<ColorId, MonoClass>,
    pub x1: usize,
    pub x2: usize,
    pub x3: usize,
    pub x4: usize,
    pub other: usize,
}

/// Classify every color class of `d` as a single arc, a directed path of
/// length 2 or 3, a directed 4-cycle, or other.
pub fn mono_census(d: &ColoredDigraph) -> MonoCensus {
    let mut per_color = BTreeMap::new();
    let (mut x1, mut x2, mut x3, mut x4, mut other) = (0, 0, 0, 0, 0);
    for c in d.color_set() {
        let arcs = d.arcs_of_color(c);
        let class = match arcs.len() {
            1 => MonoClass::SingleArc,
            2 if is_directed_path(&arcs) => MonoClass::Path2,
            3 if is_directed_path(&arcs) => MonoClass::Path3,
            4 if is_directed_cycle(&arcs) => MonoClass::Cycle4,
            _ => MonoClass::Other,
        };
        match class {
            MonoClass::SingleArc => x1 += 1,
            MonoClass::Path2 => x2 += 1,
            MonoClass::Path3 => x3 += 1,
            MonoClass::Cycle4 => x4 += 1,
            MonoClass::Other => other += 1,
        }
        per_color.insert(c, class);
    }
    MonoCensus { per_color, x1, x2, x3, x4, other }
}

fn endpoint_maps(arcs: &[(Vertex, Vertex)]) -> Option<(BTreeMap<Vertex, Vertex>, BTreeSet<Vertex>)> {
    let mut succ = BTreeMap::new();
    let mut verts = BTreeSet::new();
    let mut heads = BTreeSet::new();
    for &(u, v) in arcs {
        if succ.insert(u, v).is_some() || !heads.insert(v) {
            return None; // branching: some vertex has out- or in-degree 2
        }
        verts.insert(u);
        verts.insert(v);
    }
    Some((succ, verts))
}

/// Arcs form a directed path visiting `arcs.len() + 1` distinct vertices.
fn is_directed_path(arcs: &[(Vertex, Vertex)]) -> bool {
    let Some((succ, verts)) = endpoint_maps(arcs) else { return false };
    if verts.len() != arcs.len() + 1 {
        return false;
    }
    let heads: BTreeSet<Vertex> = succ.values().copied().collect();
    let Some(&start) = verts.iter().find(|v| !heads.contains(v)) else { return false };
    let mut cur = start;
    let mut steps = 0;
    while let Some(&next) = succ.get(&cur) {
        cur = next;
        steps += 1;
    }
    steps == arcs.len()
}

/// Arcs form one directed cycle on `arcs.len()` distinct vertices.
fn is_directed_cycle(arcs: &[(Vertex, Vertex)]) -> bool {
    let Some((succ, verts)) = endpoint_maps(arcs) else { return false };
    if verts.len() != arcs.len() {
        return false;
    }
    let start = *verts.iter().next().expect("nonempty");
    let mut cur = start;
    for _ in 0..arcs.len() {
        match succ.get(&cur) {
            Some(&next) => cur = next,
            None => return false,
        }
    }
    cur == start
}

/// Colors split by how many vertices saturate them: both endpoints of a
/// single arc or opposite pair (X), exactly one vertex (Y), none (Z).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationPartition {
    pub x_colors: BTreeSet<ColorId>,
    pub y_colors: BTreeSet<ColorId>,
    pub z_colors: BTreeSet<ColorId>,
}

impl SaturationPartition {
    pub fn x(&self) -> usize {
        self.x_colors.len()
    }
    pub fn y(&self) -> usize {
        self.y_colors.len()
    }
    pub fn z(&self) -> usize {
        self.z_colors.len()
    }
}

pub fn saturation_partition(d: &ColoredDigraph) -> SaturationPartition {
    let mut saturators: BTreeMap<ColorId, usize> = d.color_set().into_iter().map(|c| (c, 0)).collect();
    for v in 0..d.order() {
        let profile = d.color_profile(v).expect("vertex in range");
        for c in profile.saturated {
            *saturators.get_mut(&c).expect("used color") += 1;
        }
    }
    let mut part = SaturationPartition {
        x_colors: BTreeSet::new(),
        y_colors: BTreeSet::new(),
        z_colors: BTreeSet::new(),
    };
    for (c, k) in saturators {
        match k {
            0 => part.z_colors.insert(c),
            1 => part.y_colors.insert(c),
            2 => part.x_colors.insert(c),
            _ => unreachable!("an arc has two endpoints; no color has three saturators"),
        };
    }
    part
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::ColoredDigraph;
    use crate::constructions::{
        gen_g3, gen_g4, gen_g5, gen_gn_bipartite, G5Type, Orientation,
    };
    use crate::digraph::Digraph;

    #[test]
    fn generators_round_trip() {
        assert_eq!(classify_extremal(&gen_g3()), ExtremalClass::G3);
        assert!(matches!(classify_extremal(&gen_g4()), ExtremalClass::G4 { .. }));
        assert!(matches!(
            classify_extremal(&gen_g5(G5Type::I, None).unwrap()),
            ExtremalClass::G5TypeI { .. }
        ));
        for o in [Orientation::AToB, Orientation::BToA] {
            assert!(matches!(
                classify_extremal(&gen_g5(G5Type::II, Some(o)).unwrap()),
                ExtremalClass::G5TypeII { .. }
            ));
        }
        assert!(matches!(
            classify_extremal(&gen_g5(G5Type::III, None).unwrap()),
            ExtremalClass::G5TypeIII { .. }
        ));
        for n in 6..=12 {
            for o in [Orientation::AToB, Orientation::BToA] {
                assert!(matches!(
                    classify_extremal(&gen_gn_bipartite(n, o).unwrap()),
                    ExtremalClass::GnBipartite { .. }
                ));
            }
        }
    }

    #[test]
    fn verdict_witnesses_verify() {
        let instances = [
            gen_g3(),
            gen_g4(),
            gen_g5(G5Type::I, None).unwrap(),
            gen_g5(G5Type::II, Some(Orientation::BToA)).unwrap(),
            gen_g5(G5Type::III, None).unwrap(),
            gen_gn_bipartite(7, Orientation::AToB).unwrap(),
        ];
        for d in &instances {
            let class = classify_extremal(d);
            assert!(class.is_extremal());
            assert!(class.verifies(d), "witness fails for {class}");
        }
    }

    #[test]
    fn non_extremal_reasons() {
        let mono5 = ColoredDigraph::monochromatic(Digraph::complete(5), 0);
        assert_eq!(
            classify_extremal(&mono5),
            ExtremalClass::NotExtremal(NotExtremalReason::WrongColorCount)
        );
        let incomplete = ColoredDigraph::rainbow(Digraph::from_arcs(3, [(0, 1)]).unwrap());
        assert_eq!(
            classify_extremal(&incomplete),
            ExtremalClass::NotExtremal(NotExtremalReason::NotComplete)
        );
        let rainbow4 = ColoredDigraph::new(
            Digraph::complete(4),
            vec![0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5],
        )
        .unwrap();
        // 6 colors on K4 but with a rainbow triangle somewhere
        let verdict = classify_extremal(&rainbow4);
        assert!(matches!(
            verdict,
            ExtremalClass::NotExtremal(
                NotExtremalReason::HasRainbowTriangle | NotExtremalReason::NoTemplateMatch
            )
        ));
    }

    #[test]
    fn census_examples() {
        let census = mono_census(&gen_g4());
        assert_eq!((census.x1, census.x2, census.x3, census.x4, census.other), (4, 0, 0, 2, 0));

        let rainbow = ColoredDigraph::rainbow(Digraph::complete(3));
        let census = mono_census(&rainbow);
        assert_eq!(census.x1, rainbow.color_number());
        assert_eq!(census.x2 + census.x3 + census.x4 + census.other, 0);

        let mono = ColoredDigraph::monochromatic(Digraph::complete(3), 0);
        let census = mono_census(&mono);
        assert_eq!(census.other, 1);
        assert_eq!(census.x1, 0);
    }

    #[test]
    fn census_shapes() {
        // path of length 2 and a 2-cycle (which is "other")
        let d = ColoredDigraph::from_arc_colors(
            4,
            &[(0, 1, 0), (1, 2, 0), (2, 3, 1), (3, 2, 1)],
        )
        .unwrap();
        let census = mono_census(&d);
        assert_eq!(census.per_color[&0], MonoClass::Path2);
        assert_eq!(census.per_color[&1], MonoClass::Other);

        // path of length 3
        let d =
            ColoredDigraph::from_arc_colors(4, &[(0, 1, 0), (1, 2, 0), (2, 3, 0)]).unwrap();
        assert_eq!(mono_census(&d).per_color[&0], MonoClass::Path3);

        // directed triangle in one color is neither path nor 4-cycle
        let d = ColoredDigraph::from_arc_colors(3, &[(0, 1, 0), (1, 2, 0), (2, 0, 0)]).unwrap();
        assert_eq!(mono_census(&d).per_color[&0], MonoClass::Other);
    }

    #[test]
    fn census_invariants() {
        for d in [gen_g4(), gen_g5(G5Type::III, None).unwrap(), gen_g3()] {
            let census = mono_census(&d);
            assert_eq!(
                census.x1 + census.x2 + census.x3 + census.x4 + census.other,
                d.color_number()
            );
            let weighted: usize =
                d.color_set().iter().map(|&c| d.arcs_of_color(c).len()).sum();
            assert_eq!(weighted, d.arc_count());
        }
    }

    #[test]
    fn saturation_examples() {
        let rainbow = ColoredDigraph::rainbow(Digraph::complete(3));
        let part = saturation_partition(&rainbow);
        assert_eq!((part.x(), part.y(), part.z()), (6, 0, 0));

        let mono = ColoredDigraph::monochromatic(Digraph::complete(4), 0);
        let part = saturation_partition(&mono);
        assert_eq!((part.x(), part.y(), part.z()), (0, 0, 1));

        let g4 = gen_g4();
        let part = saturation_partition(&g4);
        assert_eq!((part.x(), part.y(), part.z()), (4, 0, 2));
        let sum: usize = (0..4).map(|v| g4.color_profile(v).unwrap().d_s).sum();
        assert_eq!(2 * part.x() + part.y(), sum);
    }

    #[test]
    fn classification_invariant_under_relabeling() {
        use crate::randgen::{random_permutation, SplitMix64};
        let mut rng = SplitMix64::new(7);
        let instances = [
            gen_g4(),
            gen_g5(G5Type::II, Some(Orientation::AToB)).unwrap(),
            gen_gn_bipartite(6, Orientation::BToA).unwrap(),
        ];
        for d in &instances {
            let base = std::mem::discriminant(&classify_extremal(d));
            for _ in 0..10 {
                let perm = random_permutation(&mut rng, d.order());
                let image = d.permuted(&perm).map_colors(|c| c * 3 + 11).canonical_coloring();
                assert_eq!(std::mem::discriminant(&classify_extremal(&image)), base);
            }
        }
    }
}
