//! Total arc-colorings over a [`Digraph`]: color statistics, per-vertex color
//! profiles with saturated colors, monochromatic subdigraphs, and canonical
//! color relabeling.

use std::collections::BTreeSet;

use itertools::Itertools;
use thiserror::Error;

use crate::digraph::{CanonicalKey, Digraph, DigraphError, Vertex, CANONICAL_ORDER_CAP};

/// Color ids are plain non-negative integers; canonical form makes them
/// `0..c` in first-appearance order along the canonical arc order.
pub type ColorId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color vector has {got} entries but the digraph has {expected} arcs")]
    WrongColorCount { got: usize, expected: usize },
    #[error("color {0} is not used in this coloring")]
    UnusedColor(ColorId),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

/// An arc-colored digraph: a total map from arcs to color ids, stored in
/// canonical arc order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredDigraph {
    digraph: Digraph,
    colors: Vec<ColorId>,
}

impl std::fmt::Debug for ColoredDigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ColoredDigraph(n={}, arcs=[", self.digraph.order())?;
        for (i, (u, v)) in self.digraph.arcs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}->{v}:{}", self.colors[i])?;
        }
        write!(f, "])")
    }
}

impl ColoredDigraph {
    /// Attach a color vector (canonical arc order) to a digraph.
    pub fn new(digraph: Digraph, colors: Vec<ColorId>) -> Result<Self, ColoringError> {
        if colors.len() != digraph.arc_count() {
            return Err(ColoringError::WrongColorCount {
                got: colors.len(),
                expected: digraph.arc_count(),
            });
        }
        Ok(ColoredDigraph { digraph, colors })
    }

    /// Build digraph and coloring together from `(tail, head, color)` triples.
    pub fn from_arc_colors(
        n: usize,
        arcs: &[(Vertex, Vertex, ColorId)],
    ) -> Result<Self, ColoringError> {
        let digraph = Digraph::from_arcs(n, arcs.iter().map(|&(u, v, _)| (u, v)))?;
        let mut colors = vec![0; arcs.len()];
        for &(u, v, c) in arcs {
            colors[digraph.arc_index(u, v).expect("arc just inserted")] = c;
        }
        Ok(ColoredDigraph { digraph, colors })
    }

    /// Every arc the same color.
    pub fn monochromatic(digraph: Digraph, color: ColorId) -> Self {
        let colors = vec![color; digraph.arc_count()];
        ColoredDigraph { digraph, colors }
    }

    /// All arcs pairwise distinct colors `0..a(D)`.
    pub fn rainbow(digraph: Digraph) -> Self {
        let colors = (0..digraph.arc_count() as ColorId).collect();
        ColoredDigraph { digraph, colors }
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn order(&self) -> usize {
        self.digraph.order()
    }

    pub fn arc_count(&self) -> usize {
        self.digraph.arc_count()
    }

    /// Colors in canonical arc order.
    pub fn colors(&self) -> &[ColorId] {
        &self.colors
    }

    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<ColorId> {
        self.digraph.arc_index(u, v).map(|i| self.colors[i])
    }

    /// C(D): the set of used color ids.
    pub fn color_set(&self) -> BTreeSet<ColorId> {
        self.colors.iter().copied().collect()
    }

    /// c(D): the number of distinct colors used.
    pub fn color_number(&self) -> usize {
        self.color_set().len()
    }

    /// Arcs of color `i`, in canonical arc order.
    pub fn arcs_of_color(&self, i: ColorId) -> Vec<(Vertex, Vertex)> {
        self.digraph
            .arcs()
            .zip(&self.colors)
            .filter(|&(_, &c)| c == i)
            .map(|(a, _)| a)
            .collect()
    }

    /// D^i: the spanning subdigraph induced by all arcs of color `i`.
    pub fn monochromatic_subdigraph(&self, i: ColorId) -> Result<Digraph, ColoringError> {
        let arcs = self.arcs_of_color(i);
        if arcs.is_empty() {
            return Err(ColoringError::UnusedColor(i));
        }
        Ok(Digraph::from_arcs(self.order(), arcs)?)
    }

    /// Per-vertex color statistics; see [`ColorProfile`].
    pub fn color_profile(&self, v: Vertex) -> Result<ColorProfile, ColoringError> {
        if v >= self.order() {
            return Err(DigraphError::VertexOutOfRange { vertex: v, order: self.order() }.into());
        }
        let mut cn_in = BTreeSet::new();
        let mut cn_out = BTreeSet::new();
        // touched_elsewhere[c] = some arc of color c avoids v
        let mut elsewhere = BTreeSet::new();
        for ((u, w), &c) in self.digraph.arcs().zip(&self.colors) {
            if u == v {
                cn_out.insert(c);
            } else if w == v {
                cn_in.insert(c);
            } else {
                elsewhere.insert(c);
            }
        }
        let cn: BTreeSet<ColorId> = cn_in.union(&cn_out).copied().collect();
        let saturated: BTreeSet<ColorId> = cn.iter().copied().filter(|c| !elsewhere.contains(c)).collect();
        Ok(ColorProfile {
            d_in_c: cn_in.len(),
            d_out_c: cn_out.len(),
            d_s: saturated.len(),
            cn_in,
            cn_out,
            cn,
            saturated,
        })
    }

    /// d^s(v) without materializing the full profile.
    pub fn saturated_degree(&self, v: Vertex) -> Result<usize, ColoringError> {
        Ok(self.color_profile(v)?.d_s)
    }

    /// Induced colored subdigraph; vertices reindex densely by ascending
    /// original id and arcs keep their color ids.
    pub fn induced(&self, s: &[Vertex]) -> Result<ColoredDigraph, ColoringError> {
        let sub = self.digraph.induced(s)?;
        let mut keep: Vec<Vertex> = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let colors = sub
            .arcs()
            .map(|(u, w)| self.color_of(keep[u], keep[w]).expect("arc survives restriction"))
            .collect();
        Ok(ColoredDigraph { digraph: sub, colors })
    }

    /// Delete a vertex; surviving arcs keep their color ids, so
    /// `c(D - v) = c(D) - d^s(v)` holds as stated.
    pub fn delete_vertex_colored(&self, v: Vertex) -> Result<ColoredDigraph, ColoringError> {
        if v >= self.order() {
            return Err(DigraphError::VertexOutOfRange { vertex: v, order: self.order() }.into());
        }
        let keep: Vec<Vertex> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Relabel colors to `0..c` in first-appearance order along the canonical
    /// arc order (restricted-growth form). The partition of arcs into color
    /// classes is unchanged.
    pub fn canonical_coloring(&self) -> ColoredDigraph {
        ColoredDigraph {
            digraph: self.digraph.clone(),
            colors: restricted_growth(&self.colors),
        }
    }

    pub fn is_canonical_coloring(&self) -> bool {
        self.colors == restricted_growth(&self.colors)
    }

    /// Relabel vertices; colors follow their arcs. `perm[old] = new`.
    pub fn permuted(&self, perm: &[Vertex]) -> ColoredDigraph {
        let digraph = self.digraph.permuted(perm);
        let mut colors = vec![0; self.colors.len()];
        for ((u, v), &c) in self.digraph.arcs().zip(&self.colors) {
            colors[digraph.arc_index(perm[u], perm[v]).expect("image arc present")] = c;
        }
        ColoredDigraph { digraph, colors }
    }

    /// Apply an arbitrary map to every color id.
    pub fn map_colors(&self, f: impl Fn(ColorId) -> ColorId) -> ColoredDigraph {
        ColoredDigraph {
            digraph: self.digraph.clone(),
            colors: self.colors.iter().map(|&c| f(c)).collect(),
        }
    }

    /// Colored-isomorphism dedup key: minimized over all vertex permutations,
    /// comparing (adjacency matrix, restricted-growth color string). Expensive
    /// (`n!` permutations); shares the canonicalization order cap.
    pub fn colored_canonical_key(&self) -> Result<Vec<u8>, ColoringError> {
        let n = self.order();
        if n > CANONICAL_ORDER_CAP {
            return Err(
                DigraphError::OrderCapExceeded { order: n, cap: CANONICAL_ORDER_CAP }.into()
            );
        }
        let mut best: Option<Vec<u8>> = None;
        for perm in (0..n).permutations(n) {
            let image = self.permuted(&perm);
            let mut bytes: Vec<u8> = Vec::with_capacity(n + image.colors.len());
            for u in 0..n {
                // row bits fit in a byte for n <= 8
                let mut row = 0u8;
                for v in 0..n {
                    if image.digraph.has_arc(u, v) {
                        row |= 1 << (n - 1 - v);
                    }
                }
                bytes.push(row);
            }
            for c in restricted_growth(&image.colors) {
                bytes.push(c as u8);
            }
            if best.as_ref().is_none_or(|b| bytes < *b) {
                best = Some(bytes);
            }
        }
        Ok(best.unwrap_or_default())
    }

    /// Canonical key of the underlying digraph.
    pub fn digraph_key(&self) -> Result<CanonicalKey, DigraphError> {
        self.digraph.canonical_key()
    }
}

/// First-appearance relabeling of a color sequence: the restricted-growth
/// string of its partition.
pub fn restricted_growth(colors: &[ColorId]) -> Vec<ColorId> {
    let mut map: Vec<(ColorId, ColorId)> = vec![];
    let mut out = Vec::with_capacity(colors.len());
    for &c in colors {
        let id = match map.iter().find(|&&(orig, _)| orig == c) {
            Some(&(_, id)) => id,
            None => {
                let id = map.len() as ColorId;
                map.push((c, id));
                id
            }
        };
        out.push(id);
    }
    out
}

/// Per-vertex color statistics: color neighborhoods, color degrees, and the
/// colors saturated by the vertex (every arc of that color touches it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorProfile {
    pub cn_in: BTreeSet<ColorId>,
    pub cn_out: BTreeSet<ColorId>,
    pub cn: BTreeSet<ColorId>,
    pub d_in_c: usize,
    pub d_out_c: usize,
    pub saturated: BTreeSet<ColorId>,
    pub d_s: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The order-3 example with two 2-colored triangles: u,v,w = 0,1,2 and
    /// C(uv)=C(vw)=1, C(wu)=2, C(vu)=C(uw)=3, C(wv)=4.
    fn two_triangle_example() -> ColoredDigraph {
        ColoredDigraph::from_arc_colors(
            3,
            &[(0, 1, 1), (1, 2, 1), (2, 0, 2), (1, 0, 3), (0, 2, 3), (2, 1, 4)],
        )
        .unwrap()
    }

    #[test]
    fn color_number_trivials() {
        let k3 = Digraph::complete(3);
        assert_eq!(ColoredDigraph::monochromatic(k3.clone(), 7).color_number(), 1);
        assert_eq!(ColoredDigraph::rainbow(k3).color_number(), 6);
    }

    #[test]
    fn profile_on_two_triangle_example() {
        let d = two_triangle_example();
        let w = d.color_profile(2).unwrap();
        assert_eq!(w.d_s, 2);
        assert_eq!(w.saturated, BTreeSet::from([2, 4]));
        let u = d.color_profile(0).unwrap();
        assert_eq!(u.d_s, 2);
        assert_eq!(u.saturated, BTreeSet::from([2, 3]));
        assert_eq!(u.cn, BTreeSet::from([1, 2, 3]));
        assert_eq!(u.cn_in, BTreeSet::from([2, 3]));
        assert_eq!(u.cn_out, BTreeSet::from([1, 3]));
    }

    #[test]
    fn profile_extremes() {
        let rainbow = ColoredDigraph::rainbow(Digraph::complete(3));
        for v in 0..3 {
            assert_eq!(rainbow.color_profile(v).unwrap().d_s, 4);
        }
        let mono = ColoredDigraph::monochromatic(Digraph::complete(4), 0);
        for v in 0..4 {
            assert_eq!(mono.color_profile(v).unwrap().d_s, 0);
        }
    }

    #[test]
    fn monochromatic_subdigraph_examples() {
        let rainbow = ColoredDigraph::rainbow(Digraph::complete(3));
        for c in 0..6 {
            assert_eq!(rainbow.monochromatic_subdigraph(c).unwrap().arc_count(), 1);
        }
        assert!(matches!(
            rainbow.monochromatic_subdigraph(99),
            Err(ColoringError::UnusedColor(99))
        ));
        let mono = ColoredDigraph::monochromatic(Digraph::complete(4), 3);
        assert_eq!(mono.monochromatic_subdigraph(3).unwrap(), Digraph::complete(4));
    }

    #[test]
    fn canonical_coloring_examples() {
        assert_eq!(restricted_growth(&[7, 7, 2, 9]), vec![0, 0, 1, 2]);
        let d = two_triangle_example();
        let canon = d.canonical_coloring();
        assert_eq!(canon.colors(), &[0, 1, 1, 0, 2, 3]);
        assert_eq!(canon.canonical_coloring(), canon);
        assert!(canon.is_canonical_coloring());
        assert!(!d.is_canonical_coloring());
    }

    #[test]
    fn delete_vertex_colored_trivials() {
        let mono = ColoredDigraph::monochromatic(Digraph::complete(4), 0);
        for v in 0..4 {
            assert_eq!(mono.delete_vertex_colored(v).unwrap().color_number(), 1);
        }
        let rainbow = ColoredDigraph::rainbow(Digraph::complete(3));
        for v in 0..3 {
            assert_eq!(rainbow.delete_vertex_colored(v).unwrap().color_number(), 2);
        }
    }

    #[test]
    fn colored_key_invariant_under_permutation_and_relabel() {
        let d = two_triangle_example();
        let key = d.colored_canonical_key().unwrap();
        let perm = [2, 0, 1];
        assert_eq!(d.permuted(&perm).colored_canonical_key().unwrap(), key);
        assert_eq!(d.map_colors(|c| c * 10 + 5).colored_canonical_key().unwrap(), key);
    }

    #[test]
    fn wrong_color_count_rejected() {
        let k3 = Digraph::complete(3);
        assert!(matches!(
            ColoredDigraph::new(k3, vec![0; 5]),
            Err(ColoringError::WrongColorCount { got: 5, expected: 6 })
        ));
    }
}
