//! Directed-triangle enumeration and rainbow-triangle detection.
//!
//! Triangles are directed 3-cycles; reflection is not a symmetry (the cycles
//! `uvwu` and `uwvu` are distinct). Dedup is by least cyclic rotation, and all
//! enumeration follows the canonical triangle order (sorted by `(u, v, w)` of
//! the least rotation) so witnesses are reproducible.

use thiserror::Error;

use crate::coloring::{ColorId, ColoredDigraph};
use crate::digraph::{bits_of, Digraph, DigraphError, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangleError {
    #[error("n must be at least 1")]
    EmptyOrder,
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

/// A directed 3-cycle `u -> v -> w -> u`, stored in least-rotation form
/// (`u` is the smallest vertex).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vertex,
}

impl Triangle {
    /// Normalize a cyclic vertex sequence to least-rotation form.
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Self {
        debug_assert!(a != b && b != c && a != c);
        if a < b && a < c {
            Triangle { u: a, v: b, w: c }
        } else if b < c {
            Triangle { u: b, v: c, w: a }
        } else {
            Triangle { u: c, v: a, w: b }
        }
    }

    /// The three arc colors in cyclic order `(u->v, v->w, w->u)`.
    pub fn colors_in(&self, d: &ColoredDigraph) -> [ColorId; 3] {
        [
            d.color_of(self.u, self.v).expect("triangle arc present"),
            d.color_of(self.v, self.w).expect("triangle arc present"),
            d.color_of(self.w, self.u).expect("triangle arc present"),
        ]
    }

    pub fn is_rainbow_in(&self, d: &ColoredDigraph) -> bool {
        let [a, b, c] = self.colors_in(d);
        a != b && b != c && a != c
    }
}

/// All directed triangles, each reported once, in canonical triangle order.
pub fn directed_triangles(d: &Digraph) -> Vec<Triangle> {
    let mut out = vec![];
    for u in 0..d.order() {
        // vertices strictly greater than u (the least-rotation representative
        // has both other vertices above u)
        let above = if u + 1 >= 64 { 0 } else { !0u64 << (u + 1) };
        for v in bits_of(d.out_bits(u) & above) {
            for w in bits_of(d.out_bits(v) & d.in_bits(u) & above) {
                out.push(Triangle { u, v, w });
            }
        }
    }
    out
}

/// Directed triangles through the arc `u -> v`, in canonical triangle order.
pub fn triangles_through_arc(d: &Digraph, u: Vertex, v: Vertex) -> Vec<Triangle> {
    let mut out: Vec<Triangle> = bits_of(d.out_bits(v) & d.in_bits(u))
        .map(|w| Triangle::new(u, v, w))
        .collect();
    out.sort_unstable();
    out
}

/// Directed triangles containing the vertex `x` (plumbing filter).
pub fn triangles_through_vertex(d: &Digraph, x: Vertex) -> Vec<Triangle> {
    directed_triangles(d)
        .into_iter()
        .filter(|t| t.u == x || t.v == x || t.w == x)
        .collect()
}

/// First rainbow triangle in canonical triangle order, if any.
pub fn find_rainbow_triangle(d: &ColoredDigraph) -> Option<Triangle> {
    directed_triangles(d.digraph()).into_iter().find(|t| t.is_rainbow_in(d))
}

/// Count of rainbow triangles (test support; searches only need the witness).
pub fn count_rainbow_triangles(d: &ColoredDigraph) -> usize {
    directed_triangles(d.digraph()).iter().filter(|t| t.is_rainbow_in(d)).count()
}

/// Rainbow check restricted to triangles through `new_arc`: returns exactly
/// what [`find_rainbow_triangle`] would, filtered to triangles using that arc.
/// `None` guarantees no rainbow triangle goes through `new_arc`.
pub fn find_rainbow_triangle_incremental(
    d: &ColoredDigraph,
    new_arc: (Vertex, Vertex),
) -> Result<Option<Triangle>, TriangleError> {
    let (u, v) = new_arc;
    if !d.digraph().has_arc(u, v) {
        return Err(DigraphError::MissingArc(u, v).into());
    }
    Ok(triangles_through_arc(d.digraph(), u, v).into_iter().find(|t| t.is_rainbow_in(d)))
}

/// The maximum arc count among order-`n` digraphs with no directed triangle.
pub fn max_arcs_triangle_free(n: usize) -> Result<usize, TriangleError> {
    if n == 0 {
        return Err(TriangleError::EmptyOrder);
    }
    Ok(n * n / 2)
}

/// Per-arc triangle table for incremental search: entry `k` lists, for every
/// directed triangle through arc `k`, the canonical arc indices of its other
/// two arcs.
pub fn triangles_by_arc_index(d: &Digraph) -> Vec<Vec<(usize, usize)>> {
    let mut table = vec![vec![]; d.arc_count()];
    for t in directed_triangles(d) {
        let a = d.arc_index(t.u, t.v).expect("triangle arc present");
        let b = d.arc_index(t.v, t.w).expect("triangle arc present");
        let c = d.arc_index(t.w, t.u).expect("triangle arc present");
        table[a].push((b, c));
        table[b].push((c, a));
        table[c].push((a, b));
    }
    table
}
