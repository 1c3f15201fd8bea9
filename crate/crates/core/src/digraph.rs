//! Loopless simple digraphs on dense vertex ids, with adjacency queries,
//! induced subdigraphs, strong connectivity, and brute-force isomorphism
//! canonicalization for small orders.

use thiserror::Error;

/// Dense 0-based vertex id.
pub type Vertex = usize;

/// Largest order supported by [`Digraph::canonical_key`] (minimum over all
/// `n!` vertex permutations; everything at desk scale here needs `n <= 7`).
pub const CANONICAL_ORDER_CAP: usize = 8;

/// Largest order representable at all (one `u64` bitset per vertex row).
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("loop {0}->{0} not allowed")]
    LoopArc(Vertex),
    #[error("duplicate arc {0}->{1}")]
    DuplicateArc(Vertex, Vertex),
    #[error("arc {0}->{1} not present")]
    MissingArc(Vertex, Vertex),
    #[error("order {order} exceeds canonicalization cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
}

/// A loopless digraph without multiple arcs on vertices `0..n`.
///
/// Values are immutable after construction; every "mutation" builds a new
/// digraph. Arcs carry a fixed *canonical arc order*: ordered pairs `(u, v)`
/// sorted lexicographically (row-major over the adjacency matrix). All
/// arc-indexed data elsewhere in the crate follows this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    /// row_start[u] = number of arcs with tail < u; row_start[n] = arc count.
    row_start: Vec<usize>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs().collect::<Vec<_>>())
    }
}

fn low_mask(v: usize) -> u64 {
    (1u64 << v) - 1
}

/// Iterate the set bit positions of a row bitset in ascending order.
pub(crate) fn bits_of(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let v = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(v)
        }
    })
}

impl Digraph {
    fn from_rows(n: usize, out: Vec<u64>) -> Self {
        let mut inn = vec![0u64; n];
        for u in 0..n {
            for v in bits_of(out[u]) {
                inn[v] |= 1u64 << u;
            }
        }
        let mut row_start = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        for u in 0..n {
            row_start.push(acc);
            acc += out[u].count_ones() as usize;
        }
        row_start.push(acc);
        Digraph { n, out, inn, row_start }
    }

    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds representable cap {MAX_ORDER}");
        Self::from_rows(n, vec![0; n])
    }

    /// The complete digraph: both arcs between every vertex pair.
    pub fn complete(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds representable cap {MAX_ORDER}");
        let full = if n == 0 { 0 } else { low_mask(n) };
        let out = (0..n).map(|u| full & !(1u64 << u)).collect();
        Self::from_rows(n, out)
    }

    /// Build from an explicit arc list. Rejects loops, duplicates, and
    /// out-of-range endpoints.
    pub fn from_arcs(
        n: usize,
        arcs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, DigraphError> {
        assert!(n <= MAX_ORDER, "order {n} exceeds representable cap {MAX_ORDER}");
        let mut out = vec![0u64; n];
        for (u, v) in arcs {
            if u >= n {
                return Err(DigraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(DigraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(DigraphError::LoopArc(u));
            }
            if out[u] >> v & 1 == 1 {
                return Err(DigraphError::DuplicateArc(u, v));
            }
            out[u] |= 1u64 << v;
        }
        Ok(Self::from_rows(n, out))
    }

    /// Build from a bit mask over all `n(n-1)` ordered pairs in canonical
    /// arc order (bit `k` set = the k-th pair is an arc). Requires `n(n-1) <= 64`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        assert!(n == 0 || n * (n - 1) <= 64);
        let mut out = vec![0u64; n];
        let mut k = 0;
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                if mask >> k & 1 == 1 {
                    out[u] |= 1u64 << v;
                }
                k += 1;
            }
        }
        Self::from_rows(n, out)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// a(D): the number of arcs.
    pub fn arc_count(&self) -> usize {
        self.row_start[self.n]
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.out[u] >> v & 1 == 1
    }

    /// Out-neighborhood of `u` as a bitset.
    pub fn out_bits(&self, u: Vertex) -> u64 {
        self.out[u]
    }

    /// In-neighborhood of `u` as a bitset.
    pub fn in_bits(&self, u: Vertex) -> u64 {
        self.inn[u]
    }

    pub fn out_neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        bits_of(self.out[u])
    }

    pub fn in_neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        bits_of(self.inn[u])
    }

    /// (in-degree, out-degree, degree) of `v`; degree is their sum.
    pub fn degrees(&self, v: Vertex) -> Result<(usize, usize, usize), DigraphError> {
        if v >= self.n {
            return Err(DigraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        let din = self.inn[v].count_ones() as usize;
        let dout = self.out[v].count_ones() as usize;
        Ok((din, dout, din + dout))
    }

    /// Arcs in canonical arc order: `(u, v)` ascending by `u`, then by `v`.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| bits_of(self.out[u]).map(move |v| (u, v)))
    }

    /// Position of arc `(u, v)` in canonical arc order, if present.
    pub fn arc_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if !self.has_arc(u, v) {
            return None;
        }
        Some(self.row_start[u] + (self.out[u] & low_mask(v)).count_ones() as usize)
    }

    /// The arc at canonical position `idx`. Panics if out of range.
    pub fn arc_at(&self, idx: usize) -> (Vertex, Vertex) {
        let u = match self.row_start.binary_search(&idx) {
            // row_start may repeat for empty rows; take the last row starting <= idx
            Ok(mut r) => {
                while r + 1 < self.row_start.len() && self.row_start[r + 1] == idx {
                    r += 1;
                }
                r
            }
            Err(r) => r - 1,
        };
        let offset = idx - self.row_start[u];
        let v = bits_of(self.out[u]).nth(offset).expect("arc index out of range");
        (u, v)
    }

    /// Subdigraph induced by the vertex set `s`, reindexed densely by
    /// ascending original id.
    pub fn induced(&self, s: &[Vertex]) -> Result<Self, DigraphError> {
        let mut keep = vec![];
        let mut seen = 0u64;
        for &v in s {
            if v >= self.n {
                return Err(DigraphError::VertexOutOfRange { vertex: v, order: self.n });
            }
            if seen >> v & 1 == 0 {
                seen |= 1u64 << v;
                keep.push(v);
            }
        }
        keep.sort_unstable();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut out = vec![0u64; keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for w in bits_of(self.out[v] & seen) {
                out[i] |= 1u64 << new_id[w];
            }
        }
        Ok(Self::from_rows(keep.len(), out))
    }

    /// Delete vertex `v`; remaining vertices are reindexed densely.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Self, DigraphError> {
        if v >= self.n {
            return Err(DigraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        let keep: Vec<Vertex> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn delete_arc(&self, u: Vertex, v: Vertex) -> Result<Self, DigraphError> {
        if !self.has_arc(u, v) {
            return Err(DigraphError::MissingArc(u, v));
        }
        let mut out = self.out.clone();
        out[u] &= !(1u64 << v);
        Ok(Self::from_rows(self.n, out))
    }

    pub fn with_arc(&self, u: Vertex, v: Vertex) -> Result<Self, DigraphError> {
        if u >= self.n {
            return Err(DigraphError::VertexOutOfRange { vertex: u, order: self.n });
        }
        if v >= self.n {
            return Err(DigraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        if u == v {
            return Err(DigraphError::LoopArc(u));
        }
        if self.has_arc(u, v) {
            return Err(DigraphError::DuplicateArc(u, v));
        }
        let mut out = self.out.clone();
        out[u] |= 1u64 << v;
        Ok(Self::from_rows(self.n, out))
    }

    /// Relabel vertices: `perm[old] = new`. `perm` must be a bijection on `0..n`.
    pub fn permuted(&self, perm: &[Vertex]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen >> p & 1 == 0, "not a permutation");
            seen |= 1u64 << p;
        }
        let mut out = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits_of(self.out[u]) {
                out[perm[u]] |= 1u64 << perm[v];
            }
        }
        Self::from_rows(self.n, out)
    }

    fn reach(&self, rows: &[u64], start: Vertex) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits_of(frontier) {
                next |= rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// True iff every ordered vertex pair is joined by a directed path.
    /// A single vertex (and the empty digraph) counts as strongly connected.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let full = low_mask(self.n);
        self.reach(&self.out, 0) == full && self.reach(&self.inn, 0) == full
    }

    /// Isomorphism-invariant key: the lexicographically minimal row-major
    /// adjacency bit-matrix over all vertex permutations. Orders above
    /// [`CANONICAL_ORDER_CAP`] are an error.
    pub fn canonical_key(&self) -> Result<CanonicalKey, DigraphError> {
        let n = self.n;
        if n > CANONICAL_ORDER_CAP {
            return Err(DigraphError::OrderCapExceeded { order: n, cap: CANONICAL_ORDER_CAP });
        }
        let mut best = [u8::MAX; CANONICAL_ORDER_CAP];
        best[..n].copy_from_slice(&vec![u8::MAX; n]);
        if n == 0 {
            return Ok(CanonicalKey { n: 0, rows: [0; CANONICAL_ORDER_CAP] });
        }
        let mut sigma: [usize; CANONICAL_ORDER_CAP] = [0; CANONICAL_ORDER_CAP];
        for (i, s) in sigma.iter_mut().enumerate() {
            *s = i;
        }
        let mut first = true;
        permute_in_place(&mut sigma, n, &mut |sigma| {
            // Row i of the permuted matrix, packed MSB-first so that byte
            // comparison matches lexicographic bit order.
            let mut rows = [0u8; CANONICAL_ORDER_CAP];
            for i in 0..n {
                let src = self.out[sigma[i]];
                let mut row = 0u8;
                for (j, s) in sigma.iter().enumerate().take(n) {
                    if src >> s & 1 == 1 {
                        row |= 1 << (n - 1 - j);
                    }
                }
                match row.cmp(&best[i]) {
                    std::cmp::Ordering::Greater if !first => return,
                    std::cmp::Ordering::Less => {
                        // strictly better prefix: finish the remaining rows unconditionally
                        rows[i] = row;
                        for k in i + 1..n {
                            let src = self.out[sigma[k]];
                            let mut r = 0u8;
                            for (j, s) in sigma.iter().enumerate().take(n) {
                                if src >> s & 1 == 1 {
                                    r |= 1 << (n - 1 - j);
                                }
                            }
                            rows[k] = r;
                        }
                        best[..n].copy_from_slice(&rows[..n]);
                        first = false;
                        return;
                    }
                    _ => rows[i] = row,
                }
            }
            best[..n].copy_from_slice(&rows[..n]);
            first = false;
        });
        let mut rows = [0u8; CANONICAL_ORDER_CAP];
        rows[..n].copy_from_slice(&best[..n]);
        Ok(CanonicalKey { n: n as u8, rows })
    }
}

/// Heap's algorithm over the first `n` entries, invoking `f` on every
/// permutation of the working array.
fn permute_in_place(
    arr: &mut [usize; CANONICAL_ORDER_CAP],
    n: usize,
    f: &mut impl FnMut(&[usize; CANONICAL_ORDER_CAP]),
) {
    fn rec(
        arr: &mut [usize; CANONICAL_ORDER_CAP],
        k: usize,
        f: &mut impl FnMut(&[usize; CANONICAL_ORDER_CAP]),
    ) {
        if k <= 1 {
            f(arr);
            return;
        }
        for i in 0..k {
            rec(arr, k - 1, f);
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    rec(arr, n, f);
}

/// Permutation-minimized adjacency encoding; equal keys identify isomorphic
/// digraphs within the supported order range.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey {
    n: u8,
    /// Row i of the minimal matrix, packed MSB-first into the low `n` bit
    /// positions `n-1..=0`.
    rows: [u8; CANONICAL_ORDER_CAP],
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The key as a byte string: the order, then the n*n matrix bits packed
    /// row-major, MSB-first.
    pub fn bytes(&self) -> Vec<u8> {
        let n = self.n as usize;
        let mut bits = Vec::with_capacity(1 + n * n);
        for i in 0..n {
            for j in 0..n {
                bits.push(self.rows[i] >> (n - 1 - j) & 1);
            }
        }
        let mut out = vec![self.n];
        for chunk in bits.chunks(8) {
            let mut byte = 0u8;
            for (k, b) in chunk.iter().enumerate() {
                byte |= b << (7 - k);
            }
            out.push(byte);
        }
        out
    }

    /// Rebuild the canonical representative digraph from the key.
    pub fn to_digraph(&self) -> Digraph {
        let n = self.n as usize;
        let mut out = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if self.rows[i] >> (n - 1 - j) & 1 == 1 {
                    out[i] |= 1u64 << j;
                }
            }
        }
        Digraph::from_rows(n, out)
    }
}
