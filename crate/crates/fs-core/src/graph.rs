//! Undirected simple graphs on small vertex sets.
//!
//! Vertices are labeled `1..=n` in the public API (the same convention the
//! families and certificates use); adjacency is stored as one bitmask per
//! vertex, which keeps every predicate here a few word operations. Values are
//! immutable after construction, so they can be shared freely across threads.
//!
//! Disconnected graphs and the 0-vertex graph are first-class values: the
//! family constructors produce unions such as `Path ∪ Tad` whose pieces can
//! degenerate to nothing.

use std::fmt;

use crate::error::GraphError;

/// Hard cap on vertex count, inherited from the 64-bit permutation ranks.
pub const MAX_VERTICES: usize = 20;

/// An undirected simple graph on vertices `1..=n`, `n <= 20`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from 1-based edge pairs. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u < 1 || u > self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v < 1 || v > self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n);
        self.adj[u - 1] & (1 << (v - 1)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Degrees of vertices `1..=n`, in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|m| m.count_ones() as usize).collect()
    }

    /// `None` on the 0-vertex graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().into_iter().min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.degrees().into_iter().max()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as 1-based pairs `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            let mut m = self.adj[u - 1] & !((1u32 << u) - 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// 1-based neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut m = self.adj[v - 1];
        let mut out = Vec::with_capacity(m.count_ones() as usize);
        while m != 0 {
            out.push(m.trailing_zeros() as usize + 1);
            m &= m - 1;
        }
        out
    }

    /// Neighbor bitmask of 0-based vertex `v0` (bit `i` set iff `i+1 ~ v0+1`).
    pub(crate) fn adjacency_mask(&self, v0: usize) -> u32 {
        self.adj[v0]
    }

    /// The complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let all = if self.n == 0 {
            0
        } else {
            (1u32 << self.n) - 1
        };
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, m)| all & !m & !(1 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; the second operand's vertices are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let total = self.n + other.n;
        if total > MAX_VERTICES {
            return Err(GraphError::UnionTooLarge { total });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n: total, adj })
    }

    /// Removes vertex `v`, compacting the remaining labels to `1..=n-1`
    /// while preserving their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v < 1 || v > self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let v0 = v - 1;
        let low = (1u32 << v0) - 1;
        let mut adj = Vec::with_capacity(self.n - 1);
        for (i, &m) in self.adj.iter().enumerate() {
            if i == v0 {
                continue;
            }
            let cleared = m & !(1 << v0);
            adj.push((cleared & low) | ((cleared & !low) >> 1));
        }
        Ok(Graph {
            n: self.n - 1,
            adj,
        })
    }

    /// Bitmask of the component containing 0-based vertex `start0`.
    fn component_mask(&self, start0: usize) -> u32 {
        let mut seen = 1u32 << start0;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Number of connected components (0 for the empty graph).
    pub fn component_count(&self) -> usize {
        let mut remaining = if self.n == 0 {
            0
        } else {
            (1u32 << self.n) - 1
        };
        let mut count = 0;
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            remaining &= !self.component_mask(v);
            count += 1;
        }
        count
    }

    /// True when there is at most one component. A single vertex counts as
    /// connected, and so does the empty graph (vacuously).
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Vertices whose deletion increases the component count, ascending.
    /// On a connected graph these are exactly the cut vertices.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let base = self.component_count();
        (1..=self.n)
            .filter(|&v| {
                self.delete_vertex(v)
                    .expect("vertex in range")
                    .component_count()
                    > base
            })
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(d)?;
        Graph::from_edges(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

/// An edge-preserving injection from a pattern graph into a host graph.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct IsoWitness {
    /// `mapping[i]` is the 1-based host vertex assigned to pattern vertex `i+1`.
    pub mapping: Vec<usize>,
}

impl IsoWitness {
    /// Checks injectivity and that every pattern edge lands on a host edge.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.mapping.len() != pattern.n() {
            return false;
        }
        let mut used = 0u32;
        for &w in &self.mapping {
            if w < 1 || w > host.n() {
                return false;
            }
            let bit = 1u32 << (w - 1);
            if used & bit != 0 {
                return false;
            }
            used |= bit;
        }
        pattern
            .edges()
            .iter()
            .all(|&(u, v)| host.has_edge(self.mapping[u - 1], self.mapping[v - 1]))
    }
}

/// Decides isomorphism by backtracking over color classes produced by
/// iterated neighbor-degree refinement. Exact for any input; sized for n <= 14.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.n() == 0 {
        return true;
    }
    let cg = refine_colors(g);
    let ch = refine_colors(h);
    let mut mg = cg.clone();
    let mut mh = ch.clone();
    mg.sort_unstable();
    mh.sort_unstable();
    if mg != mh {
        return false;
    }

    // Match rarest colors first to fail fast.
    let mut order: Vec<usize> = (0..g.n()).collect();
    let freq = |c: u32| cg.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&v| (freq(cg[v]), cg[v]));

    let mut mapping = vec![usize::MAX; g.n()];
    let mut used = 0u32;
    backtrack_iso(g, h, &cg, &ch, &order, 0, &mut mapping, &mut used)
}

fn backtrack_iso(
    g: &Graph,
    h: &Graph,
    cg: &[u32],
    ch: &[u32],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut u32,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let vmask = g.adjacency_mask(v);
    for w in 0..h.n() {
        if *used & (1 << w) != 0 || ch[w] != cg[v] {
            continue;
        }
        // Adjacency with every already-mapped vertex must match exactly.
        let ok = order[..depth].iter().all(|&u| {
            let gu = vmask & (1 << u) != 0;
            let hu = h.adjacency_mask(w) & (1 << mapping[u]) != 0;
            gu == hu
        });
        if !ok {
            continue;
        }
        mapping[v] = w;
        *used |= 1 << w;
        if backtrack_iso(g, h, cg, ch, order, depth + 1, mapping, used) {
            return true;
        }
        *used &= !(1 << w);
        mapping[v] = usize::MAX;
    }
    false
}

/// Iterated refinement: a vertex's color is repeatedly replaced by
/// (color, sorted multiset of neighbor colors) until the partition stabilizes.
fn refine_colors(g: &Graph) -> Vec<u32> {
    use std::collections::BTreeMap;
    let n = g.n();
    let mut colors: Vec<u32> = (0..n).map(|v| g.adjacency_mask(v).count_ones()).collect();
    for _ in 0..n {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<u32> = Vec::new();
            let mut m = g.adjacency_mask(v);
            while m != 0 {
                nb.push(colors[m.trailing_zeros() as usize]);
                m &= m - 1;
            }
            nb.sort_unstable();
            sigs.push((colors[v], nb));
        }
        let mut palette: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for sig in &sigs {
            let next = palette.len() as u32;
            palette.entry(sig).or_insert(next);
        }
        let next: Vec<u32> = sigs.iter().map(|s| palette[s]).collect();
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

/// Searches for an injection of `pattern` into `host` mapping edges to edges
/// (subgraph in the vertex-and-edge-subset sense, not induced). Returns a
/// verified witness, or `None` when no embedding exists.
pub fn contains_subgraph(pattern: &Graph, host: &Graph) -> Option<IsoWitness> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    // Place high-degree pattern vertices early, preferring ones attached to
    // already-placed vertices so adjacency constraints prune immediately.
    let np = pattern.n();
    let mut order: Vec<usize> = Vec::with_capacity(np);
    let mut placed = 0u32;
    while order.len() < np {
        let best = (0..np)
            .filter(|&v| placed & (1 << v) == 0)
            .max_by_key(|&v| {
                let attached = (pattern.adjacency_mask(v) & placed).count_ones();
                (attached, pattern.adjacency_mask(v).count_ones())
            })
            .expect("unplaced vertex exists");
        order.push(best);
        placed |= 1 << best;
    }

    let mut mapping = vec![usize::MAX; np];
    let mut used = 0u32;
    if embed(pattern, host, &order, 0, &mut mapping, &mut used) {
        let witness = IsoWitness {
            mapping: mapping.iter().map(|&w| w + 1).collect(),
        };
        assert!(witness.verify(pattern, host), "embedding must be valid");
        Some(witness)
    } else {
        None
    }
}

fn embed(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut u32,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let vdeg = pattern.adjacency_mask(v).count_ones();
    for w in 0..host.n() {
        if *used & (1 << w) != 0 || host.adjacency_mask(w).count_ones() < vdeg {
            continue;
        }
        // Every placed pattern-neighbor of v must already be host-adjacent to w.
        let ok = order[..depth].iter().all(|&u| {
            pattern.adjacency_mask(v) & (1 << u) == 0
                || host.adjacency_mask(w) & (1 << mapping[u]) != 0
        });
        if !ok {
            continue;
        }
        mapping[v] = w;
        *used |= 1 << w;
        if embed(pattern, host, order, depth + 1, mapping, used) {
            return true;
        }
        *used &= !(1 << w);
        mapping[v] = usize::MAX;
    }
    false
}
