//! Simple undirected graphs on at most 64 vertices, one `u64` adjacency row
//! per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Iterate over the set bits of `mask`, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Bitmask of a vertex list. Vertices must be below 64.
pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | (1u64 << v))
}

/// Simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency holds the neighbourhood of `v` as a bitmask.
/// Rows are kept symmetric and irreflexive by every mutating method.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub const MAX_ORDER: usize = 64;

    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > 64`; use [`Graph::try_empty`] for untrusted sizes.
    pub fn empty(n: usize) -> Self {
        Self::try_empty(n).expect("graph order exceeds 64")
    }

    pub fn try_empty(n: usize) -> Result<Self> {
        if n > Self::MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph",
                n,
                max: Self::MAX_ORDER,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Path on `n` vertices, `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n >= 3` vertices, `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Build from raw adjacency rows. Rows are validated.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > Self::MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph",
                n,
                max: Self::MAX_ORDER,
            });
        }
        let outside = !full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & outside != 0 {
                return Err(Error::InvalidVertex {
                    vertex: (row & outside).trailing_zeros() as usize,
                    order: n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Misuse(format!(
                        "adjacency rows not symmetric at {v}-{u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Bitmask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid pair {u}-{v}");
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Append a vertex adjacent to exactly the vertices in `nbrs`.
    pub fn with_vertex(&self, nbrs: u64) -> Result<Self> {
        let n = self.n;
        if n == Self::MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph",
                n: n + 1,
                max: Self::MAX_ORDER,
            });
        }
        if nbrs & !full_mask(n) != 0 {
            return Err(Error::InvalidVertex {
                vertex: (nbrs & !full_mask(n)).trailing_zeros() as usize,
                order: n,
            });
        }
        let mut adj = self.adj.clone();
        for u in bits(nbrs) {
            adj[u] |= 1 << n;
        }
        adj.push(nbrs);
        Ok(Graph { n: n + 1, adj })
    }

    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `vertices`, relabelled by ascending original label.
    /// Duplicates are ignored.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            mask |= 1 << v;
        }
        Ok(self.induced_mask(mask))
    }

    /// Induced subgraph on the vertices of `mask` (bits beyond the order are
    /// ignored), relabelled by ascending original label.
    pub fn induced_mask(&self, mask: u64) -> Self {
        let mask = mask & self.vertex_mask();
        let keep: Vec<usize> = bits(mask).collect();
        let adj = keep.iter().map(|&v| compress(self.adj[v], mask)).collect();
        Graph { n: keep.len(), adj }
    }

    /// Delete one vertex; higher labels shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Self {
        self.induced_mask(self.vertex_mask() & !(1u64 << v))
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            let mut row = 0u64;
            for u in bits(self.adj[v]) {
                row |= 1 << perm[u];
            }
            adj[perm[v]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union, `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let mut g = Self::try_empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| (mask & !(1u64 << v)) & !self.adj[v] == 0)
    }

    pub fn is_stable(&self, mask: u64) -> bool {
        bits(mask).all(|v| mask & self.adj[v] == 0)
    }
}

/// Pack the bits of `row` selected by `mask` into the low bits, in order.
#[inline]
fn compress(row: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in bits(mask).enumerate() {
        out |= (row >> v & 1) << i;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_c5_is_c5_up_to_relabel() {
        let c5 = Graph::cycle(5);
        let co = c5.complement();
        assert_eq!(co.edge_count(), 5);
        assert!((0..5).all(|v| co.degree(v) == 2));
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (0, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_relabels_ascending() {
        let c6 = Graph::cycle(6);
        let p = c6.induced(&[5, 1, 2, 3, 4]).unwrap();
        assert_eq!(p, Graph::path(5));
        assert_eq!(c6.induced(&[0, 1, 2, 3, 4, 5]).unwrap(), c6);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = Graph::path(3);
        assert!(matches!(
            g.induced(&[0, 3]),
            Err(Error::InvalidVertex {
                vertex: 3,
                order: 3
            })
        ));
    }

    #[test]
    fn rows_validated() {
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
        assert!(matches!(
            Graph::from_rows(vec![0b01]),
            Err(Error::SelfLoop(0))
        ));
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::try_empty(65).is_err());
    }

    #[test]
    fn sixty_four_vertices() {
        let g = Graph::cycle(64);
        assert_eq!(g.edge_count(), 64);
        assert_eq!(g.complement().edge_count(), 64 * 63 / 2 - 64);
        assert!(g.with_vertex(0).is_err());
    }

    #[test]
    fn permuted_preserves_edges() {
        let g = Graph::path(4);
        let h = g.permuted(&[3, 2, 1, 0]);
        assert_eq!(h, g);
        let h = g.permuted(&[1, 0, 2, 3]);
        assert!(h.has_edge(1, 0) && h.has_edge(0, 2) && h.has_edge(2, 3));
    }
}
