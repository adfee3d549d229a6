//! Canonical labelling by equitable-partition refinement and backtracking
//! over individualised vertices, with automorphism pruning.
//!
//! The canonical graph is the relabelling whose adjacency rows are
//! lexicographically least among all leaves of the search tree. Refinement is
//! permutation-equivariant, so the leaf set (and hence its minimum) is an
//! isomorphism invariant. Sized for the small orders used by mining; it is
//! correct up to 64 vertices but not tuned for large symmetric graphs.

use std::fmt;

use crate::graph::{bits, Graph};
use crate::graph6;

/// Isomorphism-invariant code: the graph6 encoding of the canonical graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    code: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> &[u8] {
        &self.code
    }

    /// The code as a graph6 string.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.code).expect("graph6 is ASCII")
    }

    /// The canonical representative graph.
    pub fn graph(&self) -> Graph {
        graph6::decode(self.as_graph6()).expect("canonical code is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_graph6())
    }
}

/// A canonical labelling: `order[i]` is the original vertex placed at
/// canonical position `i`; `graph` is the relabelled graph.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub order: Vec<usize>,
    pub graph: Graph,
}

impl Labeling {
    pub fn form(&self) -> CanonicalForm {
        CanonicalForm {
            n: self.graph.order(),
            code: graph6::encode(&self.graph).into_bytes(),
        }
    }
}

pub fn canonicalize(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && degree_sequence(g) == degree_sequence(h)
        && canonicalize(g) == canonicalize(h)
}

pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling {
            order: Vec::new(),
            graph: g.clone(),
        };
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
        prefix: Vec::with_capacity(n),
    };
    search.visit(vec![g.vertex_mask()]);
    let (_, order) = search.best.expect("search reaches at least one leaf");
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Labeling {
        graph: g.permuted(&pos),
        order,
    }
}

/// Split every cell by neighbour count into each splitter cell until the
/// ordered partition is equitable. Sub-cells are ordered by ascending count.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut counts = [0u64; 65];
    let mut si = 0;
    while si < cells.len() {
        let splitter = cells[si];
        let mut changed = false;
        let mut out = Vec::with_capacity(g.order());
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                out.push(cell);
                continue;
            }
            let mut lo = 64;
            let mut hi = 0;
            for v in bits(cell) {
                let k = (g.row(v) & splitter).count_ones() as usize;
                counts[k] |= 1 << v;
                lo = lo.min(k);
                hi = hi.max(k);
            }
            if lo == hi {
                counts[lo] = 0;
                out.push(cell);
                continue;
            }
            changed = true;
            for slot in counts.iter_mut().take(hi + 1).skip(lo) {
                if *slot != 0 {
                    out.push(*slot);
                    *slot = 0;
                }
            }
        }
        *cells = out;
        si = if changed { 0 } else { si + 1 };
    }
}

const MAX_STORED_AUTOS: usize = 256;

struct Search<'a> {
    g: &'a Graph,
    /// First leaf reached: (code, order, individualised prefix).
    first: Option<(Vec<u64>, Vec<usize>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
    prefix: Vec<usize>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the subtree is an automorphic image of an
    /// explored one and the search should resume at the first-path node at
    /// `level`.
    fn visit(&mut self, mut cells: Vec<u64>) -> Option<usize> {
        refine(self.g, &mut cells);
        let level = self.prefix.len();
        let Some(ci) = cells.iter().position(|c| c & (c - 1) != 0) else {
            return self.leaf(&cells);
        };
        let target = cells[ci];
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ci]);
            child.push(1 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[ci + 1..]);
            self.prefix.push(v);
            let jump = self.visit(child);
            self.prefix.pop();
            if let Some(k) = jump {
                if k < level {
                    return Some(k);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let n = self.g.order();
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let code: Vec<u64> = order
            .iter()
            .map(|&v| bits(self.g.row(v)).fold(0u64, |r, u| r | 1 << pos[u]))
            .collect();
        debug_assert_eq!(code.len(), n);

        let Some((first_code, first_order, first_prefix)) = &self.first else {
            self.first = Some((code.clone(), order.clone(), self.prefix.clone()));
            self.best = Some((code, order));
            return None;
        };
        if code == *first_code {
            let gamma = mapping(first_order, &order);
            let k = first_prefix
                .iter()
                .zip(&self.prefix)
                .position(|(a, b)| a != b)
                .unwrap_or(0);
            self.store(gamma);
            return Some(k);
        }
        let (best_code, best_order) = self.best.as_ref().expect("best set with first");
        match code.cmp(best_code) {
            std::cmp::Ordering::Less => self.best = Some((code, order)),
            std::cmp::Ordering::Equal => {
                let gamma = mapping(best_order, &order);
                self.store(gamma);
            }
            std::cmp::Ordering::Greater => {}
        }
        None
    }

    fn store(&mut self, gamma: Vec<usize>) {
        debug_assert!(is_automorphism(self.g, &gamma));
        if self.autos.len() < MAX_STORED_AUTOS {
            self.autos.push(gamma);
        }
    }

    /// Whether `v` lies in the orbit of an already explored sibling under the
    /// stored automorphisms that fix the current prefix pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if self.prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &gx) in gamma.iter().enumerate().take(n) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

pub fn is_automorphism(g: &Graph, gamma: &[usize]) -> bool {
    (0..g.order()).all(|v| {
        let image = bits(g.row(v)).fold(0u64, |r, u| r | 1 << gamma[u]);
        image == g.row(gamma[v])
    })
}
