//! Named obstruction graphs and induced-subgraph search.
//!
//! Paths and cycles are named by their number of *edges*: `P5` is the path
//! on six vertices, `C4` the four-cycle. Most graph software counts vertices
//! instead, so take care when cross-checking against other tools.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::canon::{canonicalize, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Base shapes in catalog declaration order: the twelve circus graphs, then
/// the auxiliary `C4` and `W4`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BasePattern {
    C5,
    K23,
    Watch,
    Tv,
    Flag,
    Fish,
    M21,
    P5,
    C6,
    Domino,
    Tent1,
    Tent2,
    C4,
    W4,
}

impl BasePattern {
    pub const ALL: [BasePattern; 14] = [
        BasePattern::C5,
        BasePattern::K23,
        BasePattern::Watch,
        BasePattern::Tv,
        BasePattern::Flag,
        BasePattern::Fish,
        BasePattern::M21,
        BasePattern::P5,
        BasePattern::C6,
        BasePattern::Domino,
        BasePattern::Tent1,
        BasePattern::Tent2,
        BasePattern::C4,
        BasePattern::W4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BasePattern::C5 => "C5",
            BasePattern::K23 => "K23",
            BasePattern::Watch => "watch",
            BasePattern::Tv => "TV",
            BasePattern::Flag => "flag",
            BasePattern::Fish => "fish",
            BasePattern::M21 => "M21",
            BasePattern::P5 => "P5",
            BasePattern::C6 => "C6",
            BasePattern::Domino => "domino",
            BasePattern::Tent1 => "tent1",
            BasePattern::Tent2 => "tent2",
            BasePattern::C4 => "C4",
            BasePattern::W4 => "W4",
        }
    }

    /// Order and edge list of the shape.
    pub fn edges(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            BasePattern::C5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            BasePattern::K23 => (5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
            // z0..z5: a four-cycle z1 z2 z3 z4 with pendants z0 at z1, z5 at z3.
            BasePattern::Watch => (6, &[(0, 1), (1, 2), (1, 4), (2, 3), (3, 4), (3, 5)]),
            BasePattern::Tv => (6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)]),
            // Four-cycle 2 3 4 5 with the tail 2-1-0.
            BasePattern::Flag => (6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 2)]),
            // Four-cycle 0 1 2 3 and triangle 0 4 5 sharing vertex 0.
            BasePattern::Fish => (6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0)]),
            // Vertex 0 isolated; edges 1-2 and 3-4.
            BasePattern::M21 => (5, &[(1, 2), (3, 4)]),
            BasePattern::P5 => (6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
            BasePattern::C6 => (6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]),
            // Two four-cycles 0 1 2 3 and 2 3 4 5 sharing the edge 2-3.
            BasePattern::Domino => (6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 2)]),
            // Path a b c d e = 0..4 with apex f = 5 on {a, b, c, e}.
            BasePattern::Tent1 => (
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (5, 0),
                    (5, 1),
                    (5, 2),
                    (5, 4),
                ],
            ),
            // Path a b c d e = 0..4 with apex f = 5 on {a, b, d, e}.
            BasePattern::Tent2 => (
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (5, 0),
                    (5, 1),
                    (5, 3),
                    (5, 4),
                ],
            ),
            BasePattern::C4 => (4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            // Rim 0 1 2 3, hub 4.
            BasePattern::W4 => (
                5,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (4, 0),
                    (4, 1),
                    (4, 2),
                    (4, 3),
                ],
            ),
        }
    }

    pub fn graph(self) -> Graph {
        let (n, edges) = self.edges();
        Graph::from_edges(n, edges).expect("catalog edge lists are valid")
    }
}

/// A catalog shape, possibly complemented.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PatternId {
    pub base: BasePattern,
    pub complemented: bool,
}

impl PatternId {
    pub const fn new(base: BasePattern) -> Self {
        PatternId {
            base,
            complemented: false,
        }
    }

    pub const fn co(base: BasePattern) -> Self {
        PatternId {
            base,
            complemented: true,
        }
    }

    pub fn complement(self) -> Self {
        PatternId {
            base: self.base,
            complemented: !self.complemented,
        }
    }

    /// The graph from the standard catalog.
    pub fn graph(self) -> &'static Graph {
        PatternCatalog::standard().graph(self)
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complemented {
            write!(f, "co-{}", self.base.name())
        } else {
            f.write_str(self.base.name())
        }
    }
}

impl FromStr for PatternId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (complemented, name) = match s.strip_prefix("co-") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        BasePattern::ALL
            .iter()
            .find(|b| b.name() == name)
            .map(|&base| PatternId { base, complemented })
            .ok_or_else(|| Error::Misuse(format!("unknown pattern name {s:?}")))
    }
}

impl Serialize for PatternId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PatternId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: PatternId,
    pub graph: Graph,
    pub canon: CanonicalForm,
}

/// Every base shape and its complement, in declaration order (base first).
#[derive(Clone, Debug)]
pub struct PatternCatalog {
    entries: Vec<CatalogEntry>,
}

impl PatternCatalog {
    pub fn build() -> Self {
        let mut entries = Vec::with_capacity(2 * BasePattern::ALL.len());
        for base in BasePattern::ALL {
            let g = base.graph();
            let co = g.complement();
            for (id, graph) in [(PatternId::new(base), g), (PatternId::co(base), co)] {
                let canon = canonicalize(&graph);
                entries.push(CatalogEntry { id, graph, canon });
            }
        }
        PatternCatalog { entries }
    }

    pub fn standard() -> &'static PatternCatalog {
        static CATALOG: OnceLock<PatternCatalog> = OnceLock::new();
        CATALOG.get_or_init(PatternCatalog::build)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    fn index(id: PatternId) -> usize {
        let b = BasePattern::ALL.iter().position(|&b| b == id.base).unwrap();
        2 * b + id.complemented as usize
    }

    pub fn graph(&self, id: PatternId) -> &Graph {
        &self.entries[Self::index(id)].graph
    }

    pub fn canon(&self, id: PatternId) -> &CanonicalForm {
        &self.entries[Self::index(id)].canon
    }

    /// First id in declaration order whose graph has this canonical form.
    pub fn lookup(&self, canon: &CanonicalForm) -> Option<PatternId> {
        self.entries
            .iter()
            .find(|e| &e.canon == canon)
            .map(|e| e.id)
    }

    /// Copy with one pair of `id`'s graph toggled (the complement entry is
    /// kept consistent). Used to check that self-tests notice a bad catalog.
    pub fn with_toggled_pair(&self, id: PatternId, u: usize, v: usize) -> Self {
        let mut out = self.clone();
        for complemented in [false, true] {
            let e = &mut out.entries[Self::index(PatternId {
                base: id.base,
                complemented,
            })];
            e.graph.toggle_edge(u, v);
            e.canon = canonicalize(&e.graph);
        }
        out
    }

    /// `name<TAB>graph6` per entry.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("name\tgraph6\n");
        for e in &self.entries {
            s.push_str(&format!("{}\t{}\n", e.id, graph6::encode(&e.graph)));
        }
        s
    }
}

const CIRCUS_BASES: [BasePattern; 12] = [
    BasePattern::C5,
    BasePattern::K23,
    BasePattern::Watch,
    BasePattern::Tv,
    BasePattern::Flag,
    BasePattern::Fish,
    BasePattern::M21,
    BasePattern::P5,
    BasePattern::C6,
    BasePattern::Domino,
    BasePattern::Tent1,
    BasePattern::Tent2,
];

fn with_complements(bases: &[BasePattern]) -> Vec<PatternId> {
    bases
        .iter()
        .flat_map(|&b| [PatternId::new(b), PatternId::co(b)])
        .collect()
}

/// The twelve minimal non-almost-split shapes and their complements.
pub fn circus() -> Vec<PatternId> {
    with_complements(&CIRCUS_BASES)
}

/// The circus members that are not doubled, with complements.
pub fn family_f_seed() -> Vec<PatternId> {
    with_complements(&CIRCUS_BASES[..6])
}

/// The circus members that are doubled, with complements.
pub fn doubled_circus() -> Vec<PatternId> {
    with_complements(&CIRCUS_BASES[6..])
}

/// `map[i]` is the host vertex playing pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn identity(n: usize) -> Self {
        Embedding {
            map: (0..n).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        crate::graph::mask_of(&self.map)
    }

    /// Edge- and non-edge-preserving injective map into `host`.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.order();
        if self.map.len() != k || self.map.iter().any(|&v| v >= host.order()) {
            return false;
        }
        if self.mask().count_ones() as usize != k {
            return false;
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| pattern.has_edge(i, j) == host.has_edge(self.map[i], self.map[j]))
        })
    }
}

/// Pattern vertices by descending degree, ties by label.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pattern.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    order
}

/// Lexicographically least induced embedding of `pattern` in `host`, where
/// the map sequence is compared in descending-degree pattern order.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return None;
    }
    if k == 0 {
        return Some(Embedding { map: Vec::new() });
    }
    let order = search_order(pattern);
    // Static candidates: enough neighbours and enough non-neighbours.
    let statics: Vec<u64> = order
        .iter()
        .map(|&p| {
            let d = pattern.degree(p);
            let nd = k - 1 - d;
            (0..n)
                .filter(|&v| host.degree(v) >= d && n - 1 - host.degree(v) >= nd)
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect();
    let mut placed = vec![0usize; k];
    if extend(host, pattern, &order, &statics, &mut placed, 0, 0) {
        let mut map = vec![0; k];
        for (i, &p) in order.iter().enumerate() {
            map[p] = placed[i];
        }
        Some(Embedding { map })
    } else {
        None
    }
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    statics: &[u64],
    placed: &mut [usize],
    depth: usize,
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = statics[depth] & !used;
    for j in 0..depth {
        let row = host.row(placed[j]);
        if pattern.has_edge(p, order[j]) {
            cand &= row;
        } else {
            cand &= !row;
        }
    }
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        placed[depth] = v;
        if extend(
            host,
            pattern,
            order,
            statics,
            placed,
            depth + 1,
            used | 1 << v,
        ) {
            return true;
        }
    }
    false
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_induced(host, pattern).is_some()
}

/// First pattern of `ids` (in the given order) occurring in `host`.
pub fn find_any_of_in(
    catalog: &PatternCatalog,
    host: &Graph,
    ids: &[PatternId],
) -> Option<(PatternId, Embedding)> {
    ids.iter()
        .find_map(|&id| find_induced(host, catalog.graph(id)).map(|e| (id, e)))
}

/// First pattern of `ids` occurring in `host`, trying ids in catalog
/// declaration order (base before complement).
pub fn find_any_of(host: &Graph, ids: &[PatternId]) -> Option<(PatternId, Embedding)> {
    let mut sorted = ids.to_vec();
    sorted.sort();
    sorted.dedup();
    find_any_of_in(PatternCatalog::standard(), host, &sorted)
}
