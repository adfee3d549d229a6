//! Definitional predicates: semi-matched and semi-antimatched sets,
//! aligned partitions, split partitions, and the exhaustive oracle for the
//! doubled and almost-split classes.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, mask_of, Graph};
use crate::patterns::Embedding;

/// Largest order the exhaustive oracle accepts.
pub const ORACLE_MAX_ORDER: usize = 24;

/// Orders above this are searched in parallel.
const PARALLEL_FROM: usize = 15;

/// A partition of a graph into a semi-matched side `A` and a
/// semi-antimatched side `B`.
///
/// `matched_pairs` are exactly the edges inside `A`; `antimatched_pairs`
/// are exactly the non-edges inside `B`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoubledCertificate {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    pub matched_pairs: Vec<[usize; 2]>,
    pub antimatched_pairs: Vec<[usize; 2]>,
}

impl DoubledCertificate {
    /// Build a certificate from a vertex partition, reading the pairs off
    /// the graph. `None` if `A` is not semi-matched or `B` not
    /// semi-antimatched. Alignment is not checked.
    pub fn from_partition(g: &Graph, a: u64, b: u64) -> Option<Self> {
        let matched = pairs_within(g, a, false)?;
        let antimatched = pairs_within(g, b, true)?;
        Some(DoubledCertificate {
            a: bits(a).collect(),
            b: bits(b).collect(),
            matched_pairs: matched,
            antimatched_pairs: antimatched,
        })
    }

    pub fn a_mask(&self) -> u64 {
        mask_of(&self.a)
    }

    pub fn b_mask(&self) -> u64 {
        mask_of(&self.b)
    }

    pub fn pair_count(&self) -> usize {
        self.matched_pairs.len() + self.antimatched_pairs.len()
    }

    /// The same partition read in the complement graph: sides swap and
    /// matched pairs become antimatched pairs.
    pub fn swapped(&self) -> Self {
        DoubledCertificate {
            a: self.b.clone(),
            b: self.a.clone(),
            matched_pairs: self.antimatched_pairs.clone(),
            antimatched_pairs: self.matched_pairs.clone(),
        }
    }

    /// Sort sides and pairs so equal certificates compare equal.
    pub fn normalized(mut self) -> Self {
        self.a.sort_unstable();
        self.b.sort_unstable();
        for p in self
            .matched_pairs
            .iter_mut()
            .chain(self.antimatched_pairs.iter_mut())
        {
            p.sort_unstable();
        }
        self.matched_pairs.sort_unstable();
        self.antimatched_pairs.sort_unstable();
        self
    }

    /// Relabel through `map` (certificate vertex `v` becomes `map[v]`).
    pub fn mapped(&self, map: &[usize]) -> Self {
        let m = |v: &usize| map[*v];
        let mp = |p: &[usize; 2]| [map[p[0]], map[p[1]]];
        DoubledCertificate {
            a: self.a.iter().map(m).collect(),
            b: self.b.iter().map(m).collect(),
            matched_pairs: self.matched_pairs.iter().map(mp).collect(),
            antimatched_pairs: self.antimatched_pairs.iter().map(mp).collect(),
        }
        .normalized()
    }
}

/// Edges (or, with `anti`, non-edges) inside `mask`, if they form a
/// matching.
fn pairs_within(g: &Graph, mask: u64, anti: bool) -> Option<Vec<[usize; 2]>> {
    let mut pairs = Vec::new();
    for v in bits(mask) {
        let nb = if anti {
            !g.row(v) & mask & !(1u64 << v)
        } else {
            g.row(v) & mask
        };
        match nb.count_ones() {
            0 => {}
            1 => {
                let u = nb.trailing_zeros() as usize;
                if v < u {
                    pairs.push([v, u]);
                }
            }
            _ => return None,
        }
    }
    Some(pairs)
}

/// Decomposition of a graph into disjoint edges and isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiMatching {
    pub pairs: Vec<[usize; 2]>,
    pub singles: Vec<usize>,
}

impl SemiMatching {
    /// Number of pairs.
    pub fn a(&self) -> usize {
        self.pairs.len()
    }

    /// Number of unpaired vertices.
    pub fn b(&self) -> usize {
        self.singles.len()
    }
}

fn semi(g: &Graph, anti: bool) -> Option<SemiMatching> {
    let pairs = pairs_within(g, g.vertex_mask(), anti)?;
    let paired = pairs.iter().fold(0u64, |m, p| m | 1 << p[0] | 1 << p[1]);
    Some(SemiMatching {
        pairs,
        singles: bits(g.vertex_mask() & !paired).collect(),
    })
}

/// `Some` iff every vertex has degree at most one.
pub fn is_semi_matched(g: &Graph) -> Option<SemiMatching> {
    semi(g, false)
}

/// `Some` iff the complement is semi-matched; pairs are non-edges of `g`.
pub fn is_semi_antimatched(g: &Graph) -> Option<SemiMatching> {
    semi(g, true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    /// `G|A` has an edge that is not a listed matched pair, or a listed
    /// pair is not an edge.
    MatchedSide,
    /// Dually for non-edges of `G|B`.
    AntimatchedSide,
    /// A `B`-vertex sees both or neither end of a matched pair.
    MatchedAlignment,
    /// An `A`-vertex sees both or neither end of an antimatched pair.
    AntimatchedAlignment,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::MatchedSide => "matched side",
            Clause::AntimatchedSide => "antimatched side",
            Clause::MatchedAlignment => "matched alignment",
            Clause::AntimatchedAlignment => "antimatched alignment",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: Clause,
    /// The offending pair, followed by the third vertex for alignment
    /// clauses.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlignmentCheck {
    Valid,
    Violated(Violation),
}

impl AlignmentCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, AlignmentCheck::Valid)
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

/// Validate the shape of `cert` against `g`: sides partition the vertex
/// set and each pair lies in its side, pairs disjoint.
fn check_shape(g: &Graph, cert: &DoubledCertificate) -> Result<(u64, u64)> {
    let n = g.order();
    let mut a = 0u64;
    let mut b = 0u64;
    for (side, list, name) in [(&mut a, &cert.a, "A"), (&mut b, &cert.b, "B")] {
        for &v in list {
            if v >= n {
                return Err(invalid(format!("vertex {v} in {name} out of range")));
            }
            if *side >> v & 1 == 1 {
                return Err(invalid(format!("vertex {v} listed twice in {name}")));
            }
            *side |= 1 << v;
        }
    }
    if a & b != 0 {
        return Err(invalid(format!(
            "vertex {} in both A and B",
            (a & b).trailing_zeros()
        )));
    }
    if a | b != g.vertex_mask() {
        return Err(invalid(format!(
            "vertex {} in neither A nor B",
            (g.vertex_mask() & !(a | b)).trailing_zeros()
        )));
    }
    for (pairs, side, name) in [
        (&cert.matched_pairs, a, "matched"),
        (&cert.antimatched_pairs, b, "antimatched"),
    ] {
        let mut used = 0u64;
        for &[u, v] in pairs {
            if u == v || u >= n || v >= n || side >> u & 1 == 0 || side >> v & 1 == 0 {
                return Err(invalid(format!("{name} pair {u}-{v} not inside its side")));
            }
            if used >> u & 1 == 1 || used >> v & 1 == 1 {
                return Err(invalid(format!("{name} pairs overlap at {u}-{v}")));
            }
            used |= 1 << u | 1 << v;
        }
    }
    Ok((a, b))
}

/// Check every clause of a doubled certificate. Malformed partitions are
/// errors; a well-formed partition that fails a clause reports the first
/// violation found.
pub fn check_aligned(g: &Graph, cert: &DoubledCertificate) -> Result<AlignmentCheck> {
    let (a, b) = check_shape(g, cert)?;
    let listed = |pairs: &[[usize; 2]], u: usize, v: usize| {
        pairs
            .iter()
            .any(|p| (p[0] == u && p[1] == v) || (p[0] == v && p[1] == u))
    };
    for u in bits(a) {
        for v in bits(a & !full_mask(u + 1)) {
            if g.has_edge(u, v) != listed(&cert.matched_pairs, u, v) {
                return Ok(AlignmentCheck::Violated(Violation {
                    clause: Clause::MatchedSide,
                    vertices: vec![u, v],
                }));
            }
        }
    }
    for u in bits(b) {
        for v in bits(b & !full_mask(u + 1)) {
            if !g.has_edge(u, v) != listed(&cert.antimatched_pairs, u, v) {
                return Ok(AlignmentCheck::Violated(Violation {
                    clause: Clause::AntimatchedSide,
                    vertices: vec![u, v],
                }));
            }
        }
    }
    for &[u, v] in &cert.matched_pairs {
        let bad = b & !(g.row(u) ^ g.row(v));
        if bad != 0 {
            return Ok(AlignmentCheck::Violated(Violation {
                clause: Clause::MatchedAlignment,
                vertices: vec![u, v, bad.trailing_zeros() as usize],
            }));
        }
    }
    for &[x, y] in &cert.antimatched_pairs {
        let bad = a & !(g.row(x) ^ g.row(y));
        if bad != 0 {
            return Ok(AlignmentCheck::Violated(Violation {
                clause: Clause::AntimatchedAlignment,
                vertices: vec![x, y, bad.trailing_zeros() as usize],
            }));
        }
    }
    Ok(AlignmentCheck::Valid)
}

/// Whether `cert` is a valid certificate with every vertex paired, i.e.
/// `g` is itself double-split.
pub fn is_double_split_certificate(g: &Graph, cert: &DoubledCertificate) -> Result<bool> {
    Ok(check_aligned(g, cert)?.is_valid() && 2 * cert.pair_count() == g.order())
}

/// Fast test of one split: `b` is the `B` side, the rest of the vertices
/// form `A`. Returns the number of pairs when the split is valid.
#[inline]
fn split_pairs(rows: &[u64], all: u64, b: u64) -> Option<u32> {
    let a = all & !b;
    let mut pairs = 0;
    for v in bits(a) {
        let m = rows[v] & a;
        match m.count_ones() {
            0 => {}
            1 => {
                let u = m.trailing_zeros() as usize;
                if u > v {
                    if b & !(rows[u] ^ rows[v]) != 0 {
                        return None;
                    }
                    pairs += 1;
                }
            }
            _ => return None,
        }
    }
    for x in bits(b) {
        let m = !rows[x] & b & !(1u64 << x);
        match m.count_ones() {
            0 => {}
            1 => {
                let y = m.trailing_zeros() as usize;
                if y > x {
                    if a & !(rows[x] ^ rows[y]) != 0 {
                        return None;
                    }
                    pairs += 1;
                }
            }
            _ => return None,
        }
    }
    Some(pairs)
}

fn search(g: &Graph, max_pairs: u32) -> Result<Option<DoubledCertificate>> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::Capacity {
            what: "exhaustive oracle",
            n,
            max: ORACLE_MAX_ORDER,
        });
    }
    let rows = g.rows();
    let all = g.vertex_mask();
    let ok = |s: &u64| split_pairs(rows, all, *s).is_some_and(|p| p <= max_pairs);
    let total = 1u64 << n;
    let found = if n >= PARALLEL_FROM {
        (0..total).into_par_iter().find_first(ok)
    } else {
        (0..total).find(ok)
    };
    Ok(found
        .map(|b| DoubledCertificate::from_partition(g, all & !b, b).expect("split was validated")))
}

/// Exhaustive search over all `2^n` splits, `B` read as the binary counter
/// (so the all-`A` split comes first). Returns the first valid certificate.
pub fn is_doubled_oracle(g: &Graph) -> Result<Option<DoubledCertificate>> {
    search(g, u32::MAX)
}

/// Like [`is_doubled_oracle`] but only accepts certificates with at most
/// one matched or antimatched pair in total.
pub fn is_almost_split_oracle(g: &Graph) -> Result<Option<DoubledCertificate>> {
    search(g, 1)
}

/// Boolean form of the doubled oracle. Panics above
/// [`ORACLE_MAX_ORDER`]; intended for small graphs.
pub fn oracle_doubled(g: &Graph) -> bool {
    is_doubled_oracle(g)
        .expect("oracle is limited to small graphs")
        .is_some()
}

/// Boolean form of the almost-split oracle.
pub fn oracle_almost_split(g: &Graph) -> bool {
    is_almost_split_oracle(g)
        .expect("oracle is limited to small graphs")
        .is_some()
}

/// A partition into a clique and a stable set, if one exists.
///
/// Take vertices by descending degree (ties by label); the clique is the
/// longest prefix whose `i`-th vertex has degree at least `i - 1`. For a
/// split graph this prefix is always a maximum clique whose complement is
/// stable, so verifying the candidate decides the question.
pub fn split_partition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| g.degree(v) >= i)
        .count();
    let clique = mask_of(&order[..m]);
    let stable = g.vertex_mask() & !clique;
    (g.is_clique(clique) && g.is_stable(stable))
        .then(|| (bits(clique).collect(), bits(stable).collect()))
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

/// Complete a valid certificate to a double-split supergraph.
///
/// Every unpaired `A`-vertex `u` gets a partner `u'` adjacent to `u` alone
/// within `A`, and to a `B`-side vertex `z` exactly when `u` is not.
/// Every unpaired `B`-vertex `w` gets a partner `w'` adjacent to all of the
/// final `B` side except `w`, and to an `A`-side vertex exactly when `w` is
/// not. The original graph sits on vertices `0..n` in order.
pub fn extend_to_double_split(
    g: &Graph,
    cert: &DoubledCertificate,
) -> Result<(Graph, DoubledCertificate, Embedding)> {
    if let AlignmentCheck::Violated(v) = check_aligned(g, cert)? {
        return Err(Error::Misuse(format!(
            "certificate fails {} at {:?}",
            v.clause, v.vertices
        )));
    }
    let n = g.order();
    let paired = |pairs: &[[usize; 2]]| pairs.iter().fold(0u64, |m, p| m | 1 << p[0] | 1 << p[1]);
    let lone_a: Vec<usize> = bits(cert.a_mask() & !paired(&cert.matched_pairs)).collect();
    let lone_b: Vec<usize> = bits(cert.b_mask() & !paired(&cert.antimatched_pairs)).collect();
    let total = n + lone_a.len() + lone_b.len();
    if total > Graph::MAX_ORDER {
        return Err(Error::Capacity {
            what: "double-split completion",
            n: total,
            max: Graph::MAX_ORDER,
        });
    }
    // partner[v] for every vertex of the final graph.
    let mut partner = vec![usize::MAX; total];
    for &[u, v] in cert.matched_pairs.iter().chain(&cert.antimatched_pairs) {
        partner[u] = v;
        partner[v] = u;
    }
    for (next, &v) in (n..).zip(lone_a.iter().chain(&lone_b)) {
        partner[v] = next;
        partner[next] = v;
    }
    let new_a: Vec<usize> = (n..n + lone_a.len()).collect();
    let new_b: Vec<usize> = (n + lone_a.len()..total).collect();
    let side_a = cert.a_mask() | mask_of(&new_a);
    let side_b = cert.b_mask() | mask_of(&new_b);

    let mut h = Graph::empty(total);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    let adj = |h: &Graph, x: usize, y: usize| h.has_edge(x, y);
    // A-partners: only the partner inside A; complementary on the original
    // B vertices. Edges to new B-partners are fixed below.
    for &x in &new_a {
        let u = partner[x];
        h.add_edge(x, u);
        for z in bits(cert.b_mask()) {
            if !adj(&h, u, z) {
                h.add_edge(x, z);
            }
        }
    }
    // B-partners: the rest of B as a clique, complementary on all of A.
    for &y in &new_b {
        let w = partner[y];
        for z in bits(side_b & !(1u64 << y) & !(1u64 << w)) {
            h.add_edge(y, z);
        }
        for x in bits(side_a) {
            if !adj(&h, w, x) {
                h.add_edge(y, x);
            }
        }
    }

    let mut matched = cert.matched_pairs.clone();
    matched.extend(new_a.iter().map(|&x| [partner[x], x]));
    let mut antimatched = cert.antimatched_pairs.clone();
    antimatched.extend(new_b.iter().map(|&y| [partner[y], y]));
    let full = DoubledCertificate {
        a: bits(side_a).collect(),
        b: bits(side_b).collect(),
        matched_pairs: matched,
        antimatched_pairs: antimatched,
    }
    .normalized();
    if !is_double_split_certificate(&h, &full)? {
        return Err(Error::Internal(
            "completed graph is not double-split".into(),
        ));
    }
    if h.induced_mask(full_mask(n)) != *g {
        return Err(Error::Internal(
            "completion changed the original graph".into(),
        ));
    }
    Ok((h, full, Embedding::identity(n)))
}
