//! Enumeration of small graphs up to isomorphism and mining of minimal
//! forbidden induced subgraphs.
//!
//! The generator extends canonical parents by one vertex and keeps a child
//! only if its canonically last vertex can be removed to give back the
//! parent. Each isomorphism class then has exactly one parent; duplicates
//! from the same parent are dropped by canonical code.

use std::collections::{BTreeMap, HashSet};
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_labeling, canonicalize, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::patterns::{find_induced, Embedding, PatternCatalog};
use crate::recognition::ClassId;

/// Largest order the built-in generator produces.
pub const GENERATOR_MAX_ORDER: usize = 9;

/// Largest order of the brute-force cross-check.
pub const BRUTE_MAX_ORDER: usize = 7;

type Level = Vec<(Graph, CanonicalForm)>;

fn capacity(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::Capacity { what, n, max });
    }
    Ok(())
}

/// Canonical children of a canonical parent, in order of first discovery.
/// `keep` filters children before they are returned.
fn children(parent: &Graph, code: &CanonicalForm, keep: &(dyn Fn(&Graph) -> bool + Sync)) -> Level {
    let k = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 0..1u64 << k {
        let child = parent
            .with_vertex(nbrs)
            .expect("generator stays below 64 vertices");
        let lab = canonical_labeling(&child);
        let last = lab.order[k];
        if last != k && canonicalize(&child.delete_vertex(last)) != *code {
            continue;
        }
        let form = lab.form();
        if seen.contains(&form) {
            continue;
        }
        seen.insert(form.clone());
        if keep(&lab.graph) {
            out.push((lab.graph, form));
        }
    }
    out
}

fn next_level(parents: &Level, keep: &(dyn Fn(&Graph) -> bool + Sync)) -> Level {
    parents
        .par_iter()
        .map(|(g, code)| children(g, code, keep))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn root() -> Level {
    let g = Graph::empty(0);
    let code = canonicalize(&g);
    vec![(g, code)]
}

/// One canonical representative of every graph on `n` vertices, in a fixed
/// order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_up_to(n)?.pop().expect("level n exists"))
}

/// Levels `0..=max_order` of the generator.
pub fn enumerate_up_to(max_order: usize) -> Result<Vec<Vec<Graph>>> {
    capacity("graph generator", max_order, GENERATOR_MAX_ORDER)?;
    let mut levels = vec![root()];
    for _ in 0..max_order {
        let next = next_level(levels.last().unwrap(), &|_| true);
        levels.push(next);
    }
    Ok(levels
        .into_iter()
        .map(|l| l.into_iter().map(|(g, _)| g).collect())
        .collect())
}

/// The same set as [`enumerate_graphs`] obtained by canonicalizing every
/// labelled graph, sorted by canonical code.
pub fn enumerate_brute(n: usize) -> Result<Vec<Graph>> {
    capacity("brute-force enumeration", n, BRUTE_MAX_ORDER)?;
    let slots = n * n.saturating_sub(1) / 2;
    let forms: HashSet<CanonicalForm> = (0..1u64 << slots)
        .into_par_iter()
        .map(|code| {
            let mut g = Graph::empty(n);
            let mut bit = 0;
            for v in 1..n {
                for u in 0..v {
                    if code >> bit & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            canonicalize(&g)
        })
        .collect();
    let mut forms: Vec<CanonicalForm> = forms.into_iter().collect();
    forms.sort();
    Ok(forms.iter().map(CanonicalForm::graph).collect())
}

/// Where candidate graphs come from.
pub enum Source<'a> {
    /// The built-in generator (orders up to [`GENERATOR_MAX_ORDER`]).
    Generator,
    /// An explicit corpus, for instance read from a graph6 file. It must
    /// contain every graph up to the requested order (in any labelling).
    Graphs(&'a [Graph]),
}

/// Read a graph6 corpus.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    graph6::read_all(reader)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub name: String,
    pub canon: CanonicalForm,
    pub graph: Graph,
}

/// Minimal non-members of a hereditary class up to some order, sorted by
/// order and canonical code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionSet {
    pub class: String,
    pub max_order: usize,
    pub members: Vec<Obstruction>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MiningSummary {
    pub class: String,
    pub max_order: usize,
    pub count: usize,
    /// Complement pairs counted once.
    pub count_up_to_complement: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub complement_closure: bool,
}

impl ObstructionSet {
    fn new(class: &str, max_order: usize, forms: impl IntoIterator<Item = CanonicalForm>) -> Self {
        let mut forms: Vec<CanonicalForm> = forms.into_iter().collect();
        forms.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        forms.dedup();
        let catalog = PatternCatalog::standard();
        let mut per_order: BTreeMap<usize, usize> = BTreeMap::new();
        let members = forms
            .into_iter()
            .map(|canon| {
                let graph = canon.graph();
                let name = match catalog.lookup(&canon) {
                    Some(id) => id.to_string(),
                    None => {
                        let i = per_order.entry(canon.order()).or_default();
                        *i += 1;
                        format!("n{}-{}", canon.order(), i)
                    }
                };
                Obstruction { name, canon, graph }
            })
            .collect();
        ObstructionSet {
            class: class.to_string(),
            max_order,
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn forms(&self) -> HashSet<&CanonicalForm> {
        self.members.iter().map(|m| &m.canon).collect()
    }

    pub fn contains_form(&self, form: &CanonicalForm) -> bool {
        self.members.iter().any(|m| &m.canon == form)
    }

    pub fn is_complement_closed(&self) -> bool {
        let forms = self.forms();
        self.members
            .iter()
            .all(|m| forms.contains(&canonicalize(&m.graph.complement())))
    }

    pub fn count_up_to_complement(&self) -> usize {
        let forms = self.forms();
        let mut seen: HashSet<&CanonicalForm> = HashSet::new();
        let mut count = 0;
        for m in &self.members {
            if seen.contains(&m.canon) {
                continue;
            }
            count += 1;
            seen.insert(&m.canon);
            let co = canonicalize(&m.graph.complement());
            if let Some(f) = forms.get(&co) {
                seen.insert(f);
            }
        }
        count
    }

    pub fn summary(&self) -> MiningSummary {
        let mut hist = BTreeMap::new();
        for m in &self.members {
            *hist.entry(m.graph.order()).or_default() += 1;
        }
        MiningSummary {
            class: self.class.clone(),
            max_order: self.max_order,
            count: self.len(),
            count_up_to_complement: self.count_up_to_complement(),
            order_histogram: hist,
            complement_closure: self.is_complement_closed(),
        }
    }

    /// `name<TAB>graph6` lines with a header.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("name\tgraph6\n");
        for m in &self.members {
            s.push_str(&format!("{}\t{}\n", m.name, m.canon));
        }
        s
    }

    /// Parse the format written by [`ObstructionSet::to_tsv`].
    pub fn from_tsv<R: BufRead>(class: &str, max_order: usize, reader: R) -> Result<Self> {
        let mut forms = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if i == 0 && line.starts_with("name\t") || line.trim().is_empty() {
                continue;
            }
            let code = line.split('\t').nth(1).unwrap_or(line.as_str()).trim();
            let g = graph6::decode(code).map_err(|e| graph6::at_line(i + 1, e))?;
            forms.push(canonicalize(&g));
        }
        Ok(ObstructionSet::new(class, max_order, forms))
    }

    /// First member (in set order) occurring as an induced subgraph.
    pub fn find_in(&self, g: &Graph) -> Option<(&Obstruction, Embedding)> {
        self.members
            .iter()
            .find_map(|m| find_induced(g, &m.graph).map(|e| (m, e)))
    }
}

/// All minimal non-members up to `max_order` for a hereditary predicate.
pub fn mine_obstructions(
    class: &str,
    pred: &(dyn Fn(&Graph) -> bool + Sync),
    max_order: usize,
    source: Source<'_>,
) -> Result<ObstructionSet> {
    let forms: Vec<CanonicalForm> = match source {
        Source::Generator => {
            capacity("graph generator", max_order, GENERATOR_MAX_ORDER)?;
            mine_generated(pred, max_order)
        }
        Source::Graphs(graphs) => graphs
            .par_iter()
            .filter(|g| g.order() <= max_order && is_minimal_non_member(pred, g))
            .map(canonicalize)
            .collect(),
    };
    Ok(ObstructionSet::new(class, max_order, forms))
}

/// Mine the obstructions of one of the crate's classes, deciding
/// membership with the exhaustive oracle.
pub fn mine_class(class: ClassId, max_order: usize, source: Source<'_>) -> Result<ObstructionSet> {
    mine_obstructions(class.name(), &|g| class.oracle(g), max_order, source)
}

fn is_minimal_non_member(pred: &(dyn Fn(&Graph) -> bool + Sync), g: &Graph) -> bool {
    !pred(g) && (0..g.order()).all(|v| pred(&g.delete_vertex(v)))
}

/// Only members are extended: a minimal non-member's canonical parent is
/// one of its vertex-deleted subgraphs, hence a member.
fn mine_generated(pred: &(dyn Fn(&Graph) -> bool + Sync), max_order: usize) -> Vec<CanonicalForm> {
    let mut found = Vec::new();
    let mut members = root();
    for _ in 0..max_order {
        let known: HashSet<&CanonicalForm> = members.iter().map(|(_, c)| c).collect();
        let kids = next_level(&members, &|_| true);
        let (inside, outside): (Level, Level) = kids.into_par_iter().partition(|(g, _)| pred(g));
        found.extend(
            outside
                .into_par_iter()
                .filter_map(|(g, c)| {
                    (0..g.order())
                        .all(|v| known.contains(&canonicalize(&g.delete_vertex(v))))
                        .then_some(c)
                })
                .collect::<Vec<_>>(),
        );
        members = inside;
    }
    found
}

/// One graph on which the predicate and the obstruction set disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub graph6: String,
    pub predicate: bool,
    /// The obstruction found, if any.
    pub obstruction: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub checked: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl CharacterizationReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Check `pred(g)` against "no member of `set` is induced in `g`".
pub fn verify_characterization(
    pred: &(dyn Fn(&Graph) -> bool + Sync),
    set: &ObstructionSet,
    graphs: &[Graph],
) -> CharacterizationReport {
    let discrepancies: Vec<Discrepancy> = graphs
        .par_iter()
        .filter_map(|g| {
            let p = pred(g);
            let hit = set.find_in(g).map(|(m, _)| m.name.clone());
            (p == hit.is_some()).then(|| Discrepancy {
                graph6: graph6::encode(g),
                predicate: p,
                obstruction: hit,
            })
        })
        .collect();
    CharacterizationReport {
        checked: graphs.len(),
        discrepancies,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::circus;
    use crate::structure::is_split;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = enumerate_up_to(7).unwrap().iter().map(Vec::len).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn generator_matches_brute_force() {
        for n in 0..=6 {
            let mut a: Vec<CanonicalForm> = enumerate_graphs(n)
                .unwrap()
                .iter()
                .map(canonicalize)
                .collect();
            a.sort();
            let b: Vec<CanonicalForm> = enumerate_brute(n)
                .unwrap()
                .iter()
                .map(canonicalize)
                .collect();
            assert_eq!(a, b, "n = {n}");
        }
    }

    #[test]
    fn generator_output_is_canonical_and_distinct() {
        let gs = enumerate_graphs(6).unwrap();
        let forms: HashSet<CanonicalForm> = gs.iter().map(canonicalize).collect();
        assert_eq!(forms.len(), gs.len());
        assert!(gs.iter().all(|g| canonicalize(g).graph() == *g));
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(enumerate_graphs(10), Err(Error::Capacity { .. })));
        assert!(matches!(enumerate_brute(8), Err(Error::Capacity { .. })));
    }

    #[test]
    fn split_obstructions() {
        let set = mine_obstructions("split", &is_split, 5, Source::Generator).unwrap();
        let mut names: Vec<&str> = set.members.iter().map(|m| m.name.as_str()).collect();
        names.sort_unstable();
        assert_eq!(names, ["C4", "C5", "co-C4"]);
        assert!(set.is_complement_closed());
        assert_eq!(set.count_up_to_complement(), 2);
    }

    #[test]
    fn circus_from_both_sources() {
        let a = mine_class(ClassId::AlmostSplit, 6, Source::Generator).unwrap();
        let expected: HashSet<CanonicalForm> =
            circus().iter().map(|id| canonicalize(id.graph())).collect();
        let got: HashSet<CanonicalForm> = a.members.iter().map(|m| m.canon.clone()).collect();
        assert_eq!(got, expected);
        let corpus: Vec<Graph> = enumerate_up_to(6).unwrap().into_iter().flatten().collect();
        let b = mine_class(ClassId::AlmostSplit, 6, Source::Graphs(&corpus)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tsv_round_trip() {
        let set = mine_obstructions("split", &is_split, 5, Source::Generator).unwrap();
        let back = ObstructionSet::from_tsv("split", 5, set.to_tsv().as_bytes()).unwrap();
        assert_eq!(set, back);
    }

    #[test]
    fn split_characterization_holds() {
        let set = mine_obstructions("split", &is_split, 5, Source::Generator).unwrap();
        let graphs: Vec<Graph> = enumerate_up_to(6).unwrap().into_iter().flatten().collect();
        let report = verify_characterization(&is_split, &set, &graphs);
        assert!(report.is_clean(), "{:?}", report.discrepancies);
    }
}
