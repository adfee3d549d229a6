//! Certifying recognizers for split, almost-split and doubled graphs.
//!
//! Each recognizer returns a [`RecognitionOutcome`]: either an aligned
//! certificate or a deletion-minimal witness. The exhaustive oracle is only
//! ever run on witness candidates (at most nine vertices), never on the
//! whole input.

mod cases;
mod frame;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::patterns::{
    find_any_of, find_induced, BasePattern, Embedding, PatternCatalog, PatternId,
};
use crate::structure::{
    check_aligned, is_split, oracle_almost_split, oracle_doubled, split_partition,
    DoubledCertificate,
};
use cases::Case;
use frame::Frame;

/// The classes this crate decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassId {
    Split,
    AlmostSplit,
    Doubled,
}

impl ClassId {
    pub const ALL: [ClassId; 3] = [ClassId::Split, ClassId::AlmostSplit, ClassId::Doubled];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Split => "split",
            ClassId::AlmostSplit => "almost-split",
            ClassId::Doubled => "doubled",
        }
    }

    /// Ground-truth membership. Exponential for the two doubled-type
    /// classes; use on small graphs only.
    pub fn oracle(self, g: &Graph) -> bool {
        match self {
            ClassId::Split => is_split(g),
            ClassId::AlmostSplit => oracle_almost_split(g),
            ClassId::Doubled => oracle_doubled(g),
        }
    }

    /// Polynomial recognition with a certificate or witness.
    pub fn recognize(self, g: &Graph) -> Result<RecognitionOutcome> {
        match self {
            ClassId::Split => Ok(recognize_split(g)),
            ClassId::AlmostSplit => recognize_almost_split(g),
            ClassId::Doubled => recognize_doubled(g),
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Misuse(format!("unknown class {s:?}")))
    }
}

/// A vertex subset inducing a minimal non-member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<usize>,
    /// Catalog name of the induced subgraph, if it has one.
    pub kind: Option<PatternId>,
}

impl Witness {
    fn new(g: &Graph, mask: u64) -> Self {
        let h = g.induced_mask(mask);
        let kind = PatternCatalog::standard().lookup(&crate::canon::canonicalize(&h));
        Witness {
            vertices: bits(mask).collect(),
            kind,
        }
    }

    pub fn mask(&self) -> u64 {
        crate::graph::mask_of(&self.vertices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RecognitionOutcome {
    Member(DoubledCertificate),
    NonMember(Witness),
}

impl RecognitionOutcome {
    pub fn is_member(&self) -> bool {
        matches!(self, RecognitionOutcome::Member(_))
    }

    pub fn certificate(&self) -> Option<&DoubledCertificate> {
        match self {
            RecognitionOutcome::Member(c) => Some(c),
            RecognitionOutcome::NonMember(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            RecognitionOutcome::Member(_) => None,
            RecognitionOutcome::NonMember(w) => Some(w),
        }
    }

    /// The JSON record for this outcome.
    pub fn to_record(&self, class: ClassId) -> OutcomeRecord<'_> {
        OutcomeRecord {
            class,
            result: if self.is_member() {
                "member"
            } else {
                "non-member"
            },
            certificate: self.certificate(),
            witness: self.witness(),
        }
    }
}

/// Serialized form: `{"class", "result", "certificate" | "witness"}`.
#[derive(Serialize)]
pub struct OutcomeRecord<'a> {
    pub class: ClassId,
    pub result: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<&'a DoubledCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<&'a Witness>,
}

/// Which part of the case analysis produced an outcome.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trace {
    /// Anchor case, or `"split"` / `"circus"` for the direct exits.
    pub case: &'static str,
    /// The rule that fired; `None` when a certificate was assembled.
    pub step: Option<&'static str>,
    /// Whether the case ran on the complement.
    pub complemented: bool,
}

impl Trace {
    fn direct(case: &'static str) -> Self {
        Trace {
            case,
            step: None,
            complemented: false,
        }
    }
}

/// Greedily delete vertices of `mask` (ascending, restarting after each
/// deletion) while the induced subgraph stays outside `class`.
pub fn minimize_witness(g: &Graph, mask: u64, class: ClassId) -> Result<Witness> {
    let mask = mask & g.vertex_mask();
    if class.oracle(&g.induced_mask(mask)) {
        return Err(Error::Misuse(format!(
            "vertices {:?} induce a {} graph",
            bits(mask).collect::<Vec<_>>(),
            class
        )));
    }
    let mut cur = mask;
    'outer: loop {
        for v in bits(cur) {
            let smaller = cur & !(1 << v);
            if !class.oracle(&g.induced_mask(smaller)) {
                cur = smaller;
                continue 'outer;
            }
        }
        return Ok(Witness::new(g, cur));
    }
}

pub fn recognize_split(g: &Graph) -> RecognitionOutcome {
    recognize_split_traced(g).0
}

fn recognize_split_traced(g: &Graph) -> (RecognitionOutcome, Trace) {
    let trace = Trace::direct("split");
    if let Some((clique, stable)) = split_partition(g) {
        let cert = DoubledCertificate {
            a: stable,
            b: clique,
            ..Default::default()
        };
        return (RecognitionOutcome::Member(cert), trace);
    }
    let ids = [
        PatternId::new(BasePattern::C4),
        PatternId::co(BasePattern::C4),
        PatternId::new(BasePattern::C5),
    ];
    let (_, e) = find_any_of(g, &ids).expect("a non-split graph contains C4, its complement or C5");
    (
        RecognitionOutcome::NonMember(Witness::new(g, e.mask())),
        trace,
    )
}

pub fn recognize_almost_split(g: &Graph) -> Result<RecognitionOutcome> {
    recognize_almost_split_traced(g).map(|(o, _)| o)
}

pub fn recognize_almost_split_traced(g: &Graph) -> Result<(RecognitionOutcome, Trace)> {
    let (split, trace) = recognize_split_traced(g);
    if split.is_member() {
        return Ok((split, trace));
    }
    for complemented in [false, true] {
        if let Some(out) = try_case(&cases::C4, g, ClassId::AlmostSplit, complemented)? {
            return Ok(out);
        }
    }
    // No C4 on either side, so the split obstruction is C5.
    let w = split.witness().expect("non-split").clone();
    Ok((RecognitionOutcome::NonMember(w), Trace::direct("split")))
}

pub fn recognize_doubled(g: &Graph) -> Result<RecognitionOutcome> {
    recognize_doubled_traced(g).map(|(o, _)| o)
}

pub fn recognize_doubled_traced(g: &Graph) -> Result<(RecognitionOutcome, Trace)> {
    let (out, trace) = recognize_almost_split_traced(g)?;
    let w = match out {
        RecognitionOutcome::Member(_) => return Ok((out, trace)),
        RecognitionOutcome::NonMember(w) => w,
    };
    let h = g.induced_mask(w.mask());
    if !oracle_doubled(&h) {
        return Ok((RecognitionOutcome::NonMember(w), Trace::direct("circus")));
    }
    for case in cases::DOUBLED_CASES {
        for complemented in [false, true] {
            if let Some(out) = try_case(case, g, ClassId::Doubled, complemented)? {
                return Ok(out);
            }
        }
    }
    Err(Error::Internal(format!(
        "graph is not almost-split ({:?} is doubled) yet contains no doubled circus anchor",
        w.vertices
    )))
}

/// Run `case` on `g` (or its complement) if its anchor occurs there.
fn try_case(
    case: &Case,
    g: &Graph,
    class: ClassId,
    complemented: bool,
) -> Result<Option<(RecognitionOutcome, Trace)>> {
    let work = if complemented {
        g.complement()
    } else {
        g.clone()
    };
    let Some(e) = find_induced(&work, &case.anchor()) else {
        return Ok(None);
    };
    let (out, step) = run_case(case, &work, &e.map, class)?.map_err(Error::Internal)?;
    let out = match out {
        RecognitionOutcome::Member(c) if complemented => {
            RecognitionOutcome::Member(c.swapped().normalized())
        }
        RecognitionOutcome::NonMember(w) if complemented => {
            RecognitionOutcome::NonMember(Witness::new(g, w.mask()))
        }
        other => other,
    };
    let trace = Trace {
        case: case.name,
        step,
        complemented,
    };
    Ok(Some((out, trace)))
}

/// The case analysis proper. `Err(reason)` if a rule names a member
/// subset or no candidate partition verifies, which means the case's
/// standing assumptions do not hold.
fn run_case(
    case: &Case,
    g: &Graph,
    roles: &[usize],
    class: ClassId,
) -> Result<std::result::Result<(RecognitionOutcome, Option<&'static str>), String>> {
    let frame = Frame::new(g, &case.anchor(), roles);
    let rules = (case.rules)();
    if let Some((i, mask)) = frame.first_firing(&rules) {
        let step = rules[i].step;
        if class.oracle(&g.induced_mask(mask)) {
            return Ok(Err(format!(
                "{} rule {step:?} named a {class} subset {:?}",
                case.name,
                bits(mask).collect::<Vec<_>>()
            )));
        }
        let w = minimize_witness(g, mask, class)?;
        return Ok(Ok((RecognitionOutcome::NonMember(w), Some(step))));
    }
    let max_pairs = if class == ClassId::AlmostSplit {
        1
    } else {
        usize::MAX
    };
    for (a, b) in (case.assemble)(&frame) {
        let Some(cert) = DoubledCertificate::from_partition(g, a, b) else {
            continue;
        };
        if cert.pair_count() <= max_pairs && check_aligned(g, &cert)?.is_valid() {
            return Ok(Ok((RecognitionOutcome::Member(cert.normalized()), None)));
        }
    }
    Ok(Err(format!(
        "{} case analysis neither fired nor assembled a certificate",
        case.name
    )))
}

/// Anchors of the case analyses, as role graphs on `a, b, c, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Anchor {
    C4,
    M21,
    P5,
    CoC6,
    CoDomino,
    Tent1,
    Tent2,
}

impl Anchor {
    fn case(self) -> &'static Case {
        match self {
            Anchor::C4 => &cases::C4,
            Anchor::M21 => &cases::M21,
            Anchor::P5 => &cases::P5,
            Anchor::CoC6 => &cases::CO_C6,
            Anchor::CoDomino => &cases::CO_DOMINO,
            Anchor::Tent1 => &cases::TENT1,
            Anchor::Tent2 => &cases::TENT2,
        }
    }

    /// The anchor with vertex `i` playing role `i`.
    pub fn role_graph(self) -> Graph {
        self.case().anchor()
    }

    pub fn name(self) -> &'static str {
        self.case().name
    }

    fn class(self) -> ClassId {
        match self {
            Anchor::C4 => ClassId::AlmostSplit,
            _ => ClassId::Doubled,
        }
    }
}

/// Run one case analysis directly from a given anchor embedding
/// (`anchor.map[i]` plays role `i`). The caller is responsible for the
/// case's standing assumptions (earlier anchors absent from `g` and its
/// complement); if they fail the result is a misuse error.
pub fn certify_from(kind: Anchor, g: &Graph, anchor: &Embedding) -> Result<RecognitionOutcome> {
    if !anchor.is_valid(g, &kind.role_graph()) {
        return Err(Error::Misuse(format!(
            "{:?} is not an induced {} in the input",
            anchor.map,
            kind.name()
        )));
    }
    match run_case(kind.case(), g, &anchor.map, kind.class())? {
        Ok((out, _)) => Ok(out),
        Err(reason) => Err(Error::Misuse(format!(
            "{reason}; the case assumes no earlier anchor is present"
        ))),
    }
}

pub fn certify_from_c4(g: &Graph, anchor: &Embedding) -> Result<RecognitionOutcome> {
    certify_from(Anchor::C4, g, anchor)
}

pub fn certify_from_m21(g: &Graph, anchor: &Embedding) -> Result<RecognitionOutcome> {
    certify_from(Anchor::M21, g, anchor)
}

pub fn certify_from_p5(g: &Graph, anchor: &Embedding) -> Result<RecognitionOutcome> {
    certify_from(Anchor::P5, g, anchor)
}

pub fn certify_from_co_c6(g: &Graph, anchor: &Embedding) -> Result<RecognitionOutcome> {
    certify_from(Anchor::CoC6, g, anchor)
}

pub fn certify_from_co_domino(g: &Graph, anchor: &Embedding) -> Result<RecognitionOutcome> {
    certify_from(Anchor::CoDomino, g, anchor)
}

pub fn certify_from_tent1(g: &Graph, anchor: &Embedding) -> Result<RecognitionOutcome> {
    certify_from(Anchor::Tent1, g, anchor)
}

pub fn certify_from_tent2(g: &Graph, anchor: &Embedding) -> Result<RecognitionOutcome> {
    certify_from(Anchor::Tent2, g, anchor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{check_aligned, is_split};
    use rand::{Rng, SeedableRng};

    fn labeled(n: usize, code: u64) -> Graph {
        let mut g = Graph::empty(n);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if code >> k & 1 == 1 {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        g
    }

    fn check(class: ClassId, g: &Graph) {
        let out = class
            .recognize(g)
            .unwrap_or_else(|e| panic!("{}: {e}", crate::graph6::encode(g)));
        assert_eq!(
            out.is_member(),
            class.oracle(g),
            "{} {}",
            class,
            crate::graph6::encode(g)
        );
        match &out {
            RecognitionOutcome::Member(c) => {
                assert!(check_aligned(g, c).unwrap().is_valid());
                if class == ClassId::AlmostSplit {
                    assert!(c.pair_count() <= 1);
                }
            }
            RecognitionOutcome::NonMember(w) => {
                let m = w.mask();
                assert!(!class.oracle(&g.induced_mask(m)));
                for v in bits(m) {
                    assert!(class.oracle(&g.induced_mask(m & !(1 << v))));
                }
            }
        }
    }

    #[test]
    fn agrees_with_oracle_on_all_labeled_graphs_up_to_six() {
        for n in 0..=6 {
            for code in 0..1u64 << (n * (n.max(1) - 1) / 2) {
                let g = labeled(n, code);
                for class in ClassId::ALL {
                    check(class, &g);
                }
            }
        }
    }

    #[test]
    fn agrees_with_oracle_on_random_graphs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..3000 {
            let n = rng.gen_range(7..=10);
            let p = rng.gen_range(0.2..0.8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            for class in ClassId::ALL {
                check(class, &g);
            }
        }
    }

    #[test]
    fn split_certificate_and_witness() {
        let k3_pendant = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(is_split(&k3_pendant));
        let out = recognize_split(&k3_pendant);
        assert_eq!(out.certificate().unwrap().pair_count(), 0);
        let k23 = BasePattern::K23.graph();
        let w = recognize_split(&k23).witness().unwrap().clone();
        assert_eq!(w.kind, Some(PatternId::new(BasePattern::C4)));
    }
}
