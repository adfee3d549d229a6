//! Worked examples for the recognizers and the per-anchor case analyses.
//! Role `a` is vertex 0, `b` is vertex 1, and so on; extra vertices follow.

use doubled::graph::Graph;
use doubled::patterns::{BasePattern, Embedding, PatternId};
use doubled::recognition::{
    certify_from_co_c6, certify_from_co_domino, certify_from_m21, certify_from_p5,
    certify_from_tent1, certify_from_tent2, minimize_witness, recognize_almost_split,
    recognize_doubled, recognize_split, Anchor, ClassId, RecognitionOutcome,
};
use doubled::structure::{check_aligned, oracle_doubled};
use doubled::{DoubledCertificate, Error};

fn with_extras(anchor: Anchor, extras: &[&[usize]], extra_edges: &[(usize, usize)]) -> Graph {
    let mut g = anchor.role_graph();
    let k = g.order();
    for nbrs in extras {
        g = g.with_vertex(doubled::graph::mask_of(nbrs)).unwrap();
    }
    for &(u, v) in extra_edges {
        g.add_edge(k + u, k + v);
    }
    g
}

fn anchor_at(anchor: Anchor) -> Embedding {
    Embedding::identity(anchor.role_graph().order())
}

fn cert(o: RecognitionOutcome) -> DoubledCertificate {
    match o {
        RecognitionOutcome::Member(c) => c,
        RecognitionOutcome::NonMember(w) => panic!("expected a certificate, got witness {w:?}"),
    }
}

fn assert_witness(g: &Graph, o: &RecognitionOutcome) -> Vec<usize> {
    let w = o.witness().expect("expected a witness");
    let h = g.induced(&w.vertices).unwrap();
    assert!(!oracle_doubled(&h));
    w.vertices.clone()
}

#[test]
fn split_examples() {
    let k3_pendant = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    let c = cert(recognize_split(&k3_pendant));
    assert_eq!(c.pair_count(), 0);
    assert_eq!(c.b, vec![0, 1, 2]);
    let k23 = BasePattern::K23.graph();
    let w = recognize_split(&k23).witness().unwrap().clone();
    assert_eq!(w.kind, Some(PatternId::new(BasePattern::C4)));
}

#[test]
fn almost_split_examples() {
    let c = cert(recognize_almost_split(&Graph::cycle(4)).unwrap());
    assert_eq!(c.pair_count(), 1);
    assert!(check_aligned(&Graph::cycle(4), &c).unwrap().is_valid());

    let m21 = BasePattern::M21.graph();
    let w = recognize_almost_split(&m21)
        .unwrap()
        .witness()
        .unwrap()
        .clone();
    assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
    assert_eq!(w.kind, Some(PatternId::new(BasePattern::M21)));
}

#[test]
fn doubled_examples() {
    let tent2 = BasePattern::Tent2.graph();
    assert!(recognize_doubled(&tent2).unwrap().is_member());
    let watch = BasePattern::Watch.graph();
    let w = recognize_doubled(&watch)
        .unwrap()
        .witness()
        .unwrap()
        .clone();
    assert_eq!(w.kind, Some(PatternId::new(BasePattern::Watch)));
}

#[test]
fn m21_case() {
    let g = Anchor::M21.role_graph();
    let c = cert(certify_from_m21(&g, &anchor_at(Anchor::M21)).unwrap());
    assert_eq!(c.a, vec![0, 1, 2, 3, 4]);
    assert!(c.b.is_empty());

    let g = with_extras(Anchor::M21, &[&[1, 3]], &[]);
    let c = cert(certify_from_m21(&g, &anchor_at(Anchor::M21)).unwrap());
    assert!(c.b.contains(&5));

    let g = with_extras(Anchor::M21, &[&[1]], &[]);
    let o = certify_from_m21(&g, &anchor_at(Anchor::M21)).unwrap();
    assert_witness(&g, &o);
}

#[test]
fn p5_case() {
    let g = Anchor::P5.role_graph();
    let c = cert(certify_from_p5(&g, &anchor_at(Anchor::P5)).unwrap());
    assert_eq!(c.a, vec![0, 2, 3, 5]);
    assert_eq!(c.matched_pairs, vec![[2, 3]]);
    assert_eq!(c.b, vec![1, 4]);
    assert_eq!(c.antimatched_pairs, vec![[1, 4]]);

    let g = with_extras(Anchor::P5, &[&[1, 2, 4]], &[]);
    let c = cert(certify_from_p5(&g, &anchor_at(Anchor::P5)).unwrap());
    assert_eq!(c.b, vec![1, 4, 6]);

    let g = with_extras(Anchor::P5, &[&[0]], &[]);
    let o = certify_from_p5(&g, &anchor_at(Anchor::P5)).unwrap();
    assert_witness(&g, &o);
}

#[test]
fn co_c6_case() {
    let g = Anchor::CoC6.role_graph();
    let c = cert(certify_from_co_c6(&g, &anchor_at(Anchor::CoC6)).unwrap());
    assert_eq!(c.b, vec![0, 2, 3, 5]);
    assert_eq!(c.a, vec![1, 4]);

    // u in A_ad adjacent to v in A_cf.
    let g = with_extras(Anchor::CoC6, &[&[0, 3], &[2, 5]], &[(0, 1)]);
    let c = cert(certify_from_co_c6(&g, &anchor_at(Anchor::CoC6)).unwrap());
    assert_eq!(c.a, vec![1, 4, 6, 7]);
    assert_eq!(c.b, vec![0, 2, 3, 5]);

    let g = with_extras(Anchor::CoC6, &[&[0, 1, 2, 3, 4, 5]], &[]);
    let o = certify_from_co_c6(&g, &anchor_at(Anchor::CoC6)).unwrap();
    assert_witness(&g, &o);
}

#[test]
fn co_domino_case() {
    let g = Anchor::CoDomino.role_graph();
    let c = cert(certify_from_co_domino(&g, &anchor_at(Anchor::CoDomino)).unwrap());
    assert_eq!(c.a, vec![0, 5]);
    assert_eq!(c.b, vec![1, 2, 3, 4]);
    assert_eq!(c.antimatched_pairs, vec![[1, 4], [2, 3]]);

    let g = with_extras(Anchor::CoDomino, &[&[1, 3]], &[]);
    let c = cert(certify_from_co_domino(&g, &anchor_at(Anchor::CoDomino)).unwrap());
    assert!(c.a.contains(&6));

    let g = with_extras(Anchor::CoDomino, &[&[1, 2, 3]], &[]);
    let o = certify_from_co_domino(&g, &anchor_at(Anchor::CoDomino)).unwrap();
    assert_witness(&g, &o);

    // Four neighbours in bcde puts the complement of M21 on bcdev, an
    // anchor the dispatch handles first; the case itself refuses. The graph
    // is doubled all the same.
    let g = with_extras(Anchor::CoDomino, &[&[1, 2, 3, 4]], &[]);
    assert!(matches!(
        certify_from_co_domino(&g, &anchor_at(Anchor::CoDomino)),
        Err(Error::Misuse(_))
    ));
    let c = cert(recognize_doubled(&g).unwrap());
    assert!(check_aligned(&g, &c).unwrap().is_valid());
}

#[test]
fn tent1_case() {
    let g = Anchor::Tent1.role_graph();
    let c = cert(certify_from_tent1(&g, &anchor_at(Anchor::Tent1)).unwrap());
    assert_eq!(c.a, vec![0, 2, 3]);
    assert_eq!(c.matched_pairs, vec![[2, 3]]);
    assert_eq!(c.b, vec![1, 4, 5]);
    assert_eq!(c.antimatched_pairs, vec![[1, 4]]);

    let g = with_extras(Anchor::Tent1, &[&[1]], &[]);
    let c = cert(certify_from_tent1(&g, &anchor_at(Anchor::Tent1)).unwrap());
    assert!(c.a.contains(&6));

    // A_bce vertex missing f.
    let g = with_extras(Anchor::Tent1, &[&[1, 2, 4]], &[]);
    let o = certify_from_tent1(&g, &anchor_at(Anchor::Tent1)).unwrap();
    assert_witness(&g, &o);
}

#[test]
fn tent2_case() {
    let g = Anchor::Tent2.role_graph();
    let c = cert(certify_from_tent2(&g, &anchor_at(Anchor::Tent2)).unwrap());
    assert_eq!(c.a, vec![0, 4]);
    assert_eq!(c.b, vec![1, 2, 3, 5]);

    let g = with_extras(Anchor::Tent2, &[&[0, 1, 3, 4, 5]], &[]);
    let c = cert(certify_from_tent2(&g, &anchor_at(Anchor::Tent2)).unwrap());
    assert!(c.b.contains(&6));

    // One vertex each in A_bf, A_df and A_abdef.
    let g = with_extras(
        Anchor::Tent2,
        &[&[1, 5], &[3, 5], &[0, 1, 3, 4, 5]],
        &[(0, 2), (1, 2)],
    );
    let o = certify_from_tent2(&g, &anchor_at(Anchor::Tent2)).unwrap();
    let w = assert_witness(&g, &o);
    assert!(w.len() <= 9);
    assert_eq!(recognize_doubled(&g).unwrap(), o);
}

#[test]
fn certify_rejects_a_bad_anchor() {
    let g = Graph::path(6);
    let wrong = Embedding {
        map: vec![0, 2, 1, 3, 4, 5],
    };
    assert!(matches!(certify_from_p5(&g, &wrong), Err(Error::Misuse(_))));
}

#[test]
fn minimize_examples() {
    // C5 plus an isolated vertex shrinks to the cycle.
    let g = Graph::cycle(5).with_vertex(0).unwrap();
    let w = minimize_witness(&g, 0b111111, ClassId::Doubled).unwrap();
    assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
    assert_eq!(w.kind, Some(PatternId::new(BasePattern::C5)));
    // A catalog obstruction is a fixed point.
    let fish = BasePattern::Fish.graph();
    let w = minimize_witness(&fish, fish.vertex_mask(), ClassId::Doubled).unwrap();
    assert_eq!(w.vertices.len(), 6);
    // A member subset is a misuse.
    assert!(matches!(
        minimize_witness(&Graph::cycle(4), 0b1111, ClassId::Doubled),
        Err(Error::Misuse(_))
    ));
}

#[test]
fn json_record_shape() {
    let o = recognize_doubled(&Graph::cycle(5)).unwrap();
    let v = serde_json::to_value(o.to_record(ClassId::Doubled)).unwrap();
    assert_eq!(v["class"], "doubled");
    assert_eq!(v["result"], "non-member");
    assert_eq!(v["witness"]["kind"], "C5");
    assert!(v.get("certificate").is_none());
    let o = recognize_doubled(&Graph::cycle(4)).unwrap();
    let v = serde_json::to_value(o.to_record(ClassId::Doubled)).unwrap();
    assert_eq!(v["result"], "member");
    assert!(v["certificate"]["A"].is_array());
}
