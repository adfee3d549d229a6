//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails.
//!
//! Reference values come from two places: counts and shapes transcribed
//! from the known characterization (44 obstructions, the circus, the
//! three split obstructions), and membership decided by a brute-force
//! checker written here from the definitions, independent of the library's
//! own oracle.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use doubled::canon::{canonicalize, CanonicalForm};
use doubled::graph::{bits, Graph};
use doubled::miner::{self, ObstructionSet};
use doubled::patterns::circus;
use doubled::recognition::{recognize_doubled, ClassId, RecognitionOutcome};
use doubled::structure::{check_aligned, extend_to_double_split};
use doubled::{cli, graph6, sample};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

// ---------------------------------------------------------------------
// Reference checker, straight from the definitions.

/// Pairs inside `side`: edges (or non-edges with `anti`). `None` if some
/// vertex has two.
fn side_pairs(g: &Graph, side: &[usize], anti: bool) -> Option<Vec<(usize, usize)>> {
    let mut pairs = Vec::new();
    for &u in side {
        let mut partners = 0;
        for &v in side {
            if u != v && g.has_edge(u, v) != anti {
                partners += 1;
                if u < v {
                    pairs.push((u, v));
                }
            }
        }
        if partners > 1 {
            return None;
        }
    }
    Some(pairs)
}

/// `A` semi-matched, `B` semi-antimatched, and aligned: each `B`-vertex
/// sees exactly one end of each `A`-edge, each `A`-vertex sees exactly one
/// end of each `B`-non-edge.
fn ref_partition_ok(g: &Graph, a: &[usize], b: &[usize], max_pairs: usize) -> bool {
    let (Some(ma), Some(mb)) = (side_pairs(g, a, false), side_pairs(g, b, true)) else {
        return false;
    };
    if ma.len() + mb.len() > max_pairs {
        return false;
    }
    b.iter().all(|&w| {
        ma.iter()
            .all(|&(x, y)| g.has_edge(w, x) != g.has_edge(w, y))
    }) && a.iter().all(|&w| {
        mb.iter()
            .all(|&(x, y)| g.has_edge(w, x) != g.has_edge(w, y))
    })
}

fn ref_member(g: &Graph, max_pairs: usize) -> bool {
    let n = g.order();
    (0..1u64 << n).any(|s| {
        let a: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 0).collect();
        let b: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
        ref_partition_ok(g, &a, &b, max_pairs)
    })
}

fn ref_doubled(g: &Graph) -> bool {
    ref_member(g, usize::MAX)
}

fn ref_almost_split(g: &Graph) -> bool {
    ref_member(g, 1)
}

fn ref_split(g: &Graph) -> bool {
    let n = g.order();
    (0..1u64 << n).any(|s| {
        let clique: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
        let stable: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 0).collect();
        clique
            .iter()
            .all(|&u| clique.iter().all(|&v| u == v || g.has_edge(u, v)))
            && stable
                .iter()
                .all(|&u| stable.iter().all(|&v| !g.has_edge(u, v)))
    })
}

/// Double-split: `A` a perfect matching, `B` the complement of one,
/// aligned.
fn ref_double_split(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    let covered = |side: &[usize], anti: bool| {
        side_pairs(g, side, anti).is_some_and(|p| 2 * p.len() == side.len())
    };
    covered(a, false) && covered(b, true) && ref_partition_ok(g, a, b, usize::MAX)
}

// ---------------------------------------------------------------------

struct Criterion {
    id: usize,
    title: &'static str,
    passed: bool,
    detail: String,
}

/// Everything one run produces: verdicts plus a transcript of all outputs
/// (for the determinism check).
struct Run {
    criteria: Vec<Criterion>,
    transcript: String,
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::main_with_args(
        std::iter::once("doubled").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn forms_from_tsv(tsv: &str) -> BTreeSet<CanonicalForm> {
    tsv.lines()
        .skip(1)
        .map(|l| canonicalize(&graph6::decode(l.split('\t').nth(1).unwrap()).unwrap()))
        .collect()
}

fn outcome_json(g: &Graph, o: &RecognitionOutcome) -> String {
    format!(
        "{}\t{}",
        graph6::encode(g),
        serde_json::to_string(&o.to_record(ClassId::Doubled)).unwrap()
    )
}

/// Problems with an outcome: certificate must pass `check_aligned` and the
/// reference checker; witness must be non-doubled, deletion-minimal and a
/// mined obstruction.
fn soundness(g: &Graph, o: &RecognitionOutcome, f: &HashSet<CanonicalForm>) -> Option<String> {
    let code = graph6::encode(g);
    match o {
        RecognitionOutcome::Member(c) => {
            let ok = check_aligned(g, c).unwrap().is_valid()
                && ref_partition_ok(g, &c.a, &c.b, usize::MAX);
            (!ok).then(|| format!("bad certificate on {code}"))
        }
        RecognitionOutcome::NonMember(w) => {
            let m = w.mask();
            let h = g.induced_mask(m);
            if ref_doubled(&h) {
                return Some(format!("doubled witness on {code}"));
            }
            if bits(m).any(|v| !ref_doubled(&g.induced_mask(m & !(1 << v)))) {
                return Some(format!("non-minimal witness on {code}"));
            }
            (!f.contains(&canonicalize(&h))).then(|| format!("witness outside F on {code}"))
        }
    }
}

fn run_all() -> Run {
    let mut criteria = Vec::new();
    let mut transcript = String::new();

    // 1. Obstruction count for doubled graphs up to 9 vertices.
    let (code, tsv) = run_cli(&["mine", "--class", "doubled", "--max-order", "9"]);
    let (_, json) = run_cli(&[
        "mine",
        "--class",
        "doubled",
        "--max-order",
        "9",
        "--format",
        "json",
    ]);
    transcript.push_str(&tsv);
    transcript.push_str(&json);
    let summary: serde_json::Value = serde_json::from_str(&json).unwrap();
    let count = summary["summary"]["count"].as_u64().unwrap();
    let pairs = summary["summary"]["count_up_to_complement"]
        .as_u64()
        .unwrap();
    let f_set = ObstructionSet::from_tsv("doubled", 9, tsv.as_bytes()).unwrap();
    let f_forms: HashSet<CanonicalForm> = f_set.members.iter().map(|m| m.canon.clone()).collect();
    // Each mined member re-checked against the reference definition.
    let f_ok = f_set.members.iter().all(|m| {
        let g = &m.graph;
        !ref_doubled(g) && (0..g.order()).all(|v| ref_doubled(&g.delete_vertex(v)))
    });
    criteria.push(Criterion {
        id: 1,
        title: "obstruction count",
        passed: code == 0 && f_ok && (count == 44 || pairs == 44),
        detail: format!(
            "{count} obstructions ({pairs} up to complement), histogram {}, complement-closed {}",
            summary["summary"]["order_histogram"], summary["summary"]["complement_closure"]
        ),
    });

    // 2. Circus reproduction.
    let (code, tsv) = run_cli(&["mine", "--class", "almost-split", "--max-order", "6"]);
    transcript.push_str(&tsv);
    let expected: BTreeSet<CanonicalForm> =
        circus().iter().map(|id| canonicalize(id.graph())).collect();
    let got = forms_from_tsv(&tsv);
    let circus_ok = got.iter().all(|f| {
        let g = f.graph();
        !ref_almost_split(&g) && (0..g.order()).all(|v| ref_almost_split(&g.delete_vertex(v)))
    });
    criteria.push(Criterion {
        id: 2,
        title: "circus reproduction",
        passed: code == 0 && got == expected && circus_ok && expected.len() == 23,
        detail: format!(
            "{} mined, {} in the transcribed catalog",
            got.len(),
            expected.len()
        ),
    });

    // 3. Split obstructions.
    let (code, tsv) = run_cli(&["mine", "--class", "split", "--max-order", "5"]);
    transcript.push_str(&tsv);
    let c4 = Graph::cycle(4);
    let expected: BTreeSet<CanonicalForm> = [c4.clone(), c4.complement(), Graph::cycle(5)]
        .iter()
        .map(canonicalize)
        .collect();
    let got = forms_from_tsv(&tsv);
    criteria.push(Criterion {
        id: 3,
        title: "split characterization",
        passed: code == 0 && got == expected,
        detail: format!("{} mined: C4, co-C4, C5 expected", got.len()),
    });

    // 4. Exhaustive equivalence up to 8 vertices.
    let graphs: Vec<Graph> = miner::enumerate_up_to(8)
        .unwrap()
        .into_iter()
        .flatten()
        .collect();
    let sweep: Vec<(RecognitionOutcome, bool, bool)> = graphs
        .par_iter()
        .map(|g| {
            let o = recognize_doubled(g).unwrap();
            let oracle = ClassId::Doubled.oracle(g);
            let f_free = f_set.find_in(g).is_none();
            (o, oracle, f_free)
        })
        .collect();
    let mut mismatches = 0;
    for (g, (o, oracle, f_free)) in graphs.iter().zip(&sweep) {
        let r = ref_doubled(g);
        if o.is_member() != *oracle || *oracle != *f_free || r != *oracle {
            mismatches += 1;
        }
        transcript.push_str(&outcome_json(g, o));
        transcript.push('\n');
    }
    let witnessed: BTreeSet<CanonicalForm> = graphs
        .iter()
        .zip(&sweep)
        .filter_map(|(g, (o, _, _))| o.witness().map(|w| canonicalize(&g.induced_mask(w.mask()))))
        .collect();
    let unwitnessed: Vec<String> = f_set
        .members
        .iter()
        .filter(|m| m.graph.order() <= 8 && !witnessed.contains(&m.canon))
        .map(|m| m.name.clone())
        .collect();
    criteria.push(Criterion {
        id: 4,
        title: "equivalence sweep n <= 8",
        passed: mismatches == 0 && graphs.len() == 13599,
        detail: format!(
            "{} graphs, {mismatches} discrepancies; obstructions on <= 8 vertices never returned as a witness: {}",
            graphs.len(),
            if unwitnessed.is_empty() { "none".to_string() } else { unwitnessed.join(", ") }
        ),
    });

    // 5. Sampled extrapolation at 12, 14, 16 vertices.
    let mut samples = Vec::new();
    for n in [12usize, 14, 16] {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + n as u64);
        for i in 0..1000 {
            let g = match i % 3 {
                0 => {
                    let p = rng.gen_range(0.1..0.9);
                    sample::gnp(&mut rng, n, p)
                }
                1 => sample::random_doubled(&mut rng, n),
                _ => sample::near_doubled(&mut rng, n),
            };
            samples.push(g);
        }
    }
    let sampled: Vec<(RecognitionOutcome, bool)> = samples
        .par_iter()
        .map(|g| (recognize_doubled(g).unwrap(), f_set.find_in(g).is_none()))
        .collect();
    let disagreements = sampled
        .iter()
        .filter(|(o, free)| o.is_member() != *free)
        .count();
    let members = sampled.iter().filter(|(o, _)| o.is_member()).count();
    for (g, (o, _)) in samples.iter().zip(&sampled) {
        transcript.push_str(&outcome_json(g, o));
        transcript.push('\n');
    }
    criteria.push(Criterion {
        id: 5,
        title: "sampled extrapolation",
        passed: disagreements == 0,
        detail: format!(
            "{} graphs ({members} members), {disagreements} disagreements with F-membership",
            samples.len()
        ),
    });

    // 6. Soundness of everything emitted in 4 and 5.
    let all: Vec<(&Graph, &RecognitionOutcome)> = graphs
        .iter()
        .zip(sweep.iter().map(|s| &s.0))
        .chain(samples.iter().zip(sampled.iter().map(|s| &s.0)))
        .collect();
    let violations: Vec<String> = all
        .par_iter()
        .filter_map(|(g, o)| soundness(g, o, &f_forms))
        .collect();
    let certs = all.iter().filter(|(_, o)| o.is_member()).count();
    criteria.push(Criterion {
        id: 6,
        title: "certificate soundness",
        passed: violations.is_empty(),
        detail: format!(
            "{certs} certificates, {} witnesses, {} violations{}",
            all.len() - certs,
            violations.len(),
            violations
                .first()
                .map(|v| format!(" (first: {v})"))
                .unwrap_or_default()
        ),
    });

    // 7. Class chain, heredity and complement closure up to 7 vertices.
    let small: Vec<&Graph> = graphs.iter().filter(|g| g.order() <= 7).collect();
    let closure_violations = small
        .par_iter()
        .filter(|g| {
            let (s, a, d) = (ref_split(g), ref_almost_split(g), ref_doubled(g));
            let co = g.complement();
            let chain = (!s || a) && (!a || d);
            let closed = a == ref_almost_split(&co) && d == ref_doubled(&co);
            let lib = s == ClassId::Split.oracle(g)
                && a == ClassId::AlmostSplit.oracle(g)
                && d == ClassId::Doubled.oracle(g);
            let hereditary = (0..g.order()).all(|v| {
                let h = g.delete_vertex(v);
                (!s || ref_split(&h)) && (!a || ref_almost_split(&h)) && (!d || ref_doubled(&h))
            });
            !(chain && closed && lib && hereditary)
        })
        .count();
    criteria.push(Criterion {
        id: 7,
        title: "class chain and closure n <= 7",
        passed: closure_violations == 0 && small.len() == 1253,
        detail: format!("{} graphs, {closure_violations} violations", small.len()),
    });

    // 8. Extension to a double-split supergraph.
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let doubled_samples: Vec<Graph> = (0..1000)
        .map(|_| {
            let n = rng.gen_range(1..=12);
            sample::random_doubled(&mut rng, n)
        })
        .collect();
    let failures = doubled_samples
        .par_iter()
        .filter(|g| {
            let Ok(RecognitionOutcome::Member(cert)) = recognize_doubled(g) else {
                return true;
            };
            let Ok((h, hc, emb)) = extend_to_double_split(g, &cert) else {
                return true;
            };
            let n = g.order();
            let embedded = emb.map.len() == n
                && (0..n).all(|u| {
                    (0..n).all(|v| u == v || g.has_edge(u, v) == h.has_edge(emb.map[u], emb.map[v]))
                });
            !(embedded && ref_double_split(&h, &hc.a, &hc.b))
        })
        .count();
    for g in &doubled_samples {
        transcript.push_str(&graph6::encode(g));
        transcript.push('\n');
    }
    criteria.push(Criterion {
        id: 8,
        title: "definition equivalence",
        passed: failures == 0,
        detail: format!(
            "{} random doubled graphs, {failures} failures",
            doubled_samples.len()
        ),
    });

    Run {
        criteria,
        transcript,
    }
}

fn main() {
    let first = run_all();
    let second = run_all();
    let same = first.transcript == second.transcript
        && first
            .criteria
            .iter()
            .zip(&second.criteria)
            .all(|(a, b)| a.passed == b.passed && a.detail == b.detail);
    let mut report = String::new();
    let mut all_passed = true;
    for c in &first.criteria {
        all_passed &= c.passed;
        let tag = if c.passed { "PASS" } else { "FAIL" };
        writeln!(
            report,
            "{tag} criterion {} ({}): {}",
            c.id, c.title, c.detail
        )
        .unwrap();
    }
    all_passed &= same;
    writeln!(
        report,
        "{} criterion 9 (determinism): transcripts of two runs {} ({} bytes)",
        if same { "PASS" } else { "FAIL" },
        if same { "identical" } else { "differ" },
        first.transcript.len()
    )
    .unwrap();
    print!("{report}");
    if !all_passed {
        eprintln!("acceptance failed");
        std::process::exit(1);
    }
}
