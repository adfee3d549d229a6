//! Built-in consistency suites, run by the `selfcheck` command.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonicalize, CanonicalForm};
use crate::graph::{bits, Graph};
use crate::graph6;
use crate::miner::{self, ObstructionSet, Source};
use crate::patterns::{circus, BasePattern, PatternCatalog, PatternId};
use crate::recognition::{ClassId, RecognitionOutcome};
use crate::sample;
use crate::structure::{check_aligned, is_split};

#[derive(Clone, Debug)]
pub struct SelfcheckConfig {
    /// Sweep all graphs up to 8 vertices and mine the doubled obstructions
    /// up to 9; otherwise stop at 7 and 8.
    pub full: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SelfcheckReport {
    pub checks: Vec<CheckResult>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, failures: Vec<String>, ok_detail: String) {
        log::info!("selfcheck {name}: {} failures", failures.len());
        let passed = failures.is_empty();
        let detail = if passed {
            ok_detail
        } else {
            let mut d = format!("{} failures; first: ", failures.len());
            d.push_str(&failures[..failures.len().min(3)].join("; "));
            d
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

impl fmt::Display for SelfcheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

fn forms_of(catalog: &PatternCatalog, ids: &[PatternId]) -> HashSet<CanonicalForm> {
    ids.iter().map(|&id| catalog.canon(id).clone()).collect()
}

fn set_diff(mined: &ObstructionSet, expected: &HashSet<CanonicalForm>) -> Vec<String> {
    let got: HashSet<CanonicalForm> = mined.members.iter().map(|m| m.canon.clone()).collect();
    let mut out: Vec<String> = got
        .difference(expected)
        .map(|f| format!("unexpected {f}"))
        .chain(expected.difference(&got).map(|f| format!("missing {f}")))
        .collect();
    out.sort();
    out
}

/// Soundness of one recognition outcome.
fn outcome_problems(class: ClassId, g: &Graph, out: &RecognitionOutcome) -> Option<String> {
    let code = graph6::encode(g);
    if out.is_member() != class.oracle(g) {
        return Some(format!("{class} disagrees with oracle on {code}"));
    }
    match out {
        RecognitionOutcome::Member(c) => {
            let ok = check_aligned(g, c).map(|r| r.is_valid()).unwrap_or(false);
            let bound = class != ClassId::AlmostSplit || c.pair_count() <= 1;
            (!ok || !bound).then(|| format!("{class} certificate fails on {code}"))
        }
        RecognitionOutcome::NonMember(w) => {
            let m = w.mask();
            let minimal = !class.oracle(&g.induced_mask(m))
                && bits(m).all(|v| class.oracle(&g.induced_mask(m & !(1 << v))));
            (!minimal).then(|| format!("{class} witness {:?} not minimal on {code}", w.vertices))
        }
    }
}

/// Run every suite against `catalog` (normally [`PatternCatalog::standard`]).
pub fn run(config: &SelfcheckConfig, catalog: &PatternCatalog) -> SelfcheckReport {
    let mut report = SelfcheckReport::default();
    let sweep_order = if config.full { 8 } else { 7 };

    let brute: Vec<String> = (0..=6)
        .filter_map(|n| {
            let mut a: Vec<CanonicalForm> = miner::enumerate_graphs(n)
                .ok()?
                .iter()
                .map(canonicalize)
                .collect();
            a.sort();
            let b: Vec<CanonicalForm> = miner::enumerate_brute(n)
                .ok()?
                .iter()
                .map(canonicalize)
                .collect();
            (a != b).then(|| format!("n = {n}: {} vs {}", a.len(), b.len()))
        })
        .collect();
    report.push(
        "enumeration",
        brute,
        "generator matches brute force for n <= 6".into(),
    );

    let graphs: Vec<Graph> = miner::enumerate_up_to(sweep_order)
        .expect("within generator capacity")
        .into_iter()
        .flatten()
        .collect();

    let split =
        miner::mine_obstructions("split", &is_split, 5, Source::Generator).expect("generator");
    let expected = forms_of(
        catalog,
        &[
            PatternId::new(BasePattern::C4),
            PatternId::co(BasePattern::C4),
            PatternId::new(BasePattern::C5),
        ],
    );
    report.push(
        "split-obstructions",
        set_diff(&split, &expected),
        format!("{} obstructions on <= 5 vertices", split.len()),
    );

    let circus_set =
        miner::mine_class(ClassId::AlmostSplit, 6, Source::Generator).expect("generator");
    report.push(
        "circus",
        set_diff(&circus_set, &forms_of(catalog, &circus())),
        format!(
            "{} almost-split obstructions match the catalog",
            circus_set.len()
        ),
    );

    for class in ClassId::ALL {
        let failures: Vec<String> = graphs
            .par_iter()
            .filter_map(|g| match class.recognize(g) {
                Ok(out) => outcome_problems(class, g, &out),
                Err(e) => Some(format!("{}: {e}", graph6::encode(g))),
            })
            .collect();
        report.push(
            &format!("recognize-{class}"),
            failures,
            format!("{} graphs on <= {sweep_order} vertices", graphs.len()),
        );
    }

    let closure: Vec<String> = graphs
        .par_iter()
        .filter(|g| g.order() <= 7)
        .filter_map(|g| {
            let s = is_split(g);
            let a = ClassId::AlmostSplit.oracle(g);
            let d = ClassId::Doubled.oracle(g);
            let co = g.complement();
            let mut bad = Vec::new();
            if s && !a || a && !d {
                bad.push("chain");
            }
            if a != ClassId::AlmostSplit.oracle(&co) || d != ClassId::Doubled.oracle(&co) {
                bad.push("complement");
            }
            for class in ClassId::ALL {
                if class.oracle(g) && (0..g.order()).any(|v| !class.oracle(&g.delete_vertex(v))) {
                    bad.push("hereditary");
                }
            }
            (!bad.is_empty()).then(|| format!("{} {}", graph6::encode(g), bad.join(",")))
        })
        .collect();
    report.push(
        "class-closure",
        closure,
        "chain, heredity and complements for n <= 7".into(),
    );

    let mine_order = if config.full { 9 } else { 8 };
    let f = miner::mine_class(ClassId::Doubled, mine_order, Source::Generator).expect("generator");
    let summary = f.summary();
    let mut fails = Vec::new();
    if config.full && f.len() != 44 {
        fails.push(format!("mined {} obstructions, expected 44", f.len()));
    }
    if !summary.complement_closure {
        fails.push("obstruction set is not complement-closed".into());
    }
    let seed_forms = forms_of(catalog, &crate::patterns::family_f_seed());
    for form in &seed_forms {
        if !f.contains_form(form) {
            fails.push(format!("seed obstruction {form} not mined"));
        }
    }
    report.push(
        "doubled-obstructions",
        fails,
        format!(
            "{} obstructions on <= {mine_order} vertices ({} up to complement)",
            summary.count, summary.count_up_to_complement
        ),
    );

    let characterization =
        miner::verify_characterization(&|g| ClassId::Doubled.oracle(g), &f, &graphs);
    report.push(
        "characterization",
        characterization
            .discrepancies
            .iter()
            .map(|d| d.graph6.clone())
            .collect(),
        format!(
            "{} graphs checked against the mined set",
            characterization.checked
        ),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let samples: Vec<Graph> = (0..300)
        .map(|i| {
            let n = rng.gen_range(9..=12);
            match i % 3 {
                0 => sample::gnp(&mut rng, n, 0.5),
                1 => sample::random_doubled(&mut rng, n),
                _ => sample::near_doubled(&mut rng, n),
            }
        })
        .collect();
    let sampled: Vec<String> = samples
        .par_iter()
        .filter_map(|g| match ClassId::Doubled.recognize(g) {
            Ok(out) => outcome_problems(ClassId::Doubled, g, &out),
            Err(e) => Some(format!("{}: {e}", graph6::encode(g))),
        })
        .collect();
    report.push(
        "sampled-doubled",
        sampled,
        format!("{} seeded graphs on 9..12 vertices", samples.len()),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_catalog_is_noticed() {
        let bad =
            PatternCatalog::standard().with_toggled_pair(PatternId::new(BasePattern::Watch), 0, 1);
        let report = run(
            &SelfcheckConfig {
                full: false,
                seed: 1,
            },
            &bad,
        );
        assert!(!report.passed());
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "circus" && !c.passed));
    }
}
