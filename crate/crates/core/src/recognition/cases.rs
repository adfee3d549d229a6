//! Rule tables and certificate assembly for each anchored case.
//!
//! Step labels follow the numbered claims of the corresponding case
//! analysis. Each rule returns the vertex subset the argument names as an
//! obstruction; the caller validates and minimizes it. When no rule fires,
//! `assemble` proposes partitions and the caller keeps the first that
//! verifies.

use super::frame::{one, pc, three, two, Frame, Rule, A, B, C, D, E, F, S, U, V, W};
use crate::graph::Graph;

const BCDE: u16 = B | C | D | E;

/// One anchored case: anchor graph on roles `a, b, ...`, its rules in
/// proof order, and the certificate shape that holds when no rule fires.
pub(crate) struct Case {
    pub name: &'static str,
    pub anchor_edges: &'static [(usize, usize)],
    pub order: usize,
    pub rules: fn() -> Vec<Rule>,
    /// Candidate `(A, B)` partitions as host masks.
    pub assemble: fn(&Frame) -> Vec<(u64, u64)>,
}

impl Case {
    pub fn anchor(&self) -> Graph {
        Graph::from_edges(self.order, self.anchor_edges).expect("anchor edge lists are valid")
    }
}

fn pick(cond: bool, p: u16) -> Option<u16> {
    cond.then_some(p)
}

// ---------------------------------------------------------------------
// C4 anchor: the almost-split case. Cycle a-b-c-d.

pub(crate) const C4: Case = Case {
    name: "C4",
    anchor_edges: &[(0, 1), (1, 2), (2, 3), (3, 0)],
    order: 4,
    rules: c4_rules,
    assemble: c4_assemble,
};

fn c4_rules() -> Vec<Rule> {
    vec![
        one("no vertex complete to S", |m| {
            pick(m == A | B | C | D, S | U)
        }),
        one("(1) A_ac and A_bd empty", |m| pick(m == A | C, S | U)),
        two("(1) A_ab or A_bc empty", |u, v, uv| {
            (u == A | B && v == B | C).then_some(if uv { A | C | D | U | V } else { S | U | V })
        }),
        two("(1) A_ab or A_cd empty", |u, v, _| {
            pick(u == A | B && v == C | D, S | U | V)
        }),
        two("(1) A_2 stable", |u, v, uv| {
            pick(uv && pc(u) == 2 && pc(v) == 2, S | U | V)
        }),
        two("(2) A_a or A_c empty", |u, v, uv| {
            (u == A && v == C).then_some(if uv { A | B | C | U | V } else { S | U | V })
        }),
        two("(2) N_S(A_1) within N_S(A_2)", |u, v, uv| {
            (u == A && v == B | C).then_some(if uv { A | C | D | U | V } else { S | U | V })
        }),
        two("(3) A_0 stable", |u, v, uv| {
            pick(uv && u == 0 && v == 0, S | U | V)
        }),
        two("(3) A_1 stable", |u, v, uv| {
            pick(uv && pc(u) == 1 && pc(v) == 1, S | U | V)
        }),
        two("(3) A_0 anticomplete to A_1", |u, v, uv| {
            pick(uv && u == 0 && pc(v) == 1, S | U | V)
        }),
        two("(3) A_0 anticomplete to A_2", |u, v, uv| {
            pick(uv && u == 0 && pc(v) == 2, S | U | V)
        }),
        two("(3) A_1 anticomplete to A_2", |u, v, uv| {
            pick(uv && pc(u) == 1 && pc(v) == 2, S | U | V)
        }),
        two("(4) A_abc or A_acd empty", |u, v, uv| {
            (u == A | B | C && v == A | C | D).then_some(if uv {
                A | C | D | U | V
            } else {
                S | U | V
            })
        }),
        two("(4) N_S(A_1) within N_S(A_3)", |u, v, uv| {
            (u == A | B | C && v == D).then_some(if uv { A | C | D | U | V } else { S | U | V })
        }),
        two("(4) N_S(A_2) within N_S(A_3)", |u, v, _| {
            pick(u == A | B | C && v == C | D, S | U | V)
        }),
        two("(5) A_abc clique", |u, v, uv| {
            pick(!uv && u == A | B | C && v == A | B | C, A | C | D | U | V)
        }),
        two("(5) A_abc complete to A_abd", |u, v, uv| {
            pick(!uv && u == A | B | C && v == A | B | D, S | U | V)
        }),
    ]
}

fn c4_assemble(f: &Frame) -> Vec<(u64, u64)> {
    let mut edges: Vec<(u16, u16)> = vec![(A, B), (B, C), (C, D), (D, A)];
    edges.sort_by_key(|&(x, y)| {
        let (hx, hy) = (
            f.roles[x.trailing_zeros() as usize],
            f.roles[y.trailing_zeros() as usize],
        );
        (hx.min(hy), hx.max(hy))
    });
    let low = f.outside_where(|m| pc(m) <= 2);
    let high = f.outside_where(|m| pc(m) == 3);
    edges
        .into_iter()
        .filter(|&(x, y)| {
            let xy = x | y;
            f.outside.iter().all(|&v| {
                let m = f.ns[v];
                match pc(m) {
                    1 => m & !xy == 0,
                    2 | 3 => m & xy == xy,
                    _ => true,
                }
            })
        })
        .map(|(x, y)| {
            let xy = x | y;
            (low | f.hosts(S & !xy), high | f.hosts(xy))
        })
        .collect()
}

// ---------------------------------------------------------------------
// M21 anchor: a isolated, edges bc and de.

pub(crate) const M21: Case = Case {
    name: "M21",
    anchor_edges: &[(1, 2), (3, 4)],
    order: 5,
    rules: m21_rules,
    assemble: m21_assemble,
};

fn m21_rules() -> Vec<Rule> {
    vec![
        one("(1) A_1, A_3, A_4 empty", |m| {
            pick(matches!(pc(m & BCDE), 1 | 3 | 4), S | U)
        }),
        one("(1) A_2 meets each edge once", |m| {
            pick(m & BCDE == B | C, BCDE | U)
        }),
        two("(2) one A_0 neighbour of a", |u, v, uv| {
            (u & BCDE == 0 && v & BCDE == 0 && u & A != 0 && v & A != 0).then_some(if uv {
                A | B | C | U | V
            } else {
                A | B | C | D | U | V
            })
        }),
        two("(2) A_0 neighbour of a is isolated in A_0", |u, v, uv| {
            pick(
                uv && u & BCDE == 0 && v & BCDE == 0 && u & A != 0,
                A | B | C | D | U | V,
            )
        }),
        three("(2) A_0 semi-matched", |m, adj| {
            if m.iter().any(|&x| x & BCDE != 0) {
                return None;
            }
            match adj.iter().filter(|&&e| e).count() {
                3 => Some(B | C | U | V | W),
                2 => Some(B | C | D | U | V | W),
                _ => None,
            }
        }),
        two("(3) non-adjacent A_2 pair, same side", |u, v, uv| {
            if uv || u & BCDE != B | D {
                return None;
            }
            match v & BCDE {
                x if x == B | D => Some(BCDE | U | V),
                x if x == B | E => Some(B | D | E | U | V),
                x if x == C | D => Some(B | C | D | U | V),
                _ => None,
            }
        }),
        two(
            "(3) a sees exactly one of a non-adjacent A_2 pair",
            |u, v, uv| {
                if uv || u & BCDE != B | D || v & BCDE != C | E {
                    return None;
                }
                match (u & A != 0, v & A != 0) {
                    (true, true) => Some(A | B | C | U | V),
                    (false, false) => Some(S | U | V),
                    _ => None,
                }
            },
        ),
        three("(4) A_2 semi-antimatched", |m, [uv, uw, vw]| {
            if !uv || uw || vw || m[0] & BCDE != B | D || m[1] & BCDE != B | D {
                return None;
            }
            if m[2] & BCDE != C | E {
                return None;
            }
            if m[0] & A != 0 && m[1] & A != 0 {
                Some(A | C | U | V | W)
            } else if m[2] & A != 0 {
                Some(A | B | U | V | W)
            } else {
                None
            }
        }),
        two("alignment: A_2 complete to an edge at a", |u, v, uv| {
            pick(
                uv && pc(u & BCDE) == 2 && u & A != 0 && v & BCDE == 0 && v & A != 0,
                S | U | V,
            )
        }),
        three(
            "alignment: A_2 complete to an edge of A_0",
            |m, [uv, uw, vw]| {
                pick(
                    uv && uw && vw && pc(m[0] & BCDE) == 2 && m[1] & BCDE == 0 && m[2] & BCDE == 0,
                    S | U | V | W,
                )
            },
        ),
        two("alignment: A_2 anticomplete to an edge at a", |u, v, uv| {
            pick(
                !uv && u & BCDE == B | D && u & A == 0 && v & BCDE == 0 && v & A != 0,
                A | B | C | E | U | V,
            )
        }),
        three(
            "alignment: A_2 anticomplete to an edge of A_0",
            |m, [uv, uw, vw]| {
                pick(
                    vw && !uv
                        && !uw
                        && m[0] & BCDE == B | D
                        && m[1] & BCDE == 0
                        && m[2] & BCDE == 0,
                    B | C | E | U | V | W,
                )
            },
        ),
        three(
            "alignment: A_0 sees one of each A_2 non-edge",
            |m, [uv, uw, vw]| {
                pick(
                    !uv && uw == vw
                        && m[0] & BCDE == B | D
                        && m[1] & BCDE == C | E
                        && m[2] & BCDE == 0,
                    S | U | V | W,
                )
            },
        ),
    ]
}

fn m21_assemble(f: &Frame) -> Vec<(u64, u64)> {
    let a0 = f.outside_where(|m| m & BCDE == 0);
    let a2 = f.outside_where(|m| pc(m & BCDE) == 2);
    vec![(a0 | f.role_mask, a2)]
}

// ---------------------------------------------------------------------
// P5 anchor: path a-b-c-d-e-f.

pub(crate) const P5: Case = Case {
    name: "P5",
    anchor_edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],
    order: 6,
    rules: p5_rules,
    assemble: p5_assemble,
};

fn p5_rules() -> Vec<Rule> {
    vec![
        one("(1) A_0 empty", |m| pick(m & BCDE == 0, S | U)),
        one("(1) A_4 empty", |m| pick(m & BCDE == BCDE, S | U)),
        one("(1) A_bc empty", |m| {
            (m & BCDE == B | C).then_some(if m & F != 0 {
                C | D | E | F | U
            } else {
                B | C | E | F | U
            })
        }),
        one("(1) A_bd empty", |m| {
            (m & BCDE == B | D).then_some(if m & A == 0 {
                A | B | C | D | E | U
            } else if m & F == 0 {
                B | C | D | E | F | U
            } else {
                A | B | D | E | F | U
            })
        }),
        one("(1) A_be empty", |m| pick(m & BCDE == B | E, BCDE | U)),
        one("(1) A_cd empty", |m| {
            (m & BCDE == C | D).then_some(match (m & A != 0, m & F != 0) {
                (true, _) => A | B | C | E | F | U,
                (false, true) => A | B | D | E | F | U,
                (false, false) => A | B | E | F | U,
            })
        }),
        one("(2) A_c empty", |m| {
            (m & BCDE == C).then_some(if m & A != 0 {
                A | B | C | D | E | U
            } else {
                A | B | D | E | U
            })
        }),
        one("(2) A_b anticomplete to a and f", |m| {
            if m & BCDE != B {
                None
            } else if m & A != 0 {
                Some(A | B | D | E | U)
            } else if m & F != 0 {
                Some(A | C | D | F | U)
            } else {
                None
            }
        }),
        two("(2) A_b stable", |u, v, uv| {
            pick(uv && u & BCDE == B && v & BCDE == B, B | D | E | U | V)
        }),
        two("(2) A_b anticomplete to A_e", |u, v, uv| {
            pick(uv && u & BCDE == B && v & BCDE == E, A | C | D | U | V)
        }),
        one("(3) A_cde empty", |m| {
            if m & BCDE != C | D | E {
                None
            } else if m & A == 0 {
                Some(A | B | D | E | U)
            } else {
                Some(A | B | C | E | F | U)
            }
        }),
        two("(3) A_bce clique", |u, v, uv| {
            pick(
                !uv && u & BCDE == B | C | E && v & BCDE == B | C | E,
                C | D | E | U | V,
            )
        }),
        two(
            "(3) a sees exactly one of a non-adjacent A_3 pair",
            |u, v, uv| {
                if uv || u & BCDE != B | C | E || v & BCDE != B | D | E {
                    return None;
                }
                match (u & A != 0, v & A != 0) {
                    (true, true) => Some(A | B | D | E | U | V),
                    (false, false) => Some(A | BCDE | U | V),
                    _ => None,
                }
            },
        ),
        three("(4) A_3 semi-antimatched", |m, [uv, uw, vw]| {
            pick(
                uv && !uw
                    && !vw
                    && m[0] & BCDE == B | C | E
                    && m[1] & BCDE == B | C | E
                    && m[2] & BCDE == B | D | E,
                C | D | E | U | V | W,
            )
        }),
        three(
            "alignment: A_1 sees one of each A_3 non-edge",
            |m, [uv, uw, vw]| {
                pick(
                    !vw && uv == uw
                        && pc(m[0] & BCDE) == 1
                        && m[1] & BCDE == B | C | E
                        && m[2] & BCDE == B | D | E,
                    S | U | V | W,
                )
            },
        ),
    ]
}

fn p5_assemble(f: &Frame) -> Vec<(u64, u64)> {
    let a1 = f.outside_where(|m| pc(m & BCDE) == 1);
    let a3 = f.outside_where(|m| pc(m & BCDE) == 3);
    vec![(a1 | f.hosts(A | C | D | F), a3 | f.hosts(B | E))]
}

// ---------------------------------------------------------------------
// co-C6 anchor: triangles ace and bdf, plus ad, be, cf.

pub(crate) const CO_C6: Case = Case {
    name: "co-C6",
    anchor_edges: &[
        (0, 2),
        (0, 4),
        (2, 4),
        (1, 3),
        (1, 5),
        (3, 5),
        (0, 3),
        (1, 4),
        (2, 5),
    ],
    order: 6,
    rules: co_c6_rules,
    assemble: co_c6_assemble,
};

fn co_c6_rules() -> Vec<Rule> {
    vec![
        one("(1) A_0 empty", |m| pick(m == 0, S | U)),
        one("(1) A_6 empty", |m| pick(m == S & 0x3f, S | U)),
        one("(1) A_1 empty", |m| pick(pc(m) == 1, S | U)),
        one("(1) A_3 empty", |m| match m {
            x if x == A | B | C => Some(A | B | D | E | U),
            x if x == A | B | D => Some(A | B | C | F | U),
            x if x == A | C | E => Some(A | B | C | D | E | U),
            _ => None,
        }),
        one("(1) A_4 empty", |m| match m {
            x if x == A | B | C | D => Some(B | C | E | F | U),
            x if x == A | B | C | E => Some(A | C | D | E | F | U),
            x if x == A | B | D | E => Some(A | B | C | F | U),
            _ => None,
        }),
        one("(1) A_5 empty", |m| {
            pick(m == B | C | D | E | F, B | C | E | F | U)
        }),
        one("(2) A_ab empty", |m| pick(m == A | B, A | B | C | F | U)),
        two("(3) A_ac stable", |u, v, uv| {
            pick(uv && u == A | C && v == A | C, A | C | D | F | U | V)
        }),
        two("(3) A_ad stable", |u, v, uv| {
            pick(uv && u == A | D && v == A | D, A | C | D | F | U | V)
        }),
        two("(4) A_ac or A_ae empty", |u, v, uv| {
            (u == A | C && v == A | E).then_some(if uv {
                A | C | E | U | V
            } else {
                B | C | D | U | V
            })
        }),
        two("(4) A_ac or A_bd empty", |u, v, uv| {
            (u == A | C && v == B | D).then_some(if uv {
                C | D | F | U | V
            } else {
                B | C | E | F | U | V
            })
        }),
        two("(5) A_ad or A_ce empty", |u, v, uv| {
            (u == A | D && v == C | E).then_some(if uv {
                C | D | F | U | V
            } else {
                C | D | E | U | V
            })
        }),
        two("(6) A_ad anticomplete to A_ac", |u, v, uv| {
            pick(uv && u == A | D && v == A | C, C | D | F | U | V)
        }),
        three(
            "(7) no A_ac or A_df beside an A_ad-A_cf edge",
            |m, [uv, uw, vw]| {
                pick(
                    uv && !uw
                        && !vw
                        && m[0] == A | D
                        && m[1] == C | F
                        && (m[2] == A | C || m[2] == D | F),
                    B | E | U | V | W,
                )
            },
        ),
        three("(7) A_cf is a single vertex", |m, [uv, uw, vw]| {
            (uv && !vw && m[0] == A | D && m[1] == C | F && m[2] == C | F).then_some(if uw {
                A | B | F | U | V | W
            } else {
                B | E | U | V | W
            })
        }),
        three(
            "(7) A_be empty beside an A_ad-A_cf edge",
            |m, [uv, uw, vw]| {
                (uv && m[0] == A | D && m[1] == C | F && m[2] == B | E).then_some(if !uw && !vw {
                    B | E | U | V | W
                } else {
                    S | U | V | W
                })
            },
        ),
        three(
            "(9) no A_ad or A_cf beside an A_ac-A_df edge",
            |m, [uv, uw, vw]| {
                pick(
                    uv && !uw
                        && !vw
                        && m[0] == A | C
                        && m[1] == D | F
                        && (m[2] == A | D || m[2] == C | F),
                    B | E | U | V | W,
                )
            },
        ),
        three("(9) A_df is a single vertex", |m, [uv, uw, vw]| {
            (uv && !vw && m[0] == A | C && m[1] == D | F && m[2] == D | F).then_some(if uw {
                C | D | E | U | V | W
            } else {
                B | E | U | V | W
            })
        }),
        three("(10) one of A_ad, A_be, A_cf empty", |m, [uv, uw, vw]| {
            pick(
                !uv && !uw && !vw && m[0] == A | D && m[1] == B | E && m[2] == C | F,
                A | F | U | V | W,
            )
        }),
    ]
}

fn co_c6_assemble(f: &Frame) -> Vec<(u64, u64)> {
    let six = S & 0x3f;
    let outside = f.outside_where(|_| true);
    let with_pair = |p: u16| (outside | f.hosts(p), f.hosts(six & !p));
    let has = |m: u16| f.outside.iter().any(|&v| f.ns[v] == m);
    let stable = f.g.is_stable(outside);
    let mut out = Vec::new();
    if stable {
        let triangle_pairs = [
            (A | C, B | E),
            (A | E, C | F),
            (C | E, A | D),
            (B | D, C | F),
            (B | F, A | D),
            (D | F, B | E),
        ];
        if let Some(&(_, p)) = triangle_pairs.iter().find(|&&(m, _)| has(m)) {
            out.push(with_pair(p));
        } else {
            for p in [B | E, A | D, C | F] {
                if !has(p) {
                    out.push(with_pair(p));
                }
            }
        }
    } else {
        for &u in &f.outside {
            for &v in &f.outside {
                if u < v && f.g.has_edge(u, v) {
                    let anti = f.ns[u] | f.ns[v];
                    out.push((outside | f.hosts(six & !anti), f.hosts(anti)));
                    return out;
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// co-domino anchor: edges ab, bc, ca, bd, ce, de, df, ef.

pub(crate) const CO_DOMINO: Case = Case {
    name: "co-domino",
    anchor_edges: &[
        (0, 1),
        (1, 2),
        (2, 0),
        (1, 3),
        (2, 4),
        (3, 4),
        (3, 5),
        (4, 5),
    ],
    order: 6,
    rules: co_domino_rules,
    assemble: co_domino_assemble,
};

fn co_domino_rules() -> Vec<Rule> {
    vec![
        one("(1) A_0 empty", |m| {
            if m & BCDE != 0 {
                return None;
            }
            Some(match (m & A != 0, m & F != 0) {
                (true, true) => A | B | D | F | U,
                (false, false) => A | C | D | F | U,
                (true, false) => A | D | E | F | U,
                (false, true) => return None,
            })
        }),
        one("(1) A_1 empty", |m| {
            if m & BCDE != B {
                return None;
            }
            Some(match (m & A != 0, m & F != 0) {
                (true, true) => A | C | E | F | U,
                (false, false) => A | C | D | F | U,
                (true, false) => A | B | E | F | U,
                (false, true) => B | C | E | F | U,
            })
        }),
        one("(1) A_3 empty", |m| {
            if m & BCDE != B | C | E {
                return None;
            }
            Some(match (m & A != 0, m & F != 0) {
                (_, false) => BCDE | F | U,
                (true, true) => A | B | C | D | F | U,
                (false, true) => A | B | D | E | F | U,
            })
        }),
        one("(1) A_4 empty", |m| pick(m & BCDE == BCDE, BCDE | U)),
        one("(2) A_be and A_cd empty", |m| {
            pick(m & BCDE == B | E || m & BCDE == C | D, BCDE | U)
        }),
        one("(2) A_bc anticomplete to a and f", |m| {
            if m & BCDE != B | C {
                None
            } else if m & A != 0 {
                Some(A | BCDE | U)
            } else if m & F != 0 {
                Some(BCDE | F | U)
            } else {
                None
            }
        }),
        one("(2) A_bd anticomplete to a and f", |m| {
            if m & BCDE != B | D {
                None
            } else if m & A != 0 {
                Some(A | C | D | E | U)
            } else if m & F != 0 {
                Some(B | C | E | F | U)
            } else {
                None
            }
        }),
        two("(2) A_bc and A_de isolated in A_2", |u, v, uv| {
            pick(
                uv && (u & BCDE == B | C || u & BCDE == D | E) && pc(v & BCDE) == 2,
                S | U | V,
            )
        }),
        two("(2) A_bd stable", |u, v, uv| {
            pick(uv && u & BCDE == B | D && v & BCDE == B | D, BCDE | U | V)
        }),
        two("(2) A_bd anticomplete to A_ce", |u, v, uv| {
            pick(uv && u & BCDE == B | D && v & BCDE == C | E, BCDE | U | V)
        }),
    ]
}

fn co_domino_assemble(f: &Frame) -> Vec<(u64, u64)> {
    let outside = f.outside_where(|_| true);
    vec![(outside | f.hosts(A | F), f.hosts(BCDE))]
}

// ---------------------------------------------------------------------
// tent1 anchor: path a-b-c-d-e, apex f on a, b, c, e.

pub(crate) const TENT1: Case = Case {
    name: "tent1",
    anchor_edges: &[
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (5, 0),
        (5, 1),
        (5, 2),
        (5, 4),
    ],
    order: 6,
    rules: tent1_rules,
    assemble: tent1_assemble,
};

fn tent1_rules() -> Vec<Rule> {
    vec![
        one("(1) A_0 empty", |m| {
            (m & BCDE == 0).then_some(if m & A != 0 {
                A | BCDE | U
            } else {
                A | B | D | E | U
            })
        }),
        one("(1) A_4 empty", |m| {
            (m & BCDE == BCDE).then_some(if m & F != 0 {
                C | D | E | F | U
            } else {
                BCDE | F | U
            })
        }),
        one("(1) A_be empty", |m| pick(m & BCDE == B | E, BCDE | U)),
        one("(1) A_bc empty", |m| {
            (m & BCDE == B | C).then_some(if m & A != 0 {
                A | B | D | E | U
            } else if m & F != 0 {
                BCDE | F | U
            } else {
                S | U
            })
        }),
        one("(1) A_bd empty", |m| {
            (m & BCDE == B | D).then_some(if m & F == 0 {
                B | D | E | F | U
            } else if m & A == 0 {
                A | BCDE | U
            } else {
                A | B | D | E | F | U
            })
        }),
        one("(1) A_cd empty", |m| {
            (m & BCDE == C | D).then_some(match (m & A != 0, m & F != 0) {
                (true, true) => A | B | C | F | U,
                (true, false) => A | B | C | D | F | U,
                (false, true) => A | B | D | E | F | U,
                (false, false) => A | B | D | F | U,
            })
        }),
        one("(1) A_ce empty", |m| pick(m & BCDE == C | E, A | BCDE | U)),
        one("(1) A_de empty", |m| {
            (m & BCDE == D | E).then_some(if m & A != 0 {
                A | B | C | D | U
            } else {
                A | B | D | E | U
            })
        }),
        one("(2) A_c empty", |m| {
            (m & BCDE == C).then_some(if m & A != 0 {
                A | BCDE | U
            } else {
                A | B | D | E | U
            })
        }),
        one("(2) A_e empty", |m| pick(m & BCDE == E, A | BCDE | U)),
        one("(2) A_d empty", |m| {
            (m & BCDE == D).then_some(if m & A != 0 {
                A | B | C | D | U
            } else if m & F != 0 {
                A | B | D | E | F | U
            } else {
                A | C | D | E | F | U
            })
        }),
        one("(3) A_1 anticomplete to a", |m| {
            pick(m & BCDE == B && m & A != 0, A | B | D | E | U)
        }),
        two("(3) A_1 stable", |u, v, uv| {
            pick(uv && u & BCDE == B && v & BCDE == B, B | D | E | U | V)
        }),
        one("(4) A_bcd empty", |m| {
            (m & BCDE == B | C | D).then_some(if m & F == 0 {
                B | D | E | F | U
            } else if m & A == 0 {
                S | U
            } else {
                A | B | D | E | F | U
            })
        }),
        one("(4) A_cde empty", |m| {
            (m & BCDE == C | D | E).then_some(if m & F != 0 {
                C | D | E | F | U
            } else {
                BCDE | F | U
            })
        }),
        one("(5) A_bde complete to f", |m| {
            pick(m & BCDE == B | D | E && m & F == 0, BCDE | F | U)
        }),
        one("(5) A_bce complete to f", |m| {
            pick(m & BCDE == B | C | E && m & F == 0, C | D | E | F | U)
        }),
        two("(5) A_3 clique", |u, v, uv| {
            if uv {
                return None;
            }
            let (x, y) = (u & BCDE, v & BCDE);
            let bde = B | D | E;
            let bce = B | C | E;
            if x == bde && y == bde {
                Some(B | C | D | U | V)
            } else if x == bce && y == bce {
                Some(C | D | E | U | V)
            } else if x == bde && y == bce {
                Some(BCDE | U | V)
            } else {
                None
            }
        }),
    ]
}

fn tent1_assemble(f: &Frame) -> Vec<(u64, u64)> {
    let a1 = f.outside_where(|m| pc(m & BCDE) == 1);
    let a3 = f.outside_where(|m| pc(m & BCDE) == 3);
    vec![(a1 | f.hosts(A | C | D), a3 | f.hosts(B | E | F))]
}

// ---------------------------------------------------------------------
// tent2 anchor: path a-b-c-d-e, apex f on a, b, d, e.

pub(crate) const TENT2: Case = Case {
    name: "tent2",
    anchor_edges: &[
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (5, 0),
        (5, 1),
        (5, 3),
        (5, 4),
    ],
    order: 6,
    rules: tent2_rules,
    assemble: tent2_assemble,
};

const BCD: u16 = B | C | D;
const ABDEF: u16 = A | B | D | E | F;

fn tent2_rules() -> Vec<Rule> {
    vec![
        one("(1) N_bcd(v) not empty", |m| {
            (m & BCD == 0).then_some(if m & (A | E) != 0 {
                A | B | C | D | E | U
            } else {
                A | B | D | E | U
            })
        }),
        one("(1) N_bcd(v) = b forces N_S(v) = bf", |m| {
            if m & BCD != B {
                None
            } else if m & E != 0 {
                Some(B | C | D | E | U)
            } else if m & A != 0 {
                Some(A | B | D | E | U)
            } else if m & F == 0 {
                Some(B | C | D | E | F | U)
            } else {
                None
            }
        }),
        one("(1) N_bcd(v) not c", |m| {
            (m & BCD == C).then_some(if m & (A | E) != 0 {
                A | B | C | D | E | U
            } else {
                A | B | D | E | U
            })
        }),
        one("(1) N_bcd(v) not bc", |m| {
            pick(m & BCD == B | C, B | C | D | E | F | U)
        }),
        one("(1) N_bcd(v) = bd forces N_S(v) = abdef", |m| {
            if m & BCD != B | D {
                None
            } else if m & F == 0 {
                Some(B | C | D | F | U)
            } else if m & (A | E) != A | E {
                Some(A | B | C | D | E | U)
            } else {
                None
            }
        }),
        one("(1) N_bcd(v) not bcd", |m| {
            (m & BCD == BCD).then_some(if m & F != 0 {
                B | C | D | F | U
            } else {
                A | B | C | D | F | U
            })
        }),
        two("(2) A_bf stable", |u, v, uv| {
            pick(uv && u == B | F && v == B | F, B | C | D | F | U | V)
        }),
        two("(2) A_bf anticomplete to A_df", |u, v, uv| {
            pick(uv && u == B | F && v == D | F, B | C | D | U | V)
        }),
        two("(2) A_abdef clique", |u, v, uv| {
            pick(!uv && u == ABDEF && v == ABDEF, B | C | D | U | V)
        }),
        two("(2) A_abdef complete to A_bf", |u, v, uv| {
            pick(!uv && u == B | F && v == ABDEF, S | U | V)
        }),
        three("(3) one of A_bf, A_df, A_abdef empty", |m, _| {
            pick(
                m[0] == B | F && m[1] == D | F && m[2] == ABDEF,
                S | U | V | W,
            )
        }),
    ]
}

fn tent2_assemble(f: &Frame) -> Vec<(u64, u64)> {
    let bf = f.outside_where(|m| m == B | F);
    let df = f.outside_where(|m| m == D | F);
    let top = f.outside_where(|m| m == ABDEF);
    let mut out = Vec::new();
    if top == 0 {
        out.push((bf | df | f.hosts(A | E), f.hosts(B | C | D | F)));
    }
    if df == 0 {
        out.push((bf | f.hosts(A | C | D), top | f.hosts(B | E | F)));
    }
    if bf == 0 {
        out.push((df | f.hosts(B | C | E), top | f.hosts(A | D | F)));
    }
    out
}

/// Doubled cases in dispatch priority order.
pub(crate) const DOUBLED_CASES: [&Case; 6] = [&M21, &P5, &CO_C6, &CO_DOMINO, &TENT1, &TENT2];
