//! A small rule engine for the anchored case analyses.
//!
//! Every case starts from an induced copy `S` of an anchor graph whose
//! vertices play named roles `a, b, c, ...` (role `i` is bit `i`). Each
//! vertex outside `S` is classified by the set of roles it is adjacent to.
//! A rule looks at one, two or three outside vertices (their role masks
//! and mutual adjacency) and, if they form a forbidden configuration,
//! names the vertex subset that induces an obstruction.
//!
//! Rules are written for one labelling of the anchor; the engine applies
//! them under every automorphism of the anchor, which is how the proofs'
//! "by symmetry" steps are realised.

use crate::graph::{bits, Graph};

/// Role bits as used by the rule tables, plus the outside vertices of the
/// tuple under test.
pub(crate) const A: u16 = 1;
pub(crate) const B: u16 = 1 << 1;
pub(crate) const C: u16 = 1 << 2;
pub(crate) const D: u16 = 1 << 3;
pub(crate) const E: u16 = 1 << 4;
pub(crate) const F: u16 = 1 << 5;
/// First, second and third outside vertex of the tuple.
pub(crate) const U: u16 = 1 << 8;
pub(crate) const V: u16 = 1 << 9;
pub(crate) const W: u16 = 1 << 10;
/// All roles; masked down to the anchor's order when applied.
pub(crate) const S: u16 = 0xff;

const ROLE_BITS: u16 = 0xff;

#[derive(Clone, Copy)]
pub(crate) enum Test {
    One(fn(u16) -> Option<u16>),
    Two(fn(u16, u16, bool) -> Option<u16>),
    /// Masks of `u, v, w` and the adjacencies `uv, uw, vw`.
    Three(fn([u16; 3], [bool; 3]) -> Option<u16>),
}

#[derive(Clone, Copy)]
pub(crate) struct Rule {
    pub step: &'static str,
    pub test: Test,
}

impl Rule {
    pub fn arity(&self) -> usize {
        match self.test {
            Test::One(_) => 1,
            Test::Two(_) => 2,
            Test::Three(_) => 3,
        }
    }

    /// Apply the rule to masks already expressed in the table's labelling.
    pub fn apply(&self, masks: &[u16], adj: [bool; 3]) -> Option<u16> {
        match self.test {
            Test::One(f) => f(masks[0]),
            Test::Two(f) => f(masks[0], masks[1], adj[0]),
            Test::Three(f) => f([masks[0], masks[1], masks[2]], adj),
        }
    }
}

pub(crate) fn one(step: &'static str, f: fn(u16) -> Option<u16>) -> Rule {
    Rule {
        step,
        test: Test::One(f),
    }
}

pub(crate) fn two(step: &'static str, f: fn(u16, u16, bool) -> Option<u16>) -> Rule {
    Rule {
        step,
        test: Test::Two(f),
    }
}

pub(crate) fn three(step: &'static str, f: fn([u16; 3], [bool; 3]) -> Option<u16>) -> Rule {
    Rule {
        step,
        test: Test::Three(f),
    }
}

/// Number of roles in a mask.
#[inline]
pub(crate) fn pc(m: u16) -> u32 {
    (m & ROLE_BITS).count_ones()
}

/// Automorphisms of a small graph as role permutations, identity first.
pub(crate) fn automorphisms(anchor: &Graph) -> Vec<Vec<usize>> {
    let k = anchor.order();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        if crate::canon::is_automorphism(anchor, &perm) {
            out.push(perm.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// An anchored view of a host graph.
pub(crate) struct Frame<'a> {
    pub g: &'a Graph,
    /// Host vertex playing each role.
    pub roles: Vec<usize>,
    pub role_mask: u64,
    /// Host vertices outside the anchor, ascending.
    pub outside: Vec<usize>,
    /// Role mask of each host vertex's neighbours in the anchor.
    pub ns: Vec<u16>,
    /// Anchor automorphisms `sigma`, identity first.
    syms: Vec<Vec<usize>>,
    /// `base[s][actual]`: the mask `actual` read through `syms[s]`.
    base: Vec<Vec<u16>>,
}

impl<'a> Frame<'a> {
    pub fn new(g: &'a Graph, anchor: &Graph, roles: &[usize]) -> Self {
        Self::with_symmetries(g, automorphisms(anchor), roles)
    }

    /// As [`Frame::new`] with the anchor automorphisms supplied.
    pub fn with_symmetries(g: &'a Graph, syms: Vec<Vec<usize>>, roles: &[usize]) -> Self {
        let k = roles.len();
        let role_mask = crate::graph::mask_of(roles);
        let outside: Vec<usize> = bits(g.vertex_mask() & !role_mask).collect();
        let ns: Vec<u16> = (0..g.order())
            .map(|v| {
                roles
                    .iter()
                    .enumerate()
                    .filter(|&(_, &h)| g.has_edge(v, h))
                    .fold(0, |m, (r, _)| m | 1 << r)
            })
            .collect();
        let base = syms
            .iter()
            .map(|sigma| {
                (0..1u16 << k)
                    .map(|actual| {
                        (0..k)
                            .filter(|&r| actual >> sigma[r] & 1 == 1)
                            .fold(0, |m, r| m | 1 << r)
                    })
                    .collect()
            })
            .collect();
        Frame {
            g,
            roles: roles.to_vec(),
            role_mask,
            outside,
            ns,
            syms,
            base,
        }
    }

    pub fn order(&self) -> usize {
        self.roles.len()
    }

    /// Host vertices of the roles in `m`.
    pub fn hosts(&self, m: u16) -> u64 {
        bits(m as u64 & crate::graph::full_mask(self.order()))
            .fold(0, |acc, r| acc | 1 << self.roles[r])
    }

    /// Outside vertices whose role mask satisfies `pred`.
    pub fn outside_where(&self, pred: impl Fn(u16) -> bool) -> u64 {
        self.outside
            .iter()
            .filter(|&&v| pred(self.ns[v]))
            .fold(0, |m, &v| m | 1 << v)
    }

    fn witness(&self, s: usize, pick: u16, tuple: &[usize]) -> u64 {
        let sigma = &self.syms[s];
        let mut mask = 0u64;
        for r in bits((pick & ROLE_BITS) as u64 & crate::graph::full_mask(self.order())) {
            mask |= 1 << self.roles[sigma[r]];
        }
        for (i, &x) in tuple.iter().enumerate() {
            if pick >> (8 + i) & 1 == 1 {
                mask |= 1 << x;
            }
        }
        mask
    }

    /// First firing of `rule`: tuples in ascending order, automorphisms
    /// innermost. Returns the witness as a host vertex mask.
    pub fn fire(&self, rule: &Rule) -> Option<u64> {
        let out = &self.outside;
        let g = self.g;
        let nsyms = self.syms.len();
        match rule.arity() {
            1 => {
                for &u in out {
                    for s in 0..nsyms {
                        let m = [self.base[s][self.ns[u] as usize]];
                        if let Some(p) = rule.apply(&m, [false; 3]) {
                            return Some(self.witness(s, p, &[u]));
                        }
                    }
                }
            }
            2 => {
                for &u in out {
                    for &v in out {
                        if u == v {
                            continue;
                        }
                        let adj = [g.has_edge(u, v), false, false];
                        for s in 0..nsyms {
                            let b = &self.base[s];
                            let m = [b[self.ns[u] as usize], b[self.ns[v] as usize]];
                            if let Some(p) = rule.apply(&m, adj) {
                                return Some(self.witness(s, p, &[u, v]));
                            }
                        }
                    }
                }
            }
            _ => {
                for &u in out {
                    for &v in out {
                        if u == v {
                            continue;
                        }
                        for &w in out {
                            if w == u || w == v {
                                continue;
                            }
                            let adj = [g.has_edge(u, v), g.has_edge(u, w), g.has_edge(v, w)];
                            for s in 0..nsyms {
                                let b = &self.base[s];
                                let m = [
                                    b[self.ns[u] as usize],
                                    b[self.ns[v] as usize],
                                    b[self.ns[w] as usize],
                                ];
                                if let Some(p) = rule.apply(&m, adj) {
                                    return Some(self.witness(s, p, &[u, v, w]));
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// First rule of `rules` that fires, with its witness mask.
    pub fn first_firing(&self, rules: &[Rule]) -> Option<(usize, u64)> {
        rules
            .iter()
            .enumerate()
            .find_map(|(i, r)| self.fire(r).map(|m| (i, m)))
    }
}
