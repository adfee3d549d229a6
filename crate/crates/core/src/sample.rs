//! Seeded random graph generators for sampled sweeps.
//!
//! All generators take an explicit RNG so a seed fixes the whole sequence.

use rand::seq::index::sample;
use rand::Rng;

use crate::graph::Graph;
use crate::structure::DoubledCertificate;

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A random double-split graph with `ka` matched pairs and `kb`
/// antimatched pairs. Pair `i` of `A` is `(2i, 2i+1)`; pair `j` of `B` is
/// `(2ka + 2j, 2ka + 2j + 1)`. For each `A`-pair `xy` and `B`-pair `pq` a
/// coin decides between `p~x, q~y` and `p~y, q~x`.
pub fn double_split<R: Rng>(rng: &mut R, ka: usize, kb: usize) -> (Graph, DoubledCertificate) {
    let n = 2 * (ka + kb);
    let mut g = Graph::empty(n);
    let a_pairs: Vec<[usize; 2]> = (0..ka).map(|i| [2 * i, 2 * i + 1]).collect();
    let b_pairs: Vec<[usize; 2]> = (0..kb)
        .map(|j| [2 * ka + 2 * j, 2 * ka + 2 * j + 1])
        .collect();
    for &[x, y] in &a_pairs {
        g.add_edge(x, y);
    }
    for u in 2 * ka..n {
        for v in u + 1..n {
            if v != u + 1 || u % 2 == 1 {
                g.add_edge(u, v);
            }
        }
    }
    for &[x, y] in &a_pairs {
        for &[p, q] in &b_pairs {
            if rng.gen_bool(0.5) {
                g.add_edge(p, x);
                g.add_edge(q, y);
            } else {
                g.add_edge(p, y);
                g.add_edge(q, x);
            }
        }
    }
    let cert = DoubledCertificate {
        a: (0..2 * ka).collect(),
        b: (2 * ka..n).collect(),
        matched_pairs: a_pairs,
        antimatched_pairs: b_pairs,
    };
    (g, cert)
}

/// A random doubled graph on `n` vertices: a uniformly random induced
/// subgraph of a random double-split graph with `n` to `2n` vertices.
pub fn random_doubled<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    let pairs = rng.gen_range(n.div_ceil(2)..=n);
    let ka = rng.gen_range(0..=pairs);
    let (h, _) = double_split(rng, ka, pairs - ka);
    let mut keep: Vec<usize> = sample(rng, h.order(), n).into_vec();
    keep.sort_unstable();
    h.induced(&keep).expect("sampled vertices are in range")
}

/// A random doubled graph with one or two vertex pairs toggled. These sit
/// close to the class boundary, where most are non-members with a small
/// witness.
pub fn near_doubled<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut g = random_doubled(rng, n);
    if n < 2 {
        return g;
    }
    for _ in 0..rng.gen_range(1..=2) {
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        g.toggle_edge(u, v);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{check_aligned, oracle_doubled};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn double_split_certificate_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (ka, kb) in [(0, 0), (1, 0), (0, 2), (2, 3), (4, 1)] {
            let (g, cert) = double_split(&mut rng, ka, kb);
            assert!(check_aligned(&g, &cert).unwrap().is_valid());
        }
    }

    #[test]
    fn random_doubled_graphs_are_doubled() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 0..=9 {
            for _ in 0..20 {
                let g = random_doubled(&mut rng, n);
                assert_eq!(g.order(), n);
                assert!(oracle_doubled(&g));
            }
        }
    }

    #[test]
    fn seeds_fix_the_sequence() {
        let a = random_doubled(&mut ChaCha8Rng::seed_from_u64(9), 12);
        let b = random_doubled(&mut ChaCha8Rng::seed_from_u64(9), 12);
        assert_eq!(a, b);
    }
}
