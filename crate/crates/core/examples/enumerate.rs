//! Count graphs up to isomorphism by order, using the built-in generator.
//!
//! cargo run --release --example enumerate -- 8

use std::time::Instant;

use doubled::miner::{enumerate_graphs, GENERATOR_MAX_ORDER};
use doubled::Result;

fn main() -> Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7)
        .min(GENERATOR_MAX_ORDER);
    for n in 0..=max {
        let t = Instant::now();
        let graphs = enumerate_graphs(n)?;
        println!("n = {n}: {:>7} graphs ({:.2?})", graphs.len(), t.elapsed());
    }
    Ok(())
}
