//! Mine the minimal forbidden induced subgraphs of each class and print a
//! summary, then the doubled obstructions themselves.
//!
//! cargo run --release --example mine -- 9

use doubled::miner::{mine_class, Source};
use doubled::recognition::ClassId;
use doubled::Result;

fn main() -> Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    for class in ClassId::ALL {
        let set = mine_class(class, max, Source::Generator)?;
        let s = set.summary();
        println!(
            "{class}: {} obstructions on <= {max} vertices, {} up to complement, by order {:?}",
            s.count, s.count_up_to_complement, s.order_histogram
        );
        if class == ClassId::Doubled {
            print!("{}", set.to_tsv());
        }
    }
    Ok(())
}
