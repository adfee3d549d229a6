//! Run the built-in consistency suites, then check the mined doubled
//! obstructions against the oracle on a random sample.

use doubled::miner::{mine_class, verify_characterization, Source};
use doubled::patterns::PatternCatalog;
use doubled::recognition::ClassId;
use doubled::sample;
use doubled::selfcheck::{run, SelfcheckConfig};
use doubled::{Graph, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let report = run(
        &SelfcheckConfig {
            full: false,
            seed: 7,
        },
        PatternCatalog::standard(),
    );
    print!("{report}");

    let f = mine_class(ClassId::Doubled, 8, Source::Generator)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let graphs: Vec<Graph> = (0..200)
        .map(|i| {
            if i % 2 == 0 {
                sample::gnp(&mut rng, 9, 0.5)
            } else {
                sample::near_doubled(&mut rng, 9)
            }
        })
        .collect();
    let r = verify_characterization(&|g| ClassId::Doubled.oracle(g), &f, &graphs);
    println!(
        "sampled characterization: {} graphs, {} discrepancies",
        r.checked,
        r.discrepancies.len()
    );
    std::process::exit(if report.passed() && r.is_clean() {
        0
    } else {
        1
    });
}
