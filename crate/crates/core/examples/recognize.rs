//! Recognize a few graphs given in graph6 and print the outcome.
//!
//! cargo run --example recognize -- 'DQc' 'Dhc'

use doubled::recognition::ClassId;
use doubled::{graph6, Result};

fn main() -> Result<()> {
    let mut codes: Vec<String> = std::env::args().skip(1).collect();
    if codes.is_empty() {
        // C5, the 5-path, the bull.
        codes = vec!["Dhc".into(), "DQo".into(), "DHs".into()];
    }
    for code in &codes {
        let g = graph6::decode(code)?;
        for class in ClassId::ALL {
            let outcome = class.recognize(&g)?;
            match outcome.certificate() {
                Some(c) => println!(
                    "{code} {class}: member, A = {:?}, B = {:?}, {} pair(s)",
                    c.a,
                    c.b,
                    c.pair_count()
                ),
                None => {
                    let w = outcome.witness().expect("non-member has a witness");
                    let kind = w.kind.map_or("unnamed".to_string(), |k| k.to_string());
                    println!(
                        "{code} {class}: non-member, witness {:?} ({kind})",
                        w.vertices
                    );
                }
            }
        }
    }
    Ok(())
}
