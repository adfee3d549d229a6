//! Take a doubled graph, certify it, and complete the certificate to a
//! double-split supergraph.

use doubled::graph::Graph;
use doubled::structure::is_double_split_certificate;
use doubled::{check_aligned, extend_to_double_split, graph6, recognize_doubled, Result};

fn main() -> Result<()> {
    // P5 with a pendant on the middle vertex.
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])?;
    let outcome = recognize_doubled(&g)?;
    let cert = outcome.certificate().expect("this graph is doubled");
    println!("graph    {}", graph6::encode(&g));
    println!("A        {:?}  matched {:?}", cert.a, cert.matched_pairs);
    println!(
        "B        {:?}  antimatched {:?}",
        cert.b, cert.antimatched_pairs
    );
    assert!(check_aligned(&g, cert)?.is_valid());

    let (big, big_cert, embedding) = extend_to_double_split(&g, cert)?;
    println!(
        "extended {} on {} vertices",
        graph6::encode(&big),
        big.order()
    );
    println!("         A pairs {:?}", big_cert.matched_pairs);
    println!("         B pairs {:?}", big_cert.antimatched_pairs);
    println!("         original sits at {:?}", embedding.map);
    assert!(is_double_split_certificate(&big, &big_cert)?);
    Ok(())
}
