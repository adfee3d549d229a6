//! Print the named pattern catalog with canonical forms, and find the first
//! catalog pattern inside a larger graph.

use doubled::patterns::PatternCatalog;
use doubled::{find_any_of, graph6, Graph, PatternId};

fn main() {
    let catalog = PatternCatalog::standard();
    println!("{:<14} {:<10} canonical", "name", "graph6");
    for e in catalog.entries() {
        println!(
            "{:<14} {:<10} {}",
            e.id.to_string(),
            graph6::encode(&e.graph),
            e.canon
        );
    }

    let ids: Vec<PatternId> = catalog.entries().iter().map(|e| e.id).collect();
    let host = Graph::cycle(7);
    if let Some((id, emb)) = find_any_of(&host, &ids) {
        println!("\nC7 contains {id} at {:?}", emb.map);
    }
}
