//! Exhaustive enumeration of isomorphism classes of small graphs.

use super::iso::{canonical_code, canonical_graph};
use super::{Graph, GraphError};
use std::collections::BTreeMap;

/// Enumeration extends graphs one vertex at a time; 7 keeps the class count
/// (1044) and the per-class canonicalization cost small.
pub const ENUMERATE_MAX_N: usize = 7;

/// One canonical representative per isomorphism class of graphs of order `n`,
/// in increasing order of their canonical codes.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > ENUMERATE_MAX_N {
        return Err(GraphError::OrderCeiling {
            operation: "enumerate_all_graphs",
            ceiling: ENUMERATE_MAX_N,
            n,
        });
    }
    if n == 0 {
        return Ok(vec![Graph::edgeless(0)?]);
    }
    let mut classes: BTreeMap<u64, Graph> = BTreeMap::new();
    classes.insert(0, Graph::edgeless(1)?);
    for order in 2..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in classes.values() {
            // attach a new vertex with every possible neighborhood
            for neighborhood in 0u64..(1 << (order - 1)) {
                let mut extended = Graph::edgeless(order)?;
                for (u, v) in g.edges() {
                    extended.add_edge(u, v);
                }
                for u in super::BitIter(neighborhood) {
                    extended.add_edge(u, order - 1);
                }
                next.entry(canonical_code(&extended))
                    .or_insert_with(|| canonical_graph(&extended));
            }
        }
        classes = next;
    }
    Ok(classes.into_values().collect())
}
