//! Davenport constants by exhaustive search, with orbit pruning.

use std::time::Instant;

use zsm::extremal::{davenport, SearchOptions, SearchSpace};
use zsm::groups::GroupParams;

fn main() -> zsm::Result<()> {
    let opts = SearchOptions::default().with_symmetry(true);
    for (q, m, s) in [(3, 2, 2), (5, 4, 2), (7, 3, 2), (7, 6, 3)] {
        let started = Instant::now();
        let space = SearchSpace::metacyclic(&GroupParams::new(q, m, s)?)?;
        let d = davenport(&space, &opts, None)?;
        println!(
            "D(C_{q} x|_{s} C_{m}) = {}  witness {}  ({} nodes, {:.1?})",
            d.constant,
            space.format(&d.witness),
            d.stats.nodes,
            started.elapsed()
        );
    }
    Ok(())
}
