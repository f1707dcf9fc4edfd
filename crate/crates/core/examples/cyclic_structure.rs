//! Long free sequences in cyclic groups carry a heavily repeated element.

use zsm::extremal::{cyclic_structure_check, enumerate_free, SearchOptions, SearchSpace};

fn main() -> zsm::Result<()> {
    let n = 8;
    let space = SearchSpace::cyclic(n)?;
    for len in (n + 1).div_ceil(2)..n {
        let found = enumerate_free(&space, len, &SearchOptions::default())?;
        println!("C_{n}, length {len}: {} free, structure holds: {}", found.total(), cyclic_structure_check(n, len)?);
    }
    let top = enumerate_free(&space, n - 1, &SearchOptions::default())?;
    for f in &top.sequences {
        println!("  {}", space.format(&f.sequence));
    }
    Ok(())
}
