//! Enumerates the longest free sequences and sorts them against Form II.

use zsm::extremal::{form_ii_count, verify_main_theorem, SearchOptions};
use zsm::groups::GroupParams;

fn main() -> zsm::Result<()> {
    let opts = SearchOptions::default().with_symmetry(true).with_jobs(0);
    for (q, m, s) in [(5, 2, 4), (7, 3, 2), (3, 2, 2)] {
        let r = verify_main_theorem(&GroupParams::new(q, m, s)?, &opts)?;
        println!(
            "({q},{m},{s}) length {}: {} free, formula {}, {}",
            r.length,
            r.free_count,
            form_ii_count(q, m),
            r.verdict.as_str()
        );
        for u in &r.unmatched {
            println!("  outside Form II: {u}");
        }
    }
    Ok(())
}
