//! Runs a classification a few shards at a time through a cursor file, the
//! way an interrupted long job picks up where it stopped.

use zsm::extremal::{verify_main_theorem, SearchOptions};
use zsm::groups::GroupParams;
use zsm::Error;

fn main() -> zsm::Result<()> {
    let dir = std::env::temp_dir().join(format!("zsm-resume-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let cursor = dir.join("cursor.json");
    let g = GroupParams::new(7, 6, 3)?;
    let opts = SearchOptions::default().with_symmetry(true).with_cursor(cursor.clone()).with_shard_budget(10);

    let report = loop {
        match verify_main_theorem(&g, &opts) {
            Ok(r) => break r,
            Err(Error::Partial { done, total, .. }) => println!("paused at {done}/{total} shards"),
            Err(e) => return Err(e),
        }
    };
    println!("{} free sequences, {}", report.free_count, report.verdict.as_str());
    std::fs::remove_dir_all(dir)?;
    Ok(())
}
