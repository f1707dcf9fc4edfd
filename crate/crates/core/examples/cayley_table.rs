//! Loads a group from a multiplication table file and runs the generic
//! search on it. Pass a path, or the Klein four-group is used.

use zsm::extremal::{davenport, SearchOptions, SearchSpace};
use zsm::groups::{automorphisms, CayleyGroup};

const KLEIN: &str = "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";

fn main() -> zsm::Result<()> {
    let group = match std::env::args().nth(1) {
        Some(path) => CayleyGroup::load(path.as_ref())?,
        None => CayleyGroup::parse(KLEIN)?,
    };
    println!("order {}, abelian {}", group.order(), group.is_abelian());
    println!("{} automorphisms", automorphisms(&group)?.len());
    let space = SearchSpace::cayley(group)?;
    let d = davenport(&space, &SearchOptions::default().with_symmetry(true), None)?;
    println!("D = {}  witness {}", d.constant, space.format(&d.witness));
    Ok(())
}
