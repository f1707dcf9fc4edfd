//! Decides product-one freeness and prints an ordered witness when one exists.

use zsm::groups::GroupParams;
use zsm::seqengine::{achievable_products, is_product1_free, Sequence};

fn main() -> zsm::Result<()> {
    let g = GroupParams::new(5, 2, 4)?;
    let table = g.to_cayley()?;
    for text in ["y,y,y,y,x", "x,x*y^4,x*y,x*y^2", "x,x*y,x*y^2,x*y^3"] {
        let seq = Sequence::parse(text, &g)?;
        let verdict = is_product1_free(&table, &seq)?;
        match verdict.witness {
            None => println!("{text}: free"),
            Some(w) => {
                let ordered = Sequence::from_indices(w.0.iter().copied());
                println!("{text}: not free, e.g. {}", ordered.format(&g));
            }
        }
    }

    let seq = Sequence::parse("y,y^2,x", &g)?;
    let reach = achievable_products(&table, &seq)?;
    let full = vec![1; reach.elements().len()];
    let products = reach.get(&full).map(|s| s.iter().count()).unwrap_or(0);
    println!("{} reachable products of the whole of y,y^2,x", products);
    Ok(())
}
