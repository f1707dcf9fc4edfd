//! Multiplication, inverses and automorphisms in C_7 x|_2 C_3.

use zsm::groups::{format_element, metacyclic_automorphisms, parse_element, GroupParams};

fn main() -> zsm::Result<()> {
    let g = GroupParams::new(7, 3, 2)?;
    let x = g.x();
    let y = g.y();
    println!("order {}", g.order());
    println!("y x = {}", format_element(g.multiply(y, x)));
    println!("x^3 = {}", format_element(g.pow(x, 3)));

    let a = parse_element("x^2*y^5", &g)?;
    println!("{} has order {} and inverse {}", format_element(a), g.element_order(a), format_element(g.inverse(a)));

    let auts = metacyclic_automorphisms(&g)?;
    println!("{} automorphisms", auts.len());
    Ok(())
}
