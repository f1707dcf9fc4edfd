//! Splits a sequence into its part in H and minimal parts with product in H,
//! then lists the rotation products of each part.

use zsm::groups::GroupParams;
use zsm::seqengine::{check_shift_lemma, decompose, Sequence};

fn main() -> zsm::Result<()> {
    let g = GroupParams::new(7, 3, 2)?;
    let seq = Sequence::parse("y,y^3,x,x*y,x*y^4,x^2,x^2*y,x^2*y^5", &g)?;
    let d = decompose(&g, &seq);
    println!("in H: {}", d.in_h.format(&g));
    for (part, shifts) in d.parts.iter().zip(&d.shift_sets) {
        let check = check_shift_lemma(&g, &part.elements(&g));
        println!("part {}  rotations y^{:?}  {:?}", part.format(&g), shifts, check);
    }
    println!("left over: {}", d.residual.format(&g));
    println!("|R| = {}", d.product_set.len());
    Ok(())
}
