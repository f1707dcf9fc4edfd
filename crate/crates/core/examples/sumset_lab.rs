//! Sumsets in Z_q, the Cauchy-Davenport bound and Vosper's classification.

use zsm::lemmalab::{cauchy_davenport_check, sumset, vosper_classify, vosper_exhaustive, ResidueSet};

fn main() -> zsm::Result<()> {
    let x = ResidueSet::from_iter(11, [1, 3, 5, 7]);
    let y = ResidueSet::from_iter(11, [0, 2, 4]);
    println!("{x} + {y} = {}", sumset(&x, &y)?);
    println!("Cauchy-Davenport holds: {}", cauchy_davenport_check(&[x.clone(), y.clone()])?);
    let v = vosper_classify(&x, &y)?;
    println!("critical: {}  arithmetic progressions: {}  consistent: {}", v.equality, v.cond_d, v.consistent());

    let sweep = vosper_exhaustive(7)?;
    println!("q=7: {} pairs, {} critical, {} violations", sweep.pairs, sweep.equalities, sweep.violations.len());
    Ok(())
}
