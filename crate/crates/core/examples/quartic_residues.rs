//! Counts solutions of a z^2 - b w^4 = c and checks which quadratic classes
//! c + b w^4 reaches.

use zsm::numtheory::{biquartic_residue_classes, count_quartic_solutions, primes_one_mod_four};

fn main() -> zsm::Result<()> {
    for q in primes_one_mod_four(41) {
        let n = count_quartic_solutions(1, 2, 3, q)?;
        println!("q={q:>2}  N={:>3}  |N-q| < {:.1}: {}", n.count, n.bound(), n.within_bound());
    }
    for (b, c) in [(1, 2), (1, 4), (3, 1)] {
        let (qr, nqr) = biquartic_residue_classes(b, c, 13)?;
        println!("q=13 b={b} c={c}: residue {qr}, non-residue {nqr}");
    }
    Ok(())
}
