//! Additive combinatorics in `Z_q`: sumsets, Cauchy-Davenport, Vosper's
//! criterion, and the residue lemmas behind the classification.

mod lemmas;
mod perms;
mod residue;

pub use lemmas::{
    biquartic_sweep, coefficient_swap_distinct, coefficient_swap_sweep, interval_invariance_counterexample,
    interval_sweep, primes_from_five, quartic_sweep, IntervalEscape, SweepSummary,
};
pub use perms::{perm_sum_set, perm_sum_trials, split_perm_sum_sets};
pub use residue::{
    cauchy_davenport_check, sumset, vosper_classify, vosper_exhaustive, ResidueSet, VosperSweep, VosperVerdict,
    VOSPER_SWEEP_CAP,
};
