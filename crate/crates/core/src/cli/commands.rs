use std::path::PathBuf;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extremal::{
    cyclic_structure_check, davenport, enumerate_free, verify_main_theorem, SearchOptions, SearchSpace, Verdict,
};
use crate::groups::{format_element, CayleyGroup, GroupParams};
use crate::lemmalab::{
    biquartic_sweep, interval_invariance_counterexample, interval_sweep, perm_sum_set, perm_sum_trials,
    primes_from_five, quartic_sweep, split_perm_sum_sets, vosper_classify, vosper_exhaustive, IntervalEscape,
    ResidueSet, SweepSummary,
};
use crate::numtheory::{biquartic_residue_classes, count_quartic_solutions, mult_order};
use crate::seqengine::{is_product1_free, Sequence};

use super::args::{Command, GroupArgs, LemmaCommand};
use super::render::Report;

const QUARTIC_SWEEP_MAX: u64 = 101;
const BIQUARTIC_PRIMES: [u64; 5] = [13, 17, 29, 37, 41];
const VOSPER_DEFAULT: [u32; 3] = [5, 7, 11];
/// Failing cases quoted in sweep reports.
const SHOWN: usize = 10;

pub struct Context {
    pub symmetry: bool,
    pub jobs: usize,
}

impl Context {
    fn search(&self) -> SearchOptions {
        SearchOptions::default().with_symmetry(self.symmetry).with_jobs(self.jobs)
    }
}

fn params(g: &GroupArgs) -> Result<GroupParams> {
    match (g.q, g.m, g.s) {
        (Some(q), Some(m), Some(s)) => GroupParams::new(q, m, s),
        _ => Err(Error::InvalidArgument("--q, --m and --s are all required".into())),
    }
}

fn space(g: &GroupArgs, cayley: &Option<PathBuf>) -> Result<SearchSpace> {
    match cayley {
        Some(path) => SearchSpace::cayley(CayleyGroup::load(path)?),
        None => SearchSpace::metacyclic(&params(g)?),
    }
}

fn exit_if(failed: bool) -> i32 {
    i32::from(failed)
}

fn sweep_record(summary: &SweepSummary, mut fields: Value) -> Value {
    fields["cases"] = json!(summary.cases);
    fields["violations"] = json!(summary.violations.len());
    fields["examples"] = json!(summary.violations.iter().take(SHOWN).collect::<Vec<_>>());
    fields
}

pub fn execute(cmd: &Command, ctx: &Context) -> Result<Report> {
    match cmd {
        Command::VerifyTheorem { group, all_s, resume, max_shards } => {
            verify(group, *all_s, resume.clone(), *max_shards, ctx)
        }
        Command::Davenport { group, cayley, max_len } => davenport_cmd(group, cayley, *max_len, ctx),
        Command::Check { group, sequence } => check(group, sequence),
        Command::EnumerateFree { group, cayley, length, limit } => enumerate(group, cayley, *length, *limit, ctx),
        Command::Lemma(lemma) => match lemma {
            LemmaCommand::Vosper { q, x, y, exhaustive } => vosper(*q, x, y, *exhaustive),
            LemmaCommand::Sinvariance { q, q_max, s, k } => sinvariance(*q, *q_max, *s, *k),
            LemmaCommand::Quartic { q, a, b, c, exhaustive } => quartic(*q, *a, *b, *c, *exhaustive),
            LemmaCommand::PermSums { q, s, coeffs, trials, seed } => perm_sums(*q, *s, coeffs, *trials, *seed),
        },
        Command::CyclicCheck { n, length } => cyclic(*n, *length),
    }
}

fn verify(
    group: &GroupArgs,
    all_s: bool,
    resume: Option<PathBuf>,
    max_shards: Option<usize>,
    ctx: &Context,
) -> Result<Report> {
    let groups = if all_s {
        let (Some(q), Some(m)) = (group.q, group.m) else {
            return Err(Error::InvalidArgument("--all-s needs --q and --m".into()));
        };
        if resume.is_some() {
            return Err(Error::InvalidArgument("--resume applies to a single group, not --all-s".into()));
        }
        GroupParams::all_s(q, m)?.into_iter().map(|s| GroupParams::new(q, m, s)).collect::<Result<Vec<_>>>()?
    } else {
        vec![params(group)?]
    };
    let mut opts = ctx.search();
    opts.cursor = resume;
    opts.shard_budget = max_shards;

    let mut records = Vec::new();
    let mut failed = false;
    let mut notes = Vec::new();
    for p in &groups {
        let report = verify_main_theorem(p, &opts)?;
        failed |= report.verdict == Verdict::Falsified;
        let audit = &report.shift_audit;
        if !audit.violations.is_empty() || !audit.bound_violations.is_empty() {
            failed = true;
            notes.push(format!(
                "{p}: rotation lemma violated on {} parts, product-set bound on {} sequences",
                audit.violations.len(),
                audit.bound_violations.len()
            ));
        }
        if !report.missing_form_ii.is_empty() {
            notes.push(format!("{p}: {} Form II sequences were not found free", report.missing_form_ii.len()));
        }
        records.push(report.to_json());
    }
    let mut out = Report::new(records, exit_if(failed));
    out.notes = notes;
    Ok(out)
}

fn davenport_cmd(group: &GroupArgs, cayley: &Option<PathBuf>, max_len: Option<usize>, ctx: &Context) -> Result<Report> {
    let space = space(group, cayley)?;
    let started = Instant::now();
    let d = davenport(&space, &ctx.search(), max_len)?;
    let seconds = started.elapsed().as_secs_f64();
    let (label, expected) = match space.params() {
        Some(p) => (p.to_string(), Some((p.m() + p.q() - 1) as usize)),
        None => (format!("cayley table of order {}", space.group().order()), None),
    };
    let failed = d.bound_reached() || expected.is_some_and(|e| e != d.constant);
    let record = json!({
        "group": label,
        "d": d.constant,
        "expected": expected,
        "witness": space.format(&d.witness),
        "max_len": d.max_len,
        "bound_reached": d.bound_reached(),
        "stats": {"nodes": d.stats.nodes, "pruned": d.stats.pruned, "seconds": seconds},
    });
    let report = Report::new(vec![record], exit_if(failed));
    let table = format!("d = {}\n{}", d.constant, report.render(super::args::Format::Table));
    Ok(report.with_table(table))
}

fn check(group: &GroupArgs, text: &str) -> Result<Report> {
    let p = params(group)?;
    let table = p.to_cayley()?;
    let seq = Sequence::parse(text, &p)?;
    let verdict = is_product1_free(&table, &seq)?;
    let witness = verdict.witness.as_ref().map(|w| {
        w.0.iter().map(|&g| format_element(p.element_at(g))).collect::<Vec<_>>().join(",")
    });
    let record = json!({
        "group": p.to_string(),
        "sequence": seq.format(&p),
        "length": seq.len(),
        "free": verdict.free,
        "witness": witness,
    });
    Ok(Report::new(vec![record], exit_if(!verdict.free)))
}

fn enumerate(
    group: &GroupArgs,
    cayley: &Option<PathBuf>,
    length: usize,
    limit: Option<usize>,
    ctx: &Context,
) -> Result<Report> {
    let space = space(group, cayley)?;
    let found = enumerate_free(&space, length, &ctx.search())?;
    let shown = found.sequences.iter().take(limit.unwrap_or(usize::MAX));
    let mut records = Vec::new();
    let mut table = String::new();
    for f in shown {
        let text = space.format(&f.sequence);
        if ctx.symmetry {
            table.push_str(&format!("{text}  x{}\n", f.orbit_size));
        } else {
            table.push_str(&format!("{text}\n"));
        }
        records.push(json!({"sequence": text, "orbit_size": f.orbit_size}));
    }
    Ok(Report::new(records, 0).with_table(table))
}

fn residue_set(q: u32, items: &[u64], flag: &str) -> Result<ResidueSet> {
    if items.is_empty() {
        return Err(Error::InvalidArgument(format!("{flag} needs at least one residue")));
    }
    Ok(ResidueSet::from_iter(q, items.iter().copied()))
}

fn vosper(q: Option<u32>, x: &[u64], y: &[u64], exhaustive: bool) -> Result<Report> {
    let reading = "complement case read literally; size-1 sets are progressions of every difference, {a,b} of +-(b-a)";
    if exhaustive {
        let qs = q.map(|q| vec![q]).unwrap_or_else(|| VOSPER_DEFAULT.to_vec());
        let mut records = Vec::new();
        let mut failed = false;
        for q in qs {
            let sweep = vosper_exhaustive(q)?;
            failed |= !sweep.violations.is_empty();
            let shown: Vec<String> = sweep
                .violations
                .iter()
                .take(SHOWN)
                .map(|&(a, b)| format!("X={} Y={}", ResidueSet::from_mask(q, a), ResidueSet::from_mask(q, b)))
                .collect();
            records.push(json!({
                "q": q,
                "pairs": sweep.pairs,
                "equalities": sweep.equalities,
                "cond_a": sweep.cond_a,
                "cond_b": sweep.cond_b,
                "cond_c": sweep.cond_c,
                "cond_d": sweep.cond_d,
                "violations": sweep.violations.len(),
                "examples": shown,
                "reading": reading,
            }));
        }
        return Ok(Report::new(records, exit_if(failed)));
    }
    let q = q.ok_or_else(|| Error::InvalidArgument("--q is required".into()))?;
    let (xs, ys) = (residue_set(q, x, "--X")?, residue_set(q, y, "--Y")?);
    let v = vosper_classify(&xs, &ys)?;
    let record = json!({
        "q": q,
        "X": xs.to_string(),
        "Y": ys.to_string(),
        "sumset": crate::lemmalab::sumset(&xs, &ys)?.to_string(),
        "equality": v.equality,
        "cond_a": v.cond_a,
        "cond_b": v.cond_b,
        "cond_c": v.cond_c,
        "cond_d": v.cond_d,
        "missing": v.missing,
        "difference": v.difference,
        "consistent": v.consistent(),
        "reading": reading,
    });
    Ok(Report::new(vec![record], exit_if(!v.consistent())))
}

fn sinvariance(q: Option<u64>, q_max: Option<u64>, s: Option<u64>, k: Option<u64>) -> Result<Report> {
    if let (Some(q), Some(s), Some(k)) = (q, s, k) {
        let found = interval_invariance_counterexample(q, s, k)?;
        let record = json!({
            "q": q,
            "s": s,
            "k": k,
            "witness": found.map(IntervalEscape::element),
            "interval": found.map(|w| match w {
                IntervalEscape::Lower(_) => "lower",
                IntervalEscape::Upper(_) => "upper",
            }),
            "image": found.map(|w| w.element() * (s % q) % q),
        });
        return Ok(Report::new(vec![record], exit_if(found.is_none())));
    }
    if s.is_some() || k.is_some() {
        return Err(Error::InvalidArgument("--s and --k go together".into()));
    }
    let (primes, label) = match q {
        Some(q) => (vec![q], json!({"q": q})),
        None => {
            let max = q_max.unwrap_or(QUARTIC_SWEEP_MAX);
            (primes_from_five(max), json!({"q_max": max}))
        }
    };
    let summary = interval_sweep(&primes)?;
    Ok(Report::new(vec![sweep_record(&summary, label)], exit_if(!summary.passed())))
}

fn quartic(q: Option<u64>, a: Option<u64>, b: Option<u64>, c: Option<u64>, exhaustive: bool) -> Result<Report> {
    if exhaustive {
        let max = q.unwrap_or(QUARTIC_SWEEP_MAX);
        let counts = quartic_sweep(max);
        let primes: Vec<u64> = BIQUARTIC_PRIMES.iter().copied().filter(|&p| p <= max).collect();
        let classes = biquartic_sweep(&primes)?;
        let records = vec![
            sweep_record(&counts, json!({"check": "solution-count", "q_max": max})),
            sweep_record(&classes, json!({"check": "residue-classes", "primes": primes})),
        ];
        return Ok(Report::new(records, exit_if(!counts.passed() || !classes.passed())));
    }
    let (Some(q), Some(a), Some(b), Some(c)) = (q, a, b, c) else {
        return Err(Error::InvalidArgument("--q, --a, --b and --c are all required without --exhaustive".into()));
    };
    let n = count_quartic_solutions(a, b, c, q)?;
    let classes = if q >= 13 { Some(biquartic_residue_classes(b, c, q)?) } else { None };
    let record = json!({
        "q": q,
        "a": a,
        "b": b,
        "c": c,
        "count": n.count,
        "bound": n.bound(),
        "within_bound": n.within_bound(),
        "residue_classes": classes.map(|(qr, nonqr)| json!({"qr": qr, "nonqr": nonqr})),
    });
    let failed = !n.within_bound() || classes.is_some_and(|c| c != (true, true));
    Ok(Report::new(vec![record], exit_if(failed)))
}

fn perm_sums(q: Option<u64>, s: Option<u64>, coeffs: &[u64], trials: Option<u64>, seed: u64) -> Result<Report> {
    if let Some(trials) = trials {
        let cases = match (q, s) {
            (Some(q), Some(s)) => vec![(q, s)],
            (None, None) => vec![(13, 4), (13, 2)],
            _ => return Err(Error::InvalidArgument("--q and --s go together".into())),
        };
        let mut rng = StdRng::seed_from_u64(seed);
        let mut records = Vec::new();
        let mut failed = false;
        for (q, s) in cases {
            let split = mult_order(s, q)? == q - 1;
            let summary = perm_sum_trials(q, s, split, trials, &mut rng)?;
            failed |= !summary.passed();
            let mode = if split { "split" } else { "single" };
            records.push(sweep_record(&summary, json!({"q": q, "s": s, "mode": mode, "seed": seed})));
        }
        return Ok(Report::new(records, exit_if(failed)));
    }
    let (Some(q), Some(s)) = (q, s) else {
        return Err(Error::InvalidArgument("--q and --s are required".into()));
    };
    if coeffs.len() as u64 == q - 1 {
        let (even, odd) = split_perm_sum_sets(coeffs, s, q)?;
        let failed = (even.len() as u64) < q - 1 || (odd.len() as u64) < q - 1;
        let record = json!({
            "q": q,
            "s": s,
            "size_even": even.len(),
            "size_odd": odd.len(),
            "even": even.to_string(),
            "odd": odd.to_string(),
        });
        return Ok(Report::new(vec![record], exit_if(failed)));
    }
    let set = perm_sum_set(coeffs, s, q)?;
    let record = json!({"q": q, "s": s, "size": set.len(), "set": set.to_string()});
    Ok(Report::new(vec![record], exit_if((set.len() as u64) < q - 1)))
}

fn cyclic(n: usize, length: Option<usize>) -> Result<Report> {
    let lengths: Vec<usize> = match length {
        Some(l) => vec![l],
        None => ((n + 1).div_ceil(2)..n).collect(),
    };
    let mut records = Vec::new();
    let mut failed = false;
    for l in lengths {
        let holds = cyclic_structure_check(n, l)?;
        failed |= !holds;
        records.push(json!({"n": n, "length": l, "holds": holds}));
    }
    Ok(Report::new(records, exit_if(failed)))
}
