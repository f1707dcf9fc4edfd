use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::GroupParams;
use crate::numtheory::{binomial, gcd, totient};
use crate::seqengine::Sequence;

/// `(y^t)^{q-1}` followed by `x^i y^{nu_1}, ..., x^i y^{nu_{m-1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormII {
    pub t: u32,
    pub i: u32,
    /// Sorted `y`-exponents of the coset part.
    pub nu: Vec<u32>,
}

impl FormII {
    pub fn to_sequence(&self, params: &GroupParams) -> Sequence {
        let yt = params.index(params.element(0, self.t as i64));
        let coset = self.nu.iter().map(|&v| params.index(params.element(self.i as i64, v as i64)));
        Sequence::from_indices(std::iter::repeat_n(yt, params.q() as usize - 1).chain(coset))
    }
}

/// Reads `seq` as a Form II sequence, if it is one.
pub fn match_form_ii(seq: &Sequence, params: &GroupParams) -> Result<Option<FormII>> {
    let (q, m) = (params.q() as usize, params.m() as usize);
    if seq.len() != m + q - 2 {
        return Err(Error::InvalidArgument(format!(
            "sequence has length {}, expected m + q - 2 = {}",
            seq.len(),
            m + q - 2
        )));
    }
    let in_h = seq.in_h(params);
    let t = match in_h.entries() {
        [(g, c)] if *c == q - 1 => params.element_at(*g).y,
        _ => return Ok(None),
    };
    if t == 0 {
        return Ok(None);
    }
    let coset = seq.outside_h(params).elements(params);
    let i = coset[0].x;
    if coset.iter().any(|g| g.x != i) || gcd(i as u64, m as u64) != 1 {
        return Ok(None);
    }
    let mut nu: Vec<u32> = coset.iter().map(|g| g.y).collect();
    nu.sort_unstable();
    Ok(Some(FormII { t, i, nu }))
}

/// `(q-1) phi(m) C(q+m-2, m-1)`, the number of Form II multisets.
pub fn form_ii_count(q: u64, m: u64) -> u64 {
    (q - 1) * totient(m) * binomial(q + m - 2, m - 1)
}

/// Every Form II multiset, sorted.
pub fn form_ii_sequences(params: &GroupParams) -> Vec<Sequence> {
    let (q, m) = (params.q(), params.m());
    let mut nus = Vec::new();
    multisets(q, m as usize - 1, 0, &mut Vec::new(), &mut nus);
    let mut out = Vec::new();
    for t in 1..q {
        for i in (1..m).filter(|&i| gcd(i as u64, m as u64) == 1) {
            for nu in &nus {
                out.push(FormII { t, i, nu: nu.clone() }.to_sequence(params));
            }
        }
    }
    out.sort();
    out
}

fn multisets(q: u32, size: usize, from: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for v in from..q {
        cur.push(v);
        multisets(q, size, v, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqengine::is_product1_free;

    fn seq(p: &GroupParams, text: &str) -> Sequence {
        Sequence::parse(text, p).unwrap()
    }

    #[test]
    fn matching() {
        let d10 = GroupParams::new(5, 2, 4).unwrap();
        let f = match_form_ii(&seq(&d10, "y^2,y^2,y^2,y^2,x*y^3"), &d10).unwrap().unwrap();
        assert_eq!(f, FormII { t: 2, i: 1, nu: vec![3] });
        assert_eq!(f.to_sequence(&d10), seq(&d10, "y^2,y^2,y^2,y^2,x*y^3"));

        let d6 = GroupParams::new(3, 2, 2).unwrap();
        assert_eq!(match_form_ii(&seq(&d6, "x,x*y,x*y^2"), &d6).unwrap(), None);

        let g = GroupParams::new(5, 4, 2).unwrap();
        assert_eq!(match_form_ii(&seq(&g, "y,y,y,y,x^2*y,x^2*y^2,x^2*y^3"), &g).unwrap(), None);
        assert!(match_form_ii(&seq(&g, "y,y"), &g).is_err());
        assert_eq!(match_form_ii(&seq(&g, "1,1,1,1,x,x,x"), &g).unwrap(), None);
    }

    #[test]
    fn counts_and_freeness() {
        for (q, m, s) in [(3, 2, 2), (5, 2, 4), (5, 4, 2), (7, 3, 2), (7, 6, 3)] {
            let p = GroupParams::new(q, m, s).unwrap();
            let all = form_ii_sequences(&p);
            assert_eq!(all.len() as u64, form_ii_count(q, m));
            let g = p.to_cayley().unwrap();
            for s in all.iter().step_by(7) {
                assert!(match_form_ii(s, &p).unwrap().is_some());
                assert!(is_product1_free(&g, s).unwrap().free);
            }
        }
        assert_eq!(form_ii_count(7, 3), 336);
        assert_eq!(form_ii_count(7, 6), 5544);
        assert_eq!(form_ii_count(11, 2), 110);
    }
}
