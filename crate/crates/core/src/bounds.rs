//! Dimension estimates for families of cubic tails and the comparison that
//! decides the cactus rank of a general cubic form in `n + 1` variables.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumerate::{admissible_with, nonsmoothable_filter, nonsmoothable_filter_literal, DecompositionCandidate};
use crate::error::{Error, Result};
use crate::hilbert::{embedding_dims, HilbertFunction, SymmetricDecomposition};
use crate::macaulay::binomial;

fn binom(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 {
        return 0;
    }
    i64::try_from(binomial(n as u64, k as u64)).expect("binomial fits in i64")
}

/// `c(n) = min(ceil(C(n+3,3) / (n+1)), 2n + 2)`.
pub fn c_bound(n: u64) -> u64 {
    let total = binomial(n + 3, 3) as u64;
    total.div_ceil(n + 1).min(2 * n + 2)
}

/// `w(3, l, n) = C(n+3,3) - n - (n+1)(c(n) - l - 1)`, for `1 <= l <= c(n) - 1`.
pub fn w_bound(l: u64, n: u64) -> Result<i64> {
    let c = c_bound(n);
    if l < 1 || l + 1 > c {
        return Err(Error::OutOfRange(format!(
            "length {l} outside 1..={} for n = {n}",
            c - 1
        )));
    }
    Ok(threshold(n, c - 1, l))
}

/// `C(n+3,3) - n - (n+1)(l - r)`.
pub fn threshold(n: u64, l: u64, r: u64) -> i64 {
    let (n, l, r) = (n as i64, l as i64, r as i64);
    binom(n + 3, 3) - n - (n + 1) * (l - r)
}

fn check_ambient(delta: &SymmetricDecomposition, n: u64) -> Result<()> {
    let h1 = delta.hilbert().get(1);
    if n < h1 {
        return Err(Error::OutOfRange(format!("n = {n} is smaller than H(1) = {h1}")));
    }
    Ok(())
}

/// `Σ_{i=1}^{d-2} (n - n_i) Σ_{j<i} Δ_j(d-i-1) + (n - n_{d-2})`.
pub fn d_infty(delta: &SymmetricDecomposition, n: u64) -> Result<i64> {
    check_ambient(delta, n)?;
    Ok(d_infty_unchecked(delta, n as i64))
}

fn d_infty_unchecked(delta: &SymmetricDecomposition, n: i64) -> i64 {
    let d = delta.socle_degree();
    let dims = embedding_dims(delta);
    let nd = |i: usize| dims.get(i) as i64;
    let mut total = 0;
    for i in 1..d.saturating_sub(1) {
        let inner: i64 = (0..i).map(|j| delta.get(j, d - i - 1) as i64).sum();
        total += (n - nd(i)) * inner;
    }
    total + n - nd(d.saturating_sub(2))
}

/// `d_Δ = Σ_j Δ_j(1) (n - n_j)`.
pub fn d_flag(delta: &SymmetricDecomposition, n: u64) -> Result<i64> {
    check_ambient(delta, n)?;
    Ok(d_flag_unchecked(delta, n as i64))
}

fn d_flag_unchecked(delta: &SymmetricDecomposition, n: i64) -> i64 {
    let dims = embedding_dims(delta);
    (0..delta.num_rows())
        .map(|j| delta.get(j, 1) as i64 * (n - dims.get(j) as i64))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimBoundReport {
    pub n: u64,
    pub l: u64,
    pub d: usize,
    #[serde(rename = "H")]
    pub hilbert: HilbertFunction,
    pub deltas: Vec<Vec<u64>>,
    pub n_dims: Vec<u64>,
    pub v_theta: i64,
    pub d_infty: i64,
    pub d_flag: i64,
    /// `v_theta + d_flag`.
    pub v: i64,
    /// `C(n_{d-3}+2,3) + C(n_{d-2}+1,2) + n + 1 + Σ_{i=1}^{d-1} (n - n_{d-i-1}) H(i)`.
    pub v_closed_form: i64,
    /// The sum before simplification, with `n + 1` and the inner double sum.
    pub v_unsimplified: i64,
    /// `v` recomputed with `C(n_{d-3}+3,3)` in place of `C(n_{d-3}+2,3)`.
    pub v_with_plus_three: i64,
    /// `w(3, l, n)` when `l` is in range.
    pub w: Option<i64>,
    /// `w - v`.
    pub margin: Option<i64>,
}

pub fn v_bound(delta: &SymmetricDecomposition, n: u64) -> Result<DimBoundReport> {
    let d = delta.socle_degree();
    if d < 3 {
        return Err(Error::OutOfRange(format!("socle degree {d} < 3")));
    }
    check_ambient(delta, n)?;
    let h = delta.hilbert();
    let dims = embedding_dims(delta);
    let ni = n as i64;
    let nd = |i: usize| dims.get(i) as i64;
    let head = binom(nd(d - 3) + 2, 3) + binom(nd(d - 2) + 1, 2);

    let d_inf = d_infty_unchecked(delta, ni);
    let d_fl = d_flag_unchecked(delta, ni);
    let v_theta = head + nd(d - 2) + 1 + d_inf;
    let v = v_theta + d_fl;

    let closed: i64 = head + ni + 1 + (1..d).map(|i| (ni - nd(d - i - 1)) * h.get(i) as i64).sum::<i64>();

    let inner: i64 = (1..d - 1)
        .map(|i| (ni - nd(i)) * (0..i).map(|j| delta.get(j, d - i - 1) as i64).sum::<i64>())
        .sum();
    let unsimplified = head + ni + 1 + inner + d_fl;

    let plus_three = v - binom(nd(d - 3) + 2, 3) + binom(nd(d - 3) + 3, 3);

    let l = h.length();
    let w = w_bound(l, n).ok();
    Ok(DimBoundReport {
        n,
        l,
        d,
        hilbert: h,
        deltas: delta.rows().to_vec(),
        n_dims: dims.values().to_vec(),
        v_theta,
        d_infty: d_inf,
        d_flag: d_fl,
        v,
        v_closed_form: closed,
        v_unsimplified: unsimplified,
        v_with_plus_three: plus_three,
        w,
        margin: w.map(|w| w - v),
    })
}

impl DimBoundReport {
    /// Both routes to `v` agree.
    pub fn is_consistent(&self) -> bool {
        self.v == self.v_closed_form && self.v == self.v_unsimplified
    }
}

/// Which Hilbert functions enter the verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CandidateFilter {
    /// Possibly nonsmoothable algebras, with the length-14 classification.
    Nonsmoothable,
    /// The `b > 5 or c > 2` rule alone.
    Literal,
    /// Every admissible decomposition.
    All,
}

impl CandidateFilter {
    pub fn keep(self, h: &HilbertFunction) -> bool {
        match self {
            CandidateFilter::Nonsmoothable => nonsmoothable_filter(h),
            CandidateFilter::Literal => nonsmoothable_filter_literal(h),
            CandidateFilter::All => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub l: u64,
    pub r: u64,
    pub decomposition: String,
    pub v: i64,
    pub threshold: i64,
    pub margin: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalEntry {
    pub r: u64,
    #[serde(rename = "H")]
    pub hilbert: Vec<u64>,
    pub v: i64,
    /// Whether `H = (1, r/2 - 1, r/2 - 1, 1)`.
    pub matches_conjecture: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub n: u64,
    pub cactus_rank: u64,
    /// `n` is 7 or 8.
    pub in_scope: bool,
    pub filter: CandidateFilter,
    pub w_table: Vec<(u64, i64)>,
    pub rows: Vec<TheoremRow>,
    pub candidates_per_length: BTreeMap<u64, usize>,
    pub worst_margin: Option<i64>,
    pub extremal: Vec<ExtremalEntry>,
    pub pass: bool,
}

impl TheoremReport {
    pub fn summary(&self) -> String {
        if self.pass {
            format!("PASS n={} cactus_rank={}", self.n, self.cactus_rank)
        } else {
            format!("FAIL n={}", self.n)
        }
    }
}

pub fn verify_theorem(n: u64) -> TheoremReport {
    verify_theorem_with(n, CandidateFilter::Nonsmoothable)
}

/// Checks `v < C(n+3,3) - n - (n+1)(l - r)` for every candidate of length
/// `r` and all `14 <= r <= l <= c(n) - 1`.
pub fn verify_theorem_with(n: u64, filter: CandidateFilter) -> TheoremReport {
    let c = c_bound(n);
    let lengths: Vec<u64> = (14..c).collect();
    let mut by_length: BTreeMap<u64, Vec<(DecompositionCandidate, i64)>> = BTreeMap::new();
    for &r in &lengths {
        let cands = admissible_with(r, n, |h| filter.keep(h));
        let with_v = cands
            .into_iter()
            .map(|cand| {
                let rep = v_bound(&cand.decomposition, n).expect("candidates have d >= 3 and H(1) <= n");
                assert!(rep.is_consistent(), "closed form disagrees for {cand}");
                (cand, rep.v)
            })
            .collect();
        by_length.insert(r, with_v);
    }

    let mut rows = Vec::new();
    for &l in &lengths {
        for r in 14..=l {
            let t = threshold(n, l, r);
            for (cand, v) in &by_length[&r] {
                rows.push(TheoremRow {
                    l,
                    r,
                    decomposition: cand.to_string(),
                    v: *v,
                    threshold: t,
                    margin: t - v,
                });
            }
        }
    }
    let worst_margin = rows.iter().map(|r| r.margin).min();
    let pass = rows.iter().all(|r| r.margin > 0);

    let extremal = by_length
        .iter()
        .filter_map(|(&r, cands)| {
            let (cand, v) = cands.iter().max_by_key(|(c, v)| (*v, std::cmp::Reverse(c.clone())))?;
            let half = r / 2;
            let conj = r % 2 == 0 && cand.hilbert.values() == [1, half - 1, half - 1, 1];
            Some(ExtremalEntry {
                r,
                hilbert: cand.hilbert.values().to_vec(),
                v: *v,
                matches_conjecture: conj,
            })
        })
        .collect();

    TheoremReport {
        n,
        cactus_rank: c,
        in_scope: n == 7 || n == 8,
        filter,
        w_table: lengths.iter().map(|&l| (l, w_bound(l, n).expect("in range"))).collect(),
        candidates_per_length: by_length.iter().map(|(&r, v)| (r, v.len())).collect(),
        rows,
        worst_margin,
        extremal,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(s: &str) -> SymmetricDecomposition {
        SymmetricDecomposition::from_compact(s).unwrap()
    }

    #[test]
    fn cactus_bounds() {
        assert_eq!(c_bound(7), 15);
        assert_eq!(c_bound(8), 18);
        assert_eq!(c_bound(4), 7);
    }

    #[test]
    fn w_values() {
        let table: Vec<i64> = (14..=17).map(|l| w_bound(l, 8).unwrap()).collect();
        assert_eq!(table, vec![130, 139, 148, 157]);
        assert_eq!(w_bound(14, 7).unwrap(), 113);
        assert_eq!(w_bound(17, 8).unwrap(), binom(11, 3) - 8);
        assert!(w_bound(18, 8).is_err());
        assert!(w_bound(0, 8).is_err());
    }

    #[test]
    fn worked_example() {
        let r = v_bound(&dec("(1,4,5,4,1,1,1) -> (1,1,1,1,1,1,1),(0,3,4,3,0)"), 8).unwrap();
        assert_eq!(r.n_dims, vec![1, 1, 4, 4, 4]);
        assert_eq!(r.d_infty, 51);
        assert_eq!(r.v_theta, 86);
        assert_eq!(r.d_flag, 19);
        assert_eq!(r.v, 105);
        assert!(r.is_consistent());
        assert_eq!(r.w, Some(157));
        assert_eq!(r.v_with_plus_three, 120);
    }

    #[test]
    fn cubic_example() {
        let d = dec("(1,6,6,1) -> (1,6,6,1)");
        let r7 = v_bound(&d, 7).unwrap();
        assert_eq!((r7.d_infty, r7.d_flag, r7.v), (7, 6, 97));
        assert_eq!(r7.margin, Some(16));
        let r8 = v_bound(&d, 8).unwrap();
        assert_eq!(r8.v, 110);
        assert!(r8.is_consistent());
        assert_eq!(d_infty(&d, 6).unwrap(), 0);
        assert_eq!(d_flag(&d, 6).unwrap(), 0);
    }

    #[test]
    fn errors() {
        let d = dec("(1,6,6,1) -> (1,6,6,1)");
        assert!(v_bound(&d, 5).is_err());
        assert!(d_flag(&d, 5).is_err());
        let short = dec("(1,3,1) -> (1,3,1)");
        assert!(v_bound(&short, 5).is_err());
    }

    #[test]
    fn theorem_for_seven_variables() {
        let rep = verify_theorem(7);
        assert!(rep.pass);
        assert_eq!(rep.rows.len(), 1);
        assert_eq!(rep.rows[0].v, 97);
        assert_eq!(rep.rows[0].threshold, 113);
        assert_eq!(rep.summary(), "PASS n=7 cactus_rank=15");
    }
}
