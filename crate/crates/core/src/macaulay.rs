//! Macaulay binomial expansions and O-sequences.

use serde::Serialize;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays exact because acc = C(n, i)
        let num = match acc.checked_mul(u128::from(n - i)) {
            Some(v) => v,
            None => return u128::MAX,
        };
        acc = num / u128::from(i + 1);
    }
    acc
}

/// The `i`-binomial expansion `v = C(m_i, i) + C(m_{i-1}, i-1) + ... + C(m_j, j)`
/// with `m_i > m_{i-1} > ... > m_j >= j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialExpansion {
    pub i: u64,
    /// Pairs `(m_k, k)` with `k` decreasing.
    pub terms: Vec<(u64, u64)>,
}

impl BinomialExpansion {
    pub fn value(&self) -> u128 {
        self.terms
            .iter()
            .fold(0u128, |acc, &(m, k)| acc.saturating_add(binomial(m, k)))
    }
}

/// Largest `m >= k` with `C(m, k) <= v`, assuming `v >= 1`.
fn largest_top(v: u128, k: u64) -> u64 {
    let (mut lo, mut hi) = (k, k + 1);
    while binomial(hi, k) <= v {
        lo = hi;
        hi = hi.saturating_mul(2);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, k) <= v {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy expansion; panics if `i == 0`.
pub fn binomial_expansion(value: u64, i: u64) -> BinomialExpansion {
    assert!(i >= 1, "binomial expansion needs i >= 1");
    let mut rest = u128::from(value);
    let mut terms = Vec::new();
    let mut k = i;
    while rest > 0 && k >= 1 {
        let m = largest_top(rest, k);
        rest -= binomial(m, k);
        terms.push((m, k));
        k -= 1;
    }
    BinomialExpansion { i, terms }
}

/// Largest value allowed in degree `i + 1` after `value` in degree `i`.
pub fn macaulay_bound(value: u64, i: u64) -> u64 {
    let b = binomial_expansion(value, i)
        .terms
        .iter()
        .fold(0u128, |acc, &(m, k)| acc.saturating_add(binomial(m + 1, k + 1)));
    u64::try_from(b).unwrap_or(u64::MAX)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Positivity {
    /// Every entry must be at least 1 (Hilbert functions up to the socle).
    Strict,
    /// Zeros are allowed; growth from zero is zero, so no nonzero value can
    /// follow an internal zero.
    Plain,
}

/// `H(0) = 1` and `H(i+1) <= macaulay_bound(H(i), i)` for `i >= 1`.
pub fn is_o_sequence(h: &[u64]) -> bool {
    is_o_sequence_with(h, Positivity::Plain)
}

pub fn is_o_sequence_with(h: &[u64], mode: Positivity) -> bool {
    if h.first() != Some(&1) {
        return false;
    }
    if mode == Positivity::Strict && h.contains(&0) {
        return false;
    }
    h.windows(2)
        .enumerate()
        .skip(1)
        .all(|(i, w)| w[1] <= macaulay_bound(w[0], i as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ExponentVector;
    use std::collections::BTreeSet;

    #[test]
    fn examples() {
        assert_eq!(binomial_expansion(5, 2).terms, vec![(3, 2), (2, 1)]);
        assert!(binomial_expansion(0, 3).terms.is_empty());
        assert_eq!(binomial_expansion(210, 4).terms, vec![(10, 4)]);
        assert_eq!(macaulay_bound(8, 1), 36);
        assert_eq!(macaulay_bound(5, 2), 7);
        assert_eq!(macaulay_bound(0, 4), 0);
        assert!(is_o_sequence(&[1, 8, 7, 1]));
        assert!(!is_o_sequence(&[1, 2, 4]));
        assert!(is_o_sequence(&[1]));
        assert!(!is_o_sequence(&[]));
        assert!(!is_o_sequence(&[2, 1]));
    }

    #[test]
    fn positivity_modes() {
        assert!(is_o_sequence(&[1, 3, 0, 0]));
        assert!(!is_o_sequence_with(&[1, 3, 0, 0], Positivity::Strict));
        assert!(!is_o_sequence(&[1, 3, 0, 1]));
        assert!(is_o_sequence_with(&[1, 3, 3, 1], Positivity::Strict));
    }

    #[test]
    fn large_values_do_not_overflow() {
        assert_eq!(binomial(200, 100), u128::MAX);
        let e = binomial_expansion(u64::MAX, 3);
        assert_eq!(e.value(), u128::from(u64::MAX));
    }

    #[test]
    fn reconstruction_and_monotonicity() {
        for i in 1..=10u64 {
            let mut prev = 0;
            for v in (0..=1_000_000u64).step_by(997).chain(0..200) {
                let e = binomial_expansion(v, i);
                assert_eq!(e.value(), u128::from(v));
                let ks: Vec<u64> = e.terms.iter().map(|t| t.1).collect();
                assert!(ks.windows(2).all(|w| w[0] == w[1] + 1));
                assert!(e.terms.windows(2).all(|w| w[0].0 > w[1].0));
                assert!(e.terms.iter().all(|&(m, k)| m >= k && k >= 1));
                if v >= 200 || v == 0 {
                    continue;
                }
                let b = macaulay_bound(v, i);
                assert!(b >= prev);
                prev = b;
            }
        }
    }

    fn all_expansions(v: u128, k: u64, below: u64, out: &mut Vec<Vec<(u64, u64)>>, cur: &mut Vec<(u64, u64)>) {
        if v == 0 {
            out.push(cur.clone());
            return;
        }
        if k == 0 {
            return;
        }
        for m in k..below {
            let c = binomial(m, k);
            if c > v {
                break;
            }
            cur.push((m, k));
            all_expansions(v - c, k - 1, m, out, cur);
            cur.pop();
        }
    }

    #[test]
    fn expansion_is_unique() {
        for i in 1..=5u64 {
            for v in 0..=50u64 {
                let mut out = Vec::new();
                all_expansions(u128::from(v), i, v + i + 1, &mut out, &mut Vec::new());
                assert_eq!(out.len(), 1, "v={v} i={i}");
                assert_eq!(out[0], binomial_expansion(v, i).terms);
            }
        }
    }

    /// Maximal growth from degree `i` to `i + 1`, attained when the
    /// standard monomials of degree `i` are the `v` lex-smallest ones.
    fn lex_growth(v: u64, i: u64) -> u64 {
        if v == 0 {
            return 0;
        }
        let mut r = 1;
        while binomial(r + i - 1, i) < u128::from(v) {
            r += 1;
        }
        let r = r as usize + 1;
        let deg_i = ExponentVector::all_of_degree(r, i as u32);
        // ascending lex order on exponent vectors puts the smallest first
        let mut sorted = deg_i.clone();
        sorted.sort_by(|a, b| a.as_slice().cmp(b.as_slice()));
        let standard: BTreeSet<_> = sorted.into_iter().take(v as usize).collect();
        ExponentVector::all_of_degree(r, i as u32 + 1)
            .into_iter()
            .filter(|m| {
                (0..r).all(|var| {
                    if m.get(var) == 0 {
                        return true;
                    }
                    let mut e = m.as_slice().to_vec();
                    e[var] -= 1;
                    standard.contains(&ExponentVector::new(e))
                })
            })
            .count() as u64
    }

    #[test]
    fn bound_matches_lex_segments() {
        for i in 1..=3u64 {
            for v in 0..=30u64 {
                assert_eq!(macaulay_bound(v, i), lex_growth(v, i), "v={v} i={i}");
            }
        }
    }

    #[test]
    fn o_sequences_match_lex_oracle() {
        for a in 1..=6u64 {
            for b in 0..=12u64 {
                for c in 0..=14u64 {
                    let h = [1, a, b, c];
                    let oracle = b <= lex_growth(a, 1) && c <= lex_growth(b, 2);
                    assert_eq!(is_o_sequence(&h), oracle, "{h:?}");
                }
            }
        }
    }
}
