//! Enumeration of Hilbert functions and symmetric decompositions allowed by
//! Macaulay growth.

use rayon::prelude::*;
use serde::Serialize;

use crate::hilbert::{HilbertFunction, SymmetricDecomposition};
use crate::macaulay::{is_o_sequence, is_o_sequence_with, macaulay_bound, Positivity};

/// Sorted by socle degree, then `H`, then the rows of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecompositionCandidate {
    pub d: usize,
    pub hilbert: HilbertFunction,
    pub decomposition: SymmetricDecomposition,
}

#[derive(Serialize)]
struct CandidateLine<'a> {
    #[serde(rename = "H")]
    h: &'a [u64],
    deltas: &'a [Vec<u64>],
    d: usize,
}

impl DecompositionCandidate {
    pub fn length(&self) -> u64 {
        self.hilbert.length()
    }

    /// `{"H": [...], "deltas": [[...]], "d": d}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&CandidateLine {
            h: self.hilbert.values(),
            deltas: self.decomposition.rows(),
            d: self.d,
        })
        .expect("serializable")
    }

    /// Re-checks every invariant from scratch.
    pub fn is_valid(&self, length: u64, n: u64) -> bool {
        let h = self.hilbert.values();
        let dec = &self.decomposition;
        self.d >= 3
            && h.len() == self.d + 1
            && dec.socle_degree() == self.d
            && self.hilbert.is_valid()
            && self.hilbert.length() == length
            && self.hilbert.get(1) <= n
            && is_o_sequence_with(h, Positivity::Strict)
            && dec.is_valid()
            && dec.hilbert() == self.hilbert
            && (0..dec.num_rows()).all(|a| is_o_sequence(&dec.partial_sum(a)))
    }
}

impl std::fmt::Display for DecompositionCandidate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.decomposition.fmt(f)
    }
}

/// May the algebra be nonsmoothable? Length at least 14, and not of the form
/// `(1, a, b, c, ...)` with `b <= 5` and `c <= 2`. At length 14 the only
/// nonsmoothable Hilbert function is `(1, 6, 6, 1)`.
pub fn nonsmoothable_filter(h: &HilbertFunction) -> bool {
    let len = h.length();
    if len < 14 {
        return false;
    }
    if len == 14 {
        return h.values() == [1, 6, 6, 1];
    }
    !(h.get(2) <= 5 && h.get(3) <= 2)
}

/// Filter as literally stated for all lengths, without the special rule
/// for length 14.
pub fn nonsmoothable_filter_literal(h: &HilbertFunction) -> bool {
    h.length() >= 14 && !(h.get(2) <= 5 && h.get(3) <= 2)
}

/// Hilbert functions of socle degree `d` and length `l` with `H(1) <= n`
/// that are strictly positive O-sequences.
pub fn hilbert_functions(l: u64, n: u64, d: usize) -> Vec<HilbertFunction> {
    fn rec(h: &mut Vec<u64>, left: u64, n: u64, d: usize, out: &mut Vec<HilbertFunction>) {
        let i = h.len();
        if i == d {
            if left == 1 && h[d - 1] >= 1 && (d < 2 || macaulay_bound(h[d - 1], (d - 1) as u64) >= 1) {
                h.push(1);
                out.push(HilbertFunction::new(h.clone()));
                h.pop();
            }
            return;
        }
        // positions i..d-1 need at least 1 each, plus H(d) = 1
        let slots_after = (d - i) as u64;
        if left < slots_after + 1 {
            return;
        }
        let max = left - slots_after;
        let cap = if i == 1 {
            n
        } else {
            macaulay_bound(h[i - 1], (i - 1) as u64)
        };
        for v in 1..=max.min(cap) {
            h.push(v);
            rec(h, left - v, n, d, out);
            h.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        if l == 1 {
            out.push(HilbertFunction::new(vec![1]));
        }
        return out;
    }
    if l < 2 {
        return out;
    }
    rec(&mut vec![1], l - 1, n, d, &mut out);
    out
}

/// Symmetric decompositions of `h` whose partial sums are O-sequences.
pub fn decompositions_of(h: &HilbertFunction) -> Vec<SymmetricDecomposition> {
    let d = h.socle_degree();
    let nrows = if d < 2 { 1 } else { d - 1 };
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u64>> = vec![vec![0; d + 1]; nrows];
    peel(nrows - 1, h.values().to_vec(), d, &mut rows, &mut out);
    out.sort();
    out
}

/// Chooses `Δ_a` with `rest = Δ_{<= a}` and recurses on `a - 1`.
fn peel(a: usize, rest: Vec<u64>, d: usize, rows: &mut Vec<Vec<u64>>, out: &mut Vec<SymmetricDecomposition>) {
    if a == 0 {
        let top = d;
        if rest[0] == 1 && rest[top] == 1 && (0..=top).all(|i| rest[i] == rest[top - i]) {
            rows[0] = rest;
            out.push(SymmetricDecomposition::new(d, rows.clone()).expect("well-formed rows"));
        }
        return;
    }
    let top = d - a;
    let free = top / 2;
    let mut row = vec![0u64; d + 1];
    choose(1, free, top, a, &rest, &mut row, d, rows, out);
}

#[allow(clippy::too_many_arguments)]
fn choose(
    i: usize,
    free: usize,
    top: usize,
    a: usize,
    rest: &[u64],
    row: &mut Vec<u64>,
    d: usize,
    rows: &mut Vec<Vec<u64>>,
    out: &mut Vec<SymmetricDecomposition>,
) {
    if i > free {
        let remainder: Vec<u64> = rest.iter().zip(row.iter()).map(|(r, x)| r - x).collect();
        if !is_o_sequence(&remainder) {
            return;
        }
        rows[a] = row.clone();
        peel(a - 1, remainder, d, rows, out);
        rows[a] = vec![0; d + 1];
        return;
    }
    let j = top - i;
    let cap = if i == j { rest[i] } else { rest[i].min(rest[j]) };
    for v in 0..=cap {
        row[i] = v;
        row[j] = v;
        choose(i + 1, free, top, a, rest, row, d, rows, out);
    }
    row[i] = 0;
    row[j] = 0;
}

/// All admissible pairs `(H, Δ)` of length `l` with `H(1) <= n` and socle
/// degree `3 <= d <= l - 1`, sorted.
pub fn admissible_decompositions(l: u64, n: u64, nonsmoothable_only: bool) -> Vec<DecompositionCandidate> {
    admissible_with(l, n, |h| !nonsmoothable_only || nonsmoothable_filter(h))
}

/// Same as [`admissible_decompositions`] with an arbitrary filter on `H`.
pub fn admissible_with<F>(l: u64, n: u64, keep: F) -> Vec<DecompositionCandidate>
where
    F: Fn(&HilbertFunction) -> bool + Sync,
{
    let hs: Vec<(usize, HilbertFunction)> = (3..l as usize)
        .flat_map(|d| hilbert_functions(l, n, d).into_iter().map(move |h| (d, h)))
        .filter(|(_, h)| keep(h))
        .collect();
    let mut out: Vec<DecompositionCandidate> = hs
        .into_par_iter()
        .flat_map_iter(|(d, h)| {
            decompositions_of(&h)
                .into_iter()
                .map(move |dec| DecompositionCandidate {
                    d,
                    hilbert: h.clone(),
                    decomposition: dec,
                })
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(v: &[u64]) -> HilbertFunction {
        HilbertFunction::new(v.to_vec())
    }

    #[test]
    fn example_length_17() {
        let all: Vec<String> = admissible_decompositions(17, 8, false)
            .into_iter()
            .filter(|c| c.hilbert.get(1) == 8 && c.hilbert.get(2) >= 5)
            .map(|c| c.to_string())
            .collect();
        assert_eq!(
            all,
            vec![
                "(1,8,7,1) -> (1,7,7,1),(0,1,0)",
                "(1,8,5,2,1) -> (1,2,2,2,1),(0,3,3,0),(0,3,0)",
                "(1,8,5,2,1) -> (1,2,3,2,1),(0,2,2,0),(0,4,0)",
                "(1,8,6,1,1) -> (1,1,1,1,1),(0,5,5,0),(0,2,0)",
                "(1,8,5,1,1,1) -> (1,1,1,1,1,1),(0,4,4,0),(0,3,0)",
            ]
        );
    }

    #[test]
    fn length_14_in_seven_variables() {
        let c = admissible_decompositions(14, 7, true);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].to_string(), "(1,6,6,1) -> (1,6,6,1)");
        assert!(admissible_decompositions(4, 3, true).is_empty());
    }

    #[test]
    fn filter_examples() {
        assert!(nonsmoothable_filter(&hf(&[1, 6, 6, 1])));
        assert!(!nonsmoothable_filter(&hf(&[1, 8, 5, 2, 1])));
        assert!(!nonsmoothable_filter(&hf(&[1, 3, 6, 3, 1])));
        assert!(nonsmoothable_filter_literal(&hf(&[1, 3, 6, 3, 1])));
        assert!(!nonsmoothable_filter(&hf(&[1, 5, 6, 1])));
        assert!(nonsmoothable_filter(&hf(&[1, 7, 7, 1])));
        assert!(nonsmoothable_filter(&hf(&[1, 4, 4, 3, 2, 1])));
    }

    #[test]
    fn emitted_candidates_are_valid() {
        for l in 4..=12 {
            for n in 1..=5 {
                for c in admissible_decompositions(l, n, false) {
                    assert!(c.is_valid(l, n), "{c}");
                }
            }
        }
    }

    #[test]
    fn json_line() {
        let c = &admissible_decompositions(14, 7, true)[0];
        assert_eq!(c.to_json(), r#"{"H":[1,6,6,1],"deltas":[[1,6,6,1],[0,0,0,0]],"d":3}"#);
    }
}
