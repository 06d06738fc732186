//! Hilbert functions of apolar algebras and their symmetric decompositions.
//!
//! `H_f(i)` counts partials of degree exactly `i`. The decomposition uses the
//! bifiltration `F(i, k)` of `Diff(f)` by degree at most `i` and order at
//! least `k`:
//!
//! ```text
//! Δ_a(i) = dim F(i, d-i-a) - dim( F(i-1, d-i-a) + F(i, d-i-a+1) )
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::apolar::{diff_space, FilteredSpace};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::ring::{ChangeOfBasis, Polynomial};
use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(transparent)]
pub struct HilbertFunction(Vec<u64>);

impl HilbertFunction {
    pub fn new(values: Vec<u64>) -> Self {
        HilbertFunction(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    /// Value at `i`, zero past the end.
    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Sum of the values.
    pub fn length(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `H(0) = H(d) = 1` and every value is positive.
    pub fn is_valid(&self) -> bool {
        !self.0.is_empty() && self.0[0] == 1 && *self.0.last().expect("nonempty") == 1 && self.0.iter().all(|&v| v >= 1)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[u64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

fn parse_tuple(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: format!("expected a parenthesized tuple, got '{s}'"),
        })?;
    inner
        .split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim().parse::<u64>().map_err(|_| Error::Syntax {
                pos: i,
                msg: format!("bad entry '{}'", t.trim()),
            })
        })
        .collect()
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for HilbertFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_tuple(s).map(HilbertFunction)
    }
}

/// The rows `Δ_0, ..., Δ_{d-2}` (only `Δ_0` when `d < 2`), each stored
/// with `d + 1` entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub struct SymmetricDecomposition {
    d: usize,
    deltas: Vec<Vec<u64>>,
}

pub(crate) fn num_rows(d: usize) -> usize {
    if d < 2 {
        1
    } else {
        d - 1
    }
}

impl SymmetricDecomposition {
    /// Rows may be given trimmed; they are padded with zeros to length
    /// `d + 1`. Missing rows are zero.
    pub fn new(d: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        let k = num_rows(d);
        if rows.len() > k {
            return Err(Error::OutOfRange(format!(
                "{} rows given, socle degree {d} allows {k}",
                rows.len()
            )));
        }
        let mut deltas = Vec::with_capacity(k);
        for a in 0..k {
            let mut r = rows.get(a).cloned().unwrap_or_default();
            if r.len() > d + 1 {
                if r[d + 1..].iter().any(|&x| x != 0) {
                    return Err(Error::OutOfRange(format!("row {a} is longer than d + 1")));
                }
                r.truncate(d + 1);
            }
            r.resize(d + 1, 0);
            deltas.push(r);
        }
        Ok(SymmetricDecomposition { d, deltas })
    }

    pub fn socle_degree(&self) -> usize {
        self.d
    }

    pub fn num_rows(&self) -> usize {
        self.deltas.len()
    }

    pub fn row(&self, a: usize) -> &[u64] {
        &self.deltas[a]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.deltas
    }

    /// `Δ_a(i)`, zero outside the stored range.
    pub fn get(&self, a: usize, i: usize) -> u64 {
        self.deltas.get(a).and_then(|r| r.get(i)).copied().unwrap_or(0)
    }

    /// `Δ_{<= alpha}`.
    pub fn partial_sum(&self, alpha: usize) -> Vec<u64> {
        let mut out = vec![0; self.d + 1];
        for row in self.deltas.iter().take(alpha + 1) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += x;
            }
        }
        out
    }

    pub fn hilbert(&self) -> HilbertFunction {
        HilbertFunction(self.partial_sum(self.deltas.len()))
    }

    /// Checks the structural invariants: symmetry of every row about
    /// `(d - a)/2`, zeros outside `0..=d-a`, `Δ_0(0) = Δ_0(d) = 1` and
    /// `Δ_a(0) = 0` for `a >= 1`.
    pub fn is_valid(&self) -> bool {
        let d = self.d;
        if self.deltas[0][0] != 1 || self.deltas[0][d] != 1 {
            return false;
        }
        for (a, row) in self.deltas.iter().enumerate() {
            if a >= 1 && row[0] != 0 {
                return false;
            }
            let top = d.saturating_sub(a);
            if row[top + 1..].iter().any(|&x| x != 0) {
                return false;
            }
            if (0..=top).any(|i| row[i] != row[top - i]) {
                return false;
            }
        }
        true
    }

    /// Compact notation `H -> Δ_0,Δ_a,...` listing the nonzero rows, each
    /// trimmed to the indices `0..=d-a`.
    pub fn to_compact(&self) -> String {
        self.to_string()
    }

    /// Parses the compact notation. Each row is identified by its length.
    pub fn from_compact(s: &str) -> Result<Self> {
        let (h, rest) = s
            .split_once("->")
            .or_else(|| s.split_once('→'))
            .ok_or_else(|| Error::Syntax {
                pos: 0,
                msg: "expected 'H -> rows'".into(),
            })?;
        let hilbert: HilbertFunction = h.parse()?;
        let d = hilbert.socle_degree();
        let mut rows = vec![Vec::new(); num_rows(d)];
        for chunk in rest.split(')') {
            let chunk = chunk.trim().trim_start_matches(',').trim();
            if chunk.is_empty() {
                continue;
            }
            let row = parse_tuple(&format!("{chunk})"))?;
            let len = row.len();
            if len == 0 || len > d + 1 {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: format!("row of length {len} does not fit socle degree {d}"),
                });
            }
            let a = d + 1 - len;
            if a >= rows.len() || !rows[a].is_empty() {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: format!("row of length {len} is not a valid or new row"),
                });
            }
            rows[a] = row;
        }
        let dec = SymmetricDecomposition::new(d, rows)?;
        if dec.hilbert() != hilbert {
            return Err(Error::Precondition(format!(
                "rows sum to {}, not {hilbert}",
                dec.hilbert()
            )));
        }
        Ok(dec)
    }
}

impl fmt::Display for SymmetricDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> ", self.hilbert())?;
        let mut first = true;
        for (a, row) in self.deltas.iter().enumerate() {
            if row.iter().all(|&x| x == 0) {
                continue;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write_tuple(f, &row[..=self.d.saturating_sub(a)])?;
        }
        Ok(())
    }
}

/// `n_i = Δ_0(1) + ... + Δ_i(1)` for `i = 0..=d-2`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct EmbeddingDims(Vec<u64>);

impl EmbeddingDims {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    /// `n_i`; indices past `d - 2` give `n_{d-2}`.
    pub fn get(&self, i: usize) -> u64 {
        self.0[i.min(self.0.len() - 1)]
    }
}

pub fn embedding_dims(delta: &SymmetricDecomposition) -> EmbeddingDims {
    let mut acc = 0;
    EmbeddingDims(
        (0..delta.num_rows())
            .map(|a| {
                acc += delta.get(a, 1);
                acc
            })
            .collect(),
    )
}

pub fn hilbert_function<K: Field>(f: &Polynomial<K>) -> Result<HilbertFunction> {
    Ok(diff_space(f)?.hilbert_function())
}

pub fn symmetric_decomposition<K: Field>(f: &Polynomial<K>) -> Result<SymmetricDecomposition> {
    Ok(decomposition_of_space(&diff_space(f)?))
}

fn sum_dim<K: Field>(a: &[&Polynomial<K>], b: &[&Polynomial<K>]) -> usize {
    Echelon::from_rows(a.iter().chain(b).copied()).dim()
}

pub fn decomposition_of_space<K: Field>(space: &FilteredSpace<K>) -> SymmetricDecomposition {
    let d = space.socle_degree() as usize;
    let rows = (0..num_rows(d))
        .map(|a| {
            (0..=d)
                .map(|i| {
                    if i + a > d {
                        return 0;
                    }
                    let (ii, k) = (i as i64, (d - i - a) as i64);
                    let whole = space.bifiltered_dim(ii, k);
                    let lower = space.bifiltered(ii - 1, k);
                    let deeper = space.bifiltered(ii, k + 1);
                    (whole - sum_dim(&lower, &deeper)) as u64
                })
                .collect()
        })
        .collect();
    SymmetricDecomposition { d, deltas: rows }
}

/// Result of [`adapt_coordinates`].
#[derive(Clone, Debug)]
pub struct AdaptedPolynomial<K: Field> {
    /// The polynomial in the adapted variables, with unused ones removed.
    pub polynomial: Polynomial<K>,
    /// Change of basis on the original variables; the first
    /// `polynomial.nvars()` new coordinates are the adapted ones.
    pub change: ChangeOfBasis<K>,
    pub removed_variables: usize,
}

/// Changes coordinates so that the degree-one partials of order at least
/// `d - 1 - a` are spanned by `1, x_1, ..., x_{n_a}` for every `a`, and drops
/// the variables that no longer occur.
///
/// Fails if `f` involves a direction that is not a degree-one partial, since
/// such a variable cannot be removed by a linear change.
pub fn adapt_coordinates<K: Field>(f: &Polynomial<K>) -> Result<AdaptedPolynomial<K>> {
    let space = diff_space(f)?;
    let n = f.nvars();
    let d = space.socle_degree() as i64;
    let mut chosen = Echelon::new();
    let mut basis: Vec<Vec<K>> = Vec::new();
    for a in 0..=d.max(1) - 1 {
        let k = d - 1 - a;
        let layer = Echelon::from_rows(space.bifiltered(1, k)).to_reduced();
        for row in layer.rows().rev() {
            let lin = row.linear_coefficients();
            let lp = Polynomial::from_linear(&lin, f.side());
            if !lp.is_zero() && chosen.insert(&lp).is_some() {
                basis.push(lin);
            }
        }
    }
    let used = basis.len();
    for j in 0..n {
        let mut e = vec![K::zero(); n];
        e[j] = K::one();
        if chosen.insert(&Polynomial::from_linear(&e, f.side())).is_some() {
            basis.push(e);
        }
    }
    let change = ChangeOfBasis::from_new_coordinates(basis)?;
    let moved = change.apply(f);
    if (used..n).any(|v| moved.involves_variable(v)) {
        return Err(Error::Precondition(
            "the polynomial involves variables outside its degree-one partials".into(),
        ));
    }
    Ok(AdaptedPolynomial {
        polynomial: moved.truncate_variables(used),
        change,
        removed_variables: n - used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse, Side};
    use crate::scalar::Rational;

    fn p(s: &str, n: usize) -> Polynomial {
        parse(s, n, Side::Primal).unwrap()
    }

    fn rows(dec: &SymmetricDecomposition) -> Vec<Vec<u64>> {
        dec.rows().to_vec()
    }

    #[test]
    fn exto_table() {
        let f = p("x1^6 + x1^3*x2", 2);
        assert_eq!(hilbert_function(&f).unwrap().values(), &[1, 2, 1, 1, 1, 1, 1]);
        let dec = symmetric_decomposition(&f).unwrap();
        let z = vec![0; 7];
        assert_eq!(
            rows(&dec),
            vec![vec![1; 7], z.clone(), z.clone(), z, vec![0, 1, 0, 0, 0, 0, 0]]
        );
        assert_eq!(dec.to_compact(), "(1,2,1,1,1,1,1) -> (1,1,1,1,1,1,1),(0,1,0)");
        assert_eq!(embedding_dims(&dec).values(), &[1, 1, 1, 1, 2]);
    }

    #[test]
    fn second_table() {
        let f = p("x1^7 + x2^6 + x1^2*x2^2", 2);
        assert_eq!(hilbert_function(&f).unwrap().values(), &[1, 2, 3, 2, 2, 2, 1, 1]);
        let dec = symmetric_decomposition(&f).unwrap();
        assert_eq!(dec.row(0), &[1; 8]);
        assert_eq!(dec.row(1), &[0, 1, 1, 1, 1, 1, 0, 0]);
        assert_eq!(dec.row(2), &[0; 8]);
        assert_eq!(dec.row(3), &[0, 0, 1, 0, 0, 0, 0, 0]);
        for a in 4..dec.num_rows() {
            assert_eq!(dec.row(a), &[0; 8]);
        }
    }

    #[test]
    fn surface_example() {
        let f = p("x1^2*x2 + x2^2", 2);
        assert_eq!(hilbert_function(&f).unwrap().values(), &[1, 2, 2, 1]);
    }

    #[test]
    fn one_variable() {
        for d in 0..7usize {
            let f = p(&format!("x1^{d}"), 1);
            let dec = symmetric_decomposition(&f).unwrap();
            assert_eq!(dec.row(0), vec![1; d + 1].as_slice());
            assert_eq!(dec.hilbert(), hilbert_function(&f).unwrap());
            assert!(dec.rows()[1..].iter().all(|r| r.iter().all(|&x| x == 0)));
        }
    }

    #[test]
    fn low_degree() {
        let f = p("x1 + x2 + 3", 2);
        let dec = symmetric_decomposition(&f).unwrap();
        assert_eq!(dec.rows(), &[vec![1, 1]]);
        let g = p("x1^2 + x2^2", 2);
        let dec = symmetric_decomposition(&g).unwrap();
        assert_eq!(dec.rows(), &[vec![1, 2, 1]]);
    }

    #[test]
    fn compact_round_trip() {
        let s = "(1,4,5,4,1,1,1) -> (1,1,1,1,1,1,1),(0,3,4,3,0)";
        let dec = SymmetricDecomposition::from_compact(s).unwrap();
        assert_eq!(dec.row(2), &[0, 3, 4, 3, 0, 0, 0]);
        assert!(dec.is_valid());
        assert_eq!(dec.to_compact(), s);
        assert_eq!(embedding_dims(&dec).values(), &[1, 1, 4, 4, 4]);
        let arrow = SymmetricDecomposition::from_compact("(1,8,7,1)→(1,7,7,1),(0,1,0)").unwrap();
        assert_eq!(arrow.row(1), &[0, 1, 0, 0]);
        assert!(SymmetricDecomposition::from_compact("(1,4,5,4,1,1,1) -> (1,1,1,1,1,1,1)").is_err());
        assert!(SymmetricDecomposition::from_compact("(1,2,1) (1,2,1)").is_err());
    }

    #[test]
    fn invalid_decompositions_are_detected() {
        let asym = SymmetricDecomposition::new(3, vec![vec![1, 2, 1, 1]]).unwrap();
        assert!(!asym.is_valid());
        let bad_start = SymmetricDecomposition::new(3, vec![vec![1, 1, 1, 1], vec![1, 0, 1]]).unwrap();
        assert!(!bad_start.is_valid());
        assert!(SymmetricDecomposition::new(3, vec![vec![1]; 3]).is_err());
    }

    #[test]
    fn adapt_keeps_adapted_input() {
        let f = p("x1^6 + x1^3*x2", 2);
        let a = adapt_coordinates(&f).unwrap();
        assert_eq!(a.polynomial, f);
        assert!(a.change.is_identity());
        assert_eq!(a.removed_variables, 0);
    }

    #[test]
    fn adapt_swaps_variables() {
        let a = adapt_coordinates(&p("x2^6 + x2^3*x1", 2)).unwrap();
        assert_eq!(a.polynomial, p("x1^6 + x1^3*x2", 2));
        let zero = Rational::from_i64(0);
        let one = Rational::from_i64(1);
        assert_eq!(
            a.change.new_in_old,
            vec![vec![zero.clone(), one.clone()], vec![one, zero]]
        );
    }

    #[test]
    fn adapt_drops_unused_variables() {
        let a = adapt_coordinates(&p("x1^3 + x3^2", 4)).unwrap();
        assert_eq!(a.removed_variables, 2);
        assert_eq!(a.polynomial.nvars(), 2);
        assert_eq!(a.polynomial, p("x1^3 + x2^2", 2));
        assert!(matches!(
            adapt_coordinates(&p("x1^3 + x2", 2)),
            Err(Error::Precondition(_))
        ));
    }
}
