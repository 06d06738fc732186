//! Sparse polynomials in the divided-power convention and the contraction
//! action of the dual polynomial ring.
//!
//! A [`Polynomial`] is either *primal* (an element of the divided power ring
//! in `x` variables) or *dual* (an element of the ordinary polynomial ring in
//! `y` variables, acting by contraction). A primal term `x^[b]` is written
//! `x^b` in text; the dual monomial `y^a` sends it to `x^[b-a]` when `b >= a`
//! componentwise and to zero otherwise, with no multinomial factor.

mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};

pub use text::{parse, parse_with, Indexing};

/// Exponents of a monomial, one entry per variable.
///
/// Ordered by total degree first and then lexicographically, so that the
/// largest monomial of a polynomial determines its degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        ExponentVector(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, var: usize) -> u32 {
        self.0[var]
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(ExponentVector(out))
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All exponent vectors of the given total degree in `nvars` variables,
    /// in descending monomial order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Self> {
        fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            if prefix.len() + 1 == nvars {
                prefix.push(left);
                out.push(ExponentVector(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(nvars, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                out.push(ExponentVector(Vec::new()));
            }
            return out;
        }
        rec(nvars, degree, &mut Vec::with_capacity(nvars), &mut out);
        out
    }

    /// All exponent vectors of total degree at most `degree`, ascending.
    pub fn all_up_to_degree(nvars: usize, degree: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for d in 0..=degree {
            let mut layer = Self::all_of_degree(nvars, d);
            layer.reverse();
            out.extend(layer);
        }
        out
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which ring a polynomial lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Divided power ring in `x` variables.
    Primal,
    /// Polynomial ring of operators in `y` variables.
    Dual,
}

impl Side {
    pub fn letter(self) -> char {
        match self {
            Side::Primal => 'x',
            Side::Dual => 'y',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Primal => "primal",
            Side::Dual => "dual",
        })
    }
}

/// Sparse polynomial with exact coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<K: Field = Rational> {
    nvars: usize,
    side: Side,
    pub(crate) terms: BTreeMap<ExponentVector, K>,
}

impl<K: Field> Polynomial<K> {
    pub fn zero(nvars: usize, side: Side) -> Self {
        Polynomial {
            nvars,
            side,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, side: Side, c: K) -> Self {
        Self::monomial(ExponentVector::zero(nvars), side, c)
    }

    pub fn one(nvars: usize, side: Side) -> Self {
        Self::constant(nvars, side, K::one())
    }

    pub fn monomial(exponents: ExponentVector, side: Side, c: K) -> Self {
        let mut p = Self::zero(exponents.nvars(), side);
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    pub fn variable(nvars: usize, side: Side, var: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, var), side, K::one())
    }

    /// Sums the given terms; repeated monomials are combined.
    ///
    /// Panics if an exponent vector has the wrong length.
    pub fn from_terms<I>(nvars: usize, side: Side, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, K)>,
    {
        let mut p = Self::zero(nvars, side);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: K) {
        assert_eq!(e.nvars(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &K)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> K {
        self.terms.get(e).cloned().unwrap_or_else(K::zero)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    /// Largest term under the graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &K)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(e, _)| e.degree())
    }

    /// Smallest degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(ExponentVector::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|e| e.degree() == 1)
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        self.filter_terms(|e| e.degree() == degree)
    }

    /// Sum of the homogeneous components of degree at most `d`.
    pub fn tail(&self, d: u32) -> Self {
        self.filter_terms(|e| e.degree() <= d)
    }

    /// Top-degree homogeneous component.
    pub fn leading_form(&self) -> Self {
        match self.degree() {
            Some(d) => self.homogeneous_component(d),
            None => self.clone(),
        }
    }

    fn filter_terms(&self, keep: impl Fn(&ExponentVector) -> bool) -> Self {
        Polynomial {
            nvars: self.nvars,
            side: self.side,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn involves_variable(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e.get(var) > 0)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.side);
        }
        Polynomial {
            nvars: self.nvars,
            side: self.side,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// The same coefficients reinterpreted on the other side.
    pub fn with_side(&self, side: Side) -> Self {
        Polynomial {
            nvars: self.nvars,
            side,
            terms: self.terms.clone(),
        }
    }

    /// Maps variable `i` to variable `offset + i` of a ring with `nvars`
    /// variables.
    pub fn embed(&self, nvars: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= nvars);
        Polynomial {
            nvars,
            side: self.side,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = vec![0; nvars];
                    v[offset..offset + self.nvars].copy_from_slice(e.as_slice());
                    (ExponentVector(v), c.clone())
                })
                .collect(),
        }
    }

    /// Keeps the first `k` variables and discards every term involving the
    /// others (the others are set to zero).
    pub fn truncate_variables(&self, k: usize) -> Self {
        Polynomial {
            nvars: k,
            side: self.side,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.as_slice()[k..].iter().all(|&x| x == 0))
                .map(|(e, c)| (ExponentVector(e.as_slice()[..k].to_vec()), c.clone()))
                .collect(),
        }
    }

    /// Removes variable `var` by sending it to 1 (for divided powers,
    /// `x^[k] -> 1`).
    pub fn set_variable_to_one(&self, var: usize) -> Self {
        Self::from_terms(
            self.nvars - 1,
            self.side,
            self.terms.iter().map(|(e, c)| {
                let mut v = e.as_slice().to_vec();
                v.remove(var);
                (ExponentVector(v), c.clone())
            }),
        )
    }

    /// Raises the exponent of `var` by one in every term. On the primal side
    /// this is the adjoint of contracting by `y_var`: `contract(y_var, p.shift(var)) == p`.
    pub fn shift_variable(&self, var: usize) -> Self {
        Polynomial {
            nvars: self.nvars,
            side: self.side,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = e.as_slice().to_vec();
                    v[var] += 1;
                    (ExponentVector(v), c.clone())
                })
                .collect(),
        }
    }

    /// Linear change of variables. `images[i]` holds the coefficients of the
    /// image of variable `i` in a ring with `target_nvars` variables.
    ///
    /// Primal polynomials are transformed as elements of the divided power
    /// algebra, dual ones as ordinary polynomials.
    pub fn substitute_linear(&self, images: &[Vec<K>], target_nvars: usize) -> Self {
        assert_eq!(images.len(), self.nvars);
        let mut out = Self::zero(target_nvars, self.side);
        // cache powers per (variable, exponent)
        let mut cache: Vec<Vec<Polynomial<K>>> = vec![Vec::new(); self.nvars];
        for (e, c) in &self.terms {
            let mut acc = Self::constant(target_nvars, self.side, c.clone());
            for (var, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let powers = &mut cache[var];
                while powers.len() <= k as usize {
                    let next = match self.side {
                        Side::Primal => linear_divided_power(&images[var], powers.len() as u32),
                        Side::Dual => {
                            if powers.is_empty() {
                                Self::one(target_nvars, Side::Dual)
                            } else {
                                let lin = Self::from_linear(&images[var], Side::Dual);
                                &powers[powers.len() - 1] * &lin
                            }
                        }
                    };
                    powers.push(next);
                }
                acc = &acc * &powers[k as usize];
            }
            out = &out + &acc;
        }
        out
    }

    /// The linear form `sum_i coeffs[i] * var_i`.
    pub fn from_linear(coeffs: &[K], side: Side) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            side,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (ExponentVector::unit(n, i), c.clone())),
        )
    }

    /// Coefficients of the degree-one part.
    pub fn linear_coefficients(&self) -> Vec<K> {
        (0..self.nvars)
            .map(|i| self.coefficient(&ExponentVector::unit(self.nvars, i)))
            .collect()
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "number of variables differs");
        assert_eq!(self.side, other.side, "primal and dual polynomials mixed");
    }
}

/// `L^[k]` for a linear form `L = sum c_j z_j`: `sum_{|g| = k} c^g z^[g]`.
fn linear_divided_power<K: Field>(coeffs: &[K], k: u32) -> Polynomial<K> {
    let n = coeffs.len();
    let support: Vec<usize> = (0..n).filter(|&j| !coeffs[j].is_zero()).collect();
    let mut out = Polynomial::zero(n, Side::Primal);
    if support.is_empty() {
        if k == 0 {
            return Polynomial::one(n, Side::Primal);
        }
        return out;
    }
    for g in ExponentVector::all_of_degree(support.len(), k) {
        let mut e = vec![0; n];
        let mut c = K::one();
        for (slot, &j) in support.iter().enumerate() {
            let p = g.get(slot);
            e[j] = p;
            for _ in 0..p {
                c = c * coeffs[j].clone();
            }
        }
        out.add_term(ExponentVector(e), c);
    }
    out
}

fn binomial(n: u32, k: u32) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}, {} vars]({})", self.side, self.nvars, self)
    }
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(Indexing::OneBased))
    }
}

impl<K: Field> Add for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, other: &Polynomial<K>) -> Polynomial<K> {
        self.check_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<K: Field> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, other: &Polynomial<K>) -> Polynomial<K> {
        self.check_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<K: Field> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        self.scale(&-K::one())
    }
}

impl<K: Field> Add for Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, other: Polynomial<K>) -> Polynomial<K> {
        &self + &other
    }
}

impl<K: Field> Sub for Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, other: Polynomial<K>) -> Polynomial<K> {
        &self - &other
    }
}

/// Ring product. Dual polynomials multiply as ordinary polynomials; primal
/// ones in the divided power algebra, where
/// `x^[a] * x^[b] = binom(a + b, a) x^[a + b]` in each variable.
impl<K: Field> Mul for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn mul(self, other: &Polynomial<K>) -> Polynomial<K> {
        self.check_compatible(other);
        let mut out = Polynomial::zero(self.nvars, self.side);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut c = ca.clone() * cb.clone();
                if self.side == Side::Primal {
                    for (x, y) in a.as_slice().iter().zip(b.as_slice()) {
                        if *x > 0 && *y > 0 {
                            c = c * K::from_bigint(&binomial(x + y, *x));
                        }
                    }
                }
                out.add_term(a.add(b), c);
            }
        }
        out
    }
}

/// Contraction `psi(f)` of a primal polynomial by a dual one.
pub fn contract<K: Field>(psi: &Polynomial<K>, f: &Polynomial<K>) -> Result<Polynomial<K>> {
    if psi.side != Side::Dual {
        return Err(Error::SideMismatch {
            expected: Side::Dual,
            found: psi.side,
        });
    }
    if f.side != Side::Primal {
        return Err(Error::SideMismatch {
            expected: Side::Primal,
            found: f.side,
        });
    }
    if psi.nvars != f.nvars {
        return Err(Error::NvarsMismatch {
            left: psi.nvars,
            right: f.nvars,
        });
    }
    Ok(contract_unchecked(psi, f))
}

pub(crate) fn contract_unchecked<K: Field>(psi: &Polynomial<K>, f: &Polynomial<K>) -> Polynomial<K> {
    let mut out = Polynomial::zero(f.nvars, Side::Primal);
    for (a, ca) in &psi.terms {
        for (b, cb) in &f.terms {
            if let Some(diff) = b.checked_sub(a) {
                out.add_term(diff, ca.clone() * cb.clone());
            }
        }
    }
    out
}

/// Contraction by the single variable `y_var`.
pub(crate) fn contract_variable<K: Field>(var: usize, f: &Polynomial<K>) -> Polynomial<K> {
    Polynomial {
        nvars: f.nvars,
        side: Side::Primal,
        terms: f
            .terms
            .iter()
            .filter(|(e, _)| e.get(var) > 0)
            .map(|(e, c)| {
                let mut v = e.as_slice().to_vec();
                v[var] -= 1;
                (ExponentVector(v), c.clone())
            })
            .collect(),
    }
}

pub fn tail<K: Field>(f: &Polynomial<K>, d: u32) -> Polynomial<K> {
    f.tail(d)
}

pub fn homogeneous_component<K: Field>(f: &Polynomial<K>, i: u32) -> Polynomial<K> {
    f.homogeneous_component(i)
}

/// Homogenizes with a new first variable: every monomial `m` becomes
/// `x0^[d - deg m] * m`. Works on either side.
pub fn homogenize<K: Field>(g: &Polynomial<K>, d: u32) -> Result<Polynomial<K>> {
    if let Some(deg) = g.degree() {
        if deg > d {
            return Err(Error::DegreeTooSmall { target: d, degree: deg });
        }
    }
    let n = g.nvars + 1;
    Ok(Polynomial {
        nvars: n,
        side: g.side,
        terms: g
            .terms
            .iter()
            .map(|(e, c)| {
                let mut v = Vec::with_capacity(n);
                v.push(d - e.degree());
                v.extend_from_slice(e.as_slice());
                (ExponentVector(v), c.clone())
            })
            .collect(),
    })
}

/// Invertible linear change of coordinates on the degree-one part.
///
/// `new_in_old[j]` expresses the new coordinate `z_j` in the old `x_i`;
/// `old_in_new[i]` expresses `x_i` in the `z_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChangeOfBasis<K: Field = Rational> {
    pub new_in_old: Vec<Vec<K>>,
    pub old_in_new: Vec<Vec<K>>,
}

impl<K: Field> ChangeOfBasis<K> {
    pub fn identity(n: usize) -> Self {
        let m: Vec<Vec<K>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { K::one() } else { K::zero() }).collect())
            .collect();
        ChangeOfBasis {
            new_in_old: m.clone(),
            old_in_new: m,
        }
    }

    /// Builds the change of basis from the new coordinates; fails if they
    /// are not linearly independent.
    pub fn from_new_coordinates(new_in_old: Vec<Vec<K>>) -> Result<Self> {
        let old_in_new =
            invert(&new_in_old).ok_or_else(|| Error::Precondition("coordinate forms are linearly dependent".into()))?;
        Ok(ChangeOfBasis { new_in_old, old_in_new })
    }

    pub fn dim(&self) -> usize {
        self.new_in_old.len()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    /// Rewrites a primal polynomial in the new coordinates.
    pub fn apply(&self, f: &Polynomial<K>) -> Polynomial<K> {
        assert_eq!(f.side, Side::Primal);
        f.substitute_linear(&self.old_in_new, self.dim())
    }

    /// Rewrites a dual polynomial written in the dual basis of the new
    /// coordinates back into the original `y` variables.
    pub fn dual_to_old(&self, psi: &Polynomial<K>) -> Polynomial<K> {
        assert_eq!(psi.side, Side::Dual);
        let n = self.dim();
        // w_k = sum_i old_in_new[i][k] y_i
        let images: Vec<Vec<K>> = (0..n)
            .map(|k| (0..n).map(|i| self.old_in_new[i][k].clone()).collect())
            .collect();
        psi.substitute_linear(&images, n)
    }
}

fn invert<K: Field>(m: &[Vec<K>]) -> Option<Vec<Vec<K>>> {
    let n = m.len();
    let mut a: Vec<Vec<K>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { K::one() } else { K::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].inv()?;
        for x in a[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x = x.clone() - factor.clone() * y.clone();
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Dehomogenizes a form with respect to the linear form `l`.
///
/// The coordinates are changed so that `l` becomes the first variable: with
/// `p` the smallest index where `l` has a nonzero coefficient, the new
/// coordinates are `l` followed by the unit vectors `x_j`, `j != p`, in
/// increasing order. The first new variable is then set to 1.
pub fn dehomogenize<K: Field>(form: &Polynomial<K>, l: &Polynomial<K>) -> Result<(Polynomial<K>, ChangeOfBasis<K>)> {
    if form.side != Side::Primal {
        return Err(Error::SideMismatch {
            expected: Side::Primal,
            found: form.side,
        });
    }
    if l.nvars != form.nvars {
        return Err(Error::NvarsMismatch {
            left: form.nvars,
            right: l.nvars,
        });
    }
    if !l.is_linear_form() {
        return Err(Error::NotLinear);
    }
    if !form.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = form.nvars;
    let coeffs = l.linear_coefficients();
    let pivot = coeffs.iter().position(|c| !c.is_zero()).ok_or(Error::NotLinear)?;
    let mut rows = vec![coeffs];
    for j in (0..n).filter(|&j| j != pivot) {
        let mut r = vec![K::zero(); n];
        r[j] = K::one();
        rows.push(r);
    }
    let change = ChangeOfBasis::from_new_coordinates(rows)?;
    let moved = change.apply(form);
    Ok((moved.set_variable_to_one(0), change))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        parse(s, n, Side::Primal).unwrap()
    }

    fn q(s: &str, n: usize) -> Polynomial {
        parse(s, n, Side::Dual).unwrap()
    }

    fn p0(s: &str, n: usize) -> Polynomial {
        parse_with(s, n, Side::Primal, Indexing::ZeroBased).unwrap()
    }

    #[test]
    fn contraction_examples() {
        let f = p("x1^2*x2 + x2^2", 2);
        assert_eq!(contract(&q("y2", 2), &f).unwrap(), p("x1^2 + x2", 2));
        assert_eq!(contract(&q("1", 2), &f).unwrap(), f);
        let g = p("x1^6 + x1^3*x2", 2);
        assert_eq!(contract(&q("-y2 + y1^3", 2), &g).unwrap(), p("x2", 2));
    }

    #[test]
    fn contraction_rejects_bad_arguments() {
        let f = p("x1", 2);
        assert!(matches!(contract(&f, &f), Err(Error::SideMismatch { .. })));
        assert!(matches!(contract(&q("y1", 3), &f), Err(Error::NvarsMismatch { .. })));
    }

    #[test]
    fn tails() {
        let f = p("x1^6 + x1^3*x2 + x1", 2);
        assert_eq!(f.tail(4), p("x1^3*x2 + x1", 2));
        assert_eq!(f.tail(6), f);
        assert_eq!(f.tail(60), f);
        let g = p0("x0^3 + x1^3 + x2^3", 3);
        assert!(g.tail(2).is_zero());
        assert_eq!(f.homogeneous_component(4), p("x1^3*x2", 2));
    }

    #[test]
    fn degree_and_order() {
        let z: Polynomial = Polynomial::zero(2, Side::Primal);
        assert_eq!(z.degree(), None);
        let f = p("x1^3 + x2 + 1", 2);
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.order(), Some(0));
        assert_eq!(q("y1^2 + y2^3", 2).order(), Some(2));
    }

    #[test]
    fn dehomogenize_at_coordinate() {
        let (f, ch) = dehomogenize(&p0("x0^3 + x0*x1^2", 2), &p0("x0", 2)).unwrap();
        assert_eq!(f, p("1 + x1^2", 1));
        assert!(ch.is_identity());
        let (g, _) = dehomogenize(&p0("x0^2*x1", 2), &p0("x0", 2)).unwrap();
        assert_eq!(g, p("x1", 1));
    }

    #[test]
    fn dehomogenize_errors() {
        let form = p0("x0^3 + x1^3", 2);
        assert_eq!(
            dehomogenize(&form, &Polynomial::zero(2, Side::Primal)).unwrap_err(),
            Error::NotLinear
        );
        assert_eq!(dehomogenize(&form, &p0("x0^2", 2)).unwrap_err(), Error::NotLinear);
        assert_eq!(
            dehomogenize(&p0("x0^3 + x1", 2), &p0("x0", 2)).unwrap_err(),
            Error::NotHomogeneous
        );
    }

    #[test]
    fn homogenize_examples() {
        let g = p("1 + x1^2", 1);
        assert_eq!(homogenize(&g, 3).unwrap(), p0("x0^3 + x0*x1^2", 2));
        let z: Polynomial = Polynomial::zero(2, Side::Primal);
        assert!(homogenize(&z, 5).unwrap().is_zero());
        let h = p("x1^3 + x1 + 2", 1);
        assert_eq!(homogenize(&h, 3).unwrap(), p0("x1^3 + x0^2*x1 + 2*x0^3", 2));
        assert_eq!(
            homogenize(&h, 2).unwrap_err(),
            Error::DegreeTooSmall { target: 2, degree: 3 }
        );
    }

    #[test]
    fn divided_power_product() {
        // x^[1] * x^[1] = 2 x^[2]
        let x = p("x1", 1);
        assert_eq!(&x * &x, p("2*x1^2", 1));
        let y = q("y1", 1);
        assert_eq!(&y * &y, q("y1^2", 1));
    }

    #[test]
    fn linear_substitution_in_divided_powers() {
        // (z0 - z1)^[3] = z0^[3] - z0^[2] z1 + z0 z1^[2] - z1^[3]
        let f = p0("x0^3", 2);
        let images = vec![
            vec![Rational::from_i64(1), Rational::from_i64(-1)],
            vec![Rational::from_i64(0), Rational::from_i64(1)],
        ];
        assert_eq!(
            f.substitute_linear(&images, 2),
            p0("x0^3 - x0^2*x1 + x0*x1^2 - x1^3", 2)
        );
    }

    #[test]
    fn change_of_basis_round_trip() {
        let rows = vec![
            vec![Rational::from_i64(1), Rational::from_i64(2)],
            vec![Rational::from_i64(0), Rational::from_i64(1)],
        ];
        let ch = ChangeOfBasis::from_new_coordinates(rows).unwrap();
        let back = ChangeOfBasis::from_new_coordinates(ch.old_in_new.clone()).unwrap();
        let f = p("x1^3 + x1*x2 + 5*x2^2", 2);
        assert_eq!(back.apply(&ch.apply(&f)), f);
        let singular = vec![
            vec![Rational::from_i64(1), Rational::from_i64(2)],
            vec![Rational::from_i64(2), Rational::from_i64(4)],
        ];
        assert!(ChangeOfBasis::from_new_coordinates(singular).is_err());
    }
}
