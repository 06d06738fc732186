//! Spaces of partials, annihilators and local apolar schemes.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::HilbertFunction;
use crate::linalg::{Echelon, TrackedEchelon};
use crate::ring::{
    contract_unchecked, contract_variable, dehomogenize, homogenize, ChangeOfBasis, ExponentVector, Polynomial, Side,
};
use crate::scalar::{Field, Rational};

/// `Diff(f)` together with its degree and order filtrations.
///
/// The order filtration is `O_j = m^j f`, the partials obtained from `f` by
/// operators of order at least `j`. It is built inductively from
/// `O_{j+1} = span { y_i(h) : h in O_j }`.
#[derive(Clone, Debug)]
pub struct FilteredSpace<K: Field = Rational> {
    f: Polynomial<K>,
    rows: Vec<Polynomial<K>>,
    degree_of: Vec<u32>,
    order_of: Vec<u32>,
    orders: Vec<Echelon<K>>,
}

fn check_primal<K: Field>(f: &Polynomial<K>) -> Result<()> {
    if f.side() != Side::Primal {
        return Err(Error::SideMismatch {
            expected: Side::Primal,
            found: f.side(),
        });
    }
    Ok(())
}

/// Closure of `start` under contraction by the variables.
fn contraction_closure<K: Field>(start: &[Polynomial<K>], nvars: usize) -> Echelon<K> {
    let mut ech = Echelon::new();
    let mut queue: VecDeque<Polynomial<K>> = start.iter().filter_map(|v| ech.insert(v)).collect();
    while let Some(v) = queue.pop_front() {
        for var in 0..nvars {
            let w = contract_variable(var, &v);
            if w.is_zero() {
                continue;
            }
            if let Some(row) = ech.insert(&w) {
                queue.push_back(row);
            }
        }
    }
    ech
}

pub fn diff_space<K: Field>(f: &Polynomial<K>) -> Result<FilteredSpace<K>> {
    check_primal(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.nvars();
    let diff = contraction_closure(std::slice::from_ref(f), n);

    let mut orders = vec![diff.clone()];
    loop {
        let last = orders.last().expect("nonempty");
        let mut next = Echelon::new();
        for row in last.rows() {
            for var in 0..n {
                next.insert(&contract_variable(var, row));
            }
        }
        if next.is_empty() {
            break;
        }
        orders.push(next);
    }

    let reduced = diff.to_reduced();
    let rows: Vec<Polynomial<K>> = reduced.into_rows();
    let degree_of = rows.iter().map(|r| r.degree().expect("nonzero row")).collect();
    let order_of = rows
        .iter()
        .map(|r| {
            (0..orders.len())
                .rev()
                .find(|&j| orders[j].contains(r))
                .expect("every partial lies in O_0") as u32
        })
        .collect();
    Ok(FilteredSpace {
        f: f.clone(),
        rows,
        degree_of,
        order_of,
        orders,
    })
}

impl<K: Field> FilteredSpace<K> {
    pub fn polynomial(&self) -> &Polynomial<K> {
        &self.f
    }

    pub fn socle_degree(&self) -> u32 {
        self.f.degree().expect("nonzero")
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduced row echelon basis, ascending by pivot monomial.
    pub fn rows(&self) -> &[Polynomial<K>] {
        &self.rows
    }

    pub fn degree_of(&self) -> &[u32] {
        &self.degree_of
    }

    pub fn order_of(&self) -> &[u32] {
        &self.order_of
    }

    /// Monomials occurring in the basis rows, ascending.
    pub fn ambient_monomials(&self) -> Vec<ExponentVector> {
        let set: BTreeSet<&ExponentVector> = self.rows.iter().flat_map(|r| r.monomials()).collect();
        set.into_iter().cloned().collect()
    }

    pub fn contains(&self, v: &Polynomial<K>) -> bool {
        self.orders[0].contains(v)
    }

    /// `dim Diff(f)_{<= i}`.
    pub fn dim_degree_at_most(&self, i: i64) -> usize {
        self.orders[0].dim_up_to_degree(i)
    }

    /// `O_j`, the partials of order at least `j`; `j <= 0` gives all of
    /// `Diff(f)`. `None` when `O_j` is zero.
    pub fn order_space(&self, j: i64) -> Option<&Echelon<K>> {
        self.orders.get(j.max(0) as usize)
    }

    /// Basis of the partials of degree at most `i` and order at least `k`.
    pub fn bifiltered(&self, i: i64, k: i64) -> Vec<&Polynomial<K>> {
        match self.order_space(k) {
            Some(e) => e.rows_up_to_degree(i).collect(),
            None => Vec::new(),
        }
    }

    pub fn bifiltered_dim(&self, i: i64, k: i64) -> usize {
        self.order_space(k).map_or(0, |e| e.dim_up_to_degree(i))
    }

    pub fn hilbert_function(&self) -> HilbertFunction {
        let d = self.socle_degree() as i64;
        HilbertFunction::new(
            (0..=d)
                .map(|i| (self.dim_degree_at_most(i) - self.dim_degree_at_most(i - 1)) as u64)
                .collect(),
        )
    }
}

/// Length of the affine apolar scheme of `f`; 0 for the zero polynomial.
pub fn apolar_length<K: Field>(f: &Polynomial<K>) -> Result<usize> {
    check_primal(f)?;
    if f.is_zero() {
        return Ok(0);
    }
    Ok(contraction_closure(std::slice::from_ref(f), f.nvars()).dim())
}

/// Elements of `f^⊥` of degree at most `max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilator<K: Field = Rational> {
    pub max_degree: u32,
    /// Reduced echelon basis of the degree-bounded part of the annihilator,
    /// ascending by leading monomial.
    pub generators: Vec<Polynomial<K>>,
    /// Whether operators of degree at most `max_degree` already reach every
    /// partial, so that the quotient has dimension `dim Diff(f)`.
    pub stabilized: bool,
}

impl<K: Field> Annihilator<K> {
    /// A minimal subset of the basis generating the same ideal up to
    /// `max_degree`, chosen degree by degree.
    pub fn minimal_generators(&self) -> Vec<Polynomial<K>> {
        let Some(first) = self.generators.first() else {
            return Vec::new();
        };
        let n = first.nvars();
        let kernel = Echelon::from_rows(&self.generators);
        let mut chosen: Vec<Polynomial<K>> = Vec::new();
        let mut span = Echelon::new();
        for t in 0..=self.max_degree {
            for g in &chosen {
                let e = g.degree().expect("nonzero generator");
                if e < t {
                    for m in ExponentVector::all_of_degree(n, t - e) {
                        span.insert(&(&Polynomial::monomial(m, Side::Dual, K::one()) * g));
                    }
                }
            }
            for row in kernel.rows_up_to_degree(t as i64) {
                if row.degree() == Some(t) && span.insert(row).is_some() {
                    chosen.push(row.clone());
                }
            }
        }
        chosen
    }
}

pub fn annihilator_generators<K: Field>(f: &Polynomial<K>, max_degree: u32) -> Result<Annihilator<K>> {
    check_primal(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if max_degree == 0 {
        return Err(Error::OutOfRange("max_degree must be at least 1".into()));
    }
    let n = f.nvars();
    let mut tracked = TrackedEchelon::new();
    let mut kernel = Echelon::new();
    for e in ExponentVector::all_up_to_degree(n, max_degree) {
        let op = Polynomial::monomial(e, Side::Dual, K::one());
        let image = contract_unchecked(&op, f);
        if let Some(k) = tracked.insert(&image, &op) {
            kernel.insert(&k);
        }
    }
    let stabilized = tracked.rank() == apolar_length(f)?;
    Ok(Annihilator {
        max_degree,
        generators: kernel.to_reduced().into_rows(),
        stabilized,
    })
}

/// True iff every generator and every product of a generator with a dual
/// monomial of degree at most `deg F - deg g` annihilates `F`.
pub fn is_apolar<K: Field>(gens: &[Polynomial<K>], form: &Polynomial<K>) -> Result<bool> {
    check_primal(form)?;
    let n = form.nvars();
    let top = form.degree().unwrap_or(0);
    for g in gens {
        if g.side() != Side::Dual {
            return Err(Error::SideMismatch {
                expected: Side::Dual,
                found: g.side(),
            });
        }
        if g.nvars() != n {
            return Err(Error::NvarsMismatch {
                left: g.nvars(),
                right: n,
            });
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    for g in gens {
        let Some(e) = g.degree() else { continue };
        if e > top {
            continue;
        }
        for m in ExponentVector::all_up_to_degree(n, top - e) {
            let prod = &Polynomial::monomial(m, Side::Dual, K::one()) * g;
            if !contract_unchecked(&prod, form).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The natural apolar scheme of a form at a point given by a linear form.
#[derive(Clone, Debug)]
pub struct ApolarScheme<K: Field = Rational> {
    /// The dehomogenization, in the coordinates of `change` with the first
    /// one dropped.
    pub defining_polynomial: Polynomial<K>,
    pub support_form: Polynomial<K>,
    pub change: ChangeOfBasis<K>,
    pub length: usize,
    pub hilbert: HilbertFunction,
    pub annihilator: Annihilator<K>,
    /// The homogenized annihilator, written back in the original dual
    /// variables, was checked to annihilate the form.
    pub apolarity_checked: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SchemeReport {
    pub length: usize,
    pub hilbert: Vec<u64>,
    pub annihilator: Vec<String>,
    pub apolarity_checked: bool,
}

impl<K: Field> ApolarScheme<K> {
    pub fn report(&self) -> SchemeReport {
        SchemeReport {
            length: self.length,
            hilbert: self.hilbert.values().to_vec(),
            annihilator: self
                .annihilator
                .minimal_generators()
                .iter()
                .map(|g| g.to_string())
                .collect(),
            apolarity_checked: self.apolarity_checked,
        }
    }

    /// Homogenized annihilator basis in the dual variables of the
    /// original form.
    pub fn homogeneous_generators(&self) -> Result<Vec<Polynomial<K>>> {
        homogenized_generators(&self.annihilator.generators, &self.change)
    }
}

fn homogenized_generators<K: Field>(gens: &[Polynomial<K>], change: &ChangeOfBasis<K>) -> Result<Vec<Polynomial<K>>> {
    gens.iter()
        .map(|g| {
            let h = homogenize(g, g.degree().unwrap_or(0))?;
            Ok(change.dual_to_old(&h))
        })
        .collect()
}

pub fn local_scheme<K: Field>(form: &Polynomial<K>, l: &Polynomial<K>) -> Result<ApolarScheme<K>> {
    if form.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (f, change) = dehomogenize(form, l)?;
    let space = diff_space(&f)?;
    let bound = form.degree().expect("nonzero") + 1;
    let annihilator = annihilator_generators(&f, bound)?;
    let homog = homogenized_generators(&annihilator.generators, &change)?;
    let apolarity_checked = is_apolar(&homog, form)?;
    Ok(ApolarScheme {
        length: space.dim(),
        hilbert: space.hilbert_function(),
        defining_polynomial: f,
        support_form: l.clone(),
        change,
        annihilator,
        apolarity_checked,
    })
}
