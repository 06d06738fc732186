//! Exact row reduction on sparse polynomial vectors.
//!
//! Rows are polynomials; the pivot of a row is its largest monomial in the
//! graded lexicographic order. Since that order compares degrees first, the
//! rows of an [`Echelon`] whose pivot has degree at most `i` span the
//! intersection of the space with polynomials of degree at most `i`.

use std::collections::BTreeMap;
use std::ops::Bound;

use crate::ring::{ExponentVector, Polynomial};
use crate::scalar::Field;

/// Semi-echelon basis: monic rows with pairwise distinct pivots.
#[derive(Clone, Debug)]
pub struct Echelon<K: Field> {
    rows: BTreeMap<ExponentVector, Polynomial<K>>,
}

impl<K: Field> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

/// Subtracts pivot rows from `v` until no monomial of `v` is a pivot.
/// `companion` receives the same operations applied to the row tags.
fn reduce_with<K: Field>(
    rows: &BTreeMap<ExponentVector, Polynomial<K>>,
    tags: Option<&BTreeMap<ExponentVector, Polynomial<K>>>,
    v: &mut Polynomial<K>,
    mut companion: Option<&mut Polynomial<K>>,
) {
    let mut bound: Bound<ExponentVector> = Bound::Unbounded;
    loop {
        let hit = v
            .terms
            .range((Bound::Unbounded, bound.clone()))
            .rev()
            .find(|(e, _)| rows.contains_key(e))
            .map(|(e, c)| (e.clone(), c.clone()));
        let Some((e, c)) = hit else { break };
        let row = &rows[&e];
        *v = &*v - &row.scale(&c);
        if let (Some(comp), Some(tags)) = (companion.as_deref_mut(), tags) {
            *comp = &*comp - &tags[&e].scale(&c);
        }
        bound = Bound::Excluded(e);
    }
}

impl<K: Field> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_rows<'a, I>(rows: I) -> Self
    where
        I: IntoIterator<Item = &'a Polynomial<K>>,
    {
        let mut e = Self::new();
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in ascending pivot order.
    pub fn rows(&self) -> impl DoubleEndedIterator<Item = &Polynomial<K>> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &ExponentVector> {
        self.rows.keys()
    }

    pub fn reduce(&self, v: &Polynomial<K>) -> Polynomial<K> {
        let mut out = v.clone();
        reduce_with(&self.rows, None, &mut out, None);
        out
    }

    pub fn contains(&self, v: &Polynomial<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns the new (monic, reduced) row, or `None`
    /// if `v` was already in the span.
    pub fn insert(&mut self, v: &Polynomial<K>) -> Option<Polynomial<K>> {
        let r = self.reduce(v);
        let (lead, c) = r.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let row = r.scale(&c.inv().expect("nonzero leading coefficient"));
        self.rows.insert(lead, row.clone());
        Some(row)
    }

    /// Number of rows whose pivot has degree at most `degree`, which is the
    /// dimension of the span intersected with polynomials of that degree.
    pub fn dim_up_to_degree(&self, degree: i64) -> usize {
        if degree < 0 {
            return 0;
        }
        self.rows.keys().take_while(|e| i64::from(e.degree()) <= degree).count()
    }

    /// Rows spanning the intersection with polynomials of degree at most
    /// `degree`.
    pub fn rows_up_to_degree(&self, degree: i64) -> impl Iterator<Item = &Polynomial<K>> {
        self.rows
            .iter()
            .take_while(move |(e, _)| degree >= 0 && i64::from(e.degree()) <= degree)
            .map(|(_, r)| r)
    }

    /// The reduced row echelon form: every pivot appears in exactly one row.
    pub fn to_reduced(&self) -> Echelon<K> {
        let mut out: BTreeMap<ExponentVector, Polynomial<K>> = BTreeMap::new();
        for (pivot, row) in &self.rows {
            let mut r = row.clone();
            reduce_below(&out, pivot, &mut r);
            out.insert(pivot.clone(), r);
        }
        Echelon { rows: out }
    }

    pub fn into_rows(self) -> Vec<Polynomial<K>> {
        self.rows.into_values().collect()
    }
}

/// Clears the monomials of `row` below `pivot` that are pivots of `rows`.
fn reduce_below<K: Field>(
    rows: &BTreeMap<ExponentVector, Polynomial<K>>,
    pivot: &ExponentVector,
    row: &mut Polynomial<K>,
) {
    let lead_coeff = row.coefficient(pivot);
    let mut tail = row.clone();
    tail.terms.remove(pivot);
    reduce_with(rows, None, &mut tail, None);
    tail.add_term(pivot.clone(), lead_coeff);
    *row = tail;
}

/// Echelon form that remembers, for every row, which combination of the
/// inserted vectors produced it. Used to read off kernels of linear maps.
#[derive(Clone, Debug, Default)]
pub struct TrackedEchelon<K: Field> {
    rows: BTreeMap<ExponentVector, Polynomial<K>>,
    tags: BTreeMap<ExponentVector, Polynomial<K>>,
}

impl<K: Field> TrackedEchelon<K> {
    pub fn new() -> Self {
        TrackedEchelon {
            rows: BTreeMap::new(),
            tags: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts the image `v` of the source vector `tag`. If `v` depends on
    /// the earlier images, returns the kernel element it exposes.
    pub fn insert(&mut self, v: &Polynomial<K>, tag: &Polynomial<K>) -> Option<Polynomial<K>> {
        let mut r = v.clone();
        let mut t = tag.clone();
        reduce_with(&self.rows, Some(&self.tags), &mut r, Some(&mut t));
        match r.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            None => Some(t),
            Some((lead, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.rows.insert(lead.clone(), r.scale(&inv));
                self.tags.insert(lead, t.scale(&inv));
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse, Side};
    use crate::scalar::Rational;

    fn p(s: &str) -> Polynomial<Rational> {
        parse(s, 2, Side::Primal).unwrap()
    }

    #[test]
    fn insert_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(&p("x1^2 + x2")).is_some());
        assert!(e.insert(&p("x2 + 1")).is_some());
        assert!(e.insert(&p("2*x1^2 - 2")).is_none());
        assert!(e.contains(&p("x1^2 - 1")));
        assert!(!e.contains(&p("x1")));
        assert_eq!(e.dim(), 2);
        assert_eq!(e.dim_up_to_degree(1), 1);
        assert_eq!(e.dim_up_to_degree(-1), 0);
    }

    #[test]
    fn reduced_form_is_canonical() {
        let a = Echelon::from_rows(&[p("x1^2 + x2"), p("x2 + 1"), p("x1")]);
        let b = Echelon::from_rows(&[p("x1"), p("x1^2 - 1 + 2*x1"), p("2*x2 + 2")]);
        let ra: Vec<_> = a.to_reduced().into_rows();
        let rb: Vec<_> = b.to_reduced().into_rows();
        assert_eq!(ra, rb);
        assert_eq!(ra[2], p("x1^2 - 1"));
    }

    #[test]
    fn tracked_kernel() {
        let mut t = TrackedEchelon::new();
        let tag = |s: &str| parse::<Rational>(s, 2, Side::Dual).unwrap();
        assert!(t.insert(&p("x1 + x2"), &tag("y1")).is_none());
        assert!(t.insert(&p("x2"), &tag("y2")).is_none());
        let k = t.insert(&p("x1 + 2*x2"), &tag("y1^2")).unwrap();
        assert_eq!(k, tag("y1^2 - y1 - y2"));
    }
}
