//! Constructions with hidden variables and the cubic surface witness.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::apolar::{annihilator_generators, apolar_length, diff_space, is_apolar};
use crate::error::{Error, Result};
use crate::hilbert::HilbertFunction;
use crate::ring::{
    contract_unchecked, dehomogenize, homogenize, parse_with, ExponentVector, Indexing, Polynomial, Side,
};
use crate::scalar::{Field, Rational};

/// `f~ = Σ_I x_{k+1}^[i_1] ... x_{k+m}^[i_m] (φ_1^{i_1} ... φ_m^{i_m})(f)`.
///
/// The new variables are appended after the `k` variables of `f`. Each
/// operator must have order at least 2 and live in the variables of `f`,
/// and the degree-one partials of `f` must span all of its variables.
pub fn exotic_extend<K: Field>(f: &Polynomial<K>, phis: &[Polynomial<K>]) -> Result<Polynomial<K>> {
    if f.side() != Side::Primal {
        return Err(Error::SideMismatch {
            expected: Side::Primal,
            found: f.side(),
        });
    }
    let k = f.nvars();
    for (index, phi) in phis.iter().enumerate() {
        if phi.side() != Side::Dual {
            return Err(Error::SideMismatch {
                expected: Side::Dual,
                found: phi.side(),
            });
        }
        if phi.nvars() > k && (k..phi.nvars()).any(|v| phi.involves_variable(v)) {
            return Err(Error::Precondition(format!("operator {index} involves a new variable")));
        }
        if phi.nvars() < k {
            return Err(Error::NvarsMismatch {
                left: phi.nvars(),
                right: k,
            });
        }
        if let Some(order) = phi.order() {
            if order < 2 {
                return Err(Error::OrderTooLow { index, order });
            }
        }
    }
    let space = diff_space(f)?;
    if space.dim_degree_at_most(1) != k + 1 {
        return Err(Error::Precondition(
            "degree-one partials do not span all variables".into(),
        ));
    }
    let phis: Vec<Polynomial<K>> = phis.iter().map(|p| p.truncate_variables(k)).collect();
    let m = phis.len();

    // φ^I(f) for every multi-index I with a nonzero value
    let mut values: BTreeMap<Vec<u32>, Polynomial<K>> = BTreeMap::new();
    let mut queue = VecDeque::from([vec![0u32; m]]);
    values.insert(vec![0; m], f.clone());
    while let Some(idx) = queue.pop_front() {
        let cur = values[&idx].clone();
        for (r, phi) in phis.iter().enumerate() {
            let mut next = idx.clone();
            next[r] += 1;
            if values.contains_key(&next) {
                continue;
            }
            let v = contract_unchecked(phi, &cur);
            if !v.is_zero() {
                values.insert(next.clone(), v);
                queue.push_back(next);
            }
        }
    }

    let mut out = Polynomial::zero(k + m, Side::Primal);
    for (idx, v) in values {
        for (e, c) in v.terms() {
            let mut full = e.as_slice().to_vec();
            full.extend_from_slice(&idx);
            out.add_term(ExponentVector::new(full), c.clone());
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    /// The input cubic in `x0, x1, x2`.
    pub f: String,
    /// `F = f + x1^2*x3 + x0*x3^2`, variables `x0..x3`.
    #[serde(rename = "F")]
    pub big_f: String,
    /// `G`, homogeneous of degree 4 with `y0(G) = F`.
    #[serde(rename = "G")]
    pub big_g: String,
    /// `g = x1^4 + F` at `x0 = 1`.
    pub g: String,
    pub length_f: usize,
    pub hilbert_f: HilbertFunction,
    /// `H_{F_l} = (1,3,3,1)`, the signature of a general cubic surface.
    pub general_signature: bool,
    pub length_g: usize,
    pub local_hilbert_g: HilbertFunction,
    #[serde(rename = "apolarOK")]
    pub apolar_ok: bool,
    pub conclusion: String,
}

impl WitnessReport {
    /// `length_g <= 7`, apolarity, and `length_f = 8` whenever the signature
    /// holds.
    pub fn ok(&self) -> bool {
        self.length_g <= 7 && self.apolar_ok && (!self.general_signature || self.length_f == 8)
    }
}

fn text(p: &Polynomial<Rational>) -> String {
    p.to_text(Indexing::ZeroBased)
}

/// Builds the normal form `F = f + x1^2 x3 + x0 x3^2` and the quartic `G`
/// whose local scheme at `x0` has length at most 7 and is apolar to `F`.
///
/// `f` must be a cubic form in `x0, x1, x2` (three variables, numbered from
/// 0) containing `x2^3`.
pub fn cusp_witness(f: &Polynomial<Rational>) -> Result<WitnessReport> {
    if f.side() != Side::Primal {
        return Err(Error::SideMismatch {
            expected: Side::Primal,
            found: f.side(),
        });
    }
    if f.nvars() != 3 {
        return Err(Error::NvarsMismatch {
            left: f.nvars(),
            right: 3,
        });
    }
    if !f.is_homogeneous() || f.degree() != Some(3) {
        return Err(Error::Precondition("f must be a nonzero cubic form".into()));
    }
    if f.coefficient(&ExponentVector::new(vec![0, 0, 3])).is_zero() {
        return Err(Error::Precondition("f must contain x2^3".into()));
    }
    let big_f = &f.embed(4, 0) + &parse_with("x1^2*x3 + x0*x3^2", 4, Side::Primal, Indexing::ZeroBased)?;
    let x0 = Polynomial::variable(4, Side::Primal, 0);
    let (f_local, _) = dehomogenize(&big_f, &x0)?;
    let quartic = Polynomial::monomial(ExponentVector::new(vec![4, 0, 0]), Side::Primal, Rational::one());
    let g = &f_local + &quartic;
    let big_g = homogenize(&g, 4)?;

    let space_f = diff_space(&f_local)?;
    let hilbert_f = space_f.hilbert_function();
    let space_g = diff_space(&g)?;
    let ann = annihilator_generators(&g, 4)?;
    let gens = ann
        .generators
        .iter()
        .map(|p| homogenize(p, p.degree().unwrap_or(0)))
        .collect::<Result<Vec<_>>>()?;
    let apolar_ok = is_apolar(&gens, &big_f)?;

    Ok(WitnessReport {
        f: text(f),
        big_f: text(&big_f),
        big_g: text(&big_g),
        g: g.to_string(),
        length_f: space_f.dim(),
        general_signature: hilbert_f.values() == [1, 3, 3, 1],
        hilbert_f,
        length_g: space_g.dim(),
        local_hilbert_g: space_g.hilbert_function(),
        apolar_ok,
        conclusion: "local cactus rank <= 7 verified; = 7 per the case analysis".into(),
    })
}

/// Runs [`cusp_witness`] on `trials` dense random cubics, seeded by
/// `seed + t`. Results come back in trial order.
pub fn cusp_trials(seed: u64, trials: usize) -> Vec<WitnessReport> {
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = crate::random::rng(seed.wrapping_add(t as u64));
            let f = crate::random::dense_form(&mut rng, 3, 3);
            cusp_witness(&f).expect("dense cubics satisfy the preconditions")
        })
        .collect()
}

/// Length of the local scheme of `F` at a random point, with its Hilbert
/// function.
pub fn general_point_length(big_f: &Polynomial<Rational>, seed: u64) -> Result<(usize, HilbertFunction)> {
    let mut rng = crate::random::rng(seed);
    let l = crate::random::linear_form(&mut rng, big_f.nvars());
    let (f, _) = dehomogenize(big_f, &l)?;
    let s = diff_space(&f)?;
    Ok((s.dim(), s.hilbert_function()))
}

/// `apolar_length` of `F` dehomogenized at `x0`.
pub fn length_at_x0(big_f: &Polynomial<Rational>) -> Result<usize> {
    let x0 = Polynomial::variable(big_f.nvars(), Side::Primal, 0);
    apolar_length(&dehomogenize(big_f, &x0)?.0)
}
