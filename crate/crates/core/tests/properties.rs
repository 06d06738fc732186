//! Property tests on seeded random inputs.

use cactus_core::random;
use cactus_core::{
    adapt_coordinates, admissible_decompositions, annihilator_generators, binomial_expansion, c_bound, contract,
    cusp_witness, dehomogenize, diff_space, embedding_dims, exotic_extend, hilbert_function, homogenize,
    macaulay_bound, parse, parse_with, symmetric_decomposition, v_bound, w_bound, ChangeOfBasis, Error, ExponentVector,
    Field, Indexing, Polynomial, Rational, Side,
};
use proptest::prelude::*;
use rand::Rng;

fn binom(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

fn primal(seed: u64, max_vars: usize, max_degree: u32) -> Polynomial {
    let mut rng = random::rng(seed);
    let n = rng.gen_range(1..=max_vars);
    let d = rng.gen_range(1..=max_degree);
    let terms = rng.gen_range(1..=6);
    random::polynomial(&mut rng, n, d, terms, Side::Primal)
}

fn dual_for(seed: u64, f: &Polynomial, max_degree: u32) -> Polynomial {
    let mut rng = random::rng(seed);
    let d = rng.gen_range(0..=max_degree);
    let terms = rng.gen_range(1..=4);
    random::polynomial(&mut rng, f.nvars(), d, terms, Side::Dual)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn contraction_is_a_module_action(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let f = primal(s1, 4, 6);
        let phi = dual_for(s2, &f, 3);
        let psi = dual_for(s3, &f, 3);
        let product = &phi * &psi;
        let lhs = contract(&product, &f).unwrap();
        let rhs = contract(&phi, &contract(&psi, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_is_bilinear(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>(), s4 in any::<u64>()) {
        let f = primal(s1, 3, 5);
        let mut rng = random::rng(s4);
        let e = rng.gen_range(1..=5);
        let g = random::polynomial(&mut rng, f.nvars(), e, 4, Side::Primal);
        let phi = dual_for(s2, &f, 3);
        let psi = dual_for(s3, &f, 3);
        let sum = &f + &g;
        prop_assert_eq!(
            contract(&phi, &sum).unwrap(),
            &contract(&phi, &f).unwrap() + &contract(&phi, &g).unwrap()
        );
        let ops = &phi + &psi;
        prop_assert_eq!(
            contract(&ops, &f).unwrap(),
            &contract(&phi, &f).unwrap() + &contract(&psi, &f).unwrap()
        );
    }

    #[test]
    fn contraction_lowers_degree(seed in any::<u64>(), k in 0u32..4) {
        let mut rng = random::rng(seed);
        let n = rng.gen_range(1..=4);
        let e = rng.gen_range(k..=k + 4);
        let form = random::form(&mut rng, n, e, 5);
        let op = random::operator(&mut rng, n, k, k, 3);
        let r = contract(&op, &form).unwrap();
        prop_assert!(r.is_zero() || (r.is_homogeneous() && r.degree() == Some(e - k)));
    }

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let f = primal(seed, 5, 6);
        let back: Polynomial = parse(&f.to_string(), f.nvars(), Side::Primal).unwrap();
        prop_assert_eq!(&back, &f);
        let zero_based = f.to_text(Indexing::ZeroBased);
        let back: Polynomial = parse_with(&zero_based, f.nvars(), Side::Primal, Indexing::ZeroBased).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn dehomogenize_inverts_homogenize(seed in any::<u64>(), extra in 0u32..3) {
        let g = primal(seed, 4, 6);
        let d = g.degree().unwrap() + extra;
        let big = homogenize(&g, d).unwrap();
        prop_assert!(big.is_homogeneous());
        let x0 = Polynomial::variable(big.nvars(), Side::Primal, 0);
        let (back, change) = dehomogenize(&big, &x0).unwrap();
        prop_assert!(change.is_identity());
        prop_assert_eq!(back, g);
    }

    #[test]
    fn tails_of_dehomogenized_partials_agree(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let n = rng.gen_range(2..=5);
        let e = rng.gen_range(1..=6);
        let big_f = random::form(&mut rng, n, e, 6);
        let k = rng.gen_range(0..=e);
        let op = random::operator(&mut rng, n, k, k, 3);
        let d = e - k;
        let lhs = contract(&op, &big_f).unwrap().set_variable_to_one(0).tail(d);
        let rhs = contract(&op.set_variable_to_one(0), &big_f.set_variable_to_one(0)).unwrap().tail(d);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hilbert_function_is_invariant_under_linear_change(s1 in any::<u64>(), s2 in any::<u64>()) {
        let f = primal(s1, 3, 6);
        let n = f.nvars();
        let mut rng = random::rng(s2);
        let m: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| random::coefficient(&mut rng)).collect())
            .collect();
        let change = ChangeOfBasis::from_new_coordinates(m);
        prop_assume!(change.is_ok());
        let g = change.unwrap().apply(&f);
        prop_assert_eq!(symmetric_decomposition(&g).unwrap(), symmetric_decomposition(&f).unwrap());
    }

    #[test]
    fn decomposition_rows_sum_to_hilbert(seed in any::<u64>()) {
        let f = primal(seed, 5, 6);
        let dec = symmetric_decomposition(&f).unwrap();
        let h = hilbert_function(&f).unwrap();
        prop_assert_eq!(dec.hilbert(), h);
        prop_assert!(dec.is_valid());
        prop_assert_eq!(diff_space(&f).unwrap().dim() as u64, dec.hilbert().length());
    }

    #[test]
    fn leading_summands_of_partials_use_few_variables(seed in any::<u64>()) {
        let f = primal(seed, 4, 6);
        let adapted = match adapt_coordinates(&f) {
            Ok(a) => a,
            Err(Error::Precondition(_)) => return Err(TestCaseError::reject("variable outside the linear partials")),
            Err(e) => panic!("{e}"),
        };
        let g = adapted.polynomial;
        let space = diff_space(&g).unwrap();
        let dims = embedding_dims(&symmetric_decomposition(&g).unwrap());
        let d = space.socle_degree() as usize;
        for j in 0..=d {
            let Some(layer) = space.order_space(j as i64) else { continue };
            for row in layer.rows() {
                let e = row.degree().unwrap() as usize;
                let bound = dims.get(d - e - j) as usize;
                let top = row.leading_form();
                prop_assert!(
                    (bound..g.nvars()).all(|v| !top.involves_variable(v)),
                    "{} of order {} in {}", row, j, g
                );
            }
        }
    }

    #[test]
    fn hilbert_function_bounded_by_top_summands(seed in any::<u64>()) {
        let f = primal(seed, 4, 6);
        let dec = symmetric_decomposition(&f).unwrap();
        let d = dec.socle_degree();
        let alpha = (0..dec.num_rows()).filter(|&a| dec.row(a).iter().any(|&x| x > 0)).max().unwrap_or(0);
        let top = if d > alpha { &f - &f.tail((d - alpha - 1) as u32) } else { f.clone() };
        let h = hilbert_function(&f).unwrap();
        let h_top = hilbert_function(&top).unwrap();
        for i in 0..=d {
            prop_assert!(h.get(i) <= h_top.get(i), "H({i}): {} > {}", h, h_top);
        }
    }

    #[test]
    fn expansion_reconstructs_value(v in 1u64..=1_000_000, i in 1u64..=10) {
        let exp = binomial_expansion(v, i);
        prop_assert_eq!(exp.value(), v as u128);
        prop_assert_eq!(exp.terms[0].1, i);
        for w in exp.terms.windows(2) {
            prop_assert!(w[0].0 > w[1].0 && w[0].1 == w[1].1 + 1);
        }
        let (m, j) = *exp.terms.last().unwrap();
        prop_assert!(m >= j && j >= 1);
    }

    #[test]
    fn macaulay_bound_is_monotone(v in 1u64..=100_000, i in 1u64..=10) {
        prop_assert!(macaulay_bound(v, i) <= macaulay_bound(v + 1, i));
    }

    #[test]
    fn bound_is_monotone_in_n(l in 6u64..=13, n in 2u64..=6, pick in any::<usize>()) {
        let cands = admissible_decompositions(l, n, false);
        prop_assume!(!cands.is_empty());
        let c = &cands[pick % cands.len()];
        let vs: Vec<i64> = (n..n + 4).map(|m| v_bound(&c.decomposition, m).unwrap().v).collect();
        prop_assert!(vs.windows(2).all(|w| w[0] <= w[1]), "{:?} for {}", vs, c);
        prop_assert!(v_bound(&c.decomposition, n).unwrap().is_consistent());
    }

    #[test]
    fn exotic_extension_restricts_to_f(s1 in any::<u64>(), s2 in any::<u64>()) {
        let f = primal(s1, 3, 6);
        let k = f.nvars();
        let mut rng = random::rng(s2);
        let m = rng.gen_range(1..=2);
        let max = f.degree().unwrap().max(2);
        let phis: Vec<Polynomial> = (0..m).map(|_| random::operator(&mut rng, k, 2, max, 2)).collect();
        let ext = match exotic_extend(&f, &phis) {
            Ok(t) => t,
            Err(Error::Precondition(_)) => return Err(TestCaseError::reject("linear partials do not span")),
            Err(e) => panic!("{e}"),
        };
        prop_assert_eq!(ext.truncate_variables(k), f.clone());
        prop_assert_eq!(hilbert_function(&ext).unwrap(), hilbert_function(&f).unwrap());
    }

    #[test]
    fn exotic_extension_keeps_leading_summands(s1 in any::<u64>(), s2 in any::<u64>()) {
        let f = primal(s1, 3, 6);
        let k = f.nvars();
        let mut rng = random::rng(s2);
        let m = rng.gen_range(1..=2);
        let phis: Vec<Polynomial> = (0..m).map(|_| random::operator(&mut rng, k, 2, 4, 2)).collect();
        let ext = match exotic_extend(&f, &phis) {
            Ok(t) => t,
            Err(Error::Precondition(_)) => return Err(TestCaseError::reject("linear partials do not span")),
            Err(e) => panic!("{e}"),
        };
        for beta in ExponentVector::all_up_to_degree(k, f.degree().unwrap()) {
            let psi = Polynomial::monomial(beta, Side::Dual, Rational::one());
            let small = contract(&psi, &f).unwrap();
            let big = contract(&psi.embed(k + m, 0), &ext).unwrap();
            prop_assert_eq!(big.leading_form(), small.leading_form().embed(k + m, 0));
        }
    }

    #[test]
    fn annihilator_of_g_kills_its_contraction(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let n = rng.gen_range(2..=4);
        let e = rng.gen_range(2..=5);
        let big_g = random::form(&mut rng, n, e, 5);
        let big_f = contract(&Polynomial::variable(n, Side::Dual, 0), &big_g).unwrap();
        prop_assume!(!big_f.is_zero());
        let ann = annihilator_generators(&big_g, e).unwrap();
        for g in &ann.generators {
            prop_assert!(contract(g, &big_f).unwrap().is_zero(), "{} does not kill {}", g, big_f);
        }
    }
}

#[test]
fn w_bound_at_the_top_length() {
    for n in 1..=30u64 {
        let top = c_bound(n) - 1;
        if top == 0 {
            continue;
        }
        assert_eq!(w_bound(top, n).unwrap(), binom(n + 3, 3) - n as i64, "n = {n}");
    }
}

#[test]
fn cusp_quartic_annihilator_kills_the_cubic() {
    for seed in 0..5u64 {
        let mut rng = random::rng(seed);
        let f = random::dense_form(&mut rng, 3, 3);
        let r = cusp_witness(&f).unwrap();
        let big_g: Polynomial = parse_with(&r.big_g, 4, Side::Primal, Indexing::ZeroBased).unwrap();
        let big_f: Polynomial = parse_with(&r.big_f, 4, Side::Primal, Indexing::ZeroBased).unwrap();
        for g in annihilator_generators(&big_g, 3).unwrap().generators {
            assert!(contract(&g, &big_f).unwrap().is_zero(), "{g}");
        }
        assert!(r.length_g < r.length_f);
    }
}
