//! Worked examples with known answers, run by `cactus selftest`.

use serde::Serialize;

use crate::apolar::{apolar_length, diff_space, is_apolar, local_scheme};
use crate::bounds::{c_bound, v_bound, verify_theorem, w_bound};
use crate::enumerate::{admissible_decompositions, nonsmoothable_filter};
use crate::hilbert::{
    adapt_coordinates, embedding_dims, hilbert_function, symmetric_decomposition, HilbertFunction,
    SymmetricDecomposition,
};
use crate::macaulay::is_o_sequence;
use crate::ring::{contract, parse, parse_with, Indexing, Polynomial, Side};
use crate::witness::{cusp_witness, exotic_extend};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn p(s: &str, n: usize) -> Polynomial {
    parse(s, n, Side::Primal).expect("valid literal")
}

fn q(s: &str, n: usize) -> Polynomial {
    parse(s, n, Side::Dual).expect("valid literal")
}

fn h0(s: &str, n: usize) -> Polynomial {
    parse_with(s, n, Side::Primal, Indexing::ZeroBased).expect("valid literal")
}

fn check(name: &'static str, f: impl FnOnce() -> (bool, String)) -> Check {
    let (pass, detail) = f();
    Check { name, pass, detail }
}

fn rows(d: &SymmetricDecomposition) -> String {
    d.to_compact()
}

pub fn run() -> Vec<Check> {
    let exto = p("x1^6 + x1^3*x2", 2);
    let second = p("x1^7 + x2^6 + x1^2*x2^2", 2);
    let surface = p("x1^2*x2 + x2^2", 2);
    let worked =
        SymmetricDecomposition::from_compact("(1,4,5,4,1,1,1) -> (1,1,1,1,1,1,1),(0,3,4,3,0)").expect("valid notation");
    let cubic = SymmetricDecomposition::from_compact("(1,6,6,1) -> (1,6,6,1)").expect("valid notation");

    vec![
        check("parse exto polynomial", || {
            (exto.to_string() == "x1^6 + x1^3*x2", exto.to_string())
        }),
        check("contract y2 on surface polynomial", || {
            let r = contract(&q("y2", 2), &surface).expect("compatible");
            (r == p("x1^2 + x2", 2), r.to_string())
        }),
        check("contract -y2 + y1^3 on exto polynomial", || {
            let r = contract(&q("-y2 + y1^3", 2), &exto).expect("compatible");
            (r == p("x2", 2), r.to_string())
        }),
        check("dim Diff(x1^2*x2 + x2^2) = 6", || {
            let s = diff_space(&surface).expect("nonzero");
            let basis_ok = ["x1^2 + x2", "x1*x2", "x1", "x2", "1"]
                .iter()
                .all(|b| s.contains(&p(b, 2)));
            (s.dim() == 6 && basis_ok, format!("dim {}", s.dim()))
        }),
        check("dim Diff(x1^4 + x1^2*x2 + x2^2) = 5", || {
            let n = apolar_length(&p("x1^4 + x1^2*x2 + x2^2", 2)).expect("primal");
            (n == 5, format!("dim {n}"))
        }),
        check("dim Diff(exto) = 8", || {
            let n = apolar_length(&exto).expect("primal");
            (n == 8, format!("dim {n}"))
        }),
        check("Hilbert function of exto", || {
            let h = hilbert_function(&exto).expect("nonzero");
            (h.values() == [1, 2, 1, 1, 1, 1, 1], h.to_string())
        }),
        check("Hilbert function of second table", || {
            let h = hilbert_function(&second).expect("nonzero");
            (h.values() == [1, 2, 3, 2, 2, 2, 1, 1], h.to_string())
        }),
        check("decomposition of exto", || {
            let d = symmetric_decomposition(&exto).expect("nonzero");
            (rows(&d) == "(1,2,1,1,1,1,1) -> (1,1,1,1,1,1,1),(0,1,0)", rows(&d))
        }),
        check("decomposition of second table", || {
            let d = symmetric_decomposition(&second).expect("nonzero");
            (
                rows(&d) == "(1,2,3,2,2,2,1,1) -> (1,1,1,1,1,1,1,1),(0,1,1,1,1,1,0),(0,0,1,0,0)",
                rows(&d),
            )
        }),
        check("embedding dimensions", || {
            let a = embedding_dims(&worked);
            let b = embedding_dims(&symmetric_decomposition(&exto).expect("nonzero"));
            (
                a.values() == [1, 1, 4, 4, 4] && b.values() == [1, 1, 1, 1, 2],
                format!("{:?} {:?}", a.values(), b.values()),
            )
        }),
        check("exto polynomial is already adapted", || {
            let a = adapt_coordinates(&exto).expect("adaptable");
            (a.polynomial == exto && a.change.is_identity(), a.polynomial.to_string())
        }),
        check("(1,8,7,1) is an O-sequence", || {
            (is_o_sequence(&[1, 8, 7, 1]), String::new())
        }),
        check("decompositions of length 17 with H(1)=8, H(2)>=5", || {
            let got: Vec<String> = admissible_decompositions(17, 8, false)
                .into_iter()
                .filter(|c| c.hilbert.get(1) == 8 && c.hilbert.get(2) >= 5)
                .map(|c| c.to_string())
                .collect();
            let expected = [
                "(1,8,7,1) -> (1,7,7,1),(0,1,0)",
                "(1,8,5,2,1) -> (1,2,2,2,1),(0,3,3,0),(0,3,0)",
                "(1,8,5,2,1) -> (1,2,3,2,1),(0,2,2,0),(0,4,0)",
                "(1,8,6,1,1) -> (1,1,1,1,1),(0,5,5,0),(0,2,0)",
                "(1,8,5,1,1,1) -> (1,1,1,1,1,1),(0,4,4,0),(0,3,0)",
            ];
            (got == expected, format!("{} found", got.len()))
        }),
        check("length 14, n = 7: only (1,6,6,1)", || {
            let c = admissible_decompositions(14, 7, true);
            let names: Vec<String> = c.iter().map(|c| c.to_string()).collect();
            (names == ["(1,6,6,1) -> (1,6,6,1)"], names.join("; "))
        }),
        check("smoothability filter", || {
            let a = nonsmoothable_filter(&HilbertFunction::new(vec![1, 6, 6, 1]));
            let b = nonsmoothable_filter(&HilbertFunction::new(vec![1, 8, 5, 2, 1]));
            let c = nonsmoothable_filter(&HilbertFunction::new(vec![1, 5, 6, 1]));
            (a && !b && !c, format!("{a} {b} {c}"))
        }),
        check("c(7) = 15, c(8) = 18", || {
            (
                c_bound(7) == 15 && c_bound(8) == 18,
                format!("{} {}", c_bound(7), c_bound(8)),
            )
        }),
        check("w-table", || {
            let t: Vec<i64> = (14..=17).map(|l| w_bound(l, 8).expect("in range")).collect();
            let w7 = w_bound(14, 7).expect("in range");
            (t == [130, 139, 148, 157] && w7 == 113, format!("{t:?} {w7}"))
        }),
        check("worked bound example v = 105", || {
            let r = v_bound(&worked, 8).expect("valid");
            (
                r.v_theta == 86 && r.d_infty == 51 && r.d_flag == 19 && r.v == 105 && r.is_consistent(),
                format!(
                    "v_theta={} d_infty={} d_flag={} v={}",
                    r.v_theta, r.d_infty, r.d_flag, r.v
                ),
            )
        }),
        check("(1,6,6,1) with n = 7 gives v = 97", || {
            let r = v_bound(&cubic, 7).expect("valid");
            (r.v == 97, format!("v={}", r.v))
        }),
        check("theorem for n = 7", || {
            let r = verify_theorem(7);
            (r.pass && r.rows.len() == 1 && r.rows[0].v == 97, r.summary())
        }),
        check("theorem for n = 8", || {
            let r = verify_theorem(8);
            (r.pass && r.cactus_rank == 18, r.summary())
        }),
        check("exotic extension of exto", || {
            let t = exotic_extend(&exto, &[q("y1^2", 2)]).expect("admissible");
            (
                t == p("x1^6 + x1^4*x3 + x1^3*x2 + x1^2*x3^2 + x1*x2*x3 + x3^3", 3),
                t.to_string(),
            )
        }),
        check("cusp witness for the Fermat cubic", || {
            let r = cusp_witness(&h0("x0^3 + x1^3 + x2^3", 3)).expect("normal form");
            let h = r.local_hilbert_g.values().to_vec();
            let shape = h.len() == 5 && h[0] == 1 && h[3] == 1 && h[4] == 1 && h[2] <= h[1] && h[1] <= 2;
            (
                r.ok() && shape,
                format!(
                    "length_g={} hilbert_g={} length_f={}",
                    r.length_g, r.local_hilbert_g, r.length_f
                ),
            )
        }),
        check("general cubic surface point has length 8", || {
            let form = h0("x0^3 + 2*x1^3 - x2^3 + 3*x3^3 + x0*x1*x2 + x1*x2*x3 - x0*x2*x3", 4);
            let s = local_scheme(&form, &h0("x0 + x1 - 2*x2 + x3", 4)).expect("valid");
            let ok = s.hilbert.values() == [1, 3, 3, 1] && s.length == 8 && s.apolarity_checked;
            let apolar = is_apolar(&s.homogeneous_generators().expect("degrees"), &form).unwrap_or(false);
            (ok && apolar, format!("length={} hilbert={}", s.length, s.hilbert))
        }),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_examples_pass() {
        for c in super::run() {
            assert!(c.pass, "{}: {}", c.name, c.detail);
        }
    }
}
