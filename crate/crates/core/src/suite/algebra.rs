//! Checks that live entirely inside `H_k`.

use crate::hecke::{
    a_generators, classical_symmetrizers, jm_elements, left_closure, p, spin_idempotent, tau, HElement, JmKind,
};
use crate::perm::factorial;
use crate::report::{ReportBuilder, VerificationReport};
use crate::scalar::Scalar;
use crate::tableau::{enumerate_standard_ordinary, Partition};

fn natural(k: usize) -> Vec<usize> {
    (1..=k).collect()
}

/// The span of all words in the `tau_ij` has dimension `k!`, and every
/// `tau_{i,i+1}` anticommutes with every `p_j`.
pub fn check_tau_span(k: usize) -> VerificationReport {
    let mut r = ReportBuilder::new("tau_span").param("k", k);
    let span = left_closure(&HElement::one(k), &a_generators(k));
    r.witness("dim span", span.rank());
    r.witness("k!", factorial(k));
    r.check(span.rank() == factorial(k), "dimension", format!("{} != {}", span.rank(), factorial(k)));
    for t in a_generators(k) {
        for j in 1..=k {
            let pj = p(k, j).expect("valid index");
            r.check((&(&t * &pj) + &(&pj * &t)).is_zero(), "tau anticommutes with p", format!("p{j}"));
        }
    }
    r.finish()
}

/// The antisymmetrizer and Jucys–Murphy forms of the classical Young
/// symmetrizer agree up to a nonzero factor.
pub fn check_symmetrizer_forms(mu: &Partition) -> VerificationReport {
    let mut r = ReportBuilder::new("symmetrizer_forms").param("mu", mu);
    for t in enumerate_standard_ordinary(mu) {
        let (e12, e13) = classical_symmetrizers(&t);
        match e13.ratio_to(&e12) {
            Some(c) if !c.is_zero() && !e12.is_zero() => r.witness(format!("ratio {t}"), c),
            _ => r.fail("proportional", format!("{t}")),
        }
    }
    r.finish()
}

/// Classical JM elements commute; odd JM elements anticommute.
pub fn check_jm_commutation(k: usize) -> VerificationReport {
    let mut r = ReportBuilder::new("jm_commutation").param("k", k);
    let order = natural(k);
    let xs = jm_elements(k, &order, JmKind::Classical).expect("natural order");
    let pis = jm_elements(k, &order, JmKind::Odd).expect("natural order");
    let mut pairs = 0;
    for i in 0..k {
        for j in i + 1..k {
            pairs += 1;
            let comm = &(&xs[i] * &xs[j]) - &(&xs[j] * &xs[i]);
            r.check(comm.is_zero(), "classical commute", format!("x{} x{}", i + 1, j + 1));
            let anti = &(&pis[i] * &pis[j]) + &(&pis[j] * &pis[i]);
            r.check(anti.is_zero(), "odd anticommute", format!("pi{} pi{}", i + 1, j + 1));
        }
    }
    r.witness("pairs", pairs);
    r.finish()
}

/// `x_m = sqrt2 p_m pi_m` for the even JM elements `x_m`, and the resulting
/// relation between their squares.
pub fn check_nazarov_identity(k: usize) -> VerificationReport {
    let mut r = ReportBuilder::new("nazarov_identity").param("k", k);
    let order = natural(k);
    let xs = jm_elements(k, &order, JmKind::Nazarov).expect("natural order");
    let pis = jm_elements(k, &order, JmKind::Odd).expect("natural order");
    let sqrt2 = HElement::scalar(k, Scalar::sqrt2());
    for m in 1..=k {
        let pm = p(k, m).expect("valid index");
        let rhs = &(&sqrt2 * &pm) * &pis[m - 1];
        r.check(xs[m - 1] == rhs, "x = sqrt2 p pi", format!("m = {m}"));
    }
    let mut ratios = Vec::new();
    for m in 2..=k {
        let x2 = &xs[m - 1] * &xs[m - 1];
        let pi2 = &pis[m - 1] * &pis[m - 1];
        match x2.ratio_to(&pi2) {
            Some(c) => ratios.push(c.to_string()),
            None => r.fail("x^2 proportional to pi^2", format!("m = {m}")),
        }
    }
    if !ratios.is_empty() {
        ratios.dedup();
        r.witness("x_m^2 / pi_m^2", ratios.join(","));
        r.check(ratios == ["2"], "x^2 = 2 pi^2", ratios.join(","));
    }
    for i in 0..k {
        for j in i + 1..k {
            r.check((&(&xs[i] * &xs[j]) - &(&xs[j] * &xs[i])).is_zero(), "x commute", format!("x{} x{}", i + 1, j + 1));
        }
    }
    r.finish()
}

/// Properties of the idempotent `e_k` built from the squares of the odd JM
/// elements.
pub fn check_spin_idempotent(k: usize) -> VerificationReport {
    let mut r = ReportBuilder::new("spin_idempotent").param("k", k);
    let e = spin_idempotent(k);
    r.check(&e * &e == e, "idempotent", "e_k^2 != e_k");

    let mut triples = 0;
    for i in 1..=k {
        for j in 1..=k {
            for l in 1..=k {
                if i == j || j == l || i == l {
                    continue;
                }
                triples += 1;
                let sum = &(&tau(k, i, j).unwrap() + &tau(k, j, l).unwrap()) + &tau(k, l, i).unwrap();
                r.check((&sum * &e).is_zero(), "triple sum annihilates", format!("({i},{j},{l})"));
            }
        }
    }
    r.witness("ordered triples", triples);

    let pis = jm_elements(k, &natural(k), JmKind::Odd).expect("natural order");
    let (mut matches_normalization, mut matches_shifted) = (true, true);
    for i in 1..=k {
        let lhs = &(&pis[i - 1] * &pis[i - 1]) * &e;
        let c = if lhs.is_zero() { Some(Scalar::zero()) } else { lhs.ratio_to(&e) };
        let Some(c) = c else {
            r.fail("pi^2 e_k proportional to e_k", format!("i = {i}"));
            continue;
        };
        let a = Scalar::from_frac((i * (i - 1)) as i64, 2);
        let b = Scalar::from_frac(((i - 1) * i.saturating_sub(2)) as i64, 2);
        matches_normalization &= c == a;
        matches_shifted &= c == b;
        r.witness(format!("c_{i}"), format!("{c} (i(i-1)/2 = {a}, (i-1)(i-2)/2 = {b})"));
    }
    r.witness(
        "c_i formula",
        match (matches_normalization, matches_shifted) {
            (true, true) => "both",
            (true, false) => "i(i-1)/2",
            (false, true) => "(i-1)(i-2)/2",
            (false, false) => "neither",
        },
    );

    let ideal = left_closure(&e, &a_generators(k));
    let expected = 1usize << k.saturating_sub(1);
    r.witness("dim A_k e_k", ideal.rank());
    r.check(ideal.rank() == expected, "dim A_k e_k", format!("{} != {expected}", ideal.rank()));
    let span = left_closure(&HElement::one(k), &a_generators(k));
    r.check(span.rank() == factorial(k), "dim A_k", format!("{} != {}", span.rank(), factorial(k)));
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_pass() {
        for k in 1..=4 {
            assert!(check_tau_span(k).passed(), "k = {k}");
            assert!(check_jm_commutation(k).passed());
            assert!(check_nazarov_identity(k).passed());
        }
        assert!(check_symmetrizer_forms(&"2,1".parse().unwrap()).passed());
    }

    #[test]
    fn single_box_ratio_is_one() {
        let rep = check_symmetrizer_forms(&"1".parse().unwrap());
        assert_eq!(rep.witnesses[0].value, "1");
    }

    #[test]
    fn spin_idempotent_small() {
        for k in 1..=4 {
            let rep = check_spin_idempotent(k);
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
