//! Checks on `M^t` and the spin symmetrizers `sigma_t`.

use crate::hecke::{a_generators, left_closure, p, sigma_t, tau, HElement};
use crate::linalg::{rank, supercommutant, LinearOperator, SparseVector};
use crate::perm::Perm;
use crate::report::{ReportBuilder, VerificationReport};
use crate::scalar::Scalar;
use crate::tableau::{Mode, ShiftedTableau};

use super::{a_operators, as_dyn, space_for, FactorOperator};

pub fn check_spin_specht(t: &ShiftedTableau, n: Option<usize>) -> VerificationReport {
    let mut r = ReportBuilder::new("spin_specht").param("t", t);
    if let Some(n) = n {
        r = r.param("n", n);
    }
    let Some(space) = space_for(&mut r, t.shape(), n) else { return r.finish() };
    let k = t.k();
    let l = t.shape().len();
    let v = space.vt(t).expect("checked shape");

    let sigma = sigma_t(t);
    match space.act_h(&sigma, &v).ratio_to(&v) {
        Some(c) if !c.is_zero() => r.witness("sigma_t v_t / v_t", c),
        _ => r.fail("sigma_t v_t = c v_t", "not a nonzero multiple"),
    }

    let mt = space.mt_space(t, Mode::Row).expect("checked shape");
    let mt_col = space.mt_space(t, Mode::Column).expect("checked shape");
    r.witness("dim M^t (row)", mt.rank());
    r.witness("dim M^t (column)", mt_col.rank());
    r.witness("v_t in M^t (row)", mt.contains(&v));
    r.witness("v_t in M^t (column)", mt_col.contains(&v));
    r.check(mt.contains(&v), "v_t in M^t", "row mode");
    let ideal = left_closure(&sigma, &a_generators(k));
    let images: Vec<SparseVector> =
        ideal.basis().iter().map(|b| space.act_h(&HElement::from_vector(k, b), &v)).collect();
    let image_rank = rank(&images);
    r.witness("dim A_k sigma_t", ideal.rank());
    r.check(ideal.rank() == mt.rank(), "dim M^t = dim A_k sigma_t", format!("{} vs {}", mt.rank(), ideal.rank()));
    r.check(image_rank == ideal.rank(), "intertwiner full rank", format!("{image_rank} vs {}", ideal.rank()));
    r.check(images.iter().all(|w| mt.contains(w)), "intertwiner lands in M^t", "image outside M^t");

    let class = t.row_equivalent();
    let seeds: Vec<SparseVector> = class.iter().map(|s| FactorOperator::kappa(space, s).apply(&v)).collect();
    let span = space.a_span(&seeds);
    r.witness("row-equivalent fillings", class.len());
    r.witness("dim A_k-span", span.rank());
    let ops = a_operators(&space);
    match supercommutant(&as_dyn(&ops), &span, &|i| space.parity(i)) {
        Ok(sc) => {
            let expected = 1usize << (k - l);
            r.witness("supercommutant dimension", sc.dimension());
            r.check(sc.dimension() == expected, "supercommutant dimension", format!("{} != {expected}", sc.dimension()));
        }
        Err(e) => r.fail("supercommutant", e),
    }

    // (p_i - p_j) kappa_s v_t against sqrt2 tau_ij kappa_{s_ij s} v_t.
    let (mut plus, mut minus, mut instances) = (true, true, 0);
    for s in &class {
        let ks = FactorOperator::kappa(space, s).apply(&v);
        for row in t.rows() {
            for (a, &i) in row.iter().enumerate() {
                for &j in &row[a + 1..] {
                    instances += 1;
                    let diff = &p(k, i).unwrap() - &p(k, j).unwrap();
                    let lhs = space.act_h(&diff, &ks);
                    let swapped = s.permuted(&Perm::transposition(k, i, j).unwrap());
                    let inner = FactorOperator::kappa(space, &swapped).apply(&v);
                    let rhs = space.act_h(&tau(k, i, j).unwrap(), &inner).scale(&Scalar::sqrt2());
                    plus &= lhs == rhs;
                    minus &= lhs == rhs.neg();
                }
            }
        }
    }
    r.witness("transposition instances", instances);
    let sign = match (plus, minus) {
        _ if instances == 0 => "vacuous",
        (true, true) => "both (all terms vanish)",
        (true, false) => "+",
        (false, true) => "-",
        (false, false) => "neither",
    };
    r.witness("sign in (p_i - p_j) kappa v = sign sqrt2 tau kappa v", sign);
    r.check(plus || minus, "transposition identity", "no sign works");
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shapes_pass() {
        for t in ["1", "1,2", "1,2;3", "1,2,3"] {
            let rep = check_spin_specht(&t.parse().unwrap(), None);
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
