//! Checks on the highest weight spaces `R^lambda` and the odd Young
//! symmetrizers `kappa_t`.

use crate::hecke::{
    e_t, h_generators, jm_elements, kappa_factors, left_closure, p, p_t_element, rho, CliffordWord, HElement,
    HMonomial, JmKind,
};
use crate::linalg::{rank, rank_kernel, restrict, supercommutant, supercommutes, Echelon, LinearOperator, Parity, SparseMatrix, SparseVector};
use crate::perm::Perm;
use crate::report::{ReportBuilder, VerificationReport};
use crate::scalar::Scalar;
use crate::tableau::{enumerate_standard_shifted, Mode, ShiftedTableau, StrictPartition};
use crate::tensor::{QGen, TensorSpace};

use super::{as_dyn, h_operators, same_span, show_vector, space_for, FactorOperator};

fn builder(id: &str, key: &str, value: impl ToString, n: Option<usize>) -> ReportBuilder {
    let r = ReportBuilder::new(id).param(key, value);
    match n {
        Some(n) => r.param("n", n),
        None => r,
    }
}

/// Content `column - row` of the cell holding `entry`.
fn content(t: &ShiftedTableau, entry: usize) -> i64 {
    let (row, col) = t.position(entry);
    col as i64 - row as i64
}

fn shifted_identity(m: &SparseMatrix, c: &Scalar) -> SparseMatrix {
    m.add_scaled(&-c, &SparseMatrix::identity(m.nrows()))
}

/// Lifts coordinates relative to `space.basis()` back to ambient vectors.
fn lift(basis: &[SparseVector], coords: &SparseVector, dim: usize) -> SparseVector {
    let mut out = SparseVector::zero(dim);
    for (j, c) in coords.iter() {
        out = out.add_scaled(c, &basis[j]);
    }
    out
}

/// Spectrum of the squared even JM elements on `R^lambda`, its joint
/// eigenspaces, and the projection property of `kappa_t` for the
/// column-filled tableau.
pub fn check_jm_spectrum(lambda: &StrictPartition, n: Option<usize>) -> VerificationReport {
    let mut r = builder("jm_spectrum", "lambda", lambda, n);
    let Some(space) = space_for(&mut r, lambda, n) else { return r.finish() };
    let k = lambda.size();
    let order: Vec<usize> = (1..=k).collect();
    let xs = jm_elements(k, &order, JmKind::Nazarov).expect("natural order");
    let pis = jm_elements(k, &order, JmKind::Odd).expect("natural order");
    for m in 1..=k {
        let rhs = &(&HElement::scalar(k, Scalar::sqrt2()) * &p(k, m).unwrap()) * &pis[m - 1];
        r.check(xs[m - 1] == rhs, "x = sqrt2 p pi", format!("m = {m}"));
    }

    let rspace = space.highest_weight_space(lambda).expect("checked shape");
    let d = rspace.rank();
    r.witness("dim R", d);
    let tableaux = enumerate_standard_shifted(lambda);
    let squares: Vec<SparseMatrix> =
        xs.iter().map(|x| restrict(&space.h_operator(x * x), &rspace)).collect();

    for m in 1..=k {
        let mut values: Vec<i64> = tableaux.iter().map(|s| content(s, m)).map(|c| c * (c + 1)).collect();
        values.sort_unstable();
        values.dedup();
        let mut prod = SparseMatrix::identity(d);
        for &c in &values {
            let shifted = shifted_identity(&squares[m - 1], &Scalar::from_int(c));
            let (rk, _) = rank_kernel(&shifted);
            r.check(rk < d, "eigenvalue occurs", format!("x_{m}^2 value {c}"));
            prod = prod.mul(&shifted);
        }
        r.check(prod.is_zero(), "spectrum contained", format!("x_{m}^2"));
        r.witness(
            format!("spectrum x_{m}^2"),
            values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
        );
    }

    // Joint eigenspaces indexed by standard tableaux.
    let eigenspaces: Vec<(ShiftedTableau, Vec<SparseVector>)> = tableaux
        .iter()
        .map(|s| {
            let rows = (1..=k)
                .flat_map(|m| {
                    let c = content(s, m);
                    shifted_identity(&squares[m - 1], &Scalar::from_int(c * (c + 1))).rows().to_vec()
                })
                .collect();
            let (_, kernel) = rank_kernel(&SparseMatrix::from_rows(d, rows));
            (s.clone(), kernel)
        })
        .collect();
    let total: usize = eigenspaces.iter().map(|(_, e)| e.len()).sum();
    r.check(total == d, "joint eigenspaces fill R", format!("{total} != {d}"));
    for (s, e) in &eigenspaces {
        r.check(!e.is_empty(), "joint eigenspace nonzero", s);
    }

    let t = ShiftedTableau::column_filled(lambda);
    r.witness("t", &t);
    let kappa = restrict(&FactorOperator::kappa(space, &t), &rspace);
    let expected: Scalar = lambda
        .cells()
        .iter()
        .map(|&(i, j)| Scalar::from_frac((2 * i * j - i * (i - 1)) as i64, 2))
        .fold(Scalar::one(), |acc, x| &acc * &x);
    r.witness("kappa_t on its component", &expected);
    for (s, e) in &eigenspaces {
        for v in e {
            let kv = kappa.mul_vec(v);
            if s == &t {
                r.check(kv == v.scale(&expected), "kappa_t scalar on its component", s);
            } else {
                r.check(kv.is_zero(), "kappa_t kills other components", s);
            }
        }
    }
    let factors = kappa_factors(&t);
    let (last, factor) = factors.last().expect("nonempty shape");
    let (i, j) = t.position(*last);
    let value = Scalar::from_frac((2 * i * j - i * (i - 1)) as i64, 2);
    let fmat = restrict(&space.h_operator(factor.clone()), &rspace);
    let own = &eigenspaces.iter().find(|(s, _)| s == &t).expect("column-filled is standard").1;
    for v in own {
        r.check(fmat.mul_vec(v) == v.scale(&value), "final factor eigenvalue", format!("entry {last}"));
    }
    r.witness(format!("final factor eigenvalue at ({i},{j})"), value);
    r.finish()
}

/// `kappa_t(v_t)` is nonzero, highest weight, and `kappa_t(M^lambda)` is its
/// Clifford span.
pub fn check_kappa_image(t: &ShiftedTableau, n: Option<usize>) -> VerificationReport {
    let mut r = builder("kappa_image", "t", t, n);
    let Some(space) = space_for(&mut r, t.shape(), n) else { return r.finish() };
    let k = t.k();
    let kappa = FactorOperator::kappa(space, t);
    let v = space.vt(t).expect("checked shape");
    let u = kappa.apply(&v);
    r.witness("kappa_t(v_t)", show_vector(&space, &u));
    r.check(!u.is_zero(), "nonzero", "kappa_t(v_t) = 0");
    let rspace = space.highest_weight_space(t.shape()).expect("checked shape");
    r.check(rspace.contains(&u), "highest weight", "kappa_t(v_t) outside R");

    let mut image = Echelon::new(space.dim());
    for w in space.weight_indices(t.shape().parts()) {
        image.insert(&kappa.apply(&SparseVector::unit(space.dim(), w)));
    }
    let mut cspan = Echelon::new(space.dim());
    for mask in 0..(1u16 << k) {
        let m = HMonomial::new(CliffordWord::from_mask(mask), Perm::identity(k));
        cspan.insert(&space.act_monomial(&m, &u));
    }
    r.witness("dim kappa_t(M)", image.rank());
    r.witness("dim C_k kappa_t(v_t)", cspan.rank());
    r.check(same_span(&image, &cspan), "image is Clifford span", format!("{} vs {}", image.rank(), cspan.rank()));
    r.finish()
}

/// The span of the `kappa_t v_t` is `R^lambda`, its supercommutant is a
/// Clifford algebra on `l(lambda)` generators, realized by the `F_ii`.
pub fn check_specht_centralizer(lambda: &StrictPartition, n: Option<usize>) -> VerificationReport {
    let mut r = builder("specht_centralizer", "lambda", lambda, n);
    let Some(space) = space_for(&mut r, lambda, n) else { return r.finish() };
    let rspace = space.highest_weight_space(lambda).expect("checked shape");
    r.witness("dim R", rspace.rank());

    let seed = |t: &ShiftedTableau| FactorOperator::kappa(space, t).apply(&space.vt(t).expect("checked shape"));
    let all: Vec<SparseVector> = ShiftedTableau::all_fillings(lambda).iter().map(seed).collect();
    let standard: Vec<SparseVector> = enumerate_standard_shifted(lambda).iter().map(seed).collect();
    let specht = space.h_span(&all);
    r.witness("dim Specht", specht.rank());
    r.check(same_span(&specht, &rspace), "Specht equals R", format!("{} vs {}", specht.rank(), rspace.rank()));
    let standard_suffice = same_span(&space.h_span(&standard), &rspace);
    r.witness("standard fillings suffice", standard_suffice);

    let ops = h_operators(&space);
    let sc = match supercommutant(&as_dyn(&ops), &rspace, &|i| space.parity(i)) {
        Ok(sc) => sc,
        Err(e) => {
            r.fail("supercommutant", e);
            return r.finish();
        }
    };
    let expected = 1usize << lambda.len();
    r.witness("supercommutant even", sc.even.len());
    r.witness("supercommutant odd", sc.odd.len());
    r.check(sc.dimension() == expected, "supercommutant dimension", format!("{} != {expected}", sc.dimension()));

    let gens: Vec<(SparseMatrix, Parity)> =
        h_generators(space.k()).into_iter().map(|(x, par)| (restrict(&space.h_operator(x), &rspace), par)).collect();
    let mut fs = Vec::new();
    for (i, &li) in lambda.parts().iter().enumerate() {
        let f = space.q_operator(QGen::F(i + 1, i + 1)).expect("index within n");
        let stable = rspace.basis().iter().all(|b| rspace.contains(&f.apply(b)));
        if !r.check(stable, "F_ii preserves R", i + 1) {
            return r.finish();
        }
        let m = restrict(&f, &rspace);
        let square = m.mul(&m);
        r.check(
            square == SparseMatrix::identity(rspace.rank()).scale(&Scalar::from_int(li as i64)),
            "F_ii^2 = lambda_i",
            i + 1,
        );
        r.check(supercommutes(&m, Parity::Odd, &gens), "F_ii supercommutes", i + 1);
        fs.push(m);
    }
    let products: Vec<SparseVector> = (0..1usize << fs.len())
        .map(|mask| {
            (0..fs.len())
                .filter(|i| mask & (1 << i) != 0)
                .fold(SparseMatrix::identity(rspace.rank()), |acc, i| acc.mul(&fs[i]))
                .flatten()
        })
        .collect();
    let generated = rank(&products);
    r.witness("dim algebra of F_ii", generated);
    r.check(generated == sc.dimension(), "F_ii generate", format!("{generated} != {}", sc.dimension()));
    r.finish()
}

/// The `H_k`-endomorphism of `M^lambda` sending `v_t` to `u`.
fn endomorphism_from_vt(space: &TensorSpace, t: &ShiftedTableau, u: &SparseVector, w: usize) -> SparseVector {
    let k = t.k();
    let word = space.word(w);
    let mut images = vec![0usize; k];
    let mut mask = 0u16;
    for (row, entries) in t.rows().iter().enumerate() {
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        let positions = word.0.iter().enumerate().filter(|(_, l)| l.index == row + 1).map(|(a, _)| a + 1);
        for (&a, b) in sorted.iter().zip(positions) {
            images[a - 1] = b;
        }
    }
    for (a, l) in word.0.iter().enumerate() {
        if l.odd {
            mask |= 1 << a;
        }
    }
    let m = HMonomial::new(CliffordWord::from_mask(mask), Perm::from_one_line(&images).expect("bijection"));
    let moved = space.act_monomial(&m, &space.vt(t).expect("shape fits"));
    let sign = moved.value(w);
    debug_assert_eq!(moved.nnz(), 1);
    space.act_monomial(&m, u).scale(&sign)
}

/// Consequences for a single tableau: the supercommutant acts through the
/// `p_t^i`, the endomorphism `v_t -> rho_t kappa_t v_t` is scalar on
/// `R^lambda`, and `e_t = kappa_t rho_t` is a quasi-idempotent whose corner
/// algebra is Clifford.
pub fn check_specht_corollaries(t: &ShiftedTableau, n: Option<usize>) -> VerificationReport {
    let mut r = builder("specht_corollaries", "t", t, n);
    let Some(space) = space_for(&mut r, t.shape(), n) else { return r.finish() };
    let k = t.k();
    let l = t.shape().len();
    let rspace = space.highest_weight_space(t.shape()).expect("checked shape");
    let basis = rspace.basis();
    let v = space.vt(t).expect("checked shape");
    let kappa = FactorOperator::kappa(space, t);
    let u = kappa.apply(&v);

    let ops = h_operators(&space);
    let sc = match supercommutant(&as_dyn(&ops), &rspace, &|i| space.parity(i)) {
        Ok(sc) => sc,
        Err(e) => {
            r.fail("supercommutant", e);
            return r.finish();
        }
    };
    let ucoords = rspace.pivot_coordinates(&u);
    let images: Vec<SparseVector> =
        sc.even.iter().chain(&sc.odd).map(|phi| lift(&basis, &phi.mul_vec(&ucoords), space.dim())).collect();
    let mut valid_modes = Vec::new();
    for mode in [Mode::Row, Mode::Column] {
        let name = match mode {
            Mode::Row => "row",
            Mode::Column => "column",
        };
        let pts: Option<Vec<HElement>> = (1..=l).map(|i| p_t_element(t, i, mode).ok()).collect();
        let Some(pts) = pts else {
            r.witness(format!("{name} mode"), "undefined");
            continue;
        };
        let fv_ok = pts.iter().enumerate().all(|(i, pt)| {
            space.act_q(QGen::F(i + 1, i + 1), &v).expect("index within n") == space.act_h(pt, &v)
        });
        r.witness(format!("F_ii v_t = p_t^i v_t ({name})"), fv_ok);
        let mut fspan = Echelon::new(space.dim());
        for mask in 0..1usize << l {
            let w = (0..l).rev().filter(|i| mask & (1 << i) != 0).fold(u.clone(), |acc, i| space.act_h(&pts[i], &acc));
            fspan.insert(&w);
        }
        let ok = images.iter().all(|img| fspan.contains(img));
        r.witness(format!("supercommutant through p_t ({name})"), ok);
        if ok {
            valid_modes.push(name);
        }
    }
    r.check(!valid_modes.is_empty(), "supercommutant acts through p_t", "no mode");
    r.witness("valid mode", valid_modes.join(","));

    let target = space.act_h(&rho(t), &u);
    let mut scalar: Option<Scalar> = None;
    for b in &basis {
        let mut img = SparseVector::zero(space.dim());
        for (w, c) in b.iter() {
            img = img.add_scaled(c, &endomorphism_from_vt(&space, t, &target, w));
        }
        let c = if img.is_zero() { Some(Scalar::zero()) } else { img.ratio_to(b) };
        match (c, &scalar) {
            (None, _) => {
                r.fail("endomorphism scalar on R", "not proportional");
                break;
            }
            (Some(c), Some(s)) if &c != s => {
                r.fail("endomorphism scalar on R", format!("{c} vs {s}"));
                break;
            }
            (Some(c), _) => scalar = Some(c),
        }
    }
    if let Some(c) = &scalar {
        r.witness("endomorphism scalar", c);
    }

    let e = e_t(t);
    let e2 = &e * &e;
    match e2.ratio_to(&e) {
        Some(c) if !c.is_zero() => r.witness("e_t^2 / e_t", c),
        _ => r.fail("e_t^2 = c e_t", "not a nonzero multiple"),
    }
    let gens: Vec<HElement> = h_generators(k).into_iter().map(|(x, _)| x).collect();
    let ideal = left_closure(&e, &gens);
    let corner: Vec<SparseVector> =
        ideal.basis().iter().map(|b| (&e * &HElement::from_vector(k, b)).to_vector()).collect();
    let dim = rank(&corner);
    r.witness("dim H_k e_t", ideal.rank());
    r.witness("dim e_t H_k e_t", dim);
    r.check(dim == 1 << l, "corner dimension", format!("{dim} != {}", 1 << l));
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> ShiftedTableau {
        s.parse().unwrap()
    }

    #[test]
    fn kappa_image_single_row() {
        let rep = check_kappa_image(&tab("1,2"), None);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.witnesses[0].value, "2 * [1 1]");
    }

    #[test]
    fn two_one_shape() {
        for rep in [
            check_kappa_image(&tab("1,2;3"), None),
            check_jm_spectrum(&"2,1".parse().unwrap(), None),
            check_specht_centralizer(&"2,1".parse().unwrap(), None),
            check_specht_corollaries(&tab("1,2;3"), None),
        ] {
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn shape_too_tall_fails() {
        assert!(!check_kappa_image(&tab("1,2;3"), Some(1)).passed());
    }
}
