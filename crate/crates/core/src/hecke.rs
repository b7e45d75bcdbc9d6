//! The Hecke–Clifford algebra `H_k`: the semidirect product of the symmetric
//! group with the Clifford algebra on `p_1..p_k` (`p_i^2 = -1`, distinct
//! generators anticommute).
//!
//! Elements are sparse sums of monomials `p_S * sigma` with the Clifford word
//! (ascending product over `S`) on the left of the permutation. Permutations
//! act on Clifford generators by `sigma p_i sigma^-1 = p_sigma(i)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::linalg::{span_closure_ops, Echelon, LinearOperator, Parity, SparseVector};
use crate::perm::{factorial, Perm, MAX_K};
use crate::report::{ReportBuilder, VerificationReport};
use crate::scalar::Scalar;
use crate::tableau::{Mode, OrdinaryTableau, ShiftedTableau};

/// Sorted set `S` of Clifford generators, denoting `p_s1 ... p_sm` in
/// ascending order. Bit `i - 1` stands for `p_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct CliffordWord(u16);

impl CliffordWord {
    pub fn empty() -> Self {
        CliffordWord(0)
    }

    pub fn from_indices(k: usize, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u16;
        for &i in indices {
            if i == 0 || i > k {
                return Err(AlgebraError::IndexOutOfRange { index: i, max: k });
            }
            if mask & (1 << (i - 1)) != 0 {
                return Err(AlgebraError::MalformedOrder(format!("repeated generator p{i}")));
            }
            mask |= 1 << (i - 1);
        }
        Ok(CliffordWord(mask))
    }

    pub fn from_mask(mask: u16) -> Self {
        CliffordWord(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    /// One-based support in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..16).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn parity(self) -> Parity {
        Parity::from_bit(self.len())
    }

    /// `p_S p_T = (-1)^sign p_(S xor T)`; returns `(negative, word)`.
    #[inline]
    pub fn mul(self, other: CliffordWord) -> (bool, CliffordWord) {
        let (s, t) = (self.0 as u32, other.0 as u32);
        let mut count = (s & t).count_ones();
        let mut rest = t;
        while rest != 0 {
            let b = rest.trailing_zeros();
            count += (s >> (b + 1)).count_ones();
            rest &= rest - 1;
        }
        (count % 2 == 1, CliffordWord((s ^ t) as u16))
    }

    /// `sigma p_S sigma^-1 = (-1)^sign p_sigma(S)`; returns `(negative, word)`.
    #[inline]
    pub fn conjugate(self, sigma: &Perm) -> (bool, CliffordWord) {
        let mut imgs = [0u8; MAX_K];
        let mut m = 0;
        let mut mask = 0u16;
        let mut rest = self.0;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            let img = sigma.at(b) as u8;
            imgs[m] = img;
            m += 1;
            mask |= 1 << img;
            rest &= rest - 1;
        }
        let mut inv = 0;
        for a in 0..m {
            for b in a + 1..m {
                if imgs[a] > imgs[b] {
                    inv += 1;
                }
            }
        }
        (inv % 2 == 1, CliffordWord(mask))
    }
}

/// Normal-form monomial `p_S * sigma`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HMonomial {
    pub perm: Perm,
    pub clifford: CliffordWord,
}

impl HMonomial {
    pub fn new(clifford: CliffordWord, perm: Perm) -> Self {
        HMonomial { perm, clifford }
    }

    pub fn identity(k: usize) -> Self {
        HMonomial { perm: Perm::identity(k), clifford: CliffordWord::empty() }
    }

    pub fn k(&self) -> usize {
        self.perm.k()
    }

    pub fn parity(&self) -> Parity {
        self.clifford.parity()
    }

    /// Product of monomials as `(negative, monomial)`.
    #[inline]
    pub fn mul(&self, other: &HMonomial) -> (bool, HMonomial) {
        let (s1, moved) = other.clifford.conjugate(&self.perm);
        let (s2, word) = self.clifford.mul(moved);
        (s1 ^ s2, HMonomial { perm: self.perm.compose(&other.perm), clifford: word })
    }

    /// Index in the basis ordered by permutation rank, then Clifford mask.
    pub fn basis_index(&self) -> usize {
        (self.perm.rank() << self.k()) | self.clifford.mask() as usize
    }

    pub fn from_basis_index(k: usize, index: usize) -> Self {
        let mask = (index & ((1 << k) - 1)) as u16;
        HMonomial { perm: Perm::unrank(k, index >> k), clifford: CliffordWord(mask) }
    }
}

impl fmt::Display for HMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.clifford.is_empty() {
            let idx: Vec<String> = self.clifford.indices().iter().map(|i| i.to_string()).collect();
            write!(f, "p[{}] * ", idx.join(","))?;
        }
        write!(f, "{}", self.perm)
    }
}

/// Dimension of `H_k`.
pub fn algebra_dim(k: usize) -> usize {
    factorial(k) << k
}

/// Sparse element of `H_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HElement {
    k: usize,
    terms: Vec<(HMonomial, Scalar)>,
}

impl HElement {
    pub fn zero(k: usize) -> Self {
        assert!(k <= MAX_K, "rank {k} exceeds {MAX_K}");
        HElement { k, terms: Vec::new() }
    }

    pub fn one(k: usize) -> Self {
        HElement::scalar(k, Scalar::one())
    }

    pub fn scalar(k: usize, c: Scalar) -> Self {
        HElement::monomial(HMonomial::identity(k), c)
    }

    pub fn monomial(m: HMonomial, c: Scalar) -> Self {
        let k = m.k();
        if c.is_zero() {
            return HElement::zero(k);
        }
        HElement { k, terms: vec![(m, c)] }
    }

    pub fn from_terms<I>(k: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (HMonomial, Scalar)>,
    {
        let mut acc: HashMap<HMonomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.k(), k, "monomial rank mismatch");
            *acc.entry(m).or_default() += &c;
        }
        HElement::from_map(k, acc)
    }

    fn from_map(k: usize, acc: HashMap<HMonomial, Scalar>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by_key(|a| a.0);
        HElement { k, terms }
    }

    pub fn perm(p: Perm) -> Self {
        HElement::monomial(HMonomial::new(CliffordWord::empty(), p), Scalar::one())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &[(HMonomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &HMonomial) -> Scalar {
        self.terms
            .binary_search_by(|(x, _)| x.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    /// Coefficient of the identity monomial.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&HMonomial::identity(self.k))
    }

    /// Common parity of all terms, if homogeneous. Zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.iter().map(|(m, _)| m.parity());
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    pub fn scale(&self, c: &Scalar) -> HElement {
        if c.is_zero() {
            return HElement::zero(self.k);
        }
        HElement { k: self.k, terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn try_mul(&self, other: &HElement) -> Result<HElement> {
        if self.k != other.k {
            return Err(AlgebraError::RankMismatch(self.k, other.k));
        }
        let mut acc: HashMap<HMonomial, Scalar> = HashMap::with_capacity(self.len() * other.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (neg, m) = a.mul(b);
                let entry = acc.entry(m).or_default();
                let c = x * y;
                if neg {
                    *entry -= &c;
                } else {
                    *entry += &c;
                }
            }
        }
        Ok(HElement::from_map(self.k, acc))
    }

    pub fn pow(&self, n: u32) -> HElement {
        (0..n).fold(HElement::one(self.k), |acc, _| &acc * self)
    }

    /// `x y - (-1)^(p(x) p(y)) y x` for homogeneous `x`, `y`.
    pub fn supercommutator(&self, other: &HElement) -> HElement {
        let xy = self * other;
        let yx = other * self;
        match (self.parity(), other.parity()) {
            (Some(a), Some(b)) if a.koszul(b) => &xy + &yx,
            _ => &xy - &yx,
        }
    }

    /// Coordinates in the monomial basis of `H_k` (see [`HMonomial::basis_index`]).
    pub fn to_vector(&self) -> SparseVector {
        SparseVector::from_entries(algebra_dim(self.k), self.terms.iter().map(|(m, c)| (m.basis_index(), c.clone())))
    }

    pub fn from_vector(k: usize, v: &SparseVector) -> HElement {
        assert_eq!(v.dim(), algebra_dim(k));
        let terms = v.iter().map(|(i, c)| (HMonomial::from_basis_index(k, i), c.clone())).collect::<Vec<_>>();
        let mut terms = terms;
        terms.sort_by_key(|a| a.0);
        HElement { k, terms }
    }

    /// Returns `c` with `self = c * other` when the two are proportional.
    pub fn ratio_to(&self, other: &HElement) -> Option<Scalar> {
        let (m, y) = other.terms.first()?;
        let c = self.coefficient(m).div(y).ok()?;
        (&other.scale(&c) == self).then_some(c)
    }

    fn combine(&self, other: &HElement, sign: &Scalar) -> HElement {
        assert_eq!(self.k, other.k, "rank mismatch");
        let mut acc: HashMap<HMonomial, Scalar> = self.terms.iter().cloned().collect();
        for (m, c) in &other.terms {
            acc.entry(*m).or_default().add_mul(sign, c);
        }
        HElement::from_map(self.k, acc)
    }
}

/// Product in `H_k`; errors on rank mismatch.
pub fn h_mul(x: &HElement, y: &HElement) -> Result<HElement> {
    x.try_mul(y)
}

impl Mul for &HElement {
    type Output = HElement;
    fn mul(self, rhs: &HElement) -> HElement {
        self.try_mul(rhs).expect("rank mismatch")
    }
}

impl Add for &HElement {
    type Output = HElement;
    fn add(self, rhs: &HElement) -> HElement {
        self.combine(rhs, &Scalar::one())
    }
}

impl Sub for &HElement {
    type Output = HElement;
    fn sub(self, rhs: &HElement) -> HElement {
        self.combine(rhs, &Scalar::from_int(-1))
    }
}

impl Neg for &HElement {
    type Output = HElement;
    fn neg(self) -> HElement {
        self.scale(&Scalar::from_int(-1))
    }
}

/// Splits a coefficient into a sign and a magnitude for display.
fn sign_split(c: &Scalar) -> (bool, Scalar) {
    let neg = if c.rational_part().is_zero() { c.sqrt2_part().is_negative() } else { c.rational_part().is_negative() };
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = sign_split(c);
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{mag} * {m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Transposition `s_ij`.
pub fn s(k: usize, i: usize, j: usize) -> Result<HElement> {
    if i == j {
        return Err(AlgebraError::MalformedOrder(format!("s_{i}{j} needs distinct indices")));
    }
    Ok(HElement::perm(Perm::transposition(k, i, j)?))
}

/// Clifford generator `p_i`.
pub fn p(k: usize, i: usize) -> Result<HElement> {
    clifford(k, &[i])
}

/// Clifford word `p_S` for a set of distinct indices (multiplied in the given
/// order).
pub fn clifford(k: usize, indices: &[usize]) -> Result<HElement> {
    let mut out = HElement::one(k);
    for &i in indices {
        let w = CliffordWord::from_indices(k, &[i])?;
        out = &out * &HElement::monomial(HMonomial::new(w, Perm::identity(k)), Scalar::one());
    }
    Ok(out)
}

/// The formula `(p_i - p_j) s_ij / sqrt 2`, for any ordered pair.
fn tau_formula(k: usize, i: usize, j: usize) -> Result<HElement> {
    let sij = Perm::transposition(k, i, j)?;
    let h = Scalar::inv_sqrt2();
    Ok(HElement::from_terms(
        k,
        [
            (HMonomial::new(CliffordWord::from_indices(k, &[i])?, sij), h.clone()),
            (HMonomial::new(CliffordWord::from_indices(k, &[j])?, sij), -h),
        ],
    ))
}

/// `tau_ij`; for `i > j` this is `-tau_ji`.
pub fn tau(k: usize, i: usize, j: usize) -> Result<HElement> {
    if i == j {
        return Err(AlgebraError::MalformedOrder(format!("tau_{i}{j} needs distinct indices")));
    }
    if i < j {
        tau_formula(k, i, j)
    } else {
        Ok(-&tau_formula(k, j, i)?)
    }
}

/// Generators `s_{i,i+1}` and `p_1` of `H_k`, each with its parity.
pub fn h_generators(k: usize) -> Vec<(HElement, Parity)> {
    let mut gens: Vec<(HElement, Parity)> =
        (1..k).map(|i| (s(k, i, i + 1).expect("valid"), Parity::Even)).collect();
    if k >= 1 {
        gens.push((p(k, 1).expect("valid"), Parity::Odd));
    }
    gens
}

/// Generators `tau_{i,i+1}` of the spin symmetric-group algebra `A_k`.
pub fn a_generators(k: usize) -> Vec<HElement> {
    (1..k).map(|i| tau(k, i, i + 1).expect("valid")).collect()
}

/// Checks antisymmetry, squares, disjoint anticommutation and the braid-type
/// relations of the `tau_ij`.
pub fn check_tau_relations(k: usize) -> VerificationReport {
    let mut r = ReportBuilder::new("tau_relations").param("k", k);
    if k < 2 {
        r.skip("no generators for k < 2");
        return r.finish();
    }
    let one = HElement::one(k);
    let pairs: Vec<(usize, usize)> = (1..=k).flat_map(|i| (1..=k).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let t = |i, j| tau(k, i, j).expect("valid indices");
    let mut counts = [0usize; 4];
    for &(i, j) in &pairs {
        let formula = tau_formula(k, i, j).expect("valid");
        r.check(formula == t(i, j), "antisymmetry", format!("tau_{i}{j}"));
        r.check(&formula * &formula == one, "square", format!("tau_{i}{j}^2"));
        counts[0] += 1;
        counts[1] += 1;
    }
    for &(i, j) in pairs.iter().filter(|(i, j)| i < j) {
        for &(a, b) in pairs.iter().filter(|(a, b)| a < b && (*a, *b) > (i, j)) {
            if a == i || a == j || b == i || b == j {
                continue;
            }
            let (x, y) = (t(i, j), t(a, b));
            r.check((&(&x * &y) + &(&y * &x)).is_zero(), "disjoint anticommutation", format!("tau_{i}{j}, tau_{a}{b}"));
            counts[2] += 1;
        }
    }
    for i in 1..=k {
        for j in (1..=k).filter(|&j| j != i) {
            for l in (1..=k).filter(|&l| l != i && l != j) {
                let (a, b) = (t(i, j), t(j, l));
                let lhs = &(&a * &b) * &a;
                let mid = &(&b * &a) * &b;
                let rhs = -&t(i, l);
                r.check(lhs == rhs && mid == rhs, "braid", format!("i={i} j={j} l={l}"));
                counts[3] += 1;
            }
        }
    }
    r.witness("antisymmetry instances", counts[0]);
    r.witness("square instances", counts[1]);
    r.witness("disjoint instances", counts[2]);
    r.witness("braid instances", counts[3]);
    if counts[2] == 0 {
        r.note("disjoint-pair relation vacuous for k < 4");
    }
    r.finish()
}

/// Flavour of Jucys–Murphy element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JmKind {
    /// `x_i = sum of s_ai` over `a` preceding `i`.
    Classical,
    /// `x_m = sum_{i<m} (s_im + s_im p_i p_m)`, natural order only.
    Nazarov,
    /// `pi_i = sum of tau_ai` over `a` preceding `i`.
    Odd,
}

fn check_order(k: usize, order: &[usize]) -> Result<()> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=k).collect::<Vec<_>>() {
        return Err(AlgebraError::MalformedOrder(format!("{order:?} is not an ordering of 1..{k}")));
    }
    Ok(())
}

/// JM elements indexed by entry: element `i - 1` belongs to entry `i`.
pub fn jm_elements(k: usize, order: &[usize], kind: JmKind) -> Result<Vec<HElement>> {
    check_order(k, order)?;
    let mut out = vec![HElement::zero(k); k];
    for (pos, &i) in order.iter().enumerate() {
        let mut x = HElement::zero(k);
        match kind {
            JmKind::Classical => {
                for &a in &order[..pos] {
                    x = &x + &s(k, a, i)?;
                }
            }
            JmKind::Odd => {
                for &a in &order[..pos] {
                    x = &x + &tau(k, a, i)?;
                }
            }
            JmKind::Nazarov => {
                for a in 1..i {
                    let sai = s(k, a, i)?;
                    x = &x + &sai;
                    x = &x + &(&sai * &clifford(k, &[a, i])?);
                }
            }
        }
        out[i - 1] = x;
    }
    Ok(out)
}

/// Sum of all permutations in a group.
pub fn group_sum(k: usize, perms: &[Perm]) -> HElement {
    HElement::from_terms(k, perms.iter().map(|&g| (HMonomial::new(CliffordWord::empty(), g), Scalar::one())))
}

/// `rho_t`: sum over the row stabilizer.
pub fn rho(t: &ShiftedTableau) -> HElement {
    group_sum(t.k(), &t.row_stabilizer())
}

pub fn rho_ordinary(t: &OrdinaryTableau) -> HElement {
    group_sum(t.k(), &t.row_stabilizer())
}

/// The factors `(entry, j(j+1)/2 - pi_entry^2)` of `kappa_t` in reading order.
pub fn kappa_factors(t: &ShiftedTableau) -> Vec<(usize, HElement)> {
    let k = t.k();
    let order = t.reading_order();
    let pis = jm_elements(k, &order, JmKind::Odd).expect("reading order is a permutation");
    order
        .iter()
        .map(|&i| {
            let j = t.column_of(i) as i64;
            let pi = &pis[i - 1];
            (i, &HElement::scalar(k, Scalar::from_frac(j * (j + 1), 2)) - &(pi * pi))
        })
        .collect()
}

/// `kappa_t = prod over the reading order of (j(j+1)/2 - pi_i^2)`.
pub fn kappa_shifted(t: &ShiftedTableau) -> HElement {
    kappa_factors(t).iter().fold(HElement::one(t.k()), |acc, (_, f)| &acc * f)
}

/// `e_t = kappa_t rho_t`.
pub fn e_t(t: &ShiftedTableau) -> HElement {
    &kappa_shifted(t) * &rho(t)
}

/// The antisymmetrizer form and the JM form of the classical Young
/// symmetrizer of an ordinary tableau.
pub fn classical_symmetrizers(t: &OrdinaryTableau) -> (HElement, HElement) {
    let k = t.k();
    let rho_t = rho_ordinary(t);
    let kappa = HElement::from_terms(
        k,
        t.column_stabilizer()
            .into_iter()
            .map(|g| (HMonomial::new(CliffordWord::empty(), g), Scalar::from_int(g.sign()))),
    );
    let order = t.reading_order();
    let xs = jm_elements(k, &order, JmKind::Classical).expect("reading order is a permutation");
    let kappa_jm = order.iter().fold(HElement::one(k), |acc, &i| {
        let j = t.column_of(i) as i64;
        &acc * &(&HElement::scalar(k, Scalar::from_int(j)) - &xs[i - 1])
    });
    (&kappa * &rho_t, &kappa_jm * &rho_t)
}

/// The idempotent `prod_{m>=2} 2/(m(m-1)) pi_m^2` built on the given entries,
/// taken in increasing order.
pub fn row_idempotent(k: usize, entries: &[usize]) -> Result<HElement> {
    let mut entries = entries.to_vec();
    entries.sort_unstable();
    let mut out = HElement::one(k);
    for m in 2..=entries.len() {
        let mut pi = HElement::zero(k);
        for a in 0..m - 1 {
            pi = &pi + &tau(k, entries[a], entries[m - 1])?;
        }
        let c = Scalar::from_frac(2, (m * (m - 1)) as i64);
        out = &out * &(&pi * &pi).scale(&c);
    }
    Ok(out)
}

/// The idempotent `e_k` on all of `1..k`.
pub fn spin_idempotent(k: usize) -> HElement {
    row_idempotent(k, &(1..=k).collect::<Vec<_>>()).expect("valid indices")
}

/// Product of the row idempotents of `t`.
pub fn sigma_t(t: &ShiftedTableau) -> HElement {
    t.rows()
        .iter()
        .fold(HElement::one(t.k()), |acc, row| &acc * &row_idempotent(t.k(), row).expect("valid row"))
}

/// Sum of `p_a` over row `i` or over absolute column `i` of `t`.
pub fn p_t_element(t: &ShiftedTableau, i: usize, mode: Mode) -> Result<HElement> {
    let entries = match mode {
        Mode::Row => {
            if i == 0 || i > t.rows().len() {
                return Err(AlgebraError::IndexOutOfRange { index: i, max: t.rows().len() });
            }
            t.rows()[i - 1].clone()
        }
        Mode::Column => {
            if i == 0 || i > t.num_columns() {
                return Err(AlgebraError::IndexOutOfRange { index: i, max: t.num_columns() });
            }
            t.column(i)
        }
    };
    let k = t.k();
    entries.iter().try_fold(HElement::zero(k), |acc, &a| Ok(&acc + &p(k, a)?))
}

/// Left multiplication by a fixed element, acting on coordinate vectors of
/// `H_k`.
pub struct LeftMultiplication {
    element: HElement,
    parity: Parity,
}

impl LeftMultiplication {
    pub fn new(element: HElement) -> Self {
        let parity = element.parity().unwrap_or(Parity::Even);
        LeftMultiplication { element, parity }
    }
}

impl LinearOperator for LeftMultiplication {
    fn apply(&self, v: &SparseVector) -> SparseVector {
        let k = self.element.k();
        (&self.element * &HElement::from_vector(k, v)).to_vector()
    }
    fn parity(&self) -> Parity {
        self.parity
    }
}

/// Left ideal `B x` where `B` is the subalgebra generated by `generators`
/// (the seed `x` itself is included).
pub fn left_closure(x: &HElement, generators: &[HElement]) -> Echelon {
    let ops: Vec<LeftMultiplication> = generators.iter().cloned().map(LeftMultiplication::new).collect();
    let dyn_ops: Vec<&dyn LinearOperator> = ops.iter().map(|o| o as &dyn LinearOperator).collect();
    span_closure_ops(algebra_dim(x.k()), &[x.to_vector()], &dyn_ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tab(s: &str) -> ShiftedTableau {
        s.parse().unwrap()
    }

    #[test]
    fn clifford_relations() {
        let (p1, p2) = (p(2, 1).unwrap(), p(2, 2).unwrap());
        assert_eq!(&p1 * &p1, HElement::scalar(2, Scalar::from_int(-1)));
        assert_eq!(&p2 * &p1, -&(&p1 * &p2));
        let t12 = tau(2, 1, 2).unwrap();
        assert_eq!(&t12 * &t12, HElement::one(2));
        assert_eq!(tau(2, 2, 1).unwrap(), -&t12);
        let s12 = s(2, 1, 2).unwrap();
        assert_eq!(&s12 * &s12, HElement::one(2));
        assert!(tau(2, 1, 3).is_err());
    }

    #[test]
    fn tau_text_form() {
        let t12 = tau(2, 1, 2).unwrap();
        assert_eq!(t12.len(), 2);
        assert_eq!(t12.to_string(), "1/2r2 * p[1] * perm(2 1) - 1/2r2 * p[2] * perm(2 1)");
    }

    #[test]
    fn permutation_moves_clifford_generators() {
        let k = 3;
        let g = HElement::perm(Perm::from_one_line(&[2, 3, 1]).unwrap());
        let gi = HElement::perm(Perm::from_one_line(&[3, 1, 2]).unwrap());
        for i in 1..=k {
            let conj = &(&g * &p(k, i).unwrap()) * &gi;
            assert_eq!(conj, p(k, [2, 3, 1][i - 1]).unwrap());
        }
    }

    #[test]
    fn relations_hold() {
        for k in 2..=5 {
            assert!(check_tau_relations(k).passed(), "k={k}");
        }
    }

    #[test]
    fn jm_examples() {
        let pis = jm_elements(3, &[1, 2, 3], JmKind::Odd).unwrap();
        assert!(pis[0].is_zero());
        assert_eq!(pis[1], tau(3, 1, 2).unwrap());
        assert_eq!(pis[2], &tau(3, 1, 3).unwrap() + &tau(3, 2, 3).unwrap());
        let xs = jm_elements(2, &[1, 2], JmKind::Classical).unwrap();
        assert_eq!(xs[1], s(2, 1, 2).unwrap());
        let naz = jm_elements(2, &[1, 2], JmKind::Nazarov).unwrap();
        let s12 = s(2, 1, 2).unwrap();
        assert_eq!(naz[1], &s12 + &(&s12 * &clifford(2, &[1, 2]).unwrap()));
        assert!(jm_elements(3, &[1, 1, 2], JmKind::Odd).is_err());
    }

    #[test]
    fn jm_commutation() {
        for k in 2..=5 {
            let order: Vec<usize> = (1..=k).collect();
            let xs = jm_elements(k, &order, JmKind::Classical).unwrap();
            let pis = jm_elements(k, &order, JmKind::Odd).unwrap();
            let naz = jm_elements(k, &order, JmKind::Nazarov).unwrap();
            for a in 0..k {
                for b in 0..k {
                    assert_eq!(&xs[a] * &xs[b], &xs[b] * &xs[a]);
                    if a != b {
                        assert!((&(&pis[a] * &pis[b]) + &(&pis[b] * &pis[a])).is_zero());
                    }
                }
                let rhs = &(&p(k, a + 1).unwrap() * &pis[a]).scale(&Scalar::sqrt2());
                assert_eq!(naz[a], *rhs);
            }
        }
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa_shifted(&tab("1,2")), HElement::scalar(2, Scalar::from_int(2)));
        assert_eq!(kappa_shifted(&tab("1")), HElement::one(1));
        let et = e_t(&tab("1,2"));
        assert_eq!(&et * &et, et.scale(&Scalar::from_int(4)));
    }

    #[test]
    fn classical_forms_are_proportional() {
        let t: OrdinaryTableau = "1,2".parse().unwrap();
        let (a, b) = classical_symmetrizers(&t);
        assert_eq!(a, &HElement::one(2) + &s(2, 1, 2).unwrap());
        // (2 - s)(1 + s) = 1 + s
        assert_eq!(b.ratio_to(&a), Some(Scalar::one()));
        let t: OrdinaryTableau = "1;2".parse().unwrap();
        let (a, b) = classical_symmetrizers(&t);
        assert_eq!(a, &HElement::one(2) - &s(2, 1, 2).unwrap());
        assert!(b.ratio_to(&a).is_some());
    }

    #[test]
    fn spin_idempotents() {
        assert_eq!(spin_idempotent(1), HElement::one(1));
        assert_eq!(spin_idempotent(2), HElement::one(2));
        for k in 3..=4 {
            let e = spin_idempotent(k);
            assert_eq!(&e * &e, e);
            assert_eq!(e.parity(), Some(Parity::Even));
        }
        let e = spin_idempotent(4);
        for (i, j, l) in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)] {
            let sum = &(&tau(4, i, j).unwrap() + &tau(4, j, l).unwrap()) + &tau(4, l, i).unwrap();
            assert!((&sum * &e).is_zero());
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_t(&tab("1,2;3")), HElement::one(3));
        assert_eq!(sigma_t(&tab("1")), HElement::one(1));
        let st = sigma_t(&tab("1,2,4;3"));
        assert_eq!(&st * &st, st);
    }

    #[test]
    fn p_t_examples() {
        let t = tab("1,2;3");
        let k = 3;
        assert_eq!(p_t_element(&t, 1, Mode::Row).unwrap(), &p(k, 1).unwrap() + &p(k, 2).unwrap());
        assert_eq!(p_t_element(&t, 2, Mode::Row).unwrap(), p(k, 3).unwrap());
        assert_eq!(p_t_element(&t, 2, Mode::Column).unwrap(), &p(k, 2).unwrap() + &p(k, 3).unwrap());
        assert!(p_t_element(&t, 3, Mode::Row).is_err());
    }

    #[test]
    fn basis_index_roundtrip() {
        for idx in 0..algebra_dim(3) {
            assert_eq!(HMonomial::from_basis_index(3, idx).basis_index(), idx);
        }
        let x = &tau(3, 1, 3).unwrap() + &s(3, 2, 3).unwrap();
        assert_eq!(HElement::from_vector(3, &x.to_vector()), x);
    }

    fn element(k: usize) -> impl Strategy<Value = HElement> {
        prop::collection::vec((0..algebra_dim(k), -3i64..4, -2i64..3), 1..5).prop_map(move |terms| {
            HElement::from_terms(
                k,
                terms.into_iter().map(|(i, a, b)| {
                    (HMonomial::from_basis_index(k, i), Scalar::new(a.into(), b.into()))
                }),
            )
        })
    }

    fn homogeneous(k: usize) -> impl Strategy<Value = HElement> {
        (prop::collection::vec((0..factorial(k), 0u16..(1 << k), 1i64..4), 1..4), any::<bool>()).prop_map(
            move |(terms, odd)| {
                HElement::from_terms(
                    k,
                    terms.into_iter().map(|(r, mut mask, c)| {
                        if (mask.count_ones() % 2 == 1) != odd {
                            mask ^= 1;
                        }
                        (HMonomial::new(CliffordWord::from_mask(mask), Perm::unrank(k, r)), Scalar::from_int(c))
                    }),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn associative_and_distributive(x in element(4), y in element(4), z in element(4)) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        }

        #[test]
        fn parity_is_multiplicative(x in homogeneous(5), y in homogeneous(5)) {
            let prod = &x * &y;
            if !prod.is_zero() {
                prop_assert_eq!(prod.parity(), Some(x.parity().unwrap() + y.parity().unwrap()));
            }
        }
    }
}
