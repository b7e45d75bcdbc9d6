//! The tensor superspace `W = V^{⊗k}` with `V` of dimension `(n, n)`, and the
//! supercommuting actions of `H_k` and of the generators `E_ij`, `F_ij` of
//! `q(n)`.
//!
//! Basis words are encoded as integers in base `2n`, one digit per tensor
//! factor with digit `2 (index - 1) + parity`, most significant first. This
//! makes the integer order the lexicographic order on `(index, parity)`
//! sequences.
//!
//! Sign conventions: a permutation moving odd letters past each other picks
//! up a factor `-1` per inverted pair of odd letters. The parity flip `P`
//! sends `e_j` to `e_j~` and `e_j~` to `-e_j`. Odd operators acting on factor
//! `a` pick up the parity of factors `1..a-1`.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::hecke::{HElement, HMonomial};
use crate::linalg::{Accumulator, Echelon, LinearOperator, Parity, SparseMatrix, SparseVector};
use crate::perm::MAX_K;
use crate::report::{ReportBuilder, VerificationReport};
use crate::scalar::Scalar;
use crate::tableau::{Mode, ShiftedTableau, StrictPartition};

/// Basis vector `e_i` (even) or `e_i~` (odd) of `V`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub index: usize,
    pub odd: bool,
}

impl Letter {
    pub fn even(index: usize) -> Self {
        Letter { index, odd: false }
    }

    pub fn odd(index: usize) -> Self {
        Letter { index, odd: true }
    }

    pub fn parity(self) -> Parity {
        Parity::from_bit(self.odd as usize)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.index, if self.odd { "~" } else { "" })
    }
}

/// Basis word of `W`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WWord(pub Vec<Letter>);

impl WWord {
    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.0.iter().filter(|l| l.odd).count())
    }
}

impl fmt::Display for WWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Packed word: digits `2 (index - 1) + parity`.
#[derive(Clone, Copy)]
struct Digits {
    len: usize,
    d: [u8; MAX_K],
}

/// Generator of `q(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QGen {
    E(usize, usize),
    F(usize, usize),
}

impl QGen {
    pub fn parity(self) -> Parity {
        match self {
            QGen::E(..) => Parity::Even,
            QGen::F(..) => Parity::Odd,
        }
    }
}

impl fmt::Display for QGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QGen::E(i, j) => write!(f, "E{i}{j}"),
            QGen::F(i, j) => write!(f, "F{i}{j}"),
        }
    }
}

/// The space `W` for fixed `n` and `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    n: usize,
    k: usize,
}

/// Element of `W` with its space attached, for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WVector {
    pub space: TensorSpace,
    pub coords: SparseVector,
}

impl fmt::Display for WVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.space.format(&self.coords))
    }
}

impl TensorSpace {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(AlgebraError::IndexOutOfRange { index: 0, max: 0 });
        }
        if k > MAX_K {
            return Err(AlgebraError::IndexOutOfRange { index: k, max: MAX_K });
        }
        Ok(TensorSpace { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        (2 * self.n).pow(self.k as u32)
    }

    fn digits(&self, index: usize) -> Digits {
        let base = 2 * self.n;
        let mut d = [0u8; MAX_K];
        let mut x = index;
        for pos in (0..self.k).rev() {
            d[pos] = (x % base) as u8;
            x /= base;
        }
        Digits { len: self.k, d }
    }

    fn pack(&self, digits: &Digits) -> usize {
        let base = 2 * self.n;
        digits.d[..digits.len].iter().fold(0, |acc, &x| acc * base + x as usize)
    }

    pub fn word(&self, index: usize) -> WWord {
        let d = self.digits(index);
        WWord(
            d.d[..self.k]
                .iter()
                .map(|&x| Letter { index: x as usize / 2 + 1, odd: x % 2 == 1 })
                .collect(),
        )
    }

    pub fn index(&self, word: &WWord) -> Result<usize> {
        if word.0.len() != self.k {
            return Err(AlgebraError::DimensionMismatch(format!("word of length {} in W with k = {}", word.0.len(), self.k)));
        }
        let mut d = Digits { len: self.k, d: [0; MAX_K] };
        for (pos, l) in word.0.iter().enumerate() {
            if l.index == 0 || l.index > self.n {
                return Err(AlgebraError::IndexOutOfRange { index: l.index, max: self.n });
            }
            d.d[pos] = (2 * (l.index - 1) + l.odd as usize) as u8;
        }
        Ok(self.pack(&d))
    }

    pub fn basis_vector(&self, word: &WWord) -> Result<SparseVector> {
        Ok(SparseVector::unit(self.dim(), self.index(word)?))
    }

    /// Parity of a basis word.
    pub fn parity(&self, index: usize) -> Parity {
        let d = self.digits(index);
        Parity::from_bit(d.d[..self.k].iter().filter(|&&x| x % 2 == 1).count())
    }

    /// Index counts of a basis word (the weight).
    pub fn weight(&self, index: usize) -> Vec<usize> {
        let d = self.digits(index);
        let mut w = vec![0; self.n];
        for &x in &d.d[..self.k] {
            w[x as usize / 2] += 1;
        }
        w
    }

    pub fn format(&self, v: &SparseVector) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        v.iter().map(|(i, c)| format!("{c} * {}", self.word(i))).collect::<Vec<_>>().join(" + ")
    }

    pub fn wrap(&self, coords: SparseVector) -> WVector {
        WVector { space: *self, coords }
    }

    /// `p_S sigma` applied to a basis word: `(negative, word)`.
    fn monomial_on_word(&self, m: &HMonomial, index: usize) -> (bool, usize) {
        let src = self.digits(index);
        let mut d = Digits { len: self.k, d: [0; MAX_K] };
        let mut neg = false;
        // permutation: letter at a moves to sigma(a)
        for a in 0..self.k {
            d.d[m.perm.at(a)] = src.d[a];
        }
        for a in 0..self.k {
            if src.d[a] % 2 == 1 {
                for b in a + 1..self.k {
                    if src.d[b] % 2 == 1 && m.perm.at(a) > m.perm.at(b) {
                        neg = !neg;
                    }
                }
            }
        }
        // Clifford word p_s1 ... p_sm: rightmost factor acts first.
        let mask = m.clifford.mask();
        for a in (0..self.k).rev() {
            if mask & (1 << a) != 0 {
                let prefix = d.d[..a].iter().filter(|&&x| x % 2 == 1).count();
                if prefix % 2 == 1 {
                    neg = !neg;
                }
                if d.d[a] % 2 == 1 {
                    neg = !neg;
                }
                d.d[a] ^= 1;
            }
        }
        (neg, self.pack(&d))
    }

    /// Action of an `H_k` element.
    pub fn act_h(&self, x: &HElement, v: &SparseVector) -> SparseVector {
        assert_eq!(x.k(), self.k, "element rank does not match k");
        let mut acc = Accumulator::new();
        for (m, c) in x.terms() {
            for (i, y) in v.iter() {
                let (neg, j) = self.monomial_on_word(m, i);
                let coeff = c * y;
                acc.add(j, &if neg { -coeff } else { coeff });
            }
        }
        acc.into_vector(self.dim())
    }

    /// Action of a single monomial (cheaper than [`TensorSpace::act_h`]).
    pub fn act_monomial(&self, m: &HMonomial, v: &SparseVector) -> SparseVector {
        let entries = v.iter().map(|(i, y)| {
            let (neg, j) = self.monomial_on_word(m, i);
            (j, if neg { -y } else { y.clone() })
        });
        SparseVector::from_entries(self.dim(), entries)
    }

    fn check_q(&self, g: QGen) -> Result<()> {
        let (QGen::E(i, j) | QGen::F(i, j)) = g;
        for x in [i, j] {
            if x == 0 || x > self.n {
                return Err(AlgebraError::IndexOutOfRange { index: x, max: self.n });
            }
        }
        Ok(())
    }

    /// Action of `E_ij` or `F_ij`.
    pub fn act_q(&self, g: QGen, v: &SparseVector) -> Result<SparseVector> {
        self.check_q(g)?;
        Ok(self.act_q_unchecked(g, v))
    }

    fn act_q_unchecked(&self, g: QGen, v: &SparseVector) -> SparseVector {
        let (QGen::E(i, j) | QGen::F(i, j)) = g;
        let (ti, sj) = ((i - 1) as u8, (j - 1) as u8);
        let mut acc = Accumulator::new();
        for (w, y) in v.iter() {
            let src = self.digits(w);
            let mut prefix_odd = false;
            for a in 0..self.k {
                let x = src.d[a];
                if x / 2 == sj {
                    let mut d = src;
                    let odd = x % 2 == 1;
                    let neg = match g {
                        QGen::E(..) => {
                            d.d[a] = 2 * ti + odd as u8;
                            false
                        }
                        QGen::F(..) => {
                            d.d[a] = 2 * ti + (!odd) as u8;
                            prefix_odd
                        }
                    };
                    acc.add(self.pack(&d), &if neg { -y } else { y.clone() });
                }
                if x % 2 == 1 {
                    prefix_odd = !prefix_odd;
                }
            }
        }
        acc.into_vector(self.dim())
    }

    /// All `q(n)` generators `E_ij`, `F_ij`.
    pub fn q_generators(&self) -> Vec<QGen> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                out.push(QGen::E(i, j));
                out.push(QGen::F(i, j));
            }
        }
        out
    }

    /// Raising generators `E_ij`, `F_ij` with `i < j`.
    pub fn raising(&self) -> Vec<QGen> {
        self.q_generators().into_iter().filter(|g| matches!(g, QGen::E(i, j) | QGen::F(i, j) if i < j)).collect()
    }

    /// Lowering generators (`i > j`) together with the Cartan `F_ii`.
    pub fn lowering_and_cartan(&self) -> Vec<QGen> {
        self.q_generators()
            .into_iter()
            .filter(|g| match *g {
                QGen::E(i, j) => i > j,
                QGen::F(i, j) => i >= j,
            })
            .collect()
    }

    pub fn q_operator(&self, g: QGen) -> Result<QOperator> {
        self.check_q(g)?;
        Ok(QOperator { space: *self, gen: g })
    }

    pub fn h_operator(&self, x: HElement) -> HOperator {
        assert_eq!(x.k(), self.k);
        HOperator { space: *self, parity: x.parity().unwrap_or(Parity::Even), element: x }
    }

    /// Word indices of weight `counts` (length `n`), in increasing order.
    pub fn weight_indices(&self, counts: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.k);
        let mut remaining = counts.to_vec();
        remaining.resize(self.n, 0);
        fn rec(space: &TensorSpace, remaining: &mut Vec<usize>, cur: &mut Vec<u8>, out: &mut Vec<usize>) {
            if cur.len() == space.k {
                let mut d = Digits { len: space.k, d: [0; MAX_K] };
                d.d[..space.k].copy_from_slice(cur);
                out.push(space.pack(&d));
                return;
            }
            for digit in 0..2 * space.n {
                let idx = digit / 2;
                if remaining[idx] > 0 {
                    remaining[idx] -= 1;
                    cur.push(digit as u8);
                    rec(space, remaining, cur, out);
                    cur.pop();
                    remaining[idx] += 1;
                }
            }
        }
        if counts.iter().sum::<usize>() == self.k && counts.len() <= self.n {
            rec(self, &mut remaining, &mut cur, &mut out);
        }
        out
    }

    fn check_weight(&self, lambda: &StrictPartition) -> Result<()> {
        if lambda.size() != self.k {
            return Err(AlgebraError::InconsistentWeight(format!("{lambda} is not a partition of k = {}", self.k)));
        }
        if lambda.len() > self.n {
            return Err(AlgebraError::ShapeTooTall { rows: lambda.len(), n: self.n });
        }
        Ok(())
    }

    /// Basis words of the weight space `M^lambda`.
    pub fn weight_space(&self, lambda: &StrictPartition) -> Result<Vec<WWord>> {
        self.check_weight(lambda)?;
        Ok(self.weight_indices(lambda.parts()).into_iter().map(|i| self.word(i)).collect())
    }

    /// Highest weight vectors of the given weight: the common kernel of the
    /// raising generators on the weight space, computed separately on even
    /// and odd words so the resulting basis is homogeneous.
    pub fn highest_weight_vectors(&self, counts: &[usize]) -> Echelon {
        let words = self.weight_indices(counts);
        self.highest_weight_in(&words.iter().map(|&w| SparseVector::unit(self.dim(), w)).collect::<Vec<_>>())
    }

    /// Highest weight vectors inside the span of the given homogeneous
    /// vectors (all assumed to have the same weight).
    pub fn highest_weight_in(&self, vectors: &[SparseVector]) -> Echelon {
        let raising = self.raising();
        let mut out = Echelon::new(self.dim());
        for parity in [Parity::Even, Parity::Odd] {
            let part: Vec<&SparseVector> = vectors
                .iter()
                .filter(|v| v.lead().is_some_and(|(i, _)| self.parity(i) == parity))
                .collect();
            if part.is_empty() {
                continue;
            }
            // Columns: images of each vector under all raising generators,
            // stacked into one long vector.
            let block = self.dim();
            let columns: Vec<SparseVector> = part
                .iter()
                .map(|v| {
                    let entries = raising.iter().enumerate().flat_map(|(g, &gen)| {
                        self.act_q_unchecked(gen, v).into_entries().into_iter().map(move |(i, c)| (g * block + i, c))
                    });
                    SparseVector::from_entries(block * raising.len().max(1), entries)
                })
                .collect();
            let m = SparseMatrix::from_columns(block * raising.len().max(1), &columns);
            let (_, kernel) = crate::linalg::rank_kernel(&m);
            for y in kernel {
                let mut acc = Accumulator::new();
                for (c, coeff) in y.iter() {
                    acc.add_scaled(coeff, part[c]);
                }
                out.insert(&acc.into_vector(self.dim()));
            }
        }
        out
    }

    /// `R^lambda`: highest weight vectors of weight `lambda`.
    pub fn highest_weight_space(&self, lambda: &StrictPartition) -> Result<Echelon> {
        self.check_weight(lambda)?;
        Ok(self.highest_weight_vectors(lambda.parts()))
    }

    /// `v_t`: even letter `e_row(a)` at every position `a`.
    pub fn vt(&self, t: &ShiftedTableau) -> Result<SparseVector> {
        if t.k() != self.k {
            return Err(AlgebraError::InconsistentWeight(format!("tableau of size {} in W with k = {}", t.k(), self.k)));
        }
        if t.rows().len() > self.n {
            return Err(AlgebraError::ShapeTooTall { rows: t.rows().len(), n: self.n });
        }
        let word = WWord((1..=self.k).map(|a| Letter::even(t.row_of(a))).collect());
        self.basis_vector(&word)
    }

    /// The projector `prod_i (1 - p_t^i F_ii / lambda_i) / 2` applied to `v`.
    pub fn mt_projector(&self, t: &ShiftedTableau, mode: Mode, v: &SparseVector) -> Result<SparseVector> {
        let lambda = t.shape().parts();
        let mut out = v.clone();
        for (i, &li) in lambda.iter().enumerate() {
            let pti = crate::hecke::p_t_element(t, i + 1, mode)?;
            let fv = self.act_q(QGen::F(i + 1, i + 1), &out)?;
            let pfv = self.act_h(&pti, &fv);
            out = out.add_scaled(&Scalar::from_frac(-1, li as i64), &pfv).scale(&Scalar::from_frac(1, 2));
        }
        Ok(out)
    }

    /// `M^t`: image of the projector on `M^lambda`.
    pub fn mt_space(&self, t: &ShiftedTableau, mode: Mode) -> Result<Echelon> {
        self.check_weight(t.shape())?;
        let mut e = Echelon::new(self.dim());
        for w in self.weight_indices(t.shape().parts()) {
            e.insert(&self.mt_projector(t, mode, &SparseVector::unit(self.dim(), w))?);
        }
        Ok(e)
    }

    /// Smallest `q(n)`-submodule containing `seed`, using lowering
    /// generators and the Cartan `F_ii` (enough when the seed consists of
    /// highest weight vectors).
    pub fn q_span(&self, seed: &[SparseVector]) -> Echelon {
        self.closure(seed, &self.lowering_and_cartan())
    }

    /// Closure of `seed` under the given `q(n)` generators.
    pub fn closure(&self, seed: &[SparseVector], gens: &[QGen]) -> Echelon {
        let ops: Vec<QOperator> = gens.iter().map(|&g| QOperator { space: *self, gen: g }).collect();
        let dyn_ops: Vec<&dyn LinearOperator> = ops.iter().map(|o| o as &dyn LinearOperator).collect();
        crate::linalg::span_closure_ops(self.dim(), seed, &dyn_ops)
    }

    /// Smallest `H_k`-submodule containing `seed`.
    pub fn h_span(&self, seed: &[SparseVector]) -> Echelon {
        let ops: Vec<HOperator> =
            crate::hecke::h_generators(self.k).into_iter().map(|(x, _)| self.h_operator(x)).collect();
        let dyn_ops: Vec<&dyn LinearOperator> = ops.iter().map(|o| o as &dyn LinearOperator).collect();
        crate::linalg::span_closure_ops(self.dim(), seed, &dyn_ops)
    }

    /// Smallest `A_k`-submodule containing `seed` (not necessarily unital).
    pub fn a_span(&self, seed: &[SparseVector]) -> Echelon {
        let ops: Vec<HOperator> = crate::hecke::a_generators(self.k).into_iter().map(|x| self.h_operator(x)).collect();
        let dyn_ops: Vec<&dyn LinearOperator> = ops.iter().map(|o| o as &dyn LinearOperator).collect();
        crate::linalg::span_closure_ops(self.dim(), seed, &dyn_ops)
    }
}

/// `H_k` element acting on `W`.
pub struct HOperator {
    space: TensorSpace,
    element: HElement,
    parity: Parity,
}

impl LinearOperator for HOperator {
    fn apply(&self, v: &SparseVector) -> SparseVector {
        self.space.act_h(&self.element, v)
    }
    fn parity(&self) -> Parity {
        self.parity
    }
}

/// `q(n)` generator acting on `W`.
pub struct QOperator {
    space: TensorSpace,
    gen: QGen,
}

impl LinearOperator for QOperator {
    fn apply(&self, v: &SparseVector) -> SparseVector {
        self.space.act_q_unchecked(self.gen, v)
    }
    fn parity(&self) -> Parity {
        self.gen.parity()
    }
}

/// Checks `x h = (-1)^(p(x) p(h)) h x` on every basis word for all
/// generators `s_ij`, `p_i`, `tau_ij` and all `E_ij`, `F_ij`.
pub fn howe_supercommute_check(n: usize, k: usize) -> VerificationReport {
    let mut r = ReportBuilder::new("howe_duality").param("n", n).param("k", k);
    let space = match TensorSpace::new(n, k) {
        Ok(s) => s,
        Err(e) => {
            r.fail("arguments", e);
            return r.finish();
        }
    };
    let mut hgens: Vec<(String, HElement)> = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            hgens.push((format!("s{i}{j}"), crate::hecke::s(k, i, j).expect("valid")));
            hgens.push((format!("tau{i}{j}"), crate::hecke::tau(k, i, j).expect("valid")));
        }
        hgens.push((format!("p{i}"), crate::hecke::p(k, i).expect("valid")));
    }
    let mut pairs = 0;
    'outer: for (hname, h) in &hgens {
        let hp = h.parity().expect("homogeneous generator");
        for g in space.q_generators() {
            let sign = if hp.koszul(g.parity()) { Scalar::from_int(-1) } else { Scalar::one() };
            pairs += 1;
            for w in 0..space.dim() {
                let v = SparseVector::unit(space.dim(), w);
                let lhs = space.act_q_unchecked(g, &space.act_h(h, &v));
                let rhs = space.act_h(h, &space.act_q_unchecked(g, &v)).scale(&sign);
                if !r.check(lhs == rhs, "supercommutation", format!("{g} with {hname} on {}", space.word(w))) {
                    break 'outer;
                }
            }
        }
    }
    r.witness("generator pairs", pairs);
    r.witness("basis words", space.dim());
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{p, s, tau};

    fn word(space: &TensorSpace, letters: &[(usize, bool)]) -> SparseVector {
        space
            .basis_vector(&WWord(letters.iter().map(|&(i, odd)| Letter { index: i, odd }).collect()))
            .unwrap()
    }

    #[test]
    fn koszul_permutation_signs() {
        let sp = TensorSpace::new(2, 2).unwrap();
        let s12 = s(2, 1, 2).unwrap();
        assert_eq!(sp.act_h(&s12, &word(&sp, &[(1, false), (1, true)])), word(&sp, &[(1, true), (1, false)]));
        assert_eq!(
            sp.act_h(&s12, &word(&sp, &[(1, true), (2, true)])),
            word(&sp, &[(2, true), (1, true)]).neg()
        );
    }

    #[test]
    fn parity_flip_squares_to_minus_one() {
        let sp = TensorSpace::new(2, 3).unwrap();
        for i in 1..=3 {
            let pi = p(3, i).unwrap();
            for w in 0..sp.dim() {
                let v = SparseVector::unit(sp.dim(), w);
                assert_eq!(sp.act_h(&pi, &sp.act_h(&pi, &v)), v.neg());
            }
        }
    }

    #[test]
    fn q_examples() {
        let sp = TensorSpace::new(2, 2).unwrap();
        let v = word(&sp, &[(1, false), (2, false)]);
        assert_eq!(sp.act_q(QGen::E(1, 1), &v).unwrap(), v);
        let sp1 = TensorSpace::new(1, 1).unwrap();
        let e1 = word(&sp1, &[(1, false)]);
        let f = sp1.act_q(QGen::F(1, 1), &e1).unwrap();
        assert_eq!(f, word(&sp1, &[(1, true)]));
        assert_eq!(sp1.act_q(QGen::F(1, 1), &f).unwrap(), e1);
        assert!(sp.act_q(QGen::E(1, 3), &v).is_err());
    }

    #[test]
    fn odd_square_is_cartan() {
        let sp = TensorSpace::new(2, 3).unwrap();
        for i in 1..=2 {
            for w in 0..sp.dim() {
                let v = SparseVector::unit(sp.dim(), w);
                let ff = sp.act_q(QGen::F(i, i), &sp.act_q(QGen::F(i, i), &v).unwrap()).unwrap();
                assert_eq!(ff, sp.act_q(QGen::E(i, i), &v).unwrap());
            }
        }
    }

    #[test]
    fn relations_in_representation() {
        let k = 4;
        let sp = TensorSpace::new(2, k).unwrap();
        let check = |x: &HElement, y: &HElement| {
            for w in (0..sp.dim()).step_by(7) {
                let v = SparseVector::unit(sp.dim(), w);
                assert_eq!(sp.act_h(x, &sp.act_h(y, &v)), sp.act_h(&(x * y), &v));
            }
        };
        for i in 1..=k {
            for j in 1..=k {
                if i != j {
                    check(&s(k, i, j).unwrap(), &p(k, i).unwrap());
                    check(&tau(k, i, j).unwrap(), &tau(k, j, i).unwrap());
                    check(&p(k, j).unwrap(), &s(k, i, j).unwrap());
                }
                check(&p(k, i).unwrap(), &p(k, j).unwrap());
            }
        }
        let tau12 = tau(k, 1, 2).unwrap();
        let tau23 = tau(k, 2, 3).unwrap();
        check(&(&tau12 * &tau23), &tau12);
    }

    #[test]
    fn howe_small() {
        for (n, k) in [(1, 2), (2, 2), (2, 3)] {
            assert!(howe_supercommute_check(n, k).passed());
        }
    }

    #[test]
    fn weight_spaces() {
        let sp = TensorSpace::new(2, 3).unwrap();
        assert_eq!(sp.weight_space(&"2,1".parse().unwrap()).unwrap().len(), 24);
        let sp1 = TensorSpace::new(1, 4).unwrap();
        assert_eq!(sp1.weight_space(&"4".parse().unwrap()).unwrap().len(), 16);
        let sp = TensorSpace::new(2, 2).unwrap();
        assert_eq!(sp.weight_indices(&[1, 1]).len(), 8);
        assert!(sp.weight_space(&"3".parse().unwrap()).is_err());
        let sp = TensorSpace::new(1, 3).unwrap();
        assert!(matches!(sp.weight_space(&"2,1".parse().unwrap()), Err(AlgebraError::ShapeTooTall { .. })));
    }

    #[test]
    fn single_row_highest_weight_space_is_everything() {
        let sp = TensorSpace::new(1, 3).unwrap();
        assert_eq!(sp.highest_weight_space(&"3".parse().unwrap()).unwrap().rank(), 8);
    }

    #[test]
    fn vt_examples() {
        let sp = TensorSpace::new(2, 3).unwrap();
        let t: ShiftedTableau = "1,2;3".parse().unwrap();
        let v = sp.vt(&t).unwrap();
        assert_eq!(sp.format(&v), "1 * [1 1 2]");
        assert_eq!(sp.act_h(&s(3, 1, 2).unwrap(), &v), v);
        assert_eq!(sp.act_q(QGen::E(1, 1), &v).unwrap(), v.scale(&Scalar::from_int(2)));
        assert!(TensorSpace::new(1, 3).unwrap().vt(&t).is_err());
    }

    #[test]
    fn mt_projector_is_idempotent() {
        let sp = TensorSpace::new(2, 3).unwrap();
        let t: ShiftedTableau = "1,2;3".parse().unwrap();
        for w in sp.weight_indices(&[2, 1]) {
            let v = SparseVector::unit(sp.dim(), w);
            let e1 = sp.mt_projector(&t, Mode::Row, &v).unwrap();
            assert_eq!(sp.mt_projector(&t, Mode::Row, &e1).unwrap(), e1);
        }
        let mt = sp.mt_space(&t, Mode::Row).unwrap();
        assert!(mt.contains(&sp.vt(&t).unwrap()));
    }
}
