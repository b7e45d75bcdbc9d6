//! Exact sparse linear algebra over Q(sqrt 2).
//!
//! Everything here works on [`SparseVector`]s with explicit dimension. The
//! workhorse is [`Echelon`], an incrementally maintained reduced row echelon
//! form, which backs rank/kernel computations, span closures and the
//! supercommutant solver.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::ops::Add;

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

/// Z/2 grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Self {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Koszul sign `(-1)^(self * other)`, true when negative.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Sparse vector with sorted indices and no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim, "unit index {index} outside dimension {dim}");
        SparseVector { dim, entries: vec![(index, Scalar::one())] }
    }

    /// Builds a vector from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_entries<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut acc = Accumulator::new();
        for (i, v) in entries {
            acc.add(i, &v);
        }
        acc.into_vector(dim)
    }

    /// Builds from entries already sorted by index without duplicates.
    pub fn from_sorted(dim: usize, entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(i, v)| *i < dim && !v.is_zero()));
        SparseVector { dim, entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        SparseVector { dim: values.len(), entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn value(&self, index: usize) -> Scalar {
        self.get(index).cloned().unwrap_or_default()
    }

    /// First nonzero entry.
    pub fn lead(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SparseVector {
        if c.is_zero() {
            return SparseVector::zero(self.dim);
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVector {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVector {
        SparseVector {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVector) -> SparseVector {
        assert_eq!(self.dim, other.dim, "dimension mismatch in add_scaled");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let mut s = x.clone();
                        s.add_mul(c, y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVector { dim: self.dim, entries: out }
    }

    pub fn add(&self, other: &SparseVector) -> SparseVector {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseVector) -> SparseVector {
        self.add_scaled(&Scalar::from_int(-1), other)
    }

    pub fn dot(&self, other: &SparseVector) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc.add_mul(x, y);
                a.next();
                b.next();
            }
        }
        acc
    }

    /// Returns `c` with `self = c * other`, if the vectors are proportional
    /// and `other` is nonzero.
    pub fn ratio_to(&self, other: &SparseVector) -> Option<Scalar> {
        let (j, y) = other.lead()?;
        let c = self.value(j).div(y).ok()?;
        if &other.scale(&c) == self {
            Some(c)
        } else {
            None
        }
    }
}

impl fmt::Debug for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; ", self.dim)?;
        for (n, (i, v)) in self.entries.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}:{v}")?;
        }
        write!(f, "]")
    }
}

/// Sum of many scaled sparse contributions.
#[derive(Default)]
pub struct Accumulator {
    map: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator { map: BTreeMap::new() }
    }

    pub fn add(&mut self, index: usize, value: &Scalar) {
        if value.is_zero() {
            return;
        }
        *self.map.entry(index).or_default() += value;
    }

    pub fn add_mul(&mut self, index: usize, x: &Scalar, y: &Scalar) {
        self.map.entry(index).or_default().add_mul(x, y);
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &SparseVector) {
        for (i, x) in v.iter() {
            self.add_mul(i, c, x);
        }
    }

    pub fn into_vector(self, dim: usize) -> SparseVector {
        let entries: Vec<_> = self.map.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if let Some((i, _)) = entries.last() {
            assert!(*i < dim, "index {i} outside dimension {dim}");
        }
        SparseVector { dim, entries }
    }
}

/// Row-major sparse matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![SparseVector::zero(ncols); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { nrows: n, ncols: n, rows: (0..n).map(|i| SparseVector::unit(n, i)).collect() }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVector>) -> Self {
        assert!(rows.iter().all(|r| r.dim() == ncols));
        SparseMatrix { nrows: rows.len(), ncols, rows }
    }

    pub fn from_columns(nrows: usize, columns: &[SparseVector]) -> Self {
        let mut accs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), nrows);
            for (i, v) in col.iter() {
                accs[i].push((j, v.clone()));
            }
        }
        let ncols = columns.len();
        SparseMatrix {
            nrows,
            ncols,
            rows: accs.into_iter().map(|e| SparseVector::from_sorted(ncols, e)).collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        SparseMatrix {
            nrows: rows.len(),
            ncols,
            rows: rows.iter().map(|r| SparseVector::from_dense(r)).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.rows[i].value(j)
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.ncols, &self.rows)
    }

    pub fn columns(&self) -> Vec<SparseVector> {
        self.transpose().rows
    }

    pub fn mul_vec(&self, v: &SparseVector) -> SparseVector {
        assert_eq!(v.dim(), self.ncols, "matrix-vector dimension mismatch");
        let entries = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let d = r.dot(v);
                (!d.is_zero()).then_some((i, d))
            })
            .collect();
        SparseVector::from_sorted(self.nrows, entries)
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "matrix product dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = Accumulator::new();
                for (k, x) in r.iter() {
                    acc.add_scaled(x, &other.rows[k]);
                }
                acc.into_vector(other.ncols)
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: other.ncols, rows }
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    pub fn add_scaled(&self, c: &Scalar, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.add_scaled(c, b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVector::is_zero)
    }

    /// Flattens row-major into a vector of length `nrows * ncols`.
    pub fn flatten(&self) -> SparseVector {
        let dim = self.nrows * self.ncols;
        let entries = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i * self.ncols + j, v.clone())))
            .collect();
        SparseVector::from_sorted(dim, entries)
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} matrix", self.nrows, self.ncols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

/// A homogeneous linear map on some ambient coordinate space.
pub trait LinearOperator {
    fn apply(&self, v: &SparseVector) -> SparseVector;
    fn parity(&self) -> Parity;
}

impl LinearOperator for (SparseMatrix, Parity) {
    fn apply(&self, v: &SparseVector) -> SparseVector {
        self.0.mul_vec(v)
    }
    fn parity(&self) -> Parity {
        self.1
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// Rows are kept fully reduced: every row has a leading 1 at its pivot and
/// zeros in all other pivot columns. With tracking enabled, each row also
/// records its expression as a combination of the accepted input vectors
/// (numbered in order of acceptance).
#[derive(Clone)]
pub struct Echelon {
    dim: usize,
    rows: Vec<SparseVector>,
    pivots: Vec<usize>,
    row_of_pivot: BTreeMap<usize, usize>,
    combos: Option<Vec<SparseVector>>,
}

/// Upper bound for the number of tracked inputs.
const TRACK_DIM: usize = 1 << 40;

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), pivots: Vec::new(), row_of_pivot: BTreeMap::new(), combos: None }
    }

    pub fn tracked(dim: usize) -> Self {
        Echelon { combos: Some(Vec::new()), ..Echelon::new(dim) }
    }

    pub fn from_vectors<'a, I>(dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVector>,
    {
        let mut e = Echelon::new(dim);
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows sorted by pivot column (canonical for the spanned space).
    pub fn basis(&self) -> Vec<SparseVector> {
        self.row_of_pivot.values().map(|&r| self.rows[r].clone()).collect()
    }

    /// Pivot columns in ascending order, matching [`Echelon::basis`].
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.row_of_pivot.keys().copied().collect()
    }

    /// Residual of `v` after reduction, together with the (row, coefficient)
    /// pairs that were subtracted.
    fn reduce(&self, v: &SparseVector) -> (SparseVector, Vec<(usize, Scalar)>) {
        assert_eq!(v.dim(), self.dim, "vector dimension {} vs echelon {}", v.dim(), self.dim);
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(c, x)| self.row_of_pivot.get(&c).map(|&r| (r, x.clone())))
            .collect();
        if hits.is_empty() {
            return (v.clone(), hits);
        }
        if hits.len() == 1 {
            let (r, c) = &hits[0];
            let res = v.add_scaled(&-c, &self.rows[*r]);
            return (res, hits);
        }
        let mut acc = Accumulator::new();
        for (c, x) in v.iter() {
            if !self.row_of_pivot.contains_key(&c) {
                acc.add(c, x);
            }
        }
        for (r, c) in &hits {
            let neg = -c;
            for (col, x) in self.rows[*r].iter() {
                if col != self.pivots[*r] {
                    acc.add_mul(col, &neg, x);
                }
            }
        }
        (acc.into_vector(self.dim), hits)
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts `v`; returns the index of the new row if `v` was independent.
    pub fn insert(&mut self, v: &SparseVector) -> Option<usize> {
        self.insert_or_coordinates(v).ok()
    }

    /// Inserts `v` if independent (returning the new row index), otherwise
    /// returns its coordinates relative to the accepted inputs. Without
    /// tracking the coordinates are empty.
    pub fn insert_or_coordinates(&mut self, v: &SparseVector) -> std::result::Result<usize, SparseVector> {
        let (res, hits) = self.reduce(v);
        if res.is_zero() {
            let coords = match &self.combos {
                Some(combos) => {
                    let mut acc = Accumulator::new();
                    for (r, c) in &hits {
                        acc.add_scaled(c, &combos[*r]);
                    }
                    acc.into_vector(TRACK_DIM)
                }
                None => SparseVector::zero(TRACK_DIM),
            };
            return Err(coords);
        }
        let (pivot, lead) = res.lead().map(|(p, l)| (p, l.clone())).expect("nonzero residual");
        let inv = lead.inverse().expect("nonzero pivot");
        let row = res.scale(&inv);
        let new_index = self.rows.len();
        let combo = self.combos.as_ref().map(|combos| {
            let mut acc = Accumulator::new();
            acc.add(new_index, &Scalar::one());
            for (r, c) in &hits {
                acc.add_scaled(&-c, &combos[*r]);
            }
            acc.into_vector(TRACK_DIM).scale(&inv)
        });
        for r in 0..self.rows.len() {
            if let Some(b) = self.rows[r].get(pivot).cloned() {
                let nb = -&b;
                self.rows[r] = self.rows[r].add_scaled(&nb, &row);
                if let (Some(combos), Some(c)) = (self.combos.as_mut(), combo.as_ref()) {
                    combos[r] = combos[r].add_scaled(&nb, c);
                }
            }
        }
        self.rows.push(row);
        self.pivots.push(pivot);
        self.row_of_pivot.insert(pivot, new_index);
        if let (Some(combos), Some(c)) = (self.combos.as_mut(), combo) {
            combos.push(c);
        }
        Ok(new_index)
    }

    /// Coordinates of `v` in the basis returned by [`Echelon::basis`], or
    /// `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVector) -> Option<SparseVector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivot_coordinates(v))
    }

    /// Reads off basis coordinates at the pivot columns, assuming `v` lies in
    /// the span.
    pub fn pivot_coordinates(&self, v: &SparseVector) -> SparseVector {
        let entries = self
            .row_of_pivot
            .keys()
            .enumerate()
            .filter_map(|(k, p)| v.get(*p).map(|x| (k, x.clone())))
            .collect();
        SparseVector::from_sorted(self.rank(), entries)
    }

    /// Coordinates relative to the accepted inputs (tracking only).
    pub fn input_coordinates(&self, v: &SparseVector) -> Option<SparseVector> {
        let combos = self.combos.as_ref()?;
        let (res, hits) = self.reduce(v);
        if !res.is_zero() {
            return None;
        }
        let mut acc = Accumulator::new();
        for (r, c) in &hits {
            acc.add_scaled(c, &combos[*r]);
        }
        Some(acc.into_vector(self.rank()))
    }

    /// Basis of the solution space of `row . x = 0` for all rows.
    pub fn kernel(&self) -> Vec<SparseVector> {
        let mut per_free: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for c in 0..self.dim {
            if !self.row_of_pivot.contains_key(&c) {
                per_free.insert(c, vec![(c, Scalar::one())]);
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            let p = self.pivots[r];
            for (c, x) in row.iter() {
                if c != p {
                    per_free.get_mut(&c).expect("non-pivot column").push((p, -x));
                }
            }
        }
        per_free
            .into_values()
            .map(|e| SparseVector::from_entries(self.dim, e))
            .collect()
    }
}

/// Rank and kernel basis of a matrix by exact elimination.
pub fn rank_kernel(m: &SparseMatrix) -> (usize, Vec<SparseVector>) {
    let e = Echelon::from_vectors(m.ncols(), m.rows());
    (e.rank(), e.kernel())
}

pub fn rank(vectors: &[SparseVector]) -> usize {
    match vectors.first() {
        None => 0,
        Some(v) => Echelon::from_vectors(v.dim(), vectors).rank(),
    }
}

/// Smallest subspace containing `seed` and closed under every operator.
pub fn span_closure_ops(dim: usize, seed: &[SparseVector], ops: &[&dyn LinearOperator]) -> Echelon {
    let mut e = Echelon::new(dim);
    let mut queue: VecDeque<SparseVector> = VecDeque::new();
    for v in seed {
        if e.insert(v).is_some() {
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for op in ops {
            let w = op.apply(&v);
            if e.insert(&w).is_some() {
                queue.push_back(w);
            }
        }
    }
    e
}

/// Basis of the smallest product-closed subspace containing `seed`.
///
/// Closure is taken under left multiplication by the seed elements, which
/// yields the span of all nonempty products of seeds.
pub fn span_closure<F>(dim: usize, seed: &[SparseVector], product: F) -> Vec<SparseVector>
where
    F: Fn(&SparseVector, &SparseVector) -> SparseVector,
{
    let mut e = Echelon::new(dim);
    let mut gens = Vec::new();
    let mut queue = VecDeque::new();
    for v in seed {
        if e.insert(v).is_some() {
            gens.push(v.clone());
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w = product(g, &v);
            if e.insert(&w).is_some() {
                queue.push_back(w);
            }
        }
    }
    e.basis()
}

/// Homogeneous basis of the supercommutant, as matrices in the coordinates
/// of the subspace basis.
#[derive(Clone, Debug)]
pub struct Supercommutant {
    pub even: Vec<SparseMatrix>,
    pub odd: Vec<SparseMatrix>,
}

impl Supercommutant {
    pub fn dimension(&self) -> usize {
        self.even.len() + self.odd.len()
    }
}

struct Node {
    parent: Option<(usize, usize)>,
    root: usize,
    vector: SparseVector,
}

struct Relation {
    op: usize,
    node: usize,
    coords: SparseVector,
}

/// Supercommutant of the operators restricted to the invariant subspace
/// spanned by `space` (which must consist of homogeneous vectors with respect
/// to `grading`).
///
/// The subspace is decomposed into cyclic pieces by breadth-first closure
/// from homogeneous generators `w_j`. A homogeneous `X` of parity `e` is
/// determined by the images `u_j = X(w_j)`; on the closure basis
/// `b = a w_j` it must equal `(-1)^(e p(a)) a u_j`. The remaining unknowns are
/// cut down by the relations `g b = sum coords * b'` found during the closure,
/// adding violated relations lazily until the candidate solutions satisfy
/// all of them exactly.
pub fn supercommutant(
    ops: &[&dyn LinearOperator],
    space: &Echelon,
    grading: &dyn Fn(usize) -> Parity,
) -> Result<Supercommutant> {
    let basis = space.basis();
    let d = basis.len();
    let ambient = space.dim();
    let parity_of = |v: &SparseVector| -> Result<Parity> {
        let mut it = v.iter().map(|(i, _)| grading(i));
        let first = it.next().unwrap_or(Parity::Even);
        if it.all(|p| p == first) {
            Ok(first)
        } else {
            Err(AlgebraError::DimensionMismatch("inhomogeneous basis vector".into()))
        }
    };
    let basis_parity: Vec<Parity> = basis.iter().map(parity_of).collect::<Result<_>>()?;
    for op in ops {
        for b in &basis {
            if !space.contains(&op.apply(b)) {
                return Err(AlgebraError::DimensionMismatch(
                    "subspace is not invariant under the operators".into(),
                ));
            }
        }
    }

    // Cyclic closure with tracked coordinates.
    let mut tracker = Echelon::tracked(ambient);
    let mut nodes: Vec<Node> = Vec::new();
    let mut relations: Vec<Relation> = Vec::new();
    let mut roots: Vec<(usize, Parity)> = Vec::new();
    for (c, b) in basis.iter().enumerate() {
        if tracker.contains(b) {
            continue;
        }
        tracker.insert(b);
        let root = roots.len();
        roots.push((c, basis_parity[c]));
        nodes.push(Node { parent: None, root, vector: b.clone() });
        let mut queue = VecDeque::from([nodes.len() - 1]);
        while let Some(n) = queue.pop_front() {
            for (gi, op) in ops.iter().enumerate() {
                let w = op.apply(&nodes[n].vector);
                match tracker.insert_or_coordinates(&w) {
                    Ok(_) => {
                        nodes.push(Node { parent: Some((n, gi)), root, vector: w });
                        queue.push_back(nodes.len() - 1);
                    }
                    Err(coords) => relations.push(Relation { op: gi, node: n, coords }),
                }
            }
        }
    }
    debug_assert_eq!(nodes.len(), d);
    // Coordinates of each subspace basis vector in terms of closure nodes.
    let basis_in_nodes: Vec<SparseVector> = basis
        .iter()
        .map(|b| tracker.input_coordinates(b).expect("basis vector inside closure"))
        .collect();

    let mut result = Supercommutant { even: Vec::new(), odd: Vec::new() };
    for eps in [Parity::Even, Parity::Odd] {
        // Unknown layout: for each root j, coordinates of u_j over basis
        // vectors of parity p(w_j) + eps.
        let mut layout: Vec<Vec<usize>> = Vec::new();
        let mut offset = 0usize;
        let mut offsets = Vec::new();
        for &(_, pw) in &roots {
            let cols: Vec<usize> = (0..d).filter(|&c| basis_parity[c] == pw + eps).collect();
            offsets.push(offset);
            offset += cols.len();
            layout.push(cols);
        }
        let unknowns = offset;
        if unknowns == 0 {
            continue;
        }
        let sign = |p: Parity| -> Scalar {
            if eps.koszul(p) {
                Scalar::from_int(-1)
            } else {
                Scalar::one()
            }
        };
        // X evaluated on every closure node for a parameter vector y.
        let evaluate = |y: &SparseVector| -> Vec<SparseVector> {
            let mut values: Vec<SparseVector> = Vec::with_capacity(nodes.len());
            for node in &nodes {
                let v = match node.parent {
                    None => {
                        let mut acc = Accumulator::new();
                        for (k, &c) in layout[node.root].iter().enumerate() {
                            let coeff = y.value(offsets[node.root] + k);
                            if !coeff.is_zero() {
                                acc.add_scaled(&coeff, &basis[c]);
                            }
                        }
                        acc.into_vector(ambient)
                    }
                    Some((parent, gi)) => {
                        ops[gi].apply(&values[parent]).scale(&sign(ops[gi].parity()))
                    }
                };
                values.push(v);
            }
            values
        };
        // Residual of one relation in subspace coordinates.
        let residual = |rel: &Relation, values: &[SparseVector], coords: &[SparseVector]| -> SparseVector {
            let mut acc = Accumulator::new();
            for (e, a) in rel.coords.iter() {
                acc.add_scaled(a, &coords[e]);
            }
            let lhs = acc.into_vector(d);
            let rhs = space
                .pivot_coordinates(&ops[rel.op].apply(&values[rel.node]))
                .scale(&sign(ops[rel.op].parity()));
            lhs.sub(&rhs)
        };
        let first_violation = |y: &SparseVector| -> Option<usize> {
            let values = evaluate(y);
            let coords: Vec<SparseVector> = values.iter().map(|v| space.pivot_coordinates(v)).collect();
            relations.iter().position(|rel| !residual(rel, &values, &coords).is_zero())
        };

        // Lazily built unit responses: for each unknown, evaluation on nodes.
        let mut unit_cache: Option<(Vec<Vec<SparseVector>>, Vec<Vec<SparseVector>>)> = None;
        let mut equations = Echelon::new(unknowns);
        let mut probe_state: u64 = 0x9e37_79b9_7f4a_7c15;
        let kernel = loop {
            let kernel = equations.kernel();
            if kernel.is_empty() {
                break kernel;
            }
            // Deterministic pseudo-random probe of the candidate space.
            let mut acc = Accumulator::new();
            for v in &kernel {
                probe_state ^= probe_state << 13;
                probe_state ^= probe_state >> 7;
                probe_state ^= probe_state << 17;
                let c = Scalar::from_int((probe_state % 97) as i64 + 1);
                acc.add_scaled(&c, v);
            }
            let probe = acc.into_vector(unknowns);
            let violated = first_violation(&probe)
                .or_else(|| kernel.iter().find_map(&first_violation));
            let Some(ri) = violated else {
                break kernel;
            };
            let (values_u, coords_u) = unit_cache.get_or_insert_with(|| {
                let mut vals = Vec::with_capacity(unknowns);
                let mut crds = Vec::with_capacity(unknowns);
                for u in 0..unknowns {
                    let vs = evaluate(&SparseVector::unit(unknowns, u));
                    crds.push(vs.iter().map(|v| space.pivot_coordinates(v)).collect());
                    vals.push(vs);
                }
                (vals, crds)
            });
            let rel = &relations[ri];
            let columns: Vec<SparseVector> =
                (0..unknowns).map(|u| residual(rel, &values_u[u], &coords_u[u])).collect();
            for row in SparseMatrix::from_columns(d, &columns).rows() {
                equations.insert(row);
            }
        };

        for y in kernel {
            let values = evaluate(&y);
            let columns: Vec<SparseVector> = basis_in_nodes
                .iter()
                .map(|combo| {
                    let mut acc = Accumulator::new();
                    for (e, a) in combo.iter() {
                        acc.add_scaled(a, &space.pivot_coordinates(&values[e]));
                    }
                    acc.into_vector(d)
                })
                .collect();
            let x = SparseMatrix::from_columns(d, &columns);
            match eps {
                Parity::Even => result.even.push(x),
                Parity::Odd => result.odd.push(x),
            }
        }
    }
    Ok(result)
}

/// Supercommutant of explicit square matrices acting on a graded coordinate
/// space.
pub fn supercommutant_of_matrices(
    ops: &[(SparseMatrix, Parity)],
    grading: &[Parity],
) -> Result<Supercommutant> {
    let n = grading.len();
    for (m, _) in ops {
        if m.nrows() != n || m.ncols() != n {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} operator on a space of dimension {n}",
                m.nrows(),
                m.ncols()
            )));
        }
    }
    let space = Echelon::from_vectors(n, &(0..n).map(|i| SparseVector::unit(n, i)).collect::<Vec<_>>());
    let dyn_ops: Vec<&dyn LinearOperator> = ops.iter().map(|o| o as &dyn LinearOperator).collect();
    supercommutant(&dyn_ops, &space, &|i| grading[i])
}

/// Matrix of an operator restricted to an invariant subspace, in the
/// coordinates of [`Echelon::basis`].
pub fn restrict(op: &dyn LinearOperator, space: &Echelon) -> SparseMatrix {
    let columns: Vec<SparseVector> =
        space.basis().iter().map(|b| space.pivot_coordinates(&op.apply(b))).collect();
    SparseMatrix::from_columns(space.rank(), &columns)
}

/// Checks `x g = (-1)^(p(x) p(g)) g x` for every restricted generator.
pub fn supercommutes(x: &SparseMatrix, x_parity: Parity, generators: &[(SparseMatrix, Parity)]) -> bool {
    generators.iter().all(|(g, p)| {
        let lhs = x.mul(g);
        let rhs = g.mul(x);
        if x_parity.koszul(*p) {
            lhs.add_scaled(&Scalar::one(), &rhs).is_zero()
        } else {
            lhs == rhs
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_vec(values: &[i64]) -> SparseVector {
        SparseVector::from_dense(&values.iter().map(|&v| Scalar::from_int(v)).collect::<Vec<_>>())
    }

    #[test]
    fn zero_and_identity_matrices() {
        let (r, k) = rank_kernel(&SparseMatrix::zero(3, 3));
        assert_eq!((r, k.len()), (0, 3));
        let (r, k) = rank_kernel(&SparseMatrix::identity(4));
        assert_eq!((r, k.len()), (4, 0));
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = SparseMatrix::from_rows(
            4,
            vec![int_vec(&[1, 2, 0, -1]), int_vec(&[2, 4, 1, 0]), int_vec(&[3, 6, 1, -1])],
        );
        let (r, k) = rank_kernel(&m);
        assert_eq!(r, 2);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn tracked_coordinates() {
        let mut e = Echelon::tracked(3);
        let a = int_vec(&[1, 1, 0]);
        let b = int_vec(&[0, 1, 1]);
        e.insert(&a);
        e.insert(&b);
        let c = a.scale(&Scalar::from_int(2)).sub(&b);
        let coords = e.input_coordinates(&c).unwrap();
        assert_eq!(coords.value(0), Scalar::from_int(2));
        assert_eq!(coords.value(1), Scalar::from_int(-1));
        assert!(e.input_coordinates(&int_vec(&[1, 0, 0])).is_none());
    }

    #[test]
    fn supercommutant_of_identity_is_full() {
        let grading = [Parity::Even, Parity::Even, Parity::Odd];
        let sc = supercommutant_of_matrices(&[(SparseMatrix::identity(3), Parity::Even)], &grading).unwrap();
        assert_eq!(sc.dimension(), 9);
        // even block-diagonal part: 2x2 + 1x1
        assert_eq!(sc.even.len(), 5);
        assert_eq!(sc.odd.len(), 4);
    }

    #[test]
    fn supercommutant_of_clifford_generator() {
        // C_1 = <p | p^2 = -1> acting on itself with p odd.
        let p = SparseMatrix::from_dense(&[
            vec![Scalar::zero(), Scalar::from_int(-1)],
            vec![Scalar::one(), Scalar::zero()],
        ]);
        let grading = [Parity::Even, Parity::Odd];
        let sc = supercommutant_of_matrices(&[(p.clone(), Parity::Odd)], &grading).unwrap();
        // Right multiplications by 1 and by p (supercommuting form).
        assert_eq!(sc.dimension(), 2);
        let gens = [(p, Parity::Odd)];
        for x in &sc.even {
            assert!(supercommutes(x, Parity::Even, &gens));
        }
        for x in &sc.odd {
            assert!(supercommutes(x, Parity::Odd, &gens));
        }
    }

    #[test]
    fn closure_of_matrix_algebra() {
        // E_12 and E_21 generate all 2x2 matrices.
        let e12 = int_vec(&[0, 1, 0, 0]);
        let e21 = int_vec(&[0, 0, 1, 0]);
        let product = |a: &SparseVector, b: &SparseVector| {
            let m = |v: &SparseVector| {
                let d = v.to_dense();
                SparseMatrix::from_dense(&[vec![d[0].clone(), d[1].clone()], vec![d[2].clone(), d[3].clone()]])
            };
            m(a).mul(&m(b)).flatten()
        };
        assert_eq!(span_closure(4, &[e12, e21], product).len(), 4);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..4, c), r))
    }

    proptest! {
        #[test]
        fn rank_nullity_and_transpose(rows in small_matrix()) {
            let m = SparseMatrix::from_dense(
                &rows.iter().map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect()).collect::<Vec<_>>(),
            );
            let (r, k) = rank_kernel(&m);
            prop_assert_eq!(r + k.len(), m.ncols());
            for v in &k {
                prop_assert!(m.mul_vec(v).is_zero());
            }
            let (rt, _) = rank_kernel(&m.transpose());
            prop_assert_eq!(r, rt);
        }

        #[test]
        fn supercommutant_solutions_substitute(seed in 0u64..500) {
            // Random signed permutation matrix together with a diagonal
            // parity-respecting operator; every returned X must supercommute.
            let n = 4;
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let cols: Vec<SparseVector> = (0..n)
                .map(|j| {
                    let sgn = if (seed >> j) & 1 == 1 { -1 } else { 1 };
                    SparseVector::from_entries(n, [(perm[j], Scalar::from_int(sgn))])
                })
                .collect();
            let g = SparseMatrix::from_columns(n, &cols);
            let grading = [Parity::Even; 4];
            let sc = supercommutant_of_matrices(&[(g.clone(), Parity::Even)], &grading).unwrap();
            for x in &sc.even {
                prop_assert!(supercommutes(x, Parity::Even, &[(g.clone(), Parity::Even)]));
            }
            prop_assert!(sc.odd.is_empty());
        }
    }
}
