//! Verification checks, one per statement, and the runners that assemble
//! them into suites for a given `k` or shape.

mod algebra;
mod decomposition;
mod specht;
mod spin;

use std::time::Instant;

pub use algebra::{check_jm_commutation, check_nazarov_identity, check_spin_idempotent, check_symmetrizer_forms, check_tau_span};
pub use decomposition::{check_tensor_multiplicities, decomposition_table, DecompositionRow, DecompositionTable};
pub use specht::{check_jm_spectrum, check_kappa_image, check_specht_centralizer, check_specht_corollaries};
pub use spin::check_spin_specht;

use crate::hecke::{check_tau_relations, kappa_factors, HElement};
use crate::linalg::{Echelon, LinearOperator, Parity, SparseVector};
use crate::report::{ReportBuilder, VerificationReport};
use crate::tableau::{enumerate_partitions, enumerate_standard_shifted, enumerate_strict_partitions, ShiftedTableau, StrictPartition};
use crate::tensor::{howe_supercommute_check, HOperator, TensorSpace};

/// Largest `k` for checks that only multiply in `H_k`.
pub const ALGEBRA_LIMIT: usize = 6;
/// Largest `k` for checks that take span closures.
pub const CLOSURE_LIMIT: usize = 5;
/// Largest `k` for the `e_t H_k e_t` computation.
pub const IDEMPOTENT_LIMIT: usize = 4;
/// Largest `k` for checks on the whole tensor space with `n = 2`.
pub const TENSOR_LIMIT: usize = 4;

/// Product `f_1 f_2 ... f_m` acting on `W`, applied factor by factor.
pub struct FactorOperator {
    space: TensorSpace,
    factors: Vec<HElement>,
}

impl FactorOperator {
    pub fn new(space: TensorSpace, factors: Vec<HElement>) -> Self {
        FactorOperator { space, factors }
    }

    pub fn kappa(space: TensorSpace, t: &ShiftedTableau) -> Self {
        FactorOperator::new(space, kappa_factors(t).into_iter().map(|(_, f)| f).collect())
    }
}

impl LinearOperator for FactorOperator {
    fn apply(&self, v: &SparseVector) -> SparseVector {
        self.factors.iter().rev().fold(v.clone(), |acc, f| self.space.act_h(f, &acc))
    }
    fn parity(&self) -> Parity {
        Parity::Even
    }
}

pub(crate) fn h_operators(space: &TensorSpace) -> Vec<HOperator> {
    crate::hecke::h_generators(space.k()).into_iter().map(|(x, _)| space.h_operator(x)).collect()
}

pub(crate) fn a_operators(space: &TensorSpace) -> Vec<HOperator> {
    crate::hecke::a_generators(space.k()).into_iter().map(|x| space.h_operator(x)).collect()
}

pub(crate) fn as_dyn<T: LinearOperator>(ops: &[T]) -> Vec<&dyn LinearOperator> {
    ops.iter().map(|o| o as &dyn LinearOperator).collect()
}

pub(crate) fn same_span(a: &Echelon, b: &Echelon) -> bool {
    a.rank() == b.rank() && a.basis() == b.basis()
}

/// Tensor space for a shape, with `n` defaulting to the number of rows.
pub(crate) fn space_for(r: &mut ReportBuilder, lambda: &StrictPartition, n: Option<usize>) -> Option<TensorSpace> {
    let n = n.unwrap_or(lambda.len()).max(1);
    if lambda.len() > n {
        r.fail("arguments", format!("shape {lambda} has more than n = {n} rows"));
        return None;
    }
    match TensorSpace::new(n, lambda.size()) {
        Ok(s) => Some(s),
        Err(e) => {
            r.fail("arguments", e);
            None
        }
    }
}

/// Short form of a vector for witnesses.
pub(crate) fn show_vector(space: &TensorSpace, v: &SparseVector) -> String {
    if v.nnz() <= 12 {
        space.format(v)
    } else {
        format!("{} terms", v.nnz())
    }
}

pub(crate) fn skipped(id: &str, params: &[(&str, String)], reason: &str) -> VerificationReport {
    let mut r = ReportBuilder::new(id);
    for (k, v) in params {
        r = r.param(k, v);
    }
    r.skip(reason);
    r.finish()
}

/// Options shared by the suite runners.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// Lift the size guardrails.
    pub allow_large: bool,
    /// Record wall-clock time per check.
    pub timings: bool,
}

impl SuiteOptions {
    fn within(&self, k: usize, limit: usize) -> bool {
        self.allow_large || k <= limit
    }
}

struct Runner {
    opts: SuiteOptions,
    reports: Vec<VerificationReport>,
}

impl Runner {
    fn run(&mut self, f: impl FnOnce() -> VerificationReport) {
        let start = Instant::now();
        let mut report = f();
        if self.opts.timings {
            report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        self.reports.push(report);
    }

    fn guarded(&mut self, k: usize, limit: usize, id: &str, params: &[(&str, String)], f: impl FnOnce() -> VerificationReport) {
        if self.opts.within(k, limit) {
            self.run(f);
        } else {
            self.reports.push(skipped(id, params, &format!("k = {k} exceeds the default limit {limit}; pass --allow-large")));
        }
    }
}

/// Checks that depend only on `k`.
fn algebra_checks(runner: &mut Runner, k: usize) {
    let kp = [("k", k.to_string())];
    runner.guarded(k, ALGEBRA_LIMIT, "tau_relations", &kp, || check_tau_relations(k));
    runner.guarded(k, CLOSURE_LIMIT, "tau_span", &kp, || check_tau_span(k));
    for mu in enumerate_partitions(k) {
        let params = [("mu", mu.to_string())];
        runner.guarded(k, CLOSURE_LIMIT, "symmetrizer_forms", &params, || check_symmetrizer_forms(&mu));
    }
    runner.guarded(k, ALGEBRA_LIMIT, "jm_commutation", &kp, || check_jm_commutation(k));
    runner.guarded(k, ALGEBRA_LIMIT, "nazarov_identity", &kp, || check_nazarov_identity(k));
    runner.guarded(k, CLOSURE_LIMIT, "spin_idempotent", &kp, || check_spin_idempotent(k));
}

/// Checks attached to one strict shape, with `n` equal to its length.
fn shape_checks(runner: &mut Runner, lambda: &StrictPartition) {
    let k = lambda.size();
    let lp = [("lambda", lambda.to_string())];
    runner.guarded(k, CLOSURE_LIMIT, "jm_spectrum", &lp, || check_jm_spectrum(lambda, None));
    let tableaux = enumerate_standard_shifted(lambda);
    for t in &tableaux {
        let tp = [("t", t.to_string())];
        runner.guarded(k, CLOSURE_LIMIT, "kappa_image", &tp, || check_kappa_image(t, None));
    }
    runner.guarded(k, CLOSURE_LIMIT, "specht_centralizer", &lp, || check_specht_centralizer(lambda, None));
    for t in &tableaux {
        let tp = [("t", t.to_string())];
        runner.guarded(k, IDEMPOTENT_LIMIT, "specht_corollaries", &tp, || check_specht_corollaries(t, None));
    }
    for t in &tableaux {
        let tp = [("t", t.to_string())];
        runner.guarded(k, CLOSURE_LIMIT, "spin_specht", &tp, || check_spin_specht(t, None));
    }
}

/// Checks on the whole tensor space for `n = 1, 2`.
fn tensor_checks(runner: &mut Runner, k: usize) {
    for n in 1..=2 {
        let params = [("n", n.to_string()), ("k", k.to_string())];
        runner.guarded(k, TENSOR_LIMIT, "howe_duality", &params, || howe_supercommute_check(n, k));
        runner.guarded(k, TENSOR_LIMIT, "decomposition", &params, || decomposition_table(n, k).report);
        if k >= 2 {
            runner.guarded(k, TENSOR_LIMIT, "tensor_multiplicities", &params, || check_tensor_multiplicities(n, k));
        }
    }
}

/// Every check for rank `k`, in a fixed order.
pub fn run_for_k(k: usize, opts: SuiteOptions) -> Vec<VerificationReport> {
    let mut runner = Runner { opts, reports: Vec::new() };
    algebra_checks(&mut runner, k);
    for lambda in enumerate_strict_partitions(k) {
        shape_checks(&mut runner, &lambda);
    }
    tensor_checks(&mut runner, k);
    runner.reports
}

/// Checks attached to a single strict shape.
pub fn run_for_shape(lambda: &StrictPartition, opts: SuiteOptions) -> Vec<VerificationReport> {
    let mut runner = Runner { opts, reports: Vec::new() };
    shape_checks(&mut runner, lambda);
    runner.reports
}

/// Only the defining relations for rank `k`.
pub fn run_relations(k: usize, opts: SuiteOptions) -> Vec<VerificationReport> {
    let mut runner = Runner { opts, reports: Vec::new() };
    runner.guarded(k, ALGEBRA_LIMIT, "tau_relations", &[("k", k.to_string())], || check_tau_relations(k));
    runner.reports
}
