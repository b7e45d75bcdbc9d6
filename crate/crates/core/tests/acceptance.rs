//! Acceptance criteria. Each test writes one PASS/FAIL line to stderr
//! (bypassing the test harness capture) and enforces its runtime budget.
//! All arithmetic is exact, so every comparison has tolerance zero.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use spin_young::cli::run_cli;
use spin_young::hecke::{self, HElement};
use spin_young::report::VerificationReport;
use spin_young::scalar::Scalar;
use spin_young::suite;
use spin_young::tableau::{
    enumerate_partitions, enumerate_standard_shifted, enumerate_strict_partitions, ShiftedTableau, StrictPartition,
};
use spin_young::tensor::howe_supercommute_check;

fn announce(id: u32, name: &str, ok: bool, elapsed: Duration, budget: Duration) {
    let line = format!(
        "acceptance {id:02} {name}: {} ({} ms, budget {} s)\n",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_millis(),
        budget.as_secs()
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
}

/// Runs `body`, which returns the failing reports (if any), and asserts both
/// the outcome and the time budget.
fn criterion(id: u32, name: &str, budget_secs: u64, body: impl FnOnce() -> Vec<String>) {
    let budget = Duration::from_secs(budget_secs);
    let start = Instant::now();
    let failures = body();
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < budget;
    announce(id, name, ok, elapsed, budget);
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
    assert!(elapsed < budget, "criterion {id} took {elapsed:?}, budget {budget:?}");
}

fn failures(reports: impl IntoIterator<Item = VerificationReport>) -> Vec<String> {
    reports
        .into_iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} {:?}: {:?}", r.check_id, r.params, r.witnesses))
        .collect()
}

fn witness<'a>(r: &'a VerificationReport, label: &str) -> &'a str {
    &r.witnesses.iter().find(|w| w.label == label).unwrap_or_else(|| panic!("no witness {label} in {r:?}")).value
}

fn shapes_up_to(k: usize) -> Vec<StrictPartition> {
    (1..=k).flat_map(enumerate_strict_partitions).collect()
}

fn standard_tableaux_up_to(k: usize) -> Vec<ShiftedTableau> {
    shapes_up_to(k).iter().flat_map(enumerate_standard_shifted).collect()
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

#[test]
fn c01_tau_relations() {
    criterion(1, "tau relations and braid relation, k <= 6", 10, || {
        let mut out = Vec::new();
        for k in 2..=6 {
            let r = hecke::check_tau_relations(k);
            // every ordered triple of distinct indices
            let triples = k * (k - 1) * (k - 2);
            if witness(&r, "braid instances") != triples.to_string() {
                out.push(format!("k = {k}: braid instances {}", witness(&r, "braid instances")));
            }
            out.extend(failures([r]));
        }
        out
    });
}

#[test]
fn c02_tau_span() {
    criterion(2, "dim span of tau-words = k!, k <= 5", 60, || {
        let mut out = Vec::new();
        for k in 1..=5 {
            let r = suite::check_tau_span(k);
            if witness(&r, "dim span") != factorial(k).to_string() {
                out.push(format!("k = {k}"));
            }
            out.extend(failures([r]));
        }
        out
    });
}

#[test]
fn c03_symmetrizer_forms() {
    criterion(3, "classical symmetrizer forms proportional, n <= 5", 60, || {
        let mut out = failures((1..=5).flat_map(enumerate_partitions).map(|mu| suite::check_symmetrizer_forms(&mu)));
        // (2 - s)(1 + s) = 1 + s, so the two forms agree exactly for the shape (2).
        let s = hecke::s(2, 1, 2).unwrap();
        let one = HElement::one(2);
        let two = HElement::scalar(2, Scalar::from_int(2));
        let hand = &(&two - &s) * &(&one + &s);
        let (e12, e13) = hecke::classical_symmetrizers(&"1,2".parse::<spin_young::tableau::OrdinaryTableau>().unwrap());
        if hand != &one + &s || e13 != hand || e12 != &one + &s {
            out.push("shape (2) hand expansion".into());
        }
        out
    });
}

#[test]
fn c04_jm_commutation() {
    criterion(4, "classical JM commute, odd JM anticommute, k <= 6", 10, || {
        failures((1..=6).map(suite::check_jm_commutation))
    });
}

#[test]
fn c05_nazarov_identity() {
    criterion(5, "x_m = sqrt2 p_m pi_m and x_m^2 = 2 pi_m^2, k <= 6", 10, || {
        let mut out = Vec::new();
        for k in 1..=6 {
            let r = suite::check_nazarov_identity(k);
            if k >= 2 && witness(&r, "x_m^2 / pi_m^2") != "2" {
                out.push(format!("k = {k}: ratio {}", witness(&r, "x_m^2 / pi_m^2")));
            }
            out.extend(failures([r]));
        }
        out
    });
}

#[test]
fn c06_kappa_image() {
    criterion(6, "kappa_t(v_t) nonzero, highest weight, image = C_k kappa_t(v_t), k <= 5", 300, || {
        let mut out = failures(standard_tableaux_up_to(5).iter().map(|t| suite::check_kappa_image(t, None)));
        // kappa for the single row (2) is the scalar 2.
        let r = suite::check_kappa_image(&"1,2".parse().unwrap(), None);
        if witness(&r, "kappa_t(v_t)") != "2 * [1 1]" {
            out.push(format!("shape (2): {}", witness(&r, "kappa_t(v_t)")));
        }
        out
    });
}

#[test]
fn c07_specht_centralizer() {
    criterion(7, "Specht span = R, supercommutant 2^l, F_ii^2 = lambda_i, k <= 5", 300, || {
        let mut out = Vec::new();
        for lambda in shapes_up_to(5) {
            let r = suite::check_specht_centralizer(&lambda, None);
            let dim: usize = witness(&r, "supercommutant even").parse::<usize>().unwrap()
                + witness(&r, "supercommutant odd").parse::<usize>().unwrap();
            if dim != 1 << lambda.len() {
                out.push(format!("{lambda}: dimension {dim}"));
            }
            if witness(&r, "dim Specht") != witness(&r, "dim R") {
                out.push(format!("{lambda}: Specht vs R"));
            }
            out.extend(failures([r]));
        }
        out
    });
}

#[test]
fn c08_specht_corollaries() {
    criterion(8, "e_t^2 = c e_t, dim e_t H_k e_t = 2^l, k <= 4; c = 4 for (2)", 120, || {
        let mut out = Vec::new();
        for t in standard_tableaux_up_to(4) {
            let r = suite::check_specht_corollaries(&t, None);
            if witness(&r, "dim e_t H_k e_t") != (1usize << t.shape().len()).to_string() {
                out.push(format!("{t}: corner"));
            }
            out.extend(failures([r]));
        }
        // Hand computation: e_t = 2(1 + s), e_t^2 = 4(1 + s)^2 = 8(1 + s) = 4 e_t.
        let t: ShiftedTableau = "1,2".parse().unwrap();
        let s = hecke::s(2, 1, 2).unwrap();
        let hand = (&HElement::one(2) + &s).scale(&Scalar::from_int(2));
        let e = hecke::e_t(&t);
        if e != hand || &e * &e != hand.scale(&Scalar::from_int(4)) {
            out.push("shape (2) hand oracle".into());
        }
        let r = suite::check_specht_corollaries(&t, None);
        if witness(&r, "e_t^2 / e_t") != "4" {
            out.push(format!("shape (2): c = {}", witness(&r, "e_t^2 / e_t")));
        }
        out
    });
}

#[test]
fn c09_spin_idempotent() {
    criterion(9, "e_k idempotent, triple sums vanish, dim A_k e_k = 2^(k-1), k <= 5", 120, || {
        let mut out = Vec::new();
        for k in 1..=5 {
            let r = suite::check_spin_idempotent(k);
            if witness(&r, "dim A_k e_k") != (1usize << (k - 1)).to_string() {
                out.push(format!("k = {k}: dim"));
            }
            for i in 1..=k {
                let value = witness(&r, &format!("c_{i}"));
                let normalized = Scalar::from_frac((i * (i - 1)) as i64, 2).to_string();
                let shifted = Scalar::from_frac(((i - 1) * i.saturating_sub(2)) as i64, 2).to_string();
                if !value.contains(&normalized) || !value.contains(&shifted) {
                    out.push(format!("k = {k}: c_{i} not reported against both formulas"));
                }
            }
            out.extend(failures([r]));
        }
        out
    });
}

#[test]
fn c10_spin_specht() {
    criterion(10, "sigma_t v_t = c v_t, dim M^t = dim A_k sigma_t, supercommutant 2^(k-l), k <= 5", 300, || {
        let mut out = Vec::new();
        for t in standard_tableaux_up_to(5) {
            let r = suite::check_spin_specht(&t, None);
            let expected = 1usize << (t.k() - t.shape().len());
            if witness(&r, "supercommutant dimension") != expected.to_string() {
                out.push(format!("{t}: supercommutant"));
            }
            if witness(&r, "dim M^t (row)") != witness(&r, "dim A_k sigma_t") {
                out.push(format!("{t}: dimensions"));
            }
            out.extend(failures([r]));
        }
        out
    });
}

#[test]
fn c11_howe_duality() {
    criterion(11, "Howe supercommutation, n <= 2, k <= 4", 60, || {
        failures((1..=2).flat_map(|n| (1..=4).map(move |k| howe_supercommute_check(n, k))))
    });
}

#[test]
fn c12_decomposition() {
    criterion(12, "sum of q-span dimensions = (2n)^k, n <= 2, k <= 4", 300, || {
        let mut out = Vec::new();
        for n in 1..=2 {
            for k in 1..=4 {
                let table = suite::decomposition_table(n, k);
                let expected = (2 * n).pow(k as u32);
                let sum: usize = table.rows.iter().map(|row| row.dim_qspan).sum();
                if sum != expected {
                    out.push(format!("n = {n}, k = {k}: {sum} != {expected}"));
                }
                out.extend(failures([table.report]));
            }
        }
        out
    });
}

#[test]
fn c13_jm_spectrum() {
    criterion(13, "x_m^2 spectrum on R and final kappa factor eigenvalue, k <= 4", 120, || {
        let mut out = failures(shapes_up_to(4).iter().map(|l| suite::check_jm_spectrum(l, None)));
        // Entry 3 of the column-filled (2,1) sits in cell (2,2): 2*2 - 2*1/2 = 3.
        let r = suite::check_jm_spectrum(&"2,1".parse().unwrap(), None);
        if witness(&r, "final factor eigenvalue at (2,2)") != "3" {
            out.push("shape (2,1) final factor".into());
        }
        out
    });
}

#[test]
fn c14_determinism() {
    criterion(14, "two runs of verify --k 4 are byte-identical", 60, || {
        let exe = env!("CARGO_BIN_EXE_spin-young");
        let run = || Command::new(exe).args(["verify", "--k", "4"]).output().expect("binary runs");
        let (a, b) = (run(), run());
        let mut out = Vec::new();
        if !a.status.success() || !b.status.success() {
            out.push(format!("exit codes {:?} {:?}", a.status.code(), b.status.code()));
        }
        if a.stdout != b.stdout || a.stdout.is_empty() {
            out.push("outputs differ".into());
        }
        let mut inproc = Vec::new();
        let code = run_cli(["spin-young", "verify", "--k", "4"], &mut inproc, &mut std::io::sink());
        if code != 0 || inproc != a.stdout {
            out.push("in-process run differs".into());
        }
        out
    });
}
