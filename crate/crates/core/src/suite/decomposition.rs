//! Decomposition of `W` into `q(n)`-submodules generated by the `R^lambda`,
//! and highest weights of `V^mu ⊗ V`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::linalg::{Echelon, SparseVector};
use crate::report::{ReportBuilder, VerificationReport};
use crate::tableau::{enumerate_strict_partitions, StrictPartition};
use crate::tensor::TensorSpace;

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionRow {
    pub lambda: String,
    pub dim_m: usize,
    pub dim_r: usize,
    pub g: usize,
    pub delta: usize,
    pub dim_qspan: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionTable {
    pub n: usize,
    pub k: usize,
    pub rows: Vec<DecompositionRow>,
    pub total: usize,
    pub dim_w: usize,
    pub report: VerificationReport,
}

impl DecompositionTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,dim_M,dim_R,g,delta,dim_qspan\n");
        for row in &self.rows {
            writeln!(out, "\"{}\",{},{},{},{},{}", row.lambda, row.dim_m, row.dim_r, row.g, row.delta, row.dim_qspan)
                .unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n = {}, k = {}\n", self.n, self.k);
        writeln!(out, "{:<10} {:>6} {:>6} {:>4} {:>6} {:>10}", "lambda", "dim_M", "dim_R", "g", "delta", "dim_qspan")
            .unwrap();
        for row in &self.rows {
            writeln!(
                out,
                "{:<10} {:>6} {:>6} {:>4} {:>6} {:>10}",
                row.lambda, row.dim_m, row.dim_r, row.g, row.delta, row.dim_qspan
            )
            .unwrap();
        }
        writeln!(out, "total {} of dim W = {}", self.total, self.dim_w).unwrap();
        out
    }
}

fn shapes(n: usize, k: usize) -> Vec<StrictPartition> {
    enumerate_strict_partitions(k).into_iter().filter(|l| l.len() <= n).collect()
}

/// Per-shape dimensions and the check that the `q(n)`-spans of the `R^lambda`
/// fill `W` as a direct sum.
pub fn decomposition_table(n: usize, k: usize) -> DecompositionTable {
    let mut r = ReportBuilder::new("decomposition").param("n", n).param("k", k);
    let space = match TensorSpace::new(n, k) {
        Ok(s) => s,
        Err(e) => {
            r.fail("arguments", e);
            return DecompositionTable { n, k, rows: Vec::new(), total: 0, dim_w: 0, report: r.finish() };
        }
    };
    let mut rows = Vec::new();
    let mut union = Echelon::new(space.dim());
    for lambda in shapes(n, k) {
        let rspace = space.highest_weight_space(&lambda).expect("shape fits");
        let qspan = space.q_span(&rspace.basis());
        for b in qspan.basis() {
            union.insert(&b);
        }
        rows.push(DecompositionRow {
            lambda: lambda.to_string(),
            dim_m: space.weight_indices(lambda.parts()).len(),
            dim_r: rspace.rank(),
            g: lambda.num_standard(),
            delta: lambda.delta(),
            dim_qspan: qspan.rank(),
        });
        r.witness(format!("dim q-span {lambda}"), qspan.rank());
    }
    let total: usize = rows.iter().map(|row| row.dim_qspan).sum();
    r.witness("sum", total);
    r.witness("dim W", space.dim());
    r.check(total == space.dim(), "dimensions add up", format!("{total} != {}", space.dim()));
    r.check(union.rank() == total, "sum is direct", format!("{} != {total}", union.rank()));
    DecompositionTable { n, k, rows, total, dim_w: space.dim(), report: r.finish() }
}

fn is_strict(weight: &[usize]) -> bool {
    let nonzero: Vec<usize> = weight.iter().copied().take_while(|&x| x > 0).collect();
    weight[nonzero.len()..].iter().all(|&x| x == 0) && nonzero.windows(2).all(|w| w[0] > w[1])
}

fn show_weight(weight: &[usize]) -> String {
    weight.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Highest weights of `V^mu ⊗ V`, where `V^mu` is the `q(n)`-span of
/// `R^mu` in `V^{⊗(k-1)}`: each is `mu + eps_i`, and each strict one occurs
/// with twice the multiplicity of `mu` in `V^mu`.
pub fn check_tensor_multiplicities(n: usize, k: usize) -> VerificationReport {
    let mut r = ReportBuilder::new("tensor_multiplicities").param("n", n).param("k", k);
    let (prev, space) = match (TensorSpace::new(n, k.saturating_sub(1)), TensorSpace::new(n, k)) {
        (Ok(a), Ok(b)) if k >= 1 => (a, b),
        _ => {
            r.fail("arguments", format!("n = {n}, k = {k}"));
            return r.finish();
        }
    };
    let base = 2 * n;
    for mu in shapes(n, k - 1) {
        let rmu = prev.highest_weight_space(&mu).expect("shape fits");
        let n_mu = rmu.rank();
        let vmu = prev.q_span(&rmu.basis());
        let mut by_weight: BTreeMap<Vec<usize>, Vec<SparseVector>> = BTreeMap::new();
        for b in vmu.basis() {
            let lead = b.lead().expect("nonzero basis vector").0;
            for x in 0..base {
                let mut weight = prev.weight(lead);
                weight[x / 2] += 1;
                let v = SparseVector::from_sorted(
                    space.dim(),
                    b.iter().map(|(i, c)| (i * base + x, c.clone())).collect(),
                );
                by_weight.entry(weight).or_default().push(v);
            }
        }
        let mut mu_weight = mu.parts().to_vec();
        mu_weight.resize(n, 0);
        let mut found = Vec::new();
        for (weight, vectors) in by_weight.iter().rev() {
            let mult = space.highest_weight_in(vectors).rank();
            if mult == 0 {
                continue;
            }
            let diff: Vec<usize> =
                (0..n).filter(|&i| weight[i] != mu_weight[i]).collect();
            let is_step = diff.len() == 1 && weight[diff[0]] == mu_weight[diff[0]] + 1;
            r.check(is_step, "highest weight is mu + eps_i", format!("mu = {mu}, weight {}", show_weight(weight)));
            if is_strict(weight) {
                r.check(
                    mult == 2 * n_mu,
                    "multiplicity 2 n_mu",
                    format!("mu = {mu}, weight {}: {mult} vs {}", show_weight(weight), 2 * n_mu),
                );
            } else {
                r.note(format!("mu = {mu}: non-strict weight {} occurs with multiplicity {mult}", show_weight(weight)));
            }
            found.push(format!("{}:{mult}", show_weight(weight)));
        }
        r.witness(format!("n_mu {mu}"), n_mu);
        r.witness(format!("highest weights {mu}"), found.join(" "));
    }
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals() {
        for (n, k, total) in [(1, 2, 4), (2, 2, 16), (2, 3, 64)] {
            let table = decomposition_table(n, k);
            assert!(table.report.passed(), "{:?}", table.report);
            assert_eq!(table.total, total);
        }
    }

    #[test]
    fn csv_rows() {
        let table = decomposition_table(2, 3);
        let csv = table.to_csv();
        assert!(csv.starts_with("lambda,dim_M,dim_R,g,delta,dim_qspan\n"));
        assert!(csv.contains("\"3\","));
        assert!(csv.contains("\"2,1\","));
    }

    #[test]
    fn single_letter_square() {
        let rep = check_tensor_multiplicities(1, 2);
        assert!(rep.passed(), "{rep:?}");
    }
}
