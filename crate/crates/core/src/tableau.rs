//! Partitions, shifted and ordinary tableaux.
//!
//! Entries are one-based. Cells of a shifted diagram use absolute columns:
//! row `i` occupies columns `i..=lambda_i + i - 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{AlgebraError, Result};
use crate::perm::Perm;

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition(Vec<usize>);

/// Strictly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StrictPartition(Vec<usize>);

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| AlgebraError::InvalidPartition(format!("cannot parse {s:?}")))
        })
        .collect()
}

fn format_parts(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Vec<usize> {
        (1..=self.0[0]).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect()
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(AlgebraError::InvalidPartition(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0 when the number of parts is even, 1 otherwise.
    pub fn delta(&self) -> usize {
        self.0.len() % 2
    }

    /// Cells `(row, column)` of the shifted diagram, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (r + 1..=r + len).map(move |c| (r + 1, c)))
            .collect()
    }

    /// Number of standard shifted tableaux.
    pub fn num_standard(&self) -> usize {
        enumerate_standard_shifted(self).len()
    }
}

impl FromStr for Partition {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for StrictPartition {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_parts(&self.0))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_parts(&self.0))
    }
}

/// Partitions of `n` in lexicographically descending order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Strict partitions of `k` in lexicographically descending order.
pub fn enumerate_strict_partitions(k: usize) -> Vec<StrictPartition> {
    enumerate_partitions(k)
        .into_iter()
        .filter(|p| p.0.windows(2).all(|w| w[0] > w[1]))
        .map(|p| StrictPartition(p.0))
        .collect()
}

/// Dominance order by partial sums.
pub fn dominance_leq(lambda: &[usize], mu: &[usize]) -> Result<bool> {
    let (a, b): (usize, usize) = (lambda.iter().sum(), mu.iter().sum());
    if a != b {
        return Err(AlgebraError::SizeMismatch(a, b));
    }
    let (mut sa, mut sb) = (0, 0);
    for m in 0..lambda.len().max(mu.len()) {
        sa += lambda.get(m).copied().unwrap_or(0);
        sb += mu.get(m).copied().unwrap_or(0);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_filling(rows: &[Vec<usize>]) -> Result<usize> {
    let k: usize = rows.iter().map(|r| r.len()).sum();
    let mut seen = vec![false; k + 1];
    for &x in rows.iter().flatten() {
        if x == 0 || x > k || seen[x] {
            return Err(AlgebraError::InvalidTableau(format!("{rows:?} is not a bijective filling of 1..{k}")));
        }
        seen[x] = true;
    }
    Ok(k)
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| AlgebraError::InvalidTableau(format!("cannot parse {s:?}")))
                })
                .collect()
        })
        .collect()
}

fn format_rows(rows: &[Vec<usize>]) -> String {
    rows.iter().map(|r| format_parts(r)).collect::<Vec<_>>().join(";")
}

/// Filling of a shifted diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ShiftedTableau {
    shape: StrictPartition,
    rows: Vec<Vec<usize>>,
    /// `(row, column)` of each entry, indexed by `entry - 1`.
    positions: Vec<(usize, usize)>,
}

impl ShiftedTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = StrictPartition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|e| AlgebraError::InvalidTableau(e.to_string()))?;
        let k = check_filling(&rows)?;
        let mut positions = vec![(0, 0); k];
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                positions[x - 1] = (r + 1, r + 1 + c);
            }
        }
        Ok(ShiftedTableau { shape, rows, positions })
    }

    /// Fills the shifted diagram column by column, left to right and top to
    /// bottom inside each column.
    pub fn column_filled(shape: &StrictPartition) -> Self {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        let mut next = 1;
        for (r, c) in column_cells(shape) {
            rows[r - 1][c - r] = next;
            next += 1;
        }
        ShiftedTableau::from_rows(rows).expect("valid filling")
    }

    /// Fills row by row.
    pub fn row_filled(shape: &StrictPartition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&l| {
                (0..l)
                    .map(|_| {
                        next += 1;
                        next
                    })
                    .collect()
            })
            .collect();
        ShiftedTableau::from_rows(rows).expect("valid filling")
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.positions.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(row)?).copied()
    }

    /// `(row, absolute column)` of an entry.
    pub fn position(&self, entry: usize) -> (usize, usize) {
        self.positions[entry - 1]
    }

    pub fn row_of(&self, entry: usize) -> usize {
        self.position(entry).0
    }

    pub fn column_of(&self, entry: usize) -> usize {
        self.position(entry).1
    }

    /// Entries of absolute column `col`, top to bottom.
    pub fn column(&self, col: usize) -> Vec<usize> {
        (1..=self.rows.len()).filter_map(|r| self.entry(r, col)).collect()
    }

    pub fn num_columns(&self) -> usize {
        self.shape.parts()[0]
    }

    /// Entries read column by column, left to right, top to bottom within a
    /// column.
    pub fn reading_order(&self) -> Vec<usize> {
        column_cells(&self.shape).into_iter().map(|(r, c)| self.entry(r, c).expect("cell")).collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.positions.iter().enumerate().all(|(e, &(r, c))| match self.entry(r + 1, c) {
            Some(below) => below > e + 1,
            None => true,
        });
        rows_ok && cols_ok
    }

    /// Applies a permutation to the entries.
    pub fn permuted(&self, p: &Perm) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(|&x| p.apply(x)).collect()).collect();
        ShiftedTableau::from_rows(rows).expect("permuted filling")
    }

    pub fn row_stabilizer(&self) -> Vec<Perm> {
        row_group(self.k(), &self.rows)
    }

    /// All fillings of the shape, in lexicographic order of row-reading words.
    pub fn all_fillings(shape: &StrictPartition) -> Vec<ShiftedTableau> {
        let base = ShiftedTableau::row_filled(shape);
        Perm::all(shape.size()).iter().map(|p| base.permuted(p)).collect()
    }

    /// Fillings with the same row sets as `self`.
    pub fn row_equivalent(&self) -> Vec<ShiftedTableau> {
        self.row_stabilizer().iter().map(|p| self.permuted(p)).collect()
    }
}

impl FromStr for ShiftedTableau {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        ShiftedTableau::from_rows(parse_rows(s)?)
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rows(&self.rows))
    }
}

fn column_cells(shape: &StrictPartition) -> Vec<(usize, usize)> {
    let mut cells = shape.cells();
    cells.sort_by_key(|&(r, c)| (c, r));
    cells
}

fn row_group(k: usize, rows: &[Vec<usize>]) -> Vec<Perm> {
    let mut group = vec![Perm::identity(k)];
    for row in rows {
        let factor = Perm::all_on(k, row);
        group = group.iter().flat_map(|g| factor.iter().map(move |h| g.compose(h))).collect();
    }
    group.sort();
    group
}

/// Standard shifted tableaux of the given shape, in lexicographic order of
/// row-reading words.
pub fn enumerate_standard_shifted(shape: &StrictPartition) -> Vec<ShiftedTableau> {
    // Place 1..k one at a time into an addable corner.
    fn rec(shape: &[usize], fill: &mut Vec<Vec<usize>>, next: usize, k: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > k {
            out.push(fill.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = fill[r].len();
            if len == shape[r] {
                continue;
            }
            // Cell (r, r + len) needs the cell above, (r - 1, r + len), filled.
            if r > 0 && fill[r - 1].len() < len + 2 {
                continue;
            }
            fill[r].push(next);
            rec(shape, fill, next + 1, k, out);
            fill[r].pop();
        }
    }
    let mut out = Vec::new();
    let parts = shape.parts();
    rec(parts, &mut vec![Vec::new(); parts.len()], 1, shape.size(), &mut out);
    out.sort();
    out.into_iter().map(|rows| ShiftedTableau::from_rows(rows).expect("standard filling")).collect()
}

/// Filling of an ordinary Young diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrdinaryTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl OrdinaryTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|e| AlgebraError::InvalidTableau(e.to_string()))?;
        check_filling(&rows)?;
        Ok(OrdinaryTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entries of each column (one-based column index `j` at position `j-1`).
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.parts()[0])
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect()
    }

    /// One-based column of an entry.
    pub fn column_of(&self, entry: usize) -> usize {
        self.rows
            .iter()
            .find_map(|r| r.iter().position(|&x| x == entry))
            .map(|c| c + 1)
            .expect("entry present")
    }

    /// Column-by-column reading, left to right and top to bottom.
    pub fn reading_order(&self) -> Vec<usize> {
        self.columns().concat()
    }

    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn row_stabilizer(&self) -> Vec<Perm> {
        row_group(self.k(), &self.rows)
    }

    pub fn column_stabilizer(&self) -> Vec<Perm> {
        row_group(self.k(), &self.columns())
    }
}

impl FromStr for OrdinaryTableau {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        OrdinaryTableau::from_rows(parse_rows(s)?)
    }
}

impl fmt::Display for OrdinaryTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rows(&self.rows))
    }
}

/// Standard Young tableaux of an ordinary shape.
pub fn enumerate_standard_ordinary(shape: &Partition) -> Vec<OrdinaryTableau> {
    fn rec(shape: &[usize], fill: &mut Vec<Vec<usize>>, next: usize, k: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > k {
            out.push(fill.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = fill[r].len();
            if len < shape[r] && (r == 0 || fill[r - 1].len() > len) {
                fill[r].push(next);
                rec(shape, fill, next + 1, k, out);
                fill[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let parts = shape.parts();
    rec(parts, &mut vec![Vec::new(); parts.len()], 1, shape.size(), &mut out);
    out.sort();
    out.into_iter().map(|rows| OrdinaryTableau::from_rows(rows).expect("standard filling")).collect()
}

/// Which stabilizer subgroup to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Row,
    Column,
}

/// Either kind of tableau.
#[derive(Clone, Copy, Debug)]
pub enum AnyTableau<'a> {
    Shifted(&'a ShiftedTableau),
    Ordinary(&'a OrdinaryTableau),
}

/// Row or column stabilizer; columns are only available for ordinary tableaux.
pub fn stabilizer(t: AnyTableau<'_>, mode: Mode) -> Result<Vec<Perm>> {
    match (t, mode) {
        (AnyTableau::Shifted(t), Mode::Row) => Ok(t.row_stabilizer()),
        (AnyTableau::Shifted(_), Mode::Column) => Err(AlgebraError::ModeMismatch),
        (AnyTableau::Ordinary(t), Mode::Row) => Ok(t.row_stabilizer()),
        (AnyTableau::Ordinary(t), Mode::Column) => Ok(t.column_stabilizer()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::factorial;
    use proptest::prelude::*;

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn strict_partitions() {
        let show = |k| enumerate_strict_partitions(k).iter().map(|p| p.to_string()).collect::<Vec<_>>();
        assert_eq!(show(3), ["3", "2,1"]);
        assert_eq!(show(4), ["4", "3,1"]);
        assert_eq!(show(6), ["6", "5,1", "4,2", "3,2,1"]);
        assert!("2,2".parse::<StrictPartition>().is_err());
        assert_eq!(sp("3,2,1").delta(), 1);
        assert_eq!(sp("3,1").delta(), 0);
    }

    #[test]
    fn standard_counts_match_brute_force() {
        for k in 1..=6 {
            for shape in enumerate_strict_partitions(k) {
                let brute = ShiftedTableau::all_fillings(&shape).into_iter().filter(|t| t.is_standard()).count();
                assert_eq!(enumerate_standard_shifted(&shape).len(), brute, "{shape}");
            }
        }
        assert_eq!(sp("2,1").num_standard(), 1);
        assert_eq!(sp("3,1").num_standard(), 2);
        assert_eq!(sp("5").num_standard(), 1);
    }

    #[test]
    fn reading_orders() {
        let t: ShiftedTableau = "1,2;3".parse().unwrap();
        assert_eq!(t.reading_order(), vec![1, 2, 3]);
        assert_eq!([1, 2, 3].map(|e| t.column_of(e)), [1, 2, 2]);
        let t: ShiftedTableau = "1,2,3;4".parse().unwrap();
        assert_eq!(t.reading_order(), vec![1, 2, 4, 3]);
        assert_eq!(t.column(2), vec![2, 4]);
        let c = ShiftedTableau::column_filled(&sp("3,1"));
        assert_eq!(c.to_string(), "1,2,4;3");
        assert!(c.is_standard());
        assert_eq!(c.reading_order(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn stabilizers() {
        let t: ShiftedTableau = "1,2;3".parse().unwrap();
        let g = stabilizer(AnyTableau::Shifted(&t), Mode::Row).unwrap();
        assert_eq!(g.len(), 2);
        assert!(stabilizer(AnyTableau::Shifted(&t), Mode::Column).is_err());
        let o: OrdinaryTableau = "1,2;3,4".parse().unwrap();
        assert_eq!(o.row_stabilizer().len(), 4);
        let o: OrdinaryTableau = "1,2;3".parse().unwrap();
        let col = o.column_stabilizer();
        assert_eq!(col.len(), 2);
        assert_eq!(col[1].one_line(), vec![3, 2, 1]);
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&[2, 1], &[3]).unwrap());
        assert!(!dominance_leq(&[3], &[2, 1]).unwrap());
        assert!(dominance_leq(&[2, 1], &[2, 1]).unwrap());
        assert!(dominance_leq(&[2], &[2, 1]).is_err());
    }

    #[test]
    fn dominance_is_partial_order() {
        for k in 1..=8 {
            let ps: Vec<Vec<usize>> = enumerate_strict_partitions(k).iter().map(|p| p.parts().to_vec()).collect();
            for a in &ps {
                assert!(dominance_leq(a, a).unwrap());
                for b in &ps {
                    if a != b {
                        assert!(!(dominance_leq(a, b).unwrap() && dominance_leq(b, a).unwrap()));
                    }
                    for c in &ps {
                        if dominance_leq(a, b).unwrap() && dominance_leq(b, c).unwrap() {
                            assert!(dominance_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn row_stabilizer_is_a_subgroup(idx in 0usize..4, seed in 0usize..720) {
            let shape = &enumerate_strict_partitions(6)[idx];
            let t = ShiftedTableau::row_filled(shape).permuted(&Perm::unrank(6, seed));
            let g = t.row_stabilizer();
            let expected: usize = shape.parts().iter().map(|&p| factorial(p)).product();
            prop_assert_eq!(g.len(), expected);
            for a in &g {
                for b in &g {
                    prop_assert!(g.binary_search(&a.compose(b)).is_ok());
                }
            }
            let mut read = t.reading_order();
            read.sort();
            prop_assert_eq!(read, (1..=6).collect::<Vec<_>>());
        }
    }
}
