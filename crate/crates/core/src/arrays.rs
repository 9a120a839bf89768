//! Letter arrays, their incidence matrices, and the conditions (A0)–(A4).
//!
//! An r×c [`LetterArray`] holds one letter per cell. From it we derive the
//! letter–row incidence `N_LR` (v×r) and letter–column incidence `N_LC` (v×c),
//! together with the three intersection matrices:
//!
//! * rows × rows: `N_RL·N_LR`, entry (i, j) counts letters common to rows i and j;
//! * cols × cols: `N_CL·N_LC`, same for columns;
//! * rows × cols: `N_RL·N_LC`, letters common to row i and column j.

use crate::matrix::IntegerMatrix;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// An r×c grid of letter ids drawn from `0..v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterArray {
    rows: usize,
    cols: usize,
    alphabet_size: usize,
    grid: Vec<usize>,
    letter_names: Option<Vec<String>>,
}

impl LetterArray {
    /// Build from a row-major grid. Every id must be `< v` and every letter
    /// in `0..v` must occur.
    pub fn new(rows: usize, cols: usize, alphabet_size: usize, grid: Vec<usize>) -> Result<Self> {
        if rows == 0 || cols == 0 || alphabet_size == 0 {
            return Err(Error::InvalidArray(
                "rows, cols and alphabet size must be positive".into(),
            ));
        }
        if grid.len() != rows * cols {
            return Err(Error::InvalidArray(format!(
                "expected {} cells, got {}",
                rows * cols,
                grid.len()
            )));
        }
        let mut seen = vec![false; alphabet_size];
        for &x in &grid {
            if x >= alphabet_size {
                return Err(Error::InvalidArray(format!(
                    "letter id {x} out of range for v = {alphabet_size}"
                )));
            }
            seen[x] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidArray(format!(
                "letter {missing} does not occur"
            )));
        }
        Ok(Self {
            rows,
            cols,
            alphabet_size,
            grid,
            letter_names: None,
        })
    }

    pub fn from_rows(alphabet_size: usize, rows: &[Vec<usize>]) -> Result<Self> {
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != c) {
            return Err(Error::InvalidArray("ragged rows".into()));
        }
        Self::new(rows.len(), c, alphabet_size, rows.concat())
    }

    /// Attach display names, one per letter id.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.alphabet_size {
            return Err(Error::InvalidArray(format!(
                "{} names for an alphabet of size {}",
                names.len(),
                self.alphabet_size
            )));
        }
        self.letter_names = Some(names);
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn letter_names(&self) -> Option<&[String]> {
        self.letter_names.as_deref()
    }

    /// Display name of a letter: its given name, or the id.
    pub fn letter_name(&self, letter: usize) -> String {
        match &self.letter_names {
            Some(names) => names[letter].clone(),
            None => letter.to_string(),
        }
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.grid[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[usize] {
        &self.grid[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<usize> {
        (0..self.rows).map(|i| self.get(i, col)).collect()
    }

    pub fn grid(&self) -> &[usize] {
        &self.grid
    }

    pub fn transpose(&self) -> Self {
        let grid = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j));
        Self {
            rows: self.cols,
            cols: self.rows,
            alphabet_size: self.alphabet_size,
            grid: grid.collect(),
            letter_names: self.letter_names.clone(),
        }
    }

    /// Reorder rows so that new row `i` is old row `perm[i]`.
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rows);
        let grid = perm
            .iter()
            .flat_map(|&i| self.row(i).iter().copied())
            .collect();
        Self {
            grid,
            ..self.clone()
        }
    }

    /// Reorder columns so that new column `j` is old column `perm[j]`.
    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.cols);
        let grid = (0..self.rows)
            .flat_map(|i| perm.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j));
        Self {
            grid: grid.collect(),
            ..self.clone()
        }
    }

    /// Rename letters: letter `x` becomes `perm[x]`. Names are dropped.
    pub fn rename_letters(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.alphabet_size);
        Self {
            grid: self.grid.iter().map(|&x| perm[x]).collect(),
            letter_names: None,
            ..self.clone()
        }
    }

    /// Letters occurring in a row, sorted and deduplicated.
    pub fn row_letters(&self, row: usize) -> Vec<usize> {
        let mut v = self.row(row).to_vec();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn column_letters(&self, col: usize) -> Vec<usize> {
        let mut v = self.column(col);
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `N_LR`: entry (letter, row) counts occurrences of the letter in the row.
    pub fn letter_row_incidence(&self) -> IntegerMatrix {
        let mut n = IntegerMatrix::zeros(self.alphabet_size, self.rows);
        for i in 0..self.rows {
            for &x in self.row(i) {
                n.set(x, i, n.get(x, i) + 1);
            }
        }
        n
    }

    /// `N_LC`: entry (letter, column) counts occurrences of the letter in the column.
    pub fn letter_col_incidence(&self) -> IntegerMatrix {
        let mut n = IntegerMatrix::zeros(self.alphabet_size, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                n.set(x, j, n.get(x, j) + 1);
            }
        }
        n
    }
}

/// All incidence data derived from a [`LetterArray`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceSummary {
    pub n_lr: IntegerMatrix,
    pub n_lc: IntegerMatrix,
    pub replication: Vec<i64>,
    pub row_pair_intersections: IntegerMatrix,
    pub col_pair_intersections: IntegerMatrix,
    pub row_col_intersections: IntegerMatrix,
}

impl IncidenceSummary {
    /// For each column, how many other columns meet it in each intersection value.
    pub fn column_histograms(&self) -> Vec<BTreeMap<i64, usize>> {
        let m = &self.col_pair_intersections;
        (0..m.rows())
            .map(|j| {
                let mut h = BTreeMap::new();
                for k in (0..m.cols()).filter(|&k| k != j) {
                    *h.entry(m.get(j, k)).or_insert(0) += 1;
                }
                h
            })
            .collect()
    }
}

pub fn summarize(array: &LetterArray) -> IncidenceSummary {
    let n_lr = array.letter_row_incidence();
    let n_lc = array.letter_col_incidence();
    let n_rl = n_lr.transpose();
    let n_cl = n_lc.transpose();
    IncidenceSummary {
        replication: n_lr.row_sums(),
        row_pair_intersections: n_rl.mul(&n_lr),
        col_pair_intersections: n_cl.mul(&n_lc),
        row_col_intersections: n_rl.mul(&n_lc),
        n_lr,
        n_lc,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArrayKind {
    #[serde(rename = "TRIPLE")]
    Triple,
    #[serde(rename = "DOUBLE")]
    Double,
    #[serde(rename = "SESQUI")]
    Sesqui,
    #[serde(rename = "AO_ONLY")]
    AoOnly,
    #[serde(rename = "NONE")]
    None,
}

impl fmt::Display for ArrayKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArrayKind::Triple => "TRIPLE",
            ArrayKind::Double => "DOUBLE",
            ArrayKind::Sesqui => "SESQUI",
            ArrayKind::AoOnly => "AO_ONLY",
            ArrayKind::None => "NONE",
        })
    }
}

/// Pass/fail for each of (A0)–(A4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Conditions {
    #[serde(rename = "A0")]
    pub a0: bool,
    #[serde(rename = "A1")]
    pub a1: bool,
    #[serde(rename = "A2")]
    pub a2: bool,
    #[serde(rename = "A3")]
    pub a3: bool,
    #[serde(rename = "A4")]
    pub a4: bool,
}

impl Conditions {
    pub fn kind(&self) -> ArrayKind {
        let Conditions { a0, a1, a2, a3, a4 } = *self;
        match (a0 && a1, a2, a3, a4) {
            (true, true, true, true) => ArrayKind::Triple,
            (true, true, true, false) => ArrayKind::Double,
            (true, true, false, true) => ArrayKind::Sesqui,
            (true, false, false, true) => ArrayKind::AoOnly,
            _ => ArrayKind::None,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, bool)> {
        [
            ("A0", self.a0),
            ("A1", self.a1),
            ("A2", self.a2),
            ("A3", self.a3),
            ("A4", self.a4),
        ]
        .into_iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: ArrayKind,
    pub rows: usize,
    pub cols: usize,
    pub v: usize,
    pub k: Option<usize>,
    pub lambda_rr: Option<usize>,
    pub lambda_cc: Option<usize>,
    /// Distinct intersection numbers of pairs of distinct columns.
    pub gamma: Vec<usize>,
    pub lambda_rc: Option<usize>,
    pub conditions: Conditions,
}

impl Classification {
    /// Standard notation, e.g. `TA(10,3,3,2,3:5x6)` or `SA(8,3,4,{0,2},3:4x6)`.
    pub fn notation(&self) -> String {
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |x| x.to_string());
        let gamma = format!(
            "{{{}}}",
            self.gamma
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        );
        let shape = format!("{}x{}", self.rows, self.cols);
        match self.kind {
            ArrayKind::Triple => format!(
                "TA({},{},{},{},{}:{shape})",
                self.v,
                opt(self.k),
                opt(self.lambda_rr),
                opt(self.lambda_cc),
                opt(self.lambda_rc)
            ),
            ArrayKind::Double => {
                format!(
                    "DA({},{},{},{}:{shape})",
                    self.v,
                    opt(self.k),
                    opt(self.lambda_rr),
                    opt(self.lambda_cc)
                )
            }
            ArrayKind::Sesqui => {
                format!(
                    "SA({},{},{},{gamma},{}:{shape})",
                    self.v,
                    opt(self.k),
                    opt(self.lambda_rr),
                    opt(self.lambda_rc)
                )
            }
            ArrayKind::AoOnly => format!(
                "AO({},{},{}:{shape})",
                self.v,
                opt(self.k),
                opt(self.lambda_rc)
            ),
            ArrayKind::None => format!("NONE({}:{shape})", self.v),
        }
    }
}

fn constant_off_diagonal(m: &IntegerMatrix) -> Option<usize> {
    match m.off_diagonal_values().as_slice() {
        [x] => Some(*x as usize),
        _ => None,
    }
}

fn constant_entries(m: &IntegerMatrix) -> Option<usize> {
    let first = m.get(0, 0);
    (0..m.rows())
        .all(|i| m.row(i).iter().all(|&x| x == first))
        .then_some(first as usize)
}

/// Evaluate (A0)–(A4) and classify the array.
pub fn check_conditions(array: &LetterArray) -> Result<Classification> {
    let (r, c, v) = (array.rows(), array.cols(), array.alphabet_size());
    if v <= r.max(c) {
        return Err(Error::AlphabetTooSmall { v, max: r.max(c) });
    }
    let s = summarize(array);
    let a0 = (0..v).all(|x| s.n_lr.row(x).iter().chain(s.n_lc.row(x)).all(|&n| n <= 1));
    let k = match s.replication.as_slice() {
        [first, rest @ ..] if rest.iter().all(|x| x == first) => Some(*first as usize),
        _ => None,
    };
    let lambda_rr = constant_off_diagonal(&s.row_pair_intersections);
    let lambda_cc = constant_off_diagonal(&s.col_pair_intersections);
    let lambda_rc = constant_entries(&s.row_col_intersections);
    let gamma = s
        .col_pair_intersections
        .off_diagonal_values()
        .into_iter()
        .map(|x| x as usize)
        .collect();
    let conditions = Conditions {
        a0,
        a1: k.is_some(),
        a2: lambda_rr.is_some_and(|x| x > 0),
        a3: lambda_cc.is_some_and(|x| x > 0),
        a4: lambda_rc.is_some(),
    };
    Ok(Classification {
        kind: conditions.kind(),
        rows: r,
        cols: c,
        v,
        k,
        lambda_rr,
        lambda_cc,
        gamma,
        lambda_rc,
        conditions,
    })
}

/// Ranks of the incidence matrices and the inequalities they must satisfy
/// under adjusted orthogonality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank_row_incidence: usize,
    pub rank_col_incidence: usize,
    /// (A4) holds, so the rank-sum bound is a theorem rather than a measurement.
    pub adjusted_orthogonality: bool,
    /// rank(N_RL) + rank(N_LC) ≤ v + 1
    pub rank_sum_bound: bool,
    /// v ≥ r + rank(N_LC) − 1
    pub column_rank_bound: bool,
    /// v ≥ r + c − 1
    pub size_bound: bool,
    /// rank of N_RL·N_LC; equals 1 whenever (A4) holds.
    pub rank_row_col_product: usize,
}

pub fn check_rank_inequalities(array: &LetterArray) -> RankReport {
    let s = summarize(array);
    let (r, c, v) = (array.rows(), array.cols(), array.alphabet_size());
    let rank_row = s.n_lr.rank_exact();
    let rank_col = s.n_lc.rank_exact();
    RankReport {
        rank_row_incidence: rank_row,
        rank_col_incidence: rank_col,
        adjusted_orthogonality: constant_entries(&s.row_col_intersections).is_some(),
        rank_sum_bound: rank_row + rank_col <= v + 1,
        column_rank_bound: v + 1 >= r + rank_col,
        size_bound: v + 1 >= r + c,
        rank_row_col_product: s.row_col_intersections.rank_exact(),
    }
}
