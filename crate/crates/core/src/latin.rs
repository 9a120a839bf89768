//! (n+1)×n² sesqui-arrays on n(n+1) letters from two Latin squares.
//!
//! Inputs are a Latin square `phi1` of order n on letters `0..n`, an n×n grid
//! `phi2` of the remaining n² letters, and a Latin square `phi3` of order
//! n+1 whose top symbol `n` plays the role of ∞. The construction:
//!
//! 1. start from `phi3`;
//! 2. drop the column holding ∞ in the last row;
//! 3. in row i < n, replace ∞ by row i of `phi1`;
//! 4. replace every other symbol s by row s of `phi2`.

use crate::arrays::{summarize, LetterArray};
use crate::{Error, Result};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    n: usize,
    grid: Vec<usize>,
}

impl LatinSquare {
    pub fn new(n: usize, grid: Vec<usize>) -> Result<Self> {
        if n == 0 || grid.len() != n * n {
            return Err(Error::NotLatin(format!(
                "order {n} needs {} cells, got {}",
                n * n,
                grid.len()
            )));
        }
        let sq = Self { n, grid };
        if !sq.is_latin() {
            return Err(Error::NotLatin(
                "a row or column is not a permutation".into(),
            ));
        }
        Ok(sq)
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Self::new(rows.len(), rows.concat())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.grid[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.grid[i * self.n..(i + 1) * self.n]
    }

    pub fn is_latin(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        let lines_ok = |cell: &dyn Fn(usize, usize) -> usize, seen: &mut Vec<bool>| {
            (0..n).all(|a| {
                seen.fill(false);
                (0..n).all(|b| {
                    let x = cell(a, b);
                    x < n && !std::mem::replace(&mut seen[x], true)
                })
            })
        };
        lines_ok(&|i, j| self.get(i, j), &mut seen) && lines_ok(&|j, i| self.get(i, j), &mut seen)
    }

    /// Apply a row, column and symbol permutation (an isotopism).
    pub fn isotope(&self, rows: &[usize], cols: &[usize], symbols: &[usize]) -> Self {
        let n = self.n;
        let grid = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| symbols[self.get(rows[i], cols[j])]);
        Self {
            n,
            grid: grid.collect(),
        }
    }
}

/// `grid[i][j] = (i + j) mod n`.
pub fn cyclic_latin(n: usize) -> LatinSquare {
    assert!(n >= 1, "order must be positive");
    LatinSquare {
        n,
        grid: (0..n * n).map(|x| (x / n + x % n) % n).collect(),
    }
}

/// The canonical letter grid: cell (i, j) holds letter `n + i·n + j`.
pub fn canonical_phi2(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| n + i * n + j).collect())
        .collect()
}

pub fn construct_latin_sesqui(
    phi1: &LatinSquare,
    phi2: &[Vec<usize>],
    phi3: &LatinSquare,
) -> Result<LetterArray> {
    let n = phi1.order();
    if n < 2 {
        return Err(Error::DimensionMismatch(format!("order {n} is below 2")));
    }
    if phi3.order() != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "phi3 has order {}, expected {}",
            phi3.order(),
            n + 1
        )));
    }
    if phi2.len() != n || phi2.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("phi2 must be {n}x{n}")));
    }
    let v = n * n + n;
    let mut seen = vec![false; v];
    for &x in phi2.iter().flatten() {
        if x < n {
            return Err(Error::AlphabetOverlap(format!(
                "phi2 letter {x} is also a phi1 letter"
            )));
        }
        if x >= v || std::mem::replace(&mut seen[x], true) {
            return Err(Error::DimensionMismatch(format!(
                "phi2 letters must be distinct ids in {n}..{v}"
            )));
        }
    }

    let infinity = n;
    let dropped = (0..=n)
        .find(|&j| phi3.get(n, j) == infinity)
        .expect("Latin square row contains every symbol");
    let kept: Vec<usize> = (0..=n).filter(|&j| j != dropped).collect();
    let mut grid = Vec::with_capacity((n + 1) * n * n);
    for i in 0..=n {
        for &j in &kept {
            match phi3.get(i, j) {
                s if s == infinity => grid.extend_from_slice(phi1.row(i)),
                s => grid.extend_from_slice(&phi2[s]),
            }
        }
    }
    LetterArray::new(n + 1, n * n, v, grid)
}

/// Construction with cyclic `phi1`, `phi3` and the canonical letter grid.
pub fn construct_default(n: usize) -> Result<LetterArray> {
    if n < 2 {
        return Err(Error::DimensionMismatch(format!("order {n} is below 2")));
    }
    construct_latin_sesqui(&cyclic_latin(n), &canonical_phi2(n), &cyclic_latin(n + 1))
}

/// For each column, the number of other columns meeting it in each
/// intersection value.
pub fn column_histogram(array: &LetterArray) -> Vec<BTreeMap<usize, usize>> {
    summarize(array)
        .column_histograms()
        .into_iter()
        .map(|h| h.into_iter().map(|(k, v)| (k as usize, v)).collect())
        .collect()
}
