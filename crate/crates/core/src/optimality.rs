//! Information matrices and canonical efficiency factors.
//!
//! For a binary equireplicate design with replication ρ, block size s and
//! incidence N (points × blocks) the information matrix is I − (ρs)⁻¹NNᵀ.
//! Its nonzero eigenvalues are the canonical efficiency factors; their
//! minimum, harmonic mean and geometric mean are the E, A and D criteria.

use crate::arrays::{summarize, LetterArray};
use crate::designs::{dual, BlockDesign};
use crate::{Error, IntegerMatrix, Result};
use num_rational::Ratio;
use serde::Serialize;
use std::fmt;

pub const JACOBI_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
pub const GROUPING_TOLERANCE: f64 = 1e-7;
pub const SNAP_DENOMINATOR: i64 = 10_000;

/// Dense real symmetric matrix, row-major.
#[derive(Clone, PartialEq, Serialize)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    /// Only the upper triangle of `f` is consulted.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                entries[i * n + j] = x;
                entries[j * n + i] = x;
            }
        }
        Self { n, entries }
    }

    pub fn from_integer(m: &IntegerMatrix, scale: f64) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::DimensionMismatch("matrix is not symmetric".into()));
        }
        Ok(Self::from_fn(m.rows(), |i, j| m.get(i, j) as f64 * scale))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMatrix {}x{}", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| format!("{:.6}", self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// All eigenvalues, ascending, by cyclic Jacobi rotations.
///
/// Converged once the off-diagonal Frobenius mass drops below `tol · ‖m‖`.
pub fn eigen_sym(m: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    let n = m.n;
    let mut a = m.entries.clone();
    let scale = m.frobenius().max(f64::MIN_POSITIVE);
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) >= tol * scale {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Best rational approximation with denominator at most `max_den`, kept
/// only if it reproduces `x` to within 1e-8.
pub fn snap_rational(x: f64, max_den: i64) -> Option<Ratio<i64>> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut rest = x;
    let mut best = None;
    for _ in 0..64 {
        let a = rest.floor();
        if a.abs() > 1e15 {
            break;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        best = Some(Ratio::new(h1, k1));
        let frac = rest - a as f64;
        if frac.abs() < 1e-13 {
            break;
        }
        rest = 1.0 / frac;
    }
    best.filter(|r| (x * *r.denom() as f64 - *r.numer() as f64).abs() <= 1e-8 * *r.denom() as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Factor {
    pub value: f64,
    pub multiplicity: usize,
    /// The snapped rational when it verifies.
    #[serde(serialize_with = "ser_ratio")]
    pub exact: Option<Ratio<i64>>,
}

fn ser_ratio<S: serde::Serializer>(
    r: &Option<Ratio<i64>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EfficiencySpectrum {
    /// Ascending distinct values with multiplicities.
    pub factors: Vec<Factor>,
    pub mu_1: f64,
    pub mu_a: f64,
    pub mu_d: f64,
    pub connected: bool,
}

impl EfficiencySpectrum {
    pub fn count(&self) -> usize {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }

    pub fn sum(&self) -> f64 {
        self.factors
            .iter()
            .map(|f| f.value * f.multiplicity as f64)
            .sum()
    }

    pub fn mu_1_exact(&self) -> Option<Ratio<i64>> {
        snap_rational(self.mu_1, SNAP_DENOMINATOR)
    }

    pub fn mu_a_exact(&self) -> Option<Ratio<i64>> {
        snap_rational(self.mu_a, SNAP_DENOMINATOR)
    }

    /// `(value, multiplicity)` pairs using the exact value where available.
    pub fn exact_factors(&self) -> Option<Vec<(Ratio<i64>, usize)>> {
        self.factors
            .iter()
            .map(|f| f.exact.map(|r| (r, f.multiplicity)))
            .collect()
    }

    /// e.g. `2/3:3 1:2`
    pub fn factor_string(&self) -> String {
        self.factors
            .iter()
            .map(|f| match f.exact {
                Some(r) => format!("{r}:{}", f.multiplicity),
                None => format!("{:.9}:{}", f.value, f.multiplicity),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Drop the single zero eigenvalue, group the rest, and compute the criteria.
pub fn spectrum_from_matrix(m: &SymMatrix) -> Result<EfficiencySpectrum> {
    let ev = eigen_sym(m, JACOBI_TOLERANCE)?;
    let zero = 1e-8 * m.n as f64;
    let zeros = ev.iter().filter(|x| x.abs() < zero).count();
    if zeros != 1 {
        return Err(Error::Disconnected { zeros });
    }
    let nonzero: Vec<f64> = ev.into_iter().filter(|x| x.abs() >= zero).collect();
    let mut factors: Vec<Factor> = Vec::new();
    let mut group: Vec<f64> = Vec::new();
    let mut flush = |group: &mut Vec<f64>| {
        if !group.is_empty() {
            let value = group.iter().sum::<f64>() / group.len() as f64;
            factors.push(Factor {
                value,
                multiplicity: group.len(),
                exact: snap_rational(value, SNAP_DENOMINATOR),
            });
            group.clear();
        }
    };
    for &x in &nonzero {
        if group
            .last()
            .is_some_and(|&last| x - last > GROUPING_TOLERANCE)
        {
            flush(&mut group);
        }
        group.push(x);
    }
    flush(&mut group);
    let n = nonzero.len() as f64;
    Ok(EfficiencySpectrum {
        factors,
        mu_1: nonzero.first().copied().unwrap_or(f64::NAN),
        mu_a: n / nonzero.iter().map(|x| 1.0 / x).sum::<f64>(),
        mu_d: (nonzero.iter().map(|x| x.ln()).sum::<f64>() / n).exp(),
        connected: true,
    })
}

/// I − (ρs)⁻¹NNᵀ for a design with replication ρ and block size s.
pub fn block_information_matrix(d: &BlockDesign) -> Result<SymMatrix> {
    let rho = d.constant_replication().ok_or(Error::NotEquireplicate)?;
    let s = d.constant_block_size().ok_or(Error::BlockSizesVary)?;
    let n = d.incidence();
    let nnt = n.mul(&n.transpose());
    let scale = 1.0 / (rho * s) as f64;
    Ok(SymMatrix::from_fn(
        d.points(),
        |i, j| if i == j { 1.0 } else { 0.0 } - nnt.get(i, j) as f64 * scale,
    ))
}

pub fn efficiency_spectrum(d: &BlockDesign) -> Result<EfficiencySpectrum> {
    spectrum_from_matrix(&block_information_matrix(d)?)
}

/// Σ factor·multiplicity = c(k−1)/k.
pub fn spectrum_sum_check(s: &EfficiencySpectrum, c: usize, k: usize) -> bool {
    (s.sum() - c as f64 * (k as f64 - 1.0) / k as f64).abs() < 1e-8
}

/// The dual's factors are the design's together with b − v extra ones
/// (or the other way round when b < v).
pub fn dual_spectrum_check(d: &BlockDesign) -> Result<bool> {
    let s = efficiency_spectrum(d)?;
    let t = efficiency_spectrum(&dual(d))?;
    let expand = |s: &EfficiencySpectrum| -> Vec<f64> {
        s.factors
            .iter()
            .flat_map(|f| std::iter::repeat_n(f.value, f.multiplicity))
            .collect()
    };
    let (small, large) = if d.blocks().len() >= d.points() {
        (expand(&s), expand(&t))
    } else {
        (expand(&t), expand(&s))
    };
    let extra = large.len() - small.len();
    let mut padded = small;
    padded.extend(std::iter::repeat_n(1.0, extra));
    padded.sort_by(f64::total_cmp);
    Ok(padded.iter().zip(&large).all(|(a, b)| (a - b).abs() < 1e-8))
}

/// n² points (i, j) ↦ i·n + j; blocks are the rows, then the columns, then
/// (for r = 3) the symbols of the cyclic Latin square i + j mod n.
pub fn square_lattice(n: usize, r: usize) -> Result<BlockDesign> {
    if !(2..=3).contains(&r) {
        return Err(Error::UnsupportedReplication(r));
    }
    if n < 2 {
        return Err(Error::InvalidDesign(format!(
            "lattice needs n >= 2, got {n}"
        )));
    }
    let mut blocks: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| i * n + j).collect())
        .collect();
    blocks.extend((0..n).map(|j| (0..n).map(|i| i * n + j).collect()));
    if r == 3 {
        blocks.extend((0..n).map(|s| (0..n).map(|i| i * n + (s + n - i) % n).collect()));
    }
    BlockDesign::new(n * n, blocks)
}

fn component(array: &LetterArray, by_row: bool) -> Result<BlockDesign> {
    let (count, line): (usize, Box<dyn Fn(usize) -> Vec<usize>>) = if by_row {
        (array.rows(), Box::new(|i| array.row(i).to_vec()))
    } else {
        (array.cols(), Box::new(|j| array.column(j)))
    };
    let mut blocks = vec![Vec::new(); array.alphabet_size()];
    for i in 0..count {
        let mut letters = line(i);
        letters.sort_unstable();
        if letters.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotBinary);
        }
        for x in letters {
            blocks[x].push(i);
        }
    }
    BlockDesign::new(count, blocks)
}

/// Rows as points, one block per letter holding the rows it occurs in.
pub fn row_component(array: &LetterArray) -> Result<BlockDesign> {
    component(array, true)
}

/// Columns as points, one block per letter holding the columns it occurs in.
pub fn column_component(array: &LetterArray) -> Result<BlockDesign> {
    component(array, false)
}

fn letter_replication(array: &LetterArray) -> Result<usize> {
    let mut counts = vec![0usize; array.alphabet_size()];
    for &x in array.grid() {
        counts[x] += 1;
    }
    match counts.split_first() {
        Some((&k, rest)) if rest.iter().all(|&c| c == k) => Ok(k),
        _ => Err(Error::NotEquireplicate),
    }
}

/// I − (rk)⁻¹N_LC N_CL − (ck)⁻¹N_LR N_RL + v⁻¹J on the letters.
///
/// The J term uses v⁻¹ so that the all-ones vector lies in the kernel.
pub fn combined_information_matrix(array: &LetterArray) -> Result<SymMatrix> {
    let k = letter_replication(array)? as f64;
    let s = summarize(array);
    let (r, c, v) = (
        array.rows() as f64,
        array.cols() as f64,
        array.alphabet_size() as f64,
    );
    let lc = s.n_lc.mul(&s.n_lc.transpose());
    let lr = s.n_lr.mul(&s.n_lr.transpose());
    Ok(SymMatrix::from_fn(array.alphabet_size(), |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        id - lc.get(i, j) as f64 / (r * k) - lr.get(i, j) as f64 / (c * k) + 1.0 / v
    }))
}

/// N_LR N_RL and N_LC N_CL commute (checked exactly).
pub fn general_balance_check(array: &LetterArray) -> bool {
    let s = summarize(array);
    let lr = s.n_lr.mul(&s.n_lr.transpose());
    let lc = s.n_lc.mul(&s.n_lc.transpose());
    lr.mul(&lc) == lc.mul(&lr)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmIdentity {
    pub mu_ar: f64,
    pub mu_ac: f64,
    pub mu_arc: f64,
    /// 1/μ_ARC − (1/μ_AR + 1/μ_AC − 1)
    pub gap: f64,
}

pub fn em_identity(array: &LetterArray) -> Result<EmIdentity> {
    let k = letter_replication(array)? as f64;
    let s = summarize(array);
    let (r, c) = (array.rows() as f64, array.cols() as f64);
    let letter_info = |n: &IntegerMatrix, size: f64| {
        let g = n.mul(&n.transpose());
        SymMatrix::from_fn(
            g.rows(),
            |i, j| if i == j { 1.0 } else { 0.0 } - g.get(i, j) as f64 / (k * size),
        )
    };
    let mu_ar = spectrum_from_matrix(&letter_info(&s.n_lr, c))?.mu_a;
    let mu_ac = spectrum_from_matrix(&letter_info(&s.n_lc, r))?.mu_a;
    let mu_arc = spectrum_from_matrix(&combined_information_matrix(array)?)?.mu_a;
    Ok(EmIdentity {
        mu_ar,
        mu_ac,
        mu_arc,
        gap: 1.0 / mu_arc - (1.0 / mu_ar + 1.0 / mu_ac - 1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{develop, AbelianGroup};
    use crate::format::parse_array;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    fn exact(s: &EfficiencySpectrum) -> Vec<(Ratio<i64>, usize)> {
        s.exact_factors().expect("all factors snap")
    }

    // Roots of a monic cubic with three real roots, trigonometric form.
    fn cubic_roots(b: f64, c: f64, d: f64) -> Vec<f64> {
        let p = c - b * b / 3.0;
        let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
        let shift = -b / 3.0;
        if p.abs() < 1e-14 {
            let t = (-q).cbrt();
            return vec![t + shift; 3];
        }
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        let mut roots: Vec<f64> = (0..3)
            .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + shift)
            .collect();
        roots.sort_by(f64::total_cmp);
        roots
    }

    #[test]
    fn eigen_trivial_cases() {
        let d = SymMatrix::from_fn(3, |i, j| if i == j { (i + 1) as f64 } else { 0.0 });
        assert_eq!(eigen_sym(&d, 1e-12).unwrap(), vec![1.0, 2.0, 3.0]);
        let swap = SymMatrix::from_fn(2, |i, j| if i == j { 0.0 } else { 1.0 });
        let ev = eigen_sym(&swap, 1e-12).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
        let ones = SymMatrix::from_fn(4, |_, _| 1.0);
        let ev = eigen_sym(&ones, 1e-12).unwrap();
        assert!(ev[..3].iter().all(|x| x.abs() < 1e-12) && (ev[3] - 4.0).abs() < 1e-12);
    }

    #[test]
    fn snapping() {
        assert_eq!(snap_rational(2.0 / 3.0, 10_000), Some(r(2, 3)));
        assert_eq!(snap_rational(330.0 / 419.0, 10_000), Some(r(330, 419)));
        assert_eq!(snap_rational(1.0, 10_000), Some(r(1, 1)));
        assert_eq!(snap_rational(std::f64::consts::PI, 100), None);
    }

    #[test]
    fn totally_confounded_block_has_zero_row_sums() {
        let d = BlockDesign::new(4, vec![vec![0, 1, 2, 3]]).unwrap();
        let m = block_information_matrix(&d).unwrap();
        assert!(m.apply(&[1.0; 4]).iter().all(|x| x.abs() < 1e-15));
        assert_eq!(exact(&efficiency_spectrum(&d).unwrap()), vec![(r(1, 1), 3)]);
        let split = BlockDesign::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            efficiency_spectrum(&split).unwrap_err(),
            Error::Disconnected { zeros: 2 }
        );
    }

    #[test]
    fn information_matrix_errors() {
        let unequal = BlockDesign::new(3, vec![vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(
            block_information_matrix(&unequal).unwrap_err(),
            Error::NotEquireplicate
        );
        let sizes = BlockDesign::new(3, vec![vec![0, 1, 2], vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(
            block_information_matrix(&sizes).unwrap_err(),
            Error::BlockSizesVary
        );
    }

    #[test]
    fn cyclic_six_spectrum() {
        let d = develop(
            &[vec![1, 2, 5], vec![1, 3, 5]],
            &AbelianGroup::cyclic(6).unwrap(),
        )
        .unwrap();
        let s = efficiency_spectrum(&d).unwrap();
        assert_eq!(exact(&s), vec![(r(2, 3), 1), (r(3, 4), 2), (r(11, 12), 2)]);
        assert_eq!(s.mu_a_exact(), Some(r(330, 419)));
        assert!(spectrum_sum_check(&s, 6, 3));
    }

    #[test]
    fn sesqui_4x6_column_component() {
        let a = parse_array(include_str!("../data/sesqui_4x6.txt")).unwrap();
        let d = column_component(&a).unwrap();
        let s = efficiency_spectrum(&d).unwrap();
        assert_eq!(exact(&s), vec![(r(2, 3), 3), (r(1, 1), 2)]);
        assert_eq!(s.mu_1_exact(), Some(r(2, 3)));
        assert_eq!(s.mu_a_exact(), Some(r(10, 13)));
        assert!(spectrum_sum_check(&s, 6, 3));
        let mut perturbed = s.clone();
        perturbed.factors[0].value += 1e-6;
        assert!(!spectrum_sum_check(&perturbed, 6, 3));
    }

    #[test]
    fn balanced_design_has_one_factor() {
        // Fano plane: c(k−1)/((c−1)k) = 7·2/(6·3) = 7/9
        let fano = develop(&[vec![0, 1, 3]], &AbelianGroup::cyclic(7).unwrap()).unwrap();
        let s = efficiency_spectrum(&fano).unwrap();
        assert_eq!(exact(&s), vec![(r(7, 9), 6)]);
        assert!(dual_spectrum_check(&fano).unwrap());
    }

    #[test]
    fn lattices() {
        let s = efficiency_spectrum(&square_lattice(4, 3).unwrap()).unwrap();
        assert_eq!(s.mu_1_exact(), Some(r(2, 3)));
        assert_eq!(s.mu_a_exact(), Some(r(10, 13)));
        let s = efficiency_spectrum(&square_lattice(3, 2).unwrap()).unwrap();
        assert_eq!(s.mu_1_exact(), Some(r(1, 2)));
        for n in 2..6 {
            let d = square_lattice(n, 2).unwrap();
            assert!(crate::designs::concurrence_matrix(&d)
                .off_diagonal_values()
                .iter()
                .all(|&x| x <= 1));
        }
        assert!(dual_spectrum_check(&square_lattice(3, 3).unwrap()).unwrap());
        assert_eq!(
            square_lattice(3, 4).unwrap_err(),
            Error::UnsupportedReplication(4)
        );
    }

    #[test]
    fn combined_matrix_kills_constants() {
        let a = parse_array(include_str!("../data/triple_5x6.txt")).unwrap();
        let m = combined_information_matrix(&a).unwrap();
        assert!(m
            .apply(&vec![1.0; a.alphabet_size()])
            .iter()
            .all(|x| x.abs() < 1e-12));
        let ev = eigen_sym(&m, 1e-12).unwrap();
        assert_eq!(ev.iter().filter(|x| x.abs() < 1e-8).count(), 1);
        assert!((ev.iter().sum::<f64>() - m.trace()).abs() < 1e-9);
        let one = LetterArray::new(1, 1, 1, vec![0]).unwrap();
        assert!(combined_information_matrix(&one).unwrap().get(0, 0).abs() < 1e-15);
    }

    #[test]
    fn general_balance_and_em() {
        let triple = parse_array(include_str!("../data/triple_5x6.txt")).unwrap();
        assert!(general_balance_check(&triple));
        assert!(em_identity(&triple).unwrap().gap.abs() < 1e-7);
        let double = parse_array(include_str!("../data/double_3x4.txt")).unwrap();
        assert!(em_identity(&double).unwrap().gap.is_finite());
    }

    #[test]
    fn components_reject_repeats() {
        let a = LetterArray::from_rows(2, &[vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(row_component(&a).unwrap_err(), Error::NotBinary);
        assert!(column_component(&a).is_ok());
    }

    proptest! {
        #[test]
        fn eigen_2x2_matches_closed_form(a in -20i32..20, b in -20i32..20, d in -20i32..20, den in 1i32..7) {
            let (a, b, d) = (a as f64 / den as f64, b as f64 / den as f64, d as f64 / den as f64);
            let m = SymMatrix::from_fn(2, |i, j| match (i, j) { (0, 0) => a, (1, 1) => d, _ => b });
            let disc = ((a - d) * (a - d) + 4.0 * b * b).sqrt();
            let ev = eigen_sym(&m, 1e-12).unwrap();
            prop_assert!((ev[0] - (a + d - disc) / 2.0).abs() < 1e-10);
            prop_assert!((ev[1] - (a + d + disc) / 2.0).abs() < 1e-10);
        }

        #[test]
        fn eigen_3x3_matches_characteristic_roots(e in prop::array::uniform6(-9i32..10), den in 1i32..5) {
            let v: Vec<f64> = e.iter().map(|&x| x as f64 / den as f64).collect();
            let m = SymMatrix::from_fn(3, |i, j| match (i, j) {
                (0, 0) => v[0], (1, 1) => v[1], (2, 2) => v[2],
                (0, 1) => v[3], (0, 2) => v[4], _ => v[5],
            });
            let g = |i, j| m.get(i, j);
            let tr = m.trace();
            let minors = g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1) + g(0, 0) * g(2, 2) - g(0, 2) * g(0, 2)
                + g(1, 1) * g(2, 2) - g(1, 2) * g(1, 2);
            let det = g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(1, 2)) - g(0, 1) * (g(0, 1) * g(2, 2) - g(1, 2) * g(0, 2))
                + g(0, 2) * (g(0, 1) * g(1, 2) - g(1, 1) * g(0, 2));
            let oracle = cubic_roots(-tr, minors, -det);
            let ev = eigen_sym(&m, 1e-12).unwrap();
            // symmetric functions of the eigenvalues are exact in the entries
            let scale = 1.0 + m.frobenius().powi(3);
            prop_assert!((ev.iter().sum::<f64>() - tr).abs() < 1e-10 * scale);
            prop_assert!((ev[0] * ev[1] + ev[0] * ev[2] + ev[1] * ev[2] - minors).abs() < 1e-10 * scale);
            prop_assert!((ev[0] * ev[1] * ev[2] - det).abs() < 1e-10 * scale);
            // the trigonometric form loses digits on clustered roots
            if oracle.windows(2).all(|w| w[1] - w[0] > 1e-3) {
                for (x, y) in ev.iter().zip(&oracle) {
                    prop_assert!((x - y).abs() < 1e-10 * (1.0 + m.frobenius()), "{:?} vs {:?}", ev, oracle);
                }
            }
        }
    }
}
