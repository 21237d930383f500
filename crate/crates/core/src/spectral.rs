//! Symmetric eigendecomposition and the spectral objects built on it:
//! distinct spectrum, principal idempotents, crossed local multiplicities,
//! quotient matrices, and interlacing.

use crate::graph::Graph;
use crate::matrix::Mat;
use thiserror::Error;

/// Numerical tolerances used across the spectral and characterization layers.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Scalar eigenvalue comparisons.
    pub tol_eig: f64,
    /// Entrywise matrix identity checks.
    pub tol_mat: f64,
    /// Relative gap below which eigenvalues are grouped as one distinct value.
    pub tol_group_rel: f64,
    /// Scalar equality in the excess-type verdicts.
    pub tol_set: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            tol_eig: 1e-6,
            tol_mat: 1e-6,
            tol_group_rel: 1e-7,
            tol_set: 1e-6,
        }
    }
}

impl Tolerances {
    /// Uniform tolerance override (CLI `--tol` / `BS_TOL`).
    pub fn uniform(t: f64) -> Self {
        Tolerances {
            tol_eig: t,
            tol_mat: t,
            tol_group_rel: 1e-7,
            tol_set: t,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("matrix is not symmetric (max asymmetry {0:.3e})")]
    NotSymmetric(f64),
    #[error("Jacobi iteration did not converge; off-diagonal residual {0:.3e}")]
    NoConvergence(f64),
    #[error("ambiguous eigenvalue grouping near gap {0:.3e} (tolerance {1:.3e})")]
    AmbiguousGrouping(f64, f64),
    #[error("quotient partition is invalid: {0}")]
    BadPartition(String),
    #[error("spectra sizes incompatible for interlacing: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("zero vector")]
    ZeroVector,
}

/// Full eigendecomposition of a symmetric matrix: eigenvalues descending,
/// orthonormal eigenvector columns paired by index.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub vectors: Mat,
}

const SYM_TOL: f64 = 1e-12;
const JACOBI_REL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// `1e-12 * ||M||_F` (or 100 sweeps, which is reported as failure).
pub fn eigen_symmetric(m: &Mat) -> Result<EigenDecomposition, SpectralError> {
    let asym = m.max_asymmetry();
    if asym > SYM_TOL {
        return Err(SpectralError::NotSymmetric(asym));
    }
    let n = m.n();
    let mut a = m.clone();
    let mut v = Mat::identity(n);
    let target = JACOBI_REL_TOL * m.norm_frobenius().max(f64::MIN_POSITIVE);

    let off = |a: &Mat| {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += 2.0 * a[(p, q)] * a[(p, q)];
            }
        }
        s.sqrt()
    };

    let mut residual = off(&a);
    let mut sweeps = 0;
    while residual > target && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= target / (n as f64) {
                    continue;
                }
                // rotation angle from the 2x2 subproblem
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        residual = off(&a);
        sweeps += 1;
    }
    if residual > target {
        return Err(SpectralError::NoConvergence(residual));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].partial_cmp(&a[(i, i)]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = Mat::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(EigenDecomposition { eigenvalues, vectors })
}

/// Distinct eigenvalues theta_0 > ... > theta_d with multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct DistinctSpectrum {
    pub thetas: Vec<f64>,
    pub mults: Vec<usize>,
}

impl DistinctSpectrum {
    /// Number of distinct eigenvalues minus one.
    pub fn d(&self) -> usize {
        self.thetas.len() - 1
    }

    pub fn n(&self) -> usize {
        self.mults.iter().sum()
    }

    pub fn spread(&self) -> f64 {
        self.thetas[0] - self.thetas[self.d()]
    }

    /// True when theta_i = -theta_{d-i} and m_i = m_{d-i} within `tol`.
    pub fn is_symmetric(&self, tol: f64) -> bool {
        let d = self.d();
        (0..=d).all(|i| {
            (self.thetas[i] + self.thetas[d - i]).abs() <= tol && self.mults[i] == self.mults[d - i]
        })
    }
}

/// Groups near-equal eigenvalues by single linkage on the sorted sequence.
///
/// The grouping tolerance is `1e-7 * max(1, spectral spread)`; adjacency
/// spectra of small integer matrices keep distinct values far above the
/// Jacobi residual, and a gap landing near the tolerance is reported as
/// `AmbiguousGrouping` instead of being silently resolved.
pub fn distinct_spectrum(
    e: &EigenDecomposition,
    tols: &Tolerances,
) -> Result<DistinctSpectrum, SpectralError> {
    let lambda = &e.eigenvalues;
    let spread = lambda[0] - lambda[lambda.len() - 1];
    let tol = tols.tol_group_rel * spread.max(1.0);
    for w in lambda.windows(2) {
        let gap = w[0] - w[1];
        if gap > tol / 10.0 && gap < tol * 10.0 {
            return Err(SpectralError::AmbiguousGrouping(gap, tol));
        }
    }
    let mut thetas = Vec::new();
    let mut mults = Vec::new();
    let mut start = 0;
    for k in 1..=lambda.len() {
        if k == lambda.len() || lambda[k - 1] - lambda[k] > tol {
            let group = &lambda[start..k];
            thetas.push(group.iter().sum::<f64>() / group.len() as f64);
            mults.push(group.len());
            start = k;
        }
    }
    Ok(DistinctSpectrum { thetas, mults })
}

/// Principal idempotents E_0..E_d (projections onto the eigenspaces).
#[derive(Debug, Clone)]
pub struct Idempotents {
    pub mats: Vec<Mat>,
}

impl Idempotents {
    /// Crossed uv-local multiplicities m_uv(theta_i) for i = 0..=d.
    pub fn crossed_multiplicities(&self, u: usize, v: usize) -> Vec<f64> {
        self.mats.iter().map(|e| e[(u, v)]).collect()
    }

    /// Local multiplicities m_u(theta_i) (the diagonal entries).
    pub fn local_multiplicities(&self, u: usize) -> Vec<f64> {
        self.crossed_multiplicities(u, u)
    }
}

/// Assembles E_i as the outer-product sum over the orthonormal eigenvectors
/// of group i (the grouping is contiguous in the sorted decomposition).
pub fn idempotents(e: &EigenDecomposition, s: &DistinctSpectrum) -> Idempotents {
    let n = e.vectors.n();
    let mut mats = Vec::with_capacity(s.thetas.len());
    let mut col = 0;
    for &m in &s.mults {
        let mut ei = Mat::zeros(n);
        for k in col..col + m {
            ei.add_outer(&e.vectors.column(k), 1.0);
        }
        mats.push(ei);
        col += m;
    }
    Idempotents { mats }
}

/// Spectral walk count: sum of m_uv(theta_i) * theta_i^l over i.
pub fn walk_count_spectral(s: &DistinctSpectrum, crossed: &[f64], len: usize) -> f64 {
    s.thetas
        .iter()
        .zip(crossed)
        .map(|(&t, &m)| m * t.powi(len as i32))
        .sum()
}

/// Average row sums of the adjacency blocks induced by a vertex partition.
#[derive(Debug, Clone)]
pub struct QuotientMatrix {
    pub b: Mat,
    pub partition: Vec<Vec<usize>>,
}

pub fn quotient_matrix(g: &Graph, partition: &[Vec<usize>]) -> Result<QuotientMatrix, SpectralError> {
    let mut seen = vec![false; g.n()];
    for cell in partition {
        if cell.is_empty() {
            return Err(SpectralError::BadPartition("empty cell".into()));
        }
        for &u in cell {
            if u >= g.n() || seen[u] {
                return Err(SpectralError::BadPartition(format!(
                    "vertex {u} repeated or out of range"
                )));
            }
            seen[u] = true;
        }
    }
    if !seen.iter().all(|&x| x) {
        return Err(SpectralError::BadPartition("partition does not cover V".into()));
    }
    let m = partition.len();
    let mut b = Mat::zeros(m);
    for (i, ci) in partition.iter().enumerate() {
        for (j, cj) in partition.iter().enumerate() {
            let total: usize = ci
                .iter()
                .map(|&u| cj.iter().filter(|&&v| g.has_edge(u, v)).count())
                .sum();
            b[(i, j)] = total as f64 / ci.len() as f64;
        }
    }
    Ok(QuotientMatrix {
        b,
        partition: partition.to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlacingReport {
    pub interlaces: bool,
    pub tight: bool,
}

/// Verifies lambda_{n-m+i} <= mu_i <= lambda_i (1-based), with slack `tol`,
/// and detects tightness: some k with mu_i = lambda_i for i <= k and
/// mu_i = lambda_{n-m+i} beyond.
pub fn check_interlacing(
    lambda: &[f64],
    mu: &[f64],
    tol: f64,
) -> Result<InterlacingReport, SpectralError> {
    let (n, m) = (lambda.len(), mu.len());
    if m > n {
        return Err(SpectralError::SizeMismatch(n, m));
    }
    let mut interlaces = true;
    for i in 0..m {
        if mu[i] > lambda[i] + tol || mu[i] < lambda[n - m + i] - tol {
            interlaces = false;
        }
    }
    let tight = interlaces
        && (0..=m).any(|k| {
            (0..k).all(|i| (mu[i] - lambda[i]).abs() <= tol)
                && (k..m).all(|i| (mu[i] - lambda[n - m + i]).abs() <= tol)
        });
    Ok(InterlacingReport { interlaces, tight })
}

/// <x, Ax> / ||x||^2.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64, SpectralError> {
    assert_eq!(x.len(), g.n());
    let norm2: f64 = x.iter().map(|a| a * a).sum();
    if norm2 == 0.0 {
        return Err(SpectralError::ZeroVector);
    }
    let mut quad = 0.0;
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            quad += x[u] * x[v];
        }
    }
    Ok(quad / norm2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::bipartition;

    fn spectrum_of(g: &Graph) -> (EigenDecomposition, DistinctSpectrum) {
        let e = eigen_symmetric(&g.adjacency()).unwrap();
        let s = distinct_spectrum(&e, &Tolerances::default()).unwrap();
        (e, s)
    }

    #[test]
    fn identity_eigen() {
        let e = eigen_symmetric(&Mat::identity(3)).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn k2_eigen() {
        let g = catalog::complete(2);
        let e = eigen_symmetric(&g.adjacency()).unwrap();
        assert!((e.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((e.eigenvalues[1] + 1.0).abs() < 1e-12);
        let v0 = e.vectors.column(0);
        assert!((v0[0].abs() - 1.0 / 2f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn not_symmetric_rejected() {
        let mut m = Mat::zeros(2);
        m[(0, 1)] = 1.0;
        assert!(matches!(
            eigen_symmetric(&m),
            Err(SpectralError::NotSymmetric(_))
        ));
    }

    #[test]
    fn c4_distinct_spectrum() {
        let (_, s) = spectrum_of(&catalog::cycle(4));
        assert_eq!(s.mults, vec![1, 2, 1]);
        assert!((s.thetas[0] - 2.0).abs() < 1e-10);
        assert!(s.thetas[1].abs() < 1e-10);
        assert!((s.thetas[2] + 2.0).abs() < 1e-10);
        assert_eq!(s.d(), 2);
    }

    #[test]
    fn k23_distinct_spectrum() {
        let (_, s) = spectrum_of(&catalog::complete_bipartite(2, 3));
        assert_eq!(s.mults, vec![1, 3, 1]);
        assert!((s.thetas[0] - 6f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn k2_d_is_1() {
        let (_, s) = spectrum_of(&catalog::complete(2));
        assert_eq!(s.d(), 1);
        assert_eq!(s.mults, vec![1, 1]);
    }

    #[test]
    fn c4_idempotents_and_crossed_multiplicities() {
        let g = catalog::cycle(4);
        let (e, s) = spectrum_of(&g);
        let idem = idempotents(&e, &s);
        // E0 = J/4 for a connected regular graph
        let e0 = &idem.mats[0];
        assert!(e0.sub(&{
            let mut j = Mat::ones(4);
            j.scale(0.25);
            j
        })
        .norm_inf()
            < 1e-10);
        // E2 in part-contiguous order has the +-J/n block pattern
        let b = bipartition(&g).unwrap();
        let e2 = &idem.mats[2];
        for u in 0..4 {
            for v in 0..4 {
                let want = if b.same_part(u, v) { 0.25 } else { -0.25 };
                assert!((e2[(u, v)] - want).abs() < 1e-10);
            }
        }
        // completeness: E1 = I - E0 - E2
        let mut sum = idem.mats[0].clone();
        sum.add_scaled(&idem.mats[1], 1.0);
        sum.add_scaled(&idem.mats[2], 1.0);
        assert!(sum.sub(&Mat::identity(4)).norm_inf() < 1e-10);

        let diag = idem.crossed_multiplicities(0, 0);
        for (got, want) in diag.iter().zip([0.25, 0.5, 0.25]) {
            assert!((got - want).abs() < 1e-10);
        }
        let adj = idem.crossed_multiplicities(0, 1);
        for (got, want) in adj.iter().zip([0.25, 0.0, -0.25]) {
            assert!((got - want).abs() < 1e-10);
        }
        let anti = idem.crossed_multiplicities(0, 2);
        for (got, want) in anti.iter().zip([0.25, -0.5, 0.25]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn walk_counts_c4() {
        let g = catalog::cycle(4);
        let (e, s) = spectrum_of(&g);
        let idem = idempotents(&e, &s);
        let closed = walk_count_spectral(&s, &idem.crossed_multiplicities(0, 0), 2);
        assert!((closed - 2.0).abs() < 1e-9);
        let zero_walks = walk_count_spectral(&s, &idem.crossed_multiplicities(0, 0), 0);
        assert!((zero_walks - 1.0).abs() < 1e-9);
        // odd-parity pair, even length: zero walks
        let cross = walk_count_spectral(&s, &idem.crossed_multiplicities(0, 1), 2);
        assert!(cross.abs() < 1e-9);
    }

    #[test]
    fn quotient_k23() {
        let g = catalog::complete_bipartite(2, 3);
        let b = bipartition(&g).unwrap();
        let q = quotient_matrix(&g, &[b.part1.clone(), b.part2.clone()]).unwrap();
        assert_eq!(q.b[(0, 1)], 3.0);
        assert_eq!(q.b[(1, 0)], 2.0);
        assert_eq!(q.b[(0, 0)], 0.0);
    }

    #[test]
    fn quotient_trivial_is_average_degree() {
        let g = catalog::path(4);
        let q = quotient_matrix(&g, &[(0..4).collect()]).unwrap();
        assert_eq!(q.b[(0, 0)], 1.5);
    }

    #[test]
    fn bad_partitions() {
        let g = catalog::path(3);
        assert!(quotient_matrix(&g, &[vec![0, 1]]).is_err());
        assert!(quotient_matrix(&g, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(quotient_matrix(&g, &[vec![0, 1, 2], vec![]]).is_err());
    }

    #[test]
    fn interlacing_k23_tight() {
        let r6 = 6f64.sqrt();
        let lambda = [r6, 0.0, 0.0, 0.0, -r6];
        let mu = [r6, -r6];
        let rep = check_interlacing(&lambda, &mu, 1e-9).unwrap();
        assert!(rep.interlaces && rep.tight);
    }

    #[test]
    fn interlacing_p4_not_tight() {
        let g = catalog::path(4);
        let e = eigen_symmetric(&g.adjacency()).unwrap();
        let mu = [1.5, -1.5];
        let rep = check_interlacing(&e.eigenvalues, &mu, 1e-9).unwrap();
        assert!(rep.interlaces && !rep.tight);
    }

    #[test]
    fn interlacing_identity_spectra() {
        let lambda = [3.0, 2.0, 1.0];
        let rep = check_interlacing(&lambda, &lambda, 1e-9).unwrap();
        assert!(rep.interlaces && rep.tight);
    }

    #[test]
    fn rayleigh_values() {
        let g = catalog::path(4);
        assert_eq!(rayleigh_quotient(&g, &[1.0; 4]).unwrap(), 1.5);
        assert_eq!(
            rayleigh_quotient(&g, &[0.0; 4]),
            Err(SpectralError::ZeroVector)
        );

        let k23 = catalog::complete_bipartite(2, 3);
        let (d1, d2) = (3f64.sqrt(), 2f64.sqrt());
        let x = [d1, d1, d2, d2, d2];
        assert!((rayleigh_quotient(&k23, &x).unwrap() - 6f64.sqrt()).abs() < 1e-12);

        let c4 = catalog::cycle(4);
        assert!((rayleigh_quotient(&c4, &[1.0; 4]).unwrap() - 2.0).abs() < 1e-12);
    }
}
