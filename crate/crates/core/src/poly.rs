//! Polynomials in the monomial basis, the spectral inner product, the
//! predistance system with its three-term recurrence, and the spectral
//! excess value.

use crate::matrix::Mat;
use crate::spectral::DistinctSpectrum;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PolyError {
    #[error("degenerate spectrum: need at least two distinct eigenvalues")]
    DegenerateSpectrum,
    #[error("predistance normalization failure at degree {0}: p({0})(theta_0) = {1:.3e}")]
    NormalizationFailure(usize, f64),
    #[error("spectral excess routes disagree: recurrence {0:.9} vs closed formula {1:.9}")]
    RouteMismatch(f64, f64),
}

/// Dense real polynomial, coefficients c_0..c_k in the monomial basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![1.0] }
    }

    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![0.0, 1.0],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0.0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap_or(&0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(0.0)
                    + other.coeffs.get(i).copied().unwrap_or(0.0)
            })
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scaled(&self, s: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplication by x (degree shift).
    pub fn mul_x(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![0.0];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial::new(coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    /// Even part: keeps even-degree coefficients.
    pub fn even_part(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 0 { c } else { 0.0 })
                .collect(),
        )
    }

    /// Odd part: keeps odd-degree coefficients.
    pub fn odd_part(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 1 { c } else { 0.0 })
                .collect(),
        )
    }

    /// Horner evaluation on a square matrix.
    pub fn eval_on_matrix(&self, a: &Mat) -> Mat {
        let n = a.n();
        let mut out = Mat::zeros(n);
        for &c in self.coeffs.iter().rev() {
            out = out.mul(a);
            for i in 0..n {
                out[(i, i)] += c;
            }
        }
        out
    }

    /// Largest |c_i - d_i| over aligned coefficients.
    pub fn max_coeff_diff(&self, other: &Polynomial) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|i| {
                (self.coeffs.get(i).copied().unwrap_or(0.0)
                    - other.coeffs.get(i).copied().unwrap_or(0.0))
                .abs()
            })
            .fold(0.0, f64::max)
    }
}

/// <f, g>_Gamma = (1/n) sum_i m_i f(theta_i) g(theta_i).
pub fn spectral_inner_product(f: &Polynomial, g: &Polynomial, s: &DistinctSpectrum) -> f64 {
    let n = s.n() as f64;
    s.thetas
        .iter()
        .zip(&s.mults)
        .map(|(&t, &m)| m as f64 * f.eval(t) * g.eval(t))
        .sum::<f64>()
        / n
}

/// Predistance polynomials p_0..p_d with their recurrence data and the
/// preHoffman polynomial H = sum p_i with its even/odd parts.
#[derive(Debug, Clone)]
pub struct PredistanceSystem {
    pub polys: Vec<Polynomial>,
    /// alpha_0..alpha_d: coefficient of p_i in x p_i.
    pub alphas: Vec<f64>,
    /// beta_0..beta_{d-1}: coefficient of p_{i-1} in x p_i.
    pub betas: Vec<f64>,
    /// gamma_1..gamma_d: coefficient of p_{i+1} in x p_i.
    pub gammas: Vec<f64>,
    /// Leading coefficients omega_0..omega_d.
    pub omegas: Vec<f64>,
    pub hoffman: Polynomial,
    pub hoffman_even: Polynomial,
    pub hoffman_odd: Polynomial,
}

const TOL_POS: f64 = 1e-10;

/// Builds the orthogonal system for the spectral inner product, normalized
/// so that ||p_i||^2 = p_i(theta_0).
///
/// Construction runs the Stieltjes recurrence on monic polynomials; for a
/// spectrum symmetric about zero (within `sym_tol`) the diagonal recurrence
/// terms are snapped to exact zero, which makes the parity split of each
/// p_i exact.
pub fn predistance_system(
    s: &DistinctSpectrum,
    sym_tol: f64,
) -> Result<PredistanceSystem, PolyError> {
    let d = s.d();
    if d < 1 {
        return Err(PolyError::DegenerateSpectrum);
    }
    let symmetric = s.is_symmetric(sym_tol);
    let theta0 = s.thetas[0];
    let ip = |f: &Polynomial, g: &Polynomial| spectral_inner_product(f, g, s);

    // monic orthogonal sequence
    let mut monic: Vec<Polynomial> = Vec::with_capacity(d + 1);
    let mut norms: Vec<f64> = Vec::with_capacity(d + 1);
    monic.push(Polynomial::one());
    norms.push(1.0);
    for k in 0..d {
        let qk = &monic[k];
        let xqk = qk.mul_x();
        let a = if symmetric { 0.0 } else { ip(&xqk, qk) / norms[k] };
        let mut next = xqk.add(&qk.scaled(-a));
        if k > 0 {
            let b = norms[k] / norms[k - 1];
            next = next.add(&monic[k - 1].scaled(-b));
        }
        let norm = ip(&next, &next);
        monic.push(next);
        norms.push(norm);
    }

    // rescale: p_k = (q_k(theta0) / ||q_k||^2) q_k, so ||p_k||^2 = p_k(theta0)
    let mut polys = Vec::with_capacity(d + 1);
    for (k, q) in monic.iter().enumerate() {
        let v0 = q.eval(theta0);
        let pk_at_theta0 = v0 * v0 / norms[k];
        if pk_at_theta0 <= TOL_POS {
            return Err(PolyError::NormalizationFailure(k, pk_at_theta0));
        }
        polys.push(q.scaled(v0 / norms[k]));
    }

    // recurrence coefficients x p_i = beta_{i-1} p_{i-1} + alpha_i p_i + gamma_{i+1} p_{i+1}
    let norm_p: Vec<f64> = polys.iter().map(|p| ip(p, p)).collect();
    let mut alphas = Vec::with_capacity(d + 1);
    let mut betas = Vec::with_capacity(d);
    let mut gammas = Vec::with_capacity(d);
    for i in 0..=d {
        let xp = polys[i].mul_x();
        let a = if symmetric {
            0.0
        } else {
            ip(&xp, &polys[i]) / norm_p[i]
        };
        alphas.push(a);
        if i >= 1 {
            betas.push(ip(&xp, &polys[i - 1]) / norm_p[i - 1]);
        }
        if i + 1 <= d {
            gammas.push(ip(&polys[i].mul_x(), &polys[i + 1]) / norm_p[i + 1]);
        }
    }
    // shift: gammas collected above are gamma_{i+1} for i = 0..d-1, i.e.
    // gamma_1..gamma_d; betas are beta_{i-1} for i = 1..d, i.e. beta_0..beta_{d-1}.

    let hoffman = polys
        .iter()
        .fold(Polynomial::zero(), |acc, p| acc.add(p));
    let omegas = polys.iter().map(|p| p.leading()).collect();
    Ok(PredistanceSystem {
        hoffman_even: hoffman.even_part(),
        hoffman_odd: hoffman.odd_part(),
        hoffman,
        omegas,
        alphas,
        betas,
        gammas,
        polys,
    })
}

impl PredistanceSystem {
    pub fn d(&self) -> usize {
        self.polys.len() - 1
    }
}

/// Spectral excess p_d(theta_0), computed by two independent routes and
/// cross-checked: direct evaluation of the highest predistance polynomial
/// and the closed formula n * (sum_i pi_0^2 / (m_i pi_i^2))^{-1}, where
/// pi_i is the product of |theta_i - theta_j| over j != i.
///
/// The closed formula carries the multiplicity factor m_i; without it the
/// formula fails already on C4.
pub fn spectral_excess(s: &DistinctSpectrum, sym_tol: f64) -> Result<f64, PolyError> {
    let ps = predistance_system(s, sym_tol)?;
    let route1 = ps.polys[s.d()].eval(s.thetas[0]);
    let route2 = spectral_excess_closed_form(s);
    if (route1 - route2).abs() > 1e-6 {
        return Err(PolyError::RouteMismatch(route1, route2));
    }
    Ok(route1)
}

/// The closed formula alone (one side of the dual route).
pub fn spectral_excess_closed_form(s: &DistinctSpectrum) -> f64 {
    let d = s.d();
    let pi = |i: usize| -> f64 {
        (0..=d)
            .filter(|&j| j != i)
            .map(|j| (s.thetas[i] - s.thetas[j]).abs())
            .product()
    };
    let pi0 = pi(0);
    let denom: f64 = (0..=d)
        .map(|i| pi0 * pi0 / (s.mults[i] as f64 * pi(i) * pi(i)))
        .sum();
    s.n() as f64 / denom
}
