//! Gaussian quadrature rules.
//!
//! Two families are provided: Gauss-Legendre on a finite interval `[a, b]`
//! and Gauss-Hermite pre-transformed to the standard normal weight, so that
//! integrals against the normal density are plain weighted sums. Nodes are
//! located by Newton iteration on the (orthonormal) polynomial recurrences.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RuleKind {
    /// Integrates f over [a, b]; weights sum to b - a.
    Legendre { a: f64, b: f64 },
    /// Integrates f against the standard normal density; weights sum to 1.
    HermiteNormal,
}

#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub kind: RuleKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// n-point Gauss-Legendre rule on [a, b]. Exact for polynomials of
    /// degree <= 2n-1.
    pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("quadrature rule needs n >= 1".into()));
        }
        if !(a < b) {
            return Err(Error::InvalidArgument(format!(
                "Gauss-Legendre interval requires a < b, got [{a}, {b}]"
            )));
        }
        let (x, w) = legendre_unit(n);
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let nodes: Vec<f64> = x.iter().map(|&t| mid + half * t).collect();
        let weights: Vec<f64> = w.iter().map(|&t| half * t).collect();
        Ok(Self { kind: RuleKind::Legendre { a, b }, nodes, weights })
    }

    /// n-point Gauss-Hermite rule rescaled to the standard normal weight:
    /// sum_i w_i f(z_i) ~ E[f(Z)] for Z ~ N(0,1).
    pub fn gauss_hermite_normal(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("quadrature rule needs n >= 1".into()));
        }
        let (x, w) = hermite_physicists(n);
        let sqrt2 = std::f64::consts::SQRT_2;
        let inv_sqrt_pi = 1.0 / std::f64::consts::PI.sqrt();
        let nodes: Vec<f64> = x.iter().map(|&t| t * sqrt2).collect();
        let weights: Vec<f64> = w.iter().map(|&t| t * inv_sqrt_pi).collect();
        Ok(Self { kind: RuleKind::HermiteNormal, nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Nodes/weights on [-1, 1] via Newton iteration on the Legendre recurrence.
fn legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = ((2.0 * jf + 1.0) * z * p2 - jf * p3) / (jf + 1.0);
            }
            pp = n as f64 * (z * p1 - p2) / (z * z - 1.0);
            let dz = p1 / pp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * pp * pp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Physicists' Gauss-Hermite (weight e^{-x^2}) using the orthonormal
/// recurrence, which stays bounded for large n.
fn hermite_physicists(n: usize) -> (Vec<f64>, Vec<f64>) {
    const PIM4: f64 = 0.751_125_544_464_942_5; // pi^{-1/4}
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    let mut z = 0.0;
    for i in 0..m {
        z = match i {
            0 => {
                let t = (2 * n + 1) as f64;
                t.sqrt() - 1.85575 * t.powf(-1.0 / 6.0)
            }
            1 => z - 1.14 * (n as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = PIM4;
            let mut p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            pp = (2.0 * n as f64).sqrt() * p2;
            let dz = p1 / pp;
            z -= dz;
            if dz.abs() < 1e-14 {
                break;
            }
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    // store ascending
    x.reverse();
    w.reverse();
    (x, w)
}
