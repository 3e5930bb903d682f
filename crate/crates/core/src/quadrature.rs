//! Quadrature rules on the reference triangle and on faces (segments).
//!
//! Triangle rules are built by collapsing a tensor Gauss-Legendre grid
//! (Duffy transform), which gives guaranteed polynomial exactness for any
//! requested degree. Face rules are mapped Gauss-Legendre rules.

use crate::geom::Vec2;
use crate::{Error, Result};

/// Quadrature rule on the reference triangle {xi,eta >= 0, xi+eta <= 1}.
/// Weights sum to the reference area 1/2.
#[derive(Clone, Debug)]
pub struct TriRule {
    pub degree: usize,
    pub points: Vec<Vec2>,
    pub weights: Vec<f64>,
}

/// Quadrature rule on the reference segment [0, 1]. Weights sum to 1.
#[derive(Clone, Debug)]
pub struct FaceRule {
    pub degree: usize,
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
/// the Legendre polynomial. Accurate to machine precision for small m.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(m >= 1);
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for i in 0..m {
        // Chebyshev initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(m, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(m, x);
        nodes[m - 1 - i] = x;
        weights[m - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if m == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=m {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

impl TriRule {
    /// Rule exact for bivariate polynomials up to `degree` on the reference
    /// triangle. Supported up to degree 12.
    pub fn with_degree(degree: usize) -> Result<Self> {
        if degree > 12 {
            return Err(Error::UnsupportedDegree(degree));
        }
        // Duffy: xi = s, eta = t (1 - s), Jacobian (1 - s).
        // s-degree of integrand is at most degree + 1, t-degree at most degree.
        let m = degree / 2 + 2;
        let (gx, gw) = gauss_legendre(m);
        // map to [0, 1]
        let n01: Vec<f64> = gx.iter().map(|x| 0.5 * (x + 1.0)).collect();
        let w01: Vec<f64> = gw.iter().map(|w| 0.5 * w).collect();
        let mut points = Vec::with_capacity(m * m);
        let mut weights = Vec::with_capacity(m * m);
        for (i, &s) in n01.iter().enumerate() {
            for (j, &t) in n01.iter().enumerate() {
                points.push([s, t * (1.0 - s)]);
                weights.push(w01[i] * w01[j] * (1.0 - s));
            }
        }
        Ok(TriRule { degree, points, weights })
    }
}

impl FaceRule {
    /// Rule on [0, 1] exact for polynomials up to `degree`.
    pub fn with_degree(degree: usize) -> Result<Self> {
        if degree > 12 {
            return Err(Error::UnsupportedDegree(degree));
        }
        let m = degree / 2 + 1;
        let (gx, gw) = gauss_legendre(m);
        let points = gx.iter().map(|x| 0.5 * (x + 1.0)).collect();
        let weights = gw.iter().map(|w| 0.5 * w).collect();
        Ok(FaceRule { degree, points, weights })
    }
}

/// Exact integral of xi^a eta^b over the reference triangle: a! b! / (a+b+2)!.
pub fn exact_monomial_integral(a: u32, b: u32) -> f64 {
    let mut v = 1.0;
    // a! b! / (a + b + 2)! computed stably as a product
    for k in 1..=(a + b + 2) {
        v /= k as f64;
    }
    for k in 1..=a {
        v *= k as f64;
    }
    for k in 1..=b {
        v *= k as f64;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_low_orders() {
        let (n, w) = gauss_legendre(2);
        assert!((n[0] + 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((n[1] - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((w[0] - 1.0).abs() < 1e-15 && (w[1] - 1.0).abs() < 1e-15);
        let (n5, w5) = gauss_legendre(5);
        assert!((n5[2]).abs() < 1e-15);
        assert!((w5.iter().sum::<f64>() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn tri_rules_exact_for_monomials() {
        for degree in [2usize, 4, 6, 10] {
            let rule = TriRule::with_degree(degree).unwrap();
            let wsum: f64 = rule.weights.iter().sum();
            assert!((wsum - 0.5).abs() < 1e-14, "weights must sum to 1/2");
            for a in 0..=degree as u32 {
                for b in 0..=(degree as u32 - a) {
                    let num: f64 = rule
                        .points
                        .iter()
                        .zip(&rule.weights)
                        .map(|(p, w)| w * p[0].powi(a as i32) * p[1].powi(b as i32))
                        .sum();
                    let exact = exact_monomial_integral(a, b);
                    assert!(
                        (num - exact).abs() <= 1e-13 * exact.max(1e-30),
                        "degree {degree} monomial ({a},{b}): {num} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn face_rules_exact_for_monomials() {
        for degree in [2usize, 4, 6, 10] {
            let rule = FaceRule::with_degree(degree).unwrap();
            for a in 0..=degree as u32 {
                let num: f64 = rule
                    .points
                    .iter()
                    .zip(&rule.weights)
                    .map(|(t, w)| w * t.powi(a as i32))
                    .sum();
                let exact = 1.0 / (a as f64 + 1.0);
                assert!((num - exact).abs() < 1e-13, "face degree {degree} t^{a}");
            }
        }
    }

    #[test]
    fn degree_limit_is_reported() {
        assert!(TriRule::with_degree(13).is_err());
    }
}
