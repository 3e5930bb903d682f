//! Small fixed-size 2-D geometry helpers shared by all modules.

/// Point or vector in the plane.
pub type Vec2 = [f64; 2];

pub fn add(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn sub(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] - b[0], a[1] - b[1]]
}

pub fn scale(s: f64, a: Vec2) -> Vec2 {
    [s * a[0], s * a[1]]
}

pub fn dot(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

pub fn norm(a: Vec2) -> f64 {
    dot(a, a).sqrt()
}

/// z-component of the cross product of two plane vectors.
pub fn cross(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

pub fn midpoint(a: Vec2, b: Vec2) -> Vec2 {
    [0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])]
}

/// Symmetric 2x2 matrix, used for diffusion tensors and Hessians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymMat2 {
    pub a11: f64,
    pub a12: f64,
    pub a22: f64,
}

impl SymMat2 {
    pub const IDENTITY: SymMat2 = SymMat2 { a11: 1.0, a12: 0.0, a22: 1.0 };

    pub fn diag(a11: f64, a22: f64) -> Self {
        SymMat2 { a11, a12: 0.0, a22 }
    }

    pub fn mul_vec(&self, v: Vec2) -> Vec2 {
        [self.a11 * v[0] + self.a12 * v[1], self.a12 * v[0] + self.a22 * v[1]]
    }

    /// xi . (A xi)
    pub fn quad_form(&self, v: Vec2) -> f64 {
        dot(v, self.mul_vec(v))
    }

    /// Frobenius inner product A : H.
    pub fn ddot(&self, h: &SymMat2) -> f64 {
        self.a11 * h.a11 + 2.0 * self.a12 * h.a12 + self.a22 * h.a22
    }

    pub fn min_eig(&self) -> f64 {
        let m = 0.5 * (self.a11 + self.a22);
        let d = (0.25 * (self.a11 - self.a22).powi(2) + self.a12 * self.a12).sqrt();
        m - d
    }

    /// Spectral norm (largest eigenvalue magnitude for SPD matrices).
    pub fn max_eig(&self) -> f64 {
        let m = 0.5 * (self.a11 + self.a22);
        let d = (0.25 * (self.a11 - self.a22).powi(2) + self.a12 * self.a12).sqrt();
        m + d
    }
}

/// Affine map x = p0 + J [xi, eta] from the reference triangle
/// {xi >= 0, eta >= 0, xi + eta <= 1} onto a physical triangle.
#[derive(Clone, Copy, Debug)]
pub struct AffineMap {
    pub p0: Vec2,
    /// Jacobian columns: p1 - p0 and p2 - p0.
    pub j: [[f64; 2]; 2],
    pub det: f64,
}

impl AffineMap {
    pub fn new(p0: Vec2, p1: Vec2, p2: Vec2) -> Self {
        let c0 = sub(p1, p0);
        let c1 = sub(p2, p0);
        let det = cross(c0, c1);
        AffineMap { p0, j: [c0, c1], det }
    }

    pub fn to_physical(&self, r: Vec2) -> Vec2 {
        [
            self.p0[0] + self.j[0][0] * r[0] + self.j[1][0] * r[1],
            self.p0[1] + self.j[0][1] * r[0] + self.j[1][1] * r[1],
        ]
    }

    pub fn to_reference(&self, x: Vec2) -> Vec2 {
        let d = sub(x, self.p0);
        let inv_det = 1.0 / self.det;
        [
            inv_det * (self.j[1][1] * d[0] - self.j[1][0] * d[1]),
            inv_det * (-self.j[0][1] * d[0] + self.j[0][0] * d[1]),
        ]
    }

    /// Push a reference gradient to the physical gradient: grad_x = J^{-T} grad_r.
    pub fn grad_to_physical(&self, g: Vec2) -> Vec2 {
        let inv_det = 1.0 / self.det;
        [
            inv_det * (self.j[1][1] * g[0] - self.j[0][1] * g[1]),
            inv_det * (-self.j[1][0] * g[0] + self.j[0][0] * g[1]),
        ]
    }

    pub fn area(&self) -> f64 {
        0.5 * self.det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_roundtrip() {
        let m = AffineMap::new([1.0, 2.0], [3.0, 2.5], [1.5, 4.0]);
        let r = [0.3, 0.4];
        let x = m.to_physical(r);
        let back = m.to_reference(x);
        assert!((back[0] - r[0]).abs() < 1e-14);
        assert!((back[1] - r[1]).abs() < 1e-14);
    }

    #[test]
    fn sym_mat_eigs() {
        let a = SymMat2 { a11: 2.0, a12: 1.0, a22: 2.0 };
        assert!((a.min_eig() - 1.0).abs() < 1e-14);
        assert!((a.max_eig() - 3.0).abs() < 1e-14);
        let q = a.quad_form([1.0, -1.0]);
        assert!((q - 2.0).abs() < 1e-14);
    }
}
