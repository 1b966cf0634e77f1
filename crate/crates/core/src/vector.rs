//! Vectors of ambient Euclidean 7-space, identified with the pure imaginary
//! octonions. Component `k` (0-based) is the coefficient of `e_{k+1}`.

use core::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use crate::math;
use crate::octonion::Octonion;

/// A point or tangent vector of `E⁷ ≅ Im 𝕆`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec7(pub [f64; 7]);

/// Points and vectors share one representation.
pub type AmbientPoint = Vec7;

impl Vec7 {
    pub const ZERO: Vec7 = Vec7([0.0; 7]);

    pub const fn new(c: [f64; 7]) -> Self {
        Vec7(c)
    }

    /// The unit vector `e_i`, `1 ≤ i ≤ 7`.
    ///
    /// Panics if `i` is out of range.
    pub fn basis(i: usize) -> Self {
        assert!((1..=7).contains(&i), "basis index {i} out of range 1..=7");
        let mut c = [0.0; 7];
        c[i - 1] = 1.0;
        Vec7(c)
    }

    /// Coefficient of `e_i` (1-based, matching the coordinate names `x_i`).
    #[inline]
    pub fn coord(&self, i: usize) -> f64 {
        self.0[i - 1]
    }

    pub fn dot(&self, other: &Vec7) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(self.norm_sq())
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| f64::max(m, math::abs(*c)))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    pub fn to_octonion(self) -> Octonion {
        Octonion::from_imaginary(self.0)
    }

    /// Cross product `x × y = xy + <x, y>` on the canonical table.
    pub fn cross(&self, other: &Vec7) -> Vec7 {
        let p = self.to_octonion() * other.to_octonion();
        Vec7(p.imaginary())
    }
}

impl From<[f64; 7]> for Vec7 {
    fn from(c: [f64; 7]) -> Self {
        Vec7(c)
    }
}

impl Index<usize> for Vec7 {
    type Output = f64;
    fn index(&self, k: usize) -> &f64 {
        &self.0[k]
    }
}

impl IndexMut<usize> for Vec7 {
    fn index_mut(&mut self, k: usize) -> &mut f64 {
        &mut self.0[k]
    }
}

impl Add for Vec7 {
    type Output = Vec7;
    fn add(mut self, rhs: Vec7) -> Vec7 {
        self += rhs;
        self
    }
}

impl AddAssign for Vec7 {
    fn add_assign(&mut self, rhs: Vec7) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Sub for Vec7 {
    type Output = Vec7;
    fn sub(mut self, rhs: Vec7) -> Vec7 {
        self -= rhs;
        self
    }
}

impl SubAssign for Vec7 {
    fn sub_assign(&mut self, rhs: Vec7) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for Vec7 {
    type Output = Vec7;
    fn neg(self) -> Vec7 {
        self * -1.0
    }
}

impl Mul<f64> for Vec7 {
    type Output = Vec7;
    fn mul(mut self, s: f64) -> Vec7 {
        for a in self.0.iter_mut() {
            *a *= s;
        }
        self
    }
}

impl Mul<Vec7> for f64 {
    type Output = Vec7;
    fn mul(self, v: Vec7) -> Vec7 {
        v * self
    }
}

/// Gram-Schmidt on `vectors`, in order. Returns `None` if a vector falls
/// below `min_norm` after removing the earlier directions.
pub fn orthonormalize<const N: usize>(vectors: [Vec7; N], min_norm: f64) -> Option<[Vec7; N]> {
    let mut out = vectors;
    for i in 0..N {
        let mut v = out[i];
        for j in 0..i {
            let u = out[j];
            v -= u * v.dot(&u);
        }
        let n = v.norm();
        if n.is_nan() || n <= min_norm {
            return None;
        }
        out[i] = v * (1.0 / n);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_and_dot() {
        assert_eq!(Vec7::basis(3).coord(3), 1.0);
        assert_eq!(Vec7::basis(1).dot(&Vec7::basis(2)), 0.0);
        let v = Vec7::basis(4) * 3.0 + Vec7::basis(7) * 4.0;
        assert_eq!(v.norm(), 5.0);
    }

    #[test]
    fn gram_schmidt_rejects_dependent_set() {
        let a = Vec7::basis(1);
        assert!(orthonormalize([a, a * 2.0], 1e-9).is_none());
        let q = orthonormalize([a + Vec7::basis(2), a], 1e-9).unwrap();
        assert!(q[0].dot(&q[1]).abs() < 1e-15);
        assert!((q[1].norm() - 1.0).abs() < 1e-15);
    }
}
