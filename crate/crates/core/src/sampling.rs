//! Seeded sampling of points and tangent data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::hypersphere::{self, HypersphereParam, MPoint};
use crate::sphere::{self, SpherePoint};
use crate::vector::{orthonormalize, Vec7};

/// Deterministic source of Gaussian samples (ChaCha8).
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    pub fn gaussian7(&mut self) -> Vec7 {
        let mut v = Vec7::ZERO;
        for k in 0..7 {
            v[k] = self.normal();
        }
        v
    }

    /// Uniform point of `M_r`: six normals rescaled to radius `√(1−r²)`.
    pub fn point_on(&mut self, param: HypersphereParam) -> MPoint {
        loop {
            let mut x = [0.0; 6];
            for c in x.iter_mut() {
                *c = self.normal();
            }
            if let Ok(m) = MPoint::normalized(param, x) {
                return m;
            }
        }
    }

    /// Uniform point of `M_r` with `|x_a| ≥ min_abs` (rejection sampling).
    pub fn point_with_pivot(&mut self, param: HypersphereParam, a: usize, min_abs: f64) -> MPoint {
        loop {
            let m = self.point_on(param);
            if m.coord(a).abs() >= min_abs {
                return m;
            }
        }
    }

    /// Unit tangent vector of `M_r` at `x`, isotropically distributed.
    pub fn tangent_unit(&mut self, x: &MPoint) -> Vec7 {
        loop {
            let v = hypersphere::tangent_project(x, &self.gaussian7());
            let n = v.norm();
            if n > 1e-6 {
                return v * (1.0 / n);
            }
        }
    }

    /// Random orthonormal frame of `T_xM_r`; degenerate draws are redrawn.
    pub fn tangent_frame(&mut self, x: &MPoint) -> [Vec7; 5] {
        loop {
            let raw = [(); 5].map(|_| hypersphere::tangent_project(x, &self.gaussian7()));
            if let Some(frame) = orthonormalize(raw, 1e-6) {
                return frame;
            }
        }
    }

    pub fn point_on_sphere(&mut self) -> SpherePoint {
        loop {
            if let Ok(p) = SpherePoint::normalize(self.gaussian7()) {
                return p;
            }
        }
    }

    /// Tangent vector of `S⁶` at `p` (not normalized).
    pub fn sphere_tangent(&mut self, p: &SpherePoint) -> Vec7 {
        sphere::tangent_project(p, &self.gaussian7())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frames_are_orthonormal_and_tangent() {
        let param = HypersphereParam::new(0.4).unwrap();
        let mut s = Sampler::new(3);
        let x = s.point_on(param);
        let f = s.tangent_frame(&x);
        for i in 0..5 {
            assert!(hypersphere::normal_defect(&x, &f[i]) < 1e-14);
            for j in 0..5 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((f[i].dot(&f[j]) - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn pivot_sampling_respects_bound() {
        let param = HypersphereParam::new(0.7).unwrap();
        let mut s = Sampler::new(11);
        for _ in 0..100 {
            assert!(s.point_with_pivot(param, 4, 0.3).coord(4).abs() >= 0.3);
        }
    }
}
