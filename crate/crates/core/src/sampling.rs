//! Deterministic, seed-driven sample generators shared by the verification
//! suites and the CLI. Magnitudes are kept small so exact arithmetic stays
//! fast even after square-root adjunctions.

use crate::exact_fields::{extend_tower, FieldElement, Tower};
use crate::inner_spaces::{Subspace, Vector};
use crate::orthosets::{FiniteOrthoset, ProjectivePoint};
use crate::star_sfields::{Quaternion, StarScalar};
use crate::{Rat, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Small rational with numerator in `[-bound, bound]` and denominator
    /// in `[1, bound]`.
    pub fn rat(&mut self, bound: i64) -> Rat {
        let numer = self.int(-bound, bound);
        let denom = self.int(1, bound);
        Rat::new(numer.into(), denom.into())
    }

    pub fn nonzero_rat(&mut self, bound: i64) -> Rat {
        loop {
            let r = self.rat(bound);
            if !num::Zero::is_zero(&r) {
                return r;
            }
        }
    }

    /// A random tower of the given depth, adjoining small positive
    /// non-squares (retrying candidates that collapse).
    pub fn tower(&mut self, depth: usize) -> Result<Arc<Tower>> {
        let mut tower = Tower::rationals();
        while tower.depth() < depth {
            let candidate = self.int(2, 19);
            let d = FieldElement::from_int(Arc::clone(&tower), candidate);
            if let Ok(extended) = extend_tower(&tower, &d) {
                tower = extended;
            }
        }
        Ok(tower)
    }

    /// Random element of the tower with small rational coefficients.
    pub fn tower_element(&mut self, tower: &Arc<Tower>, bound: i64) -> FieldElement {
        let coeffs = (0..tower.basis_len()).map(|_| self.rat(bound)).collect();
        FieldElement::from_coeffs(Arc::clone(tower), coeffs).expect("full-length coeffs")
    }

    pub fn nonzero_tower_element(&mut self, tower: &Arc<Tower>, bound: i64) -> FieldElement {
        loop {
            let x = self.tower_element(tower, bound);
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn quaternion(&mut self, bound: i64) -> Quaternion {
        Quaternion::new(
            self.rat(bound),
            self.rat(bound),
            self.rat(bound),
            self.rat(bound),
        )
    }

    pub fn nonzero_quaternion(&mut self, bound: i64) -> Quaternion {
        loop {
            let q = self.quaternion(bound);
            if !q.is_zero() {
                return q;
            }
        }
    }

    /// Vector with small integer coordinates (kept integral so downstream
    /// Gram–Schmidt stays cheap).
    pub fn vector<S: StarScalar>(&mut self, n: usize, bound: i64) -> Vector<S> {
        let entries: Vec<i64> = (0..n).map(|_| self.int(-bound, bound)).collect();
        Vector::from_ints(&entries)
    }

    pub fn nonzero_vector<S: StarScalar>(&mut self, n: usize, bound: i64) -> Vector<S> {
        loop {
            let v = self.vector(n, bound);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn quaternion_vector(&mut self, n: usize, bound: i64) -> Vector<Quaternion> {
        loop {
            let coords: Vec<Quaternion> = (0..n).map(|_| self.quaternion(bound)).collect();
            if coords.iter().any(|c| !c.is_zero()) {
                return Vector::new(coords).expect("nonempty");
            }
        }
    }

    pub fn point<S: StarScalar>(&mut self, n: usize, bound: i64) -> ProjectivePoint<S> {
        ProjectivePoint::new(&self.nonzero_vector(n, bound)).expect("nonzero")
    }

    pub fn quaternion_point(&mut self, n: usize, bound: i64) -> ProjectivePoint<Quaternion> {
        ProjectivePoint::new(&self.quaternion_vector(n, bound)).expect("nonzero")
    }

    /// Two distinct points (resampling the second on collision).
    pub fn point_pair<S: StarScalar>(
        &mut self,
        n: usize,
        bound: i64,
    ) -> (ProjectivePoint<S>, ProjectivePoint<S>) {
        let e = self.point(n, bound);
        loop {
            let f = self.point(n, bound);
            if f != e {
                return (e, f);
            }
        }
    }

    /// Random subspace of the given dimension, by integer spanning vectors.
    pub fn subspace<S: StarScalar>(&mut self, n: usize, dim: usize, bound: i64) -> Subspace<S> {
        loop {
            let vs: Vec<Vector<S>> = (0..dim).map(|_| self.nonzero_vector(n, bound)).collect();
            let s = Subspace::span(&vs, n).expect("consistent dims");
            if s.dim() == dim {
                return s;
            }
        }
    }

    /// Random finite orthoset on `size` points with the given edge density
    /// (per mille).
    pub fn finite_orthoset(&mut self, size: usize, density_pm: u32) -> Result<FiniteOrthoset> {
        let mut edges = Vec::new();
        for a in 0..size {
            for b in a + 1..size {
                if self.rng.gen_range(0..1000) < density_pm {
                    edges.push((a, b));
                }
            }
        }
        FiniteOrthoset::new(size, &edges)
    }

    /// Random subset of `0..size`.
    pub fn subset(&mut self, size: usize) -> Vec<usize> {
        (0..size).filter(|_| self.rng.gen_bool(0.5)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..20 {
            assert_eq!(a.rat(9), b.rat(9));
        }
        let t1 = a.tower(3).unwrap();
        let t2 = b.tower(3).unwrap();
        assert_eq!(t1, t2);
        assert_eq!(a.tower_element(&t1, 5), b.tower_element(&t2, 5));
    }

    #[test]
    fn sampled_objects_satisfy_basic_contracts() {
        let mut s = Sampler::new(0);
        let t = s.tower(2).unwrap();
        assert_eq!(t.depth(), 2);
        let x = s.nonzero_tower_element(&t, 5);
        assert!(!x.is_zero());
        let q = s.nonzero_quaternion(5);
        assert!(!q.is_zero());
        let sub: Subspace<FieldElement> = s.subspace(4, 2, 5);
        assert_eq!(sub.dim(), 2);
        let (e, f): (ProjectivePoint<FieldElement>, _) = s.point_pair(4, 5);
        assert_ne!(e, f);
        let x = s.finite_orthoset(10, 300).unwrap();
        assert_eq!(x.size(), 10);
    }
}
