//! Seeded random generation of normal forms for property and differential
//! tests. Generation builds trees directly from sorted exponent lists, so it
//! does not depend on the arithmetic it is used to test.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::cnf::{Cnf, CnfTree};

#[derive(Debug, Clone)]
pub struct CnfSampler {
    /// Maximum nesting depth of exponents.
    pub max_depth: u32,
    /// Maximum number of distinct terms per level.
    pub max_terms: usize,
    /// Maximum coefficient (and natural-number payload).
    pub max_coeff: u64,
}

impl Default for CnfSampler {
    fn default() -> Self {
        CnfSampler {
            max_depth: 3,
            max_terms: 3,
            max_coeff: 4,
        }
    }
}

impl CnfSampler {
    pub fn small() -> Self {
        CnfSampler {
            max_depth: 2,
            max_terms: 2,
            max_coeff: 3,
        }
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Cnf {
        self.sample_depth(rng, self.max_depth)
    }

    /// Value below omega^omega: all exponents are naturals.
    pub fn sample_below_omega_omega(&self, rng: &mut ChaCha8Rng) -> Cnf {
        if rng.gen_bool(0.25) {
            return Cnf::from_nat(rng.gen_range(0..=self.max_coeff));
        }
        let nterms = rng.gen_range(1..=self.max_terms);
        let exps: Vec<Cnf> = (0..nterms)
            .map(|_| Cnf::from_nat(rng.gen_range(0..=6)))
            .collect();
        self.assemble(rng, exps)
    }

    /// Limit value (non-zero, non-successor), by resampling.
    pub fn sample_limit(&self, rng: &mut ChaCha8Rng) -> Cnf {
        loop {
            let c = self.sample(rng);
            if matches!(crate::cnf::classify(&c), crate::cnf::CnfClass::Limit(_)) {
                return c;
            }
        }
    }

    /// Value strictly below `bound` (which must be non-zero), by resampling
    /// and falling back to predecessors of the bound's fundamental sequence.
    pub fn sample_below(&self, rng: &mut ChaCha8Rng, bound: &Cnf) -> Cnf {
        assert!(!bound.is_zero(), "no values below zero");
        for _ in 0..32 {
            let c = self.sample(rng);
            if &c < bound {
                return c;
            }
        }
        match crate::cnf::classify(bound) {
            crate::cnf::CnfClass::Successor(p) => p,
            crate::cnf::CnfClass::Limit(f) => f.at(rng.gen_range(0..=self.max_coeff)),
            crate::cnf::CnfClass::Zero => unreachable!(),
        }
    }

    fn sample_depth(&self, rng: &mut ChaCha8Rng, depth: u32) -> Cnf {
        if depth == 0 || rng.gen_bool(0.3) {
            return Cnf::from_nat(rng.gen_range(0..=self.max_coeff));
        }
        let nterms = rng.gen_range(1..=self.max_terms);
        let exps: Vec<Cnf> = (0..nterms)
            .map(|_| self.sample_depth(rng, depth - 1))
            .collect();
        self.assemble(rng, exps)
    }

    /// Builds the right spine for the given exponents (sorted descending,
    /// repeated per coefficient) and validates it.
    fn assemble(&self, rng: &mut ChaCha8Rng, mut exps: Vec<Cnf>) -> Cnf {
        exps.sort_by(|a, b| b.cmp(a));
        exps.dedup();
        let mut spine: Vec<&Cnf> = Vec::new();
        let mut coeffs = Vec::new();
        for e in &exps {
            let k = rng.gen_range(1..=self.max_coeff.max(1));
            coeffs.push(k);
            for _ in 0..k {
                spine.push(e);
            }
        }
        let mut t = CnfTree::Leaf;
        for e in spine.into_iter().rev() {
            t = CnfTree::Node(Box::new(e.tree().clone()), Box::new(t));
        }
        Cnf::from_tree(t).expect("descending spines are valid normal forms")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn samples_are_valid_and_deterministic() {
        let sampler = CnfSampler::default();
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = sampler.sample(&mut r1);
            let b = sampler.sample(&mut r2);
            assert_eq!(a, b);
            assert!(crate::cnf::is_cnf(a.tree()));
        }
    }

    #[test]
    fn below_omega_omega_stays_below() {
        let sampler = CnfSampler::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let bound = crate::cnf::omega_pow(&Cnf::omega());
        for _ in 0..200 {
            let a = sampler.sample_below_omega_omega(&mut rng);
            assert!(a < bound);
            assert!(crate::oracle::from_cnf(&a).is_some());
        }
    }

    #[test]
    fn sample_below_respects_bound() {
        let sampler = CnfSampler::default();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let bound = crate::cnf::mul(&Cnf::omega(), &Cnf::from_nat(2));
        for _ in 0..100 {
            assert!(sampler.sample_below(&mut rng, &bound) < bound);
        }
    }
}
