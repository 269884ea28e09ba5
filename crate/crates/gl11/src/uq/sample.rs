//! Seeded random elements for the verification suites.
//!
//! Uniform monomials with Cartan exponents in [-3, 3] and coefficients
//! drawn from a fixed pool; everything is reproducible from the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::RationalFunction;

use super::{inv_q_minus_qinv, AlgebraElement, Monomial};

pub fn coefficient_pool() -> Vec<RationalFunction> {
    vec![
        RationalFunction::one(),
        -&RationalFunction::one(),
        RationalFunction::q_pow(1),
        RationalFunction::q_pow(-1),
        inv_q_minus_qinv(),
    ]
}

pub struct ElementSampler {
    rng: ChaCha8Rng,
    pool: Vec<RationalFunction>,
}

impl ElementSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool: coefficient_pool(),
        }
    }

    pub fn monomial(&mut self) -> Monomial {
        Monomial {
            e: self.rng.gen(),
            f: self.rng.gen(),
            cartan: (self.rng.gen_range(-3..=3), self.rng.gen_range(-3..=3)),
        }
    }

    pub fn element(&mut self, terms: usize) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for _ in 0..terms {
            let m = self.monomial();
            let c = self.pool[self.rng.gen_range(0..self.pool.len())].clone();
            out.add_term(m, &c);
        }
        out
    }
}
