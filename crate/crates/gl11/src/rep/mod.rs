//! Finite-dimensional weight representations of U_q(gl(1|1)).
//!
//! Objects are ordered tensor words of two-dimensional simples L(lambda),
//! their duals, and one-dimensional twists; morphisms are sparse exact
//! matrices. Basis order is fixed: index 0 is the highest weight vector
//! and tensor bases are lexicographic with the leftmost factor most
//! significant.

mod action;
mod map;
mod ribbon;

pub use action::{
    act_generator, act_slots, embed_on_range, theta_pair, upsilon, upsilon_pair, Gen,
};
pub use map::EquivariantMap;
pub use ribbon::{
    check_equivariance, coev, coev_hat, dual_iso, ev, ev_hat, r_check, r_check_inverse, ribbon_v,
    s_u_action, signed_flip, u_action,
};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalar::RationalFunction;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("weight {0} is not in P' (lam1 + lam2 = 0)")]
    NotInPPrime(Weight),
    #[error("weight {0} is not annihilated by h1 + h2")]
    NotTrivialWeight(Weight),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
}

/// An integral weight `l1 eps1 + l2 eps2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Weight {
    pub l1: i64,
    pub l2: i64,
}

/// The simple root `alpha = eps1 - eps2`.
pub const ALPHA: Weight = Weight { l1: 1, l2: -1 };
pub const EPS1: Weight = Weight { l1: 1, l2: 0 };
pub const EPS2: Weight = Weight { l1: 0, l2: 1 };

impl Weight {
    pub fn new(l1: i64, l2: i64) -> Self {
        Self { l1, l2 }
    }

    /// `<c1 h1 + c2 h2, lambda>`.
    pub fn pairing(&self, c: (i64, i64)) -> i64 {
        c.0 * self.l1 + c.1 * self.l2
    }

    /// The bilinear form `(lambda, mu) = l1 m1 - l2 m2`.
    pub fn form(&self, other: &Weight) -> i64 {
        self.l1 * other.l1 - self.l2 * other.l2
    }

    /// `<h1 + h2, lambda>`, the exponent of `q^lambda` and the argument
    /// of `[lambda]`.
    pub fn level(&self) -> i64 {
        self.l1 + self.l2
    }

    pub fn parity(&self) -> u8 {
        (self.l2.rem_euclid(2)) as u8
    }

    pub fn in_p_prime(&self) -> bool {
        self.level() != 0
    }

    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim().strip_prefix('(')?.strip_suffix(')')?;
        let (a, b) = s.split_once(',')?;
        Some(Self::new(a.trim().parse().ok()?, b.trim().parse().ok()?))
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.l1 + rhs.l1, self.l2 + rhs.l2)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.l1 - rhs.l1, self.l2 - rhs.l2)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.l1, -self.l2)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l1, self.l2)
    }
}

/// One tensor factor of a module word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Factor {
    /// The two-dimensional simple L(lambda), lambda in P'.
    Simple(Weight),
    /// Its dual L(lambda)*.
    Dual(Weight),
    /// The one-dimensional module C(q)_lambda, lambda with level 0.
    Triv(Weight),
}

impl Factor {
    pub fn simple(w: Weight) -> Result<Self, RepError> {
        if !w.in_p_prime() {
            return Err(RepError::NotInPPrime(w));
        }
        Ok(Factor::Simple(w))
    }

    pub fn dual(w: Weight) -> Result<Self, RepError> {
        if !w.in_p_prime() {
            return Err(RepError::NotInPPrime(w));
        }
        Ok(Factor::Dual(w))
    }

    pub fn triv(w: Weight) -> Result<Self, RepError> {
        if w.level() != 0 {
            return Err(RepError::NotTrivialWeight(w));
        }
        Ok(Factor::Triv(w))
    }

    pub fn dim(&self) -> usize {
        match self {
            Factor::Simple(_) | Factor::Dual(_) => 2,
            Factor::Triv(_) => 1,
        }
    }

    pub fn label(&self) -> Weight {
        match self {
            Factor::Simple(w) | Factor::Dual(w) | Factor::Triv(w) => *w,
        }
    }

    /// Weight of basis vector `idx` of this factor.
    pub fn weight_of(&self, idx: usize) -> Weight {
        match (self, idx) {
            (Factor::Simple(w), 0) => *w,
            (Factor::Simple(w), 1) => *w - ALPHA,
            (Factor::Dual(w), 0) => -*w,
            (Factor::Dual(w), 1) => -(*w - ALPHA),
            (Factor::Triv(w), 0) => *w,
            _ => panic!("basis index {idx} out of range"),
        }
    }

    /// Parity of basis vector `idx`.
    pub fn parity_of(&self, idx: usize) -> u8 {
        match self {
            Factor::Simple(w) | Factor::Dual(w) => (w.parity() + idx as u8) % 2,
            Factor::Triv(w) => w.parity(),
        }
    }
}

/// An ordered tensor word of factors, with an enumerated graded basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ModuleObject {
    factors: Vec<Factor>,
}

impl ModuleObject {
    /// The unit object (empty word), one-dimensional.
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn new(factors: Vec<Factor>) -> Self {
        Self { factors }
    }

    pub fn simple(w: Weight) -> Result<Self, RepError> {
        Ok(Self::new(vec![Factor::simple(w)?]))
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).product()
    }

    pub fn concat(&self, rhs: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&rhs.factors);
        Self::new(factors)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        Self::new(self.factors[range].to_vec())
    }

    /// Per-factor indices of basis vector `idx`, leftmost factor most
    /// significant.
    pub fn decompose(&self, idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        let mut rem = idx;
        for (i, f) in self.factors.iter().enumerate().rev() {
            out[i] = rem % f.dim();
            rem /= f.dim();
        }
        debug_assert_eq!(rem, 0, "basis index out of range");
        out
    }

    pub fn compose_index(&self, parts: &[usize]) -> usize {
        let mut idx = 0;
        for (f, p) in self.factors.iter().zip(parts) {
            idx = idx * f.dim() + p;
        }
        idx
    }

    pub fn weight_of(&self, idx: usize) -> Weight {
        let parts = self.decompose(idx);
        let mut w = Weight::default();
        for (f, p) in self.factors.iter().zip(parts) {
            w = w + f.weight_of(p);
        }
        w
    }

    pub fn parity_of(&self, idx: usize) -> u8 {
        let parts = self.decompose(idx);
        let mut par = 0u8;
        for (f, p) in self.factors.iter().zip(parts) {
            par ^= f.parity_of(p);
        }
        par
    }

    /// Parity of the sub-vector spanning factors `range` of basis `idx`.
    pub fn parity_on_range(&self, idx: usize, range: std::ops::Range<usize>) -> u8 {
        let parts = self.decompose(idx);
        let mut par = 0u8;
        for i in range {
            par ^= self.factors[i].parity_of(parts[i]);
        }
        par
    }

    /// Weight of the sub-vector spanning factors `range` of basis `idx`.
    pub fn weight_on_range(&self, idx: usize, range: std::ops::Range<usize>) -> Weight {
        let parts = self.decompose(idx);
        let mut w = Weight::default();
        for i in range {
            w = w + self.factors[i].weight_of(parts[i]);
        }
        w
    }
}

impl fmt::Display for ModuleObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| match x {
                Factor::Simple(w) => format!("L{w}"),
                Factor::Dual(w) => format!("L{w}*"),
                Factor::Triv(w) => format!("C{w}"),
            })
            .collect();
        write!(f, "{}", parts.join(" (x) "))
    }
}

/// Weights with parity and multiplicity over a basis.
pub type Character = BTreeMap<(Weight, u8), usize>;

/// The character: weights with parity and multiplicity over the basis.
pub fn character(v: &ModuleObject) -> Character {
    let mut out = BTreeMap::new();
    for idx in 0..v.dim() {
        *out.entry((v.weight_of(idx), v.parity_of(idx))).or_insert(0) += 1;
    }
    out
}

/// Multiset sum of characters with multiplicities.
pub fn character_sum(parts: &[(usize, Character)]) -> Character {
    let mut out = BTreeMap::new();
    for (mult, ch) in parts {
        for (k, v) in ch {
            *out.entry(*k).or_insert(0) += mult * v;
        }
    }
    out
}

/// `q^n` as a scalar.
pub(crate) fn qp(n: i64) -> RationalFunction {
    RationalFunction::q_pow(n)
}
