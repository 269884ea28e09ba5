//! Symbolic model of the quantum superalgebra U_q(gl(1|1)).
//!
//! Elements are finite linear combinations of normal-form monomials
//! `E^a F^b q^{c1 h1 + c2 h2}` with `a, b` in {0, 1} (since E^2 = F^2 = 0)
//! and exact scalar coefficients. Multiplication rewrites into normal form
//! using the defining relations; the Hopf operations, the bar involution
//! and the quasi-R-matrix live here together with the checks that pin the
//! sign conventions.

mod checks;
pub mod sample;
mod tensor;

pub use checks::{
    antipode_axiom, bounded_monomials, coassociative, counit_axiom, delta_bar_op,
    delta_multiplicative, delta_op, generators, theta_intertwines,
};
pub use tensor::{Tensor3, TensorElement};

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::RationalFunction;

/// A normal-form monomial `E^e F^f q^{c.0 h1 + c.1 h2}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub e: bool,
    pub f: bool,
    pub cartan: (i64, i64),
}

impl Monomial {
    pub fn one() -> Self {
        Self {
            e: false,
            f: false,
            cartan: (0, 0),
        }
    }

    pub fn parity(&self) -> u8 {
        (self.e ^ self.f) as u8
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.e {
            parts.push("E".to_string());
        }
        if self.f {
            parts.push("F".to_string());
        }
        if self.cartan != (0, 0) {
            parts.push(format!("q^({},{})", self.cartan.0, self.cartan.1));
        }
        if parts.is_empty() {
            parts.push("1".to_string());
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// `<c1 h1 + c2 h2, alpha>` for the simple root `alpha = eps1 - eps2`.
fn pair_alpha(c: (i64, i64)) -> i64 {
    c.0 - c.1
}

/// `1/(q - q^-1)`.
pub(crate) fn inv_q_minus_qinv() -> RationalFunction {
    RationalFunction::from(q_minus_qinv()).inv().unwrap()
}

/// `q - q^-1`.
pub(crate) fn q_minus_qinv() -> crate::scalar::LaurentPoly {
    &crate::scalar::LaurentPoly::q_pow(1) - &crate::scalar::LaurentPoly::q_pow(-1)
}

/// Product of two monomials in normal form: at most three terms.
fn mono_mul(a: &Monomial, b: &Monomial) -> Vec<(Monomial, RationalFunction)> {
    // move q^{a.cartan} past E^{b.e} F^{b.f}
    let commute = pair_alpha(a.cartan) * (b.e as i64 - b.f as i64);
    let scale = RationalFunction::q_pow(commute);
    let cartan = (a.cartan.0 + b.cartan.0, a.cartan.1 + b.cartan.1);
    if !(a.f && b.e) {
        if (a.e && b.e) || (a.f && b.f) {
            return Vec::new();
        }
        return vec![(
            Monomial {
                e: a.e || b.e,
                f: a.f || b.f,
                cartan,
            },
            scale,
        )];
    }
    // middle F E -> -EF + (K - K^-1)/(q - q^-1), with K central
    let mut out = Vec::new();
    if !a.e && !b.f {
        out.push((
            Monomial {
                e: true,
                f: true,
                cartan,
            },
            -&scale,
        ));
    }
    let c = &scale * &inv_q_minus_qinv();
    out.push((
        Monomial {
            e: a.e,
            f: b.f,
            cartan: (cartan.0 + 1, cartan.1 + 1),
        },
        c.clone(),
    ));
    out.push((
        Monomial {
            e: a.e,
            f: b.f,
            cartan: (cartan.0 - 1, cartan.1 - 1),
        },
        -&c,
    ));
    out
}

/// An element of U_q: a finite combination of normal-form monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, RationalFunction>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::single(m, RationalFunction::one())
    }

    pub fn single(m: Monomial, coeff: RationalFunction) -> Self {
        let mut el = Self::zero();
        el.add_term(m, &coeff);
        el
    }

    pub fn gen_e() -> Self {
        Self::from_monomial(Monomial {
            e: true,
            f: false,
            cartan: (0, 0),
        })
    }

    pub fn gen_f() -> Self {
        Self::from_monomial(Monomial {
            e: false,
            f: true,
            cartan: (0, 0),
        })
    }

    /// `q^{c1 h1 + c2 h2}`.
    pub fn cartan(c1: i64, c2: i64) -> Self {
        Self::from_monomial(Monomial {
            e: false,
            f: false,
            cartan: (c1, c2),
        })
    }

    /// `K^n = q^{n(h1 + h2)}`.
    pub fn k_power(n: i64) -> Self {
        Self::cartan(n, n)
    }

    pub fn scalar(c: RationalFunction) -> Self {
        Self::single(Monomial::one(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, coeff: &RationalFunction) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(RationalFunction::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(*m, &(a * c));
        }
        out
    }

    /// Coproduct, extended as an algebra homomorphism into the super
    /// tensor square.
    pub fn coproduct(&self) -> TensorElement {
        let mut out = TensorElement::zero();
        for (m, c) in &self.terms {
            let mut t = TensorElement::one();
            if m.e {
                // Delta(E) = E (x) K^-1 + 1 (x) E
                t = t.mul(&TensorElement::from_pairs(vec![
                    (Self::gen_e(), Self::k_power(-1)),
                    (Self::one(), Self::gen_e()),
                ]));
            }
            if m.f {
                // Delta(F) = F (x) 1 + K (x) F
                t = t.mul(&TensorElement::from_pairs(vec![
                    (Self::gen_f(), Self::one()),
                    (Self::k_power(1), Self::gen_f()),
                ]));
            }
            t = t.mul(&TensorElement::from_pairs(vec![(
                Self::cartan(m.cartan.0, m.cartan.1),
                Self::cartan(m.cartan.0, m.cartan.1),
            )]));
            out = out.add(&t.scale(c));
        }
        out
    }

    /// Antipode, the super anti-homomorphism with
    /// S(xy) = (-1)^{|x||y|} S(y) S(x).
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out = out.add(&s_monomial(m).scale(c));
        }
        out
    }

    pub fn counit(&self) -> RationalFunction {
        let mut out = RationalFunction::zero();
        for (m, c) in &self.terms {
            if !m.e && !m.f {
                out = &out + c;
            }
        }
        out
    }

    /// Bar involution: fixes E and F, inverts Cartan parts, conjugates
    /// scalars by q -> q^-1.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let bm = Monomial {
                e: m.e,
                f: m.f,
                cartan: (-m.cartan.0, -m.cartan.1),
            };
            out.add_term(bm, &c.bar());
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c = c1 * c2;
                for (m, extra) in mono_mul(m1, m2) {
                    out.add_term(m, &(&c * &extra));
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-&RationalFunction::one()))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

/// Antipode of a single monomial, via the anti-rule on its generator
/// factorization E^e F^f q^c.
fn s_monomial(m: &Monomial) -> AlgebraElement {
    let s_e = AlgebraElement::gen_e()
        .mul(&AlgebraElement::k_power(1))
        .neg();
    let s_f = AlgebraElement::k_power(-1)
        .mul(&AlgebraElement::gen_f())
        .neg();
    let s_q = AlgebraElement::cartan(-m.cartan.0, -m.cartan.1);
    let mut factors: Vec<(AlgebraElement, u8)> = Vec::new();
    if m.e {
        factors.push((s_e, 1));
    }
    if m.f {
        factors.push((s_f, 1));
    }
    factors.push((s_q, 0));
    // reversing the factors transposes each pair once, so the Koszul sign
    // is the product over pairs of odd factors
    let mut sign = 0u8;
    for i in 0..factors.len() {
        for j in (i + 1)..factors.len() {
            sign ^= factors[i].1 & factors[j].1;
        }
    }
    let mut out = AlgebraElement::one();
    for (s_g, _) in factors.iter().rev() {
        out = out.mul(s_g);
    }
    if sign == 1 {
        out.neg()
    } else {
        out
    }
}

/// The quasi-R-matrix `Theta = 1 (x) 1 + (q - q^-1) F (x) E`.
pub fn quasi_r() -> TensorElement {
    let d = RationalFunction::from(q_minus_qinv());
    TensorElement::one().add(
        &TensorElement::from_pairs(vec![(AlgebraElement::gen_f(), AlgebraElement::gen_e())])
            .scale(&d),
    )
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    format!("{m}")
                } else {
                    format!("{m} * ({c})")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
