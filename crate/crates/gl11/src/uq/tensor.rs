use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::RationalFunction;

use super::{AlgebraElement, Monomial};

/// An element of the super tensor square U_q (x) U_q.
///
/// Multiplication uses the super rule
/// `(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), RationalFunction>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term((Monomial::one(), Monomial::one()), &RationalFunction::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &RationalFunction)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: (Monomial, Monomial), coeff: &RationalFunction) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(RationalFunction::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Sum of `a (x) b` over the given element pairs (no signs arise in
    /// forming a tensor of elements).
    pub fn from_pairs(pairs: Vec<(AlgebraElement, AlgebraElement)>) -> Self {
        let mut out = Self::zero();
        for (a, b) in pairs {
            for (ma, ca) in a.terms() {
                for (mb, cb) in b.terms() {
                    out.add_term((*ma, *mb), &(ca * cb));
                }
            }
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

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-&RationalFunction::one()))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(*m, &(a * c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &rhs.terms {
                let mut coeff = c1 * c2;
                if b.parity() & c.parity() == 1 {
                    coeff = -&coeff;
                }
                let left =
                    AlgebraElement::from_monomial(*a).mul(&AlgebraElement::from_monomial(*c));
                let right =
                    AlgebraElement::from_monomial(*b).mul(&AlgebraElement::from_monomial(*d));
                for (ml, cl) in left.terms() {
                    for (mr, cr) in right.terms() {
                        out.add_term((*ml, *mr), &(&(&coeff * cl) * cr));
                    }
                }
            }
        }
        out
    }

    /// The signed flip `sigma(a (x) b) = (-1)^{|a||b|} b (x) a`.
    pub fn sigma(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let coeff = if a.parity() & b.parity() == 1 {
                -c
            } else {
                c.clone()
            };
            out.add_term((*b, *a), &coeff);
        }
        out
    }

    /// Componentwise bar involution with scalar conjugation.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let flip = |m: &Monomial| Monomial {
                e: m.e,
                f: m.f,
                cartan: (-m.cartan.0, -m.cartan.1),
            };
            out.add_term((flip(a), flip(b)), &c.bar());
        }
        out
    }

    /// Multiplication map: `a (x) b -> ab`.
    pub fn contract(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((a, b), c) in &self.terms {
            let prod = AlgebraElement::from_monomial(*a).mul(&AlgebraElement::from_monomial(*b));
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Applies the antipode to the left factor (S is even, no signs).
    pub fn antipode_left(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let sa = AlgebraElement::from_monomial(*a).antipode();
            for (m, cm) in sa.terms() {
                out.add_term((*m, *b), &(c * cm));
            }
        }
        out
    }

    pub fn antipode_right(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let sb = AlgebraElement::from_monomial(*b).antipode();
            for (m, cm) in sb.terms() {
                out.add_term((*a, *m), &(c * cm));
            }
        }
        out
    }

    pub fn counit_left(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((a, b), c) in &self.terms {
            let u = AlgebraElement::from_monomial(*a).counit();
            out.add_term(*b, &(c * &u));
        }
        out
    }

    pub fn counit_right(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((a, b), c) in &self.terms {
            let u = AlgebraElement::from_monomial(*b).counit();
            out.add_term(*a, &(c * &u));
        }
        out
    }

    /// `(Delta (x) id)`, landing in the triple tensor product.
    pub fn delta_left(&self) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((a, b), c) in &self.terms {
            let da = AlgebraElement::from_monomial(*a).coproduct();
            for ((x, y), cm) in da.terms() {
                out.add_term((*x, *y, *b), &(c * cm));
            }
        }
        out
    }

    /// `(id (x) Delta)`.
    pub fn delta_right(&self) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((a, b), c) in &self.terms {
            let db = AlgebraElement::from_monomial(*b).coproduct();
            for ((x, y), cm) in db.terms() {
                out.add_term((*a, *x, *y), &(c * cm));
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                if c.is_one() {
                    format!("{a} (x) {b}")
                } else {
                    format!("{a} (x) {b} * ({c})")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of the triple tensor power, used for the coassociativity
/// check; only linear structure is needed.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Tensor3 {
    terms: BTreeMap<(Monomial, Monomial, Monomial), RationalFunction>,
}

impl Tensor3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, m: (Monomial, Monomial, Monomial), coeff: &RationalFunction) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(RationalFunction::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uq::quasi_r;

    #[test]
    fn coproduct_of_generators() {
        // Delta(E) = E (x) K^-1 + 1 (x) E
        let de = AlgebraElement::gen_e().coproduct();
        let expected = TensorElement::from_pairs(vec![
            (AlgebraElement::gen_e(), AlgebraElement::k_power(-1)),
            (AlgebraElement::one(), AlgebraElement::gen_e()),
        ]);
        assert_eq!(de, expected);
        // grouplikes
        let dq = AlgebraElement::cartan(2, -1).coproduct();
        let expected = TensorElement::from_pairs(vec![(
            AlgebraElement::cartan(2, -1),
            AlgebraElement::cartan(2, -1),
        )]);
        assert_eq!(dq, expected);
        assert_eq!(AlgebraElement::one().coproduct(), TensorElement::one());
    }

    #[test]
    fn quasi_r_inverse_is_bar() {
        let theta = quasi_r();
        let theta_bar = theta.bar();
        assert_eq!(theta.mul(&theta_bar), TensorElement::one());
        assert_eq!(theta_bar.mul(&theta), TensorElement::one());
        assert_eq!(theta.bar().bar(), theta);
    }

    #[test]
    fn tensor_bar_conjugates_scalars() {
        // (q - q^-1) F (x) E  ->  (q^-1 - q) F (x) E
        let d = RationalFunction::from(crate::uq::q_minus_qinv());
        let fe =
            TensorElement::from_pairs(vec![(AlgebraElement::gen_f(), AlgebraElement::gen_e())])
                .scale(&d);
        assert_eq!(fe.bar(), fe.scale(&-&RationalFunction::one()));
    }

    #[test]
    fn super_multiplication_sign() {
        // (1 (x) E)(F (x) 1) = -F (x) E
        let a = TensorElement::from_pairs(vec![(AlgebraElement::one(), AlgebraElement::gen_e())]);
        let b = TensorElement::from_pairs(vec![(AlgebraElement::gen_f(), AlgebraElement::one())]);
        let expected =
            TensorElement::from_pairs(vec![(AlgebraElement::gen_f(), AlgebraElement::gen_e())])
                .scale(&-&RationalFunction::one());
        assert_eq!(a.mul(&b), expected);
        // while (F (x) 1)(1 (x) E) = F (x) E
        let expected =
            TensorElement::from_pairs(vec![(AlgebraElement::gen_f(), AlgebraElement::gen_e())]);
        assert_eq!(b.mul(&a), expected);
    }
}
