//! Structural identities of the Hopf superalgebra, used by the test
//! suite to pin sign conventions.

use super::{quasi_r, AlgebraElement, TensorElement};

/// `(Delta (x) id) Delta(x) = (id (x) Delta) Delta(x)`.
pub fn coassociative(x: &AlgebraElement) -> bool {
    let d = x.coproduct();
    d.delta_left() == d.delta_right()
}

/// `(u (x) id) Delta = id = (id (x) u) Delta`.
pub fn counit_axiom(x: &AlgebraElement) -> bool {
    let d = x.coproduct();
    d.counit_left() == *x && d.counit_right() == *x
}

/// `mult (S (x) id) Delta = unit . counit = mult (id (x) S) Delta`.
pub fn antipode_axiom(x: &AlgebraElement) -> bool {
    let d = x.coproduct();
    let target = AlgebraElement::scalar(x.counit());
    d.antipode_left().contract() == target && d.antipode_right().contract() == target
}

/// `Delta(xy) = Delta(x) Delta(y)` in the super tensor square.
pub fn delta_multiplicative(x: &AlgebraElement, y: &AlgebraElement) -> bool {
    x.mul(y).coproduct() == x.coproduct().mul(&y.coproduct())
}

/// The opposite coproduct `sigma . Delta` with the signed flip.
pub fn delta_op(x: &AlgebraElement) -> TensorElement {
    x.coproduct().sigma()
}

/// `(bar (x) bar) . Delta^op . bar`.
pub fn delta_bar_op(x: &AlgebraElement) -> TensorElement {
    delta_op(&x.bar()).bar()
}

/// The intertwining identity for the quasi-R-matrix:
/// `Theta . bar-Delta^op(x) = Delta^op(x) . Theta`.
pub fn theta_intertwines(x: &AlgebraElement) -> bool {
    let theta = quasi_r();
    theta.mul(&delta_bar_op(x)) == delta_op(x).mul(&theta)
}

/// The four algebra generators.
pub fn generators() -> Vec<AlgebraElement> {
    vec![
        AlgebraElement::gen_e(),
        AlgebraElement::gen_f(),
        AlgebraElement::cartan(1, 0),
        AlgebraElement::cartan(0, 1),
    ]
}

/// All monomials with Cartan exponents bounded by `bound`.
pub fn bounded_monomials(bound: i64) -> Vec<AlgebraElement> {
    let mut out = Vec::new();
    for c1 in -bound..=bound {
        for c2 in -bound..=bound {
            for (e, f) in [(false, false), (true, false), (false, true), (true, true)] {
                out.push(AlgebraElement::from_monomial(super::Monomial {
                    e,
                    f,
                    cartan: (c1, c2),
                }));
            }
        }
    }
    out
}
