use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::{LaurentPoly, ScalarError};

/// An element of the fraction field of Z[q,q^-1], kept in canonical form:
/// the denominator is an integer polynomial with nonzero constant term,
/// content 1 and positive leading coefficient, coprime to the numerator.
/// Structural equality is then equality of values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self {
            num: LaurentPoly::from_int(n),
            den: LaurentPoly::one(),
        }
    }

    /// `q^n`.
    pub fn q_pow(n: i64) -> Self {
        Self {
            num: LaurentPoly::q_pow(n),
            den: LaurentPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// The underlying Laurent polynomial, if the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    /// The bar involution `q -> q^-1`, re-canonicalized.
    pub fn bar(&self) -> Self {
        Self::canonical(self.num.bar(), self.den.bar())
    }

    /// `true` if this is `s * q^k` for `s` = 1 or -1; returns `(s, k)`.
    pub fn as_signed_q_power(&self) -> Option<(i64, i64)> {
        let p = self.as_laurent()?;
        let mut terms = p.terms();
        let (e, c) = terms.next()?;
        if terms.next().is_some() {
            return None;
        }
        if c.is_one() {
            Some((1, e))
        } else if (-c).is_one() {
            Some((-1, e))
        } else {
            None
        }
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (a, mut n) = num.to_dense();
        let (b, mut d) = den.to_dense();
        let g = poly_gcd(&n, &d);
        if g.len() > 1 {
            n = poly_exact_div(&n, &g);
            d = poly_exact_div(&d, &g);
        }
        // scale so the denominator is primitive over Z with positive lead
        let c = rational_content(&d);
        let inv_c = c.recip();
        for x in n.iter_mut() {
            *x *= &inv_c;
        }
        for x in d.iter_mut() {
            *x *= &inv_c;
        }
        Self {
            num: LaurentPoly::from_dense(a - b, n),
            den: LaurentPoly::from_dense(0, d),
        }
    }
}

/// Content of a nonzero rational-coefficient polynomial, signed so that
/// dividing by it yields a primitive integer polynomial with positive
/// leading coefficient.
fn rational_content(p: &[BigRational]) -> BigRational {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in p.iter().filter(|c| !c.is_zero()) {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut content = BigRational::new(num_gcd, den_lcm);
    let lead = p.iter().rev().find(|c| !c.is_zero()).expect("nonzero poly");
    if lead.is_negative() {
        content = -content;
    }
    content
}

fn poly_degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let db = poly_degree(b).expect("division by zero polynomial");
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let lead_b = b[db].clone();
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let factor = &r[dr] / &lead_b;
        let shift = dr - db;
        for i in 0..=db {
            if !b[i].is_zero() {
                let delta = &b[i] * &factor;
                r[i + shift] -= delta;
            }
        }
        poly_trim(&mut r);
    }
    r
}

/// Monic gcd in Q[q] of two dense polynomials.
fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(d) = poly_degree(&a) {
        let lead = a[d].clone();
        for c in a.iter_mut() {
            *c /= &lead;
        }
    }
    a
}

fn poly_exact_div(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let da = match poly_degree(a) {
        Some(d) => d,
        None => return Vec::new(),
    };
    let db = poly_degree(b).expect("division by zero polynomial");
    assert!(da >= db);
    let mut r = a.to_vec();
    let mut quot = vec![BigRational::zero(); da - db + 1];
    let lead_b = b[db].clone();
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let factor = &r[dr] / &lead_b;
        let shift = dr - db;
        quot[shift] = factor.clone();
        for i in 0..=db {
            if !b[i].is_zero() {
                let delta = &b[i] * &factor;
                r[i + shift] -= delta;
            }
        }
        poly_trim(&mut r);
    }
    assert!(r.is_empty(), "non-exact polynomial division");
    quot
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl std::ops::Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl std::ops::Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl std::ops::Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl std::ops::Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}
