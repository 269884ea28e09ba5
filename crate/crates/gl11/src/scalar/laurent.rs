use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::ScalarError;

fn checked_exp_add(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .unwrap_or_else(|| panic!("Laurent exponent overflow: {a} + {b}"))
}

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Terms are kept in a sorted map from exponent to coefficient; zero
/// coefficients are never stored, so structural equality is equality of
/// values.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    /// `q^n`.
    pub fn q_pow(n: i64) -> Self {
        Self::monomial(BigRational::one(), n)
    }

    pub fn monomial(coeff: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(n)), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: &BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shifted(&self, k: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (checked_exp_add(*e, k), c.clone()))
            .collect();
        Self { terms }
    }

    pub fn scaled(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(e, c)| (*e, c * r)).collect();
        Self { terms }
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.checked_neg().expect("exponent overflow"), c.clone()))
            .collect();
        Self { terms }
    }

    /// Rewrites in `t = q^2`; `None` if some exponent is odd.
    pub fn in_t(&self) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e % 2 != 0 {
                return None;
            }
            terms.insert(e / 2, c.clone());
        }
        Some(Self { terms })
    }

    /// Dense coefficient list `(lowest exponent, ascending coefficients)`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigRational>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[(e - lo) as usize] = c.clone();
        }
        (lo, coeffs)
    }

    pub(crate) fn from_dense(lo: i64, coeffs: Vec<BigRational>) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(checked_exp_add(lo, i as i64), &c);
        }
        p
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            if *e == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(var);
                if *e != 1 {
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        out
    }
}

/// The quantum integer `[k] = (q^k - q^-k)/(q - q^-1)`.
///
/// Expanded directly as `q^{-k+1} + q^{-k+3} + ... + q^{k-1}` for `k > 0`,
/// with `[-k] = -[k]` and `[0] = 0`.
pub fn quantum_int(k: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    let n = k.abs();
    let sign = if k >= 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    let mut e = -n + 1;
    while e < n {
        p.add_term(e, &sign);
        e += 2;
    }
    p
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c.clone());
        }
        out
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scaled(&-BigRational::one())
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(checked_exp_add(*e1, *e2), &(c1 * c2));
            }
        }
        out
    }
}

impl std::ops::Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl std::ops::Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::ops::Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl FromStr for LaurentPoly {
    type Err = ScalarError;

    /// Parses the rendering grammar: terms like `a*q^n`, `q^-2`, `q`, `-3`,
    /// `1/2*q^3`, joined by `+`/`-`.
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ScalarError::Parse("empty polynomial".into()));
        }
        let mut out = LaurentPoly::zero();
        let mut term = String::new();
        let mut sign = 1i64;
        let mut pending_sign = 1i64;
        let mut prev_caret = false;
        let mut started = false;
        let chars: Vec<char> = s.chars().collect();
        for &ch in &chars {
            match ch {
                '+' | '-' if started && !prev_caret => {
                    parse_term(&term, sign, &mut out)?;
                    term.clear();
                    sign = if ch == '-' { -1 } else { 1 };
                    started = false;
                    pending_sign = 1;
                }
                '+' | '-' if !started && term.is_empty() => {
                    // unary sign before the first characters of a term
                    if ch == '-' {
                        pending_sign = -pending_sign;
                    }
                }
                c if c.is_whitespace() => {
                    prev_caret = prev_caret && term.ends_with('^');
                }
                c => {
                    if !started {
                        sign *= pending_sign;
                        pending_sign = 1;
                        started = true;
                    }
                    term.push(c);
                    prev_caret = c == '^';
                }
            }
        }
        parse_term(&term, sign, &mut out)?;
        Ok(out)
    }
}

fn parse_term(term: &str, sign: i64, out: &mut LaurentPoly) -> Result<(), ScalarError> {
    let term = term.trim();
    if term.is_empty() {
        return Err(ScalarError::Parse("empty term".into()));
    }
    let (coeff_str, var_str) = match term.find(['q', 't']) {
        Some(i) => (&term[..i], &term[i..]),
        None => (term, ""),
    };
    let coeff_str = coeff_str.trim_end_matches('*').trim();
    let mut coeff = if coeff_str.is_empty() {
        BigRational::one()
    } else {
        parse_rational(coeff_str)?
    };
    if sign < 0 {
        coeff = -coeff;
    }
    let exp = if var_str.is_empty() {
        0
    } else {
        let rest = &var_str[1..];
        if rest.is_empty() {
            1
        } else if let Some(e) = rest.strip_prefix('^') {
            e.trim()
                .parse::<i64>()
                .map_err(|_| ScalarError::Parse(format!("bad exponent `{e}`")))?
        } else {
            return Err(ScalarError::Parse(format!("bad term `{term}`")));
        }
    };
    out.add_term(exp, &coeff);
    Ok(())
}

fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| ScalarError::Parse(format!("bad coefficient `{s}`")))
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let den = parse_int(b)?;
            if den.is_zero() {
                return Err(ScalarError::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(a)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q_pow(1)
    }

    #[test]
    fn quantum_int_small_values() {
        // [2] = q + q^-1
        assert_eq!(quantum_int(2), &q() + &LaurentPoly::q_pow(-1));
        assert_eq!(quantum_int(0), LaurentPoly::zero());
        assert_eq!(quantum_int(-2), -quantum_int(2));
        assert_eq!(quantum_int(1), LaurentPoly::one());
    }

    #[test]
    fn quantum_int_defining_fraction() {
        // [k] * (q - q^-1) = q^k - q^-k
        let d = &q() - &LaurentPoly::q_pow(-1);
        for k in -9i64..=9 {
            let lhs = &quantum_int(k) * &d;
            let rhs = &LaurentPoly::q_pow(k) - &LaurentPoly::q_pow(-k);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn quantum_int_addition_rule() {
        // [j+k](q - q^-1) = q^j [k](q - q^-1) + q^-k [j](q - q^-1)
        let d = &q() - &LaurentPoly::q_pow(-1);
        for j in -8i64..=8 {
            for k in -8i64..=8 {
                let lhs = &quantum_int(j + k) * &d;
                let rhs = &(&LaurentPoly::q_pow(j) * &(&quantum_int(k) * &d))
                    + &(&LaurentPoly::q_pow(-k) * &(&quantum_int(j) * &d));
                assert_eq!(lhs, rhs, "j = {j}, k = {k}");
            }
        }
    }

    #[test]
    fn render_ascending_with_elisions() {
        let p = &(&LaurentPoly::q_pow(-2) - &LaurentPoly::one()) + &LaurentPoly::q_pow(2);
        assert_eq!(p.to_string(), "q^-2 - 1 + q^2");
        let fig8 = &(&LaurentPoly::from_int(3) - &LaurentPoly::q_pow(2)) - &LaurentPoly::q_pow(-2);
        assert_eq!(fig8.to_string(), "-q^-2 + 3 - q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let two_q = LaurentPoly::monomial(BigRational::from_integer(2.into()), 1);
        assert_eq!(two_q.to_string(), "2*q");
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "q^-2 - 1 + q^2",
            "-q^-2 + 3 - q^2",
            "0",
            "1",
            "-q",
            "2*q",
            "1/2*q^-3 + 5",
            "q",
        ] {
            let p: LaurentPoly = s.parse().unwrap();
            assert_eq!(p.to_string(), s, "round trip of `{s}`");
        }
        // tolerated variants
        let p: LaurentPoly = "3 q^2+ q ^ -1".parse().unwrap();
        assert_eq!(p.to_string(), "q^-1 + 3*q^2");
    }

    #[test]
    fn bar_is_exponent_flip() {
        let p: LaurentPoly = "q^-2 - 1 + 2*q^3".parse().unwrap();
        assert_eq!(p.bar().to_string(), "2*q^-3 - 1 + q^2");
        assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn in_t_requires_even_exponents() {
        let p: LaurentPoly = "q^-2 - 1 + q^2".parse().unwrap();
        assert_eq!(p.in_t().unwrap().to_string_var("t"), "t^-1 - 1 + t");
        let odd: LaurentPoly = "q - q^-1".parse().unwrap();
        assert!(odd.in_t().is_none());
    }
}
