//! An independent oracle: the Alexander polynomial class from the reduced
//! Burau representation at `t = q^2`.

use crate::scalar::{LaurentPoly, RationalFunction};
use crate::tangle::BraidWord;

use super::InvariantError;

/// `t^k` as a Laurent polynomial in q (t = q^2).
fn t_pow(k: i64) -> LaurentPoly {
    LaurentPoly::q_pow(2 * k)
}

type Mat = Vec<Vec<RationalFunction>>;

fn mat_identity(n: usize) -> Mat {
    let mut m = vec![vec![RationalFunction::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = RationalFunction::one();
    }
    m
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![RationalFunction::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                let p = &a[i][k] * &b[k][j];
                out[i][j] = &out[i][j] + &p;
            }
        }
    }
    out
}

/// Reduced Burau image of `sigma_i^{+-1}` on basis `v_1 .. v_{n-1}`:
/// `sigma_i` sends `v_i -> t v_{i-1} - t v_i + v_{i+1}` and fixes the
/// other basis vectors.
fn sigma_matrix(n: usize, i: usize, inverse: bool) -> Mat {
    let dim = n - 1;
    let mut m = mat_identity(dim);
    let idx = i - 1;
    if !inverse {
        m[idx][idx] = RationalFunction::from(-&t_pow(1));
        if idx > 0 {
            m[idx - 1][idx] = RationalFunction::from(t_pow(1));
        }
        if idx + 1 < dim {
            m[idx + 1][idx] = RationalFunction::one();
        }
    } else {
        // sigma_i^{-1}: v_i -> v_{i-1} - t^-1 v_i + t^-1 v_{i+1}
        m[idx][idx] = RationalFunction::from(-&t_pow(-1));
        if idx > 0 {
            m[idx - 1][idx] = RationalFunction::one();
        }
        if idx + 1 < dim {
            m[idx + 1][idx] = RationalFunction::from(t_pow(-1));
        }
    }
    m
}

fn determinant(mut a: Mat) -> RationalFunction {
    let n = a.len();
    let mut det = RationalFunction::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return RationalFunction::zero(),
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -&det;
        }
        let p = a[col][col].clone();
        det = &det * &p;
        let pinv = p.inv().expect("nonzero pivot");
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &pinv;
            let pivot_row = a[col].clone();
            for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                let d = &f * pv;
                a[r][c] = &a[r][c] - &d;
            }
        }
    }
    det
}

/// `det(Id - reduced_burau(word))` divided by `1 + t + ... + t^{n-1}`,
/// at `t = q^2`. Defined up to a unit `+-q^k`; compare with
/// [`unit_class_eq`].
pub fn burau_oracle(b: &BraidWord) -> Result<LaurentPoly, InvariantError> {
    let n = b.strands;
    if n == 1 {
        return Ok(LaurentPoly::one());
    }
    let dim = n - 1;
    let mut m = mat_identity(dim);
    for &g in &b.word {
        let s = sigma_matrix(n, g.unsigned_abs() as usize, g < 0);
        m = mat_mul(&m, &s);
    }
    let mut a = mat_identity(dim);
    for (i, row) in a.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = &*v - &m[i][j];
        }
    }
    let det = determinant(a);
    let mut denom = LaurentPoly::zero();
    for k in 0..n {
        denom.add_term(2 * k as i64, &num::One::one());
    }
    let quot = &det * &RationalFunction::from(denom).inv().expect("nonzero");
    quot.as_laurent()
        .cloned()
        .ok_or_else(|| InvariantError::NonPolynomial(quot.to_string()))
}

/// Equality up to a unit `+- q^k` of the Laurent ring (both zero also
/// counts).
pub fn unit_class_eq(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return true,
        (false, false) => {}
        _ => return false,
    }
    let ratio = &RationalFunction::from(a.clone())
        * &RationalFunction::from(b.clone()).inv().expect("nonzero");
    matches!(ratio.as_signed_q_power(), Some((_, _)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(n: usize, w: Vec<i32>) -> BraidWord {
        BraidWord::new(n, w).unwrap()
    }

    #[test]
    fn burau_satisfies_braid_relation() {
        // sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2 on 3 strands
        let a = mat_mul(
            &mat_mul(&sigma_matrix(3, 1, false), &sigma_matrix(3, 2, false)),
            &sigma_matrix(3, 1, false),
        );
        let b = mat_mul(
            &mat_mul(&sigma_matrix(3, 2, false), &sigma_matrix(3, 1, false)),
            &sigma_matrix(3, 2, false),
        );
        assert_eq!(a, b);
        // and sigma sigma^-1 = id
        let id = mat_mul(&sigma_matrix(3, 1, false), &sigma_matrix(3, 1, true));
        assert_eq!(id, mat_identity(2));
    }

    #[test]
    fn trefoil_class() {
        // det(I - (-t)^3) / (1 + t) = 1 - t + t^2 -> 1 - q^2 + q^4
        let p = burau_oracle(&braid(2, vec![1, 1, 1])).unwrap();
        assert_eq!(p.to_string(), "1 - q^2 + q^4");
        let alexander: LaurentPoly = "q^-2 - 1 + q^2".parse().unwrap();
        assert!(unit_class_eq(&p, &alexander));
    }

    #[test]
    fn unknot_and_hopf_classes() {
        assert!(burau_oracle(&braid(1, vec![])).unwrap().is_one());
        let hopf = burau_oracle(&braid(2, vec![1, 1])).unwrap();
        let expected: LaurentPoly = "-q^-1 + q".parse().unwrap();
        assert!(unit_class_eq(&hopf, &expected));
        // split unlink: both vanish
        let unlink = burau_oracle(&braid(2, vec![])).unwrap();
        assert!(unlink.is_zero());
        assert!(unit_class_eq(&unlink, &LaurentPoly::zero()));
    }

    #[test]
    fn figure_eight_class() {
        let p = burau_oracle(&braid(3, vec![1, -2, 1, -2])).unwrap();
        let expected: LaurentPoly = "-q^-2 + 3 - q^2".parse().unwrap();
        assert!(unit_class_eq(&p, &expected));
    }

    #[test]
    fn unit_class_rejects_non_units() {
        let a: LaurentPoly = "1 + q^2".parse().unwrap();
        let b: LaurentPoly = "1 + q^4".parse().unwrap();
        assert!(!unit_class_eq(&a, &b));
        assert!(!unit_class_eq(&a, &LaurentPoly::zero()));
    }
}
