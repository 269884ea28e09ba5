//! The braiding and ribbon operators on module words, and the cup/cap
//! pairings.

use crate::scalar::{quantum_int, RationalFunction};

use super::{
    act_generator, qp, theta_pair, upsilon_pair, EquivariantMap, Factor, Gen, ModuleObject,
    RepError, Weight, ALPHA,
};

fn q_minus_qinv() -> RationalFunction {
    RationalFunction::from(
        &crate::scalar::LaurentPoly::q_pow(1) - &crate::scalar::LaurentPoly::q_pow(-1),
    )
}

/// The signed flip `x (x) y -> (-1)^{|x||y|} y (x) x` from `V (x) W` to
/// `W (x) V`.
pub fn signed_flip(v: &ModuleObject, w: &ModuleObject) -> EquivariantMap {
    let source = v.concat(w);
    let target = w.concat(v);
    let (dv, dw) = (v.dim(), w.dim());
    let mut cols = vec![Vec::new(); source.dim()];
    for a in 0..dv {
        for b in 0..dw {
            let c = a * dw + b;
            let r = b * dv + a;
            let mut coeff = RationalFunction::one();
            if v.parity_of(a) & w.parity_of(b) == 1 {
                coeff = -&coeff;
            }
            cols[c].push((r, coeff));
        }
    }
    EquivariantMap::from_cols(source, target, cols)
}

/// The braiding `R-check = sigma . Theta . Upsilon : V (x) W -> W (x) V`.
pub fn r_check(v: &ModuleObject, w: &ModuleObject) -> EquivariantMap {
    let word = v.concat(w);
    let nv = v.len();
    let n = word.len();
    let ups = upsilon_pair(&word, 0..nv, nv..n, 1);
    let theta = theta_pair(&word, 0..nv, nv..n);
    signed_flip(v, w)
        .compose(&theta)
        .and_then(|m| m.compose(&ups))
        .expect("shapes agree")
}

/// The explicit four-case formula for the inverse braiding
/// `R-check^{-1} : L(lambda) (x) L(mu) -> L(mu) (x) L(lambda)`.
pub fn r_check_inverse(lam: Weight, mu: Weight) -> Result<EquivariantMap, RepError> {
    let source = ModuleObject::new(vec![Factor::simple(lam)?, Factor::simple(mu)?]);
    let target = ModuleObject::new(vec![Factor::simple(mu)?, Factor::simple(lam)?]);
    let pl = lam.parity() as i64;
    let pm = mu.parity() as i64;
    let sign = |e: i64| {
        if e % 2 == 0 {
            RationalFunction::one()
        } else {
            -&RationalFunction::one()
        }
    };
    let mut cols = vec![Vec::new(); 4];
    // basis columns: 0 = v0 v0, 1 = v0 v1, 2 = v1 v0, 3 = v1 v1
    // target rows: 0 = w0 w0, 1 = w0 w1, 2 = w1 w0, 3 = w1 w1 (w in L(mu) first)
    // v0 (x) v0 -> (-1)^{|l||m|} q^{-(mu,lam)} v0^mu (x) v0^lam
    cols[0].push((0, &sign(pl * pm) * &qp(-mu.form(&lam))));
    // v0 (x) v1 -> (-1)^{|l|(|m|+1)} q^{-(mu-a,lam)} v1^mu (x) v0^lam
    cols[1].push((2, &sign(pl * (pm + 1)) * &qp(-(mu - ALPHA).form(&lam))));
    // v1 (x) v0 -> (-1)^{(|l|+1)|m|} ( q^{-(mu,lam-a)} v0^mu (x) v1^lam
    //              + (-1)^{|m|} q^{-(mu-a,lam)} (q^-1 - q)[mu] v1^mu (x) v0^lam )
    let outer = sign((pl + 1) * pm);
    cols[2].push((1, &outer * &qp(-mu.form(&(lam - ALPHA)))));
    let inner = &(&sign(pm) * &qp(-(mu - ALPHA).form(&lam)))
        * &(&(-&q_minus_qinv()) * &RationalFunction::from(quantum_int(mu.level())));
    cols[2].push((2, &outer * &inner));
    // v1 (x) v1 -> (-1)^{(|l|+1)(|m|+1)} q^{-(mu-a,lam-a)} v1^mu (x) v1^lam
    cols[3].push((
        3,
        &sign((pl + 1) * (pm + 1)) * &qp(-(mu - ALPHA).form(&(lam - ALPHA))),
    ));
    Ok(EquivariantMap::from_cols(source, target, cols))
}

/// Diagonal operator `q^{w2^2 - w1^2}` on each weight vector, realizing
/// the Cartan exponential part of the ribbon element.
fn weight_square_twist(v: &ModuleObject) -> EquivariantMap {
    let mut cols = vec![Vec::new(); v.dim()];
    for (c, col) in cols.iter_mut().enumerate() {
        let w = v.weight_of(c);
        let e =
            w.l2.checked_mul(w.l2)
                .and_then(|a| w.l1.checked_mul(w.l1).map(|b| a - b))
                .expect("weight exponent overflow");
        col.push((c, qp(e)));
    }
    EquivariantMap::from_cols(v.clone(), v.clone(), cols)
}

/// The ribbon operator `v = (K^-1 + (q - q^-1) E F) q^{H2^2 - H1^2}`,
/// central on every word. On L(lambda) it is the scalar
/// `q^{(l1+l2) + l2^2 - l1^2}`.
pub fn ribbon_v(v: &ModuleObject) -> EquivariantMap {
    let twist = weight_square_twist(v);
    let ef = act_generator(Gen::E, v)
        .compose(&act_generator(Gen::F, v))
        .expect("square");
    let core = act_generator(Gen::K_INV, v)
        .add(&ef.scale(&q_minus_qinv()))
        .expect("same shape");
    core.compose(&twist).expect("square")
}

/// `u = K v` as operators.
pub fn u_action(v: &ModuleObject) -> EquivariantMap {
    act_generator(Gen::K, v)
        .compose(&ribbon_v(v))
        .expect("square")
}

/// `S(u) = q^{H2^2 - H1^2} (1 - (q - q^-1) F K^-1 E)` as operators.
pub fn s_u_action(v: &ModuleObject) -> EquivariantMap {
    let fke = act_generator(Gen::F, v)
        .compose(&act_generator(Gen::K_INV, v))
        .and_then(|m| m.compose(&act_generator(Gen::E, v)))
        .expect("square");
    let core = EquivariantMap::identity(v)
        .sub(&fke.scale(&q_minus_qinv()))
        .expect("same shape");
    weight_square_twist(v).compose(&core).expect("square")
}

/// Evaluation `L(lambda)* (x) L(lambda) -> 1`, `phi (x) w -> phi(w)`.
pub fn ev(lam: Weight) -> Result<EquivariantMap, RepError> {
    let source = ModuleObject::new(vec![Factor::dual(lam)?, Factor::simple(lam)?]);
    let mut cols = vec![Vec::new(); 4];
    cols[0].push((0, RationalFunction::one()));
    cols[3].push((0, RationalFunction::one()));
    Ok(EquivariantMap::from_cols(
        source,
        ModuleObject::unit(),
        cols,
    ))
}

/// Twisted evaluation `L(lambda) (x) L(lambda)* -> 1`,
/// `w (x) phi -> (-1)^{|phi||w|} phi(w)`.
pub fn ev_hat(lam: Weight) -> Result<EquivariantMap, RepError> {
    let source = ModuleObject::new(vec![Factor::simple(lam)?, Factor::dual(lam)?]);
    let mut cols = vec![Vec::new(); 4];
    for i in 0..2usize {
        let par = Factor::simple(lam)?.parity_of(i);
        let c = if par == 1 {
            -&RationalFunction::one()
        } else {
            RationalFunction::one()
        };
        cols[i * 2 + i].push((0, c));
    }
    Ok(EquivariantMap::from_cols(
        source,
        ModuleObject::unit(),
        cols,
    ))
}

/// Coevaluation `1 -> L(lambda) (x) L(lambda)*`, `1 -> sum w_i (x) w_i*`.
pub fn coev(lam: Weight) -> Result<EquivariantMap, RepError> {
    let target = ModuleObject::new(vec![Factor::simple(lam)?, Factor::dual(lam)?]);
    let mut cols = vec![Vec::new()];
    for i in 0..2usize {
        cols[0].push((i * 2 + i, RationalFunction::one()));
    }
    Ok(EquivariantMap::from_cols(
        ModuleObject::unit(),
        target,
        cols,
    ))
}

/// Twisted coevaluation `1 -> L(lambda)* (x) L(lambda)`,
/// `1 -> sum (-1)^{|w_i|} w_i* (x) w_i`.
pub fn coev_hat(lam: Weight) -> Result<EquivariantMap, RepError> {
    let target = ModuleObject::new(vec![Factor::dual(lam)?, Factor::simple(lam)?]);
    let mut cols = vec![Vec::new()];
    for i in 0..2usize {
        let par = Factor::simple(lam)?.parity_of(i);
        let c = if par == 1 {
            -&RationalFunction::one()
        } else {
            RationalFunction::one()
        };
        cols[0].push((i * 2 + i, c));
    }
    Ok(EquivariantMap::from_cols(
        ModuleObject::unit(),
        target,
        cols,
    ))
}

/// The module isomorphism `L(alpha - lambda) -> L(lambda)*` sending
/// `v0 -> -(-1)^{|lambda|} q^lambda (v1)*` and `v1 -> (v0)*`.
pub fn dual_iso(lam: Weight) -> Result<EquivariantMap, RepError> {
    let source = ModuleObject::simple(ALPHA - lam)?;
    let target = ModuleObject::new(vec![Factor::dual(lam)?]);
    let mut c0 = qp(lam.level());
    if lam.parity() == 0 {
        c0 = -&c0;
    }
    let cols = vec![vec![(1, c0)], vec![(0, RationalFunction::one())]];
    Ok(EquivariantMap::from_cols(source, target, cols))
}

/// True exactly when the map commutes with the actions of E, F, q^{h1}
/// and q^{h2}.
pub fn check_equivariance(f: &EquivariantMap) -> bool {
    for g in [Gen::E, Gen::F, Gen::Cartan(1, 0), Gen::Cartan(0, 1)] {
        let lhs = f.compose(&act_generator(g, f.source())).expect("shape");
        let rhs = act_generator(g, f.target()).compose(f).expect("shape");
        if lhs != rhs {
            return false;
        }
    }
    true
}
