//! Generator actions on tensor words via the iterated coproduct, with
//! Koszul signs, and the diagonal/quasi-R operators between chosen parts.

use crate::scalar::{quantum_int, RationalFunction};

use super::{qp, EquivariantMap, Factor, ModuleObject};

/// An algebra generator acting on a module word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    E,
    F,
    /// `q^{c1 h1 + c2 h2}`.
    Cartan(i64, i64),
}

impl Gen {
    pub const K: Gen = Gen::Cartan(1, 1);
    pub const K_INV: Gen = Gen::Cartan(-1, -1);

    pub fn parity(&self) -> u8 {
        match self {
            Gen::E | Gen::F => 1,
            Gen::Cartan(..) => 0,
        }
    }
}

/// Action of a generator on a single factor: entries `(row, coeff)` for a
/// given column index within the factor. Duals use the explicit dual
/// action table; Cartan generators act by the weight.
fn factor_apply(g: Gen, f: &Factor, idx: usize) -> Vec<(usize, RationalFunction)> {
    match (g, f) {
        (Gen::Cartan(c1, c2), _) => {
            vec![(idx, qp(f.weight_of(idx).pairing((c1, c2))))]
        }
        (Gen::E, Factor::Simple(_)) => {
            if idx == 1 {
                vec![(0, RationalFunction::one())]
            } else {
                vec![]
            }
        }
        (Gen::F, Factor::Simple(w)) => {
            if idx == 0 {
                vec![(1, RationalFunction::from(quantum_int(w.level())))]
            } else {
                vec![]
            }
        }
        (Gen::E, Factor::Dual(w)) => {
            // E (v0)* = -(-1)^{|lambda|} q^lambda (v1)*
            if idx == 0 {
                let mut c = qp(w.level());
                if w.parity() == 0 {
                    c = -&c;
                }
                vec![(1, c)]
            } else {
                vec![]
            }
        }
        (Gen::F, Factor::Dual(w)) => {
            // F (v1)* = (-1)^{|lambda|} [lambda] q^{-lambda} (v0)*
            if idx == 1 {
                let mut c = &RationalFunction::from(quantum_int(w.level())) * &qp(-w.level());
                if w.parity() == 1 {
                    c = -&c;
                }
                vec![(0, c)]
            } else {
                vec![]
            }
        }
        (Gen::E | Gen::F, Factor::Triv(_)) => vec![],
    }
}

/// Matrix of the action of `g` on the whole word via the iterated
/// coproduct. For E the coproduct puts `K^-1` on factors to the right of
/// the acting slot, for F it puts `K` on factors to the left; the Koszul
/// sign for the odd generators is the parity of the prefix.
pub fn act_generator(g: Gen, v: &ModuleObject) -> EquivariantMap {
    let dim = v.dim();
    let n = v.len();
    let mut cols = vec![Vec::new(); dim];
    if let Gen::Cartan(c1, c2) = g {
        for (c, col) in cols.iter_mut().enumerate() {
            col.push((c, qp(v.weight_of(c).pairing((c1, c2)))));
        }
        return EquivariantMap::from_cols(v.clone(), v.clone(), cols);
    }
    for (c, col) in cols.iter_mut().enumerate() {
        let parts = v.decompose(c);
        let mut prefix_parity = 0u8;
        for i in 0..n {
            let f = &v.factors()[i];
            for (row_i, coeff) in factor_apply(g, f, parts[i]) {
                let mut coeff = coeff;
                if prefix_parity == 1 {
                    coeff = -&coeff;
                }
                // grouplike tail: K^-1 right of slot for E, K left for F
                match g {
                    Gen::E => {
                        for (j, fj) in v.factors().iter().enumerate().skip(i + 1) {
                            coeff = &coeff * &qp(-fj.weight_of(parts[j]).level());
                        }
                    }
                    Gen::F => {
                        for (j, fj) in v.factors().iter().enumerate().take(i) {
                            coeff = &coeff * &qp(fj.weight_of(parts[j]).level());
                        }
                    }
                    Gen::Cartan(..) => unreachable!(),
                }
                let mut row_parts = parts.clone();
                row_parts[i] = row_i;
                col.push((v.compose_index(&row_parts), coeff));
            }
            prefix_parity ^= f.parity_of(parts[i]);
        }
    }
    EquivariantMap::from_cols(v.clone(), v.clone(), cols)
}

/// Simultaneous action of a pure tensor of generators placed at the given
/// factor slots (strictly increasing), with the Koszul sign
/// `prod_k (-1)^{|g_k| par(prefix before slot k)}`.
pub fn act_slots(v: &ModuleObject, slots: &[(usize, Gen)]) -> EquivariantMap {
    debug_assert!(slots.windows(2).all(|w| w[0].0 < w[1].0));
    let dim = v.dim();
    let mut cols = vec![Vec::new(); dim];
    for (c, col) in cols.iter_mut().enumerate() {
        let parts = v.decompose(c);
        let mut entries: Vec<(Vec<usize>, RationalFunction)> =
            vec![(parts.clone(), RationalFunction::one())];
        for &(slot, g) in slots {
            let mut sign = 0u8;
            if g.parity() == 1 {
                sign = v.parity_on_range(c, 0..slot);
            }
            let mut next = Vec::new();
            for (row_parts, coeff) in entries {
                for (row_i, gc) in factor_apply(g, &v.factors()[slot], row_parts[slot]) {
                    let mut coeff = &coeff * &gc;
                    if sign == 1 {
                        coeff = -&coeff;
                    }
                    let mut rp = row_parts.clone();
                    rp[slot] = row_i;
                    next.push((rp, coeff));
                }
            }
            entries = next;
        }
        for (row_parts, coeff) in entries {
            col.push((v.compose_index(&row_parts), coeff));
        }
    }
    EquivariantMap::from_cols(v.clone(), v.clone(), cols)
}

/// Embeds a map on the sub-word `range` into the whole word. For an odd
/// operator the Koszul sign is the parity of the prefix part.
pub fn embed_on_range(
    v: &ModuleObject,
    range: std::ops::Range<usize>,
    inner: &EquivariantMap,
    odd: bool,
) -> EquivariantMap {
    assert_eq!(&v.slice(range.clone()), inner.source());
    let target_word = v
        .slice(0..range.start)
        .concat(inner.target())
        .concat(&v.slice(range.end..v.len()));
    let pre = v.slice(0..range.start);
    let post = v.slice(range.end..v.len());
    let (dp, dm_src, ds) = (pre.dim(), inner.source().dim(), post.dim());
    let dm_tgt = inner.target().dim();
    let mut cols = vec![Vec::new(); v.dim()];
    for p in 0..dp {
        let sign = odd && pre.parity_of(p) == 1;
        for m in 0..dm_src {
            for s in 0..ds {
                let cidx = (p * dm_src + m) * ds + s;
                for (rm, coeff) in inner.col(m) {
                    let ridx = (p * dm_tgt + rm) * ds + s;
                    let coeff = if sign { -coeff } else { coeff.clone() };
                    cols[cidx].push((ridx, coeff));
                }
            }
        }
    }
    EquivariantMap::from_cols(v.clone(), target_word, cols)
}

/// Diagonal operator `q^{(wt_a, wt_b)}` between two disjoint factor
/// ranges; `exp_sign` -1 gives its inverse.
pub fn upsilon_pair(
    v: &ModuleObject,
    ra: std::ops::Range<usize>,
    rb: std::ops::Range<usize>,
    exp_sign: i64,
) -> EquivariantMap {
    let mut cols = vec![Vec::new(); v.dim()];
    for (c, col) in cols.iter_mut().enumerate() {
        let wa = v.weight_on_range(c, ra.clone());
        let wb = v.weight_on_range(c, rb.clone());
        col.push((c, qp(exp_sign * wa.form(&wb))));
    }
    EquivariantMap::from_cols(v.clone(), v.clone(), cols)
}

/// The Cartan correction on `V (x) W`, acting by `q^{(mu1, mu2)}` on
/// weight vectors.
pub fn upsilon(v: &ModuleObject, w: &ModuleObject) -> EquivariantMap {
    let word = v.concat(w);
    let nv = v.len();
    let n = word.len();
    upsilon_pair(&word, 0..nv, nv..n, 1)
}

/// Action of the quasi-R-matrix `1 + (q - q^-1) F (x) E` with F acting on
/// the factors in `ra` and E on those in `rb`.
pub fn theta_pair(
    v: &ModuleObject,
    ra: std::ops::Range<usize>,
    rb: std::ops::Range<usize>,
) -> EquivariantMap {
    let f_part = embed_on_range(v, ra.clone(), &act_generator(Gen::F, &v.slice(ra)), true);
    let e_part = embed_on_range(v, rb.clone(), &act_generator(Gen::E, &v.slice(rb)), true);
    let d = RationalFunction::from(
        &crate::scalar::LaurentPoly::q_pow(1) - &crate::scalar::LaurentPoly::q_pow(-1),
    );
    let fe = f_part.compose(&e_part).expect("same word");
    EquivariantMap::identity(v)
        .add(&fe.scale(&d))
        .expect("same shape")
}
