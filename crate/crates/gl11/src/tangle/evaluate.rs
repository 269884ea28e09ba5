//! The evaluation functor: a labeled Morse word becomes a composite of
//! equivariant maps, one slice at a time.

use crate::rep::{
    coev, coev_hat, ev, ev_hat, r_check, r_check_inverse, ribbon_v, u_action, EquivariantMap,
    Factor, ModuleObject, Weight,
};

use super::{validate, Labeling, Orient, Slice, SliceKind, TangleDiagram, TangleError, Traced};

fn factor_for(orient: Orient, label: Weight) -> Result<Factor, TangleError> {
    Ok(match orient {
        Orient::Up => Factor::simple(label)?,
        Orient::Down => Factor::dual(label)?,
    })
}

fn word_at_level(traced: &Traced, level: usize) -> Result<ModuleObject, TangleError> {
    let mut factors = Vec::new();
    for (pos, orient) in traced.levels[level].iter().enumerate() {
        factors.push(factor_for(*orient, traced.label_at(level, pos))?);
    }
    Ok(ModuleObject::new(factors))
}

/// The morphism of a single slice on the given word. Caps compose the
/// plain pairings with the framing correction `u v^-1 = K` (and cups with
/// `v u^-1 = K^-1`), exactly as in the diagram table.
fn slice_map(
    word: &ModuleObject,
    traced: &Traced,
    level: usize,
    s: &Slice,
) -> Result<EquivariantMap, TangleError> {
    let p = s.pos;
    let label = |pos: usize| traced.label_at(level, pos);
    let inner: EquivariantMap = match s.kind {
        SliceKind::IdUp | SliceKind::IdDown => return Ok(EquivariantMap::identity(word)),
        SliceKind::CrossPos => {
            let (v, w) = (
                ModuleObject::simple(label(p))?,
                ModuleObject::simple(label(p + 1))?,
            );
            r_check(&v, &w)
        }
        SliceKind::CrossNeg => r_check_inverse(label(p), label(p + 1))?,
        SliceKind::CapR => {
            // ev_hat . (u v^-1 (x) id)
            let lam = label(p);
            let l = ModuleObject::simple(lam)?;
            let twist = u_action(&l).compose(&ribbon_v(&l).inverse()?)?;
            let id_dual = EquivariantMap::identity(&ModuleObject::new(vec![Factor::dual(lam)?]));
            ev_hat(lam)?.compose(&twist.tensor(&id_dual))?
        }
        SliceKind::CapL => ev(label(p))?,
        SliceKind::CupR => coev(traced.label_at(level + 1, p))?,
        SliceKind::CupL => {
            // (id (x) v u^-1) . coev_hat
            let lam = traced.label_at(level + 1, p);
            let l = ModuleObject::simple(lam)?;
            let twist = ribbon_v(&l).compose(&u_action(&l).inverse()?)?;
            let id_dual = EquivariantMap::identity(&ModuleObject::new(vec![Factor::dual(lam)?]));
            id_dual.tensor(&twist).compose(&coev_hat(lam)?)?
        }
    };
    let arity = match s.kind {
        SliceKind::CupR | SliceKind::CupL => 0,
        _ => 2,
    };
    let left = word.slice(0..p);
    let right = word.slice(p + arity..word.len());
    Ok(EquivariantMap::identity(&left)
        .tensor(&inner)
        .tensor(&EquivariantMap::identity(&right)))
}

/// Evaluates a labeled diagram to the composite equivariant map from the
/// source word to the target word.
pub fn evaluate(d: &TangleDiagram, labeling: &Labeling) -> Result<EquivariantMap, TangleError> {
    let traced = validate(d, labeling)?;
    evaluate_traced(d, &traced)
}

pub(crate) fn evaluate_traced(
    d: &TangleDiagram,
    traced: &Traced,
) -> Result<EquivariantMap, TangleError> {
    let source_word = word_at_level(traced, 0)?;
    let mut acc = EquivariantMap::identity(&source_word);
    let mut word = source_word;
    for (k, s) in d.slices.iter().enumerate() {
        let m = slice_map(&word, traced, k, s)?;
        word = m.target().clone();
        acc = m.compose(&acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{check_equivariance, EPS1};
    use crate::scalar::RationalFunction;

    fn const_eps1() -> Labeling {
        Labeling::constant(EPS1)
    }

    #[test]
    fn single_strand_is_identity() {
        let d = TangleDiagram::new(vec![Orient::Up], vec![Slice::new(SliceKind::IdUp, 0)]);
        let m = evaluate(&d, &const_eps1()).unwrap();
        assert_eq!(
            m,
            EquivariantMap::identity(&ModuleObject::simple(EPS1).unwrap())
        );
    }

    #[test]
    fn closed_circle_evaluates_to_zero() {
        let d = TangleDiagram::closed(vec![
            Slice::new(SliceKind::CupR, 0),
            Slice::new(SliceKind::CapR, 0),
        ]);
        let m = evaluate(&d, &const_eps1()).unwrap();
        assert!(m.is_zero());
        assert_eq!(m.source(), &ModuleObject::unit());
        assert_eq!(m.target(), &ModuleObject::unit());
    }

    #[test]
    fn negative_crossing_matches_inverse_braiding_table() {
        let d = TangleDiagram::new(
            vec![Orient::Up, Orient::Up],
            vec![Slice::new(SliceKind::CrossNeg, 0)],
        );
        let m = evaluate(&d, &const_eps1()).unwrap();
        assert_eq!(m, crate::rep::r_check_inverse(EPS1, EPS1).unwrap());
        assert_eq!(m.entry(3, 3), -&RationalFunction::q_pow(1));
    }

    #[test]
    fn snake_moves_are_identities() {
        use SliceKind::*;
        let lam = crate::rep::Weight::new(2, -1);
        let cases: Vec<(Vec<Orient>, Vec<Slice>)> = vec![
            (
                vec![Orient::Up],
                vec![Slice::new(CupR, 0), Slice::new(CapL, 1)],
            ),
            (
                vec![Orient::Up],
                vec![Slice::new(CupL, 1), Slice::new(CapR, 0)],
            ),
            (
                vec![Orient::Down],
                vec![Slice::new(CupL, 0), Slice::new(CapR, 1)],
            ),
            (
                vec![Orient::Down],
                vec![Slice::new(CupR, 1), Slice::new(CapL, 0)],
            ),
        ];
        for (source, slices) in cases {
            let d = TangleDiagram::new(source, slices);
            let m = evaluate(&d, &Labeling::constant(lam)).unwrap();
            assert_eq!(
                m.as_scalar_multiple_of_identity(),
                Some(RationalFunction::one()),
                "snake move is not the identity: {d:?}"
            );
        }
    }

    #[test]
    fn reidemeister_two_on_up_strands() {
        let d = TangleDiagram::new(
            vec![Orient::Up, Orient::Up],
            vec![
                Slice::new(SliceKind::CrossPos, 0),
                Slice::new(SliceKind::CrossNeg, 0),
            ],
        );
        let lab = Labeling::PerComponent(
            [(0usize, crate::rep::Weight::new(2, 0)), (1usize, EPS1)]
                .into_iter()
                .collect(),
        );
        let m = evaluate(&d, &lab).unwrap();
        assert_eq!(
            m.as_scalar_multiple_of_identity(),
            Some(RationalFunction::one())
        );
    }

    #[test]
    fn evaluation_results_are_equivariant_and_even() {
        let d = TangleDiagram::new(
            vec![Orient::Up, Orient::Up],
            vec![
                Slice::new(SliceKind::CupR, 2),
                Slice::new(SliceKind::CrossPos, 1),
                Slice::new(SliceKind::CapR, 2),
            ],
        );
        let m = evaluate(&d, &const_eps1()).unwrap();
        assert!(check_equivariance(&m));
        assert!(m.is_parity_even());
    }

    #[test]
    fn functoriality_under_stacking_and_juxtaposition() {
        let lam = crate::rep::Weight::new(1, 1);
        let a = TangleDiagram::new(
            vec![Orient::Up, Orient::Up],
            vec![Slice::new(SliceKind::CrossPos, 0)],
        );
        let b = TangleDiagram::new(
            vec![Orient::Up, Orient::Up],
            vec![Slice::new(SliceKind::CrossNeg, 0)],
        );
        let stacked = a.stack(&b).unwrap();
        let lab = Labeling::constant(lam);
        let ma = evaluate(&a, &lab).unwrap();
        let mb = evaluate(&b, &lab).unwrap();
        assert_eq!(evaluate(&stacked, &lab).unwrap(), mb.compose(&ma).unwrap());
        let side = a.beside(&b);
        assert_eq!(evaluate(&side, &lab).unwrap(), ma.tensor(&mb));
    }
}
