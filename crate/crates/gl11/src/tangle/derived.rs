//! Crossings with downward strands, expanded into cup/cap conjugates of
//! the upward crossing, and the framing twist curl.

use crate::rep::{EquivariantMap, ModuleObject, Weight};

use super::{evaluate, Labeling, Orient, Slice, SliceKind, TangleDiagram, TangleError};

/// Sign of a crossing in the usual oriented convention.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrossSign {
    Pos,
    Neg,
}

impl CrossSign {
    pub fn flip(self) -> Self {
        match self {
            CrossSign::Pos => CrossSign::Neg,
            CrossSign::Neg => CrossSign::Pos,
        }
    }
}

fn up_crossing(sign: CrossSign, pos: usize) -> Slice {
    Slice::new(
        match sign {
            CrossSign::Pos => SliceKind::CrossPos,
            CrossSign::Neg => SliceKind::CrossNeg,
        },
        pos,
    )
}

/// Expands a crossing of the two strands at `(pos, pos+1)` with the given
/// orientations and sign into elementary slices. Upward crossings are the
/// primitive generators; the others bend one or both strands around a cup
/// and a cap.
pub fn derived_crossing(orients: (Orient, Orient), sign: CrossSign, pos: usize) -> Vec<Slice> {
    use Orient::*;
    let p = pos;
    match orients {
        (Up, Up) => vec![up_crossing(sign, p)],
        (Up, Down) => {
            // rotate the right strand: its up-leg enters the crossing on
            // the left, so the crossing sign transfers directly
            vec![
                Slice::new(SliceKind::CupL, p),
                up_crossing(sign, p + 1),
                Slice::new(SliceKind::CapR, p + 2),
            ]
        }
        (Down, Up) => {
            vec![
                Slice::new(SliceKind::CupR, p + 2),
                up_crossing(sign, p + 1),
                Slice::new(SliceKind::CapL, p),
            ]
        }
        (Down, Down) => {
            vec![
                Slice::new(SliceKind::CupL, p),
                Slice::new(SliceKind::CupL, p + 1),
                up_crossing(sign, p + 2),
                Slice::new(SliceKind::CapR, p + 3),
                Slice::new(SliceKind::CapR, p + 2),
            ]
        }
    }
}

/// The crossing where the left strand passes over the right one; used
/// when dragging a cut strand across the diagram in front of everything.
pub fn crossing_over_left(orients: (Orient, Orient), pos: usize) -> Vec<Slice> {
    use Orient::*;
    let sign = match orients {
        (Up, Up) => CrossSign::Pos,
        (Up, Down) => CrossSign::Neg,
        (Down, Up) => CrossSign::Neg,
        (Down, Down) => CrossSign::Pos,
    };
    derived_crossing(orients, sign, pos)
}

/// The diagram of a full +1 framing twist on a single upward strand: a
/// curl built from a cup, one crossing and a cap.
pub fn full_twist_diagram() -> TangleDiagram {
    TangleDiagram::new(
        vec![Orient::Up],
        vec![
            Slice::new(SliceKind::CupR, 1),
            Slice::new(SliceKind::CrossNeg, 0),
            Slice::new(SliceKind::CapR, 1),
        ],
    )
}

/// The mirror curl, undoing a +1 twist.
pub fn inverse_twist_diagram() -> TangleDiagram {
    TangleDiagram::new(
        vec![Orient::Up],
        vec![
            Slice::new(SliceKind::CupR, 1),
            Slice::new(SliceKind::CrossPos, 0),
            Slice::new(SliceKind::CapR, 1),
        ],
    )
}

/// Evaluates the +1 twist curl on L(lambda); equals the ribbon operator.
pub fn full_twist(lam: Weight) -> Result<EquivariantMap, TangleError> {
    let _ = ModuleObject::simple(lam)?;
    evaluate(&full_twist_diagram(), &Labeling::constant(lam))
}
