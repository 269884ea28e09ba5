//! Morse-word presentation of oriented framed tangle diagrams and their
//! evaluation to equivariant maps.
//!
//! A diagram is a source signature of strand orientations plus a sequence
//! of elementary slices, each applied at a single strand position.
//! Validation traces strand components, assigns labels and computes
//! per-component writhes; evaluation folds the slice morphisms bottom to
//! top.

mod braid;
mod derived;
mod evaluate;
mod text;

pub use braid::BraidWord;
pub use derived::{
    crossing_over_left, derived_crossing, full_twist, full_twist_diagram, inverse_twist_diagram,
    CrossSign,
};
pub use evaluate::evaluate;
pub use text::{parse_morse, render_morse};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::rep::{RepError, Weight};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TangleError {
    #[error("slice {slice}: position {pos} out of range (width {width})")]
    PositionOutOfRange {
        slice: usize,
        pos: usize,
        width: usize,
    },
    #[error("slice {slice}: {kind:?} needs orientations {expected} at position {pos}")]
    OrientationMismatch {
        slice: usize,
        kind: SliceKind,
        pos: usize,
        expected: &'static str,
    },
    #[error("diagram is not closed (source or target signature nonempty)")]
    NotClosed,
    #[error("component {0} has no label")]
    UnlabeledComponent(usize),
    #[error("label given for unknown component {0}")]
    UnknownComponent(usize),
    #[error("label {0} is not in P'")]
    LabelNotAdmissible(Weight),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("braid generator {0} out of range for {1} strands")]
    BraidIndexOutOfRange(i32, usize),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Strand orientation at a boundary point: `Up` strands carry L(lambda),
/// `Down` strands its dual.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn flip(self) -> Self {
        match self {
            Orient::Up => Orient::Down,
            Orient::Down => Orient::Up,
        }
    }
}

/// An elementary slice generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SliceKind {
    IdUp,
    IdDown,
    /// Positive crossing of two adjacent upward strands.
    CrossPos,
    /// Negative crossing of two adjacent upward strands.
    CrossNeg,
    /// Cap consuming an (up, down) pair.
    CapR,
    /// Cap consuming a (down, up) pair.
    CapL,
    /// Cup producing a (down, up) pair.
    CupL,
    /// Cup producing an (up, down) pair.
    CupR,
}

impl SliceKind {
    pub fn name(&self) -> &'static str {
        match self {
            SliceKind::IdUp => "idup",
            SliceKind::IdDown => "iddown",
            SliceKind::CrossPos => "crosspos",
            SliceKind::CrossNeg => "crossneg",
            SliceKind::CapR => "capr",
            SliceKind::CapL => "capl",
            SliceKind::CupL => "cupl",
            SliceKind::CupR => "cupr",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Slice {
    pub kind: SliceKind,
    pub pos: usize,
}

impl Slice {
    pub fn new(kind: SliceKind, pos: usize) -> Self {
        Self { kind, pos }
    }
}

/// A tangle diagram in Morse position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TangleDiagram {
    pub source: Vec<Orient>,
    pub slices: Vec<Slice>,
}

impl TangleDiagram {
    pub fn new(source: Vec<Orient>, slices: Vec<Slice>) -> Self {
        Self { source, slices }
    }

    pub fn closed(slices: Vec<Slice>) -> Self {
        Self::new(Vec::new(), slices)
    }

    /// Stacks `top` above `self`; signatures must match.
    pub fn stack(&self, top: &TangleDiagram) -> Option<TangleDiagram> {
        let target = self.target_signature().ok()?;
        if target != top.source {
            return None;
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&top.slices);
        Some(TangleDiagram::new(self.source.clone(), slices))
    }

    /// Places `right` beside `self` (to the right).
    pub fn beside(&self, right: &TangleDiagram) -> TangleDiagram {
        let mut source = self.source.clone();
        source.extend_from_slice(&right.source);
        let mut slices = self.slices.clone();
        // interleaving is immaterial; put all of `self` first, then
        // `right` shifted past self's final width
        let shift = self
            .target_signature()
            .expect("left diagram must be valid")
            .len();
        for s in &right.slices {
            slices.push(Slice::new(s.kind, s.pos + shift));
        }
        TangleDiagram::new(source, slices)
    }

    pub fn target_signature(&self) -> Result<Vec<Orient>, TangleError> {
        let mut sig = self.source.clone();
        for (k, s) in self.slices.iter().enumerate() {
            apply_signature(&mut sig, k, s)?;
        }
        Ok(sig)
    }

    pub fn is_closed(&self) -> bool {
        self.source.is_empty()
            && self
                .target_signature()
                .map(|t| t.is_empty())
                .unwrap_or(false)
    }
}

fn expect_pair(
    sig: &[Orient],
    k: usize,
    s: &Slice,
    want: (Orient, Orient),
    expected: &'static str,
) -> Result<(), TangleError> {
    if s.pos + 1 >= sig.len() {
        return Err(TangleError::PositionOutOfRange {
            slice: k,
            pos: s.pos,
            width: sig.len(),
        });
    }
    if (sig[s.pos], sig[s.pos + 1]) != want {
        return Err(TangleError::OrientationMismatch {
            slice: k,
            kind: s.kind,
            pos: s.pos,
            expected,
        });
    }
    Ok(())
}

/// Applies one slice to a running signature.
fn apply_signature(sig: &mut Vec<Orient>, k: usize, s: &Slice) -> Result<(), TangleError> {
    match s.kind {
        SliceKind::IdUp | SliceKind::IdDown => {
            if s.pos >= sig.len() {
                return Err(TangleError::PositionOutOfRange {
                    slice: k,
                    pos: s.pos,
                    width: sig.len(),
                });
            }
            let want = if s.kind == SliceKind::IdUp {
                Orient::Up
            } else {
                Orient::Down
            };
            if sig[s.pos] != want {
                return Err(TangleError::OrientationMismatch {
                    slice: k,
                    kind: s.kind,
                    pos: s.pos,
                    expected: if want == Orient::Up { "up" } else { "down" },
                });
            }
        }
        SliceKind::CrossPos | SliceKind::CrossNeg => {
            expect_pair(sig, k, s, (Orient::Up, Orient::Up), "up up")?;
        }
        SliceKind::CapR => {
            expect_pair(sig, k, s, (Orient::Up, Orient::Down), "up down")?;
            sig.drain(s.pos..s.pos + 2);
        }
        SliceKind::CapL => {
            expect_pair(sig, k, s, (Orient::Down, Orient::Up), "down up")?;
            sig.drain(s.pos..s.pos + 2);
        }
        SliceKind::CupR => {
            if s.pos > sig.len() {
                return Err(TangleError::PositionOutOfRange {
                    slice: k,
                    pos: s.pos,
                    width: sig.len(),
                });
            }
            sig.splice(s.pos..s.pos, [Orient::Up, Orient::Down]);
        }
        SliceKind::CupL => {
            if s.pos > sig.len() {
                return Err(TangleError::PositionOutOfRange {
                    slice: k,
                    pos: s.pos,
                    width: sig.len(),
                });
            }
            sig.splice(s.pos..s.pos, [Orient::Down, Orient::Up]);
        }
    }
    Ok(())
}

/// Assignment of a weight in P' to each strand component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Labeling {
    Constant(Weight),
    PerComponent(BTreeMap<usize, Weight>),
}

impl Labeling {
    pub fn constant(w: Weight) -> Self {
        Labeling::Constant(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    pub label: Weight,
    pub writhe: i64,
    /// Whether the component is closed (no boundary endpoints).
    pub closed: bool,
}

/// The result of validating a labeled diagram: signatures at every level,
/// the component id of every strand cell, and per-component data.
#[derive(Clone, Debug)]
pub struct Traced {
    pub levels: Vec<Vec<Orient>>,
    comp: Vec<Vec<usize>>,
    pub components: Vec<ComponentInfo>,
}

impl Traced {
    /// Component id of the strand at `(level, pos)`.
    pub fn component_at(&self, level: usize, pos: usize) -> usize {
        self.comp[level][pos]
    }

    pub fn label_at(&self, level: usize, pos: usize) -> Weight {
        self.components[self.comp[level][pos]].label
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new() -> Self {
        Self { parent: Vec::new() }
    }

    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Validates a labeled diagram: checks every slice against the running
/// signature, traces components, and resolves labels.
pub fn validate(d: &TangleDiagram, labeling: &Labeling) -> Result<Traced, TangleError> {
    let mut uf = UnionFind::new();
    let mut levels: Vec<Vec<Orient>> = vec![d.source.clone()];
    // cell ids per level
    let mut cells: Vec<Vec<usize>> = vec![(0..d.source.len()).map(|_| uf.fresh()).collect()];
    let mut crossings: Vec<(usize, usize, i64)> = Vec::new(); // (cell a, cell b, sign)

    for (k, s) in d.slices.iter().enumerate() {
        let mut sig = levels[k].clone();
        apply_signature(&mut sig, k, s)?;
        let prev = &cells[k];
        let width = sig.len();
        let mut row: Vec<usize> = Vec::with_capacity(width);
        match s.kind {
            SliceKind::IdUp | SliceKind::IdDown => {
                for &p in prev.iter().take(width) {
                    let id = uf.fresh();
                    uf.union(id, p);
                    row.push(id);
                }
            }
            SliceKind::CrossPos | SliceKind::CrossNeg => {
                let p = s.pos;
                for i in 0..width {
                    let id = uf.fresh();
                    let from = if i == p {
                        p + 1
                    } else if i == p + 1 {
                        p
                    } else {
                        i
                    };
                    uf.union(id, prev[from]);
                    row.push(id);
                }
                let sign = if s.kind == SliceKind::CrossPos { 1 } else { -1 };
                crossings.push((prev[p], prev[p + 1], sign));
            }
            SliceKind::CapR | SliceKind::CapL => {
                let p = s.pos;
                uf.union(prev[p], prev[p + 1]);
                for i in 0..width {
                    let from = if i < p { i } else { i + 2 };
                    let id = uf.fresh();
                    uf.union(id, prev[from]);
                    row.push(id);
                }
            }
            SliceKind::CupR | SliceKind::CupL => {
                let p = s.pos;
                let leg_a = uf.fresh();
                let leg_b = uf.fresh();
                uf.union(leg_a, leg_b);
                for i in 0..width {
                    if i == p {
                        row.push(leg_a);
                    } else if i == p + 1 {
                        row.push(leg_b);
                    } else {
                        let from = if i < p { i } else { i - 2 };
                        let id = uf.fresh();
                        uf.union(id, prev[from]);
                        row.push(id);
                    }
                }
            }
        }
        levels.push(sig);
        cells.push(row);
    }

    // components in order of first appearance
    let mut comp_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut comp: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
    for row in &cells {
        let mut crow = Vec::with_capacity(row.len());
        for &cell in row {
            let root = uf.find(cell);
            let next = comp_of_root.len();
            let id = *comp_of_root.entry(root).or_insert(next);
            crow.push(id);
        }
        comp.push(crow);
    }
    let n_comp = comp_of_root.len();

    // boundary components are open
    let mut closed = vec![true; n_comp];
    for &c in comp.first().into_iter().flatten() {
        closed[c] = false;
    }
    for &c in comp.last().into_iter().flatten() {
        closed[c] = false;
    }

    // labels
    let mut labels: Vec<Option<Weight>> = vec![None; n_comp];
    match labeling {
        Labeling::Constant(w) => {
            labels = vec![Some(*w); n_comp];
        }
        Labeling::PerComponent(map) => {
            for (&c, &w) in map {
                if c >= n_comp {
                    return Err(TangleError::UnknownComponent(c));
                }
                labels[c] = Some(w);
            }
        }
    }
    let mut infos = Vec::with_capacity(n_comp);
    for (c, lab) in labels.iter().enumerate() {
        let label = lab.ok_or(TangleError::UnlabeledComponent(c))?;
        if !label.in_p_prime() {
            return Err(TangleError::LabelNotAdmissible(label));
        }
        infos.push(ComponentInfo {
            label,
            writhe: 0,
            closed: closed[c],
        });
    }

    // per-component writhe from self-crossings
    let mut comp_of_cell = |cell: usize| -> usize {
        let root = uf.find(cell);
        comp_of_root[&root]
    };
    for (a, b, sign) in crossings {
        let (ca, cb) = (comp_of_cell(a), comp_of_cell(b));
        if ca == cb {
            infos[ca].writhe += sign;
        }
    }

    Ok(Traced {
        levels,
        comp,
        components: infos,
    })
}

impl fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_morse(self, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::EPS1;

    #[test]
    fn empty_diagram_is_valid() {
        let d = TangleDiagram::closed(vec![]);
        let t = validate(&d, &Labeling::constant(EPS1)).unwrap();
        assert_eq!(t.component_count(), 0);
        assert!(d.is_closed());
    }

    #[test]
    fn circle_has_one_closed_component() {
        let d = TangleDiagram::closed(vec![
            Slice::new(SliceKind::CupR, 0),
            Slice::new(SliceKind::CapR, 0),
        ]);
        let t = validate(&d, &Labeling::constant(EPS1)).unwrap();
        assert_eq!(t.component_count(), 1);
        assert!(t.components[0].closed);
        assert_eq!(t.components[0].writhe, 0);
    }

    #[test]
    fn crossing_requires_two_up_strands() {
        let d = TangleDiagram::new(
            vec![Orient::Up, Orient::Down],
            vec![Slice::new(SliceKind::CrossPos, 0)],
        );
        let err = validate(&d, &Labeling::constant(EPS1)).unwrap_err();
        assert!(matches!(err, TangleError::OrientationMismatch { .. }));
    }

    #[test]
    fn signature_tracking_and_errors() {
        let d = TangleDiagram::new(vec![Orient::Up], vec![Slice::new(SliceKind::CapR, 0)]);
        assert!(matches!(
            validate(&d, &Labeling::constant(EPS1)),
            Err(TangleError::PositionOutOfRange { .. })
        ));
        let d = TangleDiagram::new(vec![Orient::Up], vec![Slice::new(SliceKind::IdDown, 0)]);
        assert!(matches!(
            validate(&d, &Labeling::constant(EPS1)),
            Err(TangleError::OrientationMismatch { .. })
        ));
    }

    #[test]
    fn labels_are_validated() {
        let d = TangleDiagram::closed(vec![
            Slice::new(SliceKind::CupR, 0),
            Slice::new(SliceKind::CapR, 0),
        ]);
        // non-admissible weight
        let err = validate(&d, &Labeling::constant(Weight::new(1, -1))).unwrap_err();
        assert!(matches!(err, TangleError::LabelNotAdmissible(_)));
        // missing component label
        let err = validate(&d, &Labeling::PerComponent(BTreeMap::new())).unwrap_err();
        assert_eq!(err, TangleError::UnlabeledComponent(0));
        // unknown component label
        let mut m = BTreeMap::new();
        m.insert(0, EPS1);
        m.insert(3, EPS1);
        let err = validate(&d, &Labeling::PerComponent(m)).unwrap_err();
        assert_eq!(err, TangleError::UnknownComponent(3));
    }

    #[test]
    fn kink_writhe() {
        // right kink with a positive crossing: writhe +1
        let d = TangleDiagram::new(
            vec![Orient::Up],
            vec![
                Slice::new(SliceKind::CupR, 1),
                Slice::new(SliceKind::CrossPos, 0),
                Slice::new(SliceKind::CapR, 1),
            ],
        );
        let t = validate(&d, &Labeling::constant(EPS1)).unwrap();
        assert_eq!(t.component_count(), 1);
        assert_eq!(t.components[0].writhe, 1);
        assert!(!t.components[0].closed);
    }
}
