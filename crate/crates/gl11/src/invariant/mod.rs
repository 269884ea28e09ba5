//! Closed-link invariants.
//!
//! The plain evaluation of a closed diagram is always zero, so the useful
//! invariant cuts one strand open, evaluates the resulting 1-1 tangle and
//! reads off the scalar it acts by. With the constant vector-weight
//! labeling this recovers the Alexander-Conway polynomial at t^{1/2} = q.

mod burau;
mod corpus;

pub use burau::{burau_oracle, unit_class_eq};
pub use corpus::{corpus, CorpusEntry};

use thiserror::Error;

use crate::rep::{EquivariantMap, Weight, EPS1};
use crate::scalar::{LaurentPoly, RationalFunction};
use crate::tangle::{
    crossing_over_left, evaluate, validate, Labeling, Orient, Slice, SliceKind, TangleDiagram,
    TangleError, Traced,
};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("diagram is not closed")]
    NotClosed,
    #[error("no component carries the label {0}")]
    NoComponentWithLabel(Weight),
    #[error("cut tangle is not a scalar multiple of the identity:\n{dump}")]
    NotScalar { dump: String },
    #[error("value is not a Laurent polynomial: {0}")]
    NonPolynomial(String),
    #[error("skein triple is degenerate (diagrams coincide)")]
    DegenerateSkein,
    #[error(transparent)]
    Tangle(#[from] TangleError),
}

/// The invariant of a closed diagram: the single entry of its evaluation.
/// Vanishes on every nonempty closed link.
pub fn q_closed(
    d: &TangleDiagram,
    labeling: &Labeling,
) -> Result<RationalFunction, InvariantError> {
    if !d.is_closed() {
        return Err(InvariantError::NotClosed);
    }
    let m = evaluate(d, labeling)?;
    Ok(m.entry(0, 0))
}

/// A cut site: a strand cell between slice levels.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CutSite {
    pub level: usize,
    pub pos: usize,
}

/// All upward cells on components labeled `lam` (interior levels only).
pub fn admissible_cut_sites(d: &TangleDiagram, traced: &Traced, lam: Weight) -> Vec<CutSite> {
    let mut out = Vec::new();
    for level in 1..d.slices.len() {
        for (pos, orient) in traced.levels[level].iter().enumerate() {
            if *orient == Orient::Up && traced.label_at(level, pos) == lam {
                out.push(CutSite { level, pos });
            }
        }
    }
    out
}

/// Opens a closed diagram at the given upward cell: the strand is cut,
/// the new input runs up the left edge to take over the upper piece, and
/// the lower piece is dragged out to the right in front of the diagram
/// and exits at the top. Every drag crossing over a strand of the cut
/// component itself is a kink on the open strand, so the blackboard
/// framing is restored by compensating twist curls at the top. Returns
/// the 1-1 tangle with a labeling matching the original components.
pub fn cut_open(
    d: &TangleDiagram,
    traced: &Traced,
    site: CutSite,
) -> Result<(TangleDiagram, Labeling), InvariantError> {
    let k = site.level;
    let i = site.pos;
    let sig = &traced.levels[k];
    let m = sig.len();
    assert_eq!(sig[i], Orient::Up, "cut site must be on an upward strand");
    let cut_comp = traced.component_at(k, i);

    let mut slices: Vec<Slice> = Vec::new();
    // bottom part, shifted right past the new input strand
    for s in &d.slices[..k] {
        slices.push(Slice::new(s.kind, s.pos + 1));
    }
    // the new strand walks right to the cut position, then the lower
    // piece of the cut strand drags out to the right edge
    let mut self_writhe = 0i64;
    for t in (0..i).chain(i + 1..m) {
        slices.extend(crossing_over_left((Orient::Up, sig[t]), t));
        if traced.component_at(k, t) == cut_comp {
            self_writhe += match sig[t] {
                Orient::Up => 1,
                Orient::Down => -1,
            };
        }
    }
    let drag_len = slices.len() - k;
    // top part, unchanged: the rider strand stays to its right
    slices.extend(d.slices[k..].iter().cloned());
    // undo the framing change of the drag kinks
    let counter_kind = if self_writhe > 0 {
        SliceKind::CrossNeg
    } else {
        SliceKind::CrossPos
    };
    for _ in 0..self_writhe.unsigned_abs() {
        slices.push(Slice::new(SliceKind::CupR, 1));
        slices.push(Slice::new(counter_kind, 0));
        slices.push(Slice::new(SliceKind::CapR, 1));
    }

    let cut = TangleDiagram::new(vec![Orient::Up], slices);

    // relabel: each original component maps to a cell of the cut diagram
    let cut_traced = validate(&cut, &Labeling::constant(traced.label_at(k, i)))
        .map_err(InvariantError::Tangle)?;
    let mut labels = std::collections::BTreeMap::new();
    for c in 0..traced.component_count() {
        let witness = component_witness(traced, c);
        let (lvl, pos) = witness;
        let new_cell = if lvl <= k {
            (lvl, pos + 1)
        } else {
            (lvl + drag_len, pos)
        };
        let new_comp = cut_traced.component_at(new_cell.0, new_cell.1);
        labels.insert(new_comp, traced.components[c].label);
    }
    debug_assert_eq!(labels.len(), cut_traced.component_count());
    Ok((cut, Labeling::PerComponent(labels)))
}

/// Some cell on component `c`, earliest in slice order.
fn component_witness(traced: &Traced, c: usize) -> (usize, usize) {
    for (lvl, row) in traced.levels.iter().enumerate() {
        for pos in 0..row.len() {
            if traced.component_at(lvl, pos) == c {
                return (lvl, pos);
            }
        }
    }
    panic!("component {c} has no cells");
}

fn scalar_of(m: &EquivariantMap) -> Result<RationalFunction, InvariantError> {
    m.as_scalar_multiple_of_identity()
        .ok_or_else(|| InvariantError::NotScalar {
            dump: m.dump_coords(),
        })
}

/// The invariant value at one particular cut site.
pub fn hat_q_at_site(
    d: &TangleDiagram,
    traced: &Traced,
    site: CutSite,
) -> Result<RationalFunction, InvariantError> {
    let (cut, labeling) = cut_open(d, traced, site)?;
    let m = evaluate(&cut, &labeling)?;
    scalar_of(&m)
}

/// The cut invariant of a closed link: the first component labeled `lam`
/// is cut at its lowest upward point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkInvariantResult {
    pub value: RationalFunction,
    pub cut_component: usize,
    pub label: Weight,
    /// Per-component writhes, for framing-sensitive labelings.
    pub writhes: Vec<i64>,
}

pub fn hat_q(
    d: &TangleDiagram,
    labeling: &Labeling,
    lam: Weight,
) -> Result<LinkInvariantResult, InvariantError> {
    if !d.is_closed() {
        return Err(InvariantError::NotClosed);
    }
    let traced = validate(d, labeling)?;
    let cut_component = traced
        .components
        .iter()
        .position(|c| c.label == lam)
        .ok_or(InvariantError::NoComponentWithLabel(lam))?;
    let site = admissible_cut_sites(d, &traced, lam)
        .into_iter()
        .find(|s| traced.component_at(s.level, s.pos) == cut_component)
        .ok_or(InvariantError::NoComponentWithLabel(lam))?;
    let value = hat_q_at_site(d, &traced, site)?;
    Ok(LinkInvariantResult {
        value,
        cut_component,
        label: lam,
        writhes: traced.components.iter().map(|c| c.writhe).collect(),
    })
}

/// The Alexander-Conway polynomial at t^{1/2} = q: the cut invariant
/// under the constant vector-weight labeling; always a Laurent
/// polynomial.
pub fn alexander(d: &TangleDiagram) -> Result<LaurentPoly, InvariantError> {
    let res = hat_q(d, &Labeling::constant(EPS1), EPS1)?;
    res.value
        .as_laurent()
        .cloned()
        .ok_or_else(|| InvariantError::NonPolynomial(res.value.to_string()))
}

/// Checks the skein relation `hat_q(D+) - hat_q(D-) = (q - q^-1) hat_q(D0)`
/// under the constant vector-weight labeling.
pub fn skein_check(
    d_plus: &TangleDiagram,
    d_minus: &TangleDiagram,
    d_zero: &TangleDiagram,
) -> Result<bool, InvariantError> {
    if d_plus == d_minus {
        return Err(InvariantError::DegenerateSkein);
    }
    let lab = Labeling::constant(EPS1);
    let p = hat_q(d_plus, &lab, EPS1)?.value;
    let m = hat_q(d_minus, &lab, EPS1)?.value;
    let z = hat_q(d_zero, &lab, EPS1)?.value;
    let d = RationalFunction::from(crate::uq::q_minus_qinv());
    Ok(&p - &m == &d * &z)
}

/// True if every admissible cut site on a `lam`-labeled component yields
/// the same value.
pub fn cut_independence_check(
    d: &TangleDiagram,
    labeling: &Labeling,
    lam: Weight,
) -> Result<bool, InvariantError> {
    if !d.is_closed() {
        return Err(InvariantError::NotClosed);
    }
    let traced = validate(d, labeling)?;
    let sites = admissible_cut_sites(d, &traced, lam);
    let mut value: Option<RationalFunction> = None;
    for site in sites {
        let v = hat_q_at_site(d, &traced, site)?;
        match &value {
            None => value = Some(v),
            Some(prev) if *prev == v => {}
            Some(prev) => {
                let _ = prev;
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Skein triple at crossing index `at` of a braid word: the word with the
/// crossing made positive, made negative, and deleted.
pub fn braid_skein_triple(
    b: &crate::tangle::BraidWord,
    at: usize,
) -> (TangleDiagram, TangleDiagram, TangleDiagram) {
    let mut plus = b.word.clone();
    plus[at] = plus[at].abs();
    let mut minus = b.word.clone();
    minus[at] = -minus[at].abs();
    let mut zero = b.word.clone();
    zero.remove(at);
    let mk = |w: Vec<i32>| {
        crate::tangle::BraidWord::new(b.strands, w)
            .expect("same strand count")
            .closure()
    };
    (mk(plus), mk(minus), mk(zero))
}
