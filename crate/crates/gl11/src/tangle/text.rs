//! The Morse-word text format.
//!
//! ```text
//! signature: + -
//! idup 0
//! crosspos 1
//! capr 0
//! label c0 = (1,0)
//! ```

use std::collections::BTreeMap;

use crate::rep::Weight;

use super::{Labeling, Orient, Slice, SliceKind, TangleDiagram, TangleError};

fn parse_err(line: usize, msg: impl Into<String>) -> TangleError {
    TangleError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses the Morse text format; label lines are optional and produce a
/// per-component labeling.
pub fn parse_morse(text: &str) -> Result<(TangleDiagram, Option<Labeling>), TangleError> {
    let mut source = None;
    let mut slices = Vec::new();
    let mut labels: BTreeMap<usize, Weight> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("signature:") {
            if source.is_some() {
                return Err(parse_err(lineno, "duplicate signature line"));
            }
            let mut sig = Vec::new();
            for tok in rest.split_whitespace() {
                match tok {
                    "+" => sig.push(Orient::Up),
                    "-" => sig.push(Orient::Down),
                    _ => return Err(parse_err(lineno, format!("bad orientation `{tok}`"))),
                }
            }
            source = Some(sig);
            continue;
        }
        if let Some(rest) = line.strip_prefix("label") {
            let (comp, wt) = rest
                .split_once('=')
                .ok_or_else(|| parse_err(lineno, "label format is `label c<k> = (a,b)`"))?;
            let comp = comp
                .trim()
                .strip_prefix('c')
                .and_then(|v| v.parse::<usize>().ok())
                .ok_or_else(|| parse_err(lineno, format!("bad component `{comp}`")))?;
            let wt =
                Weight::parse(wt).ok_or_else(|| parse_err(lineno, format!("bad weight `{wt}`")))?;
            labels.insert(comp, wt);
            continue;
        }
        let (name, pos) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| parse_err(lineno, format!("bad slice line `{line}`")))?;
        let kind = match name {
            "idup" => SliceKind::IdUp,
            "iddown" => SliceKind::IdDown,
            "crosspos" => SliceKind::CrossPos,
            "crossneg" => SliceKind::CrossNeg,
            "capr" => SliceKind::CapR,
            "capl" => SliceKind::CapL,
            "cupl" => SliceKind::CupL,
            "cupr" => SliceKind::CupR,
            _ => return Err(parse_err(lineno, format!("unknown slice `{name}`"))),
        };
        let pos = pos
            .trim()
            .parse::<usize>()
            .map_err(|_| parse_err(lineno, format!("bad position `{pos}`")))?;
        slices.push(Slice::new(kind, pos));
    }
    let source = source.ok_or_else(|| parse_err(1, "missing `signature:` line"))?;
    let labeling = if labels.is_empty() {
        None
    } else {
        Some(Labeling::PerComponent(labels))
    };
    Ok((TangleDiagram::new(source, slices), labeling))
}

/// Renders a diagram (and optionally a labeling) in the text format.
pub fn render_morse(d: &TangleDiagram, labeling: Option<&Labeling>) -> String {
    let mut out = String::from("signature:");
    for o in &d.source {
        out.push_str(match o {
            Orient::Up => " +",
            Orient::Down => " -",
        });
    }
    out.push('\n');
    for s in &d.slices {
        out.push_str(&format!("{} {}\n", s.kind.name(), s.pos));
    }
    if let Some(Labeling::PerComponent(map)) = labeling {
        for (c, w) in map {
            out.push_str(&format!("label c{c} = {w}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::EPS1;
    use crate::tangle::validate;

    #[test]
    fn parse_render_round_trip() {
        let text = "signature: + -\nidup 0\ncupl 2\ncrosspos 1\ncapr 2\nlabel c0 = (1,0)\n";
        let (d, lab) = parse_morse(text).unwrap();
        assert_eq!(d.source, vec![Orient::Up, Orient::Down]);
        assert_eq!(d.slices.len(), 4);
        let rendered = render_morse(&d, lab.as_ref());
        assert_eq!(rendered, text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_morse("signature: +\nfoo 0\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: unknown slice `foo`".to_string());
        let err = parse_morse("idup 0\n").unwrap_err();
        assert!(matches!(err, TangleError::Parse { line: 1, .. }));
        let err = parse_morse("signature: +\nlabel c0 = (1;0)\n").unwrap_err();
        assert!(matches!(err, TangleError::Parse { line: 2, .. }));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a circle\nsignature:\n\ncupr 0 # create\ncapr 0\n";
        let (d, lab) = parse_morse(text).unwrap();
        assert!(lab.is_none());
        let t = validate(&d, &Labeling::constant(EPS1)).unwrap();
        assert_eq!(t.component_count(), 1);
    }
}
