//! Braid words and their closures.

use std::fmt;

use super::{Slice, SliceKind, TangleDiagram, TangleError};

/// A braid word on `strands` strands; entry `i` (1-based, signed) is the
/// generator crossing strands `|i|` and `|i|+1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    pub strands: usize,
    pub word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, TangleError> {
        if strands == 0 {
            return Err(TangleError::Parse {
                line: 0,
                msg: "braid needs at least one strand".into(),
            });
        }
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(TangleError::BraidIndexOutOfRange(g, strands));
            }
        }
        Ok(Self { strands, word })
    }

    /// Parses `n=2: 1 1 1` (an optional leading `braid` keyword is
    /// tolerated).
    pub fn parse(s: &str) -> Result<Self, TangleError> {
        let s = s.trim();
        let s = s.strip_prefix("braid").map(str::trim).unwrap_or(s);
        let (head, tail) = s.split_once(':').ok_or_else(|| TangleError::Parse {
            line: 1,
            msg: "braid format is `n=<strands>: <word>`".into(),
        })?;
        let n = head
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .ok_or_else(|| TangleError::Parse {
                line: 1,
                msg: format!("bad strand count `{head}`"),
            })?;
        let mut word = Vec::new();
        for tok in tail.split_whitespace() {
            let g = tok.parse::<i32>().map_err(|_| TangleError::Parse {
                line: 1,
                msg: format!("bad braid letter `{tok}`"),
            })?;
            word.push(g);
        }
        Self::new(n, word)
    }

    /// The closure as a closed Morse diagram: nested cups feed the braid
    /// strands, the return strands run down on the right, nested caps
    /// close up.
    pub fn closure(&self) -> TangleDiagram {
        let n = self.strands;
        let mut slices = Vec::new();
        for i in 0..n {
            slices.push(Slice::new(SliceKind::CupR, i));
        }
        for &g in &self.word {
            let kind = if g > 0 {
                SliceKind::CrossPos
            } else {
                SliceKind::CrossNeg
            };
            slices.push(Slice::new(kind, g.unsigned_abs() as usize - 1));
        }
        for i in (0..n).rev() {
            slices.push(Slice::new(SliceKind::CapR, i));
        }
        TangleDiagram::closed(slices)
    }

    /// The braid of the mirror link.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            word: self.word.iter().map(|g| -g).collect(),
        }
    }

    /// Conjugation `g w g^-1` by a single generator.
    pub fn conjugated_by(&self, g: i32) -> Result<Self, TangleError> {
        let mut word = vec![g];
        word.extend_from_slice(&self.word);
        word.push(-g);
        Self::new(self.strands, word)
    }

    /// Markov stabilization: one more strand and a final `sigma_n^{+-1}`.
    pub fn stabilized(&self, positive: bool) -> Self {
        let g = self.strands as i32;
        let mut word = self.word.clone();
        word.push(if positive { g } else { -g });
        Self {
            strands: self.strands + 1,
            word,
        }
    }

    /// Permutation cycle count of the closure = number of link
    /// components.
    pub fn closure_components(&self) -> usize {
        let n = self.strands;
        let mut perm: Vec<usize> = (0..n).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = perm[at];
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.strands)?;
        for g in &self.word {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}
