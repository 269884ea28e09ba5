//! A fixed corpus of braid closures used for regression and property
//! sweeps. Expected Alexander values, where pinned, come from the skein
//! recursion on torus links and from the figure-eight computation; the
//! rest are cross-checked against the Burau oracle.

use crate::tangle::BraidWord;

pub struct CorpusEntry {
    pub name: &'static str,
    pub strands: usize,
    pub word: &'static [i32],
    /// Rendered Alexander polynomial, when pinned by an independent
    /// derivation.
    pub alexander: Option<&'static str>,
}

impl CorpusEntry {
    pub fn braid(&self) -> BraidWord {
        BraidWord::new(self.strands, self.word.to_vec()).expect("corpus entry is well-formed")
    }
}

pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            name: "unknot",
            strands: 1,
            word: &[],
            alexander: Some("1"),
        },
        CorpusEntry {
            name: "unlink2",
            strands: 2,
            word: &[],
            alexander: Some("0"),
        },
        CorpusEntry {
            name: "hopf",
            strands: 2,
            word: &[1, 1],
            alexander: Some("-q^-1 + q"),
        },
        CorpusEntry {
            name: "hopf-mirror",
            strands: 2,
            word: &[-1, -1],
            alexander: Some("q^-1 - q"),
        },
        CorpusEntry {
            name: "trefoil",
            strands: 2,
            word: &[1, 1, 1],
            alexander: Some("q^-2 - 1 + q^2"),
        },
        CorpusEntry {
            name: "trefoil-mirror",
            strands: 2,
            word: &[-1, -1, -1],
            alexander: Some("q^-2 - 1 + q^2"),
        },
        CorpusEntry {
            name: "solomon",
            strands: 2,
            word: &[1, 1, 1, 1],
            alexander: Some("-q^-3 + q^-1 - q + q^3"),
        },
        CorpusEntry {
            name: "cinquefoil",
            strands: 2,
            word: &[1, 1, 1, 1, 1],
            alexander: Some("q^-4 - q^-2 + 1 - q^2 + q^4"),
        },
        CorpusEntry {
            name: "torus-2-6",
            strands: 2,
            word: &[1, 1, 1, 1, 1, 1],
            alexander: Some("-q^-5 + q^-3 - q^-1 + q - q^3 + q^5"),
        },
        CorpusEntry {
            name: "figure-eight",
            strands: 3,
            word: &[1, -2, 1, -2],
            alexander: Some("-q^-2 + 3 - q^2"),
        },
        CorpusEntry {
            name: "granny",
            strands: 3,
            word: &[1, 1, 1, 2, 2, 2],
            alexander: None,
        },
        CorpusEntry {
            name: "square-knot",
            strands: 3,
            word: &[1, 1, 1, -2, -2, -2],
            alexander: None,
        },
        CorpusEntry {
            name: "borromean",
            strands: 3,
            word: &[1, -2, 1, -2, 1, -2],
            alexander: None,
        },
        CorpusEntry {
            name: "four-strand-knot",
            strands: 4,
            word: &[1, 2, 3, 1, 2, 1],
            alexander: None,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_well_formed_and_large_enough() {
        let c = corpus();
        assert!(c.len() >= 10);
        for e in &c {
            let b = e.braid();
            assert!(b.closure().is_closed(), "{} closure is not closed", e.name);
        }
    }
}
