//! Corpus sweeps over independent diagrams.
//!
//! Each item is evaluated independently, so the sweeps are data-parallel;
//! with the `parallel` feature (default) they fan out over a rayon pool,
//! otherwise they run sequentially. Both entry points are kept so the
//! bench suite can compare them.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::invariant::{alexander, braid_skein_triple, skein_check, InvariantError};
use crate::scalar::LaurentPoly;
use crate::tangle::BraidWord;

pub fn alexander_all_seq(braids: &[BraidWord]) -> Vec<Result<LaurentPoly, InvariantError>> {
    braids.iter().map(|b| alexander(&b.closure())).collect()
}

/// Alexander polynomials of many closures, parallel when enabled.
pub fn alexander_all(braids: &[BraidWord]) -> Vec<Result<LaurentPoly, InvariantError>> {
    #[cfg(feature = "parallel")]
    {
        braids.par_iter().map(|b| alexander(&b.closure())).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        alexander_all_seq(braids)
    }
}

pub fn skein_all_sites_seq(b: &BraidWord) -> Result<bool, InvariantError> {
    for at in 0..b.word.len() {
        let (p, m, z) = braid_skein_triple(b, at);
        if !skein_check(&p, &m, &z)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the skein relation at every crossing of the word.
pub fn skein_all_sites(b: &BraidWord) -> Result<bool, InvariantError> {
    #[cfg(feature = "parallel")]
    {
        let oks = (0..b.word.len())
            .into_par_iter()
            .map(|at| {
                let (p, m, z) = braid_skein_triple(b, at);
                skein_check(&p, &m, &z)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(oks.into_iter().all(|x| x))
    }
    #[cfg(not(feature = "parallel"))]
    {
        skein_all_sites_seq(b)
    }
}
