//! Size caps for the exhaustive and brute-force searches.

use crate::error::{Error, Result};

/// Upper bounds on `n` for every search whose cost grows super-exponentially.
///
/// The defaults keep CI runs short; [`Scope::unlimited`] lifts every cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scope {
    pub linear_extensions: usize,
    pub automorphisms: usize,
    pub graph_automorphisms: usize,
    pub chain_decompositions: usize,
    pub noncrossing: usize,
    pub permutations: usize,
    pub exhaustive_posets: usize,
}

impl Default for Scope {
    fn default() -> Self {
        Scope {
            linear_extensions: 10,
            automorphisms: 9,
            graph_automorphisms: 10,
            chain_decompositions: 10,
            noncrossing: 10,
            permutations: 8,
            exhaustive_posets: 5,
        }
    }
}

impl Scope {
    pub fn unlimited() -> Self {
        Scope {
            linear_extensions: usize::MAX,
            automorphisms: usize::MAX,
            graph_automorphisms: usize::MAX,
            chain_decompositions: usize::MAX,
            noncrossing: usize::MAX,
            permutations: usize::MAX,
            exhaustive_posets: usize::MAX,
        }
    }

    pub(crate) fn check(
        what: &'static str,
        n: usize,
        cap: usize,
        hint: &'static str,
    ) -> Result<()> {
        if n > cap {
            Err(Error::ScopeExceeded { what, n, cap, hint })
        } else {
            Ok(())
        }
    }
}
