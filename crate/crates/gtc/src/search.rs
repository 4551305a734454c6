//! Randomized search over twist matrices D for a fixed A.

use crate::analysis::minimum_distance;
use crate::code::GtcCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rng::XorShift64Star;

/// What the search ranks by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Objective {
    /// Largest minimum distance first; ties broken by dimension.
    #[default]
    MaxDistance,
    /// Largest dimension first; ties broken by distance.
    MaxDimension,
}

/// One sampled twist and the parameters of its code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchEntry {
    pub twist: Matrix,
    pub k: usize,
    /// `None` when k = 0 or the distance enumeration hit `dist_limit`.
    pub d: Option<usize>,
}

/// The full ranked outcome of one search run. Reproducible: the same
/// seed and trial count always yield the same entries in the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub seed: u64,
    pub trials: u64,
    pub entries: Vec<SearchEntry>,
}

/// Samples `trials` twist matrices D uniformly and ranks the codes
/// C(A, D) by `objective`. Repeated samples are kept as-is; the entry
/// count always equals `trials`.
pub fn search_twists(
    a: &Matrix,
    trials: u64,
    seed: u64,
    dist_limit: u64,
    objective: Objective,
) -> Result<SearchResult> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if trials == 0 {
        return Err(Error::Precondition("search needs at least one trial".into()));
    }
    let (p, n) = (a.modulus(), a.rows());
    let mut rng = XorShift64Star::new(seed);
    let mut entries = Vec::with_capacity(trials as usize);
    for _ in 0..trials {
        let twist = rng.matrix(p, n, n)?;
        let code = GtcCode::construct(a.clone(), twist.clone())?;
        let d = match minimum_distance(&code, dist_limit) {
            Ok(d) => Some(d),
            Err(Error::EmptyCode) | Err(Error::EnumerationLimit { .. }) => None,
            Err(e) => return Err(e),
        };
        entries.push(SearchEntry {
            twist,
            k: code.k(),
            d,
        });
    }
    // Option<usize> orders None below Some, so descending order on d
    // puts unknown distances last, as the ranking wants.
    entries.sort_by(|x, y| {
        let by_objective = match objective {
            Objective::MaxDistance => y.d.cmp(&x.d).then(y.k.cmp(&x.k)),
            Objective::MaxDimension => y.k.cmp(&x.k).then(y.d.cmp(&x.d)),
        };
        by_objective.then_with(|| x.twist.entries().cmp(y.twist.entries()))
    });
    Ok(SearchResult {
        seed,
        trials,
        entries,
    })
}
