//! Code parameters: minimum distance, weight distribution, dimension
//! bounds, product-subcode containment, and invertible codewords.

use std::collections::BTreeMap;

use crate::code::GtcCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rng::XorShift64Star;

/// Default cap on the number of messages a distance enumeration may visit.
pub const DEFAULT_DIST_LIMIT: u64 = 1 << 24;

/// Default budget for [`find_invertible_codeword`]: exhaustive up to this
/// many messages, sampled beyond it.
pub const DEFAULT_INVERTIBLE_BUDGET: u64 = 1 << 16;

/// Fixed seed for the sampling fallback of [`find_invertible_codeword`],
/// so results stay reproducible without a seed parameter.
const INVERTIBLE_SEARCH_SEED: u64 = 0x696e76;

/// p^k, or `None` once it exceeds `cap`.
fn message_count(p: u64, k: usize, cap: u128) -> Option<u128> {
    let mut total: u128 = 1;
    for _ in 0..k {
        total = total.checked_mul(u128::from(p))?;
        if total > cap {
            return None;
        }
    }
    Some(total)
}

/// Writes the digits of `index` in base p, most significant first, into
/// `digits`. Iterating index = 0, 1, 2, … visits messages in
/// lexicographic order.
fn message_digits(mut index: u128, p: u64, digits: &mut [u64]) {
    for slot in digits.iter_mut().rev() {
        *slot = (index % u128::from(p)) as u64;
        index /= u128::from(p);
    }
}

/// Minimum nonzero weight over the span of `vectors` (column vectors of a
/// common length), by exhaustive message enumeration.
pub(crate) fn span_min_weight(vectors: &[Matrix], limit: u64) -> Result<usize> {
    if vectors.is_empty() {
        return Err(Error::EmptyCode);
    }
    let p = vectors[0].modulus();
    let k = vectors.len();
    let len = vectors[0].rows();
    // `limit` caps the nonzero messages visited, which number p^k - 1
    let total = message_count(p, k, u128::from(limit) + 1).ok_or_else(|| Error::EnumerationLimit {
        needed: message_count(p, k, u128::MAX).unwrap_or(u128::MAX),
        limit: u128::from(limit),
    })?;
    let columns: Vec<&[u64]> = vectors.iter().map(|v| v.entries()).collect();
    let mut digits = vec![0u64; k];
    let mut acc = vec![0u64; len];
    let mut best = usize::MAX;
    for index in 1..total {
        message_digits(index, p, &mut digits);
        acc.fill(0);
        for (coeff, col) in digits.iter().zip(&columns) {
            if *coeff == 0 {
                continue;
            }
            for (slot, &v) in acc.iter_mut().zip(*col) {
                *slot += coeff * v;
            }
        }
        let weight = acc.iter().filter(|&&v| v % p != 0).count();
        if weight < best {
            best = weight;
            if best == 1 {
                break;
            }
        }
    }
    Ok(best)
}

/// Exact minimum distance by enumerating all p^k − 1 nonzero messages.
///
/// Refuses (rather than estimates) when the enumeration would exceed
/// `limit` messages; [`DEFAULT_DIST_LIMIT`] covers every practical case.
pub fn minimum_distance(code: &GtcCode, limit: u64) -> Result<usize> {
    if code.k() == 0 {
        return Err(Error::EmptyCode);
    }
    let vectors: Vec<Matrix> = code.basis().iter().map(Matrix::vectorize).collect();
    span_min_weight(&vectors, limit)
}

/// Weight → codeword count over all p^k codewords, the zero word included.
pub fn weight_distribution(code: &GtcCode, limit: u64) -> Result<BTreeMap<usize, u64>> {
    let p = code.modulus();
    let k = code.k();
    let mut counts = BTreeMap::new();
    counts.insert(0usize, 1u64);
    if k == 0 {
        return Ok(counts);
    }
    let total = message_count(p, k, u128::from(limit) + 1).ok_or_else(|| Error::EnumerationLimit {
        needed: message_count(p, k, u128::MAX).unwrap_or(u128::MAX),
        limit: u128::from(limit),
    })?;
    let columns: Vec<Matrix> = code.basis().iter().map(Matrix::vectorize).collect();
    let mut digits = vec![0u64; k];
    let mut acc = vec![0u64; code.length()];
    for index in 1..total {
        message_digits(index, p, &mut digits);
        acc.fill(0);
        for (coeff, col) in digits.iter().zip(&columns) {
            if *coeff == 0 {
                continue;
            }
            for (slot, &v) in acc.iter_mut().zip(col.entries()) {
                *slot += coeff * v;
            }
        }
        let weight = acc.iter().filter(|&&v| v % p != 0).count();
        *counts.entry(weight).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Everything the analysis pipeline knows about one code.
///
/// [`bound_report`] fills the ranks and bound fields; [`analyze`] also
/// fills `d`, `product_bound`, and `invertible`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeReport {
    pub p: u64,
    pub n: usize,
    pub k: usize,
    /// Minimum distance; `None` when k = 0 or the enumeration limit was hit.
    pub d: Option<usize>,
    pub r_a: usize,
    pub r_ad: usize,
    /// The rank bound n² − n·r_A + n·r_AD; k never exceeds it.
    pub bound_rank: usize,
    /// Whether the strict bound k ≤ n² − 1 applies (A ≠ O and D ≠ I).
    pub bound_strict_applies: bool,
    /// (kk', dd') of the rank-one product subcode, once computed. dd' is
    /// `None` when either kernel is trivial.
    pub product_bound: Option<(usize, Option<usize>)>,
    /// An invertible codeword, when the search found one.
    pub invertible: Option<Matrix>,
}

/// One-line rendering of a matrix for diagnostics, e.g. `[[1,1],[0,1]]`.
fn brief(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn witness(code: &GtcCode) -> String {
    format!("A={}, D={}", brief(code.a()), brief(code.d()))
}

/// Computes r_A, r_AD, and the dimension bounds, and checks k against
/// every bound that applies. A violation is reported as a diagnostic
/// error carrying the witness pair rather than asserted away.
pub fn bound_report(code: &GtcCode) -> Result<CodeReport> {
    let n = code.n();
    let n2 = code.length();
    let k = code.k();
    let r_a = code.a().rank();
    let ad = code.a().product(code.d())?;
    let r_ad = ad.rank();
    let bound_rank = n2 - n * r_a + n * r_ad;
    if k > bound_rank {
        return Err(Error::Diagnostic(format!(
            "rank bound violated: k={k} > n^2 - n*r_A + n*r_AD = {bound_rank} for {}",
            witness(code)
        )));
    }
    let bound_strict_applies = !code.a().is_zero() && !code.d().is_identity();
    if bound_strict_applies && k > n2 - 1 {
        return Err(Error::Diagnostic(format!(
            "strict bound violated: k={k} > n^2 - 1 = {} for {}",
            n2 - 1,
            witness(code)
        )));
    }
    if ad.is_zero() && k > n2 - n * r_a {
        return Err(Error::Diagnostic(format!(
            "AD = O bound violated: k={k} > n^2 - n*r_A = {} for {}",
            n2 - n * r_a,
            witness(code)
        )));
    }
    Ok(CodeReport {
        p: code.modulus(),
        n,
        k,
        d: None,
        r_a,
        r_ad,
        bound_rank,
        bound_strict_applies,
        product_bound: None,
        invertible: None,
    })
}

/// Scans for an invertible codeword: lexicographically over all messages
/// when p^k fits in `budget`, otherwise over `budget` seeded-random
/// messages. Absence is a value, not an error.
///
/// When a witness is found, dim C(A,D) must equal dim C(A,I); that
/// consequence is checked on the spot and a mismatch is a diagnostic
/// error.
pub fn find_invertible_codeword(code: &GtcCode, budget: u64) -> Result<Option<Matrix>> {
    let (p, n, k) = (code.modulus(), code.n(), code.k());
    if k == 0 {
        return Ok(None);
    }
    let columns: Vec<Matrix> = code.basis().iter().map(Matrix::vectorize).collect();
    let mut digits = vec![0u64; k];
    let mut found = None;
    if let Some(total) = message_count(p, k, u128::from(budget)) {
        for index in 1..total {
            message_digits(index, p, &mut digits);
            let candidate = assemble(code, &columns, &digits)?;
            if candidate.rank() == n {
                found = Some(candidate);
                break;
            }
        }
    } else {
        let mut rng = XorShift64Star::new(INVERTIBLE_SEARCH_SEED);
        for _ in 0..budget {
            for d in digits.iter_mut() {
                *d = rng.below(p);
            }
            if digits.iter().all(|&d| d == 0) {
                continue;
            }
            let candidate = assemble(code, &columns, &digits)?;
            if candidate.rank() == n {
                found = Some(candidate);
                break;
            }
        }
    }
    if let Some(ref witness_word) = found {
        let identity = Matrix::identity(p, n)?;
        let centralizer = GtcCode::construct(code.a().clone(), identity)?;
        if centralizer.k() != k {
            return Err(Error::Diagnostic(format!(
                "invertible codeword {} found but dim C(A,D)={k} differs from dim C(A,I)={} for {}",
                brief(witness_word),
                centralizer.k(),
                witness(code)
            )));
        }
    }
    Ok(found)
}

fn assemble(code: &GtcCode, columns: &[Matrix], digits: &[u64]) -> Result<Matrix> {
    let p = code.modulus();
    let mut acc = vec![0u64; code.length()];
    for (coeff, col) in digits.iter().zip(columns) {
        if *coeff == 0 {
            continue;
        }
        for (slot, &v) in acc.iter_mut().zip(col.entries()) {
            *slot += coeff * v;
        }
    }
    let v = Matrix::new(p, code.length(), 1, acc)?;
    Matrix::unvectorize(&v, code.n(), code.n())
}

/// Minimum distance of the length-n code spanned by kernel vectors.
fn kernel_code_distance(basis: &[Matrix]) -> Result<usize> {
    if basis.len() == basis[0].rows() {
        // full space, so some weight-1 vector is in it
        return Ok(1);
    }
    span_min_weight(basis, u64::MAX)
}

/// Checks the rank-one product subcode: every uvᵗ with u ∈ Ker(A) and
/// v ∈ Ker(DᵗAᵗ) must be a codeword, and the code must have k ≥ kk' and
/// d ≤ dd'. Returns (kk', dd'); dd' is `None` when either kernel is
/// trivial and the containment is vacuous.
pub fn product_code_check(code: &GtcCode) -> Result<(usize, Option<usize>)> {
    let ker_a = code.a().kernel_basis();
    let dtat = code.d().transpose().product(&code.a().transpose())?;
    let ker_dtat = dtat.kernel_basis();
    for u in &ker_a {
        for v in &ker_dtat {
            let rank_one = u.product(&v.transpose())?;
            if !code.is_codeword(&rank_one)? {
                return Err(Error::Diagnostic(format!(
                    "product containment violated: u*v^t = {} is not a codeword for {}",
                    brief(&rank_one),
                    witness(code)
                )));
            }
        }
    }
    let kk = ker_a.len() * ker_dtat.len();
    if kk == 0 {
        return Ok((0, None));
    }
    if code.k() < kk {
        return Err(Error::Diagnostic(format!(
            "product dimension violated: k={} < kk'={kk} for {}",
            code.k(),
            witness(code)
        )));
    }
    let dd = kernel_code_distance(&ker_a)? * kernel_code_distance(&ker_dtat)?;
    match minimum_distance(code, DEFAULT_DIST_LIMIT) {
        Ok(d) if d > dd => Err(Error::Diagnostic(format!(
            "product distance violated: d={d} > dd'={dd} for {}",
            witness(code)
        ))),
        Ok(_) => Ok((kk, Some(dd))),
        // kk' >= 1 forces k >= 1, so only the budget can fail; the
        // distance assertion is then skipped, not silently passed off.
        Err(Error::EnumerationLimit { .. }) => Ok((kk, Some(dd))),
        Err(e) => Err(e),
    }
}

/// Dimension of the ordinary centralizer code C(A, I).
pub fn centralizer_dimension(a: &Matrix) -> Result<usize> {
    let identity = Matrix::identity(a.modulus(), a.rows())?;
    Ok(GtcCode::construct(a.clone(), identity)?.k())
}

/// Full analysis: bounds, exact distance (absent when over `dist_limit`),
/// product subcode, and the invertible-codeword scan.
pub fn analyze(code: &GtcCode, dist_limit: u64, invertible_budget: u64) -> Result<CodeReport> {
    let mut report = bound_report(code)?;
    report.d = match minimum_distance(code, dist_limit) {
        Ok(d) => Some(d),
        Err(Error::EmptyCode) | Err(Error::EnumerationLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    report.product_bound = match product_code_check(code) {
        Ok(pair) => Some(pair),
        Err(Error::EnumerationLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    report.invertible = find_invertible_codeword(code, invertible_budget)?;
    Ok(report)
}
