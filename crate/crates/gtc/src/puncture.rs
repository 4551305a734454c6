//! Puncturing: restrict to codewords that vanish on a set of matrix
//! positions, then delete those coordinates.
//!
//! Deleting coordinates that are identically zero on the subcode keeps
//! its dimension and its weights, so an [n², k', d'] zero-constrained
//! subcode becomes an [n² − i, k', d'] code.

use std::collections::BTreeSet;

use crate::code::GtcCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// A set of matrix positions to constrain and delete. Positions are held
/// 0-based in insertion order; the public constructors take 1-based
/// (row, column) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionMask {
    n: usize,
    positions: Vec<(usize, usize)>,
}

impl PositionMask {
    /// Builds a mask from 1-based (row, column) pairs. Every pair must
    /// lie in 1..=n and appear once; the empty mask is allowed.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut positions = Vec::with_capacity(pairs.len());
        let mut seen = BTreeSet::new();
        for &(r, c) in pairs {
            if r == 0 || c == 0 || r > n || c > n {
                return Err(Error::InvalidMask(format!(
                    "position ({r},{c}) is outside 1..={n}"
                )));
            }
            if !seen.insert((r, c)) {
                return Err(Error::InvalidMask(format!(
                    "position ({r},{c}) appears twice"
                )));
            }
            positions.push((r - 1, c - 1));
        }
        Ok(PositionMask { n, positions })
    }

    /// All n positions of one 1-based column.
    pub fn column(n: usize, col: usize) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = (1..=n).map(|r| (r, col)).collect();
        Self::new(n, &pairs)
    }

    /// All n positions of one 1-based row.
    pub fn row(n: usize, row: usize) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = (1..=n).map(|c| (row, c)).collect();
        Self::new(n, &pairs)
    }

    /// Parses a comma-separated mask description. Tokens are either
    /// bare integers, consumed pairwise as 1-based row, column, or the
    /// shorthands `col=k` and `row=k`. `"1,2,2,3"` masks (1,2) and
    /// (2,3); `"col=4"` masks the fourth column; the two forms mix.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut pending: Option<usize> = None;
        for raw in text.split(',') {
            let token = raw.trim();
            if token.is_empty() {
                continue;
            }
            if let Some(rest) = token.strip_prefix("col=") {
                if let Some(r) = pending.take() {
                    return Err(Error::InvalidMask(format!(
                        "row {r} is missing its column before `{token}`"
                    )));
                }
                let col = parse_index(rest)?;
                pairs.extend((1..=n).map(|r| (r, col)));
            } else if let Some(rest) = token.strip_prefix("row=") {
                if let Some(r) = pending.take() {
                    return Err(Error::InvalidMask(format!(
                        "row {r} is missing its column before `{token}`"
                    )));
                }
                let row = parse_index(rest)?;
                pairs.extend((1..=n).map(|c| (row, c)));
            } else {
                let value = parse_index(token)?;
                match pending.take() {
                    Some(r) => pairs.push((r, value)),
                    None => pending = Some(value),
                }
            }
        }
        if let Some(r) = pending {
            return Err(Error::InvalidMask(format!(
                "row {r} is missing its column"
            )));
        }
        Self::new(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// 0-based (row, column) positions in insertion order.
    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// Masked coordinates of the column-major vectorization, ascending.
    pub fn indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .positions
            .iter()
            .map(|&(r, c)| c * self.n + r)
            .collect();
        out.sort_unstable();
        out
    }
}

fn parse_index(token: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::InvalidMask(format!("`{token}` is not a position index")))
}

/// Basis of the subcode of codewords that are zero on every masked
/// position, as n×n matrices. Computed as the kernel of the parity
/// check stacked with one unit row per masked coordinate.
pub fn zero_constrained_subcode(code: &GtcCode, mask: &PositionMask) -> Result<Vec<Matrix>> {
    let n = code.n();
    if mask.n() != n {
        return Err(Error::InvalidMask(format!(
            "mask is for {0}x{0} matrices, code is for {n}x{n}",
            mask.n()
        )));
    }
    let n2 = code.length();
    let h = code.parity_check();
    let mut entries = h.entries().to_vec();
    for idx in mask.indices() {
        let mut row = vec![0u64; n2];
        row[idx] = 1;
        entries.extend_from_slice(&row);
    }
    let stacked = Matrix::new(code.modulus(), n2 + mask.len(), n2, entries)?;
    stacked
        .kernel_basis()
        .iter()
        .map(|v| Matrix::unvectorize(v, n, n))
        .collect()
}

/// A punctured code: column vectors of length n² − i over the parent's
/// field, one per basis element of the zero-constrained subcode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuncturedCode {
    parent: GtcCode,
    mask: PositionMask,
    basis: Vec<Matrix>,
    length: usize,
}

impl PuncturedCode {
    pub fn parent(&self) -> &GtcCode {
        &self.parent
    }

    pub fn mask(&self) -> &PositionMask {
        &self.mask
    }

    /// Basis of the punctured code as (n² − i)×1 column vectors.
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn modulus(&self) -> u64 {
        self.parent.modulus()
    }
}

/// Punctures `code` on `mask`: takes the zero-constrained subcode and
/// deletes the masked coordinates from every basis vector.
pub fn puncture(code: &GtcCode, mask: &PositionMask) -> Result<PuncturedCode> {
    let subcode = zero_constrained_subcode(code, mask)?;
    let masked: BTreeSet<usize> = mask.indices().into_iter().collect();
    let length = code.length() - masked.len();
    let p = code.modulus();
    let mut basis = Vec::with_capacity(subcode.len());
    for word in &subcode {
        let v = word.vectorize();
        let kept: Vec<u64> = v
            .entries()
            .iter()
            .enumerate()
            .filter(|(i, _)| !masked.contains(i))
            .map(|(_, &e)| e)
            .collect();
        basis.push(Matrix::new(p, length, 1, kept)?);
    }
    // Masked coordinates are zero on the whole subcode, so deleting
    // them is injective; a rank drop here would mean the construction
    // itself is wrong.
    if !basis.is_empty() {
        let k = basis.len();
        let mut entries = vec![0u64; length * k];
        for (j, v) in basis.iter().enumerate() {
            for (i, &e) in v.entries().iter().enumerate() {
                entries[i * k + j] = e;
            }
        }
        let stacked = Matrix::new(p, length, k, entries)?;
        if stacked.rank() != k {
            return Err(Error::Diagnostic(format!(
                "puncturing collapsed the subcode: rank {} < k' = {k}",
                stacked.rank()
            )));
        }
    }
    Ok(PuncturedCode {
        parent: code.clone(),
        mask: mask.clone(),
        basis,
        length,
    })
}

/// Exact minimum distance of the punctured code, by the same exhaustive
/// enumeration as [`crate::analysis::minimum_distance`].
pub fn punctured_minimum_distance(punctured: &PuncturedCode, limit: u64) -> Result<usize> {
    crate::analysis::span_min_weight(punctured.basis(), limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, rows: Vec<Vec<u64>>) -> Matrix {
        Matrix::from_rows(p, rows).unwrap()
    }

    fn ternary_parent() -> GtcCode {
        let a = m(3, vec![vec![1, 1, 1], vec![1, 2, 2], vec![0, 1, 1]]);
        let d = m(3, vec![vec![0, 0, 2], vec![1, 1, 0], vec![1, 2, 2]]);
        GtcCode::construct(a, d).unwrap()
    }

    fn binary_parent() -> GtcCode {
        let a = m(
            2,
            vec![
                vec![0, 0, 1, 1],
                vec![0, 1, 0, 0],
                vec![1, 1, 1, 0],
                vec![1, 0, 0, 1],
            ],
        );
        let d = m(
            2,
            vec![
                vec![1, 0, 1, 1],
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 1],
                vec![0, 1, 0, 1],
            ],
        );
        GtcCode::construct(a, d).unwrap()
    }

    #[test]
    fn mask_construction_and_indices() {
        let mask = PositionMask::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(mask.len(), 2);
        assert_eq!(mask.positions(), &[(0, 1), (1, 2)]);
        assert_eq!(mask.indices(), vec![3, 7]);

        let empty = PositionMask::new(3, &[]).unwrap();
        assert!(empty.is_empty());

        let col = PositionMask::column(4, 4).unwrap();
        assert_eq!(col.indices(), vec![12, 13, 14, 15]);

        let row = PositionMask::row(3, 2).unwrap();
        assert_eq!(row.indices(), vec![1, 4, 7]);
    }

    #[test]
    fn mask_rejects_bad_positions() {
        assert!(matches!(
            PositionMask::new(3, &[(0, 1)]),
            Err(Error::InvalidMask(_))
        ));
        assert!(matches!(
            PositionMask::new(3, &[(4, 1)]),
            Err(Error::InvalidMask(_))
        ));
        assert!(matches!(
            PositionMask::new(3, &[(1, 1), (1, 1)]),
            Err(Error::InvalidMask(_))
        ));
    }

    #[test]
    fn mask_parsing() {
        let mask = PositionMask::parse("1,2,2,3", 3).unwrap();
        assert_eq!(mask.positions(), &[(0, 1), (1, 2)]);

        let mask = PositionMask::parse("col=4", 4).unwrap();
        assert_eq!(mask, PositionMask::column(4, 4).unwrap());

        let mask = PositionMask::parse(" row=2 ", 3).unwrap();
        assert_eq!(mask, PositionMask::row(3, 2).unwrap());

        let mask = PositionMask::parse("1,1,col=2", 2).unwrap();
        assert_eq!(mask.positions(), &[(0, 0), (0, 1), (1, 1)]);

        assert!(PositionMask::parse("", 3).unwrap().is_empty());

        assert!(matches!(
            PositionMask::parse("1,2,3", 3),
            Err(Error::InvalidMask(_))
        ));
        assert!(matches!(
            PositionMask::parse("1,col=2", 3),
            Err(Error::InvalidMask(_))
        ));
        assert!(matches!(
            PositionMask::parse("x=1", 3),
            Err(Error::InvalidMask(_))
        ));
    }

    #[test]
    fn subcode_words_vanish_on_the_mask() {
        let code = ternary_parent();
        let mask = PositionMask::new(3, &[(1, 2), (2, 3)]).unwrap();
        let subcode = zero_constrained_subcode(&code, &mask).unwrap();
        assert_eq!(subcode.len(), 2);
        for word in &subcode {
            assert!(code.is_codeword(word).unwrap());
            for &(r, c) in mask.positions() {
                assert_eq!(word.get(r, c), 0);
            }
        }
    }

    #[test]
    fn ternary_7_2_5() {
        let code = ternary_parent();
        assert_eq!(code.k(), 3);
        let mask = PositionMask::new(3, &[(1, 2), (2, 3)]).unwrap();
        let punctured = puncture(&code, &mask).unwrap();
        assert_eq!(punctured.length(), 7);
        assert_eq!(punctured.k(), 2);
        assert_eq!(punctured_minimum_distance(&punctured, 1 << 24).unwrap(), 5);
    }

    #[test]
    fn binary_12_3_6() {
        let code = binary_parent();
        assert_eq!(code.k(), 4);
        let mask = PositionMask::column(4, 4).unwrap();
        let punctured = puncture(&code, &mask).unwrap();
        assert_eq!(punctured.length(), 12);
        assert_eq!(punctured.k(), 3);
        assert_eq!(punctured_minimum_distance(&punctured, 1 << 24).unwrap(), 6);
    }

    #[test]
    fn empty_mask_is_the_identity_puncture() {
        let code = ternary_parent();
        let mask = PositionMask::new(3, &[]).unwrap();
        let punctured = puncture(&code, &mask).unwrap();
        assert_eq!(punctured.length(), 9);
        assert_eq!(punctured.k(), code.k());
        assert_eq!(
            punctured_minimum_distance(&punctured, 1 << 24).unwrap(),
            crate::analysis::minimum_distance(&code, 1 << 24).unwrap()
        );
    }

    #[test]
    fn full_mask_leaves_nothing() {
        let code = ternary_parent();
        let pairs: Vec<(usize, usize)> = (1..=3)
            .flat_map(|r| (1..=3).map(move |c| (r, c)))
            .collect();
        let mask = PositionMask::new(3, &pairs).unwrap();
        let punctured = puncture(&code, &mask).unwrap();
        assert_eq!(punctured.length(), 0);
        assert_eq!(punctured.k(), 0);
        assert_eq!(
            punctured_minimum_distance(&punctured, 1 << 24),
            Err(Error::EmptyCode)
        );
    }

    #[test]
    fn single_position_on_the_full_code() {
        // A = O gives the full space; masking one position drops the
        // dimension by exactly one and leaves distance 1
        let code = GtcCode::construct(
            Matrix::zero(2, 3, 3).unwrap(),
            Matrix::identity(2, 3).unwrap(),
        )
        .unwrap();
        let mask = PositionMask::new(3, &[(2, 2)]).unwrap();
        let punctured = puncture(&code, &mask).unwrap();
        assert_eq!(punctured.length(), 8);
        assert_eq!(punctured.k(), 8);
        assert_eq!(punctured_minimum_distance(&punctured, 1 << 24).unwrap(), 1);
    }

    #[test]
    fn mask_must_match_the_code_size() {
        let code = ternary_parent();
        let mask = PositionMask::new(4, &[(1, 1)]).unwrap();
        assert!(matches!(
            zero_constrained_subcode(&code, &mask),
            Err(Error::InvalidMask(_))
        ));
    }
}
