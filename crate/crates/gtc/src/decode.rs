//! Syndrome-table decoding of single symbol errors.
//!
//! Syndromes are constant on cosets, so a received word R = B + E with a
//! weight-1 E shares its syndrome with E alone. When the code has minimum
//! distance at least 3, distinct weight-1 errors land in distinct nonzero
//! cosets and a lookup table over all (p−1)·n² of them decodes exactly.

use std::collections::HashMap;

use crate::code::GtcCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Maps serialized syndromes to the unique weight-1 error producing them.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    entries: HashMap<Vec<u8>, Matrix>,
}

impl SyndromeTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup(&self, syndrome: &Matrix) -> Option<&Matrix> {
        self.entries.get(&serialize_syndrome(syndrome))
    }
}

/// Canonical table key: the syndrome's entries row-major, one byte each.
/// Moduli are capped at 255, so every entry fits.
pub fn serialize_syndrome(syndrome: &Matrix) -> Vec<u8> {
    syndrome.entries().iter().map(|&e| e as u8).collect()
}

fn describe_weight_one(e: &Matrix) -> String {
    let n = e.cols();
    let pos = e
        .entries()
        .iter()
        .position(|&v| v != 0)
        .expect("weight-1 matrix has a nonzero entry");
    format!(
        "value {} at ({}, {})",
        e.entries()[pos],
        pos / n + 1,
        pos % n + 1
    )
}

/// Builds the weight-1 error table for `code`.
///
/// Fails with [`Error::AmbiguousSyndrome`] when two weight-1 errors share
/// a syndrome or some weight-1 error is itself a codeword; both mean the
/// minimum distance is below 3, so single-error correction is impossible
/// and the failure surfaces here rather than at decode time.
pub fn build_syndrome_table(code: &GtcCode) -> Result<SyndromeTable> {
    let (p, n) = (code.modulus(), code.n());
    let mut entries: HashMap<Vec<u8>, Matrix> = HashMap::new();
    for r in 0..n {
        for c in 0..n {
            for v in 1..p {
                let mut raw = vec![0u64; n * n];
                raw[r * n + c] = v;
                let e = Matrix::new(p, n, n, raw)?;
                let s = code.syndrome(&e)?;
                if s.is_zero() {
                    return Err(Error::AmbiguousSyndrome(format!(
                        "weight-1 error {} is a codeword",
                        describe_weight_one(&e)
                    )));
                }
                let key = serialize_syndrome(&s);
                if let Some(prev) = entries.get(&key) {
                    return Err(Error::AmbiguousSyndrome(format!(
                        "weight-1 errors {} and {} share a syndrome",
                        describe_weight_one(prev),
                        describe_weight_one(&e)
                    )));
                }
                entries.insert(key, e);
            }
        }
    }
    Ok(SyndromeTable { entries })
}

/// Corrects at most one symbol error in `received`.
///
/// Returns the decoded codeword and the error that was removed (zero when
/// the received word is already a codeword). Whenever the sent word was a
/// codeword plus at most one symbol error and the table built (d ≥ 3),
/// the original is recovered exactly. A nonzero syndrome outside the
/// table means more than one error and is reported, never guessed.
pub fn correct_single_error(
    code: &GtcCode,
    table: &SyndromeTable,
    received: &Matrix,
) -> Result<(Matrix, Matrix)> {
    let s = code.syndrome(received)?;
    if s.is_zero() {
        let zero = Matrix::zero(code.modulus(), code.n(), code.n())?;
        return Ok((received.clone(), zero));
    }
    match table.lookup(&s) {
        Some(e) => Ok((received.sub(e)?, e.clone())),
        None => Err(Error::Uncorrectable { syndrome: s }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElement;

    fn m(p: u64, rows: Vec<Vec<u64>>) -> Matrix {
        Matrix::from_rows(p, rows).unwrap()
    }

    fn code_953() -> GtcCode {
        let a = m(2, vec![vec![1; 3]; 3]);
        let d = m(2, vec![vec![1, 1, 1], vec![1, 0, 1], vec![0, 1, 1]]);
        GtcCode::construct(a, d).unwrap()
    }

    #[test]
    fn table_for_a_distance_3_code() {
        let table = build_syndrome_table(&code_953()).unwrap();
        assert_eq!(table.len(), 9);
    }

    #[test]
    fn table_for_the_9_2_6_code() {
        let a = m(2, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 1, 0]]);
        let d = m(2, vec![vec![1, 1, 0], vec![1, 1, 1], vec![0, 1, 1]]);
        let code = GtcCode::construct(a, d).unwrap();
        assert_eq!(build_syndrome_table(&code).unwrap().len(), 9);
    }

    #[test]
    fn distance_2_code_is_rejected() {
        let a = m(2, vec![vec![1; 3]; 3]);
        let d = m(2, vec![vec![1, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]);
        let code = GtcCode::construct(a, d).unwrap();
        assert!(matches!(
            build_syndrome_table(&code),
            Err(Error::AmbiguousSyndrome(_))
        ));
    }

    #[test]
    fn codeword_passes_through() {
        let code = code_953();
        let table = build_syndrome_table(&code).unwrap();
        let msg: Vec<FieldElement> = [1, 0, 1, 1, 0]
            .iter()
            .map(|&v| FieldElement::new(v, 2).unwrap())
            .collect();
        let word = code.encode(&msg).unwrap();
        let (decoded, err) = correct_single_error(&code, &table, &word).unwrap();
        assert_eq!(decoded, word);
        assert!(err.is_zero());
    }

    #[test]
    fn every_single_error_is_corrected() {
        let code = code_953();
        let table = build_syndrome_table(&code).unwrap();
        let msg: Vec<FieldElement> = [0, 1, 1, 0, 1]
            .iter()
            .map(|&v| FieldElement::new(v, 2).unwrap())
            .collect();
        let word = code.encode(&msg).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                let mut raw = vec![0u64; 9];
                raw[r * 3 + c] = 1;
                let e = Matrix::new(2, 3, 3, raw).unwrap();
                let received = word.add(&e).unwrap();
                let (decoded, found) = correct_single_error(&code, &table, &received).unwrap();
                assert_eq!(decoded, word);
                assert_eq!(found, e);
            }
        }
    }

    #[test]
    fn two_errors_are_not_guessed_as_correct() {
        // d = 3, so some double corruptions decode to a different codeword
        // and the rest are flagged; none may silently return the original
        // claim of success with a wrong error estimate.
        let code = code_953();
        let table = build_syndrome_table(&code).unwrap();
        let word = code.basis()[2].clone();
        let mut outcomes = (0usize, 0usize); // (wrong codeword, uncorrectable)
        for i in 0..9 {
            for j in (i + 1)..9 {
                let mut raw = vec![0u64; 9];
                raw[i] = 1;
                raw[j] = 1;
                let e = Matrix::new(2, 3, 3, raw).unwrap();
                let received = word.add(&e).unwrap();
                match correct_single_error(&code, &table, &received) {
                    Ok((decoded, _)) => {
                        assert_ne!(decoded, word);
                        assert!(code.is_codeword(&decoded).unwrap());
                        outcomes.0 += 1;
                    }
                    Err(Error::Uncorrectable { syndrome }) => {
                        assert!(!syndrome.is_zero());
                        outcomes.1 += 1;
                    }
                    Err(other) => panic!("unexpected error {other:?}"),
                }
            }
        }
        assert_eq!(outcomes.0 + outcomes.1, 36);
    }
}
