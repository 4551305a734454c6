//! Construction of C(A,D) = {B : AB = BAD}, membership, syndromes, and
//! encoding.
//!
//! Under column-major vectorization, AB − BAD = 0 becomes
//! (I⊗A − (Dᵗ⊗I)(Aᵗ⊗I))·vec(B) = 0, so the code is the kernel of that
//! parity-check matrix and everything reduces to linear algebra over F_p.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::matrix::Matrix;

fn check_square_pair(a: &Matrix, d: &Matrix) -> Result<(u64, usize)> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.modulus() != d.modulus() {
        return Err(Error::ModulusMismatch(a.modulus(), d.modulus()));
    }
    if d.rows() != a.rows() || d.cols() != a.cols() {
        return Err(Error::ShapeMismatch {
            op: "twist pair",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: d.rows(),
            rhs_cols: d.cols(),
        });
    }
    Ok((a.modulus(), a.rows()))
}

fn check_member_shape(a: &Matrix, b: &Matrix, op: &'static str) -> Result<()> {
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch(a.modulus(), b.modulus()));
    }
    if b.rows() != a.rows() || b.cols() != a.cols() {
        return Err(Error::ShapeMismatch {
            op,
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: b.rows(),
            rhs_cols: b.cols(),
        });
    }
    Ok(())
}

/// The parity-check matrix H = I⊗A − (Dᵗ⊗I)(Aᵗ⊗I).
///
/// H·vec(B) = vec(AB − BAD) for every n×n B, so Ker H is exactly the code.
pub fn parity_check_matrix(a: &Matrix, d: &Matrix) -> Result<Matrix> {
    let (p, n) = check_square_pair(a, d)?;
    let i = Matrix::identity(p, n)?;
    let left = i.kronecker(a)?;
    let right = d
        .transpose()
        .kronecker(&i)?
        .product(&a.transpose().kronecker(&i)?)?;
    left.sub(&right)
}

/// Membership test: AB = BAD.
pub fn is_codeword(a: &Matrix, d: &Matrix, b: &Matrix) -> Result<bool> {
    check_square_pair(a, d)?;
    check_member_shape(a, b, "is_codeword")?;
    Ok(a.product(b)? == b.product(a)?.product(d)?)
}

/// The syndrome S_A(M) = AM − MAD; zero exactly on codewords and constant
/// on cosets of the code.
pub fn syndrome(a: &Matrix, d: &Matrix, m: &Matrix) -> Result<Matrix> {
    check_square_pair(a, d)?;
    check_member_shape(a, m, "syndrome")?;
    a.product(m)?.sub(&m.product(a)?.product(d)?)
}

/// A generalized twisted centralizer code C(A,D), presented by its
/// parity-check matrix and an ordered basis of codeword matrices.
///
/// The basis is the canonical kernel basis of H, unvectorized; its order
/// is what makes [`GtcCode::encode`] and [`GtcCode::message_of`] stable
/// across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GtcCode {
    a: Matrix,
    d: Matrix,
    h: Matrix,
    basis: Vec<Matrix>,
    k: usize,
}

impl GtcCode {
    /// Builds C(A,D) for square A, D of equal size over the same field.
    pub fn construct(a: Matrix, d: Matrix) -> Result<Self> {
        let (_, n) = check_square_pair(&a, &d)?;
        let h = parity_check_matrix(&a, &d)?;
        let basis = h
            .kernel_basis()
            .iter()
            .map(|v| Matrix::unvectorize(v, n, n))
            .collect::<Result<Vec<_>>>()?;
        let k = basis.len();
        debug_assert!(basis
            .iter()
            .all(|b| is_codeword(&a, &d, b).unwrap_or(false)));
        Ok(Self { a, d, h, basis, k })
    }

    pub fn modulus(&self) -> u64 {
        self.a.modulus()
    }

    /// Matrix order n; the code has length n².
    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn length(&self) -> usize {
        self.n() * self.n()
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn d(&self) -> &Matrix {
        &self.d
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.h
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Dimension k = n² − rank(H).
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_codeword(&self, b: &Matrix) -> Result<bool> {
        is_codeword(&self.a, &self.d, b)
    }

    pub fn syndrome(&self, m: &Matrix) -> Result<Matrix> {
        syndrome(&self.a, &self.d, m)
    }

    /// Encodes a length-k message as Σ mᵢ·Bᵢ over the basis.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Matrix> {
        if message.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: message.len(),
            });
        }
        let mut out = Matrix::zero(self.modulus(), self.n(), self.n())?;
        for (coeff, basis) in message.iter().zip(&self.basis) {
            if coeff.modulus() != self.modulus() {
                return Err(Error::ModulusMismatch(self.modulus(), coeff.modulus()));
            }
            out = out.add(&basis.scale(coeff.value()))?;
        }
        Ok(out)
    }

    /// Recovers the unique message with `encode(message) = c`, by solving
    /// the linear system against the vectorized basis.
    pub fn message_of(&self, c: &Matrix) -> Result<Vec<FieldElement>> {
        check_member_shape(&self.a, c, "message_of")?;
        if self.k == 0 {
            return if c.is_zero() {
                Ok(Vec::new())
            } else {
                Err(Error::NotACodeword)
            };
        }
        let gen = self.generator_columns();
        let sol = gen.solve(&c.vectorize())?.ok_or(Error::NotACodeword)?;
        sol.entries()
            .iter()
            .map(|&v| FieldElement::new(v, self.modulus()))
            .collect()
    }

    /// The n²×k matrix whose columns are the vectorized basis. Requires
    /// k ≥ 1.
    fn generator_columns(&self) -> Matrix {
        let n2 = self.length();
        let mut entries = vec![0u64; n2 * self.k];
        for (j, b) in self.basis.iter().enumerate() {
            let v = b.vectorize();
            for i in 0..n2 {
                entries[i * self.k + j] = v.entries()[i];
            }
        }
        Matrix::new(self.modulus(), n2, self.k, entries).expect("valid generator shape")
    }
}
