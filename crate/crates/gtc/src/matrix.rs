//! Dense matrices over a prime field.
//!
//! Entries are stored row-major and kept reduced mod p. Vectorization is
//! column-major throughout: `vectorize` stacks columns top to bottom,
//! matching how codewords of length n² are read off an n×n matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{check_modulus, inv_mod};

/// A dense rows×cols matrix with entries in F_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

/// Output of [`Matrix::row_reduce`]: the reduced row echelon form, its
/// pivot columns in increasing order, and the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowEchelon {
    pub rref: Matrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    /// Builds a matrix from row-major entries, reducing each mod `modulus`.
    pub fn new(modulus: u64, rows: usize, cols: usize, mut entries: Vec<u64>) -> Result<Self> {
        check_modulus(modulus)?;
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        for e in &mut entries {
            *e %= modulus;
        }
        Ok(Self {
            modulus,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from a vector of equal-length rows.
    pub fn from_rows(modulus: u64, rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::ZeroDimension {
                rows: rows.len(),
                cols: rows.first().map_or(0, Vec::len),
            });
        }
        let cols = rows[0].len();
        for row in &rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
        }
        let r = rows.len();
        Self::new(modulus, r, cols, rows.concat())
    }

    pub fn zero(modulus: u64, rows: usize, cols: usize) -> Result<Self> {
        Self::new(modulus, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(modulus: u64, n: usize) -> Result<Self> {
        let mut m = Self::zero(modulus, n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = 1 % modulus;
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Entry at 0-based (r, c). Panics when out of range.
    pub fn get(&self, r: usize, c: usize) -> u64 {
        assert!(r < self.rows && c < self.cols, "index out of range");
        self.entries[r * self.cols + c]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// True when the matrix is the identity (square with unit diagonal).
    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.modulus, self.rows).unwrap()
    }

    /// Hamming weight: the number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    fn check_same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    fn shape_error(&self, other: &Self, op: &'static str) -> Error {
        Error::ShapeMismatch {
            op,
            lhs_rows: self.rows,
            lhs_cols: self.cols,
            rhs_rows: other.rows,
            rhs_cols: other.cols,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.shape_error(other, "add"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a + b) % self.modulus)
            .collect();
        Ok(Self {
            entries,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.shape_error(other, "sub"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (self.modulus + a - b) % self.modulus)
            .collect();
        Ok(Self {
            entries,
            ..self.clone()
        })
    }

    pub fn neg(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|&a| (self.modulus - a) % self.modulus)
            .collect();
        Self {
            entries,
            ..self.clone()
        }
    }

    /// Scalar multiple; `s` is reduced mod p first.
    pub fn scale(&self, s: u64) -> Self {
        let s = s % self.modulus;
        let entries = self.entries.iter().map(|&a| (a * s) % self.modulus).collect();
        Self {
            entries,
            ..self.clone()
        }
    }

    /// Schoolbook product. Entries stay below 256, so a u64 accumulator
    /// cannot overflow at any supported size.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        if self.cols != other.rows {
            return Err(self.shape_error(other, "product"));
        }
        let mut entries = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.entries[i * self.cols + t];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    entries[i * other.cols + j] += a * other.entries[t * other.cols + j];
                }
            }
        }
        for e in &mut entries {
            *e %= self.modulus;
        }
        Ok(Self {
            modulus: self.modulus,
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn transpose(&self) -> Self {
        let mut entries = vec![0u64; self.entries.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries[c * self.rows + r] = self.entries[r * self.cols + c];
            }
        }
        Self {
            modulus: self.modulus,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Kronecker product: block matrix whose (i, j) block is self[i][j]·other.
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = vec![0u64; rows * cols];
        for i in 0..rows {
            for j in 0..cols {
                let a = self.entries[(i / other.rows) * self.cols + j / other.cols];
                let b = other.entries[(i % other.rows) * other.cols + j % other.cols];
                entries[i * cols + j] = (a * b) % self.modulus;
            }
        }
        Ok(Self {
            modulus: self.modulus,
            rows,
            cols,
            entries,
        })
    }

    /// Column-major vectorization: stacks the columns top to bottom into a
    /// (rows·cols)×1 vector.
    pub fn vectorize(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.entries[r * self.cols + c]);
            }
        }
        Self {
            modulus: self.modulus,
            rows: self.entries.len(),
            cols: 1,
            entries,
        }
    }

    /// Inverse of [`Matrix::vectorize`]: reshapes a (rows·cols)×1 column
    /// vector back into a rows×cols matrix.
    pub fn unvectorize(v: &Self, rows: usize, cols: usize) -> Result<Self> {
        if v.cols != 1 || v.rows != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: v.rows * v.cols,
            });
        }
        let mut entries = vec![0u64; rows * cols];
        for c in 0..cols {
            for r in 0..rows {
                entries[r * cols + c] = v.entries[c * rows + r];
            }
        }
        Self::new(v.modulus, rows, cols, entries)
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    ///
    /// The pivot in each column is the first nonzero entry scanning the
    /// remaining rows top-down; arithmetic is exact, so there is no
    /// pivot-magnitude concern.
    pub fn row_reduce(&self) -> RowEchelon {
        let p = self.modulus;
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.swap(r * cols + j, pr * cols + j);
                }
            }
            let inv = inv_mod(m[r * cols + c], p);
            for j in 0..cols {
                m[r * cols + j] = (m[r * cols + j] * inv) % p;
            }
            for i in 0..rows {
                if i == r || m[i * cols + c] == 0 {
                    continue;
                }
                let f = m[i * cols + c];
                for j in 0..cols {
                    let sub = (f * m[r * cols + j]) % p;
                    m[i * cols + j] = (p + m[i * cols + j] - sub) % p;
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        let rank = pivot_cols.len();
        RowEchelon {
            rref: Self {
                modulus: p,
                rows,
                cols,
                entries: m,
            },
            pivot_cols,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Basis of the right null space {v : Mv = 0}, as column vectors.
    ///
    /// The basis is canonical: one vector per free column in ascending
    /// order, with a 1 at the free column, the negated RREF column at the
    /// pivot positions, and zeros elsewhere. Construction, encoding, and
    /// search all depend on this order being stable.
    pub fn kernel_basis(&self) -> Vec<Matrix> {
        let RowEchelon {
            rref, pivot_cols, ..
        } = self.row_reduce();
        let p = self.modulus;
        let mut basis = Vec::new();
        let mut next_pivot = 0;
        for free in 0..self.cols {
            if next_pivot < pivot_cols.len() && pivot_cols[next_pivot] == free {
                next_pivot += 1;
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (j, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - rref.entries[j * self.cols + free]) % p;
            }
            basis.push(Self {
                modulus: p,
                rows: self.cols,
                cols: 1,
                entries: v,
            });
        }
        basis
    }

    /// Inverse of a square matrix: `Ok(None)` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zero(self.modulus, n, 2 * n)?;
        for r in 0..n {
            for c in 0..n {
                aug.entries[r * 2 * n + c] = self.entries[r * n + c];
            }
            aug.entries[r * 2 * n + n + r] = 1 % self.modulus;
        }
        let reduced = aug.row_reduce();
        if reduced.rank < n || reduced.pivot_cols[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut entries = vec![0u64; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[r * n + c] = reduced.rref.entries[r * 2 * n + n + c];
            }
        }
        Ok(Some(Self {
            modulus: self.modulus,
            rows: n,
            cols: n,
            entries,
        }))
    }

    /// One particular solution x of self·x = rhs, or `Ok(None)` when the
    /// system is inconsistent. Free variables are set to zero, so the
    /// solution is unique exactly when self has full column rank.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>> {
        self.check_same_modulus(rhs)?;
        if rhs.cols != 1 || rhs.rows != self.rows {
            return Err(self.shape_error(rhs, "solve"));
        }
        let (rows, cols) = (self.rows, self.cols);
        let mut aug = Self::zero(self.modulus, rows, cols + 1)?;
        for r in 0..rows {
            for c in 0..cols {
                aug.entries[r * (cols + 1) + c] = self.entries[r * cols + c];
            }
            aug.entries[r * (cols + 1) + cols] = rhs.entries[r];
        }
        let reduced = aug.row_reduce();
        if reduced.pivot_cols.last() == Some(&cols) {
            return Ok(None);
        }
        let mut x = vec![0u64; cols];
        for (j, &pc) in reduced.pivot_cols.iter().enumerate() {
            x[pc] = reduced.rref.entries[j * (cols + 1) + cols];
        }
        Ok(Some(Self {
            modulus: self.modulus,
            rows: cols,
            cols: 1,
            entries: x,
        }))
    }

    /// Parses the matrix text format.
    ///
    /// Line 1 is a header `p r c`; the next r lines carry c entries each,
    /// base 10, space separated, in [0, p). Blank lines and lines whose
    /// first non-blank character is `#` are ignored. All failures carry
    /// 1-based line and column positions.
    pub fn parse_text(text: &str) -> Result<Self> {
        fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
            Error::Parse {
                line,
                column,
                message: message.into(),
            }
        }
        fn tokens(line: &str) -> Vec<(usize, &str)> {
            let mut out = Vec::new();
            let mut start = None;
            for (i, ch) in line.char_indices() {
                if ch.is_whitespace() {
                    if let Some(s) = start.take() {
                        out.push((s + 1, &line[s..i]));
                    }
                } else if start.is_none() {
                    start = Some(i);
                }
            }
            if let Some(s) = start {
                out.push((s + 1, &line[s..]));
            }
            out
        }

        let mut data_lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| {
                let t = l.trim_start();
                !t.is_empty() && !t.starts_with('#')
            });

        let (header_no, header) = data_lines
            .next()
            .ok_or_else(|| parse_err(1, 1, "missing header line `p r c`"))?;
        let header_tokens = tokens(header);
        if header_tokens.len() != 3 {
            let col = header_tokens
                .get(3)
                .map_or_else(|| header.len() + 1, |&(c, _)| c);
            return Err(parse_err(
                header_no,
                col,
                format!("header must be `p r c`, found {} fields", header_tokens.len()),
            ));
        }
        let mut header_vals = [0u64; 3];
        for (slot, &(col, tok)) in header_vals.iter_mut().zip(&header_tokens) {
            *slot = tok
                .parse()
                .map_err(|_| parse_err(header_no, col, format!("invalid integer `{tok}`")))?;
        }
        let [p, r, c] = header_vals;
        if !crate::field::is_prime(p) {
            return Err(parse_err(
                header_no,
                header_tokens[0].0,
                format!("modulus {p} is not prime"),
            ));
        }
        if p > crate::field::MAX_MODULUS {
            return Err(parse_err(
                header_no,
                header_tokens[0].0,
                format!("modulus {p} exceeds the supported maximum of 255"),
            ));
        }
        let (rows, cols) = (r as usize, c as usize);
        if rows == 0 || cols == 0 {
            return Err(parse_err(header_no, header_tokens[1].0, "dimensions must be positive"));
        }

        let mut entries = Vec::with_capacity(rows * cols);
        let mut last_line = header_no;
        for row in 0..rows {
            let Some((line_no, line)) = data_lines.next() else {
                return Err(parse_err(
                    last_line + 1,
                    1,
                    format!("expected {rows} rows, found {row}"),
                ));
            };
            last_line = line_no;
            let toks = tokens(line);
            if toks.len() != cols {
                let col = toks.get(cols).map_or_else(|| line.len() + 1, |&(c, _)| c);
                return Err(parse_err(
                    line_no,
                    col,
                    format!("expected {cols} entries, found {}", toks.len()),
                ));
            }
            for &(col, tok) in &toks {
                let v: u64 = tok
                    .parse()
                    .map_err(|_| parse_err(line_no, col, format!("invalid integer `{tok}`")))?;
                if v >= p {
                    return Err(parse_err(
                        line_no,
                        col,
                        format!("entry {v} out of range for modulus {p}"),
                    ));
                }
                entries.push(v);
            }
        }
        if let Some((line_no, _)) = data_lines.next() {
            return Err(parse_err(line_no, 1, "unexpected content after the last row"));
        }
        Self::new(p, rows, cols, entries)
    }

    /// Renders the matrix in the text format parsed by
    /// [`Matrix::parse_text`].
    pub fn to_text(&self) -> String {
        format!("{} {} {}\n{}", self.modulus, self.rows, self.cols, self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entries[r * self.cols + c])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
