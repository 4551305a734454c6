//! Graph automorphisms of A and AD, and their action on the code.
//!
//! A permutation matrix P is an automorphism of the graph with adjacency
//! matrix M when MP⁻¹ = P⁻¹M. For P ∈ Aut(Γ_A) and Q ∈ Aut(Γ_AD) the map
//! B ↦ P⁻¹BQ sends codewords to codewords, and on vectorized words it is
//! a coordinate permutation.

use itertools::Itertools;

use crate::code::GtcCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Largest n for which brute-force S_n enumeration is allowed (8! = 40320).
pub const AUTOMORPHISM_N_LIMIT: usize = 8;

/// A permutation of {0..n−1} in image form: j ↦ image[j].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Validates that `image` is a bijection on {0..n−1}.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut hit = vec![false; n];
        for &v in &image {
            if v >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image value {v} is outside 0..{n}"
                )));
            }
            if hit[v] {
                return Err(Error::InvalidPermutation(format!(
                    "image value {v} appears twice"
                )));
            }
            hit[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, j: usize) -> usize {
        assert!(j < self.image.len(), "index {j} out of range");
        self.image[j]
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (j, &v) in self.image.iter().enumerate() {
            image[v] = j;
        }
        Permutation { image }
    }

    /// (self ∘ other)(j) = self(other(j)); matrices multiply the same way.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::InvalidPermutation(format!(
                "cannot compose permutations of sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        })
    }

    /// Matrix form over F_p, with P[π(j)][j] = 1. P⁻¹ = Pᵗ.
    pub fn matrix(&self, modulus: u64) -> Result<Matrix> {
        let n = self.n();
        let mut entries = vec![0u64; n * n];
        for (j, &v) in self.image.iter().enumerate() {
            entries[v * n + j] = 1;
        }
        Matrix::new(modulus, n, n, entries)
    }

    /// One-line notation, e.g. `[2,0,1]`.
    pub fn one_line(&self) -> String {
        format!(
            "[{}]",
            self.image.iter().map(usize::to_string).join(",")
        )
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.one_line())
    }
}

/// True iff M·P⁻¹ = P⁻¹·M, i.e. P preserves the graph with adjacency
/// matrix M. Only the algebraic identity is checked; M need not be a
/// 0/1 symmetric matrix.
pub fn is_graph_automorphism(perm: &Permutation, m: &Matrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if perm.n() != m.rows() {
        return Err(Error::LengthMismatch {
            expected: m.rows(),
            got: perm.n(),
        });
    }
    let p_inv = perm.matrix(m.modulus())?.transpose();
    Ok(m.product(&p_inv)? == p_inv.product(m)?)
}

/// All automorphisms of Γ_M by brute force over S_n, in lexicographic
/// order of the image array. Refuses n > n_limit.
pub fn automorphism_group(m: &Matrix, n_limit: usize) -> Result<Vec<Permutation>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n > n_limit {
        return Err(Error::PermutationCap { n, cap: n_limit });
    }
    let mut group = Vec::new();
    for image in (0..n).permutations(n) {
        let perm = Permutation { image };
        if is_graph_automorphism(&perm, m)? {
            group.push(perm);
        }
    }
    Ok(group)
}

/// The action (P, Q) · B = P⁻¹·B·Q.
pub fn group_act(p: &Permutation, q: &Permutation, b: &Matrix) -> Result<Matrix> {
    if p.n() != b.rows() {
        return Err(Error::LengthMismatch {
            expected: b.rows(),
            got: p.n(),
        });
    }
    if q.n() != b.cols() {
        return Err(Error::LengthMismatch {
            expected: b.cols(),
            got: q.n(),
        });
    }
    let p_inv = p.matrix(b.modulus())?.transpose();
    let q_mat = q.matrix(b.modulus())?;
    p_inv.product(b)?.product(&q_mat)
}

/// Applies σ to a column vector: w[σ(i)] = v[i].
pub fn permute_vector(sigma: &Permutation, v: &Matrix) -> Result<Matrix> {
    if v.cols() != 1 {
        return Err(Error::Precondition(format!(
            "permute_vector needs a column vector, got {}x{}",
            v.rows(),
            v.cols()
        )));
    }
    if v.rows() != sigma.n() {
        return Err(Error::LengthMismatch {
            expected: sigma.n(),
            got: v.rows(),
        });
    }
    let mut entries = vec![0u64; sigma.n()];
    for (i, &e) in v.entries().iter().enumerate() {
        entries[sigma.apply(i)] = e;
    }
    Matrix::new(v.modulus(), sigma.n(), 1, entries)
}

/// Checks P ∈ Aut(Γ_A) and Q ∈ Aut(Γ_AD), builds the permutation σ the
/// pair induces on vectorized coordinates, and verifies on every basis
/// element that σ applied to vec(B) equals vec(P⁻¹BQ) and that the image
/// is again a codeword. Returns σ.
///
/// Since (P⁻¹BQ)(r,c) = B(π_P(r), π_Q(c)), the column-major coordinate
/// c·n + r is sent to π_Q⁻¹(c)·n + π_P⁻¹(r).
pub fn verify_coordinate_action(
    code: &GtcCode,
    p: &Permutation,
    q: &Permutation,
) -> Result<Permutation> {
    if !is_graph_automorphism(p, code.a())? {
        return Err(Error::NotAutomorphism);
    }
    let ad = code.a().product(code.d())?;
    if !is_graph_automorphism(q, &ad)? {
        return Err(Error::NotAutomorphism);
    }
    let n = code.n();
    let (p_inv, q_inv) = (p.inverse(), q.inverse());
    let mut image = vec![0usize; n * n];
    for c in 0..n {
        for r in 0..n {
            image[c * n + r] = q_inv.apply(c) * n + p_inv.apply(r);
        }
    }
    let sigma = Permutation { image };
    for b in code.basis() {
        let acted = group_act(p, q, b)?;
        let permuted = permute_vector(&sigma, &b.vectorize())?;
        if permuted != acted.vectorize() {
            return Err(Error::Diagnostic(format!(
                "coordinate permutation disagrees with the action for P={p}, Q={q}"
            )));
        }
        if !code.is_codeword(&acted)? {
            return Err(Error::Diagnostic(format!(
                "action image left the code for P={p}, Q={q}"
            )));
        }
    }
    Ok(sigma)
}

/// Whether M looks like a plain graph adjacency matrix: square,
/// symmetric, entries in {0, 1}. Purely advisory.
pub fn is_adjacency_like(m: &Matrix) -> bool {
    if !m.is_square() {
        return false;
    }
    let n = m.rows();
    (0..n).all(|r| (0..n).all(|c| m.get(r, c) <= 1 && m.get(r, c) == m.get(c, r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::XorShift64Star;

    fn path3() -> Matrix {
        Matrix::from_rows(2, vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap()
    }

    fn ones3() -> Matrix {
        Matrix::from_rows(2, vec![vec![1; 3]; 3]).unwrap()
    }

    fn code_953() -> GtcCode {
        let d = Matrix::from_rows(2, vec![vec![1, 1, 1], vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        GtcCode::construct(ones3(), d).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(p.apply(0), 2);
        assert_eq!(p.one_line(), "[2,0,1]");
        assert_eq!(p.inverse().image(), &[1, 2, 0]);
        assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(3));

        assert!(matches!(
            Permutation::new(vec![0, 0, 1]),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            Permutation::new(vec![3, 0, 1]),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn permutation_matrix_form() {
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        let pm = p.matrix(5).unwrap();
        // column j carries the 1 in row pi(j)
        for j in 0..3 {
            for i in 0..3 {
                assert_eq!(pm.get(i, j), u64::from(i == p.apply(j)));
            }
        }
        // P * P^t = I and composition multiplies matrices
        let id = Matrix::identity(5, 3).unwrap();
        assert_eq!(pm.product(&pm.transpose()).unwrap(), id);
        let q = Permutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!(
            p.compose(&q).unwrap().matrix(5).unwrap(),
            pm.product(&q.matrix(5).unwrap()).unwrap()
        );
    }

    #[test]
    fn automorphism_detection() {
        let id = Permutation::identity(3);
        assert!(is_graph_automorphism(&id, &path3()).unwrap());
        let swap = Permutation::new(vec![1, 0, 2]).unwrap();
        assert!(is_graph_automorphism(&swap, &ones3()).unwrap());
        let cycle = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(!is_graph_automorphism(&cycle, &path3()).unwrap());
        let reversal = Permutation::new(vec![2, 1, 0]).unwrap();
        assert!(is_graph_automorphism(&reversal, &path3()).unwrap());
    }

    #[test]
    fn symmetric_equivalent_formulation() {
        // for symmetric M: automorphism iff M = P^t M P
        let m = path3();
        for image in (0..3).permutations(3) {
            let perm = Permutation::new(image).unwrap();
            let pm = perm.matrix(2).unwrap();
            let conjugated = pm
                .transpose()
                .product(&m)
                .unwrap()
                .product(&pm)
                .unwrap();
            assert_eq!(
                is_graph_automorphism(&perm, &m).unwrap(),
                conjugated == m
            );
        }
    }

    #[test]
    fn groups_of_small_graphs() {
        let path = automorphism_group(&path3(), AUTOMORPHISM_N_LIMIT).unwrap();
        assert_eq!(path.len(), 2);
        assert_eq!(path[0], Permutation::identity(3));
        assert_eq!(path[1].image(), &[2, 1, 0]);

        assert_eq!(
            automorphism_group(&ones3(), AUTOMORPHISM_N_LIMIT)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            automorphism_group(&Matrix::identity(2, 3).unwrap(), AUTOMORPHISM_N_LIMIT)
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn group_axioms_hold() {
        let ad = ones3().product(code_953().d()).unwrap();
        let group = automorphism_group(&ad, AUTOMORPHISM_N_LIMIT).unwrap();
        assert_eq!(group.len(), 2);
        assert!(group.contains(&Permutation::identity(3)));
        for g in &group {
            assert!(group.contains(&g.inverse()));
            for h in &group {
                assert!(group.contains(&g.compose(h).unwrap()));
            }
        }
    }

    #[test]
    fn enumeration_is_capped() {
        let m = Matrix::zero(2, 9, 9).unwrap();
        assert_eq!(
            automorphism_group(&m, AUTOMORPHISM_N_LIMIT),
            Err(Error::PermutationCap { n: 9, cap: 8 })
        );
    }

    #[test]
    fn action_identity_and_composition() {
        let mut rng = XorShift64Star::new(404);
        let b = rng.matrix(3, 3, 3).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(group_act(&id, &id, &b).unwrap(), b);

        let p1 = Permutation::new(vec![1, 2, 0]).unwrap();
        let q1 = Permutation::new(vec![2, 1, 0]).unwrap();
        let p2 = Permutation::new(vec![0, 2, 1]).unwrap();
        let q2 = Permutation::new(vec![1, 0, 2]).unwrap();
        // acting by (p1,q1) then (p2,q2) is acting by the products
        let twice = group_act(&p2, &q2, &group_act(&p1, &q1, &b).unwrap()).unwrap();
        let once = group_act(
            &p1.compose(&p2).unwrap(),
            &q1.compose(&q2).unwrap(),
            &b,
        )
        .unwrap();
        assert_eq!(twice, once);
    }

    #[test]
    fn action_entries_pull_back_through_both_permutations() {
        let mut rng = XorShift64Star::new(77);
        let b = rng.matrix(5, 4, 4).unwrap();
        let p = Permutation::new(vec![2, 3, 1, 0]).unwrap();
        let q = Permutation::new(vec![1, 0, 3, 2]).unwrap();
        let acted = group_act(&p, &q, &b).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(acted.get(r, c), b.get(p.apply(r), q.apply(c)));
            }
        }
    }

    #[test]
    fn coordinate_action_on_the_nine_five_code() {
        let code = code_953();
        let ad = code.a().product(code.d()).unwrap();
        let aut_a = automorphism_group(code.a(), AUTOMORPHISM_N_LIMIT).unwrap();
        let aut_ad = automorphism_group(&ad, AUTOMORPHISM_N_LIMIT).unwrap();
        assert_eq!((aut_a.len(), aut_ad.len()), (6, 2));
        for p in &aut_a {
            for q in &aut_ad {
                let sigma = verify_coordinate_action(&code, p, q).unwrap();
                assert_eq!(sigma.n(), 9);
            }
        }
        let id = Permutation::identity(3);
        assert_eq!(
            verify_coordinate_action(&code, &id, &id).unwrap(),
            Permutation::identity(9)
        );
    }

    #[test]
    fn coordinate_action_rejects_non_automorphisms() {
        let code = code_953();
        let cycle = Permutation::new(vec![1, 2, 0]).unwrap();
        // the cycle moves index 2, so it fixes Gamma_A but not Gamma_AD
        assert!(is_graph_automorphism(&cycle, code.a()).unwrap());
        assert_eq!(
            verify_coordinate_action(&code, &Permutation::identity(3), &cycle),
            Err(Error::NotAutomorphism)
        );
    }

    #[test]
    fn coordinate_formula_holds_off_the_code() {
        let code = code_953();
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        let q = Permutation::new(vec![1, 0, 2]).unwrap();
        let sigma = verify_coordinate_action(&code, &p, &q).unwrap();
        let mut rng = XorShift64Star::new(9090);
        for _ in 0..20 {
            let b = rng.matrix(2, 3, 3).unwrap();
            let lhs = permute_vector(&sigma, &b.vectorize()).unwrap();
            let rhs = group_act(&p, &q, &b).unwrap().vectorize();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs.weight(), b.weight());
        }
    }

    #[test]
    fn adjacency_heuristic() {
        assert!(is_adjacency_like(&path3()));
        assert!(is_adjacency_like(&ones3()));
        let asym =
            Matrix::from_rows(2, vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]).unwrap();
        assert!(!is_adjacency_like(&asym));
        let big = Matrix::from_rows(3, vec![vec![2, 0], vec![0, 0]]).unwrap();
        assert!(!is_adjacency_like(&big));
    }
}
