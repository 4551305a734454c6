//! Cross-checks of the matrix arithmetic against independent oracles:
//! big-integer schoolbook products, solution counting for rank, and the
//! classical Kronecker/vectorization identities.

use num_bigint::BigUint;

use gtc::{Matrix, XorShift64Star};

fn random_matrix(rng: &mut XorShift64Star, p: u64, rows: usize, cols: usize) -> Matrix {
    rng.matrix(p, rows, cols).unwrap()
}

/// Product computed independently: entries lifted to big integers,
/// schoolbook triple loop, one reduction at the very end.
fn bigint_product(a: &Matrix, b: &Matrix) -> Matrix {
    let p = a.modulus();
    let mut entries = Vec::with_capacity(a.rows() * b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut acc = BigUint::ZERO;
            for t in 0..a.cols() {
                acc += BigUint::from(a.get(i, t)) * BigUint::from(b.get(t, j));
            }
            let reduced: u64 = (acc % BigUint::from(p)).try_into().unwrap();
            entries.push(reduced);
        }
    }
    Matrix::new(p, a.rows(), b.cols(), entries).unwrap()
}

#[test]
fn product_matches_bigint_oracle() {
    let mut rng = XorShift64Star::new(0x6d61);
    for p in [2, 3, 5, 251] {
        for (rows, mid, cols) in [(2, 2, 2), (3, 3, 3), (2, 3, 4), (4, 3, 2), (1, 4, 1)] {
            for _ in 0..40 {
                let a = random_matrix(&mut rng, p, rows, mid);
                let b = random_matrix(&mut rng, p, mid, cols);
                assert_eq!(a.product(&b).unwrap(), bigint_product(&a, &b));
            }
        }
    }
}

#[test]
fn transpose_reverses_products() {
    let mut rng = XorShift64Star::new(0x7472);
    for _ in 0..50 {
        let a = random_matrix(&mut rng, 5, 3, 4);
        let b = random_matrix(&mut rng, 5, 4, 2);
        let lhs = a.product(&b).unwrap().transpose();
        let rhs = b.transpose().product(&a.transpose()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn kronecker_mixed_product() {
    let mut rng = XorShift64Star::new(0x6b72);
    for _ in 0..25 {
        let a = random_matrix(&mut rng, 3, 2, 3);
        let b = random_matrix(&mut rng, 3, 3, 2);
        let c = random_matrix(&mut rng, 3, 3, 2);
        let d = random_matrix(&mut rng, 3, 2, 3);
        let lhs = a
            .kronecker(&b)
            .unwrap()
            .product(&c.kronecker(&d).unwrap())
            .unwrap();
        let rhs = a
            .product(&c)
            .unwrap()
            .kronecker(&b.product(&d).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn vectorization_identity() {
    // vec(A X B) = (B^t (x) A) vec(X), column-major throughout
    let mut rng = XorShift64Star::new(0x7665);
    for (ar, ac, bc) in [(3, 3, 3), (2, 3, 2), (4, 2, 3)] {
        for _ in 0..30 {
            let a = random_matrix(&mut rng, 5, ar, ac);
            let x = random_matrix(&mut rng, 5, ac, bc + 1);
            let b = random_matrix(&mut rng, 5, bc + 1, bc);
            let lhs = a.product(&x).unwrap().product(&b).unwrap().vectorize();
            let rhs = b
                .transpose()
                .kronecker(&a)
                .unwrap()
                .product(&x.vectorize())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn vectorize_unvectorize_round_trip() {
    let mut rng = XorShift64Star::new(0x7576);
    for _ in 0..30 {
        let m = random_matrix(&mut rng, 7, 3, 4);
        let v = m.vectorize();
        assert_eq!(Matrix::unvectorize(&v, 3, 4).unwrap(), m);
    }
}

/// Rank checked against an enumeration oracle: the kernel of an r×c
/// matrix has exactly p^(c − rank) vectors, and counting solutions of
/// Ax = 0 needs no elimination at all.
#[test]
fn rank_matches_solution_counting() {
    let mut rng = XorShift64Star::new(0x726b);
    for p in [2u64, 3, 5] {
        for (rows, cols) in [(2, 2), (3, 3), (2, 4), (4, 2), (3, 2)] {
            for _ in 0..20 {
                let m = random_matrix(&mut rng, p, rows, cols);
                let total = (p as u128).pow(cols as u32);
                let mut kernel_count = 0u128;
                for index in 0..total {
                    let mut digits = vec![0u64; cols];
                    let mut rest = index;
                    for slot in digits.iter_mut() {
                        *slot = (rest % u128::from(p)) as u64;
                        rest /= u128::from(p);
                    }
                    let x = Matrix::new(p, cols, 1, digits).unwrap();
                    if m.product(&x).unwrap().is_zero() {
                        kernel_count += 1;
                    }
                }
                let expected = (p as u128).pow((cols - m.rank()) as u32);
                assert_eq!(kernel_count, expected, "rank oracle disagrees for {m:?}");
            }
        }
    }
}

#[test]
fn kernel_basis_spans_the_kernel() {
    let mut rng = XorShift64Star::new(0x6b65);
    for p in [2u64, 3] {
        for _ in 0..20 {
            let m = random_matrix(&mut rng, p, 3, 3);
            let basis = m.kernel_basis();
            assert_eq!(basis.len(), 3 - m.rank());
            for v in &basis {
                assert!(m.product(v).unwrap().is_zero());
            }
            // basis vectors are independent: stack as columns, rank = len
            if !basis.is_empty() {
                let k = basis.len();
                let mut entries = vec![0u64; 3 * k];
                for (j, v) in basis.iter().enumerate() {
                    for i in 0..3 {
                        entries[i * k + j] = v.get(i, 0);
                    }
                }
                let stacked = Matrix::new(p, 3, k, entries).unwrap();
                assert_eq!(stacked.rank(), k);
            }
        }
    }
}

#[test]
fn inverse_agrees_with_products() {
    let mut rng = XorShift64Star::new(0x696e);
    let mut seen_invertible = 0;
    for _ in 0..60 {
        let m = random_matrix(&mut rng, 5, 3, 3);
        match m.inverse().unwrap() {
            Some(inv) => {
                seen_invertible += 1;
                assert!(m.product(&inv).unwrap().is_identity());
                assert!(inv.product(&m).unwrap().is_identity());
            }
            None => assert!(m.rank() < 3),
        }
    }
    assert!(seen_invertible > 10);
}
