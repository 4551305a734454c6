//! Scalars of F_p: residues modulo a prime.

use crate::error::{Error, Result};

/// Largest supported modulus. Syndrome serialization packs one entry per
/// byte, so every residue must fit in a u8.
pub const MAX_MODULUS: u64 = 255;

/// Trial-division primality test. Moduli are below 256, so this is instant.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_modulus(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > MAX_MODULUS {
        return Err(Error::ModulusTooLarge(p));
    }
    Ok(())
}

/// Inverse of a nonzero residue mod a prime, by scanning the p − 1
/// candidates. Callers guarantee 0 < a < p.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(0 < a && a < p);
    (1..p)
        .find(|b| (a * b) % p == 1)
        .expect("every nonzero residue mod a prime is invertible")
}

/// A residue modulo a prime p, the scalar of all arithmetic in this crate.
///
/// Elements carry their modulus; operations between different moduli are
/// an error, never a silent coercion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: u64,
}

// arithmetic is fallible (modulus mismatch), so the std operator traits,
// whose methods are total, are deliberately not implemented
#[allow(clippy::should_implement_trait)]
impl FieldElement {
    /// Reduces `value` mod `p`. Fails when `p` is composite or above
    /// [`MAX_MODULUS`].
    pub fn new(value: u64, p: u64) -> Result<Self> {
        check_modulus(p)?;
        Ok(Self {
            value: value % p,
            modulus: p,
        })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check_same(self, other: Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn add(self, other: Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        })
    }

    pub fn sub(self, other: Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            value: (self.modulus + self.value - other.value) % self.modulus,
            modulus: self.modulus,
        })
    }

    pub fn mul(self, other: Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            value: (self.value * other.value) % self.modulus,
            modulus: self.modulus,
        })
    }

    pub fn neg(self) -> Self {
        Self {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse; zero has none.
    pub fn inverse(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::NoInverse);
        }
        Ok(Self {
            value: inv_mod(self.value, self.modulus),
            modulus: self.modulus,
        })
    }
}

/// Free-function form of [`FieldElement::inverse`].
pub fn field_inverse(a: FieldElement) -> Result<FieldElement> {
    a.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_known_values() {
        let one = FieldElement::new(1, 2).unwrap();
        assert_eq!(field_inverse(one).unwrap().value(), 1);
        let two = FieldElement::new(2, 3).unwrap();
        assert_eq!(field_inverse(two).unwrap().value(), 2);
        let five = FieldElement::new(5, 13).unwrap();
        assert_eq!(field_inverse(five).unwrap().value(), 8);
    }

    #[test]
    fn inverse_of_zero_fails() {
        let zero = FieldElement::new(0, 7).unwrap();
        assert_eq!(field_inverse(zero), Err(Error::NoInverse));
    }

    #[test]
    fn inverse_exhaustive_small_primes() {
        for p in [2u64, 3, 5, 7] {
            for a in 1..p {
                let x = FieldElement::new(a, p).unwrap();
                let inv = x.inverse().unwrap();
                assert_eq!(x.mul(inv).unwrap().value(), 1, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn modulus_must_be_prime_and_small() {
        assert_eq!(FieldElement::new(1, 4), Err(Error::NotPrime(4)));
        assert_eq!(FieldElement::new(1, 1), Err(Error::NotPrime(1)));
        assert_eq!(FieldElement::new(1, 257), Err(Error::ModulusTooLarge(257)));
        assert!(FieldElement::new(1, 251).is_ok());
    }

    #[test]
    fn mixed_moduli_are_rejected() {
        let a = FieldElement::new(1, 2).unwrap();
        let b = FieldElement::new(1, 3).unwrap();
        assert_eq!(a.add(b), Err(Error::ModulusMismatch(2, 3)));
        assert_eq!(a.mul(b), Err(Error::ModulusMismatch(2, 3)));
        assert_eq!(a.sub(b), Err(Error::ModulusMismatch(2, 3)));
    }

    #[test]
    fn construction_reduces() {
        let x = FieldElement::new(10, 3).unwrap();
        assert_eq!(x.value(), 1);
        assert_eq!(x.neg().value(), 2);
        assert_eq!(FieldElement::new(3, 3).unwrap().neg().value(), 0);
    }
}
