//! Exact big-integer and dense integer-polynomial arithmetic.
//!
//! Everything downstream (lattice reduction, interval search, root
//! finding) works over these two types. All operations are exact; there
//! is no floating point anywhere in this crate's arithmetic.
//!
//! Polynomials are dense vectors of coefficients in ascending degree
//! order. The zero polynomial is the empty vector; otherwise the last
//! coefficient is nonzero. Degrees in this artifact stay small (a few
//! hundred at most), so no sparse or FFT-based representations.

use rug::{Assign, Complete, Integer};

use crate::error::{Error, Result};

/// ⌈log2 x⌉ for x ≥ 1, as bit length of x−1 (exact, no real logarithms).
pub fn ceil_lg(x: &Integer) -> u32 {
    debug_assert!(*x >= 1u32);
    (x - 1u32).complete().significant_bits()
}

/// ⌊log2 x⌋ for x ≥ 1.
pub fn floor_lg(x: &Integer) -> u32 {
    debug_assert!(*x >= 1u32);
    x.significant_bits() - 1
}

/// Floor k-th root: the unique v ≥ 0 with v^k ≤ a < (v+1)^k.
///
/// Rejects negative input and k = 0. Backed by GMP's integer Newton
/// iteration, which is exact for nonnegative operands.
pub fn integer_kth_root(a: &Integer, k: u32) -> Result<Integer> {
    if k == 0 {
        return Err(Error::invalid("k-th root requires k >= 1"));
    }
    if *a < 0u32 {
        return Err(Error::invalid("k-th root of a negative number"));
    }
    Ok(a.clone().root(k))
}

/// Dense polynomial over the integers, coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(Integer::from(1))
    }

    pub fn constant(c: Integer) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// Builds a polynomial, trimming trailing zeros to keep the
    /// representation canonical.
    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor for tests and the CLI.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    /// max |coefficient|; 0 for the zero polynomial.
    pub fn sup_norm(&self) -> Integer {
        let mut m = Integer::new();
        for c in &self.coeffs {
            if c.cmp_abs(&m) == std::cmp::Ordering::Greater {
                m.assign(c.abs_ref());
            }
        }
        m
    }

    /// Horner evaluation, exact.
    pub fn eval(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| Integer::from(c * i as u64))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// GCD of the coefficients, positive; 0 for the zero polynomial.
    pub fn content(&self) -> Integer {
        let mut g = Integer::new();
        for c in &self.coeffs {
            g.gcd_mut(c);
            if g == 1u32 {
                break;
            }
        }
        g
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1u32
    }

    /// Splits into (content, primitive part) with content > 0, so the
    /// primitive part keeps the sign of the leading coefficient.
    /// The zero polynomial is rejected.
    pub fn primitive_part(&self) -> Result<(Integer, IntPoly)> {
        if self.is_zero() {
            return Err(Error::invalid("primitive part of the zero polynomial"));
        }
        let c = self.content();
        let prim = IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| a.div_exact_ref(&c).complete())
                .collect(),
        };
        Ok((c, prim))
    }

    pub fn negated(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| Integer::from(-c)).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Schoolbook product; degrees here never warrant anything faster.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Integer::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += (a * b).complete();
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, s: &Integer) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| (c * s).complete()).collect())
    }

    /// Coefficientwise reduction into [0, m). Rejects m < 2.
    pub fn reduce_mod(&self, m: &Integer) -> Result<ModPoly> {
        ModPoly::reduce(self, m)
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Polynomial over Z/mZ with every coefficient reduced into [0, m).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    modulus: Integer,
    coeffs: Vec<Integer>,
}

impl ModPoly {
    pub fn reduce(f: &IntPoly, m: &Integer) -> Result<ModPoly> {
        if *m < 2u32 {
            return Err(Error::invalid("modulus must be at least 2"));
        }
        let mut coeffs: Vec<Integer> = f
            .coeffs()
            .iter()
            .map(|c| c.rem_euc_ref(m).complete())
            .collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(ModPoly {
            modulus: m.clone(),
            coeffs,
        })
    }

    pub fn modulus(&self) -> &Integer {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation mod the modulus; result in [0, modulus).
    pub fn eval(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
            acc.rem_euc_mut(&self.modulus);
        }
        acc
    }

    /// Formal derivative, reduced.
    pub fn derivative(&self) -> ModPoly {
        let mut coeffs: Vec<Integer> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (c * i as u64).complete().rem_euc(&self.modulus))
            .collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ModPoly {
            modulus: self.modulus.clone(),
            coeffs,
        }
    }

    /// Re-reduces modulo a divisor m2 of the current modulus.
    pub fn reduce_to(&self, m2: &Integer) -> Result<ModPoly> {
        debug_assert!(self.modulus.is_divisible(m2));
        let mut coeffs: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| c.rem_euc_ref(m2).complete())
            .collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if *m2 < 2u32 {
            return Err(Error::invalid("modulus must be at least 2"));
        }
        Ok(ModPoly {
            modulus: m2.clone(),
            coeffs,
        })
    }

    /// Lifts coefficientwise to the signed representatives in
    /// [-modulus/2, modulus/2).
    pub fn signed_lift(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| signed_residue(c, &self.modulus))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Divides by the monic linear factor (x - v) modulo the modulus,
    /// returning the quotient. The remainder, f(v) mod m, is returned
    /// alongside so callers can verify it vanishes.
    pub fn div_linear(&self, v: &Integer) -> (ModPoly, Integer) {
        let n = self.coeffs.len();
        if n == 0 {
            return (
                ModPoly {
                    modulus: self.modulus.clone(),
                    coeffs: Vec::new(),
                },
                Integer::new(),
            );
        }
        let mut q = vec![Integer::new(); n - 1];
        let mut carry = self.coeffs[n - 1].clone();
        for i in (0..n - 1).rev() {
            q[i] = carry.clone();
            carry *= v;
            carry += &self.coeffs[i];
            carry.rem_euc_mut(&self.modulus);
        }
        let mut qc = q;
        while qc.last().is_some_and(|c| c.is_zero()) {
            qc.pop();
        }
        (
            ModPoly {
                modulus: self.modulus.clone(),
                coeffs: qc,
            },
            carry,
        )
    }
}

/// Signed representative of c mod m in [-m/2, m/2).
pub fn signed_residue(c: &Integer, m: &Integer) -> Integer {
    let mut r = c.rem_euc_ref(m).complete();
    // r in [0, m); move the top half down.
    let twice = Integer::from(&r << 1);
    if twice >= *m {
        r -= m;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn eval_planted_root() {
        // x^2 - 3x + 2 at x = 2
        let f = p(&[2, -3, 1]);
        assert_eq!(f.eval(&Integer::from(2)), 0);
        assert_eq!(f.eval(&Integer::from(1)), 0);
        assert_eq!(f.eval(&Integer::from(3)), 2);
    }

    #[test]
    fn eval_zero_poly() {
        let f = IntPoly::zero();
        assert_eq!(f.eval(&Integer::from(7)), 0);
        assert!(f.degree().is_none());
    }

    #[test]
    fn eval_scaled_linear() {
        // 12(3 + x) = 36 + 12x at x = -3
        let f = p(&[36, 12]);
        assert_eq!(f.eval(&Integer::from(-3)), 0);
    }

    #[test]
    fn derivative_basic() {
        assert_eq!(p(&[-1, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(p(&[5]).derivative(), IntPoly::zero());
        assert_eq!(p(&[4, 0, -3, 1]).derivative(), p(&[0, -6, 3]));
    }

    #[test]
    fn primitive_part_basic() {
        let (c, prim) = p(&[-12, 0, 6]).primitive_part().unwrap();
        assert_eq!(c, 6);
        assert_eq!(prim, p(&[-2, 0, 1]));

        let (c, prim) = p(&[-1, 1]).primitive_part().unwrap();
        assert_eq!(c, 1);
        assert_eq!(prim, p(&[-1, 1]));

        // -4x + 8: content 4, sign stays on the leading coefficient
        let (c, prim) = p(&[8, -4]).primitive_part().unwrap();
        assert_eq!(c, 4);
        assert_eq!(prim, p(&[2, -1]));

        assert!(IntPoly::zero().primitive_part().is_err());
    }

    #[test]
    fn reduce_mod_basic() {
        let f = p(&[-1, 0, 1]).reduce_mod(&Integer::from(2)).unwrap();
        assert_eq!(f.coeffs(), &[Integer::from(1), Integer::from(0), Integer::from(1)]);

        let f = p(&[-7, 0, 1]).reduce_mod(&Integer::from(9)).unwrap();
        assert_eq!(f.coeffs(), &[Integer::from(2), Integer::from(0), Integer::from(1)]);

        // 12(3+x) mod 5 = 2x + 1
        let f = p(&[36, 12]).reduce_mod(&Integer::from(5)).unwrap();
        assert_eq!(f.coeffs(), &[Integer::from(1), Integer::from(2)]);

        assert!(p(&[1]).reduce_mod(&Integer::from(1)).is_err());
    }

    #[test]
    fn kth_root_basic() {
        let r = |a: u64, k: u32| integer_kth_root(&Integer::from(a), k).unwrap();
        assert_eq!(r(1000, 3), 10);
        assert_eq!(r(999, 3), 9);
        assert_eq!(r(1 << 40, 4), 1024);
        assert_eq!(r(0, 5), 0);
        assert!(integer_kth_root(&Integer::from(-1), 3).is_err());
        assert!(integer_kth_root(&Integer::from(4), 0).is_err());
    }

    #[test]
    fn kth_root_exhaustive_small() {
        for v in 2u64..=100 {
            for k in 1u32..=10 {
                let vk = Integer::from(v).pow(k);
                assert_eq!(integer_kth_root(&vk, k).unwrap(), v);
                let vk1 = vk - 1u32;
                assert_eq!(integer_kth_root(&vk1, k).unwrap(), v - 1);
            }
        }
    }

    #[test]
    fn signed_residue_range() {
        let m = Integer::from(10);
        assert_eq!(signed_residue(&Integer::from(7), &m), -3);
        assert_eq!(signed_residue(&Integer::from(4), &m), 4);
        assert_eq!(signed_residue(&Integer::from(5), &m), -5);
        assert_eq!(signed_residue(&Integer::from(-1), &m), -1);
    }

    #[test]
    fn mod_div_linear_roundtrip() {
        let m = Integer::from(125);
        let f = p(&[-6, 0, 1]).reduce_mod(&m).unwrap();
        let (q, rem) = f.div_linear(&Integer::from(16));
        assert_eq!(rem, 0); // 16^2 = 256 = 6 mod 125
        assert_eq!(q.degree(), Some(1));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-1000i64..1000, 0..8).prop_map(|v| IntPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn eval_is_ring_homomorphism(f in small_poly(), g in small_poly(), x in -1000i64..1000) {
            let x = Integer::from(x);
            let sum = f.add(&g);
            let prod = f.mul(&g);
            prop_assert_eq!(sum.eval(&x), f.eval(&x) + g.eval(&x));
            prop_assert_eq!(prod.eval(&x), f.eval(&x) * g.eval(&x));
        }

        #[test]
        fn primitive_part_roundtrip(f in small_poly()) {
            prop_assume!(!f.is_zero());
            let (c, prim) = f.primitive_part().unwrap();
            prop_assert!(c > 0);
            prop_assert_eq!(prim.mul_scalar(&c), f);
            prop_assert_eq!(prim.content(), Integer::from(1));
        }
    }
}
