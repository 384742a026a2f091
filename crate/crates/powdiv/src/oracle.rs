//! Independent brute-force reference implementations.
//!
//! These back the test suites and the `oracle` CLI subcommand. They share
//! nothing with the production pipeline beyond basic integer/polynomial
//! arithmetic, so agreement between the two is meaningful evidence.
//! All of them are desk-scale only and guard their input sizes.

use rug::{Complete, Integer};

use crate::error::{Error, Result};
use crate::lattice::{determinant, norm_sq, LatticeBasis};
use crate::poly::IntPoly;

/// Largest bound `trial_divisors` accepts.
pub const TRIAL_DIVISION_LIMIT: u64 = 1 << 26;

/// { p in [2, bound] : p^r | N } by direct division.
pub fn trial_divisors(n: &Integer, r: u32, bound: &Integer) -> Result<Vec<Integer>> {
    if *n < 1u32 || r == 0 {
        return Err(Error::invalid("need N >= 1 and r >= 1"));
    }
    if *bound > TRIAL_DIVISION_LIMIT {
        return Err(Error::invalid(format!(
            "trial division bound exceeds 2^26 ({bound})"
        )));
    }
    let bound = bound.to_u64().unwrap_or(0);
    let mut out = Vec::new();
    if let Some(n64) = n.to_u128() {
        // machine-width fast path
        for p in 2u64..=bound {
            let Some(pr) = checked_pow_u128(p, r) else {
                break;
            };
            if pr > n64 {
                break; // p^r only grows from here
            }
            if n64 % pr == 0 {
                out.push(Integer::from(p));
            }
        }
    } else {
        for p in 2u64..=bound {
            let pr = Integer::from(p).pow(r);
            if pr > *n {
                break;
            }
            if n.is_divisible(&pr) {
                out.push(Integer::from(p));
            }
        }
    }
    Ok(out)
}

fn checked_pow_u128(base: u64, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

/// Integer roots by testing divisors of the trailing nonzero coefficient
/// (any integer root divides it), plus 0 when x divides f.
pub fn integer_roots_naive(f: &IntPoly) -> Result<Vec<Integer>> {
    if f.is_zero() {
        return Err(Error::invalid("zero polynomial"));
    }
    let coeffs = f.coeffs();
    let s = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    let tail = coeffs[s].clone().abs();
    if tail > (1u64 << 52) {
        return Err(Error::invalid(
            "trailing coefficient too large for the naive oracle",
        ));
    }
    let stripped = IntPoly::from_coeffs(coeffs[s..].to_vec());
    let mut roots = Vec::new();
    if s > 0 {
        roots.push(Integer::new());
    }
    let tail = tail.to_u64().unwrap();
    for div in divisors_u64(tail) {
        for sign in [1i64, -1] {
            let cand = Integer::from(div) * sign;
            if stripped.eval(&cand).is_zero() {
                roots.push(cand);
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// All positive divisors of n (n >= 1), via trial-division factoring.
fn divisors_u64(n: u64) -> Vec<u64> {
    debug_assert!(n >= 1);
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    let mut divs = vec![1u64];
    for (p, e) in factors {
        let prev = divs.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            divs.extend(prev.iter().map(|d| d * pe));
        }
    }
    divs
}

/// Primitive GCD with positive leading coefficient, by the primitive
/// pseudo-remainder sequence (classical Euclid over Q, contents stripped
/// each step).
pub fn gcd_classical(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::invalid("gcd oracle needs nonzero inputs"));
    }
    let mut a = f.primitive_part()?.1;
    let mut b = g.primitive_part()?.1;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_zero() {
            IntPoly::zero()
        } else {
            r.primitive_part()?.1
        };
    }
    if a.leading().is_some_and(|c| *c < 0u32) {
        a = a.negated();
    }
    Ok(a)
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, computed
/// without leaving Z[x].
fn pseudo_rem(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let df = f.degree().expect("nonzero");
    let dg = g.degree().expect("nonzero");
    debug_assert!(df >= dg);
    let lc = g.leading().unwrap().clone();
    let mut rem = f.clone();
    while let Some(dr) = rem.degree() {
        if dr < dg {
            break;
        }
        let lead = rem.leading().unwrap().clone();
        // rem = lc*rem - lead*x^(dr-dg)*g
        let mut shifted = vec![Integer::new(); dr - dg];
        shifted.extend(g.coeffs().iter().map(|c| (c * &lead).complete()));
        rem = rem.mul_scalar(&lc).sub(&IntPoly::from_coeffs(shifted));
    }
    rem
}

/// Resultant via the Sylvester matrix determinant, f's coefficient rows
/// first. Degree guard keeps the matrix small.
pub fn resultant_naive(f: &IntPoly, g: &IntPoly) -> Result<Integer> {
    let (Some(n), Some(m)) = (f.degree(), g.degree()) else {
        return Err(Error::invalid("resultant of a zero polynomial"));
    };
    if n + m > 16 {
        return Err(Error::invalid("degrees too large for the resultant oracle"));
    }
    if n + m == 0 {
        return Ok(Integer::from(1)); // res of two constants
    }
    let size = n + m;
    let mut rows = vec![vec![Integer::new(); size]; size];
    // m rows of f's coefficients, descending degree
    for i in 0..m {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    // n rows of g's coefficients
    for i in 0..n {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            rows[m + i][i + k] = c.clone();
        }
    }
    Ok(determinant(&rows))
}

/// Exhaustively enumerates small integer combinations of the basis rows
/// and returns a shortest nonzero vector found in the box
/// [-coeff_bound, coeff_bound]^d. Ties broken lexicographically so the
/// result is deterministic.
pub fn shortest_vector_enum(basis: &LatticeBasis, coeff_bound: i64) -> Result<Vec<Integer>> {
    let d = basis.dim();
    if d > 5 {
        return Err(Error::invalid("enumeration oracle limited to dimension 5"));
    }
    let width = 2 * coeff_bound as u128 + 1;
    if width.pow(d as u32) > 20_000_000 {
        return Err(Error::invalid("enumeration box too large"));
    }
    let mut best: Option<(Integer, Vec<Integer>)> = None;
    let mut coeffs = vec![-coeff_bound; d];
    loop {
        if coeffs.iter().any(|&c| c != 0) {
            let mut v = vec![Integer::new(); d];
            for (i, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for j in 0..d {
                    v[j] += (&basis.rows()[i][j] * &Integer::from(c)).complete();
                }
            }
            let n2 = norm_sq(&v);
            let better = match &best {
                None => true,
                Some((bn, bv)) => n2 < *bn || (n2 == *bn && v < *bv),
            };
            if better {
                best = Some((n2, v));
            }
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == d {
                return Ok(best.expect("box contains a nonzero vector").1);
            }
            coeffs[i] += 1;
            if coeffs[i] <= coeff_bound {
                break;
            }
            coeffs[i] = -coeff_bound;
            i += 1;
        }
    }
}
