//! Deterministic integer root finding.
//!
//! The pipeline for an arbitrary nonzero f in Z[x]:
//!
//! 1. strip the content, making f primitive;
//! 2. divide out gcd(f, f') to reach a squarefree polynomial with the
//!    same integer roots, using a rigorous evaluation-point GCD: both
//!    polynomials are packed into single integers at x = 2^c with c so
//!    large that every possible extraneous factor of the integer GCD
//!    still leaves the coefficient digits readable;
//! 3. pick the least prime p (bounded by a sieve limit derived from the
//!    degree and coefficient size) at which the reduction stays nonzero
//!    and squarefree, find its roots mod p by exhaustive evaluation,
//!    Hensel-lift them to a modulus p^k big enough to cover any true
//!    integer root and cofactor, and confirm each candidate by exact
//!    reconstruction f = (x - r) * g.
//!
//! Everything is deterministic; there are no randomized shortcuts.

use rug::{Assign, Complete, Integer};

use crate::error::{Error, Result};
use crate::poly::{ceil_lg, signed_residue, IntPoly, ModPoly};

/// Outcome of the good-prime search: the least usable prime and the
/// sieve bound it was guaranteed to lie under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSearchResult {
    pub p: u64,
    pub sieve_bound: u64,
}

/// GCD of two integer polynomials together with both cofactors and the
/// evaluation-point exponent used to compute them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdTriple {
    /// gcd(f, g), primitive, positive leading coefficient.
    pub h: IntPoly,
    /// f / h, exact.
    pub f_cofactor: IntPoly,
    /// g / h, exact.
    pub g_cofactor: IntPoly,
    /// The packing exponent c; the evaluation point was 2^c.
    pub eval_point_exponent: u64,
}

fn ceil_lg_u64(n: u64) -> u64 {
    debug_assert!(n >= 1);
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros() as u64
    }
}

// ---------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------

/// Lifts a simple root u of f mod p to the unique root v of f mod p^k
/// with v = u (mod p), by doubling the modulus each step.
///
/// `f` must be given modulo p^k. Requires f(u) = 0 (mod p) and
/// f'(u) != 0 (mod p); violations are caller bugs and reported as such.
pub fn hensel_lift(f: &ModPoly, u: u64, p: u64, k: u32) -> Result<Integer> {
    if k == 0 {
        return Err(Error::invalid("hensel lift requires k >= 1"));
    }
    if u >= p {
        return Err(Error::invalid("residue u must lie in [0, p)"));
    }
    let pz = Integer::from(p);
    let pk = pz.clone().pow(k);
    if *f.modulus() != pk {
        return Err(Error::invalid("polynomial modulus must equal p^k"));
    }
    let fp = f.reduce_to(&pz)?;
    let uz = Integer::from(u);
    if !fp.eval(&uz).is_zero() {
        return Err(Error::invalid("u is not a root of f mod p"));
    }
    if fp.derivative().eval(&uz).is_zero() {
        return Err(Error::invalid("f'(u) vanishes mod p; root is not simple"));
    }
    let fprime = f.derivative();
    lift_rec(f, &fprime, &uz, &pz, k)
}

fn lift_rec(f: &ModPoly, fprime: &ModPoly, u: &Integer, p: &Integer, k: u32) -> Result<Integer> {
    if k == 1 {
        return Ok(u.clone());
    }
    let l = k.div_ceil(2);
    let pl = p.clone().pow(l);
    let fl = f.reduce_to(&pl)?;
    let fprime_l = fprime.reduce_to(&pl)?;
    let w = lift_rec(&fl, &fprime_l, u, p, l)?;

    // solve f(w + p^l t) = 0 (mod p^k): t = -(f(w)/p^l) / f'(w) (mod p^(k-l))
    let pkl = p.clone().pow(k - l);
    let fw = f.eval(&w);
    debug_assert!(fw.is_divisible(&pl));
    let e = fw.div_exact(&pl);
    let fpw = fprime.eval(&w).rem_euc(&pkl);
    let inv = fpw
        .invert(&pkl)
        .map_err(|_| Error::internal("derivative not invertible during lift"))?;
    let mut t = -e * inv;
    t.rem_euc_mut(&pkl);
    Ok(w + pl * t)
}

// ---------------------------------------------------------------------
// Good-prime search
// ---------------------------------------------------------------------

/// Finds the least prime p <= Y := 6nb + 6n*ceil(lg n) such that f mod p
/// is nonzero with gcd(f_p, f_p') = 1 in (Z/pZ)[x].
///
/// The caller guarantees f is squarefree; existence of such a prime then
/// follows from the resultant bound, so exhausting the sieve is an
/// internal error. Primes are generated by a sieve of Eratosthenes in
/// growing blocks, since in practice a tiny prime almost always works.
/// Reduction is done naively per prime.
pub fn find_good_prime(f: &IntPoly, n: usize, b: u64) -> Result<PrimeSearchResult> {
    let Some(deg) = f.degree() else {
        return Err(Error::invalid("good-prime search needs a nonzero polynomial"));
    };
    if deg != n || n < 1 {
        return Err(Error::invalid("degree mismatch in good-prime search"));
    }
    if b < n as u64 {
        return Err(Error::invalid("bit bound b must be at least the degree"));
    }
    debug_assert!(ceil_lg(&f.sup_norm()) as u64 <= b);
    let nn = n as u64;
    let y = nn
        .checked_mul(b)
        .and_then(|x| x.checked_mul(6))
        .and_then(|x| x.checked_add(6 * nn * ceil_lg_u64(nn)))
        .ok_or_else(|| Error::invalid("sieve bound overflow"))?;

    let mut lo = 2u64;
    let mut hi = y.min(256);
    loop {
        for p in primes_up_to(hi) {
            if p < lo {
                continue;
            }
            if prime_is_good(f, p) {
                return Ok(PrimeSearchResult { p, sieve_bound: y });
            }
        }
        if hi >= y {
            break;
        }
        lo = hi + 1;
        hi = (hi * 8).min(y);
    }
    Err(Error::internal(
        "no usable prime below the sieve bound; input was not squarefree",
    ))
}

/// f mod p nonzero and coprime to its derivative.
fn prime_is_good(f: &IntPoly, p: u64) -> bool {
    let fp = poly_mod_u64(f, p);
    if fp.is_empty() {
        return false;
    }
    if fp.len() == 1 {
        return true; // nonzero constant, trivially squarefree
    }
    let mut dfp: Vec<u64> = fp
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mulmod(c, (i as u64) % p, p))
        .collect();
    trim(&mut dfp);
    gcd_is_constant(fp, dfp, p)
}

/// Coefficients of f mod p, ascending, trailing zeros trimmed.
fn poly_mod_u64(f: &IntPoly, p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = if p <= u32::MAX as u64 {
        f.coeffs().iter().map(|c| c.mod_u(p as u32) as u64).collect()
    } else {
        let pz = Integer::from(p);
        f.coeffs()
            .iter()
            .map(|c| c.rem_euc_ref(&pz).complete().to_u64().unwrap())
            .collect()
    };
    trim(&mut out);
    out
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    powmod(a, p - 2, p)
}

/// Euclid in (Z/pZ)[x]; true iff gcd is a nonzero constant.
fn gcd_is_constant(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> bool {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // a mod b
        let lead_inv = invmod(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let scale = mulmod(*a.last().unwrap(), lead_inv, p);
            let off = a.len() - b.len();
            if scale != 0 {
                for (i, &bc) in b.iter().enumerate() {
                    let t = mulmod(scale, bc, p);
                    let idx = off + i;
                    a[idx] = (a[idx] + p - t) % p;
                }
            }
            a.pop();
            trim(&mut a);
            if a.len() < b.len() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() == 1
}

/// Sieve of Eratosthenes up to `bound` inclusive.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

// ---------------------------------------------------------------------
// Roots modulo p, and the squarefree case
// ---------------------------------------------------------------------

/// All u in [0, p) with f(u) = 0 mod p, by exhaustive evaluation.
pub fn roots_mod_p(fp: &ModPoly, p: u64) -> Vec<u64> {
    debug_assert_eq!(*fp.modulus(), p);
    if fp.is_zero() {
        return (0..p).collect();
    }
    let coeffs: Vec<u64> = fp.coeffs().iter().map(|c| c.to_u64().unwrap()).collect();
    let mut roots = Vec::new();
    for u in 0..p {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = (mulmod(acc, u, p) + c) % p;
        }
        if acc == 0 {
            roots.push(u);
        }
    }
    roots
}

/// Integer roots of a squarefree primitive polynomial of degree n >= 1
/// with sup norm at most 2^b, b >= n.
pub fn integer_roots_squarefree(f: &IntPoly, n: usize, b: u64) -> Result<Vec<Integer>> {
    let Some(deg) = f.degree() else {
        return Err(Error::invalid("zero polynomial"));
    };
    if deg != n || n < 1 || b < n as u64 {
        return Err(Error::invalid("bad degree/bit-bound arguments"));
    }
    if !f.is_primitive() {
        return Err(Error::invalid("polynomial must be primitive"));
    }

    let found = find_good_prime(f, n, b)?;
    let p = found.p;
    let pz = Integer::from(p);
    let fp = f.reduce_mod(&pz)?;
    let residues = roots_mod_p(&fp, p);
    if residues.is_empty() {
        return Ok(Vec::new());
    }

    // smallest k with p^k > (n+1)^(1/2) * 2^(n+b+1), i.e. power-cleared
    // p^(2k) > (n+1) * 2^(2(n+b+1))
    let rhs = Integer::from(n + 1) << (2 * (n as u32 + b as u32 + 1));
    let mut k = 1u32;
    let mut pk = pz.clone();
    while Integer::from(pk.square_ref()) <= rhs {
        pk *= &pz;
        k += 1;
    }

    let fbar = f.reduce_mod(&pk)?;
    let mut roots = Vec::new();
    for u in residues {
        let v = hensel_lift(&fbar, u, p, k)?;
        // candidate root: signed lift, then reconstruct f = (x - r)*g
        let rstar = signed_residue(&v, &pk);
        let (gbar, rem) = fbar.div_linear(&v);
        if !rem.is_zero() {
            return Err(Error::internal("lifted residue is not a root mod p^k"));
        }
        let gstar = gbar.signed_lift();
        let mut candidate = gstar.mul(&IntPoly::from_coeffs(vec![
            Integer::from(-&rstar),
            Integer::from(1),
        ]));
        candidate = candidate; // (x - r*) * g*
        if candidate == *f {
            roots.push(rstar);
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

// ---------------------------------------------------------------------
// Evaluation-point GCD
// ---------------------------------------------------------------------

/// f evaluated at 2^c, by coefficient packing (Horner with shifts).
fn pack(f: &IntPoly, c: u64) -> Integer {
    let mut acc = Integer::new();
    for coeff in f.coeffs().iter().rev() {
        acc <<= c as u32;
        acc += coeff;
    }
    acc
}

/// Base-2^c digits with signed digits in [-2^(c-1), 2^(c-1)), ascending.
fn extract_signed_digits(mut v: Integer, c: u64) -> Vec<Integer> {
    let mut out = Vec::new();
    while !v.is_zero() {
        let digit = v.clone().keep_signed_bits(c as u32);
        v -= &digit;
        v >>= c as u32;
        out.push(digit);
    }
    out
}

/// Deterministic polynomial GCD via a single huge evaluation point.
///
/// Computes h = gcd(f, g) (primitive, positive leading coefficient) and
/// the exact cofactors f/h, g/h. Needs deg f, deg g <= n, sup norms at
/// most 2^b with b >= n >= 1, and at least one of f, g primitive.
pub fn heuristic_gcd(f: &IntPoly, g: &IntPoly, n: usize, b: u64) -> Result<GcdTriple> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::invalid("gcd of a zero polynomial"));
    }
    if n < 1 || b < n as u64 {
        return Err(Error::invalid("need b >= n >= 1"));
    }
    if f.degree().unwrap() > n || g.degree().unwrap() > n {
        return Err(Error::invalid("degree exceeds the stated bound"));
    }
    debug_assert!(ceil_lg(&f.sup_norm()) as u64 <= b && ceil_lg(&g.sup_norm()) as u64 <= b);
    if !f.is_primitive() && !g.is_primitive() {
        return Err(Error::invalid("at least one input must be primitive"));
    }

    // Step 1: evaluation point 2^c, sized so delta * h_i fits in c-2 bits
    // for every possible extraneous factor delta | res(f/h, g/h).
    let nn = n as u64;
    let c = (2 * nn + 1)
        .checked_mul(ceil_lg_u64(nn + 1))
        .and_then(|x| x.checked_add(2 * nn * nn))
        .and_then(|x| x.checked_add(2 * nn * b))
        .and_then(|x| x.checked_add(nn + b + 2))
        .filter(|&x| x <= u32::MAX as u64)
        .ok_or_else(|| Error::invalid("packing exponent overflow"))?;

    // Step 2: pack both polynomials into integers.
    let fv = pack(f, c);
    let gv = pack(g, c);

    // Step 3: one integer GCD.
    let d = fv.clone().gcd(&gv);

    // Step 4: read off the digits delta * h_i.
    let digits = extract_signed_digits(d, c);

    // Step 5: h is primitive, so delta is the content of the digits.
    let mut delta = Integer::new();
    for dg in &digits {
        delta.gcd_mut(dg);
    }
    if delta.is_zero() {
        return Err(Error::internal("gcd packing produced no digits"));
    }
    let mut h = IntPoly::from_coeffs(
        digits
            .iter()
            .map(|dg| dg.div_exact_ref(&delta).complete())
            .collect(),
    );
    if h.leading().is_some_and(|lc| *lc < 0u32) {
        h = h.negated();
    }

    // Step 6: divide out h at the evaluation point and unpack cofactors.
    let hv = pack(&h, c);
    let (fq, frem) = fv.div_rem(hv.clone());
    let (gq, grem) = gv.div_rem(hv);
    if !frem.is_zero() || !grem.is_zero() {
        return Err(Error::internal("computed gcd does not divide at the evaluation point"));
    }
    let f_cofactor = IntPoly::from_coeffs(extract_signed_digits(fq, c));
    let g_cofactor = IntPoly::from_coeffs(extract_signed_digits(gq, c));

    debug_assert_eq!(h.mul(&f_cofactor), *f);
    debug_assert_eq!(h.mul(&g_cofactor), *g);

    Ok(GcdTriple {
        h,
        f_cofactor,
        g_cofactor,
        eval_point_exponent: c,
    })
}

// ---------------------------------------------------------------------
// General integer root finding
// ---------------------------------------------------------------------

/// All integer roots of a nonzero polynomial.
///
/// Reduces to the squarefree case by dividing out gcd(f, f'), which
/// preserves the set of integer roots. The bit bound is derived from the
/// actual coefficients.
pub fn integer_roots(f: &IntPoly) -> Result<Vec<Integer>> {
    if f.is_zero() {
        return Err(Error::invalid("zero polynomial has every integer as a root"));
    }
    let (_, f0) = f.primitive_part()?;
    let n = f0.degree().unwrap();
    if n == 0 {
        return Ok(Vec::new()); // nonzero constant
    }
    let b = (n as u64).max(ceil_lg(&f0.sup_norm()) as u64).max(1);

    let g = f0.derivative();
    let b1 = b + ceil_lg_u64(n as u64);
    let triple = heuristic_gcd(&f0, &g, n, b1)?;
    let ftilde = triple.f_cofactor;

    let n2 = ftilde
        .degree()
        .ok_or_else(|| Error::internal("squarefree reduction vanished"))?;
    if n2 == 0 {
        return Ok(Vec::new());
    }
    let b2 = n as u64 + b1 + ceil_lg_u64(n as u64 + 1);
    integer_roots_squarefree(&ftilde, n2, b2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    // -- hensel --

    #[test]
    fn hensel_square_mod_9() {
        // f = x^2 - 7 mod 9, u = 1: the residues = 1 mod 3 are {1,4,7},
        // and only 4 squares to 7 mod 9.
        let f = p(&[-7, 0, 1]).reduce_mod(&Integer::from(9)).unwrap();
        let v = hensel_lift(&f, 1, 3, 2).unwrap();
        assert_eq!(v, 4);
    }

    #[test]
    fn hensel_k1_is_identity() {
        let f = p(&[-7, 0, 1]).reduce_mod(&Integer::from(3)).unwrap();
        assert_eq!(hensel_lift(&f, 1, 3, 1).unwrap(), 1);
    }

    #[test]
    fn hensel_square_mod_125() {
        // f = x^2 - 6 mod 125, u = 1. Enumerating v = 1 (mod 5) in
        // [0,125) finds 16 as the only root (16^2 = 256 = 2*125 + 6);
        // cross-checked below by exhaustive enumeration.
        let m = Integer::from(125);
        let f = p(&[-6, 0, 1]).reduce_mod(&m).unwrap();
        let v = hensel_lift(&f, 1, 5, 3).unwrap();
        let mut expected = None;
        let mut cand = 1u64;
        while cand < 125 {
            if (cand * cand) % 125 == 6 {
                assert!(expected.is_none(), "root not unique");
                expected = Some(cand);
            }
            cand += 5;
        }
        assert_eq!(v, expected.unwrap());
        assert_eq!(v, 16);
    }

    #[test]
    fn hensel_rejects_bad_preconditions() {
        let f = p(&[-7, 0, 1]).reduce_mod(&Integer::from(9)).unwrap();
        assert!(hensel_lift(&f, 2, 3, 2).is_err()); // 4 - 7 != 0 mod 3
        let g = p(&[-1, 0, 1]).reduce_mod(&Integer::from(4)).unwrap();
        assert!(hensel_lift(&g, 1, 2, 2).is_err()); // f'(1) = 2 = 0 mod 2
    }

    #[test]
    fn hensel_uniqueness_small_sweep() {
        // all primes < 20, k <= 4, a handful of polynomials; the full
        // 200-case sweep runs in the acceptance suite
        for &pr in &[2u64, 3, 5, 7, 11, 13, 17, 19] {
            for k in 1u32..=4 {
                let pk = Integer::from(pr).pow(k);
                for f in [p(&[-7, 0, 1]), p(&[3, 1]), p(&[-2, 1, 1]), p(&[-1, 0, 0, 1])] {
                    let fp = f.reduce_mod(&Integer::from(pr)).unwrap();
                    let fpk = f.reduce_mod(&pk).unwrap();
                    let dfp = fp.derivative();
                    for u in 0..pr {
                        let uz = Integer::from(u);
                        if !fp.eval(&uz).is_zero() || dfp.eval(&uz).is_zero() {
                            continue;
                        }
                        let v = hensel_lift(&fpk, u, pr, k).unwrap();
                        // exhaustive check of uniqueness
                        let mut hits = Vec::new();
                        let mut cand = Integer::from(u);
                        while cand < pk {
                            if fpk.eval(&cand).is_zero() {
                                hits.push(cand.clone());
                            }
                            cand += pr;
                        }
                        assert_eq!(hits, vec![v]);
                    }
                }
            }
        }
    }

    // -- prime search --

    #[test]
    fn good_prime_examples() {
        // x^2 - 1: p = 2 fails (f' = 2x = 0), p = 3 works
        let r = find_good_prime(&p(&[-1, 0, 1]), 2, 2).unwrap();
        assert_eq!(r.p, 3);
        // x^2 - x: res(f, f') = -1, so p = 2 already works
        let r = find_good_prime(&p(&[0, -1, 1]), 2, 2).unwrap();
        assert_eq!(r.p, 2);
        // x
        let r = find_good_prime(&p(&[0, 1]), 1, 1).unwrap();
        assert_eq!(r.p, 2);
        assert!(r.p <= r.sieve_bound);
    }

    #[test]
    fn good_prime_respects_bound() {
        for coeffs in [[6i64, 5, 1], [-4, 0, 1], [30, -31, 1], [0, 0, 7]] {
            let f = p(&coeffs);
            let n = f.degree().unwrap();
            let b = (n as u64).max(ceil_lg(&f.sup_norm()) as u64);
            let r = find_good_prime(&f, n, b).unwrap();
            assert!(r.p <= r.sieve_bound);
        }
    }

    #[test]
    fn primes_up_to_small() {
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    // -- roots mod p --

    #[test]
    fn roots_mod_p_examples() {
        let f = p(&[2, 0, 1]).reduce_mod(&Integer::from(3)).unwrap();
        assert_eq!(roots_mod_p(&f, 3), vec![1, 2]);
        let f = p(&[1, 0, 1]).reduce_mod(&Integer::from(3)).unwrap();
        assert!(roots_mod_p(&f, 3).is_empty());
        let f = p(&[0, 1]).reduce_mod(&Integer::from(5)).unwrap();
        assert_eq!(roots_mod_p(&f, 5), vec![0]);
    }

    // -- squarefree case --

    #[test]
    fn squarefree_roots_examples() {
        let f = p(&[-6, -1, 1]); // (x-3)(x+2)
        assert_eq!(integer_roots_squarefree(&f, 2, 3).unwrap(), ints(&[-2, 3]));
        let f = p(&[1, 0, 1]);
        assert!(integer_roots_squarefree(&f, 2, 2).unwrap().is_empty());
        // 2x^3 - 3x^2 - 3x + 2: roots -1, 2; the rational root 1/2 must
        // not leak through
        let f = p(&[2, -3, -3, 2]);
        assert_eq!(integer_roots_squarefree(&f, 3, 3).unwrap(), ints(&[-1, 2]));
    }

    // -- heuristic gcd --

    #[test]
    fn gcd_examples() {
        let t = heuristic_gcd(&p(&[2, -3, 1]), &p(&[3, -4, 1]), 2, 2).unwrap();
        assert_eq!(t.h, p(&[-1, 1]));
        assert_eq!(t.f_cofactor, p(&[-2, 1]));
        assert_eq!(t.g_cofactor, p(&[-3, 1]));

        let t = heuristic_gcd(&p(&[-1, 1]), &p(&[-1, 1]), 1, 1).unwrap();
        assert_eq!(t.h, p(&[-1, 1]));
        assert_eq!(t.f_cofactor, p(&[1]));
        assert_eq!(t.g_cofactor, p(&[1]));

        let t = heuristic_gcd(&p(&[0, 1]), &p(&[1, 1]), 1, 1).unwrap();
        assert_eq!(t.h, p(&[1]));
        assert_eq!(t.f_cofactor, p(&[0, 1]));
        assert_eq!(t.g_cofactor, p(&[1, 1]));
    }

    #[test]
    fn gcd_rejects_two_imprimitive_inputs() {
        let f = p(&[2, 2]);
        let g = p(&[4, 2, 2]);
        assert!(heuristic_gcd(&f, &g, 2, 3).is_err());
    }

    #[test]
    fn gcd_identities_random_planted() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let rand_poly = |next: &mut dyn FnMut() -> u64, deg: usize| loop {
                let coeffs: Vec<i64> = (0..=deg)
                    .map(|_| (next() % 2001) as i64 - 1000)
                    .collect();
                let f = IntPoly::from_i64s(&coeffs);
                if f.degree() == Some(deg) {
                    return f;
                }
            };
            let h0 = rand_poly(&mut next, 1 + (next() % 3) as usize)
                .primitive_part()
                .unwrap()
                .1;
            let a = rand_poly(&mut next, (next() % 4) as usize)
                .primitive_part()
                .unwrap()
                .1;
            let bq = rand_poly(&mut next, (next() % 4) as usize);
            let f = h0.mul(&a);
            let g = h0.mul(&bq);
            let n = f.degree().unwrap().max(g.degree().unwrap());
            let bits = ceil_lg(&f.sup_norm().max(g.sup_norm()))
                .max(n as u32)
                .max(1) as u64;
            let t = heuristic_gcd(&f, &g, n, bits).unwrap();
            assert_eq!(t.h.mul(&t.f_cofactor), f);
            assert_eq!(t.h.mul(&t.g_cofactor), g);
            let reference = oracle::gcd_classical(&f, &g).unwrap();
            assert_eq!(t.h, reference);
        }
    }

    // -- full pipeline --

    #[test]
    fn integer_roots_examples() {
        // (x-2)^2 (x+1) = x^3 - 3x^2 + 4: exercises squarefree reduction
        assert_eq!(integer_roots(&p(&[4, 0, -3, 1])).unwrap(), ints(&[-1, 2]));
        assert_eq!(integer_roots(&p(&[0, 0, 1])).unwrap(), ints(&[0]));
        assert_eq!(integer_roots(&p(&[6, -5, 1])).unwrap(), ints(&[2, 3]));
        assert!(integer_roots(&IntPoly::zero()).is_err());
        assert!(integer_roots(&p(&[7])).unwrap().is_empty());
    }

    #[test]
    fn integer_roots_match_oracle_on_smallish_inputs() {
        let mut state = 0xdeadbeefcafef00du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for case in 0..50 {
            // plant a few roots, multiply by noise
            let mut f = p(&[1]);
            for _ in 0..(next() % 3) {
                let r = (next() % 41) as i64 - 20;
                f = f.mul(&IntPoly::from_i64s(&[-r, 1]));
                if case % 3 == 0 {
                    f = f.mul(&IntPoly::from_i64s(&[-r, 1])); // repeated root
                }
            }
            let noise: Vec<i64> = (0..=(next() % 4) as usize)
                .map(|_| (next() % 101) as i64 - 50)
                .collect();
            let noise = IntPoly::from_i64s(&noise);
            if noise.is_zero() {
                continue;
            }
            f = f.mul(&noise);
            if f.is_zero() || f.degree() == Some(0) {
                continue;
            }
            let got = integer_roots(&f).unwrap();
            let want = oracle::integer_roots_naive(&f).unwrap();
            assert_eq!(got, want, "mismatch on {f}");
        }
    }
}
