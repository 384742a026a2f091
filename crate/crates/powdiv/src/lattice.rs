//! Exact-arithmetic LLL reduction.
//!
//! This is the all-integer LLL variant (de Weger): instead of rational
//! Gram-Schmidt data it maintains the integers d_i (Gram determinants of
//! leading row blocks) and lambda_{i,j} = d_j * mu_{i,j}, so every
//! intermediate value is an integer and every division below is exact.
//! The Lovasz parameter is fixed at 3/4, which gives the first vector of
//! the reduced basis the guarantee
//!
//!   ||w||^2 <= 2^((d-1)/2) * det(L)^(2/d),
//!
//! checked in the power-cleared integer form (||w||^2)^d <=
//! 2^(d(d-1)/2) * det(L)^2. No floating point is used anywhere.
//!
//! The search lattices built upstream are lower triangular; for those the
//! Gram-Schmidt vectors are the scaled unit vectors, which lets the
//! lambda/d tables be seeded in O(d^2) instead of O(d^3).

use rug::{Assign, Complete, Integer};

use crate::error::{Error, Result};

/// Square integer basis, rows spanning the lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    rows: Vec<Vec<Integer>>,
}

impl LatticeBasis {
    /// Builds a basis from square row data. Linear independence is not
    /// checked here; reduction reports dependent rows when it hits them.
    pub fn new(rows: Vec<Vec<Integer>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(Error::invalid("empty basis"));
        }
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::invalid("basis rows must form a square matrix"));
        }
        Ok(LatticeBasis { rows })
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Result<Self> {
        LatticeBasis::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    pub fn is_lower_triangular_nonzero_diag(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            if self.rows[i][i].is_zero() {
                return false;
            }
            for j in i + 1..d {
                if !self.rows[i][j].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant (Bareiss elimination).
    pub fn det(&self) -> Integer {
        determinant(&self.rows)
    }
}

/// Whether `lll_reduce` should record the unimodular transform relating
/// output rows to input rows. The search path skips it; verification and
/// tests record it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    Record,
    Skip,
}

/// An LLL-reduced basis, optionally with the unimodular transform U such
/// that `rows = U * input`.
#[derive(Clone, Debug)]
pub struct ReducedBasis {
    rows: Vec<Vec<Integer>>,
    transform: Option<Vec<Vec<Integer>>>,
}

impl ReducedBasis {
    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    /// First vector of the reduced basis; carries the Lemma bound.
    pub fn first(&self) -> &[Integer] {
        &self.rows[0]
    }

    pub fn transform(&self) -> Option<&[Vec<Integer>]> {
        self.transform.as_deref()
    }
}

/// LLL reduction with Lovasz parameter 3/4, exact integer arithmetic.
///
/// Returns an error if the rows are linearly dependent, which upstream
/// construction never produces.
pub fn lll_reduce(basis: &LatticeBasis, transform: Transform) -> Result<ReducedBasis> {
    let mut st = State::new(basis, transform == Transform::Record)?;
    st.run()?;
    Ok(ReducedBasis {
        rows: st.b,
        transform: st.u,
    })
}

/// Checks that `output` spans the same lattice as `input` (via the
/// recorded transform: integer matrix of determinant +-1 mapping input
/// rows to output rows) and that the first vector obeys the norm bound.
/// Returns false if no transform was recorded.
pub fn verify_reduction(input: &LatticeBasis, output: &ReducedBasis) -> bool {
    let d = input.dim();
    if output.rows.len() != d {
        return false;
    }
    let Some(u) = output.transform() else {
        return false;
    };
    if u.len() != d || u.iter().any(|r| r.len() != d) {
        return false;
    }
    // output == U * input, exactly
    for i in 0..d {
        for j in 0..d {
            let mut s = Integer::new();
            for k in 0..d {
                s += (&u[i][k] * &input.rows[k][j]).complete();
            }
            if s != output.rows[i][j] {
                return false;
            }
        }
    }
    let det_u = determinant(u);
    if det_u != 1u32 && det_u != -1i32 {
        return false;
    }
    let w = &output.rows[0];
    if w.iter().all(|x| x.is_zero()) {
        return false;
    }
    first_vector_bound_holds(w, &input.det())
}

/// Power-cleared Lemma bound: (||w||^2)^d <= 2^(d(d-1)/2) * det^2.
pub fn first_vector_bound_holds(w: &[Integer], det: &Integer) -> bool {
    let d = w.len() as u32;
    let lhs = norm_sq(w).pow(d);
    let rhs = Integer::from(det.square_ref()) << (d * (d - 1) / 2);
    lhs <= rhs
}

pub fn norm_sq(v: &[Integer]) -> Integer {
    let mut s = Integer::new();
    for x in v {
        s += x.square_ref().complete();
    }
    s
}

/// Exact determinant of a square integer matrix by fraction-free
/// (Bareiss) elimination.
pub fn determinant(rows: &[Vec<Integer>]) -> Integer {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    if n == 0 {
        return Integer::from(1);
    }
    let mut m: Vec<Vec<Integer>> = rows.to_vec();
    let mut sign = 1i32;
    let mut prev = Integer::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Integer::new();
            };
            m.swap(k, pivot);
            sign = -sign;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let row_k = &head[k];
        for row_i in tail.iter_mut() {
            for j in k + 1..n {
                let mut t = (&row_k[k] * &row_i[j]).complete();
                t -= (&row_i[k] * &row_k[j]).complete();
                row_i[j] = t.div_exact(&prev);
            }
            row_i[k].assign(0);
        }
        prev.assign(&m[k][k]);
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det = -det;
    }
    det
}

// ---------------------------------------------------------------------
// Integral LLL internals
// ---------------------------------------------------------------------

struct State {
    d: usize,
    b: Vec<Vec<Integer>>,
    u: Option<Vec<Vec<Integer>>>,
    /// lam[i] holds lambda_{i,0..i}.
    lam: Vec<Vec<Integer>>,
    /// dd[0] = 1, dd[i+1] = Gram determinant of rows 0..=i (positive).
    dd: Vec<Integer>,
    t1: Integer,
    t2: Integer,
}

impl State {
    fn new(basis: &LatticeBasis, track: bool) -> Result<State> {
        let d = basis.dim();
        let b = basis.rows.clone();
        let u = track.then(|| identity(d));
        let mut st = State {
            d,
            b,
            u,
            lam: (0..d).map(|i| vec![Integer::new(); i]).collect(),
            dd: vec![Integer::new(); d + 1],
            t1: Integer::new(),
            t2: Integer::new(),
        };
        st.dd[0].assign(1);
        if basis.is_lower_triangular_nonzero_diag() {
            st.seed_triangular();
        } else {
            st.seed_general()?;
        }
        Ok(st)
    }

    /// For a lower-triangular basis the Gram-Schmidt vectors are the
    /// diagonal entries times unit vectors, so the tables come straight
    /// from the matrix entries.
    fn seed_triangular(&mut self) {
        for i in 0..self.d {
            let sq = self.b[i][i].square_ref().complete();
            self.dd[i + 1] = (&self.dd[i] * &sq).complete();
        }
        for i in 0..self.d {
            for j in 0..i {
                let mut v = (&self.b[i][j] * &self.b[j][j]).complete();
                v *= &self.dd[j];
                self.lam[i][j] = v;
            }
        }
    }

    fn seed_general(&mut self) -> Result<()> {
        for i in 0..self.d {
            for j in 0..=i {
                let mut s = dot(&self.b[i], &self.b[j]);
                for k in 0..j {
                    // s = (dd[k+1]*s - lam[i][k]*lam[j][k]) / dd[k]
                    s *= &self.dd[k + 1];
                    self.t1.assign(&self.lam[i][k] * &self.lam[j][k]);
                    s -= &self.t1;
                    s = exact_div(s, &self.dd[k]);
                }
                if j < i {
                    self.lam[i][j] = s;
                } else {
                    if s <= 0u32 {
                        return Err(Error::DependentRows);
                    }
                    self.dd[i + 1] = s;
                }
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        let mut k = 1usize;
        while k < self.d {
            self.size_reduce(k, k - 1);
            if self.lovasz_fails(k) {
                self.swap_step(k);
                k = k.max(2) - 1;
            } else {
                for l in (0..k.saturating_sub(1)).rev() {
                    self.size_reduce(k, l);
                }
                k += 1;
            }
        }
        if self.b[0].iter().all(|x| x.is_zero()) {
            return Err(Error::internal("LLL produced a zero first vector"));
        }
        Ok(())
    }

    /// Swap iff 4*(d_k*d_{k-2} + lambda^2) < 3*d_{k-1}^2.
    fn lovasz_fails(&mut self, k: usize) -> bool {
        self.t1.assign(&self.dd[k + 1] * &self.dd[k - 1]);
        self.t2.assign(self.lam[k][k - 1].square_ref());
        self.t1 += &self.t2;
        self.t1 <<= 2;
        self.t2.assign(self.dd[k].square_ref());
        self.t2 *= 3u32;
        self.t1 < self.t2
    }

    fn size_reduce(&mut self, k: usize, l: usize) {
        // skip unless |2*lambda| > d_{l}
        self.t1.assign(&self.lam[k][l] << 1i32);
        self.t1.abs_mut();
        if self.t1 <= self.dd[l + 1] {
            return;
        }
        let (q, _) = self.lam[k][l]
            .div_rem_round_ref(&self.dd[l + 1])
            .complete();
        // b_k -= q * b_l (and the transform row alongside)
        {
            let (head, tail) = self.b.split_at_mut(k);
            row_submul(&mut tail[0], &head[l], &q, &mut self.t1);
        }
        if let Some(u) = self.u.as_mut() {
            let (head, tail) = u.split_at_mut(k);
            row_submul(&mut tail[0], &head[l], &q, &mut self.t1);
        }
        self.t1.assign(&q * &self.dd[l + 1]);
        self.lam[k][l] -= &self.t1;
        let (head, tail) = self.lam.split_at_mut(k);
        let lam_l = &head[l];
        let lam_k = &mut tail[0];
        for i in 0..l {
            self.t1.assign(&q * &lam_l[i]);
            lam_k[i] -= &self.t1;
        }
    }

    fn swap_step(&mut self, k: usize) {
        self.b.swap(k, k - 1);
        if let Some(u) = self.u.as_mut() {
            u.swap(k, k - 1);
        }
        let (head, tail) = self.lam.split_at_mut(k);
        let lam_km1 = &mut head[k - 1];
        let lam_k = &mut tail[0];
        for j in 0..k - 1 {
            std::mem::swap(&mut lam_km1[j], &mut lam_k[j]);
        }
        let lamk = lam_k[k - 1].clone();

        // new d_{k-1} = (d_{k-2} * d_k + lambda^2) / d_{k-1}
        let mut bnew = (&self.dd[k - 1] * &self.dd[k + 1]).complete();
        self.t1.assign(lamk.square_ref());
        bnew += &self.t1;
        bnew = exact_div(bnew, &self.dd[k]);

        for i in k + 1..self.d {
            let t = std::mem::take(&mut self.lam[i][k]);
            // lam[i][k] = (d_k * lam[i][k-1] - lambda * t) / d_{k-1}
            let mut nik = (&self.dd[k + 1] * &self.lam[i][k - 1]).complete();
            self.t1.assign(&lamk * &t);
            nik -= &self.t1;
            nik = exact_div(nik, &self.dd[k]);
            // lam[i][k-1] = (bnew * t + lambda * lam[i][k]) / d_k
            let mut nikm1 = (&bnew * &t).complete();
            self.t1.assign(&lamk * &nik);
            nikm1 += &self.t1;
            nikm1 = exact_div(nikm1, &self.dd[k + 1]);
            self.lam[i][k] = nik;
            self.lam[i][k - 1] = nikm1;
        }
        self.dd[k] = bnew;
    }
}

fn identity(d: usize) -> Vec<Vec<Integer>> {
    (0..d)
        .map(|i| {
            let mut row = vec![Integer::new(); d];
            row[i].assign(1);
            row
        })
        .collect()
}

fn dot(a: &[Integer], b: &[Integer]) -> Integer {
    let mut s = Integer::new();
    for (x, y) in a.iter().zip(b) {
        s += (x * y).complete();
    }
    s
}

/// target -= q * source, elementwise, using a caller-provided scratch.
fn row_submul(target: &mut [Integer], source: &[Integer], q: &Integer, scratch: &mut Integer) {
    for (t, s) in target.iter_mut().zip(source) {
        if s.is_zero() {
            continue;
        }
        scratch.assign(q * s);
        *t -= &*scratch;
    }
}

fn exact_div(num: Integer, den: &Integer) -> Integer {
    debug_assert!(num.is_divisible(den), "inexact division in LLL tables");
    num.div_exact(den)
}
