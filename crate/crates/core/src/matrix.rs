//! Dense matrices over arbitrary-precision integers, with exact
//! determinants and ranks.
//!
//! Determinants use fraction-free Bareiss elimination. A fixed-width i128
//! pass handles the common case; when intermediate minors overflow, the
//! computation falls back to a multi-modular pass whose prime count is
//! certified by an integer Hadamard bound, so the result is exact with no
//! floating point involved. Ranks use fraction-free echelon elimination
//! (i128 first, big integers on overflow).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Row-major dense matrix of big integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Self::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    /// Matrix product. Uses i64/i128 arithmetic when every entry fits,
    /// which covers the hot paths (Laplacian inverses, block powers).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        if let (Some(a), Some(b)) = (self.to_i64_vec(), other.to_i64_vec()) {
            if let Some(prod) = mul_i64(&a, &b, self.rows, self.cols, other.cols) {
                return Self {
                    rows: self.rows,
                    cols: other.cols,
                    data: prod.into_iter().map(BigInt::from).collect(),
                };
            }
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Copies the sub-block with the given half-open row/column ranges.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        assert!(r1 <= self.rows && c1 <= self.cols && r0 <= r1 && c0 <= c1);
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.data
            .iter()
            .map(|x| i64::try_from(x).ok())
            .collect::<Option<Vec<i64>>>()
    }

    fn to_i128_vec(&self) -> Option<Vec<i128>> {
        self.data
            .iter()
            .map(|x| i128::try_from(x).ok())
            .collect::<Option<Vec<i128>>>()
    }

    /// Exact determinant.
    ///
    /// Fraction-free Bareiss elimination in i128; if an intermediate minor
    /// overflows, falls back to a certified multi-modular computation.
    pub fn determinant(&self) -> Result<BigInt> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        if let Some(small) = self.to_i128_vec() {
            if let Some(det) = bareiss_det_i128(small, n) {
                return Ok(BigInt::from(det));
            }
        }
        Ok(self.determinant_modular())
    }

    /// Multi-modular determinant with an integer Hadamard bound: enough
    /// 62-bit primes are used that the CRT residue determines the exact
    /// integer determinant.
    fn determinant_modular(&self) -> BigInt {
        let n = self.rows;
        // Hadamard: |det|^2 <= prod_i (sum_j a_ij^2). Work in bit lengths.
        let mut bound_bits = 1u64;
        for i in 0..n {
            let mut s = BigInt::zero();
            for j in 0..n {
                let a = self.get(i, j);
                s += a * a;
            }
            if s.is_zero() {
                return BigInt::zero();
            }
            bound_bits += s.bits().div_ceil(2);
        }
        let mut primes = PrimeStream::new();
        let mut residues: Vec<(u64, u64)> = Vec::new();
        let mut modulus_bits = 0u64;
        while modulus_bits <= bound_bits + 1 {
            let p = primes.next_prime();
            let d = det_mod_p(self, p);
            residues.push((p, d));
            modulus_bits += 61;
        }
        crt_lift(&residues)
    }

    /// Exact rank over the rationals, by fraction-free echelon elimination
    /// with column pivoting on the first nonzero entry in canonical order.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if let Some(small) = self.to_i128_vec() {
            if let Some(r) = rank_echelon_i128(small, self.rows, self.cols) {
                return r;
            }
        }
        rank_echelon_big(self.data.clone(), self.rows, self.cols)
    }

    /// Order minus exact rank (square matrices).
    pub fn nullity(&self) -> Result<usize> {
        self.require_square()?;
        Ok(self.rows - self.rank())
    }

    /// Exact integer power of a square matrix.
    pub fn pow(&self, e: u32) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

fn mul_i64(a: &[i64], b: &[i64], n: usize, k: usize, m: usize) -> Option<Vec<i64>> {
    let mut out = vec![0i64; n * m];
    for i in 0..n {
        for l in 0..k {
            let av = a[i * k + l];
            if av == 0 {
                continue;
            }
            let av = av as i128;
            for j in 0..m {
                let prod = av * b[l * m + j] as i128;
                let cur = out[i * m + j] as i128 + prod;
                out[i * m + j] = i64::try_from(cur).ok()?;
            }
        }
    }
    Some(out)
}

/// One-step Bareiss over i128. Returns `None` on overflow.
fn bareiss_det_i128(mut m: Vec<i128>, n: usize) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&r| m[r * n + k] != 0) else {
            return Some(0);
        };
        if pivot_row != k {
            for j in 0..n {
                m.swap(pivot_row * n + j, k * n + j);
            }
            sign = -sign;
        }
        let pivot = m[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                let t1 = pivot.checked_mul(m[i * n + j])?;
                let t2 = m[i * n + k].checked_mul(m[k * n + j])?;
                let num = t1.checked_sub(t2)?;
                debug_assert_eq!(num % prev, 0);
                m[i * n + j] = num / prev;
            }
            m[i * n + k] = 0;
        }
        prev = pivot;
    }
    Some(sign * m[(n - 1) * n + (n - 1)])
}

fn rank_echelon_i128(mut m: Vec<i128>, rows: usize, cols: usize) -> Option<usize> {
    let mut prev = 1i128;
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
            continue;
        };
        if pivot_row != rank {
            for j in 0..cols {
                m.swap(pivot_row * cols + j, rank * cols + j);
            }
        }
        let pivot = m[rank * cols + col];
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t1 = pivot.checked_mul(m[i * cols + j])?;
                let t2 = m[i * cols + col].checked_mul(m[rank * cols + j])?;
                let num = t1.checked_sub(t2)?;
                debug_assert_eq!(num % prev, 0);
                m[i * cols + j] = num / prev;
            }
            m[i * cols + col] = 0;
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn rank_echelon_big(mut m: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r * cols + col].is_zero()) else {
            continue;
        };
        if pivot_row != rank {
            for j in 0..cols {
                m.swap(pivot_row * cols + j, rank * cols + j);
            }
        }
        let pivot = m[rank * cols + col].clone();
        for i in rank + 1..rows {
            // Even with a zero head the row must be rescaled by pivot/prev
            // to keep later exact divisions valid.
            let head = m[i * cols + col].clone();
            for j in col + 1..cols {
                let num = &pivot * &m[i * cols + j] - &head * &m[rank * cols + j];
                debug_assert!((&num % &prev).is_zero());
                m[i * cols + j] = num / &prev;
            }
            m[i * cols + col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Deterministic Miller-Rabin for u64 (the first twelve prime bases decide
/// primality for all 64-bit integers).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Streams distinct primes descending from just below 2^62.
struct PrimeStream {
    next_candidate: u64,
}

impl PrimeStream {
    fn new() -> Self {
        Self {
            next_candidate: (1u64 << 62) - 1,
        }
    }

    fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next_candidate;
            self.next_candidate -= 2;
            if is_prime_u64(c) {
                return c;
            }
        }
    }
}

/// Determinant modulo a prime via ordinary Gaussian elimination.
fn det_mod_p(m: &IntMatrix, p: u64) -> u64 {
    let n = m.rows();
    let pb = BigInt::from(p);
    let mut a = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            let r = ((m.get(i, j) % &pb) + &pb) % &pb;
            a[i * n + j] = u64::try_from(&r).unwrap();
        }
    }
    let mut det = 1u64;
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&r| a[r * n + k] != 0) else {
            return 0;
        };
        if pivot_row != k {
            for j in 0..n {
                a.swap(pivot_row * n + j, k * n + j);
            }
            det = p - det;
            if det == p {
                det = 0;
            }
        }
        let pivot = a[k * n + k];
        det = mul_mod(det, pivot, p);
        let inv = pow_mod(pivot, p - 2, p);
        for i in k + 1..n {
            if a[i * n + k] == 0 {
                continue;
            }
            let factor = mul_mod(a[i * n + k], inv, p);
            for j in k..n {
                let sub = mul_mod(factor, a[k * n + j], p);
                let v = a[i * n + j];
                a[i * n + j] = if v >= sub { v - sub } else { v + p - sub };
            }
        }
    }
    det
}

/// Garner-style CRT combination with a centered lift.
fn crt_lift(residues: &[(u64, u64)]) -> BigInt {
    let mut modulus = BigInt::one();
    let mut value = BigInt::zero();
    for &(p, r) in residues {
        let pb = BigInt::from(p);
        // Solve value' ≡ value (mod modulus), value' ≡ r (mod p).
        let rem = ((&value % &pb) + &pb) % &pb;
        let rem = u64::try_from(&rem).unwrap();
        let delta = if r >= rem { r - rem } else { r + p - rem };
        let minv = {
            let m_mod_p = ((&modulus % &pb) + &pb) % &pb;
            let m_mod_p = u64::try_from(&m_mod_p).unwrap();
            pow_mod(m_mod_p, p - 2, p)
        };
        let t = mul_mod(delta, minv, p);
        value += &modulus * BigInt::from(t);
        modulus *= &pb;
    }
    // Centered representative in (-modulus/2, modulus/2].
    let half = &modulus >> 1;
    if value > half {
        value -= &modulus;
    }
    value
}
