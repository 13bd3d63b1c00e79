//! f-vectors, f-functions, h-vectors, the Dehn-Sommerville predicate, and
//! the Barycentric refinement operator on f-vectors.
//!
//! The f-function of a complex is `f_G(t) = 1 + Σ_k f_k t^{k+1}`, so
//! `f_G(−1) = 1 − χ(G)` and joins multiply f-functions. The h-function is
//! the expansion of `(x−1)^{d+1} f_G(1/(x−1))`; a complex is
//! Dehn-Sommerville when its h-vector is palindromic, equivalently when
//! `f(−1−t) = (−1)^{d+1} f(t)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::matrix::IntMatrix;
use crate::poly::FPolynomial;
use crate::simplex::SimplicialComplex;
use crate::{Error, Result};

/// Per-dimension element counts `(f_0, …, f_d)`; empty for the empty complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Count in dimension `k`, zero beyond the top dimension.
    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// Integer h-vector coefficients `(h_0, …, h_{d+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(Vec<BigInt>);

impl HVector {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }
}

/// Counts elements by dimension.
pub fn f_vector(g: &SimplicialComplex) -> FVector {
    let Some(d) = g.dimension() else {
        return FVector(Vec::new());
    };
    let mut counts = vec![0u64; d + 1];
    for x in g.elements() {
        counts[x.dimension()] += 1;
    }
    FVector(counts)
}

/// The generating polynomial `1 + Σ f_k t^{k+1}` with integer coefficients.
pub fn f_function(g: &SimplicialComplex) -> FPolynomial {
    let fv = f_vector(g);
    let mut coeffs = vec![BigRational::zero(); fv.len() + 1];
    coeffs[0] = BigRational::one();
    for (k, &c) in fv.counts().iter().enumerate() {
        coeffs[k + 1] = BigRational::from_integer(BigInt::from(c));
    }
    FPolynomial::from_coeffs(coeffs)
}

/// Formal antiderivative with zero constant term.
pub fn antiderivative(p: &FPolynomial) -> FPolynomial {
    p.antiderivative()
}

/// Expands `(x−1)^{d+1} f_G(1/(x−1))` into the integer h-vector of length
/// `dim(G) + 2`. Errors on the empty complex.
pub fn h_vector(g: &SimplicialComplex) -> Result<HVector> {
    let d = g.dimension().ok_or(Error::EmptyComplex)? as i64;
    let f = f_function(g);
    let cap = (d + 1) as usize;
    // h(x) = Σ_j c_j (x−1)^{cap−j}, with c_j the coefficient of t^j in f.
    let xm1 = FPolynomial::from_integer_coeffs(&[-1, 1]);
    let mut powers = Vec::with_capacity(cap + 1);
    powers.push(FPolynomial::one());
    for k in 1..=cap {
        powers.push(powers[k - 1].mul(&xm1));
    }
    let mut h = FPolynomial::zero();
    for j in 0..=cap {
        let c = FPolynomial::constant(f.coeff(j));
        h = h.add(&c.mul(&powers[cap - j]));
    }
    let coeffs = (0..=cap)
        .map(|k| {
            let c = h.coeff(k);
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    Ok(HVector(coeffs))
}

/// True when the h-vector is palindromic. Matches the f-function symmetry
/// `f(−1−t) = (−1)^{d+1} f(t)` (the shifted polynomial `f(t − 1/2)` is
/// even or odd); both routes are exposed so they can be cross-checked.
pub fn is_dehn_sommerville(g: &SimplicialComplex) -> Result<bool> {
    Ok(h_vector(g)?.is_palindromic())
}

/// The f-function symmetry route to the same predicate.
pub fn is_dehn_sommerville_by_symmetry(g: &SimplicialComplex) -> Result<bool> {
    let d = g.dimension().ok_or(Error::EmptyComplex)?;
    let f = f_function(g);
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    let reflected = f.compose_affine(&minus_one, &minus_one);
    let expected = if d % 2 == 0 { f.neg() } else { f };
    Ok(reflected == expected)
}

/// Dot product of the f-vector with an integer coefficient sequence;
/// the shorter side is zero-padded.
pub fn ds_residual(g: &SimplicialComplex, coeffs: &[i64]) -> i64 {
    let fv = f_vector(g);
    coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| c * fv.get(k) as i64)
        .sum()
}

fn stirling2(n: usize, k: usize) -> BigInt {
    // S(n, k): partitions of an n-set into k nonempty blocks.
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for _ in 1..=n {
        let mut next = vec![BigInt::zero(); k + 1];
        for j in 1..=k {
            next[j] = BigInt::from(j as u64) * &row[j] + &row[j - 1];
        }
        next[0] = BigInt::zero();
        row = next;
    }
    row[k].clone()
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

/// The (d+1)×(d+1) matrix taking the f-vector of a complex of dimension at
/// most d to the f-vector of its Barycentric refinement:
/// `Q[k][j] = Stirling2(j+1, k+1) · (k+1)!` on 0-based dimension indices.
pub fn barycentric_operator(d: usize) -> IntMatrix {
    IntMatrix::from_fn(d + 1, d + 1, |k, j| {
        stirling2(j + 1, k + 1) * factorial(k + 1)
    })
}

/// Applies the Barycentric operator of matching size to an f-vector.
pub fn apply_barycentric_operator(fv: &FVector) -> FVector {
    if fv.is_empty() {
        return FVector(Vec::new());
    }
    let d = fv.len() - 1;
    let q = barycentric_operator(d);
    let out = (0..=d)
        .map(|k| {
            let mut acc = BigInt::zero();
            for j in 0..=d {
                acc += q.get(k, j) * BigInt::from(fv.get(j));
            }
            acc.to_u64().expect("refinement counts fit u64")
        })
        .collect();
    FVector(out)
}

/// Checks that the alternating vector `(1, −1, 1, …)` is fixed by the
/// transpose of the Barycentric operator, exactly.
pub fn alternating_eigenvector_check(d: usize) -> bool {
    let q = barycentric_operator(d);
    (0..=d).all(|j| {
        let mut acc = BigInt::zero();
        for k in 0..=d {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            acc += q.get(k, j) * BigInt::from(sign);
        }
        let want = BigInt::from(if j % 2 == 0 { 1i64 } else { -1 });
        acc == want
    })
}
