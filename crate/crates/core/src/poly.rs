//! Exact univariate polynomials with rational coefficients.
//!
//! Used for f-functions `f_G(t) = 1 + Σ f_k t^{k+1}`, their formal
//! antiderivatives, and h-function expansions. All arithmetic is exact;
//! "integration" is the coefficient rule `∫ t^n = t^{n+1}/(n+1)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with exact rational coefficients, `coeffs[k]` the coefficient
/// of `t^k`. Trailing zeros are trimmed so degree is well defined.
#[derive(Clone, PartialEq, Eq)]
pub struct FPolynomial {
    coeffs: Vec<BigRational>,
}

impl FPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_integer_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_i64(&self, t: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(t)))
    }

    /// Substitutes `t -> a + b*t`, expanding exactly.
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        // Horner in the polynomial ring: p(a+bt) built highest degree first.
        let arg = Self::from_coeffs(vec![a.clone(), b.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&arg).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Formal antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] = c / BigRational::from_integer(BigInt::from(k as i64 + 1));
        }
        Self::from_coeffs(out)
    }
}

impl fmt::Debug for FPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 => {
                    if a.is_one() {
                        write!(f, "t")?;
                    } else {
                        write!(f, "{a} t")?;
                    }
                }
                _ => {
                    if a.is_one() {
                        write!(f, "t^{k}")?;
                    } else {
                        write!(f, "{a} t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic() {
        let p = FPolynomial::from_integer_coeffs(&[1, 4, 4]); // 1+4t+4t^2
        let q = FPolynomial::from_integer_coeffs(&[1, 2]); // 1+2t
        assert_eq!(q.mul(&q), FPolynomial::from_integer_coeffs(&[1, 4, 4]));
        assert_eq!(p.sub(&p), FPolynomial::zero());
        assert_eq!(p.eval_i64(-1), rat(1, 1));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn antiderivative_examples() {
        let one = FPolynomial::one();
        assert_eq!(one.antiderivative(), FPolynomial::from_integer_coeffs(&[0, 1]));
        let p = FPolynomial::from_integer_coeffs(&[1, 2]);
        assert_eq!(p.antiderivative(), FPolynomial::from_integer_coeffs(&[0, 1, 1]));
        let c4 = FPolynomial::from_integer_coeffs(&[1, 4, 4]);
        let f = c4.antiderivative();
        assert_eq!(f.coeff(0), rat(0, 1));
        assert_eq!(f.coeff(1), rat(1, 1));
        assert_eq!(f.coeff(2), rat(2, 1));
        assert_eq!(f.coeff(3), rat(4, 3));
    }

    #[test]
    fn compose_affine_substitutes() {
        // p(t) = t^2; p(-1-t) = 1 + 2t + t^2
        let p = FPolynomial::from_integer_coeffs(&[0, 0, 1]);
        let got = p.compose_affine(&rat(-1, 1), &rat(-1, 1));
        assert_eq!(got, FPolynomial::from_integer_coeffs(&[1, 2, 1]));
        // Affine substitution is degree preserving.
        assert_eq!(got.degree(), Some(2));
    }

    #[test]
    fn display_renders_signs() {
        let p = FPolynomial::from_coeffs(vec![rat(0, 1), rat(1, 1), rat(-4, 3)]);
        assert_eq!(p.to_string(), "t - 4/3 t^2");
    }
}
