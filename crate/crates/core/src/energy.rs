//! Connection Laplacian, Green matrices, and the energy and sphere
//! formulas.
//!
//! For a complex with elements `x_1 < … < x_n` in canonical order, the
//! connection Laplacian is `L(x,y) = 1` iff `x ∩ y ≠ ∅`. Its exact inverse
//! is the Green matrix `g(x,y) = w(x) w(y) χ(U(x) ∩ U(y))`, a unimodular
//! integer matrix. The sphere Green matrix `s(x,y) = w(x) w(y) χ(S(x) ∩
//! S(y))` has vanishing super trace; its nullity is recorded as experiment
//! data, never asserted.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::matrix::IntMatrix;
use crate::simplex::SimplicialComplex;
use crate::{Error, Result};

/// Default ceiling on element count before dense matrix work.
pub const DEFAULT_MAX_MATRIX_ELEMENTS: usize = 400;

fn guard(g: &SimplicialComplex, limit: usize) -> Result<usize> {
    let n = g.len();
    if n == 0 {
        return Err(Error::EmptyComplex);
    }
    if n > limit {
        return Err(Error::TooLarge {
            elements: n,
            limit,
        });
    }
    Ok(n)
}

/// Bitset rows over the canonical element order, split by parity so signed
/// counts reduce to popcounts.
struct LocalSets {
    words: usize,
    rows: Vec<Vec<u64>>,
    even_mask: Vec<u64>,
    odd_mask: Vec<u64>,
}

impl LocalSets {
    fn stars(g: &SimplicialComplex) -> Self {
        Self::build(g, |g, i| {
            let x = &g.elements()[i];
            (0..g.len())
                .filter(|&j| x.is_face_of(&g.elements()[j]))
                .collect()
        })
    }

    fn spheres(g: &SimplicialComplex) -> Self {
        // S(x): faces of supersets of x that do not themselves contain x.
        Self::build(g, |g, i| {
            let x = &g.elements()[i];
            let star: Vec<usize> = (0..g.len())
                .filter(|&j| x.is_face_of(&g.elements()[j]))
                .collect();
            let mut in_ball = vec![false; g.len()];
            for &j in &star {
                let sup = &g.elements()[j];
                for (k, y) in g.elements().iter().enumerate() {
                    if !in_ball[k] && y.is_face_of(sup) {
                        in_ball[k] = true;
                    }
                }
            }
            for &j in &star {
                in_ball[j] = false;
            }
            (0..g.len()).filter(|&k| in_ball[k]).collect()
        })
    }

    fn build(g: &SimplicialComplex, member_fn: impl Fn(&SimplicialComplex, usize) -> Vec<usize>) -> Self {
        let n = g.len();
        let words = n.div_ceil(64);
        let mut even_mask = vec![0u64; words];
        let mut odd_mask = vec![0u64; words];
        for (i, x) in g.elements().iter().enumerate() {
            if x.dimension() % 2 == 0 {
                even_mask[i / 64] |= 1 << (i % 64);
            } else {
                odd_mask[i / 64] |= 1 << (i % 64);
            }
        }
        let rows = (0..n)
            .map(|i| {
                let mut row = vec![0u64; words];
                for j in member_fn(g, i) {
                    row[j / 64] |= 1 << (j % 64);
                }
                row
            })
            .collect();
        Self {
            words,
            rows,
            even_mask,
            odd_mask,
        }
    }

    /// χ of the set encoded by row `i`.
    fn chi(&self, i: usize) -> i64 {
        let mut acc = 0i64;
        for w in 0..self.words {
            let r = self.rows[i][w];
            acc += (r & self.even_mask[w]).count_ones() as i64;
            acc -= (r & self.odd_mask[w]).count_ones() as i64;
        }
        acc
    }

    /// χ of the intersection of rows `i` and `j`.
    fn chi_intersection(&self, i: usize, j: usize) -> i64 {
        let mut acc = 0i64;
        for w in 0..self.words {
            let r = self.rows[i][w] & self.rows[j][w];
            acc += (r & self.even_mask[w]).count_ones() as i64;
            acc -= (r & self.odd_mask[w]).count_ones() as i64;
        }
        acc
    }
}

fn weights(g: &SimplicialComplex) -> Vec<i64> {
    g.elements().iter().map(|x| x.weight()).collect()
}

/// The 0/1 simplex-intersection matrix. Symmetric with unit diagonal.
pub fn connection_laplacian_with_limit(
    g: &SimplicialComplex,
    limit: usize,
) -> Result<IntMatrix> {
    let n = guard(g, limit)?;
    let els = g.elements();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, BigInt::one());
        for j in i + 1..n {
            if els[i].intersects(&els[j]) {
                m.set(i, j, BigInt::one());
                m.set(j, i, BigInt::one());
            }
        }
    }
    Ok(m)
}

pub fn connection_laplacian(g: &SimplicialComplex) -> Result<IntMatrix> {
    connection_laplacian_with_limit(g, DEFAULT_MAX_MATRIX_ELEMENTS)
}

/// The Green matrix `g(x,y) = w(x) w(y) χ(U(x) ∩ U(y))`, the exact integer
/// inverse of the connection Laplacian.
pub fn green_matrix_with_limit(g: &SimplicialComplex, limit: usize) -> Result<IntMatrix> {
    let n = guard(g, limit)?;
    let stars = LocalSets::stars(g);
    let w = weights(g);
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = w[i] * w[j] * stars.chi_intersection(i, j);
            m.set(i, j, BigInt::from(v));
            if i != j {
                m.set(j, i, BigInt::from(v));
            }
        }
    }
    Ok(m)
}

pub fn green_matrix(g: &SimplicialComplex) -> Result<IntMatrix> {
    green_matrix_with_limit(g, DEFAULT_MAX_MATRIX_ELEMENTS)
}

/// The sphere Green matrix `s(x,y) = w(x) w(y) χ(S(x) ∩ S(y))`.
pub fn sphere_matrix_with_limit(g: &SimplicialComplex, limit: usize) -> Result<IntMatrix> {
    let n = guard(g, limit)?;
    let spheres = LocalSets::spheres(g);
    let w = weights(g);
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = w[i] * w[j] * spheres.chi_intersection(i, j);
            m.set(i, j, BigInt::from(v));
            if i != j {
                m.set(j, i, BigInt::from(v));
            }
        }
    }
    Ok(m)
}

pub fn sphere_matrix(g: &SimplicialComplex) -> Result<IntMatrix> {
    sphere_matrix_with_limit(g, DEFAULT_MAX_MATRIX_ELEMENTS)
}

/// `Σ_x w(x) M(x,x)` for a matrix indexed by the canonical order of `G`.
pub fn super_trace(g: &SimplicialComplex, m: &IntMatrix) -> Result<BigInt> {
    if m.rows() != g.len() || m.cols() != g.len() {
        return Err(Error::OrderMismatch {
            matrix: m.rows(),
            complex: g.len(),
        });
    }
    let mut acc = BigInt::ZERO;
    for (i, x) in g.elements().iter().enumerate() {
        acc += m.get(i, i) * BigInt::from(x.weight());
    }
    Ok(acc)
}

/// The potential `V(x) = w(x) χ(U(x))`, which equals the row sum of the
/// Green matrix at `x`; potentials sum to χ(G).
pub fn potential(g: &SimplicialComplex, x: &crate::simplex::Simplex) -> Result<i64> {
    let u = g.star(x)?;
    Ok(x.weight() * u.euler_characteristic())
}

/// `Σ_x w(x) χ(U(x))`, finite without any matrix work.
pub fn total_star_energy(g: &SimplicialComplex) -> i64 {
    let stars = LocalSets::stars(g);
    weights(g)
        .iter()
        .enumerate()
        .map(|(i, w)| w * stars.chi(i))
        .sum()
}

/// `Σ_x w(x) χ(S(x))`.
pub fn total_sphere_energy(g: &SimplicialComplex) -> i64 {
    let spheres = LocalSets::spheres(g);
    weights(g)
        .iter()
        .enumerate()
        .map(|(i, w)| w * spheres.chi(i))
        .sum()
}

/// Verification bundle for a single complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyReport {
    /// `Σ_x w(x) χ(U(x)) = χ(G)` held.
    pub energy_ok: bool,
    /// `Σ_x w(x) χ(S(x)) = 0` held.
    pub sphere_ok: bool,
    pub det_g: BigInt,
    pub nullity_s: usize,
}

/// Runs the energy and sphere identities and attaches the Green matrix
/// determinant and sphere-matrix nullity.
pub fn verify_energy_and_sphere_with_limit(
    g: &SimplicialComplex,
    limit: usize,
) -> Result<EnergyReport> {
    guard(g, limit)?;
    let energy_ok = total_star_energy(g) == g.euler_characteristic();
    let sphere_ok = total_sphere_energy(g) == 0;
    let det_g = green_matrix_with_limit(g, limit)?.determinant()?;
    let nullity_s = sphere_matrix_with_limit(g, limit)?.nullity()?;
    Ok(EnergyReport {
        energy_ok,
        sphere_ok,
        det_g,
        nullity_s,
    })
}

pub fn verify_energy_and_sphere(g: &SimplicialComplex) -> Result<EnergyReport> {
    verify_energy_and_sphere_with_limit(g, DEFAULT_MAX_MATRIX_ELEMENTS)
}

/// True when the determinant is +1 or −1.
pub fn is_unimodular(det: &BigInt) -> bool {
    det.abs().is_one()
}
