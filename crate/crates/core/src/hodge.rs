//! Exterior derivative, Hodge Laplacian, exact Betti numbers, and the
//! Euler-Poincaré and McKean-Singer identities.
//!
//! The reference orientation of each simplex is its ascending vertex order;
//! dropping the i-th smallest vertex carries sign `(−1)^i`. Any other
//! orientation choice conjugates the derivative by a diagonal sign matrix
//! and leaves every rank and nullity unchanged. Betti numbers come from the
//! rank-nullity route `b_k = f_k − rank(d_k) − rank(d_{k−1})` with exact
//! integer ranks, which coincides with the nullity of the k-th diagonal
//! block of `L = (d + dᵀ)²`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matrix::IntMatrix;
use crate::simplex::SimplicialComplex;
use crate::valuations::f_vector;
use crate::{Error, Result};

/// Half-open index ranges of the k-dimensional elements in canonical order
/// (canonical order sorts by cardinality, so the blocks are contiguous).
pub fn dimension_blocks(g: &SimplicialComplex) -> Vec<std::ops::Range<usize>> {
    let fv = f_vector(g);
    let mut out = Vec::with_capacity(fv.len());
    let mut start = 0usize;
    for &count in fv.counts() {
        out.push(start..start + count as usize);
        start += count as usize;
    }
    out
}

/// The full n×n exterior derivative: entry (x, y) holds the face sign for
/// every codimension-one pair `y ⊂ x`. Satisfies `d² = 0` exactly.
pub fn exterior_derivative(g: &SimplicialComplex) -> Result<IntMatrix> {
    if g.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let n = g.len();
    let mut d = IntMatrix::zeros(n, n);
    for (row, x) in g.elements().iter().enumerate() {
        if x.dimension() == 0 {
            continue;
        }
        for (i, face) in x.facets().iter().enumerate() {
            // facets() drops vertex i in ascending order.
            let col = g.index_of(face).expect("complexes are subset-closed");
            let sign = if i % 2 == 0 { 1 } else { -1 };
            d.set(row, col, BigInt::from(sign));
        }
    }
    Ok(d)
}

/// Hodge Laplacian `L = (d + dᵀ)²`, block diagonal by dimension.
pub fn hodge_laplacian(g: &SimplicialComplex) -> Result<IntMatrix> {
    let d = exterior_derivative(g)?;
    let dirac = d.add(&d.transpose());
    Ok(dirac.mul(&dirac))
}

/// The block of `d` mapping k-forms to (k+1)-forms, as a
/// `f_{k+1} × f_k` matrix.
pub fn derivative_block(g: &SimplicialComplex, k: usize) -> Result<IntMatrix> {
    let d = exterior_derivative(g)?;
    let blocks = dimension_blocks(g);
    if k + 1 >= blocks.len() {
        let cols = blocks.get(k).map_or(0, |r| r.len());
        return Ok(IntMatrix::zeros(0, cols));
    }
    let rows = blocks[k + 1].clone();
    let cols = blocks[k].clone();
    Ok(d.block(rows.start, rows.end, cols.start, cols.end))
}

/// Betti numbers `b_0..b_dim` over the rationals, via exact ranks of the
/// derivative blocks.
pub fn betti(g: &SimplicialComplex) -> Result<Vec<usize>> {
    if g.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let fv = f_vector(g);
    let dim = fv.len() - 1;
    let d = exterior_derivative(g)?;
    let blocks = dimension_blocks(g);
    let rank_of = |k: usize| -> usize {
        if k + 1 > dim {
            return 0;
        }
        let rows = blocks[k + 1].clone();
        let cols = blocks[k].clone();
        d.block(rows.start, rows.end, cols.start, cols.end).rank()
    };
    let mut ranks = vec![0usize; dim + 1];
    for (k, slot) in ranks.iter_mut().enumerate() {
        if k < dim {
            *slot = rank_of(k);
        }
    }
    let mut out = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let below = if k == 0 { 0 } else { ranks[k - 1] };
        out.push(fv.get(k) as usize - ranks.get(k).copied().unwrap_or(0) - below);
    }
    Ok(out)
}

/// `Σ_k (−1)^k b_k = χ(G)`.
pub fn euler_poincare_check(g: &SimplicialComplex) -> Result<bool> {
    let b = betti(g)?;
    let alt: i64 = b
        .iter()
        .enumerate()
        .map(|(k, &v)| if k % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum();
    Ok(alt == g.euler_characteristic())
}

/// Super trace of every Hodge Laplacian power up to `m_max` vanishes:
/// the exact finite form of the heat-kernel statement (together with the
/// trivial `str(L⁰) = χ`). Computed per dimension block.
pub fn mckean_singer_check(g: &SimplicialComplex, m_max: u32) -> Result<bool> {
    if m_max < 1 {
        return Err(Error::InvalidParameter(
            "m_max must be at least 1".into(),
        ));
    }
    let l = hodge_laplacian(g)?;
    let blocks = dimension_blocks(g);
    // The Laplacian must be block diagonal for the per-block powers below.
    for (bi, rows) in blocks.iter().enumerate() {
        for (bj, cols) in blocks.iter().enumerate() {
            if bi == bj {
                continue;
            }
            for i in rows.clone() {
                for j in cols.clone() {
                    if !l.get(i, j).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    // str(L^0) = χ(G) holds by construction of the blocks.
    let alt_f: i64 = blocks
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let len = r.len() as i64;
            if k % 2 == 0 {
                len
            } else {
                -len
            }
        })
        .sum();
    if alt_f != g.euler_characteristic() {
        return Ok(false);
    }
    let per_block: Vec<IntMatrix> = blocks
        .iter()
        .map(|r| l.block(r.start, r.end, r.start, r.end))
        .collect();
    let mut powers = per_block.clone();
    for _ in 1..=m_max {
        let mut str_m = BigInt::zero();
        for (k, p) in powers.iter().enumerate() {
            let t = p.trace();
            if k % 2 == 0 {
                str_m += t;
            } else {
                str_m -= t;
            }
        }
        if !str_m.is_zero() {
            return Ok(false);
        }
        powers = powers
            .iter()
            .zip(per_block.iter())
            .map(|(p, b)| p.mul(b))
            .collect();
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cross_polytope, named_skeleton, projective_plane, random_whitney, Skeleton};
    use crate::matrix::IntMatrix;

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets([vec![1u32, 2, 3]]).unwrap()
    }

    #[test]
    fn derivative_examples() {
        let p = SimplicialComplex::from_facets([vec![1u32]]).unwrap();
        assert!(exterior_derivative(&p).unwrap().is_zero());

        let edge = SimplicialComplex::from_facets([vec![1u32, 2]]).unwrap();
        let d = exterior_derivative(&edge).unwrap();
        // Canonical order {1},{2},{1,2}: d(edge) = {2} - {1}.
        assert_eq!(d.get(2, 0), &BigInt::from(-1));
        assert_eq!(d.get(2, 1), &BigInt::from(1));
        assert!(d.mul(&d).is_zero());

        let t = exterior_derivative(&triangle()).unwrap();
        assert!(t.mul(&t).is_zero());
    }

    #[test]
    fn d_squared_zero_everywhere() {
        for g in [
            cross_polytope(2),
            cross_polytope(3),
            projective_plane(),
            random_whitney(9, 22, 8).unwrap(),
        ] {
            let d = exterior_derivative(&g).unwrap();
            assert!(d.mul(&d).is_zero());
        }
    }

    #[test]
    fn laplacian_examples() {
        let p = SimplicialComplex::from_facets([vec![1u32]]).unwrap();
        assert!(hodge_laplacian(&p).unwrap().is_zero());

        let two = SimplicialComplex::from_facets([vec![1u32], vec![2]]).unwrap();
        assert!(hodge_laplacian(&two).unwrap().is_zero());

        let c4 = named_skeleton(Skeleton::Cycle(4)).unwrap();
        let l = hodge_laplacian(&c4).unwrap();
        assert!(l.is_symmetric());
        // 0-block is the cycle graph Laplacian: kernel dimension 1.
        let l0 = l.block(0, 4, 0, 4);
        assert_eq!(l0.nullity().unwrap(), 1);
    }

    #[test]
    fn betti_examples() {
        let two = SimplicialComplex::from_facets([vec![1u32], vec![2]]).unwrap();
        assert_eq!(betti(&two).unwrap(), vec![2]);

        let c4 = named_skeleton(Skeleton::Cycle(4)).unwrap();
        assert_eq!(betti(&c4).unwrap(), vec![1, 1]);

        assert_eq!(betti(&cross_polytope(2)).unwrap(), vec![1, 0, 1]);
        assert_eq!(betti(&cross_polytope(3)).unwrap(), vec![1, 0, 0, 1]);

        // Rational coefficients kill the 2-torsion.
        assert_eq!(betti(&projective_plane()).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn betti_matches_laplacian_block_nullity() {
        for g in [
            triangle(),
            named_skeleton(Skeleton::Cycle(4)).unwrap(),
            cross_polytope(2),
            projective_plane(),
        ] {
            let b = betti(&g).unwrap();
            let l = hodge_laplacian(&g).unwrap();
            let blocks = dimension_blocks(&g);
            for (k, r) in blocks.iter().enumerate() {
                let nk = l.block(r.start, r.end, r.start, r.end).nullity().unwrap();
                assert_eq!(b[k], nk, "dimension {k}");
            }
        }
    }

    #[test]
    fn betti_is_orientation_independent() {
        // Conjugating d by a diagonal sign matrix is a change of reference
        // orientations; ranks of all blocks must be unchanged.
        let g = random_whitney(8, 18, 15).unwrap();
        let d = exterior_derivative(&g).unwrap();
        let n = g.len();
        let mut signs = vec![1i64; n];
        let mut state = 0xc0ffee123456789u64;
        for s in signs.iter_mut() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if state % 2 == 0 {
                *s = -1;
            }
        }
        let s = IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::from(signs[i])
            } else {
                BigInt::zero()
            }
        });
        let d2 = s.mul(&d).mul(&s);
        let blocks = dimension_blocks(&g);
        for k in 0..blocks.len().saturating_sub(1) {
            let rows = blocks[k + 1].clone();
            let cols = blocks[k].clone();
            assert_eq!(
                d.block(rows.start, rows.end, cols.start, cols.end).rank(),
                d2.block(rows.start, rows.end, cols.start, cols.end).rank()
            );
        }
    }

    #[test]
    fn euler_poincare_examples() {
        for g in [
            named_skeleton(Skeleton::Cycle(4)).unwrap(),
            cross_polytope(2),
            projective_plane(),
            random_whitney(9, 20, 12).unwrap(),
        ] {
            assert!(euler_poincare_check(&g).unwrap());
        }
    }

    #[test]
    fn mckean_singer_examples() {
        let p = SimplicialComplex::from_facets([vec![1u32]]).unwrap();
        assert!(mckean_singer_check(&p, 3).unwrap());

        let c4 = named_skeleton(Skeleton::Cycle(4)).unwrap();
        assert!(mckean_singer_check(&c4, 5).unwrap());

        let rand = random_whitney(9, 20, 14).unwrap();
        assert!(mckean_singer_check(&rand, 3).unwrap());

        assert!(mckean_singer_check(&c4, 0).is_err());
    }
}
