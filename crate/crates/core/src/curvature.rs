//! Curvature, Poincaré-Hopf indices, center manifolds, and discrete Sard
//! level sets.
//!
//! Curvature lives on vertices: `K(v) = 1 − f_0(S(v))/2 + f_1(S(v))/3 − …`
//! (equivalently `−F_{S(v)}(−1)` for the antiderivative `F` of the link
//! f-function), and Gauss-Bonnet says the curvatures sum to χ(G). A locally
//! injective vertex function `f` has Poincaré-Hopf index
//! `i_f(v) = 1 − χ(S⁻_f(v))`, which also equals the signed count of
//! simplices whose f-maximum sits at `v`; indices sum to χ(G), and
//! averaging indices over all vertex orderings recovers the curvature.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::generators::{whitney, Graph};
use crate::homotopy::HomotopyEngine;
use crate::poly::FPolynomial;
use crate::simplex::{Simplex, SimplexSet, SimplicialComplex};
use crate::valuations::{antiderivative, f_function, f_vector};
use crate::{Error, Result};

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Per-vertex exact curvatures and their total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureProfile {
    per_vertex: Vec<(u32, BigRational)>,
    total: BigRational,
}

impl CurvatureProfile {
    pub fn per_vertex(&self) -> &[(u32, BigRational)] {
        &self.per_vertex
    }

    pub fn total(&self) -> &BigRational {
        &self.total
    }

    pub fn value_at(&self, v: u32) -> Option<&BigRational> {
        self.per_vertex
            .iter()
            .find(|(u, _)| *u == v)
            .map(|(_, k)| k)
    }
}

/// Levitt curvature per vertex:
/// `K(v) = Σ_{k=−1}^{dim} (−1)^{k+1} f_k(S(v)) / (k+2)` with `f_{−1} = 1`.
pub fn levitt_curvature(g: &SimplicialComplex) -> Result<CurvatureProfile> {
    if g.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let mut per_vertex = Vec::new();
    let mut total = BigRational::zero();
    for v in g.vertex_labels() {
        let link = g.unit_sphere_complex(&Simplex::vertex(v)?)?;
        let fv = f_vector(&link);
        // k = −1 contributes +1/1.
        let mut k_v = BigRational::one();
        for (k, &count) in fv.counts().iter().enumerate() {
            let sign = if k % 2 == 0 { -1 } else { 1 };
            k_v += rational(sign * count as i64, k as i64 + 2);
        }
        debug_assert_eq!(
            k_v,
            -antiderivative(&f_function(&link)).eval_i64(-1),
            "curvature disagrees with the antiderivative route at vertex {v}"
        );
        total += &k_v;
        per_vertex.push((v, k_v));
    }
    Ok(CurvatureProfile { per_vertex, total })
}

/// Exact polynomial Gauss-Bonnet: `f_G(t) − 1 = Σ_v F_{S(v)}(t)`.
pub fn gauss_bonnet_polynomial_check(g: &SimplicialComplex) -> Result<bool> {
    if g.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let mut sum = FPolynomial::zero();
    for v in g.vertex_labels() {
        let link = g.unit_sphere_complex(&Simplex::vertex(v)?)?;
        sum = sum.add(&antiderivative(&f_function(&link)));
    }
    let lhs = f_function(g).sub(&FPolynomial::one());
    Ok(lhs == sum)
}

/// A locally injective assignment of distinct rational values to the
/// vertices of a complex: adjacent vertices always get distinct values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFunction {
    values: BTreeMap<u32, BigRational>,
}

impl VertexFunction {
    /// Validates coverage of every vertex and local injectivity on every
    /// edge of `g`.
    pub fn new(g: &SimplicialComplex, values: BTreeMap<u32, BigRational>) -> Result<Self> {
        for v in g.vertex_labels() {
            if !values.contains_key(&v) {
                return Err(Error::MissingVertexValue(v));
            }
        }
        for x in g.elements().iter().filter(|x| x.dimension() == 1) {
            let (a, b) = (x.vertices()[0], x.vertices()[1]);
            if values[&a] == values[&b] {
                return Err(Error::NotLocallyInjective(a, b));
            }
        }
        Ok(Self { values })
    }

    /// Assigns the given integers to the vertices in ascending label order.
    pub fn from_values_in_order(g: &SimplicialComplex, vals: &[i64]) -> Result<Self> {
        let labels = g.vertex_labels();
        if vals.len() != labels.len() {
            return Err(Error::InvalidParameter(format!(
                "expected {} vertex values, got {}",
                labels.len(),
                vals.len()
            )));
        }
        let map = labels
            .into_iter()
            .zip(vals.iter().map(|&v| BigRational::from_integer(BigInt::from(v))))
            .collect();
        Self::new(g, map)
    }

    /// A uniformly random permutation of `1..=|V|` assigned to the sorted
    /// vertex labels; locally injective by construction.
    pub fn random(g: &SimplicialComplex, rng: &mut impl rand::Rng) -> Self {
        let labels = g.vertex_labels();
        let mut vals: Vec<i64> = (1..=labels.len() as i64).collect();
        vals.shuffle(rng);
        let values = labels
            .into_iter()
            .zip(vals.into_iter().map(|v| BigRational::from_integer(BigInt::from(v))))
            .collect();
        Self { values }
    }

    /// Deterministic random function from a seed.
    pub fn random_seeded(g: &SimplicialComplex, seed: u64) -> Self {
        Self::random(g, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn negated(&self) -> Self {
        Self {
            values: self.values.iter().map(|(v, x)| (*v, -x)).collect(),
        }
    }

    pub fn value(&self, v: u32) -> &BigRational {
        &self.values[&v]
    }

    pub fn try_value(&self, v: u32) -> Option<&BigRational> {
        self.values.get(&v)
    }

    /// Sorted distinct values, ascending.
    pub fn sorted_values(&self) -> Vec<BigRational> {
        let mut vals: Vec<BigRational> = self.values.values().cloned().collect();
        vals.sort();
        vals.dedup();
        vals
    }

    /// Midpoint between the i-th and (i+1)-th sorted values; never a
    /// vertex value.
    pub fn midpoint(&self, i: usize) -> Option<BigRational> {
        let vals = self.sorted_values();
        if i + 1 >= vals.len() {
            return None;
        }
        Some((&vals[i] + &vals[i + 1]) / rational(2, 1))
    }

    /// The midpoint straddling the median of the sorted values.
    pub fn median_midpoint(&self) -> Option<BigRational> {
        let vals = self.sorted_values();
        if vals.len() < 2 {
            return None;
        }
        self.midpoint((vals.len() - 1) / 2)
    }

    fn min_max_on(&self, x: &Simplex) -> (BigRational, BigRational) {
        let mut it = x.vertices().iter().map(|v| &self.values[v]);
        let first = it.next().expect("simplices are nonempty").clone();
        let mut min = first.clone();
        let mut max = first;
        for v in it {
            if *v < min {
                min = v.clone();
            }
            if *v > max {
                max = v.clone();
            }
        }
        (min, max)
    }
}

fn require_vertex(g: &SimplicialComplex, v: u32) -> Result<Simplex> {
    let s = Simplex::vertex(v)?;
    if !g.contains(&s) {
        return Err(Error::NotAnElement(s.to_string()));
    }
    Ok(s)
}

/// Poincaré-Hopf index at a vertex, computed two ways and cross-checked:
/// `1 − χ(S⁻_f(v))` over the sub-level link, and the signed count of
/// simplices whose f-maximum is attained at `v`.
pub fn ph_index(g: &SimplicialComplex, f: &VertexFunction, v: u32) -> Result<i64> {
    let vs = require_vertex(g, v)?;
    let fv = f.value(v);

    // Link form.
    let sphere = g.unit_sphere(&vs)?;
    let chi_minus: i64 = sphere
        .iter()
        .filter(|y| y.vertices().iter().all(|w| f.value(*w) < fv))
        .map(Simplex::weight)
        .sum();
    let link_form = 1 - chi_minus;

    // Max-attribution form.
    let max_form: i64 = g
        .elements()
        .iter()
        .filter(|x| x.contains_vertex(v))
        .filter(|x| x.vertices().iter().all(|w| *w == v || f.value(*w) < fv))
        .map(Simplex::weight)
        .sum();

    if link_form != max_form {
        return Err(Error::IndexFormsDisagree {
            vertex: v,
            link_form,
            max_form,
        });
    }
    Ok(link_form)
}

/// `Σ_v i_f(v) = χ(G)`.
pub fn poincare_hopf_check(g: &SimplicialComplex, f: &VertexFunction) -> Result<bool> {
    let mut sum = 0i64;
    for v in g.vertex_labels() {
        sum += ph_index(g, f, v)?;
    }
    Ok(sum == g.euler_characteristic())
}

/// The symmetric index `j_f(v) = (i_f(v) + i_{−f}(v)) / 2`.
pub fn symmetric_index(g: &SimplicialComplex, f: &VertexFunction, v: u32) -> Result<BigRational> {
    let a = ph_index(g, f, v)?;
    let b = ph_index(g, &f.negated(), v)?;
    Ok(rational(a + b, 2))
}

/// Whitney complex of the strict-containment graph on the selected
/// elements, each relabeled by its canonical index in `g` plus one.
fn poset_clique_complex(g: &SimplicialComplex, selected: &[Simplex]) -> SimplicialComplex {
    if selected.is_empty() {
        return SimplicialComplex::empty();
    }
    let labels: Vec<u32> = selected
        .iter()
        .map(|x| g.index_of(x).expect("selected elements live in g") as u32 + 1)
        .collect();
    let mut edges = Vec::new();
    for i in 0..selected.len() {
        for j in i + 1..selected.len() {
            let (a, b) = (&selected[i], &selected[j]);
            if a.is_face_of(b) || b.is_face_of(a) {
                edges.push((labels[i], labels[j]));
            }
        }
    }
    let graph = Graph::new(labels.iter().copied(), edges).expect("containment graph is simple");
    whitney(&graph)
}

/// The sign-change support: elements of `S(v)` whose f-values straddle
/// `f(v)`. This set is open (closed upward) inside `S(v)`, and its signed
/// count is the χ entering the symmetric-index identity
/// `i_f(v) + i_{−f}(v) = 2 − χ(S(v)) + χ(support)`.
pub fn center_manifold_support(
    g: &SimplicialComplex,
    f: &VertexFunction,
    v: u32,
) -> Result<SimplexSet> {
    let vs = require_vertex(g, v)?;
    let fv = f.value(v);
    let sphere = g.unit_sphere(&vs)?;
    Ok(sphere
        .iter()
        .filter(|x| {
            let (min, max) = f.min_max_on(x);
            min < *fv && *fv < max
        })
        .cloned()
        .collect())
}

/// Center manifold of `f` at `v`: the sign-change support realized as a
/// subcomplex of the Barycentric refinement via containment cliques. On a
/// d-manifold with generic `f` this is a (d−2)-manifold or empty.
pub fn center_manifold(
    g: &SimplicialComplex,
    f: &VertexFunction,
    v: u32,
) -> Result<SimplicialComplex> {
    let support = center_manifold_support(g, f, v)?;
    let selected: Vec<Simplex> = support.iter().cloned().collect();
    Ok(poset_clique_complex(g, &selected))
}

/// The level set `{f = c}` in the Barycentric refinement: containment
/// cliques of the elements whose f-values straddle `c`. Errors when `c`
/// hits a vertex value.
pub fn level_set(
    g: &SimplicialComplex,
    f: &VertexFunction,
    c: &BigRational,
) -> Result<SimplicialComplex> {
    for v in g.vertex_labels() {
        if f.value(v) == c {
            return Err(Error::LevelOnVertexValue(c.to_string(), v));
        }
    }
    let selected: Vec<Simplex> = g
        .elements()
        .iter()
        .filter(|x| {
            let (min, max) = f.min_max_on(x);
            min < *c && *c < max
        })
        .cloned()
        .collect();
    Ok(poset_clique_complex(g, &selected))
}

/// Discrete Sard check: on a d-manifold with `c` off the vertex values,
/// the level set is empty or a (d−1)-manifold.
pub fn sard_check_with_engine(
    engine: &HomotopyEngine,
    g: &SimplicialComplex,
    f: &VertexFunction,
    c: &BigRational,
) -> Result<bool> {
    let d = g.dimension().ok_or(Error::EmptyComplex)? as i64;
    if !engine.is_manifold(g, d)? {
        return Err(Error::NotAManifold(d));
    }
    let level = level_set(g, f, c)?;
    if level.is_empty() {
        return Ok(true);
    }
    engine.is_manifold(&level, d - 1)
}

pub fn sard_check(g: &SimplicialComplex, f: &VertexFunction, c: &BigRational) -> Result<bool> {
    sard_check_with_engine(&HomotopyEngine::default(), g, f, c)
}

/// How an index expectation was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpectationMode {
    /// Average over all `|V|!` vertex orderings.
    Exhaustive,
    /// Average over `trials` random orderings drawn from the seed.
    MonteCarlo { seed: u64, trials: u64 },
}

/// Per-vertex expected Poincaré-Hopf indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexExpectation {
    pub per_vertex: Vec<(u32, BigRational)>,
    pub mode: ExpectationMode,
}

/// Cutoff for exhaustive enumeration (8! = 40320 orderings).
pub const EXHAUSTIVE_VERTEX_LIMIT: usize = 8;

/// Expected index per vertex under uniformly random vertex orderings.
/// Complexes with at most [`EXHAUSTIVE_VERTEX_LIMIT`] vertices are averaged
/// exhaustively and the result equals the Levitt curvature exactly; larger
/// complexes fall back to seeded Monte Carlo.
pub fn index_expectation(
    g: &SimplicialComplex,
    trials: u64,
    seed: u64,
) -> Result<IndexExpectation> {
    if g.is_empty() {
        return Err(Error::EmptyComplex);
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let labels = g.vertex_labels();
    let nv = labels.len();
    let position: BTreeMap<u32, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    // Element supports as positions into the vertex list, plus weights.
    let supports: Vec<(Vec<usize>, i64)> = g
        .elements()
        .iter()
        .map(|x| {
            (
                x.vertices().iter().map(|v| position[v]).collect(),
                x.weight(),
            )
        })
        .collect();

    let index_sums_for = |order: &[usize], sums: &mut [i64]| {
        // order[p] = rank of vertex at position p; the simplex weight goes
        // to the vertex with the largest rank.
        for (support, w) in &supports {
            let top = support
                .iter()
                .copied()
                .max_by_key(|&p| order[p])
                .expect("nonempty support");
            sums[top] += w;
        }
    };

    if nv <= EXHAUSTIVE_VERTEX_LIMIT {
        let mut sums = vec![0i64; nv];
        let mut order: Vec<usize> = (0..nv).collect();
        let mut count = 0u64;
        permute(&mut order, nv, &mut |perm| {
            index_sums_for(perm, &mut sums);
            count += 1;
        });
        let denom = BigInt::from(count);
        let per_vertex = labels
            .into_iter()
            .zip(sums)
            .map(|(v, s)| (v, BigRational::new(BigInt::from(s), denom.clone())))
            .collect();
        return Ok(IndexExpectation {
            per_vertex,
            mode: ExpectationMode::Exhaustive,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sums = vec![0i64; nv];
    let mut order: Vec<usize> = (0..nv).collect();
    for _ in 0..trials {
        order.shuffle(&mut rng);
        index_sums_for(&order, &mut sums);
    }
    let denom = BigInt::from(trials);
    let per_vertex = labels
        .into_iter()
        .zip(sums)
        .map(|(v, s)| (v, BigRational::new(BigInt::from(s), denom.clone())))
        .collect();
    Ok(IndexExpectation {
        per_vertex,
        mode: ExpectationMode::MonteCarlo { seed, trials },
    })
}

/// Heap's algorithm over the first `k` entries.
fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k {
        permute(items, k - 1, visit);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
