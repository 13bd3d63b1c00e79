//! Complex construction: Whitney clique complexes of graphs, join-based
//! combinators, named examples, and seeded random instances.
//!
//! Random graphs use the fixed-edge-count model G(n, m): `m` distinct edges
//! drawn uniformly from the lexicographically ordered edge list of the
//! complete graph by a partial Fisher-Yates pass. The generator is a ChaCha8
//! stream cipher seeded via `seed_from_u64`, so runs are reproducible
//! bit-for-bit within one build for a fixed `(n, m, seed)`.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::simplex::{Simplex, SimplicialComplex};
use crate::{Error, Result};

/// A finite simple graph on positive integer vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeSet<u32>,
    edges: BTreeSet<(u32, u32)>,
}

impl Graph {
    /// Builds a graph, normalizing edge endpoint order and rejecting loops
    /// and edges on missing vertices.
    pub fn new(
        vertices: impl IntoIterator<Item = u32>,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<u32> = vertices.into_iter().collect();
        if vertices.contains(&0) {
            return Err(Error::NonPositiveLabel(0));
        }
        let mut normalized = BTreeSet::new();
        for (a, b) in edges {
            if a == b || !vertices.contains(&a) || !vertices.contains(&b) {
                return Err(Error::InvalidEdge(a, b));
            }
            normalized.insert((a.min(b), a.max(b)));
        }
        Ok(Self {
            vertices,
            edges: normalized,
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Induced subgraph on a vertex subset.
    pub fn induced(&self, keep: &BTreeSet<u32>) -> Graph {
        Graph {
            vertices: self.vertices.intersection(keep).copied().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .copied()
                .collect(),
        }
    }
}

/// Whitney complex: elements are exactly the vertex sets of complete
/// subgraphs (cliques of all sizes down to single vertices).
pub fn whitney(g: &Graph) -> SimplicialComplex {
    let verts: Vec<u32> = g.vertices().collect();
    let mut elements: Vec<Simplex> = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    // Depth-first clique extension over ascending labels; every clique is
    // emitted exactly once with its vertices in increasing order.
    fn extend(
        g: &Graph,
        verts: &[u32],
        from: usize,
        stack: &mut Vec<u32>,
        out: &mut Vec<Simplex>,
    ) {
        for i in from..verts.len() {
            let v = verts[i];
            if stack.iter().all(|&u| g.has_edge(u, v)) {
                stack.push(v);
                out.push(Simplex::from_sorted_unchecked(stack.clone()));
                extend(g, verts, i + 1, stack, out);
                stack.pop();
            }
        }
    }
    extend(g, &verts, 0, &mut stack, &mut elements);
    elements.sort();
    SimplicialComplex::from_sorted_elements(elements)
}

fn max_label(g: &SimplicialComplex) -> u32 {
    g.elements()
        .iter()
        .flat_map(|s| s.vertices().iter().copied())
        .max()
        .unwrap_or(0)
}

fn shift_labels(g: &SimplicialComplex, offset: u32) -> Vec<Simplex> {
    g.elements()
        .iter()
        .map(|s| {
            Simplex::from_sorted_unchecked(s.vertices().iter().map(|v| v + offset).collect())
        })
        .collect()
}

/// Join `G + H`: both complexes plus every union of one element from each,
/// with `H` relabeled above `G`'s largest label. The f-functions multiply,
/// so `χ(G+H) = χ(G) + χ(H) − χ(G)·χ(H)`.
pub fn join(g: &SimplicialComplex, h: &SimplicialComplex) -> SimplicialComplex {
    let offset = max_label(g);
    let shifted = shift_labels(h, offset);
    let mut elements: BTreeSet<Simplex> = g.elements().iter().cloned().collect();
    elements.extend(shifted.iter().cloned());
    for x in g.elements() {
        for y in &shifted {
            elements.insert(x.union(y));
        }
    }
    SimplicialComplex::from_sorted_elements(elements.into_iter().collect())
}

/// Two isolated points, the 0-sphere.
pub fn two_points() -> SimplicialComplex {
    SimplicialComplex::from_facets([vec![1u32], vec![2]]).unwrap()
}

/// Suspension: join with the 0-sphere.
pub fn suspension(g: &SimplicialComplex) -> SimplicialComplex {
    join(g, &two_points())
}

/// Disjoint union with `H` relabeled above `G`. Euler characteristic adds.
pub fn disjoint_union(g: &SimplicialComplex, h: &SimplicialComplex) -> SimplicialComplex {
    let offset = max_label(g);
    let mut elements: BTreeSet<Simplex> = g.elements().iter().cloned().collect();
    elements.extend(shift_labels(h, offset));
    SimplicialComplex::from_sorted_elements(elements.into_iter().collect())
}

/// The boundary of the (d+1)-dimensional cross polytope: the iterated join
/// of d+1 copies of the 0-sphere. A d-sphere with f-function `(1+2t)^{d+1}`.
pub fn cross_polytope(d: usize) -> SimplicialComplex {
    let mut g = two_points();
    for _ in 0..d {
        g = join(&g, &two_points());
    }
    g
}

/// The 42-edge, 15-vertex triangulation of the real projective plane;
/// its Whitney complex has f-vector (15, 42, 28) and χ = 1.
pub fn projective_plane() -> SimplicialComplex {
    const EDGES: [(u32, u32); 42] = [
        (1, 5),
        (1, 7),
        (1, 2),
        (1, 4),
        (1, 8),
        (1, 9),
        (2, 6),
        (2, 9),
        (2, 3),
        (2, 5),
        (2, 10),
        (4, 3),
        (4, 5),
        (4, 11),
        (4, 7),
        (4, 12),
        (8, 7),
        (8, 14),
        (8, 9),
        (8, 15),
        (9, 10),
        (9, 15),
        (3, 7),
        (3, 10),
        (3, 6),
        (3, 11),
        (5, 6),
        (5, 12),
        (5, 13),
        (10, 11),
        (10, 15),
        (6, 7),
        (6, 13),
        (6, 14),
        (11, 12),
        (11, 15),
        (7, 14),
        (12, 13),
        (12, 15),
        (13, 14),
        (13, 15),
        (14, 15),
    ];
    let g = Graph::new(1..=15, EDGES).unwrap();
    whitney(&g)
}

/// Named 1-dimensional skeletons.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Skeleton {
    /// 3-cube graph: 8 vertices, 12 edges.
    Cube,
    /// Dodecahedron graph: 20 vertices, 30 edges.
    Dodecahedron,
    /// Cycle on n >= 3 vertices.
    Cycle(u32),
    /// Star with one center and n-1 leaves (n >= 2 vertices total).
    Star(u32),
}

/// The graph of a named skeleton.
pub fn skeleton_graph(which: Skeleton) -> Result<Graph> {
    match which {
        Skeleton::Cube => {
            // Vertices 1..=8 read as binary coordinates 0..=7; edges flip one bit.
            let mut edges = Vec::new();
            for a in 0u32..8 {
                for bit in [1u32, 2, 4] {
                    let b = a ^ bit;
                    if a < b {
                        edges.push((a + 1, b + 1));
                    }
                }
            }
            Graph::new(1..=8, edges)
        }
        Skeleton::Dodecahedron => {
            // LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2 on a 20-cycle.
            const LCF: [i32; 10] = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4];
            let mut edges = Vec::new();
            for i in 0u32..20 {
                edges.push((i + 1, (i + 1) % 20 + 1));
                let jump = LCF[(i % 10) as usize];
                let j = (i as i32 + jump).rem_euclid(20) as u32;
                let (a, b) = (i.min(j) + 1, i.max(j) + 1);
                edges.push((a, b));
            }
            Graph::new(1..=20, edges)
        }
        Skeleton::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle needs at least 3 vertices, got {n}"
                )));
            }
            let edges = (1..=n).map(|i| (i, i % n + 1));
            Graph::new(1..=n, edges)
        }
        Skeleton::Star(n) => {
            if n < 2 {
                return Err(Error::InvalidParameter(format!(
                    "star needs at least 2 vertices, got {n}"
                )));
            }
            let edges = (2..=n).map(|i| (1, i));
            Graph::new(1..=n, edges)
        }
    }
}

/// Whitney complex of a named skeleton. Cube and dodecahedron graphs are
/// triangle-free, so these complexes are exactly the 1-dimensional
/// vertex-and-edge complexes.
pub fn named_skeleton(which: Skeleton) -> Result<SimplicialComplex> {
    Ok(whitney(&skeleton_graph(which)?))
}

/// Uniform G(n, m) sample: `m` distinct edges on vertices `1..=n`,
/// deterministic for a fixed seed.
pub fn random_graph(n: u32, m: u64, seed: u64) -> Result<Graph> {
    let max = n as u64 * (n as u64 - 1) / 2;
    if m > max {
        return Err(Error::EdgeCountOutOfRange { n, m, max });
    }
    let mut pool: Vec<(u32, u32)> = Vec::with_capacity(max as usize);
    for a in 1..=n {
        for b in a + 1..=n {
            pool.push((a, b));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = pool.len();
    for i in 0..(m as usize) {
        let j = rng.random_range(i..len);
        pool.swap(i, j);
    }
    pool.truncate(m as usize);
    Graph::new(1..=n, pool)
}

/// Whitney complex of a seeded G(n, m) sample.
pub fn random_whitney(n: u32, m: u64, seed: u64) -> Result<SimplicialComplex> {
    Ok(whitney(&random_graph(n, m, seed)?))
}
