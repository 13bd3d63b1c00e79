//! Contractibility, manifold and sphere recognition, and explicit
//! Barycentric refinement.
//!
//! A complex is contractible when it is the one-point complex or some
//! element `x` has both its unit sphere and the star-deleted remainder
//! contractible. A complex is a d-manifold when the link of every element
//! `x` is a `(d − dim(x) − 1)`-sphere, and a d-sphere when it is a
//! d-manifold with some contractible star deletion; the empty complex is
//! the (−1)-sphere. Verdicts are memoized on the exact labeled element set
//! behind a mutex, so a shared engine can be used from several tasks.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::generators::whitney;
use crate::generators::Graph;
use crate::simplex::{Simplex, SimplicialComplex};
use crate::{Error, Result};

/// Outcome of a contractibility query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyVerdict {
    pub contractible: bool,
    /// For a contractible complex: the reduction chain. Replaying
    /// `delete_star` along the removed elements ends at a one-point
    /// complex, and each step's unit sphere carries its own verdict.
    pub witness: Option<Vec<ReductionStep>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub removed: Simplex,
    pub sphere_verdict: Box<HomotopyVerdict>,
}

/// Removes the open star of `x`: all elements containing `x`.
/// The result is again subset-closed and `χ(G) = χ(H) + χ(U(x))`.
pub fn delete_star(g: &SimplicialComplex, x: &Simplex) -> Result<SimplicialComplex> {
    if !g.contains(x) {
        return Err(Error::NotAnElement(x.to_string()));
    }
    let rest: Vec<Simplex> = g
        .elements()
        .iter()
        .filter(|y| !x.is_face_of(y))
        .cloned()
        .collect();
    Ok(SimplicialComplex::from_sorted_elements(rest))
}

#[derive(Clone, Debug)]
enum MemoEntry {
    NotContractible,
    /// Contractible by removing the star of this element.
    Via(Simplex),
}

/// Default ceiling on element count for the recursive searches.
pub const DEFAULT_MAX_HOMOTOPY_ELEMENTS: usize = 5000;

/// Recognition engine with a shared memo table keyed on the exact labeled
/// element list. Reads and inserts are individually locked; concurrent
/// queries may duplicate work but always agree.
pub struct HomotopyEngine {
    memo: Mutex<HashMap<Vec<Simplex>, MemoEntry>>,
    max_elements: usize,
}

impl Default for HomotopyEngine {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_HOMOTOPY_ELEMENTS)
    }
}

impl HomotopyEngine {
    pub fn new(max_elements: usize) -> Self {
        Self {
            memo: Mutex::new(HashMap::new()),
            max_elements,
        }
    }

    fn guard(&self, g: &SimplicialComplex) -> Result<()> {
        if g.len() > self.max_elements {
            Err(Error::TooLarge {
                elements: g.len(),
                limit: self.max_elements,
            })
        } else {
            Ok(())
        }
    }

    fn lookup(&self, key: &[Simplex]) -> Option<MemoEntry> {
        self.memo.lock().unwrap().get(key).cloned()
    }

    fn store(&self, key: Vec<Simplex>, entry: MemoEntry) {
        self.memo.lock().unwrap().insert(key, entry);
    }

    fn contractible_inner(&self, g: &SimplicialComplex) -> Result<bool> {
        if g.is_empty() {
            return Ok(false);
        }
        if g.len() == 1 {
            return Ok(true);
        }
        let key = g.elements().to_vec();
        if let Some(entry) = self.lookup(&key) {
            return Ok(!matches!(entry, MemoEntry::NotContractible));
        }
        // Candidates in canonical order, for deterministic witnesses.
        for x in g.elements() {
            let sphere = g.unit_sphere_complex(x)?;
            if !self.contractible_inner(&sphere)? {
                continue;
            }
            let rest = delete_star(g, x)?;
            if self.contractible_inner(&rest)? {
                self.store(key, MemoEntry::Via(x.clone()));
                return Ok(true);
            }
        }
        self.store(key, MemoEntry::NotContractible);
        Ok(false)
    }

    /// Full verdict with a reduction witness when contractible.
    pub fn is_contractible(&self, g: &SimplicialComplex) -> Result<HomotopyVerdict> {
        self.guard(g)?;
        if !self.contractible_inner(g)? {
            return Ok(HomotopyVerdict {
                contractible: false,
                witness: None,
            });
        }
        Ok(HomotopyVerdict {
            contractible: true,
            witness: Some(self.rebuild_witness(g)?),
        })
    }

    fn rebuild_witness(&self, g: &SimplicialComplex) -> Result<Vec<ReductionStep>> {
        let mut steps = Vec::new();
        let mut current = g.clone();
        while current.len() > 1 {
            let entry = self
                .lookup(current.elements())
                .expect("witness rebuild must follow a successful search");
            let MemoEntry::Via(x) = entry else {
                unreachable!("contractible complexes memoize a removal choice");
            };
            let sphere = current.unit_sphere_complex(&x)?;
            let sphere_verdict = self.is_contractible(&sphere)?;
            let next = delete_star(&current, &x)?;
            steps.push(ReductionStep {
                removed: x,
                sphere_verdict: Box::new(sphere_verdict),
            });
            current = next;
        }
        Ok(steps)
    }

    /// True when `dim(G) = d` and the link of every element `x` is a
    /// `(d − dim(x) − 1)`-sphere. For vertices the link coincides with the
    /// unit sphere; for higher cells the unit sphere is the join of the
    /// cell boundary with the link, so checking links is the recursion
    /// that matches the geometric examples (octahedron edge links are
    /// 0-spheres, its triangle links are empty).
    pub fn is_manifold(&self, g: &SimplicialComplex, d: i64) -> Result<bool> {
        self.guard(g)?;
        if d < 0 {
            return Ok(false);
        }
        if g.dimension().map(|x| x as i64) != Some(d) {
            return Ok(false);
        }
        for x in g.elements() {
            let link = g.link_complex(x)?;
            let want = d - x.dimension() as i64 - 1;
            if !self.is_sphere(&link, want)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Recursive sphere recognition: the empty complex is the (−1)-sphere;
    /// a d-sphere is a d-manifold with some contractible star deletion.
    pub fn is_sphere(&self, g: &SimplicialComplex, d: i64) -> Result<bool> {
        self.guard(g)?;
        if d == -1 {
            return Ok(g.is_empty());
        }
        if !self.is_manifold(g, d)? {
            return Ok(false);
        }
        for x in g.elements() {
            let rest = delete_star(g, x)?;
            if self.contractible_inner(&rest)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// One-shot contractibility with a fresh engine.
pub fn is_contractible(g: &SimplicialComplex) -> Result<HomotopyVerdict> {
    HomotopyEngine::default().is_contractible(g)
}

/// One-shot manifold recognition with a fresh engine.
pub fn is_manifold(g: &SimplicialComplex, d: i64) -> Result<bool> {
    HomotopyEngine::default().is_manifold(g, d)
}

/// One-shot sphere recognition with a fresh engine.
pub fn is_sphere(g: &SimplicialComplex, d: i64) -> Result<bool> {
    HomotopyEngine::default().is_sphere(g, d)
}

/// Requires `G` to be a d-sphere, then checks `χ(G) = 1 + (−1)^d`.
pub fn euler_gem_check(g: &SimplicialComplex, d: i64) -> Result<bool> {
    if !is_sphere(g, d)? {
        return Err(Error::NotASphere(d));
    }
    let want = 1 + if d.rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(g.euler_characteristic() == want)
}

/// Barycentric refinement: the Whitney complex of the containment graph on
/// the elements of `G`, with element `i` (canonical order) relabeled as
/// vertex `i + 1`. The f-vector equals the Barycentric operator applied to
/// the f-vector of `G`.
pub fn barycentric_refinement(g: &SimplicialComplex) -> SimplicialComplex {
    if g.is_empty() {
        return SimplicialComplex::empty();
    }
    let n = g.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (&g.elements()[i], &g.elements()[j]);
            // Canonical order sorts by cardinality, so only a ⊂ b can hold.
            if a.is_face_of(b) && a != b {
                edges.push((i as u32 + 1, j as u32 + 1));
            }
        }
    }
    let graph = Graph::new(1..=n as u32, edges).expect("containment graph is simple");
    whitney(&graph)
}
