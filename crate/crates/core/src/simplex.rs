//! Simplices, simplicial complexes, and the local sets of their finite
//! topology.
//!
//! A [`SimplicialComplex`] is a finite set of nonempty vertex-label sets
//! closed under taking nonempty subsets. The stars `U(x) = {y : x ⊆ y}` form
//! a basis of open sets; cores `K(x) = {y : y ⊆ x}` are closed. The closure
//! `B(x)` of a star is the unit ball and `S(x) = B(x) \ U(x)` is the unit
//! sphere of `x`. Euler characteristic is the signed count
//! `χ(A) = Σ_{x ∈ A} (−1)^dim(x)`, defined for arbitrary subsets.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::{Error, Result};

/// A simplex: a nonempty set of distinct positive integer vertex labels,
/// stored strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: Vec<u32>,
}

impl Simplex {
    /// Builds a simplex from arbitrary labels, sorting and validating them.
    ///
    /// Rejects empty input, label 0, and duplicate labels.
    pub fn new(labels: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut vertices: Vec<u32> = labels.into_iter().collect();
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        if let Some(&z) = vertices.iter().find(|&&v| v == 0) {
            return Err(Error::NonPositiveLabel(z as i64));
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0]));
        }
        Ok(Self { vertices })
    }

    /// Single-vertex simplex.
    pub fn vertex(label: u32) -> Result<Self> {
        Self::new([label])
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<u32>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }

    /// The strictly increasing vertex labels.
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Dimension: vertex count minus one.
    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Parity weight `w(x) = (−1)^dim(x)`.
    pub fn weight(&self) -> i64 {
        if self.dimension() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// True when `self ⊆ other` (both sorted, so a linear merge scan).
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        subset_of(&self.vertices, &other.vertices)
    }

    pub fn contains_vertex(&self, label: u32) -> bool {
        self.vertices.binary_search(&label).is_ok()
    }

    /// All nonempty subsets, including the simplex itself.
    pub fn nonempty_subsets(&self) -> Vec<Simplex> {
        let k = self.vertices.len();
        let mut out = Vec::with_capacity((1usize << k) - 1);
        for mask in 1u64..(1u64 << k) {
            let sub: Vec<u32> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.vertices[i])
                .collect();
            out.push(Simplex::from_sorted_unchecked(sub));
        }
        out
    }

    /// Faces of codimension one, each obtained by dropping one vertex.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.vertices.len() == 1 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|i| {
                let mut v = self.vertices.clone();
                v.remove(i);
                Simplex::from_sorted_unchecked(v)
            })
            .collect()
    }

    /// Union of vertex sets; errors only if the result would be invalid
    /// (never happens for valid simplices with disjoint or overlapping labels).
    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v: Vec<u32> = self
            .vertices
            .iter()
            .chain(other.vertices.iter())
            .copied()
            .collect();
        v.sort_unstable();
        v.dedup();
        Simplex::from_sorted_unchecked(v)
    }

    /// Vertex labels in `self` but not in `other`.
    pub fn difference(&self, other: &Simplex) -> Vec<u32> {
        self.vertices
            .iter()
            .filter(|v| !other.contains_vertex(**v))
            .copied()
            .collect()
    }

    /// True when the vertex sets are disjoint.
    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        !self.vertices.iter().any(|v| other.contains_vertex(*v))
    }

    /// True when the vertex sets intersect.
    pub fn intersects(&self, other: &Simplex) -> bool {
        !self.is_disjoint(other)
    }
}

fn subset_of(a: &[u32], b: &[u32]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Canonical order: by cardinality ascending, then lexicographic on labels.
/// Every matrix in this crate indexes rows and columns by this order.
impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite abstract simplicial complex: elements closed under nonempty
/// subsets, held in canonical order. The empty complex is legal and plays
/// the role of the (−1)-sphere.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    elements: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
}

impl SimplicialComplex {
    /// The empty complex.
    pub fn empty() -> Self {
        Self {
            elements: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Smallest subset-closed complex containing all given faces.
    pub fn closure(faces: &[Simplex]) -> Self {
        let mut set: BTreeSet<Simplex> = BTreeSet::new();
        for f in faces {
            for s in f.nonempty_subsets() {
                set.insert(s);
            }
        }
        Self::from_sorted_elements(set.into_iter().collect())
    }

    /// Closure construction from raw facet label lists.
    ///
    /// Rejects empty facets and non-positive labels. An empty facet list
    /// yields the empty complex.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        let faces: Vec<Simplex> = facets
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<_>>()?;
        Ok(Self::closure(&faces))
    }

    /// Builds from a literal element list, validating subset closure.
    /// Unlike [`Self::closure`], missing faces are an error, not filled in.
    pub fn from_elements(elements: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let set: BTreeSet<Simplex> = elements.into_iter().collect();
        for y in &set {
            for f in y.facets() {
                if !set.contains(&f) {
                    return Err(Error::NotSubsetClosed(y.to_string(), f.to_string()));
                }
            }
        }
        Ok(Self::from_sorted_elements(set.into_iter().collect()))
    }

    /// Builds directly from a canonical, subset-closed element list.
    /// Callers guarantee both properties; debug builds verify order.
    pub(crate) fn from_sorted_elements(elements: Vec<Simplex>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Self { elements, index }
    }

    /// Number of elements (simplices of all dimensions).
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Maximum dimension over elements; `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.elements.last().map(|s| s.dimension())
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[Simplex] {
        &self.elements
    }

    /// Position of `x` in the canonical order.
    pub fn index_of(&self, x: &Simplex) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Simplex) -> bool {
        self.index.contains_key(x)
    }

    fn require(&self, x: &Simplex) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotAnElement(x.to_string()))
        }
    }

    /// The 0-dimensional elements' labels, ascending.
    pub fn vertex_labels(&self) -> Vec<u32> {
        self.elements
            .iter()
            .take_while(|s| s.dimension() == 0)
            .map(|s| s.vertices()[0])
            .collect()
    }

    /// Signed element count `Σ w(x)`.
    pub fn euler_characteristic(&self) -> i64 {
        self.elements.iter().map(Simplex::weight).sum()
    }

    /// Star `U(x) = {y ∈ G : x ⊆ y}`, the smallest open set containing `x`.
    pub fn star(&self, x: &Simplex) -> Result<SimplexSet> {
        self.require(x)?;
        Ok(SimplexSet::from_iter_unchecked(
            self.elements.iter().filter(|y| x.is_face_of(y)).cloned(),
        ))
    }

    /// Core `K(x) = {y : y ⊆ x}`: all nonempty subsets of `x`, a closed set
    /// with Euler characteristic 1.
    pub fn core(&self, x: &Simplex) -> Result<SimplexSet> {
        self.require(x)?;
        Ok(SimplexSet::from_iter_unchecked(x.nonempty_subsets()))
    }

    /// Unit ball `B(x)`: the closure of the star inside the complex.
    pub fn unit_ball(&self, x: &Simplex) -> Result<SimplexSet> {
        let star = self.star(x)?;
        let mut set = BTreeSet::new();
        for y in star.iter() {
            for s in y.nonempty_subsets() {
                set.insert(s);
            }
        }
        Ok(SimplexSet { members: set })
    }

    /// Unit sphere `S(x) = B(x) \ U(x)`, the topological boundary of the
    /// unit ball. Always subset-closed; empty exactly when `x` is an
    /// isolated vertex.
    pub fn unit_sphere(&self, x: &Simplex) -> Result<SimplexSet> {
        let star = self.star(x)?;
        let mut set = BTreeSet::new();
        for y in star.iter() {
            for s in y.nonempty_subsets() {
                set.insert(s);
            }
        }
        for y in star.iter() {
            set.remove(y);
        }
        Ok(SimplexSet { members: set })
    }

    /// Link of `x`: elements disjoint from `x` whose union with `x` is again
    /// an element. For a vertex this coincides with the unit sphere; in
    /// general `S(x)` is the join of the boundary of `x` with the link.
    pub fn link(&self, x: &Simplex) -> Result<SimplexSet> {
        self.require(x)?;
        Ok(SimplexSet::from_iter_unchecked(
            self.elements
                .iter()
                .filter(|y| y.is_disjoint(x) && self.contains(&y.union(x)))
                .cloned(),
        ))
    }

    /// Standalone link complex (the link is always subset-closed).
    pub fn link_complex(&self, x: &Simplex) -> Result<SimplicialComplex> {
        let lk = self.link(x)?;
        Ok(Self::from_sorted_elements(lk.members.into_iter().collect()))
    }

    /// Standalone unit-sphere complex.
    pub fn unit_sphere_complex(&self, x: &Simplex) -> Result<SimplicialComplex> {
        let s = self.unit_sphere(x)?;
        Ok(Self::from_sorted_elements(s.members.into_iter().collect()))
    }

    /// Reifies a subset-closed [`SimplexSet`] as a standalone complex,
    /// preserving labels. Errors with a witness pair if `set` is not
    /// subset-closed.
    pub fn subcomplex(&self, set: &SimplexSet) -> Result<SimplicialComplex> {
        for y in set.iter() {
            self.require(y)?;
            for f in y.facets() {
                if !set.contains(&f) {
                    return Err(Error::NotSubsetClosed(y.to_string(), f.to_string()));
                }
            }
        }
        Ok(Self::from_sorted_elements(
            set.members.iter().cloned().collect(),
        ))
    }

    /// Maximal elements (faces not properly contained in any other element).
    pub fn facets(&self) -> Vec<Simplex> {
        self.elements
            .iter()
            .filter(|x| {
                !self
                    .elements
                    .iter()
                    .any(|y| y.vertices().len() > x.vertices().len() && x.is_face_of(y))
            })
            .cloned()
            .collect()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter()).finish()
    }
}

/// A subset of the elements of a host complex, not necessarily
/// subset-closed: stars are open, cores and spheres are closed, arbitrary
/// unions are neither. Iteration is in canonical order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SimplexSet {
    members: BTreeSet<Simplex>,
}

impl SimplexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn from_iter_unchecked(iter: impl IntoIterator<Item = Simplex>) -> Self {
        Self {
            members: iter.into_iter().collect(),
        }
    }

    /// Builds a set after checking every member belongs to `host`.
    pub fn within(host: &SimplicialComplex, iter: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let members: BTreeSet<Simplex> = iter.into_iter().collect();
        for m in &members {
            if !host.contains(m) {
                return Err(Error::NotAnElement(m.to_string()));
            }
        }
        Ok(Self { members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &Simplex) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.members.iter()
    }

    /// Signed element count `Σ w(x)`, defined for arbitrary subsets.
    pub fn euler_characteristic(&self) -> i64 {
        self.members.iter().map(Simplex::weight).sum()
    }

    pub fn union(&self, other: &SimplexSet) -> SimplexSet {
        Self {
            members: self.members.union(&other.members).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &SimplexSet) -> SimplexSet {
        Self {
            members: self.members.intersection(&other.members).cloned().collect(),
        }
    }

    pub fn difference(&self, other: &SimplexSet) -> SimplexSet {
        Self {
            members: self.members.difference(&other.members).cloned().collect(),
        }
    }

    /// True when every facet of every member is again a member.
    pub fn is_subset_closed(&self) -> bool {
        self.members
            .iter()
            .all(|y| y.facets().iter().all(|f| self.members.contains(f)))
    }

    pub fn into_members(self) -> BTreeSet<Simplex> {
        self.members
    }
}

impl FromIterator<Simplex> for SimplexSet {
    fn from_iter<T: IntoIterator<Item = Simplex>>(iter: T) -> Self {
        Self {
            members: iter.into_iter().collect(),
        }
    }
}

/// Convenience χ over any simplex iterator.
pub fn euler_characteristic<'a>(iter: impl IntoIterator<Item = &'a Simplex>) -> i64 {
    iter.into_iter().map(Simplex::weight).sum()
}
