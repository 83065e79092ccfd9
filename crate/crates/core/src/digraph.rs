//! Immutable simple digraphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of `0..n`, stored as a bit row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set over the universe `0..n`; rejects members outside it.
    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = VertexSet::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    /// Size of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.bits.is_disjoint(&other.bits)
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A loopless digraph without parallel darts.
///
/// Out- and in-adjacency rows are built once at construction; the value is
/// immutable afterwards, so every operation returns a new digraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_rows: Vec<VertexSet>,
    in_rows: Vec<VertexSet>,
    m: usize,
}

impl Digraph {
    /// Builds a digraph from a dart list. Duplicate darts collapse.
    pub fn new(n: usize, darts: &[(usize, usize)]) -> Result<Self> {
        let mut out_rows = vec![VertexSet::empty(n); n];
        let mut in_rows = vec![VertexSet::empty(n); n];
        for &(u, v) in darts {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::Loop { vertex: u });
            }
            out_rows[u].insert(v);
            in_rows[v].insert(u);
        }
        let m = out_rows.iter().map(VertexSet::len).sum();
        Ok(Digraph {
            n,
            out_rows,
            in_rows,
            m,
        })
    }

    /// The digraph with no darts on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            out_rows: vec![VertexSet::empty(n); n],
            in_rows: vec![VertexSet::empty(n); n],
            m: 0,
        }
    }

    #[allow(clippy::needless_range_loop)]
    fn from_predicate(n: usize, mut has_dart: impl FnMut(usize, usize) -> bool) -> Self {
        let mut out_rows = vec![VertexSet::empty(n); n];
        let mut in_rows = vec![VertexSet::empty(n); n];
        let mut m = 0;
        for u in 0..n {
            for v in 0..n {
                if u != v && has_dart(u, v) {
                    out_rows[u].insert(v);
                    in_rows[v].insert(u);
                    m += 1;
                }
            }
        }
        Digraph {
            n,
            out_rows,
            in_rows,
            m,
        }
    }

    /// Builds from a row-major `n * n` adjacency matrix; the diagonal must be clear.
    pub fn from_matrix(n: usize, matrix: &[bool]) -> Result<Self> {
        assert_eq!(matrix.len(), n * n, "matrix must be n*n");
        if let Some(v) = (0..n).find(|&v| matrix[v * n + v]) {
            return Err(Error::Loop { vertex: v });
        }
        Ok(Self::from_predicate(n, |u, v| matrix[u * n + v]))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn has_dart(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out_rows[u].contains(v)
    }

    /// A dart is symmetric when its reverse is also present.
    pub fn is_symmetric_dart(&self, u: usize, v: usize) -> bool {
        self.has_dart(u, v) && self.has_dart(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out_rows[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.in_rows[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_rows[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_rows[v].len()
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    pub fn max_in_degree(&self) -> usize {
        (0..self.n).map(|v| self.in_degree(v)).max().unwrap_or(0)
    }

    /// `min(max out-degree, max in-degree)`; bounds the colors of any b-coloring minus one.
    pub fn delta(&self) -> usize {
        self.max_out_degree().min(self.max_in_degree())
    }

    /// Darts in lexicographic order.
    pub fn darts(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out_rows[u].iter().map(move |v| (u, v)))
            .collect()
    }

    /// Returns `Some(r)` when every vertex has in- and out-degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let r = self.out_degree(0);
        (0..self.n)
            .all(|v| self.out_degree(v) == r && self.in_degree(v) == r)
            .then_some(r)
    }

    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_dart(u, v) != self.has_dart(v, u)))
    }

    pub fn complement(&self) -> Digraph {
        Self::from_predicate(self.n, |u, v| !self.has_dart(u, v))
    }

    pub fn converse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out_rows: self.in_rows.clone(),
            in_rows: self.out_rows.clone(),
            m: self.m,
        }
    }

    /// Subdigraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced_by(&self, vertices: &[usize]) -> Result<Digraph> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(Self::from_predicate(vertices.len(), |i, j| {
            self.has_dart(vertices[i], vertices[j])
        }))
    }

    /// Subdigraph induced by `set`, relabeled in increasing vertex order.
    pub fn induced(&self, set: &VertexSet) -> Result<Digraph> {
        self.induced_by(&set.to_vec())
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        check_permutation(perm, self.n)?;
        let mut darts = Vec::with_capacity(self.m);
        for (u, v) in self.darts() {
            darts.push((perm[u], perm[v]));
        }
        Digraph::new(self.n, &darts)
    }

    /// Kahn's algorithm; a digon is a 2-cycle.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in self.out_rows[u].iter() {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// Strong components and the condensation.
    ///
    /// Component ids follow a topological order of the condensation, so every
    /// crossing dart goes from a smaller id to a larger one.
    pub fn strong_condensation(&self) -> Condensation {
        let mut tarjan = Tarjan::new(self.n);
        for v in 0..self.n {
            if tarjan.index[v].is_none() {
                tarjan.visit(self, v);
            }
        }
        // Tarjan emits sink components first.
        let count = tarjan.count;
        let component: Vec<usize> = tarjan.comp.iter().map(|&c| count - 1 - c).collect();
        let mut darts = Vec::new();
        for (u, v) in self.darts() {
            if component[u] != component[v] {
                darts.push((component[u], component[v]));
            }
        }
        let condensed = Digraph::new(count, &darts).expect("condensation darts are in range");
        Condensation {
            component,
            count,
            condensed,
        }
    }

    /// Length of a shortest path ignoring orientation, `None` when unreachable.
    pub fn weak_distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        Ok(self.weak_distances_from(u)[v])
    }

    /// Breadth-first weak distances from `source` to every vertex.
    pub fn weak_distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.out_rows[u].iter().chain(self.in_rows[u].iter()) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("darts", &self.darts())
            .finish()
    }
}

pub(crate) fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::NotAPermutation {
            reason: format!("expected {n} entries, got {}", order.len()),
        });
    }
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::NotAPermutation {
                reason: format!("entry {v} is out of range or repeated"),
            });
        }
        seen[v] = true;
    }
    Ok(())
}

/// Result of [`Digraph::strong_condensation`].
#[derive(Clone, Debug)]
pub struct Condensation {
    /// Strong component id of each vertex.
    pub component: Vec<usize>,
    pub count: usize,
    /// One vertex per component; acyclic by construction.
    pub condensed: Digraph,
}

struct Tarjan {
    index: Vec<Option<usize>>,
    low: Vec<usize>,
    on_stack: Vec<bool>,
    stack: Vec<usize>,
    comp: Vec<usize>,
    next: usize,
    count: usize,
}

impl Tarjan {
    fn new(n: usize) -> Self {
        Tarjan {
            index: vec![None; n],
            low: vec![0; n],
            on_stack: vec![false; n],
            stack: Vec::new(),
            comp: vec![0; n],
            next: 0,
            count: 0,
        }
    }

    // Iterative to stay clear of recursion limits on long cycles.
    fn visit(&mut self, d: &Digraph, root: usize) {
        let mut call: Vec<(usize, Vec<usize>)> = Vec::new();
        self.open(root);
        call.push((root, d.out_neighbors(root).to_vec()));
        while let Some((v, pending)) = call.last_mut() {
            let v = *v;
            if let Some(w) = pending.pop() {
                match self.index[w] {
                    None => {
                        self.open(w);
                        call.push((w, d.out_neighbors(w).to_vec()));
                    }
                    Some(iw) if self.on_stack[w] => {
                        self.low[v] = self.low[v].min(iw);
                    }
                    Some(_) => {}
                }
                continue;
            }
            call.pop();
            if let Some((parent, _)) = call.last() {
                self.low[*parent] = self.low[*parent].min(self.low[v]);
            }
            if Some(self.low[v]) == self.index[v] {
                loop {
                    let w = self.stack.pop().unwrap();
                    self.on_stack[w] = false;
                    self.comp[w] = self.count;
                    if w == v {
                        break;
                    }
                }
                self.count += 1;
            }
        }
    }

    fn open(&mut self, v: usize) {
        self.index[v] = Some(self.next);
        self.low[v] = self.next;
        self.next += 1;
        self.stack.push(v);
        self.on_stack[v] = true;
    }
}
