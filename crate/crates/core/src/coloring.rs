//! Colorings, their audit, greedy acyclic coloring and b-reduction.

use serde::Serialize;

use crate::digraph::{check_permutation, Digraph, VertexSet};
use crate::error::{Error, Result};

/// A surjective map from vertices onto colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Coloring {
    colors: Vec<usize>,
    #[serde(skip)]
    k: usize,
}

impl Coloring {
    /// Wraps an assignment, rejecting color indices that skip a value.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let mut used = vec![false; k];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::SparseColors { k, missing });
        }
        Ok(Coloring { colors, k })
    }

    /// Renumbers classes in order of first appearance.
    pub fn normalized(colors: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let colors: Vec<usize> = colors
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        let k = map.len();
        Coloring { colors, k }
    }

    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Result<Self> {
        let mut colors = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for v in class.iter() {
                colors[v] = c;
            }
        }
        if let Some(v) = colors.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Precondition(format!("vertex {v} has no class")));
        }
        Coloring::new(colors)
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut classes = vec![VertexSet::empty(n); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].insert(v);
        }
        classes
    }
}

/// Verdicts for one coloring of one digraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringAudit {
    pub num_colors: usize,
    pub acyclic: bool,
    /// Classes whose induced subdigraph contains a directed cycle.
    pub cyclic_classes: Vec<usize>,
    pub complete: bool,
    /// Ordered pairs `(i, j)`, `i != j`, with no dart from class `i` to class `j`.
    pub missing_pairs: Vec<(usize, usize)>,
    /// Per class, the vertices with an out-neighbor in every other class.
    pub b_plus: Vec<Vec<usize>>,
    /// Per class, the vertices with an in-neighbor in every other class.
    pub b_minus: Vec<Vec<usize>>,
    pub is_b_coloring: bool,
    pub positive_basis: Option<Vec<usize>>,
    pub negative_basis: Option<Vec<usize>>,
}

impl ColoringAudit {
    pub fn is_acyclic_b_coloring(&self) -> bool {
        self.acyclic && self.is_b_coloring
    }

    pub fn is_complete_acyclic(&self) -> bool {
        self.acyclic && self.complete
    }
}

fn check_domain(d: &Digraph, c: &Coloring) -> Result<()> {
    if c.len() != d.order() {
        return Err(Error::ColoringLength {
            expected: d.order(),
            got: c.len(),
        });
    }
    Ok(())
}

fn class_is_acyclic(d: &Digraph, class: &VertexSet) -> bool {
    d.induced(class).map(|h| h.is_acyclic()).unwrap_or(false)
}

/// Audits `c` on `d`. With a single class every vertex is vacuously b⁺ and b⁻.
pub fn audit(d: &Digraph, c: &Coloring) -> Result<ColoringAudit> {
    check_domain(d, c)?;
    let k = c.num_colors();
    let classes = c.classes();

    let cyclic_classes: Vec<usize> = (0..k)
        .filter(|&i| !class_is_acyclic(d, &classes[i]))
        .collect();

    // reach[i][j]: some dart from class i into class j
    let mut reach = vec![vec![false; k]; k];
    for (u, v) in d.darts() {
        reach[c.color(u)][c.color(v)] = true;
    }
    let missing_pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && !reach[i][j])
        .collect();

    let mut b_plus = vec![Vec::new(); k];
    let mut b_minus = vec![Vec::new(); k];
    for v in 0..d.order() {
        let own = c.color(v);
        let sees_all = |row: &VertexSet| {
            classes
                .iter()
                .enumerate()
                .all(|(j, class)| j == own || row.intersects(class))
        };
        if sees_all(d.out_neighbors(v)) {
            b_plus[own].push(v);
        }
        if sees_all(d.in_neighbors(v)) {
            b_minus[own].push(v);
        }
    }

    let basis = |lists: &Vec<Vec<usize>>| -> Option<Vec<usize>> {
        lists.iter().map(|l| l.first().copied()).collect()
    };
    let positive_basis = basis(&b_plus);
    let negative_basis = basis(&b_minus);
    let is_b_coloring = positive_basis.is_some() && negative_basis.is_some();

    Ok(ColoringAudit {
        num_colors: k,
        acyclic: cyclic_classes.is_empty(),
        cyclic_classes,
        complete: missing_pairs.is_empty(),
        missing_pairs,
        b_plus,
        b_minus,
        is_b_coloring,
        positive_basis,
        negative_basis,
    })
}

/// Colors vertices in `order`, each with the smallest color whose class stays acyclic.
pub fn greedy_acyclic(d: &Digraph, order: &[usize]) -> Result<Coloring> {
    let n = d.order();
    check_permutation(order, n)?;
    let mut colors = vec![0; n];
    let mut classes: Vec<VertexSet> = Vec::new();
    for &v in order {
        let slot = classes.iter().position(|class| {
            let mut grown = class.clone();
            grown.insert(v);
            class_is_acyclic(d, &grown)
        });
        let c = slot.unwrap_or_else(|| {
            classes.push(VertexSet::empty(n));
            classes.len() - 1
        });
        classes[c].insert(v);
        colors[v] = c;
    }
    Coloring::new(colors)
}

/// Merges away classes lacking a b⁺- or b⁻-vertex until the coloring is a b-coloring.
///
/// The smallest failing class is emptied: on a b⁺ failure each of its vertices
/// moves to the smallest class holding none of its out-neighbors, on a b⁻
/// failure to the smallest class holding none of its in-neighbors. Targets are
/// chosen against the classes as they stood before the move, which keeps every
/// class acyclic.
pub fn b_reduce(d: &Digraph, c: &Coloring) -> Result<Coloring> {
    let report = audit(d, c)?;
    if let Some(&class) = report.cyclic_classes.first() {
        return Err(Error::NotAcyclic { class });
    }
    let mut current = c.clone();
    loop {
        let report = audit(d, &current)?;
        let failing = (0..current.num_colors())
            .find(|&i| report.b_plus[i].is_empty() || report.b_minus[i].is_empty());
        let Some(i) = failing else {
            return Ok(current);
        };
        let use_out = report.b_plus[i].is_empty();
        let classes = current.classes();
        let mut colors = current.as_slice().to_vec();
        for x in classes[i].iter() {
            let row = if use_out {
                d.out_neighbors(x)
            } else {
                d.in_neighbors(x)
            };
            let target = (0..classes.len())
                .find(|&j| j != i && !row.intersects(&classes[j]))
                .expect("a vertex that is not a b-vertex misses some class");
            colors[x] = target;
        }
        for col in colors.iter_mut() {
            if *col > i {
                *col -= 1;
            }
        }
        current = Coloring::new(colors)?;
    }
}
