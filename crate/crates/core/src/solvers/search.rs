//! Branch-and-bound searches for dc, dac and dib.
//!
//! Each search fixes a number of colors `k` and either produces a witness
//! coloring or exhausts the space. All vertex and color choices follow fixed
//! orders, so results are reproducible.

use std::fmt;

use serde::Serialize;

use super::bounds::{dart_bound, t_bound};
use super::numbers::{acyclic_number, clique_number, independence_number};
use super::{bits, require_nonempty, Masks};
use crate::coloring::Coloring;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    /// Dichromatic number: fewest colors of an acyclic coloring.
    Dc,
    /// Diachromatic number: most colors of a complete acyclic coloring.
    Dac,
    /// Most colors of an acyclic b-coloring.
    Dib,
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parameter::Dc => "dc",
            Parameter::Dac => "dac",
            Parameter::Dib => "dib",
        })
    }
}

impl std::str::FromStr for Parameter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dc" => Ok(Parameter::Dc),
            "dac" => Ok(Parameter::Dac),
            "dib" => Ok(Parameter::Dib),
            other => Err(format!(
                "unknown parameter `{other}` (expected dc, dac or dib)"
            )),
        }
    }
}

/// Value, witness and optimality certificate of one exact solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub parameter: Parameter,
    pub value: usize,
    pub witness: Coloring,
    /// Where the scan over `k` started (a bound on the parameter).
    pub search_start: usize,
    /// Color counts searched exhaustively and found infeasible.
    pub exhausted: Vec<usize>,
    pub node_count: u64,
}

fn vertex_order(m: &Masks) -> Vec<usize> {
    let mut order: Vec<usize> = (0..m.n).collect();
    order.sort_by_key(|&v| {
        let deg = m.out[v].count_ones() + m.inn[v].count_ones();
        (std::cmp::Reverse(deg), v)
    });
    order
}

fn finish(colors: Vec<usize>) -> Coloring {
    Coloring::normalized(&colors)
}

/// Minimum number of colors in an acyclic coloring.
pub fn dc_exact(d: &Digraph) -> Result<SolveOutcome> {
    require_nonempty(d)?;
    let m = Masks::new(d, "dc solver")?;
    let n = d.order();
    let start = clique_number(d)?.max(n.div_ceil(acyclic_number(d)?));
    let order = vertex_order(&m);
    let mut exhausted = Vec::new();
    let mut nodes = 0;
    for k in start..=n {
        let mut s = PartitionSearch::new(&m, &order, k);
        let found = s.acyclic(0);
        nodes += s.nodes;
        if found {
            return Ok(SolveOutcome {
                parameter: Parameter::Dc,
                value: k,
                witness: finish(s.color),
                search_start: start,
                exhausted,
                node_count: nodes,
            });
        }
        exhausted.push(k);
    }
    unreachable!("singleton classes are always acyclic")
}

/// Maximum number of colors in a complete acyclic coloring.
pub fn dac_exact(d: &Digraph) -> Result<SolveOutcome> {
    require_nonempty(d)?;
    let m = Masks::new(d, "dac solver")?;
    let n = d.order();
    let omega = clique_number(d)?;
    let acyclic = acyclic_number(d)?;
    let start = dart_bound(d.size())
        .min((n + omega) / 2)
        .min(n - acyclic / 2)
        .min(n);
    let order = vertex_order(&m);
    let mut exhausted = Vec::new();
    let mut nodes = 0;
    for k in (1..=start).rev() {
        let mut s = PartitionSearch::new(&m, &order, k);
        let found = s.complete(0);
        nodes += s.nodes;
        if found {
            return Ok(SolveOutcome {
                parameter: Parameter::Dac,
                value: k,
                witness: finish(s.color),
                search_start: start,
                exhausted,
                node_count: nodes,
            });
        }
        exhausted.push(k);
    }
    unreachable!("a minimum acyclic coloring is complete")
}

/// Maximum number of colors in an acyclic b-coloring.
///
/// Scans `k` downward from the smallest known upper bound and stops at the
/// first feasible value; no interpolation property is assumed.
pub fn dib_exact(d: &Digraph) -> Result<SolveOutcome> {
    require_nonempty(d)?;
    let m = Masks::new(d, "dib solver")?;
    let n = d.order();
    let omega = clique_number(d)?;
    let acyclic = acyclic_number(d)?;
    let start = [
        d.delta() + 1,
        t_bound(d)?.t,
        dart_bound(d.size()),
        n - independence_number(d)? + 1,
        (n + omega) / 2,
        n - acyclic / 2,
        n,
    ]
    .into_iter()
    .min()
    .unwrap();
    let mut exhausted = Vec::new();
    let mut nodes = 0;
    for k in (1..=start).rev() {
        let (found, count) = b_search(&m, k);
        nodes += count;
        if let Some(colors) = found {
            return Ok(SolveOutcome {
                parameter: Parameter::Dib,
                value: k,
                witness: finish(colors),
                search_start: start,
                exhausted,
                node_count: nodes,
            });
        }
        exhausted.push(k);
    }
    unreachable!("a minimum acyclic coloring is a b-coloring")
}

/// An acyclic b-coloring with exactly `k` colors, if one exists.
pub fn b_coloring_exists(d: &Digraph, k: usize) -> Result<Option<Coloring>> {
    let n = d.order();
    if k == 0 || k > n {
        return Err(Error::ColorCountOutOfRange { k, n });
    }
    let m = Masks::new(d, "b-coloring search")?;
    Ok(b_search(&m, k).0.map(finish))
}

struct PartitionSearch<'a> {
    m: &'a Masks,
    order: &'a [usize],
    k: usize,
    classes: Vec<u64>,
    class_out: Vec<u64>,
    color: Vec<usize>,
    /// `rest[i]`: vertices `order[i..]`; `rest_out[i]`: their out-neighbors.
    rest: Vec<u64>,
    rest_out: Vec<u64>,
    nodes: u64,
}

impl<'a> PartitionSearch<'a> {
    fn new(m: &'a Masks, order: &'a [usize], k: usize) -> Self {
        let n = order.len();
        let mut rest = vec![0; n + 1];
        let mut rest_out = vec![0; n + 1];
        for i in (0..n).rev() {
            rest[i] = rest[i + 1] | 1 << order[i];
            rest_out[i] = rest_out[i + 1] | m.out[order[i]];
        }
        PartitionSearch {
            m,
            order,
            k,
            classes: Vec::with_capacity(k),
            class_out: Vec::with_capacity(k),
            color: vec![NONE; n],
            rest,
            rest_out,
            nodes: 0,
        }
    }

    /// Calls `visit` for every class `v` may join: existing ones in index order,
    /// then one fresh class while fewer than `k` are open.
    fn branch(&mut self, idx: usize, mut visit: impl FnMut(&mut Self) -> bool) -> bool {
        let v = self.order[idx];
        for c in 0..self.classes.len() {
            if self.m.closes_cycle(self.classes[c], v) {
                continue;
            }
            let (saved, saved_out) = (self.classes[c], self.class_out[c]);
            self.classes[c] |= 1 << v;
            self.class_out[c] |= self.m.out[v];
            self.color[v] = c;
            if visit(self) {
                return true;
            }
            self.classes[c] = saved;
            self.class_out[c] = saved_out;
        }
        if self.classes.len() < self.k {
            self.color[v] = self.classes.len();
            self.classes.push(1 << v);
            self.class_out.push(self.m.out[v]);
            if visit(self) {
                return true;
            }
            self.classes.pop();
            self.class_out.pop();
        }
        self.color[v] = NONE;
        false
    }

    /// At most `k` acyclic classes.
    fn acyclic(&mut self, idx: usize) -> bool {
        self.nodes += 1;
        if idx == self.order.len() {
            return true;
        }
        self.branch(idx, |s| s.acyclic(idx + 1))
    }

    /// Exactly `k` acyclic classes with a dart between every ordered pair.
    fn complete(&mut self, idx: usize) -> bool {
        self.nodes += 1;
        let open = self.classes.len();
        if open + (self.order.len() - idx) < self.k {
            return false;
        }
        let rest = self.rest[idx];
        let rest_out = self.rest_out[idx];
        for i in 0..open {
            let reach = self.class_out[i] | rest_out;
            for j in 0..open {
                if i != j && reach & (self.classes[j] | rest) == 0 {
                    return false;
                }
            }
        }
        if idx == self.order.len() {
            // open == k here; every pair was checked against empty `rest`.
            return true;
        }
        self.branch(idx, |s| s.complete(idx + 1))
    }
}

/// Two-phase search for an acyclic b-coloring with exactly `k` colors.
///
/// A positive basis is chosen first (one vertex of out-degree at least
/// `k - 1` per class, classes labeled by basis position), then a negative
/// basis, then the remaining vertices are placed most-constrained-first.
/// Every placement re-checks that each basis vertex can still reach, or be
/// reached from, every other class.
fn b_search(m: &Masks, k: usize) -> (Option<Vec<usize>>, u64) {
    let mut order: Vec<usize> = (0..m.n).collect();
    order.sort_by_key(|&v| {
        let deg = m.out[v].count_ones() + m.inn[v].count_ones();
        (std::cmp::Reverse(deg), v)
    });
    let need = (k - 1) as u32;
    let pos_cand: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&v| m.out[v].count_ones() >= need)
        .collect();
    let neg_cand: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&v| m.inn[v].count_ones() >= need)
        .collect();
    if pos_cand.len() < k
        || neg_cand.len() < k
        || k * (k - 1) > m.out.iter().map(|r| r.count_ones() as usize).sum()
    {
        return (None, 0);
    }
    let mut s = BSearch {
        m,
        k,
        classes: vec![0; k],
        color: vec![NONE; m.n],
        unassigned: m.all(),
        pos: Vec::with_capacity(k),
        neg: Vec::with_capacity(k),
        pos_cand,
        neg_cand,
        nodes: 0,
    };
    let found = s.choose_positive(0);
    let nodes = s.nodes;
    (found.then_some(s.color), nodes)
}

struct BSearch<'a> {
    m: &'a Masks,
    k: usize,
    classes: Vec<u64>,
    color: Vec<usize>,
    unassigned: u64,
    pos: Vec<usize>,
    neg: Vec<usize>,
    pos_cand: Vec<usize>,
    neg_cand: Vec<usize>,
    nodes: u64,
}

impl BSearch<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.classes[c] |= 1 << v;
        self.unassigned &= !(1 << v);
        self.color[v] = c;
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.classes[c] &= !(1 << v);
        self.unassigned |= 1 << v;
        self.color[v] = NONE;
    }

    /// Every chosen basis vertex still has a potential neighbor in each other class.
    fn obligations_hold(&self) -> bool {
        let reachable = |row: u64, own: usize| {
            (0..self.k).all(|j| j == own || row & (self.classes[j] | self.unassigned) != 0)
        };
        self.pos
            .iter()
            .enumerate()
            .all(|(i, &u)| reachable(self.m.out[u], i))
            && self
                .neg
                .iter()
                .enumerate()
                .all(|(i, &v)| reachable(self.m.inn[v], i))
    }

    fn choose_positive(&mut self, from: usize) -> bool {
        self.nodes += 1;
        let i = self.pos.len();
        if i == self.k {
            return self.obligations_hold() && self.choose_negative();
        }
        let remaining = self.k - i;
        for idx in from..self.pos_cand.len() {
            if self.pos_cand.len() - idx < remaining {
                break;
            }
            let u = self.pos_cand[idx];
            self.assign(u, i);
            self.pos.push(u);
            if self.choose_positive(idx + 1) {
                return true;
            }
            self.pos.pop();
            self.unassign(u, i);
        }
        false
    }

    fn choose_negative(&mut self) -> bool {
        self.nodes += 1;
        let i = self.neg.len();
        if i == self.k {
            return self.extend();
        }
        let need = (self.k - 1) as u32;
        let u = self.pos[i];
        if self.m.inn[u].count_ones() >= need {
            self.neg.push(u);
            if self.obligations_hold() && self.choose_negative() {
                return true;
            }
            self.neg.pop();
        }
        for idx in 0..self.neg_cand.len() {
            let v = self.neg_cand[idx];
            if self.color[v] != NONE || self.m.closes_cycle(self.classes[i], v) {
                continue;
            }
            self.assign(v, i);
            self.neg.push(v);
            if self.obligations_hold() && self.choose_negative() {
                return true;
            }
            self.neg.pop();
            self.unassign(v, i);
        }
        false
    }

    fn extend(&mut self) -> bool {
        self.nodes += 1;
        if self.unassigned == 0 {
            return true;
        }
        // Most constrained vertex: fewest classes it can join acyclically.
        let mut pick = None;
        for v in bits(self.unassigned) {
            let allowed: Vec<usize> = (0..self.k)
                .filter(|&c| !self.m.closes_cycle(self.classes[c], v))
                .collect();
            if allowed.is_empty() {
                return false;
            }
            if pick
                .as_ref()
                .is_none_or(|(_, a): &(usize, Vec<usize>)| allowed.len() < a.len())
            {
                pick = Some((v, allowed));
            }
        }
        let (v, allowed) = pick.unwrap();
        for c in allowed {
            self.assign(v, c);
            if self.obligations_hold() && self.extend() {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}
