//! Exact invariants: clique, independence and acyclic numbers, the three
//! coloring parameters and the bounds relating them.
//!
//! Everything here works on 64-bit adjacency masks, so solvers accept
//! digraphs of order at most [`SOLVER_LIMIT`].

mod bounds;
mod numbers;
mod search;

pub use bounds::{bounds_report, dart_bound, t_bound, Bound, BoundKind, BoundsReport, TBound};
pub use numbers::{acyclic_number, clique_number, independence_number};
pub use search::{b_coloring_exists, dac_exact, dc_exact, dib_exact, Parameter, SolveOutcome};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const SOLVER_LIMIT: usize = 64;

#[derive(Clone, Debug)]
pub(crate) struct Masks {
    pub n: usize,
    pub out: Vec<u64>,
    pub inn: Vec<u64>,
}

impl Masks {
    pub fn new(d: &Digraph, what: &'static str) -> Result<Self> {
        let n = d.order();
        if n > SOLVER_LIMIT {
            return Err(Error::TooLarge {
                what,
                n,
                limit: SOLVER_LIMIT,
            });
        }
        let row = |set: &crate::digraph::VertexSet| set.iter().fold(0u64, |m, v| m | 1 << v);
        Ok(Masks {
            n,
            out: (0..n).map(|v| row(d.out_neighbors(v))).collect(),
            inn: (0..n).map(|v| row(d.in_neighbors(v))).collect(),
        })
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Whether adding `v` to the acyclic set `class` closes a directed cycle.
    pub fn closes_cycle(&self, class: u64, v: usize) -> bool {
        let targets = self.inn[v] & class;
        if targets == 0 {
            return false;
        }
        let mut frontier = self.out[v] & class;
        let mut seen = frontier;
        while frontier != 0 {
            if frontier & targets != 0 {
                return true;
            }
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.out[u];
            }
            next &= class & !seen;
            seen |= next;
            frontier = next;
        }
        false
    }
}

/// Iterates set bits from least significant upward.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn require_nonempty(d: &Digraph) -> Result<()> {
    if d.order() == 0 {
        Err(Error::EmptyDigraph)
    } else {
        Ok(())
    }
}
