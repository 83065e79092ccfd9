//! Canonical forms for small digraphs.
//!
//! The code of a labeled digraph lists, for each vertex `p` in turn, the bit
//! pairs `A(p,q), A(q,p)` for all `q < p`. Every prefix of the code is thus
//! fixed by the subdigraph induced on the first vertices, which lets the
//! permutation search below prune on prefixes. The canonical form is the
//! smallest code over all labelings that list vertices by nondecreasing
//! `(out-degree, in-degree)`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const CANON_LIMIT: usize = 8;

/// Isomorphism-invariant byte string: the order followed by the packed code.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm(pub Vec<u8>);

/// Small dense adjacency used by the permutation searches.
#[derive(Clone, Copy)]
pub(crate) struct Rows {
    pub n: usize,
    pub out: [u16; CANON_LIMIT],
}

impl Rows {
    pub fn from_digraph(d: &Digraph) -> Self {
        let mut out = [0u16; CANON_LIMIT];
        for (u, v) in d.darts() {
            out[u] |= 1 << v;
        }
        Rows { n: d.order(), out }
    }

    #[inline]
    pub fn dart(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    /// Code bits contributed by placing vertex `v` at position `p` after `placed[..p]`.
    #[inline]
    fn segment(&self, placed: &[usize], v: usize, buf: &mut Vec<bool>) {
        for &q in placed {
            buf.push(self.dart(v, q));
            buf.push(self.dart(q, v));
        }
    }

    pub fn code(&self) -> Vec<bool> {
        let mut code = Vec::with_capacity(self.n * self.n.saturating_sub(1));
        let ids: Vec<usize> = (0..self.n).collect();
        for p in 0..self.n {
            self.segment(&ids[..p], p, &mut code);
        }
        code
    }

    pub fn to_digraph(self) -> Digraph {
        let darts: Vec<_> = (0..self.n)
            .flat_map(|u| (0..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.dart(u, v))
            .collect();
        Digraph::new(self.n, &darts).expect("rows hold a simple digraph")
    }
}

struct Search<'a> {
    rows: &'a Rows,
    /// Vertices allowed at each position.
    allowed: Vec<u16>,
    placed: Vec<usize>,
    code: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
    /// Stop at the first labeling strictly below `target`.
    target: Option<&'a [bool]>,
    found_smaller: bool,
}

impl Search<'_> {
    fn bound(&self) -> Option<&[bool]> {
        self.target
            .or(self.best.as_ref().map(|(c, _)| c.as_slice()))
    }

    fn run(&mut self, used: u16) {
        if self.found_smaller {
            return;
        }
        let p = self.placed.len();
        if p == self.rows.n {
            match self.target {
                Some(t) => self.found_smaller |= self.code.as_slice() < t,
                None => {
                    if self.best.as_ref().is_none_or(|(c, _)| self.code < *c) {
                        self.best = Some((self.code.clone(), self.placed.clone()));
                    }
                }
            }
            return;
        }
        let mut cand = self.allowed[p] & !used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let mark = self.code.len();
            let placed = std::mem::take(&mut self.placed);
            self.rows.segment(&placed, v, &mut self.code);
            self.placed = placed;
            let order = self
                .bound()
                .map_or(Ordering::Less, |b| self.code[..].cmp(&b[..self.code.len()]));
            if order == Ordering::Less && self.target.is_some() {
                self.found_smaller = true;
                return;
            }
            if order != Ordering::Greater {
                self.placed.push(v);
                self.run(used | 1 << v);
                self.placed.pop();
            }
            self.code.truncate(mark);
            if self.found_smaller {
                return;
            }
        }
    }
}

fn pack(n: usize, code: &[bool]) -> CanonicalForm {
    let mut bytes = vec![n as u8];
    for chunk in code.chunks(8) {
        let mut b = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            b |= (bit as u8) << (7 - i);
        }
        bytes.push(b);
    }
    CanonicalForm(bytes)
}

fn degree_cells(d: &Digraph) -> Vec<u16> {
    let n = d.order();
    let key = |v: usize| (d.out_degree(v), d.in_degree(v));
    let mut keys: Vec<_> = (0..n).map(key).collect();
    keys.sort_unstable();
    keys.iter()
        .map(|k| {
            (0..n)
                .filter(|&v| key(v) == *k)
                .fold(0u16, |m, v| m | 1 << v)
        })
        .collect()
}

/// Canonical form and a labeling achieving it (`perm[position] = vertex`).
pub fn canonical_labeling(d: &Digraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = d.order();
    if n > CANON_LIMIT {
        return Err(Error::TooLarge {
            what: "canonical form",
            n,
            limit: CANON_LIMIT,
        });
    }
    let rows = Rows::from_digraph(d);
    let mut search = Search {
        rows: &rows,
        allowed: degree_cells(d),
        placed: Vec::with_capacity(n),
        code: Vec::with_capacity(n * n),
        best: None,
        target: None,
        found_smaller: false,
    };
    search.run(0);
    let (code, perm) = search.best.unwrap_or_default();
    Ok((pack(n, &code), perm))
}

pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    canonical_labeling(d).map(|(form, _)| form)
}

/// The isomorphic copy of `d` whose own code is its canonical form.
pub fn canonical_digraph(d: &Digraph) -> Result<Digraph> {
    let (_, perm) = canonical_labeling(d)?;
    let mut inverse = vec![0; perm.len()];
    for (pos, &v) in perm.iter().enumerate() {
        inverse[v] = pos;
    }
    d.relabel(&inverse)
}

/// Whether no relabeling of `rows` has a smaller code (no degree refinement).
pub(crate) fn is_minimal(rows: &Rows) -> bool {
    let code = rows.code();
    let all = ((1u32 << rows.n) - 1) as u16;
    let mut search = Search {
        rows,
        allowed: vec![all; rows.n],
        placed: Vec::with_capacity(rows.n),
        code: Vec::with_capacity(code.len()),
        best: None,
        target: Some(&code),
        found_smaller: false,
    };
    search.run(0);
    !search.found_smaller
}
