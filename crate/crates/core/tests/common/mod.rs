#![allow(dead_code)]

use dib_core::Digraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_digraph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Digraph {
    let darts: Vec<_> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::new(n, &darts).unwrap()
}

/// Every labeled digraph of order n, built independently of the library's corpus code.
pub fn every_digraph(n: usize) -> Vec<Digraph> {
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|(u, v)| u != v)
        .collect();
    (0..1u32 << cells.len())
        .map(|mask| {
            let darts: Vec<_> = cells
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            Digraph::new(n, &darts).unwrap()
        })
        .collect()
}

pub fn every_digraph_up_to(n_max: usize) -> Vec<Digraph> {
    (1..=n_max).flat_map(every_digraph).collect()
}

/// Brute-force reference values over all set partitions.
pub struct Oracle {
    pub dc: usize,
    pub dac: usize,
    pub dib: usize,
}

fn adjacency(d: &Digraph) -> Vec<Vec<bool>> {
    let n = d.order();
    (0..n)
        .map(|u| (0..n).map(|v| d.has_dart(u, v)).collect())
        .collect()
}

/// Cycle detection by depth-first search with three vertex states.
pub fn has_cycle(adj: &[Vec<bool>], members: &[usize]) -> bool {
    fn visit(adj: &[Vec<bool>], members: &[usize], v: usize, state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in members {
            if adj[v][w] && (state[w] == 1 || (state[w] == 0 && visit(adj, members, w, state))) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; adj.len()];
    members
        .iter()
        .any(|&v| state[v] == 0 && visit(adj, members, v, &mut state))
}

/// Calls `f` on every restricted growth string of length n.
pub fn for_each_partition(n: usize, f: &mut impl FnMut(&[usize], usize)) {
    fn rec(colors: &mut Vec<usize>, n: usize, k: usize, f: &mut impl FnMut(&[usize], usize)) {
        if colors.len() == n {
            f(colors, k);
            return;
        }
        for c in 0..=k {
            colors.push(c);
            rec(colors, n, k.max(c + 1), f);
            colors.pop();
        }
    }
    rec(&mut Vec::with_capacity(n), n, 0, f);
}

pub struct Verdict {
    pub acyclic: bool,
    pub complete: bool,
    pub b: bool,
}

pub fn judge(adj: &[Vec<bool>], colors: &[usize], k: usize) -> Verdict {
    let n = adj.len();
    let classes: Vec<Vec<usize>> = (0..k)
        .map(|c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    let acyclic = classes.iter().all(|cl| !has_cycle(adj, cl));
    let reaches = |v: usize, j: usize, out: bool| {
        classes[j]
            .iter()
            .any(|&w| if out { adj[v][w] } else { adj[w][v] })
    };
    let complete =
        (0..k).all(|i| (0..k).all(|j| i == j || classes[i].iter().any(|&v| reaches(v, j, true))));
    let b = (0..k).all(|i| {
        [true, false].iter().all(|&out| {
            classes[i]
                .iter()
                .any(|&v| (0..k).all(|j| j == i || reaches(v, j, out)))
        })
    });
    Verdict {
        acyclic,
        complete,
        b,
    }
}

pub fn oracle(d: &Digraph) -> Oracle {
    let adj = adjacency(d);
    let (mut dc, mut dac, mut dib) = (usize::MAX, 0, 0);
    for_each_partition(d.order(), &mut |colors, k| {
        let v = judge(&adj, colors, k);
        if v.acyclic {
            dc = dc.min(k);
            if v.complete {
                dac = dac.max(k);
            }
            if v.b {
                dib = dib.max(k);
            }
        }
    });
    Oracle { dc, dac, dib }
}

pub fn oracle_verdict(d: &Digraph, colors: &[usize]) -> Verdict {
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    judge(&adjacency(d), colors, k)
}
