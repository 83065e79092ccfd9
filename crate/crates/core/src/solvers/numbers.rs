use super::Masks;
use crate::digraph::Digraph;
use crate::error::Result;

/// Largest complete symmetric induced subdigraph.
pub fn clique_number(d: &Digraph) -> Result<usize> {
    let m = Masks::new(d, "clique number")?;
    let adj: Vec<u64> = (0..m.n).map(|v| m.out[v] & m.inn[v]).collect();
    Ok(max_clique(&adj, m.all()))
}

/// Largest vertex set with no dart in either direction between members.
pub fn independence_number(d: &Digraph) -> Result<usize> {
    let m = Masks::new(d, "independence number")?;
    let all = m.all();
    let adj: Vec<u64> = (0..m.n)
        .map(|v| !(m.out[v] | m.inn[v] | 1 << v) & all)
        .collect();
    Ok(max_clique(&adj, all))
}

/// Largest vertex set inducing an acyclic subdigraph.
pub fn acyclic_number(d: &Digraph) -> Result<usize> {
    let m = Masks::new(d, "acyclic number")?;
    let mut order: Vec<usize> = (0..m.n).collect();
    // Low-degree vertices first: they rarely close cycles, so good sets come early.
    order.sort_by_key(|&v| ((m.out[v] | m.inn[v]).count_ones(), v));

    let mut greedy = 0u64;
    for &v in &order {
        if !m.closes_cycle(greedy, v) {
            greedy |= 1 << v;
        }
    }
    let mut best = greedy.count_ones() as usize;
    acyclic_rec(&m, &order, 0, 0, 0, &mut best);
    Ok(best)
}

fn acyclic_rec(m: &Masks, order: &[usize], idx: usize, set: u64, size: usize, best: &mut usize) {
    if size + (order.len() - idx) <= *best {
        return;
    }
    if idx == order.len() {
        *best = size;
        return;
    }
    let v = order[idx];
    if !m.closes_cycle(set, v) {
        acyclic_rec(m, order, idx + 1, set | 1 << v, size + 1, best);
    }
    acyclic_rec(m, order, idx + 1, set, size, best);
}

fn max_clique(adj: &[u64], all: u64) -> usize {
    let mut best = 0;
    clique_rec(adj, all, 0, &mut best);
    best
}

// Greedy-coloring bound: vertices in one color class are pairwise
// non-adjacent, so the number of classes bounds any clique in `cand`.
fn clique_rec(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    let (order, colors) = color_bound(adj, cand);
    let mut cand = cand;
    for (&v, &c) in order.iter().zip(&colors).rev() {
        if size + c <= *best {
            return;
        }
        clique_rec(adj, cand & adj[v], size + 1, best);
        cand &= !(1 << v);
    }
}

fn color_bound(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !adj[v];
            uncolored &= !(1 << v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        let darts: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::new(n, &darts).unwrap()
    }

    fn complete(n: usize) -> Digraph {
        Digraph::empty(n).complement()
    }

    fn transitive(n: usize) -> Digraph {
        let darts: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Digraph::new(n, &darts).unwrap()
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&complete(5)).unwrap(), 5);
        assert_eq!(clique_number(&transitive(6)).unwrap(), 1);
        let d = Digraph::new(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(clique_number(&d).unwrap(), 2);
        assert_eq!(clique_number(&Digraph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&Digraph::empty(6)).unwrap(), 6);
        assert_eq!(independence_number(&complete(4)).unwrap(), 1);
        assert_eq!(independence_number(&cycle(4)).unwrap(), 2);
    }

    #[test]
    fn acyclic_number_examples() {
        assert_eq!(acyclic_number(&transitive(7)).unwrap(), 7);
        for n in 2..9 {
            assert_eq!(acyclic_number(&cycle(n)).unwrap(), n - 1);
        }
        assert_eq!(acyclic_number(&complete(5)).unwrap(), 1);
    }
}
