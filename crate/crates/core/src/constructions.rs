//! Named digraph families and their explicit acyclic b-colorings.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::Coloring;
use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};

/// Attempts allowed when superposing random permutations.
pub const REGULAR_RETRY_BUDGET: usize = 10_000;

/// A named family member, with a canonical text form such as
/// `circulant:n=7,J=1+2+3` or `random-regular:n=12,r=2,seed=7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    TransitiveTournament {
        n: usize,
    },
    CompleteSymmetric {
        n: usize,
    },
    DirectedCycle {
        n: usize,
    },
    Empty {
        n: usize,
    },
    Circulant {
        n: usize,
        jumps: Vec<i64>,
    },
    RandomTournament {
        n: usize,
        seed: u64,
    },
    RandomRegular {
        n: usize,
        r: usize,
        seed: u64,
        digons: bool,
    },
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::TransitiveTournament { n }
            | FamilySpec::CompleteSymmetric { n }
            | FamilySpec::DirectedCycle { n }
            | FamilySpec::Empty { n }
            | FamilySpec::Circulant { n, .. }
            | FamilySpec::RandomTournament { n, .. }
            | FamilySpec::RandomRegular { n, .. } => n,
        }
    }

    pub fn generate(&self) -> Result<Digraph> {
        match self {
            &FamilySpec::TransitiveTournament { n } => Ok(transitive_tournament(n)),
            &FamilySpec::CompleteSymmetric { n } => Ok(Digraph::empty(n).complement()),
            &FamilySpec::DirectedCycle { n } => directed_cycle(n),
            &FamilySpec::Empty { n } => Ok(Digraph::empty(n)),
            FamilySpec::Circulant { n, jumps } => circulant(*n, jumps),
            &FamilySpec::RandomTournament { n, seed } => Ok(random_tournament(n, seed)),
            &FamilySpec::RandomRegular { n, r, seed, digons } => random_regular(n, r, seed, digons),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::TransitiveTournament { n } => write!(f, "transitive:n={n}"),
            FamilySpec::CompleteSymmetric { n } => write!(f, "complete:n={n}"),
            FamilySpec::DirectedCycle { n } => write!(f, "cycle:n={n}"),
            FamilySpec::Empty { n } => write!(f, "empty:n={n}"),
            FamilySpec::Circulant { n, jumps } => {
                let j: Vec<String> = jumps.iter().map(i64::to_string).collect();
                write!(f, "circulant:n={n},J={}", j.join("+"))
            }
            FamilySpec::RandomTournament { n, seed } => {
                write!(f, "random-tournament:n={n},seed={seed}")
            }
            FamilySpec::RandomRegular { n, r, seed, digons } => {
                write!(f, "random-regular:n={n},r={r},seed={seed}")?;
                if !digons {
                    f.write_str(",digons=false")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidFamily(msg);
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut n = None;
        let mut r = None;
        let mut seed = 0u64;
        let mut jumps = None;
        let mut digons = true;
        for pair in rest.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got `{pair}`")))?;
            let int = |v: &str| {
                v.parse::<usize>()
                    .map_err(|_| bad(format!("`{key}` needs a non-negative integer, got `{v}`")))
            };
            match key {
                "n" => n = Some(int(value)?),
                "r" => r = Some(int(value)?),
                "seed" => {
                    seed = value
                        .parse()
                        .map_err(|_| bad(format!("bad seed `{value}`")))?
                }
                "J" | "j" => {
                    let parsed: std::result::Result<Vec<i64>, _> =
                        value.split('+').map(str::parse::<i64>).collect();
                    jumps = Some(parsed.map_err(|_| bad(format!("bad jump set `{value}`")))?);
                }
                "digons" => {
                    digons = match value {
                        "true" | "1" | "yes" => true,
                        "false" | "0" | "no" => false,
                        _ => return Err(bad(format!("bad digons flag `{value}`"))),
                    }
                }
                _ => return Err(bad(format!("unknown key `{key}` for family `{tag}`"))),
            }
        }
        let n = n.ok_or_else(|| bad(format!("family `{tag}` needs n=<order>")))?;
        let spec = match tag {
            "transitive" | "transitive_tournament" | "transitive-tournament" => {
                FamilySpec::TransitiveTournament { n }
            }
            "complete" | "complete_symmetric" | "complete-symmetric" => {
                FamilySpec::CompleteSymmetric { n }
            }
            "cycle" | "directed_cycle" | "directed-cycle" => FamilySpec::DirectedCycle { n },
            "empty" => FamilySpec::Empty { n },
            "circulant" => FamilySpec::Circulant {
                n,
                jumps: jumps.ok_or_else(|| bad("circulant needs J=<j1+j2+...>".into()))?,
            },
            "random-tournament" | "random_tournament" => FamilySpec::RandomTournament { n, seed },
            "random-regular" | "random_regular" => FamilySpec::RandomRegular {
                n,
                r: r.ok_or_else(|| bad("random-regular needs r=<degree>".into()))?,
                seed,
                digons,
            },
            _ => return Err(bad(format!("unknown family `{tag}`"))),
        };
        Ok(spec)
    }
}

/// Darts `i -> j` for all `i < j`.
pub fn transitive_tournament(n: usize) -> Digraph {
    let darts: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Digraph::new(n, &darts).expect("valid darts")
}

pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!(
            "a directed cycle needs n >= 2, got {n}"
        )));
    }
    let darts: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Digraph::new(n, &darts)
}

/// Reduces a jump set modulo `n`, rejecting zero, self-inverse and
/// opposite-sign pairs (exactly one of `j`, `-j` may appear).
pub fn validate_jumps(n: usize, jumps: &[i64]) -> Result<Vec<usize>> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!(
            "circulants need n >= 3, got {n}"
        )));
    }
    if jumps.is_empty() {
        return Err(Error::InvalidFamily("jump set must be nonempty".into()));
    }
    let modulus = n as i64;
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(jumps.len());
    for &jump in jumps {
        let j = jump.rem_euclid(modulus) as usize;
        let reject = |reason: &str| Error::InvalidJump {
            jump,
            n,
            reason: reason.to_string(),
        };
        if j == 0 {
            return Err(reject("jump is 0 modulo n"));
        }
        if 2 * j == n {
            return Err(reject("jump equals its own negative"));
        }
        if seen[j] {
            return Err(reject("jump repeated"));
        }
        if seen[n - j] {
            return Err(reject("set already contains its negative"));
        }
        seen[j] = true;
        out.push(j);
    }
    Ok(out)
}

/// Vertices `Z_n`, dart `i -> j` iff `j - i` is in the jump set.
pub fn circulant(n: usize, jumps: &[i64]) -> Result<Digraph> {
    let jumps = validate_jumps(n, jumps)?;
    let darts: Vec<_> = (0..n)
        .flat_map(|i| jumps.iter().map(move |&j| (i, (i + j) % n)))
        .collect();
    Digraph::new(n, &darts)
}

pub fn random_tournament(n: usize, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut darts = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            darts.push(if rng.gen::<bool>() { (i, j) } else { (j, i) });
        }
    }
    Digraph::new(n, &darts).expect("valid darts")
}

/// Superposes `r` random permutations without fixed points or repeated darts.
/// With `digons == false`, reverse pairs are rejected as well.
pub fn random_regular(n: usize, r: usize, seed: u64, digons: bool) -> Result<Digraph> {
    if r >= n.max(1) && !(n == 0 && r == 0) {
        return Err(Error::InvalidFamily(format!(
            "random-regular needs r < n, got r={r}, n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    'restart: while attempts < REGULAR_RETRY_BUDGET {
        let mut adj = vec![false; n * n];
        for _ in 0..r {
            let mut placed = false;
            for _ in 0..64 {
                attempts += 1;
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let ok = (0..n).all(|u| {
                    let v = perm[u];
                    v != u && !adj[u * n + v] && (digons || (!adj[v * n + u] && perm[v] != u))
                });
                if ok {
                    for (u, &v) in perm.iter().enumerate() {
                        adj[u * n + v] = true;
                    }
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'restart;
            }
        }
        return Digraph::from_matrix(n, &adj);
    }
    Err(Error::RetryBudgetExhausted { attempts })
}

/// Pairs the `i`-th and `(n+1-i)`-th vertices of the acyclic order; `ceil(n/2)` colors.
pub fn color_transitive(n: usize) -> Result<Coloring> {
    if n == 0 {
        return Err(Error::Precondition(
            "transitive coloring needs n >= 1".into(),
        ));
    }
    Coloring::new((0..n).map(|i| i.min(n - 1 - i)).collect())
}

/// `m + 1` colors on the circulant tournament of order `2m + 1` with jumps `1..=m`:
/// vertex 0 alone, and `i`, `i + m` sharing color `i`.
pub fn color_circulant_tournament(m: usize) -> Result<Coloring> {
    if m == 0 {
        return Err(Error::Precondition(
            "circulant tournament coloring needs m >= 1".into(),
        ));
    }
    let mut colors = vec![0; 2 * m + 1];
    for i in 1..=m {
        colors[i] = i;
        colors[i + m] = i;
    }
    Coloring::new(colors)
}

/// `k + 1` colors on the circulant of order `n` with jumps `1..=k`, repeating
/// `0, 1, ..., k` around the cycle.
pub fn color_circulant_path(n: usize, k: usize) -> Result<Coloring> {
    if n < 4 || k == 0 || k > (n - 2) / 2 {
        return Err(Error::Precondition(format!(
            "circulant path coloring needs n >= 4 and 1 <= k <= floor((n-2)/2), got n={n}, k={k}"
        )));
    }
    Coloring::new((0..n).map(|v| v % (k + 1)).collect())
}

/// Explicit `(Δ+1)`-coloring from a positive basis `bplus` and negative basis
/// `bminus`. Members of the same basis must lie at pairwise weak distance at
/// least 4, members of different bases at least 3 (shared members allowed).
///
/// Shared members are aligned first and basis position `i` gets color `i`.
/// The out-neighbors of the `i`-th positive vertex take the other colors in
/// increasing vertex order; uncolored in-neighbors of the `i`-th negative
/// vertex take the smallest color still missing around it that keeps its
/// class acyclic. The rest is colored greedily within `0..=Δ`.
#[allow(clippy::needless_range_loop)]
pub fn spread_basis_coloring(
    d: &Digraph,
    bplus: &VertexSet,
    bminus: &VertexSet,
) -> Result<Coloring> {
    let n = d.order();
    let delta = d.delta();
    let fail = |msg: String| Err(Error::Precondition(msg));
    for (name, set) in [("B+", bplus), ("B-", bminus)] {
        if set.universe() != n {
            return fail(format!(
                "{name} is over {} vertices, digraph has {n}",
                set.universe()
            ));
        }
        if set.len() != delta + 1 {
            return fail(format!(
                "|{name}| = {}, expected delta + 1 = {}",
                set.len(),
                delta + 1
            ));
        }
    }
    if let Some(u) = bplus.iter().find(|&u| d.out_degree(u) != delta) {
        return fail(format!(
            "out-degree of {u} in B+ is {}, expected delta = {delta}",
            d.out_degree(u)
        ));
    }
    if let Some(v) = bminus.iter().find(|&v| d.in_degree(v) != delta) {
        return fail(format!(
            "in-degree of {v} in B- is {}, expected delta = {delta}",
            d.in_degree(v)
        ));
    }
    let mut basis = bplus.clone();
    basis.union_with(bminus);
    let members = basis.to_vec();
    for (a, &x) in members.iter().enumerate() {
        let dist = d.weak_distances_from(x);
        for &y in &members[a + 1..] {
            // Members of one basis need disjoint, non-adjacent neighborhoods;
            // across the bases, disjoint neighborhoods suffice.
            let same_side = (bplus.contains(x) && bplus.contains(y))
                || (bminus.contains(x) && bminus.contains(y));
            let required = if same_side { 4 } else { 3 };
            if let Some(dxy) = dist[y].filter(|&dxy| dxy < required) {
                return fail(format!("weak distance d({x},{y}) = {dxy} < {required}"));
            }
        }
    }

    let shared: Vec<usize> = bplus.iter().filter(|&v| bminus.contains(v)).collect();
    let positive: Vec<usize> = shared
        .iter()
        .copied()
        .chain(bplus.iter().filter(|v| !bminus.contains(*v)))
        .collect();
    let negative: Vec<usize> = shared
        .iter()
        .copied()
        .chain(bminus.iter().filter(|v| !bplus.contains(*v)))
        .collect();

    const NONE: usize = usize::MAX;
    let k = delta + 1;
    let mut colors = vec![NONE; n];
    for i in 0..k {
        colors[positive[i]] = i;
        colors[negative[i]] = i;
    }
    for (i, &u) in positive.iter().enumerate() {
        let palette = (0..k).filter(|&c| c != i);
        for (z, c) in d.out_neighbors(u).iter().zip(palette) {
            if colors[z] != NONE {
                return Err(Error::ConstructionFailed(format!(
                    "out-neighbor {z} of {u} is already colored"
                )));
            }
            colors[z] = c;
        }
    }
    let mut classes = vec![VertexSet::empty(n); k];
    for (v, &c) in colors.iter().enumerate() {
        if c != NONE {
            classes[c].insert(v);
        }
    }
    let keeps_acyclic = |classes: &[VertexSet], c: usize, v: usize| {
        let mut grown = classes[c].clone();
        grown.insert(v);
        d.induced(&grown).map(|h| h.is_acyclic()).unwrap_or(false)
    };
    for (i, &v) in negative.iter().enumerate() {
        let mut used: Vec<bool> = vec![false; k];
        used[i] = true;
        for z in d.in_neighbors(v).iter() {
            if colors[z] != NONE {
                used[colors[z]] = true;
            }
        }
        for z in d.in_neighbors(v).iter() {
            if colors[z] != NONE {
                continue;
            }
            let c = (0..k)
                .find(|&c| !used[c] && keeps_acyclic(&classes, c, z))
                .ok_or_else(|| {
                    Error::ConstructionFailed(format!(
                        "no acyclic color left for in-neighbor {z} of {v}"
                    ))
                })?;
            used[c] = true;
            colors[z] = c;
            classes[c].insert(z);
        }
    }
    for v in 0..n {
        if colors[v] != NONE {
            continue;
        }
        let c = (0..k)
            .find(|&c| keeps_acyclic(&classes, c, v))
            .ok_or_else(|| {
                Error::ConstructionFailed(format!("vertex {v} is blocked in all {k} classes"))
            })?;
        colors[v] = c;
        classes[c].insert(v);
    }
    Coloring::new(colors)
}

/// Picks `r + 1` vertices of an `r`-regular digraph at pairwise weak distance
/// at least 4, deleting each pick's closed third weak neighborhood before the
/// next pick (smallest surviving index first). The same set serves as both
/// bases. `None` means the greedy ran out of vertices.
pub fn spread_vertices(d: &Digraph, r: usize) -> Result<Option<(VertexSet, VertexSet)>> {
    if d.regularity() != Some(r) {
        return Err(Error::NotRegular);
    }
    let n = d.order();
    let mut alive = VertexSet::full(n);
    let mut picked = VertexSet::empty(n);
    while picked.len() < r + 1 {
        let Some(v) = alive.iter().next() else {
            return Ok(None);
        };
        picked.insert(v);
        for (w, dist) in d.weak_distances_from(v).into_iter().enumerate() {
            if dist.is_some_and(|x| x <= 3) {
                alive.remove(w);
            }
        }
    }
    Ok(Some((picked.clone(), picked)))
}

/// A family member together with an explicit coloring.
#[derive(Clone, Debug, Serialize)]
pub struct Construction {
    #[serde(skip)]
    pub digraph: Digraph,
    pub coloring: Coloring,
    /// Which construction produced the coloring.
    pub method: &'static str,
}

/// Builds the family member and its closed-form coloring, when one is known:
/// transitive tournaments, complete symmetric digraphs, circulants with jumps
/// `1..=k`, and regular digraphs admitting spread bases.
pub fn construct(spec: &FamilySpec) -> Result<Construction> {
    let digraph = spec.generate()?;
    let n = digraph.order();
    let consecutive = |jumps: &[usize]| {
        let mut sorted = jumps.to_vec();
        sorted.sort_unstable();
        sorted.iter().enumerate().all(|(i, &j)| j == i + 1)
    };
    let (coloring, method) = match spec {
        FamilySpec::TransitiveTournament { .. } => (color_transitive(n)?, "transitive_pairs"),
        FamilySpec::CompleteSymmetric { .. } if n > 0 => {
            (Coloring::new((0..n).collect())?, "singletons")
        }
        FamilySpec::DirectedCycle { n: 3 } => {
            (color_circulant_tournament(1)?, "circulant_tournament")
        }
        FamilySpec::DirectedCycle { .. } if n >= 4 => {
            (color_circulant_path(n, 1)?, "circulant_blocks")
        }
        FamilySpec::Circulant { jumps, .. } => {
            let jumps = validate_jumps(n, jumps)?;
            let k = jumps.len();
            if consecutive(&jumps) && n == 2 * k + 1 {
                (color_circulant_tournament(k)?, "circulant_tournament")
            } else if consecutive(&jumps) && n >= 4 && k <= (n - 2) / 2 {
                (color_circulant_path(n, k)?, "circulant_blocks")
            } else {
                spread_construction(&digraph)?
            }
        }
        _ => spread_construction(&digraph)?,
    };
    Ok(Construction {
        digraph,
        coloring,
        method,
    })
}

fn spread_construction(d: &Digraph) -> Result<(Coloring, &'static str)> {
    let r = d.regularity().ok_or_else(|| {
        Error::ConstructionFailed("no closed-form coloring for this non-regular digraph".into())
    })?;
    let (bplus, bminus) = spread_vertices(d, r)?.ok_or_else(|| {
        Error::ConstructionFailed(format!(
            "could not find {} vertices at pairwise weak distance >= 4",
            r + 1
        ))
    })?;
    Ok((spread_basis_coloring(d, &bplus, &bminus)?, "spread_bases"))
}
