//! Property sweeps over exhaustive or sampled corpora, and the regular-digraph scan.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::canon::CANON_LIMIT;
use super::regular::enumerate_regular;
use crate::codec::{from_digraph6, to_digraph6};
use crate::constructions::random_tournament;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::solvers::{
    acyclic_number, clique_number, dac_exact, dart_bound, dc_exact, dib_exact, independence_number,
    t_bound,
};

pub const EXHAUSTIVE_DIGRAPH_LIMIT: usize = 4;
pub const EXHAUSTIVE_TOURNAMENT_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PropertyId {
    Eq1Chain,
    Eq2Delta,
    Thm1T,
    Thm2Ng,
    Cor3Beta,
    DartBound,
    Thm4,
    Thm5,
    Cor6,
    Cor8Tournament,
    CondensationHalf,
    ConverseInvariance,
    Eq3Monotone,
}

impl PropertyId {
    pub const ALL: [PropertyId; 13] = [
        PropertyId::Eq1Chain,
        PropertyId::Eq2Delta,
        PropertyId::Thm1T,
        PropertyId::Thm2Ng,
        PropertyId::Cor3Beta,
        PropertyId::DartBound,
        PropertyId::Thm4,
        PropertyId::Thm5,
        PropertyId::Cor6,
        PropertyId::Cor8Tournament,
        PropertyId::CondensationHalf,
        PropertyId::ConverseInvariance,
        PropertyId::Eq3Monotone,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::Eq1Chain => "eq1_chain",
            PropertyId::Eq2Delta => "eq2_delta",
            PropertyId::Thm1T => "thm1_t",
            PropertyId::Thm2Ng => "thm2_ng",
            PropertyId::Cor3Beta => "cor3_beta",
            PropertyId::DartBound => "dart_bound",
            PropertyId::Thm4 => "thm4",
            PropertyId::Thm5 => "thm5",
            PropertyId::Cor6 => "cor6",
            PropertyId::Cor8Tournament => "cor8_tournament",
            PropertyId::CondensationHalf => "condensation_half",
            PropertyId::ConverseInvariance => "converse_invariance",
            PropertyId::Eq3Monotone => "eq3_monotone",
        }
    }

    /// Properties stated for tournaments are swept over tournament corpora.
    pub fn is_tournament(self) -> bool {
        matches!(
            self,
            PropertyId::Cor8Tournament | PropertyId::CondensationHalf
        )
    }

    pub fn statement(self) -> &'static str {
        match self {
            PropertyId::Eq1Chain => "dc <= dib <= dac",
            PropertyId::Eq2Delta => "dib <= Delta + 1",
            PropertyId::Thm1T => "dib <= t",
            PropertyId::Thm2Ng => "dib(D) + dib(D^c) <= n + 1",
            PropertyId::Cor3Beta => "dib <= n - beta + 1",
            PropertyId::DartBound => "dib <= floor((1 + sqrt(1 + 4m)) / 2)",
            PropertyId::Thm4 => "dac <= floor((n + omega) / 2)",
            PropertyId::Thm5 => "ceil(n / A) <= dc <= n - A + 1",
            PropertyId::Cor6 => "dac <= ceil(n - A / 2)",
            PropertyId::Cor8Tournament => "n / 2 <= dc * dib",
            PropertyId::CondensationHalf => "k / 2 <= dib, k = strong components",
            PropertyId::ConverseInvariance => "dib(D) = dib(D^op)",
            PropertyId::Eq3Monotone => "dib(H) <= dib(D) for induced H",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.as_str() == s.trim())
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

/// Random corpus parameters: `count` instances with orders in `min_order..=n_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sample {
    pub count: usize,
    pub seed: u64,
    pub min_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub digraph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub property: PropertyId,
    pub statement: &'static str,
    pub corpus: String,
    pub instances: usize,
    pub counterexamples: Vec<Instance>,
    pub tightness: Vec<Instance>,
}

impl SweepReport {
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// All labeled digraphs of order `n`, in lexicographic adjacency order.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|(u, v)| u != v)
        .collect();
    let bits = cells.len();
    (0..1u64 << bits).map(move |mask| {
        let darts: Vec<_> = (0..bits)
            .filter(|&i| mask >> (bits - 1 - i) & 1 == 1)
            .map(|i| cells[i])
            .collect();
        Digraph::new(n, &darts).expect("valid darts")
    })
}

/// All labeled tournaments of order `n`.
pub fn all_tournaments(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let bits = pairs.len();
    (0..1u64 << bits).map(move |mask| {
        let darts: Vec<_> = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        Digraph::new(n, &darts).expect("valid darts")
    })
}

fn random_digraph(n: usize, rng: &mut ChaCha8Rng) -> Digraph {
    let mut darts = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(0.5) {
                darts.push((u, v));
            }
        }
    }
    Digraph::new(n, &darts).expect("valid darts")
}

fn corpus(
    tournaments: bool,
    n_max: usize,
    sample: Option<Sample>,
) -> Result<(String, Vec<Digraph>)> {
    let kind = if tournaments {
        "tournaments"
    } else {
        "digraphs"
    };
    match sample {
        None => {
            let limit = if tournaments {
                EXHAUSTIVE_TOURNAMENT_LIMIT
            } else {
                EXHAUSTIVE_DIGRAPH_LIMIT
            };
            if n_max > limit {
                return Err(Error::CorpusTooLarge {
                    corpus: kind,
                    n_max,
                    limit,
                });
            }
            let all: Vec<Digraph> = (1..=n_max)
                .flat_map(|n| -> Box<dyn Iterator<Item = Digraph>> {
                    if tournaments {
                        Box::new(all_tournaments(n))
                    } else {
                        Box::new(all_digraphs(n))
                    }
                })
                .collect();
            Ok((format!("all labeled {kind}, n = 1..{n_max}"), all))
        }
        Some(s) => {
            let lo = s.min_order.max(1);
            if lo > n_max {
                return Err(Error::Precondition(format!(
                    "sample minimum order {lo} exceeds maximum order {n_max}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
            let all = (0..s.count)
                .map(|_| {
                    let n = rng.gen_range(lo..=n_max);
                    if tournaments {
                        random_tournament(n, rng.gen())
                    } else {
                        random_digraph(n, &mut rng)
                    }
                })
                .collect();
            Ok((
                format!(
                    "{} random {kind}, n = {lo}..{n_max}, seed {}",
                    s.count, s.seed
                ),
                all,
            ))
        }
    }
}

/// Invariants of one digraph, computed on first use.
struct Facts<'a> {
    d: &'a Digraph,
    dc: OnceCell<usize>,
    dib: OnceCell<usize>,
    dac: OnceCell<usize>,
    omega: OnceCell<usize>,
    beta: OnceCell<usize>,
    acyclic: OnceCell<usize>,
}

macro_rules! lazy {
    ($name:ident, $compute:expr) => {
        fn $name(&self) -> Result<usize> {
            if let Some(&v) = self.$name.get() {
                return Ok(v);
            }
            let v = $compute(self.d)?;
            let _ = self.$name.set(v);
            Ok(v)
        }
    };
}

impl<'a> Facts<'a> {
    fn new(d: &'a Digraph) -> Self {
        Facts {
            d,
            dc: OnceCell::new(),
            dib: OnceCell::new(),
            dac: OnceCell::new(),
            omega: OnceCell::new(),
            beta: OnceCell::new(),
            acyclic: OnceCell::new(),
        }
    }

    lazy!(dc, |d| dc_exact(d).map(|o| o.value));
    lazy!(dib, |d| dib_exact(d).map(|o| o.value));
    lazy!(dac, |d| dac_exact(d).map(|o| o.value));
    lazy!(omega, clique_number);
    lazy!(beta, independence_number);
    lazy!(acyclic, acyclic_number);
}

/// Outcome of one property on one digraph.
struct Check {
    holds: bool,
    tight: bool,
    detail: String,
}

fn upper(name: &str, value: usize, bound_name: &str, bound: usize) -> Check {
    Check {
        holds: value <= bound,
        tight: value == bound,
        detail: format!("{name} = {value}, {bound_name} = {bound}"),
    }
}

fn check(p: PropertyId, f: &Facts) -> Result<Check> {
    let d = f.d;
    let n = d.order();
    Ok(match p {
        PropertyId::Eq1Chain => {
            let (dc, dib, dac) = (f.dc()?, f.dib()?, f.dac()?);
            Check {
                holds: dc <= dib && dib <= dac,
                tight: dc == dac,
                detail: format!("dc = {dc}, dib = {dib}, dac = {dac}"),
            }
        }
        PropertyId::Eq2Delta => upper("dib", f.dib()?, "Delta + 1", d.delta() + 1),
        PropertyId::Thm1T => upper("dib", f.dib()?, "t", t_bound(d)?.t),
        PropertyId::Thm2Ng => {
            let (a, b) = (f.dib()?, dib_exact(&d.complement())?.value);
            Check {
                holds: a + b <= n + 1,
                tight: a + b == n + 1,
                detail: format!("dib = {a}, dib(complement) = {b}, n + 1 = {}", n + 1),
            }
        }
        PropertyId::Cor3Beta => upper("dib", f.dib()?, "n - beta + 1", n - f.beta()? + 1),
        PropertyId::DartBound => upper("dib", f.dib()?, "dart bound", dart_bound(d.size())),
        PropertyId::Thm4 => upper(
            "dac",
            f.dac()?,
            "floor((n + omega) / 2)",
            (n + f.omega()?) / 2,
        ),
        PropertyId::Thm5 => {
            let (dc, a) = (f.dc()?, f.acyclic()?);
            let (lo, hi) = (n.div_ceil(a), n - a + 1);
            Check {
                holds: lo <= dc && dc <= hi,
                tight: dc == lo || dc == hi,
                detail: format!("ceil(n / A) = {lo}, dc = {dc}, n - A + 1 = {hi}"),
            }
        }
        PropertyId::Cor6 => upper("dac", f.dac()?, "ceil(n - A / 2)", n - f.acyclic()? / 2),
        PropertyId::Cor8Tournament => {
            let (dc, dib) = (f.dc()?, f.dib()?);
            Check {
                holds: n <= 2 * dc * dib,
                tight: n == 2 * dc * dib,
                detail: format!("n = {n}, dc = {dc}, dib = {dib}"),
            }
        }
        PropertyId::CondensationHalf => {
            let (k, dib) = (d.strong_condensation().count, f.dib()?);
            Check {
                holds: k <= 2 * dib,
                tight: k == 2 * dib,
                detail: format!("strong components = {k}, dib = {dib}"),
            }
        }
        PropertyId::ConverseInvariance => {
            let (a, b) = (f.dib()?, dib_exact(&d.converse())?.value);
            Check {
                holds: a == b,
                tight: false,
                detail: format!("dib = {a}, dib(converse) = {b}"),
            }
        }
        PropertyId::Eq3Monotone => {
            let dib = f.dib()?;
            let mut worst = None;
            let mut tight = false;
            for mask in 1..(1u64 << n) - 1 {
                let keep: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let h = dib_exact(&d.induced_by(&keep)?)?.value;
                tight |= h == dib;
                if h > dib && worst.is_none() {
                    worst = Some((keep, h));
                }
            }
            match worst {
                Some((keep, h)) => Check {
                    holds: false,
                    tight,
                    detail: format!("dib = {dib}, dib(H) = {h} on vertices {keep:?}"),
                },
                None => Check {
                    holds: true,
                    tight,
                    detail: format!("dib = {dib}"),
                },
            }
        }
    })
}

/// Checks each property on its corpus: all labeled digraphs (or tournaments)
/// up to `n_max` without a sample, random instances with one.
pub fn property_sweep(
    n_max: usize,
    properties: &[PropertyId],
    sample: Option<Sample>,
) -> Result<Vec<SweepReport>> {
    let mut reports: BTreeMap<PropertyId, SweepReport> = BTreeMap::new();
    for tournaments in [false, true] {
        let props: Vec<PropertyId> = properties
            .iter()
            .copied()
            .filter(|p| p.is_tournament() == tournaments)
            .collect();
        if props.is_empty() {
            continue;
        }
        let (description, digraphs) = corpus(tournaments, n_max, sample)?;
        let outcomes: Vec<Vec<Check>> = digraphs
            .par_iter()
            .map(|d| {
                let facts = Facts::new(d);
                props
                    .iter()
                    .map(|&p| check(p, &facts))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        for (i, &p) in props.iter().enumerate() {
            let mut report = SweepReport {
                property: p,
                statement: p.statement(),
                corpus: description.clone(),
                instances: digraphs.len(),
                counterexamples: Vec::new(),
                tightness: Vec::new(),
            };
            for (d, checks) in digraphs.iter().zip(&outcomes) {
                let c = &checks[i];
                let record = || Instance {
                    digraph6: to_digraph6(d),
                    detail: c.detail.clone(),
                };
                if !c.holds {
                    report.counterexamples.push(record());
                } else if c.tight {
                    report.tightness.push(record());
                }
            }
            reports.insert(p, report);
        }
    }
    // Report order follows the request, duplicates collapsed.
    let mut seen = Vec::new();
    Ok(properties
        .iter()
        .filter(|p| {
            let fresh = !seen.contains(*p);
            seen.push(**p);
            fresh
        })
        .filter_map(|p| reports.remove(p))
        .collect())
}

/// Re-checks a recorded tightness witness from its digraph6 string.
pub fn revalidate_witness(property: PropertyId, witness: &Instance) -> Result<bool> {
    let d = from_digraph6(&witness.digraph6)?;
    let c = check(property, &Facts::new(&d))?;
    Ok(c.holds && c.tight)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DibClass {
    pub dib: usize,
    pub count: usize,
    pub digraphs: Vec<String>,
}

/// Regular digraphs of one order, up to isomorphism, grouped by dib.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularCatalog {
    pub order: usize,
    pub regularity: usize,
    pub total: usize,
    /// Whether every member has dib in `2..=r + 1`.
    pub within_expected: bool,
    pub classes: Vec<DibClass>,
}

impl RegularCatalog {
    pub fn build(n: usize, r: usize) -> Result<Self> {
        let members = enumerate_regular(n, r, true)?;
        let values: Vec<usize> = members
            .par_iter()
            .map(|d| dib_exact(d).map(|o| o.value))
            .collect::<Result<_>>()?;
        let mut by_dib: BTreeMap<usize, Vec<String>> =
            (2..=r + 1).map(|k| (k, Vec::new())).collect();
        for (d, &k) in members.iter().zip(&values) {
            by_dib.entry(k).or_default().push(to_digraph6(d));
        }
        Ok(RegularCatalog {
            order: n,
            regularity: r,
            total: members.len(),
            within_expected: values.iter().all(|&k| (2..=r + 1).contains(&k)),
            classes: by_dib
                .into_iter()
                .map(|(dib, digraphs)| DibClass {
                    dib,
                    count: digraphs.len(),
                    digraphs,
                })
                .collect(),
        })
    }

    pub fn class(&self, dib: usize) -> Option<&DibClass> {
        self.classes.iter().find(|c| c.dib == dib)
    }
}

/// For each order `3..=n_max`: the 1-regular catalog (expected all dib 2)
/// followed by the 2-regular catalog split into dib 2 and dib 3.
pub fn conjecture_scan(n_max: usize) -> Result<Vec<RegularCatalog>> {
    if n_max > CANON_LIMIT {
        return Err(Error::TooLarge {
            what: "conjecture scan",
            n: n_max,
            limit: CANON_LIMIT,
        });
    }
    let mut out = Vec::new();
    for n in 3..=n_max {
        for r in [1, 2] {
            out.push(RegularCatalog::build(n, r)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_ids_round_trip() {
        for p in PropertyId::ALL {
            assert_eq!(p.as_str().parse::<PropertyId>().unwrap(), p);
        }
        assert!(matches!(
            "thm99".parse::<PropertyId>(),
            Err(Error::UnknownProperty(_))
        ));
    }

    #[test]
    fn corpus_sizes() {
        assert_eq!(all_digraphs(3).count(), 64);
        assert_eq!(all_tournaments(4).count(), 64);
        assert!(all_tournaments(4).all(|t| t.is_tournament()));
        let (_, c) = corpus(false, 3, None).unwrap();
        assert_eq!(c.len(), 1 + 4 + 64);
        assert!(matches!(
            corpus(false, 5, None),
            Err(Error::CorpusTooLarge { limit: 4, .. })
        ));
    }

    #[test]
    fn chain_on_order_three() {
        let r = property_sweep(3, &[PropertyId::Eq1Chain], None).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].instances, 69);
        assert!(r[0].verified());
    }

    #[test]
    fn nordhaus_gaddum_tight_on_k3() {
        let r = property_sweep(3, &[PropertyId::Thm2Ng], None).unwrap();
        assert!(r[0].verified());
        let k3 = crate::codec::to_digraph6(&Digraph::empty(3).complement());
        assert!(r[0].tightness.iter().any(|w| w.digraph6 == k3));
        for w in &r[0].tightness {
            assert!(revalidate_witness(PropertyId::Thm2Ng, w).unwrap());
        }
    }

    #[test]
    fn sampled_sweep_is_deterministic() {
        let s = Some(Sample {
            count: 20,
            seed: 5,
            min_order: 5,
        });
        let props = [PropertyId::Eq2Delta, PropertyId::Cor8Tournament];
        let a = property_sweep(7, &props, s).unwrap();
        assert_eq!(a, property_sweep(7, &props, s).unwrap());
        assert!(a.iter().all(SweepReport::verified));
        assert_eq!(a[1].corpus, "20 random tournaments, n = 5..7, seed 5");
    }

    #[test]
    fn scan_order_three() {
        let scan = conjecture_scan(3).unwrap();
        assert_eq!(scan.len(), 2);
        let two = &scan[1];
        assert_eq!(two.class(2).unwrap().count, 0);
        assert_eq!(two.class(3).unwrap().digraphs, vec!["&B\\o".to_string()]);
        assert!(scan[0].within_expected);
        assert_eq!(scan[0].classes.len(), 1);
    }
}
