use serde::Serialize;

use super::numbers::{acyclic_number, clique_number, independence_number};
use super::require_nonempty;
use super::search::Parameter;
use crate::digraph::Digraph;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TBound {
    pub t_plus: usize,
    pub t_minus: usize,
    pub t: usize,
}

/// Largest `i` such that at least `i` vertices have out-degree (resp.
/// in-degree) at least `i - 1`; `t` is the smaller of the two.
pub fn t_bound(d: &Digraph) -> Result<TBound> {
    require_nonempty(d)?;
    let side = |mut degrees: Vec<usize>| {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
            .iter()
            .enumerate()
            .filter(|&(i, &deg)| deg >= i)
            .map(|(i, _)| i + 1)
            .max()
            .unwrap_or(1)
    };
    let t_plus = side((0..d.order()).map(|v| d.out_degree(v)).collect());
    let t_minus = side((0..d.order()).map(|v| d.in_degree(v)).collect());
    Ok(TBound {
        t_plus,
        t_minus,
        t: t_plus.min(t_minus),
    })
}

/// `floor((1 + sqrt(1 + 4m)) / 2)`, i.e. the largest `k` with `k(k-1) <= m`.
pub fn dart_bound(m: usize) -> usize {
    let mut k = ((1.0 + (1.0 + 4.0 * m as f64).sqrt()) / 2.0) as usize;
    while k * k.saturating_sub(1) > m {
        k -= 1;
    }
    while (k + 1) * k <= m {
        k += 1;
    }
    k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub parameter: Parameter,
    pub kind: BoundKind,
    pub value: usize,
    /// Which result the bound comes from.
    pub source: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub max_out_degree: usize,
    pub max_in_degree: usize,
    pub delta: usize,
    pub clique_number: usize,
    pub independence_number: usize,
    pub acyclic_number: usize,
    pub t_plus: usize,
    pub t_minus: usize,
    pub t: usize,
    pub dart_bound: usize,
    pub bounds: Vec<Bound>,
    /// `n + 1 - dib(D) - dib(D^c)`, present once both values are supplied.
    pub ng_slack: Option<i64>,
    pub chain_consistent: bool,
}

impl BoundsReport {
    pub fn lower(&self, p: Parameter) -> usize {
        self.bounds
            .iter()
            .filter(|b| b.parameter == p && b.kind == BoundKind::Lower)
            .map(|b| b.value)
            .max()
            .unwrap_or(1)
    }

    pub fn upper(&self, p: Parameter) -> usize {
        self.bounds
            .iter()
            .filter(|b| b.parameter == p && b.kind == BoundKind::Upper)
            .map(|b| b.value)
            .min()
            .unwrap_or(self.n)
    }

    /// Records the Nordhaus-Gaddum slack from known dib values of `D` and its complement.
    pub fn with_complement_dib(mut self, dib: usize, dib_complement: usize) -> Self {
        self.ng_slack = Some(self.n as i64 + 1 - dib as i64 - dib_complement as i64);
        self
    }
}

pub fn bounds_report(d: &Digraph) -> Result<BoundsReport> {
    require_nonempty(d)?;
    let n = d.order();
    let m = d.size();
    let delta = d.delta();
    let omega = clique_number(d)?;
    let beta = independence_number(d)?;
    let acyclic = acyclic_number(d)?;
    let t = t_bound(d)?;
    let darts = dart_bound(m);

    let dc_lower = [("omega_le_dc", omega), ("thm5_lower", n.div_ceil(acyclic))];
    // Any complete coloring needs k(k-1) distinct darts.
    let dac_upper = [
        ("dart_bound", darts),
        ("thm4_clique", (n + omega) / 2),
        ("cor6_acyclic", n - acyclic / 2),
    ];

    let mut bounds = Vec::new();
    let mut push = |parameter, kind, source, value| {
        bounds.push(Bound {
            parameter,
            kind,
            value,
            source,
        })
    };
    use BoundKind::*;
    use Parameter::*;
    for &(src, v) in &dc_lower {
        push(Dc, Lower, src, v);
    }
    push(Dc, Upper, "thm5_upper", n - acyclic + 1);

    let chain_lower = dc_lower.iter().map(|&(_, v)| v).max().unwrap();
    push(Dib, Lower, "eq1_chain", chain_lower);
    push(Dib, Upper, "eq2_delta", delta + 1);
    push(Dib, Upper, "thm1_t", t.t);
    push(Dib, Upper, "cor3_beta", n - beta + 1);
    for &(src, v) in &dac_upper {
        push(Dib, Upper, src, v);
    }

    push(Dac, Lower, "eq1_chain", chain_lower);
    for &(src, v) in &dac_upper {
        push(Dac, Upper, src, v);
    }

    let mut report = BoundsReport {
        n,
        m,
        max_out_degree: d.max_out_degree(),
        max_in_degree: d.max_in_degree(),
        delta,
        clique_number: omega,
        independence_number: beta,
        acyclic_number: acyclic,
        t_plus: t.t_plus,
        t_minus: t.t_minus,
        t: t.t,
        dart_bound: darts,
        bounds,
        ng_slack: None,
        chain_consistent: false,
    };
    report.chain_consistent = [Dc, Dib, Dac]
        .iter()
        .all(|&p| report.lower(p) <= report.upper(p))
        && n.div_ceil(acyclic) <= n - acyclic + 1;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circulant(n: usize, jumps: &[usize]) -> Digraph {
        let darts: Vec<_> = (0..n)
            .flat_map(|i| jumps.iter().map(move |j| (i, (i + j) % n)))
            .collect();
        Digraph::new(n, &darts).unwrap()
    }

    fn transitive(n: usize) -> Digraph {
        let darts: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Digraph::new(n, &darts).unwrap()
    }

    #[test]
    fn dart_bound_matches_float_formula() {
        for m in 0..2000usize {
            let exact = ((1.0 + (1.0 + 4.0 * m as f64).sqrt()) / 2.0).floor() as usize;
            assert_eq!(dart_bound(m), exact, "m = {m}");
        }
        assert_eq!(dart_bound(21), 5);
        assert_eq!(dart_bound(3), 2);
    }

    #[test]
    fn t_bound_examples() {
        let tb = t_bound(&transitive(5)).unwrap();
        assert_eq!((tb.t_plus, tb.t_minus, tb.t), (3, 3, 3));
        let k5 = Digraph::empty(5).complement();
        assert_eq!(t_bound(&k5).unwrap().t, 5);
        assert_eq!(t_bound(&circulant(7, &[1, 2, 3])).unwrap().t, 4);
        assert!(t_bound(&Digraph::empty(0)).is_err());
    }

    #[test]
    fn circulant_seven_report() {
        let r = bounds_report(&circulant(7, &[1, 2, 3])).unwrap();
        assert_eq!(r.delta + 1, 4);
        assert_eq!(r.t, 4);
        assert_eq!(r.dart_bound, 5);
        assert_eq!(r.independence_number, 1);
        assert_eq!(r.upper(Parameter::Dib), 4);
        assert!(r.chain_consistent);
        let cor3 = r.bounds.iter().find(|b| b.source == "cor3_beta").unwrap();
        assert_eq!(cor3.value, 7);
    }

    #[test]
    fn complete_symmetric_report() {
        let k5 = Digraph::empty(5).complement();
        let r = bounds_report(&k5).unwrap();
        assert_eq!(r.clique_number, 5);
        assert!(r
            .bounds
            .iter()
            .filter(|b| b.parameter == Parameter::Dib && b.kind == BoundKind::Upper)
            .all(|b| b.value >= 5));
    }

    #[test]
    fn single_vertex_report() {
        let r = bounds_report(&Digraph::empty(1)).unwrap();
        assert_eq!(
            (
                r.clique_number,
                r.independence_number,
                r.acyclic_number,
                r.t
            ),
            (1, 1, 1, 1)
        );
        assert!(r.bounds.iter().all(|b| b.value == 1));
        assert_eq!(r.with_complement_dib(1, 1).ng_slack, Some(0));
    }
}
