//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{every_digraph_up_to, oracle};
use dib_core::codec::{from_digraph6, to_digraph6};
use dib_core::constructions::{
    circulant, color_circulant_path, color_circulant_tournament, color_transitive, directed_cycle,
    random_regular, spread_basis_coloring, spread_vertices, transitive_tournament,
};
use dib_core::enumeration::{conjecture_scan, property_sweep, PropertyId};
use dib_core::{audit, dac_exact, dc_exact, dib_exact, Coloring, Digraph, VertexSet};
use rand::Rng;

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dib(d: &Digraph) -> usize {
    dib_exact(d).unwrap().value
}

fn certified(d: &Digraph, c: &Coloring, k: usize) -> Result<(), String> {
    let a = audit(d, c).map_err(|e| e.to_string())?;
    ensure(a.is_acyclic_b_coloring() && c.num_colors() == k, || {
        format!(
            "coloring of {} is not an acyclic b-coloring with {k} colors",
            to_digraph6(d)
        )
    })
}

fn transitive() -> Result<String, String> {
    for n in 1..=10 {
        let d = transitive_tournament(n);
        certified(&d, &color_transitive(n).unwrap(), n.div_ceil(2))?;
        let v = dib(&d);
        ensure(v == n.div_ceil(2), || format!("n={n}: dib = {v}"))?;
    }
    Ok("dib(TT_n) = ceil(n/2) for n = 1..10".into())
}

fn circulant_tournaments() -> Result<String, String> {
    for m in 1..=4usize {
        let jumps: Vec<i64> = (1..=m as i64).collect();
        let d = circulant(2 * m + 1, &jumps).unwrap();
        certified(&d, &color_circulant_tournament(m).unwrap(), m + 1)?;
        let v = dib(&d);
        ensure(v == m + 1, || format!("m={m}: dib = {v}"))?;
    }
    Ok("dib(C_{2m+1}(1..m)) = m+1 for m = 1..4".into())
}

fn consecutive_circulants() -> Result<String, String> {
    let mut cases = 0;
    for n in 4..=10usize {
        for k in 1..=(n - 2) / 2 {
            let jumps: Vec<i64> = (1..=k as i64).collect();
            let d = circulant(n, &jumps).unwrap();
            certified(&d, &color_circulant_path(n, k).unwrap(), k + 1)?;
            let v = dib(&d);
            ensure(v == k + 1, || format!("n={n} k={k}: dib = {v}"))?;
            cases += 1;
        }
    }
    Ok(format!("dib(C_n(1..k)) = k+1 on {cases} (n, k) pairs"))
}

fn complete() -> Result<String, String> {
    for n in 1..=6 {
        let v = dib(&Digraph::empty(n).complement());
        ensure(v == n, || format!("dib(K_{n}) = {v}"))?;
    }
    Ok("dib(K_n) = n for n = 1..6".into())
}

fn sweep(n_max: usize, props: &[PropertyId], expected: usize) -> Result<String, String> {
    let reports = property_sweep(n_max, props, None).map_err(|e| e.to_string())?;
    for r in &reports {
        ensure(r.instances == expected, || {
            format!("{}: {} instances", r.property, r.instances)
        })?;
        ensure(r.verified(), || {
            format!(
                "{}: counterexample {}",
                r.property, r.counterexamples[0].digraph6
            )
        })?;
    }
    let names: Vec<&str> = reports.iter().map(|r| r.property.as_str()).collect();
    Ok(format!(
        "0 counterexamples on {expected} instances for {}",
        names.join(", ")
    ))
}

fn digraph_sweep() -> Result<String, String> {
    use PropertyId::*;
    let props = [
        Eq1Chain,
        Eq2Delta,
        Eq3Monotone,
        Thm1T,
        Thm2Ng,
        Cor3Beta,
        DartBound,
        Thm4,
        Thm5,
        Cor6,
        ConverseInvariance,
    ];
    sweep(4, &props, 1 + 4 + 64 + 4096)
}

fn tournament_sweep() -> Result<String, String> {
    let expected = (1..=6).map(|n| 1usize << (n * (n - 1) / 2)).sum();
    sweep(
        6,
        &[PropertyId::Cor8Tournament, PropertyId::CondensationHalf],
        expected,
    )
}

fn spread_certificate(d: &Digraph, r: usize) -> Result<bool, String> {
    let Some((bp, bm)) = spread_vertices(d, r).map_err(|e| e.to_string())? else {
        return Ok(false);
    };
    let c = spread_basis_coloring(d, &bp, &bm).map_err(|e| e.to_string())?;
    certified(d, &c, d.delta() + 1)?;
    if d.order() <= 12 {
        let v = dib(d);
        ensure(v == r + 1, || format!("{}: dib = {v}", to_digraph6(d)))?;
    }
    Ok(true)
}

fn spread_construction() -> Result<String, String> {
    let c12 = directed_cycle(12).unwrap();
    let set = |v: &[usize]| VertexSet::from_vertices(12, v.iter().copied()).unwrap();
    let c = spread_basis_coloring(&c12, &set(&[0, 6]), &set(&[3, 9])).map_err(|e| e.to_string())?;
    certified(&c12, &c, 2)?;
    ensure(dib(&c12) == 2, || "dib(C_12) != 2".into())?;

    let mut rng = common::rng(7);
    let mut found = [0usize; 2];
    let mut attempts = 0;
    while found.iter().any(|&f| f < 10) {
        attempts += 1;
        ensure(attempts < 5000, || {
            format!("only {found:?} spread successes")
        })?;
        let r = if found[0] < 10 { 1 } else { 2 };
        let n = if r == 1 {
            rng.gen_range(8..=16)
        } else {
            rng.gen_range(9..=48)
        };
        let Ok(d) = random_regular(n, r, rng.gen(), rng.gen_bool(0.5)) else {
            continue;
        };
        if spread_certificate(&d, r)? {
            found[r - 1] += 1;
        }
    }
    Ok(format!(
        "C_12 plus {} 1-regular and {} 2-regular digraphs certified",
        found[0], found[1]
    ))
}

fn one_regular_pipeline() -> Result<String, String> {
    let mut count = 0;
    for n in 8..=12 {
        for seed in 0..40 {
            let d = random_regular(n, 1, seed, seed % 2 == 0).map_err(|e| e.to_string())?;
            ensure(spread_certificate(&d, 1)?, || {
                format!("spread failed on {}", to_digraph6(&d))
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "spread + construction certify dib = 2 on {count} unions of cycles, n = 8..12"
    ))
}

fn conjecture() -> Result<String, String> {
    let scan = conjecture_scan(6).map_err(|e| e.to_string())?;
    let mut catalog = Vec::new();
    for c in &scan {
        ensure(c.within_expected, || {
            format!("n={} r={}: dib outside 2..=r+1", c.order, c.regularity)
        })?;
        if c.regularity == 2 {
            let two = c.class(2).map_or(0, |k| k.count);
            let three = c.class(3).map_or(0, |k| k.count);
            ensure(two + three == c.total, || {
                format!("n={}: classes do not cover catalog", c.order)
            })?;
            catalog.push(format!(
                "n={}: {two} with dib 2, {three} with dib 3",
                c.order
            ));
            for d6 in &c.class(2).unwrap().digraphs {
                println!("    dib 2: {d6}");
            }
        }
    }
    let n3 = scan
        .iter()
        .find(|c| c.order == 3 && c.regularity == 2)
        .unwrap();
    let k3 = to_digraph6(&Digraph::empty(3).complement());
    ensure(
        n3.class(3).unwrap().digraphs == vec![k3] && n3.class(2).unwrap().count == 0,
        || "n=3 catalog is not exactly {K_3}".into(),
    )?;
    ensure(scan == conjecture_scan(6).unwrap(), || {
        "scan not reproducible".into()
    })?;
    Ok(catalog.join("; "))
}

fn oracle_agreement() -> Result<String, String> {
    let corpus = every_digraph_up_to(4);
    for d in &corpus {
        let o = oracle(d);
        let (dc, dib, dac) = (
            dc_exact(d).unwrap(),
            dib_exact(d).unwrap(),
            dac_exact(d).unwrap(),
        );
        ensure(
            (dc.value, dib.value, dac.value) == (o.dc, o.dib, o.dac),
            || {
                format!(
                    "{}: solver ({}, {}, {}) vs oracle ({}, {}, {})",
                    to_digraph6(d),
                    dc.value,
                    dib.value,
                    dac.value,
                    o.dc,
                    o.dib,
                    o.dac
                )
            },
        )?;
        let ok = audit(d, &dc.witness).unwrap().acyclic
            && audit(d, &dib.witness).unwrap().is_acyclic_b_coloring()
            && audit(d, &dac.witness).unwrap().is_complete_acyclic();
        ensure(ok, || format!("{}: witness fails audit", to_digraph6(d)))?;
    }
    Ok(format!(
        "dc, dib, dac match the partition oracle on {} digraphs",
        corpus.len()
    ))
}

fn codec() -> Result<String, String> {
    let digon = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
    ensure(to_digraph6(&digon) == "&AW", || {
        "digon does not encode as &AW".into()
    })?;
    let mut rng = common::rng(11);
    for _ in 0..1000 {
        let n = rng.gen_range(0..=40);
        let p = rng.gen_range(0.0..1.0);
        let d = common::random_digraph(n, p, &mut rng);
        let back = from_digraph6(&to_digraph6(&d)).map_err(|e| e.to_string())?;
        ensure(back == d, || {
            format!("round trip failed on {}", to_digraph6(&d))
        })?;
    }
    Ok("round trip on 1000 random digraphs (n <= 40); digon = &AW".into())
}

fn main() {
    let criteria: [(&str, Check, u64); 11] = [
        ("transitive tournaments", transitive, 120),
        ("circulant tournaments", circulant_tournaments, 120),
        ("consecutive circulants", consecutive_circulants, 300),
        ("complete symmetric digraphs", complete, 120),
        ("exhaustive digraph sweep", digraph_sweep, 600),
        ("exhaustive tournament sweep", tournament_sweep, 600),
        ("spread-basis construction", spread_construction, 120),
        ("1-regular pipeline", one_regular_pipeline, 120),
        ("2-regular scan", conjecture, 900),
        ("solver vs oracle", oracle_agreement, 600),
        ("digraph6 codec", codec, 120),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!("took {elapsed:.1?}, limit {limit}s"))
            } else {
                Ok(msg)
            }
        });
        match result {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg} [{elapsed:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
