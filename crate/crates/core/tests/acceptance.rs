//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toricap::capacities::calg_sequence;
use toricap::oracle::{brute_calg_table, sw_equals_nef};
use toricap::rational::{int, rat};
use toricap::{
    embedding_verdict, width_bound_check, ConcaveDomain, EmbeddingVerdict, MomentPolygon, Rational,
    ToricSurface,
};

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn seq(p: &MomentPolygon, k_max: usize) -> Result<Vec<Rational>, String> {
    calg_sequence(p, k_max).map_err(|e| format!("calg on {p}: {e}"))
}

/// calg of the unit triangle against sorted sums `m + n`, k <= 50, < 10 s.
fn ball_equality() -> Outcome {
    let k_max = 50;
    let mut sums: Vec<i64> = (0..=k_max as i64)
        .flat_map(|m| (0..=k_max as i64 - m).map(move |n| m + n))
        .collect();
    sums.sort_unstable();
    let start = Instant::now();
    let got = seq(&unit_triangle(), k_max)?;
    let elapsed = start.elapsed();
    for k in 0..=k_max {
        ensure(got[k] == int(sums[k]), || {
            format!("k={k}: calg {} but N(1,1) = {}", got[k], sums[k])
        })?;
    }
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("k <= {k_max} equal, {elapsed:.2?}"))
}

/// Pruned search against the exhaustive scan on ten polygons.
fn optimizer_soundness() -> Outcome {
    let corpus = vec![
        ("unit triangle", unit_triangle()),
        ("2 triangle", poly(&[(0, 0), (2, 0), (0, 2)])),
        ("3/2 triangle", ratpoly(&[(int(0), int(0)), (rat(3, 2), int(0)), (int(0), rat(3, 2))])),
        ("unit square", unit_square()),
        ("rect 1x2", rectangle(1, 2)),
        ("rect 2x3", rectangle(2, 3)),
        ("F1 chop", f1()),
        ("F2", f2()),
        ("two-corner chop", two_corner_chop()),
        ("P(1,1,2)", weighted_triangle()),
    ];
    let (k_max, bound) = (10, 8);
    for (name, p) in &corpus {
        let fast = seq(p, k_max)?;
        let brute = brute_calg_table(p, k_max, bound).map_err(|e| format!("{name}: {e}"))?;
        for (k, (a, b)) in fast.iter().zip(&brute).enumerate() {
            ensure(*a == b.value, || format!("{name} k={k}: calg {a}, brute {}", b.value))?;
        }
    }
    Ok(format!("{} polygons, k <= {k_max}, box {bound}", corpus.len()))
}

/// Seiberg-Witten-side infimum equals the nef infimum on five surfaces.
fn sw_equality() -> Outcome {
    let corpus = vec![
        ("P2", unit_triangle()),
        ("P1xP1", unit_square()),
        ("F1", f1()),
        ("F2", f2()),
        ("two-corner chop", two_corner_chop()),
    ];
    for (name, p) in &corpus {
        let rows = sw_equals_nef(p, 5, 6).map_err(|e| format!("{name}: {e}"))?;
        for r in rows {
            ensure(r.equal, || format!("{name} k={}: sw {} calg {}", r.k, r.sw, r.calg))?;
            ensure(r.certificate_ok, || {
                format!("{name} k={}: preferable nef certificate {} failed", r.k, r.certificate)
            })?;
        }
    }
    Ok("P2, P1xP1, F1, F2, two-corner chop; k <= 5, box 6".into())
}

/// The isoparametric transform terminates and preserves h0.
fn ip_preserves_sections() -> Outcome {
    // Resolutions of singular triangles add chains of negative curves.
    let mut surfaces: Vec<(String, ToricSurface)> = smooth_corpus()
        .into_iter()
        .map(|(name, p)| (name.to_string(), ToricSurface::build(&p)))
        .collect();
    for p in [poly(&[(0, 0), (3, 0), (0, 1)]), poly(&[(0, 0), (2, 0), (0, 3)])] {
        surfaces.push((format!("resolution of {p}"), ToricSurface::build(&p).resolve()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1b);
    let mut longest = 0;
    for trial in 0..100 {
        let (name, s) = &surfaces[rng.gen_range(0..surfaces.len())];
        let d = random_divisor(&mut rng, s.ray_count(), 6);
        let chain = s.iterate_ip(&d).map_err(|e| format!("trial {trial} on {name}: {e}"))?;
        longest = longest.max(chain.len() - 1);
        let h = naive_h0(s, &d, 60);
        for step in &chain {
            let hs = naive_h0(s, step, 60);
            ensure(hs == h, || format!("trial {trial} on {name}: h0({d}) = {h} but h0({step}) = {hs}"))?;
            ensure(s.h0(step) == hs, || format!("trial {trial}: library h0 disagrees on {step}"))?;
        }
        let last = chain.last().unwrap();
        ensure(s.ip_transform(last).as_ref() == Ok(last), || {
            format!("trial {trial}: chain did not reach a fixed point")
        })?;
    }
    Ok(format!("100 divisors on {} surfaces, longest chain {longest}", surfaces.len()))
}

/// Scaling, unimodular invariance, inclusion and chop monotonicity.
fn axioms() -> Outcome {
    let k_max = 20;
    let mut rng = ChaCha8Rng::seed_from_u64(0xa5);
    let base = vec![unit_triangle(), rectangle(1, 2), f1(), f2(), weighted_triangle()];

    for p in &base {
        let c = seq(p, k_max)?;
        for s in [int(2), rat(3, 2), rat(5, 3)] {
            let cs = seq(&p.scale(&s).unwrap(), k_max)?;
            for k in 0..=k_max {
                ensure(cs[k] == &s * &c[k], || format!("scaling {s} of {p} at k={k}"))?;
            }
        }
    }
    for i in 0..20 {
        let p = &base[i % base.len()];
        let t = random_unimodular(&mut rng);
        let c = seq(p, k_max)?;
        let ct = seq(&t.apply(p), k_max)?;
        ensure(c == ct, || format!("unimodular image of {p} under {t} changes calg"))?;
    }
    let mut nested = 0;
    while nested < 100 {
        let outer = random_domain(&mut rng);
        let inner = random_subdomain(&mut rng, &outer);
        let (ci, co) = (seq(&inner, k_max)?, seq(&outer, k_max)?);
        for k in 0..=k_max {
            ensure(ci[k] <= co[k], || {
                format!("inclusion {inner} in {outer} at k={k}: {} > {}", ci[k], co[k])
            })?;
        }
        nested += 1;
    }
    let mut chops = 0;
    for (_, p) in smooth_corpus() {
        let c = seq(&p, k_max)?;
        for v in 0..p.len() {
            let room = p.edge_lattice_length(v).min(p.edge_lattice_length(v + p.len() - 1));
            for eps in [rat(1, 3), rat(1, 2), rat(2, 3)] {
                let eps = &eps * &room;
                let chopped = p.corner_chop(v, &eps).map_err(|e| format!("chop {p} at {v}: {e}"))?;
                let cc = seq(&chopped, k_max)?;
                for k in 0..=k_max {
                    ensure(cc[k] <= c[k], || format!("chop of {p} at {v} by {eps}, k={k}"))?;
                }
                chops += 1;
            }
        }
    }
    Ok(format!("scaling x{}, 20 unimodular maps, {nested} nested pairs, {chops} chops, k <= {k_max}", base.len()))
}

/// Width bound checks.
fn widths() -> Outcome {
    let k_max = 30;
    let cases = vec![
        ("unit square", unit_square(), 1),
        ("2 triangle", poly(&[(0, 0), (2, 0), (0, 2)]), 2),
        ("rect 1x5", rectangle(1, 5), 1),
        ("rect 2x3", rectangle(2, 3), 2),
        ("rect 1x2", rectangle(1, 2), 1),
        ("rect 1x10", rectangle(1, 10), 1),
    ];
    let mut shown = Vec::new();
    for (name, p, want) in &cases {
        let b = width_bound_check(p, k_max).map_err(|e| format!("{name}: {e}"))?;
        let got = (b.estimate.value.clone(), b.lattice_width.clone(), b.holds);
        ensure(got == (int(*want), int(*want), true), || {
            format!("{name}: ({}, {}, {})", got.0, got.1, got.2)
        })?;
        shown.push(format!("{name} ({want},{want},true)"));
    }
    Ok(shown.join(", "))
}

/// Embedding verdicts.
fn verdicts() -> Outcome {
    let delta = ConcaveDomain::triangle(int(1), int(2)).unwrap();
    let v = embedding_verdict(&delta, &rectangle(1, 2), 50).map_err(|e| e.to_string())?;
    ensure(v == EmbeddingVerdict::CompatibleUpTo { horizon: 50 }, || format!("E(1,2) into [0,1]x[0,2]: {v}"))?;
    let ball = ConcaveDomain::triangle(rat(11, 10), rat(11, 10)).unwrap();
    let v = embedding_verdict(&ball, &unit_square(), 50).map_err(|e| e.to_string())?;
    let want = EmbeddingVerdict::Obstructed {
        k: 1,
        ech: rat(11, 10),
        alg: int(1),
    };
    ensure(v == want, || format!("B(11/10) into unit square: {v}"))?;
    Ok("COMPATIBLE_UP_TO_K(50); OBSTRUCTED at k=1 with 11/10 > 1".into())
}

/// Noether, Pick and mixed-area identities on random nef divisors.
fn dictionary_identities() -> Outcome {
    let corpus = smooth_corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(0x08);
    for trial in 0..200 {
        let (name, p) = &corpus[rng.gen_range(0..corpus.len())];
        let s = ToricSurface::build(p);
        let d = random_nef(&mut rng, &s, 5);
        let e = random_nef(&mut rng, &s, 5);
        let h = naive_h0(&s, &d, 40);
        let chi = s.chi(&d).map_err(|err| err.to_string())?;
        ensure(chi == int(h as i64), || format!("trial {trial} on {name}: chi({d}) = {chi}, h0 = {h}"))?;

        let pd = s.support_polytope(&d);
        let pe = s.support_polytope(&e);
        ensure(s.intersect(&d, &d) == int(2) * pd.area(), || format!("trial {trial}: D^2 != 2 area"))?;
        ensure(s.intersect(&d, &e) == pd.mixed_area(&pe), || {
            format!("trial {trial} on {name}: D.E = {} but mixed area {}", s.intersect(&d, &e), pd.mixed_area(&pe))
        })?;
        if let Some(poly) = pd.as_polygon() {
            let boundary = poly.boundary_lattice_count().expect("lattice polygon");
            let pick = poly.area() + rat(boundary as i64, 2) + int(1);
            ensure(pick == int(h as i64), || format!("trial {trial}: Pick gives {pick}, count {h}"))?;
        }
    }
    Ok("200 nef divisors".into())
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("1 ball capacities equal N(1,1)", ball_equality),
        ("2 pruned calg equals exhaustive scan", optimizer_soundness),
        ("3 SW infimum equals nef infimum", sw_equality),
        ("4 isoparametric transform preserves h0", ip_preserves_sections),
        ("5 axioms (a)-(c)", axioms),
        ("6 width bounds", widths),
        ("7 embedding verdicts", verdicts),
        ("8 Noether, Pick and mixed areas", dictionary_identities),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
