//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Pass criterion numbers as arguments to run a subset.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use lamclust::exact::{exact_opt_curve, scaled_sparsest_cut};
use lamclust::graph::{gen_ring, gen_star, pairs, Graph};
use lamclust::lp::{build_lp, solve_at, FloatBackend, LpBackend, LpSolution};
use lamclust::objectives::{
    lamcc_score, lamprime_score, weighted_lamprime_score, Clustering, NodeWeights, Objective,
};
use lamclust::oracles::{
    gamma, lamcc_ratio, lamcc_schedule, ring_g, ring_lower_bound, ring_lp, ring_q, special_lambda,
    special_t,
};
use lamclust::orlp::{eps_range, LambdaInterval};
use lamclust::rational::{ceil_log, floor_log, format_rational, int, ratio, to_f64, Rational};
use lamclust::rounding::build_clustering_family;
use lamclust::sweeps::{certify_cover, sweep_fe, sweep_febe, sweep_geometric, SweepOptions};

use common::{corpus, Named};

struct Outcome {
    failures: Vec<String>,
    notes: String,
}

impl Outcome {
    fn new(failures: Vec<String>, notes: impl Into<String>) -> Self {
        Outcome {
            failures,
            notes: notes.into(),
        }
    }
}

fn within_rel(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
}

fn le_rel(a: f64, b: f64, tol: f64) -> bool {
    a <= b + tol * a.abs().max(b.abs())
}

fn over_budget(start: Instant, limit: Duration, failures: &mut Vec<String>) {
    let took = start.elapsed();
    if took > limit {
        failures.push(format!("took {took:.1?}, limit {limit:?}"));
    }
}

fn integral_solution(c: &Clustering, g: &Graph, lambda: &Rational) -> LpSolution {
    let x = pairs(g.n())
        .map(|(i, j)| if c.together(i, j) { int(0) } else { int(1) })
        .collect();
    LpSolution::from_x(g, lambda.clone(), x).unwrap()
}

fn optimal_family_bound() -> Outcome {
    let start = Instant::now();
    let graphs = corpus();
    let mut failures: Vec<String> = graphs
        .par_iter()
        .flat_map(|Named { name, graph: g }| {
            let mut f = Vec::new();
            let exact = exact_opt_curve(g).unwrap();
            let bps = exact.curve.breakpoints();
            if bps.len() > g.m() {
                f.push(format!("{name}: {} breakpoints > m = {}", bps.len(), g.m()));
            }
            if exact
                .curve
                .pieces
                .windows(2)
                .any(|w| w[0].line.p >= w[1].line.p)
            {
                f.push(format!("{name}: P not strictly increasing"));
            }
            if let Err(e) = exact.curve.check() {
                f.push(format!("{name}: {e}"));
            }
            // with no interior breakpoint the one-cluster piece must reach λ* = 1
            let (lstar, _) = scaled_sparsest_cut(g).unwrap();
            let first = bps.first().cloned().unwrap_or_else(Rational::one);
            if first != lstar {
                f.push(format!("{name}: first breakpoint {first} ≠ λ* {lstar}"));
            }
            f
        })
        .collect();
    over_budget(start, Duration::from_secs(120), &mut failures);
    Outcome::new(failures, format!("{} graphs", graphs.len()))
}

fn star_tightness() -> Outcome {
    let mut failures = Vec::new();
    for n in 4..=9 {
        let g = gen_star(n).unwrap();
        let exact = exact_opt_curve(&g).unwrap();
        if exact.family.len() != n - 1 {
            failures.push(format!(
                "star{n}: family size {} ≠ {}",
                exact.family.len(),
                n - 1
            ));
            continue;
        }
        for (j, c) in exact.family.iter().enumerate() {
            let mut sizes: Vec<usize> = c.clusters().iter().map(Vec::len).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let expected: Vec<usize> = std::iter::once(n - j)
                .chain(std::iter::repeat_n(1, j))
                .collect();
            let center_kept = c
                .clusters()
                .iter()
                .any(|cl| cl.len() == n - j && cl.contains(&0));
            if sizes != expected || !center_kept {
                failures.push(format!("star{n}: piece {j} has cluster sizes {sizes:?}"));
            }
        }
    }
    Outcome::new(failures, "n = 4..9")
}

fn ring_closed_form() -> Outcome {
    let start = Instant::now();
    let g3 = gen_ring(3).unwrap();
    let grid: Vec<Rational> = (0..25).map(|i| ratio(1, 8) + ratio(i, 64)).collect();
    let mut failures: Vec<String> = grid
        .par_iter()
        .filter_map(|l| {
            let lp = solve_at(&g3, l).unwrap().value;
            let (closed, _) = ring_lp(3, l).unwrap();
            (lp != closed).then(|| format!("k=3 λ={l}: simplex {lp} ≠ closed form {closed}"))
        })
        .collect();
    let g4 = gen_ring(4).unwrap();
    let lo = ratio(8, 256);
    let step = (ratio(1, 2) - &lo) / int(24);
    let grid4: Vec<Rational> = (0..25).map(|i| &lo + &step * int(i)).collect();
    let worst = grid4
        .par_iter()
        .map(|l| {
            let p = build_lp(&g4, l).unwrap();
            let float = to_f64(&FloatBackend.solve(&p, &g4).unwrap().value);
            let closed = to_f64(&ring_lp(4, l).unwrap().0);
            ((float - closed).abs() / closed, l.clone())
        })
        .collect::<Vec<_>>();
    let mut max_rel = 0.0f64;
    for (rel, l) in worst {
        max_rel = max_rel.max(rel);
        if rel > 1e-8 {
            failures.push(format!("k=4 λ={l}: float relative error {rel:e}"));
        }
    }
    over_budget(start, Duration::from_secs(300), &mut failures);
    Outcome::new(failures, format!("k=4 float max rel err {max_rel:.1e}"))
}

fn special_lambdas() -> Outcome {
    let k = 3;
    let g = gen_ring(k).unwrap();
    let exact = exact_opt_curve(&g).unwrap();
    let mut failures = Vec::new();
    for i in 1..k {
        let l = special_lambda(k, i).unwrap();
        let t = special_t(k, i).unwrap() as usize;
        let (lp, _) = ring_lp(k, &l).unwrap();
        let gv = ring_g(k, to_f64(&l)).unwrap();
        if !within_rel(to_f64(&lp), gv, 1e-9) {
            failures.push(format!("λ_{i}: ring_lp {lp} vs g {gv}"));
        }
        let opt = exact.value_at(&l);
        if opt != lp {
            failures.push(format!("λ_{i}: OPT {opt} ≠ ring_lp {lp}"));
        }
        let labels: Vec<usize> = (0..g.n()).map(|v| v / t).collect();
        let blocks = Clustering::new(&labels).unwrap();
        let score = lamprime_score(&blocks, &g, &l).unwrap();
        if score != opt {
            failures.push(format!(
                "λ_{i}: {} blocks of {t} score {score} ≠ OPT {opt}",
                g.n() / t
            ));
        }
    }
    Outcome::new(failures, "k = 3")
}

fn sandwich_bounds() -> Outcome {
    let mut failures = Vec::new();
    let sqrt2 = std::f64::consts::SQRT_2;
    let m = 4.0 * sqrt2 / 3.0;
    for k in 3..=5u32 {
        let n = 1i64 << k;
        let lo = ratio(8, n * n);
        let step = (ratio(1, 2) - &lo) / int(199);
        for j in 0..200 {
            let l = &lo + &step * int(j);
            let lf = to_f64(&l);
            let q = ring_q(k, lf).unwrap();
            let g = ring_g(k, lf).unwrap();
            let lp = to_f64(&ring_lp(k, &l).unwrap().0);
            let chain = [q, g, lp, sqrt2 * g, m * q];
            if chain.windows(2).any(|w| !le_rel(w[0], w[1], 1e-9)) {
                failures.push(format!("k={k} λ={l}: chain {chain:?}"));
            }
        }
    }
    Outcome::new(failures, "k = 3, 4, 5; 200 points each")
}

fn geometric_cover() -> Outcome {
    let graphs = corpus();
    let runs: Vec<(&Named, Rational)> = graphs
        .iter()
        .flat_map(|g| [ratio(1, 2), int(1)].map(|e| (g, e)))
        .collect();
    let results: Vec<(Vec<String>, Rational)> = runs
        .par_iter()
        .map(|(Named { name, graph: g }, eps)| {
            let mut f = Vec::new();
            let fam = sweep_geometric(g, &SweepOptions::new(eps.clone())).unwrap();
            let bound = floor_log(&(int(1) + eps), &int(g.n() as i64)) + 2;
            if fam.members.len() as i64 > bound {
                f.push(format!(
                    "{name} ε={eps}: {} members > {bound}",
                    fam.members.len()
                ));
            }
            let report = certify_cover(&fam, g, 100).unwrap();
            if !report.passed {
                f.push(format!(
                    "{name} ε={eps}: {}",
                    report.summary().replace('\n', "; ")
                ));
            }
            let worst = report.worst_ratio.unwrap_or_else(|| int(i64::MAX));
            (f, worst / (int(1) + eps))
        })
        .collect();
    let worst = results.iter().map(|(_, w)| w.clone()).max().unwrap();
    let failures = results.into_iter().flat_map(|(f, _)| f).collect();
    Outcome::new(
        failures,
        format!(
            "{} runs, worst ratio/(1+ε) = {:.4}",
            runs.len(),
            to_f64(&worst)
        ),
    )
}

fn ratio_at(sol: &LpSolution, g: &Graph, lambda: &Rational) -> Option<Rational> {
    let lp = solve_at(g, lambda).unwrap().value;
    (!lp.is_zero()).then(|| sol.value_at(lambda) / lp)
}

fn orlp_correctness() -> Outcome {
    let graphs = corpus();
    let results: Vec<(Vec<String>, usize)> = graphs
        .par_iter()
        .map(|Named { name, graph: g }| {
            let mut f = Vec::new();
            let exact = exact_opt_curve(g).unwrap();
            let mut matched = 0;
            for (piece, c) in exact.curve.pieces.iter().zip(&exact.family) {
                let inner = |l: &Rational| *l > Rational::zero() && *l < Rational::one();
                // LP meets OPT at both ends, so by concavity on the whole piece
                let tight = [&piece.lo, &piece.hi]
                    .into_iter()
                    .filter(|l| inner(l))
                    .all(|l| solve_at(g, l).unwrap().value == piece.line.at(l));
                if !tight {
                    continue;
                }
                let mid = (&piece.lo + &piece.hi) / int(2);
                let sol = integral_solution(c, g, &mid);
                let range =
                    eps_range(&sol, &mid, &Rational::zero(), g, Objective::LamPrime).unwrap();
                if range.lo != piece.lo || range.hi != piece.hi {
                    f.push(format!(
                        "{name}: piece [{}, {}] but ORLP range [{}, {}]",
                        piece.lo, piece.hi, range.lo, range.hi
                    ));
                }
                matched += 1;
            }

            let epsilons = [Rational::zero(), ratio(1, 10), ratio(1, 2)];
            for l0 in [ratio(3, 10), ratio(7, 10)] {
                let sol = solve_at(g, &l0).unwrap();
                let ranges: Vec<LambdaInterval> = epsilons
                    .iter()
                    .map(|e| eps_range(&sol, &l0, e, g, Objective::LamPrime).unwrap())
                    .collect();
                if ranges.windows(2).any(|w| !w[1].contains_interval(&w[0])) {
                    f.push(format!("{name} λ0={l0}: ranges not nested"));
                }
                let nudge = ratio(1, 1 << 20);
                for (eps, r) in epsilons.iter().zip(&ranges) {
                    let bound = int(1) + eps;
                    let mid = (&r.lo + &r.hi) / int(2);
                    for l in [&r.lo, &mid, &r.hi] {
                        if *l > Rational::zero()
                            && *l < Rational::one()
                            && ratio_at(&sol, g, l).is_some_and(|q| q > bound)
                        {
                            f.push(format!("{name} λ0={l0} ε={eps}: ratio above 1+ε at {l}"));
                        }
                    }
                    let beyond = [
                        (!r.lo_clamped).then(|| &r.lo - &nudge),
                        (!r.hi_clamped).then(|| &r.hi + &nudge),
                    ];
                    for l in beyond.into_iter().flatten() {
                        if l <= Rational::zero() || l >= Rational::one() {
                            continue;
                        }
                        if ratio_at(&sol, g, &l).is_none_or(|q| q <= bound) {
                            f.push(format!("{name} λ0={l0} ε={eps}: range not sharp at {l}"));
                        }
                    }
                }
            }
            (f, matched)
        })
        .collect();
    let graphs_matched = results.iter().filter(|(_, m)| *m > 0).count();
    let pieces: usize = results.iter().map(|(_, m)| m).sum();
    let mut failures: Vec<String> = results.into_iter().flat_map(|(f, _)| f).collect();
    if graphs_matched < 10 {
        failures.push(format!(
            "only {graphs_matched} graphs have an LP-tight piece"
        ));
    }
    Outcome::new(
        failures,
        format!("{pieces} LP-tight pieces on {graphs_matched} graphs"),
    )
}

/// Fewest intervals whose union covers `domain`, by exhaustive search.
fn min_subcover(intervals: &[LambdaInterval], domain: &LambdaInterval) -> Option<usize> {
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    order.sort_by(|&a, &b| intervals[a].lo.cmp(&intervals[b].lo));
    let covers = |mask: u32| {
        let mut reach = domain.lo.clone();
        for &i in &order {
            if mask >> i & 1 == 0 {
                continue;
            }
            if intervals[i].lo > reach {
                return false;
            }
            reach = reach.max(intervals[i].hi.clone());
        }
        reach >= domain.hi
    };
    (1u32..1 << intervals.len())
        .filter(|&m| covers(m))
        .map(|m| m.count_ones() as usize)
        .min()
}

fn fe_febe_bounds() -> Outcome {
    let graphs = corpus();
    let runs: Vec<(&Named, Rational)> = graphs
        .iter()
        .flat_map(|g| [ratio(1, 4), ratio(1, 2), int(1)].map(|e| (g, e)))
        .collect();
    let results: Vec<(Vec<String>, Option<String>)> = runs
        .par_iter()
        .map(|(Named { name, graph: g }, eps)| {
            let mut f = Vec::new();
            let opts = SweepOptions::new(eps.clone());
            let fe = sweep_fe(g, &opts).unwrap();
            let bound = ceil_log(&(int(1) + eps), &int(g.n() as i64));
            if fe.members.len() as i64 > bound {
                f.push(format!(
                    "{name} ε={eps}: |FE| = {} > {bound}",
                    fe.members.len()
                ));
            }
            let febe = sweep_febe(g, &opts).unwrap();
            let report = certify_cover(&febe, g, 30).unwrap();
            if !report.passed {
                f.push(format!(
                    "{name} ε={eps}: FEBE {}",
                    report.summary().replace('\n', "; ")
                ));
            }
            let fe_lambdas: BTreeSet<&Rational> = fe.members.iter().map(|m| &m.lambda).collect();
            if febe.members.iter().any(|m| !fe_lambdas.contains(&m.lambda)) {
                f.push(format!("{name} ε={eps}: FEBE is not a subfamily of FE"));
            }
            if fe.members.len() <= 20 {
                let ranges: Vec<LambdaInterval> = fe
                    .members
                    .iter()
                    .map(|m| {
                        eps_range(
                            &m.solution().unwrap(),
                            &m.lambda,
                            eps,
                            g,
                            Objective::LamPrime,
                        )
                        .unwrap()
                    })
                    .collect();
                let best = min_subcover(&ranges, &fe.domain);
                if best != Some(febe.members.len()) {
                    f.push(format!(
                        "{name} ε={eps}: |FEBE| = {} but minimum is {best:?}",
                        febe.members.len()
                    ));
                }
            }
            let star = name.starts_with("star").then(|| {
                if febe.members.len() > fe.members.len() || febe.members.len() > 3 {
                    f.push(format!(
                        "{name} ε={eps}: |FEBE| = {} |FE| = {}",
                        febe.members.len(),
                        fe.members.len()
                    ));
                }
                format!("{name}@{eps}:{}/{}", febe.members.len(), fe.members.len())
            });
            (f, star)
        })
        .collect();
    let stars: Vec<String> = results.iter().filter_map(|(_, s)| s.clone()).collect();
    let failures = results.into_iter().flat_map(|(f, _)| f).collect();
    Outcome::new(
        failures,
        format!(
            "{} runs; stars |FEBE|/|FE|: {}",
            runs.len(),
            stars.join(" ")
        ),
    )
}

fn random_lambda(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.random_range(2..=1_000_000i64);
    ratio(rng.random_range(1..den), den)
}

fn transfer_bound() -> Outcome {
    let graphs = corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let samples: Vec<(usize, Rational, Rational)> = (0..200)
        .map(|_| {
            let gi = rng.random_range(0..graphs.len());
            let (mut a, mut b) = (random_lambda(&mut rng), random_lambda(&mut rng));
            while a == b {
                b = random_lambda(&mut rng);
            }
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            (gi, a, b)
        })
        .collect();
    let mut failures: Vec<String> = samples
        .par_iter()
        .flat_map(|(gi, lt, lt1)| {
            let Named { name, graph: g } = &graphs[*gi];
            let mut f = Vec::new();
            let (xt, xt1) = (solve_at(g, lt).unwrap(), solve_at(g, lt1).unwrap());
            let delta = lt1 / lt;
            if xt.value_at(lt1) > &delta * &xt1.value || xt1.value_at(lt) > &delta * &xt.value {
                f.push(format!("{name} ({lt}, {lt1}): LambdaPrime transfer fails"));
            }
            let cc = |sol: &LpSolution, l: &Rational| {
                Objective::LamCC.from_lamprime(&sol.value_at(l), l, g)
            };
            let delta = lamcc_ratio(lt, lt1).unwrap();
            if cc(&xt, lt1) > &delta * cc(&xt1, lt1) || cc(&xt1, lt) > &delta * cc(&xt, lt) {
                f.push(format!("{name} ({lt}, {lt1}): LambdaCC transfer fails"));
            }
            f
        })
        .collect();
    for n in [4usize, 8, 10] {
        for eps in [ratio(1, 4), ratio(1, 2), int(1)] {
            let s = lamcc_schedule(n, &eps).unwrap();
            if s.windows(2)
                .any(|w| lamcc_ratio(&w[0], &w[1]).unwrap() != int(1) + &eps)
            {
                failures.push(format!("lamcc schedule n={n} ε={eps}: step ≠ 1+ε"));
            }
        }
    }
    Outcome::new(failures, "200 samples")
}

fn objective_identity() -> Outcome {
    let graphs = corpus();
    let failures: Vec<String> = graphs
        .par_iter()
        .enumerate()
        .flat_map(|(i, Named { name, graph: g })| {
            let mut rng = ChaCha8Rng::seed_from_u64(100 + i as u64);
            let uniform = NodeWeights::uniform(g.n());
            let mut f = Vec::new();
            for _ in 0..1000 {
                let labels: Vec<usize> = (0..g.n()).map(|_| rng.random_range(0..g.n())).collect();
                let c = Clustering::new(&labels).unwrap();
                let l = random_lambda(&mut rng);
                let prime = lamprime_score(&c, g, &l).unwrap();
                let cc = lamcc_score(&c, g, &l).unwrap();
                if prime != &cc + &l * int(g.m() as i64) {
                    f.push(format!("{name}: identity fails for {labels:?} at {l}"));
                }
                if weighted_lamprime_score(&c, g, &uniform, &l).unwrap() != prime {
                    f.push(format!(
                        "{name}: unit weights change the score for {labels:?}"
                    ));
                }
            }
            f
        })
        .collect();
    Outcome::new(failures, format!("{} graphs × 1000 samples", graphs.len()))
}

fn rounding_pipeline() -> Outcome {
    let start = Instant::now();
    let graphs = corpus();
    let results: Vec<(Vec<String>, f64)> = graphs
        .par_iter()
        .map(|Named { name, graph: g }| {
            let mut f = Vec::new();
            let cover = sweep_geometric(g, &SweepOptions::new(int(1))).unwrap();
            let exact = exact_opt_curve(g).unwrap();
            let family = build_clustering_family(&cover, g).unwrap();
            let bound = 3.0 * ((g.n() + 1) as f64).ln();
            let mut worst = 0.0f64;
            for (m, r) in cover.members.iter().zip(&family) {
                if r.assignment.len() != g.n() || Clustering::new(&r.assignment).is_err() {
                    f.push(format!("{name}: invalid assignment at λ={}", m.lambda));
                    continue;
                }
                if r.score < r.lp_value {
                    f.push(format!(
                        "{name}: score {} below LP {} at λ={}",
                        r.score, r.lp_value, m.lambda
                    ));
                }
                let opt = exact.value_at(&m.lambda);
                let q = to_f64(&(&r.score / &opt));
                worst = worst.max(q);
                if q > bound {
                    f.push(format!(
                        "{name}: ratio {q:.3} to OPT above {bound:.3} at λ={}",
                        m.lambda
                    ));
                }
            }
            (f, worst)
        })
        .collect();
    let worst = results.iter().map(|(_, w)| *w).fold(0.0, f64::max);
    let mut failures: Vec<String> = results.into_iter().flat_map(|(f, _)| f).collect();
    over_budget(start, Duration::from_secs(600), &mut failures);
    Outcome::new(failures, format!("worst score/OPT = {worst:.4}"))
}

fn lower_bound_calculator() -> Outcome {
    let mut failures = Vec::new();
    for p in [ratio(101, 100), ratio(11, 10), ratio(3, 2), int(2), int(4)] {
        let bs: Vec<u64> = (2..=30)
            .map(|k| ring_lower_bound(k, &p).unwrap().b)
            .collect();
        if bs.windows(2).any(|w| w[0] > w[1]) {
            failures.push(format!(
                "p={}: B not monotone in k: {bs:?}",
                format_rational(&p)
            ));
        }
    }
    let expected = (3.0 + 2.0 * std::f64::consts::SQRT_2).powi(2);
    let got = gamma(std::f64::consts::SQRT_2).unwrap();
    if (got - expected).abs() > 1e-9 {
        failures.push(format!("γ(√2) = {got}, expected {expected}"));
    }
    Outcome::new(failures, format!("γ(√2) = {got:.9}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("optimal-family bound", optimal_family_bound),
        ("star tightness", star_tightness),
        ("ring closed form", ring_closed_form),
        ("special-λ coincidence", special_lambdas),
        ("sandwich bounds", sandwich_bounds),
        ("geometric cover", geometric_cover),
        ("ORLP correctness", orlp_correctness),
        ("FE/FEBE bounds", fe_febe_bounds),
        ("transfer bound", transfer_bound),
        ("objective identity", objective_identity),
        ("rounding pipeline", rounding_pipeline),
        ("lower-bound calculator", lower_bound_calculator),
    ];
    let only: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome::new(vec![format!("panicked: {msg}")], "")
        });
        let secs = start.elapsed().as_secs_f64();
        if outcome.failures.is_empty() {
            println!("PASS {id:>2} {name} ({secs:.1}s) {}", outcome.notes);
        } else {
            failed += 1;
            println!("FAIL {id:>2} {name} ({secs:.1}s) {}", outcome.notes);
            for f in outcome.failures.iter().take(10) {
                println!("     - {f}");
            }
            if outcome.failures.len() > 10 {
                println!("     ... {} more", outcome.failures.len() - 10);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
