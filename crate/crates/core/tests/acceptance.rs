// SPDX-License-Identifier: MIT OR Apache-2.0

//! Acceptance suite. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test --release -p fusedpath --test acceptance -- --nocapture`.

mod common;

use std::time::Instant;

use common::*;
use fusedpath::generators::{gen_1fl, gen_random, gen_worst_case};
use fusedpath::oracle::{solve_fixed_gamma_dp, solve_fixed_gamma_qp};
use fusedpath::{
    constrained_to_penalized, penalized_to_constrained, to_dual, EventKind, Instance, Rational, Scalar,
    SolutionPath,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WORST_CASE_SIZES: [usize; 5] = [5, 10, 20, 30, 40];
/// Band for total events / n^2 on the adversarial family.
const QUADRATIC_BAND: (f64, f64) = (0.1, 1.0);
/// Fitted constant for |fuse - unfuse| <= c n on the adversarial family.
const FUSE_BALANCE_C: f64 = 1.0;

fn report(id: u32, name: &str, ok: bool, detail: String) {
    println!("criterion {id} {name}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} {name} failed: {detail}");
}

fn worst_case_paths() -> Vec<(usize, SolutionPath<Rational>)> {
    WORST_CASE_SIZES
        .iter()
        .map(|&n| (n, solve_checked(&gen_worst_case::<Rational>(n))))
        .collect()
}

#[test]
fn criterion_1_first_pair_fuses_unfuses_fuses_exactly() {
    let start = Instant::now();
    let path = solve_instance(&four_point());
    let mut ok = true;
    // Fused exactly on [25/27, 25/23] and [25/4, inf), apart elsewhere.
    let fused = |g: &Rational| {
        let x = path.eval_x(g);
        x[0] == x[1]
    };
    let inside = [q(25, 27), q(1, 1), q(25, 23), q(25, 4), q(7, 1), q(1000, 1)];
    let outside = [q(0, 1), q(1, 2), q(25, 27) - q(1, 10_000), q(25, 23) + q(1, 10_000), q(3, 1), q(25, 4) - q(1, 10_000)];
    ok &= inside.iter().all(fused);
    ok &= !outside.iter().any(fused);
    let pair: Vec<_> = path.events().iter().filter(|e| e.index == 2).map(|e| (e.gamma.clone(), e.kind)).collect();
    ok &= pair
        == vec![
            (q(25, 27), EventKind::BecameFree),
            (q(25, 23), EventKind::BecameNonFree),
            (q(25, 4), EventKind::BecameFree),
        ];
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs_f64() < 1.0;
    let events: Vec<String> = pair.iter().map(|(g, k)| format!("{} {}", k.label(), g)).collect();
    report(1, "exact fuse/unfuse sequence", ok, format!("{}; {elapsed:?}", events.join(", ")));
}

#[test]
fn criterion_2_unit_weights_only_fuse() {
    let mut worst_unfuse = 0;
    let mut ok = true;
    let mut detail = Vec::new();
    for n in [10usize, 100, 1000, 10_000] {
        let mut max_fuse = 0;
        for seed in 0..100 {
            let base: Instance<f64> = gen_random(n, seed);
            let path = solve_instance(&gen_1fl(base.y().to_vec()));
            let (fuse, unfuse) = path.event_counts();
            worst_unfuse = worst_unfuse.max(unfuse);
            max_fuse = max_fuse.max(fuse);
            ok &= unfuse == 0 && fuse < n;
        }
        detail.push(format!("n={n} max fuse {max_fuse}"));
    }
    report(2, "unit weights never unfuse", ok, format!("max unfuse {worst_unfuse}; {}", detail.join(", ")));
}

#[test]
fn criterion_3_adversarial_family_quadratic_events() {
    let mut lower_bound_ok = true;
    let mut band_ok = true;
    let mut detail = Vec::new();
    for (n, path) in worst_case_paths() {
        let total = path.events().len();
        let ratio = total as f64 / (n * n) as f64;
        lower_bound_ok &= total >= n * (n - 1) / 2;
        band_ok &= ratio >= QUADRATIC_BAND.0 && ratio <= QUADRATIC_BAND.1;
        detail.push(format!("n={n} total={total} need={} ratio={ratio:.4}", n * (n - 1) / 2));
    }
    report(
        3,
        "adversarial family event count",
        lower_bound_ok && band_ok,
        format!("lower bound {lower_bound_ok}, quadratic band {band_ok}; {}", detail.join(", ")),
    );
}

#[test]
fn criterion_4_fuse_unfuse_balance() {
    let mut ok = true;
    let mut detail = Vec::new();
    for (n, path) in worst_case_paths() {
        let (fuse, unfuse) = path.event_counts();
        let gap = fuse.abs_diff(unfuse);
        ok &= gap as f64 <= FUSE_BALANCE_C * n as f64;
        detail.push(format!("n={n} |fuse-unfuse|/n={:.3}", gap as f64 / n as f64));
    }
    report(4, "fuse/unfuse balance", ok, format!("c={FUSE_BALANCE_C}; {}", detail.join(", ")));
}

#[test]
fn criterion_5_event_ceiling() {
    // Every solve in the suite goes through `solve_checked`; this test covers
    // a spread of families on its own.
    let mut worst: f64 = 0.0;
    let mut record = |path: &SolutionPath<f64>| {
        let n = path.dual().n();
        worst = worst.max(path.events().len() as f64 / ceiling(n) as f64);
    };
    for seed in 0..50 {
        let inst: Instance<f64> = gen_random(200, seed);
        record(&solve_instance(&inst));
        record(&solve_instance(&gen_1fl(inst.y().to_vec())));
    }
    for n in 3..=25 {
        record(&solve_checked(&gen_worst_case::<Rational>(n).map(|v| v.to_f64())));
    }
    for (_, path) in worst_case_paths() {
        let n = path.dual().n();
        worst = worst.max(path.events().len() as f64 / ceiling(n) as f64);
    }
    report(5, "event ceiling 8 C(n+1, 2)", worst <= 1.0, format!("max events/ceiling {worst:.4}"));
}

#[test]
fn criterion_6_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut float_worst: f64 = 0.0;
    let mut oracle_worst: f64 = 0.0;
    let mut exact_ok = true;
    for k in 0..50u64 {
        let n = rng.random_range(1..=50);
        let inst: Instance<f64> = gen_random(n, 1000 + k);
        let dual = to_dual(&inst);
        let path = solve_instance(&inst);
        let top = path.last_gamma() * 1.2 + 0.1;
        for _ in 0..100 {
            let g = rng.random_range(0.0..top);
            let x = path.eval_x(&g);
            let dp = solve_fixed_gamma_dp(&inst, &g);
            let w = solve_fixed_gamma_qp(&dual, &g).unwrap();
            let qp: Vec<f64> = w.windows(2).map(|p| p[1] - p[0]).collect();
            float_worst = float_worst.max(sup_diff(&x, &dp)).max(sup_diff(&x, &qp));
            oracle_worst = oracle_worst.max(sup_diff(&dp, &qp));
        }

        // Exact backend on data with small denominators.
        let y: Vec<Rational> = (0..n).map(|_| q(rng.random_range(-40..=40), 4)).collect();
        let alpha: Vec<Rational> = (1..n).map(|_| q(rng.random_range(0..=10), 10)).collect();
        let inst = Instance::new(y, alpha).unwrap();
        let dual = to_dual(&inst);
        let path = solve_instance(&inst);
        let top = (path.last_gamma() * q(6, 5)).to_f64().ceil() as i64 + 1;
        for _ in 0..100 {
            let g = q(rng.random_range(0..=top * 64), 64);
            let x = path.eval_x(&g);
            let dp = solve_fixed_gamma_dp(&inst, &g);
            let w = solve_fixed_gamma_qp(&dual, &g).unwrap();
            let qp: Vec<Rational> = w.windows(2).map(|p| p[1].clone() - p[0].clone()).collect();
            exact_ok &= x == dp && dp == qp;
        }
    }
    let ok = float_worst <= 1e-8 && oracle_worst <= 1e-8 && exact_ok;
    report(
        6,
        "oracle equivalence",
        ok,
        format!("float path-oracle {float_worst:.2e}, oracle-oracle {oracle_worst:.2e}, rational exact {exact_ok}"),
    );
}

#[test]
fn criterion_7_random_ensemble_unfuse_rare_fuse_linear() {
    let sizes = [10usize, 20, 50, 100, 200, 500, 1000];
    let mut means = Vec::new();
    let mut rare = true;
    let mut detail = Vec::new();
    for &n in &sizes {
        let (mut fuse, mut unfuse) = (0usize, 0usize);
        for seed in 0..100 {
            let inst: Instance<f64> = gen_random(n, seed);
            let (f, u) = solve_instance(&inst).event_counts();
            fuse += f;
            unfuse += u;
        }
        let (mf, mu) = (fuse as f64 / 100.0, unfuse as f64 / 100.0);
        rare &= mu < 0.1 * mf;
        means.push((n as f64, mf));
        detail.push(format!("n={n} fuse={mf:.2} unfuse={mu:.2}"));
    }
    let r2 = r_squared(&means);
    report(
        7,
        "random ensemble",
        rare && r2 >= 0.98,
        format!("unfuse < 10% of fuse: {rare}, linear R^2 {r2:.5}; {}", detail.join(", ")),
    );
}

fn r_squared(points: &[(f64, f64)]) -> f64 {
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    sxy * sxy / (sxx * syy)
}

#[test]
fn criterion_8_conversion_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut float_worst: f64 = 0.0;
    let mut exact_ok = true;
    for seed in 0..20 {
        let inst: Instance<f64> = gen_random(30, 500 + seed);
        let path = solve_instance(&inst);
        let top = path.last_gamma() * 1.1;
        for _ in 0..25 {
            let g = rng.random_range(0.0..top);
            let back = constrained_to_penalized(&path, &penalized_to_constrained(&path, &g));
            float_worst = float_worst.max(sup_diff(&path.eval_x(&back), &path.eval_x(&g)));
        }

        let inst: Instance<Rational> = gen_random(12, 500 + seed);
        let path = solve_instance(&inst);
        let top = path.last_gamma().to_f64().ceil() as i64 + 1;
        for _ in 0..10 {
            let g = q(rng.random_range(0..=top * 16), 16);
            let back = constrained_to_penalized(&path, &penalized_to_constrained(&path, &g));
            exact_ok &= path.eval_x(&back) == path.eval_x(&g);
        }
    }
    report(
        8,
        "penalized/constrained round trip",
        float_worst <= 1e-9 && exact_ok,
        format!("float {float_worst:.2e}, rational exact {exact_ok}"),
    );
}
