// SPDX-License-Identifier: MIT OR Apache-2.0

mod common;

use common::*;
use fusedpath::generators::{gen_random, gen_worst_case};
use fusedpath::{
    constrained_to_penalized, from_dual, penalized_to_constrained, to_dual, weighted_tv, Instance, Rational,
    Scalar,
};
use proptest::prelude::*;

#[test]
fn inverse_of_two_point_dual() {
    let dual = fusedpath::DualInstance::new(qs(&[(-1, 1), (-1, 1), (0, 1)]), qs(&[(0, 1), (1, 1), (0, 1)])).unwrap();
    let inst = from_dual(&dual);
    assert_eq!(inst.y(), qs(&[(0, 1), (1, 1)]).as_slice());
    assert_eq!(inst.alpha(), qs(&[(1, 1)]).as_slice());
}

#[test]
fn worst_case_primal_weights_are_squares() {
    let inst = from_dual(&gen_worst_case::<Rational>(3));
    assert_eq!(inst.alpha(), qs(&[(1, 1), (4, 1)]).as_slice());
}

#[test]
fn two_point_conversion() {
    let inst = Instance::new(qs(&[(0, 1), (1, 1)]), qs(&[(1, 1)])).unwrap();
    let path = solve_instance(&inst);
    assert_eq!(penalized_to_constrained(&path, &q(1, 4)), q(1, 2));
    assert_eq!(constrained_to_penalized(&path, &q(1, 2)), q(1, 4));
    assert_eq!(constrained_to_penalized(&path, &q(0, 1)), q(1, 2));
    assert_eq!(constrained_to_penalized(&path, &q(5, 1)), q(0, 1));
}

#[test]
fn conversion_limits() {
    let inst = four_point();
    let path = solve_instance(&inst);
    assert_eq!(penalized_to_constrained(&path, &q(0, 1)), weighted_tv(&inst, inst.y()));
    assert_eq!(penalized_to_constrained(&path, &q(100, 1)), q(0, 1));
    assert_eq!(constrained_to_penalized(&path, &q(0, 1)), path.last_gamma());
    let g = q(25, 4);
    assert_eq!(weighted_tv(&inst, &path.eval_x(&g)), penalized_to_constrained(&path, &g));
}

#[test]
fn tv_is_non_increasing() {
    let inst: Instance<f64> = gen_random(40, 9);
    let path = solve_instance(&inst);
    let top = path.last_gamma() * 1.1;
    let mut prev = f64::INFINITY;
    for k in 0..1000 {
        let tv = penalized_to_constrained(&path, &(top * k as f64 / 999.0));
        assert!(tv <= prev + 1e-9);
        prev = tv;
    }
}

#[test]
fn rational_round_trip_is_exact() {
    for seed in 0..10 {
        let inst: Instance<Rational> = gen_random(10, seed);
        let path = solve_instance(&inst);
        for k in 0..8 {
            let g = q(k, 3);
            let back = constrained_to_penalized(&path, &penalized_to_constrained(&path, &g));
            assert!(back <= g);
            assert_eq!(path.eval_x(&back), path.eval_x(&g));
        }
    }
}

proptest! {
    #[test]
    fn dual_round_trip(y in prop::collection::vec(-50i64..50, 1..30), seed in 0u64..1000) {
        let n = y.len();
        let alpha: Vec<Rational> = (0..n - 1).map(|t| q(((t as u64 * 7 + seed) % 11) as i64, 4)).collect();
        let inst = Instance::new(y.into_iter().map(|v| q(v, 3)).collect(), alpha).unwrap();
        let dual = to_dual(&inst);
        prop_assert!(dual.ytilde().last().unwrap().is_zero());
        prop_assert_eq!(from_dual(&dual), inst);
    }
}
