use novikov_core::corpus;
use novikov_core::invariants::{crit_bound, thm3_bound, CupOptions, DEFAULT_SEED};

#[test]
fn three_torus_sum_with_two_classes() {
    let a = corpus::three_torus().unwrap();
    let t = corpus::torus().unwrap();
    let b = a.with_cocycle(corpus::fiber_class(&t.complex, &t.cocycle, &a).unwrap(), "T^3 with a fiber class");
    let x = corpus::connected_sum(&a, &b).unwrap();
    let (z1, z2) = corpus::summand_classes(&a, &x).unwrap();
    assert_eq!(z1.add(&z2), x.cocycle);
    let opts = CupOptions { manifold: true };
    let r = thm3_bound(&x.complex, &[z1.clone(), z2.clone()], &[vec![1, 0], vec![2, 1], vec![3, 2]], DEFAULT_SEED, &opts).unwrap();
    assert_eq!((r.cl_lower_bound, r.crit_point_bound), (3, 2));
    let first = crit_bound(&x.complex, &z1, DEFAULT_SEED, &opts).unwrap();
    assert_eq!(first.cl_lower_bound, 3);
}

#[test]
fn connected_sum_with_a_fibration_keeps_the_untwisted_cup_length() {
    let t = corpus::torus().unwrap();
    let zero = t.with_cocycle(novikov_core::cocycle::IntegralOneCocycle::zero(&t.complex), "torus");
    let x = corpus::connected_sum(&zero, &t).unwrap();
    let r = crit_bound(&x.complex, &x.cocycle, DEFAULT_SEED, &CupOptions { manifold: true }).unwrap();
    assert_eq!((r.cl_lower_bound, r.crit_point_bound), (2, 1));
}
