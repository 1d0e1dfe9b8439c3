mod common;

use std::collections::BTreeSet;

use common::*;
use hc_lab_core::lattice::omega;
use hc_lab_core::morphism::quotient;
use hc_lab_core::{arith, Caps, Error, SubgroupLattice};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn lattice(spec: &str) -> SubgroupLattice {
    SubgroupLattice::new(&group(spec)).unwrap()
}

#[test]
fn subgroup_counts_match_brute_force() {
    for (spec, count) in [("C1", 1), ("S4", 30), ("A4", 10), ("D8", 10), ("Q8", 6), ("S3", 6), ("C12", 6)] {
        let g = group(spec);
        let lat = SubgroupLattice::new(&g).unwrap();
        let brute = brute_subgroups(&g);
        assert_eq!(lat.len(), count, "{spec}");
        assert_eq!(brute.len(), count, "{spec}");
        let ours: BTreeSet<BTreeSet<usize>> = lat.subgroups().iter().map(as_set).collect();
        assert_eq!(ours, brute, "{spec}");
    }
}

#[test]
fn larger_counts() {
    assert_eq!(lattice("S5").len(), 156);
    assert_eq!(lattice("A5").len(), 59);
    assert_eq!(lattice("SL(2,3)").len(), 15);
    assert_eq!(lattice("EA(2,3)").len(), 16);
}

#[test]
fn prime_cyclic_groups_have_two_subgroups() {
    for p in [2, 3, 5, 7, 11] {
        assert_eq!(lattice(&format!("C{p}")).len(), 2);
    }
}

#[test]
fn lattice_is_sorted_and_indexed() {
    let lat = lattice("S4");
    assert!(lat.subgroups().windows(2).all(|w| w[0] < w[1]));
    assert!(lat.trivial().is_trivial());
    assert!(lat.whole().is_whole());
    for (i, h) in lat.subgroups().iter().enumerate() {
        assert_eq!(lat.index_of(h), Some(i));
        assert_eq!(&lat.group().generated_subgroup(lat.generators(i)), h);
    }
}

#[test]
fn lattice_cap() {
    let caps = Caps {
        lattice: 100,
        ..Caps::default()
    };
    assert!(matches!(
        SubgroupLattice::with_caps(&group("S5"), &caps),
        Err(Error::OrderCapExceeded { .. })
    ));
}

#[test]
fn normalizer_examples() {
    let lat = lattice("S4");
    let g = lat.group();
    assert!(lat.normalizer(lat.whole()).is_whole());
    let v4 = gen(g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
    assert!(lat.normalizer(&v4).is_whole());
    let t = gen(g, &["(1 2)"]);
    assert_eq!(lat.normalizer(&t), &gen(g, &["(1 2)", "(3 4)"]));
    assert_eq!(as_set(lat.normalizer(&t)), normalizer_scan(g, &t));
}

#[test]
fn centralizer_examples() {
    let lat = lattice("C12");
    let h = lat.group().generated_subgroup(&[4]);
    assert!(lat.centralizer(&h).is_whole());
    let lat = lattice("S3");
    let c3 = gen(lat.group(), &["(1 2 3)"]);
    assert_eq!(lat.centralizer(&c3), c3);
    let lat = lattice("Q8");
    assert_eq!(lat.center().size(), 2);
}

#[test]
fn core_and_closure_examples() {
    let lat = lattice("S4");
    let g = lat.group();
    let v4 = gen(g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
    assert_eq!(lat.normal_core(&v4), v4);
    assert_eq!(lat.normal_closure(&v4), v4);
    let t = gen(g, &["(1 2)"]);
    assert!(lat.normal_core(&t).is_trivial());
    assert!(lat.normal_closure(&t).is_whole());
    let d8 = lat.sylow_subgroup(2);
    assert_eq!(d8.size(), 8);
    assert_eq!(lat.normal_core(d8), v4);

    let lat = lattice("A4");
    let g = lat.group();
    let h = gen(g, &["(1 2)(3 4)"]);
    assert_eq!(lat.normal_closure(&h), gen(g, &["(1 2)(3 4)", "(1 3)(2 4)"]));
}

#[test]
fn sylow_examples() {
    let lat = lattice("S4");
    assert_eq!(lat.sylow_subgroup(2).size(), 8);
    assert_eq!(lat.sylow_subgroups(2).len(), 3);
    assert_eq!(lat.sylow_subgroups(3).len(), 4);
    let lat = lattice("S3");
    let p3 = lat.sylow_subgroups(3);
    assert_eq!(p3.len(), 1);
    assert!(lat.is_normal(p3[0]));
}

#[test]
fn maximal_and_frattini_examples() {
    assert!(lattice("C7").maximal_subgroups().iter().all(|m| m.is_trivial()));
    let d8 = lattice("D8");
    let maxes = d8.maximal_subgroups();
    assert_eq!(maxes.len(), 3);
    assert!(maxes.iter().all(|m| m.size() == 4));
    let s4 = lattice("S4");
    let orders: BTreeSet<usize> = s4.maximal_subgroups().iter().map(|m| m.size()).collect();
    assert_eq!(orders, BTreeSet::from([6, 8, 12]));
    assert!(s4.frattini().is_trivial());
    assert!(lattice("EA(2,3)").frattini().is_trivial());
    let q8 = lattice("Q8");
    assert_eq!(q8.frattini(), q8.center());
    assert_eq!(q8.frattini().size(), 2);
}

#[test]
fn socle_examples() {
    let a5 = lattice("A5");
    assert!(a5.socle().is_whole());
    let s4 = lattice("S4");
    let mins = s4.minimal_normal_subgroups();
    assert_eq!(mins.len(), 1);
    assert_eq!(mins[0].size(), 4);
    assert_eq!(s4.socle().size(), 4);
    let c6 = lattice("C6");
    let orders: Vec<usize> = c6.minimal_normal_subgroups().iter().map(|m| m.size()).collect();
    assert_eq!(orders, vec![2, 3]);
    assert!(c6.socle().is_whole());
}

#[test]
fn p_radical_examples() {
    let p = lattice("D16");
    let r = p.p_radicals(2);
    assert!(r.o_p.is_whole());
    assert!(r.o_p_prime.is_trivial());
    assert!(r.o_upper_p.is_trivial());
    let s3 = lattice("S3");
    let r = s3.p_radicals(2);
    assert!(r.o_p.is_trivial());
    assert_eq!(r.o_p_prime.size(), 3);
    assert_eq!(r.o_upper_p.size(), 3);
    assert!(s3.o_upper_p(3).is_whole());
}

#[test]
fn omega_examples() {
    let ea = lattice("EA(3,2)");
    assert!(ea.omega(ea.whole(), 3, 1).unwrap().is_whole());
    let q8 = lattice("Q8");
    assert_eq!(q8.omega(q8.whole(), 2, 1).unwrap(), q8.center());
    assert!(q8.omega(q8.whole(), 2, 2).unwrap().is_whole());
    let c8 = group("C8");
    assert_eq!(omega(&c8, &c8.whole(), 2, 1).unwrap().size(), 2);
    assert_eq!(omega(&c8, &c8.whole(), 2, 2).unwrap().size(), 4);
    let s3 = group("S3");
    assert_eq!(omega(&s3, &s3.whole(), 2, 1).unwrap_err(), Error::NotPGroup { p: 2 });
}

#[test]
fn random_generation_finds_nothing_new() {
    for (name, g) in corpus() {
        let lat = SubgroupLattice::new(&g).unwrap();
        let n = g.order();
        let mut runner = TestRunner::new(Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        });
        runner
            .run(&(0..n, 0..n), |(a, b)| {
                let h = g.generated_subgroup(&[a, b]);
                prop_assert!(lat.index_of(&h).is_some(), "{} missing <{}, {}>", name, a, b);
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn local_subgroup_invariants() {
    for (name, g) in corpus() {
        let lat = SubgroupLattice::new(&g).unwrap();
        let phi = lat.frattini();
        assert!(lat.is_normal(&phi), "{name}");
        for m in lat.maximal_subgroups() {
            assert!(phi.is_subgroup_of(m), "{name}");
        }
        for h in lat.subgroups() {
            let n = lat.normalizer(h);
            assert!(h.is_subgroup_of(n), "{name}");
            let c = lat.centralizer(h);
            assert!(c.is_subgroup_of(n) && lat.is_normal_in(n, &c), "{name}");
            let core = lat.normal_core(h);
            let closure = lat.normal_closure(h);
            assert!(core.is_subgroup_of(h) && h.is_subgroup_of(&closure), "{name}");
            assert!(lat.is_normal(&core) && lat.is_normal(&closure), "{name}");
            assert_eq!(lat.is_normal(h), is_normal_scan(&g, h), "{name}");
        }
        for p in arith::prime_divisors(g.order()) {
            let sylows = lat.sylow_subgroups(p);
            assert_eq!(sylows.len() % p, 1, "{name} p={p}");
            let first = sylows[0];
            let class: BTreeSet<usize> = lat.conjugates(first).map(|c| lat.index_of(c).unwrap()).collect();
            let all: BTreeSet<usize> = sylows.iter().map(|s| lat.index_of(s).unwrap()).collect();
            assert_eq!(class, all, "{name} p={p}");
            let r = lat.p_radicals(p);
            assert_eq!(arith::gcd(r.o_p_prime.size(), p), 1, "{name}");
            let (q, _) = quotient(&g, &r.o_upper_p).unwrap();
            assert!(arith::is_power_of(q.order(), p), "{name}");
        }
    }
}

#[test]
fn conjugacy_classes_partition_the_lattice() {
    for (name, g) in corpus() {
        let lat = SubgroupLattice::new(&g).unwrap();
        let total: usize = lat.conjugacy_classes().iter().map(Vec::len).sum();
        assert_eq!(total, lat.len(), "{name}");
        for h in lat.subgroups() {
            let class: Vec<_> = lat.conjugates(h).collect();
            assert_eq!(class.len(), lat.normalizer(h).index(), "{name}");
            assert!(class.iter().all(|c| c.size() == h.size()));
        }
    }
}
