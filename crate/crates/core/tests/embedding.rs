mod common;

use common::*;
use hc_lab_core::embedding::{self, Predicate};
use hc_lab_core::{classes, Group, HcRule, Obstruction, Subgroup, SubgroupLattice};

fn lattice(spec: &str) -> SubgroupLattice {
    SubgroupLattice::new(&group(spec)).unwrap()
}

#[test]
fn h_subgroup_examples() {
    let lat = lattice("S4");
    for n in lat.normal_subgroups() {
        assert!(embedding::is_h_subgroup(&lat, n).holds);
    }
    for p in lat.sylow_subgroups(2) {
        assert!(embedding::is_h_subgroup(&lat, p).holds);
    }
    let lat = lattice("A4");
    let g = lat.group();
    let h = gen(g, &["(1 2)(3 4)"]);
    let v = embedding::is_h_subgroup(&lat, &h);
    assert!(!v.holds);
    match v.counterexample {
        Some(Obstruction::Escapes { conjugator, element }) => {
            assert!(g.conjugate_subgroup(&h, conjugator).contains(element));
            assert!(lat.normalizer(&h).contains(element));
            assert!(!h.contains(element));
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(lat.normalizer(&h).size(), 4);
}

#[test]
fn hc_examples() {
    let lat = lattice("S4");
    let g = lat.group();
    let d8 = lat.sylow_subgroup(2);
    let v = embedding::is_hc_subgroup(&lat, d8);
    assert!(v.holds);
    assert!(v.witness.unwrap().is_whole());

    let t = gen(g, &["(1 2)"]);
    let v = embedding::is_hc_subgroup(&lat, &t);
    assert!(v.holds);
    let w = v.witness.unwrap();
    assert_eq!(w.size(), 12);
    assert!(!embedding::is_h_subgroup(&lat, &t).holds);

    let lat = lattice("A4");
    let h = gen(lat.group(), &["(1 2)(3 4)"]);
    let v = embedding::is_hc_subgroup(&lat, &h);
    assert!(!v.holds);
    let orders: Vec<usize> = v.refutation.iter().map(|(t, _)| t.size()).collect();
    assert_eq!(orders, vec![12, 4, 1]);
    assert!(matches!(v.counterexample, Some(Obstruction::Escapes { .. })));
}

#[test]
fn c_normal_examples() {
    let lat = lattice("S4");
    let v4 = lat.normal_subgroups().find(|n| n.size() == 4).unwrap();
    let v = embedding::is_c_normal(&lat, v4);
    assert!(v.holds && v.witness.unwrap().is_whole());
    let t = gen(lat.group(), &["(1 2)"]);
    let v = embedding::is_c_normal(&lat, &t);
    assert!(v.holds);
    assert_eq!(v.witness.unwrap().size(), 12);
    let q8 = lattice("Q8");
    assert!(q8.subgroups().iter().all(|h| embedding::is_c_normal(&q8, h).holds));
}

#[test]
fn weakly_h_examples() {
    let lat = lattice("S4");
    for n in lat.normal_subgroups() {
        let v = embedding::is_weakly_h_subgroup(&lat, n);
        assert!(v.holds && v.witness.unwrap().is_whole());
    }
    let t = gen(lat.group(), &["(1 2)"]);
    let v = embedding::is_weakly_h_subgroup(&lat, &t);
    assert!(v.holds);
    assert_eq!(v.witness.unwrap().size(), 12);
}

#[test]
fn quasinormal_examples() {
    let lat = lattice("S3");
    let g = lat.group();
    let t = gen(g, &["(1 2)"]);
    let v = embedding::is_quasinormal(&lat, &t);
    assert!(!v.holds);
    match v.counterexample {
        Some(Obstruction::NotPermutable { partner, element }) => {
            assert_eq!(partner.size(), 2);
            assert!(g.product_set(&t, &partner).contains(element));
            assert!(!g.product_set(&partner, &t).contains(element));
        }
        other => panic!("{other:?}"),
    }
    let q8 = lattice("Q8");
    assert!(q8.subgroups().iter().all(|h| embedding::is_quasinormal(&q8, h).holds));
    let s4 = lattice("S4");
    let d8 = s4.sylow_subgroup(2);
    let v4 = s4.normal_subgroups().find(|n| n.size() == 4).unwrap();
    assert!(embedding::is_quasinormal_in(&s4, d8, v4).holds);
}

#[test]
fn subnormal_examples() {
    for spec in ["D8", "Q8", "prod(C4,C2)", "C12"] {
        let lat = lattice(spec);
        assert!(lat.subgroups().iter().all(|h| embedding::is_subnormal(&lat, h)), "{spec}");
    }
    let lat = lattice("S4");
    let g = lat.group();
    let t = gen(g, &["(1 2)"]);
    assert!(!embedding::is_subnormal(&lat, &t));
    let chain = embedding::subnormal_chain(g, lat.whole(), &t);
    assert!(chain.last().unwrap().is_whole());
    let double = gen(g, &["(1 2)(3 4)"]);
    assert!(embedding::is_subnormal(&lat, &double));
}

fn verdict(lat: &SubgroupLattice, k: &Subgroup, h: &Subgroup, p: Predicate) -> hc_lab_core::EmbeddingVerdict {
    match p {
        Predicate::H => embedding::is_h_subgroup_in(lat, k, h),
        Predicate::Hc => embedding::is_hc_subgroup_in(lat, k, h, HcRule::Standard),
        Predicate::CNormal => embedding::is_c_normal_in(lat, k, h),
        Predicate::WeaklyH => embedding::is_weakly_h_subgroup_in(lat, k, h),
        Predicate::Quasinormal => embedding::is_quasinormal_in(lat, k, h),
    }
}

const ALL: [Predicate; 5] = [
    Predicate::H,
    Predicate::Hc,
    Predicate::CNormal,
    Predicate::WeaklyH,
    Predicate::Quasinormal,
];

#[test]
fn every_verdict_replays_on_the_corpus() {
    let (mut count, mut expected) = (0, 0);
    for (name, g) in corpus() {
        let lat = SubgroupLattice::new(&g).unwrap();
        expected += ALL.len() * lat.len();
        for h in lat.subgroups() {
            for p in ALL {
                let v = verdict(&lat, lat.whole(), h, p);
                assert!(embedding::replay(&g, &g.whole(), h, p, &v), "{name} {h:?} {p:?}");
                count += 1;
            }
        }
    }
    assert_eq!(count, expected);
}

#[test]
fn relative_verdicts_replay() {
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 24) {
        let lat = SubgroupLattice::new(&g).unwrap();
        for k in lat.subgroups() {
            for h in lat.subgroups_of(k) {
                for p in ALL {
                    let v = verdict(&lat, k, h, p);
                    assert!(embedding::replay(&g, k, h, p, &v), "{name} K={k:?} H={h:?} {p:?}");
                }
            }
        }
    }
}

#[test]
fn tampered_verdicts_do_not_replay() {
    let lat = lattice("S4");
    let g = lat.group();
    let t = gen(g, &["(1 2)"]);
    let mut v = embedding::is_hc_subgroup(&lat, &t);
    v.witness = Some(g.whole());
    assert!(!embedding::replay(g, &g.whole(), &t, Predicate::Hc, &v));
    let mut v = embedding::is_h_subgroup(&lat, &t);
    v.holds = true;
    v.counterexample = None;
    assert!(!embedding::replay(g, &g.whole(), &t, Predicate::H, &v));
    let mut v = embedding::is_hc_subgroup(&lattice("A4"), &gen(&group("A4"), &["(1 2)(3 4)"]));
    v.refutation.pop();
    let a4 = group("A4");
    assert!(!embedding::replay(&a4, &a4.whole(), &gen(&a4, &["(1 2)(3 4)"]), Predicate::Hc, &v));
}

#[test]
fn raw_enumerators_agree_with_lattice() {
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 48) {
        let lat = SubgroupLattice::new(&g).unwrap();
        let mut raw = embedding::enumerate_subgroups_raw(&g, &g.whole());
        raw.sort();
        assert_eq!(raw, lat.subgroups(), "{name}");
        let mut raw_normal = embedding::normal_subgroups_raw(&g, &g.whole());
        raw_normal.sort();
        let normal: Vec<Subgroup> = lat.normal_subgroups().cloned().collect();
        assert_eq!(raw_normal, normal, "{name}");
    }
}

/// 𝓗 straight from the definition, with normalizers found by scanning.
fn h_by_definition(g: &Group, h: &Subgroup) -> bool {
    let n = normalizer_scan(g, h);
    (0..g.order()).all(|x| {
        h.members()
            .map(|y| g.mul(g.mul(g.inv(x), y), x))
            .all(|c| !n.contains(&c) || h.contains(c))
    })
}

#[test]
fn mutant_rules_collapse_to_known_properties() {
    for (name, g) in corpus() {
        let lat = SubgroupLattice::new(&g).unwrap();
        for h in lat.subgroups() {
            let is_h = embedding::is_h_subgroup(&lat, h).holds;
            assert_eq!(is_h, h_by_definition(&g, h), "{name} {h:?}");
            let without = embedding::is_hc_subgroup_in(&lat, lat.whole(), h, HcRule::WithoutNormalizer).holds;
            let ambient = embedding::is_hc_subgroup_in(&lat, lat.whole(), h, HcRule::AmbientNormalizer).holds;
            assert_eq!(without, lat.is_normal(h), "{name} {h:?}");
            assert_eq!(ambient, is_h, "{name} {h:?}");
        }
    }
}

#[test]
fn hierarchy_on_corpus() {
    for (name, g) in corpus() {
        let lat = SubgroupLattice::new(&g).unwrap();
        for h in lat.subgroups() {
            let is_h = embedding::is_h_subgroup(&lat, h).holds;
            let sylow = hc_lab_core::arith::prime_of_power(h.size())
                .is_some_and(|p| !h.is_trivial() && g.p_part(p) == h.size());
            if lat.is_normal(h) || sylow || lat.is_self_normalizing(h) {
                assert!(is_h, "{name} {h:?}");
            }
            let hc = embedding::is_hc_subgroup(&lat, h);
            if is_h {
                assert!(hc.holds && hc.witness.as_ref().unwrap().is_whole(), "{name} {h:?}");
            }
            if embedding::is_weakly_h_subgroup(&lat, h).holds {
                assert!(hc.holds, "{name} {h:?}");
            }
            if lat.is_normal(h) {
                assert!(embedding::is_c_normal(&lat, h).holds);
                assert!(embedding::is_quasinormal(&lat, h).holds);
            }
            if classes::is_nilpotent(&g) {
                assert!(embedding::is_subnormal(&lat, h));
            }
        }
    }
}
