mod common;

use common::*;
use hc_lab_core::iso::{find_isomorphism, is_isomorphic};
use hc_lab_core::morphism::{direct_product, quotient, Morphism};
use hc_lab_core::{Caps, Error, Group};

fn caps() -> Caps {
    Caps::default()
}

#[test]
fn one_by_one_table_is_trivial() {
    let g = Group::from_cayley_table(&[vec![0]], "1").unwrap();
    assert_eq!(g.order(), 1);
    assert!(g.whole().is_trivial());
}

#[test]
fn two_by_two_table_is_c2() {
    let g = Group::from_cayley_table(&[vec![0, 1], vec![1, 0]], "C2").unwrap();
    assert_eq!(g.order(), 2);
    assert_eq!(g.element_order(1), 2);
    assert!(is_isomorphic(&g, &group("C2"), &caps()).unwrap());
}

fn c6_table() -> Vec<Vec<usize>> {
    (0..6).map(|a| (0..6).map(|b| (a + b) % 6).collect()).collect()
}

#[test]
fn corrupted_c6_reports_first_nonassociative_triple() {
    // Swap values across an intercalate so rows and columns stay Latin.
    let mut t = c6_table();
    let (a, b) = (t[1][1], t[1][4]);
    t[1][1] = b;
    t[1][4] = a;
    t[4][1] = a;
    t[4][4] = b;
    let mul = |x: usize, y: usize| t[x][y];
    let mut first = None;
    'scan: for x in 0..6 {
        for y in 0..6 {
            for z in 0..6 {
                if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                    first = Some((x, y, z));
                    break 'scan;
                }
            }
        }
    }
    let (x, y, z) = first.expect("corruption breaks associativity");
    match Group::from_cayley_table(&t, "bad") {
        Err(Error::NotAssociative { a, b, c, .. }) => assert_eq!((a, b, c), (x, y, z)),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn rejects_malformed_tables() {
    assert!(matches!(
        Group::from_cayley_table(&[vec![0, 1], vec![1]], "x"),
        Err(Error::Shape(_))
    ));
    assert!(matches!(
        Group::from_cayley_table(&[vec![0, 2], vec![1, 0]], "x"),
        Err(Error::EntryOutOfRange { .. })
    ));
    assert!(matches!(
        Group::from_cayley_table(&[vec![1, 0], vec![0, 1]], "x"),
        Err(Error::IdentityNotZero { .. })
    ));
    assert!(matches!(
        Group::from_cayley_table(&[vec![0, 1], vec![1, 1]], "x"),
        Err(Error::NotLatinSquare { .. })
    ));
}

#[test]
fn generated_subgroups_in_s4() {
    let g = group("S4");
    assert!(g.generated_subgroup(&[]).is_trivial());
    assert_eq!(gen(&g, &["(1 2 3 4)"]).size(), 4);
    let seed = [el(&g, "(1 2)"), el(&g, "(1 2)(3 4)")];
    let h = g.generated_subgroup(&seed);
    assert_eq!(as_set(&h), naive_closure(&g, &seed));
    assert_eq!(h.size(), 4);
}

#[test]
fn conjugation_examples() {
    let g = group("S4");
    let h = gen(&g, &["(1 2)"]);
    assert_eq!(g.conjugate_subgroup(&h, 0), h);
    let k = g.conjugate_subgroup(&h, el(&g, "(1 3)"));
    assert_eq!(k, gen(&g, &["(2 3)"]));
    let v4 = gen(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
    for x in 0..g.order() {
        assert_eq!(g.conjugate_subgroup(&v4, x), v4);
    }
}

#[test]
fn quotient_examples() {
    let g = group("S4");
    let (q, proj) = quotient(&g, &g.trivial_subgroup()).unwrap();
    assert_eq!(q.order(), 24);
    assert_eq!(proj.map(), (0..24).collect::<Vec<_>>());
    let (q, _) = quotient(&g, &g.whole()).unwrap();
    assert_eq!(q.order(), 1);
    let v4 = gen(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
    let (q, proj) = quotient(&g, &v4).unwrap();
    assert_eq!(q.order(), 6);
    assert!(!q.is_abelian());
    assert!(is_isomorphic(&q, &group("S3"), &caps()).unwrap());
    assert_eq!(proj.kernel(), v4);
    let h = gen(&g, &["(1 2)"]);
    assert_eq!(quotient(&g, &h).unwrap_err(), Error::NotNormal);
}

#[test]
fn direct_product_examples() {
    let b = group("S3");
    let p = direct_product(&group("C1"), &b, &caps()).unwrap();
    assert!(is_isomorphic(&p, &b, &caps()).unwrap());
    let v = direct_product(&group("C2"), &group("C2"), &caps()).unwrap();
    assert!((1..4).all(|x| v.element_order(x) == 2));
    let c6 = direct_product(&group("C2"), &group("C3"), &caps()).unwrap();
    assert!((0..6).any(|x| c6.element_order(x) == 6));
}

#[test]
fn element_order_examples() {
    let c6 = group("C6");
    assert_eq!(c6.element_order(0), 1);
    assert_eq!(c6.element_order(1), 6);
    let q8 = group("Q8");
    let z = q8.centralizer_of_set(0..8);
    let noncentral: Vec<usize> = (0..8).filter(|&x| !z.contains(x)).collect();
    assert_eq!(noncentral.len(), 6);
    assert!(noncentral.iter().all(|&x| q8.element_order(x) == 4));
}

#[test]
fn isomorphism_examples() {
    let s4 = group("S4");
    assert!(is_isomorphic(&s4, &s4, &caps()).unwrap());
    assert!(!is_isomorphic(&group("C4"), &group("EA(2,2)"), &caps()).unwrap());
    assert!(is_isomorphic(&group("SD(3,2,2)"), &group("S3"), &caps()).unwrap());
    assert!(is_isomorphic(&group("prod(C2,C3)"), &group("C6"), &caps()).unwrap());
    assert!(!is_isomorphic(&group("D8"), &group("Q8"), &caps()).unwrap());
    assert!(is_isomorphic(&group("Dic3"), &group("SD(3,4,2)"), &caps()).unwrap());
}

#[test]
fn found_isomorphisms_are_bijective_homomorphisms() {
    let pairs = [("S3", "SD(3,2,2)"), ("prod(C4,C2)", "prod(C2,C4)"), ("prod(C2,C3)", "C6"), ("A4", "A4")];
    for (a, b) in pairs {
        let (ga, gb) = (group(a), group(b));
        let m = find_isomorphism(&ga, &gb, &caps()).unwrap().expect(a);
        assert!(Morphism::new(ga.clone(), gb.clone(), m.map()).is_ok());
        assert!(m.is_injective());
    }
}

#[test]
fn isomorphism_respects_cap() {
    let small = Caps {
        isomorphism: 10,
        ..Caps::default()
    };
    assert!(matches!(
        is_isomorphic(&group("S4"), &group("S4"), &small),
        Err(Error::OrderCapExceeded { .. })
    ));
}

#[test]
fn corpus_tables_are_latin_and_associative() {
    for (name, g) in corpus() {
        let n = g.order();
        for a in 0..n {
            let mut row: Vec<usize> = (0..n).map(|b| g.mul(a, b)).collect();
            let mut col: Vec<usize> = (0..n).map(|b| g.mul(b, a)).collect();
            row.sort_unstable();
            col.sort_unstable();
            assert_eq!(row, (0..n).collect::<Vec<_>>(), "{name}");
            assert_eq!(col, (0..n).collect::<Vec<_>>(), "{name}");
        }
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                for c in 0..n {
                    assert_eq!(g.mul(ab, c), g.mul(a, g.mul(b, c)), "{name}");
                }
            }
        }
    }
}

#[test]
fn conjugates_have_equal_size_and_orders_divide() {
    for (name, g) in corpus() {
        let n = g.order();
        for x in 0..n {
            assert_eq!(n % g.element_order(x), 0, "{name}");
            let h = g.generated_subgroup(&[x]);
            assert_eq!(g.generated_subgroup(&h.members_vec()), h, "{name}");
            for c in 0..n {
                assert_eq!(g.conjugate_subgroup(&h, c).size(), h.size(), "{name}");
            }
        }
    }
}

#[test]
fn projections_are_homomorphisms() {
    for (name, g) in corpus() {
        let lat = hc_lab_core::SubgroupLattice::new(&g).unwrap();
        for n in lat.normal_subgroups() {
            let (q, proj) = quotient(&g, n).unwrap();
            assert_eq!(q.order() * n.size(), g.order(), "{name}");
            assert!(Morphism::new(g.clone(), q.clone(), proj.map()).is_ok(), "{name}");
        }
    }
}
