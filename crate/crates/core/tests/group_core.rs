use sgl::automorphism::automorphism_group;
use sgl::constructors::{asl, cyclic, dihedral, gammal, quaternion8, symmetric};
use sgl::group::{direct_product, isomorphic, Elem, FiniteGroup, Subgroup};
use sgl::numtheory::p_adic_valuation;

fn c(n: usize) -> FiniteGroup {
    cyclic(n).unwrap()
}

fn brute_center_order(g: &FiniteGroup) -> usize {
    g.elements()
        .filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x)))
        .count()
}

#[test]
fn closure_examples() {
    let c6 = c(6);
    assert_eq!(c6.closure(&[]).order(), 1);
    assert_eq!(c6.closure(&[2]).order(), 3);
    let s3 = symmetric(3).unwrap();
    assert_eq!(s3.label(1), "132");
    assert_eq!(s3.label(3), "231");
    assert_eq!(s3.closure(&[1, 3]).order(), 6);
}

#[test]
fn commutator_examples() {
    let c6 = c(6);
    assert!(c6.elements().all(|a| c6.elements().all(|b| c6.commutator(a, b) == 0)));
    let s3 = symmetric(3).unwrap();
    let k = s3.commutator(1, 3);
    assert_ne!(k, s3.identity());
    assert_eq!(s3.element_order(k), 3);
    // [a, b] = a b a^-1 b^-1
    assert_eq!(k, s3.mul(s3.mul(1, 3), s3.mul(s3.inv(1), s3.inv(3))));
    assert!(s3.elements().all(|a| s3.commutator(a, a) == s3.identity()));
}

#[test]
fn centers_against_brute_force() {
    let d4 = dihedral(4).unwrap();
    assert_eq!(d4.center().order(), 2);
    assert_eq!(asl(8).unwrap().group.center().order(), 1);
    for g in [d4, quaternion8().unwrap(), symmetric(4).unwrap(), gammal(9).unwrap().group] {
        assert_eq!(g.center().order(), brute_center_order(&g));
        assert_eq!(g.centralizer(&[g.identity()]).order(), g.order());
        let all: Vec<Elem> = g.elements().collect();
        assert_eq!(g.centralizer(&all), g.center());
    }
}

#[test]
fn derived_subgroup_examples() {
    assert_eq!(c(12).derived_subgroup().order(), 1);
    assert_eq!(symmetric(3).unwrap().derived_subgroup().order(), 3);
    for (q, p) in [(3u64, 3u64), (4, 2), (5, 5), (7, 7), (8, 2), (9, 3), (16, 2)] {
        let k = asl(q).unwrap().group;
        let d = k.derived_subgroup();
        assert_eq!(d.order() as u64, q * (q - 1) / (p - 1), "q = {q}");
        assert!(k.is_normal(&d));
    }
}

#[test]
fn upper_central_series_examples() {
    let orders = |g: &FiniteGroup| g.upper_central_series().iter().map(Subgroup::order).collect::<Vec<_>>();
    assert_eq!(orders(&c(10)), [1, 10]);
    assert_eq!(orders(&dihedral(4).unwrap()), [1, 2, 8]);
    assert_eq!(orders(&symmetric(3).unwrap()), [1]);
    assert_eq!(c(10).is_nilpotent(), (true, Some(1)));
    assert_eq!(dihedral(4).unwrap().is_nilpotent(), (true, Some(2)));
    assert_eq!(symmetric(3).unwrap().is_nilpotent(), (false, None));
    assert_eq!(dihedral(8).unwrap().is_nilpotent(), (true, Some(3)));
}

#[test]
fn quotient_examples() {
    let d4 = dihedral(4).unwrap();
    let (q, proj) = d4.quotient(&d4.center()).unwrap();
    let v4 = direct_product(&c(2), &c(2)).unwrap().group;
    assert!(isomorphic(&q, &v4).is_some());
    assert!(proj.is_homomorphism(&d4, &q));
    assert_eq!(proj.kernel(&d4, &q), d4.center());
    let (same, _) = d4.quotient(&Subgroup::trivial(&d4)).unwrap();
    assert!(isomorphic(&same, &d4).is_some());
    let k = asl(9).unwrap();
    let (kt, _) = k.group.quotient(&k.translations()).unwrap();
    assert!(isomorphic(&kt, &gammal(9).unwrap().group).is_some());
    let s3 = symmetric(3).unwrap();
    assert!(s3.quotient(&s3.closure(&[1])).is_err());
}

#[test]
fn direct_product_examples() {
    let k8 = asl(8).unwrap().group;
    let dp = direct_product(&c(2), &k8).unwrap();
    assert_eq!(dp.group.order(), 336);
    assert!(dp.left_projection().is_homomorphism(&dp.group, &c(2)));
    assert!(dp.right_embedding(0).is_homomorphism(&k8, &dp.group));
    let with_trivial = direct_product(&k8, &FiniteGroup::trivial()).unwrap().group;
    assert!(isomorphic(&with_trivial, &k8).is_some());
    assert!(isomorphic(&direct_product(&c(2), &c(3)).unwrap().group, &c(6)).is_some());
    assert!(direct_product(&k8, &k8).is_err());
}

#[test]
fn sylow_examples() {
    let s3 = symmetric(3).unwrap();
    assert_eq!(s3.sylow_subgroup(3).order(), 3);
    let k8 = asl(8).unwrap().group;
    assert_eq!(s3.sylow_subgroup(5).order(), 1);
    for p in [2u64, 3, 7] {
        let s = k8.sylow_subgroup(p);
        assert_eq!(s.order() as u64, p.pow(p_adic_valuation(168, p)));
    }
    assert_eq!(k8.sylow_subgroup(2).order(), 8);
    let g = direct_product(&dihedral(4).unwrap(), &symmetric(4).unwrap()).unwrap().group;
    assert_eq!(g.sylow_subgroup(2).order(), 64);
    assert_eq!(g.sylow_subgroup(3).order(), 3);
}

#[test]
fn valuations() {
    assert_eq!(p_adic_valuation(168, 2), 3);
    assert_eq!(p_adic_valuation(1, 7), 0);
    assert_eq!(p_adic_valuation(9, 3), 2);
}

#[test]
fn abelian_invariants_both_routes() {
    let c2c4 = direct_product(&c(2), &c(4)).unwrap().group;
    assert_eq!(c(6).abelian_invariants().unwrap().factors, [6]);
    assert_eq!(c2c4.abelian_invariants().unwrap().factors, [2, 4]);
    let k9 = asl(9).unwrap().group;
    let (ab, _) = k9.quotient(&k9.derived_subgroup()).unwrap();
    assert_eq!(ab.abelian_invariants().unwrap().factors, [2, 2]);
    assert!(symmetric(3).unwrap().abelian_invariants().is_err());
    // the greedy decomposition gives the same group
    for g in [c2c4, c(12), ab, direct_product(&c(6), &c(10)).unwrap().group] {
        let basis = g.cyclic_decomposition().unwrap();
        let mut orders = basis.orders.clone();
        orders.sort();
        assert_eq!(
            sgl::numtheory::invariant_factors(&orders),
            g.abelian_invariants().unwrap().factors
        );
        assert_eq!(orders.iter().product::<u64>(), g.order() as u64);
    }
}

#[test]
fn isomorphism_examples() {
    let c2c3 = direct_product(&c(2), &c(3)).unwrap().group;
    let phi = isomorphic(&c(6), &c2c3).unwrap();
    assert!(phi.is_homomorphism(&c(6), &c2c3) && phi.is_bijective(&c2c3));
    let v4 = direct_product(&c(2), &c(2)).unwrap().group;
    assert!(isomorphic(&c(4), &v4).is_none());
    assert!(isomorphic(&dihedral(4).unwrap(), &quaternion8().unwrap()).is_none());
    assert!(isomorphic(&symmetric(4).unwrap(), &asl(4).unwrap().group).is_some());
}

#[test]
fn isomorphism_is_symmetric() {
    let groups = [
        dihedral(6).unwrap(),
        direct_product(&c(2), &symmetric(3).unwrap()).unwrap().group,
        c(12),
        direct_product(&c(2), &c(6)).unwrap().group,
        asl(4).unwrap().group,
        symmetric(4).unwrap(),
    ];
    for a in &groups {
        for b in &groups {
            assert_eq!(isomorphic(a, b).is_some(), isomorphic(b, a).is_some());
        }
    }
}

#[test]
fn generating_set_examples() {
    assert_eq!(c(9).generating_set().len(), 1);
    assert_eq!(symmetric(3).unwrap().generating_set().len(), 2);
    let g = direct_product(&dihedral(4).unwrap(), &asl(8).unwrap().group).unwrap().group;
    assert!(g.generating_set().len() <= 4);
    assert_eq!(g.closure(g.generating_set()).order(), g.order());
}

#[test]
fn audits() {
    asl(16).unwrap().group.audit(100_000).unwrap();
    direct_product(&dihedral(4).unwrap(), &asl(8).unwrap().group)
        .unwrap()
        .group
        .audit(100_000)
        .unwrap();
    let g = c(3);
    assert_eq!(g.element_order(g.identity()), 1);
    assert!(g.elements().all(|x| g.mul(x, g.inv(x)) == g.identity() && g.mul(g.inv(x), x) == g.identity()));
}

#[test]
fn bad_tables_rejected() {
    // not a Latin square
    assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 1], 0, None).is_err());
    // wrong identity
    assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 0], 1, None).is_err());
    assert!(FiniteGroup::from_table(0, vec![], 0, None).is_err());
    assert!(Subgroup::new(&symmetric(3).unwrap(), vec![0, 1, 3]).is_err());
}

#[test]
fn upper_central_terms_are_fixed_by_automorphisms() {
    for g in [
        dihedral(4).unwrap(),
        direct_product(&dihedral(4).unwrap(), &symmetric(3).unwrap()).unwrap().group,
        dihedral(8).unwrap(),
    ] {
        let aut = automorphism_group(&g).unwrap();
        for z in g.upper_central_series() {
            assert!(aut.fixes(&z));
        }
    }
}

#[test]
fn normal_subgroups_of_s4() {
    let s4 = symmetric(4).unwrap();
    let orders: Vec<usize> = s4.normal_subgroups().iter().map(Subgroup::order).collect();
    assert_eq!(orders, [1, 4, 12, 24]);
    let d4 = dihedral(4).unwrap();
    // 1, center, three of order 4, whole group
    assert_eq!(d4.normal_subgroups().len(), 6);
}
