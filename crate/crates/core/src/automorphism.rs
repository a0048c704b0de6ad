//! Automorphism groups and the structures built from them.
//!
//! Automorphisms are found by generator-image backtracking: the images of a
//! fixed generating sequence are chosen among elements of matching order and
//! conjugacy-class size, and every partial assignment is extended across the
//! group and pruned at the first inconsistency. An automorphism group is
//! stored as the sorted list of full element maps together with its
//! composition table, `(a * b)(x) = a(b(x))`.

use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;

use serde::Serialize;

use crate::constructors::semidirect;
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::group::search::{class_preserving_candidates, is_isomorphism_on_generators, GenPlan, HomSearch};
use crate::group::{direct_product, isomorphic_with, AbelianInvariants, Elem, FiniteGroup, Homomorphism, Subgroup, MAX_ORDER};
use crate::numtheory::gcd;

#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    gens: Vec<Elem>,
    /// images of `gens`, sorted; `keys[i]` determines `maps[i]`
    keys: Vec<Vec<Elem>>,
    maps: Vec<Vec<Elem>>,
    pub as_group: FiniteGroup,
}

impl AutomorphismGroup {
    /// Builds the group from a set of automorphisms closed under composition.
    fn from_maps(base: &FiniteGroup, mut maps: Vec<Vec<Elem>>, exec: Execution) -> Result<Self> {
        if maps.len() > MAX_ORDER {
            return Err(Error::capacity("automorphism group order", maps.len() as u64, MAX_ORDER as u64));
        }
        let gens = base.generating_set().to_vec();
        let key = |m: &Vec<Elem>| gens.iter().map(|&g| m[g as usize]).collect::<Vec<_>>();
        maps.sort_by_cached_key(key);
        maps.dedup();
        let keys: Vec<Vec<Elem>> = maps.iter().map(key).collect();
        let find = |k: &[Elem]| keys.binary_search_by(|p| p.as_slice().cmp(k)).ok();
        let identity = find(&gens).expect("identity map missing") as Elem;
        let indices: Vec<usize> = (0..maps.len()).collect();
        let rows = exec::map_collect(exec, &indices, |&a| {
            let mut buf = vec![0; gens.len()];
            keys.iter()
                .map(|kb| {
                    for (slot, &y) in buf.iter_mut().zip(kb) {
                        *slot = maps[a][y as usize];
                    }
                    find(&buf).map(|i| i as Elem)
                })
                .collect::<Option<Vec<Elem>>>()
        });
        let mut table = Vec::with_capacity(maps.len() * maps.len());
        for row in rows {
            table.extend(row.ok_or_else(|| Error::invalid("automorphisms are not closed under composition"))?);
        }
        let as_group = FiniteGroup::from_table(maps.len(), table, identity, None)?;
        Ok(AutomorphismGroup {
            gens,
            keys,
            maps,
            as_group,
        })
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    /// The automorphism with index `i` in [`AutomorphismGroup::as_group`].
    pub fn automorphism(&self, i: Elem) -> Homomorphism {
        Homomorphism {
            image: self.maps[i as usize].clone(),
        }
    }

    pub fn maps(&self) -> &[Vec<Elem>] {
        &self.maps
    }

    /// Index of a full element map, if it is one of the automorphisms.
    pub fn index_of(&self, map: &[Elem]) -> Option<Elem> {
        let key: Vec<Elem> = self.gens.iter().map(|&g| map[g as usize]).collect();
        let i = self.keys.binary_search(&key).ok()?;
        (self.maps[i] == map).then_some(i as Elem)
    }

    /// Whether every automorphism maps `s` onto itself.
    pub fn fixes(&self, s: &Subgroup) -> bool {
        self.maps.iter().all(|m| s.members().iter().all(|&x| s.contains(m[x as usize])))
    }

    /// The inner automorphisms as a subgroup of this group.
    pub fn inner_subgroup(&self, base: &FiniteGroup) -> Subgroup {
        let members = base
            .elements()
            .map(|g| self.index_of(&conjugation(base, g)).expect("inner automorphism missing"))
            .collect();
        Subgroup::from_members(self.order(), members)
    }
}

/// The map `x -> g x g^-1`.
pub fn conjugation(g: &FiniteGroup, x: Elem) -> Vec<Elem> {
    g.elements().map(|y| g.conj(x, y)).collect()
}

fn aut_search<'a>(g: &'a FiniteGroup, plan: &'a GenPlan) -> HomSearch<'a> {
    HomSearch {
        src: g,
        dst: g,
        plan,
        candidates: class_preserving_candidates(g, g, &plan.gens),
        injective: true,
    }
}

pub fn automorphism_group(g: &FiniteGroup) -> Result<AutomorphismGroup> {
    automorphism_group_with(g, Execution::default())
}

pub fn automorphism_group_with(g: &FiniteGroup, exec: Execution) -> Result<AutomorphismGroup> {
    let plan = GenPlan::new(g, g.generating_set());
    let maps = aut_search(g, &plan)
        .collect_up_to(exec, MAX_ORDER)
        .ok_or_else(|| Error::capacity("automorphism group order", MAX_ORDER as u64 + 1, MAX_ORDER as u64))?;
    for m in &maps {
        assert!(
            is_isomorphism_on_generators(g, g, &plan.gens, m),
            "search produced a map that is not an automorphism"
        );
    }
    AutomorphismGroup::from_maps(g, maps, exec)
}

/// `|Aut(G)|` without building the composition table.
pub fn automorphism_count(g: &FiniteGroup) -> u64 {
    automorphism_count_with(g, Execution::default())
}

pub fn automorphism_count_with(g: &FiniteGroup, exec: Execution) -> u64 {
    let plan = GenPlan::new(g, g.generating_set());
    aut_search(g, &plan).count(exec)
}

/// Result of an early-exit commutativity test on `Aut(G)`.
#[derive(Debug, Clone)]
pub enum AbelianAut {
    Abelian(Box<AutomorphismGroup>),
    /// Two automorphisms that do not commute.
    NonAbelian(Homomorphism, Homomorphism),
}

/// Enumerates automorphisms and stops at the first pair that does not commute,
/// so groups with huge non-abelian automorphism groups are rejected quickly.
pub fn abelian_automorphism_group(g: &FiniteGroup) -> Result<AbelianAut> {
    let plan = GenPlan::new(g, g.generating_set());
    let gens = &plan.gens;
    let mut found: Vec<Vec<Elem>> = Vec::new();
    let mut witness = None;
    let mut overflow = false;
    aut_search(g, &plan).for_each(|st| {
        let a = &st.phi;
        let clash = found.iter().find(|b| {
            gens.iter()
                .any(|&x| a[b[x as usize] as usize] != b[a[x as usize] as usize])
        });
        if let Some(b) = clash {
            witness = Some((b.clone(), a.clone()));
            return ControlFlow::Break(());
        }
        if found.len() == MAX_ORDER {
            overflow = true;
            return ControlFlow::Break(());
        }
        found.push(a.clone());
        ControlFlow::Continue(())
    });
    if let Some((a, b)) = witness {
        return Ok(AbelianAut::NonAbelian(Homomorphism { image: a }, Homomorphism { image: b }));
    }
    if overflow {
        return Err(Error::capacity("automorphism group order", MAX_ORDER as u64 + 1, MAX_ORDER as u64));
    }
    Ok(AbelianAut::Abelian(Box::new(AutomorphismGroup::from_maps(g, found, Execution::Sequential)?)))
}

/// `Inn(G)`, the image of `g -> c_g`.
pub fn inner_automorphism_group(g: &FiniteGroup) -> Result<AutomorphismGroup> {
    let maps = g.elements().map(|x| conjugation(g, x)).collect();
    AutomorphismGroup::from_maps(g, maps, Execution::default())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Completeness {
    pub complete: bool,
    pub center_order: usize,
    /// only computed for centerless groups
    pub aut_order: Option<u64>,
}

/// A group is complete when it is centerless and `|Aut(G)| = |G|`; the
/// conjugation map is then injective, hence bijective.
pub fn is_complete(g: &FiniteGroup) -> Completeness {
    let center_order = g.center().order();
    if center_order != 1 {
        return Completeness {
            complete: false,
            center_order,
            aut_order: None,
        };
    }
    let aut_order = automorphism_count(g);
    Completeness {
        complete: aut_order == g.order() as u64,
        center_order,
        aut_order: Some(aut_order),
    }
}

#[derive(Debug, Clone)]
pub struct Stability {
    pub stable: bool,
    pub aut_order: usize,
    /// true when decided by the completeness shortcut
    pub complete: bool,
    /// an isomorphism `G -> Aut(G).as_group`
    pub witness: Option<Homomorphism>,
}

pub fn is_stable(g: &FiniteGroup) -> Result<Stability> {
    let aut = automorphism_group(g)?;
    Ok(is_stable_given(g, &aut, Execution::default()))
}

/// Decides `G ≅ Aut(G)` from an already computed automorphism group.
pub fn is_stable_given(g: &FiniteGroup, aut: &AutomorphismGroup, exec: Execution) -> Stability {
    let aut_order = aut.order();
    if aut_order != g.order() {
        return Stability {
            stable: false,
            aut_order,
            complete: false,
            witness: None,
        };
    }
    if g.center().order() == 1 {
        let image = g
            .elements()
            .map(|x| aut.index_of(&conjugation(g, x)).expect("inner automorphism missing"))
            .collect();
        return Stability {
            stable: true,
            aut_order,
            complete: true,
            witness: Some(Homomorphism { image }),
        };
    }
    let witness = isomorphic_with(g, &aut.as_group, exec);
    Stability {
        stable: witness.is_some(),
        aut_order,
        complete: false,
        witness,
    }
}

pub fn is_characteristic(g: &FiniteGroup, s: &Subgroup) -> Result<bool> {
    Ok(automorphism_group(g)?.fixes(s))
}

/// `Hom(A, B)` for abelian `A`, `B`, with pointwise multiplication.
#[derive(Debug, Clone)]
pub struct HomGroup {
    /// basis of `A` the homomorphisms are indexed by
    pub basis: Vec<Elem>,
    pub homs: Vec<Homomorphism>,
    keys: Vec<Vec<Elem>>,
    pub group: FiniteGroup,
}

impl HomGroup {
    pub fn new(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let basis = a.cyclic_decomposition()?;
        let homs = hom_enumerate(a, b)?;
        let keys: Vec<Vec<Elem>> = homs
            .iter()
            .map(|h| basis.generators.iter().map(|&x| h.apply(x)).collect())
            .collect();
        let index: HashMap<&[Elem], Elem> = keys.iter().enumerate().map(|(i, k)| (k.as_slice(), i as Elem)).collect();
        let zero = index[vec![b.identity(); basis.generators.len()].as_slice()];
        let group = FiniteGroup::from_fn(homs.len(), zero, None, |x, y| {
            let k: Vec<Elem> = keys[x as usize]
                .iter()
                .zip(&keys[y as usize])
                .map(|(&u, &v)| b.mul(u, v))
                .collect();
            index[k.as_slice()]
        })?;
        Ok(HomGroup {
            basis: basis.generators,
            homs,
            keys,
            group,
        })
    }

    /// Index of the homomorphism taking the basis to `images`.
    pub fn index_of(&self, images: &[Elem]) -> Option<Elem> {
        self.keys.binary_search_by(|k| k.as_slice().cmp(images)).ok().map(|i| i as Elem)
    }
}

/// `prod_{i,j} gcd(d_i, e_j)` over invariant factors, the size of `Hom(A, B)`.
pub fn hom_count_formula(a: &AbelianInvariants, b: &AbelianInvariants) -> u64 {
    a.factors
        .iter()
        .flat_map(|&d| b.factors.iter().map(move |&e| gcd(d, e)))
        .product()
}

/// Every homomorphism between abelian groups, one for each choice of images
/// of a cyclic basis of `a` among the elements of `b` killed by the basis
/// orders. Sorted by the basis images.
pub fn hom_enumerate(a: &FiniteGroup, b: &FiniteGroup) -> Result<Vec<Homomorphism>> {
    if !b.is_abelian() {
        return Err(Error::invalid("Hom enumeration needs an abelian codomain"));
    }
    let basis = a.cyclic_decomposition()?;
    let choices: Vec<Vec<Elem>> = basis
        .orders
        .iter()
        .map(|&d| b.elements().filter(|&y| d % b.element_order(y) as u64 == 0).collect())
        .collect();
    let total: u64 = choices.iter().map(|c| c.len() as u64).product();
    let expected = hom_count_formula(&a.abelian_invariants()?, &b.abelian_invariants()?);
    assert_eq!(total, expected, "Hom count disagrees with the gcd formula");
    if total > MAX_ORDER as u64 {
        return Err(Error::capacity("Hom group order", total, MAX_ORDER as u64));
    }
    let k = choices.len();
    let mut out = Vec::with_capacity(total as usize);
    let mut pick = vec![0usize; k];
    loop {
        let images: Vec<Elem> = (0..k).map(|i| choices[i][pick[i]]).collect();
        let image = a
            .elements()
            .map(|x| {
                basis.coords[x as usize]
                    .iter()
                    .zip(&images)
                    .fold(b.identity(), |acc, (&c, &y)| b.mul(acc, b.pow(y, c as u64)))
            })
            .collect();
        out.push(Homomorphism { image });
        // odometer, last position fastest so the output is sorted
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// `G^ab = G / G'` with its projection.
pub fn abelianization(g: &FiniteGroup) -> Result<(FiniteGroup, Homomorphism)> {
    g.quotient(&g.derived_subgroup())
}

/// `(Hom(K^ab, Z(N)) ⋊ Aut(N)) × K`, with `Aut(N)` acting by post-composition.
///
/// `K` must be complete. Whether `N` and `K` share a direct factor is not
/// checked.
pub fn decomp_group(n: &FiniteGroup, k: &FiniteGroup) -> Result<FiniteGroup> {
    if !is_complete(k).complete {
        return Err(Error::Precondition("K must be complete".into()));
    }
    let (kab, _) = abelianization(k)?;
    let (zn, emb) = n.center().to_group(n);
    let mut pos = vec![Elem::MAX; n.order()];
    for z in zn.elements() {
        pos[emb.apply(z) as usize] = z;
    }
    let homs = HomGroup::new(&kab, &zn)?;
    let aut_n = automorphism_group(n)?;
    let action: Vec<Homomorphism> = aut_n
        .maps()
        .iter()
        .map(|beta| {
            let image = homs
                .keys
                .iter()
                .map(|key| {
                    let moved: Vec<Elem> = key.iter().map(|&z| pos[beta[emb.apply(z) as usize] as usize]).collect();
                    homs.index_of(&moved).expect("post-composition leaves Hom(K^ab, Z(N))")
                })
                .collect();
            Homomorphism { image }
        })
        .collect();
    let left = semidirect(&homs.group, &aut_n.as_group, &action)?;
    Ok(direct_product(&left, k)?.group)
}

/// `|Hom(K^ab, Z(N))| |Hom(N^ab, Z(K))| |Aut(N)| |Aut(K)|`, the order of
/// `Aut(N × K)` when `N` and `K` have no common direct factor.
pub fn bidwell_order(n: &FiniteGroup, k: &FiniteGroup) -> Result<u64> {
    let hom = |a: &FiniteGroup, b: &FiniteGroup| -> Result<u64> {
        let (ab, _) = abelianization(a)?;
        let (z, _) = b.center().to_group(b);
        Ok(hom_count_formula(&ab.abelian_invariants()?, &z.abelian_invariants()?))
    };
    Ok(hom(k, n)? * hom(n, k)? * automorphism_count(n) * automorphism_count(k))
}

/// Checks that `N` is normal and nilpotent in `G`, that `G/N` is centerless
/// and that every conjugation of `G` restricts to an inner automorphism of
/// `N`. The error names the first hypothesis that fails.
pub fn check_extension_hypotheses(g: &FiniteGroup, n: &Subgroup, claim: &str) -> Result<()> {
    let fail = |h: &str| Err(Error::hypothesis(claim, h));
    if !g.is_normal(n) {
        return fail("N is not normal in G");
    }
    let (ng, emb) = n.to_group(g);
    if !ng.is_nilpotent().0 {
        return fail("N is not nilpotent");
    }
    let (quot, proj) = g.quotient(n)?;
    if quot.center().order() != 1 {
        return fail("G/N is not centerless");
    }
    let ngens: Vec<Elem> = ng.generating_set().iter().map(|&x| emb.apply(x)).collect();
    let mut reps = vec![None; quot.order()];
    for x in g.elements() {
        reps[proj.apply(x) as usize].get_or_insert(x);
    }
    for rep in reps.into_iter().flatten() {
        let inner = n
            .members()
            .iter()
            .any(|&m| ngens.iter().all(|&y| g.conj(rep, y) == g.conj(m, y)));
        if !inner {
            return fail("G induces a nontrivial outer action on N");
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct FiberProduct {
    pub group: FiniteGroup,
    pub aut_n_order: usize,
    pub aut_c_order: usize,
}

/// `Aut(N) ×_{Aut(Z(G))} Aut(C_G(N))`: pairs of automorphisms that agree on
/// `Z(G)`, multiplied componentwise.
pub fn fiber_product_aut(g: &FiniteGroup, n: &Subgroup) -> Result<FiberProduct> {
    check_extension_hypotheses(g, n, "fiberprod")?;
    let c = g.centralizer(n.members());
    let z = g.center();
    if !z.is_subset_of(n) {
        return Err(Error::hypothesis("fiberprod", "Z(G) is not contained in N"));
    }
    let restrict = |s: &Subgroup| -> Result<(AutomorphismGroup, Vec<Vec<Elem>>)> {
        let (sg, emb) = s.to_group(g);
        let mut pos = vec![Elem::MAX; g.order()];
        for x in sg.elements() {
            pos[emb.apply(x) as usize] = x;
        }
        let aut = automorphism_group(&sg)?;
        let on_z = aut
            .maps()
            .iter()
            .map(|m| z.members().iter().map(|&x| emb.apply(m[pos[x as usize] as usize])).collect())
            .collect();
        Ok((aut, on_z))
    };
    let (aut_n, zn) = restrict(n)?;
    let (aut_c, zc) = restrict(&c)?;
    let mut by_restriction: BTreeMap<&[Elem], Vec<Elem>> = BTreeMap::new();
    for (j, r) in zc.iter().enumerate() {
        by_restriction.entry(r.as_slice()).or_default().push(j as Elem);
    }
    let mut pairs = Vec::new();
    for (i, r) in zn.iter().enumerate() {
        if let Some(js) = by_restriction.get(r.as_slice()) {
            pairs.extend(js.iter().map(|&j| (i as Elem, j)));
        }
    }
    if pairs.len() > MAX_ORDER {
        return Err(Error::capacity("fiber product order", pairs.len() as u64, MAX_ORDER as u64));
    }
    let index: HashMap<(Elem, Elem), Elem> = pairs.iter().enumerate().map(|(i, &p)| (p, i as Elem)).collect();
    let (gn, gc) = (&aut_n.as_group, &aut_c.as_group);
    let identity = index[&(gn.identity(), gc.identity())];
    let group = FiniteGroup::from_fn(pairs.len(), identity, None, |x, y| {
        let ((a1, b1), (a2, b2)) = (pairs[x as usize], pairs[y as usize]);
        index[&(gn.mul(a1, a2), gc.mul(b1, b2))]
    })?;
    Ok(FiberProduct {
        group,
        aut_n_order: aut_n.order(),
        aut_c_order: aut_c.order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{asl, cyclic, dihedral, quaternion8, symmetric};
    use crate::group::isomorphic;

    /// Brute force over all bijections fixing the identity; tiny groups only.
    fn brute_aut_count(g: &FiniteGroup) -> u64 {
        fn rec(g: &FiniteGroup, phi: &mut Vec<Elem>, used: &mut Vec<bool>, x: usize) -> u64 {
            let n = g.order();
            if x == n {
                let ok = g
                    .elements()
                    .all(|a| g.elements().all(|b| phi[g.mul(a, b) as usize] == g.mul(phi[a as usize], phi[b as usize])));
                return ok as u64;
            }
            if x == g.identity() as usize {
                return rec(g, phi, used, x + 1);
            }
            let mut total = 0;
            for y in 0..n {
                if !used[y] && g.element_order(y as Elem) == g.element_order(x as Elem) {
                    used[y] = true;
                    phi[x] = y as Elem;
                    total += rec(g, phi, used, x + 1);
                    used[y] = false;
                }
            }
            total
        }
        let mut phi = vec![0; g.order()];
        phi[g.identity() as usize] = g.identity();
        let mut used = vec![false; g.order()];
        used[g.identity() as usize] = true;
        rec(g, &mut phi, &mut used, 0)
    }

    #[test]
    fn aut_orders_against_brute_force() {
        let c2 = cyclic(2).unwrap();
        let c4 = cyclic(4).unwrap();
        let groups = [
            cyclic(6).unwrap(),
            cyclic(8).unwrap(),
            dihedral(4).unwrap(),
            quaternion8().unwrap(),
            symmetric(3).unwrap(),
            direct_product(&c2, &c4).unwrap().group,
            direct_product(&c2, &c2).unwrap().group,
        ];
        for g in &groups {
            let aut = automorphism_group(g).unwrap();
            assert_eq!(aut.order() as u64, brute_aut_count(g));
            assert_eq!(automorphism_count(g), aut.order() as u64);
            aut.as_group.audit(0).unwrap();
            for i in aut.as_group.elements() {
                let m = aut.automorphism(i);
                assert!(m.is_homomorphism(g, g) && m.is_bijective(g));
            }
        }
    }

    #[test]
    fn baseline_values() {
        assert_eq!(automorphism_group(&cyclic(6).unwrap()).unwrap().order(), 2);
        let d4 = dihedral(4).unwrap();
        let aut = automorphism_group(&d4).unwrap();
        assert!(isomorphic(&d4, &aut.as_group).is_some());
        assert_eq!(automorphism_group(&quaternion8().unwrap()).unwrap().order(), 24);
        assert_eq!(automorphism_count(&FiniteGroup::trivial()), 1);
    }

    #[test]
    fn inner_automorphisms() {
        for g in [cyclic(5).unwrap(), symmetric(3).unwrap(), dihedral(4).unwrap(), symmetric(4).unwrap()] {
            let inn = inner_automorphism_group(&g).unwrap();
            assert_eq!(inn.order(), g.order() / g.center().order());
            let aut = automorphism_group(&g).unwrap();
            let sub = aut.inner_subgroup(&g);
            assert_eq!(sub.order(), inn.order());
            assert!(aut.as_group.is_normal(&sub));
        }
        assert_eq!(inner_automorphism_group(&symmetric(3).unwrap()).unwrap().order(), 6);
    }

    #[test]
    fn completeness_and_stability() {
        assert!(is_complete(&symmetric(3).unwrap()).complete);
        assert!(!is_complete(&cyclic(2).unwrap()).complete);
        assert!(is_complete(&asl(8).unwrap().group).complete);
        assert!(is_complete(&symmetric(4).unwrap()).complete);
        assert!(is_stable(&dihedral(4).unwrap()).unwrap().stable);
        assert!(!is_stable(&cyclic(3).unwrap()).unwrap().stable);
        assert!(!is_stable(&quaternion8().unwrap()).unwrap().stable);
        let s = is_stable(&symmetric(3).unwrap()).unwrap();
        assert!(s.stable && s.complete);
        let w = s.witness.unwrap();
        let s3 = symmetric(3).unwrap();
        let aut = automorphism_group(&s3).unwrap();
        assert!(w.is_homomorphism(&s3, &aut.as_group) && w.is_bijective(&aut.as_group));
    }

    #[test]
    fn characteristic_subgroups() {
        let k8 = asl(8).unwrap();
        assert!(is_characteristic(&k8.group, &k8.translations()).unwrap());
        assert!(!is_characteristic(&k8.group, &k8.galois()).unwrap());
        let d4 = dihedral(4).unwrap();
        assert!(is_characteristic(&d4, &d4.center()).unwrap());
        let reflection = d4.closure(&[4]);
        assert!(!is_characteristic(&d4, &reflection).unwrap());
    }

    #[test]
    fn hom_counts() {
        let c = |n| cyclic(n).unwrap();
        assert_eq!(hom_enumerate(&c(6), &c(2)).unwrap().len(), 2);
        assert_eq!(hom_enumerate(&c(3), &c(2)).unwrap().len(), 1);
        let c2c4 = direct_product(&c(2), &c(4)).unwrap().group;
        assert_eq!(hom_enumerate(&c2c4, &c(2)).unwrap().len(), 4);
        assert_eq!(hom_enumerate(&c(4), &c2c4).unwrap().len(), 8);
        for h in hom_enumerate(&c2c4, &c2c4).unwrap() {
            assert!(h.is_homomorphism(&c2c4, &c2c4));
        }
        assert!(hom_enumerate(&symmetric(3).unwrap(), &c(2)).is_err());
    }

    #[test]
    fn hom_group_of_c3_into_c6_under_aut_c6() {
        let c3 = cyclic(3).unwrap();
        let c6 = cyclic(6).unwrap();
        let homs = HomGroup::new(&c3, &c6).unwrap();
        assert_eq!(homs.group.order(), 3);
        let aut = automorphism_group(&c6).unwrap();
        let action: Vec<Homomorphism> = aut
            .maps()
            .iter()
            .map(|beta| Homomorphism {
                image: homs
                    .homs
                    .iter()
                    .map(|h| {
                        let key: Vec<Elem> = homs.basis.iter().map(|&x| beta[h.apply(x) as usize]).collect();
                        homs.index_of(&key).unwrap()
                    })
                    .collect(),
            })
            .collect();
        let g = semidirect(&homs.group, &aut.as_group, &action).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn decomp_and_bidwell_small() {
        let c2 = cyclic(2).unwrap();
        let s3 = symmetric(3).unwrap();
        let d = decomp_group(&c2, &s3).unwrap();
        assert_eq!(d.order(), 12);
        assert_eq!(bidwell_order(&c2, &s3).unwrap(), 12);
        let prod = direct_product(&c2, &s3).unwrap().group;
        let aut = automorphism_group(&prod).unwrap();
        assert!(isomorphic(&aut.as_group, &d).is_some());
        let c2c4 = direct_product(&c2, &cyclic(4).unwrap()).unwrap().group;
        assert_eq!(bidwell_order(&c2c4, &FiniteGroup::trivial()).unwrap(), 8);
        assert!(matches!(decomp_group(&c2, &cyclic(3).unwrap()), Err(Error::Precondition(_))));
    }

    #[test]
    fn fiber_product_on_d4_times_s3() {
        let dp = direct_product(&dihedral(4).unwrap(), &symmetric(3).unwrap()).unwrap();
        let fp = fiber_product_aut(&dp.group, &dp.left_factor()).unwrap();
        assert_eq!((fp.aut_n_order, fp.aut_c_order), (8, 12));
        assert_eq!(fp.group.order(), 96);
        fp.group.audit(0).unwrap();
    }

    #[test]
    fn extension_hypotheses() {
        let s3 = symmetric(3).unwrap();
        let a3 = s3.derived_subgroup();
        assert!(matches!(
            check_extension_hypotheses(&s3, &a3, "extchar"),
            Err(Error::Hypothesis { .. })
        ));
        let dp = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        assert!(check_extension_hypotheses(&dp.group, &dp.left_factor(), "extchar").is_err());
        let g = cyclic(4).unwrap();
        assert!(check_extension_hypotheses(&g, &Subgroup::whole(&g), "extchar").is_ok());
    }

    #[test]
    fn abelian_aut_early_exit() {
        let c = |n| cyclic(n).unwrap();
        assert!(matches!(abelian_automorphism_group(&c(12)).unwrap(), AbelianAut::Abelian(a) if a.order() == 4));
        let v4 = direct_product(&c(2), &c(2)).unwrap().group;
        match abelian_automorphism_group(&v4).unwrap() {
            AbelianAut::NonAbelian(a, b) => assert_ne!(a.compose(&b).image, b.compose(&a).image),
            AbelianAut::Abelian(_) => panic!("Aut(C2 x C2) is not abelian"),
        }
    }

    #[test]
    fn scheduling_does_not_change_output() {
        let g = direct_product(&cyclic(2).unwrap(), &asl(4).unwrap().group).unwrap().group;
        let a = automorphism_group_with(&g, Execution::Sequential).unwrap();
        let b = automorphism_group_with(&g, Execution::Parallel).unwrap();
        assert_eq!(a.maps(), b.maps());
    }
}
