//! Checkers for stability results about direct products. Each checker
//! verifies the hypotheses of a statement on a concrete instance, then its
//! conclusion, and reports a [`Verdict`] with numeric evidence.
//!
//! A failed hypothesis is an [`Error::Hypothesis`]; parameters outside a
//! statement's domain are an [`Error::Precondition`]. Neither is a failed claim.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::automorphism::{
    abelian_automorphism_group, abelianization, automorphism_count, automorphism_group, bidwell_order,
    check_extension_hypotheses, decomp_group, fiber_product_aut, is_complete, is_stable, is_stable_given,
    AbelianAut,
};
use crate::constructors::{asl, cyclic, dihedral, gammal};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::group::{direct_product, isomorphic, Elem, FiniteGroup, Subgroup, MAX_ORDER};
use crate::numtheory::{factorize, invariant_factors, prime_power};

/// Default order bound for [`sweep_div`].
pub const DIV_BOUND: u64 = 64;
/// Default order bound for [`sweep_noncyclic`].
pub const NONCYCLIC_BOUND: u64 = 128;
/// Default `(p, n)` cases for [`sweep_homocyclic`].
pub const HOMOCYCLIC_CASES: [(u64, u32); 3] = [(2, 1), (2, 2), (3, 1)];
/// Largest `|D_4 x K|` accepted by [`check_nilthm`].
pub const NILTHM_MAX_ORDER: usize = 1344;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub claim_id: String,
    pub pass: bool,
    pub evidence: BTreeMap<String, Value>,
    /// wall-clock milliseconds
    pub elapsed: u64,
}

impl Verdict {
    fn finish(claim_id: &str, start: Instant, pass: bool, mut evidence: BTreeMap<String, Value>) -> Self {
        if !pass {
            evidence.entry("counterexample".into()).or_insert(Value::String("unspecified".into()));
        }
        Verdict {
            claim_id: claim_id.to_string(),
            pass,
            evidence,
            elapsed: start.elapsed().as_millis() as u64,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        writeln!(f, "{}: {} ({} ms)", self.claim_id, status, self.elapsed)?;
        for (k, v) in &self.evidence {
            writeln!(f, "  {k}: {v}")?;
        }
        Ok(())
    }
}

/// Evidence map with a short insertion syntax.
#[derive(Default)]
struct Evidence(BTreeMap<String, Value>);

impl Evidence {
    fn put(&mut self, key: &str, value: impl Serialize) {
        self.0.insert(key.to_string(), serde_json::to_value(value).expect("evidence serializes"));
    }

    /// Records a boolean check and, on the first failure, its name as the counterexample.
    fn check(&mut self, key: &str, ok: bool) -> bool {
        self.put(key, ok);
        if !ok {
            self.0.entry("counterexample".into()).or_insert(Value::String(key.into()));
        }
        ok
    }
}

fn instance_level(ev: &mut Evidence) {
    ev.put("scope", "instance-level");
}

/// Centerlessness, characteristic translation and multiplication subgroups,
/// completeness, the abelianization `C_{p-1} x C_n`, and `K_q' = Ĥ T` for
/// the affine semilinear group `K_q`.
pub fn verify_kq(q: u64) -> Result<Verdict> {
    let start = Instant::now();
    let (p, n) = prime_power(q).ok_or_else(|| Error::Precondition(format!("{q} is not a prime power")))?;
    if q == 2 {
        return Err(Error::Precondition("q = 2 is excluded; the statements require q != 2".into()));
    }
    let k = asl(q)?;
    let g = &k.group;
    let mut ev = Evidence::default();
    ev.put("q", q);
    ev.put("order", g.order());
    let center = g.center().order();
    ev.put("center_order", center);
    let mut pass = ev.check("centerless", center == 1);

    let aut = automorphism_group(g)?;
    ev.put("aut_order", aut.order());
    pass &= ev.check("translations_characteristic", aut.fixes(&k.translations()));
    let gl = gammal(q)?;
    let gl_aut = automorphism_group(&gl.group)?;
    pass &= ev.check("multiplications_characteristic", gl_aut.fixes(&gl.multiplications()));
    let complete = center == 1 && aut.order() == g.order();
    pass &= ev.check("complete", complete);

    let (ab, _) = abelianization(g)?;
    let found = ab.abelian_invariants()?;
    let expected = invariant_factors(&[p - 1, n as u64]);
    ev.put("abelianization", &found.factors);
    ev.put("expected_abelianization", &expected);
    pass &= ev.check("abelianization_matches", found.factors == expected);

    let ht = g.closure(&[k.hhat().members(), k.translations().members()].concat());
    ev.put("derived_order", g.order() / ab.order());
    pass &= ev.check("derived_is_hhat_t", g.derived_subgroup() == ht);
    Ok(Verdict::finish("kq", start, pass, ev.0))
}

fn require_centerless(claim: &str, k: &FiniteGroup) -> Result<()> {
    if k.center().order() != 1 {
        return Err(Error::Precondition(format!("{claim} needs a centerless K")));
    }
    Ok(())
}

/// `C_2 x K` (K centerless) is stable iff K is complete and `K^ab` has a
/// nontrivial cyclic Sylow 2-subgroup. Compares the criterion with a direct
/// computation of `Aut(C_2 x K)`.
pub fn check_abthm(k: &FiniteGroup) -> Result<Verdict> {
    let start = Instant::now();
    require_centerless("abthm", k)?;
    let mut ev = Evidence::default();
    let complete = is_complete(k).complete;
    let (ab, _) = abelianization(k)?;
    let inv = ab.abelian_invariants()?;
    let even_factors = inv.factors.iter().filter(|&&d| d % 2 == 0).count();
    let criterion = complete && even_factors == 1;
    ev.put("k_order", k.order());
    ev.put("k_complete", complete);
    ev.put("k_abelianization", &inv.factors);
    ev.put("criterion", criterion);
    let g = direct_product(&cyclic(2)?, k)?.group;
    let st = is_stable(&g)?;
    ev.put("group_order", g.order());
    ev.put("aut_order", st.aut_order);
    ev.put("direct_stable", st.stable);
    let pass = ev.check("criterion_agrees", criterion == st.stable);
    Ok(Verdict::finish("abthm", start, pass, ev.0))
}

/// `D_4 x K` (K centerless) is stable iff K is complete and `|K^ab|` is odd.
/// Compares the criterion with a direct computation of `Aut(D_4 x K)`.
pub fn check_nilthm(k: &FiniteGroup) -> Result<Verdict> {
    let start = Instant::now();
    require_centerless("nilthm", k)?;
    let order = 8 * k.order();
    if order > NILTHM_MAX_ORDER {
        return Err(Error::capacity("|D_4 x K|", order as u64, NILTHM_MAX_ORDER as u64));
    }
    let mut ev = Evidence::default();
    let complete = is_complete(k).complete;
    let (ab, _) = abelianization(k)?;
    let criterion = complete && ab.order() % 2 == 1;
    ev.put("k_order", k.order());
    ev.put("k_complete", complete);
    ev.put("k_abelianization_order", ab.order());
    ev.put("criterion", criterion);
    let g = direct_product(&dihedral(4)?, k)?.group;
    let st = is_stable(&g)?;
    ev.put("group_order", g.order());
    ev.put("aut_order", st.aut_order);
    ev.put("direct_stable", st.stable);
    let pass = ev.check("criterion_agrees", criterion == st.stable);
    Ok(Verdict::finish("nilthm", start, pass, ev.0))
}

/// With `N` normal nilpotent, `G/N` centerless and trivial outer action:
/// `G = N C_G(N)`, the upper central series of `N` and `G` coincide, and `N`,
/// `C_G(N)` are characteristic.
pub fn check_extchar(g: &FiniteGroup, n: &Subgroup) -> Result<Verdict> {
    let start = Instant::now();
    check_extension_hypotheses(g, n, "extchar")?;
    let mut ev = Evidence::default();
    instance_level(&mut ev);
    let c = g.centralizer(n.members());
    ev.put("n_order", n.order());
    ev.put("centralizer_order", c.order());
    let mut pass = ev.check("product_is_g", g.product_set(n, &c).iter().all(|&b| b));

    let (ng, emb) = n.to_group(g);
    let n_series: Vec<Subgroup> = ng.upper_central_series().iter().map(|s| s.map(g.order(), &emb)).collect();
    let g_series = g.upper_central_series();
    ev.put("upper_central_orders", g_series.iter().map(Subgroup::order).collect::<Vec<_>>());
    ev.put("n_upper_central_orders", n_series.iter().map(Subgroup::order).collect::<Vec<_>>());
    pass &= ev.check("upper_central_series_agree", n_series == g_series);

    let aut = automorphism_group(g)?;
    ev.put("aut_order", aut.order());
    pass &= ev.check("n_characteristic", aut.fixes(n));
    pass &= ev.check("centralizer_characteristic", aut.fixes(&c));
    Ok(Verdict::finish("extchar", start, pass, ev.0))
}

/// Under the hypotheses of [`check_extchar`], `Aut(G)` is isomorphic to the
/// fiber product of `Aut(N)` and `Aut(C_G(N))` over `Aut(Z(G))`.
pub fn check_fiberprod(g: &FiniteGroup, n: &Subgroup) -> Result<Verdict> {
    let start = Instant::now();
    let fp = fiber_product_aut(g, n)?;
    let mut ev = Evidence::default();
    instance_level(&mut ev);
    let aut = automorphism_group(g)?;
    ev.put("aut_n_order", fp.aut_n_order);
    ev.put("aut_centralizer_order", fp.aut_c_order);
    ev.put("fiber_product_order", fp.group.order());
    ev.put("aut_order", aut.order());
    let pass = ev.check("isomorphic", isomorphic(&fp.group, &aut.as_group).is_some());
    Ok(Verdict::finish("fiberprod", start, pass, ev.0))
}

/// Every invariant-factor list `d_1 | ... | d_k` of an abelian group of order `m`.
pub fn abelian_types(m: u64) -> Vec<Vec<u64>> {
    fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut types: Vec<Vec<u64>> = vec![vec![]];
    for (p, e) in factorize(m) {
        let mut next = Vec::new();
        for t in &types {
            for part in partitions(e, e) {
                let mut elems = t.clone();
                elems.extend(part.iter().map(|&k| p.pow(k)));
                next.push(elems);
            }
        }
        types = next;
    }
    let mut out: Vec<Vec<u64>> = types.iter().map(|t| invariant_factors(t)).collect();
    out.sort();
    out
}

/// `C_{d_1} x ... x C_{d_k}`.
pub fn abelian_group(factors: &[u64]) -> Result<FiniteGroup> {
    let order: u64 = factors.iter().product();
    if order > MAX_ORDER as u64 {
        return Err(Error::capacity("group order", order, MAX_ORDER as u64));
    }
    factors.iter().try_fold(FiniteGroup::trivial(), |acc, &d| {
        Ok(direct_product(&acc, &cyclic(d as usize)?)?.group)
    })
}

/// Whether `a` has a direct factor with invariant factors `target`, by
/// searching for independent elements of the required orders and then for a
/// complement.
fn has_direct_factor(a: &FiniteGroup, target: &[u64]) -> bool {
    fn dfs(a: &FiniteGroup, target: &[u64], chosen: &mut Vec<Elem>, tried: &mut std::collections::HashSet<Vec<Elem>>) -> bool {
        let d = a.closure(chosen);
        if chosen.len() == target.len() {
            if !tried.insert(d.members().to_vec()) {
                return false;
            }
            return a.complement_in(&Subgroup::whole(a), &d).is_some();
        }
        let want = target[chosen.len()];
        for x in a.elements() {
            if a.element_order(x) as u64 != want {
                continue;
            }
            chosen.push(x);
            let grown = a.closure(chosen).order() == d.order() * want as usize;
            if grown && dfs(a, target, chosen, tried) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    dfs(a, target, &mut Vec::new(), &mut Default::default())
}

/// Abelian groups `A` of order at most `bound` with `Aut(A)` isomorphic to a
/// direct factor of `A` are exactly `C_1`, `C_2` and `C_6`.
pub fn sweep_div(bound: u64) -> Result<Verdict> {
    let start = Instant::now();
    let mut ev = Evidence::default();
    let mut satisfying: Vec<Vec<u64>> = Vec::new();
    let (mut checked, mut nonabelian) = (0u64, 0u64);
    for m in 1..=bound {
        for t in abelian_types(m) {
            checked += 1;
            let a = abelian_group(&t)?;
            match abelian_automorphism_group(&a)? {
                AbelianAut::NonAbelian(..) => nonabelian += 1,
                AbelianAut::Abelian(aut) => {
                    let inv = aut.as_group.abelian_invariants()?;
                    if has_direct_factor(&a, &inv.factors) {
                        satisfying.push(t);
                    }
                }
            }
        }
    }
    let expected: Vec<Vec<u64>> = vec![vec![], vec![2], vec![6]];
    ev.put("bound", bound);
    ev.put("groups_checked", checked);
    ev.put("nonabelian_aut", nonabelian);
    ev.put("satisfying", &satisfying);
    let pass = satisfying == expected;
    if !pass {
        ev.put("counterexample", json!({ "expected": expected, "found": satisfying }));
    }
    Ok(Verdict::finish("div", start, pass, ev.0))
}

/// `Aut(C_{p^n} x C_{p^n})` is not nilpotent; its order is checked against
/// `p^{4(n-1)} (p^2 - 1)(p^2 - p)`.
pub fn sweep_homocyclic(cases: &[(u64, u32)]) -> Result<Verdict> {
    let start = Instant::now();
    let mut ev = Evidence::default();
    let mut pass = true;
    let mut rows = Vec::new();
    for &(p, n) in cases {
        let pn = p.pow(n);
        if pn * pn > MAX_ORDER as u64 {
            return Err(Error::capacity("p^(2n)", pn * pn, MAX_ORDER as u64));
        }
        let a = abelian_group(&[pn, pn])?;
        let aut = automorphism_group(&a)?;
        let nilpotent = aut.as_group.is_nilpotent().0;
        let formula = p.pow(4 * (n - 1)) * (p * p - 1) * (p * p - p);
        let ok = !nilpotent && aut.order() as u64 == formula;
        if !ok && pass {
            ev.put("counterexample", json!({ "p": p, "n": n }));
        }
        pass &= ok;
        rows.push(json!({ "p": p, "n": n, "aut_order": aut.order(), "formula": formula, "nilpotent": nilpotent }));
    }
    ev.put("cases", rows);
    Ok(Verdict::finish("homocyclic", start, pass, ev.0))
}

/// Exponent sets `e_1 < ... < e_k` with `k >= 2` and `p^(sum e_i) <= bound`.
fn distinct_exponent_sets(p: u64, bound: u64) -> Vec<Vec<u32>> {
    fn extend(p: u64, bound: u64, prefix: &mut Vec<u32>, order: u64, out: &mut Vec<Vec<u32>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let mut e = prefix.last().map_or(1, |&l| l + 1);
        while order.saturating_mul(p.pow(e)) <= bound {
            prefix.push(e);
            extend(p, bound, prefix, order * p.pow(e), out);
            prefix.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    extend(p, bound, &mut Vec::new(), 1, &mut out);
    out
}

/// For non-cyclic abelian p-groups with pairwise distinct cyclic factors,
/// `|G|` divides `|Aut(G)|`.
pub fn sweep_noncyclic(bound: u64) -> Result<Verdict> {
    let start = Instant::now();
    let mut ev = Evidence::default();
    let mut pass = true;
    let mut rows = Vec::new();
    for p in (2..=bound).filter(|&p| crate::numtheory::is_prime(p)) {
        for exps in distinct_exponent_sets(p, bound) {
            let factors: Vec<u64> = exps.iter().map(|&e| p.pow(e)).collect();
            let a = abelian_group(&factors)?;
            let aut = automorphism_count(&a);
            let divides = aut.is_multiple_of(a.order() as u64);
            if !divides && pass {
                ev.put("counterexample", json!({ "factors": factors, "aut_order": aut }));
            }
            pass &= divides;
            rows.push(json!({ "factors": factors, "order": a.order(), "aut_order": aut }));
        }
    }
    ev.put("bound", bound);
    ev.put("instances", rows);
    Ok(Verdict::finish("noncyclic", start, pass, ev.0))
}

/// For `q = 2^n` with `n ≡ 3 (mod 6)`, `G = C_6 x K_q` has `|Aut(G)| = |G|`
/// but is not stable: `Z(G) ≅ C_6` while `Aut(G)` is centerless.
pub fn verify_nonstab(q: u64) -> Result<Verdict> {
    let start = Instant::now();
    match prime_power(q) {
        Some((2, n)) if n % 6 == 3 => {}
        _ => return Err(Error::Precondition(format!("q must be 2^n with n = 3 mod 6, got {q}"))),
    }
    let k = asl(q)?;
    let g = direct_product(&cyclic(6)?, &k.group)?.group;
    let aut = automorphism_group(&g)?;
    let st = is_stable_given(&g, &aut, Execution::default());
    let mut ev = Evidence::default();
    ev.put("q", q);
    ev.put("group_order", g.order());
    ev.put("aut_order", aut.order());
    ev.put("center_order", g.center().order());
    ev.put("aut_center_order", aut.as_group.center().order());
    let mut pass = ev.check("orders_equal", aut.order() == g.order());
    pass &= ev.check("not_isomorphic", !st.stable);
    pass &= ev.check("center_is_c6", g.center().order() == 6);
    pass &= ev.check("aut_centerless", aut.as_group.center().order() == 1);
    Ok(Verdict::finish("nonstab", start, pass, ev.0))
}

/// For a stable `G` with `N` as in [`check_extchar`]: `N` has a normal
/// complement, `G ≅ N x G/N`, and `G/N` is complete.
pub fn check_split_instance(g: &FiniteGroup, n: &Subgroup) -> Result<Verdict> {
    let start = Instant::now();
    check_extension_hypotheses(g, n, "split")?;
    if !is_stable(g)?.stable {
        return Err(Error::hypothesis("split", "G is not stable"));
    }
    let mut ev = Evidence::default();
    instance_level(&mut ev);
    let target = g.order() / n.order();
    let complement = g
        .normal_subgroups()
        .into_iter()
        .find(|h| h.order() == target && g.intersection(h, n).order() == 1);
    let mut pass = ev.check("complement_found", complement.is_some());
    let (quot, _) = g.quotient(n)?;
    let (ng, _) = n.to_group(g);
    let product = direct_product(&ng, &quot)?.group;
    ev.put("n_order", n.order());
    ev.put("quotient_order", quot.order());
    pass &= ev.check("is_direct_product", isomorphic(g, &product).is_some());
    pass &= ev.check("quotient_complete", is_complete(&quot).complete);
    Ok(Verdict::finish("split", start, pass, ev.0))
}

/// `|Aut(N x K)| = |decomp_group(N, K)| = bidwell_order(N, K)` with an
/// isomorphism between the first two. Only meaningful when `K` is complete and
/// `N`, `K` share no direct factor.
pub fn check_decomp(n: &FiniteGroup, k: &FiniteGroup) -> Result<Verdict> {
    let start = Instant::now();
    let g = direct_product(n, k)?.group;
    let aut = automorphism_group(&g)?;
    let d = decomp_group(n, k)?;
    let b = bidwell_order(n, k)?;
    let mut ev = Evidence::default();
    instance_level(&mut ev);
    ev.put("aut_order", aut.order());
    ev.put("decomp_order", d.order());
    ev.put("bidwell_order", b);
    let mut pass = ev.check("orders_agree", aut.order() == d.order() && d.order() as u64 == b);
    pass &= ev.check("isomorphic", isomorphic(&aut.as_group, &d).is_some());
    Ok(Verdict::finish("decomp", start, pass, ev.0))
}
