//! Concrete group families: cyclic, dihedral, quaternion, small symmetric
//! groups, semidirect products, and the affine semilinear group of degree one
//! over `F_q` together with its semilinear subgroup.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldTables, FiniteField};
use crate::group::{check_order, search::is_isomorphism_on_generators, Elem, FiniteGroup, Homomorphism, Subgroup, MAX_ORDER};
use crate::numtheory::prime_power;

/// Largest `n` accepted by [`symmetric`].
pub const MAX_SYMMETRIC_DEGREE: usize = 5;

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    check_order(n)?;
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    FiniteGroup::from_fn(n, 0, Some(labels), |a, b| (a + b) % n as Elem)
}

/// Dihedral group of order `2m` (symmetries of an `m`-gon). `dihedral(4)` has order 8.
/// Index `j*m + i` is `r^i s^j`.
pub fn dihedral(m: usize) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::invalid("dihedral group needs m >= 1"));
    }
    check_order(2 * m)?;
    let mm = m as Elem;
    let labels = (0..2 * m)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            let r = match i {
                0 => String::new(),
                1 => "r".into(),
                _ => format!("r^{i}"),
            };
            match (r.is_empty(), j) {
                (true, 0) => "e".into(),
                (true, _) => "s".into(),
                (false, 0) => r,
                (false, _) => format!("{r}s"),
            }
        })
        .collect();
    FiniteGroup::from_fn(2 * m, 0, Some(labels), |x, y| {
        let (a, b) = (x % mm, x / mm);
        let (c, d) = (y % mm, y / mm);
        let i = if b == 0 { (a + c) % mm } else { (a + mm - c) % mm };
        ((b + d) % 2) * mm + i
    })
}

/// Quaternion group `{±1, ±i, ±j, ±k}`; index `2u + s` for unit `u` in `1, i, j, k`
/// and sign bit `s`.
pub fn quaternion8() -> Result<FiniteGroup> {
    // unit products: (sign, unit)
    const UNIT: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, names[x / 2]))
        .collect();
    FiniteGroup::from_fn(8, 0, Some(labels), |x, y| {
        let (u, s) = (x / 2, x % 2);
        let (v, t) = (y / 2, y % 2);
        let (sign, w) = UNIT[u as usize][v as usize];
        2 * w + (s + t + sign) % 2
    })
}

/// Symmetric group on `n <= 5` points, permutations in lexicographic order of
/// their one-line notation; `(στ)(x) = σ(τ(x))`.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::invalid(format!(
            "symmetric degree must be in 1..={MAX_SYMMETRIC_DEGREE}, got {n}"
        )));
    }
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        perms.push(current.clone());
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    let index: std::collections::HashMap<Vec<u8>, Elem> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i as Elem)).collect();
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|&v| char::from(b'1' + v)).collect::<String>())
        .collect();
    FiniteGroup::from_fn(perms.len(), 0, Some(labels), |a, b| {
        let (s, t) = (&perms[a as usize], &perms[b as usize]);
        index[&t.iter().map(|&x| s[x as usize]).collect::<Vec<u8>>()]
    })
}

/// `N ⋊ H` with `(n1, h1)(n2, h2) = (n1 · action[h1](n2), h1 h2)`; index `n * |H| + h`.
///
/// `action[h]` must be an automorphism of `N` and `h -> action[h]` a homomorphism.
pub fn semidirect(n: &FiniteGroup, h: &FiniteGroup, action: &[Homomorphism]) -> Result<FiniteGroup> {
    if action.len() != h.order() {
        return Err(Error::invalid("action must assign an automorphism to every element of H"));
    }
    let order = n.order() * h.order();
    check_order(order)?;
    let ngens = n.generating_set();
    for a in action {
        if !is_isomorphism_on_generators(n, n, ngens, &a.image) {
            return Err(Error::invalid("action contains a map that is not an automorphism"));
        }
    }
    for x in h.elements() {
        for y in h.elements() {
            let lhs = &action[h.mul(x, y) as usize];
            let ok = ngens
                .iter()
                .all(|&g| lhs.apply(g) == action[x as usize].apply(action[y as usize].apply(g)));
            if !ok {
                return Err(Error::invalid("action is not a homomorphism into Aut(N)"));
            }
        }
    }
    let m = h.order() as Elem;
    let labels = match (n.labels(), h.labels()) {
        (Some(a), Some(b)) => Some(
            a.iter()
                .flat_map(|x| b.iter().map(move |y| format!("({x}; {y})")))
                .collect(),
        ),
        _ => None,
    };
    FiniteGroup::from_fn(order, n.identity() * m + h.identity(), labels, |x, y| {
        let (n1, h1) = (x / m, x % m);
        let (n2, h2) = (y / m, y % m);
        n.mul(n1, action[h1 as usize].apply(n2)) * m + h.mul(h1, h2)
    })
}

/// The map `x -> alpha · ξ^gal(x) + beta` on `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KqElement {
    pub alpha: FieldElement,
    pub gal: u32,
    pub beta: FieldElement,
}

fn field_for(q: u64) -> Result<FiniteField> {
    let (p, n) = prime_power(q).ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
    FiniteField::new(p, n)
}

fn check_family_order(q: u64, n: u32, with_translations: bool) -> Result<usize> {
    let order = (q - 1) * n as u64 * if with_translations { q } else { 1 };
    if order > MAX_ORDER as u64 {
        return Err(Error::capacity("group order", order, MAX_ORDER as u64));
    }
    Ok(order as usize)
}

/// The affine semilinear group of degree one over `F_q`: maps
/// `x -> α ξ^k(x) + β` under composition, of order `q (q-1) n`.
///
/// Elements are indexed in the order of `(encode(α), k, encode(β))`, so the
/// identity `(1, 0, 0)` has index 0.
#[derive(Debug, Clone)]
pub struct AffineSemilinear {
    pub field: FiniteField,
    pub group: FiniteGroup,
    tables: FieldTables,
}

/// The semilinear group of degree one over `F_q`: maps `x -> α ξ^k(x)`,
/// indexed by `(encode(α), k)`.
#[derive(Debug, Clone)]
pub struct Semilinear {
    pub field: FiniteField,
    pub group: FiniteGroup,
}

fn kq_label(f: &FiniteField, alpha: u32, k: u32, beta: u32) -> String {
    format!("({})·ξ^{k}(x)+{}", f.format(&f.decode(alpha)), f.format(&f.decode(beta)))
}

pub fn asl(q: u64) -> Result<AffineSemilinear> {
    let field = field_for(q)?;
    let n = field.degree();
    let order = check_family_order(q, n, true)?;
    let t = field.tables();
    let (qq, nn) = (q as u32, n);
    let decode = |x: Elem| {
        let beta = x % qq;
        let rest = x / qq;
        (rest / nn + 1, rest % nn, beta)
    };
    let encode = |alpha: u32, k: u32, beta: u32| ((alpha - 1) * nn + k) * qq + beta;
    let labels = (0..order as Elem)
        .map(|x| {
            let (a, k, b) = decode(x);
            kq_label(&field, a, k, b)
        })
        .collect();
    let group = FiniteGroup::from_fn(order, 0, Some(labels), |x, y| {
        let (a1, k1, b1) = decode(x);
        let (a2, k2, b2) = decode(y);
        let alpha = t.mul(a1, t.frob(k1 as usize, a2));
        let beta = t.add(t.mul(a1, t.frob(k1 as usize, b2)), b1);
        encode(alpha, (k1 + k2) % nn, beta)
    })?;
    Ok(AffineSemilinear { field, group, tables: t })
}

impl AffineSemilinear {
    fn q(&self) -> u32 {
        self.field.order()
    }

    fn n(&self) -> u32 {
        self.field.degree()
    }

    pub fn element(&self, x: Elem) -> KqElement {
        let (q, n) = (self.q(), self.n());
        let beta = x % q;
        let rest = x / q;
        KqElement {
            alpha: self.field.decode(rest / n + 1),
            gal: rest % n,
            beta: self.field.decode(beta),
        }
    }

    pub fn index_of(&self, e: &KqElement) -> Result<Elem> {
        let alpha = self.field.encode(&e.alpha);
        if alpha == 0 {
            return Err(Error::invalid("alpha must be nonzero"));
        }
        if e.gal >= self.n() {
            return Err(Error::invalid("Galois exponent must be reduced mod n"));
        }
        Ok(((alpha - 1) * self.n() + e.gal) * self.q() + self.field.encode(&e.beta))
    }

    /// Evaluates the map at `x` using field arithmetic directly.
    pub fn apply(&self, e: &KqElement, x: &FieldElement) -> FieldElement {
        let f = &self.field;
        f.add(&f.mul(&e.alpha, &f.frobenius(x, e.gal as i64)), &e.beta)
    }

    fn subgroup_where(&self, pred: impl Fn(u32, u32, u32) -> bool) -> Subgroup {
        let (q, n) = (self.q(), self.n());
        let members = self
            .group
            .elements()
            .filter(|&x| pred((x / q) / n + 1, (x / q) % n, x % q))
            .collect();
        Subgroup::from_members(self.group.order(), members)
    }

    /// Translations `x -> x + β`.
    pub fn translations(&self) -> Subgroup {
        self.subgroup_where(|a, k, _| a == 1 && k == 0)
    }

    /// Multiplications `x -> α x`.
    pub fn multiplications(&self) -> Subgroup {
        self.subgroup_where(|_, k, b| k == 0 && b == 0)
    }

    /// Field automorphisms `x -> ξ^k(x)`.
    pub fn galois(&self) -> Subgroup {
        self.subgroup_where(|a, _, b| a == 1 && b == 0)
    }

    /// The `β = 0` subgroup, a copy of the semilinear group.
    pub fn semilinear_part(&self) -> Subgroup {
        self.subgroup_where(|_, _, b| b == 0)
    }

    /// The unique subgroup of the multiplications of order `(q-1)/(p-1)`,
    /// generated by multiplication by `g^(p-1)` for a primitive element `g`.
    pub fn hhat(&self) -> Subgroup {
        let f = &self.field;
        let g = f.primitive_element();
        let h = f.pow(&g, f.characteristic() as u64 - 1);
        let idx = self
            .index_of(&KqElement {
                alpha: h,
                gal: 0,
                beta: f.zero(),
            })
            .unwrap();
        self.group.closure(&[idx])
    }

    /// Composition `(a ∘ b)` computed from the closed-form product, on canonical
    /// encodings; the group table is built from the same rule.
    pub fn compose_codes(&self, a: (u32, u32, u32), b: (u32, u32, u32)) -> (u32, u32, u32) {
        let t = &self.tables;
        let alpha = t.mul(a.0, t.frob(a.1 as usize, b.0));
        let beta = t.add(t.mul(a.0, t.frob(a.1 as usize, b.2)), a.2);
        (alpha, (a.1 + b.1) % self.n(), beta)
    }
}

pub fn gammal(q: u64) -> Result<Semilinear> {
    let field = field_for(q)?;
    let n = field.degree();
    let order = check_family_order(q, n, false)?;
    let t = field.tables();
    let labels = (0..order as Elem)
        .map(|x| kq_label(&field, x / n + 1, x % n, 0).trim_end_matches("+0").to_string())
        .collect();
    let group = FiniteGroup::from_fn(order, 0, Some(labels), |x, y| {
        let (a1, k1) = (x / n + 1, x % n);
        let (a2, k2) = (y / n + 1, y % n);
        let alpha = t.mul(a1, t.frob(k1 as usize, a2));
        (alpha - 1) * n + (k1 + k2) % n
    })?;
    Ok(Semilinear { field, group })
}

impl Semilinear {
    /// Multiplications `x -> α x`.
    pub fn multiplications(&self) -> Subgroup {
        let n = self.field.degree();
        Subgroup::from_members(
            self.group.order(),
            self.group.elements().filter(|x| x % n == 0).collect(),
        )
    }

    pub fn galois(&self) -> Subgroup {
        let n = self.field.degree();
        Subgroup::from_members(self.group.order(), (0..n).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::isomorphic;

    #[test]
    fn small_families() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let d4 = dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.center().order(), 2);
        assert_eq!(d4.is_nilpotent(), (true, Some(2)));
        let q8 = quaternion8().unwrap();
        assert_eq!(q8.elements().filter(|&x| q8.element_order(x) == 2).count(), 1);
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert!(symmetric(6).is_err());
        assert!(cyclic(0).is_err());
        assert!(dihedral(0).is_err());
        for g in [cyclic(12).unwrap(), d4, q8, symmetric(4).unwrap()] {
            g.audit(0).unwrap();
        }
    }

    #[test]
    fn asl_orders_and_small_cases() {
        let k8 = asl(8).unwrap();
        assert_eq!(k8.group.order(), 168);
        let k3 = asl(3).unwrap();
        assert!(isomorphic(&k3.group, &symmetric(3).unwrap()).is_some());
        let k2 = asl(2).unwrap();
        assert!(isomorphic(&k2.group, &cyclic(2).unwrap()).is_some());
        assert!(matches!(asl(6), Err(Error::InvalidArgument(_))));
        assert!(matches!(asl(1), Err(Error::InvalidArgument(_))));
        assert!(matches!(asl(128), Err(Error::Capacity { .. })));
        for q in [3, 4, 5, 7, 8, 9] {
            asl(q).unwrap().group.audit(0).unwrap();
        }
    }

    #[test]
    fn gammal_cases() {
        assert_eq!(gammal(8).unwrap().group.order(), 21);
        for p in [3u64, 5, 7] {
            let g = gammal(p).unwrap();
            assert!(isomorphic(&g.group, &cyclic(p as usize - 1).unwrap()).is_some());
        }
        assert!(isomorphic(&gammal(4).unwrap().group, &symmetric(3).unwrap()).is_some());
    }

    #[test]
    fn named_subgroup_orders() {
        let k8 = asl(8).unwrap();
        assert_eq!(k8.translations().order(), 8);
        assert_eq!(k8.multiplications().order(), 7);
        assert_eq!(k8.galois().order(), 3);
        assert_eq!(k8.hhat().order(), 7);
        assert_eq!(asl(9).unwrap().hhat().order(), 4);
        assert_eq!(asl(7).unwrap().hhat().order(), 1);
    }

    #[test]
    fn kq_structure() {
        for q in [3, 4, 5, 7, 8, 9] {
            let k = asl(q).unwrap();
            let g = &k.group;
            let (t, m, gal) = (k.translations(), k.multiplications(), k.galois());
            let mut seed = t.members().to_vec();
            seed.extend(m.members());
            seed.extend(gal.members());
            assert_eq!(g.closure(&seed).order(), g.order(), "q = {q}");
            assert!(g.is_normal(&t));
            let ht = g.closure(&[k.hhat().members(), t.members()].concat());
            assert!(g.is_normal(&ht));
            assert_eq!(g.derived_subgroup(), ht, "q = {q}");
            let (quot, _) = g.quotient(&t).unwrap();
            assert!(isomorphic(&quot, &gammal(q).unwrap().group).is_some());
            let (sl, _) = k.semilinear_part().to_group(g);
            assert!(isomorphic(&sl, &gammal(q).unwrap().group).is_some());
        }
    }

    #[test]
    fn semidirect_cases() {
        let c3 = cyclic(3).unwrap();
        let c2 = cyclic(2).unwrap();
        let id = Homomorphism::identity(&c3);
        let inversion = Homomorphism {
            image: c3.elements().map(|x| c3.inv(x)).collect(),
        };
        let s3 = semidirect(&c3, &c2, &[id.clone(), inversion.clone()]).unwrap();
        assert!(isomorphic(&s3, &symmetric(3).unwrap()).is_some());
        let direct = semidirect(&c3, &c2, &[id.clone(), id.clone()]).unwrap();
        assert!(isomorphic(&direct, &cyclic(6).unwrap()).is_some());
        // inversion twice is not a valid action of C_3
        assert!(semidirect(&c3, &c3, &[id, inversion.clone(), inversion]).is_err());
    }
}
