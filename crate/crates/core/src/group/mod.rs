//! Dense finite-group representation and the subgroup, series, quotient and
//! isomorphism machinery built on it.
//!
//! Elements are indices `0..order`; multiplication is a full Cayley table.
//! All searches break ties by least element index so results are
//! deterministic.

mod abelian;
mod iso;
mod ops;
pub(crate) mod search;

pub use abelian::{AbelianInvariants, CyclicBasis};
pub use iso::{isomorphic, isomorphic_with, GroupProfile};
pub use ops::{direct_product, DirectProduct};

use std::fmt;
use std::sync::OnceLock;

use rand::{rngs::StdRng, Rng, SeedableRng};

use crate::error::{Error, Result};

/// Element handle: an index into the group's element range.
pub type Elem = u32;

/// Largest group order accepted anywhere (the Cayley table is `order^2` words).
pub const MAX_ORDER: usize = 4096;

/// Order bound below which [`FiniteGroup::audit`] scans every triple.
pub const FULL_AUDIT_ORDER: usize = 512;

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Elem>,
    identity: Elem,
    inverses: Vec<Elem>,
    element_orders: Vec<u32>,
    labels: Option<Vec<String>>,
    classes: OnceLock<ConjugacyClasses>,
    gens: OnceLock<Vec<Elem>>,
}

#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    /// class id of each element
    pub class_of: Vec<u32>,
    /// size of each class, indexed by class id
    pub sizes: Vec<u32>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::invalid("a group has at least one element"));
    }
    if order > MAX_ORDER {
        return Err(Error::capacity("group order", order as u64, MAX_ORDER as u64));
    }
    Ok(())
}

impl FiniteGroup {
    /// Builds a group from a row-major Cayley table.
    ///
    /// Checks that `identity` is a two-sided identity and that every row and
    /// column is a permutation. Associativity is not checked here; see
    /// [`FiniteGroup::audit`].
    pub fn from_table(
        order: usize,
        table: Vec<Elem>,
        identity: Elem,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        check_order(order)?;
        if table.len() != order * order {
            return Err(Error::invalid("Cayley table has the wrong size"));
        }
        if identity as usize >= order {
            return Err(Error::invalid("identity out of range"));
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::invalid("label count does not match order"));
            }
        }
        let mut seen = vec![0usize; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            if row[identity as usize] as usize != x || table[identity as usize * order + x] as usize != x {
                return Err(Error::invalid("identity is not two-sided"));
            }
            for &y in row {
                if y as usize >= order || seen[y as usize] == x + 1 {
                    return Err(Error::invalid("Cayley table row is not a permutation"));
                }
                seen[y as usize] = x + 1;
            }
        }
        let mut inverses = vec![0; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == identity).unwrap();
            if table[y * order + x] != identity {
                return Err(Error::invalid("inverses are not two-sided"));
            }
            inverses[x] = y as Elem;
        }
        let element_orders = (0..order)
            .map(|x| {
                let mut k = 1;
                let mut acc = x as Elem;
                while acc != identity {
                    acc = table[acc as usize * order + x];
                    k += 1;
                }
                k
            })
            .collect();
        Ok(FiniteGroup {
            order,
            table,
            identity,
            inverses,
            element_orders,
            labels,
            classes: OnceLock::new(),
            gens: OnceLock::new(),
        })
    }

    /// Builds the table from a multiplication function on indices.
    pub fn from_fn<F>(order: usize, identity: Elem, labels: Option<Vec<String>>, mul: F) -> Result<Self>
    where
        F: Fn(Elem, Elem) -> Elem,
    {
        check_order(order)?;
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order as Elem {
            for b in 0..order as Elem {
                table.push(mul(a, b));
            }
        }
        Self::from_table(order, table, identity, labels)
    }

    pub fn trivial() -> Self {
        Self::from_table(1, vec![0], 0, Some(vec!["e".into()])).unwrap()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a as usize]
    }

    #[inline]
    pub fn element_order(&self, a: Elem) -> u32 {
        self.element_orders[a as usize]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.element_orders
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        let k = k % self.element_order(a) as u64;
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[a, b] = a b a^-1 b^-1`
    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn label(&self, a: Elem) -> String {
        match &self.labels {
            Some(l) => l[a as usize].clone(),
            None => a.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generating_set();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, computed once and cached.
    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let gens = self.generating_set();
            let mut class_of = vec![u32::MAX; self.order];
            let mut sizes = Vec::new();
            for x in self.elements() {
                if class_of[x as usize] != u32::MAX {
                    continue;
                }
                let id = sizes.len() as u32;
                class_of[x as usize] = id;
                let mut orbit = vec![x];
                let mut i = 0;
                while i < orbit.len() {
                    let y = orbit[i];
                    for &g in gens {
                        let z = self.conj(g, y);
                        if class_of[z as usize] == u32::MAX {
                            class_of[z as usize] = id;
                            orbit.push(z);
                        }
                    }
                    i += 1;
                }
                sizes.push(orbit.len() as u32);
            }
            ConjugacyClasses { class_of, sizes }
        })
    }

    pub fn class_size(&self, a: Elem) -> u32 {
        let c = self.conjugacy_classes();
        c.sizes[c.class_of[a as usize] as usize]
    }

    /// Greedy generating sequence: repeatedly adjoin the element whose
    /// closure with the generators so far is largest, least index on ties.
    /// Short sequences keep automorphism and isomorphism searches shallow.
    pub fn generating_set(&self) -> &[Elem] {
        self.gens.get_or_init(|| {
            let mut gens: Vec<Elem> = Vec::new();
            let mut current = vec![false; self.order];
            current[self.identity as usize] = true;
            let mut size = 1;
            while size < self.order {
                let mut best: Option<(usize, Elem, Vec<bool>)> = None;
                for x in self.elements() {
                    if current[x as usize] {
                        continue;
                    }
                    gens.push(x);
                    let (mask, n) = self.closure_mask(&gens);
                    gens.pop();
                    if best.as_ref().is_none_or(|b| n > b.0) {
                        best = Some((n, x, mask));
                        if n == self.order {
                            break;
                        }
                    }
                }
                let (n, x, mask) = best.expect("an element outside a proper subgroup");
                gens.push(x);
                current = mask;
                size = n;
            }
            gens
        })
    }

    fn closure_mask(&self, seed: &[Elem]) -> (Vec<bool>, usize) {
        let mut mask = vec![false; self.order];
        let mut members = vec![self.identity];
        mask[self.identity as usize] = true;
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            for &g in seed {
                let z = self.mul(y, g);
                if !mask[z as usize] {
                    mask[z as usize] = true;
                    members.push(z);
                }
            }
            i += 1;
        }
        (mask, members.len())
    }

    /// Checks associativity: every triple for order `<= FULL_AUDIT_ORDER`,
    /// otherwise `samples` pseudo-random triples from a fixed seed.
    pub fn audit(&self, samples: usize) -> Result<()> {
        let bad = |a, b, c| {
            Error::invalid(format!("multiplication is not associative at ({a}, {b}, {c})"))
        };
        if self.order <= FULL_AUDIT_ORDER {
            for a in self.elements() {
                for b in self.elements() {
                    let ab = self.mul(a, b);
                    for c in self.elements() {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(bad(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5747_4c00);
            let n = self.order as Elem;
            for _ in 0..samples {
                let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(bad(a, b, c));
                }
            }
        }
        Ok(())
    }
}

/// A subgroup as a sorted member set of some parent group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<Elem>,
    mask: Vec<bool>,
}

impl Subgroup {
    /// Wraps a member set that is already known to be a subgroup.
    pub(crate) fn from_members(parent_order: usize, mut members: Vec<Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; parent_order];
        for &m in &members {
            mask[m as usize] = true;
        }
        Subgroup { members, mask }
    }

    /// Validates closure before wrapping.
    pub fn new(g: &FiniteGroup, members: Vec<Elem>) -> Result<Self> {
        if members.iter().any(|&m| m as usize >= g.order()) {
            return Err(Error::invalid("subgroup member out of range"));
        }
        let s = Self::from_members(g.order(), members);
        if !s.contains(g.identity()) {
            return Err(Error::invalid("subset does not contain the identity"));
        }
        for &a in &s.members {
            if !s.contains(g.inv(a)) {
                return Err(Error::invalid("subset is not closed under inverses"));
            }
            for &b in &s.members {
                if !s.contains(g.mul(a, b)) {
                    return Err(Error::invalid("subset is not closed under multiplication"));
                }
            }
        }
        Ok(s)
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_members(g.order(), g.elements().collect())
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_members(g.order(), vec![g.identity()])
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask.get(x as usize).copied().unwrap_or(false)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// The subgroup as a standalone group, with the embedding `i -> members[i]`.
    pub fn to_group(&self, parent: &FiniteGroup) -> (FiniteGroup, Homomorphism) {
        let mut pos = vec![Elem::MAX; parent.order()];
        for (i, &m) in self.members.iter().enumerate() {
            pos[m as usize] = i as Elem;
        }
        let labels = parent
            .labels()
            .map(|l| self.members.iter().map(|&m| l[m as usize].clone()).collect());
        let group = FiniteGroup::from_fn(self.order(), pos[parent.identity() as usize], labels, |a, b| {
            pos[parent.mul(self.members[a as usize], self.members[b as usize]) as usize]
        })
        .expect("subgroup tables are valid");
        let embedding = Homomorphism {
            image: self.members.clone(),
        };
        (group, embedding)
    }

    /// Image of this subgroup under an element map of the parent.
    pub fn map(&self, parent_order: usize, f: &Homomorphism) -> Subgroup {
        Self::from_members(parent_order, self.members.iter().map(|&m| f.apply(m)).collect())
    }
}

/// A structure-preserving map, stored as the full image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homomorphism {
    pub image: Vec<Elem>,
}

impl Homomorphism {
    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x as usize]
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Homomorphism {
            image: g.elements().collect(),
        }
    }

    /// Exhaustive check that `image(xy) = image(x) image(y)`.
    pub fn is_homomorphism(&self, domain: &FiniteGroup, codomain: &FiniteGroup) -> bool {
        self.image.len() == domain.order()
            && self.image.iter().all(|&y| (y as usize) < codomain.order())
            && domain.elements().all(|x| {
                domain.elements().all(|y| {
                    self.apply(domain.mul(x, y)) == codomain.mul(self.apply(x), self.apply(y))
                })
            })
    }

    pub fn is_bijective(&self, codomain: &FiniteGroup) -> bool {
        if self.image.len() != codomain.order() {
            return false;
        }
        let mut seen = vec![false; codomain.order()];
        self.image.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    /// Kernel as a subgroup of the domain.
    pub fn kernel(&self, domain: &FiniteGroup, codomain: &FiniteGroup) -> Subgroup {
        Subgroup::from_members(
            domain.order(),
            domain
                .elements()
                .filter(|&x| self.apply(x) == codomain.identity())
                .collect(),
        )
    }

    pub fn compose(&self, inner: &Homomorphism) -> Homomorphism {
        Homomorphism {
            image: inner.image.iter().map(|&x| self.apply(x)).collect(),
        }
    }
}
