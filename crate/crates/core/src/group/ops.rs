use std::collections::HashSet;

use super::{check_order, Elem, FiniteGroup, Homomorphism, Subgroup};
use crate::error::{Error, Result};
use crate::numtheory::p_adic_valuation;

impl FiniteGroup {
    /// Smallest subgroup containing `seed`, by breadth-first product saturation.
    pub fn closure(&self, seed: &[Elem]) -> Subgroup {
        let mut mask = vec![false; self.order()];
        let mut members = vec![self.identity()];
        mask[self.identity() as usize] = true;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &s in seed {
                let y = self.mul(x, s);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_members(self.order(), members)
    }

    /// Greedy generating sequence for a subgroup (lowest member outside the
    /// current closure, repeatedly).
    pub fn subgroup_generators(&self, h: &Subgroup) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut current = self.closure(&[]);
        for &m in h.members() {
            if !current.contains(m) {
                gens.push(m);
                current = self.closure(&gens);
                if current.order() == h.order() {
                    break;
                }
            }
        }
        gens
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generating_set();
        self.filter_subgroup(|x| gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer(&self, set: &[Elem]) -> Subgroup {
        self.filter_subgroup(|x| set.iter().all(|&s| self.mul(x, s) == self.mul(s, x)))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.subgroup_generators(h);
        self.filter_subgroup(|g| gens.iter().all(|&x| h.contains(self.conj(g, x))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let hg = self.subgroup_generators(h);
        self.generating_set()
            .iter()
            .all(|&g| hg.iter().all(|&x| h.contains(self.conj(g, x))))
    }

    /// Closure of all commutators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut mask = vec![false; self.order()];
        let mut comms = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                let c = self.commutator(a, b);
                if !mask[c as usize] {
                    mask[c as usize] = true;
                    comms.push(c);
                }
            }
        }
        let mut gens = Vec::new();
        let mut h = self.closure(&gens);
        for c in comms {
            if !h.contains(c) {
                gens.push(c);
                h = self.closure(&gens);
            }
        }
        h
    }

    /// `Z_0 = {e}`, `Z_{i+1} = {x : [x, y] in Z_i for all y}`, up to stabilization.
    pub fn upper_central_series(&self) -> Vec<Subgroup> {
        let gens = self.generating_set();
        let mut series = vec![Subgroup::trivial(self)];
        loop {
            let last = series.last().unwrap();
            let next = self.filter_subgroup(|x| gens.iter().all(|&y| last.contains(self.commutator(x, y))));
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    /// `(true, Some(class))` when the upper central series reaches the group.
    pub fn is_nilpotent(&self) -> (bool, Option<usize>) {
        let series = self.upper_central_series();
        if series.last().unwrap().order() == self.order() {
            (true, Some(series.len() - 1))
        } else {
            (false, None)
        }
    }

    /// Left-coset quotient `G/N` with least-index coset representatives, and
    /// the projection `G -> G/N`.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, Homomorphism)> {
        if !self.is_normal(n) {
            return Err(Error::invalid("quotient by a non-normal subgroup"));
        }
        let mut coset_of = vec![Elem::MAX; self.order()];
        let mut reps = Vec::new();
        for x in self.elements() {
            if coset_of[x as usize] != Elem::MAX {
                continue;
            }
            let id = reps.len() as Elem;
            reps.push(x);
            for &m in n.members() {
                coset_of[self.mul(x, m) as usize] = id;
            }
        }
        let labels = self
            .labels()
            .map(|l| reps.iter().map(|&r| format!("{}N", l[r as usize])).collect());
        let q = FiniteGroup::from_fn(reps.len(), coset_of[self.identity() as usize], labels, |a, b| {
            coset_of[self.mul(reps[a as usize], reps[b as usize]) as usize]
        })?;
        Ok((q, Homomorphism { image: coset_of }))
    }

    /// A Sylow `p`-subgroup, grown from a maximal-order `p`-element by adjoining
    /// `p`-elements of the normalizer. Trivial when `p` does not divide the order.
    pub fn sylow_subgroup(&self, p: u64) -> Subgroup {
        let target = p.pow(p_adic_valuation(self.order() as u64, p)) as usize;
        let is_p_elem = |x: Elem| {
            let o = self.element_order(x) as u64;
            o > 1 && p.pow(p_adic_valuation(o, p)) == o
        };
        let Some(start) = self
            .elements()
            .filter(|&x| is_p_elem(x))
            .max_by_key(|&x| (self.element_order(x), std::cmp::Reverse(x)))
        else {
            return Subgroup::trivial(self);
        };
        let mut gens = vec![start];
        let mut sub = self.closure(&gens);
        while sub.order() < target {
            let norm = self.normalizer(&sub);
            let y = norm
                .members()
                .iter()
                .copied()
                .find(|&y| is_p_elem(y) && !sub.contains(y))
                .expect("a non-Sylow p-subgroup is properly contained in its normalizer's p-part");
            gens.push(y);
            sub = self.closure(&gens);
        }
        sub
    }

    /// Normal closure of a set: smallest normal subgroup containing it.
    pub fn normal_closure(&self, set: &[Elem]) -> Subgroup {
        let mut gens: Vec<Elem> = set.to_vec();
        let mut h = self.closure(&gens);
        loop {
            let extra: Vec<Elem> = self
                .generating_set()
                .iter()
                .flat_map(|&g| gens.iter().map(move |&x| (g, x)))
                .map(|(g, x)| self.conj(g, x))
                .filter(|&y| !h.contains(y))
                .collect();
            if extra.is_empty() {
                return h;
            }
            gens.extend(extra);
            h = self.closure(&gens);
            gens = self.subgroup_generators(&h);
        }
    }

    /// Every normal subgroup, as joins of normal closures of conjugacy classes.
    /// Sorted by (order, members).
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let classes = self.conjugacy_classes();
        let mut reps = vec![Elem::MAX; classes.sizes.len()];
        for x in self.elements() {
            let c = classes.class_of[x as usize] as usize;
            if reps[c] == Elem::MAX {
                reps[c] = x;
            }
        }
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        let mut found: Vec<(Subgroup, Vec<Elem>)> = Vec::new();
        let mut base: Vec<Vec<Elem>> = Vec::new();
        for &r in &reps {
            let h = self.normal_closure(&[r]);
            let gens = self.subgroup_generators(&h);
            if seen.insert(h.members().to_vec()) {
                base.push(gens.clone());
                found.push((h, gens));
            }
        }
        let mut i = 0;
        while i < found.len() {
            for b in &base {
                let mut gens = found[i].1.clone();
                gens.extend_from_slice(b);
                let h = self.closure(&gens);
                if seen.insert(h.members().to_vec()) {
                    let g = self.subgroup_generators(&h);
                    found.push((h, g));
                }
            }
            i += 1;
        }
        let mut out: Vec<Subgroup> = found.into_iter().map(|(h, _)| h).collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
        out
    }

    /// The set `AB = {ab}` as a membership mask.
    pub fn product_set(&self, a: &Subgroup, b: &Subgroup) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        for &x in a.members() {
            for &y in b.members() {
                mask[self.mul(x, y) as usize] = true;
            }
        }
        mask
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup::from_members(
            self.order(),
            a.members().iter().copied().filter(|&x| b.contains(x)).collect(),
        )
    }

    fn filter_subgroup(&self, pred: impl Fn(Elem) -> bool) -> Subgroup {
        Subgroup::from_members(self.order(), self.elements().filter(|&x| pred(x)).collect())
    }
}

/// `G x H` with lexicographic index pairing `(g, h) -> g * |H| + h`.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    left_order: usize,
    right_order: usize,
}

impl DirectProduct {
    #[inline]
    pub fn pair(&self, g: Elem, h: Elem) -> Elem {
        g * self.right_order as Elem + h
    }

    #[inline]
    pub fn split(&self, x: Elem) -> (Elem, Elem) {
        (x / self.right_order as Elem, x % self.right_order as Elem)
    }

    pub fn left_embedding(&self, right_identity: Elem) -> Homomorphism {
        Homomorphism {
            image: (0..self.left_order as Elem).map(|g| self.pair(g, right_identity)).collect(),
        }
    }

    pub fn right_embedding(&self, left_identity: Elem) -> Homomorphism {
        Homomorphism {
            image: (0..self.right_order as Elem).map(|h| self.pair(left_identity, h)).collect(),
        }
    }

    pub fn left_projection(&self) -> Homomorphism {
        Homomorphism {
            image: self.group.elements().map(|x| self.split(x).0).collect(),
        }
    }

    pub fn right_projection(&self) -> Homomorphism {
        Homomorphism {
            image: self.group.elements().map(|x| self.split(x).1).collect(),
        }
    }

    /// `G x {e}` as a subgroup.
    pub fn left_factor(&self) -> Subgroup {
        let e = self.split(self.group.identity()).1;
        Subgroup::from_members(
            self.group.order(),
            (0..self.left_order as Elem).map(|g| self.pair(g, e)).collect(),
        )
    }

    /// `{e} x H` as a subgroup.
    pub fn right_factor(&self) -> Subgroup {
        let e = self.split(self.group.identity()).0;
        Subgroup::from_members(
            self.group.order(),
            (0..self.right_order as Elem).map(|h| self.pair(e, h)).collect(),
        )
    }
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<DirectProduct> {
    let order = g
        .order()
        .checked_mul(h.order())
        .ok_or_else(|| Error::capacity("group order", u64::MAX, super::MAX_ORDER as u64))?;
    check_order(order)?;
    let m = h.order() as Elem;
    let labels = match (g.labels(), h.labels()) {
        (Some(a), Some(b)) => Some(
            a.iter()
                .flat_map(|x| b.iter().map(move |y| format!("({x}, {y})")))
                .collect(),
        ),
        _ => None,
    };
    let group = FiniteGroup::from_fn(order, g.identity() * m + h.identity(), labels, |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    })?;
    Ok(DirectProduct {
        group,
        left_order: g.order(),
        right_order: h.order(),
    })
}
