use std::collections::BTreeMap;

use serde::Serialize;

use super::{Elem, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use crate::numtheory::{factorize, from_elementary, p_adic_valuation};

/// Invariant factors `d_1 | d_2 | ... | d_k`, each `> 1`; empty for the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AbelianInvariants {
    pub factors: Vec<u64>,
}

impl AbelianInvariants {
    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }
}

/// A basis `b_1, ..., b_k` with `A = <b_1> x ... x <b_k>`, and the coordinates
/// of every element with respect to it.
#[derive(Debug, Clone)]
pub struct CyclicBasis {
    pub generators: Vec<Elem>,
    pub orders: Vec<u64>,
    /// `coords[x][i]` is the exponent of `b_i` in `x`.
    pub coords: Vec<Vec<u32>>,
}

impl FiniteGroup {
    /// Invariant factors of an abelian group, read off from the number of
    /// elements killed by each prime power.
    pub fn abelian_invariants(&self) -> Result<AbelianInvariants> {
        if !self.is_abelian() {
            return Err(Error::invalid("abelian invariants of a non-abelian group"));
        }
        let n = self.order() as u64;
        let mut by_prime = BTreeMap::new();
        for (p, e) in factorize(n) {
            // s[k] = log_p #{x : x^(p^k) = 1}
            let mut s = vec![0u32];
            for k in 1..=e {
                let pk = p.pow(k);
                let count = self
                    .element_orders()
                    .iter()
                    .filter(|&&o| pk % o as u64 == 0)
                    .count() as u64;
                s.push(p_adic_valuation(count, p));
                if s[k as usize] == e {
                    break;
                }
            }
            // r[k] = number of cyclic p-factors of order >= p^k
            let r: Vec<u32> = s.windows(2).map(|w| w[1] - w[0]).collect();
            let mut exps = Vec::new();
            for k in 0..r.len() {
                let next = r.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(r[k] - next) {
                    exps.push(k as u32 + 1);
                }
            }
            by_prime.insert(p, exps);
        }
        Ok(AbelianInvariants {
            factors: from_elementary(by_prime),
        })
    }

    /// Decomposes an abelian group by repeatedly splitting off the cyclic
    /// subgroup of a maximal-order element and recursing on a complement.
    /// Generators come out with non-increasing orders.
    pub fn cyclic_decomposition(&self) -> Result<CyclicBasis> {
        if !self.is_abelian() {
            return Err(Error::invalid("cyclic decomposition of a non-abelian group"));
        }
        let mut rest = Subgroup::whole(self);
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        while rest.order() > 1 {
            let x = rest
                .members()
                .iter()
                .copied()
                .max_by_key(|&x| (self.element_order(x), std::cmp::Reverse(x)))
                .unwrap();
            let cyclic = self.closure(&[x]);
            rest = self
                .complement_in(&rest, &cyclic)
                .expect("a maximal-order cyclic subgroup of a finite abelian group is a direct factor");
            generators.push(x);
            orders.push(self.element_order(x) as u64);
        }
        let mut coords = vec![Vec::new(); self.order()];
        let mut tuple = vec![0u32; generators.len()];
        loop {
            let x = generators
                .iter()
                .zip(&tuple)
                .fold(self.identity(), |acc, (&b, &c)| self.mul(acc, self.pow(b, c as u64)));
            coords[x as usize] = tuple.clone();
            // odometer increment
            let mut i = 0;
            while i < tuple.len() {
                tuple[i] += 1;
                if (tuple[i] as u64) < orders[i] {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if i == tuple.len() {
                break;
            }
        }
        Ok(CyclicBasis {
            generators,
            orders,
            coords,
        })
    }

    /// Some subgroup `C <= within` with `C ∩ sub = {e}` and `|C| |sub| = |within|`,
    /// found by exhaustive depth-first search. Only meaningful in abelian groups,
    /// where such a `C` is a direct complement.
    pub fn complement_in(&self, within: &Subgroup, sub: &Subgroup) -> Option<Subgroup> {
        if !within.order().is_multiple_of(sub.order()) {
            return None;
        }
        let target = within.order() / sub.order();
        self.complement_dfs(within, sub, target, &[], 0)
    }

    fn complement_dfs(
        &self,
        within: &Subgroup,
        sub: &Subgroup,
        target: usize,
        gens: &[Elem],
        start: usize,
    ) -> Option<Subgroup> {
        let current = self.closure(gens);
        if current.order() == target {
            return Some(current);
        }
        let members = within.members();
        for (idx, &m) in members.iter().enumerate().skip(start) {
            if current.contains(m) || sub.contains(m) {
                continue;
            }
            let mut next_gens = gens.to_vec();
            next_gens.push(m);
            let next = self.closure(&next_gens);
            if !target.is_multiple_of(next.order()) {
                continue;
            }
            if next.members().iter().any(|&y| y != self.identity() && sub.contains(y)) {
                continue;
            }
            if let Some(c) = self.complement_dfs(within, sub, target, &next_gens, idx + 1) {
                return Some(c);
            }
        }
        None
    }
}
