//! Generator-image backtracking.
//!
//! A homomorphism out of `src` is fixed by the images of a generating
//! sequence `g_0, ..., g_{k-1}`. Level `i` of the search assigns the image of
//! `g_i`, extends the partial map across `<g_0, ..., g_i>` along a breadth-first
//! spanning tree, and rejects the assignment at the first Cayley-graph edge
//! `x -> x g_j` whose image is inconsistent. A map that survives every level
//! satisfies `phi(x g) = phi(x) phi(g)` for all `x` and all generators, which
//! makes it a homomorphism.

use std::ops::ControlFlow;

use super::{Elem, FiniteGroup};
use crate::exec::{self, Execution};

/// Spanning-tree layout of `src` with respect to a generating sequence.
#[derive(Debug, Clone)]
pub(crate) struct GenPlan {
    pub gens: Vec<Elem>,
    /// per level: `(new element, parent, generator)` with `new = parent * gens[generator]`
    defs: Vec<Vec<(Elem, Elem, u8)>>,
    /// per level: non-tree edges `(x, generator)` to check
    checks: Vec<Vec<(Elem, u8)>>,
}

impl GenPlan {
    pub fn new(g: &FiniteGroup, gens: &[Elem]) -> Self {
        let mut mask = vec![false; g.order()];
        let mut members = vec![g.identity()];
        mask[g.identity() as usize] = true;
        let mut defs = Vec::with_capacity(gens.len());
        let mut checks = Vec::with_capacity(gens.len());
        for level in 0..gens.len() {
            let mut d = Vec::new();
            let mut c = Vec::new();
            let old = members.len();
            let mut idx = 0;
            while idx < members.len() {
                let x = members[idx];
                let ks = if idx < old { level..=level } else { 0..=level };
                for k in ks {
                    let y = g.mul(x, gens[k]);
                    if mask[y as usize] {
                        c.push((x, k as u8));
                    } else {
                        mask[y as usize] = true;
                        members.push(y);
                        d.push((y, x, k as u8));
                    }
                }
                idx += 1;
            }
            defs.push(d);
            checks.push(c);
        }
        assert_eq!(members.len(), g.order(), "generating sequence does not generate");
        GenPlan {
            gens: gens.to_vec(),
            defs,
            checks,
        }
    }
}

pub(crate) struct HomSearch<'a> {
    pub src: &'a FiniteGroup,
    pub dst: &'a FiniteGroup,
    pub plan: &'a GenPlan,
    /// sorted candidate images per generator
    pub candidates: Vec<Vec<Elem>>,
    pub injective: bool,
}

pub(crate) struct State {
    pub phi: Vec<Elem>,
    used: Vec<bool>,
    pub images: Vec<Elem>,
}

impl<'a> HomSearch<'a> {
    fn fresh(&self) -> State {
        let mut phi = vec![Elem::MAX; self.src.order()];
        phi[self.src.identity() as usize] = self.dst.identity();
        let mut used = vec![false; self.dst.order()];
        used[self.dst.identity() as usize] = true;
        State {
            phi,
            used,
            images: vec![0; self.plan.gens.len()],
        }
    }

    fn undo(&self, st: &mut State, level: usize, count: usize) {
        for &(y, _, _) in &self.plan.defs[level][..count] {
            if self.injective {
                st.used[st.phi[y as usize] as usize] = false;
            }
            st.phi[y as usize] = Elem::MAX;
        }
    }

    fn assign(&self, st: &mut State, level: usize, cand: Elem) -> bool {
        st.images[level] = cand;
        let defs = &self.plan.defs[level];
        for (t, &(y, x, k)) in defs.iter().enumerate() {
            let v = self.dst.mul(st.phi[x as usize], st.images[k as usize]);
            if self.injective {
                if st.used[v as usize] {
                    self.undo(st, level, t);
                    return false;
                }
                st.used[v as usize] = true;
            }
            st.phi[y as usize] = v;
        }
        for &(x, k) in &self.plan.checks[level] {
            let y = self.src.mul(x, self.plan.gens[k as usize]);
            if self.dst.mul(st.phi[x as usize], st.images[k as usize]) != st.phi[y as usize] {
                self.undo(st, level, defs.len());
                return false;
            }
        }
        true
    }

    fn dfs<F>(&self, st: &mut State, level: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&State) -> ControlFlow<()>,
    {
        if level == self.plan.gens.len() {
            return visit(st);
        }
        for &c in &self.candidates[level] {
            if self.assign(st, level, c) {
                let flow = self.dfs(st, level + 1, visit);
                self.undo(st, level, self.plan.defs[level].len());
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    /// Sequential traversal in lexicographic order of generator images.
    pub fn for_each<F>(&self, mut visit: F)
    where
        F: FnMut(&State) -> ControlFlow<()>,
    {
        let mut st = self.fresh();
        let _ = self.dfs(&mut st, 0, &mut visit);
    }

    /// Runs the subtree below a fixed image of the first generator.
    fn subtree<F>(&self, first: Elem, visit: &mut F)
    where
        F: FnMut(&State) -> ControlFlow<()>,
    {
        let mut st = self.fresh();
        if self.assign(&mut st, 0, first) {
            let _ = self.dfs(&mut st, 1, visit);
        }
    }

    /// Every solution as a full element map, in lexicographic order of
    /// generator images. Gives up with `None` as soon as more
    /// than `limit` solutions exist.
    pub fn collect_up_to(&self, exec: Execution, limit: usize) -> Option<Vec<Vec<Elem>>> {
        if self.plan.gens.is_empty() {
            return Some(vec![self.fresh().phi]);
        }
        let parts = exec::map_collect(exec, &self.candidates[0], |&c| {
            let mut out = Vec::new();
            let mut overflow = false;
            self.subtree(c, &mut |st: &State| {
                if out.len() == limit {
                    overflow = true;
                    return ControlFlow::Break(());
                }
                out.push(st.phi.clone());
                ControlFlow::Continue(())
            });
            (!overflow).then_some(out)
        });
        let mut all = Vec::new();
        for part in parts {
            all.extend(part?);
            if all.len() > limit {
                return None;
            }
        }
        Some(all)
    }

    pub fn count(&self, exec: Execution) -> u64 {
        if self.plan.gens.is_empty() {
            return 1;
        }
        exec::map_collect(exec, &self.candidates[0], |&c| {
            let mut n = 0u64;
            self.subtree(c, &mut |_: &State| {
                n += 1;
                ControlFlow::Continue(())
            });
            n
        })
        .into_iter()
        .sum()
    }

    /// The lexicographically least solution.
    pub fn find_first(&self, exec: Execution) -> Option<Vec<Elem>> {
        if self.plan.gens.is_empty() {
            return Some(self.fresh().phi);
        }
        exec::find_map_first(exec, &self.candidates[0], |&c| {
            let mut found = None;
            self.subtree(c, &mut |st: &State| {
                found = Some(st.phi.clone());
                ControlFlow::Break(())
            });
            found
        })
    }
}

/// Candidate images preserving element order and conjugacy-class size.
pub(crate) fn class_preserving_candidates(src: &FiniteGroup, dst: &FiniteGroup, gens: &[Elem]) -> Vec<Vec<Elem>> {
    gens.iter()
        .map(|&g| {
            let (o, c) = (src.element_order(g), src.class_size(g));
            dst.elements()
                .filter(|&y| dst.element_order(y) == o && dst.class_size(y) == c)
                .collect()
        })
        .collect()
}

/// Checks `phi(x g) = phi(x) phi(g)` on every Cayley-graph edge and bijectivity.
pub(crate) fn is_isomorphism_on_generators(src: &FiniteGroup, dst: &FiniteGroup, gens: &[Elem], phi: &[Elem]) -> bool {
    if phi.len() != src.order() || src.order() != dst.order() {
        return false;
    }
    let mut seen = vec![false; dst.order()];
    if phi.iter().any(|&y| (y as usize) >= dst.order() || std::mem::replace(&mut seen[y as usize], true)) {
        return false;
    }
    phi[src.identity() as usize] == dst.identity()
        && src.elements().all(|x| {
            gens.iter()
                .all(|&g| phi[src.mul(x, g) as usize] == dst.mul(phi[x as usize], phi[g as usize]))
        })
}
