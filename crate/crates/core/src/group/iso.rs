use std::collections::BTreeMap;

use super::search::{class_preserving_candidates, is_isomorphism_on_generators, GenPlan, HomSearch};
use super::{FiniteGroup, Homomorphism};
use crate::exec::Execution;

/// Isomorphism invariants used to screen before searching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupProfile {
    pub order: usize,
    pub abelian: bool,
    pub invariants: Option<Vec<u64>>,
    pub order_histogram: BTreeMap<u32, usize>,
    /// multiset of (element order, class size) over all elements
    pub order_class_histogram: BTreeMap<(u32, u32), usize>,
    pub center_order: usize,
    pub derived_order: usize,
    pub class_sizes: Vec<u32>,
    pub upper_central_orders: Vec<usize>,
}

impl GroupProfile {
    pub fn of(g: &FiniteGroup) -> Self {
        let abelian = g.is_abelian();
        let mut order_histogram = BTreeMap::new();
        let mut order_class_histogram = BTreeMap::new();
        for x in g.elements() {
            *order_histogram.entry(g.element_order(x)).or_default() += 1;
            *order_class_histogram
                .entry((g.element_order(x), g.class_size(x)))
                .or_default() += 1;
        }
        let mut class_sizes = g.conjugacy_classes().sizes.clone();
        class_sizes.sort_unstable();
        GroupProfile {
            order: g.order(),
            abelian,
            invariants: abelian.then(|| g.abelian_invariants().unwrap().factors),
            order_histogram,
            order_class_histogram,
            center_order: g.center().order(),
            derived_order: if abelian { 1 } else { g.derived_subgroup().order() },
            class_sizes,
            upper_central_orders: g.upper_central_series().iter().map(|s| s.order()).collect(),
        }
    }
}

/// An isomorphism `g -> h`, or `None` when the groups are not isomorphic.
pub fn isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<Homomorphism> {
    isomorphic_with(g, h, Execution::default())
}

pub fn isomorphic_with(g: &FiniteGroup, h: &FiniteGroup, exec: Execution) -> Option<Homomorphism> {
    if g.order() != h.order() {
        return None;
    }
    if GroupProfile::of(g) != GroupProfile::of(h) {
        return None;
    }
    let gens = g.generating_set();
    let plan = GenPlan::new(g, gens);
    let search = HomSearch {
        src: g,
        dst: h,
        plan: &plan,
        candidates: class_preserving_candidates(g, h, gens),
        injective: true,
    };
    let phi = search.find_first(exec)?;
    assert!(
        is_isomorphism_on_generators(g, h, gens, &phi),
        "search returned a map that is not an isomorphism"
    );
    Some(Homomorphism { image: phi })
}
