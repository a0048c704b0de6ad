//! Summary of the structural invariants of a group.

use std::fmt;

use serde::Serialize;

use crate::automorphism::{abelianization, automorphism_group, is_stable_given};
use crate::error::Result;
use crate::exec::Execution;
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Nilpotency {
    pub nilpotent: bool,
    pub class: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub order: usize,
    pub center_order: usize,
    pub derived_order: usize,
    /// invariant factors of `G / G'`
    pub abelian_invariants: Vec<u64>,
    pub nilpotency: Nilpotency,
    pub aut_order: usize,
    pub inn_order: usize,
    pub is_complete: bool,
    pub is_stable: bool,
    pub upper_central_orders: Vec<usize>,
}

pub fn report(g: &FiniteGroup) -> Result<Report> {
    let center_order = g.center().order();
    let (ab, _) = abelianization(g)?;
    let (nilpotent, class) = g.is_nilpotent();
    let aut = automorphism_group(g)?;
    let stability = is_stable_given(g, &aut, Execution::default());
    Ok(Report {
        order: g.order(),
        center_order,
        derived_order: g.order() / ab.order(),
        abelian_invariants: ab.abelian_invariants()?.factors,
        nilpotency: Nilpotency { nilpotent, class },
        aut_order: aut.order(),
        inn_order: g.order() / center_order,
        is_complete: center_order == 1 && aut.order() == g.order(),
        is_stable: stability.stable,
        upper_central_orders: g.upper_central_series().iter().map(Subgroup::order).collect(),
    })
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let class = match self.nilpotency.class {
            Some(c) => format!("yes (class {c})"),
            None => "no".into(),
        };
        writeln!(f, "order:                {}", self.order)?;
        writeln!(f, "center order:         {}", self.center_order)?;
        writeln!(f, "derived order:        {}", self.derived_order)?;
        writeln!(f, "abelian invariants:   {:?}", self.abelian_invariants)?;
        writeln!(f, "nilpotent:            {class}")?;
        writeln!(f, "upper central orders: {:?}", self.upper_central_orders)?;
        writeln!(f, "|Aut|:                {}", self.aut_order)?;
        writeln!(f, "|Inn|:                {}", self.inn_order)?;
        writeln!(f, "complete:             {}", self.is_complete)?;
        writeln!(f, "stable:               {}", self.is_stable)
    }
}
