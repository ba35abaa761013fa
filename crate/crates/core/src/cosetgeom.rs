//! Coset geometries: type `i` objects are the left cosets of the `i`-th
//! subgroup, two objects are incident when equal or of different types with
//! intersecting member sets, and the group acts by left multiplication.

use std::sync::Arc;

use crate::error::Result;
use crate::geometry::{build_action, GroupAction, IncidenceGeometry};
use crate::group::{coset_partition, Coset, FiniteGroup, Subgroup};
use crate::Limits;

#[derive(Debug, Clone)]
pub struct CosetGeometry {
    action: GroupAction,
    subgroups: Vec<Subgroup>,
    /// Class representative (element index) generating each type's subgroup,
    /// for the cyclic construction.
    reps: Option<Vec<usize>>,
    cosets: Vec<Vec<Coset>>,
    coset_of: Vec<Vec<usize>>,
    offsets: Vec<usize>,
}

/// The coset geometry of `<g_1>, ..., <g_k>` for the canonical class
/// representatives `g_i`, one type per conjugacy class.
pub fn build_cyclic_coset_geometry(group: Arc<FiniteGroup>, limits: &Limits) -> Result<CosetGeometry> {
    let reps: Vec<usize> = group.classes().iter().map(|c| c.representative).collect();
    let subgroups = reps.iter().map(|&g| group.cyclic(g)).collect();
    let mut geometry = build_coset_geometry(group, subgroups, limits)?;
    geometry.reps = Some(reps);
    Ok(geometry)
}

/// The coset geometry of an arbitrary subgroup list; list positions are
/// distinct types even when two subgroups coincide.
pub fn build_coset_geometry(
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    limits: &Limits,
) -> Result<CosetGeometry> {
    let mut cosets = Vec::with_capacity(subgroups.len());
    let mut coset_of = Vec::with_capacity(subgroups.len());
    let mut offsets = Vec::with_capacity(subgroups.len());
    let mut type_of = Vec::new();
    for (i, h) in subgroups.iter().enumerate() {
        let (cs, map) = coset_partition(&group, h);
        offsets.push(type_of.len());
        type_of.extend(std::iter::repeat_n(i, cs.len()));
        cosets.push(cs);
        coset_of.push(map);
    }

    let mut pairs = Vec::new();
    for i in 0..subgroups.len() {
        for (ci, coset) in cosets[i].iter().enumerate() {
            let a = offsets[i] + ci;
            for j in i + 1..subgroups.len() {
                let mut met: Vec<usize> = coset.members.iter().map(|&x| coset_of[j][x]).collect();
                met.sort_unstable();
                met.dedup();
                pairs.extend(met.into_iter().map(|cj| (a, offsets[j] + cj)));
            }
        }
    }
    let type_names = (1..=subgroups.len()).map(|i| i.to_string()).collect();
    let geometry = IncidenceGeometry::new(type_names, type_of, pairs)?;

    let generator_images: Vec<Vec<usize>> = group
        .generator_indices()
        .into_iter()
        .map(|s| {
            (0..subgroups.len())
                .flat_map(|i| {
                    let group = &group;
                    let (cosets, coset_of, offset) = (&cosets[i], &coset_of[i], offsets[i]);
                    cosets.iter().map(move |c| offset + coset_of[group.mul(s, c.canonical)])
                })
                .collect()
        })
        .collect();
    let action = build_action(group, geometry, &generator_images, limits)?;

    Ok(CosetGeometry {
        action,
        subgroups,
        reps: None,
        cosets,
        coset_of,
        offsets,
    })
}

impl CosetGeometry {
    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn geometry(&self) -> &IncidenceGeometry {
        self.action.geometry()
    }

    pub fn group(&self) -> &FiniteGroup {
        self.action.group()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn representatives(&self) -> Option<&[usize]> {
        self.reps.as_deref()
    }

    pub fn cosets(&self, t: usize) -> &[Coset] {
        &self.cosets[t]
    }

    /// Object id of the type `t` coset containing element `x`.
    pub fn object_containing(&self, t: usize, x: usize) -> usize {
        self.offsets[t] + self.coset_of[t][x]
    }

    /// `(type, coset)` behind an object id.
    pub fn coset_of_object(&self, object: usize) -> (usize, &Coset) {
        let t = self.geometry().type_of(object);
        (t, &self.cosets[t][object - self.offsets[t]])
    }
}
