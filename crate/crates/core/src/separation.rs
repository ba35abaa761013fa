//! Class functions, permutation characters `1_H^G`, and separation of
//! conjugacy classes.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;

use crate::cosetgeom::build_cyclic_coset_geometry;
use crate::error::{Error, Result};
use crate::geometry::{first_collision, flags_of_type, separation_check, Flag, GroupAction, Scope};
use crate::group::{coset_partition, FiniteGroup, Subgroup};
use crate::Limits;

/// One integer per conjugacy class, in the group's class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction<'g> {
    group: &'g FiniteGroup,
    values: Vec<i64>,
}

impl<'g> ClassFunction<'g> {
    pub fn new(group: &'g FiniteGroup, values: Vec<i64>) -> Result<Self> {
        if values.len() != group.class_count() {
            return Err(Error::Precondition(format!(
                "{} values for {} classes",
                values.len(),
                group.class_count()
            )));
        }
        Ok(ClassFunction { group, values })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn at_class(&self, class: usize) -> i64 {
        self.values[class]
    }

    pub fn eval(&self, element: usize) -> i64 {
        self.values[self.group.class_of(element)]
    }
}

/// Number of cosets `xH` with `gxH = xH`, for `g` in each class.
///
/// The direct count is cross-checked against `|{x : x^-1 g x in H}| / |H|`.
pub fn perm_character<'g>(group: &'g FiniteGroup, subgroup: &Subgroup) -> Result<ClassFunction<'g>> {
    let (cosets, coset_of) = coset_partition(group, subgroup);
    let mut values = Vec::with_capacity(group.class_count());
    for class in group.classes() {
        let g = class.representative;
        let direct = cosets
            .iter()
            .enumerate()
            .filter(|(ci, c)| coset_of[group.mul(g, c.canonical)] == *ci)
            .count();
        let conjugates_in_h = (0..group.order())
            .filter(|&x| subgroup.contains(group.mul(group.mul(group.inv(x), g), x)))
            .count();
        if conjugates_in_h % subgroup.order() != 0 || conjugates_in_h / subgroup.order() != direct {
            return Err(Error::Disagreement(format!(
                "fixed cosets {direct} vs conjugate count {conjugates_in_h}/{} at {}",
                subgroup.order(),
                group.element(g)
            )));
        }
        values.push(direct as i64);
    }
    Ok(ClassFunction { group, values })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatesVerdict {
    pub separates: bool,
    /// First pair of classes, in class order, on which every function agrees.
    pub witness: Option<(usize, usize)>,
}

/// Whether the value vectors of `functions` differ on every pair of classes.
pub fn separates(group: &FiniteGroup, functions: &[ClassFunction<'_>]) -> Result<SeparatesVerdict> {
    if functions.iter().any(|f| f.group != group) {
        return Err(Error::MixedGroups);
    }
    let rows: Vec<Vec<i64>> = (0..group.class_count())
        .map(|c| functions.iter().map(|f| f.values[c]).collect())
        .collect();
    let witness = first_collision(&rows);
    Ok(SeparatesVerdict {
        separates: witness.is_none(),
        witness,
    })
}

/// The permutation characters of `<g_i>` for each class representative.
pub fn cyclic_characters(group: &FiniteGroup) -> Result<Vec<ClassFunction<'_>>> {
    group
        .classes()
        .iter()
        .map(|c| perm_character(group, &group.cyclic(c.representative)))
        .collect()
}

/// Do the characters `1_<g_i>^G` separate the conjugacy classes?
pub fn criterion2(group: &FiniteGroup) -> Result<SeparatesVerdict> {
    separates(group, &cyclic_characters(group)?)
}

/// A single permutation character `sum m_i 1_{H_i}^G` injective on classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingRepresentation {
    pub parts: Vec<(Subgroup, BigUint)>,
    /// Value per class, in class order.
    pub character: Vec<BigUint>,
}

impl SeparatingRepresentation {
    pub fn degree(&self) -> &BigUint {
        &self.character[0]
    }
}

/// Weights the cyclic characters by `B^(i-1)` with `B` one more than their
/// largest value, so distinct value vectors give distinct weighted sums.
pub fn criterion4_build(group: &FiniteGroup) -> Result<SeparatingRepresentation> {
    let chars = cyclic_characters(group)?;
    if !separates(group, &chars)?.separates {
        return Err(Error::Precondition(
            "the cyclic permutation characters do not separate classes".into(),
        ));
    }
    let base = BigUint::from(chars.iter().flat_map(|c| c.values.iter().copied()).max().unwrap_or(0) as u64 + 1);
    let mut weight = BigUint::from(1u32);
    let mut parts = Vec::with_capacity(chars.len());
    for c in group.classes() {
        parts.push((group.cyclic(c.representative), weight.clone()));
        weight *= &base;
    }
    let character: Vec<BigUint> = (0..group.class_count())
        .map(|k| {
            chars
                .iter()
                .zip(&parts)
                .map(|(chi, (_, m))| m * BigUint::from(chi.values[k] as u64))
                .sum()
        })
        .collect();
    if first_collision(&character).is_some() {
        return Err(Error::Disagreement("weighted character is not injective".into()));
    }
    Ok(SeparatingRepresentation { parts, character })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometricVerdict {
    pub rational: bool,
    pub witness: Option<(usize, usize)>,
}

/// Rationality decided on the cyclic coset geometry: the group is rational
/// iff singleton fixed-flag counts there separate its classes.
pub fn rationality_geometric(group: Arc<FiniteGroup>, limits: &Limits) -> Result<GeometricVerdict> {
    let cg = build_cyclic_coset_geometry(group, limits)?;
    let v = separation_check(cg.action(), Scope::Singletons, limits)?;
    Ok(GeometricVerdict {
        rational: v.separates,
        witness: v.witness,
    })
}

/// An orbit of flags on which two elements fix different numbers of flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitWitness {
    /// Position of the orbit, orbits ordered by their first flag.
    pub orbit: usize,
    pub flags: Vec<Flag>,
    pub fixed_by_g: usize,
    pub fixed_by_h: usize,
    /// Stabilizer of `flags[0]`; the orbit is the coset space of it.
    pub stabilizer: Subgroup,
}

pub fn orbit_witness(action: &GroupAction, g: usize, h: usize, types: &[usize], limit: usize) -> Result<OrbitWitness> {
    let group = action.group();
    let flags = flags_of_type(action.geometry(), types, limit)?;
    let index: HashMap<&[usize], usize> = flags
        .iter()
        .enumerate()
        .map(|(i, f)| (f.members.as_slice(), i))
        .collect();

    let mut parent: Vec<usize> = (0..flags.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for s in group.generator_indices() {
        for (i, f) in flags.iter().enumerate() {
            // types are preserved, so the image is still in type order
            let image: Vec<usize> = f.members.iter().map(|&x| action.image(s, x)).collect();
            let j = index[image.as_slice()];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }

    let mut orbit_ids: HashMap<usize, usize> = HashMap::new();
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..flags.len() {
        let root = find(&mut parent, i);
        let id = *orbit_ids.entry(root).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[id].push(i);
    }

    let fixes = |e: usize, f: &Flag| f.members.iter().all(|&x| action.image(e, x) == x);
    for (k, orbit) in orbits.iter().enumerate() {
        let fg = orbit.iter().filter(|&&i| fixes(g, &flags[i])).count();
        let fh = orbit.iter().filter(|&&i| fixes(h, &flags[i])).count();
        if fg != fh {
            let first = &flags[orbit[0]];
            let stab = (0..group.order()).filter(|&e| fixes(e, first)).collect();
            return Ok(OrbitWitness {
                orbit: k,
                flags: orbit.iter().map(|&i| flags[i].clone()).collect(),
                fixed_by_g: fg,
                fixed_by_h: fh,
                stabilizer: Subgroup::from_indices(group, stab)?,
            });
        }
    }
    Err(Error::Precondition(
        "the two elements fix equally many flags on every orbit".into(),
    ))
}
