//! The subset geometry of `{1..n}`: every subset is an object typed by its
//! cardinality, incidence is containment either way, and `Sym(n)` acts
//! through its action on points.
//!
//! A subset is fixed by `g` exactly when it is a union of cycles of `g`, so
//! the number of fixed `k`-subsets is the coefficient of `x^k` in the product
//! of `1 + x^len` over the cycles of `g`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{build_action, separation_check, GroupAction, IncidenceGeometry, Scope, SeparationVerdict};
use crate::group::{named_group, power_map_rational, FiniteGroup, PowerMapVerdict};
use crate::perm::Permutation;
use crate::Limits;

/// Largest degree for which fixed-subset counts fit in `u64`.
pub const MAX_COUNT_DEGREE: usize = 63;

#[derive(Debug, Clone)]
pub struct SubsetGeometry {
    n: usize,
    action: GroupAction,
}

impl SubsetGeometry {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn geometry(&self) -> &IncidenceGeometry {
        self.action.geometry()
    }

    pub fn group(&self) -> &FiniteGroup {
        self.action.group()
    }

    /// Object id of a subset given as a bitmask over points `1..=n`.
    pub fn object(&self, mask: usize) -> usize {
        mask
    }
}

fn image_mask(g: &Permutation, mask: usize) -> usize {
    g.raw()
        .iter()
        .enumerate()
        .filter(|(p, _)| mask >> p & 1 == 1)
        .fold(0, |acc, (_, &q)| acc | 1 << q)
}

/// Builds the geometry on the `2^n` subsets, with object id equal to the
/// subset's bitmask, and the induced action of `sym:n`.
pub fn subset_geometry(n: usize, limits: &Limits) -> Result<SubsetGeometry> {
    if n == 0 {
        return Err(Error::OutOfRange("subset geometry needs n >= 1".into()));
    }
    if n > limits.max_subset_degree {
        return Err(Error::SubsetCap {
            n,
            cap: limits.max_subset_degree,
        });
    }
    let group = Arc::new(named_group(&format!("sym:{n}"), limits.max_order)?);
    let size = 1usize << n;
    let type_of = (0..size).map(|m| m.count_ones() as usize).collect();
    let mut pairs = Vec::new();
    for big in 0..size {
        // proper non-empty-difference submasks
        let mut sub = big;
        while sub > 0 {
            sub = (sub - 1) & big;
            pairs.push((sub, big));
        }
    }
    let type_names = (0..=n).map(|k| k.to_string()).collect();
    let geometry = IncidenceGeometry::new(type_names, type_of, pairs)?;
    let images: Vec<Vec<usize>> = group
        .generators()
        .iter()
        .map(|g| (0..size).map(|m| image_mask(g, m)).collect())
        .collect();
    let action = build_action(group, geometry, &images, limits)?;
    Ok(SubsetGeometry { n, action })
}

fn check_degree(g: &Permutation) -> Result<()> {
    if g.degree() > MAX_COUNT_DEGREE {
        return Err(Error::OutOfRange(format!(
            "degree {} exceeds {MAX_COUNT_DEGREE} for fixed-subset counts",
            g.degree()
        )));
    }
    Ok(())
}

/// Coefficients of `prod over cycles (1 + x^len)`, indexed `0..=degree`.
pub fn fix_vector(g: &Permutation) -> Result<Vec<u64>> {
    check_degree(g)?;
    let mut poly = vec![0u64; g.degree() + 1];
    poly[0] = 1;
    let mut top = 0;
    for len in g.cycle_type() {
        for k in (0..=top).rev() {
            poly[k + len] += poly[k];
        }
        top += len;
    }
    Ok(poly)
}

/// Number of `k`-subsets of the points mapped onto themselves by `g`.
pub fn fixed_k_subsets_count(g: &Permutation, k: usize) -> Result<u64> {
    if k > g.degree() {
        return Err(Error::OutOfRange(format!("k = {k} exceeds degree {}", g.degree())));
    }
    Ok(fix_vector(g)?[k])
}

/// Direct enumeration of fixed subsets by cardinality.
pub fn brute_force_fix_vector(g: &Permutation) -> Result<Vec<u64>> {
    if g.degree() > 24 {
        return Err(Error::OutOfRange("brute force limited to degree 24".into()));
    }
    let mut counts = vec![0u64; g.degree() + 1];
    for mask in 0..1usize << g.degree() {
        if image_mask(g, mask) == mask {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

/// Integer partitions of `n`, parts in increasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=rest {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// The permutation with consecutive cycles of the given lengths, shortest
/// first, which is the least member of its class.
pub fn standard_representative(parts: &[usize]) -> Permutation {
    let n: usize = parts.iter().sum();
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut start = 0;
    for len in sorted {
        for k in 0..len {
            images[start + k] = (start + (k + 1) % len) as u32;
        }
        start += len;
    }
    Permutation::from_zero_based(images)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleTypeRow {
    pub cycle_type: Vec<usize>,
    pub representative: String,
    pub fix_vector: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleTypeVerdict {
    pub holds: bool,
    /// Two distinct cycle types with equal fix vectors.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
    pub rows: Vec<CycleTypeRow>,
}

/// Checks that distinct cycle types of degree `n` have distinct fix vectors,
/// and that the generating-function counts match direct enumeration.
pub fn cycle_type_check(n: usize, limits: &Limits) -> Result<CycleTypeVerdict> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if n > limits.max_subset_degree {
        return Err(Error::SubsetCap {
            n,
            cap: limits.max_subset_degree,
        });
    }
    let mut reps: Vec<Permutation> = partitions(n).iter().map(|p| standard_representative(p)).collect();
    reps.sort_by_key(|r| (r.order(), r.clone()));
    let mut rows = Vec::with_capacity(reps.len());
    for r in &reps {
        let fv = fix_vector(r)?;
        let brute = brute_force_fix_vector(r)?;
        if fv != brute {
            return Err(Error::Disagreement(format!(
                "fix vector of {r}: generating function {fv:?}, enumeration {brute:?}"
            )));
        }
        rows.push(CycleTypeRow {
            cycle_type: r.cycle_type(),
            representative: r.to_string(),
            fix_vector: fv,
        });
    }
    let vectors: Vec<&Vec<u64>> = rows.iter().map(|r| &r.fix_vector).collect();
    let witness = crate::geometry::first_collision(&vectors)
        .map(|(a, b)| (rows[a].cycle_type.clone(), rows[b].cycle_type.clone()));
    Ok(CycleTypeVerdict {
        holds: witness.is_none(),
        witness,
        rows,
    })
}

#[derive(Debug, Clone)]
pub struct SymmetricDemo {
    pub geometry: SubsetGeometry,
    pub separation: SeparationVerdict,
    pub power_map: PowerMapVerdict,
    pub lemma: CycleTypeVerdict,
}

/// Runs the subset-geometry argument for `sym:n`: singleton fixed-flag counts
/// separate its classes, agreeing with the power-map oracle and with the
/// generating-function counts.
pub fn symmetric_rationality_demo(n: usize, limits: &Limits) -> Result<SymmetricDemo> {
    let geometry = subset_geometry(n, limits)?;
    let separation = separation_check(geometry.action(), Scope::Singletons, limits)?;
    let power_map = power_map_rational(geometry.group());
    let lemma = cycle_type_check(n, limits)?;
    for (class, row) in separation.table.rows.iter().enumerate() {
        let rep = geometry.group().representative(class);
        if *row != fix_vector(rep)? {
            return Err(Error::Disagreement(format!(
                "flag counts {row:?} differ from fixed-subset counts for {rep}"
            )));
        }
    }
    if !(separation.separates && power_map.rational && lemma.holds) {
        return Err(Error::Disagreement(format!(
            "sym:{n}: separation {}, power map {}, lemma {}",
            separation.separates, power_map.rational, lemma.holds
        )));
    }
    Ok(SymmetricDemo {
        geometry,
        separation,
        power_map,
        lemma,
    })
}
