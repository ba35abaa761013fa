//! Incidence geometries `(X, *, t)`, their flags, group actions on them by
//! automorphisms, and fixed-flag counts.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::Limits;

/// Objects `0..len` with a type each and an incidence relation.
///
/// Type labels are indices into `type_names`; a type need not have objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceGeometry {
    type_names: Vec<String>,
    type_of: Vec<usize>,
    // sorted by (type, id) so that neighbours of one type form a contiguous run
    adjacency: Vec<Vec<usize>>,
    by_type: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Reflexivity,
    Symmetry,
    SameType,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Reflexivity => "reflexivity",
            Axiom::Symmetry => "symmetry",
            Axiom::SameType => "same-type",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    Ok,
    Violation { axiom: Axiom, a: usize, b: usize },
}

impl IncidenceGeometry {
    /// Builds a geometry from incident pairs, adding the reflexive and
    /// symmetric closure, and rejects distinct incident objects of one type.
    pub fn new(
        type_names: Vec<String>,
        type_of: Vec<usize>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = type_of.len();
        let mut rel: Vec<Vec<usize>> = (0..n).map(|a| vec![a]).collect();
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidGeometry(format!("pair ({a}, {b}) out of range")));
            }
            rel[a].push(b);
            rel[b].push(a);
        }
        let g = Self::from_relation(type_names, type_of, rel)?;
        match validate_geometry(&g) {
            Validation::Ok => Ok(g),
            Validation::Violation { axiom, a, b } => Err(Error::InvalidGeometry(format!(
                "{} violated by objects ({a}, {b})",
                axiom.name()
            ))),
        }
    }

    /// Takes the relation exactly as given, `relation[a]` listing every `b`
    /// with `a * b`. Only index ranges are checked; see [`validate_geometry`].
    pub fn from_relation(type_names: Vec<String>, type_of: Vec<usize>, relation: Vec<Vec<usize>>) -> Result<Self> {
        let n = type_of.len();
        if relation.len() != n {
            return Err(Error::InvalidGeometry(format!(
                "{} relation rows for {n} objects",
                relation.len()
            )));
        }
        if let Some(&t) = type_of.iter().find(|&&t| t >= type_names.len()) {
            return Err(Error::InvalidGeometry(format!("type label {t} out of range")));
        }
        let mut by_type = vec![Vec::new(); type_names.len()];
        for (x, &t) in type_of.iter().enumerate() {
            by_type[t].push(x);
        }
        let mut adjacency = relation;
        for row in &mut adjacency {
            if let Some(&b) = row.iter().find(|&&b| b >= n) {
                return Err(Error::InvalidGeometry(format!("object {b} out of range")));
            }
            row.sort_unstable_by_key(|&b| (type_of[b], b));
            row.dedup();
        }
        Ok(IncidenceGeometry {
            type_names,
            type_of,
            adjacency,
            by_type,
        })
    }

    pub fn len(&self) -> usize {
        self.type_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.type_of.is_empty()
    }

    pub fn type_count(&self) -> usize {
        self.type_names.len()
    }

    pub fn type_name(&self, t: usize) -> &str {
        &self.type_names[t]
    }

    pub fn type_names(&self) -> &[String] {
        &self.type_names
    }

    pub fn type_of(&self, x: usize) -> usize {
        self.type_of[x]
    }

    pub fn objects_of_type(&self, t: usize) -> &[usize] {
        &self.by_type[t]
    }

    pub fn incident(&self, a: usize, b: usize) -> bool {
        let key = (self.type_of[b], b);
        self.adjacency[a]
            .binary_search_by_key(&key, |&x| (self.type_of[x], x))
            .is_ok()
    }

    /// Objects `b` with `a * b`, ordered by type, then id.
    pub fn neighbours(&self, a: usize) -> &[usize] {
        &self.adjacency[a]
    }

    fn neighbours_of_type(&self, a: usize, t: usize) -> &[usize] {
        let row = &self.adjacency[a];
        let lo = row.partition_point(|&x| self.type_of[x] < t);
        let hi = row.partition_point(|&x| self.type_of[x] <= t);
        &row[lo..hi]
    }
}

/// Checks reflexivity, symmetry and the same-type axiom, reporting the first
/// violation in object-id order.
pub fn validate_geometry(geometry: &IncidenceGeometry) -> Validation {
    for a in 0..geometry.len() {
        if !geometry.incident(a, a) {
            return Validation::Violation {
                axiom: Axiom::Reflexivity,
                a,
                b: a,
            };
        }
        let mut row = geometry.neighbours(a).to_vec();
        row.sort_unstable();
        for b in row {
            if !geometry.incident(b, a) {
                return Validation::Violation {
                    axiom: Axiom::Symmetry,
                    a,
                    b,
                };
            }
            if a != b && geometry.type_of(a) == geometry.type_of(b) {
                return Validation::Violation {
                    axiom: Axiom::SameType,
                    a: a.min(b),
                    b: a.max(b),
                };
            }
        }
    }
    Validation::Ok
}

/// Pairwise incident objects, one per type of the flag's type set, listed
/// in increasing type order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub members: Vec<usize>,
}

fn check_types(geometry: &IncidenceGeometry, types: &[usize]) -> Result<Vec<usize>> {
    let mut j = types.to_vec();
    j.sort_unstable();
    j.dedup();
    if let Some(&t) = j.iter().find(|&&t| t >= geometry.type_count()) {
        return Err(Error::Precondition(format!("type {t} is not a type of the geometry")));
    }
    Ok(j)
}

// Backtracks over the types of `j` in increasing order, choosing objects
// accepted by `keep` that are incident to everything chosen so far.
fn walk_flags(
    geometry: &IncidenceGeometry,
    j: &[usize],
    keep: &dyn Fn(usize) -> bool,
    limit: usize,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<u64> {
    fn go(
        geometry: &IncidenceGeometry,
        j: &[usize],
        keep: &dyn Fn(usize) -> bool,
        limit: usize,
        visit: &mut dyn FnMut(&[usize]),
        chosen: &mut Vec<usize>,
        count: &mut u64,
    ) -> Result<()> {
        let depth = chosen.len();
        if depth == j.len() {
            *count += 1;
            if *count > limit as u64 {
                return Err(Error::FlagLimit { limit });
            }
            visit(chosen);
            return Ok(());
        }
        let t = j[depth];
        let candidates = match chosen.first() {
            None => geometry.objects_of_type(t),
            Some(&first) => geometry.neighbours_of_type(first, t),
        };
        for &c in candidates {
            if keep(c) && chosen.iter().skip(1).all(|&x| geometry.incident(x, c)) {
                chosen.push(c);
                go(geometry, j, keep, limit, visit, chosen, count)?;
                chosen.pop();
            }
        }
        Ok(())
    }
    let mut count = 0;
    go(
        geometry,
        j,
        keep,
        limit,
        visit,
        &mut Vec::with_capacity(j.len()),
        &mut count,
    )?;
    Ok(count)
}

/// Every flag whose type set is exactly `types`; `[]` gives the empty flag.
pub fn flags_of_type(geometry: &IncidenceGeometry, types: &[usize], limit: usize) -> Result<Vec<Flag>> {
    let j = check_types(geometry, types)?;
    let mut out = Vec::new();
    walk_flags(geometry, &j, &|_| true, limit, &mut |f| {
        out.push(Flag { members: f.to_vec() })
    })?;
    Ok(out)
}

/// A homomorphism from a group into the automorphisms of a geometry, stored
/// as one object permutation per group element.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: Arc<FiniteGroup>,
    geometry: IncidenceGeometry,
    images: Vec<u32>,
}

/// Extends object permutations given for each generator of `group` to the
/// whole group, checking that they are automorphisms and that the extension
/// is well defined.
pub fn build_action(
    group: Arc<FiniteGroup>,
    geometry: IncidenceGeometry,
    generator_images: &[Vec<usize>],
    limits: &Limits,
) -> Result<GroupAction> {
    let n = geometry.len();
    if generator_images.len() != group.generators().len() {
        return Err(Error::Precondition(format!(
            "{} generator images for {} generators",
            generator_images.len(),
            group.generators().len()
        )));
    }
    let cells = group.order().saturating_mul(n);
    if cells > limits.max_action_cells {
        return Err(Error::ActionCap {
            cells,
            cap: limits.max_action_cells,
        });
    }
    for (gi, sigma) in generator_images.iter().enumerate() {
        check_automorphism(&geometry, gi, sigma)?;
    }

    const UNSET: u32 = u32::MAX;
    let mut images = vec![UNSET; cells];
    let id = group.identity();
    for x in 0..n {
        images[id * n + x] = x as u32;
    }
    let gens = group.generator_indices();
    let mut assigned = vec![false; group.order()];
    assigned[id] = true;
    let mut queue = std::collections::VecDeque::from([id]);
    let mut row = vec![0u32; n];
    while let Some(x) = queue.pop_front() {
        for (gi, &s) in gens.iter().enumerate() {
            let y = group.mul(s, x);
            let sigma = &generator_images[gi];
            for o in 0..n {
                row[o] = sigma[images[x * n + o] as usize] as u32;
            }
            let target = &mut images[y * n..(y + 1) * n];
            if !assigned[y] {
                assigned[y] = true;
                target.copy_from_slice(&row);
                queue.push_back(y);
            } else if target != &row[..] {
                return Err(Error::IllDefinedAction { element: y });
            }
        }
    }
    Ok(GroupAction {
        group,
        geometry,
        images,
    })
}

fn check_automorphism(geometry: &IncidenceGeometry, generator: usize, sigma: &[usize]) -> Result<()> {
    let n = geometry.len();
    let mut seen = vec![false; n];
    if sigma.len() != n || !sigma.iter().all(|&y| y < n && !std::mem::replace(&mut seen[y], true)) {
        return Err(Error::NotBijection { generator });
    }
    for (x, &y) in sigma.iter().enumerate() {
        if geometry.type_of(y) != geometry.type_of(x) {
            return Err(Error::TypeNotPreserved { generator, object: x });
        }
    }
    // sigma is a bijection, so mapping the finite relation into itself
    // means mapping it onto itself, and sigma^-1 preserves it too
    for a in 0..n {
        for &b in geometry.neighbours(a) {
            if !geometry.incident(sigma[a], sigma[b]) {
                return Err(Error::IncidenceNotPreserved { generator, a, b });
            }
        }
    }
    Ok(())
}

impl GroupAction {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn shared_group(&self) -> Arc<FiniteGroup> {
        Arc::clone(&self.group)
    }

    pub fn geometry(&self) -> &IncidenceGeometry {
        &self.geometry
    }

    /// Object permutation of the element with index `g`.
    pub fn element_images(&self, g: usize) -> &[u32] {
        let n = self.geometry.len();
        &self.images[g * n..(g + 1) * n]
    }

    pub fn image(&self, g: usize, object: usize) -> usize {
        self.images[g * self.geometry.len() + object] as usize
    }

    /// True when `g` maps the flag onto itself as a set.
    pub fn fixes_flag_setwise(&self, g: usize, flag: &Flag) -> bool {
        let mut image: Vec<usize> = flag.members.iter().map(|&x| self.image(g, x)).collect();
        image.sort_unstable();
        let mut members = flag.members.clone();
        members.sort_unstable();
        image == members
    }
}

/// Number of flags of type `types` fixed by element `g`.
///
/// Types are preserved and a flag holds one object per type, so a flag is
/// fixed setwise exactly when each member is fixed; only fixed objects are
/// explored.
pub fn fix_count(action: &GroupAction, g: usize, types: &[usize], limit: usize) -> Result<u64> {
    let j = check_types(action.geometry(), types)?;
    let images = action.element_images(g);
    walk_flags(action.geometry(), &j, &|x| images[x] as usize == x, limit, &mut |_| {})
}

/// Fixed-flag counts for each class representative (rows, in class order)
/// and each type set (columns).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixTable {
    pub columns: Vec<Vec<usize>>,
    pub rows: Vec<Vec<u64>>,
}

pub fn fix_table(action: &GroupAction, columns: &[Vec<usize>], limit: usize) -> Result<FixTable> {
    let group = action.group();
    let rows = group
        .classes()
        .iter()
        .map(|c| {
            columns
                .iter()
                .map(|j| fix_count(action, c.representative, j, limit))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FixTable {
        columns: columns.to_vec(),
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Singletons,
    AllSubsets,
}

/// Type sets considered under `scope`, ordered by size, then
/// lexicographically.
pub fn scope_columns(type_count: usize, scope: Scope, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    match scope {
        Scope::Singletons => Ok((0..type_count).map(|t| vec![t]).collect()),
        Scope::AllSubsets => {
            if type_count > limits.max_types {
                return Err(Error::TypeCap { cap: limits.max_types });
            }
            Ok(type_subsets(type_count))
        }
    }
}

/// All subsets of `0..n`, by size and then lexicographically.
pub fn type_subsets(n: usize) -> Vec<Vec<usize>> {
    fn combos(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            combos(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << n.min(20));
    for k in 0..=n {
        combos(n, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Lexicographically least pair `(i, j)`, `i < j`, with equal rows.
pub(crate) fn first_collision<T: Eq + Hash>(rows: &[T]) -> Option<(usize, usize)> {
    let mut first_seen: HashMap<&T, usize> = HashMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (j, row) in rows.iter().enumerate() {
        match first_seen.get(row) {
            Some(&i) => {
                // the first repeat of each row pairs it with its first occurrence
                if best.is_none_or(|(bi, _)| i < bi) {
                    best = Some((i, j));
                }
            }
            None => {
                first_seen.insert(row, j);
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationVerdict {
    pub separates: bool,
    /// Class indices of the first pair of classes with equal fix vectors.
    pub witness: Option<(usize, usize)>,
    pub table: FixTable,
}

/// Whether equal fixed-flag counts over the scope's type sets force
/// conjugacy.
pub fn separation_check(action: &GroupAction, scope: Scope, limits: &Limits) -> Result<SeparationVerdict> {
    let columns = scope_columns(action.geometry().type_count(), scope, limits)?;
    let table = fix_table(action, &columns, limits.max_flags)?;
    let witness = first_collision(&table.rows);
    Ok(SeparationVerdict {
        separates: witness.is_none(),
        witness,
        table,
    })
}

/// Graphviz text: one node per object labelled `id:type`, one undirected
/// edge per incident pair of distinct objects.
pub fn dot_export(geometry: &IncidenceGeometry) -> String {
    let mut out = String::from("graph incidence {\n");
    for x in 0..geometry.len() {
        let _ = writeln!(
            out,
            "  {x} [label=\"{x}:{}\"];",
            geometry.type_name(geometry.type_of(x))
        );
    }
    for a in 0..geometry.len() {
        let mut row: Vec<usize> = geometry.neighbours(a).iter().copied().filter(|&b| b > a).collect();
        row.sort_unstable();
        for b in row {
            let _ = writeln!(out, "  {a} -- {b};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named_group;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|t| t.to_string()).collect()
    }

    // a path a - b - c with types 1, 2, 1
    fn path() -> IncidenceGeometry {
        IncidenceGeometry::new(names(2), vec![0, 1, 0], [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn validation_reports_first_violation() {
        assert_eq!(validate_geometry(&path()), Validation::Ok);

        let asym = IncidenceGeometry::from_relation(names(2), vec![0, 1], vec![vec![0, 1], vec![1]]).unwrap();
        assert_eq!(
            validate_geometry(&asym),
            Validation::Violation {
                axiom: Axiom::Symmetry,
                a: 0,
                b: 1
            }
        );

        let same = IncidenceGeometry::from_relation(names(1), vec![0, 0], vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(
            validate_geometry(&same),
            Validation::Violation {
                axiom: Axiom::SameType,
                a: 0,
                b: 1
            }
        );

        let irreflexive = IncidenceGeometry::from_relation(names(1), vec![0, 0], vec![vec![0], vec![]]).unwrap();
        assert_eq!(
            validate_geometry(&irreflexive),
            Validation::Violation {
                axiom: Axiom::Reflexivity,
                a: 1,
                b: 1
            }
        );

        assert!(matches!(
            IncidenceGeometry::new(names(1), vec![0, 0], [(0, 1)]),
            Err(Error::InvalidGeometry(_))
        ));
        assert!(IncidenceGeometry::new(names(1), vec![3], []).is_err());
    }

    #[test]
    fn flag_enumeration() {
        let g = path();
        assert_eq!(flags_of_type(&g, &[], 10).unwrap(), vec![Flag { members: vec![] }]);
        assert_eq!(flags_of_type(&g, &[0], 10).unwrap().len(), 2);
        let full = flags_of_type(&g, &[1, 0], 10).unwrap();
        assert_eq!(full, vec![Flag { members: vec![0, 1] }, Flag { members: vec![2, 1] }]);
        assert_eq!(
            flags_of_type(&g, &[0, 1], 1).unwrap_err(),
            Error::FlagLimit { limit: 1 }
        );
        assert!(flags_of_type(&g, &[2], 10).is_err());

        // a type with no objects yields no flags
        let sparse = IncidenceGeometry::new(names(3), vec![0, 1], [(0, 1)]).unwrap();
        assert!(flags_of_type(&sparse, &[2], 10).unwrap().is_empty());
        assert!(flags_of_type(&sparse, &[0, 2], 10).unwrap().is_empty());
    }

    #[test]
    fn type_subsets_order() {
        assert_eq!(
            type_subsets(3),
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn collisions_are_lexicographically_first() {
        assert_eq!(first_collision(&[1, 2, 3]), None);
        assert_eq!(first_collision(&[5, 7, 7, 5]), Some((0, 3)));
        assert_eq!(first_collision(&[1, 2, 2, 1, 2]), Some((0, 3)));
        assert_eq!(first_collision(&[4, 2, 3, 2, 3]), Some((1, 3)));
    }

    #[test]
    fn trivial_group_action_fixes_everything() {
        let g = Arc::new(named_group("cyc:1", 10).unwrap());
        let action = build_action(g, path(), &[vec![0, 1, 2]], &Limits::default()).unwrap();
        assert_eq!(fix_count(&action, 0, &[0, 1], 100).unwrap(), 2);
        let v = separation_check(&action, Scope::AllSubsets, &Limits::default()).unwrap();
        assert!(v.separates);
    }

    #[test]
    fn action_errors() {
        let limits = Limits::default();
        let c2 = Arc::new(named_group("cyc:2", 10).unwrap());
        // swapping a type-1 object with the type-2 one
        assert_eq!(
            build_action(c2.clone(), path(), &[vec![1, 0, 2]], &limits).unwrap_err(),
            Error::TypeNotPreserved {
                generator: 0,
                object: 0
            }
        );
        assert_eq!(
            build_action(c2.clone(), path(), &[vec![0, 0, 2]], &limits).unwrap_err(),
            Error::NotBijection { generator: 0 }
        );
        // the reflection of the path is an automorphism
        let ok = build_action(c2.clone(), path(), &[vec![2, 1, 0]], &limits).unwrap();
        assert_eq!(ok.image(1, 0), 2);

        // a 3-cycle on three isolated objects cannot be the image of an involution
        let iso = IncidenceGeometry::new(names(1), vec![0, 0, 0], []).unwrap();
        assert!(matches!(
            build_action(c2.clone(), iso, &[vec![1, 2, 0]], &limits),
            Err(Error::IllDefinedAction { .. })
        ));

        // types preserved, incidence not
        let two = IncidenceGeometry::new(names(2), vec![0, 0, 1], [(0, 2)]).unwrap();
        assert!(matches!(
            build_action(c2, two, &[vec![1, 0, 2]], &limits),
            Err(Error::IncidenceNotPreserved { .. })
        ));
    }

    #[test]
    fn dot_output() {
        let g = IncidenceGeometry::new(names(2), vec![0, 1], [(0, 1)]).unwrap();
        assert_eq!(
            dot_export(&g),
            "graph incidence {\n  0 [label=\"0:1\"];\n  1 [label=\"1:2\"];\n  0 -- 1;\n}\n"
        );
        let lonely = IncidenceGeometry::new(names(2), vec![0, 1], []).unwrap();
        assert!(!dot_export(&lonely).contains("--"));
    }
}
