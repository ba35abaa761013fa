//! Finite permutation groups by generator closure, with conjugacy classes,
//! cyclic subgroups, left cosets, and the power-map rationality test.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};

pub const DEFAULT_MAX_ORDER: usize = 20_000;

/// A conjugacy class; `members` are element indices in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub element_order: u64,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A fully enumerated permutation group.
///
/// Elements are stored in lexicographic order of their image sequences and
/// addressed by index. Classes are ordered by element order, then by their
/// representative, which is the lexicographically least member.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    class_of: Vec<usize>,
    classes: Vec<ConjugacyClass>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

/// Closes `generators` under composition, starting from the identity.
pub fn enumerate_group(generators: &[Permutation], cap: usize) -> Result<FiniteGroup> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    let degree = first.degree();
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch(degree, g.degree()));
    }
    let elements = close(generators, degree, cap)?;
    Ok(FiniteGroup::from_elements(degree, generators.to_vec(), elements))
}

fn close(generators: &[Permutation], degree: usize, cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut found = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = s.mul(&x);
            if !seen.contains_key(&y) {
                if found.len() >= cap {
                    return Err(Error::OrderCap { cap });
                }
                seen.insert(y.clone(), ());
                found.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(found)
}

impl FiniteGroup {
    fn from_elements(degree: usize, generators: Vec<Permutation>, mut elements: Vec<Permutation>) -> FiniteGroup {
        elements.sort();
        let index: HashMap<Permutation, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let gen_pairs: Vec<(Permutation, Permutation)> = generators.iter().map(|s| (s.clone(), s.inverse())).collect();

        // Scanning in sorted order makes the first unassigned element the
        // least member of its class.
        const NONE: usize = usize::MAX;
        let mut orbit_of = vec![NONE; elements.len()];
        let mut raw_classes: Vec<ConjugacyClass> = Vec::new();
        for start in 0..elements.len() {
            if orbit_of[start] != NONE {
                continue;
            }
            let id = raw_classes.len();
            orbit_of[start] = id;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for (s, s_inv) in &gen_pairs {
                    let y = s.mul(&elements[x]).mul(s_inv);
                    let yi = index[&y];
                    if orbit_of[yi] == NONE {
                        orbit_of[yi] = id;
                        members.push(yi);
                        queue.push_back(yi);
                    }
                }
            }
            members.sort_unstable();
            raw_classes.push(ConjugacyClass {
                representative: start,
                members,
                element_order: elements[start].order(),
            });
        }

        let mut perm: Vec<usize> = (0..raw_classes.len()).collect();
        perm.sort_by_key(|&c| (raw_classes[c].element_order, raw_classes[c].representative));
        let mut renumber = vec![0; raw_classes.len()];
        for (new, &old) in perm.iter().enumerate() {
            renumber[old] = new;
        }
        let class_of = orbit_of.iter().map(|&c| renumber[c]).collect();
        let classes = perm.iter().map(|&c| raw_classes[c].clone()).collect();

        FiniteGroup {
            degree,
            generators,
            elements,
            index,
            class_of,
            classes,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        // the identity image sequence is lexicographically least
        0
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn representative(&self, class: usize) -> &Permutation {
        &self.elements[self.classes[class].representative]
    }

    pub fn are_conjugate(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    /// `<g>` as a subgroup, for `g` given by index.
    pub fn cyclic(&self, g: usize) -> Subgroup {
        let mut members: Vec<usize> = cyclic_subgroup(&self.elements[g])
            .iter()
            .map(|p| self.index[p])
            .collect();
        members.sort_unstable();
        Subgroup { members }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup {
            members: vec![self.identity()],
        }
    }
}

/// A subgroup of a [`FiniteGroup`], as sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Validates that `perms` lie in `group` and form a subgroup.
    pub fn new(group: &FiniteGroup, perms: &[Permutation]) -> Result<Subgroup> {
        let mut members = perms
            .iter()
            .map(|p| {
                group
                    .index_of(p)
                    .ok_or_else(|| Error::NotSubgroup(format!("{p} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        members.sort_unstable();
        members.dedup();
        Subgroup::from_indices(group, members)
    }

    pub fn from_indices(group: &FiniteGroup, mut members: Vec<usize>) -> Result<Subgroup> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::NotSubgroup("empty".into()));
        }
        if let Some(&bad) = members.iter().find(|&&m| m >= group.order()) {
            return Err(Error::NotSubgroup(format!("element index {bad} out of range")));
        }
        // Grow a generated subgroup greedily from members until it covers the
        // set; the set is closed iff the span never leaves it.
        let inside = |x: usize| members.binary_search(&x).is_ok();
        let mut gens: Vec<usize> = Vec::new();
        let mut span = vec![false; group.order()];
        span[group.identity()] = true;
        let mut span_size = 1;
        for &h in &members {
            if span[h] {
                continue;
            }
            gens.push(h);
            let mut queue: VecDeque<usize> = (0..group.order()).filter(|&x| span[x]).collect();
            while let Some(x) = queue.pop_front() {
                for &s in &gens {
                    let y = group.mul(s, x);
                    if !span[y] {
                        if !inside(y) {
                            return Err(Error::NotSubgroup(format!(
                                "{} * {} = {} escapes the set",
                                group.element(s),
                                group.element(x),
                                group.element(y)
                            )));
                        }
                        span[y] = true;
                        span_size += 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        if !inside(group.identity()) || span_size != members.len() {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        Ok(Subgroup { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// A left coset `xH`; `canonical` is its least member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coset {
    pub members: Vec<usize>,
    pub canonical: usize,
}

/// Left cosets of `subgroup`, ordered by canonical representative.
pub fn left_cosets(group: &FiniteGroup, subgroup: &Subgroup) -> Vec<Coset> {
    coset_partition(group, subgroup).0
}

/// Cosets plus the map from element index to coset index.
pub(crate) fn coset_partition(group: &FiniteGroup, subgroup: &Subgroup) -> (Vec<Coset>, Vec<usize>) {
    const NONE: usize = usize::MAX;
    let mut coset_of = vec![NONE; group.order()];
    let mut cosets = Vec::with_capacity(group.order() / subgroup.order());
    for x in 0..group.order() {
        if coset_of[x] != NONE {
            continue;
        }
        let mut members: Vec<usize> = subgroup.members().iter().map(|&h| group.mul(x, h)).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = cosets.len();
        }
        cosets.push(Coset {
            canonical: members[0],
            members,
        });
    }
    (cosets, coset_of)
}

/// `[g^0, g^1, ..., g^(order-1)]`.
pub fn cyclic_subgroup(g: &Permutation) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(g.degree())];
    let mut x = g.clone();
    while !x.is_identity() {
        out.push(x.clone());
        x = g.mul(&x);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerMapVerdict {
    pub rational: bool,
    /// First `(class index, exponent m)` with `g^m` outside the class of `g`.
    pub witness: Option<(usize, u64)>,
}

/// A finite group is rational iff every `g` is conjugate to `g^m` for every
/// `m` coprime to the order of `g`.
pub fn power_map_rational(group: &FiniteGroup) -> PowerMapVerdict {
    for (ci, class) in group.classes().iter().enumerate() {
        let g = group.element(class.representative);
        let n = class.element_order;
        for m in 1..n {
            if m.gcd(&n) != 1 {
                continue;
            }
            let gm = group.index_of(&g.pow(m)).expect("powers stay in the group");
            if group.class_of(gm) != ci {
                return PowerMapVerdict {
                    rational: false,
                    witness: Some((ci, m)),
                };
            }
        }
    }
    PowerMapVerdict {
        rational: true,
        witness: None,
    }
}

fn factorial_exceeds(n: usize, bound: usize) -> bool {
    let mut f: usize = 1;
    for k in 2..=n {
        f = match f.checked_mul(k) {
            Some(v) => v,
            None => return true,
        };
        if f > bound {
            return true;
        }
    }
    false
}

fn cycle_on(points: std::ops::RangeInclusive<usize>, degree: usize) -> Permutation {
    let pts: Vec<usize> = points.collect();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (k, &p) in pts.iter().enumerate() {
        images[p - 1] = (pts[(k + 1) % pts.len()] - 1) as u32;
    }
    Permutation::from_zero_based(images)
}

fn transposition(a: usize, b: usize, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    images.swap(a - 1, b - 1);
    Permutation::from_zero_based(images)
}

/// Builds one of `sym:n`, `alt:n`, `cyc:n`, `dih:m` (dihedral of order `m`)
/// or `quat:8`.
pub fn named_group(spec: &str, cap: usize) -> Result<FiniteGroup> {
    let (family, param) = spec
        .split_once(':')
        .ok_or_else(|| Error::UnknownFamily(spec.to_string()))?;
    let n: usize = param
        .trim()
        .parse()
        .map_err(|_| Error::OutOfRange(format!("`{param}` is not a non-negative integer")))?;
    let too_big = |order_exceeds: bool| {
        if order_exceeds {
            Err(Error::OrderCap { cap })
        } else {
            Ok(())
        }
    };
    let gens = match family.trim() {
        "sym" => {
            if n < 1 {
                return Err(Error::OutOfRange("sym:n needs n >= 1".into()));
            }
            too_big(factorial_exceeds(n, cap))?;
            if n == 1 {
                vec![Permutation::identity(1)]
            } else {
                vec![transposition(1, 2, n), cycle_on(1..=n, n)]
            }
        }
        "alt" => {
            if n < 3 {
                return Err(Error::OutOfRange("alt:n needs n >= 3".into()));
            }
            too_big(factorial_exceeds(n, cap.saturating_mul(2)))?;
            (3..=n)
                .map(|k| {
                    let mut images: Vec<u32> = (0..n as u32).collect();
                    images[0] = 1;
                    images[1] = (k - 1) as u32;
                    images[k - 1] = 0;
                    Permutation::from_zero_based(images)
                })
                .collect()
        }
        "cyc" => {
            if n < 1 {
                return Err(Error::OutOfRange("cyc:n needs n >= 1".into()));
            }
            too_big(n > cap)?;
            if n > MAX_DEGREE {
                return Err(Error::OutOfRange(format!("degree {n} too large")));
            }
            vec![cycle_on(1..=n, n)]
        }
        "dih" => {
            if n < 2 || !n.is_multiple_of(2) {
                return Err(Error::OutOfRange("dih:m needs even m >= 2".into()));
            }
            too_big(n > cap)?;
            if n / 2 > MAX_DEGREE {
                return Err(Error::OutOfRange(format!("degree {} too large", n / 2)));
            }
            dihedral_generators(n / 2)
        }
        "quat" => {
            if n != 8 {
                return Err(Error::OutOfRange("only quat:8 is supported".into()));
            }
            too_big(8 > cap)?;
            quaternion_generators()
        }
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    enumerate_group(&gens, cap)
}

fn dihedral_generators(k: usize) -> Vec<Permutation> {
    match k {
        // the polygon action is not faithful below three vertices
        1 => vec![transposition(1, 2, 2)],
        2 => vec![transposition(1, 2, 4), transposition(3, 4, 4)],
        _ => {
            let rotation = cycle_on(1..=k, k);
            // reflection fixing vertex 1: i -> 2 - i (mod k)
            let images: Vec<u32> = (0..k).map(|i| ((k - i) % k) as u32).collect();
            vec![rotation, Permutation::from_zero_based(images)]
        }
    }
}

/// Unit quaternion `±e` with `e` one of `1, i, j, k`, encoded as
/// `2 * axis + negative`.
fn quaternion_mul(a: usize, b: usize) -> usize {
    // AXIS[x][y] = (sign flip, axis) of e_x * e_y
    const AXIS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (flip, axis) = AXIS[a / 2][b / 2];
    let sign = (a % 2) ^ (b % 2) ^ flip;
    2 * axis + sign
}

/// Left-regular representation of Q8 on its 8 elements, generated by `i`
/// and `j`.
fn quaternion_generators() -> Vec<Permutation> {
    [2usize, 4]
        .iter()
        .map(|&a| Permutation::from_zero_based((0..8).map(|x| quaternion_mul(a, x) as u32).collect()))
        .collect()
}
