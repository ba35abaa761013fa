//! Test-only oracles. Nothing here calls the closure, class, coset, flag
//! or counting code under test; they work on raw image vectors.

#![allow(dead_code)]

pub mod golden;

use std::collections::BTreeSet;

use ratgeom::geometry::IncidenceGeometry;
use ratgeom::Permutation;

pub type Img = Vec<usize>;

pub fn imgs(p: &Permutation) -> Img {
    p.images()
}

/// `x -> p(q(x))`, 1-based.
pub fn mul(p: &Img, q: &Img) -> Img {
    q.iter().map(|&x| p[x - 1]).collect()
}

pub fn inv(p: &Img) -> Img {
    let mut out = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j - 1] = i + 1;
    }
    out
}

pub fn identity(n: usize) -> Img {
    (1..=n).collect()
}

/// Fixpoint of pairwise products.
pub fn naive_closure(gens: &[Img]) -> BTreeSet<Img> {
    let n = gens[0].len();
    let mut set: BTreeSet<Img> = gens.iter().cloned().collect();
    set.insert(identity(n));
    loop {
        let snapshot: Vec<Img> = set.iter().cloned().collect();
        let before = set.len();
        for a in &snapshot {
            for b in &snapshot {
                set.insert(mul(a, b));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// Classes as sorted member sets, by brute-force conjugation.
pub fn naive_classes(elements: &BTreeSet<Img>) -> BTreeSet<BTreeSet<Img>> {
    elements
        .iter()
        .map(|g| elements.iter().map(|x| mul(&mul(x, g), &inv(x))).collect())
        .collect()
}

pub fn naive_order(p: &Img) -> usize {
    let mut x = p.clone();
    let mut k = 1;
    while x != identity(p.len()) {
        x = mul(p, &x);
        k += 1;
    }
    k
}

/// Number of `k`-subsets `S` with `p(S) = S`, by enumerating subsets.
pub fn brute_fixed_subsets(p: &Img, k: usize) -> u64 {
    let n = p.len();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .filter(|&m| {
            let image = (0..n)
                .filter(|&i| m >> i & 1 == 1)
                .fold(0u32, |acc, i| acc | 1 << (p[i] - 1));
            image == m
        })
        .count() as u64
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Flags of type `types` by scanning every choice of one object per type.
pub fn naive_flags(geometry: &IncidenceGeometry, types: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for &t in types {
        let objs: Vec<usize> = (0..geometry.len()).filter(|&x| geometry.type_of(x) == t).collect();
        out = out
            .into_iter()
            .flat_map(|f| {
                objs.iter().map(move |&o| {
                    let mut g = f.clone();
                    g.push(o);
                    g
                })
            })
            .collect();
    }
    out.retain(|f| f.iter().all(|&a| f.iter().all(|&b| geometry.incident(a, b))));
    out
}

/// Whether every element is conjugate to each power coprime to its order,
/// checked over the naive closure and classes.
pub fn naive_rational(gens: &[Img]) -> bool {
    let elements = naive_closure(gens);
    let classes = naive_classes(&elements);
    let class_of = |g: &Img| classes.iter().position(|c| c.contains(g)).unwrap();
    elements.iter().all(|g| {
        let n = naive_order(g);
        let mut power = g.clone();
        (2..n).all(|m| {
            power = mul(g, &power);
            gcd(m, n) != 1 || class_of(&power) == class_of(g)
        })
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
