//! Permutations of `{1..n}` stored as image sequences.
//!
//! Points are 1-based at the API surface and 0-based internally. Composition
//! applies the right factor first: `p.compose(&q)` maps `x` to `p(q(x))`, so
//! left multiplication by a group element is a homomorphism into object
//! permutations.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest degree accepted by the parser and the constructors.
pub const MAX_DEGREE: usize = 1 << 16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images; derived `Ord` is lexicographic on the image sequence.
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&degree), "degree {degree} out of range");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images, `images[p - 1] = p'`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::OutOfRange(format!("degree {n}")));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::OutOfRange(format!(
                    "image sequence {images:?} is not a bijection of 1..{n}"
                )));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_zero_based(images: Vec<u32>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    // Unchecked `compose`, for callers that already know the degrees agree.
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `x * self * x^-1`.
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        x.mul(self).mul(&x.inverse())
    }

    pub fn pow(&self, exp: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Disjoint cycles as 0-based point lists, fixed points included, each
    /// starting at its least point and ordered by that point.
    pub(crate) fn cycles_raw(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles_raw().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles_raw().len()
    }

    /// Least `n >= 1` with `self^n = 1`, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles_raw().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }
}

fn is_bijection(images: &[u32]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&j| {
        let j = j as usize;
        j < seen.len() && !std::mem::replace(&mut seen[j], true)
    })
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles_raw().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.degree())
    }
}

/// Parses disjoint cycle notation such as `"(1 2)(3 4)"` or `"(1,2,3)"`.
///
/// Points are separated by a comma or by spaces, whitespace around cycles is
/// ignored, and `""` or `"()"` is the identity. Points left unmentioned are
/// fixed.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("degree {degree} outside 1..={MAX_DEGREE}"),
        });
    }
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut p = CycleParser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'(') => p.pos += 1,
            Some(_) => return Err(p.err("expected `(`")),
        }
        let mut cycle: Vec<usize> = Vec::new();
        p.skip_ws();
        if p.peek() == Some(b')') {
            p.pos += 1;
            continue;
        }
        loop {
            p.skip_ws();
            let start = p.pos;
            let point = p.point()?;
            if point > degree {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("point {point} exceeds degree {degree}"),
                });
            }
            if std::mem::replace(&mut used[point - 1], true) {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("point {point} repeated"),
                });
            }
            cycle.push(point - 1);
            let had_space = p.skip_ws();
            match p.peek() {
                Some(b')') => {
                    p.pos += 1;
                    break;
                }
                Some(b',') => p.pos += 1,
                Some(b'0'..=b'9') if had_space => {}
                None => return Err(p.err("unclosed `(`")),
                Some(_) => return Err(p.err("expected separator or `)`")),
            }
        }
        for (k, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(k + 1) % cycle.len()] as u32;
        }
    }
    Ok(Permutation { images })
}

struct CycleParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl CycleParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn point(&mut self) -> Result<usize> {
        let start = self.pos;
        let mut value: usize = 0;
        while let Some(d @ b'0'..=b'9') = self.peek() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((d - b'0') as usize))
                .filter(|&v| v <= MAX_DEGREE)
                .ok_or_else(|| Error::Parse {
                    pos: start,
                    msg: "point too large".into(),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a point"));
        }
        if value == 0 {
            return Err(Error::Parse {
                pos: start,
                msg: "points start at 1".into(),
            });
        }
        Ok(value)
    }
}
