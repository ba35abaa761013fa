//! Group specifications: a named family such as `sym:4`, or explicit
//! generators `gens:(1 2)(3 4),(1 3)(2 4)` with an optional `@degree`.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{enumerate_group, named_group, FiniteGroup};
use crate::perm::{parse_cycles, MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Named { family: Family, param: usize },
    Generators { cycles: Vec<String>, degree: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Sym,
    Alt,
    Cyc,
    Dih,
    Quat,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Sym => "sym",
            Family::Alt => "alt",
            Family::Cyc => "cyc",
            Family::Dih => "dih",
            Family::Quat => "quat",
        }
    }
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let text = text.trim();
        let (head, rest) = text
            .split_once(':')
            .ok_or_else(|| parse_err(0, "expected `<family>:<parameter>` or `gens:<cycles>`"))?;
        let family = match head {
            "gens" => return Self::parse_gens(rest, head.len() + 1),
            "sym" => Family::Sym,
            "alt" => Family::Alt,
            "cyc" => Family::Cyc,
            "dih" => Family::Dih,
            "quat" => Family::Quat,
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(head.len() + 1, "expected a decimal parameter"));
        }
        let param: usize = rest
            .parse()
            .map_err(|_| parse_err(head.len() + 1, "parameter too large"))?;
        let valid = match family {
            Family::Sym | Family::Cyc => param >= 1,
            Family::Alt => param >= 3,
            Family::Dih => param >= 2 && param.is_multiple_of(2),
            Family::Quat => param == 8,
        };
        if !valid {
            return Err(Error::OutOfRange(format!("{}:{param}", family.name())));
        }
        Ok(GroupSpec::Named { family, param })
    }

    fn parse_gens(body: &str, offset: usize) -> Result<GroupSpec> {
        let (list, explicit) = match body.rfind('@') {
            Some(at) => {
                let d = &body[at + 1..];
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(parse_err(offset + at + 1, "expected a decimal degree"));
                }
                let degree: usize = d
                    .parse()
                    .ok()
                    .filter(|&n| (1..=MAX_DEGREE).contains(&n))
                    .ok_or_else(|| parse_err(offset + at + 1, format!("degree outside 1..={MAX_DEGREE}")))?;
                (&body[..at], Some(degree))
            }
            None => (body, None),
        };

        // commas at parenthesis depth 0 separate generators
        let mut cycles = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, b) in list.bytes().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b',' if depth == 0 => {
                    cycles.push(list[start..i].trim().to_string());
                    start = i + 1;
                }
                _ => {}
            }
        }
        cycles.push(list[start..].trim().to_string());

        let largest = cycles
            .iter()
            .flat_map(|c| c.split(|ch: char| !ch.is_ascii_digit()))
            .filter(|tok| !tok.is_empty())
            .map(|tok| tok.parse::<usize>().unwrap_or(usize::MAX))
            .max()
            .unwrap_or(1)
            .max(1);
        let degree = match explicit {
            Some(d) => d,
            None if largest > MAX_DEGREE => return Err(parse_err(offset, "point too large")),
            None => largest,
        };
        for c in &cycles {
            parse_cycles(c, degree)?;
        }
        Ok(GroupSpec::Generators { cycles, degree })
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Named { family, param } => named_group(&format!("{}:{param}", family.name()), max_order),
            GroupSpec::Generators { cycles, degree } => {
                let gens = cycles
                    .iter()
                    .map(|c| parse_cycles(c, *degree))
                    .collect::<Result<Vec<_>>>()?;
                enumerate_group(&gens, max_order)
            }
        }
    }

    /// `Some(n)` for `sym:n`.
    pub fn symmetric_degree(&self) -> Option<usize> {
        match self {
            GroupSpec::Named {
                family: Family::Sym,
                param,
            } => Some(*param),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named { family, param } => write!(f, "{}:{param}", family.name()),
            GroupSpec::Generators { cycles, degree } => write!(f, "gens:{}@{degree}", cycles.join(",")),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_MAX_ORDER;

    #[test]
    fn named_specs() {
        assert_eq!(
            GroupSpec::parse("sym:4").unwrap(),
            GroupSpec::Named {
                family: Family::Sym,
                param: 4
            }
        );
        assert_eq!(GroupSpec::parse(" dih:10 ").unwrap().to_string(), "dih:10");
        for bad in [
            "sym",
            "sym:",
            "sym:-1",
            "sym:0",
            "alt:2",
            "dih:7",
            "quat:4",
            "foo:3",
            "sym:4x",
            "sym:99999999999999999999999",
        ] {
            assert!(GroupSpec::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn generator_specs() {
        let klein = GroupSpec::parse("gens:(1 2)(3 4),(1 3)(2 4)").unwrap();
        assert_eq!(
            klein,
            GroupSpec::Generators {
                cycles: vec!["(1 2)(3 4)".into(), "(1 3)(2 4)".into()],
                degree: 4
            }
        );
        let g = klein.build(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!((g.order(), g.class_count()), (4, 4));

        let padded = GroupSpec::parse("gens:(1,2)@5").unwrap();
        assert_eq!(padded.build(10).unwrap().degree(), 5);
        assert_eq!(padded.to_string(), "gens:(1,2)@5");
        assert_eq!(GroupSpec::parse("gens:()").unwrap().build(10).unwrap().order(), 1);

        for bad in [
            "gens:(1 2)@1",
            "gens:(1 2",
            "gens:(1 2)@",
            "gens:(1 2)@x",
            "gens:(1 1)",
            "gens:(1 2)@0",
            "gens:(1 99999999)",
        ] {
            assert!(GroupSpec::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn spec_round_trips_through_display() {
        for s in ["sym:5", "quat:8", "gens:(1 2 3),(1 2)@4"] {
            let spec = GroupSpec::parse(s).unwrap();
            assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec);
        }
    }
}
