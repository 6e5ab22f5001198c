//! Textual instance descriptions used by the command line and the tests.
//!
//! Groups: `cyclic:m`, `sym:m`, the shorthands `c<m>` and `s<m>`, `trivial`,
//! and products `A*B`. Simplicial groups: any group (constant), or
//! `xmod:P,M,trivial` and `xmod:G,G,conj` for crossed modules.
//! Groupoids: `two-object:<group>`. A path prefixed by `file:` loads a
//! simplicial groupoid from JSON.

use std::fmt;
use std::path::PathBuf;

use crate::groups::{CrossedModule, FiniteGroup, SimplicialGroupoid};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSpec {
    Constant(String),
    CrossedModule { base: String, fiber: String, conjugation: bool },
    TwoObject(String),
    File(PathBuf),
}

fn parse_error(what: &'static str, input: &str) -> Error {
    Error::Parse { what, input: input.to_string() }
}

/// Parses a finite group description.
pub fn parse_group(s: &str) -> Result<FiniteGroup> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('*') {
        return FiniteGroup::product(&parse_group(a)?, &parse_group(b)?);
    }
    let number = |t: &str| t.parse::<usize>().map_err(|_| parse_error("group", s));
    if s == "trivial" {
        return FiniteGroup::cyclic(1);
    }
    if let Some(m) = s.strip_prefix("cyclic:") {
        return FiniteGroup::cyclic(number(m)?);
    }
    if let Some(m) = s.strip_prefix("sym:") {
        return FiniteGroup::symmetric(number(m)?);
    }
    if let Some(m) = s.strip_prefix('c').filter(|m| !m.is_empty() && m.bytes().all(|b| b.is_ascii_digit())) {
        return FiniteGroup::cyclic(number(m)?);
    }
    if let Some(m) = s.strip_prefix('s').filter(|m| !m.is_empty() && m.bytes().all(|b| b.is_ascii_digit())) {
        return FiniteGroup::symmetric(number(m)?);
    }
    Err(parse_error("group", s))
}

impl InstanceSpec {
    /// Parses the argument of `--group`.
    pub fn parse_group_arg(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(Self::File(PathBuf::from(path)));
        }
        if let Some(rest) = s.strip_prefix("xmod:") {
            let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
            let [base, fiber, kind] = parts[..] else { return Err(parse_error("crossed module", s)) };
            let conjugation = match kind {
                "trivial" => false,
                "conj" => true,
                _ => return Err(parse_error("crossed module action", kind)),
            };
            parse_group(base)?;
            parse_group(fiber)?;
            if conjugation && base != fiber {
                return Err(Error::InvalidCrossedModule(format!("conjugation needs equal groups, got {base} and {fiber}")));
            }
            return Ok(Self::CrossedModule { base: base.into(), fiber: fiber.into(), conjugation });
        }
        parse_group(s)?;
        Ok(Self::Constant(s.into()))
    }

    /// Parses the argument of `--groupoid`.
    pub fn parse_groupoid_arg(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(Self::File(PathBuf::from(path)));
        }
        let Some(h) = s.strip_prefix("two-object:") else { return Err(parse_error("groupoid", s)) };
        parse_group(h)?;
        Ok(Self::TwoObject(h.into()))
    }

    /// Builds the simplicial groupoid through degree `dim_cap`.
    pub fn build(&self, dim_cap: usize) -> Result<SimplicialGroupoid> {
        match self {
            Self::Constant(h) => Ok(SimplicialGroupoid::constant_group(&parse_group(h)?, dim_cap)),
            Self::CrossedModule { base, fiber, conjugation } => {
                let xm = if *conjugation {
                    CrossedModule::conjugation(parse_group(base)?)?
                } else {
                    CrossedModule::trivial(parse_group(base)?, parse_group(fiber)?)?
                };
                xm.simplicial_group(dim_cap)
            }
            Self::TwoObject(h) => Ok(SimplicialGroupoid::two_object(&parse_group(h)?, dim_cap)),
            Self::File(path) => {
                let g = SimplicialGroupoid::from_json_str(&std::fs::read_to_string(path)?)?;
                if g.dim_cap() < dim_cap {
                    return Err(Error::Truncated { needed: dim_cap, cap: g.dim_cap() });
                }
                Ok(g)
            }
        }
    }

    /// `true` when the instance has one object, so that `W` applies.
    pub fn is_group(&self) -> Option<bool> {
        match self {
            Self::Constant(_) | Self::CrossedModule { .. } => Some(true),
            Self::TwoObject(_) => Some(false),
            Self::File(_) => None,
        }
    }

    /// The order of the group for a constant instance.
    pub fn constant_group(&self) -> Option<FiniteGroup> {
        match self {
            Self::Constant(h) => parse_group(h).ok(),
            _ => None,
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Constant(h) => write!(f, "{h}"),
            Self::CrossedModule { base, fiber, conjugation } => {
                write!(f, "xmod:{base},{fiber},{}", if *conjugation { "conj" } else { "trivial" })
            }
            Self::TwoObject(h) => write!(f, "two-object:{h}"),
            Self::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// A named instance with its truncation and homology depth.
#[derive(Clone, Debug)]
pub struct StandardInstance {
    pub name: &'static str,
    pub spec: InstanceSpec,
    pub dim: usize,
    pub through: usize,
}

/// The five instances every end-to-end check runs on.
pub fn standard_instances() -> Vec<StandardInstance> {
    let g = |s: &str| InstanceSpec::parse_group_arg(s).expect("built-in spec parses");
    vec![
        StandardInstance { name: "constant C2", spec: g("cyclic:2"), dim: 4, through: 3 },
        StandardInstance { name: "constant C3", spec: g("cyclic:3"), dim: 4, through: 3 },
        StandardInstance { name: "constant S3", spec: g("sym:3"), dim: 3, through: 2 },
        StandardInstance { name: "crossed module (C2, C2, trivial)", spec: g("xmod:c2,c2,trivial"), dim: 4, through: 3 },
        StandardInstance {
            name: "two-object C2 groupoid",
            spec: InstanceSpec::parse_groupoid_arg("two-object:cyclic:2").expect("built-in spec parses"),
            dim: 3,
            through: 2,
        },
    ]
}
