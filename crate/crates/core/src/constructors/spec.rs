use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::FamilyRegistry;
use crate::error::{GroupError, Result};
use crate::group::PermGroup;

/// A parsed group descriptor such as `NM(4,5,2)` or `DP(S(3),C(2))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GroupSpec {
    Family { kind: String, params: Vec<u64> },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn family(kind: &str, params: &[u64]) -> Self {
        GroupSpec::Family {
            kind: kind.to_string(),
            params: params.to_vec(),
        }
    }

    pub fn direct_product(left: GroupSpec, right: GroupSpec) -> Self {
        GroupSpec::DirectProduct(Box::new(left), Box::new(right))
    }

    pub fn kind(&self) -> &str {
        match self {
            GroupSpec::Family { kind, .. } => kind,
            GroupSpec::DirectProduct(..) => "DP",
        }
    }

    pub fn params(&self) -> &[u64] {
        match self {
            GroupSpec::Family { params, .. } => params,
            GroupSpec::DirectProduct(..) => &[],
        }
    }

    pub fn build(&self) -> Result<PermGroup> {
        self.build_with(&FamilyRegistry::standard())
    }

    pub fn build_with(&self, registry: &FamilyRegistry) -> Result<PermGroup> {
        match self {
            GroupSpec::Family { kind, params } => lookup(registry, kind, params)?.build(params),
            GroupSpec::DirectProduct(l, r) => l
                .build_with(registry)?
                .direct_product(&r.build_with(registry)?),
        }
    }

    pub fn expected_order(&self) -> Result<u64> {
        self.expected_order_with(&FamilyRegistry::standard())
    }

    pub fn expected_order_with(&self, registry: &FamilyRegistry) -> Result<u64> {
        match self {
            GroupSpec::Family { kind, params } => {
                lookup(registry, kind, params)?.expected_order(params)
            }
            GroupSpec::DirectProduct(l, r) => l
                .expected_order_with(registry)?
                .checked_mul(r.expected_order_with(registry)?)
                .ok_or(GroupError::Overflow("direct product order")),
        }
    }
}

fn lookup<'r>(
    registry: &'r FamilyRegistry,
    kind: &str,
    params: &[u64],
) -> Result<&'r dyn super::GroupFamily> {
    let family = registry
        .get(kind)
        .ok_or_else(|| GroupError::InvalidParameter(format!("unknown group family {kind}")))?;
    if family.arity() != params.len() {
        return Err(GroupError::InvalidParameter(format!(
            "{} takes {} parameters, got {}",
            family.signature(),
            family.arity(),
            params.len()
        )));
    }
    Ok(family)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Family { kind, params } if params.is_empty() => f.write_str(kind),
            GroupSpec::Family { kind, params } => {
                let ps: Vec<String> = params.iter().map(u64::to_string).collect();
                write!(f, "{kind}({})", ps.join(","))
            }
            GroupSpec::DirectProduct(l, r) => write!(f, "DP({l},{r})"),
        }
    }
}

impl From<GroupSpec> for String {
    fn from(spec: GroupSpec) -> String {
        spec.to_string()
    }
}

impl TryFrom<String> for GroupSpec {
    type Error = SpecError;

    fn try_from(s: String) -> Result<Self, SpecError> {
        parse_spec(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("syntax error at position {position}: expected {} but found {found}", .expected.join(" or "))]
    Syntax {
        position: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("constraint violation: {0}")]
    Constraint(GroupError),
}

/// Parses a spec string against the standard families.
pub fn parse_spec(s: &str) -> Result<GroupSpec, SpecError> {
    parse_spec_with(s, &FamilyRegistry::standard())
}

pub fn parse_spec_with(s: &str, registry: &FamilyRegistry) -> Result<GroupSpec, SpecError> {
    let mut parser = Parser {
        src: s.as_bytes(),
        pos: 0,
        registry,
    };
    let spec = parser.spec()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.unexpected(&["end of input"]));
    }
    Ok(spec)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    registry: &'a FamilyRegistry,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self, expected: &[&str]) -> SpecError {
        let found = match self.src.get(self.pos) {
            Some(&c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        };
        SpecError::Syntax {
            position: self.pos,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found,
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), SpecError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&[&format!("'{}'", c as char)]))
        }
    }

    fn ident(&mut self) -> Result<(usize, String), SpecError> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            return Err(self.unexpected(&["group name"]));
        }
        while self
            .src
            .get(self.pos)
            .is_some_and(u8::is_ascii_alphanumeric)
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .to_ascii_uppercase();
        Ok((start, name))
    }

    fn number(&mut self) -> Result<u64, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected(&["integer"]));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| {
                self.pos = start;
                self.unexpected(&["integer fitting in 64 bits"])
            })
    }

    fn spec(&mut self) -> Result<GroupSpec, SpecError> {
        let (start, name) = self.ident()?;
        if name == "DP" {
            self.expect(b'(')?;
            let left = self.spec()?;
            self.expect(b',')?;
            let right = self.spec()?;
            self.expect(b')')?;
            return Ok(GroupSpec::direct_product(left, right));
        }
        let Some(family) = self.registry.get(&name) else {
            self.pos = start;
            let mut known: Vec<&str> = self.registry.names().collect();
            known.push("DP");
            return Err(self.unexpected(&known));
        };
        let mut params = Vec::new();
        if family.arity() > 0 {
            self.expect(b'(')?;
            for i in 0..family.arity() {
                if i > 0 {
                    self.expect(b',')?;
                }
                params.push(self.number()?);
            }
            self.expect(b')')?;
        }
        family.validate(&params).map_err(SpecError::Constraint)?;
        Ok(GroupSpec::Family { kind: name, params })
    }
}
