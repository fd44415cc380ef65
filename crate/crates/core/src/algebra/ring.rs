use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    names: Vec<String>,
}

/// A polynomial ring over the rationals, described by its ordered variable names.
///
/// Cheap to clone. Two rings are equal when they have the same names in the
/// same order.
#[derive(Clone)]
pub struct RingSpec {
    data: Arc<RingData>,
    index: Arc<HashMap<String, usize>>,
}

impl RingSpec {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyRing);
        }
        let mut index = HashMap::with_capacity(names.len());
        let mut owned = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref().trim();
            if !is_identifier(n) {
                return Err(Error::parse(0, format!("`{n}` is not a valid variable name")));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(Error::DuplicateVariable(n.to_string()));
            }
            owned.push(n.to_string());
        }
        Ok(RingSpec { data: Arc::new(RingData { names: owned }), index: Arc::new(index) })
    }

    /// Parses a comma separated variable list such as `x,y,z`.
    pub fn parse(list: &str) -> Result<Self> {
        let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        Self::new(&names)
    }

    pub fn nvars(&self) -> usize {
        self.data.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.data.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.data.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// A variable name not used by this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..).map(|k| format!("{base}{k}")).find(|n| self.index_of(n).is_none()).expect("infinitely many candidates")
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

impl Eq for RingSpec {}

impl std::hash::Hash for RingSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.data.hash(state)
    }
}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingSpec({})", self.data.names.join(","))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.data.names.join(","))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
