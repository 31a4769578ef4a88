use std::collections::BTreeMap;

use crate::error::{CasError, Result};
use crate::Rational;

/// Ordered list of coordinate names. Position `i` is the variable index
/// used by [`Polynomial`](crate::Polynomial) exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoordinateSystem {
    names: Vec<String>,
}

impl CoordinateSystem {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(CasError::InvalidCoordinates("no coordinates".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(CasError::InvalidCoordinates(format!("`{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(CasError::InvalidCoordinates(format!("duplicate coordinate `{n}`")));
            }
        }
        Ok(Self { names })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| CasError::UnknownCoordinate(name.to_string()))
    }

    /// Orders a name → value map into a positional point.
    pub fn point(&self, values: &BTreeMap<String, Rational>) -> Result<Vec<Rational>> {
        for key in values.keys() {
            self.index_of(key)?;
        }
        self.names
            .iter()
            .map(|n| {
                values
                    .get(n)
                    .cloned()
                    .ok_or_else(|| CasError::MissingCoordinate(n.clone()))
            })
            .collect()
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
