use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Ordered, named, weighted set of ring variables.
///
/// Variable `i` carries grading weight `weights[i] >= 1`. The declaration
/// order is significant: it fixes the monomial orders and the text format.
#[derive(Clone, PartialEq, Eq)]
pub struct VariableRegistry {
    names: Vec<String>,
    weights: Vec<u32>,
    index: HashMap<String, usize>,
}

/// Shared handle to a registry. Polynomials hold one of these.
pub type Ring = Arc<VariableRegistry>;

impl VariableRegistry {
    /// Registry with all weights equal to one.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring, PolyError> {
        Self::with_weights(names, &vec![1; names.len()])
    }

    pub fn with_weights<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Ring, PolyError> {
        if names.len() != weights.len() {
            return Err(PolyError::Registry(format!(
                "{} names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            if n.is_empty() || !is_identifier(n) {
                return Err(PolyError::Registry(format!("invalid variable name `{n}`")));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(PolyError::Registry(format!("duplicate variable `{n}`")));
            }
        }
        if let Some(w) = weights.iter().find(|w| **w == 0) {
            return Err(PolyError::Registry(format!("weight {w} < 1")));
        }
        Ok(Arc::new(VariableRegistry {
            names: names.iter().map(|n| n.as_ref().to_string()).collect(),
            weights: weights.to_vec(),
            index,
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

impl fmt::Debug for VariableRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.names.iter().zip(&self.weights))
            .finish()
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

/// True when both handles describe the same variables and weights.
pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_zero_weights() {
        assert!(VariableRegistry::new(&["x", "x"]).is_err());
        assert!(VariableRegistry::with_weights(&["x"], &[0]).is_err());
        assert!(VariableRegistry::new(&["1x"]).is_err());
        let r = VariableRegistry::with_weights(&["a", "b"], &[2, 3]).unwrap();
        assert_eq!(r.index_of("b"), Some(1));
        assert_eq!(r.weight(1), 3);
    }
}
