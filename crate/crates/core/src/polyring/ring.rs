use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::field::FieldSpec;
use super::monomial::MonomialOrder;
use crate::error::{Error, Result};

/// `k[x_0, ..., x_{n-1}]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S], field: FieldSpec, order: MonomialOrder) -> Result<RingRef> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !is_identifier(n) {
                return Err(Error::InvalidRing(format!("`{n}` is not a valid variable name")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if let MonomialOrder::Block { split } = order {
            if split > names.len() {
                return Err(Error::InvalidRing(format!("block split {split} exceeds variable count")));
            }
        }
        Ok(Arc::new(PolyRing { names, field, order }))
    }

    /// Variables `prefix0, ..., prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize, field: FieldSpec, order: MonomialOrder) -> Result<RingRef> {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names, field, order)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and order over another field.
    pub fn with_field(&self, field: FieldSpec) -> RingRef {
        Arc::new(PolyRing { names: self.names.clone(), field, order: self.order })
    }

    /// Same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        Self::new(&self.names, self.field, order)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] ({})", self.field, self.names.join(","), self.order.name())
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
