//! Ring descriptors and monomial orders.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_VARS};
use crate::scalar::Field;

/// A monomial order. `Elimination(mask)` compares the total degree in the
/// masked variables first and breaks ties by graded reverse lex, so every
/// monomial involving a masked variable beats every monomial free of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    #[default]
    GRevLex,
    Elimination(u32),
}

impl MonomialOrder {
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrLex | MonomialOrder::GRevLex)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| lex(a, b)),
            MonomialOrder::GRevLex => grevlex(a, b),
            MonomialOrder::Elimination(mask) => a
                .masked_degree(*mask)
                .cmp(&b.masked_degree(*mask))
                .then_with(|| grevlex(a, b)),
        }
    }
}

#[inline]
fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps().iter().zip(b.exps()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[inline]
fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.exps().iter().zip(b.exps()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// A polynomial ring `k[names]` together with the ambient monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: Field,
    order: MonomialOrder,
    graded: bool,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S], field: Field, order: MonomialOrder) -> Result<Arc<Ring>> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables {
                max: MAX_VARS,
                got: names.len(),
            });
        }
        if names.is_empty() {
            return Err(Error::invalid("a ring needs at least one variable"));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_identifier(n) {
                return Err(Error::invalid(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::invalid(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(Arc::new(Ring {
            names,
            field,
            order,
            graded: false,
        }))
    }

    /// `k[x0, ..., x_{count-1}]` with the default order.
    pub fn standard(prefix: &str, count: usize, first: usize, field: Field) -> Result<Arc<Ring>> {
        let names: Vec<String> = (first..first + count).map(|i| format!("{prefix}{i}")).collect();
        Ring::new(&names, field, MonomialOrder::GRevLex)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Whether the ring is flagged for graded (projective) work.
    pub fn graded(&self) -> bool {
        self.graded
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring {
            order,
            ..self.clone()
        })
    }

    pub fn with_field(&self, field: Field) -> Arc<Ring> {
        Arc::new(Ring {
            field,
            ..self.clone()
        })
    }

    pub fn with_graded(&self, graded: bool) -> Arc<Ring> {
        Arc::new(Ring {
            graded,
            ..self.clone()
        })
    }

    /// A variable name based on `base` that is not used in this ring.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| self.var_index(n).is_none())
            .expect("infinitely many candidates")
    }

    /// A copy of the ring with a fresh variable inserted at `index`.
    pub fn with_var_inserted(&self, index: usize, name: &str) -> Result<Arc<Ring>> {
        let mut names = self.names.clone();
        names.insert(index, self.fresh_name(name));
        let mut ring = Ring::new(&names, self.field, self.order)?;
        Arc::make_mut(&mut ring).graded = self.graded;
        Ok(ring)
    }

    pub fn without_var(&self, index: usize) -> Result<Arc<Ring>> {
        let mut names = self.names.clone();
        names.remove(index);
        let mut ring = Ring::new(&names, self.field, self.order)?;
        Arc::make_mut(&mut ring).graded = self.graded;
        Ok(ring)
    }

    /// The projective ring obtained by prepending a homogenizing variable.
    pub fn projective_closure_ring(&self) -> Result<Arc<Ring>> {
        let name = self.fresh_name("x0");
        let mut names = self.names.clone();
        names.insert(0, name);
        let ring = Ring::new(&names, self.field, MonomialOrder::GRevLex)?;
        Ok(ring.with_graded(true))
    }

    pub fn all_vars_mask(&self) -> u32 {
        (1u32 << self.nvars()) - 1
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_and_lex_differ_on_classic_pair() {
        // x0*x2 vs x1^2 in three variables
        let a = Monomial::from_exponents(&[1, 0, 1]);
        let b = Monomial::from_exponents(&[0, 2, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::GRevLex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::GrLex.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn elimination_order_puts_masked_variables_first() {
        let t = Monomial::var(2, 1);
        let big = Monomial::from_exponents(&[5, 5, 0]);
        assert_eq!(MonomialOrder::Elimination(0b100).cmp(&t, &big), Ordering::Greater);
    }

    #[test]
    fn rejects_duplicates() {
        assert!(Ring::new(&["x", "x"], Field::Rational, MonomialOrder::GRevLex).is_err());
        assert!(Ring::new(&["1x"], Field::Rational, MonomialOrder::GRevLex).is_err());
    }
}
