use alloc::boxed::Box;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{same_ring, MonomialOrder, Ring};

/// An ideal given by generators, with its reduced basis under the ring's
/// order computed on first use and cached.
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    gb: OnceBox<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceBox::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(Box::new(g.clone()));
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter().map(|g| alloc::format!("{g}"))).finish()
    }
}

impl Ideal {
    /// Zero generators are dropped. Generators from a copy of the ring with
    /// another order are re-sorted. In a ring flagged as graded every
    /// generator must be homogeneous.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let g = if same_ring(g.ring(), ring) { g } else { g.to_ring(ring)? };
            if ring.graded() && !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            out.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            gb: OnceBox::new(),
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceBox::new(),
        }
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: alloc::vec![Polynomial::one(ring)],
            gb: OnceBox::new(),
        }
    }

    /// The ideal generated by all variables.
    pub fn irrelevant(ring: &Arc<Ring>) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceBox::new(),
        }
    }

    fn from_basis(gb: GroebnerBasis) -> Ideal {
        let ideal = Ideal {
            ring: gb.ring().clone(),
            gens: gb.elements().to_vec(),
            gb: OnceBox::new(),
        };
        let _ = ideal.gb.set(Box::new(gb));
        ideal
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            Box::new(GroebnerBasis::compute(&self.ring, &self.gens).expect("generators share the ring"))
        })
    }

    /// Reduced basis under another order (not cached).
    pub fn groebner_basis_in(&self, order: MonomialOrder) -> GroebnerBasis {
        if order == self.ring.order() {
            return self.groebner_basis().clone();
        }
        let r = self.ring.with_order(order);
        GroebnerBasis::compute(&r, &self.gens).expect("same variables and field")
    }

    /// A reduced basis under a degree-compatible order: the cached one when
    /// the ring order is graded, a graded reverse lex one otherwise.
    pub fn graded_basis(&self) -> GroebnerBasis {
        if self.ring.order().is_graded() {
            self.groebner_basis().clone()
        } else {
            self.groebner_basis_in(MonomialOrder::GRevLex)
        }
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if self.ring.names() == f.ring().names() && self.ring.field() == f.field() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_ideal(&self, other: &Ideal) -> Result<()> {
        if self.ring.names() == other.ring.names() && self.ring.field() == other.ring.field() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.groebner_basis().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_one(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn is_proper(&self) -> bool {
        !self.contains_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Ideal equality, via reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        if same_ring(&self.ring, &other.ring) {
            return Ok(self.groebner_basis() == other.groebner_basis());
        }
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// `I + (f_1, ..., f_k)`.
    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        for f in extra {
            self.check(f)?;
            gens.push(f.clone());
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        self.with_generators(&other.gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.checked_mul(&g.to_ring(&self.ring)?)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` as `(t I + (1 - t) J) ∩ k[x]` with an auxiliary variable `t`
    /// eliminated under a block order.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.contains_one() {
            return Ideal::new(&self.ring, other.gens.clone());
        }
        if other.contains_one() {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let ext = self
            .ring
            .with_var_inserted(n, "t")?
            .with_order(MonomialOrder::Elimination(1 << n));
        let ident: Vec<usize> = (0..n).collect();
        let t = Polynomial::var(&ext, n);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&t * &f.map_vars(&ext, &ident)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.map_vars(&ext, &ident)?);
        }
        let gb = GroebnerBasis::compute(&ext, &gens)?;
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.support() & (1 << n) == 0)
            .map(|g| g.affinize(&self.ring, n))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, kept)
    }

    /// `(I : f)`, computed as `(I ∩ (f)) / f`.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal> {
        self.check(f)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = f.to_ring(&self.ring)?;
        if f.is_unit() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, alloc::vec![f.clone()])?;
        let inter = self.intersection(&principal)?;
        let mut gens = Vec::with_capacity(inter.gens.len());
        for g in &inter.gens {
            let q = g
                .divide_exact(&f)?
                .expect("every element of I ∩ (f) is a multiple of f");
            gens.push(q);
        }
        let q = Ideal::new(&self.ring, gens)?;
        Ok(Ideal::from_basis(q.groebner_basis().clone()))
    }

    /// `(I : J) = ∩_j (I : g_j)`.
    pub fn quotient_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.gens {
            acc = acc.intersection(&self.quotient(g)?)?;
        }
        Ok(acc)
    }

    /// `(I : f^∞)`, iterating quotients until the reduced basis stabilizes.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        self.check(f)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut current = Ideal::from_basis(self.groebner_basis().clone());
        loop {
            let next = current.quotient(f)?;
            if next.groebner_basis() == current.groebner_basis() {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `I ∩ k[variables not listed]`, computed under an elimination order;
    /// the result stays in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let mut mask = 0u32;
        for &v in vars {
            if v >= self.ring.nvars() {
                return Err(Error::invalid("variable index out of range"));
            }
            mask |= 1 << v;
        }
        if mask == 0 {
            return Ok(self.clone());
        }
        let gb = self.groebner_basis_in(MonomialOrder::Elimination(mask));
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.support() & mask == 0)
            .map(|g| g.to_ring(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, kept)
    }

    /// Homogenization of the ideal (not just of its generators) in the ring
    /// with a homogenizing variable `x0` prepended: homogenize a graded
    /// reverse lex basis element by element.
    pub fn projective_closure(&self) -> Result<Ideal> {
        let target = self.ring.projective_closure_ring()?;
        let gb = self.graded_basis();
        let gens = gb
            .elements()
            .iter()
            .map(|g| g.homogenize(&target, 0))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&target, gens)
    }

    /// `f` is a nonzerodivisor modulo `I`, i.e. `(I : f) = I`. The zero
    /// polynomial never is one.
    pub fn is_nzd(&self, f: &Polynomial) -> Result<bool> {
        self.check(f)?;
        if f.is_zero() {
            return Ok(false);
        }
        let q = self.quotient(f)?;
        self.contains_ideal(&q)
    }

    /// The same ideal in a copy of the ring with another order.
    pub fn to_order(&self, order: MonomialOrder) -> Ideal {
        let r = self.ring.with_order(order);
        Ideal {
            gens: self.gens.iter().map(|g| g.to_ring(&r).expect("same variables")).collect(),
            ring: r,
            gb: OnceBox::new(),
        }
    }
}

/// Each `f_i` is a nonzerodivisor modulo `(f_1, ..., f_{i-1})`, and every
/// proper prefix generates a proper ideal; only the full sequence may
/// generate the unit ideal.
pub fn is_weak_regular_sequence(fs: &[Polynomial]) -> Result<bool> {
    let Some(first) = fs.first() else {
        return Ok(true);
    };
    let ring = first.ring();
    let mut prefix = Ideal::zero(&ring.with_graded(false));
    for f in fs {
        if !prefix.is_proper() || !prefix.is_nzd(f)? {
            return Ok(false);
        }
        prefix = prefix.with_generators(core::slice::from_ref(f))?;
    }
    Ok(true)
}

/// Weak regularity in the localization at `F`, tested on the contractions
/// `(f_1, ..., f_{i-1}) : F^∞`.
pub fn is_weak_regular_sequence_localized(fs: &[Polynomial], big_f: &Polynomial) -> Result<bool> {
    let Some(first) = fs.first() else {
        return Ok(true);
    };
    let ring = first.ring().with_graded(false);
    let mut gens: Vec<Polynomial> = Vec::new();
    for f in fs {
        let contraction = Ideal::new(&ring, gens.clone())?.saturate(big_f)?;
        if !contraction.is_proper() || !contraction.is_nzd(f)? {
            return Ok(false);
        }
        gens.push(f.clone());
    }
    Ok(true)
}

/// A weak regular sequence of homogeneous polynomials generating a proper
/// ideal. In a ring flagged as graded, inhomogeneous input is an error.
pub fn is_regular_sequence(fs: &[Polynomial]) -> Result<bool> {
    let Some(first) = fs.first() else {
        return Ok(true);
    };
    if fs.iter().any(|f| !f.is_homogeneous()) {
        if first.ring().graded() {
            return Err(Error::NotHomogeneous);
        }
        return Ok(false);
    }
    if !is_weak_regular_sequence(fs)? {
        return Ok(false);
    }
    let ideal = Ideal::new(&first.ring().with_graded(false), fs.to_vec())?;
    Ok(ideal.is_proper())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::scalar::Field;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(names, Field::Rational, MonomialOrder::GRevLex).unwrap()
    }

    fn ideal(r: &Arc<Ring>, src: &[&str]) -> Ideal {
        Ideal::new(r, src.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn unit_membership() {
        let r = ring(&["x", "y"]);
        assert!(ideal(&r, &["x", "1 - x"]).contains_one());
        assert!(!ideal(&r, &["x", "y"]).contains_one());
        assert!(ideal(&r, &["x^2", "1 - x*y"]).contains_one());
    }

    #[test]
    fn quotients() {
        let r = ring(&["x", "y"]);
        let q = ideal(&r, &["x^2"]).quotient(&p(&r, "x")).unwrap();
        assert!(q.equals(&ideal(&r, &["x"])).unwrap());
        let q = ideal(&r, &["x*y"]).quotient(&p(&r, "x")).unwrap();
        assert!(q.equals(&ideal(&r, &["y"])).unwrap());
        let i = ideal(&r, &["x^2 - y", "x*y^2"]);
        assert!(i.quotient(&Polynomial::one(&r)).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"]);
        let xy = ideal(&r, &["x"]).intersection(&ideal(&r, &["y"])).unwrap();
        assert!(xy.equals(&ideal(&r, &["x*y"])).unwrap());
        let i = ideal(&r, &["x^2 - y", "y^3"]);
        assert!(i.intersection(&i).unwrap().equals(&i).unwrap());
        let c = ideal(&r, &["x"]).intersection(&ideal(&r, &["x", "y"])).unwrap();
        assert!(c.equals(&ideal(&r, &["x"])).unwrap());
    }

    #[test]
    fn saturation_and_elimination() {
        let r = ring(&["x0", "x1"]);
        let s = ideal(&r, &["x0*x1"]).saturate(&p(&r, "x0")).unwrap();
        assert!(s.equals(&ideal(&r, &["x1"])).unwrap());
        let r = ring(&["t", "x", "y"]);
        let e = ideal(&r, &["t*x - 1", "y - x^2"]).eliminate(&[0]).unwrap();
        assert!(e.equals(&ideal(&r, &["y - x^2"])).unwrap());
        let i = ideal(&r, &["x - y"]);
        assert!(i.eliminate(&[]).unwrap().equals(&i).unwrap());
        assert!(ideal(&r, &["1"]).eliminate(&[0, 1, 2]).unwrap().contains_one());
    }

    #[test]
    fn projective_closures() {
        let r = ring(&["x1", "x2"]);
        let c = ideal(&r, &["x1^2 - x2"]).projective_closure().unwrap();
        let pr = c.ring().clone();
        assert_eq!(pr.names()[0], "x0");
        assert!(c.equals(&ideal(&pr, &["x1^2 - x0*x2"])).unwrap());
        assert!(ideal(&r, &["x1", "x1*x2 + 1"]).projective_closure().unwrap().contains_one());
    }

    #[test]
    fn nonzerodivisors() {
        let r = ring(&["x", "y"]);
        assert!(ideal(&r, &["y"]).is_nzd(&p(&r, "x")).unwrap());
        assert!(!ideal(&r, &["x*y"]).is_nzd(&p(&r, "x")).unwrap());
        assert!(!ideal(&r, &["x*y"]).is_nzd(&Polynomial::zero(&r)).unwrap());
    }

    #[test]
    fn regular_sequences() {
        let r = ring(&["x1", "x2", "x3"]);
        let v = |s: &str| p(&r, s);
        assert!(is_weak_regular_sequence(&[v("x1"), v("x2"), v("x3")]).unwrap());
        assert!(!is_weak_regular_sequence(&[v("x1"), v("x1")]).unwrap());
        assert!(is_weak_regular_sequence(&[v("x1"), v("1 - x1")]).unwrap());
        assert!(!is_regular_sequence(&[v("x1"), v("1 - x1")]).unwrap());
        assert!(is_regular_sequence(&[v("x1"), v("x2")]).unwrap());
        assert!(!is_regular_sequence(&[v("x1"), Polynomial::zero(&r)]).unwrap());
    }
}
