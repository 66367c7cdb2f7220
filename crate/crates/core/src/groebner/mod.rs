//! Buchberger's algorithm and reduced Gröbner bases.
//!
//! Pairs are processed with the normal selection strategy (smallest lcm
//! first) and pruned with the Gebauer–Möller installation of Buchberger's
//! two criteria. The output is always the reduced basis, sorted by leading
//! monomial, so equal ideals produce identical bases.

mod ideal;

pub use ideal::{is_regular_sequence, is_weak_regular_sequence, is_weak_regular_sequence_localized, Ideal};

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Result;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::{same_ring, MonomialOrder, Ring};
use crate::Error;

/// A reduced Gröbner basis: monic, inter-reduced, sorted ascending by
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Reduced basis of the ideal generated by `gens` under the order of
    /// `ring`. Generators may live in a copy of the ring with another order.
    pub fn compute(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
        let gens = gens
            .iter()
            .map(|g| g.to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroebnerBasis {
            ring: ring.clone(),
            elements: buchberger(ring, gens),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| *g.leading_monomial().expect("basis elements are nonzero"))
            .collect()
    }

    /// Fully reduced remainder of `f`; `f` may come from a copy of the ring
    /// with a different order.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let f = f.to_ring(&self.ring)?;
        let basis: Vec<&Polynomial> = self.elements.iter().collect();
        Ok(reduce(&f, &basis, true))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Free-function form of [`GroebnerBasis::compute`].
pub fn buchberger_basis(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(ring, gens)
}

/// Remainder of `f` modulo `G`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    g.normal_form(f)
}

/// Reduces `f` by monic `basis` elements. With `full` unset only the leading
/// term is reduced until it is irreducible.
fn reduce(f: &Polynomial, basis: &[&Polynomial], full: bool) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let order = ring.order();
    // ascending, so the leading term is at the end
    let mut p: Vec<Term> = f.terms().iter().rev().cloned().collect();
    let mut rem: Vec<Term> = Vec::new();
    while let Some((m, c)) = p.last() {
        match basis.iter().find(|g| g.terms()[0].0.divides(m)) {
            Some(g) => {
                let q = m.div(&g.terms()[0].0);
                let coef = field.neg(c);
                p = sub_multiple_ascending(&p, g, &q, &coef, ring);
            }
            None => {
                if full {
                    rem.push(p.pop().expect("nonempty"));
                } else {
                    rem.extend(p.drain(..).rev());
                }
            }
        }
    }
    debug_assert!(rem.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
    Polynomial::from_sorted_terms(ring, rem)
}

/// `p + coef * q * g` where `p` is stored ascending and `g` is canonical.
fn sub_multiple_ascending(p: &[Term], g: &Polynomial, q: &Monomial, coef: &crate::Coeff, ring: &Arc<Ring>) -> Vec<Term> {
    let field = ring.field();
    let order = ring.order();
    let gt = g.terms();
    let mut out = Vec::with_capacity(p.len() + gt.len());
    let (mut i, mut j) = (0, gt.len());
    while i < p.len() && j > 0 {
        let (gm, gc) = &gt[j - 1];
        let m = gm.mul(q);
        match order.cmp(&p[i].0, &m) {
            Ordering::Less => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((m, field.mul(gc, coef)));
                j -= 1;
            }
            Ordering::Equal => {
                let c = field.add(&p[i].1, &field.mul(gc, coef));
                if !field.is_zero(&c) {
                    out.push((m, c));
                }
                i += 1;
                j -= 1;
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    while j > 0 {
        let (gm, gc) = &gt[j - 1];
        out.push((gm.mul(q), field.mul(gc, coef)));
        j -= 1;
    }
    out
}

#[derive(Debug, Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn lm(p: &Polynomial) -> Monomial {
    p.terms()[0].0
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let field = f.field();
    let a = lcm.div(&lm(f));
    let b = lcm.div(&lm(g));
    let minus_one = field.neg(&field.one());
    f.mul_monomial(&a).merge(g, Some((&b, &minus_one)))
}

struct State {
    basis: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    order: MonomialOrder,
}

impl State {
    fn active_refs(&self) -> Vec<&Polynomial> {
        self.basis
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(g, _)| g)
            .collect()
    }

    /// Gebauer–Möller update for a new monic element `h`.
    fn insert(&mut self, h: Polynomial) {
        let hl = lm(&h);
        let k = self.basis.len();
        let mut fresh: Vec<Pair> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| Pair {
                i,
                j: k,
                lcm: lm(&self.basis[i]).lcm(&hl),
            })
            .collect();

        // chain criterion among the new pairs: drop (g, h) if another new
        // pair has an lcm properly dividing it, keeping one representative
        // of equal lcms unless it is coprime
        let mut kept: Vec<Pair> = Vec::new();
        let mut idx = 0;
        while idx < fresh.len() {
            let p = fresh[idx];
            let coprime = lm(&self.basis[p.i]).is_coprime(&hl);
            let dominated = fresh
                .iter()
                .enumerate()
                .any(|(o, q)| o != idx && q.lcm.divides(&p.lcm) && q.lcm != p.lcm)
                || kept.iter().any(|q| q.lcm == p.lcm);
            if coprime || !dominated {
                kept.push(p);
            }
            idx += 1;
        }
        // among pairs sharing an lcm, a coprime one proves the whole class
        // redundant
        let coprime_lcms: Vec<Monomial> = kept
            .iter()
            .filter(|p| lm(&self.basis[p.i]).is_coprime(&hl))
            .map(|p| p.lcm)
            .collect();
        kept.retain(|p| !coprime_lcms.contains(&p.lcm));
        fresh = kept;

        // old pairs made redundant by h
        let basis = &self.basis;
        self.pairs.retain(|p| {
            let l = p.lcm;
            !(hl.divides(&l)
                && lm(&basis[p.i]).lcm(&hl) != l
                && lm(&basis[p.j]).lcm(&hl) != l)
        });
        self.pairs.extend(fresh);

        for i in 0..k {
            if self.active[i] && hl.divides(&lm(&self.basis[i])) {
                self.active[i] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&self.pairs[a], &self.pairs[b]);
                order
                    .cmp(&p.lcm, &q.lcm)
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .expect("nonempty");
        Some(self.pairs.swap_remove(best))
    }
}

fn buchberger(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Vec<Polynomial> {
    debug_assert!(gens.iter().all(|g| same_ring(g.ring(), ring)));
    let mut state = State {
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        order: ring.order(),
    };
    let mut input: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    input.sort_by(|a, b| ring.order().cmp(&lm(a), &lm(b)));
    for g in input {
        let h = reduce(&g, &state.active_refs(), true);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return alloc::vec![Polynomial::one(ring)];
        }
        state.insert(h.monic());
    }
    while let Some(pair) = state.select() {
        let s = s_polynomial(&state.basis[pair.i], &state.basis[pair.j], &pair.lcm);
        let h = reduce(&s, &state.active_refs(), true);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return alloc::vec![Polynomial::one(ring)];
        }
        state.insert(h.monic());
    }
    let minimal: Vec<Polynomial> = state
        .basis
        .into_iter()
        .zip(state.active)
        .filter(|(_, a)| *a)
        .map(|(g, _)| g)
        .collect();
    interreduce(minimal)
}

/// Turns a minimal basis (no leading monomial divides another) into the
/// reduced one.
fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let Some(first) = basis.first() else {
        return basis;
    };
    let order = first.ring().order();
    basis.sort_by(|a, b| order.cmp(&lm(a), &lm(b)));
    let mut out = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let others: Vec<&Polynomial> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g)
            .collect();
        // the leading term is irreducible, so reduce only the tail
        let g = &basis[i];
        let head = Polynomial::from_sorted_terms(g.ring(), alloc::vec![g.terms()[0].clone()]);
        let tail = Polynomial::from_sorted_terms(g.ring(), g.terms()[1..].to_vec());
        let reduced = &head + &reduce(&tail, &others, true);
        out.push(reduced.monic());
    }
    out
}

/// Checks the defining property directly: every S-polynomial of the basis
/// reduces to zero. Used by tests as an independent certificate.
pub fn is_groebner_basis(elements: &[Polynomial]) -> Result<bool> {
    if elements.iter().any(|g| g.is_zero()) {
        return Err(Error::ZeroPolynomial);
    }
    let monic: Vec<Polynomial> = elements.iter().map(|g| g.monic()).collect();
    let refs: Vec<&Polynomial> = monic.iter().collect();
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            let l = lm(&monic[i]).lcm(&lm(&monic[j]));
            if !reduce(&s_polynomial(&monic[i], &monic[j], &l), &refs, true).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The basis is reduced: monic and no term of an element is divisible by
/// another element's leading monomial.
pub fn is_reduced(elements: &[Polynomial]) -> bool {
    elements.iter().enumerate().all(|(i, g)| {
        g.leading_coeff().is_some_and(|c| g.field().is_one(c))
            && elements.iter().enumerate().all(|(j, h)| {
                i == j || g.terms().iter().all(|(m, _)| !lm(h).divides(m))
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::scalar::Field;

    fn ring(names: &[&str], order: MonomialOrder) -> Arc<Ring> {
        Ring::new(names, Field::Rational, order).unwrap()
    }

    fn ps(r: &Arc<Ring>, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()
    }

    #[test]
    fn variables_are_already_reduced() {
        let r = ring(&["x0", "x1"], MonomialOrder::GRevLex);
        let g = GroebnerBasis::compute(&r, &ps(&r, &["x0", "x1"])).unwrap();
        assert_eq!(g.elements(), ps(&r, &["x1", "x0"]).as_slice());
    }

    #[test]
    fn graded_lex_example() {
        let r = ring(&["x0", "x1"], MonomialOrder::GrLex);
        let g = GroebnerBasis::compute(&r, &ps(&r, &["x0^2 - x1", "x0*x1"])).unwrap();
        assert_eq!(g.elements(), ps(&r, &["x1^2", "x0*x1", "x0^2 - x1"]).as_slice());
        assert!(is_groebner_basis(g.elements()).unwrap());
        assert!(is_reduced(g.elements()));
    }

    #[test]
    fn unit_ideal() {
        let r = ring(&["x"], MonomialOrder::GRevLex);
        let g = GroebnerBasis::compute(&r, &ps(&r, &["1 - x", "x"])).unwrap();
        assert!(g.is_unit());
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x0", "x1"], MonomialOrder::Lex);
        let g = GroebnerBasis::compute(&r, &ps(&r, &["x0^2 - x1"])).unwrap();
        assert_eq!(g.normal_form(&ps(&r, &["x0^2"])[0]).unwrap(), ps(&r, &["x1"])[0]);
        assert!(g.contains(&ps(&r, &["x0^2 - x1"])[0]).unwrap());
        assert!(g.normal_form(&Polynomial::one(&r)).unwrap().is_one());
    }

    #[test]
    fn twisted_cubic_under_lex_and_grevlex() {
        for order in [MonomialOrder::Lex, MonomialOrder::GRevLex, MonomialOrder::GrLex] {
            let r = ring(&["x0", "x1", "x2", "x3"], order);
            let gens = ps(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
            let g = GroebnerBasis::compute(&r, &gens).unwrap();
            assert!(is_groebner_basis(g.elements()).unwrap());
            assert!(is_reduced(g.elements()));
            for f in &gens {
                assert!(g.contains(f).unwrap());
            }
            let mut rev = gens.clone();
            rev.reverse();
            assert_eq!(GroebnerBasis::compute(&r, &rev).unwrap(), g);
        }
    }

    #[test]
    fn cyclic_three_over_prime_field() {
        let r = Ring::new(&["a", "b", "c"], Field::prime(32003).unwrap(), MonomialOrder::GRevLex).unwrap();
        let gens = ps(&r, &["a + b + c", "a*b + b*c + c*a", "a*b*c - 1"]);
        let g = GroebnerBasis::compute(&r, &gens).unwrap();
        assert!(is_groebner_basis(g.elements()).unwrap());
        assert!(is_reduced(g.elements()));
        assert_eq!(g.len(), 3);
    }
}
