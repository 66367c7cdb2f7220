use core::fmt;

/// Upper bound on the number of ring variables. Monomials are fixed-size
/// exponent arrays so that they are `Copy`.
pub const MAX_VARS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS] };

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
        }
        m
    }

    pub fn var(index: usize, exp: u32) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[index] = u16::try_from(exp).expect("exponent overflow");
        m
    }

    #[inline]
    pub fn exp(&self, index: usize) -> u32 {
        self.exps[index] as u32
    }

    pub fn set_exp(&mut self, index: usize, e: u32) {
        self.exps[index] = u16::try_from(e).expect("exponent overflow");
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Degree restricted to the variables whose bit is set in `mask`.
    #[inline]
    pub fn masked_degree(&self, mask: u32) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e as u32)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            debug_assert!(*a >= *b);
            *a -= *b;
        }
        m
    }

    /// Colon `self : other`, i.e. `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a = a.saturating_sub(*b);
        }
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a = (*a).max(*b);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables occurring in the monomial.
    pub fn support(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub(crate) fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1]);
        let b = Monomial::from_exponents(&[1, 3]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b), Monomial::from_exponents(&[2, 3]));
        assert!(a.divides(&a.lcm(&b)));
        assert_eq!(a.lcm(&b).div(&a), Monomial::from_exponents(&[0, 2]));
        assert_eq!(a.colon(&b), Monomial::from_exponents(&[1, 0]));
        assert!(!a.is_coprime(&b));
        assert_eq!(a.support(), 0b11);
    }
}
