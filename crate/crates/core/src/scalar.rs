//! Coefficient fields: arbitrary-precision rationals and prime fields.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 32003;

/// The coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// `F_p` for an odd prime `p < 2^31`, so products of residues fit in `u64`.
    Prime(u32),
}

/// A field element. `Q` values are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); `P` residues lie in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    P(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p == 2 || !is_prime(p) || p >= 1 << 31 {
            return Err(Error::invalid(alloc::format!(
                "{p} is not an odd prime below 2^31"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::zero()),
            Field::Prime(_) => Coeff::P(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::one()),
            Field::Prime(_) => Coeff::P(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Coeff::P(v.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Coeff::P(r.to_u32().expect("residue below p"))
            }
        }
    }

    /// Maps a rational number into the field; fails in `F_p` when `p`
    /// divides the denominator.
    pub fn from_ratio(&self, v: &BigRational) -> Result<Coeff> {
        match self {
            Field::Rational => Ok(Coeff::Q(v.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                let inv = self
                    .inv(&den)
                    .ok_or_else(|| Error::invalid("denominator vanishes modulo p"))?;
                Ok(self.mul(&num, &inv))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(q) => q.is_zero(),
            Coeff::P(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(q) => q.is_one(),
            Coeff::P(v) => *v == 1,
        }
    }

    #[inline]
    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => {
                Coeff::P(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x + y),
            _ => panic!("coefficient from a different field"),
        }
    }

    #[inline]
    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Prime(p), Coeff::P(x)) => Coeff::P(if *x == 0 { 0 } else { *p - *x }),
            (Field::Rational, Coeff::Q(x)) => Coeff::Q(-x),
            _ => panic!("coefficient from a different field"),
        }
    }

    #[inline]
    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => {
                Coeff::P(((*x as u64 + *p as u64 - *y as u64) % *p as u64) as u32)
            }
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x - y),
            _ => panic!("coefficient from a different field"),
        }
    }

    #[inline]
    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => {
                Coeff::P(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x * y),
            _ => panic!("coefficient from a different field"),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (Field::Prime(p), Coeff::P(x)) => Some(Coeff::P(inv_mod(*x, *p))),
            (Field::Rational, Coeff::Q(x)) => Some(Coeff::Q(x.recip())),
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        let inv = self.inv(b).expect("division by zero");
        self.mul(a, &inv)
    }

    /// A uniformly random nonzero element. Over `Q` the values are small
    /// integers in `[-bound, bound]`, which keeps rational arithmetic cheap.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Coeff {
        match self {
            Field::Prime(p) => Coeff::P(rng.gen_range(1..*p)),
            Field::Rational => {
                let b = bound.max(1);
                loop {
                    let v = rng.gen_range(-b..=b);
                    if v != 0 {
                        return self.from_i64(v);
                    }
                }
            }
        }
    }

    /// The canonical rational representative (residues map to `[0, p)`).
    pub fn to_ratio(&self, a: &Coeff) -> BigRational {
        match a {
            Coeff::Q(q) => q.clone(),
            Coeff::P(v) => BigRational::from_integer(BigInt::from(*v)),
        }
    }
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u32
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::P(v) => write!(f, "{v}"),
        }
    }
}

impl Coeff {
    /// Sign used when printing: only rationals carry one.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_negative(),
            Coeff::P(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic_is_reduced() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(2);
        assert!(f.is_zero(&f.add(&a, &b)));
        assert_eq!(f.mul(&a, &b), Coeff::P(1));
        assert_eq!(f.from_i64(-1), Coeff::P(4));
        assert_eq!(f.inv(&a), Some(Coeff::P(2)));
    }

    #[test]
    fn rejects_non_primes() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(32003).is_ok());
    }

    #[test]
    fn rational_division_stays_in_lowest_terms() {
        let q = Field::Rational;
        let r = q.div(&q.from_i64(6), &q.from_i64(-4));
        let Coeff::Q(v) = &r else { unreachable!() };
        assert_eq!(*v.numer(), BigInt::from(-3));
        assert_eq!(*v.denom(), BigInt::from(2));
    }

    #[test]
    fn ratio_into_prime_field() {
        let f = Field::prime(7).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.from_ratio(&half).unwrap(), Coeff::P(4));
        let seventh = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert!(f.from_ratio(&seventh).is_err());
    }
}
