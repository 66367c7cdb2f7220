//! Exact linear algebra over the coefficient fields.
//!
//! `F_p` matrices are reduced with plain Gauss–Jordan on `u64` residues.
//! Rational matrices are first scaled to integer rows and brought to echelon
//! form with Bareiss' fraction-free elimination, so every intermediate entry
//! is a minor of the input and stays small; only the final back substitution
//! touches fractions.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{Coeff, Field};

/// Rank of a dense matrix given by rows of length `ncols`.
pub fn rank(field: Field, rows: &[Vec<Coeff>], ncols: usize) -> usize {
    match field {
        Field::Prime(p) => {
            let mut m = to_residues(rows, ncols);
            echelon_mod_p(&mut m, ncols, p).len()
        }
        Field::Rational => {
            let mut m = to_integer_rows(rows, ncols);
            echelon_bareiss(&mut m, ncols).len()
        }
    }
}

/// Some solution `x` of `A x = b`, with free variables set to zero, or
/// `None` when the system is inconsistent. `rows` is `A`, `rhs` is `b`.
pub fn solve(field: Field, rows: &[Vec<Coeff>], rhs: &[Coeff], ncols: usize) -> Option<Vec<Coeff>> {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per equation");
    let augmented: Vec<Vec<Coeff>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.resize(ncols, field.zero());
            row.push(b.clone());
            row
        })
        .collect();
    let width = ncols + 1;
    match field {
        Field::Prime(p) => solve_residues(to_residues(&augmented, width), ncols, p),
        Field::Rational => solve_integers(to_integer_rows(&augmented, width), ncols),
    }
}

/// [`solve`] for a sparse system: row `i` lists its nonzero `(column, value)`
/// entries. The dense working matrix is built directly in the internal
/// representation.
pub fn solve_sparse(field: Field, rows: &[Vec<(usize, Coeff)>], rhs: &[Coeff], ncols: usize) -> Option<Vec<Coeff>> {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per equation");
    let width = ncols + 1;
    match field {
        Field::Prime(p) => {
            let m = rows
                .iter()
                .zip(rhs)
                .map(|(r, b)| {
                    let mut out = vec![0u64; width];
                    for (j, c) in r.iter().map(|(j, c)| (*j, c)).chain(core::iter::once((ncols, b))) {
                        match c {
                            Coeff::P(v) => out[j] = *v as u64,
                            Coeff::Q(_) => panic!("rational entry in a prime-field matrix"),
                        }
                    }
                    out
                })
                .collect();
            solve_residues(m, ncols, p)
        }
        Field::Rational => {
            let m = rows
                .iter()
                .zip(rhs)
                .map(|(r, b)| {
                    let mut den = BigInt::one();
                    for c in r.iter().map(|(_, c)| c).chain(core::iter::once(b)) {
                        if let Coeff::Q(q) = c {
                            den = den.lcm(q.denom());
                        }
                    }
                    let mut out = vec![BigInt::zero(); width];
                    for (j, c) in r.iter().map(|(j, c)| (*j, c)).chain(core::iter::once((ncols, b))) {
                        match c {
                            Coeff::Q(q) => out[j] = q.numer() * (&den / q.denom()),
                            Coeff::P(_) => panic!("residue entry in a rational matrix"),
                        }
                    }
                    out
                })
                .collect();
            solve_integers(m, ncols)
        }
    }
}

fn solve_residues(mut m: Vec<Vec<u64>>, ncols: usize, p: u32) -> Option<Vec<Coeff>> {
    let pivots = echelon_mod_p(&mut m, ncols + 1, p);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    // Gauss–Jordan leaves pivots equal to one with zero columns above.
    let mut x = vec![Coeff::P(0); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = Coeff::P(m[r][ncols] as u32);
    }
    Some(x)
}

fn solve_integers(mut m: Vec<Vec<BigInt>>, ncols: usize) -> Option<Vec<Coeff>> {
    let pivots = echelon_bareiss(&mut m, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let mut acc = BigRational::from_integer(m[r][ncols].clone());
        for (j, xj) in x.iter().enumerate().skip(c + 1).take(ncols - c - 1) {
            if !m[r][j].is_zero() && !xj.is_zero() {
                acc -= xj * BigRational::from_integer(m[r][j].clone());
            }
        }
        x[c] = acc / BigRational::from_integer(m[r][c].clone());
    }
    Some(x.into_iter().map(Coeff::Q).collect())
}

fn to_residues(rows: &[Vec<Coeff>], ncols: usize) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|r| {
            let mut out = vec![0u64; ncols];
            for (slot, c) in out.iter_mut().zip(r) {
                match c {
                    Coeff::P(v) => *slot = *v as u64,
                    Coeff::Q(_) => panic!("rational entry in a prime-field matrix"),
                }
            }
            out
        })
        .collect()
}

/// Reduced row echelon form in place; returns pivot columns, one per
/// nonzero row (those rows come first).
fn echelon_mod_p(m: &mut [Vec<u64>], ncols: usize, p: u32) -> Vec<usize> {
    let p = p as u64;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(found) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, found);
        let inv = crate::scalar::inv_mod(m[r][c] as u32, p as u32) as u64;
        for v in m[r][c..].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = core::mem::take(&mut m[r]);
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row.is_empty() || row[c] == 0 {
                continue;
            }
            let f = p - row[c];
            for (v, &a) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *v = (*v + f * a) % p;
            }
        }
        m[r] = pivot_row;
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

fn to_integer_rows(rows: &[Vec<Coeff>], ncols: usize) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let mut den = BigInt::one();
            for c in r {
                if let Coeff::Q(q) = c {
                    den = den.lcm(q.denom());
                }
            }
            let mut out = vec![BigInt::zero(); ncols];
            for (slot, c) in out.iter_mut().zip(r) {
                match c {
                    Coeff::Q(q) => *slot = q.numer() * (&den / q.denom()),
                    Coeff::P(_) => panic!("residue entry in a rational matrix"),
                }
            }
            out
        })
        .collect()
}

/// Fraction-free row echelon form (not reduced); returns pivot columns.
fn echelon_bareiss(m: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(found) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, found);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = core::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &pivot * &row[j] - &lead * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Coeff>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Field::Rational.from_i64(v)).collect())
            .collect()
    }

    #[test]
    fn rank_over_both_fields() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(Field::Rational, &m, 3), 2);
        let f = Field::prime(5).unwrap();
        // rows (1, 2) and (3, 1) are dependent mod 5 but not over Q
        let a = vec![vec![f.from_i64(1), f.from_i64(2)], vec![f.from_i64(3), f.from_i64(1)]];
        assert_eq!(rank(f, &a, 2), 1);
        assert_eq!(rank(Field::Rational, &q(&[&[1, 2], &[3, 1]]), 2), 2);
    }

    #[test]
    fn solves_and_detects_inconsistency() {
        let a = q(&[&[2, 1], &[1, 3]]);
        let b = vec![Field::Rational.from_i64(3), Field::Rational.from_i64(5)];
        let x = solve(Field::Rational, &a, &b, 2).unwrap();
        let half = |n: i64, d: i64| Coeff::Q(BigRational::new(n.into(), d.into()));
        assert_eq!(x, vec![half(4, 5), half(7, 5)]);
        let a = q(&[&[1, 1], &[2, 2]]);
        let b = vec![Field::Rational.from_i64(1), Field::Rational.from_i64(3)];
        assert!(solve(Field::Rational, &a, &b, 2).is_none());
    }

    #[test]
    fn sparse_agrees_with_dense() {
        let dense = q(&[&[0, 2, 1], &[1, 0, 3], &[1, 2, 4]]);
        let b: Vec<Coeff> = [5, 7, 12].iter().map(|&v| Field::Rational.from_i64(v)).collect();
        let sparse: Vec<Vec<(usize, Coeff)>> = dense
            .iter()
            .map(|r| r.iter().cloned().enumerate().filter(|(_, c)| !Field::Rational.is_zero(c)).collect())
            .collect();
        assert_eq!(solve(Field::Rational, &dense, &b, 3), solve_sparse(Field::Rational, &sparse, &b, 3));
        let f = Field::prime(101).unwrap();
        let to_p = |c: &Coeff| f.from_bigint(Field::Rational.to_ratio(c).numer());
        let dp: Vec<Vec<Coeff>> = dense.iter().map(|r| r.iter().map(to_p).collect()).collect();
        let sp: Vec<Vec<(usize, Coeff)>> = sparse.iter().map(|r| r.iter().map(|(j, c)| (*j, to_p(c))).collect()).collect();
        let bp: Vec<Coeff> = b.iter().map(to_p).collect();
        assert_eq!(solve(f, &dp, &bp, 3), solve_sparse(f, &sp, &bp, 3));
    }

    #[test]
    fn underdetermined_prime_field_system() {
        let f = Field::prime(7).unwrap();
        let a = vec![vec![f.from_i64(1), f.from_i64(2), f.from_i64(3)]];
        let b = vec![f.from_i64(4)];
        let x = solve(f, &a, &b, 3).unwrap();
        let lhs = (0..3).fold(f.zero(), |acc, j| f.add(&acc, &f.mul(&a[0][j], &x[j])));
        assert_eq!(lhs, b[0]);
    }
}
