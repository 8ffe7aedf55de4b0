use std::fmt::Debug;

use super::Rational;

/// The commutative-ring operations the polynomial and determinant code need.
///
/// Implemented by [`Rational`] and by finite Puiseux sums, so the same sparse
/// polynomial and cofactor-determinant code serves both coefficient fields.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(value: i64) -> Self;

    fn scale_int(&self, factor: i64) -> Self {
        self.mul(&Self::from_int(factor))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

/// Determinant by cofactor expansion along the first row.
///
/// Works over any [`Ring`]; only meant for the small minors of Puiseux
/// matrices, where fraction-free elimination is unavailable.
pub fn cofactor_det<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    match n {
        0 => R::one(),
        1 => rows[0][0].clone(),
        2 => rows[0][0].mul(&rows[1][1]).sub(&rows[0][1].mul(&rows[1][0])),
        _ => {
            let mut acc = R::zero();
            for col in 0..n {
                if rows[0][col].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<R>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = rows[0][col].mul(&cofactor_det(&sub));
                acc = if col % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;

    #[test]
    fn cofactor_matches_hand_expansion() {
        let m = vec![vec![q(2, 1), q(0, 1), q(1, 1)], vec![q(1, 1), q(3, 1), q(2, 1)], vec![q(1, 1), q(1, 1), q(1, 1)]];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(cofactor_det(&m), q(0, 1));
        let v = vec![vec![q(1, 1), q(1, 1), q(1, 1)], vec![q(1, 1), q(2, 1), q(3, 1)], vec![q(1, 1), q(4, 1), q(9, 1)]];
        assert_eq!(cofactor_det(&v), q(2, 1));
    }
}
