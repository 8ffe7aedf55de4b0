//! Rational matrices, maximal minors and exact eigenvalue sign counts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{KernelError, Rational, UniPoly};
use crate::subset::BitSet;
use crate::verdict::{Certificate, Verdict, Witness};

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Plücker coordinates: every maximal minor of a `k × n` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlueckerVector {
    pub k: usize,
    pub n: usize,
    /// Keyed by column set, complete over all `k`-subsets.
    pub values: BTreeMap<BitSet, Rational>,
}

/// Inertia of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EigenSignature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self, KernelError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(KernelError::EmptyMatrix);
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(KernelError::Ragged);
        }
        Ok(RationalMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, KernelError> {
        RationalMatrix::new(rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect()).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// The square submatrix on the given columns (all rows).
    pub fn columns(&self, cols: BitSet) -> RationalMatrix {
        let idx = cols.to_vec();
        let mut out = RationalMatrix::zeros(self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut m = self.to_rows();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let pivot = m[rank][col].clone();
            for r in 0..self.rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = &m[r][col] / &pivot;
                    for c in col..self.cols {
                        let v = &m[r][c] - &(&f * &m[rank][c]);
                        m[r][c] = v;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Determinant via Bareiss fraction-free elimination on the
    /// denominator-cleared rows.
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                scale *= &lcm;
                row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect();
        let det = bareiss(&mut m);
        Rational::new(det, scale)
    }

    /// `det(λI − S)` by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Result<UniPoly, KernelError> {
        if !self.is_symmetric() {
            return Err(KernelError::NotSymmetric);
        }
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = RationalMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·I
            let mut next = self.mul(&m);
            for i in 0..n {
                let v = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, v);
            }
            let am = self.mul(&next);
            coeffs[n - k] = -(am.trace() / Rational::from(k));
            m = next;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Exact inertia via Descartes' rule on the characteristic polynomial.
    ///
    /// Symmetric matrices have only real eigenvalues, so sign changes count
    /// positive roots exactly (and negative roots via `p(−λ)`).
    pub fn eigen_signature(&self) -> Result<EigenSignature, KernelError> {
        let p = self.char_poly()?;
        let zero = p.zero_root_multiplicity();
        let positive = p.descartes_sign_changes();
        let negative = p.reflect().descartes_sign_changes();
        Ok(EigenSignature { positive, negative, zero })
    }

    pub fn count_positive_eigenvalues(&self) -> Result<EigenSignature, KernelError> {
        self.eigen_signature()
    }

    /// All maximal (`k × k`) minors.
    pub fn maximal_minors(&self) -> Result<PlueckerVector, KernelError> {
        let (k, n) = (self.rows, self.cols);
        if k > n {
            return Err(KernelError::TooManyRows { rows: k, cols: n });
        }
        let values: BTreeMap<BitSet, Rational> =
            BitSet::k_subsets(n, k).into_iter().map(|s| (s, self.columns(s).det())).collect();
        if values.values().all(Rational::is_zero) {
            return Err(KernelError::RankDeficient { rank: self.rank(), rows: k });
        }
        Ok(PlueckerVector { k, n, values })
    }

    /// Every maximal minor is nonnegative.
    pub fn is_totally_nonnegative(&self) -> Result<Verdict, KernelError> {
        let (k, n) = (self.rows, self.cols);
        if k > n {
            return Err(KernelError::TooManyRows { rows: k, cols: n });
        }
        let mut examined = 0u64;
        for s in BitSet::k_subsets(n, k) {
            examined += 1;
            let minor = self.columns(s).det();
            if minor.is_negative() {
                return Ok(Verdict::fail(Witness::NegativeMinor { set: s, minor }).with_relations(examined));
            }
        }
        Ok(Verdict::certified(Certificate::AllMinorsNonnegative).with_relations(examined))
    }
}

fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return sign;
    }
    sign * &m[n - 1][n - 1]
}

impl PlueckerVector {
    pub fn get(&self, s: BitSet) -> &Rational {
        &self.values[&s]
    }

    /// Column sets with a nonzero minor.
    pub fn support(&self) -> Vec<BitSet> {
        self.values.iter().filter(|(_, v)| !v.is_zero()).map(|(s, _)| *s).collect()
    }
}

/// `k × n` Vandermonde matrix with entry `(r, c) = params[c]^r`.
///
/// Strictly increasing positive parameters make every maximal minor positive.
pub fn vandermonde_matrix(k: usize, params: &[Rational]) -> Result<RationalMatrix, KernelError> {
    if k == 0 || params.len() < k {
        return Err(KernelError::BadParams(format!("need at least k = {k} >= 1 parameters, got {}", params.len())));
    }
    if params.iter().any(|p| !p.is_positive()) {
        return Err(KernelError::BadParams("parameters must be positive".into()));
    }
    if params.windows(2).any(|w| w[0] >= w[1]) {
        return Err(KernelError::BadParams("parameters must be strictly increasing".into()));
    }
    RationalMatrix::new((0..k).map(|r| params.iter().map(|p| p.pow(r as i32)).collect()).collect())
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|r| self.row(r))).finish()
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq((0..self.rows).map(|r| self.row(r)))
    }
}
