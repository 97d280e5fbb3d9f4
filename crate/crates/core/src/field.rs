//! Exact linear algebra over GF(p) and the rationals.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::MatroidError;

pub trait Field: Clone + Debug + PartialEq {
    type Elem: Clone + Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `a` must be nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Rescales a nonzero vector to its canonical representative of the line it spans.
    fn normalize(&self, v: &mut [Self::Elem]);
}

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, MatroidError> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime {
            return Err(MatroidError::Representation(format!("{p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(MatroidError::Representation(format!("prime {p} is too large")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
    fn normalize(&self, v: &mut [u64]) {
        if let Some(lead) = v.iter().find(|x| **x != 0).copied() {
            let s = self.inv(&lead);
            for x in v.iter_mut() {
                *x = self.mul(x, &s);
            }
        }
    }
}

/// The rational numbers, with arbitrary-precision entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    /// Clears denominators, divides by the gcd, and makes the leading entry positive.
    fn normalize(&self, v: &mut [BigRational]) {
        let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() else {
            return;
        };
        let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from(lcm.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if lead.is_negative() {
            g = -g;
        }
        for (slot, x) in v.iter_mut().zip(ints) {
            *slot = BigRational::from(x / &g);
        }
    }
}

/// A dense matrix over a field, stored row by row. Columns are matroid elements.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self, MatroidError> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(MatroidError::Representation(format!("row {i} has {} entries, expected {cols}", r.len())));
        }
        Ok(Matrix { field, cols, rows })
    }

    /// Builds a matrix whose columns are the given vectors, all of length `dim`.
    pub fn from_columns(field: F, dim: usize, columns: &[Vec<F::Elem>]) -> Self {
        let rows = (0..dim).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
        Matrix { field, cols: columns.len(), rows }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// Rank of the submatrix formed by the listed columns.
    pub fn rank_of_columns(&self, cols: &[usize]) -> usize {
        let mut m: Vec<Vec<F::Elem>> = cols.iter().map(|&j| self.column(j)).collect();
        rref(&self.field, &mut m).len()
    }

    pub fn rank(&self) -> usize {
        let mut m = self.rows.clone();
        rref(&self.field, &mut m).len()
    }

    /// Row-reduces and drops zero rows; the column matroid is unchanged.
    pub fn full_row_rank(&self) -> Self {
        let mut m = self.rows.clone();
        let r = rref(&self.field, &mut m).len();
        m.truncate(r);
        Matrix { field: self.field.clone(), cols: self.cols, rows: m }
    }

    /// Basis of `{y : y . column_j = 0 for every listed j}`.
    pub fn left_kernel(&self, cols: &[usize]) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let d = self.dim();
        let mut m: Vec<Vec<F::Elem>> = cols.iter().map(|&j| self.column(j)).collect();
        let pivots = rref(f, &mut m);
        let mut basis = Vec::new();
        for free in (0..d).filter(|c| !pivots.contains(c)) {
            let mut y = vec![f.zero(); d];
            y[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                y[pc] = f.sub(&f.zero(), &m[row][free]);
            }
            basis.push(y);
        }
        basis
    }

    pub fn select_columns(&self, keep: &[usize]) -> Self {
        let rows = self.rows.iter().map(|r| keep.iter().map(|&j| r[j].clone()).collect()).collect();
        Matrix { field: self.field.clone(), cols: keep.len(), rows }
    }

    /// Quotient by the span of column `e`: pivots on `e` and drops that row.
    /// Column `e` itself remains (now zero) and should be removed by the caller.
    pub fn project_out(&self, e: usize) -> Self {
        let f = &self.field;
        let Some(p) = (0..self.dim()).find(|&i| !f.is_zero(&self.rows[i][e])) else {
            return self.clone();
        };
        let inv = f.inv(&self.rows[p][e]);
        let mut rows = Vec::with_capacity(self.dim() - 1);
        for (i, row) in self.rows.iter().enumerate() {
            if i == p {
                continue;
            }
            let factor = f.mul(&row[e], &inv);
            rows.push(row.iter().zip(&self.rows[p]).map(|(x, y)| f.sub(x, &f.mul(&factor, y))).collect());
        }
        Matrix { field: self.field.clone(), cols: self.cols, rows }
    }
}

/// In-place reduced row echelon form. Returns the pivot column of each nonzero row;
/// the nonzero rows are moved to the top.
pub fn rref<F: Field>(f: &F, m: &mut [Vec<F::Elem>]) -> Vec<usize> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !f.is_zero(&m[i][col])) else {
            continue;
        };
        m.swap(row, p);
        let inv = f.inv(&m[row][col]);
        for x in m[row].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != row && !f.is_zero(&r[col]) {
                let factor = r[col].clone();
                for (x, y) in r.iter_mut().zip(&pivot_row) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}
