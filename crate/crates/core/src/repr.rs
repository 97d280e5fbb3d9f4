//! Matrix representations of matroids over GF(p) or the rationals.

use num_rational::BigRational;

use crate::error::MatroidError;
use crate::field::{Field, Matrix, PrimeField, Rationals};
use crate::set::ElementSet;

/// The coefficient field of a [`Representation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Prime(u64),
    Rational,
}

/// Column vectors, one per element. Independence of elements is linear independence
/// of their columns.
#[derive(Clone, Debug, PartialEq)]
pub enum Representation {
    Prime(Matrix<PrimeField>),
    Rational(Matrix<Rationals>),
}

macro_rules! each {
    ($self:expr, $m:ident => $body:expr) => {
        match $self {
            Representation::Prime($m) => $body,
            Representation::Rational($m) => $body,
        }
    };
}

macro_rules! each_map {
    ($self:expr, $m:ident => $body:expr) => {
        match $self {
            Representation::Prime($m) => Representation::Prime($body),
            Representation::Rational($m) => Representation::Rational($body),
        }
    };
}

impl Representation {
    /// GF(p) matrix given by rows; entries are reduced mod p.
    pub fn over_prime(p: u64, n: usize, rows: Vec<Vec<i64>>) -> Result<Self, MatroidError> {
        let f = PrimeField::new(p)?;
        let rows = rows.into_iter().map(|r| r.into_iter().map(|x| f.reduce(x)).collect()).collect();
        Ok(Representation::Prime(Matrix::new(f, n, rows)?))
    }

    pub fn over_rationals(n: usize, rows: Vec<Vec<BigRational>>) -> Result<Self, MatroidError> {
        Ok(Representation::Rational(Matrix::new(Rationals, n, rows)?))
    }

    /// Rational matrix with integer entries.
    pub fn over_rationals_int(n: usize, rows: Vec<Vec<i64>>) -> Result<Self, MatroidError> {
        let rows =
            rows.into_iter().map(|r| r.into_iter().map(|x| BigRational::from_integer(x.into())).collect()).collect();
        Self::over_rationals(n, rows)
    }

    pub fn field_kind(&self) -> FieldKind {
        match self {
            Representation::Prime(m) => FieldKind::Prime(m.field().modulus()),
            Representation::Rational(_) => FieldKind::Rational,
        }
    }

    /// Number of columns (elements).
    pub fn n(&self) -> usize {
        each!(self, m => m.cols())
    }

    /// Number of rows.
    pub fn dim(&self) -> usize {
        each!(self, m => m.dim())
    }

    pub fn rank(&self) -> usize {
        each!(self, m => m.rank())
    }

    pub fn rank_of(&self, s: &ElementSet) -> usize {
        let cols = s.to_vec();
        each!(self, m => m.rank_of_columns(&cols))
    }

    /// Same column matroid, with exactly `rank()` rows.
    pub fn reduced(&self) -> Self {
        each_map!(self, m => m.full_row_rank())
    }

    /// Entries as display strings, row by row.
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        each!(self, m => m
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect())
    }

    /// Drops the columns in `d`; surviving columns keep their relative order.
    pub fn delete(&self, d: &ElementSet) -> Self {
        let keep = d.complement().to_vec();
        each_map!(self, m => m.select_columns(&keep).full_row_rank())
    }

    /// Quotient by the span of the columns in `c`, then drops those columns.
    pub fn contract(&self, c: &ElementSet) -> Self {
        let keep = c.complement().to_vec();
        each_map!(self, m => {
            let mut q = m.clone();
            for e in c.iter() {
                q = q.project_out(e);
            }
            q.select_columns(&keep).full_row_rank()
        })
    }

    /// For each hyperplane, the canonical linear functional vanishing on its columns.
    ///
    /// The representation is first reduced to full row rank, so the functional
    /// lives in a space of dimension equal to the rank. Fails when some
    /// solution space is not one-dimensional, which means `hyperplanes` are not
    /// the hyperplanes of this column matroid.
    pub fn hyperplane_covectors(&self, hyperplanes: &[ElementSet]) -> Result<Representation, MatroidError> {
        fn build<F: Field>(m: &Matrix<F>, hyperplanes: &[ElementSet]) -> Result<Matrix<F>, MatroidError> {
            let m = m.full_row_rank();
            let mut covectors = Vec::with_capacity(hyperplanes.len());
            for h in hyperplanes {
                let mut ker = m.left_kernel(&h.to_vec());
                if ker.len() != 1 {
                    return Err(MatroidError::Representation(format!(
                        "covector space of {h} has dimension {}, expected 1",
                        ker.len()
                    )));
                }
                let mut v = ker.pop().unwrap();
                m.field().normalize(&mut v);
                covectors.push(v);
            }
            Ok(Matrix::from_columns(m.field().clone(), m.dim(), &covectors))
        }
        Ok(each_map!(self, m => build(m, hyperplanes)?))
    }
}
