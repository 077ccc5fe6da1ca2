//! The generic matrix of indeterminates, minors and cominors, determinants by
//! permutation expansion, and the determinant-of-partial-derivatives
//! operator.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::perm::{IndexSet, Permutation};
use crate::poly::{Polynomial, VarId};

/// Hard cap on symbolic determinant expansion; n! terms beyond this are not
/// worth materialising.
pub const MAX_EXPANSION_DIM: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("row set has {rows} elements but column set has {cols}")]
    SizeMismatch { rows: usize, cols: usize },
    #[error("dimension {size} exceeds the expansion limit {max}")]
    TooLarge { size: usize, max: usize },
    #[error("malformed matrix: {0}")]
    Shape(String),
}

/// Row and column selections for a minor or cominor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorSpec {
    pub rows: IndexSet,
    pub cols: IndexSet,
}

impl MinorSpec {
    pub fn new(rows: IndexSet, cols: IndexSet) -> Self {
        MinorSpec { rows, cols }
    }
}

/// A grid of polynomials. The generic n×n matrix has the single indeterminate
/// `x[i,j]` at entry (i, j); minors of it are rectangular in general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl SymbolicMatrix {
    /// The generic matrix of indeterminates.
    pub fn generic(n: usize) -> Self {
        let entries = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| Polynomial::variable(VarId::new(i, j))))
            .collect();
        SymbolicMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self, MatrixError> {
        let row_count = rows.len();
        let col_count = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|r| r.len() != col_count) {
            return Err(MatrixError::Shape("ragged rows".into()));
        }
        Ok(SymbolicMatrix {
            rows: row_count,
            cols: col_count,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Polynomial::constant(v)).collect())
                .collect(),
        )
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at (row, col), 1-based. Panics if out of range.
    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        assert!(
            (1..=self.rows).contains(&row) && (1..=self.cols).contains(&col),
            "entry ({row},{col}) out of range for {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[(row - 1) * self.cols + (col - 1)]
    }

    fn check_spec(&self, spec: &MinorSpec) -> Result<(), MatrixError> {
        for r in spec.rows.iter() {
            if r > self.rows {
                return Err(MatrixError::IndexOutOfRange {
                    index: r,
                    size: self.rows,
                });
            }
        }
        for c in spec.cols.iter() {
            if c > self.cols {
                return Err(MatrixError::IndexOutOfRange {
                    index: c,
                    size: self.cols,
                });
            }
        }
        Ok(())
    }

    /// The submatrix keeping the selected rows and columns, order inherited.
    pub fn minor(&self, spec: &MinorSpec) -> Result<SymbolicMatrix, MatrixError> {
        self.check_spec(spec)?;
        let entries = spec
            .rows
            .iter()
            .flat_map(|r| spec.cols.iter().map(move |c| self.entry(r, c).clone()))
            .collect();
        Ok(SymbolicMatrix {
            rows: spec.rows.len(),
            cols: spec.cols.len(),
            entries,
        })
    }

    /// The complementary submatrix: rows not in the spec, columns not in the
    /// spec.
    pub fn cominor(&self, spec: &MinorSpec) -> Result<SymbolicMatrix, MatrixError> {
        self.check_spec(spec)?;
        let rows = spec
            .rows
            .complement_in(&IndexSet::range(self.rows))
            .expect("checked above");
        let cols = spec
            .cols
            .complement_in(&IndexSet::range(self.cols))
            .expect("checked above");
        self.minor(&MinorSpec::new(rows, cols))
    }

    /// Sum over all permutations of the signed entry products. The 0×0
    /// determinant is 1.
    pub fn determinant(&self) -> Result<Polynomial, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > MAX_EXPANSION_DIM {
            return Err(MatrixError::TooLarge {
                size: n,
                max: MAX_EXPANSION_DIM,
            });
        }
        let mut det = Polynomial::zero();
        for p in Permutation::all(n) {
            let mut term = Polynomial::one();
            for i in 1..=n {
                term = term.mul(self.entry(i, p.image(i)));
            }
            det = det.add(&term.scale(&p.sign().to_bigint()));
        }
        Ok(det)
    }
}

/// Applies the determinant of the selected minor of the partial-derivative
/// matrix: Σ over τ of sgn(τ) times the iterated partial derivative along the
/// τ-matched row/column pairs. Row and column sets must have equal size.
pub fn apply_omega_det(spec: &MinorSpec, p: &Polynomial) -> Result<Polynomial, MatrixError> {
    let k = spec.rows.len();
    if k != spec.cols.len() {
        return Err(MatrixError::SizeMismatch {
            rows: spec.rows.len(),
            cols: spec.cols.len(),
        });
    }
    let rows = spec.rows.elements();
    let cols = spec.cols.elements();
    let mut out = Polynomial::zero();
    for tau in Permutation::all(k) {
        let mut q = p.clone();
        for l in 1..=k {
            if q.is_zero() {
                break;
            }
            q = q.partial_derivative(VarId::new(rows[l - 1], cols[tau.image(l) - 1]));
        }
        out = out.add(&q.scale(&tau.sign().to_bigint()));
    }
    Ok(out)
}

/// Exact integer determinant by Bareiss fraction-free elimination. Works for
/// any size; used as the numeric path in verification oracles.
pub fn int_determinant(rows: &[Vec<BigInt>]) -> Result<BigInt, MatrixError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(MatrixError::NotSquare {
            rows: n,
            cols: rows.iter().map(Vec::len).max().unwrap_or(0),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev_pivot = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                // exact division: Bareiss guarantees divisibility
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev_pivot;
            }
        }
        prev_pivot = m[k][k].clone();
    }
    Ok(sign * m[n - 1][n - 1].clone())
}
