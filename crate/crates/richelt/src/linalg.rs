//! Exact dense linear algebra over the rationals.
//!
//! Rank and kernel computations use fraction-free (Bareiss) elimination on
//! integer matrices obtained by clearing row denominators, so results are
//! exact and deterministic for inputs up to the 248-dimensional adjoint of E8.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn scalar_from_i64(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

/// Parses "p" or "p/q" into a scalar.
pub fn scalar_from_str(s: &str) -> Result<Scalar> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::ShapeMismatch(format!("bad rational literal {s:?}")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::ShapeMismatch(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_int(p)?, den))
        }
    }
}

pub fn scalar_to_string(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| scalar_from_i64(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "add {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * k)
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "matmul {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + a * b;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Exact row rank via Bareiss elimination on the denominator-cleared
    /// integer matrix.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    lcm = num_integer::lcm(lcm, self.get(i, j).denom().clone());
                }
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect();
        bareiss_rank(&mut m)
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Smallest k >= 1 with self^k = 0, or an error if no power up to
    /// `rows` vanishes.
    pub fn nilpotency_index(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("nilpotency of non-square matrix".into()));
        }
        let mut p = self.clone();
        for k in 1..=self.rows.max(1) {
            if p.is_zero() {
                return Ok(k);
            }
            p = p.matmul(self)?;
        }
        if p.is_zero() {
            return Ok(self.rows + 1);
        }
        Err(Error::NotNilpotent)
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| scalar_to_string(self.get(i, j))).collect())
            .collect()
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows in matrix literal".into()));
        }
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            for s in row {
                entries.push(scalar_from_str(s)?);
            }
        }
        Ok(ExactMatrix { rows: r, cols: c, entries })
    }
}

/// Fraction-free elimination; returns the rank and leaves `m` in echelon-ish
/// form. Pivots are chosen by minimal bit length to limit coefficient growth.
fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let mut pivot: Option<usize> = None;
        for i in rank..rows {
            if !m[i][col].is_zero() {
                match pivot {
                    None => pivot = Some(i),
                    Some(p) => {
                        if m[i][col].magnitude().bits() < m[p][col].magnitude().bits() {
                            pivot = Some(i);
                        }
                    }
                }
            }
        }
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        for i in (rank + 1)..rows {
            for j in (col + 1)..cols {
                let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_zero_and_identity() {
        assert_eq!(ExactMatrix::zero(3, 3).rank(), 0);
        assert_eq!(ExactMatrix::identity(4).rank(), 4);
        assert_eq!(ExactMatrix::identity(4).kernel_dim(), 0);
        assert_eq!(ExactMatrix::zero(3, 5).kernel_dim(), 5);
    }

    #[test]
    fn rank_gl4_normal_form() {
        // e_{12} + e_{24}: the gl4 (1,2,1) normal form has rank 2.
        let mut m = ExactMatrix::zero(4, 4);
        m.set(0, 1, Scalar::one());
        m.set(1, 3, Scalar::one());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_with_rationals() {
        let m = ExactMatrix::from_string_rows(&[
            vec!["1/2".into(), "1/3".into()],
            vec!["3/2".into(), "2".into()],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
        // rows proportional: [3/2, 1] = 3 * [1/2, 1/3]
        let singular = ExactMatrix::from_string_rows(&[
            vec!["1/2".into(), "1/3".into()],
            vec!["3/2".into(), "1".into()],
        ])
        .unwrap();
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn j_involution() {
        let j2 = ExactMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(j2.matmul(&j2).unwrap(), ExactMatrix::identity(2));
    }

    #[test]
    fn matmul_shape_error() {
        let a = ExactMatrix::zero(2, 3);
        let b = ExactMatrix::zero(2, 3);
        assert!(a.matmul(&b).is_err());
    }

    #[test]
    fn ad_e_kernel_sl2() {
        // ad(e) on basis {e, h, f}: [e,e]=0, [e,h]=-2e, [e,f]=h.
        let ad_e = ExactMatrix::from_i64_rows(&[
            vec![0, -2, 0],
            vec![0, 0, 1],
            vec![0, 0, 0],
        ]);
        assert_eq!(ad_e.kernel_dim(), 1);
    }
}
