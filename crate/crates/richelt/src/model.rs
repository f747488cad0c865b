//! Classical matrix models: sl_{n+1}, and so_N / sp_N realized as matrices
//! (skew-)symmetric about the anti-diagonal.
//!
//! Positions are 1-based throughout, matching the usual block pictures. The
//! mirror of (i,j) is (N+1-j, N+1-i).

use crate::error::{Error, Result};
use crate::linalg::{scalar_from_i64, ExactMatrix, Scalar};
use crate::roots::{LieFamily, LieType, Root};
use num_traits::Zero;

#[derive(Debug, Clone, Copy)]
pub struct MatrixModel {
    pub lie_type: LieType,
}

impl MatrixModel {
    pub fn new(lie_type: LieType) -> Result<Self> {
        if !lie_type.is_classical() {
            return Err(Error::Unsupported(format!(
                "no matrix model for {lie_type}"
            )));
        }
        Ok(MatrixModel { lie_type })
    }

    /// Matrix size N.
    pub fn nmat(&self) -> usize {
        let n = self.lie_type.rank;
        match self.lie_type.family {
            LieFamily::A => n + 1,
            LieFamily::B => 2 * n + 1,
            LieFamily::C | LieFamily::D => 2 * n,
            _ => unreachable!(),
        }
    }

    pub fn mirror(&self, i: usize, j: usize) -> (usize, usize) {
        let nm = self.nmat();
        (nm + 1 - j, nm + 1 - i)
    }

    /// Sign s with a_{mirror} = s * a_{ij} for members; None for type A.
    fn mirror_sign(&self, i: usize, j: usize) -> Option<i64> {
        let n = self.lie_type.rank;
        match self.lie_type.family {
            LieFamily::A => None,
            LieFamily::B | LieFamily::D => Some(-1),
            LieFamily::C => {
                let same_half = (i <= n && j <= n) || (i > n && j > n);
                Some(if same_half { -1 } else { 1 })
            }
            _ => unreachable!(),
        }
    }

    pub fn is_member(&self, m: &ExactMatrix) -> bool {
        let nm = self.nmat();
        if m.rows() != nm || m.cols() != nm {
            return false;
        }
        match self.lie_type.family {
            LieFamily::A => {
                let mut tr = Scalar::zero();
                for i in 0..nm {
                    tr += m.get(i, i);
                }
                tr.is_zero()
            }
            _ => {
                for i in 1..=nm {
                    for j in 1..=nm {
                        let (mi, mj) = self.mirror(i, j);
                        let s = self.mirror_sign(i, j).unwrap();
                        let want = m.get(i - 1, j - 1) * scalar_from_i64(s);
                        if *m.get(mi - 1, mj - 1) != want {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    /// Whether position (i,j) carries a root vector of the model.
    pub fn carries_root_vector(&self, i: usize, j: usize) -> bool {
        let nm = self.nmat();
        if i == 0 || j == 0 || i > nm || j > nm || i == j {
            return false;
        }
        match self.lie_type.family {
            LieFamily::B | LieFamily::D => i + j != nm + 1,
            _ => true,
        }
    }

    /// The root vector supported at (i,j): E_ij for sl, E_ij with its
    /// mirrored partner for so/sp (anti-diagonal sp positions are single
    /// entries).
    pub fn root_vector(&self, i: usize, j: usize) -> Result<ExactMatrix> {
        if !self.carries_root_vector(i, j) {
            return Err(Error::NoRootVector(
                i,
                j,
                format!("in the {} model", self.lie_type),
            ));
        }
        let nm = self.nmat();
        let mut m = ExactMatrix::zero(nm, nm);
        m.set(i - 1, j - 1, scalar_from_i64(1));
        if let Some(s) = self.mirror_sign(i, j) {
            let (mi, mj) = self.mirror(i, j);
            if (mi, mj) != (i, j) {
                m.set(mi - 1, mj - 1, scalar_from_i64(s));
            }
        }
        Ok(m)
    }

    /// Diagonal Cartan generator h_k = E_kk - E_{N+1-k,N+1-k}, k = 1..n.
    /// For type A these span the diagonal of sl together with the other
    /// E_kk differences; they are used only as a convenient torus basis.
    pub fn cartan_vector(&self, k: usize) -> ExactMatrix {
        let nm = self.nmat();
        let mut m = ExactMatrix::zero(nm, nm);
        m.set(k - 1, k - 1, scalar_from_i64(1));
        m.set(nm - k, nm - k, scalar_from_i64(-1));
        m
    }

    /// epsilon-weight of row k as (index 1..=n, sign), None for the middle
    /// row of so_{2n+1}. For type A every row k has weight eps_k.
    fn row_eps(&self, k: usize) -> Option<(usize, i64)> {
        let n = self.lie_type.rank;
        let nm = self.nmat();
        if self.lie_type.family == LieFamily::A {
            return Some((k, 1));
        }
        if k <= n {
            Some((k, 1))
        } else if k > nm - n {
            Some((nm + 1 - k, -1))
        } else {
            None
        }
    }

    /// epsilon-coordinates of the weight at (i,j); length N for type A,
    /// length n otherwise.
    pub fn weight_eps(&self, i: usize, j: usize) -> Vec<i64> {
        let len = if self.lie_type.family == LieFamily::A {
            self.nmat()
        } else {
            self.lie_type.rank
        };
        let mut c = vec![0i64; len];
        if let Some((k, s)) = self.row_eps(i) {
            c[k - 1] += s;
        }
        if let Some((k, s)) = self.row_eps(j) {
            c[k - 1] -= s;
        }
        c
    }

    /// Converts epsilon-coordinates to simple-root coordinates.
    pub fn eps_to_root(&self, c: &[i64]) -> Result<Root> {
        let n = self.lie_type.rank;
        let half = |v: i64, what: &str| -> Result<i64> {
            if v % 2 != 0 {
                return Err(Error::Unsupported(format!(
                    "weight is not in the root lattice ({what})"
                )));
            }
            Ok(v / 2)
        };
        let prefix = |j: usize| -> i64 { c[..j].iter().sum() };
        let k = match self.lie_type.family {
            LieFamily::A => {
                if c.iter().sum::<i64>() != 0 {
                    return Err(Error::Unsupported("sl weight with nonzero trace".into()));
                }
                (1..=n).map(prefix).collect()
            }
            LieFamily::B => (1..=n).map(prefix).collect(),
            LieFamily::C => {
                let mut k: Vec<i64> = (1..n).map(prefix).collect();
                k.push(half(prefix(n), "C_n coefficient")?);
                k
            }
            LieFamily::D => {
                let mut k: Vec<i64> = (1..=n - 2).map(prefix).collect();
                k.push(half(prefix(n - 1) - c[n - 1], "D_n coefficient")?);
                k.push(half(prefix(n), "D_n coefficient")?);
                k
            }
            _ => unreachable!(),
        };
        Ok(Root(k))
    }

    pub fn root_of_position(&self, i: usize, j: usize) -> Result<Root> {
        if !self.carries_root_vector(i, j) {
            return Err(Error::NoRootVector(
                i,
                j,
                format!("in the {} model", self.lie_type),
            ));
        }
        self.eps_to_root(&self.weight_eps(i, j))
    }

    /// Canonical list of root-vector positions: one per independent entry.
    /// For sl this is all off-diagonal (i,j); for so/sp one position per
    /// mirror pair (the one with i+j <= N+1) plus sp anti-diagonal singles.
    pub fn root_positions(&self) -> Vec<(usize, usize)> {
        let nm = self.nmat();
        let mut out = Vec::new();
        for i in 1..=nm {
            for j in 1..=nm {
                if !self.carries_root_vector(i, j) {
                    continue;
                }
                if self.lie_type.family == LieFamily::A || i + j <= nm + 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Basis of the model algebra as matrices. Type A uses the gl_N basis
    /// (all E_ii and E_ij); so/sp use the n Cartan generators plus the
    /// canonical root vectors.
    pub fn basis(&self) -> Vec<ExactMatrix> {
        let nm = self.nmat();
        let mut out = Vec::new();
        if self.lie_type.family == LieFamily::A {
            for i in 1..=nm {
                let mut m = ExactMatrix::zero(nm, nm);
                m.set(i - 1, i - 1, scalar_from_i64(1));
                out.push(m);
            }
        } else {
            for k in 1..=self.lie_type.rank {
                out.push(self.cartan_vector(k));
            }
        }
        for (i, j) in self.root_positions() {
            out.push(self.root_vector(i, j).unwrap());
        }
        out
    }

    /// Matrix commutator [a, b].
    pub fn commutator(&self, a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
        let ab = a.matmul(b)?;
        let ba = b.matmul(a)?;
        ab.add(&ba.scale(&scalar_from_i64(-1)))
    }
}
