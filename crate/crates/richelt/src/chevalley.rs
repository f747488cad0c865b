//! Chevalley basis with integer structure constants.
//!
//! Constants N_{a,b} for positive pairs are fixed inductively by height of
//! the sum: the extraspecial pair of each sum gets N = p+1 > 0, remaining
//! special pairs follow from the four-root identity, and mixed-sign
//! constants are derived on demand from the triangle identity
//! N_{a,b}/(c,c) = N_{b,c}/(a,a) for a+b+c = 0.

use crate::error::{Error, Result};
use crate::linalg::{scalar_from_i64, ExactMatrix, Scalar};
use crate::roots::{LieType, Root, RootSystem};
use num_rational::Rational64;
use num_traits::Zero;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    pub rs: RootSystem,
    /// N_{a,b} for ordered pairs of positive roots whose sum is a root.
    constants: HashMap<(Root, Root), i64>,
}

/// Sparse element over the basis (h_1..h_n, e_alpha for positive alpha in
/// root order, e_{-alpha} in the same order), integer coefficients.
pub type SparseElem = Vec<(usize, i64)>;

fn positive_pair_constant(
    constants: &HashMap<(Root, Root), i64>,
    a: &Root,
    b: &Root,
) -> i64 {
    *constants
        .get(&(a.clone(), b.clone()))
        .unwrap_or_else(|| panic!("missing constant N({a},{b})"))
}

/// N_{a,b} for arbitrary sign combinations, assuming a+b is a root.
fn constant_any(
    rs: &RootSystem,
    constants: &HashMap<(Root, Root), i64>,
    a: &Root,
    b: &Root,
) -> i64 {
    let sum = a.add(b);
    debug_assert!(rs.is_root(&sum));
    let ap = rs.is_positive_root(a);
    let bp = rs.is_positive_root(b);
    if ap && bp {
        return positive_pair_constant(constants, a, b);
    }
    if !ap && !bp {
        return -positive_pair_constant(constants, &a.neg(), &b.neg());
    }
    if !ap {
        return -constant_any(rs, constants, b, a);
    }
    // a positive, b negative
    let z = sum.neg();
    let ratio_times = |n: i64, num: &Root, den: &Root| -> i64 {
        let q = Rational64::from_integer(n) * rs.bilinear(num, num) / rs.bilinear(den, den);
        assert!(q.is_integer(), "non-integral mixed structure constant");
        q.to_integer()
    };
    if rs.is_positive_root(&sum) {
        // z negative; N_{a,b} = (z,z)/(a,a) N_{b,z}, with b, z both negative
        let n_bz = -positive_pair_constant(constants, &b.neg(), &z.neg());
        ratio_times(n_bz, &z, a)
    } else {
        // z positive; N_{a,b} = (z,z)/(b,b) N_{z,a}, with z, a both positive
        let n_za = positive_pair_constant(constants, &z, a);
        ratio_times(n_za, &z, b)
    }
}

impl ChevalleyAlgebra {
    pub fn build(lie_type: LieType) -> Result<Self> {
        let rs = RootSystem::build(lie_type);
        let mut constants: HashMap<(Root, Root), i64> = HashMap::new();

        // positives are already ordered by height then lex; that order is
        // the total root order used to pick extraspecial pairs.
        for gamma in rs.positives.clone() {
            if gamma.height() < 2 {
                continue;
            }
            let mut pairs: Vec<(Root, Root)> = Vec::new();
            for alpha in &rs.positives {
                if alpha.height() >= gamma.height() {
                    break;
                }
                let beta = gamma.sub(alpha);
                if !rs.is_positive_root(&beta) {
                    continue;
                }
                if rs.positive_index(alpha).unwrap() < rs.positive_index(&beta).unwrap() {
                    pairs.push((alpha.clone(), beta.clone()));
                }
            }
            if pairs.is_empty() {
                continue;
            }
            // extraspecial pair: minimal first member in root order; `pairs`
            // follows that order already.
            let (xi, eta) = pairs[0].clone();
            let p0 = rs.chain_down(&xi, &eta);
            let n0 = p0 + 1;
            constants.insert((xi.clone(), eta.clone()), n0);
            constants.insert((eta.clone(), xi.clone()), -n0);

            let gg = rs.bilinear(&gamma, &gamma);
            for (alpha, beta) in pairs.iter().skip(1) {
                let mut acc = Rational64::zero();
                let bmx = beta.sub(&xi);
                if rs.is_root(&bmx) {
                    let t = constant_any(&rs, &constants, beta, &xi.neg())
                        * constant_any(&rs, &constants, alpha, &eta.neg());
                    acc += Rational64::from_integer(t) / rs.bilinear(&bmx, &bmx);
                }
                let amx = alpha.sub(&xi);
                if rs.is_root(&amx) {
                    let t = constant_any(&rs, &constants, &xi.neg(), alpha)
                        * constant_any(&rs, &constants, beta, &eta.neg());
                    acc += Rational64::from_integer(t) / rs.bilinear(&amx, &amx);
                }
                let n = gg * acc / Rational64::from_integer(n0);
                if !n.is_integer() {
                    return Err(Error::ChevalleyInconsistency(format!(
                        "non-integral N({alpha},{beta}) for {gamma}"
                    )));
                }
                let n = n.to_integer();
                let p = rs.chain_down(alpha, beta);
                if n.abs() != p + 1 {
                    return Err(Error::ChevalleyInconsistency(format!(
                        "|N({alpha},{beta})| = {} but p+1 = {}",
                        n.abs(),
                        p + 1
                    )));
                }
                constants.insert((alpha.clone(), beta.clone()), n);
                constants.insert((beta.clone(), alpha.clone()), -n);
            }
        }

        Ok(ChevalleyAlgebra { rs, constants })
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.rs.positives.len()
    }

    /// Basis index of the root vector e_r (either sign).
    pub fn root_index(&self, r: &Root) -> Option<usize> {
        let n = self.rank();
        let p = self.rs.positives.len();
        if let Some(i) = self.rs.positive_index(r) {
            return Some(n + i);
        }
        self.rs.positive_index(&r.neg()).map(|i| n + p + i)
    }

    /// Root carried by basis index i, None for Cartan indices.
    pub fn index_root(&self, i: usize) -> Option<Root> {
        let n = self.rank();
        let p = self.rs.positives.len();
        if i < n {
            None
        } else if i < n + p {
            Some(self.rs.positives[i - n].clone())
        } else {
            Some(self.rs.positives[i - n - p].neg())
        }
    }

    /// N_{a,b}; zero when a+b is not a root.
    pub fn structure_constant(&self, a: &Root, b: &Root) -> i64 {
        if !self.rs.is_root(&a.add(b)) {
            return 0;
        }
        constant_any(&self.rs, &self.constants, a, b)
    }

    /// [e_i, e_j] for basis indices, as a sparse integer element.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseElem {
        let n = self.rank();
        match (self.index_root(i), self.index_root(j)) {
            (None, None) => Vec::new(),
            (None, Some(beta)) => {
                let hi = i;
                let c: i64 = (0..n).map(|k| beta.0[k] * self.rs.cartan[k][hi]).sum();
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(j, c)]
                }
            }
            (Some(_), None) => self
                .bracket_basis(j, i)
                .into_iter()
                .map(|(k, c)| (k, -c))
                .collect(),
            (Some(alpha), Some(beta)) => {
                let sum = alpha.add(&beta);
                if sum.is_zero() {
                    // [e_a, e_{-a}] = h_a; orient by the positive root
                    let (pos, sign) = if self.rs.is_positive_root(&alpha) {
                        (alpha, 1)
                    } else {
                        (beta, -1)
                    };
                    self.rs
                        .coroot_coeffs(&pos)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| *c != 0)
                        .map(|(k, c)| (k, sign * c))
                        .collect()
                } else if self.rs.is_root(&sum) {
                    let c = constant_any(&self.rs, &self.constants, &alpha, &beta);
                    vec![(self.root_index(&sum).unwrap(), c)]
                } else {
                    Vec::new()
                }
            }
        }
    }

    pub fn bracket_sparse(&self, a: &SparseElem, b: &SparseElem) -> SparseElem {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for &(i, ci) in a {
            for &(j, cj) in b {
                for (k, ck) in self.bracket_basis(i, j) {
                    *acc.entry(k).or_insert(0) += ci * cj * ck;
                }
            }
        }
        let mut out: SparseElem = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        out.sort();
        out
    }

    /// Dense bracket over rational coefficient vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        assert!(x.len() == d && y.len() == d, "element dimension mismatch");
        let mut out = vec![Scalar::zero(); d];
        for (i, ci) in x.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in y.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                for (k, ck) in self.bracket_basis(i, j) {
                    out[k] += ci * cj * scalar_from_i64(ck);
                }
            }
        }
        out
    }

    pub fn zero_elem(&self) -> Vec<Scalar> {
        vec![Scalar::zero(); self.dim()]
    }

    pub fn sparse_to_dense(&self, s: &SparseElem) -> Vec<Scalar> {
        let mut v = self.zero_elem();
        for &(i, c) in s {
            v[i] = scalar_from_i64(c);
        }
        v
    }

    /// ad(x) as a dim x dim matrix acting on coefficient vectors.
    pub fn ad_matrix(&self, x: &[Scalar]) -> ExactMatrix {
        let d = self.dim();
        let mut m = ExactMatrix::zero(d, d);
        for j in 0..d {
            for (i, ci) in x.iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                for (k, ck) in self.bracket_basis(i, j) {
                    let v = m.get(k, j) + ci * scalar_from_i64(ck);
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    pub fn killing_form(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let ax = self.ad_matrix(x);
        let ay = self.ad_matrix(y);
        let d = self.dim();
        let mut tr = Scalar::zero();
        for i in 0..d {
            for k in 0..d {
                tr += ax.get(i, k) * ay.get(k, i);
            }
        }
        tr
    }

    /// Jacobi identity on a basis triple.
    pub fn jacobi_basis(&self, i: usize, j: usize, k: usize) -> bool {
        let e = |t: usize| vec![(t, 1i64)];
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.bracket_sparse(&e(a), &e(b));
            for (t, v) in self.bracket_sparse(&inner, &e(c)) {
                *acc.entry(t).or_insert(0) += v;
            }
        }
        acc.values().all(|v| *v == 0)
    }
}
