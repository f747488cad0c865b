//! Verification oracles: exact Jordan data, centralizer dimensions (by the
//! closed formula and by direct kernel computation), bracket surjectivity,
//! and randomized generic elements of g_1.

use crate::error::{Error, Result};
use crate::linalg::{scalar_from_i64, ExactMatrix, Scalar};
use crate::model::MatrixModel;
use crate::parabolic::BlockParabolic;
use crate::recipe::XrElement;
use crate::roots::LieFamily;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Exact rank data of a nilpotent matrix and the derived Jordan partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanData {
    /// rank(x^k) for k = 1, 2, ... down to the first zero power.
    pub ranks: Vec<usize>,
    /// Jordan block sizes, non-increasing.
    pub partition: Vec<usize>,
    /// Dual (transpose) partition.
    pub dual: Vec<usize>,
}

pub fn jordan_data(x: &ExactMatrix) -> Result<JordanData> {
    if x.rows() != x.cols() {
        return Err(Error::ShapeMismatch("Jordan data of non-square matrix".into()));
    }
    let n = x.rows();
    let mut ranks = Vec::new();
    let mut p = x.clone();
    loop {
        let r = p.rank();
        ranks.push(r);
        if r == 0 {
            break;
        }
        if ranks.len() > n {
            return Err(Error::NotNilpotent);
        }
        p = p.matmul(x)?;
    }
    // #{blocks of size >= k} = rank(x^{k-1}) - rank(x^k)
    let mut dual = Vec::new();
    let mut prev = n;
    for &r in &ranks {
        dual.push(prev - r);
        prev = r;
    }
    while dual.last() == Some(&0) {
        dual.pop();
    }
    let mut partition = Vec::new();
    for (k, &c) in dual.iter().enumerate() {
        let next = dual.get(k + 1).copied().unwrap_or(0);
        for _ in 0..c - next {
            partition.push(k + 1);
        }
    }
    partition.sort_unstable_by(|a, b| b.cmp(a));
    Ok(JordanData { ranks, partition, dual })
}

/// Centralizer dimension from the Jordan partition: sum of squared dual
/// parts for gl, halved after the odd-part correction for sp/so.
pub fn centralizer_dim_formula(family: LieFamily, partition: &[usize]) -> Result<usize> {
    let mut dual_sq = 0usize;
    let max = partition.first().copied().unwrap_or(0);
    for k in 1..=max {
        let c = partition.iter().filter(|&&p| p >= k).count();
        dual_sq += c * c;
    }
    let odd = partition.iter().filter(|&&p| p % 2 == 1).count();
    match family {
        LieFamily::A => Ok(dual_sq),
        LieFamily::C => Ok((dual_sq + odd) / 2),
        LieFamily::B | LieFamily::D => Ok((dual_sq - odd) / 2),
        _ => Err(Error::Unsupported(format!(
            "no classical centralizer formula for family {family:?}"
        ))),
    }
}

fn flatten(m: &ExactMatrix) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            v.push(m.get(i, j).clone());
        }
    }
    v
}

fn columns_matrix(cols: &[Vec<Scalar>]) -> ExactMatrix {
    let rows = cols.first().map_or(0, |c| c.len());
    ExactMatrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
}

/// dim g^x computed as the kernel of ad(x) on the model basis (the gl
/// basis in type A, matching the gl Levi convention).
pub fn centralizer_dim_direct(model: &MatrixModel, x: &ExactMatrix) -> Result<usize> {
    let basis = model.basis();
    let cols: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|b| Ok(flatten(&model.commutator(b, x)?)))
        .collect::<Result<_>>()?;
    Ok(columns_matrix(&cols).kernel_dim())
}

/// dim [p, x], the rank of y -> [y, x] on a basis of p.
pub fn bracket_image_dim(p: &BlockParabolic, x: &ExactMatrix) -> Result<usize> {
    let cols: Vec<Vec<Scalar>> = p
        .p_basis()
        .iter()
        .map(|b| Ok(flatten(&p.model.commutator(b, x)?)))
        .collect::<Result<_>>()?;
    Ok(columns_matrix(&cols).rank())
}

/// Richardson test for x in g_1 by both criteria: dim g^x = dim m, and
/// [p, x] = n. The two must agree.
pub fn is_richardson(p: &BlockParabolic, x: &ExactMatrix) -> Result<bool> {
    if !p.model.is_member(x) {
        return Err(Error::NotMember(format!("{} model", p.lie_type())));
    }
    let by_dim = centralizer_dim_direct(&p.model, x)? == p.levi_dim();
    let by_bracket = bracket_image_dim(p, x)? == p.nilradical_dim();
    if by_dim != by_bracket {
        return Err(Error::CriterionDisagreement(format!(
            "{} blocks {:?}: centralizer criterion {} vs bracket criterion {}",
            p.lie_type(),
            p.blocks,
            by_dim,
            by_bracket
        )));
    }
    Ok(by_dim)
}

/// Mandatory post-construction check used by the builders.
pub fn self_check(x: &XrElement) -> Result<()> {
    let m = x.matrix();
    let p = &x.parabolic;
    if !p.model.is_member(&m) {
        return Err(Error::SelfVerification("element left the model algebra".into()));
    }
    m.nilpotency_index()?;
    if !is_richardson(p, &m)? {
        return Err(Error::SelfVerification(format!(
            "{} blocks {:?}: constructed element is not Richardson",
            p.lie_type(),
            p.blocks
        )));
    }
    Ok(())
}

/// A pseudo-random element of g_1 with integer coefficients in
/// [1, 10^6]; deterministic in the seed.
pub fn generic_element(p: &BlockParabolic, seed: u64) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nm = p.model.nmat();
    let mut m = ExactMatrix::zero(nm, nm);
    for b in p.g1_basis() {
        let c = scalar_from_i64(rng.gen_range(1..=1_000_000));
        m = m.add(&b.scale(&c)).unwrap();
    }
    m
}

/// Minimal centralizer dimension over a few random elements of g_1; equals
/// dim g^X for generic X with overwhelming certainty, and the parabolic is
/// nice exactly when this reaches the Levi dimension.
pub fn generic_centralizer_dim(p: &BlockParabolic, seeds: &[u64]) -> Result<usize> {
    let mut best = None;
    for &s in seeds {
        let d = centralizer_dim_direct(&p.model, &generic_element(p, s))?;
        best = Some(best.map_or(d, |b: usize| b.min(d)));
    }
    best.ok_or_else(|| Error::Unsupported("no seeds supplied".into()))
}

/// Support roots of an arbitrary g_1 matrix (canonical positions with a
/// nonzero coefficient).
pub fn support_of(p: &BlockParabolic, x: &ExactMatrix) -> Vec<(usize, usize)> {
    p.g1_positions()
        .into_iter()
        .filter(|&(i, j)| !x.get(i - 1, j - 1).is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recipe::{build_xr, build_xr_with, HatMode};
    use crate::roots::LieType;

    fn bp(s: &str, blocks: &[usize]) -> BlockParabolic {
        BlockParabolic::new(LieType::parse(s).unwrap(), blocks.to_vec()).unwrap()
    }

    #[test]
    fn jordan_gl4_121() {
        let x = build_xr(&bp("A3", &[1, 2, 1])).unwrap();
        let jd = jordan_data(&x.matrix()).unwrap();
        assert_eq!(jd.ranks, vec![2, 1, 0]);
        assert_eq!(jd.partition, vec![3, 1]);
        assert_eq!(jd.dual, vec![2, 1, 1]);
    }

    #[test]
    fn formula_witnesses() {
        assert_eq!(centralizer_dim_formula(LieFamily::C, &[4]).unwrap(), 2);
        assert_eq!(centralizer_dim_formula(LieFamily::B, &[5]).unwrap(), 2);
        assert_eq!(centralizer_dim_formula(LieFamily::B, &[3, 3, 1]).unwrap(), 7);
        assert_eq!(centralizer_dim_formula(LieFamily::A, &[3, 1]).unwrap(), 6);
    }

    #[test]
    fn formula_matches_direct() {
        for (s, blocks) in [
            ("A3", vec![1usize, 2, 1]),
            ("C2", vec![1, 2, 1]),
            ("B3", vec![1, 1, 3, 1, 1]),
            ("D4", vec![2, 4, 2]),
        ] {
            let p = bp(s, &blocks);
            let x = build_xr(&p).unwrap().matrix();
            let jd = jordan_data(&x).unwrap();
            let f = centralizer_dim_formula(p.lie_type().family, &jd.partition).unwrap();
            let d = centralizer_dim_direct(&p.model, &x).unwrap();
            assert_eq!(f, d, "{s} {blocks:?}");
        }
    }

    #[test]
    fn sp4_direct_centralizer() {
        let p = bp("C2", &[1, 2, 1]);
        let x = build_xr(&p).unwrap();
        assert_eq!(centralizer_dim_direct(&p.model, &x.matrix()).unwrap(), 4);
    }

    #[test]
    fn constructed_elements_are_richardson() {
        for (s, blocks) in [
            ("A4", vec![1usize, 3, 1]),
            ("B3", vec![1, 1, 3, 1, 1]),
            ("B3", vec![1, 2, 1, 2, 1]),
            ("B5", vec![1, 2, 5, 2, 1]),
            ("C3", vec![2, 2, 2]),
            ("C4", vec![2, 4, 2]),
            ("D3", vec![2, 2, 2]),
            ("D4", vec![2, 4, 2]),
            ("D4", vec![1, 3, 3, 1]),
            ("D6", vec![3, 2, 2, 2, 3]),
        ] {
            let p = bp(s, &blocks);
            assert!(p.is_nice(), "{s} {blocks:?}");
            let x = build_xr(&p).expect(&format!("{s} {blocks:?}"));
            assert!(is_richardson(&p, &x.matrix()).unwrap());
        }
    }

    #[test]
    fn so13_forced_hat_fails() {
        let p = bp("B6", &[1, 4, 3, 4, 1]);
        // the plain recipe works here
        assert!(build_xr(&p).is_ok());
        // forcing the hat at rectangle 1 does not give a Richardson element
        let forced = build_xr_with(&p, HatMode::ForceAt(1)).unwrap();
        assert!(!is_richardson(&p, &forced.matrix()).unwrap());
    }

    #[test]
    fn generic_detects_niceness() {
        // nice: generic centralizer reaches the Levi dimension
        let p = bp("B3", &[1, 2, 1, 2, 1]);
        assert_eq!(generic_centralizer_dim(&p, &[1, 2, 3]).unwrap(), p.levi_dim());
        // not nice: it stays strictly larger
        let q = bp("B4", &[1, 3, 1, 3, 1]);
        assert!(generic_centralizer_dim(&q, &[1, 2, 3]).unwrap() > q.levi_dim());
    }

    #[test]
    fn identity_variant_cross_check() {
        for blocks in [vec![1usize, 2, 1], vec![2, 3, 2], vec![1, 2, 3, 1]] {
            let n: usize = blocks.iter().sum();
            let p = bp(&format!("A{}", n - 1), &blocks);
            let a = build_xr(&p).unwrap();
            let b = crate::recipe::build_xr_identity_variant(&p).unwrap();
            let ja = jordan_data(&a.matrix()).unwrap();
            let jb = jordan_data(&b.matrix()).unwrap();
            assert_eq!(ja.partition, jb.partition, "{blocks:?}");
        }
    }
}
