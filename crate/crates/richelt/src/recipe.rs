//! Construction of the normal-form elements X_R (and the hat variant for
//! odd orthogonal algebras), plus the (*)-form detector.
//!
//! Placement conventions: each rectangle R_{i,i+1} gets an anti-diagonal
//! pattern anchored at a corner ("lower-left": last row, first column;
//! "upper-right": first row, last column) or centered. In the same-parity
//! branch of the so odd-block recipe, equal blocks and odd strict rises
//! take a full-size centered J (the published ceil(a_i/2) block is rank
//! deficient already for equal even blocks), while even strict rises split
//! into two corner J's so their columns avoid the middle rows that a
//! following a_j = a_{j+1}+1 drop leaves empty. Every branch is validated
//! by the exhaustive acceptance scan.

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::parabolic::{BlockCase, BlockParabolic};
use crate::roots::{LieFamily, Root};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HatMode {
    /// Use the hat variant whenever Prop-4.3-style conditions hold.
    Auto,
    /// Plain recipe only.
    Never,
    /// Replace rectangle i (1-based) by the hat blocks unconditionally;
    /// used to exhibit the negative cases.
    ForceAt(usize),
}

/// A constructed candidate: global 1-based positions, each with
/// coefficient +1 (mirror entries are implied by the model).
#[derive(Debug, Clone)]
pub struct XrElement {
    pub parabolic: BlockParabolic,
    pub positions: Vec<(usize, usize)>,
    pub hat_applied: Option<usize>,
}

impl XrElement {
    pub fn matrix(&self) -> ExactMatrix {
        let nm = self.parabolic.model.nmat();
        let mut m = ExactMatrix::zero(nm, nm);
        for &(i, j) in &self.positions {
            let v = self.parabolic.model.root_vector(i, j).unwrap();
            m = m.add(&v).unwrap();
        }
        m
    }

    pub fn support(&self) -> Vec<Root> {
        self.positions
            .iter()
            .map(|&(i, j)| self.parabolic.model.root_of_position(i, j).unwrap())
            .collect()
    }

    /// Roots contributed by rectangle i (entries whose row lies in the
    /// i-th Levi block).
    pub fn support_of_rectangle(&self, i: usize) -> Vec<Root> {
        self.positions
            .iter()
            .filter(|&&(r, _)| self.parabolic.block_of_row(r) == i)
            .map(|&(r, c)| self.parabolic.model.root_of_position(r, c).unwrap())
            .collect()
    }

    pub fn report(&self, verified: bool) -> XrReport {
        XrReport {
            blocks: self.parabolic.blocks.clone(),
            entries: self
                .positions
                .iter()
                .map(|&(i, j)| (i, j, "1".to_string()))
                .collect(),
            support: self.support().iter().map(|r| r.to_string()).collect(),
            hat_applied: self.hat_applied,
            verified,
        }
    }
}

/// Serializable description of a constructed element.
#[derive(Debug, Clone, serde::Serialize)]
pub struct XrReport {
    pub blocks: Vec<usize>,
    pub entries: Vec<(usize, usize, String)>,
    pub support: Vec<String>,
    pub hat_applied: Option<usize>,
    pub verified: bool,
}

fn ceil_half(a: usize) -> usize {
    a.div_ceil(2)
}

fn floor_half(a: usize) -> usize {
    a / 2
}

/// Anti-diagonal of length min(a, an) anchored lower-left (odd index) or
/// upper-right (even index), in local 1-based coordinates of an a x an
/// rectangle.
fn corner_entries(a: usize, an: usize, lower_left: bool) -> Vec<(usize, usize)> {
    let m = a.min(an);
    (1..=m)
        .map(|k| if lower_left { (a + 1 - k, k) } else { (k, an + 1 - k) })
        .collect()
}

fn upper_right(m: usize, an: usize) -> Vec<(usize, usize)> {
    (1..=m).map(|k| (k, an + 1 - k)).collect()
}

fn lower_left(m: usize, a: usize) -> Vec<(usize, usize)> {
    (1..=m).map(|k| (a + 1 - k, k)).collect()
}

/// J_a spanning all rows, horizontally centered in an a x an rectangle
/// (same-parity branch; the parities make the centering exact).
fn centered_full(a: usize, an: usize) -> Result<Vec<(usize, usize)>> {
    if an < a || (an - a) % 2 != 0 {
        return Err(Error::SelfVerification(format!(
            "same-parity placement needs a <= a' of equal parity, got {a}x{an}"
        )));
    }
    let c0 = (an - a) / 2;
    Ok((1..=a).map(|k| (k, c0 + a + 1 - k)).collect())
}

struct RectangleFrame {
    row_off: usize,
    col_off: usize,
}

fn frame(blocks: &[usize], i: usize) -> RectangleFrame {
    RectangleFrame {
        row_off: blocks[..i - 1].iter().sum(),
        col_off: blocks[..i].iter().sum(),
    }
}

/// Builds X_R for a nice classical parabolic; the hat variant is applied
/// automatically for odd orthogonal algebras whenever it yields a
/// Richardson element (Prop 4.3). The result is self-verified against the
/// bracket-surjectivity criterion.
pub fn build_xr(p: &BlockParabolic) -> Result<XrElement> {
    let x = build_xr_with(p, HatMode::Auto)?;
    crate::verify::self_check(&x)?;
    Ok(x)
}

/// Builds the hat variant at the Prop 4.3 rectangle, verifying the
/// preconditions and the result.
pub fn build_xr_hat(p: &BlockParabolic) -> Result<XrElement> {
    let l = hat_rectangle(p).ok_or_else(|| {
        Error::HatPrecondition(
            "requires so_{2n+1}, non-unimodal blocks with a_{l-1} = a_{l+1}, l >= 2".into(),
        )
    })?;
    let x = build_xr_with(p, HatMode::ForceAt(l))?;
    crate::verify::self_check(&x)?;
    Ok(x)
}

/// The rectangle index l-1 where the hat variant applies, if any.
pub fn hat_rectangle(p: &BlockParabolic) -> Option<usize> {
    if p.lie_type().family != LieFamily::B || p.case() != BlockCase::B {
        return None;
    }
    let l = p.non_unimodal_peak()?;
    if l < 2 {
        return None;
    }
    // a_{l+1} equals the plateau value a_l - 1
    if p.blocks[l - 2] == p.blocks[l - 1] - 1 {
        Some(l - 1)
    } else {
        None
    }
}

/// Recipe placement without the final verification step. `ForceAt` skips
/// the Prop 4.3 applicability test (the result need not be Richardson).
pub fn build_xr_with(p: &BlockParabolic, hat: HatMode) -> Result<XrElement> {
    if !p.is_nice() {
        return Err(Error::NotNice(format!(
            "{} blocks {:?}",
            p.lie_type(),
            p.blocks
        )));
    }
    let family = p.lie_type().family;
    let hat_at = match hat {
        HatMode::Never => None,
        HatMode::Auto => hat_rectangle(p),
        HatMode::ForceAt(i) => {
            if family != LieFamily::B || p.case() != BlockCase::B {
                return Err(Error::HatPrecondition(
                    "hat variant is defined for so_{2n+1} with an odd number of blocks".into(),
                ));
            }
            let (half, _) = p.half_blocks();
            if i == 0 || i > half.len() || half[i - 1] % 2 == 0 {
                return Err(Error::HatPrecondition(format!(
                    "hat rectangle {i} needs an odd block a_{i}"
                )));
            }
            Some(i)
        }
    };

    let blocks = &p.blocks;
    let m = blocks.len();
    let mut positions: Vec<(usize, usize)> = Vec::new();
    let mut place = |fr: &RectangleFrame, local: &[(usize, usize)]| {
        for &(x, y) in local {
            positions.push((fr.row_off + x, fr.col_off + y));
        }
    };

    match (family, p.case()) {
        (LieFamily::A, _) => {
            for i in 1..m {
                let fr = frame(blocks, i);
                place(&fr, &corner_entries(blocks[i - 1], blocks[i], i % 2 == 1));
            }
        }
        (LieFamily::C, BlockCase::A) => {
            let r = m / 2;
            for i in 1..r {
                let fr = frame(blocks, i);
                place(&fr, &corner_entries(blocks[i - 1], blocks[i], i % 2 == 1));
            }
            // central rectangle: the full skew-diagonal J_{a_r} (long roots)
            let fr = frame(blocks, r);
            let a = blocks[r - 1];
            place(&fr, &(1..=a).map(|x| (x, a + 1 - x)).collect::<Vec<_>>());
        }
        (LieFamily::C, BlockCase::B) => {
            let r = m / 2;
            for i in 1..=r {
                let fr = frame(blocks, i);
                let (a, an) = (blocks[i - 1], blocks[i]);
                let (bi, ci) = (floor_half(a), ceil_half(a));
                if i % 2 == 1 {
                    place(&fr, &upper_right(bi, an));
                    place(&fr, &lower_left(ci, a));
                } else {
                    place(&fr, &upper_right(ci, an));
                    place(&fr, &lower_left(bi, a));
                }
            }
        }
        (LieFamily::B | LieFamily::D, BlockCase::A) => {
            let r = m / 2;
            for i in 1..r {
                let fr = frame(blocks, i);
                place(&fr, &corner_entries(blocks[i - 1], blocks[i], i % 2 == 1));
            }
            // central square: floor(a_r/2) two-by-two blocks, one canonical
            // entry each (the -1 partner is the forced mirror)
            let fr = frame(blocks, r);
            let a = blocks[r - 1];
            let local: Vec<(usize, usize)> = (1..=a / 2)
                .map(|t| {
                    if r % 2 == 1 {
                        (a - 2 * t + 1, 2 * t - 1)
                    } else {
                        (2 * t - 1, a - 2 * t + 1)
                    }
                })
                .collect();
            place(&fr, &local);
        }
        (LieFamily::B | LieFamily::D, BlockCase::B) => {
            let r = m / 2;
            for i in 1..=r {
                let fr = frame(blocks, i);
                let (a, an) = (blocks[i - 1], blocks[i]);
                let (bi, ci) = (floor_half(a), ceil_half(a));
                if hat_at == Some(i) {
                    if i % 2 == 1 {
                        place(&fr, &upper_right(bi, an));
                        place(&fr, &lower_left(ci, a));
                    } else {
                        place(&fr, &upper_right(ci, an));
                        place(&fr, &lower_left(bi, a));
                    }
                } else if a % 2 == an % 2 && (a == an || a % 2 == 1) {
                    place(&fr, &centered_full(a, an)?);
                } else if a % 2 == an % 2 {
                    // strict rise of even blocks: split the J so the
                    // occupied columns stay clear of the middle rows that
                    // a later a_j = a_{j+1}+1 drop leaves empty (a drop's
                    // source block is even, so only even rises feed one)
                    place(&fr, &upper_right(ci, an));
                    place(&fr, &lower_left(ci, a));
                } else if a == an + 1 && a % 2 == 0 {
                    if i % 2 == 1 {
                        place(&fr, &upper_right(ci - 1, an));
                        place(&fr, &lower_left(ci, a));
                    } else {
                        place(&fr, &upper_right(ci, an));
                        place(&fr, &lower_left(ci - 1, a));
                    }
                } else {
                    // different parity; when a is odd this doubles row
                    // ceil(a/2) deliberately
                    place(&fr, &upper_right(ci, an));
                    place(&fr, &lower_left(ci, a));
                }
            }
        }
        _ => unreachable!(),
    }

    // sanity: all entries must be distinct grade-1 root-vector positions
    let model = &p.model;
    {
        use std::collections::HashSet;
        let mut seen = HashSet::new();
        for &(i, j) in &positions {
            if !model.carries_root_vector(i, j) {
                return Err(Error::SelfVerification(format!(
                    "placement hit non-root position ({i},{j})"
                )));
            }
            if p.grade(i, j) != 1 {
                return Err(Error::SelfVerification(format!(
                    "placement left g_1 at ({i},{j})"
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::SelfVerification(format!(
                    "duplicate placement at ({i},{j})"
                )));
            }
        }
    }

    Ok(XrElement {
        parabolic: p.clone(),
        positions,
        hat_applied: hat_at,
    })
}

/// The (*)-form test (orthogonal families only): true iff the support of
/// the constructed element (hat-adjusted) contains two roots that subtract
/// to a root.
pub fn is_star_form(p: &BlockParabolic) -> Result<bool> {
    let family = p.lie_type().family;
    if !matches!(family, LieFamily::B | LieFamily::D) {
        return Err(Error::Unsupported(
            "the (*)-form is defined for orthogonal algebras".into(),
        ));
    }
    if !p.is_nice() {
        return Err(Error::NotNice(format!("{:?}", p.blocks)));
    }
    if p.case() == BlockCase::A {
        return Ok(false);
    }
    let (half, _central) = p.half_blocks();
    let r = half.len();
    if let Some(l) = p.non_unimodal_peak() {
        let peak = half[l - 1];
        if peak % 2 == 1 {
            return Ok(true);
        }
        for i in 1..l {
            if half[i - 1] % 2 == 1 && half[i] % 2 == 0 {
                if i == l - 1 {
                    // hat variant removes the doubled root when
                    // a_{l-1} = a_{l+1} = peak - 1
                    if half[i - 1] < peak - 1 {
                        return Ok(true);
                    }
                } else {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    } else {
        Ok((1..r).any(|i| half[i - 1] % 2 == 1 && half[i] % 2 == 0))
    }
}

/// The identity-anchored variant for type A (upper-left I_min per
/// rectangle); used as an independent cross-check of the J-anchored form.
pub fn build_xr_identity_variant(p: &BlockParabolic) -> Result<XrElement> {
    if p.lie_type().family != LieFamily::A {
        return Err(Error::Unsupported(
            "identity variant is defined for type A".into(),
        ));
    }
    if !p.is_nice() {
        return Err(Error::NotNice(format!("{:?}", p.blocks)));
    }
    let blocks = &p.blocks;
    let mut positions = Vec::new();
    for i in 1..blocks.len() {
        let fr = frame(blocks, i);
        let mn = blocks[i - 1].min(blocks[i]);
        for k in 1..=mn {
            positions.push((fr.row_off + k, fr.col_off + k));
        }
    }
    let x = XrElement {
        parabolic: p.clone(),
        positions,
        hat_applied: None,
    };
    crate::verify::self_check(&x)?;
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::LieType;

    fn bp(s: &str, blocks: &[usize]) -> BlockParabolic {
        BlockParabolic::new(LieType::parse(s).unwrap(), blocks.to_vec()).unwrap()
    }

    #[test]
    fn gl4_121_positions() {
        let x = build_xr_with(&bp("A3", &[1, 2, 1]), HatMode::Never).unwrap();
        assert_eq!(x.positions, vec![(1, 2), (2, 4)]);
    }

    #[test]
    fn sp4_121_support_is_alpha1() {
        let x = build_xr_with(&bp("C2", &[1, 2, 1]), HatMode::Never).unwrap();
        assert_eq!(x.positions, vec![(1, 2)]);
        assert_eq!(x.support(), vec![Root(vec![1, 0])]);
    }

    #[test]
    fn sp8_242_positions() {
        let x = build_xr_with(&bp("C4", &[2, 4, 2]), HatMode::Never).unwrap();
        let mut pos = x.positions.clone();
        pos.sort();
        assert_eq!(pos, vec![(1, 6), (2, 3)]);
    }

    #[test]
    fn sp_case_a_central_long_roots() {
        // sp_4 blocks (2,2): central J_2 on the skew-diagonal
        let x = build_xr_with(&bp("C2", &[2, 2]), HatMode::Never).unwrap();
        let mut pos = x.positions.clone();
        pos.sort();
        assert_eq!(pos, vec![(1, 4), (2, 3)]);
    }

    #[test]
    fn so_case_a_central_blocks() {
        // so_6 blocks (3,3): r = 1 odd, one 2x2 block from the lower left
        let x = build_xr_with(&bp("D3", &[3, 3]), HatMode::Never).unwrap();
        assert_eq!(x.positions, vec![(2, 4)]);
    }

    #[test]
    fn so7_hat_auto() {
        let p = bp("B3", &[1, 2, 1, 2, 1]);
        assert_eq!(hat_rectangle(&p), Some(1));
        let x = build_xr_with(&p, HatMode::Auto).unwrap();
        assert_eq!(x.hat_applied, Some(1));
        let mut pos = x.positions.clone();
        pos.sort();
        assert_eq!(pos, vec![(1, 2), (2, 4)]);
    }

    #[test]
    fn so13_hat_not_applicable_automatically() {
        let p = bp("B6", &[1, 4, 3, 4, 1]);
        assert_eq!(hat_rectangle(&p), None);
        assert!(build_xr_hat(&p).is_err());
        // forcing it still places entries (verification is separate)
        let x = build_xr_with(&p, HatMode::ForceAt(1)).unwrap();
        assert_eq!(x.hat_applied, Some(1));
    }

    #[test]
    fn doubled_row_for_odd_to_even() {
        // so_11 (1,2,5,2,1): rectangle (1,2) doubles the single row
        let p = bp("B5", &[1, 2, 5, 2, 1]);
        let x = build_xr_with(&p, HatMode::Never).unwrap();
        let in_first: Vec<_> = x.positions.iter().filter(|&&(i, _)| i == 1).collect();
        assert_eq!(in_first.len(), 2);
    }

    #[test]
    fn odd_rise_stays_centered() {
        // so_7 (1,1,3,1,1): the 1x3 rectangle picks the central column
        let p = bp("B3", &[1, 1, 3, 1, 1]);
        let x = build_xr_with(&p, HatMode::Never).unwrap();
        let mut pos = x.positions.clone();
        pos.sort();
        assert_eq!(pos, vec![(1, 2), (2, 4)]);
    }

    #[test]
    fn even_rise_splits() {
        // so_15 (2,4,3,4,2): the 2x4 rise splits into the corner columns,
        // keeping clear of the middle row the 4->3 drop leaves empty
        let p = bp("B7", &[2, 4, 3, 4, 2]);
        let x = build_xr_with(&p, HatMode::Never).unwrap();
        let in_first: Vec<_> = x
            .positions
            .iter()
            .filter(|&&(i, _)| i <= 2)
            .copied()
            .collect();
        assert_eq!(in_first, vec![(1, 6), (2, 3)]);
    }

    #[test]
    fn equal_blocks_full_skew_square() {
        // so_9 (3,3,3): equal blocks keep the full anti-diagonal
        let p = bp("B4", &[3, 3, 3]);
        let x = build_xr_with(&p, HatMode::Never).unwrap();
        let mut pos = x.positions.clone();
        pos.sort();
        assert_eq!(pos, vec![(1, 6), (2, 5), (3, 4)]);
    }

    #[test]
    fn star_form_cases() {
        // unimodal with odd -> even step inside the half
        assert!(is_star_form(&bp("B5", &[1, 2, 5, 2, 1])).unwrap());
        // unimodal, no such step
        assert!(!is_star_form(&bp("B3", &[1, 1, 3, 1, 1])).unwrap());
        // non-unimodal with odd peak (type D)
        assert!(is_star_form(&bp("D6", &[3, 2, 2, 2, 3])).unwrap());
        // hat-adjusted: so_7 (1,2,1,2,1) is not (*)
        assert!(!is_star_form(&bp("B3", &[1, 2, 1, 2, 1])).unwrap());
        // even number of blocks is never (*)
        assert!(!is_star_form(&bp("D4", &[1, 3, 3, 1])).unwrap());
        // sp input is rejected
        assert!(is_star_form(&bp("C2", &[1, 2, 1])).is_err());
    }

    #[test]
    fn grades_are_one() {
        for (s, blocks) in [
            ("A4", vec![1usize, 3, 1]),
            ("B4", vec![2, 2, 1, 2, 2]),
            ("C3", vec![1, 1, 2, 1, 1]),
            ("D4", vec![2, 4, 2]),
        ] {
            let p = bp(s, &blocks);
            if !p.is_nice() {
                continue;
            }
            let x = build_xr_with(&p, HatMode::Auto).unwrap();
            for &(i, j) in &x.positions {
                assert_eq!(p.grade(i, j), 1);
            }
        }
    }
}
