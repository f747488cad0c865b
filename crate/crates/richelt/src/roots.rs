//! Root systems of the simple types, root arithmetic, and the
//! simple-system / factor-structure predicates.

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use itertools::Itertools;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            LieFamily::A => 'A',
            LieFamily::B => 'B',
            LieFamily::C => 'C',
            LieFamily::D => 'D',
            LieFamily::E => 'E',
            LieFamily::F => 'F',
            LieFamily::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl LieFamily {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(LieFamily::A),
            "B" => Ok(LieFamily::B),
            "C" => Ok(LieFamily::C),
            "D" => Ok(LieFamily::D),
            "E" => Ok(LieFamily::E),
            "F" => Ok(LieFamily::F),
            "G" => Ok(LieFamily::G),
            other => Err(Error::InvalidLieType(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieType {
    pub family: LieFamily,
    pub rank: usize,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl LieType {
    pub fn new(family: LieFamily, rank: usize) -> Result<Self> {
        let ok = match family {
            LieFamily::A => rank >= 1,
            LieFamily::B | LieFamily::C => rank >= 2,
            // rank 2 is the degenerate so_4 = sl_2 x sl_2; the block
            // machinery still applies to it
            LieFamily::D => rank >= 2,
            LieFamily::E => (6..=8).contains(&rank),
            LieFamily::F => rank == 4,
            LieFamily::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidLieType(format!("{family}{rank}")))
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidLieType("empty".into()));
        }
        let family = LieFamily::parse(&s[..1])?;
        let rank: usize = s[1..]
            .parse()
            .map_err(|_| Error::InvalidLieType(format!("bad rank in {s:?}")))?;
        Self::new(family, rank)
    }

    pub fn is_classical(&self) -> bool {
        matches!(
            self.family,
            LieFamily::A | LieFamily::B | LieFamily::C | LieFamily::D
        )
    }

    /// Bourbaki Cartan matrix, C[i][j] = <alpha_i, alpha_j^v>.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
        }
        fn chain_in(c: &mut [Vec<i64>], i: usize, j: usize) {
            c[i][j] = -1;
            c[j][i] = -1;
        }
        let chain = chain_in;
        match self.family {
            LieFamily::A => {
                for i in 0..n.saturating_sub(1) {
                    chain(&mut c, i, i + 1);
                }
            }
            LieFamily::B => {
                for i in 0..n - 2 {
                    chain(&mut c, i, i + 1);
                }
                // alpha_n short: <alpha_{n-1}, alpha_n^v> = -2
                c[n - 2][n - 1] = -2;
                c[n - 1][n - 2] = -1;
            }
            LieFamily::C => {
                for i in 0..n - 2 {
                    chain(&mut c, i, i + 1);
                }
                c[n - 2][n - 1] = -1;
                c[n - 1][n - 2] = -2;
            }
            LieFamily::D => {
                for i in 0..n - 2 {
                    chain(&mut c, i, i + 1);
                }
                if n >= 3 {
                    chain(&mut c, n - 3, n - 1);
                }
            }
            LieFamily::E => {
                // alpha_2 attaches to alpha_4; chain 1-3-4-5-...-n.
                chain(&mut c, 0, 2);
                chain(&mut c, 2, 3);
                chain(&mut c, 1, 3);
                for i in 3..n - 1 {
                    chain(&mut c, i, i + 1);
                }
            }
            LieFamily::F => {
                chain(&mut c, 0, 1);
                c[1][2] = -2;
                c[2][1] = -1;
                chain(&mut c, 2, 3);
            }
            LieFamily::G => {
                // alpha_1 short.
                c[0][1] = -1;
                c[1][0] = -3;
            }
        }
        c
    }

    /// Half squared lengths d_i = (alpha_i, alpha_i)/2; long roots have
    /// squared length 2.
    pub fn root_half_lengths(&self) -> Vec<Rational64> {
        let n = self.rank;
        let one = Rational64::from_integer(1);
        let half = Rational64::new(1, 2);
        match self.family {
            LieFamily::A | LieFamily::D | LieFamily::E => vec![one; n],
            LieFamily::B => {
                let mut d = vec![one; n];
                d[n - 1] = half;
                d
            }
            LieFamily::C => {
                let mut d = vec![half; n];
                d[n - 1] = one;
                d
            }
            LieFamily::F => vec![one, one, half, half],
            LieFamily::G => vec![Rational64::new(1, 3), one],
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            LieFamily::A => n * (n + 1) / 2,
            LieFamily::B | LieFamily::C => n * n,
            LieFamily::D => n * (n - 1),
            LieFamily::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            LieFamily::F => 24,
            LieFamily::G => 6,
        }
    }

    pub fn dim(&self) -> usize {
        self.rank + 2 * self.positive_root_count()
    }
}

/// A root as an integer coefficient vector over the simple roots
/// (Bourbaki ordering).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|k| -k).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|k| *k == 0)
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0i64; rank];
        v[i] = 1;
        Root(v)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots ordered by height then lexicographically.
    pub positives: Vec<Root>,
    half_lengths: Vec<Rational64>,
    index: HashMap<Root, usize>,
    all: HashSet<Root>,
}

impl RootSystem {
    /// Builds the positive-root closure from the Cartan matrix.
    pub fn build(lie_type: LieType) -> Self {
        let n = lie_type.rank;
        let cartan = lie_type.cartan_matrix();
        let half_lengths = lie_type.root_half_lengths();

        let mut known: HashSet<Root> = HashSet::new();
        let mut level: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        level.sort();
        for r in &level {
            known.insert(r.clone());
        }
        let mut positives = level.clone();

        while !level.is_empty() {
            let mut next: HashSet<Root> = HashSet::new();
            for root in &level {
                for i in 0..n {
                    let simple = Root::simple(n, i);
                    // p = chain-down length of `root` through alpha_i
                    let mut p = 0i64;
                    let mut down = root.sub(&simple);
                    while known.contains(&down) {
                        p += 1;
                        down = down.sub(&simple);
                    }
                    let pairing: i64 = (0..n).map(|j| root.0[j] * cartan[j][i]).sum();
                    if p - pairing > 0 {
                        next.insert(root.add(&simple));
                    }
                }
            }
            let mut next: Vec<Root> = next.into_iter().collect();
            next.sort();
            for r in &next {
                known.insert(r.clone());
            }
            positives.extend(next.iter().cloned());
            level = next;
        }

        let index = positives
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let all = positives
            .iter()
            .flat_map(|r| [r.clone(), r.neg()])
            .collect();
        RootSystem {
            lie_type,
            cartan,
            positives,
            half_lengths,
            index,
            all,
        }
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn is_root(&self, v: &Root) -> bool {
        self.all.contains(v)
    }

    pub fn is_positive_root(&self, v: &Root) -> bool {
        self.index.contains_key(v)
    }

    pub fn positive_index(&self, v: &Root) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Bilinear form (alpha, beta), normalized so long roots have squared
    /// length 2.
    pub fn bilinear(&self, a: &Root, b: &Root) -> Rational64 {
        let n = self.rank();
        let mut acc = Rational64::from_integer(0);
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b.0[j] == 0 {
                    continue;
                }
                // (alpha_i, alpha_j) = C[i][j] * d_j
                acc += Rational64::from_integer(a.0[i] * b.0[j] * self.cartan[i][j])
                    * self.half_lengths[j];
            }
        }
        acc
    }

    /// Cartan integer <a, b^v> = 2(a,b)/(b,b).
    pub fn pairing(&self, a: &Root, b: &Root) -> i64 {
        let num = self.bilinear(a, b) * Rational64::from_integer(2);
        let den = self.bilinear(b, b);
        let q = num / den;
        assert!(q.is_integer(), "non-integral Cartan pairing");
        q.to_integer()
    }

    /// Coefficients of the coroot a^v over the simple coroots.
    pub fn coroot_coeffs(&self, a: &Root) -> Vec<i64> {
        let aa = self.bilinear(a, a);
        (0..self.rank())
            .map(|i| {
                let c = Rational64::from_integer(a.0[i]) * self.half_lengths[i]
                    * Rational64::from_integer(2)
                    / aa;
                assert!(c.is_integer(), "non-integral coroot coefficient");
                c.to_integer()
            })
            .collect()
    }

    /// Chain-down length p = max{k : b - k*a is a root}.
    pub fn chain_down(&self, a: &Root, b: &Root) -> i64 {
        let mut p = 0;
        let mut v = b.sub(a);
        while self.is_root(&v) {
            p += 1;
            v = v.sub(a);
        }
        p
    }

    pub fn support_set(&self, roots: Vec<Root>) -> SupportSet<'_> {
        SupportSet { roots, rs: self }
    }
}

/// A set of positive roots examined for simple-system structure.
#[derive(Debug, Clone)]
pub struct SupportSet<'a> {
    pub roots: Vec<Root>,
    pub rs: &'a RootSystem,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorComponent {
    pub roots: Vec<Root>,
    /// None when the component's pairing matrix matches no finite type
    /// (the "not a simple system" marker).
    pub lie_type: Option<LieType>,
}

impl<'a> SupportSet<'a> {
    pub fn all_positive(&self) -> bool {
        self.roots.iter().all(|r| self.rs.is_positive_root(r))
    }

    pub fn linearly_independent(&self) -> bool {
        if self.roots.is_empty() {
            return true;
        }
        let m = ExactMatrix::from_i64_rows(
            &self.roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
        );
        m.rank() == self.roots.len()
    }

    /// Some pair whose difference is a root, if any.
    pub fn subtracting_pair(&self) -> Option<(Root, Root)> {
        for (i, a) in self.roots.iter().enumerate() {
            for b in &self.roots[i + 1..] {
                if self.rs.is_root(&a.sub(b)) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    /// True iff the set is linearly independent and no two members
    /// subtract to a root.
    pub fn is_simple_system(&self) -> bool {
        self.subtracting_pair().is_none() && self.linearly_independent()
    }

    /// Connected components of the nonzero-pairing graph, each classified
    /// by exhaustive Cartan-matrix matching over node orderings.
    pub fn factor_decomposition(&self) -> Vec<FactorComponent> {
        let k = self.roots.len();
        let pair: Vec<Vec<i64>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| self.rs.pairing(&self.roots[i], &self.roots[j]))
                    .collect()
            })
            .collect();
        let mut seen = vec![false; k];
        let mut comps = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in 0..k {
                    if !seen[v] && pair[u][v] != 0 {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort();
            let sub: Vec<Vec<i64>> = comp
                .iter()
                .map(|&i| comp.iter().map(|&j| pair[i][j]).collect())
                .collect();
            comps.push(FactorComponent {
                roots: comp.iter().map(|&i| self.roots[i].clone()).collect(),
                lie_type: identify_cartan_type(&sub),
            });
        }
        comps
    }
}

/// Matches a symmetrizable integer matrix against the standard Cartan
/// matrices over all node orderings. Intended for small components.
pub fn identify_cartan_type(m: &[Vec<i64>]) -> Option<LieType> {
    let k = m.len();
    if k == 0 {
        return None;
    }
    for i in 0..k {
        if m[i][i] != 2 {
            return None;
        }
        for j in 0..k {
            if i != j && m[i][j] > 0 {
                return None;
            }
        }
    }
    let mut candidates: Vec<LieType> = Vec::new();
    let mut push = |f, r| {
        if let Ok(t) = LieType::new(f, r) {
            candidates.push(t);
        }
    };
    push(LieFamily::A, k);
    if k >= 2 {
        push(LieFamily::B, k);
        push(LieFamily::C, k);
    }
    if k >= 4 {
        push(LieFamily::D, k);
    }
    push(LieFamily::E, k);
    if k == 4 {
        push(LieFamily::F, 4);
    }
    if k == 2 {
        push(LieFamily::G, 2);
    }
    for cand in candidates {
        let target = cand.cartan_matrix();
        for perm in (0..k).permutations(k) {
            let matches = (0..k).all(|i| {
                (0..k).all(|j| m[perm[i]][perm[j]] == target[i][j])
            });
            if matches {
                return Some(cand);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(LieType::parse(s).unwrap())
    }

    #[test]
    fn counts_match_closed_forms() {
        for s in ["A1", "A2", "A5", "B2", "B4", "C3", "D4", "D5", "G2", "F4", "E6"] {
            let r = rs(s);
            assert_eq!(
                r.positives.len(),
                r.lie_type.positive_root_count(),
                "count mismatch for {s}"
            );
        }
    }

    #[test]
    fn a2_positive_roots() {
        let r = rs("A2");
        let expect: Vec<Root> = vec![
            Root(vec![0, 1]),
            Root(vec![1, 0]),
            Root(vec![1, 1]),
        ];
        let mut got = r.positives.clone();
        got.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn e8_count_and_dim() {
        let r = rs("E8");
        assert_eq!(r.positives.len(), 120);
        assert_eq!(r.lie_type.dim(), 248);
    }

    #[test]
    fn f4_count_and_membership() {
        let r = rs("F4");
        assert_eq!(r.positives.len(), 24);
        assert!(r.is_root(&Root(vec![0, 1, 2, 0])));
        assert_eq!(r.lie_type.dim(), 52);
    }

    #[test]
    fn is_root_rejects() {
        let a4 = rs("A4");
        assert!(!a4.is_root(&Root(vec![0, 1, 2, 1])));
        assert!(!a4.is_root(&Root(vec![0, 0, 0, 0])));
    }

    #[test]
    fn closure_completeness() {
        for s in ["A3", "B3", "C3", "D4", "F4", "G2"] {
            let r = rs(s);
            for a in &r.positives {
                for b in &r.positives {
                    let sum = a.add(b);
                    if r.is_root(&sum) {
                        assert!(r.is_positive_root(&sum), "{s}: {a}+{b} missing");
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_values() {
        let a2 = rs("A2");
        let a1 = Root(vec![1, 0]);
        let a2r = Root(vec![0, 1]);
        assert_eq!(a2.pairing(&a1, &a1), 2);
        assert_eq!(a2.pairing(&a1, &a2r), -1);
        let f4 = rs("F4");
        assert_eq!(
            f4.pairing(&Root(vec![0, 1, 0, 0]), &Root(vec![0, 0, 1, 0])),
            -2
        );
    }

    #[test]
    fn simple_system_checks() {
        let a2 = rs("A2");
        let s = a2.support_set(vec![Root(vec![1, 0]), Root(vec![0, 1])]);
        assert!(s.is_simple_system());
        let s = a2.support_set(vec![Root(vec![1, 0]), Root(vec![1, 1])]);
        assert!(!s.is_simple_system());
        let a3 = rs("A3");
        let s = a3.support_set(vec![Root(vec![1, 0, 0]), Root(vec![0, 1, 1])]);
        assert!(s.is_simple_system());
    }

    #[test]
    fn factor_decomposition_orthogonal_a1s() {
        let a3 = rs("A3");
        let s = a3.support_set(vec![Root(vec![1, 0, 0]), Root(vec![0, 0, 1])]);
        let comps = s.factor_decomposition();
        assert_eq!(comps.len(), 2);
        for c in comps {
            assert_eq!(c.lie_type, Some(LieType::parse("A1").unwrap()));
        }
    }

    #[test]
    fn factor_decomposition_full_f4() {
        let f4 = rs("F4");
        let s = f4.support_set((0..4).map(|i| Root::simple(4, i)).collect());
        let comps = s.factor_decomposition();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].lie_type, Some(LieType::parse("F4").unwrap()));
    }
}
