//! Dominant maximal weights: the sieving equivalence class of a level-k
//! dominant weight, the solution vectors X and the set max+.

use std::fmt;

use crate::cartan::{cartan_matrix, root_to_weight, rotate_vec, AffineRank, RootVector, SigmaRotate, WeightCoeffs};
use crate::error::{Error, Result};
use crate::linalg::{solve, Rational};

/// A dominant weight `sum m_i Lambda_i` of positive level, taken modulo delta.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LevelKDominant {
    coeffs: Vec<i64>,
}

impl LevelKDominant {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidWeight(format!("need at least 2 coefficients, got {}", coeffs.len())));
        }
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::InvalidWeight(format!("negative coefficient in {coeffs:?}")));
        }
        if coeffs.iter().sum::<i64>() < 1 {
            return Err(Error::InvalidWeight("level must be at least 1".into()));
        }
        Ok(LevelKDominant { coeffs })
    }

    /// `k Lambda_i` written over the given rank.
    pub fn multiple_of(rank: AffineRank, k: i64, i: i64) -> Result<Self> {
        let mut c = vec![0; rank.e()];
        c[rank.idx(i)] = k;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn k(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn e(&self) -> usize {
        self.coeffs.len()
    }

    pub fn rank(&self) -> AffineRank {
        AffineRank::new(self.coeffs.len() - 1).expect("length checked at construction")
    }

    pub fn to_weight(&self) -> WeightCoeffs {
        WeightCoeffs::new(self.coeffs.clone(), 0)
    }

    pub fn plus(&self, other: &LevelKDominant) -> LevelKDominant {
        assert_eq!(self.e(), other.e());
        LevelKDominant { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub(crate) fn from_raw(coeffs: Vec<i64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c >= 0));
        LevelKDominant { coeffs }
    }
}

impl SigmaRotate for LevelKDominant {
    fn sigma_rotate(&self, shift: i64) -> Self {
        LevelKDominant { coeffs: rotate_vec(&self.coeffs, shift) }
    }
}

impl fmt::Display for LevelKDominant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_weight())
    }
}

pub fn ev(w: &LevelKDominant) -> usize {
    let e = w.e() as i64;
    let s: i64 = w.coeffs.iter().enumerate().skip(1).map(|(i, &m)| i as i64 * m).sum();
    s.rem_euclid(e) as usize
}

fn weak_compositions(k: i64, parts: usize) -> Vec<Vec<i64>> {
    fn rec(remaining: i64, parts: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 1 {
            cur.push(remaining);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for c in 0..=remaining {
            cur.push(c);
            rec(remaining - c, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// All level-k dominant weights with the same `ev`, in lexicographic order.
pub fn equiv_class(w: &LevelKDominant) -> Vec<LevelKDominant> {
    let target = ev(w);
    let mut class: Vec<LevelKDominant> = weak_compositions(w.k(), w.e())
        .into_iter()
        .map(LevelKDominant::from_raw)
        .filter(|c| ev(c) == target)
        .collect();
    class.sort();
    class
}

/// The unique `X >= 0` with `min X = 0` and `A X^t = Y^t`, where
/// `Y_i = <h_i, base - target>`.
pub fn solve_x(base: &LevelKDominant, target: &LevelKDominant) -> Result<Vec<i64>> {
    if base.e() != target.e() {
        return Err(Error::RankMismatch { expected: base.e(), found: target.e() });
    }
    if base.k() != target.k() {
        return Err(Error::NoSolution);
    }
    let a = cartan_matrix(base.rank());
    let e = base.e();
    let y: Vec<i64> = base.coeffs.iter().zip(&target.coeffs).map(|(b, t)| b - t).collect();
    // Pin x_0 = 0 and solve rows 1..e over the unknowns x_1..x_ell.
    let sub: Vec<Vec<Rational>> = (1..e)
        .map(|r| (1..e).map(|c| Rational::from_integer(a[r][c])).collect())
        .collect();
    let rhs: Vec<Rational> = (1..e).map(|r| Rational::from_integer(y[r])).collect();
    let tail = solve(sub, rhs).ok_or(Error::NoSolution)?;
    let mut x = vec![0i64];
    for v in tail {
        if !v.is_integer() {
            return Err(Error::NoSolution);
        }
        x.push(v.to_integer());
    }
    let row0: i64 = (0..e).map(|c| a[0][c] * x[c]).sum();
    if row0 != y[0] {
        return Err(Error::NoSolution);
    }
    let min = *x.iter().min().expect("e >= 2");
    Ok(x.into_iter().map(|v| v - min).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxWeightEntry {
    pub weight: LevelKDominant,
    pub x: Vec<i64>,
    pub beta: RootVector,
    pub max_weight: WeightCoeffs,
}

impl MaxWeightEntry {
    pub(crate) fn from_x(base: &LevelKDominant, weight: LevelKDominant, x: Vec<i64>) -> Self {
        let beta = RootVector { coeffs: x.clone() };
        let max_weight = base.to_weight().sub(&root_to_weight(&beta, base.rank()));
        MaxWeightEntry { weight, x, beta, max_weight }
    }
}

/// One entry per member of the equivalence class of `base`, in class order.
pub fn max_plus(base: &LevelKDominant) -> Vec<MaxWeightEntry> {
    equiv_class(base)
        .into_iter()
        .map(|w| {
            let x = solve_x(base, &w).expect("class members always have a solution");
            MaxWeightEntry::from_x(base, w, x)
        })
        .collect()
}
