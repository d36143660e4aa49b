//! Cartan datum of affine type A_ell^(1): matrix, pairings, root/weight
//! conversions and the diagram rotation.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineRank {
    ell: usize,
}

impl AffineRank {
    pub fn new(ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidRank(ell));
        }
        Ok(AffineRank { ell })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Quantum characteristic `e = ell + 1`.
    pub fn e(&self) -> usize {
        self.ell + 1
    }

    /// Reduces any integer index into `0..e`.
    pub fn idx(&self, i: i64) -> usize {
        i.rem_euclid(self.e() as i64) as usize
    }
}

pub fn cartan_matrix(rank: AffineRank) -> Vec<Vec<i64>> {
    let e = rank.e();
    let mut a = vec![vec![0i64; e]; e];
    for i in 0..e {
        a[i][i] = 2;
        if e == 2 {
            a[i][1 - i] = -2;
        } else {
            a[i][(i + 1) % e] = -1;
            a[i][(i + e - 1) % e] = -1;
        }
    }
    a
}

/// A weight `sum lambda[i] Lambda_i + delta * delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightCoeffs {
    pub lambda: Vec<i64>,
    pub delta: i64,
}

impl WeightCoeffs {
    pub fn new(lambda: Vec<i64>, delta: i64) -> Self {
        WeightCoeffs { lambda, delta }
    }

    pub fn zero(rank: AffineRank) -> Self {
        WeightCoeffs { lambda: vec![0; rank.e()], delta: 0 }
    }

    pub fn fundamental(rank: AffineRank, i: i64) -> Self {
        let mut w = Self::zero(rank);
        w.lambda[rank.idx(i)] = 1;
        w
    }

    pub fn level(&self) -> i64 {
        self.lambda.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.lambda.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &WeightCoeffs) -> WeightCoeffs {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &WeightCoeffs) -> WeightCoeffs {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: i64) -> WeightCoeffs {
        WeightCoeffs {
            lambda: self.lambda.iter().map(|x| x * c).collect(),
            delta: self.delta * c,
        }
    }

    fn combine(&self, other: &WeightCoeffs, sign: i64) -> WeightCoeffs {
        assert_eq!(self.lambda.len(), other.lambda.len(), "weights of different rank");
        WeightCoeffs {
            lambda: self.lambda.iter().zip(&other.lambda).map(|(a, b)| a + sign * b).collect(),
            delta: self.delta + sign * other.delta,
        }
    }
}

impl fmt::Display for WeightCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, String)> = self
            .lambda
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (c, format!("Λ_{i}")))
            .collect();
        if self.delta != 0 {
            terms.push((self.delta, "δ".to_string()));
        }
        write_linear_combination(f, &terms)
    }
}

/// An element `sum coeffs[i] alpha_i` of the positive root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub coeffs: Vec<i64>,
}

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::NegativeRoot(coeffs));
        }
        Ok(RootVector { coeffs })
    }

    pub fn zero(rank: AffineRank) -> Self {
        RootVector { coeffs: vec![0; rank.e()] }
    }

    pub fn simple(rank: AffineRank, i: i64) -> Self {
        let mut r = Self::zero(rank);
        r.coeffs[rank.idx(i)] = 1;
        r
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn plus(&self, other: &RootVector) -> RootVector {
        RootVector {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    /// Adds `m` copies of the null root.
    pub fn plus_delta(&self, m: i64) -> RootVector {
        RootVector { coeffs: self.coeffs.iter().map(|c| c + m).collect() }
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (c, format!("α_{i}")))
            .collect();
        write_linear_combination(f, &terms)
    }
}

fn write_linear_combination(f: &mut fmt::Formatter<'_>, terms: &[(i64, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (n, (c, sym)) in terms.iter().enumerate() {
        let sign = if *c < 0 { "-" } else if n > 0 { "+" } else { "" };
        let mag = c.abs();
        if mag == 1 {
            write!(f, "{sign}{sym}")?;
        } else {
            write!(f, "{sign}{mag}{sym}")?;
        }
    }
    Ok(())
}

pub fn pairing(i: usize, mu: &WeightCoeffs) -> Result<i64> {
    mu.lambda
        .get(i)
        .copied()
        .ok_or(Error::IndexOutOfRange { index: i, e: mu.lambda.len() })
}

pub fn alpha_to_weight(i: i64, rank: AffineRank) -> WeightCoeffs {
    let a = cartan_matrix(rank);
    let i = rank.idx(i);
    // Column i of A lists <h_j, alpha_i>.
    WeightCoeffs {
        lambda: (0..rank.e()).map(|j| a[j][i]).collect(),
        delta: if i == 0 { 1 } else { 0 },
    }
}

pub fn root_to_weight(beta: &RootVector, rank: AffineRank) -> WeightCoeffs {
    let mut w = WeightCoeffs::zero(rank);
    for (i, &b) in beta.coeffs.iter().enumerate() {
        if b != 0 {
            w = w.add(&alpha_to_weight(i as i64, rank).scale(b));
        }
    }
    w
}

pub fn delta_decompose(beta: &RootVector) -> (RootVector, i64) {
    let m = beta.coeffs.iter().copied().min().unwrap_or(0);
    (RootVector { coeffs: beta.coeffs.iter().map(|c| c - m).collect() }, m)
}

/// The diagram automorphism `i -> i + shift` acting on coefficient vectors.
pub trait SigmaRotate {
    fn sigma_rotate(&self, shift: i64) -> Self;
}

pub(crate) fn rotate_vec<T: Clone>(v: &[T], shift: i64) -> Vec<T> {
    let e = v.len() as i64;
    let mut out = v.to_vec();
    for (i, x) in v.iter().enumerate() {
        out[(i as i64 + shift).rem_euclid(e) as usize] = x.clone();
    }
    out
}

impl SigmaRotate for WeightCoeffs {
    fn sigma_rotate(&self, shift: i64) -> Self {
        WeightCoeffs { lambda: rotate_vec(&self.lambda, shift), delta: self.delta }
    }
}

impl SigmaRotate for RootVector {
    fn sigma_rotate(&self, shift: i64) -> Self {
        RootVector { coeffs: rotate_vec(&self.coeffs, shift) }
    }
}

/// Indicator vector of the cyclic interval `[i, j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalVector {
    pub bits: Vec<u8>,
}

impl IntervalVector {
    pub fn contains(&self, h: usize) -> bool {
        self.bits[h] == 1
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&h| self.bits[h] == 1).collect()
    }
}

pub fn interval_delta(i: i64, j: i64, rank: AffineRank) -> IntervalVector {
    let e = rank.e();
    let (i, j) = (rank.idx(i), rank.idx(j));
    let len = (j + e - i) % e + 1;
    let mut bits = vec![0u8; e];
    for t in 0..len {
        bits[(i + t) % e] = 1;
    }
    IntervalVector { bits }
}
