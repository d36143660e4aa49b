//! Weyl group reflections, dominance, and reduction of `beta` to its orbit
//! representative `beta0 + m delta`.

use std::collections::HashSet;

use crate::cartan::{alpha_to_weight, cartan_matrix, delta_decompose, AffineRank, RootVector, WeightCoeffs};
use crate::error::{Error, Result};
use crate::maxweights::{max_plus, LevelKDominant};

pub fn simple_reflect(mu: &WeightCoeffs, i: i64, rank: AffineRank) -> WeightCoeffs {
    let i = rank.idx(i);
    let p = mu.lambda[i];
    mu.sub(&alpha_to_weight(i as i64, rank).scale(p))
}

/// Reflects at the smallest index with negative pairing until dominant.
pub fn dominate(mu: &WeightCoeffs, rank: AffineRank, cap: usize) -> Result<(WeightCoeffs, usize)> {
    let mut cur = mu.clone();
    let mut count = 0;
    while let Some(i) = cur.lambda.iter().position(|&p| p < 0) {
        if count == cap {
            return Err(Error::IterationCapExceeded { cap });
        }
        cur = simple_reflect(&cur, i as i64, rank);
        count += 1;
    }
    Ok((cur, count))
}

pub fn default_cap(beta: &RootVector) -> usize {
    10 * (beta.height().max(0) as usize + 1) * beta.coeffs.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitStatus {
    Zero,
    Nonzero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitResult {
    pub status: OrbitStatus,
    pub beta0: RootVector,
    pub m: i64,
    pub reflection_count: usize,
}

/// Caches the set of `beta` values of `max+(base)` for repeated reductions.
#[derive(Debug, Clone)]
pub struct OrbitReducer {
    base: LevelKDominant,
    plus_set: HashSet<RootVector>,
    a: Vec<Vec<i64>>,
}

impl OrbitReducer {
    pub fn new(base: &LevelKDominant) -> Self {
        OrbitReducer {
            base: base.clone(),
            plus_set: max_plus(base).into_iter().map(|e| e.beta).collect(),
            a: cartan_matrix(base.rank()),
        }
    }

    pub fn base(&self) -> &LevelKDominant {
        &self.base
    }

    pub fn in_plus_set(&self, beta: &RootVector) -> bool {
        self.plus_set.contains(beta)
    }

    pub fn reduce(&self, beta: &RootVector) -> Result<OrbitResult> {
        self.reduce_with_cap(beta, default_cap(beta))
    }

    /// Dominates `Lambda - beta` while tracking `beta` in root coordinates.
    /// A reflection at `i` with pairing `p < 0` lowers `beta_i` by `|p|`, so
    /// coordinates only decrease; once one is negative the dominant weight
    /// cannot be `Lambda` minus an element of `Q+` and the block is zero.
    pub fn reduce_with_cap(&self, beta: &RootVector, cap: usize) -> Result<OrbitResult> {
        let e = self.base.e();
        if beta.coeffs.len() != e {
            return Err(Error::RankMismatch { expected: e, found: beta.coeffs.len() });
        }
        let m = self.base.coeffs();
        let mut b = beta.coeffs.clone();
        let mut count = 0;
        let zero = |count| OrbitResult {
            status: OrbitStatus::Zero,
            beta0: RootVector { coeffs: vec![0; e] },
            m: 0,
            reflection_count: count,
        };
        loop {
            let pairing = |i: usize, b: &[i64]| m[i] - (0..e).map(|j| self.a[i][j] * b[j]).sum::<i64>();
            let Some(i) = (0..e).find(|&i| pairing(i, &b) < 0) else { break };
            if count == cap {
                return Err(Error::IterationCapExceeded { cap });
            }
            b[i] += pairing(i, &b);
            count += 1;
            if b[i] < 0 {
                return Ok(zero(count));
            }
        }
        let (beta0, depth) = delta_decompose(&RootVector { coeffs: b });
        if self.plus_set.contains(&beta0) {
            Ok(OrbitResult { status: OrbitStatus::Nonzero, beta0, m: depth, reflection_count: count })
        } else {
            Ok(zero(count))
        }
    }
}

pub fn orbit_representative(base: &LevelKDominant, beta: &RootVector) -> Result<OrbitResult> {
    OrbitReducer::new(base).reduce(beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::root_to_weight;

    fn rk(ell: usize) -> AffineRank {
        AffineRank::new(ell).unwrap()
    }

    fn w(c: &[i64]) -> LevelKDominant {
        LevelKDominant::new(c.to_vec()).unwrap()
    }

    #[test]
    fn reflection_examples() {
        let r = rk(1);
        let mu = WeightCoeffs::new(vec![2, 0], 0);
        assert_eq!(simple_reflect(&mu, 1, r), mu);
        let reflected = simple_reflect(&mu, 0, r);
        assert_eq!(reflected, WeightCoeffs::new(vec![-2, 4], -2));
        assert_eq!(simple_reflect(&reflected, 0, r), mu);
        assert_eq!(dominate(&reflected, r, 10).unwrap(), (mu.clone(), 1));
        assert_eq!(dominate(&mu, r, 10).unwrap(), (mu, 0));
    }

    #[test]
    fn cap_is_reported() {
        let r = rk(1);
        let mu = WeightCoeffs::new(vec![-6, 8], 0);
        assert_eq!(dominate(&mu, r, 0), Err(Error::IterationCapExceeded { cap: 0 }));
    }

    #[test]
    fn orbit_examples() {
        let base = w(&[2, 1]);
        let zero = RootVector::new(vec![0, 0]).unwrap();
        let res = orbit_representative(&base, &zero).unwrap();
        assert_eq!((res.status, res.beta0.coeffs, res.m), (OrbitStatus::Nonzero, vec![0, 0], 0));

        let a0 = RootVector::new(vec![1, 0]).unwrap();
        let res = orbit_representative(&base, &a0).unwrap();
        assert_eq!((res.status, res.beta0.coeffs, res.m), (OrbitStatus::Nonzero, vec![1, 0], 0));
        assert!(base.to_weight().sub(&root_to_weight(&a0, base.rank())).is_dominant());

        let res = orbit_representative(&w(&[1, 0, 0]), &RootVector::new(vec![0, 1, 0]).unwrap()).unwrap();
        assert_eq!(res.status, OrbitStatus::Zero);
    }

    #[test]
    fn delta_multiples() {
        let base = w(&[3, 0, 0]);
        let res = orbit_representative(&base, &RootVector::new(vec![2, 2, 2]).unwrap()).unwrap();
        assert_eq!((res.status, res.beta0.is_zero(), res.m), (OrbitStatus::Nonzero, true, 2));
    }
}
