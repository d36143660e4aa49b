//! The weight quiver on an equivalence class and its distinguished
//! subquiver T(Lambda).

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::cartan::{interval_delta, AffineRank, RootVector};
use crate::error::{Error, Result};
use crate::maxweights::{solve_x, LevelKDominant, MaxWeightEntry};

/// Replaces `Lambda_i + Lambda_j` by `Lambda_{i-1} + Lambda_{j+1}`.
pub fn apply_move(w: &LevelKDominant, i: i64, j: i64) -> Result<LevelKDominant> {
    let rank = w.rank();
    let (i, j) = (rank.idx(i), rank.idx(j));
    let c = w.coeffs();
    let need_i = if i == j { 2 } else { 1 };
    if c[i] < need_i || c[j] < 1 {
        return Err(Error::InsufficientMultiplicity { i, j });
    }
    let mut out = c.to_vec();
    out[i] -= 1;
    out[j] -= 1;
    out[rank.idx(i as i64 - 1)] += 1;
    out[rank.idx(j as i64 + 1)] += 1;
    Ok(LevelKDominant::from_raw(out))
}

/// Whether the move `(i,j)` out of a vertex with solution vector `x` is an
/// arrow, i.e. `min(x + Delta_{i,j}) = 0`.
pub fn has_arrow(x: &[i64], i: i64, j: i64) -> bool {
    let rank = AffineRank::new(x.len() - 1).expect("x has length e >= 2");
    let d = interval_delta(i, j, rank);
    x.iter().zip(&d.bits).map(|(a, b)| a + *b as i64).min() == Some(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub label: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightQuiver {
    pub base: LevelKDominant,
    pub vertices: Vec<MaxWeightEntry>,
    pub arrows: Vec<Arrow>,
}

impl WeightQuiver {
    pub fn index_of(&self, w: &LevelKDominant) -> Option<usize> {
        self.vertices.iter().position(|v| &v.weight == w)
    }

    pub fn rank(&self) -> AffineRank {
        self.base.rank()
    }
}

/// Move labels `(i,j)` that apply to `w` and do not fix it.
fn admissible_labels(w: &LevelKDominant) -> Vec<(usize, usize)> {
    let c = w.coeffs();
    let e = w.e();
    let mut out = Vec::new();
    for i in 0..e {
        for j in 0..e {
            let enough = if i == j { c[i] >= 2 } else { c[i] >= 1 && c[j] >= 1 };
            if enough && j != (i + e - 1) % e {
                out.push((i, j));
            }
        }
    }
    out
}

fn add_interval(x: &[i64], i: usize, j: usize, rank: AffineRank) -> Vec<i64> {
    let d = interval_delta(i as i64, j as i64, rank);
    x.iter().zip(&d.bits).map(|(a, b)| a + *b as i64).collect()
}

/// Orders vertices by (height of beta, coefficients) and remaps arrows.
fn canonicalize(
    base: &LevelKDominant,
    found: Vec<(LevelKDominant, Vec<i64>)>,
    arrows: BTreeSet<(LevelKDominant, LevelKDominant, (usize, usize))>,
) -> WeightQuiver {
    let mut vertices: Vec<MaxWeightEntry> = found
        .into_iter()
        .map(|(w, x)| MaxWeightEntry::from_x(base, w, x))
        .collect();
    vertices.sort_by(|a, b| (a.beta.height(), &a.weight).cmp(&(b.beta.height(), &b.weight)));
    let index: HashMap<LevelKDominant, usize> =
        vertices.iter().enumerate().map(|(n, v)| (v.weight.clone(), n)).collect();
    let mut arrows: Vec<Arrow> = arrows
        .into_iter()
        .map(|(s, d, label)| Arrow { src: index[&s], dst: index[&d], label })
        .collect();
    arrows.sort();
    WeightQuiver { base: base.clone(), vertices, arrows }
}

pub fn build_quiver(base: &LevelKDominant) -> Result<WeightQuiver> {
    if base.k() < 2 {
        return Err(Error::LevelTooSmall { k: base.k(), min: 2 });
    }
    let rank = base.rank();
    let mut xs: HashMap<LevelKDominant, Vec<i64>> = HashMap::new();
    let mut order = Vec::new();
    let mut arrows = BTreeSet::new();
    let mut queue = VecDeque::new();
    xs.insert(base.clone(), vec![0; base.e()]);
    order.push(base.clone());
    queue.push_back(base.clone());
    while let Some(v) = queue.pop_front() {
        let x = xs[&v].clone();
        for (i, j) in admissible_labels(&v) {
            if !has_arrow(&x, i as i64, j as i64) {
                continue;
            }
            let w = apply_move(&v, i as i64, j as i64)?;
            let xw = add_interval(&x, i, j, rank);
            match xs.get(&w) {
                Some(prev) => debug_assert_eq!(prev, &xw, "inconsistent X along arrow"),
                None => {
                    xs.insert(w.clone(), xw);
                    order.push(w.clone());
                    queue.push_back(w.clone());
                }
            }
            arrows.insert((v.clone(), w, (i, j)));
        }
    }
    let found = order.into_iter().map(|w| {
        let x = xs.remove(&w).expect("every discovered vertex has X");
        (w, x)
    });
    Ok(canonicalize(base, found.collect(), arrows))
}

pub fn successors(q: &WeightQuiver, v: &LevelKDominant) -> Result<Vec<LevelKDominant>> {
    let idx = q.index_of(v).ok_or(Error::VertexNotFound)?;
    let set: BTreeSet<LevelKDominant> = q
        .arrows
        .iter()
        .filter(|a| a.src == idx)
        .map(|a| q.vertices[a.dst].weight.clone())
        .collect();
    Ok(set.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TQuiver {
    pub quiver: WeightQuiver,
    /// For each vertex, the strata `T(Lambda)_s` it belongs to; empty for the base.
    pub tags: Vec<BTreeSet<u8>>,
}

impl TQuiver {
    pub fn tagged(&self, s: u8) -> Vec<&MaxWeightEntry> {
        self.quiver
            .vertices
            .iter()
            .zip(&self.tags)
            .filter(|(_, t)| t.contains(&s))
            .map(|(v, _)| v)
            .collect()
    }
}

/// `I(Lambda)_s = { i : m_i >= s + 1 }`.
pub fn multiplicity_support(base: &LevelKDominant, s: i64) -> Vec<usize> {
    (0..base.e()).filter(|&i| base.coeffs()[i] > s).collect()
}

pub fn t_subquiver(base: &LevelKDominant) -> Result<TQuiver> {
    if base.k() < 2 {
        return Err(Error::LevelTooSmall { k: base.k(), min: 2 });
    }
    let rank = base.rank();
    let ell = rank.ell();
    let e = rank.e();
    let mut tags: BTreeMap<LevelKDominant, BTreeSet<u8>> = BTreeMap::new();
    let mut arrows = BTreeSet::new();
    let mut step = |src: &LevelKDominant, i: i64, j: i64, tag: u8| -> Result<LevelKDominant> {
        let x = solve_x(base, src)?;
        debug_assert!(has_arrow(&x, i, j), "construction arrow must exist");
        let dst = apply_move(src, i, j)?;
        arrows.insert((src.clone(), dst.clone(), (rank.idx(i), rank.idx(j))));
        tags.entry(dst.clone()).or_default().insert(tag);
        Ok(dst)
    };

    let i0 = multiplicity_support(base, 0);
    for &i in &i0 {
        for &j in &i0 {
            if i != j && j != (i + e - 1) % e {
                step(base, i as i64, j as i64, 0)?;
            }
        }
    }
    let i1 = multiplicity_support(base, 1);
    let i2 = multiplicity_support(base, 2);
    let i3 = multiplicity_support(base, 3);
    for &i in &i1 {
        let ii = i as i64;
        let first = step(base, ii, ii, 1)?;
        if ell >= 3 {
            step(&first, ii - 1, ii + 1, 2)?;
        }
        if ell >= 2 && i2.contains(&i) {
            step(&first, ii, ii + 1, 3)?;
            step(&first, ii - 1, ii, 3)?;
        }
        if i3.contains(&i) {
            step(&first, ii, ii, 4)?;
        }
        if ell >= 2 {
            for &j in i1.iter().filter(|&&j| j != i) {
                step(&first, j as i64, j as i64, 5)?;
            }
        }
    }

    let mut found = vec![(base.clone(), vec![0; e])];
    for w in tags.keys() {
        found.push((w.clone(), solve_x(base, w)?));
    }
    let mut quiver = canonicalize(base, found, arrows);
    // The base always has beta = 0, so it sorts first.
    debug_assert_eq!(quiver.vertices[0].weight, *base);
    let tag_list = quiver
        .vertices
        .iter()
        .map(|v| tags.get(&v.weight).cloned().unwrap_or_default())
        .collect();
    quiver.arrows.sort();
    Ok(TQuiver { quiver, tags: tag_list })
}

/// The closed-form beta sets of the strata of T(Lambda).
pub fn t_beta_sets(base: &LevelKDominant) -> BTreeMap<u8, BTreeSet<RootVector>> {
    let rank = base.rank();
    let ell = rank.ell();
    let e = rank.e();
    let mut sets: BTreeMap<u8, BTreeSet<RootVector>> = (0..6).map(|s| (s, BTreeSet::new())).collect();
    let root = |terms: &[(i64, i64)]| {
        let mut c = vec![0i64; e];
        for &(i, mult) in terms {
            c[rank.idx(i)] += mult;
        }
        RootVector { coeffs: c }
    };
    let i0 = multiplicity_support(base, 0);
    for &i in &i0 {
        for &j in &i0 {
            if i != j && j != (i + e - 1) % e {
                let bits = interval_delta(i as i64, j as i64, rank).bits;
                sets.get_mut(&0).unwrap().insert(RootVector { coeffs: bits.iter().map(|&b| b as i64).collect() });
            }
        }
    }
    let i1 = multiplicity_support(base, 1);
    for &i in &i1 {
        let i = i as i64;
        sets.get_mut(&1).unwrap().insert(root(&[(i, 1)]));
        if ell >= 3 {
            sets.get_mut(&2).unwrap().insert(root(&[(i, 2), (i - 1, 1), (i + 1, 1)]));
        }
    }
    if ell >= 2 {
        for &i in &multiplicity_support(base, 2) {
            let i = i as i64;
            sets.get_mut(&3).unwrap().insert(root(&[(i, 2), (i - 1, 1)]));
            sets.get_mut(&3).unwrap().insert(root(&[(i, 2), (i + 1, 1)]));
        }
        for &i in &i1 {
            for &j in i1.iter().filter(|&&j| j != i) {
                sets.get_mut(&5).unwrap().insert(root(&[(i as i64, 1), (j as i64, 1)]));
            }
        }
    }
    for &i in &multiplicity_support(base, 3) {
        sets.get_mut(&4).unwrap().insert(root(&[(i as i64, 2)]));
    }
    sets
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> LevelKDominant {
        LevelKDominant::new(c.to_vec()).unwrap()
    }

    #[test]
    fn moves() {
        assert_eq!(apply_move(&w(&[2, 0, 0, 0]), 0, 0).unwrap(), w(&[0, 1, 0, 1]));
        assert_eq!(
            apply_move(&w(&[0, 1, 0, 1, 0, 1, 0]), 1, 3).unwrap(),
            w(&[1, 0, 0, 0, 1, 1, 0])
        );
        let x = w(&[1, 1, 2, 0]);
        assert_eq!(apply_move(&x, 2, 1).unwrap(), x);
        assert!(apply_move(&w(&[1, 1, 0]), 0, 0).is_err());
        assert!(apply_move(&w(&[1, 1, 0]), 0, 2).is_err());
    }

    #[test]
    fn arrow_criterion() {
        assert!(has_arrow(&[1, 0, 0, 0, 0, 0, 1], 1, 3));
        assert!(has_arrow(&[0; 5], 2, 4));
        // Lambda_2 + 2 Lambda_ell under 3 Lambda_0 has X = (2,1,0,...,0).
        assert!(!has_arrow(&[2, 1, 0, 0, 0], 2, 4));
    }

    #[test]
    fn chain_for_2lambda0() {
        for ell in 2..10usize {
            let e = ell + 1;
            let base = LevelKDominant::multiple_of(AffineRank::new(ell).unwrap(), 2, 0).unwrap();
            let q = build_quiver(&base).unwrap();
            assert_eq!(q.vertices.len(), e / 2 + 1);
            assert_eq!(q.arrows.len(), e / 2);
            // Vertex t of the chain is Lambda_t + Lambda_{e-t}.
            for (t, a) in q.arrows.iter().enumerate() {
                assert_eq!(a.src, t);
                assert_eq!(a.dst, t + 1);
                let expected = if t == 0 { (0, 0) } else { (e - t, t) };
                assert_eq!(a.label, expected);
            }
        }
    }

    #[test]
    fn level_one_rejected() {
        assert!(matches!(build_quiver(&w(&[1, 0, 0])), Err(Error::LevelTooSmall { .. })));
        assert!(t_subquiver(&w(&[0, 1, 0])).is_err());
    }

    #[test]
    fn successors_of_k_lambda0() {
        for k in 2..6 {
            let base = w(&[k, 0, 0, 0, 0]);
            let q = build_quiver(&base).unwrap();
            assert_eq!(successors(&q, &base).unwrap(), vec![w(&[k - 2, 1, 0, 0, 1])]);
        }
    }

    #[test]
    fn t_for_3lambda0() {
        for ell in 3..8usize {
            let e = ell + 1;
            let base = LevelKDominant::multiple_of(AffineRank::new(ell).unwrap(), 3, 0).unwrap();
            let t = t_subquiver(&base).unwrap();
            let mk = |pairs: &[(usize, i64)]| {
                let mut c = vec![0; e];
                for &(i, m) in pairs {
                    c[i] += m;
                }
                w(&c)
            };
            let names = |s: u8| -> BTreeSet<LevelKDominant> { t.tagged(s).iter().map(|v| v.weight.clone()).collect() };
            assert_eq!(names(1), [mk(&[(0, 1), (1, 1), (ell, 1)])].into());
            assert_eq!(names(2), [mk(&[(0, 1), (2, 1), (ell - 1, 1)])].into());
            assert_eq!(names(3), [mk(&[(1, 2), (ell - 1, 1)]), mk(&[(2, 1), (ell, 2)])].into());
            assert!(names(0).is_empty() && names(4).is_empty() && names(5).is_empty());
        }
    }

    #[test]
    fn t_level_two() {
        let t = t_subquiver(&w(&[2, 0, 0, 0])).unwrap();
        assert_eq!(t.quiver.vertices.len(), 3);
        assert_eq!(t.tags[1], [1u8].into());
        assert_eq!(t.tags[2], [2u8].into());
    }

    #[test]
    fn beta_sets_small() {
        let sets = t_beta_sets(&w(&[4, 0, 0, 2, 0, 0, 1]));
        let r = |c: &[i64]| RootVector::new(c.to_vec()).unwrap();
        assert_eq!(sets[&4], [r(&[2, 0, 0, 0, 0, 0, 0])].into());
        assert_eq!(sets[&5], [r(&[1, 0, 0, 1, 0, 0, 0])].into());
        assert_eq!(sets[&1], [r(&[1, 0, 0, 0, 0, 0, 0]), r(&[0, 0, 0, 1, 0, 0, 0])].into());
        let sets = t_beta_sets(&w(&[5, 0, 0]));
        assert!(sets[&0].is_empty());
        assert_eq!(sets[&1], [r(&[1, 0, 0])].into());
        let sets = t_beta_sets(&w(&[1, 0, 1, 0]));
        assert!(sets[&1].is_empty());
    }
}
