//! Charged multipartitions, standard tableaux and their degrees, and graded
//! dimensions of cyclotomic quiver Hecke algebra blocks.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::cartan::RootVector;
use crate::error::{Error, Result};
use crate::maxweights::LevelKDominant;
use crate::poly::LaurentPoly;

pub type Partition = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    pub components: Vec<Partition>,
}

/// A node `(component, row, col)`, all zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(component: usize, row: usize, col: usize) -> Self {
        Node { component, row, col }
    }
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        for p in &components {
            if p.contains(&0) || p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidWeight(format!("{p:?} is not a partition")));
            }
        }
        Ok(Multipartition { components })
    }

    pub fn empty(k: usize) -> Self {
        Multipartition { components: vec![Vec::new(); k] }
    }

    pub fn size(&self) -> usize {
        self.components.iter().flatten().sum()
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (s, lam) in self.components.iter().enumerate() {
            for row in 0..=lam.len() {
                let len = lam.get(row).copied().unwrap_or(0);
                if row == 0 || lam[row - 1] > len {
                    out.push(Node::new(s, row, len));
                }
            }
        }
        out
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (s, lam) in self.components.iter().enumerate() {
            for (row, &len) in lam.iter().enumerate() {
                if lam.get(row + 1).copied().unwrap_or(0) < len {
                    out.push(Node::new(s, row, len - 1));
                }
            }
        }
        out
    }

    pub fn is_removable(&self, p: Node) -> bool {
        self.removable_nodes().contains(&p)
    }

    fn with_node(&self, p: Node) -> Multipartition {
        let mut out = self.clone();
        let lam = &mut out.components[p.component];
        if p.row == lam.len() {
            lam.push(1);
        } else {
            lam[p.row] += 1;
        }
        out
    }

    fn without_node(&self, p: Node) -> Multipartition {
        let mut out = self.clone();
        let lam = &mut out.components[p.component];
        lam[p.row] -= 1;
        if lam[p.row] == 0 {
            lam.pop();
        }
        out
    }
}

/// Residue data of a fixed expression `Lambda = Lambda_{i_1} + ... + Lambda_{i_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Charges {
    pub charges: Vec<usize>,
    pub e: usize,
}

impl Charges {
    pub fn new(charges: Vec<usize>, e: usize) -> Result<Self> {
        if e < 2 || charges.is_empty() || charges.iter().any(|&c| c >= e) {
            return Err(Error::InvalidWeight(format!("bad charges {charges:?} for e = {e}")));
        }
        Ok(Charges { charges, e })
    }

    /// The weakly increasing expression of a dominant weight.
    pub fn of(base: &LevelKDominant) -> Self {
        let charges = base
            .coeffs()
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat(i).take(m as usize))
            .collect();
        Charges { charges, e: base.e() }
    }

    pub fn k(&self) -> usize {
        self.charges.len()
    }

    pub fn residue(&self, p: Node) -> usize {
        (self.charges[p.component] + p.col + self.e * (p.row / self.e + 1) - p.row) % self.e
    }

    pub fn content(&self, mp: &Multipartition) -> Vec<i64> {
        let mut c = vec![0i64; self.e];
        for (s, lam) in mp.components.iter().enumerate() {
            for (row, &len) in lam.iter().enumerate() {
                for col in 0..len {
                    c[self.residue(Node::new(s, row, col))] += 1;
                }
            }
        }
        c
    }

    /// Addable minus removable nodes of residue `res p` strictly below `p`,
    /// without checking that `p` is removable.
    fn d_value(&self, mp: &Multipartition, p: Node) -> i64 {
        let r = self.residue(p);
        let mut count = 0;
        for s in p.component..mp.components.len() {
            let lam = &mp.components[s];
            let first_row = if s == p.component { p.row + 1 } else { 0 };
            for row in first_row..=lam.len() {
                let len = lam.get(row).copied().unwrap_or(0);
                if (row == 0 || lam[row - 1] > len) && self.residue(Node::new(s, row, len)) == r {
                    count += 1;
                }
                if len > 0
                    && lam.get(row + 1).copied().unwrap_or(0) < len
                    && self.residue(Node::new(s, row, len - 1)) == r
                {
                    count -= 1;
                }
            }
        }
        count
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargedShape {
    pub mp: Multipartition,
    pub charges: Charges,
}

pub fn d_below(shape: &ChargedShape, p: Node) -> Result<i64> {
    if !shape.mp.is_removable(p) {
        return Err(Error::NodeNotRemovable { component: p.component, row: p.row, col: p.col });
    }
    Ok(shape.charges.d_value(&shape.mp, p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardTableau {
    /// `filling[s][row][col]` holds the entry in `1..=n`.
    pub filling: Vec<Vec<Vec<usize>>>,
    pub residue_seq: Vec<usize>,
    pub degree: i64,
}

pub fn std_tableaux(shape: &ChargedShape) -> Vec<StandardTableau> {
    fn rec(mp: &Multipartition, ch: &Charges, memo: &mut HashMap<Multipartition, Vec<StandardTableau>>) -> Vec<StandardTableau> {
        if let Some(v) = memo.get(mp) {
            return v.clone();
        }
        let n = mp.size();
        if n == 0 {
            let empty = StandardTableau {
                filling: vec![Vec::new(); mp.components.len()],
                residue_seq: Vec::new(),
                degree: 0,
            };
            return vec![empty];
        }
        let mut out = Vec::new();
        for p in mp.removable_nodes() {
            let d = ch.d_value(mp, p);
            let r = ch.residue(p);
            for mut t in rec(&mp.without_node(p), ch, memo) {
                let rows = &mut t.filling[p.component];
                if p.row == rows.len() {
                    rows.push(Vec::new());
                }
                rows[p.row].push(n);
                t.residue_seq.push(r);
                t.degree += d;
                out.push(t);
            }
        }
        out.sort_by(|a, b| a.filling.cmp(&b.filling));
        memo.insert(mp.clone(), out.clone());
        out
    }
    rec(&shape.mp, &shape.charges, &mut HashMap::new())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GdimOptions {
    pub max_size: i64,
}

impl Default for GdimOptions {
    fn default() -> Self {
        GdimOptions { max_size: 14 }
    }
}

fn check_beta(ch: &Charges, beta: &RootVector, opts: GdimOptions) -> Result<()> {
    if beta.coeffs.len() != ch.e {
        return Err(Error::RankMismatch { expected: ch.e, found: beta.coeffs.len() });
    }
    if beta.height() > opts.max_size {
        return Err(Error::SizeLimit { size: beta.height(), limit: opts.max_size });
    }
    Ok(())
}

/// All multipartitions of `|beta|` whose node residues have content `beta`.
pub fn enumerate_with_content(ch: &Charges, beta: &RootVector, opts: GdimOptions) -> Result<Vec<Multipartition>> {
    check_beta(ch, beta, opts)?;
    let mut layer: BTreeSet<(Multipartition, Vec<i64>)> = BTreeSet::new();
    layer.insert((Multipartition::empty(ch.k()), vec![0; ch.e]));
    for _ in 0..beta.height() {
        let mut next = BTreeSet::new();
        for (mp, content) in &layer {
            for p in mp.addable_nodes() {
                let r = ch.residue(p);
                if content[r] < beta.coeffs[r] {
                    let mut c = content.clone();
                    c[r] += 1;
                    next.insert((mp.with_node(p), c));
                }
            }
        }
        layer = next;
    }
    Ok(layer.into_iter().map(|(mp, _)| mp).collect())
}

fn sequence_content(nu: &[usize], e: usize) -> Result<Vec<i64>> {
    let mut c = vec![0i64; e];
    for &r in nu {
        if r >= e {
            return Err(Error::ContentMismatch(nu.to_vec()));
        }
        c[r] += 1;
    }
    Ok(c)
}

/// For each multipartition, the sum of `q^deg T` over tableaux `T` with
/// residue sequence `nu`.
fn polys_along(ch: &Charges, nu: &[usize]) -> BTreeMap<Multipartition, LaurentPoly> {
    let mut layer: BTreeMap<Multipartition, LaurentPoly> = BTreeMap::new();
    layer.insert(Multipartition::empty(ch.k()), LaurentPoly::one());
    for &r in nu {
        let mut next: BTreeMap<Multipartition, LaurentPoly> = BTreeMap::new();
        for (mp, poly) in &layer {
            for p in mp.addable_nodes() {
                if ch.residue(p) != r {
                    continue;
                }
                let grown = mp.with_node(p);
                let d = ch.d_value(&grown, p);
                *next.entry(grown).or_default() += &poly.shift(d);
            }
        }
        layer = next;
    }
    layer
}

pub fn graded_dim(
    ch: &Charges,
    beta: &RootVector,
    nu: &[usize],
    nu2: &[usize],
    opts: GdimOptions,
) -> Result<LaurentPoly> {
    check_beta(ch, beta, opts)?;
    for seq in [nu, nu2] {
        if sequence_content(seq, ch.e)? != beta.coeffs {
            return Err(Error::ContentMismatch(seq.to_vec()));
        }
    }
    let left = polys_along(ch, nu);
    let right = if nu == nu2 { left.clone() } else { polys_along(ch, nu2) };
    let mut total = LaurentPoly::zero();
    for (mp, p) in &left {
        if let Some(q) = right.get(mp) {
            total += &(p * q);
        }
    }
    Ok(total)
}

pub fn graded_dim_total(ch: &Charges, beta: &RootVector, opts: GdimOptions) -> Result<LaurentPoly> {
    let shapes = enumerate_with_content(ch, beta, opts)?;
    let mut memo: HashMap<Multipartition, LaurentPoly> = HashMap::new();
    fn poly_of(mp: &Multipartition, ch: &Charges, memo: &mut HashMap<Multipartition, LaurentPoly>) -> LaurentPoly {
        if mp.size() == 0 {
            return LaurentPoly::one();
        }
        if let Some(p) = memo.get(mp) {
            return p.clone();
        }
        let mut total = LaurentPoly::zero();
        for p in mp.removable_nodes() {
            let d = ch.d_value(mp, p);
            total += &poly_of(&mp.without_node(p), ch, memo).shift(d);
        }
        memo.insert(mp.clone(), total.clone());
        total
    }
    let mut total = LaurentPoly::zero();
    for mp in &shapes {
        let p = poly_of(mp, ch, &mut memo);
        total += &(&p * &p);
    }
    Ok(total)
}

/// All residue sequences with content `beta` that label at least one tableau.
pub fn residue_sequences(ch: &Charges, beta: &RootVector, opts: GdimOptions) -> Result<Vec<Vec<usize>>> {
    let mut seqs = BTreeSet::new();
    for mp in enumerate_with_content(ch, beta, opts)? {
        for t in std_tableaux(&ChargedShape { mp, charges: ch.clone() }) {
            seqs.insert(t.residue_seq);
        }
    }
    Ok(seqs.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(c: &[usize], e: usize) -> Charges {
        Charges::new(c.to_vec(), e).unwrap()
    }

    fn r(c: &[i64]) -> RootVector {
        RootVector::new(c.to_vec()).unwrap()
    }

    fn mp(c: Vec<Vec<usize>>) -> Multipartition {
        Multipartition::new(c).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn d_examples() {
        let one = ChargedShape { mp: mp(vec![vec![1]]), charges: ch(&[0], 3) };
        assert_eq!(d_below(&one, Node::new(0, 0, 0)).unwrap(), 0);
        let two = ChargedShape { mp: mp(vec![vec![1], vec![]]), charges: ch(&[0, 0], 3) };
        assert_eq!(d_below(&two, Node::new(0, 0, 0)).unwrap(), 1);
        let column = ChargedShape { mp: mp(vec![vec![1, 1, 1]]), charges: ch(&[0], 4) };
        assert_eq!(d_below(&column, Node::new(0, 2, 0)).unwrap(), 0);
        assert!(d_below(&column, Node::new(0, 0, 0)).is_err());
    }

    #[test]
    fn content_enumeration() {
        let opts = GdimOptions::default();
        assert_eq!(enumerate_with_content(&ch(&[0], 3), &r(&[1, 0, 0]), opts).unwrap(), vec![mp(vec![vec![1]])]);
        assert_eq!(enumerate_with_content(&ch(&[0], 3), &r(&[1, 1, 0]), opts).unwrap(), vec![mp(vec![vec![2]])]);
        let both = enumerate_with_content(&ch(&[0], 2), &r(&[1, 1]), opts).unwrap();
        assert_eq!(both, vec![mp(vec![vec![1, 1]]), mp(vec![vec![2]])]);
    }

    #[test]
    fn tableau_counts() {
        let row = ChargedShape { mp: mp(vec![vec![4]]), charges: ch(&[0], 3) };
        assert_eq!(std_tableaux(&row).len(), 1);
        let hook = ChargedShape { mp: mp(vec![vec![2, 1]]), charges: ch(&[0], 3) };
        assert_eq!(std_tableaux(&hook).len(), 2);
        assert_eq!(std_tableaux(&ChargedShape { mp: Multipartition::empty(2), charges: ch(&[0, 1], 3) }).len(), 1);
    }

    #[test]
    fn small_graded_dims() {
        let opts = GdimOptions::default();
        let c = ch(&[0, 0, 1], 2);
        let delta = r(&[1, 1]);
        assert_eq!(graded_dim(&c, &delta, &[0, 1], &[0, 1], opts).unwrap(), poly(&[(0, 1), (2, 2), (4, 2), (6, 1)]));
        assert_eq!(graded_dim(&c, &delta, &[1, 0], &[1, 0], opts).unwrap(), poly(&[(0, 1), (2, 1), (4, 1), (6, 1)]));
        assert_eq!(graded_dim(&c, &delta, &[0, 1], &[1, 0], opts).unwrap(), poly(&[(2, 1), (4, 1)]));
        assert_eq!(graded_dim_total(&c, &r(&[0, 0]), opts).unwrap(), LaurentPoly::one());
        assert!(graded_dim(&c, &delta, &[0, 0], &[0, 1], opts).is_err());
    }

    #[test]
    fn size_limit() {
        let opts = GdimOptions { max_size: 3 };
        assert!(matches!(
            graded_dim_total(&ch(&[0], 2), &r(&[2, 2]), opts),
            Err(Error::SizeLimit { size: 4, limit: 3 })
        ));
    }
}
