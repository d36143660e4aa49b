//! Brauer graphs with ribbon structure: quiver presentations, Cartan
//! matrices, derived-equivalence invariants and decomposition matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerGraph {
    mults: Vec<u32>,
    edges: Vec<(usize, usize)>,
    /// Cyclic order of half-edges around each vertex. Half-edge `2t` is the
    /// end of edge `t` at `edges[t].0`, `2t + 1` the end at `edges[t].1`.
    rotation: Vec<Vec<usize>>,
}

impl BrauerGraph {
    /// `rotation[v]` lists edge ids in cyclic order; `None` takes the order
    /// of appearance in `edges`, allowed only for vertices of degree at most 2.
    pub fn new(mults: Vec<u32>, edges: Vec<(usize, usize)>, rotation: Vec<Option<Vec<usize>>>) -> Result<Self> {
        let n = mults.len();
        if n == 0 || edges.is_empty() {
            return Err(Error::InvalidGraph("need at least one vertex and one edge".into()));
        }
        if mults.contains(&0) {
            return Err(Error::InvalidGraph("multiplicities must be at least 1".into()));
        }
        if rotation.len() != n {
            return Err(Error::InvalidGraph(format!("rotation given for {} of {n} vertices", rotation.len())));
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (t, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {t} uses a missing vertex")));
            }
            incident[u].push(2 * t);
            incident[v].push(2 * t + 1);
        }
        let mut rot = Vec::with_capacity(n);
        for (v, given) in rotation.into_iter().enumerate() {
            let darts = match given {
                None => {
                    if incident[v].len() > 2 {
                        return Err(Error::InvalidGraph(format!("vertex {v} has degree > 2 and needs a rotation")));
                    }
                    incident[v].clone()
                }
                Some(order) => {
                    // A loop lists its edge twice: first occurrence is the
                    // first end, second occurrence the other.
                    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
                    let mut darts = Vec::new();
                    for t in order {
                        let &(a, b) = edges
                            .get(t)
                            .ok_or_else(|| Error::InvalidGraph(format!("rotation at {v} names missing edge {t}")))?;
                        let count = seen.entry(t).or_insert(0);
                        let dart = match (a == v, b == v, *count) {
                            (true, _, 0) => 2 * t,
                            (false, true, 0) => 2 * t + 1,
                            (true, true, 1) => 2 * t + 1,
                            _ => return Err(Error::InvalidGraph(format!("rotation at {v} misuses edge {t}"))),
                        };
                        *count += 1;
                        darts.push(dart);
                    }
                    let mut sorted = darts.clone();
                    sorted.sort();
                    if sorted != incident[v] {
                        return Err(Error::InvalidGraph(format!("rotation at {v} is not a permutation of its edges")));
                    }
                    darts
                }
            };
            rot.push(darts);
        }
        let g = BrauerGraph { mults, edges, rotation: rot };
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(g)
    }

    /// A path `0 - 1 - ... - (n-1)` with the given multiplicities.
    pub fn line(mults: &[u32]) -> Result<Self> {
        if mults.len() < 2 {
            return Err(Error::InvalidGraph("a line needs at least two vertices".into()));
        }
        let edges = (0..mults.len() - 1).map(|i| (i, i + 1)).collect();
        Self::new(mults.to_vec(), edges, vec![None; mults.len()])
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn n_vertices(&self) -> usize {
        self.mults.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    fn dart_vertex(&self, h: usize) -> usize {
        let (a, b) = self.edges[h / 2];
        if h % 2 == 0 {
            a
        } else {
            b
        }
    }

    /// The half-edge following `h` in the cyclic order at its vertex.
    fn dart_succ(&self, h: usize) -> usize {
        let order = &self.rotation[self.dart_vertex(h)];
        let pos = order.iter().position(|&x| x == h).expect("dart listed at its vertex");
        order[(pos + 1) % order.len()]
    }

    fn is_connected(&self) -> bool {
        let n = self.n_vertices();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Perimeters of the faces, found by the walk "cross the edge, then
    /// step to the successor at the far vertex".
    pub fn faces(&self) -> Vec<usize> {
        let total = 2 * self.n_edges();
        let mut seen = vec![false; total];
        let mut perims = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                len += 1;
                h = self.dart_succ(h ^ 1);
            }
            perims.push(len);
        }
        perims
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n_vertices();
        let mut color: Vec<Option<bool>> = vec![None; n];
        color[0] = Some(false);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            let cv = color[v].expect("colored before push");
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x != v {
                        continue;
                    }
                    match color[y] {
                        None => {
                            color[y] = Some(!cv);
                            stack.push(y);
                        }
                        Some(cy) if cy == cv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuiverArrow {
    pub vertex: usize,
    /// Position `i` in the cyclic order at `vertex`; the arrow runs from
    /// edge `E_{v,i}` to edge `E_{v,i+1}`.
    pub position: usize,
    pub source: usize,
    pub target: usize,
}

impl fmt::Display for QuiverArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}_{}", self.vertex, self.position)
    }
}

/// A generator of the ideal of relations; paths are lists of arrow indices
/// read left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    /// `(a_{v,j} ... a_{v,j-1})^{m(v)} a_{v,j}`.
    CycleOvershoot { vertex: usize, path: Vec<usize> },
    /// `C_v^{m(v)} - C_u^{m(u)}` at an edge shared by `u` and `v`.
    CycleDifference { edge: usize, left: Vec<usize>, right: Vec<usize> },
    /// `a_{u,i} a_{v,j}` with the two arrows turning at different vertices.
    MixedProduct { path: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub n_vertices: usize,
    pub arrows: Vec<QuiverArrow>,
    pub relations: Vec<Relation>,
}

impl QuiverPresentation {
    pub fn path_string(&self, path: &[usize]) -> String {
        path.iter().map(|&a| self.arrows[a].to_string()).collect::<Vec<_>>().join("*")
    }

    pub fn relation_string(&self, r: &Relation) -> String {
        match r {
            Relation::CycleOvershoot { path, .. } | Relation::MixedProduct { path } => self.path_string(path),
            Relation::CycleDifference { left, right, .. } => {
                format!("{} - {}", self.path_string(left), self.path_string(right))
            }
        }
    }
}

pub fn quiver_presentation(g: &BrauerGraph) -> QuiverPresentation {
    let mut arrows = Vec::new();
    // arrow_at[v][i] is the index of a_{v,i}.
    let mut arrow_at: Vec<Vec<usize>> = Vec::new();
    for (v, order) in g.rotation.iter().enumerate() {
        let c = order.len();
        let mut ids = Vec::with_capacity(c);
        for i in 0..c {
            ids.push(arrows.len());
            arrows.push(QuiverArrow { vertex: v, position: i, source: order[i] / 2, target: order[(i + 1) % c] / 2 });
        }
        arrow_at.push(ids);
    }
    let cycle = |v: usize, j: usize, reps: u32| -> Vec<usize> {
        let c = arrow_at[v].len();
        (0..c * reps as usize).map(|t| arrow_at[v][(j + t) % c]).collect()
    };
    let mut relations = Vec::new();
    for v in 0..g.n_vertices() {
        for j in 0..arrow_at[v].len() {
            let mut path = cycle(v, j, g.mults[v]);
            path.push(arrow_at[v][j]);
            relations.push(Relation::CycleOvershoot { vertex: v, path });
        }
    }
    for (t, &(u, v)) in g.edges.iter().enumerate() {
        if u == v {
            continue;
        }
        let pos = |w: usize, h: usize| g.rotation[w].iter().position(|&x| x == h).expect("dart at vertex");
        let left = cycle(v, pos(v, 2 * t + 1), g.mults[v]);
        let right = cycle(u, pos(u, 2 * t), g.mults[u]);
        relations.push(Relation::CycleDifference { edge: t, left, right });
    }
    for (a, first) in arrows.iter().enumerate() {
        for (b, second) in arrows.iter().enumerate() {
            if first.vertex == second.vertex || first.target != second.source {
                continue;
            }
            // The end of `first` and the start of `second` must be the two
            // ends of the same edge, one at each vertex.
            let end_dart = g.rotation[first.vertex][(first.position + 1) % arrow_at[first.vertex].len()];
            let start_dart = g.rotation[second.vertex][second.position];
            if end_dart ^ 1 == start_dart {
                relations.push(Relation::MixedProduct { path: vec![a, b] });
            }
        }
    }
    QuiverPresentation { n_vertices: g.n_edges(), arrows, relations }
}

pub fn cartan_matrix(g: &BrauerGraph) -> Result<Vec<Vec<i64>>> {
    let mut pairs = BTreeSet::new();
    for &(u, v) in &g.edges {
        if u == v {
            return Err(Error::UnsupportedGraph("loops".into()));
        }
        if !pairs.insert((u.min(v), u.max(v))) {
            return Err(Error::UnsupportedGraph("multiple edges".into()));
        }
    }
    let n = g.n_edges();
    let mut c = vec![vec![0i64; n]; n];
    for (s, &(a, b)) in g.edges.iter().enumerate() {
        for (t, &(x, y)) in g.edges.iter().enumerate() {
            c[s][t] = [a, b]
                .iter()
                .filter(|&&v| v == x || v == y)
                .map(|&v| g.mults[v] as i64)
                .sum();
        }
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedInvariants {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub n_faces: usize,
    pub mult_multiset: Vec<u32>,
    pub perimeter_multiset: Vec<usize>,
    pub bipartite: bool,
}

impl DerivedInvariants {
    /// Genus of the ribbon surface from `V - E + F = 2 - 2g`.
    pub fn genus(&self) -> i64 {
        (2 - (self.n_vertices as i64 - self.n_edges as i64 + self.n_faces as i64)) / 2
    }
}

pub fn derived_invariants(g: &BrauerGraph) -> DerivedInvariants {
    let mut mult_multiset = g.mults.clone();
    mult_multiset.sort();
    let mut perimeter_multiset = g.faces();
    perimeter_multiset.sort();
    DerivedInvariants {
        n_vertices: g.n_vertices(),
        n_edges: g.n_edges(),
        n_faces: perimeter_multiset.len(),
        mult_multiset,
        perimeter_multiset,
        bipartite: g.is_bipartite(),
    }
}

pub fn derived_equivalent(g1: &BrauerGraph, g2: &BrauerGraph) -> Result<bool> {
    if g1.n_edges() < 2 || g2.n_edges() < 2 {
        return Err(Error::LocalAlgebraUnsupported);
    }
    Ok(derived_invariants(g1) == derived_invariants(g2))
}

/// The line with `s + 2` vertices, all of multiplicity `m` except vertex `a`
/// (counted from 1), which has multiplicity 1.
pub fn gamma_family(s: usize, a: usize, m: u32) -> Result<BrauerGraph> {
    if a < 1 || a > s + 2 || m < 1 {
        return Err(Error::ParameterRange(format!("need 1 <= a <= s+2 and m >= 1, got s={s} a={a} m={m}")));
    }
    let mut mults = vec![m; s + 2];
    mults[a - 1] = 1;
    BrauerGraph::line(&mults)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompOptions {
    /// Keep only matrices with a unitriangular pattern: some ordering of the
    /// columns admits distinct rows `r_j` with `D[r_j][j] = 1` and zeros in
    /// every later column.
    pub unitriangular: bool,
    /// Stop after this many canonical solutions.
    pub max_solutions: usize,
    pub node_limit: u64,
}

impl Default for DecompOptions {
    fn default() -> Self {
        DecompOptions { unitriangular: true, max_solutions: usize::MAX, node_limit: 50_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompResult {
    /// Canonical forms, rows sorted lexicographically descending.
    pub solutions: Vec<Vec<Vec<i64>>>,
    pub entry_bound: i64,
    /// False when the search stopped at `max_solutions`.
    pub exhaustive: bool,
}

impl DecompResult {
    pub fn unique(&self) -> bool {
        self.solutions.len() == 1 && self.exhaustive
    }
}

fn isqrt(n: i64) -> i64 {
    let mut r = 0;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn is_unitriangular(d: &[Vec<i64>], cols: usize) -> bool {
    let mut remaining: Vec<usize> = (0..cols).collect();
    let mut used = vec![false; d.len()];
    while !remaining.is_empty() {
        let pick = remaining.iter().enumerate().find_map(|(slot, &j)| {
            d.iter().enumerate().find_map(|(r, row)| {
                let unit = !used[r] && row[j] == 1 && remaining.iter().all(|&c| c == j || row[c] == 0);
                unit.then_some((slot, r))
            })
        });
        match pick {
            Some((slot, r)) => {
                used[r] = true;
                remaining.remove(slot);
            }
            None => return false,
        }
    }
    true
}

/// All nonnegative integer matrices `D` with `D^t D = c`, up to row order.
pub fn decomp_search(c: &[Vec<i64>], opts: DecompOptions) -> Result<DecompResult> {
    let n = c.len();
    if n == 0 || c.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidMatrix("matrix must be square and nonempty".into()));
    }
    for i in 0..n {
        if c[i][i] < 0 {
            return Err(Error::InvalidMatrix("negative diagonal entry".into()));
        }
        for j in 0..n {
            if c[i][j] != c[j][i] {
                return Err(Error::InvalidMatrix("matrix is not symmetric".into()));
            }
        }
    }
    let bound = isqrt((0..n).map(|i| c[i][i]).min().expect("n >= 1"));
    let mut candidates: Vec<Vec<i64>> = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        if cur.iter().any(|&x| x != 0) {
            candidates.push(cur.clone());
        }
        let Some(pos) = (0..n).rev().find(|&p| cur[p] < bound) else { break };
        cur[pos] += 1;
        for x in cur.iter_mut().skip(pos + 1) {
            *x = 0;
        }
    }
    candidates.sort_by(|a, b| b.cmp(a));
    // last_nonzero[j]: last candidate index with a nonzero entry in column j.
    let last_nonzero: Vec<Option<usize>> =
        (0..n).map(|j| candidates.iter().rposition(|row| row[j] != 0)).collect();

    struct Search<'a> {
        candidates: &'a [Vec<i64>],
        last_nonzero: &'a [Option<usize>],
        opts: DecompOptions,
        cols: usize,
        nodes: u64,
        chosen: Vec<usize>,
        found: Vec<Vec<Vec<i64>>>,
        stopped: bool,
    }

    impl Search<'_> {
        fn run(&mut self, rem: &mut Vec<Vec<i64>>, start: usize) -> Result<()> {
            if self.stopped {
                return Ok(());
            }
            self.nodes += 1;
            if self.nodes > self.opts.node_limit {
                return Err(Error::SearchSpaceExceeded { limit: self.opts.node_limit });
            }
            let n = self.cols;
            if (0..n).all(|i| rem[i][i] == 0) {
                if rem.iter().flatten().all(|&x| x == 0) && self.chosen.len() >= n {
                    let d: Vec<Vec<i64>> = self.chosen.iter().map(|&k| self.candidates[k].clone()).collect();
                    if !self.opts.unitriangular || is_unitriangular(&d, n) {
                        self.found.push(d);
                        if self.found.len() >= self.opts.max_solutions {
                            self.stopped = true;
                        }
                    }
                }
                return Ok(());
            }
            for j in 0..n {
                if rem[j][j] > 0 && self.last_nonzero[j].is_none_or(|last| last < start) {
                    return Ok(());
                }
            }
            for k in start..self.candidates.len() {
                let row = &self.candidates[k];
                let fits = (0..n).all(|i| row[i] == 0 || (0..n).all(|j| row[i] * row[j] <= rem[i][j]));
                if !fits {
                    continue;
                }
                for i in 0..n {
                    for j in 0..n {
                        rem[i][j] -= row[i] * row[j];
                    }
                }
                self.chosen.push(k);
                let res = self.run(rem, k);
                self.chosen.pop();
                for i in 0..n {
                    for j in 0..n {
                        rem[i][j] += row[i] * row[j];
                    }
                }
                res?;
                if self.stopped {
                    break;
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        candidates: &candidates,
        last_nonzero: &last_nonzero,
        opts,
        cols: n,
        nodes: 0,
        chosen: Vec::new(),
        found: Vec::new(),
        stopped: false,
    };
    let mut rem = c.to_vec();
    search.run(&mut rem, 0)?;
    let exhaustive = !search.stopped;
    Ok(DecompResult { solutions: search.found, entry_bound: bound, exhaustive })
}
