use std::fmt::Write;

use affine_klr::brauer::{DecompResult, DerivedInvariants, QuiverPresentation, Relation};
use affine_klr::{LevelKDominant, MaxWeightEntry, TQuiver, WeightQuiver};
use serde::Serialize;

#[derive(Serialize)]
struct WeightJson {
    lambda: Vec<i64>,
    delta: i64,
}

#[derive(Serialize)]
struct VertexJson {
    coeffs: Vec<i64>,
    x: Vec<i64>,
    beta: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_weight: Option<WeightJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tags: Option<Vec<u8>>,
}

#[derive(Serialize)]
struct ArrowJson {
    src: usize,
    dst: usize,
    label: [usize; 2],
}

#[derive(Serialize)]
struct QuiverJson {
    ell: usize,
    k: i64,
    base: Vec<i64>,
    vertices: Vec<VertexJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    arrows: Option<Vec<ArrowJson>>,
}

fn vertex_json(v: &MaxWeightEntry) -> VertexJson {
    VertexJson { coeffs: v.weight.coeffs().to_vec(), x: v.x.clone(), beta: v.beta.coeffs.clone(), max_weight: None, tags: None }
}

fn header(base: &LevelKDominant, vertices: Vec<VertexJson>, arrows: Option<Vec<ArrowJson>>) -> QuiverJson {
    QuiverJson { ell: base.rank().ell(), k: base.k(), base: base.coeffs().to_vec(), vertices, arrows }
}

fn arrows_json(q: &WeightQuiver) -> Vec<ArrowJson> {
    q.arrows.iter().map(|a| ArrowJson { src: a.src, dst: a.dst, label: [a.label.0, a.label.1] }).collect()
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn maxweights_text(base: &LevelKDominant, entries: &[MaxWeightEntry]) -> String {
    let mut out = String::new();
    writeln!(out, "# base {base}, {} members", entries.len()).unwrap();
    writeln!(out, "member\tX\tbeta\tmax weight").unwrap();
    for v in entries {
        writeln!(out, "{}\t{}\t{}\t{}", v.weight, tuple(&v.x), v.beta, v.max_weight).unwrap();
    }
    out
}

pub fn maxweights_json(base: &LevelKDominant, entries: &[MaxWeightEntry]) -> String {
    let vertices = entries
        .iter()
        .map(|v| VertexJson {
            max_weight: Some(WeightJson { lambda: v.max_weight.lambda.clone(), delta: v.max_weight.delta }),
            ..vertex_json(v)
        })
        .collect();
    pretty(&header(base, vertices, None))
}

pub fn quiver_text(q: &WeightQuiver, tags: Option<&[std::collections::BTreeSet<u8>]>) -> String {
    let mut out = String::new();
    writeln!(out, "# base {}, {} vertices, {} arrows", q.base, q.vertices.len(), q.arrows.len()).unwrap();
    for (n, v) in q.vertices.iter().enumerate() {
        write!(out, "v{n}\t{}\tX={}", v.weight, tuple(&v.x)).unwrap();
        if let Some(t) = tags {
            let list: Vec<String> = t[n].iter().map(|s| s.to_string()).collect();
            write!(out, "\tT={{{}}}", list.join(",")).unwrap();
        }
        out.push('\n');
    }
    for a in &q.arrows {
        writeln!(out, "v{} -> v{}\t({},{})", a.src, a.dst, a.label.0, a.label.1).unwrap();
    }
    out
}

pub fn quiver_json(q: &WeightQuiver) -> String {
    pretty(&header(&q.base, q.vertices.iter().map(vertex_json).collect(), Some(arrows_json(q))))
}

pub fn tquiver_json(t: &TQuiver) -> String {
    let vertices = t
        .quiver
        .vertices
        .iter()
        .zip(&t.tags)
        .map(|(v, tags)| VertexJson { tags: Some(tags.iter().copied().collect()), ..vertex_json(v) })
        .collect();
    pretty(&header(&t.quiver.base, vertices, Some(arrows_json(&t.quiver))))
}

pub fn quiver_dot(q: &WeightQuiver, tags: Option<&[std::collections::BTreeSet<u8>]>) -> String {
    let mut out = String::from("digraph quiver {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    for (n, v) in q.vertices.iter().enumerate() {
        match tags.map(|t| &t[n]).filter(|t| !t.is_empty()) {
            Some(t) => {
                let list: Vec<String> = t.iter().map(|s| s.to_string()).collect();
                writeln!(out, "  v{n} [label=\"{}\", shape=box, xlabel=\"{}\"];", v.weight, list.join(",")).unwrap();
            }
            None => writeln!(out, "  v{n} [label=\"{}\"];", v.weight).unwrap(),
        }
    }
    for a in &q.arrows {
        writeln!(out, "  v{} -> v{} [label=\"({},{})\"];", a.src, a.dst, a.label.0, a.label.1).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub ell: usize,
    pub base: Vec<i64>,
    pub beta: Vec<i64>,
    #[serde(rename = "type")]
    pub rep_type: String,
    pub beta0: Vec<i64>,
    pub m: i64,
}

pub fn json<T: Serialize>(value: &T) -> String {
    pretty(value)
}

pub fn matrix_text(rows: &[Vec<i64>]) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out
}

#[derive(Serialize)]
struct ArrowOut {
    name: String,
    vertex: usize,
    source: usize,
    target: usize,
}

#[derive(Serialize)]
struct RelationOut {
    kind: &'static str,
    expr: String,
}

#[derive(Serialize)]
struct InvariantsOut {
    n_vertices: usize,
    n_edges: usize,
    n_faces: usize,
    genus: i64,
    multiplicities: Vec<u32>,
    perimeters: Vec<usize>,
    bipartite: bool,
}

#[derive(Serialize)]
struct BrauerOut {
    arrows: Vec<ArrowOut>,
    relations: Vec<RelationOut>,
    cartan: Option<Vec<Vec<i64>>>,
    invariants: InvariantsOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    derived_equivalent: Option<bool>,
}

pub struct BrauerReport<'a> {
    pub presentation: &'a QuiverPresentation,
    pub cartan: Result<Vec<Vec<i64>>, String>,
    pub invariants: &'a DerivedInvariants,
    pub derived_equivalent: Option<bool>,
}

fn relation_kind(r: &Relation) -> &'static str {
    match r {
        Relation::CycleOvershoot { .. } => "cycle-overshoot",
        Relation::CycleDifference { .. } => "cycle-difference",
        Relation::MixedProduct { .. } => "mixed-product",
    }
}

pub fn brauer_text(r: &BrauerReport) -> String {
    let p = r.presentation;
    let inv = r.invariants;
    let mut out = String::new();
    writeln!(out, "# quiver: {} vertices, {} arrows, {} relations", p.n_vertices, p.arrows.len(), p.relations.len()).unwrap();
    for a in &p.arrows {
        writeln!(out, "{a}: E{} -> E{}", a.source, a.target).unwrap();
    }
    writeln!(out, "# relations").unwrap();
    for rel in &p.relations {
        writeln!(out, "{}", p.relation_string(rel)).unwrap();
    }
    writeln!(out, "# cartan matrix").unwrap();
    match &r.cartan {
        Ok(c) => out.push_str(&matrix_text(c)),
        Err(msg) => writeln!(out, "unavailable: {msg}").unwrap(),
    }
    writeln!(out, "# invariants").unwrap();
    writeln!(out, "vertices={} edges={} faces={} genus={}", inv.n_vertices, inv.n_edges, inv.n_faces, inv.genus()).unwrap();
    writeln!(out, "multiplicities={:?} perimeters={:?} bipartite={}", inv.mult_multiset, inv.perimeter_multiset, inv.bipartite).unwrap();
    if let Some(eq) = r.derived_equivalent {
        writeln!(out, "derived equivalent: {eq}").unwrap();
    }
    out
}

pub fn brauer_json(r: &BrauerReport) -> String {
    let p = r.presentation;
    let inv = r.invariants;
    let out = BrauerOut {
        arrows: p
            .arrows
            .iter()
            .map(|a| ArrowOut { name: a.to_string(), vertex: a.vertex, source: a.source, target: a.target })
            .collect(),
        relations: p.relations.iter().map(|rel| RelationOut { kind: relation_kind(rel), expr: p.relation_string(rel) }).collect(),
        cartan: r.cartan.clone().ok(),
        invariants: InvariantsOut {
            n_vertices: inv.n_vertices,
            n_edges: inv.n_edges,
            n_faces: inv.n_faces,
            genus: inv.genus(),
            multiplicities: inv.mult_multiset.clone(),
            perimeters: inv.perimeter_multiset.clone(),
            bipartite: inv.bipartite,
        },
        derived_equivalent: r.derived_equivalent,
    };
    pretty(&out)
}

#[derive(Serialize)]
struct DecompOut<'a> {
    solutions: &'a [Vec<Vec<i64>>],
    entry_bound: i64,
    exhaustive: bool,
    unique: bool,
}

pub fn decomp_text(res: &DecompResult) -> String {
    let mut out = String::new();
    for (n, d) in res.solutions.iter().enumerate() {
        writeln!(out, "# solution {}", n + 1).unwrap();
        out.push_str(&matrix_text(d));
    }
    writeln!(out, "# {} solutions, entry bound {}, exhaustive={}, unique={}", res.solutions.len(), res.entry_bound, res.exhaustive, res.unique())
        .unwrap();
    out
}

pub fn decomp_json(res: &DecompResult) -> String {
    pretty(&DecompOut { solutions: &res.solutions, entry_bound: res.entry_bound, exhaustive: res.exhaustive, unique: res.unique() })
}
