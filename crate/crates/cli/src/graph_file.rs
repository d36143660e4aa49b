use std::collections::BTreeMap;
use std::path::Path;

use affine_klr::brauer::BrauerGraph;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
struct VertexSpec {
    id: usize,
    mult: u32,
}

#[derive(Debug, Deserialize)]
pub struct GraphFile {
    vertices: Vec<VertexSpec>,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    rotation: BTreeMap<String, Vec<usize>>,
}

/// Problems with the file itself, as opposed to the graph it describes.
#[derive(Debug)]
pub struct InputError(pub String);

pub fn read(path: &Path) -> Result<GraphFile, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("--graph {}: {e}", path.display())))?;
    parse(&text).map_err(|InputError(msg)| InputError(format!("--graph {}: {msg}", path.display())))
}

pub fn parse(text: &str) -> Result<GraphFile, InputError> {
    serde_json::from_str(text).map_err(|e| InputError(e.to_string()))
}

impl GraphFile {
    /// Relabels vertex ids to positions in `vertices` and builds the graph.
    pub fn build(&self) -> Result<affine_klr::Result<BrauerGraph>, InputError> {
        let mut pos = BTreeMap::new();
        for (n, v) in self.vertices.iter().enumerate() {
            if pos.insert(v.id, n).is_some() {
                return Err(InputError(format!("duplicate vertex id {}", v.id)));
            }
        }
        let lookup = |id: usize| pos.get(&id).copied().ok_or_else(|| InputError(format!("unknown vertex id {id}")));
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[a, b] in &self.edges {
            edges.push((lookup(a)?, lookup(b)?));
        }
        let mut rotation = vec![None; self.vertices.len()];
        for (key, order) in &self.rotation {
            let id: usize = key.parse().map_err(|_| InputError(format!("rotation key {key:?} is not a vertex id")))?;
            rotation[lookup(id)?] = Some(order.clone());
        }
        let mults = self.vertices.iter().map(|v| v.mult).collect();
        Ok(BrauerGraph::new(mults, edges, rotation))
    }
}
