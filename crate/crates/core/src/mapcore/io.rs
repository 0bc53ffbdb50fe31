//! JSON form of a map, with 1-based vertex and dart labels:
//!
//! ```json
//! {"n": 4, "edges": [[1,2],…], "R_cycles": [[1,3,2],…], "E_pairs": [[1,7],…]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mapcore::{CombinatorialMap, Graph};
use crate::permcore::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(rename = "R_cycles")]
    pub r_cycles: Vec<Vec<usize>>,
    #[serde(rename = "E_pairs")]
    pub e_pairs: Vec<[usize; 2]>,
}

fn one_based(x: usize, what: &str) -> Result<usize> {
    x.checked_sub(1)
        .ok_or_else(|| Error::Parse(format!("{what} labels are 1-based; got 0")))
}

impl MapJson {
    pub fn from_map(map: &CombinatorialMap) -> Self {
        let graph = map.graph();
        MapJson {
            n: graph.vertex_count(),
            edges: graph.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
            r_cycles: map
                .rotation()
                .cycles()
                .into_iter()
                .map(|c| c.into_iter().map(|d| d + 1).collect())
                .collect(),
            e_pairs: map
                .edge_scheme()
                .cycles()
                .into_iter()
                .map(|c| [c[0] + 1, c[1] + 1])
                .collect(),
        }
    }

    pub fn to_map(&self) -> Result<CombinatorialMap> {
        let edges = self
            .edges
            .iter()
            .map(|&[a, b]| Ok((one_based(a, "vertex")?, one_based(b, "vertex")?)))
            .collect::<Result<Vec<_>>>()?;
        let graph = Graph::new(self.n, &edges)?;
        let darts = graph.dart_count();
        let zero = |c: &[usize]| {
            c.iter()
                .map(|&d| one_based(d, "dart"))
                .collect::<Result<Vec<_>>>()
        };
        let r_cycles = self
            .r_cycles
            .iter()
            .map(|c| zero(c))
            .collect::<Result<Vec<_>>>()?;
        let e_cycles = self
            .e_pairs
            .iter()
            .map(|c| zero(c))
            .collect::<Result<Vec<_>>>()?;
        let rotation = Permutation::from_cycles(darts, &r_cycles)?;
        let edge_scheme = Permutation::from_cycles(darts, &e_cycles)?;
        CombinatorialMap::new(graph, rotation, edge_scheme)
    }
}

impl CombinatorialMap {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MapJson::from_map(self)).expect("map json is serialisable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: MapJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("map json: {e}")))?;
        raw.to_map()
    }
}
