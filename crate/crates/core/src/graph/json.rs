use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// On-disk graph format: `{"n": 4, "edges": [[0,1],...], "labels": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let g = Graph::from_edges(j.n, j.edges.iter().map(|e| (e[0], e[1])))?;
        match j.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }
}

impl Graph {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        let j: GraphJson = serde_json::from_str(s)?;
        Graph::try_from(j)
    }

    pub fn read_json(path: impl AsRef<Path>) -> Result<Graph> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn write_json(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json_string() + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn write_is_canonical() {
        let g = Graph::from_edges(3, [(2, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.to_json_string(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
    }

    #[test]
    fn labels_round_trip() {
        let s = r#"{"n":2,"edges":[[1,0]],"labels":["a","b"]}"#;
        let g = Graph::from_json_str(s).unwrap();
        assert_eq!(g.labels().unwrap(), ["a", "b"]);
        assert_eq!(Graph::from_json_str(&g.to_json_string()).unwrap(), g);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Graph::from_json_str(r#"{"n":2,"edges":[[0,5]]}"#).is_err());
    }
}
