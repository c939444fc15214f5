//! DIMACS `.col` reading and writing, with an optional JSON sidecar carrying
//! vertex labels (`<file>.labels.json`).
//!
//! Format: `c` comment lines, one `p edge <n> <m>` line, then `e <u> <v>`
//! lines with 1-based endpoints. The writer emits each edge once with
//! `u < v`.

use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("label sidecar: {0}")]
    Sidecar(#[from] serde_json::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> DimacsError {
    DimacsError::Parse {
        line,
        message: message.into(),
    }
}

/// Reads a graph in DIMACS `.col` format.
pub fn read_col(reader: impl BufRead) -> Result<Graph, DimacsError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let mut tokens = line.split_ascii_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                let kind = tokens.next().ok_or_else(|| parse_err(lineno, "missing format token"))?;
                if kind != "edge" {
                    return Err(parse_err(lineno, format!("expected 'p edge', got 'p {kind}'")));
                }
                let nv: usize = tokens
                    .next()
                    .ok_or_else(|| parse_err(lineno, "missing vertex count"))?
                    .parse()
                    .map_err(|e| parse_err(lineno, format!("bad vertex count: {e}")))?;
                let _m: usize = tokens
                    .next()
                    .ok_or_else(|| parse_err(lineno, "missing edge count"))?
                    .parse()
                    .map_err(|e| parse_err(lineno, format!("bad edge count: {e}")))?;
                n = Some(nv);
            }
            Some("e") => {
                let n = n.ok_or_else(|| parse_err(lineno, "edge before problem line"))?;
                let u: usize = tokens
                    .next()
                    .ok_or_else(|| parse_err(lineno, "missing endpoint"))?
                    .parse()
                    .map_err(|e| parse_err(lineno, format!("bad endpoint: {e}")))?;
                let v: usize = tokens
                    .next()
                    .ok_or_else(|| parse_err(lineno, "missing endpoint"))?
                    .parse()
                    .map_err(|e| parse_err(lineno, format!("bad endpoint: {e}")))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(lineno, format!("endpoint out of range 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(parse_err(lineno, format!("unknown line type '{other}'")));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "no problem line"))?;
    Ok(Graph::from_edges(n, &edges)?)
}

/// Writes a graph in DIMACS `.col` format, each edge once with `u < v`.
pub fn write_col(g: &Graph, mut writer: impl Write) -> std::io::Result<()> {
    writeln!(writer, "p edge {} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(writer, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
struct LabelSidecar {
    labels: Vec<String>,
}

fn sidecar_path(path: &Path) -> std::path::PathBuf {
    let mut os = path.as_os_str().to_owned();
    os.push(".labels.json");
    os.into()
}

/// Reads a `.col` file; if `<file>.labels.json` exists alongside it, the
/// labels are attached to the graph.
pub fn read_col_path(path: impl AsRef<Path>) -> Result<Graph, DimacsError> {
    let path = path.as_ref();
    let file = std::fs::File::open(path)?;
    let mut g = read_col(std::io::BufReader::new(file))?;
    let sidecar = sidecar_path(path);
    if sidecar.exists() {
        let text = std::fs::read_to_string(sidecar)?;
        let parsed: LabelSidecar = serde_json::from_str(&text)?;
        if parsed.labels.len() != g.n() {
            return Err(parse_err(0, "label sidecar length does not match vertex count"));
        }
        g = g.with_labels(parsed.labels);
    }
    Ok(g)
}

/// Writes a `.col` file; labels, when present, go to `<file>.labels.json`.
pub fn write_col_path(g: &Graph, path: impl AsRef<Path>) -> Result<(), DimacsError> {
    let path = path.as_ref();
    let mut file = std::fs::File::create(path)?;
    write_col(g, &mut file)?;
    if let Some(labels) = g.labels() {
        let sidecar = LabelSidecar {
            labels: labels.to_vec(),
        };
        std::fs::write(sidecar_path(path), serde_json::to_string_pretty(&sidecar)?)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{crown, cycle};
    use crate::products::{product, ProductSpec};

    #[test]
    fn round_trip() {
        let g = crown(4).unwrap();
        let mut buf = Vec::new();
        write_col(&g, &mut buf).unwrap();
        let back = read_col(buf.as_slice()).unwrap();
        assert_eq!(back.adjacency(), g.adjacency());
    }

    #[test]
    fn reader_accepts_comments_and_blank_lines() {
        let text = "c a triangle\n\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
        let g = read_col(text.as_bytes()).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn reader_rejects_garbage() {
        assert!(read_col("e 1 2\n".as_bytes()).is_err());
        assert!(read_col("p edge 2 1\ne 1 3\n".as_bytes()).is_err());
        assert!(read_col("p edge 2 1\ne 0 1\n".as_bytes()).is_err());
        assert!(read_col("p clq 2 1\n".as_bytes()).is_err());
        assert!(read_col("q edge 2 1\n".as_bytes()).is_err());
    }

    #[test]
    fn label_sidecar_round_trip() {
        let p = product(&cycle(3).unwrap(), &cycle(3).unwrap(), &ProductSpec::direct());
        let dir = std::env::temp_dir().join(format!("bfall-dimacs-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("p.col");
        write_col_path(&p, &path).unwrap();
        let back = read_col_path(&path).unwrap();
        assert_eq!(back.adjacency(), p.adjacency());
        assert_eq!(back.label(4), p.label(4));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
