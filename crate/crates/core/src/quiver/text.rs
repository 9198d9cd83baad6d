//! Line-oriented text format:
//!
//! ```text
//! quiver 3
//! node 0 weight 1
//! node 1 weight 2 frozen
//! arrow 0 1 1
//! ```

use super::WeightedQuiver;
use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt::Write;

pub fn write_quiver(q: &WeightedQuiver, frame_kind: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(kind) = frame_kind {
        writeln!(s, "# frame {kind}").unwrap();
    }
    writeln!(s, "quiver {}", q.node_count()).unwrap();
    for i in 0..q.node_count() {
        let frozen = if q.is_frozen(i) { " frozen" } else { "" };
        writeln!(s, "node {i} weight {}{frozen}", q.weight(i)).unwrap();
    }
    for i in 0..q.node_count() {
        for j in 0..q.node_count() {
            if q.arrows(i, j) > 0 {
                writeln!(s, "arrow {i} {j} {}", q.arrows(i, j)).unwrap();
            }
        }
    }
    s
}

/// Parses the text format. Returns the quiver and the `# frame` kind if present.
pub fn parse_quiver(text: &str) -> Result<(WeightedQuiver, Option<String>)> {
    let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
    let mut frame = None;
    let mut count: Option<usize> = None;
    let mut nodes: Vec<Option<(u32, bool)>> = Vec::new();
    let mut arrows: Vec<(usize, usize, i64, usize)> = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let mut it = rest.split_whitespace();
            if it.next() == Some("frame") {
                frame = it.next().map(str::to_string);
            }
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| err(line_no, &format!("bad integer `{t}`")));
        match toks[0] {
            "quiver" => {
                if count.is_some() || toks.len() != 2 {
                    return Err(err(line_no, "malformed or repeated header"));
                }
                let n = num(toks[1])?;
                count = Some(n);
                nodes = vec![None; n];
            }
            "node" => {
                let n = count.ok_or_else(|| err(line_no, "node before header"))?;
                if !(toks.len() == 4 || (toks.len() == 5 && toks[4] == "frozen")) || toks[2] != "weight" {
                    return Err(err(line_no, "expected `node <id> weight <w> [frozen]`"));
                }
                let id = num(toks[1])?;
                let w = num(toks[3])?;
                if id >= n || w == 0 || nodes[id].is_some() {
                    return Err(err(line_no, "node id out of range, zero weight, or duplicate"));
                }
                nodes[id] = Some((w as u32, toks.len() == 5));
            }
            "arrow" => {
                if count.is_none() || toks.len() != 4 {
                    return Err(err(line_no, "expected `arrow <i> <j> <multiplicity>`"));
                }
                let (i, j, m) = (num(toks[1])?, num(toks[2])?, num(toks[3])?);
                if i == j {
                    return Err(err(line_no, "self loop"));
                }
                if m == 0 || !seen.insert((i, j)) {
                    return Err(err(line_no, "zero multiplicity or duplicate arrow line"));
                }
                arrows.push((i, j, m as i64, line_no));
            }
            other => return Err(err(line_no, &format!("unknown record `{other}`"))),
        }
    }
    let n = count.ok_or_else(|| err(0, "missing header"))?;
    let mut weights = Vec::with_capacity(n);
    let mut frozen = Vec::with_capacity(n);
    for (i, node) in nodes.iter().enumerate() {
        let (w, f) = node.ok_or_else(|| err(0, &format!("node {i} not declared")))?;
        weights.push(w);
        frozen.push(f);
    }
    let mut q = WeightedQuiver::with_frozen(weights, frozen)?;
    for (i, j, m, line_no) in arrows {
        if i >= n || j >= n {
            return Err(err(line_no, "arrow endpoint out of range"));
        }
        q.add_arrows(i, j, m)?;
    }
    Ok((q, frame))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut q = WeightedQuiver::with_frozen(vec![1, 2, 1], vec![false, false, true]).unwrap();
        q.add_arrows(0, 1, 2).unwrap();
        q.add_arrows(2, 1, 1).unwrap();
        let s = write_quiver(&q, Some("custom"));
        let (r, frame) = parse_quiver(&s).unwrap();
        assert_eq!(q, r);
        assert_eq!(frame.as_deref(), Some("custom"));
    }

    #[test]
    fn rejects_self_loop_and_duplicates() {
        assert!(parse_quiver("quiver 1\nnode 0 weight 1\narrow 0 0 1\n").is_err());
        let dup = "quiver 2\nnode 0 weight 1\nnode 1 weight 1\narrow 0 1 1\narrow 0 1 1\n";
        assert!(parse_quiver(dup).is_err());
    }
}
