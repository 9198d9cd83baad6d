//! Relation words: whitespace-separated `tau<i>`, `gamma`, `delta`, `r`,
//! `aut:<cycles>` (node ids) and `tails:<cycles>` (tail indices), each with
//! an optional `^<int>`. Indices are 1-based; `#` starts a comment.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordToken {
    Tau(usize, i64),
    Gamma(i64),
    Delta(i64),
    R(i64),
    Aut(Vec<Vec<usize>>, i64),
    Tails(Vec<Vec<usize>>, i64),
}

fn parse_cycles(s: &str, line: usize) -> Result<Vec<Vec<usize>>> {
    let err = |msg: &str| Error::Parse { line, msg: msg.to_string() };
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| err("expected `(` in cycle notation"))?;
        let close = body.find(')').ok_or_else(|| err("unclosed cycle"))?;
        let cycle = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(x) if x >= 1 => Ok(x - 1),
                _ => Err(err(&format!("bad cycle entry `{t}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        cycles.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Parses one relation line.
pub fn parse_word(text: &str, line: usize) -> Result<Vec<WordToken>> {
    let err = |msg: String| Error::Parse { line, msg };
    let text = text.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let (head, exp) = match tok.rsplit_once('^') {
            Some((h, e)) => (h, e.parse::<i64>().map_err(|_| err(format!("bad exponent in `{tok}`")))?),
            None => (tok, 1),
        };
        let t = if head == "gamma" {
            WordToken::Gamma(exp)
        } else if head == "delta" {
            WordToken::Delta(exp)
        } else if head == "r" {
            WordToken::R(exp)
        } else if let Some(i) = head.strip_prefix("tau") {
            match i.parse::<usize>() {
                Ok(i) if i >= 1 => WordToken::Tau(i - 1, exp),
                _ => return Err(err(format!("bad twist index in `{tok}`"))),
            }
        } else if let Some(c) = head.strip_prefix("aut:") {
            WordToken::Aut(parse_cycles(c, line)?, exp)
        } else if let Some(c) = head.strip_prefix("tails:") {
            WordToken::Tails(parse_cycles(c, line)?, exp)
        } else {
            return Err(err(format!("unknown token `{tok}`")));
        };
        out.push(t);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        let w = parse_word("tau1 delta^-1 r^2 aut:(1,2)(3,4) tails:(2,3) gamma # c", 1).unwrap();
        assert_eq!(
            w,
            vec![
                WordToken::Tau(0, 1),
                WordToken::Delta(-1),
                WordToken::R(2),
                WordToken::Aut(vec![vec![0, 1], vec![2, 3]], 1),
                WordToken::Tails(vec![vec![1, 2]], 1),
                WordToken::Gamma(1),
            ]
        );
        assert!(parse_word("tau0", 3).is_err());
        assert!(parse_word("foo", 3).is_err());
    }
}
