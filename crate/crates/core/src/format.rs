//! Plain-text formats for arrays, block designs and Latin squares.
//!
//! Array: a header line `r c v`, then r lines of c whitespace-separated
//! letter tokens. Design: a header `v b`, then b lines of point ids.
//! Latin square: a header `n`, then n rows of n symbols (`inf` is accepted
//! for the top symbol). Lines starting with `#` are comments everywhere.

use crate::designs::BlockDesign;
use crate::latin::LatinSquare;
use crate::{Error, LetterArray, Result};
use std::collections::HashMap;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'))
}

fn parse_header<const N: usize>(line: usize, text: &str) -> Result<[usize; N]> {
    let nums: Vec<usize> = text
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line, format!("bad header token `{t}`")))
        })
        .collect::<Result<_>>()?;
    nums.try_into()
        .map_err(|_| parse_err(line, format!("header must have {N} numbers")))
}

/// Parse an array.
///
/// When every token is an integer below v the tokens are taken as letter ids
/// directly. Otherwise tokens are numbered in order of first appearance
/// (row-major) and kept as letter names.
pub fn parse_array(text: &str) -> Result<LetterArray> {
    let mut lines = content_lines(text).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let [r, c, v] = parse_header::<3>(hline, header)?;
    let mut tokens = Vec::with_capacity(r * c);
    for _ in 0..r {
        let (n, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline, format!("expected {r} rows")))?;
        let row: Vec<&str> = line.split_whitespace().collect();
        if row.len() != c {
            return Err(parse_err(
                n,
                format!("expected {c} tokens, found {}", row.len()),
            ));
        }
        tokens.extend(row);
    }
    if let Some((n, _)) = lines.next() {
        return Err(parse_err(n, "trailing content after the last row"));
    }

    let numeric: Option<Vec<usize>> = tokens
        .iter()
        .map(|t| {
            t.parse::<usize>()
                .ok()
                .filter(|&x| x < v && t == &x.to_string())
        })
        .collect();
    if let Some(ids) = numeric {
        return LetterArray::new(r, c, v, ids).map_err(|e| parse_err(hline, e.to_string()));
    }
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut names = Vec::new();
    let grid = tokens
        .iter()
        .map(|t| {
            *ids.entry(t).or_insert_with(|| {
                names.push(t.to_string());
                names.len() - 1
            })
        })
        .collect();
    if names.len() != v {
        return Err(parse_err(
            hline,
            format!(
                "header says v = {v} but {} distinct letters occur",
                names.len()
            ),
        ));
    }
    LetterArray::new(r, c, v, grid)
        .and_then(|a| a.with_names(names))
        .map_err(|e| parse_err(hline, e.to_string()))
}

pub fn write_array(array: &LetterArray) -> String {
    let mut out = format!(
        "{} {} {}\n",
        array.rows(),
        array.cols(),
        array.alphabet_size()
    );
    for i in 0..array.rows() {
        let row: Vec<String> = array.row(i).iter().map(|&x| array.letter_name(x)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_design(text: &str) -> Result<BlockDesign> {
    let mut lines = content_lines(text).skip_while(|(_, l)| l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let [v, b] = parse_header::<2>(hline, header)?;
    let mut blocks = Vec::with_capacity(b);
    for _ in 0..b {
        let (n, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline, format!("expected {b} blocks")))?;
        let block = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(n, format!("bad point id `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        blocks.push(block);
    }
    if let Some((n, _)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(parse_err(n, "trailing content after the last block"));
    }
    BlockDesign::new(v, blocks).map_err(|e| parse_err(hline, e.to_string()))
}

pub fn write_design(design: &BlockDesign) -> String {
    let mut out = format!("{} {}\n", design.points(), design.blocks().len());
    for block in design.blocks() {
        let line: Vec<String> = block.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parse a Latin square; `inf` stands for the largest symbol `n − 1`.
pub fn parse_latin(text: &str) -> Result<LatinSquare> {
    let mut lines = content_lines(text).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let [n] = parse_header::<1>(hline, header)?;
    let mut grid = Vec::with_capacity(n * n);
    for _ in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline, format!("expected {n} rows")))?;
        let row = line
            .split_whitespace()
            .map(|t| match t {
                "inf" | "∞" if n > 0 => Ok(n - 1),
                _ => t
                    .parse::<usize>()
                    .map_err(|_| parse_err(ln, format!("bad symbol `{t}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(parse_err(
                ln,
                format!("expected {n} symbols, found {}", row.len()),
            ));
        }
        grid.extend(row);
    }
    LatinSquare::new(n, grid).map_err(|e| parse_err(hline, e.to_string()))
}

pub fn write_latin(square: &LatinSquare) -> String {
    let mut out = format!("{}\n", square.order());
    for i in 0..square.order() {
        let row: Vec<String> = square.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn named_tokens_map_in_first_appearance_order() {
        let a = parse_array("# comment\n2 3 4\nB A C\nA D B\n").unwrap();
        assert_eq!(a.row(0), &[0, 1, 2]);
        assert_eq!(a.row(1), &[1, 3, 0]);
        assert_eq!(a.letter_names().unwrap(), &["B", "A", "C", "D"]);
        assert_eq!(write_array(&a), "2 3 4\nB A C\nA D B\n");
    }

    #[test]
    fn numeric_tokens_are_ids() {
        let a = parse_array("2 2 4\n3 2\n1 0\n").unwrap();
        assert_eq!(a.grid(), &[3, 2, 1, 0]);
        assert!(a.letter_names().is_none());
        // leading zeros are names, not ids
        let b = parse_array("1 2 2\n01 1\n").unwrap();
        assert!(b.letter_names().is_some());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_array(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_array("2 2 3\nA B\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_array("1 2 3\nA B\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_array("1 2 2\nA B C\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_array("1 2 2\nA B\nC D\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn design_round_trip() {
        let text = "4 3\n0 1\n1 2 3\n0 3\n";
        let d = parse_design(text).unwrap();
        assert_eq!(d.blocks().len(), 3);
        assert_eq!(write_design(&d), text);
        assert!(parse_design("3 1\n0 5\n").is_err());
    }

    #[test]
    fn latin_with_infinity() {
        let sq = parse_latin("3\n0 1 inf\n1 inf 0\ninf 0 1\n").unwrap();
        assert_eq!(sq.row(0), &[0, 1, 2]);
        assert_eq!(write_latin(&sq), "3\n0 1 2\n1 2 0\n2 0 1\n");
        assert!(parse_latin("2\n0 0\n1 1\n").is_err());
    }

    proptest! {
        #[test]
        fn array_text_round_trips(r in 1usize..6, c in 1usize..6, extra in 0usize..4, seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let v = (r * c).min(r.max(c) + extra).max(1);
            let mut grid: Vec<usize> = (0..r * c).map(|i| i % v).collect();
            grid.shuffle(&mut rng);
            let a = LetterArray::new(r, c, v, grid).unwrap();
            prop_assert_eq!(parse_array(&write_array(&a)).unwrap(), a.clone());
            let names: Vec<String> = (0..v).map(|x| format!("L{x}")).collect();
            let named = parse_array(&write_array(&a.clone().with_names(names).unwrap())).unwrap();
            prop_assert_eq!(parse_array(&write_array(&named)).unwrap(), named.clone());
            prop_assert_eq!(crate::arrays::check_conditions(&named).ok(), crate::arrays::check_conditions(&a).ok());
        }
    }
}
