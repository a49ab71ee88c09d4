//! `zetaval table ...`

use std::io::Write;

use serde::Serialize;
use zetaval_core::bernoulli::bernoulli_number;
use zetaval_core::dirichlet::generalized_bernoulli_number;
use zetaval_core::CharacterLiteral;

use crate::golden::Golden;
use crate::{CliError, CliResult, GoldenSet, TableArgs, TableFormat, EXIT_FAILURE, EXIT_OK};

/// Largest row index a table may request.
pub const MAX_N: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Column {
    Bernoulli,
    Character(CharacterLiteral),
}

impl Column {
    pub fn label(&self) -> String {
        match self {
            Column::Bernoulli => "B".to_string(),
            Column::Character(c) => c.to_string(),
        }
    }
}

/// Splits `--chars` values on commas, keeping the entries of a
/// `table:k:v1,...` literal together.
pub fn parse_columns(raw: &[String]) -> CliResult<Vec<Column>> {
    let mut tokens: Vec<String> = Vec::new();
    for token in raw.iter().flat_map(|r| r.split(',')).map(str::trim) {
        let continues_table = tokens.last().is_some_and(|t| t.starts_with("table:"))
            && !token.contains(':')
            && token != "B"
            && token != "chi4";
        if continues_table {
            let last = tokens.last_mut().expect("checked non-empty");
            last.push(',');
            last.push_str(token);
        } else if !token.is_empty() {
            tokens.push(token.to_string());
        }
    }
    if tokens.is_empty() {
        return Err(CliError::Usage("--chars is empty".into()));
    }
    tokens
        .iter()
        .map(|t| match t.as_str() {
            "B" => Ok(Column::Bernoulli),
            other => {
                let literal: CharacterLiteral = other.parse()?;
                literal.build()?;
                Ok(Column::Character(literal))
            }
        })
        .collect()
}

/// Parses `lo..hi` (inclusive) or a single index.
pub fn parse_range(s: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::Usage(format!("bad range {s:?}: expected lo..hi within 0..{MAX_N}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi || hi > MAX_N {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn cell(column: &Column, n: usize) -> CliResult<String> {
    Ok(match column {
        Column::Bernoulli => bernoulli_number(n).to_string(),
        Column::Character(c) => generalized_bernoulli_number(&c.build()?, n).to_string(),
    })
}

#[derive(Serialize)]
struct JsonRow<'a> {
    n: usize,
    values: &'a [String],
}

#[derive(Serialize)]
struct JsonTable<'a> {
    columns: Vec<String>,
    rows: Vec<JsonRow<'a>>,
}

pub fn render(columns: &[Column], rows: &[(usize, Vec<String>)], format: TableFormat) -> String {
    let labels: Vec<String> = columns.iter().map(Column::label).collect();
    let mut s = String::new();
    match format {
        TableFormat::Markdown => {
            s += &format!("| n | {} |\n", labels.join(" | "));
            s += &format!("|---|{}\n", "---|".repeat(labels.len()));
            for (n, cells) in rows {
                s += &format!("| {n} | {} |\n", cells.join(" | "));
            }
        }
        TableFormat::Csv => {
            s += &format!("n,{}\n", labels.join(","));
            for (n, cells) in rows {
                s += &format!("{n},{}\n", cells.join(","));
            }
        }
        TableFormat::Json => {
            let table = JsonTable {
                columns: labels,
                rows: rows.iter().map(|(n, values)| JsonRow { n: *n, values }).collect(),
            };
            s += &serde_json::to_string_pretty(&table).expect("table serializes");
            s.push('\n');
        }
    }
    s
}

pub fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> CliResult<i32> {
    let columns = parse_columns(&args.chars)?;
    let (lo, hi) = parse_range(&args.n)?;
    let golden = args.golden.map(|GoldenSet::Appendix| Golden::appendix());
    if let Some(g) = &golden {
        if let Some(c) = columns.iter().find(|c| !g.has_column(&c.label())) {
            return Err(CliError::Usage(format!("no appendix data for column {}", c.label())));
        }
        if (lo..=hi).any(|n| columns.iter().any(|c| g.get(&c.label(), n).is_none())) {
            return Err(CliError::Usage(format!("appendix data does not cover n = {lo}..{hi}")));
        }
    }
    let rows = (lo..=hi)
        .map(|n| Ok((n, columns.iter().map(|c| cell(c, n)).collect::<CliResult<Vec<_>>>()?)))
        .collect::<CliResult<Vec<_>>>()?;
    write!(out, "{}", render(&columns, &rows, args.format))?;

    let Some(g) = golden else { return Ok(EXIT_OK) };
    let diff = golden_diff(&g, &columns, &rows);
    for line in &diff {
        writeln!(out, "{line}")?;
    }
    let total = rows.len() * columns.len();
    if diff.is_empty() {
        writeln!(out, "golden appendix: {total}/{total} cells match")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "golden appendix: {} of {total} cells differ", diff.len() / 2)?;
        Ok(EXIT_FAILURE)
    }
}

/// `-`/`+` line pairs for every cell that differs from `golden`.
pub fn golden_diff(golden: &Golden, columns: &[Column], rows: &[(usize, Vec<String>)]) -> Vec<String> {
    let mut diff = Vec::new();
    for (n, cells) in rows {
        for (column, got) in columns.iter().zip(cells) {
            let label = column.label();
            let expected = golden.get(&label, *n).unwrap_or("(missing)");
            if expected != got {
                diff.push(format!("- {label} n={n}: {expected}"));
                diff.push(format!("+ {label} n={n}: {got}"));
            }
        }
    }
    diff
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_parsing() {
        let cols = parse_columns(&["B,kronecker:3,table:4:1,0,-1,0,chi4".to_string()]).unwrap();
        assert_eq!(cols.len(), 4);
        assert_eq!(cols[2].label(), "table:4:1,0,-1,0");
        assert_eq!(cols[3], Column::Character(CharacterLiteral::Chi4));
        assert!(parse_columns(&["kronecker:4".to_string()]).is_err());
        assert!(parse_columns(&["nonsense".to_string()]).is_err());
    }

    #[test]
    fn golden_mismatch_is_reported() {
        let g = Golden::appendix();
        let cols = vec![Column::Character(CharacterLiteral::Chi4)];
        let good = vec![(3, vec!["3/2".to_string()])];
        assert!(golden_diff(&g, &cols, &good).is_empty());
        let bad = vec![(3, vec!["-3/2".to_string()])];
        assert_eq!(
            golden_diff(&g, &cols, &bad),
            vec!["- chi4 n=3: 3/2", "+ chi4 n=3: -3/2"]
        );
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..12").unwrap(), (0, 12));
        assert_eq!(parse_range("5").unwrap(), (5, 5));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("0..65").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
