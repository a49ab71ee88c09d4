//! Embedded reference tables of `B_n` and `B_{n,χ}` for quadratic characters.

use std::collections::HashMap;

const APPENDIX: &str = include_str!("appendix.txt");

/// Cells keyed by (column label, n), as transcribed strings.
pub struct Golden {
    cells: HashMap<(String, usize), String>,
    tables: Vec<Vec<String>>,
}

impl Golden {
    pub fn appendix() -> Golden {
        let mut cells = HashMap::new();
        let mut tables = Vec::new();
        let mut header: Vec<String> = Vec::new();
        for line in APPENDIX.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields[0] == "n" {
                header = fields[1..].iter().map(|s| s.to_string()).collect();
                tables.push(header.clone());
                continue;
            }
            let n: usize = fields[0].parse().expect("row index");
            for (col, value) in header.iter().zip(&fields[1..]) {
                cells.insert((col.clone(), n), value.to_string());
            }
        }
        Golden { cells, tables }
    }

    pub fn get(&self, column: &str, n: usize) -> Option<&str> {
        self.cells.get(&(column.to_string(), n)).map(String::as_str)
    }

    pub fn has_column(&self, column: &str) -> bool {
        self.tables.iter().any(|t| t.iter().any(|c| c == column))
    }

    /// Column labels of each transcribed table.
    pub fn tables(&self) -> &[Vec<String>] {
        &self.tables
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shape() {
        let g = Golden::appendix();
        assert_eq!(g.len(), 13 * 6 + 13 * 4);
        assert_eq!(g.tables().len(), 2);
        assert_eq!(g.get("kronecker:5", 12), Some("-27622104"));
        assert_eq!(g.get("kronecker:23", 11), Some("605747775717744/23"));
        assert_eq!(g.get("B", 6), Some("1/42"));
        assert!(!g.has_column("kronecker:29"));
    }
}
