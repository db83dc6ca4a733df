use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableMetadata {
    pub seed: u64,
    /// JSON echo of the configuration that produced the table.
    pub config: String,
    pub wall_time_s: f64,
}

/// Named real-valued columns plus run metadata.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub metadata: TableMetadata,
}

impl TrialTable {
    pub fn new(columns: &[&str], metadata: TableMetadata) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            metadata,
        }
    }

    pub fn push(&mut self, row: Vec<f64>) -> Result<()> {
        if row.len() != self.columns.len() {
            return Err(Error::Config(format!(
                "row has {} values, table has {} columns",
                row.len(),
                self.columns.len()
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    /// Rows whose `name` column equals `value`.
    pub fn rows_where(&self, name: &str, value: f64) -> Vec<&[f64]> {
        match self.column_index(name) {
            Some(idx) => self
                .rows
                .iter()
                .filter(|r| r[idx] == value)
                .map(Vec::as_slice)
                .collect(),
            None => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta() -> TableMetadata {
        TableMetadata {
            seed: 1,
            config: "{}".into(),
            wall_time_s: 0.0,
        }
    }

    #[test]
    fn arity_is_enforced() {
        let mut t = TrialTable::new(&["a", "b"], meta());
        assert!(t.push(vec![1.0, 2.0]).is_ok());
        assert!(t.push(vec![1.0]).is_err());
        assert_eq!(t.column("b"), Some(vec![2.0]));
        assert_eq!(t.rows_where("a", 1.0).len(), 1);
        assert!(t.column("c").is_none());
    }
}
