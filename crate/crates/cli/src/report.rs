use std::fs;
use std::io;
use std::path::Path;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Echo of everything that determines a run's output.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub quiver: String,
    pub max_len: usize,
    pub lambda: Vec<String>,
    pub seed: u64,
    pub random_fast_path: bool,
}

#[derive(Serialize)]
pub struct Document<'a, T: Serialize> {
    pub config: &'a ConfigEcho,
    pub seed: u64,
    pub bound: usize,
    pub passed: bool,
    pub results: &'a T,
}

/// A flat table with a fixed header.
pub struct Table {
    pub name: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: impl Into<String>, header: &[&'static str]) -> Self {
        Table { name: name.into(), header: header.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn write(&self, path: &Path) -> io::Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.flush()
    }
}

pub fn emit<T: Serialize>(
    out: Option<&Path>,
    formats: &[Format],
    config: &ConfigEcho,
    passed: bool,
    results: &T,
    tables: &[Table],
) -> io::Result<()> {
    let doc = Document { config, seed: config.seed, bound: config.max_len, passed, results };
    let json = serde_json::to_string_pretty(&doc).map_err(io::Error::other)? + "\n";
    let Some(dir) = out else {
        print!("{json}");
        return Ok(());
    };
    fs::create_dir_all(dir)?;
    for f in formats {
        match f {
            Format::Json => fs::write(dir.join(format!("{}.json", config.command)), &json)?,
            Format::Csv => {
                for t in tables {
                    t.write(&dir.join(format!("{}.csv", t.name)))?;
                }
            }
        }
    }
    Ok(())
}
