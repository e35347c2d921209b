use std::fs::File;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{ExperimentConfig, Failure, IterationRecord, RunOutput};
use crate::allocators::Variant;
use crate::problems::CandidateSet;
use crate::Result;

/// Append-only CSV of iteration records, flushed after every row so that an
/// interrupted run leaves a valid file.
pub struct RecordWriter {
    inner: csv::Writer<File>,
}

impl RecordWriter {
    pub fn create(path: &Path) -> Result<Self> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        let mut inner = csv::WriterBuilder::new().has_headers(false).from_path(path)?;
        inner.write_record([
            "macrorep",
            "iteration",
            "cum_reps",
            "f1",
            "precision",
            "recall",
            "mce",
            "mci",
            "retained",
            "front_size",
            "wall_ms",
        ])?;
        inner.flush()?;
        Ok(RecordWriter { inner })
    }

    pub fn write(&mut self, rec: &IterationRecord) -> Result<()> {
        self.inner.serialize(rec)?;
        self.inner.flush()?;
        Ok(())
    }

    pub fn write_all(&mut self, recs: &[IterationRecord]) -> Result<()> {
        recs.iter().try_for_each(|r| self.write(r))
    }
}

pub fn read_records(path: &Path) -> Result<Vec<IterationRecord>> {
    let mut reader = csv::Reader::from_path(path)?;
    let mut out = Vec::new();
    for rec in reader.deserialize() {
        out.push(rec?);
    }
    Ok(out)
}

/// `records.csv` → `records.json`.
pub fn sidecar_path(records: &Path) -> PathBuf {
    records.with_extension("json")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateSummary {
    pub seed: u64,
    pub size: usize,
    pub n_pareto: usize,
    pub range: [f64; 2],
}

/// Run metadata stored next to the records.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sidecar {
    pub variant: Variant,
    pub config: ExperimentConfig,
    pub candidates: CandidateSummary,
    /// Simulator calls per macroreplication.
    pub calls: Vec<usize>,
    pub failures: Vec<Failure>,
}

impl Sidecar {
    pub fn new(cfg: &ExperimentConfig, set: &CandidateSet, out: &RunOutput) -> Self {
        Sidecar {
            variant: cfg.variant,
            config: cfg.clone(),
            candidates: CandidateSummary {
                seed: set.seed,
                size: set.len(),
                n_pareto: set.pareto_ids().len(),
                range: set.range,
            },
            calls: out.outcomes.iter().map(|o| o.calls).collect(),
            failures: out.failures(),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }
}
