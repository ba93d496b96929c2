//! Grid scans over `(b, c)`, evaluated in parallel and emitted in row-major
//! order (b outer, c inner) whatever the worker count.

use std::io::Write;

use cuboid_core::{BigRational, FormulaVariant, ParameterPoint};
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::analyze_point;
use crate::render::{scan_row, ScanRow};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    JsonLines,
    Csv,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::JsonLines => "json-lines",
            OutputFormat::Csv => "csv",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub b_range: String,
    pub c_range: String,
    pub bs: Vec<BigRational>,
    pub cs: Vec<BigRational>,
    pub format: OutputFormat,
    pub variant: FormulaVariant,
    pub workers: usize,
    pub search_limit: u64,
}

#[derive(Debug, Serialize)]
struct ConfigEcho<'a> {
    b_range: &'a str,
    c_range: &'a str,
    format: &'static str,
    search_limit: u64,
    rows: usize,
}

#[derive(Debug, Serialize)]
struct Header<'a> {
    kind: &'static str,
    version: &'static str,
    variant: &'static str,
    config: ConfigEcho<'a>,
}

#[derive(Debug, Serialize)]
struct Tagged<'a, T> {
    kind: &'static str,
    #[serde(flatten)]
    inner: &'a T,
}

#[derive(Debug, Default, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub singular: usize,
    pub conic1_rational: usize,
    pub conic2_rational: usize,
    pub conic_rational: usize,
    pub sextic_root_found: usize,
    pub lifted_points: usize,
}

impl Summary {
    fn add(&mut self, row: &ScanRow) {
        self.rows += 1;
        self.singular += usize::from(row.status == "singular");
        let c1 = row.conic1_rational == Some(true);
        let c2 = row.conic2_rational == Some(true);
        self.conic1_rational += usize::from(c1);
        self.conic2_rational += usize::from(c2);
        self.conic_rational += usize::from(c1 || c2);
        let any_root = !row.sextic1_roots.is_empty() || !row.sextic2_roots.is_empty();
        self.sextic_root_found += usize::from(any_root);
        self.lifted_points += row.lifted_alphas.len();
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(crate::json_err)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn run_scan(cfg: &ScanConfig, out: &mut dyn Write) -> Result<Summary, CliError> {
    let cells: Vec<ParameterPoint> = cfg
        .bs
        .iter()
        .flat_map(|b| cfg.cs.iter().map(move |c| ParameterPoint::new(b.clone(), c.clone())))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", cfg.workers)))?;

    let variant = cfg.variant.as_str();
    let mut sink = match cfg.format {
        OutputFormat::JsonLines => {
            json_line(
                out,
                &Header {
                    kind: "header",
                    version: env!("CARGO_PKG_VERSION"),
                    variant,
                    config: ConfigEcho {
                        b_range: &cfg.b_range,
                        c_range: &cfg.c_range,
                        format: cfg.format.as_str(),
                        search_limit: cfg.search_limit,
                        rows: cells.len(),
                    },
                },
            )?;
            Sink::Json(out)
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .quote_style(csv::QuoteStyle::NonNumeric)
                .from_writer(out);
            w.write_record(ScanRow::CSV_HEADER).map_err(csv_err)?;
            Sink::Csv(Box::new(w))
        }
    };

    let mut summary = Summary::default();
    let chunk = cfg.workers.max(1) * 16;
    for (block, points) in cells.chunks(chunk).enumerate() {
        let base = block * chunk;
        let rows: Vec<_> = pool.install(|| {
            points
                .par_iter()
                .enumerate()
                .map(|(k, p)| {
                    analyze_point(p, cfg.variant, cfg.search_limit).map(|a| scan_row(base + k, &a))
                })
                .collect()
        });
        for row in rows {
            let row = row.map_err(|e| CliError::Verification(e.0))?;
            summary.add(&row);
            match &mut sink {
                Sink::Json(out) => json_line(*out, &Tagged { kind: "row", inner: &row })?,
                Sink::Csv(w) => w.write_record(row.csv_record(variant)).map_err(csv_err)?,
            }
        }
    }

    match sink {
        Sink::Json(out) => {
            json_line(out, &Tagged { kind: "summary", inner: &summary })?;
            out.flush()?;
        }
        Sink::Csv(mut w) => w.flush()?,
    }
    Ok(summary)
}

enum Sink<'a> {
    Json(&'a mut dyn Write),
    Csv(Box<csv::Writer<&'a mut dyn Write>>),
}

fn csv_err(e: csv::Error) -> CliError {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => io.into(),
        other => CliError::Io(format!("{other:?}")),
    }
}
