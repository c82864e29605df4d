//! Command-line front end. Every command renders into a buffer first so that
//! errors never leave a partial table behind.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::candidates::{
    aa1_shape, format_tuple, known_table, negative_candidates, positive_candidates, rho_bounds, Candidate,
    KnownRow, Method, MonadShape, Verdict,
};
use crate::error::{Error, Result};
use crate::moduli::dimension_table;
use crate::spectra::enumerate_spectra;
use crate::spectrum::Spectrum;
use crate::symbolic::{verify_monad, MonadPresentation, Outcome, VerificationReport, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "horrocks", version, about = "Spectra, monad shapes and explicit monad checks for rank 2 bundles on P3")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, env = "HORROCKS_FORMAT", value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    Spectra,
    Terms,
    Candidates,
    Dimensions,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the possible spectra for a given c2.
    Spectra {
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
    },
    /// List candidate monad shapes with their verdicts.
    Candidates {
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
        /// Shapes with generators in positive degrees.
        #[arg(long)]
        negative: bool,
    },
    /// Check explicit monads given as JSON files.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Claimed spectrum as multiplicities s(0),s(1),...
        #[arg(long)]
        spectrum: Option<String>,
        /// Prime for the Gröbner tests; a second prime is always added.
        #[arg(long = "char", env = "HORROCKS_CHAR", default_value_t = crate::symbolic::DEFAULT_PRIME)]
        characteristic: u64,
        /// Inclusive twist range for the h1 comparison, written FROM..TO.
        #[arg(long, env = "HORROCKS_L_RANGE", default_value = "-8..-1", allow_hyphen_values = true)]
        l_range: String,
    },
    /// Render the classification tables.
    Tables {
        /// The c2 = 10 tables.
        #[arg(long, conflicts_with = "c2", required_unless_present = "c2")]
        paper: bool,
        #[arg(long, allow_hyphen_values = true)]
        c2: Option<i64>,
        /// Only this table.
        #[arg(long, value_enum)]
        table: Option<TableName>,
    },
}

/// Parses arguments and runs one command; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_BAD_INPUT
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    match &cli.command {
        Command::Spectra { c2 } => Ok((spectra_table(*c2)?.render(cli.format), EXIT_OK)),
        Command::Candidates { c2, negative } => {
            let table = if *negative { negative_table(*c2)? } else { candidate_table(*c2)? };
            Ok((table.render(cli.format), EXIT_OK))
        }
        Command::Verify { files, spectrum, characteristic, l_range } => {
            let spectrum = spectrum.as_deref().map(Spectrum::parse).transpose()?;
            let config = VerifyConfig::with_prime(*characteristic, parse_l_range(l_range)?);
            verify_files(files, spectrum.as_ref(), &config, cli.format)
        }
        Command::Tables { paper, c2, table } => {
            let c2 = if *paper { 10 } else { c2.expect("clap enforces one of --paper, --c2") };
            Ok((tables(c2, *table, cli.format)?, EXIT_OK))
        }
    }
}

pub fn parse_l_range(text: &str) -> Result<RangeInclusive<i64>> {
    let bad = || Error::Parse(format!("twist range must look like -8..-1, got {text:?}"));
    let (from, to) = text.split_once("..").ok_or_else(bad)?;
    let from: i64 = from.trim().parse().map_err(|_| bad())?;
    let to: i64 = to.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if from > to {
        return Err(bad());
    }
    Ok(from..=to)
}

/// Rows plus a JSON rendition of the same data.
struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Value,
}

impl Table {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.aligned(),
            Format::Csv => self.csv(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable") + "\n",
        }
    }

    fn aligned(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if i + 1 == cells.len() {
                    s.push_str(cell);
                } else {
                    s.push_str(cell);
                    s.extend(std::iter::repeat_n(' ', w - cell.chars().count() + 2));
                }
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(self.headers.clone());
        for row in &self.rows {
            out.push_str(&line(row.iter().map(String::as_str).collect()));
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::NonNumeric).from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
    }
}

pub fn spectrum_label(index: usize, c2: i64) -> String {
    format!("X_{}^{}", index + 1, c2)
}

fn labelled_spectra(c2: i64) -> Result<Vec<(String, Spectrum)>> {
    Ok(enumerate_spectra(c2)?
        .into_iter()
        .enumerate()
        .map(|(i, s)| (spectrum_label(i, c2), s))
        .collect())
}

fn label_of(labels: &[(String, Spectrum)], spectrum: &Spectrum) -> String {
    labels.iter().find(|(_, s)| s == spectrum).map(|(l, _)| l.clone()).unwrap_or_default()
}

fn spectra_table(c2: i64) -> Result<Table> {
    let labels = labelled_spectra(c2)?;
    let rows = labels
        .iter()
        .map(|(label, s)| vec![label.clone(), s.to_string(), s.notation()])
        .collect();
    let json = labels
        .iter()
        .map(|(label, s)| json!({"label": label, "multiplicities": s.mult(), "spectrum": s.expanded()}))
        .collect();
    Ok(Table { headers: vec!["label", "multiplicities", "spectrum"], rows, json })
}

fn set_notation(r: &RangeInclusive<u32>) -> String {
    let items: Vec<String> = r.clone().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Generator ranges for every spectrum with `K >= 1`.
fn terms_table(c2: i64) -> Result<Table> {
    let mut rows = Vec::new();
    let mut json = Vec::new();
    for (label, s) in labelled_spectra(c2)? {
        let bounds = rho_bounds(&s);
        let k = bounds.top_index as i64;
        if k == 0 {
            continue;
        }
        let mut parts = vec![format!("ρ({})={}", -k - 1, bounds.top_value)];
        for (i, r) in bounds.intervals.iter().enumerate() {
            parts.push(format!("ρ({})∈{}", -(i as i64) - 1, set_notation(r)));
        }
        rows.push(vec![label.clone(), k.to_string(), parts.join(", ")]);
        json.push(json!({
            "label": label,
            "k": k,
            "top": bounds.top_value,
            "ranges": bounds.intervals.iter().map(|r| [r.start(), r.end()]).collect::<Vec<_>>(),
        }));
    }
    Ok(Table { headers: vec!["spectrum", "k", "generators"], rows, json: Value::Array(json) })
}

fn known_rows(c2: i64) -> Vec<KnownRow> {
    known_table(c2).unwrap_or_default()
}

/// Rule verdicts, upgraded to EXISTS for shapes with a recorded
/// construction.
fn final_verdict(candidate: &Candidate, known: &[KnownRow]) -> Verdict {
    let verdict = candidate.verdict();
    if verdict != Verdict::Open {
        return verdict;
    }
    let shape = candidate.shape().expect("open verdicts carry a shape");
    known
        .iter()
        .find(|row| row.spectrum == candidate.spectrum && row.shape.same_degrees(shape))
        .and_then(|row| row.method.clone())
        .map_or(Verdict::Open, |how| Verdict::Exists { how })
}

fn rho_text(candidate: &Candidate) -> String {
    candidate
        .rho
        .counts
        .iter()
        .map(|(d, n)| format!("ρ({d})={n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn candidate_rows(c2: i64, candidates: &[Candidate], notes: impl Fn(&MonadShape) -> Option<String>) -> Result<Table> {
    let labels = labelled_spectra(c2)?;
    let known = known_rows(c2);
    let mut rows = Vec::new();
    let mut json = Vec::new();
    for c in candidates {
        let label = label_of(&labels, &c.spectrum);
        let verdict = final_verdict(c, &known);
        let b = c.shape().map(|s| format_tuple(&s.b));
        let note = c.shape().and_then(&notes);
        rows.push(vec![
            label.clone(),
            rho_text(c),
            format_tuple(c.a()),
            b.clone().unwrap_or_else(|| "no solution".into()),
            verdict.to_string(),
            note.clone().unwrap_or_default(),
        ]);
        json.push(json!({
            "spectrum": label,
            "multiplicities": c.spectrum.mult(),
            "rho": c.rho.counts.iter().map(|(d, n)| json!([d, n])).collect::<Vec<_>>(),
            "a": c.a(),
            "b": c.shape().map(|s| s.b.clone()),
            "verdict": verdict,
            "note": note,
        }));
    }
    Ok(Table { headers: vec!["spectrum", "generators", "a", "b", "verdict", "note"], rows, json: Value::Array(json) })
}

fn candidate_table(c2: i64) -> Result<Table> {
    candidate_rows(c2, &positive_candidates(c2)?, |_| None)
}

fn negative_table(c2: i64) -> Result<Table> {
    let aa1 = aa1_shape(c2 / 2).ok();
    candidate_rows(c2, &negative_candidates(c2)?, |shape| {
        aa1.as_ref().filter(|f| f.same_degrees(shape)).map(|_| {
            let n = c2 / 2;
            Method::Aa1 { n }.to_string()
        })
    })
}

fn dimensions_table(c2: i64) -> Result<Table> {
    let mut rows = Vec::new();
    let mut json = Vec::new();
    for (label, shape, r) in dimension_table(c2)? {
        rows.push(vec![
            label.clone(),
            format_tuple(&shape.a),
            format_tuple(&shape.b),
            r.w.to_string(),
            r.g.to_string(),
            r.s_dim.to_string(),
            r.h.to_string(),
            r.dim.to_string(),
        ]);
        json.push(json!({"spectrum": label, "a": shape.a, "b": shape.b, "dimension": r}));
    }
    Ok(Table { headers: vec!["spectrum", "a", "b", "w", "g", "s", "h", "dim"], rows, json: Value::Array(json) })
}

fn tables(c2: i64, only: Option<TableName>, format: Format) -> Result<String> {
    let names = match only {
        Some(n) => vec![n],
        None => {
            let mut v = vec![TableName::Spectra, TableName::Terms, TableName::Candidates];
            if known_table(c2).is_ok() {
                v.push(TableName::Dimensions);
            }
            v
        }
    };
    let mut rendered = Vec::new();
    for name in names {
        let table = match name {
            TableName::Spectra => spectra_table(c2)?,
            TableName::Terms => terms_table(c2)?,
            TableName::Candidates => candidate_table(c2)?,
            TableName::Dimensions => dimensions_table(c2)?,
        };
        rendered.push((name, table));
    }
    if format == Format::Json {
        let map: serde_json::Map<String, Value> = rendered
            .into_iter()
            .map(|(n, t)| (n.to_possible_value().expect("named").get_name().to_string(), t.json))
            .collect();
        return Ok(serde_json::to_string_pretty(&Value::Object(map)).expect("serializable") + "\n");
    }
    let single = rendered.len() == 1;
    Ok(rendered
        .into_iter()
        .map(|(n, t)| {
            let body = t.render(format);
            if single {
                body
            } else {
                format!("# {}\n{body}", n.to_possible_value().expect("named").get_name())
            }
        })
        .collect::<Vec<_>>()
        .join("\n"))
}

fn outcome_code(o: Outcome) -> i32 {
    match o {
        Outcome::Pass => EXIT_OK,
        Outcome::Fail => EXIT_FAIL,
        Outcome::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn report_rows(report: &VerificationReport) -> Vec<(String, String)> {
    report
        .to_string()
        .lines()
        .filter_map(|l| l.rsplit_once(": ").map(|(k, v)| (k.to_string(), v.to_string())))
        .collect()
}

fn verify_files(
    files: &[PathBuf],
    spectrum: Option<&Spectrum>,
    config: &VerifyConfig,
    format: Format,
) -> Result<(String, i32)> {
    let presentations = files
        .iter()
        .map(|f| MonadPresentation::load(f))
        .collect::<Result<Vec<_>>>()?;
    let reports = presentations
        .par_iter()
        .map(|p| verify_monad(p, spectrum, config))
        .collect::<Result<Vec<_>>>()?;

    let fail = reports.iter().any(|r| r.outcome == Outcome::Fail);
    let code = if fail {
        EXIT_FAIL
    } else {
        reports.iter().map(|r| outcome_code(r.outcome)).max().unwrap_or(EXIT_OK)
    };

    let text = match format {
        Format::Table => files
            .iter()
            .zip(&reports)
            .map(|(f, r)| format!("{}\n{r}", f.display()))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::NonNumeric).from_writer(Vec::new());
            w.write_record(["file", "check", "value"]).expect("in-memory write");
            for (f, r) in files.iter().zip(&reports) {
                for (check, value) in report_rows(r) {
                    w.write_record([f.display().to_string(), check, value]).expect("in-memory write");
                }
            }
            String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
        }
        Format::Json => {
            let items: Vec<Value> = files
                .iter()
                .zip(&reports)
                .map(|(f, r)| json!({"file": f.display().to_string(), "report": r}))
                .collect();
            serde_json::to_string_pretty(&items).expect("serializable") + "\n"
        }
    };
    Ok((text, code))
}
