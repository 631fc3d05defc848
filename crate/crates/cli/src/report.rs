//! Verification reports and their renderings.

use serde::Serialize;

use crate::args::Format;

/// Outcome of one `verify` run.
///
/// `rows` is the per-item agreement table with one value per entry of
/// `columns`. Every row with `agree == false` has a matching line in
/// `mismatches`, so a failed report always names at least one discrepancy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub algebra: Option<String>,
    pub columns: Vec<String>,
    pub rows: Vec<ReportRow>,
    pub notes: Vec<String>,
    pub mismatches: Vec<String>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

/// One line of the agreement table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub label: String,
    pub values: Vec<String>,
    pub agree: bool,
}

impl VerificationReport {
    pub fn new(check: &str, algebra: Option<String>, columns: &[&str]) -> Self {
        Self {
            check: check.to_string(),
            algebra,
            columns: columns.iter().map(ToString::to_string).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
            mismatches: Vec::new(),
            pass: true,
            elapsed_ms: 0,
        }
    }

    /// Adds a row; a disagreeing row records `detail` as a mismatch.
    pub fn row(&mut self, label: impl Into<String>, values: Vec<String>, agree: bool, detail: impl FnOnce() -> String) {
        debug_assert_eq!(values.len(), self.columns.len());
        if !agree {
            self.mismatches.push(detail());
            self.pass = false;
        }
        self.rows.push(ReportRow {
            label: label.into(),
            values,
            agree,
        });
    }

    /// Records a failure not tied to a row.
    pub fn fail(&mut self, detail: String) {
        self.mismatches.push(detail);
        self.pass = false;
    }

    pub fn note(&mut self, line: String) {
        self.notes.push(line);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => crate::output::to_json(self) + "\n",
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let subject = self.algebra.as_deref().map(|a| format!(" {a}")).unwrap_or_default();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        out += &format!("verify {}{subject}: {verdict} ({} ms)\n", self.check, self.elapsed_ms);
        for n in &self.notes {
            out += &format!("  {n}\n");
        }
        if !self.rows.is_empty() {
            let mut table: Vec<Vec<String>> = vec![core::iter::once(String::new())
                .chain(self.columns.iter().cloned())
                .chain(core::iter::once("ok".to_string()))
                .collect()];
            for r in &self.rows {
                table.push(
                    core::iter::once(r.label.clone())
                        .chain(r.values.iter().cloned())
                        .chain(core::iter::once(if r.agree { "yes" } else { "NO" }.to_string()))
                        .collect(),
                );
            }
            let widths: Vec<usize> = (0..table[0].len())
                .map(|c| table.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
                .collect();
            for row in &table {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:<w$}"))
                    .collect();
                out += &format!("  {}\n", cells.join("  ").trim_end());
            }
        }
        for m in &self.mismatches {
            out += &format!("  mismatch: {m}\n");
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let header: Vec<&str> = ["check", "algebra", "label"]
            .into_iter()
            .chain(self.columns.iter().map(String::as_str))
            .chain(["agree"])
            .collect();
        w.write_record(&header).expect("writing to memory");
        let algebra = self.algebra.clone().unwrap_or_default();
        for r in &self.rows {
            let agree = r.agree.to_string();
            let record: Vec<&str> = [self.check.as_str(), algebra.as_str(), r.label.as_str()]
                .into_iter()
                .chain(r.values.iter().map(String::as_str))
                .chain([agree.as_str()])
                .collect();
            w.write_record(&record).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("UTF-8")
    }
}
