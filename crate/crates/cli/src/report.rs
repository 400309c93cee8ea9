//! The report every command produces, and its json/csv/text renderings.
//!
//! JSON output is a single object with the arrays `cartan`, `classes`,
//! `irreducibles` and `checks`; numbers are written as decimal strings.

use serde::Serialize;
use weyl_core::verify::Check;
use weyl_core::Weyl;

use crate::config::OutputFormat;
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanEntry {
    pub group: String,
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: String,
    pub central_rank: String,
    pub order: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub group: String,
    pub index: String,
    pub representative: String,
    pub size: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleEntry {
    pub group: String,
    pub index: String,
    pub label: String,
    pub degree: String,
    pub values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dl_image: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub group: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<Check> for CheckEntry {
    fn from(c: Check) -> Self {
        CheckEntry {
            group: c.group,
            name: c.name.to_string(),
            passed: c.passed,
            detail: c.detail,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub cartan: Vec<CartanEntry>,
    pub classes: Vec<ClassEntry>,
    pub irreducibles: Vec<IrreducibleEntry>,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push_cartan(&mut self, weyl: &Weyl) {
        let c = weyl.cartan();
        self.cartan.push(CartanEntry {
            group: weyl.name(),
            type_label: c.type_label.to_string(),
            rank: c.rank.to_string(),
            central_rank: c.central_rank.to_string(),
            order: weyl.group().order().to_string(),
            matrix: c
                .cartan_matrix
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        });
    }

    pub fn push_classes(&mut self, weyl: &Weyl) {
        let w = weyl.group();
        for (i, cl) in weyl.whole().classes().classes().iter().enumerate() {
            self.classes.push(ClassEntry {
                group: weyl.name(),
                index: i.to_string(),
                representative: w.word_string(cl.representative),
                size: cl.size.to_string(),
            });
        }
    }

    pub fn push_irreducibles(&mut self, weyl: &Weyl, dl_images: Option<&[String]>) {
        let table = weyl.table();
        for (i, row) in table.rows().iter().enumerate() {
            self.irreducibles.push(IrreducibleEntry {
                group: weyl.name(),
                index: i.to_string(),
                label: table.label(i),
                degree: row[0].to_string(),
                values: row.iter().map(ToString::to_string).collect(),
                dl_image: dl_images.map(|d| d[i].clone()),
            });
        }
    }

    pub fn render(&self, kind: ReportKind, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| CliError::Serialize(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            OutputFormat::Csv => self.render_csv(kind),
            OutputFormat::Text => Ok(self.render_text(kind)),
        }
    }

    fn render_csv(&self, kind: ReportKind) -> Result<String, CliError> {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        let ser = |e: csv::Error| CliError::Serialize(e.to_string());
        match kind {
            ReportKind::Table => {
                let mut header = vec!["irreducible".to_string()];
                header.extend(self.classes.iter().map(|c| c.representative.clone()));
                wtr.write_record(&header).map_err(ser)?;
                for irr in &self.irreducibles {
                    let mut rec = vec![irr.label.clone()];
                    rec.extend(irr.values.iter().cloned());
                    wtr.write_record(&rec).map_err(ser)?;
                }
            }
            ReportKind::Dl => {
                wtr.write_record(["irreducible", "dl_image"]).map_err(ser)?;
                for irr in &self.irreducibles {
                    let image = irr.dl_image.clone().unwrap_or_default();
                    wtr.write_record([irr.label.as_str(), image.as_str()]).map_err(ser)?;
                }
            }
            ReportKind::Verify => {
                wtr.write_record(["group", "check", "passed", "detail"]).map_err(ser)?;
                for c in &self.checks {
                    let passed = if c.passed { "true" } else { "false" };
                    wtr.write_record([c.group.as_str(), c.name.as_str(), passed, c.detail.as_str()])
                        .map_err(ser)?;
                }
            }
        }
        let bytes = wtr.into_inner().map_err(|e| CliError::Serialize(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Serialize(e.to_string()))
    }

    fn render_text(&self, kind: ReportKind) -> String {
        let mut out = String::new();
        match kind {
            ReportKind::Table => {
                for c in &self.cartan {
                    out.push_str(&format!(
                        "W({}): order {}, {} classes\n",
                        c.group,
                        c.order,
                        self.classes.len()
                    ));
                }
                let mut grid = Vec::new();
                let mut header = vec!["class".to_string()];
                header.extend(self.classes.iter().map(|c| c.representative.clone()));
                grid.push(header);
                let mut sizes = vec!["size".to_string()];
                sizes.extend(self.classes.iter().map(|c| c.size.clone()));
                grid.push(sizes);
                for irr in &self.irreducibles {
                    let mut row = vec![irr.label.clone()];
                    row.extend(irr.values.iter().cloned());
                    grid.push(row);
                }
                out.push_str(&align(&grid));
            }
            ReportKind::Dl => {
                for c in &self.cartan {
                    out.push_str(&format!("W({}): Deligne-Lusztig operator on Irr(W)\n", c.group));
                }
                for n in &self.notes {
                    out.push_str(n);
                    out.push('\n');
                }
                let mut grid = vec![vec!["alpha".to_string(), "DL(alpha)".to_string()]];
                for irr in &self.irreducibles {
                    grid.push(vec![irr.label.clone(), irr.dl_image.clone().unwrap_or_default()]);
                }
                out.push_str(&align(&grid));
                out.push_str(&self.check_lines());
            }
            ReportKind::Verify => {
                out.push_str(&self.check_lines());
                let passed = self.checks.iter().filter(|c| c.passed).count();
                out.push_str(&format!("summary: {passed}/{} checks passed\n", self.checks.len()));
            }
        }
        out
    }

    fn check_lines(&self) -> String {
        let grid: Vec<Vec<String>> = self
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.group.clone(),
                    c.name.clone(),
                    if c.passed { "pass" } else { "FAIL" }.to_string(),
                    c.detail.clone(),
                ]
            })
            .collect();
        align(&grid)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    Table,
    Dl,
    Verify,
}

/// Left-aligned columns separated by two spaces; the last column is not padded.
fn align(grid: &[Vec<String>]) -> String {
    let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| grid.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in grid {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(cell);
                line.push_str(&" ".repeat(widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
