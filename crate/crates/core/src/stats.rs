//! Pronoun-distribution tables and Pearson chi-square over 2x2 tables.
//!
//! Distribution counts cover eligible pronouns by form and transition, with
//! smooth- and rough-shift merged into a single SHIFT column and every
//! CONTINUE split by the transition preceding it. Significance is reported
//! as threshold brackets (p < x) using df = 1 critical values.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::centering::{analyze, Bigram, Transition};
use crate::corpus::{eligible_pronouns, Document, Form};
use crate::segment::{segment, SegmentConfig, SegmentError};

/// 2x2 observed counts, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContingencyTable {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("degenerate contingency table: a margin is zero")]
    DegenerateTable,
}

/// Significance bracket for df = 1, strongest threshold passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum PBracket {
    #[serde(rename = "p<0.001")]
    P001,
    #[serde(rename = "p<0.01")]
    P01,
    #[serde(rename = "p<0.05")]
    P05,
    #[serde(rename = "p<0.1")]
    P10,
    #[serde(rename = "p<0.5")]
    P50,
    #[serde(rename = "p<0.7")]
    P70,
    #[serde(rename = "p<1.0")]
    P100,
}

impl std::fmt::Display for PBracket {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let label = match self {
            PBracket::P001 => "p<0.001",
            PBracket::P01 => "p<0.01",
            PBracket::P05 => "p<0.05",
            PBracket::P10 => "p<0.1",
            PBracket::P50 => "p<0.5",
            PBracket::P70 => "p<0.7",
            PBracket::P100 => "p<1.0",
        };
        f.write_str(label)
    }
}

// Chi-square critical values for one degree of freedom.
const CRITICAL_VALUES: [(f64, PBracket); 6] = [
    (10.828, PBracket::P001),
    (6.635, PBracket::P01),
    (3.841, PBracket::P05),
    (2.706, PBracket::P10),
    (0.455, PBracket::P50),
    (0.148, PBracket::P70),
];

/// Pearson chi-square without continuity correction, df = 1.
pub fn chi_square(table: ContingencyTable) -> Result<(f64, PBracket), StatsError> {
    let ContingencyTable { a, b, c, d } = table;
    let (a, b, c, d) = (a as f64, b as f64, c as f64, d as f64);
    let n = a + b + c + d;
    let margins = [a + b, c + d, a + c, b + d];
    if margins.iter().any(|&m| m == 0.0) {
        return Err(StatsError::DegenerateTable);
    }
    let observed = [a, b, c, d];
    let expected = [
        margins[0] * margins[2] / n,
        margins[0] * margins[3] / n,
        margins[1] * margins[2] / n,
        margins[1] * margins[3] / n,
    ];
    let statistic: f64 = observed
        .iter()
        .zip(&expected)
        .map(|(o, e)| (o - e) * (o - e) / e)
        .sum();
    let bracket = CRITICAL_VALUES
        .iter()
        .find(|(threshold, _)| statistic >= *threshold)
        .map(|(_, b)| *b)
        .unwrap_or(PBracket::P100);
    Ok((statistic, bracket))
}

/// Formats a statistic the way it is reported: three decimal places.
pub fn format_statistic(statistic: f64) -> String {
    format!("{statistic:.3}")
}

const FORM_ROWS: [&str; 2] = ["zero", "strong"];
const TRANSITION_COLS: [&str; 5] = ["continue", "retain", "shift", "cent-est", "other"];
const BIGRAM_COLS: [&str; 2] = ["cont-cont+shift-cont", "ret-cont"];

/// Transition class used in distribution counts: smooth- and rough-shift
/// merged, FIRST excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TransitionClass {
    Continue,
    Retain,
    Shift,
    CentEst,
    Other,
}

impl TransitionClass {
    pub fn from_transition(transition: Transition) -> Option<TransitionClass> {
        match transition {
            Transition::First => None,
            Transition::Continue => Some(TransitionClass::Continue),
            Transition::Retain => Some(TransitionClass::Retain),
            Transition::SmoothShift | Transition::RoughShift => Some(TransitionClass::Shift),
            Transition::CentEst => Some(TransitionClass::CentEst),
            Transition::Other => Some(TransitionClass::Other),
        }
    }

    fn column(self) -> usize {
        match self {
            TransitionClass::Continue => 0,
            TransitionClass::Retain => 1,
            TransitionClass::Shift => 2,
            TransitionClass::CentEst => 3,
            TransitionClass::Other => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PronounForm {
    #[serde(rename = "null")]
    Null,
    #[serde(rename = "strong")]
    Strong,
}

impl PronounForm {
    fn row(self) -> usize {
        match self {
            PronounForm::Null => 0,
            PronounForm::Strong => 1,
        }
    }
}

/// One pre-labeled observation: an eligible pronoun with its transition.
/// Used to rebuild distribution tables when the underlying corpus is not
/// available, only its labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledRecord {
    pub text: String,
    pub form: PronounForm,
    pub transition: TransitionClass,
    #[serde(default)]
    pub bigram: Option<Bigram>,
}

/// Pronoun counts by form and transition, with the CONTINUE bigram split
/// and a per-text breakdown.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DistributionTable {
    transitions: [[u64; 5]; 2],
    bigrams: [[u64; 2]; 2],
    per_text: BTreeMap<String, [[u64; 5]; 2]>,
}

impl DistributionTable {
    pub fn add(
        &mut self,
        text: &str,
        form: PronounForm,
        class: TransitionClass,
        bigram: Option<Bigram>,
    ) {
        let row = form.row();
        let col = class.column();
        self.transitions[row][col] += 1;
        self.per_text.entry(text.to_string()).or_default()[row][col] += 1;
        if class == TransitionClass::Continue {
            let bcol = match bigram {
                Some(Bigram::RetCont) => 1,
                _ => 0,
            };
            self.bigrams[row][bcol] += 1;
        }
    }

    /// Counts eligible pronouns over analyzed documents.
    pub fn from_documents(
        docs: &[Document],
        config: SegmentConfig,
    ) -> Result<DistributionTable, SegmentError> {
        let mut table = DistributionTable::default();
        for doc in docs {
            let units = segment(doc, config)?;
            let states = analyze(doc, config)?;
            let unit_of_mention: BTreeMap<&str, usize> = units
                .iter()
                .enumerate()
                .flat_map(|(idx, u)| u.mentions.iter().map(move |m| (m.id.as_str(), idx)))
                .collect();
            for mention in eligible_pronouns(doc) {
                let Some(&idx) = unit_of_mention.get(mention.id.as_str()) else {
                    continue; // mention's clause contributed no unit
                };
                let state = &states[idx];
                let Some(class) = TransitionClass::from_transition(state.transition) else {
                    continue; // FIRST units carry no transition count
                };
                let form = match mention.form {
                    Form::NullSubject => PronounForm::Null,
                    Form::StrongPronoun => PronounForm::Strong,
                    _ => unreachable!("eligible pronouns are null or strong"),
                };
                table.add(&doc.doc_id, form, class, state.bigram);
            }
        }
        Ok(table)
    }

    pub fn from_labels(records: &[LabeledRecord]) -> DistributionTable {
        let mut table = DistributionTable::default();
        for record in records {
            table.add(&record.text, record.form, record.transition, record.bigram);
        }
        table
    }

    pub fn transition_count(&self, form: PronounForm, class: TransitionClass) -> u64 {
        self.transitions[form.row()][class.column()]
    }

    pub fn transition_row(&self, form: PronounForm) -> [u64; 5] {
        self.transitions[form.row()]
    }

    pub fn bigram_row(&self, form: PronounForm) -> [u64; 2] {
        self.bigrams[form.row()]
    }

    pub fn row_total(&self, form: PronounForm) -> u64 {
        self.transitions[form.row()].iter().sum()
    }

    pub fn grand_total(&self) -> u64 {
        self.row_total(PronounForm::Null) + self.row_total(PronounForm::Strong)
    }

    pub fn per_text(&self) -> impl Iterator<Item = (&str, [u64; 5], [u64; 5])> {
        self.per_text
            .iter()
            .map(|(text, rows)| (text.as_str(), rows[0], rows[1]))
    }

    /// CONTINUE vs all other transitions.
    pub fn continue_vs_others(&self) -> ContingencyTable {
        let z = self.transition_row(PronounForm::Null);
        let s = self.transition_row(PronounForm::Strong);
        ContingencyTable {
            a: z[0],
            b: z[1..].iter().sum(),
            c: s[0],
            d: s[1..].iter().sum(),
        }
    }

    /// CONT-CONT + SHIFT-CONT vs RET-CONT.
    pub fn cont_shift_vs_ret_cont(&self) -> ContingencyTable {
        let z = self.bigram_row(PronounForm::Null);
        let s = self.bigram_row(PronounForm::Strong);
        ContingencyTable {
            a: z[0],
            b: z[1],
            c: s[0],
            d: s[1],
        }
    }

    /// CONT-CONT + SHIFT-CONT vs everything else, RET-CONT included.
    pub fn cont_shift_vs_all_others(&self) -> ContingencyTable {
        let mut t = self.continue_vs_others();
        let zb = self.bigram_row(PronounForm::Null);
        let sb = self.bigram_row(PronounForm::Strong);
        t.b += t.a - zb[0];
        t.a = zb[0];
        t.d += t.c - sb[0];
        t.c = sb[0];
        t
    }

    /// RET-CONT vs transitions different from CONTINUE.
    pub fn ret_cont_vs_non_continue(&self) -> ContingencyTable {
        let z = self.transition_row(PronounForm::Null);
        let s = self.transition_row(PronounForm::Strong);
        ContingencyTable {
            a: self.bigram_row(PronounForm::Null)[1],
            b: z[1..].iter().sum(),
            c: self.bigram_row(PronounForm::Strong)[1],
            d: s[1..].iter().sum(),
        }
    }

    /// CONT-CONT + SHIFT-CONT vs CENT-EST.
    pub fn cont_shift_vs_cent_est(&self) -> ContingencyTable {
        ContingencyTable {
            a: self.bigram_row(PronounForm::Null)[0],
            b: self.transition_count(PronounForm::Null, TransitionClass::CentEst),
            c: self.bigram_row(PronounForm::Strong)[0],
            d: self.transition_count(PronounForm::Strong, TransitionClass::CentEst),
        }
    }

    /// The five named contingency tables derived from the distribution.
    pub fn derived_tables(&self) -> Vec<(&'static str, ContingencyTable)> {
        vec![
            ("continue-vs-others", self.continue_vs_others()),
            ("cont-cont+shift-cont-vs-ret-cont", self.cont_shift_vs_ret_cont()),
            ("cont-cont+shift-cont-vs-all-others", self.cont_shift_vs_all_others()),
            ("ret-cont-vs-non-continue", self.ret_cont_vs_non_continue()),
            ("cont-cont+shift-cont-vs-cent-est", self.cont_shift_vs_cent_est()),
        ]
    }

    /// Tab-delimited rendering, LF line endings, header rows. Empty tables
    /// render headers only.
    pub fn render_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str("# transitions\n");
        out.push_str(&format!("type\ttotal\t{}\n", TRANSITION_COLS.join("\t")));
        if self.grand_total() > 0 {
            for form in [PronounForm::Null, PronounForm::Strong] {
                let row = self.transition_row(form);
                out.push_str(&format!(
                    "{}\t{}\t{}\n",
                    FORM_ROWS[form.row()],
                    self.row_total(form),
                    row.map(|v| v.to_string()).join("\t")
                ));
            }
            let totals: Vec<String> = (0..5)
                .map(|i| (self.transitions[0][i] + self.transitions[1][i]).to_string())
                .collect();
            out.push_str(&format!(
                "total\t{}\t{}\n",
                self.grand_total(),
                totals.join("\t")
            ));
        }
        out.push('\n');
        out.push_str("# transitions per text\n");
        out.push_str(&format!(
            "text\ttype\ttotal\t{}\n",
            TRANSITION_COLS.join("\t")
        ));
        for (text, zero, strong) in self.per_text() {
            for (label, row) in [("zero", zero), ("strong", strong)] {
                out.push_str(&format!(
                    "{text}\t{label}\t{}\t{}\n",
                    row.iter().sum::<u64>(),
                    row.map(|v| v.to_string()).join("\t")
                ));
            }
        }
        out.push('\n');
        out.push_str("# continue bigrams\n");
        out.push_str(&format!("type\ttotal\t{}\n", BIGRAM_COLS.join("\t")));
        if self.grand_total() > 0 {
            for form in [PronounForm::Null, PronounForm::Strong] {
                let row = self.bigram_row(form);
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    FORM_ROWS[form.row()],
                    row[0] + row[1],
                    row[0],
                    row[1]
                ));
            }
            out.push_str(&format!(
                "total\t{}\t{}\t{}\n",
                self.bigrams[0][0] + self.bigrams[0][1] + self.bigrams[1][0] + self.bigrams[1][1],
                self.bigrams[0][0] + self.bigrams[1][0],
                self.bigrams[0][1] + self.bigrams[1][1]
            ));
        }
        out
    }

    /// Fixed-width text rendering.
    pub fn render_text(&self) -> String {
        fn render_rows(header: &[String], rows: &[Vec<String>]) -> String {
            let mut widths: Vec<usize> = header.iter().map(String::len).collect();
            for row in rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let mut out = String::new();
            let fmt_row = |cells: &[String], widths: &[usize]| {
                cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{:<width$}", c, width = widths[i]))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            out.push_str(&fmt_row(header, &widths));
            out.push('\n');
            for row in rows {
                out.push_str(&fmt_row(row, &widths));
                out.push('\n');
            }
            out
        }

        let tsv = self.render_tsv();
        let mut out = String::new();
        for (i, block) in tsv.split("\n\n").enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let mut lines = block.lines();
            let title = lines.next().unwrap_or("");
            out.push_str(title);
            out.push('\n');
            let mut rows: Vec<Vec<String>> = lines
                .map(|l| l.split('\t').map(String::from).collect())
                .collect();
            if rows.is_empty() {
                continue;
            }
            let header = rows.remove(0);
            out.push_str(&render_rows(&header, &rows));
        }
        out
    }

    /// JSON rendering with stable key order.
    pub fn to_json(&self) -> serde_json::Value {
        let row_obj = |row: [u64; 5]| {
            serde_json::json!({
                "total": row.iter().sum::<u64>(),
                "continue": row[0],
                "retain": row[1],
                "shift": row[2],
                "cent_est": row[3],
                "other": row[4],
            })
        };
        let per_text: BTreeMap<String, serde_json::Value> = self
            .per_text()
            .map(|(text, zero, strong)| {
                (
                    text.to_string(),
                    serde_json::json!({"zero": row_obj(zero), "strong": row_obj(strong)}),
                )
            })
            .collect();
        serde_json::json!({
            "transitions": {
                "zero": row_obj(self.transition_row(PronounForm::Null)),
                "strong": row_obj(self.transition_row(PronounForm::Strong)),
            },
            "bigrams": {
                "zero": {"cont_cont_shift_cont": self.bigrams[0][0], "ret_cont": self.bigrams[0][1]},
                "strong": {"cont_cont_shift_cont": self.bigrams[1][0], "ret_cont": self.bigrams[1][1]},
            },
            "per_text": per_text,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reported_chi_square_values() {
        let cases = [
            (ContingencyTable { a: 56, b: 24, c: 13, d: 20 }, 9.204, PBracket::P01),
            (ContingencyTable { a: 51, b: 5, c: 7, d: 6 }, 10.910, PBracket::P001),
            (ContingencyTable { a: 51, b: 29, c: 7, d: 26 }, 16.922, PBracket::P001),
            (ContingencyTable { a: 5, b: 24, c: 6, d: 20 }, 0.292, PBracket::P70),
            (ContingencyTable { a: 51, b: 12, c: 7, d: 10 }, 10.624, PBracket::P01),
        ];
        for (table, expected, bracket) in cases {
            let (statistic, got_bracket) = chi_square(table).unwrap();
            assert!(
                (statistic - expected).abs() < 0.005,
                "expected {expected}, got {statistic}"
            );
            assert_eq!(got_bracket, bracket);
        }
    }

    #[test]
    fn uniform_table_scores_zero() {
        let (statistic, bracket) = chi_square(ContingencyTable { a: 10, b: 10, c: 10, d: 10 }).unwrap();
        assert_eq!(statistic, 0.0);
        assert_eq!(bracket, PBracket::P100);
    }

    #[test]
    fn zero_margin_is_degenerate() {
        assert!(matches!(
            chi_square(ContingencyTable { a: 0, b: 0, c: 3, d: 4 }),
            Err(StatsError::DegenerateTable)
        ));
    }

    #[test]
    fn empty_corpus_renders_headers_only() {
        let table = DistributionTable::default();
        let tsv = table.render_tsv();
        assert!(tsv.contains("type\ttotal\tcontinue"));
        assert!(!tsv.contains("zero\t"));
    }

    #[test]
    fn row_totals_sum_cells() {
        let mut table = DistributionTable::default();
        table.add("t", PronounForm::Null, TransitionClass::Continue, Some(Bigram::ContCont));
        table.add("t", PronounForm::Null, TransitionClass::Retain, None);
        table.add("t", PronounForm::Strong, TransitionClass::CentEst, None);
        assert_eq!(table.row_total(PronounForm::Null), 2);
        assert_eq!(table.row_total(PronounForm::Strong), 1);
        assert_eq!(table.grand_total(), 3);
    }
}
