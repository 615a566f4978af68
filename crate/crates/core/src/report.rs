//! Relation-check reports.

use std::fmt;

use crate::field::Field;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub relation: String,
    pub params: String,
    pub passed: bool,
    /// First nonzero entry of the defect matrix on failure.
    pub defect: Option<(usize, usize)>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            items: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|c| !c.passed)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn record(&mut self, relation: &str, params: impl Into<String>, passed: bool) {
        self.items.push(CheckItem {
            relation: relation.into(),
            params: params.into(),
            passed,
            defect: None,
            note: None,
        });
    }

    pub fn record_note(
        &mut self,
        relation: &str,
        params: impl Into<String>,
        passed: bool,
        note: impl Into<String>,
    ) {
        self.items.push(CheckItem {
            relation: relation.into(),
            params: params.into(),
            passed,
            defect: None,
            note: Some(note.into()),
        });
    }

    /// Record that `m` vanishes.
    pub fn zero<F: Field>(&mut self, relation: &str, params: impl Into<String>, m: &Matrix<F>) {
        let defect = m.first_nonzero();
        self.items.push(CheckItem {
            relation: relation.into(),
            params: params.into(),
            passed: defect.is_none(),
            defect,
            note: None,
        });
    }

    pub fn equal<F: Field>(
        &mut self,
        relation: &str,
        params: impl Into<String>,
        lhs: &Matrix<F>,
        rhs: &Matrix<F>,
    ) {
        self.zero(relation, params, &lhs.sub(rhs));
    }

    pub fn absorb(&mut self, other: VerificationReport) {
        self.items.extend(other.items);
    }

    /// `key=value` lines.
    pub fn to_structured(&self) -> String {
        let mut out = String::new();
        for c in &self.items {
            out.push_str(&format!(
                "check suite={} relation={} params={} result={}",
                self.suite,
                c.relation,
                c.params.replace(' ', ""),
                if c.passed { "pass" } else { "fail" }
            ));
            if let Some((r, col)) = c.defect {
                out.push_str(&format!(" defect={r},{col}"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "summary suite={} checks={} failed={} result={}\n",
            self.suite,
            self.items.len(),
            self.failures().count(),
            if self.passed() { "pass" } else { "fail" }
        ));
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.items {
            write!(
                f,
                "{:<6} {:<10} {:<24} {}",
                self.suite,
                c.relation,
                c.params,
                if c.passed { "ok" } else { "FAIL" }
            )?;
            if let Some((r, col)) = c.defect {
                write!(f, "  defect at ({r},{col})")?;
            }
            if let Some(n) = &c.note {
                write!(f, "  {n}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "{}: {} checks, {} failed",
            self.suite,
            self.items.len(),
            self.failures().count()
        )
    }
}
