//! Pass/fail reporting for the verification suites.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub items: Vec<CheckItem>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport {
            suite: suite.into(),
            items: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.items.push(CheckItem {
            name: name.into(),
            pass,
            detail: None,
        });
    }

    pub fn check_detail(&mut self, name: impl Into<String>, pass: bool, detail: String) {
        self.items.push(CheckItem {
            name: name.into(),
            pass,
            detail: Some(detail),
        });
    }

    /// A recorded observation that does not gate the suite.
    pub fn note(&mut self, name: impl Into<String>, detail: String) {
        self.items.push(CheckItem {
            name: name.into(),
            pass: true,
            detail: Some(detail),
        });
    }

    pub fn merge(&mut self, other: SuiteReport) {
        for mut item in other.items {
            item.name = format!("{}: {}", other.suite, item.name);
            self.items.push(item);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn summary(&self) -> String {
        let passed = self.items.iter().filter(|i| i.pass).count();
        format!(
            "{}: {}/{} checks passed",
            self.suite,
            passed,
            self.items.len()
        )
    }
}
