use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::membership::{IdealOracle, Membership, Status};
use super::presentation::Presentation;
use super::word::NcPoly;
use crate::error::{Error, Result};

/// One polynomial that must lie in the ideal of `oracle`'s presentation.
#[derive(Debug, Clone)]
pub struct CheckItem {
    pub label: String,
    pub poly: NcPoly,
    pub outcome: Membership,
    pub presentation: Arc<Presentation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Passed,
    Failed,
    Undecided,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: String,
    pub bound: usize,
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn status(&self) -> SuiteStatus {
        if self.items.iter().any(|i| i.outcome.status() == Status::NotMember) {
            SuiteStatus::Failed
        } else if self.items.iter().any(|i| i.outcome.status() == Status::Undecided) {
            SuiteStatus::Undecided
        } else {
            SuiteStatus::Passed
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == SuiteStatus::Passed
    }

    pub fn certificate_terms(&self) -> usize {
        self.items.iter().filter_map(|i| i.outcome.certificate()).map(|c| c.len()).sum()
    }

    /// `Err(VerificationFailed)` naming the first entry that is not a certified member.
    pub fn into_result(self) -> Result<Self> {
        let bad = self
            .items
            .iter()
            .find(|i| i.outcome.status() == Status::NotMember)
            .or_else(|| self.items.iter().find(|i| !i.outcome.is_member()));
        match bad {
            Some(i) => Err(Error::VerificationFailed(format!("{} ({:?})", i.label, i.outcome.status()))),
            None => Ok(self),
        }
    }

    /// Replays every certificate and compares with the checked polynomial.
    pub fn audit(&self) -> Result<usize> {
        let mut n = 0;
        for item in &self.items {
            if let Some(c) = item.outcome.certificate() {
                if c.replay(&item.presentation)? != item.poly {
                    return Err(Error::VerificationFailed(format!("certificate of {} does not replay", item.label)));
                }
                n += 1;
            }
        }
        Ok(n)
    }

    pub fn to_json(&self, with_certificates: bool) -> serde_json::Value {
        let items: Vec<_> = self
            .items
            .iter()
            .map(|i| {
                let mut v = json!({ "label": i.label, "status": i.outcome.status() });
                match &i.outcome {
                    Membership::Member(c) => {
                        v["certificate_terms"] = json!(c.len());
                        if with_certificates {
                            v["certificate"] = c.to_json(i.presentation.alphabet());
                        }
                    }
                    Membership::NotMemberByCharacter { character, value } => {
                        v["witness"] = json!({ "character": character, "value": value.to_string() });
                    }
                    Membership::Undecided => {}
                }
                v
            })
            .collect();
        json!({ "suite": self.suite, "bound": self.bound, "status": self.status(), "items": items })
    }
}

/// A pending membership query.
pub struct Query {
    pub label: String,
    pub poly: NcPoly,
}

impl Query {
    pub fn new(label: impl Into<String>, poly: NcPoly) -> Self {
        Query { label: label.into(), poly }
    }
}

/// Runs queries in parallel; polynomials above the bound count as undecided.
pub fn run_queries(oracle: &IdealOracle, queries: Vec<Query>, bound: usize) -> Result<Vec<CheckItem>> {
    let pres = Arc::new(oracle.presentation().clone());
    queries
        .into_par_iter()
        .map(|q| {
            let outcome = match oracle.member(&q.poly, bound) {
                Err(Error::DegreeExceedsBound { .. }) => Membership::Undecided,
                other => other?,
            };
            Ok(CheckItem { label: q.label, poly: q.poly, outcome, presentation: pres.clone() })
        })
        .collect()
}
