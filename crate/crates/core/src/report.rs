//! Structured outcomes of verification checks.

use serde::{Deserialize, Serialize};

/// Context a check ran under.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportParams {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Graph descriptor: family spec, graph6 line, or a terse n/m summary.
    pub graph: String,
    pub tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ReportParams {
    pub fn new(n: usize, k: Option<usize>, graph: impl Into<String>, tol: f64) -> Self {
        Self {
            n,
            k,
            graph: graph.into(),
            tol,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// Outcome of one theorem/identity check.
///
/// Identity checks report a residual and pass iff residual <= tol;
/// inequality checks report a slack (distance to the bound) and pass iff
/// slack >= -tol, so a bound satisfied with equality passes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<f64>,
    /// True when the residual was computed in exact integer arithmetic.
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub params: ReportParams,
}

impl VerificationReport {
    pub fn identity(check: impl Into<String>, residual: f64, params: ReportParams) -> Self {
        Self {
            check: check.into(),
            passed: residual <= params.tol,
            residual: Some(residual),
            slack: None,
            exact: false,
            witness: None,
            params,
        }
    }

    pub fn identity_exact(check: impl Into<String>, residual: i64, params: ReportParams) -> Self {
        Self {
            check: check.into(),
            passed: residual == 0,
            residual: Some(residual as f64),
            slack: None,
            exact: true,
            witness: None,
            params,
        }
    }

    pub fn inequality(check: impl Into<String>, slack: f64, params: ReportParams) -> Self {
        Self {
            check: check.into(),
            passed: slack >= -params.tol,
            residual: None,
            slack: Some(slack),
            exact: false,
            witness: None,
            params,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_conditions() {
        let p = ReportParams::new(5, Some(2), "test", 1e-8);
        assert!(VerificationReport::identity("x", 0.0, p.clone()).passed);
        assert!(VerificationReport::identity("x", 1e-9, p.clone()).passed);
        assert!(!VerificationReport::identity("x", 1e-6, p.clone()).passed);
        assert!(VerificationReport::identity_exact("x", 0, p.clone()).passed);
        assert!(!VerificationReport::identity_exact("x", 1, p.clone()).passed);
        // one-sided: equality and positive slack pass, violation fails
        assert!(VerificationReport::inequality("x", 0.0, p.clone()).passed);
        assert!(VerificationReport::inequality("x", 5.0, p.clone()).passed);
        assert!(!VerificationReport::inequality("x", -1e-6, p).passed);
    }

    #[test]
    fn serializes_to_json() {
        let p = ReportParams::new(4, Some(2), "complete(4)", 1e-8).with_seed(7);
        let r = VerificationReport::identity_exact("commutation", 0, p);
        let js = serde_json::to_value(&r).unwrap();
        assert_eq!(js["check"], "commutation");
        assert_eq!(js["passed"], true);
        assert_eq!(js["exact"], true);
        assert_eq!(js["params"]["seed"], 7);
    }
}
