//! The verification suite: every closed form is swept over a parameter range
//! and compared against the exact oracle layer.

mod checks;
mod config;
mod float;
mod formulas;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub use config::SweepConfig;
pub use float::{crosscheck_float, FloatCrosscheck};
pub use formulas::{Formulas, FAULTS};

use checks::{Ctx, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub range: String,
    pub status: Status,
    pub reason: Option<String>,
    pub cases: usize,
    pub skipped: usize,
    pub notes: Vec<String>,
    pub evidence: Option<Value>,
    pub counterexample: Option<Value>,
    pub wall_time_ms: u64,
}

struct CheckDef {
    id: &'static str,
    statement: &'static str,
    run: fn(&Ctx) -> Outcome,
}

macro_rules! check {
    ($id:literal, $statement:literal, $run:path) => {
        CheckDef { id: $id, statement: $statement, run: $run }
    };
}

const REGISTRY: &[CheckDef] = &[
    check!("det-worked-example", "det A(S(4,3)) = -19 and the printed A(B(4,3)) and its inverse", checks::det_worked_example),
    check!("det-bridge", "det A(B(m,n)) = (-1)^(m+n-1) (3 - (m+n))", checks::det_bridge),
    check!("det-bridge-equality", "det A(B(m,n)) = det A(B(m',n')) iff m + n = m' + n'", checks::det_bridge_equality),
    check!("det-bridge-complement", "closed form for det of the complement of B(m,n)", checks::det_bridge_complement),
    check!("det-complete", "det A(K_k) = (-1)^(k-1) (k-1) and A(K_k)^-1 = J/(k-1) - I", checks::det_complete),
    check!("det-suspension", "closed form for det A(S(m,n)), m + n >= 4", checks::det_suspension),
    check!("bridge-inverse-diagonal", "diagonal entries of A(B(m,n))^-1 off the bridge", checks::bridge_inverse_diagonal),
    check!("bridge-inverse-within-block", "off-diagonal entries of A(B(m,n))^-1 inside one clique", checks::bridge_inverse_within_block),
    check!("bridge-inverse-cross-block", "entries of A(B(m,n))^-1 between the two cliques", checks::bridge_inverse_cross_block),
    check!("charpoly-bridge", "char poly of B(m,m-1) = cubic (x - (m-2)) (x + 1)^(2m-5)", checks::charpoly_bridge),
    check!("charpoly-coefficients", "char poly has zero x^(n-1) term, x^(n-2) = -|E| and constant (-1)^n det", checks::charpoly_coefficients),
    check!("edge-counts", "edge counts of B(m,n), B(m,m-1) and R~_n", checks::edge_counts),
    check!("minus-one-multiplicity-bridge", "rank(I + A(B(m,n))) = 4 and -1 has multiplicity m + n - 4", checks::minus_one_multiplicity_bridge),
    check!("perron-frobenius", "lambda1 is simple and dominates every other eigenvalue in modulus", checks::perron_frobenius),
    check!("lambda1-bounds-bridge", "m - 1 <= lambda1(B(m,n)) <= m", checks::lambda1_bounds_bridge),
    check!("lambda2-bridge", "lambda2(B(m,m-1)) = m - 2", checks::lambda2_bridge),
    check!("pair-bounds-bridge", "bounds on the sum and product of the two negative cubic roots for B(m,m-1)", checks::pair_bounds_bridge),
    check!("spectrum-bridge-ordering", "theta1 > m - 2 > 0 > theta2 > -1 > theta3 for B(m,m-1)", checks::spectrum_bridge_ordering),
    check!("quartic-identity-bridge", "the quartic cofactor of (x + 1)^(2m-5) has a0 + a3 = 1", checks::quartic_identity_bridge),
    check!("charpoly-reseminant", "char poly of R~_n = cubic (x + 1)^n (x^2 + x - 1)", checks::charpoly_reseminant),
    check!("minus-one-multiplicity-reseminant", "rank(I + A(R~_n)) = 5 and -1 has multiplicity n", checks::minus_one_multiplicity_reseminant),
    check!("reseminant-kminus", "R~_n has exactly one maximal K- subgraph; C_5 has none", checks::kminus_reseminant),
    check!("degree-two-pair", "R~_n has exactly two degree-2 vertices and they are adjacent", checks::degree_two_pair),
    check!("r-tilde-characterization", "R~ membership test accepts R~_n and rejects mixed duplications", checks::r_tilde_characterization),
    check!("isomorphic-reseminant-suspension", "R~_n is isomorphic to S(n+2,2)", checks::isomorphic_reseminant_suspension),
    check!("lambda1-bounds-reseminant", "(n+1)(n+4)/(n+3) <= lambda1(R~_n) <= n + 2", checks::lambda1_bounds_reseminant),
    check!("pair-bounds-reseminant", "bounds on the sum and product of the two smaller cubic roots for R~_n", checks::pair_bounds_reseminant),
    check!("golden-eigenvalues", "x^2 + x - 1 divides the char poly of R~_n", checks::golden_eigenvalues),
    check!("spectrum-reseminant-ordering", "theta1 > theta2 > phi^-1 > -1 > -phi > theta3 for R~_n", checks::spectrum_reseminant_ordering),
    check!("spectrum-c5", "Spec(C_5) = {2, phi^-1 x2, -phi x2}", checks::spectrum_c5),
    check!("minimally-connected-bridge", "admissible B(m,n) are minimally connected prime graphs but not minimal", checks::minimally_connected_bridge),
    check!("minimal-reseminant", "R~_n is a minimal prime graph", checks::minimal_reseminant),
    check!("duplication-preserves-prime", "vertex duplication keeps C_5 prime", checks::duplication_preserves_prime),
    check!("float-crosscheck", "f64 eigenvalues fall inside the exact intervals", checks::float_crosscheck),
];

/// Ids of every registered check, in run order.
pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

fn run_one(def: &CheckDef, cx: &Ctx) -> TheoremCheck {
    let start = Instant::now();
    let o = (def.run)(cx);
    let (status, reason) = if o.failure.is_some() {
        (Status::Fail, Some("counterexample found".to_string()))
    } else if let Some(r) = o.not_applicable.clone() {
        (Status::NotApplicable, Some(r))
    } else {
        (Status::Pass, None)
    };
    TheoremCheck {
        id: def.id,
        statement: def.statement,
        range: o.range,
        status,
        reason,
        cases: o.cases,
        skipped: o.skipped,
        notes: o.notes,
        evidence: o.evidence,
        counterexample: o.failure,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs the full suite against the closed forms.
pub fn run_suite(cfg: &SweepConfig) -> Scorecard {
    run_suite_with(cfg, &Formulas::default())
}

pub fn run_suite_with(cfg: &SweepConfig, formulas: &Formulas) -> Scorecard {
    run_selected(cfg, formulas, None)
}

/// Runs only the checks whose id is listed; unknown ids are ignored.
pub fn run_selected(cfg: &SweepConfig, formulas: &Formulas, only: Option<&[String]>) -> Scorecard {
    let cx = Ctx { cfg, f: formulas, width: cfg.width() };
    let mut results: Vec<TheoremCheck> = REGISTRY
        .par_iter()
        .filter(|d| only.is_none_or(|ids| ids.iter().any(|i| i == d.id)))
        .map(|d| run_one(d, &cx))
        .collect();
    results.sort_by_key(|c| c.id);
    Scorecard { config: cfg.clone(), checks: results }
}

#[derive(Clone, Debug, Serialize)]
pub struct Scorecard {
    pub config: SweepConfig,
    pub checks: Vec<TheoremCheck>,
}

impl Scorecard {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn all_pass(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn get(&self, id: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// 0 when nothing failed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "summary": {
                "total": self.checks.len(),
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "not_applicable": self.count(Status::NotApplicable),
            },
            "config": self.config,
            "checks": self.checks,
        })
    }

    /// Plain-text table; `color` wraps the status column in ANSI codes.
    pub fn to_table(&self, color: bool) -> String {
        let id_w = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let mut out = String::new();
        let _ = writeln!(out, "{:<id_w$}  {:<14}  {:>6}  {:>7}  range", "id", "status", "cases", "skipped");
        for c in &self.checks {
            let status = c.status.as_str();
            let shown = if color {
                let code = match c.status {
                    Status::Pass => "32",
                    Status::Fail => "31",
                    Status::NotApplicable => "33",
                };
                format!("\x1b[{code}m{status:<14}\x1b[0m")
            } else {
                format!("{status:<14}")
            };
            let _ = writeln!(out, "{:<id_w$}  {shown}  {:>6}  {:>7}  {}", c.id, c.cases, c.skipped, c.range);
            for n in &c.notes {
                let _ = writeln!(out, "{:<id_w$}    note: {n}", "");
            }
            if let Some(ce) = &c.counterexample {
                let _ = writeln!(out, "{:<id_w$}    counterexample: {ce}", "");
            }
        }
        let _ = writeln!(
            out,
            "{} checks: {} pass, {} fail, {} not applicable",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::NotApplicable)
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SweepConfig {
        SweepConfig {
            bridge_max_m: 6,
            det_equality_max_sum: 10,
            inverse_max_sum: 8,
            suspension_max_sum: 9,
            charpoly_bridge_max_m: 6,
            charpoly_reseminant_max_n: 5,
            golden_max_n: 5,
            isomorphism_max_n: 5,
            recognition_bridge_max_sum: 8,
            minimal_reseminant_max_n: 3,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn registry_ids_are_unique_and_kebab() {
        let ids = check_ids();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert!(ids.iter().all(|i| i.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-')));
    }

    #[test]
    fn small_suite_passes() {
        let card = run_suite(&small());
        let failing: Vec<_> = card.checks.iter().filter(|c| c.status != Status::Pass).collect();
        assert!(failing.is_empty(), "{}", card.to_table(false));
        assert_eq!(card.exit_code(), 0);
    }

    #[test]
    fn every_fault_is_caught() {
        let cfg = small();
        for name in FAULTS {
            let f = Formulas::with_fault(name).unwrap();
            let card = run_suite_with(&cfg, &f);
            assert_eq!(card.exit_code(), 2, "fault {name} went unnoticed");
            assert!(card.checks.iter().any(|c| c.counterexample.is_some()));
        }
    }

    #[test]
    fn suite_is_deterministic() {
        let cfg = small();
        let strip = |card: Scorecard| {
            let mut v = card.to_json();
            for c in v["checks"].as_array_mut().unwrap() {
                c["wall_time_ms"] = json!(0);
            }
            v
        };
        assert_eq!(strip(run_suite(&cfg)), strip(run_suite(&cfg)));
    }

    #[test]
    fn selection_runs_only_named_checks() {
        let ids = vec!["det-bridge".to_string(), "spectrum-c5".to_string()];
        let card = run_selected(&small(), &Formulas::default(), Some(&ids));
        assert_eq!(card.checks.len(), 2);
        assert!(card.all_pass());
    }

    #[test]
    fn json_shape() {
        let ids = vec!["det-bridge".to_string()];
        let v = run_selected(&small(), &Formulas::default(), Some(&ids)).to_json();
        assert_eq!(v["summary"]["pass"], 1);
        assert_eq!(v["checks"][0]["status"], "pass");
        assert!(v["checks"][0]["counterexample"].is_null());
    }
}
