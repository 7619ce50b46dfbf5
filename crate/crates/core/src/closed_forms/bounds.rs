//! Eigenvalue inequalities for the two families, decided exactly.
//!
//! Bounds on `θ2 + θ3` and `θ2θ3` are rewritten through the cubic's
//! coefficients as `s − θ1` and `c / θ1`, so every check reduces to
//! comparing the isolated root `θ1` with a rational.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::{bridge_cubic, oracle_spectrum, reseminant_cubic};
use crate::error::{Error, Result};
use crate::graph::{adjacency_matrix, bridge_graph, reseminant_tilde, BridgeParams};
use crate::linalg::{compare_root_to_rational, compare_roots, isolate_real_roots, RootInterval};
use crate::scalar::{fmt_rational, int, rational};
use crate::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundFamily {
    Bridge { m: usize, n: usize },
    Reseminant { n: usize },
}

impl std::fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundFamily::Bridge { m, n } => write!(f, "B({m},{n})"),
            BoundFamily::Reseminant { n } => write!(f, "R~_{n}"),
        }
    }
}

fn ser_q<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(q))
}

fn ser_pair<S: Serializer>(q: &[BigRational; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
    [fmt_rational(&q[0]), fmt_rational(&q[1])].serialize(s)
}

/// `lower <= quantity <= upper`, with an interval certified to contain the
/// quantity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub statement: String,
    #[serde(serialize_with = "ser_q")]
    pub lower: BigRational,
    #[serde(serialize_with = "ser_q")]
    pub upper: BigRational,
    #[serde(serialize_with = "ser_pair")]
    pub certified: [BigRational; 2],
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub family: String,
    pub checks: Vec<BoundCheck>,
    /// Whether the top root of the family's cubic is the largest eigenvalue;
    /// `None` when the family has no cubic (general bridges).
    pub cubic_root_is_lambda1: Option<bool>,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds) && self.cubic_root_is_lambda1 != Some(false)
    }
}

/// Function of the positive root `θ` being bounded.
enum Quantity {
    Root,
    /// `s − θ`
    Shift(BigRational),
    /// `c / θ`
    Reciprocal(BigRational),
}

/// A condition on `θ` alone.
enum Cond {
    AtMost(BigRational),
    AtLeast(BigRational),
    Always(bool),
}

impl Cond {
    fn holds(&self, theta: &RootInterval) -> bool {
        match self {
            Cond::AtMost(q) => compare_root_to_rational(theta, q) != Ordering::Greater,
            Cond::AtLeast(q) => compare_root_to_rational(theta, q) != Ordering::Less,
            Cond::Always(b) => *b,
        }
    }
}

impl Quantity {
    /// `quantity >= lower` and `quantity <= upper`, restated on `θ`.
    fn conditions(&self, lower: &BigRational, upper: &BigRational) -> [Cond; 2] {
        match self {
            Quantity::Root => [Cond::AtLeast(lower.clone()), Cond::AtMost(upper.clone())],
            Quantity::Shift(s) => [Cond::AtMost(s - lower), Cond::AtLeast(s - upper)],
            Quantity::Reciprocal(c) => {
                // c/θ >= L  <=>  c >= Lθ ;  c/θ <= U  <=>  c <= Uθ   (θ > 0)
                let ge = if lower.is_positive() {
                    Cond::AtMost(c / lower)
                } else if lower.is_negative() {
                    Cond::AtLeast(c / lower)
                } else {
                    Cond::Always(!c.is_negative())
                };
                let le = if upper.is_positive() {
                    Cond::AtLeast(c / upper)
                } else if upper.is_negative() {
                    Cond::AtMost(c / upper)
                } else {
                    Cond::Always(!c.is_positive())
                };
                [ge, le]
            }
        }
    }

    fn enclose(&self, theta: &RootInterval) -> [BigRational; 2] {
        let (lo, hi) = (theta.lo().clone(), theta.hi().clone());
        match self {
            Quantity::Root => [lo, hi],
            Quantity::Shift(s) => [s - hi, s - lo],
            Quantity::Reciprocal(c) => {
                let (a, b) = (c / &hi, c / &lo);
                if a <= b {
                    [a, b]
                } else {
                    [b, a]
                }
            }
        }
    }
}

fn check(
    name: &'static str,
    statement: String,
    theta: &RootInterval,
    q: Quantity,
    lower: BigRational,
    upper: BigRational,
) -> BoundCheck {
    let holds = q.conditions(&lower, &upper).iter().all(|c| c.holds(theta));
    BoundCheck { name, statement, certified: q.enclose(theta), lower, upper, holds }
}

/// Tightens a positive root's interval until its lower end is positive, so
/// `c / θ` is enclosed by a finite interval.
fn positive(mut theta: RootInterval) -> Result<RootInterval> {
    if compare_root_to_rational(&theta, &BigRational::zero()) != Ordering::Greater {
        return Err(Error::InvalidParameters("largest eigenvalue is not positive".into()));
    }
    while !theta.lo().is_positive() {
        theta.bisect();
    }
    Ok(theta)
}

fn top_root(p: &crate::IntPolynomial, width: &BigRational) -> Result<RootInterval> {
    let roots = isolate_real_roots(p, width)?;
    roots.into_iter().next().ok_or_else(|| Error::InvalidParameters(format!("{p} has no real root")))
}

pub fn eigenvalue_bound_checks(family: BoundFamily, width: &BigRational) -> Result<BoundReport> {
    let mut checks = Vec::new();
    let mut cubic_root_is_lambda1 = None;
    match family {
        BoundFamily::Bridge { m, n } => {
            let g = bridge_graph(BridgeParams::new(m, n)?)?;
            let spec = oracle_spectrum(&adjacency_matrix(&g), width)?;
            let lambda1 = positive(spec.entries[0].descriptor.to_root(width))?;
            let (mq, m1) = (int(m as i64), int(m as i64 - 1));
            checks.push(check(
                "lambda1",
                "m - 1 <= lambda1 <= m".into(),
                &lambda1,
                Quantity::Root,
                m1.clone(),
                mq.clone(),
            ));
            if m == n {
                checks.push(check(
                    "lambda1-balanced",
                    "m - (1 - 1/m) <= lambda1 <= m".into(),
                    &lambda1,
                    Quantity::Root,
                    &m1 + rational(1, m as i64),
                    mq.clone(),
                ));
            }
            if n + 1 == m && m > 2 {
                let mut theta1 = positive(top_root(&bridge_cubic(m), width)?)?;
                cubic_root_is_lambda1 =
                    Some(compare_roots(&mut theta1, &mut lambda1.clone()) == Ordering::Equal);
                checks.push(check(
                    "pair-sum",
                    "-3 <= theta2 + theta3 <= -2".into(),
                    &theta1,
                    Quantity::Shift(int(m as i64 - 3)),
                    int(-3),
                    int(-2),
                ));
                checks.push(check(
                    "pair-product",
                    "2/m <= theta2 * theta3 <= 2/(m - 1)".into(),
                    &theta1,
                    Quantity::Reciprocal(int(2)),
                    rational(2, m as i64),
                    rational(2, m as i64 - 1),
                ));
            }
        }
        BoundFamily::Reseminant { n } => {
            let spec = oracle_spectrum(&adjacency_matrix(&reseminant_tilde(n)), width)?;
            let lambda1 = positive(spec.entries[0].descriptor.to_root(width))?;
            let mut theta1 = positive(top_root(&reseminant_cubic(n), width)?)?;
            cubic_root_is_lambda1 =
                Some(compare_roots(&mut theta1, &mut lambda1.clone()) == Ordering::Equal);
            let k = n as i64;
            checks.push(check(
                "lambda1",
                "(n + 1)(n + 4)/(n + 3) <= lambda1 <= n + 2".into(),
                &lambda1,
                Quantity::Root,
                rational((k + 1) * (k + 4), k + 3),
                int(k + 2),
            ));
            checks.push(check(
                "pair-sum",
                "-1 <= theta2 + theta3 <= -(n + 1)/(n + 3)".into(),
                &theta1,
                Quantity::Shift(int(k + 1)),
                int(-1),
                rational(-(k + 1), k + 3),
            ));
            checks.push(check(
                "pair-product",
                "-(3n + 2)(n + 3)/((n + 1)(n + 4)) <= theta2 * theta3 <= -(3n + 2)/(n + 2)".into(),
                &theta1,
                Quantity::Reciprocal(int(-(3 * k + 2))),
                rational(-(3 * k + 2) * (k + 3), (k + 1) * (k + 4)),
                rational(-(3 * k + 2), k + 2),
            ));
        }
    }
    Ok(BoundReport { family: family.to_string(), checks, cubic_root_is_lambda1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::default_width;

    fn find<'a>(r: &'a BoundReport, name: &str) -> &'a BoundCheck {
        r.checks.iter().find(|c| c.name == name).unwrap()
    }

    fn inside(c: &BoundCheck) -> bool {
        c.lower <= c.certified[0] && c.certified[1] <= c.upper
    }

    #[test]
    fn bridge_54() {
        let r = eigenvalue_bound_checks(BoundFamily::Bridge { m: 5, n: 4 }, &default_width()).unwrap();
        assert!(r.all_hold());
        let l = find(&r, "lambda1");
        assert_eq!((l.lower.clone(), l.upper.clone()), (int(4), int(5)));
        assert!(inside(l));
        assert_eq!(r.cubic_root_is_lambda1, Some(true));
    }

    #[test]
    fn bridge_32_product() {
        let r = eigenvalue_bound_checks(BoundFamily::Bridge { m: 3, n: 2 }, &default_width()).unwrap();
        let p = find(&r, "pair-product");
        assert_eq!((p.lower.clone(), p.upper.clone()), (rational(2, 3), int(1)));
        assert!(p.holds && inside(p));
        assert!(find(&r, "pair-sum").holds);
    }

    #[test]
    fn balanced_bridge() {
        let r = eigenvalue_bound_checks(BoundFamily::Bridge { m: 4, n: 4 }, &default_width()).unwrap();
        assert!(find(&r, "lambda1-balanced").holds);
        assert!(r.cubic_root_is_lambda1.is_none());
    }

    #[test]
    fn reseminant_2() {
        let r = eigenvalue_bound_checks(BoundFamily::Reseminant { n: 2 }, &default_width()).unwrap();
        assert!(r.all_hold());
        let s = find(&r, "pair-sum");
        assert_eq!((s.lower.clone(), s.upper.clone()), (int(-1), rational(-3, 5)));
        assert!(inside(s));
    }

    #[test]
    fn reseminant_0_is_tight() {
        // θ2 + θ3 = −1 and θ2θ3 = −1 exactly for C_5
        let r = eigenvalue_bound_checks(BoundFamily::Reseminant { n: 0 }, &default_width()).unwrap();
        assert!(r.all_hold());
        assert_eq!(find(&r, "pair-sum").certified, [int(-1), int(-1)]);
        assert_eq!(find(&r, "pair-product").certified, [int(-1), int(-1)]);
    }

    #[test]
    fn violated_bound_is_reported() {
        let theta = top_root(&bridge_cubic(3), &default_width()).unwrap();
        let c = check("t", String::new(), &theta, Quantity::Root, int(3), int(4));
        assert!(!c.holds);
        let c = check("t", String::new(), &theta, Quantity::Reciprocal(int(2)), int(1), int(2));
        assert!(!c.holds);
    }
}
