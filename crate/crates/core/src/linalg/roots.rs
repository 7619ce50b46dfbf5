use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::poly::squarefree_decomposition;
use crate::error::{Error, Result};
use crate::scalar::fmt_rational;
use crate::{BigInt, BigRational, IntPolynomial, RatPolynomial};

/// Default isolation width, `2^-30`.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 30u32)
}

/// Sturm sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().expect("nonempty").is_zero() {
            let n = chain.len();
            let (_, r) = chain[n - 2].to_rational().div_rem(&chain[n - 1].to_rational())?;
            chain.push(positive_rescale(&-&r));
        }
        chain.pop();
        Ok(SturmChain { chain })
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval_rational(x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if last.is_some_and(|l| l != pos) {
                count += 1;
            }
            last = Some(pos);
        }
        count
    }

    /// Number of distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Clears denominators by a positive factor, preserving sign.
fn positive_rescale(p: &RatPolynomial) -> IntPolynomial {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p.map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer());
    let g = ints.content();
    if g.is_zero() {
        ints
    } else {
        ints.map(|c| c / &g)
    }
}

/// A real root of `polynomial`, certified to lie in the open interval
/// `(lo, hi)`, or equal to `lo = hi` when `exact`.
///
/// `polynomial` is square-free, has exactly one root in the interval and
/// does not vanish at either endpoint of a non-exact interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    polynomial: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
    multiplicity: u32,
    exact: bool,
}

impl RootInterval {
    pub fn exact(polynomial: IntPolynomial, value: BigRational, multiplicity: u32) -> Self {
        RootInterval { polynomial, lo: value.clone(), hi: value, multiplicity, exact: true }
    }

    /// Builds an isolating interval after checking its invariants.
    pub fn isolating(
        polynomial: IntPolynomial,
        lo: BigRational,
        hi: BigRational,
        multiplicity: u32,
    ) -> Result<Self> {
        let bad = |why: &str| {
            Error::InvalidParameters(format!(
                "({}, {}] does not isolate a root of {polynomial}: {why}",
                fmt_rational(&lo),
                fmt_rational(&hi)
            ))
        };
        if lo >= hi {
            return Err(bad("empty interval"));
        }
        if polynomial.eval_rational(&hi).is_zero() {
            return Ok(Self::exact(polynomial, hi, multiplicity));
        }
        if polynomial.eval_rational(&lo).is_zero() {
            return Err(bad("lower endpoint is a root"));
        }
        if SturmChain::new(&polynomial)?.count(&lo, &hi) != 1 {
            return Err(bad("root count is not one"));
        }
        Ok(RootInterval { polynomial, lo, hi, multiplicity, exact: false })
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.polynomial
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn with_multiplicity(mut self, multiplicity: u32) -> Self {
        self.multiplicity = multiplicity;
        self
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    fn sign_at(&self, x: &BigRational) -> Ordering {
        self.polynomial.eval_rational(x).cmp(&BigRational::zero())
    }

    /// Halves the interval (or pins the root exactly if the midpoint is it).
    pub fn bisect(&mut self) {
        if self.exact {
            return;
        }
        let mid = self.midpoint();
        let s = self.sign_at(&mid);
        if s == Ordering::Equal {
            self.lo = mid.clone();
            self.hi = mid;
            self.exact = true;
        } else if s == self.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, width: &BigRational) {
        while !self.exact && &self.width() > width {
            self.bisect();
        }
    }

    /// The root of `p(−x)` at minus this root.
    pub fn negate(&self) -> Self {
        RootInterval {
            polynomial: self.polynomial.reflect().primitive_part(),
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
            multiplicity: self.multiplicity,
            exact: self.exact,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "polynomial": self.polynomial.to_json(),
            "lo": fmt_rational(&self.lo),
            "hi": fmt_rational(&self.hi),
            "exact": self.exact,
        })
    }
}

/// Orders an isolated root against a rational. Exact: no refinement is
/// needed because the sign of the polynomial at `q` tells which side of `q`
/// the root lies on.
pub fn compare_root_to_rational(r: &RootInterval, q: &BigRational) -> Ordering {
    if r.exact {
        return r.lo.cmp(q);
    }
    if q <= &r.lo {
        return Ordering::Greater;
    }
    if q >= &r.hi {
        return Ordering::Less;
    }
    let s = r.sign_at(q);
    if s == Ordering::Equal {
        Ordering::Equal
    } else if s == r.sign_at(&r.lo) {
        // no sign change on (lo, q]: the root is above q
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Orders two isolated roots, refining both intervals in place until they
/// separate. Equality is detected through the gcd of the two polynomials,
/// so the loop always terminates.
pub fn compare_roots(a: &mut RootInterval, b: &mut RootInterval) -> Ordering {
    let common = a.polynomial.to_rational().gcd(&b.polynomial.to_rational());
    let common = (common.degree().unwrap_or(0) > 0)
        .then(|| IntPolynomial::from_rational(&common))
        .map(|g| SturmChain::new(&g).expect("nonzero gcd"));
    loop {
        if a.exact {
            return compare_root_to_rational(b, &a.lo).reverse();
        }
        if b.exact {
            return compare_root_to_rational(a, &b.lo);
        }
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if let Some(chain) = &common {
            let lo = (&a.lo).max(&b.lo);
            let hi = (&a.hi).min(&b.hi);
            if chain.count(lo, hi) > 0 {
                return Ordering::Equal;
            }
        }
        a.bisect();
        b.bisect();
    }
}

/// All distinct real roots of `p` with multiplicities, each isolated to
/// width at most `width`, sorted in decreasing order with pairwise disjoint
/// intervals.
pub fn isolate_real_roots(p: &IntPolynomial, width: &BigRational) -> Result<Vec<RootInterval>> {
    if !width.is_positive() {
        return Err(Error::InvalidParameters("isolation width must be positive".into()));
    }
    let mut roots = Vec::new();
    for (factor, k) in squarefree_decomposition(p)? {
        if factor.degree() == Some(1) {
            let value = BigRational::new(-factor.coeff(0), factor.coeff(1));
            roots.push(RootInterval::exact(factor, value, k));
            continue;
        }
        for mut r in isolate_squarefree(&factor, k)? {
            r.refine_to(width);
            roots.push(r);
        }
    }
    // insertion sort, descending; comparisons refine overlapping neighbours
    for i in 1..roots.len() {
        let mut j = i;
        while j > 0 {
            let (left, right) = roots.split_at_mut(j);
            if compare_roots(&mut left[j - 1], &mut right[0]) == Ordering::Less {
                roots.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    Ok(roots)
}

fn isolate_squarefree(f: &IntPolynomial, multiplicity: u32) -> Result<Vec<RootInterval>> {
    let chain = SturmChain::new(f)?;
    let lead = BigRational::from_integer(f.leading().expect("nonzero").abs());
    let max_ratio = f
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.abs()) / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    // Cauchy: every root satisfies |x| < 1 + max |a_i / a_n|
    let bound = max_ratio + BigRational::one();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        match chain.count(&lo, &hi) {
            0 => {}
            1 => out.push(RootInterval { polynomial: f.clone(), lo, hi, multiplicity, exact: false }),
            _ => {
                let mid = split_point(f, &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    Ok(out)
}

/// A point strictly inside `(lo, hi)` where `f` does not vanish.
fn split_point(f: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> BigRational {
    let span = hi - lo;
    (2i64..)
        .flat_map(|d| (1..d).map(move |k| BigRational::new(k.into(), d.into())))
        .map(|t| lo + &span * t)
        .find(|c| !f.eval_rational(c).is_zero())
        .expect("finitely many roots")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::golden_quadratic;
    use crate::scalar::{int, rational};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn golden_conjugates() {
        let width = rational(1, 1000);
        let roots = isolate_real_roots(&golden_quadratic(), &width).unwrap();
        assert_eq!(roots.len(), 2);
        // φ⁻¹ ≈ 0.618, −φ ≈ −1.618
        assert!(roots[0].lo() < &rational(619, 1000) && roots[0].hi() > &rational(617, 1000));
        assert!(roots[1].lo() < &rational(-1617, 1000) && roots[1].hi() > &rational(-1619, 1000));
        assert!(roots.iter().all(|r| r.width() <= width));
    }

    #[test]
    fn cubic_largest_root_between_two_and_three() {
        let cubic = p(&[-2, -4, 0, 1]);
        // sign change oracle: p(2) = -2 < 0, p(3) = 13 > 0
        assert_eq!(cubic.eval(&2.into()), (-2).into());
        assert_eq!(cubic.eval(&3.into()), 13.into());
        let roots = isolate_real_roots(&cubic, &default_width()).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots[0].lo() >= &int(2) && roots[0].hi() <= &int(3));
    }

    #[test]
    fn repeated_root_reports_multiplicity() {
        let roots = isolate_real_roots(&p(&[1, 1]).pow(3), &default_width()).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].is_exact());
        assert_eq!(roots[0].lo(), &int(-1));
        assert_eq!(roots[0].multiplicity(), 3);
    }

    #[test]
    fn comparisons_against_rationals() {
        let roots = isolate_real_roots(&p(&[-2, -4, 0, 1]), &default_width()).unwrap();
        assert_eq!(compare_root_to_rational(&roots[0], &int(1)), Ordering::Greater);
        // p(-1) = 1 > 0, p(0) = -2 < 0, p(-2) = -2 < 0
        assert_eq!(compare_root_to_rational(&roots[1], &int(-1)), Ordering::Greater);
        assert_eq!(compare_root_to_rational(&roots[1], &int(0)), Ordering::Less);
        assert_eq!(compare_root_to_rational(&roots[2], &int(-1)), Ordering::Less);
        let golden = isolate_real_roots(&golden_quadratic(), &rational(1, 2)).unwrap();
        assert_eq!(compare_root_to_rational(&golden[0], &int(-1)), Ordering::Greater);
    }

    #[test]
    fn compare_roots_detects_equality_across_polynomials() {
        // φ⁻¹ as a root of x^2 + x - 1 and of (x^2 + x - 1)(x - 5)
        let mut a = isolate_real_roots(&golden_quadratic(), &rational(1, 2)).unwrap().remove(0);
        let other = &golden_quadratic() * &p(&[-5, 1]);
        let mut b = isolate_real_roots(&other, &rational(1, 8)).unwrap().remove(1);
        assert_eq!(compare_roots(&mut a, &mut b), Ordering::Equal);
    }

    #[test]
    fn disjoint_sorted_output_across_factors() {
        // (x^2 - 2)(x^2 - 3)^2 : roots interleave between factors
        let q = &p(&[-2, 0, 1]) * &p(&[-3, 0, 1]).pow(2);
        let roots = isolate_real_roots(&q, &int(4)).unwrap();
        let mults: Vec<u32> = roots.iter().map(RootInterval::multiplicity).collect();
        assert_eq!(mults, vec![2, 1, 1, 2]);
        for w in roots.windows(2) {
            assert!(w[1].hi() <= w[0].lo());
        }
    }

    #[test]
    fn isolating_constructor_checks_invariants() {
        let f = golden_quadratic();
        assert!(RootInterval::isolating(f.clone(), int(0), int(1), 1).is_ok());
        assert!(RootInterval::isolating(f.clone(), int(-2), int(1), 1).is_err());
        assert!(RootInterval::isolating(p(&[-1, 1]), int(0), int(1), 1).unwrap().is_exact());
    }

    #[test]
    fn negation_flips_interval() {
        let r = isolate_real_roots(&golden_quadratic(), &default_width()).unwrap().remove(0);
        let n = r.negate();
        assert_eq!(n.lo(), &-r.hi().clone());
        assert_eq!(n.polynomial(), &p(&[-1, -1, 1]));
        assert_eq!(compare_root_to_rational(&n, &rational(-1, 2)), Ordering::Less);
    }
}
