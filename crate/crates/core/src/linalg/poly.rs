use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::{BigInt, BigRational, IntPolynomial, RatPolynomial};

/// Dense univariate polynomial, coefficients lowest degree first, no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·x^d`.
    pub fn monomial(c: T, d: usize) -> Self {
        let mut coeffs = vec![T::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c).expect("i64 embeds")).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> T {
        self.coeffs.get(d).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c.clone() * T::from_usize(d).expect("degree embeds"))
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(−x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| if d % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Field> Polynomial<T> {
    /// Euclidean division; `d` must be nonzero.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = d.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * di.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl IntPolynomial {
    pub fn to_rational(&self) -> RatPolynomial {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Scales a rational polynomial to a primitive integer one with positive
    /// leading coefficient.
    pub fn from_rational(p: &RatPolynomial) -> Self {
        let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = p.map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer());
        ints.primitive_part()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and normalizes the sign of the leading
    /// coefficient to positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        self.map(|c| c / &g)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs()
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// `Some(q)` with `self = d·q` and `q` integral, `None` otherwise.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        let (q, r) = self.to_rational().div_rem(&d.to_rational())?;
        if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
            return Ok(None);
        }
        Ok(Some(q.map(BigRational::to_integer)))
    }

    /// Multiplicity of `d` as a factor (0 when it does not divide).
    pub fn multiplicity_of(&self, d: &Self) -> Result<u32> {
        if d.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidParameters("factor must have positive degree".into()));
        }
        let mut k = 0;
        let mut cur = self.clone();
        while !cur.is_zero() {
            match cur.exact_div(d)? {
                Some(q) => {
                    cur = q;
                    k += 1;
                }
                None => break,
            }
        }
        Ok(k)
    }

    /// Coefficient list, lowest degree first, as JSON numbers (strings when
    /// a coefficient does not fit in an `i64`).
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs()
                .iter()
                .map(|c| match c.to_i64() {
                    Some(v) => Value::from(v),
                    None => Value::from(c.to_string()),
                })
                .collect(),
        )
    }
}

/// `x² + x − 1`, whose roots are `φ⁻¹` and `−φ`.
pub fn golden_quadratic() -> IntPolynomial {
    IntPolynomial::from_i64(&[-1, 1, 1])
}

/// `x − root`.
pub fn linear_factor(root: &BigInt) -> IntPolynomial {
    IntPolynomial::new(vec![-root.clone(), BigInt::one()])
}

/// True iff `d` divides `p` over the rationals.
pub fn poly_divides(d: &IntPolynomial, p: &IntPolynomial) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, r) = p.to_rational().div_rem(&d.to_rational())?;
    Ok(r.is_zero())
}

/// Yun's square-free decomposition: pairwise coprime primitive factors
/// `f_k` with `p = c · ∏ f_k^k`. Constant inputs yield an empty list.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = p.to_rational();
    let da = a.derivative();
    let b = a.gcd(&da);
    let mut c = a.div_rem(&b)?.0;
    let mut d = &da.div_rem(&b)?.0 - &c.derivative();
    let mut out = Vec::new();
    let mut k = 1;
    while c.degree().unwrap_or(0) > 0 {
        let g = c.gcd(&d);
        c = c.div_rem(&g)?.0;
        d = &d.div_rem(&g)?.0 - &c.derivative();
        if g.degree().unwrap_or(0) > 0 {
            out.push((IntPolynomial::from_rational(&g), k));
        }
        k += 1;
    }
    Ok(out)
}

/// A product of integer polynomial powers, kept unexpanded for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigInt,
    pub factors: Vec<(IntPolynomial, u32)>,
}

impl Factorization {
    pub fn new(factors: Vec<(IntPolynomial, u32)>) -> Self {
        Factorization { unit: BigInt::one(), factors }
    }

    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::constant(self.unit.clone()), |acc, (f, k)| &acc * &f.pow(*k))
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(f, k)| f.degree().unwrap_or(0) * *k as usize).sum()
    }

    /// Splits off integer-root linear factors and powers of `x² + x − 1`
    /// from each square-free part; whatever remains is kept whole.
    ///
    /// Ordering: residual factors (by decreasing degree), linear factors by
    /// decreasing root, then the golden quadratic.
    pub fn of(p: &IntPolynomial) -> Result<Self> {
        let sqf = squarefree_decomposition(p)?;
        let mut residual = Vec::new();
        let mut linear = Vec::new();
        let mut golden = Vec::new();
        let product =
            sqf.iter().fold(IntPolynomial::one(), |acc, (f, k)| &acc * &f.pow(*k));
        let unit = p.exact_div(&product)?.and_then(|q| q.coeffs().first().cloned());
        for (f, k) in sqf {
            let mut rest = f;
            for r in integer_roots(&rest) {
                let lin = linear_factor(&r);
                rest = rest.exact_div(&lin)?.expect("root divides");
                linear.push((r, k));
            }
            if rest.degree().unwrap_or(0) >= 2 {
                if let Some(q) = rest.exact_div(&golden_quadratic())? {
                    rest = q;
                    golden.push((golden_quadratic(), k));
                }
            }
            if rest.degree().unwrap_or(0) > 0 {
                residual.push((rest, k));
            }
        }
        residual.sort_by_key(|f| std::cmp::Reverse(f.0.degree()));
        linear.sort_by(|a, b| b.0.cmp(&a.0));
        let mut factors = residual;
        factors.extend(linear.into_iter().map(|(r, k)| (linear_factor(&r), k)));
        factors.extend(golden);
        Ok(Factorization { unit: unit.unwrap_or_else(BigInt::one), factors })
    }
}

/// Integer roots of a polynomial with integer coefficients, by testing
/// divisors of the lowest nonzero coefficient. Skips the search when that
/// coefficient is too large to factor by trial division.
fn integer_roots(p: &IntPolynomial) -> Vec<BigInt> {
    let mut roots = Vec::new();
    let Some(low) = p.coeffs().iter().position(|c| !c.is_zero()) else {
        return roots;
    };
    if low > 0 {
        roots.push(BigInt::zero());
    }
    let Some(c) = p.coeffs()[low].abs().to_u64().filter(|&c| c <= 1 << 40) else {
        return roots;
    };
    let mut d = 1u64;
    while d * d <= c {
        if c % d == 0 {
            for cand in [d, c / d] {
                for r in [BigInt::from(cand), -BigInt::from(cand)] {
                    if !roots.contains(&r) && p.eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        d += 1;
    }
    roots
}

fn write_terms<T>(f: &mut fmt::Formatter<'_>, p: &Polynomial<T>) -> fmt::Result
where
    T: Scalar + Signed + fmt::Display,
{
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (d, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        if d == 0 || !mag.is_one() {
            write!(f, "{mag}")?;
        }
        match d {
            0 => {}
            1 => write!(f, "x")?,
            _ => write!(f, "x^{d}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self)
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.unit);
        }
        if self.unit == -BigInt::one() {
            write!(f, "-")?;
        } else if !self.unit.is_one() {
            write!(f, "{}", self.unit)?;
        }
        for (p, k) in &self.factors {
            if *k == 1 {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[-2, -4, 0, 1]).to_string(), "x^3 - 4x - 2");
        assert_eq!(p(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(p(&[1, 1]).to_string(), "x + 1");
        assert_eq!(p(&[0, -1, 3]).to_string(), "3x^2 - x");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-5]).to_string(), "-5");
    }

    #[test]
    fn divides_examples() {
        assert!(poly_divides(&p(&[-3, 1]), &p(&[-9, 0, 1])).unwrap());
        assert!(!poly_divides(&p(&[-2, 1]), &p(&[-9, 0, 1])).unwrap());
        assert!(matches!(poly_divides(&p(&[]), &p(&[1])), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn exact_division_requires_integrality() {
        assert_eq!(p(&[-9, 0, 1]).exact_div(&p(&[3, 1])).unwrap(), Some(p(&[-3, 1])));
        assert_eq!(p(&[1, 1]).exact_div(&p(&[0, 2])).unwrap(), None);
    }

    #[test]
    fn yun_on_repeated_factors() {
        // (x+1)^3 (x-2) (x^2+x-1)^2
        let target = &(&p(&[1, 1]).pow(3) * &p(&[-2, 1])) * &golden_quadratic().pow(2);
        let sqf = squarefree_decomposition(&target).unwrap();
        assert_eq!(sqf, vec![(p(&[-2, 1]), 1), (golden_quadratic(), 2), (p(&[1, 1]), 3)]);
    }

    #[test]
    fn factor_display_matches_hand_factorization() {
        let cubic = p(&[-2, -4, 0, 1]);
        let target = &(&cubic * &p(&[-1, 1])) * &p(&[1, 1]);
        let f = Factorization::of(&target).unwrap();
        assert_eq!(f.to_string(), "(x^3 - 4x - 2)(x - 1)(x + 1)");
        assert_eq!(f.expand(), target);

        let c5 = &p(&[-2, 1]) * &golden_quadratic().pow(2);
        assert_eq!(Factorization::of(&c5).unwrap().to_string(), "(x - 2)(x^2 + x - 1)^2");
    }

    #[test]
    fn factorization_keeps_unit() {
        let f = Factorization::of(&p(&[2, -2])).unwrap();
        assert_eq!(f.to_string(), "-2(x - 1)");
        assert_eq!(f.expand(), p(&[2, -2]));
    }

    fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-5i64..=5, 1..6).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn division_identity(a in poly_strategy(), d in poly_strategy()) {
            prop_assume!(!d.is_zero());
            let (q, r) = a.to_rational().div_rem(&d.to_rational()).unwrap();
            prop_assert_eq!(&(&q * &d.to_rational()) + &r, a.to_rational());
            prop_assert!(r.degree() < d.degree());
        }

        #[test]
        fn squarefree_product_recovers_input(f in poly_strategy(), g in poly_strategy()) {
            let target = &(&f * &f) * &g;
            prop_assume!(target.degree().unwrap_or(0) > 0);
            let fac = Factorization::of(&target).unwrap();
            prop_assert_eq!(fac.expand(), target);
        }
    }
}
