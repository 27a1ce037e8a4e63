use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An integer Laurent polynomial in `t`, stored sparsely. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Terms", from = "Terms")]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i32, i64>,
}

/// JSON form: `{"terms": [[exp, coeff], ...]}`, decreasing exponent.
#[derive(Serialize, Deserialize)]
struct Terms {
    terms: Vec<(i32, i64)>,
}

impl From<LaurentPolynomial> for Terms {
    fn from(p: LaurentPolynomial) -> Self {
        Terms { terms: p.coeffs.into_iter().rev().collect() }
    }
}

impl From<Terms> for LaurentPolynomial {
    fn from(t: Terms) -> Self {
        LaurentPolynomial::from_terms(t.terms)
    }
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `t`
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        LaurentPolynomial { coeffs }
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry = entry.checked_add(coeff).expect("coefficient overflow");
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0) == Some(&1)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn low_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn high_degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// `high - low`; zero for the zero polynomial.
    pub fn span(&self) -> i32 {
        match (self.low_degree(), self.high_degree()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn leading_coeff(&self) -> i64 {
        self.coeffs.values().next_back().copied().unwrap_or(0)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPolynomial { coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn reciprocal(&self) -> Self {
        LaurentPolynomial { coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Value at an integer point; `t = 0` is rejected for negative powers.
    pub fn eval(&self, t: i64) -> Option<i128> {
        let mut acc: i128 = 0;
        for (&e, &c) in &self.coeffs {
            let base = if e < 0 {
                match t {
                    1 => 1,
                    -1 => -1,
                    _ => return None,
                }
            } else {
                t as i128
            };
            acc += c as i128 * base.checked_pow(e.unsigned_abs())?;
        }
        Some(acc)
    }

    /// The associate with lowest exponent 0 and positive leading
    /// coefficient. Two polynomials differ by a unit `±t^k` iff their
    /// unit-normalized forms are equal.
    pub fn unit_normalize(&self) -> Self {
        let Some(lo) = self.low_degree() else {
            return Self::zero();
        };
        let p = self.shift(-lo);
        if p.leading_coeff() < 0 {
            -p
        } else {
            p
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder in `Z[t, t⁻¹]`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let d_hi = divisor.high_degree()?;
        let d_lead = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_hi) = rem.high_degree() {
            if rem.span() < divisor.span() {
                return None;
            }
            let r_lead = rem.leading_coeff();
            if r_lead % d_lead != 0 {
                return None;
            }
            let term = Self::monomial(r_lead / d_lead, r_hi - d_hi);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: Self) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: Self) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: Self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: Self) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Sparse signed terms in decreasing exponent, e.g. `t^2-3t+1`, `-t^-1+2`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&e, &c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            let mag = c.unsigned_abs();
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if e == 0 {
                write!(f, "{sign}{mag}")?;
            } else if mag == 1 {
                write!(f, "{sign}{var}")?;
            } else {
                write!(f, "{sign}{mag}{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(2, 1), (1, -3), (0, 1)]).to_string(), "t^2-3t+1");
        assert_eq!(p(&[(-1, -1), (0, 2)]).to_string(), "2-t^-1");
        assert_eq!(p(&[(1, -1)]).to_string(), "-t");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(LaurentPolynomial::one().to_string(), "1");
    }

    #[test]
    fn zeros_are_dropped() {
        let x = p(&[(1, 2), (1, -2), (0, 5)]);
        assert_eq!(x, LaurentPolynomial::constant(5));
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn division() {
        // 1 + t^3 = (1 + t)(1 - t + t^2)
        let num = p(&[(0, 1), (3, 1)]);
        let den = p(&[(0, 1), (1, 1)]);
        assert_eq!(num.exact_div(&den).unwrap(), p(&[(0, 1), (1, -1), (2, 1)]));
        assert_eq!(p(&[(0, 1), (2, 1)]).exact_div(&den), None);
        assert_eq!(p(&[(1, 3)]).exact_div(&p(&[(0, 2)])), None);
        assert_eq!(p(&[(-2, 4)]).exact_div(&p(&[(1, 2)])).unwrap(), p(&[(-3, 2)]));
        assert_eq!(LaurentPolynomial::zero().exact_div(&den).unwrap(), LaurentPolynomial::zero());
    }

    #[test]
    fn normalization_and_eval() {
        let x = p(&[(-3, -1), (-2, 3), (-1, -1)]);
        assert_eq!(x.unit_normalize(), p(&[(0, 1), (1, -3), (2, 1)]));
        assert_eq!(x.eval(1), Some(1));
        assert_eq!(x.eval(2), None);
        assert_eq!(p(&[(2, 1), (0, -1)]).eval(3), Some(8));
    }

    #[test]
    fn json_terms() {
        let x = p(&[(2, 1), (1, -3), (0, 1)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"terms":[[2,1],[1,-3],[0,1]]}"#);
        assert_eq!(serde_json::from_str::<LaurentPolynomial>(&s).unwrap(), x);
    }

    fn poly() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-4i32..5, -9i64..10), 0..6).prop_map(LaurentPolynomial::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn product_divides(a in poly(), b in poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
        }
    }
}
