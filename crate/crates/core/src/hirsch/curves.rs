use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A class `a·[m₂] + b·[l₁]` in `H_1(N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct H1Element {
    pub a: i64,
    pub b: i64,
}

impl H1Element {
    pub const ZERO: H1Element = H1Element { a: 0, b: 0 };

    pub fn new(a: i64, b: i64) -> Self {
        H1Element { a, b }
    }
}

impl Add for H1Element {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        H1Element::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for H1Element {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        H1Element::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for H1Element {
    type Output = Self;
    fn neg(self) -> Self {
        H1Element::new(-self.a, -self.b)
    }
}

impl Mul<H1Element> for i64 {
    type Output = H1Element;
    fn mul(self, x: H1Element) -> H1Element {
        H1Element::new(self * x.a, self * x.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Torus {
    /// `T^out`, basis `m₁, l₁`.
    Out,
    /// `T^in`, basis `m₂, l₂`.
    In,
}

/// The class `p·m + q·l` on one of the two boundary tori.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusCurve {
    pub torus: Torus,
    pub p: i64,
    pub q: i64,
}

impl TorusCurve {
    pub fn new(torus: Torus, p: i64, q: i64) -> Self {
        TorusCurve { torus, p, q }
    }

    /// Nonzero with coprime coordinates.
    pub fn is_simple_closed(&self) -> bool {
        num_integer::gcd(self.p, self.q) == 1
    }
}

impl Add for TorusCurve {
    type Output = TorusCurve;
    fn add(self, o: Self) -> Self {
        assert_eq!(self.torus, o.torus, "curves on different tori");
        TorusCurve::new(self.torus, self.p + o.p, self.q + o.q)
    }
}

/// Image of a boundary class in `H_1(N)`.
pub fn embed_curve(c: &TorusCurve, n: i64) -> H1Element {
    match c.torus {
        Torus::Out => H1Element::new(n * c.p, c.q),
        Torus::In => H1Element::new(c.p, n * c.q),
    }
}

/// The gluing map on homology, `p·m₁ + q·l₁ ↦ (p + q·k)·m₂ + q·l₂`.
pub fn glue_image(c: &TorusCurve, k: i64) -> Result<TorusCurve> {
    if c.torus != Torus::Out {
        return Err(Error::WrongTorus);
    }
    Ok(TorusCurve::new(Torus::In, c.p + c.q * k, c.q))
}
