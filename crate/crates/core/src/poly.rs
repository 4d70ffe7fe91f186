//! Sparse polynomials in `x`, `y` and `b` with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Coefficient ring of [`Poly`].
pub trait Coefficient: Signed + Clone + fmt::Display {}

impl<T: Signed + Clone + fmt::Display> Coefficient for T {}

/// Exponents of a monomial `x^x y^y b^b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: usize,
    pub y: usize,
    pub b: usize,
}

impl Monomial {
    pub fn new(x: usize, y: usize, b: usize) -> Self {
        Self { x, y, b }
    }

    fn key(self) -> (usize, usize, usize) {
        (self.y, self.x, self.b)
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y, self.b + other.b)
    }
}

/// Ascending `y`, then ascending `x`, then ascending `b`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::default(), c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `x^x y^y b^b` with coefficient 1.
    pub fn monomial(x: usize, y: usize, b: usize) -> Self {
        Self::term(Monomial::new(x, y, b), C::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 0)
    }

    pub fn b() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// `Σ c_i x^i` from coefficients in ascending degree.
    pub fn from_x_coeffs(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(Monomial::new(i, 0, 0), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &C)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, x: usize, y: usize, b: usize) -> C {
        self.terms
            .get(&Monomial::new(x, y, b))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn has_b(&self) -> bool {
        self.terms.keys().any(|m| m.b > 0)
    }

    pub fn max_y(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.y).max()
    }

    pub fn max_x(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn min_x(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.x).min()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn map_monomials(&self, f: impl Fn(Monomial) -> Monomial) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            p.add_term(f(*m), c.clone());
        }
        p
    }

    /// Product dropping every monomial of `y`-degree above `max_y`.
    pub fn mul_truncated(&self, other: &Self, max_y: Option<usize>) -> Self {
        let mut p = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.times(*m2);
                if max_y.is_none_or(|n| m.y <= n) {
                    p.add_term(m, c1.clone() * c2.clone());
                }
            }
        }
        p
    }

    pub fn truncate_y(&self, max_y: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.y <= max_y)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn shift(&self, x: usize, y: usize, b: usize) -> Self {
        self.map_monomials(|m| m.times(Monomial::new(x, y, b)))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut p = Self::zero();
        for (m, v) in &self.terms {
            p.add_term(*m, v.clone() * c.clone());
        }
        p
    }

    pub fn at_x_one(&self) -> Self {
        self.map_monomials(|m| Monomial::new(0, m.y, m.b))
    }

    pub fn at_y_one(&self) -> Self {
        self.map_monomials(|m| Monomial::new(m.x, 0, m.b))
    }

    pub fn at_b_one(&self) -> Self {
        self.map_monomials(|m| Monomial::new(m.x, m.y, 0))
    }

    /// Value at `x = y = b = 1`.
    pub fn eval_one(&self) -> C {
        self.terms
            .values()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Coefficient of `y^k`, as a polynomial in `x` and `b`.
    pub fn y_slice(&self, k: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.y == k)
                .map(|(m, c)| (Monomial::new(m.x, 0, m.b), c.clone()))
                .collect(),
        }
    }

    /// Coefficients of `x^0, x^1, …` at `y = b = 0`.
    pub fn x_coeffs(&self) -> Vec<C> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            if m.y == 0 && m.b == 0 {
                if out.len() <= m.x {
                    out.resize(m.x + 1, C::zero());
                }
                out[m.x] = c.clone();
            }
        }
        out
    }

    /// `[[x, y, c], …]`, or `[[x, y, b, c], …]` when `b` occurs. Coefficients
    /// fitting an `i64` are numbers, larger ones decimal strings.
    pub fn to_json(&self) -> Value {
        let with_b = self.has_b();
        let rows = self
            .terms
            .iter()
            .map(|(m, c)| {
                let text = c.to_string();
                let coeff = match text.parse::<i64>() {
                    Ok(v) => Value::from(v),
                    Err(_) => Value::from(text),
                };
                let mut row = vec![Value::from(m.x), Value::from(m.y)];
                if with_b {
                    row.push(Value::from(m.b));
                }
                row.push(coeff);
                Value::Array(row)
            })
            .collect();
        Value::Array(rows)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial must be an array".into()))?;
        let mut p = Self::zero();
        for row in rows {
            let row = row
                .as_array()
                .filter(|r| r.len() == 3 || r.len() == 4)
                .ok_or_else(|| Error::Parse(format!("bad monomial {row}")))?;
            let exp = |v: &Value| {
                v.as_u64()
                    .map(|e| e as usize)
                    .ok_or_else(|| Error::Parse(format!("bad exponent {v}")))
            };
            let b = if row.len() == 4 { exp(&row[2])? } else { 0 };
            let c = match &row[row.len() - 1] {
                Value::Number(n) => n.to_string(),
                Value::String(s) => s.clone(),
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            let c = C::from_str_radix(&c, 10)
                .map_err(|_| Error::Parse(format!("bad coefficient {c}")))?;
            p.add_term(Monomial::new(exp(&row[0])?, exp(&row[1])?, b), c);
        }
        Ok(p)
    }
}

impl<C: Coefficient> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Coefficient> Add<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(*m, c.clone());
        }
        p
    }
}

impl<C: Coefficient> Sub<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(*m, -c.clone());
        }
        p
    }
}

impl<C: Coefficient> Mul<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        self.mul_truncated(rhs, None)
    }
}

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl<C: Coefficient> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$method(rhs)
            }
        }
        impl<C: Coefficient> $tr<Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Writes `c·mono` with the sign handled by the caller.
fn write_term<C: Coefficient>(out: &mut String, c: &C, mono: &str) {
    if mono.is_empty() {
        out.push_str(&c.to_string());
    } else if !c.is_one() {
        out.push_str(&c.to_string());
        out.push_str(mono);
    } else {
        out.push_str(mono);
    }
}

/// Joins signed terms as `a + b - c`.
fn join_terms<C: Coefficient>(terms: &[(C, String)]) -> String {
    let mut out = String::new();
    for (i, (c, mono)) in terms.iter().enumerate() {
        let magnitude = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        write_term(&mut out, &magnitude, mono);
    }
    out
}

/// Ascending `x` within ascending `y`, each `y`-degree grouped:
/// `1 + xy + (x + 2x^2)y^2`.
impl<C: Coefficient> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut groups: BTreeMap<usize, Vec<(C, String)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mono = power("x", m.x) + &power("b", m.b);
            groups.entry(m.y).or_default().push((c.clone(), mono));
        }
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (y, terms) in groups {
            let ypow = power("y", y);
            if terms.len() == 1 {
                let (c, mono) = &terms[0];
                let mono = mono.clone() + &ypow;
                parts.push((c.is_negative(), {
                    let mut s = String::new();
                    write_term(&mut s, &c.abs(), &mono);
                    s
                }));
            } else if ypow.is_empty() {
                let body = join_terms(&terms);
                match body.strip_prefix('-') {
                    Some(rest) if parts.is_empty() => parts.push((true, rest.to_string())),
                    _ => parts.push((false, body)),
                }
            } else {
                parts.push((false, format!("({}){ypow}", join_terms(&terms))));
            }
        }
        for (i, (negative, text)) in parts.iter().enumerate() {
            if i == 0 {
                if *negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if *negative { " - " } else { " + " })?;
            }
            f.write_str(text)?;
        }
        Ok(())
    }
}
