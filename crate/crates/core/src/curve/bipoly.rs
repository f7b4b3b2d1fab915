use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_rat, rat, Rat};
use crate::error::{Error, Result};

/// A polynomial in `x` and `y` with rational coefficients.
///
/// Terms are keyed by `(i, j)` for the monomial `x^i y^j`. Zero coefficients
/// are never stored, so structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// Builds a polynomial from `(i, j, coefficient)` triples. Repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Rat)>,
    {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Integer-coefficient shorthand, mostly for tests.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| (i, j, rat(c))))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rat)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Lowest total degree of a stored term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    /// Leading term in graded-lex order (total degree first, then the power of `x`).
    pub fn leading_term(&self) -> Option<((u32, u32), &Rat)> {
        self.terms
            .iter()
            .max_by_key(|(&(i, j), _)| (i + j, i))
            .map(|(k, v)| (*k, v))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * s)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * pow_rat(x, i) * pow_rat(y, j);
        }
        acc
    }

    /// Substitutes `x = x0`, returning a polynomial in `y` (lowest degree first).
    pub fn eval_x(&self, x0: &Rat) -> Vec<Rat> {
        let n = self.degree_y().map_or(0, |d| d as usize + 1);
        let mut out = vec![Rat::zero(); n];
        for (&(i, j), c) in &self.terms {
            out[j as usize] += c * pow_rat(x0, i);
        }
        trim(out)
    }

    /// Substitutes `y = y0`, returning a polynomial in `x`.
    pub fn eval_y(&self, y0: &Rat) -> Vec<Rat> {
        self.swap_xy().eval_x(y0)
    }

    pub fn swap_xy(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn diff_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| (i - 1, j, c * rat(i as i64))),
        )
    }

    pub fn diff_y(&self) -> Self {
        self.swap_xy().diff_x().swap_xy()
    }

    /// Embeds a univariate polynomial in `x`.
    pub fn from_x_poly(p: &[Rat]) -> Self {
        Self::from_terms(p.iter().enumerate().map(|(i, c)| (i as u32, 0, c.clone())))
    }

    /// Embeds a univariate polynomial in `y`.
    pub fn from_y_univariate(p: &[Rat]) -> Self {
        Self::from_x_poly(p).swap_xy()
    }

    /// Coefficients with respect to `y`: entry `j` is the polynomial in `x`
    /// multiplying `y^j`.
    pub fn to_y_poly(&self) -> Vec<Vec<Rat>> {
        let ny = self.degree_y().map_or(0, |d| d as usize + 1);
        let mut out: Vec<Vec<Rat>> = vec![Vec::new(); ny];
        for (&(i, j), c) in &self.terms {
            let row = &mut out[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, Rat::zero());
            }
            row[i as usize] = c.clone();
        }
        out
    }

    pub fn from_y_poly(p: &[Vec<Rat>]) -> Self {
        let mut out = Self::zero();
        for (j, row) in p.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                out.add_term(i as u32, j as u32, c.clone());
            }
        }
        out
    }

    /// Multiplicity of the curve at the origin: the lowest total degree.
    pub fn multiplicity_at_origin(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.coeff(0, 0).is_zero() {
            return Err(Error::OriginNotOnCurve);
        }
        Ok(self.order().expect("nonzero"))
    }

    /// Lowest-degree homogeneous part.
    pub fn tangent_cone(&self) -> Result<Self> {
        let m = self.multiplicity_at_origin()?;
        Ok(self.homogeneous_part(m))
    }

    /// Returns `f(x + p.0, y + p.1)`.
    pub fn translate(&self, p: &(Rat, Rat)) -> Self {
        let sx = BiPoly::from_terms([(1, 0, Rat::one()), (0, 0, p.0.clone())]);
        let sy = BiPoly::from_terms([(0, 1, Rat::one()), (0, 0, p.1.clone())]);
        self.substitute(&sx, &sy)
    }

    /// Substitutes `(x, y) <- (m11 x + m12 y, m21 x + m22 y)`.
    pub fn linear_change(&self, m: &[[Rat; 2]; 2]) -> Result<Self> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let sx = BiPoly::from_terms([(1, 0, m[0][0].clone()), (0, 1, m[0][1].clone())]);
        let sy = BiPoly::from_terms([(1, 0, m[1][0].clone()), (0, 1, m[1][1].clone())]);
        Ok(self.substitute(&sx, &sy))
    }

    /// Replaces `x` by `sx` and `y` by `sy`.
    pub fn substitute(&self, sx: &BiPoly, sy: &BiPoly) -> Self {
        let dx = self.degree_x().unwrap_or(0);
        let dy = self.degree_y().unwrap_or(0);
        let px = powers(sx, dx);
        let py = powers(sy, dy);
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            let t = (&px[i as usize] * &py[j as usize]).scale(c);
            out = &out + &t;
        }
        out
    }

    /// Divides by `x^kx y^ky`; callers ensure divisibility.
    pub fn shift_down(&self, kx: u32, ky: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i - kx, j - ky), c.clone()))
                .collect(),
        }
    }

    /// Largest `k` with `x^k` dividing the polynomial.
    pub fn x_adic_order(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).min().unwrap_or(0)
    }

    /// Largest `k` with `y^k` dividing the polynomial.
    pub fn y_adic_order(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).min().unwrap_or(0)
    }

    /// Scales to integer coefficients with gcd 1 and a positive graded-lex
    /// leading coefficient. Returns the scalar `s` with `self = s * result`.
    pub fn normalize(&self) -> (Rat, BiPoly) {
        if self.is_zero() {
            return (Rat::one(), Self::zero());
        }
        let coeffs: Vec<Rat> = self.terms.values().cloned().collect();
        let (mut content, _) = crate::arith::factor::primitive_part(&coeffs);
        content = content.abs();
        let lead = self.leading_term().expect("nonzero").1;
        if lead.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }
}

fn pow_rat(x: &Rat, e: u32) -> Rat {
    num_traits::pow(x.clone(), e as usize)
}

fn powers(p: &BiPoly, n: u32) -> Vec<BiPoly> {
    let mut out = vec![BiPoly::one()];
    for k in 0..n as usize {
        let next = &out[k] * p;
        out.push(next);
    }
    out
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &o.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rat::one())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, o: BiPoly) -> BiPoly {
                (&self).$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

fn fmt_monomial(i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("y".to_string()),
        _ => parts.push(format!("y^{j}")),
    }
    parts.join("*")
}

/// Prints in graded-lex descending order using the same grammar the parser
/// accepts, e.g. `x^2*y + 2*x*y^2 - 1/2*y^3`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = fmt_monomial(i, j);
            if mono.is_empty() {
                write!(f, "{}", fmt_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rat(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}
