use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};

use super::tower::Tower;
use crate::arith::cplx::Disc;
use crate::arith::linalg::charpoly;
use crate::arith::roots::RootSet;
use crate::arith::upoly as up;
use crate::arith::{ratio, Field, Rat, QQ};
use crate::error::{Error, Result};

/// An element of a [`Tower`], stored as a reduced polynomial in the
/// primitive generator.
#[derive(Clone)]
pub struct AlgebraicNumber {
    field: Tower,
    coords: Vec<Rat>,
    canon: OnceLock<Arc<Canon>>,
}

/// Field-independent description of a complex algebraic number: its monic
/// minimal polynomial over the rationals and its position among that
/// polynomial's certified roots.
#[derive(Clone, Debug)]
pub struct Canon {
    pub minpoly: Vec<Rat>,
    pub roots: RootSet,
    pub index: usize,
}

impl Canon {
    pub fn is_real(&self) -> bool {
        self.roots.real[self.index]
    }

    pub fn conj_index(&self) -> usize {
        self.roots.conj[self.index]
    }

    pub fn same_number(&self, o: &Canon) -> bool {
        self.minpoly == o.minpoly && self.index == o.index
    }

    pub fn is_conjugate_of(&self, o: &Canon) -> bool {
        self.minpoly == o.minpoly && self.index == o.conj_index()
    }

    pub fn disc(&self) -> &Disc {
        &self.roots.discs[self.index]
    }
}

impl AlgebraicNumber {
    pub fn new(field: &Tower, coords: Vec<Rat>) -> Self {
        let coords = field.reduce(&coords);
        AlgebraicNumber { field: field.clone(), coords, canon: OnceLock::new() }
    }

    pub fn from_rat(field: &Tower, r: Rat) -> Self {
        Self::new(field, vec![r])
    }

    pub fn zero(field: &Tower) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Tower) -> Self {
        Self::from_rat(field, Rat::one())
    }

    /// The primitive generator of the field.
    pub fn generator(field: &Tower) -> Self {
        Self::new(field, vec![Rat::zero(), Rat::one()])
    }

    pub fn field(&self) -> &Tower {
        &self.field
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self.coords.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coords[0].clone()),
            _ => None,
        }
    }

    fn check(&self, o: &Self) {
        assert!(self.field.same(&o.field), "operands live in different fields");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        Self::new(&self.field, self.field.add(&self.coords, &o.coords))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        Self::new(&self.field, self.field.sub(&self.coords, &o.coords))
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        Self::new(&self.field, self.field.mul(&self.coords, &o.coords))
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.field, self.field.neg(&self.coords))
    }

    pub fn inv(&self) -> Result<Self> {
        self.field
            .inv(&self.coords)
            .map(|c| Self::new(&self.field, c))
            .ok_or(Error::DivisionByZero)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::new(&self.field, self.field.pow(&self.coords, e))
    }

    /// Image in a field higher up the same tower.
    pub fn embed(&self, into: &Tower) -> Option<Self> {
        into.embed_coords(&self.field, &self.coords)
            .map(|c| Self::new(into, c))
    }

    /// Disc containing the number, of radius at most `rad`.
    pub fn enclose(&self, rad: &Rat) -> Disc {
        self.field.enclose(&self.coords, rad)
    }

    /// Minimal polynomial over the rationals (monic).
    pub fn minpoly(&self) -> Vec<Rat> {
        self.canon().minpoly.clone()
    }

    pub fn canon(&self) -> &Canon {
        self.canon.get_or_init(|| Arc::new(self.compute_canon()))
    }

    fn compute_canon(&self) -> Canon {
        if let Some(r) = self.as_rational() {
            let minpoly = vec![-r, Rat::one()];
            let roots = RootSet::isolate(&minpoly);
            return Canon { minpoly, roots, index: 0 };
        }
        let n = self.field.degree();
        let mut m = vec![vec![Rat::zero(); n]; n];
        let mut col = self.coords.clone();
        let theta = vec![Rat::zero(), Rat::one()];
        for j in 0..n {
            for (i, c) in col.iter().enumerate() {
                m[i][j] = c.clone();
            }
            col = self.field.mul(&col, &theta);
        }
        let minpoly = up::square_free_part(&QQ, &charpoly(&m));
        let mut roots = RootSet::isolate(&minpoly);
        let mut rad = ratio(1, 1 << 10);
        loop {
            let e = self.enclose(&rad);
            if let Some(i) = roots.locate(&e) {
                return Canon { minpoly, roots, index: i };
            }
            for i in 0..roots.len() {
                roots.refine(i, &rad);
            }
            rad /= Rat::from_integer(256.into());
        }
    }

    /// Exact equality, also across different fields.
    pub fn equals(&self, o: &Self) -> bool {
        if self.field.same(&o.field) {
            return self.coords == o.coords;
        }
        self.canon().same_number(o.canon())
    }

    pub fn is_real(&self) -> bool {
        self.as_rational().is_some() || self.canon().is_real()
    }

    /// Whether `o` is the complex conjugate of `self`.
    pub fn is_conjugate_of(&self, o: &Self) -> bool {
        if let (Some(a), Some(b)) = (self.as_rational(), o.as_rational()) {
            return a == b;
        }
        self.canon().is_conjugate_of(o.canon())
    }

    /// Sign of a real number.
    pub fn signum(&self) -> Result<Ordering> {
        compare_real(self, &Self::zero(&self.field))
    }
}

/// Exact order of two real algebraic numbers.
pub fn compare_real(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<Ordering> {
    if !a.is_real() || !b.is_real() {
        return Err(Error::NotReal);
    }
    if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
        return Ok(x.cmp(&y));
    }
    if a.equals(b) {
        return Ok(Ordering::Equal);
    }
    let (ca, cb) = (a.canon(), b.canon());
    let mut ra = ca.roots.clone();
    let mut rb = cb.roots.clone();
    let mut rad = ratio(1, 1 << 8);
    loop {
        let da = &ra.discs[ca.index];
        let db = &rb.discs[cb.index];
        if !da.intersects(db) {
            return Ok(da.center.re.cmp(&db.center.re));
        }
        ra.refine(ca.index, &rad);
        rb.refine(cb.index, &rad);
        rad /= Rat::from_integer(256.into());
    }
}

/// Pairs each non-real element with a conjugate partner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatePairing {
    pub pairs: Vec<(usize, usize)>,
    pub fixed: Vec<usize>,
}

pub fn conjugate_pairs(xs: &[AlgebraicNumber]) -> Result<ConjugatePairing> {
    let mut used = vec![false; xs.len()];
    let mut pairs = Vec::new();
    let mut fixed = Vec::new();
    for i in 0..xs.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        if xs[i].is_real() {
            fixed.push(i);
            continue;
        }
        let j = (i + 1..xs.len())
            .find(|&j| !used[j] && xs[j].is_conjugate_of(&xs[i]))
            .ok_or(Error::NotConjugationClosed)?;
        used[j] = true;
        pairs.push((i, j));
    }
    Ok(ConjugatePairing { pairs, fixed })
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.fmt_elem(&self.coords))
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn abs_lower(d: &Disc) -> Rat {
    let v = d.center.abs_lower() - &d.rad;
    if v.is_negative() {
        Rat::zero()
    } else {
        v
    }
}
