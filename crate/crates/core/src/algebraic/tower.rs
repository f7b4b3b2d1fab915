use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Signed, Zero};

use crate::arith::cplx::{Disc, GaussRat};
use crate::arith::roots::RootSet;
use crate::arith::upoly::{self as up, UPoly};
use crate::arith::{fmt_rat, Field, Rat, QQ};

/// A simple algebraic extension of the rationals, `Q(θ)`, with one chosen
/// complex root `θ` of an irreducible monic polynomial.
///
/// Towers built by [`super::adjoin_root`] or [`super::roots_over`] keep a
/// link to the field they extend together with the image of that field's
/// generator, so every level of a `RootOf` chain remains available.
#[derive(Clone)]
pub struct Tower(pub(crate) Arc<Inner>);

pub(crate) struct Inner {
    pub minpoly: Vec<Rat>,
    pub index: usize,
    /// Certified disc for `θ` at construction, used for printing.
    pub region: Disc,
    pub roots: Mutex<RootSet>,
    pub parent: Option<Embedding>,
}

#[derive(Clone)]
pub(crate) struct Embedding {
    pub field: Tower,
    /// Coordinates of the parent generator in this field.
    pub image: Vec<Rat>,
    /// The polynomial over the parent that this level adjoined a root of.
    pub defining: Vec<Vec<Rat>>,
    /// Coordinates of the adjoined root in this field.
    pub root: Vec<Rat>,
}

impl Tower {
    pub fn rationals() -> Tower {
        Tower::from_minpoly(vec![Rat::zero(), Rat::one()], 0, None)
    }

    pub(crate) fn from_minpoly(minpoly: Vec<Rat>, index: usize, parent: Option<Embedding>) -> Tower {
        let roots = RootSet::isolate(&minpoly);
        Tower::with_roots(roots, index, parent)
    }

    pub(crate) fn with_roots(roots: RootSet, index: usize, parent: Option<Embedding>) -> Tower {
        Tower(Arc::new(Inner {
            minpoly: roots.poly.clone(),
            index,
            region: roots.discs[index].clone(),
            roots: Mutex::new(roots),
            parent,
        }))
    }

    /// Degree over the rationals.
    pub fn degree(&self) -> usize {
        self.0.minpoly.len() - 1
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    /// Monic minimal polynomial of the primitive generator.
    pub fn minpoly(&self) -> &[Rat] {
        &self.0.minpoly
    }

    /// Position of the generator among the sorted roots of the minimal polynomial.
    pub fn root_index(&self) -> usize {
        self.0.index
    }

    /// Isolating disc of the generator recorded at construction.
    pub fn region(&self) -> &Disc {
        &self.0.region
    }

    /// Same field with the same embedding into the complex numbers.
    pub fn same(&self, other: &Tower) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.minpoly == other.0.minpoly && self.0.index == other.0.index)
    }

    pub fn parent(&self) -> Option<&Tower> {
        self.0.parent.as_ref().map(|e| &e.field)
    }

    /// Chain of fields from the rationals up to `self`.
    pub fn levels(&self) -> Vec<Tower> {
        let mut out = vec![self.clone()];
        let mut cur = self.clone();
        while let Some(p) = cur.parent().cloned() {
            out.push(p.clone());
            cur = p;
        }
        out.reverse();
        out
    }

    /// Reduces a polynomial in the generator modulo the minimal polynomial.
    pub fn reduce(&self, a: &[Rat]) -> Vec<Rat> {
        up::rem(&QQ, a, &self.0.minpoly)
    }

    /// Disc containing the generator with radius at most `rad`.
    pub fn generator_disc(&self, rad: &Rat) -> Disc {
        let mut rs = self.0.roots.lock().expect("root set lock");
        rs.refine(self.0.index, rad);
        rs.discs[self.0.index].clone()
    }

    /// Disc containing the value of `a(θ)`, of radius at most `rad`.
    pub fn enclose(&self, a: &[Rat], rad: &Rat) -> Disc {
        if a.len() <= 1 {
            let c = a.first().cloned().unwrap_or_else(Rat::zero);
            return Disc::point(GaussRat::real(c));
        }
        let bound: Rat = a.iter().map(|c| c.abs()).sum();
        let n = a.len() as i64;
        let mut r = rad / (Rat::from_integer(n.into()) * (bound + Rat::one()));
        loop {
            let d = self.generator_disc(&r);
            let e = enclose_at(&d, a);
            if e.rad <= *rad {
                return e;
            }
            r /= Rat::from_integer(16.into());
        }
    }

    /// Maps an element of a field lower in this tower's chain into `self`.
    pub fn embed_coords(&self, from: &Tower, a: &[Rat]) -> Option<Vec<Rat>> {
        if self.same(from) {
            return Some(a.to_vec());
        }
        let emb = self.0.parent.as_ref()?;
        let below = emb.field.embed_coords(from, a)?;
        Some(self.eval_at(&below, &emb.image))
    }

    /// `a(φ)` for `a` a polynomial over the rationals and `φ` an element.
    pub(crate) fn eval_at(&self, a: &[Rat], phi: &[Rat]) -> Vec<Rat> {
        a.iter().rev().fold(Vec::new(), |acc, c| {
            self.add(&self.mul(&acc, &phi.to_vec()), &self.from_rat(c))
        })
    }

    /// The polynomial over the parent level whose root this level adjoined.
    pub fn defining_poly(&self) -> Option<&[Vec<Rat>]> {
        self.0.parent.as_ref().map(|e| e.defining.as_slice())
    }

    /// Coordinates of the root adjoined at this level.
    pub fn adjoined_root(&self) -> Option<&[Rat]> {
        self.0.parent.as_ref().map(|e| e.root.as_slice())
    }

    /// `RootOf(poly, region=[lo,hi]×[lo,hi], index=k)` for the primitive generator.
    pub fn root_of(&self) -> String {
        format!(
            "RootOf({}, region={}, index={})",
            fmt_upoly(&self.0.minpoly, "Z"),
            self.0.region,
            self.0.index
        )
    }

    /// Nested description of every level.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for (k, lvl) in self.levels().iter().enumerate().skip(1) {
            let parent = lvl.parent().expect("level above the rationals");
            let def = lvl.defining_poly().expect("level above the rationals");
            let coeffs: Vec<String> = def.iter().map(|c| parent.fmt_elem(c)).collect();
            parts.push(format!(
                "L{k} = Q(L{}) adjoin Z with [{}] = 0; generator {}",
                k - 1,
                coeffs.join(", "),
                lvl.root_of()
            ));
        }
        if parts.is_empty() {
            "Q".into()
        } else {
            parts.join("; ")
        }
    }

    /// Prints an element as a polynomial in the `RootOf` generator.
    pub fn fmt_elem(&self, a: &[Rat]) -> String {
        if a.len() <= 1 || self.is_rationals() {
            return fmt_rat(&a.first().cloned().unwrap_or_else(Rat::zero));
        }
        fmt_upoly(a, &self.root_of())
    }
}

/// Enclosure of `a(z)` for `z` in disc `d`, using
/// `|z^k - c^k| ≤ (|c| + r)^k - |c|^k`.
pub(crate) fn enclose_at(d: &Disc, a: &[Rat]) -> Disc {
    let c = &d.center;
    let mut val = GaussRat::zero();
    for coef in a.iter().rev() {
        val = val.mul(c).add(&GaussRat::real(coef.clone()));
    }
    let ac = c.abs_upper();
    let big = &ac + &d.rad;
    let mut pc = Rat::one();
    let mut pb = Rat::one();
    let mut rad = Rat::zero();
    for coef in a.iter().skip(1) {
        pc *= &ac;
        pb *= &big;
        rad += coef.abs() * (&pb - &pc);
    }
    Disc { center: val, rad }
}

pub(crate) fn fmt_upoly(p: &[Rat], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&fmt_rat(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{mono}", fmt_rat(&a)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.root_of())
    }
}

impl Field for Tower {
    type Elem = Vec<Rat>;

    fn zero(&self) -> Vec<Rat> {
        Vec::new()
    }
    fn one(&self) -> Vec<Rat> {
        vec![Rat::one()]
    }
    fn is_zero(&self, a: &Vec<Rat>) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Vec<Rat>, b: &Vec<Rat>) -> Vec<Rat> {
        up::add(&QQ, a, b)
    }
    fn sub(&self, a: &Vec<Rat>, b: &Vec<Rat>) -> Vec<Rat> {
        up::sub(&QQ, a, b)
    }
    fn mul(&self, a: &Vec<Rat>, b: &Vec<Rat>) -> Vec<Rat> {
        self.reduce(&up::mul(&QQ, a, b))
    }
    fn neg(&self, a: &Vec<Rat>) -> Vec<Rat> {
        up::neg(&QQ, a)
    }
    fn inv(&self, a: &Vec<Rat>) -> Option<Vec<Rat>> {
        if a.is_empty() {
            return None;
        }
        let (g, s, _) = up::ext_gcd(&QQ, a, &self.0.minpoly);
        debug_assert_eq!(g, vec![Rat::one()]);
        Some(self.reduce(&s))
    }
    fn from_rat(&self, r: &Rat) -> Vec<Rat> {
        up::trim(&QQ, vec![r.clone()])
    }
}

/// Polynomials with coefficients in a field of the tower.
pub type KPoly = UPoly<Vec<Rat>>;
