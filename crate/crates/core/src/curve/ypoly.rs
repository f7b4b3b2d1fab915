//! Polynomials in `y` with coefficients in `Q[x]`, used by the gcd and
//! factorization routines.

use num_traits::{One, Zero};

use super::BiPoly;
use crate::arith::upoly::{self as up};
use crate::arith::{Rat, QQ};

pub type XPoly = Vec<Rat>;
pub type YPoly = Vec<XPoly>;

pub fn from_bi(f: &BiPoly) -> YPoly {
    trim(f.to_y_poly().into_iter().map(|c| up::trim(&QQ, c)).collect())
}

pub fn to_bi(p: &YPoly) -> BiPoly {
    BiPoly::from_y_poly(p)
}

pub fn trim(mut p: YPoly) -> YPoly {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
    p
}

pub fn deg(p: &YPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn lc(p: &YPoly) -> &XPoly {
    p.last().expect("nonzero")
}

/// Monic gcd of the coefficients.
pub fn content(p: &YPoly) -> XPoly {
    let mut g: XPoly = Vec::new();
    for c in p {
        g = up::gcd(&QQ, &g, c);
        if g.len() == 1 {
            break;
        }
    }
    g
}

pub fn div_x(p: &YPoly, c: &XPoly) -> YPoly {
    p.iter()
        .map(|a| up::exact_div(&QQ, a, c).expect("content divides"))
        .collect()
}

pub fn primitive(p: &YPoly) -> YPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let c = content(p);
    div_x(p, &c)
}

pub fn mul(a: &YPoly, b: &YPoly) -> YPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: YPoly = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = up::add(&QQ, &out[i + j], &up::mul(&QQ, ai, bj));
        }
    }
    trim(out)
}

pub fn sub(a: &YPoly, b: &YPoly) -> YPoly {
    let n = a.len().max(b.len());
    let e: XPoly = Vec::new();
    trim(
        (0..n)
            .map(|i| up::sub(&QQ, a.get(i).unwrap_or(&e), b.get(i).unwrap_or(&e)))
            .collect(),
    )
}

pub fn scale_x(a: &YPoly, c: &XPoly) -> YPoly {
    trim(a.iter().map(|ai| up::mul(&QQ, ai, c)).collect())
}

pub fn diff_y(a: &YPoly) -> YPoly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| up::scale(&QQ, c, &Rat::from_integer((j as i64).into())))
            .collect(),
    )
}

/// Pseudo-remainder of `a` by `b` with respect to `y`.
pub fn prem(a: &YPoly, b: &YPoly) -> YPoly {
    let db = deg(b).expect("nonzero divisor");
    let lb = lc(b).clone();
    let mut r = a.clone();
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let lr = lc(&r).clone();
        let mut t: YPoly = vec![Vec::new(); dr - db];
        t.extend(b.iter().map(|c| up::mul(&QQ, c, &lr)));
        r = sub(&scale_x(&r, &lb), &t);
    }
    r
}

/// Exact quotient `a / b` in `Q[x][y]`, or `None` if `b` does not divide `a`.
pub fn exact_div(a: &YPoly, b: &YPoly) -> Option<YPoly> {
    let db = deg(b)?;
    let lb = lc(b).clone();
    let mut r = a.clone();
    let mut q: YPoly = Vec::new();
    while let Some(dr) = deg(&r) {
        if dr < db {
            return None;
        }
        let c = up::exact_div(&QQ, lc(&r), &lb)?;
        let mut t: YPoly = vec![Vec::new(); dr - db];
        t.push(c.clone());
        if q.len() < t.len() {
            q.resize(t.len(), Vec::new());
        }
        q[dr - db] = c;
        r = sub(&r, &mul(&t, b));
        if deg(&r).is_some_and(|d| d >= dr) {
            return None;
        }
    }
    Some(trim(q))
}

/// Gcd of two polynomials; the `y`-primitive part is normalized so that
/// its leading coefficient in `x` is monic.
pub fn gcd(a: &YPoly, b: &YPoly) -> YPoly {
    if a.is_empty() {
        return normalize(b);
    }
    if b.is_empty() {
        return normalize(a);
    }
    let cont = up::gcd(&QQ, &content(a), &content(b));
    let mut u = primitive(a);
    let mut v = primitive(b);
    if deg(&u) < deg(&v) {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        let r = prem(&u, &v);
        u = v;
        v = primitive(&r);
    }
    let g = if deg(&u) == Some(0) { vec![vec![Rat::one()]] } else { u };
    normalize(&scale_x(&g, &cont))
}

fn normalize(p: &YPoly) -> YPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let l = lc(p);
    let s = l.last().expect("nonzero").clone();
    if s.is_zero() {
        return p.clone();
    }
    let inv = s.recip();
    p.iter().map(|c| up::scale(&QQ, c, &inv)).collect()
}

/// Substitutes `x -> x + s` in every coefficient.
pub fn shift_x(p: &YPoly, s: &Rat) -> YPoly {
    let lin = vec![s.clone(), Rat::one()];
    p.iter().map(|c| up::compose(&QQ, c, &lin)).collect()
}

/// Value at `x = x0`, a polynomial in `y`.
pub fn eval_x(p: &YPoly, x0: &Rat) -> Vec<Rat> {
    up::trim(&QQ, p.iter().map(|c| up::eval(&QQ, c, x0)).collect())
}

pub fn deg_x(p: &YPoly) -> usize {
    p.iter().map(|c| c.len().saturating_sub(1)).max().unwrap_or(0)
}
