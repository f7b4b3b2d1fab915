//! Dense univariate polynomials over a [`Field`] context.
//!
//! A polynomial is a coefficient vector, lowest degree first, with no
//! trailing zeros. The zero polynomial is the empty vector.

use super::field::Field;

pub type UPoly<E> = Vec<E>;

pub fn trim<F: Field>(k: &F, mut p: UPoly<F::Elem>) -> UPoly<F::Elem> {
    while p.last().is_some_and(|c| k.is_zero(c)) {
        p.pop();
    }
    p
}

/// Degree, `None` for the zero polynomial.
pub fn degree<E>(p: &[E]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn constant<F: Field>(k: &F, c: F::Elem) -> UPoly<F::Elem> {
    trim(k, vec![c])
}

pub fn add<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => k.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(k, out)
}

pub fn neg<F: Field>(k: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    a.iter().map(|c| k.neg(c)).collect()
}

pub fn sub<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    add(k, a, &neg(k, b))
}

pub fn scale<F: Field>(k: &F, a: &[F::Elem], s: &F::Elem) -> UPoly<F::Elem> {
    trim(k, a.iter().map(|c| k.mul(c, s)).collect())
}

pub fn mul<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    trim(k, out)
}

pub fn pow<F: Field>(k: &F, a: &[F::Elem], e: u32) -> UPoly<F::Elem> {
    let mut acc = vec![k.one()];
    for _ in 0..e {
        acc = mul(k, &acc, a);
    }
    acc
}

/// Euclidean division; panics on a zero divisor.
pub fn divrem<F: Field>(
    k: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (UPoly<F::Elem>, UPoly<F::Elem>) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = k.inv(&b[db]).expect("nonzero leading coefficient");
    let mut r: Vec<F::Elem> = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(k, r));
    }
    let mut q = vec![k.zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = k.mul(&r[i + db], &lead_inv);
        if !k.is_zero(&c) {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] = k.sub(&r[i + j], &k.mul(&c, bj));
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    (trim(k, q), trim(k, r))
}

pub fn rem<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    divrem(k, a, b).1
}

/// Quotient of an exact division, `None` if the remainder is nonzero.
pub fn exact_div<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Option<UPoly<F::Elem>> {
    let (q, r) = divrem(k, a, b);
    r.is_empty().then_some(q)
}

pub fn monic<F: Field>(k: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(l) => scale(k, a, &k.inv(l).expect("trimmed")),
    }
}

/// Monic greatest common divisor (zero if both inputs are zero).
pub fn gcd<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    let mut x = trim(k, a.to_vec());
    let mut y = trim(k, b.to_vec());
    while !y.is_empty() {
        let r = rem(k, &x, &y);
        x = y;
        y = r;
    }
    monic(k, &x)
}

/// Extended gcd: returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn ext_gcd<F: Field>(
    k: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (UPoly<F::Elem>, UPoly<F::Elem>, UPoly<F::Elem>) {
    let (mut r0, mut r1) = (trim(k, a.to_vec()), trim(k, b.to_vec()));
    let (mut s0, mut s1) = (vec![k.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![k.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1);
        let s2 = sub(k, &s0, &mul(k, &q, &s1));
        let t2 = sub(k, &t0, &mul(k, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last().cloned() {
        None => (r0, s0, t0),
        Some(l) => {
            let li = k.inv(&l).expect("nonzero");
            (scale(k, &r0, &li), scale(k, &s0, &li), scale(k, &t0, &li))
        }
    }
}

pub fn derivative<F: Field>(k: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| {
            let n = k.from_rat(&super::field::rat(i as i64));
            k.mul(c, &n)
        })
        .collect();
    trim(k, out)
}

pub fn eval<F: Field>(k: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    a.iter()
        .rev()
        .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
}

/// `a(b(z))`.
pub fn compose<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    a.iter().rev().fold(Vec::new(), |acc, c| {
        add(k, &mul(k, &acc, b), &constant(k, c.clone()))
    })
}

/// Square-free decomposition (Yun): `a = lc · Π fᵢ^i`, returned as
/// `(fᵢ, i)` pairs with monic, pairwise coprime, nonconstant `fᵢ`.
pub fn square_free_decomposition<F: Field>(
    k: &F,
    a: &[F::Elem],
) -> Vec<(UPoly<F::Elem>, u32)> {
    let a = monic(k, a);
    if degree(&a).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let da = derivative(k, &a);
    let g = gcd(k, &a, &da);
    let mut b = exact_div(k, &a, &g).expect("gcd divides");
    let mut c = exact_div(k, &da, &g).expect("gcd divides");
    let mut out = Vec::new();
    let mut i = 1;
    loop {
        let d = sub(k, &c, &derivative(k, &b));
        if degree(&b).unwrap_or(0) == 0 {
            break;
        }
        let h = gcd(k, &b, &d);
        if degree(&h).unwrap_or(0) > 0 {
            out.push((h.clone(), i));
        }
        b = exact_div(k, &b, &h).expect("gcd divides");
        c = exact_div(k, &d, &h).expect("gcd divides");
        i += 1;
    }
    out
}

/// Product of the distinct monic irreducible-free parts.
pub fn square_free_part<F: Field>(k: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    let a = monic(k, a);
    if a.len() <= 1 {
        return a;
    }
    let g = gcd(k, &a, &derivative(k, &a));
    exact_div(k, &a, &g).expect("gcd divides")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{rat, QQ};

    fn q(v: &[i64]) -> Vec<crate::arith::field::Rat> {
        trim(&QQ, v.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn divrem_and_gcd() {
        // (z-1)^2 (z+2)
        let a = mul(&QQ, &pow(&QQ, &q(&[-1, 1]), 2), &q(&[2, 1]));
        let (qq, r) = divrem(&QQ, &a, &q(&[-1, 1]));
        assert!(r.is_empty());
        assert_eq!(qq, mul(&QQ, &q(&[-1, 1]), &q(&[2, 1])));
        assert_eq!(gcd(&QQ, &a, &derivative(&QQ, &a)), q(&[-1, 1]));
    }

    #[test]
    fn yun_multiplicities() {
        let a = mul(
            &QQ,
            &pow(&QQ, &q(&[-1, 1]), 3),
            &mul(&QQ, &q(&[0, 1]), &q(&[1, 0, 1])),
        );
        let sf = square_free_decomposition(&QQ, &a);
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0], (mul(&QQ, &q(&[0, 1]), &q(&[1, 0, 1])), 1));
        assert_eq!(sf[1], (q(&[-1, 1]), 3));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = q(&[1, 0, 1]);
        let b = q(&[-1, 1]);
        let (g, s, t) = ext_gcd(&QQ, &a, &b);
        assert_eq!(g, q(&[1]));
        assert_eq!(add(&QQ, &mul(&QQ, &s, &a), &mul(&QQ, &t, &b)), g);
    }
}
