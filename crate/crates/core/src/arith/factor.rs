//! Univariate factorization over ℚ (Zassenhaus: factor modulo a small
//! prime, Hensel-lift, recombine).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Rat, QQ};
use super::upoly::{self, UPoly};

type ZPoly = Vec<BigInt>;
type PPoly = Vec<u64>;

/// Clears denominators and content: returns `(c, g)` with `p = c·g`,
/// `g` integral and primitive with positive leading coefficient.
pub fn primitive_part(p: &[Rat]) -> (Rat, ZPoly) {
    if p.is_empty() {
        return (Rat::zero(), Vec::new());
    }
    let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &den).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().is_some_and(|l| l.is_negative()) {
        g = -g;
    }
    let prim = ints.iter().map(|c| c / &g).collect();
    (Rat::new(g, den), prim)
}

pub fn to_rat(p: &[BigInt]) -> UPoly<Rat> {
    p.iter().map(|c| Rat::from_integer(c.clone())).collect()
}

/// Complete factorization over ℚ: `p = unit · Π fᵢ^{eᵢ}` with each `fᵢ`
/// primitive integral with positive leading coefficient, sorted by
/// degree and then coefficients.
pub fn factor_rational_univariate(p: &[Rat]) -> (Rat, Vec<(UPoly<Rat>, u32)>) {
    let p = upoly::trim(&QQ, p.to_vec());
    if p.len() <= 1 {
        return (p.first().cloned().unwrap_or_else(Rat::zero), Vec::new());
    }
    let mut out = Vec::new();
    for (sf, mult) in upoly::square_free_decomposition(&QQ, &p) {
        let (_, z) = primitive_part(&sf);
        for f in factor_square_free(&z) {
            out.push((to_rat(&f), mult));
        }
    }
    // unit absorbs the leading-coefficient ratio.
    let mut prod = vec![Rat::one()];
    for (f, m) in &out {
        prod = upoly::mul(&QQ, &prod, &upoly::pow(&QQ, f, *m));
    }
    let unit = p.last().unwrap() / prod.last().unwrap();
    out.sort_by(|a, b| {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| a.0.cmp(&b.0))
            .then(a.1.cmp(&b.1))
    });
    (unit, out)
}

/// Rational roots with multiplicity, increasing.
pub fn rational_roots(p: &[Rat]) -> Vec<(Rat, u32)> {
    let (_, fs) = factor_rational_univariate(p);
    let mut out: Vec<(Rat, u32)> = fs
        .into_iter()
        .filter(|(f, _)| f.len() == 2)
        .map(|(f, m)| (-&f[0] / &f[1], m))
        .collect();
    out.sort();
    out
}

/// Irreducible factors of a square-free primitive integer polynomial.
pub fn factor_square_free(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    // x-power content: x | f
    if f[0].is_zero() {
        let rest: ZPoly = f[1..].to_vec();
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_square_free(&rest));
        return out;
    }
    let lc = f[n].clone();
    let p = choose_prime(f);
    let fbar = monic_mod(&reduce(f, p), p);
    let modfactors = factor_mod_p(&fbar, p);
    if modfactors.len() == 1 {
        return vec![f.clone()];
    }
    // coefficient bound for factors of lc·f
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound: BigInt = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm1 + 1;
    let mut k = 1u32;
    let mut pk = BigInt::from(p);
    while pk <= bound {
        pk *= p;
        k += 1;
    }
    let lifted = hensel_lift(f, &modfactors, p, k);
    recombine(f, lifted, &pk)
}

fn choose_prime(f: &ZPoly) -> u64 {
    let lc = f.last().unwrap();
    let mut cand = 3u64;
    loop {
        if is_prime(cand) && !(lc % cand).is_zero() {
            let fb = monic_mod(&reduce(f, cand), cand);
            let d = pderiv(&fb, cand);
            let g = pgcd(&fb, &d, cand);
            if g.len() == 1 {
                return cand;
            }
        }
        cand += 2;
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn reduce(f: &ZPoly, p: u64) -> PPoly {
    let pb = BigInt::from(p);
    ptrim(
        f.iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

// ---- arithmetic in F_p[x] ----

fn ptrim(mut a: PPoly) -> PPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn monic_mod(a: &PPoly, p: u64) -> PPoly {
    let l = inv_mod(*a.last().unwrap(), p);
    a.iter().map(|c| c * l % p).collect()
}

fn psub(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let n = a.len().max(b.len());
    ptrim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn pmul(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    ptrim(out)
}

fn pdivrem(a: &PPoly, b: &PPoly, p: u64) -> (PPoly, PPoly) {
    let db = b.len() - 1;
    let li = inv_mod(b[db], p);
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db] * li % p;
        if c != 0 {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + p - c * bj % p) % p;
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    (ptrim(q), ptrim(r))
}

fn pgcd(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = pdivrem(&x, &y, p).1;
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        monic_mod(&x, p)
    }
}

fn pext_gcd(a: &PPoly, b: &PPoly, p: u64) -> (PPoly, PPoly, PPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = pdivrem(&r0, &r1, p);
        let s2 = psub(&s0, &pmul(&q, &s1, p), p);
        let t2 = psub(&t0, &pmul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let li = inv_mod(*r0.last().unwrap(), p);
    let sc = |v: &PPoly| ptrim(v.iter().map(|c| c * li % p).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

fn pderiv(a: &PPoly, p: u64) -> PPoly {
    ptrim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn ppowmod(base: &PPoly, e: &BigUint, m: &PPoly, p: u64) -> PPoly {
    let mut result = vec![1u64];
    let b = pdivrem(base, m, p).1;
    for i in (0..e.bits()).rev() {
        result = pdivrem(&pmul(&result, &result, p), m, p).1;
        if e.bit(i) {
            result = pdivrem(&pmul(&result, &b, p), m, p).1;
        }
    }
    result
}

/// Monic irreducible factors of a monic square-free polynomial over F_p.
fn factor_mod_p(f: &PPoly, p: u64) -> Vec<PPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut d = 1usize;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d ^ p);
    while rest.len() > 2 * d {
        h = ppowmod(&h, &pe, &rest, p);
        let g = pgcd(&psub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            equal_degree_split(&g, d, p, &mut rng, &mut out);
            rest = pdivrem(&rest, &g, p).0;
            h = pdivrem(&h, &rest, p).1;
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out.sort();
    out
}

fn equal_degree_split(g: &PPoly, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<PPoly>) {
    let n = g.len() - 1;
    if n == d {
        out.push(g.clone());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: PPoly = ptrim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = psub(&ppowmod(&a, &e, g, p), &vec![1u64], p);
        let c = pgcd(&b, g, p);
        if c.len() > 1 && c.len() < g.len() {
            let other = pdivrem(g, &c, p).0;
            equal_degree_split(&c, d, p, rng, out);
            equal_degree_split(&other, d, p, rng, out);
            return;
        }
    }
}

// ---- Hensel lifting over Z/p^k ----

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut v: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()
        })
        .collect()
}

fn lift_pp(a: &PPoly) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f ≡ lc(f)·Π factors (mod p)` (factors monic) to modulus `p^k`;
/// returns monic lifted factors.
fn hensel_lift(f: &ZPoly, factors: &[PPoly], p: u64, k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let pk = BigInt::from(p).pow(k);
        let lc_inv = f
            .last()
            .unwrap()
            .modinv(&pk)
            .expect("lc coprime to p");
        return vec![zmod(&f.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &pk)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let pb = BigInt::from(p);
    let lcb = f.last().unwrap().mod_floor(&pb).to_u64().unwrap();
    let mut g = vec![lcb];
    for l in left {
        g = pmul(&g, l, p);
    }
    let mut h = vec![1u64];
    for r in right {
        h = pmul(&h, r, p);
    }
    let (_, s, t) = pext_gcd(&g, &h, p);
    let mut gz = lift_pp(&g);
    let mut hz = lift_pp(&h);
    let mut m = pb.clone();
    for _ in 1..k {
        let e = zsub(f, &zmul(&gz, &hz));
        let e: ZPoly = e.iter().map(|c| c / &m).collect();
        let eb = reduce(&e, p);
        let se = pmul(&s, &eb, p);
        let (q, sigma) = pdivrem(&se, &h, p);
        let tau = psub(&pmul(&t, &eb, p), &psub(&vec![], &pmul(&q, &g, p), p), p);
        let tau = ptrim(tau);
        let mnext = &m * &pb;
        gz = zmod(
            &zsub(&gz, &lift_pp(&tau).iter().map(|c| -c * &m).collect::<Vec<_>>()),
            &mnext,
        );
        hz = zmod(
            &zsub(&hz, &lift_pp(&sigma).iter().map(|c| -c * &m).collect::<Vec<_>>()),
            &mnext,
        );
        m = mnext;
    }
    // gz carries lc(f); recurse on each side with its own modular factors.
    let mut out = hensel_lift_fixed(&gz, left, p, k);
    out.extend(hensel_lift_fixed(&hz, right, p, k));
    out
}

/// Lifting of a polynomial known only modulo p^k: treated as an integer
/// polynomial whose factorization mod p is `factors`; the result is exact
/// modulo p^k because all arithmetic is reduced there.
fn hensel_lift_fixed(f: &ZPoly, factors: &[PPoly], p: u64, k: u32) -> Vec<ZPoly> {
    let pk = BigInt::from(p).pow(k);
    hensel_lift(f, factors, p, k)
        .into_iter()
        .map(|v| zmod(&v, &pk))
        .collect()
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half: BigInt = m / 2;
    let mut v: ZPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zprimitive(a: &[BigInt]) -> ZPoly {
    let g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut v: ZPoly = a.iter().map(|c| c / &g).collect();
    if v.last().is_some_and(|c| c.is_negative()) {
        v = v.into_iter().map(|c| -c).collect();
    }
    v
}

/// Exact division in Z[x]; `None` if not divisible.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let (q, r) = upoly::divrem(&QQ, &to_rat(a), &to_rat(b));
    if !r.is_empty() || q.iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.iter().map(|c| c.to_integer()).collect())
}

fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, pk: &BigInt) -> Vec<ZPoly> {
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for subset in subsets(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            let mut cand = vec![lc.clone()];
            for &i in &subset {
                cand = zmod(&zmul(&cand, &lifted[i]), pk);
            }
            let cand = zprimitive(&symmetric(&cand, pk));
            if cand.len() < 2 {
                continue;
            }
            if let Some(q) = zdiv_exact(&f, &cand) {
                out.push(cand);
                f = q;
                let mut keep = Vec::new();
                for (i, l) in lifted.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(l);
                    }
                }
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if f.len() > 1 {
        out.push(zprimitive(&f));
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
