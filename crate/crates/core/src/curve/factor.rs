use num_traits::{One, Zero};

use super::ypoly::{self, XPoly, YPoly};
use super::BiPoly;
use crate::arith::factor::factor_rational_univariate;
use crate::arith::upoly::{self as up};
use crate::arith::{rat, Rat, QQ};
use crate::error::{Error, Result};

/// Largest total degree accepted by [`factor_rational`].
pub const FACTOR_DEGREE_CAP: u32 = 8;

/// `unit * prod(factor^mult)`, each factor primitive with integer
/// coefficients and positive graded-lex leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList {
    pub unit: Rat,
    pub factors: Vec<(BiPoly, u32)>,
}

impl FactorList {
    pub fn expand(&self) -> BiPoly {
        let mut acc = BiPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    pub fn distinct_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn has_repeated_factor(&self) -> bool {
        self.factors.iter().any(|(_, m)| *m > 1)
    }
}

/// Removes repeated factors. The flag reports whether any were present.
pub fn square_free_part(f: &BiPoly) -> (BiPoly, bool) {
    if f.is_zero() {
        return (BiPoly::zero(), false);
    }
    let y = ypoly::from_bi(f);
    let c = ypoly::content(&y);
    let pp = ypoly::div_x(&y, &c);
    let g = ypoly::gcd(&pp, &ypoly::diff_y(&pp));
    let sq = ypoly::exact_div(&pp, &g).expect("gcd divides");
    let csf = up::square_free_part(&QQ, &c);
    let had = ypoly::deg(&g).unwrap_or(0) > 0 || csf.len() < c.len();
    let out = ypoly::to_bi(&ypoly::scale_x(&sq, &csf));
    (out.normalize().1, had)
}

/// Factors `f` into irreducibles over the rationals.
pub fn factor_rational(f: &BiPoly) -> Result<FactorList> {
    let d = f.total_degree().ok_or(Error::ZeroPolynomial)?;
    if d > FACTOR_DEGREE_CAP {
        return Err(Error::DegreeCapExceeded { degree: d, cap: FACTOR_DEGREE_CAP });
    }
    let y = ypoly::from_bi(f);
    let c = ypoly::content(&y);
    let pp = ypoly::div_x(&y, &c);

    let mut raw: Vec<(BiPoly, u32)> = Vec::new();
    for (fx, m) in factor_rational_univariate(&c).1 {
        raw.push((BiPoly::from_x_poly(&fx), m));
    }
    for (g, m) in yun(&pp) {
        for h in factor_square_free(&g) {
            raw.push((ypoly::to_bi(&h), m));
        }
    }

    let mut factors: Vec<(BiPoly, u32)> =
        raw.into_iter().map(|(p, m)| (p.normalize().1, m)).collect();
    factors.sort_by(|a, b| order_key(&a.0).cmp(&order_key(&b.0)).then(a.1.cmp(&b.1)));

    let mut prod = BiPoly::one();
    for (p, m) in &factors {
        prod = &prod * &p.pow(*m);
    }
    let (lt, lc) = f.leading_term().expect("nonzero");
    let unit = lc / prod.coeff(lt.0, lt.1);
    Ok(FactorList { unit, factors })
}

fn order_key(p: &BiPoly) -> (u32, Vec<((u32, u32), Rat)>) {
    let mut terms: Vec<((u32, u32), Rat)> = p.terms().map(|(k, c)| (k, c.clone())).collect();
    terms.sort_by_key(|t| std::cmp::Reverse((t.0 .0 + t.0 .1, t.0 .0)));
    (p.total_degree().unwrap_or(0), terms)
}

/// Square-free decomposition in `y` of a primitive polynomial.
fn yun(a: &YPoly) -> Vec<(YPoly, u32)> {
    if ypoly::deg(a).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let da = ypoly::diff_y(a);
    let g = ypoly::gcd(a, &da);
    let mut b = ypoly::exact_div(a, &g).expect("gcd divides");
    let mut c = ypoly::exact_div(&da, &g).expect("gcd divides");
    let mut out = Vec::new();
    let mut i = 1;
    while ypoly::deg(&b).unwrap_or(0) > 0 {
        let d = ypoly::sub(&c, &ypoly::diff_y(&b));
        let h = ypoly::gcd(&b, &d);
        if ypoly::deg(&h).unwrap_or(0) > 0 {
            out.push((h.clone(), i));
        }
        b = ypoly::exact_div(&b, &h).expect("gcd divides");
        c = ypoly::exact_div(&d, &h).expect("gcd divides");
        i += 1;
    }
    out
}

fn lucky_points() -> impl Iterator<Item = Rat> {
    (0i64..).flat_map(|k| if k == 0 { vec![rat(0)] } else { vec![rat(k), rat(-k)] })
}

/// Irreducible factors of a primitive, square-free polynomial of positive
/// degree in `y`.
fn factor_square_free(g: &YPoly) -> Vec<YPoly> {
    let n = ypoly::deg(g).expect("nonzero");
    if n <= 1 {
        return vec![g.clone()];
    }
    if ypoly::deg_x(g) == 0 {
        let u: Vec<Rat> = g.iter().map(|c| c.first().cloned().unwrap_or_default()).collect();
        return factor_rational_univariate(&u)
            .1
            .into_iter()
            .map(|(f, _)| f.into_iter().map(|c| vec![c]).collect())
            .collect();
    }
    let x0 = lucky_points()
        .find(|x0| {
            if up::eval(&QQ, ypoly::lc(g), x0).is_zero() {
                return false;
            }
            let h = ypoly::eval_x(g, x0);
            up::gcd(&QQ, &h, &up::derivative(&QQ, &h)).len() == 1
        })
        .expect("some specialization is square-free");

    let big = ypoly::shift_x(g, &x0);
    let h0 = ypoly::eval_x(&big, &Rat::zero());
    let uni: Vec<Vec<Rat>> = factor_rational_univariate(&h0)
        .1
        .into_iter()
        .map(|(f, _)| up::monic(&QQ, &f))
        .collect();
    if uni.len() == 1 {
        return vec![g.clone()];
    }

    let prec = ypoly::deg_x(g) + 2;
    let monic_series = to_series(&big, prec);
    let lc = ypoly::lc(&big).clone();
    let inv = series_inverse(&lc, prec);
    let monic_series = series_scale(&monic_series, &inv, prec);
    let lifted = hensel_lift(&monic_series, &uni, prec);

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut current = big;
    let mut found: Vec<YPoly> = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut hit = None;
        for subset in subsets(&remaining, size) {
            let mut prod = vec![vec![Rat::one()]];
            for &i in &subset {
                prod = series_mul(&prod, &lifted[i], prec);
            }
            let lcs = series_scale(&prod, ypoly::lc(&current), prec);
            let cand = ypoly::primitive(&from_series(&lcs));
            if let Some(q) = ypoly::exact_div(&current, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                remaining.retain(|i| !subset.contains(i));
                found.push(cand);
                current = q;
            }
            None => size += 1,
        }
    }
    found.push(ypoly::primitive(&current));
    let back = -x0;
    found
        .into_iter()
        .map(|p| ypoly::primitive(&ypoly::shift_x(&p, &back)))
        .collect()
}

/// Index subsets of a given size, in lexicographic order.
fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for k in start..items.len() {
            cur.push(items[k]);
            go(items, size, k + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, size, 0, &mut Vec::new(), &mut out);
    out
}

// A series is indexed by the power of `u`; each entry is a polynomial in `y`.
type Series = Vec<Vec<Rat>>;

fn to_series(p: &YPoly, prec: usize) -> Series {
    let mut s: Series = vec![Vec::new(); prec];
    for (j, c) in p.iter().enumerate() {
        for (k, a) in c.iter().enumerate().take(prec) {
            if s[k].len() <= j {
                s[k].resize(j + 1, Rat::zero());
            }
            s[k][j] = a.clone();
        }
    }
    s.into_iter().map(|v| up::trim(&QQ, v)).collect()
}

fn from_series(s: &Series) -> YPoly {
    let ny = s.iter().map(|v| v.len()).max().unwrap_or(0);
    let mut out: YPoly = vec![Vec::new(); ny];
    for (k, v) in s.iter().enumerate() {
        for (j, a) in v.iter().enumerate() {
            if out[j].len() <= k {
                out[j].resize(k + 1, Rat::zero());
            }
            out[j][k] = a.clone();
        }
    }
    ypoly::trim(out.into_iter().map(|c| up::trim(&QQ, c)).collect())
}

fn series_mul(a: &Series, b: &Series, prec: usize) -> Series {
    let mut out: Series = vec![Vec::new(); prec];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            if i + j < prec {
                out[i + j] = up::add(&QQ, &out[i + j], &up::mul(&QQ, ai, bj));
            }
        }
    }
    out
}

/// Multiplies a series by a polynomial in `u` alone.
fn series_scale(a: &Series, c: &XPoly, prec: usize) -> Series {
    let cs: Series = c.iter().map(|v| vec![v.clone()]).collect();
    series_mul(a, &cs, prec)
}

fn series_inverse(c: &XPoly, prec: usize) -> XPoly {
    let c0 = c[0].recip();
    let mut inv = vec![c0.clone()];
    for k in 1..prec {
        let mut acc = Rat::zero();
        for i in 1..=k.min(c.len() - 1) {
            acc += &c[i] * &inv[k - i];
        }
        inv.push(-acc * &c0);
    }
    inv
}

/// Lifts `f ≡ Π factors (mod u)` to a factorization modulo `u^prec`.
fn hensel_lift(f: &Series, factors: &[Vec<Rat>], prec: usize) -> Vec<Series> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let a = &factors[0];
    let mut b = vec![Rat::one()];
    for h in &factors[1..] {
        b = up::mul(&QQ, &b, h);
    }
    let (_, s, t) = up::ext_gcd(&QQ, a, &b);
    let mut big_a: Series = vec![a.clone()];
    let mut big_b: Series = vec![b.clone()];
    for k in 1..prec {
        let mut e = f[k].clone();
        for i in 1..k {
            e = up::sub(&QQ, &e, &up::mul(&QQ, &big_a[i], &big_b[k - i]));
        }
        let ak = up::rem(&QQ, &up::mul(&QQ, &e, &t), a);
        let bk = up::rem(&QQ, &up::mul(&QQ, &e, &s), &b);
        big_a.push(ak);
        big_b.push(bk);
    }
    let mut out = vec![big_a];
    out.extend(hensel_lift(&big_b, &factors[1..], prec));
    out
}
