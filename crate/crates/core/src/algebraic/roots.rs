use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::number::AlgebraicNumber;
use super::tower::{enclose_at, Embedding, KPoly, Tower};
use crate::arith::cplx::Disc;
use crate::arith::factor::factor_rational_univariate;
use crate::arith::roots::RootSet;
use crate::arith::upoly as up;
use crate::arith::{rat, ratio, Field, Rat, QQ};
use crate::curve::{resultant, BiPoly, Var};
use crate::error::{Error, Result};

/// All complex roots of `p` (coefficients given as coordinates in `k`),
/// with multiplicities, sorted by real part and then imaginary part.
///
/// A root outside `k` lives in a new field one level above `k`.
pub fn roots_over(k: &Tower, p: &[Vec<Rat>]) -> Vec<(AlgebraicNumber, u32)> {
    let p: KPoly = up::trim(k, p.iter().map(|c| k.reduce(c)).collect());
    if up::degree(&p).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (s, mult) in up::square_free_decomposition(k, &p) {
        for r in square_free_roots(k, &s) {
            out.push((r, mult));
        }
    }
    out.sort_by(|a, b| root_order(&a.0, &b.0));
    out
}

/// Convenience wrapper taking [`AlgebraicNumber`] coefficients.
pub fn roots_of(k: &Tower, p: &[AlgebraicNumber]) -> Vec<(AlgebraicNumber, u32)> {
    let coords: Vec<Vec<Rat>> = p
        .iter()
        .map(|c| {
            c.embed(k)
                .expect("coefficient lies in the given field")
                .coords()
                .to_vec()
        })
        .collect();
    roots_over(k, &coords)
}

fn root_order(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    let da = a.canon().disc();
    let db = b.canon().disc();
    da.center
        .re
        .cmp(&db.center.re)
        .then_with(|| da.center.im.cmp(&db.center.im))
}

fn shifts() -> impl Iterator<Item = i64> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
}

/// `Res_t(m(t), S(t, Z - s·t))` where the coefficients of `S` are
/// polynomials in the generator `t`.
fn trager_norm(k: &Tower, p: &KPoly, s: i64) -> Vec<Rat> {
    let m = BiPoly::from_y_univariate(k.minpoly());
    let lin = BiPoly::from_terms([(1, 0, Rat::one()), (0, 1, rat(-s))]);
    let mut sp = BiPoly::zero();
    let mut pw = BiPoly::one();
    for c in p {
        sp = &sp + &(&BiPoly::from_y_univariate(c) * &pw);
        pw = &pw * &lin;
    }
    let n = resultant(&m, &sp, Var::Y).eval_y(&Rat::zero());
    up::monic(&QQ, &n)
}

fn square_free_roots(k: &Tower, p: &KPoly) -> Vec<AlgebraicNumber> {
    let p = up::monic(k, p);
    if p.len() == 2 {
        return vec![AlgebraicNumber::new(k, k.neg(&p[0]))];
    }
    let (s, norm) = shifts()
        .map(|s| (s, trager_norm(k, &p, s)))
        .find(|(_, n)| up::gcd(&QQ, n, &up::derivative(&QQ, n)).len() == 1)
        .expect("some shift gives a square-free norm");
    let n = k.degree();
    let theta = vec![Rat::zero(), Rat::one()];
    let mut out = Vec::new();
    for (nj, _) in factor_rational_univariate(&norm).1 {
        let nj = up::monic(&QQ, &nj);
        if nj.len() - 1 == n {
            // Z -> Z + s·θ, coefficients in k
            let lin: KPoly = vec![k.mul(&k.from_rat(&rat(s)), &theta), k.one()];
            let lifted: KPoly = nj.iter().map(|c| k.from_rat(c)).collect();
            let composed = up::compose(k, &lifted, &lin);
            let g = up::gcd(k, &p, &composed);
            assert_eq!(g.len(), 2, "norm factor of field degree gives a linear gcd");
            out.push(AlgebraicNumber::new(k, k.neg(&g[0])));
            continue;
        }
        let roots = RootSet::isolate(&nj);
        let probe = Tower::with_roots(roots.clone(), 0, None);
        let phi = generator_image(k, &probe, &p, s);
        let beta = probe.sub(&vec![Rat::zero(), Rat::one()], &probe.mul(&probe.from_rat(&rat(s)), &phi));
        let mut hits = 0;
        let mut local = roots.clone();
        for r in 0..roots.len() {
            if locate_in(k, &mut local, r, &phi) != k.root_index() {
                continue;
            }
            hits += 1;
            let emb = Embedding {
                field: k.clone(),
                image: phi.clone(),
                defining: p.clone(),
                root: beta.clone(),
            };
            let l = Tower::with_roots(roots.clone(), r, Some(emb));
            out.push(AlgebraicNumber::new(&l, beta.clone()));
        }
        assert_eq!(hits * n, nj.len() - 1, "embedding count");
    }
    out
}

/// Coordinates of `θ` (the generator of `k`) in `Q(γ)`, where `γ = β + s·θ`.
fn generator_image(k: &Tower, l: &Tower, p: &KPoly, s: i64) -> Vec<Rat> {
    let gamma = vec![Rat::zero(), Rat::one()];
    // γ - s·t as a polynomial in t over l
    let lin: KPoly = vec![gamma, l.from_rat(&rat(-s))];
    let mut big = Vec::new();
    let mut pw: KPoly = vec![l.one()];
    for c in p {
        let ct: KPoly = up::trim(l, c.iter().map(|a| l.from_rat(a)).collect());
        big = up::add(l, &big, &up::mul(l, &ct, &pw));
        pw = up::mul(l, &pw, &lin);
    }
    let m: KPoly = k.minpoly().iter().map(|c| l.from_rat(c)).collect();
    let g = up::gcd(l, &m, &big);
    assert_eq!(g.len(), 2, "square-free norm gives a linear gcd");
    l.neg(&g[0])
}

/// Which root of `k`'s minimal polynomial equals `φ(γ_r)`.
fn locate_in(k: &Tower, local: &mut RootSet, r: usize, phi: &[Rat]) -> usize {
    let mut rad = ratio(1, 1 << 10);
    loop {
        let e = enclose_at(&local.discs[r], phi);
        {
            let rs = k.0.roots.lock().expect("root set lock");
            if let Some(i) = rs.locate(&e) {
                return i;
            }
        }
        local.refine(r, &rad);
        let mut rs = k.0.roots.lock().expect("root set lock");
        for i in 0..rs.len() {
            rs.refine(i, &rad);
        }
        rad /= Rat::from_integer(256.into());
    }
}

/// Axis-parallel rectangle `[re_lo, re_hi] × [im_lo, im_hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub re: (Rat, Rat),
    pub im: (Rat, Rat),
}

impl Region {
    pub fn new(re_lo: Rat, re_hi: Rat, im_lo: Rat, im_hi: Rat) -> Self {
        Region { re: (re_lo, re_hi), im: (im_lo, im_hi) }
    }

    fn contains(&self, d: &Disc) -> bool {
        let (a, b, c, e) = d.bbox();
        a >= self.re.0 && b <= self.re.1 && c >= self.im.0 && e <= self.im.1
    }

    fn misses(&self, d: &Disc) -> bool {
        let (a, b, c, e) = d.bbox();
        b < self.re.0 || a > self.re.1 || e < self.im.0 || c > self.im.1
    }
}

/// Adjoins the unique root of `p` (over `k`) lying in `region`.
///
/// Returns the extended field and the root as an element of it.
pub fn adjoin_root(k: &Tower, p: &[Vec<Rat>], region: &Region) -> Result<(Tower, AlgebraicNumber)> {
    let p: KPoly = up::trim(k, p.iter().map(|c| k.reduce(c)).collect());
    if p.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if up::gcd(k, &p, &up::derivative(k, &p)).len() > 1 {
        return Err(Error::NotSquareFree);
    }
    let mut inside = Vec::new();
    let mut unsure = 0;
    for (r, _) in roots_over(k, &p) {
        let mut rad = ratio(1, 1 << 4);
        let mut verdict = None;
        for _ in 0..40 {
            let d = r.enclose(&rad);
            if region.contains(&d) {
                verdict = Some(true);
                break;
            }
            if region.misses(&d) {
                verdict = Some(false);
                break;
            }
            rad /= Rat::from_integer(16.into());
        }
        match verdict {
            Some(true) => inside.push(r),
            Some(false) => {}
            None => unsure += 1,
        }
    }
    if inside.len() != 1 || unsure > 0 {
        return Err(Error::NotIsolating { found: inside.len() + unsure });
    }
    let r = inside.pop().expect("one root");
    Ok((r.field().clone(), r))
}
