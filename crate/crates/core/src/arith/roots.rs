//! Certified isolation of all complex roots of a square-free rational
//! polynomial.
//!
//! Approximations come from Aberth iteration in fixed-point arithmetic.
//! They are then certified exactly: for any `z`, the disc of radius
//! `n·|P(z)/P'(z)|` around `z` contains a root, so `n` pairwise disjoint
//! such discs isolate all roots. Real roots are counted with a Sturm
//! sequence and their discs are re-centred on the real axis; non-real
//! roots are stored in exact conjugate pairs.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cplx::{ceil_dyadic, eval_with_derivative, Disc, GaussRat};
use super::field::{Rat, QQ};
use super::sturm::count_real_roots;
use super::upoly;

#[derive(Clone, Debug)]
pub struct RootSet {
    /// Monic, square-free.
    pub poly: Vec<Rat>,
    pub discs: Vec<Disc>,
    pub real: Vec<bool>,
    /// Index of the complex-conjugate root.
    pub conj: Vec<usize>,
}

#[derive(Clone, Debug)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

struct FixedCtx {
    prec: u32,
}

impl FixedCtx {
    fn from_rat(&self, r: &Rat) -> BigInt {
        let s = r * Rat::from_integer(BigInt::one() << self.prec);
        s.round().to_integer()
    }
    fn from_f64(&self, x: f64) -> BigInt {
        let r = Rat::from_float(x).unwrap_or_else(Rat::zero);
        self.from_rat(&r)
    }
    fn to_rat(&self, m: &BigInt) -> Rat {
        Rat::new(m.clone(), BigInt::one() << self.prec)
    }
    fn mul(&self, a: &Fx, b: &Fx) -> Fx {
        Fx {
            re: (&a.re * &b.re - &a.im * &b.im) >> self.prec,
            im: (&a.re * &b.im + &a.im * &b.re) >> self.prec,
        }
    }
    fn div(&self, a: &Fx, b: &Fx) -> Option<Fx> {
        let n = &b.re * &b.re + &b.im * &b.im;
        if n.is_zero() {
            return None;
        }
        let pr = &a.re * &b.re + &a.im * &b.im;
        let pi = &a.im * &b.re - &a.re * &b.im;
        Some(Fx {
            re: (pr << self.prec) / &n,
            im: (pi << self.prec) / &n,
        })
    }
    fn add(a: &Fx, b: &Fx) -> Fx {
        Fx { re: &a.re + &b.re, im: &a.im + &b.im }
    }
    fn sub(a: &Fx, b: &Fx) -> Fx {
        Fx { re: &a.re - &b.re, im: &a.im - &b.im }
    }
    fn one(&self) -> Fx {
        Fx { re: BigInt::one() << self.prec, im: BigInt::zero() }
    }
    fn rescale(&self, a: &Fx, new_prec: u32) -> Fx {
        let sh = new_prec as i64 - self.prec as i64;
        if sh >= 0 {
            Fx { re: &a.re << sh as u32, im: &a.im << sh as u32 }
        } else {
            Fx { re: &a.re >> (-sh) as u32, im: &a.im >> (-sh) as u32 }
        }
    }
    fn to_gauss(&self, a: &Fx) -> GaussRat {
        GaussRat::new(self.to_rat(&a.re), self.to_rat(&a.im))
    }
    fn mag_bits(a: &Fx) -> u64 {
        a.re.bits().max(a.im.bits())
    }
}

/// Certified radius for a root near `z`, rounded up to a dyadic.
fn certified_radius(p: &[Rat], z: &GaussRat) -> Option<Rat> {
    let n = p.len() - 1;
    let (v, d) = eval_with_derivative(p, z);
    if v.is_zero() {
        return Some(Rat::zero());
    }
    let dl = d.abs_lower();
    if dl.is_zero() {
        return None;
    }
    let r = Rat::from_integer(BigInt::from(n)) * v.abs_upper() / dl;
    // keep denominators bounded
    let bits = (-super::cplx::log2_floor(&r)).max(0) as u32 + 16;
    Some(ceil_dyadic(&r, bits))
}

fn all_disjoint(discs: &[Disc]) -> bool {
    for i in 0..discs.len() {
        for j in i + 1..discs.len() {
            if discs[i].intersects(&discs[j]) {
                return false;
            }
        }
    }
    true
}

/// Attempts to certify approximations `zs` as an isolation of all roots.
fn certify(p: &[Rat], zs: &[GaussRat], nreal: usize) -> Option<(Vec<Disc>, Vec<bool>)> {
    let n = p.len() - 1;
    let mut real_discs = Vec::new();
    let mut upper = Vec::new();
    for z in zs {
        let r = certified_radius(p, z)?;
        let d = Disc { center: z.clone(), rad: r };
        if d.meets_real_axis() {
            let c = GaussRat::real(z.re.clone());
            let r = certified_radius(p, &c)?;
            real_discs.push(Disc { center: c, rad: r });
        } else if z.im.is_positive() {
            upper.push(d);
        }
    }
    if real_discs.len() != nreal || nreal + 2 * upper.len() != n {
        return None;
    }
    let mut all: Vec<(Disc, bool)> = real_discs.into_iter().map(|d| (d, true)).collect();
    for u in upper {
        all.push((u.conj(), false));
        all.push((u, false));
    }
    let discs: Vec<Disc> = all.iter().map(|x| x.0.clone()).collect();
    if !all_disjoint(&discs) {
        return None;
    }
    all.sort_by(|a, b| {
        a.0.center
            .re
            .cmp(&b.0.center.re)
            .then_with(|| a.0.center.im.cmp(&b.0.center.im))
    });
    Some(all.into_iter().unzip())
}

fn aberth_isolate(p: &[Rat]) -> (Vec<Disc>, Vec<bool>) {
    let n = p.len() - 1;
    let nreal = count_real_roots(p);
    // Cauchy bound
    let bound = p[..n]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rat::zero)
        + Rat::one();
    let bound_f = bound.to_f64().unwrap_or(1e300).min(1e300);
    let mut prec = 64u32 + super::cplx::log2_floor(&bound).max(0) as u32;
    let mut ctx = FixedCtx { prec };
    let mut zs: Vec<Fx> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            let rad = bound_f * 0.5 + 0.1;
            Fx {
                re: ctx.from_f64(rad * ang.cos()),
                im: ctx.from_f64(rad * ang.sin()),
            }
        })
        .collect();
    let mut iter_at_prec = 0;
    loop {
        let coeffs: Vec<Fx> = p
            .iter()
            .map(|c| Fx { re: ctx.from_rat(c), im: BigInt::zero() })
            .collect();
        let mut max_step_bits: i64 = i64::MIN;
        for i in 0..n {
            let z = zs[i].clone();
            let mut v = Fx { re: BigInt::zero(), im: BigInt::zero() };
            let mut d = v.clone();
            for c in coeffs.iter().rev() {
                d = FixedCtx::add(&ctx.mul(&d, &z), &v);
                v = FixedCtx::add(&ctx.mul(&v, &z), c);
            }
            let ratio = match ctx.div(&v, &d) {
                Some(r) => r,
                None => {
                    zs[i].re += BigInt::one() << (ctx.prec / 2);
                    continue;
                }
            };
            let mut sum = Fx { re: BigInt::zero(), im: BigInt::zero() };
            for (j, zj) in zs.iter().enumerate() {
                if j != i {
                    let diff = FixedCtx::sub(&z, zj);
                    if let Some(inv) = ctx.div(&ctx.one(), &diff) {
                        sum = FixedCtx::add(&sum, &inv);
                    }
                }
            }
            let denom = FixedCtx::sub(&ctx.one(), &ctx.mul(&ratio, &sum));
            let w = ctx.div(&ratio, &denom).unwrap_or(ratio);
            max_step_bits = max_step_bits.max(FixedCtx::mag_bits(&w) as i64);
            zs[i] = FixedCtx::sub(&z, &w);
        }
        iter_at_prec += 1;
        let converged = max_step_bits < (ctx.prec as i64) / 2;
        if converged || iter_at_prec % 16 == 0 {
            let gs: Vec<GaussRat> = zs.iter().map(|z| ctx.to_gauss(z)).collect();
            if let Some(res) = certify(p, &gs, nreal) {
                return res;
            }
        }
        if converged || iter_at_prec > 400 {
            let new_prec = prec * 2;
            zs = zs.iter().map(|z| ctx.rescale(z, new_prec)).collect();
            prec = new_prec;
            ctx = FixedCtx { prec };
            iter_at_prec = 0;
            assert!(prec < 1 << 16, "root isolation failed to converge");
        }
    }
}

impl RootSet {
    /// Isolates all roots of a nonzero square-free polynomial.
    pub fn isolate(p: &[Rat]) -> RootSet {
        let p = upoly::monic(&QQ, p);
        assert!(!p.is_empty(), "zero polynomial");
        let n = p.len() - 1;
        let (discs, real) = match n {
            0 => (Vec::new(), Vec::new()),
            1 => (vec![Disc::point(GaussRat::real(-&p[0]))], vec![true]),
            _ => aberth_isolate(&p),
        };
        let conj = (0..n)
            .map(|i| {
                if real[i] {
                    i
                } else {
                    let c = discs[i].conj();
                    discs.iter().position(|d| *d == c).expect("conjugate disc")
                }
            })
            .collect();
        RootSet { poly: p, discs, real, conj }
    }

    pub fn len(&self) -> usize {
        self.discs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.discs.is_empty()
    }

    /// Shrinks disc `i` (and its conjugate) to radius at most `target`.
    pub fn refine(&mut self, i: usize, target: &Rat) {
        while self.discs[i].rad > *target {
            let d = self.discs[i].clone();
            let bits = (-super::cplx::log2_floor(&d.rad)).max(8) as u32;
            let prec = 2 * bits + 32;
            let (v, dv) = eval_with_derivative(&self.poly, &d.center);
            let mut accepted = false;
            if !dv.is_zero() {
                let mut c = d.center.sub(&v.div(&dv)).round(prec);
                if self.real[i] {
                    c.im = Rat::zero();
                }
                if let Some(r) = certified_radius(&self.poly, &c) {
                    let nd = Disc { center: c, rad: r };
                    if d.contains_disc(&nd) && nd.rad < d.rad {
                        self.set_disc(i, nd);
                        accepted = true;
                    }
                }
            }
            if !accepted {
                self.bisect_refine(i);
            }
        }
    }

    /// Fallback: re-isolates everything and picks the new disc for root `i`.
    fn bisect_refine(&mut self, i: usize) {
        let old = self.discs[i].clone();
        let fresh = RootSet::isolate(&self.poly);
        let hits: Vec<usize> = (0..fresh.len())
            .filter(|&j| fresh.discs[j].intersects(&old))
            .collect();
        if hits.len() == 1 && fresh.discs[hits[0]].rad < old.rad {
            let nd = fresh.discs[hits[0]].clone();
            self.set_disc(i, nd);
        } else {
            // shrink by one Newton-free halving: recentre inside old disc
            let half = &old.rad / Rat::from_integer(BigInt::from(2));
            for j in hits {
                let cand = fresh.discs[j].clone();
                if old.contains_disc(&cand) && cand.rad <= half {
                    self.set_disc(i, cand);
                    return;
                }
            }
            panic!("root refinement stalled");
        }
    }

    fn set_disc(&mut self, i: usize, d: Disc) {
        let c = self.conj[i];
        if c != i {
            self.discs[c] = d.conj();
        }
        self.discs[i] = d;
    }

    /// Index of the unique root whose disc meets `probe`, if unique.
    pub fn locate(&self, probe: &Disc) -> Option<usize> {
        let mut hit = None;
        for (j, d) in self.discs.iter().enumerate() {
            if d.intersects(probe) {
                if hit.is_some() {
                    return None;
                }
                hit = Some(j);
            }
        }
        hit
    }
}
