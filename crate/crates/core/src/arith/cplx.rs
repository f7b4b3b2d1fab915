//! Gaussian rationals and certified discs in the complex plane.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{fmt_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }
    pub fn real(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }
    pub fn zero() -> Self {
        Self::real(Rat::zero())
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn add(&self, o: &Self) -> Self {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
    pub fn sub(&self, o: &Self) -> Self {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
    pub fn mul(&self, o: &Self) -> Self {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    pub fn scale(&self, s: &Rat) -> Self {
        GaussRat::new(&self.re * s, &self.im * s)
    }
    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }
    pub fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn div(&self, o: &Self) -> Self {
        let n = o.norm_sq();
        let p = self.mul(&o.conj());
        GaussRat::new(p.re / &n, p.im / n)
    }
    /// Upper bound for the modulus.
    pub fn abs_upper(&self) -> Rat {
        self.re.abs() + self.im.abs()
    }
    /// Lower bound for the modulus.
    pub fn abs_lower(&self) -> Rat {
        self.re.abs().max(self.im.abs())
    }
    pub fn round(&self, prec: u32) -> Self {
        GaussRat::new(round_dyadic(&self.re, prec), round_dyadic(&self.im, prec))
    }
    pub fn to_f64(&self) -> (f64, f64) {
        (rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Nearest rational with denominator `2^prec`.
pub fn round_dyadic(x: &Rat, prec: u32) -> Rat {
    let scale = BigInt::one() << prec;
    let scaled = x * Rat::from_integer(scale.clone()) + Rat::new(BigInt::one(), BigInt::from(2));
    Rat::new(scaled.floor().to_integer(), scale)
}

/// Smallest dyadic `≥ x` with denominator `2^prec`.
pub fn ceil_dyadic(x: &Rat, prec: u32) -> Rat {
    let scale = BigInt::one() << prec;
    let scaled = x * Rat::from_integer(scale.clone());
    Rat::new(scaled.ceil().to_integer(), scale)
}

/// Rational upper bound of `sqrt(x)` for `x ≥ 0`, within a factor close to 1.
pub fn sqrt_upper(x: &Rat) -> Rat {
    if x.is_zero() {
        return Rat::zero();
    }
    // sqrt(n/d) = sqrt(n·d)/d ≤ (isqrt(n·d·4^k)+1)/(d·2^k)
    let k = 32u32;
    let nd: BigInt = x.numer() * x.denom() * (BigInt::one() << (2 * k));
    let s = nd.sqrt() + 1;
    Rat::new(s, x.denom() * (BigInt::one() << k))
}

/// Closed disc `|z - center| ≤ rad`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Disc {
    pub center: GaussRat,
    pub rad: Rat,
}

impl Disc {
    pub fn point(c: GaussRat) -> Self {
        Disc { center: c, rad: Rat::zero() }
    }

    pub fn intersects(&self, o: &Disc) -> bool {
        let d = self.center.sub(&o.center).norm_sq();
        let r = &self.rad + &o.rad;
        d <= &r * &r
    }

    /// `o ⊆ self`.
    pub fn contains_disc(&self, o: &Disc) -> bool {
        if o.rad > self.rad {
            return false;
        }
        let d = self.center.sub(&o.center).norm_sq();
        let r = &self.rad - &o.rad;
        d <= &r * &r
    }

    pub fn contains_point(&self, p: &GaussRat) -> bool {
        self.center.sub(p).norm_sq() <= &self.rad * &self.rad
    }

    pub fn meets_real_axis(&self) -> bool {
        self.center.im.abs() <= self.rad
    }

    pub fn contains_zero(&self) -> bool {
        self.contains_point(&GaussRat::zero())
    }

    pub fn conj(&self) -> Disc {
        Disc { center: self.center.conj(), rad: self.rad.clone() }
    }

    /// Bounding box `[re_lo, re_hi] × [im_lo, im_hi]`.
    pub fn bbox(&self) -> (Rat, Rat, Rat, Rat) {
        (
            &self.center.re - &self.rad,
            &self.center.re + &self.rad,
            &self.center.im - &self.rad,
            &self.center.im + &self.rad,
        )
    }
}

impl fmt::Display for Disc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c, d) = self.bbox();
        write!(
            f,
            "[{},{}]×[{},{}]",
            fmt_rat(&a),
            fmt_rat(&b),
            fmt_rat(&c),
            fmt_rat(&d)
        )
    }
}

/// Evaluates a rational polynomial and its derivative at a Gaussian rational.
pub fn eval_with_derivative(p: &[Rat], z: &GaussRat) -> (GaussRat, GaussRat) {
    let mut v = GaussRat::zero();
    let mut d = GaussRat::zero();
    for c in p.iter().rev() {
        d = d.mul(z).add(&v);
        v = v.mul(z).add(&GaussRat::real(c.clone()));
    }
    (v, d)
}

/// Integer part of log2 of a positive rational, roughly.
pub fn log2_floor(x: &Rat) -> i64 {
    x.numer().bits() as i64 - x.denom().bits() as i64
}

pub fn is_even(n: &BigInt) -> bool {
    n.is_even()
}
