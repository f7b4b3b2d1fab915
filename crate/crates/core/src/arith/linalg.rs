//! Small dense linear algebra over ℚ.

use num_traits::{One, Zero};

use super::field::{Rat, QQ};
use super::upoly;

/// Determinant by Gaussian elimination with exact pivoting.
pub fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut sign = Rat::one();
    let mut acc = Rat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if piv != col {
            m.swap(piv, col);
            sign = -sign;
        }
        let p = m[col][col].clone();
        acc *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    sign * acc
}

/// Newton interpolation through `(xs[i], ys[i])`; xs distinct.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> Vec<Rat> {
    let n = xs.len();
    let mut coef: Vec<Rat> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut poly: Vec<Rat> = Vec::new();
    for i in (0..n).rev() {
        // poly = poly * (z - xs[i]) + coef[i]
        poly = upoly::mul(&QQ, &poly, &[-xs[i].clone(), Rat::one()]);
        poly = upoly::add(&QQ, &poly, &[coef[i].clone()]);
    }
    poly
}

/// Characteristic polynomial `det(z·I - m)`.
pub fn charpoly(m: &[Vec<Rat>]) -> Vec<Rat> {
    let n = m.len();
    let xs: Vec<Rat> = (0..=n).map(|k| Rat::from_integer((k as i64).into())).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|z| {
            let a = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let d = if i == j { z.clone() } else { Rat::zero() };
                            d - &m[i][j]
                        })
                        .collect()
                })
                .collect();
            det(a)
        })
        .collect();
    interpolate(&xs, &ys)
}
