use num_traits::Zero;

use super::ypoly;
use super::BiPoly;
use crate::arith::linalg::{det, interpolate};
use crate::arith::upoly as up;
use crate::arith::{rat, Rat, QQ};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Sylvester matrix of `a` (formal degree `n`) and `b` (formal degree `m`),
/// both given lowest degree first. Rows hold `m` shifts of `a` followed by
/// `n` shifts of `b`, coefficients in descending order.
pub fn sylvester(a: &[Rat], n: usize, b: &[Rat], m: usize) -> Vec<Vec<Rat>> {
    let size = n + m;
    let coef = |p: &[Rat], k: usize| p.get(k).cloned().unwrap_or_else(Rat::zero);
    let mut rows = Vec::with_capacity(size);
    for shift in 0..m {
        let mut row = vec![Rat::zero(); size];
        for k in 0..=n {
            row[shift + k] = coef(a, n - k);
        }
        rows.push(row);
    }
    for shift in 0..n {
        let mut row = vec![Rat::zero(); size];
        for k in 0..=m {
            row[shift + k] = coef(b, m - k);
        }
        rows.push(row);
    }
    rows
}

/// Resultant of univariate polynomials with respect to their actual degrees.
pub fn resultant_univariate(a: &[Rat], b: &[Rat]) -> Rat {
    let a = up::trim(&QQ, a.to_vec());
    let b = up::trim(&QQ, b.to_vec());
    if a.is_empty() || b.is_empty() {
        return Rat::zero();
    }
    det(sylvester(&a, a.len() - 1, &b, b.len() - 1))
}

/// Eliminates `var`. The result is a polynomial in the other variable only.
pub fn resultant(f: &BiPoly, g: &BiPoly, var: Var) -> BiPoly {
    if var == Var::X {
        return resultant(&f.swap_xy(), &g.swap_xy(), Var::Y).swap_xy();
    }
    if f.is_zero() || g.is_zero() {
        return BiPoly::zero();
    }
    let fy = ypoly::from_bi(f);
    let gy = ypoly::from_bi(g);
    let n = fy.len() - 1;
    let m = gy.len() - 1;
    let bound = ypoly::deg_x(&fy) * m + ypoly::deg_x(&gy) * n;
    let xs: Vec<Rat> = (0..=bound as i64).map(rat).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|x0| {
            let a: Vec<Rat> = fy.iter().map(|c| up::eval(&QQ, c, x0)).collect();
            let b: Vec<Rat> = gy.iter().map(|c| up::eval(&QQ, c, x0)).collect();
            det(sylvester(&a, n, &b, m))
        })
        .collect();
    BiPoly::from_x_poly(&up::trim(&QQ, interpolate(&xs, &ys)))
}
