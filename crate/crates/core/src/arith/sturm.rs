//! Sturm sequences for counting real roots of rational polynomials.

use num_traits::{Signed, Zero};

use super::field::{Rat, QQ};
use super::upoly;

pub fn sturm_sequence(p: &[Rat]) -> Vec<Vec<Rat>> {
    let mut seq = vec![p.to_vec()];
    let d = upoly::derivative(&QQ, p);
    if d.is_empty() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = upoly::rem(&QQ, &seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(upoly::neg(&QQ, &r));
    }
    seq
}

fn variations<I: IntoIterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_at_infinity(p: &[Rat], positive: bool) -> i8 {
    let s = sign(p.last().expect("nonzero"));
    if positive || (p.len() - 1).is_multiple_of(2) {
        s
    } else {
        -s
    }
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &[Rat]) -> usize {
    let seq = sturm_sequence(p);
    let lo = variations(seq.iter().map(|q| sign_at_infinity(q, false)));
    let hi = variations(seq.iter().map(|q| sign_at_infinity(q, true)));
    lo - hi
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
pub fn count_real_roots_in(p: &[Rat], a: &Rat, b: &Rat) -> usize {
    let seq = sturm_sequence(p);
    let at = |x: &Rat| variations(seq.iter().map(|q| sign(&upoly::eval(&QQ, q, x))));
    at(a) - at(b)
}
