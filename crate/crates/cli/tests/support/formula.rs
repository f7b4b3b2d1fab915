//! A tiny evaluator for polynomial expressions in single-letter parameters.
//!
//! Grammar: sums and products of rationals, letters `a`..`z`, parentheses
//! and non-negative integer powers. Used only to evaluate the printed
//! discriminant conditions at sampled parameter values.

use std::collections::HashMap;

use curvesing::arith::{rat, Rat};
use num_traits::{One, Zero};

pub type Env = HashMap<char, Rat>;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    env: &'a Env,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Rat {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()
            }
            _ => self.term(),
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.term();
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.term();
                }
                _ => return acc,
            }
        }
    }

    fn term(&mut self) -> Rat {
        let mut acc = self.power();
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc *= self.power();
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc /= self.power();
                }
                _ => return acc,
            }
        }
    }

    fn power(&mut self) -> Rat {
        let base = self.atom();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer();
            let mut out = Rat::one();
            for _ in 0..e {
                out *= &base;
            }
            return out;
        }
        base
    }

    fn integer(&mut self) -> u64 {
        self.peek();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .unwrap_or_else(|_| panic!("expected integer at {start}"))
    }

    fn atom(&mut self) -> Rat {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr();
                assert_eq!(self.peek(), Some(b')'), "unbalanced parentheses");
                self.pos += 1;
                v
            }
            Some(c) if c.is_ascii_digit() => Rat::from_integer(self.integer().into()),
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                self.env
                    .get(&(c as char))
                    .cloned()
                    .unwrap_or_else(|| panic!("unbound parameter {}", c as char))
            }
            other => panic!("unexpected {:?} at {}", other.map(|c| c as char), self.pos),
        }
    }
}

pub fn eval(src: &str, env: &Env) -> Rat {
    let mut p = Parser { s: src.as_bytes(), pos: 0, env };
    let v = p.expr();
    assert!(p.peek().is_none(), "trailing input at {} in {src}", p.pos);
    v
}

/// Solves `src = 0` for `var`, assuming the expression is affine in it.
pub fn solve_affine(src: &str, var: char, env: &Env) -> Rat {
    let mut e = env.clone();
    e.insert(var, Rat::zero());
    let v0 = eval(src, &e);
    e.insert(var, rat(1));
    let slope = eval(src, &e) - &v0;
    e.insert(var, rat(2));
    let v2 = eval(src, &e);
    assert_eq!(v2, &v0 + &slope * rat(2), "{var} does not enter affinely");
    assert!(!slope.is_zero(), "coefficient of {var} vanishes");
    -v0 / slope
}

/// Value at `t` of the polynomial of degree < `xs.len()` through the points.
pub fn interpolate(xs: &[Rat], ys: &[Rat], t: &Rat) -> Rat {
    let mut out = Rat::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut w = yi.clone();
        for (k, xk) in xs.iter().enumerate() {
            if k != i {
                w *= (t - xk) / (xi - xk);
            }
        }
        out += w;
    }
    out
}
