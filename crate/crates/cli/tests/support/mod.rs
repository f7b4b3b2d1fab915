#![allow(dead_code)]

pub mod conditions;
pub mod formula;

use curvesing::arith::{fmt_rat, rat, ratio, Rat};
use curvesing::catalog::class_by_number;
use curvesing::classify::classify_point;
use curvesing::curve::{parse_poly, BiPoly};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use formula::{eval, interpolate, solve_affine, Env};

/// Replaces each parameter letter (anything but `x` and `y`) by its value.
pub fn instantiate(template: &str, env: &Env) -> BiPoly {
    let mut text = String::new();
    for ch in template.chars() {
        match env.get(&ch) {
            Some(v) if ch != 'x' && ch != 'y' => text.push_str(&format!("({})", fmt_rat(v))),
            _ => text.push(ch),
        }
    }
    parse_poly(&text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub const TACNODE_FAMILY: &str = "(y+x^2)^2+a*x^5+b*x^3*y+c*x*y^2+d*x^4*y+e*x^2*y^2+f*y^3\
    +g*x^3*y^2+h*x*y^3+j*x^2*y^3+k*y^4+l*x*y^4+m*y^5";
pub const D_FAMILY: &str = "y^2*(y-x)-x^5+2*x^3*y+a*x^4*y+b*x^2*y^2+c*x^3*y^2+d*x*y^3\
    +e*x^2*y^3+f*y^4+g*x*y^4+h*y^5";
pub const CRUNODE_FAMILY: &str = "(y*(y-x)+a*x^3+b*x^2*y+c*x*y^2+d*y^3)*(y+e*x^2+f*x*y+g*y^2)";
pub const SIMPLE_POINT_FAMILY: &str =
    "(y+a*x^2+b*x*y+c*y^2)*(y+d*x^2+e*x*y+f*y^2+g*x^3+h*x^2*y+j*x*y^2+k*y^3)";

pub fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn random_env(rng: &mut ChaCha8Rng, letters: &str) -> Env {
    letters.chars().map(|c| (c, small_rat(rng))).collect()
}

/// Letters of the later `(y+x^2)^2` conditions: `c` minus `a`.
pub fn shifted(env: &Env) -> Env {
    let mut out = env.clone();
    out.insert('c', &env[&'c'] - &env[&'a']);
    out
}

pub fn origin() -> (Rat, Rat) {
    (rat(0), rat(0))
}

pub fn code_at_origin(f: &BiPoly) -> Result<String, String> {
    classify_point(f, &origin()).map(|r| r.code).map_err(|e| format!("{f}: {e}"))
}

pub fn irreducible_code(no: u32) -> &'static str {
    &class_by_number(true, no).expect("numbered class").code
}

pub fn reducible_code(no: u32) -> &'static str {
    &class_by_number(false, no).expect("numbered class").code
}

/// A canonical code with every brace list emptied.
pub fn shape(code: &str) -> String {
    let mut out = String::new();
    let mut rest = code;
    while let Some(at) = rest.find("|braces:") {
        out.push_str(&rest[..at + "|braces:".len()]);
        rest = &rest[at + "|braces:".len()..];
        let mut depth = 0usize;
        let end = rest
            .char_indices()
            .find(|&(_, ch)| match ch {
                '(' => {
                    depth += 1;
                    false
                }
                ')' if depth == 0 => true,
                ')' => {
                    depth -= 1;
                    false
                }
                _ => false,
            })
            .map_or(rest.len(), |(i, _)| i);
        rest = &rest[end..];
    }
    out.push_str(rest);
    out
}
