//! Newton–Puiseux expansion of the branches of a curve at the origin,
//! carried just far enough that every branch is told apart from the others.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::algebraic::{roots_over, AlgebraicNumber, Tower};
use crate::arith::{fmt_rat, rat, ratio, Field, Rat};
use crate::curve::BiPoly;
use crate::error::{Error, Result};
use crate::newton::{hull, segment_poly_generic, segments_of};

/// Default bound on the exponents the expansion may reach.
pub fn default_cap() -> Rat {
    rat(8)
}

#[derive(Clone, Debug)]
pub struct PuiseuxTerm {
    pub exponent: Rat,
    pub coeff: AlgebraicNumber,
}

/// One pro-branch, truncated after the exponent at which it separates from
/// the other branches.
#[derive(Clone, Debug)]
pub struct ProBranch {
    pub terms: Vec<PuiseuxTerm>,
    pub ramification: u32,
    pub separated_at: Rat,
    pub real_representable: bool,
    /// Every term computed for this branch, possibly past `separated_at`.
    pub(crate) jet: Vec<PuiseuxTerm>,
    /// The expansion ends exactly after `jet`.
    pub(crate) exact: bool,
    pub(crate) tail: Option<Level>,
}

// Polynomial in (s, y') with coefficients given as coordinates in a field.
type KBi = BTreeMap<(u32, u32), Vec<Rat>>;

/// A stage of the expansion: `x = s^q`, `y = jet(s) + s^p · y'`, and
/// `g(s, y') = 0` is the transformed curve.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    field: Tower,
    g: KBi,
    q: u32,
    p: u32,
}

enum Child {
    Exact,
    Term {
        exponent: Rat,
        coeff: AlgebraicNumber,
        next: Level,
        sub: Option<Vec<Child>>,
    },
}

impl Child {
    fn exponent(&self) -> Option<&Rat> {
        match self {
            Child::Exact => None,
            Child::Term { exponent, .. } => Some(exponent),
        }
    }
}

fn binomial(n: u32, k: u32) -> Rat {
    let mut r = Rat::one();
    for i in 0..k {
        r = r * rat(i64::from(n - i)) / rat(i64::from(i + 1));
    }
    r
}

/// `g(s^q, s^p (c + y')) / s^ν` for the segment of inclination `p/q`.
fn transform(k: &Tower, g: &KBi, p: u32, q: u32, c: &[Rat]) -> KBi {
    let nu = g.keys().map(|&(i, j)| q * i + p * j).min().expect("nonzero");
    let c = c.to_vec();
    let mut out: KBi = BTreeMap::new();
    for (&(i, j), a) in g {
        let si = q * i + p * j - nu;
        let mut cpow = k.one();
        // l counts down so that c^(j-l) grows with the loop
        for l in (0..=j).rev() {
            let t = k.mul(&k.mul(a, &cpow), &k.from_rat(&binomial(j, l)));
            let e = out.entry((si, l)).or_default();
            *e = k.add(e, &t);
            cpow = k.mul(&cpow, &c);
        }
    }
    out.retain(|_, v| !v.is_empty());
    out
}

fn embed_poly(to: &Tower, from: &Tower, g: &KBi) -> KBi {
    g.iter()
        .map(|(k, a)| (*k, to.embed_coords(from, a).expect("field lies above")))
        .collect()
}

fn expand_level(level: &Level, cap: &Rat) -> Result<Vec<Child>> {
    let k = &level.field;
    let verts = hull(level.g.keys().copied());
    let jmin = verts.last().expect("nonempty").1;
    let mut children = Vec::new();
    for seg in segments_of(&verts) {
        let (p, q) = (seg.p(), seg.q());
        let exponent = Rat::new(
            i64::from(q * level.p + p).into(),
            i64::from(q * level.q).into(),
        );
        if exponent > *cap {
            return Err(Error::CapExceeded { cap: fmt_rat(cap) });
        }
        let phi = segment_poly_generic(k, &level.g, &seg);
        for (c, mult) in roots_over(k, &phi) {
            let l = c.field().clone();
            let g = if l.same(k) { level.g.clone() } else { embed_poly(&l, k, &level.g) };
            let next = Level {
                g: transform(&l, &g, p, q, c.coords()),
                field: l,
                q: level.q * q,
                p: level.p * q + p,
            };
            let sub = if mult > 1 { Some(expand_level(&next, cap)?) } else { None };
            children.push(Child::Term { exponent: exponent.clone(), coeff: c, next, sub });
        }
    }
    match jmin {
        0 => {}
        1 => children.push(Child::Exact),
        _ => return Err(Error::MultipleComponent),
    }
    Ok(children)
}

struct Leaf {
    path: Vec<usize>,
    jet: Vec<PuiseuxTerm>,
    exact: bool,
    tail: Option<Level>,
}

fn collect(children: &[Child], path: &mut Vec<usize>, jet: &mut Vec<PuiseuxTerm>, out: &mut Vec<Leaf>) {
    for (idx, ch) in children.iter().enumerate() {
        path.push(idx);
        match ch {
            Child::Exact => out.push(Leaf { path: path.clone(), jet: jet.clone(), exact: true, tail: None }),
            Child::Term { exponent, coeff, next, sub } => {
                jet.push(PuiseuxTerm { exponent: exponent.clone(), coeff: coeff.clone() });
                match sub {
                    Some(s) => collect(s, path, jet, out),
                    None => out.push(Leaf {
                        path: path.clone(),
                        jet: jet.clone(),
                        exact: false,
                        tail: Some(next.clone()),
                    }),
                }
                jet.pop();
            }
        }
        path.pop();
    }
}

fn child_at<'a>(root: &'a [Child], path: &[usize]) -> &'a Child {
    let mut cur = root;
    let mut node = &root[path[0]];
    for &i in path {
        node = &cur[i];
        if let Child::Term { sub: Some(s), .. } = node {
            cur = s;
        }
    }
    node
}

/// Contact of two leaves read off the expansion tree.
fn tree_contact(root: &[Child], a: &[usize], b: &[usize]) -> Rat {
    let d = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    let ea = child_at(root, &a[..=d]).exponent();
    let eb = child_at(root, &b[..=d]).exponent();
    match (ea, eb) {
        (Some(x), Some(y)) => x.min(y).clone(),
        (Some(x), None) | (None, Some(x)) => x.clone(),
        (None, None) => unreachable!("two exact branches at one node"),
    }
}

/// Computes every pro-branch of `f` at the origin.
///
/// `f` must be square-free, vanish at the origin and have no vertical
/// tangent. Exactly `multiplicity_at_origin(f)` branches are returned.
pub fn expand_to_separation(f: &BiPoly, cap: &Rat) -> Result<Vec<ProBranch>> {
    let m = f.multiplicity_at_origin()?;
    let cone = f.tangent_cone()?;
    if cone.x_adic_order() > 0 {
        return Err(Error::VerticalTangent);
    }
    let qq = Tower::rationals();
    let g: KBi = f.terms().map(|(k, c)| (k, qq.from_rat(c))).collect();
    let top = Level { field: qq, g, q: 1, p: 0 };
    let tree = expand_level(&top, cap)?;
    let mut leaves = Vec::new();
    collect(&tree, &mut Vec::new(), &mut Vec::new(), &mut leaves);
    debug_assert_eq!(leaves.len(), m as usize);

    let mut out = Vec::with_capacity(leaves.len());
    for (a, leaf) in leaves.iter().enumerate() {
        let separated_at = leaves
            .iter()
            .enumerate()
            .filter(|(b, _)| *b != a)
            .map(|(_, other)| tree_contact(&tree, &leaf.path, &other.path))
            .max()
            .unwrap_or_else(Rat::zero);
        let mut terms: Vec<PuiseuxTerm> =
            leaf.jet.iter().filter(|t| t.exponent <= separated_at).cloned().collect();
        // A branch whose coefficients vanish up to its separation keeps its
        // leading term, so the jet still shows where it goes.
        if terms.is_empty() {
            terms.extend(leaf.jet.first().cloned());
        }
        let ramification = ramification_of(&terms);
        let mut b = ProBranch {
            terms,
            ramification,
            separated_at,
            real_representable: false,
            jet: leaf.jet.clone(),
            exact: leaf.exact,
            tail: leaf.tail.clone(),
        };
        b.real_representable = real_representable(&b);
        out.push(b);
    }
    Ok(out)
}

fn ramification_of(terms: &[PuiseuxTerm]) -> u32 {
    terms
        .iter()
        .map(|t| t.exponent.denom().to_u32().expect("small denominator"))
        .fold(1, |a, d| a.lcm(&d))
}

fn coeff_at<'a>(b: &'a ProBranch, e: &Rat) -> Option<&'a AlgebraicNumber> {
    b.jet.iter().find(|t| t.exponent == *e).map(|t| &t.coeff)
}

/// First exponent at which the two branches have different coefficients,
/// a missing term counting as zero.
pub fn contact_exponent(b1: &ProBranch, b2: &ProBranch) -> Result<Rat> {
    let mut exps: Vec<&Rat> = b1.jet.iter().chain(&b2.jet).map(|t| &t.exponent).collect();
    exps.sort();
    exps.dedup();
    let end1 = b1.jet.last().map(|t| &t.exponent);
    let end2 = b2.jet.last().map(|t| &t.exponent);
    for e in exps {
        let beyond = |end: Option<&Rat>, exact: bool| !exact && end.is_none_or(|x| e > x);
        if beyond(end1, b1.exact) || beyond(end2, b2.exact) {
            break;
        }
        let same = match (coeff_at(b1, e), coeff_at(b2, e)) {
            (Some(a), Some(b)) => a.equals(b),
            (None, None) => true,
            _ => false,
        };
        if !same {
            return Ok(e.clone());
        }
    }
    Err(Error::NotSeparated)
}

/// Whether some `ζ` with `ζ^q = ±1` makes every `c·ζ^k` real, where the
/// terms are `c·x^(k/q)` and `q` is the ramification.
///
/// Such a branch has a real parametrization `x = ±t^q`.
pub fn real_representable(b: &ProBranch) -> bool {
    let q = b.ramification;
    let mut conds = Vec::new();
    for t in &b.terms {
        let k = (&t.exponent * rat(i64::from(q))).to_integer().to_u32().expect("integral");
        let c2q = t.coeff.pow(2 * u64::from(q));
        if !c2q.is_real() || c2q.signum() != Ok(std::cmp::Ordering::Greater) {
            return false;
        }
        conds.push((arg_index(&t.coeff, q), k));
    }
    (0..2 * q).any(|m| conds.iter().all(|&(j, k)| (j + m * k) % q == 0))
}

/// For `c` with `c^(2q) > 0`, the `j` in `0..2q` with `arg c = π j / q`.
fn arg_index(c: &AlgebraicNumber, q: u32) -> u32 {
    if let Some(r) = c.as_rational() {
        return if r.is_positive() { 0 } else { q };
    }
    let step = std::f64::consts::PI / f64::from(q);
    let mut rad = ratio(1, 1 << 12);
    loop {
        let d = c.enclose(&rad);
        let lower = crate::algebraic::abs_lower_of(&d);
        if lower.is_positive() {
            let (re, im) = d.center.to_f64();
            let ratio_bound = crate::arith::cplx::rat_to_f64(&(&d.rad / &lower));
            // the true argument lies within asin(ratio) ≤ (π/2)·ratio of the centre's
            if ratio_bound * std::f64::consts::FRAC_PI_2 + 1e-9 < step / 4.0 {
                let theta = im.atan2(re).rem_euclid(2.0 * std::f64::consts::PI);
                let j = (theta / step).round() as i64;
                return j.rem_euclid(2 * i64::from(q)) as u32;
            }
        }
        rad /= Rat::from_integer(1024.into());
    }
}

/// Valuation in `x` of `f(x, ŷ(x))`, where `ŷ` is the branch's stored
/// terms followed by its next `extra` nonzero terms. `None` means the
/// truncated series is an exact solution.
pub fn residual_valuation(f: &BiPoly, b: &ProBranch, extra: usize) -> Result<Option<Rat>> {
    let mut terms = b.terms.clone();
    let mut pending: Vec<PuiseuxTerm> = b.jet[b.terms.len()..].to_vec();
    let mut tail = b.tail.clone();
    let mut exact = b.exact && pending.is_empty();
    for _ in 0..extra {
        if !pending.is_empty() {
            terms.push(pending.remove(0));
            if pending.is_empty() && b.exact {
                exact = true;
            }
            continue;
        }
        if exact {
            break;
        }
        match tail.as_ref().and_then(next_term) {
            Some((t, lvl)) => {
                terms.push(t);
                tail = lvl;
                if tail.is_none() {
                    exact = true;
                }
            }
            None => {
                exact = true;
            }
        }
    }
    Ok(valuation_at(f, &terms))
}

/// Follows a separated branch one more step. Returns the next term and the
/// stage after it, or no stage if that term ends the series.
fn next_term(level: &Level) -> Option<(PuiseuxTerm, Option<Level>)> {
    let k = &level.field;
    let verts = hull(level.g.keys().copied());
    if verts.len() < 2 {
        return None;
    }
    let seg = &segments_of(&verts)[0];
    let (p, q) = (seg.p(), seg.q());
    debug_assert_eq!(q, 1);
    let phi = segment_poly_generic(k, &level.g, seg);
    let c = k.neg(&k.div(&phi[0], &phi[1]).expect("linear"));
    let exponent = Rat::new(
        i64::from(q * level.p + p).into(),
        i64::from(q * level.q).into(),
    );
    let next = Level {
        g: transform(k, &level.g, p, q, &c),
        field: k.clone(),
        q: level.q * q,
        p: level.p * q + p,
    };
    let term = PuiseuxTerm { exponent, coeff: AlgebraicNumber::new(k, c) };
    let done = next.g.keys().all(|&(_, j)| j >= 1);
    Some((term, if done { None } else { Some(next) }))
}

fn valuation_at(f: &BiPoly, terms: &[PuiseuxTerm]) -> Option<Rat> {
    let field = terms
        .iter()
        .map(|t| t.coeff.field())
        .max_by_key(|k| k.levels().len())
        .cloned()
        .unwrap_or_else(Tower::rationals);
    let den = terms
        .iter()
        .map(|t| t.exponent.denom().to_u32().expect("small"))
        .fold(1u32, |a, d| a.lcm(&d));
    // ŷ(s) with x = s^den
    let mut yhat: BTreeMap<u32, Vec<Rat>> = BTreeMap::new();
    for t in terms {
        let e = (&t.exponent * rat(i64::from(den))).to_integer().to_u32().expect("integral");
        let c = t.coeff.embed(&field).expect("coefficients lie on one tower");
        yhat.insert(e, c.coords().to_vec());
    }
    let mul = |a: &BTreeMap<u32, Vec<Rat>>, b: &BTreeMap<u32, Vec<Rat>>| {
        let mut out: BTreeMap<u32, Vec<Rat>> = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e = out.entry(ea + eb).or_default();
                *e = field.add(e, &field.mul(ca, cb));
            }
        }
        out.retain(|_, v| !v.is_empty());
        out
    };
    let dy = f.degree_y().unwrap_or(0);
    let mut pows = vec![BTreeMap::from([(0u32, field.one())])];
    for j in 0..dy as usize {
        let nxt = mul(&pows[j], &yhat);
        pows.push(nxt);
    }
    let mut total: BTreeMap<u32, Vec<Rat>> = BTreeMap::new();
    for ((i, j), a) in f.terms() {
        for (e, c) in &pows[j as usize] {
            let slot = total.entry(e + i * den).or_default();
            *slot = field.add(slot, &field.mul(c, &field.from_rat(a)));
        }
    }
    total
        .into_iter()
        .find(|(_, v)| !v.is_empty())
        .map(|(e, _)| Rat::new(i64::from(e).into(), i64::from(den).into()))
}

impl PuiseuxTerm {
    pub fn to_json(&self) -> Value {
        json!({ "exponent": fmt_rat(&self.exponent), "coeff": self.coeff.to_string() })
    }
}

impl ProBranch {
    /// The computed expansion including terms past the separation exponent.
    pub fn jet(&self) -> &[PuiseuxTerm] {
        &self.jet
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ramification": self.ramification,
            "terms": self.terms.iter().map(PuiseuxTerm::to_json).collect::<Vec<_>>(),
            "real": self.real_representable,
            "separated_at": fmt_rat(&self.separated_at),
        })
    }

    /// `y = c1*x^e1 + ...` with coefficients printed approximately.
    pub fn describe(&self, terms: &[PuiseuxTerm]) -> String {
        if terms.is_empty() {
            return "y = 0".into();
        }
        let mut out = String::from("y =");
        for (i, t) in terms.iter().enumerate() {
            let pow = if t.exponent.is_one() {
                "x".to_string()
            } else if t.exponent.is_integer() {
                format!("x^{}", fmt_rat(&t.exponent))
            } else {
                format!("x^({})", fmt_rat(&t.exponent))
            };
            let (neg, body) = match t.coeff.as_rational() {
                Some(r) if r.abs().is_one() => (r.is_negative(), pow),
                Some(r) => (r.is_negative(), format!("{}*{pow}", fmt_rat(&r.abs()))),
                None => (false, format!("({})*{pow}", approx_coeff(&t.coeff))),
            };
            out.push_str(match (i, neg) {
                (0, true) => " -",
                (0, false) => " ",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            out.push_str(&body);
        }
        out
    }
}

/// Short human-readable form: exact when rational, else a decimal approximation.
pub fn approx_coeff(c: &AlgebraicNumber) -> String {
    if let Some(r) = c.as_rational() {
        return fmt_rat(&r);
    }
    let d = c.enclose(&ratio(1, 1 << 30));
    let (re, im) = d.center.to_f64();
    let fmt = |v: f64| {
        let s = format!("{v:.6}");
        let s = s.trim_end_matches('0').trim_end_matches('.').to_string();
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    };
    if c.is_real() {
        fmt(re)
    } else if re.abs() < 1e-12 {
        format!("{}i", fmt(im))
    } else if im < 0.0 {
        format!("{} - {}i", fmt(re), fmt(-im))
    } else {
        format!("{} + {}i", fmt(re), fmt(im))
    }
}
