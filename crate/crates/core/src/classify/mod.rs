//! Locating singular points and running the full classification at one.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith::factor::factor_rational_univariate;
use crate::arith::upoly as up;
use crate::arith::{fmt_rat, rat, Rat, QQ};
use crate::catalog::{classify_diagram, LookupContext, SingularityClass};
use crate::curve::{factor_rational, resultant, square_free_part, BiPoly, Var};
use crate::diagram::{build_diagram, Diagram};
use crate::error::{Error, Result};
use crate::newton::{analyze, NewtonPolygon, SegmentData};
use crate::puiseux::{default_cap, expand_to_separation, ProBranch};

pub const SCHEMA_VERSION: u32 = 1;

pub const WARN_IRRATIONAL: &str =
    "singular points with irrational or complex coordinates are not located";
pub const WARN_C_STATUS: &str = "ℚ-irreducible (ℂ-status unverified)";

/// How the irreducible/reducible flag for catalog lookup is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ContextMode {
    /// From the factorization over ℚ.
    #[default]
    Auto,
    Irreducible,
    Reducible,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub cap: Rat,
    pub context: ContextMode,
}

impl Default for Options {
    fn default() -> Self {
        Options { cap: default_cap(), context: ContextMode::Auto }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoints {
    pub points: Vec<(Rat, Rat)>,
    /// Set when the elimination polynomials have nonlinear factors, so
    /// that singular points off ℚ² may exist.
    pub may_miss_points: bool,
}

fn rational_roots(p: &[Rat]) -> (Vec<Rat>, bool) {
    let mut roots = Vec::new();
    let mut nonlinear = false;
    for (g, _) in factor_rational_univariate(p).1 {
        if g.len() == 2 {
            roots.push(-&g[0] / &g[1]);
        } else {
            nonlinear = true;
        }
    }
    roots.sort();
    roots.dedup();
    (roots, nonlinear)
}

/// Rational common zeros of `f`, `f_x` and `f_y`, sorted.
pub fn rational_singular_points(f: &BiPoly) -> SingularPoints {
    let fx = f.diff_x();
    let fy = f.diff_y();
    // Split off the factor depending on x alone: its lines x = x0 meet the
    // rest of the curve only above roots of that factor.
    let yp = crate::curve::ypoly::from_bi(f);
    let content = crate::curve::ypoly::content(&yp);
    let g = crate::curve::ypoly::to_bi(&crate::curve::ypoly::div_x(&yp, &content));

    let mut candidates = Vec::new();
    let mut may_miss = false;
    if content.len() > 1 {
        let (r, n) = rational_roots(&content);
        candidates.extend(r);
        may_miss |= n;
    }
    if g.degree_y().unwrap_or(0) > 0 {
        let disc = resultant(&g, &g.diff_y(), Var::Y);
        if !disc.is_zero() {
            let (r, n) = rational_roots(&disc.eval_y(&Rat::zero()));
            candidates.extend(r);
            may_miss |= n;
        }
    }
    candidates.sort();
    candidates.dedup();

    let mut points = Vec::new();
    for x0 in candidates {
        let mut h: Vec<Rat> = Vec::new();
        for p in [f, &fx, &fy] {
            h = up::gcd(&QQ, &h, &p.eval_x(&x0));
        }
        if h.is_empty() {
            continue;
        }
        let (r, n) = rational_roots(&h);
        may_miss |= n;
        points.extend(r.into_iter().map(|y0| (x0.clone(), y0)));
    }
    SingularPoints { points, may_miss_points: may_miss }
}

#[derive(Clone, Debug)]
pub struct FactorSummary {
    pub unit: Rat,
    pub factors: Vec<(BiPoly, u32)>,
}

impl FactorSummary {
    pub fn q_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub input: BiPoly,
    pub point: (Rat, Rat),
    /// `λ` of the shear `(x, y) ← (x + λy, y)`, if one was needed.
    pub shear: Option<u32>,
    /// The polynomial actually expanded, with the point at the origin.
    pub local: BiPoly,
    pub multiplicity: u32,
    pub tangent_cone: BiPoly,
    pub polygon: NewtonPolygon,
    pub segments: Vec<SegmentData>,
    pub branches: Vec<ProBranch>,
    pub diagram: Diagram,
    pub code: String,
    pub class: Option<&'static SingularityClass>,
    pub q_irreducible: bool,
    pub context: ContextMode,
    pub factorization: Option<FactorSummary>,
    pub warnings: Vec<String>,
}

impl ClassificationReport {
    pub fn shear_matrix(&self) -> Option<[[Rat; 2]; 2]> {
        self.shear.map(shear_matrix)
    }

    pub fn to_json(&self) -> Value {
        let pt = |p: &(Rat, Rat)| json!([fmt_rat(&p.0), fmt_rat(&p.1)]);
        let shear = self.shear_matrix().map(|m| {
            json!(m
                .iter()
                .map(|r| r.iter().map(fmt_rat).collect::<Vec<_>>())
                .collect::<Vec<_>>())
        });
        let factorization = self.factorization.as_ref().map(|s| {
            json!({
                "unit": fmt_rat(&s.unit),
                "factors": s.factors.iter()
                    .map(|(f, m)| json!({"factor": f.to_string(), "multiplicity": m}))
                    .collect::<Vec<_>>(),
            })
        });
        json!({
            "schema_version": SCHEMA_VERSION,
            "input": self.input.to_string(),
            "point": pt(&self.point),
            "normalization": {
                "shift": pt(&self.point),
                "shear": shear,
                "local_polynomial": self.local.to_string(),
            },
            "multiplicity": self.multiplicity,
            "tangent_cone": self.tangent_cone.to_string(),
            "newton_polygon": self.polygon.to_json(&self.segments),
            "branches": self.branches.iter().map(ProBranch::to_json).collect::<Vec<_>>(),
            "diagram": self.diagram.to_json(),
            "code": self.code,
            "class": self.class.map(SingularityClass::to_json),
            "context": {
                "mode": match self.context {
                    ContextMode::Auto => "auto",
                    ContextMode::Irreducible => "irreducible",
                    ContextMode::Reducible => "reducible",
                },
                "q_irreducible": self.q_irreducible,
            },
            "factorization": factorization,
            "warnings": self.warnings,
        })
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "point ({}, {})", fmt_rat(&self.point.0), fmt_rat(&self.point.1));
        let _ = writeln!(
            s,
            "multiplicity {}, tangent cone {}",
            self.multiplicity, self.tangent_cone
        );
        if let Some(l) = self.shear {
            let _ = writeln!(s, "shear (x, y) <- (x + {l}*y, y)");
        }
        let _ = writeln!(s, "branches:");
        for (i, b) in self.branches.iter().enumerate() {
            let real = if b.real_representable { "real" } else { "complex" };
            let _ = writeln!(s, "  #{} {}  [{real}, q={}]", i + 1, b.describe(&b.terms), b.ramification);
        }
        let _ = writeln!(s, "diagram:");
        for line in self.diagram.render_ascii().lines() {
            let _ = writeln!(s, "  {line}");
        }
        let _ = writeln!(s, "code {}", self.code);
        match self.class {
            Some(c) => {
                let mut nos = Vec::new();
                if let Some(n) = c.irreducible_no {
                    nos.push(format!("irreducible no. {n}"));
                }
                if let Some(n) = c.reducible_no {
                    nos.push(format!("reducible no. {n}"));
                }
                let _ = writeln!(s, "class {} ({})", c.arnold_label, nos.join(", "));
            }
            None => {
                let _ = writeln!(s, "class not in catalog");
            }
        }
        let ctx = if self.q_irreducible { "irreducible" } else { "reducible" };
        let _ = writeln!(s, "context {ctx}");
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}

fn shear_matrix(l: u32) -> [[Rat; 2]; 2] {
    [[Rat::one(), rat(i64::from(l))], [Rat::zero(), Rat::one()]]
}

/// Smallest `λ ≥ 1` for which the cone has no factor `x` after the shear,
/// or `None` if no shear is needed.
fn shear_for(cone: &BiPoly, m: u32) -> Option<u32> {
    if !cone.coeff(0, m).is_zero() {
        return None;
    }
    (1u32..)
        .find(|&l| !cone.eval(&rat(i64::from(l)), &Rat::one()).is_zero())
}

/// Moves `p` to the origin and shears away a vertical tangent.
/// Returns the local polynomial and the shear parameter used.
pub fn localize(f: &BiPoly, p: &(Rat, Rat)) -> Result<(BiPoly, Option<u32>)> {
    let moved = f.translate(p);
    let m = moved.multiplicity_at_origin()?;
    let shear = shear_for(&moved.tangent_cone()?, m);
    match shear {
        Some(l) => Ok((moved.linear_change(&shear_matrix(l))?, shear)),
        None => Ok((moved, None)),
    }
}

#[derive(Clone, Debug)]
pub struct LocalExpansion {
    pub point: (Rat, Rat),
    pub shear: Option<u32>,
    pub local: BiPoly,
    pub branches: Vec<ProBranch>,
    pub diagram: Diagram,
}

impl LocalExpansion {
    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "point": [fmt_rat(&self.point.0), fmt_rat(&self.point.1)],
            "shear": self.shear,
            "local_polynomial": self.local.to_string(),
            "branches": self.branches.iter().map(ProBranch::to_json).collect::<Vec<_>>(),
            "diagram": self.diagram.to_json(),
        })
    }

    pub fn render_text(&self, exact: bool) -> String {
        let mut s = String::new();
        if let Some(l) = self.shear {
            let _ = writeln!(s, "shear (x, y) <- (x + {l}*y, y)");
        }
        for (i, b) in self.branches.iter().enumerate() {
            let _ = writeln!(s, "branch#{}: {}", i + 1, b.describe(&b.terms));
            if exact {
                for t in &b.terms {
                    let _ = writeln!(
                        s,
                        "    x^{}: {}  in {}",
                        fmt_rat(&t.exponent),
                        t.coeff,
                        t.coeff.field().describe()
                    );
                }
            }
        }
        s.push_str(&self.diagram.render_ascii());
        s
    }
}

/// Branches and diagram of `f` at `p`, which must lie on the curve.
pub fn expand_at(f: &BiPoly, p: &(Rat, Rat), cap: &Rat) -> Result<LocalExpansion> {
    let (local, shear) = localize(f, p)?;
    let branches = expand_to_separation(&local, cap)?;
    let diagram = build_diagram(&branches)?;
    Ok(LocalExpansion { point: p.clone(), shear, local, branches, diagram })
}

pub fn classify_point(f: &BiPoly, p: &(Rat, Rat)) -> Result<ClassificationReport> {
    classify_point_with(f, p, &Options::default())
}

pub fn classify_point_with(
    f: &BiPoly,
    p: &(Rat, Rat),
    opts: &Options,
) -> Result<ClassificationReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let singular = [f.clone(), f.diff_x(), f.diff_y()]
        .iter()
        .all(|g| g.eval(&p.0, &p.1).is_zero());
    if !singular {
        return Err(Error::NotSingular { x: fmt_rat(&p.0), y: fmt_rat(&p.1) });
    }
    if square_free_part(f).1 {
        return Err(Error::MultipleComponent);
    }

    let (local, shear) = localize(f, p)?;
    let multiplicity = local.multiplicity_at_origin()?;
    let tangent_cone = local.tangent_cone()?;
    let (polygon, segments) = analyze(&local)?;
    let branches = expand_to_separation(&local, &opts.cap)?;
    let diagram = build_diagram(&branches)?;
    let code = diagram.canonical_code();

    let mut warnings = Vec::new();
    let factorization = match factor_rational(f) {
        Ok(l) => Some(FactorSummary { unit: l.unit, factors: l.factors }),
        Err(e) => {
            warnings.push(format!("factorization skipped: {e}"));
            None
        }
    };
    let auto_irreducible = factorization.as_ref().is_some_and(FactorSummary::q_irreducible);
    let q_irreducible = match opts.context {
        ContextMode::Auto => auto_irreducible,
        ContextMode::Irreducible => true,
        ContextMode::Reducible => false,
    };
    if opts.context == ContextMode::Auto && auto_irreducible {
        warnings.push(WARN_C_STATUS.to_string());
    }
    let degree = f.total_degree().unwrap_or(0);
    let class = classify_diagram(&diagram, LookupContext { curve_degree: degree, q_irreducible })
        .class();

    Ok(ClassificationReport {
        input: f.clone(),
        point: p.clone(),
        shear,
        local,
        multiplicity,
        tangent_cone,
        polygon,
        segments,
        branches,
        diagram,
        code,
        class,
        q_irreducible,
        context: opts.context,
        factorization,
        warnings,
    })
}

#[derive(Debug)]
pub struct PointResult {
    pub point: (Rat, Rat),
    pub report: Result<ClassificationReport>,
}

#[derive(Debug)]
pub struct Classification {
    pub results: Vec<PointResult>,
    pub may_miss_points: bool,
}

/// Classifies every rational singular point, in point order.
pub fn classify_all(f: &BiPoly, opts: &Options) -> Result<Classification> {
    if square_free_part(f).1 {
        return Err(Error::MultipleComponent);
    }
    let sp = rational_singular_points(f);
    let results = sp
        .points
        .into_iter()
        .map(|p| {
            let report = classify_point_with(f, &p, opts);
            PointResult { point: p, report }
        })
        .collect();
    Ok(Classification { results, may_miss_points: sp.may_miss_points })
}

#[cfg(test)]
mod tests;
