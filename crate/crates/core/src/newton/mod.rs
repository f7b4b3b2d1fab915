//! Newton polygons of curves at the origin.
//!
//! Support points are `(i, j)` for monomials `x^i y^j`. The polygon runs
//! from the lowest point on the `j`-axis down to the lowest row of the
//! support, following the lower convex hull. A segment with inclination
//! `p/q` governs the expansions `y = c x^(p/q) + ...`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::arith::upoly::{self as up, UPoly};
use crate::arith::{fmt_rat, Field, Rat, QQ};
use crate::curve::BiPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    /// Upper-left endpoint (smaller `i`, larger `j`).
    pub from: (u32, u32),
    pub to: (u32, u32),
    /// Inclination `p/q` in lowest terms.
    pub exponent: Rat,
}

impl Segment {
    pub fn p(&self) -> u32 {
        u32::try_from(self.exponent.numer()).expect("small exponent")
    }

    pub fn q(&self) -> u32 {
        u32::try_from(self.exponent.denom()).expect("small exponent")
    }

    /// Height of the segment, which is the number of expansions it governs.
    pub fn j_extent(&self) -> u32 {
        self.from.1 - self.to.1
    }

    /// Number of lattice steps between the endpoints.
    pub fn lattice_length(&self) -> u32 {
        self.j_extent() / self.q()
    }

    /// Support points lying on the segment's line, in order of decreasing `j`.
    pub fn lattice_points(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let (p, q) = (self.p(), self.q());
        (0..=self.lattice_length()).map(move |k| (self.from.0 + k * p, self.from.1 - k * q))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(u32, u32)>,
    pub segments: Vec<Segment>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentData {
    pub segment: Segment,
    /// Roots are the leading coefficients `c` of the expansions on this segment.
    pub poly: Vec<Rat>,
    pub multiple_root: bool,
}

/// Vertices of the polygon for a given support. The support must contain
/// a point with `i = 0`.
pub(crate) fn hull<I: IntoIterator<Item = (u32, u32)>>(support: I) -> Vec<(u32, u32)> {
    let pts: Vec<(u32, u32)> = support.into_iter().collect();
    let j0 = pts
        .iter()
        .filter(|p| p.0 == 0)
        .map(|p| p.1)
        .min()
        .expect("support meets the j-axis");
    let jmin = pts.iter().map(|p| p.1).min().expect("nonempty");
    let mut cur = (0, j0);
    let mut out = vec![cur];
    while cur.1 > jmin {
        let mut best: Option<((u32, u32), Rat)> = None;
        for &pt in pts.iter().filter(|p| p.1 < cur.1) {
            let slope = Rat::new(
                (i64::from(pt.0) - i64::from(cur.0)).into(),
                i64::from(cur.1 - pt.1).into(),
            );
            let better = match &best {
                None => true,
                Some((b, s)) => slope < *s || (slope == *s && pt.1 < b.1),
            };
            if better {
                best = Some((pt, slope));
            }
        }
        cur = best.expect("a lower row exists").0;
        out.push(cur);
    }
    out
}

pub(crate) fn segments_of(vertices: &[(u32, u32)]) -> Vec<Segment> {
    vertices
        .windows(2)
        .map(|w| Segment {
            from: w[0],
            to: w[1],
            exponent: Rat::new(
                i64::from(w[1].0 - w[0].0).into(),
                i64::from(w[0].1 - w[1].1).into(),
            ),
        })
        .collect()
}

/// `Σ a_{i,j} Z^(j - j_to)` over the support points on the segment.
pub(crate) fn segment_poly_generic<F: Field>(
    k: &F,
    terms: &BTreeMap<(u32, u32), F::Elem>,
    s: &Segment,
) -> UPoly<F::Elem> {
    let mut out = vec![k.zero(); s.j_extent() as usize + 1];
    for pt in s.lattice_points() {
        if let Some(c) = terms.get(&pt) {
            out[(pt.1 - s.to.1) as usize] = c.clone();
        }
    }
    up::trim(k, out)
}

fn check_input(f: &BiPoly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.coeff(0, 0).is_zero() {
        return Err(Error::OriginNotOnCurve);
    }
    if f.x_adic_order() > 0 {
        return Err(Error::VerticalTangent);
    }
    Ok(())
}

pub fn newton_polygon(f: &BiPoly) -> Result<NewtonPolygon> {
    check_input(f)?;
    let vertices = hull(f.terms().map(|(k, _)| k));
    let segments = segments_of(&vertices);
    Ok(NewtonPolygon { vertices, segments })
}

pub fn segment_data(f: &BiPoly, s: &Segment) -> Result<SegmentData> {
    let poly = newton_polygon(f)?;
    if !poly.segments.contains(s) {
        return Err(Error::NotOnPolygon);
    }
    let terms: BTreeMap<(u32, u32), Rat> = f.terms().map(|(k, c)| (k, c.clone())).collect();
    let p = segment_poly_generic(&QQ, &terms, s);
    let multiple_root = up::gcd(&QQ, &p, &up::derivative(&QQ, &p)).len() > 1;
    Ok(SegmentData { segment: s.clone(), poly: p, multiple_root })
}

/// Polygon together with the data of every segment.
pub fn analyze(f: &BiPoly) -> Result<(NewtonPolygon, Vec<SegmentData>)> {
    let poly = newton_polygon(f)?;
    let data = poly
        .segments
        .iter()
        .map(|s| segment_data(f, s))
        .collect::<Result<Vec<_>>>()?;
    Ok((poly, data))
}

pub fn fmt_zpoly(p: &[Rat]) -> String {
    let f = BiPoly::from_x_poly(p).to_string();
    f.replace('x', "Z")
}

impl NewtonPolygon {
    pub fn to_json(&self, data: &[SegmentData]) -> Value {
        json!({
            "vertices": self.vertices.iter().map(|v| json!([v.0, v.1])).collect::<Vec<_>>(),
            "segments": data.iter().map(|d| json!({
                "from": [d.segment.from.0, d.segment.from.1],
                "to": [d.segment.to.0, d.segment.to.1],
                "exponent": fmt_rat(&d.segment.exponent),
                "multiple_root": d.multiple_root,
                "segment_poly": fmt_zpoly(&d.poly),
            })).collect::<Vec<_>>(),
        })
    }
}
