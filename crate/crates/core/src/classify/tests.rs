use super::*;
use crate::curve::parse_poly;

fn pt(x: i64, y: i64) -> (Rat, Rat) {
    (rat(x), rat(y))
}

#[test]
fn singular_points_of_small_curves() {
    let sp = |s: &str| rational_singular_points(&parse_poly(s).unwrap()).points;
    assert_eq!(sp("y^2-x^3"), vec![pt(0, 0)]);
    assert!(sp("x^2+y^2-1").is_empty());
    assert_eq!(sp("(y-1)^2-(x-2)^3"), vec![pt(2, 1)]);
    assert_eq!(sp("x*y"), vec![pt(0, 0)]);
    // Two ellipses tangent to each other at (±1, 0).
    let two = sp("(x^2+y^2-1)*(x^2+4*y^2-1)");
    assert_eq!(two, vec![pt(-1, 0), pt(1, 0)]);
}

#[test]
fn cusp_report() {
    let f = parse_poly("y^2+x^3").unwrap();
    let r = classify_point(&f, &pt(0, 0)).unwrap();
    assert_eq!(r.multiplicity, 2);
    assert_eq!(r.tangent_cone.to_string(), "y^2");
    assert_eq!(r.code, "(3/2:•,•|braces:)");
    assert_eq!(r.class.unwrap().arnold_label, "A_2");
    assert!(r.q_irreducible);
    assert!(r.warnings.iter().any(|w| w == WARN_C_STATUS));
    assert_eq!(r.shear, None);
}

#[test]
fn conic_times_nodal_cubic() {
    let f = parse_poly("(y*(y-x)+x^3)*(y+x^2)").unwrap();
    let r = classify_point(&f, &pt(0, 0)).unwrap();
    assert_eq!(r.multiplicity, 3);
    assert!(!r.q_irreducible);
    let c = r.class.unwrap();
    assert_eq!(c.arnold_label, "D_6");
    assert_eq!(c.reducible_no, Some(15));
}

#[test]
fn vertical_tangent_is_sheared() {
    let f = parse_poly("x*y").unwrap();
    let r = classify_point(&f, &pt(0, 0)).unwrap();
    assert_eq!(r.shear, Some(1));
    assert_eq!(r.code, "(1:•,•|braces:)");
    assert_eq!(r.class.unwrap().arnold_label, "A_1");
    assert!(!r.q_irreducible);
    // Classifying the sheared curve directly gives the same code.
    let again = classify_point(&r.local, &pt(0, 0)).unwrap();
    assert_eq!(again.shear, None);
    assert_eq!(again.code, r.code);
}

#[test]
fn errors() {
    let f = parse_poly("y^2-x^3").unwrap();
    assert!(matches!(classify_point(&f, &pt(1, 1)), Err(Error::NotSingular { .. })));
    let g = parse_poly("(y-x^2)^2*(y+x)").unwrap();
    assert!(matches!(classify_point(&g, &pt(0, 0)), Err(Error::MultipleComponent)));
}

#[test]
fn classify_all_orders_points() {
    let f = parse_poly("(x^2+y^2-1)*(x^2+4*y^2-1)").unwrap();
    let all = classify_all(&f, &Options::default()).unwrap();
    assert_eq!(all.results.len(), 2);
    assert_eq!(all.results[0].point, pt(-1, 0));
    for r in &all.results {
        let rep = r.report.as_ref().unwrap();
        assert_eq!(rep.multiplicity, 2);
        assert_eq!(rep.shear, Some(1));
        assert_eq!(rep.class.unwrap().arnold_label, "A_3");
    }
    assert!(classify_all(&parse_poly("x+y").unwrap(), &Options::default())
        .unwrap()
        .results
        .is_empty());
}

#[test]
fn report_is_deterministic() {
    let f = parse_poly("(x^2+y^2)^2+x^5").unwrap();
    let a = classify_point(&f, &pt(0, 0)).unwrap().to_json();
    let b = classify_point(&f, &pt(0, 0)).unwrap().to_json();
    assert_eq!(a, b);
    assert_eq!(a["schema_version"], 1);
}
