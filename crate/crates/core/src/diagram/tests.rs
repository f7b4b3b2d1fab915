use super::*;
use crate::arith::{rat, ratio};
use crate::curve::parse_poly;
use crate::puiseux::{default_cap, expand_to_separation};

fn diagram(s: &str) -> Diagram {
    let b = expand_to_separation(&parse_poly(s).unwrap(), &default_cap()).unwrap();
    build_diagram(&b).unwrap()
}

#[test]
fn cusp_has_no_braces() {
    let d = diagram("y^2 + x^3");
    assert_eq!(d.canonical_code(), "(3/2:•,•|braces:)");
    assert_eq!(d.exponents(), vec![ratio(3, 2)]);
    assert_eq!(d.braced_leaf_count(), 0);
}

#[test]
fn worked_example_columns() {
    let d = diagram("x^2*y + x^4 + 2*x*y^2 + y^3");
    assert_eq!(d.exponents(), vec![rat(1), ratio(3, 2)]);
    assert_eq!(d.canonical_code(), "(1:(3/2:•,•|braces:),•|braces:)");
    let art = d.render_ascii();
    assert!(art.lines().next().unwrap().contains("3/2"), "{art}");
    assert_eq!(art.lines().filter(|l| l.contains('#')).count(), 3, "{art}");
}

#[test]
fn braced_pair_at_two() {
    let d = diagram("y^2 + x^4 + x^5");
    assert_eq!(d.canonical_code(), "(2:•,•|braces:•)");
    assert_eq!(d.braced_leaf_count(), 2);
    let unbraced = diagram("y^2 - x^4 + x^5");
    assert!(!d.equals(&unbraced));
    assert!(d.render_ascii().contains("brace at 2"));
}

#[test]
fn sibling_order_does_not_matter() {
    let b = expand_to_separation(&parse_poly("x^2*y + x^4 + 2*x*y^2 + y^3").unwrap(), &default_cap()).unwrap();
    let mut r = b.clone();
    r.reverse();
    assert!(build_diagram(&b).unwrap().equals(&build_diagram(&r).unwrap()));
}

#[test]
fn quartic_cone_types_split() {
    let a = diagram("y^2*(y-x)^2 + x^5");
    let b = diagram("(x^2+y^2)^2 + x^5");
    assert_ne!(a.canonical_code(), b.canonical_code());
    assert!(b.canonical_code().ends_with("|braces:(3/2:•,•|braces:))"), "{}", b.canonical_code());
}

#[test]
fn single_branch() {
    let d = diagram("y - x^2");
    assert_eq!(d.canonical_code(), "•");
    assert_eq!(d.render_ascii(), "•\n");
}

#[test]
fn json_round_trip() {
    let d = diagram("(x^2+y^2)^2 + x^5");
    let v = d.to_json();
    let back = Diagram::from_json(&v).unwrap();
    assert_eq!(back.canonical_code(), d.canonical_code());
    assert_eq!(v["code"], d.canonical_code());
    let text = serde_json::to_string(&v).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(Diagram::from_json(&parsed).unwrap(), back);
}
