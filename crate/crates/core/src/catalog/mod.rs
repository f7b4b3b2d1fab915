//! The table of real quintic singularity types.
//!
//! Each row carries a canonical diagram code, an Arnol'd label, the
//! numbers it has in the irreducible and reducible lists (either may be
//! absent), and a representative quintic whose origin realizes the code.
//! A type that occurs for both irreducible and reducible curves is stored
//! once with both numbers set.
//!
//! The table is read from `data/catalog.json`, compiled into the crate.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::curve::{parse_poly, BiPoly};
use crate::diagram::{build_diagram, Diagram};
use crate::puiseux::{default_cap, expand_to_separation};

const CATALOG_JSON: &str = include_str!("../../data/catalog.json");

/// Highest curve degree the table covers.
pub const MAX_DEGREE: u32 = 5;

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Row {
    id: u32,
    label: String,
    irreducible_no: Option<u32>,
    reducible_no: Option<u32>,
    code: String,
    representative: String,
    note: String,
}

#[derive(Deserialize)]
struct File {
    schema_version: u32,
    classes: Vec<Row>,
}

#[derive(Clone, Debug)]
pub struct SingularityClass {
    pub id: u32,
    pub arnold_label: String,
    /// Number in the list of irreducible-curve types, if it occurs there.
    pub irreducible_no: Option<u32>,
    /// Number in the list of reducible-curve types, if it occurs there.
    pub reducible_no: Option<u32>,
    pub code: String,
    pub representative: BiPoly,
    pub representative_text: String,
    pub note: String,
}

impl SingularityClass {
    pub fn irreducible_capable(&self) -> bool {
        self.irreducible_no.is_some()
    }

    pub fn reducible_capable(&self) -> bool {
        self.reducible_no.is_some()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "label": self.arnold_label,
            "irreducible_no": self.irreducible_no,
            "reducible_no": self.reducible_no,
            "code": self.code,
            "representative": self.representative_text,
            "note": self.note,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LookupContext {
    pub curve_degree: u32,
    pub q_irreducible: bool,
}

#[derive(Clone, Debug)]
pub enum Lookup {
    Found(&'static SingularityClass),
    NotInCatalog,
}

impl Lookup {
    pub fn class(&self) -> Option<&'static SingularityClass> {
        match self {
            Lookup::Found(c) => Some(c),
            Lookup::NotInCatalog => None,
        }
    }
}

fn load() -> Vec<SingularityClass> {
    let file: File = serde_json::from_str(CATALOG_JSON).expect("catalog data is valid JSON");
    assert_eq!(file.schema_version, 1, "unsupported catalog schema");
    file.classes
        .into_iter()
        .map(|r| SingularityClass {
            id: r.id,
            representative: parse_poly(&r.representative)
                .unwrap_or_else(|e| panic!("catalog row {}: {e}", r.id)),
            arnold_label: r.label,
            irreducible_no: r.irreducible_no,
            reducible_no: r.reducible_no,
            code: r.code,
            representative_text: r.representative,
            note: r.note,
        })
        .collect()
}

/// Every stored class, in table order.
pub fn all_classes() -> &'static [SingularityClass] {
    static TABLE: OnceLock<Vec<SingularityClass>> = OnceLock::new();
    TABLE.get_or_init(load)
}

pub fn class_by_id(id: u32) -> Option<&'static SingularityClass> {
    all_classes().iter().find(|c| c.id == id)
}

/// Class with the given number in the irreducible or reducible list.
pub fn class_by_number(irreducible: bool, no: u32) -> Option<&'static SingularityClass> {
    all_classes().iter().find(|c| {
        if irreducible {
            c.irreducible_no == Some(no)
        } else {
            c.reducible_no == Some(no)
        }
    })
}

pub fn classify_code(code: &str, ctx: LookupContext) -> Lookup {
    if ctx.curve_degree > MAX_DEGREE {
        return Lookup::NotInCatalog;
    }
    all_classes()
        .iter()
        .find(|c| {
            c.code == code
                && if ctx.q_irreducible {
                    c.irreducible_capable()
                } else {
                    c.reducible_capable()
                }
        })
        .map_or(Lookup::NotInCatalog, Lookup::Found)
}

pub fn classify_diagram(d: &Diagram, ctx: LookupContext) -> Lookup {
    classify_code(&d.canonical_code(), ctx)
}

/// Diagram of the origin of `f`, computed with the default cap.
pub fn diagram_at_origin(f: &BiPoly) -> crate::Result<Diagram> {
    let branches = expand_to_separation(f, &default_cap())?;
    build_diagram(&branches)
}

#[derive(Clone, Debug, Default)]
pub struct SelfCheckReport {
    pub classes: usize,
    pub irreducible_count: usize,
    pub reducible_count: usize,
    /// Rows whose representative does not reproduce the stored code.
    pub mismatches: Vec<(u32, String)>,
    /// Groups of ids sharing a code within one list.
    pub duplicates: Vec<Vec<u32>>,
    /// Whether irreducible types 3 and 4 are distinct classes.
    pub split_3_4: bool,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.duplicates.is_empty()
            && self.irreducible_count == 42
            && self.reducible_count == 49
            && self.split_3_4
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "classes": self.classes,
            "irreducible_count": self.irreducible_count,
            "reducible_count": self.reducible_count,
            "mismatches": self.mismatches.iter()
                .map(|(id, msg)| json!({"id": id, "detail": msg}))
                .collect::<Vec<_>>(),
            "duplicates": self.duplicates,
            "split_3_4": self.split_3_4,
        })
    }
}

/// Checks a table of classes: codes reproduced, codes distinct per list,
/// list sizes, and the split of irreducible types 3 and 4.
pub fn check_classes(classes: &[SingularityClass]) -> SelfCheckReport {
    let mut report = SelfCheckReport {
        classes: classes.len(),
        irreducible_count: classes.iter().filter(|c| c.irreducible_capable()).count(),
        reducible_count: classes.iter().filter(|c| c.reducible_capable()).count(),
        ..Default::default()
    };
    for c in classes {
        match diagram_at_origin(&c.representative) {
            Ok(d) if d.canonical_code() == c.code => {}
            Ok(d) => report
                .mismatches
                .push((c.id, format!("expected {}, got {}", c.code, d.canonical_code()))),
            Err(e) => report.mismatches.push((c.id, e.to_string())),
        }
    }
    for irreducible in [true, false] {
        let mut by_code: BTreeMap<&str, Vec<u32>> = BTreeMap::new();
        for c in classes {
            let on = if irreducible { c.irreducible_capable() } else { c.reducible_capable() };
            if on {
                by_code.entry(&c.code).or_default().push(c.id);
            }
        }
        report
            .duplicates
            .extend(by_code.into_values().filter(|ids| ids.len() > 1));
    }
    let find = |no| classes.iter().find(|c| c.irreducible_no == Some(no));
    report.split_3_4 = match (find(3), find(4)) {
        (Some(a), Some(b)) => a.id != b.id && a.code != b.code,
        _ => false,
    };
    report
}

pub fn self_check() -> SelfCheckReport {
    check_classes(all_classes())
}
