use serde_json::{json, Value as Json};

use crate::derived::{DerivedObject, ExtResult, Indecomposable};
use crate::group::FlcaGroup;
use crate::k0::K0Class;
use crate::structure::{Filtration, RankProfile, Resolution};

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Group(FlcaGroup),
    Derived(DerivedObject),
    K0(K0Class),
    Profile(RankProfile),
    Filt(Filtration),
    ExtR(ExtResult),
    Res(Resolution),
    Bool(bool),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Group(_) => "group",
            Value::Derived(_) => "derived",
            Value::K0(_) => "k0",
            Value::Profile(_) => "ranks",
            Value::Filt(_) => "filtration",
            Value::ExtR(_) => "ext",
            Value::Res(_) => "resolution",
            Value::Bool(_) => "bool",
        }
    }

    /// The canonical serialization, shared by text and JSON output.
    pub fn canonical(&self) -> String {
        match self {
            Value::Group(g) => g.to_string(),
            Value::Derived(d) => d.to_string(),
            Value::K0(k) => k.to_string(),
            Value::Profile(r) => r.to_string(),
            Value::Filt(f) => f.to_string(),
            Value::ExtR(e) => e.to_string(),
            Value::Res(r) => r.to_string(),
            Value::Bool(b) => b.to_string(),
        }
    }

    /// Canonical form, followed for derived objects by an explanation of
    /// any E-type summands.
    pub fn render_text(&self) -> String {
        let canonical = self.canonical();
        let Value::Derived(d) = self else { return canonical };
        let glosses: Vec<(String, String)> = d
            .terms()
            .filter_map(|((ind, shift), _)| {
                let (complex, lo) = match ind {
                    Indecomposable::E => ("[Q > Afin]", -shift),
                    Indecomposable::EDual => ("[Afin > Sol]", -1 - shift),
                    Indecomposable::Atom(_) => return None,
                };
                let name = DerivedObject::from_terms([((ind, shift), 1)]).to_string();
                Some((name, format!("{complex} in degrees {},{}", lo, lo + 1)))
            })
            .collect();
        match glosses.as_slice() {
            [] => canonical,
            [(name, gloss)] if *name == canonical => format!("{canonical}  (= {gloss})"),
            _ => {
                let parts: Vec<String> = glosses.iter().map(|(n, g)| format!("{n} = {g}")).collect();
                format!("{canonical}  ({})", parts.join("; "))
            }
        }
    }

    pub fn to_json(&self) -> Json {
        let mut out = json!({ "kind": self.kind(), "value": self.canonical() });
        if let Value::K0(k) = self {
            out["coords"] = k0_json(k);
        }
        if let Value::Bool(b) = self {
            out["value"] = json!(b);
        }
        out
    }
}

/// JSON mirror of a K₀ class.
pub fn k0_json(k: &K0Class) -> Json {
    let c = k.coords();
    let exceptions: serde_json::Map<String, Json> = c
        .exceptions()
        .map(|(p, (r, s))| (p.to_string(), json!([r, s])))
        .collect();
    json!({
        "at_infinity": [c.at_infinity.0, c.at_infinity.1],
        "default": [c.default.0, c.default.1],
        "exceptions": exceptions,
    })
}
