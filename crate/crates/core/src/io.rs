//! JSON formats for instances, families, certificates and reports.
//!
//! Subsets are written as comma-joined labels in ground-set order, with the
//! empty string for ∅. Family input also accepts each set as a label array.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::audit::AuditReport;
use crate::connectivity::{build_system, ConnectivityFunctionSpec, ConnectivitySystem, EfficiencyBound, Graph};
use crate::decomposition::{BranchDecomposition, Certificate, LinearOrdering, WidthResult};
use crate::error::{Error, Result};
use crate::families::{FamilyFlags, SetFamily, Verdict};
use crate::subset::{GroundSet, Subset};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceJson {
    #[serde(default)]
    ground_set: Option<Vec<String>>,
    function: FunctionJson,
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum FunctionJson {
    Table { values: BTreeMap<String, u32> },
    GraphEdgeCut { vertices: usize, edges: Vec<(usize, usize)> },
    GraphVertexCut { vertices: usize, edges: Vec<(usize, usize)> },
}

fn malformed(e: serde_json::Error) -> Error {
    Error::InvalidInput(format!("malformed JSON: {e}"))
}

pub fn parse_instance(text: &str) -> Result<ConnectivitySystem> {
    let inst: InstanceJson = serde_json::from_str(text).map_err(malformed)?;
    let labels = inst.ground_set.map(GroundSet::new).transpose()?;
    let spec = match inst.function {
        FunctionJson::Table { values } => {
            let ground = labels.ok_or_else(|| Error::InvalidInput("a table instance needs \"ground_set\"".into()))?;
            let values = values.into_iter().map(|(key, v)| Ok((ground.decode(&key)?, v))).collect::<Result<_>>()?;
            ConnectivityFunctionSpec::Table { ground, values }
        }
        FunctionJson::GraphEdgeCut { vertices, edges } => {
            ConnectivityFunctionSpec::GraphEdgeCut { graph: Graph::new(vertices, edges)?, labels }
        }
        FunctionJson::GraphVertexCut { vertices, edges } => {
            ConnectivityFunctionSpec::GraphVertexCut { graph: Graph::new(vertices, edges)?, labels }
        }
    };
    build_system(spec)
}

/// The instance in its input form. Table instances list every subset.
pub fn instance_to_json(sys: &ConnectivitySystem) -> Value {
    let ground = sys.ground().labels();
    let function = match sys.spec() {
        ConnectivityFunctionSpec::Table { .. } => {
            let mut values = serde_json::Map::new();
            for (i, &v) in sys.values().iter().enumerate() {
                values.insert(sys.ground().encode(Subset::from_bits(i as u32)), json!(v));
            }
            json!({"type": "table", "values": values})
        }
        ConnectivityFunctionSpec::GraphEdgeCut { graph, .. } => {
            json!({"type": "graph_edge_cut", "vertices": graph.vertices, "edges": graph.edges})
        }
        ConnectivityFunctionSpec::GraphVertexCut { graph, .. } => {
            json!({"type": "graph_vertex_cut", "vertices": graph.vertices, "edges": graph.edges})
        }
    };
    json!({"ground_set": ground, "function": function})
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SetJson {
    Labels(Vec<String>),
    Joined(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyJson {
    k: u32,
    sets: Vec<SetJson>,
}

pub fn parse_family(sys: &ConnectivitySystem, text: &str) -> Result<SetFamily> {
    let fam: FamilyJson = serde_json::from_str(text).map_err(malformed)?;
    let ground = sys.ground();
    let sets = fam
        .sets
        .iter()
        .map(|s| match s {
            SetJson::Labels(l) => ground.subset_from_labels(l),
            SetJson::Joined(j) => ground.decode(j),
        })
        .collect::<Result<Vec<_>>>()?;
    SetFamily::new(sys.n(), EfficiencyBound(fam.k), sets)
}

pub fn subset_json(sys: &ConnectivitySystem, s: Subset) -> Value {
    Value::String(sys.ground().encode(s))
}

pub fn subsets_json(sys: &ConnectivitySystem, sets: &[Subset]) -> Value {
    Value::Array(sets.iter().map(|&s| subset_json(sys, s)).collect())
}

pub fn family_to_json(sys: &ConnectivitySystem, fam: &SetFamily) -> Value {
    json!({"k": fam.bound().0, "sets": subsets_json(sys, fam.members())})
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BranchJson {
    parent: Vec<Option<usize>>,
    labels: Vec<Option<String>>,
}

pub fn certificate_to_json(sys: &ConnectivitySystem, cert: &Certificate) -> Value {
    let ground = sys.ground();
    match cert {
        Certificate::Branch(d) => {
            let labels = d.leaf_labels().iter().map(|l| l.map(|e| ground.label(e).to_string())).collect();
            serde_json::to_value(BranchJson { parent: d.parent().to_vec(), labels }).expect("plain data")
        }
        Certificate::Linear(o) => json!(o.order().iter().map(|&e| ground.label(e)).collect::<Vec<_>>()),
    }
}

/// A branch decomposition object `{"parent": [...], "labels": [...]}` or a
/// linear ordering given as a label array.
pub fn parse_certificate(sys: &ConnectivitySystem, text: &str) -> Result<Certificate> {
    let value: Value = serde_json::from_str(text).map_err(malformed)?;
    let index = |label: &str| sys.ground().index_of(label).ok_or_else(|| Error::UnknownLabel(label.into()));
    if value.is_array() {
        let labels: Vec<String> = serde_json::from_value(value).map_err(malformed)?;
        let order = labels.iter().map(|l| index(l)).collect::<Result<_>>()?;
        return Ok(Certificate::Linear(LinearOrdering::new(sys.n(), order)?));
    }
    let b: BranchJson = serde_json::from_value(value).map_err(malformed)?;
    let leaf = b.labels.iter().map(|l| l.as_deref().map(index).transpose()).collect::<Result<_>>()?;
    Ok(Certificate::Branch(BranchDecomposition::new(sys.n(), b.parent, leaf)?))
}

pub fn width_to_json(sys: &ConnectivitySystem, w: &WidthResult, with_certificate: bool) -> Value {
    let mut out = json!({"width": w.width});
    if with_certificate {
        out["certificate"] = certificate_to_json(sys, &w.certificate);
    }
    out
}

pub fn verdict_to_json(sys: &ConnectivitySystem, v: &Verdict, flags: Option<&FamilyFlags>) -> Value {
    let mut out = json!({
        "holds": v.holds,
        "violated_axiom": v.violated_axiom.map(|a| a.label()),
        "witnesses": subsets_json(sys, &v.witnesses),
        "derived": v.derived,
    });
    if let Some(f) = flags {
        out["principal"] = json!(f.principal);
        out["non_principal"] = json!(f.non_principal);
        out["uniform"] = json!(f.uniform);
    }
    out
}

#[derive(Serialize)]
struct AuditReportJson<'a> {
    theorem: &'a str,
    status: &'a str,
    witness: Vec<Vec<String>>,
    instance: &'a str,
    k: u32,
    notes: &'a [String],
}

pub fn audit_report_to_json(sys: &ConnectivitySystem, r: &AuditReport) -> Value {
    let ground = sys.ground();
    let report = AuditReportJson {
        theorem: r.theorem.id(),
        status: r.status.name(),
        witness: r.witness.iter().map(|g| g.iter().map(|&s| ground.encode(s)).collect()).collect(),
        instance: &r.instance,
        k: r.k.0,
        notes: &r.notes,
    };
    serde_json::to_value(report).expect("plain data")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{branch_width, decomposition_width, linear_width, ordering_width};
    use crate::testkit::{c4, k4};

    const C4: &str = r#"{"ground_set": ["e1","e2","e3","e4"],
        "function": {"type": "graph_edge_cut", "vertices": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]}}"#;

    #[test]
    fn graph_instance_matches_the_builder() {
        let sys = parse_instance(C4).unwrap();
        assert_eq!(sys.values(), c4().values());
        let again = parse_instance(&instance_to_json(&sys).to_string()).unwrap();
        assert_eq!(again.values(), sys.values());
    }

    #[test]
    fn table_instance_is_symmetry_completed() {
        let text = r#"{"ground_set": ["a","b"], "function": {"type": "table", "values": {"": 0, "a": 1}}}"#;
        let sys = parse_instance(text).unwrap();
        assert_eq!(sys.values(), &[0, 1, 1, 0]);
        let round = parse_instance(&instance_to_json(&sys).to_string()).unwrap();
        assert_eq!(round.values(), sys.values());
    }

    #[test]
    fn input_errors() {
        assert!(matches!(parse_instance("{"), Err(Error::InvalidInput(_))));
        let bad = r#"{"ground_set": ["a","b"], "function": {"type": "table", "values": {"": 0, "a": 1, "b": 2}}}"#;
        assert!(matches!(parse_instance(bad), Err(Error::SymmetryViolation(_))));
        let unknown = r#"{"ground_set": ["a"], "function": {"type": "table", "values": {"z": 0}}}"#;
        assert_eq!(parse_instance(unknown).unwrap_err(), Error::UnknownLabel("z".into()));
        let sys = c4();
        assert_eq!(parse_family(&sys, r#"{"k": 1, "sets": [["e9"]]}"#).unwrap_err(), Error::UnknownLabel("e9".into()));
    }

    #[test]
    fn family_round_trip_accepts_both_set_forms() {
        let sys = c4();
        let f = parse_family(&sys, r#"{"k": 2, "sets": [["e1"], "e1,e2", ""]}"#).unwrap();
        assert_eq!(f.len(), 3);
        let text = family_to_json(&sys, &f).to_string();
        assert_eq!(text, r#"{"k":2,"sets":["","e1","e1,e2"]}"#);
        assert_eq!(parse_family(&sys, &text).unwrap(), f);
    }

    #[test]
    fn certificates_round_trip() {
        let sys = k4();
        let bw = branch_width(&sys).unwrap();
        let back = parse_certificate(&sys, &certificate_to_json(&sys, &bw.certificate).to_string()).unwrap();
        let Certificate::Branch(d) = back else { panic!("expected a branch decomposition") };
        assert_eq!(decomposition_width(&sys, &d).unwrap(), bw.width);

        let lw = linear_width(&sys).unwrap();
        let back = parse_certificate(&sys, &certificate_to_json(&sys, &lw.certificate).to_string()).unwrap();
        let Certificate::Linear(o) = back else { panic!("expected an ordering") };
        assert_eq!(ordering_width(&sys, &o).unwrap(), lw.width);
    }
}
