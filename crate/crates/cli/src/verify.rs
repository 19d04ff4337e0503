//! Three-way comparison of the Betti routes.

use std::collections::BTreeSet;

use serde_json::{json, Map, Value};

use fatforest_core::closed::{
    betti_closed, betti_via_strand_subtraction, invariants_closed, skeleton_numerator, ClosedFormError,
    SkeletonQuery,
};
use fatforest_core::exact::numerator_from_fvector;
use fatforest_core::{invariants_from_table, BettiTable, FieldSpec, Integer, Oracle, RingInvariants};

use crate::error::CliError;
use crate::input::Subject;
use crate::render::{invariants_inline, invariants_json, paper_table};

#[derive(Clone, Debug)]
pub struct MethodTable {
    pub method: String,
    pub table: BettiTable,
}

#[derive(Clone, Debug)]
pub struct EntryAgreement {
    pub i: usize,
    pub j: usize,
    /// One value per method, in the order of [`VerificationReport::tables`].
    pub values: Vec<Integer>,
    pub agree: bool,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n_vars: usize,
    pub tables: Vec<MethodTable>,
    pub entries: Vec<EntryAgreement>,
    pub invariants: Vec<(String, RingInvariants)>,
    pub invariants_agree: bool,
    /// Reisner's criterion per field.
    pub reisner: Vec<(String, bool)>,
    pub cm_agree: bool,
    /// Closed numerator (when available) and every table's alternating sums
    /// against the numerator computed from the enumerated f-vector.
    pub hilbert_agree: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn entries_agree(&self) -> bool {
        self.entries.iter().all(|e| e.agree)
    }

    pub fn verdict(&self) -> bool {
        self.entries_agree() && self.invariants_agree && self.cm_agree && self.hilbert_agree
    }
}

pub fn verify(subject: &Subject, fields: &[FieldSpec], guard: usize) -> Result<VerificationReport, CliError> {
    let complex = subject.complex(guard)?;
    let n = complex.n_vertices();
    let mut tables = Vec::new();
    let mut invariants = Vec::new();
    let mut notes = Vec::new();
    let mut closed_numerator = None;

    match closed_routes(subject) {
        Ok(Some((formula, strands, inv, numerator))) => {
            tables.push(MethodTable { method: "formula".into(), table: formula });
            tables.push(MethodTable { method: "strands".into(), table: strands });
            invariants.push(("closed".to_string(), inv));
            closed_numerator = Some(numerator);
        }
        Ok(None) => notes.push("closed forms skipped: input is a facet list".to_string()),
        Err(e @ (ClosedFormError::ZeroSkeleton | ClosedFormError::SingleFacet)) => {
            notes.push(format!("closed forms skipped: {e}"))
        }
        Err(e) => return Err(e.into()),
    }

    let mut reisner = Vec::new();
    for &field in fields {
        let oracle = Oracle::new(field).with_guard(guard);
        let table = oracle.hochster_betti(&complex)?;
        invariants.push((format!("oracle {field}"), invariants_from_table(&table, n, complex.dimension())));
        reisner.push((format!("reisner {field}"), oracle.reisner_is_cm(&complex)?));
        tables.push(MethodTable { method: format!("hochster {field}"), table });
    }

    let keys: BTreeSet<(usize, usize)> =
        tables.iter().flat_map(|m| m.table.entries().map(|(key, _)| key).collect::<Vec<_>>()).collect();
    let entries = keys
        .into_iter()
        .map(|(i, j)| {
            let values: Vec<Integer> = tables.iter().map(|m| m.table.get(i, j)).collect();
            let agree = values.windows(2).all(|w| w[0] == w[1]);
            EntryAgreement { i, j, values, agree }
        })
        .collect();

    let invariants_agree = invariants.windows(2).all(|w| w[0].1 == w[1].1);
    let cm_agree = reisner.iter().all(|(_, cm)| invariants.iter().all(|(_, inv)| inv.is_cm == *cm));

    let enumerated =
        numerator_from_fvector(&complex.f_vector(), n).map_err(|e| CliError::Computation(e.to_string()))?;
    let degree = enumerated.poly.degree().unwrap_or(0);
    let hilbert_agree = closed_numerator.is_none_or(|c| c == enumerated.poly)
        && tables.iter().all(|m| {
            (0..=degree.max(m.table.max_degree())).all(|j| m.table.alternating_sum(j) == enumerated.coeff(j))
        });

    Ok(VerificationReport {
        n_vars: n,
        tables,
        entries,
        invariants,
        invariants_agree,
        reisner,
        cm_agree,
        hilbert_agree,
        notes,
    })
}

type ClosedRoutes = (BettiTable, BettiTable, RingInvariants, fatforest_core::IntPolynomial);

fn closed_routes(subject: &Subject) -> Result<Option<ClosedRoutes>, ClosedFormError> {
    let (Some(sizes), k) = (subject.sizes(), subject.k()) else {
        return Ok(None);
    };
    let top = sizes.iter().copied().max().unwrap_or(2) - 1;
    let q = SkeletonQuery::new(sizes.to_vec(), k.unwrap_or(top))?;
    Ok(Some((
        betti_closed(&q)?,
        betti_via_strand_subtraction(&q)?,
        invariants_closed(&q)?,
        skeleton_numerator(&q).poly,
    )))
}

/// Fields compared by `verify`: GF(2), GF(3) and the requested one.
pub fn verification_fields(requested: FieldSpec) -> Vec<FieldSpec> {
    let mut fields = vec![FieldSpec::GF2, FieldSpec::GF3];
    if !fields.contains(&requested) {
        fields.push(requested);
    }
    fields
}

pub fn report_text(subject: &Subject, report: &VerificationReport) -> String {
    let mut out = format!("verify {}, N = {}\n", subject.label(), report.n_vars);
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    for m in &report.tables {
        out.push_str(&format!("\nmethod {}:\n", m.method));
        out.push_str(&paper_table(&m.table));
    }
    out.push('\n');
    let disagreements: Vec<&EntryAgreement> = report.entries.iter().filter(|e| !e.agree).collect();
    out.push_str(&format!(
        "betti entries compared: {}, disagreements: {}\n",
        report.entries.len(),
        disagreements.len()
    ));
    for e in disagreements {
        let values: Vec<String> =
            report.tables.iter().zip(&e.values).map(|(m, v)| format!("{}={v}", m.method)).collect();
        out.push_str(&format!("  β_{{{},{}}}: {}\n", e.i, e.j, values.join(" ")));
    }
    for (name, inv) in &report.invariants {
        out.push_str(&format!("invariants {name}: {}\n", invariants_inline(inv)));
    }
    for (name, cm) in &report.reisner {
        out.push_str(&format!("{name}: cm={cm}\n"));
    }
    out.push_str(&format!("invariants agree: {}\n", yes_no(report.invariants_agree)));
    out.push_str(&format!("cohen-macaulay routes agree: {}\n", yes_no(report.cm_agree)));
    out.push_str(&format!("hilbert numerators agree: {}\n", yes_no(report.hilbert_agree)));
    out.push_str(&format!("verdict: {}\n", if report.verdict() { "PASS" } else { "FAIL" }));
    out
}

pub fn report_csv(report: &VerificationReport) -> String {
    let mut out = String::from("i,j");
    for m in &report.tables {
        out.push_str(&format!(",{}", m.method));
    }
    out.push_str(",agree\n");
    for e in &report.entries {
        out.push_str(&format!("{},{}", e.i, e.j));
        for v in &e.values {
            out.push_str(&format!(",{v}"));
        }
        out.push_str(&format!(",{}\n", e.agree));
    }
    out
}

pub fn report_json(report: &VerificationReport) -> Value {
    let tables: Map<String, Value> =
        report.tables.iter().map(|m| (m.method.clone(), crate::render::betti_json(&m.table))).collect();
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            let values: Map<String, Value> = report
                .tables
                .iter()
                .zip(&e.values)
                .map(|(m, v)| (m.method.clone(), Value::String(v.to_string())))
                .collect();
            json!({"i": e.i.to_string(), "j": e.j.to_string(), "values": values, "agree": e.agree})
        })
        .collect();
    let invariants: Map<String, Value> =
        report.invariants.iter().map(|(name, inv)| (name.clone(), invariants_json(inv))).collect();
    let reisner: Map<String, Value> =
        report.reisner.iter().map(|(name, cm)| (name.clone(), Value::Bool(*cm))).collect();
    json!({
        "verdict": report.verdict(),
        "tables": tables,
        "entries": entries,
        "entries_agree": report.entries_agree(),
        "invariants": invariants,
        "invariants_agree": report.invariants_agree,
        "reisner": reisner,
        "cm_agree": report.cm_agree,
        "hilbert_agree": report.hilbert_agree,
        "notes": report.notes,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
