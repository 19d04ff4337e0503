use serde_json::{json, Value};

use fatforest_core::closed::{
    betti_closed, betti_via_strand_subtraction, invariants_closed, skeleton_f_vector, skeleton_numerator,
    ClosedFormError, SkeletonQuery,
};
use fatforest_core::exact::numerator_from_fvector;
use fatforest_core::identities::{identity_report, render_identity};
use fatforest_core::{invariants_from_table, BettiTable, FieldSpec, HilbertNumerator, Integer, Oracle};

use crate::args::{BettiMethod, ComplexMethod, Format, InvariantsMethod, OracleArgs, OutputArgs};
use crate::error::CliError;
use crate::input::{join, oracle_from_args, Subject};
use crate::render::{self, paper_table, Document};
use crate::verify::{report_csv, report_json, report_text, verification_fields, verify};

/// What a command produced: the rendered document and whether every
/// agreement flag it emitted was true.
pub struct Emission {
    pub text: String,
    pub agreed: bool,
    /// Informational lines for standard error.
    pub notes: Vec<String>,
}

impl Emission {
    fn ok(text: String) -> Self {
        Self { text, agreed: true, notes: Vec::new() }
    }
}

fn base_document(subject: &Subject, method: &str) -> Document {
    Document {
        sizes: subject.sizes().map(render::strings),
        k: subject.k().map(|k| k.to_string()),
        n: Some(subject.n_vertices().to_string()),
        method: Some(method.to_string()),
        ..Document::default()
    }
}

fn fallback_reason(e: &ClosedFormError) -> Option<String> {
    match e {
        ClosedFormError::ZeroSkeleton | ClosedFormError::SingleFacet => Some(e.to_string()),
        _ => None,
    }
}

fn complex_method(subject: &Subject, method: Option<ComplexMethod>) -> ComplexMethod {
    method.unwrap_or(match subject {
        Subject::Forest { .. } => ComplexMethod::Closed,
        Subject::Facets { .. } => ComplexMethod::FromComplex,
    })
}

fn method_name(m: ComplexMethod) -> &'static str {
    match m {
        ComplexMethod::Closed => "closed",
        ComplexMethod::FromComplex => "from-complex",
    }
}

pub fn fvector(
    subject: &Subject,
    method: Option<ComplexMethod>,
    oracle: &OracleArgs,
    output: &OutputArgs,
) -> Result<Emission, CliError> {
    let method = complex_method(subject, method);
    let f = match method {
        ComplexMethod::Closed => skeleton_f_vector(&subject.query()?),
        ComplexMethod::FromComplex => subject.complex(oracle.guard)?.f_vector(),
    };
    let text = match output.format {
        Format::PaperTable => format!("{f}\n"),
        Format::Csv => {
            let mut s = String::from("dimension,faces\n");
            for (d, v) in f.entries().iter().enumerate() {
                s.push_str(&format!("{},{v}\n", d as i64 - 1));
            }
            s
        }
        Format::Json => Document {
            fvector: Some(render::fvector_strings(&f)),
            ..base_document(subject, method_name(method))
        }
        .to_json(),
    };
    Ok(Emission::ok(text))
}

pub fn hilbert(
    subject: &Subject,
    method: Option<ComplexMethod>,
    oracle: &OracleArgs,
    output: &OutputArgs,
) -> Result<Emission, CliError> {
    let method = complex_method(subject, method);
    let h: HilbertNumerator = match method {
        ComplexMethod::Closed => skeleton_numerator(&subject.query()?),
        ComplexMethod::FromComplex => {
            let c = subject.complex(oracle.guard)?;
            numerator_from_fvector(&c.f_vector(), c.n_vertices())
                .map_err(|e| CliError::Computation(e.to_string()))?
        }
    };
    let text = match output.format {
        Format::PaperTable => {
            format!("N = {}\nnumerator: {}\ncoefficients: {}\n", h.n_vars, h.poly, join(h.poly.coeffs(), ","))
        }
        Format::Csv => {
            let mut s = String::from("degree,coefficient\n");
            for (d, c) in h.poly.coeffs().iter().enumerate() {
                s.push_str(&format!("{d},{c}\n"));
            }
            s
        }
        Format::Json => Document {
            numerator: Some(render::numerator_strings(&h)),
            ..base_document(subject, method_name(method))
        }
        .to_json(),
    };
    Ok(Emission::ok(text))
}

/// Closed-form route with the oracle as fallback when the formulas do not
/// apply (`k = 0` or a single facet).
fn closed_or_oracle<T>(
    subject: &Subject,
    closed: impl FnOnce(&SkeletonQuery) -> Result<T, ClosedFormError>,
    notes: &mut Vec<String>,
) -> Result<Option<T>, CliError> {
    match closed(&subject.query()?) {
        Ok(v) => Ok(Some(v)),
        Err(e) => match fallback_reason(&e) {
            Some(reason) => {
                notes.push(format!("note: {reason}; using the Hochster oracle instead"));
                Ok(None)
            }
            None => Err(e.into()),
        },
    }
}

pub fn betti(
    subject: &Subject,
    method: Option<BettiMethod>,
    oracle_args: &OracleArgs,
    output: &OutputArgs,
) -> Result<Emission, CliError> {
    let oracle = oracle_from_args(oracle_args)?;
    let method = method.unwrap_or(match subject {
        Subject::Forest { .. } => BettiMethod::Formula,
        Subject::Facets { .. } => BettiMethod::Hochster,
    });
    let mut notes = Vec::new();
    let closed = match method {
        BettiMethod::Formula => closed_or_oracle(subject, betti_closed, &mut notes)?,
        BettiMethod::Strands => closed_or_oracle(subject, betti_via_strand_subtraction, &mut notes)?,
        BettiMethod::Hochster => None,
    };
    let (table, name, field) = match (closed, method) {
        (Some(t), BettiMethod::Formula) => (t, "formula", None),
        (Some(t), _) => (t, "strands", None),
        (None, _) => {
            (oracle.hochster_betti(&subject.complex(oracle.max_vertices)?)?, "hochster", Some(oracle.field))
        }
    };
    let text = match output.format {
        Format::PaperTable => paper_table(&table),
        Format::Csv => render::csv_table(&table),
        Format::Json => Document {
            field: field.map(FieldSpec::name),
            betti: Some(render::betti_entries(&table)),
            ..base_document(subject, name)
        }
        .to_json(),
    };
    Ok(Emission { text, agreed: true, notes })
}

pub fn invariants(
    subject: &Subject,
    method: Option<InvariantsMethod>,
    oracle_args: &OracleArgs,
    output: &OutputArgs,
) -> Result<Emission, CliError> {
    let oracle = oracle_from_args(oracle_args)?;
    let method = method.unwrap_or(match subject {
        Subject::Forest { .. } => InvariantsMethod::Closed,
        Subject::Facets { .. } => InvariantsMethod::Oracle,
    });
    let mut notes = Vec::new();
    let closed = match method {
        InvariantsMethod::Closed => closed_or_oracle(subject, invariants_closed, &mut notes)?,
        InvariantsMethod::Oracle => None,
    };
    let (inv, name, field) = match closed {
        Some(inv) => (inv, "closed", None),
        None => {
            let c = subject.complex(oracle.max_vertices)?;
            let table = oracle.hochster_betti(&c)?;
            (invariants_from_table(&table, c.n_vertices(), c.dimension()), "oracle", Some(oracle.field))
        }
    };
    let text = match output.format {
        Format::PaperTable => render::invariants_text(&inv),
        Format::Csv => format!(
            "pd,reg,depth,krull_dim,is_cm\n{},{},{},{},{}\n",
            inv.pd, inv.reg, inv.depth, inv.krull_dim, inv.is_cm
        ),
        Format::Json => Document {
            field: field.map(FieldSpec::name),
            invariants: Some(render::invariants_doc(&inv)),
            ..base_document(subject, name)
        }
        .to_json(),
    };
    Ok(Emission { text, agreed: true, notes })
}

pub fn verify_command(
    subject: &Subject,
    oracle_args: &OracleArgs,
    output: &OutputArgs,
) -> Result<Emission, CliError> {
    let requested: FieldSpec = oracle_args.field.parse()?;
    let fields = verification_fields(requested);
    let report = verify(subject, &fields, oracle_args.guard)?;
    let text = match output.format {
        Format::PaperTable => report_text(subject, &report),
        Format::Csv => report_csv(&report),
        Format::Json => {
            let primary = &report.tables[0];
            let closed_inv = report.invariants.first().map(|(_, inv)| render::invariants_doc(inv));
            Document {
                field: Some(fields.iter().map(|f| f.name()).collect::<Vec<_>>().join(",")),
                betti: Some(render::betti_entries(&primary.table)),
                invariants: closed_inv,
                agreement: Some(report_json(&report)),
                ..base_document(subject, "verify")
            }
            .to_json()
        }
    };
    Ok(Emission { text, agreed: report.verdict(), notes: Vec::new() })
}

pub fn identities(sizes: &[usize], output: &OutputArgs) -> Result<Emission, CliError> {
    let report = identity_report(sizes)?;
    let rendered: Vec<String> =
        (0..report.records.len()).map(|d| render_identity(&report, d)).collect::<Result<_, _>>()?;
    let text = match output.format {
        Format::PaperTable => {
            let mut s = format!("identities for Δ({}), N = {}\n", join(sizes, ","), report.n_vars);
            for (rec, line) in report.records.iter().zip(&rendered) {
                let flag = if rec.equal { "ok" } else { "FAIL" };
                s.push_str(&format!("t^{}: {line}  [{flag}]\n", rec.degree));
            }
            for p in &report.printed_forms {
                s.push_str(&format!(
                    "reference form ({}), degree {}: {} vs {} ({})\n",
                    p.family,
                    p.degree,
                    p.lhs,
                    p.rhs,
                    if p.holds { "holds" } else { "does not hold" }
                ));
            }
            let failed = report.failed_degrees();
            if failed.is_empty() {
                s.push_str(&format!("all {} degrees equal\n", report.records.len()));
            } else {
                s.push_str(&format!("failed degrees: {}\n", join(&failed, ",")));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("degree,lhs,rhs,equal\n");
            for rec in &report.records {
                s.push_str(&format!("{},{},{},{}\n", rec.degree, rec.lhs_value, rec.rhs_value, rec.equal));
            }
            s
        }
        Format::Json => {
            let records: Vec<Value> = report
                .records
                .iter()
                .zip(&rendered)
                .map(|(rec, line)| {
                    json!({
                        "degree": rec.degree.to_string(),
                        "lhs": rec.lhs_value.to_string(),
                        "rhs": rec.rhs_value.to_string(),
                        "equal": rec.equal,
                        "equation": line,
                    })
                })
                .collect();
            let reference: Vec<Value> = report
                .printed_forms
                .iter()
                .map(|p| {
                    json!({
                        "family": p.family,
                        "degree": p.degree.to_string(),
                        "lhs": p.lhs.to_string(),
                        "rhs": p.rhs.to_string(),
                        "holds": p.holds,
                    })
                })
                .collect();
            let numerator: Vec<String> = report.records.iter().map(|r| r.lhs_value.to_string()).collect();
            Document {
                sizes: Some(render::strings(sizes)),
                n: Some(report.n_vars.to_string()),
                method: Some("identities".into()),
                numerator: Some(numerator),
                agreement: Some(json!({
                    "all_equal": report.all_equal(),
                    "records": records,
                    "reference_forms": reference,
                })),
                ..Document::default()
            }
            .to_json()
        }
    };
    Ok(Emission { text, agreed: report.all_equal(), notes: Vec::new() })
}

/// Diagonal-2 row of the widely reproduced table for `Δ(3,4,5)_(1)`.
pub const PUBLISHED_K1_ROW2: [u64; 8] = [14, 92, 259, 405, 380, 214, 67, 9];

pub struct ExampleTable {
    pub k: usize,
    pub table: BettiTable,
    pub agree: bool,
}

/// Δ(3,4,5) for k = 1, 2, 3 by formula, strand subtraction and the oracle.
pub fn example_tables(oracle: &Oracle) -> Result<Vec<ExampleTable>, CliError> {
    let spec = fatforest_core::FatForestSpec::chain(&[3, 4, 5]);
    let full = fatforest_core::build_fat_forest(&spec)?;
    (1..=3)
        .map(|k| {
            let q = SkeletonQuery::new(vec![3, 4, 5], k)?;
            let formula = betti_closed(&q)?;
            let strands = betti_via_strand_subtraction(&q)?;
            let hochster = oracle.hochster_betti(&full.skeleton(k))?;
            let agree = formula == strands && strands == hochster;
            Ok(ExampleTable { k, table: formula, agree })
        })
        .collect()
}

/// Whether replacing diagonal 2 of `table` by `row` keeps every alternating
/// sum equal to the Hilbert numerator coefficient.
fn row_consistent(table: &BettiTable, row: &[Integer], numerator: &HilbertNumerator) -> bool {
    let mut patched = BettiTable::new(table.n_vars());
    for ((i, j), v) in table.entries() {
        if i > 0 && j - i != 2 {
            patched.add(i, j, v.clone());
        }
    }
    for (idx, v) in row.iter().enumerate() {
        patched.add(idx + 1, idx + 3, v.clone());
    }
    (0..=numerator.n_vars).all(|j| patched.alternating_sum(j) == numerator.coeff(j))
}

pub fn discrepancy_note(k1: &BettiTable) -> Vec<String> {
    let computed = k1.strand(2);
    let numerator = skeleton_numerator(&SkeletonQuery::new(vec![3, 4, 5], 1).expect("valid sizes"));
    let published: Vec<Integer> = PUBLISHED_K1_ROW2.iter().map(|&v| Integer::from(v)).collect();
    let verdict = |row: &[Integer]| {
        if row_consistent(k1, row, &numerator) {
            "passes"
        } else {
            "fails"
        }
    };
    vec![
        format!("note: for k = 1 all three methods give row 2: {}", join(&computed, " ")),
        format!(
            "note: the widely reproduced k = 1 table lists row 2: {}",
            join(&PUBLISHED_K1_ROW2, " ")
        ),
        format!(
            "note: that row {} the alternating-sum check against the Hilbert numerator; the computed row {} it",
            verdict(&published),
            verdict(&computed)
        ),
    ]
}

pub fn paper_examples(oracle_args: &OracleArgs, output: &OutputArgs) -> Result<Emission, CliError> {
    let oracle = oracle_from_args(oracle_args)?;
    let tables = example_tables(&oracle)?;
    let note = discrepancy_note(&tables[0].table);
    let agreed = tables.iter().all(|t| t.agree);
    let methods = format!("formula = strands = hochster {}", oracle.field);
    let text = match output.format {
        Format::PaperTable => {
            let mut s = String::new();
            for t in &tables {
                s.push_str(&format!("Δ(3,4,5)_({}), N = 10\n", t.k));
                s.push_str(&paper_table(&t.table));
                s.push_str(&format!("{methods}: {}\n\n", if t.agree { "yes" } else { "no" }));
            }
            for line in &note {
                s.push_str(line);
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::new();
            for t in &tables {
                for line in render::csv_table(&t.table).lines() {
                    let prefix = if line.starts_with("diagonal") { "k".to_string() } else { t.k.to_string() };
                    s.push_str(&format!("{prefix},{line}\n"));
                }
            }
            s
        }
        Format::Json => {
            let examples: Vec<Value> = tables
                .iter()
                .map(|t| json!({"k": t.k.to_string(), "betti": render::betti_json(&t.table), "agree": t.agree}))
                .collect();
            Document {
                sizes: Some(render::strings(&[3, 4, 5])),
                n: Some("10".into()),
                method: Some("formula,strands,hochster".into()),
                field: Some(oracle.field.name()),
                agreement: Some(json!({"all_agree": agreed, "examples": examples, "notes": note})),
                ..Document::default()
            }
            .to_json()
        }
    };
    Ok(Emission { text, agreed, notes: Vec::new() })
}
