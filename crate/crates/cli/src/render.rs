//! Text layouts and the structured document.

use serde::Serialize;
use serde_json::Value;

use fatforest_core::{BettiTable, FVector, HilbertNumerator, Integer, RingInvariants};

/// Betti table in the usual computer-algebra layout: a header of homological
/// degrees, a `total:` row, then one row per diagonal `j - i` with `.` for 0.
pub fn paper_table(table: &BettiTable) -> String {
    let pd = table.projective_dimension();
    let rows = table.diagonals().last().copied().unwrap_or(0);
    let mut grid: Vec<(String, Vec<String>)> = Vec::with_capacity(rows + 2);
    grid.push((String::new(), (0..=pd).map(|i| i.to_string()).collect()));
    grid.push(("total:".into(), table.totals().iter().map(Integer::to_string).collect()));
    for r in 0..=rows {
        let cells = (0..=pd)
            .map(|i| {
                let v = table.get(i, i + r);
                if v == Integer::from(0) {
                    ".".to_string()
                } else {
                    v.to_string()
                }
            })
            .collect();
        grid.push((format!("{r}:"), cells));
    }

    let label_width = grid.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..=pd).map(|c| grid.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1)).collect();
    let mut out = String::new();
    for (label, cells) in &grid {
        out.push_str(&format!("{label:>label_width$}"));
        for (cell, w) in cells.iter().zip(&widths) {
            out.push_str(&format!(" {cell:>w$}"));
        }
        out.push('\n');
    }
    out
}

/// Comma-separated strand rows: `diagonal,0,1,...,pd`, a `total` row, then
/// one row per diagonal with explicit zeros.
pub fn csv_table(table: &BettiTable) -> String {
    let pd = table.projective_dimension();
    let rows = table.diagonals().last().copied().unwrap_or(0);
    let mut out = String::from("diagonal");
    for i in 0..=pd {
        out.push_str(&format!(",{i}"));
    }
    out.push_str("\ntotal");
    for v in table.totals() {
        out.push_str(&format!(",{v}"));
    }
    out.push('\n');
    for r in 0..=rows {
        out.push_str(&r.to_string());
        for i in 0..=pd {
            out.push_str(&format!(",{}", table.get(i, i + r)));
        }
        out.push('\n');
    }
    out
}

pub fn invariants_text(inv: &RingInvariants) -> String {
    format!(
        "pd = {}\nreg = {}\ndepth = {}\nkrull_dim = {}\nis_cm = {}\n",
        inv.pd, inv.reg, inv.depth, inv.krull_dim, inv.is_cm
    )
}

pub fn invariants_inline(inv: &RingInvariants) -> String {
    format!("pd={} reg={} depth={} krull_dim={} cm={}", inv.pd, inv.reg, inv.depth, inv.krull_dim, inv.is_cm)
}

/// One JSON document per invocation. Every integer is a decimal string.
#[derive(Debug, Default, Serialize)]
pub struct Document {
    pub sizes: Option<Vec<String>>,
    pub k: Option<String>,
    #[serde(rename = "N")]
    pub n: Option<String>,
    pub method: Option<String>,
    pub field: Option<String>,
    pub betti: Option<Vec<BettiEntry>>,
    pub fvector: Option<Vec<String>>,
    pub numerator: Option<Vec<String>>,
    pub invariants: Option<InvariantsDoc>,
    pub agreement: Option<Value>,
}

#[derive(Debug, Serialize)]
pub struct BettiEntry {
    pub i: String,
    pub j: String,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct InvariantsDoc {
    pub pd: String,
    pub reg: String,
    pub depth: String,
    pub krull_dim: String,
    pub is_cm: bool,
}

impl Document {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

pub fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

pub fn betti_entries(table: &BettiTable) -> Vec<BettiEntry> {
    table
        .entries()
        .map(|((i, j), v)| BettiEntry { i: i.to_string(), j: j.to_string(), value: v.to_string() })
        .collect()
}

pub fn betti_json(table: &BettiTable) -> Value {
    serde_json::to_value(betti_entries(table)).expect("entries serialize")
}

pub fn fvector_strings(f: &FVector) -> Vec<String> {
    strings(f.entries())
}

pub fn numerator_strings(h: &HilbertNumerator) -> Vec<String> {
    strings(h.poly.coeffs())
}

pub fn invariants_doc(inv: &RingInvariants) -> InvariantsDoc {
    InvariantsDoc {
        pd: inv.pd.to_string(),
        reg: inv.reg.to_string(),
        depth: inv.depth.to_string(),
        krull_dim: inv.krull_dim.to_string(),
        is_cm: inv.is_cm,
    }
}

pub fn invariants_json(inv: &RingInvariants) -> Value {
    serde_json::to_value(invariants_doc(inv)).expect("invariants serialize")
}
