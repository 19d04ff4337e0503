use std::fs;

use fatforest_core::closed::SkeletonQuery;
use fatforest_core::complex::{glued_facets, parse_facet_list, FatForestSpec, Gluing, SimplicialComplex};
use fatforest_core::{FieldSpec, Oracle};

use crate::args::{InputArgs, OracleArgs};
use crate::error::CliError;

/// The complex a command works on.
#[derive(Clone, Debug)]
pub enum Subject {
    Forest { spec: FatForestSpec, k: Option<usize> },
    Facets { complex: SimplicialComplex, k: Option<usize> },
}

impl Subject {
    pub fn from_args(args: &InputArgs) -> Result<Self, CliError> {
        if let Some(path) = &args.facets {
            let text = fs::read_to_string(path)
                .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            let complex = parse_facet_list(&text, args.vertices)?;
            return Ok(Subject::Facets { complex, k: args.k });
        }
        let sizes = args
            .sizes
            .clone()
            .ok_or_else(|| CliError::Usage("either --sizes or --facets is required".into()))?;
        let spec = FatForestSpec::new(sizes, parse_gluing(&args.gluing)?);
        glued_facets(&spec)?;
        Ok(Subject::Forest { spec, k: args.k })
    }

    pub fn sizes(&self) -> Option<&[usize]> {
        match self {
            Subject::Forest { spec, .. } => Some(&spec.sizes),
            Subject::Facets { .. } => None,
        }
    }

    pub fn k(&self) -> Option<usize> {
        match self {
            Subject::Forest { k, .. } | Subject::Facets { k, .. } => *k,
        }
    }

    pub fn n_vertices(&self) -> usize {
        match self {
            Subject::Forest { spec, .. } => spec.n_vertices(),
            Subject::Facets { complex, .. } => complex.n_vertices(),
        }
    }

    /// Closed-form query; an absent `k` means the whole complex.
    pub fn query(&self) -> Result<SkeletonQuery, CliError> {
        match self {
            Subject::Forest { spec, k } => {
                let top = spec.sizes.iter().copied().max().unwrap_or(2) - 1;
                Ok(SkeletonQuery::new(spec.sizes.clone(), k.unwrap_or(top))?)
            }
            Subject::Facets { .. } => Err(CliError::Usage(
                "closed-form methods need --sizes; use a brute-force method for --facets".into(),
            )),
        }
    }

    /// Builds the complex after checking the vertex guard.
    pub fn complex(&self, guard: usize) -> Result<SimplicialComplex, CliError> {
        let n = self.n_vertices();
        if n > guard {
            return Err(CliError::Guard(format!(
                "complex has {n} vertices, above the oracle guard of {guard}"
            )));
        }
        let (full, k) = match self {
            Subject::Forest { spec, k } => (fatforest_core::build_fat_forest(spec)?, *k),
            Subject::Facets { complex, k } => (complex.clone(), *k),
        };
        Ok(match k {
            Some(k) => full.skeleton(k),
            None => full,
        })
    }

    /// `Δ(3,4,5)_(2)` style label.
    pub fn label(&self) -> String {
        let base = match self {
            Subject::Forest { spec, .. } => format!("Δ({})", join(&spec.sizes, ",")),
            Subject::Facets { complex, .. } => format!("complex on {} vertices", complex.n_vertices()),
        };
        match self.k() {
            Some(k) => format!("{base}_({k})"),
            None => base,
        }
    }
}

pub fn parse_gluing(text: &str) -> Result<Gluing, CliError> {
    match text.trim() {
        "chain-distinct" | "chain" => Ok(Gluing::ChainDistinct),
        "star" => Ok(Gluing::Star),
        schedule => schedule
            .split(',')
            .map(|pair| {
                let (facet, vertex) = pair
                    .split_once(':')
                    .ok_or_else(|| CliError::Input(format!("gluing entry `{pair}` is not FACET:VERTEX")))?;
                let num = |s: &str| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| CliError::Input(format!("gluing entry `{pair}` is not FACET:VERTEX")))
                };
                Ok((num(facet)?, num(vertex)?))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Gluing::Explicit),
    }
}

pub fn oracle_from_args(args: &OracleArgs) -> Result<Oracle, CliError> {
    let field: FieldSpec = args.field.parse()?;
    Ok(Oracle::new(field).with_guard(args.guard))
}

pub fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}
