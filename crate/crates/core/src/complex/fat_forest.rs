use super::{ComplexError, SimplicialComplex, VertexSet, MAX_VERTICES};

/// Where each facet after the first is attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gluing {
    /// Facet `i+1` is glued at a vertex of facet `i` that is not facet `i`'s
    /// own gluing vertex, so all gluing vertices are distinct.
    ChainDistinct,
    /// Every facet after the first is glued at vertex 0.
    Star,
    /// `(facet, vertex)` pairs: facet index is 1-based and at least 2, the
    /// vertex must already exist when that facet is attached.
    Explicit(Vec<(usize, usize)>),
}

/// Facet sizes `n_1, ..., n_e` and a gluing schedule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatForestSpec {
    pub sizes: Vec<usize>,
    pub gluing: Gluing,
}

impl FatForestSpec {
    pub fn new(sizes: Vec<usize>, gluing: Gluing) -> Self {
        Self { sizes, gluing }
    }

    pub fn chain(sizes: &[usize]) -> Self {
        Self::new(sizes.to_vec(), Gluing::ChainDistinct)
    }

    /// `N = sum n_i - (e - 1)`.
    pub fn n_vertices(&self) -> usize {
        (self.sizes.iter().sum::<usize>() + 1).saturating_sub(self.sizes.len())
    }

    pub fn validate(&self) -> Result<(), ComplexError> {
        validate_sizes(&self.sizes)
    }
}

pub(crate) fn validate_sizes(sizes: &[usize]) -> Result<(), ComplexError> {
    if sizes.is_empty() {
        return Err(ComplexError::NoFacets);
    }
    if let Some((index, &size)) = sizes.iter().enumerate().find(|(_, &n)| n < 2) {
        return Err(ComplexError::FacetTooSmall { index: index + 1, size });
    }
    let n = sizes.iter().sum::<usize>() + 1 - sizes.len();
    if n > MAX_VERTICES {
        return Err(ComplexError::TooManyVertices(n));
    }
    Ok(())
}

/// Facets `S_1, ..., S_e` in attachment order.
///
/// Facet 1 takes vertices `0..n_1`; every later facet reuses its gluing
/// vertex and takes the next `n_i - 1` fresh indices.
pub fn glued_facets(spec: &FatForestSpec) -> Result<Vec<VertexSet>, ComplexError> {
    spec.validate()?;
    let e = spec.sizes.len();
    let targets: Vec<usize> = match &spec.gluing {
        Gluing::ChainDistinct => {
            // the last vertex of each facet is never its own gluing vertex
            let mut out = Vec::with_capacity(e.saturating_sub(1));
            let mut last = spec.sizes[0] - 1;
            for &n in &spec.sizes[1..] {
                out.push(last);
                last += n - 1;
            }
            out
        }
        Gluing::Star => vec![0; e - 1],
        Gluing::Explicit(pairs) => {
            let mut slots: Vec<Option<usize>> = vec![None; e.saturating_sub(1)];
            for &(facet, vertex) in pairs {
                if facet < 2 || facet > e {
                    return Err(ComplexError::GluingSchedule(format!(
                        "facet index {facet} is outside 2..={e}"
                    )));
                }
                if slots[facet - 2].replace(vertex).is_some() {
                    return Err(ComplexError::GluingSchedule(format!(
                        "facet {facet} is glued more than once"
                    )));
                }
            }
            slots
                .into_iter()
                .enumerate()
                .map(|(idx, v)| {
                    v.ok_or_else(|| {
                        ComplexError::GluingSchedule(format!("facet {} has no gluing vertex", idx + 2))
                    })
                })
                .collect::<Result<_, _>>()?
        }
    };

    let mut facets = vec![VertexSet::full(spec.sizes[0])];
    let mut next = spec.sizes[0];
    for (idx, (&n, &target)) in spec.sizes[1..].iter().zip(&targets).enumerate() {
        if target >= next {
            return Err(ComplexError::GluingTarget { facet: idx + 2, vertex: target, available: next });
        }
        let fresh = VertexSet::full(next + n - 1).difference(VertexSet::full(next));
        facets.push(fresh.with(target));
        next += n - 1;
    }
    debug_assert!(has_point_gluing(&facets));
    Ok(facets)
}

/// Whether every facet meets the union of the earlier ones in exactly one vertex.
pub fn has_point_gluing(facets: &[VertexSet]) -> bool {
    let mut union = match facets.first() {
        Some(&f) => f,
        None => return true,
    };
    for &f in &facets[1..] {
        if f.intersection(union).len() != 1 {
            return false;
        }
        union = union.union(f);
    }
    true
}

/// `Δ(n_1, ..., n_e)` for the given schedule.
pub fn build_fat_forest(spec: &FatForestSpec) -> Result<SimplicialComplex, ComplexError> {
    let facets = glued_facets(spec)?;
    Ok(SimplicialComplex::from_antichain(spec.n_vertices(), facets))
}
