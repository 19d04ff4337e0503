use std::fmt;

/// Maximum number of vertices a complex may have; one bit per vertex.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices packed into a single 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// The first `n` vertices, `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices.into_iter().fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && (self.0 >> v) & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub const fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    /// All subsets of `self`, including `∅` and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(self.0) }
    }

    /// All subsets of `self` with exactly `r` elements.
    pub fn subsets_of_size(self, r: usize) -> impl Iterator<Item = VertexSet> {
        let verts: Vec<usize> = self.iter().collect();
        let width = verts.len();
        let mut local: Option<u64> = match r {
            0 => Some(0),
            _ if r > width => None,
            _ => Some(u64::MAX >> (64 - r)),
        };
        let limit: u128 = 1u128 << width;
        std::iter::from_fn(move || {
            let cur = local?;
            local = if cur == 0 {
                None
            } else {
                // Gosper's hack: next integer with the same popcount
                let c = cur & cur.wrapping_neg();
                let r = cur.wrapping_add(c);
                let next = (((r ^ cur) >> 2) / c) | r;
                ((next as u128) < limit && r != 0).then_some(next)
            };
            let mut out = VertexSet::EMPTY;
            let mut bits = cur;
            while bits != 0 {
                out = out.with(verts[bits.trailing_zeros() as usize]);
                bits &= bits - 1;
            }
            Some(out)
        })
    }

    /// Sort key for canonical facet order: by size, then by mask value.
    pub fn canonical_key(self) -> (usize, u64) {
        (self.len(), self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, v) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = (cur != 0).then(|| (cur - 1) & self.mask);
        Some(VertexSet(cur))
    }
}
