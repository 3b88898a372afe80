//! Partitions, compositions, subsets of `[n]` and skew shapes.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// Largest ambient size for which subset-indexed tables are materialized.
pub const MAX_N: usize = 16;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(domain(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(domain(format!("{parts:?} has an interior zero part")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The hook `(n-k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(domain(format!("hook ({n}-{k},1^{k}) needs 0 <= k < n")));
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `Some(k)` when this is the hook `(n-k, 1^k)`.
    pub fn hook_leg(&self) -> Option<usize> {
        match self.parts.split_first() {
            Some((_, rest)) if rest.iter().all(|&p| p == 1) => Some(rest.len()),
            _ => None,
        }
    }

    pub fn is_hook(&self) -> bool {
        self.hook_leg().is_some()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.parts))
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

/// An ordered sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(domain(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts sorted into a partition.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Partial sums short of the total, as a subset of `[n-1]`.
    pub fn descent_set(&self) -> Result<SubsetOfN> {
        let n = self.size();
        let mut acc = 0;
        let mut elems = Vec::new();
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p;
            elems.push(acc);
        }
        SubsetOfN::from_elements(n, elems)
    }

    /// All compositions of `n`, ordered by their descent sets' bitmasks.
    pub fn all(n: usize) -> Result<Vec<Composition>> {
        if n == 0 || n > MAX_N {
            return Err(domain(format!("compositions of {n} are not enumerated")));
        }
        (0..1u32 << (n - 1))
            .map(|mask| comp_of_subset(n, &SubsetOfN::new(n, mask)?))
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

/// A composition considered up to cyclic rotation.
///
/// The parts keep the order they were built in; equality and hashing go
/// through the lexicographically smallest rotation.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct CyclicComposition {
    parts: Vec<usize>,
}

impl CyclicComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(domain(format!("cyclic composition {parts:?} needs positive parts")));
        }
        Ok(CyclicComposition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Lexicographically smallest rotation.
    pub fn canonical(&self) -> Vec<usize> {
        let t = self.parts.len();
        (0..t)
            .map(|r| {
                self.parts[r..]
                    .iter()
                    .chain(&self.parts[..r])
                    .copied()
                    .collect::<Vec<_>>()
            })
            .min()
            .unwrap_or_default()
    }

    /// The parts read as an ordinary composition.
    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }
}

impl PartialEq for CyclicComposition {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for CyclicComposition {}

impl Hash for CyclicComposition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Display for CyclicComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

/// A subset of `[n] = {1, ..., n}` stored as a bitmask (bit `i-1` for `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetOfN {
    n: u8,
    mask: u32,
}

impl SubsetOfN {
    pub fn new(n: usize, mask: u32) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::Resource(format!("ambient size {n} exceeds {MAX_N}")));
        }
        if mask >> n != 0 {
            return Err(domain(format!("mask {mask:#b} has elements beyond {n}")));
        }
        Ok(SubsetOfN { n: n as u8, mask })
    }

    pub fn from_elements(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u32;
        for e in elems {
            if e == 0 || e > n {
                return Err(domain(format!("element {e} is outside [1, {n}]")));
            }
            mask |= 1 << (e - 1);
        }
        SubsetOfN::new(n, mask)
    }

    pub fn empty(n: usize) -> Result<Self> {
        SubsetOfN::new(n, 0)
    }

    /// The whole of `[n]`.
    pub fn full(n: usize) -> Result<Self> {
        SubsetOfN::new(n, full_mask(n))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == full_mask(self.n())
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n() && self.mask & (1 << (i - 1)) != 0
    }

    /// Sorted elements.
    pub fn elements(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.contains(i)).collect()
    }

    pub fn with(&self, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= self.n());
        SubsetOfN {
            n: self.n,
            mask: self.mask | (1 << (i - 1)),
        }
    }

    pub fn without(&self, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= self.n());
        SubsetOfN {
            n: self.n,
            mask: self.mask & !(1 << (i - 1)),
        }
    }

    /// Adds `k` modulo `n` to every element.
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.n();
        if n == 0 {
            return *self;
        }
        let k = k.rem_euclid(n as i64) as usize;
        SubsetOfN {
            n: self.n,
            mask: rotate_mask(self.mask, n, k),
        }
    }

    /// `j -> n - j`, with `0` identified with `n`.
    pub fn negate(&self) -> Self {
        let n = self.n();
        let mut mask = 0;
        for j in self.elements() {
            let image = if j == n { n } else { n - j };
            mask |= 1 << (image - 1);
        }
        SubsetOfN { n: self.n, mask }
    }

    /// `[n] \ self`.
    pub fn complement(&self) -> Self {
        SubsetOfN {
            n: self.n,
            mask: full_mask(self.n()) & !self.mask,
        }
    }

    /// Lexicographic comparison of the sorted element lists.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.elements().cmp(&other.elements())
    }

    /// Every subset of `[n]`, by increasing mask.
    pub fn all(n: usize) -> Result<impl Iterator<Item = SubsetOfN>> {
        SubsetOfN::empty(n)?;
        Ok((0..1u32 << n).map(move |mask| SubsetOfN { n: n as u8, mask }))
    }

    /// The rotation orbit, starting from `self`.
    pub fn orbit(&self) -> Vec<SubsetOfN> {
        let mut out = vec![*self];
        let mut cur = self.rotate(1);
        while cur != *self {
            out.push(cur);
            cur = cur.rotate(1);
        }
        out
    }
}

impl fmt::Display for SubsetOfN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", join(&self.elements()))
    }
}

impl Serialize for SubsetOfN {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements().serialize(s)
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn rotate_mask(mask: u32, n: usize, k: usize) -> u32 {
    if k == 0 || n == 0 {
        return mask;
    }
    let full = full_mask(n);
    ((mask << k) | (mask >> (n - k))) & full
}

/// The composition `(j_1, j_2 - j_1, ..., n - j_t)` of a subset of `[n-1]`.
pub fn comp_of_subset(n: usize, set: &SubsetOfN) -> Result<Composition> {
    if set.n() != n {
        return Err(domain(format!("subset {set} lives in [{}], not [{n}]", set.n())));
    }
    if n == 0 || set.contains(n) {
        return Err(domain(format!("{set} is not a subset of [{}]", n.saturating_sub(1))));
    }
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for j in set.elements() {
        parts.push(j - prev);
        prev = j;
    }
    parts.push(n - prev);
    Composition::new(parts)
}

/// The cyclic composition `(j_2 - j_1, ..., j_1 + n - j_t)` of a nonempty subset.
pub fn ccomp_of_subset(n: usize, set: &SubsetOfN) -> Result<CyclicComposition> {
    if set.n() != n {
        return Err(domain(format!("subset {set} lives in [{}], not [{n}]", set.n())));
    }
    let elems = set.elements();
    let (first, last) = match (elems.first(), elems.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return Err(domain("the cyclic composition of the empty set is undefined")),
    };
    let mut parts: Vec<usize> = elems.windows(2).map(|w| w[1] - w[0]).collect();
    parts.push(first + n - last);
    CyclicComposition::new(parts)
}

/// Structural class of a skew shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeClass {
    ConnectedRibbon,
    /// At least two components, each a ribbon.
    GeneralizedRibbon {
        components: usize,
        height: usize,
    },
    Other,
}

/// The skew diagram `outer / inner`; rows are numbered top-down from 0.
#[derive(Clone, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(domain(format!("{inner} is not contained in {outer}")));
        }
        if outer.size() == inner.size() {
            return Err(domain(format!("{outer}/{inner} has no cells")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Result<Self> {
        SkewShape::new(shape, Partition::empty())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer partition, including empty ones.
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `[start, end)` of row `r`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r), self.outer.part(r))
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        let (s, e) = self.row_span(r);
        s <= c && c < e
    }

    /// Cells in row-major order, top row first.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.num_rows())
            .flat_map(|r| {
                let (s, e) = self.row_span(r);
                (s..e).map(move |c| (r, c))
            })
            .collect()
    }

    /// Builds the shape occupying exactly `cells`, which must form a skew diagram
    /// once translated to the origin.
    pub fn from_cells(cells: &[(usize, usize)]) -> Result<Self> {
        let set: BTreeSet<(usize, usize)> = cells.iter().copied().collect();
        if set.is_empty() {
            return Err(domain("no cells"));
        }
        let r0 = set.iter().map(|c| c.0).min().unwrap_or(0);
        let rows = set.iter().map(|c| c.0).max().unwrap_or(0) - r0 + 1;
        let mut spans: Vec<Option<(usize, usize)>> = vec![None; rows];
        for &(r, c) in &set {
            let span = &mut spans[r - r0];
            *span = Some(match *span {
                None => (c, c + 1),
                Some((s, e)) => (s.min(c), e.max(c + 1)),
            });
        }
        let mut outer = Vec::with_capacity(rows);
        let mut inner = Vec::with_capacity(rows);
        for (i, span) in spans.iter().enumerate() {
            match span {
                Some((s, e)) => {
                    if (*s..*e).any(|c| !set.contains(&(i + r0, c))) {
                        return Err(domain("row with a gap is not a skew shape"));
                    }
                    outer.push(*e);
                    inner.push(*s);
                }
                None => {
                    outer.push(0);
                    inner.push(0);
                }
            }
        }
        // An empty row collapses onto the end of the row below it; the last
        // row is never empty.
        for i in (0..rows.saturating_sub(1)).rev() {
            if spans[i].is_none() {
                outer[i] = outer[i + 1];
                inner[i] = outer[i + 1];
            }
        }
        let outer = Partition::new(outer).map_err(|_| domain("cells do not form a skew shape"))?;
        let inner = Partition::new(inner).map_err(|_| domain("cells do not form a skew shape"))?;
        SkewShape::new(outer, inner)
    }

    fn normalized_cells(&self) -> Vec<(usize, usize)> {
        let cells = self.cells();
        let r0 = cells.iter().map(|c| c.0).min().unwrap_or(0);
        let c0 = cells.iter().map(|c| c.1).min().unwrap_or(0);
        cells.into_iter().map(|(r, c)| (r - r0, c - c0)).collect()
    }

    /// Removes empty rows and empty columns. SYT, descents and Schur
    /// expansions only see the relative order of rows and columns, so this is
    /// the canonical representative used by exhaustive enumeration.
    pub fn compact(&self) -> SkewShape {
        let cells = self.cells();
        let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
        let cols: BTreeSet<usize> = cells.iter().map(|c| c.1).collect();
        let row_rank = |r: usize| rows.range(..r).count();
        let col_rank = |c: usize| cols.range(..c).count();
        let compacted: Vec<(usize, usize)> = cells.iter().map(|&(r, c)| (row_rank(r), col_rank(c))).collect();
        SkewShape::from_cells(&compacted).expect("compaction preserves skewness")
    }

    /// Connected components under edge adjacency, each in row-major order,
    /// listed from the northeast component to the southwest one.
    pub fn components(&self) -> Vec<Vec<(usize, usize)>> {
        let cells = self.cells();
        let set: HashSet<(usize, usize)> = cells.iter().copied().collect();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &start in &cells {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some((r, c)) = stack.pop() {
                comp.push((r, c));
                let mut nbrs = vec![(r + 1, c), (r, c + 1)];
                if r > 0 {
                    nbrs.push((r - 1, c));
                }
                if c > 0 {
                    nbrs.push((r, c - 1));
                }
                for nb in nbrs {
                    if set.contains(&nb) && seen.insert(nb) {
                        stack.push(nb);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn num_components(&self) -> usize {
        self.components().len()
    }

    fn has_2x2(&self) -> bool {
        self.cells().iter().any(|&(r, c)| {
            self.contains_cell(r, c + 1) && self.contains_cell(r + 1, c) && self.contains_cell(r + 1, c + 1)
        })
    }

    /// Number of nonempty rows.
    pub fn height(&self) -> usize {
        (0..self.num_rows()).filter(|&r| self.row_len(r) > 0).count()
    }

    pub fn is_connected_ribbon(&self) -> bool {
        self.num_components() == 1 && !self.has_2x2()
    }

    /// Every connected component is a ribbon.
    pub fn is_generalized_ribbon(&self) -> bool {
        !self.has_2x2()
    }

    pub fn classify(&self) -> ShapeClass {
        if self.has_2x2() {
            return ShapeClass::Other;
        }
        match self.num_components() {
            1 => ShapeClass::ConnectedRibbon,
            m => ShapeClass::GeneralizedRibbon {
                components: m,
                height: self.height(),
            },
        }
    }

    pub fn is_single_row(&self) -> bool {
        self.height() == 1
    }

    pub fn is_single_column(&self) -> bool {
        self.num_components() == 1 && (0..self.num_rows()).all(|r| self.row_len(r) <= 1)
    }

    /// `Some((rows, cols))` when the shape is a straight rectangle.
    pub fn rectangle(&self) -> Option<(usize, usize)> {
        let cells = self.normalized_cells();
        let rows = cells.iter().map(|c| c.0).max()? + 1;
        let cols = cells.iter().map(|c| c.1).max()? + 1;
        (rows * cols == cells.len()).then_some((rows, cols))
    }

    /// Row lengths from southwest to northeast when every component is a
    /// single row.
    pub fn horizontal_strip_rows(&self) -> Option<Composition> {
        let comps = self.components();
        if comps.iter().any(|comp| comp.iter().any(|c| c.0 != comp[0].0)) {
            return None;
        }
        let parts = comps.iter().rev().map(|comp| comp.len()).collect();
        Composition::new(parts).ok()
    }

    /// The ribbon whose row lengths, bottom row first, are the parts of
    /// `comp`; consecutive rows share exactly one column.
    pub fn ribbon(comp: &Composition) -> Result<Self> {
        let t = comp.len();
        if t == 0 {
            return Err(domain("empty composition"));
        }
        let mut outer = vec![0; t];
        let mut inner = vec![0; t];
        let mut start = 0;
        for (k, &len) in comp.parts().iter().enumerate() {
            let row = t - 1 - k;
            inner[row] = start;
            outer[row] = start + len;
            start += len - 1;
        }
        SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)
    }

    /// `(a_1) ⊕ (a_2) ⊕ ...`, rows listed from southwest to northeast.
    pub fn horizontal_strip(comp: &Composition) -> Result<Self> {
        let blocks = comp
            .parts()
            .iter()
            .map(|&p| SkewShape::straight(Partition::new(vec![p])?))
            .collect::<Result<Vec<_>>>()?;
        SkewShape::direct_sum(&blocks)
    }

    /// Places the blocks from southwest to northeast, each strictly southwest
    /// of the next with no shared rows or columns.
    pub fn direct_sum(blocks: &[SkewShape]) -> Result<Self> {
        if blocks.is_empty() {
            return Err(domain("direct sum of zero blocks"));
        }
        let normalized: Vec<Vec<(usize, usize)>> = blocks.iter().map(|b| b.normalized_cells()).collect();
        let heights: Vec<usize> = normalized
            .iter()
            .map(|c| c.iter().map(|x| x.0).max().unwrap_or(0) + 1)
            .collect();
        let widths: Vec<usize> = normalized
            .iter()
            .map(|c| c.iter().map(|x| x.1).max().unwrap_or(0) + 1)
            .collect();
        let mut cells = Vec::new();
        for (i, block) in normalized.iter().enumerate() {
            let row_off: usize = heights[i + 1..].iter().sum();
            let col_off: usize = widths[..i].iter().sum();
            cells.extend(block.iter().map(|&(r, c)| (r + row_off, c + col_off)));
        }
        SkewShape::from_cells(&cells)
    }

    /// `(1^k) ⊕ (n-k)`.
    pub fn column_plus_row(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(domain(format!(
                "(1^{k}) ⊕ ({}) needs 1 <= k <= n-1",
                n.saturating_sub(k)
            )));
        }
        let column = SkewShape::straight(Partition::new(vec![1; k])?)?;
        let row = SkewShape::straight(Partition::new(vec![n - k])?)?;
        SkewShape::direct_sum(&[column, row])
    }

    /// Every skew shape with `n` cells up to translation and removal of empty
    /// rows and columns, in a fixed order.
    pub fn all_of_size(n: usize) -> Vec<SkewShape> {
        // Rows are built bottom-up as column spans [start, end).
        fn go(rest: usize, rows: &mut Vec<(usize, usize)>, out: &mut Vec<SkewShape>) {
            if rest == 0 {
                let outer = rows.iter().rev().map(|r| r.1).collect();
                let inner = rows.iter().rev().map(|r| r.0).collect();
                out.push(SkewShape {
                    outer: Partition::new(outer).expect("valid"),
                    inner: Partition::new(inner).expect("valid"),
                });
                return;
            }
            let (s, e) = rows.last().copied().unwrap_or((0, 0));
            for start in s..=e {
                for len in 1..=rest {
                    let end = start + len;
                    if end < e {
                        continue;
                    }
                    rows.push((start, end));
                    go(rest - len, rows, out);
                    rows.pop();
                }
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        for len in 1..=n {
            let mut rows = vec![(0, len)];
            go(n - len, &mut rows, &mut out);
        }
        out
    }
}

impl PartialEq for SkewShape {
    fn eq(&self, other: &Self) -> bool {
        self.normalized_cells() == other.normalized_cells()
    }
}

impl Eq for SkewShape {}

impl Hash for SkewShape {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized_cells().hash(state);
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    let text = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text)
        .trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        let (base, exp) = match item.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim()),
            None => (item, "1"),
        };
        let base: usize = base.parse().map_err(|_| Error::Parse(format!("bad part {item:?}")))?;
        let exp: usize = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {item:?}")))?;
        parts.extend(std::iter::repeat_n(base, exp));
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

/// Grammar: `outer[/inner]`, or blocks joined by `+` for a direct sum
/// (southwest block first). Parts may use `p^k` for `k` copies of `p`.
impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty shape".into()));
        }
        if s.contains('+') {
            let blocks = s.split('+').map(str::parse).collect::<Result<Vec<SkewShape>>>()?;
            return SkewShape::direct_sum(&blocks);
        }
        let (outer, inner) = s.split_once('/').unwrap_or((s, ""));
        SkewShape::new(outer.parse()?, inner.parse()?)
    }
}
