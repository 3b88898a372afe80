//! Fibre tables of cyclic descent maps and explicit cyclic extensions.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{self, domain, Error, Result};
use crate::shapes::{full_mask, Partition, ShapeClass, SkewShape, SubsetOfN, MAX_N};
use crate::symfunc::{affine_ribbon_schur, hall_inner, skew_schur, SchurVector};
use crate::tableaux::{enumerate_syt, StandardTableau};

/// Number of tableaux with each descent set `J ⊆ [n-1]`, indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesFibers {
    n: usize,
    counts: Vec<i64>,
}

impl DesFibers {
    pub fn from_tableaux(n: usize, tableaux: &[StandardTableau]) -> Result<Self> {
        check_size(n)?;
        let mut counts = vec![0i64; 1 << n.saturating_sub(1)];
        for t in tableaux {
            counts[t.des_set().mask() as usize] += 1;
        }
        Ok(DesFibers { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `#Des^{-1}(J)`; zero when `n ∈ J`.
    pub fn get(&self, set: &SubsetOfN) -> i64 {
        self.counts.get(set.mask() as usize).copied().unwrap_or(0)
    }

    pub fn by_mask(&self, mask: u32) -> i64 {
        self.counts.get(mask as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> i64 {
        self.counts.iter().sum()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(domain("shapes must have at least one cell"));
    }
    if n > MAX_N {
        return Err(Error::Resource(format!(
            "size {n} exceeds the subset table limit {MAX_N}"
        )));
    }
    Ok(())
}

/// Descent fibres of a shape, by enumeration.
pub fn des_fibers(shape: &SkewShape) -> Result<DesFibers> {
    check_size(shape.size())?;
    DesFibers::from_tableaux(shape.size(), &enumerate_syt(shape)?)
}

/// `m(J)` for every `J ⊆ [n]`, indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberTable {
    n: usize,
    m: Vec<i64>,
}

/// An invariant of a fibre table that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum TableViolation {
    Negative { set: SubsetOfN, value: i64 },
    EmptyOrFull { set: SubsetOfN, value: i64 },
    Rotation { set: SubsetOfN, value: i64, rotated: i64 },
    Extension { set: SubsetOfN, sum: i64, fiber: i64 },
}

impl fmt::Display for TableViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableViolation::Negative { set, value } => write!(f, "m({set}) = {value} is negative"),
            TableViolation::EmptyOrFull { set, value } => write!(f, "m({set}) = {value}, expected 0"),
            TableViolation::Rotation { set, value, rotated } => {
                write!(f, "m({set}) = {value} but its rotation has {rotated}")
            }
            TableViolation::Extension { set, sum, fiber } => {
                write!(
                    f,
                    "m({set}) + m({set} ∪ {{n}}) = {sum} but the descent fibre has {fiber}"
                )
            }
        }
    }
}

#[derive(Serialize)]
struct Entry {
    #[serde(rename = "J")]
    set: SubsetOfN,
    m: i64,
}

#[derive(Serialize)]
struct TableJson {
    n: usize,
    entries: Vec<Entry>,
}

impl FiberTable {
    pub fn zero(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(FiberTable { n, m: vec![0; 1 << n] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, set: &SubsetOfN) -> i64 {
        self.m[set.mask() as usize]
    }

    pub fn by_mask(&self, mask: u32) -> i64 {
        self.m[mask as usize]
    }

    pub fn set(&mut self, set: &SubsetOfN, value: i64) {
        self.m[set.mask() as usize] = value;
    }

    pub fn total(&self) -> i64 {
        self.m.iter().sum()
    }

    /// Counts the values of a cyclic descent map.
    pub fn from_values<'a>(n: usize, values: impl IntoIterator<Item = &'a SubsetOfN>) -> Result<Self> {
        let mut table = FiberTable::zero(n)?;
        for v in values {
            table.m[v.mask() as usize] += 1;
        }
        Ok(table)
    }

    /// Nonzero entries, ordered by size and then lexicographically.
    pub fn entries(&self) -> Vec<(SubsetOfN, i64)> {
        let mut out: Vec<(SubsetOfN, i64)> = (0..self.m.len())
            .filter(|&mask| self.m[mask] != 0)
            .map(|mask| (SubsetOfN::new(self.n, mask as u32).expect("in range"), self.m[mask]))
            .collect();
        out.sort_by(|a, b| subset_order(&a.0, &b.0));
        out
    }

    /// Every failing fibre-table invariant, given the descent fibres.
    pub fn violations(&self, des: &DesFibers) -> Vec<TableViolation> {
        let n = self.n;
        let mut out = Vec::new();
        let all = SubsetOfN::all(n).expect("size checked");
        for set in all {
            let value = self.get(&set);
            if value < 0 {
                out.push(TableViolation::Negative { set, value });
            }
            if (set.is_empty() || set.is_full()) && value != 0 {
                out.push(TableViolation::EmptyOrFull { set, value });
            }
            let rotated = self.get(&set.rotate(1));
            if rotated != value {
                out.push(TableViolation::Rotation { set, value, rotated });
            }
            if !set.contains(n) {
                let sum = value + self.get(&set.with(n));
                let fiber = des.get(&set);
                if sum != fiber {
                    out.push(TableViolation::Extension { set, sum, fiber });
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries = self.entries().into_iter().map(|(set, m)| Entry { set, m }).collect();
        serde_json::to_value(TableJson { n: self.n, entries }).expect("plain data")
    }

    /// Plain-text listing, one `J m` pair per line.
    pub fn to_text(&self) -> String {
        self.entries().iter().map(|(set, m)| format!("{set} {m}\n")).collect()
    }
}

/// Orders subsets by size, then lexicographically by elements.
pub fn subset_order(a: &SubsetOfN, b: &SubsetOfN) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.lex_cmp(b))
}

/// `m(J) = Σ_i (-1)^{i-1} #Des^{-1}({j_{i+1} - j_i, ..., j_t - j_i})`, `m(∅) = 0`.
pub fn fiber_table_from_des(des: &DesFibers) -> Result<FiberTable> {
    let n = des.n();
    let mut table = FiberTable::zero(n)?;
    for set in SubsetOfN::all(n)? {
        let elems = set.elements();
        let mut value = 0i64;
        for (i, &ji) in elems.iter().enumerate() {
            let mask = elems[i + 1..].iter().fold(0u32, |m, &j| m | 1 << (j - ji - 1));
            let term = des.by_mask(mask);
            value = if i % 2 == 0 {
                error::add(value, term)?
            } else {
                error::add(value, -term)?
            };
        }
        table.set(&set, value);
    }
    Ok(table)
}

/// The fibre table forced by the descent fibres of `shape`.
pub fn fiber_table_formula(shape: &SkewShape) -> Result<FiberTable> {
    fiber_table_from_des(&des_fibers(shape)?)
}

/// `m(J) = ⟨s_{λ/μ}, s̃_{cc(J,n)}⟩`.
pub fn fiber_table_inner(shape: &SkewShape) -> Result<FiberTable> {
    fiber_table_from_schur(&skew_schur(shape)?)
}

pub fn fiber_table_from_schur(f: &SchurVector) -> Result<FiberTable> {
    let n = f.n();
    let mut table = FiberTable::zero(n)?;
    for set in SubsetOfN::all(n)? {
        let value = hall_inner(f, &affine_ribbon_schur(n, &set)?)?;
        table.set(&set, value);
    }
    Ok(table)
}

/// A cyclic descent map together with its rotation map `p`, over the
/// tableaux of a shape in canonical order.
#[derive(Clone, Debug)]
pub struct CyclicExtension {
    pub shape: SkewShape,
    pub tableaux: Vec<StandardTableau>,
    pub cdes: Vec<SubsetOfN>,
    /// `p[i]` is the index of the image of tableau `i`.
    pub p: Vec<usize>,
}

#[derive(Serialize)]
struct ExtensionTableauJson {
    inner: Vec<usize>,
    rows: Vec<Vec<u8>>,
    des: SubsetOfN,
    cdes: SubsetOfN,
}

#[derive(Serialize)]
struct ExtensionJson {
    shape: String,
    n: usize,
    tableaux: Vec<ExtensionTableauJson>,
    /// One-line notation, 1-based.
    p: Vec<usize>,
    orbit_sizes: Vec<usize>,
}

impl CyclicExtension {
    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn fiber_table(&self) -> Result<FiberTable> {
        FiberTable::from_values(self.n(), &self.cdes)
    }

    /// Sizes of the cycles of `p`, largest first.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        cycle_sizes(&self.p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let tableaux = self
            .tableaux
            .iter()
            .zip(&self.cdes)
            .map(|(t, &cdes)| ExtensionTableauJson {
                inner: (0..t.shape().num_rows()).map(|r| t.shape().row_span(r).0).collect(),
                rows: t.rows(),
                des: t.des_set(),
                cdes,
            })
            .collect();
        let json = ExtensionJson {
            shape: self.shape.to_string(),
            n: self.n(),
            tableaux,
            p: self.p.iter().map(|i| i + 1).collect(),
            orbit_sizes: self.orbit_sizes(),
        };
        serde_json::to_value(json).expect("plain data")
    }
}

/// Cycle lengths of a permutation given as an index map, largest first.
/// Entries that do not form a permutation are ignored.
pub fn cycle_sizes(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut sizes = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while i < p.len() && !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        sizes.push(len);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// A bijection `p` on `0..values.len()` with `values[p[i]] = values[i] + 1`,
/// provided rotated subsets have equally many preimages.
///
/// For each rotation orbit of subsets, starting at its lexicographically
/// smallest member, the `i`-th index with value `K` goes to the `i`-th index
/// with value `K + 1`.
pub fn stitch_rotation(n: usize, values: &[SubsetOfN]) -> Result<Vec<usize>> {
    let mut by_value: Vec<Vec<usize>> = vec![Vec::new(); 1 << n];
    for (i, v) in values.iter().enumerate() {
        by_value[v.mask() as usize].push(i);
    }
    let mut p = vec![usize::MAX; values.len()];
    let mut visited = vec![false; 1 << n];
    let mut subsets: Vec<SubsetOfN> = SubsetOfN::all(n)?.collect();
    subsets.sort_by(|a, b| a.lex_cmp(b));
    for base in subsets {
        if visited[base.mask() as usize] {
            continue;
        }
        let orbit = base.orbit();
        for (k, member) in orbit.iter().enumerate() {
            visited[member.mask() as usize] = true;
            let next = orbit[(k + 1) % orbit.len()];
            let from = &by_value[member.mask() as usize];
            let to = &by_value[next.mask() as usize];
            if from.len() != to.len() {
                return Err(Error::Internal(format!("fibres of {member} and {next} differ in size")));
            }
            for (&a, &b) in from.iter().zip(to) {
                p[a] = b;
            }
        }
    }
    Ok(p)
}

/// Builds a cyclic extension of `Des` on `SYT(shape)`.
///
/// Within each descent fibre (canonical order) the first `m(J)` tableaux get
/// `cDes = J` and the rest `J ∪ {n}`; `p` comes from [`stitch_rotation`].
pub fn build_extension(shape: &SkewShape) -> Result<CyclicExtension> {
    if shape.classify() == ShapeClass::ConnectedRibbon {
        return Err(Error::NotExtendable {
            shape: shape.to_string(),
        });
    }
    let n = shape.size();
    check_size(n)?;
    let tableaux = enumerate_syt(shape)?;
    let des = DesFibers::from_tableaux(n, &tableaux)?;
    let table = fiber_table_from_des(&des)?;
    if let Some(v) = table.violations(&des).first() {
        return Err(Error::Internal(format!("fibre table of {shape} is inconsistent: {v}")));
    }

    let mut taken = vec![0i64; 1 << n];
    let mut cdes = Vec::with_capacity(tableaux.len());
    for t in &tableaux {
        let d = t.des_set();
        let value = if taken[d.mask() as usize] < table.get(&d) {
            d
        } else {
            d.with(n)
        };
        taken[d.mask() as usize] += 1;
        cdes.push(value);
    }

    let p = stitch_rotation(n, &cdes)?;
    Ok(CyclicExtension {
        shape: shape.clone(),
        tableaux,
        cdes,
        p,
    })
}

/// First failure found when checking a cyclic extension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ExtensionViolation {
    NotBijective,
    Extension {
        index: usize,
        des: SubsetOfN,
        cdes: SubsetOfN,
    },
    Equivariance {
        index: usize,
        cdes: SubsetOfN,
        image_cdes: SubsetOfN,
    },
    NonEscher {
        index: usize,
        cdes: SubsetOfN,
    },
}

impl fmt::Display for ExtensionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtensionViolation::NotBijective => write!(f, "p is not a bijection"),
            ExtensionViolation::Extension { index, des, cdes } => {
                write!(f, "tableau {index}: cDes {cdes} does not restrict to Des {des}")
            }
            ExtensionViolation::Equivariance {
                index,
                cdes,
                image_cdes,
            } => {
                write!(f, "tableau {index}: cDes {cdes} but its image under p has {image_cdes}")
            }
            ExtensionViolation::NonEscher { index, cdes } => {
                write!(f, "tableau {index}: cDes {cdes} is empty or everything")
            }
        }
    }
}

/// Checks bijectivity of `p` and the extension, equivariance and non-Escher
/// axioms at every tableau.
pub fn validate_extension(ext: &CyclicExtension) -> std::result::Result<(), ExtensionViolation> {
    let len = ext.tableaux.len();
    let mut hit = vec![false; len];
    if ext.p.len() != len || ext.cdes.len() != len {
        return Err(ExtensionViolation::NotBijective);
    }
    for &j in &ext.p {
        if j >= len || hit[j] {
            return Err(ExtensionViolation::NotBijective);
        }
        hit[j] = true;
    }
    let n = ext.n();
    for (index, t) in ext.tableaux.iter().enumerate() {
        let cdes = ext.cdes[index];
        let des = t.des_set();
        if cdes.mask() & full_mask(n - 1) != des.mask() {
            return Err(ExtensionViolation::Extension { index, des, cdes });
        }
    }
    for index in 0..len {
        let cdes = ext.cdes[index];
        let image_cdes = ext.cdes[ext.p[index]];
        if image_cdes != cdes.rotate(1) {
            return Err(ExtensionViolation::Equivariance {
                index,
                cdes,
                image_cdes,
            });
        }
    }
    for (index, &cdes) in ext.cdes.iter().enumerate() {
        if cdes.is_empty() || cdes.is_full() {
            return Err(ExtensionViolation::NonEscher { index, cdes });
        }
    }
    Ok(())
}

/// `⟨s̃_{cc(J,n)}, s_ν⟩` for a non-hook `ν ⊢ n`.
pub fn gw_invariant(n: usize, set: &SubsetOfN, nu: &Partition) -> Result<i64> {
    if nu.size() != n {
        return Err(domain(format!("{nu} is not a partition of {n}")));
    }
    if nu.is_hook() {
        return Err(domain(format!("{nu} is a hook")));
    }
    if set.is_empty() {
        return Err(domain("J must be nonempty"));
    }
    hall_inner(&affine_ribbon_schur(n, set)?, &SchurVector::schur(nu))
}
