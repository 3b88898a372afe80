//! Homogeneous symmetric functions of fixed degree in the Schur basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{self, domain, Error, Result};
use crate::shapes::{ccomp_of_subset, comp_of_subset, Composition, Partition, ShapeClass, SkewShape, SubsetOfN};
use crate::tableaux::count_ssyt;

/// Partitions of `n` in increasing lexicographic order, with reverse lookup.
#[derive(Debug)]
pub struct PartitionIndex {
    n: usize,
    parts: Vec<Partition>,
    position: HashMap<Partition, usize>,
}

impl PartitionIndex {
    pub fn of(n: usize) -> Arc<PartitionIndex> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PartitionIndex>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(idx) = cache.lock().expect("poisoned").get(&n) {
            return idx.clone();
        }
        let mut parts = Partition::all(n);
        parts.reverse();
        let position = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let idx = Arc::new(PartitionIndex { n, parts, position });
        cache.lock().expect("poisoned").entry(n).or_insert(idx).clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.position.get(p).copied()
    }
}

/// `Σ_ν c_ν s_ν` over partitions `ν` of a fixed `n`.
#[derive(Clone, Debug)]
pub struct SchurVector {
    index: Arc<PartitionIndex>,
    coeffs: Vec<i64>,
}

#[derive(Serialize)]
struct Term<'a> {
    partition: &'a Partition,
    coefficient: i64,
}

impl SchurVector {
    pub fn zero(n: usize) -> Self {
        let index = PartitionIndex::of(n);
        let coeffs = vec![0; index.len()];
        SchurVector { index, coeffs }
    }

    /// The Schur function `s_λ`.
    pub fn schur(shape: &Partition) -> Self {
        let mut v = SchurVector::zero(shape.size());
        let i = v.index.position(shape).expect("partition of n");
        v.coeffs[i] = 1;
        v
    }

    pub fn n(&self) -> usize {
        self.index.n()
    }

    pub fn coeff(&self, shape: &Partition) -> i64 {
        self.index.position(shape).map_or(0, |i| self.coeffs[i])
    }

    /// Coefficients aligned with [`PartitionIndex::partitions`].
    pub fn dense(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Nonzero terms in increasing lexicographic order of partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.index
            .partitions()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(p, &c)| (p, c))
    }

    fn same_degree(&self, other: &SchurVector) -> Result<()> {
        if self.n() != other.n() {
            return Err(domain(format!(
                "degree {} does not match degree {}",
                self.n(),
                other.n()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SchurVector) -> Result<SchurVector> {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &SchurVector) -> Result<SchurVector> {
        self.add_scaled(other, -1)
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, other: &SchurVector, k: i64) -> Result<SchurVector> {
        self.same_degree(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| error::add(a, error::mul(k, b)?))
            .collect::<Result<_>>()?;
        Ok(SchurVector {
            index: self.index.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, k: i64) -> Result<SchurVector> {
        SchurVector::zero(self.n()).add_scaled(self, k)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<Term> = self
            .terms()
            .map(|(partition, coefficient)| Term { partition, coefficient })
            .collect();
        serde_json::to_value(terms).expect("plain data")
    }
}

impl PartialEq for SchurVector {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.coeffs == other.coeffs
    }
}

impl Eq for SchurVector {}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.terms() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "s({p})")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `K_{ν,α}`: semistandard tableaux of shape `ν` and content `α`.
pub fn kostka(shape: &Partition, content: &[usize]) -> Result<i64> {
    let straight = SkewShape::straight(shape.clone())?;
    count_ssyt(&straight, content.len(), Some(content))
}

/// `h_α = Σ_ν K_{ν,α} s_ν`.
pub fn h_to_schur(comp: &Composition) -> Result<SchurVector> {
    h_partition(&comp.sorted())
}

fn h_partition(shape: &Partition) -> Result<SchurVector> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, SchurVector>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("poisoned").get(shape) {
        return Ok(v.clone());
    }
    let mut v = SchurVector::zero(shape.size());
    for (i, nu) in v.index.clone().partitions().iter().enumerate() {
        // K vanishes unless ν dominates the content, in particular ν ≥ α lexicographically.
        if nu >= shape {
            v.coeffs[i] = kostka(nu, shape.parts())?;
        }
    }
    cache.lock().expect("poisoned").insert(shape.clone(), v.clone());
    Ok(v)
}

/// Converts a signed combination of `h_μ` (keyed by sorted `μ`) to Schur form.
fn h_combination_to_schur(n: usize, terms: &BTreeMap<Partition, i64>) -> Result<SchurVector> {
    let mut out = SchurVector::zero(n);
    for (mu, &c) in terms {
        if c != 0 {
            out = out.add_scaled(&h_partition(mu)?, c)?;
        }
    }
    Ok(out)
}

/// Jacobi–Trudi expansion `det(h_{λ_i - μ_j + j - i})` as a signed sum of
/// complete homogeneous products, keyed by the sorted product.
pub fn jacobi_trudi_h(shape: &SkewShape) -> BTreeMap<Partition, i64> {
    let shape = shape.compact();
    let outer = shape.outer();
    let inner = shape.inner();
    let l = outer.len();
    // Row by row, each row picking an unused column; state = used columns.
    let mut states: HashMap<u32, BTreeMap<Vec<usize>, i64>> = HashMap::new();
    states.insert(0, BTreeMap::from([(Vec::new(), 1)]));
    for i in 0..l {
        let mut next: HashMap<u32, BTreeMap<Vec<usize>, i64>> = HashMap::new();
        for (&used, products) in &states {
            for j in 0..l {
                if used & (1 << j) != 0 {
                    continue;
                }
                let degree = outer.part(i) as i64 - inner.part(j) as i64 + j as i64 - i as i64;
                if degree < 0 {
                    continue;
                }
                let inversions = (used >> (j + 1)).count_ones();
                let sign = if inversions % 2 == 0 { 1 } else { -1 };
                let slot = next.entry(used | (1 << j)).or_default();
                for (prod, &c) in products {
                    let mut prod = prod.clone();
                    if degree > 0 {
                        let pos = prod.partition_point(|&x| x > degree as usize);
                        prod.insert(pos, degree as usize);
                    }
                    *slot.entry(prod).or_default() += sign * c;
                }
            }
        }
        states = next;
    }
    let full = if l == 0 { 0 } else { (1u32 << l) - 1 };
    states
        .remove(&full)
        .unwrap_or_default()
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(p, c)| (Partition::new(p).expect("sorted"), c))
        .collect()
}

/// Schur expansion of `s_{λ/μ}` through the Jacobi–Trudi determinant.
pub fn skew_schur(shape: &SkewShape) -> Result<SchurVector> {
    let v = h_combination_to_schur(shape.size(), &jacobi_trudi_h(shape))?;
    if let Some((p, c)) = v.terms().find(|(_, c)| *c < 0) {
        return Err(Error::Internal(format!("s({shape}) has coefficient {c} at {p}")));
    }
    Ok(v)
}

/// `s_{α(J,n)} = Σ_{I ⊆ J} (-1)^{|J \ I|} h_{α(I,n)}`.
pub fn ribbon_schur(n: usize, set: &SubsetOfN) -> Result<SchurVector> {
    comp_of_subset(n, set)?;
    let mut terms: BTreeMap<Partition, i64> = BTreeMap::new();
    for_each_subset(set.mask(), |sub| -> Result<()> {
        let i = SubsetOfN::new(n, sub)?;
        let sign = if (set.len() - i.len()).is_multiple_of(2) { 1 } else { -1 };
        *terms.entry(comp_of_subset(n, &i)?.sorted()).or_default() += sign;
        Ok(())
    })?;
    h_combination_to_schur(n, &terms)
}

/// `s̃_{cc(J,n)} = Σ_{∅ ≠ I ⊆ J} (-1)^{|J \ I|} h_{cc(I,n)}`; zero for `J = ∅`.
pub fn affine_ribbon_schur(n: usize, set: &SubsetOfN) -> Result<SchurVector> {
    static CACHE: OnceLock<Mutex<HashMap<SubsetOfN, SchurVector>>> = OnceLock::new();
    if set.n() != n {
        return Err(domain(format!("subset {set} lives in [{}], not [{n}]", set.n())));
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("poisoned").get(set) {
        return Ok(v.clone());
    }
    let mut terms: BTreeMap<Partition, i64> = BTreeMap::new();
    for_each_subset(set.mask(), |sub| -> Result<()> {
        if sub == 0 {
            return Ok(());
        }
        let i = SubsetOfN::new(n, sub)?;
        let sign = if (set.len() - i.len()).is_multiple_of(2) { 1 } else { -1 };
        *terms
            .entry(ccomp_of_subset(n, &i)?.as_composition().sorted())
            .or_default() += sign;
        Ok(())
    })?;
    let v = h_combination_to_schur(n, &terms)?;
    cache.lock().expect("poisoned").insert(*set, v.clone());
    Ok(v)
}

fn for_each_subset(mask: u32, mut f: impl FnMut(u32) -> Result<()>) -> Result<()> {
    let mut sub = mask;
    loop {
        f(sub)?;
        if sub == 0 {
            return Ok(());
        }
        sub = (sub - 1) & mask;
    }
}

/// `p_n = Σ_k (-1)^k s_{(n-k,1^k)}`.
pub fn power_sum_hooks(n: usize) -> Result<SchurVector> {
    if n == 0 {
        return Err(domain("p_0 is not a homogeneous function of positive degree"));
    }
    let mut v = SchurVector::zero(n);
    for k in 0..n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        v = v.add_scaled(&SchurVector::schur(&Partition::hook(n, k)?), sign)?;
    }
    Ok(v)
}

/// Hall inner product; the Schur basis is orthonormal.
pub fn hall_inner(f: &SchurVector, g: &SchurVector) -> Result<i64> {
    f.same_degree(g)?;
    f.coeffs
        .iter()
        .zip(&g.coeffs)
        .try_fold(0i64, |acc, (&a, &b)| error::add(acc, error::mul(a, b)?))
}

/// Evaluation at `m` variables equal to one.
pub fn principal_spec(f: &SchurVector, m: usize) -> Result<i64> {
    let mut total = 0i64;
    for (nu, c) in f.terms() {
        let count = count_ssyt(&SkewShape::straight(nu.clone())?, m, None)?;
        total = error::add(total, error::mul(c, count)?)?;
    }
    Ok(total)
}

/// Coefficient of `x^a` for the exponent vector `a` (zeros allowed).
pub fn monomial_coefficient(f: &SchurVector, exponents: &[usize]) -> Result<i64> {
    if exponents.iter().sum::<usize>() != f.n() {
        return Ok(0);
    }
    let mut content: Vec<usize> = exponents.iter().copied().filter(|&e| e > 0).collect();
    content.sort_unstable_by(|a, b| b.cmp(a));
    let kostka_column = h_partition(&Partition::new(content)?)?;
    hall_inner(f, &kostka_column)
}

/// Closed-form coefficients of the hooks `s_{(n-k,1^k)}` in a skew Schur
/// function: `binom(m-1, h-k-1)` for a generalized ribbon with `m` components
/// and height `h`, zero for every other shape.
pub fn hook_mults(shape: &SkewShape) -> BTreeMap<usize, i64> {
    let n = shape.size();
    let (m, h) = match shape.classify() {
        ShapeClass::ConnectedRibbon => (1, shape.height()),
        ShapeClass::GeneralizedRibbon { components, height } => (components, height),
        ShapeClass::Other => (0, 0),
    };
    (0..n)
        .map(|k| {
            let value = if m > 0 && k < h && h <= k + m {
                binom(m as i64 - 1, (h - k - 1) as i64)
            } else {
                0
            };
            (k, value)
        })
        .collect()
}

pub(crate) fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `s_{(1^k) ⊕ (n-k)}`.
pub fn column_plus_row_schur(n: usize, k: usize) -> Result<SchurVector> {
    skew_schur(&SkewShape::column_plus_row(n, k)?)
}

/// Whether `s_{(1^k) ⊕ (n-k)} = s_{(n-k+1,1^{k-1})} + s_{(n-k,1^k)}`.
pub fn sum_of_hooks_identity(n: usize, k: usize) -> Result<bool> {
    let lhs = column_plus_row_schur(n, k)?;
    let rhs = SchurVector::schur(&Partition::hook(n, k - 1)?).add(&SchurVector::schur(&Partition::hook(n, k)?))?;
    Ok(lhs == rhs)
}
