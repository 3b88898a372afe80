//! Cyclic extensions that are allowed to take the values `∅` and `[n]`.

use std::collections::HashMap;

use serde::Serialize;

use crate::cyclic::{cycle_sizes, des_fibers, fiber_table_from_des, stitch_rotation, FiberTable};
use crate::error::{domain, Error, Result};
use crate::gens::{cellini_cdes, cellini_p, for_each_permutation, perm_des, sn_multivariate, SubsetPoly};
use crate::shapes::{Composition, Partition, SkewShape, SubsetOfN};
use crate::symfunc::{affine_ribbon_schur, binom, hall_inner, principal_spec, skew_schur, SchurVector};
use crate::tableaux::check_permutation;

/// Largest number of words enumerated by [`check_words_identity`].
pub const WORD_LIMIT: u64 = 10_000_000;

/// A word `a_1 ... a_n` over the alphabet `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    letters: Vec<usize>,
    alphabet: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, alphabet: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || a > alphabet) {
            return Err(domain(format!("letter {bad} is outside 1..={alphabet}")));
        }
        Ok(Word { letters, alphabet })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// `{i ∈ [n] : a_i > a_{i+1}}` with `a_{n+1} = a_1`; with `weak`, `≥` instead.
pub fn word_cdes_star(word: &Word, weak: bool) -> Result<SubsetOfN> {
    let a = word.letters();
    let n = a.len();
    let mask = (0..n)
        .filter(|&i| {
            let (x, y) = (a[i], a[(i + 1) % n]);
            if weak {
                x >= y
            } else {
                x > y
            }
        })
        .fold(0u32, |m, i| m | 1 << i);
    SubsetOfN::new(n, mask)
}

/// Fibre table of a shape given as a function of the table, as a subset
/// polynomial.
fn fibers_poly(shape: &SkewShape) -> Result<SubsetPoly> {
    Ok(SubsetPoly::from_fiber_table(&fiber_table_from_des(&des_fibers(
        shape,
    )?)?))
}

/// `Σ_{a ∈ [m]^n} t^{cDes*(a)}` by enumeration against
/// `m + Σ_{non-hook λ} s_λ(1^m) F_λ + Σ_k Σ_t binom(t-2,k-1) binom(m,t) binom(n-1,t-1) F_{(1^k)⊕(n-k)}`,
/// where `F` is the cyclic descent fibre polynomial of a shape.
pub fn check_words_identity(m: usize, n: usize) -> Result<bool> {
    if n < 2 || m < 1 {
        return Err(domain(format!("needs n >= 2 and m >= 1, got m={m}, n={n}")));
    }
    let count = (m as u64).checked_pow(n as u32).filter(|&c| c <= WORD_LIMIT);
    if count.is_none() {
        return Err(Error::Resource(format!("{m}^{n} words exceed {WORD_LIMIT}")));
    }
    let mut lhs = SubsetPoly::zero(n)?;
    let mut word = vec![0usize; n];
    loop {
        // `word` holds letters minus one.
        let mask = (0..n)
            .filter(|&i| word[i] > word[(i + 1) % n])
            .fold(0u32, |acc, i| acc | 1 << i);
        lhs.add_monomial(mask, 1);
        let Some(pos) = (0..n).rev().find(|&i| word[i] + 1 < m) else {
            break;
        };
        word[pos] += 1;
        for w in &mut word[pos + 1..] {
            *w = 0;
        }
    }

    let mut rhs = SubsetPoly::zero(n)?;
    rhs.add_monomial(0, m as i64);
    for lambda in Partition::all(n) {
        if lambda.is_hook() {
            continue;
        }
        let weight = principal_spec(&SchurVector::schur(&lambda), m)?;
        if weight != 0 {
            rhs = rhs.add(&fibers_poly(&SkewShape::straight(lambda)?)?.scale(weight)?)?;
        }
    }
    let p = m.min(n) as i64;
    for k in 1..p {
        let mut weight = 0i64;
        for t in k + 1..=p {
            weight += binom(t - 2, k - 1) * binom(m as i64, t) * binom(n as i64 - 1, t - 1);
        }
        if weight != 0 {
            rhs = rhs.add(&fibers_poly(&SkewShape::column_plus_row(n, k as usize)?)?.scale(weight)?)?;
        }
    }
    Ok(lhs == rhs)
}

/// Number of blocks if `w` is a concatenation of decreasing runs of
/// consecutive values `q_1 ... 1, q_2 ... q_1+1, ...`.
pub fn layered_blocks(w: &[usize]) -> Option<usize> {
    let n = w.len();
    let (mut pos, mut low, mut blocks) = (0, 0, 0);
    while pos < n {
        let top = w[pos];
        if top <= low || pos + (top - low) > n {
            return None;
        }
        if (0..top - low).any(|i| w[pos + i] != top - i) {
            return None;
        }
        pos += top - low;
        low = top;
        blocks += 1;
    }
    Some(blocks)
}

pub fn is_layered(w: &[usize], k: usize) -> bool {
    layered_blocks(w) == Some(k)
}

/// The reverse of `w` is `k`-layered.
pub fn is_colayered(w: &[usize], k: usize) -> bool {
    let rev: Vec<usize> = w.iter().rev().copied().collect();
    is_layered(&rev, k)
}

/// The exceptional cyclic descent set on `S_n`, `n` even: `Des` for
/// even-layered permutations, `Des ∪ {n}` for even-colayered ones, and
/// Cellini's set otherwise.
pub fn cdes_star_sn(w: &[usize]) -> Result<SubsetOfN> {
    check_permutation(w)?;
    let n = w.len();
    if n % 2 == 1 {
        return Err(domain(format!("no exceptional extension exists on S_{n} for odd n")));
    }
    let cdes = cellini_cdes(w)?;
    let even = |k: Option<usize>| k.is_some_and(|k| k % 2 == 0);
    let rev: Vec<usize> = w.iter().rev().copied().collect();
    if even(layered_blocks(w)) {
        Ok(cdes.without(n))
    } else if even(layered_blocks(&rev)) {
        Ok(cdes.with(n))
    } else {
        Ok(cdes)
    }
}

/// Outcome of [`check_prop_6_4`], one flag per property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalSnReport {
    pub n: usize,
    /// `cDes*` restricted to `[n-1]` is `Des`.
    pub extension: bool,
    /// `#cDes*^{-1}(J) = #cDes^{-1}(J) + (-1)^{|J|}` for every `J`.
    pub fiber_shift: bool,
    /// `S_n^{cDes*}(t) - S_n^{cDes}(t) = Π (1 - t_i)`.
    pub product_form: bool,
    /// `∅` and `[n]` each have exactly one preimage.
    pub escher_fibers: bool,
    /// `#cDes*^{-1}(J) = ⟨s_{(1^n)^⊕} - s_n, s̃_{cc(J,n)}⟩` for nonempty `J`.
    pub inner_product: bool,
    /// The bijection from [`exceptional_sn_rotation`] is equivariant.
    pub stitched_equivariant: bool,
    /// Rotation of positions `[w_n, w_1, ..., w_{n-1}]` is equivariant.
    pub cellini_equivariant: bool,
}

impl ExceptionalSnReport {
    /// Every property that makes `cDes*` an exceptional cyclic extension,
    /// with the stitched bijection as `p`.
    pub fn holds(&self) -> bool {
        self.extension
            && self.fiber_shift
            && self.product_form
            && self.escher_fibers
            && self.inner_product
            && self.stitched_equivariant
    }
}

fn check_even_range(n: usize) -> Result<()> {
    if n % 2 == 1 || n == 0 || n > 10 {
        return Err(domain(format!("needs even 2 <= n <= 10, got {n}")));
    }
    Ok(())
}

/// `S_n` in lexicographic order with its `cDes*` values.
fn exceptional_values(n: usize) -> Result<(Vec<Vec<usize>>, Vec<SubsetOfN>)> {
    check_even_range(n)?;
    let mut perms = Vec::new();
    for_each_permutation(n, |w| perms.push(w.to_vec()));
    let values = perms.iter().map(|w| cdes_star_sn(w)).collect::<Result<Vec<_>>>()?;
    Ok((perms, values))
}

/// An equivariant bijection for `cDes*` on `S_n`, as an index map over
/// permutations in lexicographic order.
pub fn exceptional_sn_rotation(n: usize) -> Result<Vec<usize>> {
    let (_, values) = exceptional_values(n)?;
    stitch_rotation(n, &values)
}

/// Checks the fibre identities and axioms of `cDes*` on `S_n`, `n` even.
pub fn check_prop_6_4(n: usize) -> Result<ExceptionalSnReport> {
    let (perms, values) = exceptional_values(n)?;
    let mut star = SubsetPoly::zero(n)?;
    for v in &values {
        star.add_monomial(v.mask(), 1);
    }
    let last = 1u32 << (n - 1);
    let extension = perms.iter().zip(&values).all(|(w, v)| v.mask() & !last == perm_des(w));

    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let cellini_equivariant = perms
        .iter()
        .zip(&values)
        .all(|(w, v)| values[index[cellini_p(w).as_slice()]] == v.rotate(1));
    let p = stitch_rotation(n, &values)?;
    let stitched_equivariant = cycle_sizes(&p).iter().sum::<usize>() == perms.len()
        && p.iter()
            .enumerate()
            .all(|(i, &j)| j < values.len() && values[j] == values[i].rotate(1));

    let (_, cellini) = sn_multivariate(n)?;
    let mut product = SubsetPoly::zero(n)?;
    for mask in 0..1u32 << n {
        product.add_monomial(mask, if mask.count_ones() % 2 == 0 { 1 } else { -1 });
    }
    let product_form = star == cellini.add(&product)?;
    let fiber_shift =
        SubsetOfN::all(n)?.all(|s| star.coeff(&s) == cellini.coeff(&s) + if s.len() % 2 == 0 { 1 } else { -1 });
    let escher_fibers = star.by_mask(0) == 1 && star.coeff(&SubsetOfN::full(n)?) == 1;

    let dots = skew_schur(&SkewShape::horizontal_strip(&Composition::new(vec![1; n])?)?)?;
    let diff = dots.sub(&SchurVector::schur(&Partition::new(vec![n])?))?;
    let mut inner_product = true;
    for set in SubsetOfN::all(n)?.filter(|s| !s.is_empty()) {
        inner_product &= hall_inner(&diff, &affine_ribbon_schur(n, &set)?)? == star.coeff(&set);
    }
    Ok(ExceptionalSnReport {
        n,
        extension,
        fiber_shift,
        product_form,
        escher_fibers,
        inner_product,
        stitched_equivariant,
        cellini_equivariant,
    })
}

/// The fibre sizes `m*(J) = m(J) + (-1)^{|J|} e₀` with `e₀ = m*(∅)`.
pub fn exceptional_fiber_table(shape: &SkewShape, e0: i64) -> Result<FiberTable> {
    let standard = fiber_table_from_des(&des_fibers(shape)?)?;
    let mut table = standard.clone();
    for set in SubsetOfN::all(shape.size())? {
        let sign = if set.len() % 2 == 0 { 1 } else { -1 };
        table.set(&set, standard.get(&set) + sign * e0);
    }
    Ok(table)
}

/// Every `e₀ = #cDes*^{-1}(∅) ≥ 0` for which the fibre sizes
/// `m*(J) = m(J) + (-1)^{|J|} e₀` are nonnegative, rotation invariant and
/// take `∅` or `[n]` at least once.
///
/// Odd `J` force `e₀ ≤ m(J)`, which bounds the search.
pub fn exceptional_feasibility(shape: &SkewShape) -> Result<Vec<i64>> {
    let n = shape.size();
    let standard = fiber_table_from_des(&des_fibers(shape)?)?;
    let all: Vec<SubsetOfN> = SubsetOfN::all(n)?.collect();
    let bound = all
        .iter()
        .filter(|s| s.len() % 2 == 1)
        .map(|s| standard.get(s))
        .min()
        .unwrap_or(0);
    let rotation_invariant = all.iter().all(|s| standard.get(s) == standard.get(&s.rotate(1)));
    if !rotation_invariant {
        return Ok(Vec::new());
    }
    let full = SubsetOfN::full(n)?;
    let mut feasible = Vec::new();
    for e0 in 0..=bound {
        let value = |s: &SubsetOfN| standard.get(s) + if s.len().is_multiple_of(2) { e0 } else { -e0 };
        let nonnegative = all.iter().all(|s| value(s) >= 0);
        let escher = value(&SubsetOfN::empty(n)?) + value(&full) > 0;
        if nonnegative && escher {
            feasible.push(e0);
        }
    }
    Ok(feasible)
}

/// Single rows, single columns, and `n` isolated cells with `n` even.
pub fn is_exceptional_family(shape: &SkewShape) -> bool {
    let n = shape.size();
    shape.is_single_row() || shape.is_single_column() || (n.is_multiple_of(2) && shape.num_components() == n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(a: &[usize], m: usize) -> Word {
        Word::new(a.to_vec(), m).unwrap()
    }

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn word_descents() {
        assert!(word_cdes_star(&word(&[1, 1, 1, 1], 1), false).unwrap().is_empty());
        assert!(word_cdes_star(&word(&[2, 2, 2], 3), true).unwrap().is_full());
        assert_eq!(word_cdes_star(&word(&[2, 1], 2), false).unwrap().elements(), vec![1]);
        assert_eq!(word_cdes_star(&word(&[1, 2], 2), false).unwrap().elements(), vec![2]);
        assert!(Word::new(vec![0, 1], 2).is_err());
        assert!(Word::new(vec![3], 2).is_err());
    }

    #[test]
    fn words_identity_small() {
        // 11, 12, 21, 22 give ∅, {2}, {1}, ∅.
        let mut lhs = SubsetPoly::zero(2).unwrap();
        for a in [[1, 1], [1, 2], [2, 1], [2, 2]] {
            lhs.add_monomial(word_cdes_star(&word(&a, 2), false).unwrap().mask(), 1);
        }
        assert_eq!(lhs.by_mask(0), 2);
        assert_eq!(lhs.by_mask(1), 1);
        assert_eq!(lhs.by_mask(2), 1);
        assert!(check_words_identity(2, 2).unwrap());
        assert!(check_words_identity(3, 4).unwrap());
        assert!(check_words_identity(2, 6).unwrap());
        assert!(check_words_identity(1, 5).unwrap());
        assert!(matches!(check_words_identity(10, 8), Err(Error::Resource(_))));
    }

    #[test]
    fn layering() {
        assert!(is_layered(&[1, 4, 3, 2], 2));
        assert!(is_layered(&[4, 3, 2, 1], 1));
        assert!(is_colayered(&[4, 3, 2, 1], 4));
        assert!(is_layered(&[1, 2, 3, 4, 5], 5));
        assert_eq!(layered_blocks(&[2, 3, 1]), None);
        let mut even_layered = Vec::new();
        let mut even_colayered = Vec::new();
        for_each_permutation(4, |w| {
            if layered_blocks(w).is_some_and(|k| k % 2 == 0) {
                even_layered.push(w.to_vec());
            }
            if (1..=4).any(|k| k % 2 == 0 && is_colayered(w, k)) {
                even_colayered.push(w.to_vec());
            }
        });
        assert_eq!(
            even_layered,
            vec![vec![1, 2, 3, 4], vec![1, 4, 3, 2], vec![2, 1, 4, 3], vec![3, 2, 1, 4]]
        );
        assert_eq!(
            even_colayered,
            vec![vec![2, 3, 4, 1], vec![3, 4, 1, 2], vec![4, 1, 2, 3], vec![4, 3, 2, 1]]
        );
    }

    #[test]
    fn exceptional_values_on_s4_and_s2() {
        let cases: [(&[usize], &[usize]); 8] = [
            (&[1, 2, 3, 4], &[]),
            (&[1, 4, 3, 2], &[2, 3]),
            (&[2, 1, 4, 3], &[1, 3]),
            (&[3, 2, 1, 4], &[1, 2]),
            (&[4, 3, 2, 1], &[1, 2, 3, 4]),
            (&[4, 1, 2, 3], &[1, 4]),
            (&[3, 4, 1, 2], &[2, 4]),
            (&[2, 3, 4, 1], &[3, 4]),
        ];
        for (w, expected) in cases {
            assert_eq!(cdes_star_sn(w).unwrap().elements(), expected.to_vec(), "{w:?}");
        }
        assert!(cdes_star_sn(&[1, 2]).unwrap().is_empty());
        assert!(cdes_star_sn(&[2, 1]).unwrap().is_full());
        assert!(matches!(cdes_star_sn(&[1, 2, 3]), Err(Error::Domain(_))));
    }

    #[test]
    fn fibre_shift_on_even_symmetric_groups() {
        for n in [2, 4, 6] {
            let report = check_prop_6_4(n).unwrap();
            assert!(report.holds(), "{report:?}");
            // 12...n is fixed by any equivariant map, since cDes* of it is ∅.
            assert!(!report.cellini_equivariant);
        }
        assert!(check_prop_6_4(3).is_err());
        let p = exceptional_sn_rotation(4).unwrap();
        assert_eq!(p[0], 0);
    }

    #[test]
    fn feasibility_examples() {
        assert_eq!(exceptional_feasibility(&shape("5")).unwrap(), vec![1]);
        assert_eq!(exceptional_feasibility(&shape("1^4")).unwrap(), vec![0]);
        assert_eq!(exceptional_feasibility(&shape("1+1+1+1")).unwrap(), vec![1]);
        assert!(exceptional_feasibility(&shape("1+1+1")).unwrap().is_empty());
        assert!(exceptional_feasibility(&shape("3,2,1")).unwrap().is_empty());
        assert!(exceptional_feasibility(&shape("2,2")).unwrap().is_empty());
        // One cell: both ∅ and [1] are possible values.
        assert_eq!(exceptional_feasibility(&shape("1")).unwrap(), vec![0, 1]);
    }

    #[test]
    fn single_row_exceptional_table() {
        let table = exceptional_fiber_table(&shape("4"), 1).unwrap();
        assert_eq!(table.entries().len(), 1);
        assert_eq!(table.get(&SubsetOfN::empty(4).unwrap()), 1);
    }
}
