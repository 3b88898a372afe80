//! Standard and semistandard tableaux on skew shapes.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{self, domain, Error, Result};
use crate::shapes::{ccomp_of_subset, SkewShape, SubsetOfN};

/// Default cap on the number of tableaux a single enumeration may produce.
pub const DEFAULT_SYT_LIMIT: usize = 10_000_000;

/// A standard filling of a skew shape by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Arc<SkewShape>,
    /// Entries in row-major order (top row first), i.e. the reading word.
    entries: Vec<u8>,
    /// `row_of[v - 1]` is the row holding `v`.
    row_of: Vec<u8>,
}

#[derive(Serialize)]
struct TableauJson<T> {
    inner: Vec<usize>,
    rows: Vec<Vec<T>>,
}

fn split_rows<T: Copy>(shape: &SkewShape, entries: &[T]) -> Vec<Vec<T>> {
    let mut rows = Vec::with_capacity(shape.num_rows());
    let mut pos = 0;
    for r in 0..shape.num_rows() {
        let len = shape.row_len(r);
        rows.push(entries[pos..pos + len].to_vec());
        pos += len;
    }
    rows
}

impl StandardTableau {
    /// Builds a tableau from its rows (top row first) and checks standardness.
    pub fn from_rows(shape: Arc<SkewShape>, rows: &[Vec<u8>]) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(domain(format!(
                "expected {} rows, got {}",
                shape.num_rows(),
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(domain(format!("row {r} should have {} entries", shape.row_len(r))));
            }
        }
        let entries: Vec<u8> = rows.concat();
        let n = shape.size();
        let mut row_of = vec![u8::MAX; n];
        for (r, row) in rows.iter().enumerate() {
            for &v in row {
                let v = v as usize;
                if v == 0 || v > n || row_of[v - 1] != u8::MAX {
                    return Err(domain(format!("entries must use each of 1..={n} once")));
                }
                row_of[v - 1] = r as u8;
            }
        }
        let t = StandardTableau { shape, entries, row_of };
        if !t.is_standard() {
            return Err(domain("rows and columns must increase"));
        }
        Ok(t)
    }

    /// Builds a tableau from the row of each value `1..=n`.
    fn from_row_of(shape: Arc<SkewShape>, row_of: Vec<u8>) -> Self {
        let mut rows: Vec<Vec<u8>> = vec![Vec::new(); shape.num_rows()];
        for (i, &r) in row_of.iter().enumerate() {
            rows[r as usize].push(i as u8 + 1);
        }
        StandardTableau {
            shape,
            entries: rows.concat(),
            row_of,
        }
    }

    fn is_standard(&self) -> bool {
        let rows = self.rows();
        for r in 0..rows.len() {
            if rows[r].windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if r == 0 {
                continue;
            }
            let (s, _) = self.shape.row_span(r);
            let (s_up, e_up) = self.shape.row_span(r - 1);
            for (i, &v) in rows[r].iter().enumerate() {
                let c = s + i;
                if c >= s_up && c < e_up && rows[r - 1][c - s_up] >= v {
                    return false;
                }
            }
        }
        true
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn shape_arc(&self) -> &Arc<SkewShape> {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entries in row-major order.
    pub fn reading_word(&self) -> &[u8] {
        &self.entries
    }

    /// Rows from the top, each left to right.
    pub fn rows(&self) -> Vec<Vec<u8>> {
        split_rows(&self.shape, &self.entries)
    }

    /// Row index (top row is 0) of the value `v`.
    pub fn row_of(&self, v: usize) -> usize {
        self.row_of[v - 1] as usize
    }

    /// `{i : i+1 lies in a lower row than i}`.
    pub fn des_set(&self) -> SubsetOfN {
        let n = self.size();
        let mask = (1..n)
            .filter(|&i| self.row_of(i + 1) > self.row_of(i))
            .fold(0u32, |m, i| m | 1 << (i - 1));
        SubsetOfN::new(n, mask).expect("size checked at enumeration")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json = TableauJson {
            inner: (0..self.shape.num_rows()).map(|r| self.shape.row_span(r).0).collect(),
            rows: self.rows(),
        };
        serde_json::to_value(json).expect("plain data")
    }
}

/// Every SYT of `shape`, sorted by reading word, failing once more than
/// [`DEFAULT_SYT_LIMIT`] would be produced.
pub fn enumerate_syt(shape: &SkewShape) -> Result<Vec<StandardTableau>> {
    enumerate_syt_limited(shape, DEFAULT_SYT_LIMIT)
}

pub fn enumerate_syt_limited(shape: &SkewShape, limit: usize) -> Result<Vec<StandardTableau>> {
    let n = shape.size();
    if n > 255 {
        return Err(Error::Resource(format!("{n} cells is too many to enumerate")));
    }
    let shape = Arc::new(shape.clone());
    let rows = shape.num_rows();
    let spans: Vec<(usize, usize)> = (0..rows).map(|r| shape.row_span(r)).collect();
    let mut filled = vec![0usize; rows];
    let mut row_of = Vec::with_capacity(n);
    let mut out = Vec::new();

    fn go(
        spans: &[(usize, usize)],
        filled: &mut [usize],
        row_of: &mut Vec<u8>,
        n: usize,
        limit: usize,
        shape: &Arc<SkewShape>,
        out: &mut Vec<StandardTableau>,
    ) -> Result<()> {
        if row_of.len() == n {
            if out.len() >= limit {
                return Err(Error::Resource(format!("more than {limit} standard tableaux")));
            }
            out.push(StandardTableau::from_row_of(shape.clone(), row_of.clone()));
            return Ok(());
        }
        for r in 0..spans.len() {
            let (s, e) = spans[r];
            let col = s + filled[r];
            if col >= e {
                continue;
            }
            if r > 0 && col >= spans[r - 1].0 + filled[r - 1] {
                continue;
            }
            filled[r] += 1;
            row_of.push(r as u8);
            go(spans, filled, row_of, n, limit, shape, out)?;
            row_of.pop();
            filled[r] -= 1;
        }
        Ok(())
    }

    go(&spans, &mut filled, &mut row_of, n, limit, &shape, &mut out)?;
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    Ok(out)
}

/// Row lengths from southwest to northeast, if `shape` is a disjoint union
/// of at least two single rows.
fn strip_rows(shape: &SkewShape) -> Result<Vec<usize>> {
    match shape.horizontal_strip_rows() {
        Some(rows) if rows.len() >= 2 => Ok(rows.parts().to_vec()),
        _ => Err(domain(format!("{shape} is not a disjoint union of at least two rows"))),
    }
}

/// Cyclic descents of a tableau on a horizontal strip: `i` with `i+1` in a
/// lower row, where `n+1` means `1`.
pub fn strip_cdes(t: &StandardTableau) -> Result<SubsetOfN> {
    strip_rows(t.shape())?;
    let n = t.size();
    let mut set = t.des_set();
    if t.row_of(1) > t.row_of(n) {
        set = set.with(n);
    }
    Ok(set)
}

/// Adds one to every entry modulo `n` and re-sorts each row.
pub fn strip_p(t: &StandardTableau) -> Result<StandardTableau> {
    strip_rows(t.shape())?;
    let n = t.size();
    let mut row_of = vec![0u8; n];
    for v in 1..=n {
        let image = v % n + 1;
        row_of[image - 1] = t.row_of(v) as u8;
    }
    Ok(StandardTableau::from_row_of(t.shape_arc().clone(), row_of))
}

/// The strip tableau of `w`: entries `w^{-1}(1), ..., w^{-1}(n)` read from
/// southwest to northeast on `(1)^⊕n`.
pub fn permutation_to_strip(w: &[usize]) -> Result<StandardTableau> {
    let n = w.len();
    check_permutation(w)?;
    let shape = Arc::new(SkewShape::horizontal_strip(&crate::Composition::new(vec![1; n])?)?);
    // The cell holding w^{-1}(k) is k-th from the southwest, i.e. in row n-k;
    // so value i sits in row n - w(i).
    let row_of = w.iter().map(|&wi| (n - wi) as u8).collect();
    Ok(StandardTableau::from_row_of(shape, row_of))
}

pub(crate) fn check_permutation(w: &[usize]) -> Result<()> {
    let n = w.len();
    let mut seen = vec![false; n + 1];
    for &x in w {
        if x == 0 || x > n || seen[x] {
            return Err(domain(format!("{w:?} is not a permutation of 1..={n}")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Jeu-de-taquin promotion on a rectangle with at least two rows and columns:
/// remove `n`, slide the hole to the top-left corner, fill it with `0` and add
/// one to every entry.
pub fn promotion(t: &StandardTableau) -> Result<StandardTableau> {
    let (a, b) = match t.shape().rectangle() {
        Some((a, b)) if a >= 2 && b >= 2 => (a, b),
        _ => {
            return Err(domain(format!(
                "promotion needs an a×b rectangle with a,b >= 2, got {}",
                t.shape()
            )))
        }
    };
    let mut grid: Vec<u8> = t.reading_word().to_vec();
    let (mut r, mut c) = (a - 1, b - 1);
    while r > 0 || c > 0 {
        let left = (c > 0).then(|| grid[r * b + c - 1]);
        let up = (r > 0).then(|| grid[(r - 1) * b + c]);
        let (nr, nc) = match (left, up) {
            (Some(l), Some(u)) if l > u => (r, c - 1),
            (Some(_), Some(_)) | (None, Some(_)) => (r - 1, c),
            (Some(_), None) => (r, c - 1),
            (None, None) => unreachable!(),
        };
        grid[r * b + c] = grid[nr * b + nc];
        r = nr;
        c = nc;
    }
    grid[0] = 0;
    let rows: Vec<Vec<u8>> = grid.chunks(b).map(|row| row.iter().map(|v| v + 1).collect()).collect();
    StandardTableau::from_rows(t.shape_arc().clone(), &rows)
}

/// The cyclic descent set forced on a rectangular tableau by equivariance
/// under promotion: `n` is a cyclic descent iff `1` is a descent of `p(T)`.
pub fn rectangle_cdes(t: &StandardTableau) -> Result<SubsetOfN> {
    let promoted = promotion(t)?;
    let des = t.des_set();
    Ok(if promoted.des_set().contains(1) {
        des.with(t.size())
    } else {
        des
    })
}

/// A column-strict filling of a skew shape by positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemistandardTableau {
    shape: Arc<SkewShape>,
    entries: Vec<u32>,
}

impl SemistandardTableau {
    pub fn from_rows(shape: Arc<SkewShape>, rows: &[Vec<u32>]) -> Result<Self> {
        if rows.len() != shape.num_rows() || rows.iter().enumerate().any(|(r, row)| row.len() != shape.row_len(r)) {
            return Err(domain(format!("rows do not fit {shape}")));
        }
        let t = SemistandardTableau {
            shape,
            entries: rows.concat(),
        };
        let rows = t.rows();
        for r in 0..rows.len() {
            if rows[r].contains(&0) || rows[r].windows(2).any(|w| w[0] > w[1]) {
                return Err(domain("rows must weakly increase over positive entries"));
            }
            if r > 0 {
                let (s, _) = t.shape.row_span(r);
                let (s_up, e_up) = t.shape.row_span(r - 1);
                for (i, &v) in rows[r].iter().enumerate() {
                    let col = s + i;
                    if col >= s_up && col < e_up && rows[r - 1][col - s_up] >= v {
                        return Err(domain("columns must strictly increase"));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entries in row-major order.
    pub fn reading_word(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        split_rows(&self.shape, &self.entries)
    }

    /// `content[i]` is the number of entries equal to `i + 1`, up to `max_entry`.
    pub fn content(&self, max_entry: usize) -> Vec<usize> {
        let mut content = vec![0; max_entry];
        for &v in &self.entries {
            content[v as usize - 1] += 1;
        }
        content
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json = TableauJson {
            inner: (0..self.shape.num_rows()).map(|r| self.shape.row_span(r).0).collect(),
            rows: self.rows(),
        };
        serde_json::to_value(json).expect("plain data")
    }
}

/// Number of standard tableaux of `shape`, without listing them.
pub fn count_syt(shape: &SkewShape) -> Result<i64> {
    count_ssyt(shape, shape.size(), Some(&vec![1; shape.size()]))
}

/// Number of SSYT of `shape` with entries in `1..=max_entry`, optionally with
/// prescribed content (`content[i]` copies of `i + 1`; its length overrides
/// `max_entry`).
///
/// Entries are added one value at a time, each value filling a horizontal
/// strip; the state is the number of filled cells in each row.
pub fn count_ssyt(shape: &SkewShape, max_entry: usize, content: Option<&[usize]>) -> Result<i64> {
    let steps = content.map_or(max_entry, |c| c.len());
    if let Some(c) = content {
        if c.iter().sum::<usize>() != shape.size() {
            return Ok(0);
        }
    }
    let spans: Vec<(usize, usize)> = (0..shape.num_rows()).map(|r| shape.row_span(r)).collect();
    let mut memo: HashMap<(usize, Vec<u8>), i64> = HashMap::new();
    let start = vec![0u8; spans.len()];
    count_from(&spans, content, steps, 0, start, &mut memo)
}

fn count_from(
    spans: &[(usize, usize)],
    content: Option<&[usize]>,
    steps: usize,
    step: usize,
    state: Vec<u8>,
    memo: &mut HashMap<(usize, Vec<u8>), i64>,
) -> Result<i64> {
    let complete = state.iter().zip(spans).all(|(&f, &(s, e))| f as usize == e - s);
    if complete {
        // Remaining values must all be unused.
        let rest_empty = content.is_none_or(|c| c[step..].iter().all(|&x| x == 0));
        return Ok(rest_empty as i64);
    }
    if step == steps {
        return Ok(0);
    }
    let key = (step, state);
    if let Some(&v) = memo.get(&key) {
        return Ok(v);
    }
    let state = key.1.clone();
    let bounds = strip_bounds(spans, &state);
    let want = content.map(|c| c[step]);
    let mut total = 0i64;
    let mut next = state.clone();
    enumerate_strips(&state, &bounds, 0, 0, want, &mut next, &mut |next| {
        let sub = count_from(spans, content, steps, step + 1, next.to_vec(), memo)?;
        total = error::add(total, sub)?;
        Ok(())
    })?;
    memo.insert(key, total);
    Ok(total)
}

/// `[count_ssyt(shape, m, None) for m in 0..=max_entry]` in one forward pass.
pub fn ssyt_counts(shape: &SkewShape, max_entry: usize) -> Result<Vec<i64>> {
    let spans: Vec<(usize, usize)> = (0..shape.num_rows()).map(|r| shape.row_span(r)).collect();
    let full: Vec<u8> = spans.iter().map(|&(s, e)| (e - s) as u8).collect();
    let mut layer: HashMap<Vec<u8>, i64> = HashMap::from([(vec![0u8; spans.len()], 1)]);
    let mut counts = vec![layer.get(&full).copied().unwrap_or(0)];
    for _ in 0..max_entry {
        let mut next_layer: HashMap<Vec<u8>, i64> = HashMap::new();
        for (state, &ways) in &layer {
            let bounds = strip_bounds(&spans, state);
            let mut next = state.clone();
            enumerate_strips(state, &bounds, 0, 0, None, &mut next, &mut |next| {
                let slot = next_layer.entry(next.to_vec()).or_default();
                *slot = error::add(*slot, ways)?;
                Ok(())
            })?;
        }
        layer = next_layer;
        counts.push(layer.get(&full).copied().unwrap_or(0));
    }
    Ok(counts)
}

/// Upper bound on each row's fill after adding one horizontal strip.
fn strip_bounds(spans: &[(usize, usize)], state: &[u8]) -> Vec<usize> {
    (0..spans.len())
        .map(|r| {
            let (s, e) = spans[r];
            let mut cap = e - s;
            if r > 0 {
                let (s_up, _) = spans[r - 1];
                let limit = (s_up + state[r - 1] as usize).saturating_sub(s);
                cap = cap.min(limit.max(state[r] as usize));
            }
            cap
        })
        .collect()
}

fn enumerate_strips(
    state: &[u8],
    bounds: &[usize],
    r: usize,
    added: usize,
    want: Option<usize>,
    next: &mut Vec<u8>,
    f: &mut dyn FnMut(&[u8]) -> Result<()>,
) -> Result<()> {
    if r == state.len() {
        if want.is_none_or(|w| w == added) {
            f(next)?;
        }
        return Ok(());
    }
    for fill in state[r] as usize..=bounds[r] {
        let extra = fill - state[r] as usize;
        if want.is_some_and(|w| added + extra > w) {
            break;
        }
        next[r] = fill as u8;
        enumerate_strips(state, bounds, r + 1, added + extra, want, next, f)?;
    }
    next[r] = state[r];
    Ok(())
}

/// Calls `f` on the reading word of every SSYT of `shape` with entries in
/// `1..=max_entry`, in lexicographic order of reading words.
pub fn for_each_ssyt(shape: &SkewShape, max_entry: usize, f: &mut dyn FnMut(&[u32])) {
    let cells = shape.cells();
    // For each cell: index of its left neighbour and of the cell above, if any.
    let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let left: Vec<Option<usize>> = cells
        .iter()
        .map(|&(r, c)| c.checked_sub(1).and_then(|c| index.get(&(r, c)).copied()))
        .collect();
    let up: Vec<Option<usize>> = cells
        .iter()
        .map(|&(r, c)| r.checked_sub(1).and_then(|r| index.get(&(r, c)).copied()))
        .collect();
    let mut word = vec![0u32; cells.len()];

    fn go(
        i: usize,
        word: &mut [u32],
        left: &[Option<usize>],
        up: &[Option<usize>],
        max_entry: u32,
        f: &mut dyn FnMut(&[u32]),
    ) {
        if i == word.len() {
            f(word);
            return;
        }
        let lo = left[i].map_or(1, |l| word[l]).max(up[i].map_or(1, |u| word[u] + 1));
        for v in lo..=max_entry {
            word[i] = v;
            go(i + 1, word, left, up, max_entry, f);
        }
    }

    go(0, &mut word, &left, &up, max_entry as u32, f);
}

/// The finite ribbon cut from the cylindric shape of `J`: row lengths, bottom
/// row first, are the parts of the cyclic composition of `J`.
pub fn cylindric_ribbon(n: usize, set: &SubsetOfN) -> Result<SkewShape> {
    let cc = ccomp_of_subset(n, set)?;
    SkewShape::ribbon(&cc.as_composition())
}

/// Visits every SSYT of the ribbon of `J` with entries at most `max_entry`
/// whose southwest corner entry is smaller than its northeast corner entry.
pub fn for_each_cylindric_tableau(
    n: usize,
    set: &SubsetOfN,
    max_entry: usize,
    f: &mut dyn FnMut(&[u32]),
) -> Result<()> {
    let ribbon = cylindric_ribbon(n, set)?;
    let cells = ribbon.cells();
    let ne = cells
        .iter()
        .position(|&(r, _)| r == 0)
        .map(|first| first + ribbon.row_len(0) - 1)
        .ok_or_else(|| Error::Internal("ribbon without a top row".into()))?;
    let sw = cells.len() - ribbon.row_len(ribbon.num_rows() - 1);
    for_each_ssyt(&ribbon, max_entry, &mut |word| {
        if word[sw] < word[ne] {
            f(word);
        }
    });
    Ok(())
}

pub fn enumerate_cylindric_tableaux(n: usize, set: &SubsetOfN, max_entry: usize) -> Result<Vec<SemistandardTableau>> {
    let shape = Arc::new(cylindric_ribbon(n, set)?);
    let mut out = Vec::new();
    for_each_cylindric_tableau(n, set, max_entry, &mut |word| {
        out.push(SemistandardTableau {
            shape: shape.clone(),
            entries: word.to_vec(),
        });
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Composition;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn set(n: usize, e: &[usize]) -> SubsetOfN {
        SubsetOfN::from_elements(n, e.iter().copied()).unwrap()
    }

    fn binom(n: i64, k: i64) -> i64 {
        if k < 0 || k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Brute force: all bijections cells -> 1..n that increase along rows and columns.
    fn brute_syt_count(s: &SkewShape) -> usize {
        let cells = s.cells();
        let n = cells.len();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut count = 0;
        permute(&mut perm, 0, &mut |p| {
            let ok = cells.iter().enumerate().all(|(i, &(r, c))| {
                cells
                    .iter()
                    .enumerate()
                    .all(|(j, &(r2, c2))| !((r2 == r && c2 == c + 1) || (r2 == r + 1 && c2 == c)) || p[i] < p[j])
            });
            count += ok as usize;
        });
        count
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn ssyt_counts_match_single_counts() {
        for s in ["3,2,1", "3,3/1", "1+2+1", "2,2", "1^3"] {
            let s = shape(s);
            let all = ssyt_counts(&s, 6).unwrap();
            for (m, &c) in all.iter().enumerate() {
                assert_eq!(c, count_ssyt(&s, m, None).unwrap(), "{s} m={m}");
            }
        }
        assert_eq!(ssyt_counts(&shape("2"), 3).unwrap(), vec![0, 1, 3, 6]);
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(&shape("3,2,1")).unwrap().len(), 16);
        assert_eq!(enumerate_syt(&shape("6")).unwrap().len(), 1);
        assert_eq!(enumerate_syt(&shape("2,2")).unwrap().len(), 2);
        for s in ["3,2/1", "3,3/1", "2,2,1", "1+2+1", "4,2,1/2"] {
            let s = shape(s);
            assert_eq!(enumerate_syt(&s).unwrap().len(), brute_syt_count(&s), "{s}");
            assert_eq!(count_syt(&s).unwrap() as usize, brute_syt_count(&s), "{s}");
        }
        assert_eq!(count_syt(&shape("4,4,4,4")).unwrap(), 24024);
    }

    #[test]
    fn syt_order_is_reading_word_order() {
        let all = enumerate_syt(&shape("3,2,1")).unwrap();
        assert!(all.windows(2).all(|w| w[0].reading_word() < w[1].reading_word()));
        assert_eq!(all[0].rows(), vec![vec![1, 2, 3], vec![4, 5], vec![6]]);
    }

    #[test]
    fn syt_limit() {
        let err = enumerate_syt_limited(&shape("3,2,1"), 10).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn descent_sets() {
        let s = Arc::new(shape("4,3,2/1,1"));
        let t = StandardTableau::from_rows(s, &[vec![1, 2, 7], vec![3, 5], vec![4, 6]]).unwrap();
        assert_eq!(t.des_set(), set(7, &[2, 3, 5]));
        let row = &enumerate_syt(&shape("5")).unwrap()[0];
        assert!(row.des_set().is_empty());
        let col = &enumerate_syt(&shape("1^5")).unwrap()[0];
        assert_eq!(col.des_set(), set(5, &[1, 2, 3, 4]));
    }

    #[test]
    fn from_rows_validates() {
        let s = Arc::new(shape("2,2"));
        assert!(StandardTableau::from_rows(s.clone(), &[vec![1, 3], vec![2, 4]]).is_ok());
        assert!(StandardTableau::from_rows(s.clone(), &[vec![1, 4], vec![2, 3]]).is_err());
        assert!(StandardTableau::from_rows(s, &[vec![1, 2], vec![2, 4]]).is_err());
    }

    #[test]
    fn strip_example() {
        let comp = Composition::new(vec![3, 4, 2]).unwrap();
        let s = Arc::new(SkewShape::horizontal_strip(&comp).unwrap());
        let t = StandardTableau::from_rows(s.clone(), &[vec![3, 9], vec![1, 5, 7, 8], vec![2, 4, 6]]).unwrap();
        assert_eq!(strip_cdes(&t).unwrap(), set(9, &[1, 3, 5, 9]));
        let p = strip_p(&t).unwrap();
        assert_eq!(p.rows(), vec![vec![1, 4], vec![2, 6, 8, 9], vec![3, 5, 7]]);
        assert_eq!(strip_cdes(&p).unwrap(), set(9, &[1, 2, 4, 6]));
    }

    #[test]
    fn strip_rejects_single_row_and_non_strips() {
        let row = &enumerate_syt(&shape("4")).unwrap()[0];
        assert!(matches!(strip_cdes(row), Err(Error::Domain(_))));
        let square = &enumerate_syt(&shape("2,2")).unwrap()[0];
        assert!(matches!(strip_p(square), Err(Error::Domain(_))));
    }

    #[test]
    fn permutation_embedding() {
        let t = permutation_to_strip(&[5, 3, 1, 4, 2]).unwrap();
        assert_eq!(t.rows(), vec![vec![1], vec![4], vec![2], vec![5], vec![3]]);
        assert!(permutation_to_strip(&[1, 1]).is_err());
    }

    #[test]
    fn strip_p_has_order_n() {
        for comp in [vec![1, 1, 1, 1, 1], vec![2, 3], vec![3, 1, 2]] {
            let comp = Composition::new(comp).unwrap();
            let s = SkewShape::horizontal_strip(&comp).unwrap();
            let n = s.size();
            for t in enumerate_syt(&s).unwrap() {
                let mut cur = t.clone();
                for _ in 0..n {
                    let next = strip_p(&cur).unwrap();
                    assert_eq!(strip_cdes(&next).unwrap(), strip_cdes(&cur).unwrap().rotate(1));
                    cur = next;
                }
                assert_eq!(cur, t);
            }
        }
    }

    #[test]
    fn promotion_on_two_by_two() {
        let all = enumerate_syt(&shape("2,2")).unwrap();
        // Direct simulation: [[1,2],[3,4]] -> remove 4, slide 3 right? no: hole at (1,1),
        // left 3 > up 2 so 3 moves right, then hole (1,0), up 1 moves down.
        // Result [[0,2],[1,3]] + 1 = [[1,3],[2,4]].
        assert_eq!(promotion(&all[0]).unwrap(), all[1]);
        assert_eq!(promotion(&all[1]).unwrap(), all[0]);
    }

    #[test]
    fn promotion_order_and_rejections() {
        for s in ["2,2", "3,3", "2,2,2", "4,4"] {
            let s = shape(s);
            let n = s.size();
            for t in enumerate_syt(&s).unwrap() {
                let mut cur = t.clone();
                for _ in 0..n {
                    cur = promotion(&cur).unwrap();
                }
                assert_eq!(cur, t);
            }
        }
        let row = &enumerate_syt(&shape("7")).unwrap()[0];
        assert!(matches!(promotion(row), Err(Error::Domain(_))));
        let hook = &enumerate_syt(&shape("2,1")).unwrap()[0];
        assert!(matches!(promotion(hook), Err(Error::Domain(_))));
    }

    #[test]
    fn ssyt_count_examples() {
        assert_eq!(count_ssyt(&shape("3,2,1"), 6, Some(&[1; 6])).unwrap(), 16);
        for n in 1..=5 {
            for m in 1..=5 {
                let expected = binom((n + m - 1) as i64, n as i64);
                assert_eq!(count_ssyt(&shape(&n.to_string()), m, None).unwrap(), expected);
            }
        }
        assert_eq!(count_ssyt(&shape("2,1"), 2, None).unwrap(), 2);
        assert_eq!(count_ssyt(&shape("2,1"), 3, Some(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(count_ssyt(&shape("2,1"), 3, Some(&[2, 0, 1])).unwrap(), 1);
        assert_eq!(count_ssyt(&shape("1^3"), 2, None).unwrap(), 0);
    }

    #[test]
    fn ssyt_count_matches_backtracking() {
        for s in ["3,2,1", "4,3,2/1,1", "2+1+2", "3,3/2", "2,2,2/1"] {
            let s = shape(s);
            for m in 1..=4 {
                let mut count = 0i64;
                let mut by_content: HashMap<Vec<usize>, i64> = HashMap::new();
                for_each_ssyt(&s, m, &mut |w| {
                    count += 1;
                    let mut c = vec![0; m];
                    for &v in w {
                        c[v as usize - 1] += 1;
                    }
                    *by_content.entry(c).or_default() += 1;
                });
                assert_eq!(count_ssyt(&s, m, None).unwrap(), count, "{s} m={m}");
                for (c, k) in by_content {
                    assert_eq!(count_ssyt(&s, m, Some(&c)).unwrap(), k, "{s} {c:?}");
                }
            }
        }
    }

    #[test]
    fn cylindric_example_is_listed() {
        let j = set(9, &[1, 4, 5, 8]);
        let ribbon = cylindric_ribbon(9, &j).unwrap();
        // Rows top-down are the reverse of the bottom-up listing.
        let rows: Vec<Vec<u32>> = vec![vec![3, 7], vec![2, 2, 5], vec![3], vec![1, 4, 4]];
        let example = SemistandardTableau::from_rows(Arc::new(ribbon), &rows).unwrap();
        let all = enumerate_cylindric_tableaux(9, &j, 7).unwrap();
        assert!(all.contains(&example));
        assert!(all.iter().all(|t| {
            let w = t.reading_word();
            w[w.len() - 3] < w[1]
        }));
    }

    #[test]
    fn cylindric_empty_cases() {
        for n in 1..=5 {
            let full = SubsetOfN::full(n).unwrap();
            for m in 1..=n {
                assert!(enumerate_cylindric_tableaux(n, &full, m).unwrap().is_empty());
            }
            for t in 1..=n {
                let prefix = SubsetOfN::from_elements(n, 1..=t).unwrap();
                assert!(enumerate_cylindric_tableaux(n, &prefix, t).unwrap().is_empty());
            }
        }
        assert!(enumerate_cylindric_tableaux(4, &set(4, &[]), 3).is_err());
    }
}
