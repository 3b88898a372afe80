//! Brute-force oracles used by the integration tests. Nothing here calls into
//! the library beyond reading cells off a shape.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Cell = (usize, usize);

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Bit `i - 1` set for each cyclic descent `i` of `w`, with `w_{n+1} = w_1`.
pub fn cyclic_descent_mask(w: &[usize]) -> u32 {
    let n = w.len();
    (0..n).filter(|&i| w[i] > w[(i + 1) % n]).fold(0, |m, i| m | 1 << i)
}

pub fn descent_mask(w: &[usize]) -> u32 {
    (0..w.len() - 1).filter(|&i| w[i] > w[i + 1]).fold(0, |m, i| m | 1 << i)
}

/// Edge-connected components of a set of cells.
pub fn components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &set {
        if !seen.insert(start) {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some((r, c)) = stack.pop() {
            comp.push((r, c));
            let mut near = vec![(r + 1, c), (r, c + 1)];
            if r > 0 {
                near.push((r - 1, c));
            }
            if c > 0 {
                near.push((r, c - 1));
            }
            for x in near {
                if set.contains(&x) && seen.insert(x) {
                    stack.push(x);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn has_square(cells: &[Cell]) -> bool {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    set.iter()
        .any(|&(r, c)| set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1)))
}

pub fn is_connected_ribbon(cells: &[Cell]) -> bool {
    components(cells).len() == 1 && !has_square(cells)
}

pub fn height(cells: &[Cell]) -> usize {
    cells.iter().map(|c| c.0).collect::<BTreeSet<_>>().len()
}

/// Translates to the origin and deletes empty rows and columns.
pub fn compact(cells: &[Cell]) -> Vec<Cell> {
    let rows: Vec<usize> = cells.iter().map(|c| c.0).collect::<BTreeSet<_>>().into_iter().collect();
    let cols: Vec<usize> = cells.iter().map(|c| c.1).collect::<BTreeSet<_>>().into_iter().collect();
    let mut out: Vec<Cell> = cells
        .iter()
        .map(|&(r, c)| (rows.binary_search(&r).unwrap(), cols.binary_search(&c).unwrap()))
        .collect();
    out.sort_unstable();
    out
}

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
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

/// Partitions fitting in a `rows × cols` box, including the empty one.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if prefix.len() == rows {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            go(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

pub fn skew_cells(outer: &[usize], inner: &[usize]) -> Option<Vec<Cell>> {
    let mut cells = Vec::new();
    for (r, &o) in outer.iter().enumerate() {
        let i = inner.get(r).copied().unwrap_or(0);
        if i > o {
            return None;
        }
        cells.extend((i..o).map(|c| (r, c)));
    }
    if inner.len() > outer.len() && inner[outer.len()..].iter().any(|&x| x > 0) {
        return None;
    }
    Some(cells)
}

/// Fillings of `cells` by `1..=max` weakly increasing along rows, strictly
/// down columns, in row-major order of `cells`.
pub fn semistandard_fillings(cells: &[Cell], max: usize, content: Option<&[usize]>) -> Vec<Vec<usize>> {
    let mut order = cells.to_vec();
    order.sort_unstable();
    let index: BTreeMap<Cell, usize> = order.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut out = Vec::new();
    let mut fill = vec![0usize; order.len()];
    let mut used = vec![0usize; max + 1];
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        order: &[Cell],
        index: &BTreeMap<Cell, usize>,
        max: usize,
        content: Option<&[usize]>,
        fill: &mut Vec<usize>,
        used: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == order.len() {
            if content.is_none_or(|c| (1..=max).all(|v| used[v] == c.get(v - 1).copied().unwrap_or(0))) {
                out.push(fill.clone());
            }
            return;
        }
        let (r, c) = order[i];
        let mut lo = 1;
        if c > 0 {
            if let Some(&j) = index.get(&(r, c - 1)) {
                lo = lo.max(fill[j]);
            }
        }
        if r > 0 {
            if let Some(&j) = index.get(&(r - 1, c)) {
                lo = lo.max(fill[j] + 1);
            }
        }
        for v in lo..=max {
            if content.is_some_and(|cnt| used[v] >= cnt.get(v - 1).copied().unwrap_or(0)) {
                continue;
            }
            fill[i] = v;
            used[v] += 1;
            go(i + 1, order, index, max, content, fill, used, out);
            used[v] -= 1;
        }
    }
    go(0, &order, &index, max, content, &mut fill, &mut used, &mut out);
    out
}

/// Littlewood-Richardson expansion `s_shape = Σ c_ν s_ν`: `c_ν` counts the
/// SSYT of content `ν` whose reading word right to left, top to bottom, is a
/// lattice word.
pub fn lr_expansion(cells: &[Cell]) -> BTreeMap<Vec<usize>, i64> {
    let n = cells.len();
    let mut order = cells.to_vec();
    order.sort_unstable();
    // Reverse reading order: rows top to bottom, each right to left.
    let mut reading: Vec<usize> = (0..order.len()).collect();
    reading.sort_by_key(|&i| (order[i].0, std::cmp::Reverse(order[i].1)));
    let mut out = BTreeMap::new();
    for nu in partitions(n) {
        let count = semistandard_fillings(cells, nu.len(), Some(&nu))
            .into_iter()
            .filter(|fill| {
                let mut seen = vec![0usize; nu.len() + 2];
                reading.iter().all(|&i| {
                    let v = fill[i];
                    seen[v] += 1;
                    v == 1 || seen[v] <= seen[v - 1]
                })
            })
            .count();
        if count > 0 {
            out.insert(nu, count as i64);
        }
    }
    out
}

/// Standard fillings of `cells`, in row-major order of `cells`.
pub fn standard_fillings(cells: &[Cell]) -> Vec<Vec<usize>> {
    let n = cells.len();
    semistandard_fillings(cells, n, Some(&vec![1; n]))
}

/// Descent set of a standard filling: `i` with `i + 1` in a lower row.
pub fn filling_descent_mask(cells: &[Cell], fill: &[usize]) -> u32 {
    let mut order = cells.to_vec();
    order.sort_unstable();
    let mut row_of = vec![0usize; fill.len() + 1];
    for (i, &v) in fill.iter().enumerate() {
        row_of[v] = order[i].0;
    }
    (1..fill.len())
        .filter(|&i| row_of[i + 1] > row_of[i])
        .fold(0, |m, i| m | 1 << (i - 1))
}

/// Promotion on a rectangle given as rows: delete `1`, slide the hole to
/// the bottom-right by pulling the smaller of its right and lower
/// neighbours, subtract one and put `n` in the hole.
pub fn promote_forward(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let a = rows.len();
    let b = rows[0].len();
    let mut g = rows.to_vec();
    let (mut r, mut c) = (0, 0);
    loop {
        let right = (c + 1 < b).then(|| g[r][c + 1]);
        let down = (r + 1 < a).then(|| g[r + 1][c]);
        let (nr, nc) = match (right, down) {
            (None, None) => break,
            (Some(x), Some(y)) if x < y => (r, c + 1),
            (Some(_), None) => (r, c + 1),
            _ => (r + 1, c),
        };
        g[r][c] = g[nr][nc];
        r = nr;
        c = nc;
    }
    for row in &mut g {
        for v in row.iter_mut() {
            *v -= 1;
        }
    }
    g[a - 1][b - 1] = a * b;
    g
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
