//! Descent generating functions: univariate, bivariate and multivariate.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cyclic::{des_fibers, fiber_table_formula, FiberTable};
use crate::error::{self, domain, Error, Result};
use crate::shapes::{full_mask, rotate_mask, Composition, Partition, ShapeClass, SkewShape, SubsetOfN, MAX_N};
use crate::symfunc::{binom, kostka};
use crate::tableaux::{check_permutation, count_ssyt, enumerate_syt, ssyt_counts, strip_cdes};

/// A polynomial with integer coefficients in named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, i64>,
}

#[derive(Serialize)]
struct MonomialJson {
    monomial: BTreeMap<String, u32>,
    coefficient: i64,
}

impl IntPolynomial {
    pub fn zero(vars: &[&str]) -> Self {
        IntPolynomial {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    /// `Σ_k coeffs[k] t^k` in the single variable `var`.
    pub fn univariate(var: &str, coeffs: &[i64]) -> Self {
        let mut p = IntPolynomial::zero(&[var]);
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(vec![k as u32], c);
        }
        p
    }

    /// The monomial `c * x^exps`.
    pub fn monomial(vars: &[&str], exps: Vec<u32>, c: i64) -> Self {
        let mut p = IntPolynomial::zero(vars);
        p.add_term(exps, c);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    fn add_term(&mut self, exps: Vec<u32>, c: i64) {
        debug_assert_eq!(exps.len(), self.vars.len());
        let value = self.coefficient(&exps) + c;
        self.set_term(exps, value);
    }

    fn set_term(&mut self, exps: Vec<u32>, c: i64) {
        if c == 0 {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, c);
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_vars(&self, other: &IntPolynomial) -> Result<()> {
        if self.vars != other.vars {
            return Err(domain(format!("variables {:?} and {:?} differ", self.vars, other.vars)));
        }
        Ok(())
    }

    pub fn add(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (k, &c) in &other.terms {
            let sum = error::add(out.coefficient(k), c)?;
            out.set_term(k.clone(), sum);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<IntPolynomial> {
        let mut out = IntPolynomial {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), error::mul(c, k)?);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        self.add(&other.scale(-1)?)
    }

    pub fn mul(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        self.check_vars(other)?;
        let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let slot = acc.entry(e).or_insert(0);
                *slot = error::add(*slot, error::mul(ca, cb)?)?;
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(IntPolynomial {
            vars: self.vars.clone(),
            terms: acc,
        })
    }

    fn var_index(&self, var: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| domain(format!("no variable {var}")))
    }

    /// Partial derivative in `var`.
    pub fn derivative(&self, var: &str) -> Result<IntPolynomial> {
        let i = self.var_index(var)?;
        let mut out = IntPolynomial {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, &c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, error::mul(c, e[i] as i64)?);
            }
        }
        Ok(out)
    }

    /// Drops every term of degree above `max_degree` in `var`.
    pub fn truncate(&self, var: &str, max_degree: u32) -> Result<IntPolynomial> {
        let i = self.var_index(var)?;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] <= max_degree)
            .map(|(e, &c)| (e.clone(), c))
            .collect();
        Ok(IntPolynomial {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Coefficients of a univariate polynomial, constant term first.
    pub fn univariate_coeffs(&self) -> Vec<i64> {
        let deg = self.terms.keys().map(|e| e[0]).max().map_or(0, |d| d as usize + 1);
        let mut out = vec![0; deg];
        for (e, &c) in &self.terms {
            out[e[0] as usize] = c;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<MonomialJson> = self
            .terms
            .iter()
            .map(|(e, &c)| MonomialJson {
                monomial: self
                    .vars
                    .iter()
                    .zip(e)
                    .filter(|(_, &x)| x > 0)
                    .map(|(v, &x)| (v.clone(), x))
                    .collect(),
                coefficient: c,
            })
            .collect();
        serde_json::to_value(terms).expect("plain data")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, &c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (c.abs(), mono.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", mono.join("*"))?,
                (a, false) => write!(f, "{a}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// A polynomial in `t_1, ..., t_n` with squarefree support, indexed by the
/// subset `S` of the monomial `t^S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetPoly {
    n: usize,
    coeffs: Vec<i64>,
}

impl SubsetPoly {
    pub fn zero(n: usize) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::Resource(format!("{n} variables exceed {MAX_N}")));
        }
        Ok(SubsetPoly {
            n,
            coeffs: vec![0; 1 << n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, set: &SubsetOfN) -> i64 {
        self.coeffs[set.mask() as usize]
    }

    pub fn by_mask(&self, mask: u32) -> i64 {
        self.coeffs[mask as usize]
    }

    pub fn add_monomial(&mut self, mask: u32, c: i64) {
        self.coeffs[mask as usize] += c;
    }

    pub fn from_fiber_table(table: &FiberTable) -> SubsetPoly {
        let n = table.n();
        SubsetPoly {
            n,
            coeffs: (0..1u32 << n).map(|m| table.by_mask(m)).collect(),
        }
    }

    /// Same polynomial viewed in `n` variables (`n` at least the current count).
    pub fn embed(&self, n: usize) -> Result<SubsetPoly> {
        let mut out = SubsetPoly::zero(n)?;
        for (mask, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[mask] += c;
        }
        Ok(out)
    }

    pub fn add(&self, other: &SubsetPoly) -> Result<SubsetPoly> {
        if self.n != other.n {
            return Err(domain("subset polynomials in different numbers of variables"));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| error::add(a, b))
            .collect::<Result<_>>()?;
        Ok(SubsetPoly { n: self.n, coeffs })
    }

    pub fn scale(&self, k: i64) -> Result<SubsetPoly> {
        let coeffs = self.coeffs.iter().map(|&a| error::mul(a, k)).collect::<Result<_>>()?;
        Ok(SubsetPoly { n: self.n, coeffs })
    }

    /// `c^k`: every subscript shifted by `k` modulo `n`.
    pub fn rotate(&self, k: usize) -> SubsetPoly {
        let mut out = SubsetPoly {
            n: self.n,
            coeffs: vec![0; self.coeffs.len()],
        };
        for (mask, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[rotate_mask(mask as u32, self.n, k % self.n.max(1)) as usize] += c;
        }
        out
    }

    /// Multiplication by `t_i`, which must not divide any monomial.
    pub fn times_var(&self, i: usize) -> Result<SubsetPoly> {
        let bit = 1u32 << (i - 1);
        let mut out = SubsetPoly {
            n: self.n,
            coeffs: vec![0; self.coeffs.len()],
        };
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                if mask as u32 & bit != 0 {
                    return Err(domain(format!("t_{i} would appear squared")));
                }
                out.coeffs[mask | bit as usize] += c;
            }
        }
        Ok(out)
    }

    /// `t_i := value` for `value` zero or one; the variable stays in place.
    pub fn specialize(&self, i: usize, value: u8) -> SubsetPoly {
        let bit = 1usize << (i - 1);
        let mut out = SubsetPoly {
            n: self.n,
            coeffs: vec![0; self.coeffs.len()],
        };
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if mask & bit == 0 {
                out.coeffs[mask] += c;
            } else if value == 1 {
                out.coeffs[mask & !bit] += c;
            }
        }
        out
    }

    /// `t^{[n]} f(t^{-1})`: every monomial replaced by its complement.
    pub fn reflect(&self) -> SubsetPoly {
        let full = full_mask(self.n) as usize;
        let mut out = SubsetPoly {
            n: self.n,
            coeffs: vec![0; self.coeffs.len()],
        };
        for (mask, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[full & !mask] += c;
        }
        out
    }

    /// Sets `t_1 = ... = t_n = t`.
    pub fn to_univariate(&self) -> IntPolynomial {
        let mut coeffs = vec![0i64; self.n + 1];
        for (mask, &c) in self.coeffs.iter().enumerate() {
            coeffs[mask.count_ones() as usize] += c;
        }
        IntPolynomial::univariate("t", &coeffs)
    }

    /// Sets `t_1 = ... = t_{n-1} = t` and `t_n = u`.
    pub fn to_bivariate(&self) -> IntPolynomial {
        let mut out = IntPolynomial::zero(&["t", "u"]);
        let last = 1usize << (self.n - 1);
        for (mask, &c) in self.coeffs.iter().enumerate() {
            let u = (mask & last != 0) as u32;
            let t = (mask & !last).count_ones();
            out.add_term(vec![t, u], c);
        }
        out
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        let names: Vec<String> = (1..=self.n).map(|i| format!("t{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut out = IntPolynomial::zero(&refs);
        for (mask, &c) in self.coeffs.iter().enumerate() {
            let exps = (0..self.n).map(|i| (mask >> i & 1) as u32).collect();
            out.add_term(exps, c);
        }
        out
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

/// `Σ_T t^{des(T)}` over `SYT(shape)`.
pub fn des_poly(shape: &SkewShape) -> Result<IntPolynomial> {
    let des = des_fibers(shape)?;
    let n = shape.size();
    let mut coeffs = vec![0i64; n];
    for mask in 0..1u32 << (n - 1) {
        coeffs[mask.count_ones() as usize] += des.by_mask(mask);
    }
    Ok(IntPolynomial::univariate("t", &coeffs))
}

/// `Σ_T t^{cdes(T)}`, from the fibre table; refuses connected ribbons.
pub fn cdes_poly(shape: &SkewShape) -> Result<IntPolynomial> {
    if shape.classify() == ShapeClass::ConnectedRibbon {
        return Err(Error::NotExtendable {
            shape: shape.to_string(),
        });
    }
    Ok(SubsetPoly::from_fiber_table(&fiber_table_formula(shape)?).to_univariate())
}

fn one_minus_t_pow(k: usize) -> IntPolynomial {
    let coeffs: Vec<i64> = (0..=k as i64)
        .map(|i| {
            if i % 2 == 0 {
                binom(k as i64, i)
            } else {
                -binom(k as i64, i)
            }
        })
        .collect();
    IntPolynomial::univariate("t", &coeffs)
}

/// `n T^des = n T^cdes + (1 - t) d/dt T^cdes`.
pub fn check_lemma_2_5(shape: &SkewShape) -> Result<bool> {
    let n = shape.size() as i64;
    let des = des_poly(shape)?;
    let cdes = cdes_poly(shape)?;
    let rhs = cdes.scale(n)?.add(&one_minus_t_pow(1).mul(&cdes.derivative("t")?)?)?;
    Ok(des.scale(n)? == rhs)
}

/// `Σ_{m=lo}^{hi} s_{shape}(1^m) t^{m-lo}`.
fn specialization_series(shape: &SkewShape, lo: usize, hi: usize) -> Result<IntPolynomial> {
    let counts = ssyt_counts(shape, hi)?;
    Ok(IntPolynomial::univariate("t", &counts[lo..]))
}

/// Checks, through `t^M`,
/// `T^des = (1-t)^{n+1} Σ_{m≥0} s(1^{m+1}) t^m` and the derivative form
/// `d/dt [T^cdes / (1-t)^n] = n Σ_{m≥1} s(1^m) t^{m-1}`.
pub fn check_series_identities(shape: &SkewShape, truncation: usize) -> Result<bool> {
    let n = shape.size();
    if truncation < 2 * n + 2 {
        return Err(domain(format!("truncation {truncation} is below 2n+2 = {}", 2 * n + 2)));
    }
    let m = truncation as u32;
    let series = specialization_series(shape, 1, truncation + 1)?;
    let des_side = one_minus_t_pow(n + 1).mul(&series)?.truncate("t", m)?;
    if des_side != des_poly(shape)? {
        return Ok(false);
    }
    // 1/(1-t)^n = Σ_k binom(n-1+k, k) t^k.
    let inverse: Vec<i64> = (0..=truncation as i64).map(|k| binom(n as i64 - 1 + k, k)).collect();
    let quotient = cdes_poly(shape)?
        .mul(&IntPolynomial::univariate("t", &inverse))?
        .truncate("t", m)?;
    let lhs = quotient.derivative("t")?.truncate("t", m - 1)?;
    let rhs = specialization_series(shape, 1, truncation)?
        .scale(n as i64)?
        .truncate("t", m - 1)?;
    Ok(lhs == rhs)
}

/// Carlitz: `S_n^des = (1-t)^{n+1} Σ (m+1)^n t^m` through `t^M`, with
/// `(m+1)^n` read off the dot strip.
pub fn check_carlitz(n: usize, truncation: usize) -> Result<bool> {
    let strip = dot_strip(n)?;
    for m in 0..=truncation + 1 {
        if count_ssyt(&strip, m, None)? != (m as i64).pow(n as u32) {
            return Ok(false);
        }
    }
    let powers: Vec<i64> = (0..=truncation as i64).map(|m| (m + 1).pow(n as u32)).collect();
    let rhs = one_minus_t_pow(n + 1)
        .mul(&IntPolynomial::univariate("t", &powers))?
        .truncate("t", truncation as u32)?;
    Ok(rhs == eulerian(n)? && rhs == des_poly(&strip)?)
}

/// Cyclic Carlitz: `S_n^cdes = n (1-t)^n Σ_{m≥1} m^{n-1} t^m = n t S_{n-1}^des`.
pub fn check_cyclic_carlitz(n: usize, truncation: usize) -> Result<bool> {
    if n < 2 {
        return Err(domain("cyclic Carlitz needs n >= 2"));
    }
    let cdes = SubsetPoly::from_fiber_table(&fiber_table_formula(&dot_strip(n)?)?).to_univariate();
    let shifted = IntPolynomial::monomial(&["t"], vec![1], n as i64).mul(&eulerian(n - 1)?)?;
    let powers: Vec<i64> = (0..=truncation as i64)
        .map(|m| if m == 0 { 0 } else { m.pow(n as u32 - 1) })
        .collect();
    let series = one_minus_t_pow(n)
        .mul(&IntPolynomial::univariate("t", &powers))?
        .scale(n as i64)?
        .truncate("t", truncation as u32)?;
    Ok(cdes == shifted && series == shifted && cdes == sn_multivariate(n)?.1.to_univariate())
}

/// `(1)^⊕n`.
pub fn dot_strip(n: usize) -> Result<SkewShape> {
    SkewShape::horizontal_strip(&Composition::new(vec![1; n])?)
}

/// Eulerian polynomial `Σ_w t^{des(w)}` over `S_n`, by enumeration.
pub fn eulerian(n: usize) -> Result<IntPolynomial> {
    Ok(sn_multivariate(n)?.0.to_univariate())
}

/// Visits every permutation of `1..=n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut w: Vec<usize> = (1..=n).collect();
    loop {
        f(&w);
        // Next permutation.
        let Some(i) = (1..n).rev().find(|&i| w[i - 1] < w[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| w[j] > w[i - 1]).expect("exists");
        w.swap(i - 1, j);
        w[i..].reverse();
    }
}

/// `{i : w_i > w_{i+1}}` over `[n-1]`.
pub fn perm_des(w: &[usize]) -> u32 {
    (0..w.len().saturating_sub(1))
        .filter(|&i| w[i] > w[i + 1])
        .fold(0, |m, i| m | 1 << i)
}

/// Cellini's cyclic descent set: `i ∈ [n]` with `w_i > w_{i+1}`, `w_{n+1} = w_1`.
pub fn cellini_cdes(w: &[usize]) -> Result<SubsetOfN> {
    check_permutation(w)?;
    let n = w.len();
    let mut mask = perm_des(w);
    if n > 0 && w[n - 1] > w[0] {
        mask |= 1 << (n - 1);
    }
    SubsetOfN::new(n, mask)
}

/// Cellini's rotation `[w_n, w_1, ..., w_{n-1}]`.
pub fn cellini_p(w: &[usize]) -> Vec<usize> {
    let mut out = w.to_vec();
    out.rotate_right(1);
    out
}

/// `(S_n^Des, S_n^cDes)` by enumeration of `S_n`, both in `n` variables.
pub fn sn_multivariate(n: usize) -> Result<(SubsetPoly, SubsetPoly)> {
    if n == 0 || n > 10 {
        return Err(domain(format!(
            "multivariate enumeration supports 1 <= n <= 10, got {n}"
        )));
    }
    let mut des = SubsetPoly::zero(n)?;
    let mut cdes = SubsetPoly::zero(n)?;
    for_each_permutation(n, |w| {
        let d = perm_des(w);
        des.add_monomial(d, 1);
        let c = if w[n - 1] > w[0] { d | 1 << (n - 1) } else { d };
        cdes.add_monomial(c, 1);
    });
    Ok((des, cdes))
}

fn check_prop_range(n: usize) -> Result<()> {
    if !(2..=9).contains(&n) {
        return Err(domain(format!("identity checks need 2 <= n <= 9, got {n}")));
    }
    Ok(())
}

/// `[S_n^cDes]_{t_n=1} = S_n^Des`.
pub fn check_specialization(n: usize) -> Result<bool> {
    let (des, cdes) = sn_multivariate(n)?;
    Ok(cdes.specialize(n, 1) == des)
}

/// `S_n^Des = [Σ_i t_i c^i S_{n-1}^Des]_{t_n=1}`.
pub fn check_recurrence(n: usize) -> Result<bool> {
    check_prop_range(n)?;
    let (des, _) = sn_multivariate(n)?;
    let smaller = sn_multivariate(n - 1)?.0.embed(n)?;
    let mut sum = SubsetPoly::zero(n)?;
    for i in 1..=n {
        sum = sum.add(&smaller.rotate(i).times_var(i)?)?;
    }
    Ok(sum.specialize(n, 1) == des)
}

/// Both multivariate identities relating `S_n^cDes` and `S_{n-1}^Des`, plus
/// the specialization `t_n = 1`.
pub fn check_prop_5_2(n: usize) -> Result<bool> {
    check_prop_range(n)?;
    let (_, cdes) = sn_multivariate(n)?;
    let smaller = sn_multivariate(n - 1)?.0.embed(n)?;
    let mut rotated_sum = SubsetPoly::zero(n)?;
    for i in 1..=n {
        rotated_sum = rotated_sum.add(&smaller.times_var(n)?.rotate(i))?;
    }
    if rotated_sum != cdes {
        return Ok(false);
    }
    let g = cdes.specialize(n, 0);
    let mut g_alt = SubsetPoly::zero(n)?;
    for i in 1..n {
        g_alt = g_alt.add(&smaller.rotate(i).specialize(n, 0).times_var(i)?)?;
    }
    if g != g_alt || g.add(&g.reflect())? != cdes {
        return Ok(false);
    }
    Ok(check_specialization(n)? && check_recurrence(n)?)
}

/// `S_n^cdes(t,u) = t^{n-1} f(1/t) + u f(t) = (n t + (u - t) d/dt t) S_{n-1}^des(t)`
/// with `f = d/dt (t S_{n-1}^des)`.
pub fn check_prop_5_3(n: usize) -> Result<bool> {
    check_prop_range(n)?;
    let bivariate = sn_bivariate(n)?;
    let vars = ["t", "u"];
    let prev = lift_t(&eulerian(n - 1)?);
    let t = IntPolynomial::monomial(&vars, vec![1, 0], 1);
    let u = IntPolynomial::monomial(&vars, vec![0, 1], 1);
    let t_prev = t.mul(&prev)?;
    let f = t_prev.derivative("t")?;
    // t^{n-1} f(1/t): f has degree at most n-2 in t.
    let mut reversed = IntPolynomial::zero(&vars);
    for (e, c) in f.terms() {
        reversed = reversed.add(&IntPolynomial::monomial(&vars, vec![n as u32 - 1 - e[0], e[1]], c))?;
    }
    let first = reversed.add(&u.mul(&f)?)?;
    let second = t.scale(n as i64)?.mul(&prev)?.add(&u.sub(&t)?.mul(&f)?)?;
    Ok(bivariate == first && bivariate == second)
}

/// `S_n^cdes(t,u) = Σ_w t^{des(w)} u^{cdes(w) - des(w)}`.
pub fn sn_bivariate(n: usize) -> Result<IntPolynomial> {
    Ok(sn_multivariate(n)?.1.to_bivariate())
}

/// A univariate polynomial in `t` viewed in `(t, u)`.
fn lift_t(p: &IntPolynomial) -> IntPolynomial {
    let mut out = IntPolynomial::zero(&["t", "u"]);
    for (e, c) in p.terms() {
        out.add_term(vec![e[0], 0], c);
    }
    out
}

/// The right-hand side shared by both Schur-positivity decompositions: the
/// non-hook part weighted by `weight(λ)` plus hook-pair shapes weighted by
/// `binom(parts - 2, k - 1)`.
fn decomposition_rhs(n: usize, parts: usize, weight: impl Fn(&Partition) -> Result<i64>) -> Result<SubsetPoly> {
    let mut rhs = SubsetPoly::zero(n)?;
    for lambda in Partition::all(n) {
        if lambda.is_hook() {
            continue;
        }
        let w = weight(&lambda)?;
        if w != 0 {
            let table = fiber_table_formula(&SkewShape::straight(lambda)?)?;
            rhs = rhs.add(&SubsetPoly::from_fiber_table(&table).scale(w)?)?;
        }
    }
    for k in 1..parts {
        let c = binom(parts as i64 - 2, k as i64 - 1);
        if c != 0 {
            let table = fiber_table_formula(&SkewShape::column_plus_row(n, k)?)?;
            rhs = rhs.add(&SubsetPoly::from_fiber_table(&table).scale(c)?)?;
        }
    }
    Ok(rhs)
}

/// `S_n^cDes` against the non-hook and hook-pair fibre tables.
pub fn check_theorem_2(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(domain("needs n >= 2"));
    }
    let (_, lhs) = sn_multivariate(n)?;
    let rhs = decomposition_rhs(n, n, |lambda| {
        Ok(enumerate_syt(&SkewShape::straight(lambda.clone())?)?.len() as i64)
    })?;
    Ok(lhs == rhs)
}

/// Strip cyclic descents on `α^⊕` against Kostka-weighted non-hook fibre
/// tables plus hook-pair fibre tables.
pub fn check_theorem_5_3(alpha: &Composition) -> Result<bool> {
    if alpha.len() < 2 {
        return Err(domain(format!("{alpha} needs at least two parts")));
    }
    let n = alpha.size();
    let strip = SkewShape::horizontal_strip(alpha)?;
    let mut lhs = SubsetPoly::zero(n)?;
    for t in enumerate_syt(&strip)? {
        lhs.add_monomial(strip_cdes(&t)?.mask(), 1);
    }
    let sorted = alpha.sorted();
    let rhs = decomposition_rhs(n, alpha.len(), |lambda| kostka(lambda, sorted.parts()))?;
    Ok(lhs == rhs)
}
