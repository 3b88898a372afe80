//! Named verification suites over all small cases.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclic::{build_extension, des_fibers, fiber_table_formula, fiber_table_inner, validate_extension};
use crate::error::{domain, Error, Result};
use crate::exceptional::{check_prop_6_4, check_words_identity, exceptional_feasibility, is_exceptional_family};
use crate::gens::{
    check_carlitz, check_cyclic_carlitz, check_lemma_2_5, check_prop_5_2, check_prop_5_3, check_series_identities,
    check_theorem_2, check_theorem_5_3, sn_bivariate, IntPolynomial,
};
use crate::shapes::{Composition, Partition, ShapeClass, SkewShape, SubsetOfN, MAX_N};
use crate::symfunc::{
    affine_ribbon_schur, column_plus_row_schur, hall_inner, hook_mults, monomial_coefficient, power_sum_hooks,
    skew_schur, sum_of_hooks_identity, SchurVector,
};
use crate::tableaux::for_each_cylindric_tableau;

/// Largest `m^n` used for the words identity.
pub const WORDS_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Theorem1,
    Theorem2,
    Prop25,
    Gens,
    Exceptional,
    Gw,
}

impl Suite {
    /// Every concrete suite, in run order.
    pub const CONCRETE: [Suite; 6] = [
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Prop25,
        Suite::Gens,
        Suite::Exceptional,
        Suite::Gw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Prop25 => "prop25",
            Suite::Gens => "gens",
            Suite::Exceptional => "exceptional",
            Suite::Gw => "gw",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::All]
            .into_iter()
            .chain(Suite::CONCRETE)
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown suite {s:?}; expected all|theorem1|theorem2|prop25|gens|exceptional|gw"
                ))
            })
    }
}

/// Result of one named check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub check: &'static str,
    pub cases: usize,
    pub passed: bool,
    /// The first failing input.
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub max_n: usize,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({ "max_n": self.max_n, "passed": self.passed(), "checks": self.checks })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}/{} ({} cases)\n", c.suite, c.check, c.cases));
            if let Some(x) = &c.counterexample {
                out.push_str(&format!("  counterexample: {x}\n"));
            }
        }
        out
    }
}

/// Accumulates cases for one check, keeping the first failure.
struct Tally {
    suite: &'static str,
    check: &'static str,
    cases: usize,
    counterexample: Option<Value>,
}

impl Tally {
    fn new(suite: Suite, check: &'static str) -> Self {
        Tally {
            suite: suite.name(),
            check,
            cases: 0,
            counterexample: None,
        }
    }

    fn case(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            suite: self.suite,
            check: self.check,
            cases: self.cases,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
        }
    }
}

fn shapes_up_to(max_n: usize) -> impl Iterator<Item = SkewShape> {
    (1..=max_n).flat_map(SkewShape::all_of_size)
}

fn extendable(shape: &SkewShape) -> bool {
    shape.classify() != ShapeClass::ConnectedRibbon
}

fn nonempty_subsets(n: usize) -> Result<impl Iterator<Item = SubsetOfN>> {
    Ok(SubsetOfN::all(n)?.filter(|s| !s.is_empty()))
}

/// Runs a suite with every size bound at `max_n`, or at a smaller built-in
/// cap where a check enumerates `S_n`.
pub fn run(suite: Suite, max_n: usize) -> Result<Report> {
    if max_n == 0 || max_n > MAX_N {
        return Err(domain(format!("max_n must lie in 1..={MAX_N}, got {max_n}")));
    }
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::CONCRETE.to_vec()
    } else {
        vec![suite]
    };
    let mut checks = Vec::new();
    for s in suites {
        match s {
            Suite::Theorem1 => theorem1(max_n, &mut checks)?,
            Suite::Theorem2 => theorem2(max_n, &mut checks)?,
            Suite::Prop25 => prop25(max_n, &mut checks)?,
            Suite::Gens => gens(max_n, &mut checks)?,
            Suite::Exceptional => exceptional(max_n, &mut checks)?,
            Suite::Gw => gw(max_n, &mut checks)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(Report { max_n, checks })
}

fn theorem1(max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let s = Suite::Theorem1;
    let mut routes = Tally::new(s, "fibre routes agree");
    let mut axioms = Tally::new(s, "fibre table axioms");
    let mut builds = Tally::new(s, "extension builds and validates");
    let mut refused = Tally::new(s, "connected ribbons not extendable");
    for shape in shapes_up_to(max_n) {
        let name = || json!({ "shape": shape.to_string() });
        if !extendable(&shape) {
            let result = build_extension(&shape);
            refused.case(matches!(result, Err(Error::NotExtendable { .. })), name);
            continue;
        }
        let formula = fiber_table_formula(&shape)?;
        routes.case(formula == fiber_table_inner(&shape)?, name);
        let violations = formula.violations(&des_fibers(&shape)?);
        axioms.case(
            violations.is_empty(),
            || json!({ "shape": shape.to_string(), "violation": violations[0].to_string() }),
        );
        let ext = build_extension(&shape)?;
        let verdict = validate_extension(&ext);
        builds.case(
            verdict.is_ok(),
            || json!({ "shape": shape.to_string(), "violation": verdict.unwrap_err() }),
        );
    }
    out.extend([routes.finish(), axioms.finish(), builds.finish(), refused.finish()]);
    Ok(())
}

fn theorem2(max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let s = Suite::Theorem2;
    let mut perms = Tally::new(s, "permutation cyclic descents decompose");
    for n in 2..=max_n.min(9) {
        perms.case(check_theorem_2(n)?, || json!({ "n": n }));
    }
    let mut strips = Tally::new(s, "horizontal strip cyclic descents decompose");
    for n in 2..=max_n {
        for alpha in Composition::all(n)?.into_iter().filter(|a| a.len() >= 2) {
            strips.case(check_theorem_5_3(&alpha)?, || json!({ "composition": alpha.parts() }));
        }
    }
    out.extend([perms.finish(), strips.finish()]);
    Ok(())
}

fn prop25(max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let s = Suite::Prop25;
    let mut derivative = Tally::new(s, "des and cdes polynomials related by derivative");
    let mut series = Tally::new(s, "principal specialization series");
    for shape in shapes_up_to(max_n).filter(extendable) {
        let name = || json!({ "shape": shape.to_string() });
        derivative.case(check_lemma_2_5(&shape)?, name);
        series.case(check_series_identities(&shape, 2 * shape.size() + 2)?, name);
    }
    out.extend([derivative.finish(), series.finish()]);
    Ok(())
}

/// Coefficients of `x^k/k!` in the bivariate cyclic descent series, as
/// `(u^0 part, u^1 part)` from lowest degree in `t`.
pub const BIVARIATE_COEFFICIENTS: [(usize, [&[i64]; 2]); 2] = [
    (4, [&[0, 3, 8, 1], &[1, 8, 3]]),
    (5, [&[0, 4, 33, 22, 1], &[1, 22, 33, 4]]),
];

fn bivariate_table(parts: [&[i64]; 2]) -> IntPolynomial {
    let vars = ["t", "u"];
    let mut p = IntPolynomial::zero(&vars);
    for (u, coeffs) in parts.iter().enumerate() {
        for (t, &c) in coeffs.iter().enumerate() {
            p = p
                .add(&IntPolynomial::monomial(&vars, vec![t as u32, u as u32], c))
                .expect("small");
        }
    }
    p
}

fn gens(max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let s = Suite::Gens;
    let mut carlitz = Tally::new(s, "Carlitz identity");
    let mut cyclic = Tally::new(s, "cyclic Carlitz identity");
    let mut multivariate = Tally::new(s, "multivariate recurrences");
    let mut bivariate = Tally::new(s, "bivariate recurrences");
    let mut table = Tally::new(s, "bivariate coefficients");
    for n in 1..=max_n.min(9) {
        carlitz.case(check_carlitz(n, 2 * n + 2)?, || json!({ "n": n }));
        if n >= 2 {
            cyclic.case(check_cyclic_carlitz(n, 2 * n + 2)?, || json!({ "n": n }));
            multivariate.case(check_prop_5_2(n)?, || json!({ "n": n }));
            bivariate.case(check_prop_5_3(n)?, || json!({ "n": n }));
        }
    }
    for (n, parts) in BIVARIATE_COEFFICIENTS {
        if n <= max_n {
            table.case(sn_bivariate(n)? == bivariate_table(parts), || json!({ "n": n }));
        }
    }
    out.extend([
        carlitz.finish(),
        cyclic.finish(),
        multivariate.finish(),
        bivariate.finish(),
        table.finish(),
    ]);
    Ok(())
}

fn exceptional(max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let s = Suite::Exceptional;
    let mut words = Tally::new(s, "words distribution");
    for n in 2..=max_n {
        for m in 1.. {
            if (m as u64).checked_pow(n as u32).is_none_or(|c| c > WORDS_LIMIT) {
                break;
            }
            words.case(check_words_identity(m, n)?, || json!({ "m": m, "n": n }));
        }
    }
    let mut sn = Tally::new(s, "exceptional descents on even symmetric groups");
    for n in (2..=max_n.min(8)).step_by(2) {
        let report = check_prop_6_4(n)?;
        sn.case(report.holds(), || json!(report));
    }
    let mut classes = Tally::new(s, "exceptional feasibility classification");
    for shape in shapes_up_to(max_n) {
        let feasible = exceptional_feasibility(&shape)?;
        let expected = if shape.size() == 1 {
            !feasible.is_empty()
        } else {
            is_exceptional_family(&shape)
        };
        classes.case(
            !feasible.is_empty() == expected && feasible.len() <= 2,
            || json!({ "shape": shape.to_string(), "feasible": feasible }),
        );
    }
    out.extend([words.finish(), sn.finish(), classes.finish()]);
    Ok(())
}

fn hook_sign(t: usize, k: usize) -> i64 {
    match k.cmp(&t) {
        std::cmp::Ordering::Less if (t - 1 - k).is_multiple_of(2) => 1,
        std::cmp::Ordering::Less => -1,
        _ => 0,
    }
}

/// The column `(1^k) ⊕ (n-k)`, read as the single column when `k = n`.
fn column_plus_row_or_column(n: usize, k: usize) -> Result<SchurVector> {
    if k == n {
        Ok(SchurVector::schur(&Partition::new(vec![1; n])?))
    } else {
        column_plus_row_schur(n, k)
    }
}

/// Compares the content enumerator of cylindric tableaux with entries in
/// `[n]` against the monomial expansion of `s̃ + (-1)^{|J|} p_n`.
fn cylindric_enumerator_matches(n: usize, set: &SubsetOfN) -> Result<bool> {
    let mut counts: HashMap<Vec<usize>, i64> = HashMap::new();
    for_each_cylindric_tableau(n, set, n, &mut |word| {
        let mut content = vec![0usize; n];
        for &v in word {
            content[v as usize - 1] += 1;
        }
        *counts.entry(content).or_default() += 1;
    })?;
    let sign = if set.len().is_multiple_of(2) { 1 } else { -1 };
    let target = affine_ribbon_schur(n, set)?.add_scaled(&power_sum_hooks(n)?, sign)?;
    // Symmetric, so one coefficient per sorted content suffices on the
    // target side; every content is still compared.
    let mut cache: HashMap<Vec<usize>, i64> = HashMap::new();
    for content in weak_compositions(n, n) {
        let mut key = content.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let expected = match cache.get(&key) {
            Some(&v) => v,
            None => {
                let v = monomial_coefficient(&target, &key)?;
                cache.insert(key, v);
                v
            }
        };
        if counts.get(&content).copied().unwrap_or(0) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sequences of `parts` nonnegative integers summing to `n`.
fn weak_compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Whether `J` is a rotation of `{1, ..., |J|}`.
fn is_rotated_interval(set: &SubsetOfN) -> Result<bool> {
    let n = set.n();
    let interval = SubsetOfN::from_elements(n, 1..=set.len())?;
    Ok(interval.orbit().contains(set))
}

fn gw(max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let s = Suite::Gw;
    let mut nonneg = Tally::new(s, "affine ribbon pairings nonnegative");
    let mut hooks = Tally::new(s, "hook pairings");
    let mut sums = Tally::new(s, "column plus row pairings");
    for n in 1..=max_n {
        let non_hooks: Vec<Partition> = Partition::all(n).into_iter().filter(|p| !p.is_hook()).collect();
        for set in nonempty_subsets(n)? {
            let affine = affine_ribbon_schur(n, &set)?;
            for nu in &non_hooks {
                let value = hall_inner(&affine, &SchurVector::schur(nu))?;
                nonneg.case(value >= 0, || json!({ "J": set, "nu": nu, "value": value }));
            }
            for k in 0..n {
                let value = hall_inner(&affine, &SchurVector::schur(&Partition::hook(n, k)?))?;
                hooks.case(
                    value == hook_sign(set.len(), k),
                    || json!({ "J": set, "k": k, "value": value }),
                );
            }
            for k in 1..=n {
                let value = hall_inner(&affine, &column_plus_row_or_column(n, k)?)?;
                sums.case(
                    value == i64::from(k == set.len()),
                    || json!({ "J": set, "k": k, "value": value }),
                );
            }
        }
    }

    let mut symmetry = Tally::new(s, "fibre sizes symmetric under negation");
    let mut hook_coefficients = Tally::new(s, "hook coefficients of skew Schur functions");
    for shape in shapes_up_to(max_n) {
        let schur = skew_schur(&shape)?;
        let n = shape.size();
        let closed = hook_mults(&shape);
        let ok = (0..n).all(|k| schur.coeff(&Partition::hook(n, k).expect("valid")) == closed[&k]);
        hook_coefficients.case(ok, || json!({ "shape": shape.to_string() }));
        if extendable(&shape) {
            let table = fiber_table_formula(&shape)?;
            let ok = SubsetOfN::all(n)?.all(|j| table.get(&j) == table.get(&j.negate()));
            symmetry.case(ok, || json!({ "shape": shape.to_string() }));
        }
    }

    let mut two_hooks = Tally::new(s, "column plus row is a sum of two hooks");
    for n in 2..=max_n {
        for k in 1..n {
            two_hooks.case(sum_of_hooks_identity(n, k)?, || json!({ "n": n, "k": k }));
        }
    }

    let mut cylindric = Tally::new(s, "cylindric tableau enumerator");
    let mut vanishing = Tally::new(s, "cylindric vanishing in |J| variables");
    for n in 1..=max_n.min(7) {
        for set in nonempty_subsets(n)? {
            cylindric.case(cylindric_enumerator_matches(n, &set)?, || json!({ "n": n, "J": set }));
            let mut count = 0usize;
            for_each_cylindric_tableau(n, &set, set.len(), &mut |_| count += 1)?;
            let rotated = is_rotated_interval(&set)?;
            vanishing.case((count == 0) == rotated, || json!({ "n": n, "J": set, "count": count }));
        }
    }
    out.extend([
        nonneg.finish(),
        hooks.finish(),
        sums.finish(),
        symmetry.finish(),
        hook_coefficients.finish(),
        two_hooks.finish(),
        cylindric.finish(),
        vanishing.finish(),
    ]);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::All].into_iter().chain(Suite::CONCRETE) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        let report = run(Suite::All, 5).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.checks.iter().all(|c| c.cases > 0), "{}", report.to_text());
    }

    #[test]
    fn size_bound_enforced() {
        assert!(run(Suite::Gw, 0).is_err());
        assert!(run(Suite::Gw, 17).is_err());
    }

    #[test]
    fn hook_signs() {
        assert_eq!(hook_sign(3, 0), 1);
        assert_eq!(hook_sign(3, 1), -1);
        assert_eq!(hook_sign(3, 2), 1);
        assert_eq!(hook_sign(3, 3), 0);
    }

    #[test]
    fn rotated_intervals() {
        let s = |e: &[usize]| SubsetOfN::from_elements(5, e.iter().copied()).unwrap();
        assert!(is_rotated_interval(&s(&[5, 1])).unwrap());
        assert!(is_rotated_interval(&s(&[2, 3, 4])).unwrap());
        assert!(!is_rotated_interval(&s(&[1, 3])).unwrap());
    }

    #[test]
    fn report_text_marks_failures() {
        let report = Report {
            max_n: 3,
            checks: vec![CheckOutcome {
                suite: "gw",
                check: "x",
                cases: 2,
                passed: false,
                counterexample: Some(json!({ "n": 3 })),
            }],
        };
        assert!(!report.passed());
        assert!(report.to_text().contains("FAIL gw/x (2 cases)"));
        assert!(report.to_text().contains("counterexample: {\"n\":3}"));
    }
}
