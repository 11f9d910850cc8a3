//! Cross-checks of every closed form against the brute-force oracle and
//! against the published classifications.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::closed::{spectrum_complement, spectrum_line, spectrum_unitary};
use crate::energy::{
    cycle_count, energy_of, line_energy, moment_line, moment_unitary, HyperCase, Target,
};
use crate::error::{Error, Result};
use crate::json_int;
use crate::oracle::{
    cayley_graph, complete_graph, count_cycles, exact_moments, integral_spectrum,
    realize_ring_with, transform_with, Graph, Limits, Transform,
};
use crate::ramanujan::{
    classify_complement, classify_unitary, classify_zn, ramanujan_check, GraphKind, Verdict,
};
use crate::ring::{arith, enumerate_specs, from_modulus, RingSpec};
use crate::spectrum::Spectrum;

/// Number of failures echoed by [`Report`]'s `Display`.
pub const SHOWN_FAILURES: usize = 10;

/// Moduli `n` whose complement graph is Ramanujan without `n` being a prime power.
pub const SPORADIC_COMPLEMENT_MODULI: [u64; 9] = [6, 10, 12, 15, 18, 21, 24, 30, 35];

/// Outcome of one verification suite.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checked: usize,
    /// Cases the oracle could not build within its size guards.
    pub skipped: usize,
    pub failures: Vec<String>,
    /// Failures caused by an internal inconsistency rather than a mismatch.
    pub internal_errors: usize,
    /// Disagreements with a published characterization that the direct
    /// computation overrides.
    pub findings: Vec<String>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            ..Report::default()
        }
    }

    fn fail(&mut self, message: String) {
        self.failures.push(message);
    }

    fn check<T: PartialEq + fmt::Display>(
        &mut self,
        what: impl FnOnce() -> String,
        expected: &T,
        got: &T,
    ) {
        if expected != got {
            self.fail(format!("{}: closed form {expected}, oracle {got}", what()));
        }
    }

    /// Findings count as failures when `strict_paper` is set.
    pub fn passed(&self, strict_paper: bool) -> bool {
        self.failures.is_empty() && (!strict_paper || self.findings.is_empty())
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.internal_errors += other.internal_errors;
        self.failures.extend(
            other
                .failures
                .into_iter()
                .map(|f| format!("[{}] {f}", other.suite)),
        );
        self.findings.extend(
            other
                .findings
                .into_iter()
                .map(|f| format!("[{}] {f}", other.suite)),
        );
    }

    pub fn summary(&self) -> String {
        let mut line = format!(
            "{}: checked {} specs, {} mismatches",
            self.suite,
            self.checked,
            self.failures.len()
        );
        if self.skipped > 0 {
            line += &format!(", {} skipped", self.skipped);
        }
        if !self.findings.is_empty() {
            line += &format!(", {} findings", self.findings.len());
        }
        line
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for failure in self.failures.iter().take(SHOWN_FAILURES) {
            writeln!(f, "  mismatch: {failure}")?;
        }
        if self.failures.len() > SHOWN_FAILURES {
            writeln!(f, "  ... {} more", self.failures.len() - SHOWN_FAILURES)?;
        }
        for finding in &self.findings {
            writeln!(f, "  finding: {finding}")?;
        }
        Ok(())
    }
}

/// Which graph of a ring the oracle should build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    Unitary,
    Complement,
    Line,
}

impl Which {
    pub const ALL: [Which; 3] = [Which::Unitary, Which::Complement, Which::Line];

    fn name(self) -> &'static str {
        match self {
            Which::Unitary => "unitary",
            Which::Complement => "complement",
            Which::Line => "line",
        }
    }
}

/// Builds oracle graphs and spectra once and reuses them across suites.
#[derive(Debug, Default)]
pub struct Oracle {
    limits: Limits,
    graphs: HashMap<(String, Which), Rc<Graph>>,
    spectra: HashMap<(String, Which), Spectrum>,
}

impl Oracle {
    pub fn new(limits: Limits) -> Self {
        Oracle {
            limits,
            ..Oracle::default()
        }
    }

    pub fn graph(&mut self, spec: &RingSpec, which: Which) -> Result<Rc<Graph>> {
        let key = (spec.to_string(), which);
        if let Some(g) = self.graphs.get(&key) {
            return Ok(Rc::clone(g));
        }
        let g = match which {
            Which::Unitary => cayley_graph(&realize_ring_with(spec, &self.limits)?),
            Which::Complement => transform_with(
                &*self.graph(spec, Which::Unitary)?,
                Transform::Complement,
                &self.limits,
            )?,
            Which::Line => transform_with(
                &*self.graph(spec, Which::Unitary)?,
                Transform::Line,
                &self.limits,
            )?,
        };
        let g = Rc::new(g);
        self.graphs.insert(key, Rc::clone(&g));
        Ok(g)
    }

    pub fn spectrum(&mut self, spec: &RingSpec, which: Which) -> Result<Spectrum> {
        let key = (spec.to_string(), which);
        if let Some(s) = self.spectra.get(&key) {
            return Ok(s.clone());
        }
        let s = integral_spectrum(&*self.graph(spec, which)?)?;
        self.spectra.insert(key, s.clone());
        Ok(s)
    }

    /// Drops cached graphs and spectra.
    pub fn clear(&mut self) {
        self.graphs.clear();
        self.spectra.clear();
    }
}

fn closed_spectrum(spec: &RingSpec, which: Which) -> Result<Spectrum> {
    match which {
        Which::Unitary => spectrum_unitary(spec),
        Which::Complement => spectrum_complement(spec),
        Which::Line => spectrum_line(spec),
    }
}

/// Runs `body`, turning oracle size refusals into skips and any other error
/// into a failure.
fn guarded(report: &mut Report, spec: &RingSpec, body: impl FnOnce(&mut Report) -> Result<()>) {
    match body(report) {
        Ok(()) => {}
        Err(Error::TooLarge(_)) => report.skipped += 1,
        Err(e @ (Error::Internal(_) | Error::NotIntegral(_))) => {
            report.internal_errors += 1;
            report.fail(format!("{spec}: {e}"));
        }
        Err(e) => report.fail(format!("{spec}: {e}")),
    }
}

/// Closed-form spectra against oracle eigenvalues.
pub fn spectra(oracle: &mut Oracle, max_order: u64) -> Report {
    let mut report = Report::new("spectra");
    for spec in enumerate_specs(max_order, true) {
        report.checked += 1;
        for which in Which::ALL {
            guarded(&mut report, &spec, |report| {
                let closed = closed_spectrum(&spec, which)?;
                let brute = oracle.spectrum(&spec, which)?;
                report.check(
                    || format!("{spec} {} spectrum", which.name()),
                    &closed,
                    &brute,
                );
                Ok(())
            });
        }
    }
    report
}

/// Closed-form spectral moments `k = 0..=kmax` of `G_R` and its line graph
/// against closed-walk counts.
pub fn moments(oracle: &mut Oracle, max_order: u64, kmax: u32) -> Report {
    let mut report = Report::new("moments");
    for spec in enumerate_specs(max_order, true) {
        report.checked += 1;
        for (which, closed) in [
            (
                Which::Unitary,
                moment_unitary as fn(&RingSpec, u32) -> BigInt,
            ),
            (Which::Line, moment_line),
        ] {
            guarded(&mut report, &spec, |report| {
                let walks = exact_moments(&*oracle.graph(&spec, which)?, kmax);
                for (k, walk) in walks.iter().enumerate() {
                    let k = k as u32;
                    report.check(
                        || format!("{spec} {} s_{k}", which.name()),
                        &closed(&spec, k),
                        walk,
                    );
                }
                Ok(())
            });
        }
    }
    report
}

fn same_verdict(theorem: &Verdict, direct: &Verdict) -> bool {
    theorem.ramanujan == direct.ramanujan
        && theorem.vacuous == direct.vacuous
        && theorem.degree == direct.degree
}

fn compare_verdicts(
    report: &mut Report,
    label: impl FnOnce() -> String,
    theorem: &Verdict,
    direct: &Verdict,
) {
    if !same_verdict(theorem, direct) {
        report.fail(format!(
            "{}: theorem says {theorem}, definition says {direct}",
            label()
        ));
    }
}

/// Structural classification against the definition applied to closed-form
/// spectra, and for `|R| ≤ oracle_max_order` to oracle spectra.
pub fn ramanujan(oracle: &mut Oracle, max_order: u64, oracle_max_order: u64) -> Report {
    let mut report = Report::new("ramanujan");
    for spec in enumerate_specs(max_order, true) {
        report.checked += 1;
        guarded(&mut report, &spec, |report| {
            let n = spec.order();
            let r = spec.unit_count();
            let cases = [
                (Which::Unitary, classify_unitary(&spec), r.clone()),
                (Which::Complement, classify_complement(&spec), n - 1 - r),
            ];
            for (which, theorem, degree) in &cases {
                let direct = ramanujan_check(&closed_spectrum(&spec, *which)?, degree)?;
                compare_verdicts(
                    report,
                    || format!("{spec} {}", which.name()),
                    theorem,
                    &direct,
                );
            }
            if *n <= BigInt::from(oracle_max_order) {
                for (which, theorem, degree) in &cases {
                    let direct = ramanujan_check(&oracle.spectrum(&spec, *which)?, degree)?;
                    compare_verdicts(
                        report,
                        || format!("{spec} {} (oracle)", which.name()),
                        theorem,
                        &direct,
                    );
                }
            }
            Ok(())
        });
    }
    report
}

/// Moduli `2 ≤ n ≤ max_n` whose complement graph is Ramanujan, by the
/// general ring classification.
pub fn complement_ramanujan_moduli(max_n: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        if classify_complement(&from_modulus(n)?).ramanujan {
            out.push(n);
        }
    }
    Ok(out)
}

/// The factorization-only classification of `Z/nZ` against the general ring
/// classification, for `2 ≤ n ≤ max_n`.
pub fn zn(max_n: u64) -> Report {
    let mut report = Report::new("zn");
    for n in 2..=max_n {
        report.checked += 1;
        let outcome = (|| -> Result<()> {
            let spec = from_modulus(n)?;
            for (kind, general) in [
                (GraphKind::Unitary, classify_unitary(&spec)),
                (GraphKind::Complement, classify_complement(&spec)),
            ] {
                let specific = classify_zn(n, kind)?;
                if !same_verdict(&specific, &general) {
                    report.fail(format!(
                        "Z/{n} {kind:?}: factorization gives {specific}, ring gives {general}"
                    ));
                }
            }
            let prime_power = arith::prime_power(n).is_some();
            let listed = prime_power || SPORADIC_COMPLEMENT_MODULI.contains(&n);
            if classify_complement(&spec).ramanujan != listed {
                report.fail(format!(
                    "Z/{n}: complement Ramanujan set disagrees with the prime-power list"
                ));
            }
            Ok(())
        })();
        if let Err(e) = outcome {
            report.fail(format!("Z/{n}: {e}"));
        }
    }
    for (n, expected) in [(12, true), (140, true), (105, false)] {
        if n <= max_n
            && classify_zn(n, GraphKind::Unitary).map(|v| v.ramanujan).ok() != Some(expected)
        {
            report.fail(format!("Z/{n}: expected Ramanujan = {expected}"));
        }
    }
    report
}

/// One row of the hyperenergetic comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperRow {
    pub ring: String,
    #[serde(with = "json_int")]
    pub energy: BigInt,
    #[serde(with = "json_int")]
    pub line_order: BigInt,
    pub direct: bool,
    pub corollary: bool,
    pub corollary_case: Option<HyperCase>,
    /// Energy of the constructed line graph, when the oracle ran.
    #[serde(with = "json_int::option")]
    pub oracle_energy: Option<BigInt>,
}

impl fmt::Display for HyperRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: E(L) = {}, 2(n-1) = {}, direct {}, characterization {}",
            self.ring,
            self.energy,
            (&self.line_order - 1) * 2,
            self.direct,
            self.corollary
        )?;
        if let Some(case) = self.corollary_case {
            write!(f, " (case {case:?})")?;
        }
        match &self.oracle_energy {
            Some(e) => write!(f, ", oracle energy {e}"),
            None => write!(f, ", oracle not run"),
        }
    }
}

/// Hyperenergetic predicates for every strict spec up to `max_order`, with
/// oracle energies for `|R| ≤ oracle_max_order`. Returns every row and a
/// report whose findings are the rows where the predicates disagree.
pub fn hyper_audit(
    oracle: &mut Oracle,
    max_order: u64,
    oracle_max_order: u64,
) -> (Vec<HyperRow>, Report) {
    let mut report = Report::new("hyperenergetic");
    let mut rows = Vec::new();
    for spec in enumerate_specs(max_order, true) {
        report.checked += 1;
        let energy = line_energy(&spec);
        let mut row = HyperRow {
            ring: spec.to_string(),
            energy: energy.energy.clone(),
            line_order: energy.line_order.clone(),
            direct: energy.hyperenergetic_direct,
            corollary: energy.hyperenergetic_corollary,
            corollary_case: energy.corollary_case,
            oracle_energy: None,
        };
        if *spec.order() <= BigInt::from(oracle_max_order) {
            guarded(&mut report, &spec, |report| {
                let line = oracle.graph(&spec, Which::Line)?;
                let brute = energy_of(&oracle.spectrum(&spec, Which::Line)?);
                let brute_direct = brute > BigInt::from(2 * line.n() as i64 - 2);
                if brute_direct != row.direct {
                    report.fail(format!(
                        "{spec}: oracle energy {brute} decides hyperenergetic = {brute_direct}"
                    ));
                }
                row.oracle_energy = Some(brute);
                Ok(())
            });
        }
        if row.direct != row.corollary {
            report.findings.push(row.to_string());
        }
        rows.push(row);
    }
    (rows, report)
}

/// Closed-form line energy against the line spectrum, and for
/// `|R| ≤ oracle_max_order` against the oracle, plus the hyperenergetic audit.
pub fn energy(oracle: &mut Oracle, max_order: u64, oracle_max_order: u64) -> Report {
    let mut report = Report::new("energy");
    for spec in enumerate_specs(max_order, true) {
        report.checked += 1;
        guarded(&mut report, &spec, |report| {
            let closed = line_energy(&spec).energy;
            report.check(
                || format!("{spec} line energy vs spectrum"),
                &closed,
                &energy_of(&spectrum_line(&spec)?),
            );
            if *spec.order() <= BigInt::from(oracle_max_order) {
                let brute = energy_of(&oracle.spectrum(&spec, Which::Line)?);
                report.check(|| format!("{spec} line energy"), &closed, &brute);
            }
            Ok(())
        });
    }
    for (n, expected) in [(3, 4), (6, 8)] {
        if n <= max_order {
            let got = from_modulus(n).map(|s| line_energy(&s).energy);
            if got.as_ref().ok() != Some(&BigInt::from(expected)) {
                report.fail(format!(
                    "Z/{n}: expected line energy {expected}, got {got:?}"
                ));
            }
        }
    }
    let (_, audit) = hyper_audit(oracle, max_order, oracle_max_order);
    report.failures.extend(audit.failures);
    report.findings.extend(audit.findings);
    report
}

/// Closed-form triangle and quadrangle counts against the oracle.
pub fn cycles(oracle: &mut Oracle, max_order: u64) -> Report {
    let mut report = Report::new("cycles");
    let oct = transform_with(&complete_graph(4), Transform::Line, &Limits::default());
    let anchors = [
        ("K_5 triangles", count_cycles(&complete_graph(5), 3), 10),
        (
            "octahedron triangles",
            oct.as_ref()
                .map_err(Clone::clone)
                .and_then(|g| count_cycles(g, 3)),
            8,
        ),
        (
            "octahedron quadrangles",
            oct.as_ref()
                .map_err(Clone::clone)
                .and_then(|g| count_cycles(g, 4)),
            15,
        ),
    ];
    for (what, got, expected) in anchors {
        if got.as_ref().ok() != Some(&BigInt::from(expected)) {
            report.fail(format!("{what}: expected {expected}, got {got:?}"));
        }
    }
    for spec in enumerate_specs(max_order, true) {
        report.checked += 1;
        for (which, target) in [
            (Which::Unitary, Target::Unitary),
            (Which::Line, Target::Line),
        ] {
            guarded(&mut report, &spec, |report| {
                let g = oracle.graph(&spec, which)?;
                for length in [3, 4] {
                    let closed = cycle_count(&spec, target, length)?;
                    let brute = count_cycles(&g, length)?;
                    report.check(
                        || format!("{spec} {} {length}-cycles", which.name()),
                        &closed,
                        &brute,
                    );
                }
                Ok(())
            });
        }
    }
    report
}

/// The degenerate rings with a single unit: everything must be computable.
pub fn degenerate(oracle: &mut Oracle) -> Report {
    let mut report = Report::new("degenerate");
    for text in ["GF(2)", "GF(2) x GF(2)"] {
        report.checked += 1;
        let spec = crate::ring::parse_ring_expr(text).expect("valid expression");
        guarded(&mut report, &spec, |report| {
            let energy = line_energy(&spec);
            if energy.energy != BigInt::from(0) {
                report.fail(format!("{spec}: line energy {}", energy.energy));
            }
            for which in Which::ALL {
                let closed = closed_spectrum(&spec, which)?;
                report.check(
                    || format!("{spec} {} spectrum", which.name()),
                    &closed,
                    &oracle.spectrum(&spec, which)?,
                );
            }
            let n = spec.order();
            let r = spec.unit_count();
            compare_verdicts(
                report,
                || format!("{spec} unitary"),
                &classify_unitary(&spec),
                &ramanujan_check(&spectrum_unitary(&spec)?, r)?,
            );
            compare_verdicts(
                report,
                || format!("{spec} complement"),
                &classify_complement(&spec),
                &ramanujan_check(&spectrum_complement(&spec)?, &(n - 1 - r))?,
            );
            for length in [3, 4] {
                cycle_count(&spec, Target::Line, length)?;
            }
            Ok(())
        });
    }
    report
}

/// Bounds for [`all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Ring order bound for oracle-backed checks.
    pub oracle_max_order: u64,
    /// Ring order bound for closed-form Ramanujan agreement.
    pub ramanujan_max_order: u64,
    /// Ring order bound for closed-form energy checks and the audit.
    pub energy_max_order: u64,
    /// Oracle bound for energies and cycle counts.
    pub energy_oracle_max_order: u64,
    pub max_modulus: u64,
    pub max_moment: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            oracle_max_order: 64,
            ramanujan_max_order: 5000,
            energy_max_order: 200,
            energy_oracle_max_order: 40,
            max_modulus: 2000,
            max_moment: 8,
        }
    }
}

/// Every suite, in a fixed order.
pub fn all(oracle: &mut Oracle, bounds: &Bounds) -> Vec<Report> {
    vec![
        spectra(oracle, bounds.oracle_max_order),
        moments(oracle, bounds.oracle_max_order, bounds.max_moment),
        ramanujan(oracle, bounds.ramanujan_max_order, bounds.oracle_max_order),
        zn(bounds.max_modulus),
        energy(
            oracle,
            bounds.energy_max_order,
            bounds.energy_oracle_max_order,
        ),
        cycles(oracle, bounds.energy_oracle_max_order),
        degenerate(oracle),
    ]
}

/// Prime powers up to `max_n` together with the sporadic moduli.
pub fn expected_complement_moduli(max_n: u64) -> BTreeSet<u64> {
    (2..=max_n)
        .filter(|&n| arith::prime_power(n).is_some() || SPORADIC_COMPLEMENT_MODULI.contains(&n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let mut oracle = Oracle::default();
        let bounds = Bounds {
            oracle_max_order: 16,
            ramanujan_max_order: 200,
            energy_max_order: 50,
            energy_oracle_max_order: 16,
            max_modulus: 200,
            max_moment: 6,
        };
        for report in all(&mut oracle, &bounds) {
            assert!(report.passed(false), "{report}");
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn complement_moduli() {
        let got: BTreeSet<u64> = complement_ramanujan_moduli(100)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(got, expected_complement_moduli(100));
    }

    #[test]
    fn summary_format() {
        let mut r = Report::new("spectra");
        r.checked = 3;
        assert_eq!(r.summary(), "spectra: checked 3 specs, 0 mismatches");
        r.findings.push("x".into());
        assert!(r.passed(false));
        assert!(!r.passed(true));
    }
}
