//! Report documents produced by the `uc-spectra` command.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use uc_spectra::energy::{
    cycle_count, line_energy, moment_line, moment_unitary, EnergyReport, Target,
};
use uc_spectra::json_int;
use uc_spectra::oracle::{count_cycles, exact_moments};
use uc_spectra::ramanujan::{
    classify_complement, classify_unitary, classify_zn, ramanujan_check, GraphKind, Verdict,
};
use uc_spectra::ring::{Presentation, RingSpec};
use uc_spectra::verify::{Oracle, Which};
use uc_spectra::{
    energy_of, spectrum_complement, spectrum_line, spectrum_unitary, Result, Spectrum,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectra {
    pub unitary: Spectrum,
    pub complement: Spectrum,
    pub line: Spectrum,
}

/// Both ways of deciding the Ramanujan property for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictPair {
    pub theorem: Verdict,
    pub direct: Verdict,
    /// The factorization-only classification, for `Z/nZ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zn: Option<Verdict>,
    pub agree: bool,
}

impl VerdictPair {
    fn new(theorem: Verdict, direct: Verdict, zn: Option<Verdict>) -> Self {
        let agree = theorem.ramanujan == direct.ramanujan
            && zn.as_ref().is_none_or(|v| v.ramanujan == direct.ramanujan);
        VerdictPair {
            theorem,
            direct,
            zn,
            agree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub unitary: VerdictPair,
    pub complement: VerdictPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Moments {
    /// `s_1, ..., s_k` of `G_R`.
    #[serde(with = "json_int::vec")]
    pub unitary: Vec<BigInt>,
    #[serde(with = "json_int::vec")]
    pub line: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCounts {
    #[serde(with = "json_int")]
    pub triangles: BigInt,
    #[serde(with = "json_int")]
    pub quadrangles: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycles {
    pub unitary: CycleCounts,
    pub line: CycleCounts,
}

/// Brute-force comparison attached by `--oracle`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub spectra_match: bool,
    pub moments_match: bool,
    pub cycles_match: bool,
    #[serde(with = "json_int")]
    pub line_energy: BigInt,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub ring: String,
    #[serde(with = "json_int")]
    pub order: BigInt,
    #[serde(with = "json_int")]
    pub unit_count: BigInt,
    pub s: usize,
    pub spectra: Spectra,
    pub verdicts: Verdicts,
    pub energy: EnergyReport,
    pub moments: Moments,
    pub cycles: Cycles,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

/// `Some(n)` if the spec is `Z/nZ` written through its prime-power factors.
pub fn as_modulus(spec: &RingSpec) -> Option<u64> {
    let mut primes = Vec::new();
    for f in spec.factors() {
        if f.presentation() != Presentation::Integers || primes.contains(&f.prime()) {
            return None;
        }
        primes.push(f.prime());
    }
    spec.order_u64()
}

fn cycles_of(spec: &RingSpec, target: Target) -> Result<CycleCounts> {
    Ok(CycleCounts {
        triangles: cycle_count(spec, target, 3)?,
        quadrangles: cycle_count(spec, target, 4)?,
    })
}

impl ReportDoc {
    /// Every closed-form quantity for `spec`, with moments `s_1..=s_kmax`.
    pub fn build(spec: &RingSpec, kmax: u32) -> Result<Self> {
        let n = spec.order().clone();
        let r = spec.unit_count().clone();
        let spectra = Spectra {
            unitary: spectrum_unitary(spec)?,
            complement: spectrum_complement(spec)?,
            line: spectrum_line(spec)?,
        };
        let modulus = as_modulus(spec).filter(|&n| n >= 2);
        let zn = |kind| modulus.map(|n| classify_zn(n, kind)).transpose();
        let verdicts = Verdicts {
            unitary: VerdictPair::new(
                classify_unitary(spec),
                ramanujan_check(&spectra.unitary, &r)?,
                zn(GraphKind::Unitary)?,
            ),
            complement: VerdictPair::new(
                classify_complement(spec),
                ramanujan_check(&spectra.complement, &(&n - 1 - &r))?,
                zn(GraphKind::Complement)?,
            ),
        };
        Ok(ReportDoc {
            ring: spec.to_string(),
            order: n,
            unit_count: r,
            s: spec.s(),
            spectra,
            verdicts,
            energy: line_energy(spec),
            moments: Moments {
                unitary: (1..=kmax).map(|k| moment_unitary(spec, k)).collect(),
                line: (1..=kmax).map(|k| moment_line(spec, k)).collect(),
            },
            cycles: Cycles {
                unitary: cycles_of(spec, Target::Unitary)?,
                line: cycles_of(spec, Target::Line)?,
            },
            oracle: None,
        })
    }

    /// Builds the graphs and attaches a brute-force comparison.
    pub fn attach_oracle(&mut self, spec: &RingSpec, oracle: &mut Oracle) -> Result<()> {
        let mut mismatches = Vec::new();
        let mut spectra_match = true;
        for (which, closed) in [
            (Which::Unitary, &self.spectra.unitary),
            (Which::Complement, &self.spectra.complement),
            (Which::Line, &self.spectra.line),
        ] {
            let brute = oracle.spectrum(spec, which)?;
            if &brute != closed {
                spectra_match = false;
                mismatches.push(format!(
                    "{which:?} spectrum: closed form {closed}, oracle {brute}"
                ));
            }
        }
        let kmax = self.moments.unitary.len() as u32;
        let mut moments_match = true;
        let mut cycles_match = true;
        for (which, closed, counts) in [
            (Which::Unitary, &self.moments.unitary, &self.cycles.unitary),
            (Which::Line, &self.moments.line, &self.cycles.line),
        ] {
            let g = oracle.graph(spec, which)?;
            let walks = exact_moments(&g, kmax);
            if closed[..] != walks[1..] {
                moments_match = false;
                mismatches.push(format!(
                    "{which:?} moments: closed form {closed:?}, oracle {:?}",
                    &walks[1..]
                ));
            }
            let brute = (count_cycles(&g, 3)?, count_cycles(&g, 4)?);
            if (&counts.triangles, &counts.quadrangles) != (&brute.0, &brute.1) {
                cycles_match = false;
                mismatches.push(format!(
                    "{which:?} cycles: closed form ({}, {}), oracle ({}, {})",
                    counts.triangles, counts.quadrangles, brute.0, brute.1
                ));
            }
        }
        let line_energy = energy_of(&oracle.spectrum(spec, Which::Line)?);
        if line_energy != self.energy.energy {
            mismatches.push(format!(
                "line energy: closed form {}, oracle {line_energy}",
                self.energy.energy
            ));
        }
        self.oracle = Some(OracleCheck {
            spectra_match,
            moments_match,
            cycles_match,
            line_energy,
            mismatches,
        });
        Ok(())
    }

    /// Oracle mismatches, if an oracle comparison is attached.
    pub fn mismatches(&self) -> &[String] {
        self.oracle.as_ref().map_or(&[], |o| &o.mismatches)
    }

    /// Recomputes the direct verdicts from the embedded spectra and compares
    /// them with the stored ones.
    pub fn verdicts_consistent(&self) -> Result<bool> {
        let unitary = ramanujan_check(&self.spectra.unitary, &self.unit_count)?;
        let complement = ramanujan_check(
            &self.spectra.complement,
            &(&self.order - 1 - &self.unit_count),
        )?;
        Ok(
            unitary == self.verdicts.unitary.direct
                && complement == self.verdicts.complement.direct,
        )
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut row = |key: &str, value: String| {
            let _ = writeln!(out, "{key:<26} {value}");
        };
        row("ring", self.ring.clone());
        row("order", self.order.to_string());
        row("units", self.unit_count.to_string());
        row("local factors", self.s.to_string());
        row("spectrum", self.spectra.unitary.to_string());
        row("complement spectrum", self.spectra.complement.to_string());
        row("line spectrum", self.spectra.line.to_string());
        row("Ramanujan", verdict_cell(&self.verdicts.unitary));
        row(
            "complement Ramanujan",
            verdict_cell(&self.verdicts.complement),
        );
        row("energy(L)", self.energy.energy.to_string());
        row("line order", self.energy.line_order.to_string());
        let hyper = match (
            self.energy.hyperenergetic_direct,
            self.energy.hyperenergetic_corollary,
        ) {
            (d, c) if d == c => d.to_string(),
            (d, c) => format!("{d} (characterization says {c})"),
        };
        row("hyperenergetic(L)", hyper);
        row("moments", join(&self.moments.unitary));
        row("line moments", join(&self.moments.line));
        row(
            "triangles, 4-cycles",
            format!(
                "{}, {}",
                self.cycles.unitary.triangles, self.cycles.unitary.quadrangles
            ),
        );
        row(
            "line triangles, 4-cycles",
            format!(
                "{}, {}",
                self.cycles.line.triangles, self.cycles.line.quadrangles
            ),
        );
        if let Some(o) = &self.oracle {
            let status = if o.mismatches.is_empty() {
                "all match".to_string()
            } else {
                o.mismatches.join("; ")
            };
            row("oracle", status);
        }
        out
    }

    /// `graph,value,multiplicity` rows for the three spectra.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("graph,value,multiplicity\n");
        for (name, s) in [
            ("unitary", &self.spectra.unitary),
            ("complement", &self.spectra.complement),
            ("line", &self.spectra.line),
        ] {
            for (v, m) in s.entries() {
                let _ = writeln!(out, "{name},{v},{m}");
            }
        }
        out
    }
}

fn verdict_cell(pair: &VerdictPair) -> String {
    let mut cell = pair.theorem.to_string();
    if let Some(zn) = &pair.zn {
        if let Some(case) = &zn.case_label {
            cell += &format!(", {case}");
        }
    }
    if !pair.agree {
        cell += &format!("; definition gives {}", pair.direct);
    }
    cell
}

fn join(values: &[BigInt]) -> String {
    values
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Header of the enumeration CSV.
pub const ENUMERATE_HEADER: &str =
    "ring,order,unit_count,ramanujan,complement_ramanujan,line_energy,hyperenergetic";

/// One enumeration row.
pub fn enumerate_row(spec: &RingSpec) -> (bool, bool, EnergyReport) {
    (
        classify_unitary(spec).ramanujan,
        classify_complement(spec).ramanujan,
        line_energy(spec),
    )
}

/// Specs `Z/nZ` for `2 ≤ n ≤ max`.
pub fn moduli(max: u64) -> Result<Vec<RingSpec>> {
    (2..=max).map(uc_spectra::from_modulus).collect()
}
