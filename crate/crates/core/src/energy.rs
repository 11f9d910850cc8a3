//! Line-graph energy, spectral moments, and triangle/quadrangle counts in
//! closed form.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json_int;
use crate::ring::RingSpec;
use crate::spectrum::Spectrum;

/// Which piece of the piecewise line-energy formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnergyBranch {
    /// Every residue field is `F_2`, or the ring is `F_2^{s-1} × F_3`.
    #[serde(rename = "all-residue-2-or-f2-f3")]
    ResidueTwo,
    /// `t` leading residue-2 factors with `1 ≤ t < s`.
    #[serde(rename = "mixed-t")]
    Mixed,
    /// Every residue field has at least three elements.
    #[serde(rename = "all-residue-ge-3")]
    ResidueAtLeastThree,
}

/// Case of the hyperenergetic characterization that fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HyperCase {
    A,
    B,
    C,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergyReport {
    #[serde(with = "json_int")]
    pub energy: BigInt,
    pub branch: EnergyBranch,
    /// Vertex count `|R||R^×|/2` of the line graph.
    #[serde(with = "json_int")]
    pub line_order: BigInt,
    /// `E > 2(n - 1)` with `n` the line-graph order.
    #[serde(rename = "hyper_direct")]
    pub hyperenergetic_direct: bool,
    /// The published characterization, evaluated as stated.
    #[serde(rename = "hyper_corollary")]
    pub hyperenergetic_corollary: bool,
    pub corollary_case: Option<HyperCase>,
}

impl EnergyReport {
    pub fn corollary_agrees(&self) -> bool {
        self.hyperenergetic_direct == self.hyperenergetic_corollary
    }
}

/// `Σ |λ| · mult`.
pub fn energy_of(spectrum: &Spectrum) -> BigInt {
    spectrum.energy()
}

/// `R ≅ F_2^{s-1} × F_3` (including `F_3` itself).
fn is_f2_power_times_f3(spec: &RingSpec) -> bool {
    let (last, rest) = spec.factors().split_last().expect("nonempty");
    last.is_field_of(3) && rest.iter().all(|f| f.is_field_of(2))
}

/// Energy of the line graph of `G_R` from the piecewise closed form.
pub fn line_energy(spec: &RingSpec) -> EnergyReport {
    let n = spec.order();
    let r = spec.unit_count();
    let s = spec.s();
    let t = spec.residue_two_count();
    let (branch, energy) = if t == s || is_f2_power_times_f3(spec) {
        let r1 = r - 1;
        (
            EnergyBranch::ResidueTwo,
            (BigInt::one() << (s + 1)) * &r1 * &r1,
        )
    } else if t >= 1 {
        (
            EnergyBranch::Mixed,
            (BigInt::one() << (t + 1)) + n * 2 * (r - 2),
        )
    } else {
        (EnergyBranch::ResidueAtLeastThree, n * 2 * (r - 2))
    };
    let line_order = n * r / 2;
    let hyperenergetic_direct = energy > (&line_order - 1) * 2;
    let corollary_case = if *r >= BigInt::from(4) {
        Some(HyperCase::A)
    } else if s == 1 && spec.factors()[0].residue() == 2 && spec.factors()[0].order() >= 8 {
        Some(HyperCase::B)
    } else if s >= 2 && t == s && *r >= BigInt::from(2) {
        Some(HyperCase::C)
    } else {
        None
    };
    EnergyReport {
        energy,
        branch,
        line_order,
        hyperenergetic_direct,
        hyperenergetic_corollary: corollary_case.is_some(),
        corollary_case,
    }
}

/// `s_k(G_R) = |R^×| ∏ (|R_i^×|^{k-1} - (-m_i)^{k-1})`, with `s_0 = |R|`.
pub fn moment_unitary(spec: &RingSpec, k: u32) -> BigInt {
    if k == 0 {
        return spec.order().clone();
    }
    let product: BigInt = spec
        .factors()
        .iter()
        .map(|f| {
            let units = BigInt::from(f.unit_count());
            let ideal = -BigInt::from(f.ideal_order());
            units.pow(k - 1) - ideal.pow(k - 1)
        })
        .product();
    spec.unit_count() * product
}

/// `s_k` of the line graph of `G_R`.
pub fn moment_line(spec: &RingSpec, k: u32) -> BigInt {
    let n = spec.order();
    let r = spec.unit_count();
    if r.is_one() {
        // perfect matching: the line graph is edgeless
        return if k == 0 { n / 2 } else { BigInt::zero() };
    }
    let base: Vec<BigInt> = (0..=k).map(|j| moment_unitary(spec, j)).collect();
    generic_line_moment(n, r, &base, k).expect("base moments have length k + 1")
}

/// `s_k(L(G)) = Σ_j C(k,j) (r-2)^{k-j} s_j(G) - (-2)^{k-1} n (r-2)` for an
/// `r`-regular graph `G` on `n` vertices with moments `s_0..s_k`.
pub fn generic_line_moment(n: &BigInt, r: &BigInt, base: &[BigInt], k: u32) -> Result<BigInt> {
    if base.len() != k as usize + 1 {
        return Err(Error::LengthMismatch {
            expected: k as usize + 1,
            got: base.len(),
        });
    }
    if *r < BigInt::from(2) || !n.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "line moments need r >= 2 and n >= 1 (got r = {r}, n = {n})"
        )));
    }
    let shift: BigInt = r - 2;
    if k == 0 {
        return exact_div(n * r, &BigInt::from(2));
    }
    let sum: BigInt = base
        .iter()
        .enumerate()
        .map(|(j, s_j)| {
            let j = j as u32;
            binomial(BigInt::from(k), BigInt::from(j)) * shift.clone().pow(k - j) * s_j
        })
        .sum();
    Ok(sum - BigInt::from(-2).pow(k - 1) * n * &shift)
}

/// Graph a closed-form cycle count refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Unitary,
    Line,
}

/// Closed-form number of triangles (`length = 3`) or quadrangles
/// (`length = 4`) in `G_R` or its line graph.
pub fn cycle_count(spec: &RingSpec, target: Target, length: u32) -> Result<BigInt> {
    let n = spec.order();
    let r = spec.unit_count();
    let scale = r * n;
    // ∏ (|R_i^×| - m_i) and ∏ (|R_i^×|² - |R_i^×| m_i + m_i²)
    let (p1, p2) = spec
        .factors()
        .iter()
        .fold((BigInt::one(), BigInt::one()), |(p1, p2), f| {
            let (u, m) = (BigInt::from(f.unit_count()), BigInt::from(f.ideal_order()));
            (p1 * (&u - &m), p2 * (&u * &u - &u * &m + &m * &m))
        });
    match (target, length) {
        (Target::Unitary, 3) => exact_div(scale * p1, &6.into()),
        (Target::Line, 3) => exact_div(scale * (p1 + (r - 1) * (r - 2)), &6.into()),
        (Target::Unitary, 4) => exact_div(scale * (BigInt::one() - r * 2 + p2), &8.into()),
        (Target::Line, 4) => {
            let r3 = r - 3;
            let inner = r * &r3 * &r3 - 5 + (r - 2) * 4 * p1 + p2;
            exact_div(scale * inner, &8.into())
        }
        _ => Err(Error::InvalidArgument(format!(
            "cycle length must be 3 or 4, got {length}"
        ))),
    }
}

fn exact_div(num: BigInt, den: &BigInt) -> Result<BigInt> {
    let (q, rem) = num.div_rem(den);
    if rem.is_zero() {
        Ok(q)
    } else {
        Err(Error::Internal(format!("{num} is not divisible by {den}")))
    }
}
