//! Exact spectra of `G_R`, its complement and its line graph from the
//! subset-indexed eigenvalues `λ_C`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::RingSpec;
use crate::spectrum::Spectrum;

/// Largest factor count for which the `2^s` subset sum is attempted.
pub const MAX_FACTORS: usize = 40;

/// `λ_C = (-1)^{|C|} |R^×| / ∏_{j∈C} (|R_j^×| / m_j)` for a subset of factor
/// indices (0-based, canonical order).
pub fn lambda_c(spec: &RingSpec, subset: &[usize]) -> Result<BigInt> {
    let mut mask = 0u64;
    for &index in subset {
        if index >= spec.s() {
            return Err(Error::IndexOutOfRange {
                index,
                factors: spec.s(),
            });
        }
        mask |= 1 << index;
    }
    Ok(lambda_mask(spec, mask))
}

// |R^×| / ∏_{j∈C}(q_j - 1) = ∏_{i∉C} |R_i^×| · ∏_{j∈C} m_j
fn lambda_mask(spec: &RingSpec, mask: u64) -> BigInt {
    let magnitude: BigInt = spec
        .factors()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            if mask >> i & 1 == 1 {
                BigInt::from(f.ideal_order())
            } else {
                BigInt::from(f.unit_count())
            }
        })
        .product();
    if mask.count_ones() % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

fn subset_multiplicity(spec: &RingSpec, mask: u64) -> BigInt {
    spec.factors()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, f)| BigInt::from(f.unit_ratio()))
        .product()
}

/// `(λ_C, ∏_{j∈C} |R_j^×|/m_j)` for every subset `C`, unmerged.
pub fn subset_eigenvalues(spec: &RingSpec) -> Result<Vec<(BigInt, BigInt)>> {
    if spec.s() > MAX_FACTORS {
        return Err(Error::TooLarge(format!(
            "{} local factors exceeds the subset-enumeration limit of {MAX_FACTORS}",
            spec.s()
        )));
    }
    Ok((0..1u64 << spec.s())
        .map(|mask| (lambda_mask(spec, mask), subset_multiplicity(spec, mask)))
        .collect())
}

/// Multiplicity of the extra eigenvalue `0`: `|R| - ∏ (1 + |R_i^×|/m_i)`.
pub fn zero_block(spec: &RingSpec) -> BigInt {
    let covered: BigInt = spec
        .factors()
        .iter()
        .map(|f| BigInt::from(f.residue()))
        .product();
    spec.order() - covered
}

/// Spectrum of the unitary Cayley graph `G_R`.
pub fn spectrum_unitary(spec: &RingSpec) -> Result<Spectrum> {
    let mut pairs = subset_eigenvalues(spec)?;
    pairs.push((BigInt::zero(), zero_block(spec)));
    Spectrum::from_multiset(pairs)
}

/// Spectrum of the complement of `G_R`.
pub fn spectrum_complement(spec: &RingSpec) -> Result<Spectrum> {
    let degree = spec.order() - BigInt::one() - spec.unit_count();
    let mut pairs = vec![(degree, BigInt::one())];
    pairs.extend(
        subset_eigenvalues(spec)?
            .into_iter()
            .skip(1) // C = ∅
            .map(|(lambda, mult)| (-lambda - 1, mult)),
    );
    pairs.push((BigInt::from(-1), zero_block(spec)));
    Spectrum::from_multiset(pairs)
}

/// Spectrum of the line graph of `G_R`.
///
/// With `|R^×| = 1` the graph is a perfect matching and its line graph is
/// `|R|/2` isolated vertices; with `|R^×| = 2` the `-2` block is empty.
pub fn spectrum_line(spec: &RingSpec) -> Result<Spectrum> {
    let r = spec.unit_count();
    if r.is_one() {
        return Spectrum::from_multiset([(BigInt::zero(), spec.order() / 2)]);
    }
    let shift: BigInt = r - 2;
    let mut pairs: Vec<_> = subset_eigenvalues(spec)?
        .into_iter()
        .map(|(lambda, mult)| (lambda + &shift, mult))
        .collect();
    pairs.push((shift.clone(), zero_block(spec)));
    let minus_two: BigInt = spec.order() * &shift;
    if !(&minus_two % 2u32).is_zero() {
        return Err(Error::Internal("|R|(|R^×|-2) is odd".into()));
    }
    pairs.push((BigInt::from(-2), minus_two / 2));
    Spectrum::from_multiset(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{canonicalize, from_modulus, parse_ring_expr, validate_local};

    fn spec(text: &str) -> RingSpec {
        parse_ring_expr(text).unwrap()
    }

    fn pairs(s: &Spectrum) -> Vec<(i64, u64)> {
        s.entries()
            .iter()
            .map(|(v, m)| (i64::try_from(v).unwrap(), u64::try_from(m).unwrap()))
            .collect()
    }

    #[test]
    fn lambda_examples() {
        let z12 = from_modulus(12).unwrap();
        assert_eq!(lambda_c(&z12, &[]).unwrap(), 4.into());
        // canonical order is [Z/4, Z/3]
        assert_eq!(lambda_c(&z12, &[1]).unwrap(), (-2).into());
        let local = canonicalize(vec![validate_local(9, 3, true).unwrap()]).unwrap();
        assert_eq!(lambda_c(&local, &[0]).unwrap(), (-3).into());
        assert_eq!(
            lambda_c(&z12, &[2]),
            Err(Error::IndexOutOfRange {
                index: 2,
                factors: 2
            })
        );
    }

    #[test]
    fn unitary_examples() {
        assert_eq!(
            pairs(&spectrum_unitary(&spec("Z/4")).unwrap()),
            vec![(2, 1), (0, 2), (-2, 1)]
        );
        assert_eq!(
            pairs(&spectrum_unitary(&spec("Z/6")).unwrap()),
            vec![(2, 1), (1, 2), (-1, 2), (-2, 1)]
        );
        assert_eq!(
            pairs(&spectrum_unitary(&spec("Z/4 * GF(2)")).unwrap()),
            vec![(2, 2), (0, 4), (-2, 2)]
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            pairs(&spectrum_complement(&spec("GF(5)")).unwrap()),
            vec![(0, 5)]
        );
        assert_eq!(
            pairs(&spectrum_complement(&spec("Z/4")).unwrap()),
            vec![(1, 2), (-1, 2)]
        );
        assert_eq!(
            pairs(&spectrum_complement(&spec("Z/6")).unwrap()),
            vec![(3, 1), (1, 1), (0, 2), (-2, 2)]
        );
    }

    #[test]
    fn line_examples() {
        assert_eq!(
            pairs(&spectrum_line(&spec("GF(3)")).unwrap()),
            vec![(2, 1), (-1, 2)]
        );
        assert_eq!(
            pairs(&spectrum_line(&spec("Z/6")).unwrap()),
            vec![(2, 1), (1, 2), (-1, 2), (-2, 1)]
        );
        assert_eq!(pairs(&spectrum_line(&spec("GF(2)")).unwrap()), vec![(0, 1)]);
        assert_eq!(
            pairs(&spectrum_line(&spec("GF(2) * GF(2)")).unwrap()),
            vec![(0, 2)]
        );
    }

    #[test]
    fn local_tables() {
        // |R| = 27, m = 9: {18:1, -9:2, 0:24}
        let s = spectrum_unitary(&spec("GF(3)[x]/x^3")).unwrap();
        assert_eq!(pairs(&s), vec![(18, 1), (0, 24), (-9, 2)]);
        let c = spectrum_complement(&spec("GF(3)[x]/x^3")).unwrap();
        assert_eq!(pairs(&c), vec![(8, 3), (-1, 24)]);
    }
}
