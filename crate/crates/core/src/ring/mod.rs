//! Descriptors for finite commutative rings written as products of local rings.
//!
//! Every closed form in this crate depends on a local factor only through the
//! pair `(|R_i|, m_i)`: the factor's order and the order of its maximal ideal.

pub mod arith;
mod enumerate;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub use enumerate::{enumerate_specs, local_descriptors};
pub use parse::{parse_ring_expr, parse_ring_expr_with};

/// How a local factor is presented to the user and realized by the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// `Z/p^k`.
    Integers,
    /// `GF(q)[x]/x^t`, rendered `GF(q)` when `t = 1`.
    Polynomial,
    /// `local(order, m)`, no concrete ring chosen.
    Abstract,
}

/// A finite local ring known only through its order and the order of its
/// maximal ideal.
///
/// Equality, hashing and ordering look only at `(order, ideal_order)`; the
/// presentation is a rendering hint.
#[derive(Debug, Clone, Copy)]
pub struct LocalRingSpec {
    order: u64,
    ideal_order: u64,
    residue: u64,
    prime: u64,
    length: Option<u32>,
    presentation: Presentation,
}

impl LocalRingSpec {
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Order `m` of the maximal ideal.
    pub fn ideal_order(&self) -> u64 {
        self.ideal_order
    }

    /// Size `q = |R|/m` of the residue field.
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `t` with `order = residue^t`, present for realizable descriptors.
    pub fn length(&self) -> Option<u32> {
        self.length
    }

    pub fn presentation(&self) -> Presentation {
        self.presentation
    }

    pub fn descriptor(&self) -> (u64, u64) {
        (self.order, self.ideal_order)
    }

    /// `|R_i^×| = |R_i| - m_i`.
    pub fn unit_count(&self) -> u64 {
        self.order - self.ideal_order
    }

    /// `|R_i^×| / m_i = q - 1`.
    pub fn unit_ratio(&self) -> u64 {
        self.residue - 1
    }

    pub fn is_field(&self) -> bool {
        self.ideal_order == 1
    }

    /// True for the field with exactly `q` elements.
    pub fn is_field_of(&self, q: u64) -> bool {
        self.is_field() && self.order == q
    }

    pub fn is_realizable(&self) -> bool {
        self.length.is_some()
    }

    /// Same descriptor with a different presentation. Non-realizable
    /// descriptors stay abstract; `Integers` needs a prime residue field.
    pub fn with_presentation(mut self, presentation: Presentation) -> Self {
        self.presentation = match presentation {
            _ if !self.is_realizable() => Presentation::Abstract,
            Presentation::Integers if self.residue != self.prime => Presentation::Polynomial,
            p => p,
        };
        self
    }

    /// The field `GF(q)`.
    pub fn field(q: u64) -> Result<Self> {
        validate_local(q, 1, true)
    }

    fn sort_key(&self) -> (u64, u64) {
        (self.residue, self.order)
    }
}

impl PartialEq for LocalRingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor() == other.descriptor()
    }
}

impl Eq for LocalRingSpec {}

impl Hash for LocalRingSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.descriptor().hash(state);
    }
}

impl PartialOrd for LocalRingSpec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Residue size ascending, then order ascending.
impl Ord for LocalRingSpec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for LocalRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.presentation, self.length) {
            (Presentation::Integers, _) => write!(f, "Z/{}", self.order),
            (Presentation::Polynomial, Some(1)) => write!(f, "GF({})", self.residue),
            (Presentation::Polynomial, Some(t)) => write!(f, "GF({})[x]/x^{}", self.residue, t),
            _ => write!(f, "local({},{})", self.order, self.ideal_order),
        }
    }
}

/// Validates a local-ring descriptor.
///
/// In strict mode the order must also be a power of the residue size, which
/// holds for every finite local ring.
pub fn validate_local(order: u64, ideal_order: u64, strict: bool) -> Result<LocalRingSpec> {
    let invalid = |reason| Error::InvalidDescriptor {
        order,
        ideal_order,
        reason,
    };
    if order < 2 {
        return Err(invalid("order must be at least 2"));
    }
    if ideal_order < 1 {
        return Err(invalid("maximal ideal order must be at least 1"));
    }
    if !order.is_multiple_of(ideal_order) {
        return Err(invalid("maximal ideal order must divide the ring order"));
    }
    let residue = order / ideal_order;
    if residue < 2 {
        return Err(invalid("residue field must have at least 2 elements"));
    }
    let not_pp = Error::NotPrimePower { order, ideal_order };
    let (prime, _) = arith::prime_power(order).ok_or(not_pp.clone())?;
    // residue | order, so it is a power of the same prime iff it is a prime power
    if arith::prime_power(residue).is_none() {
        return Err(not_pp);
    }
    let length = arith::exact_log(order, residue);
    if strict && length.is_none() {
        return Err(Error::NotRealizable { order, ideal_order });
    }
    let presentation = if length.is_some() {
        Presentation::Polynomial
    } else {
        Presentation::Abstract
    };
    Ok(LocalRingSpec {
        order,
        ideal_order,
        residue,
        prime,
        length,
        presentation,
    })
}

/// A finite commutative ring `R_1 × … × R_s` in canonical factor order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    factors: Vec<LocalRingSpec>,
    order: BigInt,
    unit_count: BigInt,
}

/// Sorts factors by residue size (ties by order) and derives `|R|` and `|R^×|`.
pub fn canonicalize(mut factors: Vec<LocalRingSpec>) -> Result<RingSpec> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    factors.sort();
    let order = factors.iter().map(|f| BigInt::from(f.order)).product();
    let unit_count = factors
        .iter()
        .map(|f| BigInt::from(f.unit_count()))
        .product();
    Ok(RingSpec {
        factors,
        order,
        unit_count,
    })
}

/// `Z/nZ` as a product of `Z/p^k` factors.
pub fn from_modulus(n: u64) -> Result<RingSpec> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "modulus must be at least 2, got {n}"
        )));
    }
    let factors = arith::factorize(n)
        .into_iter()
        .map(|(p, e)| {
            let order = p.pow(e);
            validate_local(order, order / p, true)
                .map(|f| f.with_presentation(Presentation::Integers))
        })
        .collect::<Result<Vec<_>>>()?;
    canonicalize(factors)
}

/// `|R^×| = ∏ (|R_i| - m_i)`.
pub fn unit_count(spec: &RingSpec) -> BigInt {
    spec.unit_count.clone()
}

impl RingSpec {
    pub fn factors(&self) -> &[LocalRingSpec] {
        &self.factors
    }

    /// Number of local factors `s`.
    pub fn s(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn unit_count(&self) -> &BigInt {
        &self.unit_count
    }

    /// Number of leading factors with residue field `F_2`.
    pub fn residue_two_count(&self) -> usize {
        self.factors.iter().take_while(|f| f.residue == 2).count()
    }

    pub fn is_local(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_realizable(&self) -> bool {
        self.factors.iter().all(LocalRingSpec::is_realizable)
    }

    /// `∏ m_i`.
    pub fn ideal_product(&self) -> BigInt {
        self.factors
            .iter()
            .map(|f| BigInt::from(f.ideal_order))
            .product()
    }

    /// Descriptor pairs in canonical order.
    pub fn descriptors(&self) -> Vec<(u64, u64)> {
        self.factors.iter().map(LocalRingSpec::descriptor).collect()
    }

    /// `|R|` as `u64`, when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" × ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn local(o: u64, m: u64) -> LocalRingSpec {
        validate_local(o, m, true).unwrap()
    }

    #[test]
    fn validate_examples() {
        let z4 = local(4, 2);
        assert_eq!(
            (z4.order(), z4.ideal_order(), z4.residue(), z4.prime()),
            (4, 2, 2, 2)
        );
        assert_eq!(z4.length(), Some(2));
        let r9 = local(9, 3);
        assert_eq!((r9.residue(), r9.length()), (3, Some(2)));
        assert_eq!(
            validate_local(16, 2, true),
            Err(Error::NotRealizable {
                order: 16,
                ideal_order: 2
            })
        );
        assert_eq!(
            validate_local(6, 2, true),
            Err(Error::NotPrimePower {
                order: 6,
                ideal_order: 2
            })
        );
    }

    #[test]
    fn lax_mode_admits_phantom_descriptors() {
        let phantom = validate_local(16, 2, false).unwrap();
        assert_eq!(phantom.residue(), 8);
        assert_eq!(phantom.length(), None);
        assert_eq!(phantom.presentation(), Presentation::Abstract);
        assert_eq!(phantom.to_string(), "local(16,2)");
    }

    #[test]
    fn validate_rejects_malformed() {
        for (o, m) in [(1, 1), (4, 0), (8, 3), (4, 4), (2, 2)] {
            assert!(matches!(
                validate_local(o, m, false),
                Err(Error::InvalidDescriptor { .. })
            ));
        }
        // 12 = 4 * 3: order is not a prime power
        assert!(matches!(
            validate_local(12, 4, false),
            Err(Error::NotPrimePower { .. })
        ));
    }

    #[test]
    fn canonicalize_orders_and_counts() {
        let spec = canonicalize(vec![local(3, 1), local(4, 2)]).unwrap();
        assert_eq!(spec.descriptors(), vec![(4, 2), (3, 1)]);
        assert_eq!(*spec.order(), BigInt::from(12));
        assert_eq!(*spec.unit_count(), BigInt::from(4));

        let f2 = local(2, 1);
        let cube = canonicalize(vec![f2, f2, f2]).unwrap();
        assert_eq!((cube.order(), cube.unit_count()), (&8.into(), &1.into()));

        let f5 = canonicalize(vec![local(5, 1)]).unwrap();
        assert_eq!((f5.order(), f5.unit_count()), (&5.into(), &4.into()));

        assert_eq!(canonicalize(vec![]), Err(Error::EmptyProduct));
    }

    #[test]
    fn residue_ties_break_by_order() {
        let spec = canonicalize(vec![local(4, 2), local(2, 1), local(8, 4)]).unwrap();
        assert_eq!(spec.descriptors(), vec![(2, 1), (4, 2), (8, 4)]);
    }

    #[test]
    fn modulus_examples() {
        let z12 = from_modulus(12).unwrap();
        assert_eq!(z12.descriptors(), vec![(4, 2), (3, 1)]);
        assert_eq!(unit_count(&z12), 4.into());
        let z30 = from_modulus(30).unwrap();
        assert_eq!(z30.descriptors(), vec![(2, 1), (3, 1), (5, 1)]);
        assert_eq!(unit_count(&z30), 8.into());
        let z9 = from_modulus(9).unwrap();
        assert_eq!(z9.descriptors(), vec![(9, 3)]);
        assert_eq!(unit_count(&z9), 6.into());
        assert!(from_modulus(1).is_err());
    }

    #[test]
    fn unit_count_examples() {
        let spec = canonicalize(vec![local(9, 3), local(5, 1)]).unwrap();
        assert_eq!(unit_count(&spec), 24.into());
    }

    #[test]
    fn rendering() {
        assert_eq!(from_modulus(12).unwrap().to_string(), "Z/4 × Z/3");
        let spec = canonicalize(vec![local(9, 1), local(9, 3), local(2, 1)]).unwrap();
        assert_eq!(spec.to_string(), "GF(2) × GF(3)[x]/x^2 × GF(9)");
        // Z/p^k needs a prime residue field
        let gf4 = local(4, 1).with_presentation(Presentation::Integers);
        assert_eq!(gf4.to_string(), "GF(4)");
    }
}
