use crate::error::{Error, Result};
use crate::ring::{Presentation, RingSpec};

use super::field::GaloisField;
use super::Limits;

/// A concrete finite local ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalRing {
    /// `Z/p^k`.
    Integers { p: u64, modulus: u64 },
    /// `GF(q)[X]/(X^t)`; elements are base-`q` digit strings, constant term first.
    Truncated { field: GaloisField, length: u32 },
}

impl LocalRing {
    pub fn order(&self) -> u64 {
        match self {
            LocalRing::Integers { modulus, .. } => *modulus,
            LocalRing::Truncated { field, length } => field.order().pow(*length),
        }
    }

    /// Order of the maximal ideal (the non-units).
    pub fn ideal_order(&self) -> u64 {
        match self {
            LocalRing::Integers { p, modulus } => modulus / p,
            LocalRing::Truncated { field, length } => field.order().pow(length - 1),
        }
    }

    pub fn name(&self) -> String {
        match self {
            LocalRing::Integers { modulus, .. } => format!("Z/{modulus}"),
            LocalRing::Truncated { field, length: 1 } => format!("GF({})", field.order()),
            LocalRing::Truncated { field, length } => {
                format!("GF({})[x]/x^{length}", field.order())
            }
        }
    }

    fn coeffs(&self, mut x: u64) -> Vec<u64> {
        let LocalRing::Truncated { field, length } = self else {
            unreachable!()
        };
        (0..*length)
            .map(|_| {
                let d = x % field.order();
                x /= field.order();
                d
            })
            .collect()
    }

    fn pack(&self, coeffs: &[u64]) -> u64 {
        let LocalRing::Truncated { field, .. } = self else {
            unreachable!()
        };
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * field.order() + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            LocalRing::Integers { modulus, .. } => (a + b) % modulus,
            LocalRing::Truncated { field, .. } => {
                let c: Vec<_> = self
                    .coeffs(a)
                    .iter()
                    .zip(self.coeffs(b))
                    .map(|(&x, y)| field.add(x, y))
                    .collect();
                self.pack(&c)
            }
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        match self {
            LocalRing::Integers { modulus, .. } => (modulus - a) % modulus,
            LocalRing::Truncated { field, .. } => {
                let c: Vec<_> = self.coeffs(a).iter().map(|&x| field.neg(x)).collect();
                self.pack(&c)
            }
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match self {
            LocalRing::Integers { modulus, .. } => {
                (u128::from(a) * u128::from(b) % u128::from(*modulus)) as u64
            }
            LocalRing::Truncated { field, length } => {
                let (ca, cb) = (self.coeffs(a), self.coeffs(b));
                let t = *length as usize;
                let mut out = vec![0u64; t];
                for i in 0..t {
                    for j in 0..t - i {
                        out[i + j] = field.add(out[i + j], field.mul(ca[i], cb[j]));
                    }
                }
                self.pack(&out)
            }
        }
    }

    /// Units are the elements outside the maximal ideal.
    pub fn is_unit(&self, a: u64) -> bool {
        match self {
            LocalRing::Integers { p, .. } => !a.is_multiple_of(*p),
            LocalRing::Truncated { field, .. } => !a.is_multiple_of(field.order()),
        }
    }
}

/// A product of concrete local rings. Elements are integers `0..|R|` in mixed
/// radix, factor 0 least significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteRing {
    factors: Vec<LocalRing>,
    order: u64,
}

impl ConcreteRing {
    pub fn new(factors: Vec<LocalRing>) -> Self {
        let order = factors.iter().map(LocalRing::order).product();
        ConcreteRing { factors, order }
    }

    pub fn factors(&self) -> &[LocalRing] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        self.compose(&vec![1; self.factors.len()])
    }

    pub fn decompose(&self, mut x: u64) -> Vec<u64> {
        self.factors
            .iter()
            .map(|f| {
                let c = x % f.order();
                x /= f.order();
                c
            })
            .collect()
    }

    pub fn compose(&self, coords: &[u64]) -> u64 {
        self.factors
            .iter()
            .zip(coords)
            .rev()
            .fold(0, |acc, (f, &c)| acc * f.order() + c)
    }

    fn zip(&self, a: u64, b: u64, op: impl Fn(&LocalRing, u64, u64) -> u64) -> u64 {
        let (ca, cb) = (self.decompose(a), self.decompose(b));
        let c: Vec<_> = self
            .factors
            .iter()
            .zip(ca.iter().zip(&cb))
            .map(|(f, (&x, &y))| op(f, x, y))
            .collect();
        self.compose(&c)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.zip(a, b, LocalRing::add)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.zip(a, b, LocalRing::sub)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.zip(a, b, LocalRing::mul)
    }

    /// A unit in every coordinate.
    pub fn is_unit(&self, a: u64) -> bool {
        self.factors
            .iter()
            .zip(self.decompose(a))
            .all(|(f, c)| f.is_unit(c))
    }

    pub fn units(&self) -> Vec<u64> {
        (0..self.order).filter(|&x| self.is_unit(x)).collect()
    }
}

/// Builds a concrete ring for a realizable descriptor product.
pub fn realize_ring(spec: &RingSpec) -> Result<ConcreteRing> {
    realize_ring_with(spec, &Limits::default())
}

pub fn realize_ring_with(spec: &RingSpec, limits: &Limits) -> Result<ConcreteRing> {
    let order = spec
        .order_u64()
        .filter(|&n| n <= limits.max_ring_order)
        .ok_or_else(|| {
            Error::TooLarge(format!(
                "ring order {} exceeds the limit of {}",
                spec.order(),
                limits.max_ring_order
            ))
        })?;
    let factors = spec
        .factors()
        .iter()
        .map(|f| {
            let Some(length) = f.length() else {
                return Err(Error::NotRealizable {
                    order: f.order(),
                    ideal_order: f.ideal_order(),
                });
            };
            Ok(match f.presentation() {
                Presentation::Integers => LocalRing::Integers {
                    p: f.prime(),
                    modulus: f.order(),
                },
                _ => LocalRing::Truncated {
                    field: GaloisField::new(f.residue()).expect("residue is a prime power"),
                    length,
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let ring = ConcreteRing::new(factors);
    debug_assert_eq!(ring.order(), order);
    Ok(ring)
}
