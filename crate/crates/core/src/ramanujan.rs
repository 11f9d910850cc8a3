//! Ramanujan decisions for `G_R` and its complement.
//!
//! Two independent routes: [`ramanujan_check`] applies the definition to an
//! exact spectrum, while the `classify_*` functions match the ring structure
//! against the known classification. Every square-root bound is rearranged
//! into an integer inequality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json_int;
use crate::ring::{arith, LocalRingSpec, RingSpec};
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Theorem,
}

/// Which graph a `Z/nZ` classification refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Unitary,
    Complement,
}

/// Outcome of a Ramanujan decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub ramanujan: bool,
    pub method: Method,
    /// Label of the structural case that certifies the graph.
    #[serde(rename = "case")]
    pub case_label: Option<String>,
    /// Eigenvalue violating the bound (direct method only).
    #[serde(with = "json_int::option")]
    pub witness: Option<BigInt>,
    #[serde(with = "json_int")]
    pub degree: BigInt,
    /// No eigenvalue other than `±degree` exists.
    pub vacuous: bool,
}

impl Verdict {
    fn theorem(ramanujan: bool, case: Option<&str>, degree: BigInt, vacuous: bool) -> Self {
        Verdict {
            ramanujan,
            method: Method::Theorem,
            case_label: case.filter(|_| ramanujan).map(str::to_string),
            witness: None,
            degree,
            vacuous,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let answer = if self.ramanujan {
            "Ramanujan"
        } else {
            "not Ramanujan"
        };
        write!(f, "{answer} (degree {}", self.degree)?;
        if let Some(case) = &self.case_label {
            write!(f, ", {case}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, ", witness {w}")?;
        }
        if self.vacuous {
            f.write_str(", vacuous")?;
        }
        f.write_str(")")
    }
}

/// `a ≤ 2√b` for `b ≥ 0`, exactly.
pub fn le_two_sqrt(a: &BigInt, b: &BigInt) -> bool {
    !a.is_positive() || a * a <= b * 4
}

/// Applies the definition: every eigenvalue other than `±degree` must satisfy
/// `|λ| ≤ 2√(degree - 1)`. All occurrences of `±degree` are removed.
pub fn ramanujan_check(spectrum: &Spectrum, degree: &BigInt) -> Result<Verdict> {
    if degree.is_negative() {
        return Err(Error::InvalidArgument(format!("negative degree {degree}")));
    }
    if !spectrum.contains(degree) {
        return Err(Error::DegreeAbsent(degree.to_string()));
    }
    let mut extreme: Option<&BigInt> = None;
    for (value, _) in spectrum.entries() {
        if value.abs() == *degree {
            continue;
        }
        if extreme.is_none_or(|e| value.abs() > e.abs()) {
            extreme = Some(value);
        }
    }
    let Some(extreme) = extreme else {
        return Ok(Verdict {
            ramanujan: true,
            method: Method::Direct,
            case_label: None,
            witness: None,
            degree: degree.clone(),
            vacuous: true,
        });
    };
    let ramanujan = le_two_sqrt(&extreme.abs(), &(degree - 1));
    Ok(Verdict {
        ramanujan,
        method: Method::Direct,
        case_label: None,
        witness: (!ramanujan).then(|| extreme.clone()),
        degree: degree.clone(),
        vacuous: false,
    })
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

/// Field sizes if every factor is a field, in canonical order.
fn field_orders(factors: &[LocalRingSpec]) -> Option<Vec<u64>> {
    factors
        .iter()
        .map(|f| f.is_field().then_some(f.order()))
        .collect()
}

/// Classifies `G_R` by ring structure.
pub fn classify_unitary(spec: &RingSpec) -> Verdict {
    let degree = spec.unit_count().clone();
    let vacuous = spec.factors().iter().all(|f| f.is_field_of(2));
    let case = if spec.is_local() {
        local_unitary_case(&spec.factors()[0])
    } else {
        product_unitary_case(spec)
    };
    Verdict::theorem(case.is_some(), case, degree, vacuous)
}

fn local_unitary_case(f: &LocalRingSpec) -> Option<&'static str> {
    let (order, m) = (big(f.order()), big(f.ideal_order()));
    if order == &m * 2 {
        return Some("Thm3.1(a)");
    }
    // |R| ≥ (m/2 + 1)²  ⇔  4|R| ≥ (m + 2)²
    let m_plus_two = &m + 2;
    (order * 4 >= &m_plus_two * &m_plus_two && m != BigInt::from(2)).then_some("Thm3.1(b)")
}

fn product_unitary_case(spec: &RingSpec) -> Option<&'static str> {
    let t = spec.residue_two_count();
    let (low, high) = spec.factors().split_at(t);
    if high.is_empty() {
        return Some("Thm3.2(a)");
    }
    let low_all_f2 = low.iter().all(|f| f.is_field_of(2));
    let high_fields = field_orders(high);
    let descriptors: Vec<_> = high.iter().map(LocalRingSpec::descriptor).collect();
    if low_all_f2 {
        match high_fields.as_deref() {
            Some([3, 3, 3]) => return Some("Thm3.2(b)"),
            Some([3, 3, 4]) => return Some("Thm3.2(c)"),
            Some([4, 4, 4]) => return Some("Thm3.2(d)"),
            _ => {}
        }
        if descriptors == [(3, 1), (9, 3)] {
            return Some("Thm3.2(e)");
        }
    }
    if let Some(&[q1, q2]) = high_fields.as_deref() {
        let (q1, q2) = (big(q1), big(q2));
        let one_z4 = low.iter().filter(|f| f.descriptor() == (4, 2)).count() == 1
            && low.iter().filter(|f| f.is_field_of(2)).count() == low.len() - 1;
        // q2 ≤ q1 + √((q1-2)q1)
        if one_z4 && {
            let gap = &q2 - &q1;
            &gap * &gap <= (&q1 - 2) * &q1
        } {
            return Some("Thm3.2(f)");
        }
        // q2 ≤ 2(q1 + √((q1-2)q1)) - 1  ⇔  q2 + 1 - 2q1 ≤ 2√((q1-2)q1)
        if low_all_f2 && le_two_sqrt(&(&q2 + 1 - &q1 * 2), &((&q1 - 2) * &q1)) {
            return Some("Thm3.2(g)");
        }
    }
    if let [last] = high {
        // ∏ m_i ≤ 2(q - 1 + √((q-2)q))  ⇔  ∏ m_i - 2(q-1) ≤ 2√((q-2)q)
        let q = big(last.residue());
        if le_two_sqrt(&(spec.ideal_product() - (&q - 1) * 2), &((&q - 2) * &q)) {
            return Some("Thm3.2(h)");
        }
    }
    None
}

/// Classifies the complement of `G_R` by ring structure.
pub fn classify_complement(spec: &RingSpec) -> Verdict {
    let n = spec.order();
    let r = spec.unit_count();
    let degree = n - 1 - r;
    if spec.is_local() {
        let vacuous = spec.factors()[0].ideal_order() <= 2;
        return Verdict::theorem(true, Some("Thm4.1"), degree, vacuous);
    }
    let s = spec.s();
    let t = spec.residue_two_count();
    let case = if t == s {
        // μ = ∏m_i + 1 ≤ 2√((2^s - 1)∏m_i - 2)
        let m = spec.ideal_product();
        let pow = BigInt::one() << s;
        le_two_sqrt(&(&m + 1), &((pow - 1) * &m - 2)).then_some("Thm4.2(a)")
    } else if t >= 2 {
        // |R^×| ≤ 2√|R| - 3
        le_two_sqrt(&(r + 3), n).then_some("Thm4.2(b)")
    } else if t == 1 {
        // |R^×| ≤ 2√(|R| - 2) - 1
        le_two_sqrt(&(r + 1), &(n - 2)).then_some("Thm4.2(c)")
    } else {
        // u ≤ -(2d - 3) + √((2d - 3)² + 4|R| - 9) with u = |R^×|/(d - 1)
        let d = big(spec.factors()[0].residue());
        let (u, rem) = r.div_rem(&(&d - 1));
        debug_assert!(rem.is_zero());
        let c = &d * 2 - 3;
        let lhs = &u + &c;
        (&lhs * &lhs <= &c * &c + n * 4 - 9).then_some("Thm4.2(d)")
    };
    Verdict::theorem(case.is_some(), case, degree, false)
}

/// The explicit number-theoretic classification for `Z/nZ`, evaluated from
/// the prime factorization of `n` alone.
pub fn classify_zn(n: u64, which: GraphKind) -> Result<Verdict> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "modulus must be at least 2, got {n}"
        )));
    }
    let fac = arith::factorize(n);
    let phi: u64 = fac.iter().map(|&(p, e)| p.pow(e - 1) * (p - 1)).product();
    let prime_power = fac.len() == 1;
    match which {
        GraphKind::Unitary => {
            let case = zn_unitary_case(&fac);
            Ok(Verdict::theorem(case.is_some(), case, big(phi), n == 2))
        }
        GraphKind::Complement => {
            const SPORADIC: [u64; 9] = [30, 6, 18, 10, 12, 24, 15, 21, 35];
            let case = if prime_power {
                Some("Cor4.3(a)")
            } else if SPORADIC.contains(&n) {
                Some("Cor4.3(b)")
            } else {
                None
            };
            // prime-power complements are disjoint copies of K_m
            let vacuous = (prime_power && fac[0].1 == 1) || n == 4;
            Ok(Verdict::theorem(
                case.is_some(),
                case,
                big(n - 1 - phi),
                vacuous,
            ))
        }
    }
}

fn zn_unitary_case(fac: &[(u64, u32)]) -> Option<&'static str> {
    match *fac {
        [(2, _)] => Some("Cor3.3(a)"),
        [(_, 1 | 2)] => Some("Cor3.3(b)"),
        [(2, 2), (p2, 1), (p3, 1)] if p3 + 3 <= 2 * p2 => Some("Cor3.3(c)"),
        [(p1, 1), (p2, 1)] if p1 >= 3 && p2 + 5 <= 4 * p1 => Some("Cor3.3(d)"),
        [(2, 1), (p2, 1), (p3, 1)] if p3 + 5 <= 4 * p2 => Some("Cor3.3(d)"),
        [(2, 1 | 2), (_, 2)] => Some("Cor3.3(e)"),
        // p2 > 2^(a-3) + 1  ⇔  8(p2 - 1) > 2^a
        [(2, a), (p2, 1)] if u128::from(p2 - 1) * 8 > 1u128 << a.min(127) => Some("Cor3.3(e)"),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed::{spectrum_complement, spectrum_unitary};
    use crate::ring::{from_modulus, parse_ring_expr};

    fn spec(text: &str) -> RingSpec {
        parse_ring_expr(text).unwrap()
    }

    #[test]
    fn direct_examples() {
        let z12 = spectrum_unitary(&from_modulus(12).unwrap()).unwrap();
        let v = ramanujan_check(&z12, &4.into()).unwrap();
        assert!(v.ramanujan && !v.vacuous && v.witness.is_none());

        let f2 = spectrum_unitary(&spec("GF(2)")).unwrap();
        let v = ramanujan_check(&f2, &1.into()).unwrap();
        assert!(v.ramanujan && v.vacuous);

        let f3f13 = spectrum_unitary(&spec("GF(3) * GF(13)")).unwrap();
        let v = ramanujan_check(&f3f13, &24.into()).unwrap();
        assert!(!v.ramanujan);
        assert_eq!(v.witness, Some((-12).into()));
    }

    #[test]
    fn direct_rejects_absent_degree() {
        let z12 = spectrum_unitary(&from_modulus(12).unwrap()).unwrap();
        assert_eq!(
            ramanujan_check(&z12, &5.into()),
            Err(Error::DegreeAbsent("5".into()))
        );
        assert!(ramanujan_check(&z12, &(-4).into()).is_err());
    }

    #[test]
    fn direct_is_merge_invariant() {
        let merged = Spectrum::from_pairs([(3, 1), (1, 2), (-3, 1)]).unwrap();
        let split = Spectrum::from_pairs([(-3, 1), (1, 1), (3, 1), (1, 1)]).unwrap();
        assert_eq!(
            ramanujan_check(&merged, &3.into()).unwrap(),
            ramanujan_check(&split, &3.into()).unwrap()
        );
    }

    #[test]
    fn theorem_unitary_examples() {
        let cases = [
            ("GF(3) * GF(3) * GF(3)", Some("Thm3.2(b)")),
            ("Z/4 * GF(5) * GF(7)", Some("Thm3.2(f)")),
            ("GF(3) * GF(13)", None),
            ("Z/4", Some("Thm3.1(a)")),
            ("GF(2) * GF(3) * GF(4)", Some("Thm3.2(g)")),
            ("GF(2) * GF(3) * GF(16)", None),
            ("GF(2) * GF(3) * GF(3) * GF(4)", Some("Thm3.2(c)")),
            ("GF(4) * GF(4) * GF(4)", Some("Thm3.2(d)")),
            ("GF(2) * GF(3) * Z/9", Some("Thm3.2(e)")),
            ("GF(3) * GF(7)", Some("Thm3.2(g)")),
            ("GF(3) * GF(11)", None),
            ("Z/8 * GF(3)", Some("Thm3.2(h)")),
            ("GF(2) * GF(2)", Some("Thm3.2(a)")),
            ("Z/27", None),
            ("Z/9", Some("Thm3.1(b)")),
        ];
        for (text, expected) in cases {
            let v = classify_unitary(&spec(text));
            assert_eq!(v.case_label.as_deref(), expected, "{text}");
            assert_eq!(v.ramanujan, expected.is_some(), "{text}");
            assert_eq!(v.method, Method::Theorem);
        }
    }

    #[test]
    fn theorem_complement_examples() {
        let cases = [
            ("Z/30", Some("Thm4.2(c)")),
            ("Z/20", None),
            ("GF(3) * GF(5)", Some("Thm4.2(d)")),
            ("GF(3)[x]/x^2", Some("Thm4.1")),
            ("GF(2) * GF(2) * GF(3)", Some("Thm4.2(b)")),
            ("GF(2) * GF(2)", Some("Thm4.2(a)")),
        ];
        for (text, expected) in cases {
            let v = classify_complement(&spec(text));
            assert_eq!(v.case_label.as_deref(), expected, "{text}");
            assert_eq!(v.ramanujan, expected.is_some(), "{text}");
        }
    }

    #[test]
    fn zn_examples() {
        let v = classify_zn(12, GraphKind::Unitary).unwrap();
        assert_eq!(
            (v.ramanujan, v.case_label.as_deref()),
            (true, Some("Cor3.3(e)"))
        );
        assert!(classify_zn(140, GraphKind::Unitary).unwrap().ramanujan);
        assert!(!classify_zn(105, GraphKind::Unitary).unwrap().ramanujan);
        assert!(classify_zn(35, GraphKind::Complement).unwrap().ramanujan);
        assert!(!classify_zn(20, GraphKind::Complement).unwrap().ramanujan);
        assert!(classify_zn(1, GraphKind::Unitary).is_err());
    }

    #[test]
    fn direct_agrees_on_examples() {
        for text in [
            "Z/105",
            "Z/140",
            "GF(3) * GF(13)",
            "Z/20",
            "Z/30",
            "GF(2) * GF(2) * Z/4",
        ] {
            let s = spec(text);
            let direct = ramanujan_check(&spectrum_unitary(&s).unwrap(), s.unit_count()).unwrap();
            assert_eq!(direct.ramanujan, classify_unitary(&s).ramanujan, "{text}");
            let deg = s.order() - 1 - s.unit_count();
            let direct = ramanujan_check(&spectrum_complement(&s).unwrap(), &deg).unwrap();
            assert_eq!(
                direct.ramanujan,
                classify_complement(&s).ramanujan,
                "{text}"
            );
        }
    }

    #[test]
    fn verdict_json_shape() {
        let v = classify_unitary(&spec("Z/4"));
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"ramanujan":true,"method":"theorem","case":"Thm3.1(a)","witness":null,"degree":2,"vacuous":false}"#
        );
        assert_eq!(serde_json::from_str::<Verdict>(&json).unwrap(), v);
    }
}
