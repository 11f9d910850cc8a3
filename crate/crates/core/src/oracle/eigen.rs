use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::scalar::EigenScalar;
use crate::spectrum::Spectrum;

use super::graph::Graph;
use super::walks::exact_moments;

/// Integer spectrum of `g` via a double-precision eigensolve.
pub fn integral_spectrum(g: &Graph) -> Result<Spectrum> {
    integral_spectrum_with::<f64>(g)
}

/// Eigensolve in `F`, round to integers, then confirm the rounded spectrum
/// reproduces the exact closed-walk counts for `k = 0..=distinct + 1`.
pub fn integral_spectrum_with<F: EigenScalar>(g: &Graph) -> Result<Spectrum> {
    let n = g.n();
    let matrix = DMatrix::<F>::from_fn(n, n, |i, j| {
        if g.has_edge(i, j) {
            F::one()
        } else {
            F::zero()
        }
    });
    let eigenvalues = matrix.symmetric_eigenvalues();
    let degree = F::from(g.max_degree()).expect("degree fits");
    let tolerance = F::integrality_tolerance() * Float::max(F::one(), degree);
    let mut values = Vec::with_capacity(n);
    for &x in eigenvalues.iter() {
        let rounded = Float::round(x);
        let residual = Float::abs(x - rounded);
        if residual >= tolerance {
            return Err(Error::NotIntegral(format!(
                "eigenvalue {x} is {residual} from the nearest integer"
            )));
        }
        let v = rounded
            .to_i64()
            .ok_or_else(|| Error::NotIntegral(format!("eigenvalue {x} out of range")))?;
        values.push((BigInt::from(v), BigInt::from(1)));
    }
    let spectrum = Spectrum::from_multiset(values)?;
    let kmax = spectrum.distinct() as u32 + 1;
    let exact = exact_moments(g, kmax);
    for (k, m) in exact.iter().enumerate() {
        let got = spectrum.moment(k as u32);
        if &got != m {
            return Err(Error::NotIntegral(format!(
                "rounded spectrum gives moment {got} at k = {k}, the graph has {m}"
            )));
        }
    }
    Ok(spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{
        cayley_graph, complete_graph, cycle_graph, realize_ring, transform, Transform,
    };
    use crate::ring::parse_ring_expr;

    fn spectrum(pairs: &[(i64, u64)]) -> Spectrum {
        Spectrum::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn anchors() {
        assert_eq!(
            integral_spectrum(&complete_graph(5)).unwrap(),
            spectrum(&[(4, 1), (-1, 4)])
        );
        let ring = realize_ring(&parse_ring_expr("Z/4 x GF(2)").unwrap()).unwrap();
        assert_eq!(
            integral_spectrum(&cayley_graph(&ring)).unwrap(),
            spectrum(&[(2, 2), (0, 4), (-2, 2)])
        );
        let f3 = realize_ring(&parse_ring_expr("GF(3)").unwrap()).unwrap();
        let line = transform(&cayley_graph(&f3), Transform::Line).unwrap();
        assert_eq!(
            integral_spectrum(&line).unwrap(),
            spectrum(&[(2, 1), (-1, 2)])
        );
    }

    #[test]
    fn single_precision_agrees() {
        let g = transform(&complete_graph(7), Transform::Line).unwrap();
        assert_eq!(
            integral_spectrum_with::<f32>(&g).unwrap(),
            integral_spectrum(&g).unwrap()
        );
    }

    #[test]
    fn rejects_non_integral() {
        assert!(matches!(
            integral_spectrum(&cycle_graph(5)),
            Err(Error::NotIntegral(_))
        ));
    }

    #[test]
    fn moments_match_spectrum() {
        let g = cayley_graph(&realize_ring(&parse_ring_expr("Z/12").unwrap()).unwrap());
        let s = integral_spectrum(&g).unwrap();
        for (k, m) in exact_moments(&g, 10).into_iter().enumerate() {
            assert_eq!(s.moment(k as u32), m);
        }
    }
}
