use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::WalkCount;

use super::graph::Graph;

/// `trace(A^k)` for `k = 0..=kmax`, exactly.
///
/// Picks the narrowest accumulator that provably holds `n · Δ^kmax`.
pub fn exact_moments(g: &Graph, kmax: u32) -> Vec<BigInt> {
    let bound = walk_bound(g, kmax);
    if bound <= BigInt::from(u64::MAX) {
        widen(walk_moments::<u64>(g, kmax).expect("bound checked"))
    } else if bound <= BigInt::from(u128::MAX) {
        widen(walk_moments::<u128>(g, kmax).expect("bound checked"))
    } else {
        walk_moments::<BigInt>(g, kmax).expect("unbounded")
    }
}

fn widen<T: WalkCount>(v: Vec<T>) -> Vec<BigInt> {
    v.into_iter().map(Into::into).collect()
}

pub fn exact_moment(g: &Graph, k: u32) -> BigInt {
    exact_moments(g, k).pop().expect("kmax + 1 entries")
}

fn walk_bound(g: &Graph, kmax: u32) -> BigInt {
    BigInt::from(g.n()) * num_traits::pow(BigInt::from(g.max_degree()), kmax as usize)
}

/// Closed-walk counts accumulated in `T`.
///
/// For each start vertex `v` the vectors `x_j = A^j e_v` are built for
/// `j ≤ ⌈kmax/2⌉`, and `(A^k)_vv = x_a · x_b` with `a = ⌊k/2⌋`, `b = k - a`.
/// Fails with [`Error::TooLarge`] if `T` might overflow.
pub fn walk_moments<T: WalkCount>(g: &Graph, kmax: u32) -> Result<Vec<T>> {
    if let Some(max) = T::max_value() {
        let bound = walk_bound(g, kmax);
        if bound > max {
            return Err(Error::TooLarge(format!(
                "walk counts up to {bound} overflow the accumulator"
            )));
        }
    }
    let n = g.n();
    let half = kmax.div_ceil(2) as usize;
    let mut totals = vec![T::zero(); kmax as usize + 1];
    let mut x = vec![vec![T::zero(); n]; half + 1];
    for v in 0..n {
        for row in x.iter_mut() {
            row.iter_mut().for_each(|c| *c = T::zero());
        }
        x[0][v] = T::one();
        for j in 0..half {
            let (done, rest) = x.split_at_mut(j + 1);
            let (cur, next) = (&done[j], &mut rest[0]);
            for (u, c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for &w in g.neighbors(u) {
                    next[w as usize] += c;
                }
            }
        }
        for (k, total) in totals.iter_mut().enumerate() {
            let a = k / 2;
            let b = k - a;
            for (p, q) in x[a].iter().zip(&x[b]) {
                if !p.is_zero() && !q.is_zero() {
                    *total += &(p.clone() * q.clone());
                }
            }
        }
    }
    Ok(totals)
}

/// Number of 3- or 4-cycles, from the closed-walk counts.
pub fn count_cycles(g: &Graph, length: u32) -> Result<BigInt> {
    let moments = exact_moments(g, length);
    let (numerator, divisor) = match length {
        3 => (moments[3].clone(), 6),
        4 => {
            let edges = BigInt::from(g.edge_count());
            let pairs: BigInt = g
                .degrees()
                .into_iter()
                .map(|d| binomial(BigInt::from(d), BigInt::from(2)))
                .sum();
            (&moments[4] - edges * 2 - pairs * 4, 8)
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "cycle length must be 3 or 4, got {length}"
            )))
        }
    };
    let (q, r) = numerator.div_rem(&BigInt::from(divisor));
    if !r.is_zero() || q < BigInt::zero() {
        return Err(Error::Internal(format!(
            "{length}-cycle count {numerator}/{divisor} is not a non-negative integer"
        )));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{
        cayley_graph, complete_graph, cycle_graph, realize_ring, transform, Transform,
    };
    use crate::ring::from_modulus;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(exact_moment(&cycle_graph(6), 2), BigInt::from(12));
        assert_eq!(exact_moment(&complete_graph(4), 3), BigInt::from(24));
        assert_eq!(exact_moments(&complete_graph(3), 4), big(&[3, 0, 6, 6, 18]));
        assert_eq!(exact_moments(&Graph::empty(0), 3), big(&[0, 0, 0, 0]));
    }

    #[test]
    fn z12_fourth_moment() {
        let g = cayley_graph(&realize_ring(&from_modulus(12).unwrap()).unwrap());
        assert_eq!(exact_moment(&g, 4), BigInt::from(576));
    }

    #[test]
    fn accumulators_agree() {
        let g = transform(&complete_graph(6), Transform::Line).unwrap();
        let a: Vec<BigInt> = walk_moments::<u64>(&g, 9)
            .unwrap()
            .into_iter()
            .map(Into::into)
            .collect();
        let b: Vec<BigInt> = walk_moments::<u128>(&g, 9)
            .unwrap()
            .into_iter()
            .map(Into::into)
            .collect();
        let c = walk_moments::<BigInt>(&g, 9).unwrap();
        assert_eq!(a, c);
        assert_eq!(b, c);
    }

    #[test]
    fn overflow_is_refused() {
        let g = complete_graph(40);
        assert!(matches!(
            walk_moments::<u64>(&g, 13),
            Err(Error::TooLarge(_))
        ));
        let wide = exact_moment(&g, 13);
        // K_n: trace A^k = (n-1)^k + (n-1)(-1)^k
        let expected = num_traits::pow(BigInt::from(39), 13) - 39;
        assert_eq!(wide, expected);
    }

    #[test]
    fn cycle_anchors() {
        let oct = transform(&complete_graph(4), Transform::Line).unwrap();
        assert_eq!(
            count_cycles(&complete_graph(4), 3).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            count_cycles(&complete_graph(5), 3).unwrap(),
            BigInt::from(10)
        );
        assert_eq!(count_cycles(&oct, 3).unwrap(), BigInt::from(8));
        assert_eq!(count_cycles(&oct, 4).unwrap(), BigInt::from(15));
        assert_eq!(count_cycles(&cycle_graph(6), 3).unwrap(), BigInt::zero());
        assert_eq!(count_cycles(&cycle_graph(4), 4).unwrap(), BigInt::from(1));
        assert!(count_cycles(&oct, 5).is_err());
    }

    #[test]
    fn quadrangles_by_enumeration() {
        // brute force: choose 4 vertices, count the 4-cycles they span
        let oct = transform(&complete_graph(4), Transform::Line).unwrap();
        let n = oct.n();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        for [w, x, y, z] in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                            if oct.has_edge(w, x)
                                && oct.has_edge(x, y)
                                && oct.has_edge(y, z)
                                && oct.has_edge(z, w)
                            {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(count, 15);
    }
}
