use super::{arith, canonicalize, validate_local, LocalRingSpec, RingSpec};

/// Every local descriptor with order at most `max_order`, in canonical factor order.
pub fn local_descriptors(max_order: u64, strict: bool) -> Vec<LocalRingSpec> {
    let mut out = Vec::new();
    for order in 2..=max_order {
        let Some((p, e)) = arith::prime_power(order) else {
            continue;
        };
        for c in 0..e {
            if let Ok(spec) = validate_local(order, p.pow(c), strict) {
                out.push(spec);
            }
        }
    }
    out.sort();
    out
}

/// Every canonical product of local descriptors with total order at most
/// `max_order`, each multiset exactly once.
///
/// Output is sorted by ring order, then factor count, then lexicographically
/// on the `(order, ideal_order)` factor lists.
pub fn enumerate_specs(max_order: u64, strict: bool) -> Vec<RingSpec> {
    let locals = local_descriptors(max_order, strict);
    let mut lists = Vec::new();
    let mut current = Vec::new();
    extend(&locals, 0, 1, max_order, &mut current, &mut lists);
    let mut specs: Vec<(u64, RingSpec)> = lists
        .into_iter()
        .map(|(order, factors)| (order, canonicalize(factors).expect("nonempty")))
        .collect();
    specs.sort_by(|(oa, a), (ob, b)| {
        oa.cmp(ob)
            .then(a.s().cmp(&b.s()))
            .then_with(|| a.descriptors().cmp(&b.descriptors()))
    });
    specs.into_iter().map(|(_, s)| s).collect()
}

fn extend(
    locals: &[LocalRingSpec],
    start: usize,
    product: u64,
    max_order: u64,
    current: &mut Vec<LocalRingSpec>,
    out: &mut Vec<(u64, Vec<LocalRingSpec>)>,
) {
    for (i, local) in locals.iter().enumerate().skip(start) {
        let Some(next) = product
            .checked_mul(local.order())
            .filter(|&n| n <= max_order)
        else {
            continue;
        };
        current.push(*local);
        out.push((next, current.clone()));
        extend(locals, i, next, max_order, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_enumeration() {
        let specs = enumerate_specs(4, true);
        let lists: Vec<_> = specs.iter().map(RingSpec::descriptors).collect();
        assert_eq!(
            lists,
            vec![
                vec![(2, 1)],
                vec![(3, 1)],
                vec![(4, 1)],
                vec![(4, 2)],
                vec![(2, 1), (2, 1)],
            ]
        );
        assert_eq!(enumerate_specs(2, true).len(), 1);
    }

    #[test]
    fn local_count_up_to_16() {
        // q^t <= 16 for prime powers q: 2,4,8,16 | 3,9 | 4,16 | 5 | 7 | 8 | 9 | 11 | 13 | 16
        assert_eq!(local_descriptors(16, true).len(), 15);
    }

    #[test]
    fn lax_adds_phantoms() {
        let strict: HashSet<_> = local_descriptors(64, true)
            .iter()
            .map(|l| l.descriptor())
            .collect();
        let lax: HashSet<_> = local_descriptors(64, false)
            .iter()
            .map(|l| l.descriptor())
            .collect();
        assert!(strict.is_subset(&lax));
        assert!(lax.contains(&(16, 2)) && !strict.contains(&(16, 2)));
    }

    #[test]
    fn no_duplicates_all_strict() {
        let specs = enumerate_specs(300, true);
        let unique: HashSet<_> = specs.iter().map(RingSpec::descriptors).collect();
        assert_eq!(unique.len(), specs.len());
        for spec in &specs {
            assert!(spec.order_u64().unwrap() <= 300);
            for f in spec.factors() {
                assert!(validate_local(f.order(), f.ideal_order(), true).is_ok());
            }
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(enumerate_specs(128, true), enumerate_specs(128, true));
    }
}
