use serde::Serialize;

use super::families::is_prime;
use super::FiniteGroup;

/// Group-side predicates referenced by the classification claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupProfile {
    pub order: usize,
    pub is_abelian: bool,
    pub center_size: usize,
    pub exponent: u64,
    pub is_full_exponent: bool,
    pub is_p_group: bool,
    /// The prime `p` when `|G| = p^k`, `k >= 1`.
    pub prime: Option<u64>,
    pub is_prime_order: bool,
    pub is_prime_power_order: bool,
    /// Every element order is 1 or a prime power.
    pub is_eppo: bool,
    pub is_even_order: bool,
    pub all_nonidentity_self_inverse: bool,
    pub no_nonidentity_self_inverse: bool,
    pub count_order_two: usize,
    pub is_cyclic: bool,
}

/// `|G| = |Z(G)| + sum of non-central class sizes`, with each class size
/// computed as the index `|G| / |C_G(x)|` of a representative's centralizer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEquation {
    pub order: usize,
    pub center_size: usize,
    /// Non-central class sizes, classes ordered by smallest element.
    pub class_sizes: Vec<usize>,
    pub holds: bool,
}

/// Prime `p` with `n = p^k` for some `k >= 1`.
pub(crate) fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

pub fn profile(g: &FiniteGroup) -> GroupProfile {
    let n = g.order();
    let orders = g.element_orders();
    let center_size = g.center().len();
    let exponent = g.exponent();
    let prime = prime_power_base(n as u64);
    let count_order_two = orders.iter().filter(|&&o| o == 2).count();
    let non_identity_self_inverse = (1..n).filter(|&i| g.inverses()[i] == i).count();
    GroupProfile {
        order: n,
        is_abelian: center_size == n,
        center_size,
        exponent,
        is_full_exponent: orders.contains(&exponent),
        is_p_group: prime.is_some(),
        prime,
        is_prime_order: is_prime(n as u64),
        is_prime_power_order: prime.is_some(),
        is_eppo: orders.iter().all(|&o| o == 1 || prime_power_base(o).is_some()),
        is_even_order: n.is_multiple_of(2),
        all_nonidentity_self_inverse: non_identity_self_inverse == n - 1,
        no_nonidentity_self_inverse: non_identity_self_inverse == 0,
        count_order_two,
        is_cyclic: orders.contains(&(n as u64)),
    }
}

pub(super) fn class_equation(g: &FiniteGroup) -> ClassEquation {
    let n = g.order();
    let center_size = g.center().len();
    let mut class_sizes = Vec::new();
    let mut sizes_match = true;
    for class in g.conjugacy_classes() {
        if class.len() == 1 {
            continue;
        }
        let rep = *class.first().expect("classes are non-empty");
        let centralizer = g.centralizer(rep).expect("representative in range").len();
        let index = n / centralizer;
        sizes_match &= index * centralizer == n && index == class.len();
        class_sizes.push(index);
    }
    let holds = sizes_match && center_size + class_sizes.iter().sum::<usize>() == n;
    ClassEquation { order: n, center_size, class_sizes, holds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_family, DEFAULT_ORDER_CAP};
    use std::collections::BTreeSet;

    fn build(s: &str) -> FiniteGroup {
        build_family(&s.parse().unwrap(), DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn symmetric_three_is_eppo_not_p_group() {
        let p = profile(&build("symmetric:3"));
        assert!(p.is_eppo);
        assert!(!p.is_p_group);
        assert!(!p.is_full_exponent);
        assert_eq!(p.exponent, 6);
    }

    #[test]
    fn klein_four() {
        let p = profile(&build("ea:2,2"));
        assert!(p.all_nonidentity_self_inverse);
        assert_eq!(p.exponent, 2);
        assert!(!p.is_cyclic);
        assert_eq!(p.prime, Some(2));
    }

    #[test]
    fn cyclic_six() {
        let p = profile(&build("cyclic:6"));
        assert!(p.is_full_exponent);
        assert!(p.is_even_order);
        assert!(!p.is_p_group);
        assert!(!p.is_eppo);
        assert_eq!(p.count_order_two, 1);
        assert!(p.is_cyclic);
    }

    #[test]
    fn trivial_group_profile() {
        let p = profile(&build("cyclic:1"));
        assert!(!p.is_p_group && !p.is_prime_order);
        assert!(p.all_nonidentity_self_inverse && p.no_nonidentity_self_inverse);
        assert!(p.is_eppo && p.is_cyclic && p.is_full_exponent);
    }

    #[test]
    fn centers_and_centralizers() {
        let d3 = build("dihedral:3");
        assert_eq!(d3.center(), BTreeSet::from([0]));
        // index 3 is the reflection s, index 1 the rotation r
        assert_eq!(d3.centralizer(3).unwrap(), BTreeSet::from([0, 3]));
        assert_eq!(d3.centralizer(1).unwrap(), BTreeSet::from([0, 1, 2]));
        assert_eq!(d3.centralizer(0).unwrap().len(), 6);
        assert_eq!(build("cyclic:7").center().len(), 7);
        assert_eq!(build("dicyclic:2").center().len(), 2);
    }

    #[test]
    fn class_equations() {
        let ab = build("cyclic:12").class_equation();
        assert!(ab.holds);
        assert_eq!((ab.center_size, ab.class_sizes.as_slice()), (12, &[][..]));

        let d3 = build("dihedral:3").class_equation();
        assert!(d3.holds);
        assert_eq!((d3.center_size, d3.class_sizes), (1, vec![2, 3]));

        let q8 = build("dicyclic:2").class_equation();
        assert!(q8.holds);
        assert_eq!((q8.center_size, q8.class_sizes), (2, vec![2, 2, 2]));

        let s4 = build("symmetric:4").class_equation();
        assert!(s4.holds);
        let mut sizes = s4.class_sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 6, 6, 8]);
    }

    #[test]
    fn prime_power_base_values() {
        assert_eq!(prime_power_base(1), None);
        assert_eq!(prime_power_base(2), Some(2));
        assert_eq!(prime_power_base(27), Some(3));
        assert_eq!(prime_power_base(12), None);
        assert_eq!(prime_power_base(49), Some(7));
    }
}
