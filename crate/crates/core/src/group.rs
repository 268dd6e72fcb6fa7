//! Finite subgroups of `PGL_2`: closure, element orders, and isomorphism type.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::projline::Mobius;

/// Isomorphism type of a finite subgroup of `PGL_2`. Dihedral groups carry their order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupName {
    Cyclic(usize),
    Dihedral(usize),
    A4,
    S4,
    A5,
    /// Any other finite group, such as those containing elements of order divisible by the
    /// characteristic.
    Other(usize),
}

impl GroupName {
    pub fn order(&self) -> usize {
        match *self {
            GroupName::Cyclic(n) | GroupName::Dihedral(n) | GroupName::Other(n) => n,
            GroupName::A4 => 12,
            GroupName::S4 => 24,
            GroupName::A5 => 60,
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(n) => write!(f, "C{n}"),
            GroupName::Dihedral(n) => write!(f, "D{n}"),
            GroupName::A4 => f.write_str("A4"),
            GroupName::S4 => f.write_str("S4"),
            GroupName::A5 => f.write_str("A5"),
            GroupName::Other(n) => write!(f, "order {n}"),
        }
    }
}

/// Orders of every element, for a set already known to be a finite group.
pub fn element_orders<F: Field>(f: &F, elements: &[Mobius<F::Elem>]) -> Vec<usize> {
    let n = elements.len();
    elements.iter().map(|s| s.order(f, n).expect("finite group element")).collect()
}

pub fn is_group<F: Field>(f: &F, elements: &[Mobius<F::Elem>]) -> bool {
    let set: BTreeSet<&Mobius<F::Elem>> = elements.iter().collect();
    if !set.contains(&Mobius::identity(f)) {
        return false;
    }
    elements.iter().all(|a| elements.iter().all(|b| set.contains(&a.compose(f, b))))
}

/// Classifies a finite group from its order and element orders. Among finite subgroups of
/// `PGL_2` in coprime characteristic this determines the group.
pub fn group_structure<F: Field>(f: &F, elements: &[Mobius<F::Elem>]) -> Result<GroupName> {
    if !is_group(f, elements) {
        return Err(Error::NotClosed);
    }
    let n = elements.len();
    let orders = element_orders(f, elements);
    let max = orders.iter().copied().max().unwrap_or(1);
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    Ok(if max == n {
        GroupName::Cyclic(n)
    } else if n >= 4 && n % 2 == 0 && max == n / 2 && involutions > n / 2 - 1 && is_dihedral(f, elements, &orders) {
        GroupName::Dihedral(n)
    } else {
        match (n, max) {
            (12, 3) if involutions == 3 => GroupName::A4,
            (24, 4) if involutions == 9 => GroupName::S4,
            (60, 5) if involutions == 15 => GroupName::A5,
            _ => GroupName::Other(n),
        }
    })
}

fn is_dihedral<F: Field>(f: &F, elements: &[Mobius<F::Elem>], orders: &[usize]) -> bool {
    let n = elements.len();
    let rot = orders.iter().position(|&o| o == n / 2).unwrap();
    let a = &elements[rot];
    let a_inv = a.inverse(f);
    elements
        .iter()
        .zip(orders)
        .any(|(b, &o)| o == 2 && b.compose(f, a).compose(f, b) == a_inv && (n > 4 || b != a))
}

/// The subgroup generated by `gens`.
pub fn closure<F: Field>(f: &F, gens: &[Mobius<F::Elem>], max: usize) -> Option<Vec<Mobius<F::Elem>>> {
    let mut set: BTreeSet<Mobius<F::Elem>> = BTreeSet::new();
    set.insert(Mobius::identity(f));
    let mut frontier: Vec<Mobius<F::Elem>> = set.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(f, g);
            if set.insert(y.clone()) {
                if set.len() > max {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    Some(set.into_iter().collect())
}

/// Groups that can occur as `Aut` of a map over a field of characteristic zero with only
/// quadratic points in play, smallest first: cyclic of order 1, 2, 3, 4, 6 and dihedral of order
/// 4, 6, 8, 12.
pub const CANDIDATE_GROUPS: [GroupName; 9] = [
    GroupName::Cyclic(1),
    GroupName::Cyclic(2),
    GroupName::Cyclic(3),
    GroupName::Cyclic(4),
    GroupName::Dihedral(4),
    GroupName::Cyclic(6),
    GroupName::Dihedral(6),
    GroupName::Dihedral(8),
    GroupName::Dihedral(12),
];

/// Whether the finite group `elements` has a subgroup isomorphic to `target` (cyclic or
/// dihedral).
pub fn contains_subgroup<F: Field>(f: &F, elements: &[Mobius<F::Elem>], target: GroupName) -> bool {
    let orders = element_orders(f, elements);
    let by_order = |k: usize| elements.iter().zip(&orders).filter(move |(_, &o)| o == k).map(|(s, _)| s);
    match target {
        GroupName::Cyclic(1) => true,
        GroupName::Cyclic(n) => orders.contains(&n),
        GroupName::Dihedral(4) => {
            let inv: Vec<_> = by_order(2).collect();
            inv.iter().enumerate().any(|(i, a)| {
                inv[i + 1..].iter().any(|b| a.compose(f, b) == b.compose(f, a))
            })
        }
        GroupName::Dihedral(n) => {
            let m = n / 2;
            by_order(m).any(|a| {
                let a_inv = a.inverse(f);
                by_order(2).any(|b| b.compose(f, a).compose(f, b) == a_inv)
            })
        }
        other => group_structure(f, elements) == Ok(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use num_rational::BigRational;

    fn qmob(m: [i64; 4]) -> Mobius<BigRational> {
        Mobius::new(&Rationals, m.map(|x| Rationals.int(x))).unwrap()
    }

    #[test]
    fn trivial_group() {
        let q = Rationals;
        assert_eq!(group_structure(&q, &[Mobius::identity(&q)]), Ok(GroupName::Cyclic(1)));
    }

    #[test]
    fn klein_four_is_dihedral() {
        let q = Rationals;
        let g = [qmob([1, 0, 0, 1]), qmob([-1, 0, 0, 1]), qmob([0, 1, 1, 0]), qmob([0, -1, 1, 0])];
        assert_eq!(group_structure(&q, &g), Ok(GroupName::Dihedral(4)));
        assert!(contains_subgroup(&q, &g, GroupName::Dihedral(4)));
        assert!(!contains_subgroup(&q, &g, GroupName::Cyclic(4)));
    }

    #[test]
    fn order_six_dihedral() {
        let q = Rationals;
        let g = [
            qmob([1, 0, 0, 1]),
            qmob([-1, 0, 1, 1]),
            qmob([0, 1, 1, 0]),
            qmob([-1, -1, 0, 1]),
            qmob([-1, -1, 1, 0]),
            qmob([0, -1, 1, 1]),
        ];
        let mut orders = element_orders(&q, &g);
        orders.sort_unstable();
        assert_eq!(orders, [1, 2, 2, 2, 3, 3]);
        assert_eq!(group_structure(&q, &g), Ok(GroupName::Dihedral(6)));
        assert_eq!(closure(&q, &g[1..3], 10).unwrap().len(), 6);
    }

    #[test]
    fn missing_products_are_reported() {
        let q = Rationals;
        assert_eq!(group_structure(&q, &[qmob([1, 0, 0, 1]), qmob([1, 1, 0, 1])]), Err(Error::NotClosed));
    }

    #[test]
    fn pgl2_of_small_fields() {
        let f = Fp::new(3).unwrap();
        let all: Vec<_> = closure(&f, &[Mobius::new(&f, [1, 1, 0, 1]).unwrap(), Mobius::new(&f, [0, 1, 1, 0]).unwrap(), Mobius::new(&f, [2, 0, 0, 1]).unwrap()], 100).unwrap();
        assert_eq!(all.len(), 24);
        assert_eq!(group_structure(&f, &all), Ok(GroupName::S4));
        let f = Fp::new(2).unwrap();
        let all = closure(&f, &[Mobius::new(&f, [1, 1, 0, 1]).unwrap(), Mobius::new(&f, [0, 1, 1, 0]).unwrap()], 100).unwrap();
        assert_eq!(group_structure(&f, &all), Ok(GroupName::Dihedral(6)));
        let f = Fp::new(5).unwrap();
        let all = closure(&f, &[Mobius::new(&f, [1, 1, 0, 1]).unwrap(), Mobius::new(&f, [0, 1, 1, 0]).unwrap(), Mobius::new(&f, [2, 0, 0, 1]).unwrap()], 200).unwrap();
        assert_eq!(all.len(), 120);
        assert_eq!(group_structure(&f, &all), Ok(GroupName::Other(120)));
    }
}
