use std::sync::Arc;

use num_complex::Complex64;

use super::{unit_root, CharacterSpec};
use crate::error::{Error, Result};
use crate::gring::{RingElement, RingSpec};

/// Largest ring degree for which the unit group is decomposed by brute force.
pub const MAX_UNIT_GROUP_DEGREE: u32 = 4;

/// Decomposition of `R*` as a direct product of cyclic groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroupStructure {
    pub generators: Vec<RingElement>,
    pub orders: Vec<u32>,
    /// Exponent vector of each unit, indexed by ring element index.
    exponents: Vec<Option<Vec<u32>>>,
}

impl UnitGroupStructure {
    /// Greedy decomposition: repeatedly adjoin a unit of largest order whose
    /// cyclic group meets the current subgroup trivially, then check that
    /// the exponent map is a bijection onto `R*`.
    pub fn new(ring: &RingSpec) -> Result<Self> {
        if ring.m() > MAX_UNIT_GROUP_DEGREE {
            return Err(Error::UnitGroupTooLarge {
                m: ring.m(),
                max: MAX_UNIT_GROUP_DEGREE,
            });
        }
        let size = ring.size() as usize;
        let units: Vec<RingElement> = ring.elements().filter(|&y| ring.is_unit(y)).collect();
        let unit_count = units.len();

        let cyclic = |g: RingElement| -> Vec<u32> {
            let mut powers = vec![1u32];
            let mut x = g;
            while x != ring.one() {
                powers.push(x.index());
                x = ring.mul(x, g);
            }
            powers
        };
        let mut by_order: Vec<(RingElement, Vec<u32>)> =
            units.iter().map(|&g| (g, cyclic(g))).collect();
        by_order.sort_by(|a, b| {
            b.1.len()
                .cmp(&a.1.len())
                .then(a.0.index().cmp(&b.0.index()))
        });

        let mut in_subgroup = vec![false; size];
        in_subgroup[1] = true;
        let mut subgroup_size = 1usize;
        let (mut generators, mut orders) = (Vec::new(), Vec::new());
        while subgroup_size < unit_count {
            let pick = by_order.iter().find(|(g, powers)| {
                !in_subgroup[g.index() as usize]
                    && powers.iter().skip(1).all(|&x| !in_subgroup[x as usize])
            });
            let Some((g, powers)) = pick else {
                return Err(Error::GroupDecompositionFailed);
            };
            let members: Vec<u32> = (0..size as u32)
                .filter(|&i| in_subgroup[i as usize])
                .collect();
            for &h in &members {
                for &x in powers.iter().skip(1) {
                    in_subgroup[ring.mul_idx(h, x) as usize] = true;
                }
            }
            subgroup_size *= powers.len();
            generators.push(*g);
            orders.push(powers.len() as u32);
        }

        let mut exponents: Vec<Option<Vec<u32>>> = vec![None; size];
        let mut filled = 0usize;
        let mut counter = vec![0u32; orders.len()];
        loop {
            let value = counter.iter().zip(&generators).fold(1u32, |acc, (&e, &g)| {
                ring.mul_idx(acc, ring.pow(g, e as u64).index())
            });
            let slot = &mut exponents[value as usize];
            if slot.is_some() {
                return Err(Error::GroupDecompositionFailed);
            }
            *slot = Some(counter.clone());
            filled += 1;
            let Some(pos) = (0..counter.len()).find(|&i| counter[i] + 1 < orders[i]) else {
                break;
            };
            counter[pos] += 1;
            counter[..pos].iter_mut().for_each(|c| *c = 0);
        }
        if filled != unit_count {
            return Err(Error::GroupDecompositionFailed);
        }
        Ok(Self {
            generators,
            orders,
            exponents,
        })
    }

    /// `|R*|`.
    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&n| n as u64).product()
    }

    /// `None` for non-units.
    pub fn exponents(&self, y: RingElement) -> Option<&[u32]> {
        self.exponents.get(y.index() as usize)?.as_deref()
    }

    /// Mixed-radix digits of a character parameter, least significant first.
    pub fn parameter_digits(&self, j: u64) -> Vec<u32> {
        let mut rest = j % self.order();
        self.orders
            .iter()
            .map(|&n| {
                let d = (rest % n as u64) as u32;
                rest /= n as u64;
                d
            })
            .collect()
    }

    pub(crate) fn character_value(&self, j: u64, exponents: &[u32]) -> Complex64 {
        let total = self.order();
        let numerator: u64 = self
            .parameter_digits(j)
            .iter()
            .zip(exponents)
            .zip(&self.orders)
            .map(|((&d, &e), &n)| (d as u64 * e as u64 % n as u64) * (total / n as u64))
            .sum();
        unit_root((numerator % total) as i64, total)
    }
}

/// All `|R*|` characters of the unit group, trivial first.
pub fn unit_group_characters(ring: &RingSpec) -> Result<Vec<CharacterSpec<'_>>> {
    let units = Arc::new(UnitGroupStructure::new(ring)?);
    Ok((0..units.order())
        .map(|j| CharacterSpec::ring_unit(ring, Arc::clone(&units), j))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::TrivialConvention;

    #[test]
    fn unit_counts() {
        for m in 1..=4 {
            let r = RingSpec::new(m).unwrap();
            let s = UnitGroupStructure::new(&r).unwrap();
            assert_eq!(s.order(), 4u64.pow(m) - 2u64.pow(m));
        }
        let r1 = RingSpec::new(1).unwrap();
        assert_eq!(unit_group_characters(&r1).unwrap().len(), 2);
        let r2 = RingSpec::new(2).unwrap();
        assert_eq!(unit_group_characters(&r2).unwrap().len(), 12);
        let r5 = RingSpec::new(5).unwrap();
        assert_eq!(
            UnitGroupStructure::new(&r5).unwrap_err(),
            Error::UnitGroupTooLarge { m: 5, max: 4 }
        );
    }

    #[test]
    fn trivial_character_conventions() {
        let r = RingSpec::new(2).unwrap();
        let chars = unit_group_characters(&r).unwrap();
        let trivial = &chars[0];
        for y in r.elements() {
            let unit_supported = trivial.evaluate(y).unwrap();
            let all_ones = trivial
                .evaluate_with(y, TrivialConvention::AllOnes)
                .unwrap();
            assert_eq!(all_ones, Complex64::new(1.0, 0.0));
            let expected = if r.is_unit(y) { 1.0 } else { 0.0 };
            assert_eq!(unit_supported, Complex64::new(expected, 0.0));
        }
    }

    #[test]
    fn characters_are_homomorphisms() {
        let r = RingSpec::new(2).unwrap();
        let units: Vec<_> = r.elements().filter(|&y| r.is_unit(y)).collect();
        for psi in unit_group_characters(&r).unwrap() {
            for &u in &units {
                for &v in &units {
                    let lhs = psi.evaluate(r.mul(u, v)).unwrap();
                    let rhs = psi.evaluate(u).unwrap() * psi.evaluate(v).unwrap();
                    assert!((lhs - rhs).norm() < 1e-12);
                }
            }
        }
    }
}
