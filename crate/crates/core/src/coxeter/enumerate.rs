use rustc_hash::FxHashMap;

use super::element::Element;
use super::system::CoxeterSystem;
use super::GroupView;
use crate::error::{Error, Result};

/// Default cap on the number of elements an enumeration may produce.
pub const DEFAULT_ENUM_CAP: u128 = 10_000_000;

/// The cap in effect: `COXSPH_ENUM_CAP` when set and parseable, otherwise
/// [`DEFAULT_ENUM_CAP`].
pub fn enumeration_cap() -> u128 {
    std::env::var("COXSPH_ENUM_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

/// Every element of a finite Coxeter group, with left and right
/// multiplication tables by the generators.
///
/// Elements are indexed in breadth-first order from the identity, so indices
/// are sorted by length and the order is deterministic.
#[derive(Debug, Clone)]
pub struct EnumeratedGroup {
    system: CoxeterSystem,
    elements: Vec<Element>,
    index: FxHashMap<Element, u32>,
    right: Vec<u32>,
    left: Vec<u32>,
}

impl EnumeratedGroup {
    /// Enumerates with the cap from [`enumeration_cap`].
    pub fn new(system: &CoxeterSystem) -> Result<Self> {
        Self::with_cap(system, enumeration_cap())
    }

    pub fn with_cap(system: &CoxeterSystem, cap: u128) -> Result<Self> {
        let size = system.order();
        if size > cap {
            return Err(Error::EnumerationCap { size, cap });
        }
        let r = system.rank();
        let mut elements = vec![system.identity()];
        let mut index = FxHashMap::default();
        index.insert(system.identity(), 0u32);
        let mut right = Vec::with_capacity(size as usize * r);
        let mut k = 0;
        while k < elements.len() {
            for i in 1..=r {
                let next = system.right_mul_unchecked(&elements[k], i);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = elements.len() as u32;
                        index.insert(next.clone(), id);
                        elements.push(next);
                        id
                    }
                };
                right.push(id);
            }
            k += 1;
        }
        debug_assert_eq!(elements.len() as u128, size);
        let left = elements
            .iter()
            .flat_map(|w| {
                (1..=r)
                    .map(|i| index[&system.left_mul_unchecked(i, w)])
                    .collect::<Vec<_>>()
            })
            .collect();
        Ok(Self {
            system: system.clone(),
            elements,
            index,
            right,
            left,
        })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, id: u32) -> &Element {
        &self.elements[id as usize]
    }

    pub fn id_of(&self, w: &Element) -> Option<u32> {
        self.index.get(w).copied()
    }

    /// Id of `w s_i`.
    pub fn right_mul_id(&self, id: u32, i: usize) -> u32 {
        self.right[id as usize * self.system.rank() + i - 1]
    }

    /// Id of `s_i w`.
    pub fn left_mul_id(&self, i: usize, id: u32) -> u32 {
        self.left[id as usize * self.system.rank() + i - 1]
    }

    pub fn length_of(&self, id: u32) -> usize {
        self.elements[id as usize].length()
    }

    pub fn left_descents_of(&self, id: u32) -> Vec<usize> {
        let l = self.length_of(id);
        (1..=self.system.rank())
            .filter(|&i| self.length_of(self.left_mul_id(i, id)) < l)
            .collect()
    }

    pub fn ids(&self) -> impl Iterator<Item = u32> + '_ {
        0..self.elements.len() as u32
    }
}

impl GroupView for EnumeratedGroup {
    type Elem = u32;

    fn rank(&self) -> usize {
        self.system.rank()
    }

    fn length(&self, w: &u32) -> usize {
        self.length_of(*w)
    }

    fn is_right_descent(&self, w: &u32, i: usize) -> bool {
        self.length_of(self.right_mul_id(*w, i)) < self.length_of(*w)
    }

    fn right_mul(&self, w: &u32, i: usize) -> u32 {
        self.right_mul_id(*w, i)
    }

    fn is_left_descent(&self, w: &u32, i: usize) -> bool {
        self.length_of(self.left_mul_id(i, *w)) < self.length_of(*w)
    }

    fn left_mul(&self, i: usize, w: &u32) -> u32 {
        self.left_mul_id(i, *w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CartanType;

    #[test]
    fn cap_is_enforced() {
        let sys = CoxeterSystem::new(CartanType::a(5));
        assert!(matches!(
            EnumeratedGroup::with_cap(&sys, 100),
            Err(Error::EnumerationCap {
                size: 720,
                cap: 100
            })
        ));
    }

    #[test]
    fn bfs_order_is_sorted_by_length() {
        let sys = CoxeterSystem::new("B3".parse().unwrap());
        let g = EnumeratedGroup::new(&sys).unwrap();
        assert_eq!(g.len(), 48);
        assert!(g
            .ids()
            .collect::<Vec<_>>()
            .windows(2)
            .all(|p| g.length_of(p[0]) <= g.length_of(p[1])));
    }
}
