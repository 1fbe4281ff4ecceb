use super::cartan::CartanType;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Repr {
    /// Signed permutation of the positive roots: entry `k` is `±(j + 1)` when
    /// `w(alpha_k) = ±alpha_j`.
    Roots(Box<[i16]>),
    /// Alternating word `s_start s_other s_start ...` of length `len`;
    /// the identity is `start = 0`.
    Dihedral { start: u8, len: u32 },
}

/// A group element in canonical form, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    cartan_type: CartanType,
    repr: Repr,
    length: u32,
}

impl Element {
    pub(crate) fn new(cartan_type: CartanType, repr: Repr, length: u32) -> Self {
        Self {
            cartan_type,
            repr,
            length,
        }
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    /// Coxeter length, i.e. the number of inversions on the positive roots.
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}
