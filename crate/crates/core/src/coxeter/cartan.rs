use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Family of an irreducible finite Coxeter diagram.
#[allow(missing_docs)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    I2,
}

/// An irreducible finite Coxeter type such as `A4`, `D4`, `F4` or `I2(7)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
    gonality: u32,
}

impl CartanType {
    /// Builds a validated type. `gonality` is only read for [`Family::I2`];
    /// `I2(3)` is normalized to `A2`.
    pub fn new(family: Family, rank: usize, gonality: u32) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidCartanType(msg.to_string()));
        match family {
            Family::A if rank < 1 => return bad("A_k needs k >= 1"),
            Family::B if rank < 2 => return bad("B_k needs k >= 2"),
            Family::D if rank < 4 => return bad("D_k needs k >= 4"),
            Family::E6 if rank != 6 => return bad("E6 has rank 6"),
            Family::E7 if rank != 7 => return bad("E7 has rank 7"),
            Family::E8 if rank != 8 => return bad("E8 has rank 8"),
            Family::F4 if rank != 4 => return bad("F4 has rank 4"),
            Family::G2 if rank != 2 => return bad("G2 has rank 2"),
            Family::I2 if rank != 2 => return bad("I2(m) has rank 2"),
            Family::I2 if gonality < 3 => return bad("I2(m) needs m >= 3"),
            _ => {}
        }
        if family == Family::I2 && gonality == 3 {
            return Ok(Self::a(2));
        }
        let gonality = match family {
            Family::I2 => gonality,
            _ => 0,
        };
        Ok(Self {
            family,
            rank,
            gonality,
        })
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank, 0).expect("valid A rank")
    }

    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank, 0).expect("valid B rank")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank, 0).expect("valid D rank")
    }

    pub fn dihedral(m: u32) -> Self {
        Self::new(Family::I2, 2, m).expect("valid dihedral order")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The bond label `m` of `I2(m)`; `None` for every other family.
    pub fn gonality(&self) -> Option<u32> {
        (self.family == Family::I2).then_some(self.gonality)
    }

    /// True for Weyl groups, i.e. every family except `I2(m)`.
    pub fn is_crystallographic(&self) -> bool {
        self.family != Family::I2
    }

    /// Coxeter matrix entry `m_ij` for 1-based node labels.
    ///
    /// Labels follow Bourbaki except for `D4`, whose branch node is 3 so the
    /// leaves are 1, 2 and 4.
    pub fn coxeter_entry(&self, i: usize, j: usize) -> u32 {
        assert!(i >= 1 && j >= 1 && i <= self.rank && j <= self.rank);
        if i == j {
            return 1;
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let r = self.rank;
        let chain = |i: usize, j: usize| if j == i + 1 { 3 } else { 2 };
        match self.family {
            Family::A => chain(i, j),
            Family::B => {
                if i == r - 1 && j == r {
                    4
                } else {
                    chain(i, j)
                }
            }
            Family::D if r == 4 => {
                if j == 3 || i == 3 {
                    3
                } else {
                    2
                }
            }
            Family::D => {
                if j == r {
                    if i == r - 2 {
                        3
                    } else {
                        2
                    }
                } else {
                    chain(i, j)
                }
            }
            Family::E6 | Family::E7 | Family::E8 => match (i, j) {
                (1, 3) | (2, 4) | (3, 4) => 3,
                (1, _) | (2, _) | (3, _) => 2,
                _ => chain(i, j),
            },
            Family::F4 => match (i, j) {
                (2, 3) => 4,
                _ => chain(i, j),
            },
            Family::G2 => 6,
            Family::I2 => self.gonality,
        }
    }

    /// Order of the group.
    pub fn group_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let r = self.rank;
        match self.family {
            Family::A => fact(r + 1),
            Family::B => (1u128 << r) * fact(r),
            Family::D => (1u128 << (r - 1)) * fact(r),
            Family::E6 => 51_840,
            Family::E7 => 2_903_040,
            Family::E8 => 696_729_600,
            Family::F4 => 1152,
            Family::G2 => 12,
            Family::I2 => 2 * self.gonality as u128,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            Family::E8 => write!(f, "E8"),
            Family::F4 => write!(f, "F4"),
            Family::G2 => write!(f, "G2"),
            Family::I2 => write!(f, "I2({})", self.gonality),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::InvalidCartanType(s.to_string());
        if let Some(rest) = s.strip_prefix("I2(").or_else(|| s.strip_prefix("I2 (")) {
            let m = rest.strip_suffix(')').ok_or_else(err)?;
            let m: u32 = m.trim().parse().map_err(|_| err())?;
            return Self::new(Family::I2, 2, m);
        }
        let (head, tail) = s.split_at(s.char_indices().nth(1).map(|(i, _)| i).ok_or_else(err)?);
        let rank: usize = tail.parse().map_err(|_| err())?;
        let family = match (head, rank) {
            ("A", _) => Family::A,
            ("B", _) => Family::B,
            ("D", _) => Family::D,
            ("E", 6) => Family::E6,
            ("E", 7) => Family::E7,
            ("E", 8) => Family::E8,
            ("F", 4) => Family::F4,
            ("G", 2) => Family::G2,
            _ => return Err(err()),
        };
        Self::new(family, rank, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "A1", "A7", "B3", "D4", "D6", "E6", "E7", "E8", "F4", "G2", "I2(5)", "I2(12)",
        ] {
            let t: CartanType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
    }

    #[test]
    fn rejects_bad_types() {
        for s in [
            "A0", "B1", "D3", "E5", "E9", "F3", "G3", "I2(2)", "X4", "", "I2(x)",
        ] {
            assert!(s.parse::<CartanType>().is_err(), "{s}");
        }
    }

    #[test]
    fn i2_of_three_is_a2() {
        let t: CartanType = "I2(3)".parse().unwrap();
        assert_eq!(t, CartanType::a(2));
    }

    #[test]
    fn coxeter_matrix_is_symmetric() {
        for s in ["A4", "B3", "D4", "D5", "E8", "F4", "G2", "I2(7)"] {
            let t: CartanType = s.parse().unwrap();
            for i in 1..=t.rank() {
                assert_eq!(t.coxeter_entry(i, i), 1);
                for j in 1..=t.rank() {
                    assert_eq!(t.coxeter_entry(i, j), t.coxeter_entry(j, i));
                    if i != j {
                        assert!(t.coxeter_entry(i, j) >= 2);
                    }
                }
            }
        }
    }

    #[test]
    fn d4_branch_node_is_three() {
        let t = CartanType::d(4);
        assert_eq!(t.coxeter_entry(1, 3), 3);
        assert_eq!(t.coxeter_entry(2, 3), 3);
        assert_eq!(t.coxeter_entry(4, 3), 3);
        assert_eq!(t.coxeter_entry(1, 2), 2);
    }
}
