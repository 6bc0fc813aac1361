//! Simple types and their Cartan matrices.
//!
//! Convention: `a[i][j] = 2 (α_i, α_j) / (α_j, α_j)`, i.e. row `i` of the
//! matrix is the simple root `α_i` written in fundamental-weight coordinates.
//! Nodes follow the Bourbaki numbering. Under this convention the matrix of
//! `B_n` has `a[n-2][n-1] = -2` (the short root is the last node) and the
//! matrix of `G_2` is `[[2, -1], [-3, 2]]`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// Classification label of a simple Lie algebra, e.g. `G2` or `E8`.
///
/// Only admissible pairs can be constructed: `A_n (n≥1)`, `B_n, C_n (n≥2)`,
/// `D_n (n≥4)`, `E_6..E_8`, `F_4`, `G_2`. Low-rank coincidences such as
/// `D_3 = A_3` are rejected rather than aliased.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.admits(rank) {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InadmissibleType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Type of the Langlands dual: `B_n` and `C_n` swap, everything else is
    /// self-dual up to node renumbering.
    pub fn dual(&self) -> SimpleType {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        SimpleType {
            family,
            rank: self.rank,
        }
    }

    /// Every admissible type of rank at most `max_rank`, ordered by family
    /// and then by rank.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        Family::ALL
            .iter()
            .flat_map(|&family| {
                (1..=max_rank).filter_map(move |rank| SimpleType::new(family, rank).ok())
            })
            .collect()
    }

    pub fn cartan_matrix(&self) -> CartanMatrix {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => a[n - 2][n - 1] = -2,
            Family::C => a[n - 1][n - 2] = -2,
            Family::F => a[1][2] = -2,
            Family::G => a[1][0] = -3,
            _ => {}
        }
        CartanMatrix(a)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Family letter followed by decimal rank, no separator, case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseType(s.to_string()));
        }
        let rank = digits
            .parse::<usize>()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

/// Integer matrix with `a[i][i] = 2`, nonpositive off-diagonal entries and
/// `a[i][j] = 0 ⟺ a[j][i] = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix(Vec<Vec<i64>>);

impl CartanMatrix {
    /// Wraps a square matrix after checking the generalized Cartan axioms.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for (j, &a) in row.iter().enumerate() {
                let ok = if i == j {
                    a == 2
                } else {
                    a <= 0 && (a == 0) == (rows[j][i] == 0)
                };
                if !ok {
                    return Err(Error::Inconsistent(format!(
                        "entry ({i},{j}) = {a} violates the Cartan axioms"
                    )));
                }
            }
        }
        Ok(CartanMatrix(rows))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn transpose(&self) -> CartanMatrix {
        let n = self.rank();
        CartanMatrix(
            (0..n)
                .map(|i| (0..n).map(|j| self.0[j][i]).collect())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn rank_two_matrices() {
        assert_eq!(t("A2").cartan_matrix().rows(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(t("B2").cartan_matrix().rows(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(t("C2").cartan_matrix().rows(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(t("G2").cartan_matrix().rows(), &[vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn b_and_c_are_transposes() {
        for n in 2..=8 {
            let b = SimpleType::new(Family::B, n).unwrap().cartan_matrix();
            let c = SimpleType::new(Family::C, n).unwrap().cartan_matrix();
            assert_eq!(b.transpose(), c);
        }
    }

    #[test]
    fn e6_branch_node() {
        let a = t("E6").cartan_matrix();
        assert_eq!(a.get(1, 3), -1);
        assert_eq!(a.get(0, 2), -1);
        assert_eq!(a.get(1, 2), 0);
        assert_eq!(a.get(4, 5), -1);
    }

    #[test]
    fn parsing() {
        assert_eq!(t("g2"), SimpleType::new(Family::G, 2).unwrap());
        assert_eq!(t("E8").to_string(), "E8");
        assert!(matches!(
            "D3".parse::<SimpleType>(),
            Err(Error::InadmissibleType { .. })
        ));
        assert!(matches!(
            "B1".parse::<SimpleType>(),
            Err(Error::InadmissibleType { .. })
        ));
        assert!(matches!(
            "E9".parse::<SimpleType>(),
            Err(Error::InadmissibleType { .. })
        ));
        assert!(matches!(
            "F5".parse::<SimpleType>(),
            Err(Error::InadmissibleType { .. })
        ));
        assert!(matches!(
            "X2".parse::<SimpleType>(),
            Err(Error::ParseType(_))
        ));
        assert!(matches!(
            "A".parse::<SimpleType>(),
            Err(Error::ParseType(_))
        ));
        assert!(matches!(
            "A-2".parse::<SimpleType>(),
            Err(Error::ParseType(_))
        ));
        assert!(matches!(
            "A0".parse::<SimpleType>(),
            Err(Error::InadmissibleType { .. })
        ));
    }

    #[test]
    fn type_listing() {
        let names: Vec<String> = SimpleType::all_up_to(2)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(names, ["A1", "A2", "B2", "C2", "G2"]);
        assert_eq!(SimpleType::all_up_to(8).len(), 8 + 7 + 7 + 5 + 3 + 1 + 1);
    }

    #[test]
    fn rejects_malformed_matrix() {
        assert!(CartanMatrix::from_rows(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(CartanMatrix::from_rows(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanMatrix::from_rows(vec![vec![2, -1]]).is_err());
    }
}
