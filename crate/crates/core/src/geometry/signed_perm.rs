use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::vec3::Vec3;
use crate::lattice::IVec3;

/// A 3×3 signed permutation matrix: row `i` holds `signs[i]` in column `perm[i]`.
///
/// These 48 matrices form the point group of the cubic tessellation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPerm {
    perm: [u8; 3],
    signs: [i8; 3],
}

const PERMS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn all_table() -> &'static [SignedPerm; 48] {
    static ALL: OnceLock<[SignedPerm; 48]> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut out = [SignedPerm::IDENTITY; 48];
        for (pi, p) in PERMS.iter().enumerate() {
            for bits in 0..8u8 {
                let sign = |k: u8| if bits & (4 >> k) == 0 { 1 } else { -1 };
                out[pi * 8 + bits as usize] = SignedPerm {
                    perm: *p,
                    signs: [sign(0), sign(1), sign(2)],
                };
            }
        }
        out
    })
}

fn mul_table() -> &'static [[u8; 48]; 48] {
    static MUL: OnceLock<[[u8; 48]; 48]> = OnceLock::new();
    MUL.get_or_init(|| {
        let all = all_table();
        let mut t = [[0u8; 48]; 48];
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                t[i][j] = a.mul(b).index() as u8;
            }
        }
        t
    })
}

impl SignedPerm {
    pub const IDENTITY: SignedPerm = SignedPerm {
        perm: [0, 1, 2],
        signs: [1, 1, 1],
    };

    /// All 48 signed permutations in a fixed order; `all()[k].index() == k`.
    pub fn all() -> &'static [SignedPerm; 48] {
        all_table()
    }

    pub fn from_index(k: usize) -> SignedPerm {
        all_table()[k]
    }

    pub fn index(&self) -> usize {
        let pi = PERMS.iter().position(|p| *p == self.perm).unwrap();
        let bits = self
            .signs
            .iter()
            .enumerate()
            .map(|(k, &s)| if s < 0 { 4usize >> k } else { 0 })
            .sum::<usize>();
        pi * 8 + bits
    }

    /// Product of the matrices with indices `a` and `b`, by table lookup.
    #[inline]
    pub fn mul_index(a: usize, b: usize) -> usize {
        mul_table()[a][b] as usize
    }

    /// Builds a signed permutation from explicit rows; `None` unless it is one.
    pub fn from_rows(rows: [[i64; 3]; 3]) -> Option<SignedPerm> {
        let mut perm = [0u8; 3];
        let mut signs = [0i8; 3];
        let mut used = [false; 3];
        for (i, row) in rows.iter().enumerate() {
            let nz: Vec<usize> = (0..3).filter(|&j| row[j] != 0).collect();
            if nz.len() != 1 || row[nz[0]].abs() != 1 || used[nz[0]] {
                return None;
            }
            used[nz[0]] = true;
            perm[i] = nz[0] as u8;
            signs[i] = row[nz[0]] as i8;
        }
        Some(SignedPerm { perm, signs })
    }

    pub fn rows(&self) -> [[i64; 3]; 3] {
        let mut r = [[0i64; 3]; 3];
        for i in 0..3 {
            r[i][self.perm[i] as usize] = self.signs[i] as i64;
        }
        r
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if self.perm[i] as usize == j {
            self.signs[i] as i64
        } else {
            0
        }
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SignedPerm) -> SignedPerm {
        let mut perm = [0u8; 3];
        let mut signs = [0i8; 3];
        for i in 0..3 {
            let k = self.perm[i] as usize;
            perm[i] = other.perm[k];
            signs[i] = self.signs[i] * other.signs[k];
        }
        SignedPerm { perm, signs }
    }

    /// The inverse, which is the transpose.
    pub fn inverse(&self) -> SignedPerm {
        let mut perm = [0u8; 3];
        let mut signs = [0i8; 3];
        for i in 0..3 {
            let j = self.perm[i] as usize;
            perm[j] = i as u8;
            signs[j] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    pub fn pow(&self, k: u32) -> SignedPerm {
        (0..k).fold(SignedPerm::IDENTITY, |acc, _| acc.mul(self))
    }

    pub fn det(&self) -> i64 {
        let p = self.perm;
        let parity = if (p[0] < p[1]) ^ (p[0] < p[2]) ^ (p[1] < p[2]) { 1 } else { -1 };
        parity * self.signs.iter().map(|&s| s as i64).product::<i64>()
    }

    pub fn trace(&self) -> i64 {
        (0..3).map(|i| self.entry(i, i)).sum()
    }

    /// Smallest k ≥ 1 with self^k = I.
    pub fn order(&self) -> u8 {
        let mut acc = *self;
        let mut k = 1;
        while acc != SignedPerm::IDENTITY {
            acc = acc.mul(self);
            k += 1;
        }
        k
    }

    pub fn is_rotation(&self) -> bool {
        self.det() == 1
    }

    #[inline]
    pub fn apply_int(&self, v: &IVec3) -> IVec3 {
        [
            self.signs[0] as i64 * v[self.perm[0] as usize],
            self.signs[1] as i64 * v[self.perm[1] as usize],
            self.signs[2] as i64 * v[self.perm[2] as usize],
        ]
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        Vec3::new(
            v.0[self.perm[0] as usize] * self.signs[0] as i64,
            v.0[self.perm[1] as usize] * self.signs[1] as i64,
            v.0[self.perm[2] as usize] * self.signs[2] as i64,
        )
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints the image of a generic point, e.g. `(-y,x,z)`.
impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ['x', 'y', 'z'];
        let parts: Vec<String> = (0..3)
            .map(|i| {
                let s = if self.signs[i] < 0 { "-" } else { "" };
                format!("{s}{}", names[self.perm[i] as usize])
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forty_eight_distinct_with_stable_indices() {
        let all = SignedPerm::all();
        for (k, m) in all.iter().enumerate() {
            assert_eq!(m.index(), k);
        }
        let mut sorted = all.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 48);
    }

    #[test]
    fn product_matches_matrix_product() {
        for a in SignedPerm::all() {
            for b in SignedPerm::all() {
                let (ra, rb) = (a.rows(), b.rows());
                let mut prod = [[0i64; 3]; 3];
                for i in 0..3 {
                    for j in 0..3 {
                        prod[i][j] = (0..3).map(|k| ra[i][k] * rb[k][j]).sum();
                    }
                }
                assert_eq!(a.mul(b).rows(), prod);
                assert_eq!(SignedPerm::mul_index(a.index(), b.index()), a.mul(b).index());
            }
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let rotations = SignedPerm::all().iter().filter(|m| m.is_rotation()).count();
        assert_eq!(rotations, 24);
        for m in SignedPerm::all() {
            assert_eq!(m.mul(&m.inverse()), SignedPerm::IDENTITY);
            assert!(matches!(m.order(), 1 | 2 | 3 | 4 | 6));
        }
    }

    #[test]
    fn display_reads_as_coordinate_map() {
        let r4 = SignedPerm::from_rows([[0, -1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        assert_eq!(r4.to_string(), "(-y,x,z)");
        assert_eq!(r4.order(), 4);
    }
}
