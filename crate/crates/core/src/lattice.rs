//! Full-rank integer lattices in ℤ³ in Hermite normal form.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::SignedPerm;

pub type IVec3 = [i64; 3];

#[inline]
pub fn add(a: &IVec3, b: &IVec3) -> IVec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub fn sub(a: &IVec3, b: &IVec3) -> IVec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub fn scale(a: &IVec3, k: i64) -> IVec3 {
    a.map(|c| c * k)
}

pub fn dot(a: &IVec3, b: &IVec3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn det3(m: &[IVec3; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// The result is upper triangular with positive pivots, and entries above each
/// pivot lie in `[0, pivot)`. Returns `None` if the rows do not span rank 3.
pub fn hermite_rows(rows: &[IVec3]) -> Option<[IVec3; 3]> {
    let mut a: Vec<IVec3> = rows.to_vec();
    let mut out = [[0i64; 3]; 3];
    for col in 0..3 {
        // Euclid on column `col` among the remaining rows.
        loop {
            let nz: Vec<usize> = (0..a.len()).filter(|&i| a[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let piv = *nz.iter().min_by_key(|&&i| a[i][col].abs()).unwrap();
            for &i in &nz {
                if i != piv {
                    let q = Integer::div_floor(&a[i][col], &a[piv][col]);
                    a[i] = sub(&a[i], &scale(&a[piv], q));
                }
            }
        }
        let piv = (0..a.len()).find(|&i| a[i][col] != 0)?;
        let mut r = a.swap_remove(piv);
        if r[col] < 0 {
            r = scale(&r, -1);
        }
        out[col] = r;
        for i in 0..col {
            let q = Integer::div_floor(&out[i][col], &r[col]);
            out[i] = sub(&out[i], &scale(&r, q));
        }
        a.retain(|v| *v != [0, 0, 0]);
    }
    Some(out)
}

/// Lattice of pure translations of a twist group, with its Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TranslationLattice {
    basis: [IVec3; 3],
    hermite: [IVec3; 3],
    index: u64,
}

impl TranslationLattice {
    pub fn new(basis: [IVec3; 3]) -> Result<Self> {
        let hermite = hermite_rows(&basis)
            .ok_or_else(|| Error::internal("translation basis is not of rank 3"))?;
        let index = (hermite[0][0] * hermite[1][1] * hermite[2][2]) as u64;
        debug_assert_eq!(index, det3(&basis).unsigned_abs());
        Ok(TranslationLattice {
            basis,
            hermite,
            index,
        })
    }

    /// The lattice generated by any spanning set; the stored basis is the Hermite form.
    pub fn generated_by(vectors: &[IVec3]) -> Result<Self> {
        let hermite = hermite_rows(vectors)
            .ok_or_else(|| Error::internal("translations do not span rank 3"))?;
        TranslationLattice::new(hermite)
    }

    pub fn basis(&self) -> &[IVec3; 3] {
        &self.basis
    }

    pub fn hermite_form(&self) -> &[IVec3; 3] {
        &self.hermite
    }

    /// |ℤ³ : L|.
    pub fn index(&self) -> u64 {
        self.index
    }

    /// Diagonal of the Hermite form: the coset box is the product of `[0, d_i)`.
    pub fn box_dims(&self) -> [i64; 3] {
        [self.hermite[0][0], self.hermite[1][1], self.hermite[2][2]]
    }

    /// The unique coset representative inside the Hermite box.
    #[inline]
    pub fn reduce(&self, v: &IVec3) -> IVec3 {
        let mut v = *v;
        for i in 0..3 {
            let h = &self.hermite[i];
            let q = Integer::div_floor(&v[i], &h[i]);
            if q != 0 {
                v = sub(&v, &scale(h, q));
            }
        }
        v
    }

    pub fn contains(&self, v: &IVec3) -> bool {
        self.reduce(v) == [0, 0, 0]
    }

    /// Position of a reduced vector in the lexicographic enumeration of the box.
    #[inline]
    pub fn coset_index(&self, reduced: &IVec3) -> usize {
        let d = self.box_dims();
        ((reduced[0] * d[1] + reduced[1]) * d[2] + reduced[2]) as usize
    }

    /// Coset representatives of ℤ³/L in lexicographic order.
    pub fn coset_reps(&self) -> Vec<IVec3> {
        let d = self.box_dims();
        let mut out = Vec::with_capacity(self.index as usize);
        for x in 0..d[0] {
            for y in 0..d[1] {
                for z in 0..d[2] {
                    out.push([x, y, z]);
                }
            }
        }
        out
    }

    pub fn same_lattice(&self, other: &TranslationLattice) -> bool {
        self.hermite == other.hermite
    }

    pub fn is_invariant_under(&self, m: &SignedPerm) -> bool {
        self.hermite.iter().all(|h| self.contains(&m.apply_int(h)))
    }

    /// A basis of the rank-2 sublattice L ∩ normal⊥.
    pub fn plane_sublattice(&self, normal: &IVec3) -> [IVec3; 2] {
        let mut rows: Vec<(i64, IVec3)> = self.hermite.iter().map(|h| (dot(normal, h), *h)).collect();
        loop {
            let nz: Vec<usize> = (0..3).filter(|&i| rows[i].0 != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let piv = *nz.iter().min_by_key(|&&i| rows[i].0.abs()).unwrap();
            for &i in &nz {
                if i != piv {
                    let q = Integer::div_floor(&rows[i].0, &rows[piv].0);
                    rows[i] = (rows[i].0 - q * rows[piv].0, sub(&rows[i].1, &scale(&rows[piv].1, q)));
                }
            }
        }
        let kernel: Vec<IVec3> = rows.iter().filter(|r| r.0 == 0).map(|r| r.1).collect();
        [kernel[0], kernel[1]]
    }
}

/// Echelon form of a rank-2 lattice in ℤ², eliminating on the second coordinate.
///
/// Returns (d, e, q) with the lattice equal to ⟨(d, 0), (e, q)⟩, d > 0, q > 0, 0 ≤ e < d.
pub fn echelon_2d(u: [i64; 2], v: [i64; 2]) -> (i64, i64, i64) {
    let (mut u, mut v) = (u, v);
    while u[1] != 0 {
        let q = Integer::div_floor(&v[1], &u[1]);
        v = [v[0] - q * u[0], v[1] - q * u[1]];
        std::mem::swap(&mut u, &mut v);
    }
    // Now u lies on the first axis and v carries the gcd of the second coordinates.
    if v[1] < 0 {
        v = [-v[0], -v[1]];
    }
    let d = u[0].abs();
    (d, v[0].rem_euclid(d), v[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_of_tricosm_lattice() {
        let l = TranslationLattice::new([[3, 3, 3], [1, 0, -1], [0, 1, -1]]).unwrap();
        assert_eq!(l.index(), 9);
        for b in l.basis() {
            assert!(l.contains(b));
        }
        for h in l.hermite_form() {
            let coeffs_exist = l.contains(h);
            assert!(coeffs_exist);
        }
        assert!(!l.contains(&[1, 0, 0]));
    }

    #[test]
    fn hermite_is_upper_triangular_and_reduced() {
        let h = hermite_rows(&[[0, 0, 4], [2, 0, 0], [0, -2, 0], [6, 4, 8]]).unwrap();
        for i in 0..3 {
            assert!(h[i][i] > 0);
            for j in 0..i {
                assert_eq!(h[i][j], 0);
            }
            for k in 0..i {
                assert!(0 <= h[k][i] && h[k][i] < h[i][i]);
            }
        }
        assert_eq!(h, [[2, 0, 0], [0, 2, 0], [0, 0, 4]]);
    }

    #[test]
    fn reduce_lands_in_box() {
        let l = TranslationLattice::new([[0, 0, 2], [2, 0, 0], [1, 3, 0]]).unwrap();
        let d = l.box_dims();
        for v in [[5, -7, 3], [-1, -1, -1], [100, 31, -9]] {
            let r = l.reduce(&v);
            assert!((0..3).all(|i| 0 <= r[i] && r[i] < d[i]));
            assert!(l.contains(&sub(&v, &r)));
        }
        assert_eq!(l.coset_reps().len() as u64, l.index());
    }

    #[test]
    fn plane_sublattice_of_dicosm_lattice() {
        let l = TranslationLattice::new([[0, 0, 2], [3, 0, 0], [1, 2, 0]]).unwrap();
        let [u, v] = l.plane_sublattice(&[0, 0, 1]);
        assert_eq!(u[2], 0);
        assert_eq!(v[2], 0);
        assert_eq!(echelon_2d([u[0], u[1]], [v[0], v[1]]), (3, 1, 2));
    }

    #[test]
    fn echelon_is_canonical() {
        assert_eq!(echelon_2d([3, 0], [1, 2]), (3, 1, 2));
        assert_eq!(echelon_2d([4, 2], [1, 2]), (3, 1, 2));
        assert_eq!(echelon_2d([-1, -2], [3, 0]), (3, 1, 2));
    }
}
