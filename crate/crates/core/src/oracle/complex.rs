use crate::error::{Error, Result};
use crate::geometry::{Motion, SignedPerm};
use crate::groups::GroupSpec;
use crate::lattice::{add, IVec3};

pub const DEFAULT_FLAG_BOUND: usize = 50_000;

/// A vertex with a signed frame; the columns f₁, f₂, f₃ of the frame span the
/// incident edge, square and cube.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Flag {
    pub vertex: IVec3,
    pub frame: SignedPerm,
}

fn frame_op(rank: usize) -> usize {
    use std::sync::OnceLock;
    static OPS: OnceLock<[usize; 4]> = OnceLock::new();
    let ops = OPS.get_or_init(|| {
        let m = |rows| SignedPerm::from_rows(rows).unwrap().index();
        [
            m([[-1, 0, 0], [0, 1, 0], [0, 0, 1]]),
            m([[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
            m([[1, 0, 0], [0, 0, 1], [0, 1, 0]]),
            m([[1, 0, 0], [0, 1, 0], [0, 0, -1]]),
        ]
    });
    ops[rank]
}

impl Flag {
    pub fn new(vertex: IVec3, frame: SignedPerm) -> Self {
        Flag { vertex, frame }
    }

    #[inline]
    pub fn act(&self, g: &Motion) -> Flag {
        Flag {
            vertex: g.apply(&self.vertex),
            frame: g.linear.mul(&self.frame),
        }
    }

    /// The flag differing from this one only in its face of the given rank.
    pub fn adjacent(&self, rank: usize) -> Flag {
        assert!(rank < 4, "rank must be 0..=3");
        let frame =
            SignedPerm::from_index(SignedPerm::mul_index(self.frame.index(), frame_op(rank)));
        let vertex = if rank == 0 {
            add(&self.vertex, &self.frame.apply_int(&[1, 0, 0]))
        } else {
            self.vertex
        };
        Flag { vertex, frame }
    }
}

pub fn adjacent(f: &Flag, rank: usize) -> Flag {
    f.adjacent(rank)
}

/// Flags of the twistoid: orbits of σ₁ on the flags of the minimal toroidal cover.
#[derive(Clone, Debug)]
pub struct FlagComplex {
    group: GroupSpec,
    flags: Vec<Flag>,
    adjacency: Vec<[u32; 4]>,
    torus_to_quotient: Vec<u32>,
}

impl FlagComplex {
    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn adjacency(&self) -> &[[u32; 4]] {
        &self.adjacency
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn torus_flag_count(&self) -> usize {
        self.torus_to_quotient.len()
    }

    #[inline]
    fn torus_index(&self, f: &Flag) -> usize {
        let lat = self.group.lattice();
        lat.coset_index(&lat.reduce(&f.vertex)) * 48 + f.frame.index()
    }

    /// Index of the quotient flag containing any flag of the tessellation.
    #[inline]
    pub fn quotient_index(&self, f: &Flag) -> usize {
        self.torus_to_quotient[self.torus_index(f)] as usize
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for &j in &self.adjacency[i] {
                if !seen[j as usize] {
                    seen[j as usize] = true;
                    count += 1;
                    stack.push(j as usize);
                }
            }
        }
        count == self.len()
    }
}

/// Builds the quotient flag complex, refusing more than `bound` flags.
///
/// Representatives are the least flags of their orbits in the order
/// (reduced vertex, frame index).
pub fn build_complex(g: &GroupSpec, bound: usize) -> Result<FlagComplex> {
    let lat = g.lattice();
    let m = g.rotation_order() as usize;
    let torus = 48 * lat.index() as usize;
    let flags_total = torus / m;
    if flags_total > bound {
        return Err(Error::ComplexityBound {
            flags: flags_total as u64,
            bound: bound as u64,
        });
    }
    let reps = lat.coset_reps();
    let s1 = g.motions()[0];
    let mut complex = FlagComplex {
        group: g.clone(),
        flags: Vec::with_capacity(flags_total),
        adjacency: Vec::with_capacity(flags_total),
        torus_to_quotient: vec![u32::MAX; torus],
    };
    for i in 0..torus {
        if complex.torus_to_quotient[i] != u32::MAX {
            continue;
        }
        let q = complex.flags.len() as u32;
        let start = Flag::new(reps[i / 48], SignedPerm::from_index(i % 48));
        complex.flags.push(start);
        complex.torus_to_quotient[i] = q;
        let mut cur = start;
        for _ in 1..m {
            cur = cur.act(&s1);
            let j = complex.torus_index(&cur);
            if complex.torus_to_quotient[j] != u32::MAX {
                return Err(Error::internal("a group element fixes a flag"));
            }
            complex.torus_to_quotient[j] = q;
        }
        if complex.torus_index(&cur.act(&s1)) != i {
            return Err(Error::internal("σ₁-orbit of a flag does not close after m steps"));
        }
    }
    if complex.flags.len() != flags_total {
        return Err(Error::internal("quotient flag count differs from 48·index/m"));
    }
    for k in 0..complex.flags.len() {
        let f = complex.flags[k];
        let adj = [0, 1, 2, 3].map(|r| complex.quotient_index(&f.adjacent(r)) as u32);
        complex.adjacency.push(adj);
    }
    for (k, adj) in complex.adjacency.iter().enumerate() {
        for r in 0..4 {
            let j = adj[r] as usize;
            if j == k || complex.adjacency[j][r] as usize != k {
                return Err(Error::internal("flag adjacency is not a fixed-point-free involution"));
            }
        }
    }
    Ok(complex)
}
