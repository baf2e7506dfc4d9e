//! Reads the named symmetry predicates off an enumerated symmetry set.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::geometry::{analyze_twist, Motion, Vec3};
use crate::groups::{GroupSpec, ManifoldKind};
use crate::lattice::echelon_2d;

/// Solves v = i·(d,0) + j·(e,q) over the integers.
fn coords_2d((d, e, q): (i64, i64, i64), v: [i64; 2]) -> Result<(i64, i64)> {
    if v[1] % q != 0 {
        return Err(Error::internal("symmetry translation is off the axis lattice"));
    }
    let j = v[1] / q;
    let r = v[0] - j * e;
    if r % d != 0 {
        return Err(Error::internal("symmetry translation is off the axis lattice"));
    }
    Ok((r / d, j))
}

fn block(m: &[[i64; 3]; 3]) -> [[i64; 2]; 2] {
    [[m[0][0], m[0][1]], [m[1][0], m[1][1]]]
}

fn is_pm(b: [[i64; 2]; 2], target: [[i64; 2]; 2]) -> bool {
    let neg = target.map(|r| r.map(|x| -x));
    b == target || b == neg
}

fn axial(g: &GroupSpec, syms: &[Motion]) -> Result<Vec<(&'static str, bool)>> {
    let [u, v] = g.lattice().plane_sublattice(&[0, 0, 1]);
    let ech = echelon_2d([u[0], u[1]], [v[0], v[1]]);
    let s1 = g.motions()[0];
    let (mut alpha, mut beta, mut alphabeta) = (false, false, false);
    let (mut gamma1, mut gamma2, mut eta) = (false, false, false);
    for x in syms {
        let b = block(&x.linear.rows());
        if is_pm(b, [[1, 0], [0, 1]]) {
            let y = if b[0][0] == -1 { x.compose(&s1) } else { *x };
            match coords_2d(ech, [2 * y.shift[0], 2 * y.shift[1]])? {
                (i, j) if i.is_odd() && j.is_even() => alpha = true,
                (i, j) if i.is_even() && j.is_odd() => beta = true,
                (i, j) if i.is_odd() && j.is_odd() => alphabeta = true,
                _ => {}
            }
        } else if is_pm(b, [[1, 0], [0, -1]]) {
            gamma1 = true;
        } else if is_pm(b, [[0, 1], [1, 0]]) {
            gamma2 = true;
        } else if is_pm(b, [[0, -1], [1, 0]]) {
            eta = true;
        }
    }
    Ok(vec![
        ("alpha", alpha),
        ("beta", beta),
        ("alphabeta", alphabeta),
        ("gamma1", gamma1),
        ("gamma2", gamma2),
        ("eta", eta),
    ])
}

fn diagonal(g: &GroupSpec, syms: &[Motion]) -> Result<Vec<(&'static str, bool)>> {
    let [u, v] = g.lattice().plane_sublattice(&[1, -1, 0]);
    let ech = echelon_2d([u[0], u[2]], [v[0], v[2]]);
    let s1 = g.motions()[0];
    let (mut alpha, mut beta, mut chi) = (false, false, false);
    for x in syms {
        let e1 = x.linear.apply_int(&[1, 1, 0]);
        let eps1 = if e1 == [1, 1, 0] {
            1
        } else if e1 == [-1, -1, 0] {
            -1
        } else {
            return Err(Error::internal("symmetry does not preserve the axis direction"));
        };
        let eps2 = x.linear.entry(2, 2);
        if eps1 != eps2 {
            chi = true;
            continue;
        }
        let y = if eps1 == -1 { x.compose(&s1) } else { *x };
        let w = y.shift;
        match coords_2d(ech, [w[0] + w[1], 2 * w[2]])? {
            (_, j) if j.is_odd() => beta = true,
            (i, _) if i.is_odd() => alpha = true,
            _ => {}
        }
    }
    Ok(vec![("alpha", alpha), ("beta", beta), ("chi", chi)])
}

/// Whether a vector perpendicular to (1,1,1) is the projection of a lattice vector.
fn in_projected_lattice(g: &GroupSpec, y: &Vec3) -> bool {
    let k0 = -y.x();
    let base = *y + Vec3::new(k0, k0, k0);
    let Some(base) = base.to_int() else {
        return false;
    };
    (0..g.lattice().index() as i64).any(|t| g.lattice().contains(&[base[0] + t, base[1] + t, base[2] + t]))
}

fn tricosm(g: &GroupSpec, syms: &[Motion]) -> Result<Vec<(&'static str, bool)>> {
    let a1 = analyze_twist(&g.generators()[0])?.axis_point;
    let a2 = analyze_twist(&g.generators()[1])?.axis_point;
    let o = a2 - a1;
    let (mut chi, mut zeta) = (false, false);
    for x in syms {
        if x.linear.det() != 1 || x.linear.apply_int(&[1, 1, 1]) != [-1, -1, -1] {
            continue;
        }
        let mo = x.linear.apply(&o);
        // The half-turn acts on the three axis classes as i ↦ ±i + c.
        if in_projected_lattice(g, &(mo - o)) {
            chi = true;
        } else if in_projected_lattice(g, &(mo + o)) {
            zeta = true;
        } else {
            return Err(Error::internal("half-turn does not permute the axis classes"));
        }
    }
    Ok(vec![("chi", chi), ("zeta", zeta)])
}

fn tetracosm(g: &GroupSpec, syms: &[Motion]) -> Result<Vec<(&'static str, bool)>> {
    let horizontal_outer = |y: &Motion| -> Option<bool> {
        let k = g.power_of(&y.linear)?;
        let t = y.compose(&g.powers()[k].inverse()).shift;
        Some(!g.lattice().contains(&[t[0], t[1], 0]))
    };
    let mut alpha = false;
    let mut flips: Vec<Motion> = vec![];
    for x in syms {
        if x.linear.det() != 1 {
            return Err(Error::internal("orientation-reversing symmetry of a tetracosm"));
        }
        if x.linear.entry(2, 2) == -1 {
            flips.push(*x);
        } else {
            alpha |= horizontal_outer(x)
                .ok_or_else(|| Error::internal("orientation-reversing symmetry of a tetracosm"))?;
        }
    }
    let chi = !flips.is_empty();
    let alphachi = match flips.first() {
        Some(c) => {
            let ci = c.inverse();
            flips
                .iter()
                .any(|x| horizontal_outer(&x.compose(&ci)).unwrap_or(false))
        }
        None => false,
    };
    Ok(vec![("alpha", alpha), ("chi", chi), ("alphachi", alphachi)])
}

/// The predicates of [`crate::SymmetryProfile::predicates`], decided from symmetries only.
pub fn detect_predicates(g: &GroupSpec, syms: &[Motion]) -> Result<Vec<(&'static str, bool)>> {
    match g.kind() {
        ManifoldKind::DicosmAxial => axial(g, syms),
        ManifoldKind::DicosmDiagonal => diagonal(g, syms),
        ManifoldKind::Tricosm => tricosm(g, syms),
        ManifoldKind::Tetracosm => tetracosm(g, syms),
        ManifoldKind::Hexacosm => Err(Error::HexacosmImpossible),
    }
}
