use twistoid::oracle::{adjacent, enumerate_symmetry_motions, verify_with_bound, Flag};
use twistoid::*;

fn group(p: impl Into<TwistoidParams>) -> GroupSpec {
    build_group(&validate(&p.into()).unwrap()).unwrap()
}

fn sample_flags() -> Vec<Flag> {
    SignedPerm::all()
        .iter()
        .enumerate()
        .map(|(i, m)| Flag::new([i as i64 % 3, -(i as i64 % 5), 2], *m))
        .collect()
}

#[test]
fn adjacency_is_an_involution() {
    for f in sample_flags() {
        for i in 0..4 {
            assert_eq!(adjacent(&adjacent(&f, i), i), f);
            assert_ne!(adjacent(&f, i), f);
        }
    }
}

#[test]
fn adjacency_commutes_with_the_action() {
    let motions = [
        Motion::new(SignedPerm::from_index(7), [1, -2, 3]),
        Motion::new(SignedPerm::from_index(31), [0, 5, -1]),
    ];
    for f in sample_flags() {
        for g in &motions {
            for i in 0..4 {
                assert_eq!(adjacent(&f, i).act(g), adjacent(&f.act(g), i));
            }
        }
    }
}

#[test]
fn schlafli_type_is_4_3_4() {
    let period = |f: Flag, i: usize, j: usize| {
        let mut g = f;
        for k in 1..=12 {
            g = adjacent(&adjacent(&g, i), j);
            if g == f {
                return k;
            }
        }
        0
    };
    for f in sample_flags() {
        assert_eq!(period(f, 0, 1), 4);
        assert_eq!(period(f, 1, 2), 3);
        assert_eq!(period(f, 2, 3), 4);
        assert_eq!(period(f, 0, 2), 2);
        assert_eq!(period(f, 1, 3), 2);
    }
}

#[test]
fn complex_sizes_and_connectivity() {
    let c = build_complex(&group(TetracosmParams::new(1, 1, 1)), DEFAULT_FLAG_BOUND).unwrap();
    assert_eq!(c.len(), 96);
    assert_eq!(c.torus_flag_count(), 4 * 96);
    assert!(c.is_connected());
    let c = build_complex(&group(DicosmAxialParams::new(1, 0, 1, 0, 1)), DEFAULT_FLAG_BOUND).unwrap();
    assert_eq!(c.len(), 48);
    assert!(c.is_connected());
}

#[test]
fn complexity_bound_is_enforced() {
    let g = group(TetracosmParams::new(2, 4, 3));
    assert!(matches!(build_complex(&g, 1000), Err(Error::ComplexityBound { .. })));
}

#[test]
fn inner_symmetries_and_the_reflection() {
    let g = group(DicosmAxialParams::new(1, 0, 5, 2, 1));
    let syms = enumerate_symmetries(&g);
    for k in 0..2 {
        let p = g.base_twist().pow(k);
        assert!(syms.iter().any(|s| g.contains(&s.inverse().compose(&p))), "power {k}");
    }
    let rho = SignedPerm::from_rows([[1, 0, 0], [0, 1, 0], [0, 0, -1]]).unwrap();
    assert!(syms.iter().any(|s| s.linear == rho));
}

#[test]
fn generic_tricosm_has_no_perpendicular_half_turns() {
    let g = group(TricosmParams::new(1, 2, 1));
    let perp = enumerate_symmetries(&g).into_iter().any(|s| {
        s.linear.det() == 1 && s.linear.apply_int(&[1, 1, 1]) == [-1, -1, -1]
    });
    assert!(!perp);
}

#[test]
fn orbit_counts() {
    let g = group(DicosmAxialParams::new(1, 0, 4, 0, 4));
    let c = build_complex(&g, DEFAULT_FLAG_BOUND).unwrap();
    assert_eq!(orbit_count(&c, &[Isometry::identity()]).orbit_count, c.len());
    let part = orbit_count(&c, &enumerate_symmetries(&g));
    assert_eq!(part.orbit_count, 12);
    assert_eq!(part.labels.len(), c.len());

    let g = group(TricosmParams::new(1, 1, 0));
    let c = build_complex(&g, DEFAULT_FLAG_BOUND).unwrap();
    assert_eq!(c.len(), 48);
    assert_eq!(orbit_count(&c, &enumerate_symmetries(&g)).orbit_count, 8);
}

#[test]
fn orbit_count_ignores_symmetry_order() {
    let g = group(DicosmDiagonalParams::new(2, 0, 6, 2, 1));
    let c = build_complex(&g, DEFAULT_FLAG_BOUND).unwrap();
    let mut syms = enumerate_symmetries(&g);
    let a = orbit_count(&c, &syms);
    syms.reverse();
    let b = orbit_count(&c, &syms);
    assert_eq!(a.orbit_count, b.orbit_count);
}

#[test]
fn symmetry_set_is_closed() {
    let g = group(TetracosmParams::new(1, 3, 1));
    let syms = enumerate_symmetry_motions(&g);
    let lat = g.lattice();
    let reduce = |m: Motion| Motion::new(m.linear, lat.reduce(&m.shift));
    for x in &syms {
        for y in &syms {
            assert!(syms.contains(&reduce(x.compose(y))));
        }
    }
}

#[test]
fn verification_examples() {
    let r = verify(&TetracosmParams::new(1, 1, 1).into()).unwrap();
    assert!(r.pass && r.oracle_orbits == 6);
    let r = verify(&DicosmDiagonalParams::new(1, 1, 3, 1, 1).into()).unwrap();
    assert!(r.pass, "{:?}", r.mismatches());
    assert_eq!((r.oracle_flags, r.oracle_orbits), (48, 6));
    for w in table2_witnesses() {
        let r = verify(&w.params.into()).unwrap();
        assert!(r.pass, "{:?}: {:?}", w.params, r.mismatches());
    }
}

#[test]
fn verification_respects_the_bound() {
    let p: TwistoidParams = DicosmAxialParams::new(1, 0, 40, 4, 2).into();
    assert!(matches!(verify_with_bound(&p, 100), Err(Error::ComplexityBound { .. })));
}
