use twistoid::geometry::{half_shift, DirectionClass, NormClass};
use twistoid::*;

fn sp(rows: [[i64; 3]; 3]) -> SignedPerm {
    SignedPerm::from_rows(rows).unwrap()
}

fn v(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Vec3 {
    Vec3::from_fracs([x, y, z])
}

#[test]
fn translations_compose_additively() {
    let a = Isometry::from_int(SignedPerm::IDENTITY, [1, 0, 0]);
    let b = Isometry::from_int(SignedPerm::IDENTITY, [0, 1, 0]);
    assert_eq!(compose(&a, &b), Isometry::from_int(SignedPerm::IDENTITY, [1, 1, 0]));
    assert_eq!(compose(&Isometry::identity(), &a), a);
}

#[test]
fn inverse_of_translation() {
    let t = Isometry::from_int(SignedPerm::IDENTITY, [1, 2, 3]);
    assert_eq!(inverse(&t), Isometry::from_int(SignedPerm::IDENTITY, [-1, -2, -3]));
    assert_eq!(inverse(&Isometry::identity()), Isometry::identity());
}

#[test]
fn square_of_quarter_turn_screw() {
    let s = Isometry::from_int(sp([[0, -1, 0], [1, 0, 0], [0, 0, 1]]), [0, 0, 1]);
    let s2 = compose(&s, &s);
    for p in [Vec3::zero(), Vec3::from_int([1, 0, 0])] {
        assert_eq!(s2.apply(&p), s.apply(&s.apply(&p)));
    }
    let t = analyze_twist(&s2).unwrap();
    assert_eq!(t.rotation_order, 2);
    assert_eq!(t.translational_component, Vec3::from_int([0, 0, 2]));
}

#[test]
fn tessellation_preservation() {
    let half = Isometry::translation(v((1, 2), (1, 2), (1, 2)));
    assert!(!preserves_tessellation(&half));
    assert_eq!(half, half_shift());
    assert!(preserves_tessellation(&Isometry::identity()));
    let point_reflection = Isometry::from_int(sp([[-1, 0, 0], [0, -1, 0], [0, 0, -1]]), [1, 0, 0]);
    assert!(preserves_tessellation(&point_reflection));
    for corner in 0..8 {
        let c = Vec3::from_int([corner & 1, (corner >> 1) & 1, (corner >> 2) & 1]);
        assert!(point_reflection.apply(&c).is_integral());
    }
}

#[test]
fn analyze_half_turn_screw() {
    let g = Isometry::from_int(sp([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]), [0, 0, 1]);
    let t = analyze_twist(&g).unwrap();
    assert_eq!(t.rotation_order, 2);
    assert_eq!(t.axis_direction, [0, 0, 1]);
    assert_eq!(t.axis_point, Vec3::zero());
    assert_eq!(t.translational_component, Vec3::from_int([0, 0, 1]));
    assert_eq!(classify_twist_type(&t).unwrap(), TwistType::I);
}

#[test]
fn pure_rotation_is_not_a_twist() {
    let g = Isometry::from_int(sp([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]), [0, 0, 0]);
    assert!(matches!(analyze_twist(&g), Err(Error::NotATwist(_))));
}

#[test]
fn analyze_three_fold_screw() {
    let g = Isometry::from_int(sp([[0, 0, 1], [1, 0, 0], [0, 1, 0]]), [1, 1, 1]);
    let t = analyze_twist(&g).unwrap();
    assert_eq!(t.rotation_order, 3);
    assert_eq!(t.translational_component, Vec3::from_int([1, 1, 1]));
    assert_eq!(t.axis_point, Vec3::zero());
    assert_eq!(t.linear.apply(&t.axis_point), t.axis_point);
    assert_eq!(classify_twist_type(&t).unwrap(), TwistType::VIII);
}

#[test]
fn type_nine_on_offset_body_diagonal() {
    // Axis through (1/3, -1/3, 0), translation of length √3/3.
    let r = sp([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
    let a = v((1, 3), (-1, 3), (0, 1));
    let shift = a - r.apply(&a) + v((1, 3), (1, 3), (1, 3));
    let t = analyze_twist(&Isometry::new(r, shift)).unwrap();
    assert_eq!(t.direction_class(), DirectionClass::BodyDiagonal);
    assert_eq!(t.norm_class(), Some(NormClass::ThirdSqrt3));
    assert_eq!(classify_twist_type(&t).unwrap(), TwistType::IX);
}

#[test]
fn type_eleven_through_cube_centers() {
    let g = Isometry::from_int(sp([[0, -1, 0], [1, 0, 0], [0, 0, 1]]), [1, 0, 1]);
    let t = analyze_twist(&g).unwrap();
    assert_eq!(t.axis_point, v((1, 2), (1, 2), (0, 1)));
    assert_eq!(classify_twist_type(&t).unwrap(), TwistType::XI);
}

#[test]
fn petrie_rule_by_residue() {
    for (m, want) in [
        (1, PetrieHandedness::RightPetrie),
        (2, PetrieHandedness::LeftPetrie),
        (3, PetrieHandedness::VertexAxis),
    ] {
        let g = build_group(&TricosmParams::new(m, 1, 0).into()).unwrap();
        let t = analyze_twist(g.base_twist()).unwrap();
        assert_eq!(petrie_handedness(&t).unwrap(), want, "m = {m}");
    }
}

#[test]
fn petrie_rejects_other_orders() {
    let g = Isometry::from_int(sp([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]), [0, 0, 1]);
    let t = analyze_twist(&g).unwrap();
    assert_eq!(petrie_handedness(&t), Err(Error::NotThreeFold(2)));
    assert_eq!(screw_handedness(&t), None);
}

#[test]
fn the_point_group_has_48_elements_closed_under_products() {
    let all = SignedPerm::all();
    assert_eq!(all.len(), 48);
    assert_eq!(all.iter().filter(|m| m.det() == 1).count(), 24);
    for a in all {
        for b in all {
            assert!(all.contains(&a.mul(b)));
        }
        assert_eq!(a.mul(&a.inverse()), SignedPerm::IDENTITY);
    }
}
