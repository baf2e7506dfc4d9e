use twistoid::groups::{contains, is_fixed_point_free_witness, normalizes, translation_lattice};
use twistoid::*;

fn sp(rows: [[i64; 3]; 3]) -> SignedPerm {
    SignedPerm::from_rows(rows).unwrap()
}

fn shift(t: IVec3) -> Isometry {
    Isometry::from_int(SignedPerm::IDENTITY, t)
}

fn axial(c: i64, p1: i64, p2: i64, p3: i64, q3: i64) -> GroupSpec {
    build_group(&DicosmAxialParams::new(c, p1, p2, p3, q3).into()).unwrap()
}

#[test]
fn hexacosm_has_no_group() {
    assert_eq!(build_group(&TwistoidParams::Hexacosm).unwrap_err(), Error::HexacosmImpossible);
}

#[test]
fn tetracosm_second_generator() {
    // p = 1, q = 0 in half units.
    let g = build_group(&TetracosmParams::new(1, 2, 0).into()).unwrap();
    let t = analyze_twist(&g.generators()[1]).unwrap();
    assert_eq!(t.rotation_order, 2);
    assert_eq!(t.axis_direction, [0, 0, 1]);
    assert_eq!(t.axis_point, Vec3::from_int([1, 0, 0]));
    assert_eq!(t.translational_component, Vec3::from_int([0, 0, 2]));
}

#[test]
fn tricosm_base_twist_is_type_nine() {
    let g = build_group(&TricosmParams::new(1, 1, 0).into()).unwrap();
    let t = analyze_twist(g.base_twist()).unwrap();
    assert_eq!(classify_twist_type(&t).unwrap(), TwistType::IX);
    assert_eq!(t.axis_point, Vec3::from_fracs([(1, 3), (-1, 3), (0, 1)]));
    assert!(g.base_twist().to_motion().is_some());
}

#[test]
fn lattices_and_indices() {
    let tetra = build_group(&TetracosmParams::new(1, 2, 0).into()).unwrap();
    let expect = TranslationLattice::new([[0, 0, 4], [2, 0, 0], [0, -2, 0]]).unwrap();
    assert!(translation_lattice(&tetra).same_lattice(&expect));
    assert_eq!(tetra.lattice().index(), 16);

    let tri = build_group(&TricosmParams::new(3, 1, 0).into()).unwrap();
    let expect = TranslationLattice::new([[3, 3, 3], [1, 0, -1], [0, 1, -1]]).unwrap();
    assert!(tri.lattice().same_lattice(&expect));
    assert_eq!(tri.lattice().index(), 9);

    let di = axial(1, 0, 2, 0, 2);
    let expect = TranslationLattice::new([[0, 0, 2], [2, 0, 0], [0, 2, 0]]).unwrap();
    assert!(di.lattice().same_lattice(&expect));
    assert_eq!(di.lattice().index(), 8);
}

#[test]
fn generator_products_are_lattice_translations() {
    let g = axial(1, 0, 2, 0, 2);
    let [s1, s2, s3] = [0, 1, 2].map(|i| g.generators()[i]);
    assert_eq!(s1.pow(2), shift([0, 0, 2]));
    assert_eq!(s2.compose(&s1.inverse()), shift([2, 0, 0]));
    assert_eq!(s3.compose(&s1.inverse()), shift([0, 2, 0]));
}

#[test]
fn membership() {
    let g = axial(1, 0, 2, 0, 2);
    let s1 = g.generators()[0];
    assert!(contains(&g, &s1.pow(2)));
    assert!(contains(&g, &shift([2, 0, 0])));
    assert!(!contains(&g, &shift([1, 0, 0])));
    let bare = Isometry::from_int(sp([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]), [0, 0, 0]);
    assert!(!contains(&g, &bare));
    for a in g.generators() {
        assert!(contains(&g, &a.inverse()));
        for b in g.generators() {
            assert!(contains(&g, &a.compose(b)));
        }
    }
}

#[test]
fn normalizer_elements() {
    let g = axial(1, 0, 2, 0, 2);
    for s in g.generators() {
        assert!(normalizes(&g, s));
    }
    let rho = Isometry::from_int(sp([[1, 0, 0], [0, 1, 0], [0, 0, -1]]), [0, 0, 0]);
    assert!(normalizes(&g, &rho));
    // α is a symmetry exactly when p2 - p1 is an integer.
    assert!(normalizes(&axial(1, 0, 2, 0, 1), &shift([1, 0, 0])));
    assert!(!normalizes(&axial(1, 0, 5, 0, 1), &shift([1, 0, 0])));
}

#[test]
fn freeness() {
    let cases: Vec<TwistoidParams> = vec![
        DicosmAxialParams::new(1, 0, 3, 1, 2).into(),
        DicosmDiagonalParams::new(1, 1, 3, 1, 1).into(),
        TricosmParams::new(2, 1, 1).into(),
        TetracosmParams::new(1, 1, 1).into(),
    ];
    for p in cases {
        let g = build_group(&p).unwrap();
        assert!(is_fixed_point_free_witness(&g, 3), "{p}");
    }
    let g = axial(1, 0, 2, 0, 2);
    let mut gens = g.generators().to_vec();
    gens[0] = Isometry::from_int(sp([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]), [0, 0, 0]);
    let corrupted = GroupSpec::from_generators(ManifoldKind::DicosmAxial, gens);
    assert!(corrupted.map_or(true, |c| !c.is_fixed_point_free_witness(3)));
}

#[test]
fn dual_moves_vertex_axes_to_cube_centers() {
    let tetra = build_group(&TetracosmParams::new(1, 1, 1).into()).unwrap();
    let d = dual_group(&tetra);
    let ty = |g: &GroupSpec| classify_twist_type(&analyze_twist(g.base_twist()).unwrap()).unwrap();
    assert_eq!(ty(&tetra), TwistType::X);
    assert_eq!(ty(&d), TwistType::XI);

    let di = axial(1, 0, 2, 0, 2);
    assert_eq!(ty(&di), TwistType::I);
    assert_eq!(ty(&dual_group(&di)), TwistType::III);

    let back = dual_group(&d);
    assert!(back.lattice().same_lattice(tetra.lattice()));
    for (a, b) in back.generators().iter().zip(tetra.generators()) {
        assert!(tetra.contains(a) && back.contains(b));
    }
}

#[test]
fn manifold_names_round_trip() {
    for k in ManifoldKind::ALL {
        assert_eq!(k.name().parse::<ManifoldKind>().unwrap(), k);
    }
    assert!("klein".parse::<ManifoldKind>().is_err());
}
