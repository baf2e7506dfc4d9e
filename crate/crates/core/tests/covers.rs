use twistoid::*;

fn lattice_of(p: impl Into<TwistoidParams>) -> CoverLattice {
    cover_lattice(&p.into()).unwrap()
}

fn spans(lat: &CoverLattice, basis: [IVec3; 3]) -> bool {
    lat.lattice().same_lattice(&TranslationLattice::new(basis).unwrap())
}

#[test]
fn cover_lattices() {
    let tetra = lattice_of(TetracosmParams::new(1, 2, 0));
    assert!(spans(&tetra, [[0, 0, 4], [2, 0, 0], [0, -2, 0]]));
    let tri = lattice_of(TricosmParams::new(3, 1, 1));
    assert!(spans(&tri, [[3, 3, 3], [1, 1, -2], [-1, 2, -1]]));
    let di = lattice_of(DicosmAxialParams::new(1, 0, 2, 0, 2));
    assert!(spans(&di, [[0, 0, 2], [2, 0, 0], [0, 2, 0]]));
}

#[test]
fn cover_flag_counts() {
    let tetra = lattice_of(TetracosmParams::new(1, 2, 0));
    assert_eq!((tetra.index, cover_flag_count(&tetra)), (16, 768));
    let tri = lattice_of(TricosmParams::new(3, 1, 0));
    assert_eq!((tri.index, cover_flag_count(&tri)), (9, 432));
    let di = lattice_of(DicosmAxialParams::new(1, 0, 2, 0, 2));
    assert_eq!((di.index, cover_flag_count(&di)), (8, 384));
}

#[test]
fn stated_classes() {
    let class = |p: TwistoidParams| cover_class(&p).unwrap();
    assert_eq!(class(TetracosmParams::new(1, 1, 1).into()), ToroidClass::C3);
    assert_eq!(class(TetracosmParams::new(1, 2, 1).into()), ToroidClass::C6C);
    assert_eq!(class(TricosmParams::new(1, 2, 1).into()), ToroidClass::C8);
    assert_eq!(class(TricosmParams::new(1, 1, 0).into()), ToroidClass::C4);
    assert_eq!(class(DicosmAxialParams::new(1, 0, 2, 0, 2).into()), ToroidClass::C1);
    assert_eq!(class(DicosmAxialParams::new(1, 0, 4, 0, 4).into()), ToroidClass::C3);
    assert_eq!(class(DicosmAxialParams::new(2, 0, 4, 0, 4).into()), ToroidClass::C1);
}

#[test]
fn classes_from_lattice_symmetry() {
    let derived = |p: TwistoidParams| lattice_toroid_class(&cover_lattice(&p).unwrap());
    assert_eq!(derived(TetracosmParams::new(1, 4, 0).into()), Ok(ToroidClass::C1));
    assert_eq!(derived(TetracosmParams::new(1, 1, 0).into()), Ok(ToroidClass::C3));
    assert_eq!(derived(TetracosmParams::new(1, 2, 1).into()), Ok(ToroidClass::C6C));
    assert_eq!(derived(TricosmParams::new(1, 2, 1).into()), Ok(ToroidClass::C8));
    assert_eq!(derived(DicosmDiagonalParams::new(1, 1, 7, 3, 1).into()), Ok(ToroidClass::C12B));
}

#[test]
fn no_class_has_24_orbits() {
    use ToroidClass::*;
    for c in [C1, C3, C4, C6A, C6B, C6C, C8, C12A, C12B] {
        assert!([1, 3, 4, 6, 8, 12].contains(&c.orbits()));
    }
}

#[test]
fn covers_are_invariant_under_their_expected_symmetries() {
    let mirror = SignedPerm::from_rows([[1, 0, 0], [0, 1, 0], [0, 0, -1]]).unwrap();
    let cyclic = SignedPerm::from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]]).unwrap();
    for f in families() {
        let lat = cover_lattice(&f.witness).unwrap().lattice();
        match f.family.kind() {
            ManifoldKind::Tricosm => assert!(lat.is_invariant_under(&cyclic)),
            ManifoldKind::DicosmAxial | ManifoldKind::Tetracosm => {
                assert!(lat.is_invariant_under(&mirror))
            }
            _ => {}
        }
    }
}
