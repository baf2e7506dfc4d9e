//! The reference tables as CSV.

use std::io::Write;

use twistoid::geometry::canonical_representatives;
use twistoid::{
    analyze_twist, classify, classify_twist_type, families, table2_witnesses, DeformableClass,
    Rational, RigidRow, SymmetryProfile, TwistoidParams,
};

pub type Rows = Vec<Vec<String>>;

pub fn table1() -> twistoid::Result<Rows> {
    let mut rows = vec![["Type", "Period", "V", "E", "S", "C", "Direction", "Norm"]
        .map(String::from)
        .to_vec()];
    let mark = |b: bool| if b { "x" } else { "" }.to_string();
    for (_, g) in canonical_representatives() {
        let t = analyze_twist(&g)?;
        let inc = t.centroid_incidence();
        let norm = t.norm_class().ok_or(twistoid::Error::Unclassifiable)?;
        rows.push(vec![
            classify_twist_type(&t)?.to_string(),
            t.rotation_order.to_string(),
            mark(inc.vertex),
            mark(inc.edge),
            mark(inc.square),
            mark(inc.cube),
            t.direction_class().to_string(),
            norm.to_string(),
        ]);
    }
    Ok(rows)
}

fn half(x: i64) -> String {
    Rational::new(x, 2).to_string()
}

pub fn table2() -> twistoid::Result<Rows> {
    let mut header = vec!["rigid".to_string()];
    header.extend(DeformableClass::ALL.iter().map(|c| c.id().to_string()));
    let mut grid = vec![vec!["None".to_string(); 5]; 5];
    for w in table2_witnesses() {
        let r = classify(&w.params.into())?;
        // Place each witness where the classifier puts it, not where it was listed.
        if let SymmetryProfile::DicosmAxial { rigid, class, .. } = r.profile {
            let row = rigid.row()?;
            let i = RigidRow::ALL.iter().position(|x| *x == row).unwrap();
            let j = DeformableClass::ALL.iter().position(|x| *x == class).unwrap();
            let p = w.params;
            grid[i][j] = format!(
                "p1={} p2={} p3={} q3={}",
                half(p.p1),
                half(p.p2),
                half(p.p3),
                half(p.q3)
            );
        }
    }
    let mut rows = vec![header];
    for (row, cells) in RigidRow::ALL.iter().zip(grid) {
        let mut line = vec![row.label().to_string()];
        line.extend(cells);
        rows.push(line);
    }
    Ok(rows)
}

fn witness_text(p: &TwistoidParams) -> String {
    p.display()
        .into_iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn families_table() -> Rows {
    let mut rows = vec![
        ["manifold", "family", "conditions", "orbits", "witness", "witnessOrbits"]
            .map(String::from)
            .to_vec(),
    ];
    for f in families() {
        rows.push(vec![
            f.family.kind().name().to_string(),
            f.family.id(),
            f.family.conditions(),
            f.family.orbit_formula(),
            witness_text(&f.witness),
            f.witness_orbits.to_string(),
        ]);
    }
    rows
}

pub fn write_csv(out: impl Write, rows: &Rows) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().flexible(false).from_writer(out);
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}
