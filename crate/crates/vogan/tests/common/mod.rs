#![allow(dead_code)]

use std::path::PathBuf;

use vogan::report::DiagramResult;
use vogan_core::{DynkinType, OrbitReport, VoganDiagram};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

/// One hand-transcribed table row.
#[derive(Debug, Clone)]
pub struct Row {
    pub diagram: VoganDiagram,
    /// Weight coordinates of the printed φ (cone generators get coefficient 1).
    pub phi: Vec<i64>,
    /// Printed as a cone `t1φ1 + t2φ2 + ...`.
    pub cone: bool,
    pub phi_in_delta: bool,
    pub sclass: String,
    pub s: String,
    pub dim_v: usize,
    pub dim_m: usize,
    pub real_form: String,
    pub stabilizer: Vec<String>,
    pub center_rank: usize,
}

fn parse_phi(rank: usize, text: &str) -> (Vec<i64>, bool) {
    let mut phi = vec![0; rank];
    let mut cone = false;
    for term in text.split('+') {
        let term = term.trim();
        let (coef, rest) = match term.find("phi") {
            Some(0) => ("", term),
            Some(k) => term.split_at(k),
            None => panic!("bad phi term {term:?}"),
        };
        let c = if coef.is_empty() {
            1
        } else if let Some(t) = coef.strip_prefix('t') {
            cone = true;
            assert!(!t.is_empty());
            1
        } else {
            coef.parse().unwrap()
        };
        let idx: usize = rest.trim_start_matches("phi").parse().unwrap();
        phi[idx - 1] = c;
    }
    (phi, cone)
}

pub fn load_fixture() -> Vec<Row> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_path(fixture_path("reference_tables.csv"))
        .expect("fixture present");
    rdr.records()
        .map(|rec| {
            let rec = rec.unwrap();
            let dtype: DynkinType = rec[0].parse().unwrap();
            let painted: Vec<usize> = rec[1].split_whitespace().map(|x| x.parse().unwrap()).collect();
            let diagram = VoganDiagram::new(dtype, &painted).unwrap();
            let (phi, cone) = parse_phi(dtype.rank(), &rec[2]);
            let parts: Vec<String> = rec[9].split('+').map(str::to_string).collect();
            let center_rank = parts.iter().filter(|p| *p == "R").count();
            let mut stabilizer: Vec<String> = parts.into_iter().filter(|p| p != "R").collect();
            stabilizer.sort();
            Row {
                diagram,
                phi,
                cone,
                phi_in_delta: &rec[3] == "yes",
                sclass: rec[4].to_string(),
                s: rec[5].to_string(),
                dim_v: rec[6].parse().unwrap(),
                dim_m: rec[7].parse().unwrap(),
                real_form: rec[8].to_string(),
                stabilizer,
                center_rank,
            }
        })
        .collect()
}

/// Weight coordinates of a report's φ as integers.
pub fn report_phi(r: &OrbitReport) -> Vec<i64> {
    r.phi.iter().map(|q| vogan_core::rational::to_i64(q).expect("integral weight")).collect()
}

/// Field-by-field differences between a table row and a computed report.
pub fn row_mismatches(row: &Row, r: &OrbitReport) -> Vec<String> {
    let mut bad = Vec::new();
    let mut check = |name: &str, ok: bool, want: String, got: String| {
        if !ok {
            bad.push(format!("{name}: table {want}, computed {got}"));
        }
    };
    check("diagram", row.diagram == r.diagram, row.diagram.to_string(), r.diagram.to_string());
    check("phi", row.phi == report_phi(r), format!("{:?}", row.phi), format!("{:?}", report_phi(r)));
    let multi_cone = r.cone && r.support.len() > 1;
    check("cone", row.cone == multi_cone, row.cone.to_string(), multi_cone.to_string());
    check("phi_in_delta", row.phi_in_delta == r.phi_is_root, row.phi_in_delta.to_string(), r.phi_is_root.to_string());
    let label = r.sclass.map(|c| c.label().to_string()).unwrap_or_default();
    check("type", row.sclass == label, row.sclass.clone(), label);
    check("s", row.s == r.herm_scal.to_string(), row.s.clone(), r.herm_scal.to_string());
    check("dim_v", row.dim_v == r.dim_v, row.dim_v.to_string(), r.dim_v.to_string());
    check("dim_m", row.dim_m == r.dim_m, row.dim_m.to_string(), r.dim_m.to_string());
    check("real_form", row.real_form == r.real_form, row.real_form.clone(), r.real_form.clone());
    let mut names = r.stabilizer.names();
    names.sort();
    check("stabilizer", row.stabilizer == names, format!("{:?}", row.stabilizer), format!("{names:?}"));
    check(
        "center",
        row.center_rank == r.stabilizer.center_rank,
        row.center_rank.to_string(),
        r.stabilizer.center_rank.to_string(),
    );
    bad
}

/// Matches computed results against the table, both ways. Returns the list of problems.
pub fn compare_with_fixture(rows: &[Row], results: &[DiagramResult]) -> Vec<String> {
    let mut problems = Vec::new();
    let computed: Vec<&OrbitReport> = results.iter().flat_map(|d| d.reports.iter()).collect();
    let mut used = vec![false; computed.len()];
    for row in rows {
        let hit = computed.iter().position(|r| r.diagram == row.diagram && report_phi(r) == row.phi);
        match hit {
            None => problems.push(format!("{} {:?}: no computed solution", row.diagram, row.phi)),
            Some(k) => {
                if used[k] {
                    problems.push(format!("{} {:?}: matched twice", row.diagram, row.phi));
                }
                used[k] = true;
                for m in row_mismatches(row, computed[k]) {
                    problems.push(format!("{} {:?}: {m}", row.diagram, row.phi));
                }
            }
        }
    }
    for (k, r) in computed.iter().enumerate() {
        if !used[k] {
            problems.push(format!("{} {:?}: computed but not in the table", r.diagram, report_phi(r)));
        }
    }
    problems
}
