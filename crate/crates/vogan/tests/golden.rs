mod common;

use std::fs;

use common::{compare_with_fixture, fixture_path, load_fixture};
use vogan::report::{render, Format, TableConfig};
use vogan::sweep::{sweep, table_types, SweepOptions};

const OPTS: SweepOptions = SweepOptions { all_diagrams: false, keep_empty: false };

#[test]
fn fixture_is_complete() {
    let rows = load_fixture();
    assert_eq!(rows.len(), 65);
    let e8 = rows.iter().filter(|r| r.diagram.dtype().to_string() == "E8").count();
    assert_eq!(e8, 9);
}

#[test]
fn tables_reproduce_the_reference_rows() {
    let rows = load_fixture();
    let results = sweep(&table_types(4, true), OPTS, None).unwrap();
    let problems = compare_with_fixture(&rows, &results);
    assert!(problems.is_empty(), "{}", problems.join("\n"));
}

/// Snapshot of the CSV rendering; refresh with `UPDATE_GOLDEN=1`.
#[test]
fn csv_rendering_snapshot() {
    let results = sweep(&table_types(4, true), OPTS, None).unwrap();
    let got = render(&results, &TableConfig::new(Format::Csv)).unwrap();
    let path = fixture_path("golden/tables_rank4_exceptional.csv");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, &got).unwrap();
    }
    let want = fs::read_to_string(&path).expect("snapshot missing; run with UPDATE_GOLDEN=1");
    assert_eq!(got, want);
}
