use losanitsch_core::identities::{catalog, identity_battery};

#[test]
fn full_battery_passes() {
    let reports = identity_battery(14, &[3, 5, 7]).unwrap();
    assert_eq!(reports.len(), catalog().len());
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed).map(|r| r.to_line()).collect();
    for r in &reports {
        println!("{}", r.to_line());
    }
    assert!(failed.is_empty(), "failing checks:\n{}", failed.join("\n"));
}

#[test]
fn reports_follow_catalog_order() {
    let reports = identity_battery(6, &[3]).unwrap();
    let ids: Vec<&str> = reports.iter().map(|r| r.id).collect();
    let expected: Vec<&str> = catalog().iter().map(|s| s.id).collect();
    assert_eq!(ids, expected);
}
