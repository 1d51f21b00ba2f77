use std::collections::BTreeSet;
use std::path::Path;

use pshlab::suites::REGISTRY;

fn check_names(dir: &Path, out: &mut BTreeSet<String>) {
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.is_dir() {
            check_names(&path, out);
        } else if path.extension().is_some_and(|e| e == "rs") {
            let src = std::fs::read_to_string(&path).unwrap();
            for piece in src.split("CheckReport::new(\"").skip(1) {
                out.insert(piece.split('"').next().unwrap().to_string());
            }
        }
    }
}

#[test]
fn every_check_belongs_to_a_suite() {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/src");
    let mut found = BTreeSet::new();
    check_names(&src, &mut found);
    assert!(found.len() > 20);
    let registered: BTreeSet<String> = REGISTRY.iter().flat_map(|(_, c)| c.iter().map(|s| s.to_string())).collect();
    let orphans: Vec<_> = found.difference(&registered).collect();
    assert!(orphans.is_empty(), "checks outside every suite: {orphans:?}");
}

#[test]
fn every_suite_is_accepted_by_the_cli() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_pshlab")).args(["verify", "--help"]).output().unwrap();
    assert!(out.status.success());
    for (suite, _) in REGISTRY {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_pshlab"))
            .args(["verify", suite, "--n", "1", "--q", "2", "--maxdeg", "1", "--samples", "1"])
            .output()
            .unwrap();
        let code = out.status.code().unwrap();
        assert_ne!(code, 2, "{suite}: {}", String::from_utf8_lossy(&out.stderr));
    }
}
