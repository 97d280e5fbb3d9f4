//! The JSON files under `fixtures/` must match the built-in catalog.
//! Run with `MATADJ_WRITE_FIXTURES=1` to regenerate them.

use std::fs;
use std::path::PathBuf;

use matadj::catalog::catalog;
use matadj::io::{adjoint_to_json, matroid_to_json, parse_adjoint, parse_matroid};
use matadj::{adjoint_from_representation, Matroid};

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn expected_files() -> Vec<(String, String)> {
    let mut files = Vec::new();
    for e in catalog() {
        let rep = e.representation.expect("catalog entries carry representations");
        let m = Matroid::from_representation(rep.clone()).unwrap().with_name(e.name.clone());
        assert_eq!(m, e.matroid);
        let phi = adjoint_from_representation(&m, &rep).unwrap();
        files.push((format!("{}.json", e.slug), matroid_to_json(&m)));
        files.push((format!("{}.adjoint.json", e.slug), adjoint_to_json(&phi)));
    }
    files
}

#[test]
fn fixture_files_match_catalog() {
    let dir = fixture_dir();
    let write = std::env::var_os("MATADJ_WRITE_FIXTURES").is_some();
    for (name, text) in expected_files() {
        let path = dir.join(&name);
        if write {
            fs::create_dir_all(&dir).unwrap();
            fs::write(&path, &text).unwrap();
        }
        let on_disk = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, text, "{name} is stale; rerun with MATADJ_WRITE_FIXTURES=1");
        if name.ends_with(".adjoint.json") {
            assert!(matadj::adjoint::full_verification(&parse_adjoint(&on_disk).unwrap()).valid, "{name}");
        } else {
            parse_matroid(&on_disk).unwrap();
        }
    }
}
