use modext::catalog;
use modext::json::{document_from_json, parse, Document};
use modext::extensions::verify_extension;

#[test]
fn shipped_files_match_regeneration() {
    let dir = catalog::data_dir();
    for (rel, text) in catalog::entries().unwrap() {
        let on_disk = std::fs::read_to_string(dir.join(&rel)).unwrap_or_else(|_| panic!("missing data file {rel}"));
        assert_eq!(on_disk, text, "{rel} is stale; regenerate with `modext catalog --write crates/core/data`");
    }
}

#[test]
fn shipped_extensions_verify() {
    let dir = catalog::data_dir();
    for (rel, _) in catalog::entries().unwrap() {
        if !(rel.starts_with("extensions/") || rel.starts_with("sixteenfold/")) {
            continue;
        }
        let v = parse(&std::fs::read_to_string(dir.join(&rel)).unwrap()).unwrap();
        match document_from_json(&v).unwrap() {
            Document::Extension(e) => assert!(verify_extension(&e).all_passed(), "{rel}"),
            Document::Data(_) => panic!("{rel} should be an extension"),
        }
    }
}
