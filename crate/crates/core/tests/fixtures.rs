//! The bundled JSON fixtures are the canonical serialisations of the built-in
//! constructions. Set `BRAIDKIT_BLESS=1` to rewrite them.

use std::path::PathBuf;

use braidkit::format::AlgebraFile;
use braidkit::hopf::{group_algebra, idempotent_monoid_bialgebra, sweedler_h4};
use braidkit::Field;

fn expected() -> Vec<(&'static str, AlgebraFile)> {
    let q = Field::Rational;
    vec![
        ("kz2", AlgebraFile::from_bialgebra("kz2", &group_algebra(q, 2))),
        ("kz4", AlgebraFile::from_bialgebra("kz4", &group_algebra(q, 4))),
        ("sweedler4", AlgebraFile::from_bialgebra("sweedler4", &sweedler_h4(q))),
        ("monoid2", AlgebraFile::from_bialgebra("monoid2", &idempotent_monoid_bialgebra(q))),
    ]
}

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

#[test]
fn bundled_fixtures_are_canonical() {
    let bless = std::env::var_os("BRAIDKIT_BLESS").is_some();
    for (name, file) in expected() {
        let text = file.to_canonical_string();
        if bless {
            std::fs::write(path(name), &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(path(name)).unwrap();
        assert_eq!(on_disk, text, "{name}.json drifted");
        let parsed = AlgebraFile::parse(&on_disk).unwrap();
        assert_eq!(parsed.to_canonical_string(), on_disk);
        parsed.bialgebra(true).unwrap();
    }
}
