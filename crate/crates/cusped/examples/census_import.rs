//! Imports the tetrahedral census gluing tables bundled under data/census/,
//! verifies them, and round-trips them through the export path.

use cusped::tess::{parse_census_gluing_table, to_census_gluing_table};

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data/census");
    let mut found = false;
    let mut entries: Vec<_> = match std::fs::read_dir(dir) {
        Ok(rd) => rd.filter_map(|e| e.ok()).collect(),
        Err(_) => Vec::new(),
    };
    entries.sort_by_key(|e| e.file_name());
    for entry in entries {
        let path = entry.path();
        if path.extension().and_then(|s| s.to_str()) != Some("tbl") {
            continue;
        }
        found = true;
        let text = std::fs::read_to_string(&path).unwrap();
        let tess = match parse_census_gluing_table(&text) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                std::process::exit(2);
            }
        };
        let cusps = tess.cusps().expect("links must be flat");
        let autos = tess.automorphisms();
        println!(
            "{}: {} tetrahedra, {} flags, automorphism group of order {}, {} cusps",
            path.file_name().unwrap().to_string_lossy(),
            tess.cells().len(),
            tess.flag_count(),
            autos.flag_group.order(),
            cusps.len()
        );
        // Export and reimport: identical combinatorics.
        let exported = to_census_gluing_table(&tess).unwrap();
        let again = parse_census_gluing_table(&exported).unwrap();
        assert_eq!(tess.to_text(), again.to_text());
        println!("  round trip through the gluing-table format: ok");
    }
    if !found {
        println!("no census tables bundled under {dir}");
    }
}
