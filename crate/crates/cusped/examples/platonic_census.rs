//! Verifies every bundled Platonic tessellation against its expected
//! symmetry order, cusp count, link types, and induced cusp action.

use cusped::report::{cmd_verify_example, example_names, EXIT_FIXTURE_MISSING};

fn main() {
    let mut all_ok = true;
    for name in example_names() {
        let report = cmd_verify_example(name, None);
        if report.exit_code == EXIT_FIXTURE_MISSING {
            println!("{name}: fixture missing, skipped\n");
            continue;
        }
        println!("{}", report.render_text());
        all_ok &= report.pass;
    }
    if !all_ok {
        std::process::exit(1);
    }
}
