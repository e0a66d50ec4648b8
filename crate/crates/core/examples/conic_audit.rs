//! Regenerates `book/src/conic-audit.md`.
//!
//! ```text
//! cargo run --release -p enumgeom --example conic_audit > book/src/conic-audit.md
//! ```

fn main() {
    match enumgeom::conics::conic_formula_audit(&enumgeom::conics::AUDIT_CASES) {
        Ok(report) => print!("{report}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
