//! Prints the invariant-form table of the named N = 3 modules for every star.
//!
//! `cargo run --example signature_table`

use uqsl2::forms::solve_forms;
use uqsl2::rep::NAMED_MODULES_N3;
use uqsl2::{EmbeddingChoice, StarKind, StarStructure, Structure, Uq};

fn main() -> uqsl2::Result<()> {
    let h = Uq::new(3)?;
    let st = Structure::new(&h)?;
    let e = EmbeddingChoice::default();
    println!("{:8} {:9} {:>8}  {:10} range", "module", "star", "real dim", "generic");
    for name in NAMED_MODULES_N3 {
        let rep = st.named_module(name)?;
        for kind in StarKind::ALL {
            let sp = solve_forms(&h, &rep, &StarStructure::builtin(&h, kind));
            let range: Vec<String> = sp.signature_range(&e, 24)?.iter().map(|s| s.to_string()).collect();
            let generic = sp.generic_signature(&e)?.to_string();
            println!("{name:8} {:9} {:>8}  {generic:10} {}", kind.cli_name(), sp.real_dim(), range.join(" "));
        }
    }
    Ok(())
}
