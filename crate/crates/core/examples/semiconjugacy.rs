//! Semiconjugacy classes as cosets of `[(φ − I) | c]`, their
//! representatives, and the semicentralizer `ker(φ − I)`.
//!
//! ```bash
//! cargo run --example semiconjugacy
//! ```

use torus_nielsen::hochschild::same_class;
use torus_nielsen::nielsen::{semicentralizer, semiconjugacy_classes};
use torus_nielsen::HomotopyDescriptor;

fn main() -> torus_nielsen::Result<()> {
    let cases = [
        HomotopyDescriptor::from_i64(&[[1, 0], [0, 3]], &[2, 0])?,
        HomotopyDescriptor::from_i64(&[[1, 0], [0, 1]], &[2, 3])?,
        HomotopyDescriptor::from_i64(&[[2, 0], [0, 2]], &[1, 1])?,
    ];
    for desc in &cases {
        let classes = semiconjugacy_classes(desc);
        println!("phi = {}, c = {:?}", desc.phi(), desc.c());
        println!("  invariant factors {:?}, free rank {}", classes.structure.invariant_factors, classes.structure.free_rank);
        match &classes.representatives {
            Some(reps) => {
                let shown: Vec<String> = reps.iter().map(ToString::to_string).collect();
                println!("  {} classes: {}", reps.len(), shown.join(", "));
                if let [a, b, ..] = reps.as_slice() {
                    println!("  {a} ~ {b}: {}", same_class(a, b, desc)?);
                }
            }
            None => println!("  infinitely many classes"),
        }
        println!("  semicentralizer basis {:?}", semicentralizer(desc));
    }
    Ok(())
}
