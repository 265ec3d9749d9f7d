//! Writes the shipped JSON instances: `cargo run -p hopf_lazy --example export_instances [dir]`.

use hopf_lazy::instances::{cayley, dual_numbers, shift};

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/instances").into());
    std::fs::create_dir_all(&dir)?;
    let mut all = vec![dual_numbers()];
    for n in [2, 3, 4, 6] {
        all.push(shift(n));
        all.push(cayley(n));
    }
    for alg in all {
        let path = format!("{dir}/{}.json", alg.name);
        std::fs::write(&path, alg.to_json())?;
        println!("{path}");
    }
    Ok(())
}
