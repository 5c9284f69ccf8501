//! Symbolic exponent rows in terms of the block parameters (r, s, t).

use gitstab::cli::table_command;
use gitstab::git::plane_quadratic_table;
use gitstab::poly::default_var_names;

fn main() -> gitstab::Result<()> {
    let table = table_command(3, 2, 3)?;
    println!("{}", table.text.join("\n"));

    println!("plane quadratic maps, weights (r, s - r, -s):");
    let names = default_var_names(3);
    for (j, mono, form) in plane_quadratic_table() {
        let m = gitstab::Poly::term(mono, gitstab::poly::int(1));
        println!("  {} {:<4} {form}", names[j], m.to_string_with(&names));
    }
    Ok(())
}
