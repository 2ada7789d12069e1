//! Full run of the driver on a three-variable quotient whose liminf and
//! limsup differ.

use mlim::cli::format_text;
use mlim::mlim::{mlim_run, MlimConfig};
use mlim::polyalg::{var_list, Rat};
use mlim::series::parse_expr;

fn main() {
    let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let g = parse_expr("exp(sin(x^2+y^4+z^6))-1", &names).unwrap();
    let h = parse_expr("sqrt(cos(x)-sin(y^2)-z^4)-1", &names).unwrap();
    let origin = vec![Rat::from_integer(0.into()); 3];
    let r = mlim_run(&g, &h, &var_list(&names), &origin, &MlimConfig::default()).unwrap();
    print!("{}", format_text(&r, &names, 1));
}
