//! A denominator whose low-order truncations have an isolated zero but which
//! itself vanishes along two real curves.

use mlim::cli::format_text;
use mlim::mlim::{mlim_run, MlimConfig};
use mlim::polyalg::{var_list, Rat};
use mlim::series::parse_expr;

fn main() {
    let names = vec!["x".to_string(), "y".to_string()];
    let g = parse_expr("1", &names).unwrap();
    let h = parse_expr("y^4+(y-x^2)^2-x^6-y^6", &names).unwrap();
    let r = mlim_run(&g, &h, &var_list(&names), &[Rat::from_integer(0.into()), Rat::from_integer(0.into())], &MlimConfig::default()).unwrap();
    print!("{}", format_text(&r, &names, 1));
}
