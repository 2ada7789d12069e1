//! Exact Taylor truncations of analytic expressions at the origin.

use mlim::polyalg::var_list;
use mlim::series::{parse_expr, taylor};

fn main() {
    let names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
    let vars = var_list(&names);
    let g = parse_expr("exp(sin(x^2+y^4+z^6))-1", &names).unwrap();
    let h = parse_expr("sqrt(cos(x)-sin(y^2)-z^4)-1", &names).unwrap();

    for d in [3, 5] {
        println!("T{}h = {}", d, taylor(&h, &vars, d).unwrap());
    }
    println!("T5g = {}", taylor(&g, &vars, 5).unwrap());

    // functions must be expanded at their center: log and sqrt at 1, the rest at 0
    let bad = parse_expr("log(x)", &names).unwrap();
    println!("log(x): {}", taylor(&bad, &vars, 3).unwrap_err());
}
