//! Limits at a point other than the origin.

use mlim::cli::format_text;
use mlim::mlim::{mlim_run, LimitMode, MlimConfig};
use mlim::polyalg::rat::parse_rat;
use mlim::polyalg::var_list;
use mlim::series::parse_expr;

fn main() {
    let names = vec!["x".to_string(), "y".to_string()];
    let vars = var_list(&names);
    let point = [parse_rat("1/2").unwrap(), parse_rat("-1").unwrap()];
    let cfg = MlimConfig { mode: LimitMode::Lim, ..Default::default() };

    let g = parse_expr("log(2*x)*(y+1)", &names).unwrap();
    let h = parse_expr("sin(x-1/2)^2+(y+1)^2", &names).unwrap();
    print!("{}", format_text(&mlim_run(&g, &h, &vars, &point, &cfg).unwrap(), &names, 0));

    let g = parse_expr("(2*x-1)^2", &names).unwrap();
    let h = parse_expr("1-cos(2*x-1)+(y+1)^4", &names).unwrap();
    print!("{}", format_text(&mlim_run(&g, &h, &vars, &point, &MlimConfig::default()).unwrap(), &names, 0));
}
