//! Lower and upper limits of rational functions at the origin.

use mlim::ratlimit::{critical_curve, liminf_limsup, EngineConfig};
use mlim::series::parse_polynomial;

fn show(p: &str, q: &str, vars: &[&str]) {
    let (pp, qq) = (parse_polynomial(p, vars).unwrap(), parse_polynomial(q, vars).unwrap());
    match liminf_limsup(&pp, &qq, &EngineConfig::default()) {
        Ok(v) => {
            let lo = v.lower.map(|b| b.value.to_string()).unwrap_or("?".into());
            let hi = v.upper.map(|b| b.value.to_string()).unwrap_or("?".into());
            println!("({}) / ({}): [{}, {}]", p, q, lo, hi);
            for w in v.witnesses {
                println!("    {}: {}", w.kind, w.detail);
            }
        }
        Err(e) => println!("({}) / ({}): {}", p, q, e),
    }
}

fn main() {
    let xy = ["x", "y"];
    let cc = critical_curve(&parse_polynomial("x*y", &xy).unwrap(), &parse_polynomial("x^2+y^2", &xy).unwrap()).unwrap();
    println!("critical curve of xy/(x^2+y^2): {}", cc.w);

    show("x*y", "-(x^2+y^2)/2", &xy);
    show("x^2+x*y", "x^2+y^2", &xy);
    show("x", "x^2+y^2", &xy);
    show("x^3*y", "x^4+y^2", &xy);
    show("x^2+y^2+z^2", "(x^2+y^2+z^2)/2", &["x", "y", "z"]);
    show("1", "x^2-y^2", &xy);
}
