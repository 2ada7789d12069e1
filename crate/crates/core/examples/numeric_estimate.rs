//! Seeded multistart estimate of the extremes of P/Q on shrinking spheres.

use mlim::ratlimit::{numeric_estimate, NumericParams};
use mlim::series::parse_polynomial;

fn main() {
    let xyz = ["x", "y", "z"];
    let p = parse_polynomial("x*y+y*z", &xyz).unwrap();
    let q = parse_polynomial("x^2+y^2+z^2", &xyz).unwrap();
    for seed in [0, 1] {
        let params = NumericParams { seed, ..Default::default() };
        let v = numeric_estimate(&p, &q, &params).unwrap();
        let (lo, hi) = (v.lower.unwrap(), v.upper.unwrap());
        println!("seed {}: lower {:.9} (+/- {:.1e}), upper {:.9} (+/- {:.1e})", seed, lo.value.to_f64(), lo.certainty.error(), hi.value.to_f64(), hi.certainty.error());
    }
    println!("exact extremes are -/+ sqrt(2)/2 = {:.6}", 0.5f64.sqrt());
}
