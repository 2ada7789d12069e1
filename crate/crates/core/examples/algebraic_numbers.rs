//! Real root isolation and exact arithmetic on real algebraic numbers.

use mlim::polyalg::rat::fmt_rat;
use mlim::polyalg::{isolate_real_roots, Real, UPoly};

fn main() {
    // t^3 - 2t - 1 = (t + 1)(t^2 - t - 1)
    let p = UPoly::from_i64(&[-1, -2, 0, 1]);
    for iv in isolate_real_roots(&p) {
        println!("root in ({}, {})", fmt_rat(&iv.lo), fmt_rat(&iv.hi));
    }

    let roots = Real::roots_of(&UPoly::from_i64(&[-2, 0, 1]));
    let (a, b) = (&roots[0], &roots[1]);
    println!("sqrt(2) = {}", b);
    println!("sqrt(2) * sqrt(2) = {}", b.mul(b));
    println!("-sqrt(2) + sqrt(2) is zero: {}", a.add(b).is_zero());
    println!("1 / sqrt(2) ~ {}", b.recip().unwrap().to_f64());
    println!("-sqrt(2) < sqrt(2): {:?}", a.cmp_exact(b));
}
