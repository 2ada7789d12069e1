//! Real Puiseux branches of a plane curve through the origin.

use mlim::puiseux::{branch_expand, isolated_zero_2d, Side};
use mlim::ratlimit::engine::describe_branch;
use mlim::series::parse_polynomial;

fn main() {
    let xy = ["x", "y"];
    let h = parse_polynomial("y^4+(y-x^2)^2-x^6-y^6", &xy).unwrap();
    for side in [Side::Pos, Side::Neg] {
        let set = branch_expand(&h, 8, side, None).unwrap();
        println!("x -> 0{}: {} real branches, {} nonreal roots", if side == Side::Pos { "+" } else { "-" }, set.branches.len(), set.nonreal);
        for b in &set.branches {
            println!("  {}", describe_branch(&["x".into(), "y".into()], b));
        }
    }

    let t5 = parse_polynomial("y^2-2*x^2*y+x^4+y^4", &xy).unwrap();
    println!("isolated zero of the truncation: {}", isolated_zero_2d(&t5).unwrap());
    println!("isolated zero of the full polynomial: {}", isolated_zero_2d(&h).unwrap());

    let cusp = parse_polynomial("y^2-x^3", &xy).unwrap();
    for side in [Side::Pos, Side::Neg] {
        println!("cusp, side {:?}: {} branches", side, branch_expand(&cusp, 4, side, None).unwrap().branches.len());
    }
}
