use tangentcone::grobner::*;
use tangentcone::poly::*;
use tangentcone::poly::text::parse_polynomial;
fn main() {
    let ord = MonomialOrder::default_global();
    let gens = vec![
        parse_polynomial("x1^2-x0*x2").unwrap(),
        parse_polynomial("x1*x2-x0*y").unwrap(),
    ];
    let b = buchberger(&gens, &ord).unwrap();
    for g in &b.generators { println!("{g}"); }
}
