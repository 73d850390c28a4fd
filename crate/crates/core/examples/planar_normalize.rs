//! Straightening a planar embedding x -> (0, Q, R) to (x, 1/P, 0).

use eqcurve::planar3::{fmt_triple, normalize_planar, PlanarEmbedding, DEFAULT_DEGREE_CAP};
use eqcurve::polyring::{parse_ratfun, parse_upoly};

fn main() -> eqcurve::Result<()> {
    let e = PlanarEmbedding::new(parse_upoly("x")?, parse_ratfun("1/x")?, parse_ratfun("x + 1/x")?)?;
    let (n, cert) = normalize_planar(&e, DEFAULT_DEGREE_CAP)?;
    println!("A = {}, (a, b) = ({}, {})", n.a_poly, n.ab.0, n.ab.1);
    for (i, f) in n.chain.iter().enumerate() {
        println!("f{} = {}", i + 2, fmt_triple(f.forward()));
    }
    let img = n.composite().apply(&e.as_triple());
    println!("image = ({}, {}, {})", img[0], img[1], img[2]);
    println!("{cert}");
    assert!(cert.passed());
    Ok(())
}
