use crate::error::{Error, Result};
use crate::exactfield::{root_of_unity, CycNum};
use crate::projline::{sort_points, Moebius, P1Point};

/// `{[a_i w^j : 1]}` for a primitive cube root of unity `w`.
pub fn cor25_family(k: usize, a: &[CycNum]) -> Result<Vec<P1Point>> {
    if a.len() != k || k == 0 {
        return Err(Error::DegenerateParams(format!("expected {k} parameters, got {}", a.len())));
    }
    if !a[0].is_one() {
        return Err(Error::DegenerateParams("a_1 must be 1".into()));
    }
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            return Err(Error::DegenerateParams(format!("a_{} = 0", i + 1)));
        }
        for aj in &a[..i] {
            if (ai.checked_div(aj)?).pow(3).is_one() {
                return Err(Error::DegenerateParams(format!("{ai} and {aj} differ by a cube root of unity")));
            }
        }
    }
    let w = root_of_unity(3, 1);
    let mut pts: Vec<P1Point> =
        a.iter().flat_map(|ai| (0..3).map(|j| P1Point::affine(ai * &w.pow(j))).collect::<Vec<_>>()).collect();
    sort_points(&mut pts);
    Ok(pts)
}

/// `[x:y] -> [x : w y]`.
pub fn cor25_h() -> Moebius {
    Moebius::new([[1.into(), 0.into()], [0.into(), root_of_unity(3, 1)]]).expect("invertible")
}
