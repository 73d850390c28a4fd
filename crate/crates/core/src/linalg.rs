//! Dense linear algebra over [`CycNum`].

use crate::exactfield::CycNum;

/// Row-reduces `a` in place; returns the pivot columns.
pub fn rref(a: &mut [Vec<CycNum>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let t = &a[r][j] * &f;
                    a[i][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `a x = b`. Among all solutions the one with every free variable
/// set to zero is returned; `None` if the system is inconsistent.
pub fn solve(a: &[Vec<CycNum>], b: &[CycNum]) -> Option<Vec<CycNum>> {
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<CycNum>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![CycNum::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][n].clone();
    }
    Some(x)
}

/// 2x2 determinant.
pub fn det2(m: &[[CycNum; 2]; 2]) -> CycNum {
    &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
}

/// 3x3 determinant.
pub fn det3(m: &[[CycNum; 3]; 3]) -> CycNum {
    let minor = |r: usize, c: usize| {
        let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        &(&m[rs[0]][cs[0]] * &m[rs[1]][cs[1]]) - &(&m[rs[0]][cs[1]] * &m[rs[1]][cs[0]])
    };
    let mut acc = CycNum::zero();
    for c in 0..3 {
        let t = &m[0][c] * &minor(0, c);
        if c % 2 == 0 {
            acc += &t;
        } else {
            acc -= &t;
        }
    }
    acc
}

pub fn mat_mul<const N: usize>(a: &[[CycNum; N]; N], b: &[[CycNum; N]; N]) -> [[CycNum; N]; N] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = CycNum::zero();
            for k in 0..N {
                acc += &(&a[i][k] * &b[k][j]);
            }
            acc
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    #[test]
    fn particular_solution_sets_free_variables_to_zero() {
        // x + y = 2, z free-less: x + y + z = 3
        let a = vec![vec![c(1), c(1), c(0)], vec![c(1), c(1), c(1)]];
        let x = solve(&a, &[c(2), c(3)]).unwrap();
        assert_eq!(x, vec![c(2), c(0), c(1)]);
        let a = vec![vec![c(1), c(1)], vec![c(2), c(2)]];
        assert!(solve(&a, &[c(1), c(3)]).is_none());
    }

    #[test]
    fn determinants() {
        let m = [[c(2), c(0), c(1)], [c(1), c(3), c(2)], [c(1), c(1), c(1)]];
        assert_eq!(det3(&m), c(0));
        assert_eq!(det2(&[[c(1), c(2)], [c(3), c(4)]]), c(-2));
    }
}
