//! Dense exact linear solve over big rationals, sized for the small
//! class-function and partitioned-permutation systems in this crate.

use combinat::Scalar;
use num_traits::Zero;

/// Gaussian elimination with exact arithmetic. Returns `None` when the
/// matrix is singular.
pub fn solve_exact(mut a: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for x in &mut a[col][col..] {
            *x = &*x / &p;
        }
        b[col] = &b[col] / &p;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] -= sub;
            }
            let sub = &f * &b[col];
            b[r] -= sub;
        }
    }
    Some(b)
}
