//! Exact Gaussian elimination over any field type.

use num_traits::Num;

/// Scalars usable by [`solve`]: exact fields such as `Ratio<i64>`.
pub trait Field: Num + Clone + PartialEq {}

impl<T: Num + Clone + PartialEq> Field for T {}

pub type Rational = num_rational::Ratio<i64>;

/// Solves the square system `a * x = b`. Returns `None` when `a` is singular.
pub fn solve<T: Field>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Option<Vec<T>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / a[col][col].clone();
            for c in col..n {
                let delta = factor.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - delta;
            }
            let delta = factor * b[col].clone();
            b[r] = b[r].clone() - delta;
        }
    }
    Some((0..n).map(|i| b[i].clone() / a[i][i].clone()).collect())
}
