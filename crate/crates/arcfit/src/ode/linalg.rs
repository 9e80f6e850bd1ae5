//! Dense LU factorization with partial pivoting, sized for the small
//! (tens to low hundreds) Newton systems the integrator produces.

/// Row-major in-place LU factors of an n×n matrix.
#[derive(Debug, Clone)]
pub struct LuFactors {
    lu: Vec<f64>,
    pivot: Vec<usize>,
    n: usize,
}

impl LuFactors {
    /// Factor `a` (row-major, consumed). Returns `None` when a pivot
    /// underflows, i.e. the matrix is numerically singular.
    pub fn factor(mut a: Vec<f64>, n: usize) -> Option<Self> {
        debug_assert_eq!(a.len(), n * n);
        let mut pivot: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let mut max_val = a[k * n + k].abs();
            let mut max_row = k;
            for i in (k + 1)..n {
                let v = a[i * n + k].abs();
                if v > max_val {
                    max_val = v;
                    max_row = i;
                }
            }
            if !(max_val > 1e-300) || !max_val.is_finite() {
                return None;
            }
            if max_row != k {
                pivot.swap(k, max_row);
                for j in 0..n {
                    a.swap(k * n + j, max_row * n + j);
                }
            }
            let akk = a[k * n + k];
            for i in (k + 1)..n {
                a[i * n + k] /= akk;
                let lik = a[i * n + k];
                if lik != 0.0 {
                    for j in (k + 1)..n {
                        a[i * n + j] -= lik * a[k * n + j];
                    }
                }
            }
        }
        Some(LuFactors { lu: a, pivot, n })
    }

    /// Solve `A x = b` in place.
    pub fn solve(&self, b: &mut [f64]) {
        let n = self.n;
        debug_assert_eq!(b.len(), n);
        let mut x = vec![0.0; n];
        for i in 0..n {
            x[i] = b[self.pivot[i]];
        }
        for i in 0..n {
            for j in 0..i {
                x[i] -= self.lu[i * n + j] * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                x[i] -= self.lu[i * n + j] * x[j];
            }
            x[i] /= self.lu[i * n + i];
        }
        b.copy_from_slice(&x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn solves_a_known_system() {
        // A = [[2,1,0],[1,3,1],[0,1,4]], x = [1,-2,3] -> b = A x
        let a = vec![2.0, 1.0, 0.0, 1.0, 3.0, 1.0, 0.0, 1.0, 4.0];
        let lu = LuFactors::factor(a, 3).unwrap();
        let mut b = vec![0.0, -2.0, 10.0];
        lu.solve(&mut b);
        for (got, want) in b.iter().zip([1.0, -2.0, 3.0]) {
            assert_relative_eq!(got, &want, max_relative = 1e-12);
        }
    }

    #[test]
    fn rejects_singular_matrix() {
        let a = vec![1.0, 2.0, 2.0, 4.0];
        assert!(LuFactors::factor(a, 2).is_none());
    }

    #[test]
    fn handles_permutation_requiring_pivoting() {
        let a = vec![0.0, 1.0, 1.0, 0.0];
        let lu = LuFactors::factor(a, 2).unwrap();
        let mut b = vec![5.0, 7.0];
        lu.solve(&mut b);
        assert_relative_eq!(b[0], 7.0);
        assert_relative_eq!(b[1], 5.0);
    }
}
