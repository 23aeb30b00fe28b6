//! Exact dense linear algebra over a single scalar mode: reduced row
//! echelon form, rank, kernel bases, and linear solving.  Sizes stay
//! small downstream (homology of truncated complexes), so a dense
//! representation is the simple and fast choice.

use crate::scalar::{Field, Scalar};

/// A dense matrix with all entries in one scalar mode.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length must match columns");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    acc = acc.add(&self.get(r, c).mul(&v[c]));
                }
                acc
            })
            .collect()
    }

    /// Reduces in place to reduced row echelon form; returns the pivot
    /// column of each leading row.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            // Find a row at or below `lead` with a nonzero entry here.
            let Some(src) = (lead..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, src);
            let inv = self.get(lead, col).inverse();
            self.scale_row(lead, &inv);
            for r in 0..self.rows {
                if r != lead && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).neg();
                    self.add_scaled_row(r, lead, &factor);
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c).mul(s);
            self.set(r, c, v);
        }
    }

    fn add_scaled_row(&mut self, target: usize, source: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(target, c).add(&self.get(source, c).mul(s));
            self.set(target, c, v);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// A basis of the right kernel `{v : A·v = 0}`, one vector per free
    /// column of the reduced form.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            // pivot_set[col] = which reduced row leads in this column.
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            // Each pivot variable compensates the free column's entry.
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = m.get(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `A·x = rhs`, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length must match rows");
        // Eliminate on the augmented matrix.
        let mut aug = Matrix::zeros(self.field.clone(), self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None; // a row reads 0 = 1
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Nullity (dimension of the right kernel).
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field.clone(),
            rows.iter()
                .map(|r| r.iter().map(|&v| field.integer(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel_over_the_rationals() {
        let f = Field::Rational;
        let a = m(f.clone(), &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let kb = a.kernel_basis();
        assert_eq!(kb.len(), 1);
        for v in &kb {
            assert!(a.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solving_inverts_application() {
        let f = Field::prime(5).unwrap();
        let a = m(f.clone(), &[&[1, 2], &[3, 4]]);
        let want = vec![f.integer(2), f.integer(3)];
        let rhs = a.apply(&want);
        let got = a.solve(&rhs).expect("consistent system");
        assert_eq!(a.apply(&got), rhs);
    }

    #[test]
    fn inconsistent_systems_return_none() {
        let f = Field::Rational;
        let a = m(f.clone(), &[&[1, 1], &[1, 1]]);
        let rhs = vec![f.zero(), f.one()];
        assert!(a.solve(&rhs).is_none());
    }

    #[test]
    fn kernel_dimension_over_a_prime_field() {
        let f = Field::prime(2).unwrap();
        // Over F_2 the all-ones 3x3 matrix has rank 1.
        let a = m(f.clone(), &[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.nullity(), 2);
        for v in a.kernel_basis() {
            assert!(a.apply(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rational_pivots_divide_exactly() {
        let f = Field::Rational;
        let a = m(f.clone(), &[&[2, 3], &[5, 7]]);
        // Invertible: kernel trivial, any system solvable.
        assert_eq!(a.rank(), 2);
        assert!(a.kernel_basis().is_empty());
        let x = a.solve(&[f.one(), f.zero()]).unwrap();
        assert_eq!(a.apply(&x), vec![f.one(), f.zero()]);
    }
}
