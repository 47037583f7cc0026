use super::{FieldSpec, LinalgError, Scalar};

/// Dense matrix over an exact field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(bad) = data.iter().find(|e| !field.contains(e)) {
            return Err(LinalgError::FieldMismatch(format!("entry {bad:?} is not in {field}")));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        if let Some(bad) = rows.iter().find(|row| row.len() != cols) {
            return Err(LinalgError::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Matrix::new(field, r, cols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: &FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| field.from_i64(v))).collect();
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(self.field.contains(&v));
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn same_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b))))
            .collect())
    }

    fn zip_with(&self, other: &Matrix, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| op(a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        let f = self.field.clone();
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        let f = self.field.clone();
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!("vstack of {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub(crate) fn put_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(&self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend(self.row(r).iter().cloned());
        }
        Matrix { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    /// Reduced row echelon form. Pivot rows are chosen as the first nonzero
    /// candidate below the current row, so the result is deterministic.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = f.mul(m.get(row, c), &inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), &f.mul(&factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the right null space: one vector per free column,
    /// with that free variable set to one and the other free variables zero.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let f = &self.field;
        let Rref { matrix: r, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(r.get(i, free));
                }
                v
            })
            .collect()
    }

    /// Canonical particular solution of `self · x = b` (free variables zero),
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        if let Some(bad) = b.iter().find(|e| !self.field.contains(e)) {
            return Err(LinalgError::FieldMismatch(format!("entry {bad:?} is not in {}", self.field)));
        }
        let rhs = Matrix { field: self.field.clone(), rows: self.rows, cols: 1, data: b.to_vec() };
        let aug = self.hstack(&rhs)?;
        let Rref { matrix: r, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n)).expect("same shape");
        let Rref { matrix: r, pivots, .. } = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of the column space, as the pivot columns of `self`.
    pub fn column_space(&self) -> Matrix {
        let pivots = self.rref().pivots;
        self.select_columns(&pivots)
    }

    /// Indices of standard unit vectors that extend the column space of `self`
    /// to the whole space, chosen greedily in index order.
    pub fn complement_units(&self) -> Vec<usize> {
        let aug = self.hstack(&Matrix::identity(&self.field, self.rows)).expect("same rows");
        aug.rref().pivots.into_iter().filter(|&p| p >= self.cols).map(|p| p - self.cols).collect()
    }

    /// Whether every column of `other` lies in the column space of `self`.
    pub fn spans(&self, other: &Matrix) -> Result<bool, LinalgError> {
        Ok(self.hstack(other)?.rank() == self.rank())
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("square");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("square");
            }
        }
        acc
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        let mut out = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        out.put_block(0, 0, self);
        out.put_block(self.rows, self.cols, other);
        Ok(out)
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).fold(self.field.zero(), |acc, i| self.field.add(&acc, self.get(i, i)))
    }

    /// Row-major entries in canonical decimal form.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|e| e.to_string()).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn rref_identity_over_f5() {
        let id = Matrix::identity(&f(5), 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_char_two_cancellation() {
        let m = Matrix::from_i64(&f(2), &[&[1, 1], &[1, 1]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(&f(2), &[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_proportional_rows_over_q() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(&q, &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(&q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn mixed_entries_rejected() {
        let err = Matrix::new(f(3), 1, 2, vec![Scalar::Mod(1), FieldSpec::rationals().one()]).unwrap_err();
        assert!(matches!(err, LinalgError::FieldMismatch(_)));
        let a = Matrix::identity(&f(3), 2);
        let b = Matrix::identity(&f(5), 2);
        assert!(matches!(a.mul(&b), Err(LinalgError::FieldMismatch(_))));
    }

    #[test]
    fn kernel_examples() {
        let f3 = f(3);
        let k = Matrix::from_i64(&f3, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![Scalar::Mod(2), Scalar::Mod(1)]]);
        assert!(Matrix::identity(&f3, 3).kernel_basis().is_empty());
        let z = Matrix::zeros(&f3, 2, 3).kernel_basis();
        assert_eq!(z.len(), 3);
        for (i, v) in z.iter().enumerate() {
            for (j, e) in v.iter().enumerate() {
                assert_eq!(e.is_one(), i == j);
            }
        }
    }

    #[test]
    fn solve_examples() {
        let f2 = f(2);
        let b = vec![Scalar::Mod(1), Scalar::Mod(0)];
        assert_eq!(Matrix::identity(&f2, 2).solve(&b).unwrap(), Some(b.clone()));
        let m = Matrix::from_i64(&f2, &[&[1, 1]]);
        assert_eq!(m.solve(&[Scalar::Mod(1)]).unwrap(), Some(vec![Scalar::Mod(1), Scalar::Mod(0)]));
        assert_eq!(Matrix::from_i64(&f2, &[&[0]]).solve(&[Scalar::Mod(1)]).unwrap(), None);
        assert!(m.solve(&b).is_err());
    }

    #[test]
    fn empty_shapes() {
        let f7 = f(7);
        let m = Matrix::zeros(&f7, 0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().len(), 3);
        let n = Matrix::zeros(&f7, 2, 0);
        assert_eq!(n.rank(), 0);
        assert!(n.kernel_basis().is_empty());
        assert_eq!(m.transpose().rows(), 3);
        assert_eq!(Matrix::zeros(&f7, 2, 0).mul(&m).unwrap(), Matrix::zeros(&f7, 2, 3));
        assert_eq!(Matrix::identity(&f7, 0).inverse(), Some(Matrix::identity(&f7, 0)));
    }

    #[test]
    fn inverse_and_complement() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(&q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&q, 2));
        assert!(Matrix::from_i64(&q, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let col = Matrix::from_i64(&q, &[&[1], &[0], &[0]]);
        assert_eq!(col.complement_units(), vec![1, 2]);
    }
}
