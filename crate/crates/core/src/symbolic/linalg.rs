use super::field::Field;

/// Dense matrix, row-major. A matrix with zero rows still records its column
/// count so that kernels can be sized correctly.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(cols: usize, data: Vec<Vec<E>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows: data.len(), cols, data }
    }

    pub fn zeros(rows: usize, cols: usize, zero: E) -> Self {
        Matrix { rows, cols, data: vec![vec![zero; cols]; rows] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r][c] = v;
    }

    pub fn row_slices(&self) -> &[Vec<E>] {
        &self.data
    }
}

/// Rank by Gaussian elimination.
pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.data.clone();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pivot) = (rank..m.rows).find(|&r| !field.is_zero(&a[r][col])) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = field.inv(&a[rank][col]);
        let pivot_row: Vec<F::Elem> = a[rank].iter().map(|x| field.mul(x, &inv)).collect();
        for row in a.iter_mut().skip(rank + 1) {
            if field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !field.is_zero(p) {
                    *x = field.sub(x, &field.mul(&factor, p));
                }
            }
        }
        a[rank] = pivot_row;
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}
