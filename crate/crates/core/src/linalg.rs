//! Dense and sparse exact linear algebra over Q(q).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use crate::cyclo::{CycloNum, Field};
use crate::error::{Error, Result};

pub type Vector = Vec<CycloNum>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<CycloNum>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = CycloNum;
    fn index(&self, (r, c): (usize, usize)) -> &CycloNum {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut CycloNum {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycloNum) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, rows: usize, cols: &[Vector]) -> Matrix {
        Matrix::from_fn(field, rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vector]) -> Matrix {
        Matrix::from_fn(field, rows.len(), cols, |r, c| rows[r][c].clone())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> Vector {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(&self.field, self.rows)
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(&self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[CycloNum]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (k, x) in v.iter().enumerate() {
                    let a = &self[(i, k)];
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &CycloNum) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Matrix {
        let data = self.data.iter().map(|a| a.conj()).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.dagger()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// First entry `(i, j)` with `self[i,j] != conj(self[j,i])`.
    pub fn hermiticity_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in i..self.cols {
                if self[(i, j)] != self[(j, i)].conj() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Kronecker product with row-major ordering of the product basis.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        Matrix::from_fn(&self.field, self.rows * o.rows, self.cols * o.cols, |r, c| {
            let a = &self[(r / o.rows, c / o.cols)];
            if a.is_zero() {
                self.field.zero()
            } else {
                a * &o[(r % o.rows, c % o.cols)]
            }
        })
    }

    pub fn pow(&self, e: usize) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> CycloNum {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            if p != r {
                for k in 0..m.cols {
                    m.data.swap(p * m.cols + k, r * m.cols + k);
                }
            }
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for k in c..m.cols {
                let v = &m[(r, k)] * &inv;
                m[(r, k)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for k in c..m.cols {
                    if !m[(r, k)].is_zero() {
                        let t = &f * &m[(r, k)];
                        m[(i, k)] -= &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right kernel `{v : self v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, free)];
            }
            out.push(v);
        }
        out
    }

    /// A solution of `self x = b` with all free variables zero, if one exists.
    pub fn solve(&self, b: &[CycloNum]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::from_fn(&self.field, self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(&self.field, n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        Ok(Matrix::from_fn(&self.field, n, n, |i, j| r[(i, j + n)].clone()))
    }

    pub fn entries(&self) -> &[CycloNum] {
        &self.data
    }

    /// Rows rendered in the canonical cyclotomic text form.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self[(r, c)].to_string()).collect()).collect()
    }

    pub fn parse(field: &Field, rows: &[Vec<String>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension("ragged matrix rows".into()));
            }
            for (j, s) in row.iter().enumerate() {
                m[(i, j)] = field.parse(s)?;
            }
        }
        Ok(m)
    }
}

pub fn vec_add(a: &[CycloNum], b: &[CycloNum]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[CycloNum], b: &[CycloNum]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[CycloNum], s: &CycloNum) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(a: &[CycloNum]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn unit_vector(field: &Field, n: usize, i: usize) -> Vector {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// A subspace of `Q(q)^dim` kept as a reduced row echelon basis, which makes the
/// basis canonical: two subspaces are equal iff their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    dim_ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, dim_ambient: usize) -> Subspace {
        Subspace { field: field.clone(), dim_ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &Field, dim_ambient: usize) -> Subspace {
        let basis = (0..dim_ambient).map(|i| unit_vector(field, dim_ambient, i)).collect();
        Subspace { field: field.clone(), dim_ambient, basis, pivots: (0..dim_ambient).collect() }
    }

    pub fn span(field: &Field, dim_ambient: usize, vectors: &[Vector]) -> Subspace {
        let mut s = Subspace::zero(field, dim_ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Residue of `v` after eliminating the pivot coordinates; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[CycloNum]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[CycloNum]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[CycloNum]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else { return false };
        let inv = r[p].inv().expect("nonzero");
        let r: Vector = r.iter().map(|x| x * &inv).collect();
        // keep the basis fully reduced
        for b in self.basis.iter_mut() {
            if !b[p].is_zero() {
                let f = b[p].clone();
                for (x, y) in b.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.basis.insert(pos, r);
        true
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[CycloNum]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &o.basis {
            s.insert(v);
        }
        s
    }

    pub fn intersection(&self, o: &Subspace) -> Subspace {
        // solve sum a_i u_i = sum b_j w_j
        let n = self.dim() + o.dim();
        if n == 0 {
            return Subspace::zero(&self.field, self.dim_ambient);
        }
        let mut cols: Vec<Vector> = self.basis.clone();
        cols.extend(o.basis.iter().map(|w| w.iter().map(|x| -x).collect::<Vector>()));
        let m = Matrix::from_columns(&self.field, self.dim_ambient, &cols);
        let mut out = Subspace::zero(&self.field, self.dim_ambient);
        for k in m.nullspace() {
            let mut v = vec![self.field.zero(); self.dim_ambient];
            for (a, u) in k.iter().zip(&self.basis) {
                if !a.is_zero() {
                    v = vec_add(&v, &vec_scale(u, a));
                }
            }
            out.insert(&v);
        }
        out
    }

    /// Standard basis vectors indexed by the non-pivot columns; they span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.dim_ambient).filter(|c| self.pivots.binary_search(c).is_err()).collect()
    }

    /// Smallest subspace containing `self` and stable under all `ops`.
    pub fn closure(&self, ops: &[&Matrix]) -> Subspace {
        let mut s = self.clone();
        let mut frontier: Vec<Vector> = s.basis.clone();
        while let Some(v) = frontier.pop() {
            for op in ops {
                let w = op.apply(&v);
                if s.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        s
    }

    pub fn is_stable_under(&self, op: &Matrix) -> bool {
        self.basis.iter().all(|v| self.contains(&op.apply(v)))
    }
}

/// Incremental sparse Gaussian elimination for homogeneous systems.
///
/// Rows are inserted one at a time; each row is reduced against the existing pivot rows
/// on its leading variable until it either vanishes or acquires a new pivot.
#[derive(Clone, Debug)]
pub struct SparseEliminator {
    field: Field,
    nvars: usize,
    rows: BTreeMap<usize, BTreeMap<usize, CycloNum>>,
}

impl SparseEliminator {
    pub fn new(field: &Field, nvars: usize) -> Self {
        SparseEliminator { field: field.clone(), nvars, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, row: BTreeMap<usize, CycloNum>) {
        let mut row: BTreeMap<usize, CycloNum> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        loop {
            let Some((&lead, lead_coef)) = row.iter().next() else { return };
            match self.rows.get(&lead) {
                Some(prow) => {
                    let f = lead_coef.clone();
                    for (k, v) in prow {
                        let e = row.entry(*k).or_insert_with(|| self.field.zero());
                        *e -= &(&f * v);
                        if e.is_zero() {
                            row.remove(k);
                        }
                    }
                }
                None => {
                    let inv = lead_coef.inv().expect("nonzero");
                    for v in row.values_mut() {
                        *v = &*v * &inv;
                    }
                    self.rows.insert(lead, row);
                    return;
                }
            }
        }
    }

    /// Canonical nullspace basis: one vector per free variable (free variable set to one,
    /// the other free variables zero), ordered by free variable index.
    pub fn nullspace(&self) -> Vec<Vector> {
        let free: Vec<usize> = (0..self.nvars).filter(|v| !self.rows.contains_key(v)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &fv in &free {
            let mut sol: BTreeMap<usize, CycloNum> = BTreeMap::new();
            sol.insert(fv, self.field.one());
            for (&p, row) in self.rows.iter().rev() {
                let mut acc = self.field.zero();
                for (k, v) in row.iter().skip(1) {
                    if let Some(x) = sol.get(k) {
                        acc -= &(v * x);
                    }
                }
                if !acc.is_zero() {
                    sol.insert(p, acc);
                }
            }
            let mut v = vec![self.field.zero(); self.nvars];
            for (k, x) in sol {
                v[k] = x;
            }
            out.push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Field {
        Field::new(3).unwrap()
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        let f = f();
        Matrix::from_fn(&f, rows.len(), rows[0].len(), |r, c| f.from_int(rows[r][c]))
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vec(&a.apply(&ns[0])));
    }

    #[test]
    fn inverse_round_trip() {
        let f = f();
        let mut a = m(&[&[1, 2], &[3, 4]]);
        a[(0, 1)] = f.q();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = f();
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[f.one(), f.from_int(2)]).is_none());
        let x = a.solve(&[f.q(), f.q()]).unwrap();
        assert_eq!(a.apply(&x), vec![f.q(), f.q()]);
    }

    #[test]
    fn subspace_operations() {
        let f = f();
        let e = |i| unit_vector(&f, 3, i);
        let s = Subspace::span(&f, 3, &[vec_add(&e(0), &e(1)), e(2)]);
        let t = Subspace::span(&f, 3, &[e(0), e(2)]);
        assert_eq!(s.intersection(&t).dim(), 1);
        assert_eq!(s.sum(&t).dim(), 3);
        assert_eq!(s.complement_indices(), vec![1]);
        let c = s.coordinates(&vec_add(&e(0), &e(1))).unwrap();
        assert_eq!(c, vec![f.one(), f.zero()]);
    }

    #[test]
    fn sparse_matches_dense() {
        let f = f();
        let a = m(&[&[1, 2, 0, 1], &[0, 1, 1, 0], &[1, 3, 1, 1]]);
        let mut se = SparseEliminator::new(&f, 4);
        for r in 0..3 {
            se.insert((0..4).map(|c| (c, a[(r, c)].clone())).collect());
        }
        assert_eq!(se.rank(), a.rank());
        for v in se.nullspace() {
            assert!(is_zero_vec(&a.apply(&v)));
        }
        assert_eq!(se.nullspace(), a.nullspace());
    }

    #[test]
    fn kron_shape() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = Matrix::identity(&f(), 3);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (6, 6));
        assert_eq!(k[(3, 0)], f().from_int(3));
        assert_eq!(k[(4, 1)], f().from_int(3));
    }
}
