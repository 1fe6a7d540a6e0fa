use std::fmt;

use num_traits::{One, Zero};

use super::{RatPoly, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flatten()
            .map(|&x| Rational::from_integer(x.into()))
            .collect();
        Self::new(r, c, data)
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Result<Rational> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {}",
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Result<RatMatrix> {
        self.require_square()?;
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Top-left `n x n` block.
    pub fn leading(&self, n: usize) -> RatMatrix {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn block_diag(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        let mut m = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        m
    }

    /// Determinant by Bareiss elimination with row pivoting.
    pub fn det(&self) -> Result<Rational> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut a = self.data.clone();
        let mut sign = Rational::one();
        let mut prev = Rational::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(piv) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Ok(Rational::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                    a[i * n + j] = v;
                }
            }
            prev = a[k * n + k].clone();
        }
        Ok(sign * &a[n * n - 1])
    }

    /// Monic characteristic polynomial `det(tI - self)` by the
    /// division-free Berkowitz algorithm.
    pub fn char_poly(&self) -> Result<RatPoly> {
        Ok(self
            .leading_char_polys()?
            .pop()
            .expect("at least the empty block"))
    }

    /// Characteristic polynomials of the leading `k x k` blocks for
    /// `k = 0..=n`, which Berkowitz produces along the way.
    pub fn leading_char_polys(&self) -> Result<Vec<RatPoly>> {
        self.require_square()?;
        let n = self.rows;
        // coefficients of the leading block's char poly, highest degree first
        let mut vect = vec![Rational::one()];
        let mut out = vec![RatPoly::one()];
        for r in 0..n {
            let row: Vec<Rational> = (0..r).map(|j| self.get(r, j).clone()).collect();
            let mut v: Vec<Rational> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let lead = self.leading(r);
            let mut t = vec![Rational::zero(); r + 2];
            t[0] = Rational::one();
            t[1] = -self.get(r, r);
            for tk in t.iter_mut().skip(2) {
                let dot: Rational = row.iter().zip(&v).map(|(a, b)| a * b).sum();
                *tk = -dot;
                v = lead.mul_vec(&v)?;
            }
            let mut next = vec![Rational::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, c) in vect.iter().enumerate().take(i.min(r) + 1) {
                    *slot += &t[i - j] * c;
                }
            }
            vect = next;
            out.push(RatPoly::new(vect.iter().rev().cloned().collect()));
        }
        Ok(out)
    }

    /// Solves `self x = b` for square non-singular `self`.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        self.require_square()?;
        let n = self.rows;
        if b.len() != n {
            return Err(Error::DimensionMismatch("right-hand side".into()));
        }
        let w = n + 1;
        let mut a: Vec<Rational> = Vec::with_capacity(n * w);
        for i in 0..n {
            a.extend_from_slice(self.row(i));
            a.push(b[i].clone());
        }
        for k in 0..n {
            let piv = (k..n)
                .find(|&i| !a[i * w + k].is_zero())
                .ok_or(Error::NotInvertible)?;
            if piv != k {
                for j in 0..w {
                    a.swap(k * w + j, piv * w + j);
                }
            }
            let inv = a[k * w + k].recip();
            for j in k..w {
                a[k * w + j] *= &inv;
            }
            for i in 0..n {
                if i == k || a[i * w + k].is_zero() {
                    continue;
                }
                let f = a[i * w + k].clone();
                for j in k..w {
                    let d = &f * &a[k * w + j];
                    a[i * w + j] -= d;
                }
            }
        }
        Ok((0..n).map(|i| a[i * w + n].clone()).collect())
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    /// Faddeev-LeVerrier, an independent route to the characteristic polynomial.
    fn leverrier(a: &RatMatrix) -> RatPoly {
        let n = a.rows();
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = RatMatrix::zeros(n, n);
        let id = RatMatrix::identity(n);
        for k in 1..=n {
            m = a
                .mul(&m)
                .unwrap()
                .add(&id.scale(&coeffs[n - k + 1]))
                .unwrap();
            let am = a.mul(&m).unwrap();
            coeffs[n - k] = -am.trace().unwrap() / int(k as i64);
        }
        RatPoly::new(coeffs)
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            RatMatrix::identity(2).char_poly().unwrap(),
            RatPoly::from_ints(&[1, -2, 1])
        );
        let m = RatMatrix::from_ints(&[vec![0, 1], vec![-1, 1]]).unwrap();
        assert_eq!(m.char_poly().unwrap(), RatPoly::from_ints(&[1, -1, 1]));
        assert_eq!(
            RatMatrix::zeros(4, 4).char_poly().unwrap(),
            RatPoly::monomial(int(1), 4)
        );
        assert!(RatMatrix::zeros(2, 3).char_poly().is_err());
    }

    #[test]
    fn char_poly_matches_leverrier() {
        let m = RatMatrix::from_ints(&[
            vec![2, -1, 0, 3],
            vec![1, 0, 4, -2],
            vec![0, 5, -3, 1],
            vec![7, 1, 1, 1],
        ])
        .unwrap();
        assert_eq!(m.char_poly().unwrap(), leverrier(&m));
        // constant term is (-1)^n det
        assert_eq!(m.char_poly().unwrap().coeff(0), m.det().unwrap());
    }

    #[test]
    fn block_diagonal_char_poly_factors() {
        let a = RatMatrix::from_ints(&[vec![1, 2], vec![3, 4]]).unwrap();
        let b = RatMatrix::from_ints(&[vec![0, 1, 0], vec![0, 0, 1], vec![5, -1, 2]]).unwrap();
        let d = RatMatrix::block_diag(&a, &b);
        assert_eq!(
            d.char_poly().unwrap(),
            a.char_poly().unwrap() * b.char_poly().unwrap()
        );
    }

    #[test]
    fn det_and_solve() {
        let m = RatMatrix::from_ints(&[vec![0, 2, 1], vec![1, 1, 0], vec![3, 0, 1]]).unwrap();
        assert_eq!(m.det().unwrap(), int(-5));
        let x = m.solve(&[int(1), int(2), int(3)]).unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![int(1), int(2), int(3)]);
        let sing = RatMatrix::from_ints(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(sing.det().unwrap(), int(0));
        assert_eq!(sing.solve(&[int(1), int(1)]), Err(Error::NotInvertible));
    }
}
