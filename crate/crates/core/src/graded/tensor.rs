//! Coefficient tensors in `V ⊗ W` and `g ⊗ g ⊗ g`, the twist map and pairings.

use std::fmt;

use num_traits::Zero;

use super::linalg::Matrix;
use super::scalar::{format_scalar, signed, Scalar};
use super::space::SuperSpace;
use super::Parity;
use crate::error::{Error, Result};

/// `Σ a_ij x_i ⊗ y_j` with `x_i` from `left` and `y_j` from `right`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor2 {
    left: SuperSpace,
    right: SuperSpace,
    coeffs: Matrix,
    parity: Option<Parity>,
}

impl Tensor2 {
    /// Infers the parity; the zero tensor is taken as even, mixed entries give `None`.
    pub fn new(left: SuperSpace, right: SuperSpace, coeffs: Matrix) -> Result<Self> {
        if coeffs.rows() != left.dim() || coeffs.cols() != right.dim() {
            return Err(Error::ShapeMismatch(format!(
                "coefficients are {}x{} but the spaces have dimensions {} and {}",
                coeffs.rows(),
                coeffs.cols(),
                left.dim(),
                right.dim()
            )));
        }
        let mut parity = None;
        let mut mixed = false;
        for i in 0..left.dim() {
            for j in 0..right.dim() {
                if coeffs.get(i, j).is_zero() {
                    continue;
                }
                let p = left.parity(i) + right.parity(j);
                match parity {
                    None => parity = Some(p),
                    Some(q) if q != p => mixed = true,
                    _ => {}
                }
            }
        }
        let parity = if mixed {
            None
        } else {
            Some(parity.unwrap_or(Parity::Even))
        };
        Ok(Tensor2 {
            left,
            right,
            coeffs,
            parity,
        })
    }

    /// A tensor declared homogeneous of the given parity.
    pub fn with_parity(
        left: SuperSpace,
        right: SuperSpace,
        parity: Parity,
        coeffs: Matrix,
    ) -> Result<Self> {
        let t = Self::new(left, right, coeffs)?;
        if t.is_zero() {
            return Ok(Tensor2 {
                parity: Some(parity),
                ..t
            });
        }
        match t.parity {
            Some(p) if p == parity => Ok(t),
            Some(_) => {
                let (i, j) = t.terms().into_iter().map(|(_, i, j)| (i, j)).next().unwrap();
                Err(Error::NotHomogeneous {
                    row: t.left.label(i).to_string(),
                    col: t.right.label(j).to_string(),
                    value: format_scalar(t.coeffs.get(i, j)),
                    parity,
                })
            }
            None => Err(Error::Inhomogeneous),
        }
    }

    pub fn zero(left: SuperSpace, right: SuperSpace, parity: Parity) -> Self {
        let coeffs = Matrix::zeros(left.dim(), right.dim());
        Tensor2 {
            left,
            right,
            coeffs,
            parity: Some(parity),
        }
    }

    /// Builds `Σ c x_i ⊗ y_j` from `(c, i, j)` triples; repeated pairs accumulate.
    pub fn from_terms(
        left: SuperSpace,
        right: SuperSpace,
        terms: &[(Scalar, usize, usize)],
    ) -> Result<Self> {
        let mut m = Matrix::zeros(left.dim(), right.dim());
        for (c, i, j) in terms {
            if *i >= left.dim() || *j >= right.dim() {
                return Err(Error::ShapeMismatch("tensor index out of range".into()));
            }
            m.add_at(*i, *j, c);
        }
        Self::new(left, right, m)
    }

    pub fn left(&self) -> &SuperSpace {
        &self.left
    }

    pub fn right(&self) -> &SuperSpace {
        &self.right
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.coeffs.get(i, j)
    }

    /// `None` if the tensor mixes parities.
    pub fn parity(&self) -> Option<Parity> {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Non-zero coefficients as `(a_ij, i, j)` in row-major order.
    pub fn terms(&self) -> Vec<(Scalar, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.left.dim() {
            for j in 0..self.right.dim() {
                let a = self.coeffs.get(i, j);
                if !a.is_zero() {
                    out.push((a.clone(), i, j));
                }
            }
        }
        out
    }

    /// `σ(x ⊗ y) = (-1)^{|x||y|} y ⊗ x`.
    pub fn twist(&self) -> Tensor2 {
        let coeffs = Matrix::from_fn(self.right.dim(), self.left.dim(), |j, i| {
            signed(
                self.left.parity(i) * self.right.parity(j),
                self.coeffs.get(i, j).clone(),
            )
        });
        Tensor2 {
            left: self.right.clone(),
            right: self.left.clone(),
            coeffs,
            parity: self.parity,
        }
    }

    pub fn add(&self, other: &Tensor2) -> Result<Tensor2> {
        self.check_spaces(other)?;
        Self::new(
            self.left.clone(),
            self.right.clone(),
            self.coeffs.add(&other.coeffs),
        )
    }

    pub fn sub(&self, other: &Tensor2) -> Result<Tensor2> {
        self.check_spaces(other)?;
        Self::new(
            self.left.clone(),
            self.right.clone(),
            self.coeffs.sub(&other.coeffs),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        Tensor2 {
            coeffs: self.coeffs.scale(c),
            ..self.clone()
        }
    }

    fn check_spaces(&self, other: &Tensor2) -> Result<()> {
        if self.left != other.left || self.right != other.right {
            return Err(Error::SpaceMismatch("tensors live in different spaces".into()));
        }
        Ok(())
    }

    /// Same coefficients ignoring declared parity.
    pub fn same_coefficients(&self, other: &Tensor2) -> bool {
        self.left == other.left && self.right == other.right && self.coeffs == other.coeffs
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (a, i, j)) in terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(
                f,
                "{} {}⊗{}",
                format_scalar(a),
                self.left.label(*i),
                self.right.label(*j)
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor2({self})")
    }
}

/// A dense element of `g ⊗ g ⊗ g`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    space: SuperSpace,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(space: SuperSpace) -> Self {
        let n = space.dim();
        Tensor3 {
            space,
            data: vec![Scalar::zero(); n * n * n],
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    fn index(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.space.dim();
        (a * n + b) * n + c
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.data[self.index(a, b, c)]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, value: Scalar) {
        let k = self.index(a, b, c);
        self.data[k] = value;
    }

    pub fn add_at(&mut self, a: usize, b: usize, c: usize, value: &Scalar) {
        let k = self.index(a, b, c);
        self.data[k] += value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Non-zero components `((a, b, c), value)` in lexicographic order.
    pub fn nonzero(&self) -> Vec<((usize, usize, usize), Scalar)> {
        let n = self.space.dim();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let v = self.get(a, b, c);
                    if !v.is_zero() {
                        out.push(((a, b, c), v.clone()));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.nonzero();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((a, b, c), v)) in terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(
                f,
                "{} {}⊗{}⊗{}",
                format_scalar(v),
                self.space.label(*a),
                self.space.label(*b),
                self.space.label(*c)
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3[")?;
        for ((a, b, c), v) in self.nonzero() {
            write!(
                f,
                " {} {}⊗{}⊗{};",
                format_scalar(&v),
                self.space.label(a),
                self.space.label(b),
                self.space.label(c)
            )?;
        }
        write!(f, " ]")
    }
}

/// `<u*, v>` for `u*` given in the dual basis of `space` and `v` in `space`.
pub fn pair_eval(space: &SuperSpace, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    if u.len() != space.dim() || v.len() != space.dim() {
        return Err(Error::SpaceMismatch("vector length differs from the dimension".into()));
    }
    Ok(u.iter().zip(v).map(|(a, b)| a * b).sum())
}

/// `<v, u*> = (-1)^{|u*||v|} <u*, v>`, extended bilinearly.
pub fn pair_eval_reversed(space: &SuperSpace, v: &[Scalar], u: &[Scalar]) -> Result<Scalar> {
    if u.len() != space.dim() || v.len() != space.dim() {
        return Err(Error::SpaceMismatch("vector length differs from the dimension".into()));
    }
    Ok((0..space.dim())
        .map(|i| signed(space.parity(i), &u[i] * &v[i]))
        .sum())
}

/// `<u1* ⊗ u2*, v1 ⊗ v2> = (-1)^{|u2*||v1|} <u1*, v1><u2*, v2>`, extended bilinearly.
pub fn pair2_eval(u: &Tensor2, v: &Tensor2) -> Result<Scalar> {
    if u.left().dim() != v.left().dim()
        || u.right().dim() != v.right().dim()
        || u.left().parities() != v.left().parities()
        || u.right().parities() != v.right().parities()
    {
        return Err(Error::SpaceMismatch("pairing between unrelated tensor spaces".into()));
    }
    let mut total = Scalar::zero();
    for (a, i, j) in u.terms() {
        let b = v.get(i, j);
        if !b.is_zero() {
            total += signed(v.left().parity(i) * v.right().parity(j), a * b);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::int;

    fn g() -> SuperSpace {
        SuperSpace::new(["e"], ["f"]).unwrap()
    }

    fn t(terms: &[(i64, usize, usize)]) -> Tensor2 {
        let terms: Vec<_> = terms.iter().map(|&(c, i, j)| (int(c), i, j)).collect();
        Tensor2::from_terms(g(), g(), &terms).unwrap()
    }

    #[test]
    fn twist_of_odd_square() {
        let r0 = t(&[(1, 1, 1)]);
        assert_eq!(r0.parity(), Some(Parity::Even));
        assert_eq!(r0.twist(), r0.scale(&int(-1)));
        let ee = t(&[(1, 0, 0)]);
        assert_eq!(ee.twist(), ee);
    }

    #[test]
    fn parity_inference() {
        assert_eq!(t(&[(1, 0, 1), (1, 1, 0)]).parity(), Some(Parity::Odd));
        assert_eq!(t(&[(1, 0, 1), (1, 0, 0)]).parity(), None);
        assert!(Tensor2::with_parity(g(), g(), Parity::Even, t(&[(1, 0, 1)]).coeffs().clone()).is_err());
    }

    #[test]
    fn pairings() {
        let gs = g();
        assert_eq!(pair_eval(&gs, &[int(0), int(1)], &[int(0), int(1)]).unwrap(), int(1));
        assert_eq!(pair_eval(&gs, &[int(0), int(1)], &[int(1), int(0)]).unwrap(), int(0));
        assert_eq!(pair_eval_reversed(&gs, &[int(0), int(1)], &[int(0), int(1)]).unwrap(), int(-1));
        let dual = Tensor2::from_terms(gs.dual(), gs.dual(), &[(int(1), 1, 0)]).unwrap();
        assert_eq!(pair2_eval(&dual, &t(&[(1, 1, 0)])).unwrap(), int(1));
        let dual = Tensor2::from_terms(gs.dual(), gs.dual(), &[(int(1), 1, 1)]).unwrap();
        assert_eq!(pair2_eval(&dual, &t(&[(1, 1, 1)])).unwrap(), int(-1));
    }

    #[test]
    fn display() {
        assert_eq!(t(&[(1, 0, 1), (-2, 1, 0)]).to_string(), "1 e⊗f + -2 f⊗e");
        assert_eq!(t(&[]).to_string(), "0");
    }
}
