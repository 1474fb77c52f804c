//! Homogeneous linear maps between super vector spaces.

use std::fmt;

use num_traits::Zero;

use super::linalg::Matrix;
use super::scalar::{format_scalar, signed, Scalar};
use super::space::SuperSpace;
use super::Parity;
use crate::error::{Error, Result};

/// A homogeneous map `T: V -> W`. The matrix is indexed `(codomain, domain)`,
/// so column `i` holds the coordinates of `T(v_i)`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedLinearMap {
    domain: SuperSpace,
    codomain: SuperSpace,
    parity: Parity,
    matrix: Matrix,
}

impl GradedLinearMap {
    pub fn new(
        domain: SuperSpace,
        codomain: SuperSpace,
        parity: Parity,
        matrix: Matrix,
    ) -> Result<Self> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{} but the map is {} -> {}",
                matrix.rows(),
                matrix.cols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        for k in 0..codomain.dim() {
            for i in 0..domain.dim() {
                let a = matrix.get(k, i);
                if !a.is_zero() && codomain.parity(k) != domain.parity(i) + parity {
                    return Err(Error::NotHomogeneous {
                        row: codomain.label(k).to_string(),
                        col: domain.label(i).to_string(),
                        value: format_scalar(a),
                        parity,
                    });
                }
            }
        }
        Ok(GradedLinearMap {
            domain,
            codomain,
            parity,
            matrix,
        })
    }

    pub fn zero(domain: SuperSpace, codomain: SuperSpace, parity: Parity) -> Self {
        let matrix = Matrix::zeros(codomain.dim(), domain.dim());
        GradedLinearMap {
            domain,
            codomain,
            parity,
            matrix,
        }
    }

    pub fn identity(space: &SuperSpace) -> Self {
        GradedLinearMap {
            domain: space.clone(),
            codomain: space.clone(),
            parity: Parity::Even,
            matrix: Matrix::identity(space.dim()),
        }
    }

    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns(
        domain: SuperSpace,
        codomain: SuperSpace,
        parity: Parity,
        columns: &[Vec<Scalar>],
    ) -> Result<Self> {
        if columns.len() != domain.dim() || columns.iter().any(|c| c.len() != codomain.dim()) {
            return Err(Error::ShapeMismatch("column data does not fit the spaces".into()));
        }
        let m = Matrix::from_fn(codomain.dim(), domain.dim(), |k, i| columns[i][k].clone());
        Self::new(domain, codomain, parity, m)
    }

    pub fn domain(&self) -> &SuperSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &SuperSpace {
        &self.codomain
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        self.matrix.get(row, col)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Coordinates of `T(v_i)`.
    pub fn image_of_basis(&self, i: usize) -> Vec<Scalar> {
        self.matrix.column(i)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    /// Same parity and same matrix; the spaces need only have the same shape.
    pub fn same_coordinates(&self, other: &GradedLinearMap) -> bool {
        self.parity == other.parity
            && self.domain.same_shape(&other.domain)
            && self.codomain.same_shape(&other.codomain)
            && self.matrix == other.matrix
    }

    /// `self ∘ inner`, of parity `|self| + |inner|`.
    pub fn compose(&self, inner: &GradedLinearMap) -> Result<GradedLinearMap> {
        if inner.codomain != self.domain {
            return Err(Error::SpaceMismatch(format!(
                "cannot compose: {} is not {}",
                inner.codomain, self.domain
            )));
        }
        Ok(GradedLinearMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            parity: self.parity + inner.parity,
            matrix: self.matrix.mul(&inner.matrix),
        })
    }

    /// Matrix product ignoring labels; the spaces must match only in shape.
    pub fn compose_coordinates(&self, inner: &GradedLinearMap) -> Result<GradedLinearMap> {
        if !inner.codomain.same_shape(&self.domain) {
            return Err(Error::SpaceMismatch(format!(
                "cannot compose: {} and {} differ in shape",
                inner.codomain, self.domain
            )));
        }
        Ok(GradedLinearMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            parity: self.parity + inner.parity,
            matrix: self.matrix.mul(&inner.matrix),
        })
    }

    pub fn add(&self, other: &GradedLinearMap) -> Result<GradedLinearMap> {
        let parity = self.check_parallel(other)?;
        Ok(GradedLinearMap {
            matrix: self.matrix.add(&other.matrix),
            parity,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &GradedLinearMap) -> Result<GradedLinearMap> {
        let parity = self.check_parallel(other)?;
        Ok(GradedLinearMap {
            matrix: self.matrix.sub(&other.matrix),
            parity,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Scalar) -> GradedLinearMap {
        GradedLinearMap {
            matrix: self.matrix.scale(c),
            ..self.clone()
        }
    }

    fn check_parallel(&self, other: &GradedLinearMap) -> Result<Parity> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::SpaceMismatch("maps act between different spaces".into()));
        }
        if self.parity != other.parity && !self.is_zero() && !other.is_zero() {
            return Err(Error::Inhomogeneous);
        }
        Ok(if self.is_zero() { other.parity } else { self.parity })
    }

    /// Replaces the spaces by ones of the same shape, keeping the matrix.
    pub fn with_spaces(&self, domain: SuperSpace, codomain: SuperSpace) -> Result<GradedLinearMap> {
        if !domain.same_shape(&self.domain) || !codomain.same_shape(&self.codomain) {
            return Err(Error::SpaceMismatch("relabelled spaces differ in shape".into()));
        }
        Ok(GradedLinearMap {
            domain,
            codomain,
            ..self.clone()
        })
    }

    /// `T^s: sV -> W` with `T^s(s v) = T(v)` and parity `|T| + 1`.
    pub fn suspend_map(&self) -> GradedLinearMap {
        let s = self.domain.suspend();
        let mut m = Matrix::zeros(self.codomain.dim(), self.domain.dim());
        for i in 0..self.domain.dim() {
            for k in 0..self.codomain.dim() {
                m.set(k, s.perm[i], self.matrix.get(k, i).clone());
            }
        }
        GradedLinearMap {
            domain: s.space,
            codomain: self.codomain.clone(),
            parity: self.parity.flip(),
            matrix: m,
        }
    }

    /// The graded dual `T*: W* -> V*`, fixed by
    /// `<T*(x*), v> = (-1)^{|T||x*|} <x*, T(v)>`.
    pub fn dual_map(&self) -> GradedLinearMap {
        let m = Matrix::from_fn(self.domain.dim(), self.codomain.dim(), |i, k| {
            signed(
                self.parity * self.codomain.parity(k),
                self.matrix.get(k, i).clone(),
            )
        });
        GradedLinearMap {
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
            parity: self.parity,
            matrix: m,
        }
    }

    pub fn inverse(&self) -> Result<GradedLinearMap> {
        let inv = self.matrix.inverse().ok_or(Error::NotInvertible)?;
        Ok(GradedLinearMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            parity: self.parity,
            matrix: inv,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Non-zero images as `(domain label, formatted image)` pairs.
    pub fn describe(&self) -> Vec<(String, String)> {
        (0..self.domain.dim())
            .filter_map(|i| {
                let col = self.matrix.column(i);
                if col.iter().all(Zero::is_zero) {
                    None
                } else {
                    Some((
                        self.domain.label(i).to_string(),
                        format_combination(&self.codomain, &col),
                    ))
                }
            })
            .collect()
    }
}

/// The map `θ: V -> V**`, `e_i ↦ (-1)^{|e_i|} (e_i*)*`.
pub fn double_dual_identification(space: &SuperSpace) -> GradedLinearMap {
    let m = Matrix::from_fn(space.dim(), space.dim(), |i, j| {
        if i == j {
            signed(space.parity(i), Scalar::from_integer(1.into()))
        } else {
            Scalar::zero()
        }
    });
    GradedLinearMap {
        domain: space.clone(),
        codomain: space.dual().dual(),
        parity: Parity::Even,
        matrix: m,
    }
}

/// Formats `Σ c_i x_i` with explicit coefficients, e.g. `1 f + -1 e`; `0` if empty.
pub fn format_combination(space: &SuperSpace, coeffs: &[Scalar]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{} {}", format_scalar(c), space.label(i)))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl fmt::Debug for GradedLinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} ({}) {{", self.domain, self.codomain, self.parity)?;
        for (v, image) in self.describe() {
            write!(f, " {v} ↦ {image};")?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::int;

    fn g() -> SuperSpace {
        SuperSpace::new(["e"], ["f"]).unwrap()
    }

    /// `T_1(e*) = f`, `T_1(f*) = -e`.
    fn t1() -> GradedLinearMap {
        let gs = g();
        GradedLinearMap::from_columns(
            gs.dual(),
            gs,
            Parity::Odd,
            &[vec![int(0), int(1)], vec![int(-1), int(0)]],
        )
        .unwrap()
    }

    #[test]
    fn homogeneity_is_enforced() {
        let gs = g();
        let bad = GradedLinearMap::from_columns(
            gs.clone(),
            gs,
            Parity::Even,
            &[vec![int(0), int(1)], vec![int(0), int(0)]],
        );
        assert!(matches!(bad, Err(Error::NotHomogeneous { .. })));
    }

    #[test]
    fn suspension_of_odd_operator() {
        let ts = t1().suspend_map();
        assert_eq!(ts.parity(), Parity::Even);
        assert_eq!(ts.domain().labels(), &["sf*", "se*"]);
        let se = ts.domain().require_index("se*").unwrap();
        let sf = ts.domain().require_index("sf*").unwrap();
        assert_eq!(ts.image_of_basis(se), vec![int(0), int(1)]);
        assert_eq!(ts.image_of_basis(sf), vec![int(-1), int(0)]);
        assert!(ts.suspend_map().same_coordinates(&t1()));
    }

    #[test]
    fn dual_of_odd_operator() {
        // T_1*(e*) = -f**, T_1*(f*) = -e**
        let d = t1().dual_map();
        assert_eq!(d.domain().labels(), &["e*", "f*"]);
        assert_eq!(d.codomain().labels(), &["(e*)*", "(f*)*"]);
        assert_eq!(d.image_of_basis(0), vec![int(0), int(-1)]);
        assert_eq!(d.image_of_basis(1), vec![int(-1), int(0)]);
    }

    #[test]
    fn double_dual_through_theta() {
        let t = t1();
        let lhs = t
            .dual_map()
            .dual_map()
            .compose(&double_dual_identification(t.domain()))
            .unwrap();
        let rhs = double_dual_identification(t.codomain()).compose(&t).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_round_trip() {
        let t = t1();
        let inv = t.inverse().unwrap();
        assert_eq!(t.compose(&inv).unwrap(), GradedLinearMap::identity(t.codomain()));
        let zero = GradedLinearMap::zero(g(), g(), Parity::Odd);
        assert_eq!(zero.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn formatting() {
        let t = t1();
        assert_eq!(
            t.describe(),
            vec![
                ("e*".to_string(), "1 f".to_string()),
                ("f*".to_string(), "-1 e".to_string())
            ]
        );
    }
}
