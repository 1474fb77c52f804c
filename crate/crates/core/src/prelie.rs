//! Pre-Lie superalgebras, their sub-adjacent Lie superalgebras and left
//! regular representations, and the products induced by O-operators.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graded::linalg::Matrix;
use crate::graded::map::format_combination;
use crate::graded::scalar::{signed, Scalar};
use crate::graded::{GradedLinearMap, Parity, SuperSpace};
use crate::lie::{check_lie_axioms, LieSuperAlgebra};
use crate::oop::{oop_holds, parity_dual_oop};
use crate::report::Report;
use crate::rep::Representation;
use crate::rmat::{operator_to_rmatrix, same_algebra_pair, RMatrix, SemidirectRMatrix, Variant};

/// `e_i e_j = Σ_k p_ij^k e_k`; the product raises parity by `shift`.
#[derive(Clone, PartialEq, Eq)]
pub struct PreLieSuperAlgebra {
    space: SuperSpace,
    product: Vec<Scalar>,
    shift: Parity,
}

impl PreLieSuperAlgebra {
    /// Dense products as given, without any check.
    pub fn from_structure(space: SuperSpace, shift: Parity, product: Vec<Scalar>) -> Result<Self> {
        let n = space.dim();
        if product.len() != n * n * n {
            return Err(Error::ShapeMismatch(format!(
                "{} product coefficients for a space of dimension {n}",
                product.len()
            )));
        }
        Ok(PreLieSuperAlgebra {
            space,
            product,
            shift,
        })
    }

    /// Builds the product from `(i, j, e_i e_j)` entries and checks it.
    pub fn new(space: SuperSpace, shift: Parity, entries: &[(usize, usize, Vec<Scalar>)]) -> Result<Self> {
        let a = Self::from_entries(space, shift, entries)?;
        if let Some(failure) = check_prelie(&a).first_failure() {
            return Err(Error::InvalidPreLie(failure.to_string()));
        }
        Ok(a)
    }

    /// As [`PreLieSuperAlgebra::new`] without the check.
    pub fn from_entries(space: SuperSpace, shift: Parity, entries: &[(usize, usize, Vec<Scalar>)]) -> Result<Self> {
        let n = space.dim();
        let mut p = vec![Scalar::zero(); n * n * n];
        for (i, j, v) in entries {
            if *i >= n || *j >= n || v.len() != n {
                return Err(Error::ShapeMismatch("product entry out of range".into()));
            }
            for (k, x) in v.iter().enumerate() {
                p[(i * n + j) * n + k] = x.clone();
            }
        }
        Self::from_structure(space, shift, p)
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn shift(&self) -> Parity {
        self.shift
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.product[(i * n + j) * n + k]
    }

    pub fn product_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim()).map(|k| self.coeff(i, j, k).clone()).collect()
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() {
                        *slot += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Non-zero products as lines `x · y = c z + ...`.
    pub fn product_table(&self) -> Vec<String> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.product_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    out.push(format!(
                        "{} · {} = {}",
                        self.space.label(i),
                        self.space.label(j),
                        format_combination(&self.space, &v)
                    ));
                }
            }
        }
        out
    }

    /// The same product on a relabelled space of the same shape.
    pub fn relabel(&self, space: SuperSpace) -> Result<Self> {
        if !space.same_shape(&self.space) {
            return Err(Error::SpaceMismatch("relabelled space differs in shape".into()));
        }
        Ok(PreLieSuperAlgebra {
            space,
            ..self.clone()
        })
    }
}

impl fmt::Debug for PreLieSuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PreLie[{}] {} {:?}", self.shift, self.space, self.product_table())
    }
}

fn basis_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Grading, and `(x,y,z) = (-1)^{(|x|+p)(|y|+p)} (y,x,z)` for the associator
/// `(x,y,z) = (xy)z - x(yz)` with `p` the parity shift (left symmetry when `p = 0`).
pub fn check_prelie(a: &PreLieSuperAlgebra) -> Report {
    let s = a.space();
    let n = a.dim();
    let p = a.shift();
    let mut report = Report::new();

    let mut witness = None;
    'grading: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !a.coeff(i, j, k).is_zero() && s.parity(k) != s.parity(i) + s.parity(j) + p {
                    witness = Some(vec![
                        s.label(i).to_string(),
                        s.label(j).to_string(),
                        s.label(k).to_string(),
                    ]);
                    break 'grading;
                }
            }
        }
    }
    report.record("grading", witness);

    let e: Vec<Vec<Scalar>> = (0..n).map(|i| basis_vector(n, i)).collect();
    let assoc = |x: usize, y: usize, z: usize| -> Vec<Scalar> {
        let left = a.product(&a.product(&e[x], &e[y]), &e[z]);
        let right = a.product(&e[x], &a.product(&e[y], &e[z]));
        left.into_iter().zip(right).map(|(l, r)| l - r).collect()
    };
    let mut witness = None;
    'symmetry: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let sgn = (s.parity(x) + p) * (s.parity(y) + p);
                let lhs = assoc(x, y, z);
                let rhs = assoc(y, x, z);
                if lhs.into_iter().zip(rhs).any(|(l, r)| l != signed(sgn, r)) {
                    witness = Some(vec![
                        s.label(x).to_string(),
                        s.label(y).to_string(),
                        s.label(z).to_string(),
                    ]);
                    break 'symmetry;
                }
            }
        }
    }
    let name = if p.is_even() {
        "left symmetry"
    } else {
        "shifted left symmetry"
    };
    report.record(name, witness);
    report
}

fn require_prelie(a: &PreLieSuperAlgebra) -> Result<()> {
    if a.shift().is_odd() {
        return Err(Error::InvalidPreLie("the product is odd".into()));
    }
    if let Some(failure) = check_prelie(a).first_failure() {
        return Err(Error::InvalidPreLie(failure.to_string()));
    }
    Ok(())
}

/// `[x, y] = xy - (-1)^{|x||y|} yx`.
pub fn subadjacent(a: &PreLieSuperAlgebra) -> Result<LieSuperAlgebra> {
    require_prelie(a)?;
    let s = a.space();
    let n = a.dim();
    let mut c = vec![Scalar::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let sgn = s.parity(i) * s.parity(j);
            for k in 0..n {
                c[(i * n + j) * n + k] = a.coeff(i, j, k) - signed(sgn, a.coeff(j, i, k).clone());
            }
        }
    }
    let g = LieSuperAlgebra::from_structure(s.clone(), c)?;
    if let Some(failure) = check_lie_axioms(&g).first_failure() {
        return Err(Error::InvalidAlgebra(failure.to_string()));
    }
    Ok(g)
}

/// `L(x) y = xy` as a representation of the sub-adjacent algebra.
pub fn left_regular_rep(a: &PreLieSuperAlgebra) -> Result<Representation> {
    let g = subadjacent(a)?;
    let n = a.dim();
    let matrices = (0..n)
        .map(|i| Matrix::from_fn(n, n, |k, j| a.coeff(i, j, k).clone()))
        .collect();
    Representation::from_matrices(g, a.space().clone(), matrices)
}

/// The identity of `A`, an even O-operator for `(A, L)`.
pub fn identity_oop(a: &PreLieSuperAlgebra) -> GradedLinearMap {
    GradedLinearMap::identity(a.space())
}

fn require_oop(t: &GradedLinearMap, rho: &Representation) -> Result<()> {
    if !oop_holds(t, rho)? {
        return Err(Error::NotAnOOperator("the O-operator identity fails".into()));
    }
    Ok(())
}

/// `v · w = (-1)^{|T|(|v|+|T|)} ρ(T v) w` on `V`, with parity shift `|T|`.
pub fn product_from_oop(t: &GradedLinearMap, rho: &Representation) -> Result<PreLieSuperAlgebra> {
    require_oop(t, rho)?;
    let v = rho.space();
    let n = v.dim();
    let pt = t.parity();
    let mut p = vec![Scalar::zero(); n * n * n];
    for i in 0..n {
        let act = rho.act(&t.image_of_basis(i));
        let sgn = pt * (v.parity(i) + pt);
        for j in 0..n {
            for k in 0..n {
                p[(i * n + j) * n + k] = signed(sgn, act.get(k, j).clone());
            }
        }
    }
    PreLieSuperAlgebra::from_structure(v.clone(), pt, p)
}

/// `s v ∘ s w = s(v · w)` on `sV`; the parity shift flips.
pub fn suspended_product(a: &PreLieSuperAlgebra) -> PreLieSuperAlgebra {
    let s = a.space().suspend();
    let n = a.dim();
    let mut p = vec![Scalar::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                p[(s.perm[i] * n + s.perm[j]) * n + s.perm[k]] = a.coeff(i, j, k).clone();
            }
        }
    }
    PreLieSuperAlgebra {
        space: s.space,
        product: p,
        shift: a.shift().flip(),
    }
}

/// The pre-Lie superalgebra an O-operator produces: on `V` for even `T`,
/// on `sV` for odd `T`.
pub fn prelie_from_oop(t: &GradedLinearMap, rho: &Representation) -> Result<PreLieSuperAlgebra> {
    let a = product_from_oop(t, rho)?;
    Ok(if t.parity().is_odd() {
        suspended_product(&a)
    } else {
        a
    })
}

/// The pre-Lie superalgebra from `T^s`, which lives on the same space as
/// [`prelie_from_oop`] of `T`.
pub fn prelie_from_dual_oop(t: &GradedLinearMap, rho: &Representation) -> Result<PreLieSuperAlgebra> {
    let (ts, rho_s) = parity_dual_oop(t, rho);
    if t.parity().is_odd() {
        product_from_oop(&ts, &rho_s)
    } else {
        // T^s is odd: its pre-Lie structure lives on s(sV), identified with V.
        let a = suspended_product(&product_from_oop(&ts, &rho_s)?);
        a.relabel(rho.space().clone())
    }
}

/// The product `T(v) * T(w) = T(v · w)` on `T(V)`, with the chosen basis of
/// the image (as vectors of `g`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedPreLie {
    pub basis: Vec<Vec<Scalar>>,
    pub algebra: PreLieSuperAlgebra,
}

pub fn induced_prelie(t: &GradedLinearMap, rho: &Representation) -> Result<InducedPreLie> {
    let dot = product_from_oop(t, rho)?;
    let v = rho.space();
    let g = rho.algebra();
    let n = v.dim();
    let pivots = t.matrix().clone().rref();
    // kernel vectors must be absorbed by the product on both sides
    for kernel in t.matrix().nullspace() {
        for w in 0..n {
            let e = basis_vector(n, w);
            for prod in [dot.product(&kernel, &e), dot.product(&e, &kernel)] {
                if t.apply(&prod).iter().any(|x| !x.is_zero()) {
                    return Err(Error::Precondition(
                        "the induced product is not well defined on the image".into(),
                    ));
                }
            }
        }
    }
    let labels: Vec<String> = pivots.iter().map(|&i| format!("T({})", v.label(i))).collect();
    let parities: Vec<Parity> = pivots.iter().map(|&i| v.parity(i) + t.parity()).collect();
    let (space, perm) = SuperSpace::from_unsorted(labels, parities)?;
    let m = pivots.len();
    let mut basis = vec![Vec::new(); m];
    for (r, &i) in pivots.iter().enumerate() {
        basis[perm[r]] = t.image_of_basis(i);
    }
    let b = Matrix::from_fn(g.dim(), m, |k, r| basis[r][k].clone());
    let coords = |y: &[Scalar]| -> Result<Vec<Scalar>> {
        let mut aug = Matrix::from_fn(g.dim(), m + 1, |k, c| {
            if c < m {
                b.get(k, c).clone()
            } else {
                y[k].clone()
            }
        });
        let piv = aug.rref();
        if piv.contains(&m) {
            return Err(Error::Precondition("product leaves the image".into()));
        }
        Ok((0..m).map(|r| aug.get(r, m).clone()).collect())
    };
    let mut p = vec![Scalar::zero(); m * m * m];
    for (r, &i) in pivots.iter().enumerate() {
        for (q, &j) in pivots.iter().enumerate() {
            let prod = dot.product(&basis_vector(n, i), &basis_vector(n, j));
            let x = coords(&t.apply(&prod))?;
            for (k, c) in x.into_iter().enumerate() {
                p[(perm[r] * m + perm[q]) * m + k] = c;
            }
        }
    }
    let algebra = PreLieSuperAlgebra::from_structure(space, Parity::Even, p)?;
    Ok(InducedPreLie { basis, algebra })
}

/// `x ∗ y = (-1)^{|T||x|} T(ρ(x) T^{-1}(y))` on `g` for an invertible O-operator.
pub fn compatible_prelie(t: &GradedLinearMap, rho: &Representation) -> Result<PreLieSuperAlgebra> {
    require_oop(t, rho)?;
    let inv = t.inverse()?;
    let g = rho.algebra();
    let n = g.dim();
    let mut p = vec![Scalar::zero(); n * n * n];
    for x in 0..n {
        let act = rho.action(x).matrix();
        let m = t.matrix().mul(&act.mul(inv.matrix()));
        let sgn = t.parity() * g.space().parity(x);
        for y in 0..n {
            for k in 0..n {
                p[(x * n + y) * n + k] = signed(sgn, m.get(k, y).clone());
            }
        }
    }
    PreLieSuperAlgebra::from_structure(g.space().clone(), Parity::Even, p)
}

/// `r_id` in `g(A) ⋉_{L*} A*` and `r_{id^s}` in `g(A) ⋉_{(L^s)*} (sA)*`.
pub fn prelie_rmatrix_pair(a: &PreLieSuperAlgebra) -> Result<(SemidirectRMatrix, SemidirectRMatrix)> {
    let l = left_regular_rep(a)?;
    let id = identity_oop(a);
    Ok((
        operator_to_rmatrix(&id, &l, Variant::Plain)?,
        operator_to_rmatrix(&id, &l, Variant::Dual)?,
    ))
}

/// Both r-matrices in `g(A) ⋉_{L*} A*` when `φ: A -> sA` intertwines `L` and `L^s`.
pub fn prelie_same_algebra_pair(
    a: &PreLieSuperAlgebra,
    phi: &GradedLinearMap,
) -> Result<(SemidirectRMatrix, RMatrix)> {
    let l = left_regular_rep(a)?;
    same_algebra_pair(&identity_oop(a), &l, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::int;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn compatible() -> PreLieSuperAlgebra {
        let s = SuperSpace::new(["e"], ["f"]).unwrap();
        PreLieSuperAlgebra::new(
            s,
            Parity::Even,
            &[
                (0, 0, v(&[1, 0])),
                (0, 1, v(&[0, 1])),
                (1, 0, v(&[0, 1])),
                (1, 1, v(&[-1, 0])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn subadjacent_bracket() {
        let g = subadjacent(&compatible()).unwrap();
        assert_eq!(g.product_table(), vec!["[f,f] = -2 e"]);
    }

    #[test]
    fn identity_is_an_o_operator() {
        let a = compatible();
        let l = left_regular_rep(&a).unwrap();
        assert!(oop_holds(&identity_oop(&a), &l).unwrap());
    }

    #[test]
    fn failing_variant() {
        let s = SuperSpace::new(["e"], ["f"]).unwrap();
        let err = PreLieSuperAlgebra::new(
            s,
            Parity::Even,
            &[(0, 0, v(&[1, 0])), (0, 1, v(&[0, 1])), (1, 1, v(&[-1, 0]))],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidPreLie(m) if m.contains("left symmetry")));
    }
}
