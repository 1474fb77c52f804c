//! Lie superalgebras given by structure constants, bilinear forms on them,
//! and semidirect products with modules.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::linalg::Matrix;
use crate::graded::map::format_combination;
use crate::graded::scalar::{format_scalar, signed, Scalar};
use crate::graded::{GradedLinearMap, Parity, SuperSpace};
use crate::report::Report;
use crate::rep::Representation;

/// `[e_i, e_j] = Σ_k c_ij^k e_k`, stored densely with a sparse view per pair.
#[derive(Clone, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    space: SuperSpace,
    structure: Vec<Scalar>,
    sparse: Vec<Vec<(usize, Scalar)>>,
}

impl LieSuperAlgebra {
    /// Structure constants as given, without any axiom check.
    pub fn from_structure(space: SuperSpace, structure: Vec<Scalar>) -> Result<Self> {
        let n = space.dim();
        if structure.len() != n * n * n {
            return Err(Error::ShapeMismatch(format!(
                "{} structure constants for a space of dimension {n}",
                structure.len()
            )));
        }
        let sparse = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter(|&k| !structure[ij * n + k].is_zero())
                    .map(|k| (k, structure[ij * n + k].clone()))
                    .collect()
            })
            .collect();
        Ok(LieSuperAlgebra {
            space,
            structure,
            sparse,
        })
    }

    /// Builds the algebra from brackets `[e_i, e_j]` with `i <= j`; the remaining
    /// entries follow from super skew-symmetry. The result is checked.
    pub fn new(space: SuperSpace, brackets: &[(usize, usize, Vec<Scalar>)]) -> Result<Self> {
        let g = Self::from_brackets(space, brackets)?;
        let report = check_lie_axioms(&g);
        if let Some(failure) = report.first_failure() {
            return Err(Error::InvalidAlgebra(failure.to_string()));
        }
        Ok(g)
    }

    /// As [`LieSuperAlgebra::new`] without the axiom check.
    pub fn from_brackets(space: SuperSpace, brackets: &[(usize, usize, Vec<Scalar>)]) -> Result<Self> {
        let n = space.dim();
        let mut c = vec![Scalar::zero(); n * n * n];
        let mut seen = vec![false; n * n];
        for (i, j, value) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n || value.len() != n {
                return Err(Error::ShapeMismatch("bracket entry out of range".into()));
            }
            if i > j {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket [{}, {}] must be given as [{}, {}]",
                    space.label(i),
                    space.label(j),
                    space.label(j),
                    space.label(i)
                )));
            }
            if seen[i * n + j] {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket [{}, {}] given twice",
                    space.label(i),
                    space.label(j)
                )));
            }
            seen[i * n + j] = true;
            let sgn = space.parity(i) * space.parity(j);
            for (k, x) in value.iter().enumerate() {
                c[(i * n + j) * n + k] = x.clone();
                if i != j {
                    c[(j * n + i) * n + k] = -signed(sgn, x.clone());
                }
            }
        }
        Self::from_structure(space, c)
    }

    pub fn abelian(space: SuperSpace) -> Self {
        let n = space.dim();
        Self::from_structure(space, vec![Scalar::zero(); n * n * n]).expect("shape is consistent")
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.structure[(i * n + j) * n + k]
    }

    /// Non-zero coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sparse[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
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
                for (k, c) in self.bracket_basis(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.sparse.iter().all(Vec::is_empty)
    }

    /// Matrix of `ad(e_i)`.
    pub fn ad_matrix(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.bracket_basis(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// `ad(e_i)` as a map of parity `|e_i|`.
    pub fn ad(&self, i: usize) -> GradedLinearMap {
        GradedLinearMap::new(
            self.space.clone(),
            self.space.clone(),
            self.space.parity(i),
            self.ad_matrix(i),
        )
        .expect("adjoint maps of a parity-consistent algebra are homogeneous")
    }

    /// Non-zero brackets `[e_i, e_j]` with `i <= j`.
    pub fn nonzero_products(&self) -> Vec<(usize, usize, Vec<Scalar>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if !self.bracket_basis(i, j).is_empty() {
                    let v = (0..n).map(|k| self.structure(i, j, k).clone()).collect();
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// Product table as lines `[a,b] = c x + ...`, one per non-zero bracket with `a <= b`.
    pub fn product_table(&self) -> Vec<String> {
        self.nonzero_products()
            .into_iter()
            .map(|(i, j, v)| {
                format!(
                    "[{},{}] = {}",
                    self.space.label(i),
                    self.space.label(j),
                    format_combination(&self.space, &v)
                )
            })
            .collect()
    }
}

impl fmt::Debug for LieSuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieSuperAlgebra {} {:?}", self.space, self.product_table())
    }
}

fn labels(space: &SuperSpace, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| space.label(i).to_string()).collect()
}

/// Parity consistency, super skew-symmetry and the super Jacobi identity,
/// each with its first offending basis tuple.
pub fn check_lie_axioms(g: &LieSuperAlgebra) -> Report {
    let s = g.space();
    let n = g.dim();
    let mut report = Report::new();

    let mut witness = None;
    'parity: for i in 0..n {
        for j in 0..n {
            for (k, _) in g.bracket_basis(i, j) {
                if s.parity(*k) != s.parity(i) + s.parity(j) {
                    witness = Some(labels(s, &[i, j, *k]));
                    break 'parity;
                }
            }
        }
    }
    report.record("parity consistency", witness);

    let mut witness = None;
    'skew: for i in 0..n {
        for j in i..n {
            let sgn = s.parity(i) * s.parity(j);
            for k in 0..n {
                if *g.structure(i, j, k) != -signed(sgn, g.structure(j, i, k).clone()) {
                    witness = Some(labels(s, &[i, j]));
                    break 'skew;
                }
            }
        }
    }
    report.record("super skew-symmetry", witness);

    // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0
    let basis = |i: usize| -> Vec<Scalar> {
        (0..n)
            .map(|k| if k == i { Scalar::from_integer(1.into()) } else { Scalar::zero() })
            .collect()
    };
    let mut witness = None;
    'jacobi: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (px, py, pz) = (s.parity(x), s.parity(y), s.parity(z));
                let yz = g.bracket(&basis(y), &basis(z));
                let zx = g.bracket(&basis(z), &basis(x));
                let xy = g.bracket(&basis(x), &basis(y));
                let t1 = g.bracket(&basis(x), &yz);
                let t2 = g.bracket(&basis(y), &zx);
                let t3 = g.bracket(&basis(z), &xy);
                let ok = (0..n).all(|k| {
                    let total = signed(px * pz, t1[k].clone())
                        + signed(py * px, t2[k].clone())
                        + signed(pz * py, t3[k].clone());
                    total.is_zero()
                });
                if !ok {
                    witness = Some(labels(s, &[x, y, z]));
                    break 'jacobi;
                }
            }
        }
    }
    report.record("super Jacobi", witness);
    report
}

/// `β(e_i, e_j)` given by a Gram matrix, homogeneous of the declared parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    space: SuperSpace,
    gram: Matrix,
    parity: Parity,
}

impl BilinearForm {
    pub fn new(space: SuperSpace, parity: Parity, gram: Matrix) -> Result<Self> {
        let n = space.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::ShapeMismatch("Gram matrix does not fit the space".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let v = gram.get(i, j);
                if !v.is_zero() && space.parity(i) + space.parity(j) != parity {
                    return Err(Error::NotHomogeneous {
                        row: space.label(i).to_string(),
                        col: space.label(j).to_string(),
                        value: format_scalar(v),
                        parity,
                    });
                }
            }
        }
        Ok(BilinearForm {
            space,
            gram,
            parity,
        })
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    pub fn eval_basis(&self, i: usize, j: usize) -> &Scalar {
        self.gram.get(i, j)
    }

    pub fn scale(&self, c: &Scalar) -> BilinearForm {
        BilinearForm {
            gram: self.gram.scale(c),
            ..self.clone()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormFlags {
    pub supersymmetric: bool,
    pub skew_supersymmetric: bool,
    pub invariant: bool,
    pub two_cocycle: bool,
    pub nondegenerate: bool,
}

pub fn classify_form(beta: &BilinearForm, g: &LieSuperAlgebra) -> Result<FormFlags> {
    if beta.space() != g.space() {
        return Err(Error::SpaceMismatch("form and algebra live on different spaces".into()));
    }
    let s = g.space();
    let n = g.dim();
    let mut supersymmetric = true;
    let mut skew = true;
    for i in 0..n {
        for j in 0..n {
            let swapped = signed(s.parity(i) * s.parity(j), beta.eval_basis(j, i).clone());
            let b = beta.eval_basis(i, j);
            supersymmetric &= *b == swapped;
            skew &= *b == -swapped;
        }
    }
    // β([x,y],z) against β(x,[y,z]) and (-1)^{|y||z|}β([x,z],y) + β(x,[y,z])
    let bracket_left = |x: usize, y: usize, z: usize| -> Scalar {
        g.bracket_basis(x, y)
            .iter()
            .map(|(k, c)| c * beta.eval_basis(*k, z))
            .sum()
    };
    let bracket_right = |x: usize, y: usize, z: usize| -> Scalar {
        g.bracket_basis(y, z)
            .iter()
            .map(|(k, c)| c * beta.eval_basis(x, *k))
            .sum()
    };
    let mut invariant = true;
    let mut cocycle_identity = true;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = bracket_left(x, y, z);
                let right = bracket_right(x, y, z);
                invariant &= lhs == right;
                let middle = signed(s.parity(y) * s.parity(z), bracket_left(x, z, y));
                cocycle_identity &= lhs == middle + right;
            }
        }
    }
    Ok(FormFlags {
        supersymmetric,
        skew_supersymmetric: skew,
        invariant,
        two_cocycle: skew && cocycle_identity,
        nondegenerate: beta.gram().rank() == n,
    })
}

/// `φ: g -> g*` with `<φ(x), y> = β(x, y)` for an even, supersymmetric,
/// invariant, non-degenerate form.
pub fn form_to_dual_map(beta: &BilinearForm, g: &LieSuperAlgebra) -> Result<GradedLinearMap> {
    let flags = classify_form(beta, g)?;
    if beta.parity() != Parity::Even {
        return Err(Error::Precondition("the form must be even".into()));
    }
    if !flags.supersymmetric {
        return Err(Error::Precondition("the form must be supersymmetric".into()));
    }
    if !flags.invariant {
        return Err(Error::Precondition("the form must be invariant".into()));
    }
    if !flags.nondegenerate {
        return Err(Error::Degenerate);
    }
    GradedLinearMap::new(
        g.space().clone(),
        g.space().dual(),
        Parity::Even,
        beta.gram().transpose(),
    )
}

/// `T ∘ φ: g -> g` for `T: g* -> g`.
pub fn rota_baxter_transport(t: &GradedLinearMap, phi: &GradedLinearMap) -> Result<GradedLinearMap> {
    t.compose(phi)
}

/// `g ⋉_ρ V` with the positions of both bases in the sorted basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semidirect {
    pub algebra: LieSuperAlgebra,
    pub algebra_index: Vec<usize>,
    pub module_index: Vec<usize>,
}

/// `[(x,u),(y,v)] = ([x,y], ρ(x)v - (-1)^{|u||y|} ρ(y)u)`.
pub fn semidirect_product(rho: &Representation) -> Semidirect {
    let g = rho.algebra();
    let v = rho.space();
    let sum = g.space().direct_sum(v);
    let n = sum.space.dim();
    let mut c = vec![Scalar::zero(); n * n * n];
    let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    for a in 0..g.dim() {
        for b in 0..g.dim() {
            for (k, x) in g.bracket_basis(a, b) {
                c[at(sum.left[a], sum.left[b], sum.left[*k])] = x.clone();
            }
        }
    }
    for a in 0..g.dim() {
        let m = rho.action(a).matrix();
        for i in 0..v.dim() {
            let sgn = v.parity(i) * g.space().parity(a);
            for k in 0..v.dim() {
                let x = m.get(k, i);
                if x.is_zero() {
                    continue;
                }
                c[at(sum.left[a], sum.right[i], sum.right[k])] = x.clone();
                c[at(sum.right[i], sum.left[a], sum.right[k])] = -signed(sgn, x.clone());
            }
        }
    }
    let algebra =
        LieSuperAlgebra::from_structure(sum.space, c).expect("structure has the right shape");
    Semidirect {
        algebra,
        algebra_index: sum.left,
        module_index: sum.right,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::int;

    fn ex_g() -> LieSuperAlgebra {
        let s = SuperSpace::new(["e"], ["f"]).unwrap();
        LieSuperAlgebra::new(s, &[(0, 1, vec![int(0), int(1)])]).unwrap()
    }

    fn sl11() -> LieSuperAlgebra {
        let s = SuperSpace::new(["e1"], ["f1", "f2"]).unwrap();
        LieSuperAlgebra::new(s, &[(1, 2, vec![int(1), int(0), int(0)])]).unwrap()
    }

    #[test]
    fn small_algebras_pass() {
        assert!(check_lie_axioms(&ex_g()).passed());
        assert!(check_lie_axioms(&sl11()).passed());
        assert_eq!(sl11().product_table(), vec!["[f1,f2] = 1 e1"]);
        assert_eq!(ex_g().structure(1, 0, 1), &int(-1));
        let s = SuperSpace::new(["a", "b"], ["c"]).unwrap();
        assert!(check_lie_axioms(&LieSuperAlgebra::abelian(s)).passed());
    }

    #[test]
    fn bad_parity_is_rejected() {
        let s = SuperSpace::new(["e"], ["f"]).unwrap();
        let err = LieSuperAlgebra::new(s, &[(0, 1, vec![int(1), int(0)])]).unwrap_err();
        assert!(matches!(err, Error::InvalidAlgebra(m) if m.contains("parity")));
    }

    #[test]
    fn jacobi_failure_is_reported() {
        // [a,b] = c, [a,c] = a with all even breaks Jacobi
        let s = SuperSpace::new(["a", "b", "c"], Vec::<String>::new()).unwrap();
        let err = LieSuperAlgebra::new(
            s,
            &[
                (0, 1, vec![int(0), int(0), int(1)]),
                (0, 2, vec![int(1), int(0), int(0)]),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidAlgebra(m) if m.contains("Jacobi")));
    }

    #[test]
    fn zero_form_flags() {
        let g = ex_g();
        let beta = BilinearForm::new(g.space().clone(), Parity::Even, Matrix::zeros(2, 2)).unwrap();
        let f = classify_form(&beta, &g).unwrap();
        assert!(f.supersymmetric && f.skew_supersymmetric && f.invariant && f.two_cocycle);
        assert!(!f.nondegenerate);
    }

    #[test]
    fn sl11_form_is_not_invariant() {
        let g = sl11();
        let mut m = Matrix::zeros(3, 3);
        m.set(0, 0, int(1));
        let beta = BilinearForm::new(g.space().clone(), Parity::Even, m).unwrap();
        let f = classify_form(&beta, &g).unwrap();
        assert!(f.supersymmetric);
        assert!(!f.invariant);
    }

    #[test]
    fn one_dimensional_dual_map() {
        let s = SuperSpace::new(["e"], Vec::<String>::new()).unwrap();
        let g = LieSuperAlgebra::abelian(s);
        let beta = BilinearForm::new(
            g.space().clone(),
            Parity::Even,
            Matrix::from_rows(vec![vec![int(3)]]),
        )
        .unwrap();
        let phi = form_to_dual_map(&beta, &g).unwrap();
        assert_eq!(phi.image_of_basis(0), vec![int(3)]);
        let degenerate = beta.scale(&int(0));
        assert_eq!(form_to_dual_map(&degenerate, &g), Err(Error::Degenerate));
    }
}
