//! Super r-matrices: pan-supersymmetry, the super classical Yang-Baxter
//! defect, the correspondence with O-operators of coadjoint type, the
//! 2-cocycle characterization and the tree hierarchy.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graded::linalg::Matrix;
use crate::graded::scalar::{signed, Scalar};
use crate::graded::{GradedLinearMap, Parity, Tensor2, Tensor3};
use crate::lie::{semidirect_product, BilinearForm, LieSuperAlgebra, Semidirect};
use crate::oop::{parity_dual_oop, reversed_transport};
use crate::rep::{dual_rep, is_intertwiner, parity_reverse_rep, Representation};

/// A homogeneous `r = Σ a_ij e_i ⊗ e_j ∈ g ⊗ g`.
#[derive(Clone, PartialEq, Eq)]
pub struct RMatrix {
    algebra: LieSuperAlgebra,
    tensor: Tensor2,
    parity: Parity,
}

impl RMatrix {
    pub fn new(algebra: LieSuperAlgebra, tensor: Tensor2) -> Result<Self> {
        if tensor.left() != algebra.space() || tensor.right() != algebra.space() {
            return Err(Error::SpaceMismatch("the tensor does not live in g ⊗ g".into()));
        }
        let parity = tensor.parity().ok_or(Error::Inhomogeneous)?;
        Ok(RMatrix {
            algebra,
            tensor,
            parity,
        })
    }

    pub fn with_parity(algebra: LieSuperAlgebra, parity: Parity, coeffs: Matrix) -> Result<Self> {
        let s = algebra.space().clone();
        let tensor = Tensor2::with_parity(s.clone(), s, parity, coeffs)?;
        Ok(RMatrix {
            algebra,
            tensor,
            parity,
        })
    }

    /// Builds `Σ c x ⊗ y` from labelled terms.
    pub fn from_labels(
        algebra: LieSuperAlgebra,
        parity: Parity,
        terms: &[(Scalar, &str, &str)],
    ) -> Result<Self> {
        let s = algebra.space();
        let mut m = Matrix::zeros(s.dim(), s.dim());
        for (c, x, y) in terms {
            m.add_at(s.require_index(x)?, s.require_index(y)?, c);
        }
        Self::with_parity(algebra, parity, m)
    }

    pub fn zero(algebra: LieSuperAlgebra, parity: Parity) -> Self {
        let s = algebra.space().clone();
        RMatrix {
            tensor: Tensor2::zero(s.clone(), s, parity),
            algebra,
            parity,
        }
    }

    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    pub fn tensor(&self) -> &Tensor2 {
        &self.tensor
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        self.tensor.get(i, j)
    }

    pub fn scale(&self, c: &Scalar) -> RMatrix {
        RMatrix {
            tensor: self.tensor.scale(c),
            ..self.clone()
        }
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RMatrix({}, {})", self.parity, self.tensor)
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tensor)
    }
}

/// `σ(r) = -(-1)^{|r|} r`.
pub fn is_pan_supersymmetric(r: &RMatrix) -> bool {
    let target = if r.parity.is_odd() {
        r.tensor.clone()
    } else {
        r.tensor.scale(&-Scalar::from_integer(1.into()))
    };
    r.tensor.twist().same_coefficients(&target)
}

/// `[r12,r13] + [r12,r23] + [r13,r23]` as a coefficient array on `g ⊗ g ⊗ g`.
pub fn scybe_defect(r: &RMatrix) -> Tensor3 {
    let g = &r.algebra;
    let s = g.space();
    let mut d = Tensor3::zero(s.clone());
    let terms = r.tensor.terms();
    for (a, p, q) in &terms {
        for (b, u, t) in &terms {
            let ab = a * b;
            // x_i = e_p, y_i = e_q, x_j = e_u, y_j = e_t
            let koszul = s.parity(*q) * s.parity(*u);
            for (k, c) in g.bracket_basis(*p, *u) {
                d.add_at(*k, *q, *t, &signed(koszul, &ab * c));
            }
            for (k, c) in g.bracket_basis(*q, *u) {
                d.add_at(*p, *k, *t, &(&ab * c));
            }
            for (k, c) in g.bracket_basis(*q, *t) {
                d.add_at(*p, *u, *k, &signed(koszul, &ab * c));
            }
        }
    }
    d
}

pub fn is_super_rmatrix(r: &RMatrix) -> bool {
    scybe_defect(r).is_zero()
}

/// `T_r: g* -> g`, `T_r(e_i*) = (-1)^{|e_i|} Σ_j a_ji e_j`.
pub fn rmatrix_to_operator(r: &RMatrix) -> GradedLinearMap {
    let s = r.algebra.space();
    let m = Matrix::from_fn(s.dim(), s.dim(), |j, i| signed(s.parity(i), r.coeff(j, i).clone()));
    GradedLinearMap::new(s.dual(), s.clone(), r.parity, m).expect("T_r has the parity of r")
}

/// Inverse of [`rmatrix_to_operator`] for a map `g* -> g`.
pub fn operator_to_tensor(g: &LieSuperAlgebra, t: &GradedLinearMap) -> Result<RMatrix> {
    let s = g.space();
    if !t.domain().same_shape(s) || !t.codomain().same_shape(s) {
        return Err(Error::SpaceMismatch("expected a map g* -> g".into()));
    }
    let m = Matrix::from_fn(s.dim(), s.dim(), |j, i| signed(s.parity(i), t.entry(j, i).clone()));
    RMatrix::with_parity(g.clone(), t.parity(), m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `r_T` in `g ⋉_{ρ*} V*`.
    Plain,
    /// `r_{T^s}` in `g ⋉_{(ρ^s)*} (sV)*`.
    Dual,
}

/// An r-matrix together with the semidirect algebra it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectRMatrix {
    pub semidirect: Semidirect,
    pub rmatrix: RMatrix,
}

/// `r_T = Σ_i T v_i ⊗ v_i* + (-1)^{(|T|+1)(|v_i|+1)} v_i* ⊗ T v_i` in `g ⋉_{ρ*} V*`.
fn plain_rmatrix(t: &GradedLinearMap, rho: &Representation, sd: &Semidirect) -> Result<RMatrix> {
    let g = rho.algebra();
    let v = rho.space();
    if !t.domain().same_shape(v) || !t.codomain().same_shape(g.space()) {
        return Err(Error::SpaceMismatch("the map is not V -> g".into()));
    }
    let n = sd.algebra.dim();
    let mut m = Matrix::zeros(n, n);
    for i in 0..v.dim() {
        let star = sd.module_index[i];
        let sgn = (t.parity().flip()) * (v.parity(i).flip());
        for k in 0..g.dim() {
            let c = t.entry(k, i);
            if c.is_zero() {
                continue;
            }
            let gk = sd.algebra_index[k];
            m.add_at(gk, star, c);
            m.add_at(star, gk, &signed(sgn, c.clone()));
        }
    }
    RMatrix::with_parity(sd.algebra.clone(), t.parity(), m)
}

pub fn operator_to_rmatrix(
    t: &GradedLinearMap,
    rho: &Representation,
    variant: Variant,
) -> Result<SemidirectRMatrix> {
    let (t, rho) = match variant {
        Variant::Plain => (t.clone(), rho.clone()),
        Variant::Dual => parity_dual_oop(t, rho),
    };
    let semidirect = semidirect_product(&dual_rep(&rho));
    let rmatrix = plain_rmatrix(&t, &rho, &semidirect)?;
    Ok(SemidirectRMatrix {
        semidirect,
        rmatrix,
    })
}

/// The operator `T_{r_T}` (or `T_{r_{T^s}}`) on the semidirect algebra `D`,
/// as a map `D* -> D`: `(v_i*)* ↦ (-1)^{|v_i|} T(v_i)` (the double dual read
/// through `θ`) and `e_j* ↦ -(-1)^{|T|} T*(e_j*)`.
pub fn induced_coadjoint_operator(
    t: &GradedLinearMap,
    rho: &Representation,
    variant: Variant,
) -> Result<(Semidirect, GradedLinearMap)> {
    let (t, rho) = match variant {
        Variant::Plain => (t.clone(), rho.clone()),
        Variant::Dual => parity_dual_oop(t, rho),
    };
    let sd = semidirect_product(&dual_rep(&rho));
    let g = rho.algebra();
    let v = rho.space();
    let n = sd.algebra.dim();
    let mut m = Matrix::zeros(n, n);
    for i in 0..v.dim() {
        let col = sd.module_index[i];
        for k in 0..g.dim() {
            let c = t.entry(k, i);
            if !c.is_zero() {
                m.set(sd.algebra_index[k], col, signed(v.parity(i), c.clone()));
            }
        }
    }
    let t_dual = t.dual_map();
    let flip = t.parity().flip();
    for j in 0..g.dim() {
        let col = sd.algebra_index[j];
        for i in 0..v.dim() {
            let c = t_dual.entry(i, j);
            if !c.is_zero() {
                m.set(sd.module_index[i], col, signed(flip, c.clone()));
            }
        }
    }
    let space = sd.algebra.space();
    let map = GradedLinearMap::new(space.dual(), space.clone(), t.parity(), m)?;
    Ok((sd, map))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaCheck {
    pub form: BilinearForm,
    pub is_super_rmatrix: bool,
    pub is_two_cocycle: bool,
}

impl BetaCheck {
    /// Must always hold; a `false` here is a bug.
    pub fn agree(&self) -> bool {
        self.is_super_rmatrix == self.is_two_cocycle
    }
}

/// `β_r(u, v) = <T_r^{-1} u, v>` and whether it is a 2-cocycle.
pub fn beta_cocycle_check(r: &RMatrix) -> Result<BetaCheck> {
    if !is_pan_supersymmetric(r) {
        return Err(Error::Precondition("r must be pan-supersymmetric".into()));
    }
    let t = rmatrix_to_operator(r);
    let inv = t.inverse().map_err(|_| Error::Degenerate)?;
    let s = r.algebra.space();
    let gram = inv.matrix().transpose();
    let form = BilinearForm::new(s.clone(), r.parity, gram)?;
    let flags = crate::lie::classify_form(&form, &r.algebra)?;
    Ok(BetaCheck {
        form,
        is_super_rmatrix: is_super_rmatrix(r),
        is_two_cocycle: flags.two_cocycle,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// `g ⋉_ad g`.
    Plus,
    /// `g ⋉_{ad^s} sg`.
    Minus,
}

pub fn parse_word(word: &str) -> Result<Vec<Step>> {
    word.chars()
        .map(|c| match c {
            '+' => Ok(Step::Plus),
            '-' | '−' => Ok(Step::Minus),
            other => Err(Error::Precondition(format!(
                "hierarchy words use only + and -, found `{other}`"
            ))),
        })
        .collect()
}

/// One letter of the hierarchy applied to a pan-supersymmetric super r-matrix.
pub fn hierarchy_step(r: &RMatrix, step: Step) -> SemidirectRMatrix {
    let g = &r.algebra;
    let s = g.space();
    let ad = Representation::adjoint(g);
    let module = match step {
        Step::Plus => ad,
        Step::Minus => parity_reverse_rep(&ad),
    };
    let sd = semidirect_product(&module);
    let perm = match step {
        Step::Plus => (0..s.dim()).collect::<Vec<_>>(),
        Step::Minus => s.suspend().perm,
    };
    let n = sd.algebra.dim();
    let mut m = Matrix::zeros(n, n);
    let pr = r.parity;
    for (a, j, i) in r.tensor.terms() {
        let left = sd.algebra_index[j];
        let right = sd.module_index[perm[i]];
        let pi = s.parity(i);
        let (first, second) = match step {
            // a_ji ((e_j,0) ⊗ (0,e_i) + (-1)^{(|r|+1)(|e_i|+1)} (0,e_i) ⊗ (e_j,0))
            Step::Plus => (a.clone(), signed(pr.flip() * pi.flip(), a)),
            // (-1)^{|e_i|} a_ji (e_j ⊗ se_i + (-1)^{|e_i||r|} se_i ⊗ e_j)
            Step::Minus => {
                let c = signed(pi, a);
                (c.clone(), signed(pi * pr, c))
            }
        };
        m.add_at(left, right, &first);
        m.add_at(right, left, &second);
    }
    let parity = match step {
        Step::Plus => pr,
        Step::Minus => pr.flip(),
    };
    let rmatrix = RMatrix::with_parity(sd.algebra.clone(), parity, m)
        .expect("hierarchy tensors are homogeneous");
    SemidirectRMatrix {
        semidirect: sd,
        rmatrix,
    }
}

/// Applies the letters of `word` left to right; returns every level.
pub fn hierarchy_walk(r: &RMatrix, word: &str) -> Result<Vec<SemidirectRMatrix>> {
    let steps = parse_word(word)?;
    if !is_pan_supersymmetric(r) {
        return Err(Error::Precondition("r must be pan-supersymmetric".into()));
    }
    if !is_super_rmatrix(r) {
        return Err(Error::NotSuperRMatrix("the super CYBE defect is non-zero".into()));
    }
    let mut levels = Vec::with_capacity(steps.len());
    let mut current = r.clone();
    for step in steps {
        let next = hierarchy_step(&current, step);
        current = next.rmatrix.clone();
        levels.push(next);
    }
    Ok(levels)
}

/// `r_T` and `r_{T^s}` in the same algebra `g ⋉_{ρ*} V*`, using an
/// isomorphism `φ: (V, ρ) -> (sV, ρ^s)`.
pub fn same_algebra_pair(
    t: &GradedLinearMap,
    rho: &Representation,
    phi: &GradedLinearMap,
) -> Result<(SemidirectRMatrix, RMatrix)> {
    if phi.parity() != Parity::Even || phi.inverse().is_err() {
        return Err(Error::Precondition("φ must be an even isomorphism".into()));
    }
    if !is_intertwiner(phi, rho, &parity_reverse_rep(rho)) {
        return Err(Error::NotIntertwiner("φ does not intertwine ρ and ρ^s".into()));
    }
    let plain = operator_to_rmatrix(t, rho, Variant::Plain)?;
    let tilde = reversed_transport(t, rho, phi)?;
    let odd = plain_rmatrix(&tilde, rho, &plain.semidirect)?;
    Ok((plain, odd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::scalar::int;
    use crate::graded::SuperSpace;

    fn ex_g() -> LieSuperAlgebra {
        let s = SuperSpace::new(["e"], ["f"]).unwrap();
        LieSuperAlgebra::new(s, &[(0, 1, vec![int(0), int(1)])]).unwrap()
    }

    #[test]
    fn printed_rmatrices() {
        let g = ex_g();
        let r0 = RMatrix::from_labels(g.clone(), Parity::Even, &[(int(1), "f", "f")]).unwrap();
        let r1 = RMatrix::from_labels(
            g.clone(),
            Parity::Odd,
            &[(int(1), "e", "f"), (int(1), "f", "e")],
        )
        .unwrap();
        for r in [&r0, &r1] {
            assert!(is_pan_supersymmetric(r));
            assert!(is_super_rmatrix(r));
        }
        let t0 = rmatrix_to_operator(&r0);
        assert_eq!(t0.image_of_basis(0), vec![int(0), int(0)]);
        assert_eq!(t0.image_of_basis(1), vec![int(0), int(-1)]);
        let t1 = rmatrix_to_operator(&r1);
        assert_eq!(t1.image_of_basis(0), vec![int(0), int(1)]);
        assert_eq!(t1.image_of_basis(1), vec![int(-1), int(0)]);
        assert_eq!(operator_to_tensor(&g, &t1).unwrap(), r1);
    }

    #[test]
    fn symmetric_even_square_is_not_pan_supersymmetric() {
        let g = ex_g();
        let r = RMatrix::from_labels(g.clone(), Parity::Even, &[(int(1), "e", "e")]).unwrap();
        assert!(!is_pan_supersymmetric(&r));
        // every bracket in the expansion is [e,e] = 0
        assert!(is_super_rmatrix(&r));
        let r = RMatrix::from_labels(g, Parity::Odd, &[(int(1), "e", "f")]).unwrap();
        let d = scybe_defect(&r);
        assert_eq!(d.nonzero(), vec![((0, 1, 1), int(-1))]);
    }

    #[test]
    fn degenerate_beta() {
        let g = ex_g();
        let r0 = RMatrix::from_labels(g, Parity::Even, &[(int(1), "f", "f")]).unwrap();
        assert_eq!(beta_cocycle_check(&r0), Err(Error::Degenerate));
    }

    #[test]
    fn hierarchy_words() {
        assert_eq!(parse_word("+-−").unwrap(), vec![Step::Plus, Step::Minus, Step::Minus]);
        assert!(parse_word("+x").is_err());
    }
}
