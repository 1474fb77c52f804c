//! Representations of Lie superalgebras: adjoint and coadjoint actions,
//! duals, parity reversal, direct sums and even isomorphisms.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graded::linalg::Matrix;
use crate::graded::scalar::{int, signed, Scalar};
use crate::graded::{GradedLinearMap, Parity, SuperSpace};
use crate::lie::LieSuperAlgebra;
use crate::report::Report;

/// A verified action `ρ(e_a): V -> V`, one map per basis vector of `g`.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieSuperAlgebra,
    space: SuperSpace,
    action: Vec<GradedLinearMap>,
}

/// Checks that each `ρ(e_a)` is an endomorphism of `V` of parity `|e_a|` and
/// that `ρ([e_a,e_b]) = ρ(e_a)ρ(e_b) - (-1)^{|e_a||e_b|}ρ(e_b)ρ(e_a)`.
pub fn check_representation(
    g: &LieSuperAlgebra,
    space: &SuperSpace,
    action: &[GradedLinearMap],
) -> Result<Report> {
    if action.len() != g.dim() {
        return Err(Error::ShapeMismatch(format!(
            "{} action maps for an algebra of dimension {}",
            action.len(),
            g.dim()
        )));
    }
    for m in action {
        if m.domain() != space || m.codomain() != space {
            return Err(Error::ShapeMismatch(
                "action maps must be endomorphisms of the module".into(),
            ));
        }
    }
    let gs = g.space();
    let mut report = Report::new();
    let witness = (0..g.dim())
        .find(|&a| action[a].parity() != gs.parity(a) && !action[a].is_zero())
        .map(|a| vec![gs.label(a).to_string()]);
    report.record("homogeneity", witness);

    let mut witness = None;
    'pairs: for a in 0..g.dim() {
        for b in 0..g.dim() {
            let ab = action[a].matrix().mul(action[b].matrix());
            let ba = action[b].matrix().mul(action[a].matrix());
            let rhs = if (gs.parity(a) * gs.parity(b)).is_odd() {
                ab.add(&ba)
            } else {
                ab.sub(&ba)
            };
            let mut lhs = Matrix::zeros(space.dim(), space.dim());
            for (k, c) in g.bracket_basis(a, b) {
                lhs = lhs.add(&action[*k].matrix().scale(c));
            }
            if lhs != rhs {
                witness = Some(vec![gs.label(a).to_string(), gs.label(b).to_string()]);
                break 'pairs;
            }
        }
    }
    report.record("homomorphism", witness);
    Ok(report)
}

impl Representation {
    pub fn new(
        algebra: LieSuperAlgebra,
        space: SuperSpace,
        action: Vec<GradedLinearMap>,
    ) -> Result<Self> {
        let report = check_representation(&algebra, &space, &action)?;
        if let Some(failure) = report.first_failure() {
            return Err(Error::InvalidRepresentation(failure.to_string()));
        }
        Ok(Representation {
            algebra,
            space,
            action,
        })
    }

    /// Builds the action from matrices, assigning `ρ(e_a)` the parity `|e_a|`.
    pub fn from_matrices(
        algebra: LieSuperAlgebra,
        space: SuperSpace,
        matrices: Vec<Matrix>,
    ) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                matrices.len(),
                algebra.dim()
            )));
        }
        let action = matrices
            .into_iter()
            .enumerate()
            .map(|(a, m)| {
                GradedLinearMap::new(space.clone(), space.clone(), algebra.space().parity(a), m)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, space, action)
    }

    fn trusted(algebra: LieSuperAlgebra, space: SuperSpace, action: Vec<GradedLinearMap>) -> Self {
        debug_assert!(check_representation(&algebra, &space, &action)
            .map(|r| r.passed())
            .unwrap_or(false));
        Representation {
            algebra,
            space,
            action,
        }
    }

    pub fn adjoint(g: &LieSuperAlgebra) -> Self {
        let action = (0..g.dim()).map(|a| g.ad(a)).collect();
        Self::trusted(g.clone(), g.space().clone(), action)
    }

    pub fn coadjoint(g: &LieSuperAlgebra) -> Self {
        dual_rep(&Self::adjoint(g))
    }

    pub fn zero(g: &LieSuperAlgebra, space: SuperSpace) -> Self {
        let action = (0..g.dim())
            .map(|a| GradedLinearMap::zero(space.clone(), space.clone(), g.space().parity(a)))
            .collect();
        Self::trusted(g.clone(), space, action)
    }

    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn action(&self, a: usize) -> &GradedLinearMap {
        &self.action[a]
    }

    pub fn actions(&self) -> &[GradedLinearMap] {
        &self.action
    }

    /// Matrix of `ρ(x)` for `x = Σ x_a e_a`.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let n = self.space.dim();
        let mut m = Matrix::zeros(n, n);
        for (a, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.action[a].matrix().scale(c));
            }
        }
        m
    }

    /// `ρ(x) v`.
    pub fn act_on(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.space.dim()];
        for (a, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, y) in self.action[a].apply(v).into_iter().enumerate() {
                if !y.is_zero() {
                    out[k] += c * y;
                }
            }
        }
        out
    }

    /// The same action on a relabelled copy of the module.
    pub fn relabel(&self, space: SuperSpace) -> Result<Representation> {
        let action = self
            .action
            .iter()
            .map(|m| m.with_spaces(space.clone(), space.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            algebra: self.algebra.clone(),
            space,
            action,
        })
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Representation on {} of {:?}", self.space, self.algebra)?;
        for (a, m) in self.action.iter().enumerate() {
            writeln!(f, "  {}: {:?}", self.algebra.space().label(a), m)?;
        }
        Ok(())
    }
}

/// `<ρ*(x)u*, v> = -(-1)^{|x||u*|} <u*, ρ(x)v>`.
pub fn dual_rep(rho: &Representation) -> Representation {
    let v = rho.space();
    let dual = v.dual();
    let gs = rho.algebra().space();
    let action = rho
        .action
        .iter()
        .enumerate()
        .map(|(a, m)| {
            let px = gs.parity(a);
            let mat = Matrix::from_fn(v.dim(), v.dim(), |i, j| {
                -signed(px * v.parity(j), m.entry(j, i).clone())
            });
            GradedLinearMap::new(dual.clone(), dual.clone(), px, mat)
                .expect("dual action is homogeneous")
        })
        .collect();
    Representation::trusted(rho.algebra.clone(), dual, action)
}

/// `ρ^s(x)(s v) = (-1)^{|x|} s(ρ(x) v)` on `sV`.
pub fn parity_reverse_rep(rho: &Representation) -> Representation {
    let s = rho.space().suspend();
    let n = rho.space().dim();
    let gs = rho.algebra().space();
    let action = rho
        .action
        .iter()
        .enumerate()
        .map(|(a, m)| {
            let mut mat = Matrix::zeros(n, n);
            for k in 0..n {
                for i in 0..n {
                    let x = m.entry(k, i);
                    if !x.is_zero() {
                        mat.set(s.perm[k], s.perm[i], signed(gs.parity(a), x.clone()));
                    }
                }
            }
            GradedLinearMap::new(s.space.clone(), s.space.clone(), gs.parity(a), mat)
                .expect("reversed action is homogeneous")
        })
        .collect();
    Representation::trusted(rho.algebra.clone(), s.space, action)
}

/// The odd map `s: V -> sV`, `v ↦ s v`.
pub fn suspension_map(space: &SuperSpace) -> GradedLinearMap {
    let s = space.suspend();
    let n = space.dim();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m.set(s.perm[i], i, Scalar::one());
    }
    GradedLinearMap::new(space.clone(), s.space, Parity::Odd, m).expect("suspension is odd")
}

/// `V1 ⊕ V2` with the positions of both summands' bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSum {
    pub rep: Representation,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

pub fn direct_sum_rep(rho1: &Representation, rho2: &Representation) -> Result<RepSum> {
    if rho1.algebra != rho2.algebra {
        return Err(Error::AlgebraMismatch(
            "direct sums need representations of the same algebra".into(),
        ));
    }
    let sum = rho1.space().direct_sum(rho2.space());
    let n = sum.space.dim();
    let action = (0..rho1.algebra.dim())
        .map(|a| {
            let mut m = Matrix::zeros(n, n);
            for (rho, embed) in [(rho1, &sum.left), (rho2, &sum.right)] {
                let src = rho.action(a);
                for k in 0..rho.space().dim() {
                    for i in 0..rho.space().dim() {
                        let x = src.entry(k, i);
                        if !x.is_zero() {
                            m.set(embed[k], embed[i], x.clone());
                        }
                    }
                }
            }
            GradedLinearMap::new(
                sum.space.clone(),
                sum.space.clone(),
                rho1.algebra.space().parity(a),
                m,
            )
            .expect("block action is homogeneous")
        })
        .collect();
    Ok(RepSum {
        rep: Representation::trusted(rho1.algebra.clone(), sum.space, action),
        left: sum.left,
        right: sum.right,
    })
}

/// `V ⊕ sV`, which is always self-reversing.
pub fn self_reversing_double(rho: &Representation) -> RepSum {
    direct_sum_rep(rho, &parity_reverse_rep(rho)).expect("same algebra")
}

/// `φ ρ1(e_a) = ρ2(e_a) φ` for every basis vector.
pub fn is_intertwiner(phi: &GradedLinearMap, rho1: &Representation, rho2: &Representation) -> bool {
    if rho1.algebra != rho2.algebra
        || !phi.domain().same_shape(rho1.space())
        || !phi.codomain().same_shape(rho2.space())
    {
        return false;
    }
    (0..rho1.algebra.dim()).all(|a| {
        phi.matrix().mul(rho1.action(a).matrix()) == rho2.action(a).matrix().mul(phi.matrix())
    })
}

/// Basis of the even intertwiners `V1 -> V2`, computed as an exact nullspace.
pub fn even_intertwiners(rho1: &Representation, rho2: &Representation) -> Result<Vec<GradedLinearMap>> {
    if rho1.algebra != rho2.algebra {
        return Err(Error::AlgebraMismatch(
            "intertwiners need representations of the same algebra".into(),
        ));
    }
    let (v1, v2) = (rho1.space(), rho2.space());
    let unknowns: Vec<(usize, usize)> = (0..v2.dim())
        .flat_map(|k| (0..v1.dim()).map(move |i| (k, i)))
        .filter(|&(k, i)| v2.parity(k) == v1.parity(i))
        .collect();
    let mut col_of = vec![None; v2.dim() * v1.dim()];
    for (c, &(k, i)) in unknowns.iter().enumerate() {
        col_of[k * v1.dim() + i] = Some(c);
    }
    // (φ ρ1(a) - ρ2(a) φ)[k][i] = Σ_j φ[k][j] ρ1(a)[j][i] - Σ_j ρ2(a)[k][j] φ[j][i]
    let mut rows = Vec::new();
    for a in 0..rho1.algebra.dim() {
        let r1 = rho1.action(a);
        let r2 = rho2.action(a);
        for k in 0..v2.dim() {
            for i in 0..v1.dim() {
                let mut row = vec![Scalar::zero(); unknowns.len()];
                for j in 0..v1.dim() {
                    if let Some(c) = col_of[k * v1.dim() + j] {
                        row[c] += r1.entry(j, i);
                    }
                }
                for j in 0..v2.dim() {
                    if let Some(c) = col_of[j * v1.dim() + i] {
                        row[c] -= r2.entry(k, j);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..unknowns.len())
            .map(|c| {
                let mut v = vec![Scalar::zero(); unknowns.len()];
                v[c] = Scalar::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    Ok(basis
        .into_iter()
        .map(|coords| {
            let mut m = Matrix::zeros(v2.dim(), v1.dim());
            for (c, &(k, i)) in unknowns.iter().enumerate() {
                m.set(k, i, coords[c].clone());
            }
            GradedLinearMap::new(v1.clone(), v2.clone(), Parity::Even, m)
                .expect("unknowns respect parity")
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Isomorphism {
    Found {
        map: GradedLinearMap,
        inverse: GradedLinearMap,
    },
    /// Proven: no invertible even intertwiner exists.
    NotIsomorphic,
    /// The intertwiner space was too large for an exhaustive grid and sampling found nothing.
    Inconclusive,
}

impl Isomorphism {
    pub fn is_found(&self) -> bool {
        matches!(self, Isomorphism::Found { .. })
    }
}

/// Intertwiner spaces of at most this dimension are decided by a full grid.
pub const GRID_LIMIT: usize = 6;
const RANDOM_PROBES: usize = 64;

fn combine(basis: &[GradedLinearMap], t: &[Scalar]) -> Matrix {
    let m0 = basis[0].matrix();
    let mut m = Matrix::zeros(m0.rows(), m0.cols());
    for (phi, c) in basis.iter().zip(t) {
        if !c.is_zero() {
            m = m.add(&phi.matrix().scale(c));
        }
    }
    m
}

/// Searches the even intertwiners `V1 -> V2` for an invertible one.
///
/// `det(Σ t_a φ_a)` has degree at most `dim V`, so if it vanishes on the grid
/// `{0..dim V}^k` it vanishes identically. Random probes are tried first; the
/// grid is only walked to certify non-isomorphism.
pub fn find_even_isomorphism(rho1: &Representation, rho2: &Representation) -> Result<Isomorphism> {
    let basis = even_intertwiners(rho1, rho2)?;
    if !rho1.space().same_shape(rho2.space()) {
        return Ok(Isomorphism::NotIsomorphic);
    }
    let n = rho1.space().dim();
    if n == 0 {
        let map = GradedLinearMap::zero(rho1.space().clone(), rho2.space().clone(), Parity::Even);
        let inverse = map.inverse()?;
        return Ok(Isomorphism::Found { map, inverse });
    }
    if basis.is_empty() {
        return Ok(Isomorphism::NotIsomorphic);
    }
    let found = |m: Matrix| -> Option<Isomorphism> {
        let map = GradedLinearMap::new(
            rho1.space().clone(),
            rho2.space().clone(),
            Parity::Even,
            m,
        )
        .ok()?;
        let inverse = map.inverse().ok()?;
        Some(Isomorphism::Found { map, inverse })
    };
    let k = basis.len();
    let top = n as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_PROBES {
        let t: Vec<Scalar> = (0..k).map(|_| int(rng.gen_range(-top..=top))).collect();
        let m = combine(&basis, &t);
        if !m.determinant().is_zero() {
            return Ok(found(m).expect("non-zero determinant"));
        }
    }
    if k > GRID_LIMIT {
        return Ok(Isomorphism::Inconclusive);
    }
    let mut t = vec![0i64; k];
    loop {
        let ts: Vec<Scalar> = t.iter().map(|&x| int(x)).collect();
        let m = combine(&basis, &ts);
        if !m.determinant().is_zero() {
            return Ok(found(m).expect("non-zero determinant"));
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(Isomorphism::NotIsomorphic);
            }
            t[pos] += 1;
            if t[pos] > top {
                t[pos] = 0;
                pos += 1;
            } else {
                break;
            }
        }
    }
}

pub fn is_self_reversing(rho: &Representation) -> Result<Isomorphism> {
    find_even_isomorphism(rho, &parity_reverse_rep(rho))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex_g() -> LieSuperAlgebra {
        let s = SuperSpace::new(["e"], ["f"]).unwrap();
        LieSuperAlgebra::new(s, &[(0, 1, vec![int(0), int(1)])]).unwrap()
    }

    #[test]
    fn coadjoint_entries() {
        let g = ex_g();
        let co = Representation::coadjoint(&g);
        // <ad*(f) f*, e> = -(-1)^{|f||f*|} <f*, [f,e]> = -1
        assert_eq!(co.action(0).image_of_basis(1), vec![int(0), int(-1)]);
        assert_eq!(co.action(0).image_of_basis(0), vec![int(0), int(0)]);
        assert_eq!(co.action(1).image_of_basis(1), vec![int(-1), int(0)]);
        assert_eq!(co.action(1).image_of_basis(0), vec![int(0), int(0)]);
        assert!(check_representation(&g, co.space(), co.actions()).unwrap().passed());
    }

    #[test]
    fn reversal_is_an_involution_in_coordinates() {
        let g = ex_g();
        let co = Representation::coadjoint(&g);
        let back = parity_reverse_rep(&parity_reverse_rep(&co));
        for a in 0..g.dim() {
            assert!(back.action(a).same_coordinates(co.action(a)));
        }
    }

    #[test]
    fn opposite_lines_are_not_isomorphic() {
        let g = ex_g();
        let even = Representation::zero(&g, SuperSpace::new(["v"], Vec::<String>::new()).unwrap());
        let odd = Representation::zero(&g, SuperSpace::new(Vec::<String>::new(), ["w"]).unwrap());
        assert_eq!(find_even_isomorphism(&even, &odd).unwrap(), Isomorphism::NotIsomorphic);
    }

    #[test]
    fn identity_isomorphism() {
        let g = ex_g();
        let ad = Representation::adjoint(&g);
        match find_even_isomorphism(&ad, &ad).unwrap() {
            Isomorphism::Found { map, inverse } => {
                assert!(is_intertwiner(&map, &ad, &ad));
                assert_eq!(map.compose(&inverse).unwrap(), GradedLinearMap::identity(ad.space()));
            }
            other => panic!("expected an isomorphism, got {other:?}"),
        }
    }
}
