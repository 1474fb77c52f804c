//! O-operators, Rota-Baxter operators, the parity duality `T ↔ T^s`,
//! transport along intertwiners and an exhaustive grid search.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graded::linalg::Matrix;
use crate::graded::scalar::{signed, Scalar};
use crate::graded::{GradedLinearMap, Parity};
use crate::lie::LieSuperAlgebra;
use crate::rep::{is_intertwiner, parity_reverse_rep, self_reversing_double, RepSum, Representation};

/// Outcome of an O-operator check with the full table of
/// `Op(v_i, v_j) = [T v_i, T v_j] - T((-1)^{(|T|+|v_i|)|T|} ρ(T v_i) v_j - (-1)^{|v_i|(|T|+|v_j|)} ρ(T v_j) v_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OopVerdict {
    pub holds: bool,
    dim: usize,
    defect: Vec<Vec<Scalar>>,
}

impl OopVerdict {
    /// `Op(v_i, v_j)` in coordinates of `g`.
    pub fn defect(&self, i: usize, j: usize) -> &[Scalar] {
        &self.defect[i * self.dim + j]
    }

    /// Pairs `(i, j)` with a non-zero defect.
    pub fn failures(&self) -> Vec<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
            .filter(|&(i, j)| self.defect(i, j).iter().any(|x| !x.is_zero()))
            .collect()
    }
}

fn check_candidate(t: &GradedLinearMap, rho: &Representation) -> Result<()> {
    if !t.domain().same_shape(rho.space()) {
        return Err(Error::SpaceMismatch(format!(
            "the map starts at {} but the module is {}",
            t.domain(),
            rho.space()
        )));
    }
    if !t.codomain().same_shape(rho.algebra().space()) {
        return Err(Error::SpaceMismatch(format!(
            "the map lands in {} but the algebra is {}",
            t.codomain(),
            rho.algebra().space()
        )));
    }
    Ok(())
}

/// `ρ(x) v_j` for a basis vector `v_j`.
fn act_basis(rho: &Representation, x: &[Scalar], j: usize) -> Vec<Scalar> {
    let n = rho.space().dim();
    let mut out = vec![Scalar::zero(); n];
    for (a, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let m = rho.action(a).matrix();
        for (k, slot) in out.iter_mut().enumerate() {
            let y = m.get(k, j);
            if !y.is_zero() {
                *slot += c * y;
            }
        }
    }
    out
}

fn oop_defect(
    t: &GradedLinearMap,
    rho: &Representation,
    images: &[Vec<Scalar>],
    i: usize,
    j: usize,
) -> Vec<Scalar> {
    let g = rho.algebra();
    let v = rho.space();
    let pt = t.parity();
    let (pi, pj) = (v.parity(i), v.parity(j));
    let mut inner = act_basis(rho, &images[i], j);
    if ((pt + pi) * pt).is_odd() {
        inner.iter_mut().for_each(|x| *x = -x.clone());
    }
    let second = act_basis(rho, &images[j], i);
    let s2 = (pi * (pt + pj)).is_odd();
    for (slot, y) in inner.iter_mut().zip(second) {
        if s2 {
            *slot += y;
        } else {
            *slot -= y;
        }
    }
    let mut out = g.bracket(&images[i], &images[j]);
    for (slot, y) in out.iter_mut().zip(t.apply(&inner)) {
        *slot -= y;
    }
    out
}

/// Evaluates the O-operator identity on every pair of basis vectors of `V`.
pub fn is_oop(t: &GradedLinearMap, rho: &Representation) -> Result<OopVerdict> {
    check_candidate(t, rho)?;
    let m = rho.space().dim();
    let images: Vec<Vec<Scalar>> = (0..m).map(|i| t.image_of_basis(i)).collect();
    let mut defect = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            defect.push(oop_defect(t, rho, &images, i, j));
        }
    }
    let holds = defect.iter().all(|d| d.iter().all(Zero::is_zero));
    Ok(OopVerdict {
        holds,
        dim: m,
        defect,
    })
}

/// Like [`is_oop`] but stops at the first non-zero defect.
pub fn oop_holds(t: &GradedLinearMap, rho: &Representation) -> Result<bool> {
    check_candidate(t, rho)?;
    let m = rho.space().dim();
    let images: Vec<Vec<Scalar>> = (0..m).map(|i| t.image_of_basis(i)).collect();
    for i in 0..m {
        for j in 0..m {
            if oop_defect(t, rho, &images, i, j).iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `[R x, R y] = R((-1)^{(|R|+|x|)|R|}[R x, y] + [x, R y])` on all basis pairs.
pub fn is_rota_baxter(r: &GradedLinearMap, g: &LieSuperAlgebra) -> Result<bool> {
    if !r.domain().same_shape(g.space()) || !r.codomain().same_shape(g.space()) {
        return Err(Error::SpaceMismatch("a Rota-Baxter operator is an endomorphism of g".into()));
    }
    let n = g.dim();
    let basis = |i: usize| -> Vec<Scalar> {
        (0..n)
            .map(|k| if k == i { Scalar::from_integer(1.into()) } else { Scalar::zero() })
            .collect()
    };
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| r.image_of_basis(i)).collect();
    for x in 0..n {
        for y in 0..n {
            let lhs = g.bracket(&images[x], &images[y]);
            let sgn = (r.parity() + g.space().parity(x)) * r.parity();
            let first = g.bracket(&images[x], &basis(y));
            let second = g.bracket(&basis(x), &images[y]);
            let inner: Vec<Scalar> = first
                .into_iter()
                .zip(second)
                .map(|(a, b)| signed(sgn, a) + b)
                .collect();
            if lhs != r.apply(&inner) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(T, ρ) ↦ (T^s, ρ^s)`; the O-operator verdict is unchanged and the parity flips.
pub fn parity_dual_oop(t: &GradedLinearMap, rho: &Representation) -> (GradedLinearMap, Representation) {
    (t.suspend_map(), parity_reverse_rep(rho))
}

/// `T̂: V ⊕ sV -> g`, `T̂(v, s u) = T(v)`, for the representation `ρ ⊕ ρ^s`.
pub fn extend_to_double(t: &GradedLinearMap, rho: &Representation) -> Result<(GradedLinearMap, RepSum)> {
    check_candidate(t, rho)?;
    let double = self_reversing_double(rho);
    let n = double.rep.space().dim();
    let mut m = Matrix::zeros(t.codomain().dim(), n);
    for (i, &pos) in double.left.iter().enumerate() {
        for k in 0..t.codomain().dim() {
            m.set(k, pos, t.entry(k, i).clone());
        }
    }
    let hat = GradedLinearMap::new(double.rep.space().clone(), t.codomain().clone(), t.parity(), m)?;
    Ok((hat, double))
}

/// `T ∘ φ` for an intertwiner `φ: (V1, ρ1) -> (V2, ρ2)` and a candidate `T` for `ρ2`.
pub fn transport_oop(
    t: &GradedLinearMap,
    phi: &GradedLinearMap,
    rho1: &Representation,
    rho2: &Representation,
) -> Result<GradedLinearMap> {
    check_candidate(t, rho2)?;
    if !is_intertwiner(phi, rho1, rho2) {
        return Err(Error::NotIntertwiner(
            "φ does not commute with the actions".into(),
        ));
    }
    let composed = t.compose_coordinates(phi)?;
    composed.with_spaces(rho1.space().clone(), t.codomain().clone())
}

/// `T̃ = T^s ∘ φ` for a self-reversing `ρ` with isomorphism `φ: V -> sV`;
/// `T̃` is a candidate for `ρ` itself, of parity `|T| + 1`.
pub fn reversed_transport(
    t: &GradedLinearMap,
    rho: &Representation,
    phi: &GradedLinearMap,
) -> Result<GradedLinearMap> {
    let (ts, rho_s) = parity_dual_oop(t, rho);
    transport_oop(&ts, phi, rho, &rho_s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest number of maps the search may enumerate.
    pub cap: u128,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

pub const DEFAULT_SEARCH_CAP: u128 = 100_000_000;

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap: DEFAULT_SEARCH_CAP,
            threads: None,
        }
    }
}

/// Positions `(k, i)` that a map of the given parity may fill, in row-major order.
pub fn free_entries(rho: &Representation, parity: Parity) -> Vec<(usize, usize)> {
    let g = rho.algebra().space();
    let v = rho.space();
    (0..g.dim())
        .flat_map(|k| (0..v.dim()).map(move |i| (k, i)))
        .filter(|&(k, i)| g.parity(k) == v.parity(i) + parity)
        .collect()
}

/// Number of maps [`grid_search_oops`] would enumerate.
pub fn search_size(rho: &Representation, parity: Parity, entries: usize) -> u128 {
    let free = free_entries(rho, parity).len() as u32;
    (entries as u128).checked_pow(free).unwrap_or(u128::MAX)
}

/// Every O-operator of the given parity whose entries all lie in `entries`,
/// in lexicographic order of the free entries (row-major, `entries` order).
pub fn grid_search_oops(
    rho: &Representation,
    parity: Parity,
    entries: &[Scalar],
    options: SearchOptions,
) -> Result<Vec<GradedLinearMap>> {
    let free = free_entries(rho, parity);
    let size = search_size(rho, parity, entries.len());
    if size > options.cap {
        return Err(Error::SearchTooLarge {
            size,
            cap: options.cap,
        });
    }
    let base = entries.len() as u64;
    let size = size as u64;
    let g = rho.algebra().space().clone();
    let v = rho.space().clone();
    let build = |index: u64| -> GradedLinearMap {
        let mut m = Matrix::zeros(g.dim(), v.dim());
        let mut rest = index;
        for &(k, i) in free.iter().rev() {
            m.set(k, i, entries[(rest % base) as usize].clone());
            rest /= base;
        }
        GradedLinearMap::new(v.clone(), g.clone(), parity, m).expect("free entries respect parity")
    };
    let run = || -> Vec<GradedLinearMap> {
        (0..size)
            .into_par_iter()
            .filter_map(|index| {
                let t = build(index);
                oop_holds(&t, rho).expect("candidate shape is valid").then_some(t)
            })
            .collect()
    };
    match options.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Precondition(e.to_string()))?;
            Ok(pool.install(run))
        }
        None => Ok(run()),
    }
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

    fn op(g: &LieSuperAlgebra, parity: Parity, cols: &[[i64; 2]]) -> GradedLinearMap {
        let cols: Vec<Vec<Scalar>> = cols.iter().map(|c| c.iter().map(|&x| int(x)).collect()).collect();
        GradedLinearMap::from_columns(g.space().dual(), g.space().clone(), parity, &cols).unwrap()
    }

    #[test]
    fn printed_operators_are_o_operators() {
        let g = ex_g();
        let co = Representation::coadjoint(&g);
        let t0 = op(&g, Parity::Even, &[[0, 0], [0, -1]]);
        let t1 = op(&g, Parity::Odd, &[[0, 1], [-1, 0]]);
        assert!(is_oop(&t0, &co).unwrap().holds);
        assert!(is_oop(&t1, &co).unwrap().holds);
        let zero = GradedLinearMap::zero(g.space().dual(), g.space().clone(), Parity::Odd);
        assert!(is_oop(&zero, &co).unwrap().holds);
    }

    #[test]
    fn identity_is_not_rota_baxter() {
        let g = ex_g();
        let id = GradedLinearMap::identity(g.space());
        assert!(!is_rota_baxter(&id, &g).unwrap());
        assert!(!is_oop(&id, &Representation::adjoint(&g)).unwrap().holds);
        let zero = GradedLinearMap::zero(g.space().clone(), g.space().clone(), Parity::Odd);
        assert!(is_rota_baxter(&zero, &g).unwrap());
    }

    #[test]
    fn search_finds_t0() {
        let g = ex_g();
        let co = Representation::coadjoint(&g);
        let found = grid_search_oops(&co, Parity::Even, &[int(-1), int(0), int(1)], SearchOptions::default())
            .unwrap();
        let t0 = op(&g, Parity::Even, &[[0, 0], [0, -1]]);
        assert!(found.contains(&t0));
        assert!(found.iter().any(GradedLinearMap::is_zero));
        let err = grid_search_oops(
            &co,
            Parity::Even,
            &[int(0), int(1)],
            SearchOptions { cap: 2, threads: Some(1) },
        )
        .unwrap_err();
        assert_eq!(err, Error::SearchTooLarge { size: 4, cap: 2 });
    }
}
