#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superybe::catalog::{affine_1_1, odd_square, odd_square_module, sl11, sl11_module};
use superybe::graded::linalg::Matrix;
use superybe::graded::scalar::int;
use superybe::lie::LieSuperAlgebra;
use superybe::rep::Representation;
use superybe::rmat::RMatrix;
use superybe::{GradedLinearMap, Parity, Scalar, SuperSpace, Tensor3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An integer in `-2..=2`, zero about half of the time.
pub fn entry(rng: &mut ChaCha8Rng) -> Scalar {
    if rng.gen_bool(0.5) {
        int(0)
    } else {
        int(rng.gen_range(-2..=2))
    }
}

pub fn parity(rng: &mut ChaCha8Rng) -> Parity {
    if rng.gen_bool(0.5) {
        Parity::Odd
    } else {
        Parity::Even
    }
}

pub fn random_map(
    rng: &mut ChaCha8Rng,
    domain: &SuperSpace,
    codomain: &SuperSpace,
    p: Parity,
) -> GradedLinearMap {
    let m = Matrix::from_fn(codomain.dim(), domain.dim(), |k, i| {
        if codomain.parity(k) == domain.parity(i) + p {
            entry(rng)
        } else {
            int(0)
        }
    });
    GradedLinearMap::new(domain.clone(), codomain.clone(), p, m).unwrap()
}

/// A homogeneous tensor with no symmetry imposed.
pub fn random_tensor(rng: &mut ChaCha8Rng, g: &LieSuperAlgebra, p: Parity) -> RMatrix {
    let s = g.space();
    let m = Matrix::from_fn(s.dim(), s.dim(), |i, j| {
        if s.parity(i) + s.parity(j) == p {
            entry(rng)
        } else {
            int(0)
        }
    });
    RMatrix::with_parity(g.clone(), p, m).unwrap()
}

/// A homogeneous tensor with `σ(r) = -(-1)^{|r|} r`.
pub fn random_pan(rng: &mut ChaCha8Rng, g: &LieSuperAlgebra, p: Parity) -> RMatrix {
    let s = g.space();
    let n = s.dim();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if s.parity(i) + s.parity(j) != p {
                continue;
            }
            // σ(e_i ⊗ e_j) = (-1)^{|e_i||e_j|} e_j ⊗ e_i
            let twist = s.parity(i) * s.parity(j);
            let factor = if (twist + p.flip()).is_odd() { int(-1) } else { int(1) };
            let c = entry(rng);
            if i == j && factor != int(1) {
                continue;
            }
            m.set(i, j, c.clone());
            m.set(j, i, factor * c);
        }
    }
    RMatrix::with_parity(g.clone(), p, m).unwrap()
}

pub struct CatalogAlgebra {
    pub name: &'static str,
    pub algebra: LieSuperAlgebra,
    pub reps: Vec<(&'static str, Representation)>,
}

pub fn catalog_algebras() -> Vec<CatalogAlgebra> {
    let with_standard = |name, g: LieSuperAlgebra, extra: Vec<(&'static str, Representation)>| {
        let mut reps = vec![
            ("ad", Representation::adjoint(&g)),
            ("coad", Representation::coadjoint(&g)),
        ];
        reps.extend(extra);
        CatalogAlgebra {
            name,
            algebra: g,
            reps,
        }
    };
    let a = affine_1_1().unwrap();
    let s = sl11().unwrap();
    let sm = sl11_module(&s).unwrap();
    let o = odd_square().unwrap();
    let om = odd_square_module(&o).unwrap();
    vec![
        with_standard("affine(1|1)", a, vec![]),
        with_standard("sl(1|1)", s, vec![("module", sm)]),
        with_standard("odd square", o, vec![("module", om)]),
    ]
}

/// `[[r, r]]` expanded term by term from the three commutators, using only
/// structure constants.
pub fn naive_scybe(r: &RMatrix) -> Tensor3 {
    let g = r.algebra();
    let s = g.space();
    let n = s.dim();
    let odd = |a: usize, b: usize| s.parity(a).is_odd() && s.parity(b).is_odd();
    let mut out = Tensor3::zero(s.clone());
    let mut terms = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let c = r.coeff(x, y);
            if *c != int(0) {
                terms.push((c.clone(), x, y));
            }
        }
    }
    for (ci, xi, yi) in &terms {
        for (cj, xj, yj) in &terms {
            let c = ci * cj;
            let sign = if odd(*yi, *xj) { int(-1) } else { int(1) };
            for k in 0..n {
                // [r12, r13]
                let b = g.structure(*xi, *xj, k);
                if *b != int(0) {
                    out.add_at(k, *yi, *yj, &(&sign * &c * b));
                }
                // [r12, r23]
                let b = g.structure(*yi, *xj, k);
                if *b != int(0) {
                    out.add_at(*xi, k, *yj, &(&c * b));
                }
                // [r13, r23]
                let b = g.structure(*yi, *yj, k);
                if *b != int(0) {
                    out.add_at(*xi, *xj, k, &(&sign * &c * b));
                }
            }
        }
    }
    out
}

/// Sign of reordering a word of graded symbols: every pair that changes
/// relative order contributes `(-1)^{|a||b|}`.
pub fn koszul_sign(word: &[(char, Parity)], target: &[char]) -> Scalar {
    let pos = |c: char| target.iter().position(|&t| t == c).unwrap();
    let mut sign = int(1);
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if pos(word[a].0) > pos(word[b].0) && (word[a].1 * word[b].1).is_odd() {
                sign = -sign;
            }
        }
    }
    sign
}

fn column(m: &Matrix, i: usize) -> Vec<Scalar> {
    (0..m.rows()).map(|k| m.get(k, i).clone()).collect()
}

fn apply(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows())
        .map(|k| (0..m.cols()).fold(int(0), |acc, i| acc + m.get(k, i) * &v[i]))
        .collect()
}

/// `ρ(x) v_j` from the action matrices.
fn act(rho: &Representation, x: &[Scalar], j: usize) -> Vec<Scalar> {
    let n = rho.space().dim();
    let mut out = vec![int(0); n];
    for (a, c) in x.iter().enumerate() {
        for (k, slot) in out.iter_mut().enumerate() {
            *slot += c * rho.action(a).matrix().get(k, j);
        }
    }
    out
}

fn bracket(g: &LieSuperAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = g.dim();
    let mut out = vec![int(0); n];
    for (a, xa) in x.iter().enumerate() {
        for (b, yb) in y.iter().enumerate() {
            let c = xa * yb;
            if c == int(0) {
                continue;
            }
            for (k, slot) in out.iter_mut().enumerate() {
                *slot += &c * g.structure(a, b, k);
            }
        }
    }
    out
}

/// `[T u, T v] = ±T(ρ(T u) v) - ±T(ρ(T v) u)` on basis vectors, with each
/// sign read off from the reordering of the word `T u T' v`.
pub fn koszul_is_oop(t: &GradedLinearMap, rho: &Representation) -> bool {
    let g = rho.algebra();
    let v = rho.space();
    let tm = t.matrix();
    let pt = t.parity();
    for i in 0..v.dim() {
        for j in 0..v.dim() {
            let word = [('T', pt), ('u', v.parity(i)), ('S', pt), ('v', v.parity(j))];
            let first = koszul_sign(&word, &['S', 'T', 'u', 'v']);
            let second = koszul_sign(&word, &['T', 'S', 'v', 'u']);
            let (tu, tv) = (column(tm, i), column(tm, j));
            let lhs = bracket(g, &tu, &tv);
            let a = act(rho, &tu, j);
            let b = act(rho, &tv, i);
            let inner: Vec<Scalar> = a
                .iter()
                .zip(&b)
                .map(|(x, y)| &first * x - &second * y)
                .collect();
            if lhs != apply(tm, &inner) {
                return false;
            }
        }
    }
    true
}
