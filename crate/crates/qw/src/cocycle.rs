//! Independent re-derivation of the central term.
//!
//! The bilinear functional psi(L_i, W_j) is constrained by the twisted
//! cocycle identity specialized to triples (L_i, L_j, W_k):
//!
//! ```text
//! (q^i+1)([j]-[k]) psi(i, j+k) - (q^k+1)([i]-[j]) psi(i+j, k)
//!                              - (q^j+1)([i]-[k]) psi(j, k+i) = 0
//! ```
//!
//! On a finite index window the equations become an exact homogeneous linear
//! system over the rational-function field. Solving it, then quotienting by
//! the coboundary directions psi_chi(L_i, W_j) = ([i]-[j]) chi(W_{i+j}) via
//! the gauge psi(L_0, W_m) = 0 (m != 0), psi(L_1, W_{-1}) = 0, must leave a
//! single line spanned by the closed form psi(L_m, W_{-m}) = central_coeff(m),
//! zero off-diagonal. [`compare_closed_form`] performs that comparison;
//! [`check_cocycle_identity`] verifies the closed form against the full
//! identity directly.

use std::collections::BTreeMap;

use crate::algebra::{f_q, lie_element_bracket, monomial_as_lie, AlgebraElement, LieGenerator};
use crate::scalars::{central_coeff, q_integer, q_power, QScalar};

/// Finite table of cocycle values psi(L_i, W_j) on the window
/// |i|, |j|, |i+j| <= N; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleTable {
    window: i64,
    values: BTreeMap<(i64, i64), QScalar>,
}

impl CocycleTable {
    pub fn new(window: i64) -> Self {
        assert!(window > 0, "window must be positive");
        CocycleTable {
            window,
            values: BTreeMap::new(),
        }
    }

    /// The closed form: central_coeff on the antidiagonal, zero elsewhere.
    pub fn closed_form(window: i64) -> Self {
        let mut t = CocycleTable::new(window);
        for m in -window..=window {
            t.set(m, -m, central_coeff(m));
        }
        t
    }

    pub fn from_vector(window: i64, unknowns: &[(i64, i64)], v: &[QScalar]) -> Self {
        assert_eq!(unknowns.len(), v.len());
        let mut t = CocycleTable::new(window);
        for (p, c) in unknowns.iter().zip(v) {
            t.set(p.0, p.1, c.clone());
        }
        t
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn in_window(&self, i: i64, j: i64) -> bool {
        i.abs() <= self.window && j.abs() <= self.window && (i + j).abs() <= self.window
    }

    pub fn set(&mut self, i: i64, j: i64, value: QScalar) {
        assert!(self.in_window(i, j), "({}, {}) outside window {}", i, j, self.window);
        if value.is_zero() {
            self.values.remove(&(i, j));
        } else {
            self.values.insert((i, j), value);
        }
    }

    /// psi(L_i, W_j).
    pub fn value_lw(&self, i: i64, j: i64) -> QScalar {
        self.values.get(&(i, j)).cloned().unwrap_or_else(QScalar::zero)
    }

    /// psi(W_j, L_i) = -psi(L_i, W_j), the stored-orientation convention.
    pub fn value_wl(&self, j: i64, i: i64) -> QScalar {
        -&self.value_lw(i, j)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(i64, i64), &QScalar)> {
        self.values.iter()
    }
}

/// A homogeneous linear system over QScalar with a fixed unknown order.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    unknown_index: Vec<(i64, i64)>,
    rows: Vec<Vec<QScalar>>,
}

impl LinearSystem {
    pub fn num_unknowns(&self) -> usize {
        self.unknown_index.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn unknowns(&self) -> &[(i64, i64)] {
        &self.unknown_index
    }

    pub fn rows(&self) -> &[Vec<QScalar>] {
        &self.rows
    }

    pub fn position_of(&self, pair: (i64, i64)) -> Option<usize> {
        self.unknown_index.iter().position(|&p| p == pair)
    }

    /// Row-vector dot product against a candidate solution.
    pub fn residual(&self, row: usize, v: &[QScalar]) -> QScalar {
        let mut s = QScalar::zero();
        for (a, b) in self.rows[row].iter().zip(v) {
            s = &s + &(a * b);
        }
        s
    }
}

/// The in-window pairs (i, j) with |i|, |j|, |i+j| <= N, in lexicographic
/// order; this is the canonical unknown order everywhere.
pub fn window_pairs(n: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            if (i + j).abs() <= n {
                v.push((i, j));
            }
        }
    }
    v
}

/// One homogeneous row per triple (i, j, k) in [-N, N]^3 whose three
/// psi-slots all stay in-window; identically zero rows are dropped.
pub fn build_cocycle_system(n: i64) -> LinearSystem {
    assert!(n >= 2, "window must be at least 2");
    let pairs = window_pairs(n);
    let idx: BTreeMap<(i64, i64), usize> =
        pairs.iter().enumerate().map(|(p, &k)| (k, p)).collect();
    let mut rows = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            for k in -n..=n {
                let bound = (i + j)
                    .abs()
                    .max((j + k).abs())
                    .max((k + i).abs())
                    .max((i + j + k).abs());
                if bound > n {
                    continue;
                }
                let mut row = vec![QScalar::zero(); pairs.len()];
                let two_i = &q_power(i) + &QScalar::one();
                let two_j = &q_power(j) + &QScalar::one();
                let two_k = &q_power(k) + &QScalar::one();
                let c1 = &two_i * &(&q_integer(j) - &q_integer(k));
                let c2 = &two_k * &(&q_integer(i) - &q_integer(j));
                let c3 = &two_j * &(&q_integer(i) - &q_integer(k));
                row[idx[&(i, j + k)]] = &row[idx[&(i, j + k)]] + &c1;
                row[idx[&(i + j, k)]] = &row[idx[&(i + j, k)]] - &c2;
                row[idx[&(j, k + i)]] = &row[idx[&(j, k + i)]] - &c3;
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    LinearSystem {
        unknown_index: pairs,
        rows,
    }
}

/// Nullspace basis by reduced row echelon form with deterministic pivoting
/// (first nonzero column, rows in given order); each basis vector is scaled
/// so its first nonzero entry is 1.
fn nullspace(rows: &[Vec<QScalar>], ncols: usize) -> Vec<Vec<QScalar>> {
    let mut m: Vec<Vec<QScalar>> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].inv().expect("pivot is nonzero");
        for c in col..ncols {
            m[r][c] = &m[r][c] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in col..ncols {
                    m[i][c] = &m[i][c] - &(&f * &m[r][c]);
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![QScalar::zero(); ncols];
        v[free] = QScalar::one();
        for (row_i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -&m[row_i][free];
        }
        let lead = v
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .expect("basis vector is nonzero");
        let scale = lead.inv().expect("leading entry is nonzero");
        for c in &mut v {
            *c = &*c * &scale;
        }
        basis.push(v);
    }
    basis
}

/// Exact nullspace basis of a homogeneous system.
pub fn solve_homogeneous(sys: &LinearSystem) -> Vec<Vec<QScalar>> {
    nullspace(&sys.rows, sys.num_unknowns())
}

fn gauge_pairs(n: i64) -> Vec<(i64, i64)> {
    let mut g: Vec<(i64, i64)> = (-n..=n).filter(|&m| m != 0).map(|m| (0, m)).collect();
    g.push((1, -1));
    g
}

/// Intersect the solution span with the gauge psi(L_0, W_m) = 0 (m != 0) and
/// psi(L_1, W_{-1}) = 0, which removes exactly the coboundary directions;
/// returns a basis of the gauge-fixed space in window coordinates.
pub fn quotient_by_coboundaries(solutions: &[Vec<QScalar>], n: i64) -> Vec<Vec<QScalar>> {
    let pairs = window_pairs(n);
    if solutions.is_empty() {
        return Vec::new();
    }
    let ncols = pairs.len();
    for s in solutions {
        assert_eq!(s.len(), ncols, "solution vector length mismatch");
    }
    // one functional per gauge condition, acting on combination coefficients
    let mut functional_rows: Vec<Vec<QScalar>> = Vec::new();
    for gp in gauge_pairs(n) {
        let col = pairs.iter().position(|&p| p == gp).expect("gauge pair in window");
        functional_rows.push(solutions.iter().map(|s| s[col].clone()).collect());
    }
    let combos = nullspace(&functional_rows, solutions.len());
    let mut out = Vec::new();
    for a in combos {
        let mut v = vec![QScalar::zero(); ncols];
        for (t, coeff) in a.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for c in 0..ncols {
                v[c] = &v[c] + &(coeff * &solutions[t][c]);
            }
        }
        if let Some(lead) = v.iter().find(|c| !c.is_zero()).cloned() {
            let scale = lead.inv().expect("leading entry is nonzero");
            for c in &mut v {
                *c = &*c * &scale;
            }
            out.push(v);
        }
    }
    out
}

/// First entry where a gauge-fixed candidate disagrees with the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleMismatch {
    pub pair: (i64, i64),
    pub found: QScalar,
    pub expected: QScalar,
}

/// Outcome of comparing a gauge-fixed basis against the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocycleComparison {
    /// The space is one-dimensional and its generator is `multiple` times the
    /// closed-form table.
    Match { multiple: QScalar },
    Mismatch {
        dimension: usize,
        first_difference: Option<CocycleMismatch>,
    },
}

/// Compare a gauge-fixed basis with the closed-form table on the window.
pub fn compare_closed_form(normalized: &[Vec<QScalar>], n: i64) -> CocycleComparison {
    if normalized.len() != 1 {
        return CocycleComparison::Mismatch {
            dimension: normalized.len(),
            first_difference: None,
        };
    }
    let pairs = window_pairs(n);
    let g = &normalized[0];
    assert_eq!(g.len(), pairs.len(), "vector length mismatch");
    let closed: Vec<QScalar> = pairs
        .iter()
        .map(|&(i, j)| if i + j == 0 { central_coeff(i) } else { QScalar::zero() })
        .collect();
    let multiple = match pairs.iter().position(|&(i, j)| i + j == 0 && !central_coeff(i).is_zero())
    {
        Some(p) => match closed[p].inv() {
            Ok(inv) => &g[p] * &inv,
            Err(_) => unreachable!("reference entry is nonzero"),
        },
        None => QScalar::zero(),
    };
    for (p, pair) in pairs.iter().enumerate() {
        let expected = &multiple * &closed[p];
        if g[p] != expected {
            return CocycleComparison::Mismatch {
                dimension: 1,
                first_difference: Some(CocycleMismatch {
                    pair: *pair,
                    found: g[p].clone(),
                    expected,
                }),
            };
        }
    }
    CocycleComparison::Match { multiple }
}

/// The coboundary psi_chi(L_i, W_j) = ([i] - [j]) chi(W_{i+j}) in window
/// coordinates, for an arbitrary chi given by its values on W indices.
pub fn coboundary_vector(n: i64, chi: &dyn Fn(i64) -> QScalar) -> Vec<QScalar> {
    window_pairs(n)
        .iter()
        .map(|&(i, j)| &(&q_integer(i) - &q_integer(j)) * &chi(i + j))
        .collect()
}

/// The closed-form cocycle on generator pairs: central_coeff on the
/// antidiagonal for L-L and L-W, antisymmetric in the W-L orientation, zero
/// on W-W and against C.
pub fn psi_pair(a: LieGenerator, b: LieGenerator) -> QScalar {
    use LieGenerator::{C, L, W};
    match (a, b) {
        (L(i), L(j)) | (L(i), W(j)) if i + j == 0 => central_coeff(i),
        (W(i), L(j)) if i + j == 0 => -&central_coeff(j),
        (C, _) | (_, C) => QScalar::zero(),
        _ => QScalar::zero(),
    }
}

/// Bilinear extension of [`psi_pair`] to elements in the generator span.
pub fn psi_element(a: &AlgebraElement, b: &AlgebraElement) -> QScalar {
    let mut s = QScalar::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let p = psi_pair(monomial_as_lie(ma), monomial_as_lie(mb));
            if !p.is_zero() {
                s = &s + &(&(ca * cb) * &p);
            }
        }
    }
    s
}

fn cyclic_sum(u: LieGenerator, v: LieGenerator, w: LieGenerator) -> QScalar {
    let (eu, ev, ew) = (
        AlgebraElement::lie_generator(u),
        AlgebraElement::lie_generator(v),
        AlgebraElement::lie_generator(w),
    );
    let s1 = psi_element(&f_q(u), &lie_element_bracket(&ev, &ew));
    let s2 = psi_element(&f_q(w), &lie_element_bracket(&eu, &ev));
    let s3 = psi_element(&f_q(v), &lie_element_bracket(&ew, &eu));
    &(&s1 + &s2) + &s3
}

/// True iff the closed-form cocycle satisfies the twisted identity on the
/// triple, for both the (L_i, L_j, W_k) and (L_i, L_j, L_k) patterns.
pub fn check_cocycle_identity(i: i64, j: i64, k: i64) -> bool {
    use LieGenerator::{L, W};
    cyclic_sum(L(i), L(j), W(k)).is_zero() && cyclic_sum(L(i), L(j), L(k)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_pair_counts() {
        assert_eq!(window_pairs(2).len(), 19);
        assert_eq!(window_pairs(3).len(), 37);
        assert_eq!(window_pairs(4).len(), 61);
        let p = window_pairs(2);
        assert_eq!(&p[..4], &[(-2, 0), (-2, 1), (-2, 2), (-1, -1)]);
    }

    #[test]
    fn system_shapes() {
        let s2 = build_cocycle_system(2);
        assert_eq!(s2.num_unknowns(), 19);
        assert_eq!(s2.num_rows(), 44);
        let s3 = build_cocycle_system(3);
        assert_eq!(s3.num_unknowns(), 37);
        assert_eq!(s3.num_rows(), 130);
    }

    #[test]
    fn colliding_slot_row_cancels_to_zero() {
        // for (i, j, k) = (1, 1, -1) the first and third psi-slots coincide
        // and their coefficients cancel while the middle coefficient carries
        // [1]-[1] = 0, so no row is emitted for that triple
        let s = build_cocycle_system(3);
        let c1 = &(&q_power(1) + &QScalar::one()) * &(&q_integer(1) - &q_integer(-1));
        assert!(!c1.is_zero());
        let pos10 = s.position_of((1, 0)).unwrap();
        let pos2m1 = s.position_of((2, -1)).unwrap();
        for row in s.rows() {
            // no surviving row consists of that cancelled pattern
            assert!(
                row.iter().any(|c| !c.is_zero()),
                "identically zero row slipped through"
            );
        }
        // a genuinely three-slot row exists, e.g. (i, j, k) = (1, 2, -1)
        let threes = s
            .rows()
            .iter()
            .filter(|r| r.iter().filter(|c| !c.is_zero()).count() == 3)
            .count();
        assert!(threes > 0);
        let _ = (pos10, pos2m1);
    }

    #[test]
    fn closed_form_satisfies_every_row() {
        for n in 2..=4 {
            let s = build_cocycle_system(n);
            let v: Vec<QScalar> = s
                .unknowns()
                .iter()
                .map(|&(i, j)| if i + j == 0 { central_coeff(i) } else { QScalar::zero() })
                .collect();
            for r in 0..s.num_rows() {
                assert!(s.residual(r, &v).is_zero(), "row {} at N={}", r, n);
            }
        }
    }

    #[test]
    fn nullspace_dimensions_and_substitution() {
        for (n, expected) in [(2i64, 6usize), (3, 8)] {
            let s = build_cocycle_system(n);
            let basis = solve_homogeneous(&s);
            assert_eq!(basis.len(), expected, "N={}", n);
            for v in &basis {
                for r in 0..s.num_rows() {
                    assert!(s.residual(r, v).is_zero());
                }
            }
        }
    }

    #[test]
    fn rows_force_psi_zero_zero_to_vanish() {
        let s = build_cocycle_system(2);
        let basis = solve_homogeneous(&s);
        let p00 = s.position_of((0, 0)).unwrap();
        for v in &basis {
            assert!(v[p00].is_zero());
        }
    }

    #[test]
    fn simple_nullspace_examples() {
        // x - y = 0
        let sys = LinearSystem {
            unknown_index: vec![(0, 0), (0, 1)],
            rows: vec![vec![QScalar::one(), -&QScalar::one()]],
        };
        let b = solve_homogeneous(&sys);
        assert_eq!(b, vec![vec![QScalar::one(), QScalar::one()]]);
        // no rows, 3 unknowns
        let sys = LinearSystem {
            unknown_index: vec![(0, 0), (0, 1), (0, 2)],
            rows: vec![],
        };
        assert_eq!(solve_homogeneous(&sys).len(), 3);
    }

    #[test]
    fn gauge_fixing_leaves_the_closed_form_line() {
        for n in [2i64, 3] {
            let s = build_cocycle_system(n);
            let basis = solve_homogeneous(&s);
            let fixed = quotient_by_coboundaries(&basis, n);
            assert_eq!(fixed.len(), 1, "N={}", n);
            match compare_closed_form(&fixed, n) {
                CocycleComparison::Match { multiple } => {
                    // the generator is scaled to leading entry 1 at (-N, N)
                    assert_eq!(&multiple * &central_coeff(-n), QScalar::one());
                }
                other => panic!("expected match at N={}, got {:?}", n, other),
            }
        }
    }

    #[test]
    fn renormalized_generator_equals_closed_form_exactly() {
        let n = 2i64;
        let s = build_cocycle_system(n);
        let fixed = quotient_by_coboundaries(&solve_homogeneous(&s), n);
        let pairs = window_pairs(n);
        let g = &fixed[0];
        let p22 = pairs.iter().position(|&p| p == (2, -2)).unwrap();
        let scale = &central_coeff(2) * &g[p22].inv().unwrap();
        for (p, &(i, j)) in pairs.iter().enumerate() {
            let expected = if i + j == 0 { central_coeff(i) } else { QScalar::zero() };
            assert_eq!(&g[p] * &scale, expected, "entry ({}, {})", i, j);
        }
    }

    #[test]
    fn coboundaries_are_solutions_and_gauge_to_zero() {
        let n = 2i64;
        let s = build_cocycle_system(n);
        let chi = |m: i64| QScalar::from_int(m + 2);
        let v = coboundary_vector(n, &chi);
        assert!(v.iter().any(|c| !c.is_zero()));
        for r in 0..s.num_rows() {
            assert!(s.residual(r, &v).is_zero(), "coboundary fails row {}", r);
        }
        assert!(quotient_by_coboundaries(&[v], n).is_empty());
        let zero = vec![QScalar::zero(); window_pairs(n).len()];
        assert!(quotient_by_coboundaries(&[zero], n).is_empty());
    }

    #[test]
    fn compare_mismatch_reports() {
        assert_eq!(
            compare_closed_form(&[], 2),
            CocycleComparison::Mismatch {
                dimension: 0,
                first_difference: None
            }
        );
        // poison one off-antidiagonal entry of the true generator
        let n = 3i64;
        let s = build_cocycle_system(n);
        let mut fixed = quotient_by_coboundaries(&solve_homogeneous(&s), n);
        let p21 = window_pairs(n).iter().position(|&p| p == (2, 1)).unwrap();
        fixed[0][p21] = QScalar::one();
        match compare_closed_form(&fixed, n) {
            CocycleComparison::Mismatch {
                dimension: 1,
                first_difference: Some(d),
            } => {
                assert_eq!(d.pair, (2, 1));
                assert_eq!(d.found, QScalar::one());
                assert!(d.expected.is_zero());
            }
            other => panic!("expected mismatch at (2, 1), got {:?}", other),
        }
    }

    #[test]
    fn psi_orientation_convention() {
        use LieGenerator::{L, W};
        for i in -4..=4 {
            for j in -4..=4 {
                assert_eq!(psi_pair(W(j), L(i)), -&psi_pair(L(i), W(j)));
            }
        }
        assert_eq!(psi_pair(L(2), W(-2)), central_coeff(2));
        assert!(psi_pair(L(2), W(1)).is_zero());
        assert!(psi_pair(LieGenerator::C, L(0)).is_zero());
    }

    #[test]
    fn identity_holds_on_window() {
        assert!(check_cocycle_identity(2, -1, -1));
        assert!(check_cocycle_identity(0, 0, 0));
        assert!(check_cocycle_identity(3, -2, -1));
        for i in -3..=3 {
            for j in -3..=3 {
                for k in -3..=3 {
                    assert!(check_cocycle_identity(i, j, k), "({}, {}, {})", i, j, k);
                }
            }
        }
    }

    #[test]
    fn table_round_trip_and_orientation() {
        let t = CocycleTable::closed_form(3);
        assert_eq!(t.value_lw(2, -2), central_coeff(2));
        assert_eq!(t.value_wl(-2, 2), -&central_coeff(2));
        assert!(t.value_lw(1, -1).is_zero());
        assert!(t.value_lw(2, 1).is_zero());
        let pairs = window_pairs(3);
        let v: Vec<QScalar> = pairs
            .iter()
            .map(|&(i, j)| if i + j == 0 { central_coeff(i) } else { QScalar::zero() })
            .collect();
        let u = CocycleTable::from_vector(3, &pairs, &v);
        assert_eq!(u, t);
    }
}
