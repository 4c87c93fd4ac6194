//! Builders producing verified hypergroups: double-coset algebras over a
//! finite group, group algebras with the diagonal coproduct, compressions by
//! group-like projections, and the four-dimensional presentation fixture.
//!
//! Every builder runs the complete verification pipeline before returning,
//! so a successfully constructed object satisfies every law in
//! [`crate::checks`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgebraError, StructureAlgebra};
use crate::checks;
use crate::dual::{self, DualError};
use crate::group::{FiniteGroup, GroupError};
use crate::hypergroup::{HypergroupData, PipelineError, QuantumHypergroup};
use crate::linalg::{basis, dot, proportionality, scale_vec, zeros, Matrix, Tensor2, Vector};
use crate::report::CheckReport;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub enum BuildError {
    Group(GroupError),
    Algebra(AlgebraError),
    Validation(PipelineError),
    Dual(DualError),
    /// The double-coset coproduct evaluated differently on two pairs of the
    /// same coset pair; the input table cannot come from a subgroup.
    CoproductNotConstant {
        coset_pair: (usize, usize),
    },
    NotAProjection,
    NotGroupLike,
    /// An element that should lie in the compressed subspace does not.
    OutsideCompression,
    /// The presentation did not determine a one-dimensional integral space.
    IntegralSpaceDimension(usize),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Group(e) => write!(f, "{e}"),
            BuildError::Algebra(e) => write!(f, "{e}"),
            BuildError::Validation(e) => write!(f, "{e}"),
            BuildError::Dual(e) => write!(f, "{e}"),
            BuildError::CoproductNotConstant { coset_pair: (i, j) } => write!(
                f,
                "coproduct is not constant on double-coset pair ({i}, {j})"
            ),
            BuildError::NotAProjection => write!(f, "element is not a self-adjoint idempotent"),
            BuildError::NotGroupLike => write!(f, "projection fails Δ(u)(1⊗u) = u⊗u"),
            BuildError::OutsideCompression => {
                write!(f, "element does not lie in the compressed subspace")
            }
            BuildError::IntegralSpaceDimension(d) => {
                write!(f, "integral space has dimension {d}, expected 1")
            }
        }
    }
}

impl From<GroupError> for BuildError {
    fn from(e: GroupError) -> Self {
        BuildError::Group(e)
    }
}

impl From<AlgebraError> for BuildError {
    fn from(e: AlgebraError) -> Self {
        BuildError::Algebra(e)
    }
}

impl From<PipelineError> for BuildError {
    fn from(e: PipelineError) -> Self {
        BuildError::Validation(e)
    }
}

/// Functions constant on double cosets `HgH`, with pointwise product,
/// `Δ(f)(p,q) = (1/|H|)·Σ_h f(phq)`, `ε(f) = f(e)`, `φ(f) = Σ_p f(p)` and
/// pointwise conjugation as the involution. The antipode `S(f)(p) = f(p⁻¹)`
/// is passed to the pipeline as a cross-check, not trusted.
pub fn double_coset_hypergroup(
    group: &FiniteGroup,
    subgroup: &[usize],
) -> Result<QuantumHypergroup, BuildError> {
    group.subgroup_check(subgroup)?;
    let cosets = group.double_cosets(subgroup);
    let k = cosets.len();
    let mut coset_of = vec![0usize; group.order()];
    for (m, coset) in cosets.iter().enumerate() {
        for &x in coset {
            coset_of[x] = m;
        }
    }

    let labels: Vec<String> = cosets
        .iter()
        .map(|c| format!("D({})", group.labels()[c[0]]))
        .collect();
    // Pointwise product of indicator functions.
    let mult: Vec<Vec<Vector>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { basis(k, i) } else { zeros(k) })
                .collect()
        })
        .collect();
    let alg = StructureAlgebra::new(labels, mult, Some(Matrix::identity(k)))?;

    // Δ(e_m)(p, q) = #{h in H : p·h·q in D_m} / |H|, evaluated at one
    // representative pair and then verified constant over every pair.
    let h_count = Scalar::from_int(subgroup.len() as i64);
    let coefficient = |m: usize, p: usize, q: usize| -> Scalar {
        let hits = subgroup
            .iter()
            .filter(|&&h| coset_of[group.mul(group.mul(p, h), q)] == m)
            .count();
        Scalar::from_int(hits as i64).checked_div(&h_count).unwrap()
    };
    let mut comult = Matrix::zero(k * k, k);
    for m in 0..k {
        for i in 0..k {
            for j in 0..k {
                let value = coefficient(m, cosets[i][0], cosets[j][0]);
                for &p in &cosets[i] {
                    for &q in &cosets[j] {
                        if coefficient(m, p, q) != value {
                            return Err(BuildError::CoproductNotConstant { coset_pair: (i, j) });
                        }
                    }
                }
                comult[(i * k + j, m)] = value;
            }
        }
    }

    let counit: Vector = (0..k)
        .map(|m| {
            if m == coset_of[group.identity()] {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect();
    let integral: Vector = (0..k)
        .map(|m| Scalar::from_int(cosets[m].len() as i64))
        .collect();
    // S(e_m) is the indicator of the inverse coset.
    let mut antipode = Matrix::zero(k, k);
    for m in 0..k {
        antipode[(coset_of[group.inv(cosets[m][0])], m)] = Scalar::one();
    }

    let data = HypergroupData::new(alg, comult, counit, integral)?;
    Ok(data.derive(Some(&antipode))?)
}

/// `K(G)`: the function algebra of a finite group, i.e. the double-coset
/// construction for the trivial subgroup.
pub fn function_algebra(group: &FiniteGroup) -> Result<QuantumHypergroup, BuildError> {
    double_coset_hypergroup(group, &[group.identity()])
}

/// The group algebra with convolution product, diagonal coproduct
/// `Δ(λ_p) = λ_p⊗λ_p`, `ε(λ_p) = 1`, `φ(λ_p) = [p = e]` and involution
/// `λ_p* = λ_{p⁻¹}`. The antipode `S(λ_p) = λ_{p⁻¹}` is cross-checked.
pub fn group_algebra_hopf(group: &FiniteGroup) -> Result<QuantumHypergroup, BuildError> {
    let n = group.order();
    let labels: Vec<String> = group.labels().iter().map(|l| format!("λ({l})")).collect();
    let mult: Vec<Vec<Vector>> = (0..n)
        .map(|i| (0..n).map(|j| basis(n, group.mul(i, j))).collect())
        .collect();
    let mut star = Matrix::zero(n, n);
    let mut antipode = Matrix::zero(n, n);
    for p in 0..n {
        star[(group.inv(p), p)] = Scalar::one();
        antipode[(group.inv(p), p)] = Scalar::one();
    }
    let alg = StructureAlgebra::new(labels, mult, Some(star))?;
    let mut comult = Matrix::zero(n * n, n);
    for p in 0..n {
        comult[(p * n + p, p)] = Scalar::one();
    }
    let counit = vec![Scalar::one(); n];
    let integral: Vector = (0..n)
        .map(|p| {
            if p == group.identity() {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect();
    let data = HypergroupData::new(alg, comult, counit, integral)?;
    Ok(data.derive(Some(&antipode))?)
}

/// `(1/|H|)·Σ_{h∈H} λ_h` in the group-algebra basis. Requires a genuine
/// subgroup; the projection laws are asserted against `galg`.
pub fn hecke_unit(
    galg: &QuantumHypergroup,
    group: &FiniteGroup,
    subgroup: &[usize],
) -> Result<Vector, BuildError> {
    group.subgroup_check(subgroup)?;
    assert_eq!(galg.dim(), group.order(), "group algebra basis mismatch");
    let inv_order = Scalar::from_int(subgroup.len() as i64).inv();
    let mut u = zeros(group.order());
    for &h in subgroup {
        u[h] = inv_order.clone();
    }
    check_group_like_projection(galg, &u)?;
    Ok(u)
}

/// `u² = u`, `u* = u` when a star is present, and `Δ(u)(1⊗u) = u⊗u`.
pub fn check_group_like_projection(h: &QuantumHypergroup, u: &[Scalar]) -> Result<(), BuildError> {
    if crate::linalg::is_zero_vec(u) || h.multiply(u, u) != u {
        return Err(BuildError::NotAProjection);
    }
    if h.algebra().has_star() && h.algebra().apply_star(u)? != u {
        return Err(BuildError::NotAProjection);
    }
    let du = h.comult_apply(u);
    let right = Tensor2::outer(h.unit(), u);
    if h.algebra().tensor_multiply(&du, &right) != Tensor2::outer(u, u) {
        return Err(BuildError::NotGroupLike);
    }
    Ok(())
}

/// Compression by a group-like projection, together with the embedding
/// matrix whose columns express the compressed basis inside the source.
pub fn compress_with_embedding(
    source: &QuantumHypergroup,
    u: &[Scalar],
) -> Result<(QuantumHypergroup, Matrix), BuildError> {
    check_group_like_projection(source, u)?;
    let n = source.dim();
    // Column space of x ↦ u·x·u, basis from echelon pivots.
    let compressed_cols: Vec<Vector> = (0..n)
        .map(|i| source.multiply(u, &source.multiply(&basis(n, i), u)))
        .collect();
    let image = Matrix::from_columns(&compressed_cols);
    let pivots = image.column_space_pivots();
    let k = pivots.len();
    let embedding = Matrix::from_columns(
        &pivots
            .iter()
            .map(|&c| compressed_cols[c].clone())
            .collect::<Vec<_>>(),
    );
    let coords = |w: &[Scalar]| -> Result<Vector, BuildError> {
        embedding.solve(w).ok_or(BuildError::OutsideCompression)
    };

    let labels: Vec<String> = pivots
        .iter()
        .map(|&c| format!("π({})", source.algebra().labels()[c]))
        .collect();
    let mut mult = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let prod = source.multiply(&embedding.column(i), &embedding.column(j));
            row.push(coords(&prod)?);
        }
        mult.push(row);
    }
    let star = if source.algebra().has_star() {
        // Columns are coordinates of (basis element)*, so the compressed
        // star is again of the form K·conj.
        let mut cols = Vec::with_capacity(k);
        for i in 0..k {
            let starred = source.algebra().apply_star(&embedding.column(i))?;
            cols.push(coords(&starred)?);
        }
        Some(Matrix::from_columns(&cols))
    } else {
        None
    };
    let alg = StructureAlgebra::new(labels, mult, star)?;

    // Compressed coproduct: b ↦ (u⊗u)Δ(b)(u⊗u) in the basis v_i⊗v_j.
    let uu = Tensor2::outer(u, u);
    let tensor_basis = embedding.kron(&embedding);
    let mut comult = Matrix::zero(k * k, k);
    for j in 0..k {
        let db = source.comult_apply(&embedding.column(j));
        let squeezed = source
            .algebra()
            .tensor_multiply(&uu, &source.algebra().tensor_multiply(&db, &uu));
        let d = tensor_basis
            .solve(&squeezed.data)
            .ok_or(BuildError::OutsideCompression)?;
        for r in 0..k * k {
            comult[(r, j)] = d[r].clone();
        }
    }

    let counit: Vector = (0..k)
        .map(|i| dot(source.counit(), &embedding.column(i)))
        .collect();
    let integral: Vector = (0..k)
        .map(|i| dot(source.left_integral(), &embedding.column(i)))
        .collect();
    let data = HypergroupData::new(alg, comult, counit, integral)?;
    let hg = data.derive(None)?;
    Ok((hg, embedding))
}

/// Compression `uBu` with coproduct `(u⊗u)Δ(·)(u⊗u)` and counit, integral
/// and involution restricted from the source; the antipode is re-derived by
/// the pipeline.
pub fn group_like_projection_compression(
    source: &QuantumHypergroup,
    u: &[Scalar],
) -> Result<QuantumHypergroup, BuildError> {
    compress_with_embedding(source, u).map(|(hg, _)| hg)
}

/// The four-dimensional Hopf algebra on `1, g, x, gx` with `g² = 1`,
/// `x² = 0`, `xg = -gx`, `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`. Structure
/// constants, the coproduct of `gx` and the integral are all derived from
/// the presentation; nothing is hard-coded.
pub fn sweedler_fixture() -> Result<QuantumHypergroup, BuildError> {
    let s = Scalar::from_int;
    let labels: Vec<String> = ["1", "g", "x", "gx"]
        .iter()
        .map(|l| l.to_string())
        .collect();
    let e = |i: usize| basis(4, i);
    let neg = |v: Vector| scale_vec(&s(-1), &v);
    let mult: Vec<Vec<Vector>> = vec![
        vec![e(0), e(1), e(2), e(3)],
        vec![e(1), e(0), e(3), e(2)],
        vec![e(2), neg(e(3)), zeros(4), zeros(4)],
        vec![e(3), neg(e(2)), zeros(4), zeros(4)],
    ];
    let alg = StructureAlgebra::new(labels, mult, None)?;

    let d_one = Tensor2::outer(&e(0), &e(0));
    let d_g = Tensor2::outer(&e(1), &e(1));
    let mut d_x = Tensor2::outer(&e(2), &e(0));
    let gx_term = Tensor2::outer(&e(1), &e(2));
    for (a, b) in d_x.data.iter_mut().zip(&gx_term.data) {
        *a = &*a + b;
    }
    // Δ is multiplicative for this fixture, so Δ(gx) = Δ(g)·Δ(x).
    let d_gx = alg.tensor_multiply(&d_g, &d_x);
    let comult = Matrix::from_columns(&[d_one.data, d_g.data, d_x.data, d_gx.data]);
    let counit = vec![s(1), s(1), s(0), s(0)];

    // The integral comes out of the invariance equations, not a constant.
    let probe = HypergroupData::new(alg.clone(), comult.clone(), counit.clone(), zeros(4))?;
    let space = probe.integral_space(crate::hypergroup::Side::Left);
    if space.len() != 1 {
        return Err(BuildError::IntegralSpaceDimension(space.len()));
    }
    let data = HypergroupData::new(alg, comult, counit, space[0].clone())?;
    Ok(data.derive(None)?)
}

/// The convolution model of the dual of a double-coset hypergroup: the dual
/// product must agree with ordinary convolution of coset indicator
/// functions, and the summation pairing `ω_i ↦ Σ_{p∈D_i} λ_p` must be an
/// isomorphism onto the Hecke compression of the group algebra.
pub fn convolution_duality_check(
    group: &FiniteGroup,
    subgroup: &[usize],
) -> Result<CheckReport, BuildError> {
    let adc = double_coset_hypergroup(group, subgroup)?;
    let pkg = dual::build_dual(&adc).map_err(BuildError::Dual)?;
    let galg = group_algebra_hopf(group)?;
    let u = hecke_unit(&galg, group, subgroup)?;
    let (comp, embedding) = compress_with_embedding(&galg, &u)?;

    let cosets = group.double_cosets(subgroup);
    let k = cosets.len();
    let n = group.order();
    let mut coset_of = vec![0usize; n];
    for (m, coset) in cosets.iter().enumerate() {
        for &x in coset {
            coset_of[x] = m;
        }
    }
    let indicator = |m: usize| -> Vector {
        let mut v = zeros(n);
        for &x in &cosets[m] {
            v[x] = Scalar::one();
        }
        v
    };

    let mut report = CheckReport::new();

    // Dual structure constants against the raw Cayley-table convolution.
    let dual_alg = pkg.dual().algebra();
    'outer: for i in 0..k {
        for j in 0..k {
            let conv = group_convolution(group, &indicator(i), &indicator(j));
            if !constant_on_cosets(&conv, &cosets) {
                report.record(&checks::DUAL_CONVOLUTION_PRODUCT, false, || {
                    format!("convolution not coset-constant at pair ({i}, {j})")
                });
                break 'outer;
            }
            let in_basis: Vector = (0..k).map(|m| conv[cosets[m][0]].clone()).collect();
            if dual_alg.basis_product(i, j) != &in_basis {
                report.record(&checks::DUAL_CONVOLUTION_PRODUCT, false, || {
                    format!("dual product differs from convolution at pair ({i}, {j})")
                });
                break 'outer;
            }
            if i == k - 1 && j == k - 1 {
                report.record(&checks::DUAL_CONVOLUTION_PRODUCT, true, String::new);
            }
        }
    }

    // The summation pairing sends ω_m to the indicator of D_m inside uBu.
    let mut t_cols = Vec::with_capacity(k);
    for m in 0..k {
        match embedding.solve(&indicator(m)) {
            Some(c) => t_cols.push(c),
            None => {
                report.record(&checks::COMPRESSION_ISO_LINEAR, false, || {
                    format!("indicator of coset {m} lies outside uBu")
                });
                return Ok(report);
            }
        }
    }
    let t = Matrix::from_columns(&t_cols);
    report.record(
        &checks::COMPRESSION_ISO_LINEAR,
        t.inverse().is_some(),
        || String::from("indicator map is singular"),
    );
    if !report.passed() {
        return Ok(report);
    }

    let alg_bad = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .find(|&(i, j)| {
            comp.multiply(&t.column(i), &t.column(j)) != t.mul_vec(dual_alg.basis_product(i, j))
        });
    report.record(&checks::COMPRESSION_ISO_ALGEBRA, alg_bad.is_none(), || {
        format!("products differ at {:?}", alg_bad.unwrap())
    });

    let lhs = t.kron(&t).mul(pkg.dual().comult_matrix());
    let rhs = comp.comult_matrix().mul(&t);
    report.record(&checks::COMPRESSION_ISO_COMULT, lhs == rhs, || {
        String::from("coproducts differ through the indicator map")
    });

    report.record(
        &checks::COMPRESSION_ISO_COUNIT,
        t.row_apply(comp.counit()) == *pkg.dual().counit(),
        || String::from("counits differ through the indicator map"),
    );

    let mapped = t.row_apply(comp.left_integral());
    let integral_ok = matches!(
        proportionality(&mapped, pkg.dual().left_integral()),
        Some(c) if !c.is_zero()
    );
    report.record(&checks::COMPRESSION_ISO_INTEGRAL, integral_ok, || {
        String::from("integrals are not proportional through the indicator map")
    });

    report.record(
        &checks::COMPRESSION_ISO_ANTIPODE,
        comp.antipode().mul(&t) == t.mul(pkg.dual().antipode()),
        || String::from("antipodes differ through the indicator map"),
    );

    match (
        comp.algebra().star_matrix(),
        pkg.dual().algebra().star_matrix(),
    ) {
        (Some(kc), Some(kd)) => {
            report.record(
                &checks::COMPRESSION_ISO_STAR,
                kc.mul(&t.conj()) == t.mul(kd),
                || String::from("involutions differ through the indicator map"),
            );
        }
        _ => report.record(&checks::COMPRESSION_ISO_STAR, false, || {
            String::from("an involution is missing")
        }),
    }

    Ok(report)
}

/// Convolution of two vectors in the group algebra of `group`; a test oracle
/// used by the duality checks and kept independent of the structure tables.
pub fn group_convolution(group: &FiniteGroup, a: &[Scalar], b: &[Scalar]) -> Vector {
    let n = group.order();
    assert_eq!(a.len(), n, "convolution operand length");
    assert_eq!(b.len(), n, "convolution operand length");
    let mut out = zeros(n);
    for p in 0..n {
        if a[p].is_zero() {
            continue;
        }
        for q in 0..n {
            if b[q].is_zero() {
                continue;
            }
            let r = group.mul(p, q);
            out[r] = &out[r] + &(&a[p] * &b[q]);
        }
    }
    out
}

/// True iff every coordinate of `v` is constant on each listed coset.
pub fn constant_on_cosets(v: &[Scalar], cosets: &[Vec<usize>]) -> bool {
    cosets.iter().all(|coset| {
        let first = &v[coset[0]];
        coset.iter().all(|&x| &v[x] == first)
    })
}
