//! Registry of the exact identities the engine verifies.
//!
//! Each check has a stable kebab-case name (usable to pin individual laws in
//! CI) and the law itself, written in operator form: `Δ` comultiplication,
//! `ε` counit, `φ`/`ψ` left/right integral, `S` antipode, `δ` modular
//! element, `σ`/`σ'` modular automorphisms, `τ` scaling constant, `ζ` the
//! tensor flip, `*` the involution and `m` the multiplication map. Hatted
//! symbols are the corresponding dual objects, `Γ` the bidual isomorphism,
//! `P` the pairing and `▸`/`◂` the module actions.

#[derive(Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub law: &'static str,
}

macro_rules! checks {
    ($($ident:ident => ($name:literal, $law:literal);)*) => {
        $(pub static $ident: Check = Check { name: $name, law: $law };)*
        /// Every check, in pipeline order.
        pub static ALL: &[&Check] = &[$(&$ident),*];
    };
}

checks! {
    // Structure-algebra layer.
    ASSOCIATIVITY => ("associativity", "(a·b)·c = a·(b·c)");
    NONDEGENERATE_PRODUCT => ("nondegenerate-product", "a·A = 0 or A·a = 0 implies a = 0");
    UNIT_EXISTS => ("unit-exists", "there is u with u·a = a = a·u");
    STAR_INVOLUTIVE => ("star-involutive", "(a*)* = a");
    STAR_ANTIMULTIPLICATIVE => ("star-antimultiplicative", "(a·b)* = b*·a*");
    STAR_CONJUGATE_LINEAR => ("star-conjugate-linear", "(λa)* = conj(λ)a*");

    // Comultiplication, counit, integral axioms.
    COASSOCIATIVITY => ("coassociativity", "(Δ⊗id)∘Δ = (id⊗Δ)∘Δ");
    COMULT_REGULAR => ("comult-regular", "Δ(a)(b⊗1) and (1⊗a)Δ(b) stay in A⊗A");
    COUNIT_LEFT => ("counit-left", "(ε⊗id)∘Δ = id");
    COUNIT_RIGHT => ("counit-right", "(id⊗ε)∘Δ = id");
    COUNIT_MULTIPLICATIVE => ("counit-multiplicative", "ε(a·b) = ε(a)ε(b)");
    COUNIT_UNITAL => ("counit-unital", "ε(1) = 1");
    COUNIT_UNIQUE => ("counit-unique", "(id⊗ε')∘Δ = id has exactly one solution");
    INTEGRAL_NONZERO => ("integral-nonzero", "φ ≠ 0");
    INTEGRAL_LEFT_INVARIANT => ("integral-left-invariant", "(id⊗φ)Δ(a) = φ(a)1");
    INTEGRAL_UNIQUE => ("integral-unique", "left-invariant functionals form one line");
    INTEGRAL_FAITHFUL => ("integral-faithful", "Gram matrix φ(e_i·e_j) is invertible");
    COMULT_STAR_MAP => ("comult-star-map", "Δ(a*) = Δ(a)*");
    INTEGRAL_SELF_ADJOINT => ("integral-self-adjoint", "φ(a*) = conj(φ(a))");

    // Antipode derivation.
    ANTIPODE_SPAN => ("antipode-span", "elements (id⊗φ)(Δ(a)(1⊗b)) span A");
    ANTIPODE_CONSISTENT => ("antipode-consistent", "S((id⊗φ)(Δ(a)(1⊗b))) = (id⊗φ)((1⊗a)Δ(b)) is solvable");
    ANTIPODE_BIJECTIVE => ("antipode-bijective", "S is invertible");
    ANTIPODE_ANTIHOMOMORPHISM => ("antipode-antihomomorphism", "S(a·b) = S(b)·S(a)");
    ANTIPODE_DECLARED => ("antipode-declared", "declared antipode equals the derived one");
    ANTIPODE_STAR_IDENTITY => ("antipode-star-identity", "S(S(a)*)* = a");

    // Right integral.
    RIGHT_INTEGRAL_INVARIANT => ("right-integral-invariant", "(ψ⊗id)Δ(a) = ψ(a)1 for ψ = φ∘S");
    RIGHT_INTEGRAL_FAITHFUL => ("right-integral-faithful", "Gram matrix ψ(e_i·e_j) is invertible");
    ANTIPODE_MIRRORED => ("antipode-mirrored", "S((ψ⊗id)((b⊗1)Δ(a))) = (ψ⊗id)(Δ(b)(a⊗1))");

    // Modular element.
    MODULAR_CONSISTENT => ("modular-consistent", "(φ⊗id)Δ(a) = φ(a)δ for a single δ");
    MODULAR_INVERTIBLE => ("modular-invertible", "δ is invertible");
    MODULAR_RIGHT_SLICE => ("modular-right-slice", "(id⊗ψ)Δ(a) = ψ(a)δ⁻¹");
    MODULAR_PHI_S => ("modular-phi-s", "φ(S(a)) = φ(a·δ)");
    MODULAR_COUNIT => ("modular-counit", "ε(δ) = 1");
    MODULAR_ANTIPODE => ("modular-antipode", "S(δ) = δ⁻¹");
    MODULAR_STAR => ("modular-star", "δ* = δ");

    // Modular automorphisms and scaling constant.
    SIGMA_DEFINING => ("sigma-defining", "φ(a·b) = φ(b·σ(a))");
    SIGMA_AUTOMORPHISM => ("sigma-automorphism", "σ is a bijective algebra homomorphism");
    SIGMA_INVARIANCE => ("sigma-invariance", "φ∘σ = φ");
    SIGMA_PRIME_DEFINING => ("sigma-prime-defining", "ψ(a·b) = ψ(b·σ'(a))");
    SIGMA_PRIME_AUTOMORPHISM => ("sigma-prime-automorphism", "σ' is a bijective algebra homomorphism");
    SIGMA_PRIME_INVARIANCE => ("sigma-prime-invariance", "ψ∘σ' = ψ");
    SCALING_CONSISTENT => ("scaling-consistent", "φ∘S² = τφ for a single scalar τ");
    SCALING_MODULUS => ("scaling-modulus", "τ·conj(τ) = 1");

    // Structural relation ledger.
    ANTIPODE_COUNIT => ("antipode-counit", "ε∘S = ε");
    ANTIPODE_FLIPS_COMULT => ("antipode-flips-comult", "Δ∘S = ζ∘(S⊗S)∘Δ");
    SIGMA_SANDWICH => ("sigma-sandwich", "σ∘S∘σ' = S");
    SIGMA_PRIME_CONJUGATION => ("sigma-prime-conjugation", "σ'(a) = δ·σ(a)·δ⁻¹");
    SIGMA_SCALES_DELTA => ("sigma-scales-delta", "σ(δ) = δ/τ");
    SIGMA_PRIME_SCALES_DELTA => ("sigma-prime-scales-delta", "σ'(δ) = δ/τ");
    SIGMAS_COMMUTE => ("sigmas-commute", "σ∘σ' = σ'∘σ");
    SIGMA_COMMUTES_S2 => ("sigma-commutes-s2", "σ∘S² = S²∘σ");
    SIGMA_PRIME_COMMUTES_S2 => ("sigma-prime-commutes-s2", "σ'∘S² = S²∘σ'");
    COMULT_SIGMA_TWIST => ("comult-sigma-twist", "Δ∘σ = (S²⊗σ)∘Δ");
    COMULT_SIGMA_PRIME_TWIST => ("comult-sigma-prime-twist", "Δ∘σ' = (σ'⊗S⁻²)∘Δ");
    COMULT_S2_TWIST => ("comult-s2-twist", "Δ∘S² = (σ⊗σ'⁻¹)∘Δ");

    // Co-integrals, type, Hopf dichotomy, star suite.
    COINTEGRAL_NONVANISHING => ("cointegral-nonvanishing", "φ(h) ≠ 0 for a non-zero left co-integral h");
    FINITE_TYPE => ("finite-type", "finite dimension gives compact and discrete type");
    HOPF_DICHOTOMY => ("hopf-dichotomy", "Δ multiplicative implies m((S⊗id)(Δ(x)(1⊗y))) = ε(x)y and m((id⊗S)((x⊗1)Δ(y))) = ε(y)x");
    COUNIT_STAR_HOMOMORPHISM => ("counit-star-homomorphism", "ε(a*) = conj(ε(a))");

    // Dual construction.
    PAIRING_INVERTIBLE => ("pairing-invertible", "pairing matrix P is invertible");
    DUAL_PIPELINE => ("dual-pipeline", "the dual passes the full verification pipeline");
    DUAL_ANTIPODE_TRANSPOSE => ("dual-antipode-transpose", "derived Ŝ equals ω ↦ ω∘S");
    DUAL_UNIT_IS_COUNIT => ("dual-unit-is-counit", "unit of Â equals ε as a functional");
    DUAL_PRODUCT_PHI_RIGHT => ("dual-product-phi-right", "ω·φ(·a) = φ(·b), b = ((ω∘S⁻¹)⊗id)Δ(a)");
    DUAL_PRODUCT_PHI_LEFT => ("dual-product-phi-left", "ω·φ(a·) = φ(c·), c = ((ω∘S)⊗id)Δ(a)");
    DUAL_PRODUCT_PSI_RIGHT => ("dual-product-psi-right", "ψ(·a)·ω = ψ(·d), d = (id⊗(ω∘S))Δ(a)");
    DUAL_PRODUCT_PSI_LEFT => ("dual-product-psi-left", "ψ(a·)·ω = ψ(e·), e = (id⊗(ω∘S⁻¹))Δ(a)");
    DUAL_COMULT_SLICE_LEFT => ("dual-comult-slice-left", "⟨(ω₁⊗1)Δ̂(ω₂), x⊗y⟩ = ⟨ω₁⊗ω₂, Δ(x)(1⊗y)⟩");
    DUAL_COMULT_SLICE_RIGHT => ("dual-comult-slice-right", "⟨Δ̂(ω₁)(1⊗ω₂), x⊗y⟩ = ⟨ω₁⊗ω₂, (x⊗1)Δ(y)⟩");
    ACTION_COMPATIBILITY => ("action-compatibility", "⟨ω', ω▸a⟩ = ⟨ω'ω, a⟩ and ⟨ω', a◂ω⟩ = ⟨ωω', a⟩");

    // Biduality.
    BIDUAL_BIJECTIVE => ("bidual-bijective", "Γ is a linear isomorphism");
    BIDUAL_MULTIPLICATIVE => ("bidual-multiplicative", "Γ(a·b) = Γ(a)·Γ(b)");
    BIDUAL_COMULT => ("bidual-comult", "(Γ⊗Γ)∘Δ = Δ̂̂∘Γ");
    BIDUAL_COUNIT => ("bidual-counit", "ε̂̂∘Γ = ε");
    BIDUAL_ANTIPODE => ("bidual-antipode", "Ŝ̂∘Γ = Γ∘S");
    BIDUAL_INTEGRAL => ("bidual-integral", "φ̂̂∘Γ = φ");
    BIDUAL_STAR => ("bidual-star", "Γ(a*) = Γ(a)*");

    // Dual data formulas.
    DUAL_MODULAR_FORMULA => ("dual-modular-formula", "δ̂ = ε∘σ⁻¹ = ε∘σ'⁻¹");
    DUAL_MODULAR_INVERSE_FORMULA => ("dual-modular-inverse-formula", "δ̂⁻¹ = ε∘σ = ε∘σ'");
    DUAL_SIGMA_FORMULA => ("dual-sigma-formula", "⟨σ̂(ω), a⟩ = ⟨ω, S²(a)δ⁻¹⟩");
    DUAL_SIGMA_PRIME_FORMULA => ("dual-sigma-prime-formula", "⟨σ̂'(ω), a⟩ = ⟨ω, δ⁻¹S⁻²(a)⟩");
    DUAL_MODULAR_MULTIPLICATIVE => ("dual-modular-multiplicative", "δ̂(a·b) = δ̂(a)δ̂(b)");
    DELTA_GROUPLIKE => ("delta-grouplike", "Δ(δ) = δ⊗δ");
    DUAL_PSI_FORMULA => ("dual-psi-formula", "ψ̂(φ(·a)) = ε(a)");
    DUAL_INTEGRAL_POSITIVE => ("dual-integral-positive", "ψ positive implies φ̂ positive");

    // Radford identities.
    RADFORD_SIGMA => ("radford-sigma", "σ(a) = δ̂⁻¹ ▸ S²(a)");
    RADFORD_SIGMA_PRIME => ("radford-sigma-prime", "σ'(a) = S⁻²(a) ◂ δ̂⁻¹");
    RADFORD_S4 => ("radford-s4", "S⁴(a) = δ⁻¹(δ̂ ▸ a ◂ δ̂⁻¹)δ");

    // Type duality.
    TYPE_DUALITY_COMPACT => ("type-duality-compact", "A compact type iff Â discrete type");
    TYPE_DUALITY_DISCRETE => ("type-duality-discrete", "A discrete type iff Â compact type");
    DUAL_COINTEGRAL_PHI => ("dual-cointegral-phi", "ω·φ = ε̂(ω)φ in Â");
    DUAL_COINTEGRAL_PSI => ("dual-cointegral-psi", "ψ·ω = ε̂(ω)ψ in Â");

    // Convolution model of the dual of a double-coset hypergroup.
    DUAL_CONVOLUTION_PRODUCT => ("dual-convolution-product", "dual product = convolution of coset indicator functions");
    COMPRESSION_ISO_LINEAR => ("compression-iso-linear", "indicator map Â → uBu is a linear isomorphism");
    COMPRESSION_ISO_ALGEBRA => ("compression-iso-algebra", "indicator map intertwines the products");
    COMPRESSION_ISO_COMULT => ("compression-iso-comult", "indicator map intertwines the coproducts");
    COMPRESSION_ISO_COUNIT => ("compression-iso-counit", "indicator map preserves the counit");
    COMPRESSION_ISO_INTEGRAL => ("compression-iso-integral", "indicator map matches integrals up to a scalar");
    COMPRESSION_ISO_ANTIPODE => ("compression-iso-antipode", "indicator map intertwines the antipodes");
    COMPRESSION_ISO_STAR => ("compression-iso-star", "indicator map intertwines the involutions");
}
