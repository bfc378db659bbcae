//! Radial oscillator potentials, their rational extensions, superpotentials
//! and partner constructions, all as exact identities in `z = omega x^2 / 2`.
//!
//! Every superpotential here has the form `W(x) = omega x u(z)` with `u` a
//! rational function of `z`, so `W^2 -+ W' = 2 omega z u^2 -+ (omega u +
//! 2 omega z u')` stays inside exact rational-function arithmetic. The `x`
//! picture is used only for floating-point evaluation.
//!
//! Units: hbar = 2m = 1; energies are exact multiples of a rational `omega`.

use num_traits::{One, Signed, Zero};

use crate::algebra::{count_roots_positive, rat, rat_int, Poly, Rat, RationalFn};
use crate::eop::{
    eop_first_order, eop_second_order, g_mu_ssusy, seed_poly, EOPoly, PairCase, SeedKind,
};
use crate::error::{Error, Result};
use crate::laguerre::laguerre;

/// Oscillator frequency and angular momentum; `alpha = l + 1/2` is derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OscParams {
    pub omega: Rat,
    pub l: u32,
}

impl OscParams {
    pub fn new(omega: Rat, l: u32) -> Result<Self> {
        if !omega.is_positive() {
            return Err(Error::InvalidParameter("omega must be positive".into()));
        }
        Ok(OscParams { omega, l })
    }

    pub fn alpha(&self) -> Rat {
        rat_int(self.l as i64) + rat(1, 2)
    }

    /// Ground-state energy `omega (alpha + 1) = omega (l + 3/2)`.
    pub fn e0(&self) -> Rat {
        &self.omega * (self.alpha() + Rat::one())
    }

    pub fn with_l(&self, l: u32) -> OscParams {
        OscParams {
            omega: self.omega.clone(),
            l,
        }
    }
}

/// `z^zpow e^{expcoef z}`, the non-polynomial factor of a seed function or
/// bound state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFactor {
    pub zpow: Rat,
    pub expcoef: Rat,
}

/// A nodeless seed solution `weight(z) * poly(z)` with its factorization
/// energy (an exact multiple of omega).
#[derive(Debug, Clone)]
pub struct SeedFunction {
    pub kind: SeedKind,
    pub m: usize,
    pub weight: WeightFactor,
    pub poly: Poly,
    pub energy: Rat,
}

/// The three first-order factorization branches, classified by where the
/// factorization energy sits and whether the inverse seed is normalizable.
///
/// Everything in this crate develops the isospectral branch; the other two
/// (deleting the ground state, or creating a bound state below the
/// spectrum) are represented for completeness but not constructible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SusyBranch {
    /// `E = E0`, seed is the ground state; the partner loses that level.
    DeleteGroundState,
    /// `E < E0`, seed and inverse both nonnormalizable; spectra coincide.
    Isospectral,
    /// `E < E0`, inverse normalizable; the partner gains a level at `E`.
    CreateBoundState,
}

/// Seed selection for a given branch. Only [`SusyBranch::Isospectral`] is
/// implemented; the other branches are rejected.
pub fn seed_for_branch(
    branch: SusyBranch,
    kind: SeedKind,
    params: &OscParams,
    m: usize,
) -> Result<SeedFunction> {
    match branch {
        SusyBranch::Isospectral => seed_function(kind, params, m),
        other => Err(Error::InvalidParameter(format!(
            "{other:?} branch is not constructible here; only the isospectral branch is developed"
        ))),
    }
}

/// Seed function of the given type at level `l`.
///
/// Type I exists for every `m >= 1`; type II requires `1 <= m <= l` so that
/// the inverse stays nonnormalizable (enforced from the parameter range, not
/// from runtime asymptotics).
pub fn seed_function(kind: SeedKind, params: &OscParams, m: usize) -> Result<SeedFunction> {
    if kind == SeedKind::TypeII && m > params.l as usize {
        return Err(Error::OutsideValidityRange(format!(
            "type II seed needs m <= l, got m={m}, l={}",
            params.l
        )));
    }
    let seed = seed_function_at_any_level(kind, params, m)?;
    // Isospectral-case gate: the factorization energy sits strictly below
    // the ground state.
    debug_assert!(seed.energy < params.e0());
    Ok(seed)
}

/// Which denominator family an extension uses; `Conventional` is the
/// unextended potential (`g = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GFamily {
    Conventional,
    FirstOrder(SeedKind, usize),
    SecondOrder(PairCase, usize, usize),
}

impl GFamily {
    /// The denominator polynomial at a given `alpha`.
    pub fn g_poly(&self, alpha: &Rat) -> Result<Poly> {
        match self {
            GFamily::Conventional => Ok(Poly::one()),
            GFamily::FirstOrder(kind, m) => seed_poly(*kind, alpha, *m),
            GFamily::SecondOrder(case, m1, m2) => {
                g_mu_ssusy(*case, alpha, *m1, *m2).map(|(g, _)| g)
            }
        }
    }

    pub fn mu(&self) -> usize {
        match self {
            GFamily::Conventional => 0,
            GFamily::FirstOrder(_, m) => *m,
            GFamily::SecondOrder(PairCase::Mixed, m1, m2) => m1 + m2 + 1,
            GFamily::SecondOrder(_, m1, m2) => m1 + m2 - 1,
        }
    }

    /// Additive constant carried by the partner construction, in units of
    /// omega: -+omega for one-step extensions, {-2, +2, 0} omega for
    /// two-step ones.
    pub fn shift_c(&self, omega: &Rat) -> Rat {
        match self {
            GFamily::Conventional => Rat::zero(),
            GFamily::FirstOrder(SeedKind::TypeI, _) => -omega.clone(),
            GFamily::FirstOrder(SeedKind::TypeII, _) => omega.clone(),
            GFamily::SecondOrder(PairCase::BothI, ..) => rat_int(-2) * omega,
            GFamily::SecondOrder(PairCase::BothII, ..) => rat_int(2) * omega,
            GFamily::SecondOrder(PairCase::Mixed, ..) => Rat::zero(),
        }
    }

    /// Index-range validity at level `l` (`alpha = l + 1/2`).
    pub fn validate(&self, params: &OscParams) -> Result<()> {
        let l = params.l as usize;
        match *self {
            GFamily::Conventional => Ok(()),
            GFamily::FirstOrder(SeedKind::TypeI, m) => {
                if m >= 1 {
                    Ok(())
                } else {
                    Err(Error::InvalidIndices("type I extension needs m >= 1".into()))
                }
            }
            GFamily::FirstOrder(SeedKind::TypeII, m) => {
                if (1..=l + 1).contains(&m) {
                    Ok(())
                } else {
                    Err(Error::OutsideValidityRange(format!(
                        "type II extension needs 1 <= m <= l + 1, got m={m}, l={l}"
                    )))
                }
            }
            GFamily::SecondOrder(case, m1, m2) => {
                if m1 == 0 || m2 == 0 {
                    return Err(Error::InvalidIndices("pair indices must be >= 1".into()));
                }
                match case {
                    PairCase::BothI => {
                        if m1 >= m2 {
                            Err(Error::InvalidIndices("pair needs m1 < m2".into()))
                        } else if l < 2 {
                            Err(Error::OutsideValidityRange(
                                "same-type-I pair starts two levels down; needs l >= 2".into(),
                            ))
                        } else {
                            Ok(())
                        }
                    }
                    PairCase::BothII => {
                        if m1 >= m2 {
                            Err(Error::InvalidIndices("pair needs m1 < m2".into()))
                        } else if m2 > l + 2 {
                            Err(Error::OutsideValidityRange(format!(
                                "type II pair needs m2 < alpha + 2, got m2={m2}, l={l}"
                            )))
                        } else {
                            Ok(())
                        }
                    }
                    PairCase::Mixed => {
                        if m2 > l {
                            Err(Error::OutsideValidityRange(format!(
                                "mixed pair needs m2 < alpha, got m2={m2}, l={l}"
                            )))
                        } else {
                            Ok(())
                        }
                    }
                }
            }
        }
    }
}

/// A validated rational extension: denominator polynomial, its degree, the
/// provenance and the additive constant of the partner construction.
#[derive(Debug, Clone)]
pub struct ExtensionSpec {
    pub params: OscParams,
    pub g: Poly,
    pub mu: usize,
    pub provenance: GFamily,
    pub shift_c: Rat,
}

impl ExtensionSpec {
    /// Validate index ranges and pole-freeness, then build.
    pub fn new(params: OscParams, provenance: GFamily) -> Result<Self> {
        provenance.validate(&params)?;
        let alpha = params.alpha();
        let g = provenance.g_poly(&alpha)?;
        if count_roots_positive(&g)? != 0 {
            return Err(Error::SingularExtension(
                "extension has a pole on (0, oo)".into(),
            ));
        }
        let shift_c = provenance.shift_c(&params.omega);
        Ok(ExtensionSpec {
            mu: provenance.mu(),
            params,
            g,
            provenance,
            shift_c,
        })
    }

    /// Polynomial part of the `nu`-th bound state `eta_l(z) y(z) / g(z)`.
    pub fn bound_state_poly(&self, nu: usize) -> Result<Poly> {
        let alpha = self.params.alpha();
        match self.provenance {
            GFamily::Conventional => Ok(laguerre(nu, &alpha)),
            GFamily::FirstOrder(kind, m) => Ok(eop_first_order(kind, &alpha, m, nu)?.poly),
            GFamily::SecondOrder(case, m1, m2) => {
                Ok(eop_second_order(case, &alpha, m1, m2, nu)?.poly)
            }
        }
    }
}

/// Partner-wavefunction polynomial: the exceptional polynomial the
/// extension's bound states are built from. The full wavefunction assembly
/// happens in the numerics layer.
pub fn partner_wavefunction_poly(spec: &ExtensionSpec, nu: usize) -> Result<EOPoly> {
    let alpha = spec.params.alpha();
    match spec.provenance {
        GFamily::Conventional => Err(Error::InvalidParameter(
            "conventional potential has classical Laguerre bound states".into(),
        )),
        GFamily::FirstOrder(kind, m) => eop_first_order(kind, &alpha, m, nu),
        GFamily::SecondOrder(case, m1, m2) => eop_second_order(case, &alpha, m1, m2, nu),
    }
}

/// A potential as a rational function of `z`, evaluated at `z = omega x^2/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZRationalPotential {
    pub rfn: RationalFn,
    pub omega: Rat,
}

impl ZRationalPotential {
    /// Value at physical `x > 0` (non-finite at a pole).
    pub fn eval_x(&self, x: f64) -> f64 {
        let omega = crate::algebra::scalar::to_f64(&self.omega);
        self.rfn.eval_f64(0.5 * omega * x * x)
    }

    /// Exact value at rational `z`; `None` on a pole of the reduced form.
    /// `z = 0` is meaningful only where the reduced denominator is nonzero
    /// (e.g. the extended `l = 0` boundary value).
    pub fn eval_z(&self, z: &Rat) -> Option<Rat> {
        self.rfn.eval(z)
    }

    pub fn add_const(&self, c: &Rat) -> ZRationalPotential {
        ZRationalPotential {
            rfn: &self.rfn + &RationalFn::constant(c.clone()),
            omega: self.omega.clone(),
        }
    }

    pub fn add(&self, other: &ZRationalPotential) -> ZRationalPotential {
        assert_eq!(self.omega, other.omega, "mixed-frequency potentials");
        ZRationalPotential {
            rfn: &self.rfn + &other.rfn,
            omega: self.omega.clone(),
        }
    }
}

/// Conventional radial oscillator pulled back to `z`:
/// `(omega/2) [z + l(l+1)/z]`.
pub fn v_conventional(params: &OscParams) -> ZRationalPotential {
    let cent = rat_int((params.l as i64) * (params.l as i64 + 1));
    let num = Poly::from_coeffs(vec![cent, Rat::zero(), Rat::one()])
        .scale(&(&params.omega / rat_int(2)));
    ZRationalPotential {
        rfn: RationalFn::new(num, Poly::z()),
        omega: params.omega.clone(),
    }
}

/// Rational part `-2 omega { g'/g + 2z [ g''/g - (g'/g)^2 ] }` of an
/// extension with denominator polynomial `g`, which must be nonzero on
/// `(0, oo)`.
pub fn v_rational_part(g: &Poly, omega: &Rat) -> Result<ZRationalPotential> {
    if g.is_zero() {
        return Err(Error::SingularExtension("zero denominator polynomial".into()));
    }
    if count_roots_positive(g)? != 0 {
        return Err(Error::SingularExtension(
            "extension has a pole on (0, oo)".into(),
        ));
    }
    Ok(ZRationalPotential {
        rfn: v_rational_part_unchecked(g, omega),
        omega: omega.clone(),
    })
}

fn v_rational_part_unchecked(g: &Poly, omega: &Rat) -> RationalFn {
    let lg = RationalFn::log_derivative(g);
    let gdd_over_g = RationalFn::new(g.derivative().derivative(), g.clone());
    let z2 = RationalFn::from_poly(Poly::z().scale(&rat_int(2)));
    let bracket = &gdd_over_g - &(&lg * &lg);
    let inner = &lg + &(&z2 * &bracket);
    inner.scale(&(rat_int(-2) * omega))
}

/// Full extended potential `V_l + V_rat(g)` for a validated spec.
pub fn v_extended(spec: &ExtensionSpec) -> ZRationalPotential {
    let base = v_conventional(&spec.params);
    ZRationalPotential {
        rfn: &base.rfn + &v_rational_part_unchecked(&spec.g, &spec.params.omega),
        omega: spec.params.omega.clone(),
    }
}

/// `2 omega z u^2 + sign (omega u + 2 omega z u')`: the pullback of
/// `W^2 +- W'` for `W = omega x u(z)`.
pub fn w_square_pm(u: &RationalFn, omega: &Rat, plus: bool) -> RationalFn {
    let two_omega_z = RationalFn::from_poly(Poly::z().scale(&(rat_int(2) * omega)));
    let square = &two_omega_z * &(u * u);
    let linear = &u.scale(omega) + &(&two_omega_z * &u.derivative());
    if plus {
        &square + &linear
    } else {
        &square - &linear
    }
}

/// `u(z)` with `W = omega x u(z)` for the extension family at level `l`:
/// `u = 1/2 - (2 alpha + 1)/(4z) - (g+'/g+ - g'/g)` where `g+` is the same
/// family at `alpha + 1` (the ground-state denominator).
///
/// Algebraic core without the pole-freeness gate; the public entry point is
/// [`superpotential_ext`].
pub fn superpotential_u(params: &OscParams, family: &GFamily) -> Result<RationalFn> {
    let alpha = params.alpha();
    let g = family.g_poly(&alpha)?;
    let g_up = family.g_poly(&(alpha.clone() + Rat::one()))?;
    if g.is_zero() || g_up.is_zero() {
        return Err(Error::SingularExtension("zero denominator polynomial".into()));
    }
    let half = RationalFn::constant(rat(1, 2));
    let two_a_plus_1 = alpha.clone() + alpha + Rat::one();
    let centrifugal = RationalFn::new(
        Poly::constant(two_a_plus_1 / rat_int(4)),
        Poly::z(),
    );
    let delta = &RationalFn::log_derivative(&g_up) - &RationalFn::log_derivative(&g);
    Ok(&(&half - &centrifugal) - &delta)
}

/// Superpotential of an extension, requiring the denominators at both
/// `alpha` and `alpha + 1` to be pole-free on `(0, oo)`.
pub fn superpotential_ext(params: &OscParams, family: &GFamily) -> Result<RationalFn> {
    let alpha = params.alpha();
    for shift in 0..2 {
        let g = family.g_poly(&(alpha.clone() + rat_int(shift)))?;
        if g.is_zero() || count_roots_positive(&g)? != 0 {
            return Err(Error::SingularExtension(format!(
                "denominator at alpha + {shift} has a pole on (0, oo)"
            )));
        }
    }
    superpotential_u(params, family)
}

/// Shape-invariance residual
/// `W_l^2 + W_l' - [V_{l+1,ext} - E0^{(l+1)}] - 2 omega`
/// pulled back to `z`; the contract is that it is identically zero.
///
/// Algebraic core; [`si_residual`] adds the pole-freeness gate.
pub fn si_residual_algebraic(params: &OscParams, family: &GFamily) -> Result<RationalFn> {
    let omega = &params.omega;
    let u = superpotential_u(params, family)?;
    let lhs = w_square_pm(&u, omega, true);

    let up = params.with_l(params.l + 1);
    let alpha_up = up.alpha();
    let g_up = family.g_poly(&alpha_up)?;
    if g_up.is_zero() {
        return Err(Error::SingularExtension("zero denominator polynomial".into()));
    }
    let v_up = &v_conventional(&up).rfn + &v_rational_part_unchecked(&g_up, omega);
    let e0_up = up.e0();
    let rhs = &(&v_up - &RationalFn::constant(e0_up)) + &RationalFn::constant(rat_int(2) * omega);
    Ok(&lhs - &rhs)
}

/// Shape-invariance residual with the validity gate at both levels.
pub fn si_residual(params: &OscParams, family: &GFamily) -> Result<RationalFn> {
    let alpha = params.alpha();
    for shift in 0..3 {
        let g = family.g_poly(&(alpha.clone() + rat_int(shift)))?;
        if g.is_zero() || count_roots_positive(&g)? != 0 {
            return Err(Error::SingularExtension(format!(
                "denominator at alpha + {shift} has a pole on (0, oo)"
            )));
        }
    }
    si_residual_algebraic(params, family)
}

/// Everything a reducible second-order partner pair determines, with the
/// consistency residuals (all required to be identically zero) computed
/// exactly.
#[derive(Debug, Clone)]
pub struct SsusyPair {
    pub case: PairCase,
    pub params: OscParams,
    /// Starting level `l'` of the underlying conventional potential.
    pub l_start: u32,
    pub g_mu: Poly,
    pub mu: usize,
    pub v1: ZRationalPotential,
    pub v2: ZRationalPotential,
    /// `p = omega x p_u(z)` of the second-order intertwiners.
    pub p_u: RationalFn,
    /// Seed energies `(E_1, E_2)` and their difference `c = E_1 - E_2`.
    pub energies: (Rat, Rat),
    pub c: Rat,
    /// Total spectral shift of `V2` against the conventional levels:
    /// `-(E_1 + E_2)/2 + C`.
    pub shift: Rat,
    pub residuals: SsusyResiduals,
    /// Potential of the intermediate Hamiltonian, and the one obtained with
    /// the seeds applied in the opposite order.
    pub intermediate: ZRationalPotential,
    pub intermediate_swapped: ZRationalPotential,
}

/// Exact residuals of the second-order constraint algebra.
#[derive(Debug, Clone)]
pub struct SsusyResiduals {
    /// `V2 - V1 - 4 p'`.
    pub v2_v1_4p: RationalFn,
    /// `V1 - [-2p' + p^2 + p''/(2p) - (p'/(2p))^2 + c^2/(16 p^2)]`.
    pub v1_reconstruction: RationalFn,
    /// `V2 - [+2p' + p^2 + p''/(2p) - (p'/(2p))^2 + c^2/(16 p^2)]`.
    pub v2_reconstruction: RationalFn,
    /// `V2 - [Wt^2 + Wt' - c/2]` from the two-step gluing.
    pub glued: RationalFn,
    /// Same with the seeds swapped; equality proves order independence of
    /// the final potential.
    pub glued_swapped: RationalFn,
}

impl SsusyResiduals {
    pub fn all_zero(&self) -> bool {
        self.v2_v1_4p.is_identically_zero()
            && self.v1_reconstruction.is_identically_zero()
            && self.v2_reconstruction.is_identically_zero()
            && self.glued.is_identically_zero()
            && self.glued_swapped.is_identically_zero()
    }
}

/// Log-derivative data of `x^k z^a e^{b z} Q(z)`:
/// `d/dx log F = omega x [ (k/2 + a)/z + b + Q'/Q ]`; returns the bracket.
fn log_u(k_half_plus_a: Rat, b: Rat, q: &Poly) -> RationalFn {
    let pole = RationalFn::new(Poly::constant(k_half_plus_a), Poly::z());
    let con = RationalFn::constant(b);
    &(&pole + &con) + &RationalFn::log_derivative(q)
}

/// Build the reducible second-order partner pair for the given case.
pub fn ssusy_pair(case: PairCase, params: &OscParams, m1: usize, m2: usize) -> Result<SsusyPair> {
    GFamily::SecondOrder(case, m1, m2).validate(params)?;
    let alpha = params.alpha();
    let omega = params.omega.clone();
    let (g_mu, mu) = g_mu_ssusy(case, &alpha, m1, m2)?;
    if count_roots_positive(&g_mu)? != 0 {
        return Err(Error::SingularExtension(
            "extension has a pole on (0, oo)".into(),
        ));
    }

    // Starting level, seed energies, and the additive constant.
    let (l_start, e1, e2, big_c) = match case {
        PairCase::BothI => {
            let e = |m: usize| -(&omega * (&alpha + rat_int(2 * m as i64 - 1)));
            (params.l - 2, e(m1), e(m2), rat_int(-2) * &omega)
        }
        PairCase::BothII => {
            let e = |m: usize| -(&omega * (&alpha - rat_int(2 * m as i64 - 1)));
            (params.l + 2, e(m1), e(m2), rat_int(2) * &omega)
        }
        PairCase::Mixed => (
            params.l,
            -(&omega * (&alpha + rat_int(2 * m1 as i64 + 1))),
            -(&omega * (&alpha - rat_int(2 * m2 as i64 + 1))),
            Rat::zero(),
        ),
    };
    let c = &e1 - &e2;
    let half_sum = (&e1 + &e2) / rat_int(2);
    let shift = &big_c - &half_sum;

    let start = params.with_l(l_start);
    let v1 = v_conventional(&start).add_const(&-half_sum.clone());
    let v2 = {
        let base = v_conventional(params);
        let rat_part = v_rational_part_unchecked(&g_mu, &omega);
        ZRationalPotential {
            rfn: &(&base.rfn + &rat_part) + &RationalFn::constant(shift.clone()),
            omega: omega.clone(),
        }
    };

    // p = -(1/2) d/dx log W(phi_1, phi_2), with the Wronskian's closed form
    // per case: x-power, z-power and exponential factor times g_mu.
    let wronskian_u = match case {
        // omega x (chi^I_{l-2})^2 g: k=1, a=(2 alpha - 3)/2, b=1
        PairCase::BothI => log_u(
            rat(1, 2) + (&alpha + &alpha - rat_int(3)) / rat_int(2),
            Rat::one(),
            &g_mu,
        ),
        // omega x (chi^II_{l+2})^2 g: k=1, a=-(2 alpha + 3)/2, b=-1
        PairCase::BothII => log_u(
            rat(1, 2) - (&alpha + &alpha + rat_int(3)) / rat_int(2),
            -Rat::one(),
            &g_mu,
        ),
        // (2/x) chi^I_l chi^II_l g: k=-1, a=1/2, b=0
        PairCase::Mixed => log_u(Rat::zero(), Rat::zero(), &g_mu),
    };
    let p_u = wronskian_u.scale(&rat(-1, 2));

    // Seeds at the starting level for the gluing checks.
    let seed_data = |kind: SeedKind, m: usize| -> Result<(Rat, Rat, Poly)> {
        let sf = seed_function_at_any_level(kind, &start, m)?;
        Ok((sf.weight.zpow, sf.weight.expcoef, sf.poly))
    };
    let ((a1, b1, q1), (a2, b2, q2)) = match case {
        PairCase::BothI => (seed_data(SeedKind::TypeI, m1)?, seed_data(SeedKind::TypeI, m2)?),
        PairCase::BothII => (
            seed_data(SeedKind::TypeII, m1)?,
            seed_data(SeedKind::TypeII, m2)?,
        ),
        PairCase::Mixed => (seed_data(SeedKind::TypeI, m1)?, seed_data(SeedKind::TypeII, m2)?),
    };

    // W^{(-)} of the first step, and the glued final potential, for both
    // seed orders.
    let u_phi = |a: &Rat, b: &Rat, q: &Poly| log_u(a.clone(), b.clone(), q);
    let u_w1 = -&u_phi(&a1, &b1, &q1);
    let u_w1_swapped = -&u_phi(&a2, &b2, &q2);

    let intermediate_rfn = |u_w: &RationalFn, c_eff: &Rat| -> RationalFn {
        // V_H = W^2 + W' + c_eff/2
        &w_square_pm(u_w, &omega, true) + &RationalFn::constant(c_eff.clone() / rat_int(2))
    };
    let intermediate = ZRationalPotential {
        rfn: intermediate_rfn(&u_w1, &c),
        omega: omega.clone(),
    };
    let intermediate_swapped = ZRationalPotential {
        rfn: intermediate_rfn(&u_w1_swapped, &-c.clone()),
        omega: omega.clone(),
    };

    // Step-2 seed: phi~ = W(phi_1, phi_2) / phi_1, so its log-derivative is
    // the Wronskian's minus the first seed's.
    let u_wt = -&(&wronskian_u - &u_phi(&a1, &b1, &q1));
    let u_wt_swapped = -&(&wronskian_u - &u_phi(&a2, &b2, &q2));
    let glued_v2 = |u_wt: &RationalFn, c_eff: &Rat| -> RationalFn {
        &w_square_pm(u_wt, &omega, true) - &RationalFn::constant(c_eff.clone() / rat_int(2))
    };

    // Constraint-algebra residuals.
    let z_rfn = RationalFn::from_poly(Poly::z());
    let p_d = p_u.derivative();
    let p_dd = p_d.derivative();
    let p_prime = &p_u.scale(&omega) + &(&z_rfn * &p_d).scale(&(rat_int(2) * &omega));
    let p_square = (&(&p_u * &p_u) * &z_rfn).scale(&(rat_int(2) * &omega));
    let term_pdd = {
        // p''/(2p) = omega (3 p_u' + 2 z p_u'') / (2 p_u)
        let num = &p_d.scale(&(rat_int(3) * &omega))
            + &(&z_rfn * &p_dd).scale(&(rat_int(2) * &omega));
        num.checked_div(&p_u.scale(&rat_int(2)))?
    };
    let term_pd_sq = {
        // (p'/(2p))^2 = omega (p_u + 2 z p_u')^2 / (8 z p_u^2)
        let lin = &p_u + &(&z_rfn * &p_d).scale(&rat_int(2));
        let num = (&lin * &lin).scale(&omega);
        let den = &(&z_rfn * &p_u) * &p_u;
        num.checked_div(&den.scale(&rat_int(8)))?
    };
    let term_c = {
        // c^2/(16 p^2) = c^2 / (32 omega z p_u^2)
        let num = RationalFn::constant(&c * &c / (rat_int(32) * &omega));
        let den = &(&z_rfn * &p_u) * &p_u;
        num.checked_div(&den)?
    };
    let base = &(&p_square + &term_pdd) - &term_pd_sq;
    let base = &base + &term_c;
    let recon_v1 = &base - &p_prime.scale(&rat_int(2));
    let recon_v2 = &base + &p_prime.scale(&rat_int(2));

    let residuals = SsusyResiduals {
        v2_v1_4p: &(&v2.rfn - &v1.rfn) - &p_prime.scale(&rat_int(4)),
        v1_reconstruction: &v1.rfn - &recon_v1,
        v2_reconstruction: &v2.rfn - &recon_v2,
        glued: &v2.rfn - &glued_v2(&u_wt, &c),
        glued_swapped: &v2.rfn - &glued_v2(&u_wt_swapped, &-c.clone()),
    };

    Ok(SsusyPair {
        case,
        params: params.clone(),
        l_start,
        g_mu,
        mu,
        v1,
        v2,
        p_u,
        energies: (e1, e2),
        c,
        shift,
        residuals,
        intermediate,
        intermediate_swapped,
    })
}

/// Seed data without the `m <= l` gate: two-step constructions use seeds
/// whose inverse-normalizability is already guaranteed by the pair's own
/// index ranges.
fn seed_function_at_any_level(
    kind: SeedKind,
    params: &OscParams,
    m: usize,
) -> Result<SeedFunction> {
    if m == 0 {
        return Err(Error::InvalidIndices("seed needs m >= 1".into()));
    }
    let alpha = params.alpha();
    let omega = &params.omega;
    Ok(match kind {
        SeedKind::TypeI => SeedFunction {
            kind,
            m,
            weight: WeightFactor {
                zpow: (alpha.clone() + alpha.clone() + Rat::one()) / rat_int(4),
                expcoef: rat(1, 2),
            },
            poly: laguerre(m, &alpha).compose_affine(&-Rat::one(), &Rat::zero()),
            energy: -(omega * (alpha + rat_int(2 * m as i64) + Rat::one())),
        },
        SeedKind::TypeII => SeedFunction {
            kind,
            m,
            weight: WeightFactor {
                zpow: -(alpha.clone() + alpha.clone() - Rat::one()) / rat_int(4),
                expcoef: rat(-1, 2),
            },
            poly: laguerre(m, &-alpha.clone()),
            energy: -(omega * (alpha - rat_int(2 * m as i64) - Rat::one())),
        },
    })
}

/// First-order reference for the intermediate Hamiltonian: which one-step
/// extension (level and family) the middle potential matches up to an
/// additive constant.
pub fn intermediate_reference(
    case: PairCase,
    params: &OscParams,
    m1: usize,
    m2: usize,
    swapped: bool,
) -> (u32, GFamily) {
    let m_used = if swapped { m2 } else { m1 };
    match (case, swapped) {
        (PairCase::BothI, _) => (params.l - 1, GFamily::FirstOrder(SeedKind::TypeI, m_used)),
        (PairCase::BothII, _) => (params.l + 1, GFamily::FirstOrder(SeedKind::TypeII, m_used)),
        (PairCase::Mixed, false) => (params.l + 1, GFamily::FirstOrder(SeedKind::TypeI, m1)),
        (PairCase::Mixed, true) => (params.l - 1, GFamily::FirstOrder(SeedKind::TypeII, m2)),
    }
}
