"""Conformance suites and spectrum tables.

Each suite returns a deterministic :class:`~twistmoyal.conformance.Report`.
Required suites hold engine self-consistency and the claims the engine
reproduces; audit suites compare printed closed forms against the engine and
may legitimately contain FAIL cases; the associator suite is informational.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import algebra as alg
from . import star as st
from .algebra import (
    A,
    ABAR,
    OMEGA,
    OMEGABAR,
    ONE_ELEMENT,
    THETA,
    ZERO_ELEMENT,
    TwistedElement,
    coord_images,
    derive,
    det,
    det_inv,
    format_element,
    from_record,
    gaussian,
    invert_unit,
    limit_omega_zero,
    mirror,
    parse_element,
    to_record,
)
from .conformance import ConformanceCase as Case
from .conformance import Report, Status
from .identities import POWER_FAMILIES, STATE_FAMILIES, derivative_identity_residual
from .numeric import NumericConfig, NumericPoint, NumericRecord, evaluate, plane_wave_check, star_quadrature
from .randgen import random_element, random_gaussian_class, random_laurent, random_polynomial, random_unit
from .scalars import I
from .states import (
    MAX_LEVEL,
    LevelTooLarge,
    MatrixBasisElement,
    NotProportional,
    apply_ladder_lowering,
    lowering_closed_form,
    closed_form,
    engine_energy,
    engine_energy_method,
    extract_eigenvalue,
    fundamental,
    ladder,
    lambda_energy,
    lambda_state,
    matrix_basis_action,
    printed_energy,
    u_sequence,
)

SUITE_NAMES = ("algebra", "star", "jacobi", "leibniz", "states", "spectra", "appendix_a",
               "appendix_b", "matrix_basis", "numeric", "associator")
AUDIT_SUITES = frozenset({"leibniz", "spectra", "appendix_a", "appendix_b", "associator"})

# quadrature error below this is the floating-point floor for O(1) values
QUADRATURE_FLOOR = 1e-13
SAMPLE_POINTS = ((0.0, 0.0), (0.3, -0.2), (0.5, 0.5), (-0.7, 0.1), (1.0, -0.4))


class UnknownSuite(KeyError):
    pass


class BadConfig(ValueError):
    pass


@dataclass
class SuiteConfig:
    seed: int = 0
    max_level: int = 8
    lowering_max: int = 6
    random_cases: int = 200
    numeric: NumericConfig = field(default_factory=NumericConfig)

    def validate(self):
        if not 0 <= self.max_level <= MAX_LEVEL:
            raise BadConfig(f"max_level must be in [0, {MAX_LEVEL}]")
        if not 0 <= self.lowering_max <= MAX_LEVEL:
            raise BadConfig("lowering_max out of range")
        if self.random_cases < 1:
            raise BadConfig("random_cases must be positive")

    def echo(self) -> dict:
        num = asdict(self.numeric)
        for key in ("omega_val", "omegabar_val"):
            z = complex(num[key])
            num[key] = [z.real, z.imag]
        return {"seed": self.seed, "max_level": self.max_level, "lowering_max": self.lowering_max,
                "random_cases": self.random_cases, "numeric": num}


def _theta_half(n) -> TwistedElement:
    return THETA.scale(Fraction(2 * n + 1, 2))


def _aggregate(id: str, anchor: str, trials: int, fn: Callable[[int], TwistedElement]) -> Case:
    """Run ``fn`` on ``trials`` seeds; PASS iff every residual vanishes."""
    failures = 0
    first = None
    for i in range(trials):
        r = fn(i)
        if r:
            failures += 1
            if first is None:
                first = r
    if failures:
        return Case(id, anchor, Status.FAIL, first, note=f"{failures}/{trials} random cases nonzero")
    return Case(id, anchor, Status.PASS, note=f"{trials}/{trials} random cases exact")


def _rngs(seed: int, label: str):
    def make(i: int) -> random.Random:
        return random.Random(f"{seed}:{label}:{i}")
    return make


# -- algebra --------------------------------------------------------------------

def suite_algebra(cfg: SuiteConfig) -> list[Case]:
    n = cfg.random_cases
    einv, e = det_inv(), det()
    cases = [
        Case.compare("e_times_einv", "determinant relations", e * einv, ONE_ELEMENT),
        Case.compare("invert_e", "determinant relations", invert_unit(e), einv),
        Case.compare("d_a_einv", "derivatives of e^-1", derive(einv, "a"), -OMEGA),
        Case.compare("d_abar_einv", "derivatives of e^-1", derive(einv, "abar"), -OMEGABAR),
    ]
    for k in range(-3, 4):
        cases.append(Case.compare(f"omega_e^{k}", "w e^k = w", OMEGA * e ** k, OMEGA))
        cases.append(Case.compare(f"omegabar_e^{k}", "wbar e^k = wbar", OMEGABAR * e ** k, OMEGABAR))

    rng = _rngs(cfg.seed, "algebra")

    def triple(i):
        r = rng(i)
        return random_laurent(r), random_laurent(r), random_laurent(r)

    def assoc(i):
        f, g, h = triple(i)
        return (f * g) * h - f * (g * h)

    def comm(i):
        f, g, _ = triple(i)
        return f * g - g * f

    def distrib(i):
        f, g, h = triple(i)
        return f * (g + h) - (f * g + f * h)

    def additive_inverse(i):
        f, _, _ = triple(i)
        return f + (-f)

    def leibniz(i):
        f, g, _ = triple(i)
        out = ZERO_ELEMENT
        for var in ("a", "abar"):
            out = out + derive(f * g, var) - (derive(f, var) * g + f * derive(g, var))
        return out

    def unit(i):
        u = random_unit(rng(i))
        return u * invert_unit(u) - ONE_ELEMENT

    def hom(i):
        f, g, _ = triple(i)
        return (limit_omega_zero(f * g) - limit_omega_zero(f) * limit_omega_zero(g)
                + limit_omega_zero(f + g) - limit_omega_zero(f) - limit_omega_zero(g))

    def roundtrip(i):
        f, _, _ = triple(i)
        bad = (parse_element(format_element(f)) != f) or (from_record(to_record(f)) != f)
        return ONE_ELEMENT if bad else ZERO_ELEMENT

    cases += [
        _aggregate("ring_associativity", "truncated pointwise algebra", n, assoc),
        _aggregate("ring_commutativity", "truncated pointwise algebra", n, comm),
        _aggregate("ring_distributivity", "truncated pointwise algebra", n, distrib),
        _aggregate("additive_inverse", "truncated pointwise algebra", n, additive_inverse),
        _aggregate("derive_leibniz", "d_a, d_abar product rule", n, leibniz),
        _aggregate("invert_unit", "first-order Laurent inverse", n, unit),
        _aggregate("limit_homomorphism", "w -> 0 limit", n, hom),
        _aggregate("serialization_roundtrip", "canonical text and records", n, roundtrip),
    ]

    x1, x2, d1, d2 = coord_images()
    cases.append(Case.compare("x1^2+x2^2", "creation/annihilation functions", x1 * x1 + x2 * x2,
                              (A * ABAR).scale(2)))
    cases.append(Case.compare("x1*x2", "creation/annihilation functions", x1 * x2,
                              (A * A - ABAR * ABAR).scale((I * 2).inverse())))

    def laplacian(i):
        f = random_laurent(rng(i))
        return d1(d1(f)) + d2(d2(f)) - derive(derive(f, "a"), "abar").scale(2)

    cases.append(_aggregate("laplacian_chart", "chain rule in the (a, abar) chart", n, laplacian))

    for fam in POWER_FAMILIES:
        for k in range(1, 7):
            for l in range(0, 7):
                cases.append(Case.zero(f"{fam}_k{k}_l{l}", "derivatives of powers of -2a/(theta e^-1)",
                                       derivative_identity_residual(fam, k, l)))
    return cases


# -- star -------------------------------------------------------------------------

def suite_star(cfg: SuiteConfig) -> list[Case]:
    n = cfg.random_cases
    x1, x2 = st.coordinate(1), st.coordinate(2)
    f00R, f00L = fundamental("right").body, fundamental("left").body
    te = st.theta_einv()
    cases = [
        Case.compare("comm_a_abar", "[a, abar] = theta e^-1", st.commutator_star(A, ABAR), te),
        Case.zero("comm_a_a", "[a, a] = 0", st.commutator_star(A, A)),
        Case.compare("comm_x1_x2", "[x1, x2] = i theta e^-1", st.commutator_star(x1, x2), te.scale(I)),
        Case.zero("a_star_f00R", "right ground state", st.star_gen_left("a", f00R)),
        Case.zero("f00L_star_abar", "left ground state", st.star_gen_right(f00L, "abar")),
        Case.compare("abar_star_gaussian_w0", "usual Moyal limit",
                     limit_omega_zero(st.star_gen_left("abar", gaussian(1).scale(2))),
                     (ABAR * gaussian(1)).scale(4)),
        Case.compare("frame_det", "first-order determinant", st.FRAME.det_inv(), det_inv()),
    ]
    tt = st.FRAME.theta_tilde()
    cases.append(Case.check("theta_tilde", "explicit Theta-tilde",
                            tt[0][0].is_zero() and tt[1][1].is_zero() and tt[0][1] == te and tt[1][0] == -te))

    rng = _rngs(cfg.seed, "star")

    def elem(i):
        r = rng(i)
        return random_laurent(r) if i % 2 else random_gaussian_class(r)

    gens = {"a": A, "abar": ABAR, "x1": x1, "x2": x2}
    for name, P in gens.items():
        cases.append(_aggregate(f"series_vs_gen_left_{name}", "series product vs generator actions", n,
                                lambda i, P=P, name=name: st.star_series(P, elem(i), "left")
                                - st.star_gen_left(name, elem(i))))
        cases.append(_aggregate(f"series_vs_gen_right_{name}", "series product vs generator actions", n,
                                lambda i, P=P, name=name: st.star_series(P, elem(i), "right")
                                - st.star_gen_right(elem(i), name)))
    for mu, x in ((1, x1), (2, x2)):
        cases.append(_aggregate(f"anticomm_x{mu}", "{x^mu, f} = 2 x^mu f", n,
                                lambda i, x=x: st.anticommutator_star(x, elem(i)) - (x * elem(i)).scale(2)))
        cases.append(_aggregate(f"x{mu}_frame_form", "x^mu * f through Theta^ab e_a e_b", n,
                                lambda i, mu=mu: st.star_x_general(mu, elem(i), "left")
                                - st.star_gen_left(f"x{mu}", elem(i))))
    cases.append(_aggregate("unit", "1 * f = f = f * 1", n,
                            lambda i: st.star_series(ONE_ELEMENT, elem(i), "left") - elem(i)
                            + st.star_series(ONE_ELEMENT, elem(i), "right") - elem(i)))

    def moyal(i):
        r = rng(i)
        P = limit_omega_zero(random_polynomial(r, max_degree=3))
        g = limit_omega_zero(random_laurent(r))
        return limit_omega_zero(st.star_series(P, g, "left")) - st.moyal_constant_series(P, g)

    cases.append(_aggregate("w0_constant_moyal", "usual Moyal product at w = 0", n, moyal))

    def anti_auto(i):
        r = rng(i)
        P, g = random_polynomial(r), random_laurent(r)
        return mirror(st.star_series(P, g, "left")) - st.star_series(mirror(P), mirror(g), "right")

    cases.append(_aggregate("mirror_anti_automorphism", "left/right mirror", n, anti_auto))
    return cases


# -- jacobi ----------------------------------------------------------------------

def suite_jacobi(cfg: SuiteConfig) -> list[Case]:
    return [Case.zero(f"jacobi_{mu}{nu}{rho}", "Jacobi identity of the coordinates", r)
            for (mu, nu, rho), r in st.jacobi_residuals().items()]


# -- leibniz -----------------------------------------------------------------------

def suite_leibniz(cfg: SuiteConfig) -> list[Case]:
    x1, x2 = st.coordinate(1), st.coordinate(2)
    om1, om2 = st.FRAME.omega1, st.FRAME.omega2
    cases = [
        Case.compare("X1_x1", "frame vector fields", st.vector_field_apply(1, x1), ONE_ELEMENT + om1 * x2),
        Case.compare("X1_x2", "frame vector fields", st.vector_field_apply(1, x2), om2 * x2),
        Case.compare("X2_x1", "frame vector fields", st.vector_field_apply(2, x1), -(om1 * x1)),
        Case.compare("X2_x2", "frame vector fields", st.vector_field_apply(2, x2), ONE_ELEMENT - om2 * x1),
        Case.zero("X2_const", "frame vector fields", st.vector_field_apply(2, ONE_ELEMENT)),
    ]
    rng = _rngs(cfg.seed, "leibniz")
    pairs = [("a", A, "abar", ABAR), ("x1", x1, "x2", x2), ("a2", A * A, "abar", ABAR)]
    for i in range(10):
        r = rng(i)
        pairs.append((f"rand{i}f", random_polynomial(r, 3, 2), f"rand{i}g", random_polynomial(r, 3, 2)))
    for fname, f, gname, g in pairs:
        for idx in (1, 2):
            res = st.leibniz_residual(idx, f, g)
            cases.append(Case.zero(f"leibniz_X{idx}_{fname}_{gname}", "Leibniz rule for the frame fields", res))
            cases.append(Case.zero(f"leibniz_X{idx}_{fname}_{gname}_w0", "Leibniz rule, w -> 0",
                                   limit_omega_zero(res)))
    return cases


# -- states ------------------------------------------------------------------------

def suite_states(cfg: SuiteConfig) -> list[Case]:
    cases = []
    f00 = {s: fundamental(s).body for s in ("right", "left")}
    cases.append(Case.compare("f00_mirror", "left/right ground states", mirror(f00["right"]), f00["left"]))
    cases.append(Case.compare("f00R_w0", "usual fundamental state", limit_omega_zero(f00["right"]),
                              gaussian(1).scale(2)))
    for side in ("right", "left"):
        raise_ = (lambda f: st.star_gen_left("abar", f)) if side == "right" else \
                 (lambda f: st.star_gen_right(f, "a"))
        var = ABAR if side == "right" else A
        for m in range(MAX_LEVEL):
            cases.append(Case.compare(f"{side}_recursion_{m}", "ladder recursion",
                                      raise_(ladder(side, m).body), ladder(side, m + 1).body))
        for m in range(MAX_LEVEL + 1):
            cases.append(Case.compare(f"{side}_w0_part_{m}", "ladder recursion",
                                      limit_omega_zero(ladder(side, m).body),
                                      (var ** m).scale(2 ** m) * limit_omega_zero(f00[side])))
        for m in range(cfg.max_level + 1):
            try:
                E = engine_energy(side, m)
                cases.append(Case.compare(f"{side}_energy_limit_{m}", "usual Moyal spectrum",
                                          limit_omega_zero(E), _theta_half(m),
                                          note=f"E = {format_element(E)}"))
            except NotProportional as exc:
                cases.append(Case(f"{side}_energy_limit_{m}", "usual Moyal spectrum", Status.FAIL,
                                  exc.residual, note=str(exc)))
        for m in range(cfg.lowering_max + 1):
            cases.append(Case.zero(f"{side}_degeneracy_{m}", "degeneracy rule",
                                   apply_ladder_lowering(side, ladder(side, m), m + 2)))
            lowered = apply_ladder_lowering(side, ladder(side, m), m + 1)
            try:
                c = extract_eigenvalue(lowered, f00[side])
                constant = all(k[0].p == 0 and k[0].q == 0 and k[0].g == 0 for k, _ in c.items())
                cases.append(Case.check(f"{side}_lowered_to_ground_{m}", "lowered ground states",
                                        constant, residual=c, note=f"factor {format_element(c)}"))
            except NotProportional as exc:
                cases.append(Case(f"{side}_lowered_to_ground_{m}", "lowered ground states", Status.FAIL,
                                  exc.residual, note=str(exc)))
        for m in range(1, cfg.lowering_max + 1):
            for k in range(1, m + 1):
                E = lambda_energy(side, m, k)
                cases.append(Case.compare(f"{side}_lambda_limit_{m}_{k}", "lowered-state energies, w -> 0",
                                          limit_omega_zero(E), _theta_half(m - k)))
    for m in range(cfg.max_level + 1):
        cases.append(Case.compare(f"mirror_state_{m}", "left/right mirror",
                                  mirror(ladder("right", m).body), ladder("left", m).body))
        cases.append(Case.compare(f"mirror_energy_{m}", "left/right mirror",
                                  mirror(engine_energy("right", m)), engine_energy("left", m)))
    for m in range(1, cfg.lowering_max + 1):
        for k in range(1, m + 2):
            cases.append(Case.compare(f"mirror_lowered_{m}_{k}", "left/right mirror",
                                      mirror(lambda_state("right", m, k)), lambda_state("left", m, k)))
    return cases


# -- spectra (audit) -----------------------------------------------------------------

def engine_u(m: int) -> Fraction:
    """U_m read off the ladder: coefficient of theta w abar^(m-1) G in the level-m body is -U_m."""
    c = ladder("right", m).body.coefficient(q=m - 1, r=1, g=1, t=1)
    return -c.re


def suite_spectra(cfg: SuiteConfig) -> list[Case]:
    cases = []
    for side in ("right", "left"):
        kind = "right_m" if side == "right" else "left_n"
        for m in range(cfg.max_level + 1):
            cases.append(Case.compare(f"{side}_state_closed_form_{m}", "excited-state bracket with U_m",
                                      ladder(side, m).body, closed_form(side, m)))
        for m in range(cfg.max_level + 1):
            P = printed_energy(kind, m)
            cases.append(Case.compare(f"{side}_energy_{m}", "single-sided energies (series Hamiltonian)",
                                      engine_energy(side, m), P))
            cases.append(Case.compare(f"{side}_energy_bracket_{m}",
                                      "single-sided energies (bracket Hamiltonian)",
                                      engine_energy_method(side, m, "bracket"), P))
            cases.append(Case.compare(f"{side}_energy_printed_limit_{m}", "usual Moyal spectrum",
                                      limit_omega_zero(P), _theta_half(m)))
            body = ladder(side, m).body
            H = st.hamiltonian_left if side == "right" else st.hamiltonian_right
            series = H(body, "series")
            for method in ("mu_operator", "bracket"):
                cases.append(Case.compare(f"{side}_hamiltonian_{method}_vs_series_{m}",
                                          "equivalent forms of the Hamiltonian action",
                                          H(body, method), series))
    for m in range(cfg.max_level + 1):
        u_eng = engine_u(m)
        cases.append(Case.compare(f"U_{m}", "U_m sequence", TwistedElement.const(u_eng),
                                  TwistedElement.const(u_sequence(m)),
                                  note=f"engine {u_eng}, printed {u_sequence(m)}"))
    M = cfg.lowering_max
    for side, k11, kmk in (("right", "lambda11_R", "lambda_mk_R"), ("left", "lambda11_L", "lambda_nl_L")):
        for m in range(1, M + 1):
            cases.append(Case.compare(f"{side}_lambda11_{m}", "(1,1)-particle energies",
                                      lambda_energy(side, m, m), printed_energy(k11, m)))
            cases.append(Case.compare(f"{side}_lambda_specialization_{m}", "k = m specialization",
                                      printed_energy(kmk, m, m), printed_energy(k11, m)))
            for k in range(1, m + 1):
                cases.append(Case.compare(f"{side}_lambda_{m}_{k}", "lowered-state energies",
                                          lambda_energy(side, m, k), printed_energy(kmk, m, k)))
                cases.append(Case.compare(f"{side}_lambda_printed_limit_{m}_{k}", "usual Moyal spectrum",
                                          limit_omega_zero(printed_energy(kmk, m, k)), _theta_half(m - k)))
    return cases


# -- lowering closed forms and derivative identities ----------------------------

def suite_lowering_forms(cfg: SuiteConfig) -> list[Case]:
    cases = []
    for side in ("right", "left"):
        for m in range(1, cfg.lowering_max + 1):
            state = ladder(side, m)
            for k in range(1, m + 3):
                cases.append(Case.compare(f"{side}_lower_{m}_{k}", "star-actions of a on the states",
                                          apply_ladder_lowering(side, state, k),
                                          lowering_closed_form(side, m, k)))
    return cases


def suite_derivative_identities(cfg: SuiteConfig) -> list[Case]:
    return [Case.zero(f"{fam}_k{k}", "derivatives of the ground states", derivative_identity_residual(fam, k))
            for fam in STATE_FAMILIES for k in range(1, 7)]


# -- matrix basis ------------------------------------------------------------------------

def suite_matrix_basis(cfg: SuiteConfig) -> list[Case]:
    cases = []
    b00 = MatrixBasisElement(0, 0)
    b, c = matrix_basis_action("raise_left", b00)
    cases.append(Case.check("raise_left_b00", "creation on the matrix basis",
                            (b.m, b.n) == (1, 0) and c == ONE_ELEMENT and b.norm_tag == (1, 0)))
    b, c = matrix_basis_action("raise_right", b00)
    cases.append(Case.check("raise_right_b00", "creation on the matrix basis",
                            (b.m, b.n) == (0, 1) and c == ONE_ELEMENT and b.norm_tag == (0, 1)))
    b, c = matrix_basis_action("lower_left", b00)
    cases.append(Case.check("a_star_b00", "a * b00 = 0", b.is_zero() and c.is_zero()))
    b, c = matrix_basis_action("lower_right", b00)
    cases.append(Case.check("b00_star_abar", "b00 * abar = 0", b.is_zero() and c.is_zero()))
    cases.append(Case.zero("a_star_f00R_support", "a * b00 = 0",
                           st.star_gen_left("a", fundamental("right").body)))
    cases.append(Case.zero("f00L_star_abar_support", "b00 * abar = 0",
                           st.star_gen_right(fundamental("left").body, "abar")))
    for m in range(4):
        for n in range(4):
            b = MatrixBasisElement(m, n)
            _, E = matrix_basis_action("H_left", b)
            cases.append(Case.compare(f"H_left_b{m}{n}", "matrix basis eigenproblems", E,
                                      printed_energy("right_m", m)))
            _, E2 = matrix_basis_action("H_right", b)
            cases.append(Case.compare(f"H_right_b{m}{n}", "matrix basis eigenproblems", E2,
                                      printed_energy("left_n", n)))
            cases.append(Case.compare(f"H_limits_b{m}{n}", "usual Moyal spectrum",
                                      limit_omega_zero(E) + limit_omega_zero(E2),
                                      _theta_half(m) + _theta_half(n)))
    for m in range(1, cfg.lowering_max + 1):
        b = MatrixBasisElement(m, m)
        for k in range(1, m + 1):
            b, _ = matrix_basis_action("lower_left", b)
            _, E = matrix_basis_action("H_left", b)
            cases.append(Case.compare(f"lambda_H_left_{m}_{k}", "mixed lowered states", E,
                                      printed_energy("lambda_mk_R", m, k)))
        b, _ = matrix_basis_action("lower_left", b)
        b, _ = matrix_basis_action("lower_left", b)
        cases.append(Case.check(f"degenerate_b{m}{m}", "degeneracy rule", b.is_zero()))
        rb = MatrixBasisElement(m, m)
        for _ in range(m + 2):
            rb, _ = matrix_basis_action("lower_right", rb)
        cases.append(Case.check(f"degenerate_right_b{m}{m}", "degeneracy rule", rb.is_zero()))
    return cases


# -- numeric ------------------------------------------------------------------------------

def suite_numeric(cfg: SuiteConfig) -> list[Case]:
    ncfg = cfg.numeric
    cases = []
    f00 = gaussian(1).scale(2)
    P = NumericPoint.from_real(0.3, -0.2, 1.0)
    val = evaluate(f00, P)
    rec = NumericRecord(2 * math.exp(-0.13), val)
    cases.append(Case.check("eval_f00", "usual fundamental state", rec.abs_error < 1e-12, rec.to_dict()))

    rng = _rngs(cfg.seed, "numeric")
    worst = 0.0
    for i in range(cfg.random_cases):
        r = rng(i)
        f, g = random_laurent(r), random_laurent(r)
        pt = NumericPoint(complex(r.uniform(0.3, 1.5), r.uniform(-1, 1)),
                          complex(r.uniform(0.3, 1.5), r.uniform(-1, 1)), r.uniform(0.5, 2.0),
                          independent=True)
        for lhs, rhs in ((evaluate(f + g, pt), evaluate(f, pt) + evaluate(g, pt)),
                         (evaluate(f * g, pt), evaluate(f, pt) * evaluate(g, pt))):
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    cases.append(Case.check("eval_homomorphism", "evaluation is a ring map at w = 0", worst < 1e-12,
                            {"max_rel_error": worst}, note=f"{cfg.random_cases} random pairs"))

    theta = ncfg.theta_val
    for x in SAMPLE_POINTS:
        pt = NumericPoint.from_real(*x, theta)
        expected = evaluate(f00, pt)
        lo = NumericRecord(expected, star_quadrature(f00, f00, pt, _with_nodes(ncfg, 48)), 48)
        hi = NumericRecord(expected, star_quadrature(f00, f00, pt, _with_nodes(ncfg, 96)), 96)
        improved = hi.abs_error <= lo.abs_error / 10 or max(lo.abs_error, hi.abs_error) < QUADRATURE_FLOOR
        cases.append(Case.check(f"quadrature_f00_idempotent_{x[0]}_{x[1]}", "integral form of the product",
                                lo.abs_error < 1e-4 and improved,
                                {"n48": lo.to_dict(), "n96": hi.to_dict()}))
    # pre-floor regime: doubling nodes gains at least 10x
    pt = NumericPoint.from_real(1.0, -0.4, theta)
    expected = evaluate(f00, pt)
    errs = [abs(star_quadrature(f00, f00, pt, _with_nodes(ncfg, nn)) - expected) for nn in (8, 16, 32)]
    cases.append(Case.check("quadrature_convergence", "integral form of the product",
                            errs[1] <= errs[0] / 10 and (errs[2] <= errs[1] / 10 or errs[2] < QUADRATURE_FLOOR),
                            {"errors_8_16_32": errs}))

    for label, poly, side, quad_args in (
        ("abar_f00_star_f00", ABAR.scale(Fraction(1, 2)), "left", lambda h: (h, f00)),
        ("f00_star_a_f00", A.scale(Fraction(1, 2)), "right", lambda h: (f00, h)),
    ):
        # (abar/2) * f00 = abar f00 and f00 * (a/2) = a f00 at w = 0, then idempotence
        symbolic = limit_omega_zero(st.star_series(poly, f00, side))
        h = (poly * f00).scale(2)
        for x in SAMPLE_POINTS[1:3]:
            pt = NumericPoint.from_real(*x, theta)
            rec = NumericRecord(evaluate(symbolic, pt), star_quadrature(*quad_args(h), pt, ncfg),
                                ncfg.quadrature_nodes)
            cases.append(Case.check(f"{label}_{x[0]}_{x[1]}", "integral form vs symbolic product",
                                    rec.abs_error < 1e-8, rec.to_dict()))
    printed = NumericConfig(theta_val=theta, quadrature_nodes=ncfg.quadrature_nodes, kernel="printed")
    pt = NumericPoint.from_real(0.3, -0.2, theta)
    h = ABAR * f00
    rec = NumericRecord(evaluate(h, pt), star_quadrature(f00, h, pt, printed), ncfg.quadrature_nodes)
    cases.append(Case.info("printed_kernel_orientation", "integral form of the product", numeric=rec.to_dict(),
                           note="printed kernel sign evaluates f00 * (abar f00) to (abar f00) * f00"))

    if ncfg.omega_val:
        ptw = NumericPoint.from_real(0.3, -0.2, theta, ncfg.omega_val)
        fR, fL = fundamental("right").body, fundamental("left").body
        q = star_quadrature(fR, fL, ptw, ncfg)
        cases.append(Case.info("quadrature_f00R_f00L_first_order", "integral form of the product",
                               numeric={"value": [q.real, q.imag], "f00R": [evaluate(fR, ptw).real, 0.0]},
                               note="w != 0: e frozen at x, first-order only"))

    for k, q in (((1, 0), (0, 1)), ((0.5, -0.3), (0.2, 0.9)), ((-0.7, 0.4), (0.6, 0.6)), ((1, 1), (1, 1))):
        for th in (0.5, 1.0):
            if th * math.hypot(*k) * math.hypot(*q) > 1:
                continue
            pt = NumericPoint.from_real(0.2, -0.1, th)
            s, fm = plane_wave_check(k, q, pt, NumericConfig(theta_val=th, series_terms=30))
            rec = NumericRecord(fm, s)
            cases.append(Case.check(f"plane_wave_{k}_{q}_theta{th}", "plane-wave product",
                                    rec.abs_error < 1e-8, rec.to_dict()))
    discrepancies = []
    for j in range(4):
        w = 0.02 * 0.5 ** j * complex(0.6, 0.8)
        pt = NumericPoint.from_real(0.8, -0.5, 1.0, w)
        s, fm = plane_wave_check((0.8, 0.3), (-0.2, 0.9), pt, NumericConfig(theta_val=1.0, omega_val=w))
        discrepancies.append(abs(s - fm))
    ratios = [discrepancies[j] / discrepancies[j + 1] for j in range(3)]
    cases.append(Case.check("plane_wave_w_squared", "plane-wave product, first-order twist",
                            all(3.5 <= r <= 4.5 for r in ratios),
                            {"discrepancies": discrepancies, "halving_ratios": ratios}))
    return cases


def _with_nodes(cfg: NumericConfig, nodes: int) -> NumericConfig:
    return NumericConfig(cfg.theta_val, cfg.omega_val, cfg.omegabar_val, nodes, cfg.series_terms, cfg.kernel)


# -- associator (informational) ----------------------------------------------------------

def suite_associator(cfg: SuiteConfig) -> list[Case]:
    x1, x2 = st.coordinate(1), st.coordinate(2)
    f00R = fundamental("right").body
    probes = [("a_abar_1", A, ABAR, ONE_ELEMENT), ("abar_a_1", ABAR, A, ONE_ELEMENT),
              ("a_abar_f00R", A, ABAR, f00R), ("abar_a_f00R", ABAR, A, f00R),
              ("a_a_f00R", A, A, f00R), ("x1_x2_f00R", x1, x2, f00R),
              ("a_abar_abar", A, ABAR, ABAR)]
    rng = _rngs(cfg.seed, "associator")
    for i in range(5):
        r = rng(i)
        probes.append((f"rand{i}", random_polynomial(r, 3, 2), random_polynomial(r, 3, 2), random_laurent(r)))
    cases = []
    for label, f, g, h in probes:
        value = st.associator(f, g, h)
        cases.append(Case.info(f"assoc_{label}", "associativity probe", value,
                               note=f"w -> 0 part {'vanishes' if limit_omega_zero(value).is_zero() else 'nonzero'}"))
    r = rng(99)
    g = random_laurent(r)
    cases.append(Case.info("assoc_unit", "associativity probe",
                           st.associator(ONE_ELEMENT, random_polynomial(r), g)))
    return cases


_SUITES: dict[str, Callable[[SuiteConfig], list[Case]]] = {
    "algebra": suite_algebra,
    "star": suite_star,
    "jacobi": suite_jacobi,
    "leibniz": suite_leibniz,
    "states": suite_states,
    "spectra": suite_spectra,
    "appendix_a": suite_lowering_forms,
    "appendix_b": suite_derivative_identities,
    "matrix_basis": suite_matrix_basis,
    "numeric": suite_numeric,
    "associator": suite_associator,
}


def run_suite(name: str, config: SuiteConfig | None = None) -> Report:
    if name not in _SUITES:
        raise UnknownSuite(name)
    config = config or SuiteConfig()
    config.validate()
    cases = _SUITES[name](config)
    return Report(name, cases, config.seed, config.echo(), required=name not in AUDIT_SUITES)


# -- spectrum tables ------------------------------------------------------------------------

@dataclass
class SpectrumRow:
    level: int
    engine: TwistedElement
    printed: TwistedElement
    residual: TwistedElement
    limit: TwistedElement

    def to_dict(self) -> dict:
        return {"level": self.level, "engine": format_element(self.engine),
                "printed": format_element(self.printed), "residual": format_element(self.residual),
                "limit": format_element(self.limit)}


def spectrum_table(side: str, max_level: int, omega_mode: str = "symbolic",
                   method: str = "series") -> list[SpectrumRow]:
    if max_level > MAX_LEVEL:
        raise LevelTooLarge(f"max_level {max_level} exceeds {MAX_LEVEL}")
    if omega_mode not in ("symbolic", "zero"):
        raise ValueError("omega_mode must be 'symbolic' or 'zero'")
    kind = "right_m" if side == "right" else "left_n"
    rows = []
    for m in range(max_level + 1):
        E = engine_energy_method(side, m, method)
        Pm = printed_energy(kind, m)
        if omega_mode == "zero":
            E, Pm = limit_omega_zero(E), limit_omega_zero(Pm)
        rows.append(SpectrumRow(m, E, Pm, E - Pm, limit_omega_zero(E)))
    return rows


def render_table(rows: list[SpectrumRow]) -> str:
    header = ("level", "engine", "printed", "residual", "w->0")
    data = [(str(r.level), format_element(r.engine), format_element(r.printed),
             format_element(r.residual), format_element(r.limit)) for r in rows]
    widths = [max(len(h), *(len(d[i]) for d in data)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(d, widths)) for d in data]
    return "\n".join(lines)
