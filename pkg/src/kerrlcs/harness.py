"""Suite orchestration: deterministic sampling, named residual checks,
report-only comparison rows for printed formulas, and report serialization.
"""

from __future__ import annotations

import csv
import hashlib
import io
import itertools
import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from . import bridge, kerr, unitary
from .ad import value_of
from .errors import ConfigurationError
from .forms import ext_d, hodge_star, volume_form, wedge
from .forms import STAR_STAR_SIGN, constant_form, minkowski_metric
from .kerr import (CARTESIAN, KS, KSU, CartesianEvent, KSPoint, KerrParams,
                   cartesian_to_ks, derived_scalars, flat_divergence,
                   flat_divergence_closed_form, flat_divergence_paper_alt,
                   j_minus, j_minus_inv, kerr_metric, ks_to_cartesian,
                   lambda_form, lambda_vec, lee_form, minkowski_norm2_vec,
                   oblateness, omega_kerr, omega_kerr_via_lee,
                   radius_from_cartesian, ricci_residual)
from .unitary import (EULER3, EULER4, frame_u2, lee_form_u2,
                      mc_flatness_residuals, mc_frame_closed_form,
                      mc_reconciliation_residual, omega_u2,
                      structure_equation_residual)

PASS = "PASS"
FAIL = "FAIL"
REPORT_ONLY = "REPORT-ONLY"

SUITE_NAMES = ("mc", "lcs", "charts", "metric", "bridge", "cover", "all")


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 20240601
    samples: int = 500
    tol_first_order: float = 1e-9
    tol_second_order: float = 1e-6
    a_values: tuple = (0.5, 1.0, 2.0, 5.0)
    delta_theta: float = 1e-3
    delta_t: float = 1e-3
    sigma_min: float = 1e-8
    t_range: tuple = (0.1, 10.0)
    r_range: tuple = (0.1, 10.0)
    phi_range: tuple = (-10.0, 10.0)

    def __post_init__(self):
        if self.samples < 1:
            raise ConfigurationError("sample count must be >= 1")
        for tol in (self.tol_first_order, self.tol_second_order):
            if tol <= 0:
                raise ConfigurationError("tolerances must be positive")
        for lo, hi in (self.t_range, self.r_range, self.phi_range):
            if not lo < hi:
                raise ConfigurationError("ranges must be nonempty")


@dataclass
class CheckReport:
    name: str
    paper_anchor: str
    samples: int
    max_abs_residual: float
    max_rel_residual: float
    status: str
    notes: str = ""

    def as_dict(self):
        return asdict(self)


def check_rng(config, name):
    """Per-check substream: adding checks never perturbs existing ones."""
    digest = hashlib.sha256(f"{config.seed}:{name}".encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:8], "big"))


def _report(name, anchor, samples, max_abs, tol, notes="", ref=1.0):
    rel = max_abs / max(1.0, abs(ref))
    status = PASS if max_abs <= tol else FAIL
    return CheckReport(name, anchor, samples, float(max_abs), float(rel),
                       status, notes)


def _report_only(name, anchor, samples, notes):
    return CheckReport(name, anchor, samples, 0.0, 0.0, REPORT_ONLY, notes)


def _fmt(x):
    return f"{x:.6g}"


# -- samplers ----------------------------------------------------------------

def sample_ks_points(rng, config, n, avoid_equator=False):
    """KS chart points inside the configured margins (deterministic draws)."""
    t = rng.uniform(*config.t_range, n)
    r = rng.uniform(*config.r_range, n)
    u = rng.uniform(0.0, 1.0, n)
    d = config.delta_theta
    if avoid_equator:
        half = 0.5 * math.pi - 2.0 * d
        theta = np.where(u < 0.5, d + 2.0 * u * half,
                         0.5 * math.pi + d + (2.0 * u - 1.0) * half)
    else:
        theta = d + u * (math.pi - 2.0 * d)
    phi = rng.uniform(*config.phi_range, n)
    return list(zip(t, r, theta, phi))


def sample_ksu_points(rng, config, n, avoid_equator=False):
    return [(t, t + r, th, ph)
            for t, r, th, ph in sample_ks_points(rng, config, n, avoid_equator)]


def sample_euler_points(rng, config, n, margin=1e-3):
    t = rng.uniform(*config.t_range, n)
    alpha = rng.uniform(-math.pi, math.pi, n)
    beta = margin + rng.uniform(0.0, 1.0, n) * (math.pi - 2.0 * margin)
    gamma = rng.uniform(-math.pi, math.pi, n)
    return list(zip(t, alpha, beta, gamma))


def _max_coeff_diff(form_a, form_b, points):
    worst = 0.0
    scale = 0.0
    for p in points:
        av = form_a.values_at(p)
        bv = form_b.values_at(p)
        for I in av:
            worst = max(worst, abs(av[I] - bv[I]))
            scale = max(scale, abs(av[I]))
    return worst, scale


# -- Maurer-Cartan suite -----------------------------------------------------

def check_mc_flatness(config):
    rng = check_rng(config, "mc_flatness")
    n = config.samples
    pts = [(a, b, g) for _, a, b, g in sample_euler_points(rng, config, n)]
    worst = max(mc_flatness_residuals(p) for p in pts)
    return _report("mc_flatness", "d(theta) + theta ^ theta = 0 for theta = g^-1 dg",
                   n, worst, 1e-10)


def check_mc_structure(config):
    rng = check_rng(config, "mc_structure")
    n = config.samples
    pts = [(a, b, g) for _, a, b, g in sample_euler_points(rng, config, n)]
    best_sign, best = None, math.inf
    for sign in (1.0, -1.0):
        worst = max(structure_equation_residual(p, sign) for p in pts)
        if worst < best:
            best_sign, best = sign, worst
    notes = f"measured sign {best_sign:+.0f} (printed convention uses +1)"
    return _report("mc_structure_equations",
                   "d(alpha) = beta ^ gamma and cyclic, single measured sign",
                   n, best, 1e-10, notes)


def check_mc_reconciliation(config):
    rng = check_rng(config, "mc_reconciliation")
    n = min(config.samples, 200)
    pts = [(a, b, g) for _, a, b, g in sample_euler_points(rng, config, n)]
    worst = max(mc_reconciliation_residual(p) for p in pts)
    notes = ("pinned: (theta_i, theta_j, theta_k) = (alpha, gamma, beta) forms "
             "with coefficient arguments (2a, 2b + pi/2, 2c), scale 1, sign +1")
    return _report("mc_frame_reconciliation",
                   "group frame g^-1 dg vs closed-form frame", n, worst, 1e-10,
                   notes)


def report_paper_mc_sign(config):
    rng = check_rng(config, "paper_mc_sign")
    pts = [(a, b, g) for _, a, b, g in sample_euler_points(rng, config, 3)]
    frame = mc_frame_closed_form()
    rows = []
    for p in pts:
        da = ext_d(frame.alpha_form).values_at(p)[(1, 2)]
        bg = wedge(frame.beta_form, frame.gamma_form).values_at(p)[(1, 2)]
        rows.append(f"d(alpha)={_fmt(da)} beta^gamma={_fmt(bg)}")
    notes = ("printed sign +1 confirmed; normalization differs from the group "
             "frame by the pinned argument map (2a, 2b + pi/2, 2c). " +
             "; ".join(rows))
    return _report_only("paper_mc_sign_convention",
                        "structure-equation sign and frame normalization", 3, notes)


# -- lcs suite ---------------------------------------------------------------

def check_lcs_u2(config):
    rng = check_rng(config, "lcs_u2")
    n = config.samples
    pts = sample_euler_points(rng, config, n)
    om = omega_u2()
    lhs = ext_d(om) - wedge(om, lee_form_u2())
    worst = max(max(abs(v) for v in lhs.values_at(p).values()) for p in pts)
    return _report("lcs_law_u2", "d(omega) = omega ^ lee on the U(2) cover",
                   n, worst, 1e-9)


def check_lcs_kerr(config):
    rng = check_rng(config, "lcs_kerr")
    n = config.samples
    worst = 0.0
    for a in config.a_values:
        om = omega_kerr(KerrParams(a), KSU)
        lhs = ext_d(om) - wedge(om, lee_form(KSU))
        pts = sample_ksu_points(rng, config, n)
        worst = max(worst,
                    max(max(abs(v) for v in lhs.values_at(p).values())
                        for p in pts))
    return _report("lcs_law_kerr", "d(omega) = omega ^ lee on the Kerr cover",
                   n * len(config.a_values), worst, 1e-9)


def check_omega_kerr_construction(config):
    rng = check_rng(config, "omega_construction")
    n = config.samples
    worst = 0.0
    for a in config.a_values:
        par = KerrParams(a)
        pts = sample_ksu_points(rng, config, n)
        w, _ = _max_coeff_diff(omega_kerr(par, KSU), omega_kerr_via_lee(par, KSU), pts)
        worst = max(worst, w)
    return _report("omega_kerr_construction",
                   "t^-1 d(t lambda) = d(lambda) + lambda ^ lee",
                   n * len(config.a_values), worst, 1e-10)


def check_omega_u2_wedge_ratio(config):
    rng = check_rng(config, "omega_u2_wedge")
    n = min(config.samples, 200)
    pts = sample_euler_points(rng, config, n)
    om = omega_u2()
    a4, b4, c4 = frame_u2()
    rhs = wedge(wedge(a4, b4), wedge(c4, lee_form_u2())).scale(2.0)
    lhs = wedge(om, om)
    worst, scale = _max_coeff_diff(lhs, rhs, pts)
    return _report("omega_u2_wedge_ratio",
                   "omega ^ omega = 2 alpha ^ beta ^ gamma ^ lee",
                   n, worst, 1e-9, ref=scale)


def check_omega_u2_nondegenerate(config):
    rng = check_rng(config, "omega_u2_nondeg")
    n = config.samples
    pts = sample_euler_points(rng, config, n)
    lhs = wedge(omega_u2(), omega_u2())
    smallest = min(abs(lhs.values_at(p)[(0, 1, 2, 3)]) for p in pts)
    status = PASS if smallest > 1e-10 else FAIL
    return CheckReport("omega_u2_nondegenerate",
                       "omega ^ omega is a volume form on the sampled domain",
                       n, 0.0, 0.0, status,
                       f"min |omega^omega| = {_fmt(smallest)}")


def check_omega_kerr_nondegenerate(config):
    rng = check_rng(config, "omega_kerr_nondeg")
    n = config.samples
    worst_zero = 0.0
    smallest = math.inf
    for a in config.a_values:
        ww = wedge(omega_kerr(KerrParams(a), KSU), omega_kerr(KerrParams(a), KSU))
        pts = sample_ksu_points(rng, config, n, avoid_equator=True)
        for p in pts:
            t, _, th, _ = p
            c = ww.values_at(p)[(0, 1, 2, 3)]
            if abs(t * math.sin(2.0 * th)) > 1e-3:
                smallest = min(smallest, abs(c))
        # degeneracy exactly on the equatorial locus
        eq = (1.0, 1.3, 0.5 * math.pi, 0.4)
        worst_zero = max(worst_zero, abs(ww.values_at(eq)[(0, 1, 2, 3)]))
    ok = smallest > 0.0 and worst_zero <= 1e-12
    return CheckReport("omega_kerr_nondegenerate",
                       "omega ^ omega vanishes exactly where t sin(2 theta) = 0",
                       n * len(config.a_values), float(worst_zero),
                       float(worst_zero), PASS if ok else FAIL,
                       f"min |omega^omega| off locus = {_fmt(smallest)}; "
                       f"|omega^omega| at theta = pi/2: {_fmt(worst_zero)}")


def check_contact(config):
    rng = check_rng(config, "contact")
    n = config.samples
    worst = 0.0
    worst_equator = 0.0
    for a in config.a_values:
        par = KerrParams(a)
        form = kerr.contact_coefficient_form(par)
        pts = sample_ksu_points(rng, config, n)
        for p in pts:
            c = form.values_at(p)[(1, 2, 3)]
            worst = max(worst, abs(c - a * math.sin(2.0 * p[2])))
        eq = (1.0, 1.3, 0.5 * math.pi, 0.4)
        worst_equator = max(worst_equator, abs(form.values_at(eq)[(1, 2, 3)]))
    ok = worst <= 1e-10 and worst_equator <= 1e-12
    return CheckReport("contact_coefficient",
                       "lambda ^ d(lambda) = a sin(2 theta) du ^ dtheta ^ dphi",
                       n * len(config.a_values), float(worst), float(worst),
                       PASS if ok else FAIL,
                       f"equatorial vanishing residual {_fmt(worst_equator)}")


def report_paper_dtlam_constant(config):
    rng = check_rng(config, "paper_dtlam")
    pts = sample_ks_points(rng, config, 3)
    rows = []
    for p in pts:
        t, r, th, ph = p
        a = 2.0
        par = KerrParams(a)
        lam = lambda_form(par, KS)
        tlam = lam.scale(lambda q: q[0])
        sq = wedge(ext_d(tlam), ext_d(tlam))
        # coefficient in the dr^dtheta^dphi^dt ordering (odd permutation of
        # the chart ordering dt^dr^dtheta^dphi)
        oracle = -sq.values_at(p)[(0, 1, 2, 3)]
        printed = -2.0 * a * math.sin(2.0 * th)
        rows.append(f"t={_fmt(t)} theta={_fmt(th)}: printed {_fmt(printed)} "
                    f"oracle {_fmt(oracle)}")
    notes = ("printed d(t lambda)^2 constant drops a factor of t relative to "
             "the direct wedge; " + "; ".join(rows))
    return _report_only("paper_dtlam_wedge_constant",
                        "d(t lambda) ^ d(t lambda) printed coefficient", 3, notes)


def report_paper_lee_sign(config):
    rng = check_rng(config, "paper_lee_sign")
    pts = sample_ksu_points(rng, config, 3)
    om = omega_kerr(KerrParams(2.0), KSU)
    rows = []
    for p in pts:
        plus = ext_d(lambda_form(KerrParams(2.0), KSU)) + \
            wedge(lambda_form(KerrParams(2.0), KSU),
                  lee_form(KSU).scale(-1.0))
        diff_plus = max(abs(om.values_at(p)[I] - plus.values_at(p)[I])
                        for I in om.values_at(p))
        rows.append(f"t={_fmt(p[0])}: residual with +dt/t Lee form {_fmt(diff_plus)}")
    notes = ("printed Lee form +dt/t fails the construction identity; the "
             "internal Lee form is -dt/t. " + "; ".join(rows))
    return _report_only("paper_lee_form_sign", "sign of the Lee form dt/t", 3, notes)


# -- charts suite ------------------------------------------------------------

def check_j_roundtrip(config):
    rng = check_rng(config, "j_roundtrip")
    n = config.samples
    xs = rng.uniform(-20.0, 20.0, n)
    # relative residual: the absolute error scales with |x| through the
    # cancellation in j_minus at large arguments
    worst = max(abs(j_minus(j_minus_inv(x)) - x) / max(1.0, abs(x))
                for x in xs)
    return _report("j_minus_roundtrip", "j_minus(j_minus_inv(x)) = x", n, worst, 1e-12)


def check_roundtrip(config):
    rng = check_rng(config, "roundtrip")
    n = config.samples
    worst = 0.0
    for a in config.a_values:
        par = KerrParams(a)
        for p in sample_ks_points(rng, config, n):
            e = ks_to_cartesian(KSPoint(*p), par)
            p2 = cartesian_to_ks(e, par)
            e2 = ks_to_cartesian(p2, par)
            worst = max(worst, max(abs(x - y) for x, y in
                                   zip(e.as_tuple(), e2.as_tuple())))
    return _report("chart_roundtrip",
                   "forward chart after inverse chart is the identity",
                   n * len(config.a_values), worst, 1e-9)


def check_quartic_agreement(config):
    rng = check_rng(config, "quartic")
    n = config.samples
    worst = 0.0
    for a in config.a_values:
        par = KerrParams(a)
        for p in sample_ks_points(rng, config, n):
            e = ks_to_cartesian(KSPoint(*p), par)
            if abs(e.z) < 1e-6:
                continue
            r_prop = cartesian_to_ks(e, par).r
            r_quartic = value_of(radius_from_cartesian(e.x, e.y, e.z, a))
            worst = max(worst, abs(r_prop - r_quartic))
    return _report("quartic_oracle_agreement",
                   "r from the arcsinh inverse equals the positive quartic root",
                   n * len(config.a_values), worst, 1e-10)


def check_scale_invariance(config):
    rng = check_rng(config, "scale_invariance")
    n = min(config.samples, 100)
    c = 3.7
    worst = 0.0
    for a in config.a_values:
        par = KerrParams(a)
        for p in sample_ks_points(rng, config, n):
            e = ks_to_cartesian(KSPoint(*p), par)
            if abs(e.z) < 1e-6:
                continue
            o1 = oblateness(e, a)
            o2 = oblateness(CartesianEvent(c * e.t, c * e.x, c * e.y, c * e.z),
                            c * a)
            k1 = math.asinh(math.copysign(1.0, e.z) * o1)
            k2 = math.asinh(math.copysign(1.0, e.z) * o2)
            worst = max(worst, abs(o1 - o2), abs(k1 - k2))
    return _report("scale_invariance",
                   "oblateness and kappa are pure numbers under rescaling",
                   n * len(config.a_values), worst, 1e-12)


def check_kappa_forms(config):
    rng = check_rng(config, "kappa_forms")
    n = min(config.samples, 200)
    worst = 0.0
    used = 0
    for a in config.a_values:
        par = KerrParams(a)
        for p in sample_ks_points(rng, config, n):
            e = ks_to_cartesian(KSPoint(*p), par)
            if e.z < 1e-3:
                continue
            used += 1
            r = cartesian_to_ks(e, par).r
            k1 = math.asinh(oblateness(e, a))
            k2 = math.log(r * r / (a * e.z))
            worst = max(worst, abs(k1 - k2))
    return _report("kappa_two_closed_forms",
                   "arcsinh(s o) agrees with log(r^2 / (a z)) for z > 0",
                   used, worst, 1e-10)


def report_paper_x2_identity(config):
    rng = check_rng(config, "paper_x2")
    a = 2.0
    par = KerrParams(a)
    pts = sample_ks_points(rng, config, 3)
    rows = []
    for p in pts:
        e = ks_to_cartesian(KSPoint(*p), par)
        x2 = e.x ** 2 + e.y ** 2 + e.z ** 2
        r = p[1]
        printed = a * a * (1.0 - e.z ** 2 / (r * r))
        corrected = r * r + a * a * (1.0 - e.z ** 2 / (r * r))
        rows.append(f"|x|^2={_fmt(x2)} printed={_fmt(printed)} "
                    f"with r^2 term={_fmt(corrected)}")
    notes = ("printed identity omits the r^2 term forced by the forward chart; "
             + "; ".join(rows))
    return _report_only("paper_x2_identity",
                        "|x|^2 = r^2 + a^2 (1 - z^2/r^2)", 3, notes)


def report_paper_nu_chain(config):
    rng = check_rng(config, "paper_nu")
    a = 2.0
    par = KerrParams(a)
    pts = sample_ks_points(rng, config, 3)
    rows = []
    for p in pts:
        kp = KSPoint(*p)
        d = derived_scalars(kp, par)
        r = kp.r
        sech = 1.0 / math.cosh(d.kappa) if d.kappa is not None else float("nan")
        e3 = 1.0 / math.sqrt(1.0 + d.oblateness ** 2) \
            if d.oblateness is not None else float("nan")
        rows.append(f"nu={_fmt(d.nu)} 2r*sech(kappa)={_fmt(2 * r * sech)} "
                    f"(1+o^2)^-1/2={_fmt(e3)}")
    notes = ("the three printed expressions for the twist disagree "
             "dimensionally; measured relation |nu| = sech(kappa) / (2r), "
             "sech(kappa) = (1+o^2)^-1/2. " + "; ".join(rows))
    return _report_only("paper_nu_chain", "twist nu equality chain", 3, notes)


# -- metric suite ------------------------------------------------------------

def check_nullity(config):
    rng = check_rng(config, "nullity")
    n = config.samples
    worst = 0.0
    for a in config.a_values:
        par = KerrParams(a)
        g = kerr_metric(par)
        for p in sample_ks_points(rng, config, n):
            e = ks_to_cartesian(KSPoint(*p), par)
            v = lambda_vec(e, par)
            worst = max(worst, abs(minkowski_norm2_vec(v)))
            G = np.array(g.values_at(e.as_tuple()))
            worst = max(worst, abs(float(np.asarray(v) @ G @ np.asarray(v))))
    return _report("null_field",
                   "the defining field is null for both eta and g",
                   n * len(config.a_values), worst, 1e-12)


def check_signature(config):
    rng = check_rng(config, "signature")
    n = config.samples
    bad = 0
    for a in config.a_values:
        par = KerrParams(a)
        g = kerr_metric(par)
        for p in sample_ks_points(rng, config, n):
            e = ks_to_cartesian(KSPoint(*p), par)
            eig = np.sort(np.linalg.eigvalsh(np.array(g.values_at(e.as_tuple()))))
            if not (eig[0] < 0 and np.all(eig[1:] > 0)):
                bad += 1
    status = PASS if bad == 0 else FAIL
    return CheckReport("lorentz_signature",
                       "metric eigenvalues have signs (-,+,+,+)",
                       n * len(config.a_values), float(bad), float(bad), status,
                       f"{bad} points with wrong signature")


def check_divergence(config):
    rng = check_rng(config, "divergence")
    n = config.samples
    worst = 0.0
    for a in config.a_values:
        par = KerrParams(a)
        for p in sample_ks_points(rng, config, n):
            e = ks_to_cartesian(KSPoint(*p), par)
            worst = max(worst, abs(flat_divergence(par, e)
                                   - flat_divergence_closed_form(par, e)))
    return _report("flat_divergence",
                   "AD divergence of the null field equals 2r / Sigma",
                   n * len(config.a_values), worst, 1e-8)


def check_ricci(config):
    rng = check_rng(config, "ricci")
    n = 100
    worst = 0.0
    for a in (0.5, 1.0, 2.0):
        par = KerrParams(a)
        for p in sample_ks_points(rng, config, n):
            e = ks_to_cartesian(KSPoint(*p), par)
            sigma = p[1] ** 2 + a * a * math.cos(p[2]) ** 2
            if sigma < 1e-3:
                continue
            worst = max(worst, ricci_residual(par, e))
    return _report("ricci_flatness", "max |Ricci_ij| of the Kerr metric",
                   3 * n, worst, config.tol_second_order)


def check_hodge_involution(config):
    rng = check_rng(config, "hodge")
    n = min(config.samples, 50)
    worst = 0.0
    par = KerrParams(1.0)
    metrics = [minkowski_metric(KS), kerr_metric(par, KS)]
    for g in metrics:
        pts = sample_ks_points(rng, config, n)
        for k in range(5):
            coeffs = {I: rng.uniform(-1, 1)
                      for I in itertools.combinations(range(4), k)}
            a_form = constant_form(KS, k, coeffs)
            ss = hodge_star(g, hodge_star(g, a_form))
            want = STAR_STAR_SIGN[k]
            for p in pts[:10]:
                av = a_form.values_at(p)
                sv = ss.values_at(p)
                worst = max(worst, max(abs(sv[I] - want * av[I]) for I in av))
    return _report("hodge_double_star",
                   "star(star(a)) = sign(k) a in Lorentz signature",
                   2 * 5 * 10, worst, 1e-9)


def check_volume_form(config):
    rng = check_rng(config, "volume")
    n = min(config.samples, 50)
    worst = 0.0
    for a in config.a_values:
        g = kerr_metric(KerrParams(a), KS)
        vol = volume_form(g)
        for p in sample_ks_points(rng, config, n):
            c = vol.values_at(p)[(0, 1, 2, 3)]
            G = np.array(g.values_at(p))
            oracle = math.sqrt(-np.linalg.det(G))
            worst = max(worst, abs(c - oracle))
    return _report("volume_form_determinant",
                   "star(1) coefficient equals sqrt(-det g)",
                   n * len(config.a_values), worst, 1e-9)


def report_paper_dvol(config):
    rng = check_rng(config, "paper_dvol")
    a = 1.0
    g = kerr_metric(KerrParams(a), KS)
    rows = []
    for p in sample_ks_points(rng, config, 3):
        G = np.array(g.values_at(p))
        oracle = math.sqrt(-np.linalg.det(G))
        r, th = p[1], p[2]
        sigma = r * r + a * a * math.cos(th) ** 2
        printed = sigma ** 2 * math.sin(th) ** 2
        rows.append(f"sqrt(-det g)={_fmt(oracle)} printed={_fmt(printed)} "
                    f"Sigma*sin={_fmt(sigma * math.sin(th))}")
    notes = ("printed volume factor (Sigma^2 sin^2 theta) is the square of the "
             "determinant oracle (Sigma sin theta); " + "; ".join(rows))
    return _report_only("paper_dvol_exponent", "volume form printed exponent",
                        3, notes)


def report_paper_divergence_alt(config):
    rng = check_rng(config, "paper_div_alt")
    a = 2.0
    par = KerrParams(a)
    rows = []
    got = 0
    for p in sample_ks_points(rng, config, 20):
        if got == 3:
            break
        e = ks_to_cartesian(KSPoint(*p), par)
        if abs(e.z) < 1e-3:
            continue
        got += 1
        rows.append(f"AD={_fmt(flat_divergence(par, e))} "
                    f"closed={_fmt(flat_divergence_closed_form(par, e))} "
                    f"printed-alt={_fmt(flat_divergence_paper_alt(par, e))}")
    notes = ("printed alternative -2s (1+o^2)^-1/2 exp(kappa) does not match "
             "the AD divergence; " + "; ".join(rows))
    return _report_only("paper_divergence_alt",
                        "alternative printed form of div(lambda)", 3, notes)


# -- bridge suite ------------------------------------------------------------

def check_lambda_identity(config):
    rng = check_rng(config, "lambda_identity")
    n = config.samples
    worst = 0.0
    for a in config.a_values:
        pts = sample_ksu_points(rng, config, n)
        worst = max(worst, bridge.verify_lambda_identity(a, pts))
    return _report("bridge_lambda_identity",
                   "lambda equals the substitution pullback of alpha",
                   n * len(config.a_values), worst, 1e-9)


def check_omega_identity(config):
    rng = check_rng(config, "omega_identity")
    n = config.samples
    worst = 0.0
    for a in config.a_values:
        pts = sample_ksu_points(rng, config, n)
        worst = max(worst, bridge.verify_omega_identity(a, pts))
    return _report("bridge_omega_identity",
                   "omega_Kerr equals the substitution pullback of omega_U2",
                   n * len(config.a_values), worst, 1e-9)


def check_substitution_naturality(config):
    rng = check_rng(config, "substitution_naturality")
    n = min(config.samples, 200)
    worst = 0.0
    for a in config.a_values:
        pts = sample_ksu_points(rng, config, n)
        worst = max(worst, bridge.substitution_naturality_residual(a, pts))
    return _report("substitution_naturality",
                   "pullback commutes with d along the substitution",
                   n * len(config.a_values), worst, 1e-10)


def check_substitution_roundtrip(config):
    rng = check_rng(config, "substitution_roundtrip")
    n = min(config.samples, 100)
    worst = 0.0
    for a in config.a_values:
        sub = bridge.substitution_map(a)
        for p in sample_ksu_points(rng, config, n):
            q = sub.inverse(sub.fn(p))
            worst = max(worst, max(abs(x - y) for x, y in zip(p, q)))
    return _report("substitution_roundtrip",
                   "the linear substitution has an exact inverse",
                   n * len(config.a_values), worst, 1e-12)


def check_reparam_det(config):
    worst = 0.0
    notes = []
    for a in (0.5, 1.0, 2.0, 3.0, 4.0, 5.0):
        m = bridge.ReparamMatrix(a)
        worst = max(worst, abs(np.linalg.det(m.matrix()) - (-a)))
        integral = np.all(m.matrix() == np.round(m.matrix()))
        if bool(integral) != m.is_integral():
            worst = max(worst, 1.0)
        notes.append(f"a={a:g}: integral={m.is_integral()}")
    return _report("reparam_determinant",
                   "det of the substitution matrix is -a; integral iff a in 2Z",
                   6, worst, 1e-12, "; ".join(notes))


def report_paper_minpoly(config):
    rows = []
    for a in (0.5, 2.0, 3.0):
        computed, printed, diff = bridge.char_poly_a(a)
        rows.append(f"a={a:g}: computed {np.array2string(computed, precision=3)} "
                    f"printed {np.array2string(printed, precision=3)}")
    notes = ("constant term of 2 det(T I - [a]) is 2a, twice the printed "
             "value; other coefficients agree. " + "; ".join(rows))
    return _report_only("paper_minpoly_constant",
                        "printed cubic for the substitution matrix", 3, notes)


# -- cover suite -------------------------------------------------------------

def _cover_count_check(config, name, cover, want):
    rng = check_rng(config, name)
    n = 100
    bad = 0
    for _ in range(n):
        target = rng.uniform(0.0, 2.0 * math.pi, 3)
        pre = bridge.torus_cover_preimages(cover, target)
        if len(pre) != want:
            bad += 1
    status = PASS if bad == 0 else FAIL
    return CheckReport(name, f"torus cover has exactly {want} preimages",
                       n, float(bad), float(bad), status,
                       f"{bad} targets with wrong preimage count")


def check_cover_two(config):
    return _cover_count_check(config, "cover_degree_two", bridge.COVER_2, 2)


def check_cover_identity(config):
    return _cover_count_check(config, "cover_identity", bridge.COVER_IDENTITY, 1)


def check_cover_diag(config):
    return _cover_count_check(config, "cover_diag222", bridge.COVER_DIAG2, 8)


def check_deck_element(config):
    rng = check_rng(config, "deck_element")
    n = 50
    worst = 0.0
    for _ in range(n):
        target = rng.uniform(0.0, 2.0 * math.pi, 3)
        d = np.abs(bridge.deck_difference(bridge.COVER_2, target))
        want = np.array([0.0, math.pi, 0.0])
        worst = max(worst, float(np.max(np.abs(d - want))))
    return _report("cover_deck_element",
                   "the two preimages differ by the half-lattice beta shift",
                   n, worst, 1e-9)


# -- suite registry ----------------------------------------------------------

SUITES = {
    "mc": [check_mc_flatness, check_mc_structure, check_mc_reconciliation,
           report_paper_mc_sign],
    "lcs": [check_lcs_u2, check_lcs_kerr, check_omega_kerr_construction,
            check_omega_u2_wedge_ratio, check_omega_u2_nondegenerate,
            check_omega_kerr_nondegenerate, check_contact,
            report_paper_dtlam_constant, report_paper_lee_sign],
    "charts": [check_j_roundtrip, check_roundtrip, check_quartic_agreement,
               check_scale_invariance, check_kappa_forms,
               report_paper_x2_identity, report_paper_nu_chain],
    "metric": [check_nullity, check_signature, check_divergence,
               check_hodge_involution, check_volume_form, check_ricci,
               report_paper_dvol, report_paper_divergence_alt],
    "bridge": [check_lambda_identity, check_omega_identity,
               check_substitution_naturality, check_substitution_roundtrip,
               check_reparam_det, report_paper_minpoly],
    "cover": [check_cover_two, check_cover_identity, check_cover_diag,
              check_deck_element],
}


def run_suite(config, suite="all"):
    """Run the named suite (or all of them) and return CheckReports."""
    if suite == "all":
        checks = []
        for name in ("mc", "lcs", "charts", "metric", "bridge", "cover"):
            checks.extend(SUITES[name])
    elif suite in SUITES:
        checks = SUITES[suite]
    else:
        raise ConfigurationError(
            f"unknown suite {suite!r}; choose one of {', '.join(SUITE_NAMES)}"
        )
    return [fn(config) for fn in checks]


def suite_passed(reports):
    return all(r.status != FAIL for r in reports)


def report_json(config, reports):
    payload = {"config": asdict(config),
               "checks": [r.as_dict() for r in reports]}
    return json.dumps(payload, sort_keys=True, indent=2)


def report_csv(config, reports):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "paper_anchor", "samples", "max_abs_residual",
                     "max_rel_residual", "status", "notes"])
    for r in reports:
        writer.writerow([r.name, r.paper_anchor, r.samples,
                         repr(r.max_abs_residual), repr(r.max_rel_residual),
                         r.status, r.notes])
    return buf.getvalue()


# -- point evaluation --------------------------------------------------------

EVAL_QUANTITIES = ("lambda", "dlambda", "omega", "omega_wedge", "nu",
                   "oblateness", "kappa", "metric", "volume", "divergence",
                   "ricci", "mc_frame", "cayley")


def eval_quantity(name, chart, point, params):
    """Evaluate a named quantity at a chart point; returns a flat dict."""
    from .unitary import cayley, hermitian_from_event

    if name not in EVAL_QUANTITIES:
        raise ConfigurationError(
            f"unknown quantity {name!r}; choose one of {', '.join(EVAL_QUANTITIES)}"
        )
    chart_obj = {"ks": KS, "ksu": KSU, "cartesian": CARTESIAN,
                 "euler": EULER4}.get(chart)
    if chart_obj is None:
        raise ConfigurationError(f"unknown chart {chart!r}")
    point = tuple(point)

    if name == "lambda":
        if chart_obj == CARTESIAN:
            comps = kerr.lambda_covector_components(point, params.a)
            return {f"dx{i}": value_of(c) for i, c in enumerate(comps)}
        form = lambda_form(params, chart_obj)
        return _form_row(form, point)
    if name == "dlambda":
        return _form_row(ext_d(lambda_form(params, chart_obj)), point)
    if name == "omega":
        return _form_row(omega_kerr(params, chart_obj), point)
    if name == "omega_wedge":
        om = omega_kerr(params, chart_obj)
        return _form_row(wedge(om, om), point)
    if name in ("nu", "oblateness", "kappa"):
        d = derived_scalars(KSPoint(*point), params)
        return {name: getattr(d, {"nu": "nu", "oblateness": "oblateness",
                                  "kappa": "kappa"}[name])}
    if name == "metric":
        g = kerr_metric(params, chart_obj)
        G = g.values_at(point)
        return {f"g_{i}{j}": G[i][j] for i in range(4) for j in range(i, 4)}
    if name == "volume":
        return _form_row(volume_form(kerr_metric(params, chart_obj)), point)
    if name == "divergence":
        e = CartesianEvent(*point)
        return {"ad": flat_divergence(params, e),
                "closed_form": flat_divergence_closed_form(params, e)}
    if name == "ricci":
        return {"max_abs_ricci": ricci_residual(params, CartesianEvent(*point))}
    if name == "mc_frame":
        frame = mc_frame_closed_form()
        p3 = point[1:] if len(point) == 4 else point
        out = {}
        for label, f in zip(("alpha", "beta", "gamma"), frame.as_tuple()):
            for I, v in f.values_at(p3).items():
                out[f"{label}[d{EULER3.coords[I[0]]}]"] = v
        return out
    if name == "cayley":
        U = cayley(hermitian_from_event(point))
        return {f"U_{i}{j}_{part}": getattr(U[i][j], part)
                for i in range(2) for j in range(2) for part in ("real", "imag")}
    raise AssertionError("unreachable")


def _form_row(form, point):
    coords = form.chart.coords
    out = {}
    for I, v in form.values_at(point).items():
        label = "^".join(f"d{coords[i]}" for i in I) or "1"
        out[label] = v
    return out


def roundtrip_sweep(config, total=10000):
    """Aggregate chart round-trip residual over a large deterministic sweep."""
    rng = check_rng(config, "roundtrip_sweep")
    per_a = max(1, total // len(config.a_values))
    worst = 0.0
    for a in config.a_values:
        par = KerrParams(a)
        for p in sample_ks_points(rng, config, per_a):
            e = ks_to_cartesian(KSPoint(*p), par)
            e2 = ks_to_cartesian(cartesian_to_ks(e, par), par)
            worst = max(worst, max(abs(x - y) for x, y in
                                   zip(e.as_tuple(), e2.as_tuple())))
    return _report("roundtrip_sweep", "large-sample chart round-trip",
                   per_a * len(config.a_values), worst, 1e-9)


COVER_MATRICES = {
    "[2]": bridge.COVER_2,
    "2": bridge.COVER_2,
    "identity": bridge.COVER_IDENTITY,
    "diag(2,2,2)": bridge.COVER_DIAG2,
}


def cover_check(config, matrix="[2]"):
    """Preimage-count check for a named torus cover matrix."""
    try:
        cover = COVER_MATRICES[matrix]
    except KeyError:
        raise ConfigurationError(
            f"unknown cover matrix {matrix!r}; choose from "
            f"{', '.join(sorted(COVER_MATRICES))}"
        ) from None
    return _cover_count_check(config, f"cover_{matrix}", cover, cover.degree())
