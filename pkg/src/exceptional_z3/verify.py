"""Case and lemma runners producing structured pass/fail reports.

A report is {"case", "checks": [{"name", "pass", "detail"}], "expected_dim",
"computed_dim", "elapsed_ms"}.  Runners never raise on a failed check; an
exception inside a check becomes a failing entry with the message as detail.
"""
from __future__ import annotations

import json
import os
import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

from . import autohoms as ah
from . import fieldla, liealg
from .cayley import cxmul, qmul
from .cycarray import CycArray
from .groups import CAYLEY8, JORDAN27, AlgMap, extend_g2
from .jordan import E, F
from .cayley import Octonion
from .models import cmatmul, qmatmul
from .scalar import CycScalar, DEFAULT_CONDUCTOR, cos2pi, imag_unit, root_of_unity, sin2pi

ANGLES = 36  # sampled angles are 2 pi k / 36


# reports ------------------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "pass": bool(self.passed), "detail": self.detail}


@dataclass
class Report:
    case: str
    checks: list = field(default_factory=list)
    expected_dim: int | None = None
    computed_dim: int | None = None
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(Check(name, bool(passed), detail))
        return passed

    def run(self, name: str, fn):
        """Evaluate fn() -> bool or (bool, detail); exceptions fail the check."""
        try:
            out = fn()
        except (ValueError, ArithmeticError, ZeroDivisionError) as exc:
            return self.add(name, False, f"error: {exc}")
        if isinstance(out, tuple):
            return self.add(name, out[0], out[1])
        return self.add(name, out, "holds exactly" if out else "fails exactly")

    def to_dict(self):
        return {
            "case": self.case,
            "checks": [c.to_dict() for c in self.checks],
            "expected_dim": self.expected_dim,
            "computed_dim": self.computed_dim,
            "elapsed_ms": int(self.elapsed_ms),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            d["case"],
            [Check(c["name"], c["pass"], c["detail"]) for c in d["checks"]],
            d["expected_dim"],
            d["computed_dim"],
            d["elapsed_ms"],
        )


# context ------------------------------------------------------------------------


class Ctx:
    """Constants and named maps at one conductor."""

    def __init__(self, conductor: int = DEFAULT_CONDUCTOR):
        self.n = conductor

    def auto(self, name: str, space: str = JORDAN27) -> AlgMap:
        return ah.named_auto(name, space, self.n)

    @cached_property
    def w(self):
        return root_of_unity(1, 3, self.n)

    @cached_property
    def nu(self):
        return root_of_unity(1, 9, self.n)

    @cached_property
    def i(self):
        return imag_unit(self.n)

    @cached_property
    def W(self):
        return ah.cx_omega(self.n)

    @cached_property
    def Wb(self):
        return self.W.lin([[1, 0], [0, -1]])

    def cx(self, re=0, im=0):
        return ah.cx(re, im, self.n)

    def quat(self, *a):
        return ah.quat(*a, conductor=self.n)

    @cached_property
    def one(self):
        return self.quat(1)

    @cached_property
    def I3(self):
        return ah.cx_eye(3, self.n)

    def cx_scalar_matrix(self, c, size=3):
        return ah.cx_scalar_matrix(c, size)

    def eye(self, size):
        return CycArray.eye(size, self.n)

    def fdiag(self, entries):
        return ah.field_diag(entries, self.n)

    def cdiag(self, *entries):
        return ah.cx_diag(*entries)

    def f431cx(self, a, b):
        return ah.field_to_cx(ah.f431(a, b))

    def identity(self, space=JORDAN27):
        return AlgMap.identity(space, self.n)


def _s(x, n):
    return x if isinstance(x, CycScalar) else CycScalar(x, n)


# parameter domains and sampling ---------------------------------------------------------


def _rotation(size: int, i: int, j: int, k: int, n: int) -> CycArray:
    c, s = cos2pi(k, ANGLES, n), sin2pi(k, ANGLES, n)
    z = CycScalar(0, n)
    one = CycScalar(1, n)
    rows = [[one if a == b else z for b in range(size)] for a in range(size)]
    rows[i][i], rows[j][j], rows[i][j], rows[j][i] = c, c, -s, s
    return CycArray.from_scalars(rows, n)


def _phases(rng, size: int, special: bool, n: int) -> CycArray:
    ks = [rng.randrange(ANGLES) for _ in range(size)]
    if special:
        ks[-1] = -sum(ks[:-1])
    return ah.field_diag([root_of_unity(k, ANGLES, n) for k in ks], n)


def _block_rotation(rng, sizes, n: int) -> CycArray:
    size = sum(sizes)
    out = CycArray.eye(size, n)
    pos = 0
    for s in sizes:
        for _ in range(2 * (s - 1)):
            i, j = rng.sample(range(pos, pos + s), 2)
            out = out @ _rotation(size, i, j, rng.randrange(1, ANGLES), n)
        pos += s
    return out


def _unit_quat(rng, n: int) -> CycArray:
    def axis(ax):
        k = rng.randrange(ANGLES)
        v = [CycScalar(0, n)] * 4
        v = list(v)
        v[0], v[ax] = cos2pi(k, ANGLES, n), sin2pi(k, ANGLES, n)
        return CycArray.from_scalars(v, n)

    return qmul(qmul(axis(1), axis(2)), axis(1))


@dataclass(frozen=True)
class Domain:
    """A compact parameter group: kind plus size data."""

    kind: str
    size: int = 0
    sizes: tuple = ()

    @property
    def label(self) -> str:
        if self.kind == "block":
            return "S(" + "x".join(f"U({s})" for s in self.sizes) + ")"
        if self.kind in ("SU", "U"):
            return f"{self.kind}({self.size})"
        if self.kind in ("SUcx", "Ucx"):
            return f"{self.kind[:-2]}({self.size},C)"
        return self.kind

    def sample(self, rng, ctx: Ctx):
        n = ctx.n
        k = self.kind
        if k == "UnitCx":
            return ah.cx_exp(rng.randrange(ANGLES), ANGLES, n)
        if k == "UnitField":
            return root_of_unity(rng.randrange(ANGLES), ANGLES, n)
        if k == "UnitQuat":
            return _unit_quat(rng, n)
        if k in ("SU", "U", "SUcx", "Ucx"):
            special = k.startswith("SU")
            m = _phases(rng, self.size, special, n) @ _block_rotation(rng, (self.size,), n)
            m = m @ _phases(rng, self.size, True, n)
            return ah.field_to_cx(m) if k.endswith("cx") else m
        if k == "block":
            size = sum(self.sizes)
            return _phases(rng, size, True, n) @ _block_rotation(rng, self.sizes, n) @ _phases(rng, size, True, n)
        if k == "Sp3":
            d1 = ah.quat_diag(*[_unit_quat(rng, n) for _ in range(3)])
            d2 = ah.quat_diag(*[_unit_quat(rng, n) for _ in range(3)])
            r = ah.cx_to_quat(ah.field_to_cx(_block_rotation(rng, (3,), n)))
            return qmatmul(qmatmul(d1, r), d2)
        if k == "Spin8":
            a = ah.cx_exp(rng.randrange(ANGLES), ANGLES, n)
            ab = a.lin([[1, 0], [0, -1]])
            su = Domain("SUcx", 3)
            g2 = extend_g2(ah.phi_g2_w3(su.sample(rng, ctx)))
            f4 = ah.phi_f4_w3(su.sample(rng, ctx), ah.cx_diag(cxmul(ab, ab), a, a))
            return g2 @ f4
        if k == "Spin10":
            # phi_E6_gamma(p, diag(A, B)) fixes E1 exactly when det A = 1
            p = _unit_quat(rng, n)
            a, b = Domain("SU", 2).sample(rng, ctx), Domain("SU", 4).sample(rng, ctx)
            return ah.phi_e6_gamma(p, ah.block_diag([a, b]))
        raise ValueError(f"unknown domain {k}")

    def mul(self, x, y):
        k = self.kind
        if k == "UnitCx":
            return cxmul(x, y)
        if k == "UnitField":
            return x * y
        if k == "UnitQuat":
            return qmul(x, y)
        if k in ("SU", "U", "block"):
            return x @ y
        if k in ("SUcx", "Ucx"):
            return cmatmul(x, y)
        if k == "Sp3":
            return qmatmul(x, y)
        if k in ("Spin8", "Spin10"):
            return x @ y
        raise ValueError(k)

    def validate(self, x) -> None:
        k = self.kind
        if k == "UnitCx":
            ah.check_unit_cx(x)
        elif k == "UnitField":
            ah.check_unit_field(x)
        elif k == "UnitQuat":
            ah.check_unit_quat(x)
        elif k in ("SU", "U"):
            ah.check_field_unitary(x, special=k == "SU")
        elif k in ("SUcx", "Ucx"):
            ah.check_cx_unitary(x, special=k == "SUcx")
        elif k == "block":
            ah.check_block_unitary(x, self.sizes)
        elif k == "Sp3":
            ah.check_sp3(x)
        elif k == "Spin8":
            n = x.conductor
            if not (x.is_e6() and x.stabilizes([E(1, n), F(1, Octonion.basis(0, n)), F(1, Octonion.basis(1, n))])):
                raise ValueError("not in the stabilizer of E1, F1(1), F1(e1)")
        elif k == "Spin10":
            if not (x.is_e6() and x.stabilizes([E(1, x.conductor)])):
                raise ValueError("not in the stabilizer of E1")


_NAMED_DOMAINS = {
    "UnitCx": Domain("UnitCx"),
    "UnitField": Domain("UnitField"),
    "UnitQuat": Domain("UnitQuat"),
    "Sp(1)": Domain("UnitQuat"),
    "U(1)": Domain("UnitCx"),
    "Sp(3)": Domain("Sp3"),
    "Spin(8)": Domain("Spin8"),
    "Spin(10)": Domain("Spin10"),
}


def parse_domain(text: str) -> Domain:
    if text in _NAMED_DOMAINS:
        return _NAMED_DOMAINS[text]
    m = re.fullmatch(r"(S?U)\((\d+)(,C)?\)", text)
    if m:
        return Domain(m.group(1) + ("cx" if m.group(3) else ""), int(m.group(2)))
    m = re.fullmatch(r"S\((U\(\d+\)(?:xU\(\d+\))*)\)", text)
    if m:
        return Domain("block", sizes=tuple(int(v) for v in re.findall(r"\d+", m.group(1))))
    raise ValueError(f"unknown domain {text}")


def sample_params(domain, count: int, seed: int, conductor: int = DEFAULT_CONDUCTOR) -> list:
    """Deterministic exact samples; each one is validated against the domain."""
    d = parse_domain(domain) if isinstance(domain, str) else domain
    rng = random.Random(f"{d.label}:{seed}")
    ctx = Ctx(conductor)
    out = []
    for _ in range(count):
        x = d.sample(rng, ctx)
        d.validate(x)
        out.append(x)
    return out


def _sample_tuples(domains, count: int, seed: int, ctx: Ctx, tag: str):
    rng = random.Random(f"{tag}:{seed}")
    out = []
    for _ in range(count):
        params = tuple(d.sample(rng, ctx) for d in domains)
        for d, x in zip(domains, params):
            d.validate(x)
        out.append(params)
    return out


# relational formulas ----------------------------------------------------------------------


@dataclass(frozen=True)
class Formula:
    fid: str
    group: str
    auto: str
    text: str
    build: object  # ctx -> (lhs AlgMap, rhs AlgMap)


def _formulas():
    def ga(name):
        return lambda c: c.auto(name, CAYLEY8)

    def ja(name):
        return lambda c: c.auto(name)

    def eps(c, k):
        return ah.cx_exp(k, 9, c.n)

    out = [
        Formula("3.1.4(1)", "G2", "gamma3", "gamma3 = phi_G2_gamma(omega, 1)",
                lambda c: (ga("gamma3")(c), ah.phi_g2_gamma(ah.cx_to_quat(c.W), c.one))),
        Formula("3.1.4(1)", "G2", "w3", "w3 = phi_G2_gamma(1, conj omega)",
                lambda c: (ga("w3")(c), ah.phi_g2_gamma(c.one, ah.cx_to_quat(c.Wb)))),
        Formula("3.1.4(2)", "G2", "gamma3", "gamma3 = phi_G2_w3(diag(1, omega, conj omega))",
                lambda c: (ga("gamma3")(c), ah.phi_g2_w3(c.cdiag(c.cx(1), c.W, c.Wb)))),
        Formula("3.1.4(2)", "G2", "w3", "w3 = phi_G2_w3(omega E)",
                lambda c: (ga("w3")(c), ah.phi_g2_w3(c.cx_scalar_matrix(c.W)))),
        Formula("3.2.6(1)", "F4", "gamma3", "gamma3 = phi_F4_gamma(omega, E)",
                lambda c: (ja("gamma3")(c), ah.phi_f4_gamma(ah.cx_to_quat(c.W), ah.quat_eye(3, c.n)))),
        Formula("3.2.6(1)", "F4", "sigma3", "sigma3 = phi_F4_gamma(1, diag(1, conj omega, omega))",
                lambda c: (ja("sigma3")(c), ah.phi_f4_gamma(c.one, ah.cx_to_quat(c.cdiag(c.cx(1), c.Wb, c.W))))),
        Formula("3.2.6(1)", "F4", "w3", "w3 = phi_F4_gamma(1, conj omega E)",
                lambda c: (ja("w3")(c), ah.phi_f4_gamma(c.one, ah.cx_to_quat(c.cx_scalar_matrix(c.Wb))))),
        Formula("3.2.6(2)", "F4", "gamma3", "gamma3 = phi_F4_w3(diag(1, omega, conj omega), E)",
                lambda c: (ja("gamma3")(c), ah.phi_f4_w3(c.cdiag(c.cx(1), c.W, c.Wb), c.I3))),
        Formula("3.2.6(2)", "F4", "sigma3", "sigma3 = phi_F4_w3(E, diag(1, conj omega, omega))",
                lambda c: (ja("sigma3")(c), ah.phi_f4_w3(c.I3, c.cdiag(c.cx(1), c.Wb, c.W)))),
        Formula("3.2.6(2)", "F4", "w3", "w3 = phi_F4_w3(omega E, E)",
                lambda c: (ja("w3")(c), ah.phi_f4_w3(c.cx_scalar_matrix(c.W), c.I3))),
        Formula("3.3.8(1)", "E6", "gamma3", "gamma3 = phi_E6_gamma(omega, E)",
                lambda c: (ja("gamma3")(c), ah.phi_e6_gamma(ah.cx_to_quat(c.W), c.eye(6)))),
        Formula("3.3.8(1)", "E6", "sigma3", "sigma3 = phi_E6_gamma(1, diag(1, 1, tau omega, omega, omega, tau omega))",
                lambda c: (ja("sigma3")(c), ah.phi_e6_gamma(c.one, c.fdiag([1, 1, c.w.conj(), c.w, c.w, c.w.conj()])))),
        Formula("3.3.8(1)", "E6", "nu3", "nu3 = phi_E6_gamma(1, A_nu)",
                lambda c: (ja("nu3")(c), ah.phi_e6_gamma(c.one, ah.a_nu(c.n)))),
        Formula("3.3.8(1)", "E6", "mu3", "mu3 = phi_E6_gamma(1, diag(nu^-2, nu^2, nu^-1, nu, nu^-1, nu))",
                lambda c: (ja("mu3")(c), ah.phi_e6_gamma(c.one, c.fdiag(
                    [c.nu ** -2, c.nu ** 2, c.nu ** -1, c.nu, c.nu ** -1, c.nu])))),
        Formula("3.3.8(1)", "E6", "w3", "w3 = phi_E6_gamma(1, diag(tau omega, omega, tau omega, omega, tau omega, omega))",
                lambda c: (ja("w3")(c), ah.phi_e6_gamma(c.one, c.fdiag([c.w.conj(), c.w] * 3)))),
        Formula("3.3.8(2)", "E6", "gamma3", "gamma3 = phi_E6_w3(diag(1, omega, conj omega), E, E)",
                lambda c: (ja("gamma3")(c), ah.phi_e6_w3(c.cdiag(c.cx(1), c.W, c.Wb), c.I3, c.I3))),
        Formula("3.3.8(2)", "E6", "sigma3", "sigma3 = phi_E6_w3(E, diag(1, conj omega, omega), diag(1, conj omega, omega))",
                lambda c: (ja("sigma3")(c), ah.phi_e6_w3(c.I3, c.cdiag(c.cx(1), c.Wb, c.W), c.cdiag(c.cx(1), c.Wb, c.W)))),
        Formula("3.3.8(2)", "E6", "mu3", "mu3 = phi_E6_w3(E, diag(eps^-2, eps, eps), diag(eps^2, eps^-1, eps^-1))",
                lambda c: (ja("mu3")(c), ah.phi_e6_w3(c.I3, c.cdiag(eps(c, -2), eps(c, 1), eps(c, 1)),
                                                       c.cdiag(eps(c, 2), eps(c, -1), eps(c, -1))))),
        Formula("3.3.8(2)", "E6", "w3", "w3 = phi_E6_w3(omega E, E, E)",
                lambda c: (ja("w3")(c), ah.phi_e6_w3(c.cx_scalar_matrix(c.W), c.I3, c.I3))),
    ]
    return out


FORMULAS = _formulas()


def _check_formula(report: Report, ctx: Ctx, f: Formula):
    def run():
        lhs, rhs = f.build(ctx)
        if lhs == rhs:
            return True, "exact matrix identity"
        detail = "matrices differ"
        if lhs.in_group("E6") and rhs.in_group("E6") and lhs.compose(rhs).is_identity():
            detail += "; the right side is the inverse of the left side"
        return False, detail

    report.run(f"formula {f.text}", run)


# automorphism-level checks ------------------------------------------------------------------------


def _space(group: str) -> str:
    return CAYLEY8 if group == "G2" else JORDAN27


def _check_order(report: Report, ctx: Ctx, name: str, group: str):
    g = ctx.auto(name, _space(group))

    def run():
        c3 = g.power(3)
        if name in ("nu3", "mu3"):
            ok = c3.equals_scalar(ctx.w) and g.power(9).is_identity()
            return ok, "cube is omega times the identity and the ninth power is the identity" if ok else "cube is not omega 1"
        ok = c3.is_identity() and not g.is_identity()
        return ok, "order 3" if ok else "order is not 3"

    report.run(f"order of {name}", run)


def _check_membership(report: Report, name: str, g: AlgMap, group: str):
    report.run(f"{name} in {group}", lambda: g.in_group(group))


# case specifications --------------------------------------------------------------------------------


@dataclass
class CaseSpec:
    id: int
    group: str
    sigma: str
    tau: str
    expected_dim: int
    expected_group: str
    domains: tuple
    hom: object  # (ctx, params) -> AlgMap
    kernel_elems: list  # (label, ctx -> AlgMap expected to be the identity)
    lemma_formulas: list = field(default_factory=list)
    conjugacy: tuple | None = None  # (delta, primed automorphism, unprimed automorphism)
    extra: object = None  # (report, ctx) -> None


def _s_quat(c: Ctx, s):
    return ah.cx_to_quat(s)


def _formulas_for(group: str, names) -> list:
    return [f for f in FORMULAS if f.group == group and f.auto in names]


def _minus_e(c: Ctx, k: int):
    return c.eye(k) * -1


def _case_specs() -> dict:
    specs = {}

    def add(spec):
        specs[spec.id] = spec

    U1 = Domain("UnitCx")
    SP1 = Domain("UnitQuat")
    SU3C = Domain("SUcx", 3)

    # Case 1
    add(CaseSpec(
        1, "G2", "gamma3", "w3", 2, "(U(1)xU(1))/Z2", (U1, U1),
        lambda c, p: ah.phi_g2_gamma(ah.cx_to_quat(p[0]), ah.cx_to_quat(p[1])),
        [("(-1,-1)", lambda c: ah.phi_g2_gamma(c.quat(-1), c.quat(-1)))],
        _formulas_for("G2", ("gamma3", "w3")),
    ))

    # Case 2
    def hom2(c, p):
        return ah.phi_f4_gamma(ah.cx_to_quat(p[0]), ah.g421_f421(p[1], p[2]))

    add(CaseSpec(
        2, "F4", "gamma3", "sigma3", 8, "(U(1)xSp(1)xU(2))/Z2", (U1, SP1, Domain("Ucx", 2)),
        hom2,
        [("(-1,-1,-E)", lambda c: hom2(c, (c.cx(-1), c.quat(-1), ah.cx_scalar_matrix(c.cx(-1), 2))))],
        _formulas_for("F4", ("gamma3", "sigma3")),
    ))

    # Case 3: phi_F4_w3(f431(a, b), A)
    def hom3(c, p):
        return ah.phi_f4_w3(c.f431cx(p[0], p[1]), p[2])

    add(CaseSpec(
        3, "F4", "gamma3", "w3", 10, "(U(1)xU(1)xSU(3))/Z3", (Domain("UnitField"), Domain("UnitField"), SU3C),
        hom3,
        [("(omega,omega,omega E)", lambda c: hom3(c, (c.w, c.w, c.cx_scalar_matrix(c.W)))),
         ("(omega^-1,omega^-1,omega^-1 E)", lambda c: hom3(c, (c.w.conj(), c.w.conj(), c.cx_scalar_matrix(c.Wb))))],
        _formulas_for("F4", ("gamma3", "w3")),
    ))

    # Case 4: phi_F4_w3(P, f431(a, b))
    def hom4(c, p):
        return ah.phi_f4_w3(p[0], c.f431cx(p[1], p[2]))

    add(CaseSpec(
        4, "F4", "sigma3", "w3", 10, "(SU(3)xU(1)xU(1))/Z3", (SU3C, Domain("UnitField"), Domain("UnitField")),
        hom4,
        [("(omega E,omega,omega)", lambda c: hom4(c, (c.cx_scalar_matrix(c.W), c.w, c.w))),
         ("(omega^-1 E,omega^-1,omega^-1)", lambda c: hom4(c, (c.cx_scalar_matrix(c.Wb), c.w.conj(), c.w.conj())))],
        _formulas_for("F4", ("sigma3", "w3")),
    ))

    # Cases 5 to 8: phi_E6_gamma(s, P) into the primed pair
    def hom_sp(c, p):
        return ah.phi_e6_gamma(ah.cx_to_quat(p[0]), p[1])

    def hom_qp(c, p):
        return ah.phi_e6_gamma(p[0], p[1])

    def sp_kernel(c):
        return hom_sp(c, (c.cx(-1), _minus_e(c, 6)))

    def qp_kernel(c):
        return hom_qp(c, (c.quat(-1), _minus_e(c, 6)))

    def e(c, k):
        return c.eye(k)

    def me(c, k):
        return c.eye(k) * -1

    # Case 5 listed elements through f452 (s, a, b, A, B, C)
    def c5(c, s, a, b, A, B, C):
        return hom_sp(c, (c.cx(s), ah.f452(_s(a, c.n), _s(b, c.n), A, B, C)))

    add(CaseSpec(
        5, "E6", "gamma3", "sigma3", 12, "(U(1)^3xSU(2)^3)/Z2^4", (U1, Domain("block", sizes=(2, 2, 2))),
        hom_sp,
        [("(-1,-E)", sp_kernel)] + [
            (f"listed {lab}", fn) for lab, fn in [
                ("(-1,1,1,-E,-E,E)", lambda c: c5(c, -1, 1, 1, me(c, 2), me(c, 2), e(c, 2))),
                ("(-1,1,-1,-E,E,E)", lambda c: c5(c, -1, 1, -1, me(c, 2), e(c, 2), e(c, 2))),
                ("(-1,-1,1,-E,-E,E)", lambda c: c5(c, -1, -1, 1, me(c, 2), me(c, 2), e(c, 2))),
                ("(-1,-1,-1,E,E,E)", lambda c: c5(c, -1, -1, -1, e(c, 2), e(c, 2), e(c, 2))),
            ]],
        _formulas_for("E6", ("gamma3", "sigma3")),
        ("deltaR", "sigma3p", "sigma3"),
    ))

    # Case 6 listed elements through f461 (s, t, T); the fifth roots need conductor 180
    def c6(s, k, minus=False):
        def build(c):
            c180 = Ctx(180) if c.n % 5 else c
            t = root_of_unity(k, 5, c180.n) if not minus else CycScalar(-1, c180.n)
            T = c180.eye(5) * (t.inv() if not minus else -1)
            return hom_sp(c180, (c180.cx(s), ah.f461(t, T)))
        return build

    add(CaseSpec(
        6, "E6", "gamma3", "nu3", 26, "(U(1)xU(1)xSU(5))/(Z2xZ5)", (U1, Domain("block", sizes=(1, 5))),
        hom_sp,
        [("(-1,-E)", sp_kernel), ("listed (-1,-1,-E)", c6(-1, 0, minus=True))]
        + [(f"listed (1,eps_{k},eps_{k}^-1 E)", c6(1, k)) for k in range(5)],
        _formulas_for("E6", ("gamma3", "nu3")),
    ))

    # Case 7 listed elements through f472 (s, a, b, c, A, B)
    def c7(hom, first):
        def build(c, s, a, b, cc, A, B):
            x = first(c, s)
            return hom(c, (x, ah.f472(_s(a, c.n), _s(b, c.n), _s(cc, c.n), A, B)))
        return build

    def listed_472(hom, first):
        b = c7(hom, first)

        def iu(c, k):
            return c.i ** k

        return [
            ("listed (1,1,-1,1,E,-E)", lambda c: b(c, 1, 1, -1, 1, e(c, 2), me(c, 2))),
            ("listed (1,1,-1,-1,-E,E)", lambda c: b(c, 1, 1, -1, -1, me(c, 2), e(c, 2))),
            ("listed (1,-1,-1,1,E,E) (reading of a garbled entry)", lambda c: b(c, 1, -1, -1, 1, e(c, 2), e(c, 2))),
            ("listed (-1,i,i,1,-E,E)", lambda c: b(c, -1, iu(c, 1), iu(c, 1), 1, me(c, 2), e(c, 2))),
            ("listed (-1,-i,-i,1,-E,E)", lambda c: b(c, -1, iu(c, 3), iu(c, 3), 1, me(c, 2), e(c, 2))),
        ]

    add(CaseSpec(
        7, "E6", "gamma3", "mu3", 10, "(U(1)^4xSU(2)^2)/(Z2xZ2xZ4)", (U1, Domain("block", sizes=(1, 1, 2, 2))),
        hom_sp,
        [("(-1,-E)", sp_kernel)] + listed_472(hom_sp, lambda c, s: c.cx(s)),
        _formulas_for("E6", ("gamma3", "mu3")),
        ("deltaQ", "mu3p", "mu3"),
    ))

    # Case 8 listed elements through f482 (s, a, A, B)
    def c8(c, s, a, A, B):
        return hom_sp(c, (c.cx(s), ah.f482(_s(a, c.n), A, B)))

    add(CaseSpec(
        8, "E6", "gamma3", "w3", 18, "(U(1)xU(1)xSU(3)xSU(3))/(Z2xZ3)", (U1, Domain("block", sizes=(3, 3))),
        hom_sp,
        [("(-1,-E)", sp_kernel),
         ("listed (-1,-1,E,E)", lambda c: c8(c, -1, -1, e(c, 3), e(c, 3))),
         ("listed (1,omega,omega^-1 E,omega E)", lambda c: c8(c, 1, c.w, e(c, 3) * c.w.conj(), e(c, 3) * c.w)),
         ("listed (1,omega^-1,omega E,omega^-1 E)", lambda c: c8(c, 1, c.w.conj(), e(c, 3) * c.w, e(c, 3) * c.w.conj()))],
        _formulas_for("E6", ("gamma3", "w3")),
        ("deltaN", "w3p", "w3"),
    ))

    # Case 9: phi_E6_gamma(q, P) into (sigma3', nu3)
    add(CaseSpec(
        9, "E6", "sigma3", "nu3", 12, "(Sp(1)xU(1)^3xSU(2)^2)/(Z2xZ2xZ4)", (SP1, Domain("block", sizes=(1, 1, 2, 2))),
        hom_qp,
        [("(-1,-E)", qp_kernel)] + listed_472(hom_qp, lambda c, s: c.quat(s)),
        _formulas_for("E6", ("sigma3", "nu3")),
        ("deltaR", "sigma3p", "sigma3"),
    ))

    # Case 10: phi_6sigma(theta) D_a beta with beta in Spin(8)
    def hom10(c, p):
        return ah.phi6sigma(p[0]) @ ah.D(p[1]) @ p[2]

    def k10_i(c, sign):
        i = c.i if sign > 0 else c.i.conj()
        a = c.cx(0, sign)
        beta = ah.phi6sigma(i.conj()) @ ah.D(c.cx(0, -sign))
        return ah.phi6sigma(i) @ ah.D(a) @ beta

    add(CaseSpec(
        10, "E6", "sigma3", "mu3", 30, "(U(1)xSpin(2)xSpin(8))/(Z2xZ4)", (Domain("UnitField"), U1, Domain("Spin8")),
        hom10,
        [("(1,sigma,sigma)", lambda c: ah.D(c.cx(-1)) @ c.auto("sigma")),
         ("(i,D_e1,phi6sigma(-i) D_-e1)", lambda c: k10_i(c, 1)),
         ("(-1,sigma,1)", lambda c: ah.phi6sigma(CycScalar(-1, c.n)) @ ah.D(c.cx(-1))),
         ("(-i,D_-e1,phi6sigma(i) D_e1)", lambda c: k10_i(c, -1))],
        _formulas_for("E6", ("sigma3", "mu3")),
        None,
        _case10_extra,
    ))

    # Cases 11 and 14: phi_E6_w3(L, f431(a, b), f431(c, d))
    def hom11(c, p):
        return ah.phi_e6_w3(p[0], c.f431cx(p[1], p[2]), c.f431cx(p[3], p[4]))

    def k11(c, inv):
        w = c.w.conj() if inv else c.w
        m = c.cx_scalar_matrix(c.Wb if inv else c.W)
        return hom11(c, (m, w, w, w, w))

    UF = Domain("UnitField")
    for cid, pair in ((11, ("sigma3", "w3")), (14, ("mu3", "w3"))):
        add(CaseSpec(
            cid, "E6", pair[0], pair[1], 12, "(SU(3)xU(1)^4)/Z3", (SU3C, UF, UF, UF, UF),
            hom11,
            [("(omega E,omega,omega,omega,omega)", lambda c: k11(c, False)),
             ("(omega^-1 E,omega^-1,omega^-1,omega^-1,omega^-1)", lambda c: k11(c, True))],
            _formulas_for("E6", pair),
        ))

    # Case 12: phi_E6_gamma(q, P) into (nu3, mu3')
    add(CaseSpec(
        12, "E6", "nu3", "mu3", 12, "(Sp(1)xU(1)^3xSU(2)^2)/(Z2xZ2xZ4)", (SP1, Domain("block", sizes=(1, 1, 2, 2))),
        hom_qp,
        [("(-1,-E)", qp_kernel)] + listed_472(hom_qp, lambda c, s: c.quat(s)),
        _formulas_for("E6", ("nu3", "mu3")),
        ("deltaQ", "mu3p", "mu3"),
    ))

    # Case 13: phi_E6_gamma(q, P) into (nu3, w3'); listed through f4133 (q, a, b, A, B)
    def c13(c, q, a, b, A, B):
        return hom_qp(c, (c.quat(q), ah.f4133(_s(a, c.n), _s(b, c.n), A, B)))

    add(CaseSpec(
        13, "E6", "nu3", "w3", 16, "(Sp(1)xU(1)xSU(2)xSU(3))/(Z2xZ2xZ3)", (SP1, Domain("block", sizes=(1, 2, 3))),
        hom_qp,
        [("(-1,-E)", qp_kernel),
         ("listed (1,-1,1,-E,E)", lambda c: c13(c, 1, -1, 1, me(c, 2), e(c, 3))),
         ("listed (-1,-1,-1,E,E)", lambda c: c13(c, -1, -1, -1, e(c, 2), e(c, 3))),
         ("listed (1,1,omega,E,omega^-1 E)", lambda c: c13(c, 1, 1, c.w, e(c, 2), e(c, 3) * c.w.conj())),
         ("listed (1,1,omega^-1,E,omega E)", lambda c: c13(c, 1, 1, c.w.conj(), e(c, 2), e(c, 3) * c.w))],
        _formulas_for("E6", ("nu3", "w3")),
        ("deltaN", "w3p", "w3"),
    ))
    return specs


def _case10_extra(report: Report, ctx: Ctx):
    e6 = liealg.e6_basis()

    def run():
        p_joint = e6.fixed_projector([ctx.auto("sigma3"), ctx.auto("mu3")])
        p_s3 = e6.fixed_projector([ctx.auto("sigma3")])
        return liealg.same_image(p_joint, p_s3), "projector images compared exactly"

    report.run("fixed subspace of (sigma3, mu3) equals fixed subspace of sigma3", run)


CASES = _case_specs()


def _pair_names(spec: CaseSpec):
    """Automorphism pair the restricted hom lands in (primed when a conjugator is used)."""
    if spec.conjugacy is None:
        return spec.sigma, spec.tau
    _, primed, unprimed = spec.conjugacy
    return tuple(primed if x == unprimed else x for x in (spec.sigma, spec.tau))


def run_case(cid: int, samples: int = 8, seed: int = 0, conductor: int = DEFAULT_CONDUCTOR) -> Report:
    if cid not in CASES:
        raise ValueError(f"case must be 1..14, got {cid}")
    start = time.perf_counter()
    spec = CASES[cid]
    ctx = Ctx(conductor)
    rep = Report(f"case-{cid}", expected_dim=spec.expected_dim)
    space = _space(spec.group)
    sig, tau = ctx.auto(spec.sigma, space), ctx.auto(spec.tau, space)

    # (a) orders
    for name in (spec.sigma, spec.tau):
        _check_order(rep, ctx, name, spec.group)
    # (b) commutativity
    rep.run(f"{spec.sigma} and {spec.tau} commute", lambda: sig.commutes(tau))
    # (c) membership
    _check_membership(rep, spec.sigma, sig, spec.group)
    _check_membership(rep, spec.tau, tau, spec.group)
    # (d) relational formulas
    for f in spec.lemma_formulas:
        _check_formula(rep, ctx, f)
    # (e) well-definedness on samples
    a_name, b_name = _pair_names(spec)
    pa, pb = ctx.auto(a_name, space), ctx.auto(b_name, space)
    params = _sample_tuples(spec.domains, samples, seed, ctx, f"case{cid}")
    bad, bad_conj = [], []
    delta = ctx.auto(spec.conjugacy[0]) if spec.conjugacy else None
    for k, p in enumerate(params):
        try:
            for d, x in zip(spec.domains, p):
                d.validate(x)
            g = spec.hom(ctx, p)
            if not (g.in_group(spec.group) and g.commutes(pa) and g.commutes(pb)):
                bad.append(k)
            if delta is not None:
                h = g.conjugate_by(delta)
                if not (h.commutes(sig) and h.commutes(tau)):
                    bad_conj.append(k)
        except (ValueError, ArithmeticError) as exc:
            bad.append(k)
            rep.add(f"sample {k} evaluation", False, f"error: {exc}")
    dom = " x ".join(d.label for d in spec.domains)
    rep.add(
        f"restricted hom images lie in {spec.group} and commute with {a_name}, {b_name}",
        not bad,
        f"{samples - len(bad)}/{samples} samples from {dom}" + (f"; failing {bad}" if bad else ""),
    )
    if delta is not None:
        rep.add(
            f"{spec.conjugacy[0]}-conjugated images commute with {spec.sigma}, {spec.tau}",
            not bad_conj,
            f"{samples - len(bad_conj)}/{samples} samples" + (f"; failing {bad_conj}" if bad_conj else ""),
        )
    # (f) kernel elements
    for label, build in spec.kernel_elems:
        rep.run(f"kernel element {label} maps to the identity", lambda b=build: _identity_detail(b(ctx)))
    # (g) fixed dimension
    basis = liealg.basis_for(spec.group.lower())

    def fixed():
        d = basis.fixed_dim([sig, tau])
        rep.computed_dim = d
        return d == spec.expected_dim, f"computed {d}, expected {spec.expected_dim}"

    rep.run(f"dim of the fixed subalgebra of ({spec.sigma}, {spec.tau})", fixed)
    if spec.conjugacy is not None:
        def fixed_primed():
            d = basis.fixed_dim([pa, pb])
            return d == spec.expected_dim, f"computed {d} for ({a_name}, {b_name}), expected {spec.expected_dim}"

        rep.run(f"dim of the fixed subalgebra of ({a_name}, {b_name})", fixed_primed)
    # (h) conjugacy
    if spec.conjugacy is not None:
        dname, primed, unprimed = spec.conjugacy
        other = spec.tau if spec.sigma == unprimed else spec.sigma
        u, p = ctx.auto(unprimed), ctx.auto(primed)
        rep.run(f"{unprimed} {dname} = {dname} {primed}", lambda: u.compose(delta) == delta.compose(p))
        rep.run(f"{dname} commutes with {other}", lambda: delta.commutes(ctx.auto(other)))
    if spec.extra is not None:
        spec.extra(rep, ctx)
    rep.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return rep


# lemma suites ------------------------------------------------------------------------------------------


def _hom_law(rep: Report, name: str, domains, build, samples: int, seed: int, ctx: Ctx, compare=None):
    """build(params) -> map or matrix; checks build(xy) = build(x) build(y) on sampled pairs."""
    pairs = list(zip(_sample_tuples(domains, samples, seed, ctx, f"{name}:x"),
                     _sample_tuples(domains, samples, seed, ctx, f"{name}:y")))
    bad = []
    for k, (x, y) in enumerate(pairs):
        xy = tuple(d.mul(a, b) for d, a, b in zip(domains, x, y))
        lhs = build(xy)
        fx, fy = build(x), build(y)
        rhs = compare(fx, fy) if compare else fx @ fy
        if not lhs == rhs:
            bad.append(k)
    rep.add(f"homomorphism law for {name}", not bad,
            f"{len(pairs) - len(bad)}/{len(pairs)} sampled pairs" + (f"; failing {bad}" if bad else ""))


def _images(rep: Report, name: str, domains, build, group: str, commute_with, samples: int, seed: int, ctx: Ctx,
            stabilize=None):
    params = _sample_tuples(domains, samples, seed, ctx, f"{name}:img")
    maps = [build(p) for p in params]

    def tally(label, pred):
        bad = [k for k, g in enumerate(maps) if not pred(g)]
        rep.add(label, not bad, f"{len(maps) - len(bad)}/{len(maps)} samples" + (f"; failing {bad}" if bad else ""))

    tally(f"images of {name} lie in {group}", lambda g: g.in_group(group))
    for h in commute_with:
        tally(f"images of {name} commute with {h.name}", lambda g, h=h: g.commutes(h))
    if stabilize is not None:
        tally(f"images of {name} fix the given elements", lambda g: g.stabilizes(stabilize))


def _kernel(rep: Report, label: str, fn):
    rep.run(f"kernel element {label} maps to the identity", lambda: _identity_detail(fn()))


def _fixed(rep: Report, algebra: str, names, expected: int, ctx: Ctx, space=JORDAN27):
    basis = liealg.basis_for(algebra)
    gs = [ctx.auto(n, space) for n in names]

    def run():
        d = basis.fixed_dim(gs)
        rep.computed_dim = d
        return d == expected, f"computed {d}, expected {expected}"

    rep.expected_dim = expected
    rep.run(f"dim of the fixed subalgebra of {algebra} under {', '.join(names)}", run)


def _identity_detail(g: AlgMap):
    if g.is_identity():
        return True, "identity"
    return False, "image is not the identity"


def _matrix_detail(m: CycArray):
    if _matrix_is_identity(m):
        return True, "identity matrix"
    return False, "image is not the identity matrix"


def _matrix_is_identity(m: CycArray) -> bool:
    return m == CycArray.eye(m.shape[0], m.conductor)


def _lemma_suites():
    U1 = Domain("UnitCx")
    UF = Domain("UnitField")
    SP1 = Domain("UnitQuat")
    SU3C = Domain("SUcx", 3)

    def s_prop_311(rep, c, n, seed):
        build = lambda p: ah.phi_g2_gamma(p[0], p[1])
        _hom_law(rep, "phi_G2_gamma", (SP1, SP1), build, n, seed, c)
        _images(rep, "phi_G2_gamma", (SP1, SP1), build, "G2", [c.auto("gamma", CAYLEY8)], n, seed, c)
        _kernel(rep, "(-1,-1)", lambda: build((c.quat(-1), c.quat(-1))))

    def s_thm_312(rep, c, n, seed):
        build = lambda p: ah.phi_g2_gamma(ah.cx_to_quat(p[0]), p[1])
        _images(rep, "phi_G2_gamma on U(1) x Sp(1)", (U1, SP1), build, "G2", [c.auto("gamma3", CAYLEY8)], n, seed, c)
        _kernel(rep, "(-1,-1)", lambda: build((c.cx(-1), c.quat(-1))))
        _fixed(rep, "g2", ["gamma3"], 4, c, CAYLEY8)

    def s_thm_313(rep, c, n, seed):
        build = lambda p: ah.phi_g2_w3(p[0])
        _hom_law(rep, "phi_G2_w3", (SU3C,), build, n, seed, c)
        _images(rep, "phi_G2_w3", (SU3C,), build, "G2", [c.auto("w3", CAYLEY8)], n, seed, c)
        params = _sample_tuples((SU3C,), n, seed, c, "inj")
        nontrivial = [p for p in params if not p[0] == c.I3]
        rep.add("phi_G2_w3 is injective on the samples and the centre",
                all(not build(p).is_identity() for p in nontrivial)
                and not build((c.cx_scalar_matrix(c.W),)).is_identity(),
                f"{len(nontrivial)} non-identity samples and omega E have non-identity images")
        _fixed(rep, "g2", ["w3"], 8, c, CAYLEY8)

    def s_formulas(lemma):
        def suite(rep, c, n, seed):
            for f in FORMULAS:
                if f.fid.startswith(lemma):
                    _check_formula(rep, c, f)
        return suite

    def s_prop_321(rep, c, n, seed):
        build = lambda p: ah.phi_f4_gamma(p[0], p[1])
        doms = (SP1, Domain("Sp3"))
        _hom_law(rep, "phi_F4_gamma", doms, build, n, seed, c)
        _images(rep, "phi_F4_gamma", doms, build, "F4", [c.auto("gamma")], n, seed, c)
        _kernel(rep, "(-1,-E)", lambda: build((c.quat(-1), ah.quat_eye(3, c.n) * -1)))

    def s_thm_322(rep, c, n, seed):
        build = lambda p: ah.phi_f4_gamma(ah.cx_to_quat(p[0]), p[1])
        _images(rep, "phi_F4_gamma on U(1) x Sp(3)", (U1, Domain("Sp3")), build, "F4", [c.auto("gamma3")], n, seed, c)
        _kernel(rep, "(-1,-E)", lambda: build((c.cx(-1), ah.quat_eye(3, c.n) * -1)))
        _fixed(rep, "f4", ["gamma3"], 22, c)

    def s_prop_323(rep, c, n, seed):
        rep.run("sigma = D_-1", lambda: c.auto("sigma") == ah.D(c.cx(-1)))
        rep.run("sigma in F4", lambda: c.auto("sigma").is_f4())
        rep.run("sigma has order 2", lambda: c.auto("sigma").power(2).is_identity() and not c.auto("sigma").is_identity())
        _fixed(rep, "f4", ["sigma"], 36, c)

    def s_thm_324(rep, c, n, seed):
        n8 = [E(1, c.n), F(1, Octonion.basis(0, c.n)), F(1, Octonion.basis(1, c.n))]
        rep.run("sigma stabilizes E1, F1(1), F1(e1)", lambda: c.auto("sigma").stabilizes(n8))
        _kernel(rep, "(sigma, sigma) as D_-1 sigma", lambda: ah.D(c.cx(-1)) @ c.auto("sigma"))
        rep.run("sigma3 = D_omega", lambda: c.auto("sigma3") == ah.D(c.W))
        _hom_law(rep, "D", (U1,), lambda p: ah.D(p[0]), n, seed, c)
        _fixed(rep, "f4", ["sigma3"], 22, c)

    def s_thm_325(rep, c, n, seed):
        build = lambda p: ah.phi_f4_w3(p[0], p[1])
        _hom_law(rep, "phi_F4_w3", (SU3C, SU3C), build, n, seed, c)
        _images(rep, "phi_F4_w3", (SU3C, SU3C), build, "F4", [c.auto("w3")], n, seed, c)
        _kernel(rep, "(omega E, omega E)", lambda: build((c.cx_scalar_matrix(c.W), c.cx_scalar_matrix(c.W))))
        _fixed(rep, "f4", ["w3"], 16, c)

    def s_prop_331(rep, c, n, seed):
        build = lambda p: ah.phi_e6_gamma(p[0], p[1])
        doms = (SP1, Domain("SU", 6))
        _hom_law(rep, "phi_E6_gamma", doms, build, n, seed, c)
        _images(rep, "phi_E6_gamma", doms, build, "E6", [c.auto("gamma")], n, seed, c)
        _kernel(rep, "(-1,-E)", lambda: build((c.quat(-1), c.eye(6) * -1)))

    def s_thm_332(rep, c, n, seed):
        build = lambda p: ah.phi_e6_gamma(ah.cx_to_quat(p[0]), p[1])
        _images(rep, "phi_E6_gamma on U(1) x SU(6)", (U1, Domain("SU", 6)), build, "E6", [c.auto("gamma3")], n, seed, c)
        _kernel(rep, "(-1,-E)", lambda: build((c.cx(-1), c.eye(6) * -1)))
        _fixed(rep, "e6", ["gamma3"], 36, c)

    def spin10_kernel(rep, c, theta, delta_theta):
        """(theta, phi6sigma(delta_theta)) with phi6sigma(delta_theta) in Spin(10)."""
        d = ah.phi6sigma(delta_theta)
        rep.run(f"phi6sigma({_lbl(delta_theta)}) stabilizes E1", lambda: d.stabilizes([E(1, c.n)]))
        _kernel(rep, f"({_lbl(theta)}, phi6sigma({_lbl(delta_theta)}))", lambda: ah.phi6sigma(theta) @ d)

    def s_prop_333(rep, c, n, seed):
        build = lambda p: ah.phi6sigma(p[0]) @ p[1]
        _hom_law(rep, "phi6sigma", (UF,), lambda p: ah.phi6sigma(p[0]), n, seed, c)
        _images(rep, "(theta, delta) -> phi6sigma(theta) delta", (UF, Domain("Spin10")), build, "E6", [c.auto("sigma")], n, seed, c)
        m1 = CycScalar(-1, c.n)
        spin10_kernel(rep, c, m1, m1)
        spin10_kernel(rep, c, c.i, c.i.conj())
        spin10_kernel(rep, c, c.i.conj(), c.i)
        rep.run("phi6sigma(-1) = sigma", lambda: ah.phi6sigma(m1) == c.auto("sigma"))
        _fixed(rep, "e6", ["sigma"], 46, c)

    def s_thm_334(rep, c, n, seed):
        spec = CASES[10]
        _images(rep, "(theta, D_a, beta) -> phi6sigma(theta) D_a beta", spec.domains, lambda p: spec.hom(c, p),
                "E6", [c.auto("sigma3")], n, seed, c)
        for label, build in spec.kernel_elems:
            _kernel(rep, label, lambda b=build: b(c))
        n8 = [E(1, c.n), F(1, Octonion.basis(0, c.n)), F(1, Octonion.basis(1, c.n))]
        for sign, label in ((1, "phi6sigma(-i) D_-e1"), (-1, "phi6sigma(i) D_e1")):
            i = c.i.conj() if sign > 0 else c.i
            beta = ah.phi6sigma(i) @ ah.D(c.cx(0, -sign))
            rep.run(f"{label} stabilizes E1, F1(1), F1(e1)", lambda b=beta: b.is_e6() and b.stabilizes(n8))
        _fixed(rep, "e6", ["sigma3"], 30, c)

    def s_thm_335(rep, c, n, seed):
        build = lambda p: ah.phi_e6_gamma(p[0], p[1])
        doms = (SP1, Domain("block", sizes=(1, 5)))
        _images(rep, "phi_E6_nu3", doms, build, "E6", [c.auto("nu3")], n, seed, c)
        _kernel(rep, "(-1,-E)", lambda: build((c.quat(-1), c.eye(6) * -1)))
        _fixed(rep, "e6", ["nu3"], 28, c)

    def s_thm_336(rep, c, n, seed):
        build = lambda p: ah.phi6sigma(p[0]) @ p[1]
        _images(rep, "(theta, delta) -> phi6sigma(theta) delta", (UF, Domain("Spin10")), build, "E6", [c.auto("mu3")], n, seed, c)
        m1 = CycScalar(-1, c.n)
        _kernel(rep, "(-1, sigma)", lambda: ah.phi6sigma(m1) @ c.auto("sigma"))
        spin10_kernel(rep, c, c.i, c.i.conj())
        spin10_kernel(rep, c, c.i.conj(), c.i)
        _fixed(rep, "e6", ["mu3"], 46, c)
        e6 = liealg.e6_basis()
        rep.run("fixed subspace of mu3 equals fixed subspace of sigma",
                lambda: (liealg.same_image(e6.fixed_projector([c.auto("mu3")]), e6.fixed_projector([c.auto("sigma")])),
                         "projector images compared exactly"))

    def s_thm_337(rep, c, n, seed):
        build = lambda p: ah.phi_e6_w3(p[0], p[1], p[2])
        doms = (SU3C, SU3C, SU3C)
        _hom_law(rep, "phi_E6_w3", doms, build, n, seed, c)
        _images(rep, "phi_E6_w3", doms, build, "E6", [c.auto("w3")], n, seed, c)
        _kernel(rep, "(omega E, omega E, omega E)", lambda: build((c.cx_scalar_matrix(c.W),) * 3))
        _fixed(rep, "e6", ["w3"], 24, c)

    def s_prop_421(rep, c, n, seed):
        doms = (SP1, Domain("Ucx", 2))
        h = lambda p: ah.g421_f421(p[0], p[1])
        _hom_law(rep, "h = g421 f421", doms, h, n, seed, c, compare=lambda a, b: qmatmul(a, b))
        params = _sample_tuples(doms, n, seed, c, "h:img")
        rep.run("h(p, U) lies in Sp(3)", lambda: _all_ok(ah.check_sp3, [h(p) for p in params]))
        rep.run("h(1, E) = E", lambda: h((c.one, ah.cx_eye(2, c.n))) == ah.quat_eye(3, c.n))
        nontrivial = [p for p in params if not (p[0] == c.one and p[1] == ah.cx_eye(2, c.n))]
        rep.run("h is injective on the samples",
                lambda: (all(not h(p) == ah.quat_eye(3, c.n) for p in nontrivial), f"{len(nontrivial)} non-identity samples"))

    def s_lemma_431(rep, c, n, seed):
        f = lambda p: ah.f431(p[0], p[1])
        _hom_law(rep, "f431", (UF, UF), f, n, seed, c)
        params = _sample_tuples((UF, UF), n, seed, c, "f431:img")
        rep.run("f431 lands in S(U(1)^3)", lambda: _all_ok(ah.check_block_unitary, [f(p) for p in params], (1, 1, 1)))
        rep.run("kernel element (1,1) maps to E", lambda: _matrix_is_identity(f((CycScalar(1, c.n),) * 2)))

    def s_assert_44(rep, c, n, seed):
        doms = (U1, Domain("Ucx", 3))
        psi = lambda p: ah.psi_assert44(p[0], p[1])
        _images(rep, "psi", doms, psi, "F4", [c.auto("sigma3"), c.auto("w3")], n, seed, c)
        _hom_law(rep, "psi", doms, psi, n, seed, c)
        _kernel(rep, "(omega, omega^-1 E)", lambda: psi((c.W, c.cx_scalar_matrix(c.Wb))))
        _kernel(rep, "(omega^-1, omega E)", lambda: psi((c.Wb, c.cx_scalar_matrix(c.W))))
        n8 = [E(1, c.n), F(1, Octonion.basis(0, c.n)), F(1, Octonion.basis(1, c.n))]
        params = _sample_tuples((Domain("Ucx", 3),), n, seed, c, "phiU")
        one = c.one

        def stab():
            maps = [ah.phi_f4_gamma(one, ah.cx_to_quat(p[0])) for p in params]
            good = [k for k, m in enumerate(maps) if m.stabilizes(n8)]
            return len(good) == len(maps), f"{len(good)}/{len(maps)} samples of phi(U) fix E1, F1(1), F1(e1)"

        rep.run("phi_F4_gamma(1, U) stabilizes E1, F1(1), F1(e1)", stab)

    def conj_suite(delta, primed, unprimed, other, extra_commute=()):
        def suite(rep, c, n, seed):
            d, p, u = c.auto(delta), c.auto(primed), c.auto(unprimed)
            rep.run(f"{delta} in E6", lambda: d.is_e6())
            rep.run(f"{unprimed} {delta} = {delta} {primed}", lambda: u.compose(d) == d.compose(p))
            for o in (other,) + tuple(extra_commute):
                rep.run(f"{delta} commutes with {o}", lambda o=o: d.commutes(c.auto(o)))
            e6 = liealg.e6_basis()

            def dims():
                a = e6.fixed_dim([c.auto(other), u])
                b = e6.fixed_dim([c.auto(other), p])
                rep.computed_dim = a
                return a == b, f"({other}, {unprimed}) gives {a}, ({other}, {primed}) gives {b}"

            rep.run(f"fixed dims agree for ({other}, {unprimed}) and ({other}, {primed})", dims)
        return suite

    def emb_suite(name, f, doms, sizes, kernel, at=None):
        def suite(rep, c, n, seed):
            _hom_law(rep, name, doms, lambda p: f(*p), n, seed, c)
            params = _sample_tuples(doms, n, seed, c, f"{name}:img")
            rep.run(f"{name} lands in S({'x'.join(f'U({s})' for s in sizes)})",
                    lambda: _all_ok(ah.check_block_unitary, [f(*p) for p in params], sizes))
            cc = Ctx(at) if at and c.n % at else c
            for label, args in kernel(cc):
                rep.run(f"kernel element {label} maps to E", lambda a=args: _matrix_detail(f(*a)))
        return suite

    def su(k):
        return Domain("SU", k)

    def kern452(c):
        one, m1 = CycScalar(1, c.n), CycScalar(-1, c.n)
        e2, me2 = c.eye(2), c.eye(2) * -1
        return [("(1,-1,E,-E,E)", (one, m1, e2, me2, e2)), ("(-1,1,-E,E,E)", (m1, one, me2, e2, e2))]

    def kern461(c):
        return [(f"(eps_{k}, eps_{k}^-1 E)", (root_of_unity(k, 5, c.n), c.eye(5) * root_of_unity(-k, 5, c.n)))
                for k in range(5)]

    def kern472(c):
        out = []
        for a in (1, -1):
            for b in (1, -1):
                for cc in (1, -1):
                    A = c.eye(2) * cc
                    B = c.eye(2) * (a * b * cc)
                    out.append((f"({a},{b},{cc},{'E' if cc > 0 else '-E'},{'E' if a * b * cc > 0 else '-E'})",
                                tuple(CycScalar(v, c.n) for v in (a, b, cc)) + (A, B)))
        return out

    def kern482(c):
        w, wb = c.w, c.w.conj()
        return [("(1,E,E)", (CycScalar(1, c.n), c.eye(3), c.eye(3))),
                ("(omega,omega^-1 E,omega E)", (w, c.eye(3) * wb, c.eye(3) * w)),
                ("(omega,omega E,omega^-1 E) as stated", (w, c.eye(3) * w, c.eye(3) * wb)),
                ("(omega^-1,omega E,omega^-1 E) corrected", (wb, c.eye(3) * w, c.eye(3) * wb))]

    def kern4133(c):
        w, wb, one, m1 = c.w, c.w.conj(), CycScalar(1, c.n), CycScalar(-1, c.n)
        return [("(-1,1,-E,E)", (m1, one, c.eye(2) * -1, c.eye(3))),
                ("(1,omega,E,omega E) as stated", (one, w, c.eye(2), c.eye(3) * w)),
                ("(1,omega^-1,E,omega^-1 E) as stated", (one, wb, c.eye(2), c.eye(3) * wb)),
                ("(1,omega,E,omega^-1 E) corrected", (one, w, c.eye(2), c.eye(3) * wb)),
                ("(1,omega^-1,E,omega E) corrected", (one, wb, c.eye(2), c.eye(3) * w))]

    def s_prop_4101(rep, c, n, seed):
        e6 = liealg.e6_basis()
        rep.run("fixed subspace of sigma3 lies in the fixed subspace of sigma",
                lambda: (e6.fixed_projector([c.auto("sigma")]) @ e6.fixed_projector([c.auto("sigma3")])
                         == e6.fixed_projector([c.auto("sigma3")]), "projector identity P_sigma P_sigma3 = P_sigma3"))
        spec = CASES[10]
        _images(rep, "(theta, D_a, beta) -> phi6sigma(theta) D_a beta", spec.domains, lambda p: spec.hom(c, p),
                "E6", [c.auto("sigma3"), c.auto("sigma")], n, seed, c)

    suites = {
        "prop-3.1.1": s_prop_311,
        "thm-3.1.2": s_thm_312,
        "thm-3.1.3": s_thm_313,
        "lemma-3.1.4": s_formulas("3.1.4"),
        "prop-3.2.1": s_prop_321,
        "thm-3.2.2": s_thm_322,
        "prop-3.2.3": s_prop_323,
        "thm-3.2.4": s_thm_324,
        "thm-3.2.5": s_thm_325,
        "lemma-3.2.6": s_formulas("3.2.6"),
        "prop-3.3.1": s_prop_331,
        "thm-3.3.2": s_thm_332,
        "prop-3.3.3": s_prop_333,
        "thm-3.3.4": s_thm_334,
        "thm-3.3.5": s_thm_335,
        "thm-3.3.6": s_thm_336,
        "thm-3.3.7": s_thm_337,
        "lemma-3.3.8": s_formulas("3.3.8"),
        "prop-4.2.1": s_prop_421,
        "lemma-4.3.1": s_lemma_431,
        "assertion-4.4": s_assert_44,
        "prop-4.5.1": conj_suite("deltaR", "sigma3p", "sigma3", "gamma3"),
        "lemma-4.5.2": emb_suite("f452", ah.f452, (UF, UF, su(2), su(2), su(2)), (2, 2, 2), kern452),
        "lemma-4.6.1": emb_suite("f461", ah.f461, (UF, su(5)), (1, 5), kern461, at=180),
        "prop-4.7.1": conj_suite("deltaQ", "mu3p", "mu3", "gamma3"),
        "lemma-4.7.2": emb_suite("f472", ah.f472, (UF, UF, UF, su(2), su(2)), (1, 1, 2, 2), kern472),
        "prop-4.8.1": conj_suite("deltaN", "w3p", "w3", "gamma3"),
        "lemma-4.8.2": emb_suite("f482", ah.f482, (UF, su(3), su(3)), (3, 3), kern482),
        "prop-4.9.2": conj_suite("deltaR", "sigma3p", "sigma3", "nu3"),
        "prop-4.10.1": s_prop_4101,
        "prop-4.12.2": conj_suite("deltaQ", "mu3p", "mu3", "nu3"),
        "prop-4.13.2": conj_suite("deltaN", "w3p", "w3", "nu3"),
        "lemma-4.13.3": emb_suite("f4133", ah.f4133, (UF, UF, su(2), su(3)), (1, 2, 3), kern4133),
    }
    return suites


def _lbl(x: CycScalar) -> str:
    v = x.to_float()
    for txt, z in (("1", 1), ("-1", -1), ("i", 1j), ("-i", -1j)):
        if abs(v - z) < 1e-9:
            return txt
    return str(x)


def _all_ok(check, values, *extra):
    """(all pass, detail naming the first failure) for a domain validator."""
    for k, v in enumerate(values):
        try:
            check(v, *extra)
        except ValueError as exc:
            return False, f"sample {k}: {exc}"
    return True, f"{len(values)} samples"


LEMMAS = _lemma_suites()


def run_lemma(lid: str, samples: int = 8, seed: int = 0, conductor: int = DEFAULT_CONDUCTOR) -> Report:
    if lid not in LEMMAS:
        raise ValueError(f"unknown lemma id {lid}")
    start = time.perf_counter()
    rep = Report(lid)
    LEMMAS[lid](rep, Ctx(conductor), samples, seed)
    rep.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return rep


# dimension table ---------------------------------------------------------------------------------------------

SINGLE_DIMS = [
    ("g2", "gamma3", 4), ("g2", "w3", 8),
    ("f4", "gamma3", 22), ("f4", "sigma3", 22), ("f4", "w3", 16), ("f4", "sigma", 36),
    ("e6", "gamma3", 36), ("e6", "sigma3", 30), ("e6", "nu3", 28), ("e6", "mu3", 46), ("e6", "w3", 24),
    ("e6", "sigma", 46),
]


def run_dims(conductor: int = DEFAULT_CONDUCTOR) -> Report:
    start = time.perf_counter()
    ctx = Ctx(conductor)
    rep = Report("dims")
    for alg, expected in (("g2", 14), ("f4", 52), ("e6", 78)):
        rep.run(f"dim {alg}", lambda a=alg, e=expected: (liealg.basis_for(a).dim == e,
                                                          f"computed {liealg.basis_for(a).dim}, expected {e}"))
    for alg, name, expected in SINGLE_DIMS:
        space = CAYLEY8 if alg == "g2" else JORDAN27

        def run(alg=alg, name=name, expected=expected, space=space):
            d = liealg.basis_for(alg).fixed_dim([ctx.auto(name, space)])
            return d == expected, f"computed {d}, expected {expected}"

        rep.run(f"{alg} fixed by {name}", run)
    for cid, spec in CASES.items():
        space = _space(spec.group)

        def run(spec=spec, space=space):
            d = liealg.basis_for(spec.group.lower()).fixed_dim([ctx.auto(spec.sigma, space), ctx.auto(spec.tau, space)])
            return d == spec.expected_dim, f"computed {d}, expected {spec.expected_dim}"

        rep.run(f"case {cid}: {spec.group.lower()} fixed by ({spec.sigma}, {spec.tau})", run)
    rep.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return rep


def run_selftest(conductor: int = DEFAULT_CONDUCTOR) -> Report:
    """Fast structural checks: algebra dimensions with certificates, formulas, orders, conjugacies."""
    start = time.perf_counter()
    ctx = Ctx(conductor)
    rep = Report("selftest")
    rep.run("dim g2 = 14 (exact nullity)", lambda: liealg.g2_basis().dim == 14)
    cert = liealg.f4_certificate()
    rep.add("dim f4 = 52 (inner derivations and mod-p rank)", cert["lower_bound"] == 52 and cert["upper_bound"] == 52,
            f"lower bound {cert['lower_bound']}, upper bound {cert['upper_bound']}")
    rep.run("dim e6 = 78 and the infinitesimal E6 identities hold",
            lambda: liealg.e6_basis().dim == 78 and liealg.e6_infinitesimal_ok())
    for f in FORMULAS:
        _check_formula(rep, ctx, f)
    for group, names in (("G2", ("gamma3", "w3")), ("F4", ("gamma3", "sigma3", "w3")),
                         ("E6", ("gamma3", "sigma3", "nu3", "mu3", "w3"))):
        for name in names:
            _check_order(rep, ctx, name, group)
    for spec in CASES.values():
        space = _space(spec.group)
        rep.run(f"case {spec.id}: {spec.sigma} and {spec.tau} commute",
                lambda s=spec, sp=space: ctx.auto(s.sigma, sp).commutes(ctx.auto(s.tau, sp)))
    for delta, primed, unprimed, others in (("deltaR", "sigma3p", "sigma3", ("gamma3", "nu3")),
                                            ("deltaQ", "mu3p", "mu3", ("gamma3", "nu3")),
                                            ("deltaN", "w3p", "w3", ("gamma3", "nu3"))):
        d = ctx.auto(delta)
        rep.run(f"{unprimed} {delta} = {delta} {primed}", lambda d=d, u=unprimed, p=primed: ctx.auto(u) @ d == d @ ctx.auto(p))
        for o in others:
            rep.run(f"{delta} commutes with {o}", lambda d=d, o=o: d.commutes(ctx.auto(o)))
    rep.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return rep


# run everything -----------------------------------------------------------------------------------------------


def _job(kind: str, key, samples: int, seed: int, conductor: int) -> dict:
    if kind == "case":
        return run_case(key, samples, seed, conductor).to_dict()
    if kind == "lemma":
        return run_lemma(key, samples, seed, conductor).to_dict()
    if kind == "dims":
        return run_dims(conductor).to_dict()
    return run_selftest(conductor).to_dict()


def default_parallelism() -> int:
    env = os.environ.get("VERIFY_THREADS")
    if env:
        return max(1, int(env))
    return max(1, min(8, os.cpu_count() or 1))


def run_jobs(jobs, samples: int, seed: int, conductor: int, parallelism: int) -> list:
    """Run (kind, key) jobs; results come back in job order whatever the parallelism."""
    if parallelism <= 1 or len(jobs) <= 1:
        return [Report.from_dict(_job(k, key, samples, seed, conductor)) for k, key in jobs]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        futs = [pool.submit(_job, k, key, samples, seed, conductor) for k, key in jobs]
        return [Report.from_dict(f.result()) for f in futs]


def run_all(samples: int = 8, seed: int = 0, parallelism: int | None = None,
            conductor: int = DEFAULT_CONDUCTOR) -> dict:
    parallelism = default_parallelism() if parallelism is None else parallelism
    jobs = [("case", c) for c in sorted(CASES)] + [("lemma", k) for k in LEMMAS] + [("selftest", None)]
    reports = run_jobs(jobs, samples, seed, conductor, parallelism)
    cases = [r for r in reports if r.case.startswith("case-")]
    others = [r for r in reports if not r.case.startswith("case-")]
    by_id = {r.case: r for r in cases}
    cross = Report("cross-case")
    for a, b in ((9, 12), (11, 14)):
        da, db = by_id[f"case-{a}"].computed_dim, by_id[f"case-{b}"].computed_dim
        cross.add(f"cases {a} and {b} agree in computed dim", da is not None and da == db, f"{da} and {db}")
    others.append(cross)
    summary = {
        "cases_passed": sum(r.passed for r in cases),
        "cases_total": len(cases),
        "lemmas_passed": sum(r.passed for r in others),
        "lemmas_total": len(others),
        "checks_failed": sum(not c.passed for r in cases + others for c in r.checks),
        "samples": samples,
        "seed": seed,
        "conductor": conductor,
    }
    return {"summary": summary, "reports": cases + others}


def to_json(obj, stable: bool = False) -> str:
    def conv(r):
        d = r.to_dict() if isinstance(r, Report) else r
        if stable and isinstance(d, dict) and "elapsed_ms" in d:
            d = dict(d, elapsed_ms=0)
        return d

    if isinstance(obj, dict) and "reports" in obj:
        payload = {"summary": obj["summary"], "reports": [conv(r) for r in obj["reports"]]}
    elif isinstance(obj, list):
        payload = [conv(r) for r in obj]
    else:
        payload = conv(obj)
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
