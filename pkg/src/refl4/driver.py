"""Verification orchestrator: every identity the package asserts, as checks.

Each check produces a CheckReport with a pass/fail status and a concrete
witness; a failed check always carries a witness that one exact evaluation
can re-verify.  ``run_suite`` executes the checks in name order (the order
never depends on timing) and is deterministic apart from the runtime
fields.

Scopes: ``quick`` runs everything except the degree-20/30 lift
constructions; ``full`` runs all checks within a time budget of
REFL4_BUDGET_MINUTES (default 60).

Two published expansions are transcribed deficiently in the source tables
(see refl4.forms): the degree-6 display is not invariant and the degree-12
display has one wrong coefficient.  The checks treat the geometric
reconstruction as authoritative, verify the printed values where they do
hold, and report each display discrepancy explicitly instead of silently
fixing it.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from fractions import Fraction

from . import _ruled, forms, geometry, klein
from .groups import (
    MatrixGroup,
    builtin_generators,
    builtin_group,
    invariant_dimension_series,
    molien_series,
    reynolds_sum,
)
from .mpoly import Matrix4, MPoly, det_of_poly_matrix
from .numfield import FieldElement


@dataclass
class CheckReport:
    name: str
    status: str  # "pass" | "fail"
    witness: str
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_line(self) -> str:
        return f"{self.name}: {self.status.upper()} [{self.runtime:.2f}s] {self.witness}"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "witness": self.witness,
            "runtime": round(self.runtime, 3),
        }


def _report(name, ok, witness, t0) -> CheckReport:
    return CheckReport(
        name=name,
        status="pass" if ok else "fail",
        witness=witness,
        runtime=time.time() - t0,
    )


# ---------------------------------------------------------------------------
# primitive checks


def check_invariance(p: MPoly, gens, name="invariance") -> CheckReport:
    """Pass iff g.p == p exactly for every generator.

    High-degree polynomials are compared through the ruled coordinates,
    where each orthogonal generator acts block by block; the result is the
    same exact polynomial equality.
    """
    t0 = time.time()
    gens = list(gens)
    use_fast = p.degree() > 14
    praw = _ruled.mpoly_to_uvwy(p) if use_fast else None
    for g in gens:
        label = getattr(g, "label", "") or "generator"
        if use_fast:
            moved = _ruled.uvwy_action(praw, g.matrix)
            same = moved == praw
            if not same:
                diff = _ruled.mpoly_from_uvwy(moved) - p
        else:
            moved = p.act(g)
            same = moved == p
            if not same:
                diff = moved - p
        if not same:
            exps, c = diff.leading_term()
            return _report(
                name,
                False,
                f"g={label}: (g.p - p) leading term {c.render()} * {exps}",
                t0,
            )
    return _report(name, True, f"fixed by all {len(gens)} generators", t0)


def check_nondivisibility(
    p: MPoly, d: MPoly, witness_points=None, name="nondivisibility"
) -> CheckReport:
    """Pass iff d does not divide p, i.e. the division remainder is nonzero."""
    t0 = time.time()
    _, rem = p.divrem(d)
    if rem.is_zero():
        return _report(name, False, "remainder is zero: divisible", t0)
    notes = [f"remainder has {rem.num_terms()} terms"]
    for pt in witness_points or ():
        dv = d.eval(pt)
        pv = p.eval(pt)
        if not dv.is_zero():
            return _report(
                name, False, f"witness point does not lie on divisor: d(pt)={dv}", t0
            )
        if pv.is_zero():
            return _report(
                name, False, "witness point value is zero, no certificate", t0
            )
        notes.append(f"d(pt)=0, p(pt)={pv.render()}")
    return _report(name, True, "; ".join(notes), t0)


_JACOBIAN_POINT = (1, 2, 3, 5)


def check_jacobian_independence(polys, name="jacobian") -> CheckReport:
    """Pass iff the 4x4 Jacobian determinant is a nonzero polynomial.

    Certified by a nonzero value at the fixed point (1,2,3,5); a zero value
    falls back to the full symbolic determinant before declaring failure.
    """
    t0 = time.time()
    polys = list(polys)
    if len(polys) != 4:
        raise ValueError("need exactly four polynomials")
    rows = [[p.partial(v) for v in range(4)] for p in polys]
    numeric = [
        [entry.eval(_JACOBIAN_POINT) for entry in row] for row in rows
    ]
    det = Matrix4(numeric).det()
    if not det.is_zero():
        return _report(
            name, True, f"Jacobian at {_JACOBIAN_POINT} = {det.render()}", t0
        )
    sym = det_of_poly_matrix(rows)
    if sym.is_zero():
        return _report(name, False, "symbolic Jacobian determinant is zero", t0)
    exps, c = sym.leading_term()
    return _report(
        name,
        True,
        f"zero at the witness point but symbolic leading term {c.render()}*{exps}",
        t0,
    )


def check_degrees(group: MatrixGroup, degrees, name="degrees", max_degree=None) -> CheckReport:
    """Pass iff the degrees multiply to |G| and the Molien series matches the
    product-formula expansion with those degrees."""
    t0 = time.time()
    prod = 1
    for d in degrees:
        prod *= d
    if prod != group.order:
        return _report(
            name, False, f"product {prod} != group order {group.order}", t0
        )
    n = max_degree or max(degrees)
    mol = molien_series(group, n)
    dp = invariant_dimension_series(degrees, n)
    if mol.as_ints() != dp:
        return _report(
            name, False, f"molien {mol.as_ints()} != expansion {dp}", t0
        )
    return _report(
        name, True, f"product {prod} == order; series match to degree {n}", t0
    )


# ---------------------------------------------------------------------------
# workspace: shared lazily-built objects


class Workspace:
    def __init__(self):
        self._geo = {}
        self._lift = {}

    def group(self, name):
        return builtin_group(name)

    def geometric(self, name):
        got = self._geo.get(name)
        if got is None:
            got = self._geo[name] = geometry.invariant_from_orbit(name)
        return got

    def lifted(self, name):
        got = self._lift.get(name)
        if got is None:
            got = self._lift[name] = geometry.invariant_by_lift(name)
        return got

    def canonical(self, name):
        """The authoritative invariant for a public name."""
        if name == "q":
            return forms.quadric()
        if name in ("F6", "F8", "F12"):
            return self.geometric(name)
        if name in ("Gamma12", "Gamma20", "Gamma30"):
            return self.lifted(name)
        raise ValueError(f"unknown invariant {name!r}")


# ---------------------------------------------------------------------------
# the suite


def _lift_roundtrip_samples(degree, count, rng):
    count = min(count, (degree + 1) ** 2)  # only (d+1)^2 balanced monomials exist
    seen = set()
    while len(seen) < count:
        a = rng.randint(0, degree)
        c = rng.randint(0, degree)
        seen.add((a, degree - a, c, degree - c))
    return sorted(seen)


def _suite_checks(ws: Workspace, scope: str):
    """Yields (name, callable) pairs in deterministic name order."""

    def closure_orders():
        t0 = time.time()
        want = {"G6": 288, "G8": 1152, "G12": 7200, "F4": 1152, "H4": 14400}
        got = {name: ws.group(name).order for name in sorted(want)}
        ok = got == want
        idx_ok = (
            got["F4"] // got["G6"] == 4 and got["H4"] // got["G12"] == 2
        )
        return _report(
            "closure_orders",
            ok and idx_ok,
            f"orders {got}; index four and two: {idx_ok}",
            t0,
        )

    def display_fidelity():
        t0 = time.time()
        msgs = []
        ok = True
        f8_ok = forms.f8_explicit().monic() == ws.geometric("F8")
        msgs.append(f"degree-8 display matches reconstruction: {f8_ok}")
        ok &= f8_ok
        f6_fixed_ok = forms.f6_corrected() == ws.geometric("F6")
        delta6 = forms.f6_explicit() - forms.f6_corrected()
        msgs.append(
            f"degree-6 display deviates by {delta6.num_terms()} terms "
            f"(corrected form matches reconstruction: {f6_fixed_ok})"
        )
        ok &= f6_fixed_ok
        lead = Fraction(123, 8)
        f12_geo = ws.geometric("F12") * FieldElement(lead)
        f12_fixed_ok = forms.f12_corrected() == f12_geo
        delta12 = forms.f12_explicit() - forms.f12_corrected()
        msgs.append(
            f"degree-12 display deviates in {delta12.num_terms()} terms: "
            f"printed x^8x^2x^2 coefficient {forms.F12_PRINTED_822}, "
            f"actual {forms.F12_CORRECTED_822} "
            f"(corrected form matches reconstruction: {f12_fixed_ok})"
        )
        ok &= f12_fixed_ok
        return _report("display_fidelity", ok, "; ".join(msgs), t0)

    def factored_reynolds():
        t0 = time.time()
        target = klein.klein_pair("t")
        praw = _ruled.lift_praw(target._praw(), 0)
        fast = _ruled.mpoly_from_uvwy(
            geometry._reflection_reynolds_uvwy(praw, "F4")
        )
        direct = reynolds_sum(ws.group("F4"), geometry.lift(target))
        ok = fast == direct
        msg = "degree-6 factored sum equals elementwise sum over 1152 elements"
        if scope == "full" and ok:
            target12 = klein.klein_pair("chi")
            praw12 = _ruled.lift_praw(target12._praw(), 0)
            fast12 = _ruled.mpoly_from_uvwy(
                geometry._reflection_reynolds_uvwy(praw12, "F4")
            )
            direct12 = reynolds_sum(ws.group("F4"), geometry.lift(target12))
            ok = fast12 == direct12
            msg += "; degree-12 smoke test: " + ("bit-exact" if ok else "MISMATCH")
        return _report("factored_reynolds", ok, msg, t0)

    def gamma_construction():
        t0 = time.time()
        names = ["Gamma12"] if scope == "quick" else ["Gamma12", "Gamma20", "Gamma30"]
        gens = builtin_generators("H4")
        msgs = []
        ok = True
        for name in names:
            g = ws.lifted(name)
            inv = check_invariance(g, gens, name=f"{name}_invariance")
            ok &= inv.passed
            nod = check_nondivisibility(g, forms.quadric(), name=f"{name}_q")
            ok &= nod.passed
            degree = g.degree()
            pair = geometry.icosahedral_pair(degree)
            try:
                lam = klein.phi_factor(g, pair)
                rational = lam.is_rational()
                ok &= rational and not lam.is_zero()
                msgs.append(
                    f"{name}: invariant={inv.passed}, q-free={nod.passed}, "
                    f"phi factor {lam.render()} (rational={rational})"
                )
            except klein.PhiFactorError as exc:
                ok = False
                msgs.append(f"{name}: phi factor FAILED ({exc})")
            # the displayed classical icosahedral forms belong to a different
            # conjugate of the binary icosahedral group; record the mismatch
            kname = {12: "f", 20: "H", 30: "Tau"}[degree]
            try:
                klein.phi_factor(g, klein.klein_pair(kname))
                msgs.append(f"{name}: unexpectedly proportional to {kname}1*{kname}2")
            except klein.PhiFactorError:
                msgs.append(
                    f"{name}: not proportional to the displayed {kname}1*{kname}2 "
                    f"(group-alignment mismatch, reported)"
                )
        return _report("gamma_construction", ok, "; ".join(msgs), t0)

    def geometric_reconstruction():
        t0 = time.time()
        msgs = []
        ok = True
        for orbit_name, deg in (("T6", 6), ("O8", 8), ("O12", 12)):
            mine = geometry.orbit_plane_product(orbit_name).monic()
            listed = forms.plane_product(deg).monic()
            good = mine == listed
            ok &= good
            msgs.append(f"{orbit_name} plane product matches list: {good}")
        f8_ok = ws.geometric("F8") == forms.f8_explicit().monic()
        ok &= f8_ok
        msgs.append(f"averaged degree-8 proportional to display: {f8_ok}")
        f6_ok = ws.geometric("F6") == forms.f6_corrected().monic()
        f12_ok = ws.geometric("F12") == forms.f12_corrected().monic()
        ok &= f6_ok and f12_ok
        msgs.append(
            "averaged degree-6/12 proportional to corrected displays: "
            f"{f6_ok}/{f12_ok} (printed displays deviate, see display_fidelity)"
        )
        return _report("geometric_reconstruction", ok, "; ".join(msgs), t0)

    def invariance_canonical():
        t0 = time.time()
        gens = builtin_generators("F4")
        msgs = []
        ok = True
        for name in ("F6", "F8", "F12"):
            rep = check_invariance(ws.geometric(name), gens, name=name)
            ok &= rep.passed
            msgs.append(f"{name}: {rep.status}")
        listed_f8 = check_invariance(forms.f8_explicit(), gens, name="F8_display")
        ok &= listed_f8.passed
        msgs.append(f"F8 display: {listed_f8.status}")
        # the printed degree-6 display cannot be invariant (asymmetric
        # coefficients); assert that we detect this, and report it
        broken = check_invariance(forms.f6_explicit(), gens, name="F6_display")
        ok &= not broken.passed
        msgs.append(
            "F6 display correctly detected as non-invariant "
            f"({broken.witness})"
        )
        return _report("invariance_canonical", ok, "; ".join(msgs), t0)

    def jacobian_f_family():
        q = forms.quadric()
        return check_jacobian_independence(
            [q, ws.geometric("F6"), ws.geometric("F8"), ws.geometric("F12")],
            name="jacobian_f_family",
        )

    def jacobian_gamma_family():
        q = forms.quadric()
        return check_jacobian_independence(
            [q, ws.lifted("Gamma12"), ws.lifted("Gamma20"), ws.lifted("Gamma30")],
            name="jacobian_gamma_family",
        )

    def klein_syzygies():
        t0 = time.time()
        msgs = []
        ok = True
        for which in ("tetrahedral", "icosahedral"):
            for slot in (1, 2):
                good = klein.verify_syzygy(which, slot).is_zero()
                ok &= good
                msgs.append(f"{which} slot {slot}: {'0' if good else 'NONZERO'}")
        return _report("klein_syzygies", ok, "; ".join(msgs), t0)

    def lift_f_checks():
        t0 = time.time()
        msgs = []
        ok = True
        targets = {"F6": "t", "F8": "W", "F12": "chi"}
        for name, kname in sorted(targets.items()):
            lifted = ws.lifted(name)
            try:
                lam = klein.phi_factor(lifted, klein.klein_pair(kname))
                good = not lam.is_zero()
                msgs.append(f"{name} lift: phi factor {lam.render()}")
            except klein.PhiFactorError as exc:
                good = False
                msgs.append(f"{name} lift: phi factor FAILED ({exc})")
            ok &= good
        # decomposition: lift route == lam * geometric + q * h, exactly
        f6l = ws.lifted("F6")
        f6g = ws.geometric("F6")
        lam_l = klein.phi_factor(f6l, klein.klein_pair("t"))
        lam_g = klein.phi_factor(f6g, klein.klein_pair("t"))
        lam = lam_l * lam_g.inv()
        _, rem = (f6l - f6g * lam).divrem(forms.quadric())
        good = rem.is_zero()
        ok &= good
        msgs.append(
            f"F6 lift = ({lam.render()}) * F6_geometric + q * h exactly: {good}"
        )
        return _report("lift_f_checks", ok, "; ".join(msgs), t0)

    def lift_roundtrip():
        t0 = time.time()
        import random

        rng = random.Random(20260808)
        count = 0
        for e0 in range(3):
            for e2 in range(3):
                zmon = MPoly.monomial((e0, 2 - e0, e2, 2 - e2), 1, "z")
                if klein.phi(geometry.lift(zmon)) != zmon:
                    return _report(
                        "lift_roundtrip", False, f"failed at {(e0, 2-e0, e2, 2-e2)}", t0
                    )
                count += 1
        for degree in (6, 8, 12, 20, 30):
            for exps in _lift_roundtrip_samples(degree, 50, rng):
                zmon = MPoly.monomial(exps, 1, "z")
                if klein.phi(geometry.lift(zmon)) != zmon:
                    return _report("lift_roundtrip", False, f"failed at {exps}", t0)
                count += 1
        return _report("lift_roundtrip", True, f"{count} monomials round-trip", t0)

    def molien_f4():
        return check_degrees(
            ws.group("F4"), [2, 6, 8, 12], name="molien_f4", max_degree=32
        )

    def molien_h4():
        return check_degrees(
            ws.group("H4"), [2, 12, 20, 30], name="molien_h4", max_degree=30
        )

    def phi_scalars():
        t0 = time.time()
        msgs = []
        ok = True
        good = klein.phi(forms.quadric()).is_zero()
        ok &= good
        msgs.append(f"phi(q)=0: {good}")
        lam6 = klein.phi_factor(forms.f6_explicit(), klein.klein_pair("t"))
        good = lam6 == FieldElement(Fraction(-13, 16))
        ok &= good
        msgs.append(f"phi(F6 display) = ({lam6.render()}) t1 t2 [printed -13/16]")
        lam8 = klein.phi_factor(forms.f8_explicit(), klein.klein_pair("W"))
        good = lam8 == FieldElement(Fraction(3, 64))
        ok &= good
        msgs.append(f"phi(F8 display) = ({lam8.render()}) W1 W2 [printed 3/64]")
        # degree 12: the printed display is not a multiple of chi1 chi2;
        # downgrade to the geometric invariant and report the discrepancy
        try:
            lam12 = klein.phi_factor(forms.f12_explicit(), klein.klein_pair("chi"))
            msgs.append(f"phi(F12 display) = ({lam12.render()}) chi1 chi2")
        except klein.PhiFactorError:
            f12c = ws.geometric("F12") * FieldElement(Fraction(123, 8))
            lam12 = klein.phi_factor(f12c, klein.klein_pair("chi"))
            good = lam12 == FieldElement(Fraction(3, 256)) and not lam12.is_zero()
            ok &= good
            msgs.append(
                "phi(F12 display) not proportional to chi1 chi2 (reported); "
                f"phi(geometric F12, display normalization) = ({lam12.render()}) "
                "chi1 chi2 [printed 3/256]"
            )
        # also record the geometric degree-6 scalar, which differs from the
        # display value because the display itself deviates
        lam6g = klein.phi_factor(ws.geometric("F6"), klein.klein_pair("t"))
        msgs.append(f"phi(F6 geometric, monic) = ({lam6g.render()}) t1 t2")
        return _report("phi_scalars", ok, "; ".join(msgs), t0)

    def point_witnesses():
        t0 = time.time()
        p1, p2 = forms.witness_points()
        q = forms.quadric()
        msgs = []
        ok = True
        good = q.eval(p1).is_zero() and q.eval(p2).is_zero()
        ok &= good
        msgs.append(f"q(p1)=q(p2)=0: {good}")
        v = forms.f6_explicit().eval(p1)
        good = v == FieldElement(26)
        ok &= good
        msgs.append(f"F6 display(p1) = {v.render()} [printed 26]")
        v = forms.f8_explicit().eval(p2)
        good = v == FieldElement(12)
        ok &= good
        msgs.append(f"F8 display(p2) = {v.render()} [printed 12]")
        f12c = forms.f12_corrected()
        v = f12c.eval(p2)
        good = not v.is_zero()
        ok &= good
        msgs.append(
            f"F12 corrected(p2) = {v.render()}, nonzero certificate "
            "[printed value 32 matches no consistent normalization; reported]"
        )
        for name in ("F6", "F8", "F12"):
            rep = check_nondivisibility(
                ws.geometric(name), q, witness_points=None, name=name
            )
            ok &= rep.passed
            msgs.append(f"q does not divide {name}: {rep.passed}")
        rep = check_nondivisibility(ws.geometric("F12"), ws.geometric("F6"))
        ok &= rep.passed
        v6 = ws.geometric("F6").eval(p2)
        msgs.append(
            f"F6 does not divide F12: {rep.passed} (F6(p2) = {v6.render()})"
        )
        ok &= v6.is_zero()
        return _report("point_witnesses", ok, "; ".join(msgs), t0)

    checks = {
        "closure_orders": closure_orders,
        "display_fidelity": display_fidelity,
        "factored_reynolds": factored_reynolds,
        "gamma_construction": gamma_construction,
        "geometric_reconstruction": geometric_reconstruction,
        "invariance_canonical": invariance_canonical,
        "jacobian_f_family": jacobian_f_family,
        "klein_syzygies": klein_syzygies,
        "lift_f_checks": lift_f_checks,
        "lift_roundtrip": lift_roundtrip,
        "molien_f4": molien_f4,
        "molien_h4": molien_h4,
        "phi_scalars": phi_scalars,
        "point_witnesses": point_witnesses,
    }
    if scope == "full":
        checks["jacobian_gamma_family"] = jacobian_gamma_family
    return [(name, checks[name]) for name in sorted(checks)]


CHECK_NAMES = [name for name, _ in _suite_checks(Workspace(), "full")]


def budget_seconds() -> float:
    return float(os.environ.get("REFL4_BUDGET_MINUTES", "60")) * 60.0


def run_suite(scope: str = "quick", ws: Workspace | None = None, only=None):
    """Run the verification suite; returns the list of CheckReports."""
    if scope not in ("quick", "full"):
        raise ValueError(f"unknown scope {scope!r}")
    ws = ws or Workspace()
    budget = budget_seconds()
    start = time.time()
    reports = []
    for name, fn in _suite_checks(ws, scope):
        if only is not None and name not in only:
            continue
        if time.time() - start > budget:
            reports.append(
                CheckReport(name, "fail", "runtime budget exceeded", 0.0)
            )
            continue
        reports.append(fn())
    return reports


def reports_to_text(reports) -> str:
    lines = [r.to_line() for r in reports]
    failed = sum(1 for r in reports if not r.passed)
    lines.append(f"total: {len(reports)} checks, {failed} failed")
    return "\n".join(lines) + "\n"


def reports_to_json(reports) -> str:
    import json

    return json.dumps([r.to_dict() for r in reports], indent=1)
