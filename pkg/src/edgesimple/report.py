"""Check orchestration and the JSON check report.

Every check returns a status (PASS, FAIL or SKIPPED(reason)) plus witness
data.  Shared constructions such as the resolution and the algebra are built
lazily once per polytope.  Timings are kept apart from the report body so that
repeated runs are byte-identical outside the ``timing`` field.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import algebra as alg
from . import gh as ghmod
from . import morse
from .errors import PolytopeError
from .geometry import Polytope
from .lattice import f_from_h, lattice_of, simplicity_class
from .resolution import is_infrequent, standard_resolution, verify_hcalc

CHECKS = (
    "vectors", "dehn-sommerville", "unimodality", "hcalc", "ineq2", "ineq3", "hl", "hr",
    "morse-census", "separatrix-basis", "iso", "indep", "ker", "embedding-tail",
    "comM-identity", "gh-suite", "khovanskii",
)
MORSE_FUNCTIONALS = 20

PASS, FAIL = "PASS", "FAIL"


def skipped(reason: str) -> str:
    return f"SKIPPED({reason})"


class Skip(Exception):
    """Raised inside a check to mark it SKIPPED with a reason."""


def parse_checks(text: str) -> list[str]:
    if text.strip() == "all":
        return list(CHECKS)
    names = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [s for s in names if s not in CHECKS]
    if unknown:
        raise PolytopeError(f"unknown checks: {', '.join(unknown)}")
    return list(dict.fromkeys(names))


def jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, frozenset):
        return sorted(x)
    return x


@dataclass
class Context:
    """Lazily shared constructions for one polytope."""

    polytope: object
    explore: bool = False

    @cached_property
    def lattice(self):
        return lattice_of(self.polytope)

    @cached_property
    def d(self) -> int:
        return self.lattice.dim

    @cached_property
    def cls(self):
        return simplicity_class(self.lattice)

    @cached_property
    def h(self):
        return self.lattice.h_vector()

    @cached_property
    def gh(self):
        return ghmod.gh_vector(self.lattice)

    @cached_property
    def infrequent(self) -> bool:
        return bool(is_infrequent(self.lattice))

    def need_geometry(self) -> Polytope:
        if not isinstance(self.polytope, Polytope):
            raise Skip("no-geometry")
        return self.polytope

    def need_sie(self) -> None:
        if not self.cls.simple_in_edges:
            raise Skip("not-simple-in-edges")

    @cached_property
    def resolution(self):
        self.need_geometry()
        self.need_sie()
        return standard_resolution(self.polytope)

    @cached_property
    def sigma(self) -> Polytope:
        return self.resolution.resolved

    @cached_property
    def algebra(self):
        return alg.build_algebra(self.sigma)

    @property
    def on(self) -> str:
        return "input" if self.cls.simple else "resolution"


# individual checks -----------------------------------------------------------

def check_vectors(c: Context):
    f = c.lattice.f_vector()
    ok = tuple(f_from_h(c.h)) == tuple(f)
    return ok, {"f": f, "h": c.h}


def check_dehn_sommerville(c: Context):
    h = c.h
    # Euler-Poincare with the top face included: sum (-1)^k f_k = 1
    euler = sum((-1) ** k * x for k, x in enumerate(c.lattice.f_vector())) == 1
    if c.cls.simple:
        ok = tuple(h) == tuple(h[::-1])
        return ok and euler, {"relations": "h-symmetry", "h": h}
    return euler, {"relations": "euler", "note": "h is not symmetric for nonsimple polytopes"}


def check_unimodality(c: Context):
    if not c.cls.simple:
        raise Skip("not-simple")
    h, d = c.h, c.d
    ok = all(h[k] <= h[k + 1] for k in range(d // 2))
    return ok, {"h": h}


def check_hcalc(c: Context):
    rep = verify_hcalc(c.resolution)
    return rep.ok, {"residual": rep.residual, "h_sigma": rep.h_sigma, "h_inserted": rep.h_inserted}


def check_ineq2(c: Context):
    c.need_sie()
    return ghmod.ineq2(c.h), {"h": c.h}


def check_ineq3(c: Context):
    c.need_sie()
    return ghmod.ineq3(c.h), {"h": c.h}


def check_hl(c: Context):
    A = c.algebra
    rows = alg.hard_lefschetz_check(A, alg.lefschetz_weights(c.sigma))
    data = [{"k": r.k, "rank": r.rank, "dim": r.dim_source} for r in rows]
    return all(r.passed for r in rows), {"on": c.on, "rows": data}


def check_hr(c: Context):
    A = c.algebra
    L = alg.lefschetz_weights(c.sigma)
    rows = [alg.hodge_riemann_check(A, L, k) for k in range(c.d // 2 + 1)]
    data = [{"k": r.k, "dim": r.dim, "expected_dim": r.expected_dim, "minors": r.minors} for r in rows]
    return all(r.passed for r in rows), {"on": c.on, "rows": data}


def check_morse_census(c: Context):
    sigma = c.sigma
    h = tuple(sigma.lattice.h_vector())
    sizes = []
    for l in morse.functional_family(sigma, MORSE_FUNCTIONALS):
        try:
            sizes.append(morse.census_sizes(morse.index_census(sigma, l)))
        except PolytopeError:
            sizes.append(None)
    ok = all(s == h for s in sizes)
    return ok, {"on": c.on, "functionals": len(sizes), "h": h, "distinct_censuses": sorted({s for s in sizes if s})}


def check_separatrix_basis(c: Context):
    sigma, A = c.sigma, c.algebra
    l = morse.general_linear_function(sigma)
    try:
        basis = morse.separatrix_basis(sigma, l, A)
    except PolytopeError as e:
        return False, {"on": c.on, "error": str(e)}
    orders = [len(basis.by_order(k)) for k in range(c.d + 1)]
    return True, {"on": c.on, "functional": l.coefficients, "order_profile": orders}


def check_iso(c: Context):
    A = c.algebra
    ring = alg.build_face_ring(c.sigma)
    h = tuple(c.sigma.lattice.h_vector())
    ok = ring.dims == A.dims == h
    return ok, {"on": c.on, "annihilator": A.dims, "face_ring": ring.dims, "h": h}


def check_indep(c: Context):
    rows = alg.indep_check(c.algebra, c.resolution)
    return all(a == b for _, a, b in rows), {"rows": [{"k": k, "dim": a, "expected": b} for k, a, b in rows]}


def check_ker(c: Context):
    A, R = c.algebra, c.resolution
    if not c.infrequent:
        if not c.explore:
            raise Skip("not-infrequent")
        rows = alg.theorem_ker_check(A, R, explore=True)
        return None, {"exploratory": True, "rows": [r.__dict__ for r in rows]}
    rows = alg.theorem_ker_check(A, R)
    return all(r.passed for r in rows), {"rows": [r.__dict__ for r in rows]}


def check_embedding_tail(c: Context):
    c.need_geometry()
    c.need_sie()
    if not c.infrequent:
        raise Skip("not-infrequent")
    rep = alg.verify_embedding_and_tail(c.algebra, c.resolution, c.gh)
    return rep.passed, {
        "ranks": [{"k": k, "rank": r, "expected": e} for k, r, e in rep.ranks],
        "gh_head": rep.gh_head, "h_tail": rep.h_tail,
    }


def check_comm_identity(c: Context):
    rows = alg.comm_identity(c.algebra, c.resolution, c.gh)
    ok = all(hs == g + i for _, hs, g, i in rows)
    return ok, {"rows": [{"k": k, "h_sigma": hs, "gh": g, "dim_I": i} for k, hs, g, i in rows]}


def check_gh_suite(c: Context):
    if not c.cls.simple_in_edges:
        ok = tuple(c.gh) == tuple(c.gh[::-1])
        return ok, {"gh": c.gh, "clauses": {"a_symmetry": ok}, "note": "general polytope: clauses b-f not applicable"}
    rep = ghmod.inequality_suite(c.lattice, c.gh, c.h)
    return rep.passed, {"gh": c.gh, "clauses": rep.clauses}


def check_khovanskii(c: Context):
    c.need_sie()
    pairs = [(k, l) for l in range(2, c.d // 2 + 1) for k in range(1, l)]
    if not pairs:
        raise Skip("no-valid-range")
    rows = []
    for k, l in pairs:
        avg = ghmod.average_incidence(c.lattice, k, l)
        bound = ghmod.khovanskii_bound(c.d, k, l)
        rows.append({"k": k, "l": l, "average": avg, "bound": bound, "ok": avg <= bound})
    return all(r["ok"] for r in rows), {"rows": rows}


RUNNERS = {
    "vectors": check_vectors,
    "dehn-sommerville": check_dehn_sommerville,
    "unimodality": check_unimodality,
    "hcalc": check_hcalc,
    "ineq2": check_ineq2,
    "ineq3": check_ineq3,
    "hl": check_hl,
    "hr": check_hr,
    "morse-census": check_morse_census,
    "separatrix-basis": check_separatrix_basis,
    "iso": check_iso,
    "indep": check_indep,
    "ker": check_ker,
    "embedding-tail": check_embedding_tail,
    "comM-identity": check_comm_identity,
    "gh-suite": check_gh_suite,
    "khovanskii": check_khovanskii,
}


@dataclass
class CheckReport:
    body: dict
    timing: dict = field(default_factory=dict)

    @property
    def failed(self) -> list[str]:
        return [e["check"] for e in self.body["checks"] if e["status"] == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_json(self, with_timing: bool = True) -> dict:
        out = dict(self.body)
        if with_timing:
            out["timing"] = self.timing
        return out


def analyze(polytope, checks=CHECKS, explore: bool = False) -> CheckReport:
    c = Context(polytope, explore=explore)
    entries, timing = [], {}
    for name in checks:
        t0 = time.perf_counter()
        try:
            ok, data = RUNNERS[name](c)
            status = skipped("exploratory") if ok is None else (PASS if ok else FAIL)
        except Skip as s:
            status, data = skipped(str(s)), {}
        except PolytopeError as e:
            status, data = FAIL, {"error": f"{type(e).__name__}: {e}"}
        timing[name] = round(time.perf_counter() - t0, 6)
        entries.append({"check": name, "parameters": {"explore": explore} if name == "ker" else {},
                        "status": status, "data": jsonable(data)})
    body = {
        "label": getattr(polytope, "label", ""),
        "dim": c.d,
        "f": list(c.lattice.f_vector()),
        "h": list(c.h),
        "gh": {"label": "Ih" if c.cls.simple_in_edges else "Gh", "coefficients": list(c.gh)},
        "simplicity": {"class": str(c.cls), "nonsimple": list(c.cls.nonsimple)},
        "checks": entries,
    }
    return CheckReport(body, timing)
