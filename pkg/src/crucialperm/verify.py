"""Self-check suites run by ``crucialperm verify``.

Each suite returns a list of :class:`Check`; a suite passes when every check does.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial

from .crucial import TYPES, classify_direct, classify_rsk, has_type
from .enumeration import (
    count_brute,
    count_formula,
    count_syt,
    formula_crucial_k3,
    formula_top_right_k3,
    verify_growth,
    verify_inequalities,
)
from .errors import UnsupportedError
from .perm import PatternSpec, complement, inverse, reverse
from .tableaux import enumerate_shapes, enumerate_syt, evacuation, hook_length_count, rsk, rsk_inverse

SUITES = ("roundtrip", "equivalence", "symmetry", "growth", "inequalities", "formulas")

GROWTH_TYPES = ("right", "bi", "top_right", "tri", "quadro")

DEFAULT_SPECS = ((3, 3), (4, 3), (4, 4), (5, 3))
EQUIVALENCE_SPECS = tuple((k, l) for k in range(3, 6) for l in range(3, k + 1))


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}  {self.detail}".rstrip()


def _perms(n):
    return permutations(range(1, n + 1))


def suite_roundtrip(nmax: int = 7, **_) -> list[Check]:
    checks = []
    for n in range(nmax + 1):
        bad = sum(1 for w in _perms(n) if rsk_inverse(rsk(w)) != w)
        checks.append(Check(f"rsk_inverse(rsk(p)) = p, n={n}", bad == 0, f"{bad} failures"))
        bad_pairs = bad_evac = 0
        for shape in enumerate_shapes(n, n, n):
            tabs = list(enumerate_syt(shape))
            for P in tabs:
                if evacuation(evacuation(P)) != P or evacuation(P).shape != P.shape:
                    bad_evac += 1
                for Q in tabs:
                    if tuple(rsk((rsk_inverse((P, Q))))) != (P, Q):
                        bad_pairs += 1
        checks.append(Check(f"rsk(rsk_inverse(P,Q)) = (P,Q), n={n}", bad_pairs == 0, f"{bad_pairs} failures"))
        checks.append(Check(f"evacuation involution, size {n}", bad_evac == 0, f"{bad_evac} failures"))
    return checks


def suite_equivalence(specs=EQUIVALENCE_SPECS, nmax: int = 8, **_) -> list[Check]:
    checks = []
    for k, l in specs:
        spec = PatternSpec(k, l)
        for n in range(nmax + 1):
            bad = sum(1 for w in _perms(n) if classify_direct(w, spec) != classify_rsk(w, spec))
            checks.append(Check(f"direct = rsk, (k,l)=({k},{l}), n={n}", bad == 0, f"{bad} mismatches"))
    return checks


def suite_symmetry(specs=DEFAULT_SPECS, nmax: int = 6, **_) -> list[Check]:
    checks = []
    for n in range(nmax + 1):
        bad_r = bad_i = bad_c = 0
        for w in _perms(n):
            P, Q = rsk(w)
            if tuple(rsk(reverse(w))) != (P.transpose(), evacuation(Q).transpose()):
                bad_r += 1
            if tuple(rsk(inverse(w))) != (Q, P):
                bad_i += 1
            if tuple(rsk(complement(w))) != (evacuation(P).transpose(), Q.transpose()):
                bad_c += 1
        checks.append(Check(f"rsk(reverse) = (P^T, ev(Q)^T), n={n}", bad_r == 0, f"{bad_r} failures"))
        checks.append(Check(f"rsk(inverse) = (Q, P), n={n}", bad_i == 0, f"{bad_i} failures"))
        checks.append(Check(f"rsk(complement) = (ev(P)^T, Q^T), n={n}", bad_c == 0, f"{bad_c} failures"))
    for k, l in specs:
        spec, swapped = PatternSpec(k, l), PatternSpec(l, k)
        bad = 0
        for n in range(min(nmax, 7) + 1):
            for w in _perms(n):
                right = has_type(w, spec, "right")
                others = (
                    has_type(reverse(w), swapped, "left"),
                    has_type(inverse(w), spec, "top"),
                    has_type(complement(inverse(w)), swapped, "bottom"),
                )
                bad += any(o != right for o in others)
        checks.append(Check(f"right/left/top/bottom equivalences, (k,l)=({k},{l})", bad == 0, f"{bad} failures"))
    return checks


def suite_growth(specs=((4, 3), (4, 4), (5, 3)), **_) -> list[Check]:
    checks = []
    for k, l in specs:
        spec = PatternSpec(k, l)
        for t in GROWTH_TYPES:
            rep = verify_growth(spec, t)
            chain = " < ".join(str(r[1]) for r in rep.rows)
            if rep.rows:
                chain += f" < {rep.rows[-1][2]}"
            checks.append(Check(f"growth {t}, (k,l)=({k},{l})", rep.ok, chain))
    return checks


def suite_inequalities(specs=((4, 3), (4, 4), (5, 3)), **_) -> list[Check]:
    checks = []
    for k, l in specs:
        for c in verify_inequalities(PatternSpec(k, l)):
            checks.append(Check(f"{c.name}, (k,l)=({k},{l}), n={c.n}", c.ok, f"{c.lhs} <= {c.rhs}"))
    return checks


def suite_formulas(specs=DEFAULT_SPECS, nmax: int = 8, **_) -> list[Check]:
    checks = []
    for n in range(nmax + 1):
        total = sum(hook_length_count(s) ** 2 for s in enumerate_shapes(n, n, n))
        checks.append(Check(f"sum of f(shape)^2 = n!, n={n}", total == factorial(n), f"{total}"))
    for k in range(3, nmax):
        spec = PatternSpec(k, 3)
        for n in range(k + 1, nmax + 1):
            brute = count_brute(n, spec, "right").count
            checks.append(Check(f"(k,3)-crucial formula, k={k}, n={n}", formula_crucial_k3(n, k) == brute, f"{brute}"))
            brute = count_brute(n, spec, "top_right").count
            checks.append(Check(f"(k,3)-top-right formula, k={k}, n={n}", formula_top_right_k3(n, k) == brute, f"{brute}"))
    for k, l in specs:
        spec = PatternSpec(k, l)
        for t in TYPES:
            for n in range(min(nmax, spec.max_length) + 1):
                try:
                    f = count_formula(n, spec, t).count
                except UnsupportedError:
                    continue
                b = count_brute(n, spec, t).count
                s = count_syt(n, spec, t).count
                checks.append(Check(f"formula = syt = brute, {t}, (k,l)=({k},{l}), n={n}", f == b == s, f"{f}/{s}/{b}"))
    return checks


def run_suite(name: str, spec: PatternSpec | None = None, nmax: int | None = None) -> list[Check]:
    fn = {
        "roundtrip": suite_roundtrip,
        "equivalence": suite_equivalence,
        "symmetry": suite_symmetry,
        "growth": suite_growth,
        "inequalities": suite_inequalities,
        "formulas": suite_formulas,
    }[name]
    kwargs = {}
    if spec is not None:
        kwargs["specs"] = ((spec.k, spec.l),)
    if nmax is not None:
        kwargs["nmax"] = nmax
    return fn(**kwargs)
