"""Worked examples, each checked end to end. Used by ``steklov-orb demo``."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import io
from .ball_quotients import (
    close_group,
    cyclic_rotations,
    diagonal,
    dtn_cone,
    dtn_disk,
    quotient_ball_spectrum,
)
from .bounds import cone_complex, euler_characteristic, sharpness_table
from .inverse import (
    BoundaryDataClass,
    boundary_class,
    data_equivalent,
    enumerate_class_members,
    peel_progressions,
    recover_boundary_class,
)
from .spectra import (
    BoundaryData,
    canonical_disk_spectrum,
    canonical_half_disk_spectrum,
    canonical_spectrum,
    enumerate_spectrum,
    spectra_equal,
)
from .sunada import (
    klein_four,
    matrix_action,
    permutation_character_equal,
    sunada_ball_check,
    sunada_condition,
)

F = Fraction


def _vals(view):
    return [io.rat(v) for v in view.values]


def disk(**_) -> dict:
    view = enumerate_spectrum(canonical_disk_spectrum(2, pi_lengths=True), 7)
    expected = [F(x) for x in (0, 1, 1, 2, 2, 3, 3)]
    return {"input": "disk of circumference 2*pi", "values": _vals(view),
            "ok": list(view.values) == expected}


def half_disk(**_) -> dict:
    view = enumerate_spectrum(canonical_half_disk_spectrum(1), 5)
    return {"input": "half-disk, boundary length 1", "values_times_pi": _vals(view),
            "ok": list(view.values) == [F(x) for x in range(5)]}


def ell1ell2(l1=F(1), l2=F(2), **_) -> dict:
    a = BoundaryData((2 * l1,), (l2, l2))
    b = BoundaryData((2 * l2,), (l1, l1))
    sa, sb = canonical_spectrum(a), canonical_spectrum(b)
    equal = spectra_equal(sa, sb)
    return {"first": {"boundary": io.boundary_to_json(a), "spectrum": io.spectrum_to_json(sa),
                      "values_times_pi": _vals(enumerate_spectrum(sa, 12))},
            "second": {"boundary": io.boundary_to_json(b), "spectrum": io.spectrum_to_json(sb),
                       "values_times_pi": _vals(enumerate_spectrum(sb, 12))},
            "verdict": "EQUAL" if equal else "DIFFERENT",
            "ok": equal and data_equivalent(a, b)}


def inverse(**_) -> dict:
    a = BoundaryData((F(2),), (F(2), F(2)))
    view = enumerate_spectrum(canonical_spectrum(a), 40)
    cls = recover_boundary_class(peel_progressions(view))
    members = enumerate_class_members(cls)
    expected = [BoundaryData((F(2),), (F(2), F(2))), BoundaryData((F(4),), (F(1), F(1)))]
    single = enumerate_class_members(BoundaryDataClass(0, 3, (F(2), F(4), F(6))))
    return {"r": cls.r, "s": cls.s, "merged_lengths": [io.rat(x) for x in cls.merged_lengths],
            "members": [io.boundary_to_json(m) for m in members],
            "singleton_example": [io.boundary_to_json(m) for m in single],
            "ok": (members == expected and cls == boundary_class(a)
                   and single == [BoundaryData((), (F(1), F(2), F(3)))])}


def cone(k=7, modes=10, **_) -> dict:
    c, d = dtn_cone(k, modes), dtn_disk(1, modes)
    same = c.same_operator(d)
    via_quotient = quotient_ball_spectrum(cyclic_rotations(k), k, 3 * k)
    expected = [F(0)] + [F(j) for j in (1, 2, 3) for _ in range(2)]
    return {"cone": io.dtn_to_json(c), "disk": io.dtn_to_json(d),
            "quotient_spectrum": _vals(via_quotient),
            "verdict": "IDENTICAL" if same else "DIFFERENT",
            "ok": same and list(via_quotient.values) == expected}


def ball(**_) -> dict:
    view = quotient_ball_spectrum(close_group([((1, 0), (0, 1))]), 1, 3)
    return {"input": "unit disk, trivial group, degree <= 3", "values": _vals(view),
            "ok": list(view.values) == [F(x) for x in (0, 1, 1, 2, 2, 3, 3)]}


def _klein_case(mats, max_degree) -> dict:
    G = klein_four()
    s, t, st = G.index("s"), G.index("t"), G.index("st")
    H = [G.generated_by(s), G.generated_by(t), G.generated_by(st)]
    K = [frozenset({G.identity}), frozenset(range(4)), frozenset(range(4))]
    action = matrix_action(G, mats)
    rep = sunada_condition(G, H, K)
    perm = permutation_character_equal(G, H, K)
    ball_ok = sunada_ball_check(action, H, K, max_degree)
    return {"sunada_condition": bool(rep),
            "per_class": [{"class": [G.labels[i] for i in r.conjugacy_class],
                           "H": io.rat(r.h_side), "K": io.rat(r.k_side)} for r in rep.rows],
            "permutation_characters_equal": perm,
            "ball_spectra_equal": bool(ball_ok), "max_degree": max_degree,
            "ok": bool(rep) and perm and bool(ball_ok)}


def klein_rotations_case(max_degree=30, **_) -> dict:
    # element order matches klein_four(): 1, s, t, st
    mats = [diagonal(1, 1, 1), diagonal(1, -1, -1), diagonal(-1, 1, -1), diagonal(-1, -1, 1)]
    return _klein_case(mats, max_degree)


def klein_reflections_case(max_degree=30, **_) -> dict:
    # s, t reflect across the xy- and xz-planes; st is their product
    mats = [diagonal(1, 1, 1), diagonal(1, 1, -1), diagonal(1, -1, 1), diagonal(1, -1, -1)]
    return _klein_case(mats, max_degree)


def sharpness(**_) -> dict:
    tables = {m: sharpness_table(m, 6) for m in (2, 3)}
    ok = all(row["sharp"] for m in tables for row in tables[m] if row["j"] >= 2)
    return {"tables": {str(m): t for m, t in tables.items()},
            "note": ("sigma2 here is the lattice L1 minimum; for m >= 2 the lowest nonzero "
                     "Steklov eigenvalue is first_invariant_degree = min(2, sigma2)"),
            "ok": ok}


def euler_cone(**_) -> dict:
    vals = {k: euler_characteristic(cone_complex(k)) for k in (2, 3, 5, 7)}
    return {"chi": {str(k): io.rat(v) for k, v in vals.items()},
            "ok": all(v == F(1, k) for k, v in vals.items())}


CASES: dict[str, Callable[..., dict]] = {
    "disk": disk,
    "half-disk": half_disk,
    "ell1ell2": ell1ell2,
    "inverse": inverse,
    "ball": ball,
    "cone": cone,
    "klein-rotations": klein_rotations_case,
    "klein-reflections": klein_reflections_case,
    "sharpness": sharpness,
    "euler-cone": euler_cone,
}


def run(names=None, **kwargs) -> dict:
    names = list(names or CASES)
    results = []
    for name in names:
        out = CASES[name](**kwargs)
        results.append({"name": name, **out})
    return {"cases": results, "all_ok": all(r["ok"] for r in results)}
