"""Smoothness analysis at semisimple points of the variety A^2 = B^3.

For a semisimple module given by a ``SemisimpleSpec`` this module
computes, purely combinatorially:

* pairwise extension dimensions between the simple summands (the
  three-case rule: zero unless the scalars differ by a sixth root of
  unity, a twisted quiver value when they do, and one extra dimension on
  the diagonal),
* the local quiver at the point,
* the dimension of the irreducible component the point sits on,
* the tangent-space dimension,
* the smooth/singular verdict: smooth iff all cross extensions vanish
  and every summand of dimension > 1 appears with multiplicity 1,
* for singular points, witness signatures of second components through
  the point (merging two summand types, or doubling one of dimension
  >= 3).

Each combinatorial value has a numerical twin built from explicit
matrices (`tangent_dim_numeric` here, the Hom/Ext oracles in the
companion module); the test suite holds the two sides together.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import B3RepError, IsomorphicDistinctEntries, WitnessUnavailable
from .extoracle import DEFAULT_TOL, ToleranceConfig, _kernel_dim_checked
from .factory import RepPair, SemisimpleSpec, SpecEntry, entries_isomorphic
from .constants import B3
from .lattice import (
    GammaDimVector,
    ext_gamma_pair,
    ext_gamma_self,
    is_simple_gamma,
    orbit_class,
    simple_orbit_classes,
    twist_gamma,
)
from .scalars import mu6_exponent


def iso_spec(e1: SpecEntry, e2: SpecEntry) -> bool:
    """Whether two spec entries denote isomorphic modules (declared data
    plus twist matching for one-dimensional types)."""
    return entries_isomorphic(e1, e2)


def ext_b3_spec(e1: SpecEntry, e2: SpecEntry) -> int:
    """Extension dimension between the modules of two spec entries.

    Self entries get the quotient self-extension count plus one (the
    extra direction along the rescaling orbit); otherwise the value is
    zero unless the scalars differ by a sixth root of unity zeta6^k, in
    which case it is the pair value of alpha1 against the k-twist of
    alpha2.
    """
    if e1 == e2:
        return ext_gamma_self(e1.alpha) + 1
    if iso_spec(e1, e2):
        raise IsomorphicDistinctEntries(
            "distinct entries denote isomorphic modules; merge multiplicities"
        )
    k = mu6_exponent(e2.lam, e1.lam)
    if k is None:
        return 0
    return ext_gamma_pair(e1.alpha, twist_gamma(e2.alpha, k))


@dataclass(frozen=True)
class ComponentSignature:
    """Multiset of twist-orbit classes, one member per simple factor
    (multiplicity = repetition).  Labels an irreducible component."""

    factors: tuple[GammaDimVector, ...]

    def __post_init__(self):
        factors = tuple(sorted(self.factors))
        if not factors:
            raise ValueError("signature needs at least one factor")
        for f in factors:
            if orbit_class(f) != f:
                raise ValueError(f"{f} is not a canonical orbit representative")
            if not is_simple_gamma(f):
                raise ValueError(f"{f} is not a simple dimension vector")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def from_factors(cls, vectors) -> "ComponentSignature":
        """Build from arbitrary simple vectors, collapsing each to its
        canonical orbit representative."""
        return cls(tuple(orbit_class(v) for v in vectors))

    @property
    def n(self) -> int:
        return sum(f.n for f in self.factors)

    @property
    def k(self) -> int:
        return len(self.factors)

    def dimension(self) -> int:
        """Dimension of the labelled component: n^2 plus the sum of the
        factors' self-extension counts."""
        return self.n ** 2 + sum(ext_gamma_self(f) for f in self.factors)

    def to_json(self) -> list[list[int]]:
        return [f.to_json() for f in self.factors]

    def __str__(self) -> str:
        return "{" + ", ".join(str(f) for f in self.factors) + "}"


@dataclass(frozen=True)
class LocalQuiver:
    """Ext quiver at a semisimple point: one vertex per entry (with its
    multiplicity), arrow counts = pairwise extension dimensions."""

    entries: tuple[SpecEntry, ...]
    arrows: tuple[tuple[int, ...], ...]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(e.mult for e in self.entries)

    def to_json(self) -> dict:
        return {
            "vertices": [e.to_json() for e in self.entries],
            "arrows": [list(row) for row in self.arrows],
        }


def local_quiver(spec: SemisimpleSpec) -> LocalQuiver:
    """Local quiver of the spec: loops count self-extensions plus one,
    cross arrows the pairwise extension dimensions.  The arrow matrix is
    symmetric."""
    k = spec.k
    arrows = [[0] * k for _ in range(k)]
    for i, ei in enumerate(spec.entries):
        for j, ej in enumerate(spec.entries):
            arrows[i][j] = ext_b3_spec(ei, ej)
    return LocalQuiver(spec.entries, tuple(tuple(row) for row in arrows))


def component_signature(spec: SemisimpleSpec) -> ComponentSignature:
    """Signature of the component the spec's point sits on: the orbit
    class of each entry's type, repeated by its multiplicity."""
    factors = []
    for e in spec.entries:
        factors.extend([e.alpha] * e.mult)
    return ComponentSignature.from_factors(factors)


def component_dim(spec: SemisimpleSpec) -> int:
    """Dimension of the component through the point:
    n^2 + sum_i e_i * selfext(alpha_i)."""
    return spec.n ** 2 + sum(e.mult * ext_gamma_self(e.alpha) for e in spec.entries)


def tangent_dim_formula(spec: SemisimpleSpec) -> int:
    """Tangent-space dimension at the point:
    n^2 + sum_i e_i^2 selfext(alpha_i) + sum_{i<j} 2 e_i e_j ext(S_i, S_j)."""
    total = spec.n ** 2
    entries = spec.entries
    for i, e in enumerate(entries):
        total += e.mult ** 2 * ext_gamma_self(e.alpha)
        for j in range(i + 1, len(entries)):
            total += 2 * e.mult * entries[j].mult * ext_b3_spec(e, entries[j])
    return total


def tangent_dim_numeric(V: RepPair, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Tangent-space dimension measured from the matrices: 2 n^2 minus
    the rank of the linearized relation

        (dA, dB) -> dA A + A dA - (dB B^2 + B dB B + B^2 dB).

    Raises ToleranceAmbiguity when the rank threshold is not clean.
    """
    n = V.n
    eye = np.eye(n)
    b2 = V.B @ V.B
    block_a = np.kron(eye, V.A.T) + np.kron(V.A, eye)
    block_b = np.kron(eye, b2.T) + np.kron(V.B, V.B.T) + np.kron(b2, eye)
    jac = np.hstack([block_a, -block_b])
    return _kernel_dim_checked(jac, tol)


@dataclass(frozen=True)
class AnalysisReport:
    """Verdict and supporting data for one semisimple point."""

    n: int
    signature: ComponentSignature
    component_dim: int
    tangent_dim: int
    smooth: bool
    failed_conditions: tuple[dict, ...]
    witnesses: tuple[ComponentSignature, ...]
    local_quiver: LocalQuiver
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "signature": self.signature.to_json(),
            "component_dim": self.component_dim,
            "tangent_dim": self.tangent_dim,
            "smooth": self.smooth,
            "failed_conditions": [dict(f) for f in self.failed_conditions],
            "witnesses": [w.to_json() for w in self.witnesses],
            "local_quiver": self.local_quiver.to_json(),
            "notes": list(self.notes),
        }


def _failed_conditions(spec: SemisimpleSpec) -> list[dict]:
    """Smoothness failures: cross pairs with nonzero extensions, and
    higher-dimensional summands with multiplicity >= 2.  Entry indices
    are 1-based."""
    failures = []
    entries = spec.entries
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            ext = ext_b3_spec(entries[i], entries[j])
            if ext:
                failures.append(
                    {"kind": "cross_ext", "entries": [i + 1, j + 1], "ext": ext}
                )
    for i, e in enumerate(entries):
        if e.dim > 1 and e.mult > 1:
            failures.append(
                {"kind": "multiplicity", "entry": i + 1, "dim": e.dim, "mult": e.mult}
            )
    return failures


def intersection_witnesses(spec: SemisimpleSpec) -> list[ComponentSignature]:
    """Signatures of second components through a singular point.

    Each failed cross pair (i, j) yields the signature in which one
    copy of alpha_i and one twist-aligned copy of alpha_j merge into the
    single simple type alpha_i + twist(alpha_j, k); each entry of
    dimension >= 3 with multiplicity >= 2 yields the signature merging
    two copies into 2 alpha_i.  Raises WitnessUnavailable when the point
    is singular but every failure is a dimension-2 summand with
    multiplicity >= 2 (no witness exists in general there), and
    ValueError on a smooth spec.
    """
    failures = _failed_conditions(spec)
    if not failures:
        raise ValueError("point is smooth; no intersection witnesses")
    entries = spec.entries
    base = []
    for e in entries:
        base.extend([orbit_class(e.alpha)] * e.mult)

    def merged_signature(removals: list[tuple[int, int]], merged: GammaDimVector):
        factors = list(base)
        for idx, copies in removals:
            for _ in range(copies):
                factors.remove(orbit_class(entries[idx].alpha))
        factors.append(orbit_class(merged))
        return ComponentSignature.from_factors(factors)

    witnesses: list[ComponentSignature] = []
    for failure in failures:
        if failure["kind"] == "cross_ext":
            i, j = (t - 1 for t in failure["entries"])
            k = mu6_exponent(entries[j].lam, entries[i].lam)
            if k is None:
                continue
            merged = entries[i].alpha + twist_gamma(entries[j].alpha, k)
            if not is_simple_gamma(merged):
                raise B3RepError(
                    f"merged vector {merged} failed the simplicity criterion; "
                    "this contradicts the merging rule and wants a close look"
                )
            witnesses.append(merged_signature([(i, 1), (j, 1)], merged))
        elif failure["kind"] == "multiplicity" and failure["dim"] >= 3:
            i = failure["entry"] - 1
            merged = 2 * entries[i].alpha
            if not is_simple_gamma(merged):
                raise B3RepError(
                    f"doubled vector {merged} failed the simplicity criterion"
                )
            witnesses.append(merged_signature([(i, 2)], merged))
    deduped = []
    for w in witnesses:
        if w not in deduped:
            deduped.append(w)
    if not deduped:
        offenders = [f for f in failures if f["kind"] == "multiplicity"]
        raise WitnessUnavailable(
            "all failures are 2-dimensional summands with multiplicity >= 2 "
            f"(entries {[f['entry'] for f in offenders]}); the point is "
            "singular but a second generically-semisimple component is not "
            "guaranteed"
        )
    return deduped


def analyze(spec: SemisimpleSpec) -> AnalysisReport:
    """Full smoothness report for one semisimple point."""
    failures = tuple(_failed_conditions(spec))
    smooth = not failures
    witnesses: tuple[ComponentSignature, ...] = ()
    notes: list[str] = []
    if not smooth:
        try:
            witnesses = tuple(intersection_witnesses(spec))
        except WitnessUnavailable as exc:
            notes.append(str(exc))
        for f in failures:
            if f["kind"] == "multiplicity" and f["dim"] == 2:
                notes.append(
                    f"entry {f['entry']}: 2-dimensional simple with multiplicity "
                    f"{f['mult']}; singular, but not necessarily an intersection "
                    "of two components with generically semisimple points"
                )
        if witnesses:
            notes.append(
                "witness components are labelled by their signatures; distinct "
                "signatures are assumed to give distinct components"
            )
    return AnalysisReport(
        n=spec.n,
        signature=component_signature(spec),
        component_dim=component_dim(spec),
        tangent_dim=tangent_dim_formula(spec),
        smooth=smooth,
        failed_conditions=failures,
        witnesses=witnesses,
        local_quiver=local_quiver(spec),
        notes=tuple(notes),
    )


def enumerate_component_signatures(n: int) -> list[ComponentSignature]:
    """All component signatures in total dimension n: multisets of
    simple orbit classes whose dimensions sum to n.  Sorted by component
    dimension, then lexicographically on the factor lists."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    pool: list[GammaDimVector] = []
    for d in range(1, n + 1):
        pool.extend(simple_orbit_classes(d))

    signatures: list[ComponentSignature] = []

    def extend(start: int, remaining: int, chosen: list[GammaDimVector]):
        if remaining == 0:
            signatures.append(ComponentSignature(tuple(chosen)))
            return
        for idx in range(start, len(pool)):
            if pool[idx].n <= remaining:
                chosen.append(pool[idx])
                extend(idx, remaining - pool[idx].n, chosen)
                chosen.pop()

    extend(0, n, [])
    return sorted(signatures, key=lambda s: (s.dimension(), s.factors))


def gln_embed(G: np.ndarray) -> RepPair:
    """Embed an invertible matrix as the commuting pair (G^3, G^2); its
    image always satisfies A^2 = B^3 and AB = BA."""
    G = np.asarray(G, dtype=complex)
    sing = np.linalg.svd(G, compute_uv=False)
    if sing[-1] <= DEFAULT_TOL.rel_tol * sing[0]:
        raise ValueError("matrix is numerically singular")
    return RepPair(G @ G @ G, G @ G, B3)


def gln_retract(V: RepPair, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Inverse of the embedding on the commuting component: A B^{-1}.
    Rejects pairs that do not commute at tolerance."""
    comm = np.linalg.norm(V.A @ V.B - V.B @ V.A)
    scale = max(1.0, float(np.linalg.norm(V.A) * np.linalg.norm(V.B)))
    if comm > tol.rel_tol * scale:
        raise ValueError(
            f"pair does not commute (residual {comm:.3e}); not in the "
            "commuting component"
        )
    return V.A @ np.linalg.inv(V.B)
