"""Randomized and exhaustive property suites.

Each suite pits a combinatorial formula against its numerical oracle (or
an exhaustive desk-scale enumeration) and reports pass/fail counts with
the worst observed residual.  A failure here never means an unlucky
draw: the formulas are exact integers, so any mismatch is a bug or a
wrong reading of the underlying identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .constants import B3, GAMMA
from .errors import GenerationFailed, ToleranceAmbiguity
from .extoracle import (
    DEFAULT_TOL,
    ToleranceConfig,
    boundary_dim_numeric,
    ext_dim_numeric,
    hom_dim_numeric,
)
from .factory import (
    SemisimpleSpec,
    SpecEntry,
    _random_unitary,
    assemble,
    derived_seed,
    entries_isomorphic,
    random_simple_gamma,
    scale_rep,
    validate_rep,
)
from .geometry import (
    analyze,
    component_dim,
    ext_b3_spec,
    gln_embed,
    gln_retract,
    tangent_dim_formula,
    tangent_dim_numeric,
)
from .lattice import (
    GammaDimVector,
    enumerate_hex,
    enumerate_simple_gamma,
    euler_gamma,
    euler_hex,
    ext_gamma_pair,
    ext_gamma_self,
    hex_to_gamma,
    is_simple_hex,
    twist_gamma,
)
from .scalars import ExactScalar

#: Scalars used when sampling rescalings: the identity, two sixth roots
#: of unity, and two values outside the unit circle / off the rational
#: angles, so all three extension regimes occur.
LAMBDA_POOL = (
    ExactScalar.one(),
    ExactScalar.zeta6(1),
    ExactScalar.zeta6(2),
    ExactScalar.from_rational(2),
    ExactScalar(Fraction(3, 2), Fraction(1, 7)),
)

SUITE_NAMES = ("ext", "tangent", "lemma", "gln", "symmetry")


@dataclass
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    checks: int = 0
    failed: int = 0
    worst_residual: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, residual: float = 0.0, message: str = "") -> None:
        self.checks += 1
        self.worst_residual = max(self.worst_residual, abs(residual))
        if not ok:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(message)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "checks": self.checks,
            "failed": self.failed,
            "ok": self.ok,
            "worst_residual": self.worst_residual,
            "failures": list(self.failures),
        }


def _fresh_simple(alpha: GammaDimVector, seed: int, label, tol: ToleranceConfig):
    return random_simple_gamma(alpha, derived_seed("verify", label, seed), tol=tol)


def _independent_pair(alpha, beta, seed, trial, tol):
    """Two independent instances; for equal types of dimension >= 2 the
    draw is retried until the modules are non-isomorphic (Hom = 0)."""
    for bump in range(8):
        s = _fresh_simple(alpha, seed, ("pair-a", alpha, beta, trial, bump), tol)
        t = _fresh_simple(beta, seed, ("pair-b", alpha, beta, trial, bump), tol)
        if alpha != beta or alpha.n == 1:
            return s, t
        if hom_dim_numeric(s.rep, t.rep, GAMMA, tol) == 0:
            return s, t
    raise GenerationFailed("could not draw non-isomorphic instances")


def verify_ext(max_dim: int = 3, trials: int = 20, seed: int = 0,
               tol: ToleranceConfig = DEFAULT_TOL) -> SuiteResult:
    """Oracle vs. formula for extension dimensions.

    Quotient case: for every simple type up to max_dim, the measured
    self-extension dimension of an instance against itself matches the
    self formula, and for every ordered pair of types the measured value
    on independent instances matches the pair formula (equal
    one-dimensional types are necessarily the same module and fall back
    to the self value).  Braid case: sampled rescalings from the pool
    cover the three regimes against the spec-entry formula, including
    the +1 on the diagonal and the incommensurable-scalar zero.  Also
    asserts the rank-nullity route to the coboundary dimension.
    """
    result = SuiteResult("ext")
    simples = [v for n in range(1, max_dim + 1) for v in enumerate_simple_gamma(n)]

    for alpha in simples:
        expected_self = ext_gamma_self(alpha)
        for trial in range(trials):
            inst = _fresh_simple(alpha, seed, ("self", alpha, trial), tol)
            got = ext_dim_numeric(inst.rep, inst.rep, GAMMA, tol)
            result.record(got == expected_self, got - expected_self,
                          f"self {alpha}: oracle {got} != formula {expected_self}")

    pair_trials = max(1, trials // 4)
    for alpha in simples:
        for beta in simples:
            if alpha == beta and alpha.n == 1:
                expected = 0  # the two instances are the same module
            else:
                expected = ext_gamma_pair(alpha, beta)
            for trial in range(pair_trials):
                s, t = _independent_pair(alpha, beta, seed, trial, tol)
                got = ext_dim_numeric(s.rep, t.rep, GAMMA, tol)
                result.record(got == expected, got - expected,
                              f"pair {alpha},{beta}: oracle {got} != {expected}")
                hom = hom_dim_numeric(s.rep, t.rep, GAMMA, tol)
                b_direct = boundary_dim_numeric(s.rep, t.rep, tol)
                result.record(b_direct == s.rep.n * t.rep.n - hom,
                              b_direct - (s.rep.n * t.rep.n - hom),
                              f"rank-nullity {alpha},{beta}")

    b3_types = [v for n in range(1, min(max_dim, 2) + 1)
                for v in enumerate_simple_gamma(n)]
    for ai, alpha in enumerate(b3_types):
        for bi, beta in enumerate(b3_types):
            for li, lam in enumerate(LAMBDA_POOL):
                mu = LAMBDA_POOL[(li + ai + bi) % len(LAMBDA_POOL)]
                e1 = SpecEntry(alpha, lam, 1, "L")
                e2 = SpecEntry(beta, mu, 1, "R")
                s, t = _independent_pair(alpha, beta, seed, 1000 + li, tol)
                v = scale_rep(s.rep, lam)
                w = scale_rep(t.rep, mu)
                got = ext_dim_numeric(v, w, B3, tol)
                if entries_isomorphic(e1, e2):
                    expected = ext_gamma_self(alpha) + 1
                else:
                    expected = ext_b3_spec(e1, e2)
                result.record(got == expected, got - expected,
                              f"braid {alpha}*{lam} vs {beta}*{mu}: {got} != {expected}")

    for alpha in b3_types:
        for lam in LAMBDA_POOL:
            inst = _fresh_simple(alpha, seed, ("b3self", alpha, str(lam)), tol)
            v = scale_rep(inst.rep, lam)
            got = ext_dim_numeric(v, v, B3, tol)
            expected = ext_gamma_self(alpha) + 1
            result.record(got == expected, got - expected,
                          f"braid self {alpha}*{lam}: {got} != {expected}")
    return result


def verify_symmetry(max_dim: int = 3, trials: int = 6, seed: int = 0,
                    tol: ToleranceConfig = DEFAULT_TOL) -> SuiteResult:
    """Measured braid-case extension dimensions are symmetric:
    ext(V, W) = ext(W, V) on sampled pairs of rescaled simples."""
    result = SuiteResult("symmetry")
    simples = [v for n in range(1, max_dim + 1) for v in enumerate_simple_gamma(n)]
    for trial in range(trials):
        rng = np.random.default_rng(derived_seed("symmetry", seed, trial))
        alpha = simples[rng.integers(len(simples))]
        beta = simples[rng.integers(len(simples))]
        lam = LAMBDA_POOL[rng.integers(len(LAMBDA_POOL))]
        mu = LAMBDA_POOL[rng.integers(len(LAMBDA_POOL))]
        s, t = _independent_pair(alpha, beta, seed, trial, tol)
        v = scale_rep(s.rep, lam)
        w = scale_rep(t.rep, mu)
        forward = ext_dim_numeric(v, w, B3, tol)
        backward = ext_dim_numeric(w, v, B3, tol)
        result.record(forward == backward, forward - backward,
                      f"ext({alpha}*{lam},{beta}*{mu}) = {forward} but "
                      f"reverse = {backward}")
    return result


def verify_lemma(max_total: int = 8, trials: int = 0, seed: int = 0,
                 tol: ToleranceConfig = DEFAULT_TOL) -> SuiteResult:
    """Exhaustive desk-scale checks on the hexagon lattice.

    For every vector with total at most max_total: the two Euler forms
    agree through the multiplicity map, the hexagon form is symmetric,
    and among vectors passing the simplicity criterion the quadratic
    form equals 1 exactly on the coordinate vectors and is <= 0
    everywhere else.
    """
    del trials, seed, tol  # exhaustive suite; kept for a uniform signature
    result = SuiteResult("lemma")
    vectors = [h for total in range(max_total + 1) for h in enumerate_hex(total)]
    hmat = np.array([h.as_tuple() for h in vectors], dtype=np.int64)
    euler = np.array(
        [[1, -1, 0, 0, 0, -1],
         [-1, 1, -1, 0, 0, 0],
         [0, -1, 1, -1, 0, 0],
         [0, 0, -1, 1, -1, 0],
         [0, 0, 0, -1, 1, -1],
         [-1, 0, 0, 0, -1, 1]], dtype=np.int64)
    # hexagon form on all pairs at once
    pairwise_hex = hmat @ euler @ hmat.T
    result.record(bool(np.array_equal(pairwise_hex, pairwise_hex.T)), 0,
                  "hexagon Euler matrix is not symmetric")
    # multiplicity map to (a, b; x, y, z) and the bipartite form
    to_gamma = np.array(
        [[1, 0, 1, 0, 0],
         [0, 1, 0, 1, 0],
         [1, 0, 0, 0, 1],
         [0, 1, 1, 0, 0],
         [1, 0, 0, 1, 0],
         [0, 1, 0, 0, 1]], dtype=np.int64)
    gmat = hmat @ to_gamma
    totals = hmat.sum(axis=1)
    pairwise_gamma = gmat @ gmat.T - np.outer(totals, totals)
    result.record(bool(np.array_equal(pairwise_hex, pairwise_gamma)),
                  float(np.max(np.abs(pairwise_hex - pairwise_gamma))),
                  "hexagon and bipartite Euler forms disagree")
    # spot-check the scalar API against the vectorized computation
    for i in (0, 1, len(vectors) // 2, len(vectors) - 1):
        h1, h2 = vectors[i], vectors[-1 - i]
        result.record(euler_hex(h1, h2) == int(pairwise_hex[i, len(vectors) - 1 - i]),
                      0, f"euler_hex mismatch at {h1},{h2}")
        result.record(
            euler_gamma(hex_to_gamma(h1), hex_to_gamma(h2)) == euler_hex(h1, h2),
            0, f"form identity fails at {h1},{h2}")
    # simplicity criterion vs. the quadratic form
    diag = np.einsum("ij,jk,ik->i", hmat, euler, hmat)
    for idx, h in enumerate(vectors):
        if not is_simple_hex(h):
            continue
        chi = int(diag[idx])
        if h.total == 1:
            result.record(chi == 1, chi - 1, f"coordinate vector {h} has chi {chi}")
        else:
            result.record(chi <= 0, max(0, chi), f"simple {h} has chi {chi} > 0")
    return result


def verify_gln(max_n: int = 4, trials: int = 50, seed: int = 0,
               tol: ToleranceConfig = DEFAULT_TOL) -> SuiteResult:
    """Round trips of the commuting-component isomorphism with the
    invertible matrices: G -> (G^3, G^2) -> G and back, plus the
    relation and commutation residuals of the embedding."""
    result = SuiteResult("gln")
    for n in range(2, max_n + 1):
        for trial in range(trials):
            rng = np.random.default_rng(derived_seed("gln", seed, n, trial))
            # controlled conditioning: unitary * diag(moduli in [0.8, 1.25]) * unitary
            u = _random_unitary(n, rng)
            w = _random_unitary(n, rng)
            moduli = 0.8 + 0.45 * rng.random(n)
            g = u @ np.diag(moduli.astype(complex)) @ w
            pair = gln_embed(g)
            rel = float(np.linalg.norm(pair.A @ pair.A - pair.B @ pair.B @ pair.B))
            comm = float(np.linalg.norm(pair.A @ pair.B - pair.B @ pair.A))
            result.record(rel <= 1e-12 * max(1.0, np.linalg.norm(pair.A) ** 2), rel,
                          f"embed relation residual {rel:.2e} at n={n}")
            result.record(comm <= 1e-12 * max(1.0, np.linalg.norm(pair.A) ** 2), comm,
                          f"embed commutation residual {comm:.2e} at n={n}")
            back = gln_retract(pair, tol)
            err = float(np.linalg.norm(back - g))
            result.record(err <= 1e-10, err, f"retract(embed(G)) error {err:.2e}")
            again = gln_embed(back)
            err2 = float(np.linalg.norm(again.A - pair.A) + np.linalg.norm(again.B - pair.B))
            result.record(err2 <= 1e-10, err2, f"embed(retract(V)) error {err2:.2e}")
    return result


def random_spec(n: int, seed: int = 0,
                lambda_pool: tuple[ExactScalar, ...] = LAMBDA_POOL) -> SemisimpleSpec:
    """Deterministic random semisimple spec of total dimension n:
    random simple types, scalars from the pool, occasional higher
    multiplicities and occasional reuse of an instance id with a
    different scalar."""
    rng = np.random.default_rng(derived_seed("spec", seed, n))
    entries: list[SpecEntry] = []
    remaining = n
    fresh = 0
    while remaining > 0:
        dim = int(rng.integers(1, remaining + 1))
        if rng.random() < 0.5:
            dim = 1 if remaining < 2 else int(rng.integers(1, min(remaining, 3) + 1))
        mult = 1
        if remaining // dim >= 2 and rng.random() < 0.35:
            mult = int(rng.integers(2, remaining // dim + 1))
        simples = enumerate_simple_gamma(dim)
        alpha = simples[rng.integers(len(simples))]
        lam = lambda_pool[rng.integers(len(lambda_pool))]
        if entries and rng.random() < 0.15:
            donor = entries[rng.integers(len(entries))]
            if donor.alpha.n == dim and donor.lam != lam:
                candidate = SpecEntry(donor.alpha, lam, mult, donor.instance_id)
                if not any(entries_isomorphic(candidate, e) for e in entries):
                    entries.append(candidate)
                    remaining -= dim * mult
                    continue
        candidate = SpecEntry(alpha, lam, mult, f"s{fresh}")
        fresh += 1
        merged = False
        for idx, existing in enumerate(entries):
            if entries_isomorphic(candidate, existing):
                entries[idx] = SpecEntry(existing.alpha, existing.lam,
                                         existing.mult + mult, existing.instance_id)
                merged = True
                break
        if not merged:
            entries.append(candidate)
        remaining -= dim * mult
    return SemisimpleSpec(tuple(entries))


def verify_tangent(max_n: int = 6, trials: int = 50, seed: int = 0,
                   tol: ToleranceConfig = DEFAULT_TOL) -> SuiteResult:
    """Tangent dimensions on random specs: the measured value always
    equals the formula, the assembled pair is relation-valid, and the
    smooth verdict coincides with tangent = component dimension."""
    result = SuiteResult("tangent")
    for trial in range(trials):
        rng = np.random.default_rng(derived_seed("tangent-size", seed, trial))
        n = int(rng.integers(1, max_n + 1))
        spec = random_spec(n, derived_seed("tangent", seed, trial))
        measured = None
        for bump in range(3):  # re-randomize on an ambiguous threshold
            rep = assemble(spec, seed=derived_seed("tangent-rep", seed, trial, bump),
                           tol=tol)
            try:
                measured = tangent_dim_numeric(rep, tol)
                break
            except ToleranceAmbiguity:
                continue
        if measured is None:
            result.record(False, 0, f"persistent tolerance ambiguity for {spec.to_json()}")
            continue
        valid = validate_rep(rep, B3, tol)
        result.record(bool(valid), valid.residuals.get("relation_A2_B3", 0.0),
                      f"assembled pair invalid for {spec.to_json()}")
        formula = tangent_dim_formula(spec)
        result.record(measured == formula, measured - formula,
                      f"tangent mismatch {measured} != {formula} for {spec.to_json()}")
        comp = component_dim(spec)
        verdict = analyze(spec).smooth
        result.record(verdict == (measured == comp), 0,
                      f"smooth verdict {verdict} but tangent {measured}, "
                      f"component {comp} for {spec.to_json()}")
        slack = formula - comp
        result.record(slack >= 0 and (slack == 0) == verdict, 0,
                      f"tangent defect {slack} inconsistent with verdict")
    return result


_SUITES = {
    "ext": (verify_ext, {"max_dim": 3, "trials": 20}),
    "tangent": (verify_tangent, {"max_n": 6, "trials": 50}),
    "lemma": (verify_lemma, {"max_total": 8, "trials": 0}),
    "gln": (verify_gln, {"max_n": 4, "trials": 50}),
    "symmetry": (verify_symmetry, {"max_dim": 3, "trials": 6}),
}


def run_suite(name: str, n: int | None = None, trials: int | None = None,
              seed: int = 0, tol: ToleranceConfig = DEFAULT_TOL) -> SuiteResult:
    """Run one named suite; n remaps to the suite's size parameter."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; pick one of {SUITE_NAMES}")
    fn, defaults = _SUITES[name]
    kwargs = dict(defaults)
    size_key = next(iter(defaults))
    if n is not None:
        kwargs[size_key] = n
    if trials is not None and "trials" in kwargs:
        kwargs["trials"] = trials
    return fn(seed=seed, tol=tol, **kwargs)
