"""Numeric rank machinery and the Hom / Ext oracles on known cases."""

import numpy as np
import pytest

from b3rep import (
    B3,
    GAMMA,
    ExactScalar,
    GammaDimVector,
    SemisimpleSpec,
    SpecEntry,
    ToleranceAmbiguity,
    ToleranceConfig,
    assemble,
    boundary_dim_numeric,
    cocycle_dim_numeric,
    enumerate_simple_gamma,
    ext_dim_numeric,
    ext_gamma_pair,
    ext_gamma_self,
    hom_dim_numeric,
    numeric_kernel_dim,
    numeric_rank,
    one_dim_rep,
    random_simple_gamma,
    scale_rep,
)

ONE = ExactScalar.one()


# ---------------------------------------------------------------------------
# rank / kernel plumbing
# ---------------------------------------------------------------------------

def test_tolerance_config_invariants():
    with pytest.raises(ValueError):
        ToleranceConfig(rel_tol=1e-12, abs_floor=1e-8)
    with pytest.raises(ValueError):
        ToleranceConfig(rel_tol=2.0)
    ToleranceConfig(rel_tol=1e-6, abs_floor=1e-14)


def test_kernel_dim_basics():
    assert numeric_kernel_dim(np.eye(3)) == 0
    assert numeric_kernel_dim(np.ones((2, 2))) == 1
    assert numeric_kernel_dim(np.zeros((0, 5))) == 5
    assert numeric_kernel_dim(np.zeros((4, 4))) == 4
    assert numeric_rank(np.diag([1.0, 1e-3, 1e-15])) == 2


def test_near_threshold_singular_value_is_ambiguous():
    # a clean system at default tolerance turns ambiguous when the
    # threshold is pushed into the spectrum
    v = one_dim_rep(0)
    assert ext_dim_numeric(v, v, B3) == 1
    with pytest.raises(ToleranceAmbiguity):
        ext_dim_numeric(v, v, B3, ToleranceConfig(rel_tol=0.9, abs_floor=1e-13))


# ---------------------------------------------------------------------------
# Hom
# ---------------------------------------------------------------------------

def test_hom_between_characters():
    v0, v1 = one_dim_rep(0), one_dim_rep(1)
    assert hom_dim_numeric(v0, v0, GAMMA) == 1
    assert hom_dim_numeric(v0, v1, GAMMA) == 0


def test_hom_of_isotypic_double():
    spec = SemisimpleSpec((SpecEntry(GammaDimVector(1, 1, 1, 1, 0), ONE, 2, "s"),))
    rep = assemble(spec, seed=1)
    assert hom_dim_numeric(rep, rep, B3) == 4


def test_hom_requires_matching_kind_tags():
    v0 = one_dim_rep(0)
    scaled = scale_rep(v0, ExactScalar.from_rational(2))
    with pytest.raises(ValueError):
        hom_dim_numeric(v0, scaled, GAMMA)
    assert hom_dim_numeric(v0, scaled, B3) == 0


# ---------------------------------------------------------------------------
# Ext over the quotient: the hexagon read off numerically
# ---------------------------------------------------------------------------

def test_characters_reproduce_the_hexagon():
    reps = [one_dim_rep(u) for u in range(6)]
    for i in range(6):
        for j in range(6):
            expected = 1 if (i - j) % 6 in (1, 5) else 0
            assert ext_dim_numeric(reps[i], reps[j], GAMMA) == expected, (i, j)


def test_quotient_self_extensions_match_formula():
    for alpha in (GammaDimVector(1, 1, 1, 1, 0), GammaDimVector(2, 1, 1, 1, 1),
                  GammaDimVector(2, 2, 2, 1, 1)):
        inst = random_simple_gamma(alpha, seed=17)
        assert ext_dim_numeric(inst.rep, inst.rep, GAMMA) == ext_gamma_self(alpha)


def test_quotient_self_extensions_dimension_four():
    for alpha in enumerate_simple_gamma(4):
        expected = ext_gamma_self(alpha)
        for seed in range(20):
            inst = random_simple_gamma(alpha, seed=seed)
            assert ext_dim_numeric(inst.rep, inst.rep, GAMMA) == expected, (alpha, seed)


def test_quotient_pairs_match_formula():
    a = GammaDimVector(1, 1, 1, 1, 0)
    b = GammaDimVector(0, 1, 0, 0, 1)
    s = random_simple_gamma(a, seed=21)
    t = random_simple_gamma(b, seed=22)
    assert ext_dim_numeric(s.rep, t.rep, GAMMA) == ext_gamma_pair(a, b) == 1


# ---------------------------------------------------------------------------
# Ext over the braid relation: the three regimes
# ---------------------------------------------------------------------------

def test_braid_self_extension_gains_one_dimension():
    v0 = one_dim_rep(0)
    assert ext_dim_numeric(v0, v0, B3) == 1
    inst = random_simple_gamma(GammaDimVector(1, 1, 1, 1, 0), seed=3)
    assert ext_dim_numeric(inst.rep, inst.rep, B3) == ext_gamma_self(inst.alpha) + 1
    lam = ExactScalar(2, 0)
    scaled = scale_rep(inst.rep, lam)
    assert ext_dim_numeric(scaled, scaled, B3) == ext_gamma_self(inst.alpha) + 1


def test_braid_incommensurable_scalars_kill_extensions():
    v0 = one_dim_rep(0)
    assert ext_dim_numeric(v0, scale_rep(v0, ExactScalar.from_rational(2)), B3) == 0
    inst = random_simple_gamma(GammaDimVector(1, 1, 1, 1, 0), seed=4)
    w = scale_rep(inst.rep, ExactScalar.from_rational(3))
    assert ext_dim_numeric(inst.rep, w, B3) == 0
    assert ext_dim_numeric(w, inst.rep, B3) == 0


def test_braid_sixth_root_twist_reduces_to_quotient_case():
    v0 = one_dim_rep(0)
    for k in range(6):
        w = scale_rep(v0, ExactScalar.zeta6(k))
        expected = 1 if k in (1, 5) else (1 if k == 0 else 0)
        assert ext_dim_numeric(v0, w, B3) == expected, k


def test_boundary_dimension_agrees_with_rank_nullity():
    a = GammaDimVector(1, 1, 1, 1, 0)
    s = random_simple_gamma(a, seed=31)
    t = random_simple_gamma(a, seed=32)
    for v, w in ((s.rep, t.rep), (s.rep, s.rep), (one_dim_rep(0), s.rep)):
        hom = hom_dim_numeric(v, w, GAMMA)
        assert boundary_dim_numeric(v, w) == v.n * w.n - hom


def test_cocycle_space_of_braid_relation_contains_boundaries():
    s = random_simple_gamma(GammaDimVector(2, 1, 1, 1, 1), seed=8)
    z = cocycle_dim_numeric(s.rep, s.rep, B3)
    hom = hom_dim_numeric(s.rep, s.rep, B3)
    b = s.rep.n ** 2 - hom
    assert z - b == ext_gamma_self(s.alpha) + 1
