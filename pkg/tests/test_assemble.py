import random
from math import comb

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import projcoh.assemble as assemble
from projcoh.arrangement import ArrangementError, Subtorus, build_arrangement
from projcoh.assemble import check_invariants, cohomology, ranks_mod_p, verify_mod_p
from projcoh.exactlin import AbelianGroup, IntMatrix
from projcoh.mvss import NegativeF
from projcoh.skgroups import S3Status, SkGroups, compute_s3, compute_sk

from conftest import preset_arrangement
from test_skgroups import INDETERMINATE_STABILIZERS, bare_arrangement


def result_for(name, cache={}):
    if name not in cache:
        cache[name] = cohomology(preset_arrangement(name))
    return cache[name]


def test_danzer_row():
    r = result_for("danzer")
    assert r.h == (AbelianGroup(1), AbelianGroup(7), AbelianGroup(16), AbelianGroup(20, (2,)))
    assert r.chi == 10


def test_zeroth_group_comes_from_the_rank_formula(preset_name):
    r = result_for(preset_name)
    ha = r.homology_A.h
    s = r.sk.free_ranks()
    assert 0 + s[0] + s[1] - comb(6, 1) == 1 == r.h0.free_rank
    assert r.h1.free_rank == ha[4].free_rank + s[1] + s[2] - comb(6, 2)


def test_invariants_hold(preset_name):
    assert check_invariants(preset_arrangement(preset_name), result_for(preset_name)) == []


def test_betti_sum_equals_count_formula(preset_name):
    r = result_for(preset_name)
    assert r.chi_betti == r.chi
    assert not any("Betti" in w for w in r.warnings)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_universal_coefficients(preset_name, p):
    rep = verify_mod_p(preset_arrangement(preset_name), result_for(preset_name), p)
    assert rep.passed, [c for c in rep.checks if not c["passed"]]


@pytest.mark.parametrize("name,diff", [("danzer", 1), ("ammann-kramer", 1),
                                       ("dual-canonical-d6", 21), ("canonical-d6", 2)])
def test_h3_jump_mod_two(name, diff):
    r = result_for(name)
    fp = ranks_mod_p(preset_arrangement(name), 2)
    assert fp["H"][3] - r.h3.free_rank == diff


def test_coprime_prime_changes_nothing(preset_name):
    r = result_for(preset_name)
    fp = ranks_mod_p(preset_arrangement(preset_name), 7)
    assert fp["H"] == [g.free_rank for g in r.h]
    assert fp["H_A"] == [g.free_rank for g in r.homology_A.h]


def test_rank_tables_for_requested_primes():
    r = cohomology(preset_arrangement("danzer"), primes=(2, 3))
    assert r.rank_table["Q"] == [1, 7, 16, 20]
    assert r.rank_table["3"] == [1, 7, 16, 20]
    # the Z_2 in H^3 also shows up in H^2 over F_2
    assert r.rank_table["2"] == [1, 7, 17, 21]


def test_indeterminate_s3_gives_a_bracket(monkeypatch):
    arr = preset_arrangement("danzer")
    real = compute_sk(arr)
    stuck = compute_s3(bare_arrangement(INDETERMINATE_STABILIZERS))
    monkeypatch.setattr(assemble, "compute_sk",
                        lambda a: SkGroups(real.s0, real.s1, real.s2, stuck))
    r = cohomology(arr)
    assert r.s3_status is S3Status.INDETERMINATE
    assert r.h3_torsion_bracket["from_H2A"] == [2]
    assert r.h3_torsion_bracket["possible_S3_torsion"] == [2]
    assert any("undecided" in w for w in r.warnings)


def random_seed_tori(rng, k):
    out = []
    while len(out) < k:
        vs = [[rng.choice([-1, 0, 0, 1, 1]) for _ in range(6)] for _ in range(4)]
        t = Subtorus.make(vs)
        if t.dim == 4:
            out.append(t)
    return out


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 4))
def test_betti_identity_on_random_arrangements(seed, k):
    # the S_k and binomial terms telescope, leaving the count formula
    rng = random.Random(seed)
    try:
        arr = build_arrangement([IntMatrix.identity(6)], random_seed_tori(rng, k))
        r = cohomology(arr)
    except (ArrangementError, NegativeF):
        assume(False)
    assert r.chi_betti == r.chi
    for p in (2, 3):
        assert verify_mod_p(arr, r, p).passed
