from __future__ import annotations

import copy
import random
from math import gcd

import numpy as np
import pytest

import _props
from cyclic_lrc import locality, oracle
from cyclic_lrc.cyclic_code import CyclicCode, complete_defining_set
from cyclic_lrc.finite_field import cyclotomic_cosets, divisors
from cyclic_lrc.lrc_rs import OptimalCyclicParams, optimal_cyclic_code


def binary(n, reps):
    return CyclicCode.from_representatives(n, 2, reps)


@pytest.mark.parametrize("n,k,r,q,l", [(12, 6, 3, 13, 1), (12, 4, 2, 13, 0), (15, 4, 2, 16, 2),
                                       (15, 8, 4, 16, 3), (12, 3, 1, 13, 1)])
def test_group_vector_shifts_partition_coordinates(n, k, r, q, l):
    _props.group_partition_holds(n, k, r, q, l)


def test_group_check_vector_needs_divisibility():
    code = binary(21, [0, 1, 7])
    with pytest.raises(locality.CertificateError):
        locality.group_check_vector(code, 4, 0)


def test_coset_certificate_example_n21():
    code = binary(21, [0, 1, 7])
    cert = locality.coset_locality(code, 6)
    assert cert.bound_r == 6 and cert.details["l"] == 0
    assert locality.coset_locality(code, 2) is None  # no class mod 3 in the zeros
    locality.verify_certificate(code, cert)


def test_binary_simplex_certificate_n35():
    code = binary(35, [1, 15])
    cert = locality.binary_coset_locality(code, 3)
    assert (cert.bound_r, cert.count_per_symbol) == (3, 4)
    assert cert.details["subcode_weights"] == [4]
    assert all(len(S) == 3 for S in cert.recovery_sets)


def test_recovery_intersections_n63():
    from cyclic_lrc.reproduce import simplex_table_rows

    row = simplex_table_rows()[3]
    cert = locality.binary_coset_locality(binary(63, row["reps"]), row["z"])
    pair = locality.recovery_intersection(cert, [0, 1])
    assert pair["exact_without_coordinate"] == 1 and pair["exact"] <= pair["bound"]
    triple = locality.recovery_intersection(cert, [0, 1, 2])
    assert triple["exact"] <= triple["bound"]


def test_degenerate_bound_uses_core_order():
    assert locality.qary_coset_bound(2, 21, 3) == (11, 7, 3)
    assert locality.qary_coset_bound(2, 21, 1) == (10, 21, 6)


@pytest.mark.parametrize("n,reps", [(21, [0, 1, 7]), (45, [0, 3, 5, 9]), (63, [3, 27]), (35, [1, 15]),
                                    (45, [3, 5, 9, 21]), (63, [1, 9, 11, 15, 23])])
def test_every_certificate_is_sound_and_tamper_evident(n, reps):
    code = binary(n, reps)
    certs = locality.all_locality_certificates(code)
    assert certs
    r_true = oracle.exact_locality(code).r
    for cert in certs:
        locality.verify_certificate(code, cert)
        assert cert.bound_r >= r_true
        _props.tampered_certificate_rejected(code, cert)


def test_gate_rejects_inflated_counts_and_wrong_sets():
    code = binary(35, [1, 15])
    cert = locality.binary_coset_locality(code, 3)
    bad = copy.deepcopy(cert)
    bad.count_per_symbol += 5
    with pytest.raises(locality.CertificateError):
        locality.verify_certificate(code, bad)
    bad = copy.deepcopy(cert)
    bad.recovery_sets[0] = tuple(sorted(set(bad.recovery_sets[0]) ^ {34}))
    with pytest.raises(locality.CertificateError):
        locality.verify_certificate(code, bad)
    bad = copy.deepcopy(cert)
    bad.bound_r = 2
    with pytest.raises(locality.CertificateError):
        locality.verify_certificate(code, bad)


def test_ternary_two_weight_certificate():
    code = CyclicCode.from_representatives(80, 3, [1, 2, 41])
    cert = locality.ternary_two_weight_locality(code, 40)
    assert cert.bound_r == 23
    assert cert.details["words_per_symbol"] == 24 == cert.details["predicted_words_per_symbol"]
    assert cert.details["distinct_sets_per_symbol"] == 12


def test_symdiff_examples():
    code = binary(45, [3, 5, 9, 21])
    c = locality.symdiff_dual_vector(code, 3, 0, 5, 0)
    assert (c.weight, c.formula_weight, c.inclusion_exclusion_bound) == (6, 6, 6)
    big = binary(105, [0, 3, 5, 7, 9, 25, 49])
    c3 = locality.symdiff_dual_vector(big, 3, 0, 5, 0, 7, 0)
    assert c3.weight == 13 == c3.inclusion_exclusion_bound and c3.bound_r == 12
    with pytest.raises(locality.CertificateError):
        locality.symdiff_dual_vector(binary(45, [3]), 3, 0, 5, 0)


def _random_symdiff_instance(rng: random.Random):
    n = rng.choice([15, 21, 35, 45, 63])
    ds = [d for d in divisors(n) if 1 < d < n]
    p1, p2 = rng.choice(ds), rng.choice(ds)
    l1, l2 = rng.randrange(p1), rng.randrange(p2)
    return n, p1, l1, p2, l2


def test_random_symdiff_weights_match_closed_form():
    rng = random.Random(2024)
    checked = 0
    while checked < 200:
        n, p1, l1, p2, l2 = _random_symdiff_instance(rng)
        if symdiff_empty(n, p1, l1, p2, l2):
            continue
        odd = locality.odd_multiplicity_set(n, [p1, p2], [l1, l2])
        code = CyclicCode(n, binary(n, []).field, complete_defining_set(n, 2, odd))
        cert = locality.symdiff_dual_vector(code, p1, l1, p2, l2)
        assert cert.weight == locality.symdiff_weight_formula(p1, l1, p2, l2)
        assert cert.weight <= locality.symdiff_inclusion_exclusion([p1, p2], [l1, l2])
        if min(code.k, n - code.k) <= 16:
            assert oracle.dual_distance(code) <= cert.weight
        checked += 1


def symdiff_empty(n, p1, l1, p2, l2):
    return not locality.odd_multiplicity_set(n, [p1, p2], [l1, l2])


def test_odd_characteristic_symdiff():
    # n = 40 over GF(3): classes mod 5 and mod 8 with coefficients 1/p1 and -1/p2
    n, q = 40, 3
    odd = locality.odd_multiplicity_set(n, [5, 8], [0, 0])
    code = CyclicCode(n, CyclicCode.from_representatives(n, q, []).field, complete_defining_set(n, q, odd))
    cert = locality.symdiff_dual_vector(code, 5, 0, 8, 0)
    assert cert.formula_weight is None
    assert cert.weight == 5 + 8 - 2 * gcd(5, 8)
    assert oracle.dual_distance(code) <= cert.weight


def test_distance_upper_bound_family():
    from cyclic_lrc.reproduce import family_code

    code = family_code(3)
    rep = locality.distance_upper_bound(code)
    assert rep.lower.bound == 6 and rep.best_upper == 6
    for b in rep.upper:
        assert b.bound >= oracle.min_distance(code)


@pytest.mark.parametrize("n,reps", [(21, [0, 1, 7]), (45, [0, 3, 5, 9]), (15, [1, 3])])
def test_distance_bounds_bracket_the_oracle(n, reps):
    code = binary(n, reps)
    rep = locality.distance_upper_bound(code)
    d = oracle.min_distance(code)
    assert rep.lower.bound <= d
    if rep.best_upper is not None:
        assert d <= rep.best_upper


def test_certificate_json_shape():
    code = binary(21, [0, 1, 7])
    d = locality.coset_locality(code, 6).to_dict()
    assert set(d) >= {"source", "bound_r", "witness_support", "witness_values", "recovery_sets"}
    assert len(d["witness_support"]) == len(d["witness_values"])
