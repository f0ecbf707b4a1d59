import random

import pytest

from blocodes import (AffineMap, BiPoly, Codeword, FieldDesc, OracleBudget, PpcParams,
                      build_plan, corrupt_codeword, encode_blo, list_decode,
                      oracle_cross_check, oracle_list_decode, ppc_to_blelo,
                      random_message)
from blocodes.demos import ppc61_params
from blocodes.errors import BudgetError

F7 = FieldDesc(7)
F61 = FieldDesc(61)


def tiny_instance():
    params = PpcParams(AffineMap.of(F7, 1, 1), AffineMap.of(F7, 3),
                       F7.elt(0), F7.elt(1), 1, 1)
    return ppc_to_blelo(params)


def test_radius_zero_clean_codeword():
    inst = tiny_instance()
    cw = encode_blo(inst, BiPoly.constant(F7, 4))
    results = oracle_list_decode(inst, cw, 0)
    assert len(results) == 1
    assert results[0][0].coeff_vector(1, 1) == (4,)
    assert results[0][1] == 0


def test_radius_n_returns_everything():
    inst = tiny_instance()
    cw = encode_blo(inst, BiPoly.constant(F7, 4))
    results = oracle_list_decode(inst, cw, inst.n)
    assert len(results) == 7
    # Odometer order: message index equals the constant coefficient.
    assert [m.coeff_vector(1, 1)[0] for m, _ in results] == list(range(7))


def test_monotone_in_radius():
    inst = tiny_instance()
    rng = random.Random(6)
    received = Codeword(F7, tuple(tuple(rng.randrange(7) for _ in range(inst.s))
                                  for _ in range(inst.n)))
    smaller = {m.coeff_vector(1, 1) for m, _ in oracle_list_decode(inst, received, 2)}
    larger = {m.coeff_vector(1, 1) for m, _ in oracle_list_decode(inst, received, 4)}
    assert smaller <= larger


def test_worker_partitioning_does_not_change_results():
    inst = ppc_to_blelo(ppc61_params())
    rng = random.Random(9)
    msg = random_message(F61, 1, 3, rng)
    received = corrupt_codeword(encode_blo(inst, msg), 4, 123)
    one = oracle_list_decode(inst, received, 4, OracleBudget(workers=1))
    four = oracle_list_decode(inst, received, 4, OracleBudget(workers=4))
    assert [(m.coeff_vector(1, 3), d) for m, d in one] == \
        [(m.coeff_vector(1, 3), d) for m, d in four]


def test_budget_exceeded():
    inst = ppc_to_blelo(ppc61_params())
    cw = encode_blo(inst, BiPoly.zero(F61, 1, 3))
    with pytest.raises(BudgetError):
        oracle_list_decode(inst, cw, 0, OracleBudget(max_messages=1000))


def test_oracle_agrees_with_decoder():
    inst = ppc_to_blelo(ppc61_params())
    plan = build_plan(inst, 3, 3, 7)
    rng = random.Random(77)
    msg = random_message(F61, 1, 3, rng)
    received = corrupt_codeword(encode_blo(inst, msg), 4, 31)
    expected = {m.coeff_vector(1, 3) for m, _ in oracle_list_decode(inst, received, 4)}
    got = {m.coeff_vector(1, 3) for m, _ in list_decode(plan, received)}
    assert expected == got
    assert msg.coeff_vector(1, 3) in got


def test_cross_check_small_run():
    inst = ppc_to_blelo(ppc61_params())
    plan = build_plan(inst, 3, 3, 7)
    report = oracle_cross_check(inst, plan, trials=5, seed=11, oracle_trials=2)
    assert report.all_ok
    assert report.passes == 5
    assert all(r.transmitted_found for r in report.records)
    assert all(r.oracle_misses == 0 for r in report.records if r.oracle_ran)
    assert sum(1 for r in report.records if r.oracle_ran) == 2
    assert report.max_list_size <= 61 ** plan.ell


def test_cross_check_zero_trials():
    inst = ppc_to_blelo(ppc61_params())
    plan = build_plan(inst, 3, 3, 7)
    report = oracle_cross_check(inst, plan, trials=0, seed=1)
    assert report.records == ()
    assert report.all_ok


def test_cross_check_out_of_contract():
    # At exactly D errors the transmitted message may be lost; such trials are
    # marked out of contract but containment must still hold.
    inst = ppc_to_blelo(ppc61_params())
    plan = build_plan(inst, 3, 3, 7)
    report = oracle_cross_check(inst, plan, trials=4, seed=3,
                                errors=plan.D, oracle_trials=4)
    assert report.out_of_contract == 4
    assert report.all_ok  # containment holds even when recovery is not guaranteed
    assert all(not r.in_contract for r in report.records)


def test_cross_check_infeasible_oracle():
    inst = ppc_to_blelo(ppc61_params())
    plan = build_plan(inst, 3, 3, 7)
    with pytest.raises(BudgetError):
        oracle_cross_check(inst, plan, trials=1, seed=1,
                           budget=OracleBudget(max_messages=100))
    # With the oracle disabled the same budget is fine.
    report = oracle_cross_check(inst, plan, trials=1, seed=1,
                                budget=OracleBudget(max_messages=100), oracle_trials=0)
    assert report.all_ok


def test_report_lines_shape():
    inst = ppc_to_blelo(ppc61_params())
    plan = build_plan(inst, 3, 3, 7)
    report = oracle_cross_check(inst, plan, trials=2, seed=5, oracle_trials=1)
    lines = report.lines()
    assert len(lines) == 3
    assert lines[0].startswith("trial 000")
    assert "summary:" in lines[-1]
