"""Brute-force ground truth: exhaustive list decoding and a trial harness
that certifies the main decoder against it."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import scan
from .codes import (BloInstance, Codeword, column_distance, corrupt_codeword,
                    encode_blo, encoding_matrix, random_message)
from .errors import BudgetError, DecodingInvariantError
from .listdecode import DecodingPlan, decode_with_diagnostics
from .poly import BiPoly


@dataclass(frozen=True)
class OracleBudget:
    max_messages: int = 1 << 25
    workers: int = 1

    def __post_init__(self) -> None:
        if self.max_messages < 1 or self.workers < 1:
            raise ValueError("budget fields must be positive")


def oracle_list_decode(inst: BloInstance, received: Codeword, radius: int,
                       budget: OracleBudget | None = None) -> list[tuple[BiPoly, int]]:
    """Every message whose codeword is within column distance <= radius,
    by exhausting the message space in odometer order.

    The scan runs over the linear encoding matrix; every hit is then
    re-encoded through the direct operator path and its distance recomputed,
    so reported results never depend on the fast path alone.
    """
    budget = budget or OracleBudget()
    if received.field != inst.field or received.n != inst.n or received.s != inst.s:
        raise ValueError("received word shape does not match the instance")
    p = inst.field.modulus
    width = inst.t * inst.k
    total = p ** width
    if total > budget.max_messages:
        raise BudgetError(f"message space {total} exceeds the budget {budget.max_messages}")
    e = encoding_matrix(inst)
    rflat = received.flat()
    hits: list[tuple[int, int]] = []
    bounds = [total * i // budget.workers for i in range(budget.workers + 1)]
    for lo, hi in zip(bounds, bounds[1:]):
        hits.extend(scan.near_messages(e, inst.s, inst.n, p, rflat, radius, lo, hi))
    out = []
    for index, dist in hits:
        msg = BiPoly.from_coeff_vector(inst.field, scan.message_digits(index, p, width),
                                       inst.t, inst.k)
        exact = column_distance(encode_blo(inst, msg), received)
        if exact != dist or exact > radius:
            raise DecodingInvariantError(
                f"scan distance {dist} disagrees with re-encoded distance {exact}")
        out.append((msg, exact))
    return out


@dataclass(frozen=True)
class TrialRecord:
    index: int
    seed: int
    errors: int
    in_contract: bool
    transmitted_found: bool
    list_size: int
    kernel_dim: int
    zero_count: int
    interpolation_verified: bool
    candidate_distances: tuple[int, ...]
    oracle_ran: bool
    oracle_misses: int
    ok: bool

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        contract = "" if self.in_contract else " out-of-contract"
        oracle = f" oracle_misses={self.oracle_misses}" if self.oracle_ran else " oracle=skipped"
        return (f"trial {self.index:03d} seed={self.seed} errors={self.errors}"
                f" found={'yes' if self.transmitted_found else 'no'}"
                f" list={self.list_size} kernel_dim={self.kernel_dim}"
                f" zeros={self.zero_count}{oracle}{contract} : {verdict}")


@dataclass(frozen=True)
class CrossCheckReport:
    records: tuple[TrialRecord, ...]
    radius: int
    max_list_size: int
    passes: int
    failures: int
    out_of_contract: int

    @property
    def all_ok(self) -> bool:
        return self.failures == 0

    def lines(self) -> list[str]:
        out = [r.line() for r in self.records]
        out.append(f"summary: {self.passes} pass, {self.failures} fail, "
                   f"{self.out_of_contract} out-of-contract, "
                   f"max list size {self.max_list_size}, radius {self.radius}")
        return out


def _trial_seed(seed: int, index: int) -> int:
    return (seed * 1_000_003 + index) & 0xFFFFFFFFFFFFFFFF


def oracle_cross_check(inst: BloInstance, plan: DecodingPlan, trials: int, seed: int,
                       budget: OracleBudget | None = None,
                       errors: int | None = None,
                       oracle_trials: int | None = None) -> CrossCheckReport:
    """Seeded decode trials checked against exhaustive enumeration.

    Each trial samples a message, corrupts the stated number of columns, and
    runs the main decoder; the oracle (on the first `oracle_trials` trials)
    must find no codeword within the decoding radius that the decoder missed.
    Trials with at least D errors are out of contract: the transmitted
    message need not be recovered, but containment must still hold.
    """
    budget = budget or OracleBudget()
    errors = plan.D - 1 if errors is None else errors
    if not 0 <= errors <= inst.n:
        raise ValueError(f"error count must be in [0, {inst.n}]")
    oracle_trials = trials if oracle_trials is None else oracle_trials
    radius = plan.D - 1
    total = inst.field.modulus ** (inst.t * inst.k)
    if oracle_trials > 0 and total > budget.max_messages:
        raise BudgetError(f"oracle infeasible: {total} messages exceed the budget")
    in_contract = errors < plan.D
    records = []
    max_list = 0
    for idx in range(trials):
        tseed = _trial_seed(seed, idx)
        rng = random.Random(tseed)
        msg = random_message(inst.field, inst.t, inst.k, rng)
        clean = encode_blo(inst, msg)
        received = corrupt_codeword(clean, errors, rng.getrandbits(32))
        outcome = decode_with_diagnostics(plan, received)
        msg_vec = msg.coeff_vector(inst.t, inst.k)
        found = any(cand.coeff_vector(inst.t, inst.k) == msg_vec
                    for cand, _ in outcome.candidates)
        ok = found or not in_contract
        oracle_ran = idx < oracle_trials
        misses = 0
        if oracle_ran:
            expected = oracle_list_decode(inst, received, radius, budget)
            got = {cand.coeff_vector(inst.t, inst.k) for cand, _ in outcome.candidates}
            want = {m.coeff_vector(inst.t, inst.k) for m, _ in expected}
            misses = len(want - got)
            if misses or not got <= want:
                ok = False
            if in_contract and msg_vec not in want:
                ok = False
        max_list = max(max_list, len(outcome.candidates))
        records.append(TrialRecord(
            idx, tseed, errors, in_contract, found, len(outcome.candidates),
            outcome.kernel_dim, outcome.diagnostics.zero_count,
            outcome.interpolation_verified,
            tuple(d for _, d in outcome.candidates), oracle_ran, misses, ok))
    passes = sum(1 for r in records if r.ok)
    return CrossCheckReport(tuple(records), radius, max_list,
                            passes, len(records) - passes,
                            0 if in_contract else len(records))
