"""Exact energy barriers via best-first minimax search.

The barrier of reaching a target configuration is the smallest possible value
of the maximum energy seen along any path from the all-zero state, where a
path changes one coordinate (one qubit) per step. Searches run over packed
integer states with a Dijkstra-style frontier ordered by

    (max energy so far, path length, state value)

so results and witness paths are deterministic. A state is pushed only when
its key strictly improves, which keeps at most one live heap entry per state
and makes the first pop of a state final.

Energies of the form weight(M x) are updated incrementally: flipping
coordinate q XORs column q of M into the running syndrome.
"""

from __future__ import annotations

import heapq
from array import array
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .codes import ClassicalCode
from .errors import (
    CapExceeded,
    DimensionMismatch,
    NoLogicals,
    NotAStabilizer,
    NotElementary,
    NoTarget,
    OutsideNormalizer,
)
from .f2core import BitMatrix, BitVec, mat_vec, row_reducer, weight
from .hgp import HgpCode
from .logicals import CanonicalXOp, CanonicalZOp, PauliVec

__all__ = [
    "DEFAULT_STATE_CAP",
    "DEFAULT_PAULI_CAP",
    "PathRecord",
    "BarrierResult",
    "SyndromeEnergy",
    "MinimaxTable",
    "energy_classical",
    "energy_quantum",
    "bottleneck_search",
    "classical_barrier",
    "quantum_barrier",
    "pauli_barrier_general",
    "normalizer_barrier",
    "sector_table",
    "classical_table",
    "sweep_path_for_canonical",
    "stabilizer_path",
    "validate_path",
]

DEFAULT_STATE_CAP = 1 << 24
DEFAULT_PAULI_CAP = 1 << 20  # 4^10 general-Pauli states


@dataclass(frozen=True)
class PathRecord:
    """A walk of states with per-state energies; steps touch one coordinate."""

    states: tuple
    energies: tuple[int, ...]
    max_energy: int

    def __post_init__(self):
        if len(self.states) != len(self.energies):
            raise DimensionMismatch("one energy per state required")
        expected = max(self.energies, default=0)
        if self.max_energy != expected:
            raise DimensionMismatch(f"max_energy {self.max_energy} != {expected}")

    def steps(self) -> int:
        return max(len(self.states) - 1, 0)

    def steps_json(self) -> list[dict]:
        """Step records for export: flipped qubit and Pauli change per move."""
        out = []
        prev = None
        for i, (state, e) in enumerate(zip(self.states, self.energies)):
            entry = {"step": i, "flipped_qubit": None, "pauli_change": None, "energy": e}
            if prev is not None:
                if isinstance(state, PauliVec):
                    dx = prev.x.bits ^ state.x.bits
                    dz = prev.z.bits ^ state.z.bits
                    q = (dx | dz).bit_length() - 1
                    entry["flipped_qubit"] = q
                    entry["pauli_change"] = {(1, 0): "X", (0, 1): "Z", (1, 1): "Y"}[
                        ((dx >> q) & 1, (dz >> q) & 1)
                    ]
                else:
                    diff = prev.bits ^ state.bits
                    entry["flipped_qubit"] = diff.bit_length() - 1
                    entry["pauli_change"] = "X"
            out.append(entry)
            prev = state
        return out


@dataclass(frozen=True)
class BarrierResult:
    value: int
    witness: PathRecord
    target: object
    explored: int
    exact: bool = True


class SyndromeEnergy:
    """Energy of a state as weight(M x), with per-flip syndrome deltas."""

    def __init__(self, rows: Sequence[int], n_dim: int):
        self.rows = tuple(rows)
        self.n_dim = n_dim

    def __call__(self, v: BitVec) -> int:
        return self.bits_energy(v.bits)

    def bits_energy(self, bits: int) -> int:
        e = 0
        for r in self.rows:
            e += (r & bits).bit_count() & 1
        return e

    def delta(self, move_mask: int) -> int:
        """Syndrome XOR caused by flipping the coordinates in move_mask."""
        d = 0
        for i, r in enumerate(self.rows):
            if (r & move_mask).bit_count() & 1:
                d |= 1 << i
        return d


def energy_classical(c: ClassicalCode, x: BitVec) -> int:
    if x.n != c.n:
        raise DimensionMismatch(f"vector length {x.n} vs block length {c.n}")
    return weight(mat_vec(c.h, x))


def energy_quantum(code: HgpCode, p: PauliVec) -> int:
    if p.n != code.n_qubits:
        raise DimensionMismatch(f"Pauli on {p.n} qubits, code has {code.n_qubits}")
    return weight(mat_vec(code.hx, p.z)) + weight(mat_vec(code.hz, p.x))


def _make_tables(n_states: int, n_moves: int, max_energy: int):
    # byte maps when values fit, 16-bit arrays otherwise; 0xFF/0xFFFF = unseen
    if max_energy < 0xFF:
        best = bytearray(b"\xff" * n_states)
    else:
        best = array("H", [0xFFFF] * n_states)
    if n_moves < 0xFF:
        pred = bytearray(b"\xff" * n_states)
    else:
        pred = array("H", [0xFFFF] * n_states)
    return best, pred


def _syndrome_search(
    energy: SyndromeEnergy,
    moves: Sequence[int],
    target_pred,
    cap: int,
):
    """Core engine. target_pred(state, energy) or None to exhaust all states.

    Returns (final_state, best, pred, explored); final_state is None in
    exhaust mode.
    """
    n_dim = energy.n_dim
    if (1 << n_dim) > cap:
        raise CapExceeded(f"2^{n_dim} states exceed cap {cap}")
    moves = tuple(moves)
    deltas = tuple(energy.delta(m) for m in moves)
    best, pred = _make_tables(1 << n_dim, len(moves), len(energy.rows))
    best[0] = 0
    heap = [(0, 0, 0, 0)]  # (max energy, path length, state, syndrome)
    explored = 0
    while heap:
        maxe, plen, state, syn = heapq.heappop(heap)
        if maxe != best[state]:
            continue
        explored += 1
        if target_pred is not None and target_pred(state, syn.bit_count()):
            return state, best, pred, explored
        nplen = plen + 1
        for mi in range(len(moves)):
            ns = state ^ moves[mi]
            nsyn = syn ^ deltas[mi]
            ne = nsyn.bit_count()
            nmax = maxe if maxe >= ne else ne
            if nmax < best[ns]:
                best[ns] = nmax
                pred[ns] = mi
                heapq.heappush(heap, (nmax, nplen, ns, nsyn))
    if target_pred is not None:
        raise NoTarget("no state satisfying the target predicate is reachable")
    return None, best, pred, explored


def _generic_search(
    energy_bits: Callable[[int], int],
    n_dim: int,
    target_pred,
    cap: int,
):
    """Fallback engine for arbitrary energy functions (no syndrome deltas)."""
    if (1 << n_dim) > cap:
        raise CapExceeded(f"2^{n_dim} states exceed cap {cap}")
    moves = tuple(1 << q for q in range(n_dim))
    e0 = energy_bits(0)
    best = {0: e0}
    pred: dict[int, int] = {}
    heap = [(e0, 0, 0)]
    explored = 0
    while heap:
        maxe, plen, state = heapq.heappop(heap)
        if maxe != best[state]:
            continue
        explored += 1
        if target_pred(state, energy_bits(state)):
            return state, best, pred, explored
        for mi, mv in enumerate(moves):
            ns = state ^ mv
            nmax = max(maxe, energy_bits(ns))
            if nmax < best.get(ns, 1 << 62):
                best[ns] = nmax
                pred[ns] = mi
                heapq.heappush(heap, (nmax, plen + 1, ns))
    raise NoTarget("no state satisfying the target predicate is reachable")


def _reconstruct_bits(state: int, pred, moves: Sequence[int]) -> list[int]:
    seq = [state]
    while state:
        state ^= moves[pred[state]]
        seq.append(state)
    seq.reverse()
    return seq


def _path_from_bits(seq: Iterable[int], n_dim: int, energy_bits) -> PathRecord:
    states = tuple(BitVec(n_dim, b) for b in seq)
    energies = tuple(energy_bits(b) for b in (s.bits for s in states))
    return PathRecord(states, energies, max(energies, default=0))


def _normalize_targets(targets, n_dim: int):
    if callable(targets):
        return lambda s, e: bool(targets(BitVec(n_dim, s)))
    if isinstance(targets, BitVec):
        goal = targets.bits
        return lambda s, e: s == goal
    if isinstance(targets, int):
        goal = targets
        return lambda s, e: s == goal
    goals = {t.bits if isinstance(t, BitVec) else int(t) for t in targets}
    return lambda s, e: s in goals


def bottleneck_search(
    energy,
    n_dim: int,
    targets,
    cap: int = DEFAULT_STATE_CAP,
) -> BarrierResult:
    """Exact minimax path value from the zero state to the nearest target.

    ``energy`` is a SyndromeEnergy (fast path) or any callable BitVec -> int.
    ``targets`` is a predicate over BitVec, a single BitVec/int state, or a
    collection of them.
    """
    pred_fn = _normalize_targets(targets, n_dim)
    if isinstance(energy, SyndromeEnergy):
        if energy.n_dim != n_dim:
            raise DimensionMismatch(f"energy over {energy.n_dim} dims, search over {n_dim}")
        moves = tuple(1 << q for q in range(n_dim))
        state, best, pred, explored = _syndrome_search(energy, moves, pred_fn, cap)
        seq = _reconstruct_bits(state, pred, moves)
        record = _path_from_bits(seq, n_dim, energy.bits_energy)
        return BarrierResult(best[state], record, BitVec(n_dim, state), explored)
    energy_bits = lambda b: energy(BitVec(n_dim, b))
    moves = tuple(1 << q for q in range(n_dim))
    state, best, pred, explored = _generic_search(energy_bits, n_dim, pred_fn, cap)
    seq = _reconstruct_bits(state, pred, moves)
    record = _path_from_bits(seq, n_dim, energy_bits)
    return BarrierResult(best[state], record, BitVec(n_dim, state), explored)


@dataclass(frozen=True)
class MinimaxTable:
    """Exhaustive minimax values from the zero state, one entry per state."""

    n_dim: int
    energy: SyndromeEnergy
    best: object = field(repr=False)
    pred: object = field(repr=False)
    explored: int

    def value(self, bits: int) -> int:
        return self.best[bits]

    def path(self, bits: int) -> PathRecord:
        moves = tuple(1 << q for q in range(self.n_dim))
        seq = _reconstruct_bits(bits, self.pred, moves)
        return _path_from_bits(seq, self.n_dim, self.energy.bits_energy)


@lru_cache(maxsize=64)
def _unit_move_table(rows: tuple[int, ...], n_dim: int) -> MinimaxTable:
    energy = SyndromeEnergy(rows, n_dim)
    _, best, pred, explored = _syndrome_search(
        energy, tuple(1 << q for q in range(n_dim)), None, 1 << n_dim
    )
    return MinimaxTable(n_dim, energy, best, pred, explored)


def classical_table(c: ClassicalCode, cap: int = DEFAULT_STATE_CAP) -> MinimaxTable:
    if (1 << c.n) > cap:
        raise CapExceeded(f"2^{c.n} states exceed cap {cap}")
    return _unit_move_table(c.h.row_bits, c.n)


def sector_table(code: HgpCode, sector: str, cap: int = DEFAULT_STATE_CAP) -> MinimaxTable:
    """Full minimax table for one CSS sector: z-space under HX or x-space under HZ."""
    n = code.n_qubits
    if (1 << n) > cap:
        raise CapExceeded(f"2^{n} states exceed cap {cap}")
    s = sector.lower()
    if s == "z":
        return _unit_move_table(code.hx.row_bits, n)
    if s == "x":
        return _unit_move_table(code.hz.row_bits, n)
    raise DimensionMismatch(f"unknown sector {sector!r}, expected 'z' or 'x'")


def classical_barrier(c: ClassicalCode, cap: int = DEFAULT_STATE_CAP) -> BarrierResult:
    """Minimax barrier from zero to the nearest nonzero codeword."""
    if c.k == 0:
        raise NoLogicals("code has no nonzero codewords")
    energy = SyndromeEnergy(c.h.row_bits, c.n)
    result = bottleneck_search(
        energy, c.n, lambda v: energy(v) == 0 and v.bits != 0, cap
    )
    return result


def _sector_result(code: HgpCode, sector: str, cap: int) -> BarrierResult:
    n = code.n_qubits
    if sector == "z":
        energy = SyndromeEnergy(code.hx.row_bits, n)
        reduce_bits = row_reducer(code.hz)
        wrap = PauliVec.z_type
    else:
        energy = SyndromeEnergy(code.hz.row_bits, n)
        reduce_bits = row_reducer(code.hx)
        wrap = PauliVec.x_type
    pred = lambda s, e: e == 0 and reduce_bits(s) != 0
    moves = tuple(1 << q for q in range(n))
    state, best, predarr, explored = _syndrome_search(energy, moves, pred, cap)
    seq = _reconstruct_bits(state, predarr, moves)
    states = tuple(wrap(BitVec(n, b)) for b in seq)
    energies = tuple(energy.bits_energy(b) for b in seq)
    record = PathRecord(states, energies, max(energies, default=0))
    return BarrierResult(best[state], record, states[-1], explored)


def quantum_barrier(
    code: HgpCode, sector: str = "both", cap: int = DEFAULT_STATE_CAP
) -> BarrierResult:
    """Barrier of the code: cheapest nontrivial logical in the given sector(s).

    Pure-Z and pure-X searches suffice for the combined value: projecting any
    Pauli path onto one sector never raises the energy and lands on the
    sector component of the endpoint, so the full-group barrier is the
    smaller of the two sector barriers.
    """
    k1, k2 = code.h1.k, code.h2.k
    k1t = code.h1.r - code.h1.rank
    k2t = code.h2.r - code.h2.rank
    if k1 * k2 + k1t * k2t == 0:
        raise NoLogicals("code has no logical qubits")
    s = sector.lower()
    if s == "z":
        return _sector_result(code, "z", cap)
    if s == "x":
        return _sector_result(code, "x", cap)
    if s != "both":
        raise DimensionMismatch(f"unknown sector {sector!r}, expected 'z', 'x', or 'both'")
    rz = _sector_result(code, "z", cap)
    rx = _sector_result(code, "x", cap)
    return rz if rz.value <= rx.value else rx


def pauli_barrier_general(
    code: HgpCode, target: PauliVec, cap: int = DEFAULT_PAULI_CAP
) -> BarrierResult:
    """Minimax over the full Pauli group: states are (x, z) pairs, and a step
    may change one qubit to any Pauli (x flip, z flip, or both).

    Exponentially larger than the sector searches; serves as the oracle that
    validates the sector decomposition on small codes.
    """
    n = code.n_qubits
    if target.n != n:
        raise DimensionMismatch(f"target on {target.n} qubits, code has {n}")
    if (1 << (2 * n)) > cap:
        raise CapExceeded(f"4^{n} Pauli states exceed cap {cap}")
    rows = code.hz.row_bits + tuple(r << n for r in code.hx.row_bits)
    energy = SyndromeEnergy(rows, 2 * n)
    moves = []
    for q in range(n):
        moves.append(1 << q)
        moves.append(1 << (n + q))
        moves.append((1 << q) | (1 << (n + q)))
    goal = target.x.bits | (target.z.bits << n)
    pred = lambda s, e: s == goal
    state, best, predarr, explored = _syndrome_search(energy, tuple(moves), pred, cap)
    seq = _reconstruct_bits(state, predarr, tuple(moves))
    mask = (1 << n) - 1
    states = tuple(PauliVec(n, BitVec(n, b & mask), BitVec(n, b >> n)) for b in seq)
    energies = tuple(energy.bits_energy(b) for b in seq)
    record = PathRecord(states, energies, max(energies, default=0))
    return BarrierResult(best[state], record, states[-1], explored)


def normalizer_barrier(
    code: HgpCode, p: PauliVec, cap: int = DEFAULT_STATE_CAP
) -> BarrierResult:
    """Exact barrier of a Pauli that commutes with every check.

    For such a Pauli the two sector projections are independent: any path
    projects to each sector without raising energy, and running the optimal
    x-sector path first (its endpoint has zero energy because HZ x = 0)
    followed by the optimal z-sector path achieves the larger of the two
    sector values. Hence the barrier is exactly max(x-sector, z-sector).
    """
    n = code.n_qubits
    if p.n != n:
        raise DimensionMismatch(f"Pauli on {p.n} qubits, code has {n}")
    if mat_vec(code.hz, p.x).bits or mat_vec(code.hx, p.z).bits:
        raise OutsideNormalizer("Pauli anticommutes with a check; barrier is sector-mixed")
    tx = sector_table(code, "x", cap)
    tz = sector_table(code, "z", cap)
    value = max(tx.value(p.x.bits), tz.value(p.z.bits))
    xleg = tx.path(p.x.bits)
    zleg = tz.path(p.z.bits)
    states = [PauliVec.x_type(s) for s in xleg.states]
    energies = list(xleg.energies)
    for s, e in zip(zleg.states[1:], zleg.energies[1:]):
        states.append(PauliVec(n, p.x, s))
        energies.append(e)
    record = PathRecord(tuple(states), tuple(energies), max(energies, default=0))
    return BarrierResult(value, record, states[-1], tx.explored + tz.explored)


def _single_coefficient(op) -> tuple[str, int, int]:
    lam_ones = [
        (k, j)
        for k in range(op.lam.rows)
        for j in range(op.lam.cols)
        if op.lam.entry(k, j)
    ]
    kap_ones = [
        (l, m)
        for l in range(op.kappa.rows)
        for m in range(op.kappa.cols)
        if op.kappa.entry(l, m)
    ]
    if len(lam_ones) + len(kap_ones) != 1:
        raise NotElementary("operator must have exactly one nonzero coefficient")
    if lam_ones:
        return "vv", *lam_ones[0]
    return "cc", *kap_ones[0]


def _classical_path_to(h: BitMatrix, word: BitVec, cap: int) -> PathRecord:
    energy = SyndromeEnergy(h.row_bits, h.cols)
    if word.bits == 0:
        return PathRecord((BitVec(h.cols, 0),), (0,), 0)
    result = bottleneck_search(energy, h.cols, word, cap)
    return result.witness


def sweep_path_for_canonical(code: HgpCode, op, cap: int = DEFAULT_STATE_CAP) -> PathRecord:
    """Constructive path to an elementary canonical operator, one block column
    (or row) at a time.

    A VV-type Z operator is carried by a single column of the bit-bit grid;
    walking its parent codeword along an optimal classical witness keeps the
    quantum energy equal to the classical one at every step, so the sweep
    attains the parent-code barrier of that codeword.
    """
    from .logicals import _x_ingredients, _z_ingredients  # local to avoid cycle at import

    block, i1, i2 = _single_coefficient(op)
    n = code.n_qubits
    n1, n2, r1, r2 = code.n1, code.n2, code.r1, code.r2
    if isinstance(op, CanonicalZOp):
        xbar, ys, als, bbar = _z_ingredients(code)
        if block == "vv":
            word, unit = xbar[i1], ys[i2]
            leg = _classical_path_to(code.h1.h, word, cap)
            col = unit.bits.bit_length() - 1
            to_state = lambda w: BitVec(n, _spread_rows(w.bits, n1, n2, col))
        else:
            word, unit = bbar[i2], als[i1]
            leg = _classical_path_to(code.h2.h.transpose(), word, cap)
            row = unit.bits.bit_length() - 1
            offset = n1 * n2 + row * r2
            to_state = lambda w: BitVec(n, w.bits << offset)
        wrap = PauliVec.z_type
        energy = SyndromeEnergy(code.hx.row_bits, n)
    elif isinstance(op, CanonicalXOp):
        xs, ybar, abar, bs = _x_ingredients(code)
        if block == "vv":
            word, unit = ybar[i2], xs[i1]
            leg = _classical_path_to(code.h2.h, word, cap)
            row = unit.bits.bit_length() - 1
            offset = row * n2
            to_state = lambda w: BitVec(n, w.bits << offset)
        else:
            word, unit = abar[i1], bs[i2]
            leg = _classical_path_to(code.h1.h.transpose(), word, cap)
            col = unit.bits.bit_length() - 1
            to_state = lambda w: BitVec(
                n, _spread_rows(w.bits, r1, r2, col) << (n1 * n2)
            )
        wrap = PauliVec.x_type
        energy = SyndromeEnergy(code.hz.row_bits, n)
    else:
        raise NotElementary(f"expected a canonical operator, got {type(op).__name__}")

    states = tuple(wrap(to_state(w)) for w in leg.states)
    energies = tuple(energy.bits_energy(s.x.bits | s.z.bits) for s in states)
    # the quantum energy along the sweep reduces exactly to the classical one
    assert energies == leg.energies
    assert states[-1].x == op.realized.x and states[-1].z == op.realized.z
    return PathRecord(states, energies, max(energies, default=0))


def _spread_rows(bits: int, n_rows: int, n_cols: int, col: int) -> int:
    """Place bit i of ``bits`` at grid position (i, col) of an n_rows x n_cols grid."""
    out = 0
    while bits:
        i = (bits & -bits).bit_length() - 1
        out |= 1 << (i * n_cols + col)
        bits &= bits - 1
    return out


def stabilizer_path(code: HgpCode, s: PauliVec, generator_combo: BitVec) -> PathRecord:
    """Constructive path to a stabilizer: apply each selected generator in
    order, one qubit at a time. Generators are the HX rows followed by the
    HZ rows; the peak energy is at most w_c * w_q.
    """
    n_gen = code.hx.rows + code.hz.rows
    if generator_combo.n != n_gen:
        raise DimensionMismatch(f"combo length {generator_combo.n}, need {n_gen}")
    if s.n != code.n_qubits:
        raise DimensionMismatch(f"Pauli on {s.n} qubits, code has {code.n_qubits}")
    x_acc = 0
    z_acc = 0
    for g in generator_combo.support():
        if g < code.hx.rows:
            x_acc ^= code.hx.row_bits[g]
        else:
            z_acc ^= code.hz.row_bits[g - code.hx.rows]
    if x_acc != s.x.bits or z_acc != s.z.bits:
        raise NotAStabilizer("selected generators do not multiply to the given Pauli")

    n = code.n_qubits
    cur_x, cur_z = 0, 0
    states = [PauliVec.identity(n)]
    for g in generator_combo.support():
        if g < code.hx.rows:
            flips = code.hx.row_bits[g]
            is_x = True
        else:
            flips = code.hz.row_bits[g - code.hx.rows]
            is_x = False
        while flips:
            q = (flips & -flips).bit_length() - 1
            flips &= flips - 1
            if is_x:
                cur_x ^= 1 << q
            else:
                cur_z ^= 1 << q
            states.append(PauliVec(n, BitVec(n, cur_x), BitVec(n, cur_z)))
    energies = tuple(energy_quantum(code, p) for p in states)
    return PathRecord(tuple(states), energies, max(energies))


def validate_path(record: PathRecord, energy: Callable) -> bool:
    """Recheck a witness: single-coordinate steps and stored energies."""
    prev = None
    for state, e in zip(record.states, record.energies):
        if energy(state) != e:
            return False
        if prev is not None:
            if isinstance(state, PauliVec):
                diff = (prev.x.bits ^ state.x.bits) | (prev.z.bits ^ state.z.bits)
            else:
                diff = prev.bits ^ state.bits
            if diff.bit_count() != 1:
                return False
        prev = state
    return record.max_energy == max(record.energies, default=0)
