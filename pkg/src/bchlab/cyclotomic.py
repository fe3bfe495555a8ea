"""q-cyclotomic cosets modulo N, coset leaders and leader tables.

Leader tables are built by the orbit-sweep kernel and memoised in-process;
larger ones are also written to a CSV cache under ``$BCHLAB_CACHE`` (default
``./cache``).  The cache is advisory: a table read back from disk is rebuilt
into exactly what the sweep produces.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from pathlib import Path

import numpy as np

from bchlab import kernels
from bchlab.errors import BudgetExceeded, NotCoprime, OutOfRange

CACHE_VERSION = 1
DISK_CACHE_MIN = 1 << 12
DEFAULT_LEADER_BUDGET = 1 << 24


@dataclass(frozen=True)
class Coset:
    modulus: int
    q: int
    leader: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def _check(N, q, t=None):
    if N < 1:
        raise OutOfRange(f"modulus must be positive, got {N}")
    if gcd(N, q) != 1:
        raise NotCoprime(f"gcd({N}, {q}) != 1")
    if t is not None and not 0 <= t < N:
        raise OutOfRange(f"residue {t} outside Z_{N}")


def coset(N: int, q: int, t: int) -> Coset:
    _check(N, q, t)
    members = [t]
    u = (t * q) % N
    while u != t:
        members.append(u)
        u = (u * q) % N
    members.sort()
    return Coset(N, q, members[0], tuple(members))


def coset_leader(N: int, q: int, t: int) -> int:
    return coset(N, q, t).leader


def multiplicative_order(q: int, N: int) -> int:
    _check(N, q)
    if N == 1:
        return 1
    k, u = 1, q % N
    while u != 1:
        u = (u * q) % N
        k += 1
    return k


class LeaderTable:
    """All coset leaders of Z_N under multiplication by q."""

    def __init__(self, N: int, q: int, leaders, sizes, cl):
        self.N = N
        self.q = q
        self.leaders = np.asarray(leaders, dtype=np.int64)
        self.sizes = np.asarray(sizes, dtype=np.int64)
        self.cl = np.asarray(cl, dtype=np.int64)
        self._size_of_leader = np.zeros(N, dtype=np.int64)
        self._size_of_leader[self.leaders] = self.sizes

    def __len__(self):
        return len(self.leaders)

    def leader_of(self, t: int) -> int:
        return int(self.cl[t % self.N])

    def size_of(self, t: int) -> int:
        return int(self._size_of_leader[self.cl[t % self.N]])

    def is_leader(self, t: int) -> bool:
        return self.leader_of(t) == t % self.N

    def members(self, t: int) -> np.ndarray:
        return np.flatnonzero(self.cl == self.leader_of(t))

    def odd_leaders(self) -> np.ndarray:
        return self.leaders[self.leaders % 2 == 1]

    def union_size(self, exps) -> int:
        """|union of the cosets of the given residues|."""
        exps = np.asarray(list(exps) if not isinstance(exps, np.ndarray) else exps, dtype=np.int64)
        if exps.size == 0:
            return 0
        ls = np.unique(self.cl[exps % self.N])
        return int(self._size_of_leader[ls].sum())

    def union(self, exps) -> np.ndarray:
        exps = np.asarray(list(exps) if not isinstance(exps, np.ndarray) else exps, dtype=np.int64)
        if exps.size == 0:
            return np.zeros(0, dtype=np.int64)
        ls = np.unique(self.cl[exps % self.N])
        return np.flatnonzero(np.isin(self.cl, ls))


def cache_dir() -> Path:
    return Path(os.environ.get("BCHLAB_CACHE", "cache"))


def _cache_path(N, q, directory=None):
    return Path(directory or cache_dir()) / f"leaders_N{N}_q{q}.csv"


def write_cache(table: LeaderTable, directory=None) -> Path:
    path = _cache_path(table.N, table.q, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"# bchlab leader table version={CACHE_VERSION} N={table.N} q={table.q}", "leader,size"]
    lines += [f"{l},{s}" for l, s in zip(table.leaders.tolist(), table.sizes.tolist())]
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)
    return path


def read_cache(N: int, q: int, directory=None) -> LeaderTable | None:
    path = _cache_path(N, q, directory)
    try:
        text = path.read_text().splitlines()
    except OSError:
        return None
    if len(text) < 2 or text[0] != f"# bchlab leader table version={CACHE_VERSION} N={N} q={q}":
        return None
    rows = np.array([line.split(",") for line in text[2:] if line], dtype=np.int64).reshape(-1, 2)
    leaders, sizes = rows[:, 0], rows[:, 1]
    cl = np.full(N, -1, dtype=np.int64)
    idx = leaders.copy()
    for j in range(int(sizes.max(initial=0))):
        live = sizes > j
        cl[idx[live]] = leaders[live]
        idx = (idx * q) % N
    if (cl < 0).any() or int(sizes.sum()) != N:
        return None
    return LeaderTable(N, q, leaders, sizes, cl)


@lru_cache(maxsize=64)
def _leader_table(N, q, budget):
    if N > budget:
        raise BudgetExceeded(f"modulus {N} exceeds leader-table budget {budget}")
    use_disk = N >= DISK_CACHE_MIN
    if use_disk:
        cached = read_cache(N, q)
        if cached is not None:
            return cached
    leaders, sizes, cl = kernels.leader_array(N, q)
    table = LeaderTable(N, q, leaders, sizes, cl)
    if use_disk:
        try:
            write_cache(table)
        except OSError:
            pass
    return table


def leader_table(N: int, q: int, budget: int = DEFAULT_LEADER_BUDGET) -> LeaderTable:
    _check(N, q)
    return _leader_table(N, q, budget)


def ith_largest_leader(N: int, q: int, i: int) -> int:
    leaders = leader_table(N, q).leaders
    if not 1 <= i <= len(leaders):
        raise OutOfRange(f"only {len(leaders)} coset leaders modulo {N}")
    return int(leaders[-i])


def ith_largest_odd_leader(N: int, q: int, i: int) -> int:
    odd = leader_table(N, q).odd_leaders()
    if not 1 <= i <= len(odd):
        raise OutOfRange(f"only {len(odd)} odd coset leaders modulo {N}")
    return int(odd[-i])


def qadic_digits(i: int, q: int, m: int) -> list[int]:
    """(i_{m-1}, ..., i_0), most significant first."""
    return [(i // q**k) % q for k in range(m - 1, -1, -1)]


def shift_test_leader(q: int, m: int, i: int) -> bool:
    """Leader test for Z_{q^m-1} by rotating the q-adic digits of i."""
    if not 1 <= i <= q**m - 2:
        raise OutOfRange(f"i must lie in [1, q^m - 2], got {i}")
    digits = qadic_digits(i, q, m)
    for j in range(1, m):
        rotated = digits[j:] + digits[:j]
        v = 0
        for d in rotated:
            v = v * q + d
        if v < i:
            return False
    return True


def small_leader_range(q: int, m: int) -> int:
    """Largest i covered by the small-leader predicate for this (q, m)."""
    if m % 2:
        if m < 3:
            raise OutOfRange("odd m must be at least 3")
        return q ** ((m + 1) // 2) - 1
    return 2 * q ** (m // 2) - 1


def small_leader_predicate(q: int, m: int, i: int) -> tuple[bool, int]:
    """(i is a coset leader mod q^m - 1, |C_i|) for small i, without enumeration."""
    top = small_leader_range(q, m)
    if not 1 <= i <= top:
        raise OutOfRange(f"i must lie in [1, {top}] for q={q}, m={m}")
    size = m // 2 if m % 2 == 0 and i == q ** (m // 2) + 1 else m
    return i % q != 0, size


def odd_leaders_in_range(N: int, q: int, a1: int, a2: int) -> list[int]:
    if a2 < a1:
        return []
    if not (1 <= a1 and a2 < N):
        raise OutOfRange(f"range [{a1}, {a2}] outside [1, {N - 1}]")
    odd = leader_table(N, q).odd_leaders()
    return [int(x) for x in odd[(odd >= a1) & (odd <= a2)]]
