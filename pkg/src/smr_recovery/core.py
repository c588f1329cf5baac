"""Foundational value types: transaction logs, ideal signatures, permutations.

Everything here is immutable and hashable so state machines can exchange and
index these values freely.  Signatures are ideal: a ``Signed`` value carries
only the signer's id, and the simulator enforces that a value attributed to a
correct process can only originate from that process's actor.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence, TypeVar, Generic

ProcessId = int  # 1-based indices into the process set
Timeslot = int

ENV_SIG = "env"


class SimulationFault(Exception):
    """An impossible-by-assumption situation surfaced by the simulation."""


def sha256_hex(data: str) -> str:
    return hashlib.sha256(data.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Transaction:
    """An environment-signed payload; identity is the payload alone."""

    payload: str
    env_sig: str = field(default=ENV_SIG, compare=False)

    def valid(self) -> bool:
        return self.env_sig == ENV_SIG


@dataclass(frozen=True)
class Log:
    """A finalized transaction sequence, chained to the genesis it extends.

    ``genesis`` links logs of successive executions structurally; prefix
    comparison and equality use the flattened transaction sequence, while
    ``struct_digest`` distinguishes logs of distinct executions even when
    their flattened content coincides.
    """

    genesis: Optional["Log"] = None
    entries: tuple[Transaction, ...] = ()

    @cached_property
    def sequence(self) -> tuple[str, ...]:
        base = self.genesis.sequence if self.genesis is not None else ()
        return base + tuple(tx.payload for tx in self.entries)

    @cached_property
    def struct_digest(self) -> str:
        parent = self.genesis.struct_digest if self.genesis is not None else "root"
        body = json.dumps([parent, [tx.payload for tx in self.entries]])
        return sha256_hex(body)

    def extend(self, txs: Iterable[Transaction]) -> "Log":
        return Log(genesis=self.genesis, entries=self.entries + tuple(txs))

    def chain_from(self, txs: Iterable[Transaction] = ()) -> "Log":
        """A fresh log rooted at this one (the next execution's genesis link)."""
        return Log(genesis=self, entries=tuple(txs))

    def __len__(self) -> int:
        return len(self.sequence)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Log):
            return NotImplemented
        return self.sequence == other.sequence

    def __hash__(self) -> int:
        return hash(self.sequence)


EMPTY_LOG = Log()


def is_prefix(sigma: Log, tau: Log) -> bool:
    """True iff sigma's transaction sequence is an initial segment of tau's."""
    a, b = sigma.sequence, tau.sequence
    return len(a) <= len(b) and b[: len(a)] == a


def compatible(sigma: Log, tau: Log) -> bool:
    return is_prefix(sigma, tau) or is_prefix(tau, sigma)


def seq_is_prefix(a: Sequence[str], b: Sequence[str]) -> bool:
    return len(a) <= len(b) and tuple(b[: len(a)]) == tuple(a)


def log_from_sequence(seq: Sequence[str]) -> Log:
    """A structurally flat log with the given payload sequence."""
    return Log(entries=tuple(Transaction(p) for p in seq))


M = TypeVar("M")


@dataclass(frozen=True)
class Signed(Generic[M]):
    """A message body bound to its signer under the ideal signature model."""

    body: M
    signer: ProcessId


def sign(body: M, signer: ProcessId) -> Signed[M]:
    return Signed(body=body, signer=signer)


@dataclass(frozen=True)
class Permutation:
    """A bijection from positions 1..n onto a process set."""

    order: tuple[ProcessId, ...]

    def __post_init__(self) -> None:
        if len(set(self.order)) != len(self.order):
            raise ValueError("permutation order must be a bijection")

    def at(self, position: int) -> ProcessId:
        if not 1 <= position <= len(self.order):
            raise SimulationFault(
                f"permutation position {position} outside 1..{len(self.order)}"
            )
        return self.order[position - 1]

    def __len__(self) -> int:
        return len(self.order)


def induced_permutation(pi_star: Permutation, subset: Iterable[ProcessId]) -> Permutation:
    """Restrict a permutation to a subset, preserving relative order."""
    members = set(subset)
    if not members:
        raise ValueError("cannot induce a permutation on an empty subset")
    missing = members - set(pi_star.order)
    if missing:
        raise ValueError(f"subset members not in permutation: {sorted(missing)}")
    return Permutation(order=tuple(p for p in pi_star.order if p in members))
