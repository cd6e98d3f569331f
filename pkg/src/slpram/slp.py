"""Straight-line program model, parsing, direct evaluation and generation.

A program is a list of steps ``s_2 .. s_n`` whose targets are ``v_0 .. v_n``
with the fixed seeds ``v_0 = 0`` and ``v_1 = 1``.  As an extension, a program
may declare ``k`` input slots occupying ``v_2 .. v_{k+1}``; steps then start
at index ``k + 2``.  With zero slots the model is the plain one.

Text format (one step per line, ``#`` comments, optional ``inputs K`` header)::

    inputs 1
    shl 1 1        # v_3 = v_1 << v_1
    mul 3 3        # v_4 = v_3 * v_3

Direct evaluation materializes every intermediate value and is the reference
oracle for the lazy evaluator; it aborts once any value outgrows the bit
budget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import numerics as nm
from .errors import BudgetExceeded, ParseError, SlpramError


class ForwardReference(SlpramError):
    """A step refers to a value index not defined before it."""


class GenerationFailed(SlpramError):
    """The random generator could not satisfy its constraints."""


DEFAULT_BUDGET_BITS = 1 << 16


@dataclass(frozen=True)
class Step:
    op: str
    args: tuple[int, ...]

    def __post_init__(self):
        if len(self.args) != nm.arity(self.op):
            raise nm.ArityMismatch(f"{self.op} takes {nm.arity(self.op)} operand(s)")


@dataclass(frozen=True)
class Slp:
    """Immutable straight-line program.

    ``steps[i]`` defines ``v_{first_step + i}``; ``n`` is the index of the
    output value ``v_n``.
    """

    steps: tuple[Step, ...] = ()
    input_slots: int = 0

    def __post_init__(self):
        for k, step in enumerate(self.steps):
            idx = self.first_step + k
            for a in step.args:
                if not 0 <= a < idx:
                    raise ForwardReference(
                        f"step v_{idx} refers to v_{a}, not defined before it"
                    )

    @property
    def first_step(self) -> int:
        return 2 + self.input_slots

    @property
    def n(self) -> int:
        return self.first_step + len(self.steps) - 1 if self.steps else self.first_step - 1

    @property
    def length(self) -> int:
        """Index of the output value (program length in the v_0..v_n sense)."""
        return self.n

    def input_indices(self) -> range:
        return range(2, 2 + self.input_slots)

    def step_at(self, idx: int) -> Step:
        return self.steps[idx - self.first_step]

    def prefix(self, upto: int) -> "Slp":
        """The sub-program defining values up to ``v_upto``."""
        if upto < self.first_step:
            return Slp((), self.input_slots)
        return Slp(self.steps[: upto - self.first_step + 1], self.input_slots)


@dataclass
class SlpValue:
    """Full value vector from direct evaluation."""

    values: list[int] = field(default_factory=list)

    @property
    def output(self) -> int:
        return self.values[-1]


def parse_slp(text: str) -> Slp:
    input_slots = 0
    steps: list[Step] = []
    saw_step = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "inputs":
            if saw_step:
                raise ParseError("inputs header must precede steps", lineno)
            if len(fields) != 2 or not fields[1].isdigit():
                raise ParseError("expected: inputs K", lineno)
            input_slots = int(fields[1])
            continue
        op = fields[0]
        if op not in nm.ALL_OPS:
            raise ParseError(f"unknown operation {op!r}", lineno)
        try:
            args = tuple(int(f) for f in fields[1:])
        except ValueError:
            raise ParseError("operand indices must be decimal integers", lineno)
        if len(args) != nm.arity(op):
            raise ParseError(f"{op} takes {nm.arity(op)} operand(s)", lineno)
        idx = 2 + input_slots + len(steps)
        for a in args:
            if a >= idx:
                raise ForwardReference(
                    f"line {lineno}: step v_{idx} refers to v_{a}, not defined before it"
                )
            if a < 0:
                raise ParseError("operand indices must be nonnegative", lineno)
        steps.append(Step(op, args))
        saw_step = True
    return Slp(tuple(steps), input_slots)


def print_slp(p: Slp) -> str:
    lines = []
    if p.input_slots:
        lines.append(f"inputs {p.input_slots}")
    for step in p.steps:
        lines.append(" ".join([step.op, *map(str, step.args)]))
    return "\n".join(lines) + "\n"


def eval_slp_direct(
    p: Slp, inputs: list[int] | tuple[int, ...] = (), budget: int = DEFAULT_BUDGET_BITS
) -> SlpValue:
    """Evaluate every value of ``p``; abort if any exceeds ``budget`` bits.

    Oversized results from ``shl``/``mul``/``add`` are detected from operand
    sizes before being materialized, so a shift by an astronomical amount
    raises instead of exhausting memory.
    """
    if len(inputs) != p.input_slots:
        raise SlpramError(
            f"program declares {p.input_slots} input slot(s), got {len(inputs)}"
        )
    values = [0, 1]
    for x in inputs:
        if x < 0:
            raise SlpramError("inputs must be nonnegative")
        if x.bit_length() > budget:
            raise BudgetExceeded("input exceeds the bit budget")
        values.append(x)
    for k, step in enumerate(p.steps):
        a = values[step.args[0]]
        b = values[step.args[1]] if len(step.args) == 2 else None
        op = step.op
        if op == "shl" and a != 0 and b > budget - a.bit_length():
            raise BudgetExceeded(f"v_{p.first_step + k}: shift result exceeds budget")
        if op == "mul" and a != 0 and b != 0 and a.bit_length() + b.bit_length() - 1 > budget:
            raise BudgetExceeded(f"v_{p.first_step + k}: product exceeds budget")
        v = nm.eval_primitive(op, a, b)
        if v.bit_length() > budget:
            raise BudgetExceeded(f"v_{p.first_step + k} exceeds budget")
        values.append(v)
    return SlpValue(values)


def nonzero_direct(p: Slp, inputs=(), budget: int = DEFAULT_BUDGET_BITS) -> bool:
    return eval_slp_direct(p, inputs, budget).output != 0


def gen_random_slp(
    length: int,
    ops,
    seed: int,
    value_budget: int = DEFAULT_BUDGET_BITS,
    input_slots: int = 0,
    input_values: tuple[int, ...] = (),
    require_slot_use: int | None = None,
    max_retries: int = 64,
) -> Slp:
    """Generate a budget-respecting random program, deterministic in ``seed``.

    Each step is drawn uniformly; choices whose direct evaluation would blow
    the budget are redrawn a bounded number of times (shift amounts are the
    usual culprit).  ``require_slot_use`` forces at least one step to consume
    the given value index, which ALN tests use to guarantee the program
    actually touches its symbolic input.
    """
    if length < 2:
        raise GenerationFailed("length must be at least 2")
    ops = tuple(ops)
    if not ops:
        raise GenerationFailed("empty operation set")
    rng = random.Random(seed)
    for _ in range(max_retries):
        steps: list[Step] = []
        values = [0, 1, *input_values]
        ok = True
        for idx in range(2 + input_slots, length + 1):
            placed = False
            for _ in range(max_retries):
                op = rng.choice(ops)
                k = nm.arity(op)
                args = tuple(rng.randrange(idx) for _ in range(k))
                a = values[args[0]]
                b = values[args[1]] if k == 2 else None
                try:
                    if op == "shl" and a != 0 and b > value_budget - a.bit_length():
                        continue
                    if (
                        op == "mul"
                        and a != 0
                        and b != 0
                        and a.bit_length() + b.bit_length() - 1 > value_budget
                    ):
                        continue
                    v = nm.eval_primitive(op, a, b)
                except nm.NumericsError:
                    continue
                if v.bit_length() > value_budget:
                    continue
                steps.append(Step(op, args))
                values.append(v)
                placed = True
                break
            if not placed:
                ok = False
                break
        if not ok:
            continue
        if require_slot_use is not None and not any(
            require_slot_use in s.args for s in steps
        ):
            continue
        return Slp(tuple(steps), input_slots)
    raise GenerationFailed(
        f"no budget-respecting program of length {length} found for seed {seed}"
    )
