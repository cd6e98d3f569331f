"""Tweaked arithmetic and Boolean primitives on unbounded nonnegative integers.

Registers never hold negative values, so the usual integer operations are
tweaked: subtraction saturates at zero, negation flips bits only up to and
including the most significant set bit, and division is either exact or
floored.  ``BigNat`` is a plain Python ``int`` restricted to values >= 0;
only the operation contracts matter, not the representation.

Canonical operation mnemonics (also used by the SLP and RAM text formats):

    add sub mul div idiv shl shr and or xor not clear inc

where ``sub`` is natural subtraction, ``div`` exact division and ``idiv``
floor division.  ``not`` and ``inc`` are unary, everything else binary.
"""

from __future__ import annotations

from .errors import SlpramError

BigNat = int

UNARY_OPS = frozenset({"not", "inc"})
BINARY_OPS = frozenset(
    {"add", "sub", "mul", "div", "idiv", "shl", "shr", "and", "or", "xor", "clear"}
)
ALL_OPS = UNARY_OPS | BINARY_OPS

# Operations whose lazy bitwise evaluation is supported.
LAZY_OPS = frozenset({"add", "sub", "mul", "shl", "shr", "and", "or", "xor", "not"})


class NumericsError(SlpramError):
    pass


class DivByZero(NumericsError):
    pass


class NotExact(NumericsError):
    """Exact division applied to operands that do not divide."""


class ArityMismatch(NumericsError):
    pass


def arity(op: str) -> int:
    if op in UNARY_OPS:
        return 1
    if op in BINARY_OPS:
        return 2
    raise ArityMismatch(f"unknown operation {op!r}")


def bit_length(a: BigNat) -> int:
    """Number of bits up to and including the most significant 1 (0 for 0)."""
    return a.bit_length()


def tweaked_not(a: BigNat) -> BigNat:
    """Complement the bits of ``a`` up to and including its top set bit.

    ``tweaked_not(0) == 0``: with no set bits there is nothing to flip, which
    also keeps ``set_mask(0) == 0`` consistent with the subtraction formula
    below.
    """
    return a ^ ((1 << a.bit_length()) - 1)


def set_mask(a: BigNat) -> BigNat:
    """All-ones mask as wide as ``a``: ``a | tweaked_not(a)``."""
    return (1 << a.bit_length()) - 1


def natsub(a: BigNat, b: BigNat) -> BigNat:
    """Natural subtraction ``max(a - b, 0)``."""
    return a - b if a > b else 0


def clear(a: BigNat, b: BigNat) -> BigNat:
    """``a AND NOT b`` as a single untweaked Boolean operation.

    The complement is taken over ``max(bit_length(a), bit_length(b))`` bits,
    so the result never exceeds ``a``.
    """
    return a & ~b


def natsub_via_bool(a: BigNat, b: BigNat) -> BigNat:
    """Natural subtraction computed from ``+`` and Boolean operations only.

    Three cases: ``b`` wider than ``a`` gives 0; equal widths with no carry
    out of ``a``'s top bit gives 0; otherwise adding the complement of the
    widened ``b`` and masking recovers ``a - b``.
    """
    sa = set_mask(a)
    sb = set_mask(b)
    if (sa | sb) != sa:
        return 0
    if sa == sb and ((a + tweaked_not(b)) & (sa + 1)) == 0:
        return 0
    return (a + tweaked_not(b + sa)) & sa


def exact_div(a: BigNat, b: BigNat) -> BigNat:
    if b == 0:
        raise DivByZero("exact division by zero")
    q, r = divmod(a, b)
    if r:
        raise NotExact(f"{a} is not a multiple of {b}")
    return q


def floor_div(a: BigNat, b: BigNat) -> BigNat:
    if b == 0:
        raise DivByZero("integer division by zero")
    return a // b


_BINARY = {
    "add": lambda a, b: a + b,
    "sub": natsub,
    "mul": lambda a, b: a * b,
    "div": exact_div,
    "idiv": floor_div,
    "shl": lambda a, b: a << b,
    "shr": lambda a, b: a >> b,
    "and": lambda a, b: a & b,
    "or": lambda a, b: a | b,
    "xor": lambda a, b: a ^ b,
    "clear": clear,
}

_UNARY = {
    "not": tweaked_not,
    "inc": lambda a: a + 1,
}


def eval_primitive(op: str, a: BigNat, b: BigNat | None = None) -> BigNat:
    """Apply one primitive operation; ``b`` must be present iff binary.

    Callers are responsible for bounding operands: ``shl`` by a huge amount
    will happily try to materialize the result.
    """
    if op in _UNARY:
        if b is not None:
            raise ArityMismatch(f"{op} takes one operand")
        return _UNARY[op](a)
    if op in _BINARY:
        if b is None:
            raise ArityMismatch(f"{op} takes two operands")
        return _BINARY[op](a, b)
    raise ArityMismatch(f"unknown operation {op!r}")
