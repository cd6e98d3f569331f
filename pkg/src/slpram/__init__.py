"""Straight-line programs over tweaked nonnegative-integer operations.

The package bundles:

* ``numerics`` -- the tweaked primitive operations (natural subtraction,
  length-bounded negation, clear, exact division, shifts).
* ``slp`` -- the straight-line program model, parser, direct evaluator and
  a seeded adversarial generator.
* ``lazy`` -- bitwise lazy evaluation of SLP outputs without materializing
  the (possibly astronomically large) values.
* ``ram`` / ``tm`` / ``codegen`` -- a register-machine interpreter, a binary
  Turing machine interpreter, and a compiler from machines to straight-line
  register programs.
* ``tableau`` / ``nram`` -- computation-tableau witnesses, their verifier,
  packed multi-candidate checking, and single-integer certificate schemes.
* ``cli`` -- the ``slpram`` command-line entry point.
"""

__version__ = "0.1.0"
