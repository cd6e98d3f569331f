import pytest

from slpram import slp
from slpram.errors import BudgetExceeded, ParseError


def test_parse_single_step():
    p = slp.parse_slp("shl 1 1")
    assert p.n == 2
    assert p.steps == (slp.Step("shl", (1, 1)),)


def test_parse_two_steps():
    p = slp.parse_slp("shl 1 1\nmul 2 2")
    assert p.n == 3


def test_parse_forward_reference():
    with pytest.raises(slp.ForwardReference):
        slp.parse_slp("add 5 1")


def test_parse_errors():
    with pytest.raises(ParseError):
        slp.parse_slp("bogus 1 1")
    with pytest.raises(ParseError):
        slp.parse_slp("add 1")
    with pytest.raises(ParseError):
        slp.parse_slp("shl 1 1\ninputs 2")


def test_parse_print_roundtrip():
    text = "inputs 2\nshl 1 1\nadd 4 2\nnot 5\n"
    p = slp.parse_slp(text)
    assert slp.print_slp(p) == text
    assert slp.parse_slp(slp.print_slp(p)) == p


def test_eval_direct_basics():
    assert slp.eval_slp_direct(slp.parse_slp("shl 1 1")).output == 2
    assert slp.eval_slp_direct(slp.parse_slp("shl 1 1\nmul 2 2")).output == 4
    assert slp.eval_slp_direct(slp.parse_slp("xor 1 1")).output == 0


def test_eval_direct_inputs():
    p = slp.parse_slp("inputs 2\nadd 2 3")
    assert slp.eval_slp_direct(p, [2555, 1021]).output == 3576


def test_nonzero_direct():
    assert not slp.nonzero_direct(slp.parse_slp("xor 1 1"))
    assert slp.nonzero_direct(slp.parse_slp("add 1 1"))
    # max(1 - 2, 0) = 0
    assert not slp.nonzero_direct(slp.parse_slp("shl 1 1\nsub 1 2"))


def test_budget_aborts_towers():
    # 2, 4, 16, 2^16, 2^65536: the last step exceeds a 2^16-bit budget
    text = "shl 1 1\nshl 1 2\nshl 1 3\nshl 1 4\nshl 1 5"
    with pytest.raises(BudgetExceeded):
        slp.eval_slp_direct(slp.parse_slp(text), budget=1 << 16)
    # a roomier budget admits it
    v = slp.eval_slp_direct(slp.parse_slp(text), budget=(1 << 16) + 2)
    assert v.output == 1 << 65536


def test_generator_deterministic():
    ops = ("add", "shl")
    a = slp.gen_random_slp(5, ops, seed=1)
    b = slp.gen_random_slp(5, ops, seed=1)
    assert a == b
    assert a.n == 5


def test_generator_respects_budget():
    ops = ("add", "sub", "mul", "shl", "shr", "and", "or", "xor", "not")
    for seed in range(40):
        p = slp.gen_random_slp(12, ops, seed=seed, value_budget=1 << 16)
        slp.eval_slp_direct(p, budget=1 << 16)  # must not raise


def test_generator_distinct_seeds_differ():
    ops = ("add", "sub", "mul", "shl", "shr", "and", "or", "xor", "not")
    progs = {slp.gen_random_slp(10, ops, seed=s) for s in range(20)}
    assert len(progs) > 10


def test_prefix():
    p = slp.parse_slp("shl 1 1\nmul 2 2\nadd 3 2")
    q = p.prefix(3)
    assert q.n == 3
    assert slp.eval_slp_direct(q).output == 4
    assert p.prefix(1).n == 1
