from fractions import Fraction

import pytest

from ecseq.sweep import (
    ConfigError,
    FunctionEntry,
    model_for_expression,
    parse_config,
    plan,
    run_sweep,
    to_csv,
    worker_count,
)

CONFIG = """
# comment
primes = 5..13, 29
primes = 31
prime_filter = 1mod4
function = u+v
function = u*v; degree=4; omega=1,1
function = x
generator = linear
generator = power
e_count = 2
kappa = 1/2
pole_value = 0
threads = 2
"""


def test_parse_config():
    cfg = parse_config(CONFIG)
    assert cfg.primes == (5, 13, 29)
    assert cfg.functions[1] == FunctionEntry("u*v", degree=4, omega=(True, True))
    assert cfg.generators == ("linear", "power")
    assert cfg.kappa == Fraction(1, 2) and cfg.pole_value == 0 and cfg.threads == 2


@pytest.mark.parametrize("text", [
    "function = u+v",
    "primes = 5..13\nprime_filter = odd",
    "primes = 9",
    "primes = 5\ngenerator = quadratic",
    "primes = 5\nkappa = lots",
    "primes = 5\nfunction = u; shape=2",
    "primes = 5\njust some words",
])
def test_bad_configs(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_model_for_expression():
    assert model_for_expression("g") == "weierstrass"
    assert model_for_expression("x^2 + y") == "weierstrass"
    assert model_for_expression("u*v + d") == "edwards"


def test_square_d_becomes_error_row():
    cfg = parse_config("primes = 13\nd = 4\n")
    rows = run_sweep(cfg)
    assert len(rows) == 1 and "legendre" in rows[0]["error"]


def test_plan_size():
    cfg = parse_config(CONFIG)
    work = plan(cfg)
    # per prime: 3 functions x (1 linear + 2 power)
    assert len(work) == 3 * 3 * 3


def test_rows_and_determinism(monkeypatch):
    cfg = parse_config(CONFIG)
    rows = run_sweep(cfg)
    by = {(r["p"], r["function"], r["generator"], r["e"]): r for r in rows}
    assert by[(13, "u+v", "linear", None)]["bound"] == "thm1"
    assert by[(13, "x", "linear", None)]["bound"] == "hs"
    assert by[(13, "u*v", "linear", None)]["provenance"] == "declared"
    assert all(r.get("bound") == "thm2" for r in rows if r["generator"] == "power"
               and not r.get("error"))
    monkeypatch.setenv("ECSEQ_THREADS", "1")
    assert worker_count(cfg) == 1
    assert to_csv(run_sweep(cfg)) == to_csv(rows)


def test_uncataloged_function_error_row():
    rows = run_sweep(parse_config("primes = 13\nfunction = u^3\n"))
    assert "catalog" in rows[0]["error"]


def test_function_without_bound():
    rows = run_sweep(parse_config("primes = 13\nfunction = y\npole_value = 0\n"))
    assert rows[0]["bound"] == "none" and rows[0]["verdict"] == "n/a"
