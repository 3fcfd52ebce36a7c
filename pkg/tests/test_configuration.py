"""
Tests for the run configuration.

Tests cover:
1. Defaults, environment variables, files and overrides in that order
2. Unknown keys and unreadable files
3. Per-suite validation
"""

import pytest

from cotype_bench.configuration import RunConfig, load_run_config
from cotype_bench.errors import ConfigError
from cotype_bench.torus.functions import NormSpec, ScalarMode


def test_defaults():
    """Test the defaults of a bernoulli run."""
    config = load_run_config(overrides={"suite": "bernoulli"}, environ={})

    assert (config.n, config.m, config.k, config.q_value, config.p_value) == (2, 8, 3, 2, 2)
    assert config.threads == 4
    assert config.seed is None
    assert config.scalar_mode is ScalarMode.EXACT
    assert config.norm_spec == NormSpec(2, 2)


def test_precedence(tmp_path):
    """Test defaults < environment < file < overrides."""
    path = tmp_path / "run.yaml"
    path.write_text("suite: bernoulli\nthreads: 3\nn: 1\n", encoding="utf-8")
    environ = {"COTYPE_BENCH_THREADS": "2", "COTYPE_BENCH_RADIUS": "7"}

    from_env = load_run_config(overrides={"suite": "bernoulli"}, environ=environ)
    from_file = load_run_config(str(path), environ=environ)
    overridden = load_run_config(str(path), overrides={"threads": 1, "n": None}, environ=environ)

    assert from_env.threads == 2
    assert from_file.threads == 3
    assert from_file.radius == 7
    assert overridden.threads == 1
    assert overridden.n == 1

    print("* Configuration precedence: override 1 > file 3 > env 2")


def test_json_file(tmp_path):
    """Test that JSON documents are read as well."""
    path = tmp_path / "run.json"
    path.write_text('{"suite": "bernoulli", "bernoulli_n": 6}', encoding="utf-8")

    assert load_run_config(str(path), environ={}).bernoulli_n == 6


def test_rejected_inputs(tmp_path):
    """Test unknown keys, missing files and non-mapping documents."""
    with pytest.raises(ConfigError):
        load_run_config(overrides={"suite": "bernoulli", "colour": "red"}, environ={})
    with pytest.raises(ConfigError):
        load_run_config(str(tmp_path / "missing.yaml"), environ={})

    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_run_config(str(listing), environ={})


@pytest.mark.parametrize(
    "overrides",
    [
        {"suite": "cotype", "seed": 1, "m": 7},
        {"suite": "cotype", "seed": 1, "m": 6, "k": 1},
        {"suite": "cotype"},
        {"suite": "scheme", "seed": 1, "k": 4},
        {"suite": "scheme", "seed": 1, "q": 1.5},
        {"suite": "scheme", "seed": -1},
        {"suite": "cotype", "seed": 1, "d": 2, "p": 2, "q": 3},
        {"suite": "cotype", "family": "file"},
        {"suite": "symmetrize", "family": "torus_abs"},
        {"suite": "bernoulli", "threads": 0},
        {"suite": "bernoulli", "mode": "symbolic"},
    ],
)
def test_validation_failures(overrides):
    """Test that invalid combinations raise ConfigError."""
    with pytest.raises(ConfigError):
        load_run_config(overrides=overrides, environ={})


def test_valid_combinations():
    """Test configurations that pass validation."""
    float_run = load_run_config(overrides={"suite": "cotype", "seed": 1, "mode": "float", "q": 1.5}, environ={})
    assert float_run.q_value == 1.5
    assert float_run.norm_spec == NormSpec(2, 1.5)

    jigsaw = load_run_config(overrides={"suite": "cotype", "family": "jigsaw", "n": 2, "p": float("inf")}, environ={})
    assert jigsaw.codomain_dimension == 2
    assert jigsaw.echo()["p"] == "inf"

    odd_modulus = load_run_config(overrides={"suite": "bernoulli", "m": 7}, environ={})
    assert odd_modulus.m == 7


def test_help_lists_every_key():
    """Test that the help text names every key with its environment variable."""
    lines = []
    RunConfig.print_help(lines.append)
    text = "".join(lines)

    for key in ("suite", "seed", "threads", "family_file"):
        assert key in text
        assert f"COTYPE_BENCH_{key.upper()}" in text
