"""The definition of the run configuration and its per-suite validation."""

import logging
import math
import os
from typing import Any, Dict, Mapping, Optional, Union

from cotype_bench.configuration_wizard import ConfigWizard, configclass, configfield
from cotype_bench.errors import ConfigError, CotypeBenchError
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.torus.functions import NormSpec, ScalarMode

logger = logging.getLogger(__name__)

SUITES = ("bernoulli", "identities", "cotype", "scheme", "lower-bounds", "symmetrize", "all")
FAMILIES = ("random", "torus_abs", "jigsaw", "file")
RANDOM_SUITES = ("identities", "cotype", "scheme", "symmetrize", "all")


@configclass
class RunConfig(ConfigWizard):
    """Configuration of one cotype-bench run.

    :cvar suite: The suite to execute
    :cvar seed: Seed of every random family; mandatory when one is used
    """

    suite: str = configfield("suite", default="all", help_txt="Suite: " + ", ".join(SUITES))
    n: int = configfield("n", default=2, help_txt="Torus dimension")
    m: int = configfield("m", default=8, help_txt="Modulus of the torus")
    k: int = configfield("k", default=3, help_txt="Odd box half-width of the S(j,k) scheme")
    q: float = configfield("q", default=2, help_txt="Power exponent q")
    p: float = configfield("p", default=2, help_txt="Codomain norm l_p (a positive integer or inf)")
    d: int = configfield("d", default=1, help_txt="Codomain dimension")
    seed: Optional[int] = configfield("seed", default=None, help_txt="Seed of random families and sampled sweeps")
    mode: str = configfield("mode", default="exact", help_txt="Arithmetic: exact or float")
    budget: int = configfield("budget", default=10**6, help_txt="Largest exhaustively enumerated domain")
    samples: int = configfield("samples", default=10_000, help_txt="Sampled tuples beyond the budget")
    allow_sampling: bool = configfield("allow_sampling", default=True, help_txt="Sample instead of failing")
    functions: int = configfield("functions", default=20, help_txt="Size of the random function family")
    radius: int = configfield("radius", default=5, help_txt="Random values are integers in [-radius, radius]")
    family: str = configfield("family", default="random", help_txt="Function family: " + ", ".join(FAMILIES))
    family_file: Optional[str] = configfield("family_file", default=None, help_txt="JSON TorusFunction document")
    jigsaw_s: int = configfield("jigsaw_s", default=1, help_txt="Plateau width s of the jigsaw family")
    bernoulli_n: int = configfield("bernoulli_n", default=12, help_txt="Size N of the Bernoulli table")
    series_n: int = configfield("series_n", default=20, help_txt="Truncation of the generating function check")
    out: Optional[str] = configfield("out", default=None, help_txt="Report path; stdout when unset")
    threads: int = configfield("threads", default=4, help_txt="Worker threads of the suite executor")

    @property
    def scalar_mode(self) -> ScalarMode:
        return ScalarMode(self.mode)

    @property
    def q_value(self) -> Union[int, float]:
        return int(self.q) if float(self.q).is_integer() else float(self.q)

    @property
    def p_value(self) -> Union[int, float]:
        return math.inf if math.isinf(self.p) else int(self.p)

    @property
    def norm_spec(self) -> NormSpec:
        return NormSpec(self.p_value, self.q_value)

    @property
    def codomain_dimension(self) -> int:
        """d of the functions the family produces; the jigsaw witness maps into l_inf^n."""
        return self.n if self.family == "jigsaw" else self.d

    def scheme_params(self) -> SchemeParams:
        return SchemeParams(n=self.n, m=self.m, k=self.k, q=self.q_value)

    def echo(self) -> Dict[str, Any]:
        """The parameters copied into every report."""
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            **self.norm_spec.describe(),
            "d": self.d,
            "mode": self.mode,
            "seed": self.seed,
            "family": self.family,
        }


def load_run_config(
    config_file: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """defaults < COTYPE_BENCH_* environment < file < overrides; None overrides are ignored."""
    data: Dict[str, Any] = RunConfig.read_file(config_file) if config_file else {}
    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value
    config = RunConfig.from_dict(data, os.environ if environ is None else environ)
    validate(config)
    return config


def _require(condition: bool, message: str) -> None:
    if not condition:
        logger.error("invalid configuration: %s", message)
        raise ConfigError(message)


def validate(config: RunConfig) -> None:
    """Check the configuration against the preconditions of its suite."""
    _require(config.suite in SUITES, f"unknown suite {config.suite!r}; expected one of {', '.join(SUITES)}")
    _require(config.mode in ("exact", "float"), f"mode must be exact or float, got {config.mode!r}")
    _require(config.family in FAMILIES, f"unknown family {config.family!r}")
    _require(config.family != "file" or bool(config.family_file), "family=file needs family_file")
    _require(config.threads >= 1, "threads must be at least 1")
    _require(config.budget >= 1 and config.samples >= 1, "budget and samples must be positive")
    _require(config.bernoulli_n >= 0 and config.series_n >= 0, "Bernoulli sizes must be nonnegative")
    _require(config.functions >= 1 and config.radius >= 1, "functions and radius must be positive")
    _require(config.jigsaw_s >= 1, "jigsaw_s must be positive")
    _require(config.d >= 1, "d must be positive")
    _require(config.seed is None or config.seed >= 0, f"seed must be nonnegative, got {config.seed}")
    if config.suite in RANDOM_SUITES and config.family == "random":
        _require(config.seed is not None, "seed is mandatory for random families")
    if config.suite in ("symmetrize", "all"):
        _require(config.seed is not None, "seed is mandatory for random kernel families")
    if config.suite == "bernoulli":
        return
    _require(config.m % 2 == 0, f"m must be even, got {config.m}")
    try:
        config.norm_spec
        config.scheme_params()
    except CotypeBenchError as err:
        _require(False, str(err))
    if config.mode == "exact":
        _require(float(config.q).is_integer(), f"exact mode needs an integer q, got {config.q}; use --mode float")
    if config.mode == "exact" and config.codomain_dimension > 1:
        _require(config.norm_spec.exact_closed, f"||.||_{config.p}^{config.q} is not rational; use --mode float")
    if config.suite in ("scheme", "symmetrize", "all"):
        _require(float(config.q).is_integer(), f"the smoothing measure beta2 needs an integer q, got {config.q}")
    if config.suite in ("cotype", "all"):
        _require(config.m % 4 == 0, f"m must be divisible by 4, got {config.m}")
