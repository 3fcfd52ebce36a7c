"""Named function families fed to the suites."""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from cotype_bench.configuration import RunConfig
from cotype_bench.errors import ConfigError, CotypeBenchError
from cotype_bench.lower_bounds.jigsaw import jigsaw_is_periodic, jigsaw_vector_fn
from cotype_bench.torus.functions import ScalarMode, TorusFunction
from cotype_bench.torus.points import torus_abs

logger = logging.getLogger(__name__)

NamedFunction = Tuple[str, TorusFunction]


def torus_abs_fn(m: int, n: int, mode: ScalarMode = ScalarMode.EXACT) -> TorusFunction:
    """x -> sum_t |x_t|_m as a real-valued function."""
    profile = np.array([torus_abs(t, m) for t in range(m)], dtype=np.int64)
    table = sum(np.meshgrid(*([profile] * n), indexing="ij"))
    table = np.asarray(table)[..., np.newaxis]
    return TorusFunction(m, n, table.astype(object) if mode is ScalarMode.EXACT else table.astype(float), mode)


def random_family(config: RunConfig, count: Optional[int] = None, salt: int = 0) -> List[NamedFunction]:
    """`count` functions with integer values in [-radius, radius], drawn from seed + salt."""
    if config.seed is None:
        raise ConfigError("seed is mandatory for random families")
    rng = np.random.default_rng([config.seed, salt])
    count = config.functions if count is None else count
    return [
        (
            f"random[{index}]",
            TorusFunction.random_integer(config.m, config.n, config.d, config.radius, rng, config.scalar_mode),
        )
        for index in range(count)
    ]


def load_family_file(path: str, config: RunConfig) -> TorusFunction:
    try:
        f = TorusFunction.from_json(Path(path).read_text(encoding="utf-8"))
    except OSError as err:
        raise ConfigError(f"cannot read family file {path}: {err}") from err
    except (ValueError, CotypeBenchError) as err:
        raise ConfigError(f"family file {path} is not a TorusFunction document: {err}") from err
    if (f.m, f.n) != (config.m, config.n):
        raise ConfigError(f"family file {path} lives on Z_{f.m}^{f.n}, the run uses Z_{config.m}^{config.n}")
    return f


def family_flags(config: RunConfig) -> Dict[str, bool]:
    """Report flags describing how the family sits on the torus."""
    if config.family == "jigsaw":
        return {"jigsaw_periodic_on_torus": jigsaw_is_periodic(config.m, config.jigsaw_s)}
    return {}


def function_family(config: RunConfig, count: Optional[int] = None, salt: int = 0) -> List[NamedFunction]:
    """The functions selected by config.family on Z_m^n."""
    if config.family == "random":
        return random_family(config, count, salt)
    if config.family == "torus_abs":
        return [("torus_abs", torus_abs_fn(config.m, config.n, config.scalar_mode))]
    if config.family == "jigsaw":
        return [
            (f"jigsaw[s={config.jigsaw_s}]", jigsaw_vector_fn(config.jigsaw_s, config.m, config.n, config.scalar_mode))
        ]
    if config.family == "file":
        assert config.family_file is not None
        return [(Path(config.family_file).name, load_family_file(config.family_file, config))]
    raise ConfigError(f"unknown family {config.family!r}")
