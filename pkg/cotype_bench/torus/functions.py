"""
Vector-valued functions on Z_m^n and the norms of their codomain.

A TorusFunction is a dense table of shape (m, ..., m, d). In exact mode the
entries are Python rationals held in an object array; in float mode the table
is float64. Both modes share every operation so the float path can be used
for (p, q) pairs whose norms are not rational.
"""

import json
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, List, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field

from cotype_bench.errors import DomainMismatchError, ExactModeError, PreconditionError
from cotype_bench.torus.points import (
    SignVector,
    TorusPoint,
    check_permutation,
    inverse_permutation,
    torus_points,
)

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, int, float]
FLOAT_TOLERANCE = 1e-9


class ScalarMode(Enum):
    """Arithmetic used for function values and every derived quantity."""

    EXACT = "exact"
    FLOAT = "float"


def format_scalar(value: Any) -> Union[str, float, None]:
    """Rationals become "num/den" strings, floats stay floats."""
    if value is None:
        return None
    if isinstance(value, Rational):
        frac = Fraction(value)
        return f"{frac.numerator}/{frac.denominator}"
    return float(value)


def at_most(lhs: Scalar, rhs: Scalar, tolerance: float = FLOAT_TOLERANCE) -> bool:
    """lhs <= rhs, exactly for rationals and up to a relative tolerance for floats."""
    if isinstance(lhs, Rational) and isinstance(rhs, Rational):
        return lhs <= rhs
    return float(lhs) <= float(rhs) + tolerance * max(1.0, abs(float(rhs)))


def parse_scalar(value: Union[str, int, float]) -> Scalar:
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, int):
        return Fraction(value)
    return float(value)


@dataclass(frozen=True)
class NormSpec:
    """The codomain l_p^d together with the power q applied to norms.

    Attributes:
        p: Norm exponent, a positive integer or math.inf
        q: Power exponent, at least 1
    """

    p: Union[int, float] = 2
    q: Union[int, Fraction, float] = 2

    def __post_init__(self) -> None:
        if self.p != math.inf and (self.p < 1 or int(self.p) != self.p):
            raise PreconditionError(f"norm exponent must be a positive integer or inf, got {self.p}")
        if self.q < 1:
            raise PreconditionError(f"power exponent must be at least 1, got {self.q}")

    @property
    def exact_closed(self) -> bool:
        """True when ||v||_p^q is rational for every rational vector v."""
        if int(self.q) != self.q:
            return False
        if self.p == math.inf:
            return True
        return int(self.q) % int(self.p) == 0

    def require_exact(self) -> None:
        if not self.exact_closed:
            raise ExactModeError(f"||v||_{self.p}^{self.q} is not rational-closed; use float mode")

    def describe(self) -> dict:
        p = "inf" if self.p == math.inf else int(self.p)
        q = self.q if isinstance(self.q, int) else format_scalar(self.q)
        return {"p": p, "q": q}

    @property
    def q_int(self) -> int:
        self.require_exact()
        return int(self.q)

    def power(self, base: Scalar, mode: "ScalarMode") -> Scalar:
        """base**q in the requested arithmetic (used for factors like m^q)."""
        if mode is ScalarMode.EXACT:
            if int(self.q) != self.q:
                raise ExactModeError(f"base**{self.q} is not rational")
            return Fraction(base) ** int(self.q)
        return float(base) ** float(self.q)


def norm_power_array(values: np.ndarray, spec: NormSpec, mode: ScalarMode) -> np.ndarray:
    """||v||_p^q along the last axis of an array of vectors."""
    if mode is ScalarMode.EXACT:
        mags = np.abs(values)
        if values.shape[-1] == 1 and int(spec.q) == spec.q:
            # every p-norm is |v| on R^1
            return mags[..., 0] ** int(spec.q)
        q = spec.q_int
        if spec.p == math.inf:
            return mags.max(axis=-1) ** q
        p = int(spec.p)
        return (mags**p).sum(axis=-1) ** (q // p)
    norms = np.linalg.norm(np.asarray(values, dtype=float), ord=spec.p, axis=-1)
    return norms ** float(spec.q)


def norm_q_power(v: Sequence[Scalar], spec: NormSpec, mode: ScalarMode = ScalarMode.EXACT) -> Scalar:
    """||v||_p^q of a single vector, exact unless float mode is requested."""
    if mode is ScalarMode.EXACT:
        if any(not isinstance(c, Rational) for c in v):
            raise ExactModeError(f"vector {v} has non-rational entries")
        arr = np.array([Fraction(c) for c in v], dtype=object)
        return Fraction(norm_power_array(arr, spec, mode))
    arr = np.array(v, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise PreconditionError("vector has non-finite entries")
    return float(norm_power_array(arr, spec, mode))


def _as_offsets(a: Union[TorusPoint, SignVector, Sequence[int]]) -> tuple:
    if isinstance(a, TorusPoint):
        return a.coords
    if isinstance(a, SignVector):
        return a.signs
    return tuple(int(c) for c in a)


class TorusFunctionDocument(BaseModel):
    """JSON form of a TorusFunction; rationals are "num/den" strings."""

    m: int
    n: int
    d: int
    mode: str = "exact"
    values: List[List[Union[str, float]]] = Field(default_factory=list, description="Row-major list of vectors")


@dataclass(frozen=True, eq=False)
class TorusFunction:
    """A function f: Z_m^n -> R^d stored as a dense table."""

    m: int
    n: int
    values: np.ndarray
    mode: ScalarMode = ScalarMode.EXACT

    def __post_init__(self) -> None:
        values = self.values
        expected = (self.m,) * self.n
        if values.ndim != self.n + 1 or values.shape[: self.n] != expected or values.shape[-1] < 1:
            raise DomainMismatchError(f"table shape {values.shape} does not match Z_{self.m}^{self.n} -> R^d")
        if self.mode is ScalarMode.EXACT:
            if values.dtype != object:
                if not np.issubdtype(values.dtype, np.integer):
                    raise ExactModeError("exact mode needs rational values")
                values = values.astype(object)
        else:
            values = np.asarray(values, dtype=float)
            if not np.all(np.isfinite(values)):
                raise PreconditionError("function values must be finite")
        if values is self.values:
            values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    # construction

    @classmethod
    def from_callable(
        cls,
        m: int,
        n: int,
        fn: Callable[[TorusPoint], Any],
        mode: ScalarMode = ScalarMode.EXACT,
    ) -> "TorusFunction":
        """Tabulate fn over all points; fn returns a scalar or a vector."""
        rows = []
        for x in torus_points(m, n):
            value = fn(x)
            rows.append(list(value) if isinstance(value, (list, tuple, np.ndarray)) else [value])
        return cls.from_rows(m, n, rows, mode)

    @classmethod
    def from_rows(cls, m: int, n: int, rows: Sequence[Sequence[Scalar]], mode: ScalarMode = ScalarMode.EXACT):
        if len(rows) != m**n:
            raise DomainMismatchError(f"expected {m ** n} rows, got {len(rows)}")
        d = len(rows[0])
        if mode is ScalarMode.EXACT:
            flat = np.empty((m**n, d), dtype=object)
            for idx, row in enumerate(rows):
                if len(row) != d:
                    raise DomainMismatchError("rows have different lengths")
                for c, value in enumerate(row):
                    if not isinstance(value, Rational):
                        raise ExactModeError(f"value {value!r} is not rational")
                    flat[idx, c] = Fraction(value)
        else:
            flat = np.array(rows, dtype=float)
        return cls(m, n, flat.reshape((m,) * n + (d,)), mode)

    @classmethod
    def constant(cls, m: int, n: int, value: Sequence[Scalar], mode: ScalarMode = ScalarMode.EXACT):
        return cls.from_rows(m, n, [list(value)] * (m**n), mode)

    @classmethod
    def random_integer(
        cls,
        m: int,
        n: int,
        d: int,
        radius: int,
        rng: np.random.Generator,
        mode: ScalarMode = ScalarMode.EXACT,
    ) -> "TorusFunction":
        """Values with integer numerators uniform in [-radius, radius]."""
        table = rng.integers(-radius, radius + 1, size=(m,) * n + (d,))
        if mode is ScalarMode.EXACT:
            return cls(m, n, table.astype(object), mode)
        return cls(m, n, table.astype(float), mode)

    # access

    @property
    def d(self) -> int:
        return self.values.shape[-1]

    @property
    def axes(self) -> tuple:
        return tuple(range(self.n))

    def __call__(self, x: TorusPoint) -> tuple:
        if x.m != self.m or x.n != self.n:
            raise DomainMismatchError(f"point on Z_{x.m}^{x.n} for a function on Z_{self.m}^{self.n}")
        return tuple(self.values[x.coords])

    def _same(self, values: np.ndarray) -> "TorusFunction":
        return TorusFunction(self.m, self.n, values, self.mode)

    def _check_compatible(self, other: "TorusFunction") -> None:
        if (self.m, self.n, self.d) != (other.m, other.n, other.d):
            raise DomainMismatchError(
                f"functions on Z_{self.m}^{self.n}->R^{self.d} and Z_{other.m}^{other.n}->R^{other.d}"
            )
        if self.mode is not other.mode:
            raise DomainMismatchError("cannot mix exact and float functions")

    # algebra

    def __add__(self, other: "TorusFunction") -> "TorusFunction":
        self._check_compatible(other)
        return self._same(self.values + other.values)

    def __sub__(self, other: "TorusFunction") -> "TorusFunction":
        self._check_compatible(other)
        return self._same(self.values - other.values)

    def __neg__(self) -> "TorusFunction":
        return self._same(-self.values)

    def scale(self, factor: Scalar) -> "TorusFunction":
        if self.mode is ScalarMode.EXACT:
            return self._same(self.values * Fraction(factor))
        return self._same(self.values * float(factor))

    def add_constant(self, vector: Sequence[Scalar]) -> "TorusFunction":
        if len(vector) != self.d:
            raise DomainMismatchError(f"constant of length {len(vector)} for codomain R^{self.d}")
        if self.mode is ScalarMode.EXACT:
            shift = np.array([Fraction(c) for c in vector], dtype=object)
        else:
            shift = np.array(vector, dtype=float)
        return self._same(self.values + shift)

    def translate(self, a: Union[TorusPoint, SignVector, Sequence[int]]) -> "TorusFunction":
        """The function x -> f(x + a)."""
        offsets = _as_offsets(a)
        if len(offsets) != self.n:
            raise DomainMismatchError(f"offset of length {len(offsets)} on Z_{self.m}^{self.n}")
        return self._same(np.roll(self.values, shift=tuple(-c for c in offsets), axis=self.axes))

    def permute(self, pi: Sequence[int]) -> "TorusFunction":
        """f^pi(x) = f(x^pi), materialized as a new table."""
        pi = check_permutation(pi, self.n)
        order = inverse_permutation(pi) + (self.n,)
        return self._same(np.ascontiguousarray(np.transpose(self.values, order)))

    def norm_power_table(self, spec: NormSpec) -> np.ndarray:
        """Array over Z_m^n of ||f(x)||^q."""
        return norm_power_array(self.values, spec, self.mode)

    # comparison

    def equals(self, other: "TorusFunction", tolerance: float = FLOAT_TOLERANCE) -> bool:
        return self.mismatches(other, tolerance) == 0

    def mismatches(self, other: "TorusFunction", tolerance: float = FLOAT_TOLERANCE) -> int:
        """Number of points where the two functions differ."""
        self._check_compatible(other)
        if self.mode is ScalarMode.EXACT:
            diff = self.values != other.values
        else:
            diff = np.abs(self.values - other.values) > tolerance
        return int(np.count_nonzero(np.any(diff, axis=-1)))

    # serialization

    def to_document(self) -> TorusFunctionDocument:
        flat = self.values.reshape(-1, self.d)
        return TorusFunctionDocument(
            m=self.m,
            n=self.n,
            d=self.d,
            mode=self.mode.value,
            values=[[format_scalar(v) for v in row] for row in flat],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_document().model_dump())

    @classmethod
    def from_document(cls, doc: TorusFunctionDocument) -> "TorusFunction":
        mode = ScalarMode(doc.mode)
        rows = [[parse_scalar(v) for v in row] for row in doc.values]
        if mode is ScalarMode.FLOAT:
            rows = [[float(v) for v in row] for row in rows]
        func = cls.from_rows(doc.m, doc.n, rows, mode)
        if func.d != doc.d:
            raise DomainMismatchError(f"declared d={doc.d} but rows have length {func.d}")
        return func

    @classmethod
    def from_json(cls, text: str) -> "TorusFunction":
        return cls.from_document(TorusFunctionDocument.model_validate_json(text))


def permute_fn(f: TorusFunction, pi: Sequence[int]) -> TorusFunction:
    """f^pi(x) = f(x^pi)."""
    return f.permute(pi)


def require_exact_function(f: TorusFunction) -> None:
    if f.mode is not ScalarMode.EXACT:
        raise ExactModeError("this identity is verified in exact arithmetic only")
