"""The photon-conversion Hamiltonian family H = H0 + g*H1.

H0 = sum_l nu_l a_l^+ a_l + sum_k mu_k b_k^+ b_k and
H1 = prod_k (b_k^+)^m_k prod_l a_l^n_l + h.c., with the frequencies tied
together by sum_l n_l nu_l = sum_k m_k mu_k.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral
from pathlib import Path
from typing import Any, Mapping

from .errors import (
    ConstraintViolated,
    EmptyModeList,
    InvalidFrequency,
    ModelError,
    NonPositiveExponent,
    NonPositiveFrequency,
)

_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


@dataclass(frozen=True)
class Model:
    """Frequencies, conversion exponents and coupling of one model.

    Build instances through :func:`validate`; the constructor does not check
    anything.
    """

    nu: tuple[Fraction, ...]
    mu: tuple[Fraction, ...]
    n: tuple[int, ...]
    m: tuple[int, ...]
    g: float = 1.0

    @property
    def N(self) -> int:
        return len(self.nu)

    @property
    def M(self) -> int:
        return len(self.mu)

    def to_json(self) -> dict[str, Any]:
        return {
            "nu": [_format_rational(v) for v in self.nu],
            "mu": [_format_rational(v) for v in self.mu],
            "n": list(self.n),
            "m": list(self.m),
            "g": self.g,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any] | str) -> "Model":
        if isinstance(data, str):
            data = json.loads(data)
        return validate(data)


@dataclass(frozen=True)
class HarmonicGeneration:
    n: int


@dataclass(frozen=True)
class PhotonCascade:
    photons: int


@dataclass(frozen=True)
class General:
    pass


def _format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(value: Any, what: str = "frequency") -> Fraction:
    """Read an exact rational from an int, a Fraction or a "p/q" string.

    Floats are refused: a binary float cannot be trusted to satisfy an exact
    linear identity among frequencies.
    """
    if isinstance(value, bool):
        raise InvalidFrequency(f"{what}: boolean {value!r} is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, float):
        raise InvalidFrequency(
            f"{what}: floating value {value!r} rejected; write it as an exact "
            f"rational string such as \"1/2\" or \"3\""
        )
    if isinstance(value, str) and _RATIONAL.match(value):
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            raise InvalidFrequency(f"{what}: zero denominator in {value!r}") from None
    raise InvalidFrequency(
        f"{what}: cannot read {value!r} as a rational; use \"p/q\" or an integer"
    )


def _parse_exponent(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (Integral, str)):
        raise ModelError(f"{what}: exponent {value!r} is not an integer")
    try:
        k = int(value)
    except ValueError:
        raise ModelError(f"{what}: exponent {value!r} is not an integer") from None
    if k < 1:
        raise NonPositiveExponent(f"{what}: exponent {k} must be >= 1")
    return k


def validate(raw: Model | Mapping[str, Any]) -> Model:
    """Check a model record and return it as an exact :class:`Model`.

    Raises
    ------
    EmptyModeList, NonPositiveFrequency, NonPositiveExponent, InvalidFrequency
        For malformed fields.
    ConstraintViolated
        When ``sum(n*nu) != sum(m*mu)``; the exception holds both sums.
    """
    if isinstance(raw, Model):
        fields = {"nu": raw.nu, "mu": raw.mu, "n": raw.n, "m": raw.m, "g": raw.g}
    else:
        fields = dict(raw)
    try:
        nu_raw, mu_raw = list(fields["nu"]), list(fields["mu"])
        n_raw, m_raw = list(fields["n"]), list(fields["m"])
    except KeyError as exc:
        raise ModelError(f"missing field {exc.args[0]!r}") from None
    except TypeError:
        raise ModelError("nu, mu, n and m must be lists") from None

    if not nu_raw or not mu_raw:
        raise EmptyModeList("both mode lists (nu and mu) must be nonempty")
    if len(n_raw) != len(nu_raw):
        raise ModelError(f"len(n) = {len(n_raw)} but len(nu) = {len(nu_raw)}")
    if len(m_raw) != len(mu_raw):
        raise ModelError(f"len(m) = {len(m_raw)} but len(mu) = {len(mu_raw)}")

    nu = tuple(parse_rational(v, f"nu[{i}]") for i, v in enumerate(nu_raw))
    mu = tuple(parse_rational(v, f"mu[{i}]") for i, v in enumerate(mu_raw))
    for name, freqs in (("nu", nu), ("mu", mu)):
        for i, f in enumerate(freqs):
            if f <= 0:
                raise NonPositiveFrequency(f"{name}[{i}] = {f} must be > 0")
    n = tuple(_parse_exponent(v, f"n[{i}]") for i, v in enumerate(n_raw))
    m = tuple(_parse_exponent(v, f"m[{i}]") for i, v in enumerate(m_raw))

    g = fields.get("g", 1.0)
    if isinstance(g, bool) or not isinstance(g, (int, float)):
        raise ModelError(f"coupling g = {g!r} must be a real number")
    g = float(g)
    if not math.isfinite(g):
        raise ModelError(f"coupling g = {g!r} must be finite")

    lhs = sum((k * f for k, f in zip(n, nu)), Fraction(0))
    rhs = sum((k * f for k, f in zip(m, mu)), Fraction(0))
    if lhs != rhs:
        raise ConstraintViolated(lhs, rhs)
    return Model(nu=nu, mu=mu, n=n, m=m, g=g)


def model_kind(model: Model) -> HarmonicGeneration | PhotonCascade | General:
    if model.N == 1 and model.M == 1 and model.m[0] == 1:
        return HarmonicGeneration(model.n[0])
    if model.M == 1 and model.m[0] == 1 and all(k == 1 for k in model.n):
        return PhotonCascade(model.N)
    return General()


def load_model(path: str | Path) -> Model:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ModelError("model file must hold a JSON object")
    return validate(data)
