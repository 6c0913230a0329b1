"""Composition of two wavelet qubits and zero-pattern classification.

Coefficient ``U_ij`` multiplies the pair versor built from versor ``i`` of the
first qubit and versor ``j`` of the second, with index 1 for ``m`` and 2 for
``n``. Coefficients are stored in the order ``(U11, U12, U21, U22)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from .errors import EvaluationError
from .qubit_encoding import WaveletQubit, dumps_json

SLOT_NAMES = ("U11", "U12", "U21", "U22")
VERSOR_LABELS = (("m", "m"), ("m", "n"), ("n", "m"), ("n", "n"))
DEFAULT_TOL = 1e-10

# disjunct -> (zeroed slots, surviving slots, reduced-form name)
BELL_DISJUNCTS = {
    "A": ((0, 2), (1, 3), "9a"),
    "B": ((0, 3), (1, 2), "9b"),
    "C": ((1, 2), (0, 3), "9c"),
    "D": ((1, 3), (0, 2), "9d"),
}


@dataclass(frozen=True)
class RelationCoefficients:
    u11: float
    u12: float
    u21: float
    u22: float

    def __post_init__(self):
        for name, value in zip(SLOT_NAMES, self.as_tuple()):
            if not math.isfinite(value):
                raise EvaluationError(f"{name} is not finite: {value!r}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.u11, self.u12, self.u21, self.u22)

    def max_abs(self) -> float:
        return max(abs(u) for u in self.as_tuple())


@dataclass(frozen=True)
class TwoQubitState:
    coeffs: RelationCoefficients
    versor_labels: tuple = VERSOR_LABELS
    provenance: tuple[str, str] = ("q1", "q2")

    def __post_init__(self):
        if len(self.versor_labels) != 4:
            raise ValueError("a two-qubit state has exactly four labelled components")

    @classmethod
    def from_values(cls, values: Sequence[float], provenance=("q1", "q2")) -> "TwoQubitState":
        return cls(RelationCoefficients(*(float(v) for v in values)), VERSOR_LABELS, tuple(provenance))


@dataclass(frozen=True)
class BellClassification:
    matched: frozenset[str]
    tolerance: float
    degenerate: bool
    forms: tuple[str, ...] = field(default=())

    @property
    def is_bell(self) -> bool:
        return bool(self.matched)


def relate_product(q1: WaveletQubit, q2: WaveletQubit, provenance=("q1", "q2")) -> TwoQubitState:
    a1, b1 = q1.amplitudes
    a2, b2 = q2.amplitudes
    return TwoQubitState.from_values((a1 * a2, a1 * b2, b1 * a2, b1 * b2), provenance)


def product_rule(a1: float, b1: float, a2: float, b2: float) -> tuple[float, float, float, float]:
    return (a1 * a2, a1 * b2, b1 * a2, b1 * b2)


def relate_general(
    q1: WaveletQubit,
    q2: WaveletQubit,
    coefficient_rule: Callable[[float, float, float, float], Sequence[float]],
    provenance=("q1", "q2"),
) -> TwoQubitState:
    """Apply a user rule ``(a1, b1, a2, b2) -> (U11, U12, U21, U22)``.

    Raises
    ------
    EvaluationError
        The rule returns the wrong number of values or a non-finite one.
    """
    values = tuple(coefficient_rule(q1.alpha, q1.beta, q2.alpha, q2.beta))
    if len(values) != 4:
        raise EvaluationError(f"coefficient rule returned {len(values)} values, expected 4")
    for name, value in zip(SLOT_NAMES, values):
        if not math.isfinite(value):
            raise EvaluationError(f"coefficient rule returned non-finite {name}: {value!r}")
    return TwoQubitState.from_values(values, provenance)


def zero_threshold(state: TwoQubitState, tol: float) -> float:
    return tol * max(1.0, state.coeffs.max_abs())


def classify_bell_condition(state: TwoQubitState, tol: float = DEFAULT_TOL) -> BellClassification:
    """Which of the four two-zero patterns the coefficients satisfy.

    A coefficient counts as zero when ``|U| <= tol * max(1, max|U_ij|)``.
    Pattern A zeroes (U11, U21), B (U11, U22), C (U12, U21) and D (U12, U22).
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    threshold = zero_threshold(state, tol)
    zero = [abs(u) <= threshold for u in state.coeffs.as_tuple()]
    matched = sorted(name for name, (slots, _, _) in BELL_DISJUNCTS.items() if all(zero[s] for s in slots))
    return BellClassification(
        matched=frozenset(matched),
        tolerance=threshold,
        degenerate=all(zero),
        forms=tuple(BELL_DISJUNCTS[name][2] for name in matched),
    )


def reduced_form(state: TwoQubitState, disjunct: str) -> dict[tuple[str, str], float]:
    """The two surviving ``{versor-pair: coefficient}`` terms of a pattern."""
    _, surviving, _ = BELL_DISJUNCTS[disjunct]
    values = state.coeffs.as_tuple()
    return {state.versor_labels[s]: values[s] for s in surviving}


def state_from_terms(terms: dict[tuple[str, str], float], provenance=("q1", "q2")) -> TwoQubitState:
    """Inverse of :func:`reduced_form`: absent versor pairs get coefficient 0."""
    return TwoQubitState.from_values([terms.get(label, 0.0) for label in VERSOR_LABELS], provenance)


def entanglement_determinant(state: TwoQubitState) -> float:
    """``U11 U22 - U12 U21``; zero exactly when the state factorizes."""
    u11, u12, u21, u22 = state.coeffs.as_tuple()
    return u11 * u22 - u12 * u21


def is_separated(state: TwoQubitState, tol: float = DEFAULT_TOL) -> bool:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return abs(entanglement_determinant(state)) <= tol * max(1.0, state.coeffs.max_abs() ** 2)


def state_summary(state: TwoQubitState, bell_tol: float = DEFAULT_TOL, sep_tol: float = DEFAULT_TOL) -> dict:
    classification = classify_bell_condition(state, bell_tol)
    matched = sorted(classification.matched)
    return {
        "U": list(state.coeffs.as_tuple()),
        "labels": [list(label) for label in state.versor_labels],
        "determinant": entanglement_determinant(state),
        "bell_matched": matched,
        "bell_forms": [BELL_DISJUNCTS[name][2] for name in matched],
        "degenerate": classification.degenerate,
        "separated": is_separated(state, sep_tol),
        "tol": {"bell": bell_tol, "separation": sep_tol},
        "provenance": list(state.provenance),
        "index_convention": "U_ij: i = versor of q1, j = versor of q2; 1 = m, 2 = n",
    }


def save_state_json(state: TwoQubitState, path, bell_tol: float = DEFAULT_TOL, sep_tol: float = DEFAULT_TOL) -> None:
    Path(path).write_text(dumps_json(state_summary(state, bell_tol, sep_tol)) + "\n", encoding="utf-8")
