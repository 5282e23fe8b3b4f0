"""Coefficient-based unit-circle stability test with a determinant table.

A polynomial of degree ``m >= 3`` is reduced row by row: each new row entry
is the 2x2 determinant pairing the previous row's outer entries with a
mirrored interior pair, and each row comes out one entry shorter, down to a
final three-entry row. Stability of the root set (all moduli < 1) is
equivalent to ``m + 1`` strict inequalities: two boundary evaluations at
+1 and -1, a magnitude test on the outer coefficients, and one magnitude
test per reduced row.

An independent verdict based on the root-modulus oracle is provided for
cross-checking and as a fallback when the table degenerates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomial import Polynomial, evaluate, normalize_leading, spectral_radius

STABLE = "stable"
UNSTABLE = "unstable"
MARGINAL = "marginal"

# Strict inequalities are granted only beyond this slack, relative to the
# magnitudes being compared; anything inside the band counts as marginal.
# The scaling matters: the reduction squares the outer entries row after
# row, so their absolute size drops double-exponentially with the degree
# and a fixed absolute band would misread deep tables as marginal.
MARGIN_TOL = 1e-12

_SINGULAR_TOL = 1e-12
_RECURRENCE_TOL = 1e-9


class TableNotApplicableError(ValueError):
    """Degree below 2: the reduction table is empty by construction."""


class SingularTableError(RuntimeError):
    """A row that still needs reduction ends in ~0; the scheme breaks down."""


@dataclass(frozen=True)
class JuryTable:
    """Reduction rows; ``rows[0]`` is the input coefficient row."""

    rows: tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class ConditionResult:
    """One strict inequality, 1-indexed, with its signed slack.

    ``margin`` is positive exactly when the inequality holds strictly;
    ``satisfied`` requires ``margin > tolerance``, where ``tolerance`` is
    the MARGIN_TOL band scaled to this condition's operand magnitudes.
    """

    index: int
    description: str
    lhs: float
    rhs: float
    satisfied: bool
    margin: float
    tolerance: float


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of a stability test.

    ``status`` is one of stable / unstable / marginal. For an unstable
    coefficient-test verdict ``witness`` is the first failed condition
    index; for oracle verdicts it is the spectral radius. ``method``
    records which test produced the verdict ("jury" or "oracle").
    """

    status: str
    witness: float | int | None
    method: str


@dataclass(frozen=True)
class InductionReport:
    """Structure check of the reduction table for the delay family.

    For ``lambda^(tau+1) - lambda^tau + r`` every reduced row should carry
    non-zero entries only at positions 0, m-1 and m, and consecutive
    reduced rows should be linked by three closed-form products of the
    previous row's outer entries.
    """

    tau: int
    r: float
    rows_checked: int
    sparse_pattern_holds: bool
    recurrences_hold: bool
    max_discrepancy: float


def jury_table(p: Polynomial) -> JuryTable:
    """Build the full reduction table down to the three-entry row.

    For a row ``(a_0, ..., a_m)`` the successor entries are
    ``a_m * a_(k+1) - a_(m-1-k) * a_0`` for ``k = 0 .. m-1``. Raises
    :class:`SingularTableError` if a row that still needs reduction has a
    last entry within 1e-12 of zero, and :class:`TableNotApplicableError`
    for degree < 2.
    """
    p = normalize_leading(p)
    if p.degree < 2:
        raise TableNotApplicableError(
            f"reduction table needs degree >= 2, got {p.degree}")
    rows: list[tuple[float, ...]] = [p.coeffs]
    while len(rows[-1]) > 3:
        row = rows[-1]
        m = len(row) - 1
        if abs(row[m]) <= _SINGULAR_TOL:
            raise SingularTableError(
                f"singular table: row {len(rows)} ends in {row[m]:.3e}")
        rows.append(tuple(row[m] * row[k + 1] - row[m - 1 - k] * row[0]
                          for k in range(m)))
    return JuryTable(tuple(rows))


def jury_conditions(p: Polynomial) -> list[ConditionResult]:
    """Evaluate the ``degree + 1`` stability inequalities of ``p``.

    Degree 1 needs only the two boundary evaluations, degree 2 adds the
    outer-coefficient magnitude test, and each reduced row of the table
    contributes one |last| > |first| test. A singular table propagates.
    """
    p = normalize_leading(p)
    m = p.degree
    if m < 1:
        raise ValueError("stability conditions need degree >= 1")

    results: list[ConditionResult] = []
    # boundary evaluations carry rounding noise ~ eps * sum |a_i|
    boundary_scale = sum(abs(c) for c in p.coeffs)
    value_at_one = evaluate(p, 1.0)
    results.append(_condition(1, "P(1) > 0",
                              lhs=value_at_one, rhs=0.0,
                              margin=value_at_one, scale=boundary_scale))

    alternating = (-1.0) ** m * evaluate(p, -1.0)
    results.append(_condition(2, "(-1)^m P(-1) > 0",
                              lhs=alternating, rhs=0.0,
                              margin=alternating, scale=boundary_scale))

    if m >= 2:
        results.append(_condition(3, "|a_m| < a_0",
                                  lhs=abs(p.coeffs[m]), rhs=p.coeffs[0],
                                  margin=p.coeffs[0] - abs(p.coeffs[m]),
                                  scale=max(abs(p.coeffs[m]), p.coeffs[0])))

    if m >= 3:
        for offset, row in enumerate(jury_table(p).rows[1:]):
            results.append(_condition(
                4 + offset,
                f"|last| > |first| on reduced row {offset + 1}",
                lhs=abs(row[-1]), rhs=abs(row[0]),
                margin=abs(row[-1]) - abs(row[0]),
                scale=max(abs(row[-1]), abs(row[0]))))
    return results


def _condition(index: int, description: str, lhs: float, rhs: float,
               margin: float, scale: float) -> ConditionResult:
    tolerance = MARGIN_TOL * scale
    return ConditionResult(index=index, description=description,
                           lhs=lhs, rhs=rhs,
                           satisfied=margin > tolerance,
                           margin=margin, tolerance=tolerance)


def oracle_verdict(p: Polynomial) -> StabilityVerdict:
    """Classify by the largest root modulus, independent of the table."""
    rho = spectral_radius(p)
    if rho < 1.0 - MARGIN_TOL:
        return StabilityVerdict(STABLE, witness=rho, method="oracle")
    if rho > 1.0 + MARGIN_TOL:
        return StabilityVerdict(UNSTABLE, witness=rho, method="oracle")
    return StabilityVerdict(MARGINAL, witness=rho, method="oracle")


def jury_verdict(p: Polynomial) -> StabilityVerdict:
    """Classify ``p`` by the coefficient conditions.

    A condition failing beyond its tolerance wins over ones sitting at
    equality: the polynomial is then unstable no matter how the marginal
    ones resolve. With no clear failure, any condition inside its band
    yields a marginal verdict. A singular table delegates to the
    root-modulus oracle.
    """
    p = normalize_leading(p)
    try:
        conditions = jury_conditions(p)
    except SingularTableError:
        return oracle_verdict(p)
    for cond in conditions:
        if cond.margin < -cond.tolerance:
            return StabilityVerdict(UNSTABLE, witness=cond.index, method="jury")
    for cond in conditions:
        if abs(cond.margin) <= cond.tolerance:
            return StabilityVerdict(MARGINAL, witness=cond.index, method="jury")
    return StabilityVerdict(STABLE, witness=None, method="jury")


def verify_sparse_induction(tau: int, r: float) -> InductionReport:
    """Check the sparse row pattern and row-to-row recurrences numerically.

    Builds the table for ``lambda^(tau+1) - lambda^tau + r`` and verifies
    that, from the first reduced row onward, only positions 0, m-1 and m
    are non-zero, and that consecutive reduced rows satisfy

    - ``next[0]   = -prev[m-1] * prev[0]``
    - ``next[m-2] =  prev[m] * prev[m-1]``
    - ``next[m-1] =  prev[m]**2 - prev[0]**2``

    Violations are reported through the flags, not raised. The input row
    itself carries its middle non-zero entry at position 1, so the pattern
    is only asserted after one reduction.
    """
    if tau < 2:
        raise ValueError("need tau >= 2 so the table has a reduced row")
    p = Polynomial((1.0, -1.0) + (0.0,) * (tau - 1) + (float(r),))
    reduced = jury_table(p).rows[1:]

    sparse = True
    for row in reduced:
        m = len(row) - 1
        if any(row[k] != 0.0 for k in range(1, m - 1)):
            sparse = False

    max_discrepancy = 0.0
    for prev, nxt in zip(reduced, reduced[1:]):
        m = len(prev) - 1
        max_discrepancy = max(
            max_discrepancy,
            abs(nxt[0] - (-prev[m - 1] * prev[0])),
            abs(nxt[-2] - prev[m] * prev[m - 1]),
            abs(nxt[-1] - (prev[m] ** 2 - prev[0] ** 2)))

    return InductionReport(
        tau=tau, r=float(r), rows_checked=len(reduced),
        sparse_pattern_holds=sparse,
        recurrences_hold=max_discrepancy <= _RECURRENCE_TOL,
        max_discrepancy=max_discrepancy)
