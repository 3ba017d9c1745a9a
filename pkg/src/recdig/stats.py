"""Statistics over recurrent digraphs and exact order-sum identities.

Totals of a statistic (recurrent points, connected components) over all
structures of a class are themselves counts of a modified class: weighting
by the number of recurrent points points at the recurrent structure, and
weighting by the number of components multiplies the recurrent counts by
their logarithm.  Everything stays in exact integers; harmonic numbers
only ever appear multiplied by factorials, and the asymptotics report is
the single place where decimal renderings (never floats in identities)
are produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, log, perm

from recdig.digraphs import (
    exact_div,
    cayley_count,
    digraph_count,
    digraph_count_by_recurrent,
    endofunction_count,
)
from recdig.series import CoeffSeq, LogarithmDomainError, ShapeError, atom
from recdig.stirling import iter_sdiff_levels, sdiff

EULER_GAMMA = 0.5772156649
INV_E = "0.3678794412"


def ordinal_product(a: CoeffSeq, b: CoeffSeq) -> CoeffSeq:
    """Structures on an initial and a terminal segment of a total order.

    Plain (non-binomial) convolution: the segment split leaves no label
    choices.
    """
    if a.truncation != b.truncation:
        raise ShapeError("ordinal product: truncations differ")
    counts = tuple(
        sum(a.counts[k] * b.counts[n - k] for k in range(n + 1))
        for n in range(len(a.counts))
    )
    return CoeffSeq(
        counts,
        label=f"{a.label}(+){b.label}",
        virtual=a.virtual or b.virtual,
    )


# -- statistic totals ---------------------------------------------------------


def total_recurrent_points(i: int, j: int, rec: CoeffSeq) -> int:
    """Sum of the number of recurrent points over all structures on [i, j]."""
    return sum(
        r * digraph_count_by_recurrent(i, j, r, rec) for r in range(i + 1)
    )


def component_weights(rec: CoeffSeq) -> CoeffSeq:
    """The class R * log R, whose counts weight each structure by its
    number of connected components."""
    if rec.counts[0] != 1:
        raise LogarithmDomainError(
            "component counting needs exactly one empty recurrent structure"
        )
    return rec * rec.log()


def total_components(i: int, j: int, rec: CoeffSeq) -> int:
    """Sum of the number of components over all structures on [i, j]."""
    return digraph_count(i, j, component_weights(rec))


def total_recurrent_cayley(n: int, rec: CoeffSeq) -> int:
    return cayley_count(n, rec.pointing())


def total_recurrent_end(n: int, rec: CoeffSeq) -> int:
    return endofunction_count(n, rec.pointing())


def total_components_cayley(n: int, rec: CoeffSeq) -> int:
    return cayley_count(n, component_weights(rec))


def total_components_end(n: int, rec: CoeffSeq) -> int:
    return endofunction_count(n, component_weights(rec))


def total_cycles_over_cayley(n: int) -> int:
    """Total number of cycles over all Cayley permutations of [n]."""
    return total_components_cayley(n, atom("S", n))


def total_cycles_over_end(n: int) -> int:
    """Total number of cycles over all endofunctions of [n]."""
    return total_components_end(n, atom("S", n))


# -- exact identity suite -------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    index: tuple[int, ...]
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def _ballot_powers(nmax: int, rmax: int):
    """(E^r * Bal^(r+1))[.] and (E^r * Bal^r)[.] for r = 0..rmax."""
    e = atom("E", nmax)
    bal = atom("Bal", nmax)
    mixed = []
    square = []
    er = atom("1", nmax)
    for r in range(rmax + 1):
        balr = atom("1", nmax)
        for _ in range(r):
            balr = balr * bal
        square.append(er * balr)
        mixed.append(er * (balr * bal))
        er = er * e
    return mixed, square


def identity_checks(
    rec: CoeffSeq, nmax: int, rmax: int = 6
) -> list[IdentityCheck]:
    """Evaluate the order-sum identities as exact integer comparisons.

    Four families, all multiplied through so no division ever happens:

    * ballot_block_sum: sum_i i! sdiff(n+r+1, i, r) = r! r (E^r Bal^(r+1))[n]
    * ballot_integral_doubled: 2r (int E^r Bal^(r+1))[n] = (E^r Bal^r - 1)[n]
    * segment_expansion: Cay-count(n) = R[n]
          + sum_r (pointed R_r) (+) (int E^r Bal^(r+1)) at n
    * segment_expansion_halved: 2 Cay-count(n)
          = sum_r R_r (+) (1 + E^r Bal^r) at n
    """
    if rec.truncation < nmax:
        raise ShapeError("recurrent sequence shorter than requested range")
    checks: list[IdentityCheck] = []
    big_r = max(rmax, nmax)
    mixed, square = _ballot_powers(nmax, big_r)

    for r in range(1, rmax + 1):
        for n in range(nmax + 1):
            lhs = sum(
                factorial(i) * sdiff(n + r + 1, i, r)
                for i in range(n + r + 2)
            )
            rhs = factorial(r) * r * mixed[r].counts[n]
            checks.append(IdentityCheck("ballot_block_sum", (r, n), lhs, rhs))

    one = atom("1", nmax)
    for r in range(1, rmax + 1):
        lhs_seq = mixed[r].integral()
        rhs_seq = square[r] - one
        for n in range(nmax + 1):
            checks.append(
                IdentityCheck(
                    "ballot_integral_doubled",
                    (r, n),
                    2 * r * lhs_seq.counts[n],
                    rhs_seq.counts[n],
                )
            )

    # Pointed-segment expansion, assembled with the actual sequence operations.
    total = rec.truncate(nmax)
    acc = [total.counts[n] for n in range(nmax + 1)]
    for r in range(1, nmax + 1):
        term = ordinal_product(
            rec.truncate(nmax).restrict(r).pointing(), mixed[r].integral()
        )
        for n in range(nmax + 1):
            acc[n] += term.counts[n]
    for n in range(nmax + 1):
        checks.append(
            IdentityCheck(
                "segment_expansion", (n,), cayley_count(n, rec), acc[n]
            )
        )

    halved = [0] * (nmax + 1)
    for r in range(nmax + 1):
        term = ordinal_product(rec.truncate(nmax).restrict(r), one + square[r])
        for n in range(nmax + 1):
            halved[n] += term.counts[n]
    for n in range(nmax + 1):
        checks.append(
            IdentityCheck(
                "segment_expansion_halved",
                (n,),
                2 * cayley_count(n, rec),
                halved[n],
            )
        )
    return checks


# -- asymptotics report ----------------------------------------------------------


@dataclass(frozen=True)
class AsymptoticsRow:
    """One exact ratio with a decimal rendering and a reference constant.

    Purely descriptive: nothing here asserts convergence.
    """

    statistic: str
    n: int
    numerator: int
    denominator: int
    ratio: str
    reference: str


def decimal_string(num: int, den: int, digits: int = 10) -> str:
    """Decimal rendering of num/den by integer long division."""
    if den == 0:
        raise ZeroDivisionError("ratio with zero denominator")
    sign = "-" if (num < 0) != (den < 0) and num != 0 else ""
    num, den = abs(num), abs(den)
    whole, rem = divmod(num, den)
    frac_digits = []
    for _ in range(digits):
        rem *= 10
        d, rem = divmod(rem, den)
        frac_digits.append(str(d))
    return f"{sign}{whole}." + "".join(frac_digits)


def _cycle_reference(n: int) -> str:
    return f"{0.5 * (log(2 * n) + EULER_GAMMA):.10f}"


def asymptotics_report(nmax: int) -> list[AsymptoticsRow]:
    """Exact ratio data for the open limit questions, n = 0..nmax.

    Emits the fixed-point-free fraction of Cayley permutations against 1/e,
    and average cycle counts (over endofunctions and over Cayley
    permutations of the classes all / forest / connected / derangement)
    against (log(2n) + gamma) / 2.  Formula-only: streams one Stirling
    difference level at a time, so nmax around 100 stays cheap.
    """
    fact = [1] * (nmax + 1)
    for i in range(1, nmax + 1):
        fact[i] = fact[i - 1] * i

    sub = atom("Der", nmax).counts
    # r! * H_r, (E log E)[r] = r, and (Der log Der)[r], all exact integers.
    slog = [sum(fact[r] // k for k in range(1, r + 1)) for r in range(nmax + 1)]
    der_seq = atom("Der", nmax)
    derlog = (der_seq * der_seq.log()).counts

    rows: list[AsymptoticsRow] = []
    for n, level in iter_sdiff_levels(nmax):
        u = [0] * (n + 1)
        v = [0] * (n + 1)
        for m in range(n + 1):
            fm = fact[m]
            pm = perm(n, m)
            row = level[m]
            for r in range(n + 1):
                val = row[r]
                if val:
                    u[r] += fm * val
                    v[r] += pm * val

        fubini = sum(u)
        cayder = sum(exact_div(sub[r] * u[r], fact[r]) for r in range(n + 1))
        rows.append(
            AsymptoticsRow(
                "cayley_derangement_fraction",
                n,
                cayder,
                fubini,
                decimal_string(cayder, fubini),
                INV_E,
            )
        )
        if n == 0:
            continue
        ref = _cycle_reference(n)
        end_cycles = sum(
            exact_div(slog[r] * v[r], fact[r]) for r in range(n + 1)
        )
        rows.append(
            AsymptoticsRow(
                "avg_cycles_endofunctions",
                n,
                end_cycles,
                n**n,
                decimal_string(end_cycles, n**n),
                ref,
            )
        )
        cay_cycles = {
            "all": sum(exact_div(slog[r] * u[r], fact[r]) for r in range(n + 1)),
            "forest": sum(
                exact_div(r * u[r], fact[r]) for r in range(n + 1)
            ),
            "derangement": sum(
                exact_div(derlog[r] * u[r], fact[r]) for r in range(n + 1)
            ),
        }
        cay_total = {
            "all": fubini,
            "forest": sum(exact_div(u[r], fact[r]) for r in range(n + 1)),
            "derangement": cayder,
        }
        # Connected structures have one component each: numerator = count.
        connected = sum(exact_div(u[r], r) for r in range(1, n + 1))
        cay_cycles["connected"] = connected
        cay_total["connected"] = connected

        for cname in ("all", "forest", "connected", "derangement"):
            num, den = cay_cycles[cname], cay_total[cname]
            if den == 0:
                continue
            rows.append(
                AsymptoticsRow(
                    f"avg_cycles_cayley_{cname}",
                    n,
                    num,
                    den,
                    decimal_string(num, den),
                    ref,
                )
            )
    return rows
