"""Jordan matrices: construction from a Segre characteristic and recovery
of the characteristic from an arbitrary rational matrix.

analyze() inverts build_jordan() up to similarity: characteristic
polynomial -> rational eigenvalues -> rank pattern per eigenvalue ->
block sizes -> canonical Segre characteristic.
"""

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (ExactMatrix, mat_mul, rank, rational_eigenvalues, shift,
                     _as_fraction)
from .partitions import Partition
from .rank_analysis import RankPattern, blocks_from_rank_pattern
from .segre import SegreCharacteristic


class IrrationalEigenvalueError(ValueError):
    """The characteristic polynomial does not split over Q.

    Jordan structure over the rationals is only defined when every
    eigenvalue is rational; .remainder_degree is the degree of the
    rootless factor left after removing all rational roots.
    """

    def __init__(self, remainder_degree: int):
        super().__init__(
            "matrix has irrational or non-real eigenvalues "
            f"(irreducible remainder of degree {remainder_degree})")
        self.remainder_degree = remainder_degree


class InternalInconsistencyError(RuntimeError):
    """Two independent computations disagreed; indicates a bug, not bad input."""


class JordanSpec:
    """A Segre characteristic with one rational eigenvalue per group.

    Eigenvalues are aligned positionally with the characteristic's groups
    (in their stored order) and must be pairwise distinct.
    """

    __slots__ = ("_segre", "_eigenvalues")

    def __init__(self, segre: SegreCharacteristic, eigenvalues):
        if not isinstance(segre, SegreCharacteristic):
            segre = SegreCharacteristic(segre)
        eigs = tuple(_as_fraction(e) for e in eigenvalues)
        if len(eigs) != len(segre.groups):
            raise ValueError(
                f"{len(segre.groups)} groups need {len(segre.groups)} "
                f"eigenvalues, got {len(eigs)}")
        if len(set(eigs)) != len(eigs):
            raise ValueError("eigenvalues must be pairwise distinct")
        self._segre = segre
        self._eigenvalues = eigs

    @classmethod
    def positional(cls, segre: SegreCharacteristic) -> "JordanSpec":
        """Assign eigenvalues 1, 2, ..., k to the groups in order."""
        if not isinstance(segre, SegreCharacteristic):
            segre = SegreCharacteristic(segre)
        return cls(segre, range(1, len(segre.groups) + 1))

    @property
    def segre(self) -> SegreCharacteristic:
        return self._segre

    @property
    def eigenvalues(self) -> tuple[Fraction, ...]:
        return self._eigenvalues

    @property
    def dimension(self) -> int:
        return self._segre.total_weight

    def __eq__(self, other) -> bool:
        if not isinstance(other, JordanSpec):
            return NotImplemented
        return (self._segre.groups == other._segre.groups
                and self._eigenvalues == other._eigenvalues)

    def __hash__(self) -> int:
        return hash((tuple(g.parts for g in self._segre.groups),
                     self._eigenvalues))

    def __repr__(self) -> str:
        return f"JordanSpec({self._segre!r}, {list(self._eigenvalues)!r})"


@dataclass(frozen=True)
class EigenvalueReport:
    eigenvalue: Fraction
    rank_pattern: RankPattern
    blocks: Partition


@dataclass(frozen=True)
class AnalysisReport:
    """What analyze() found: the canonical characteristic plus the
    per-eigenvalue evidence, in ascending eigenvalue order."""

    segre: SegreCharacteristic
    per_eigenvalue: tuple[EigenvalueReport, ...]

    def to_json_dict(self) -> dict:
        return {
            "segre": str(self.segre),
            "eigenvalues": [
                {
                    "value": str(r.eigenvalue),
                    "rank_pattern": list(r.rank_pattern.ranks),
                    "blocks": list(r.blocks.parts),
                }
                for r in self.per_eigenvalue
            ],
        }


def build_jordan(spec: JordanSpec) -> ExactMatrix:
    """The Jordan matrix realizing `spec`.

    Blocks are laid out along the diagonal in group order, parts within a
    group largest-first; each block carries its eigenvalue on the diagonal
    and 1 on the superdiagonal.
    """
    n = spec.dimension
    entries = [[Fraction(0)] * n for _ in range(n)]
    offset = 0
    for group, lam in zip(spec.segre.groups, spec.eigenvalues):
        for size in group.parts:
            for r in range(offset, offset + size):
                entries[r][r] = lam
            for r in range(offset, offset + size - 1):
                entries[r][r + 1] = Fraction(1)
            offset += size
    return ExactMatrix.from_rows(entries)


def rank_pattern_of(a: ExactMatrix, lam) -> RankPattern:
    """Ranks of (a - lam*I)^k for k = 0, 1, ... until they stabilize.

    For a non-eigenvalue lam this is the length-1 pattern (n,).
    """
    if not a.is_square:
        raise ValueError("rank patterns require a square matrix")
    n = a.rows
    shifted = shift(a, lam)
    ranks = [n]
    power = shifted
    while True:
        r = rank(power)
        if r == ranks[-1]:
            break
        ranks.append(r)
        if r == 0:
            break
        power = mat_mul(power, shifted)
    return RankPattern(n, ranks)


def analyze(a: ExactMatrix) -> AnalysisReport:
    """Recover the Segre characteristic of a rational matrix.

    Sweeps the rational eigenvalues in ascending order, measures each rank
    pattern with exact elimination, converts to block sizes, and
    cross-checks the blocks against the algebraic multiplicity from the
    characteristic polynomial.  Raises IrrationalEigenvalueError when the
    spectrum is not rational and InternalInconsistencyError if the
    cross-check ever fails (which would mean a bug in the arithmetic).
    """
    if not a.is_square:
        raise ValueError("analysis requires a square matrix")
    eigs, remainder = rational_eigenvalues(a)
    if remainder > 0:
        raise IrrationalEigenvalueError(remainder)
    reports = []
    groups = []
    for lam, multiplicity in eigs:
        pattern = rank_pattern_of(a, lam)
        blocks = blocks_from_rank_pattern(pattern)
        if blocks.weight != multiplicity:
            raise InternalInconsistencyError(
                f"eigenvalue {lam}: blocks {blocks} sum to {blocks.weight}, "
                f"characteristic polynomial says multiplicity {multiplicity}")
        reports.append(EigenvalueReport(lam, pattern, blocks))
        groups.append(blocks)
    total = sum(g.weight for g in groups)
    if total != a.rows:
        raise InternalInconsistencyError(
            f"blocks cover {total} of {a.rows} dimensions")
    segre = SegreCharacteristic(groups).canonical()
    return AnalysisReport(segre, tuple(reports))
