"""The Q-linear relation family and the odd-index basis representations.

The function family under study is zeta(-c, s+c) for c = 0, 1, 2, ...,
ordered by c.  Throughout this module a coefficient vector over the
family of size L is indexed by position p = 0..L-1, where position p
stands for zeta(-p, s+p) except that position 0 stands for the halved
function zeta(0,s)/2.  The halving is pure bookkeeping inherited from
the constant row of the coefficient matrix; every public
BasisRepresentation folds it away and speaks about zeta(0,s) itself.

Two independent derivations of the same basis coefficients exist:

* `basis_representation` reads them off a row of A2 * A1^(-1), pure
  exact linear algebra on the coefficient matrix;
* `residue_system_representation` never touches the matrix and instead
  matches pole residues of the meromorphic continuations, walking the
  shared pole locations from the lowest up and solving one linear
  equation per pole.

Their exact agreement for every m is one of the package's main checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeffs import build_matrix_A, split_A1_A2
from .errors import VerificationError
from .exactnum import gen_binomial, rat_to_str
from .trilinalg import invert_forward, mat_mul

MATRIX_PATH = "matrix_path"
RESIDUE_PATH = "residue_path"
_PROVENANCES = (MATRIX_PATH, RESIDUE_PATH)


def function_label(p: int) -> str:
    """Display name of family member p: zeta(0,s), zeta(-1,s+1), ..."""
    if p < 0:
        raise ValueError("index must be >= 0")
    if p == 0:
        return "zeta(0,s)"
    return f"zeta(-{p},s+{p})"


@dataclass(frozen=True)
class RelationVector:
    """One Q-linear relation sum_p coefficients[p] * f_p = 0.

    Position p refers to zeta(-p, s+p), with position 0 the halved
    zeta(0,s)/2 (see module docstring).  The identity holds for the
    meromorphic continuations away from their singularities.
    """

    coefficients: tuple[Fraction, ...]
    provenance: str

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coefficients", tuple(Fraction(x) for x in self.coefficients)
        )
        if all(x == 0 for x in self.coefficients):
            raise ValueError("relation must have a nonzero coefficient")
        if self.provenance not in _PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    def folded_coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients over the unhalved functions zeta(-p, s+p).

        Only position 0 changes: a weight w on zeta(0,s)/2 is the
        weight w/2 on zeta(0,s).  This is the form all CLI emitters
        use.
        """
        head = self.coefficients[0] / 2
        return (head,) + self.coefficients[1:]


def relation_family(N: int) -> list[RelationVector]:
    """All N' relations of the size-N family, one per matrix row.

    Row i of A1^(-1) contributes the even positions and row i of
    -A2^(-1) the odd positions of relation i; relation 1 is
    zeta(0,s)/2 - zeta(-1,s+1) = 0.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    n_prime = N // 2
    a1, a2 = split_A1_A2(build_matrix_A(N))
    inv1 = invert_forward(a1)
    inv2 = invert_forward(a2)
    out = []
    for i in range(n_prime):
        coeffs = [Fraction(0)] * (2 * n_prime)
        for k in range(n_prime):
            coeffs[2 * k] = inv1.entries[i][k]
            coeffs[2 * k + 1] = -inv2.entries[i][k]
        out.append(RelationVector(coefficients=tuple(coeffs), provenance=MATRIX_PATH))
    return out


@dataclass(frozen=True)
class BasisRepresentation:
    """zeta(-2m-1, s+2m+1) written over the even-index basis.

    gamma[k] multiplies zeta(-2k, s+2k); gamma[0] multiplies the plain
    zeta(0,s) (no halving here).  Construction enforces the two
    structural facts that hold for every valid representation: the
    leading coefficient gamma[m] = (2m+1)/2, and the residue balance
    2*gamma[0] + sum_{k>=1} gamma[k] = 1 coming from the common pole at
    s = 1.  Violations raise VerificationError because they can only
    mean a corrupted derivation, not a bad argument.
    """

    m: int
    gamma: tuple[Fraction, ...]
    provenance: str = MATRIX_PATH

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", tuple(Fraction(x) for x in self.gamma))
        if self.m < 0:
            raise ValueError("m must be >= 0")
        if self.provenance not in _PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if len(self.gamma) != self.m + 1:
            raise VerificationError("gamma must have length m + 1")
        if self.gamma[self.m] != Fraction(2 * self.m + 1, 2):
            raise VerificationError(
                f"leading coefficient must be (2m+1)/2, got {self.gamma[self.m]}"
            )
        if 2 * self.gamma[0] + sum(self.gamma[1:], Fraction(0)) != 1:
            raise VerificationError("residue balance 2*gamma_0 + sum gamma_2k = 1 violated")

    @property
    def target_label(self) -> str:
        return function_label(2 * self.m + 1)

    def as_relation_vector(self) -> RelationVector:
        """The same identity as a zero relation over the family.

        Coefficient +1 on the target, -gamma[k] on each basis member;
        position 0 carries -2*gamma[0] because it stands for
        zeta(0,s)/2.
        """
        coeffs = [Fraction(0)] * (2 * self.m + 2)
        coeffs[2 * self.m + 1] = Fraction(1)
        coeffs[0] = -2 * self.gamma[0]
        for k in range(1, self.m + 1):
            coeffs[2 * k] = -self.gamma[k]
        return RelationVector(coefficients=tuple(coeffs), provenance=self.provenance)

    def to_json_dict(self) -> dict:
        return {
            "target": self.target_label,
            "coeffs": {str(2 * k): rat_to_str(g) for k, g in enumerate(self.gamma)},
        }

    def to_latex(self) -> str:
        """One display line, highest basis index first, p \\zeta(...)/q terms."""
        parts = [f"\\zeta(-{2 * self.m + 1},s+{2 * self.m + 1}) ="]
        for k in range(self.m, -1, -1):
            g = self.gamma[k]
            if g == 0:
                continue
            label = "\\zeta(0,s)" if k == 0 else f"\\zeta(-{2 * k},s+{2 * k})"
            mag = abs(g)
            num = "" if mag.numerator == 1 else f"{mag.numerator} "
            den = "" if mag.denominator == 1 else f"/{mag.denominator}"
            term = f"{num}{label}{den}"
            if k == self.m:
                parts.append(term if g > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if g > 0 else f"- {term}")
        return " ".join(parts)

    def to_text(self) -> str:
        parts = [f"{self.target_label} ="]
        for k in range(self.m, -1, -1):
            g = self.gamma[k]
            if g == 0:
                continue
            label = function_label(2 * k)
            mag = abs(g)
            coef = "" if mag == 1 else f"{rat_to_str(mag)} "
            term = f"{coef}{label}"
            if k == self.m:
                parts.append(term if g > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if g > 0 else f"- {term}")
        return " ".join(parts)


def basis_representation(m: int, n_prime: int | None = None) -> BasisRepresentation:
    """Basis coefficients for zeta(-2m-1, s+2m+1) from the matrix path.

    Builds the coefficient matrix at size n_prime (default m+1, any
    larger size gives the same answer), forms A2 * A1^(-1), and reads
    row m+1: its entries weight (zeta(0,s)/2, zeta(-2,s+2), ...), so
    the first entry is halved into gamma[0].
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    size = m + 1 if n_prime is None else n_prime
    if size < m + 1:
        raise ValueError("n_prime must be at least m + 1")
    a1, a2 = split_A1_A2(build_matrix_A(2 * size))
    product = mat_mul(a2, invert_forward(a1))
    row = product.entries[m]
    gamma = [row[0] / 2] + [row[k] for k in range(1, m + 1)]
    return BasisRepresentation(m=m, gamma=tuple(gamma), provenance=MATRIX_PATH)


def residue_system_representation(m: int) -> BasisRepresentation:
    """The same coefficients derived purely from pole residues.

    Write the sought identity as the zero relation

        0 = zeta(-2m-1, s+2m+1) + sum_{k=1}^{m} c_{2k} zeta(-2k, s+2k)
            + c_0 * zeta(0,s)/2.

    Every member here has a simple pole at s = 2 - 2j for each j up to
    its index bound, with residue binom(2j-2-idx, 2j-1) * zeta(1-2j)
    where idx is the member's family index.  Matching residues at
    s = 2-2j involves only c_{2k} with k >= j, and the k = j weight
    binom(-2, 2j-1) never vanishes, so solving from j = m down to j = 1
    is triangular with one unknown each.  c_0 then comes from the pole
    at s = 1 where every term carries residue -1/2.  The untouched pole
    at s = 2 (residue 1/(idx+1), and 1/2 for the halved head) gives one
    redundant equation, checked at the end; an imbalance there would
    mean the system was inconsistent and raises VerificationError.
    Finally gamma = -c restores the positive convention, with gamma[0]
    absorbing the halving.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    c: dict[int, Fraction] = {}
    for j in range(m, 0, -1):
        rhs = gen_binomial(2 * j - 3 - 2 * m, 2 * j - 1)
        for k in range(j + 1, m + 1):
            rhs += c[2 * k] * gen_binomial(2 * j - 2 - 2 * k, 2 * j - 1)
        c[2 * j] = -rhs / gen_binomial(-2, 2 * j - 1)
    c0 = -(1 + sum(c.values()))
    balance = Fraction(1, 2 * m + 2)
    balance += sum(c[2 * k] / (2 * k + 1) for k in range(1, m + 1))
    balance += c0 / 2
    if balance != 0:
        raise VerificationError(
            f"residue system inconsistent at s = 2 for m = {m}: imbalance {balance}"
        )
    gamma = [-c0 / 2] + [-c[2 * k] for k in range(1, m + 1)]
    return BasisRepresentation(m=m, gamma=tuple(gamma), provenance=RESIDUE_PATH)


def dimension(N: int) -> int:
    """Q-dimension of the span of the size-N family: floor(N/2) + 1."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return N // 2 + 1


@dataclass(frozen=True)
class BasisFunction:
    """Descriptor of one even-index basis member zeta(-c, s+c)."""

    c: int

    def __post_init__(self) -> None:
        if self.c < 0 or self.c % 2 != 0:
            raise ValueError("basis members have even index c >= 0")

    @property
    def label(self) -> str:
        return function_label(self.c)


def basis_list(N: int) -> list[BasisFunction]:
    """The even-index members spanning the size-N family, ascending."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return [BasisFunction(c=c) for c in range(0, N + 1, 2)]
