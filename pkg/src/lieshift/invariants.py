"""Index, the bound b, symmetric invariants, regularity, transcendence degree.

Sampling-based quantities (index, Jacobian transcendence degree) take the
maximum of an exact rank over several random integer points.  An undershoot
would need every sampled point to land on a proper closed subvariety, so the
repeated maximum is reported as the generic value, together with the seed and
the witness point that attained it.  All arithmetic stays exact.
"""

import itertools
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .fields import FieldError
from .liealg import LinearForm, Subspace, coadjoint_form, stabilizer, subalgebra_of
from .linalg import Matrix, kernel_basis, rank
from .pbw import PBWElement, principal_symbol
from .polyring import PolyElement, differential_at, poisson

DEFAULT_SEED = 2020
DEFAULT_SAMPLES = 5
DEFAULT_BOUND = 10**4


@dataclass(frozen=True)
class GeneratorSet:
    """A named family of commuting-algebra generators with its construction log.

    flavor is "poisson" for symmetric-algebra elements and "associative" for
    enveloping-algebra elements; provenance carries one log string per element
    saying which construction step produced it.
    """

    flavor: str
    elements: tuple
    provenance: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "provenance", tuple(str(p) for p in self.provenance))
        if self.flavor not in ("poisson", "associative"):
            raise ValueError("flavor must be 'poisson' or 'associative'")
        if len(self.provenance) != len(self.elements):
            raise ValueError("one provenance entry per element")
        kind = PolyElement if self.flavor == "poisson" else PBWElement
        for el in self.elements:
            if not isinstance(el, kind):
                raise ValueError("flavor %r does not match element %r" % (self.flavor, el))
            if el.is_zero:
                raise ValueError("generator sets must not contain zero")

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class SampleReport:
    """A sampled quantity with enough context to reproduce it."""

    value: int
    method: str
    seed: int
    samples: int
    ranks: tuple
    witness: tuple


def sample_seed(seed, i):
    # distinct stream per sample index; multiplying keeps nearby base seeds
    # from sharing streams
    return seed * 1_000_003 + i


def sample_point(field, n, seed, bound, nonzero=frozenset()):
    """Random integer point, coordinates uniform in [-bound, bound].

    Indices in `nonzero` are redrawn until nonzero (they sit under a formal
    inverse somewhere in the caller's data).
    """
    rng = random.Random(seed)
    pt = []
    for i in range(n):
        c = rng.randint(-bound, bound)
        while i in nonzero and c == 0:
            c = rng.randint(-bound, bound)
        pt.append(field.from_int(c))
    return tuple(pt)


def index_of(L, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND, seed=DEFAULT_SEED):
    """Index of L: dim minus the generic rank of the coadjoint form.

    The form gamma([x_i, x_j]) is evaluated at sampled integer points of the
    dual space; its rank is maximal outside a proper closed locus.
    """
    best = -1
    witness = ()
    ranks = []
    for i in range(int(samples)):
        pt = sample_point(L.field, L.dim, sample_seed(seed, i), bound)
        r = rank(coadjoint_form(L, LinearForm(L.field, pt)))
        ranks.append(r)
        if r > best:
            best, witness = r, pt
    return SampleReport(
        value=L.dim - best,
        method="coadjoint-rank-sampling",
        seed=seed,
        samples=int(samples),
        ranks=tuple(ranks),
        witness=witness,
    )


def b_of(L, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND, seed=DEFAULT_SEED):
    """(dim + index)/2, the upper bound for transcendence degrees of
    Poisson-commutative subalgebras of S(L)."""
    ind = index_of(L, samples, bound, seed).value
    two_b = L.dim + ind
    if two_b % 2:
        # the coadjoint form is antisymmetric, so its rank is even and this
        # branch signals a sampling failure rather than a real half-integer
        warnings.warn("dim + index came out odd; reporting a half-integer")
        return Fraction(two_b, 2)
    return two_b // 2


def b_rel(L, sub, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND, seed=DEFAULT_SEED):
    """Relative bound b(L) - b(l) + ind(l) for a bracket-closed subspace l.

    The subalgebra's own index and b are computed intrinsically on its
    structure constants.  Raises if the subspace is not bracket-closed.
    """
    if not isinstance(sub, Subspace):
        sub = Subspace(L.field, L.dim, [tuple(v) for v in sub])
    sub_alg, _ = subalgebra_of(L, sub)
    ind_l = index_of(sub_alg, samples, bound, seed).value
    out = (
        Fraction(b_of(L, samples, bound, seed))
        - Fraction(sub_alg.dim + ind_l, 2)
        + ind_l
    )
    return int(out) if out.denominator == 1 else out


def monomials_of_degree(nvars, d):
    """Exponent tuples of total degree d, in a fixed deterministic order."""
    if d == 0:
        yield (0,) * nvars
        return
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def symmetric_invariants(L, max_deg):
    """Basis of the homogeneous Poisson-central elements in degrees 1..max_deg.

    Degree by degree: stack the coefficients of {x_i, m} over all generators
    x_i and monomials m of that degree, and take the exact kernel.  Constants
    are excluded; the list may be empty.
    """
    F = L.field
    out = []
    for d in range(1, int(max_deg) + 1):
        monos = list(monomials_of_degree(L.dim, d))
        row_index = {}
        cols = []
        for e in monos:
            m = PolyElement(F, L.dim, {e: F.one})
            col = {}
            for i in range(L.dim):
                br = poisson(L, PolyElement.variable(F, L.dim, i), m)
                for oe, c in br.terms.items():
                    key = (i, oe)
                    if key not in row_index:
                        row_index[key] = len(row_index)
                    col[row_index[key]] = c
            cols.append(col)
        if not row_index:
            # the adjoint action kills everything: every monomial is invariant
            out.extend(PolyElement(F, L.dim, {e: F.one}) for e in monos)
            continue
        rows = [[F.zero] * len(monos) for _ in range(len(row_index))]
        for j, col in enumerate(cols):
            for r, c in col.items():
                rows[r][j] = c
        for coeffs in kernel_basis(Matrix(F, rows, ncols=len(monos))):
            terms = {e: c for e, c in zip(monos, coeffs) if not c.is_zero}
            out.append(PolyElement(F, L.dim, terms))
    return out


def trdeg_jacobian(gens, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND, seed=DEFAULT_SEED):
    """Transcendence degree of a generating set via sampled Jacobian rank.

    Enveloping-algebra elements are first replaced by their principal symbols
    (which preserves transcendence degree); the rank of the matrix of
    differentials is then sampled exactly as in index_of.  Coordinates under a
    formal inverse are kept nonzero.
    """
    if isinstance(gens, GeneratorSet):
        elements = list(gens.elements)
        if gens.flavor == "associative":
            elements = [principal_symbol(u) for u in elements]
    else:
        elements = [
            principal_symbol(u) if isinstance(u, PBWElement) else u for u in gens
        ]
    if not elements:
        return SampleReport(
            value=0,
            method="jacobian-rank-sampling",
            seed=seed,
            samples=int(samples),
            ranks=(),
            witness=(),
        )
    F = elements[0].field
    n = elements[0].nvars
    if any(f.field is not F or f.nvars != n for f in elements):
        raise FieldError("generators live in different polynomial rings")
    nz = frozenset().union(*(f.laurent for f in elements))
    best = -1
    witness = ()
    ranks = []
    for i in range(int(samples)):
        pt = sample_point(F, n, sample_seed(seed, i), bound, nonzero=nz)
        rows = [differential_at(f, pt) for f in elements]
        r = rank(Matrix(F, rows, ncols=n))
        ranks.append(r)
        if r > best:
            best, witness = r, pt
    return SampleReport(
        value=best,
        method="jacobian-rank-sampling",
        seed=seed,
        samples=int(samples),
        ranks=tuple(ranks),
        witness=witness,
    )


def is_regular(L, gamma, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND, seed=DEFAULT_SEED):
    """Does gamma have a coadjoint stabilizer of the minimal dimension?"""
    if not isinstance(gamma, LinearForm):
        gamma = LinearForm(L.field, gamma)
    ind = index_of(L, samples, bound, seed).value
    return stabilizer(L, gamma).dim == ind
