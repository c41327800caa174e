"""The two reduction moves, shown on small solvable algebras.

aff1 reduces along its one-dimensional abelian ideal; the upper
triangular part of sl3 needs an abelian-ideal step whose reduced algebra
is itself a Heisenberg case; a Jordan-block action on a five-dimensional
Heisenberg algebra exercises the stabilizer route without a Levi factor.

Run:  python3 demos/reduction_tour.py
"""

from lieshift.construct import abelian_qhat, construct_theorem
from lieshift.fields import QQ
from lieshift.invariants import b_of
from lieshift.liealg import LieAlgebra
from lieshift.presets import preset


def show(name, L, casimirs=None):
    print("== %s  (dim %d, b = %d)" % (name, L.dim, b_of(L)))
    cert = construct_theorem(L, casimirs=casimirs)
    for line in cert.trace:
        print("  ", line)
    print("  generators:")
    for u, why in zip(cert.generators.elements, cert.generators.provenance):
        print("    %-50s  [%s]" % (u.render(), why))
    print("  trdeg %d = b %d" % (cert.trdeg.value, cert.b_target))
    print()


def main():
    aff = preset("aff1").algebra
    hat = abelian_qhat(aff, aff.span_of_indices([1]))
    print(
        "aff1 reduced along span{y}: dim %d over the function field in %s\n"
        % (hat.algebra.dim, ", ".join(hat.h_vars))
    )
    show("aff1", aff)

    show("borel-sl3", preset("borel-sl3").algebra)

    jordan = LieAlgebra(
        QQ,
        ("t", "x1", "x2", "y1", "y2", "z"),
        {
            (0, 1): {1: 1},
            (0, 2): {1: 1, 2: 1},
            (0, 3): {3: -1, 4: -1},
            (0, 4): {4: -1},
            (1, 3): {5: 1},
            (2, 4): {5: 1},
        },
        {
            "central": [5],
            "nilradical": [1, 2, 3, 4, 5],
            "solvable_radical": [0, 1, 2, 3, 4, 5],
        },
    )
    show("jordan-block action on h5", jordan)


if __name__ == "__main__":
    main()
