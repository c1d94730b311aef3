"""An ergodic group none of whose generators is ergodic, and the search
for the ergodic product element the theory promises.

Take the two commuting automorphisms of the 4-torus

    diag(F, I)   and   diag(I, F)

with F the Fibonacci matrix.  Each generator fixes a 2-dimensional dual
plane, so neither is ergodic on its own.  But the only characters fixed
by powers of both generators form the zero subspace, so the group action
is ergodic, and scanning all-positive exponent vectors finds the product
diag(F, F) right away.
"""

from ergodec import (Matrix, element, find_ergodic_exponents,
                     finite_orbit_subspace, is_ergodic_element,
                     is_ergodic_group, toral_action)


def main():
    f = Matrix.from_rows([[0, 1], [1, 1]])
    i2 = Matrix.identity(2)
    action = toral_action([Matrix.block_diag(f, i2), Matrix.block_diag(i2, f)])

    for i, label in ((0, "diag(F, I)"), (1, "diag(I, F)")):
        exps = tuple(1 if j == i else 0 for j in range(2))
        verdict = is_ergodic_element(action, exps)
        print(f"generator {label}: {verdict.kind.value}")

    group = is_ergodic_group(action)
    print(f"group verdict: {group.kind.value} "
          f"(finite-orbit subspace dimension {finite_orbit_subspace(action).dim})")

    exps, verdict = find_ergodic_exponents(action)
    print(f"first ergodic exponent vector: {exps}")
    print(f"its element:")
    for row in element(action, exps).rows:
        print(f"   {list(row)}")
    print(f"element verdict: {verdict.kind.value}, "
          f"certificate {verdict.certificate.kind}")


if __name__ == "__main__":
    main()
