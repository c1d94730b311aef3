"""The ergodic-distal structure of a commuting action, two ways.

First the largest subgroup on which the whole group acts ergodically,
with a distal action on the quotient: computed as a fixpoint on the dual
side, accumulating finite-orbit characters of successive quotients.

Then the per-generator chain: a weakly decreasing sequence of invariant
dual subspaces, one stage per generator, with generator i certified
ergodic on stage quotient i, every generator quasi-unipotent on the
residual, and residual zero exactly when the group is ergodic.
"""

from ergodec import (Matrix, ergodic_distal_filtration,
                     largest_ergodic_subgroup, toral_action)


def describe(name, generators):
    action = toral_action(generators)
    print(f"{name} (dimension {action.dim})")
    w, report = largest_ergodic_subgroup(action)
    print(f"  largest ergodic subgroup: dual annihilator dimension {w.dim}"
          f" (fixpoint rounds: {report['rounds'] or 'none needed'})")
    chain = ergodic_distal_filtration(action)
    print(f"  filtration dims: {list(chain.dims())}")
    for entry in chain.attributions:
        print(f"    stage {entry['stage']}: generator {entry['generator']} "
              f"ergodic on a quotient of dimension "
              f"{entry['dim_from'] - entry['dim_to']}")
    print(f"  residual dimension {chain.residual.dim}; "
          f"group ergodic: {chain.group_ergodic}")
    print()


def main():
    f = Matrix.from_rows([[0, 1], [1, 1]])
    i2 = Matrix.identity(2)
    describe("hyperbolic", [f])
    describe("shear", [[[1, 1], [0, 1]]])
    describe("block pair", [Matrix.block_diag(f, i2), Matrix.block_diag(i2, f)])
    describe("hyperbolic with an identity block", [Matrix.block_diag(f, i2)])


if __name__ == "__main__":
    main()
