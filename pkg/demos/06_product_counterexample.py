"""Why some chain condition is needed: a product action that is ergodic
as a group while no single element is ergodic.

Index a family of factors by the nonzero lattice points (i, j) and let
the group element (n, m) act on factor (i, j) through a fixed ergodic
base automorphism raised to the power m*i - n*j.  The group acts
ergodically on the product, but the element (i, j) acts on its own
factor with exponent j*i - i*j = 0: the identity.  Every element is
therefore trivial somewhere, hence not ergodic on the product.

The construction escapes the finite-chain world: the subproducts over
indices with i + j at least n descend strictly forever.  This demo
certifies both facts symbolically inside a chosen box.
"""

from ergodec import ProductDemoSpec, product_action_demo


def main():
    bundle = product_action_demo(ProductDemoSpec(box_radius=4))
    print(f"box radius 4: {bundle['points_certified']} nonzero lattice points")
    sample = [p for p in bundle["points"] if p["element"] in ([1, 0], [2, 3], [-4, 4])]
    for point in sample:
        i, j = point["element"]
        print(f"  element ({i:2d},{j:2d}) acts on its own factor with exponent "
              f"{j}*{i} - {i}*{j} = {point['exponent_on_own_factor']}")
    print("descending chain of invariant subproducts:")
    for entry in bundle["chain"]:
        print(f"  level {entry['level']}: {entry['factor_count']} factors remain")
    print(f"strictly descending: {bundle['strictly_descending']}")


if __name__ == "__main__":
    main()
