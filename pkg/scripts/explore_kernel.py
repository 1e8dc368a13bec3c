"""Kernel of L_Delta versus the inserted ideal, including non-infrequent inputs.

For polytopes whose nonsimple vertices share a facet the kernel statement is
open; this script prints what happens without asserting anything.
"""
from edgesimple import algebra as alg
from edgesimple.generators import bipyramid, cross, cube, double_cone, pyramid, simplex
from edgesimple.resolution import is_infrequent, standard_resolution


def main() -> None:
    cases = [pyramid(cube(2)), pyramid(cube(3)), pyramid(simplex(3)), double_cone(),
             cross(3), bipyramid(cube(2)), bipyramid(simplex(2))]
    for p in cases:
        R = standard_resolution(p)
        A = alg.build_algebra(R.resolved)
        rows = alg.theorem_ker_check(A, R, explore=True)
        tag = "infrequent" if is_infrequent(p) else "frequent"
        cells = "  ".join(f"k={r.k}: ker={r.dim_kernel} I={r.dim_ideal} {'=' if r.equal else '!='}" for r in rows)
        print(f"{p.label:22s} {tag:10s} h(Sigma)={A.dims}  {cells}")


if __name__ == "__main__":
    main()
