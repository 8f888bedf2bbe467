"""Derive the four bundled icosahedral presets.

Run from the repository root:

    python demos/derive_presets.py            # rewrite src/projcoh/presets/*.yaml
    python demos/derive_presets.py --check    # only compare with the files on disk

Each tiling is a cut through a 6-dimensional lattice with polyhedral
windows in 3-dimensional internal space.  A window face orthogonal to an
internal direction n produces a singular 4-torus whose stabilizer is
{x in Gamma : x_perp . n = 0}.  For all four tilings every face plane
passes through the internal projection of a lattice point, so all seed
tori go through the origin and only the face orientations matter:

    tiling               lattice   window faces orthogonal to
    danzer               F (D6)    five-fold axes
    ammann-kramer        P (Z^6)   two-fold axes (parallel to mirror planes)
    dual-canonical-d6    F (D6)    two-fold axes (projected Voronoi cell of D6)
    canonical-d6         F (D6)    three- and five-fold axes (projected
                                   Delaunay cells of D6: cross-polytope and half-cube)
"""

import argparse
from pathlib import Path

import yaml

from projcoh.icosahedral import (
    FIVEFOLD_NORMAL,
    THREEFOLD_NORMAL,
    TWOFOLD_NORMAL,
    chart_matrix,
    icosahedral_group,
    plane_stabilizer,
    small_generating_set,
    to_chart,
)

OUT = Path(__file__).resolve().parent.parent / "src" / "projcoh" / "presets"

PRESETS = {
    "danzer": dict(
        lattice="F", planes="5-fold", normals=[FIVEFOLD_NORMAL],
        description="Danzer ABCK tiling",
        source="L. Danzer, Discrete Math. 76 (1989) 1-7; D6 projection with windows "
               "bounded by planes orthogonal to the five-fold axes",
    ),
    "ammann-kramer": dict(
        lattice="P", planes="mirror", normals=[TWOFOLD_NORMAL],
        description="Ammann-Kramer (3D Penrose) tiling",
        source="P. Kramer and R. Neri, Acta Cryst. A40 (1984) 580; window is the "
               "rhombic triacontahedron, the internal projection of the unit 6-cube",
    ),
    "dual-canonical-d6": dict(
        lattice="F", planes="mirror", normals=[TWOFOLD_NORMAL],
        description="dual canonical D6 tiling",
        source="P. Kramer and Z. Papadopolos, in Proc. 5th Int. Conf. on Quasicrystals "
               "(1995); window is the internal projection of the Voronoi cell of D6",
    ),
    "canonical-d6": dict(
        lattice="F", planes="3,5-fold", normals=[THREEFOLD_NORMAL, FIVEFOLD_NORMAL],
        description="canonical D6 tiling",
        source="P. Kramer and Z. Papadopolos (1995); windows are internal projections "
               "of the Delaunay cells of D6 (icosahedron and a five/three-fold polyhedron)",
    ),
}


def preset_document(name, entry, generators_hyper):
    chart = chart_matrix(entry["lattice"])
    gens = [to_chart(g, chart) for g in generators_hyper]
    seeds = []
    for n in entry["normals"]:
        stab = plane_stabilizer(n, entry["lattice"])
        seeds.append({"stabilizer": [list(b) for b in stab.basis], "offset": ["0"] * 6})
    doc = {
        "name": name,
        "description": entry["description"],
        "lattice_type": entry["lattice"],
        "planes": entry["planes"],
        "chart": chart.tolist(),
        "group_order_bound": 1024,
        "symmetry_generators": [g.tolist() for g in gens],
        "seed_tori": seeds,
        "verify": {"primes": [2], "oracle_samples": 8, "oracle_max_denominator": 12},
    }
    header = (
        f"# {entry['description']}\n"
        f"# source: {entry['source']}\n"
        "# chart: columns of `chart` are the lattice basis in hypercubic coordinates;\n"
        "# generators, stabilizers and offsets are all written in that basis.\n"
        "# generated by demos/derive_presets.py\n"
    )
    return header + yaml.safe_dump(doc, sort_keys=False, default_flow_style=None, width=100)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()

    group = icosahedral_group()
    print(f"icosahedral group with inversion: {len(group)} signed permutations")
    gens = small_generating_set(group)

    stale = []
    for name, entry in PRESETS.items():
        text = preset_document(name, entry, gens)
        path = OUT / f"{name}.yaml"
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(name)
        else:
            path.write_text(text)
            print(f"wrote {path}")
    if args.check:
        print("stale presets:", stale or "none")
        raise SystemExit(1 if stale else 0)


if __name__ == "__main__":
    main()
